//! Brute-force verifiers that recompute stationary flags and isotropy
//! characters from the explicit diagonal sign action.
//!
//! Nothing here reuses the combinatorial shortcuts of [`crate::spaces`]: the
//! only shared semantics is [`Character::eval`]. Every oracle is capped to
//! desk-scale inputs and refuses anything larger.

use crate::character::{Character, GroupElement, GroupRank, Sign};
use crate::cobordism::{dold_eta_formula, eta};
use crate::error::{Error, Result};
use crate::rep_ring::{Monomial, RepRingElement};
use crate::spaces::{dold_fixed_data, ConjugationModel, FixedPointModel, FlagSpec, OrderedPartition, ProjSpec};

pub const MAX_FLAG_RANK: u8 = 3;
pub const MAX_FLAG_N: usize = 6;
pub const MAX_PROJ_RANK: u8 = 3;
pub const MAX_PROJ_M: usize = 6;
pub const MAX_SUBSPACE_N: usize = 5;

fn flag_cap(spec: &FlagSpec) -> Result<()> {
    if spec.rank().get() > MAX_FLAG_RANK || spec.n() > MAX_FLAG_N {
        return Err(Error::ScaleCap(format!(
            "flag oracle limited to q <= {MAX_FLAG_RANK}, n <= {MAX_FLAG_N} (got q = {}, n = {})",
            spec.rank(),
            spec.n()
        )));
    }
    Ok(())
}

/// Recovers the character of a line from the signs by which the generators
/// `t_1, .., t_q` act on it.
pub fn character_from_signs(rank: GroupRank, signs: &[Sign]) -> Result<Character> {
    if signs.len() != rank.get() as usize {
        return Err(Error::Arity(format!(
            "{} signs for rank {rank}",
            signs.len()
        )));
    }
    let bits = signs
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_minus())
        .fold(0u32, |acc, (k, _)| acc | 1 << k);
    Character::from_bits(rank, bits)
}

/// Sign of `t` on `e_a ⊗ e_b`.
fn tensor_sign(a: Character, b: Character, t: GroupElement) -> Result<Sign> {
    Ok(a.eval(t)? * b.eval(t)?)
}

/// Character of the line `e_a ⊗ e_b`, reconstructed from generator signs and
/// then checked against every group element.
fn tensor_line_character(rank: GroupRank, a: Character, b: Character) -> Result<Character> {
    let signs = rank
        .generators()
        .map(|t| tensor_sign(a, b, t))
        .collect::<Result<Vec<_>>>()?;
    let c = character_from_signs(rank, &signs)?;
    for t in rank.elements() {
        if c.eval(t)? != tensor_sign(a, b, t)? {
            return Err(Error::InvalidModel(format!(
                "sign action on e_{a} ⊗ e_{b} is not a character"
            )));
        }
    }
    Ok(c)
}

/// Whether the coordinate subspace spanned by `block` is carried into itself
/// by `t`, checked on explicit coordinate vectors of `R^S`.
fn block_is_stable(all: &[Character], block: &[Character], t: GroupElement) -> Result<bool> {
    for &a in block {
        // t·e_a as a coordinate vector over the basis indexed by S.
        let image: Vec<i8> = all
            .iter()
            .map(|&c| {
                if c == a {
                    Ok(if a.eval(t)?.is_minus() { -1 } else { 1 })
                } else {
                    Ok(0)
                }
            })
            .collect::<Result<_>>()?;
        let inside = all
            .iter()
            .zip(&image)
            .all(|(c, &x)| x == 0 || block.contains(c));
        if !inside {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Stationary coordinate flags found by trying every assignment of the
/// members of `S` to blocks and testing stability under each generator.
pub fn oracle_flag_fixed_points(spec: &FlagSpec) -> Result<Vec<OrderedPartition>> {
    flag_cap(spec)?;
    let members = spec.chars();
    let r = spec.parts().len();
    let n = members.len();
    let total = r.pow(n as u32);
    let mut out = Vec::new();
    'assign: for code in 0..total {
        let mut blocks = vec![Vec::new(); r];
        let mut rest = code;
        for &c in members {
            blocks[rest % r].push(c);
            rest /= r;
        }
        if blocks.iter().zip(spec.parts()).any(|(b, &p)| b.len() != p) {
            continue;
        }
        for t in spec.rank().generators() {
            for b in &blocks {
                if !block_is_stable(members, b, t)? {
                    continue 'assign;
                }
            }
        }
        out.push(OrderedPartition::new(blocks));
    }
    out.sort();
    Ok(out)
}

/// Isotropy representation at a coordinate flag, decomposing each
/// `E_i ⊗ E_j` (`i < j`) on the basis `e_a ⊗ e_b`.
pub fn oracle_tangent_rep(spec: &FlagSpec, partition: &OrderedPartition) -> Result<Monomial> {
    flag_cap(spec)?;
    let rank = spec.rank();
    let blocks = partition.blocks();
    let mut lines = Vec::new();
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            for &a in &blocks[i] {
                for &b in &blocks[j] {
                    lines.push(tensor_line_character(rank, a, b)?);
                }
            }
        }
    }
    Monomial::from_characters(rank, lines)
}

/// Isotropy representation of `RP^m` at `[e_j]` (1-based), decomposing
/// `E_j ⊗ E_j^⊥` on the basis `e_i ⊗ e_j`, `i ≠ j`.
pub fn oracle_proj_rep(spec: &ProjSpec, j: usize) -> Result<Monomial> {
    if spec.rank().get() > MAX_PROJ_RANK || spec.m() > MAX_PROJ_M {
        return Err(Error::ScaleCap(format!(
            "projective oracle limited to s <= {MAX_PROJ_RANK}, m <= {MAX_PROJ_M}"
        )));
    }
    let chars = spec.chars();
    if j == 0 || j > chars.len() {
        return Err(Error::Arity(format!("no stationary point [e_{j}]")));
    }
    let cj = chars[j - 1];
    let lines = chars
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != j - 1)
        .map(|(_, &ci)| tensor_line_character(spec.rank(), ci, cj))
        .collect::<Result<Vec<_>>>()?;
    Monomial::from_characters(spec.rank(), lines)
}

/// Compares `η` of assembled Dold data with an independently expanded
/// formula.
pub fn dold_paths_agree(assembled: &FixedPointModel, formula: &RepRingElement) -> bool {
    eta(assembled) == *formula
}

/// `η(dold_fixed_data(proj, base)) = dold_eta_formula(proj, base)`.
pub fn oracle_dold_consistency(proj: &ProjSpec, base: &ConjugationModel) -> Result<bool> {
    let assembled = dold_fixed_data(proj, base)?;
    let formula = dold_eta_formula(proj, base)?;
    Ok(dold_paths_agree(&assembled, &formula))
}

/// Negative control: returns a copy of assembled Dold data in which one
/// twisted factor `χ_j ⊗ y` at the first point that has one is replaced by
/// the untwisted `y`. `None` when no point carries a twisted factor.
pub fn corrupt_twist_factor(
    assembled: &FixedPointModel,
    d_rank: GroupRank,
) -> Result<Option<FixedPointModel>> {
    let mut points = assembled.points().to_vec();
    for point in points.iter_mut() {
        let mut twisted = None;
        for (c, _) in point.rep.powers() {
            let (d, g) = c.split_product(d_rank)?;
            if !d.is_trivial() && !g.is_trivial() {
                twisted = Some((c, g));
                break;
            }
        }
        let Some((twisted, g)) = twisted else {
            continue;
        };
        let plain = Character::embed_product(Character::trivial(d_rank), g)?;
        let mut powers: Vec<(Character, u32)> = point.rep.powers().collect();
        for (c, k) in powers.iter_mut() {
            if *c == twisted {
                *k -= 1;
            }
        }
        powers.push((plain, 1));
        point.rep = Monomial::from_powers(assembled.rank(), powers)?;
        return Ok(Some(FixedPointModel::new(
            assembled.rank(),
            assembled.dimension(),
            points,
        )?));
    }
    Ok(None)
}

/// A subspace of `F_3^n` in reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F3Subspace {
    pub rows: Vec<Vec<u8>>,
}

impl F3Subspace {
    fn pivot(row: &[u8]) -> usize {
        row.iter().position(|&x| x != 0).expect("RREF rows are nonzero")
    }

    fn contains(&self, v: &[u8]) -> bool {
        let mut v = v.to_vec();
        for row in &self.rows {
            let p = Self::pivot(row);
            let coef = v[p];
            if coef != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = (*x + 3 - coef * r % 3) % 3;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// Spanned by standard basis vectors.
    pub fn is_coordinate(&self) -> bool {
        self.rows
            .iter()
            .all(|row| row.iter().filter(|&&x| x != 0).count() == 1)
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All `dim`-dimensional subspaces of `F_3^n` (one coordinate per entry of
/// `chars`) that are invariant under the diagonal action `t·e_a = y_a(t) e_a`.
///
/// Over any field of characteristic other than two the invariant subspaces
/// for pairwise distinct characters are exactly the coordinate subspaces;
/// enumerating over `F_3` checks that claim by exhaustion.
pub fn oracle_invariant_subspaces(
    rank: GroupRank,
    chars: &[Character],
    dim: usize,
) -> Result<Vec<F3Subspace>> {
    let n = chars.len();
    if n > MAX_SUBSPACE_N || rank.get() > MAX_FLAG_RANK {
        return Err(Error::ScaleCap(format!(
            "subspace oracle limited to n <= {MAX_SUBSPACE_N}, q <= {MAX_FLAG_RANK}"
        )));
    }
    if dim > n {
        return Ok(Vec::new());
    }
    // Diagonal matrices of the generators, entries in F_3.
    let actions: Vec<Vec<u8>> = rank
        .generators()
        .map(|t| {
            chars
                .iter()
                .map(|c| Ok(if c.eval(t)?.is_minus() { 2 } else { 1 }))
                .collect::<Result<Vec<u8>>>()
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for pivots in combinations(n, dim) {
        // Free entries: (row, col) with col > pivot(row) and col not a pivot.
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| {
                let pivots = &pivots;
                (p + 1..n)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        for code in 0..3usize.pow(free.len() as u32) {
            let mut rows = vec![vec![0u8; n]; dim];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = 1;
            }
            let mut rest = code;
            for &(r, c) in &free {
                rows[r][c] = (rest % 3) as u8;
                rest /= 3;
            }
            let w = F3Subspace { rows };
            let invariant = actions.iter().all(|g| {
                w.rows.iter().all(|row| {
                    let image: Vec<u8> = row.iter().zip(g).map(|(&x, &s)| x * s % 3).collect();
                    w.contains(&image)
                })
            });
            if invariant {
                out.push(w);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{flag_fixed_points, point_space, proj_space, real_flag_space};

    fn rank(q: u32) -> GroupRank {
        GroupRank::new(q).unwrap()
    }

    fn ch(q: u32, idx: &[u32]) -> Character {
        Character::from_indices(rank(q), idx).unwrap()
    }

    fn chars(q: u32, list: &[&[u32]]) -> Vec<Character> {
        list.iter().map(|c| ch(q, c)).collect()
    }

    #[test]
    fn sign_reconstruction_examples() {
        let c = character_from_signs(rank(2), &[Sign::Minus, Sign::Minus]).unwrap();
        assert_eq!(c, ch(2, &[1, 2]));
        assert!(character_from_signs(rank(2), &[Sign::Minus]).is_err());
    }

    #[test]
    fn sign_reconstruction_is_total() {
        // Every ±1 assignment on generators extends to a unique character.
        let r = rank(3);
        for code in 0..8u32 {
            let signs: Vec<_> = (0..3)
                .map(|k| if code >> k & 1 == 1 { Sign::Minus } else { Sign::Plus })
                .collect();
            let c = character_from_signs(r, &signs).unwrap();
            let matches: Vec<_> = r
                .characters()
                .filter(|y| r.generators().zip(&signs).all(|(t, s)| y.eval(t).unwrap() == *s))
                .collect();
            assert_eq!(matches, vec![c]);
        }
    }

    #[test]
    fn flag_oracle_examples() {
        let spec = FlagSpec::new(rank(2), chars(2, &[&[1], &[2]]), vec![1, 1]).unwrap();
        let mut fast = flag_fixed_points(&spec).unwrap();
        fast.sort();
        assert_eq!(oracle_flag_fixed_points(&spec).unwrap(), fast);

        let spec = FlagSpec::new(
            rank(3),
            chars(3, &[&[1], &[2], &[3], &[1, 2], &[1, 3], &[2, 3]]),
            vec![1, 2, 3],
        )
        .unwrap();
        assert_eq!(oracle_flag_fixed_points(&spec).unwrap().len(), 60);

        let spec = FlagSpec::new(rank(2), chars(2, &[&[1], &[2], &[]]), vec![3]).unwrap();
        assert_eq!(oracle_flag_fixed_points(&spec).unwrap().len(), 1);
    }

    #[test]
    fn flag_oracle_scale_cap() {
        let big = FlagSpec::new(rank(4), chars(4, &[&[1], &[2]]), vec![1, 1]).unwrap();
        assert!(matches!(oracle_flag_fixed_points(&big), Err(Error::ScaleCap(_))));
    }

    #[test]
    fn tangent_oracle_examples() {
        let spec = FlagSpec::new(rank(2), chars(2, &[&[1], &[2]]), vec![1, 1]).unwrap();
        let p = OrderedPartition::new(vec![vec![ch(2, &[1])], vec![ch(2, &[2])]]);
        let m = oracle_tangent_rep(&spec, &p).unwrap();
        assert_eq!(m.to_string(), "v[1,2]");

        let spec = FlagSpec::new(rank(2), chars(2, &[&[1], &[2]]), vec![2]).unwrap();
        let p = OrderedPartition::new(vec![chars(2, &[&[1], &[2]])]);
        assert!(oracle_tangent_rep(&spec, &p).unwrap().is_one());
    }

    #[test]
    fn proj_oracle_examples() {
        let spec = ProjSpec::new(rank(2), chars(2, &[&[1], &[2]])).unwrap();
        assert_eq!(oracle_proj_rep(&spec, 1).unwrap().to_string(), "v[1,2]");
        let spec = ProjSpec::new(rank(3), chars(3, &[&[1], &[2], &[3]])).unwrap();
        assert_eq!(oracle_proj_rep(&spec, 2).unwrap().to_string(), "v[1,2]*v[2,3]");
        assert!(oracle_proj_rep(&spec, 4).is_err());
        let fast = proj_space(&spec).unwrap();
        for j in 1..=3 {
            assert_eq!(oracle_proj_rep(&spec, j).unwrap(), fast.points()[j - 1].rep);
        }
    }

    #[test]
    fn proj_oracle_swap_symmetry() {
        let spec = ProjSpec::new(rank(3), chars(3, &[&[1], &[2, 3], &[3], &[1, 2]])).unwrap();
        let mut swapped = spec.chars().to_vec();
        swapped.swap(0, 2);
        let swapped = ProjSpec::new(rank(3), swapped).unwrap();
        assert_eq!(oracle_proj_rep(&spec, 1).unwrap(), oracle_proj_rep(&swapped, 3).unwrap());
    }

    #[test]
    fn dold_consistency_and_negative_control() {
        let proj = ProjSpec::new(rank(2), chars(2, &[&[1], &[2], &[1, 2]])).unwrap();
        assert!(oracle_dold_consistency(&proj, &point_space(rank(2))).unwrap());
        let base = real_flag_space(
            &FlagSpec::new(rank(2), chars(2, &[&[1], &[2], &[1, 2]]), vec![1, 2]).unwrap(),
        )
        .unwrap();
        assert!(oracle_dold_consistency(&proj, &base).unwrap());

        let assembled = dold_fixed_data(&proj, &base).unwrap();
        let formula = dold_eta_formula(&proj, &base).unwrap();
        let corrupted = corrupt_twist_factor(&assembled, rank(2)).unwrap().unwrap();
        assert_ne!(corrupted.points()[0].rep, assembled.points()[0].rep);
        assert!(dold_paths_agree(&assembled, &formula));
        assert!(!dold_paths_agree(&corrupted, &formula));
    }

    #[test]
    fn invariant_subspaces_are_coordinate_for_distinct_characters() {
        let cs = chars(3, &[&[1], &[2], &[1, 2], &[3]]);
        for dim in 0..=4 {
            let subs = oracle_invariant_subspaces(rank(3), &cs, dim).unwrap();
            assert!(subs.iter().all(F3Subspace::is_coordinate));
            let binom = [1, 4, 6, 4, 1][dim];
            assert_eq!(subs.len(), binom);
        }
    }

    #[test]
    fn repeated_character_gives_non_coordinate_subspaces() {
        let cs = chars(2, &[&[1], &[1], &[2]]);
        let lines = oracle_invariant_subspaces(rank(2), &cs, 1).unwrap();
        // the 4 lines of the doubled eigenspace plus e_3
        assert_eq!(lines.len(), 5);
        assert!(lines.iter().any(|w| !w.is_coordinate()));
    }
}
