//! Fixed-point models of `G`-manifolds with finite stationary sets.
//!
//! A space enters the calculator only through its stationary points and the
//! isotropy representation at each of them. The constructors here produce
//! those models for real flag manifolds under a diagonal character action,
//! their complex counterparts, real projective spaces under a diagonal
//! subgroup `D ⊆ O(1)^{m+1}`, generalized Dold spaces `P(m, X)` over a base
//! with conjugation, and products and disjoint unions of all of these.

use std::collections::HashSet;
use std::fmt;

use crate::character::{Character, GroupRank};
use crate::error::{Error, Result};
use crate::rep_ring::Monomial;

/// Largest number of stationary points a constructor will materialize.
pub const MAX_POINTS: u128 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FixedPoint {
    pub label: String,
    pub rep: Monomial,
}

/// Stationary points of a closed `G`-manifold with their isotropy
/// representations.
///
/// Invariants: every representation has degree `dimension` and rank `rank`,
/// and labels are unique. Trivial summands are excluded by [`Monomial`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointModel {
    rank: GroupRank,
    dimension: usize,
    points: Vec<FixedPoint>,
}

impl FixedPointModel {
    pub fn new(rank: GroupRank, dimension: usize, points: Vec<FixedPoint>) -> Result<Self> {
        let mut labels = HashSet::with_capacity(points.len());
        for p in &points {
            if p.rep.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank.get(),
                    right: p.rep.rank().get(),
                });
            }
            if p.rep.degree() != dimension {
                return Err(Error::InvalidModel(format!(
                    "point {} has isotropy degree {} but the space has dimension {dimension}",
                    p.label,
                    p.rep.degree()
                )));
            }
            if !labels.insert(p.label.as_str()) {
                return Err(Error::InvalidModel(format!("duplicate label {}", p.label)));
            }
        }
        Ok(FixedPointModel {
            rank,
            dimension,
            points,
        })
    }

    #[inline]
    pub fn rank(&self) -> GroupRank {
        self.rank
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn points(&self) -> &[FixedPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Cartesian product: stationary points are pairs, isotropy
    /// representations multiply.
    pub fn product(&self, other: &FixedPointModel) -> Result<FixedPointModel> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank.get(),
                right: other.rank.get(),
            });
        }
        let count = self.points.len() as u128 * other.points.len() as u128;
        if count > MAX_POINTS {
            return Err(Error::ScaleCap(format!("product has {count} stationary points")));
        }
        let mut points = Vec::with_capacity(count as usize);
        for a in &self.points {
            for b in &other.points {
                points.push(FixedPoint {
                    label: format!("({}, {})", a.label, b.label),
                    rep: a.rep.mul(&b.rep)?,
                });
            }
        }
        Ok(FixedPointModel {
            rank: self.rank,
            dimension: self.dimension + other.dimension,
            points,
        })
    }

    /// Disjoint union of equidimensional models. Labels are prefixed with
    /// `#k:` for the k-th summand (1-based).
    pub fn disjoint_union(summands: &[&FixedPointModel]) -> Result<FixedPointModel> {
        let first = summands
            .first()
            .ok_or_else(|| Error::Arity("disjoint union needs at least one summand".into()))?;
        let mut points = Vec::new();
        for (k, s) in summands.iter().enumerate() {
            if s.rank != first.rank {
                return Err(Error::RankMismatch {
                    left: first.rank.get(),
                    right: s.rank.get(),
                });
            }
            if s.dimension != first.dimension {
                return Err(Error::DimensionMismatch {
                    left: first.dimension,
                    right: s.dimension,
                });
            }
            points.extend(s.points.iter().map(|p| FixedPoint {
                label: format!("#{}:{}", k + 1, p.label),
                rep: p.rep.clone(),
            }));
        }
        Ok(FixedPointModel {
            rank: first.rank,
            dimension: first.dimension,
            points,
        })
    }
}

/// Fixed-point model of the real part `X_R = Fix(σ)` of a space `X` with a
/// conjugation commuting with the `G`-action and `C`-linear isotropy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugationModel {
    real_part: FixedPointModel,
}

impl ConjugationModel {
    pub fn new(real_part: FixedPointModel) -> Self {
        ConjugationModel { real_part }
    }

    pub fn real_part(&self) -> &FixedPointModel {
        &self.real_part
    }

    pub fn into_real_part(self) -> FixedPointModel {
        self.real_part
    }

    pub fn rank(&self) -> GroupRank {
        self.real_part.rank
    }

    pub fn product(&self, other: &ConjugationModel) -> Result<ConjugationModel> {
        Ok(ConjugationModel::new(self.real_part.product(&other.real_part)?))
    }

    pub fn disjoint_union(summands: &[&ConjugationModel]) -> Result<ConjugationModel> {
        let parts: Vec<_> = summands.iter().map(|s| &s.real_part).collect();
        Ok(ConjugationModel::new(FixedPointModel::disjoint_union(&parts)?))
    }
}

/// The one-point space, with `X_R = X`.
pub fn point_space(rank: GroupRank) -> ConjugationModel {
    ConjugationModel::new(FixedPointModel {
        rank,
        dimension: 0,
        points: vec![FixedPoint {
            label: "pt".into(),
            rep: Monomial::one(rank),
        }],
    })
}

/// `S ⊆ Ĝ` (the characters occurring in `U`) and the block sizes
/// `n_1, .., n_r` of the flag manifold `G(n_1, .., n_r)` of `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagSpec {
    rank: GroupRank,
    chars: Vec<Character>,
    parts: Vec<usize>,
}

impl FlagSpec {
    pub fn new(rank: GroupRank, chars: Vec<Character>, parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidFlag("at least one block is required".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidFlag("block sizes must be positive".into()));
        }
        let mut seen = HashSet::new();
        for &c in &chars {
            if c.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank.get(),
                    right: c.rank().get(),
                });
            }
            if !seen.insert(c) {
                return Err(Error::StationarySetNotFinite(c.to_string()));
            }
        }
        let n: usize = parts.iter().sum();
        if n != chars.len() {
            return Err(Error::InvalidFlag(format!(
                "block sizes sum to {n} but {} characters were given",
                chars.len()
            )));
        }
        let mut chars = chars;
        chars.sort();
        Ok(FlagSpec { rank, chars, parts })
    }

    #[inline]
    pub fn rank(&self) -> GroupRank {
        self.rank
    }

    /// `S` in canonical order.
    pub fn chars(&self) -> &[Character] {
        &self.chars
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.chars.len()
    }

    /// `Σ_{i<j} n_i n_j`, the dimension of the real flag manifold.
    pub fn dimension(&self) -> usize {
        let mut total = 0;
        let mut before = 0;
        for &p in &self.parts {
            total += before * p;
            before += p;
        }
        total
    }

    /// Number of stationary points, `n! / (n_1! ⋯ n_r!)`, or `None` on
    /// overflow.
    pub fn fixed_point_count(&self) -> Option<u128> {
        multinomial(&self.parts)
    }
}

/// `(Σ parts)! / ∏ parts_i!` computed as a product of binomials.
pub fn multinomial(parts: &[usize]) -> Option<u128> {
    let mut total: u128 = 1;
    let mut n = 0usize;
    for &p in parts {
        for k in 1..=p {
            n += 1;
            // n / k = C(n, k) / C(n-1, k-1), so each step leaves an integer.
            total = total.checked_mul(n as u128)? / k as u128;
        }
    }
    Some(total)
}

/// A coordinate flag, given by the ordered partition `(α(1), .., α(r))` of
/// `S` with each block in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedPartition {
    blocks: Vec<Vec<Character>>,
}

impl OrderedPartition {
    /// Blocks are sorted internally; block order is kept.
    pub fn new(blocks: Vec<Vec<Character>>) -> Self {
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort();
                b
            })
            .collect();
        OrderedPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<Character>] {
        &self.blocks
    }

    /// Exchanges blocks `i` and `j` (0-based).
    pub fn swap_blocks(&self, i: usize, j: usize) -> OrderedPartition {
        let mut blocks = self.blocks.clone();
        blocks.swap(i, j);
        OrderedPartition { blocks }
    }

    /// Translates every member of every block by `gamma`: `E ↦ E^γ`.
    pub fn translate(&self, gamma: Character) -> Result<OrderedPartition> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&a| a.compose(gamma)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(OrderedPartition::new(blocks))
    }

    /// Canonical label, e.g. `[[[1]],[[2],[1,2]]]`.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (k, c) in block.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Advances `word` to the next permutation in lexicographic order; returns
/// `false` after the last one.
fn next_permutation(word: &mut [usize]) -> bool {
    let Some(i) = word.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = word.iter().rposition(|&x| x > word[i]).expect("pivot has a successor");
    word.swap(i, j);
    word[i + 1..].reverse();
    true
}

/// All coordinate flags, i.e. ordered partitions of `S` with block sizes
/// `parts`.
///
/// Flags are enumerated by their block-assignment words (the block index of
/// each member of `S`, in canonical character order) in lexicographic order.
pub fn flag_fixed_points(spec: &FlagSpec) -> Result<Vec<OrderedPartition>> {
    let count = spec.fixed_point_count().unwrap_or(u128::MAX);
    if count > MAX_POINTS {
        return Err(Error::ScaleCap(format!("flag space has {count} stationary points")));
    }
    let mut word: Vec<usize> = spec
        .parts
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| std::iter::repeat_n(i, p))
        .collect();
    let mut out = Vec::with_capacity(count as usize);
    loop {
        let mut blocks: Vec<Vec<Character>> =
            spec.parts.iter().map(|&p| Vec::with_capacity(p)).collect();
        for (&c, &b) in spec.chars.iter().zip(&word) {
            blocks[b].push(c);
        }
        out.push(OrderedPartition { blocks });
        if !next_permutation(&mut word) {
            break;
        }
    }
    Ok(out)
}

fn check_partition(spec: &FlagSpec, partition: &OrderedPartition) -> Result<()> {
    if partition.blocks.len() != spec.parts.len() {
        return Err(Error::InvalidPartition(format!(
            "{} blocks for {} parts",
            partition.blocks.len(),
            spec.parts.len()
        )));
    }
    for (block, &p) in partition.blocks.iter().zip(&spec.parts) {
        if block.len() != p {
            return Err(Error::InvalidPartition(format!(
                "block of size {} where {p} is required",
                block.len()
            )));
        }
    }
    let mut members: Vec<Character> = partition.blocks.iter().flatten().copied().collect();
    members.sort();
    if members != spec.chars {
        return Err(Error::InvalidPartition(
            "blocks do not partition the character set".into(),
        ));
    }
    Ok(())
}

/// Isotropy representation of the real flag manifold at a coordinate flag:
/// `⊕_{i<j} E_i ⊗ E_j`, one summand `v_{a Δ b}` for every `a ∈ α(i)`,
/// `b ∈ α(j)`.
pub fn real_flag_tangent(spec: &FlagSpec, partition: &OrderedPartition) -> Result<Monomial> {
    check_partition(spec, partition)?;
    let mut chars = Vec::with_capacity(spec.dimension());
    for (i, earlier) in partition.blocks.iter().enumerate() {
        for later in &partition.blocks[i + 1..] {
            for &a in earlier {
                for &b in later {
                    let c = a.compose(b)?;
                    if c.is_trivial() {
                        return Err(Error::InvalidPartition(format!(
                            "character {a} appears in two blocks"
                        )));
                    }
                    chars.push(c);
                }
            }
        }
    }
    Monomial::from_characters(spec.rank, chars)
}

/// The real flag manifold `RG(n_1, .., n_r)` with the action `φ_S^R`.
pub fn real_flag_space(spec: &FlagSpec) -> Result<ConjugationModel> {
    let points = flag_fixed_points(spec)?
        .into_iter()
        .map(|p| {
            Ok(FixedPoint {
                rep: real_flag_tangent(spec, &p)?,
                label: p.label(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConjugationModel::new(FixedPointModel {
        rank: spec.rank,
        dimension: spec.dimension(),
        points,
    }))
}

/// The complex side `X` of a conjugation space, restricted to the stationary
/// points on `X_R`; there `T_x X ≅ T_x X_R ⊕ J T_x X_R` squares the class.
///
/// Stationary points off `X_R` come in `σ`-pairs with isomorphic isotropy and
/// are omitted: they contribute nothing to the invariant.
pub fn complex_from_real(x: &ConjugationModel) -> FixedPointModel {
    let real = &x.real_part;
    FixedPointModel {
        rank: real.rank,
        dimension: 2 * real.dimension,
        points: real
            .points
            .iter()
            .map(|p| FixedPoint {
                label: p.label.clone(),
                rep: p.rep.square(),
            })
            .collect(),
    }
}

/// `RP^m` with `D ⊆ O(1)^{m+1}` acting through the characters
/// `χ_1, .., χ_{m+1}` of `D` (rank `s`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjSpec {
    rank: GroupRank,
    chars: Vec<Character>,
}

impl ProjSpec {
    pub fn new(rank: GroupRank, chars: Vec<Character>) -> Result<Self> {
        if chars.is_empty() {
            return Err(Error::InvalidFlag(
                "projective space needs at least one character".into(),
            ));
        }
        let mut seen = HashSet::new();
        for &c in &chars {
            if c.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank.get(),
                    right: c.rank().get(),
                });
            }
            if !seen.insert(c) {
                return Err(Error::StationarySetNotFinite(c.to_string()));
            }
        }
        Ok(ProjSpec { rank, chars })
    }

    /// Rank `s` of `D`.
    #[inline]
    pub fn rank(&self) -> GroupRank {
        self.rank
    }

    /// `χ_1, .., χ_{m+1}` in the given order.
    pub fn chars(&self) -> &[Character] {
        &self.chars
    }

    /// The dimension `m`.
    pub fn m(&self) -> usize {
        self.chars.len() - 1
    }
}

/// Label of the stationary point `[e_j]` (1-based `j`).
pub fn proj_label(j: usize) -> String {
    format!("[e_{j}]")
}

/// `RP^m` with stationary points `[e_j]` and
/// `T_{[e_j]} RP^m = E_j ⊗ E_j^⊥ ↦ ∏_{i≠j} v_{χ_i Δ χ_j}`.
pub fn proj_space(spec: &ProjSpec) -> Result<FixedPointModel> {
    let points = spec
        .chars
        .iter()
        .enumerate()
        .map(|(j, &cj)| {
            let chars = spec
                .chars
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .map(|(_, &ci)| ci.compose(cj))
                .collect::<Result<Vec<_>>>()?;
            Ok(FixedPoint {
                label: proj_label(j + 1),
                rep: Monomial::from_characters(spec.rank, chars)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    FixedPointModel::new(spec.rank, spec.m(), points)
}

/// Stationary data of the generalized Dold space `P(m, X)` under
/// `D × G` (flattened to rank `s + q`).
///
/// The stationary points are `[e_j, p]` for `p ∈ X_R^G`, and the isotropy
/// representation splits as
/// `T_{[e_j]} RP^m ⊕ T_p X_R ⊕ (E_j ⊗ T_p X_R)`. Each summand is assembled
/// here character by character.
pub fn dold_fixed_data(proj: &ProjSpec, base: &ConjugationModel) -> Result<FixedPointModel> {
    let d_rank = proj.rank;
    let real = base.real_part();
    let g_rank = real.rank;
    let rank = d_rank.product(g_rank)?;
    let count = proj.chars.len() as u128 * real.points.len() as u128;
    if count > MAX_POINTS {
        return Err(Error::ScaleCap(format!("Dold space has {count} stationary points")));
    }
    let d_trivial = Character::trivial(d_rank);
    let g_trivial = Character::trivial(g_rank);
    let mut points = Vec::with_capacity(count as usize);
    for (j, &cj) in proj.chars.iter().enumerate() {
        let mut sphere_part = Vec::with_capacity(proj.m());
        for (i, &ci) in proj.chars.iter().enumerate() {
            if i != j {
                sphere_part.push(Character::embed_product(ci.compose(cj)?, g_trivial)?);
            }
        }
        for p in &real.points {
            let mut chars = sphere_part.clone();
            for y in p.rep.characters() {
                chars.push(Character::embed_product(d_trivial, y)?);
                chars.push(Character::embed_product(cj, y)?);
            }
            points.push(FixedPoint {
                label: format!("[e_{}, {}]", j + 1, p.label),
                rep: Monomial::from_characters(rank, chars)?,
            });
        }
    }
    FixedPointModel::new(rank, proj.m() + 2 * real.dimension, points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank(q: u32) -> GroupRank {
        GroupRank::new(q).unwrap()
    }

    fn ch(q: u32, idx: &[u32]) -> Character {
        Character::from_indices(rank(q), idx).unwrap()
    }

    fn chars(q: u32, list: &[&[u32]]) -> Vec<Character> {
        list.iter().map(|c| ch(q, c)).collect()
    }

    fn mono(q: u32, list: &[&[u32]]) -> Monomial {
        Monomial::from_characters(rank(q), chars(q, list)).unwrap()
    }

    fn flag(q: u32, s: &[&[u32]], parts: &[usize]) -> FlagSpec {
        FlagSpec::new(rank(q), chars(q, s), parts.to_vec()).unwrap()
    }

    #[test]
    fn point_space_is_one_point() {
        let p = point_space(rank(2));
        assert_eq!(p.real_part().len(), 1);
        assert_eq!(p.real_part().dimension(), 0);
        assert!(p.real_part().points()[0].rep.is_one());
        assert_eq!(complex_from_real(&p), *p.real_part());
    }

    #[test]
    fn flag_spec_validation() {
        assert!(FlagSpec::new(rank(2), chars(2, &[&[1], &[1]]), vec![1, 1]).is_err());
        assert!(FlagSpec::new(rank(2), chars(2, &[&[1], &[2]]), vec![1]).is_err());
        assert!(FlagSpec::new(rank(2), chars(2, &[&[1], &[2]]), vec![]).is_err());
        assert!(FlagSpec::new(rank(2), chars(2, &[&[1], &[2]]), vec![2, 0]).is_err());
        assert!(FlagSpec::new(rank(2), chars(2, &[&[], &[2]]), vec![1, 1]).is_ok());
    }

    #[test]
    fn flag_fixed_point_counts() {
        assert_eq!(flag_fixed_points(&flag(2, &[&[1], &[2]], &[1, 1])).unwrap().len(), 2);
        let s6 = flag(3, &[&[1], &[2], &[3], &[1, 2], &[1, 3], &[2, 3]], &[1, 2, 3]);
        let pts = flag_fixed_points(&s6).unwrap();
        assert_eq!(pts.len(), 60);
        let unique: HashSet<_> = pts.iter().collect();
        assert_eq!(unique.len(), 60);
        assert_eq!(flag_fixed_points(&flag(2, &[&[1], &[2], &[1, 2]], &[3])).unwrap().len(), 1);
    }

    #[test]
    fn flag_enumeration_order_is_lexicographic() {
        let pts = flag_fixed_points(&flag(2, &[&[1, 2], &[1], &[2]], &[1, 2])).unwrap();
        let labels: Vec<_> = pts.iter().map(|p| p.label()).collect();
        assert_eq!(
            labels,
            ["[[[1]],[[2],[1,2]]]", "[[[2]],[[1],[1,2]]]", "[[[1,2]],[[1],[2]]]"]
        );
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(&[1, 2, 3]), Some(60));
        assert_eq!(multinomial(&[5]), Some(1));
        assert_eq!(multinomial(&[2, 2]), Some(6));
        assert_eq!(multinomial(&[1; 10]), Some(3_628_800));
    }

    #[test]
    fn tangent_examples() {
        let spec = flag(2, &[&[1], &[2]], &[1, 1]);
        let p = OrderedPartition::new(vec![vec![ch(2, &[1])], vec![ch(2, &[2])]]);
        assert_eq!(real_flag_tangent(&spec, &p).unwrap(), mono(2, &[&[1, 2]]));

        let spec = flag(2, &[&[1], &[2], &[1, 2]], &[1, 2]);
        let p = OrderedPartition::new(vec![vec![ch(2, &[1])], vec![ch(2, &[2]), ch(2, &[1, 2])]]);
        assert_eq!(real_flag_tangent(&spec, &p).unwrap(), mono(2, &[&[1, 2], &[2]]));

        let spec = flag(2, &[&[1], &[2], &[1, 2]], &[3]);
        for p in flag_fixed_points(&spec).unwrap() {
            assert!(real_flag_tangent(&spec, &p).unwrap().is_one());
        }
    }

    #[test]
    fn tangent_rejects_foreign_partition() {
        let spec = flag(2, &[&[1], &[2]], &[1, 1]);
        let shared = OrderedPartition::new(vec![vec![ch(2, &[1])], vec![ch(2, &[1])]]);
        assert!(matches!(
            real_flag_tangent(&spec, &shared),
            Err(Error::InvalidPartition(_))
        ));
        let wrong = OrderedPartition::new(vec![vec![ch(2, &[1]), ch(2, &[2])]]);
        assert!(real_flag_tangent(&spec, &wrong).is_err());
    }

    #[test]
    fn real_flag_space_examples() {
        let x = real_flag_space(&flag(2, &[&[1], &[2]], &[1, 1])).unwrap();
        assert_eq!(x.real_part().len(), 2);
        for p in x.real_part().points() {
            assert_eq!(p.rep, mono(2, &[&[1, 2]]));
        }
        let x = real_flag_space(&flag(2, &[&[1], &[2], &[1, 2]], &[1, 2])).unwrap();
        assert_eq!(x.real_part().len(), 3);
        assert_eq!(x.real_part().dimension(), 2);
        assert!(x.real_part().points().iter().all(|p| p.rep.degree() == 2));
    }

    #[test]
    fn complex_squares_reps() {
        let x = real_flag_space(&flag(2, &[&[1], &[2]], &[1, 1])).unwrap();
        let c = complex_from_real(&x);
        assert_eq!(c.dimension(), 2);
        assert_eq!(c.points()[0].rep.to_string(), "v[1,2]^2");
        assert_eq!(c.points()[0].label, x.real_part().points()[0].label);
    }

    #[test]
    fn proj_examples() {
        let rp1 = proj_space(&ProjSpec::new(rank(2), chars(2, &[&[1], &[2]])).unwrap()).unwrap();
        assert_eq!(rp1.dimension(), 1);
        assert!(rp1.points().iter().all(|p| p.rep == mono(2, &[&[1, 2]])));
        let rp2 = proj_space(&ProjSpec::new(rank(3), chars(3, &[&[1], &[2], &[3]])).unwrap())
            .unwrap();
        let reps: HashSet<_> = rp2.points().iter().map(|p| p.rep.clone()).collect();
        assert_eq!(reps.len(), 3);
        let rp2 =
            proj_space(&ProjSpec::new(rank(2), chars(2, &[&[1], &[2], &[1, 2]])).unwrap()).unwrap();
        assert_eq!(rp2.points()[0].rep, mono(2, &[&[1, 2], &[2]]));
        assert_eq!(rp2.points()[0].label, "[e_1]");
    }

    #[test]
    fn proj_rejects_duplicates() {
        let err = ProjSpec::new(rank(2), chars(2, &[&[1], &[1]])).unwrap_err();
        assert!(err.to_string().contains("stationary set not finite"));
        assert!(ProjSpec::new(rank(2), vec![]).is_err());
    }

    #[test]
    fn dold_over_point_is_projective_space() {
        let proj = ProjSpec::new(rank(2), chars(2, &[&[1], &[2], &[1, 2]])).unwrap();
        let dold = dold_fixed_data(&proj, &point_space(rank(3))).unwrap();
        let rp = proj_space(&proj).unwrap();
        assert_eq!(dold.rank(), rank(5));
        for (d, r) in dold.points().iter().zip(rp.points()) {
            assert_eq!(d.rep, r.rep.embed_d_side(rank(3)).unwrap());
        }
        assert_eq!(dold.points()[0].label, "[e_1, pt]");
    }

    #[test]
    fn dold_example_over_flag() {
        let proj = ProjSpec::new(rank(2), chars(2, &[&[1], &[2]])).unwrap();
        let base = real_flag_space(&flag(2, &[&[1], &[2]], &[1, 1])).unwrap();
        let dold = dold_fixed_data(&proj, &base).unwrap();
        assert_eq!(dold.len(), 4);
        assert_eq!(dold.dimension(), 3);
        let embed = |d: &[u32], g: &[u32]| Character::embed_product(ch(2, d), ch(2, g)).unwrap();
        let expected = Monomial::from_characters(
            rank(4),
            [embed(&[1, 2], &[]), embed(&[], &[1, 2]), embed(&[1], &[1, 2])],
        )
        .unwrap();
        assert_eq!(dold.points()[0].rep, expected);
        assert_eq!(dold.points()[1].rep, expected);
    }

    #[test]
    fn product_and_union() {
        let x = real_flag_space(&flag(2, &[&[1], &[2], &[1, 2]], &[1, 2])).unwrap();
        let pt = point_space(rank(2));
        let xp = x.product(&pt).unwrap();
        assert_eq!(xp.real_part().dimension(), x.real_part().dimension());
        for (a, b) in xp.real_part().points().iter().zip(x.real_part().points()) {
            assert_eq!(a.rep, b.rep);
        }
        let u = ConjugationModel::disjoint_union(&[&x, &x]).unwrap();
        assert_eq!(u.real_part().len(), 6);
        assert!(u.real_part().points()[0].label.starts_with("#1:"));
        let y = real_flag_space(&flag(2, &[&[1], &[2]], &[1, 1])).unwrap();
        assert!(matches!(
            ConjugationModel::disjoint_union(&[&x, &y]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(x.product(&point_space(rank(3))).is_err());
    }

    #[test]
    fn model_invariants_checked() {
        let r = rank(2);
        let bad_degree = FixedPointModel::new(
            r,
            2,
            vec![FixedPoint { label: "a".into(), rep: mono(2, &[&[1]]) }],
        );
        assert!(bad_degree.is_err());
        let dup = FixedPointModel::new(
            r,
            1,
            vec![
                FixedPoint { label: "a".into(), rep: mono(2, &[&[1]]) },
                FixedPoint { label: "a".into(), rep: mono(2, &[&[2]]) },
            ],
        );
        assert!(dup.is_err());
    }

    #[test]
    fn translation_preserves_tangent() {
        // S = all nonempty subsets of [3] except γ = {1,2,3}
        let gamma = ch(3, &[1, 2, 3]);
        let s: Vec<_> = rank(3)
            .characters()
            .filter(|c| !c.is_trivial() && *c != gamma)
            .collect();
        let spec = FlagSpec::new(rank(3), s, vec![1, 2, 3]).unwrap();
        for p in flag_fixed_points(&spec).unwrap() {
            let t = p.translate(gamma).unwrap();
            assert_ne!(t, p);
            assert_eq!(
                real_flag_tangent(&spec, &p).unwrap(),
                real_flag_tangent(&spec, &t).unwrap()
            );
        }
    }

    #[test]
    fn block_swap_preserves_tangent() {
        let spec = flag(3, &[&[1], &[2], &[3], &[1, 2]], &[2, 2]);
        for p in flag_fixed_points(&spec).unwrap() {
            let s = p.swap_blocks(0, 1);
            assert_ne!(s, p);
            assert_eq!(
                real_flag_tangent(&spec, &p).unwrap(),
                real_flag_tangent(&spec, &s).unwrap()
            );
        }
    }
}
