//! The Stong invariant `η` and the vanishing criteria built on it.
//!
//! `η` sends a `G`-manifold with finite stationary set to the sum of the
//! isotropy classes of its stationary points in `R_*(G)`. It is injective on
//! equivariant cobordism classes, so `[M, G] = 0` exactly when `η(M) = 0`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::character::{Character, GroupRank};
use crate::error::{Error, Result};
use crate::rep_ring::{Monomial, RepRingElement};
use crate::spaces::{
    complex_from_real, dold_fixed_data, flag_fixed_points, real_flag_tangent, ConjugationModel,
    FixedPointModel, FlagSpec, OrderedPartition, ProjSpec,
};

pub fn eta(x: &FixedPointModel) -> RepRingElement {
    let mut out = RepRingElement::zero(x.rank());
    for p in x.points() {
        out.toggle(p.rep.clone()).expect("model ranks are uniform");
    }
    out
}

pub fn is_null_cobordant(x: &FixedPointModel) -> bool {
    eta(x).is_zero()
}

/// A matching of stationary points with equal isotropy classes. When the
/// residual is empty the matching certifies `η = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairingWitness {
    pub pairs: Vec<(String, String)>,
    pub residual: Vec<String>,
}

impl PairingWitness {
    pub fn is_complete(&self) -> bool {
        self.residual.is_empty()
    }

    /// Checks the witness against a model: every point is covered exactly
    /// once, paired points share their isotropy class and are distinct, and
    /// no two residual points share a class.
    pub fn verify(&self, x: &FixedPointModel) -> bool {
        let reps: HashMap<&str, &Monomial> =
            x.points().iter().map(|p| (p.label.as_str(), &p.rep)).collect();
        let mut used = HashMap::new();
        let labels = self
            .pairs
            .iter()
            .flat_map(|(a, b)| [a, b])
            .chain(&self.residual);
        for l in labels {
            if !reps.contains_key(l.as_str()) || used.insert(l.as_str(), ()).is_some() {
                return false;
            }
        }
        if used.len() != reps.len() {
            return false;
        }
        let pairs_ok = self
            .pairs
            .iter()
            .all(|(a, b)| a != b && reps[a.as_str()] == reps[b.as_str()]);
        let mut residual_classes = std::collections::HashSet::new();
        let residual_ok = self
            .residual
            .iter()
            .all(|l| residual_classes.insert(reps[l.as_str()]));
        pairs_ok && residual_ok
    }
}

/// Pairs points greedily within each isotropy class in label order. A class
/// of odd size leaves its lowest label in the residual.
pub fn pairing_witness(x: &FixedPointModel) -> PairingWitness {
    let mut classes: BTreeMap<&Monomial, Vec<&str>> = BTreeMap::new();
    for p in x.points() {
        classes.entry(&p.rep).or_default().push(&p.label);
    }
    let mut pairs = Vec::new();
    let mut residual = Vec::new();
    for labels in classes.values_mut() {
        labels.sort_unstable();
        let rest = if labels.len() % 2 == 1 {
            residual.push(labels[0].to_string());
            &labels[1..]
        } else {
            &labels[..]
        };
        pairs.extend(
            rest.chunks_exact(2)
                .map(|c| (c[0].to_string(), c[1].to_string())),
        );
    }
    pairs.sort();
    residual.sort();
    PairingWitness { pairs, residual }
}

/// `η(P(m, X))` expanded as a polynomial:
/// `Σ_p Σ_j ∏_{i≠j} v_{χ_i ⊗ χ_j} · f_p(y_β) · f_p(χ_j ⊗ y_β)` with
/// `f_p = [T_p X_R]`.
///
/// Computed purely with ring operations, independently of the summand-wise
/// assembly in [`dold_fixed_data`].
pub fn dold_eta_formula(proj: &ProjSpec, base: &ConjugationModel) -> Result<RepRingElement> {
    let real = base.real_part();
    let (d_rank, g_rank) = (proj.rank(), real.rank());
    let rank = d_rank.product(g_rank)?;
    let mut total = RepRingElement::zero(rank);
    for (j, &cj) in proj.chars().iter().enumerate() {
        let others = proj
            .chars()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, &ci)| ci.compose(cj))
            .collect::<Result<Vec<_>>>()?;
        let sphere = RepRingElement::from(
            Monomial::from_characters(d_rank, others)?.embed_d_side(g_rank)?,
        );
        for p in real.points() {
            let untwisted = RepRingElement::from(p.rep.embed_g_side(d_rank)?);
            let twisted = RepRingElement::from(p.rep.twist(cj)?);
            total = total.add(&sphere.mul(&untwisted)?.mul(&twisted)?)?;
        }
    }
    Ok(total)
}

/// Both sides of `[X, G] = 0 ⟺ [P(m, X), D × G] = 0`, computed
/// independently.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub base_dimension: usize,
    /// The equivalence requires a positive-dimensional base: over a single
    /// point `P(m, pt) = RP^m` may bound while the point does not.
    pub applicable: bool,
    pub complex_null: bool,
    pub dold_null: bool,
    pub equivalent: bool,
    /// `η` of the assembled Dold data equals the expanded formula.
    pub formula_agrees: bool,
    pub holds: bool,
    pub complex_witness: PairingWitness,
    pub dold_witness: PairingWitness,
}

pub fn check_theorem_main(proj: &ProjSpec, base: &ConjugationModel) -> Result<TheoremReport> {
    let complex = complex_from_real(base);
    let dold = dold_fixed_data(proj, base)?;
    let dold_eta = eta(&dold);
    let formula = dold_eta_formula(proj, base)?;
    let complex_null = is_null_cobordant(&complex);
    let dold_null = dold_eta.is_zero();
    let base_dimension = base.real_part().dimension();
    let applicable = base_dimension > 0;
    let equivalent = complex_null == dold_null;
    let formula_agrees = dold_eta == formula;
    Ok(TheoremReport {
        base_dimension,
        applicable,
        complex_null,
        dold_null,
        equivalent,
        formula_agrees,
        holds: formula_agrees && (equivalent || !applicable),
        complex_witness: pairing_witness(&complex),
        dold_witness: pairing_witness(&dold),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// Parity of `n! / (n_1! ⋯ n_r!)`, the Euler characteristic of the real flag
/// manifold: odd exactly when adding the `n_i` in binary produces no carry,
/// i.e. the binary digit sums add up.
pub fn euler_parity(parts: &[usize]) -> Parity {
    let n: usize = parts.iter().sum();
    let digit_sum: u32 = parts.iter().map(|p| p.count_ones()).sum();
    if n.count_ones() == digit_sum {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// Decides `[RP^m, D] ≠ 0` from the characters alone.
///
/// For `m ≥ 2` this holds exactly when some difference `χ_k ⊗ χ_i` (`i ≠ k`)
/// is not of the form `χ_l ⊗ χ_j` for any `l` and any `j ∉ {i, k}`. The
/// degenerate cases are handled directly: `RP^0` is a point, and the two
/// stationary points of `RP^1` always carry the same class `v_{χ_1 ⊗ χ_2}`.
pub fn rp_nonvanishing_criterion(spec: &ProjSpec) -> bool {
    let chars: Vec<u32> = spec.chars().iter().map(|c| c.bits()).collect();
    let n = chars.len();
    match n {
        1 => return true,
        2 => return false,
        _ => {}
    }
    (0..n).any(|i| {
        (0..n).filter(|&k| k != i).any(|k| {
            let diff = chars[k] ^ chars[i];
            (0..n)
                .filter(|&j| j != i && j != k)
                .all(|j| chars.iter().all(|&cl| cl ^ chars[j] != diff))
        })
    })
}

/// Outcome of the translation argument for a flag manifold whose character
/// set omits exactly one nonempty subset `γ` (and the trivial character).
#[derive(Debug, Clone, Serialize)]
pub struct TranslationFamilyReport {
    pub q: u8,
    pub gamma: Vec<u32>,
    pub parts: Vec<usize>,
    pub points: usize,
    pub eta: String,
    pub null: bool,
    pub first_part_odd: bool,
    /// `E ↦ E^γ` moves every stationary flag.
    pub translation_fixed_point_free: bool,
    /// `T_E X_R ≅ T_{E^γ} X_R` at every stationary flag.
    pub translation_preserves_reps: bool,
    /// The orbits `{E, E^γ}` by label.
    pub witness: PairingWitness,
    /// When the first block has odd size the space must bound.
    pub holds: bool,
}

/// Builds `S = Ĝ ∖ {y_∅, y_γ}` and the real flag manifold with block sizes
/// `parts` (which must sum to `2^q − 2`), decides vanishing, and checks the
/// translation pairing `E ↔ E^γ`.
pub fn translation_family(
    rank: GroupRank,
    gamma: Character,
    parts: &[usize],
) -> Result<TranslationFamilyReport> {
    if gamma.rank() != rank {
        return Err(Error::RankMismatch {
            left: rank.get(),
            right: gamma.rank().get(),
        });
    }
    if gamma.is_trivial() {
        return Err(Error::Arity("gamma must be a nonempty subset".into()));
    }
    let n: usize = parts.iter().sum();
    let expected = (rank.order() as usize).saturating_sub(2);
    if n != expected {
        return Err(Error::Arity(format!(
            "block sizes sum to {n}, expected 2^{} - 2 = {expected}",
            rank.get()
        )));
    }
    let chars: Vec<Character> = rank
        .characters()
        .filter(|c| !c.is_trivial() && *c != gamma)
        .collect();
    let spec = FlagSpec::new(rank, chars, parts.to_vec())?;
    let flags = flag_fixed_points(&spec)?;
    let mut reps: HashMap<&OrderedPartition, Monomial> = HashMap::with_capacity(flags.len());
    let mut eta = RepRingElement::zero(rank);
    for f in &flags {
        let rep = real_flag_tangent(&spec, f)?;
        eta.toggle(rep.clone())?;
        reps.insert(f, rep);
    }
    let mut fixed_point_free = true;
    let mut preserves = true;
    let mut seen = std::collections::HashSet::new();
    let mut pairs = Vec::new();
    let mut residual = Vec::new();
    for f in &flags {
        let image = f.translate(gamma)?;
        let Some(image_rep) = reps.get(&image) else {
            return Err(Error::InvalidPartition(format!(
                "translate of {f} is not a stationary flag"
            )));
        };
        if image == *f {
            fixed_point_free = false;
            residual.push(f.label());
            continue;
        }
        if *image_rep != reps[f] {
            preserves = false;
        }
        if seen.insert(f.clone()) {
            seen.insert(image.clone());
            pairs.push((f.label(), image.label()));
        }
    }
    let first_part_odd = parts.first().is_some_and(|p| p % 2 == 1);
    let null = eta.is_zero();
    Ok(TranslationFamilyReport {
        q: rank.get(),
        gamma: gamma.indices(),
        parts: parts.to_vec(),
        points: flags.len(),
        eta: eta.to_string(),
        null,
        first_part_odd,
        translation_fixed_point_free: fixed_point_free,
        translation_preserves_reps: preserves,
        witness: PairingWitness { pairs, residual },
        holds: !first_part_odd || (null && fixed_point_free && preserves),
    })
}

/// Outcome of exchanging two blocks of equal size on the stationary flags.
#[derive(Debug, Clone, Serialize)]
pub struct BlockSwapReport {
    pub blocks: (usize, usize),
    pub fixed_point_free: bool,
    pub preserves_reps: bool,
    pub null: bool,
    pub witness: PairingWitness,
}

/// Checks that swapping blocks `i` and `j` (0-based, equal sizes) is a
/// fixed-point-free involution on the stationary flags preserving isotropy.
pub fn block_swap_involution(spec: &FlagSpec, i: usize, j: usize) -> Result<BlockSwapReport> {
    let parts = spec.parts();
    if i == j || i >= parts.len() || j >= parts.len() || parts[i] != parts[j] {
        return Err(Error::Arity(format!(
            "blocks {i} and {j} are not two distinct blocks of equal size"
        )));
    }
    let flags = flag_fixed_points(spec)?;
    let mut reps = HashMap::with_capacity(flags.len());
    let mut eta = RepRingElement::zero(spec.rank());
    for f in &flags {
        let rep = real_flag_tangent(spec, f)?;
        eta.toggle(rep.clone())?;
        reps.insert(f.clone(), rep);
    }
    let mut fixed_point_free = true;
    let mut preserves = true;
    let mut seen = std::collections::HashSet::new();
    let mut pairs = Vec::new();
    let mut residual = Vec::new();
    for f in &flags {
        let image = f.swap_blocks(i, j);
        if image == *f {
            fixed_point_free = false;
            residual.push(f.label());
            continue;
        }
        match reps.get(&image) {
            Some(rep) if *rep == reps[f] => {}
            _ => preserves = false,
        }
        if seen.insert(f.clone()) {
            seen.insert(image.clone());
            pairs.push((f.label(), image.label()));
        }
    }
    Ok(BlockSwapReport {
        blocks: (i, j),
        fixed_point_free,
        preserves_reps: preserves,
        null: eta.is_zero(),
        witness: PairingWitness { pairs, residual },
    })
}

/// Machine-readable result of a vanishing decision.
#[derive(Debug, Clone, Serialize)]
pub struct NullReport {
    pub eta: String,
    pub null: bool,
    pub points: usize,
    pub dimension: usize,
    pub witness: PairingWitness,
    pub checks: BTreeMap<String, bool>,
}

impl NullReport {
    pub fn new(x: &FixedPointModel) -> Self {
        let eta = eta(x);
        let witness = pairing_witness(x);
        let mut checks = BTreeMap::new();
        checks.insert("witness_valid".to_string(), witness.verify(x));
        checks.insert(
            "witness_matches_eta".to_string(),
            witness.is_complete() == eta.is_zero(),
        );
        NullReport {
            eta: eta.to_string(),
            null: eta.is_zero(),
            points: x.len(),
            dimension: x.dimension(),
            witness,
            checks,
        }
    }
}
