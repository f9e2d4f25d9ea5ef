//! Randomized and exhaustive verification suites.
//!
//! Each suite returns a [`SuiteReport`]; the command-line `check` subcommand
//! and the acceptance tests drive the same functions. Randomized suites are
//! reproducible from their seed.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::ast::{ProjAst, Space, SpaceAst};
use crate::character::{Character, GroupRank};
use crate::cobordism::{
    block_swap_involution, check_theorem_main, eta, euler_parity, is_null_cobordant,
    rp_nonvanishing_criterion, translation_family, Parity,
};
use crate::error::{Error, Result};
use crate::oracle;
use crate::spaces::{
    complex_from_real, dold_fixed_data, flag_fixed_points, proj_space, real_flag_space,
    real_flag_tangent, ConjugationModel, FlagSpec, ProjSpec,
};

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const LEMMA_CASES: usize = 200;
pub const THEOREM_CASES: usize = 200;
pub const DOLD_ORACLE_CASES: usize = 60;

/// Largest rank and `|S|` used for generated flags.
pub const FLAG_MAX_Q: u32 = 3;
pub const FLAG_MAX_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    TheoremMain,
    LemmaSquare,
    RpCriterion,
    Euler,
    FlagFamilies,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::TheoremMain,
        Suite::LemmaSquare,
        Suite::RpCriterion,
        Suite::Euler,
        Suite::FlagFamilies,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TheoremMain => "theorem-main",
            Suite::LemmaSquare => "lemma-square",
            Suite::RpCriterion => "rp-criterion",
            Suite::Euler => "euler",
            Suite::FlagFamilies => "example-4-1",
            Suite::Oracle => "oracle",
        }
    }

    pub fn run(self, seed: u64) -> Result<SuiteReport> {
        match self {
            Suite::TheoremMain => theorem_main_suite(seed, THEOREM_CASES),
            Suite::LemmaSquare => lemma_square_suite(seed, LEMMA_CASES),
            Suite::RpCriterion => rp_criterion_suite(),
            Suite::Euler => euler_suite(),
            Suite::FlagFamilies => flag_family_suite(),
            Suite::Oracle => oracle_suite(seed),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::Parse(format!("unknown suite `{s}` (expected one of {})", names.join(", ")))
            })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub cases: usize,
    pub failures: Vec<Value>,
    pub details: Value,
}

impl SuiteReport {
    fn new(suite: &str, cases: usize, failures: Vec<Value>, details: Value) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            passed: failures.is_empty(),
            cases,
            failures,
            details,
        }
    }
}

fn rank(q: u32) -> GroupRank {
    GroupRank::new(q).expect("suite ranks are small")
}

fn indices(chars: &[Character]) -> Vec<Vec<u32>> {
    chars.iter().map(|c| c.indices()).collect()
}

/// All compositions of `n` (ordered tuples of positive integers summing to
/// `n`), in a fixed order.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    (0..1u64 << (n - 1))
        .map(|cuts| {
            let mut parts = Vec::new();
            let mut len = 1;
            for k in 0..n - 1 {
                if cuts >> k & 1 == 1 {
                    parts.push(len);
                    len = 1;
                } else {
                    len += 1;
                }
            }
            parts.push(len);
            parts
        })
        .collect()
}

/// Every flag specification with `q <= max_q` and `1 <= |S| <= max_n`: all
/// character subsets `S` (the trivial character included) and all block
/// compositions.
pub fn flag_universe(max_q: u32, max_n: usize) -> impl Iterator<Item = FlagSpec> {
    (0..=max_q).flat_map(move |q| {
        let r = rank(q);
        let all: Vec<Character> = r.characters().collect();
        (1u64..1 << all.len()).flat_map(move |mask| {
            let s: Vec<Character> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &c)| c)
                .collect();
            let n = s.len();
            let comps = if n <= max_n { compositions(n) } else { Vec::new() };
            comps
                .into_iter()
                .map(move |parts| FlagSpec::new(r, s.clone(), parts).expect("universe specs are valid"))
        })
    })
}

/// Every projective specification with `s <= max_s`, `m <= max_m`, one per
/// character subset in canonical order.
pub fn proj_universe(max_s: u32, max_m: usize) -> impl Iterator<Item = ProjSpec> {
    (0..=max_s).flat_map(move |s| {
        let r = rank(s);
        let all: Vec<Character> = r.characters().collect();
        (1u64..1 << all.len()).filter_map(move |mask| {
            let chars: Vec<Character> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &c)| c)
                .collect();
            (chars.len() <= max_m + 1).then(|| ProjSpec::new(r, chars).expect("distinct"))
        })
    })
}

fn random_composition<R: Rng>(rng: &mut R, n: usize, min_blocks: usize) -> Vec<usize> {
    loop {
        let mut parts = Vec::new();
        let mut len = 1;
        for _ in 1..n {
            if rng.gen_bool(0.5) {
                parts.push(len);
                len = 1;
            } else {
                len += 1;
            }
        }
        parts.push(len);
        if parts.len() >= min_blocks {
            return parts;
        }
    }
}

/// A random real flag manifold with `q <= 3` and `|S| <= max_n`. With
/// `positive_dim` it has at least two blocks.
pub fn random_flag_ast<R: Rng>(rng: &mut R, max_n: usize, positive_dim: bool) -> SpaceAst {
    let q = rng.gen_range(1..=FLAG_MAX_Q);
    let r = rank(q);
    let min_n = if positive_dim { 2 } else { 1 };
    let n = rng.gen_range(min_n..=max_n.min(r.order() as usize));
    let mut all: Vec<Character> = r.characters().collect();
    all.shuffle(rng);
    all.truncate(n);
    all.sort();
    let parts = random_composition(rng, n, if positive_dim { 2 } else { 1 });
    SpaceAst::RealFlag {
        q,
        chars: indices(&all),
        parts,
    }
}

fn flag_rank(ast: &SpaceAst) -> u32 {
    match ast {
        SpaceAst::RealFlag { q, .. } => *q,
        _ => unreachable!("generated flags only"),
    }
}

/// Same block sizes over a different random character set of the same rank,
/// so the two flags have equal dimension.
fn sibling_flag<R: Rng>(rng: &mut R, ast: &SpaceAst) -> SpaceAst {
    let SpaceAst::RealFlag { q, parts, .. } = ast else {
        unreachable!("generated flags only");
    };
    let n: usize = parts.iter().sum();
    let mut all: Vec<Character> = rank(*q).characters().collect();
    all.shuffle(rng);
    all.truncate(n);
    all.sort();
    SpaceAst::RealFlag {
        q: *q,
        chars: indices(&all),
        parts: parts.clone(),
    }
}

/// A random space with conjugation: a flag, a product of two small flags
/// (or a flag and a point), or a disjoint union of equidimensional flags.
pub fn random_conjugation_ast<R: Rng>(rng: &mut R, positive_dim: bool) -> SpaceAst {
    match rng.gen_range(0..10) {
        0..=5 => random_flag_ast(rng, FLAG_MAX_N, positive_dim),
        6 | 7 => {
            let a = random_flag_ast(rng, 4, positive_dim);
            let q = flag_rank(&a);
            let b = if rng.gen_bool(0.3) {
                SpaceAst::Point { q }
            } else {
                loop {
                    let b = random_flag_ast(rng, 4, false);
                    if flag_rank(&b) == q {
                        break b;
                    }
                }
            };
            SpaceAst::Product { factors: vec![a, b] }
        }
        _ => {
            let a = random_flag_ast(rng, FLAG_MAX_N, positive_dim);
            let b = if rng.gen_bool(0.2) { a.clone() } else { sibling_flag(rng, &a) };
            SpaceAst::DisjointUnion { summands: vec![a, b] }
        }
    }
}

/// Random distinct characters of `D` with `s <= 3`, `m <= 4`.
pub fn random_proj_ast<R: Rng>(rng: &mut R) -> ProjAst {
    let s = rng.gen_range(1..=3u32);
    let r = rank(s);
    let m = rng.gen_range(0..=4usize.min(r.order() as usize - 1));
    let mut all: Vec<Character> = r.characters().collect();
    all.shuffle(rng);
    all.truncate(m + 1);
    ProjAst {
        kind: None,
        s,
        chars: indices(&all),
    }
}

fn conjugation(ast: &SpaceAst) -> Result<ConjugationModel> {
    match ast.build()? {
        Space::Conjugation(c) => Ok(c),
        Space::Plain(_) => Err(Error::NotConjugation("suite base")),
    }
}

/// `η(X) = η(X_R)^2` on random spaces with conjugation.
pub fn lemma_square_suite(seed: u64, cases: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut nulls = 0;
    for _ in 0..cases {
        let ast = random_conjugation_ast(&mut rng, false);
        let x = conjugation(&ast)?;
        let real_eta = eta(x.real_part());
        let complex_eta = eta(&complex_from_real(&x));
        nulls += usize::from(real_eta.is_zero());
        if complex_eta != real_eta.square() || complex_eta.is_zero() != real_eta.is_zero() {
            failures.push(json!({ "space": ast, "real_eta": real_eta.to_string(), "complex_eta": complex_eta.to_string() }));
        }
    }
    Ok(SuiteReport::new(
        Suite::LemmaSquare.name(),
        cases,
        failures,
        json!({ "seed": seed, "null_cases": nulls, "non_null_cases": cases - nulls }),
    ))
}

/// `[X, G] = 0 ⟺ [P(m, X), D × G] = 0` on random positive-dimensional bases,
/// together with agreement of the assembled and expanded Dold invariants.
/// About half the bases are drawn conditioned on a non-null complex side.
pub fn theorem_main_suite(seed: u64, cases: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut nulls = 0;
    for _ in 0..cases {
        let proj_ast = random_proj_ast(&mut rng);
        let want_non_null = rng.gen_bool(0.5);
        let (base_ast, base) = loop {
            let ast = random_conjugation_ast(&mut rng, true);
            let base = conjugation(&ast)?;
            if !want_non_null || !is_null_cobordant(&complex_from_real(&base)) {
                break (ast, base);
            }
        };
        let proj = proj_ast.spec("proj")?;
        let report = check_theorem_main(&proj, &base)?;
        let consistent = oracle::oracle_dold_consistency(&proj, &base)?;
        nulls += usize::from(report.complex_null);
        if !(report.applicable && report.holds && consistent) {
            let space = SpaceAst::Dold {
                proj: proj_ast,
                base: Box::new(base_ast),
            };
            failures.push(json!({ "space": space, "report": report }));
        }
    }
    Ok(SuiteReport::new(
        Suite::TheoremMain.name(),
        cases,
        failures,
        json!({ "seed": seed, "null_bases": nulls, "non_null_bases": cases - nulls }),
    ))
}

/// The character criterion for `[RP^m, D] ≠ 0` against direct computation of
/// `η`, with the projective oracle, over every spec with `s <= 3`, `m <= 5`.
pub fn rp_criterion_suite() -> Result<SuiteReport> {
    let mut failures = Vec::new();
    let mut cases = 0;
    let mut non_null = 0;
    for spec in proj_universe(3, 5) {
        cases += 1;
        let model = proj_space(&spec)?;
        let direct = !is_null_cobordant(&model);
        let criterion = rp_nonvanishing_criterion(&spec);
        let mut oracle_ok = true;
        for (j, p) in model.points().iter().enumerate() {
            oracle_ok &= oracle::oracle_proj_rep(&spec, j + 1)? == p.rep;
        }
        non_null += usize::from(direct);
        if direct != criterion || !oracle_ok {
            failures.push(json!({
                "s": spec.rank().get(),
                "chars": indices(spec.chars()),
                "direct_non_null": direct,
                "criterion": criterion,
                "oracle_agrees": oracle_ok,
            }));
        }
    }
    Ok(SuiteReport::new(
        Suite::RpCriterion.name(),
        cases,
        failures,
        json!({ "max_s": 3, "max_m": 5, "non_null": non_null, "null": cases - non_null }),
    ))
}

/// `n! / ∏ n_i!` mod 2 from exact factorials, `n <= 33`.
pub fn multinomial_parity_by_factorials(parts: &[usize]) -> Parity {
    let factorial = |k: usize| (1..=k as u128).product::<u128>();
    let n: usize = parts.iter().sum();
    let denom: u128 = parts.iter().map(|&p| factorial(p)).product();
    if (factorial(n) / denom) % 2 == 1 {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// Binary-digit parity rule against exact multinomials for every
/// composition with `n <= 20`; odd Euler characteristic forces non-vanishing
/// on every flag manifold with `q <= 3`, `n <= 6`.
pub fn euler_suite() -> Result<SuiteReport> {
    let mut failures = Vec::new();
    let mut compositions_checked = 0;
    for n in 1..=20 {
        for parts in compositions(n) {
            compositions_checked += 1;
            let fast = euler_parity(&parts);
            let exact = multinomial_parity_by_factorials(&parts);
            if fast != exact {
                failures.push(json!({ "parts": parts, "rule": fast, "exact": exact }));
            }
        }
    }
    let mut flags_checked = 0;
    let mut odd = 0;
    for spec in flag_universe(FLAG_MAX_Q, FLAG_MAX_N) {
        flags_checked += 1;
        if euler_parity(spec.parts()) == Parity::Odd {
            odd += 1;
            let x = real_flag_space(&spec)?;
            if is_null_cobordant(x.real_part()) {
                failures.push(json!({
                    "q": spec.rank().get(),
                    "S": indices(spec.chars()),
                    "parts": spec.parts(),
                    "odd_euler_but_null": true,
                }));
            }
        }
    }
    Ok(SuiteReport::new(
        Suite::Euler.name(),
        compositions_checked + flags_checked,
        failures,
        json!({
            "compositions": compositions_checked,
            "flag_specs": flags_checked,
            "odd_parity_flag_specs": odd,
        }),
    ))
}

/// The named translation families.
pub const TRANSLATION_CASES: [(u32, &[u32], &[usize]); 3] = [
    (3, &[1, 2, 3], &[1, 2, 3]),
    (3, &[1], &[1, 5]),
    (2, &[1, 2], &[1, 1]),
];

/// Vanishing families for real flag manifolds: the `γ`-translation family
/// (named cases plus every `γ` and every composition with odd first block
/// for `q = 2, 3`) and the block-swap involution for repeated block sizes
/// over every flag with `q <= 3`, `n <= 6`.
pub fn flag_family_suite() -> Result<SuiteReport> {
    let mut failures = Vec::new();
    let mut named = Vec::new();
    for (q, gamma, parts) in TRANSLATION_CASES {
        let r = rank(q);
        let report = translation_family(r, Character::from_indices(r, gamma)?, parts)?;
        if !(report.null && report.holds) {
            failures.push(json!({ "translation": report }));
        }
        named.push(serde_json::to_value(&report).expect("report serializes"));
    }
    let mut translation_cases = 0;
    for q in 2..=3 {
        let r = rank(q);
        let n = r.order() as usize - 2;
        for gamma in r.characters().filter(|c| !c.is_trivial()) {
            for parts in compositions(n).into_iter().filter(|p| p[0] % 2 == 1) {
                translation_cases += 1;
                let report = translation_family(r, gamma, &parts)?;
                if !report.holds {
                    failures.push(json!({ "translation": report }));
                }
            }
        }
    }
    let mut swap_cases = 0;
    for spec in flag_universe(FLAG_MAX_Q, FLAG_MAX_N) {
        let parts = spec.parts();
        let Some((i, j)) = (0..parts.len())
            .flat_map(|i| (i + 1..parts.len()).map(move |j| (i, j)))
            .find(|&(i, j)| parts[i] == parts[j])
        else {
            continue;
        };
        swap_cases += 1;
        let report = block_swap_involution(&spec, i, j)?;
        if !(report.null && report.fixed_point_free && report.preserves_reps) {
            failures.push(json!({
                "q": spec.rank().get(),
                "S": indices(spec.chars()),
                "parts": parts,
                "swap": report,
            }));
        }
    }
    Ok(SuiteReport::new(
        Suite::FlagFamilies.name(),
        TRANSLATION_CASES.len() + translation_cases + swap_cases,
        failures,
        json!({
            "named_translation_cases": named,
            "translation_sweep_cases": translation_cases,
            "block_swap_cases": swap_cases,
        }),
    ))
}

/// Fast paths against the sign-action oracles: stationary flags and tangent
/// representations for every flag with `q <= 3`, `n <= 5`; projective
/// representations for `s <= 3`, `m <= 4`; invariant subspaces over `F_3`
/// for `|S| <= 5`; random Dold consistency with a corruption control.
pub fn oracle_suite(seed: u64) -> Result<SuiteReport> {
    let mut failures = Vec::new();
    let mut flag_specs = 0;
    let mut flags = 0;
    for spec in flag_universe(3, 5) {
        flag_specs += 1;
        let mut fast = flag_fixed_points(&spec)?;
        fast.sort();
        let slow = oracle::oracle_flag_fixed_points(&spec)?;
        let mut ok = fast == slow;
        for p in &fast {
            flags += 1;
            ok &= real_flag_tangent(&spec, p)? == oracle::oracle_tangent_rep(&spec, p)?;
        }
        if !ok {
            failures.push(json!({ "q": spec.rank().get(), "S": indices(spec.chars()), "parts": spec.parts() }));
        }
    }
    let mut proj_specs = 0;
    for spec in proj_universe(3, 4) {
        proj_specs += 1;
        let model = proj_space(&spec)?;
        for (j, p) in model.points().iter().enumerate() {
            if oracle::oracle_proj_rep(&spec, j + 1)? != p.rep {
                failures.push(json!({ "s": spec.rank().get(), "chars": indices(spec.chars()), "j": j + 1 }));
            }
        }
    }
    let mut subspace_sets = 0;
    for q in 0..=3 {
        let r = rank(q);
        let all: Vec<Character> = r.characters().collect();
        for mask in 1u64..1 << all.len() {
            let chars: Vec<Character> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &c)| c)
                .collect();
            if chars.len() > oracle::MAX_SUBSPACE_N {
                continue;
            }
            subspace_sets += 1;
            let n = chars.len();
            for dim in 0..=n {
                let subs = oracle::oracle_invariant_subspaces(r, &chars, dim)?;
                let binom = (0..dim).fold(1usize, |acc, k| acc * (n - k) / (k + 1));
                if subs.len() != binom || !subs.iter().all(oracle::F3Subspace::is_coordinate) {
                    failures.push(json!({ "q": q, "chars": indices(&chars), "dim": dim, "invariant": subs.len() }));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut controls = 0;
    for _ in 0..DOLD_ORACLE_CASES {
        let proj_ast = random_proj_ast(&mut rng);
        let base_ast = random_conjugation_ast(&mut rng, true);
        let proj = proj_ast.spec("proj")?;
        let base = conjugation(&base_ast)?;
        let assembled = dold_fixed_data(&proj, &base)?;
        let formula = crate::cobordism::dold_eta_formula(&proj, &base)?;
        let agrees = oracle::dold_paths_agree(&assembled, &formula);
        let detected = match oracle::corrupt_twist_factor(&assembled, proj.rank())? {
            Some(bad) => {
                controls += 1;
                !oracle::dold_paths_agree(&bad, &formula)
            }
            None => true,
        };
        if !(agrees && detected) {
            let space = SpaceAst::Dold {
                proj: proj_ast,
                base: Box::new(base_ast),
            };
            failures.push(json!({ "space": space, "agrees": agrees, "corruption_detected": detected }));
        }
    }
    Ok(SuiteReport::new(
        Suite::Oracle.name(),
        flag_specs + proj_specs + subspace_sets + DOLD_ORACLE_CASES,
        failures,
        json!({
            "seed": seed,
            "flag_specs": flag_specs,
            "stationary_flags": flags,
            "proj_specs": proj_specs,
            "subspace_character_sets": subspace_sets,
            "dold_cases": DOLD_ORACLE_CASES,
            "corruption_controls": controls,
        }),
    ))
}
