//! Acceptance criteria, one line each. Exact equality throughout.

use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stong_core::cobordism::{block_swap_involution, translation_family};
use stong_core::oracle::oracle_proj_rep;
use stong_core::spaces::{proj_space, real_flag_space};
use stong_core::suites::{self, DEFAULT_SEED, FLAG_MAX_N, FLAG_MAX_Q, TRANSLATION_CASES};
use stong_core::{
    eta, pairing_witness, Character, FlagSpec, GroupRank, Monomial, ProjSpec, RepRingElement, Result,
};

const ALGEBRA_CASES: usize = 1000;

type Criterion = (&'static str, &'static str, fn() -> Result<Outcome>);

struct Outcome {
    passed: bool,
    note: String,
}

fn outcome(passed: bool, note: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { passed, note: note.into() })
}

fn rank(q: u32) -> GroupRank {
    GroupRank::new(q).unwrap()
}

fn proj(s: u32, chars: &[&[u32]]) -> Result<ProjSpec> {
    let r = rank(s);
    let chars = chars.iter().map(|c| Character::from_indices(r, c)).collect::<Result<_>>()?;
    ProjSpec::new(r, chars)
}

fn rp_decisions() -> Result<Outcome> {
    let rp1 = proj_space(&proj(2, &[&[1], &[2]])?)?;
    let rp2_spec = proj(3, &[&[1], &[2], &[3]])?;
    let rp2 = proj_space(&rp2_spec)?;
    let rp1_null = eta(&rp1).is_zero() && pairing_witness(&rp1).is_complete();
    let w = pairing_witness(&rp2);
    let rp2_ok = !eta(&rp2).is_zero() && w.residual.len() == 3 && w.verify(&rp2);
    let mut oracle_ok = true;
    for (j, p) in rp2.points().iter().enumerate() {
        oracle_ok &= oracle_proj_rep(&rp2_spec, j + 1)? == p.rep;
    }
    let sweep = suites::rp_criterion_suite()?;
    outcome(
        rp1_null && rp2_ok && oracle_ok && sweep.passed,
        format!("RP1 null, RP2 residual {}, sweep {} specs", w.residual.len(), sweep.cases),
    )
}

fn lemma_square() -> Result<Outcome> {
    let r = suites::lemma_square_suite(DEFAULT_SEED, suites::LEMMA_CASES)?;
    outcome(r.passed && r.cases == 200, format!("{} cases, {} failures", r.cases, r.failures.len()))
}

fn theorem_main() -> Result<Outcome> {
    // Every case also requires assembled and expanded Dold data to agree.
    let r = suites::theorem_main_suite(DEFAULT_SEED, suites::THEOREM_CASES)?;
    outcome(
        r.passed && r.cases == 200,
        format!("{} pairs, {} failures, {}", r.cases, r.failures.len(), r.details),
    )
}

fn translation_cases() -> Result<Outcome> {
    let mut ok = true;
    let mut notes = Vec::new();
    for (q, gamma, parts) in TRANSLATION_CASES {
        let r = rank(q);
        let gamma = Character::from_indices(r, gamma)?;
        let rep = translation_family(r, gamma, parts)?;
        let chars = r.characters().filter(|c| !c.is_trivial() && *c != gamma).collect();
        let space = real_flag_space(&FlagSpec::new(r, chars, parts.to_vec())?)?;
        let witness_ok = rep.witness.is_complete() && rep.witness.verify(space.real_part());
        ok &= rep.null && rep.holds && witness_ok && eta(space.real_part()).is_zero();
        if q == 3 && parts == [1, 2, 3] {
            ok &= rep.points == 60 && rep.witness.pairs.len() == 30;
        }
        notes.push(format!("q={q} parts={parts:?}: {} flags", rep.points));
    }
    outcome(ok, notes.join("; "))
}

fn block_swap() -> Result<Outcome> {
    let mut cases = 0;
    let mut failures = 0;
    for spec in suites::flag_universe(FLAG_MAX_Q, FLAG_MAX_N) {
        let parts = spec.parts();
        let pair = (0..parts.len())
            .flat_map(|i| (i + 1..parts.len()).map(move |j| (i, j)))
            .find(|&(i, j)| parts[i] == parts[j]);
        let Some((i, j)) = pair else { continue };
        cases += 1;
        let rep = block_swap_involution(&spec, i, j)?;
        let direct = eta(real_flag_space(&spec)?.real_part()).is_zero();
        if !(direct && rep.null && rep.fixed_point_free && rep.preserves_reps) {
            failures += 1;
        }
    }
    outcome(failures == 0 && cases > 0, format!("{cases} specs, {failures} failures"))
}

fn euler() -> Result<Outcome> {
    let r = suites::euler_suite()?;
    outcome(r.passed, format!("{} cases, {}", r.cases, r.details))
}

fn oracles() -> Result<Outcome> {
    let r = suites::oracle_suite(DEFAULT_SEED)?;
    let controls = r.details["corruption_controls"].as_u64().unwrap_or(0);
    outcome(
        r.passed && controls > 0,
        format!("{} cases, {} corruption controls detected", r.cases, controls),
    )
}

fn random_element<R: Rng>(rng: &mut R, r: GroupRank) -> Result<RepRingElement> {
    let terms = rng.gen_range(0..5);
    let mut monomials = Vec::new();
    for _ in 0..terms {
        let factors = rng.gen_range(0..4);
        let powers: Vec<_> = (0..factors)
            .map(|_| {
                let bits = rng.gen_range(1..r.order());
                (Character::from_bits(r, bits).unwrap(), rng.gen_range(1..3))
            })
            .collect();
        monomials.push(Monomial::from_powers(r, powers)?);
    }
    RepRingElement::from_monomials(r, monomials)
}

fn homogeneous(x: &RepRingElement) -> Option<usize> {
    let mut degrees = x.terms().map(Monomial::degree);
    let d = degrees.next()?;
    degrees.all(|e| e == d).then_some(d)
}

fn algebra_case<R: Rng>(rng: &mut R) -> Result<bool> {
    let r = rank(rng.gen_range(1..=4));
    let (a, b, c) = (random_element(rng, r)?, random_element(rng, r)?, random_element(rng, r)?);
    let zero = RepRingElement::zero(r);
    let one = RepRingElement::one(r);
    let ring = a.add(&b)? == b.add(&a)?
        && a.add(&b)?.add(&c)? == a.add(&b.add(&c)?)?
        && a.add(&zero)? == a
        && a.add(&a)?.is_zero()
        && a.mul(&b)? == b.mul(&a)?
        && a.mul(&b)?.mul(&c)? == a.mul(&b.mul(&c)?)?
        && a.mul(&one)? == a
        && a.mul(&zero)?.is_zero()
        && a.mul(&b.add(&c)?)? == a.mul(&b)?.add(&a.mul(&c)?)?;
    let frobenius = a.add(&b)?.square() == a.square().add(&b.square())?
        && a.mul(&b)?.square() == a.square().mul(&b.square())?
        && a.square() == a.mul(&a)?;
    let mut grading = true;
    for x in a.terms() {
        for y in b.terms() {
            grading &= x.mul(y)?.degree() == x.degree() + y.degree();
        }
    }
    if let (Some(d), Some(e)) = (homogeneous(&a), homogeneous(&b)) {
        let p = a.mul(&b)?;
        grading &= p.is_zero() || homogeneous(&p) == Some(d + e);
    }
    let text = RepRingElement::parse(r, &a.to_string())?;
    let json: RepRingElement = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
    let round_trip = text == a && json == a && text.to_string() == a.to_string();
    Ok(ring && frobenius && grading && round_trip)
}

fn algebra() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut failures = 0;
    for _ in 0..ALGEBRA_CASES {
        failures += usize::from(!algebra_case(&mut rng)?);
    }
    outcome(failures == 0, format!("{ALGEBRA_CASES} cases, {failures} failures"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("AC1", "RP^m decisions and criterion sweep", rp_decisions),
        ("AC2", "complexification squares eta", lemma_square),
        ("AC3", "Dold null iff complex base null", theorem_main),
        ("AC4", "translation families bound", translation_cases),
        ("AC5", "repeated block sizes bound", block_swap),
        ("AC6", "Euler parity", euler),
        ("AC7", "oracle equivalence", oracles),
        ("AC8", "algebra properties", algebra),
    ];
    let mut all = true;
    for (id, title, run) in criteria {
        let (passed, note) = match run() {
            Ok(o) => (o.passed, o.note),
            Err(e) => (false, format!("error: {e}")),
        };
        all &= passed;
        println!("[{}] {id} {title}: {note}", if passed { "PASS" } else { "FAIL" });
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
