//! JSON description of spaces and its evaluation into fixed-point models.
//!
//! ```json
//! {"kind": "dold",
//!  "proj": {"s": 2, "chars": [[1], [2]]},
//!  "base": {"kind": "real_flag", "q": 2, "S": [[1], [2]], "parts": [1, 1]}}
//! ```
//!
//! Characters are written as ascending lists of indices in `[1, q]`; `[]` is
//! the trivial character.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::character::{Character, GroupRank};
use crate::error::{Error, Result};
use crate::oracle;
use crate::spaces::{
    complex_from_real, dold_fixed_data, flag_fixed_points, point_space, proj_space,
    real_flag_space, real_flag_tangent, ConjugationModel, FixedPointModel, FlagSpec, ProjSpec,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpaceAst {
    Point {
        q: u32,
    },
    RealFlag {
        q: u32,
        #[serde(rename = "S")]
        chars: Vec<Vec<u32>>,
        parts: Vec<usize>,
    },
    ComplexFlag {
        q: u32,
        #[serde(rename = "S")]
        chars: Vec<Vec<u32>>,
        parts: Vec<usize>,
    },
    Proj(ProjAst),
    Dold {
        proj: ProjAst,
        base: Box<SpaceAst>,
    },
    Product {
        factors: Vec<SpaceAst>,
    },
    DisjointUnion {
        summands: Vec<SpaceAst>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProjTag {
    Proj,
}

/// `RP^m` data; inside a `dold` node the `"kind": "proj"` tag is optional.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProjAst {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<ProjTag>,
    pub s: u32,
    pub chars: Vec<Vec<u32>>,
}

/// An evaluated space: either it carries a conjugation (and the model is of
/// its real part), or it is a plain `G`-manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Space {
    Conjugation(ConjugationModel),
    Plain(FixedPointModel),
}

impl Space {
    /// The model whose invariant is reported for this space.
    pub fn model(&self) -> &FixedPointModel {
        match self {
            Space::Conjugation(c) => c.real_part(),
            Space::Plain(m) => m,
        }
    }

    pub fn into_model(self) -> FixedPointModel {
        match self {
            Space::Conjugation(c) => c.into_real_part(),
            Space::Plain(m) => m,
        }
    }

    pub fn as_conjugation(&self) -> Option<&ConjugationModel> {
        match self {
            Space::Conjugation(c) => Some(c),
            Space::Plain(_) => None,
        }
    }
}

fn join(path: &str, field: &str) -> String {
    if path.is_empty() {
        field.to_string()
    } else {
        format!("{path}.{field}")
    }
}

fn at(path: String) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Field { .. } => e,
        other => Error::field(path.clone(), other.to_string()),
    }
}

fn parse_rank(q: u32, path: &str, field: &str) -> Result<GroupRank> {
    GroupRank::new(q).map_err(at(join(path, field)))
}

fn parse_chars(rank: GroupRank, raw: &[Vec<u32>], path: &str, field: &str) -> Result<Vec<Character>> {
    raw.iter()
        .enumerate()
        .map(|(i, idx)| {
            let here = format!("{}[{i}]", join(path, field));
            let mut seen = HashSet::new();
            if let Some(dup) = idx.iter().find(|&&x| !seen.insert(x)) {
                return Err(Error::field(here, format!("repeated index {dup}")));
            }
            Character::from_indices(rank, idx).map_err(at(here))
        })
        .collect()
}

fn flag_spec(q: u32, chars: &[Vec<u32>], parts: &[usize], path: &str) -> Result<FlagSpec> {
    let rank = parse_rank(q, path, "q")?;
    let chars = parse_chars(rank, chars, path, "S")?;
    FlagSpec::new(rank, chars, parts.to_vec()).map_err(|e| match e {
        Error::StationarySetNotFinite(_) => at(join(path, "S"))(e),
        other => at(join(path, "parts"))(other),
    })
}

impl ProjAst {
    pub fn spec(&self, path: &str) -> Result<ProjSpec> {
        let rank = parse_rank(self.s, path, "s")?;
        let chars = parse_chars(rank, &self.chars, path, "chars")?;
        ProjSpec::new(rank, chars).map_err(at(join(path, "chars")))
    }
}

impl SpaceAst {
    pub fn from_json(text: &str) -> Result<SpaceAst> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("AST serializes")
    }

    pub fn build(&self) -> Result<Space> {
        self.build_at("")
    }

    fn build_at(&self, path: &str) -> Result<Space> {
        match self {
            SpaceAst::Point { q } => Ok(Space::Conjugation(point_space(parse_rank(*q, path, "q")?))),
            SpaceAst::RealFlag { q, chars, parts } => {
                let spec = flag_spec(*q, chars, parts, path)?;
                Ok(Space::Conjugation(real_flag_space(&spec).map_err(at(path.to_string()))?))
            }
            SpaceAst::ComplexFlag { q, chars, parts } => {
                let spec = flag_spec(*q, chars, parts, path)?;
                let real = real_flag_space(&spec).map_err(at(path.to_string()))?;
                Ok(Space::Plain(complex_from_real(&real)))
            }
            SpaceAst::Proj(proj) => {
                let spec = proj.spec(path)?;
                Ok(Space::Plain(proj_space(&spec).map_err(at(path.to_string()))?))
            }
            SpaceAst::Dold { proj, base } => {
                let spec = proj.spec(&join(path, "proj"))?;
                let base_path = join(path, "base");
                let base = base.build_at(&base_path)?;
                let Space::Conjugation(base) = base else {
                    return Err(Error::field(
                        base_path,
                        "a Dold base must carry a conjugation (point, real_flag, or products and unions of these)",
                    ));
                };
                Ok(Space::Plain(dold_fixed_data(&spec, &base).map_err(at(path.to_string()))?))
            }
            SpaceAst::Product { factors } => {
                let built = build_list(factors, path, "factors")?;
                let mut iter = built.into_iter();
                let mut acc = iter.next().expect("nonempty");
                for (k, next) in iter.enumerate() {
                    let here = format!("{}[{}]", join(path, "factors"), k + 1);
                    acc = match (acc, next) {
                        (Space::Conjugation(a), Space::Conjugation(b)) => {
                            Space::Conjugation(a.product(&b).map_err(at(here))?)
                        }
                        (a, b) => Space::Plain(a.model().product(b.model()).map_err(at(here))?),
                    };
                }
                Ok(acc)
            }
            SpaceAst::DisjointUnion { summands } => {
                let built = build_list(summands, path, "summands")?;
                let here = join(path, "summands");
                if let Some(conj) = built.iter().map(Space::as_conjugation).collect::<Option<Vec<_>>>() {
                    return Ok(Space::Conjugation(
                        ConjugationModel::disjoint_union(&conj).map_err(at(here))?,
                    ));
                }
                let models: Vec<_> = built.iter().map(Space::model).collect();
                Ok(Space::Plain(FixedPointModel::disjoint_union(&models).map_err(at(here))?))
            }
        }
    }

    /// Runs the brute-force oracles on every component small enough for
    /// them.
    pub fn verify(&self) -> Result<Verification> {
        let mut out = Verification::default();
        self.verify_at("", &mut out)?;
        Ok(out)
    }

    fn verify_at(&self, path: &str, out: &mut Verification) -> Result<()> {
        let node = if path.is_empty() { "root" } else { path };
        match self {
            SpaceAst::Point { .. } => {}
            SpaceAst::RealFlag { q, chars, parts } | SpaceAst::ComplexFlag { q, chars, parts } => {
                let spec = flag_spec(*q, chars, parts, path)?;
                if spec.rank().get() > oracle::MAX_FLAG_RANK || spec.n() > oracle::MAX_FLAG_N {
                    out.skipped.push(format!("{node}: flag oracle"));
                    return Ok(());
                }
                let mut fast = flag_fixed_points(&spec)?;
                fast.sort();
                let slow = oracle::oracle_flag_fixed_points(&spec)?;
                out.checks.insert(format!("{node}: fixed flags"), fast == slow);
                let mut tangents_ok = true;
                for p in &fast {
                    tangents_ok &= real_flag_tangent(&spec, p)? == oracle::oracle_tangent_rep(&spec, p)?;
                }
                out.checks.insert(format!("{node}: tangent reps"), tangents_ok);
            }
            SpaceAst::Proj(proj) => verify_proj(proj, node, path, out)?,
            SpaceAst::Dold { proj, base } => {
                let proj_path = join(path, "proj");
                verify_proj(proj, &proj_path, &proj_path, out)?;
                let base_path = join(path, "base");
                base.verify_at(&base_path, out)?;
                let spec = proj.spec(&proj_path)?;
                if let Space::Conjugation(b) = base.build_at(&base_path)? {
                    out.checks.insert(
                        format!("{node}: Dold assembly vs expansion"),
                        oracle::oracle_dold_consistency(&spec, &b)?,
                    );
                }
            }
            SpaceAst::Product { factors } => {
                for (k, f) in factors.iter().enumerate() {
                    f.verify_at(&format!("{}[{k}]", join(path, "factors")), out)?;
                }
            }
            SpaceAst::DisjointUnion { summands } => {
                for (k, f) in summands.iter().enumerate() {
                    f.verify_at(&format!("{}[{k}]", join(path, "summands")), out)?;
                }
            }
        }
        Ok(())
    }
}

fn verify_proj(proj: &ProjAst, node: &str, path: &str, out: &mut Verification) -> Result<()> {
    let spec = proj.spec(path)?;
    if spec.rank().get() > oracle::MAX_PROJ_RANK || spec.m() > oracle::MAX_PROJ_M {
        out.skipped.push(format!("{node}: projective oracle"));
        return Ok(());
    }
    let fast = proj_space(&spec)?;
    let mut ok = true;
    for (j, p) in fast.points().iter().enumerate() {
        ok &= oracle::oracle_proj_rep(&spec, j + 1)? == p.rep;
    }
    out.checks.insert(format!("{node}: projective reps"), ok);
    Ok(())
}

fn build_list(items: &[SpaceAst], path: &str, field: &str) -> Result<Vec<Space>> {
    if items.is_empty() {
        return Err(Error::field(join(path, field), "at least one entry is required"));
    }
    items
        .iter()
        .enumerate()
        .map(|(k, a)| a.build_at(&format!("{}[{k}]", join(path, field))))
        .collect()
}

/// Oracle cross-checks run by [`SpaceAst::verify`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub checks: BTreeMap<String, bool>,
    /// Components beyond the oracle scale caps.
    pub skipped: Vec<String>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }
}
