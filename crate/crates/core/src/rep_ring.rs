//! The graded `Z2`-algebra `R_*(G)`: polynomials in indeterminates `v_χ`
//! indexed by nontrivial characters.
//!
//! A [`Monomial`] is the class of a representation without trivial summand,
//! i.e. a multiset of nontrivial characters. A [`RepRingElement`] is a set of
//! monomials; coefficients live in `Z2`, so presence in the set is the whole
//! coefficient and addition is symmetric difference.
//!
//! Text form: `v[1,2]^2*v[3] + v[1]`, with `1` for the empty monomial and `0`
//! for the zero element.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::character::{Character, GroupRank};
use crate::error::{Error, Result};

fn check_rank(left: GroupRank, right: GroupRank) -> Result<()> {
    if left != right {
        return Err(Error::RankMismatch {
            left: left.get(),
            right: right.get(),
        });
    }
    Ok(())
}

/// `v_{χ_1}^{m_1} ⋯ v_{χ_r}^{m_r}` with `χ_1 < .. < χ_r` all nontrivial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    // (character bits, multiplicity), sorted by bits, multiplicities >= 1
    factors: Vec<(u32, u32)>,
    rank: GroupRank,
}

impl Monomial {
    /// The empty monomial, class of the zero representation.
    pub fn one(rank: GroupRank) -> Self {
        Monomial {
            factors: Vec::new(),
            rank,
        }
    }

    /// Builds the monomial of `⊕ R_χ` over the given characters, one
    /// summand per item.
    pub fn from_characters<I>(rank: GroupRank, chars: I) -> Result<Self>
    where
        I: IntoIterator<Item = Character>,
    {
        let mut counts = BTreeMap::new();
        for c in chars {
            check_rank(rank, c.rank())?;
            if c.is_trivial() {
                return Err(Error::TrivialFactor);
            }
            *counts.entry(c.bits()).or_insert(0u32) += 1;
        }
        Ok(Monomial {
            factors: counts.into_iter().collect(),
            rank,
        })
    }

    /// Builds a monomial from `(character, multiplicity)` pairs. Zero
    /// multiplicities are dropped and repeated characters are merged.
    pub fn from_powers<I>(rank: GroupRank, powers: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Character, u32)>,
    {
        let mut counts = BTreeMap::new();
        for (c, k) in powers {
            check_rank(rank, c.rank())?;
            if k == 0 {
                continue;
            }
            if c.is_trivial() {
                return Err(Error::TrivialFactor);
            }
            *counts.entry(c.bits()).or_insert(0u32) += k;
        }
        Ok(Monomial {
            factors: counts.into_iter().collect(),
            rank,
        })
    }

    #[inline]
    pub fn rank(&self) -> GroupRank {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|&(_, k)| k as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factors in canonical order with their multiplicities.
    pub fn powers(&self) -> impl Iterator<Item = (Character, u32)> + '_ {
        self.factors.iter().map(move |&(bits, k)| {
            (
                Character::from_bits(self.rank, bits).expect("stored in range"),
                k,
            )
        })
    }

    /// Factors with repetition, in canonical order.
    pub fn characters(&self) -> impl Iterator<Item = Character> + '_ {
        self.powers()
            .flat_map(|(c, k)| std::iter::repeat_n(c, k as usize))
    }

    /// Multiplicity of `v_χ`.
    pub fn multiplicity(&self, c: Character) -> u32 {
        if c.rank() != self.rank {
            return 0;
        }
        self.factors
            .binary_search_by_key(&c.bits(), |&(b, _)| b)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    /// Product in `R(G)`: the class of the direct sum.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_rank(self.rank, other.rank)?;
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(Monomial {
            factors: out,
            rank: self.rank,
        })
    }

    pub fn square(&self) -> Monomial {
        Monomial {
            factors: self.factors.iter().map(|&(c, k)| (c, 2 * k)).collect(),
            rank: self.rank,
        }
    }

    /// `[E ⊗ V]` for a one-dimensional `D`-representation `E` with character
    /// `chi` and `V` the representation of `G` described by `self`: each factor
    /// `y_β` becomes `chi ⊗ y_β` in the flattened group `D × G`.
    pub fn twist(&self, chi: Character) -> Result<Monomial> {
        let rank = chi.rank().product(self.rank)?;
        let mut counts = BTreeMap::new();
        for (y, k) in self.powers() {
            let c = Character::embed_product(chi, y)?;
            *counts.entry(c.bits()).or_insert(0) += k;
        }
        Ok(Monomial {
            factors: counts.into_iter().collect(),
            rank,
        })
    }

    /// Views a `G`-monomial as a `D × G`-monomial through the projection to
    /// `G` (trivial twist).
    pub fn embed_g_side(&self, d_rank: GroupRank) -> Result<Monomial> {
        self.twist(Character::trivial(d_rank))
    }

    /// Views a `D`-monomial as a `D × G`-monomial through the projection to
    /// `D`.
    pub fn embed_d_side(&self, g_rank: GroupRank) -> Result<Monomial> {
        let rank = self.rank.product(g_rank)?;
        let trivial = Character::trivial(g_rank);
        let factors = self
            .powers()
            .map(|(c, k)| Ok((Character::embed_product(c, trivial)?.bits(), k)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { factors, rank })
    }

    /// Parses the text form produced by `Display`.
    pub fn parse(rank: GroupRank, text: &str) -> Result<Monomial> {
        let text = text.trim();
        if text == "1" {
            return Ok(Monomial::one(rank));
        }
        let mut powers = Vec::new();
        for factor in text.split('*') {
            let factor = factor.trim();
            let rest = factor
                .strip_prefix("v[")
                .ok_or_else(|| Error::Parse(format!("expected `v[..]`, found `{factor}`")))?;
            let close = rest
                .find(']')
                .ok_or_else(|| Error::Parse(format!("unclosed factor `{factor}`")))?;
            let indices = rest[..close]
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad index `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            let exponent = match rest[close + 1..].trim() {
                "" => 1,
                e => e
                    .strip_prefix('^')
                    .and_then(|e| e.trim().parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad exponent in `{factor}`")))?,
            };
            powers.push((Character::from_indices(rank, &indices)?, exponent));
        }
        Monomial::from_powers(rank, powers)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (c, k)) in self.powers().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "v{c}")?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} /{}", self.rank)
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialRepr(Vec<(Vec<u32>, u32)>);

impl MonomialRepr {
    fn of(m: &Monomial) -> Self {
        MonomialRepr(m.powers().map(|(c, k)| (c.indices(), k)).collect())
    }

    fn build(self, rank: GroupRank) -> Result<Monomial> {
        let powers = self
            .0
            .into_iter()
            .map(|(idx, k)| Ok((Character::from_indices(rank, &idx)?, k)))
            .collect::<Result<Vec<_>>>()?;
        Monomial::from_powers(rank, powers)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MonomialJson {
    q: GroupRank,
    factors: MonomialRepr,
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MonomialJson {
            q: self.rank,
            factors: MonomialRepr::of(self),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let json = MonomialJson::deserialize(deserializer)?;
        json.factors.build(json.q).map_err(D::Error::custom)
    }
}

/// An element of `R_*(G)` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RepRingElement {
    terms: BTreeSet<Monomial>,
    rank: GroupRank,
}

impl RepRingElement {
    pub fn zero(rank: GroupRank) -> Self {
        RepRingElement {
            terms: BTreeSet::new(),
            rank,
        }
    }

    pub fn one(rank: GroupRank) -> Self {
        RepRingElement::from(Monomial::one(rank))
    }

    /// Sums the given monomials with `Z2` cancellation.
    pub fn from_monomials<I>(rank: GroupRank, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut out = RepRingElement::zero(rank);
        for m in monomials {
            out.toggle(m)?;
        }
        Ok(out)
    }

    /// Adds a single monomial in place.
    pub fn toggle(&mut self, m: Monomial) -> Result<()> {
        check_rank(self.rank, m.rank)?;
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
        Ok(())
    }

    #[inline]
    pub fn rank(&self) -> GroupRank {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn add(&self, other: &RepRingElement) -> Result<RepRingElement> {
        check_rank(self.rank, other.rank)?;
        Ok(RepRingElement {
            terms: self
                .terms
                .symmetric_difference(&other.terms)
                .cloned()
                .collect(),
            rank: self.rank,
        })
    }

    pub fn mul(&self, other: &RepRingElement) -> Result<RepRingElement> {
        check_rank(self.rank, other.rank)?;
        let mut out = RepRingElement::zero(self.rank);
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.mul(b)?)?;
            }
        }
        Ok(out)
    }

    /// Term-wise squaring; agrees with `self.mul(self)` because cross terms
    /// appear twice.
    pub fn square(&self) -> RepRingElement {
        RepRingElement {
            terms: self.terms.iter().map(Monomial::square).collect(),
            rank: self.rank,
        }
    }

    /// Parses the text form produced by `Display`.
    pub fn parse(rank: GroupRank, text: &str) -> Result<RepRingElement> {
        let text = text.trim();
        if text == "0" {
            return Ok(RepRingElement::zero(rank));
        }
        let monomials = text
            .split('+')
            .map(|m| Monomial::parse(rank, m))
            .collect::<Result<Vec<_>>>()?;
        RepRingElement::from_monomials(rank, monomials)
    }
}

impl From<Monomial> for RepRingElement {
    fn from(m: Monomial) -> Self {
        let rank = m.rank;
        RepRingElement {
            terms: BTreeSet::from([m]),
            rank,
        }
    }
}

impl fmt::Display for RepRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RepRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} /{}", self.rank)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementJson {
    q: GroupRank,
    terms: Vec<MonomialRepr>,
}

impl Serialize for RepRingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ElementJson {
            q: self.rank,
            terms: self.terms.iter().map(MonomialRepr::of).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RepRingElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let json = ElementJson::deserialize(deserializer)?;
        let rank = json.q;
        let mut terms = BTreeSet::new();
        for repr in json.terms {
            let m = repr.build(rank).map_err(D::Error::custom)?;
            if !terms.insert(m) {
                return Err(D::Error::custom("repeated monomial in canonical form"));
            }
        }
        Ok(RepRingElement { terms, rank })
    }
}
