//! Characters of an elementary abelian 2-group `G = (Z2)^q`.
//!
//! Both group elements `t_β` and characters `y_α` are indexed by subsets of
//! `[q] = {1, .., q}`, stored as bit vectors: element `i` of the subset is bit
//! `i - 1`. Composition of characters is symmetric difference (XOR), and
//! `y_α(t_β) = -1` exactly when `|α ∩ β|` is odd.
//!
//! A product group `D × G` of ranks `s` and `q` is flattened into a single
//! group of rank `s + q`: the `D` indices occupy positions `1..=s` and the `G`
//! indices positions `s+1..=s+q`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Number of `Z2` factors of the group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct GroupRank(u8);

impl GroupRank {
    pub const MAX: u8 = 30;

    pub fn new(q: u32) -> Result<Self> {
        if q > Self::MAX as u32 {
            return Err(Error::RankTooLarge(q));
        }
        Ok(GroupRank(q as u8))
    }

    #[inline]
    pub fn get(self) -> u8 {
        self.0
    }

    /// Order of the group, `2^q`.
    #[inline]
    pub fn order(self) -> u32 {
        1u32 << self.0
    }

    #[inline]
    fn mask(self) -> u32 {
        self.order() - 1
    }

    /// Rank of `D × G` where `self` is the rank of `D`.
    pub fn product(self, other: GroupRank) -> Result<GroupRank> {
        GroupRank::new(self.0 as u32 + other.0 as u32)
    }

    /// All characters in canonical (bit-vector) order, trivial first.
    pub fn characters(self) -> impl Iterator<Item = Character> {
        (0..self.order()).map(move |bits| Character { bits, rank: self })
    }

    /// All group elements `t_β` in bit-vector order.
    pub fn elements(self) -> impl Iterator<Item = GroupElement> {
        (0..self.order()).map(move |bits| GroupElement { bits, rank: self })
    }

    /// The standard generators `t_1, .., t_q`.
    pub fn generators(self) -> impl Iterator<Item = GroupElement> {
        (0..self.0).map(move |i| GroupElement {
            bits: 1 << i,
            rank: self,
        })
    }
}

impl TryFrom<u32> for GroupRank {
    type Error = Error;

    fn try_from(q: u32) -> Result<Self> {
        GroupRank::new(q)
    }
}

impl From<GroupRank> for u32 {
    fn from(rank: GroupRank) -> u32 {
        rank.0 as u32
    }
}

impl fmt::Display for GroupRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn bits_from_indices(rank: GroupRank, indices: &[u32]) -> Result<u32> {
    let mut bits = 0u32;
    for &index in indices {
        if index == 0 || index > rank.0 as u32 {
            return Err(Error::IndexOutOfRange { index, rank: rank.0 });
        }
        bits |= 1 << (index - 1);
    }
    Ok(bits)
}

fn indices_of(bits: u32) -> Vec<u32> {
    (0..32).filter(|i| bits >> i & 1 == 1).map(|i| i + 1).collect()
}

fn write_indices(f: &mut fmt::Formatter<'_>, bits: u32) -> fmt::Result {
    f.write_str("[")?;
    for (k, i) in indices_of(bits).into_iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{i}")?;
    }
    f.write_str("]")
}

/// A character `y_α ∈ Hom(G, Z2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Character {
    bits: u32,
    rank: GroupRank,
}

impl Character {
    pub fn trivial(rank: GroupRank) -> Self {
        Character { bits: 0, rank }
    }

    pub fn from_bits(rank: GroupRank, bits: u32) -> Result<Self> {
        if bits & !rank.mask() != 0 {
            let index = 32 - bits.leading_zeros();
            return Err(Error::IndexOutOfRange { index, rank: rank.0 });
        }
        Ok(Character { bits, rank })
    }

    /// Builds `y_α` from the (1-based) members of `α`. Repeated indices are
    /// idempotent.
    pub fn from_indices(rank: GroupRank, indices: &[u32]) -> Result<Self> {
        Ok(Character {
            bits: bits_from_indices(rank, indices)?,
            rank,
        })
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn rank(self) -> GroupRank {
        self.rank
    }

    #[inline]
    pub fn is_trivial(self) -> bool {
        self.bits == 0
    }

    /// Sorted members of `α`.
    pub fn indices(self) -> Vec<u32> {
        indices_of(self.bits)
    }

    fn same_rank(self, other: GroupRank) -> Result<()> {
        if self.rank != other {
            return Err(Error::RankMismatch {
                left: self.rank.0,
                right: other.0,
            });
        }
        Ok(())
    }

    /// Group law of the character group: `y_α ⊗ y_β = y_{αΔβ}`.
    pub fn compose(self, other: Character) -> Result<Character> {
        self.same_rank(other.rank)?;
        Ok(Character {
            bits: self.bits ^ other.bits,
            rank: self.rank,
        })
    }

    /// Evaluates `y_α(t_β)`.
    pub fn eval(self, t: GroupElement) -> Result<Sign> {
        self.same_rank(t.rank)?;
        Ok(if (self.bits & t.bits).count_ones() % 2 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        })
    }

    /// Pairs a character of `D` (rank `s`) with one of `G` (rank `q`) as a
    /// character of the flattened group `D × G`.
    pub fn embed_product(d_char: Character, g_char: Character) -> Result<Character> {
        let rank = d_char.rank.product(g_char.rank)?;
        Ok(Character {
            bits: d_char.bits | g_char.bits << d_char.rank.0,
            rank,
        })
    }

    /// Inverse of [`Character::embed_product`] given the rank of `D`.
    pub fn split_product(self, d_rank: GroupRank) -> Result<(Character, Character)> {
        let q = self
            .rank
            .0
            .checked_sub(d_rank.0)
            .ok_or(Error::RankMismatch {
                left: self.rank.0,
                right: d_rank.0,
            })?;
        let g_rank = GroupRank(q);
        Ok((
            Character {
                bits: self.bits & d_rank.mask(),
                rank: d_rank,
            },
            Character {
                bits: self.bits >> d_rank.0,
                rank: g_rank,
            },
        ))
    }
}

impl Ord for Character {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.bits, self.rank).cmp(&(other.bits, other.rank))
    }
}

impl PartialOrd for Character {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_indices(f, self.bits)
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y")?;
        write_indices(f, self.bits)?;
        write!(f, "/{}", self.rank)
    }
}

/// A group element `t_β = ∏_{j ∈ β} t_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    bits: u32,
    rank: GroupRank,
}

impl GroupElement {
    pub fn identity(rank: GroupRank) -> Self {
        GroupElement { bits: 0, rank }
    }

    pub fn from_indices(rank: GroupRank, indices: &[u32]) -> Result<Self> {
        Ok(GroupElement {
            bits: bits_from_indices(rank, indices)?,
            rank,
        })
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn rank(self) -> GroupRank {
        self.rank
    }

    pub fn compose(self, other: GroupElement) -> Result<GroupElement> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank.0,
                right: other.rank.0,
            });
        }
        Ok(GroupElement {
            bits: self.bits ^ other.bits,
            rank: self.rank,
        })
    }
}

/// Value of a real character, `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}
