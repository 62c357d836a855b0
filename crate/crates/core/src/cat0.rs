//! Coordinates for the group `F_n × Z^n`, the twisting automorphism, the
//! affine maps on a flat, and half-plane walks read off from words.
//!
//! Generators are 1-based: letter `+i` is `g_i`, letter `-i` its inverse.
//! Half-plane coordinates put the tree direction first: `(t, a_1, .., a_n)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::walk::LatticeWalk;

/// An element of `F_n × Z^n`: a freely reduced word and a translation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupWord {
    letters: Vec<i32>,
    translation: Vec<i64>,
}

/// Cancels adjacent inverse pairs.
pub fn free_reduce(letters: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn is_reduced(letters: &[i32]) -> bool {
    letters.windows(2).all(|w| w[0] != -w[1])
}

impl GroupWord {
    /// Reduces `letters`. Every letter must lie in `±1..=±n` where `n` is the
    /// translation length.
    pub fn new(letters: Vec<i32>, translation: Vec<i64>) -> Result<Self> {
        let n = translation.len() as i64;
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || (l as i64).abs() > n) {
            return domain(format!("letter {bad} is not a generator index for rank {n}"));
        }
        Ok(GroupWord { letters: free_reduce(&letters), translation })
    }

    pub fn identity(rank: usize) -> Self {
        GroupWord { letters: Vec::new(), translation: vec![0; rank] }
    }

    /// `(g_i, 0)`.
    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        GroupWord::new(vec![i as i32], vec![0; rank])
    }

    /// `(1, v)`.
    pub fn translation_only(v: Vec<i64>) -> Self {
        GroupWord { letters: Vec::new(), translation: v }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn translation(&self) -> &[i64] {
        &self.translation
    }

    pub fn rank(&self) -> usize {
        self.translation.len()
    }

    pub fn mul(&self, other: &GroupWord) -> Result<GroupWord> {
        if self.rank() != other.rank() {
            return domain("rank mismatch");
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        let translation = self
            .translation
            .iter()
            .zip(&other.translation)
            .map(|(a, b)| a.checked_add(*b).ok_or_else(|| Error::Overflow("translation".into())))
            .collect::<Result<_>>()?;
        Ok(GroupWord { letters: free_reduce(&letters), translation })
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
            translation: self.translation.iter().map(|t| -t).collect(),
        }
    }
}

fn twist(g: &GroupWord, sign: i64) -> Result<GroupWord> {
    let mut t = g.translation.clone();
    for &l in &g.letters {
        let i = l.unsigned_abs() as usize - 1;
        let delta = sign * l.signum() as i64;
        t[i] = t[i].checked_add(delta).ok_or_else(|| Error::Overflow("translation".into()))?;
    }
    Ok(GroupWord { letters: g.letters.clone(), translation: t })
}

/// The automorphism sending `(g_i, 0)` to `(g_i, e_i)` and fixing `Z^n`.
pub fn phi(g: &GroupWord) -> Result<GroupWord> {
    twist(g, 1)
}

pub fn phi_inverse(g: &GroupWord) -> Result<GroupWord> {
    twist(g, -1)
}

/// The linear map on the flat `E_i` fixing `e_1..e_n` and sending `e_0` to
/// `e_0 + e_i`. `p` is `(a_0, a_1, .., a_n)`; `i` is 1-based.
pub fn f_on_flat(i: usize, p: &[i64]) -> Result<Vec<i64>> {
    if i == 0 || i >= p.len() {
        return domain(format!("flat index {i} out of range for {} coordinates", p.len()));
    }
    let mut out = p.to_vec();
    out[i] = out[i].checked_add(p[0]).ok_or_else(|| Error::Overflow("flat coordinate".into()))?;
    Ok(out)
}

/// A point on the half-plane `c × R^n`: arc length along the tree geodesic
/// and the flat coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfPlanePoint {
    t: f64,
    v: Vec<f64>,
}

impl HalfPlanePoint {
    pub fn new(t: f64, v: Vec<f64>) -> Result<Self> {
        if !(t >= 0.0) {
            return domain(format!("half-plane coordinate t = {t} must be nonnegative"));
        }
        Ok(HalfPlanePoint { t, v })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn v(&self) -> &[f64] {
        &self.v
    }
}

/// Walk in half-plane coordinates for a reduced word: letter `+i` steps by
/// `e_0 + e_i`, letter `-i` by `e_0 - e_i`.
pub fn walk_from_word(word: &[i32], rank: usize) -> Result<Vec<Vec<i64>>> {
    if !is_reduced(word) {
        return domain("word is not freely reduced");
    }
    let mut pos = vec![0i64; rank + 1];
    let mut out = Vec::with_capacity(word.len() + 1);
    out.push(pos.clone());
    for &l in word {
        let i = l.unsigned_abs() as usize;
        if l == 0 || i > rank {
            return domain(format!("letter {l} out of range for rank {rank}"));
        }
        pos[0] += 1;
        pos[i] += l.signum() as i64;
        out.push(pos.clone());
    }
    Ok(out)
}

/// The positive word `g_{I_1} g_{I_2} ..` for 1-based indices.
pub fn word_from_indices(indices: &[usize]) -> Vec<i32> {
    indices.iter().map(|&i| i as i32).collect()
}

/// Letters of a walk over the positive basis (0-based axes become `+1..+n`).
pub fn word_from_walk(walk: &LatticeWalk) -> Vec<i32> {
    walk.indices().map(|i| i as i32 + 1).collect()
}

/// Whitespace-separated signed letters.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word(pub Vec<i32>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(|t| t.parse::<i32>().map_err(|e| Error::Domain(format!("bad letter {t:?}: {e}"))))
            .collect::<Result<_>>()
            .map(Word)
    }
}
