//! Sturmian words from circle rotations, lozenge pairs and factor counts.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{ceil_surd, floor_surd, QuadraticNumber};
use crate::scalar::Scalar;

/// A finite word over `{0, 1}`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if let Some(bad) = symbols.iter().find(|&&s| s > 1) {
            return Err(Error::Domain(format!("symbol {bad} is not binary")));
        }
        Ok(Self(symbols))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letter(a: u8) -> Self {
        debug_assert!(a <= 1);
        Self(vec![a])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn first(&self) -> Option<u8> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    pub fn push(&mut self, a: u8) {
        debug_assert!(a <= 1);
        self.0.push(a);
    }

    pub fn extend_from(&mut self, other: &BinaryWord) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut out = self.clone();
        out.extend_from(other);
        out
    }

    pub fn prefix(&self, n: usize) -> BinaryWord {
        Self(self.0[..n.min(self.len())].to_vec())
    }

    pub fn truncate(&mut self, n: usize) {
        self.0.truncate(n);
    }

    pub fn reversed(&self) -> BinaryWord {
        Self(self.0.iter().rev().copied().collect())
    }

    /// Letter exchange `0 <-> 1`.
    pub fn exchanged(&self) -> BinaryWord {
        Self(self.0.iter().map(|&a| 1 - a).collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn count(&self, a: u8) -> usize {
        self.0.iter().filter(|&&s| s == a).count()
    }

    pub fn starts_with(&self, other: &BinaryWord) -> bool {
        self.0.starts_with(&other.0)
    }

    /// Positions `< min(len)` where the two words differ.
    pub fn differing_positions(&self, other: &BinaryWord) -> BTreeSet<usize> {
        self.0
            .iter()
            .zip(&other.0)
            .enumerate()
            .filter(|(_, (x, y))| x != y)
            .map(|(i, _)| i)
            .collect()
    }

    /// Number of distinct factors of length `n`, `1 <= n <= len`.
    pub fn factor_complexity(&self, n: usize) -> Result<usize> {
        if n == 0 || n > self.len() {
            return Err(Error::Domain(format!(
                "factor length {n} outside 1..={}",
                self.len()
            )));
        }
        Ok(self.0.windows(n).collect::<HashSet<_>>().len())
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.0 {
            f.write_str(if a == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Parse(format!("`{other}` is not a binary letter"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Self)
    }
}

/// Which rotation coding generates a word: `floor` or `ceiling`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Representative {
    Floor,
    Ceiling,
}

impl Representative {
    pub fn flipped(self) -> Self {
        match self {
            Representative::Floor => Representative::Ceiling,
            Representative::Ceiling => Representative::Floor,
        }
    }
}

impl fmt::Display for Representative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Representative::Floor => "floor",
            Representative::Ceiling => "ceiling",
        })
    }
}

/// JSON form of a generated word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordRecord {
    pub word: String,
    pub alpha: String,
    pub rho: String,
}

fn check_slope<T: Scalar>(alpha: &QuadraticNumber<T>) -> Result<()> {
    if alpha.in_open_unit_interval() {
        Ok(())
    } else {
        Err(Error::Domain(format!("alpha = {alpha} not in (0,1)")))
    }
}

fn check_irrational_slope<T: Scalar>(alpha: &QuadraticNumber<T>) -> Result<()> {
    check_slope(alpha)?;
    if alpha.is_rational() {
        return Err(Error::Domain(format!("alpha = {alpha} is rational")));
    }
    Ok(())
}

/// Generates `w_k = F((k+1) alpha + rho) - F(k alpha + rho)` for
/// `k < n`, with `F` the floor or the ceiling. `rho` is first reduced
/// into `[0,1)`; the word does not depend on its integer part.
pub fn sturmian<T: Scalar>(
    alpha: &QuadraticNumber<T>,
    rho: &QuadraticNumber<T>,
    n: usize,
    rep: Representative,
) -> Result<BinaryWord> {
    check_slope(alpha)?;
    let d = alpha.common_radicand(rho)?;
    let rho = rho.fract();
    // alpha = (pa + qa sqrt d)/r, rho = (pr + qr sqrt d)/r on a shared denominator
    let pa = alpha.parts();
    let pr = rho.parts();
    let r = pa.r.lcm(&pr.r);
    let scale_a = r.clone() / pa.r.clone();
    let scale_r = r.clone() / pr.r.clone();
    let (pa_p, pa_q) = (pa.p * scale_a.clone(), pa.q * scale_a);
    let (mut p, mut q) = (pr.p * scale_r.clone(), pr.q * scale_r);
    let step = |p: &T, q: &T| match rep {
        Representative::Floor => floor_surd(p, q, &d, &r),
        Representative::Ceiling => ceil_surd(p, q, &d, &r),
    };
    let mut prev = step(&p, &q);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        p = p + pa_p.clone();
        q = q + pa_q.clone();
        let cur = step(&p, &q);
        let delta = cur.clone() - prev;
        out.push(if delta.is_zero() { 0 } else { 1 });
        prev = cur;
    }
    Ok(BinaryWord(out))
}

/// `s_{alpha,rho}` prefix of length `n` (floor coding).
pub fn sturmian_floor<T: Scalar>(
    alpha: &QuadraticNumber<T>,
    rho: &QuadraticNumber<T>,
    n: usize,
) -> Result<BinaryWord> {
    sturmian(alpha, rho, n, Representative::Floor)
}

/// `s'_{alpha,rho}` prefix of length `n` (ceiling coding).
pub fn sturmian_ceil<T: Scalar>(
    alpha: &QuadraticNumber<T>,
    rho: &QuadraticNumber<T>,
    n: usize,
) -> Result<BinaryWord> {
    sturmian(alpha, rho, n, Representative::Ceiling)
}

/// The characteristic word `c_alpha = s_{alpha,alpha}`.
pub fn characteristic<T: Scalar>(alpha: &QuadraticNumber<T>, n: usize) -> Result<BinaryWord> {
    check_irrational_slope(alpha)?;
    sturmian_floor(alpha, alpha, n)
}

/// The index `m` with `m alpha + rho` a non-negative integer, if any.
///
/// Writes `rho = p + q alpha` with rational `p`, `q`; the index exists
/// iff `-q` is a non-negative integer and `p` is a non-negative integer.
pub fn lozenge_index<T: Scalar>(alpha: &QuadraticNumber<T>, rho: &QuadraticNumber<T>) -> Result<Option<u64>> {
    check_irrational_slope(alpha)?;
    if rho.is_negative() || (rho.clone() - QuadraticNumber::one()).is_positive() {
        return Err(Error::Domain(format!("rho = {rho} not in [0,1]")));
    }
    alpha.common_radicand(rho)?;
    let q = rho.irrational_coeff().clone() / alpha.irrational_coeff().clone();
    let p = rho.rational_part().clone() - q.clone() * alpha.rational_part().clone();
    let m = -q;
    if !m.is_integer() || m.numer().is_negative() || !p.is_integer() || p.numer().is_negative() {
        return Ok(None);
    }
    Ok(Some(m.numer().to_u64().ok_or_else(|| {
        Error::Resource(format!("lozenge index {m} exceeds u64"))
    })?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LozengeReport {
    pub index: Option<u64>,
    pub differing_positions: BTreeSet<usize>,
}

/// Compares the floor and ceiling prefixes of length `n` and reports them
/// next to the exact lozenge index.
pub fn lozenge_report<T: Scalar>(
    alpha: &QuadraticNumber<T>,
    rho: &QuadraticNumber<T>,
    n: usize,
) -> Result<LozengeReport> {
    let index = lozenge_index(alpha, rho)?;
    if let Some(m) = index {
        if (n as u64) < m + 2 {
            return Err(Error::Domain(format!(
                "prefix length {n} too short for lozenge index {m}"
            )));
        }
    }
    let s = sturmian_floor(alpha, rho, n)?;
    let s_prime = sturmian_ceil(alpha, rho, n)?;
    Ok(LozengeReport {
        index,
        differing_positions: s.differing_positions(&s_prime),
    })
}

/// `(10 c_alpha, 01 c_alpha)` truncated to length `n`: the floor and
/// ceiling words at `rho = 1 - alpha`.
pub fn prepend_pair<T: Scalar>(alpha: &QuadraticNumber<T>, n: usize) -> Result<(BinaryWord, BinaryWord)> {
    check_irrational_slope(alpha)?;
    let c = characteristic(alpha, n.saturating_sub(2))?;
    let mut floor_word = BinaryWord(vec![1, 0]).concat(&c);
    let mut ceil_word = BinaryWord(vec![0, 1]).concat(&c);
    floor_word.truncate(n);
    ceil_word.truncate(n);
    Ok((floor_word, ceil_word))
}
