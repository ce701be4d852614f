//! Morphisms of the free monoid over `{0, 1}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactnum::QuadraticNumber;
use crate::matrix::Matrix2;
use crate::scalar::Scalar;
use crate::words::{sturmian, BinaryWord, Representative};

/// A morphism given by its two (nonempty) images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryMorphism {
    image0: BinaryWord,
    image1: BinaryWord,
}

fn word(s: &str) -> BinaryWord {
    s.parse().expect("literal binary word")
}

impl BinaryMorphism {
    pub fn new(image0: BinaryWord, image1: BinaryWord) -> Result<Self> {
        if image0.is_empty() || image1.is_empty() {
            return Err(Error::Domain("morphism images must be nonempty".into()));
        }
        Ok(Self { image0, image1 })
    }

    fn lit(a: &str, b: &str) -> Self {
        Self {
            image0: word(a),
            image1: word(b),
        }
    }

    pub fn identity() -> Self {
        Self::lit("0", "1")
    }

    /// `E`: `0 -> 1, 1 -> 0`.
    pub fn exchange() -> Self {
        Self::lit("1", "0")
    }

    pub fn image(&self, a: u8) -> &BinaryWord {
        if a == 0 {
            &self.image0
        } else {
            &self.image1
        }
    }

    pub fn image0(&self) -> &BinaryWord {
        &self.image0
    }

    pub fn image1(&self) -> &BinaryWord {
        &self.image1
    }

    pub fn apply(&self, w: &BinaryWord) -> BinaryWord {
        let mut out = BinaryWord::empty();
        for &a in w.symbols() {
            out.extend_from(self.image(a));
        }
        out
    }

    /// `sigma(w)` cut off once `limit` symbols are produced.
    pub fn apply_prefix(&self, w: &BinaryWord, limit: usize) -> BinaryWord {
        let mut out = BinaryWord::empty();
        for &a in w.symbols() {
            if out.len() >= limit {
                break;
            }
            out.extend_from(self.image(a));
        }
        out.truncate(limit);
        out
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &BinaryMorphism) -> BinaryMorphism {
        BinaryMorphism {
            image0: self.apply(&other.image0),
            image1: self.apply(&other.image1),
        }
    }

    pub fn power(&self, n: usize) -> BinaryMorphism {
        (0..n).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    pub fn time_reversal(&self) -> BinaryMorphism {
        BinaryMorphism {
            image0: self.image0.reversed(),
            image1: self.image1.reversed(),
        }
    }

    /// `E ∘ self ∘ E`.
    pub fn exchange_conjugate(&self) -> BinaryMorphism {
        BinaryMorphism {
            image0: self.image1.exchanged(),
            image1: self.image0.exchanged(),
        }
    }

    /// Entry `(a, b)` counts the letter `a` in the image of `b`, so that
    /// `M(sigma ∘ tau) = M(sigma) M(tau)`.
    pub fn incidence_matrix<T: Scalar>(&self) -> Matrix2<T> {
        let c = |w: &BinaryWord, a: u8| T::from_usize(w.count(a)).expect("count fits");
        Matrix2::new(
            c(&self.image0, 0),
            c(&self.image1, 0),
            c(&self.image0, 1),
            c(&self.image1, 1),
        )
    }

    /// Letters `a` whose image starts with `a` and has length at least 2.
    pub fn prolongable_letters(&self) -> Vec<u8> {
        [0u8, 1]
            .into_iter()
            .filter(|&a| self.image(a).first() == Some(a) && self.image(a).len() >= 2)
            .collect()
    }

    /// Prefix of the fixed point `lim sigma^k(a)`, preferring `a = 0`.
    pub fn fixed_point(&self, n: usize) -> Result<BinaryWord> {
        let letter = *self
            .prolongable_letters()
            .first()
            .ok_or_else(|| Error::NotProlongable(format!("{self} is prolongable on neither letter")))?;
        self.fixed_point_from(letter, n)
    }

    /// Prefix of the fixed point started at `letter`.
    pub fn fixed_point_from(&self, letter: u8, n: usize) -> Result<BinaryWord> {
        if !self.prolongable_letters().contains(&letter) {
            return Err(Error::NotProlongable(format!(
                "{self} is not prolongable on {letter}"
            )));
        }
        let mut w = BinaryWord::letter(letter);
        while w.len() < n {
            let next = self.apply_prefix(&w, n);
            if next.len() <= w.len() {
                return Err(Error::NotProlongable(format!("iteration of {self} stalls")));
            }
            w = next;
        }
        w.truncate(n);
        Ok(w)
    }

    /// Whether `sigma` maps the length-`n` prefix of `s_{alpha,rho}` (or
    /// `s'_{alpha,rho}`) onto a word agreeing with it on their overlap.
    pub fn is_fixed_by<T: Scalar>(
        &self,
        alpha: &QuadraticNumber<T>,
        rho: &QuadraticNumber<T>,
        n: usize,
        rep: Representative,
    ) -> Result<bool> {
        if n < 2 {
            return Err(Error::Domain("prefix length must be at least 2".into()));
        }
        let w = sturmian(alpha, rho, n, rep)?;
        Ok(maps_prefix_onto(self, &w, &w))
    }
}

/// `sigma(source)` and `target` agree on their common prefix.
pub fn maps_prefix_onto(sigma: &BinaryMorphism, source: &BinaryWord, target: &BinaryWord) -> bool {
    let image = sigma.apply_prefix(source, target.len());
    let k = image.len().min(target.len());
    image.prefix(k) == target.prefix(k)
}

impl fmt::Display for BinaryMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0->{},1->{}", self.image0, self.image1)
    }
}

impl fmt::Debug for BinaryMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMorphism({self})")
    }
}

/// `0->WORD,1->WORD`, whitespace ignored.
impl FromStr for BinaryMorphism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (left, right) = compact
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected `0->W,1->W`, got `{s}`")))?;
        let image0 = left
            .strip_prefix("0->")
            .ok_or_else(|| Error::Parse(format!("expected `0->` in `{s}`")))?;
        let image1 = right
            .strip_prefix("1->")
            .ok_or_else(|| Error::Parse(format!("expected `1->` in `{s}`")))?;
        Self::new(image0.parse()?, image1.parse()?).map_err(|_| Error::Parse(format!("empty image in `{s}`")))
    }
}

/// The named generators: `phi0 = G = psi3`, `phi1 = psi1`, and `psi1..psi8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Phi0,
    Phi1,
    Psi(u8),
}

impl Generator {
    pub fn psi(i: u8) -> Result<Self> {
        if (1..=8).contains(&i) {
            Ok(Generator::Psi(i))
        } else {
            Err(Error::Domain(format!("psi{i} does not exist")))
        }
    }

    pub fn morphism(self) -> BinaryMorphism {
        let (a, b) = match self {
            Generator::Phi0 => ("0", "01"),
            Generator::Phi1 => ("01", "0"),
            Generator::Psi(1) => ("01", "0"),
            Generator::Psi(2) => ("10", "0"),
            Generator::Psi(3) => ("0", "01"),
            Generator::Psi(4) => ("0", "10"),
            Generator::Psi(5) => ("1", "10"),
            Generator::Psi(6) => ("1", "01"),
            Generator::Psi(7) => ("10", "1"),
            Generator::Psi(8) => ("01", "1"),
            Generator::Psi(i) => unreachable!("psi{i} is rejected on construction"),
        };
        BinaryMorphism::lit(a, b)
    }

    /// The elementary index `i` of the matching `psi_i`.
    pub fn psi_index(self) -> u8 {
        match self {
            Generator::Phi0 => 3,
            Generator::Phi1 => 1,
            Generator::Psi(i) => i,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Phi0 => f.write_str("phi0"),
            Generator::Phi1 => f.write_str("phi1"),
            Generator::Psi(i) => write!(f, "psi{i}"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "phi0" => Ok(Generator::Phi0),
            "phi1" => Ok(Generator::Phi1),
            _ => s
                .strip_prefix("psi")
                .and_then(|i| i.parse::<u8>().ok())
                .and_then(|i| Generator::psi(i).ok())
                .ok_or_else(|| Error::Parse(format!("unknown generator `{s}`"))),
        }
    }
}

/// A two-element generating set, e.g. `{psi3, psi8}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSet(pub Generator, pub Generator);

impl GeneratorSet {
    pub const PHI: GeneratorSet = GeneratorSet(Generator::Phi0, Generator::Phi1);
    pub const PSI13: GeneratorSet = GeneratorSet(Generator::Psi(1), Generator::Psi(3));
    pub const PSI24: GeneratorSet = GeneratorSet(Generator::Psi(2), Generator::Psi(4));
    pub const PSI38: GeneratorSet = GeneratorSet(Generator::Psi(3), Generator::Psi(8));
    pub const PSI47: GeneratorSet = GeneratorSet(Generator::Psi(4), Generator::Psi(7));
    pub const PSI57: GeneratorSet = GeneratorSet(Generator::Psi(5), Generator::Psi(7));
    pub const PSI68: GeneratorSet = GeneratorSet(Generator::Psi(6), Generator::Psi(8));

    pub fn contains(&self, g: Generator) -> bool {
        self.0 == g || self.1 == g
    }

    pub fn generators(&self) -> [Generator; 2] {
        [self.0, self.1]
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

impl FromStr for GeneratorSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let gens: Vec<Generator> = inner.split(',').map(str::parse).collect::<Result<_>>()?;
        match gens.as_slice() {
            [a, b] if a != b => Ok(GeneratorSet(*a, *b)),
            _ => Err(Error::Parse(format!(
                "expected two distinct generators, got `{s}`"
            ))),
        }
    }
}

/// A product `g1 ∘ g2 ∘ ... ∘ gm` over a declared generating set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    set: GeneratorSet,
    indices: Vec<Generator>,
}

impl GeneratorWord {
    pub fn new(set: GeneratorSet, indices: Vec<Generator>) -> Result<Self> {
        if let Some(bad) = indices.iter().find(|g| !set.contains(**g)) {
            return Err(Error::Domain(format!("{bad} is not in {set}")));
        }
        Ok(Self { set, indices })
    }

    /// Parses a comma-separated label list over a fixed set.
    pub fn parse_in(set: GeneratorSet, s: &str) -> Result<Self> {
        let s = s.trim();
        let indices = if s.is_empty() {
            Vec::new()
        } else {
            s.split(',').map(str::parse).collect::<Result<_>>()?
        };
        Self::new(set, indices)
    }

    pub fn set(&self) -> GeneratorSet {
        self.set
    }

    pub fn indices(&self) -> &[Generator] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn to_morphism(&self) -> BinaryMorphism {
        self.indices
            .iter()
            .fold(BinaryMorphism::identity(), |acc, g| acc.compose(&g.morphism()))
    }

    pub fn concat(&self, other: &GeneratorWord) -> Result<GeneratorWord> {
        let mut indices = self.indices.clone();
        indices.extend_from_slice(&other.indices);
        GeneratorWord::new(self.set, indices)
    }

    fn require(&self, set: GeneratorSet) -> Result<()> {
        if self.set == set || self.indices.iter().all(|g| set.contains(*g)) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{self} is not a word over {set}")))
        }
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        f.write_str(&labels.join(","))
    }
}

impl FromStr for GeneratorWord {
    type Err = Error;

    /// Infers the generating set from the labels used.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let indices: Vec<Generator> = if s.is_empty() {
            Vec::new()
        } else {
            s.split(',').map(str::parse).collect::<Result<_>>()?
        };
        let mut distinct: Vec<Generator> = indices.clone();
        distinct.sort();
        distinct.dedup();
        let set = match distinct.as_slice() {
            [] => GeneratorSet::PSI13,
            [a, b] => GeneratorSet(*a, *b),
            [g] => default_partner(*g),
            _ => return Err(Error::Parse(format!("`{s}` uses more than two generators"))),
        };
        GeneratorWord::new(set, indices)
    }
}

fn default_partner(g: Generator) -> GeneratorSet {
    match g {
        Generator::Phi0 | Generator::Phi1 => GeneratorSet::PHI,
        Generator::Psi(1) => GeneratorSet::PSI13,
        Generator::Psi(2) => GeneratorSet::PSI24,
        Generator::Psi(3) | Generator::Psi(8) => GeneratorSet::PSI38,
        Generator::Psi(4) | Generator::Psi(7) => GeneratorSet::PSI47,
        Generator::Psi(5) => GeneratorSet::PSI57,
        Generator::Psi(6) => GeneratorSet::PSI68,
        Generator::Psi(i) => unreachable!("psi{i}"),
    }
}

/// For `gamma` over `{psi1, psi3}`: `gamma(0)` ends in 0 iff `psi1`
/// occurs an even number of times.
pub fn ends_in_zero(gamma: &GeneratorWord) -> Result<bool> {
    gamma.require(GeneratorSet::PSI13)?;
    let ones = gamma
        .indices()
        .iter()
        .filter(|g| **g == Generator::Psi(1))
        .count();
    Ok(ones % 2 == 0)
}

/// The conjugate `Psi` of `gamma` with `u Psi(a) = gamma(a) u`, where `u`
/// is `gamma(0)` without its final `0`.
pub fn psi_conjugate(gamma: &BinaryMorphism) -> Result<BinaryMorphism> {
    if gamma.image0().last() != Some(0) {
        return Err(Error::ConjugationUndefined(format!(
            "{gamma}: image of 0 does not end in 0"
        )));
    }
    let u = gamma.image0().prefix(gamma.image0().len() - 1);
    let conj = |a: u8| -> Result<BinaryWord> {
        let full = gamma.image(a).concat(&u);
        if !full.starts_with(&u) {
            return Err(Error::InternalConsistency(format!(
                "{gamma}: gamma({a}) u does not start with u = {u}"
            )));
        }
        BinaryWord::new(full.symbols()[u.len()..].to_vec())
    };
    BinaryMorphism::new(conj(0)?, conj(1)?)
}

/// The homomorphism swapping `psi3 <-> psi8`.
pub fn star(psi: &GeneratorWord) -> Result<GeneratorWord> {
    psi.require(GeneratorSet::PSI38)?;
    let swapped = psi
        .indices()
        .iter()
        .map(|g| match g {
            Generator::Psi(3) => Generator::Psi(8),
            _ => Generator::Psi(3),
        })
        .collect();
    GeneratorWord::new(GeneratorSet::PSI38, swapped)
}

/// Codes `psi3 i2..im` over `{psi3, psi8}` as a word over `{psi1, psi3}`:
/// add `(i2..im, 3)` to `(3, i2..im)` position-wise with `3+3 = 8+8 = 3`,
/// `3+8 = 8+3 = 8`, then rename 8 to 1.
pub fn remark1_coding(psi: &GeneratorWord) -> Result<GeneratorWord> {
    psi.require(GeneratorSet::PSI38)?;
    let idx = psi.indices();
    if idx.first() != Some(&Generator::Psi(3)) {
        return Err(Error::Domain(format!("{psi} must start with psi3")));
    }
    let shifted_left = idx[1..].iter().copied().chain([Generator::Psi(3)]);
    let shifted_right = [Generator::Psi(3)].into_iter().chain(idx[1..].iter().copied());
    let coded = shifted_left
        .zip(shifted_right)
        .map(|(x, y)| {
            if x == y {
                Generator::Psi(3)
            } else {
                Generator::Psi(1)
            }
        })
        .collect();
    GeneratorWord::new(GeneratorSet::PSI13, coded)
}

/// The unique factorization of `sigma` over `set`.
///
/// Peels left factors off the incidence matrix (a factor is admissible
/// when the quotient stays non-negative and strictly smaller), then checks
/// the candidate by recomposing the images literally.
pub fn decompose(sigma: &BinaryMorphism, set: GeneratorSet) -> Result<GeneratorWord> {
    let target: Matrix2<i64> = sigma.incidence_matrix();
    let gens = set.generators();
    let mats: Vec<Matrix2<i64>> = gens.iter().map(|g| g.morphism().incidence_matrix()).collect();

    fn search(
        m: &Matrix2<i64>,
        gens: &[Generator; 2],
        mats: &[Matrix2<i64>],
        sigma: &BinaryMorphism,
        set: GeneratorSet,
        acc: &mut Vec<Generator>,
    ) -> Option<GeneratorWord> {
        if *m == Matrix2::identity() {
            let word = GeneratorWord::new(set, acc.clone()).ok()?;
            return (word.to_morphism() == *sigma).then_some(word);
        }
        for (g, mat) in gens.iter().zip(mats) {
            let Some(rest) = m.left_divide(mat) else { continue };
            if rest.is_non_negative() && rest.entry_sum() < m.entry_sum() {
                acc.push(*g);
                if let Some(found) = search(&rest, gens, mats, sigma, set, acc) {
                    return Some(found);
                }
                acc.pop();
            }
        }
        None
    }

    search(&target, &gens, &mats, sigma, set, &mut Vec::new())
        .ok_or_else(|| Error::NotInMonoid(format!("{set} (morphism {sigma})")))
}
