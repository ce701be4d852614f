//! Breadth-first search for a morphism fixing a given Sturmian word.
//!
//! Words over a two-generator set are enumerated by length and, within a
//! length, lexicographically (first generator before second). Each one is
//! solved exactly with [`fixed_point_solve`]; a candidate whose slope and
//! intercept match the target is accepted once its fixer is checked on
//! [`VERIFY_PREFIX`] symbols.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::QuadraticNumber;
use crate::morphisms::{BinaryMorphism, Generator, GeneratorSet, GeneratorWord};
use crate::scalar::Scalar;
use crate::solver::{fixed_point_solve, VERIFY_PREFIX};
use crate::words::Representative;

pub const DEFAULT_MAX_DEPTH: usize = 10;

/// Which intercept the fixed word has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RhoKind {
    /// `rho = alpha`: the characteristic word.
    Alpha,
    Zero,
    OneMinusAlpha,
}

impl RhoKind {
    pub fn rho<T: Scalar>(self, alpha: &QuadraticNumber<T>) -> QuadraticNumber<T> {
        match self {
            RhoKind::Alpha => alpha.clone(),
            RhoKind::Zero => QuadraticNumber::zero(),
            RhoKind::OneMinusAlpha => QuadraticNumber::one() - alpha.clone(),
        }
    }
}

impl fmt::Display for RhoKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RhoKind::Alpha => "alpha",
            RhoKind::Zero => "zero",
            RhoKind::OneMinusAlpha => "one-minus-alpha",
        })
    }
}

impl FromStr for RhoKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "alpha" => Ok(RhoKind::Alpha),
            "zero" | "0" => Ok(RhoKind::Zero),
            "one-minus-alpha" | "1-alpha" => Ok(RhoKind::OneMinusAlpha),
            other => Err(Error::Parse(format!("unknown rho kind `{other}`"))),
        }
    }
}

/// The monoid searched for a target.
///
/// Slopes above 1/2 use the exchange-conjugate generators; `{psi3, psi8}`
/// and `{psi4, psi7}` are exchanged into each other, so the zero-intercept
/// search keeps them for every slope.
pub fn search_set<T: Scalar>(alpha: &QuadraticNumber<T>, kind: RhoKind, ceiling: bool) -> GeneratorSet {
    let small = (alpha.clone() + alpha.clone()) < QuadraticNumber::one();
    match (kind, small) {
        (RhoKind::Alpha, true) => GeneratorSet::PHI,
        (RhoKind::Alpha, false) => GeneratorSet(Generator::Psi(7), Generator::Psi(5)),
        (RhoKind::Zero, _) if ceiling => GeneratorSet::PSI47,
        (RhoKind::Zero, _) => GeneratorSet::PSI38,
        (RhoKind::OneMinusAlpha, true) => GeneratorSet::PSI24,
        (RhoKind::OneMinusAlpha, false) => GeneratorSet(Generator::Psi(6), Generator::Psi(8)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoundMorphism<T: Scalar> {
    pub alpha: QuadraticNumber<T>,
    pub rho: QuadraticNumber<T>,
    pub representative: Representative,
    /// The word describing `morphism`; doubled when the solved word
    /// exchanges floor and ceiling codings.
    pub generator_word: GeneratorWord,
    pub morphism: BinaryMorphism,
    /// Length of the solved word before any doubling.
    pub depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoundRecord {
    pub alpha: String,
    pub rho: String,
    pub representative: Representative,
    pub generator_word: String,
    pub morphism: String,
    pub depth: usize,
}

impl<T: Scalar> FoundMorphism<T> {
    pub fn record(&self) -> FoundRecord {
        FoundRecord {
            alpha: self.alpha.to_string(),
            rho: self.rho.to_string(),
            representative: self.representative,
            generator_word: self.generator_word.to_string(),
            morphism: self.morphism.to_string(),
            depth: self.depth,
        }
    }
}

/// Words of length `n` over `set` in lexicographic order.
fn words_of_length(set: GeneratorSet, n: usize) -> impl Iterator<Item = GeneratorWord> {
    (0..1u64 << n).map(move |k| {
        let indices = (0..n)
            .map(|i| if (k >> (n - 1 - i)) & 1 == 0 { set.0 } else { set.1 })
            .collect();
        GeneratorWord::new(set, indices).expect("generators of the set")
    })
}

/// Finds a verified morphism of minimal depth fixing the floor (or
/// ceiling) word with slope `alpha` and the intercept chosen by `kind`.
pub fn find_fixing_morphism<T: Scalar>(
    alpha: &QuadraticNumber<T>,
    kind: RhoKind,
    ceiling: bool,
    max_depth: usize,
) -> Result<FoundMorphism<T>> {
    if !alpha.is_sturm_number() {
        return Err(Error::Domain(format!("{alpha} is not a Sturm number")));
    }
    let rho = kind.rho(alpha);
    let rep = if ceiling {
        Representative::Ceiling
    } else {
        Representative::Floor
    };
    let set = search_set(alpha, kind, ceiling);
    for depth in 1..=max_depth {
        for word in words_of_length(set, depth) {
            let Ok(sol) = fixed_point_solve::<T>(&word) else {
                continue;
            };
            if sol.alpha != *alpha || sol.rho.fract() != rho.fract() {
                continue;
            }
            if !sol.floor_fixing.is_fixed_by(alpha, &rho, VERIFY_PREFIX, rep)? {
                continue;
            }
            let generator_word = if sol.swaps { word.concat(&word)? } else { word };
            return Ok(FoundMorphism {
                alpha: alpha.clone(),
                rho,
                representative: rep,
                generator_word,
                morphism: sol.floor_fixing,
                depth,
            });
        }
    }
    Err(Error::NotFound(format!(
        "no morphism over {set} of length <= {max_depth} fixes the {rep} word with alpha = {alpha}, rho = {kind}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Q = QuadraticNumber<BigInt>;

    fn q(s: &str) -> Q {
        s.parse().unwrap()
    }

    #[test]
    fn fibonacci() {
        let f = find_fixing_morphism(&q("(3-1*sqrt(5))/2"), RhoKind::Alpha, false, 10).unwrap();
        assert_eq!(f.generator_word.to_string(), "phi1");
        assert_eq!(f.morphism.to_string(), "0->01,1->0");
    }

    #[test]
    fn fibonacci_one_minus_alpha() {
        let f = find_fixing_morphism(&q("(3-1*sqrt(5))/2"), RhoKind::OneMinusAlpha, false, 10).unwrap();
        assert_eq!(f.morphism.to_string(), "0->010,1->10");
        assert_eq!(f.generator_word.to_string(), "psi2,psi2");
    }

    #[test]
    fn zero_intercept() {
        let f = find_fixing_morphism(&q("(3-1*sqrt(5))/2"), RhoKind::Zero, false, 8).unwrap();
        assert_eq!(f.generator_word.to_string(), "psi3,psi8");
        assert_eq!(f.morphism.to_string(), "0->001,1->01");

        let f = find_fixing_morphism(&q("(-1+1*sqrt(13))/6"), RhoKind::Zero, false, 10).unwrap();
        assert_eq!(f.morphism.to_string(), "0->0010101,1->0010101001010101");
        assert_eq!(f.depth, 6);
    }

    #[test]
    fn large_slopes_and_ceilings() {
        let golden = q("(-1+1*sqrt(5))/2");
        for kind in [RhoKind::Alpha, RhoKind::Zero, RhoKind::OneMinusAlpha] {
            for ceiling in [false, true] {
                let f = find_fixing_morphism(&golden, kind, ceiling, 10).unwrap();
                let rep = if ceiling {
                    Representative::Ceiling
                } else {
                    Representative::Floor
                };
                assert!(f
                    .morphism
                    .is_fixed_by(&golden, &kind.rho(&golden), 300, rep)
                    .unwrap());
            }
        }
    }

    #[test]
    fn failures() {
        assert!(matches!(
            find_fixing_morphism(&q("(-1+1*sqrt(13))/6"), RhoKind::Zero, false, 3),
            Err(Error::NotFound(_))
        ));
        assert!(matches!(
            find_fixing_morphism(&q("(5-1*sqrt(5))/10"), RhoKind::Alpha, false, 10),
            Err(Error::Domain(_))
        ));
    }
}
