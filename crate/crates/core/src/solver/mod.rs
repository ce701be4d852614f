//! Fractional-linear actions of the elementary morphisms on `(alpha, rho)`
//! and exact solving of their fixed-point equations.
//!
//! `psi_i(s_{x,y})` is again a Sturmian word with parameters `T_i(x, y)`,
//! where every `T_i` has the shape
//!
//! ```text
//! x' = (a x + b) / (c x + d),    y' = (p y + q x + r) / (c x + d).
//! ```
//!
//! The shape is closed under composition, so `T_psi` for a product of
//! elementary morphisms is again one map, and `T_psi(x, y) = (x, y)` is a
//! quadratic equation in `x` followed by a linear equation in `y`.

pub mod fit;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::QuadraticNumber;
use crate::morphisms::{BinaryMorphism, GeneratorWord};
use crate::scalar::Scalar;
use crate::words::{lozenge_index, Representative};

/// `(x, y) ↦ ((a x + b)/(c x + d), (p y + q x + r)/(c x + d))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FracLinMap<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
    pub p: T,
    pub q: T,
    pub r: T,
    /// Set when the map sends floor words to ceiling words (and back).
    pub ceiling_flag: bool,
}

pub type ElementaryRow = (i64, i64, i64, i64, i64, i64, i64, bool);

/// Coefficients `(a, b, c, d, p, q, r, ceiling)` of `T_1 .. T_8`.
///
/// `T_1`, `T_3` and `T_8` are the classical ones; the others were obtained
/// with [`fit::fit_elementary_map`] and are re-derived by the test suite.
/// The flagged maps send floor words to ceiling words and ceiling words to
/// floor words.
pub const ELEMENTARY_TABLE: [ElementaryRow; 8] = [
    (-1, 1, -1, 2, -1, 0, 1, true),
    (-1, 1, -1, 2, -1, -1, 2, true),
    (1, 0, 1, 1, 1, 0, 0, false),
    (1, 0, 1, 1, 1, 1, 0, false),
    (0, 1, 1, 1, -1, 1, 1, true),
    (0, 1, 1, 1, -1, 0, 1, true),
    (0, 1, -1, 2, 1, -1, 1, false),
    (0, 1, -1, 2, 1, 0, 0, false),
];

impl<T: Scalar> FracLinMap<T> {
    #[allow(clippy::too_many_arguments)]
    pub fn from_i64(a: i64, b: i64, c: i64, d: i64, p: i64, q: i64, r: i64, ceiling_flag: bool) -> Self {
        let t = |v: i64| T::from_i64(v).expect("small coefficient");
        Self {
            a: t(a),
            b: t(b),
            c: t(c),
            d: t(d),
            p: t(p),
            q: t(q),
            r: t(r),
            ceiling_flag,
        }
    }

    pub fn identity() -> Self {
        Self::from_i64(1, 0, 0, 1, 1, 0, 0, false)
    }

    /// `T_i` for `i` in `1..=8`.
    pub fn elementary(i: u8) -> Result<Self> {
        if !(1..=8).contains(&i) {
            return Err(Error::Domain(format!("no elementary map T{i}")));
        }
        let (a, b, c, d, p, q, r, f) = ELEMENTARY_TABLE[usize::from(i - 1)];
        Ok(Self::from_i64(a, b, c, d, p, q, r, f))
    }

    /// Equal coefficients up to a common sign, i.e. the same action on `(x, y)`.
    pub fn same_action(&self, other: &Self) -> bool {
        let neg = |m: &Self| Self {
            a: -m.a.clone(),
            b: -m.b.clone(),
            c: -m.c.clone(),
            d: -m.d.clone(),
            p: -m.p.clone(),
            q: -m.q.clone(),
            r: -m.r.clone(),
            ceiling_flag: m.ceiling_flag,
        };
        self == other || *self == neg(other)
    }

    pub fn det(&self) -> T {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &Self) -> Self {
        let (sa, sb, sc, sd) = (&self.a, &self.b, &self.c, &self.d);
        let (ia, ib, ic, id) = (&inner.a, &inner.b, &inner.c, &inner.d);
        let mul = |x: &T, y: &T| x.clone() * y.clone();
        Self {
            a: mul(sa, ia) + mul(sb, ic),
            b: mul(sa, ib) + mul(sb, id),
            c: mul(sc, ia) + mul(sd, ic),
            d: mul(sc, ib) + mul(sd, id),
            p: mul(&self.p, &inner.p),
            q: mul(&self.p, &inner.q) + mul(&self.q, ia) + mul(&self.r, ic),
            r: mul(&self.p, &inner.r) + mul(&self.q, ib) + mul(&self.r, id),
            ceiling_flag: self.ceiling_flag ^ inner.ceiling_flag,
        }
    }

    /// `T_{i1} ∘ ... ∘ T_{im}` for the word `psi_{i1} ... psi_{im}`.
    pub fn for_word(word: &GeneratorWord) -> Self {
        word.indices().iter().fold(Self::identity(), |acc, g| {
            acc.compose(&Self::elementary(g.psi_index()).expect("generator index in 1..=8"))
        })
    }

    /// Evaluates the map exactly.
    pub fn apply(
        &self,
        x: &QuadraticNumber<T>,
        y: &QuadraticNumber<T>,
    ) -> Result<(QuadraticNumber<T>, QuadraticNumber<T>)> {
        let k = |v: &T| QuadraticNumber::from_integer(v.clone());
        let den = k(&self.c).checked_mul(x)?.checked_add(&k(&self.d))?;
        let xn = k(&self.a).checked_mul(x)?.checked_add(&k(&self.b))?;
        let yn = k(&self.p)
            .checked_mul(y)?
            .checked_add(&k(&self.q).checked_mul(x)?)?
            .checked_add(&k(&self.r))?;
        Ok((xn.checked_div(&den)?, yn.checked_div(&den)?))
    }

    /// Discriminant `(d - a)^2 + 4bc` of `c x^2 + (d - a) x - b = 0`.
    pub fn discriminant(&self) -> T {
        let da = self.d.clone() - self.a.clone();
        let four = T::from_i64(4).expect("4");
        da.clone() * da + four * self.b.clone() * self.c.clone()
    }

    /// Solves `T(x, y) = (x, y)` with `x` an irrational root in `(0, 1)`.
    pub fn solve(&self) -> Result<MapFixedPoint<T>> {
        if self.c.is_zero() {
            return Err(Error::NoFixedPoint(format!(
                "{self}: x-equation is linear, no irrational root"
            )));
        }
        let disc = self.discriminant();
        if !disc.is_positive() {
            return Err(Error::NoFixedPoint(format!("{self}: discriminant {disc} <= 0")));
        }
        let root = disc.sqrt();
        if root.clone() * root == disc {
            return Err(Error::NoFixedPoint(format!(
                "{self}: discriminant {disc} is a square, roots are rational"
            )));
        }
        let two_c = self.c.clone() + self.c.clone();
        let a_minus_d = self.a.clone() - self.d.clone();
        let candidates: Vec<QuadraticNumber<T>> = [T::one(), -T::one()]
            .into_iter()
            .map(|sign| QuadraticNumber::from_surd(a_minus_d.clone(), sign, disc.clone(), two_c.clone()))
            .collect::<Result<_>>()?;
        let inside: Vec<_> = candidates
            .into_iter()
            .filter(QuadraticNumber::in_open_unit_interval)
            .collect();
        let alpha = match inside.as_slice() {
            [one] => one.clone(),
            [] => {
                return Err(Error::NoFixedPoint(format!("{self}: no root in (0,1)")));
            }
            _ => {
                return Err(Error::NoFixedPoint(format!("{self}: both roots lie in (0,1)")));
            }
        };

        // y (c alpha + d - p) = q alpha + r
        let k = |v: &T| QuadraticNumber::from_integer(v.clone());
        let coeff = k(&self.c) * alpha.clone() + k(&self.d) - k(&self.p);
        let rhs = k(&self.q) * alpha.clone() + k(&self.r);
        if coeff.is_zero() {
            return Err(if rhs.is_zero() {
                Error::AmbiguousRho(format!("{self}: every y is fixed at alpha = {alpha}"))
            } else {
                Error::NoFixedPoint(format!("{self}: linear equation for y is inconsistent"))
            });
        }
        let raw_rho = rhs / coeff;
        let in_box = !raw_rho.is_negative() && !(raw_rho.clone() - QuadraticNumber::one()).is_positive();
        let (rho, rho_reduced) = if in_box {
            (raw_rho, false)
        } else {
            (raw_rho.fract(), true)
        };
        // Floor and ceiling words coincide off the orbit of the integers.
        // On it, the action of the map is valid for floor words with
        // intercept in [0, 1) and for ceiling words with intercept in (0, 1].
        let (representative, swaps) = if lozenge_index(&alpha, &rho)?.is_none() {
            (Representative::Floor, false)
        } else if self.ceiling_flag {
            (Representative::Ceiling, true)
        } else if rho == QuadraticNumber::one() {
            (Representative::Ceiling, false)
        } else {
            (Representative::Floor, false)
        };
        Ok(MapFixedPoint {
            alpha,
            rho,
            rho_reduced,
            representative,
            swaps,
        })
    }
}

impl<T: Scalar> fmt::Display for FracLinMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(({}x+{})/({}x+{}), ({}y+{}x+{})/({}x+{}))",
            self.a, self.b, self.c, self.d, self.p, self.q, self.r, self.c, self.d
        )?;
        if self.ceiling_flag {
            f.write_str(" [ceiling]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapFixedPoint<T: Scalar> {
    pub alpha: QuadraticNumber<T>,
    pub rho: QuadraticNumber<T>,
    /// The raw `y` solution left `[0, 1]` and was reduced mod 1.
    pub rho_reduced: bool,
    /// Coding of the word at `(alpha, rho)` that the map describes: the
    /// fixed word itself, or the image of the floor word when `swaps` is set.
    pub representative: Representative,
    /// `psi` exchanges the floor and ceiling words at the fixed point.
    pub swaps: bool,
}

/// Fixed point of `T_psi` together with the morphism data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution<T: Scalar> {
    pub alpha: QuadraticNumber<T>,
    pub rho: QuadraticNumber<T>,
    pub rho_reduced: bool,
    pub representative: Representative,
    pub swaps: bool,
    pub generator_word: GeneratorWord,
    pub morphism: BinaryMorphism,
    /// `psi` itself, or `psi^2` when `psi` swaps floor and ceiling words;
    /// it fixes the word with parameters `(alpha, rho)` in the coding
    /// `representative` (both codings when `swaps`).
    pub floor_fixing: BinaryMorphism,
    pub map: FracLinMap<T>,
}

/// JSON record of a [`Solution`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionRecord {
    pub alpha: String,
    pub rho: String,
    pub representative: Representative,
    pub morphism: String,
    pub generator_word: String,
    pub floor_fixing: String,
    pub swaps: bool,
    pub rho_reduced: bool,
    pub coefficients: [String; 7],
}

impl<T: Scalar> Solution<T> {
    pub fn record(&self) -> SolutionRecord {
        let m = &self.map;
        SolutionRecord {
            alpha: self.alpha.to_string(),
            rho: self.rho.to_string(),
            representative: self.representative,
            morphism: self.morphism.to_string(),
            generator_word: self.generator_word.to_string(),
            floor_fixing: self.floor_fixing.to_string(),
            swaps: self.swaps,
            rho_reduced: self.rho_reduced,
            coefficients: [&m.a, &m.b, &m.c, &m.d, &m.p, &m.q, &m.r].map(ToString::to_string),
        }
    }
}

/// Prefix length on which solutions are checked against the morphism.
pub const VERIFY_PREFIX: usize = 300;

/// Solves `T_psi(x, y) = (x, y)` for `psi` given as a generator word.
///
/// The result is checked on [`VERIFY_PREFIX`] symbols; a map fixed point
/// whose word is not fixed is reported as [`Error::NoFixedPoint`].
pub fn fixed_point_solve<T: Scalar>(word: &GeneratorWord) -> Result<Solution<T>> {
    let map = FracLinMap::<T>::for_word(word);
    let fp = map.solve()?;
    let morphism = word.to_morphism();
    let floor_fixing = if fp.swaps {
        morphism.compose(&morphism)
    } else {
        morphism.clone()
    };
    if !floor_fixing.is_fixed_by(&fp.alpha, &fp.rho, VERIFY_PREFIX, fp.representative)? {
        return Err(Error::NoFixedPoint(format!(
            "{word}: {floor_fixing} does not fix the {} word at ({}, {})",
            fp.representative, fp.alpha, fp.rho
        )));
    }
    Ok(Solution {
        alpha: fp.alpha,
        rho: fp.rho,
        rho_reduced: fp.rho_reduced,
        representative: fp.representative,
        swaps: fp.swaps,
        generator_word: word.clone(),
        morphism,
        floor_fixing,
        map,
    })
}
