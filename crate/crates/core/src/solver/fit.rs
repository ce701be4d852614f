//! Recovering `T_i` from the morphism `psi_i` alone.
//!
//! Every candidate map with integer coefficients in `[-3, 3]` is screened
//! on two generic samples in floating point, and the survivors are checked
//! exactly: `psi_i(s_{alpha,rho})` must agree with the word generated at
//! `T(alpha, rho)` on 300 symbols for every sample. Candidates that differ
//! only by an integer shift of `y` generate the same words; the one keeping
//! `y` inside `[0, 1]` on all samples is selected.

use crate::error::{Error, Result};
use crate::exactnum::QuadraticNumber;
use crate::morphisms::{maps_prefix_onto, BinaryMorphism, Generator};
use crate::scalar::Scalar;
use crate::words::{sturmian, BinaryWord, Representative};

use super::FracLinMap;

pub const COEFF_BOUND: i64 = 3;
pub const FIT_PREFIX: usize = 300;
const SCREEN_PREFIX: usize = 24;

/// One `(alpha, rho)` sample.
#[derive(Clone, Debug)]
pub struct Sample<T: Scalar> {
    pub alpha: QuadraticNumber<T>,
    pub rho: QuadraticNumber<T>,
}

/// Twenty exact samples: five slopes, each with `rho` in
/// `{0, 1 - alpha, alpha, generic}` (the first three produce lozenge pairs
/// on one side of the map or the other).
pub fn default_samples<T: Scalar>() -> Vec<Sample<T>> {
    let slopes = [
        "(3-1*sqrt(5))/2",
        "(-1+1*sqrt(2))/1",
        "(-1+1*sqrt(13))/6",
        "(-1+1*sqrt(5))/2",
        "(0+1*sqrt(3))/3",
    ];
    let mut out = Vec::new();
    for s in slopes {
        let alpha: QuadraticNumber<T> = s.parse().expect("literal");
        let one = QuadraticNumber::one();
        let generic = (alpha.clone() * QuadraticNumber::from_i64(2)
            + "1/7".parse::<QuadraticNumber<T>>().expect("literal"))
        .fract();
        for rho in [
            QuadraticNumber::zero(),
            one - alpha.clone(),
            alpha.clone(),
            generic,
        ] {
            out.push(Sample {
                alpha: alpha.clone(),
                rho,
            });
        }
    }
    out
}

/// Behaviour of a fitted map on floor and ceiling inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FittedMap<T> {
    pub map: FracLinMap<T>,
    /// Output coding for a floor input.
    pub from_floor: Representative,
    /// Output coding for a ceiling input.
    pub from_ceiling: Representative,
}

fn float_word(alpha: f64, rho: f64, n: usize) -> Vec<u8> {
    let rho = rho - rho.floor();
    (0..n)
        .map(|k| {
            let k = k as f64;
            (((k + 1.0) * alpha + rho).floor() - (k * alpha + rho).floor()) as u8
        })
        .collect()
}

fn canonical(c: [i64; 7]) -> [i64; 7] {
    let g = c.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
    let mut c = c.map(|x| x / g.max(1));
    let lead = if c[2] != 0 { c[2] } else { c[3] };
    if lead < 0 {
        c = c.map(|x| -x);
    }
    c
}

fn all_reps() -> [Representative; 2] {
    [Representative::Floor, Representative::Ceiling]
}

/// Output codings matched on every sample for the given input coding.
fn matching_reps<T: Scalar>(
    map: &FracLinMap<T>,
    psi: &BinaryMorphism,
    samples: &[Sample<T>],
    input: Representative,
) -> Result<Vec<Representative>> {
    let mut ok = all_reps().to_vec();
    for s in samples {
        // ceiling words take their intercept in (0, 1], floor words in [0, 1)
        let rho = if input == Representative::Ceiling && s.rho.is_zero() {
            QuadraticNumber::one()
        } else {
            s.rho.clone()
        };
        let (x, y) = map.apply(&s.alpha, &rho)?;
        if !x.in_open_unit_interval() {
            return Ok(Vec::new());
        }
        let source = sturmian(&s.alpha, &s.rho, FIT_PREFIX, input)?;
        let image = psi.apply_prefix(&source, FIT_PREFIX);
        ok.retain(|&rep| {
            sturmian(&x, &y, image.len(), rep)
                .map(|t: BinaryWord| maps_prefix_onto(&BinaryMorphism::identity(), &image, &t))
                .unwrap_or(false)
        });
        if ok.is_empty() {
            break;
        }
    }
    Ok(ok)
}

fn y_in_box<T: Scalar>(map: &FracLinMap<T>, samples: &[Sample<T>]) -> bool {
    samples.iter().all(|s| match map.apply(&s.alpha, &s.rho) {
        Ok((_, y)) => !y.is_negative() && !(y - QuadraticNumber::one()).is_positive(),
        Err(_) => false,
    })
}

/// Fits `T_i` for the elementary morphism `psi_i`.
pub fn fit_elementary_map<T: Scalar>(i: u8, samples: &[Sample<T>]) -> Result<FittedMap<T>> {
    let psi = Generator::psi(i)?.morphism();
    let screen: Vec<(f64, f64, Vec<u8>)> = samples
        .iter()
        .filter(|s| !s.rho.is_zero() && s.rho != s.alpha && !(s.rho.clone() + s.alpha.clone()).is_integer())
        .take(2)
        .map(|s| {
            let w = sturmian(&s.alpha, &s.rho, SCREEN_PREFIX, Representative::Floor)
                .expect("sample slope in (0,1)");
            let image = psi.apply_prefix(&w, SCREEN_PREFIX);
            (s.alpha.to_f64(), s.rho.to_f64(), image.symbols().to_vec())
        })
        .collect();

    let range = -COEFF_BOUND..=COEFF_BOUND;
    let mut survivors: Vec<[i64; 7]> = Vec::new();
    for a in range.clone() {
        for b in range.clone() {
            for c in range.clone() {
                for d in range.clone() {
                    if a * d - b * c == 0 {
                        continue;
                    }
                    let xs: Option<Vec<(f64, f64)>> = screen
                        .iter()
                        .map(|(x, _, _)| {
                            let den = c as f64 * x + d as f64;
                            let xn = (a as f64 * x + b as f64) / den;
                            (den.abs() > 1e-9 && xn > 0.0 && xn < 1.0).then_some((xn, den))
                        })
                        .collect();
                    let Some(xs) = xs else { continue };
                    for p in range.clone() {
                        for q in range.clone() {
                            for r in range.clone() {
                                let hit = screen.iter().zip(&xs).all(|((x, y, target), (xn, den))| {
                                    let yn = (p as f64 * y + q as f64 * x + r as f64) / den;
                                    float_word(*xn, yn, target.len()) == *target
                                });
                                if hit {
                                    survivors.push(canonical([a, b, c, d, p, q, r]));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    survivors.sort();
    survivors.dedup();

    let mut fitted = Vec::new();
    for [a, b, c, d, p, q, r] in survivors {
        let map = FracLinMap::<T>::from_i64(a, b, c, d, p, q, r, false);
        let from_floor = matching_reps(&map, &psi, samples, Representative::Floor)?;
        let from_ceiling = matching_reps(&map, &psi, samples, Representative::Ceiling)?;
        if from_floor.is_empty() || from_ceiling.is_empty() || !y_in_box(&map, samples) {
            continue;
        }
        // prefer the floor target when the samples cannot tell them apart
        let from_floor = from_floor[0];
        let from_ceiling = if from_ceiling.contains(&from_floor.flipped()) {
            from_floor.flipped()
        } else {
            from_ceiling[0]
        };
        fitted.push(FittedMap {
            map: FracLinMap {
                ceiling_flag: from_floor == Representative::Ceiling,
                ..map
            },
            from_floor,
            from_ceiling,
        });
    }
    match fitted.len() {
        1 => Ok(fitted.remove(0)),
        0 => Err(Error::NotFound(format!("no map fits psi{i}"))),
        n => Err(Error::InternalConsistency(format!(
            "{n} maps fit psi{i}: {:?}",
            fitted.iter().map(|f| f.map.to_string()).collect::<Vec<_>>()
        ))),
    }
}
