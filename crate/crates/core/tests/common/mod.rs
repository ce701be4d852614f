#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use sturmkit::exactnum::QuadraticNumber;
use sturmkit::morphisms::{Generator, GeneratorSet, GeneratorWord};
use sturmkit::trees::{sturm_number_at, NodeAddress};

pub type Q = QuadraticNumber<BigInt>;

pub fn q(s: &str) -> Q {
    s.parse().unwrap()
}

/// Deterministic runner settings: fixed seed, no persistence files.
pub fn config(cases: u32, seed: u64) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

/// `(p + q sqrt(d)) / r` with coefficients bounded by `bound` and `d` not a square.
pub fn surd(bound: i64) -> impl Strategy<Value = Q> {
    let nonzero = (1..=bound).prop_flat_map(|v| prop_oneof![Just(v), Just(-v)]);
    (-bound..=bound, nonzero.clone(), 2..=100i64, nonzero)
        .prop_filter("square radicand", |(_, _, d, _)| {
            let s = (*d as f64).sqrt() as i64;
            (s - 1..=s + 1).all(|t| t * t != *d)
        })
        .prop_map(|(p, q, d, r)| Q::from_surd_i64(p, q, d, r).unwrap())
}

/// Irrational quadratic numbers in `(0, 1)`.
pub fn unit_surd() -> impl Strategy<Value = Q> {
    surd(30).prop_map(|x| x.fract())
}

pub fn sturm_number() -> impl Strategy<Value = Q> {
    unit_surd().prop_filter("not a Sturm number", |x| x.is_sturm_number())
}

/// A node of the phi tree off the left edge, at most `max_len` deep.
pub fn tree_address(max_len: usize) -> impl Strategy<Value = NodeAddress> {
    prop::collection::vec(0u8..=1, 1..=max_len)
        .prop_filter("left edge", |bits| bits.contains(&1))
        .prop_map(|bits| NodeAddress::new(bits).unwrap())
}

/// Slopes of the Sturm tree at addresses of length <= 6.
pub fn tree_slope() -> impl Strategy<Value = Q> {
    tree_address(6).prop_map(|a| sturm_number_at::<BigInt>(&a).unwrap().unwrap())
}

pub fn word_over(
    set: GeneratorSet,
    len: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = GeneratorWord> {
    prop::collection::vec(prop::bool::ANY, len).prop_map(move |bits| {
        let indices = bits.into_iter().map(|b| if b { set.1 } else { set.0 }).collect();
        GeneratorWord::new(set, indices).unwrap()
    })
}

pub const SETS: [GeneratorSet; 6] = [
    GeneratorSet::PSI13,
    GeneratorSet::PSI24,
    GeneratorSet::PSI38,
    GeneratorSet::PSI47,
    GeneratorSet::PSI57,
    GeneratorSet::PSI68,
];

pub fn psi(i: u8) -> Generator {
    Generator::psi(i).unwrap()
}
