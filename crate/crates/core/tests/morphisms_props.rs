mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use sturmkit::matrix::Matrix2;
use sturmkit::morphisms::{
    decompose, ends_in_zero, psi_conjugate, remark1_coding, star, BinaryMorphism, GeneratorSet, GeneratorWord,
};
use sturmkit::solver::fixed_point_solve;
use sturmkit::words::{BinaryWord, Representative};

fn binary_word(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = BinaryWord> {
    prop::collection::vec(0u8..=1, len).prop_map(|v| BinaryWord::new(v).unwrap())
}

fn morphism() -> impl Strategy<Value = BinaryMorphism> {
    (binary_word(1..=6), binary_word(1..=6)).prop_map(|(a, b)| BinaryMorphism::new(a, b).unwrap())
}

/// Words over `{psi1, psi3}` whose image of 0 ends in 0.
fn even_word(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = GeneratorWord> {
    word_over(GeneratorSet::PSI13, len).prop_filter("odd number of psi1", |w| ends_in_zero(w).unwrap())
}

fn conjugating_word(gamma: &BinaryMorphism) -> BinaryWord {
    gamma.image0().prefix(gamma.image0().len() - 1)
}

proptest! {
    #![proptest_config(config(200, 0x401))]

    #[test]
    fn squares_give_palindromes(w in word_over(GeneratorSet::PSI13, 0..=8)) {
        let sq = w.to_morphism().power(2);
        let zero = BinaryWord::new(vec![0, 1]).unwrap().concat(sq.image0());
        let one = BinaryWord::new(vec![1, 0]).unwrap().concat(sq.image1());
        prop_assert!(zero.is_palindrome(), "{}", zero);
        prop_assert!(one.is_palindrome(), "{}", one);
    }

    #[test]
    fn time_reversal_is_an_involutive_homomorphism(s in morphism(), t in morphism()) {
        prop_assert_eq!(s.time_reversal().time_reversal(), s.clone());
        prop_assert_eq!(
            s.compose(&t).time_reversal(),
            s.time_reversal().compose(&t.time_reversal())
        );
    }

    #[test]
    fn incidence_is_multiplicative(s in morphism(), t in morphism()) {
        let st: Matrix2<BigInt> = s.compose(&t).incidence_matrix();
        prop_assert_eq!(st, s.incidence_matrix::<BigInt>() * t.incidence_matrix());
    }

    #[test]
    fn exchange_conjugation_is_an_involution(s in morphism()) {
        prop_assert_eq!(s.exchange_conjugate().exchange_conjugate(), s.clone());
        let e = BinaryMorphism::exchange();
        prop_assert_eq!(s.exchange_conjugate(), e.compose(&s).compose(&e));
    }
}

proptest! {
    #![proptest_config(config(100, 0x402))]

    #[test]
    fn conjugation_is_multiplicative(g in even_word(0..=6), d in even_word(0..=6)) {
        let (g, d) = (g.to_morphism(), d.to_morphism());
        prop_assert_eq!(
            psi_conjugate(&g.compose(&d)).unwrap(),
            psi_conjugate(&g).unwrap().compose(&psi_conjugate(&d).unwrap())
        );
    }

    #[test]
    fn conjugation_relation(g in even_word(0..=6), w in binary_word(0..=12)) {
        let g = g.to_morphism();
        let u = conjugating_word(&g);
        let conj = psi_conjugate(&g).unwrap();
        prop_assert_eq!(u.concat(&conj.apply(&w)), g.apply(&w).concat(&u));
    }

    #[test]
    fn star_is_exchanged_time_reversal(w in word_over(GeneratorSet::PSI38, 0..=8)) {
        let e = BinaryMorphism::exchange();
        let expected = e.compose(&w.to_morphism().time_reversal()).compose(&e);
        prop_assert_eq!(star(&w).unwrap().to_morphism(), expected);
    }

    #[test]
    fn parity_matches_the_last_letter(w in word_over(GeneratorSet::PSI13, 0..=10)) {
        prop_assert_eq!(ends_in_zero(&w).unwrap(), w.to_morphism().image0().last() == Some(0));
    }

    #[test]
    fn time_reversed_squares_fix_the_lozenge_pair(
        w in word_over(GeneratorSet::PSI13, 1..=6)
            .prop_filter("power of psi3", |w| w.indices().contains(&psi(1)))
    ) {
        let sol = fixed_point_solve::<BigInt>(&w).unwrap();
        prop_assert_eq!(&sol.rho, &sol.alpha);
        let rho = Q::one() - sol.alpha.clone();
        let sq = w.to_morphism().time_reversal().power(2);
        for rep in [Representative::Floor, Representative::Ceiling] {
            prop_assert!(sq.is_fixed_by(&sol.alpha, &rho, 300, rep).unwrap(), "{} {}", w, rep);
        }
    }

    #[test]
    fn conjugates_fix_the_zero_intercept_word(
        w in even_word(1..=6).prop_filter("power of psi3", |w| w.indices().contains(&psi(1)))
    ) {
        let sol = fixed_point_solve::<BigInt>(&w).unwrap();
        let conj = psi_conjugate(&w.to_morphism()).unwrap();
        prop_assert!(conj.is_fixed_by(&sol.alpha, &Q::zero(), 300, Representative::Floor).unwrap());
    }

    #[test]
    fn decomposition_inverts_composition(set_ix in 0usize..4, bits in prop::collection::vec(prop::bool::ANY, 0..=10)) {
        let set = [GeneratorSet::PHI, GeneratorSet::PSI38, GeneratorSet::PSI24, GeneratorSet::PSI47][set_ix];
        let indices = bits.into_iter().map(|b| if b { set.1 } else { set.0 }).collect();
        let w = GeneratorWord::new(set, indices).unwrap();
        prop_assert_eq!(decompose(&w.to_morphism(), set).unwrap(), w);
    }

    #[test]
    fn remark1_coding_inverts_conjugation(
        tail in prop::collection::vec(prop::bool::ANY, 0..=7)
    ) {
        let mut indices = vec![psi(3)];
        indices.extend(tail.into_iter().map(|b| if b { psi(8) } else { psi(3) }));
        let w = GeneratorWord::new(GeneratorSet::PSI38, indices).unwrap();
        let gamma = remark1_coding(&w).unwrap().to_morphism();
        prop_assert_eq!(psi_conjugate(&gamma).unwrap(), w.to_morphism(), "{}", w);
    }
}

#[test]
fn conjugation_relation_on_all_short_words() {
    let gammas = [
        "psi1,psi1",
        "psi1,psi3,psi1",
        "psi3,psi1,psi1,psi3",
        "psi1,psi3,psi3,psi1,psi3",
    ];
    for g in gammas {
        let g = g.parse::<GeneratorWord>().unwrap().to_morphism();
        let u = conjugating_word(&g);
        let conj = psi_conjugate(&g).unwrap();
        for len in 0..=12usize {
            for k in 0..1u32 << len {
                let w = BinaryWord::new((0..len).map(|i| ((k >> i) & 1) as u8).collect()).unwrap();
                assert_eq!(u.concat(&conj.apply(&w)), g.apply(&w).concat(&u));
            }
        }
    }
}

#[test]
fn lemma_psi1_psi3n_psi1() {
    for n in 0..=6usize {
        let mut gamma = vec!["psi1"];
        gamma.extend(std::iter::repeat_n("psi3", n));
        gamma.push("psi1");
        let gamma: GeneratorWord = gamma.join(",").parse().unwrap();
        let mut expected = vec!["psi3"];
        expected.extend(std::iter::repeat_n("psi8", n + 1));
        let expected: GeneratorWord = expected.join(",").parse().unwrap();
        assert_eq!(
            psi_conjugate(&gamma.to_morphism()).unwrap(),
            expected.to_morphism(),
            "n = {n}"
        );
    }
}

#[test]
fn parity_on_every_short_word() {
    for len in 0..=10usize {
        for k in 0..1u32 << len {
            let indices = (0..len)
                .map(|i| if (k >> i) & 1 == 1 { psi(1) } else { psi(3) })
                .collect();
            let w = GeneratorWord::new(GeneratorSet::PSI13, indices).unwrap();
            assert_eq!(
                ends_in_zero(&w).unwrap(),
                w.to_morphism().image0().last() == Some(0)
            );
        }
    }
}

/// `Psi` of `E gamma E` is `E` composed around the time reversal of `Psi_gamma`.
#[test]
fn conjugating_the_exchanged_morphism() {
    let e = BinaryMorphism::exchange();
    let mut checked = 0;
    for len in 0..=10usize {
        for k in 0..1u32 << len {
            let indices = (0..len)
                .map(|i| if (k >> i) & 1 == 1 { psi(1) } else { psi(3) })
                .collect();
            let w = GeneratorWord::new(GeneratorSet::PSI13, indices).unwrap();
            if !ends_in_zero(&w).unwrap() {
                continue;
            }
            let gamma = w.to_morphism();
            let swapped = psi_conjugate(&e.compose(&gamma).compose(&e)).unwrap();
            let expected = e
                .compose(&psi_conjugate(&gamma).unwrap().time_reversal())
                .compose(&e);
            assert_eq!(swapped, expected, "{w}");
            checked += 1;
        }
    }
    assert_eq!(checked, 1024);
}
