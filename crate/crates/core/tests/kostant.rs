mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sl3res_core::field::lucas;
use sl3res_core::kostant::{
    big_rewrite_system, dimension_check, evaluate_poly, evaluate_word, lucas_binomial, multiply_divided,
    relation_suite, small_groebner_basis, small_relations, truncated_big_system, DividedMonomial, KostantElement,
    Window,
};
use sl3res_core::{Field, Fp, Polynomial, Rationals};

use common::weyl::Op;

/// The operator of a rational Kostant element.
fn op_of(x: &KostantElement<Rationals>) -> Op {
    let mut out = Op::default();
    for (m, c) in x.terms() {
        out.add_scaled(c, &Op::pbw(m.k_alpha, m.k_alphabeta, m.k_beta));
    }
    out
}

fn basis<F: Field>(f: &F, m: DividedMonomial) -> KostantElement<F> {
    KostantElement::basis(f.clone(), m)
}

#[test]
fn straightening_rules_hold_in_the_weyl_realisation() {
    let sys = big_rewrite_system(&Rationals, 9);
    for r in sys.rules() {
        let lhs = Op::word(&r.lhs, None);
        let mut rhs = Op::default();
        for (w, c) in r.rhs.terms() {
            rhs.add_scaled(c, &Op::word(w, None));
        }
        assert_eq!(lhs, rhs, "{} -> {}", r.lhs, sl3res_core::free_algebra::format_poly(&r.rhs));
    }
}

#[test]
fn straightening_rules_mod_p_are_reductions_of_integral_rules() {
    let over_q = big_rewrite_system(&Rationals, 9);
    for p in [2, 3, 5] {
        let f = Fp::new(p).unwrap();
        let over_p = big_rewrite_system(&f, 9);
        assert_eq!(over_q.len(), over_p.len());
        for (rq, rp) in over_q.rules().iter().zip(over_p.rules()) {
            assert_eq!(rq.lhs, rp.lhs);
            for (w, c) in rq.rhs.terms() {
                assert!(c.is_integer(), "{}: coefficient {c} is not integral", rq.lhs);
                assert_eq!(rp.rhs.coefficient(w), f.from_bigint(c.numer()), "{} at {w}, p={p}", rq.lhs);
            }
            assert!(rp.rhs.support().all(|w| !rq.rhs.coefficient(w).is_zero()));
        }
    }
}

#[test]
fn divided_multiplication_agrees_with_the_weyl_realisation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..120 {
        let mut mono = || DividedMonomial::new(rng.gen_range(0..5), rng.gen_range(0..4), rng.gen_range(0..5));
        let (x, y) = (mono(), mono());
        let prod = multiply_divided(&basis(&Rationals, x), &basis(&Rationals, y));
        assert_eq!(op_of(&prod), Op::pbw(x.k_alpha, x.k_alphabeta, x.k_beta).compose(&Op::pbw(y.k_alpha, y.k_alphabeta, y.k_beta)), "{x} * {y}");
    }
}

/// Integral structure constants reduce to the `F_p` product.
#[test]
fn divided_multiplication_mod_p_reduces_the_integral_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for p in [2, 3, 5] {
        let f = Fp::new(p).unwrap();
        for _ in 0..200 {
            let mut mono = || DividedMonomial::new(rng.gen_range(0..12), rng.gen_range(0..8), rng.gen_range(0..12));
            let (x, y) = (mono(), mono());
            let q = multiply_divided(&basis(&Rationals, x), &basis(&Rationals, y));
            let fp = multiply_divided(&basis(&f, x), &basis(&f, y));
            let mut reduced = KostantElement::zero(f);
            for (m, c) in q.terms() {
                assert!(c.is_integer());
                reduced.add_term(*m, f.from_bigint(c.numer()));
            }
            assert_eq!(fp, reduced, "{x} * {y} mod {p}");
        }
    }
}

#[test]
fn multiplication_is_associative_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let fields = [Fp::new(2).unwrap(), Fp::new(3).unwrap(), Fp::new(5).unwrap()];
    for i in 0..1000 {
        let f = fields[i % 3];
        let mut mono = || DividedMonomial::new(rng.gen_range(0..30), rng.gen_range(0..30), rng.gen_range(0..30));
        let (x, y, z) = (basis(&f, mono()), basis(&f, mono()), basis(&f, mono()));
        assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }
}

#[test]
fn lucas_agrees_with_factorials() {
    for p in [2u32, 3, 5, 7] {
        for n in 0..=200u64 {
            for k in 0..=n {
                let exact = common::factorial_binomial(n, k) % p;
                let exact = exact.to_u32().unwrap();
                assert_eq!(lucas_binomial(k, n - k, p), exact, "C({n},{k}) mod {p}");
                assert_eq!(lucas(n, k, p), exact);
            }
        }
    }
}

/// Lift an `F_p` polynomial to signed integer coefficients over `Q`.
fn lift(f: &Polynomial<Fp>) -> Polynomial<Rationals> {
    let fp = *f.field();
    let terms = f.terms().iter().map(|(w, c)| {
        let (neg, mag) = fp.signed_parts(c);
        let n: i64 = mag.parse().unwrap();
        (w.clone(), BigRational::from_integer(BigInt::from(if neg { -n } else { n })))
    });
    Polynomial::from_terms(Rationals, f.order().clone(), terms)
}

/// Every relation of `G_m`, lifted to integers and evaluated in
/// characteristic zero, has all PBW coordinates divisible by `p`.
#[test]
fn relations_vanish_mod_p_in_the_integral_form() {
    for (p, m) in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)] {
        let win = Window::full(p, m).unwrap();
        for r in small_relations(&win) {
            let value = evaluate_poly(&lift(&r.poly));
            for (mono, c) in value.terms() {
                assert!(c.is_integer());
                let rem = c.numer() % BigInt::from(p);
                assert!(rem.is_zero(), "{} at {mono}: {c}, p={p}", r.name());
            }
            assert!(evaluate_poly(&r.poly).is_zero(), "{}", r.name());
        }
    }
}

#[test]
fn relation_suites_pass() {
    for (p, m) in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)] {
        let r = relation_suite(&Window::full(p, m).unwrap()).unwrap();
        let failing: Vec<_> = r.relations.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
        assert!(failing.is_empty(), "p={p} m={m}: {failing:?}");
        assert!(r.all_pass());
    }
}

#[test]
fn irreducible_words_give_a_basis() {
    for (p, m, dim) in [(2, 1, 8), (2, 2, 64), (3, 1, 27), (3, 2, 729), (5, 1, 125)] {
        let d = dimension_check(&Window::full(p, m).unwrap()).unwrap();
        assert_eq!((d.irreducible_count, d.oracle_rank), (dim, dim), "p={p} m={m}");
        assert!(d.passed());
    }
}

#[test]
fn truncated_straightening_is_the_restricted_system() {
    let sys = truncated_big_system(3, 1).unwrap();
    assert_eq!(sys.alphabet().len(), 6);
    // Six rule shapes on powers 1..=2.
    assert_eq!(sys.len(), 6 * 4);
}

fn small_word(p: u32, m: u32) -> impl Strategy<Value = sl3res_core::Word> {
    let letters = Window::full(p, m).unwrap().alphabet().letters().to_vec();
    prop::collection::vec(prop::sample::select(letters), 0..7).prop_map(|ls| ls.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Rewriting never changes the value in the Kostant form.
    #[test]
    fn normal_forms_preserve_the_value(w in small_word(3, 2)) {
        let sys = small_groebner_basis(&Window::full(3, 2).unwrap()).unwrap();
        let f = *sys.field();
        prop_assert_eq!(evaluate_poly(&sys.normal_form_word(&w)), evaluate_word(&f, &w));
    }

    #[test]
    fn words_and_operators_agree(w in small_word(2, 2)) {
        // Over Q the small letters are e_α^(2^k), e_β^(2^k).
        let x = evaluate_word(&Rationals, &w);
        prop_assert_eq!(op_of(&x), Op::word(&w, Some(2)));
    }
}
