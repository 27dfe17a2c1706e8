use proptest::prelude::*;
use sl3res_core::free_algebra::{format_poly, parse_poly};
use sl3res_core::kostant::{small_groebner_basis, Window};
use sl3res_core::rewriting::{
    complete, critical_pairs, interreduce, is_complete, is_reduced, ProductTable, RewriteError,
};
use sl3res_core::{Field, Fp, OrderSpec, Polynomial, RewriteRule, RewriteSystem, Word};

fn gm(p: u32, m: u32) -> RewriteSystem<Fp> {
    small_groebner_basis(&Window::full(p, m).unwrap()).unwrap()
}

fn poly(sys: &RewriteSystem<Fp>, text: &str) -> Polynomial<Fp> {
    parse_poly(text, sys.field(), sys.alphabet(), sys.order()).unwrap()
}

#[test]
fn reordering_example_for_p_two() {
    let sys = gm(2, 1);
    assert_eq!(format_poly(&sys.normal_form(&poly(&sys, "b0*a0*b0*a0"))), "a0*b0*a0*b0");
    assert!(sys.normal_form(&poly(&sys, "a0*a0")).is_zero());
}

#[test]
fn rule_counts() {
    for (p, m, n) in [(2, 1, 3), (2, 2, 10), (3, 1, 5), (3, 2, 14), (5, 1, 5)] {
        assert_eq!(gm(p, m).len(), n, "p={p} m={m}");
    }
}

#[test]
fn small_bases_are_complete_and_reduced() {
    for (p, m) in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)] {
        let sys = gm(p, m);
        let cert = is_complete(&sys);
        assert!(cert.complete && cert.failures.is_empty(), "p={p} m={m}");
        assert!(is_reduced(&sys));
        assert!(critical_pairs(&sys).iter().all(|cp| cp.witness_holds(&sys)));
    }
}

#[test]
fn dropping_a_relation_frees_a_zero_word() {
    // Removing the p-th power of a_0 leaves a system whose irreducible words
    // include a_0^p, which is zero in the algebra.
    let sys = gm(3, 1);
    let i = sys.rule_index(&Word::power(sl3res_core::Generator::a(0, 3), 3)).unwrap();
    let smaller = sys.without_rule(i);
    assert!(smaller.is_irreducible(&Word::power(sl3res_core::Generator::a(0, 3), 3)));
}

#[test]
fn non_decreasing_rules_are_rejected() {
    let sys = gm(2, 1);
    let a0b0 = poly(&sys, "a0*b0").leading_word().unwrap().clone();
    let bad = RewriteRule { lhs: a0b0, rhs: poly(&sys, "b0*a0") };
    let err = RewriteSystem::new(*sys.field(), sys.order().clone(), sys.alphabet().clone(), vec![bad]).unwrap_err();
    assert!(matches!(err, RewriteError::NotDecreasing(_)), "{err:?}");
}

#[test]
fn incomplete_systems_are_reported_with_residuals() {
    // b0 a0 → a0 b0 together with a0 b0 a0 → 0 leaves the pair at b0 a0 b0 a0.
    let base = gm(2, 1);
    let sys = RewriteSystem::from_polys(
        *base.field(),
        OrderSpec::deglex(),
        base.alphabet().clone(),
        &[poly(&base, "b0*a0 + a0*b0"), poly(&base, "a0*b0*a0")],
    )
    .unwrap();
    let done = complete(&sys, 12).unwrap();
    assert!(is_complete(&done).complete);
    assert!(is_reduced(&done));
    // Whatever the input certificate says, completion never loses ideal members.
    for r in sys.rules() {
        assert!(done.normal_form(&r.as_poly()).is_zero());
    }
}

#[test]
fn product_table_agrees_with_direct_rewriting() {
    let sys = gm(3, 1);
    let table = ProductTable::new(sys.clone());
    for text in ["b0*b0*a0*a0", "b0*a0*b0*a0*b0*a0", "a0*b0*b0*a0 - b0*a0*a0*b0", "b0*b0*b0*a0*a0"] {
        let f = poly(&sys, text);
        assert_eq!(table.normal_form(&f), sys.normal_form(&f), "{text}");
    }
}

fn word_in(sys: &RewriteSystem<Fp>, max_len: usize) -> impl Strategy<Value = Word> {
    let letters = sys.alphabet().letters().to_vec();
    prop::collection::vec(prop::sample::select(letters), 0..=max_len).prop_map(|ls| ls.into_iter().collect())
}

fn element_in(sys: RewriteSystem<Fp>, max_len: usize) -> impl Strategy<Value = Polynomial<Fp>> {
    let p = sys.field().p();
    prop::collection::vec((word_in(&sys, max_len), 1..p), 0..5).prop_map(move |terms| {
        let f = *sys.field();
        Polynomial::from_terms(f, sys.order().clone(), terms.into_iter().map(|(w, c)| (w, f.from_i64(c.into()))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn normal_form_is_idempotent(f in element_in(gm(3, 2), 7)) {
        let sys = gm(3, 2);
        let nf = sys.normal_form(&f);
        prop_assert_eq!(sys.normal_form(&nf), nf.clone());
        prop_assert!(nf.support().all(|w| sys.is_irreducible(w)));
    }

    #[test]
    fn normal_form_is_linear(f in element_in(gm(3, 1), 6), g in element_in(gm(3, 1), 6), c in 1u32..3) {
        let sys = gm(3, 1);
        let fl = *sys.field();
        let lhs = sys.normal_form(&f.checked_add_scaled(&fl.from_i64(c.into()), &g).unwrap());
        let rhs = sys.normal_form(&f).checked_add_scaled(&fl.from_i64(c.into()), &sys.normal_form(&g)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// `u · g · v` lies in the ideal for every relation `g`, so it reduces to 0.
    #[test]
    fn ideal_members_reduce_to_zero(i in 0usize..16, u in word_in(&gm(3, 2), 3), v in word_in(&gm(3, 2), 3)) {
        let sys = gm(3, 2);
        let g = sys.rules()[i % sys.len()].as_poly();
        let ugv = g.sandwich(u.letters(), v.letters());
        prop_assert!(sys.normal_form(&ugv).is_zero());
    }

    /// Normal forms are multiplicative modulo the ideal.
    #[test]
    fn normal_forms_respect_products(u in word_in(&gm(2, 2), 5), v in word_in(&gm(2, 2), 5)) {
        let sys = gm(2, 2);
        let nu = sys.normal_form_word(&u);
        let nv = sys.normal_form_word(&v);
        prop_assert_eq!(sys.normal_form(&nu.checked_mul(&nv).unwrap()), sys.normal_form_word(&u.concat(&v)));
    }

    /// Replacing a relation by `g_i + u g_j v` keeps the ideal, and the
    /// reduced Gröbner basis of an ideal is unique.
    #[test]
    fn completion_recovers_the_reduced_basis(i in 0usize..3, j in 0usize..3, u in word_in(&gm(2, 1), 2), v in word_in(&gm(2, 1), 2)) {
        prop_assume!(i != j);
        let target = gm(2, 1);
        let mut polys: Vec<_> = target.rules().iter().map(|r| r.as_poly()).collect();
        let extra = polys[j].sandwich(u.letters(), v.letters());
        polys[i] = polys[i].checked_add(&extra).unwrap();
        polys.retain(|g| !g.is_zero());
        // Two generators may now share a leading word; such inputs are not rule sets.
        let start = RewriteSystem::from_polys(*target.field(), OrderSpec::deglex(), target.alphabet().clone(), &polys);
        prop_assume!(start.is_ok());
        let start = start.unwrap();
        let done = interreduce(&complete(&start, 16).unwrap()).unwrap();
        let (done, target) = (done.sorted(), target.sorted());
        prop_assert_eq!(done.rules(), target.rules());
    }
}
