use gbdepth::groebner::canonical_set;
use gbdepth::{
    buchberger, initial_ideal, normal_form, verify_gb, Field, GroebnerConfig, Ideal, Monomial, MonomialOrder,
    MonomialOrderSpec, Polynomial, Rational,
};
use proptest::prelude::*;

type P = Polynomial<Rational>;

fn arb_order(n: usize) -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::lex(n)),
        Just(MonomialOrder::deglex(n)),
        proptest::collection::vec(1i64..=5, n).prop_map(|w| MonomialOrder::weight_then_lex(w).unwrap()),
    ]
}

fn arb_mono(n: usize, max_deg: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..=max_deg, n)
        .prop_filter("degree bound", move |e| e.iter().sum::<u32>() <= max_deg)
        .prop_map(Monomial::new)
}

fn arb_binomial(n: usize) -> impl Strategy<Value = (i64, Monomial, i64, Monomial)> {
    (1i64..=3, arb_mono(n, 3), -3i64..=3, arb_mono(n, 3))
}

fn build(n: usize, parts: &[(i64, Monomial, i64, Monomial)], order: &MonomialOrder) -> Ideal<Rational> {
    let gens = parts
        .iter()
        .map(|(a, u, b, v)| {
            Polynomial::from_terms(n, [(Rational::from_i64(*a), u.clone()), (Rational::from_i64(*b), v.clone())], order)
                .unwrap()
        })
        .collect();
    Ideal::new(n, gens).unwrap()
}

fn arb_case() -> impl Strategy<Value = (usize, Vec<(i64, Monomial, i64, Monomial)>, MonomialOrder)> {
    (1usize..=4).prop_flat_map(|n| (Just(n), proptest::collection::vec(arb_binomial(n), 1..=4), arb_order(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(80))]

    #[test]
    fn buchberger_output_verifies((n, parts, order) in arb_case()) {
        let ideal = build(n, &parts, &order);
        let cfg = GroebnerConfig::default();
        let gb = buchberger(&ideal, &order, &cfg).unwrap();
        prop_assert!(verify_gb(gb.elements(), &ideal, &order, &cfg).unwrap().is_confirmed());
        for g in ideal.generators() {
            prop_assert!(normal_form(g, gb.elements(), &order).is_zero());
        }
        let init = initial_ideal(&gb);
        for (k, g) in gb.elements().iter().enumerate() {
            prop_assert!(g.leading_coeff().unwrap().is_one());
            for t in g.terms().iter().skip(1) {
                prop_assert!(!init.contains(&t.mono));
            }
            for (l, h) in gb.elements().iter().enumerate() {
                if k != l {
                    prop_assert!(!h.leading_monomial().unwrap().divides(g.leading_monomial().unwrap()));
                }
            }
        }
    }

    #[test]
    fn reduced_basis_is_unique((n, parts, order) in arb_case(), scale in 1i64..=4, rot in 0usize..4) {
        let cfg = GroebnerConfig::default();
        let gb = buchberger(&build(n, &parts, &order), &order, &cfg).unwrap();
        let mut shuffled = parts.clone();
        let len = shuffled.len();
        shuffled.rotate_left(rot % len);
        shuffled.reverse();
        let scaled: Vec<_> = shuffled.into_iter().map(|(a, u, b, v)| (a * scale, u, -b * scale, v)).collect();
        // negating b changes the ideal; undo it by negating the whole generator instead
        let scaled: Vec<_> = scaled.into_iter().map(|(a, u, b, v)| (-a, u, b, v)).collect();
        let gb2 = buchberger(&build(n, &scaled, &order), &order, &cfg).unwrap();
        prop_assert_eq!(gb.elements(), gb2.elements());
    }

    #[test]
    fn remainders_avoid_the_initial_ideal((n, parts, order) in arb_case(), probe in arb_binomial(4)) {
        let cfg = GroebnerConfig::default();
        let gb = buchberger(&build(n, &parts, &order), &order, &cfg).unwrap();
        let init = initial_ideal(&gb);
        let (a, u, b, v) = probe;
        let cut = |m: &Monomial| Monomial::new(m.exponents()[..n].to_vec());
        let p = Polynomial::from_terms(n, [(Rational::from_i64(a), cut(&u)), (Rational::from_i64(b), cut(&v))], &order).unwrap();
        let r = normal_form(&p, gb.elements(), &order);
        for t in r.terms() {
            prop_assert!(!init.contains(&t.mono));
        }
    }

    #[test]
    fn ring_axioms(
        a in proptest::collection::vec((-3i64..=3, arb_mono(3, 2)), 0..4),
        b in proptest::collection::vec((-3i64..=3, arb_mono(3, 2)), 0..4),
        c in proptest::collection::vec((-3i64..=3, arb_mono(3, 2)), 0..4),
    ) {
        let o = MonomialOrder::deglex(3);
        let mk = |t: &[(i64, Monomial)]| P::from_terms(3, t.iter().map(|(k, m)| (Rational::from_i64(*k), m.clone())), &o).unwrap();
        let (a, b, c) = (mk(&a), mk(&b), mk(&c));
        prop_assert_eq!(a.add(&b, &o).unwrap(), b.add(&a, &o).unwrap());
        prop_assert_eq!(a.add(&b, &o).unwrap().add(&c, &o).unwrap(), a.add(&b.add(&c, &o).unwrap(), &o).unwrap());
        prop_assert_eq!(a.mul(&b, &o).unwrap(), b.mul(&a, &o).unwrap());
        prop_assert_eq!(a.mul(&b, &o).unwrap().mul(&c, &o).unwrap(), a.mul(&b.mul(&c, &o).unwrap(), &o).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c, &o).unwrap(), &o).unwrap(),
            a.mul(&b, &o).unwrap().add(&a.mul(&c, &o).unwrap(), &o).unwrap()
        );
        prop_assert!(a.sub(&a, &o).unwrap().is_zero());
        prop_assert!(a.mul(&b, &o).unwrap().is_sorted_under(&o));
    }

    #[test]
    fn canonical_form_ignores_insertion_order(
        terms in proptest::collection::vec((-3i64..=3, arb_mono(3, 3)), 0..6),
        rot in 0usize..6,
    ) {
        let o = MonomialOrder::lex(3);
        let mut other = terms.clone();
        if !other.is_empty() {
            let len = other.len();
            other.rotate_left(rot % len);
            other.reverse();
        }
        let mk = |t: &[(i64, Monomial)]| P::from_terms(3, t.iter().map(|(k, m)| (Rational::from_i64(*k), m.clone())), &o).unwrap();
        prop_assert_eq!(mk(&terms), mk(&other));
        prop_assert!(mk(&terms).terms().iter().all(|t| !t.coeff.is_zero()));
    }
}

#[test]
fn lex_permutation_changes_the_basis() {
    // lex with x2 > x1 on (x1 - x2^2): leading term x2^2
    let spec = MonomialOrderSpec::Lex(vec![1, 0]);
    let o = gbdepth::validate_order(&spec, 2).unwrap();
    let m = |e: &[u32]| Monomial::new(e.to_vec());
    let f = Polynomial::from_terms(2, [(Rational::from_i64(1), m(&[1, 0])), (Rational::from_i64(-1), m(&[0, 2]))], &o)
        .unwrap();
    let gb = buchberger(&Ideal::new(2, vec![f.clone()]).unwrap(), &o, &GroebnerConfig::default()).unwrap();
    assert_eq!(gb.elements()[0].leading_monomial(), Some(&m(&[0, 2])));
    assert_eq!(canonical_set(&[f.neg()], &o), gb.elements());
}
