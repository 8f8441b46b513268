use gbdepth::family::{
    build_family, explore_orders, hibi_ideal, semicontinuity_violations, verify_theorem, DistributiveLattice,
    ExploreConfig, VerificationReport, VerifyOptions,
};
use gbdepth::monomial_invariants::hilbert_numerator;
#[path = "support/oracles.rs"]
mod oracles;
use oracles::hilbert_function;
use gbdepth::{buchberger, family_order, initial_ideal, GroebnerConfig, Ideal, Rational};

fn reports(d: usize, opts: &VerifyOptions) -> Vec<VerificationReport> {
    verify_theorem::<Rational>(d, opts).unwrap().into_iter().map(Result::unwrap).collect()
}

/// `(1 + 2t)^d (1 - t)^{2d}` by repeated convolution.
fn expected_numerator(d: usize) -> Vec<i64> {
    let mut c = vec![1i64];
    let conv = |a: &[i64], b: &[i64]| {
        let mut out = vec![0i64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    };
    for _ in 0..d {
        c = conv(&c, &[1, 2]);
        c = conv(&c, &[1, -1]);
        c = conv(&c, &[1, -1]);
    }
    c
}

#[test]
fn depth_ladder_for_two_and_three_blocks() {
    for d in [2, 3] {
        let opts = VerifyOptions { direct: d == 2, ..VerifyOptions::default() };
        let rs = reports(d, &opts);
        assert_eq!(rs.len(), d + 1);
        for (r, rep) in rs.iter().enumerate() {
            assert_eq!(rep.r, r);
            assert!(rep.pass, "{rep:#?}");
            assert_eq!(rep.depth, r);
            assert_eq!(rep.dim, d);
            assert_eq!(rep.reg, (2 * d - r) as i64);
            assert!(rep.gb_confirmed && rep.claimed_set_confirmed && rep.initial_matches_expected);
            assert_eq!(rep.gb_size, 3 * r + 4 * (d - r));
            assert_eq!(rep.reg_original, Some(d));
            if d == 2 {
                assert_eq!(rep.direct_agrees, Some(true));
            }
        }
    }
}

#[test]
fn regularity_column_for_three_blocks() {
    let regs: Vec<i64> = reports(3, &VerifyOptions::default()).iter().map(|r| r.reg).collect();
    assert_eq!(regs, [6, 5, 4, 3]);
}

#[test]
fn hilbert_numerator_is_order_independent() {
    for d in [1, 2] {
        let family = build_family::<Rational>(d).unwrap();
        let want = expected_numerator(d);
        for r in 0..=d {
            let gb = buchberger(&family.ideal, &family_order(d, r).unwrap(), &GroebnerConfig::default()).unwrap();
            let init = initial_ideal(&gb);
            let k = hilbert_numerator(&init);
            assert_eq!(k.coeffs(), &want[..], "d={d} r={r}");
            assert_eq!(k.series_over_one_minus_t(3 * d, 8), hilbert_function(&init, 8));
        }
    }
}

#[test]
fn h_polynomial_coefficients() {
    for d in 1..=3 {
        let want: Vec<i64> = (0..=d as u32).map(|k| binom(d as i64, k as i64) * 2i64.pow(k)).collect();
        for rep in reports(d, &VerifyOptions::default()) {
            assert_eq!(rep.h_polynomial.as_ref().unwrap().coeffs(), &want[..]);
        }
    }
}

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn uncorrected_set_is_refuted_with_a_witness() {
    let opts = VerifyOptions { literal: true, ..VerifyOptions::default() };
    let rs = reports(2, &opts);
    let lit = rs[0].literal_check.as_ref().unwrap();
    assert!(!lit.confirmed);
    let witness = lit.witness.as_ref().unwrap();
    assert!(witness.contains("x2*x3 - x3^2"), "{witness}");
    assert!(rs[0].claimed_set_confirmed);
    assert!(rs[2].literal_check.as_ref().unwrap().confirmed);
}

#[test]
fn explorer_on_one_block() {
    let family = build_family::<Rational>(1).unwrap();
    let cfg = ExploreConfig { samples: 200, seed: 7, ..ExploreConfig::default() };
    let a = explore_orders(&family.ideal, &cfg).unwrap();
    assert!(a.skipped.is_empty());
    let depths: std::collections::BTreeSet<usize> = a.records.iter().map(|r| r.depth).collect();
    assert!(depths.iter().all(|&x| x <= 1));
    assert!(a.records.iter().all(|r| r.reg >= 1));
    assert!(semicontinuity_violations(&a, 1, 1).is_empty());
    assert_eq!(a.records.iter().map(|r| r.hits).sum::<usize>(), 200);
    let b = explore_orders(&family.ideal, &cfg).unwrap();
    assert_eq!(a, b);
}

#[test]
fn explorer_edge_cases() {
    let zero: Ideal<Rational> = Ideal::new(3, vec![]).unwrap();
    let s = explore_orders(&zero, &ExploreConfig { samples: 20, ..ExploreConfig::default() }).unwrap();
    assert_eq!(s.records.len(), 1);
    assert_eq!((s.records[0].depth, s.records[0].reg), (3, 0));

    let hibi = hibi_ideal::<Rational>(&DistributiveLattice::grid(2, 2).unwrap());
    let s = explore_orders(&hibi, &ExploreConfig { samples: 30, ..ExploreConfig::default() }).unwrap();
    assert!(s.records.iter().any(|r| r.squarefree));
}
