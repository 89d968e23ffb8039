//! Module-level invariants across the supported brute-force envelope and
//! the symbolic series.

use num_bigint::BigInt;
use symplectic_euler_core::algebra::rat_int;
use symplectic_euler_core::counting::PrimaryParams;
use symplectic_euler_core::genfun::{fsp_closed, fsp_coeff, fsp_p};
use symplectic_euler_core::groups::{ChiOracle, FiniteField, PolyCatalogue};

#[test]
fn recursion_matches_formula_on_full_envelope() {
    // (half-rank, q, max r); the largest size runs the rank-2 check only.
    let envelope: [(usize, u64, u32); 7] = [
        (1, 2, 3),
        (1, 3, 3),
        (1, 4, 3),
        (1, 5, 3),
        (1, 7, 3),
        (2, 2, 3),
        (2, 3, 2),
    ];
    for (n, q, r_max) in envelope {
        let oracle = ChiOracle::new(n, q).unwrap();
        for r in 1..=r_max {
            let brute = oracle.chi_r(r);
            let formula = fsp_coeff(r, n as u32).eval_u64(q);
            assert_eq!(rat_int(-brute), formula, "2n={} q={q} r={r}", 2 * n);
        }
        if oracle.group().len() <= 5000 {
            assert_eq!(
                oracle.chi_r_direct(2).unwrap(),
                oracle.chi_r(2),
                "direct vs recursion at 2n={} q={q}",
                2 * n
            );
        }
    }
}

#[test]
fn p_primary_recursion_matches_series() {
    for (p, q) in [(2u64, 3u64), (3, 2), (2, 5), (3, 4), (5, 2)] {
        let oracle = ChiOracle::new(1, q).unwrap();
        let ctx = PrimaryParams::new(p, q).unwrap();
        for r in 1..=3u32 {
            let brute = oracle.chi_r_p(r, p);
            let series = fsp_p(r, &ctx, 1);
            assert_eq!(
                rat_int(-brute),
                series.coeff(1).clone(),
                "p={p} q={q} r={r}"
            );
        }
    }
    // p dividing q collapses everything
    for q in [2u64, 3] {
        let oracle = ChiOracle::new(1, q).unwrap();
        let p = q;
        for r in 2..=3u32 {
            assert_eq!(oracle.chi_r_p(r, p), BigInt::from(0), "p=q={q} r={r}");
        }
    }
}

#[test]
fn series_coefficients_are_integral() {
    for r in 1..=6u32 {
        assert!(fsp_closed(r, 8).is_integral(), "r={r}");
    }
}

#[test]
fn selfreciprocal_count_is_q_to_n() {
    // the palindromic monic polynomials of degree 2n number exactly q^n
    for q in [2u64, 3, 4] {
        let cat = PolyCatalogue::new(FiniteField::new(q).unwrap(), 6).unwrap();
        for n in 1..=3u32 {
            let count = cat
                .records(2 * n)
                .iter()
                .filter(|r| r.self_reciprocal)
                .count() as u64;
            assert_eq!(count, q.pow(n), "q={q} n={n}");
        }
    }
}
