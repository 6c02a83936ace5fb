//! Library results against values computed here by unrelated means.

use proptest::prelude::*;

use taukit::partitions::{enumerate_up_to, partitions_of, Partition};
use taukit::poly::{Family, GradedPoly, Monomial, VarId};
use taukit::rspec::RSpec;
use taukit::scalar::{rat, Scalar};
use taukit::schur::{schur_poly, TimesSpec};
use taukit::tau::tau_series;
use taukit::verify::{check_hirota, det_oracle_tau};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn factorial(n: u32) -> Scalar {
    (1..=n as i64).map(Scalar::from_int).product()
}

// Sum of x^T over semistandard fillings, built row by row.
fn ssyt_sum(shape: &[usize], x: &[Scalar]) -> Scalar {
    fn fill(shape: &[usize], x: &[Scalar], rows: &mut Vec<Vec<usize>>, i: usize, j: usize) -> Scalar {
        if i == shape.len() {
            return rows.iter().flatten().map(|&k| x[k].clone()).product();
        }
        if j == shape[i] {
            return fill(shape, x, rows, i + 1, 0);
        }
        let mut lo = if j > 0 { rows[i][j - 1] } else { 0 };
        if i > 0 {
            lo = lo.max(rows[i - 1][j] + 1);
        }
        let mut total = Scalar::zero();
        for k in lo..x.len() {
            rows[i].push(k);
            total += fill(shape, x, rows, i, j + 1);
            rows[i].pop();
        }
        total
    }
    let mut rows = vec![Vec::new(); shape.len()];
    fill(shape, x, &mut rows, 0, 0)
}

#[test]
fn schur_matches_tableaux() {
    let x = [rat(1, 2), rat(-2, 3), rat(3, 5)];
    for n in 1..=3 {
        let xs = &x[..n];
        for lam in enumerate_up_to(5) {
            let s = schur_poly(&lam, &TimesSpec::MiwaPlus(xs.to_vec()), 5).unwrap();
            assert_eq!(s.as_value().unwrap(), &ssyt_sum(lam.parts(), xs), "{lam} in {n} variables");
        }
    }
}

// Standard tableaux counted by removing the largest entry from a corner.
fn count_syt(parts: &[usize]) -> u64 {
    if parts.is_empty() {
        return 1;
    }
    let mut total = 0;
    for i in 0..parts.len() {
        let is_corner = i + 1 == parts.len() || parts[i + 1] < parts[i];
        if is_corner {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            if smaller[i] == 0 {
                smaller.pop();
            }
            total += count_syt(&smaller);
        }
    }
    total
}

#[test]
fn hook_length_counts_tableaux() {
    for n in 0..=8 {
        for lam in partitions_of(n) {
            let expected = factorial(n as u32) / lam.hook_product();
            assert_eq!(expected, Scalar::from_int(count_syt(lam.parts()) as i64), "{lam}");
        }
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}

// Coefficient of ∏ t_k^{e_k} β_1^{Σ k e_k} in exp(±Σ t_k β_1^k) is ∏ (±1)^{e_k} / e_k!.
fn assert_exponential(poly: &GradedPoly, sign: i64, d: i64) {
    let mut seen = 0;
    for (mono, c) in poly.terms() {
        if mono.weight_in(Family::T) > d || mono.pairs().iter().any(|(v, _)| v.family == Family::B && v.index > 1) {
            continue;
        }
        let mut expected = Scalar::one();
        for (v, e) in mono.pairs() {
            if v.family == Family::T {
                expected = expected * Scalar::from_int(sign).pow(*e as i64).unwrap() / factorial(*e);
            }
        }
        assert_eq!(mono.exponent(VarId::b(1)) as i64, mono.weight_in(Family::T), "{mono}");
        assert_eq!(c, &expected, "{mono}");
        seen += 1;
    }
    let expected_terms: usize = (0..=d as usize).map(|n| partitions_of(n).len()).sum();
    assert_eq!(seen, expected_terms);
}

#[test]
fn r_equal_d_is_exponential() {
    let r = RSpec::rational(&[Scalar::zero()], &[]);
    for (m, sign) in [(1, 1), (-1, -1)] {
        let tau = tau_series(&r, m, 5, &TimesSpec::Generic(Family::T), &TimesSpec::Single(Family::B)).unwrap();
        assert_exponential(tau.as_poly().unwrap(), sign, 5);
        let det = det_oracle_tau(&r, m, 3, 4).unwrap();
        assert!(det.report.pass && det.stable);
        assert_exponential(&det.det, sign, 3);
    }
}

#[test]
fn cauchy_kernel_in_one_variable() {
    // Σ s_λ(v) s_λ(w) = 1/(1 - vw) for single Miwa variables
    let tau =
        tau_series(&RSpec::one(), 0, 8, &TimesSpec::MiwaFormal(Family::T), &TimesSpec::MiwaFormal(Family::B)).unwrap();
    let tau = tau.as_poly().unwrap();
    assert_eq!(tau.len(), 9);
    for n in 0..=8 {
        let mono = Monomial::from_pairs([(VarId::t(1), n), (VarId::b(1), n)]);
        assert!(tau.coeff(&mono).is_one());
    }
}

#[test]
fn grade_two_by_hand() {
    // s_(2) = t1²/2 + t2, s_(1,1) = t1²/2 - t2
    let r = RSpec::rational(&[rat(2, 7), rat(-1, 3)], &[rat(5, 4)]);
    let m = 1;
    let rv = |n: i64| r.r_eval(n).unwrap();
    let row = rv(m) * rv(m + 1);
    let col = rv(m) * rv(m - 1);
    let tau = tau_series(&r, m, 2, &TimesSpec::Generic(Family::T), &TimesSpec::Generic(Family::B)).unwrap();
    let tau = tau.as_poly().unwrap();
    let mono = |pairs: &[(VarId, u32)]| Monomial::from_pairs(pairs.iter().copied());
    let (t1, t2, b1, b2) = (VarId::t(1), VarId::t(2), VarId::b(1), VarId::b(2));
    assert_eq!(tau.coeff(&mono(&[(t1, 1), (b1, 1)])), rv(m));
    assert_eq!(tau.coeff(&mono(&[(t1, 2), (b1, 2)])), (&row + &col) * rat(1, 4));
    assert_eq!(tau.coeff(&mono(&[(t2, 1), (b2, 1)])), &row + &col);
    assert_eq!(tau.coeff(&mono(&[(t1, 2), (b2, 1)])), (&row - &col) * rat(1, 2));
    assert_eq!(tau.coeff(&mono(&[(t2, 1), (b1, 2)])), (&row - &col) * rat(1, 2));
}

fn small_rational() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 2i64..=7).prop_filter_map("non-integer", |(n, d)| {
        let x = rat(n, d);
        (!x.is_integer()).then_some(x)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn content_product_by_cells(a in small_rational(), b in small_rational(), m in -3i64..=3, idx in 0usize..30) {
        let r = RSpec::rational(std::slice::from_ref(&a), std::slice::from_ref(&b));
        let parts = enumerate_up_to(6);
        let lam = &parts[idx % parts.len()];
        let mut expected = Scalar::one();
        for (i, row) in lam.parts().iter().enumerate() {
            for j in 0..*row {
                let c = Scalar::from_int(j as i64 - i as i64 + m);
                expected = expected * (&c + &a) / (&c + &b);
            }
        }
        prop_assert_eq!(r.content_product(lam, m).unwrap(), expected);
    }

    #[test]
    fn hirota_on_random_specs(a in small_rational(), b in small_rational(), m in -2i64..=2) {
        let r = RSpec::rational(&[a], &[b]);
        prop_assert!(check_hirota(&r, m, 3).unwrap().pass);
    }

    #[test]
    fn schur_symmetric_in_variables(x in small_rational(), y in small_rational(), idx in 0usize..19) {
        let parts = enumerate_up_to(5);
        let lam = &parts[idx % parts.len()];
        let xy = schur_poly(lam, &TimesSpec::MiwaPlus(vec![x.clone(), y.clone()]), 5).unwrap();
        let yx = schur_poly(lam, &TimesSpec::MiwaPlus(vec![y, x]), 5).unwrap();
        prop_assert_eq!(xy, yx);
    }
}

#[test]
fn single_cell_shapes() {
    let t = TimesSpec::Generic(Family::T);
    let s = schur_poly(&p(&[1]), &t, 1).unwrap();
    assert_eq!(s.as_poly().unwrap().coeff(&Monomial::var(VarId::t(1))), Scalar::one());
}

// Racah's closed form for the ordinary Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M>.
fn racah(j1: f64, m1: f64, j2: f64, m2: f64, jj: f64) -> f64 {
    let f = |x: f64| -> f64 { (1..=x.round() as u64).map(|k| k as f64).product() };
    let mm = m1 + m2;
    let pre = ((2.0 * jj + 1.0) * f(jj + j1 - j2) * f(jj - j1 + j2) * f(j1 + j2 - jj) / f(j1 + j2 + jj + 1.0)).sqrt()
        * (f(jj + mm) * f(jj - mm) * f(j1 - m1) * f(j1 + m1) * f(j2 - m2) * f(j2 + m2)).sqrt();
    let mut sum = 0.0;
    for k in 0..=20 {
        let k = k as f64;
        let args = [k, j1 + j2 - jj - k, j1 - m1 - k, j2 + m2 - k, jj - j2 + m1 + k, jj - j1 - m2 + k];
        if args.iter().any(|a| *a < -1e-9) {
            continue;
        }
        let sign = if (k as i64) % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign / args.iter().map(|a| f(*a)).product::<f64>();
    }
    pre * sum
}

#[test]
fn clebsch_gordan_classical_limit() {
    use taukit::tau::{clebsch_gordan_q, Spins};
    let q = Scalar::one() - rat(1, 1 << 16);
    let h = |n: i64| rat(n, 2);
    for (l1, l2, l, j, k) in [
        (1, 1, 2, 1, 1),
        (2, 2, 2, 0, 0),
        (3, 1, 2, 1, 1),
        (4, 2, 4, 2, 0),
        (2, 2, 0, 0, 0),
        (1, 1, 0, 1, -1),
        (3, 3, 2, 1, -1),
    ] {
        let sp = Spins::new(h(l1), h(l2), h(l), h(j), h(k));
        let got = clebsch_gordan_q(&sp, &q).unwrap().to_f64();
        let want = racah(l1 as f64 / 2.0, j as f64 / 2.0, l2 as f64 / 2.0, k as f64 / 2.0, l as f64 / 2.0);
        assert!((got - want).abs() < 1e-3, "{sp:?}: {got} vs {want}");
    }
}
