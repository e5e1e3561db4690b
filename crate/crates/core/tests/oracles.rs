//! Cross-checks against constructions that share no code with the library's
//! series expansion.

use apostol_kit::identities::kernels;
use apostol_kit::{batch_polynomials, binomial, factorial, number, Family, PadeData, Poly, Rational, Scalar};

fn s(v: &str) -> Scalar {
    v.parse().unwrap()
}

fn q(v: &str) -> Rational {
    v.parse().unwrap()
}

fn choose(n: usize, k: usize) -> Scalar {
    Scalar::from(binomial(n as u64, k as i64))
}

/// `B_k` from `sum_{j=0}^{k} C(k+1, j) B_j = 0` with `B_0 = 1`.
fn bernoulli_by_recurrence(k_max: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for k in 1..=k_max {
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc = acc + Rational::from(binomial(k as u64 + 1, j as i64)) * bj;
        }
        let lead = Rational::from(k as i64 + 1);
        b.push(-(acc.checked_div(&lead).unwrap()));
    }
    b
}

#[test]
fn bernoulli_numbers_match_the_classical_recurrence() {
    let oracle = bernoulli_by_recurrence(30);
    assert_eq!(oracle[1], q("-1/2"));
    assert_eq!(oracle[2], q("1/6"));
    assert_eq!(oracle[12], q("-691/2730"));
    assert_eq!(oracle[30], q("8615841276005/14322"));
    let one = Scalar::one();
    let batch = batch_polynomials(Family::Bernoulli, 1, &one, 30).unwrap();
    for (k, expected) in oracle.iter().enumerate() {
        let expected = Scalar::from(expected.clone());
        assert_eq!(number(Family::Bernoulli, k, &one).unwrap(), expected, "k={k}");
        assert_eq!(batch[k].coeff(0), expected, "k={k}");
    }
}

/// Values `a_k = Lambda_k(0)` of order one from the defining relation
/// `(lambda e^t + c) Phi = numerator`, solved as a triangular system.
///
/// In exponential coefficients the relation reads
/// `lambda sum_j C(k, j) a_j + c a_k = r_k`. When the leading coefficient
/// `lambda + c` vanishes, row `k + 1` determines `a_k` instead.
fn values_by_defining_relation(family: Family, lambda: &Scalar, k_max: usize) -> Vec<Scalar> {
    let (c, r1, r0) = match family {
        Family::Bernoulli => (-1, 1, 0),
        Family::Euler => (1, 0, 2),
        Family::Genocchi => (1, 2, 0),
    };
    let rhs = |k: usize| {
        Scalar::from(match k {
            0 => r0,
            1 => r1,
            _ => 0,
        })
    };
    let c = Scalar::from(c);
    let lead = lambda + &c;
    let mut a: Vec<Scalar> = Vec::new();
    for k in 0..=k_max {
        if !lead.is_zero() {
            let known = (0..k).fold(Scalar::zero(), |acc, j| acc + choose(k, j) * &a[j]);
            let value = (rhs(k) - lambda * &known).checked_div(&lead).unwrap();
            a.push(value);
        } else {
            // row k+1: lambda (sum_{j<=k} C(k+1, j) a_j) = r_{k+1}
            let row = k + 1;
            let known = (0..k).fold(Scalar::zero(), |acc, j| acc + choose(row, j) * &a[j]);
            let value = (rhs(row).checked_div(lambda).unwrap() - known)
                .checked_div(&choose(row, k))
                .unwrap();
            a.push(value);
        }
    }
    a
}

/// The Appell polynomial with `P' = k Q_{k-1}` and `P(0) = a_k`, by integration.
fn appell(values: &[Scalar]) -> Vec<Poly> {
    let mut out: Vec<Poly> = Vec::new();
    for (k, a) in values.iter().enumerate() {
        let mut coeffs = vec![a.clone()];
        if k > 0 {
            for (i, c) in out[k - 1].coeffs().iter().enumerate() {
                let w = Scalar::from_ratio(k as i64, i as i64 + 1).unwrap();
                coeffs.push(&w * c);
            }
        }
        out.push(Poly::new(coeffs));
    }
    out
}

/// `Phi^(alpha+beta) = Phi^(alpha) Phi^(beta)` at the level of polynomials:
/// `Lambda^(a+b)_k(x) = sum_j C(k, j) Lambda^(a)_j(x) Lambda^(b)_{k-j}(0)`.
fn compose(first: &[Poly], second_at_zero: &[Scalar]) -> Vec<Poly> {
    (0..first.len())
        .map(|k| {
            let mut acc = Poly::zero();
            for j in 0..=k {
                acc.add_scaled(&(choose(k, j) * &second_at_zero[k - j]), &first[j]);
            }
            acc
        })
        .collect()
}

const LAMBDAS: [&str; 7] = ["1", "-1", "2", "1/2", "-3/5", "1+i", "0"];

#[test]
fn order_one_matches_the_defining_relation() {
    for family in Family::ALL {
        for lambda in LAMBDAS {
            let l = s(lambda);
            let Ok(batch) = batch_polynomials(family, 1, &l, 18) else {
                assert_eq!((family, lambda), (Family::Euler, "-1"));
                continue;
            };
            let oracle = appell(&values_by_defining_relation(family, &l, 18));
            assert_eq!(batch, oracle, "{family} lambda={lambda}");
        }
    }
}

#[test]
fn higher_orders_compose() {
    for family in Family::ALL {
        for lambda in LAMBDAS {
            let l = s(lambda);
            if family.check_lambda(&l).is_err() {
                continue;
            }
            let base = values_by_defining_relation(family, &l, 14);
            let mut expected = appell(&base);
            for alpha in 1..=4 {
                let batch = batch_polynomials(family, alpha, &l, 14).unwrap();
                assert_eq!(batch, expected, "{family} lambda={lambda} alpha={alpha}");
                expected = compose(&expected, &base);
            }
        }
    }
}

#[test]
fn order_zero_is_the_monomial_basis() {
    for family in Family::ALL {
        for lambda in ["1", "2", "-3/5", "i"] {
            let batch = batch_polynomials(family, 0, &s(lambda), 25).unwrap();
            for (k, p) in batch.iter().enumerate() {
                assert_eq!(p, &Poly::monomial(Scalar::one(), k));
            }
        }
    }
}

#[test]
fn genocchi_is_scaled_bernoulli_at_negated_lambda() {
    for lambda in ["1", "-1", "2", "1/2", "-3/5", "2-i"] {
        let l = s(lambda);
        let neg = -&l;
        for alpha in 0..=3u32 {
            let g = batch_polynomials(Family::Genocchi, alpha, &l, 12).unwrap();
            let b = batch_polynomials(Family::Bernoulli, alpha, &neg, 12).unwrap();
            let factor = Scalar::from(-2).powu(alpha);
            for k in 0..=12 {
                assert_eq!(g[k], b[k].scale(&factor), "lambda={lambda} alpha={alpha} k={k}");
            }
        }
    }
}

#[test]
fn classical_euler_polynomials() {
    // reflection symmetry E_k(1 - x) = (-1)^k E_k(x)
    let e = batch_polynomials(Family::Euler, 1, &Scalar::one(), 12).unwrap();
    assert_eq!(e[1], Poly::new(vec![s("-1/2"), s("1")]));
    assert_eq!(e[3], Poly::new(vec![s("1/4"), s("0"), s("-3/2"), s("1")]));
    let reflect = Poly::new(vec![s("1"), s("-1")]);
    for (k, p) in e.iter().enumerate() {
        let composed = p.coeffs().iter().enumerate().fold(Poly::zero(), |mut acc, (i, c)| {
            acc.add_scaled(c, &reflect.pow(i as u32));
            acc
        });
        let sign = if k % 2 == 0 { Scalar::one() } else { Scalar::from(-1) };
        assert_eq!(composed, p.scale(&sign), "k={k}");
    }
}

/// Solves `A v = b` over Q by Gauss-Jordan elimination.
fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Vec<Rational> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("nonsingular");
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].inv().unwrap();
        for v in a[col].iter_mut() {
            *v = &*v * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (v, pv) in a[r].iter_mut().zip(&pivot_row) {
                    *v = &*v - &(&f * pv);
                }
                let sub = &f * &b[col];
                b[r] = &b[r] - &sub;
            }
        }
    }
    b
}

/// `[n, m]` approximant with `Q(0) = 1` from the linear conditions
/// `[t^k] (e^t Q - P) = 0` for `k = 0..=n+m`.
fn pade_by_linear_system(n: usize, m: usize) -> (Vec<Rational>, Vec<Rational>) {
    let e = |k: i64| -> Rational {
        if k < 0 {
            Rational::zero()
        } else {
            Rational::new(1, factorial(k as u64)).unwrap()
        }
    };
    // unknowns q_1..q_m from rows k = n+1..=n+m, where P has no terms
    let a: Vec<Vec<Rational>> = (n + 1..=n + m)
        .map(|k| (1..=m).map(|j| e(k as i64 - j as i64)).collect())
        .collect();
    let b: Vec<Rational> = (n + 1..=n + m).map(|k| -e(k as i64)).collect();
    let mut qs = vec![Rational::one()];
    qs.extend(solve(a, b));
    let ps = (0..=n)
        .map(|k| (0..=m.min(k)).fold(Rational::zero(), |acc, j| acc + e((k - j) as i64) * &qs[j]))
        .collect();
    (ps, qs)
}

#[test]
fn pade_closed_forms_match_the_linear_system() {
    for n in 0..=6 {
        for m in 0..=6 {
            let data = PadeData::build(n, m);
            let (ps, qs) = pade_by_linear_system(n, m);
            let q0 = Rational::from(data.denom[0].clone());
            for (j, expected) in ps.iter().enumerate() {
                let scaled = Rational::from(data.numer[j].clone()).checked_div(&q0).unwrap();
                assert_eq!(&scaled, expected, "n={n} m={m} numer[{j}]");
            }
            for (j, expected) in qs.iter().enumerate() {
                let scaled = Rational::from(data.denom[j].clone()).checked_div(&q0).unwrap();
                assert_eq!(&scaled, expected, "n={n} m={m} denom[{j}]");
            }
        }
    }
}

#[test]
fn pade_remainder_matches_direct_expansion() {
    for n in 0..=5 {
        for m in 0..=5 {
            let data = PadeData::build(n, m);
            for j in 0..=6usize {
                let k = n + m + 1 + j;
                // [t^k] e^t Q, since P has no terms past t^n
                let direct = data.denom.iter().enumerate().fold(Rational::zero(), |acc, (i, qi)| {
                    acc + Rational::new(qi.clone(), factorial((k - i) as u64)).unwrap()
                });
                assert_eq!(data.gamma(j), direct, "n={n} m={m} j={j}");
            }
        }
    }
}

fn shifted(seq: &[Poly], y: &Scalar) -> Vec<Poly> {
    seq.iter().map(|p| p.shift(y)).collect()
}

/// `Lambda_2 += 1`, breaking every identity that reads it.
fn corrupted(mut seq: Vec<Poly>) -> Vec<Poly> {
    seq[2] = &seq[2] + &Poly::one();
    seq
}

#[test]
fn theorem1_degenerates_to_the_addition_formulas() {
    for family in Family::ALL {
        for lambda in ["1", "2", "-3/5"] {
            let l = s(lambda);
            for alpha in 0..=2u32 {
                let clean = batch_polynomials(family, alpha, &l, 9).unwrap();
                for at_x in [clean.clone(), corrupted(clean)] {
                    for y in ["1", "-2/7"] {
                        let y = s(y);
                        let at_xy = shifted(&at_x, &y);
                        for n in 0..=5usize {
                            for p in 0..=n {
                                let (lhs, rhs) = kernels::theorem1(&at_x, &at_xy, n, 0, p, &y);
                                let (al, ar) = kernels::addition(&at_x, &at_xy, p, &y);
                                assert_eq!(&lhs - &rhs, &al - &ar, "{family} n={n} p={p}");
                                let (lhs, rhs) = kernels::theorem1(&at_x, &at_xy, 0, n, p, &y);
                                let (dl, dr) = kernels::dual_addition(&at_x, &at_xy, p, &y);
                                assert_eq!(&lhs - &rhs, &dl - &dr, "{family} m={n} p={p}");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn corrupted_sequences_are_detected() {
    let l = s("2");
    let at_x = corrupted(batch_polynomials(Family::Euler, 1, &l, 8).unwrap());
    let y = s("1/3");
    let at_xy = shifted(&at_x, &y);
    let (lhs, rhs) = kernels::theorem1(&at_x, &at_xy, 1, 1, 3, &y);
    assert_ne!(lhs, rhs);
    let (lhs, rhs) = kernels::addition(&at_x, &at_xy, 3, &y);
    assert_ne!(lhs, rhs);
}
