use apostol_kit::identities::{
    verify_corollary1, verify_corollary2, verify_functional_relation, verify_lacunary, verify_remark_r1,
    verify_theorem1_high, verify_theorem1_low, verify_theorem2, verify_theorem3,
};
use apostol_kit::{Family, Scalar};

fn s(v: &str) -> Scalar {
    v.parse().unwrap()
}

#[test]
fn theorem3_is_symmetric_under_conjugate_rho() {
    for family in Family::ALL {
        for lambda in ["1", "2", "-3/5"] {
            let l = s(lambda);
            for rho in ["i", "1+i", "2/3-1/2*i"] {
                let r = s(rho);
                for p in [0, 3, 7] {
                    let a = verify_theorem3(family, 1, &l, p, &r).unwrap();
                    let b = verify_theorem3(family, 1, &l, p, &r.conj()).unwrap();
                    assert!(a.holds && b.holds, "{family} lambda={lambda} rho={rho} p={p}");
                    assert_eq!(a.lhs.real_part(), b.lhs.real_part());
                    assert_eq!(a.lhs.imag_part(), -&b.lhs.imag_part());
                }
            }
        }
    }
}

#[test]
fn unit_branches_satisfy_every_relation() {
    let cases = [(Family::Bernoulli, s("1")), (Family::Genocchi, s("-1"))];
    for (family, lambda) in &cases {
        for alpha in 0..=2 {
            for (n, m) in [(0, 0), (1, 2), (3, 1)] {
                for p in 0..=n + m {
                    assert!(
                        verify_theorem1_low(*family, alpha, lambda, n, m, p, &s("1/3"))
                            .unwrap()
                            .holds
                    );
                }
                for p in n + m + 1..=n + m + 3 {
                    assert!(
                        verify_theorem1_high(*family, alpha, lambda, n, m, p, &s("-2"))
                            .unwrap()
                            .holds
                    );
                }
                for p in 0..=n + m + 3 {
                    assert!(verify_theorem2(*family, alpha, lambda, n, m, p).unwrap().holds);
                }
                for s_ in 1..=n + m {
                    assert!(verify_corollary2(*family, alpha, lambda, n, m, s_).unwrap().holds);
                }
                assert!(verify_remark_r1(*family, alpha, lambda, n, m).unwrap().holds);
                assert!(verify_corollary1(*family, lambda, n, m).unwrap().holds);
            }
            for p in 0..8 {
                assert!(verify_functional_relation(*family, alpha, lambda, p).unwrap().holds);
                assert!(verify_theorem3(*family, alpha, lambda, p, &s("i")).unwrap().holds);
            }
        }
    }
}

#[test]
fn lacunary_sides_are_real() {
    for family in Family::ALL {
        for alpha in 0..=3 {
            for p in 0..=12 {
                let r = verify_lacunary(family, alpha, p).unwrap();
                assert!(r.holds, "{family} alpha={alpha} p={p}");
                assert!(r.lhs.is_real() && r.rhs.is_real());
            }
        }
    }
}
