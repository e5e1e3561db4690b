//! Both sides of every identity, assembled from precomputed polynomial
//! sequences `seq[k] = Lambda_k(x)`.
//!
//! Indices below zero read as the zero polynomial, and the matching
//! `1/(negative)!` weights are zero as well. Sequences must be long enough
//! for the largest index touched; shorter ones panic.
//!
//! These functions do not check that the sequences really are Apostol
//! polynomials, which lets tests feed them corrupted data.

use crate::apostol::Family;
use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, pochhammer, reciprocal_factorial, Scalar};
use crate::pade::PadeData;
use crate::poly::{Poly, ZERO};

fn at(seq: &[Poly], k: i64) -> &Poly {
    if k < 0 {
        &ZERO
    } else {
        &seq[k as usize]
    }
}

fn int(v: i64) -> Scalar {
    Scalar::from(v)
}

fn choose(n: usize, k: i64) -> Scalar {
    Scalar::from(binomial(n as u64, k))
}

fn fact(n: usize) -> Scalar {
    Scalar::from(factorial(n as u64))
}

fn rfact(n: i64) -> Scalar {
    Scalar::from(reciprocal_factorial(n))
}

fn sign(e: usize) -> Scalar {
    int(if e.is_multiple_of(2) { 1 } else { -1 })
}

fn poch(a: i64, j: usize) -> Scalar {
    pochhammer(&int(a), j as u64)
}

/// `+1` for Euler and Genocchi, `-1` for Bernoulli: the sign in front of the
/// `lambda e^t -/+ 1` denominator.
fn family_sign(family: Family) -> Scalar {
    match family {
        Family::Bernoulli => int(-1),
        Family::Euler | Family::Genocchi => int(1),
    }
}

/// Addition theorem with Padé weights. Both regimes of `p` are handled; for
/// `p >= n+m+1` the right side carries the supplementary sum over
/// `Lambda_0 .. Lambda_{p-m-n-1}` at `x`.
///
/// Both sides are multiplied by `p!/(n+m)!`, so with `m = 0` (`n = 0`) the
/// sides coincide term for term with [`addition`] ([`dual_addition`]).
pub fn theorem1(at_x: &[Poly], at_xy: &[Poly], n: usize, m: usize, p: usize, y: &Scalar) -> (Poly, Poly) {
    let pi = p as i64;
    let neg_y = -y;
    let mut lhs = Poly::zero();
    for k in 0..=n {
        let w = fact(n + m - k) * rfact(pi - k as i64) * choose(n, k as i64) * y.powu(k as u32);
        lhs.add_scaled(&w, at(at_x, pi - k as i64));
    }
    let mut rhs = Poly::zero();
    for k in 0..=m {
        let w = fact(n + m - k) * rfact(pi - k as i64) * choose(m, k as i64) * neg_y.powu(k as u32);
        rhs.add_scaled(&w, at(at_xy, pi - k as i64));
    }
    if p > n + m {
        let head = sign(m) * fact(n) * fact(m) * rfact(pi);
        for (k, base) in at_x[..p - m - n].iter().enumerate() {
            let w = &head * &(y.powu((p - k) as u32) * choose(p, k as i64) * choose(p - k - n - 1, m as i64));
            rhs.add_scaled(&-w, base);
        }
    }
    let norm = fact(p) * rfact((n + m) as i64);
    (lhs.scale(&norm), rhs.scale(&norm))
}

/// `sum_k C(p,k) y^k Lambda_{p-k}(x)` against `Lambda_p(x+y)`.
pub fn addition(at_x: &[Poly], at_xy: &[Poly], p: usize, y: &Scalar) -> (Poly, Poly) {
    let mut lhs = Poly::zero();
    for k in 0..=p {
        lhs.add_scaled(&(choose(p, k as i64) * y.powu(k as u32)), &at_x[p - k]);
    }
    (lhs, at_xy[p].clone())
}

/// `Lambda_p(x)` against `sum_k C(p,k) (-y)^k Lambda_{p-k}(x+y)`.
pub fn dual_addition(at_x: &[Poly], at_xy: &[Poly], p: usize, y: &Scalar) -> (Poly, Poly) {
    let neg_y = -y;
    let mut rhs = Poly::zero();
    for k in 0..=p {
        rhs.add_scaled(&(choose(p, k as i64) * neg_y.powu(k as u32)), &at_xy[p - k]);
    }
    (at_x[p].clone(), rhs)
}

/// Relation between orders `alpha` (`lower`) and `alpha + 1` (`upper`) with
/// Padé weights, including the remainder correction once `p > n + m`.
pub fn theorem2(
    family: Family,
    lower: &[Poly],
    upper: &[Poly],
    lambda: &Scalar,
    n: usize,
    m: usize,
    p: usize,
) -> (Poly, Poly) {
    let pd = PadeData::build(n, m);
    let pi = p as i64;
    let fs = family_sign(family);
    let (factor, drop) = match family {
        Family::Bernoulli => (int(1), 1),
        Family::Euler => (int(2), 0),
        Family::Genocchi => (int(2), 1),
    };
    let mut lhs = Poly::zero();
    for j in 0..=n.max(m) {
        let a = pd.numer.get(j).cloned().map(Scalar::from).unwrap_or_default();
        let b = pd.denom.get(j).cloned().map(Scalar::from).unwrap_or_default();
        let w = (lambda * &a + &fs * &b) * rfact(pi - j as i64);
        lhs.add_scaled(&w, at(upper, pi - j as i64));
    }
    let mut rhs = Poly::zero();
    for (j, b) in pd.denom.iter().enumerate() {
        let idx = pi - j as i64 - drop;
        let w = &factor * &(Scalar::from(b.clone()) * rfact(idx));
        rhs.add_scaled(&w, at(lower, idx));
    }
    if p > n + m {
        for j in 0..p - m - n {
            let idx = p - m - n - j - 1;
            let w = lambda * &(Scalar::from(pd.gamma(j)) * rfact(idx as i64));
            rhs.add_scaled(&-w, &upper[idx]);
        }
    }
    (lhs, rhs)
}

/// `p = m + n`, `alpha = 0` specialisation, with the closed-form right side.
/// `order_one[k]` is `Lambda_k^(1)`.
pub fn corollary1(family: Family, order_one: &[Poly], lambda: &Scalar, n: usize, m: usize) -> (Poly, Poly) {
    let mut lhs = Poly::zero();
    for k in 0..=n {
        lhs.add_scaled(&(lambda * &choose(n, k as i64)), &order_one[m + k]);
    }
    let outer = family_sign(family) * sign(m);
    for k in 0..=m {
        lhs.add_scaled(&(&outer * &(sign(k) * choose(m, k as i64))), &order_one[n + k]);
    }
    let x_minus_one = Poly::new(vec![int(-1), int(1)]);
    let base = &Poly::x().pow(n as u32) * &x_minus_one.pow(m as u32);
    let rhs = match family {
        Family::Bernoulli => base.derivative(),
        Family::Euler => base.scale(&int(2)),
        Family::Genocchi => base.derivative().scale(&int(2)),
    };
    (lhs, rhs)
}

/// `p = m + n - s` specialisation with rising-factorial weights.
pub fn corollary2(
    family: Family,
    lower: &[Poly],
    upper: &[Poly],
    lambda: &Scalar,
    n: usize,
    m: usize,
    s: usize,
) -> (Poly, Poly) {
    let (ni, mi, si) = (n as i64, m as i64, s as i64);
    let mut lhs = Poly::zero();
    for k in 0..=ni {
        let w = lambda * &(choose(n, k) * poch(mi - si + k + 1, s));
        lhs.add_scaled(&w, at(upper, mi - si + k));
    }
    let outer = family_sign(family) * sign(m);
    for k in 0..=mi {
        let w = &outer * &(sign(k as usize) * choose(m, k) * poch(ni - si + k + 1, s));
        lhs.add_scaled(&w, at(upper, ni - si + k));
    }
    let factor = match family {
        Family::Bernoulli => int(1),
        Family::Euler | Family::Genocchi => int(2),
    };
    let mut rhs = Poly::zero();
    for k in 0..=mi {
        let head = &factor * &(sign(m) * sign(k as usize) * choose(m, k));
        match family {
            Family::Euler => rhs.add_scaled(&(head * poch(ni - si + k + 1, s)), at(lower, ni - si + k)),
            Family::Bernoulli | Family::Genocchi => {
                rhs.add_scaled(&(head * poch(ni - si + k, s + 1)), at(lower, ni - si + k - 1))
            }
        }
    }
    (lhs, rhs)
}

/// `p = m + n + 1` specialisation.
pub fn remark_r1(family: Family, lower: &[Poly], upper: &[Poly], lambda: &Scalar, n: usize, m: usize) -> (Poly, Poly) {
    let inv = |v: usize| Scalar::from(crate::exactnum::Rational::new(1, v as i64).expect("v > 0"));
    let mut lhs = Poly::zero();
    for j in 0..=n {
        lhs.add_scaled(&(lambda * &(choose(n, j as i64) * inv(m + j + 1))), &upper[m + j + 1]);
    }
    let outer = family_sign(family) * sign(m);
    for j in 0..=m {
        let w = &outer * &(sign(j) * choose(m, j as i64) * inv(n + j + 1));
        lhs.add_scaled(&w, &upper[n + j + 1]);
    }
    let mut rhs = Poly::zero();
    for j in 0..=m {
        let head = sign(m) * sign(j) * choose(m, j as i64);
        match family {
            Family::Bernoulli => rhs.add_scaled(&head, &lower[n + j]),
            Family::Euler => rhs.add_scaled(&(int(2) * head * inv(n + j + 1)), &lower[n + j + 1]),
            Family::Genocchi => rhs.add_scaled(&(int(2) * head), &lower[n + j]),
        }
    }
    let tail = lambda * &(sign(m) * fact(n) * fact(m) * rfact((n + m + 1) as i64));
    rhs.add_scaled(&-tail, &upper[0]);
    (lhs, rhs)
}

/// Weighted sum over `(1+rho)^{-j}` powers, the intermediate binomial sum,
/// and the closed form at the shifted argument `x - rho/(1+rho)`.
pub fn theorem3(
    family: Family,
    lower: &[Poly],
    upper: &[Poly],
    lambda: &Scalar,
    p: usize,
    rho: &Scalar,
) -> Result<(Poly, Poly, Poly)> {
    let u = (&Scalar::one() + rho).inv().map_err(|_| Error::InvalidRho)?;
    let w = -(rho * &u);
    let fs = family_sign(family);
    let mut lhs = Poly::zero();
    for j in 0..=p {
        let weight = lambda * &u.powu(j as u32) + &fs * &w.powu(j as u32);
        lhs.add_scaled(&(choose(p, j as i64) * weight), &upper[p - j]);
    }
    let (middle, rhs) = match family {
        Family::Euler => {
            let mut mid = Poly::zero();
            for j in 0..=p {
                mid.add_scaled(&(choose(p, j as i64) * w.powu(j as u32)), &lower[p - j]);
            }
            (mid.scale(&int(2)), lower[p].shift(&w).scale(&int(2)))
        }
        Family::Bernoulli | Family::Genocchi if p == 0 => (Poly::zero(), Poly::zero()),
        Family::Bernoulli | Family::Genocchi => {
            let factor = match family {
                Family::Bernoulli => int(p as i64),
                _ => int(2 * p as i64),
            };
            let mut mid = Poly::zero();
            for j in 0..p {
                mid.add_scaled(&(choose(p - 1, j as i64) * w.powu(j as u32)), &lower[p - 1 - j]);
            }
            (mid.scale(&factor), lower[p - 1].shift(&w).scale(&factor))
        }
    };
    Ok((lhs, middle, rhs))
}

/// Unit-step functional equations, e.g. `lambda B_p(X+1) - B_p(X) = p B_{p-1}(X)`.
pub fn functional(family: Family, lower: &[Poly], upper: &[Poly], lambda: &Scalar, p: usize) -> (Poly, Poly) {
    let mut lhs = upper[p].shift(&Scalar::one()).scale(lambda);
    lhs.add_scaled(&family_sign(family), &upper[p]);
    let rhs = match family {
        Family::Bernoulli => at(lower, p as i64 - 1).scale(&int(p as i64)),
        Family::Euler => lower[p].scale(&int(2)),
        Family::Genocchi => at(lower, p as i64 - 1).scale(&int(2 * p as i64)),
    };
    (lhs, rhs)
}

/// Gap-4 recurrences at `lambda = 1`. The left side is rational; the right
/// side is the imaginary (Bernoulli) or real (Euler, Genocchi) part of a
/// polynomial shifted by `-(1+i)/2`.
pub fn lacunary(family: Family, lower: &[Poly], upper: &[Poly], p: usize) -> (Poly, Poly) {
    let residue = match family {
        Family::Bernoulli => 2,
        Family::Euler | Family::Genocchi => 0,
    };
    let two = int(2);
    let mut lhs = Poly::zero();
    for k in (residue..=p).step_by(4) {
        debug_assert!(k % 4 == residue);
        let sign_exp = match family {
            Family::Bernoulli => (k + 2) / 4,
            _ => k / 4,
        };
        let pow2 = two.pow(1 - (k / 2) as i64).expect("2 is nonzero");
        let w = choose(p, k as i64) * pow2 * sign(sign_exp);
        lhs.add_scaled(&w, &upper[p - k]);
    }
    let shift = -(&(&Scalar::one() + &Scalar::i()) * &Scalar::from_ratio(1, 2).expect("2 is nonzero"));
    let rhs = match family {
        Family::Bernoulli => at(lower, p as i64 - 1).shift(&shift).scale(&int(p as i64)).imag_part(),
        Family::Euler => lower[p].shift(&shift).scale(&two).real_part(),
        Family::Genocchi => at(lower, p as i64 - 1)
            .shift(&shift)
            .scale(&int(2 * p as i64))
            .real_part(),
    };
    (lhs, rhs)
}

/// `c_j = (1 - (-i)^j)(1+i)^{-j}` computed directly in Q(i).
pub fn cj_direct(j: usize) -> Scalar {
    let minus_i = -Scalar::i();
    let one_plus_i = &Scalar::one() + &Scalar::i();
    let head = &Scalar::one() - &minus_i.powu(j as u32);
    &head * &one_plus_i.pow(-(j as i64)).expect("1+i is nonzero")
}

/// The four residue-class closed forms of `c_j`.
pub fn cj_closed_form(j: usize) -> Scalar {
    let two = int(2);
    let ji = j as i64;
    match j % 4 {
        0 => Scalar::zero(),
        1 => sign((j - 1) / 4) * two.pow((1 - ji) / 2).expect("2 is nonzero"),
        2 => sign((j + 2) / 4) * two.pow((2 - ji) / 2).expect("2 is nonzero") * Scalar::i(),
        _ => sign((j + 1) / 4) * two.pow((1 - ji) / 2).expect("2 is nonzero"),
    }
}
