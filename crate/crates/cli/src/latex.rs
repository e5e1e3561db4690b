use std::fmt::Write;

use apostol_kit::{Family, Poly, Rational, Scalar};

fn rational(r: &Rational) -> String {
    let mag = r.abs();
    if mag.is_integer() {
        mag.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
    }
}

fn signed_rational(r: &Rational) -> String {
    let body = rational(r);
    if r.is_negative() {
        format!("-{body}")
    } else {
        body
    }
}

/// A scalar as a LaTeX math fragment. Non-real values are parenthesized.
pub fn scalar(z: &Scalar) -> String {
    match z {
        Scalar::Rational(r) => signed_rational(r),
        Scalar::Gaussian(g) => {
            let imag = if g.im.abs().is_one() {
                String::new()
            } else {
                rational(&g.im)
            };
            let sign = if g.im.is_negative() { "-" } else { "+" };
            if g.re.is_zero() {
                let lead = if g.im.is_negative() { "-" } else { "" };
                format!("{lead}{imag}i")
            } else {
                format!("\\left({} {sign} {imag}i\\right)", signed_rational(&g.re))
            }
        }
    }
}

fn monomial(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "x".to_string(),
        _ => format!("x^{{{k}}}"),
    }
}

/// Terms in ascending degree, matching the JSON coefficient order.
pub fn poly(p: &Poly) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let negative = matches!(c, Scalar::Rational(r) if r.is_negative());
        let c_abs = if negative { -c.clone() } else { c.clone() };
        let body = match (c_abs.is_one(), k) {
            (true, 0) => "1".to_string(),
            (true, _) => monomial(k),
            (false, _) => format!("{}{}", scalar(&c_abs), monomial(k)),
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn symbol(family: Family) -> char {
    match family {
        Family::Bernoulli => 'B',
        Family::Euler => 'E',
        Family::Genocchi => 'G',
    }
}

/// One tabular of `k & entry` rows.
pub fn table(
    family: Family,
    alpha: u32,
    lambda: &Scalar,
    numbers: bool,
    rows: impl IntoIterator<Item = (usize, String)>,
) -> String {
    let head = if numbers {
        format!("{}_k^{{({alpha})}}({})", symbol(family), scalar(lambda))
    } else {
        format!("{}_k^{{({alpha})}}(x;{})", symbol(family), scalar(lambda))
    };
    let mut out = String::new();
    writeln!(out, "% {family} alpha={alpha} lambda={lambda}").unwrap();
    out.push_str("\\begin{tabular}{rl}\n\\hline\n");
    writeln!(out, "$k$ & ${head}$ \\\\").unwrap();
    out.push_str("\\hline\n");
    for (k, entry) in rows {
        writeln!(out, "{k} & ${entry}$ \\\\").unwrap();
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    out
}
