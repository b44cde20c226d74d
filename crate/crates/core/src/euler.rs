//! Euler polynomials and Bernoulli numbers from their generating functions,
//! the identities they satisfy, and projection onto an Euler basis.
//!
//! Both sequences are produced by truncated power-series division:
//!
//! ```text
//! 2 e^{xw} / (e^w + 1) = sum_n E_n(x) w^n / n!
//!       w / (e^w - 1)  = sum_n B_n     w^n / n!
//! ```

use std::fmt::Write as _;

use num::{BigInt, One, Zero};

use crate::scalar::{int, CPoly, Rational};
use crate::xpoly::{Coefficient, XPoly};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn inv_factorial(n: usize) -> Rational {
    Rational::new(BigInt::one(), factorial(n))
}

fn pow2(n: usize) -> Rational {
    Rational::from_integer(BigInt::one() << n)
}

/// Memoized `E_0..=E_max` and `B_0..=B_max`.
#[derive(Clone, Debug)]
pub struct EulerTable {
    polys: Vec<CPoly>,
    bernoullis: Vec<Rational>,
    max_degree: usize,
}

impl EulerTable {
    pub fn build(max_degree: usize) -> Self {
        let len = max_degree + 1;

        // numerator 2 e^{xw}, denominator e^w + 1
        let mut xk = CPoly::one();
        let mut numer = Vec::with_capacity(len);
        for n in 0..len {
            numer.push(xk.scale(&(int(2) * inv_factorial(n))));
            xk = &xk * &CPoly::x();
        }
        let denom: Vec<Rational> = (0..len)
            .map(|n| if n == 0 { int(2) } else { inv_factorial(n) })
            .collect();
        let quotient = series_div(&numer, &denom);
        let polys = quotient
            .iter()
            .enumerate()
            .map(|(n, q)| q.scale(&Rational::from_integer(factorial(n))))
            .collect();

        // w / (e^w - 1) = 1 / sum_n w^n/(n+1)!
        let denom: Vec<Rational> = (0..len).map(|n| inv_factorial(n + 1)).collect();
        let mut unit = vec![CPoly::zero(); len];
        unit[0] = CPoly::one();
        let bernoullis = series_div(&unit, &denom)
            .iter()
            .enumerate()
            .map(|(n, b)| b.constant_term() * Rational::from_integer(factorial(n)))
            .collect();

        Self {
            polys,
            bernoullis,
            max_degree,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// `E_n(x)`.
    pub fn euler(&self, n: usize) -> &CPoly {
        &self.polys[n]
    }

    pub fn euler_x(&self, n: usize) -> XPoly<Rational> {
        XPoly::<Rational>::from_cpoly(&self.polys[n])
    }

    /// `B_n`, with the convention `B_1 = -1/2`.
    pub fn bernoulli(&self, n: usize) -> &Rational {
        &self.bernoullis[n]
    }

    /// One line per degree: `E_n = ...` then `B_n = ...`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (n, p) in self.polys.iter().enumerate() {
            writeln!(out, "E_{n} = {p}").unwrap();
        }
        for (n, b) in self.bernoullis.iter().enumerate() {
            writeln!(out, "B_{n} = {b}").unwrap();
        }
        out
    }
}

/// `a / b` as truncated power series; `b[0]` must be invertible.
fn series_div(a: &[CPoly], b: &[Rational]) -> Vec<CPoly> {
    let b0_inv = b[0].recip();
    let mut q: Vec<CPoly> = Vec::with_capacity(a.len());
    for n in 0..a.len() {
        let mut acc = a[n].clone();
        for k in 1..=n.min(b.len() - 1) {
            acc.add_scaled(&q[n - k], &-&b[k]);
        }
        q.push(acc.scale(&b0_inv));
    }
    q
}

/// Residual of
/// `x(x-1)E_{2n} = E_{2n+2} - 2(2n)! sum_{k=1}^n (1-2^{2k}) B_{2k} / ((2n-2k+1)!(2k)!) E_{2n-2k+2}`.
pub fn check_product_identity(n: usize, table: &EulerTable) -> CPoly {
    assert!(
        table.max_degree() >= 2 * n + 2,
        "table too small for n = {n}"
    );
    let x = CPoly::x();
    let x_xm1 = &x * &(&x - &CPoly::one());
    let mut residual = &x_xm1 * table.euler(2 * n);
    residual -= table.euler(2 * n + 2);
    let lead = Rational::from_integer(BigInt::from(2) * factorial(2 * n));
    for k in 1..=n {
        let c = (Rational::one() - pow2(2 * k)) * table.bernoulli(2 * k)
            / Rational::from_integer(factorial(2 * n - 2 * k + 1) * factorial(2 * k));
        residual.add_scaled(table.euler(2 * n - 2 * k + 2), &(&lead * c));
    }
    residual
}

#[derive(Clone, Debug)]
pub struct FunctionalCheck {
    /// Coefficients of `w^0..=w^{order-2}` of the functional relation.
    pub series: Vec<CPoly>,
    /// Residuals of the derived recurrence for `n = 0..=order-2`.
    pub recurrence: Vec<CPoly>,
}

impl FunctionalCheck {
    pub fn is_zero(&self) -> bool {
        self.series
            .iter()
            .chain(&self.recurrence)
            .all(CPoly::is_zero)
    }

    pub fn residual_terms(&self) -> usize {
        self.series
            .iter()
            .chain(&self.recurrence)
            .map(CPoly::len)
            .sum()
    }
}

/// Expands `f'' + f' - x(x-1) f - (2/w)(g(w) - g(2w)) f'` as a power series
/// in `w` from the tabulated data, and evaluates the coefficient recurrence
/// derived from it.
pub fn check_functional_relation(order: usize, table: &EulerTable) -> FunctionalCheck {
    assert!(order >= 2, "order must be at least 2");
    assert!(
        table.max_degree() >= order,
        "table too small for order {order}"
    );
    let x = CPoly::x();
    let x_xm1 = &x * &(&x - &CPoly::one());

    // f(w) as series with CPoly coefficients
    let f: Vec<CPoly> = (0..=order)
        .map(|n| table.euler(n).scale(&inv_factorial(n)))
        .collect();
    let df = derivative(&f);
    let ddf = derivative(&df);

    // g(w) - g(2w), divided by w and doubled
    let g_diff: Vec<Rational> = (0..=order)
        .map(|n| table.bernoulli(n) * inv_factorial(n) * (Rational::one() - pow2(n)))
        .collect();
    assert!(g_diff[0].is_zero());
    let kernel: Vec<Rational> = g_diff[1..].iter().map(|c| c * int(2)).collect();

    let len = order - 1;
    let series = (0..len)
        .map(|m| {
            let mut c = ddf[m].clone();
            c += &df[m];
            c -= &(&x_xm1 * &f[m]);
            for j in 0..=m {
                c.add_scaled(&df[m - j], &-&kernel[j]);
            }
            c
        })
        .collect();

    let recurrence = (0..len)
        .map(|n| {
            let mut c = table.euler(n + 2) + table.euler(n + 1);
            c -= &(&x_xm1 * table.euler(n));
            let lead = Rational::from_integer(BigInt::from(2) * factorial(n));
            for k in 0..=n {
                let coef = (Rational::one() - pow2(k + 1)) * table.bernoulli(k + 1)
                    / Rational::from_integer(factorial(n - k) * factorial(k + 1));
                c.add_scaled(table.euler(n - k + 1), &-(&lead * coef));
            }
            c
        })
        .collect();

    FunctionalCheck { series, recurrence }
}

fn derivative(s: &[CPoly]) -> Vec<CPoly> {
    s.iter()
        .enumerate()
        .skip(1)
        .map(|(n, c)| c.scale(&int(n as i64)))
        .collect()
}

/// Coefficients against a basis, plus whatever the basis could not absorb.
#[derive(Clone, Debug, PartialEq)]
pub struct Projection<A> {
    pub coefficients: Vec<A>,
    pub remainder: XPoly<A>,
}

/// Greedy triangular elimination of `p` against `basis`, whose degrees must
/// be strictly descending. Stops as soon as the leading degree of what is
/// left exceeds the next available basis degree.
pub fn project_onto<A: Coefficient>(p: &XPoly<A>, basis: &[XPoly<Rational>]) -> Projection<A> {
    let mut rest = p.clone();
    let mut coefficients = Vec::with_capacity(basis.len());
    let mut stopped = false;
    for (i, b) in basis.iter().enumerate() {
        let d = b.degree().expect("basis polynomial must be nonzero");
        if i > 0 {
            let prev = basis[i - 1].degree().unwrap();
            assert!(d < prev, "basis degrees must be strictly descending");
        }
        match rest.degree() {
            Some(top) if !stopped && top == d => {
                let lead_inv = b.leading_coeff().unwrap().recip();
                let mut c = A::zero_value();
                c.add_scaled(&rest.coeff(d), &lead_inv);
                rest.add_basis_multiple(b, &c, &-Rational::one());
                coefficients.push(c);
            }
            Some(top) if top > d => {
                stopped = true;
                coefficients.push(A::zero_value());
            }
            _ => coefficients.push(A::zero_value()),
        }
    }
    Projection {
        coefficients,
        remainder: rest,
    }
}

/// Projection onto `{E_d : d in basis_degrees}`.
pub fn euler_project<A: Coefficient>(
    p: &XPoly<A>,
    basis_degrees: &[usize],
    table: &EulerTable,
) -> Projection<A> {
    let basis: Vec<_> = basis_degrees.iter().map(|&d| table.euler_x(d)).collect();
    project_onto(p, &basis)
}

/// `sum_i coefficients[i] * basis[i] + remainder`.
pub fn reconstruct<A: Coefficient>(proj: &Projection<A>, basis: &[XPoly<Rational>]) -> XPoly<A> {
    let mut out = proj.remainder.clone();
    for (c, b) in proj.coefficients.iter().zip(basis) {
        out.add_basis_multiple(b, c, &Rational::one());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nc::NCPoly;
    use crate::scalar::{rat, Var};
    use proptest::prelude::*;

    fn x() -> CPoly {
        CPoly::x()
    }

    fn binomial(n: usize, k: usize) -> Rational {
        Rational::new(factorial(n), factorial(k) * factorial(n - k))
    }

    #[test]
    fn low_degree_values() {
        let t = EulerTable::build(6);
        assert_eq!(t.euler(0), &CPoly::one());
        assert_eq!(t.euler(1), &(x() - CPoly::constant(rat(1, 2))));
        assert_eq!(t.euler(2), &(x().pow(2) - x()));
        assert_eq!(t.euler(4), &(x().pow(4) - x().pow(3).scale(&int(2)) + x()));
        assert_eq!(t.bernoulli(0), &int(1));
        assert_eq!(t.bernoulli(1), &rat(-1, 2));
        assert_eq!(t.bernoulli(2), &rat(1, 6));
        assert_eq!(t.bernoulli(3), &int(0));
        assert_eq!(t.bernoulli(4), &rat(-1, 30));
    }

    // Independent characterisations: E_n(x+1) + E_n(x) = 2x^n and
    // sum_{k<=n} C(n+1,k) B_k = 0 for n >= 1.
    #[test]
    fn table_matches_defining_properties() {
        let t = EulerTable::build(24);
        for n in 0..=24 {
            let e = t.euler(n);
            let shifted = e.subst(Var::X, &(x() + CPoly::one()));
            assert_eq!(&shifted + e, x().pow(n as u32).scale(&int(2)), "E_{n}");
            assert_eq!(e.leading().unwrap().1, &int(1), "E_{n} monic");
            assert_eq!(e.degree_in(Var::X), Some(n as u16));
        }
        for n in 1..=24 {
            let s: Rational = (0..=n).map(|k| binomial(n + 1, k) * t.bernoulli(k)).sum();
            assert!(s.is_zero(), "Bernoulli recurrence at {n}");
        }
        for k in 1..12 {
            assert!(t.bernoulli(2 * k + 1).is_zero());
        }
    }

    #[test]
    fn even_euler_polynomials_vanish_at_zero_and_one() {
        let t = EulerTable::build(20);
        let xx = &x() * &(&x() - &CPoly::one());
        assert_eq!(t.euler(0).subst(Var::X, &CPoly::zero()), CPoly::one());
        for k in 1..=10 {
            let e = t.euler(2 * k);
            assert!(e.subst(Var::X, &CPoly::zero()).is_zero());
            assert!(e.divexact(&xx).is_ok());
        }
    }

    #[test]
    fn product_identity_small_cases() {
        let t = EulerTable::build(42);
        assert!(check_product_identity(0, &t).is_zero());
        // n = 1: x(x-1)E_2 = E_4 + E_2
        let lhs = &(&x() * &(&x() - &CPoly::one())) * t.euler(2);
        assert_eq!(lhs, t.euler(4) + t.euler(2));
        assert_eq!(lhs, x().pow(4) - x().pow(3).scale(&int(2)) + x().pow(2));
        assert!(check_product_identity(1, &t).is_zero());
        for n in 2..=20 {
            assert!(check_product_identity(n, &t).is_zero(), "n = {n}");
        }
    }

    #[test]
    fn product_identity_detects_perturbation() {
        let mut t = EulerTable::build(10);
        t.bernoullis[2] = rat(1, 5);
        assert!(!check_product_identity(1, &t).is_zero());
    }

    #[test]
    fn functional_relation_vanishes() {
        let t = EulerTable::build(12);
        assert!(check_functional_relation(2, &t).is_zero());
        let check = check_functional_relation(10, &t);
        assert_eq!(check.series.len(), 9);
        assert!(check.is_zero());
        // recurrence at n = 0 by hand
        let r0 = t.euler(2) + t.euler(1)
            - &(&x() * &(&x() - &CPoly::one())) * t.euler(0)
            - t.euler(1).scale(&(int(-2) * t.bernoulli(1)));
        assert!(r0.is_zero());
    }

    #[test]
    fn functional_relation_detects_bad_bernoulli() {
        let mut t = EulerTable::build(8);
        t.bernoullis[1] = rat(1, 2);
        assert!(!check_functional_relation(4, &t).is_zero());
    }

    #[test]
    fn projection_examples() {
        let t = EulerTable::build(4);
        let to_x = |p: CPoly| XPoly::<Rational>::from_cpoly(&p);

        let p = project_onto(&to_x(x().pow(2) - x()), &[t.euler_x(2), t.euler_x(0)]);
        assert_eq!(p.coefficients, vec![int(1), int(0)]);
        assert!(p.remainder.is_zero());

        let p = euler_project(&to_x(x().pow(2)), &[2, 1, 0], &t);
        assert_eq!(p.coefficients, vec![int(1), int(1), rat(1, 2)]);
        assert!(p.remainder.is_zero());

        let p = euler_project(&to_x(x().pow(2)), &[2, 0], &t);
        assert_eq!(p.coefficients, vec![int(1), int(0)]);
        assert_eq!(p.remainder, to_x(x()));
    }

    fn arb_xpoly() -> impl Strategy<Value = Vec<(i64, i64)>> {
        prop::collection::vec((-6i64..=6, 1i64..=4), 0..7)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn projection_reconstructs_scalars(cs in arb_xpoly(), mask in 0u8..64) {
            let t = EulerTable::build(6);
            let p = XPoly::new(cs.iter().map(|&(n, d)| rat(n, d)).collect());
            let degrees: Vec<usize> = (0..=6).rev().filter(|d| mask & (1 << (d % 6)) != 0).collect();
            prop_assume!(!degrees.is_empty());
            let basis: Vec<_> = degrees.iter().map(|&d| t.euler_x(d)).collect();
            let proj = euler_project(&p, &degrees, &t);
            prop_assert_eq!(reconstruct(&proj, &basis), p);
        }

        #[test]
        fn projection_reconstructs_nc_coefficients(cs in prop::collection::vec((0u32..3, 1u32..3, -4i64..=4), 0..7)) {
            let t = EulerTable::build(6);
            let coeffs: Vec<NCPoly> = cs
                .iter()
                .map(|&(kind, site, n)| {
                    let g = match kind {
                        0 => NCPoly::f(site),
                        1 => NCPoly::h(site),
                        _ => NCPoly::e(site),
                    };
                    &(&g * &NCPoly::h(1)) + &NCPoly::scalar(CPoly::int(n))
                })
                .collect();
            let p = XPoly::new(coeffs);
            let degrees = [6, 4, 2, 0];
            let basis: Vec<_> = degrees.iter().map(|&d| t.euler_x(d)).collect();
            let proj = euler_project(&p, &degrees, &t);
            prop_assert_eq!(reconstruct(&proj, &basis), p);
        }
    }
}
