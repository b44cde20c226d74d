//! Polynomials in the spectral parameter `x` with coefficients in an
//! arbitrary algebra over the rationals.

use num::Zero;

use crate::scalar::{CPoly, Rational, Var};

/// Vector-space structure over [`Rational`]; enough for triangular
/// elimination against a scalar basis.
pub trait Coefficient: Clone + PartialEq {
    fn zero_value() -> Self;
    fn is_zero_value(&self) -> bool;
    /// `self += factor * other`
    fn add_scaled(&mut self, other: &Self, factor: &Rational);
}

impl Coefficient for Rational {
    fn zero_value() -> Self {
        Rational::zero()
    }

    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }

    fn add_scaled(&mut self, other: &Self, factor: &Rational) {
        *self += other * factor;
    }
}

impl Coefficient for CPoly {
    fn zero_value() -> Self {
        CPoly::zero()
    }

    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }

    fn add_scaled(&mut self, other: &Self, factor: &Rational) {
        CPoly::add_scaled(self, other, factor)
    }
}

/// `sum_k coeffs[k] * x^k`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq)]
pub struct XPoly<A> {
    coeffs: Vec<A>,
}

impl<A: Coefficient> XPoly<A> {
    pub fn new(mut coeffs: Vec<A>) -> Self {
        while coeffs.last().is_some_and(Coefficient::is_zero_value) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> A {
        self.coeffs.get(k).cloned().unwrap_or_else(A::zero_value)
    }

    pub fn coeffs(&self) -> &[A] {
        &self.coeffs
    }

    /// `self += factor * basis * coeff`, where `basis` has scalar coefficients.
    pub fn add_basis_multiple(&mut self, basis: &XPoly<Rational>, coeff: &A, factor: &Rational) {
        let needed = basis.coeffs.len();
        if self.coeffs.len() < needed {
            self.coeffs.resize_with(needed, A::zero_value);
        }
        for (k, b) in basis.coeffs.iter().enumerate() {
            if !Coefficient::is_zero_value(b) {
                self.coeffs[k].add_scaled(coeff, &(b * factor));
            }
        }
        while self.coeffs.last().is_some_and(Coefficient::is_zero_value) {
            self.coeffs.pop();
        }
    }
}

impl XPoly<Rational> {
    /// Reads a polynomial in `x` alone; panics if other variables occur.
    pub fn from_cpoly(p: &CPoly) -> Self {
        let deg = p.degree_in(Var::X).unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (m, c) in p.terms() {
            assert_eq!(
                m.degree(),
                u32::from(m.exponent(Var::X)),
                "expected a polynomial in x only"
            );
            coeffs[m.exponent(Var::X) as usize] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn to_cpoly(&self) -> CPoly {
        CPoly::from_coeffs(Var::X, &self.coeffs)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }
}

impl XPoly<CPoly> {
    /// Splits `p` by powers of `x`.
    pub fn from_cpoly(p: &CPoly) -> Self {
        let deg = p.degree_in(Var::X).unwrap_or(0);
        Self::new((0..=deg).map(|k| p.coeff_of(Var::X, k)).collect())
    }

    pub fn to_cpoly(&self) -> CPoly {
        let mut out = CPoly::zero();
        let mut xk = CPoly::one();
        for c in &self.coeffs {
            out += &(c * &xk);
            xk = &xk * &CPoly::x();
        }
        out
    }
}
