//! Exact rationals and sparse commutative polynomials in the fixed
//! indeterminates `x`, `y`, `z`, `mu0`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The closed set of commuting indeterminates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
    Mu0,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X, Var::Y, Var::Z, Var::Mu0];

    fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::Mu0 => "mu0",
        }
    }
}

/// Dense exponent vector over [`Var::ALL`], ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u16; 4]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn exponent(&self, var: Var) -> u16 {
        self.0[var.index()]
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut out = self.0;
        for (o, e) in out.iter_mut().zip(other.0) {
            *o += e;
        }
        Monomial(out)
    }

    fn divide(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = [0u16; 4];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0)) {
            *o = a.checked_sub(b)?;
        }
        Some(Monomial(out))
    }

    fn with_exponent(mut self, var: Var, e: u16) -> Monomial {
        self.0[var.index()] = e;
        self
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over [`Rational`] in `x, y, z, mu0`.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl CPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::default(), c);
        p
    }

    pub fn int(n: i64) -> Self {
        Self::constant(int(n))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::default().with_exponent(v, 1), Rational::one())
    }

    pub fn x() -> Self {
        Self::var(Var::X)
    }

    pub fn y() -> Self {
        Self::var(Var::Y)
    }

    pub fn z() -> Self {
        Self::var(Var::Z)
    }

    pub fn mu0() -> Self {
        Self::var(Var::Mu0)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// Univariate polynomial in `var` from ascending coefficients.
    pub fn from_coeffs(var: Var, coeffs: &[Rational]) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::default().with_exponent(var, k as u16), c.clone());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn as_constant(&self) -> Option<&Rational> {
        match self.terms.len() {
            0 => None,
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then_some(c)
            }
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::default())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn degree_in(&self, var: Var) -> Option<u16> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &CPoly, factor: &Rational) {
        if factor.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(*m, c * factor);
        }
    }

    pub fn scale(&self, factor: &Rational) -> CPoly {
        if factor.is_zero() {
            return CPoly::zero();
        }
        CPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * factor)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> CPoly {
        let mut out = CPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, var: Var, k: u16) -> CPoly {
        let mut out = CPoly::zero();
        for (m, c) in &self.terms {
            if m.exponent(var) == k {
                out.add_term(m.with_exponent(var, 0), c.clone());
            }
        }
        out
    }

    /// Substitutes `value` for every occurrence of `var`.
    pub fn subst(&self, var: Var, value: &CPoly) -> CPoly {
        let max = self.degree_in(var).unwrap_or(0);
        let mut powers = vec![CPoly::one()];
        for k in 1..=max as usize {
            let next = &powers[k - 1] * value;
            powers.push(next);
        }
        let mut out = CPoly::zero();
        for (m, c) in &self.terms {
            let rest = CPoly::monomial(m.with_exponent(var, 0), c.clone());
            out += &(&rest * &powers[m.exponent(var) as usize]);
        }
        out
    }

    /// Exact quotient `self / d` by long division in the canonical order.
    pub fn divexact(&self, d: &CPoly) -> Result<CPoly> {
        let (dm, dc) = d.leading().ok_or(Error::DivisionByZero)?;
        let dc_inv = dc.recip();
        let mut rem = self.clone();
        let mut quot = CPoly::zero();
        while let Some((pm, pc)) = rem.leading() {
            let Some(qm) = pm.divide(dm) else {
                return Err(Error::NotDivisible {
                    dividend: self.to_string(),
                    divisor: d.to_string(),
                });
            };
            let qc = pc * &dc_inv;
            let step = CPoly::monomial(qm, qc);
            rem -= &(&step * d);
            quot += &step;
        }
        Ok(quot)
    }
}

impl From<Rational> for CPoly {
    fn from(c: Rational) -> Self {
        CPoly::constant(c)
    }
}

impl<'a> AddAssign<&'a CPoly> for CPoly {
    fn add_assign(&mut self, rhs: &'a CPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a CPoly> for CPoly {
    fn sub_assign(&mut self, rhs: &'a CPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl<'b> Add<&'b CPoly> for &CPoly {
    type Output = CPoly;
    fn add(self, rhs: &'b CPoly) -> CPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'b> Sub<&'b CPoly> for &CPoly {
    type Output = CPoly;
    fn sub(self, rhs: &'b CPoly) -> CPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'b> Mul<&'b CPoly> for &CPoly {
    type Output = CPoly;
    fn mul(self, rhs: &'b CPoly) -> CPoly {
        let mut out = CPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &CPoly {
    type Output = CPoly;
    fn neg(self) -> CPoly {
        CPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for CPoly {
    type Output = CPoly;
    fn neg(self) -> CPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<CPoly> for CPoly {
            type Output = CPoly;
            fn $f(self, rhs: CPoly) -> CPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a CPoly> for CPoly {
            type Output = CPoly;
            fn $f(self, rhs: &'a CPoly) -> CPoly {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<CPoly> for &'a CPoly {
            type Output = CPoly;
            fn $f(self, rhs: CPoly) -> CPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn fmt_monomial(m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for v in Var::ALL {
        let e = m.exponent(v);
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(v.name())?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Writes `|c|*m` without its sign.
pub(crate) fn fmt_abs_term(m: &Monomial, c: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let a = c.abs();
    if m.degree() == 0 {
        return write!(f, "{a}");
    }
    if !a.is_one() {
        write!(f, "{a}*")?;
    }
    fmt_monomial(m, f)
}

/// Canonical rendering: terms in descending graded-lex order, explicit
/// signs, e.g. `x^2 - 2*x*mu0 + 1/4`.
impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            fmt_abs_term(m, c, f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x() -> CPoly {
        CPoly::x()
    }

    fn c(n: i64) -> CPoly {
        CPoly::int(n)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(((x() - c(1)) * x()).to_string(), "x^2 - x");
        let p = x() * x() - x();
        assert_eq!((&p * &p).to_string(), "x^4 - 2*x^3 + x^2");
        let s = (x() - CPoly::mu0()) + (x() + CPoly::mu0());
        assert_eq!(s, x().scale(&int(2)));
    }

    #[test]
    fn divexact_examples() {
        let p = x() * x() - x();
        assert_eq!(p.divexact(&(x() - c(1))).unwrap(), x());

        let e4 = x().pow(4) - x().pow(3).scale(&int(2)) + x();
        let q = e4.divexact(&(x() - c(1))).unwrap();
        assert_eq!(q, x().pow(3) - x().pow(2) - x());
        let q2 = q.divexact(&x()).unwrap();
        assert_eq!(q2, x().pow(2) - x() - c(1));

        assert!(matches!(
            p.divexact(&(x() + c(1))),
            Err(Error::NotDivisible { .. })
        ));
        assert!(matches!(
            p.divexact(&CPoly::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn subst_examples() {
        let p = x().pow(3) - x();
        assert_eq!(p.subst(Var::X, &-x()), -x().pow(3) + x());
        let e4 = x().pow(4) - x().pow(3).scale(&int(2)) + x();
        assert!(e4.subst(Var::X, &CPoly::zero()).is_zero());
        assert_eq!(
            (x() - CPoly::mu0()).subst(Var::X, &CPoly::zero()),
            -CPoly::mu0()
        );
    }

    #[test]
    fn rendering_is_canonical() {
        let p = CPoly::mu0() * x().scale(&int(-2)) + x().pow(2) + CPoly::constant(rat(1, 4));
        assert_eq!(p.to_string(), "x^2 - 2*x*mu0 + 1/4");
        assert_eq!((-c(3)).to_string(), "-3");
        assert_eq!(CPoly::zero().to_string(), "0");
    }

    fn arb_cpoly() -> impl Strategy<Value = CPoly> {
        let term = (0u16..=2, 0u16..=2, 0u16..=1, 0u16..=1, -5i64..=5, 1i64..=3);
        prop::collection::vec(term, 0..5).prop_map(|ts| {
            let mut p = CPoly::zero();
            for (a, b, z, m, n, d) in ts {
                p.add_term(Monomial([a, b, z, m]), rat(n, d));
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn ring_axioms(a in arb_cpoly(), b in arb_cpoly(), c in arb_cpoly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn divexact_inverts_mul(a in arb_cpoly(), b in arb_cpoly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).divexact(&b).unwrap(), a);
        }

        #[test]
        fn reflection_substitution_is_involutive(a in arb_cpoly()) {
            let once = a.subst(Var::X, &-CPoly::x());
            prop_assert_eq!(once.subst(Var::X, &-CPoly::x()), a);
        }
    }
}
