//! Elements of `U(sl2)^{⊗n}` in PBW normal form.
//!
//! Generators are `f_i, h_i, e_i` for tensor sites `i >= 1`. A normal word
//! lists sites in ascending order and, within a site, all `f`s, then all
//! `h`s, then all `e`s. Coefficients are [`CPoly`]s, so spectral parameters
//! and `mu0` ride along as central scalars.
//!
//! Two routes to the normal form are provided: [`normal_form`] rewrites
//! adjacent pairs with
//!
//! ```text
//! e f -> f e + h      h f -> f h - 2 f      e h -> h e - 2 e
//! ```
//!
//! while [`NCPoly`] multiplication uses closed-form reordering of
//! `f^a h^b e^c` monomials. The test suites check the two against each other.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{BigInt, One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::{fmt_abs_term, int, CPoly, Rational, Var};
use crate::xpoly::{Coefficient, XPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    F,
    H,
    E,
}

impl GenKind {
    fn letter(self) -> char {
        match self {
            GenKind::F => 'f',
            GenKind::H => 'h',
            GenKind::E => 'e',
        }
    }
}

/// One sl2 generator on one tensor site.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GenSymbol {
    pub kind: GenKind,
    pub site: u32,
}

impl GenSymbol {
    pub fn new(kind: GenKind, site: u32) -> Self {
        assert!(site >= 1, "sites are numbered from 1");
        Self { kind, site }
    }

    pub fn f(site: u32) -> Self {
        Self::new(GenKind::F, site)
    }

    pub fn h(site: u32) -> Self {
        Self::new(GenKind::H, site)
    }

    pub fn e(site: u32) -> Self {
        Self::new(GenKind::E, site)
    }

    fn in_order_before(&self, next: &GenSymbol) -> bool {
        (self.site, self.kind) <= (next.site, next.kind)
    }
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.site)
    }
}

/// `f^f h^h e^e` on a single site.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct SiteMono {
    site: u32,
    f: u32,
    h: u32,
    e: u32,
}

impl SiteMono {
    fn degree(&self) -> u32 {
        self.f + self.h + self.e
    }
}

/// A PBW-ordered word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<SiteMono>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(SiteMono::degree).sum()
    }

    /// `(#f, #h, #e)` at `site`.
    pub fn exponents_at(&self, site: u32) -> (u32, u32, u32) {
        self.0
            .iter()
            .find(|m| m.site == site)
            .map_or((0, 0, 0), |m| (m.f, m.h, m.e))
    }

    /// Eigenvalue of `ad(h_site)`: `2(#e - #f)` at that site.
    pub fn weight_at(&self, site: u32) -> i64 {
        let (f, _, e) = self.exponents_at(site);
        2 * (i64::from(e) - i64::from(f))
    }

    pub fn max_site(&self) -> u32 {
        self.0.last().map_or(0, |m| m.site)
    }

    pub fn symbols(&self) -> Vec<GenSymbol> {
        let mut out = Vec::with_capacity(self.degree() as usize);
        for m in &self.0 {
            for (kind, n) in [(GenKind::F, m.f), (GenKind::H, m.h), (GenKind::E, m.e)] {
                out.extend(std::iter::repeat_n(
                    GenSymbol::new(kind, m.site),
                    n as usize,
                ));
            }
        }
        out
    }

    /// Groups an already-ordered symbol sequence; `None` if out of order.
    pub fn from_normal_symbols(symbols: &[GenSymbol]) -> Option<Word> {
        if symbols.windows(2).any(|w| !w[0].in_order_before(&w[1])) {
            return None;
        }
        let mut monos: Vec<SiteMono> = Vec::new();
        for s in symbols {
            if monos.last().is_none_or(|m| m.site != s.site) {
                monos.push(SiteMono {
                    site: s.site,
                    f: 0,
                    h: 0,
                    e: 0,
                });
            }
            let m = monos.last_mut().unwrap();
            match s.kind {
                GenKind::F => m.f += 1,
                GenKind::H => m.h += 1,
                GenKind::E => m.e += 1,
            }
        }
        Some(Word(monos))
    }

    fn shifted(&self, shift: i64) -> Result<Word> {
        let monos = self
            .0
            .iter()
            .map(|m| {
                let site = i64::from(m.site) + shift;
                if site < 1 {
                    return Err(Error::ShiftUnderflow {
                        site: m.site,
                        shift,
                    });
                }
                Ok(SiteMono {
                    site: site as u32,
                    ..*m
                })
            })
            .collect::<Result<_>>()?;
        Ok(Word(monos))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for m in &self.0 {
            for (kind, n) in [(GenKind::F, m.f), (GenKind::H, m.h), (GenKind::E, m.e)] {
                if n == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "{}{}", kind.letter(), m.site)?;
                if n > 1 {
                    write!(f, "^{n}")?;
                }
            }
        }
        Ok(())
    }
}

type Triple = (u32, u32, u32);

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn bump(map: &mut BTreeMap<Triple, BigInt>, key: Triple, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(key).or_insert_with(BigInt::zero);
    *slot += c;
    if slot.is_zero() {
        map.remove(&key);
    }
}

fn times_f(input: &BTreeMap<Triple, BigInt>) -> BTreeMap<Triple, BigInt> {
    // f^a h^b e^c f = f^{a+1} (h-2)^b e^c + c f^a h^b (h - c + 1) e^{c-1}
    let mut out = BTreeMap::new();
    for (&(a, b, c), k) in input {
        for j in 0..=b {
            let sign_pow = BigInt::from(-2).pow(b - j);
            bump(&mut out, (a + 1, j, c), k * binomial(b, j) * sign_pow);
        }
        if c > 0 {
            let cc = BigInt::from(c);
            bump(&mut out, (a, b + 1, c - 1), k * &cc);
            bump(
                &mut out,
                (a, b, c - 1),
                k * &cc * BigInt::from(1 - i64::from(c)),
            );
        }
    }
    out
}

fn times_h(input: &BTreeMap<Triple, BigInt>) -> BTreeMap<Triple, BigInt> {
    // f^a h^b e^c h = f^a h^{b+1} e^c - 2c f^a h^b e^c
    let mut out = BTreeMap::new();
    for (&(a, b, c), k) in input {
        bump(&mut out, (a, b + 1, c), k.clone());
        bump(&mut out, (a, b, c), k * BigInt::from(-2 * i64::from(c)));
    }
    out
}

fn times_e(input: &BTreeMap<Triple, BigInt>) -> BTreeMap<Triple, BigInt> {
    input
        .iter()
        .map(|(&(a, b, c), k)| ((a, b, c + 1), k.clone()))
        .collect()
}

/// Product of two single-site PBW monomials, in PBW form.
fn site_product(left: Triple, right: Triple) -> Vec<(Triple, BigInt)> {
    let mut acc = BTreeMap::from([(left, BigInt::one())]);
    for _ in 0..right.0 {
        acc = times_f(&acc);
    }
    for _ in 0..right.1 {
        acc = times_h(&acc);
    }
    for _ in 0..right.2 {
        acc = times_e(&acc);
    }
    acc.into_iter().collect()
}

type SiteCache = HashMap<(Triple, Triple), Vec<(Triple, BigInt)>>;

fn word_product(a: &Word, b: &Word, cache: &mut SiteCache) -> Vec<(Word, BigInt)> {
    let mut partial: Vec<(Vec<SiteMono>, BigInt)> = vec![(Vec::new(), BigInt::one())];
    let (mut i, mut j) = (0, 0);
    let push_fixed = |partial: &mut Vec<(Vec<SiteMono>, BigInt)>, m: SiteMono| {
        for (w, _) in partial.iter_mut() {
            w.push(m);
        }
    };
    while i < a.0.len() || j < b.0.len() {
        let sa = a.0.get(i).map(|m| m.site);
        let sb = b.0.get(j).map(|m| m.site);
        match (sa, sb) {
            (Some(x), Some(y)) if x == y => {
                let (ma, mb) = (a.0[i], b.0[j]);
                let key = ((ma.f, ma.h, ma.e), (mb.f, mb.h, mb.e));
                let options = cache
                    .entry(key)
                    .or_insert_with(|| site_product(key.0, key.1));
                let mut next = Vec::with_capacity(partial.len() * options.len());
                for (w, k) in &partial {
                    for ((f, h, e), c) in options.iter() {
                        let mut w2 = w.clone();
                        if f + h + e > 0 {
                            w2.push(SiteMono {
                                site: x,
                                f: *f,
                                h: *h,
                                e: *e,
                            });
                        }
                        next.push((w2, k * c));
                    }
                }
                partial = next;
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                push_fixed(&mut partial, a.0[i]);
                i += 1;
            }
            (Some(_), None) => {
                push_fixed(&mut partial, a.0[i]);
                i += 1;
            }
            _ => {
                push_fixed(&mut partial, b.0[j]);
                j += 1;
            }
        }
    }
    partial.into_iter().map(|(w, k)| (Word(w), k)).collect()
}

/// Finite sum of PBW words with [`CPoly`] coefficients.
///
/// The representation is canonical: `a == b` iff `a - b` has no terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NCPoly {
    terms: BTreeMap<Word, CPoly>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(CPoly::one())
    }

    pub fn scalar(c: CPoly) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn rational(r: Rational) -> Self {
        Self::scalar(CPoly::constant(r))
    }

    pub fn int(n: i64) -> Self {
        Self::rational(int(n))
    }

    pub fn term(w: Word, c: CPoly) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn gen(g: GenSymbol) -> Self {
        Self::term(
            Word::from_normal_symbols(&[g]).expect("single symbol is normal"),
            CPoly::one(),
        )
    }

    pub fn f(site: u32) -> Self {
        Self::gen(GenSymbol::f(site))
    }

    pub fn h(site: u32) -> Self {
        Self::gen(GenSymbol::h(site))
    }

    pub fn e(site: u32) -> Self {
        Self::gen(GenSymbol::e(site))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored `(word, coefficient)` pairs.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &CPoly)> {
        self.terms.iter()
    }

    /// Largest word degree, `None` for zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Word::degree).max()
    }

    pub fn max_site(&self) -> u32 {
        self.terms.keys().map(Word::max_site).max().unwrap_or(0)
    }

    pub fn as_scalar(&self) -> Option<CPoly> {
        match self.terms.len() {
            0 => Some(CPoly::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, w: Word, c: CPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_term_ref(&mut self, w: &Word, c: &CPoly) {
        if let Some(slot) = self.terms.get_mut(w) {
            *slot += c;
            if slot.is_zero() {
                self.terms.remove(w);
            }
        } else if !c.is_zero() {
            self.terms.insert(w.clone(), c.clone());
        }
    }

    pub fn scale(&self, factor: &Rational) -> NCPoly {
        if factor.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.scale(factor)))
                .collect(),
        }
    }

    pub fn mul_scalar(&self, s: &CPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    pub fn pow(&self, n: u32) -> NCPoly {
        let mut out = NCPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Applies a substitution to every coefficient.
    pub fn subst(&self, var: Var, value: &CPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.subst(var, value));
        }
        out
    }

    /// Divides every coefficient exactly by `d`.
    pub fn divexact_scalar(&self, d: &CPoly) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.divexact(d)?);
        }
        Ok(out)
    }

    /// Re-indexes every site by `shift`.
    pub fn embed(&self, shift: i64) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.shifted(shift)?, c.clone());
        }
        Ok(out)
    }

    /// Splits by powers of `x`; each coefficient is free of `x`.
    pub fn split_x(&self) -> XPoly<NCPoly> {
        let deg = self
            .terms
            .values()
            .filter_map(|c| c.degree_in(Var::X))
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![NCPoly::zero(); deg as usize + 1];
        for (w, c) in &self.terms {
            for (k, slot) in coeffs.iter_mut().enumerate() {
                slot.add_term(w.clone(), c.coeff_of(Var::X, k as u16));
            }
        }
        XPoly::new(coeffs)
    }

    pub fn from_xpoly(p: &XPoly<NCPoly>) -> NCPoly {
        let mut out = NCPoly::zero();
        let mut xk = CPoly::one();
        for c in p.coeffs() {
            out += &c.mul_scalar(&xk);
            xk = &xk * &CPoly::x();
        }
        out
    }

    /// Coefficient of `x^k` (free of `x`).
    pub fn coeff_x(&self, k: u16) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.coeff_of(Var::X, k));
        }
        out
    }

    fn mul_serial(&self, rhs: &NCPoly, cache: &mut SiteCache) -> NCPoly {
        let mut out = NCPoly::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                let coeff = ca * cb;
                for (w, k) in word_product(wa, wb, cache) {
                    if k.is_one() {
                        out.add_term_ref(&w, &coeff);
                    } else {
                        out.add_term(w, coeff.scale(&Rational::from_integer(k)));
                    }
                }
            }
        }
        out
    }

    fn mul_impl(&self, rhs: &NCPoly) -> NCPoly {
        const PARALLEL_THRESHOLD: usize = 4096;
        if self.len() * rhs.len() < PARALLEL_THRESHOLD || self.len() < 8 {
            return self.mul_serial(rhs, &mut SiteCache::new());
        }
        let chunks: Vec<NCPoly> = self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect::<Vec<_>>()
            .par_chunks(self.len().div_ceil(rayon::current_num_threads() * 2))
            .map(|chunk| {
                let part = NCPoly {
                    terms: chunk.iter().cloned().collect(),
                };
                part.mul_serial(rhs, &mut SiteCache::new())
            })
            .collect();
        let mut out = NCPoly::zero();
        for c in &chunks {
            out += c;
        }
        out
    }
}

impl Coefficient for NCPoly {
    fn zero_value() -> Self {
        NCPoly::zero()
    }

    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }

    fn add_scaled(&mut self, other: &Self, factor: &Rational) {
        if factor.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.scale(factor));
        }
    }
}

impl From<CPoly> for NCPoly {
    fn from(c: CPoly) -> Self {
        NCPoly::scalar(c)
    }
}

impl<'a> AddAssign<&'a NCPoly> for NCPoly {
    fn add_assign(&mut self, rhs: &'a NCPoly) {
        for (w, c) in &rhs.terms {
            self.add_term_ref(w, c);
        }
    }
}

impl<'a> SubAssign<&'a NCPoly> for NCPoly {
    fn sub_assign(&mut self, rhs: &'a NCPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

impl<'b> Add<&'b NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &'b NCPoly) -> NCPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'b> Sub<&'b NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &'b NCPoly) -> NCPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'b> Mul<&'b NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &'b NCPoly) -> NCPoly {
        self.mul_impl(rhs)
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<NCPoly> for NCPoly {
            type Output = NCPoly;
            fn $f(self, rhs: NCPoly) -> NCPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a NCPoly> for NCPoly {
            type Output = NCPoly;
            fn $f(self, rhs: &'a NCPoly) -> NCPoly {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<NCPoly> for &'a NCPoly {
            type Output = NCPoly;
            fn $f(self, rhs: NCPoly) -> NCPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if c.len() == 1 {
                let (m, r) = c.leading().unwrap();
                match (i, r.is_negative()) {
                    (0, true) => f.write_str("-")?,
                    (0, false) => {}
                    (_, true) => f.write_str(" - ")?,
                    (_, false) => f.write_str(" + ")?,
                }
                let unit = m.degree() == 0 && r.abs().is_one();
                if w.is_empty() {
                    fmt_abs_term(m, r, f)?;
                } else if unit {
                    write!(f, "{w}")?;
                } else {
                    fmt_abs_term(m, r, f)?;
                    write!(f, "*{w}")?;
                }
            } else {
                if i > 0 {
                    f.write_str(" + ")?;
                }
                if w.is_empty() {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "({c})*{w}")?;
                }
            }
        }
        Ok(())
    }
}

/// `ab - ba`.
pub fn commutator(a: &NCPoly, b: &NCPoly) -> NCPoly {
    &(a * b) - &(b * a)
}

/// `ab + ba`.
pub fn anticommutator(a: &NCPoly, b: &NCPoly) -> NCPoly {
    &(a * b) + &(b * a)
}

/// The quadratic Casimir `2{e,f} + h^2` at `site`; normal form `4fe + h^2 + 2h`.
pub fn casimir(site: u32) -> NCPoly {
    let (e, f, h) = (NCPoly::e(site), NCPoly::f(site), NCPoly::h(site));
    &anticommutator(&e, &f).scale(&int(2)) + &(&h * &h)
}

/// An unreduced linear combination of symbol sequences.
pub type RawExpr = Vec<(Vec<GenSymbol>, CPoly)>;

/// Which redex the rewriting engine contracts next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RedexOrder {
    Leftmost,
    Rightmost,
}

/// Reduces a single raw word by leftmost rewriting.
pub fn normal_form(word: &[GenSymbol]) -> NCPoly {
    normal_form_expr(&[(word.to_vec(), CPoly::one())], RedexOrder::Leftmost)
}

pub fn normal_form_expr(expr: &[(Vec<GenSymbol>, CPoly)], strategy: RedexOrder) -> NCPoly {
    normal_form_by(expr, |n| match strategy {
        RedexOrder::Leftmost => 0,
        RedexOrder::Rightmost => n - 1,
    })
}

/// Rewrites to PBW form; `pick(n)` selects which of the `n` current redexes
/// (ordered left to right) is contracted.
pub fn normal_form_by(
    expr: &[(Vec<GenSymbol>, CPoly)],
    mut pick: impl FnMut(usize) -> usize,
) -> NCPoly {
    let mut pending: BTreeMap<Vec<(u32, GenKind)>, CPoly> = BTreeMap::new();
    let key = |w: &[GenSymbol]| w.iter().map(|g| (g.site, g.kind)).collect::<Vec<_>>();
    let push =
        |pending: &mut BTreeMap<Vec<(u32, GenKind)>, CPoly>, w: Vec<(u32, GenKind)>, c: CPoly| {
            let slot = pending.entry(w.clone()).or_default();
            *slot += &c;
            if slot.is_zero() {
                pending.remove(&w);
            }
        };
    for (w, c) in expr {
        push(&mut pending, key(w), c.clone());
    }

    let mut out = NCPoly::zero();
    while let Some((w, c)) = pending.pop_last() {
        let redexes: Vec<usize> = (0..w.len().saturating_sub(1))
            .filter(|&i| w[i] > w[i + 1])
            .collect();
        if redexes.is_empty() {
            let symbols: Vec<GenSymbol> = w.iter().map(|&(s, k)| GenSymbol::new(k, s)).collect();
            out.add_term(Word::from_normal_symbols(&symbols).unwrap(), c);
            continue;
        }
        let i = redexes[pick(redexes.len())];
        let (a, b) = (w[i], w[i + 1]);
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        push(&mut pending, swapped, c.clone());
        if a.0 == b.0 {
            // ab = ba + [a, b]
            let site = a.0;
            let (bracket, factor) = match (a.1, b.1) {
                (GenKind::E, GenKind::F) => ((site, GenKind::H), 1),
                (GenKind::H, GenKind::F) => ((site, GenKind::F), -2),
                (GenKind::E, GenKind::H) => ((site, GenKind::E), -2),
                _ => unreachable!("only out-of-order pairs are redexes"),
            };
            let mut reduced = w[..i].to_vec();
            reduced.push(bracket);
            reduced.extend_from_slice(&w[i + 2..]);
            push(&mut pending, reduced, c.scale(&int(factor)));
        }
    }
    out
}
