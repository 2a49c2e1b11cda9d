//! Sparse multivariate Laurent polynomials with exact coefficients.
//!
//! Coefficients live in a [`Coeff`] ring: arbitrary-precision integers,
//! rationals, or univariate integer polynomials in `t` ([`TPoly`]). Terms are
//! kept in a hash map keyed by exponent vector; sorted views are produced on
//! demand.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact coefficient ring.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Send + Sync {
    fn add_assign_ref(&mut self, other: &Self);
    fn sub_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `self / d` when the quotient exists in the ring.
    fn div_exact(&self, d: &Self) -> Option<Self>;

    /// How the coefficient prints in front of a monomial: whether it is
    /// negative, and its magnitude text (`None` for a unit magnitude).
    fn render_factor(&self) -> (bool, Option<String>);
}

impl Coeff for BigInt {
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
    fn render_factor(&self) -> (bool, Option<String>) {
        let neg = self.is_negative();
        let mag = self.abs();
        (neg, (!mag.is_one()).then(|| mag.to_string()))
    }
}

impl Coeff for BigRational {
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }
    fn render_factor(&self) -> (bool, Option<String>) {
        let neg = self.is_negative();
        let mag = self.abs();
        (neg, (!mag.is_one()).then(|| mag.to_string()))
    }
}

/// A univariate polynomial in `t` with integer coefficients, stored in
/// ascending degree. Empty means zero; otherwise the last entry is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    coeffs: Vec<BigInt>,
}

impl TPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^d`.
    pub fn monomial(c: BigInt, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// `1 + t + ... + t^(r-1)`, i.e. `(1 - t^r) / (1 - t)`.
    pub fn q_integer(r: usize) -> Self {
        Self::new(vec![BigInt::one(); r])
    }

    fn add_ref(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::new(coeffs)
    }
}

impl Zero for TPoly {
    fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for TPoly {
    fn one() -> Self {
        Self::constant(BigInt::one())
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(self, rhs: TPoly) -> TPoly {
        self.add_ref(&rhs)
    }
}

impl Sub for TPoly {
    type Output = TPoly;
    fn sub(mut self, rhs: TPoly) -> TPoly {
        self.sub_assign_ref(&rhs);
        self
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        self.mul_ref(&rhs)
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        self.neg_ref()
    }
}

impl Coeff for TPoly {
    fn add_assign_ref(&mut self, other: &Self) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::new(out)
    }
    fn neg_ref(&self) -> Self {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(TPoly::zero());
        }
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let sd = self.coeffs.len() - 1;
        if sd < dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        rem.iter().all(|c| c.is_zero()).then(|| TPoly::new(quot))
    }
    fn render_factor(&self) -> (bool, Option<String>) {
        let nonzero = self.coeffs.iter().filter(|c| !c.is_zero()).count();
        if nonzero == 1 {
            let d = self.coeffs.len() - 1;
            let c = &self.coeffs[d];
            let neg = c.is_negative();
            let mag = TPoly::monomial(c.abs(), d);
            if d == 0 {
                return (neg, (!c.abs().is_one()).then(|| mag.to_string()));
            }
            return (neg, Some(mag.to_string()));
        }
        (false, Some(format!("({self})")))
    }
}

/// Ascending rendering: `t + t^2`, `1 - t`, `2 - 3*t^4`.
impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{d}")?,
                (_, false) => write!(f, "{mag}*t^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An exponent vector; negative entries allowed. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn constant(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

/// A Laurent polynomial in `arity` variables with coefficients in `R`.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<R> {
    arity: usize,
    terms: HashMap<Monomial, R>,
}

/// Integer Laurent polynomials.
pub type ZPoly = LaurentPoly<BigInt>;
/// Laurent polynomials with coefficients in `Z[t]`.
pub type ZtPoly = LaurentPoly<TPoly>;
/// Rational Laurent polynomials.
pub type QPoly = LaurentPoly<BigRational>;

fn check_arity(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::ArityMismatch { left: a, right: b });
    }
    Ok(())
}

impl<R: Coeff> LaurentPoly<R> {
    pub fn zero(arity: usize) -> Self {
        LaurentPoly {
            arity,
            terms: HashMap::new(),
        }
    }

    pub fn constant(arity: usize, c: R) -> Self {
        Self::monomial(vec![0; arity], c)
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, R::one())
    }

    pub fn monomial(exponents: Vec<i32>, c: R) -> Self {
        let arity = exponents.len();
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(Monomial(exponents), c);
        }
        p
    }

    /// The variable `x_{i+1}`.
    pub fn variable(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Self::monomial(e, R::one())
    }

    /// Sums the given terms, combining equal monomials.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Vec<i32>, R)>) -> Self {
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            debug_assert_eq!(e.len(), arity);
            p.add_term(Monomial(e), &c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R)> {
        self.terms.iter()
    }

    /// Terms sorted lex-descending.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &R)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp(a.0));
        v
    }

    pub fn coefficient_of(&self, m: &Monomial) -> Result<R> {
        check_arity(self.arity, m.0.len())?;
        Ok(self.terms.get(m).cloned().unwrap_or_else(R::zero))
    }

    /// Adds `c * x^m` in place.
    pub fn add_term(&mut self, m: Monomial, c: &R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_arity(self.arity, other.arity)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        check_arity(self.arity, other.arity)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &c.neg_ref());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_arity(self.arity, other.arity)?;
        let mut out = Self::zero(self.arity);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e: Vec<i32> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(e), &ca.mul_ref(cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.arity);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn scalar_mul(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul_ref(c)))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        assert_eq!(shift.len(), self.arity);
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let e = m.0.iter().zip(shift).map(|(a, b)| a + b).collect();
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Multiplies by `(x_1 x_2 ... x_n)^k`.
    pub fn shift_uniform(&self, k: i32) -> Self {
        self.shift(&vec![k; self.arity])
    }

    /// Substitutes `x_i -> 1/x_i`.
    pub fn invert_variables(&self) -> Self {
        self.map_exponents(|e| e.iter().map(|&a| -a).collect())
    }

    /// Substitutes `x_i -> x_i^n`.
    pub fn frobenius_substitute(&self, n: u32) -> Self {
        let n = n as i32;
        self.map_exponents(|e| e.iter().map(|&a| a * n).collect())
    }

    /// Applies `x_i -> x_{perm[i]}`.
    pub fn permute_variables(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.arity);
        self.map_exponents(|e| {
            let mut out = vec![0; e.len()];
            for (i, &a) in e.iter().enumerate() {
                out[perm[i]] = a;
            }
            out
        })
    }

    fn map_exponents(&self, f: impl Fn(&[i32]) -> Vec<i32>) -> Self {
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            out.add_term(Monomial(f(&m.0)), c);
        }
        out
    }

    /// Invariance under the adjacent transpositions, which generate `S_n`.
    pub fn is_symmetric(&self) -> bool {
        (0..self.arity.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(m, c)| {
                let mut e = m.0.clone();
                e.swap(i, i + 1);
                self.terms.get(&Monomial(e)).is_some_and(|d| d == c)
            })
        })
    }

    pub fn leading_monomial_lex(&self) -> Result<Monomial> {
        self.terms.keys().max().cloned().ok_or(Error::ZeroPolynomial)
    }

    /// Smallest exponent of each variable; zeros for the zero polynomial.
    pub fn min_exponents(&self) -> Vec<i32> {
        let mut mins: Option<Vec<i32>> = None;
        for m in self.terms.keys() {
            match &mut mins {
                None => mins = Some(m.0.clone()),
                Some(v) => v.iter_mut().zip(&m.0).for_each(|(a, &b)| *a = (*a).min(b)),
            }
        }
        mins.unwrap_or_else(|| vec![0; self.arity])
    }

    /// Exact quotient `self / den` in the Laurent ring.
    ///
    /// Both sides are first multiplied by monomials so that they become
    /// polynomials not divisible by any variable; an exact Laurent quotient is
    /// then an honest polynomial, and lex-leading-term division decides
    /// exactness.
    pub fn exact_divide(&self, den: &Self) -> Result<Self> {
        check_arity(self.arity, den.arity)?;
        if den.is_zero() {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.arity));
        }
        let num_min = self.min_exponents();
        let den_min = den.min_exponents();
        let neg = |v: &[i32]| v.iter().map(|a| -a).collect::<Vec<_>>();
        let num = self.shift(&neg(&num_min));
        let den_norm = den.shift(&neg(&den_min));

        let (den_lead, den_lc) = den_norm
            .terms
            .iter()
            .max_by(|a, b| a.0.cmp(b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let den_terms: Vec<(Monomial, R)> =
            den_norm.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();

        let mut rem: BTreeMap<Monomial, R> = num.terms.into_iter().collect();
        let mut quot = Self::zero(self.arity);
        while let Some((lead, lc)) = rem.pop_last() {
            let e: Vec<i32> = lead.0.iter().zip(&den_lead.0).map(|(a, b)| a - b).collect();
            if e.iter().any(|&x| x < 0) {
                return Err(Error::InexactDivision);
            }
            let q = lc.div_exact(&den_lc).ok_or(Error::InexactDivision)?;
            for (m, c) in &den_terms {
                if *m == den_lead {
                    continue;
                }
                let key = Monomial(m.0.iter().zip(&e).map(|(a, b)| a + b).collect());
                let delta = q.mul_ref(c);
                let slot = rem.entry(key.clone()).or_insert_with(R::zero);
                slot.sub_assign_ref(&delta);
                if slot.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.add_term(Monomial(e), &q);
        }
        let shift: Vec<i32> = num_min.iter().zip(&den_min).map(|(a, b)| a - b).collect();
        Ok(quot.shift(&shift))
    }

    /// Terms whose exponent vector is weakly decreasing. For a symmetric
    /// polynomial these determine everything else.
    pub fn dominant_terms(&self) -> BTreeMap<Vec<i32>, R> {
        self.terms
            .iter()
            .filter(|(m, _)| m.is_weakly_decreasing())
            .map(|(m, c)| (m.0.clone(), c.clone()))
            .collect()
    }

    pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> LaurentPoly<S> {
        let mut out = LaurentPoly::zero(self.arity);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }
}

impl LaurentPoly<TPoly> {
    /// Specializes `t` to an integer.
    pub fn eval_t(&self, t: &BigInt) -> ZPoly {
        self.map_coeffs(|c| c.eval(t))
    }
}

impl<R: Coeff> Add for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn add(self, rhs: Self) -> LaurentPoly<R> {
        self.checked_add(rhs).expect("arity mismatch")
    }
}

impl<R: Coeff> Sub for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn sub(self, rhs: Self) -> LaurentPoly<R> {
        self.checked_sub(rhs).expect("arity mismatch")
    }
}

impl<R: Coeff> Mul for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn mul(self, rhs: Self) -> LaurentPoly<R> {
        self.checked_mul(rhs).expect("arity mismatch")
    }
}

impl<R: Coeff> Neg for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> LaurentPoly<R> {
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg_ref())).collect(),
        }
    }
}

impl<R: Coeff> fmt::Debug for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Lex-descending rendering: `x1^2 + x1*x2 + x2^2`, `(1 - t)*x1*x2`.
impl<R: Coeff> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let (neg, mag) = c.render_factor();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(j, &e)| {
                    if e == 1 {
                        format!("x{}", j + 1)
                    } else {
                        format!("x{}^{}", j + 1, e)
                    }
                })
                .collect();
            match (mag, vars.is_empty()) {
                (None, true) => write!(f, "1")?,
                (None, false) => write!(f, "{}", vars.join("*"))?,
                (Some(s), true) => write!(f, "{s}")?,
                (Some(s), false) => write!(f, "{}*{}", s, vars.join("*"))?,
            }
        }
        Ok(())
    }
}

/// The Vandermonde product `prod_{i<j} (x_i - x_j)`.
pub fn vandermonde<R: Coeff>(arity: usize) -> LaurentPoly<R> {
    let mut out = LaurentPoly::one(arity);
    for i in 0..arity {
        for j in i + 1..arity {
            let f = &LaurentPoly::variable(arity, i) - &LaurentPoly::variable(arity, j);
            out = &out * &f;
        }
    }
    out
}

/// All permutations of `0..n` with their signs, in Heap's-algorithm order.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = vec![(perm.clone(), 1)];
    let mut c = vec![0usize; n];
    let mut sign = 1;
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            out.push((perm.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(c: i64) -> BigInt {
        BigInt::from(c)
    }

    fn zp(arity: usize, terms: &[(&[i32], i64)]) -> ZPoly {
        ZPoly::from_terms(arity, terms.iter().map(|(e, c)| (e.to_vec(), z(*c))))
    }

    #[test]
    fn square_of_sum() {
        let p = zp(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let sq = &p * &p;
        assert_eq!(sq, zp(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]));
        assert_eq!(sq.to_string(), "x1^2 + 2*x1*x2 + x2^2");
    }

    #[test]
    fn additive_inverse() {
        let p = zp(2, &[(&[1, 0], 3), (&[-1, 2], -1)]);
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn tpoly_coefficients() {
        let x1 = ZtPoly::variable(2, 0);
        let x2 = ZtPoly::variable(2, 1).scalar_mul(&TPoly::t());
        let p = &x1 - &x2;
        assert_eq!(&p * &ZtPoly::one(2), p);
        assert_eq!(p.to_string(), "x1 - t*x2");
        let q = ZtPoly::monomial(vec![1, 1], TPoly::from_i64s(&[1, -1]));
        assert_eq!(q.to_string(), "(1 - t)*x1*x2");
    }

    #[test]
    fn arity_mismatch() {
        let a = ZPoly::one(2);
        let b = ZPoly::one(3);
        assert_eq!(a.checked_add(&b), Err(Error::ArityMismatch { left: 2, right: 3 }));
        assert!(a.coefficient_of(&Monomial(vec![0])).is_err());
    }

    #[test]
    fn invert_examples() {
        let p = zp(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(p.invert_variables(), zp(2, &[(&[-1, 0], 1), (&[0, -1], 1)]));
        let q = zp(2, &[(&[1, 1], 1)]);
        assert_eq!(q.invert_variables(), zp(2, &[(&[-1, -1], 1)]));
        let c = ZPoly::constant(2, z(5));
        assert_eq!(c.invert_variables(), c);
    }

    #[test]
    fn frobenius_examples() {
        let p = zp(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(p.frobenius_substitute(2), zp(2, &[(&[2, 0], 1), (&[0, 2], 1)]));
        let q = zp(2, &[(&[1, -1], 1)]);
        assert_eq!(q.frobenius_substitute(3), zp(2, &[(&[3, -3], 1)]));
        let c = ZPoly::constant(3, z(7));
        assert_eq!(c.frobenius_substitute(4), c);
    }

    #[test]
    fn exact_divide_examples() {
        let num = zp(2, &[(&[2, 0], 1), (&[0, 2], -1)]);
        let den = zp(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(num.exact_divide(&den).unwrap(), zp(2, &[(&[1, 0], 1), (&[0, 1], 1)]));

        let p = zp(2, &[(&[3, 1], 2), (&[0, 2], -5), (&[1, 0], 1)]);
        let m = zp(2, &[(&[1, 1], 1)]);
        assert_eq!(p.exact_divide(&m).unwrap(), p.shift(&[-1, -1]));

        let num = zp(2, &[(&[2, 0], 1), (&[1, 1], 1)]);
        let den = zp(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], 1)]);
        assert_eq!(num.exact_divide(&den), Err(Error::InexactDivision));
    }

    #[test]
    fn exact_divide_laurent() {
        // (x1^-1 - x2^-1) / (x1 - x2) = -x1^-1 x2^-1
        let num = zp(2, &[(&[-1, 0], 1), (&[0, -1], -1)]);
        let den = zp(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(num.exact_divide(&den).unwrap(), zp(2, &[(&[-1, -1], -1)]));
    }

    #[test]
    fn coefficient_examples() {
        let p = zp(2, &[(&[2, 0], 1), (&[1, 1], 3)]);
        assert_eq!(p.coefficient_of(&Monomial(vec![1, 1])).unwrap(), z(3));
        assert_eq!(p.coefficient_of(&Monomial(vec![0, 2])).unwrap(), z(0));
        let q = ZtPoly::monomial(vec![1, 0], TPoly::from_i64s(&[0, 2, 1]));
        assert_eq!(q.coefficient_of(&Monomial(vec![1, 0])).unwrap(), TPoly::from_i64s(&[0, 2, 1]));
    }

    #[test]
    fn leading_monomial_examples() {
        let p = zp(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]);
        assert_eq!(p.leading_monomial_lex().unwrap(), Monomial(vec![2, 0]));
        assert_eq!(zp(2, &[(&[1, 1], 1)]).leading_monomial_lex().unwrap(), Monomial(vec![1, 1]));
        let q = zp(2, &[(&[0, 3], 1), (&[1, 0], 1)]);
        assert_eq!(q.leading_monomial_lex().unwrap(), Monomial(vec![1, 0]));
        assert_eq!(ZPoly::zero(2).leading_monomial_lex(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn tpoly_arithmetic() {
        let a = TPoly::from_i64s(&[1, -1]);
        let b = TPoly::from_i64s(&[1, 1, 1]);
        let prod = a.mul_ref(&b);
        assert_eq!(prod, TPoly::from_i64s(&[1, 0, 0, -1]));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(TPoly::from_i64s(&[1, 0, 1]).div_exact(&a), None);
        assert_eq!(TPoly::from_i64s(&[0, 1, 1]).to_string(), "t + t^2");
        assert_eq!(TPoly::from_i64s(&[1, -1]).to_string(), "1 - t");
        assert_eq!(TPoly::zero().to_string(), "0");
        assert_eq!(TPoly::from_i64s(&[0, 0, -3]).to_string(), "-3*t^2");
        assert_eq!(b.eval(&z(1)), z(3));
    }

    #[test]
    fn vandermonde_two_and_three() {
        assert_eq!(vandermonde::<BigInt>(2), zp(2, &[(&[1, 0], 1), (&[0, 1], -1)]));
        assert_eq!(vandermonde::<BigInt>(3).len(), 6);
        assert_eq!(vandermonde::<BigInt>(0), ZPoly::one(0));
    }

    #[test]
    fn permutation_signs() {
        let perms = signed_permutations(4);
        assert_eq!(perms.len(), 24);
        for (p, s) in &perms {
            let mut inv = 0;
            for i in 0..4 {
                for j in i + 1..4 {
                    if p[i] > p[j] {
                        inv += 1;
                    }
                }
            }
            assert_eq!(*s, if inv % 2 == 0 { 1 } else { -1 });
        }
        assert_eq!(signed_permutations(0).len(), 1);
    }

    fn small_poly() -> impl Strategy<Value = ZPoly> {
        prop::collection::vec((prop::collection::vec(-2i32..3, 2), -3i64..4), 0..5)
            .prop_map(|ts| ZPoly::from_terms(2, ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn substitutions(a in small_poly(), x in 1u32..4, y in 1u32..4) {
            prop_assert_eq!(a.invert_variables().invert_variables(), a.clone());
            prop_assert_eq!(a.frobenius_substitute(1), a.clone());
            prop_assert_eq!(
                a.frobenius_substitute(x).frobenius_substitute(y),
                a.frobenius_substitute(x * y)
            );
        }

        #[test]
        fn divide_product(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
        }
    }
}
