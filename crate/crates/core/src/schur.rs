//! Schur and Laurent–Schur polynomials in finitely many variables, and
//! expansion of symmetric Laurent polynomials in the Schur basis.
//!
//! Two constructions of `s_λ[X_n]` are provided: the bialternant
//! [`schur_poly`] (alternating sum over `S_n` divided by the Vandermonde),
//! and the tableau sum [`schur_poly_tableaux`]. The engines use the tableau
//! sum; the bialternant is the reference for the Laurent identities.
//!
//! Expansion works on the weakly decreasing ("dominant") exponents only:
//! a symmetric polynomial is determined by them, its lex-leading monomial is
//! one of them, and the dominant part of `s_λ` is the row of Kostka numbers
//! `K_{λ,ρ}`, whose leading entry is `K_{λλ} = 1`.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{for_each_ssyt, horizontal_strips_removed, partitions_of, Partition, SignedSequence};
use crate::polyring::{signed_permutations, vandermonde, Coeff, LaurentPoly, ZPoly};

/// Dominant part of a symmetric Laurent polynomial: coefficients keyed by
/// weakly decreasing exponent vectors.
pub type DominantPart<R> = BTreeMap<Vec<i32>, R>;

/// `s_λ[X_n]` as the bialternant `det(x_i^{λ_j+n-j}) / det(x_i^{n-j})`.
pub fn schur_poly(lam: &SignedSequence, n: usize) -> Result<ZPoly> {
    if lam.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: lam.len(),
        });
    }
    let shifted: Vec<i32> = lam
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &e)| e + (n - 1 - i) as i32)
        .collect();
    let mut num = ZPoly::zero(n);
    for (perm, sign) in signed_permutations(n) {
        let mut e = vec![0; n];
        for (i, &a) in shifted.iter().enumerate() {
            e[perm[i]] = a;
        }
        num.add_term(crate::polyring::Monomial(e), &BigInt::from(sign));
    }
    num.exact_divide(&vandermonde(n))
}

/// `s_λ[X_n]` as the sum of `x^{w(T)}` over semistandard tableaux `T` of
/// shape `λ` with entries at most `n`.
pub fn schur_poly_tableaux(lam: &Partition, n: usize) -> ZPoly {
    let mut out = ZPoly::zero(n);
    if lam.len() > n {
        return out;
    }
    let one = BigInt::one();
    for_each_ssyt(lam, n as u32, |t| {
        let mut e = vec![0i32; n];
        for &v in t.iter().flatten() {
            e[v as usize - 1] += 1;
        }
        out.add_term(crate::polyring::Monomial(e), &one);
    });
    out
}

/// Laurent–Schur polynomial via the tableau sum of `λ - (λ_n^n)`, shifted
/// back by `(x_1⋯x_n)^{λ_n}`.
pub fn schur_laurent(lam: &SignedSequence) -> ZPoly {
    let n = lam.len();
    let c = lam.last();
    let base = lam.translate(-c).to_partition().expect("shifted sequence is a partition");
    schur_poly_tableaux(&base, n).shift_uniform(c)
}

/// Schur expansion of a symmetric Laurent polynomial in `arity` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    arity: usize,
    terms: BTreeMap<SignedSequence, BigInt>,
}

impl SchurExpansion {
    pub fn new(arity: usize) -> Self {
        SchurExpansion {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (SignedSequence, BigInt)>) -> Self {
        let mut out = Self::new(arity);
        for (k, c) in terms {
            out.add(k, &c);
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add(&mut self, key: SignedSequence, c: &BigInt) {
        assert_eq!(key.len(), self.arity);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn get(&self, key: &SignedSequence) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    /// Coefficient of `s_λ` for a partition `λ`; zero when `λ` is too long
    /// to be visible at this arity.
    pub fn coefficient(&self, lam: &Partition) -> BigInt {
        match lam.to_signed(self.arity) {
            Ok(s) => self.get(&s),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SignedSequence, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The smallest last entry over all keys (at most 0): multiplying by
    /// `(x_1⋯x_n)^{-shift}` turns every key into a partition.
    pub fn shift(&self) -> i32 {
        self.terms.keys().map(|k| k.last()).min().unwrap_or(0).min(0)
    }

    /// Keys translated by `-shift`, as partitions.
    pub fn partition_terms(&self) -> (i32, BTreeMap<Partition, BigInt>) {
        let s = self.shift();
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (k.translate(-s).to_partition().unwrap(), c.clone()))
            .collect();
        (s, terms)
    }

    /// `Σ c_λ s_λ[X_n]`.
    pub fn to_poly(&self) -> ZPoly {
        let mut out = ZPoly::zero(self.arity);
        for (k, c) in &self.terms {
            out = &out + &schur_laurent(k).scalar_mul(c);
        }
        out
    }
}

/// Memoized Kostka numbers and dominant parts of Schur polynomials.
#[derive(Default)]
pub struct KostkaTable {
    kostka: HashMap<(Partition, Partition), BigInt>,
    dominant: HashMap<SignedSequence, Rc<DominantPart<BigInt>>>,
}

impl KostkaTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of semistandard tableaux of shape `lam` and content `content`
    /// (content given as a partition; order of the content does not matter).
    pub fn kostka(&mut self, lam: &Partition, content: &Partition) -> BigInt {
        if lam.weight() != content.weight() || lam.len() > content.len() {
            return BigInt::zero();
        }
        if content.is_empty() {
            return BigInt::one();
        }
        let key = (lam.clone(), content.clone());
        if let Some(v) = self.kostka.get(&key) {
            return v.clone();
        }
        let last = content.part(content.len() - 1) as usize;
        let rest = Partition::new(content.parts()[..content.len() - 1].to_vec());
        let mut total = BigInt::zero();
        for inner in horizontal_strips_removed(lam, last) {
            total += self.kostka(&inner, &rest);
        }
        self.kostka.insert(key, total.clone());
        total
    }

    /// Dominant part of `s_κ[X_n]`, `n = κ.len()`.
    pub fn dominant_schur(&mut self, kappa: &SignedSequence) -> Rc<DominantPart<BigInt>> {
        if let Some(v) = self.dominant.get(kappa) {
            return v.clone();
        }
        let n = kappa.len();
        let c = kappa.last();
        let base = kappa.translate(-c).to_partition().expect("decreasing");
        let mut out = DominantPart::new();
        for rho in partitions_of(base.weight(), n, base.first() as usize) {
            let k = self.kostka(&base, &rho);
            if k.is_zero() {
                continue;
            }
            let mut key: Vec<i32> = rho.parts().iter().map(|&p| p as i32 + c).collect();
            key.resize(n, c);
            out.insert(key, k);
        }
        let out = Rc::new(out);
        self.dominant.insert(kappa.clone(), out.clone());
        out
    }
}

/// Triangular elimination on dominant parts.
///
/// `basis(κ)` must return the dominant part of a basis element whose
/// lex-leading monomial is `x^κ` with coefficient one. Returns the
/// coefficient of every basis element used.
pub fn eliminate<R, F>(rem: DominantPart<R>, basis: F) -> Result<BTreeMap<Vec<i32>, R>>
where
    R: Coeff,
    F: FnMut(&[i32]) -> Result<Rc<DominantPart<R>>>,
{
    eliminate_until(rem, basis, None)
}

/// As [`eliminate`], but stops once the leading key drops below `floor`;
/// coefficients at keys `>= floor` are then final.
pub fn eliminate_until<R, F>(
    mut rem: DominantPart<R>,
    mut basis: F,
    floor: Option<&[i32]>,
) -> Result<BTreeMap<Vec<i32>, R>>
where
    R: Coeff,
    F: FnMut(&[i32]) -> Result<Rc<DominantPart<R>>>,
{
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = rem.pop_last() {
        if floor.is_some_and(|f| lead.as_slice() < f) {
            break;
        }
        let b = basis(&lead)?;
        debug_assert!(b.get(&lead).is_some_and(|v| v.is_one()));
        for (k, v) in b.iter() {
            if *k == lead {
                continue;
            }
            debug_assert!(k < &lead, "basis element is not lex-triangular");
            let delta = v.mul_ref(&c);
            let slot = rem.entry(k.clone()).or_insert_with(R::zero);
            slot.sub_assign_ref(&delta);
            if slot.is_zero() {
                rem.remove(k);
            }
        }
        out.insert(lead, c);
    }
    Ok(out)
}

/// Expands a symmetric Laurent polynomial in the Laurent–Schur basis.
pub fn expand_in_schur(p: &ZPoly) -> Result<SchurExpansion> {
    expand_in_schur_with(p, &mut KostkaTable::new())
}

pub fn expand_in_schur_with(p: &ZPoly, table: &mut KostkaTable) -> Result<SchurExpansion> {
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    expand_dominant_in_schur(p.arity(), p.dominant_terms(), table)
}

/// Schur expansion from the dominant part alone (symmetry is assumed).
pub fn expand_dominant_in_schur(
    arity: usize,
    dominant: DominantPart<BigInt>,
    table: &mut KostkaTable,
) -> Result<SchurExpansion> {
    let coeffs = eliminate(dominant, |k| Ok(table.dominant_schur(&SignedSequence::new(k.to_vec()))))?;
    Ok(SchurExpansion::from_terms(
        arity,
        coeffs.into_iter().map(|(k, c)| (SignedSequence::new(k), c)),
    ))
}

/// The exponents `λ + δ - w(δ)` over `w ∈ S_n` with all entries at least
/// `floor`, paired with `sgn(w)`.
///
/// For a symmetric `f`, the coefficient of `s_λ` is
/// `Σ sgn(w) [x^{λ+δ-w(δ)}] f`, so these are the only monomials to read.
pub fn alternant_shifts(lam: &[i32], floor: Option<i32>) -> Vec<(Vec<i32>, i32)> {
    let n = lam.len();
    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut perm = Vec::with_capacity(n);
    let mut exps = Vec::with_capacity(n);
    fn rec(
        lam: &[i32],
        floor: Option<i32>,
        used: &mut [bool],
        perm: &mut Vec<usize>,
        exps: &mut Vec<i32>,
        out: &mut Vec<(Vec<i32>, i32)>,
    ) {
        let n = lam.len();
        let i = perm.len();
        if i == n {
            let inv = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| perm[a] > perm[b]).count();
            out.push((exps.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for j in 0..n {
            if used[j] {
                continue;
            }
            // δ_i - δ_j = j - i
            let e = lam[i] + j as i32 - i as i32;
            if floor.is_some_and(|f| e < f) {
                continue;
            }
            used[j] = true;
            perm.push(j);
            exps.push(e);
            rec(lam, floor, used, perm, exps, out);
            exps.pop();
            perm.pop();
            used[j] = false;
        }
    }
    rec(lam, floor, &mut used, &mut perm, &mut exps, &mut out);
    out
}

/// Coefficient of `s_λ` in a symmetric Laurent polynomial, read off
/// `n!` (or fewer) monomial coefficients.
pub fn schur_coefficient(f: &ZPoly, lam: &SignedSequence) -> Result<BigInt> {
    if lam.len() != f.arity() {
        return Err(Error::LengthMismatch {
            expected: f.arity(),
            found: lam.len(),
        });
    }
    let mut acc = BigInt::zero();
    for (e, sign) in alternant_shifts(lam.entries(), None) {
        let c = f.coefficient_of(&crate::polyring::Monomial(e))?;
        if sign > 0 {
            acc += c;
        } else {
            acc -= c;
        }
    }
    Ok(acc)
}

/// Checks `s_{λ+(k^n)}[X_n] = (x_1⋯x_n)^k s_λ[X_n]` with the bialternant.
pub fn verify_translation_lemma(lam: &SignedSequence, k: i32) -> Result<bool> {
    let n = lam.len();
    let lhs = schur_poly(&lam.translate(k), n)?;
    let rhs = schur_poly(lam, n)?.shift_uniform(k);
    Ok(lhs == rhs)
}

/// Checks `s_λ[X_n^∨] = s_{□₀λ}[X_n]` with the bialternant.
pub fn verify_inverse_lemma(lam: &SignedSequence) -> Result<bool> {
    let n = lam.len();
    let lhs = schur_poly(lam, n)?.invert_variables();
    let rhs = schur_poly(&lam.complement(0), n)?;
    Ok(lhs == rhs)
}

impl<R: Coeff> LaurentPoly<R> {
    /// Rebuilds the full polynomial of a symmetric function from its
    /// dominant part by summing over each orbit.
    pub fn from_dominant(arity: usize, dominant: &DominantPart<R>) -> Self {
        let mut out = Self::zero(arity);
        for (k, c) in dominant {
            for e in distinct_permutations(k) {
                out.add_term(crate::polyring::Monomial(e), c);
            }
        }
        out
    }
}

/// Distinct rearrangements of a weakly decreasing vector.
pub fn distinct_permutations(sorted_desc: &[i32]) -> Vec<Vec<i32>> {
    let mut values = sorted_desc.to_vec();
    values.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(values.clone());
        // next lexicographic permutation
        let Some(i) = (0..values.len().saturating_sub(1)).rev().find(|&i| values[i] < values[i + 1]) else {
            break;
        };
        let j = (i + 1..values.len()).rev().find(|&j| values[j] > values[i]).unwrap();
        values.swap(i, j);
        values[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;

    fn s(e: &[i32]) -> SignedSequence {
        SignedSequence::new(e.to_vec())
    }

    fn zp(arity: usize, terms: &[(&[i32], i64)]) -> ZPoly {
        ZPoly::from_terms(arity, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
    }

    #[test]
    fn bialternant_examples() {
        assert_eq!(schur_poly(&s(&[1, 0]), 2).unwrap(), zp(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(
            schur_poly(&s(&[2, 0]), 2).unwrap(),
            zp(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)])
        );
        assert_eq!(schur_poly(&s(&[1, 1]), 2).unwrap(), zp(2, &[(&[1, 1], 1)]));
        assert_eq!(
            schur_poly(&s(&[1, 0]), 3),
            Err(Error::LengthMismatch { expected: 3, found: 2 })
        );
    }

    #[test]
    fn bialternant_matches_tableaux() {
        for n in 1..=4 {
            for lam in enumerate_partitions(6, n, 6) {
                let sig = lam.to_signed(n).unwrap();
                assert_eq!(schur_poly(&sig, n).unwrap(), schur_poly_tableaux(&lam, n), "{lam} n={n}");
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let e = expand_in_schur(&zp(2, &[(&[1, 0], 1), (&[0, 1], 1)])).unwrap();
        assert_eq!(e, SchurExpansion::from_terms(2, [(s(&[1, 0]), BigInt::one())]));

        let p = zp(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let e = expand_in_schur(&(&p * &p)).unwrap();
        assert_eq!(
            e,
            SchurExpansion::from_terms(2, [(s(&[2, 0]), BigInt::one()), (s(&[1, 1]), BigInt::one())])
        );

        let inv = zp(2, &[(&[-1, 0], 1), (&[0, -1], 1)]);
        let e = expand_in_schur(&inv).unwrap();
        assert_eq!(e, SchurExpansion::from_terms(2, [(s(&[0, -1]), BigInt::one())]));
        assert_eq!(e.shift(), -1);
        assert_eq!(e.to_poly(), inv);
    }

    #[test]
    fn expansion_rejects_asymmetric() {
        assert_eq!(expand_in_schur(&zp(2, &[(&[1, 0], 1)])), Err(Error::NotSymmetric));
    }

    #[test]
    fn expansion_of_zero_is_empty() {
        assert!(expand_in_schur(&ZPoly::zero(3)).unwrap().is_empty());
    }

    #[test]
    fn expansion_round_trip() {
        let mut table = KostkaTable::new();
        for n in 1..=4 {
            for lam in enumerate_partitions(6, n, 6) {
                let sig = lam.to_signed(n).unwrap();
                let e = expand_in_schur_with(&schur_poly_tableaux(&lam, n), &mut table).unwrap();
                assert_eq!(e, SchurExpansion::from_terms(n, [(sig, BigInt::one())]));
            }
        }
    }

    #[test]
    fn lemma_examples() {
        assert!(verify_translation_lemma(&s(&[1, 0]), 1).unwrap());
        assert!(verify_translation_lemma(&s(&[0, 0]), -1).unwrap());
        assert!(verify_translation_lemma(&s(&[2, 1]), 2).unwrap());
        assert!(verify_inverse_lemma(&s(&[0, 0])).unwrap());
        assert!(verify_inverse_lemma(&s(&[1, 0])).unwrap());
        assert!(verify_inverse_lemma(&s(&[2, 1])).unwrap());
        // x1^-1 + x2^-1 = s_{(0,-1)}
        assert_eq!(
            schur_poly(&s(&[0, -1]), 2).unwrap(),
            zp(2, &[(&[-1, 0], 1), (&[0, -1], 1)])
        );
    }

    #[test]
    fn laurent_schur_matches_bialternant() {
        for e in [[2, -1, -3], [0, 0, -2], [3, 3, 1], [-1, -1, -1]] {
            let sig = s(&e);
            assert_eq!(schur_laurent(&sig), schur_poly(&sig, 3).unwrap());
        }
    }

    #[test]
    fn kostka_small_values() {
        let mut t = KostkaTable::new();
        let p = |v: &[u32]| Partition::new(v.to_vec());
        assert_eq!(t.kostka(&p(&[2, 1]), &p(&[1, 1, 1])), BigInt::from(2));
        assert_eq!(t.kostka(&p(&[3, 2]), &p(&[2, 2, 1])), BigInt::from(2));
        assert_eq!(t.kostka(&p(&[1, 1]), &p(&[2])), BigInt::zero());
        assert_eq!(t.kostka(&p(&[]), &p(&[])), BigInt::one());
    }

    #[test]
    fn alternant_extraction_matches_elimination() {
        let p = schur_poly_tableaux(&Partition::new(vec![2, 1]), 3);
        let f = &p * &p;
        let e = expand_in_schur(&f).unwrap();
        for lam in enumerate_partitions(6, 3, 6).filter(|l| l.weight() == 6) {
            let sig = lam.to_signed(3).unwrap();
            assert_eq!(schur_coefficient(&f, &sig).unwrap(), e.get(&sig), "{lam}");
        }
        let shifts = alternant_shifts(&[0, 0, 0], Some(0));
        assert_eq!(shifts, vec![(vec![0, 0, 0], 1)]);
        assert_eq!(alternant_shifts(&[1, 1, 0], None).len(), 6);
    }

    #[test]
    fn from_dominant_rebuilds() {
        let lam = Partition::new(vec![2, 1]);
        let full = schur_poly_tableaux(&lam, 3);
        assert_eq!(ZPoly::from_dominant(3, &full.dominant_terms()), full);
    }
}
