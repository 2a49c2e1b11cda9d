//! Hall–Littlewood `P` polynomials at finite arity and Kostka–Foulkes
//! polynomials.
//!
//! [`hl_poly`] symmetrizes `x^μ ∏_{i<j}(x_i - t x_j)` over `S_n` literally.
//! The engines instead straighten the same product into Schur polynomials:
//! each monomial `x^γ` of the product contributes `±s_{sort(γ)-δ}`, or
//! nothing when `γ` has a repeated entry. Both are divided by `v_{μ,n}(t)`.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{for_each_ssyt_with_content, Partition, SignedSequence};
use crate::polyring::{signed_permutations, vandermonde, Coeff, LaurentPoly, Monomial, TPoly, ZtPoly};
use crate::schur::{eliminate, schur_laurent, DominantPart, KostkaTable};

/// `v_{μ,n}(t) = ∏_i ∏_{r=1}^{m_i} (1 + t + ⋯ + t^{r-1})`, over the
/// multiplicities `m_i` of the distinct entries of `μ`.
pub fn normalizer(mu: &SignedSequence) -> TPoly {
    let mut v = TPoly::one();
    let e = mu.entries();
    let mut i = 0;
    while i < e.len() {
        let mut j = i;
        while j < e.len() && e[j] == e[i] {
            j += 1;
        }
        for r in 1..=(j - i) {
            v = v * TPoly::q_integer(r);
        }
        i = j;
    }
    v
}

fn check_len(mu: &SignedSequence, n: usize) -> Result<()> {
    if mu.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: mu.len(),
        });
    }
    Ok(())
}

/// `∏_{i<j} (x_i - t x_j)` in `n` variables.
fn twisted_vandermonde(n: usize) -> ZtPoly {
    let mut out = ZtPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            let mut f = ZtPoly::variable(n, i);
            let mut e = vec![0; n];
            e[j] = 1;
            f.add_term(Monomial(e), &(-TPoly::t()));
            out = &out * &f;
        }
    }
    out
}

fn divide_coefficients(p: &ZtPoly, v: &TPoly) -> Result<ZtPoly> {
    let mut out = ZtPoly::zero(p.arity());
    for (m, c) in p.terms() {
        let q = c.div_exact(v).ok_or(Error::InexactDivision)?;
        out.add_term(m.clone(), &q);
    }
    Ok(out)
}

/// `P_μ(X_n; t)` by literal symmetrization over `S_n`.
pub fn hl_poly(mu: &SignedSequence, n: usize) -> Result<ZtPoly> {
    check_len(mu, n)?;
    let f = twisted_vandermonde(n).shift(mu.entries());
    let mut num = ZtPoly::zero(n);
    for (perm, sign) in signed_permutations(n) {
        let img = f.permute_variables(&perm);
        num = if sign > 0 { &num + &img } else { &num - &img };
    }
    let sym = num.exact_divide(&vandermonde(n))?;
    divide_coefficients(&sym, &normalizer(mu))
}

/// Coefficients of `P_μ(X_n; t)` in the Laurent–Schur basis.
pub fn hl_schur_expansion(mu: &SignedSequence) -> Result<BTreeMap<SignedSequence, TPoly>> {
    let n = mu.len();
    let mut acc: BTreeMap<Vec<i32>, TPoly> = BTreeMap::new();
    for (m, c) in twisted_vandermonde(n).terms() {
        let gamma: Vec<i32> = m.exponents().iter().zip(mu.entries()).map(|(a, b)| a + b).collect();
        let Some((sorted, sign)) = sort_with_sign(&gamma) else {
            continue;
        };
        let key: Vec<i32> = sorted.iter().enumerate().map(|(i, &b)| b - (n - 1 - i) as i32).collect();
        let delta = if sign > 0 { c.clone() } else { -c.clone() };
        let slot = acc.entry(key.clone()).or_insert_with(TPoly::zero);
        slot.add_assign_ref(&delta);
        if slot.is_zero() {
            acc.remove(&key);
        }
    }
    let v = normalizer(mu);
    acc.into_iter()
        .map(|(k, c)| {
            let q = c.div_exact(&v).ok_or(Error::InexactDivision)?;
            Ok((SignedSequence::new(k), q))
        })
        .collect()
}

/// Sorts into strictly decreasing order, returning the parity of the
/// permutation used; `None` when an entry repeats.
fn sort_with_sign(v: &[i32]) -> Option<(Vec<i32>, i32)> {
    let mut inversions = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] == v[j] {
                return None;
            }
            if v[i] < v[j] {
                inversions += 1;
            }
        }
    }
    let mut s = v.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    Some((s, if inversions.is_multiple_of(2) { 1 } else { -1 }))
}

/// `P_μ(X_n; t)` assembled from its Schur expansion.
pub fn hl_poly_from_schur(mu: &SignedSequence) -> Result<ZtPoly> {
    let n = mu.len();
    let mut out = ZtPoly::zero(n);
    for (k, c) in hl_schur_expansion(mu)? {
        let s = schur_laurent(&k).map_coeffs(|z| TPoly::constant(z.clone()));
        out = &out + &s.scalar_mul(&c);
    }
    Ok(out)
}

/// Expansion of a symmetric polynomial in the `P_μ(X_n; t)` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HLExpansion {
    arity: usize,
    terms: BTreeMap<SignedSequence, TPoly>,
}

impl HLExpansion {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, mu: &SignedSequence) -> TPoly {
        self.terms.get(mu).cloned().unwrap_or_else(TPoly::zero)
    }

    pub fn coefficient(&self, mu: &Partition) -> TPoly {
        match mu.to_signed(self.arity) {
            Ok(s) => self.get(&s),
            Err(_) => TPoly::zero(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SignedSequence, &TPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Memoized dominant parts of `P_μ(X_n; t)` and `s_λ[X_n]`.
#[derive(Default)]
pub struct HLTable {
    kostka: KostkaTable,
    dominant: HashMap<SignedSequence, Rc<DominantPart<TPoly>>>,
}

impl HLTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn kostka_table(&mut self) -> &mut KostkaTable {
        &mut self.kostka
    }

    /// Dominant part of `P_μ(X_n; t)`, `n = μ.len()`.
    pub fn dominant_hl(&mut self, mu: &SignedSequence) -> Result<Rc<DominantPart<TPoly>>> {
        if let Some(v) = self.dominant.get(mu) {
            return Ok(v.clone());
        }
        let mut out: DominantPart<TPoly> = BTreeMap::new();
        for (kappa, c) in hl_schur_expansion(mu)? {
            for (k, kn) in self.kostka.dominant_schur(&kappa).iter() {
                let slot = out.entry(k.clone()).or_insert_with(TPoly::zero);
                slot.add_assign_ref(&c.mul_ref(&TPoly::constant(kn.clone())));
            }
        }
        out.retain(|_, c| !c.is_zero());
        let out = Rc::new(out);
        self.dominant.insert(mu.clone(), out.clone());
        Ok(out)
    }

    pub fn expand_dominant(&mut self, arity: usize, dominant: DominantPart<TPoly>) -> Result<HLExpansion> {
        let coeffs = eliminate(dominant, |k| self.dominant_hl(&SignedSequence::new(k.to_vec())))?;
        Ok(HLExpansion {
            arity,
            terms: coeffs.into_iter().map(|(k, c)| (SignedSequence::new(k), c)).collect(),
        })
    }

    /// `s_λ[X_n]` in the `P` basis; the coefficients are `K_{λμ}(t)`.
    pub fn schur_in_hl(&mut self, lam: &SignedSequence) -> Result<HLExpansion> {
        let dom = self
            .kostka
            .dominant_schur(lam)
            .iter()
            .map(|(k, c)| (k.clone(), TPoly::constant(c.clone())))
            .collect();
        self.expand_dominant(lam.len(), dom)
    }

    /// `K_{λμ}(t)` at arity `max(ℓ(λ), ℓ(μ))`.
    pub fn kostka_foulkes(&mut self, lam: &Partition, mu: &Partition) -> TPoly {
        let n = lam.len().max(mu.len());
        self.kostka_foulkes_at(lam, mu, n).expect("arity covers both lengths")
    }

    /// `K_{λμ}(t)` computed at an explicit arity `n`.
    pub fn kostka_foulkes_at(&mut self, lam: &Partition, mu: &Partition, n: usize) -> Result<TPoly> {
        if lam.weight() != mu.weight() {
            return Ok(TPoly::zero());
        }
        let mu_s = mu.to_signed(n)?;
        let lam_s = lam.to_signed(n)?;
        if n == 0 {
            return Ok(TPoly::one());
        }
        // only dominance-lower μ occur; skip the elimination otherwise
        if !dominates(lam, mu) {
            return Ok(TPoly::zero());
        }
        Ok(self.schur_in_hl(&lam_s)?.get(&mu_s))
    }
}

/// `λ ⊵ μ` for partitions of equal weight.
pub fn dominates(lam: &Partition, mu: &Partition) -> bool {
    let (mut a, mut b) = (0u64, 0u64);
    for i in 0..lam.len().max(mu.len()) {
        a += lam.part(i) as u64;
        b += mu.part(i) as u64;
        if a < b {
            return false;
        }
    }
    true
}

/// Expands a symmetric Laurent polynomial over `ℤ[t]` in the `P` basis.
pub fn expand_in_hl(p: &ZtPoly) -> Result<HLExpansion> {
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    HLTable::new().expand_dominant(p.arity(), p.dominant_terms())
}

/// `K_{λμ}(t)` by Hall–Littlewood elimination.
pub fn kostka_foulkes(lam: &Partition, mu: &Partition) -> TPoly {
    HLTable::new().kostka_foulkes(lam, mu)
}

/// Charge of a word whose content is a partition (letters `1..=m`).
pub fn charge(word: &[u32]) -> u64 {
    let mut letters: Vec<Option<u32>> = word.iter().map(|&a| Some(a)).collect();
    let mut total = 0u64;
    loop {
        let present: Vec<usize> = (0..letters.len()).filter(|&i| letters[i].is_some()).collect();
        if present.is_empty() {
            return total;
        }
        let top = present.iter().map(|&i| letters[i].unwrap()).max().unwrap();
        // extract a standard subword: 1, 2, … each found by scanning
        // leftwards cyclically from the previous position
        let mut pos = letters.len();
        let mut index = 0u64;
        for r in 1..=top {
            let left = (0..pos).rev().find(|&i| letters[i] == Some(r));
            let found = match left {
                Some(i) => i,
                None => {
                    let i = (pos..letters.len())
                        .rev()
                        .find(|&i| letters[i] == Some(r))
                        .expect("content is a partition");
                    if r > 1 {
                        index += 1;
                    }
                    i
                }
            };
            total += index;
            letters[found] = None;
            pos = found;
        }
    }
}

/// Reading word of a tableau: rows from bottom to top, each left to right.
pub fn reading_word(t: &[Vec<u32>]) -> Vec<u32> {
    t.iter().rev().flatten().copied().collect()
}

/// `Σ_T t^{charge(T)}` over semistandard tableaux of shape `λ`, content `μ`.
pub fn kostka_foulkes_charge(lam: &Partition, mu: &Partition) -> TPoly {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for_each_ssyt_with_content(lam, mu.parts(), |t| {
        let c = charge(&reading_word(t)) as usize;
        if coeffs.len() <= c {
            coeffs.resize(c + 1, BigInt::zero());
        }
        coeffs[c] += 1;
    });
    TPoly::new(coeffs)
}

/// Checks `P_μ(X_n^∨; t) = P_{□₀μ}(X_n; t)` and
/// `P_{μ+(k^n)}(X_n; t) = (x_1⋯x_n)^k P_μ(X_n; t)` with the literal `P`.
pub fn verify_hl_lemma(mu: &SignedSequence, k: i32) -> Result<bool> {
    let n = mu.len();
    let p = hl_poly(mu, n)?;
    let inverse = p.invert_variables() == hl_poly(&mu.complement(0), n)?;
    let translate = hl_poly(&mu.translate(k), n)? == p.shift_uniform(k);
    Ok(inverse && translate)
}

impl LaurentPoly<TPoly> {
    /// Coefficient-wise value at `t = 1`.
    pub fn at_one(&self) -> crate::polyring::ZPoly {
        self.eval_t(&BigInt::one())
    }
}
