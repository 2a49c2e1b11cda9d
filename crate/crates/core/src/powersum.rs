//! Power-sum basis: Murnaghan–Nakayama characters, conversion between the
//! Schur and power-sum bases, the internal product and plethysm.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{all_partitions_of, Partition};
use crate::polyring::{LaurentPoly, Monomial, QPoly};

/// Schur coefficients keyed by partition, with no arity attached.
pub type SchurCoefficients = BTreeMap<Partition, BigInt>;

/// `z_ρ = ∏ i^{m_i} m_i!`.
pub fn z_rho(rho: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut i = 0;
    let parts = rho.parts();
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        for m in 1..=(j - i) {
            z *= BigInt::from(parts[i]) * BigInt::from(m);
        }
        i = j;
    }
    z
}

/// A conjugacy class of a symmetric group, with its centralizer order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    rho: Partition,
    z: BigInt,
}

impl CycleType {
    pub fn new(rho: Partition) -> Self {
        let z = z_rho(&rho);
        CycleType { rho, z }
    }

    pub fn partition(&self) -> &Partition {
        &self.rho
    }

    pub fn z(&self) -> &BigInt {
        &self.z
    }

    pub fn weight(&self) -> usize {
        self.rho.weight()
    }
}

/// Memoized Murnaghan–Nakayama values.
#[derive(Default)]
pub struct CharacterTable {
    memo: HashMap<(Partition, Partition), i128>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^λ(ρ)`.
    pub fn character(&mut self, lam: &Partition, rho: &Partition) -> Result<i128> {
        if lam.weight() != rho.weight() {
            return Err(Error::WeightMismatch {
                left: lam.weight(),
                right: rho.weight(),
            });
        }
        Ok(self.chi(lam, rho.parts()))
    }

    // Strips are removed in the order of the smallest remaining part, so
    // the memo key is always a prefix of the original cycle type.
    fn chi(&mut self, lam: &Partition, rho: &[u32]) -> i128 {
        let Some((&r, rest)) = rho.split_last() else {
            return 1;
        };
        if lam.len() <= 1 {
            // trivial character
            return 1;
        }
        let key = (lam.clone(), Partition::new(rho.to_vec()));
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut total = 0i128;
        for (inner, sign) in rim_hooks_removed(lam, r as usize) {
            total += sign * self.chi(&inner, rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// Partitions obtained by removing a rim hook of size `r`, with sign
/// `(-1)^{height}`.
pub fn rim_hooks_removed(lam: &Partition, r: usize) -> Vec<(Partition, i128)> {
    let l = lam.len();
    let beta: Vec<i64> = (0..l).map(|i| lam.part(i) as i64 + (l - 1 - i) as i64).collect();
    let mut out = Vec::new();
    for i in 0..l {
        let target = beta[i] - r as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&b| b > target && b < beta[i]).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(j, &b)| (b - (l - 1 - j) as i64) as u32)
            .filter(|&p| p > 0)
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((Partition::new(parts), sign));
    }
    out
}

/// `χ^λ(ρ)` with a fresh memo.
pub fn mn_character(lam: &Partition, rho: &CycleType) -> Result<i128> {
    CharacterTable::new().character(lam, rho.partition())
}

/// A symmetric function of homogeneous weight in the power-sum basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PExpansion {
    weight: usize,
    terms: BTreeMap<Partition, BigRational>,
}

impl PExpansion {
    pub fn zero(weight: usize) -> Self {
        PExpansion {
            weight,
            terms: BTreeMap::new(),
        }
    }

    /// The constant 1 (weight 0).
    pub fn one() -> Self {
        Self::power(Partition::empty())
    }

    /// `p_ρ`.
    pub fn power(rho: Partition) -> Self {
        let mut e = Self::zero(rho.weight());
        e.terms.insert(rho, BigRational::one());
        e
    }

    pub fn from_terms(weight: usize, terms: impl IntoIterator<Item = (Partition, BigRational)>) -> Self {
        let mut e = Self::zero(weight);
        for (k, c) in terms {
            e.add_term(k, &c);
        }
        e
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn get(&self, rho: &Partition) -> BigRational {
        self.terms.get(rho).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, rho: Partition, c: &BigRational) {
        assert_eq!(rho.weight(), self.weight, "term of wrong weight");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(rho.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&rho);
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.weight != other.weight {
            return Err(Error::WeightMismatch {
                left: self.weight,
                right: other.weight,
            });
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.weight);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &(v * c));
        }
        out
    }

    /// Ordinary product: `p_ρ p_σ = p_{ρ∪σ}`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.weight + other.weight);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(union(a, b), &(ca * cb));
            }
        }
        out
    }

    /// `p_k[f]`: every part is multiplied by `k`.
    pub fn frobenius(&self, k: u32) -> Self {
        let mut out = Self::zero(self.weight * k as usize);
        for (rho, c) in &self.terms {
            out.add_term(Partition::new(rho.parts().iter().map(|&p| p * k).collect()), c);
        }
        out
    }

    /// Value at `n` variables: `p_k ↦ x_1^k + ⋯ + x_n^k`.
    pub fn evaluate(&self, n: usize) -> QPoly {
        let mut cache: HashMap<u32, QPoly> = HashMap::new();
        let mut out = QPoly::zero(n);
        for (rho, c) in &self.terms {
            let mut term = QPoly::constant(n, c.clone());
            for &k in rho.parts() {
                let pk = cache.entry(k).or_insert_with(|| power_sum_poly(n, k));
                term = &term * &*pk;
            }
            out = &out + &term;
        }
        out
    }
}

fn union(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<u32> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts)
}

/// `x_1^k + ⋯ + x_n^k`.
pub fn power_sum_poly<R: crate::polyring::Coeff>(n: usize, k: u32) -> LaurentPoly<R> {
    let mut p = LaurentPoly::zero(n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = k as i32;
        p.add_term(Monomial(e), &R::one());
    }
    p
}

/// `s_λ = Σ_ρ χ^λ(ρ)/z_ρ p_ρ`.
pub fn schur_to_p(lam: &Partition) -> PExpansion {
    schur_to_p_with(lam, &mut CharacterTable::new())
}

pub fn schur_to_p_with(lam: &Partition, table: &mut CharacterTable) -> PExpansion {
    let n = lam.weight();
    let mut out = PExpansion::zero(n);
    for rho in all_partitions_of(n) {
        let chi = table.chi(lam, rho.parts());
        if chi != 0 {
            let c = BigRational::new(BigInt::from(chi), z_rho(&rho));
            out.add_term(rho, &c);
        }
    }
    out
}

/// Coefficient of `s_λ` is `Σ_ρ χ^λ(ρ) e[ρ]`; fails if any is not an integer.
pub fn p_to_schur(e: &PExpansion) -> Result<SchurCoefficients> {
    p_to_schur_with(e, &mut CharacterTable::new())
}

pub fn p_to_schur_with(e: &PExpansion, table: &mut CharacterTable) -> Result<SchurCoefficients> {
    let mut out = SchurCoefficients::new();
    for lam in all_partitions_of(e.weight) {
        let mut acc = BigRational::zero();
        for (rho, c) in &e.terms {
            let chi = table.chi(&lam, rho.parts());
            if chi != 0 {
                acc += c * BigRational::from_integer(BigInt::from(chi));
            }
        }
        if acc.is_zero() {
            continue;
        }
        if !acc.is_integer() {
            return Err(Error::NonIntegralResult {
                key: lam.to_string(),
                value: acc.to_string(),
            });
        }
        out.insert(lam, acc.to_integer());
    }
    Ok(out)
}

/// Coefficient of a single `s_λ` in `e`.
pub fn schur_coefficient_of(e: &PExpansion, lam: &Partition, table: &mut CharacterTable) -> Result<BigInt> {
    if lam.weight() != e.weight {
        return Ok(BigInt::zero());
    }
    let mut acc = BigRational::zero();
    for (rho, c) in &e.terms {
        let chi = table.chi(lam, rho.parts());
        if chi != 0 {
            acc += c * BigRational::from_integer(BigInt::from(chi));
        }
    }
    if !acc.is_integer() {
        return Err(Error::NonIntegralResult {
            key: lam.to_string(),
            value: acc.to_string(),
        });
    }
    Ok(acc.to_integer())
}

/// Internal product: `p_ρ ∗ p_σ = δ_{ρσ} z_ρ p_ρ`.
pub fn internal_product(a: &PExpansion, b: &PExpansion) -> Result<PExpansion> {
    if a.weight != b.weight {
        return Err(Error::WeightMismatch {
            left: a.weight,
            right: b.weight,
        });
    }
    let mut out = PExpansion::zero(a.weight);
    for (rho, ca) in &a.terms {
        if let Some(cb) = b.terms.get(rho) {
            let z = BigRational::from_integer(z_rho(rho));
            out.add_term(rho.clone(), &(ca * cb * z));
        }
    }
    Ok(out)
}

/// Plethysm `f[g]` on power-sum expansions.
pub fn plethysm_p(outer: &PExpansion, inner: &PExpansion) -> PExpansion {
    let mut powers: HashMap<u32, PExpansion> = HashMap::new();
    let mut out = PExpansion::zero(outer.weight * inner.weight);
    for (sigma, c) in &outer.terms {
        let mut term = PExpansion::one();
        for &k in sigma.parts() {
            let pk = powers.entry(k).or_insert_with(|| inner.frobenius(k));
            term = term.mul(pk);
        }
        for (rho, v) in &term.terms {
            out.add_term(rho.clone(), &(v * c));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::for_each_ssyt;
    use crate::schur::{expand_in_schur, schur_poly_tableaux};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn chi(lam: &[u32], rho: &[u32]) -> i128 {
        mn_character(&p(lam), &CycleType::new(p(rho))).unwrap()
    }

    #[test]
    fn character_examples() {
        assert_eq!(chi(&[4], &[2, 1, 1]), 1);
        assert_eq!(chi(&[1, 1], &[2]), -1);
        assert_eq!(chi(&[2, 1], &[1, 1, 1]), 2);
        assert_eq!(chi(&[2, 1], &[3]), -1);
        assert_eq!(chi(&[2, 2], &[3, 1]), -1);
        assert_eq!(chi(&[2, 2], &[4]), 0);
        assert_eq!(
            mn_character(&p(&[2]), &CycleType::new(p(&[1]))),
            Err(Error::WeightMismatch { left: 2, right: 1 })
        );
    }

    fn count_standard(lam: &Partition) -> i128 {
        let mut n = 0;
        for_each_ssyt(lam, lam.weight() as u32, |t| {
            let mut seen = vec![false; lam.weight()];
            let ok = t.iter().flatten().all(|&v| !std::mem::replace(&mut seen[v as usize - 1], true));
            if ok {
                n += 1;
            }
        });
        n
    }

    #[test]
    fn identity_character_counts_standard_tableaux() {
        for w in 0..=6 {
            for lam in all_partitions_of(w) {
                let ones = Partition::new(vec![1; w]);
                assert_eq!(chi(lam.parts(), ones.parts()), count_standard(&lam));
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        let mut t = CharacterTable::new();
        for w in 0..=6 {
            let parts = all_partitions_of(w);
            for rho in &parts {
                for sigma in &parts {
                    let s: i128 = parts
                        .iter()
                        .map(|l| t.chi(l, rho.parts()) * t.chi(l, sigma.parts()))
                        .sum();
                    let expect = if rho == sigma { z_rho(rho) } else { BigInt::zero() };
                    assert_eq!(BigInt::from(s), expect, "{rho} {sigma}");
                }
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(z_rho(&p(&[])), BigInt::one());
        assert_eq!(z_rho(&p(&[1, 1, 1])), BigInt::from(6));
        assert_eq!(z_rho(&p(&[2, 2, 1])), BigInt::from(8));
        assert_eq!(*CycleType::new(p(&[3])).z(), BigInt::from(3));
    }

    #[test]
    fn schur_to_p_examples() {
        assert_eq!(schur_to_p(&p(&[1])), PExpansion::power(p(&[1])));
        assert_eq!(
            schur_to_p(&p(&[2])),
            PExpansion::from_terms(2, [(p(&[2]), q(1, 2)), (p(&[1, 1]), q(1, 2))])
        );
        assert_eq!(
            schur_to_p(&p(&[1, 1])),
            PExpansion::from_terms(2, [(p(&[2]), q(-1, 2)), (p(&[1, 1]), q(1, 2))])
        );
    }

    #[test]
    fn schur_to_p_evaluates_correctly() {
        for w in 0..=5 {
            for lam in all_partitions_of(w) {
                for n in 1..=3 {
                    let direct = schur_poly_tableaux(&lam, n).map_coeffs(|c| BigRational::from_integer(c.clone()));
                    assert_eq!(schur_to_p(&lam).evaluate(n), direct, "{lam} n={n}");
                }
            }
        }
    }

    #[test]
    fn round_trip() {
        let mut t = CharacterTable::new();
        for w in 0..=8 {
            for lam in all_partitions_of(w) {
                let back = p_to_schur_with(&schur_to_p_with(&lam, &mut t), &mut t).unwrap();
                assert_eq!(back, SchurCoefficients::from([(lam, BigInt::one())]));
            }
        }
    }

    #[test]
    fn pieri_product() {
        let e = schur_to_p(&p(&[2])).mul(&schur_to_p(&p(&[1])));
        let s = p_to_schur(&e).unwrap();
        assert_eq!(s, SchurCoefficients::from([(p(&[3]), BigInt::one()), (p(&[2, 1]), BigInt::one())]));
    }

    #[test]
    fn non_integral_is_reported() {
        let e = PExpansion::from_terms(2, [(p(&[2]), q(1, 2))]);
        assert!(matches!(p_to_schur(&e), Err(Error::NonIntegralResult { .. })));
    }

    #[test]
    fn internal_product_examples() {
        let triv = schur_to_p(&p(&[3]));
        assert_eq!(internal_product(&triv, &triv).unwrap(), triv);
        let sign2 = schur_to_p(&p(&[1, 1]));
        let triv2 = schur_to_p(&p(&[2]));
        assert_eq!(internal_product(&sign2, &sign2).unwrap(), triv2);
        assert_eq!(internal_product(&triv2, &sign2).unwrap(), sign2);
        assert_eq!(
            internal_product(&triv2, &triv),
            Err(Error::WeightMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn internal_product_laws() {
        let mut t = CharacterTable::new();
        let w = 4;
        let all: Vec<_> = all_partitions_of(w).iter().map(|l| schur_to_p_with(l, &mut t)).collect();
        let unit = schur_to_p(&p(&[4]));
        for a in &all {
            assert_eq!(&internal_product(a, &unit).unwrap(), a);
            for b in &all {
                let ab = internal_product(a, b).unwrap();
                assert_eq!(ab, internal_product(b, a).unwrap());
                for c in &all[..3] {
                    assert_eq!(
                        internal_product(&ab, c).unwrap(),
                        internal_product(a, &internal_product(b, c).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn plethysm_examples() {
        let s1 = schur_to_p(&p(&[1]));
        let g = schur_to_p(&p(&[2, 1]));
        assert_eq!(plethysm_p(&s1, &g), g);
        assert_eq!(plethysm_p(&g, &s1), g);
        assert_eq!(
            plethysm_p(&PExpansion::power(p(&[2])), &PExpansion::power(p(&[3]))),
            PExpansion::power(p(&[6]))
        );
        let s2 = schur_to_p(&p(&[2]));
        let h = p_to_schur(&plethysm_p(&s2, &s2)).unwrap();
        assert_eq!(h, SchurCoefficients::from([(p(&[4]), BigInt::one()), (p(&[2, 2]), BigInt::one())]));
        // monomial check at n = 2
        let lhs = plethysm_p(&s2, &s2).evaluate(2);
        let rhs = (&schur_poly_tableaux(&p(&[4]), 2) + &schur_poly_tableaux(&p(&[2, 2]), 2))
            .map_coeffs(|c| BigRational::from_integer(c.clone()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_commutes_with_operations() {
        let mut t = CharacterTable::new();
        for (a, b) in [(vec![2], vec![1, 1]), (vec![2, 1], vec![1]), (vec![1, 1], vec![2])] {
            let (a, b) = (p(&a), p(&b));
            let (ea, eb) = (schur_to_p_with(&a, &mut t), schur_to_p_with(&b, &mut t));
            for n in 1..=3 {
                // product
                assert_eq!(ea.mul(&eb).evaluate(n), &ea.evaluate(n) * &eb.evaluate(n));
                // plethysm: p_k[g] is the k-th Frobenius substitution of g
                let gn = eb.evaluate(n);
                let mut rhs = QPoly::zero(n);
                for (sigma, c) in ea.terms() {
                    let mut term = QPoly::constant(n, c.clone());
                    for &k in sigma.parts() {
                        term = &term * &gn.frobenius_substitute(k);
                    }
                    rhs = &rhs + &term;
                }
                assert_eq!(plethysm_p(&ea, &eb).evaluate(n), rhs);
                // p_to_schur
                let s = p_to_schur(&ea.mul(&eb)).unwrap();
                let mut poly = crate::polyring::ZPoly::zero(n);
                for (lam, c) in &s {
                    poly = &poly + &schur_poly_tableaux(lam, n).scalar_mul(c);
                }
                assert_eq!(
                    poly.map_coeffs(|c| BigRational::from_integer(c.clone())),
                    ea.mul(&eb).evaluate(n)
                );
                let _ = expand_in_schur(&poly).unwrap();
            }
        }
    }

    #[test]
    fn plethysm_degree() {
        let f = schur_to_p(&p(&[2, 1]));
        let g = schur_to_p(&p(&[2]));
        assert_eq!(plethysm_p(&f, &g).weight(), 6);
        assert!(plethysm_p(&f, &g).terms().all(|(k, _)| k.weight() == 6));
    }
}
