//! Littlewood–Richardson, Kronecker, plethysm and Kostka–Foulkes
//! coefficients, each by a main route and an independent oracle.
//!
//! | family | main | oracle |
//! |---|---|---|
//! | LR | Schur expansion of `s_λ s_μ` in `ℓ(ν)` variables | lattice-word skew tableaux |
//! | Kronecker | characters: `⟨s_λ, s_μ ∗ s_ν⟩` in the power-sum basis | `s_ν[X_l Y_m]` read in the basis `s_α[X_l] s_β[Y_m]` |
//! | plethysm | power-sum plethysm | `s_λ` at the monomials of `Tab(μ, n)` |
//! | Kostka–Foulkes | Hall–Littlewood elimination | charge |
//!
//! All routes return zero on weight mismatch. An [`Engine`] owns the memo
//! tables; it is cheap to create and not shared between threads.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hall_littlewood::{kostka_foulkes_charge, HLTable};
use crate::partitions::{for_each_ssyt, Partition, SignedSequence};
use crate::polyring::{Monomial, TPoly, ZPoly};
use crate::powersum::{internal_product, plethysm_p, schur_coefficient_of, schur_to_p_with, CharacterTable};
use crate::schur::{alternant_shifts, eliminate_until, schur_poly_tableaux, KostkaTable};

/// The coefficient families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Lr,
    Kronecker,
    Plethysm,
    KostkaFoulkes,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Lr, Family::Kronecker, Family::Plethysm, Family::KostkaFoulkes];

    /// Number of partition indices.
    pub fn arity(self) -> usize {
        match self {
            Family::KostkaFoulkes => 2,
            _ => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Lr => "lr",
            Family::Kronecker => "kronecker",
            Family::Plethysm => "plethysm",
            Family::KostkaFoulkes => "kostka-foulkes",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    #[default]
    Main,
    Oracle,
}

/// A coefficient request: family, indices and route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientQuery {
    family: Family,
    indices: Vec<Partition>,
    method: Method,
}

impl CoefficientQuery {
    pub fn new(family: Family, indices: Vec<Partition>, method: Method) -> Result<Self> {
        if indices.len() != family.arity() {
            return Err(Error::IndexCount {
                expected: family.arity(),
                found: indices.len(),
            });
        }
        Ok(CoefficientQuery {
            family,
            indices,
            method,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn indices(&self) -> &[Partition] {
        &self.indices
    }

    pub fn method(&self) -> Method {
        self.method
    }
}

/// An integer coefficient, or a polynomial in `t` for Kostka–Foulkes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoefficientValue {
    Integer(BigInt),
    Polynomial(TPoly),
}

impl CoefficientValue {
    pub fn is_zero(&self) -> bool {
        match self {
            CoefficientValue::Integer(v) => v.is_zero(),
            CoefficientValue::Polynomial(p) => p.is_zero(),
        }
    }
}

impl fmt::Display for CoefficientValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientValue::Integer(v) => write!(f, "{v}"),
            CoefficientValue::Polynomial(p) => write!(f, "{p}"),
        }
    }
}

/// Above this weight the power-sum routes are replaced by the
/// small-alphabet routes when a coefficient only needs to be correct.
const POWER_SUM_WEIGHT_LIMIT: usize = 10;

/// Memo tables for one thread of computation.
#[derive(Default)]
pub struct Engine {
    characters: CharacterTable,
    hl: HLTable,
    /// `(ν, sorted row sums, sorted column sums)` → coefficient of
    /// `x^a y^b` in `s_ν[X Y]`
    two_alphabet: HashMap<(Partition, Vec<u32>, Vec<u32>), BigInt>,
    values: HashMap<(Family, Vec<Partition>), CoefficientValue>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    fn kostka(&mut self) -> &mut KostkaTable {
        self.hl.kostka_table()
    }

    /// Drops memo tables once they grow past a few million entries.
    pub fn trim(&mut self) {
        if self.two_alphabet.len() > 2_000_000 {
            self.two_alphabet.clear();
        }
        if self.values.len() > 2_000_000 {
            self.values.clear();
        }
    }

    pub fn compute(&mut self, q: &CoefficientQuery) -> Result<CoefficientValue> {
        let ix = &q.indices;
        Ok(match (q.family, q.method) {
            (Family::Lr, Method::Main) => CoefficientValue::Integer(self.lr(&ix[0], &ix[1], &ix[2])),
            (Family::Lr, Method::Oracle) => CoefficientValue::Integer(lr_oracle(&ix[0], &ix[1], &ix[2])),
            (Family::Kronecker, Method::Main) => CoefficientValue::Integer(self.kronecker(&ix[0], &ix[1], &ix[2])),
            (Family::Kronecker, Method::Oracle) => {
                CoefficientValue::Integer(self.kronecker_oracle_default(&ix[0], &ix[1], &ix[2]))
            }
            (Family::Plethysm, Method::Main) => CoefficientValue::Integer(self.plethysm(&ix[0], &ix[1], &ix[2])?),
            (Family::Plethysm, Method::Oracle) => {
                CoefficientValue::Integer(self.plethysm_oracle(&ix[0], &ix[1], &ix[2])?)
            }
            (Family::KostkaFoulkes, Method::Main) => CoefficientValue::Polynomial(self.kostka_foulkes(&ix[0], &ix[1])),
            (Family::KostkaFoulkes, Method::Oracle) => {
                CoefficientValue::Polynomial(kostka_foulkes_charge(&ix[0], &ix[1]))
            }
        })
    }

    /// The cheapest exact route for a query; used by sweeps.
    pub fn value(&mut self, family: Family, ix: &[Partition]) -> Result<CoefficientValue> {
        Ok(match family {
            Family::Lr => CoefficientValue::Integer(self.lr(&ix[0], &ix[1], &ix[2])),
            Family::Kronecker => CoefficientValue::Integer(self.kronecker_fast(&ix[0], &ix[1], &ix[2])),
            Family::Plethysm => CoefficientValue::Integer(self.plethysm_fast(&ix[0], &ix[1], &ix[2])?),
            Family::KostkaFoulkes => CoefficientValue::Polynomial(self.kostka_foulkes(&ix[0], &ix[1])),
        })
    }

    /// [`Engine::value`], memoised on the index tuple.
    pub fn cached_value(&mut self, family: Family, ix: &[Partition]) -> Result<CoefficientValue> {
        let key = (family, ix.to_vec());
        if let Some(v) = self.values.get(&key) {
            return Ok(v.clone());
        }
        let v = self.value(family, ix)?;
        self.values.insert(key, v.clone());
        Ok(v)
    }

    /// `c^ν_{λμ}` from the Schur expansion of `s_λ[X_n] s_μ[X_n]`,
    /// `n = ℓ(ν)`.
    pub fn lr(&mut self, lam: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
        if lam.weight() + mu.weight() != nu.weight() {
            return BigInt::zero();
        }
        let n = nu.len().max(1);
        if lam.len() > n || mu.len() > n {
            return BigInt::zero();
        }
        let target: Vec<i32> = nu.to_signed(n).unwrap().entries().to_vec();
        let a = schur_poly_tableaux(lam, n);
        let b = schur_poly_tableaux(mu, n);
        // dominant part of the product, restricted to keys >= ν
        let mut dom = std::collections::BTreeMap::new();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let e: Vec<i32> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                if e.windows(2).all(|w| w[0] >= w[1]) && e >= target {
                    *dom.entry(e).or_insert_with(BigInt::zero) += ca * cb;
                }
            }
        }
        dom.retain(|_, c: &mut BigInt| !c.is_zero());
        let table = self.kostka();
        let coeffs = eliminate_until(
            dom,
            |k| Ok(table.dominant_schur(&SignedSequence::new(k.to_vec()))),
            Some(&target),
        )
        .expect("Schur elimination of a product");
        coeffs.get(&target).cloned().unwrap_or_default()
    }

    /// `g(λ, μ, ν)` from characters: the `s_λ` coefficient of `s_μ ∗ s_ν`.
    pub fn kronecker(&mut self, lam: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
        let n = lam.weight();
        if mu.weight() != n || nu.weight() != n {
            return BigInt::zero();
        }
        let pm = schur_to_p_with(mu, &mut self.characters);
        let pn = schur_to_p_with(nu, &mut self.characters);
        let prod = internal_product(&pm, &pn).expect("equal weights");
        schur_coefficient_of(&prod, lam, &mut self.characters).expect("Kronecker product is integral")
    }

    /// `g(λ, μ, ν)` as the coefficient of `s_λ[X_l] s_μ[Y_m]` in `s_ν[X_l Y_m]`.
    pub fn kronecker_oracle(&mut self, lam: &Partition, mu: &Partition, nu: &Partition, l: usize, m: usize) -> Result<BigInt> {
        if l < lam.len() {
            return Err(Error::ArityTooSmall {
                name: "lambda",
                arity: l,
                length: lam.len(),
            });
        }
        if m < mu.len() {
            return Err(Error::ArityTooSmall {
                name: "mu",
                arity: m,
                length: mu.len(),
            });
        }
        let n = lam.weight();
        if mu.weight() != n || nu.weight() != n {
            return Ok(BigInt::zero());
        }
        if n == 0 {
            return Ok(BigInt::one());
        }
        // s_ν vanishes on an alphabet of fewer than ℓ(ν) letters
        if nu.len() > l * m {
            return Ok(BigInt::zero());
        }
        let lam_s: Vec<i32> = lam.to_signed(l)?.entries().to_vec();
        let mu_s: Vec<i32> = mu.to_signed(m)?.entries().to_vec();
        let xs = alternant_shifts(&lam_s, Some(0));
        let ys = alternant_shifts(&mu_s, Some(0));
        let mut acc = BigInt::zero();
        for (a, sa) in &xs {
            for (b, sb) in &ys {
                let c = self.two_alphabet_coefficient(nu, a, b);
                if c.is_zero() {
                    continue;
                }
                if sa * sb > 0 {
                    acc += c;
                } else {
                    acc -= c;
                }
            }
        }
        Ok(acc)
    }

    /// The oracle at the smallest legal alphabets `l = ℓ(λ)`, `m = ℓ(μ)`.
    pub fn kronecker_oracle_default(&mut self, lam: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
        self.kronecker_oracle(lam, mu, nu, lam.len().max(1), mu.len().max(1))
            .expect("alphabets cover the lengths")
    }

    /// Exact `g(λ, μ, ν)` by whichever route is cheapest: small weights by
    /// characters, larger ones by the two-alphabet route after moving the
    /// two shortest (possibly conjugated) arguments into the alphabet roles.
    pub fn kronecker_fast(&mut self, lam: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
        let n = lam.weight();
        if mu.weight() != n || nu.weight() != n {
            return BigInt::zero();
        }
        if n <= POWER_SUM_WEIGHT_LIMIT {
            return self.kronecker(lam, mu, nu);
        }
        let (a, b, c) = cheapest_kronecker_arrangement(lam, mu, nu);
        self.kronecker_oracle_default(&a, &b, &c)
    }

    /// Coefficient of `x^a y^b` in `s_ν[X Y]`: a sum over nonnegative
    /// matrices with row sums `a`, column sums `b` of the Kostka number of
    /// `ν` at the matrix entries.
    fn two_alphabet_coefficient(&mut self, nu: &Partition, a: &[i32], b: &[i32]) -> BigInt {
        let mut ra: Vec<u32> = a.iter().map(|&v| v as u32).filter(|&v| v > 0).collect();
        let mut rb: Vec<u32> = b.iter().map(|&v| v as u32).filter(|&v| v > 0).collect();
        ra.sort_unstable_by(|x, y| y.cmp(x));
        rb.sort_unstable_by(|x, y| y.cmp(x));
        let key = (nu.clone(), ra, rb);
        if let Some(v) = self.two_alphabet.get(&key) {
            return v.clone();
        }
        let (ra, rb) = (&key.1, &key.2);
        let mut contents: HashMap<Vec<u32>, u64> = HashMap::new();
        let mut cols = rb.clone();
        let mut entries = Vec::new();
        for_each_matrix(ra, 0, &mut cols, &mut entries, &mut |e| {
            let mut c: Vec<u32> = e.iter().copied().filter(|&v| v > 0).collect();
            c.sort_unstable_by(|x, y| y.cmp(x));
            *contents.entry(c).or_default() += 1;
        });
        let mut total = BigInt::zero();
        let mut contents: Vec<_> = contents.into_iter().collect();
        contents.sort();
        for (c, mult) in contents {
            let k = self.kostka().kostka(nu, &Partition::new(c));
            total += k * BigInt::from(mult);
        }
        self.two_alphabet.insert(key, total.clone());
        total
    }

    /// `a_{λμ}^ν` by power-sum plethysm.
    pub fn plethysm(&mut self, lam: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
        if lam.weight() * mu.weight() != nu.weight() {
            return Ok(BigInt::zero());
        }
        let outer = schur_to_p_with(lam, &mut self.characters);
        let inner = schur_to_p_with(mu, &mut self.characters);
        let e = plethysm_p(&outer, &inner);
        schur_coefficient_of(&e, nu, &mut self.characters)
    }

    /// `a_{λμ}^ν` from `s_λ` evaluated at the monomials `x^{w(T)}`,
    /// `T ∈ Tab(μ, n)`, `n = ℓ(ν)`, then expanded in Schur polynomials.
    pub fn plethysm_oracle(&mut self, lam: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
        if lam.weight() * mu.weight() != nu.weight() {
            return Ok(BigInt::zero());
        }
        let n = nu.len().max(1);
        let f = plethysm_polynomial(lam, mu, n);
        let target: Vec<i32> = nu.to_signed(n)?.entries().to_vec();
        let table = self.kostka();
        let coeffs = eliminate_until(
            f.dominant_terms(),
            |k| Ok(table.dominant_schur(&SignedSequence::new(k.to_vec()))),
            Some(&target),
        )?;
        Ok(coeffs.get(&target).cloned().unwrap_or_default())
    }

    /// Exact `a_{λμ}^ν`, by power sums at small weight and by monomial
    /// specialization otherwise.
    pub fn plethysm_fast(&mut self, lam: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
        if lam.weight() * mu.weight() <= POWER_SUM_WEIGHT_LIMIT {
            self.plethysm(lam, mu, nu)
        } else {
            self.plethysm_oracle(lam, mu, nu)
        }
    }

    /// `K_{λμ}(t)` by Hall–Littlewood elimination.
    pub fn kostka_foulkes(&mut self, lam: &Partition, mu: &Partition) -> TPoly {
        self.hl.kostka_foulkes(lam, mu)
    }

    /// `K_{λμ}(t)` at an explicit arity.
    pub fn kostka_foulkes_at(&mut self, lam: &Partition, mu: &Partition, n: usize) -> Result<TPoly> {
        self.hl.kostka_foulkes_at(lam, mu, n)
    }
}

/// Picks `(α, β, γ)` with `g(α, β, γ) = g(λ, μ, ν)` minimizing `ℓ(α)ℓ(β)`,
/// using invariance under permutations and under conjugating two
/// arguments.
pub fn cheapest_kronecker_arrangement(lam: &Partition, mu: &Partition, nu: &Partition) -> (Partition, Partition, Partition) {
    let base = [lam.clone(), mu.clone(), nu.clone()];
    let conj = [lam.conjugate(), mu.conjugate(), nu.conjugate()];
    let patterns: [[bool; 3]; 4] = [
        [false, false, false],
        [false, true, true],
        [true, false, true],
        [true, true, false],
    ];
    let orders = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
    let mut best: Option<((usize, usize), [Partition; 3])> = None;
    for pat in patterns {
        let t: [Partition; 3] = std::array::from_fn(|i| if pat[i] { conj[i].clone() } else { base[i].clone() });
        for ord in orders {
            let (a, b, c) = (&t[ord[0]], &t[ord[1]], &t[ord[2]]);
            let (a, b) = if a.len() <= b.len() { (a, b) } else { (b, a) };
            let cost = (a.len().max(1) * b.len().max(1), b.len());
            if best.as_ref().is_none_or(|(c0, _)| cost < *c0) {
                best = Some((cost, [a.clone(), b.clone(), c.clone()]));
            }
        }
    }
    let [a, b, c] = best.unwrap().1;
    (a, b, c)
}

// Rows are filled one at a time; `cols` holds the remaining column sums.
fn for_each_matrix(rows: &[u32], r: usize, cols: &mut Vec<u32>, entries: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if r == rows.len() {
        if cols.iter().all(|&c| c == 0) {
            visit(entries);
        }
        return;
    }
    fill_row(rows, r, 0, rows[r], cols, entries, visit);
}

fn fill_row(
    rows: &[u32],
    r: usize,
    j: usize,
    left: u32,
    cols: &mut Vec<u32>,
    entries: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if j == cols.len() {
        if left == 0 {
            for_each_matrix(rows, r + 1, cols, entries, visit);
        }
        return;
    }
    let remaining_cap: u32 = cols[j..].iter().sum();
    if remaining_cap < left {
        return;
    }
    let hi = left.min(cols[j]);
    for v in 0..=hi {
        cols[j] -= v;
        entries.push(v);
        fill_row(rows, r, j + 1, left - v, cols, entries, visit);
        entries.pop();
        cols[j] += v;
    }
}

/// The monomials `x^{w(T)}`, `T ∈ Tab(μ, n)`, with multiplicity.
pub fn tableau_monomials(mu: &Partition, n: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    if mu.len() > n {
        return out;
    }
    for_each_ssyt(mu, n as u32, |t| {
        let mut e = vec![0i32; n];
        for &v in t.iter().flatten() {
            e[v as usize - 1] += 1;
        }
        out.push(e);
    });
    out
}

/// `s_λ[s_μ](X_n)` as `s_λ` evaluated at the monomials of `Tab(μ, n)`.
pub fn plethysm_polynomial(lam: &Partition, mu: &Partition, n: usize) -> ZPoly {
    let ys = tableau_monomials(mu, n);
    let mut out = ZPoly::zero(n);
    let r = ys.len();
    if lam.len() > r {
        return out;
    }
    let one = BigInt::one();
    if r == 0 {
        // only the empty outer shape survives an empty alphabet
        if lam.is_empty() {
            out.add_term(Monomial::constant(n), &one);
        }
        return out;
    }
    for_each_ssyt(lam, r as u32, |t| {
        let mut e = vec![0i32; n];
        for &v in t.iter().flatten() {
            for (x, y) in e.iter_mut().zip(&ys[v as usize - 1]) {
                *x += y;
            }
        }
        out.add_term(Monomial(e), &one);
    });
    out
}

/// Number of LR tableaux of shape `ν/λ` and content `μ` whose reverse
/// reading word is a lattice word.
pub fn lr_oracle(lam: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if lam.weight() + mu.weight() != nu.weight() || !lam.is_contained_in(nu) {
        return BigInt::zero();
    }
    let rows = nu.len();
    let mut grid: Vec<Vec<u32>> = (0..rows).map(|r| vec![0; nu.part(r) as usize]).collect();
    // cells in reading order: top row first, right to left
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (lam.part(r) as usize..nu.part(r) as usize).rev().map(move |c| (r, c)))
        .collect();
    let mut counts = vec![0u32; mu.len() + 1];
    let mut total = 0u64;
    fn rec(
        i: usize,
        cells: &[(usize, usize)],
        lam: &Partition,
        mu: &Partition,
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        total: &mut u64,
    ) {
        if i == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[i];
        // weakly increasing rows: at most the entry to the right
        let right = grid[r].get(c + 1).copied().filter(|&v| v > 0).unwrap_or(u32::MAX);
        // strictly increasing columns: above the entry above, if in the skew shape
        let above = if r > 0 && c >= lam.part(r - 1) as usize { grid[r - 1][c] } else { 0 };
        for v in (above + 1)..=(mu.len() as u32).min(right) {
            let vi = v as usize;
            if counts[vi] >= mu.part(vi - 1) {
                continue;
            }
            if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
                continue;
            }
            counts[vi] += 1;
            grid[r][c] = v;
            rec(i + 1, cells, lam, mu, grid, counts, total);
            grid[r][c] = 0;
            counts[vi] -= 1;
        }
    }
    rec(0, &cells, lam, mu, &mut grid, &mut counts, &mut total);
    BigInt::from(total)
}

pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    Engine::new().lr(lam, mu, nu)
}

pub fn kronecker_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    Engine::new().kronecker(lam, mu, nu)
}

pub fn kronecker_oracle(lam: &Partition, mu: &Partition, nu: &Partition, l: usize, m: usize) -> Result<BigInt> {
    Engine::new().kronecker_oracle(lam, mu, nu, l, m)
}

pub fn plethysm_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    Engine::new().plethysm(lam, mu, nu).expect("plethysm coefficients are integral")
}

pub fn plethysm_oracle(lam: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    Engine::new().plethysm_oracle(lam, mu, nu).expect("lengths fit")
}

pub fn kostka_foulkes_coefficient(lam: &Partition, mu: &Partition) -> TPoly {
    Engine::new().kostka_foulkes(lam, mu)
}
