//! Rectangle-complement and rectangle-translation identities for the four
//! coefficient families, exhaustive verification sweeps, and the weight
//! reduction planners built on the box rules.
//!
//! Each identity has hypotheses and a containment test. Failing a
//! hypothesis is an [`Error::PreconditionViolated`]; failing the
//! containment test means the coefficient vanishes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coefficients::{CoefficientValue, Engine, Family};
use crate::error::{Error, Result};
use crate::partitions::{add_rectangle, all_partitions_of, count_ssyt, Partition};

/// Identifier of one of the ten identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleId {
    LrBox,
    LrTranslate,
    KronBox,
    KronTranslate,
    PlethBoxInner,
    PlethTranslateInner,
    PlethBoxOuter,
    PlethTranslateOuter,
    KfBox,
    KfTranslate,
}

impl RuleId {
    pub const ALL: [RuleId; 10] = [
        RuleId::LrBox,
        RuleId::LrTranslate,
        RuleId::KronBox,
        RuleId::KronTranslate,
        RuleId::PlethBoxInner,
        RuleId::PlethTranslateInner,
        RuleId::PlethBoxOuter,
        RuleId::PlethTranslateOuter,
        RuleId::KfBox,
        RuleId::KfTranslate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::LrBox => "lr-box",
            RuleId::LrTranslate => "lr-translate",
            RuleId::KronBox => "kron-box",
            RuleId::KronTranslate => "kron-translate",
            RuleId::PlethBoxInner => "pleth-box-inner",
            RuleId::PlethTranslateInner => "pleth-translate-inner",
            RuleId::PlethBoxOuter => "pleth-box-outer",
            RuleId::PlethTranslateOuter => "pleth-translate-outer",
            RuleId::KfBox => "kf-box",
            RuleId::KfTranslate => "kf-translate",
        }
    }

    pub fn family(self) -> Family {
        match self {
            RuleId::LrBox | RuleId::LrTranslate => Family::Lr,
            RuleId::KronBox | RuleId::KronTranslate => Family::Kronecker,
            RuleId::KfBox | RuleId::KfTranslate => Family::KostkaFoulkes,
            _ => Family::Plethysm,
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

/// An identity together with its parameters. Box widths are `l`, `m`,
/// `k`; heights are `n`; translation amounts are `k` (possibly negative).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum SymmetryRule {
    LrBox { l: u32, m: u32, n: usize },
    LrTranslate { k: i64, n: usize },
    KronBox { l: u32, m: u32, n: u32 },
    KronTranslate { l: usize, m: usize, k: i64 },
    PlethBoxInner { m: u32, n: usize },
    PlethTranslateInner { k: i64, n: usize },
    PlethBoxOuter { l: u32, n: usize },
    PlethTranslateOuter { k: i64, n: usize },
    KfBox { k: u32, n: usize },
    KfTranslate { k: i64, n: usize },
}

impl SymmetryRule {
    pub fn id(&self) -> RuleId {
        match self {
            SymmetryRule::LrBox { .. } => RuleId::LrBox,
            SymmetryRule::LrTranslate { .. } => RuleId::LrTranslate,
            SymmetryRule::KronBox { .. } => RuleId::KronBox,
            SymmetryRule::KronTranslate { .. } => RuleId::KronTranslate,
            SymmetryRule::PlethBoxInner { .. } => RuleId::PlethBoxInner,
            SymmetryRule::PlethTranslateInner { .. } => RuleId::PlethTranslateInner,
            SymmetryRule::PlethBoxOuter { .. } => RuleId::PlethBoxOuter,
            SymmetryRule::PlethTranslateOuter { .. } => RuleId::PlethTranslateOuter,
            SymmetryRule::KfBox { .. } => RuleId::KfBox,
            SymmetryRule::KfTranslate { .. } => RuleId::KfTranslate,
        }
    }

    pub fn family(&self) -> Family {
        self.id().family()
    }
}

impl fmt::Display for SymmetryRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let id = self.id();
        match *self {
            SymmetryRule::LrBox { l, m, n } => write!(f, "{id}(l={l},m={m},n={n})"),
            SymmetryRule::KronBox { l, m, n } => write!(f, "{id}(l={l},m={m},n={n})"),
            SymmetryRule::KronTranslate { l, m, k } => write!(f, "{id}(l={l},m={m},k={k})"),
            SymmetryRule::PlethBoxInner { m, n } => write!(f, "{id}(m={m},n={n})"),
            SymmetryRule::PlethBoxOuter { l, n } => write!(f, "{id}(l={l},n={n})"),
            SymmetryRule::KfBox { k, n } => write!(f, "{id}(k={k},n={n})"),
            SymmetryRule::LrTranslate { k, n }
            | SymmetryRule::PlethTranslateInner { k, n }
            | SymmetryRule::PlethTranslateOuter { k, n }
            | SymmetryRule::KfTranslate { k, n } => write!(f, "{id}(k={k},n={n})"),
        }
    }
}

/// Result of applying an identity to an index tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "indices", rename_all = "kebab-case")]
pub enum Verdict {
    Transformed(Vec<Partition>),
    Vanishes,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryOutcome {
    pub rule: SymmetryRule,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// `□_w^h p`: the complement of `p` in the `w × h` rectangle.
pub fn rect_complement(p: &Partition, width: u32, height: usize) -> Option<Partition> {
    if p.len() > height || (p.first() > width) {
        return None;
    }
    let parts = (0..height).rev().map(|i| width - p.part(i)).collect();
    Some(Partition::new(parts))
}

fn violated(rule: &SymmetryRule, clause: &str) -> Error {
    Error::PreconditionViolated {
        rule: rule.to_string(),
        clause: clause.to_string(),
    }
}

fn require(ok: bool, rule: &SymmetryRule, clause: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(violated(rule, clause))
    }
}

/// Number of semistandard tableaux of shape `μ` with entries at most `n`,
/// and `q = r|μ|/n`.
pub fn outer_box_parameters(mu: &Partition, n: usize) -> (u64, u64) {
    let r = count_ssyt(mu, n).to_u64().expect("tableau count fits in u64");
    let num = r * mu.weight() as u64;
    assert!(n > 0 && num.is_multiple_of(n as u64), "r|mu|/n must be an integer");
    (r, num / n as u64)
}

/// Applies `rule` to `indices`: `(λ, μ, ν)`, or `(λ, μ)` for Kostka–Foulkes.
pub fn apply_rule(rule: &SymmetryRule, indices: &[Partition]) -> Result<SymmetryOutcome> {
    let want = rule.family().arity();
    if indices.len() != want {
        return Err(Error::IndexCount {
            expected: want,
            found: indices.len(),
        });
    }
    let lam = &indices[0];
    let mu = &indices[1];
    let transformed = |v: Vec<Partition>| SymmetryOutcome {
        rule: *rule,
        verdict: Verdict::Transformed(v),
    };
    let vanishes = SymmetryOutcome {
        rule: *rule,
        verdict: Verdict::Vanishes,
    };
    let out = match *rule {
        SymmetryRule::LrBox { l, m, n } => {
            let nu = &indices[2];
            require(nu.len() <= n, rule, "length(nu) <= n")?;
            require(lam.first() <= l, rule, "lambda_1 <= l")?;
            require(mu.first() <= m, rule, "mu_1 <= m")?;
            match (
                rect_complement(lam, l, n),
                rect_complement(mu, m, n),
                rect_complement(nu, l + m, n),
            ) {
                (Some(a), Some(b), Some(c)) => transformed(vec![a, b, c]),
                _ => vanishes,
            }
        }
        SymmetryRule::LrTranslate { k, n } => {
            let nu = &indices[2];
            require(nu.len() <= n, rule, "length(nu) <= n")?;
            let a = add_rectangle(lam, k, n);
            require(a.is_some(), rule, "lambda + (k^n) is a partition")?;
            match (lam.len() <= n, add_rectangle(nu, k, n)) {
                (true, Some(c)) => transformed(vec![a.unwrap(), mu.clone(), c]),
                _ => vanishes,
            }
        }
        SymmetryRule::KronBox { l, m, n } => {
            let nu = &indices[2];
            require(lam.first() <= l, rule, "lambda_1 <= l")?;
            require(mu.first() <= m, rule, "mu_1 <= m")?;
            require(nu.first() <= n, rule, "nu_1 <= n")?;
            let (lu, mu_, nu_) = (l as usize, m as usize, n as usize);
            match (
                rect_complement(lam, l, mu_ * nu_),
                rect_complement(mu, m, lu * nu_),
                rect_complement(nu, n, lu * mu_),
            ) {
                (Some(a), Some(b), Some(c)) => transformed(vec![a, b, c]),
                _ => vanishes,
            }
        }
        SymmetryRule::KronTranslate { l, m, k } => {
            let nu = &indices[2];
            require(lam.len() <= l, rule, "length(lambda) <= l")?;
            require(mu.len() <= m, rule, "length(mu) <= m")?;
            let c = add_rectangle(nu, k, l * m);
            require(c.is_some(), rule, "nu + (k^(lm)) is a partition")?;
            let a = add_rectangle(lam, k * m as i64, l);
            let b = add_rectangle(mu, k * l as i64, m);
            match (nu.len() <= l * m, a, b) {
                (true, Some(a), Some(b)) => transformed(vec![a, b, c.unwrap()]),
                _ => vanishes,
            }
        }
        SymmetryRule::PlethBoxInner { m, n } => {
            let nu = &indices[2];
            require(mu.first() <= m && mu.len() <= n, rule, "mu inside (m^n)")?;
            require(nu.len() <= n, rule, "length(nu) <= n")?;
            let b = rect_complement(mu, m, n).expect("checked containment");
            let width = m * lam.weight() as u32;
            match rect_complement(nu, width, n) {
                Some(c) => transformed(vec![lam.clone(), b, c]),
                None => vanishes,
            }
        }
        SymmetryRule::PlethTranslateInner { k, n } => {
            let nu = &indices[2];
            require(nu.len() <= n, rule, "length(nu) <= n")?;
            let b = add_rectangle(mu, k, n);
            require(b.is_some(), rule, "mu + (k^n) is a partition")?;
            match add_rectangle(nu, k * lam.weight() as i64, n) {
                Some(c) => transformed(vec![lam.clone(), b.unwrap(), c]),
                None => vanishes,
            }
        }
        SymmetryRule::PlethBoxOuter { l, n } => {
            let nu = &indices[2];
            require(n >= 1, rule, "n >= 1")?;
            require(lam.first() <= l, rule, "lambda_1 <= l")?;
            require(nu.len() <= n, rule, "length(nu) <= n")?;
            let (r, q) = outer_box_parameters(mu, n);
            match (
                rect_complement(lam, l, r as usize),
                rect_complement(nu, (q * l as u64) as u32, n),
            ) {
                (Some(a), Some(c)) => transformed(vec![a, mu.clone(), c]),
                _ => vanishes,
            }
        }
        SymmetryRule::PlethTranslateOuter { k, n } => {
            let nu = &indices[2];
            require(n >= 1, rule, "n >= 1")?;
            require(nu.len() <= n, rule, "length(nu) <= n")?;
            let (r, q) = outer_box_parameters(mu, n);
            let a = add_rectangle(lam, k, r as usize);
            require(a.is_some(), rule, "lambda + (k^r) is a partition")?;
            match (lam.len() as u64 <= r, add_rectangle(nu, q as i64 * k, n)) {
                (true, Some(c)) => transformed(vec![a.unwrap(), mu.clone(), c]),
                _ => vanishes,
            }
        }
        SymmetryRule::KfBox { k, n } => {
            require(lam.first() <= k, rule, "lambda_1 <= k")?;
            require(mu.len() <= n, rule, "length(mu) <= n")?;
            match (rect_complement(lam, k, n), rect_complement(mu, k, n)) {
                (Some(a), Some(b)) => transformed(vec![a, b]),
                _ => vanishes,
            }
        }
        SymmetryRule::KfTranslate { k, n } => {
            require(mu.len() <= n, rule, "length(mu) <= n")?;
            let a = add_rectangle(lam, k, n);
            require(a.is_some(), rule, "lambda + (k^n) is a partition")?;
            match (lam.len() <= n, add_rectangle(mu, k, n)) {
                (true, Some(b)) => transformed(vec![a.unwrap(), b]),
                _ => vanishes,
            }
        }
    };
    Ok(out)
}

/// Ranges for an exhaustive sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepBounds {
    /// Largest weight of the original instance: `|ν|` for LR and plethysm,
    /// `N` for Kronecker, `|λ|` for Kostka–Foulkes.
    pub max_weight: usize,
    /// Upper bounds for the box parameters `(l, m, n)`. Rules with fewer
    /// parameters use: plethysm inner `(m, n) = (.1, .2)`, plethysm outer
    /// `(l, n) = (.0, .2)`, Kostka–Foulkes `(k, n) = (.0, .2)`; translation
    /// rules bound their height by `.2` (and `l, m` by `.0, .1`).
    pub max_box: (u32, u32, u32),
    /// Translations range over `-max_shift..=max_shift`.
    pub max_shift: i64,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            max_weight: 6,
            max_box: (3, 3, 3),
            max_shift: 2,
        }
    }
}

/// One failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub rule: SymmetryRule,
    pub indices: Vec<Partition>,
    pub image: Option<Vec<Partition>>,
    pub value: String,
    pub image_value: String,
}

/// Summary of one rule's sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleReport {
    pub rule: RuleId,
    pub checked: usize,
    pub transformed: usize,
    pub vanishing: usize,
    /// Parameter/index combinations outside the rule's hypotheses.
    pub outside_hypotheses: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl RuleReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn shifts(b: &SweepBounds) -> impl Iterator<Item = i64> + Clone {
    -b.max_shift..=b.max_shift
}

fn all_upto(w: usize) -> Vec<Partition> {
    (0..=w).flat_map(all_partitions_of).collect()
}

fn triples_lr(max_weight: usize) -> Vec<Vec<Partition>> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        for nu in all_partitions_of(w) {
            for a in 0..=w {
                for lam in all_partitions_of(a) {
                    for mu in all_partitions_of(w - a) {
                        out.push(vec![lam.clone(), mu, nu.clone()]);
                    }
                }
            }
        }
    }
    out
}

fn triples_kron(max_weight: usize) -> Vec<Vec<Partition>> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        let parts = all_partitions_of(w);
        for a in &parts {
            for b in &parts {
                for c in &parts {
                    out.push(vec![a.clone(), b.clone(), c.clone()]);
                }
            }
        }
    }
    out
}

fn triples_pleth(max_weight: usize) -> Vec<Vec<Partition>> {
    let mut out = Vec::new();
    for lam in all_upto(max_weight) {
        for mu in all_upto(max_weight) {
            let w = lam.weight() * mu.weight();
            if w > max_weight {
                continue;
            }
            for nu in all_partitions_of(w) {
                out.push(vec![lam.clone(), mu.clone(), nu]);
            }
        }
    }
    out
}

fn pairs_kf(max_weight: usize) -> Vec<Vec<Partition>> {
    let mut out = Vec::new();
    for w in 0..=max_weight {
        let parts = all_partitions_of(w);
        for a in &parts {
            for b in &parts {
                out.push(vec![a.clone(), b.clone()]);
            }
        }
    }
    out
}

/// Every parameter choice of `rule` within `bounds`, in a fixed order.
pub fn rule_instances(rule: RuleId, b: &SweepBounds) -> Vec<SymmetryRule> {
    let (bl, bm, bn) = b.max_box;
    let mut out = Vec::new();
    match rule {
        RuleId::LrBox => {
            for l in 0..=bl {
                for m in 0..=bm {
                    for n in 0..=bn as usize {
                        out.push(SymmetryRule::LrBox { l, m, n });
                    }
                }
            }
        }
        RuleId::KronBox => {
            for l in 0..=bl {
                for m in 0..=bm {
                    for n in 0..=bn {
                        out.push(SymmetryRule::KronBox { l, m, n });
                    }
                }
            }
        }
        RuleId::KronTranslate => {
            for l in 0..=bl as usize {
                for m in 0..=bm as usize {
                    for k in shifts(b) {
                        out.push(SymmetryRule::KronTranslate { l, m, k });
                    }
                }
            }
        }
        RuleId::PlethBoxInner => {
            for m in 0..=bm {
                for n in 0..=bn as usize {
                    out.push(SymmetryRule::PlethBoxInner { m, n });
                }
            }
        }
        RuleId::PlethBoxOuter => {
            for l in 0..=bl {
                for n in 1..=bn as usize {
                    out.push(SymmetryRule::PlethBoxOuter { l, n });
                }
            }
        }
        RuleId::KfBox => {
            for k in 0..=bl {
                for n in 0..=bn as usize {
                    out.push(SymmetryRule::KfBox { k, n });
                }
            }
        }
        RuleId::LrTranslate | RuleId::PlethTranslateInner | RuleId::PlethTranslateOuter | RuleId::KfTranslate => {
            let lo = if rule == RuleId::PlethTranslateOuter { 1 } else { 0 };
            for n in lo..=bn as usize {
                for k in shifts(b) {
                    out.push(match rule {
                        RuleId::LrTranslate => SymmetryRule::LrTranslate { k, n },
                        RuleId::PlethTranslateInner => SymmetryRule::PlethTranslateInner { k, n },
                        RuleId::PlethTranslateOuter => SymmetryRule::PlethTranslateOuter { k, n },
                        _ => SymmetryRule::KfTranslate { k, n },
                    });
                }
            }
        }
    }
    out
}

fn index_tuples(family: Family, max_weight: usize) -> Vec<Vec<Partition>> {
    match family {
        Family::Lr => triples_lr(max_weight),
        Family::Kronecker => triples_kron(max_weight),
        Family::Plethysm => triples_pleth(max_weight),
        Family::KostkaFoulkes => pairs_kf(max_weight),
    }
}

enum Check {
    Outside,
    Passed { vanishing: bool },
    Failed(Counterexample),
}

fn check_instance(engine: &mut Engine, rule: &SymmetryRule, ix: &[Partition]) -> Result<Check> {
    let outcome = match apply_rule(rule, ix) {
        Ok(o) => o,
        Err(Error::PreconditionViolated { .. }) => return Ok(Check::Outside),
        Err(e) => return Err(e),
    };
    let family = rule.family();
    let value = engine.cached_value(family, ix)?;
    let (image, image_value) = match &outcome.verdict {
        Verdict::Transformed(img) => (Some(img.clone()), engine.cached_value(family, img)?),
        Verdict::Vanishes => (None, zero_of(family)),
    };
    engine.trim();
    if value == image_value {
        Ok(Check::Passed {
            vanishing: image.is_none(),
        })
    } else {
        Ok(Check::Failed(Counterexample {
            rule: *rule,
            indices: ix.to_vec(),
            image,
            value: value.to_string(),
            image_value: image_value.to_string(),
        }))
    }
}

fn zero_of(family: Family) -> CoefficientValue {
    match family {
        Family::KostkaFoulkes => CoefficientValue::Polynomial(Default::default()),
        _ => CoefficientValue::Integer(BigInt::zero()),
    }
}

/// Checks `rule` on every parameter choice and index tuple within
/// `bounds`: the coefficient must equal the image coefficient, or be zero
/// when the rule says it vanishes.
pub fn verify_rule(rule: RuleId, bounds: &SweepBounds) -> Result<RuleReport> {
    let params = rule_instances(rule, bounds);
    let tuples = index_tuples(rule.family(), bounds.max_weight);
    let work: Vec<(SymmetryRule, &Vec<Partition>)> =
        params.iter().flat_map(|p| tuples.iter().map(move |t| (*p, t))).collect();
    let results: Vec<Result<Check>> = work
        .par_iter()
        .map_init(Engine::new, |engine, (p, t)| check_instance(engine, p, t))
        .collect();
    let mut report = RuleReport {
        rule,
        checked: 0,
        transformed: 0,
        vanishing: 0,
        outside_hypotheses: 0,
        counterexamples: Vec::new(),
    };
    for r in results {
        match r? {
            Check::Outside => report.outside_hypotheses += 1,
            Check::Passed { vanishing } => {
                report.checked += 1;
                if vanishing {
                    report.vanishing += 1;
                } else {
                    report.transformed += 1;
                }
            }
            Check::Failed(c) => {
                report.checked += 1;
                if c.image.is_some() {
                    report.transformed += 1;
                } else {
                    report.vanishing += 1;
                }
                report.counterexamples.push(c);
            }
        }
    }
    Ok(report)
}

/// One step of a reduction chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum ReductionStep {
    /// Replace the listed arguments (0-based) by their conjugates.
    Conjugate { arguments: Vec<usize> },
    Complement { rule: SymmetryRule },
}

/// A candidate chain and the weight it would reach.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub conjugated: Vec<usize>,
    pub rule: SymmetryRule,
    /// Weight of the image, or `None` when the coefficient vanishes.
    pub weight: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionReport {
    pub family: Family,
    pub original: Vec<Partition>,
    pub chain: Vec<ReductionStep>,
    /// `None` when the chain proves the coefficient is zero.
    pub reduced: Option<Vec<Partition>>,
    pub weight_before: usize,
    pub weight_after: usize,
    pub candidates: Vec<Candidate>,
}

impl ReductionReport {
    pub fn is_identity(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn vanishes(&self) -> bool {
        self.reduced.is_none()
    }
}

fn conjugate_at(ix: &[Partition], which: &[usize]) -> Vec<Partition> {
    ix.iter()
        .enumerate()
        .map(|(i, p)| if which.contains(&i) { p.conjugate() } else { p.clone() })
        .collect()
}

fn plan(
    family: Family,
    original: Vec<Partition>,
    weight: usize,
    patterns: &[Vec<usize>],
    rule_for: impl Fn(&[Partition]) -> SymmetryRule,
) -> Result<ReductionReport> {
    let mut candidates = Vec::new();
    let mut best: Option<(usize, usize, Verdict)> = None;
    for (i, pat) in patterns.iter().enumerate() {
        let ix = conjugate_at(&original, pat);
        let rule = rule_for(&ix);
        let outcome = apply_rule(&rule, &ix)?;
        let w = match &outcome.verdict {
            Verdict::Transformed(img) => Some(image_weight(family, img)),
            Verdict::Vanishes => None,
        };
        candidates.push(Candidate {
            conjugated: pat.clone(),
            rule,
            weight: w,
        });
        let eff = w.unwrap_or(0);
        if eff < weight && best.as_ref().is_none_or(|(bw, _, _)| eff < *bw) {
            best = Some((eff, i, outcome.verdict));
        }
    }
    let (chain, reduced, weight_after) = match best {
        None => (Vec::new(), Some(original.clone()), weight),
        Some((w, i, verdict)) => {
            let mut chain = Vec::new();
            if !patterns[i].is_empty() {
                chain.push(ReductionStep::Conjugate {
                    arguments: patterns[i].clone(),
                });
            }
            chain.push(ReductionStep::Complement {
                rule: candidates[i].rule,
            });
            let reduced = match verdict {
                Verdict::Transformed(img) => Some(img),
                Verdict::Vanishes => None,
            };
            (chain, reduced, w)
        }
    };
    Ok(ReductionReport {
        family,
        original,
        chain,
        reduced,
        weight_before: weight,
        weight_after,
        candidates,
    })
}

fn image_weight(family: Family, ix: &[Partition]) -> usize {
    match family {
        Family::KostkaFoulkes => ix[0].weight(),
        _ => ix[2].weight(),
    }
}

/// Plans the cheapest Kronecker box complement: conjugate a pair of
/// arguments (or none), then complement in boxes of widths `α_1, β_1, γ_1`.
pub fn reduce_kronecker(lam: &Partition, mu: &Partition, nu: &Partition) -> Result<ReductionReport> {
    let n = lam.weight();
    if mu.weight() != n || nu.weight() != n {
        return Err(Error::WeightMismatch {
            left: n,
            right: if mu.weight() != n { mu.weight() } else { nu.weight() },
        });
    }
    let patterns = [vec![], vec![1, 2], vec![0, 2], vec![0, 1]];
    plan(
        Family::Kronecker,
        vec![lam.clone(), mu.clone(), nu.clone()],
        n,
        &patterns,
        |ix| SymmetryRule::KronBox {
            l: ix[0].first(),
            m: ix[1].first(),
            n: ix[2].first(),
        },
    )
}

/// Plans the cheapest plethysm inner complement, with or without the
/// conjugation `a_{λμ}^ν = a_{λμ'}^{ν'}` (`|μ|` even) or
/// `a_{λ'μ'}^{ν'}` (`|μ|` odd).
pub fn reduce_plethysm(lam: &Partition, mu: &Partition, nu: &Partition) -> Result<ReductionReport> {
    let w = lam.weight() * mu.weight();
    if nu.weight() != w {
        return Err(Error::WeightMismatch {
            left: w,
            right: nu.weight(),
        });
    }
    let conj = if mu.weight().is_multiple_of(2) { vec![1, 2] } else { vec![0, 1, 2] };
    plan(
        Family::Plethysm,
        vec![lam.clone(), mu.clone(), nu.clone()],
        w,
        &[vec![], conj],
        |ix| SymmetryRule::PlethBoxInner {
            m: ix[1].first(),
            n: ix[2].len().max(ix[1].len()),
        },
    )
}

/// Coefficient of the original tuple and of the reduced one (zero when the
/// chain vanishes), both by the main route.
pub fn execute_reduction(engine: &mut Engine, report: &ReductionReport) -> Result<(CoefficientValue, CoefficientValue)> {
    let family = report.family;
    let main = |engine: &mut Engine, ix: &[Partition]| -> Result<CoefficientValue> {
        Ok(match family {
            Family::Kronecker => CoefficientValue::Integer(engine.kronecker(&ix[0], &ix[1], &ix[2])),
            Family::Plethysm => CoefficientValue::Integer(engine.plethysm(&ix[0], &ix[1], &ix[2])?),
            Family::Lr => CoefficientValue::Integer(engine.lr(&ix[0], &ix[1], &ix[2])),
            Family::KostkaFoulkes => CoefficientValue::Polynomial(engine.kostka_foulkes(&ix[0], &ix[1])),
        })
    };
    let before = main(engine, &report.original)?;
    let after = match &report.reduced {
        Some(ix) => main(engine, ix)?,
        None => zero_of(family),
    };
    Ok((before, after))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn transformed(rule: SymmetryRule, ix: &[Partition]) -> Vec<Partition> {
        match apply_rule(&rule, ix).unwrap().verdict {
            Verdict::Transformed(v) => v,
            Verdict::Vanishes => panic!("{rule} vanished on {ix:?}"),
        }
    }

    #[test]
    fn rule_examples() {
        let t = p(&[2, 2, 2]);
        assert_eq!(
            transformed(SymmetryRule::KronBox { l: 2, m: 2, n: 2 }, &[t.clone(), t.clone(), t.clone()]),
            vec![p(&[2]), p(&[2]), p(&[2])]
        );
        assert_eq!(
            transformed(SymmetryRule::LrBox { l: 1, m: 1, n: 3 }, &[p(&[1]), p(&[1]), p(&[1, 1])]),
            vec![p(&[1, 1]), p(&[1, 1]), p(&[2, 1, 1])]
        );
        assert_eq!(
            transformed(SymmetryRule::PlethBoxInner { m: 1, n: 3 }, &[p(&[2]), p(&[1]), p(&[2])]),
            vec![p(&[2]), p(&[1, 1]), p(&[2, 2])]
        );
        assert_eq!(
            transformed(SymmetryRule::KfBox { k: 3, n: 2 }, &[p(&[2]), p(&[1, 1])]),
            vec![p(&[3, 1]), p(&[2, 2])]
        );
    }

    #[test]
    fn vanishing_and_preconditions() {
        // μ = (1,1,1) does not fit in (1^{ln}) with l = 3, m = n = 1 ... it does;
        // a four-row μ does not.
        let rule = SymmetryRule::KronBox { l: 3, m: 1, n: 1 };
        let o = apply_rule(&rule, &[p(&[3, 1]), p(&[1, 1, 1, 1]), p(&[1, 1, 1, 1])]).unwrap();
        assert_eq!(o.verdict, Verdict::Vanishes);
        assert!(Engine::new().kronecker(&p(&[3, 1]), &p(&[1, 1, 1, 1]), &p(&[1, 1, 1, 1])).is_zero());

        let err = apply_rule(&SymmetryRule::LrBox { l: 1, m: 1, n: 1 }, &[p(&[1]), p(&[1]), p(&[1, 1])]);
        assert!(matches!(err, Err(Error::PreconditionViolated { .. })));
        let err = apply_rule(&SymmetryRule::KfBox { k: 1, n: 1 }, &[p(&[1])]);
        assert_eq!(err, Err(Error::IndexCount { expected: 2, found: 1 }));
    }

    #[test]
    fn rule_ids_round_trip() {
        for id in RuleId::ALL {
            assert_eq!(id.name().parse::<RuleId>().unwrap(), id);
        }
        assert!("lr-boxx".parse::<RuleId>().is_err());
    }

    #[test]
    fn box_rules_are_involutions() {
        let bounds = SweepBounds {
            max_weight: 4,
            ..Default::default()
        };
        for id in [RuleId::LrBox, RuleId::KronBox, RuleId::PlethBoxInner, RuleId::PlethBoxOuter, RuleId::KfBox] {
            let tuples = index_tuples(id.family(), bounds.max_weight);
            for rule in rule_instances(id, &bounds) {
                for t in &tuples {
                    if let Ok(SymmetryOutcome {
                        verdict: Verdict::Transformed(img),
                        ..
                    }) = apply_rule(&rule, t)
                    {
                        let back = apply_rule(&rule, &img).unwrap();
                        assert_eq!(back.verdict, Verdict::Transformed(t.clone()), "{rule} {t:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn translations_compose_additively() {
        let tuples_lr = triples_lr(4);
        let tuples_kf = pairs_kf(4);
        for n in 0..=3usize {
            for k1 in -2..=2i64 {
                for k2 in -2..=2i64 {
                    let mk = |k| [
                        (SymmetryRule::LrTranslate { k, n }, &tuples_lr),
                        (SymmetryRule::KfTranslate { k, n }, &tuples_kf),
                    ];
                    for ((r1, ts), ((r2, _), (r12, _))) in mk(k1).into_iter().zip(mk(k2).into_iter().zip(mk(k1 + k2))) {
                        for t in ts.iter() {
                            let Ok(SymmetryOutcome { verdict: Verdict::Transformed(a), .. }) = apply_rule(&r1, t) else {
                                continue;
                            };
                            let Ok(SymmetryOutcome { verdict: Verdict::Transformed(b), .. }) = apply_rule(&r2, &a) else {
                                continue;
                            };
                            assert_eq!(
                                apply_rule(&r12, t).unwrap().verdict,
                                Verdict::Transformed(b),
                                "{r1} then {r2} on {t:?}"
                            );
                        }
                    }
                }
            }
        }
        // Kronecker translation with its own parameters
        let t = vec![p(&[2, 1]), p(&[2, 1]), p(&[1, 1, 1])];
        let r = |k| SymmetryRule::KronTranslate { l: 2, m: 2, k };
        let once = transformed(r(1), &t);
        assert_eq!(transformed(r(1), &once), transformed(r(2), &t));
    }

    #[test]
    fn outer_box_integrality() {
        for n in 1..=4 {
            for mu in all_upto(6) {
                let r = count_ssyt(&mu, n);
                let num = r * num_bigint::BigUint::from(mu.weight());
                assert!((num % n as u32).is_zero(), "{mu} n={n}");
            }
        }
    }

    #[test]
    fn small_sweeps_pass() {
        let bounds = SweepBounds {
            max_weight: 4,
            max_box: (2, 2, 2),
            max_shift: 1,
        };
        for id in RuleId::ALL {
            let report = verify_rule(id, &bounds).unwrap();
            assert!(report.passed(), "{id}: {:?}", report.counterexamples);
            assert!(report.checked > 0, "{id}");
        }
    }

    #[test]
    fn kronecker_reduction_examples() {
        let t = p(&[2, 2, 2]);
        let r = reduce_kronecker(&t, &t, &t).unwrap();
        assert_eq!(r.reduced, Some(vec![p(&[2]), p(&[2]), p(&[2])]));
        assert_eq!((r.weight_before, r.weight_after), (6, 2));
        let ws: Vec<_> = r.candidates.iter().map(|c| c.weight).collect();
        assert_eq!(ws, vec![Some(2), Some(12), Some(12), Some(12)]);

        let f = p(&[4, 4]);
        let r = reduce_kronecker(&f, &f, &f).unwrap();
        assert!(r.is_identity());
        assert_eq!(r.candidates[0].weight, Some(56));

        let one = p(&[1]);
        let r = reduce_kronecker(&one, &one, &one).unwrap();
        assert_eq!(r.reduced, Some(vec![p(&[]), p(&[]), p(&[])]));
        assert_eq!(r.weight_after, 0);

        assert!(matches!(reduce_kronecker(&one, &t, &t), Err(Error::WeightMismatch { .. })));
    }

    #[test]
    fn plethysm_reduction_examples() {
        let r = reduce_plethysm(&p(&[1]), &p(&[3, 3]), &p(&[3, 3])).unwrap();
        assert_eq!(r.weight_after, 0);
        assert_eq!(r.reduced, Some(vec![p(&[1]), p(&[]), p(&[])]));

        let r = reduce_plethysm(&p(&[2]), &p(&[1]), &p(&[2])).unwrap();
        assert_eq!(r.weight_after, 0);

        let r = reduce_plethysm(&p(&[2]), &p(&[2]), &p(&[3, 1])).unwrap();
        assert_eq!(r.candidates[0].weight, Some(4));
        assert_eq!(r.candidates[1].weight, Some(2));
        assert_eq!(r.reduced, Some(vec![p(&[2]), p(&[1]), p(&[1, 1])]));
        let (a, b) = execute_reduction(&mut Engine::new(), &r).unwrap();
        assert_eq!(a, b);
        assert!(a.is_zero());
    }

    #[test]
    fn reductions_preserve_values() {
        let mut e = Engine::new();
        for t in triples_kron(5) {
            let r = reduce_kronecker(&t[0], &t[1], &t[2]).unwrap();
            assert!(r.weight_after <= r.weight_before);
            let (a, b) = execute_reduction(&mut e, &r).unwrap();
            assert_eq!(a, b, "{t:?}");
        }
        for t in triples_pleth(6) {
            let r = reduce_plethysm(&t[0], &t[1], &t[2]).unwrap();
            let (a, b) = execute_reduction(&mut e, &r).unwrap();
            assert_eq!(a, b, "{t:?}");
        }
    }

    #[test]
    fn rectangular_kronecker_coefficients() {
        let mut e = Engine::new();
        let rect = |k| Partition::rectangle(2, k);
        for k in 0..=4 {
            let a = e.kronecker(&rect(k), &rect(k), &rect(k));
            let b = e.kronecker(&rect(4 - k), &rect(4 - k), &rect(4 - k));
            assert_eq!(a, b, "k={k}");
        }
        for k in 5..=6 {
            assert!(e.kronecker(&rect(k), &rect(k), &rect(k)).is_zero());
        }
    }

    #[test]
    fn report_serializes() {
        let t = p(&[2, 2, 2]);
        let r = reduce_kronecker(&t, &t, &t).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"family\":\"kronecker\""));
        let back: ReductionReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
