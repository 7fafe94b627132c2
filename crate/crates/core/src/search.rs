//! Exhaustive censuses of weighted blowups.
//!
//! Candidates are the nondecreasing primitive weight vectors of a given
//! index, one per permutation class. Work is split into blocks keyed by
//! `(V, n_1)`; blocks are independent and their results are concatenated in
//! key order, so the output does not depend on the number of workers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::classifier::{classify, is_canonical_fast, is_terminal_fast};
use crate::error::{Error, Result};
use crate::exactgeom::{check_epsilon, WeightVector};
use crate::rat::Rat;

/// Default cap on the projected number of candidates in one census.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// All nondecreasing `(n_1 <= ... <= n_d)` with `n_i >= 1`,
/// `sum = V + 1` and `gcd = 1`, in lexicographic order.
pub fn enumerate_blowups(d: usize, v: u64) -> Vec<WeightVector> {
    let mut out = Vec::new();
    if d < 2 || v < 1 {
        return out;
    }
    for first in 1..=(v + 1) / d as u64 {
        enumerate_block(d, v, first, |n| out.push(n));
    }
    out
}

/// The part of [`enumerate_blowups`] whose first weight is `first`.
pub fn enumerate_block(d: usize, v: u64, first: u64, mut emit: impl FnMut(WeightVector)) {
    let total = v + 1;
    if d < 2 || first == 0 || first * d as u64 > total {
        return;
    }
    let mut prefix = Vec::with_capacity(d);
    prefix.push(first);
    fill(d, total - first, first, first, &mut prefix, &mut emit);
}

fn fill(d: usize, remaining: u64, min: u64, g: u64, prefix: &mut Vec<u64>, emit: &mut impl FnMut(WeightVector)) {
    let slots = (d - prefix.len()) as u64;
    if slots == 1 {
        if remaining >= min && g.gcd(&remaining) == 1 {
            prefix.push(remaining);
            emit(WeightVector::new(prefix.clone()).expect("primitive by construction"));
            prefix.pop();
        }
        return;
    }
    let mut next = min;
    while next * slots <= remaining {
        prefix.push(next);
        fill(d, remaining - next, next, g.gcd(&next), prefix, emit);
        prefix.pop();
        next += 1;
    }
}

/// Number of partitions of `total` into exactly `d` positive parts, which
/// bounds the candidates of index `total - 1` (imprimitive ones included).
pub fn partitions_into(total: u64, d: usize) -> u128 {
    let total = total as usize;
    if d == 0 || d > total {
        return u128::from(d == 0 && total == 0);
    }
    // table[n][k] for n <= total, k <= d.
    let mut table = vec![vec![0u128; d + 1]; total + 1];
    table[0][0] = 1;
    for n in 1..=total {
        for k in 1..=d.min(n) {
            table[n][k] = table[n - 1][k - 1].saturating_add(table[n - k][k]);
        }
    }
    table[total][d]
}

pub fn projected_candidates(d: usize, range: &RangeInclusive<u64>) -> u128 {
    range
        .clone()
        .fold(0u128, |acc, v| acc.saturating_add(partitions_into(v + 1, d)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Terminal (`eps = 1`), via the residue fast path.
    Terminal,
    /// Canonical (`eps = 1`), via the residue fast path.
    Canonical,
    /// eps-log terminal, via the geometric classifier.
    EpsLt,
    /// eps-log canonical, via the geometric classifier.
    EpsLc,
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Verdict> {
        match s {
            "terminal" => Ok(Verdict::Terminal),
            "canonical" => Ok(Verdict::Canonical),
            "eps-lt" => Ok(Verdict::EpsLt),
            "eps-lc" => Ok(Verdict::EpsLc),
            other => Err(Error::InvalidQuery(format!("unknown verdict {other:?}"))),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Terminal => "terminal",
            Verdict::Canonical => "canonical",
            Verdict::EpsLt => "eps-lt",
            Verdict::EpsLc => "eps-lc",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusQuery {
    pub dim: usize,
    pub v_range: RangeInclusive<u64>,
    pub eps: Rat,
    /// Keep only hits with `n_min >= t`.
    pub min_weight: Option<u64>,
    pub verdict: Verdict,
}

impl CensusQuery {
    pub fn terminal(dim: usize, v_range: RangeInclusive<u64>) -> CensusQuery {
        CensusQuery { dim, v_range, eps: Rat::ONE, min_weight: None, verdict: Verdict::Terminal }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim < 2 {
            return Err(Error::DimensionTooSmall(self.dim));
        }
        if self.v_range.is_empty() || *self.v_range.start() < 1 {
            return Err(Error::InvalidQuery(format!(
                "index range {}..={} must be nonempty and start at 1 or above",
                self.v_range.start(),
                self.v_range.end()
            )));
        }
        if self.min_weight == Some(0) {
            return Err(Error::InvalidQuery("minimum weight filter must be at least 1".into()));
        }
        check_epsilon(&self.eps)?;
        if matches!(self.verdict, Verdict::Terminal | Verdict::Canonical) && self.eps != Rat::ONE {
            return Err(Error::InvalidQuery(format!(
                "verdict {} is defined at epsilon 1, got {}",
                self.verdict, self.eps
            )));
        }
        Ok(())
    }

    fn passes(&self, n: &WeightVector) -> Result<bool> {
        match self.verdict {
            Verdict::Terminal => is_terminal_fast(n),
            Verdict::Canonical => is_canonical_fast(n),
            Verdict::EpsLt => Ok(classify(n, self.eps)?.eps_log_terminal),
            Verdict::EpsLc => Ok(classify(n, self.eps)?.eps_log_canonical),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusOptions {
    /// Worker count; `0` means the available parallelism and `1` runs on the
    /// calling thread without a pool.
    pub threads: usize,
    pub budget: u128,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { threads: 0, budget: DEFAULT_BUDGET }
    }
}

/// Counts keyed by smallest weight.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Histogram {
    pub counts: BTreeMap<u64, u64>,
    pub total: u64,
}

impl Histogram {
    pub fn add(&mut self, n_min: u64) {
        *self.counts.entry(n_min).or_insert(0) += 1;
        self.total += 1;
    }

    pub fn merge(&mut self, other: &Histogram) {
        for (&k, &c) in &other.counts {
            *self.counts.entry(k).or_insert(0) += c;
        }
        self.total += other.total;
    }

    pub fn get(&self, n_min: u64) -> u64 {
        self.counts.get(&n_min).copied().unwrap_or(0)
    }

    pub fn max_key(&self) -> Option<u64> {
        self.counts.keys().next_back().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hit {
    #[serde(rename = "V")]
    pub v: u64,
    pub weights: Vec<u64>,
    pub n_min: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub histogram: Histogram,
    pub hits: Vec<Hit>,
    pub candidates: u64,
}

/// Classify every candidate in the query range and aggregate `n_min`.
pub fn run_census(query: &CensusQuery, options: &CensusOptions) -> Result<CensusReport> {
    query.validate()?;
    let projected = projected_candidates(query.dim, &query.v_range);
    if projected > options.budget {
        return Err(Error::BudgetExceeded { projected, budget: options.budget });
    }
    let d = query.dim as u64;
    let blocks: Vec<(u64, u64)> = query
        .v_range
        .clone()
        .flat_map(|v| (1..=(v + 1) / d).map(move |first| (v, first)))
        .collect();

    let partials: Vec<Result<CensusReport>> = if options.threads == 1 {
        blocks.iter().map(|&(v, first)| census_block(query, v, first)).collect()
    } else {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if options.threads > 0 {
            builder = builder.num_threads(options.threads);
        }
        let pool = builder
            .build()
            .map_err(|e| Error::InvalidQuery(format!("cannot start worker pool: {e}")))?;
        pool.install(|| {
            blocks
                .par_iter()
                .map(|&(v, first)| census_block(query, v, first))
                .collect()
        })
    };

    let mut report = CensusReport { histogram: Histogram::default(), hits: Vec::new(), candidates: 0 };
    for part in partials {
        let part = part?;
        report.histogram.merge(&part.histogram);
        report.hits.extend(part.hits);
        report.candidates += part.candidates;
    }
    Ok(report)
}

fn census_block(query: &CensusQuery, v: u64, first: u64) -> Result<CensusReport> {
    let mut report = CensusReport { histogram: Histogram::default(), hits: Vec::new(), candidates: 0 };
    let mut failure = None;
    enumerate_block(query.dim, v, first, |n| {
        if failure.is_some() {
            return;
        }
        report.candidates += 1;
        match query.passes(&n) {
            Ok(true) => {
                let n_min = n.n_min();
                report.histogram.add(n_min);
                if query.min_weight.is_none_or(|t| n_min >= t) {
                    report.hits.push(Hit { v, n_min, weights: n.weights().to_vec() });
                }
            }
            Ok(false) => {}
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(report),
    }
}

/// A weight template with exactly one free slot, e.g. `(6, 10, 15, _)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyTemplate {
    fixed: Vec<Option<u64>>,
    slot: usize,
}

impl FamilyTemplate {
    pub fn new(fixed: Vec<Option<u64>>) -> Result<FamilyTemplate> {
        let slots: Vec<usize> = fixed.iter().enumerate().filter(|(_, w)| w.is_none()).map(|(i, _)| i).collect();
        if slots.len() != 1 {
            return Err(Error::InvalidQuery(format!(
                "template needs exactly one free slot, found {}",
                slots.len()
            )));
        }
        if fixed.len() < 2 {
            return Err(Error::DimensionTooSmall(fixed.len()));
        }
        if fixed.contains(&Some(0)) {
            return Err(Error::ZeroWeight(fixed.iter().map(|w| w.unwrap_or(0)).collect()));
        }
        Ok(FamilyTemplate { slot: slots[0], fixed })
    }

    /// Parse `6,10,15,_` (any of `_`, `?` or `x` marks the slot).
    pub fn parse(s: &str) -> Result<FamilyTemplate> {
        let fixed = s
            .split(',')
            .map(|t| match t.trim() {
                "_" | "?" | "x" => Ok(None),
                t => t
                    .parse::<u64>()
                    .map(Some)
                    .map_err(|_| Error::InvalidQuery(format!("bad template entry {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        FamilyTemplate::new(fixed)
    }

    pub fn fill(&self, value: u64) -> Vec<u64> {
        self.fixed.iter().map(|w| w.unwrap_or(value)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum FamilyVerdict {
    Imprimitive,
    Classified { eps_log_terminal: bool, eps_log_canonical: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyEntry {
    pub value: u64,
    pub weights: Vec<u64>,
    pub n_min: u64,
    #[serde(flatten)]
    pub verdict: FamilyVerdict,
}

impl FamilyEntry {
    pub fn is_terminal(&self) -> bool {
        matches!(self.verdict, FamilyVerdict::Classified { eps_log_terminal: true, .. })
    }
}

/// Classify every member of a one-slot family. Imprimitive members are
/// flagged, not fatal.
pub fn verify_family(template: &FamilyTemplate, values: RangeInclusive<u64>, eps: Rat) -> Result<Vec<FamilyEntry>> {
    check_epsilon(&eps)?;
    if *values.start() == 0 {
        return Err(Error::ZeroWeight(template.fill(0)));
    }
    values
        .map(|value| {
            let weights = template.fill(value);
            let n_min = weights.iter().copied().min().unwrap_or(0);
            let verdict = match WeightVector::new(weights.clone()) {
                Ok(n) => {
                    let c = classify(&n, eps)?;
                    FamilyVerdict::Classified {
                        eps_log_terminal: c.eps_log_terminal,
                        eps_log_canonical: c.eps_log_canonical,
                    }
                }
                Err(Error::NotPrimitive(_)) => FamilyVerdict::Imprimitive,
                Err(e) => return Err(e),
            };
            Ok(FamilyEntry { value, weights, n_min, verdict })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weights(v: &[WeightVector]) -> Vec<Vec<u64>> {
        v.iter().map(|n| n.weights().to_vec()).collect()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(weights(&enumerate_blowups(3, 5)), vec![vec![1, 1, 4], vec![1, 2, 3]]);
        assert_eq!(weights(&enumerate_blowups(2, 1)), vec![vec![1, 1]]);
        assert!(weights(&enumerate_blowups(4, 37)).contains(&vec![6, 7, 10, 15]));
        assert!(enumerate_blowups(4, 2).is_empty());
    }

    /// Naive nested loops over all nondecreasing tuples.
    fn naive_count(d: usize, v: u64) -> usize {
        fn go(d: usize, left: u64, min: u64, acc: &mut Vec<u64>, count: &mut usize) {
            if acc.len() == d {
                if left == 0 && acc.iter().fold(0, |g: u64, &w| g.gcd(&w)) == 1 {
                    *count += 1;
                }
                return;
            }
            for w in min..=left {
                acc.push(w);
                go(d, left - w, w, acc, count);
                acc.pop();
            }
        }
        let mut count = 0;
        go(d, v + 1, 1, &mut Vec::new(), &mut count);
        count
    }

    #[test]
    fn enumeration_is_complete_and_ordered() {
        for d in 2..=5 {
            for v in 1..=30 {
                let got = enumerate_blowups(d, v);
                assert_eq!(got.len(), naive_count(d, v), "d={d} V={v}");
                assert!(got.windows(2).all(|w| w[0].weights() < w[1].weights()));
                assert!(got.iter().all(|n| n.index() == v && n.weights().windows(2).all(|p| p[0] <= p[1])));
            }
        }
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_into(6, 3), 3);
        assert_eq!(partitions_into(2, 2), 1);
        assert_eq!(partitions_into(3, 4), 0);
        assert_eq!(partitions_into(10, 4), 9);
    }

    #[test]
    fn census_rejects_invalid_queries() {
        let mut q = CensusQuery::terminal(3, 1..=10);
        q.min_weight = Some(0);
        assert!(matches!(q.validate(), Err(Error::InvalidQuery(_))));
        #[allow(clippy::reversed_empty_ranges)]
        let q = CensusQuery::terminal(3, 5..=4);
        assert!(q.validate().is_err());
        let mut q = CensusQuery::terminal(3, 1..=10);
        q.eps = Rat::new(1, 2).unwrap();
        assert!(q.validate().is_err());
        q.verdict = Verdict::EpsLt;
        assert!(q.validate().is_ok());
    }

    #[test]
    fn census_budget_guard() {
        let q = CensusQuery::terminal(4, 1..=100);
        let opts = CensusOptions { threads: 1, budget: 1000 };
        match run_census(&q, &opts) {
            Err(Error::BudgetExceeded { projected, budget }) => {
                assert_eq!(budget, 1000);
                assert!(projected > 1000);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn census_small_dimension_three() {
        let q = CensusQuery::terminal(3, 1..=12);
        let report = run_census(&q, &CensusOptions { threads: 1, ..Default::default() }).unwrap();
        assert!(report.hits.iter().all(|h| h.weights[0] == 1 && h.weights[1].gcd(&h.weights[2]) == 1));
        assert_eq!(report.histogram.get(1), report.histogram.total);
        let v12: Vec<_> = report.hits.iter().filter(|h| h.v == 12).map(|h| h.weights.clone()).collect();
        assert_eq!(v12, vec![vec![1, 1, 11], vec![1, 5, 7]]);
    }

    #[test]
    fn min_weight_filter_only_trims_hits() {
        let mut q = CensusQuery::terminal(4, 1..=30);
        let all = run_census(&q, &CensusOptions::default()).unwrap();
        q.min_weight = Some(2);
        let filtered = run_census(&q, &CensusOptions::default()).unwrap();
        assert_eq!(all.histogram, filtered.histogram);
        assert_eq!(filtered.hits.len() as u64, all.histogram.total - all.histogram.get(1));
    }

    #[test]
    fn family_template() {
        let t = FamilyTemplate::parse("6,10,15,_").unwrap();
        assert_eq!(t.fill(7), vec![6, 10, 15, 7]);
        assert!(FamilyTemplate::parse("6,10,15").is_err());
        assert!(FamilyTemplate::parse("_,_,1").is_err());

        let entries = verify_family(&t, 1..=12, Rat::ONE).unwrap();
        let e7 = &entries[6];
        assert_eq!((e7.value, e7.n_min), (7, 6));
        assert!(e7.is_terminal());
        // 6, 10, 15 are pairwise non-coprime but jointly primitive, so every
        // value gives a primitive vector.
        assert!(entries.iter().all(|e| e.verdict != FamilyVerdict::Imprimitive));

        let t = FamilyTemplate::parse("2,4,_").unwrap();
        let entries = verify_family(&t, 1..=4, Rat::ONE).unwrap();
        assert_eq!(entries[1].verdict, FamilyVerdict::Imprimitive);
        assert_eq!(entries[3].verdict, FamilyVerdict::Imprimitive);
    }
}
