//! Self-checks behind `qtdiag verify`.

use std::collections::BTreeSet;

use clap::ValueEnum;
use num_traits::One;
use qtdiag_core::{
    apply_e, apply_f_column, apply_f_tableau, basis_for, count_partitions, delta_n, enumerate_framed,
    enumerate_partitions, partition_to_tableau, predicted_leading, tableau_to_partition, ColumnSpec, EConvention,
    FramedTableau, Strategy,
};
use qtdiag_oracle::{diff_e, diff_f_column, diff_f_tableau, expand_alternant, to_delta_basis};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Determinant and injective evaluations of F_t agree.
    #[value(name = "thmFop")]
    ThmFop,
    /// Basis elements have the predicted unit leading diagram.
    #[value(name = "leading")]
    Leading,
    /// Partition ↔ framed tableau round trips and insert/remove inverses.
    #[value(name = "bijection")]
    Bijection,
    /// Operators agree with explicit differentiation of polynomials.
    #[value(name = "oracle")]
    Oracle,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::ThmFop => "thmFop",
            Suite::Leading => "leading",
            Suite::Bijection => "bijection",
            Suite::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

struct Tally {
    cases: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some(what());
        }
    }

    fn finish(self, summary: String) -> SuiteResult {
        match self.first_failure {
            None => SuiteResult {
                passed: true,
                cases: self.cases,
                detail: summary,
            },
            Some(f) => SuiteResult {
                passed: false,
                cases: self.cases,
                detail: format!("first failure: {f}"),
            },
        }
    }
}

pub fn run_suite(suite: Suite, max_n: usize) -> SuiteResult {
    match suite {
        Suite::ThmFop => strategies_agree(max_n),
        Suite::Leading => leading_terms(max_n),
        Suite::Bijection => bijection(2 * max_n as u32),
        Suite::Oracle => oracle(max_n.min(4)),
    }
}

/// Strictly decreasing columns with at most `max_len` entries and weight at most `max_weight`.
pub fn decreasing_columns(max_weight: u32, max_len: usize) -> Vec<Vec<u32>> {
    fn extend(prefix: &mut Vec<u32>, remaining: u32, max_len: usize, out: &mut Vec<Vec<u32>>) {
        let cap = prefix.last().map_or(remaining, |&last| (last - 1).min(remaining));
        for next in 1..=cap {
            prefix.push(next);
            out.push(prefix.clone());
            if prefix.len() < max_len {
                extend(prefix, remaining - next, max_len, out);
            }
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if max_len > 0 {
        extend(&mut Vec::new(), max_weight, max_len, &mut out);
    }
    out.sort();
    out
}

fn strategies_agree(max_n: usize) -> SuiteResult {
    let mut tally = Tally::new();
    for n in 1..=max_n {
        let delta = delta_n(n);
        for t in decreasing_columns(8, 3) {
            let spec = ColumnSpec::new(t.clone()).expect("generated columns are decreasing");
            for conv in [EConvention::Formal, EConvention::Analytic] {
                let det = apply_f_column(&spec, &delta, conv, Strategy::Determinant);
                let inj = apply_f_column(&spec, &delta, conv, Strategy::Injective);
                tally.check(det == inj, || format!("n={n} t={t:?} {conv}"));
            }
        }
    }
    tally.finish(format!("n ≤ {max_n}, |t| ≤ 8, at most 3 entries, both conventions"))
}

fn leading_terms(max_n: usize) -> SuiteResult {
    let mut tally = Tally::new();
    for n in 1..=max_n {
        for k in 1..n as u32 {
            for l in 1..=k {
                let elements = match basis_for(n, k, l) {
                    Ok(e) => e,
                    Err(e) => {
                        tally.check(false, || format!("n={n} k={k} l={l}: {e}"));
                        continue;
                    }
                };
                let mut seen = BTreeSet::new();
                for e in &elements {
                    let predicted = predicted_leading(&e.tableau, n);
                    let unit = e.alternant.leading().is_some_and(|(_, c)| c.is_one());
                    tally.check(predicted.as_ref() == Some(&e.leading) && unit, || {
                        format!("n={n} lambda={} leading={}", e.lambda, e.leading)
                    });
                    seen.insert(e.leading.clone());
                }
                tally.check(seen.len() as u64 == count_partitions(k, l), || {
                    format!("n={n} k={k} l={l}: leading diagrams not distinct")
                });
            }
        }
    }
    tally.finish(format!("all (n,k,l) with k < n ≤ {max_n}"))
}

fn bijection(max_k: u32) -> SuiteResult {
    let mut tally = Tally::new();
    for k in 0..=max_k {
        for l in 0..=k {
            for lambda in enumerate_partitions(k, l) {
                let t = match partition_to_tableau(&lambda) {
                    Ok(t) => t,
                    Err(e) => {
                        tally.check(false, || format!("lambda={lambda}: {e}"));
                        continue;
                    }
                };
                let back = tableau_to_partition(&t);
                tally.check(back.as_ref() == Ok(&lambda), || format!("lambda={lambda} round trip"));
                tally.check(t.weight() == k && t.cell_count() == l as usize, || {
                    format!("lambda={lambda} weight or cell count")
                });
                if let Ok((x, rest)) = t.remove() {
                    let again = rest.insert(x);
                    tally.check(again.as_ref() == Ok(&t), || format!("lambda={lambda} remove then insert"));
                }
            }
        }
    }
    tally.finish(format!("all partitions of weight ≤ {max_k}"))
}

fn oracle(max_n: usize) -> SuiteResult {
    let mut tally = Tally::new();
    let conv = EConvention::Analytic;
    for n in 1..=max_n {
        let delta = delta_n(n);
        let poly = expand_alternant(&delta);
        for a in 1..=4 {
            let rhs = to_delta_basis(&diff_e(a, &poly));
            tally.check(rhs.as_ref().ok() == Some(&apply_e(a, &delta, conv)), || format!("E_{a} n={n}"));
        }
        for t in decreasing_columns(4, 4) {
            let spec = ColumnSpec::new(t.clone()).expect("generated columns are decreasing");
            let lhs = apply_f_column(&spec, &delta, conv, Strategy::Injective);
            let rhs = diff_f_column(&t, &poly).ok().and_then(|p| to_delta_basis(&p).ok());
            tally.check(rhs.as_ref() == Some(&lhs), || format!("F_{t:?} n={n}"));
        }
        for k in 1..=4 {
            for l in 1..=k {
                for tab in enumerate_framed(k, l) {
                    let tab: FramedTableau = match tab {
                        Ok(t) => t,
                        Err(e) => {
                            tally.check(false, || e.to_string());
                            continue;
                        }
                    };
                    let lhs = apply_f_tableau(&tab, &delta, conv).ok();
                    let rhs = diff_f_tableau(&tab, &poly).ok().and_then(|p| to_delta_basis(&p).ok());
                    tally.check(lhs.is_some() && lhs == rhs, || format!("F_T n={n} T={:?}", tab.rows()));
                }
            }
        }
    }
    tally.finish(format!("n ≤ {max_n}: E_a, F_t and F_T for weights ≤ 4"))
}
