//! Verification campaigns: the fast solver against an oracle over many triples.
//!
//! Random triples come from ChaCha8 seeded with the campaign seed. Each draw
//! takes three values uniformly from `[lo, hi]`, sorts them and is rejected
//! unless they are strictly increasing and pairwise coprime.

use std::collections::BTreeMap;
use std::fmt::Write;

use frobenius_core::frobenius::{solve, Triple};
use frobenius_core::oracles::{brauer_shockley_frobenius, sieve_frobenius};
use frobenius_core::{CaseTag, Error, FrobeniusSolution, Result};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::trace::format_trace;

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub struct TripleSampler {
    rng: ChaCha8Rng,
    lo: u128,
    hi: u128,
}

impl TripleSampler {
    /// Samples from `[lo, hi]`; needs `2 <= lo` and room for three values.
    pub fn new(seed: u64, lo: u128, hi: u128) -> Self {
        assert!(lo >= 2 && hi >= lo + 2, "empty sampling range [{lo}, {hi}]");
        TripleSampler { rng: ChaCha8Rng::seed_from_u64(seed), lo, hi }
    }
}

impl Iterator for TripleSampler {
    type Item = [u128; 3];

    fn next(&mut self) -> Option<[u128; 3]> {
        loop {
            let mut v = [0u128; 3];
            for x in &mut v {
                *x = self.rng.gen_range(self.lo..=self.hi);
            }
            v.sort_unstable();
            if v[0] < v[1] && v[1] < v[2] && gcd(v[0], v[1]) == 1 && gcd(v[0], v[2]) == 1 && gcd(v[1], v[2]) == 1 {
                return Some(v);
            }
        }
    }
}

/// Every sorted pairwise-coprime triple with `a3 <= max`.
pub fn exhaustive_triples(max: i64) -> impl Iterator<Item = Triple<i64>> {
    (2..=max).flat_map(move |a3| {
        (2..a3).flat_map(move |a2| (2..a2).filter_map(move |a1| Triple::new(a1, a2, a3).ok()))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub triple: [i128; 3],
    pub fast: std::result::Result<i128, String>,
    pub oracle: std::result::Result<i128, String>,
    pub trace: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub checked: u64,
    pub mismatches: Vec<Mismatch>,
    /// Triples whose dispatch reached the `PSI_DEC_*` closed forms.
    pub ff33_hits: Vec<[i128; 3]>,
    pub tags: BTreeMap<CaseTag, u64>,
    pub max_levels: usize,
    /// Largest `levels / log2(a1)` seen.
    pub max_level_ratio: f64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn record(&mut self, t: &Triple<i128>, fast: Result<FrobeniusSolution<i128>>, oracle: Result<i128>) {
        self.checked += 1;
        if let Ok(sol) = &fast {
            *self.tags.entry(sol.case_tag).or_default() += 1;
            if sol.case_tag.is_psi_dec() {
                self.ff33_hits.push(t.values());
            }
            self.max_levels = self.max_levels.max(sol.diffmod_steps);
            let log = (*t.a1() as f64).log2();
            if log >= 1.0 {
                self.max_level_ratio = self.max_level_ratio.max(sol.diffmod_steps as f64 / log);
            }
        }
        let fast_g = fast.as_ref().map(|s| s.g).map_err(|e| e.to_string());
        let oracle_g = oracle.map_err(|e| e.to_string());
        if fast_g.is_err() || fast_g != oracle_g {
            let trace = match &fast {
                Ok(sol) => format_trace(&t.values().map(BigInt::from), &[], Some(&sol.widen())),
                Err(e) => format!("{e}\n"),
            };
            self.mismatches.push(Mismatch { triple: t.values(), fast: fast_g, oracle: oracle_g, trace });
        }
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "checked {} triples", self.checked);
        let _ = writeln!(out, "{} mismatches", self.mismatches.len());
        let tags: Vec<String> = self.tags.iter().map(|(t, n)| format!("{t}={n}")).collect();
        let _ = writeln!(out, "cases: {}", tags.join(" "));
        let _ = writeln!(out, "FF33 hits: {}", self.ff33_hits.len());
        let _ = writeln!(out, "max diff-mod levels: {} (max levels/log2(a1) = {:.3})", self.max_levels, self.max_level_ratio);
        out
    }
}

fn widen(t: &Triple<i64>) -> Triple<i128> {
    t.cast().expect("i64 fits in i128")
}

/// Fast solver against the sieve for every valid triple with `a3 <= max`.
pub fn verify_exhaustive(max: i64) -> Report {
    let mut report = Report::default();
    for t in exhaustive_triples(max) {
        let wide = widen(&t);
        let oracle = sieve_frobenius(&wide.values());
        report.record(&wide, solve(&wide), oracle);
    }
    report
}

/// Fast solver against the residue-graph oracle on `count` random triples
/// with values in `[2, bound]`.
pub fn verify_random(count: u64, bound: u64, seed: u64) -> Result<Report> {
    if bound < 5 {
        return Err(Error::InvalidInput(format!("bound {bound} leaves no valid triple")));
    }
    let mut report = Report::default();
    for v in TripleSampler::new(seed, 2, bound as u128).take(count as usize) {
        let t = Triple::new(v[0] as i128, v[1] as i128, v[2] as i128)?;
        let oracle = brauer_shockley_frobenius(&t);
        report.record(&t, solve(&t), oracle);
    }
    Ok(report)
}
