//! One line per acceptance criterion. Exits non-zero if any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod arm_common;

use std::time::{Duration, Instant};

use frobenius_cli::campaign::{exhaustive_triples, verify_random, TripleSampler};
use frobenius_core::frobenius::{case_params, compute_nbar, solve, Triple};
use frobenius_core::modarith::rat_decimal;
use frobenius_core::oracles::{brauer_shockley_frobenius, build_ni_sequence, nbar_scan, sieve_frobenius, tripathi_frobenius};
use frobenius_core::reduce::{frobenius_general, Outcome};
use frobenius_core::{solve_adaptive, BigTriple};
use num_bigint::BigInt;
use num_integer::Integer;

const MULTISET_MAX: i64 = 60;
const CORE_MAX_A3: i64 = 120;
const RANDOM_COUNT: u64 = 100_000;
const RANDOM_BOUND: u64 = 1_000_000;
const RANDOM_SEED: u64 = 20_240_601;
const ARM_MAX_Q: i64 = 300;
const BIG_COUNT: usize = 1_000;
const BIG_SEED: u64 = 60;
const LEVELS_PER_LOG2: f64 = 4.0;
const MEDIAN_LIMIT: Duration = Duration::from_micros(100);

struct Verdict {
    pass: bool,
    detail: String,
}

fn line(n: u32, name: &str, o: &Verdict) {
    println!("criterion {n} {} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
}

fn golden_values() -> Verdict {
    let cases: [((i64, i64, i64), i64); 5] = [((9, 11, 20), 79), ((53, 55, 82), 827), ((19, 23, 28), 147), ((74, 79, 81), 1133), ((77, 82, 83), 1251)];
    let mut bad = Vec::new();
    for ((a1, a2, a3), g) in cases {
        let got = solve(&Triple::new(a1, a2, a3).unwrap()).map(|s| s.g);
        if got != Ok(g) {
            bad.push(format!("({a1},{a2},{a3}) -> {got:?}"));
        }
    }
    for (v, g) in [(vec![6i64, 9, 20], 43), (vec![3, 5], 7)] {
        let got = frobenius_general(&v).map(|r| r.g);
        if got != Ok(Outcome::Value(g)) {
            bad.push(format!("{v:?} -> {got:?}"));
        }
    }
    Verdict { pass: bad.is_empty(), detail: if bad.is_empty() { "7/7 exact".into() } else { bad.join("; ") } }
}

fn golden_intermediates() -> Verdict {
    let mut bad = Vec::new();
    let mut check = |what: &str, ok: bool| {
        if !ok {
            bad.push(what.to_string());
        }
    };
    let t = Triple::new(74i64, 79, 81).unwrap();
    let cp = case_params(&t).unwrap();
    let s = solve(&t).unwrap();
    let d = s.trace.descent.clone().unwrap();
    check("(74,79,81) a0", *t.a0() == 43);
    check("(74,79,81) alpha", cp.alpha == 31 && cp.alpha_bar == 19);
    check("(74,79,81) rows", d.levels == vec![(19, 31), (7, 12), (2, 5)]);
    check("(74,79,81) sigma/nbar/psi", (s.sigma, s.nbar, s.psi) == (Some(3), Some(11), Some(3)));
    check("(74,79,81) arms", s.trace.arms == vec![1207, 960]);

    let t = Triple::new(77i64, 82, 83).unwrap();
    let cp = case_params(&t).unwrap();
    let s = solve(&t).unwrap();
    let d = s.trace.descent.clone().unwrap();
    check("(77,82,83) a0", *t.a0() == 45);
    check("(77,82,83) alpha_bar", cp.alpha_bar == 19);
    check("(77,82,83) theta_3", rat_decimal(&d.theta_chain[2], 3) == "83.0");
    check("(77,82,83) sigma/nbar/psi/eps", (s.sigma, s.nbar, s.psi, s.epsilon) == (Some(3), Some(16), Some(1), Some(1)));
    check("(77,82,83) arms", s.trace.arms == vec![1328, 1323]);
    Verdict { pass: bad.is_empty(), detail: if bad.is_empty() { "(74,79,81) and (77,82,83) exact".into() } else { bad.join("; ") } }
}

#[derive(Default)]
struct Ff33 {
    hits: usize,
    disagreements: usize,
}

fn multisets(ff: &mut Ff33) -> Verdict {
    let (mut checked, mut bad) = (0u64, Vec::new());
    let mut run = |v: &[i64]| {
        if v.iter().fold(0, |g, x| g.gcd(x)) != 1 {
            return;
        }
        checked += 1;
        let oracle = sieve_frobenius(v).unwrap();
        match frobenius_general(v) {
            Ok(r) => {
                if let Some(core) = &r.core {
                    if core.case_tag.is_psi_dec() {
                        ff.hits += 1;
                        ff.disagreements += usize::from(r.g != Outcome::Value(oracle));
                    }
                }
                if r.g != Outcome::Value(oracle) && bad.len() < 5 {
                    bad.push(format!("{v:?}: {:?} vs {oracle}", r.g));
                }
            }
            Err(e) => bad.push(format!("{v:?}: {e}")),
        }
    };
    for a in 1..=MULTISET_MAX {
        for b in a..=MULTISET_MAX {
            run(&[a, b]);
            for c in b..=MULTISET_MAX {
                run(&[a, b, c]);
            }
        }
    }
    Verdict { pass: bad.is_empty(), detail: format!("{checked} multisets, {} mismatches {}", bad.len(), bad.join("; ")) }
}

fn core_exhaustive(ff: &mut Ff33) -> Verdict {
    let (mut checked, mut bad) = (0u64, Vec::new());
    for t in exhaustive_triples(CORE_MAX_A3) {
        checked += 1;
        let fail = |bad: &mut Vec<String>, what: String| {
            if bad.len() < 5 {
                bad.push(what);
            }
        };
        let sol = match solve(&t) {
            Ok(s) => s,
            Err(e) => {
                fail(&mut bad, format!("{t:?}: {e}"));
                continue;
            }
        };
        let tri = tripathi_frobenius(&t).unwrap();
        let bs = brauer_shockley_frobenius(&t).unwrap();
        if sol.case_tag.is_psi_dec() {
            ff.hits += 1;
            ff.disagreements += usize::from(sol.g != bs);
        }
        if sol.g != tri || sol.g != bs {
            fail(&mut bad, format!("{t:?}: fast {} tripathi {tri} bs {bs}", sol.g));
        }
        let scan = nbar_scan(&t).unwrap();
        if let Ok(cp) = case_params(&t) {
            if compute_nbar(&t, &cp).unwrap().nbar != scan {
                fail(&mut bad, format!("{t:?}: nbar"));
            }
        }
        let seq = build_ni_sequence(&t).unwrap();
        let mut ns: Vec<i64> = seq.entries.iter().map(|e| e.n).collect();
        let sorted_by_h = seq.entries.windows(2).all(|w| w[0].h < w[1].h);
        ns.sort_unstable();
        if !sorted_by_h || ns != (0..=scan).collect::<Vec<_>>() {
            fail(&mut bad, format!("{t:?}: sequence is not a permutation of 0..=n̄"));
        }
    }
    Verdict { pass: bad.is_empty(), detail: format!("{checked} triples, {} failures {}", bad.len(), bad.join("; ")) }
}

fn random_large(ff: &mut Ff33) -> Verdict {
    let start = Instant::now();
    let report = verify_random(RANDOM_COUNT, RANDOM_BOUND, RANDOM_SEED).unwrap();
    ff.hits += report.ff33_hits.len();
    // Hits that disagreed with the oracle are already mismatches.
    ff.disagreements += report.mismatches.iter().filter(|m| report.ff33_hits.contains(&m.triple)).count();
    let first: Vec<String> = report.mismatches.iter().take(3).map(|m| format!("{:?}: {:?} vs {:?}", m.triple, m.fast, m.oracle)).collect();
    Verdict {
        pass: report.passed() && report.checked == RANDOM_COUNT,
        detail: format!(
            "{} triples with values <= {RANDOM_BOUND}, {} mismatches or assertion firings in {:.1}s {}",
            report.checked,
            report.mismatches.len(),
            start.elapsed().as_secs_f64(),
            first.join("; ")
        ),
    }
}

fn arm_suite() -> Verdict {
    let start = Instant::now();
    let mut pairs = 0u64;
    let mut bad = Vec::new();
    for (p, q) in arm_common::coprime_pairs(ARM_MAX_Q) {
        pairs += 1;
        if let Err(e) = arm_common::check_arm(p, q) {
            if bad.len() < 5 {
                bad.push(e);
            }
        }
    }
    Verdict {
        pass: bad.is_empty(),
        detail: format!("{pairs} (p,q) pairs with q <= {ARM_MAX_Q} in {:.1}s {}", start.elapsed().as_secs_f64(), bad.join("; ")),
    }
}

fn complexity() -> Verdict {
    let lo = 1u128 << 59;
    let hi = (1u128 << 60) - 1;
    let triples: Vec<BigTriple> = TripleSampler::new(BIG_SEED, lo, hi)
        .take(BIG_COUNT)
        .map(|v| BigTriple::new(BigInt::from(v[0]), BigInt::from(v[1]), BigInt::from(v[2])).unwrap())
        .collect();
    let mut times = Vec::with_capacity(BIG_COUNT);
    let (mut worst, mut errors) = (0.0f64, Vec::new());
    for t in &triples {
        let start = Instant::now();
        let res = solve_adaptive(t);
        times.push(start.elapsed());
        match res {
            Ok(sol) => {
                let log = (t.a1().bits() as f64 - 1.0).max(1.0);
                worst = worst.max(sol.diffmod_steps as f64 / log);
            }
            Err(e) => errors.push(format!("{t:?}: {e}")),
        }
    }
    times.sort();
    let median = times[times.len() / 2];
    let pass = errors.is_empty() && worst <= LEVELS_PER_LOG2 && median < MEDIAN_LIMIT;
    Verdict {
        pass,
        detail: format!(
            "{BIG_COUNT} triples in [2^59, 2^60), max levels/log2(a1) = {worst:.3} (limit {LEVELS_PER_LOG2}), median {:.1}us (limit {}us) {}",
            median.as_secs_f64() * 1e6,
            MEDIAN_LIMIT.as_micros(),
            errors.first().cloned().unwrap_or_default()
        ),
    }
}

fn main() {
    let mut ff = Ff33::default();
    let results = [
        (1, "golden values", golden_values()),
        (2, "golden intermediates", golden_intermediates()),
        (3, "reduction vs sieve", multisets(&mut ff)),
        (4, "core vs oracles", core_exhaustive(&mut ff)),
        (5, "randomized large range", random_large(&mut ff)),
        (6, "ARM properties", arm_suite()),
        (7, "step count and speed", complexity()),
    ];
    for (n, name, o) in &results {
        line(*n, name, o);
    }
    let ff33 = Verdict {
        pass: ff.disagreements == 0,
        detail: format!("{} hits of the PSI_DEC forms across criteria 3-5, {} disagreeing with the oracle", ff.hits, ff.disagreements),
    };
    line(8, "FF33 instrumentation", &ff33);
    if results.iter().any(|(_, _, o)| !o.pass) || !ff33.pass {
        std::process::exit(1);
    }
}
