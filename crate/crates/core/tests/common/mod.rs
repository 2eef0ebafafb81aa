#![allow(dead_code)]

use std::collections::BTreeSet;

use frobenius_core::arm::{
    arm_eval, arm_inverse, diff_mod_sequence, euclid_steps, first_index_leq, first_ratio_below, sibling, ArmParams,
};
use frobenius_core::frobenius::Triple;
use frobenius_core::Rational;
use num_bigint::BigInt;

pub fn coprime_triples(max: i64) -> impl Iterator<Item = Triple<i64>> {
    (2..=max).flat_map(move |a1| {
        (a1 + 1..=max).flat_map(move |a2| (a2 + 1..=max).filter_map(move |a3| Triple::new(a1, a2, a3).ok()))
    })
}

pub fn coprime_pairs(max_q: i64) -> impl Iterator<Item = (i64, i64)> {
    (2..=max_q).flat_map(|q| (1..q).filter(move |p| num_integer::gcd(*p, q) == 1).map(move |p| (p, q)))
}

fn u(p: i64, q: i64, x: i64) -> i64 {
    (p * x).rem_euclid(q)
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Indices of the subsequence ends that form the border sequence of one level.
fn borders(p: i64, q: i64) -> Vec<i64> {
    if 2 * p <= q {
        (0..q).filter(|&x| u(p, q, x) < p).collect()
    } else {
        (1..=q).filter(|&x| u(p, q, x) < q - p).collect()
    }
}

/// Subsequence starts over one cycle: `0..q` when increasing, `1..=q` when decreasing.
fn run_starts(p: i64, q: i64) -> Vec<i64> {
    if 2 * p < q {
        (0..q).filter(|&x| u(p, q, x) < p).collect()
    } else {
        (1..=q).filter(|&x| u(p, q, x) >= p).collect()
    }
}

/// Every structural property of the ARM sequence `mod(p*x, q)` checked by
/// brute enumeration. Returns the first violation.
pub fn check_arm(p: i64, q: i64) -> Result<(), String> {
    let s = ArmParams::new(p, q).map_err(|e| e.to_string())?;
    let cycle: Vec<i64> = (0..q).map(|x| arm_eval(&s, &x).unwrap()).collect();

    let seen: BTreeSet<i64> = cycle.iter().copied().collect();
    if seen.len() != q as usize || cycle.iter().any(|v| !(0..q).contains(v)) {
        return Err(format!("({p},{q}) cycle is not a permutation"));
    }

    for (x, &v) in cycle.iter().enumerate() {
        let x = x as i64;
        if arm_inverse(&s, &v).unwrap() != x {
            return Err(format!("({p},{q}) inverse of u({x})"));
        }
        for y in [1, p, x, q - 1 - x, (x * x + 7) % q, q + 3] {
            let sum = cycle[x as usize] + u(p, q, y);
            let w = u(p, q, x + y);
            if w != sum && w != sum - q {
                return Err(format!("({p},{q}) quasi-additivity at x={x}, y={y}"));
            }
        }
    }

    if 2 * p != q {
        let sib = sibling(&s).unwrap();
        for x in -q..=2 * q {
            let a = u(p, q, x);
            let b = arm_eval(&sib, &x).unwrap();
            let expect = if x % q == 0 { 0 } else { q };
            if a + b != expect {
                return Err(format!("({p},{q}) sibling sum at x={x}"));
            }
            if b != u(p, q, q - x) {
                return Err(format!("({p},{q}) sibling is not the reversal at x={x}"));
            }
        }
    }

    let seq = diff_mod_sequence(&s);
    let tau = seq.tau();
    if tau > euclid_steps(&p, &q).unwrap() + 1 {
        return Err(format!("({p},{q}) tau={tau} exceeds Euclid bound"));
    }
    let last = *seq.pairs.last().unwrap();
    if last != (1, 1) && last != (0, 1) {
        return Err(format!("({p},{q}) diff-mod ends at {last:?}"));
    }
    for w in seq.pairs.windows(2) {
        let ((vb, v), (nb, nv)) = (w[0], w[1]);
        if nv > 1 && 2 * nv > v {
            return Err(format!("({p},{q}) level {:?} does not halve", w[0]));
        }
        if v < 2 {
            continue;
        }
        let expect = if 2 * vb <= v { vb } else { v - vb };
        if nv != expect {
            return Err(format!("({p},{q}) level {:?} has modulus {nv}", w[0]));
        }
        let b = borders(vb, v);
        let linked: Vec<i64> = if 2 * vb <= v {
            (0..nv).map(|k| u(nb, nv, k)).collect()
        } else {
            (1..=nv).map(|k| u(nb, nv, k)).collect()
        };
        let actual: Vec<i64> = b.iter().map(|&x| u(vb, v, x)).collect();
        if actual != linked {
            return Err(format!("({p},{q}) border linkage fails at level ({vb},{v})"));
        }
    }

    check_lengths(p, q)?;
    check_first_index_leq(&s, &cycle)?;
    check_first_ratio_below(&s, &cycle)?;
    Ok(())
}

pub fn check_lengths(p: i64, q: i64) -> Result<(), String> {
    if 2 * p == q {
        return Ok(());
    }
    let starts = run_starts(p, q);
    let end = if 2 * p < q { q } else { q + 1 };
    let inc = 2 * p < q;
    let d = if inc { p } else { q - p };
    if starts.len() as i64 != d {
        return Err(format!("({p},{q}) has {} subsequences", starts.len()));
    }
    for (i, &x) in starts.iter().enumerate() {
        let next = starts.get(i + 1).copied().unwrap_or(end);
        let len = next - x;
        let v = u(p, q, x);
        let long = if inc { v < q % p } else { v >= q - q % (q - p) };
        let expect = q / d + i64::from(long);
        if len != expect {
            return Err(format!("({p},{q}) subsequence {} has length {len}, expected {expect}", i + 1));
        }
    }
    let first_end = starts.get(1).copied().unwrap_or(end) - 1;
    if inc && p > 1 && (first_end != q / p || starts.get(1).copied().unwrap_or(end) - starts[0] != q / p + 1) {
        return Err(format!("({p},{q}) first upper border is {first_end}"));
    }
    if !inc && first_end != q / (q - p) {
        return Err(format!("({p},{q}) first lower border is {first_end}"));
    }
    Ok(())
}

fn check_first_index_leq(s: &ArmParams<i64>, cycle: &[i64]) -> Result<(), String> {
    let (p, q) = (*s.p(), *s.q());
    // answer[L] for every L in [0, q) from one ascending pass over x = 1..=q
    let mut answer = vec![(0, 0); q as usize];
    let mut best = q;
    for x in 1..=q {
        let v = if x == q { 0 } else { cycle[x as usize] };
        if v < best {
            for l in v..best {
                answer[l as usize] = (x, v);
            }
            best = v;
        }
    }
    for l in 0..q {
        let got = first_index_leq(s, &l).map_err(|e| e.to_string())?;
        if got != answer[l as usize] {
            return Err(format!("({p},{q}) first_index_leq L={l}: {got:?} vs {:?}", answer[l as usize]));
        }
    }
    Ok(())
}

fn check_first_ratio_below(s: &ArmParams<i64>, cycle: &[i64]) -> Result<(), String> {
    let (p, q) = (*s.p(), *s.q());
    if p == 1 {
        return Ok(());
    }
    // Strict records of u(x)/x, with u(q) = 0 closing the list.
    let mut records: Vec<(i64, i64)> = Vec::new();
    for x in 1..=q {
        let v = if x == q { 0 } else { cycle[x as usize] };
        let better = match records.last() {
            None => true,
            Some(&(bx, bv)) => v * bx < bv * x,
        };
        if better {
            records.push((x, v));
        }
    }
    let mut limits = BTreeSet::new();
    for d in [1i64, 2, 3, 7, 64] {
        let top = p * d;
        let step = (top / 24).max(1);
        let mut n = 1;
        while n < top {
            limits.insert(rat(n, d));
            n += step;
        }
        limits.insert(rat(top - 1, d));
    }
    for &(x, v) in &records {
        if v > 0 {
            let exact = rat(v, x);
            for delta in [rat(0, 1), rat(1, 1000 * x), rat(-1, 1000 * x)] {
                limits.insert(&exact + delta);
            }
        }
    }
    let pr = rat(p, 1);
    for l in limits {
        if l <= rat(0, 1) || l >= pr {
            continue;
        }
        let expect = records
            .iter()
            .find(|&&(x, v)| BigInt::from(v) * l.denom() <= l.numer() * BigInt::from(x))
            .map(|&(x, v)| (x, v))
            .unwrap();
        let got = first_ratio_below(s, &l).map_err(|e| format!("({p},{q}) L={l}: {e}"))?;
        if (got.index, got.value_at_min) != expect {
            return Err(format!("({p},{q}) first_ratio_below L={l}: ({}, {}) vs {expect:?}", got.index, got.value_at_min));
        }
    }
    Ok(())
}
