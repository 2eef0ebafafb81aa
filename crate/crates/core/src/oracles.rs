//! Slow reference implementations, each taken from a different
//! characterisation of `g` so that their bugs cannot line up with the fast path.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::frobenius::Triple;
use crate::modarith::Int;

/// Largest table the sieve will allocate.
pub const SIEVE_MAX_CELLS: u64 = 10_000_000;
/// Largest `a1` for the residue-graph oracle.
pub const BRAUER_SHOCKLEY_MAX_A1: u64 = 10_000_000;
/// Largest `a1` for the double loop.
pub const TRIPATHI_MAX_A1: u64 = 3_000;
/// Largest `a1` for the `f` scans.
pub const SCAN_MAX_A1: u64 = 1_000_000;

fn small<T: Int>(v: &T, what: &str) -> Result<i128> {
    v.to_i128().ok_or_else(|| Error::OracleTooLarge(format!("{what} = {v}")))
}

fn back<T: Int>(v: i128) -> Result<T> {
    T::from_i128(v).ok_or(Error::Overflow)
}

fn guard(value: i128, max: u64, what: &str) -> Result<()> {
    if value > max as i128 {
        return Err(Error::OracleTooLarge(format!("{what} = {value} exceeds {max}")));
    }
    Ok(())
}

/// `g` straight from the definition: mark every representable integer up to the
/// product of the two largest values and return the largest unmarked one.
/// Every integer past that product is representable once the gcd is 1.
/// Returns -1 when nothing is unrepresentable, i.e. when a value is 1.
pub fn sieve_frobenius<T: Int>(values: &[T]) -> Result<T> {
    if values.is_empty() {
        return Err(Error::InvalidInput("no values".into()));
    }
    let mut vals = values.iter().map(|v| small(v, "value")).collect::<Result<Vec<_>>>()?;
    if vals.iter().any(|&v| v < 1) {
        return Err(Error::InvalidInput("values must be positive".into()));
    }
    if vals.iter().fold(0i128, |g, v| g.gcd(v)) != 1 {
        return Err(Error::InvalidInput("values share a common factor".into()));
    }
    vals.sort_unstable();
    vals.dedup();
    let n = vals.len();
    let limit = if n >= 2 { vals[n - 1].saturating_mul(vals[n - 2]) } else { 1 };
    guard(limit, SIEVE_MAX_CELLS, "sieve cells")?;
    let limit = limit as usize;
    let steps: Vec<usize> = vals.iter().map(|&v| v as usize).collect();
    let mut reach = vec![false; limit + 1];
    reach[0] = true;
    for x in 1..=limit {
        reach[x] = steps.iter().any(|&s| s <= x && reach[x - s]);
    }
    let g = (0..=limit).rev().find(|&x| !reach[x]).map_or(-1, |x| x as i128);
    back(g)
}

/// Residue classes modulo `a1`: `m_k` is the least representable integer
/// congruent to `k`, and `g = max m_k - a1`.
///
/// `m` is the shortest-path distance from class 0 in the graph whose arcs add
/// `a2` or `a3`. Labels are corrected one generator at a time: after the `a2`
/// pass `m` is exact for `{a1, a2}`, and one lap of the `a3` cycle started at
/// class 0 (the global minimum, which no arc can improve) makes it exact for
/// all three.
pub fn brauer_shockley_frobenius<T: Int>(t: &Triple<T>) -> Result<T> {
    let a1 = small(t.a1(), "a1")?;
    guard(a1, BRAUER_SHOCKLEY_MAX_A1, "a1")?;
    let a2 = small(t.a2(), "a2")?;
    let a3 = small(t.a3(), "a3")?;
    if a1.checked_mul(a3).is_none_or(|p| p > u64::MAX as i128 / 4) {
        return Err(Error::OracleTooLarge(format!("a1*a3 for {t:?}")));
    }
    let n = a1 as usize;
    let mut m = vec![u64::MAX; n];
    m[0] = 0;
    for step in [a2, a3] {
        let hop = (step % a1) as usize;
        let mut k = 0usize;
        for _ in 0..n {
            let mut next = k + hop;
            if next >= n {
                next -= n;
            }
            let cand = m[k].saturating_add(step as u64);
            if cand < m[next] {
                m[next] = cand;
            }
            k = next;
        }
    }
    let max = *m.iter().max().expect("a1 > 1");
    if max == u64::MAX {
        return Err(Error::Invariant(format!("unreached residue class for {t:?}")));
    }
    back(max as i128 - a1)
}

/// `F(n, r) = a2*mod(a0*n - r, a1) + a3*n`.
fn tripathi_f(a: (i128, i128, i128, i128), n: i128, r: i128) -> i128 {
    let (a0, a1, a2, a3) = a;
    a2 * (a0 * n - r).rem_euclid(a1) + a3 * n
}

/// `g = max over 0 < r < a1 of (min over 0 <= n < a1 of F(n, r)) - a1`, by
/// direct double loop.
pub fn tripathi_frobenius<T: Int>(t: &Triple<T>) -> Result<T> {
    let a1 = small(t.a1(), "a1")?;
    guard(a1, TRIPATHI_MAX_A1, "a1")?;
    let a = (small(t.a0(), "a0")?, a1, small(t.a2(), "a2")?, small(t.a3(), "a3")?);
    let best = (1..a1)
        .map(|r| (0..a1).map(|n| tripathi_f(a, n, r)).min().expect("a1 > 1"))
        .max()
        .expect("a1 > 1");
    back(best - a1)
}

/// `min over 0 <= n < a1 of F(n, r)` by scanning.
pub fn min_f_direct<T: Int>(t: &Triple<T>, r: &T) -> Result<T> {
    let a1 = small(t.a1(), "a1")?;
    guard(a1, SCAN_MAX_A1, "a1")?;
    let a = (small(t.a0(), "a0")?, a1, small(t.a2(), "a2")?, small(t.a3(), "a3")?);
    let r = small(r, "r")?;
    back((0..a1).map(|n| tripathi_f(a, n, r)).min().expect("a1 > 1"))
}

struct Plain {
    a0: i128,
    a0_inv: i128,
    a1: i128,
    a2: i128,
    a3: i128,
}

impl Plain {
    fn new<T: Int>(t: &Triple<T>) -> Result<Self> {
        let a1 = small(t.a1(), "a1")?;
        guard(a1, SCAN_MAX_A1, "a1")?;
        let p = Plain {
            a0: small(t.a0(), "a0")?,
            a0_inv: small(t.a0_inv(), "a0_inv")?,
            a1,
            a2: small(t.a2(), "a2")?,
            a3: small(t.a3(), "a3")?,
        };
        if p.a1.checked_mul(p.a3).is_none() || p.a1.checked_mul(p.a2).is_none() {
            return Err(Error::OracleTooLarge(format!("{t:?}")));
        }
        Ok(p)
    }

    fn h(&self, n: i128) -> i128 {
        (self.a0 * n).rem_euclid(self.a1)
    }

    fn h_inv(&self, x: i128) -> i128 {
        (self.a0_inv * x).rem_euclid(self.a1)
    }

    fn hs_inv(&self, x: i128) -> i128 {
        (-self.a0_inv * x).rem_euclid(self.a1)
    }

    fn f(&self, n: i128) -> i128 {
        self.a2 * self.h(n) + self.a3 * n
    }

    fn nbar(&self) -> i128 {
        let cap = self.a1 * self.a2;
        (0..).find(|&n| self.f(n + 1) > cap).expect("f(a1) = a1*a3 > a1*a2")
    }
}

/// Smallest `n >= 0` with `f(n+1) > a1*a2`, by linear scan.
pub fn nbar_scan<T: Int>(t: &Triple<T>) -> Result<T> {
    back(Plain::new(t)?.nbar())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiEntry<T> {
    pub n: T,
    pub h: T,
    pub f: T,
    /// `Δ_i = h(n_i) - h(n_(i-1))`, absent for `i = 0`.
    pub delta: Option<T>,
    /// Smallest `Δ > 0` with `h⁻¹(Δ) <= n_i`.
    pub delta_dot: T,
    /// Smallest `Δ > 0` with `h⁻¹ˢ(Δ) <= n̄ - n_i`.
    pub delta_bar: T,
}

/// The minimisers `n_0 = 0, n_1, ...`: each `n_i` minimises `f` over all `n`
/// with `h(n) > h(n_(i-1))`, and the sequence stops before `f` reaches `a1*a2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiSequence<T> {
    pub entries: Vec<NiEntry<T>>,
    /// From [`nbar_scan`], not from the entries.
    pub nbar: T,
}

pub fn build_ni_sequence<T: Int>(t: &Triple<T>) -> Result<NiSequence<T>> {
    let p = Plain::new(t)?;
    let a1 = p.a1 as usize;
    let cap = p.a1 * p.a2;
    let nbar = p.nbar();

    let mut by_h = vec![0i128; a1];
    for n in 0..p.a1 {
        by_h[p.h(n) as usize] = n;
    }
    // best_from[v]: the n with the least f among h(n) >= v.
    let mut best_from = vec![(i128::MAX, 0i128); a1 + 1];
    for v in (0..a1).rev() {
        let n = by_h[v];
        best_from[v] = best_from[v + 1].min((p.f(n), n));
    }

    let mut raw = vec![(0i128, 0i128, 0i128)];
    loop {
        let (_, h_prev, _) = *raw.last().expect("non-empty");
        let (f, n) = best_from[h_prev as usize + 1];
        if f >= cap {
            break;
        }
        raw.push((n, p.h(n), f));
    }

    let mut entries = Vec::with_capacity(raw.len());
    for (i, &(n, h, f)) in raw.iter().enumerate() {
        let delta_dot = (1..=p.a1).find(|&d| p.h_inv(d) <= n).expect("h⁻¹(a1) = 0");
        let delta_bar = (1..=p.a1).find(|&d| p.hs_inv(d) <= nbar - n).unwrap_or(p.a1);
        entries.push(NiEntry {
            n: back(n)?,
            h: back(h)?,
            f: back(f)?,
            delta: if i == 0 { None } else { Some(back(h - raw[i - 1].1)?) },
            delta_dot: back(delta_dot)?,
            delta_bar: back(delta_bar)?,
        });
    }
    Ok(NiSequence { entries, nbar: back(nbar)? })
}

/// `min over n of F(n, r)` read off the minimiser sequence:
/// `f(n_i) - a2*r` for `h(n_(i-1)) < r <= h(n_i)`, and `a1*a2 - a2*r` above the
/// last `h(n_i)`.
pub fn min_f_from_sequence<T: Int>(t: &Triple<T>, seq: &NiSequence<T>, r: &T) -> Result<T> {
    let a1 = small(t.a1(), "a1")?;
    let a2 = small(t.a2(), "a2")?;
    let r = small(r, "r")?;
    if !(0 < r && r < a1) {
        return Err(Error::Domain(format!("r = {r} outside (0, a1)")));
    }
    for w in seq.entries.windows(2) {
        let (lo, hi) = (small(&w[0].h, "h")?, small(&w[1].h, "h")?);
        if lo < r && r <= hi {
            return back(small(&w[1].f, "f")? - a2 * r);
        }
    }
    back(a1 * a2 - a2 * r)
}

/// `(δ̇, δ̄)` at level `j` of the diff-mod sequence of `(a0^-1, a1)` for the
/// minimiser `n`: the smallest `δ > 0` with `h_j(δ) <= n`, and the smallest
/// `δ > 0` with `h_jˢ(δ) <= n̄ - n`.
pub fn level_deltas<T: Int>(t: &Triple<T>, nbar: &T, n: &T, j: usize) -> Result<(T, T)> {
    let p = Plain::new(t)?;
    let (nbar, n) = (small(nbar, "n̄")?, small(n, "n")?);
    let (mut diff, mut modulus) = (p.a0_inv, p.a1);
    for _ in 1..j {
        if modulus <= 1 {
            return Err(Error::Domain(format!("level {j} is past the end")));
        }
        (diff, modulus) = if 2 * diff <= modulus {
            (diff - modulus % diff, diff)
        } else {
            (modulus % (modulus - diff), modulus - diff)
        };
    }
    let hj = |d: i128| (diff * d).rem_euclid(modulus);
    let hjs = |d: i128| ((modulus - diff) * d).rem_euclid(modulus);
    let dot = (1..=modulus).find(|&d| hj(d) <= n).expect("h_j(modulus) = 0");
    let bar = (1..=modulus).find(|&d| hjs(d) <= nbar - n).unwrap_or(modulus);
    Ok((back(dot)?, back(bar)?))
}

/// True when every pair of values is coprime.
pub fn pairwise_coprime<T: Int>(values: &[T]) -> bool {
    values.iter().enumerate().all(|(i, a)| values[i + 1..].iter().all(|b| a.gcd(b).is_one()))
}
