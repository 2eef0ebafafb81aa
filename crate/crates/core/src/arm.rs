//! ARM sequences `u(x) = mod(p*x, q)` and the descents over their diff-mod
//! sequences.
//!
//! The diff-mod sequence of `u` lists the (difference, modulus) pairs of the
//! chain of sequences in which each one is made of the local minima of the one
//! before it. Each level at least halves the modulus, so the chain has
//! `O(log q)` levels.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::modarith::{ceil_div, cmp_int_rat, mod_inverse, mod_pos, mul, sub, Int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `2p < q`
    Increasing,
    /// `2p > q`
    Decreasing,
    /// `2p = q`, which only happens for `(1, 2)`.
    Balanced,
}

pub fn branch_of<T: Int>(diff: &T, modulus: &T) -> Branch {
    let rest = modulus.clone() - diff.clone();
    match diff.cmp(&rest) {
        std::cmp::Ordering::Less => Branch::Increasing,
        std::cmp::Ordering::Greater => Branch::Decreasing,
        std::cmp::Ordering::Equal => Branch::Balanced,
    }
}

/// Difference `p` and modulus `q` with `0 < p < q` and `gcd(p, q) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArmParams<T> {
    p: T,
    q: T,
}

impl<T: Int> ArmParams<T> {
    pub fn new(p: T, q: T) -> Result<Self> {
        if !(T::zero() < p && p < q) {
            return Err(Error::Domain(format!("need 0 < p < q, got p={p}, q={q}")));
        }
        if !p.gcd(&q).is_one() {
            return Err(Error::Domain(format!("gcd({p}, {q}) is not 1")));
        }
        Ok(ArmParams { p, q })
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    pub fn branch(&self) -> Branch {
        branch_of(&self.p, &self.q)
    }

    pub fn levels(&self) -> DiffModIter<T> {
        DiffModIter { next: Some(DiffModLevel { diff: self.p.clone(), modulus: self.q.clone() }) }
    }
}

pub fn arm_eval<T: Int>(s: &ArmParams<T>, x: &T) -> Result<T> {
    mod_pos(&mul(&s.p, x)?, &s.q)
}

pub fn sibling<T: Int>(s: &ArmParams<T>) -> Result<ArmParams<T>> {
    if s.branch() == Branch::Balanced {
        return Err(Error::SelfSibling);
    }
    Ok(ArmParams { p: s.q.clone() - s.p.clone(), q: s.q.clone() })
}

/// The `x` in `[0, q)` with `u(x) = y`.
pub fn arm_inverse<T: Int>(s: &ArmParams<T>, y: &T) -> Result<T> {
    if y.is_negative() || *y >= s.q {
        return Err(Error::Domain(format!("{y} is outside [0, {})", s.q)));
    }
    if y.is_zero() {
        return Ok(T::zero());
    }
    let inv = mod_inverse(&s.p, &s.q)?;
    mod_pos(&mul(&inv, y)?, &s.q)
}

/// One `(diff, modulus)` pair of a diff-mod sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiffModLevel<T> {
    pub diff: T,
    pub modulus: T,
}

impl<T: Int> DiffModLevel<T> {
    pub fn branch(&self) -> Branch {
        branch_of(&self.diff, &self.modulus)
    }

    pub fn is_terminal(&self) -> bool {
        self.modulus.is_one()
    }

    /// The level below, or `None` at the terminal pair.
    pub fn next(&self) -> Option<Self> {
        if self.modulus <= T::one() {
            return None;
        }
        let (v, vb) = (&self.modulus, &self.diff);
        Some(match self.branch() {
            Branch::Increasing | Branch::Balanced => {
                let m = vb.clone();
                DiffModLevel { diff: m.clone() - v.mod_floor(&m), modulus: m }
            }
            Branch::Decreasing => {
                let m = v.clone() - vb.clone();
                DiffModLevel { diff: v.mod_floor(&m), modulus: m }
            }
        })
    }

    pub fn pair(&self) -> (T, T) {
        (self.diff.clone(), self.modulus.clone())
    }
}

/// Lazy walk down a diff-mod sequence, first level included.
#[derive(Clone, Debug)]
pub struct DiffModIter<T> {
    next: Option<DiffModLevel<T>>,
}

impl<T: Int> Iterator for DiffModIter<T> {
    type Item = DiffModLevel<T>;

    fn next(&mut self) -> Option<Self::Item> {
        let cur = self.next.take()?;
        self.next = cur.next();
        Some(cur)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffModSeq<T> {
    pub pairs: Vec<(T, T)>,
}

impl<T: Int> DiffModSeq<T> {
    /// Number of pairs, terminal pair included.
    pub fn tau(&self) -> usize {
        self.pairs.len()
    }

    pub fn branches(&self) -> Vec<Branch> {
        self.pairs.iter().map(|(d, m)| branch_of(d, m)).collect()
    }
}

pub fn diff_mod_sequence<T: Int>(s: &ArmParams<T>) -> DiffModSeq<T> {
    DiffModSeq { pairs: s.levels().map(|l| l.pair()).collect() }
}

/// The pair at the same level of the sibling's diff-mod sequence. `prev_branch`
/// is the branch of the level above, `None` for the first level.
pub fn sibling_diff_mod<T: Int>(pair: &(T, T), prev_branch: Option<Branch>) -> Result<(T, T)> {
    if prev_branch == Some(Branch::Balanced) {
        return Err(Error::InvalidLevel);
    }
    let (vb, v) = pair;
    Ok((v.clone() - vb.clone(), v.clone()))
}

/// Smallest `i > 0` with `u(i) <= limit`, together with `u(i)`.
pub fn first_index_leq<T: Int>(s: &ArmParams<T>, limit: &T) -> Result<(T, T)> {
    if limit.is_negative() || *limit >= s.q {
        return Err(Error::Domain(format!("limit {limit} is outside [0, {})", s.q)));
    }
    let mut level = DiffModLevel { diff: s.p.clone(), modulus: s.q.clone() };
    let value = loop {
        let Some(next) = level.next() else {
            break T::zero();
        };
        if *limit < next.modulus {
            level = next;
            continue;
        }
        break match level.branch() {
            Branch::Decreasing => {
                // First run: u(x) = v - (v - vb)x.
                let step = level.modulus.clone() - level.diff.clone();
                let x = ceil_div(&(level.modulus.clone() - limit.clone()), &step)?;
                level.modulus.clone() - mul(&step, &x)?
            }
            Branch::Increasing | Branch::Balanced => level.diff.clone(),
        };
    };
    let index = if value.is_zero() { s.q.clone() } else { arm_inverse(s, &value)? };
    Ok((index, value))
}

/// How [`first_ratio_below`] found its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Resolution {
    /// `diff_σ <= L_σ` after an increasing level: the answer is `diff_σ`.
    Diff,
    /// `diff_σ <= L_σ` after a decreasing level: the answer is
    /// `v_{σ-1} - v_σ * ceil(v_{σ-1} / (v_σ + L_{σ-1}))`.
    Ceiling,
    /// `diff_σ = 1 > L_σ`: the answer is `u(q) = 0`.
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioDescentResult<T> {
    pub value_at_min: T,
    pub index: T,
    /// Level (1-based) at which the descent stopped.
    pub sigma: usize,
    /// `L_1 ..= L_σ`.
    pub theta_chain: Vec<Rational>,
    /// Diff-mod pairs `1 ..= σ`.
    pub levels: Vec<(T, T)>,
    pub resolution: Resolution,
}

/// Smallest `x > 0` with `u(x)/x <= limit`.
///
/// Requires `p > 1` and `0 < limit < p`; callers handle `p <= limit` (answer 1)
/// and `p = 1` (answer `q`) themselves.
pub fn first_ratio_below<T: Int>(s: &ArmParams<T>, limit: &Rational) -> Result<RatioDescentResult<T>> {
    if s.p.is_one() || !limit.is_positive() || cmp_int_rat(&s.p, limit).is_le() {
        return Err(Error::Domain(format!("need 0 < limit < p and p > 1, got p={}, limit={limit}", s.p)));
    }
    // Each L_j is kept as an unreduced pair (n, d) with d > 0; normalising
    // through `Ratio` at every level costs several big gcds.
    let mut level = DiffModLevel { diff: s.p.clone(), modulus: s.q.clone() };
    let mut levels = vec![level.pair()];
    let mut limits: Vec<(BigInt, BigInt)> = vec![(limit.numer().clone(), limit.denom().clone())];
    let mut branches = Vec::new();
    let at_most = |v: &T, (n, d): &(BigInt, BigInt)| v.to_big() * d <= *n;
    loop {
        let (n, d) = limits.last().expect("non-empty");
        if level.diff.is_one() || at_most(&level.diff, &(n.clone(), d.clone())) {
            break;
        }
        let branch = level.branch();
        let next = level.next().expect("diff > 1 implies modulus > 2");
        let scaled = next.modulus.to_big() * d;
        let l_next = match branch {
            // Positive because the loop only continues while v_(j+1) = diff_j > L_j.
            Branch::Increasing => (level.modulus.to_big() * n, scaled - n),
            Branch::Decreasing => (level.modulus.to_big() * n, scaled + n),
            Branch::Balanced => {
                return Err(Error::Invariant(format!("balanced level {:?} with diff > 1", level.pair())));
            }
        };
        branches.push(branch);
        limits.push(l_next);
        levels.push(next.pair());
        level = next;
    }

    let sigma = levels.len();
    let (value, resolution) = if at_most(&level.diff, &limits[sigma - 1]) {
        match branches[sigma - 2] {
            Branch::Increasing => (level.diff.clone(), Resolution::Diff),
            Branch::Decreasing => {
                let v_prev = &levels[sigma - 2].1;
                let (n, d) = &limits[sigma - 2];
                let c = ceil_div(&(v_prev.to_big() * d), &(level.modulus.to_big() * d + n))?;
                let c = T::from_big(&c).ok_or(Error::Overflow)?;
                (sub(v_prev, &mul(&level.modulus, &c)?)?, Resolution::Ceiling)
            }
            Branch::Balanced => unreachable!("a balanced level stops the descent"),
        }
    } else {
        (T::zero(), Resolution::Zero)
    };
    let limits = limits.into_iter().map(|(n, d)| Rational::new(n, d)).collect();
    let index = if value.is_zero() { s.q.clone() } else { arm_inverse(s, &value)? };
    Ok(RatioDescentResult { value_at_min: value, index, sigma, theta_chain: limits, levels, resolution })
}

/// Steps of Euclid's algorithm with positive remainders on `(p, q)`.
pub fn euclid_steps<T: Int>(p: &T, q: &T) -> Result<usize> {
    let (mut a, mut b) = (q.clone(), p.clone());
    let mut steps = 0;
    while !b.is_zero() {
        let r = mod_pos(&a, &b)?;
        a = b;
        b = r;
        steps += 1;
    }
    Ok(steps)
}
