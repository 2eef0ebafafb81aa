//! Reduction of arbitrary pairs and triples of positive integers to the sorted,
//! pairwise-coprime form [`crate::frobenius::solve`] expects.

use crate::error::{Error, Result};
use crate::frobenius::{solve, FrobeniusSolution, Triple};
use crate::modarith::{add, mul, sub, Int};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepKind<T> {
    Sort,
    Dedupe,
    /// Both values at `pair` (positions in `before`) were divided by `d`.
    Johnson { d: T, pair: (usize, usize) },
    Sylvester,
    UnitElement,
    NoSolution,
}

impl<T> StepKind<T> {
    pub fn name(&self) -> &'static str {
        match self {
            StepKind::Sort => "SORT",
            StepKind::Dedupe => "DEDUPE",
            StepKind::Johnson { .. } => "JOHNSON",
            StepKind::Sylvester => "SYLVESTER",
            StepKind::UnitElement => "UNIT_ELEMENT",
            StepKind::NoSolution => "NO_SOLUTION",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep<T> {
    pub kind: StepKind<T>,
    pub before: Vec<T>,
    pub after: Vec<T>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Value(T),
    /// The values share a factor, so infinitely many integers are unrepresentable.
    NoSolution,
}

impl<T> Outcome<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Outcome::Value(g) => Some(g),
            Outcome::NoSolution => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralResult<T> {
    pub g: Outcome<T>,
    pub chain: Vec<ReductionStep<T>>,
    /// Set when the reduction ended in a pairwise-coprime triple.
    pub core: Option<FrobeniusSolution<T>>,
}

/// Which pair with a common factor a Johnson step divides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairOrder {
    /// Lexicographically first by sorted position.
    First,
    Last,
}

pub fn frobenius_general<T: Int>(values: &[T]) -> Result<GeneralResult<T>> {
    frobenius_general_with(values, PairOrder::First)
}

pub fn frobenius_general_with<T: Int>(values: &[T], order: PairOrder) -> Result<GeneralResult<T>> {
    let mut core = None;
    let mut res = frobenius_general_by(values, order, |t| {
        let sol = solve(t)?;
        let g = sol.g.clone();
        core = Some(sol);
        Ok(g)
    })?;
    res.core = core;
    Ok(res)
}

/// Same reduction, with `core` computing `g` of the final pairwise-coprime
/// triple. [`GeneralResult::core`] is left empty.
pub fn frobenius_general_by<T: Int>(
    values: &[T],
    order: PairOrder,
    mut core: impl FnMut(&Triple<T>) -> Result<T>,
) -> Result<GeneralResult<T>> {
    if !(2..=3).contains(&values.len()) {
        return Err(Error::InvalidInput(format!("expected 2 or 3 values, got {}", values.len())));
    }
    if let Some(v) = values.iter().find(|v| **v < T::one()) {
        return Err(Error::InvalidInput(format!("values must be positive, got {v}")));
    }
    let mut chain = Vec::new();
    let mut sorted = values.to_vec();
    sorted.sort();
    if sorted != values {
        chain.push(ReductionStep { kind: StepKind::Sort, before: values.to_vec(), after: sorted.clone() });
    }
    let common = sorted.iter().fold(T::zero(), |acc, v| acc.gcd(v));
    if !common.is_one() {
        chain.push(ReductionStep { kind: StepKind::NoSolution, before: sorted, after: Vec::new() });
        return Ok(GeneralResult { g: Outcome::NoSolution, chain, core: None });
    }
    let g = reduce_sorted(sorted, order, &mut chain, &mut core)?;
    Ok(GeneralResult { g: Outcome::Value(g), chain, core: None })
}

fn reduce_sorted<T: Int>(
    values: Vec<T>,
    order: PairOrder,
    chain: &mut Vec<ReductionStep<T>>,
    core: &mut dyn FnMut(&Triple<T>) -> Result<T>,
) -> Result<T> {
    if values.iter().any(|v| v.is_one()) {
        chain.push(ReductionStep { kind: StepKind::UnitElement, before: values, after: vec![T::one()] });
        return Ok(-T::one());
    }
    let mut distinct = values.clone();
    distinct.dedup();
    if distinct.len() != values.len() {
        chain.push(ReductionStep { kind: StepKind::Dedupe, before: values, after: distinct.clone() });
    }
    let values = distinct;
    match values.as_slice() {
        [a, b] => {
            chain.push(ReductionStep { kind: StepKind::Sylvester, before: values.clone(), after: values.clone() });
            sub(&sub(&mul(a, b)?, a)?, b)
        }
        [a1, a2, a3] => {
            let mut pairs = vec![(0, 1), (0, 2), (1, 2)];
            if order == PairOrder::Last {
                pairs.reverse();
            }
            let found = pairs.into_iter().map(|(i, j)| (i, j, values[i].gcd(&values[j]))).find(|(_, _, d)| !d.is_one());
            let Some((i, j, d)) = found else {
                return core(&Triple::new(a1.clone(), a2.clone(), a3.clone())?);
            };
            let k = values[3 - i - j].clone();
            let mut next = vec![values[i].clone() / d.clone(), values[j].clone() / d.clone(), k.clone()];
            next.sort();
            chain.push(ReductionStep { kind: StepKind::Johnson { d: d.clone(), pair: (i, j) }, before: values, after: next.clone() });
            let inner = reduce_sorted(next, order, chain, core)?;
            add(&mul(&d, &inner)?, &mul(&sub(&d, &T::one())?, &k)?)
        }
        _ => Err(Error::Invariant(format!("reduction left {values:?}"))),
    }
}
