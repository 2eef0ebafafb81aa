//! Frobenius number of a sorted, pairwise-coprime triple `1 < a1 < a2 < a3`.
//!
//! Notation: `a0 = mod(-a2^-1 * a3, a1)`, `h(n) = mod(a0*n, a1)`,
//! `f(n) = a2*h(n) + a3*n`, and `n̄` is the smallest `n >= 0` with
//! `f(n+1) > a1*a2`. The solver picks one of seven closed forms. Only the
//! last two of them need `n̄`, which is found by a ratio descent over the
//! diff-mod sequence of `(ᾱ, α)`, and the level `ψ` of the diff-mod sequence of
//! `(a0^-1, a1)` at which the modulus first drops to `n̄` or below.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::arm::{arm_eval, first_ratio_below, ArmParams, Branch, RatioDescentResult, Resolution};
use crate::error::{Error, Result};
use crate::modarith::{
    add, ceil_div, ceil_rat, cmp_int_rat, floor_div, lit, mod_inverse, mod_pos, mul, neg, rat_from_int, sub, Int, Rational,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triple<T> {
    a1: T,
    a2: T,
    a3: T,
    a0: T,
    a0_inv: T,
    h: ArmParams<T>,
    hs: ArmParams<T>,
}

impl<T: Int> Triple<T> {
    pub fn new(a1: T, a2: T, a3: T) -> Result<Self> {
        if !(T::one() < a1 && a1 < a2 && a2 < a3) {
            return Err(Error::InvalidInput(format!("need 1 < a1 < a2 < a3, got ({a1}, {a2}, {a3})")));
        }
        for (x, y) in [(&a1, &a2), (&a1, &a3), (&a2, &a3)] {
            if !x.gcd(y).is_one() {
                return Err(Error::InvalidInput(format!("{x} and {y} are not coprime")));
            }
        }
        let (a0, a0_inv) = derive_a0(&a1, &a2, &a3)?;
        let h = ArmParams::new(a0.clone(), a1.clone())?;
        let hs = ArmParams::new(a1.clone() - a0.clone(), a1.clone())?;
        Ok(Triple { a1, a2, a3, a0, a0_inv, h, hs })
    }

    pub fn a1(&self) -> &T {
        &self.a1
    }

    pub fn a2(&self) -> &T {
        &self.a2
    }

    pub fn a3(&self) -> &T {
        &self.a3
    }

    pub fn a0(&self) -> &T {
        &self.a0
    }

    pub fn a0_inv(&self) -> &T {
        &self.a0_inv
    }

    pub fn values(&self) -> [T; 3] {
        [self.a1.clone(), self.a2.clone(), self.a3.clone()]
    }

    /// `h(n) = mod(a0*n, a1)`.
    pub fn h(&self, n: &T) -> Result<T> {
        arm_eval(&self.h, n)
    }

    /// `hˢ(n) = mod((a1 - a0)*n, a1) = h(-n)`.
    pub fn hs(&self, n: &T) -> Result<T> {
        arm_eval(&self.hs, n)
    }

    /// `h⁻¹ˢ(x) = mod(-a0^-1 * x, a1)`.
    pub fn hs_inv(&self, x: &T) -> Result<T> {
        mod_pos(&neg(&mul(&self.a0_inv, &mod_pos(x, &self.a1)?)?)?, &self.a1)
    }

    /// `f(n) = a2*h(n) + a3*n`.
    pub fn f(&self, n: &T) -> Result<T> {
        add(&mul(&self.a2, &self.h(n)?)?, &mul(&self.a3, n)?)
    }

    /// The same triple in another integer type, if every value fits.
    pub fn cast<U: Int>(&self) -> Option<Triple<U>> {
        let c = |x: &T| U::from_big(&x.to_big());
        let (a1, a0) = (c(&self.a1)?, c(&self.a0)?);
        Some(Triple {
            a2: c(&self.a2)?,
            a3: c(&self.a3)?,
            a0_inv: c(&self.a0_inv)?,
            h: ArmParams::new(a0.clone(), a1.clone()).ok()?,
            hs: ArmParams::new(a1.clone() - a0.clone(), a1.clone()).ok()?,
            a1,
            a0,
        })
    }
}

/// `a0 = mod(-a2^-1 * a3, a1)` and its inverse modulo `a1`.
pub fn derive_a0<T: Int>(a1: &T, a2: &T, a3: &T) -> Result<(T, T)> {
    let a2_inv = mod_inverse(a2, a1)?;
    let a0 = mod_pos(&neg(&mul(&a2_inv, &mod_pos(a3, a1)?)?)?, a1)?;
    let a0_inv = mod_inverse(&a0, a1)?;
    Ok((a0, a0_inv))
}

/// True when `a3 + a2*a0 > a1*a2`, in which case `g` is the two-variable value.
pub fn case1_check<T: Int>(t: &Triple<T>) -> Result<bool> {
    let lhs = add(&t.a3, &mul(&t.a2, &t.a0)?)?;
    let rhs = mul(&t.a1, &t.a2)?;
    let balanced = mul(&lit(2), &t.a0)? == t.a1;
    match lhs.cmp(&rhs) {
        Ordering::Equal => Err(Error::Invariant(format!("a3 + a2*a0 = a1*a2 = {rhs} for {t:?}"))),
        Ordering::Less if balanced => Err(Error::Invariant(format!("2*a0 = a1 but a3 + a2*a0 < a1*a2 for {t:?}"))),
        ord => Ok(ord == Ordering::Greater),
    }
}

/// `a1*a2 - a2 - a1`.
pub fn g_case1<T: Int>(t: &Triple<T>) -> Result<T> {
    sub(&sub(&mul(&t.a1, &t.a2)?, &t.a2)?, &t.a1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseParams<T> {
    pub alpha: T,
    pub alpha_bar: T,
    pub beta: T,
    /// `a1*a3/β`
    pub theta: Rational,
    /// `2*a0 < a1`
    pub increasing: bool,
}

impl<T: Int> CaseParams<T> {
    /// `ᾱ` compared with `θ`; never `Equal` for a valid triple.
    pub fn alpha_bar_vs_theta(&self) -> Ordering {
        cmp_int_rat(&self.alpha_bar, &self.theta)
    }

    fn widen(&self) -> CaseParams<BigInt> {
        CaseParams {
            alpha: self.alpha.to_big(),
            alpha_bar: self.alpha_bar.to_big(),
            beta: self.beta.to_big(),
            theta: self.theta.clone(),
            increasing: self.increasing,
        }
    }
}

/// `α`, `ᾱ`, `β` and `θ`. Only defined when `a3 + a2*a0 < a1*a2`.
pub fn case_params<T: Int>(t: &Triple<T>) -> Result<CaseParams<T>> {
    if case1_check(t)? {
        return Err(Error::Domain(format!("a3 + a2*a0 > a1*a2 for {t:?}")));
    }
    let two_a0 = mul(&lit(2), &t.a0)?;
    let increasing = two_a0 < t.a1;
    let (alpha, alpha_bar, beta) = if increasing {
        let alpha = t.a0.clone();
        let alpha_bar = mod_pos(&t.a1, &alpha)?;
        let beta = add(&mul(&t.a2, &alpha)?, &t.a3)?;
        (alpha, alpha_bar, beta)
    } else {
        let alpha = sub(&t.a1, &t.a0)?;
        let alpha_bar = sub(&alpha, &mod_pos(&t.a1, &alpha)?)?;
        let beta = sub(&mul(&t.a2, &alpha)?, &t.a3)?;
        (alpha, alpha_bar, beta)
    };
    if !beta.is_positive() {
        return Err(Error::Invariant(format!("β = {beta} is not positive for {t:?}")));
    }
    let theta = Rational::new(t.a1.to_big() * t.a3.to_big(), beta.to_big());
    if !(theta > Rational::one()) {
        return Err(Error::Invariant(format!("θ = {theta} is not above 1 for {t:?}")));
    }
    if cmp_int_rat(&alpha_bar, &theta) == Ordering::Equal {
        return Err(Error::Invariant(format!("ᾱ = θ = {theta} for {t:?}")));
    }
    Ok(CaseParams { alpha, alpha_bar, beta, theta, increasing })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NbarResult<T> {
    pub nbar: T,
    /// Present when `ᾱ > θ`.
    pub descent: Option<RatioDescentResult<T>>,
}

pub fn compute_nbar<T: Int>(t: &Triple<T>, cp: &CaseParams<T>) -> Result<NbarResult<T>> {
    let (nbar, descent) = match (cp.alpha_bar_vs_theta(), cp.increasing) {
        (Ordering::Less, true) => (sub(&ceil_div(&mul(&t.a1, &t.a2)?, &cp.beta)?, &T::one())?, None),
        (Ordering::Less, false) => (floor_div(&t.a1, &cp.alpha)?, None),
        (Ordering::Greater, _) => {
            let e = ArmParams::new(cp.alpha_bar.clone(), cp.alpha.clone())?;
            let descent = first_ratio_below(&e, &cp.theta)?;
            if descent.resolution == Resolution::Zero {
                return Err(Error::Invariant(format!("ratio descent reached u(x) = 0 for {t:?}")));
            }
            let nbar = t.hs_inv(&add(&descent.value_at_min, &t.a0)?)?;
            debug_assert_eq!(nbar_from_chain(t, &descent).ok(), Some(nbar.clone()));
            (nbar, Some(descent))
        }
        (Ordering::Equal, _) => return Err(Error::Invariant(format!("ᾱ = θ for {t:?}"))),
    };
    if !(nbar.is_positive() && nbar < t.a1) {
        return Err(Error::Invariant(format!("n̄ = {nbar} is outside (0, a1) for {t:?}")));
    }
    Ok(NbarResult { nbar, descent })
}

/// `n̄` straight from the θ chain: `h⁻¹ˢ(ᾱ_σ + a0)` below an increasing level,
/// `h⁻¹ˢ(α_{σ-1} - α_σ*ceil(α_{σ-1}/(α_σ + θ_{σ-1})) + a0)` below a decreasing one.
pub fn nbar_from_chain<T: Int>(t: &Triple<T>, descent: &RatioDescentResult<T>) -> Result<T> {
    let sigma = descent.sigma;
    if sigma < 2 {
        return Err(Error::Invariant(format!("σ = {sigma} for {t:?}")));
    }
    let (ab_prev, a_prev) = &descent.levels[sigma - 2];
    let (ab_sigma, a_sigma) = &descent.levels[sigma - 1];
    let e = match crate::arm::branch_of(ab_prev, a_prev) {
        Branch::Increasing => ab_sigma.clone(),
        Branch::Decreasing => {
            let c = ceil_rat(&(rat_from_int(a_prev) / (rat_from_int(a_sigma) + &descent.theta_chain[sigma - 2])));
            sub(a_prev, &mul(a_sigma, &T::from_big(&c).ok_or(Error::Overflow)?)?)?
        }
        Branch::Balanced => {
            return Err(Error::Invariant(format!("2ᾱ_(σ-1) = α_(σ-1) for {t:?}")));
        }
    };
    t.hs_inv(&add(&e, &t.a0)?)
}

/// The level `ψ` with `φ_(ψ+1) <= n̄ < φ_ψ` in the diff-mod sequence of
/// `(a0^-1, a1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiLevel<T> {
    /// 1-based.
    pub psi: usize,
    /// `(φ̄_ψ, φ_ψ)`
    pub phi: (T, T),
    /// `(φ̄_(ψ+1), φ_(ψ+1))`
    pub phi_next: (T, T),
    pub branch: Branch,
    /// Pairs `1 ..= ψ+1`.
    pub rows: Vec<(T, T)>,
}

pub fn compute_psi<T: Int>(t: &Triple<T>, nbar: &T) -> Result<PsiLevel<T>> {
    if !(*nbar < t.a1) {
        return Err(Error::Domain(format!("n̄ = {nbar} is not below a1 = {}", t.a1)));
    }
    let mut rows = Vec::new();
    for level in ArmParams::new(t.a0_inv.clone(), t.a1.clone())?.levels() {
        rows.push(level.pair());
        let Some(next) = level.next() else { break };
        if next.modulus <= *nbar {
            rows.push(next.pair());
            return Ok(PsiLevel { psi: rows.len() - 1, phi: level.pair(), phi_next: next.pair(), branch: level.branch(), rows });
        }
    }
    Err(Error::Invariant(format!("no level ψ for n̄ = {nbar} in {t:?}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    TwoVarLike,
    IncSmall,
    DecSmall,
    PsiEdge,
    PsiInc,
    PsiDecEq,
    PsiDecGt,
}

impl CaseTag {
    pub const ALL: [CaseTag; 7] = [
        CaseTag::TwoVarLike,
        CaseTag::IncSmall,
        CaseTag::DecSmall,
        CaseTag::PsiEdge,
        CaseTag::PsiInc,
        CaseTag::PsiDecEq,
        CaseTag::PsiDecGt,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::TwoVarLike => "TWO_VAR_LIKE",
            CaseTag::IncSmall => "INC_SMALL",
            CaseTag::DecSmall => "DEC_SMALL",
            CaseTag::PsiEdge => "PSI_EDGE",
            CaseTag::PsiInc => "PSI_INC",
            CaseTag::PsiDecEq => "PSI_DEC_EQ",
            CaseTag::PsiDecGt => "PSI_DEC_GT",
        }
    }

    /// The branch with `2φ̄_ψ > φ_ψ` and `n̄ < φ_ψ - 1`, for which no witness is known.
    pub fn is_psi_dec(self) -> bool {
        matches!(self, CaseTag::PsiDecEq | CaseTag::PsiDecGt)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of one closed form: `g = max(arms) - a1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation<T> {
    pub g: T,
    pub tag: CaseTag,
    pub arms: Vec<T>,
    /// `ε̇` for [`CaseTag::PsiInc`], `ε̄` for the `PsiDec` cases.
    pub epsilon: Option<T>,
}

fn evaluate<T: Int>(t: &Triple<T>, tag: CaseTag, arms: Vec<T>, epsilon: Option<T>) -> Result<Evaluation<T>> {
    let best = arms.iter().max().expect("at least one arm").clone();
    Ok(Evaluation { g: sub(&best, &t.a1)?, tag, arms, epsilon })
}

/// `a3*n + a2*(y - 1)`
fn arm_value<T: Int>(t: &Triple<T>, n: &T, y: &T) -> Result<T> {
    add(&mul(&t.a3, n)?, &mul(&t.a2, &sub(y, &T::one())?)?)
}

pub fn g_inc_small<T: Int>(t: &Triple<T>, nbar: &T) -> Result<Evaluation<T>> {
    let first = arm_value(t, nbar, &t.a0)?;
    let second = mul(&t.a2, &sub(&sub(&t.a1, &mul(nbar, &t.a0)?)?, &T::one())?)?;
    evaluate(t, CaseTag::IncSmall, vec![first, second], None)
}

pub fn g_dec_small<T: Int>(t: &Triple<T>, cp: &CaseParams<T>, nbar: &T) -> Result<Evaluation<T>> {
    let first = arm_value(t, nbar, &mod_pos(&t.a1, &cp.alpha)?)?;
    let second = arm_value(t, &sub(nbar, &T::one())?, &cp.alpha)?;
    evaluate(t, CaseTag::DecSmall, vec![first, second], None)
}

/// `n̄ = φ_ψ - 1`.
pub fn g_psi_edge<T: Int>(t: &Triple<T>, nbar: &T, lv: &PsiLevel<T>) -> Result<Evaluation<T>> {
    let (pb, p) = &lv.phi;
    let first = arm_value(t, nbar, &t.h(pb)?)?;
    let second = arm_value(t, &sub(pb, &T::one())?, &t.hs(&sub(p, pb)?)?)?;
    evaluate(t, CaseTag::PsiEdge, vec![first, second], None)
}

/// `n̄ < φ_ψ - 1` and `2φ̄_ψ < φ_ψ`.
pub fn g_psi_inc<T: Int>(t: &Triple<T>, nbar: &T, lv: &PsiLevel<T>) -> Result<Evaluation<T>> {
    let (pb, _) = &lv.phi;
    let (nb, n) = &lv.phi_next;
    let eps = floor_div(&add(&sub(&add(nbar, &T::one())?, n)?, nb)?, n)?;
    if eps.is_negative() {
        return Err(Error::Invariant(format!("ε̇ = {eps} < 0 for {t:?}")));
    }
    if eps.is_zero() && !(sub(&sub(n, nb)?, &T::one())?).is_positive() {
        return Err(Error::Invariant(format!("ε̇ = 0 but φ_(ψ+1) - φ̄_(ψ+1) - 1 <= 0 for {t:?}")));
    }
    let first = arm_value(t, nbar, &t.h(pb)?)?;
    let second = arm_value(t, &sub(pb, &T::one())?, &t.hs(&sub(&mul(&eps, pb)?, nb)?)?)?;
    evaluate(t, CaseTag::PsiInc, vec![first, second], Some(eps))
}

/// `n̄ < φ_ψ - 1` and `2φ̄_ψ > φ_ψ`.
pub fn g_psi_dec<T: Int>(t: &Triple<T>, nbar: &T, lv: &PsiLevel<T>) -> Result<Evaluation<T>> {
    if lv.branch == Branch::Balanced {
        return Err(Error::Invariant(format!("2φ̄_ψ = φ_ψ for {t:?}")));
    }
    let (nb, n) = &lv.phi_next;
    let eps = floor_div(&sub(&add(nbar, &T::one())?, nb)?, n)?;
    if eps.is_negative() {
        return Err(Error::Invariant(format!("ε̄ = {eps} < 0 for {t:?}")));
    }
    if eps.is_zero() && !(*nb > T::one()) {
        return Err(Error::Invariant(format!("ε̄ = 0 but φ̄_(ψ+1) <= 1 for {t:?}")));
    }
    let eps_n = mul(&eps, n)?;
    let threshold = sub(&add(&eps_n, nb)?, &T::one())?;
    let lower = t.h(&add(nb, &sub(&eps_n, n)?)?)?;
    match nbar.cmp(&threshold) {
        Ordering::Equal => evaluate(t, CaseTag::PsiDecEq, vec![arm_value(t, nbar, &lower)?], Some(eps)),
        Ordering::Greater => {
            let first = arm_value(t, nbar, &t.h(&add(nb, &eps_n)?)?)?;
            let second = arm_value(t, &threshold, &lower)?;
            evaluate(t, CaseTag::PsiDecGt, vec![first, second], Some(eps))
        }
        Ordering::Less => Err(Error::Invariant(format!(
            "n̄ = {nbar} below ε̄φ_(ψ+1) + φ̄_(ψ+1) - 1 = {threshold} for {t:?}"
        ))),
    }
}

/// Intermediate values of one solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace<T> {
    pub a: [T; 3],
    pub a0: T,
    pub a0_inv: T,
    pub case_params: Option<CaseParams<T>>,
    pub descent: Option<RatioDescentResult<T>>,
    pub psi_rows: Vec<(T, T)>,
    pub arms: Vec<T>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusSolution<T> {
    pub g: T,
    pub case_tag: CaseTag,
    pub nbar: Option<T>,
    pub psi: Option<usize>,
    pub sigma: Option<usize>,
    pub epsilon: Option<T>,
    /// Diff-mod levels visited by both descents.
    pub diffmod_steps: usize,
    pub trace: Trace<T>,
}

impl<T: Int> FrobeniusSolution<T> {
    pub fn widen(&self) -> FrobeniusSolution<BigInt> {
        let big = |v: &T| v.to_big();
        let pairs = |v: &[(T, T)]| v.iter().map(|(a, b)| (big(a), big(b))).collect::<Vec<_>>();
        let tr = &self.trace;
        FrobeniusSolution {
            g: big(&self.g),
            case_tag: self.case_tag,
            nbar: self.nbar.as_ref().map(big),
            psi: self.psi,
            sigma: self.sigma,
            epsilon: self.epsilon.as_ref().map(big),
            diffmod_steps: self.diffmod_steps,
            trace: Trace {
                a: [big(&tr.a[0]), big(&tr.a[1]), big(&tr.a[2])],
                a0: big(&tr.a0),
                a0_inv: big(&tr.a0_inv),
                case_params: tr.case_params.as_ref().map(|c| c.widen()),
                descent: tr.descent.as_ref().map(|d| RatioDescentResult {
                    value_at_min: big(&d.value_at_min),
                    index: big(&d.index),
                    sigma: d.sigma,
                    theta_chain: d.theta_chain.clone(),
                    levels: pairs(&d.levels),
                    resolution: d.resolution,
                }),
                psi_rows: pairs(&tr.psi_rows),
                arms: tr.arms.iter().map(big).collect(),
            },
        }
    }
}

pub fn solve<T: Int>(t: &Triple<T>) -> Result<FrobeniusSolution<T>> {
    let mut trace = Trace {
        a: t.values(),
        a0: t.a0.clone(),
        a0_inv: t.a0_inv.clone(),
        case_params: None,
        descent: None,
        psi_rows: Vec::new(),
        arms: Vec::new(),
    };
    let result = dispatch(t, &mut trace);
    match result {
        Ok((eval, nbar, psi)) => {
            let sigma = trace.descent.as_ref().map(|d| d.sigma);
            let diffmod_steps = sigma.unwrap_or(0) + trace.psi_rows.len();
            trace.arms = eval.arms;
            Ok(FrobeniusSolution {
                g: eval.g,
                case_tag: eval.tag,
                nbar,
                psi,
                sigma,
                epsilon: eval.epsilon,
                diffmod_steps,
                trace,
            })
        }
        Err(Error::Invariant(msg)) => Err(Error::Invariant(format!("{msg}; trace: {trace:?}"))),
        Err(e) => Err(e),
    }
}

type Dispatched<T> = (Evaluation<T>, Option<T>, Option<usize>);

fn dispatch<T: Int>(t: &Triple<T>, trace: &mut Trace<T>) -> Result<Dispatched<T>> {
    if case1_check(t)? {
        let g = g_case1(t)?;
        let arm = add(&g, &t.a1)?;
        return Ok((Evaluation { g, tag: CaseTag::TwoVarLike, arms: vec![arm], epsilon: None }, None, None));
    }
    let cp = case_params(t)?;
    trace.case_params = Some(cp.clone());
    let nb = compute_nbar(t, &cp)?;
    trace.descent = nb.descent;
    let nbar = nb.nbar;
    if cp.alpha_bar_vs_theta() == Ordering::Less {
        let eval = if cp.increasing { g_inc_small(t, &nbar)? } else { g_dec_small(t, &cp, &nbar)? };
        return Ok((eval, Some(nbar), None));
    }
    let lv = compute_psi(t, &nbar)?;
    trace.psi_rows = lv.rows.clone();
    let edge = sub(&lv.phi.1, &T::one())?;
    let eval = if nbar == edge {
        g_psi_edge(t, &nbar, &lv)?
    } else {
        match lv.branch {
            Branch::Increasing => g_psi_inc(t, &nbar, &lv)?,
            Branch::Decreasing => g_psi_dec(t, &nbar, &lv)?,
            Branch::Balanced => return Err(Error::Invariant(format!("2φ̄_ψ = φ_ψ for {t:?}"))),
        }
    };
    Ok((eval, Some(nbar), Some(lv.psi)))
}
