//! Human-readable trace of one computation.

use std::fmt::Write;

use frobenius_core::modarith::rat_decimal;
use frobenius_core::reduce::ReductionStep;
use frobenius_core::{BigSolution, CaseTag};
use num_bigint::BigInt;

fn join(v: &[BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        format!("  {}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    for r in rows {
        out.push_str(&line(r.clone()));
    }
    out
}

pub fn format_trace(input: &[BigInt], chain: &[ReductionStep<BigInt>], sol: Option<&BigSolution>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "A = {{{}}}", join(input));
    for step in chain {
        let _ = write!(out, "{}: [{}] -> [{}]", step.kind.name(), join(&step.before), join(&step.after));
        if let frobenius_core::reduce::StepKind::Johnson { d, .. } = &step.kind {
            let _ = write!(out, " (d={d})");
        }
        out.push('\n');
    }
    let Some(sol) = sol else {
        return out;
    };
    let tr = &sol.trace;
    let [a1, a2, a3] = &tr.a;
    let _ = writeln!(out, "core triple ({a1}, {a2}, {a3})");
    let _ = writeln!(out, "a0 = {}, a0⁻¹ = {}", tr.a0, tr.a0_inv);
    let _ = writeln!(out, "case {}", sol.case_tag);
    let lhs = a3 + a2 * &tr.a0;
    let rhs = a1 * a2;
    let rel = if lhs > rhs { ">" } else { "<" };
    let _ = writeln!(out, "a3 + a2·a0 = {lhs} {rel} a1·a2 = {rhs}");

    if let Some(cp) = &tr.case_params {
        let two_a0: BigInt = &tr.a0 * 2;
        let dir = if cp.increasing { "<" } else { ">" };
        let _ = writeln!(out, "2a0 = {two_a0} {dir} a1 = {a1}");
        let _ = writeln!(out, "α = {}, ᾱ = {}, β = {}", cp.alpha, cp.alpha_bar, cp.beta);
        let _ = writeln!(out, "θ = a1·a3/β = {} ≈ {}", cp.theta, rat_decimal(&cp.theta, 4));
    }
    if let Some(d) = &tr.descent {
        let rows: Vec<Vec<String>> = d
            .levels
            .iter()
            .zip(&d.theta_chain)
            .enumerate()
            .map(|(i, ((vb, v), th))| {
                let j = if i + 1 == d.sigma { format!("{} (σ)", i + 1) } else { (i + 1).to_string() };
                vec![j, vb.to_string(), v.to_string(), rat_decimal(th, 4)]
            })
            .collect();
        out.push_str(&table(&["j", "ᾱ_j", "α_j", "θ_j"], &rows));
        let _ = writeln!(out, "σ={}", d.sigma);
    }
    if let Some(nbar) = &sol.nbar {
        let _ = writeln!(out, "n̄={nbar}");
    }
    if let Some(psi) = sol.psi {
        let rows: Vec<Vec<String>> = tr
            .psi_rows
            .iter()
            .enumerate()
            .map(|(i, (pb, p))| {
                let j = if i + 1 == psi { format!("{} (ψ)", i + 1) } else { (i + 1).to_string() };
                vec![j, pb.to_string(), p.to_string()]
            })
            .collect();
        out.push_str(&table(&["j", "φ̄_j", "φ_j"], &rows));
        let _ = writeln!(out, "ψ={psi}");
    }
    if let Some(e) = &sol.epsilon {
        let name = if sol.case_tag == CaseTag::PsiInc { "ε̇" } else { "ε̄" };
        let _ = writeln!(out, "{name}={e}");
    }
    let _ = writeln!(out, "g = max({}) - {a1} = {}", join(&tr.arms), sol.g);
    out
}
