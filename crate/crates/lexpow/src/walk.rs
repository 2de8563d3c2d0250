//! The end-to-end pipeline: Borelification of a monomial-plus-powers
//! ideal through shifting and compression, and lex-plus-powers
//! verification with consecutive-cancellation certificates.
//!
//! Every accepted step carries certificates: the Hilbert function is
//! unchanged, the revlex order strictly increased, and (optionally) the
//! graded Betti numbers weakly increased.  A failed certificate is a hard
//! error; the underlying facts are theorems, so a failure can only mean an
//! implementation bug.

use std::time::Instant;

use serde::Serialize;

use crate::betti::{
    betti_dominates, betti_table, consecutive_cancellation, CancellationOutcome,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::{hf_equal, hilbert_function, lexify_mod_p};
use crate::ideal::MonomialIdeal;
use crate::order::{revlex_cmp_ideals, IdealOrdering};
use crate::powers::PowerSequence;
use crate::transforms::{
    compress_plus_p, is_compressed_plus_p, strong_shift_plus_p, PlusPStepKind,
};
use crate::BettiTable;

/// Default degree cap: max generator degree plus the total degree of the
/// finite pure powers, plus the stabilization margin.
///
/// When the powers cover every variable the quotient is Artinian with
/// socle degree below this bound, so the cap provably sees all minimal
/// generators of any equal-Hilbert-function ideal.
pub fn default_cap(ideal: &MonomialIdeal, p: &PowerSequence) -> u32 {
    ideal.max_gen_degree() + p.total_degree() + 2
}

#[derive(Debug, Clone, Copy)]
pub struct WalkOptions {
    /// Degree cap; computed from the input when absent.
    pub cap: Option<u32>,
    /// Verify Betti dominance on every step (expensive).
    pub check_betti: bool,
    /// Field for the optional Betti checks.
    pub field: Field,
    /// Guard for the walk loops; the revlex argument bounds them in theory.
    pub iteration_limit: usize,
}

impl Default for WalkOptions {
    fn default() -> Self {
        WalkOptions {
            cap: None,
            check_betti: false,
            field: Field::RATIONALS,
            iteration_limit: 100_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WalkStepKind {
    InitialShift,
    TShiftPlusP { t: u32 },
    CompressionPlusP,
}

#[derive(Debug, Clone, Serialize)]
pub struct StepCertificates {
    pub hf_equal: bool,
    /// Outcome of `revlex_cmp_ideals(after, before)`.
    pub revlex: String,
    /// Present only when the walk was asked to check Betti dominance.
    pub betti_dominates: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WalkStep {
    #[serde(flatten)]
    pub kind: WalkStepKind,
    /// The variable pair, 1-indexed as in the text format.
    pub pair: [String; 2],
    pub before: MonomialIdeal,
    pub after: MonomialIdeal,
    pub certificates: StepCertificates,
}

#[derive(Debug, Clone, Serialize)]
pub struct WalkTrace {
    pub steps: Vec<WalkStep>,
    pub outcome: MonomialIdeal,
    pub step_count: usize,
    pub cap: u32,
    pub wall_time_ms: u64,
}

fn ordering_name(o: IdealOrdering) -> String {
    match o {
        IdealOrdering::Equal => "equal",
        IdealOrdering::Greater => "greater",
        IdealOrdering::Less => "less",
        IdealOrdering::Incomparable => "incomparable",
    }
    .to_string()
}

fn record_step(
    kind: WalkStepKind,
    a: usize,
    b: usize,
    before: &MonomialIdeal,
    after: &MonomialIdeal,
    cap: u32,
    options: &WalkOptions,
) -> Result<WalkStep> {
    let hf_ok = hf_equal(before, after, cap);
    if !hf_ok {
        return Err(Error::CertificateFailure {
            step: format!("{kind:?} on pair (x{}, x{})", a + 1, b + 1),
            detail: format!("Hilbert function changed: {before:?} -> {after:?}"),
        });
    }
    let revlex = revlex_cmp_ideals(after, before, cap)?;
    let betti_ok = if options.check_betti {
        let (before_table, _) = betti_table(before, options.field);
        let (after_table, _) = betti_table(after, options.field);
        Some(betti_dominates(&after_table, &before_table))
    } else {
        None
    };
    let accepted = revlex == IdealOrdering::Greater && betti_ok.unwrap_or(true);
    if !accepted {
        return Err(Error::CertificateFailure {
            step: format!("{kind:?} on pair (x{}, x{})", a + 1, b + 1),
            detail: format!(
                "hf_equal={hf_ok}, revlex={}, betti_dominates={betti_ok:?}; \
                 before={before:?}, after={after:?}",
                ordering_name(revlex)
            ),
        });
    }
    Ok(WalkStep {
        kind,
        pair: [format!("x{}", a + 1), format!("x{}", b + 1)],
        before: before.without_cache(),
        after: after.without_cache(),
        certificates: StepCertificates {
            hf_equal: hf_ok,
            revlex: ordering_name(revlex),
            betti_dominates: betti_ok,
        },
    })
}

/// Walk `I` to a Borel-plus-P ideal: while some pair `(a, b)` is not
/// compressed-plus-P, strongly shift for that pair, then compress; both
/// phases preserve the Hilbert function and strictly increase the revlex
/// order, which forces termination.
///
/// With `options.cap = None` the cap starts at [`default_cap`] and is
/// raised automatically if an intermediate shift or compression fails to
/// stabilize; an explicitly pinned cap is never exceeded and the failure
/// propagates instead.
pub fn borelify_plus_p(
    ideal: &MonomialIdeal,
    p: &PowerSequence,
    options: &WalkOptions,
) -> Result<(MonomialIdeal, WalkTrace)> {
    let mut cap = options.cap.unwrap_or_else(|| default_cap(ideal, p));
    let mut attempts = 0;
    loop {
        match borelify_plus_p_at(ideal, p, options, cap) {
            Err(Error::StabilizationFailure { .. }) if options.cap.is_none() && attempts < 6 => {
                attempts += 1;
                cap += (cap / 2).max(4);
            }
            other => return other,
        }
    }
}

fn borelify_plus_p_at(
    ideal: &MonomialIdeal,
    p: &PowerSequence,
    options: &WalkOptions,
    cap: u32,
) -> Result<(MonomialIdeal, WalkTrace)> {
    let started = Instant::now();
    for i in 0..p.rank() {
        let power = p.generator(i).unwrap();
        if !ideal.contains(&power) {
            return Err(Error::MissingPurePower { power: power.to_string() });
        }
    }
    let n = ideal.nvars();
    let mut current = ideal.expanded(cap);
    let mut steps: Vec<WalkStep> = Vec::new();

    for _ in 0..options.iteration_limit {
        let pair = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| !is_compressed_plus_p(&current, p, a, b, cap));
        let Some((a, b)) = pair else {
            let trace = WalkTrace {
                step_count: steps.len(),
                steps,
                outcome: current.without_cache(),
                cap,
                wall_time_ms: started.elapsed().as_millis() as u64,
            };
            return Ok((current.without_cache(), trace));
        };

        let (strong, sub_steps) =
            strong_shift_plus_p(&current, p, a, b, cap, options.iteration_limit)?;
        for sub in sub_steps {
            let kind = match sub.kind {
                PlusPStepKind::InitialShift => WalkStepKind::InitialShift,
                PlusPStepKind::TShift { t } => WalkStepKind::TShiftPlusP { t },
            };
            steps.push(record_step(kind, a, b, &current, &sub.output, cap, options)?);
            current = sub.output;
        }
        debug_assert_eq!(current, strong);

        let compressed = compress_plus_p(&current, p, a, b, cap)?;
        if compressed != current {
            steps.push(record_step(
                WalkStepKind::CompressionPlusP,
                a,
                b,
                &current,
                &compressed,
                cap,
                options,
            )?);
            current = compressed;
        }
    }
    Err(Error::IterationLimit {
        what: "borelify_plus_p",
        limit: options.iteration_limit,
    })
}

#[derive(Debug, Clone, Copy)]
pub struct LppOptions {
    pub field: Field,
    pub cap: Option<u32>,
    /// Also run the Borelification walk and embed its trace.
    pub with_walk: bool,
    /// Check Betti dominance per walk step (implies the walk).
    pub walk_check_betti: bool,
    pub iteration_limit: usize,
}

impl Default for LppOptions {
    fn default() -> Self {
        LppOptions {
            field: Field::RATIONALS,
            cap: None,
            with_walk: false,
            walk_check_betti: false,
            iteration_limit: 100_000,
        }
    }
}

/// Full verification report for one instance.  On failure the report keeps
/// the complete state (both ideals, both tables): a failed verdict is a
/// counterexample candidate, and since the statement is a theorem it
/// indicates an implementation bug.
#[derive(Debug, Clone, Serialize)]
pub struct LppReport {
    pub ring: usize,
    pub characteristic: u32,
    pub cap: u32,
    pub input: MonomialIdeal,
    pub lex_plus_p: MonomialIdeal,
    pub hf_equal: bool,
    pub betti_dominates: bool,
    pub cancellation: CancellationOutcome,
    pub input_table: BettiTable,
    pub lex_table: BettiTable,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walk: Option<WalkTrace>,
    pub pass: bool,
}

/// Verify the lex-plus-powers inequality on one instance: construct the
/// lex-plus-P ideal with the Hilbert function of `I`, compare Betti tables
/// entrywise, and check the consecutive-cancellation certificate.
///
/// The comparison is only meaningful when the lexification is the whole
/// lex-plus-P ideal, not a truncation, so its generators must stay clear
/// of the top margin degrees.  An automatic cap grows until they do (lex
/// ideals of ideals with few pure powers can acquire generators in far
/// higher degrees than their source); a pinned cap that truncates is an
/// error, never a spurious verdict.
pub fn lpp_verify(
    ideal: &MonomialIdeal,
    p: &PowerSequence,
    options: &LppOptions,
) -> Result<LppReport> {
    use crate::transforms::STABILIZATION_MARGIN;
    for i in 0..p.rank() {
        let power = p.generator(i).unwrap();
        if !ideal.contains(&power) {
            return Err(Error::MissingPurePower { power: power.to_string() });
        }
    }
    let mut cap = options.cap.unwrap_or_else(|| default_cap(ideal, p));
    let mut attempts = 0;
    let lex = loop {
        let hf = hilbert_function(ideal, cap);
        let lex = lexify_mod_p(&hf, p)?;
        if lex.max_gen_degree() + STABILIZATION_MARGIN <= cap {
            break lex;
        }
        if options.cap.is_some() || attempts >= 8 {
            return Err(Error::StabilizationFailure {
                what: "lexify_mod_p",
                degree: lex.max_gen_degree(),
                cap,
            });
        }
        attempts += 1;
        cap += (cap / 2).max(4);
    };
    let hf_ok = hf_equal(ideal, &lex, cap);

    let (input_table, _) = betti_table(ideal, options.field);
    let (lex_table, _) = betti_table(&lex, options.field);
    let dominates = betti_dominates(&lex_table, &input_table);
    let cancellation = consecutive_cancellation(&lex_table, &input_table);

    let walk = if options.with_walk || options.walk_check_betti {
        // Hand the walk the caller's cap choice, not the resolved one, so
        // an automatic cap can still grow if a transform needs room.
        let walk_options = WalkOptions {
            cap: options.cap,
            check_betti: options.walk_check_betti,
            field: options.field,
            iteration_limit: options.iteration_limit,
        };
        Some(borelify_plus_p(ideal, p, &walk_options)?.1)
    } else {
        None
    };

    let pass = hf_ok && dominates && cancellation.is_feasible();
    Ok(LppReport {
        ring: ideal.nvars(),
        characteristic: options.field.characteristic(),
        cap,
        input: ideal.without_cache(),
        lex_plus_p: lex.without_cache(),
        hf_equal: hf_ok,
        betti_dominates: dominates,
        cancellation,
        input_table,
        lex_table,
        walk,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use crate::transforms::is_borel_plus_p;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn plus(p: &PowerSequence, gens: &[&[u32]]) -> MonomialIdeal {
        let extra = MonomialIdeal::new(p.nvars(), gens.iter().map(|g| m(g)).collect());
        p.to_ideal().sum(&extra)
    }

    #[test]
    fn walk_on_known_instance() {
        let p = PowerSequence::new(3, vec![2, 2, 2]);
        let i = plus(&p, &[&[0, 1, 1]]);
        let options = WalkOptions { check_betti: true, ..Default::default() };
        let (b, trace) = borelify_plus_p(&i, &p, &options).unwrap();
        let expected = plus(&p, &[&[1, 1, 0]]);
        assert_eq!(b, expected);
        assert!(trace.step_count > 0);
        assert!(is_borel_plus_p(&b, &p, trace.cap));
        for step in &trace.steps {
            assert!(step.certificates.hf_equal);
            assert_eq!(step.certificates.revlex, "greater");
            assert_eq!(step.certificates.betti_dominates, Some(true));
        }
    }

    #[test]
    fn walk_is_identity_on_borel_plus_p() {
        let p = PowerSequence::new(3, vec![2, 2, 2]);
        let b = plus(&p, &[&[1, 1, 0]]);
        let (out, trace) = borelify_plus_p(&b, &p, &WalkOptions::default()).unwrap();
        assert_eq!(out, b);
        assert_eq!(trace.step_count, 0);

        let (out_p, trace_p) =
            borelify_plus_p(&p.to_ideal(), &p, &WalkOptions::default()).unwrap();
        assert_eq!(out_p, p.to_ideal());
        assert_eq!(trace_p.step_count, 0);
    }

    #[test]
    fn lpp_verify_symmetric_instance() {
        // I = P + (x2x3) and L + P = P + (x1x2) are swaps of one another,
        // so the tables coincide and every cancellation is zero.
        let p = PowerSequence::new(3, vec![2, 2, 2]);
        let i = plus(&p, &[&[0, 1, 1]]);
        let report = lpp_verify(&i, &p, &LppOptions::default()).unwrap();
        assert!(report.pass);
        assert!(report.hf_equal);
        assert!(report.betti_dominates);
        assert_eq!(report.input_table, report.lex_table);
        match &report.cancellation {
            CancellationOutcome::Feasible(c) => assert!(c.is_empty()),
            other => panic!("expected trivial certificate, got {other:?}"),
        }
    }

    #[test]
    fn lpp_verify_lex_input_is_equality() {
        let p = PowerSequence::new(2, vec![2, 2]);
        let i = plus(&p, &[&[1, 1]]);
        let report = lpp_verify(&i, &p, &LppOptions::default()).unwrap();
        assert!(report.pass);
        assert_eq!(report.lex_plus_p, i);
    }

    #[test]
    fn lpp_verify_rejects_missing_powers() {
        let p = PowerSequence::new(2, vec![2, 2]);
        let i = MonomialIdeal::new(2, vec![m(&[2, 0])]);
        assert!(lpp_verify(&i, &p, &LppOptions::default()).is_err());
    }
}
