//! Deterministic fuzz campaigns: seeded sampling of monomial ideals
//! containing a fixed power sequence, full lex-plus-powers verification on
//! each sample, and a spot-check suite for the shift transforms.
//!
//! Identical (config, seed) pairs produce identical reports, independent
//! of worker parallelism: each sample derives its generator from the seed
//! and its index, and results are aggregated in index order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::field::Field;
use crate::hilbert::hf_equal;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::order::{revlex_cmp_ideals, IdealOrdering};
use crate::powers::PowerSequence;
use crate::transforms::{is_shifted, shift, ShiftSpec};
use crate::walk::{lpp_verify, LppOptions};

#[derive(Debug, Clone, Serialize)]
pub struct FuzzConfig {
    pub n: usize,
    pub powers: Vec<u32>,
    pub samples: usize,
    pub max_extra_gens: usize,
    pub max_degree: u32,
    pub characteristics: Vec<u32>,
    /// Also run the shift-transform spot checks per sample.
    pub check_transforms: bool,
}

impl FuzzConfig {
    pub fn power_sequence(&self) -> PowerSequence {
        PowerSequence::new(self.n, self.powers.clone())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FuzzFailure {
    pub index: usize,
    pub ideal: MonomialIdeal,
    pub failed_checks: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FuzzReport {
    pub seed: u64,
    pub config: FuzzConfig,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<FuzzFailure>,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

fn sample_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(index as u64)))
}

/// A random monomial of the given degree: distribute the degree over the
/// variables one unit at a time.
pub fn random_monomial(rng: &mut impl Rng, n: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; n];
    for _ in 0..degree {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(exps)
}

/// A random monomial ideal containing `P`: the pure powers plus up to
/// `max_extra_gens` random generators of degree at most `max_degree`.
pub fn sample_ideal(rng: &mut impl Rng, config: &FuzzConfig) -> MonomialIdeal {
    let p = config.power_sequence();
    let mut gens = p.generators();
    let extra = rng.gen_range(0..=config.max_extra_gens);
    for _ in 0..extra {
        let d = rng.gen_range(1..=config.max_degree.max(1));
        gens.push(random_monomial(rng, config.n, d));
    }
    MonomialIdeal::new(config.n, gens)
}

fn transform_spot_checks(
    rng: &mut impl Rng,
    ideal: &MonomialIdeal,
    failures: &mut Vec<String>,
) {
    let n = ideal.nvars();
    if n < 2 {
        return;
    }
    let a = rng.gen_range(0..n - 1);
    let b = rng.gen_range(a + 1..n);
    let t = rng.gen_range(0..=3u32);
    let spec = ShiftSpec::new(a, b, t);
    let mut cap = ideal.max_gen_degree() + t + 4;

    let shifted = loop {
        match shift(ideal, spec, cap) {
            Ok(j) => break j,
            Err(crate::error::Error::StabilizationFailure { .. }) if cap < 40 => cap += 6,
            Err(e) => {
                failures.push(format!("shift({spec:?}) errored: {e}"));
                return;
            }
        }
    };
    if !is_shifted(&shifted, spec, cap) {
        failures.push(format!("shift output not ({a},{b},{t})-shifted"));
    }
    if !hf_equal(ideal, &shifted, cap) {
        failures.push(format!("shift({spec:?}) changed the Hilbert function"));
    }
    match revlex_cmp_ideals(&shifted, ideal, cap) {
        Ok(IdealOrdering::Greater | IdealOrdering::Equal) => {}
        other => failures.push(format!("shift({spec:?}) revlex comparison: {other:?}")),
    }

    // a^t * shift_t(I) = shift_0(a^t * I); the right-hand construction
    // needs t more degrees of room.
    let a_t = Monomial::var_pow(n, a, t);
    let lhs = shifted.multiply(&a_t);
    let rhs = shift(&ideal.multiply(&a_t), spec.with_t(0), cap + t);
    match rhs {
        Ok(rhs) => {
            if lhs != rhs {
                failures.push(format!("a^t shift identity failed for {spec:?}"));
            }
        }
        Err(e) => failures.push(format!("a^t shift identity errored: {e}")),
    }

    // Intersection and sum with the swapped ideal are shift-invariants.
    if t == 0 {
        let sigma_i = ideal.swap_vars(a, b);
        let sigma_j = shifted.swap_vars(a, b);
        if ideal.intersect(&sigma_i) != shifted.intersect(&sigma_j) {
            failures.push(format!("symmetry of intersections failed for {spec:?}"));
        }
        if ideal.sum(&sigma_i) != shifted.sum(&sigma_j) {
            failures.push(format!("symmetry of sums failed for {spec:?}"));
        }
    }
}

fn run_sample(seed: u64, index: usize, config: &FuzzConfig) -> (MonomialIdeal, Vec<String>) {
    let mut rng = sample_rng(seed, index);
    let ideal = sample_ideal(&mut rng, config);
    let p = config.power_sequence();
    let mut failures = Vec::new();
    for &c in &config.characteristics {
        // Automatic cap: lexifications of ideals whose powers do not cover
        // every variable may stabilize only in much higher degrees.
        let options = LppOptions {
            field: Field::new(c),
            cap: None,
            ..Default::default()
        };
        match lpp_verify(&ideal, &p, &options) {
            Ok(report) if report.pass => {}
            Ok(report) => failures.push(format!(
                "lpp_verify(char {c}): hf_equal={}, dominates={}, cancellation_feasible={}",
                report.hf_equal,
                report.betti_dominates,
                report.cancellation.is_feasible()
            )),
            Err(e) => failures.push(format!("lpp_verify(char {c}) errored: {e}")),
        }
    }
    if config.check_transforms {
        transform_spot_checks(&mut rng, &ideal, &mut failures);
    }
    (ideal, failures)
}

/// Run the campaign.  Samples execute in parallel on the ambient rayon
/// pool; the report is aggregated in sample order and is byte-identical
/// across reruns with the same seed and configuration.
pub fn fuzz_campaign(config: &FuzzConfig, seed: u64) -> FuzzReport {
    let results: Vec<(MonomialIdeal, Vec<String>)> = (0..config.samples)
        .into_par_iter()
        .map(|index| run_sample(seed, index, config))
        .collect();
    let mut failures = Vec::new();
    let mut passed = 0;
    for (index, (ideal, failed_checks)) in results.into_iter().enumerate() {
        if failed_checks.is_empty() {
            passed += 1;
        } else {
            failures.push(FuzzFailure { index, ideal, failed_checks });
        }
    }
    FuzzReport {
        seed,
        config: config.clone(),
        passed,
        failed: failures.len(),
        failures,
    }
}
