//! Ideal transforms: generalized combinatorial shifting, A-compression,
//! polarization, power deletion, and their plus-powers composites.
//!
//! Degreewise constructions are computed up to a caller-supplied cap and
//! certified: the slices must be closed under multiplication by variables,
//! and the top margin degrees must introduce no new minimal generators
//! (stabilization).  A stabilization failure means the cap was too small
//! and is reported as an error, never guessed around.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{hf_equal, hilbert_function, lexify};
use crate::ideal::{minimal_gens_of_slices, MonomialIdeal};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::order::{lex_cmp, revlex_cmp_ideals, IdealOrdering};
use crate::powers::PowerSequence;

/// Number of top degrees that must be generator-free for a degreewise
/// construction to count as stabilized.
pub const STABILIZATION_MARGIN: u32 = 2;

/// Parameters of the shift: two variables with `a` before `b` in the lex
/// order (`a < b` as indices), and the shift level `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShiftSpec {
    pub a: usize,
    pub b: usize,
    pub t: u32,
}

impl ShiftSpec {
    pub fn new(a: usize, b: usize, t: u32) -> Self {
        assert!(a < b, "shift requires a before b in the lex order");
        ShiftSpec { a, b, t }
    }

    pub fn with_t(self, t: u32) -> Self {
        ShiftSpec { t, ..self }
    }
}

/// For `m = f a^p b^q` (f free of a, b), the partner monomial obtained by
/// exchanging the roles of `p` and `q - t`: `f a^{q-t} b^{p+t}`.
/// Only meaningful when `q >= t`.
fn shift_partner(m: &Monomial, spec: ShiftSpec) -> Monomial {
    let p = m.exponent(spec.a);
    let q = m.exponent(spec.b);
    debug_assert!(q >= spec.t);
    let mut exps = m.exponents().to_vec();
    exps[spec.a] = q - spec.t;
    exps[spec.b] = p + spec.t;
    Monomial::new(exps)
}

/// Membership of `m` in `shift_{a,b,t}(I)`, by the four-case rule on the
/// decomposition `m = f a^p b^q`:
/// - `q < t`: kept iff `m` is in `I`;
/// - `p = q - t`: kept iff `m` is in `I`;
/// - `p > q - t` (the lex-larger slot): kept iff `m` or its partner is in `I`;
/// - `p < q - t` (the lex-smaller slot): kept iff both are in `I`.
fn shift_member(ideal: &MonomialIdeal, m: &Monomial, spec: ShiftSpec) -> bool {
    let p = m.exponent(spec.a);
    let q = m.exponent(spec.b);
    if q < spec.t {
        return ideal.contains(m);
    }
    match p.cmp(&(q - spec.t)) {
        std::cmp::Ordering::Equal => ideal.contains(m),
        std::cmp::Ordering::Greater => {
            ideal.contains(m) || ideal.contains(&shift_partner(m, spec))
        }
        std::cmp::Ordering::Less => {
            ideal.contains(m) && ideal.contains(&shift_partner(m, spec))
        }
    }
}

/// Verify the two degreewise certificates and assemble the result.
///
/// Closure (`S_1 * J_{d-1} ⊆ J_d`) must hold for any construction claiming
/// to produce an ideal truncation, so its failure is a panic, not an error.
/// Stabilization failures are the caller's cap being too small.
fn ideal_from_certified_slices(
    what: &'static str,
    n: usize,
    cap: u32,
    slices: Vec<Vec<Monomial>>,
) -> Result<MonomialIdeal> {
    use std::collections::HashSet;
    for d in 1..=cap {
        let set: HashSet<&Monomial> = slices[d as usize].iter().collect();
        for m in &slices[d as usize - 1] {
            for i in 0..n {
                assert!(
                    set.contains(&m.mul_var(i)),
                    "{what}: degreewise sets are not an ideal at degree {d}"
                );
            }
        }
    }
    let gens = minimal_gens_of_slices(n, &slices);
    for g in &gens {
        if g.degree() + STABILIZATION_MARGIN > cap {
            return Err(Error::StabilizationFailure { what, degree: g.degree(), cap });
        }
    }
    Ok(MonomialIdeal::new(n, gens).with_expansion(cap, slices))
}

/// The shift `shift_{a,b,t}(I)`, computed degreewise up to `cap`.
///
/// Requires `cap` to exceed the generator degrees of `I` by the
/// stabilization margin; fails if the output still acquires minimal
/// generators in the top margin degrees.
pub fn shift(ideal: &MonomialIdeal, spec: ShiftSpec, cap: u32) -> Result<MonomialIdeal> {
    let needed = ideal.max_gen_degree() + STABILIZATION_MARGIN;
    if cap < needed {
        return Err(Error::InsufficientCap { what: "shift", cap, needed });
    }
    let n = ideal.nvars();
    let slices: Vec<Vec<Monomial>> = (0..=cap)
        .map(|d| {
            monomials_of_degree(n, d)
                .into_iter()
                .filter(|m| shift_member(ideal, m, spec))
                .collect()
        })
        .collect();
    ideal_from_certified_slices("shift", n, cap, slices)
}

/// Is `I` `(a,b,t)`-shifted: whenever `f a^s b^{l+t}` lies in `I` with
/// `s < l`, so does `f a^l b^{s+t}`.
pub fn is_shifted(ideal: &MonomialIdeal, spec: ShiftSpec, cap: u32) -> bool {
    let e = ideal.expanded(cap);
    for d in 0..=cap {
        for m in e.degree_slice(d) {
            let p = m.exponent(spec.a);
            let q = m.exponent(spec.b);
            if q >= spec.t && p < q - spec.t && !ideal.contains(&shift_partner(m, spec)) {
                return false;
            }
        }
    }
    true
}

/// `(a,b,t)`-shifted for every `t >= 0`.  Levels `t >= cap` are vacuous
/// below the cap, so only `t < cap` is tested.
pub fn is_strongly_shifted(ideal: &MonomialIdeal, a: usize, b: usize, cap: u32) -> bool {
    (0..cap).all(|t| is_shifted(ideal, ShiftSpec::new(a, b, t), cap))
}

/// Delete the pure power `b^{e_b}` from the minimal generators; the ideal
/// is unchanged when `b^{e_b}` is not a minimal generator.
pub fn delete_power(ideal: &MonomialIdeal, b: usize, e_b: u32) -> MonomialIdeal {
    let power = Monomial::var_pow(ideal.nvars(), b, e_b);
    let gens: Vec<Monomial> = ideal
        .gens()
        .iter()
        .filter(|g| **g != power)
        .cloned()
        .collect();
    if gens.len() == ideal.gens().len() {
        return ideal.without_cache();
    }
    MonomialIdeal::new(ideal.nvars(), gens)
}

/// The slice ideal `V_f` of the decomposition `I = ⊕_f f·V_f`, as an
/// ideal of `k[A]` in compact coordinates: generators of `(I : f)`
/// supported inside `A`, with exponents re-indexed along `vars`.
fn slice_ideal(ideal: &MonomialIdeal, f: &Monomial, vars: &[usize]) -> MonomialIdeal {
    let colon = ideal.colon(f);
    let gens = colon
        .gens()
        .iter()
        .filter(|g| g.support().iter().all(|v| vars.contains(v)))
        .map(|g| Monomial::new(vars.iter().map(|&v| g.exponent(v)).collect()))
        .collect();
    MonomialIdeal::new(vars.len(), gens)
}

/// Monomials in the complement variables of `A`, degree `d`, embedded in
/// the ambient ring.
fn complement_monomials(n: usize, a_vars: &[usize], d: u32) -> Vec<Monomial> {
    let comp: Vec<usize> = (0..n).filter(|v| !a_vars.contains(v)).collect();
    monomials_of_degree(comp.len(), d)
        .into_iter()
        .map(|c| {
            let mut exps = vec![0; n];
            for (k, &v) in comp.iter().enumerate() {
                exps[v] = c.exponent(k);
            }
            Monomial::new(exps)
        })
        .collect()
}

/// The A-compression of `I`: each slice `V_f` over the complement
/// monomials `f` is replaced by the lex ideal of `k[A]` with the same
/// Hilbert function, and the slices are reassembled degreewise.
pub fn compress(ideal: &MonomialIdeal, a_vars: &[usize], cap: u32) -> Result<MonomialIdeal> {
    let n = ideal.nvars();
    let mut vars = a_vars.to_vec();
    vars.sort_unstable();
    vars.dedup();
    assert!(!vars.is_empty() && vars.iter().all(|&v| v < n), "bad variable subset");
    let needed = ideal.max_gen_degree() + STABILIZATION_MARGIN;
    if cap < needed {
        return Err(Error::InsufficientCap { what: "compress", cap, needed });
    }
    let mut slices: Vec<Vec<Monomial>> = vec![Vec::new(); cap as usize + 1];
    for fd in 0..=cap {
        for f in complement_monomials(n, &vars, fd) {
            let v_f = slice_ideal(ideal, &f, &vars);
            let w_f = lexify(&hilbert_function(&v_f, cap - fd), vars.len())?;
            for dd in 0..=cap - fd {
                for u in w_f.degree_slice(dd) {
                    let mut exps = f.exponents().to_vec();
                    for (k, &v) in vars.iter().enumerate() {
                        exps[v] += u.exponent(k);
                    }
                    slices[(fd + dd) as usize].push(Monomial::new(exps));
                }
            }
        }
    }
    for slice in &mut slices {
        slice.sort_by(|x, y| lex_cmp(y, x));
    }
    ideal_from_certified_slices("compress", n, cap, slices)
}

/// Is every slice `V_f` a lex ideal of `k[A]` (degreewise initial lex
/// segments)?
pub fn is_compressed(ideal: &MonomialIdeal, a_vars: &[usize], cap: u32) -> bool {
    let n = ideal.nvars();
    let mut vars = a_vars.to_vec();
    vars.sort_unstable();
    vars.dedup();
    for fd in 0..=cap {
        for f in complement_monomials(n, &vars, fd) {
            let v_f = slice_ideal(ideal, &f, &vars).expanded(cap - fd);
            for dd in 0..=cap - fd {
                let slice = v_f.degree_slice(dd);
                let all = monomials_of_degree(vars.len(), dd);
                if slice != &all[..slice.len()] {
                    return false;
                }
            }
        }
    }
    true
}

/// First violation of the Borel exchange property among the monomials of
/// degree `<= cap`: a pair `(m, m·x_i/x_j)` with `m` in the ideal, `i < j`,
/// and the exchange absent.  `None` means Borel up to the cap, which
/// certifies Borelness outright once the cap covers the generators.
pub fn borel_violation(
    ideal: &MonomialIdeal,
    cap: u32,
) -> Option<(Monomial, Monomial)> {
    let e = ideal.expanded(cap);
    for d in 0..=cap {
        for m in e.degree_slice(d) {
            for j in m.support() {
                let down = m.div_var(j).unwrap();
                for i in 0..j {
                    let exchanged = down.mul_var(i);
                    if !ideal.contains(&exchanged) {
                        return Some((m.clone(), exchanged));
                    }
                }
            }
        }
    }
    None
}

pub fn is_borel(ideal: &MonomialIdeal, cap: u32) -> bool {
    borel_violation(ideal, cap).is_none()
}

/// The smallest Borel ideal containing `I`: close the generators under the
/// exchange `u -> u·x_i/x_j` for `i < j`.
pub fn borel_closure(ideal: &MonomialIdeal) -> MonomialIdeal {
    use std::collections::HashSet;
    let n = ideal.nvars();
    let mut seen: HashSet<Monomial> = ideal.gens().iter().cloned().collect();
    let mut queue: Vec<Monomial> = ideal.gens().to_vec();
    while let Some(u) = queue.pop() {
        for j in u.support() {
            let down = u.div_var(j).unwrap();
            for i in 0..j {
                let v = down.mul_var(i);
                if seen.insert(v.clone()) {
                    queue.push(v);
                }
            }
        }
    }
    MonomialIdeal::new(n, seen.into_iter().collect())
}

/// The polarization of `I` in the variable `b`: with `s` the largest
/// exponent of `b` among the generators, the ambient ring grows by `s - 1`
/// new variables (ordered after the existing ones) and each generator
/// `u = g·b^e` maps to `g·b·c_1···c_{e-1}`.
pub fn polarize(ideal: &MonomialIdeal, b: usize) -> MonomialIdeal {
    let n = ideal.nvars();
    let s = ideal
        .gens()
        .iter()
        .map(|g| g.exponent(b))
        .max()
        .unwrap_or(0);
    if s <= 1 {
        return ideal.without_cache();
    }
    let new_n = n + (s as usize - 1);
    let gens = ideal
        .gens()
        .iter()
        .map(|g| {
            let e = g.exponent(b);
            let mut exps = g.exponents().to_vec();
            exps.resize(new_n, 0);
            if e >= 1 {
                exps[b] = 1;
                for k in 0..(e as usize - 1) {
                    exps[n + k] = 1;
                }
            }
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::new(new_n, gens)
}

fn require_contains_p(ideal: &MonomialIdeal, p: &PowerSequence) -> Result<()> {
    for i in 0..p.rank() {
        let power = p.generator(i).unwrap();
        if !ideal.contains(&power) {
            return Err(Error::MissingPurePower { power: power.to_string() });
        }
    }
    Ok(())
}

/// Is `I` `(a,b,t)`-shifted-plus-P, tested through the deletion of
/// `b^{e_b}`: `I` is shifted-plus-P exactly when `I'` is shifted.
pub fn is_shifted_plus_p(
    ideal: &MonomialIdeal,
    p: &PowerSequence,
    spec: ShiftSpec,
    cap: u32,
) -> bool {
    let reduced = match p.finite_power(spec.b) {
        Some(e_b) => delete_power(ideal, spec.b, e_b),
        None => ideal.clone(),
    };
    is_shifted(&reduced, spec, cap)
}

/// Is `I` `{a,b}`-compressed-plus-P, tested through the deletion of
/// `b^{e_b}`.
pub fn is_compressed_plus_p(
    ideal: &MonomialIdeal,
    p: &PowerSequence,
    a: usize,
    b: usize,
    cap: u32,
) -> bool {
    let reduced = match p.finite_power(b) {
        Some(e_b) => delete_power(ideal, b, e_b),
        None => ideal.clone(),
    };
    is_compressed(&reduced, &[a, b], cap)
}

/// Borel-plus-P, operationally: `{a,b}`-compressed-plus-P for every pair.
pub fn is_borel_plus_p(ideal: &MonomialIdeal, p: &PowerSequence, cap: u32) -> bool {
    let n = ideal.nvars();
    (0..n).all(|a| (a + 1..n).all(|b| is_compressed_plus_p(ideal, p, a, b, cap)))
}

fn certify_plus_p_step(
    step: &'static str,
    before: &MonomialIdeal,
    after: &MonomialIdeal,
    p: &PowerSequence,
    cap: u32,
) -> Result<()> {
    if !hf_equal(before, after, cap) {
        return Err(Error::CertificateFailure {
            step: step.into(),
            detail: format!("Hilbert function changed: {before:?} -> {after:?}"),
        });
    }
    if require_contains_p(after, p).is_err() {
        return Err(Error::CertificateFailure {
            step: step.into(),
            detail: format!("output no longer contains P: {after:?}"),
        });
    }
    match revlex_cmp_ideals(after, before, cap)? {
        IdealOrdering::Greater | IdealOrdering::Equal => Ok(()),
        order => Err(Error::CertificateFailure {
            step: step.into(),
            detail: format!("revlex order regressed ({order:?}): {before:?} -> {after:?}"),
        }),
    }
}

/// One plus-powers shift step: with `I` `(a,b,t)`-shifted-plus-P, return
/// `J = shift_{a,b,t+1}(I') + P`, which is `(a,b,t+1)`-shifted-plus-P, has
/// the same Hilbert function, and is revlex greater or equal.
///
/// When `P` carries no power of `b` the step degenerates to the plain
/// shift of the whole ideal with `P` re-added.
pub fn tshift_plus_p(
    ideal: &MonomialIdeal,
    p: &PowerSequence,
    spec: ShiftSpec,
    cap: u32,
) -> Result<MonomialIdeal> {
    require_contains_p(ideal, p)?;
    if !is_shifted_plus_p(ideal, p, spec, cap) {
        return Err(Error::Precondition(format!(
            "ideal is not ({},{},{})-shifted-plus-P",
            spec.a + 1,
            spec.b + 1,
            spec.t
        )));
    }
    let reduced = match p.finite_power(spec.b) {
        Some(e_b) => delete_power(ideal, spec.b, e_b),
        None => ideal.clone(),
    };
    let shifted = shift(&reduced, spec.with_t(spec.t + 1), cap)?;
    let result = shifted.sum(&p.to_ideal());
    certify_plus_p_step("tshift_plus_p", ideal, &result, p, cap)?;
    Ok(result)
}

/// One plus-powers compression step: the `{a,b}`-compression of `I'` with
/// `P` re-added.  Hilbert preservation and revlex monotonicity hold for
/// strongly-shifted-plus-P input and are certified.
pub fn compress_plus_p(
    ideal: &MonomialIdeal,
    p: &PowerSequence,
    a: usize,
    b: usize,
    cap: u32,
) -> Result<MonomialIdeal> {
    require_contains_p(ideal, p)?;
    let reduced = match p.finite_power(b) {
        Some(e_b) => delete_power(ideal, b, e_b),
        None => ideal.clone(),
    };
    let compressed = compress(&reduced, &[a, b], cap)?;
    let result = compressed.sum(&p.to_ideal());
    certify_plus_p_step("compress_plus_p", ideal, &result, p, cap)?;
    Ok(result)
}

/// A recorded intermediate of [`strong_shift_plus_p`].
#[derive(Debug, Clone)]
pub struct PlusPStep {
    pub kind: PlusPStepKind,
    pub output: MonomialIdeal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PlusPStepKind {
    /// Plain `shift_{a,b,0}` of the whole ideal.
    InitialShift,
    /// `tshift_plus_p` applied at precondition level `t`.
    TShift { t: u32 },
}

/// Produce an `(a,b)`-strongly shifted-plus-P ideal from `I`: first the
/// plain shift, then repeatedly fix the smallest level `t` at which the
/// ideal fails to be `(a,b,t)`-shifted-plus-P.  Each fixing step strictly
/// increases the revlex order, which bounds the loop; the iteration limit
/// is a hard guard against implementation bugs.
pub fn strong_shift_plus_p(
    ideal: &MonomialIdeal,
    p: &PowerSequence,
    a: usize,
    b: usize,
    cap: u32,
    limit: usize,
) -> Result<(MonomialIdeal, Vec<PlusPStep>)> {
    require_contains_p(ideal, p)?;
    let mut steps = Vec::new();
    let mut current = ideal.expanded(cap);

    let shifted = shift(&current, ShiftSpec::new(a, b, 0), cap)?;
    certify_plus_p_step("strong_shift_plus_p/initial", &current, &shifted, p, cap)?;
    if shifted != current {
        steps.push(PlusPStep { kind: PlusPStepKind::InitialShift, output: shifted.clone() });
    }
    current = shifted;

    for _ in 0..limit {
        let bad_t =
            (0..cap).find(|&t| !is_shifted_plus_p(&current, p, ShiftSpec::new(a, b, t), cap));
        let Some(t) = bad_t else {
            return Ok((current, steps));
        };
        let (kind, next) = if t == 0 {
            // Containing P, plain 0-shiftedness and 0-shiftedness-plus-P
            // coincide; fix with the plain shift of the whole ideal.
            let next = shift(&current, ShiftSpec::new(a, b, 0), cap)?;
            certify_plus_p_step("strong_shift_plus_p/reshift", &current, &next, p, cap)?;
            (PlusPStepKind::InitialShift, next)
        } else {
            let spec = ShiftSpec::new(a, b, t - 1);
            (PlusPStepKind::TShift { t: t - 1 }, tshift_plus_p(&current, p, spec, cap)?)
        };
        // A violated level was fixed, so the step cannot be a no-op; the
        // strict revlex increase is what terminates the loop.
        if revlex_cmp_ideals(&next, &current, cap)? != IdealOrdering::Greater {
            return Err(Error::CertificateFailure {
                step: "strong_shift_plus_p".into(),
                detail: format!("step at t = {t} did not strictly increase revlex order"),
            });
        }
        steps.push(PlusPStep { kind, output: next.clone() });
        current = next;
    }
    Err(Error::IterationLimit { what: "strong_shift_plus_p", limit })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| m(g)).collect())
    }

    #[test]
    fn shift_moves_pure_power() {
        // shift_{x,y,0}((y^2)) = (x^2).
        let i = ideal(2, &[&[0, 2]]);
        let j = shift(&i, ShiftSpec::new(0, 1, 0), 6).unwrap();
        assert_eq!(j.gens(), &[m(&[2, 0])]);
    }

    #[test]
    fn shift_fixes_pure_powers_ideal() {
        // P is (a,b)-shifted, hence a fixed point of the plain shift.  For
        // t > 0 this fails: shift_{x,y,1} trades y^2 for xy.
        let p = PowerSequence::new(3, vec![2, 2, 2]).to_ideal();
        let j = shift(&p, ShiftSpec::new(0, 1, 0), 7).unwrap();
        assert_eq!(j, p);
        let j1 = shift(&p, ShiftSpec::new(0, 1, 1), 7).unwrap();
        assert!(j1.contains(&m(&[1, 1, 0])));
        assert!(!j1.contains(&m(&[0, 2, 0])));
        assert!(crate::hilbert::hf_equal(&j1, &p, 7));
    }

    #[test]
    fn shift_keeps_symmetric_pair() {
        let i = ideal(2, &[&[1, 1]]);
        let j = shift(&i, ShiftSpec::new(0, 1, 0), 6).unwrap();
        assert_eq!(j, i);
    }

    #[test]
    fn shiftedness_predicates() {
        assert!(is_shifted(&ideal(2, &[&[2, 0]]), ShiftSpec::new(0, 1, 0), 6));
        assert!(!is_shifted(&ideal(2, &[&[0, 2]]), ShiftSpec::new(0, 1, 0), 6));
        // P is (a,b)-shifted but not (a,b,1)-shifted (y^2 lacks the partner
        // xy); only P with the power of b deleted is strongly shifted.
        let p = PowerSequence::new(2, vec![2, 2]);
        let pid = p.to_ideal();
        assert!(is_shifted(&pid, ShiftSpec::new(0, 1, 0), 6));
        assert!(!is_shifted(&pid, ShiftSpec::new(0, 1, 1), 6));
        assert!(!is_strongly_shifted(&pid, 0, 1, 6));
        assert!(is_strongly_shifted(&delete_power(&pid, 1, 2), 0, 1, 6));
        for t in 0..6 {
            assert!(is_shifted_plus_p(&pid, &p, ShiftSpec::new(0, 1, t), 6));
        }
    }

    #[test]
    fn zero_and_unit_ideals_pass_through() {
        let zero = MonomialIdeal::zero(2);
        let unit = MonomialIdeal::unit(2);
        let spec = ShiftSpec::new(0, 1, 1);
        assert!(shift(&zero, spec, 4).unwrap().is_zero());
        assert!(shift(&unit, spec, 4).unwrap().is_unit());
        assert!(compress(&zero, &[0, 1], 4).unwrap().is_zero());
        assert!(compress(&unit, &[0, 1], 4).unwrap().is_unit());
        assert!(is_borel(&zero, 3) && is_borel(&unit, 3));
        assert!(polarize(&zero, 0).is_zero());
    }

    #[test]
    fn shift_insufficient_cap_is_an_error() {
        let i = ideal(2, &[&[0, 4]]);
        assert!(matches!(
            shift(&i, ShiftSpec::new(0, 1, 0), 3),
            Err(Error::InsufficientCap { .. })
        ));
    }

    #[test]
    fn compress_examples() {
        // compress((xy), {x,y}) = (x^2).
        let i = ideal(2, &[&[1, 1]]);
        let t = compress(&i, &[0, 1], 6).unwrap();
        assert_eq!(t.gens(), &[m(&[2, 0])]);

        // A lex ideal is fixed by every pair compression.
        let lexi = ideal(2, &[&[2, 0], &[1, 2]]);
        assert_eq!(compress(&lexi, &[0, 1], 8).unwrap(), lexi);

        // compress((x2x3), {x1,x2}) = (x1x3): slices by powers of x3.
        let j = ideal(3, &[&[0, 1, 1]]);
        let c = compress(&j, &[0, 1], 7).unwrap();
        assert_eq!(c.gens(), &[m(&[1, 0, 1])]);
    }

    #[test]
    fn compressedness_and_borel() {
        let b = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert!(is_compressed(&b, &[0, 1], 6));
        assert!(is_borel(&b, 4));

        // (x2) is not Borel: x2 in I, x1 not.
        let not = ideal(2, &[&[0, 1]]);
        assert!(!is_borel(&not, 3));
        let (witness, missing) = borel_violation(&not, 3).unwrap();
        assert_eq!(witness, m(&[0, 1]));
        assert_eq!(missing, m(&[1, 0]));

        // P is not Borel: x2^2 in P, x1x2 not.
        let p = PowerSequence::new(2, vec![2, 2]).to_ideal();
        assert!(!is_borel(&p, 4));
    }

    #[test]
    fn borel_agrees_with_all_pairs_compression() {
        let cases = vec![
            ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]]),
            ideal(3, &[&[1, 0, 0], &[0, 2, 0]]),
            ideal(3, &[&[0, 0, 1]]),
            PowerSequence::new(3, vec![2, 2, 2]).to_ideal(),
        ];
        for i in cases {
            let cap = i.max_gen_degree() + 2;
            let all_pairs = (0..3)
                .all(|a| (a + 1..3).all(|b| is_compressed(&i, &[a, b], cap)));
            assert_eq!(is_borel(&i, cap), all_pairs, "disagreement on {i:?}");
        }
    }

    #[test]
    fn polarization_examples() {
        // polarize((y^3), y) = (y c1 c2) in 4 variables.
        let i = ideal(2, &[&[0, 3]]);
        let p = polarize(&i, 1);
        assert_eq!(p.nvars(), 4);
        assert_eq!(p.gens(), &[m(&[0, 1, 1, 1])]);

        // No exponent above 1: unchanged.
        let j = ideal(2, &[&[1, 0]]);
        assert_eq!(polarize(&j, 1), j);

        // polarize((x^2 y^2, y^3), y) = (x^2 y c1, y c1 c2).
        let k = ideal(2, &[&[2, 2], &[0, 3]]);
        let pk = polarize(&k, 1);
        assert_eq!(pk.nvars(), 4);
        assert_eq!(pk.gens(), &[m(&[2, 1, 1, 0]), m(&[0, 1, 1, 1])]);
    }

    #[test]
    fn delete_power_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(delete_power(&i, 1, 2).gens(), &[m(&[2, 0]), m(&[1, 1])]);
        let j = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(delete_power(&j, 1, 2), j);
    }

    #[test]
    fn tshift_plus_p_fixed_point_and_example() {
        let p = PowerSequence::new(2, vec![2, 3]);
        let pid = p.to_ideal();
        let out = tshift_plus_p(&pid, &p, ShiftSpec::new(0, 1, 0), 9).unwrap();
        assert_eq!(out, pid);

        // I = (x^2, xy^2, y^3), P = (x^2, y^3), spec (x, y, t = 0).
        let i = ideal(2, &[&[2, 0], &[1, 2], &[0, 3]]);
        let j = tshift_plus_p(&i, &p, ShiftSpec::new(0, 1, 0), 9).unwrap();
        assert!(hf_equal(&i, &j, 9));
        assert!(j.contains_ideal(&pid));
    }

    #[test]
    fn strong_shift_reaches_strongly_shifted_state() {
        let p = PowerSequence::new(2, vec![2, 3]);
        let i = ideal(2, &[&[2, 0], &[0, 3], &[1, 2]]);
        let cap = 10;
        let (out, _steps) = strong_shift_plus_p(&i, &p, 0, 1, cap, 1000).unwrap();
        for t in 0..cap {
            assert!(is_shifted_plus_p(&out, &p, ShiftSpec::new(0, 1, t), cap));
        }
        assert!(hf_equal(&i, &out, cap));
    }

    #[test]
    fn strong_shift_applies_t_level_fixes() {
        // (x^3, xy^3) is (x,y,0)-shifted but not (x,y,1)-shifted: xy^3 has
        // no partner x^2y^2.  The strong shift must go through a t-level
        // step, not just plain shifts.
        let p = PowerSequence::new(2, vec![3, 4]);
        let i = ideal(2, &[&[3, 0], &[1, 3], &[0, 4]]);
        assert!(is_shifted_plus_p(&i, &p, ShiftSpec::new(0, 1, 0), 12));
        assert!(!is_shifted_plus_p(&i, &p, ShiftSpec::new(0, 1, 1), 12));
        let (out, steps) = strong_shift_plus_p(&i, &p, 0, 1, 12, 1000).unwrap();
        assert!(steps.iter().any(|s| matches!(s.kind, PlusPStepKind::TShift { .. })));
        for t in 0..12 {
            assert!(is_shifted_plus_p(&out, &p, ShiftSpec::new(0, 1, t), 12));
        }
        assert!(hf_equal(&i, &out, 12));
        assert!(out.contains_ideal(&p.to_ideal()));
        // Betti numbers weakly increase across the t-level steps too.
        let field = crate::field::Field::RATIONALS;
        let (before, _) = crate::betti::betti_table(&i, field);
        let (after, _) = crate::betti::betti_table(&out, field);
        assert!(crate::betti::betti_dominates(&after, &before));
    }

    #[test]
    fn strong_shift_of_p_is_p() {
        let p = PowerSequence::new(3, vec![2, 2, 2]);
        let (out, steps) = strong_shift_plus_p(&p.to_ideal(), &p, 0, 2, 9, 1000).unwrap();
        assert_eq!(out, p.to_ideal());
        assert!(steps.is_empty());
    }

    #[test]
    fn compress_plus_p_reaches_compressed_state() {
        let p = PowerSequence::new(3, vec![2, 2, 2]);
        let i = p.to_ideal().sum(&ideal(3, &[&[0, 1, 1]]));
        let cap = 10;
        // x2x3 is symmetric under swapping x2, x3, so I is strongly shifted
        // for the pair (x2, x3) already.
        assert!(is_strongly_shifted(&delete_power(&i, 2, 2), 1, 2, cap));
        let t = compress_plus_p(&i, &p, 1, 2, cap).unwrap();
        assert!(is_compressed_plus_p(&t, &p, 1, 2, cap));
        assert!(hf_equal(&i, &t, cap));
    }
}
