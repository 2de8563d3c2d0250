//! Hilbert functions of monomial ideals, lexification, and lexification
//! modulo pure powers.
//!
//! `Hilb(I)(d)` counts the degree-`d` monomials lying in the ideal.  Two
//! independent computation paths are provided: degreewise expansion, and
//! the inclusion-exclusion recursion on a numerator polynomial.  They must
//! agree on every ideal; `hilbert_function_checked` asserts this.
//!
//! Lexification is degreewise-then-verify: take lex segments of the
//! prescribed sizes, check the ideal growth condition `S_1 * L_d ⊆ L_{d+1}`
//! in every degree, and extract minimal generators.  When the growth check
//! passes, the extracted generators regenerate the slices exactly, so the
//! check doubles as a correctness certificate.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{minimal_gens_of_slices, MonomialIdeal};
use crate::monomial::{monomials_of_degree, ring_dimension, Monomial};
use crate::powers::PowerSequence;

/// Degreewise dimensions `d -> dim_k I_d` for `d <= cap`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertFunction {
    cap: u32,
    values: Vec<u64>,
}

impl HilbertFunction {
    pub fn new(values: Vec<u64>) -> Self {
        assert!(!values.is_empty());
        HilbertFunction { cap: values.len() as u32 - 1, values }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn value(&self, d: u32) -> u64 {
        assert!(d <= self.cap, "Hilbert function only stored to degree {}", self.cap);
        self.values[d as usize]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

/// Hilbert function by degreewise expansion.
pub fn hilbert_function(ideal: &MonomialIdeal, cap: u32) -> HilbertFunction {
    let e = ideal.expanded(cap);
    HilbertFunction::new(
        (0..=cap)
            .map(|d| e.degree_slice(d).len() as u64)
            .collect(),
    )
}

/// Numerator polynomial of the ideal: coefficients `c_j` with
/// `Hilb(I)(d) = sum_j c_j * dim S_{d-j}`.
///
/// Recursion splits off the lex-greatest generator `m`, writing
/// `I = J + (m)` and using `I ∩ (m) = m * (J : m)`:
/// `num(I) = num(J) + t^{deg m} * (1 - num(J : m))`.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> Vec<i64> {
    if ideal.is_zero() {
        return Vec::new();
    }
    let pivot = ideal.gens()[0].clone();
    let rest = MonomialIdeal::new(ideal.nvars(), ideal.gens()[1..].to_vec());
    let mut num = hilbert_numerator(&rest);
    let shift = pivot.degree() as usize;
    let colon_num = hilbert_numerator(&rest.colon(&pivot));
    if num.len() < shift + 1 {
        num.resize(shift + 1, 0);
    }
    num[shift] += 1;
    for (j, c) in colon_num.into_iter().enumerate() {
        let idx = shift + j;
        if num.len() < idx + 1 {
            num.resize(idx + 1, 0);
        }
        num[idx] -= c;
    }
    num
}

/// Hilbert function from the numerator recursion.
pub fn hilbert_function_via_numerator(ideal: &MonomialIdeal, cap: u32) -> HilbertFunction {
    let num = hilbert_numerator(ideal);
    let n = ideal.nvars();
    let values = (0..=cap)
        .map(|d| {
            let mut acc: i128 = 0;
            for (j, &c) in num.iter().enumerate() {
                if j as u32 > d {
                    break;
                }
                acc += c as i128 * ring_dimension(n, d - j as u32) as i128;
            }
            assert!(acc >= 0, "numerator recursion produced a negative dimension");
            u64::try_from(acc).expect("dimension exceeds u64")
        })
        .collect();
    HilbertFunction::new(values)
}

/// Expansion path cross-checked against the recursion path.
pub fn hilbert_function_checked(ideal: &MonomialIdeal, cap: u32) -> HilbertFunction {
    let by_expansion = hilbert_function(ideal, cap);
    let by_recursion = hilbert_function_via_numerator(ideal, cap);
    assert_eq!(
        by_expansion, by_recursion,
        "Hilbert computation paths disagree on {ideal:?}"
    );
    by_expansion
}

/// Degreewise equality of Hilbert functions up to `cap`.
///
/// The cap must cover the generators of both ideals; smaller caps are
/// flagged as the caller's error rather than silently compared.
pub fn hf_equal(i: &MonomialIdeal, j: &MonomialIdeal, cap: u32) -> bool {
    assert!(
        cap >= i.max_gen_degree() && cap >= j.max_gen_degree(),
        "cap {cap} does not cover the generators"
    );
    let ie = i.expanded(cap);
    let je = j.expanded(cap);
    (0..=cap).all(|d| ie.degree_slice(d).len() == je.degree_slice(d).len())
}

/// Check `S_1 * prev ⊆ slice` and report the first violation.
fn growth_violation(n: usize, prev: &[Monomial], slice: &[Monomial]) -> Option<Monomial> {
    let set: HashSet<&Monomial> = slice.iter().collect();
    for m in prev {
        for i in 0..n {
            let up = m.mul_var(i);
            if !set.contains(&up) {
                return Some(up);
            }
        }
    }
    None
}

fn ideal_from_slices(n: usize, slices: Vec<Vec<Monomial>>) -> MonomialIdeal {
    let cap = slices.len() as u32 - 1;
    let gens = minimal_gens_of_slices(n, &slices);
    MonomialIdeal::new(n, gens).with_expansion(cap, slices)
}

/// Macaulay lexification: the lex ideal in `n` variables whose Hilbert
/// function matches `hf` for all `d <= cap`.
///
/// Per degree the top `hf(d)` monomials in lex order are taken; the growth
/// check rejects Hilbert functions not attained by any ideal.
///
/// The result is exact up to the cap.  Whether it is the *whole* lex ideal
/// depends on the cap: lex ideals can acquire generators in much higher
/// degrees than their source, so callers that compare Betti tables must
/// check that the generators stay clear of the top degrees (as
/// `walk::lpp_verify` does) before trusting the table.
pub fn lexify(hf: &HilbertFunction, n: usize) -> Result<MonomialIdeal> {
    let mut slices: Vec<Vec<Monomial>> = Vec::with_capacity(hf.cap() as usize + 1);
    for d in 0..=hf.cap() {
        let all = monomials_of_degree(n, d);
        let want = hf.value(d) as usize;
        if want > all.len() {
            return Err(Error::InfeasibleHilbert {
                reason: format!(
                    "degree {d} asks for {want} monomials but dim S_{d} = {}",
                    all.len()
                ),
            });
        }
        let slice: Vec<Monomial> = all.into_iter().take(want).collect();
        if d > 0 {
            if let Some(bad) = growth_violation(n, &slices[d as usize - 1], &slice) {
                return Err(Error::InfeasibleHilbert {
                    reason: format!("lex segments are not an ideal: {bad} missing in degree {d}"),
                });
            }
        }
        slices.push(slice);
    }
    Ok(ideal_from_slices(n, slices))
}

/// Clements-Lindström lexification modulo `P`: per degree, the span of
/// `P_d` together with the lex-greatest monomials outside `P` until the
/// prescribed dimension is reached.  Returns `L + P` as a single ideal.
pub fn lexify_mod_p(hf: &HilbertFunction, p: &PowerSequence) -> Result<MonomialIdeal> {
    let n = p.nvars();
    let p_ideal = p.to_ideal();
    if hf.cap() < p_ideal.max_gen_degree() {
        return Err(Error::InsufficientCap {
            what: "lexify_mod_p",
            cap: hf.cap(),
            needed: p_ideal.max_gen_degree(),
        });
    }
    let mut slices: Vec<Vec<Monomial>> = Vec::with_capacity(hf.cap() as usize + 1);
    for d in 0..=hf.cap() {
        let all = monomials_of_degree(n, d);
        let want = hf.value(d) as usize;
        if want > all.len() {
            return Err(Error::InfeasibleHilbert {
                reason: format!(
                    "degree {d} asks for {want} monomials but dim S_{d} = {}",
                    all.len()
                ),
            });
        }
        let in_p = all.iter().filter(|m| p_ideal.contains(m)).count();
        let Some(mut extra) = want.checked_sub(in_p) else {
            return Err(Error::InfeasibleHilbert {
                reason: format!(
                    "degree {d} asks for {want} monomials but P already spans {in_p}"
                ),
            });
        };
        // Keep lex-descending order: walk the full degree and take P
        // members unconditionally, the top lex non-members while quota lasts.
        let mut slice = Vec::with_capacity(want);
        for m in all {
            if p_ideal.contains(&m) {
                slice.push(m);
            } else if extra > 0 {
                slice.push(m);
                extra -= 1;
            }
        }
        if d > 0 {
            if let Some(bad) = growth_violation(n, &slices[d as usize - 1], &slice) {
                return Err(Error::InfeasibleHilbert {
                    reason: format!(
                        "lex-plus-powers segments are not an ideal: {bad} missing in degree {d}"
                    ),
                });
            }
        }
        slices.push(slice);
    }
    let out = ideal_from_slices(n, slices);
    debug_assert!(out.contains_ideal(&p_ideal));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn unit_ideal_dimensions() {
        let hf = hilbert_function(&MonomialIdeal::unit(3), 3);
        assert_eq!(hf.value(0), 1);
        assert_eq!(hf.value(2), 6);
        assert_eq!(hf.value(3), 10);
    }

    #[test]
    fn maximal_ideal_square() {
        // (x1^2, x1x2, x2^2) in two variables: all monomials of degree >= 2.
        let i = MonomialIdeal::new(2, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        let hf = hilbert_function(&i, 3);
        assert_eq!(hf.values(), &[0, 0, 3, 4]);
    }

    #[test]
    fn principal_ideal_multiples() {
        let i = MonomialIdeal::new(2, vec![m(&[1, 1])]);
        let hf = hilbert_function(&i, 4);
        assert_eq!(hf.values(), &[0, 0, 1, 2, 3]);
    }

    #[test]
    fn recursion_agrees_with_expansion() {
        let samples = vec![
            MonomialIdeal::zero(3),
            MonomialIdeal::unit(3),
            MonomialIdeal::new(3, vec![m(&[2, 0, 0]), m(&[0, 2, 0]), m(&[1, 1, 1])]),
            MonomialIdeal::new(3, vec![m(&[1, 1, 0]), m(&[0, 1, 1])]),
            MonomialIdeal::new(2, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]),
        ];
        for i in samples {
            hilbert_function_checked(&i, 8);
        }
    }

    #[test]
    fn lexify_examples() {
        // HF of (x1x2) is matched by the lex ideal (x1^2).
        let i = MonomialIdeal::new(2, vec![m(&[1, 1])]);
        let l = lexify(&hilbert_function(&i, 5), 2).unwrap();
        assert_eq!(l.gens(), &[m(&[2, 0])]);

        let unit = lexify(&hilbert_function(&MonomialIdeal::unit(2), 4), 2).unwrap();
        assert!(unit.is_unit());

        let zero = lexify(&hilbert_function(&MonomialIdeal::zero(2), 4), 2).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn lexify_emits_late_generators() {
        // HF of (x1^2, x2^3): the lex ideal is (x1^2, x1x2^2, x2^4).
        let i = MonomialIdeal::new(2, vec![m(&[2, 0]), m(&[0, 3])]);
        let l = lexify(&hilbert_function(&i, 7), 2).unwrap();
        assert_eq!(l.gens(), &[m(&[2, 0]), m(&[1, 2]), m(&[0, 4])]);
        assert!(hf_equal(&i, &l, 7));
    }

    #[test]
    fn lexify_rejects_infeasible() {
        // Dimensions of an ideal cannot drop: the forced growth of a
        // 2-element segment exceeds 1.
        let hf = HilbertFunction::new(vec![0, 2, 1]);
        assert!(lexify(&hf, 2).is_err());
        // Overfull degree.
        let hf = HilbertFunction::new(vec![0, 5]);
        assert!(lexify(&hf, 2).is_err());
    }

    #[test]
    fn lexify_mod_p_examples() {
        let p = PowerSequence::new(3, vec![2, 2, 2]);
        let i = p.to_ideal().sum(&MonomialIdeal::new(3, vec![m(&[0, 1, 1])]));
        let l = lexify_mod_p(&hilbert_function(&i, 8), &p).unwrap();
        let expected = p.to_ideal().sum(&MonomialIdeal::new(3, vec![m(&[1, 1, 0])]));
        assert_eq!(l, expected);

        // HF of P itself comes back as P.
        let lp = lexify_mod_p(&hilbert_function(&p.to_ideal(), 8), &p).unwrap();
        assert_eq!(lp, p.to_ideal());

        // n = 2: P + (x1x2) is the whole degree-2 space.
        let p2 = PowerSequence::new(2, vec![2, 2]);
        let full = p2.to_ideal().sum(&MonomialIdeal::new(2, vec![m(&[1, 1])]));
        let l2 = lexify_mod_p(&hilbert_function(&full, 6), &p2).unwrap();
        assert_eq!(l2, full);
    }

    #[test]
    fn lexify_outputs_are_lex_segments() {
        let i = MonomialIdeal::new(3, vec![m(&[1, 1, 0]), m(&[0, 0, 2])]);
        let cap = 6;
        let l = lexify(&hilbert_function(&i, cap), 3).unwrap();
        let le = l.expanded(cap);
        for d in 0..=cap {
            let slice = le.degree_slice(d);
            let all = monomials_of_degree(3, d);
            assert_eq!(&all[..slice.len()], slice);
        }
    }

    #[test]
    fn hf_equal_examples() {
        let i = MonomialIdeal::new(2, vec![m(&[0, 2])]);
        let j = MonomialIdeal::new(2, vec![m(&[2, 0])]);
        assert!(hf_equal(&i, &j, 5));
        assert!(hf_equal(&i, &i, 5));
        let k = MonomialIdeal::new(2, vec![m(&[1, 0])]);
        assert!(!hf_equal(&i, &k, 5));
    }
}
