//! Lexicographic and reverse lexicographic comparisons, lifted from
//! monomials to equal-degree sets and to whole ideals.
//!
//! The ideal-level revlex comparison is the termination measure for the
//! transform walk: every accepted step strictly increases it.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// `u > v` lexicographically iff `u` has the larger exponent at the first
/// index where they differ.  Degrees need not match.
pub fn lex_cmp(u: &Monomial, v: &Monomial) -> Ordering {
    assert_eq!(u.nvars(), v.nvars(), "variable count mismatch");
    for (a, b) in u.exponents().iter().zip(v.exponents()) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// `u > v` in reverse lex iff `u` has the *smaller* exponent at the last
/// index where they differ.  Only defined within a single degree.
pub fn revlex_cmp(u: &Monomial, v: &Monomial) -> Ordering {
    assert_eq!(u.nvars(), v.nvars(), "variable count mismatch");
    assert_eq!(
        u.degree(),
        v.degree(),
        "revlex comparison requires equal degrees"
    );
    for (a, b) in u.exponents().iter().zip(v.exponents()).rev() {
        match a.cmp(b) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

/// Compare two equal-size sets of equal-degree monomials: sort each
/// revlex-descending and compare positionwise; the first difference decides.
pub fn revlex_cmp_sets(a: &[Monomial], b: &[Monomial]) -> Ordering {
    assert_eq!(a.len(), b.len(), "set comparison requires equal sizes");
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(|x, y| revlex_cmp(y, x));
    b.sort_by(|x, y| revlex_cmp(y, x));
    for (u, v) in a.iter().zip(&b) {
        match revlex_cmp(u, v) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Outcome of the degreewise revlex comparison of two ideals.
///
/// Arbitrary pairs with the same Hilbert function need not be comparable:
/// one degree may favor `I` and another `J`.  That is a value, not an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealOrdering {
    Equal,
    Greater,
    Less,
    Incomparable,
}

/// Degreewise revlex comparison of two ideals with the same Hilbert
/// function, decided over all degrees `d <= cap`.
///
/// Fails with [`Error::HilbertMismatch`] when the degreewise dimensions
/// disagree (the comparison is only defined for equal Hilbert functions).
pub fn revlex_cmp_ideals(i: &MonomialIdeal, j: &MonomialIdeal, cap: u32) -> Result<IdealOrdering> {
    assert_eq!(i.nvars(), j.nvars(), "variable count mismatch");
    let ie = i.expanded(cap);
    let je = j.expanded(cap);
    let mut seen_greater = false;
    let mut seen_less = false;
    for d in 0..=cap {
        let a = ie.degree_slice(d);
        let b = je.degree_slice(d);
        if a.len() != b.len() {
            return Err(Error::HilbertMismatch {
                degree: d,
                left: a.len() as u64,
                right: b.len() as u64,
            });
        }
        match revlex_cmp_sets(a, b) {
            Ordering::Equal => {}
            Ordering::Greater => seen_greater = true,
            Ordering::Less => seen_less = true,
        }
    }
    Ok(match (seen_greater, seen_less) {
        (false, false) => IdealOrdering::Equal,
        (true, false) => IdealOrdering::Greater,
        (false, true) => IdealOrdering::Less,
        (true, true) => IdealOrdering::Incomparable,
    })
}
