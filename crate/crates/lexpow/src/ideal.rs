//! Monomial ideals: canonical minimal generators plus an optional
//! degreewise expansion cache.
//!
//! Generators are kept minimal (no generator divides another), deduplicated,
//! and sorted lex-descending, so equality and serialization are
//! deterministic.  The zero ideal has no generators; the unit ideal has the
//! single generator 1.
//!
//! All values are immutable after construction.  Attaching an expansion
//! produces a new value sharing the generator data; operations that need
//! degreewise sets state their cap and panic loudly on a miss rather than
//! silently truncating.

use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::monomial::{monomials_of_degree, Monomial};
use crate::order::lex_cmp;

/// Degreewise monomial sets of an ideal for all degrees `d <= cap`.
/// Each slice is sorted lex-descending.
#[derive(Debug, Clone)]
pub struct Expansion {
    cap: u32,
    by_degree: Vec<Vec<Monomial>>,
}

impl Expansion {
    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn degree(&self, d: u32) -> &[Monomial] {
        assert!(
            d <= self.cap,
            "expansion cached to degree {} but degree {} requested",
            self.cap,
            d
        );
        &self.by_degree[d as usize]
    }
}

#[derive(Clone)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
    cache: Option<Arc<Expansion>>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

impl std::hash::Hash for MonomialIdeal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.gens.hash(state);
    }
}

/// Remove generators divisible by another, deduplicate, sort lex-descending.
pub fn minimalize(n: usize, gens: Vec<Monomial>) -> Vec<Monomial> {
    for g in &gens {
        assert_eq!(g.nvars(), n, "generator has wrong variable count");
    }
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        let redundant = gens.iter().enumerate().any(|(j, h)| {
            if i == j {
                return false;
            }
            // Strictly smaller divisor wins; among equals keep the first.
            h.divides(g) && (h != g || j < i)
        });
        if !redundant {
            kept.push(g.clone());
        }
    }
    kept.sort_by(|a, b| lex_cmp(b, a));
    kept
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            n,
            gens: minimalize(n, gens),
            cache: None,
        }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new(), cache: None }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)], cache: None }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Largest degree among the minimal generators; 0 for the zero ideal.
    pub fn max_gen_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Membership: some minimal generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        assert_eq!(m.nvars(), self.n, "variable count mismatch");
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// The colon ideal `(I : m) = { u : u*m in I }`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        assert_eq!(m.nvars(), self.n, "variable count mismatch");
        let gens = self
            .gens
            .iter()
            .map(|g| g.div(&g.gcd(m)).unwrap())
            .collect();
        MonomialIdeal::new(self.n, gens)
    }

    /// Ideal sum: minimalized union of the generators.
    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.n, other.n, "variable count mismatch");
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.n, gens)
    }

    /// Ideal intersection: minimalized pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.n, other.n, "variable count mismatch");
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        MonomialIdeal::new(self.n, gens)
    }

    /// The principal multiple `m * I`.
    pub fn multiply(&self, m: &Monomial) -> MonomialIdeal {
        assert_eq!(m.nvars(), self.n, "variable count mismatch");
        // Multiplying every generator by the same monomial preserves
        // minimality, so no re-minimalization is needed.
        let gens = self.gens.iter().map(|g| g.mul(m)).collect();
        MonomialIdeal { n: self.n, gens, cache: None }
    }

    /// Apply the involution swapping variables `a` and `b` to every
    /// generator.  Minimality is preserved.
    pub fn swap_vars(&self, a: usize, b: usize) -> MonomialIdeal {
        let mut gens: Vec<Monomial> =
            self.gens.iter().map(|g| g.swap_vars(a, b)).collect();
        gens.sort_by(|x, y| lex_cmp(y, x));
        MonomialIdeal { n: self.n, gens, cache: None }
    }

    /// lcm of the minimal generators (1 for the zero ideal).
    pub fn lcm_gens(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.n), |acc, g| acc.lcm(g))
    }

    /// Return the same ideal carrying a degreewise expansion up to `cap`.
    /// Reuses a cached expansion when it already reaches far enough.
    pub fn expanded(&self, cap: u32) -> MonomialIdeal {
        if let Some(c) = &self.cache {
            if c.cap >= cap {
                return self.clone();
            }
        }
        let by_degree = (0..=cap)
            .map(|d| {
                monomials_of_degree(self.n, d)
                    .into_iter()
                    .filter(|m| self.contains(m))
                    .collect()
            })
            .collect();
        MonomialIdeal {
            n: self.n,
            gens: self.gens.clone(),
            cache: Some(Arc::new(Expansion { cap, by_degree })),
        }
    }

    /// Attach a precomputed expansion (used by degreewise constructions
    /// that already hold the sets).  Each slice must be sorted lex-descending.
    pub(crate) fn with_expansion(mut self, cap: u32, by_degree: Vec<Vec<Monomial>>) -> Self {
        debug_assert_eq!(by_degree.len() as u32, cap + 1);
        self.cache = Some(Arc::new(Expansion { cap, by_degree }));
        self
    }

    pub fn expansion(&self) -> Option<&Expansion> {
        self.cache.as_deref()
    }

    /// The degree-`d` monomials, sorted lex-descending.  Panics when no
    /// expansion up to `d` has been attached; callers must state their cap.
    pub fn degree_slice(&self, d: u32) -> &[Monomial] {
        let exp = self
            .cache
            .as_deref()
            .expect("no degreewise expansion attached; call expanded(cap) first");
        exp.degree(d)
    }

    /// Strip the cache, e.g. before storing in long-lived traces.
    pub fn without_cache(&self) -> MonomialIdeal {
        MonomialIdeal { n: self.n, gens: self.gens.clone(), cache: None }
    }

    /// Whether the attached degreewise sets are closed under multiplication
    /// by every variable (the "is an ideal" certificate for slice-built
    /// values).  Panics without an expansion.
    pub fn expansion_is_closed(&self) -> bool {
        use std::collections::HashSet;
        let exp = self
            .cache
            .as_deref()
            .expect("no degreewise expansion attached; call expanded(cap) first");
        for d in 1..=exp.cap {
            let set: HashSet<&Monomial> = exp.degree(d).iter().collect();
            for m in exp.degree(d - 1) {
                for i in 0..self.n {
                    if !set.contains(&m.mul_var(i)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Extract the minimal generators of an ideal presented as degreewise sets
/// (monomials of each degree `d <= cap`, any order): a monomial is a
/// generator iff none of its variable-quotients lies in the previous slice.
///
/// The caller is responsible for the sets actually being an ideal's
/// truncation; `transforms` verifies closure separately.
pub fn minimal_gens_of_slices(n: usize, slices: &[Vec<Monomial>]) -> Vec<Monomial> {
    use std::collections::HashSet;
    let mut gens = Vec::new();
    let mut prev: HashSet<&Monomial> = HashSet::new();
    for slice in slices {
        for m in slice {
            let has_predecessor = (0..n).any(|i| {
                m.div_var(i)
                    .map(|q| prev.contains(&q))
                    .unwrap_or(false)
            });
            if !has_predecessor {
                gens.push(m.clone());
            }
        }
        prev = slice.iter().collect();
    }
    minimalize(n, gens)
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MonomialIdeal", 2)?;
        st.serialize_field("ring", &self.n)?;
        st.serialize_field("gens", &self.gens)?;
        st.end()
    }
}
