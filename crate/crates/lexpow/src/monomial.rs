//! Monomials in a fixed polynomial ring `k[x1..xn]`.
//!
//! A monomial is an exponent vector over `n` variables; its degree is the
//! sum of the exponents.  Multidegrees are indexed by monomials, so this
//! type doubles as the index set for multigraded data.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Exponent vector over a fixed number of variables.
///
/// Variables are 0-indexed internally; the text format (`x1`, `x2`, ...)
/// is 1-indexed and handled by the CLI layer.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The unit monomial 1 (all exponents zero).
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_i` (0-indexed).
    pub fn var(n: usize, i: usize) -> Self {
        Self::var_pow(n, i, 1)
    }

    /// The pure power `x_i^e` (0-indexed).
    pub fn var_pow(n: usize, i: usize, e: u32) -> Self {
        assert!(i < n, "variable index {i} out of range for {n} variables");
        let mut exps = vec![0; n];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// Total degree (sum of exponents); always recomputed, never stored.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "variable count mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps }
    }

    /// `self / x_i`, or `None` if `x_i` does not divide `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.nvars(), other.nvars(), "variable count mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Exact division `self / other`; `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "variable count mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "variable count mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// The radical `sqrt(m)`: every nonzero exponent clamped to 1.
    pub fn radical(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e.min(1)).collect(),
        }
    }

    /// Indices of the variables dividing `self`.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Exchange the exponents of variables `a` and `b` (the involution σ).
    ///
    /// Panics if `a == b`; the swap is only defined for a genuine pair.
    pub fn swap_vars(&self, a: usize, b: usize) -> Monomial {
        assert_ne!(a, b, "swap requires two distinct variables");
        let mut exps = self.exps.clone();
        exps.swap(a, b);
        Monomial { exps }
    }

    /// Reinterpret in a larger ring: append zero exponents up to `new_n`.
    pub fn extended(&self, new_n: usize) -> Monomial {
        assert!(new_n >= self.nvars());
        let mut exps = self.exps.clone();
        exps.resize(new_n, 0);
        Monomial { exps }
    }

    /// All divisors of `self`, in no particular order.
    pub fn divisors(&self) -> Vec<Monomial> {
        let mut out = vec![Monomial::one(self.nvars())];
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for d in out {
                for k in 0..=e {
                    let mut exps = d.exps.clone();
                    exps[i] = k;
                    next.push(Monomial { exps });
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Display for Monomial {
    /// Canonical text form: `x<k>^<e>` factors joined by `*`, exponent 1
    /// omitted, `1` for the unit monomial.  Variables are printed 1-indexed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        // Only used for reproducer files; the CLI has the full parser with
        // positions.  Accept the canonical Display form.
        let text = String::deserialize(d)?;
        parse_canonical(&text).map_err(serde::de::Error::custom)
    }
}

/// Parse the canonical `Display` form given no ambient hint: the variable
/// count is taken as the largest index mentioned.  Reproducer plumbing only.
fn parse_canonical(text: &str) -> Result<Monomial, String> {
    if text.trim() == "1" {
        return Ok(Monomial::one(0));
    }
    let mut pairs = Vec::new();
    let mut max_var = 0usize;
    for factor in text.split('*') {
        let factor = factor.trim();
        let rest = factor
            .strip_prefix('x')
            .ok_or_else(|| format!("bad factor {factor:?}"))?;
        let (var, exp) = match rest.split_once('^') {
            Some((v, e)) => (
                v.parse::<usize>().map_err(|e| e.to_string())?,
                e.parse::<u32>().map_err(|e| e.to_string())?,
            ),
            None => (rest.parse::<usize>().map_err(|e| e.to_string())?, 1),
        };
        if var == 0 {
            return Err("variables are 1-indexed".into());
        }
        max_var = max_var.max(var);
        pairs.push((var - 1, exp));
    }
    let mut exps = vec![0; max_var];
    for (v, e) in pairs {
        exps[v] += e;
    }
    Ok(Monomial::new(exps))
}

/// All monomials of degree `d` in `n` variables, sorted lex-descending.
///
/// The recursion peels off the exponent of the first variable from `d`
/// down to 0, which yields lex-descending order directly.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(ring_dimension(n, d) as usize);
    let mut exps = vec![0u32; n];
    fill_monomials(&mut exps, 0, d, &mut out);
    out
}

fn fill_monomials(exps: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    let n = exps.len();
    if pos + 1 == n {
        exps[pos] = remaining;
        out.push(Monomial::new(exps.clone()));
        exps[pos] = 0;
        return;
    }
    if n == 0 {
        if remaining == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        fill_monomials(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

/// `dim_k S_d = C(n+d-1, d)`, the number of degree-`d` monomials.
pub fn ring_dimension(n: usize, d: u32) -> u64 {
    if n == 0 {
        return if d == 0 { 1 } else { 0 };
    }
    binomial(n as u64 + d as u64 - 1, d as u64)
}

/// Exact binomial coefficient; panics on u64 overflow (far beyond the
/// degree/variable ranges this library enumerates).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul(n - i)
            .expect("binomial coefficient overflows u64")
            / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_is_sum_of_exponents() {
        let m = Monomial::new(vec![2, 0, 3]);
        assert_eq!(m.degree(), 5);
        assert_eq!(Monomial::one(3).degree(), 0);
    }

    #[test]
    fn divisibility_and_division() {
        let m = Monomial::new(vec![3, 1]);
        let d = Monomial::new(vec![2, 0]);
        assert!(d.divides(&m));
        assert_eq!(m.div(&d), Some(Monomial::new(vec![1, 1])));
        assert_eq!(d.div(&m), None);
    }

    #[test]
    fn lcm_gcd_radical() {
        let u = Monomial::new(vec![2, 1, 0]);
        let v = Monomial::new(vec![1, 2, 0]);
        assert_eq!(u.lcm(&v), Monomial::new(vec![2, 2, 0]));
        assert_eq!(u.gcd(&v), Monomial::new(vec![1, 1, 0]));
        assert_eq!(u.radical(), Monomial::new(vec![1, 1, 0]));
    }

    #[test]
    fn swap_is_involution() {
        let m = Monomial::new(vec![2, 1, 5]);
        assert_eq!(m.swap_vars(0, 1), Monomial::new(vec![1, 2, 5]));
        assert_eq!(m.swap_vars(0, 1).swap_vars(0, 1), m);
    }

    #[test]
    #[should_panic]
    fn swap_same_variable_panics() {
        Monomial::new(vec![1, 1]).swap_vars(1, 1);
    }

    #[test]
    fn enumeration_is_lex_descending_and_complete() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), ring_dimension(3, 2) as usize);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0], Monomial::new(vec![2, 0, 0]));
        assert_eq!(ms[5], Monomial::new(vec![0, 0, 2]));
        for w in ms.windows(2) {
            assert!(crate::order::lex_cmp(&w[0], &w[1]) == std::cmp::Ordering::Greater);
        }
    }

    #[test]
    fn divisors_count() {
        let m = Monomial::new(vec![2, 1]);
        assert_eq!(m.divisors().len(), 6);
    }

    #[test]
    fn display_round_trip() {
        let m = Monomial::new(vec![2, 1, 0]);
        assert_eq!(m.to_string(), "x1^2*x2");
        assert_eq!(Monomial::one(4).to_string(), "1");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(ring_dimension(3, 2), 6);
        assert_eq!(ring_dimension(2, 0), 1);
    }
}
