//! The regular sequence of pure powers `P = (x1^e1, ..., xr^er)`.

use serde::Serialize;

use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Degrees `2 <= e1 <= e2 <= ... <= er` of the pure powers, `r <= n`.
/// Variables past index `r` carry no finite power (`e = infinity`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PowerSequence {
    n: usize,
    exponents: Vec<u32>,
}

impl PowerSequence {
    pub fn new(n: usize, exponents: Vec<u32>) -> Self {
        assert!(exponents.len() <= n, "more powers than variables");
        assert!(
            exponents.iter().all(|&e| e >= 2),
            "every finite power must be at least 2"
        );
        assert!(
            exponents.windows(2).all(|w| w[0] <= w[1]),
            "powers must be nondecreasing"
        );
        PowerSequence { n, exponents }
    }

    /// The empty sequence: `P = (0)`, no pure powers at all.
    pub fn empty(n: usize) -> Self {
        PowerSequence { n, exponents: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Number of finite powers `r`.
    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// `e_i` for variable `i` (0-indexed), or `None` when infinite.
    pub fn finite_power(&self, i: usize) -> Option<u32> {
        self.exponents.get(i).copied()
    }

    /// The generator `x_i^{e_i}` when `e_i` is finite.
    pub fn generator(&self, i: usize) -> Option<Monomial> {
        self.finite_power(i).map(|e| Monomial::var_pow(self.n, i, e))
    }

    pub fn generators(&self) -> Vec<Monomial> {
        (0..self.rank()).map(|i| self.generator(i).unwrap()).collect()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.n, self.generators())
    }

    /// Sum of the finite exponents; enters the default cap heuristic.
    pub fn total_degree(&self) -> u32 {
        self.exponents.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_accessors() {
        let p = PowerSequence::new(4, vec![2, 2, 3]);
        assert_eq!(p.rank(), 3);
        assert_eq!(p.finite_power(1), Some(2));
        assert_eq!(p.finite_power(3), None);
        assert_eq!(p.to_ideal().gens().len(), 3);
        assert_eq!(p.total_degree(), 7);
    }

    #[test]
    #[should_panic]
    fn rejects_decreasing() {
        PowerSequence::new(3, vec![3, 2]);
    }

    #[test]
    #[should_panic]
    fn rejects_power_one() {
        PowerSequence::new(3, vec![1, 2]);
    }
}
