//! Koszul subcomplexes of a monomial ideal in a fixed multidegree.
//!
//! For a monomial ideal `I` and a multidegree `m`, the complex
//! `(K ⊗ I)_m` has a basis in homological index `i` given by the symbols
//! `f·e_μ` with `f ∈ I` a monomial, `μ` squarefree of degree `i`, and
//! `f·μ = m`.  The differential sends `f·e_μ` to the alternating sum of
//! `(f·x_j)·e_{μ/x_j}` over the variables of `μ`, so all boundary entries
//! are ±1.  The `i`-th multigraded Betti number of `I` at `m` is the
//! dimension of the `i`-th homology of this complex over the chosen field.

use std::collections::HashMap;

use crate::field::Field;
use crate::ideal::MonomialIdeal;
use crate::linalg::IntMatrix;
use crate::monomial::Monomial;

/// The subcomplex of the Koszul complex at one multidegree.
///
/// Level `i` lists the squarefree factors `μ` (as variable bitmasks, in
/// increasing mask order) for which `m/μ` lies in the ideal.
#[derive(Debug, Clone)]
pub struct KoszulSubcomplex {
    multidegree: Monomial,
    levels: Vec<Vec<u64>>,
}

impl KoszulSubcomplex {
    /// Build the complex of `I` at multidegree `m`.
    pub fn new(ideal: &MonomialIdeal, m: &Monomial) -> Self {
        assert_eq!(ideal.nvars(), m.nvars(), "variable count mismatch");
        assert!(m.nvars() <= 64, "squarefree factors are stored as u64 bitmasks");
        let support = m.support();
        let top = support.len();
        let mut levels: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
        if ideal.contains(m) {
            // Every squarefree divisor μ of m qualifies iff m/μ ∈ I; since
            // f·μ = m forces f ∈ I ⟹ m ∈ I, the whole complex is empty
            // otherwise.
            for bits in 0..(1u64 << top) {
                let mut mu_mask = 0u64;
                let mut quotient = m.clone();
                for (k, &var) in support.iter().enumerate() {
                    if bits >> k & 1 == 1 {
                        mu_mask |= 1 << var;
                        quotient = quotient.div_var(var).expect("support variable divides m");
                    }
                }
                if ideal.contains(&quotient) {
                    levels[bits.count_ones() as usize].push(mu_mask);
                }
            }
            for level in &mut levels {
                level.sort_unstable();
            }
        }
        KoszulSubcomplex { multidegree: m.clone(), levels }
    }

    pub fn multidegree(&self) -> &Monomial {
        &self.multidegree
    }

    /// Largest homological index carried (the support size of `m`).
    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn basis_size(&self, i: usize) -> usize {
        self.levels.get(i).map_or(0, |l| l.len())
    }

    /// Boundary matrix `D_i : level i -> level i-1` with entries ±1.
    pub fn boundary(&self, i: usize) -> IntMatrix {
        let cols = self.basis_size(i);
        let rows = if i == 0 { 0 } else { self.basis_size(i - 1) };
        let mut out = IntMatrix::zero(rows, cols);
        if i == 0 || cols == 0 || rows == 0 {
            return out;
        }
        let prev_index: HashMap<u64, usize> = self.levels[i - 1]
            .iter()
            .enumerate()
            .map(|(k, &mask)| (mask, k))
            .collect();
        for (col, &mask) in self.levels[i].iter().enumerate() {
            let mut sign = 1i64;
            for var in 0..64u64 {
                if mask >> var & 1 == 1 {
                    let target = mask & !(1 << var);
                    let row = prev_index[&target];
                    out.set(row, col, sign);
                    sign = -sign;
                }
            }
        }
        out
    }

    /// Homology dimensions `dim H_i` for `i = 0..=top`.
    pub fn homology(&self, field: Field) -> Vec<u64> {
        let top = self.top();
        // rank D_i for i = 0..=top+1 (both ends zero maps).
        let ranks: Vec<usize> = (0..=top + 1)
            .map(|i| {
                if i == 0 || i > top {
                    0
                } else {
                    self.boundary(i).rank(field)
                }
            })
            .collect();
        (0..=top)
            .map(|i| (self.basis_size(i) - ranks[i] - ranks[i + 1]) as u64)
            .collect()
    }

    /// `D ∘ D = 0` on every pair of consecutive boundaries.
    pub fn verify_dd_zero(&self) -> bool {
        (2..=self.top()).all(|i| self.boundary(i - 1).mul(&self.boundary(i)).is_zero())
    }

    /// The alternating sum of basis sizes equals the alternating sum of
    /// homology dimensions.
    pub fn euler_consistent(&self, field: Field) -> bool {
        let hom = self.homology(field);
        let chi_basis: i64 = (0..=self.top())
            .map(|i| {
                let s = self.basis_size(i) as i64;
                if i % 2 == 0 { s } else { -s }
            })
            .sum();
        let chi_hom: i64 = hom
            .iter()
            .enumerate()
            .map(|(i, &h)| if i % 2 == 0 { h as i64 } else { -(h as i64) })
            .sum();
        chi_basis == chi_hom
    }
}

/// Multigraded Betti numbers `b_{i,m}(I)` for all `i`, as a dense vector
/// indexed by homological degree (trailing zeros trimmed).
///
/// Short-circuits to the empty answer when `m` does not divide the lcm of
/// the generators: the Taylor complex concentrates Betti numbers there.
pub fn koszul_betti_at(ideal: &MonomialIdeal, m: &Monomial, field: Field) -> Vec<u64> {
    if !m.divides(&ideal.lcm_gens()) && !ideal.is_unit() {
        return Vec::new();
    }
    let mut dims = KoszulSubcomplex::new(ideal, m).homology(field);
    while dims.last() == Some(&0) {
        dims.pop();
    }
    dims
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn two_variables_syzygy() {
        // I = (x, y) at m = xy: one cycle x·e_y − y·e_x in homological
        // index 1.
        let i = MonomialIdeal::new(2, vec![m(&[1, 0]), m(&[0, 1])]);
        let dims = koszul_betti_at(&i, &m(&[1, 1]), Field::RATIONALS);
        assert_eq!(dims, vec![0, 1]);
    }

    #[test]
    fn principal_generator() {
        let i = MonomialIdeal::new(1, vec![m(&[1])]);
        let dims = koszul_betti_at(&i, &m(&[1]), Field::RATIONALS);
        assert_eq!(dims, vec![1]);
    }

    #[test]
    fn two_step_subcomplex() {
        // I = (x^2, xy) at m = x^2 y.
        let i = MonomialIdeal::new(2, vec![m(&[2, 0]), m(&[1, 1])]);
        let dims = koszul_betti_at(&i, &m(&[2, 1]), Field::RATIONALS);
        assert_eq!(dims, vec![0, 1]);
    }

    #[test]
    fn outside_lcm_is_zero() {
        let i = MonomialIdeal::new(2, vec![m(&[1, 1])]);
        assert!(koszul_betti_at(&i, &m(&[0, 3]), Field::RATIONALS).is_empty());
    }

    #[test]
    fn dd_zero_and_euler() {
        let i = MonomialIdeal::new(3, vec![m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 1, 1])]);
        let k = KoszulSubcomplex::new(&i, &m(&[2, 1, 1]));
        assert!(k.verify_dd_zero());
        assert!(k.euler_consistent(Field::RATIONALS));
        assert!(k.euler_consistent(Field::prime(2)));
    }

    #[test]
    fn unit_ideal_free_at_one() {
        let i = MonomialIdeal::unit(2);
        assert_eq!(koszul_betti_at(&i, &Monomial::one(2), Field::RATIONALS), vec![1]);
    }
}
