//! Graded and multigraded Betti tables via Koszul homology, the shadow
//! reduction, the Eliahou-Kervaire formula for Borel ideals, the colon
//! formula for monomial-plus-powers ideals, and consecutive-cancellation
//! certificates.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::hilbert_function;
use crate::ideal::MonomialIdeal;
use crate::koszul::koszul_betti_at;
use crate::monomial::{binomial, ring_dimension, Monomial};
use crate::powers::PowerSequence;

/// Whether a table records `b_{i,j}(I)` or `b_{i,j}(S/I)`.
/// The conventions differ by a homological shift: `b_{i,j}(I) = b_{i+1,j}(S/I)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Ideal,
    Quotient,
}

/// Graded Betti numbers: map `(i, j) -> count` with finitely many nonzero
/// entries, kept sorted for deterministic iteration and serialization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub convention: Convention,
    entries: BTreeMap<(u32, u32), u64>,
}

impl Serialize for BettiTable {
    /// `{"convention": ..., "entries": [{"i": .., "j": .., "b": ..}, ...]}`
    /// with rows sorted by `(i, j)`.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(Serialize)]
        struct Row {
            i: u32,
            j: u32,
            b: u64,
        }
        let rows: Vec<Row> = self.iter().map(|(i, j, b)| Row { i, j, b }).collect();
        let mut st = s.serialize_struct("BettiTable", 2)?;
        st.serialize_field("convention", &self.convention)?;
        st.serialize_field("entries", &rows)?;
        st.end()
    }
}

impl BettiTable {
    pub fn new(convention: Convention) -> Self {
        BettiTable { convention, entries: BTreeMap::new() }
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: u32, j: u32, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    /// Nonzero entries in (i, j) order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_homological_index(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Total Betti number `b_i`, the row sum over internal degrees.
    pub fn total(&self, i: u32) -> u64 {
        self.entries
            .iter()
            .filter(|(&(k, _), _)| k == i)
            .map(|(_, &b)| b)
            .sum()
    }

    /// Reinterpret an ideal-convention table as the table of the quotient:
    /// shift the homological index up by one and account for `S` itself.
    /// The unit ideal has `S/I = 0`, whose table is empty.
    pub fn to_quotient(&self, ideal_is_unit: bool) -> BettiTable {
        assert_eq!(self.convention, Convention::Ideal);
        let mut out = BettiTable::new(Convention::Quotient);
        if ideal_is_unit {
            return out;
        }
        out.add(0, 0, 1);
        for (i, j, b) in self.iter() {
            out.add(i + 1, j, b);
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j, b) in self.iter() {
            writeln!(f, "b[{i},{j}] = {b}")?;
        }
        Ok(())
    }
}

/// Multigraded Betti numbers: map `(i, m) -> count`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultigradedBettiTable {
    entries: BTreeMap<(u32, Monomial), u64>,
}

impl MultigradedBettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, i: u32, m: &Monomial) -> u64 {
        self.entries.get(&(i, m.clone())).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: u32, m: Monomial, count: u64) {
        if count > 0 {
            *self.entries.entry((i, m)).or_insert(0) += count;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Monomial, u64)> + '_ {
        self.entries.iter().map(|(&(i, ref m), &b)| (i, m, b))
    }

    /// Rows sorted by `(i, deg m)` and then lex-descending on the
    /// multidegree, the order used in reports.
    pub fn sorted_rows(&self) -> Vec<(u32, Monomial, u64)> {
        let mut rows: Vec<(u32, Monomial, u64)> =
            self.iter().map(|(i, m, b)| (i, m.clone(), b)).collect();
        rows.sort_by(|x, y| {
            x.0.cmp(&y.0)
                .then(x.1.degree().cmp(&y.1.degree()))
                .then_with(|| crate::order::lex_cmp(&y.1, &x.1))
        });
        rows
    }

    /// Aggregate by internal degree: `b_{i,j} = Σ_{deg m = j} b_{i,m}`.
    pub fn to_graded(&self) -> BettiTable {
        let mut out = BettiTable::new(Convention::Ideal);
        for (i, m, b) in self.iter() {
            out.add(i, m.degree(), b);
        }
        out
    }
}

/// Graded and multigraded Betti tables of an ideal (ideal convention),
/// by Koszul homology over all divisors of the generator lcm.
pub fn betti_table(ideal: &MonomialIdeal, field: Field) -> (BettiTable, MultigradedBettiTable) {
    let mut multi = MultigradedBettiTable::new();
    for m in ideal.lcm_gens().divisors() {
        for (i, &count) in koszul_betti_at(ideal, &m, field).iter().enumerate() {
            multi.add(i as u32, m.clone(), count);
        }
    }
    (multi.to_graded(), multi)
}

/// Quotient-convention table of `S/I`.
pub fn quotient_betti_table(ideal: &MonomialIdeal, field: Field) -> BettiTable {
    betti_table(ideal, field).0.to_quotient(ideal.is_unit())
}

/// The shadow of `m` in `I`: the squarefree generators of
/// `(I : m/sqrt(m))` supported inside `supp(m)`, as an ideal of
/// `k[supp(m)]` represented in the ambient ring.
pub fn shadow(ideal: &MonomialIdeal, m: &Monomial) -> MonomialIdeal {
    let colon = ideal.colon(&m.div(&m.radical()).unwrap());
    let support = m.support();
    let gens = colon
        .gens()
        .iter()
        .filter(|g| g.is_squarefree() && g.support().iter().all(|v| support.contains(v)))
        .cloned()
        .collect();
    MonomialIdeal::new(ideal.nvars(), gens)
}

/// The four equal computations of `b_{i,m}(I)`, reported together.
#[derive(Debug, Clone, Serialize)]
pub struct BettiReductionReport {
    pub direct: Vec<u64>,
    pub via_intersection: Vec<u64>,
    pub via_colon: Vec<u64>,
    pub via_shadow: Vec<u64>,
    pub equal: bool,
}

/// Compute `b_{i,m}` four ways for every `i`:
/// directly, through `I ∩ (m/sqrt m)`, through `(I : m/sqrt m)` at
/// `sqrt m`, and through the shadow at `sqrt m`.
pub fn betti_reduction_check(ideal: &MonomialIdeal, m: &Monomial, field: Field) -> BettiReductionReport {
    let root = m.radical();
    let cofactor = m.div(&root).unwrap();
    let direct = koszul_betti_at(ideal, m, field);
    let via_intersection = koszul_betti_at(
        &ideal.intersect(&MonomialIdeal::new(ideal.nvars(), vec![cofactor.clone()])),
        m,
        field,
    );
    let via_colon = koszul_betti_at(&ideal.colon(&cofactor), &root, field);
    let via_shadow = koszul_betti_at(&shadow(ideal, m), &root, field);
    let equal = direct == via_intersection && direct == via_colon && direct == via_shadow;
    BettiReductionReport { direct, via_intersection, via_colon, via_shadow, equal }
}

/// Eliahou-Kervaire Betti numbers of a Borel ideal:
/// `b_{i,j}(B) = Σ over generators u with deg u = j - i of C(max(u) - 1, i)`,
/// with `max(u)` the 1-based index of the last variable dividing `u`.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if let Some((witness, missing)) =
        crate::transforms::borel_violation(ideal, ideal.max_gen_degree())
    {
        return Err(Error::NotBorel {
            witness: witness.to_string(),
            missing: missing.to_string(),
        });
    }
    let mut out = BettiTable::new(Convention::Ideal);
    for u in ideal.gens() {
        if u.is_one() {
            // The unit ideal is S itself, free on one generator.
            out.add(0, 0, 1);
            continue;
        }
        let max_u = *u.support().iter().max().unwrap() as u64 + 1;
        for i in 0..max_u {
            out.add(i as u32, u.degree() + i as u32, binomial(max_u - 1, i));
        }
    }
    Ok(out)
}

/// Quotient-convention Betti table of `M + P` from the colon formula:
/// `b_{i,j}(S/(M+P)) = Σ_τ b_{i-|τ|, j-deg x_τ}(S/(M : x_τ))` over subsets
/// `τ` of the finite powers, where `x_τ` is the product of the chosen pure
/// powers and `S/(1) = 0` contributes nothing.
///
/// Preconditions: no `x_i^{e_i}` lies in `M`, and no minimal generator of
/// `M` is divisible by an `x_i^{e_i}`.  The second condition is what keeps
/// the iterated mapping cone minimal: without it the formula genuinely
/// overcounts (already for `M = (x^3)`, `P = (x^2)`, where `M + P = (x^2)`
/// but the formula produces spurious entries in degree 3).
pub fn colon_formula_betti(
    ideal: &MonomialIdeal,
    p: &PowerSequence,
    field: Field,
) -> Result<BettiTable> {
    assert_eq!(ideal.nvars(), p.nvars(), "variable count mismatch");
    for i in 0..p.rank() {
        let power = p.generator(i).unwrap();
        if ideal.contains(&power) {
            return Err(Error::ContainsPurePower { power: power.to_string() });
        }
        if let Some(g) = ideal.gens().iter().find(|g| power.divides(g)) {
            return Err(Error::Precondition(format!(
                "generator {g} is divisible by the pure power {power}; \
                 the mapping cone is not minimal"
            )));
        }
    }
    let mut out = BettiTable::new(Convention::Quotient);
    let r = p.rank();
    for tau in 0..(1u64 << r) {
        let mut x_tau = Monomial::one(p.nvars());
        let mut size = 0u32;
        for i in 0..r {
            if tau >> i & 1 == 1 {
                x_tau = x_tau.mul(&p.generator(i).unwrap());
                size += 1;
            }
        }
        let colon = ideal.colon(&x_tau);
        if colon.is_unit() {
            continue;
        }
        let table = quotient_betti_table(&colon, field);
        let shift_j = x_tau.degree();
        for (i, j, b) in table.iter() {
            out.add(i + size, j + shift_j, b);
        }
    }
    Ok(out)
}

/// Result of searching for a consecutive-cancellation certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CancellationOutcome {
    /// Certificate `c_{i,j} >= 0` with
    /// `b_{i,j}(I) = b_{i,j}(L) - c_{i,j} - c_{i-1,j}`.
    Feasible(BTreeMap<(u32, u32), u64>),
    /// The forced recursion produced a negative entry or failed to
    /// terminate at zero.
    Infeasible { i: u32, j: u32 },
}

impl Serialize for CancellationOutcome {
    /// `{"feasible": bool, "cancellations": [{"i", "j", "c"}, ...]}`, with
    /// the violating position instead of the list when infeasible.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(Serialize)]
        struct Row {
            i: u32,
            j: u32,
            c: u64,
        }
        match self {
            CancellationOutcome::Feasible(map) => {
                let rows: Vec<Row> =
                    map.iter().map(|(&(i, j), &c)| Row { i, j, c }).collect();
                let mut st = s.serialize_struct("CancellationOutcome", 2)?;
                st.serialize_field("feasible", &true)?;
                st.serialize_field("cancellations", &rows)?;
                st.end()
            }
            CancellationOutcome::Infeasible { i, j } => {
                let mut st = s.serialize_struct("CancellationOutcome", 3)?;
                st.serialize_field("feasible", &false)?;
                st.serialize_field("i", i)?;
                st.serialize_field("j", j)?;
                st.end()
            }
        }
    }
}

impl CancellationOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, CancellationOutcome::Feasible(_))
    }
}

/// Decide whether the Betti numbers of `I` arise from those of `L` by
/// consecutive cancellations.  The recursion
/// `c_{i,j} = b_{i,j}(L) - b_{i,j}(I) - c_{i-1,j}` is forced; feasibility
/// means every `c_{i,j}` is nonnegative and the tail returns to zero.
pub fn consecutive_cancellation(
    l_table: &BettiTable,
    i_table: &BettiTable,
) -> CancellationOutcome {
    assert_eq!(
        l_table.convention, i_table.convention,
        "tables must share a convention"
    );
    let degrees: std::collections::BTreeSet<u32> = l_table
        .iter()
        .map(|(_, j, _)| j)
        .chain(i_table.iter().map(|(_, j, _)| j))
        .collect();
    let imax = l_table
        .max_homological_index()
        .max(i_table.max_homological_index())
        .unwrap_or(0);
    let mut certificate = BTreeMap::new();
    for &j in &degrees {
        let mut prev: i64 = 0;
        for i in 0..=imax {
            let c = l_table.get(i, j) as i64 - i_table.get(i, j) as i64 - prev;
            if c < 0 {
                return CancellationOutcome::Infeasible { i, j };
            }
            if c > 0 {
                certificate.insert((i, j), c as u64);
            }
            prev = c;
        }
        if prev != 0 {
            return CancellationOutcome::Infeasible { i: imax, j };
        }
    }
    CancellationOutcome::Feasible(certificate)
}

/// Entrywise dominance `A >= B`.
pub fn betti_dominates(a: &BettiTable, b: &BettiTable) -> bool {
    assert_eq!(a.convention, b.convention, "tables must share a convention");
    b.iter().all(|(i, j, count)| a.get(i, j) >= count)
}

/// The alternating-sum identity tying Hilbert functions to Betti numbers:
/// `Hilb(I)(d) = Σ_{i,j} (-1)^i b_{i,j}(I) dim S_{d-j}` for all `d <= cap`.
pub fn hilbert_betti_identity_holds(
    ideal: &MonomialIdeal,
    table: &BettiTable,
    cap: u32,
) -> bool {
    assert_eq!(table.convention, Convention::Ideal);
    let hf = hilbert_function(ideal, cap);
    (0..=cap).all(|d| {
        let mut acc: i128 = 0;
        for (i, j, b) in table.iter() {
            if j > d {
                continue;
            }
            let term = b as i128 * ring_dimension(ideal.nvars(), d - j) as i128;
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc == hf.value(d) as i128
    })
}
