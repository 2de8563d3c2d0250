//! A workbench for monomial ideals: exact Hilbert functions, graded and
//! multigraded Betti numbers via Koszul homology, combinatorial shifting
//! and compression transforms, and machine verification of the
//! lex-plus-powers inequality for ideals containing pure powers of the
//! variables.
//!
//! ```
//! use lexpow::{betti_dominates, betti_table, lpp_verify, Field, LppOptions,
//!              Monomial, MonomialIdeal, PowerSequence};
//!
//! let p = PowerSequence::new(3, vec![2, 2, 2]);
//! let ideal = p.to_ideal().sum(&MonomialIdeal::new(
//!     3,
//!     vec![Monomial::new(vec![0, 1, 1])], // x2*x3
//! ));
//! let report = lpp_verify(&ideal, &p, &LppOptions::default()).unwrap();
//! assert!(report.pass);
//! assert!(betti_dominates(&report.lex_table, &report.input_table));
//!
//! let (graded, multigraded) = betti_table(&ideal, Field::prime(2));
//! assert_eq!(graded.get(0, 2), 4);
//! assert_eq!(multigraded.to_graded(), graded);
//! ```

pub mod betti;
pub mod error;
pub mod field;
pub mod fuzz;
pub mod hilbert;
pub mod ideal;
pub mod koszul;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod powers;
pub mod transforms;
pub mod walk;

pub use betti::{
    betti_dominates, betti_table, colon_formula_betti, consecutive_cancellation, ek_betti,
    betti_reduction_check, quotient_betti_table, shadow, BettiTable, CancellationOutcome, Convention,
    MultigradedBettiTable,
};
pub use error::{Error, Result};
pub use field::Field;
pub use fuzz::{fuzz_campaign, FuzzConfig, FuzzReport};
pub use hilbert::{
    hf_equal, hilbert_function, hilbert_function_checked, hilbert_function_via_numerator,
    lexify, lexify_mod_p, HilbertFunction,
};
pub use ideal::MonomialIdeal;
pub use koszul::{koszul_betti_at, KoszulSubcomplex};
pub use monomial::{monomials_of_degree, ring_dimension, Monomial};
pub use order::{lex_cmp, revlex_cmp, revlex_cmp_ideals, revlex_cmp_sets, IdealOrdering};
pub use powers::PowerSequence;
pub use transforms::{
    borel_closure, compress, compress_plus_p, delete_power, is_borel, is_borel_plus_p,
    is_compressed, is_compressed_plus_p, is_shifted, is_shifted_plus_p, is_strongly_shifted,
    polarize, shift, strong_shift_plus_p, tshift_plus_p, ShiftSpec,
};
pub use walk::{
    borelify_plus_p, lpp_verify, LppOptions, LppReport, WalkOptions, WalkStep, WalkTrace,
};
