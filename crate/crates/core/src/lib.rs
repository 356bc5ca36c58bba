//! Cohen-Macaulay tests, Hilbert data and monomial bases for rings
//! `R = k[x^a, x^p1 y^q1, ..., x^pt y^qt, y^b]`.
//!
//! The fast paths ([`hilbert`], [`fourgen`], [`curve`]) each have a
//! brute-force counterpart in [`oracle`] that the test suite compares
//! against.
//!
//! ```
//! use affine_cm::{hilbert_data, oracle, RingSpec};
//!
//! let ring = RingSpec::new(4, 4, [(3, 1), (1, 3)])?;
//! let hd = hilbert_data(&ring)?;
//! assert_eq!((hd.multiplicity, hd.constant_c), (4, 1));
//! assert_eq!(oracle::length_mod_parameters(&ring)?, 5);
//! # Ok::<(), affine_cm::Error>(())
//! ```

pub mod cli;
pub mod curve;
pub mod error;
pub mod fourgen;
pub mod hilbert;
pub mod lattice;
pub mod oracle;
pub mod ring;
pub mod semigroup;

pub use curve::{
    batch_classify, cm_special_cases, curve_basis, curve_constants, determinant_identities,
    is_cm_curve, BatchRow, CurveConstants, CurveSpec,
};
pub use error::{Error, Result};
pub use fourgen::{
    basis_algorithm, candidate_basis_b0, fourgen_constants, is_cm_fourgen, length_bound_check,
    BasisResult, FourGenConstants, FourGenInput, Relation, Step, TraceRecord,
};
pub use hilbert::{
    class_staircase, construct_ring, hilbert_data, is_cm_general, HilbertData, StaircaseClass,
};
pub use lattice::lattice_contains;
pub use oracle::{CornerSet, GswVerdict, Oracle};
pub use ring::{
    class_of, order_of, subgroup, validate, weighted_degree, ClassGroup, ClassVec, ExpVec,
    RawRing, RingSpec,
};
pub use semigroup::semigroup_contains;
