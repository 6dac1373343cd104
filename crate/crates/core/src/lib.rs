//! The doubled Hecke algebra and the Levi quantum group acting on the
//! enhanced tensor space `V̄^⊗r`, with `V̄ = V ⊕ Cη` and `dim V = n`.
//!
//! Operators are sparse matrices over a [`scalar::Field`]: the exact field
//! `Q(q)`, a rational specialization, or a random point modulo a large prime.
//! The crate builds the images of both algebras, checks their defining
//! relations, and certifies that each image is the commutant of the other.
//!
//! ```
//! use doubled_hecke::duality::verify_main_theorem;
//! use doubled_hecke::scalar::ExactField;
//!
//! let report = verify_main_theorem(1, 2, &ExactField);
//! assert!(report.double_centralizer);
//! assert_eq!((report.dim_levi_span, report.dim_dha_span), (3, 6));
//! ```

pub mod cli;
pub mod combinat;
pub mod dha;
pub mod duality;
pub mod hecke;
pub mod linalg;
pub mod qgroup;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use dha::{DHGenerator, DHWord};
pub use duality::{certify, DualityError, DualityReport};
pub use hecke::HeckeElement;
pub use linalg::SpanBasis;
pub use qgroup::QGenerator;
pub use report::RelationReport;
pub use scalar::{ExactField, Field, FieldConfig, PrimeField, RationalField, Scalar, ScalarMode};
pub use tensor::{MultiIndex, SparseOperator, SparseVector, TensorShape};
