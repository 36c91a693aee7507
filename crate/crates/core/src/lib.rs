//! Exact computational topology for `U(1)` Chern–Simons theory on
//! Seifert-fibered 3-manifolds.
//!
//! * [`linalg`]: rational/integer matrices, elimination, Smith normal form.
//! * [`complex`]: based chain complexes, homology, Reidemeister torsion.
//! * [`group`]: finitely presented groups and Seifert fundamental groups.
//! * [`twisted`]: Fox calculus and complexes twisted by a representation.
//! * [`localization`]: exterior-algebra evaluation of the localization integrand.
//! * [`partition`]: the comparison of the two partition-function exponents.
//! * [`json`]: file formats shared with the command-line tool.
//!
//! All arithmetic is exact.

pub mod complex;
pub mod error;
pub mod group;
pub mod json;
pub mod linalg;
pub mod localization;
pub mod partition;
pub mod twisted;

pub use complex::{
    integral_homology, tensor_product, torsion, torsion_choice_independence_check, AbelianGroupDescription,
    BasedChainComplex, HomologyBasis, IntegerChainComplex, TorsionValue,
};
pub use error::{Error, Result};
pub use group::{seifert_presentation, GroupPresentation, Letter, Word};
pub use linalg::{
    rat, ratio, smith_normal_form, Integer, IntegerMatrix, Rational, RationalMatrix, SnfResult,
};
pub use localization::{
    a_hat_series, bw_partition_torus, eta_prefactor, BwPartition, EtaPrefactor, ExteriorClass,
    LevelPolynomial,
};
pub use partition::{compare, ComparisonReport, SeifertData};
pub use twisted::{
    fox_derivative, presentation_complex, specialize, GroupRingComplex, GroupRingElement, Representation,
};
