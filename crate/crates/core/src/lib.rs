//! Primitive integer triangles with a 60° or a 120° angle.
//!
//! A triple `(a, b, c)` has side `a` opposite the distinguished angle:
//! `a² = b² + c² − bc` for 60°, `a² = b² + c² + bc` for 120°. The crate
//! generates both families three ways (an `(m, n)` parametrization, a
//! five-matrix tree, and exhaustive search), maps between them with
//! `S = [[1,0,0],[0,0,1],[0,1,−1]]`, and certifies the paths agree.
//!
//! All arithmetic is exact `i64` with overflow reported as
//! [`Error::Overflow`].

mod arith;
pub mod bijection;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod params;
pub mod tree;
pub mod triple;

pub use arith::{exact_sqrt, isqrt};
pub use bijection::{apply_matrix, conjugate, from_sub, to_sub, S, S_INV};
pub use error::{Error, Result};
pub use matrix::GenMatrix;
pub use oracle::{brute_force, certify, certify_both, CertificationReport};
pub use params::{
    eisenstein_from_params, params_from_triple, sub_eisenstein_from_params, swap_120, twin_60,
    validate_params, ParamPair, Variant,
};
pub use tree::{
    apply_word, canonical_matrix_sets, derive_word, derive_word_in, enumerate, DerivationWord,
    MatrixSet, SeedId, TreeEnumerator, TreeNode,
};
pub use triple::{
    canonicalize, classify, form_value, gcd3, is_member, is_primitive, member_family, Family,
    Triple,
};
