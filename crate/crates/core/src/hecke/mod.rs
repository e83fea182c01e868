//! Finite and affine Hecke algebras of type A.

pub mod affine;
pub mod antispherical;
pub mod derivative;
pub mod finite;
pub mod induce;
pub mod module;
pub mod oracle;
pub mod text;

pub use affine::{delta, levi_embed, reflect, sign_projector_tail, AffineElement, RightNormal, Weight};
pub use finite::{normalized_sign_projector, poincare, sign_character, sign_projector, FiniteHeckeElement};
pub use oracle::{Laurent, PolyOracle};
pub use module::{residual, AffineModule, ExactModule, HeckeScalar, NumericModule, RelationReport};
pub use induce::{check_generic, induce, induce_levi, is_generic, principal_series};
pub use derivative::{
    bz_derivative, bz_subspace, bz_subspace_brute, central_block, central_fingerprint, generalized_eigenspace, leibniz_check,
    principal_derivative_dim, tail_sign_matrix, LeibnizReport, LeibnizTerm,
};
pub use antispherical::{antispherical_act, weight_window, window_action, AntisphericalVector};
