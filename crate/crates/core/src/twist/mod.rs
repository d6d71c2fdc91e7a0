//! The standard R-matrix, the three-stage twist and the twisted R-matrix,
//! evaluated in the fundamental representation.

mod build;
mod element;
mod ops;

pub use build::{
    build_f1, build_f1_gl3, build_f2, build_f3, build_full, build_full_with, dressed_e, dressed_f, r_standard_element,
    RootOrder, TwistParams,
};
pub use element::{CartanExp, CartanVec, ParamTerm, QExpFactor, QTerm, TwistElement, TwistFactor};
pub use ops::{
    cg3_reference, l_matrices, match_parameters, r_esoteric, r_standard_direct, r_standard_factorized,
    r_standard_product, twist_r, twisted_coproduct, variable_census, LMatrices,
};
