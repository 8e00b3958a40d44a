//! Exact computations with the polynomial representation of the GL_k double affine Hecke
//! algebra, nonsymmetric Macdonald polynomials, their almost-symmetric limits, and PBW
//! normal forms of the stable limit algebra.

pub mod coeffring;
pub mod weyl;
pub mod polyring;
pub mod symfunc;
#[allow(non_snake_case)]
pub mod daharep;
#[allow(non_snake_case)]
pub mod asymfunc;
pub mod pbw;
pub mod suite;
