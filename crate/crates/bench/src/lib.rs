//! Fixed inputs shared by the benchmarks.

use macdaha::pbw::GenWord;
use macdaha::polyring::LaurentPoly;

/// x^λ in rank len(λ).
pub fn monomial(lam: &[i64]) -> LaurentPoly {
    LaurentPoly::x_pow(lam)
}

/// A degree-four word in rank 3 mixing all generators.
pub fn sample_word() -> GenWord {
    GenWord::parse("Y1 T2 X1 Y2 T1^-1 X3", 3).expect("valid word")
}
