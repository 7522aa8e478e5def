//! Small named codes used throughout the tests, the self-test and the docs.

use crate::algebra::{FieldSpec, Matrix};
use crate::code::LinearCode;

fn gf2() -> FieldSpec {
    FieldSpec::prime(2).expect("GF(2)")
}

fn binary(n: usize, rows: &[&[u32]]) -> LinearCode {
    LinearCode::from_rows(&gf2(), n, rows).expect("catalog code is valid")
}

/// Binary `[9,7]` code built from the 3-partition `{1,2} ∪ {3,4} ∪ {5..9}`.
/// Its subcode supported on `{5..9}` has rate 4/5, above the code's 7/9.
pub fn unstable_9_7() -> LinearCode {
    binary(
        9,
        &[
            &[1, 1, 0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0, 1],
            &[0, 0, 0, 0, 0, 1, 0, 0, 1],
            &[0, 0, 0, 0, 0, 0, 1, 0, 1],
            &[0, 0, 0, 0, 0, 0, 0, 1, 1],
            &[0, 1, 0, 1, 0, 0, 0, 0, 1],
        ],
    )
}

/// Binary `[5,2]` stable code whose componentwise square is unstable.
pub fn stable_5_2() -> LinearCode {
    binary(5, &[&[1, 0, 0, 1, 1], &[0, 1, 1, 1, 1]])
}

/// The componentwise square of [`stable_5_2`], as a `[5,3]` code.
pub fn stable_5_2_square() -> LinearCode {
    binary(5, &[&[1, 0, 0, 0, 0], &[0, 1, 1, 0, 0], &[0, 0, 0, 1, 1]])
}

/// Binary `[3,2,2]` even-weight code.
pub fn even_weight_3_2() -> LinearCode {
    binary(3, &[&[1, 1, 0], &[0, 1, 1]])
}

/// Binary `[7,3]` simplex code: the columns are all nonzero vectors of `GF(2)^3`.
pub fn simplex_7_3() -> LinearCode {
    binary(
        7,
        &[
            &[1, 0, 1, 0, 1, 0, 1],
            &[0, 1, 1, 0, 0, 1, 1],
            &[0, 0, 0, 1, 1, 1, 1],
        ],
    )
}

/// Binary `[7,4,3]` Hamming code.
pub fn hamming_7_4() -> LinearCode {
    simplex_7_3().dual().expect("simplex dual")
}

/// Self-dual binary `[8,4,4]` extended Hamming code.
pub fn extended_hamming_8_4() -> LinearCode {
    binary(
        8,
        &[
            &[1, 1, 1, 1, 0, 0, 0, 0],
            &[0, 0, 1, 1, 1, 1, 0, 0],
            &[0, 0, 0, 0, 1, 1, 1, 1],
            &[0, 1, 0, 1, 0, 1, 0, 1],
        ],
    )
}

/// `[n,1]` repetition code.
pub fn repetition(field: &FieldSpec, n: usize) -> LinearCode {
    LinearCode::from_rows(field, n, &[vec![1u32; n]]).expect("repetition code")
}

/// `[n,n-1]` parity-check code: words whose coordinates sum to zero.
pub fn parity(field: &FieldSpec, n: usize) -> LinearCode {
    repetition(field, n).dual().expect("n >= 2")
}

/// The whole space `F^n`.
pub fn full_space(field: &FieldSpec, n: usize) -> LinearCode {
    LinearCode::new(Matrix::identity(field, n)).expect("identity")
}

/// Binary `[6,3]` code with nested minimum weight supports of sizes 1, 3, 6
/// and three distinct slopes.
pub fn totally_unstable_6_3() -> LinearCode {
    binary(
        6,
        &[&[1, 0, 0, 0, 0, 0], &[1, 1, 1, 0, 0, 0], &[0, 1, 1, 1, 1, 1]],
    )
}

/// Binary `[5,3]` code with an isolated weight-one coordinate.
pub fn isolated_coordinate_5_3() -> LinearCode {
    binary(5, &[&[1, 0, 0, 0, 0], &[0, 1, 1, 1, 1], &[0, 0, 1, 1, 0]])
}
