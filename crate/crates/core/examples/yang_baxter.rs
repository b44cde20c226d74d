//! The rational R-matrix, the Yang-Baxter equation, the RLL relations for
//! the sl2 L-matrix, and L(x)L(-x).

use truncated_reflection::matrix::{
    check_l_unitarity, check_rll, check_yang_baxter, check_yang_baxter_with, l_matrix,
    SpectralMatrix,
};

fn main() {
    let yb = check_yang_baxter();
    println!("Yang-Baxter residual terms: {}", yb.term_count());
    assert!(yb.is_zero());

    // a wrong swap breaks it
    let bad = check_yang_baxter_with(&SpectralMatrix::permutation(&[3, 1, 2, 0]));
    println!("with a wrong swap: {} terms", bad.term_count());
    assert!(!bad.is_zero());

    println!("L(x) =\n{}", l_matrix(1));
    let (first, second) = check_rll(1);
    assert!(first.is_zero() && second.is_zero());
    assert!(check_l_unitarity(1).is_zero());
    println!("RLL relations and L(x)L(-x) = (-x^2 + (1+c)/4) I hold");
}
