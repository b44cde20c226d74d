//! Euler polynomials, Bernoulli numbers and the product identity
//! `x(x-1)E_{2n}(x)` expanded back in the Euler basis.

use truncated_reflection::euler::{
    check_functional_relation, check_product_identity, euler_project, EulerTable,
};
use truncated_reflection::scalar::{CPoly, Rational};
use truncated_reflection::xpoly::XPoly;

fn main() {
    let table = EulerTable::build(12);
    for n in 0..=4 {
        println!("E_{n}(x) = {}", table.euler(n));
    }
    println!("B_2 = {}, B_4 = {}", table.bernoulli(2), table.bernoulli(4));

    for n in 0..=5 {
        let r = check_product_identity(n, &table);
        println!("product identity n={n}: residual {} terms", r.len());
        assert!(r.is_zero());
    }

    let series = check_functional_relation(10, &table);
    println!(
        "generating-function relation through w^8: zero = {}",
        series.is_zero()
    );
    assert!(series.is_zero());

    // x(x-1)E_2 lies in the span of E_4, E_2, E_0
    let x = CPoly::x();
    let p = &(&x * &(&x - &CPoly::one())) * table.euler(2);
    let proj = euler_project(&XPoly::<Rational>::from_cpoly(&p), &[4, 2, 0], &table);
    let coeffs: Vec<String> = proj.coefficients.iter().map(|c| c.to_string()).collect();
    println!(
        "x(x-1)E_2 = {} E_4 + {} E_2 + {} E_0",
        coeffs[0], coeffs[1], coeffs[2]
    );
    assert!(proj.remainder.is_zero());
}
