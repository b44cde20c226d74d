//! PBW normal form in U(sl2)^{⊗N}: reduce words, compare rewriting orders,
//! and check that the Casimir is central.

use truncated_reflection::nc::{
    casimir, commutator, normal_form, normal_form_expr, GenSymbol, NCPoly, RedexOrder,
};
use truncated_reflection::scalar::CPoly;

fn main() {
    let word = [
        GenSymbol::e(1),
        GenSymbol::h(1),
        GenSymbol::f(1),
        GenSymbol::e(1),
    ];
    let nf = normal_form(&word);
    println!("e1*h1*f1*e1 = {nf}");

    let expr = vec![(word.to_vec(), CPoly::one())];
    let left = normal_form_expr(&expr, RedexOrder::Leftmost);
    let right = normal_form_expr(&expr, RedexOrder::Rightmost);
    assert_eq!(left, right);
    assert_eq!(left, nf);

    let (e, f, h) = (NCPoly::e(1), NCPoly::f(1), NCPoly::h(1));
    println!("[e1,f1] = {}", commutator(&e, &f));
    println!("[h1,e1] = {}", commutator(&h, &e));

    let c = casimir(1);
    println!("c1 = {c}");
    for g in [&e, &f, &h] {
        assert!(commutator(&c, g).is_zero());
    }
    // different sites commute
    assert!(commutator(&NCPoly::e(1), &NCPoly::f(2)).is_zero());
    println!("casimir is central, sites commute");
}
