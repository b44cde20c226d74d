//! Level 1: Serre, Higgs and Hahn relations, and the center.

use truncated_reflection::euler::EulerTable;
use truncated_reflection::nc::NCPoly;
use truncated_reflection::presentations::{
    check_center_n1, check_higgs_n1, check_realization_n1, hahn_check, serre_check, RelationSuite,
};
use truncated_reflection::tower::{Mu0, TowerLevel};

fn show(suite: &RelationSuite) {
    for r in suite.evaluate() {
        let mark = if r.holds() { "ok  " } else { "FAIL" };
        println!("{mark} {}: {}", suite.name, r.label);
    }
}

fn main() {
    let table = EulerTable::build(4);
    let level1 = TowerLevel::level0(&Mu0::Symbolic).dress(&table).unwrap();

    show(&serre_check(
        level1.gen("h0"),
        level1.gen("e1"),
        level1.gen("f1"),
    ));
    show(&check_higgs_n1(&level1));
    show(&check_realization_n1(&level1));
    show(&check_center_n1(&level1));
    show(&hahn_check(&level1));

    // the plain sl2 triple does not satisfy the quartic relations
    let plain = serre_check(&NCPoly::h(1), &NCPoly::e(1), &NCPoly::f(1)).evaluate();
    println!("plain sl2: [E,[E,[E,F]]] + 12EHE = {}", plain[2].residual);
}
