//! Level 2: the relation list, central elements, and how they compare with
//! the coefficients of delta(x).

use truncated_reflection::euler::EulerTable;
use truncated_reflection::presentations::{
    check_center_n2, check_center_n2_corrected, check_n2, delta_cross_check_n2,
};
use truncated_reflection::tower::{build_tower, Mu0};

fn main() {
    let levels = build_tower(2, &Mu0::Symbolic, &EulerTable::build(8)).unwrap();
    let t = &levels[2];

    for (name, g) in t.generators.iter() {
        println!("{name}: {} terms", g.len());
    }

    for suite in [
        check_n2(t),
        check_center_n2(t),
        check_center_n2_corrected(t),
    ] {
        let results = suite.evaluate();
        let bad: Vec<_> = results.iter().filter(|r| !r.holds()).collect();
        println!(
            "{}: {} relations, {} failing",
            suite.name,
            results.len(),
            bad.len()
        );
        for r in bad {
            println!("  {} ({} terms)", r.label, r.residual_terms());
        }
    }

    for c in delta_cross_check_n2(t) {
        println!(
            "[x^{}] delta(x) - {} has {} terms, central: {}",
            c.power,
            c.name,
            c.discrepancy.len(),
            c.discrepancy_central
        );
    }
}
