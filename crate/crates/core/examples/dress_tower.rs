//! Build B^(0), B^(1), B^(2) by dressing, check the reflection equation and
//! compare the component recursion with the matrix product.

use std::time::Instant;

use truncated_reflection::euler::EulerTable;
use truncated_reflection::matrix::check_reflection;
use truncated_reflection::tower::{
    build_tower, delta_recursion_residual, dressed_components, Mu0, RecursionForm,
};

fn main() {
    let table = EulerTable::build(8);
    let levels = build_tower(2, &Mu0::Symbolic, &table).expect("dressing");

    for level in &levels {
        let t = Instant::now();
        let r = check_reflection(&level.matrix).unwrap();
        println!(
            "level {}: reflection residual {} terms ({:?}), {} generators",
            level.level,
            r.term_count(),
            t.elapsed(),
            level.generators.len()
        );
        assert!(r.is_zero());
    }

    print!("{}", levels[1].dump());

    for w in levels.windows(2) {
        let site = w[1].level as u32;
        let printed = dressed_components(&w[0].components, site, RecursionForm::AsPrinted).unwrap();
        let fixed = dressed_components(&w[0].components, site, RecursionForm::Corrected).unwrap();
        println!(
            "{} -> {}: printed recursion off by {} terms, corrected off by {}",
            w[0].level,
            w[1].level,
            printed.difference_terms(&w[1].components),
            fixed.difference_terms(&w[1].components),
        );
        println!(
            "  delta recursion residual: single factor {} terms, squared {} terms",
            delta_recursion_residual(&w[0], &w[1], 1).len(),
            delta_recursion_residual(&w[0], &w[1], 2).len(),
        );
    }
}
