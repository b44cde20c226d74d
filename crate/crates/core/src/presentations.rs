//! Named presentations checked against the tower realizations: the
//! Serre–Chevalley relations, the Higgs algebra at level 1 with its center
//! and the Hahn form, and the relation list of level 2.
//!
//! Every relation is stored as `(label, lhs, rhs)` and evaluated exactly as
//! written, left factor first.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::nc::{anticommutator, casimir, commutator, NCPoly};
use crate::scalar::{rat, CPoly};
use crate::tower::{is_central, TowerLevel};

#[derive(Clone, Debug)]
pub struct Relation {
    pub label: String,
    pub lhs: NCPoly,
    pub rhs: NCPoly,
}

/// Outcome of one relation.
#[derive(Clone, Debug)]
pub struct RelationResult {
    pub label: String,
    pub residual: NCPoly,
}

impl RelationResult {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn residual_terms(&self) -> usize {
        self.residual.len()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.residual.max_degree()
    }
}

#[derive(Clone, Debug, Default)]
pub struct RelationSuite {
    pub name: String,
    relations: Vec<Relation>,
    labels: BTreeSet<String>,
}

impl RelationSuite {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            ..Self::default()
        }
    }

    /// Panics on a repeated label.
    pub fn add(&mut self, label: impl Into<String>, lhs: NCPoly, rhs: NCPoly) -> &mut Self {
        let label = label.into();
        assert!(
            self.labels.insert(label.clone()),
            "duplicate relation label {label}"
        );
        self.relations.push(Relation { label, lhs, rhs });
        self
    }

    /// Adds `[z, g] = 0` for every non-central generator `g` of `level`.
    pub fn add_central(&mut self, name: &str, z: &NCPoly, level: &TowerLevel) -> &mut Self {
        for (g, comm) in is_central(z, level) {
            self.add(format!("[{name}, {g}] = 0"), comm, NCPoly::zero());
        }
        self
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    /// Residuals `lhs − rhs`, in insertion order.
    pub fn evaluate(&self) -> Vec<RelationResult> {
        self.relations
            .par_iter()
            .map(|r| RelationResult {
                label: r.label.clone(),
                residual: &r.lhs - &r.rhs,
            })
            .collect()
    }
}

fn br(a: &NCPoly, b: &NCPoly) -> NCPoly {
    commutator(a, b)
}

fn ac(a: &NCPoly, b: &NCPoly) -> NCPoly {
    anticommutator(a, b)
}

fn q(p: &NCPoly, n: i64, d: i64) -> NCPoly {
    p.scale(&rat(n, d))
}

fn prod(fs: &[&NCPoly]) -> NCPoly {
    fs.iter().fold(NCPoly::one(), |acc, f| &acc * *f)
}

/// `[H,E] = 2E`, `[H,F] = −2F`, `[E,[E,[E,F]]] = −12EHE`,
/// `[F,[F,[F,E]]] = 12FHF`.
pub fn serre_check(h: &NCPoly, e: &NCPoly, f: &NCPoly) -> RelationSuite {
    let mut s = RelationSuite::new("serre");
    s.add("[H,E] = 2E", br(h, e), q(e, 2, 1))
        .add("[H,F] = -2F", br(h, f), q(f, -2, 1))
        .add(
            "[E,[E,[E,F]]] = -12EHE",
            br(e, &br(e, &br(e, f))),
            q(&prod(&[e, h, e]), -12, 1),
        )
        .add(
            "[F,[F,[F,E]]] = 12FHF",
            br(f, &br(f, &br(f, e))),
            q(&prod(&[f, h, f]), 12, 1),
        );
    s
}

/// `γ = ½h_0² − hbar_0` at level 1.
pub fn gamma_n1(level1: &TowerLevel) -> NCPoly {
    let h0 = level1.gen("h0");
    &q(&(h0 * h0), 1, 2) - level1.gen("hbar0")
}

/// `δ_2 = 2{e_1,f_1} − ¼h_0⁴ + (γ−1)h_0² + 2μh_0` at level 1.
pub fn delta2_n1(level1: &TowerLevel) -> NCPoly {
    let (h0, e1, f1, mu) = (
        level1.gen("h0"),
        level1.gen("e1"),
        level1.gen("f1"),
        level1.gen("mu"),
    );
    let gamma = gamma_n1(level1);
    let h0sq = h0 * h0;
    &(&(&q(&ac(e1, f1), 2, 1) - &q(&(&h0sq * &h0sq), 1, 4)) + &(&(&gamma - &NCPoly::one()) * &h0sq))
        + &q(&(mu * h0), 2, 1)
}

/// Higgs relations of level 1, including the γ-form of `[e_1,f_1]`.
pub fn check_higgs_n1(level1: &TowerLevel) -> RelationSuite {
    let (h0, hb0, e1, f1, mu) = (
        level1.gen("h0"),
        level1.gen("hbar0"),
        level1.gen("e1"),
        level1.gen("f1"),
        level1.gen("mu"),
    );
    let gamma = gamma_n1(level1);
    let h0cube = prod(&[h0, h0, h0]);
    let mut s = RelationSuite::new("higgs");
    s.add("[h0,e1] = 2e1", br(h0, e1), q(e1, 2, 1))
        .add("[h0,f1] = -2f1", br(h0, f1), q(f1, -2, 1))
        .add("[e1,f1] = -h0 hbar0 + mu", br(e1, f1), &-&(h0 * hb0) + mu)
        .add("[hbar0,e1] = {h0,e1}", br(hb0, e1), ac(h0, e1))
        .add("[hbar0,f1] = -{h0,f1}", br(hb0, f1), -ac(h0, f1))
        .add("[h0,hbar0] = 0", br(h0, hb0), NCPoly::zero())
        .add(
            "[e1,f1] = gamma h0 - 1/2 h0^3 + mu",
            br(e1, f1),
            &(&(&gamma * h0) - &q(&h0cube, 1, 2)) + mu,
        );
    s
}

/// The level-1 generators against their closed forms in `U(sl2)`, with
/// `mu0` symbolic and the sl2 factor on site 1.
pub fn check_realization_n1(level1: &TowerLevel) -> RelationSuite {
    let m = NCPoly::scalar(CPoly::mu0());
    let (h, e, f) = (NCPoly::h(1), NCPoly::e(1), NCPoly::f(1));
    let c = casimir(1);
    let one = NCPoly::one();
    let m2 = &m * &m;
    let mut s = RelationSuite::new("realization");
    s.add("h0 = h + mu0", level1.gen("h0").clone(), &h + &m)
        .add(
            "hbar0 = 1/2 h^2 + mu0 h + 1/4 - 1/4 c",
            level1.gen("hbar0").clone(),
            &(&(&q(&(&h * &h), 1, 2) + &(&m * &h)) + &q(&one, 1, 4)) - &q(&c, 1, 4),
        )
        .add(
            "e1 = -mu0 e - 1/4 {h,e}",
            level1.gen("e1").clone(),
            &-&(&m * &e) - &q(&ac(&h, &e), 1, 4),
        )
        .add(
            "f1 = mu0 f + 1/4 {h,f}",
            level1.gen("f1").clone(),
            &(&m * &f) + &q(&ac(&h, &f), 1, 4),
        )
        .add(
            "mu = mu0/4 (c + 1)",
            level1.gen("mu").clone(),
            q(&(&m * &(&c + &one)), 1, 4),
        )
        .add(
            "gamma = mu0^2/2 - 1/4 + c/4",
            gamma_n1(level1),
            &(&q(&m2, 1, 2) - &q(&one, 1, 4)) + &q(&c, 1, 4),
        )
        .add(
            "delta2 = 1/4 (mu0^4 - mu0^2 (3 + c) - c)",
            delta2_n1(level1),
            q(
                &(&(&(&m2 * &m2) - &(&m2 * &(&q(&one, 3, 1) + &c))) - &c),
                1,
                4,
            ),
        );
    s
}

/// Centrality of `μ`, `γ` and `δ_2` at level 1.
pub fn check_center_n1(level1: &TowerLevel) -> RelationSuite {
    let mut s = RelationSuite::new("center-n1");
    s.add_central("mu", level1.gen("mu"), level1)
        .add_central("gamma", &gamma_n1(level1), level1)
        .add_central("delta2", &delta2_n1(level1), level1);
    s
}

/// The Hahn pair `X = ½h_0`, `Y = −½(hbar_0 + e_1 + f_1)`.
pub fn hahn_generators(level1: &TowerLevel) -> (NCPoly, NCPoly) {
    let x = q(level1.gen("h0"), 1, 2);
    let y = q(
        &(&(level1.gen("hbar0") + level1.gen("e1")) + level1.gen("f1")),
        -1,
        2,
    );
    (x, y)
}

/// Both Hahn relations, the inverse map, and the two forms of `Y`.
pub fn hahn_check(level1: &TowerLevel) -> RelationSuite {
    let (h0, e1, f1, mu) = (
        level1.gen("h0"),
        level1.gen("e1"),
        level1.gen("f1"),
        level1.gen("mu"),
    );
    let gamma = gamma_n1(level1);
    let (x, y) = hahn_generators(level1);
    let xy = br(&x, &y);
    let base = &(&q(&gamma, 1, 2) - &(&x * &x)) - &y;
    let y_alt = q(
        &(&(&(&(h0 * h0) - &q(&gamma, 2, 1)) + &q(e1, 2, 1)) + &q(f1, 2, 1)),
        -1,
        4,
    );
    let mut s = RelationSuite::new("hahn");
    s.add(
        "[[X,Y],Y] = {X,Y} + mu/2",
        br(&xy, &y),
        &ac(&x, &y) + &q(mu, 1, 2),
    )
    .add(
        "[X,[X,Y]] = X^2 + Y - gamma/2",
        br(&x, &xy),
        &(&(&x * &x) + &y) - &q(&gamma, 1, 2),
    )
    .add("e1 = gamma/2 - X^2 - Y - [X,Y]", e1.clone(), &base - &xy)
    .add("f1 = gamma/2 - X^2 - Y + [X,Y]", f1.clone(), &base + &xy)
    .add("h0 = 2X", h0.clone(), q(&x, 2, 1))
    .add("-1/4 (h0^2 - 2gamma + 2e1 + 2f1) = Y", y_alt, y);
    s
}

/// `γ_1 = hbar_0 − ½h_0²` at level 2 (opposite sign to the level-1 γ).
pub fn gamma1_n2(level2: &TowerLevel) -> NCPoly {
    let h0 = level2.gen("h0");
    level2.gen("hbar0") - &q(&(h0 * h0), 1, 2)
}

/// `γ_2 = hbar_2 − h_0h_2 + h_0²(1 + ⅛h_0² + ½γ_1) − {e_1,f_1}`.
pub fn gamma2_n2(level2: &TowerLevel) -> NCPoly {
    let (h0, h2, hb2, e1, f1) = (
        level2.gen("h0"),
        level2.gen("h2"),
        level2.gen("hbar2"),
        level2.gen("e1"),
        level2.gen("f1"),
    );
    let h0sq = h0 * h0;
    let inner = &(&NCPoly::one() + &q(&h0sq, 1, 8)) + &q(&gamma1_n2(level2), 1, 2);
    &(&(hb2 - &(h0 * h2)) + &(&h0sq * &inner)) - &ac(e1, f1)
}

/// The level-2 relation list, as written, plus centrality of `γ_1, γ_2`.
pub fn check_n2(level2: &TowerLevel) -> RelationSuite {
    let g = |n: &str| level2.gen(n);
    let (h0, h2, hb0, hb2) = (g("h0"), g("h2"), g("hbar0"), g("hbar2"));
    let (e1, e3, f1, f3, mu) = (g("e1"), g("e3"), g("f1"), g("f3"), g("mu"));
    let one = NCPoly::one();
    let mixed = &(h2 - &(h0 * &(hb0 + hb2))) + mu;

    let mut s = RelationSuite::new("n2");
    s.add("[h0,e1] = 2e1", br(h0, e1), q(e1, 2, 1))
        .add("[h0,f1] = -2f1", br(h0, f1), q(f1, -2, 1))
        .add("[e1,f1] = h2 - h0 hbar0", br(e1, f1), h2 - &(h0 * hb0))
        .add("[h0,h2] = 0", br(h0, h2), NCPoly::zero())
        .add("[h2,e1] = 2e3", br(h2, e1), q(e3, 2, 1))
        .add("[h2,f1] = -2f3", br(h2, f1), q(f3, -2, 1))
        .add("[h0,e3] = 2e3", br(h0, e3), q(e3, 2, 1))
        .add("[h0,f3] = -2f3", br(h0, f3), q(f3, -2, 1))
        .add("[e1,e3] = 0", br(e1, e3), NCPoly::zero())
        .add("[f1,f3] = 0", br(f1, f3), NCPoly::zero())
        .add("[e1,f3] = [e3,f1]", br(e1, f3), br(e3, f1))
        .add(
            "[e1,f3] = h2 - h0(hbar0 + hbar2) + mu",
            br(e1, f3),
            mixed.clone(),
        )
        .add("[e3,f1] = h2 - h0(hbar0 + hbar2) + mu", br(e3, f1), mixed)
        .add(
            "[h2,e3] = 2hbar0(e3 - e1) - 2hbar2 e1 + 2e3",
            br(h2, e3),
            &(&q(&(hb0 * &(e3 - e1)), 2, 1) - &q(&(hb2 * e1), 2, 1)) + &q(e3, 2, 1),
        )
        .add(
            "[h2,f3] = 2hbar2 f1 + 2hbar0(f1 - f3) - 2f3",
            br(h2, f3),
            &(&q(&(hb2 * f1), 2, 1) + &q(&(hb0 * &(f1 - f3)), 2, 1)) - &q(f3, 2, 1),
        )
        .add(
            "[e3,f3] = h2 - h0 hbar0 - hbar2(h0 + h2) - 2f1 e3 + 2f3 e1 + mu(1 + hbar0)",
            br(e3, f3),
            &(&(&(&(h2 - &(h0 * hb0)) - &(hb2 * &(h0 + h2))) - &q(&(f1 * e3), 2, 1))
                + &q(&(f3 * e1), 2, 1))
                + &(mu * &(&one + hb0)),
        );
    s.add_central("gamma1", &gamma1_n2(level2), level2)
        .add_central("gamma2", &gamma2_n2(level2), level2);
    s
}

/// `δ_2 = 2{e_3−e_1, f_3−f_1} − (h_0−h_2)² − hbar_2² + 2μ(h_2 − hbar_0)`.
pub fn delta2_n2(level2: &TowerLevel) -> NCPoly {
    let g = |n: &str| level2.gen(n);
    let (h0, h2, hb0, hb2) = (g("h0"), g("h2"), g("hbar0"), g("hbar2"));
    let (e1, e3, f1, f3, mu) = (g("e1"), g("e3"), g("f1"), g("f3"), g("mu"));
    let d = h0 - h2;
    &(&(&q(&ac(&(e3 - e1), &(f3 - f1)), 2, 1) - &(&d * &d)) - &(hb2 * hb2))
        + &q(&(mu * &(h2 - hb0)), 2, 1)
}

/// The `x²` coefficient of `δ^(2)(x)` in the same generators:
/// `δ_2` with `2μh_2` in place of `2μ(h_2 − hbar_0)`.
pub fn delta2_n2_corrected(level2: &TowerLevel) -> NCPoly {
    &delta2_n2(level2) + &q(&(level2.gen("mu") * level2.gen("hbar0")), 2, 1)
}

/// `δ_4 = 2{e_1,f_3} + 2{e_3,f_1} − 6{e_1,f_1} + 2h_0(2h_0 − 2h_2 + μ) + h_2²
/// + hbar_0(hbar_0 − 2hbar_2 − 2)`.
pub fn delta4_n2(level2: &TowerLevel) -> NCPoly {
    let g = |n: &str| level2.gen(n);
    let (h0, h2, hb0, hb2) = (g("h0"), g("h2"), g("hbar0"), g("hbar2"));
    let (e1, e3, f1, f3, mu) = (g("e1"), g("e3"), g("f1"), g("f3"), g("mu"));
    let two = NCPoly::int(2);
    let anti = &(&q(&ac(e1, f3), 2, 1) + &q(&ac(e3, f1), 2, 1)) - &q(&ac(e1, f1), 6, 1);
    let h_part = &q(&(h0 * &(&(&q(h0, 2, 1) - &q(h2, 2, 1)) + mu)), 2, 1) + &(h2 * h2);
    let hb_part = hb0 * &(&(hb0 - &q(hb2, 2, 1)) - &two);
    &(&anti + &h_part) + &hb_part
}

/// How a named central element compares with a coefficient of `δ(x)`.
#[derive(Clone, Debug)]
pub struct DeltaCrossCheck {
    pub name: String,
    pub power: u16,
    /// `[x^power] δ(x) − element`.
    pub discrepancy: NCPoly,
    /// Whether the discrepancy is itself central.
    pub discrepancy_central: bool,
}

/// Centrality of `δ_2, δ_4` at level 2, as written.
pub fn check_center_n2(level2: &TowerLevel) -> RelationSuite {
    let mut s = RelationSuite::new("center-n2");
    s.add_central("delta2", &delta2_n2(level2), level2)
        .add_central("delta4", &delta4_n2(level2), level2);
    s
}

/// Centrality of the corrected `δ_2`.
pub fn check_center_n2_corrected(level2: &TowerLevel) -> RelationSuite {
    let mut s = RelationSuite::new("center-n2-corrected");
    s.add_central("delta2'", &delta2_n2_corrected(level2), level2);
    s
}

/// Compares `δ_2, δ_4` with the `x²` and `x⁴` coefficients of `δ^(2)(x)`.
pub fn delta_cross_check_n2(level2: &TowerLevel) -> Vec<DeltaCrossCheck> {
    [
        ("delta2", 2, delta2_n2(level2)),
        ("delta4", 4, delta4_n2(level2)),
    ]
    .into_iter()
    .map(|(name, power, element)| {
        let discrepancy = &level2.delta_coeff(power) - &element;
        let discrepancy_central = is_central(&discrepancy, level2)
            .iter()
            .all(|(_, c)| c.is_zero());
        DeltaCrossCheck {
            name: name.to_string(),
            power,
            discrepancy,
            discrepancy_central,
        }
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::EulerTable;
    use crate::tower::{build_tower, Mu0};
    use std::sync::OnceLock;

    fn levels() -> &'static [TowerLevel] {
        static LEVELS: OnceLock<Vec<TowerLevel>> = OnceLock::new();
        LEVELS.get_or_init(|| build_tower(2, &Mu0::Symbolic, &EulerTable::build(8)).unwrap())
    }

    fn failing(s: &RelationSuite) -> Vec<(String, usize)> {
        s.evaluate()
            .into_iter()
            .filter(|r| !r.holds())
            .map(|r| (r.label.clone(), r.residual_terms()))
            .collect()
    }

    #[test]
    fn serre_on_level1() {
        let t = &levels()[1];
        let s = serre_check(t.gen("h0"), t.gen("e1"), t.gen("f1"));
        assert_eq!(failing(&s), vec![]);
    }

    #[test]
    fn serre_negative_controls() {
        let (h, e, f) = (NCPoly::h(1), NCPoly::e(1), NCPoly::f(1));
        let r = serre_check(&h, &e, &f).evaluate();
        assert!(r[0].holds() && r[1].holds());
        assert!(!r[2].holds() && !r[3].holds());

        let t = &levels()[1];
        let r = serre_check(t.gen("h0"), &q(t.gen("e1"), 2, 1), t.gen("f1")).evaluate();
        assert!(r[0].holds() && r[1].holds());
        assert!(!r[2].holds() && !r[3].holds());
    }

    #[test]
    fn higgs_realization_and_center() {
        let t = &levels()[1];
        assert_eq!(failing(&check_higgs_n1(t)), vec![]);
        assert_eq!(failing(&check_realization_n1(t)), vec![]);
        assert_eq!(failing(&check_center_n1(t)), vec![]);
    }

    #[test]
    fn hahn() {
        assert_eq!(failing(&hahn_check(&levels()[1])), vec![]);
    }

    #[test]
    fn level2_relations() {
        assert_eq!(failing(&check_n2(&levels()[2])), vec![]);
    }

    #[test]
    fn level2_center() {
        let t = &levels()[2];
        let bad: Vec<String> = failing(&check_center_n2(t))
            .into_iter()
            .map(|(l, _)| l)
            .collect();
        assert_eq!(
            bad,
            [
                "[delta2, e1] = 0",
                "[delta2, e3] = 0",
                "[delta2, f1] = 0",
                "[delta2, f3] = 0"
            ]
        );
        assert_eq!(failing(&check_center_n2_corrected(t)), vec![]);

        let cross = delta_cross_check_n2(t);
        assert_eq!(
            cross[0].discrepancy,
            q(&(t.gen("mu") * t.gen("hbar0")), 2, 1)
        );
        assert!(!cross[0].discrepancy_central);
        assert_eq!(cross[1].discrepancy, NCPoly::one());
        assert!(cross[1].discrepancy_central);
        assert_eq!(t.delta_coeff(2), delta2_n2_corrected(t));
    }

    #[test]
    fn non_central_is_caught() {
        let t = &levels()[2];
        let mut s = RelationSuite::new("control");
        s.add_central("e1", t.gen("e1"), t);
        let bad = failing(&s);
        assert!(bad.iter().any(|(l, _)| l == "[e1, h0] = 0"));
    }

    #[test]
    #[should_panic(expected = "duplicate")]
    fn duplicate_labels_rejected() {
        let mut s = RelationSuite::new("dup");
        s.add("a", NCPoly::one(), NCPoly::one());
        s.add("a", NCPoly::one(), NCPoly::one());
    }
}
