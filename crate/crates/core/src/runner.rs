//! Batch verification: a fixed, ordered plan of check groups per command,
//! streamed as [`CheckReport`]s.

use std::io::{self, Write};
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use crate::error::Result;
use crate::euler::{check_functional_relation, check_product_identity, EulerTable};
use crate::matrix::{check_l_unitarity, check_reflection, check_rll, check_yang_baxter};
use crate::nc::NCPoly;
use crate::presentations::{
    check_center_n1, check_center_n2, check_center_n2_corrected, check_higgs_n1, check_n2,
    check_realization_n1, delta_cross_check_n2, hahn_check, serre_check, RelationSuite,
};
use crate::report::{CheckReport, Residual, Status};
use crate::scalar::{CPoly, Var};
use crate::tower::{
    components_from_generators, delta_recursion_residual, dressed_components, is_central,
    mu_recursion_residual, Mu0, RecursionForm, TowerLevel,
};

pub const DEFAULT_EULER_MAX_N: usize = 20;
pub const DEFAULT_SERIES_ORDER: usize = 10;
pub const DEFAULT_MAX_DETAIL_TERMS: usize = 8;
/// Applied to `verify tower --level 3` when no budget is given.
pub const LEVEL3_DEFAULT_BUDGET: Duration = Duration::from_secs(600);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Euler { max_n: usize },
    YangBaxter,
    Rll,
    Tower { level: usize },
    Hahn,
    N2,
    All { series_order: usize },
}

#[derive(Clone, Debug)]
pub struct Options {
    pub fail_fast: bool,
    pub max_detail_terms: usize,
    pub time_budget: Option<Duration>,
    pub json: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            fail_fast: false,
            max_detail_terms: DEFAULT_MAX_DETAIL_TERMS,
            time_budget: None,
            json: false,
        }
    }
}

/// How a run ended; maps onto the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    Failed,
    BudgetExceeded,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Passed => 0,
            Outcome::Failed => 1,
            Outcome::BudgetExceeded => 3,
        }
    }
}

/// Shared state of one run: the Euler table and the tower, built lazily.
pub struct Context {
    table: EulerTable,
    levels: Vec<TowerLevel>,
}

impl Context {
    pub fn new(euler_degree: usize) -> Self {
        Self {
            table: EulerTable::build(euler_degree.max(8)),
            levels: vec![TowerLevel::level0(&Mu0::Symbolic)],
        }
    }

    pub fn table(&self) -> &EulerTable {
        &self.table
    }

    pub fn level(&mut self, n: usize) -> Result<&TowerLevel> {
        while self.levels.len() <= n {
            let next = self.levels.last().unwrap().dress(&self.table)?;
            self.levels.push(next);
        }
        Ok(&self.levels[n])
    }
}

/// Collects records; after the first failure under fail-fast it drops the
/// rest.
pub struct Emitter<'a> {
    sink: &'a mut dyn FnMut(CheckReport),
    max_detail_terms: usize,
    fail_fast: bool,
    failed: bool,
    last: Instant,
}

impl Emitter<'_> {
    fn push(&mut self, report: CheckReport) {
        if self.fail_fast && self.failed {
            return;
        }
        if report.status == Status::Fail {
            self.failed = true;
        }
        (self.sink)(report);
        self.last = Instant::now();
    }

    fn elapsed_ms(&self) -> u64 {
        self.last.elapsed().as_millis() as u64
    }

    /// Passes iff the residual has no terms.
    pub fn residual(&mut self, name: impl Into<String>, r: &impl Residual) {
        let terms = r.residual_terms();
        let detail = (terms > 0).then(|| r.excerpt(self.max_detail_terms));
        self.push(CheckReport {
            check_name: name.into(),
            status: if terms == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            residual_terms: terms,
            elapsed_ms: self.elapsed_ms(),
            detail,
        });
    }

    /// Like [`Emitter::residual`], with an explanatory detail either way.
    pub fn residual_with_note(&mut self, name: impl Into<String>, r: &impl Residual, note: String) {
        let terms = r.residual_terms();
        let mut detail = note;
        if terms > 0 {
            detail.push('\n');
            detail.push_str(&r.excerpt(self.max_detail_terms));
        }
        self.push(CheckReport {
            check_name: name.into(),
            status: if terms == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            residual_terms: terms,
            elapsed_ms: self.elapsed_ms(),
            detail: Some(detail),
        });
    }

    pub fn suite(&mut self, prefix: &str, suite: &RelationSuite) {
        for r in suite.evaluate() {
            self.residual(format!("{prefix}: {}", r.label), &r.residual);
        }
    }

    fn error(&mut self, name: &str, message: String) {
        self.push(CheckReport {
            check_name: name.to_string(),
            status: Status::Fail,
            residual_terms: 0,
            elapsed_ms: self.elapsed_ms(),
            detail: Some(format!("error: {message}")),
        });
    }

    fn skipped(&mut self, name: &str) {
        (self.sink)(CheckReport {
            check_name: name.to_string(),
            status: Status::Skipped,
            residual_terms: 0,
            elapsed_ms: 0,
            detail: None,
        });
    }
}

type GroupFn = Box<dyn FnOnce(&mut Context, &mut Emitter) -> Result<()> + Send>;

/// A named unit of work that emits one or more records.
pub struct Group {
    pub name: String,
    run: GroupFn,
}

impl Group {
    fn new(
        name: impl Into<String>,
        run: impl FnOnce(&mut Context, &mut Emitter) -> Result<()> + Send + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            run: Box::new(run),
        }
    }
}

fn euler_groups(max_n: usize) -> Vec<Group> {
    vec![Group::new("euler.prE", move |ctx, out| {
        for n in 0..=max_n {
            out.residual(
                format!("euler.prE[n={n}]"),
                &check_product_identity(n, ctx.table()),
            );
        }
        Ok(())
    })]
}

fn functional_group(order: usize) -> Group {
    Group::new("euler.functional", move |ctx, out| {
        let r = check_functional_relation(order, ctx.table());
        let named: Vec<(String, CPoly)> = r
            .series
            .into_iter()
            .enumerate()
            .map(|(k, p)| (format!("w^{k}"), p))
            .chain(
                r.recurrence
                    .into_iter()
                    .enumerate()
                    .map(|(n, p)| (format!("recurrence n={n}"), p)),
            )
            .collect();
        out.residual(format!("euler.functional[order={order}]"), &named);
        Ok(())
    })
}

fn yang_baxter_groups() -> Vec<Group> {
    vec![Group::new("yang-baxter", |_, out| {
        out.residual("yang-baxter", &check_yang_baxter());
        Ok(())
    })]
}

fn rll_groups() -> Vec<Group> {
    vec![Group::new("rll", |_, out| {
        let (first, second) = check_rll(1);
        out.residual("rll[first]", &first);
        out.residual("rll[second]", &second);
        out.residual("rll.l-unitarity", &check_l_unitarity(1));
        Ok(())
    })]
}

fn tower_group(n: usize) -> Group {
    Group::new(format!("tower[{n}]"), move |ctx, out| {
        let prefix = format!("tower[{n}]");
        let level = ctx.level(n)?.clone();
        out.residual(
            format!("{prefix}.reflection"),
            &check_reflection(&level.matrix)?,
        );

        if n == 0 {
            let x = CPoly::x();
            let m = CPoly::mu0();
            let expected = NCPoly::scalar(&(&m * &m) - &(&x * &x));
            out.residual(format!("{prefix}.delta"), &(&level.delta - &expected));
        } else {
            let even = &level.delta - &level.delta.subst(Var::X, &-CPoly::x());
            out.residual(format!("{prefix}.delta-even"), &even);
            out.residual(
                format!("{prefix}.delta-central"),
                &is_central(&level.delta, &level),
            );
        }

        let back = components_from_generators(n, &level.generators, ctx.table())?;
        out.residual(
            format!("{prefix}.extraction"),
            &component_diff(&back, &level.components),
        );

        if n > 0 {
            let prev = ctx.level(n - 1)?.clone();
            let site = n as u32;
            let printed = dressed_components(&prev.components, site, RecursionForm::AsPrinted)?;
            out.residual_with_note(
                format!("{prefix}.two-path"),
                &component_diff(&printed, &level.components),
                "component recursion as printed vs L(x)B(x)L(x)".into(),
            );
            let fixed = dressed_components(&prev.components, site, RecursionForm::Corrected)?;
            out.residual_with_note(
                format!("{prefix}.two-path-corrected"),
                &component_diff(&fixed, &level.components),
                "hbar recursion with the (h - hbar) h term".into(),
            );
            out.residual(
                format!("{prefix}.mu-recursion"),
                &mu_recursion_residual(&prev, &level),
            );
            out.residual_with_note(
                format!("{prefix}.delta-recursion"),
                &delta_recursion_residual(&prev, &level, 1),
                "delta' = (-x^2 + (1+c)/4) delta".into(),
            );
            out.residual_with_note(
                format!("{prefix}.delta-recursion-squared"),
                &delta_recursion_residual(&prev, &level, 2),
                "delta' = (-x^2 + (1+c)/4)^2 delta".into(),
            );
        }
        if n == 1 {
            out.suite("tower[1].closed-form", &check_realization_n1(&level));
        }
        Ok(())
    })
}

fn component_diff(
    a: &crate::tower::Components,
    b: &crate::tower::Components,
) -> Vec<(String, NCPoly)> {
    vec![
        ("h".into(), &a.h - &b.h),
        ("hbar".into(), &a.hbar - &b.hbar),
        ("e".into(), &a.e - &b.e),
        ("f".into(), &a.f - &b.f),
    ]
}

fn hahn_groups() -> Vec<Group> {
    vec![Group::new("n1", |ctx, out| {
        let t = ctx.level(1)?.clone();
        out.suite(
            "n1.serre",
            &serre_check(t.gen("h0"), t.gen("e1"), t.gen("f1")),
        );
        out.suite("n1.higgs", &check_higgs_n1(&t));
        out.suite("n1.center", &check_center_n1(&t));
        out.suite("n1.hahn", &hahn_check(&t));
        Ok(())
    })]
}

fn n2_groups() -> Vec<Group> {
    vec![Group::new("n2", |ctx, out| {
        let t = ctx.level(2)?.clone();
        out.suite("n2.relations", &check_n2(&t));
        out.suite("n2.center", &check_center_n2(&t));
        out.suite("n2.center-corrected", &check_center_n2_corrected(&t));
        for c in delta_cross_check_n2(&t) {
            let comms = is_central(&c.discrepancy, &t);
            let note = format!(
                "[x^{}] delta(x) - {} = {}",
                c.power,
                c.name,
                c.discrepancy.excerpt(out.max_detail_terms)
            );
            out.residual_with_note(format!("n2.cross-check[{}]", c.name), &comms, note);
        }
        Ok(())
    })]
}

/// The ordered groups of a command, with the Euler degree they need.
pub fn plan(cmd: &Command) -> (usize, Vec<Group>) {
    match *cmd {
        Command::Euler { max_n } => (2 * max_n + 2, euler_groups(max_n)),
        Command::YangBaxter => (0, yang_baxter_groups()),
        Command::Rll => (0, rll_groups()),
        Command::Tower { level } => (2 * level, vec![tower_group(level)]),
        Command::Hahn => (2, hahn_groups()),
        Command::N2 => (4, n2_groups()),
        Command::All { series_order } => {
            let mut groups = euler_groups(DEFAULT_EULER_MAX_N);
            groups.push(functional_group(series_order));
            groups.extend(yang_baxter_groups());
            groups.extend(rll_groups());
            groups.extend((0..=2).map(tower_group));
            groups.extend(hahn_groups());
            groups.extend(n2_groups());
            let degree = (2 * DEFAULT_EULER_MAX_N + 2).max(series_order);
            (degree, groups)
        }
    }
}

/// Runs `cmd` to completion on the current thread, feeding every record to
/// `sink` in plan order.
pub fn run(cmd: &Command, options: &Options, sink: &mut dyn FnMut(CheckReport)) {
    let (degree, groups) = plan(cmd);
    let mut ctx = Context::new(degree);
    let mut out = Emitter {
        sink,
        max_detail_terms: options.max_detail_terms,
        fail_fast: options.fail_fast,
        failed: false,
        last: Instant::now(),
    };
    let mut stopped = false;
    for group in groups {
        if stopped {
            out.skipped(&group.name);
            continue;
        }
        out.last = Instant::now();
        if let Err(e) = (group.run)(&mut ctx, &mut out) {
            out.error(&group.name, e.to_string());
        }
        stopped = options.fail_fast && out.failed;
    }
}

/// Runs `cmd` on a worker thread, writing records to `w` as they arrive and
/// enforcing the time budget.
pub fn execute(cmd: Command, options: &Options, w: &mut dyn Write) -> io::Result<Outcome> {
    let budget = options.time_budget.or(match cmd {
        Command::Tower { level: 3 } => Some(LEVEL3_DEFAULT_BUDGET),
        _ => None,
    });
    let (tx, rx) = mpsc::channel();
    let worker_options = options.clone();
    thread::spawn(move || {
        run(&cmd, &worker_options, &mut |r| {
            let _ = tx.send(r);
        })
    });

    let deadline = budget.map(|b| Instant::now() + b);
    let (mut passed, mut failed, mut skipped) = (0usize, 0usize, 0usize);
    loop {
        let next = match deadline {
            Some(d) => {
                let left = d.saturating_duration_since(Instant::now());
                match rx.recv_timeout(left) {
                    Ok(r) => Some(r),
                    Err(mpsc::RecvTimeoutError::Timeout) => {
                        if !options.json {
                            writeln!(w, "time budget of {:?} exceeded", budget.unwrap())?;
                        }
                        w.flush()?;
                        return Ok(Outcome::BudgetExceeded);
                    }
                    Err(mpsc::RecvTimeoutError::Disconnected) => None,
                }
            }
            None => rx.recv().ok(),
        };
        let Some(report) = next else { break };
        match report.status {
            Status::Pass => passed += 1,
            Status::Fail => failed += 1,
            Status::Skipped => skipped += 1,
        }
        if options.json {
            writeln!(w, "{}", report.to_json())?;
        } else {
            writeln!(w, "{}", report.to_text())?;
        }
        w.flush()?;
    }
    if !options.json {
        writeln!(w, "{passed} passed, {failed} failed, {skipped} skipped")?;
    }
    Ok(if failed > 0 {
        Outcome::Failed
    } else {
        Outcome::Passed
    })
}

/// Canonical dump of tower level `n` with symbolic `mu0`.
pub fn dump_level(n: usize) -> Result<String> {
    let mut ctx = Context::new(2 * n);
    Ok(ctx.level(n)?.dump())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(cmd: Command, options: &Options) -> Vec<CheckReport> {
        let mut v = Vec::new();
        run(&cmd, options, &mut |r| v.push(r));
        v
    }

    #[test]
    fn euler_records() {
        let r = collect(Command::Euler { max_n: 1 }, &Options::default());
        let names: Vec<_> = r.iter().map(|r| r.check_name.as_str()).collect();
        assert_eq!(names, ["euler.prE[n=0]", "euler.prE[n=1]"]);
        assert!(r.iter().all(|r| r.status == Status::Pass));
    }

    #[test]
    fn tower0_records() {
        let r = collect(Command::Tower { level: 0 }, &Options::default());
        let names: Vec<_> = r.iter().map(|r| r.check_name.as_str()).collect();
        assert_eq!(
            names,
            [
                "tower[0].reflection",
                "tower[0].delta",
                "tower[0].extraction"
            ]
        );
        assert!(r.iter().all(|r| r.status == Status::Pass));
    }

    #[test]
    fn tower1_reports_printed_forms_as_failures() {
        let r = collect(Command::Tower { level: 1 }, &Options::default());
        let failing: Vec<_> = r
            .iter()
            .filter(|r| r.status == Status::Fail)
            .map(|r| r.check_name.as_str())
            .collect();
        assert_eq!(failing, ["tower[1].two-path", "tower[1].delta-recursion"]);
        let two_path = r
            .iter()
            .find(|r| r.check_name == "tower[1].two-path")
            .unwrap();
        assert!(two_path.detail.as_ref().unwrap().contains("hbar:"));
    }

    #[test]
    fn fail_fast_skips_later_groups() {
        let options = Options {
            fail_fast: true,
            ..Options::default()
        };
        let r = collect(Command::All { series_order: 4 }, &options);
        let first_fail = r.iter().position(|r| r.status == Status::Fail).unwrap();
        assert_eq!(r[first_fail].check_name, "tower[1].two-path");
        assert!(r[first_fail + 1..]
            .iter()
            .all(|r| r.status == Status::Skipped));
        let skipped: Vec<_> = r[first_fail + 1..]
            .iter()
            .map(|r| r.check_name.as_str())
            .collect();
        assert_eq!(skipped, ["tower[2]", "n1", "n2"]);
    }

    #[test]
    fn detail_is_truncated() {
        let options = Options {
            max_detail_terms: 1,
            ..Options::default()
        };
        let r = collect(Command::Tower { level: 1 }, &options);
        let d = r
            .iter()
            .find(|r| r.check_name == "tower[1].delta-recursion")
            .unwrap();
        assert!(d.detail.as_ref().unwrap().contains("more terms"));
    }

    #[test]
    fn execute_counts_and_budget() {
        let mut buf = Vec::new();
        let outcome = execute(Command::YangBaxter, &Options::default(), &mut buf).unwrap();
        assert_eq!(outcome, Outcome::Passed);
        let text = String::from_utf8(buf).unwrap();
        assert!(text.ends_with("1 passed, 0 failed, 0 skipped\n"));

        let tight = Options {
            time_budget: Some(Duration::ZERO),
            ..Options::default()
        };
        let mut buf = Vec::new();
        let outcome = execute(Command::Tower { level: 2 }, &tight, &mut buf).unwrap();
        assert_eq!(outcome, Outcome::BudgetExceeded);
    }
}
