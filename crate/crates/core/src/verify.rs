//! Registry of the exhaustive axiom suites, merged into one row per axiom.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{integer, LinComb, Tensor2};
use crate::compositions::{check_comp_algebra, check_comp_coalgebras, check_comp_double};
use crate::error::{Error, Result};
use crate::fock::{self, class_of, fock_coproduct, fock_delta};
use crate::monoid::Semigroup;
use crate::quasishuffle::check_t_double;
use crate::twisted::checks::{
    all_graphs, check_coassociativity_delta, check_coproduct_compat, check_counit,
    check_counit_multiplicative, check_graph_bialgebra, check_prime_coalgebra, check_prime_double,
    check_product_compat, standard_ground, standard_splits, CheckReport, Tally, MAX_CHECK_SIZE,
};
use crate::twisted::{coproduct_full, delta_full, Rules};

/// Decorated Fock classes are checked up to this size; undecorated ones up to `max_n`.
pub const FOCK_DECORATED_MAX: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Species,
    Comp,
    Words,
    Fock,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Species, Suite::Comp, Suite::Words, Suite::Fock];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Species => "species",
            Suite::Comp => "comp",
            Suite::Words => "words",
            Suite::Fock => "fock",
        }
    }

    /// `all` expands to every suite.
    pub fn parse_selection(text: &str) -> Result<Vec<Suite>> {
        if text == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        text.split(',').map(|s| s.trim().parse()).collect()
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse {
                offset: 0,
                message: format!("unknown suite '{s}' (expected species, comp, words, fock or all)"),
            })
    }
}

/// One line of the verification table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub suite: Suite,
    pub report: CheckReport,
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<8} {}", self.suite.name(), self.report)
    }
}

/// Folds several reports of the same axiom into one.
fn merge(axiom: &str, scope: String, reports: Vec<CheckReport>) -> CheckReport {
    let cases = reports.iter().map(|r| r.cases).sum();
    let counterexample = reports
        .into_iter()
        .find(|r| !r.passed())
        .map(|r| format!("[X={} Y={}] {}", r.x, r.y, r.counterexample.unwrap_or_default()));
    CheckReport {
        axiom: axiom.to_string(),
        x: scope,
        y: "-".to_string(),
        cases,
        counterexample,
    }
}

type Single = fn(&crate::partitions::FiniteSet, Rules) -> Result<CheckReport>;
type Pair = fn(&crate::partitions::FiniteSet, &crate::partitions::FiniteSet, Rules) -> Result<CheckReport>;

fn species(max_n: usize, rules: Rules) -> Result<Vec<CheckReport>> {
    let singles: [(&str, Single); 4] = [
        ("delta-coassociativity", check_coassociativity_delta),
        ("delta-counit", check_counit),
        ("prime-coalgebra", check_prime_coalgebra),
        ("prime-double", check_prime_double),
    ];
    let pairs: [(&str, Pair); 4] = [
        ("product-compat", check_product_compat),
        ("coproduct-compat", check_coproduct_compat),
        ("graph-bialgebra", |x, y, _| check_graph_bialgebra(x, y)),
        ("counit-multiplicative", |x, y, _| check_counit_multiplicative(x, y)),
    ];
    let mut out = Vec::new();
    for (axiom, f) in singles {
        let reports = (0..=max_n)
            .map(|k| f(&standard_ground(k), rules))
            .collect::<Result<Vec<_>>>()?;
        out.push(merge(axiom, format!("|X|≤{max_n}"), reports));
    }
    for (axiom, f) in pairs {
        let mut reports = Vec::new();
        for k in 0..=max_n {
            for (x, y) in standard_splits(k) {
                reports.push(f(&x, &y, rules)?);
            }
        }
        out.push(merge(axiom, format!("|X⊔Y|≤{max_n}"), reports));
    }
    Ok(out)
}

fn comp(max_n: usize) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    type C = fn(usize) -> Result<CheckReport>;
    for (axiom, f) in [
        ("comp-algebra", check_comp_algebra as C),
        ("comp-coalgebras", check_comp_coalgebras),
        ("comp-double", check_comp_double),
    ] {
        let reports = (0..=max_n).map(f).collect::<Result<Vec<_>>>()?;
        out.push(merge(axiom, format!("|X|≤{max_n}"), reports));
    }
    Ok(out)
}

fn words(max_n: usize) -> Result<Vec<CheckReport>> {
    [Semigroup::Free(2), Semigroup::QSym, Semigroup::K]
        .into_iter()
        .map(|preset| check_t_double(preset, max_n))
        .collect()
}

/// The Fock classes of labelled undecorated graphs reproduce both coproducts:
/// `(class ⊗ class)∘Δ = Δ∘class` and likewise for `δ`. The coefficients of
/// `δ` sum to 4 on the path and 5 on the triangle.
pub fn check_fock_specialization(max_n: usize) -> Result<CheckReport> {
    let mut tally = Tally::default();
    for k in 0..=max_n {
        for g in all_graphs(&standard_ground(k)) {
            let class = class_of(&g, None)?;
            let lhs = coproduct_full(&g).try_map(|Tensor2(a, b)| {
                Ok::<_, Error>(LinComb::basis(Tensor2(class_of(a, None)?, class_of(b, None)?)))
            })?;
            tally.record(&lhs, &fock_coproduct(&class)?, || format!("Δ at {g}"));
            let lhs = delta_full(&g).try_map(|Tensor2(a, b)| {
                Ok::<_, Error>(LinComb::basis(Tensor2(class_of(a.graph(), None)?, class_of(b, None)?)))
            })?;
            tally.record(&lhs, &fock_delta(&class)?, || format!("δ at {g}"));
        }
    }
    let path = crate::graphs::Graph::from_names(&["a", "b", "c"], &[("a", "b"), ("b", "c")])?;
    let triangle =
        crate::graphs::Graph::from_names(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")])?;
    for (name, g, expected) in [("path", path, 4), ("triangle", triangle, 5)] {
        let terms = fock_delta(&class_of(&g, None)?)?
            .iter()
            .fold(integer(0), |acc, (_, c)| acc + c);
        tally.record(&terms, &integer(expected), || format!("δ term count of {name}"));
    }
    let mut r = tally.report("fock-specialization", &crate::partitions::FiniteSet::empty(), None);
    r.x = format!("n≤{max_n}");
    r.y = "V=k".to_string();
    Ok(r)
}

fn fock_suite(max_n: usize) -> Result<Vec<CheckReport>> {
    let free = Semigroup::Free(2).alphabet();
    let k = Semigroup::K.alphabet();
    let small = max_n.min(FOCK_DECORATED_MAX);
    Ok(vec![
        fock::check_fock_double(&free, small)?,
        fock::check_fock_double(&k, max_n)?,
        fock::check_pi(&free, small)?,
        fock::check_rho(&free, small)?,
        check_fock_specialization(max_n)?,
    ])
}

/// Runs the selected suites at sizes up to `max_n` (at most [`MAX_CHECK_SIZE`]).
/// `rules` mutates the graph structures for negative controls.
pub fn run_suites(suites: &[Suite], max_n: usize, rules: Rules) -> Result<Vec<Row>> {
    if max_n > MAX_CHECK_SIZE {
        return Err(Error::BoundExceeded {
            size: max_n,
            bound: MAX_CHECK_SIZE,
        });
    }
    let mut selected = suites.to_vec();
    selected.sort();
    selected.dedup();
    let mut rows = Vec::new();
    for suite in selected {
        let reports = match suite {
            Suite::Species => species(max_n, rules)?,
            Suite::Comp => comp(max_n)?,
            Suite::Words => words(max_n)?,
            Suite::Fock => fock_suite(max_n)?,
        };
        rows.extend(reports.into_iter().map(|report| Row { suite, report }));
    }
    Ok(rows)
}

pub fn all_passed(rows: &[Row]) -> bool {
    rows.iter().all(|r| r.report.passed())
}
