//! Acceptance criteria: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use species_hopf_core::algebra::{integer, LinComb, Tensor2};
use species_hopf_core::compositions::{delta_comp, quasishuffle_comp, SetComposition};
use species_hopf_core::fock::{fock_coproduct, fock_delta, DecoratedGraph, FockPairLC};
use species_hopf_core::graphs::Graph;
use species_hopf_core::monoid::Monomial;
use species_hopf_core::partitions::{enumerate_partitions, FiniteSet, Label, SetPartition};
use species_hopf_core::quasishuffle::kx::{
    kx_realize, kx_realize_pair, kx_unrealize, substitute_product, substitute_sum, UniPoly,
};
use species_hopf_core::quasishuffle::{deconcat, delta_t, qsh_words, Word, WordLC};
use species_hopf_core::twisted::checks::{all_graphs, standard_ground};
use species_hopf_core::twisted::{coproduct_prime, coproduct_split, delta_prime, PartitionedGraph, Rules};
use species_hopf_core::verify::{run_suites, Row, Suite};

/// Per-example time limit for the worked examples.
const EXAMPLE_LIMIT: Duration = Duration::from_secs(1);
/// Time limit for all exhaustive suites together.
const SUITE_LIMIT: Duration = Duration::from_secs(60);
/// Ground-set size for the exhaustive suites.
const SUITE_N: usize = 4;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn equal<T: PartialEq + std::fmt::Display>(actual: &T, expected: &T, what: &str) -> Result<(), String> {
    ensure(actual == expected, || format!("{what}: got {actual}, expected {expected}"))
}

fn timed_example(f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let detail = f()?;
    let elapsed = start.elapsed();
    ensure(elapsed < EXAMPLE_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("{detail}, {:.1} ms", elapsed.as_secs_f64() * 1e3))
}

fn g(vertices: &[&str], edges: &[(&str, &str)]) -> Graph {
    Graph::from_names(vertices, edges).unwrap()
}

fn pg(vertices: &[&str], edges: &[(&str, &str)]) -> PartitionedGraph {
    PartitionedGraph::new(g(vertices, edges)).unwrap()
}

fn set(text: &str) -> FiniteSet {
    FiniteSet::parse(text).unwrap()
}

fn sum<B: Ord + Clone>(terms: Vec<B>) -> LinComb<B> {
    terms.into_iter().map(|t| (t, integer(1))).collect()
}

fn path() -> Graph {
    g(&["a", "b", "c"], &[("a", "b"), ("b", "c")])
}

fn triangle() -> Graph {
    g(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")])
}

fn cut_table() -> Outcome {
    let (p, t) = (path(), triangle());
    let cases = [
        (&p, "a", "b,c", g(&["a"], &[]), g(&["b", "c"], &[("b", "c")])),
        (&p, "b,c", "a", g(&["b", "c"], &[("b", "c")]), g(&["a"], &[])),
        (&p, "b", "a,c", g(&["b"], &[]), g(&["a", "c"], &[])),
        (&p, "a,c", "b", g(&["a", "c"], &[]), g(&["b"], &[])),
        (&p, "c", "a,b", g(&["c"], &[]), g(&["a", "b"], &[("a", "b")])),
        (&p, "a,b", "c", g(&["a", "b"], &[("a", "b")]), g(&["c"], &[])),
        (&t, "a", "b,c", g(&["a"], &[]), g(&["b", "c"], &[("b", "c")])),
        (&t, "b,c", "a", g(&["b", "c"], &[("b", "c")]), g(&["a"], &[])),
        (&t, "b", "a,c", g(&["b"], &[]), g(&["a", "c"], &[("a", "c")])),
        (&t, "a,c", "b", g(&["a", "c"], &[("a", "c")]), g(&["b"], &[])),
        (&t, "c", "a,b", g(&["c"], &[]), g(&["a", "b"], &[("a", "b")])),
        (&t, "a,b", "c", g(&["a", "b"], &[("a", "b")]), g(&["c"], &[])),
    ];
    for (graph, a, b, left, right) in &cases {
        let got = coproduct_split(graph, &set(a), &set(b)).map_err(|e| e.to_string())?;
        equal(&got, &LinComb::basis(Tensor2(left.clone(), right.clone())), &format!("{a};{b} of {graph}"))?;
    }
    Ok(format!("{} splits", cases.len()))
}

fn comp(text: &str) -> SetComposition {
    SetComposition::parse(text).unwrap()
}

fn comps(texts: &[&str]) -> LinComb<SetComposition> {
    sum(texts.iter().map(|t| comp(t)).collect())
}

fn qsh(a: &str, b: &str) -> LinComb<SetComposition> {
    quasishuffle_comp(&comp(a), &comp(b)).unwrap()
}

// X = {a,b}, Y = {c}, Z = {d}, T = {e}.
fn comp_examples() -> Outcome {
    let xy = qsh("({a,b})", "({c})");
    equal(&xy, &comps(&["({a,b},{c})", "({c},{a,b})", "({a,b,c})"]), "(X)⧢(Y)")?;
    let xyz = qsh("({a,b},{c})", "({d})");
    let expected = comps(&["({a,b},{c},{d})", "({a,b},{d},{c})", "({d},{a,b},{c})", "({a,b,d},{c})", "({a,b},{c,d})"]);
    equal(&xyz, &expected, "(X,Y)⧢(Z)")?;
    let xyzt = qsh("({a,b},{c})", "({d},{e})");
    let expected = comps(&[
        "({a,b},{c},{d},{e})",
        "({a,b},{d},{c},{e})",
        "({d},{a,b},{c},{e})",
        "({a,b},{d},{e},{c})",
        "({d},{a,b},{e},{c})",
        "({d},{e},{a,b},{c})",
        "({a,b},{c,d},{e})",
        "({a,b,d},{c},{e})",
        "({a,b,d},{e},{c})",
        "({a,b},{d},{c,e})",
        "({d},{a,b},{c,e})",
        "({d},{a,b,e},{c})",
        "({a,b,d},{c,e})",
    ]);
    equal(&xyzt, &expected, "(X,Y)⧢(Z,T)")?;

    let tensor_with = |left: &str, right: LinComb<SetComposition>| right.map_basis(|r| Tensor2(comp(left), r.clone()));
    equal(&delta_comp(&comp("({a,b})")), &tensor_with("({a,b})", comps(&["({a,b})"])), "δ(X)")?;
    let expected = tensor_with("({a,b},{c})", xy.clone()) + tensor_with("({a,b,c})", comps(&["({a,b},{c})"]));
    equal(&delta_comp(&comp("({a,b},{c})")), &expected, "δ(X,Y)")?;
    let x_y_z = xy
        .basis_elements()
        .map(|r| quasishuffle_comp(r, &comp("({d})")).unwrap())
        .fold(LinComb::zero(), |a, b| a + b);
    let expected = tensor_with("({a,b},{c},{d})", x_y_z)
        + tensor_with("({a,b},{c,d})", qsh("({a,b})", "({c},{d})"))
        + tensor_with("({a,b,c},{d})", xyz)
        + tensor_with("({a,b,c,d})", comps(&["({a,b},{c},{d})"]));
    let got = delta_comp(&comp("({a,b},{c},{d})"));
    equal(&got, &expected, "δ(X,Y,Z)")?;
    Ok(format!("term counts 3, 5, {}, δ(X,Y,Z) {}", xyzt.len(), got.len()))
}

fn partitioned_examples() -> Outcome {
    let h = pg(&["a,b", "c"], &[("a,b", "c")]);
    let split = |a: &str, b: &str| coproduct_prime(&h, &set(a), &set(b)).map_err(|e| e.to_string());
    equal(&split("a,b", "c")?, &LinComb::basis(Tensor2(pg(&["a,b"], &[]), pg(&["c"], &[]))), "Δ′ ab;c")?;
    equal(&split("c", "a,b")?, &LinComb::basis(Tensor2(pg(&["c"], &[]), pg(&["a,b"], &[]))), "Δ′ c;ab")?;
    ensure(split("a,c", "b")?.is_zero(), || "Δ′ ac;b is nonzero".into())?;

    let edge = sum(vec![Tensor2(h.clone(), pg(&["a,b", "c"], &[])), Tensor2(pg(&["a,b,c"], &[]), h.clone())]);
    equal(&delta_prime(&h), &edge, "δ′ edge")?;
    let p = PartitionedGraph::discrete(&path()).unwrap();
    let expected = sum(vec![
        Tensor2(p.clone(), pg(&["a", "b", "c"], &[])),
        Tensor2(pg(&["a,b,c"], &[]), p.clone()),
        Tensor2(pg(&["a,b", "c"], &[("a,b", "c")]), pg(&["a", "b", "c"], &[("a", "b")])),
        Tensor2(pg(&["a", "b,c"], &[("a", "b,c")]), pg(&["a", "b", "c"], &[("b", "c")])),
    ]);
    equal(&delta_prime(&p), &expected, "δ′ path")?;
    let t = PartitionedGraph::discrete(&triangle()).unwrap();
    let expected = sum(vec![
        Tensor2(t.clone(), pg(&["a", "b", "c"], &[])),
        Tensor2(pg(&["a,b,c"], &[]), t.clone()),
        Tensor2(pg(&["a,b", "c"], &[("a,b", "c")]), pg(&["a", "b", "c"], &[("a", "b")])),
        Tensor2(pg(&["a,c", "b"], &[("a,c", "b")]), pg(&["a", "b", "c"], &[("a", "c")])),
        Tensor2(pg(&["b,c", "a"], &[("b,c", "a")]), pg(&["a", "b", "c"], &[("b", "c")])),
    ]);
    equal(&delta_prime(&t), &expected, "δ′ triangle")?;
    Ok("3 splits, δ′ term counts 2, 4, 5".into())
}

// Three distinct grouplike generators.
fn v(idx: &[usize]) -> Monomial {
    let mut e = vec![0; 3];
    for i in idx {
        e[i - 1] += 1;
    }
    Monomial(e)
}

fn d(decos: &[&[usize]], edges: &[(usize, usize)]) -> DecoratedGraph {
    DecoratedGraph::from_parts(decos.iter().map(|i| v(i)).collect(), edges.iter().copied()).unwrap()
}

fn pairs(terms: Vec<(DecoratedGraph, DecoratedGraph)>) -> FockPairLC {
    sum(terms.into_iter().map(|(a, b)| Tensor2(a, b)).collect())
}

fn fock_examples() -> Outcome {
    let one = DecoratedGraph::empty;
    let edge = d(&[&[1], &[2]], &[(0, 1)]);
    let path = d(&[&[1], &[2], &[3]], &[(0, 1), (1, 2)]);
    let tri = d(&[&[1], &[2], &[3]], &[(0, 1), (1, 2), (0, 2)]);
    let cop = |x: &DecoratedGraph| fock_coproduct(x).map_err(|e| e.to_string());
    let del = |x: &DecoratedGraph| fock_delta(x).map_err(|e| e.to_string());

    let expected = pairs(vec![
        (edge.clone(), one()),
        (one(), edge.clone()),
        (d(&[&[1]], &[]), d(&[&[2]], &[])),
        (d(&[&[2]], &[]), d(&[&[1]], &[])),
    ]);
    equal(&cop(&edge)?, &expected, "Δ edge")?;
    let expected = pairs(vec![
        (path.clone(), one()),
        (one(), path.clone()),
        (d(&[&[1], &[2]], &[(0, 1)]), d(&[&[3]], &[])),
        (d(&[&[2], &[3]], &[(0, 1)]), d(&[&[1]], &[])),
        (d(&[&[1], &[3]], &[]), d(&[&[2]], &[])),
        (d(&[&[3]], &[]), d(&[&[1], &[2]], &[(0, 1)])),
        (d(&[&[1]], &[]), d(&[&[2], &[3]], &[(0, 1)])),
        (d(&[&[2]], &[]), d(&[&[1], &[3]], &[])),
    ]);
    equal(&cop(&path)?, &expected, "Δ path")?;
    let expected = pairs(vec![
        (tri.clone(), one()),
        (one(), tri.clone()),
        (d(&[&[1], &[2]], &[(0, 1)]), d(&[&[3]], &[])),
        (d(&[&[2], &[3]], &[(0, 1)]), d(&[&[1]], &[])),
        (d(&[&[1], &[3]], &[(0, 1)]), d(&[&[2]], &[])),
        (d(&[&[3]], &[]), d(&[&[1], &[2]], &[(0, 1)])),
        (d(&[&[1]], &[]), d(&[&[2], &[3]], &[(0, 1)])),
        (d(&[&[2]], &[]), d(&[&[1], &[3]], &[(0, 1)])),
    ]);
    equal(&cop(&tri)?, &expected, "Δ triangle")?;

    let discrete = d(&[&[1], &[2], &[3]], &[]);
    let expected = pairs(vec![(edge.clone(), d(&[&[1], &[2]], &[])), (d(&[&[1, 2]], &[]), edge.clone())]);
    equal(&del(&edge)?, &expected, "δ edge")?;
    let expected = pairs(vec![
        (path.clone(), discrete.clone()),
        (d(&[&[1, 2, 3]], &[]), path.clone()),
        (d(&[&[1, 2], &[3]], &[(0, 1)]), d(&[&[1], &[2], &[3]], &[(0, 1)])),
        (d(&[&[1], &[2, 3]], &[(0, 1)]), d(&[&[1], &[2], &[3]], &[(1, 2)])),
    ]);
    equal(&del(&path)?, &expected, "δ path")?;
    let expected = pairs(vec![
        (tri.clone(), discrete),
        (d(&[&[1, 2, 3]], &[]), tri.clone()),
        (d(&[&[1, 2], &[3]], &[(0, 1)]), d(&[&[1], &[2], &[3]], &[(0, 1)])),
        (d(&[&[1, 3], &[2]], &[(0, 1)]), d(&[&[1], &[2], &[3]], &[(0, 2)])),
        (d(&[&[2, 3], &[1]], &[(0, 1)]), d(&[&[1], &[2], &[3]], &[(1, 2)])),
    ]);
    equal(&del(&tri)?, &expected, "δ triangle")?;
    Ok("Δ term counts 4, 8, 8, δ term counts 2, 4, 5".into())
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Coefficient of `x^n` in `x^k ⧢ x^l` for the trivial monoid.
fn qsh_coefficient(k: usize, l: usize, n: usize) -> i64 {
    if n < k.max(l) || n > k + l {
        return 0;
    }
    factorial(n) / (factorial(n - k) * factorial(n - l) * factorial(k + l - n))
}

fn k_preset_powers() -> Outcome {
    let x = |n: usize| Word::x_power(n);
    let xx = qsh_words(&x(1), &x(1));
    let x3 = xx
        .basis_elements()
        .map(|w| qsh_words(w, &x(1)).scale(&xx.coeff(w)))
        .fold(WordLC::zero(), |a, b| a + b);
    let mut power: Vec<i64> = vec![0, 1];
    let mut squares = Vec::new();
    for _ in 1..3 {
        let mut next = vec![0; power.len() + 1];
        for (k, &c) in power.iter().enumerate() {
            for (n, slot) in next.iter_mut().enumerate() {
                *slot += c * qsh_coefficient(k, 1, n);
            }
        }
        power = next;
        squares.push(power.clone());
    }
    let from_formula = |coeffs: &[i64]| -> WordLC {
        coeffs.iter().enumerate().filter(|(_, c)| **c != 0).map(|(n, c)| (x(n), integer(*c))).collect()
    };
    equal(&xx, &from_formula(&squares[0]), "x⧢x")?;
    equal(&x3, &from_formula(&squares[1]), "x⧢x⧢x")?;
    equal(&xx.to_string(), &"x + 2 x^2".to_string(), "x⧢x text")?;
    equal(&x3.to_string(), &"x + 6 x^2 + 6 x^3".to_string(), "x⧢x⧢x text")?;
    Ok(format!("x⧢x = {xx}, x⧢x⧢x = {x3}"))
}

fn suite_rows(suites: &[Suite], rules: Rules) -> Result<Vec<Row>, String> {
    run_suites(suites, SUITE_N, rules).map_err(|e| e.to_string())
}

fn exhaustive_suites(elapsed: &mut Duration) -> Vec<(String, Outcome)> {
    let start = Instant::now();
    let rows = suite_rows(&Suite::ALL, Rules::STANDARD);
    *elapsed = start.elapsed();
    let rows = match rows {
        Ok(rows) => rows,
        Err(e) => return vec![("exhaustive suites".into(), Err(e))],
    };
    rows.iter()
        .map(|row| {
            let r = &row.report;
            let name = format!("suite {} {} X={} Y={}", row.suite.name(), r.axiom, r.x, r.y);
            let outcome = match &row.report.counterexample {
                None => Ok(format!("{} cases", row.report.cases)),
                Some(c) => Err(c.clone()),
            };
            (name, outcome)
        })
        .collect()
}

fn negative_control(rules: Rules, axioms: &[&str]) -> Outcome {
    let rows = suite_rows(&[Suite::Species], rules)?;
    let mut found = Vec::new();
    for axiom in axioms {
        let row = rows
            .iter()
            .find(|r| r.report.axiom == *axiom)
            .ok_or_else(|| format!("no row for {axiom}"))?;
        let counterexample = row
            .report
            .counterexample
            .as_ref()
            .ok_or_else(|| format!("{axiom} still passes under the mutation"))?;
        found.push(format!("{axiom}: {counterexample}"));
    }
    Ok(found.join("; "))
}

fn bfs_connected(vertices: &BTreeSet<Label>, edges: &[(Label, Label)]) -> bool {
    let Some(start) = vertices.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start.clone()]);
    let mut frontier = vec![start.clone()];
    while let Some(v) = frontier.pop() {
        for (a, b) in edges {
            let other = if *a == v { b } else if *b == v { a } else { continue };
            if vertices.contains(other) && seen.insert(other.clone()) {
                frontier.push(other.clone());
            }
        }
    }
    seen.len() == vertices.len()
}

fn connected_partitions_oracle() -> Outcome {
    let mut graphs = 0;
    for n in 0..=4 {
        let x = standard_ground(n);
        for graph in all_graphs(&x) {
            let edges: Vec<(Label, Label)> = graph.edges().cloned().collect();
            let mut oracle: Vec<SetPartition> = enumerate_partitions(&x)
                .into_iter()
                .filter(|p| p.blocks().iter().all(|b| bfs_connected(&b.iter().cloned().collect(), &edges)))
                .collect();
            let mut fast = graph.connected_partitions();
            oracle.sort();
            fast.sort();
            ensure(fast == oracle, || format!("mismatch on {graph}"))?;
            graphs += 1;
        }
    }
    Ok(format!("{graphs} graphs"))
}

type Counted = BTreeMap<Vec<u32>, i64>;

fn composition_qsh(u: &[u32], v: &[u32]) -> Counted {
    let mut out = Counted::new();
    if u.is_empty() || v.is_empty() {
        out.insert(u.iter().chain(v).copied().collect(), 1);
        return out;
    }
    let mut prepend = |head: u32, rest: Counted| {
        for (w, c) in rest {
            let mut full = vec![head];
            full.extend(w);
            *out.entry(full).or_insert(0) += c;
        }
    };
    prepend(u[0], composition_qsh(&u[1..], v));
    prepend(v[0], composition_qsh(u, &v[1..]));
    prepend(u[0] + v[0], composition_qsh(&u[1..], &v[1..]));
    out
}

fn int_compositions(weight: u32) -> Vec<Vec<u32>> {
    if weight == 0 {
        return vec![Vec::new()];
    }
    (1..=weight)
        .flat_map(|first| {
            int_compositions(weight - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn qsym_oracle() -> Outcome {
    let word = |parts: &[u32]| Word(parts.iter().map(|&p| Monomial(vec![p])).collect());
    let mut pairs = 0;
    for wu in 0..=5u32 {
        for wv in 0..=(5 - wu) {
            for u in int_compositions(wu) {
                for w in int_compositions(wv) {
                    let expected: WordLC = composition_qsh(&u, &w)
                        .into_iter()
                        .map(|(c, k)| (word(&c), integer(k)))
                        .collect();
                    equal(&qsh_words(&word(&u), &word(&w)), &expected, &format!("{u:?}⧢{w:?}"))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs of total weight ≤ 5"))
}

fn substitution_oracle() -> Outcome {
    let fail = |e: species_hopf_core::Error| e.to_string();
    for n in 0..=4 {
        let w = kx_unrealize(&UniPoly::monomial(n));
        let cut: LinComb<Tensor2<Word, Word>> = w.map(deconcat);
        let ext: LinComb<Tensor2<Word, Word>> = w.map(delta_t);
        ensure(kx_realize_pair(&cut).map_err(fail)? == substitute_sum(&UniPoly::monomial(n)), || {
            format!("Δ X^{n} ≠ (X+Y)^{n}")
        })?;
        ensure(kx_realize_pair(&ext).map_err(fail)? == substitute_product(&UniPoly::monomial(n)), || {
            format!("δ X^{n} ≠ (XY)^{n}")
        })?;
        let p = kx_realize(&LinComb::basis(Word::x_power(n))).map_err(fail)?;
        ensure(kx_realize_pair(&deconcat(&Word::x_power(n))).map_err(fail)? == substitute_sum(&p), || {
            format!("Δ x^{n} ≠ P(X+Y)")
        })?;
        ensure(kx_realize_pair(&delta_t(&Word::x_power(n))).map_err(fail)? == substitute_product(&p), || {
            format!("δ x^{n} ≠ P(XY)")
        })?;
    }
    Ok("degrees 0..=4".into())
}

fn determinism() -> Outcome {
    let mut slow = Vec::new();
    for case in common::CASES {
        let start = Instant::now();
        let first = common::run_case(case);
        let elapsed = start.elapsed();
        let second = common::run_case(case);
        ensure(first == second, || format!("{} differs between runs", case.name))?;
        let stored = std::fs::read_to_string(common::expected_path(case)).unwrap_or_default();
        ensure(first == stored, || format!("{} differs from its golden file", case.name))?;
        if elapsed >= EXAMPLE_LIMIT {
            slow.push(format!("{} {elapsed:?}", case.name));
        }
    }
    ensure(slow.is_empty(), || format!("slow golden cases: {}", slow.join(", ")))?;
    Ok(format!("{} golden files", common::CASES.len()))
}

fn main() {
    let mut results: Vec<(String, Outcome)> = vec![
        ("1 cut coproduct table, path and triangle".into(), timed_example(cut_table)),
        ("1 set composition quasishuffles and δ".into(), timed_example(comp_examples)),
        ("1 partitioned Δ′ and δ′".into(), timed_example(partitioned_examples)),
        ("1 decorated Fock Δ and δ".into(), timed_example(fock_examples)),
        ("1 trivial monoid powers".into(), timed_example(k_preset_powers)),
    ];

    let mut elapsed = Duration::ZERO;
    results.extend(exhaustive_suites(&mut elapsed).into_iter().map(|(n, o)| (format!("2 {n}"), o)));
    let budget = if elapsed < SUITE_LIMIT {
        Ok(format!("{:.1} s", elapsed.as_secs_f64()))
    } else {
        Err(format!("{:.1} s exceeds {SUITE_LIMIT:?}", elapsed.as_secs_f64()))
    };
    results.push(("2 exhaustive suites total runtime".into(), budget));

    let no_connectivity = Rules {
        connectivity_filter: false,
        ..Rules::STANDARD
    };
    let no_block_filter = Rules {
        block_filter: false,
        ..Rules::STANDARD
    };
    results.push((
        "3 mutation: δ without connectivity filter fails".into(),
        negative_control(no_connectivity, &["delta-coassociativity", "delta-counit"]),
    ));
    results.push((
        "3 mutation: Δ′ without block filter fails".into(),
        negative_control(no_block_filter, &["prime-double"]),
    ));

    results.push(("4 connected partitions vs filtered enumeration".into(), connected_partitions_oracle()));
    results.push(("4 QSym product vs composition recursion".into(), qsym_oracle()));
    results.push(("4 trivial monoid Δ, δ vs P(X+Y), P(XY)".into(), substitution_oracle()));
    results.push(("5 CLI golden files deterministic".into(), determinism()));

    let mut failures = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS {name} [{detail}]"),
            Err(reason) => {
                failures += 1;
                println!("FAIL {name} [{reason}]");
            }
        }
    }
    println!("{} of {} criteria passed", results.len() - failures, results.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
