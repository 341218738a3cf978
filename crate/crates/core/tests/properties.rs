//! Independent oracles and randomized properties.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use species_hopf_core::algebra::{integer, rational, LinComb, Rational, Tensor2};
use species_hopf_core::compositions::all_compositions;
use species_hopf_core::fock::{class_of, DecoratedGraph};
use species_hopf_core::graphs::{DecorationMap, Graph};
use species_hopf_core::monoid::{Monomial, Semigroup};
use species_hopf_core::partitions::{enumerate_partitions, FiniteSet, Label, SetPartition};
use species_hopf_core::quasishuffle::kx::{
    kx_realize, kx_realize_pair, kx_unrealize, substitute_product, substitute_sum, UniPoly,
};
use species_hopf_core::quasishuffle::{deconcat, delta_t, enumerate_qsh, qsh_words, Word};
use species_hopf_core::twisted::checks::{all_graphs, standard_ground};
use species_hopf_core::twisted::{counit_eps_delta, delta_full};

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

#[test]
fn connected_partitions_match_filtered_enumeration() {
    for n in 0..=4 {
        let x = standard_ground(n);
        for g in all_graphs(&x) {
            let edges: Vec<(Label, Label)> = g.edges().cloned().collect();
            let oracle: Vec<SetPartition> = enumerate_partitions(&x)
                .into_iter()
                .filter(|p| {
                    p.blocks()
                        .iter()
                        .all(|b| bfs_connected(&b.iter().cloned().collect(), &edges))
                })
                .collect();
            let mut fast = g.connected_partitions();
            let mut oracle = oracle;
            fast.sort();
            oracle.sort();
            assert_eq!(fast, oracle, "{g}");
        }
    }
}

#[test]
fn bell_and_fubini_numbers() {
    // Bell: B(n+1) = Σ C(n,k) B(k). Fubini: F(n) = Σ_{k≥1} C(n,k) F(n-k).
    let binom = |n: u64, k: u64| (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
    let mut bell = vec![1u64];
    let mut fubini = vec![1u64];
    for n in 0..6u64 {
        bell.push((0..=n).map(|k| binom(n, k) * bell[k as usize]).sum());
        let m = n + 1;
        fubini.push((1..=m).map(|k| binom(m, k) * fubini[(m - k) as usize]).sum());
    }
    for (n, &b) in bell.iter().enumerate() {
        assert_eq!(enumerate_partitions(&standard_ground(n)).len() as u64, b);
    }
    for (n, &f) in fubini.iter().enumerate().take(6) {
        assert_eq!(all_compositions(&standard_ground(n)).len() as u64, f);
    }
}

#[test]
fn refinement_is_a_partial_order_with_coarser_below() {
    let parts = enumerate_partitions(&standard_ground(4));
    let oracle = |p: &SetPartition, q: &SetPartition| {
        q.blocks().iter().all(|b| p.blocks().iter().any(|c| b.is_subset(c)))
    };
    for p in &parts {
        assert!(p.refines(p).unwrap());
        for q in &parts {
            let pq = p.refines(q).unwrap();
            assert_eq!(pq, oracle(p, q));
            if pq && q.refines(p).unwrap() {
                assert_eq!(p, q);
            }
            for r in &parts {
                if pq && q.refines(r).unwrap() {
                    assert!(p.refines(r).unwrap());
                }
            }
        }
    }
    let x = standard_ground(4);
    let coarsest = SetPartition::single_block(&x);
    assert!(parts.iter().all(|p| coarsest.refines(p).unwrap()));
}

type Counted = BTreeMap<Vec<u32>, i64>;

/// Quasishuffle of integer compositions by the first-letter recursion.
fn qsh_oracle(u: &[u32], v: &[u32]) -> Counted {
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
    prepend(u[0], qsh_oracle(&u[1..], v));
    prepend(v[0], qsh_oracle(u, &v[1..]));
    prepend(u[0] + v[0], qsh_oracle(&u[1..], &v[1..]));
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

fn qsym_word(parts: &[u32]) -> Word {
    Word(parts.iter().map(|&p| Monomial(vec![p])).collect())
}

#[test]
fn qsym_product_matches_composition_recursion() {
    for wu in 0..=5u32 {
        for wv in 0..=(5 - wu) {
            for u in int_compositions(wu) {
                for v in int_compositions(wv) {
                    let expected: LinComb<Word> = qsh_oracle(&u, &v)
                        .into_iter()
                        .map(|(w, c)| (qsym_word(&w), integer(c)))
                        .collect();
                    assert_eq!(qsh_words(&qsym_word(&u), &qsym_word(&v)), expected, "{u:?} {v:?}");
                }
            }
        }
    }
}

#[test]
fn quasishuffle_counts() {
    // |QSh(k,l)| = Σ_r (k+l-r)! / (r! (k-r)! (l-r)!).
    let fact = |n: usize| (1..=n as u64).product::<u64>();
    for k in 0..=4 {
        for l in 0..=4 {
            let expected: u64 = (0..=k.min(l))
                .map(|r| fact(k + l - r) / (fact(r) * fact(k - r) * fact(l - r)))
                .sum();
            assert_eq!(enumerate_qsh(k, l).len() as u64, expected, "({k},{l})");
        }
    }
}

fn x_power(n: usize) -> Word {
    Word::x_power(n)
}

#[test]
fn trivial_monoid_coproducts_are_substitutions() {
    for n in 0..=4 {
        let w = LinComb::basis(x_power(n));
        let p = kx_realize(&w).unwrap();
        assert_eq!(kx_realize_pair(&deconcat(&x_power(n))).unwrap(), substitute_sum(&p), "Δ x^{n}");
        assert_eq!(kx_realize_pair(&delta_t(&x_power(n))).unwrap(), substitute_product(&p), "δ x^{n}");
    }
    // The same for images of X^n, which are combinations of several words.
    for n in 0..=4 {
        let w = kx_unrealize(&UniPoly::monomial(n));
        let d: LinComb<Tensor2<Word, Word>> = w.map(deconcat);
        let dt: LinComb<Tensor2<Word, Word>> = w.map(delta_t);
        assert_eq!(kx_realize_pair(&d).unwrap(), substitute_sum(&UniPoly::monomial(n)));
        assert_eq!(kx_realize_pair(&dt).unwrap(), substitute_product(&UniPoly::monomial(n)));
    }
}

#[test]
fn trivial_monoid_words_are_binomials() {
    for n in 0..=5usize {
        let p = kx_realize(&LinComb::basis(x_power(n))).unwrap();
        for m in 0..=8i64 {
            let binom = (0..n as i64).fold(integer(1), |acc, i| acc * integer(m - i) / integer(i + 1));
            assert_eq!(p.eval(&integer(m)), binom, "x^{n} at {m}");
        }
    }
}

/// Orbits of decorated labelled graphs under relabelling, counted by brute force.
fn orbit_count(n: usize, colours: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut orbits = 0;
    for mask in 0u32..1 << pairs.len() {
        for code in 0..colours.pow(n as u32) {
            let deco: Vec<usize> = (0..n).map(|i| code / colours.pow(i as u32) % colours).collect();
            let key = (mask, deco.clone());
            if seen.contains(&key) {
                continue;
            }
            orbits += 1;
            for p in &perms {
                let mut image_mask = 0u32;
                for (e, &(a, b)) in pairs.iter().enumerate() {
                    if mask >> e & 1 == 1 {
                        let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                        image_mask |= 1 << pairs.iter().position(|&q| q == (x, y)).unwrap();
                    }
                }
                let mut image_deco = vec![0; n];
                for i in 0..n {
                    image_deco[p[i]] = deco[i];
                }
                seen.insert((image_mask, image_deco));
            }
        }
    }
    orbits
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn canonical_classes_match_orbit_count() {
    let alphabet = Semigroup::Free(2).alphabet();
    for n in 0..=4 {
        let classes = species_hopf_core::fock::all_classes(&alphabet, n).unwrap();
        let exactly_n = classes.iter().filter(|c| c.num_vertices() == n).count();
        assert_eq!(exactly_n, orbit_count(n, 2), "n = {n}");
    }
    // Unlabelled graphs on 0..=5 vertices: 1, 1, 2, 4, 11, 34.
    let k = Semigroup::K.alphabet();
    let counts: Vec<usize> = (0..=5)
        .map(|n| {
            species_hopf_core::fock::all_classes(&k, n)
                .unwrap()
                .iter()
                .filter(|c| c.num_vertices() == n)
                .count()
        })
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
}

fn small_graph() -> impl Strategy<Value = (usize, Vec<bool>, Vec<u32>)> {
    (0usize..=6).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2),
            prop::collection::vec(0u32..3, n),
        )
    })
}

fn build(n: usize, bits: &[bool], names: &[String]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits[k] {
                edges.push((Label::atom(&names[i]).unwrap(), Label::atom(&names[j]).unwrap()));
            }
            k += 1;
        }
    }
    let vertices: FiniteSet = names.iter().map(|s| Label::atom(s).unwrap()).collect();
    Graph::new(vertices, edges).unwrap()
}

fn rat() -> impl Strategy<Value = Rational> {
    (-20i64..20, 1i64..7).prop_map(|(p, q)| rational(p, q))
}

fn lincomb() -> impl Strategy<Value = LinComb<u8>> {
    prop::collection::vec((0u8..6, rat()), 0..6).prop_map(|terms| terms.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn class_is_relabel_invariant((n, bits, colours) in small_graph(), seed in any::<u64>()) {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let g = build(n, &bits, &names);
        let deco: DecorationMap = names
            .iter()
            .zip(&colours)
            .map(|(s, &c)| (Label::atom(s).unwrap(), Monomial(vec![c, 1])))
            .collect();
        // A pseudo-random renaming of the vertices.
        let mut order: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (state >> 33) as usize % (i + 1));
        }
        let renamed: Vec<String> = order.iter().map(|&i| format!("w{i}")).collect();
        let h = build(n, &bits, &renamed);
        let deco_h: DecorationMap = renamed
            .iter()
            .zip(&colours)
            .map(|(s, &c)| (Label::atom(s).unwrap(), Monomial(vec![c, 1])))
            .collect();
        let a: DecoratedGraph = class_of(&g, Some(&deco)).unwrap();
        let b: DecoratedGraph = class_of(&h, Some(&deco_h)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn extraction_contraction_left_counit((n, bits, _) in small_graph()) {
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let g = build(n, &bits, &names);
        let d = delta_full(&g);
        prop_assert_eq!(d.len(), g.connected_partitions().len());
        let left = d.map(|Tensor2(p, q)| LinComb::term(q.clone(), counit_eps_delta(p.graph())));
        prop_assert_eq!(left, LinComb::basis(g.clone()));
        let right = d.map(|Tensor2(p, q)| LinComb::term(p.graph().clone(), counit_eps_delta(q)));
        prop_assert_eq!(right, LinComb::basis(g));
    }

    #[test]
    fn lincomb_module_laws(a in lincomb(), b in lincomb(), c in rat()) {
        prop_assert_eq!((a.clone() + b.clone()) - b.clone(), a.clone());
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!((a.clone() + b.clone()).scale(&c), a.scale(&c) + b.scale(&c));
        prop_assert!((a.clone() - a).is_zero());
    }

    #[test]
    fn qsym_commutative(u in prop::collection::vec(1u32..4, 0..5), v in prop::collection::vec(1u32..4, 0..5)) {
        prop_assert_eq!(qsh_words(&qsym_word(&u), &qsym_word(&v)), qsh_words(&qsym_word(&v), &qsym_word(&u)));
    }

    #[test]
    fn realization_round_trip(coeffs in prop::collection::vec(rat(), 0..6)) {
        let p = UniPoly::new(coeffs);
        prop_assert_eq!(kx_realize(&kx_unrealize(&p)).unwrap(), p);
    }
}
