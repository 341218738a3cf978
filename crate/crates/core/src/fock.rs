//! The `V`-coloured Fock functor applied to graphs.
//!
//! A basis element of `F_V[G]` is a graph on `[n]` with one basis element of
//! `V` per vertex, taken up to simultaneous relabelling. Classes are stored in
//! canonical form so that equality of classes is structural equality.
//!
//! All decorations are grouplike (`δ_V(m) = m ⊗ m`, `ε_V(m) = 1`), so every
//! Sweedler sum collapses to a single term.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::{integer, tensor_product, LinComb, Rational, Tensor2, Tensor3};
use crate::error::{Error, Result};
use crate::graphs::{canonical_order, DecorationMap, Graph, DEFAULT_CANON_BOUND};
use crate::monoid::Monomial;
use crate::partitions::{restricted_growth_strings, FiniteSet, Label};
use crate::twisted::checks::{CheckReport, Tally};
use crate::twisted::PartitionedGraph;

/// A class in `F_V[G]`: canonical decorated graph on `0..n` (printed 1-based).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DecoratedGraph {
    decorations: Vec<Monomial>,
    edges: BTreeSet<(usize, usize)>,
}

pub type FockLC = LinComb<DecoratedGraph>;
pub type FockPairLC = LinComb<Tensor2<DecoratedGraph, DecoratedGraph>>;

fn adjacency(n: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    adj
}

impl DecoratedGraph {
    /// The empty graph, unit of the product.
    pub fn empty() -> DecoratedGraph {
        DecoratedGraph {
            decorations: Vec::new(),
            edges: BTreeSet::new(),
        }
    }

    /// Canonicalizes a decorated graph given on vertices `0..n`.
    pub fn from_parts<I>(decorations: Vec<Monomial>, edges: I) -> Result<DecoratedGraph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = decorations.len();
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b || a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("bad edge {}-{}", a + 1, b + 1)));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let order = canonical_order(&decorations, &adjacency(n, &set), DEFAULT_CANON_BOUND)?;
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        Ok(DecoratedGraph {
            decorations: order.iter().map(|&v| decorations[v].clone()).collect(),
            edges: set
                .into_iter()
                .map(|(a, b)| {
                    let (x, y) = (position[a], position[b]);
                    (x.min(y), x.max(y))
                })
                .collect(),
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.decorations.len()
    }

    pub fn decorations(&self) -> &[Monomial] {
        &self.decorations
    }

    pub fn edges(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.edges.iter()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Product of all decorations (the unit for the empty graph).
    pub fn weight(&self) -> Monomial {
        Monomial::product(&self.decorations)
    }

    fn induced(&self, subset: &[usize]) -> Result<DecoratedGraph> {
        let mut index = BTreeMap::new();
        for (i, &v) in subset.iter().enumerate() {
            index.insert(v, i);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|(a, b)| Some((*index.get(a)?, *index.get(b)?)));
        DecoratedGraph::from_parts(subset.iter().map(|&v| self.decorations[v].clone()).collect(), edges)
    }
}

impl Ord for DecoratedGraph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.decorations
            .len()
            .cmp(&other.decorations.len())
            .then_with(|| self.edges.len().cmp(&other.edges.len()))
            .then_with(|| self.decorations.cmp(&other.decorations))
            .then_with(|| self.edges.cmp(&other.edges))
    }
}

impl PartialOrd for DecoratedGraph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DecoratedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.decorations.is_empty() {
            return f.write_str("1");
        }
        f.write_str("D[")?;
        for (i, d) in self.decorations.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if d.exponents().is_empty() {
                write!(f, "{}", i + 1)?;
            } else {
                write!(f, "{}:{d}", i + 1)?;
            }
        }
        if !self.edges.is_empty() {
            f.write_str(" |")?;
            for (a, b) in &self.edges {
                write!(f, " {}-{}", a + 1, b + 1)?;
            }
        }
        f.write_str("]")
    }
}

impl fmt::Debug for DecoratedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for DecoratedGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DecoratedGraph", 2)?;
        st.serialize_field("decorations", &self.decorations)?;
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

/// The class of a labelled decorated graph. Missing decorations are the unit.
pub fn class_of(graph: &Graph, decorations: Option<&DecorationMap>) -> Result<DecoratedGraph> {
    let labels: Vec<&Label> = graph.vertices().iter().collect();
    let index: BTreeMap<&Label, usize> = labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
    let decos = labels
        .iter()
        .map(|l| decoration_of(decorations, l))
        .collect::<Result<Vec<_>>>()?;
    DecoratedGraph::from_parts(decos, graph.edges().map(|(a, b)| (index[a], index[b])))
}

fn decoration_of(decorations: Option<&DecorationMap>, l: &Label) -> Result<Monomial> {
    match decorations {
        None => Ok(Monomial::unit()),
        Some(d) => d
            .get(l)
            .cloned()
            .ok_or_else(|| Error::InvalidDecoration(format!("{l} has no decoration"))),
    }
}

/// Product: disjoint union with the second graph shifted by `n`.
pub fn fock_product(a: &DecoratedGraph, b: &DecoratedGraph) -> Result<DecoratedGraph> {
    let k = a.num_vertices();
    let mut decorations = a.decorations.clone();
    decorations.extend(b.decorations.iter().cloned());
    let edges = a
        .edges
        .iter()
        .copied()
        .chain(b.edges.iter().map(|&(x, y)| (x + k, y + k)));
    DecoratedGraph::from_parts(decorations, edges)
}

pub fn fock_product_lc(a: &FockLC, b: &FockLC) -> Result<FockLC> {
    a.try_bilinear(b, |x, y| fock_product(x, y).map(LinComb::basis))
}

fn subsets(n: usize) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> {
    (0u64..1 << n).map(move |mask| (0..n).partition(|&i| mask >> i & 1 == 1))
}

/// `Δ(G) = Σ_{A⊔B=V(G)} G|_A ⊗ G|_B`.
pub fn fock_coproduct(a: &DecoratedGraph) -> Result<FockPairLC> {
    let mut out = LinComb::zero();
    for (left, right) in subsets(a.num_vertices()) {
        out.add_term(Tensor2(a.induced(&left)?, a.induced(&right)?), integer(1));
    }
    Ok(out)
}

fn blocks_of(rgs: &[usize]) -> Vec<Vec<usize>> {
    let count = rgs.iter().map(|&b| b + 1).max().unwrap_or(0);
    let mut blocks = vec![Vec::new(); count];
    for (v, &b) in rgs.iter().enumerate() {
        blocks[b].push(v);
    }
    blocks
}

fn block_connected(block: &[usize], adj: &[Vec<bool>]) -> bool {
    let mut seen = vec![block[0]];
    let mut stack = vec![block[0]];
    while let Some(v) = stack.pop() {
        for &w in block {
            if adj[v][w] && !seen.contains(&w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    seen.len() == block.len()
}

/// Assignments of `0..n` to blocks with every block connected in `adj`.
fn connected_assignments(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    restricted_growth_strings(adj.len())
        .into_iter()
        .filter(|rgs| blocks_of(rgs).iter().all(|b| block_connected(b, adj)))
        .collect()
}

/// `δ(G) = Σ_{∼∈E_c[G]} G/∼ ⊗ G|∼`: contracted vertices carry the product
/// of their block's decorations, the restricted graph keeps the originals.
pub fn fock_delta(a: &DecoratedGraph) -> Result<FockPairLC> {
    let adj = adjacency(a.num_vertices(), &a.edges);
    let mut out = LinComb::zero();
    for rgs in connected_assignments(&adj) {
        let blocks = blocks_of(&rgs);
        let contracted = DecoratedGraph::from_parts(
            blocks
                .iter()
                .map(|b| Monomial::product(b.iter().map(|&v| &a.decorations[v])))
                .collect(),
            a.edges
                .iter()
                .filter(|(x, y)| rgs[*x] != rgs[*y])
                .map(|&(x, y)| (rgs[x], rgs[y])),
        )?;
        let restricted = DecoratedGraph::from_parts(
            a.decorations.clone(),
            a.edges.iter().copied().filter(|&(x, y)| rgs[x] == rgs[y]),
        )?;
        out.add_term(Tensor2(contracted, restricted), integer(1));
    }
    Ok(out)
}

/// `(ε_Δ, ε_δ)`.
pub fn fock_counits(a: &DecoratedGraph) -> (Rational, Rational) {
    (
        integer(i64::from(a.num_vertices() == 0)),
        integer(i64::from(a.num_edges() == 0)),
    )
}

/// `ρ(G) = G ⊗ Π d_G(v)`.
pub fn coaction_rho(a: &DecoratedGraph) -> LinComb<Tensor2<DecoratedGraph, Monomial>> {
    LinComb::basis(Tensor2(a.clone(), a.weight()))
}

/// A class in `F_V[G′]`: decorations on the ground `0..n`, a block index per
/// ground element (restricted growth string), and edges between blocks.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecoratedPartitionedGraph {
    decorations: Vec<Monomial>,
    blocks: Vec<usize>,
    edges: BTreeSet<(usize, usize)>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Largest ground accepted for partitioned classes (canonicalized by brute force).
pub const PARTITIONED_BOUND: usize = 6;

impl DecoratedPartitionedGraph {
    /// Canonicalizes; `blocks[i]` is the block of ground element `i`.
    pub fn from_parts<I>(decorations: Vec<Monomial>, blocks: Vec<usize>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = decorations.len();
        if n > PARTITIONED_BOUND {
            return Err(Error::BoundExceeded {
                size: n,
                bound: PARTITIONED_BOUND,
            });
        }
        if blocks.len() != n {
            return Err(Error::InvalidGraph("one block index per ground element".into()));
        }
        let count = blocks.iter().map(|&b| b + 1).max().unwrap_or(0);
        if (0..count).any(|b| !blocks.contains(&b)) {
            return Err(Error::InvalidGraph("block indices must be contiguous".into()));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b || a >= count || b >= count {
                return Err(Error::InvalidGraph(format!("bad block edge {a}-{b}")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        let best = permutations(n)
            .into_iter()
            .map(|perm| {
                let mut renumber = vec![usize::MAX; count];
                let mut next = 0;
                let new_blocks: Vec<usize> = perm
                    .iter()
                    .map(|&old| {
                        let b = blocks[old];
                        if renumber[b] == usize::MAX {
                            renumber[b] = next;
                            next += 1;
                        }
                        renumber[b]
                    })
                    .collect();
                let new_edges: BTreeSet<(usize, usize)> = set
                    .iter()
                    .map(|&(a, b)| {
                        let (x, y) = (renumber[a], renumber[b]);
                        (x.min(y), x.max(y))
                    })
                    .collect();
                DecoratedPartitionedGraph {
                    decorations: perm.iter().map(|&old| decorations[old].clone()).collect(),
                    blocks: new_blocks,
                    edges: new_edges,
                }
            })
            .min()
            .expect("at least one permutation");
        Ok(best)
    }

    pub fn empty() -> Self {
        DecoratedPartitionedGraph {
            decorations: Vec::new(),
            blocks: Vec::new(),
            edges: BTreeSet::new(),
        }
    }

    /// A class of `F_V[G]` seen in `F_V[G′]` with singleton blocks.
    pub fn discrete(a: &DecoratedGraph) -> Result<Self> {
        let n = a.num_vertices();
        DecoratedPartitionedGraph::from_parts(a.decorations.clone(), (0..n).collect(), a.edges.iter().copied())
    }

    pub fn ground_size(&self) -> usize {
        self.decorations.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.iter().map(|&b| b + 1).max().unwrap_or(0)
    }

    fn members(&self) -> Vec<Vec<usize>> {
        blocks_of(&self.blocks)
    }

    /// Sub-object on a union of blocks.
    fn restrict_to(&self, ground: &[usize]) -> Result<Self> {
        let keep: BTreeSet<usize> = ground.iter().map(|&g| self.blocks[g]).collect();
        let block_index: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        DecoratedPartitionedGraph::from_parts(
            ground.iter().map(|&g| self.decorations[g].clone()).collect(),
            ground.iter().map(|&g| block_index[&self.blocks[g]]).collect(),
            self.edges
                .iter()
                .filter_map(|(a, b)| Some((*block_index.get(a)?, *block_index.get(b)?))),
        )
    }
}

impl fmt::Display for DecoratedPartitionedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.decorations.is_empty() {
            return f.write_str("1");
        }
        let names: Vec<String> = self
            .members()
            .iter()
            .map(|b| b.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "P[{}", names.join(" "))?;
        if !self.edges.is_empty() {
            f.write_str(" |")?;
            for &(a, b) in &self.edges {
                write!(f, " {}-{}", names[a], names[b])?;
            }
        }
        if self.decorations.iter().any(|d| !d.exponents().is_empty()) {
            f.write_str(" ;")?;
            for d in &self.decorations {
                write!(f, " {d}")?;
            }
        }
        f.write_str("]")
    }
}

impl fmt::Debug for DecoratedPartitionedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for DecoratedPartitionedGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DecoratedPartitionedGraph", 3)?;
        st.serialize_field("decorations", &self.decorations)?;
        let blocks: Vec<Vec<usize>> = self
            .members()
            .iter()
            .map(|b| b.iter().map(|v| v + 1).collect())
            .collect();
        st.serialize_field("blocks", &blocks)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}

/// The class of a labelled partitioned graph with decorations on the atoms.
pub fn class_of_partitioned(
    graph: &PartitionedGraph,
    decorations: Option<&DecorationMap>,
) -> Result<DecoratedPartitionedGraph> {
    let ground: Vec<Label> = graph.ground().iter().cloned().collect();
    let vertices: Vec<&Label> = graph.graph().vertices().iter().collect();
    let vertex_index: BTreeMap<&Label, usize> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let blocks = ground
        .iter()
        .map(|atom| {
            vertices
                .iter()
                .position(|v| v.atoms().any(|a| a == atom.as_str()))
                .expect("every atom lies in a block")
        })
        .collect::<Vec<_>>();
    // Renumber blocks by first occurrence along the sorted ground.
    let mut renumber = BTreeMap::new();
    for &b in &blocks {
        let next = renumber.len();
        renumber.entry(b).or_insert(next);
    }
    let decos = ground
        .iter()
        .map(|a| decoration_of(decorations, a))
        .collect::<Result<Vec<_>>>()?;
    DecoratedPartitionedGraph::from_parts(
        decos,
        blocks.iter().map(|b| renumber[b]).collect(),
        graph
            .graph()
            .edges()
            .map(|(a, b)| (renumber[&vertex_index[a]], renumber[&vertex_index[b]])),
    )
}

/// `m′`: shifted disjoint union.
pub fn fock_product_prime(
    a: &DecoratedPartitionedGraph,
    b: &DecoratedPartitionedGraph,
) -> Result<DecoratedPartitionedGraph> {
    let shift = a.num_blocks();
    let mut decorations = a.decorations.clone();
    decorations.extend(b.decorations.iter().cloned());
    let mut blocks = a.blocks.clone();
    blocks.extend(b.blocks.iter().map(|x| x + shift));
    let edges = a
        .edges
        .iter()
        .copied()
        .chain(b.edges.iter().map(|&(x, y)| (x + shift, y + shift)));
    DecoratedPartitionedGraph::from_parts(decorations, blocks, edges)
}

type PartPairLC = LinComb<Tensor2<DecoratedPartitionedGraph, DecoratedPartitionedGraph>>;

/// `Δ′`: splits of the ground into two unions of blocks.
pub fn fock_coproduct_prime(a: &DecoratedPartitionedGraph) -> Result<PartPairLC> {
    let mut out = LinComb::zero();
    for (left, right) in subsets(a.ground_size()) {
        let straddles = left
            .iter()
            .any(|&l| right.iter().any(|&r| a.blocks[l] == a.blocks[r]));
        if straddles {
            continue;
        }
        out.add_term(Tensor2(a.restrict_to(&left)?, a.restrict_to(&right)?), integer(1));
    }
    Ok(out)
}

/// `δ′`: connected partitions of the block graph; both legs keep the ground decorations.
pub fn fock_delta_prime(a: &DecoratedPartitionedGraph) -> Result<PartPairLC> {
    let adj = adjacency(a.num_blocks(), &a.edges);
    let mut out = LinComb::zero();
    for rgs in connected_assignments(&adj) {
        let merged: Vec<usize> = a.blocks.iter().map(|&b| rgs[b]).collect();
        let left = DecoratedPartitionedGraph::from_parts(
            a.decorations.clone(),
            renumber_first_occurrence(&merged),
            a.edges
                .iter()
                .filter(|(x, y)| rgs[*x] != rgs[*y])
                .map(|&(x, y)| (rgs[x], rgs[y]))
                .map(|(x, y)| (first_occurrence_index(&merged, x), first_occurrence_index(&merged, y))),
        )?;
        let right = DecoratedPartitionedGraph::from_parts(
            a.decorations.clone(),
            a.blocks.clone(),
            a.edges.iter().copied().filter(|&(x, y)| rgs[x] == rgs[y]),
        )?;
        out.add_term(Tensor2(left, right), integer(1));
    }
    Ok(out)
}

fn renumber_first_occurrence(values: &[usize]) -> Vec<usize> {
    values.iter().map(|&v| first_occurrence_index(values, v)).collect()
}

/// Rank of `v` among the distinct values of `values` ordered by first occurrence.
fn first_occurrence_index(values: &[usize], v: usize) -> usize {
    let mut seen = Vec::new();
    for &x in values {
        if !seen.contains(&x) {
            if x == v {
                return seen.len();
            }
            seen.push(x);
        }
    }
    unreachable!("value occurs in the sequence")
}

/// `π`: collapse every block to one vertex decorated by the product of its members.
pub fn pi_project(a: &DecoratedPartitionedGraph) -> Result<DecoratedGraph> {
    let decorations = a
        .members()
        .iter()
        .map(|b| Monomial::product(b.iter().map(|&v| &a.decorations[v])))
        .collect();
    DecoratedGraph::from_parts(decorations, a.edges.iter().copied())
}

fn pi_pair(t: &PartPairLC) -> Result<FockPairLC> {
    t.try_map(|Tensor2(x, y)| Ok(LinComb::basis(Tensor2(pi_project(x)?, pi_project(y)?))))
}

/// Every class with at most `max_n` vertices decorated from `alphabet`.
pub fn all_classes(alphabet: &[Monomial], max_n: usize) -> Result<Vec<DecoratedGraph>> {
    let mut out = BTreeSet::new();
    for n in 0..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for deco in decoration_tuples(alphabet, n) {
            for mask in 0u64..1 << pairs.len() {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, e)| *e);
                out.insert(DecoratedGraph::from_parts(deco.clone(), edges)?);
            }
        }
    }
    Ok(out.into_iter().collect())
}

fn decoration_tuples(alphabet: &[Monomial], n: usize) -> Vec<Vec<Monomial>> {
    (0..n).fold(vec![Vec::new()], |acc, _| {
        acc.iter()
            .flat_map(|t| {
                alphabet.iter().map(move |m| {
                    let mut next = t.clone();
                    next.push(m.clone());
                    next
                })
            })
            .collect()
    })
}

/// Every partitioned class with ground of size at most `max_n` over `alphabet`.
pub fn all_partitioned_classes(alphabet: &[Monomial], max_n: usize) -> Result<Vec<DecoratedPartitionedGraph>> {
    let mut out = BTreeSet::new();
    for n in 0..=max_n {
        for rgs in restricted_growth_strings(n) {
            let k = rgs.iter().map(|&b| b + 1).max().unwrap_or(0);
            let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
            for deco in decoration_tuples(alphabet, n) {
                for mask in 0u64..1 << pairs.len() {
                    let edges = pairs
                        .iter()
                        .enumerate()
                        .filter(|(e, _)| mask >> e & 1 == 1)
                        .map(|(_, e)| *e);
                    out.insert(DecoratedPartitionedGraph::from_parts(deco.clone(), rgs.clone(), edges)?);
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

fn size_label(alphabet: &[Monomial], max_n: usize) -> (FiniteSet, String, String) {
    let letters: Vec<String> = alphabet.iter().map(|m| m.to_string()).collect();
    (FiniteSet::empty(), format!("n≤{max_n}"), format!("V∋{}", letters.join(",")))
}

fn finish(tally: Tally, axiom: &str, alphabet: &[Monomial], max_n: usize) -> CheckReport {
    let (empty, x, y) = size_label(alphabet, max_n);
    let mut r = tally.report(axiom, &empty, None);
    r.x = x;
    r.y = y;
    r
}

type FockTriple = LinComb<Tensor3<DecoratedGraph, DecoratedGraph, DecoratedGraph>>;

fn pair_product(a: &FockPairLC, b: &FockPairLC) -> Result<FockPairLC> {
    a.try_bilinear(b, |Tensor2(a1, a2), Tensor2(b1, b2)| {
        Ok(tensor_product(
            &LinComb::basis(fock_product(a1, b1)?),
            &LinComb::basis(fock_product(a2, b2)?),
        ))
    })
}

/// Every axiom of the double bialgebra `(F_V[G], ·, Δ, δ)` on classes of at
/// most `max_n` vertices over `alphabet`.
pub fn check_fock_double(alphabet: &[Monomial], max_n: usize) -> Result<CheckReport> {
    let classes = all_classes(alphabet, max_n)?;
    let mut tally = Tally::default();
    let one = LinComb::basis(DecoratedGraph::empty());
    type Cop = fn(&DecoratedGraph) -> Result<FockPairLC>;
    for a in &classes {
        let la = LinComb::basis(a.clone());
        tally.record(&fock_product_lc(&la, &one)?, &la, || format!("unit at {a}"));
        for (name, cop, which) in [("Δ", fock_coproduct as Cop, 0), ("δ", fock_delta as Cop, 1)] {
            let eps = |g: &DecoratedGraph| {
                let (c, d) = fock_counits(g);
                if which == 0 {
                    c
                } else {
                    d
                }
            };
            let d = cop(a)?;
            let lhs: FockTriple = d.try_map(|Tensor2(p, q)| {
                Ok::<_, Error>(cop(p)?.map_basis(|Tensor2(s, t)| Tensor3(s.clone(), t.clone(), q.clone())))
            })?;
            let rhs: FockTriple = d.try_map(|Tensor2(p, q)| {
                Ok::<_, Error>(cop(q)?.map_basis(|Tensor2(s, t)| Tensor3(p.clone(), s.clone(), t.clone())))
            })?;
            tally.record(&lhs, &rhs, || format!("{name} coassociativity at {a}"));
            let left = d.map(|Tensor2(p, q)| LinComb::term(q.clone(), eps(p)));
            let right = d.map(|Tensor2(p, q)| LinComb::term(p.clone(), eps(q)));
            tally.record(&left, &la, || format!("{name} left counit at {a}"));
            tally.record(&right, &la, || format!("{name} right counit at {a}"));
        }
        let delta = fock_coproduct(a)?;
        tally.record(&delta, &delta.map_basis(|t| t.clone().flip()), || {
            format!("Δ cocommutativity at {a}")
        });
        let lhs: FockTriple = fock_delta(a)?.try_map(|Tensor2(p, q)| {
            Ok::<_, Error>(
                fock_coproduct(p)?.map_basis(|Tensor2(s, t)| Tensor3(s.clone(), t.clone(), q.clone())),
            )
        })?;
        let rhs: FockTriple = delta.try_map(|Tensor2(x, y)| {
            fock_delta(x)?.try_bilinear(&fock_delta(y)?, |Tensor2(x1, x2), Tensor2(y1, y2)| {
                Ok::<_, Error>(LinComb::basis(Tensor3(x1.clone(), y1.clone(), fock_product(x2, y2)?)))
            })
        })?;
        tally.record(&lhs, &rhs, || format!("double law at {a}"));
        for b in classes.iter().filter(|b| a.num_vertices() + b.num_vertices() <= max_n) {
            let lb = LinComb::basis(b.clone());
            let ab = fock_product_lc(&la, &lb)?;
            tally.record(&ab, &fock_product_lc(&lb, &la)?, || format!("commutativity at {a}, {b}"));
            let lhs = ab.try_map(fock_coproduct)?;
            tally.record(&lhs, &pair_product(&fock_coproduct(a)?, &fock_coproduct(b)?)?, || {
                format!("Δ multiplicative at {a}, {b}")
            });
            let lhs = ab.try_map(fock_delta)?;
            tally.record(&lhs, &pair_product(&fock_delta(a)?, &fock_delta(b)?)?, || {
                format!("δ multiplicative at {a}, {b}")
            });
            let (ea, eb) = (fock_counits(a).1, fock_counits(b).1);
            let eab = ab.pair(|g| fock_counits(g).1);
            tally.record(&eab, &(ea * eb), || format!("ε_δ multiplicative at {a}, {b}"));
            for c in classes
                .iter()
                .filter(|c| a.num_vertices() + b.num_vertices() + c.num_vertices() <= max_n)
            {
                let lc = LinComb::basis(c.clone());
                let lhs = fock_product_lc(&ab, &lc)?;
                let rhs = fock_product_lc(&la, &fock_product_lc(&lb, &lc)?)?;
                tally.record(&lhs, &rhs, || format!("associativity at {a}, {b}, {c}"));
            }
        }
    }
    Ok(finish(tally, "fock-double-bialgebra", alphabet, max_n))
}

/// `π∘m′ = m∘(π⊗π)`, `(π⊗π)∘Δ′ = Δ∘π`, `(π⊗π)∘δ′ = δ∘π`, and `π` fixes
/// discrete classes.
pub fn check_pi(alphabet: &[Monomial], max_n: usize) -> Result<CheckReport> {
    let classes = all_partitioned_classes(alphabet, max_n)?;
    let mut tally = Tally::default();
    for a in &classes {
        let pa = pi_project(a)?;
        tally.record(&pi_pair(&fock_coproduct_prime(a)?)?, &fock_coproduct(&pa)?, || {
            format!("Δ′ at {a}")
        });
        tally.record(&pi_pair(&fock_delta_prime(a)?)?, &fock_delta(&pa)?, || format!("δ′ at {a}"));
        for b in classes
            .iter()
            .filter(|b| a.ground_size() + b.ground_size() <= max_n)
        {
            let lhs = pi_project(&fock_product_prime(a, b)?)?;
            let rhs = fock_product(&pa, &pi_project(b)?)?;
            tally.record(&lhs, &rhs, || format!("m′ at {a}, {b}"));
        }
    }
    for g in all_classes(alphabet, max_n)? {
        let lifted = pi_project(&DecoratedPartitionedGraph::discrete(&g)?)?;
        tally.record(&lifted, &g, || format!("π on discrete {g}"));
    }
    Ok(finish(tally, "fock-pi", alphabet, max_n))
}

/// `ρ` is a coaction, and `m`, `Δ`, `δ` are comodule morphisms.
pub fn check_rho(alphabet: &[Monomial], max_n: usize) -> Result<CheckReport> {
    let classes = all_classes(alphabet, max_n)?;
    let mut tally = Tally::default();
    for a in &classes {
        let r = coaction_rho(a);
        let twice = r.map(|Tensor2(g, m)| {
            coaction_rho(g).map_basis(|Tensor2(h, n)| Tensor3(h.clone(), n.clone(), m.clone()))
        });
        let dual = r.map_basis(|Tensor2(g, m)| Tensor3(g.clone(), m.clone(), m.clone()));
        tally.record(&twice, &dual, || format!("(ρ⊗Id)ρ at {a}"));
        tally.record(&r.map(|Tensor2(g, _)| LinComb::basis(g.clone())), &LinComb::basis(a.clone()), || {
            format!("(Id⊗ε_V)ρ at {a}")
        });
        let lhs = r.try_map(|Tensor2(g, m)| {
            Ok::<_, Error>(fock_coproduct(g)?.map_basis(|Tensor2(x, y)| Tensor3(x.clone(), y.clone(), m.clone())))
        })?;
        let rhs = fock_coproduct(a)?.map(|Tensor2(x, y)| {
            coaction_rho(x).bilinear(&coaction_rho(y), |Tensor2(x1, m1), Tensor2(y1, m2)| {
                LinComb::basis(Tensor3(x1.clone(), y1.clone(), m1.mul(m2)))
            })
        });
        tally.record(&lhs, &rhs, || format!("Δ comodule at {a}"));
        let lhs = r.try_map(|Tensor2(g, m)| {
            Ok::<_, Error>(fock_delta(g)?.map_basis(|Tensor2(x, y)| Tensor3(x.clone(), y.clone(), m.clone())))
        })?;
        let rhs = fock_delta(a)?.map(|Tensor2(x, y)| {
            coaction_rho(x).map_basis(|Tensor2(x1, m)| Tensor3(x1.clone(), y.clone(), m.clone()))
        });
        tally.record(&lhs, &rhs, || format!("δ comodule at {a}"));
        for b in classes.iter().filter(|b| a.num_vertices() + b.num_vertices() <= max_n) {
            let lhs = coaction_rho(&fock_product(a, b)?);
            let rhs = LinComb::basis(Tensor2(fock_product(a, b)?, a.weight().mul(&b.weight())));
            tally.record(&lhs, &rhs, || format!("m comodule at {a}, {b}"));
        }
    }
    Ok(finish(tally, "fock-rho", alphabet, max_n))
}
