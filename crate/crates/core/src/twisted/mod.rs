//! The twisted bialgebra of graphs and its extraction-contraction coproduct.
//!
//! * product: disjoint union, unit the empty graph;
//! * `Δ_{A,B}(G) = G|_A ⊗ G|_B`;
//! * `δ_∼(G) = G/∼ ⊗ G|∼` when every class of `∼` is connected in `G`, else `0`.
//!
//! The full `δ(G) = Σ_∼ δ_∼(G)` lands in partitioned graphs (the composite
//! species with `Com`), on which the induced `m′`, `Δ′`, `δ′` also live.

pub mod checks;

use std::fmt;

use serde::Serialize;

use crate::algebra::{integer, tensor_product, LinComb, Rational, Tensor2, Tensor3};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::partitions::{enumerate_partitions, FiniteSet, Label, SetPartition};

/// Switches for the defining filters, used to build mutated operations for
/// negative controls. [`Rules::STANDARD`] is the real structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rules {
    /// `δ_∼(G) = 0` unless every class of `∼` is connected.
    pub connectivity_filter: bool,
    /// `ε_δ(G) = 1` only for edgeless graphs (otherwise always 1).
    pub edgeless_counit: bool,
    /// The product-compatibility right side vanishes unless `∼ = ∼_X ⊔ ∼_Y`.
    pub split_filter: bool,
    /// `Δ′_{A,B}(H) = 0` unless `A` and `B` are unions of vertices of `H`.
    pub block_filter: bool,
}

impl Rules {
    pub const STANDARD: Rules = Rules {
        connectivity_filter: true,
        edgeless_counit: true,
        split_filter: true,
        block_filter: true,
    };
}

impl Default for Rules {
    fn default() -> Self {
        Rules::STANDARD
    }
}

pub type GraphLC = LinComb<Graph>;
pub type PGraphLC = LinComb<PartitionedGraph>;

/// A graph whose vertices are the blocks of a partition of its ground set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct PartitionedGraph(Graph);

impl PartitionedGraph {
    /// Validates that the vertex labels are pairwise atom-disjoint.
    pub fn new(graph: Graph) -> Result<PartitionedGraph> {
        if !graph.vertices().atoms_disjoint() {
            return Err(Error::Overlap(format!(
                "vertex blocks of {graph} are not disjoint"
            )));
        }
        Ok(PartitionedGraph(graph))
    }

    /// Embeds a graph on `X` as the partitioned graph with singleton blocks.
    pub fn discrete(graph: &Graph) -> Result<PartitionedGraph> {
        if graph.vertices().iter().any(|v| !v.is_atomic()) {
            return Err(Error::InvalidGraph(format!("{graph} has composite labels")));
        }
        Ok(PartitionedGraph(graph.clone()))
    }

    pub fn empty() -> PartitionedGraph {
        PartitionedGraph(Graph::empty())
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn ground(&self) -> FiniteSet {
        self.0.vertices().atoms()
    }

    /// The partition of the ground set formed by the vertices.
    pub fn partition(&self) -> SetPartition {
        let blocks = self
            .0
            .vertices()
            .iter()
            .map(|v| v.atom_labels().collect())
            .collect();
        SetPartition::from_blocks(blocks).expect("vertex blocks are disjoint")
    }
}

impl fmt::Display for PartitionedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for PartitionedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `GH` on basis elements.
pub fn product(g: &Graph, h: &Graph) -> Result<Graph> {
    g.disjoint_union(h)
}

/// Bilinear disjoint union.
pub fn product_lc(a: &GraphLC, b: &GraphLC) -> Result<GraphLC> {
    a.try_bilinear(b, |g, h| product(g, h).map(LinComb::basis))
}

fn check_cover(ground: &FiniteSet, a: &FiniteSet, b: &FiniteSet) -> Result<()> {
    if !a.is_disjoint(b) || a.union(b) != *ground {
        return Err(Error::NotACover {
            ground: ground.to_string(),
            detail: format!("{a} and {b}"),
        });
    }
    Ok(())
}

/// `Δ_{A,B}(G) = G|_A ⊗ G|_B`.
pub fn coproduct_split(g: &Graph, a: &FiniteSet, b: &FiniteSet) -> Result<LinComb<Tensor2<Graph, Graph>>> {
    check_cover(g.vertices(), a, b)?;
    Ok(LinComb::basis(Tensor2(
        g.induced_subgraph(a)?,
        g.induced_subgraph(b)?,
    )))
}

/// The sum of `Δ_{A,V∖A}(G)` over all subsets `A` of the vertices.
pub fn coproduct_full(g: &Graph) -> LinComb<Tensor2<Graph, Graph>> {
    let mut out = LinComb::zero();
    for a in g.vertices().subsets() {
        let b = g.vertices().difference(&a);
        out += coproduct_split(g, &a, &b).expect("subset split is a cover");
    }
    out
}

/// `δ_∼(G)`.
pub fn extraction_contraction(g: &Graph, p: &SetPartition) -> Result<LinComb<Tensor2<Graph, Graph>>> {
    extraction_contraction_with(g, p, Rules::STANDARD)
}

pub fn extraction_contraction_with(
    g: &Graph,
    p: &SetPartition,
    rules: Rules,
) -> Result<LinComb<Tensor2<Graph, Graph>>> {
    if rules.connectivity_filter && !g.is_connected_partition(p)? {
        return Ok(LinComb::zero());
    }
    Ok(LinComb::basis(Tensor2(g.contract(p)?, g.restrict_edges(p)?)))
}

/// `δ(G) = Σ_∼ δ_∼(G)`, the left leg read as a partitioned graph on `V(G)`.
pub fn delta_full(g: &Graph) -> LinComb<Tensor2<PartitionedGraph, Graph>> {
    delta_full_with(g, Rules::STANDARD)
}

pub fn delta_full_with(g: &Graph, rules: Rules) -> LinComb<Tensor2<PartitionedGraph, Graph>> {
    let mut out = LinComb::zero();
    for p in enumerate_partitions(g.vertices()) {
        let term = extraction_contraction_with(g, &p, rules).expect("partition of the vertex set");
        out += term.map_basis(|Tensor2(q, r)| Tensor2(PartitionedGraph(q.clone()), r.clone()));
    }
    out
}

/// `ε_δ(G)`: 1 on edgeless graphs, 0 otherwise.
pub fn counit_eps_delta(g: &Graph) -> Rational {
    counit_eps_delta_with(g, Rules::STANDARD)
}

pub fn counit_eps_delta_with(g: &Graph, rules: Rules) -> Rational {
    if !rules.edgeless_counit || g.num_edges() == 0 {
        integer(1)
    } else {
        integer(0)
    }
}

/// `ε_Δ(G)`: 1 on the empty graph, 0 otherwise.
pub fn counit_eps_cut(g: &Graph) -> Rational {
    integer(i64::from(g.vertices().is_empty()))
}

/// `m′`: disjoint union of partitioned graphs.
pub fn product_prime(g: &PartitionedGraph, h: &PartitionedGraph) -> Result<PartitionedGraph> {
    Ok(PartitionedGraph(g.0.disjoint_union(&h.0)?))
}

/// `Δ′_{A,B}(H)`: the split of `H` when `A` and `B` are unions of vertices, else `0`.
pub fn coproduct_prime(
    h: &PartitionedGraph,
    a: &FiniteSet,
    b: &FiniteSet,
) -> Result<LinComb<Tensor2<PartitionedGraph, PartitionedGraph>>> {
    coproduct_prime_with(h, a, b, Rules::STANDARD)
}

pub fn coproduct_prime_with(
    h: &PartitionedGraph,
    a: &FiniteSet,
    b: &FiniteSet,
    rules: Rules,
) -> Result<LinComb<Tensor2<PartitionedGraph, PartitionedGraph>>> {
    check_cover(&h.ground(), a, b)?;
    if rules.block_filter && !h.partition().splits_along(a) {
        return Ok(LinComb::zero());
    }
    Ok(LinComb::basis(Tensor2(
        trace_on(h.graph(), a),
        trace_on(h.graph(), b),
    )))
}

/// Intersects every vertex block with `side`, keeping edges between surviving
/// pieces. Agrees with the induced subgraph when no block straddles `side`.
fn trace_on(g: &Graph, side: &FiniteSet) -> PartitionedGraph {
    let piece = |v: &Label| -> Option<Label> {
        let atoms: FiniteSet = v.atom_labels().filter(|x| side.contains(x)).collect();
        (!atoms.is_empty()).then(|| Label::merge(atoms.iter()))
    };
    let vertices: FiniteSet = g.vertices().iter().filter_map(piece).collect();
    let edges: Vec<(Label, Label)> = g
        .edges()
        .filter_map(|(u, v)| Some((piece(u)?, piece(v)?)))
        .collect();
    PartitionedGraph(Graph::new(vertices, edges).expect("pieces of distinct blocks are distinct"))
}

/// `δ′(H) = Σ_{∼ ∈ E_c[H]} H/∼ ⊗ H|∼`, with both legs partitioned graphs on the ground of `H`.
pub fn delta_prime(h: &PartitionedGraph) -> LinComb<Tensor2<PartitionedGraph, PartitionedGraph>> {
    delta_prime_with(h, Rules::STANDARD)
}

pub fn delta_prime_with(
    h: &PartitionedGraph,
    rules: Rules,
) -> LinComb<Tensor2<PartitionedGraph, PartitionedGraph>> {
    delta_full_with(h.graph(), rules)
        .map_basis(|Tensor2(q, r)| Tensor2(q.clone(), PartitionedGraph(r.clone())))
}

/// `ε_δ` on partitioned graphs.
pub fn counit_prime(h: &PartitionedGraph) -> Rational {
    counit_eps_delta(h.graph())
}

/// `ρ_{X,Y}(G ⊗ H) = m_{1,3,24}∘(δ⊗δ)(G ⊗ H) = Σ G′ ⊗ H′ ⊗ G″H″`.
pub fn coaction_rho(
    g: &Graph,
    h: &Graph,
) -> Result<LinComb<Tensor3<PartitionedGraph, PartitionedGraph, Graph>>> {
    if !g.vertices().is_disjoint(h.vertices()) {
        return Err(Error::Overlap(format!(
            "{} and {} intersect",
            g.vertices(),
            h.vertices()
        )));
    }
    delta_full(g).try_bilinear(&delta_full(h), |Tensor2(g1, g2), Tensor2(h1, h2)| {
        Ok(LinComb::basis(Tensor3(g1.clone(), h1.clone(), product(g2, h2)?)))
    })
}

/// Linear extension of [`coaction_rho`] to combinations of tensors.
pub fn coaction_rho_lc(
    a: &LinComb<Tensor2<Graph, Graph>>,
) -> Result<LinComb<Tensor3<PartitionedGraph, PartitionedGraph, Graph>>> {
    a.try_map(|Tensor2(g, h)| coaction_rho(g, h))
}

/// `(δ_∼X ⊗ δ_∼Y)` followed by `(m⊗m)∘(Id⊗c⊗Id)`: the right side of the
/// product compatibility. With `split_filter` off the restricted relations are
/// used even when `∼` does not split.
pub fn split_delta_product(
    g: &Graph,
    h: &Graph,
    p: &SetPartition,
    rules: Rules,
) -> Result<LinComb<Tensor2<Graph, Graph>>> {
    if rules.split_filter && !p.splits_along(g.vertices()) {
        return Ok(LinComb::zero());
    }
    let px = p.restrict(g.vertices())?;
    let py = p.restrict(h.vertices())?;
    let dg = extraction_contraction_with(g, &px, rules)?;
    let dh = extraction_contraction_with(h, &py, rules)?;
    dg.try_bilinear(&dh, |Tensor2(g1, g2), Tensor2(h1, h2)| {
        Ok(tensor_product(
            &LinComb::basis(product(g1, h1)?),
            &LinComb::basis(product(g2, h2)?),
        ))
    })
}
