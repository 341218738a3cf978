//! Simple graphs on label sets: induced subgraphs, edge restriction `G|∼`,
//! contraction `G/∼`, connected partitions and canonical labelling.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monoid::Monomial;
use crate::partitions::{enumerate_partitions, FiniteSet, Label, SetPartition};

/// Default maximal vertex count for canonical labelling.
pub const DEFAULT_CANON_BOUND: usize = 8;

/// Vertex decorations by basis elements of `V`.
pub type DecorationMap = BTreeMap<Label, Monomial>;

/// A simple undirected graph. Edges are stored as `(u, v)` with `u < v`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Graph {
    vertices: FiniteSet,
    edges: BTreeSet<(Label, Label)>,
}

fn ordered(a: Label, b: Label) -> (Label, Label) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Graph {
    /// The empty graph, unit of the disjoint-union product.
    pub fn empty() -> Graph {
        Graph {
            vertices: FiniteSet::empty(),
            edges: BTreeSet::new(),
        }
    }

    pub fn new<I>(vertices: FiniteSet, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Label, Label)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at {a}")));
            }
            for v in [&a, &b] {
                if !vertices.contains(v) {
                    return Err(Error::InvalidGraph(format!("edge endpoint {v} is not a vertex")));
                }
            }
            if !set.insert(ordered(a, b)) {
                return Err(Error::InvalidGraph("duplicate edge".into()));
            }
        }
        Ok(Graph { vertices, edges: set })
    }

    /// Convenience constructor; each name may be an atom or a block label.
    pub fn from_names(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Graph> {
        let vs = vertices
            .iter()
            .map(|v| Label::new(v))
            .collect::<Result<FiniteSet>>()?;
        let es = edges
            .iter()
            .map(|(a, b)| Ok((Label::new(a)?, Label::new(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Graph::new(vs, es)
    }

    pub fn edgeless(vertices: FiniteSet) -> Graph {
        Graph {
            vertices,
            edges: BTreeSet::new(),
        }
    }

    pub fn vertices(&self) -> &FiniteSet {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = &(Label, Label)> {
        self.edges.iter()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: &Label, b: &Label) -> bool {
        self.edges.contains(&ordered(a.clone(), b.clone()))
    }

    fn require_ground(&self, p: &SetPartition) -> Result<()> {
        if p.ground() != &self.vertices {
            return Err(Error::GroundMismatch {
                left: p.ground().to_string(),
                right: self.vertices.to_string(),
            });
        }
        Ok(())
    }

    /// `G|_A`.
    pub fn induced_subgraph(&self, subset: &FiniteSet) -> Result<Graph> {
        if !subset.is_subset(&self.vertices) {
            return Err(Error::NotSubset {
                subset: subset.to_string(),
                ground: self.vertices.to_string(),
            });
        }
        let edges = self
            .edges
            .iter()
            .filter(|(a, b)| subset.contains(a) && subset.contains(b))
            .cloned()
            .collect();
        Ok(Graph {
            vertices: subset.clone(),
            edges,
        })
    }

    /// `G|∼`: same vertices, only the edges inside a block.
    pub fn restrict_edges(&self, p: &SetPartition) -> Result<Graph> {
        self.require_ground(p)?;
        let edges = self
            .edges
            .iter()
            .filter(|(a, b)| p.block_of(a) == p.block_of(b))
            .cloned()
            .collect();
        Ok(Graph {
            vertices: self.vertices.clone(),
            edges,
        })
    }

    /// `G/∼`: blocks become vertices labelled by their merged labels; loops and
    /// parallel edges disappear.
    pub fn contract(&self, p: &SetPartition) -> Result<Graph> {
        self.require_ground(p)?;
        let names: Vec<Label> = p.blocks().iter().map(|b| Label::merge(b.iter())).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|(a, b)| {
                let (i, j) = (p.block_of(a)?, p.block_of(b)?);
                (i != j).then(|| ordered(names[i].clone(), names[j].clone()))
            })
            .collect();
        Ok(Graph {
            vertices: names.into_iter().collect(),
            edges,
        })
    }

    /// Disjoint union `GH`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        if !self.vertices.atoms().is_disjoint(&other.vertices.atoms()) {
            return Err(Error::Overlap(format!(
                "{} and {} share labels",
                self.vertices, other.vertices
            )));
        }
        Ok(Graph {
            vertices: self.vertices.union(&other.vertices),
            edges: self.edges.union(&other.edges).cloned().collect(),
        })
    }

    fn neighbours(&self) -> BTreeMap<&Label, Vec<&Label>> {
        let mut adj: BTreeMap<&Label, Vec<&Label>> =
            self.vertices.iter().map(|v| (v, Vec::new())).collect();
        for (a, b) in &self.edges {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        adj
    }

    /// The partition into connected components.
    pub fn connected_components(&self) -> SetPartition {
        let adj = self.neighbours();
        let mut seen: BTreeSet<&Label> = BTreeSet::new();
        let mut blocks = Vec::new();
        for start in self.vertices.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut block = FiniteSet::empty();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                block.insert(v.clone());
                for &w in &adj[v] {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            blocks.push(block);
        }
        SetPartition::new(self.vertices.clone(), blocks).expect("components cover the vertex set")
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().num_blocks() <= 1
    }

    /// Whether every block of `p` induces a connected subgraph.
    pub fn is_connected_partition(&self, p: &SetPartition) -> Result<bool> {
        self.require_ground(p)?;
        for block in p.blocks() {
            if !self.induced_subgraph(block)?.is_connected() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `E_c[G]`, in the enumeration order of [`enumerate_partitions`].
    pub fn connected_partitions(&self) -> Vec<SetPartition> {
        enumerate_partitions(&self.vertices)
            .into_iter()
            .filter(|p| self.is_connected_partition(p).unwrap_or(false))
            .collect()
    }

    /// Index-based adjacency matrix in the sorted vertex order.
    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let idx: BTreeMap<&Label, usize> =
            self.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let n = self.vertices.len();
        let mut adj = vec![vec![false; n]; n];
        for (a, b) in &self.edges {
            let (i, j) = (idx[a], idx[b]);
            adj[i][j] = true;
            adj[j][i] = true;
        }
        adj
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vertices.is_empty() {
            return f.write_str("1");
        }
        f.write_str("G[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        if !self.edges.is_empty() {
            f.write_str(" |")?;
            for (a, b) in &self.edges {
                write!(f, " {a}-{b}")?;
            }
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical labelling of a vertex-decorated graph given by an adjacency matrix.
///
/// Returns `order` such that position `i` of the canonical form is original
/// vertex `order[i]`. The canonical form is the lexicographically least
/// sequence of keys `(decoration, adjacency to earlier positions)` over all
/// orderings, so two inputs share it iff they are isomorphic preserving
/// decorations.
pub fn canonical_order(decorations: &[Monomial], adj: &[Vec<bool>], bound: usize) -> Result<Vec<usize>> {
    let n = decorations.len();
    if n > bound {
        return Err(Error::BoundExceeded { size: n, bound });
    }
    let mut search = Search {
        decorations,
        adj,
        best: None,
        current: Vec::with_capacity(n),
        keys: Vec::with_capacity(n),
        used: vec![false; n],
    };
    search.run();
    Ok(search.best.map(|(order, _)| order).unwrap_or_default())
}

type Key<'a> = (&'a Monomial, Vec<bool>);

struct Search<'a> {
    decorations: &'a [Monomial],
    adj: &'a [Vec<bool>],
    best: Option<(Vec<usize>, Vec<Key<'a>>)>,
    current: Vec<usize>,
    keys: Vec<Key<'a>>,
    used: Vec<bool>,
}

impl<'a> Search<'a> {
    fn key(&self, v: usize) -> Key<'a> {
        let bits = self.current.iter().map(|&u| self.adj[v][u]).collect();
        (&self.decorations[v], bits)
    }

    fn run(&mut self) {
        let depth = self.current.len();
        let n = self.decorations.len();
        if depth == n {
            let better = match &self.best {
                None => true,
                Some((_, keys)) => self.keys < *keys,
            };
            if better {
                self.best = Some((self.current.clone(), self.keys.clone()));
            }
            return;
        }
        // The least code must place a minimal key at every position.
        let candidates: Vec<(usize, Key<'a>)> = (0..n)
            .filter(|&v| !self.used[v])
            .map(|v| (v, self.key(v)))
            .collect();
        let min = candidates.iter().map(|(_, k)| k).min().cloned();
        let Some(min) = min else { return };
        if let Some((_, best)) = &self.best {
            if self.keys[..] == best[..depth] && min > best[depth] {
                return;
            }
        }
        for (v, k) in candidates {
            if k != min {
                continue;
            }
            self.used[v] = true;
            self.current.push(v);
            self.keys.push(k);
            self.run();
            self.keys.pop();
            self.current.pop();
            self.used[v] = false;
        }
    }
}

/// Canonical form of a labelled, optionally decorated graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Decoration of canonical vertex `i` (unit when undecorated).
    pub decorations: Vec<Monomial>,
    /// Edges `(i, j)` with `i < j` on canonical positions `0..n`.
    pub edges: BTreeSet<(usize, usize)>,
    /// `relabeling[i]` is the original label placed at position `i`.
    pub relabeling: Vec<Label>,
}

/// Canonical representative of the isomorphism class of `(G, d)`.
pub fn canonical_form(
    graph: &Graph,
    decorations: Option<&DecorationMap>,
    bound: usize,
) -> Result<CanonicalForm> {
    let labels: Vec<&Label> = graph.vertices().iter().collect();
    let decos = labels
        .iter()
        .map(|v| match decorations {
            None => Ok(Monomial::unit()),
            Some(d) => d
                .get(*v)
                .cloned()
                .ok_or_else(|| Error::InvalidDecoration(format!("vertex {v} has no decoration"))),
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(d) = decorations {
        if d.len() != labels.len() {
            return Err(Error::InvalidDecoration(
                "decorations must be keyed exactly by the vertices".into(),
            ));
        }
    }
    let adj = graph.adjacency();
    let order = canonical_order(&decos, &adj, bound)?;
    let mut position = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut edges = BTreeSet::new();
    for (i, row) in adj.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            if e && i < j {
                let (a, b) = (position[i], position[j]);
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    Ok(CanonicalForm {
        decorations: order.iter().map(|&v| decos[v].clone()).collect(),
        edges,
        relabeling: order.iter().map(|&v| labels[v].clone()).collect(),
    })
}
