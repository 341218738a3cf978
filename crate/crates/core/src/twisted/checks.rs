//! Exhaustive axiom checkers for the graph structures.
//!
//! Each checker enumerates every basis element and every relevant partition or
//! split at the given size and compares both sides exactly. Sizes above
//! [`MAX_CHECK_SIZE`] are refused rather than sampled.

use std::fmt;

use crate::algebra::{integer, LinComb, Tensor2, Tensor3};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::partitions::{enumerate_partitions, FiniteSet, Label, SetPartition};

use super::{
    coaction_rho, coproduct_prime_with, coproduct_split, counit_eps_delta_with, delta_full_with,
    delta_prime_with, extraction_contraction_with, product, product_prime, split_delta_product,
    PartitionedGraph, Rules,
};

/// Largest ground set accepted by the exhaustive checkers.
pub const MAX_CHECK_SIZE: usize = 4;

/// Outcome of one exhaustive check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub axiom: String,
    pub x: String,
    pub y: String,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} X={} Y={} cases={} {}",
            self.axiom,
            self.x,
            self.y,
            self.cases,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, " counterexample: {c}")?;
        }
        Ok(())
    }
}

/// Accumulates cases, remembering the first failure.
#[derive(Default)]
pub(crate) struct Tally {
    cases: usize,
    counterexample: Option<String>,
}

impl Tally {
    pub(crate) fn record<T: PartialEq + fmt::Display>(
        &mut self,
        lhs: &T,
        rhs: &T,
        context: impl FnOnce() -> String,
    ) {
        self.cases += 1;
        if self.counterexample.is_none() && lhs != rhs {
            self.counterexample = Some(format!("{}: lhs = {lhs}, rhs = {rhs}", context()));
        }
    }

    pub(crate) fn report(self, axiom: &str, x: &FiniteSet, y: Option<&FiniteSet>) -> CheckReport {
        CheckReport {
            axiom: axiom.to_string(),
            x: x.to_string(),
            y: y.map_or_else(|| "-".to_string(), |s| s.to_string()),
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

pub(crate) fn ensure_size(size: usize) -> Result<()> {
    if size > MAX_CHECK_SIZE {
        return Err(Error::BoundExceeded {
            size,
            bound: MAX_CHECK_SIZE,
        });
    }
    Ok(())
}

/// Every graph with vertex set `x`, in order of edge bitmask.
pub fn all_graphs(x: &FiniteSet) -> Vec<Graph> {
    let labels: Vec<&Label> = x.iter().collect();
    let pairs: Vec<(Label, Label)> = (0..labels.len())
        .flat_map(|i| (i + 1..labels.len()).map(move |j| (i, j)))
        .map(|(i, j)| (labels[i].clone(), labels[j].clone()))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, e)| e.clone());
            Graph::new(x.clone(), edges).expect("pairs of distinct vertices")
        })
        .collect()
}

/// Every partitioned graph with ground set `x`.
pub fn all_partitioned_graphs(x: &FiniteSet) -> Vec<PartitionedGraph> {
    enumerate_partitions(x)
        .iter()
        .flat_map(|p| all_graphs(&p.quotient_set()))
        .map(|g| PartitionedGraph::new(g).expect("quotient labels are disjoint"))
        .collect()
}

fn check_disjoint(x: &FiniteSet, y: &FiniteSet) -> Result<()> {
    if !x.is_disjoint(y) {
        return Err(Error::Overlap(format!("{x} and {y} intersect")));
    }
    Ok(())
}

type Triple = LinComb<Tensor3<Graph, Graph, Graph>>;

/// `(δ_∼⊗Id)∘δ_∼′ = (Id⊗δ_∼′)∘δ_∼` whenever `∼ ≤ ∼′`, and
/// `(Id⊗δ_∼′)∘δ_∼ = 0` otherwise.
pub fn check_coassociativity_delta(x: &FiniteSet, rules: Rules) -> Result<CheckReport> {
    ensure_size(x.len())?;
    let partitions = enumerate_partitions(x);
    let mut tally = Tally::default();
    for g in all_graphs(x) {
        for coarse in &partitions {
            let right_first = extraction_contraction_with(&g, coarse, rules)?;
            for fine in &partitions {
                let rhs: Triple = right_first.try_map(|Tensor2(q, r)| {
                    Ok::<_, Error>(
                        extraction_contraction_with(r, fine, rules)?
                            .map_basis(|Tensor2(s, t)| Tensor3(q.clone(), s.clone(), t.clone())),
                    )
                })?;
                let lhs: Triple = if coarse.refines(fine)? {
                    let induced = fine.project(coarse)?;
                    extraction_contraction_with(&g, fine, rules)?.try_map(|Tensor2(q, r)| {
                        Ok::<_, Error>(
                            extraction_contraction_with(q, &induced, rules)?
                                .map_basis(|Tensor2(s, t)| Tensor3(s.clone(), t.clone(), r.clone())),
                        )
                    })?
                } else {
                    LinComb::zero()
                };
                tally.record(&lhs, &rhs, || format!("G={g}, ∼={coarse}, ∼′={fine}"));
            }
        }
    }
    Ok(tally.report("delta-coassociativity", x, None))
}

/// `(Id⊗ε_δ)∘δ_∼ = [∼ discrete]·Id` and `Σ_∼ (ε_δ⊗Id)∘δ_∼ = Id`.
pub fn check_counit(x: &FiniteSet, rules: Rules) -> Result<CheckReport> {
    ensure_size(x.len())?;
    let partitions = enumerate_partitions(x);
    let mut tally = Tally::default();
    for g in all_graphs(x) {
        let mut left_sum = LinComb::zero();
        for p in &partitions {
            let d = extraction_contraction_with(&g, p, rules)?;
            let right = d.map(|Tensor2(q, r)| LinComb::term(q.clone(), counit_eps_delta_with(r, rules)));
            let expected = if p.is_discrete() {
                LinComb::basis(g.clone())
            } else {
                LinComb::zero()
            };
            tally.record(&right, &expected, || format!("(Id⊗ε)δ_∼ at G={g}, ∼={p}"));
            left_sum += d.map(|Tensor2(q, r)| LinComb::term(r.clone(), counit_eps_delta_with(q, rules)));
        }
        tally.record(&left_sum, &LinComb::basis(g.clone()), || format!("Σ(ε⊗Id)δ_∼ at G={g}"));
    }
    Ok(tally.report("delta-counit", x, None))
}

/// `δ_∼(GH) = (m⊗m)∘(Id⊗c⊗Id)∘(δ_∼X⊗δ_∼Y)(G⊗H)` if `∼ = ∼_X⊔∼_Y`, else `0`.
pub fn check_product_compat(x: &FiniteSet, y: &FiniteSet, rules: Rules) -> Result<CheckReport> {
    check_disjoint(x, y)?;
    let xy = x.union(y);
    ensure_size(xy.len())?;
    let partitions = enumerate_partitions(&xy);
    let gs = all_graphs(x);
    let hs = all_graphs(y);
    let mut tally = Tally::default();
    for g in &gs {
        for h in &hs {
            let gh = product(g, h)?;
            for p in &partitions {
                let lhs = extraction_contraction_with(&gh, p, rules)?;
                let rhs = split_delta_product(g, h, p, rules)?;
                tally.record(&lhs, &rhs, || format!("G={g}, H={h}, ∼={p}"));
            }
        }
    }
    Ok(tally.report("delta-product", x, Some(y)))
}

/// `(Δ_{X/∼X,Y/∼Y}⊗Id)∘δ_∼ = m_{1,3,24}∘(δ_∼X⊗δ_∼Y)∘Δ_{X,Y}` for `∼ = ∼_X⊔∼_Y`,
/// together with its summed form `ρ_{X,Y}∘Δ_{X,Y} = (Δ′_{X,Y}⊗Id)∘δ`.
pub fn check_coproduct_compat(x: &FiniteSet, y: &FiniteSet, rules: Rules) -> Result<CheckReport> {
    check_disjoint(x, y)?;
    let xy = x.union(y);
    ensure_size(xy.len())?;
    let px = enumerate_partitions(x);
    let py = enumerate_partitions(y);
    let mut tally = Tally::default();
    for k in all_graphs(&xy) {
        let split = coproduct_split(&k, x, y)?;
        for sx in &px {
            for sy in &py {
                let sim = sx.disjoint_union(sy)?;
                let lhs: Triple = extraction_contraction_with(&k, &sim, rules)?.try_map(|Tensor2(q, r)| {
                    Ok::<_, Error>(
                        coproduct_split(q, &sx.quotient_set(), &sy.quotient_set())?
                            .map_basis(|Tensor2(a, b)| Tensor3(a.clone(), b.clone(), r.clone())),
                    )
                })?;
                let rhs: Triple = split.try_map(|Tensor2(kx, ky)| {
                    extraction_contraction_with(kx, sx, rules)?.try_bilinear(
                        &extraction_contraction_with(ky, sy, rules)?,
                        |Tensor2(a1, a2), Tensor2(b1, b2)| {
                            Ok::<_, Error>(LinComb::basis(Tensor3(
                                a1.clone(),
                                b1.clone(),
                                product(a2, b2)?,
                            )))
                        },
                    )
                })?;
                tally.record(&lhs, &rhs, || format!("G={k}, ∼X={sx}, ∼Y={sy}"));
            }
        }
        let summed_lhs = split.try_map(|Tensor2(kx, ky)| coaction_rho(kx, ky))?;
        let summed_rhs = delta_full_with(&k, rules).try_map(|Tensor2(q, r)| {
            Ok::<_, Error>(
                coproduct_prime_with(q, x, y, rules)?
                    .map_basis(|Tensor2(a, b)| Tensor3(a.clone(), b.clone(), r.clone())),
            )
        })?;
        tally.record(&summed_lhs, &summed_rhs, || format!("ρ∘Δ at G={k}"));
    }
    Ok(tally.report("delta-coproduct", x, Some(y)))
}

/// `(G, m, Δ)`: Δ coassociative and cocommutative, and `Δ_{I,J}(GH) = Δ(G)Δ(H)`.
pub fn check_graph_bialgebra(x: &FiniteSet, y: &FiniteSet) -> Result<CheckReport> {
    check_disjoint(x, y)?;
    let xy = x.union(y);
    ensure_size(xy.len())?;
    let mut tally = Tally::default();
    for g in all_graphs(&xy) {
        for a in xy.subsets() {
            let rest = xy.difference(&a);
            for b in rest.subsets() {
                let c = rest.difference(&b);
                let ab = a.union(&b);
                let lhs: Triple = coproduct_split(&g, &ab, &c)?.try_map(|Tensor2(p, q)| {
                    Ok::<_, Error>(
                        coproduct_split(p, &a, &b)?
                            .map_basis(|Tensor2(s, t)| Tensor3(s.clone(), t.clone(), q.clone())),
                    )
                })?;
                let rhs: Triple = coproduct_split(&g, &a, &rest)?.try_map(|Tensor2(p, q)| {
                    Ok::<_, Error>(
                        coproduct_split(q, &b, &c)?
                            .map_basis(|Tensor2(s, t)| Tensor3(p.clone(), s.clone(), t.clone())),
                    )
                })?;
                tally.record(&lhs, &rhs, || format!("Δ coassociativity at G={g}, {a}|{b}|{c}"));
            }
            let forward = coproduct_split(&g, &a, &rest)?;
            let backward = coproduct_split(&g, &rest, &a)?.map_basis(|t| t.clone().flip());
            tally.record(&forward, &backward, || format!("Δ cocommutativity at G={g}, A={a}"));
        }
    }
    for g in all_graphs(x) {
        for h in all_graphs(y) {
            let gh = product(&g, &h)?;
            for i in xy.subsets() {
                let j = xy.difference(&i);
                let lhs = coproduct_split(&gh, &i, &j)?;
                let dg = coproduct_split(&g, &x.intersection(&i), &x.intersection(&j))?;
                let dh = coproduct_split(&h, &y.intersection(&i), &y.intersection(&j))?;
                let rhs = dg.try_bilinear(&dh, |Tensor2(g1, g2), Tensor2(h1, h2)| {
                    Ok::<_, Error>(LinComb::basis(Tensor2(product(g1, h1)?, product(g2, h2)?)))
                })?;
                tally.record(&lhs, &rhs, || format!("Δ∘m at G={g}, H={h}, I={i}"));
            }
        }
    }
    Ok(tally.report("graph-bialgebra", x, Some(y)))
}

type PTriple = LinComb<Tensor3<PartitionedGraph, PartitionedGraph, PartitionedGraph>>;

/// `δ′` is coassociative with counit `ε_δ` on partitioned graphs over `x`.
pub fn check_prime_coalgebra(x: &FiniteSet, rules: Rules) -> Result<CheckReport> {
    ensure_size(x.len())?;
    let mut tally = Tally::default();
    for h in all_partitioned_graphs(x) {
        let d = delta_prime_with(&h, rules);
        let lhs: PTriple = d.map(|Tensor2(p, q)| {
            delta_prime_with(p, rules).map_basis(|Tensor2(s, t)| Tensor3(s.clone(), t.clone(), q.clone()))
        });
        let rhs: PTriple = d.map(|Tensor2(p, q)| {
            delta_prime_with(q, rules).map_basis(|Tensor2(s, t)| Tensor3(p.clone(), s.clone(), t.clone()))
        });
        tally.record(&lhs, &rhs, || format!("δ′ coassociativity at H={h}"));
        let id = LinComb::basis(h.clone());
        let left = d.map(|Tensor2(p, q)| LinComb::term(q.clone(), counit_eps_delta_with(p.graph(), rules)));
        let right = d.map(|Tensor2(p, q)| LinComb::term(p.clone(), counit_eps_delta_with(q.graph(), rules)));
        tally.record(&left, &id, || format!("(ε⊗Id)δ′ at H={h}"));
        tally.record(&right, &id, || format!("(Id⊗ε)δ′ at H={h}"));
    }
    Ok(tally.report("delta-prime-coalgebra", x, None))
}

/// `(Δ′_{A,B}⊗Id)∘δ′ = m_{1,3,24}∘(δ′⊗δ′)∘Δ′_{A,B}` and
/// `δ′(m′(H⊗K)) = δ′(H)δ′(K)` on partitioned graphs over `x`.
pub fn check_prime_double(x: &FiniteSet, rules: Rules) -> Result<CheckReport> {
    ensure_size(x.len())?;
    let mut tally = Tally::default();
    let mul = |a: &PartitionedGraph, b: &PartitionedGraph| product_prime(a, b);
    for h in all_partitioned_graphs(x) {
        let d = delta_prime_with(&h, rules);
        for a in x.subsets() {
            let b = x.difference(&a);
            let lhs: PTriple = d.try_map(|Tensor2(p, q)| {
                Ok::<_, Error>(
                    coproduct_prime_with(p, &a, &b, rules)?
                        .map_basis(|Tensor2(s, t)| Tensor3(s.clone(), t.clone(), q.clone())),
                )
            })?;
            let rhs: PTriple = coproduct_prime_with(&h, &a, &b, rules)?.try_map(|Tensor2(ha, hb)| {
                delta_prime_with(ha, rules).try_bilinear(
                    &delta_prime_with(hb, rules),
                    |Tensor2(a1, a2), Tensor2(b1, b2)| {
                        Ok::<_, Error>(LinComb::basis(Tensor3(a1.clone(), b1.clone(), mul(a2, b2)?)))
                    },
                )
            })?;
            tally.record(&lhs, &rhs, || format!("H={h}, A={a}, B={b}"));
        }
    }
    for a in x.subsets() {
        let b = x.difference(&a);
        for h in all_partitioned_graphs(&a) {
            for k in all_partitioned_graphs(&b) {
                let lhs = delta_prime_with(&mul(&h, &k)?, rules);
                let rhs = delta_prime_with(&h, rules).try_bilinear(
                    &delta_prime_with(&k, rules),
                    |Tensor2(h1, h2), Tensor2(k1, k2)| {
                        Ok::<_, Error>(LinComb::basis(Tensor2(mul(h1, k1)?, mul(h2, k2)?)))
                    },
                )?;
                tally.record(&lhs, &rhs, || format!("δ′∘m′ at H={h}, K={k}"));
            }
        }
    }
    Ok(tally.report("delta-prime-double", x, None))
}

/// `ε_δ(GH) = ε_δ(G)ε_δ(H)` and `ε_δ(1) = 1`.
pub fn check_counit_multiplicative(x: &FiniteSet, y: &FiniteSet) -> Result<CheckReport> {
    check_disjoint(x, y)?;
    ensure_size(x.len() + y.len())?;
    let mut tally = Tally::default();
    let eps = |g: &Graph| counit_eps_delta_with(g, Rules::STANDARD);
    tally.record(&eps(&Graph::empty()), &integer(1), || "ε_δ(1)".to_string());
    for g in all_graphs(x) {
        for h in all_graphs(y) {
            let lhs = eps(&product(&g, &h)?);
            let rhs = eps(&g) * eps(&h);
            tally.record(&lhs, &rhs, || format!("G={g}, H={h}"));
        }
    }
    Ok(tally.report("counit-multiplicative", x, Some(y)))
}

/// Helper for callers enumerating `(X, Y)` pairs: all splits of the first `n`
/// letters of `a, b, c, d` into two sides.
pub fn standard_splits(n: usize) -> Vec<(FiniteSet, FiniteSet)> {
    let ground = standard_ground(n);
    ground
        .subsets()
        .into_iter()
        .map(|a| {
            let b = ground.difference(&a);
            (a, b)
        })
        .collect()
}

/// `{a, b, c, ...}` with `n` elements.
pub fn standard_ground(n: usize) -> FiniteSet {
    (0..n)
        .map(|i| Label::atom(&((b'a' + i as u8) as char).to_string()).expect("letter"))
        .collect()
}

/// Partitions of the quotient are in bijection with coarsenings; used in tests.
pub fn coarsenings_via_quotient(p: &SetPartition) -> Vec<SetPartition> {
    enumerate_partitions(&p.quotient_set())
        .iter()
        .map(|q| p.lift(q).expect("partition of the quotient"))
        .collect()
}
