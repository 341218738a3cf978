//! Set compositions with the quasishuffle product, deconcatenation and the
//! interval-fusion coproduct `δ`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{integer, LinComb, Rational, Tensor2, Tensor3};
use crate::error::{parse_err, Error, Result};
use crate::partitions::{enumerate_partitions, FiniteSet, Label};
use crate::twisted::checks::{ensure_size, standard_ground, CheckReport, Tally};

/// An ordered sequence of nonempty, pairwise disjoint blocks.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SetComposition(Vec<FiniteSet>);

pub type CompLC = LinComb<SetComposition>;
pub type CompPairLC = LinComb<Tensor2<SetComposition, SetComposition>>;

impl SetComposition {
    pub fn new(blocks: Vec<FiniteSet>) -> Result<SetComposition> {
        let mut seen = FiniteSet::empty();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidGraph("empty block in set composition".into()));
            }
            if !b.is_disjoint(&seen) {
                return Err(Error::Overlap(format!("block {b} repeats an element")));
            }
            seen = seen.union(b);
        }
        Ok(SetComposition(blocks))
    }

    /// The empty composition, unit of `⧢`.
    pub fn empty() -> SetComposition {
        SetComposition(Vec::new())
    }

    pub fn blocks(&self) -> &[FiniteSet] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ground(&self) -> FiniteSet {
        self.0.iter().fold(FiniteSet::empty(), |acc, b| acc.union(b))
    }

    /// `C|_Y`: intersect every block with `Y` and drop the empty ones.
    pub fn restrict(&self, subset: &FiniteSet) -> Result<SetComposition> {
        let ground = self.ground();
        if !subset.is_subset(&ground) {
            return Err(Error::NotSubset {
                subset: subset.to_string(),
                ground: ground.to_string(),
            });
        }
        Ok(self.restrict_unchecked(subset))
    }

    fn restrict_unchecked(&self, subset: &FiniteSet) -> SetComposition {
        SetComposition(
            self.0
                .iter()
                .map(|b| b.intersection(subset))
                .filter(|b| !b.is_empty())
                .collect(),
        )
    }

    /// Concatenation `(X_1,…,X_k)·(Y_1,…,Y_l)`; grounds must be disjoint.
    pub fn concat(&self, other: &SetComposition) -> Result<SetComposition> {
        let mut blocks = self.0.clone();
        blocks.extend(other.0.iter().cloned());
        SetComposition::new(blocks)
    }

    /// Parses `({a,b},{c})`; `()` is the empty composition.
    pub fn parse(text: &str) -> Result<SetComposition> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| parse_err(0, "composition must be enclosed in parentheses"))?;
        // `inner` is followed by the closing parenthesis, so offsets come from suffix lengths.
        let pos = |rest: &str| t.len() - 1 - rest.len();
        let mut blocks = Vec::new();
        let mut rest = inner.trim_start();
        while !rest.is_empty() {
            if !rest.starts_with('{') {
                return Err(parse_err(pos(rest), "expected '{'"));
            }
            let close = rest
                .find('}')
                .ok_or_else(|| parse_err(pos(rest), "unterminated block"))?;
            let block = FiniteSet::parse(&rest[1..close]).map_err(|e| parse_err(pos(rest), e.to_string()))?;
            if block.is_empty() {
                return Err(parse_err(pos(rest), "empty block"));
            }
            blocks.push(block);
            rest = rest[close + 1..].trim_start();
            if let Some(r) = rest.strip_prefix(',') {
                rest = r.trim_start();
                if rest.is_empty() {
                    return Err(parse_err(pos(rest), "trailing comma"));
                }
            } else if !rest.is_empty() {
                return Err(parse_err(pos(rest), "expected ',' between blocks"));
            }
        }
        SetComposition::new(blocks).map_err(|e| parse_err(0, e.to_string()))
    }
}

impl fmt::Display for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

/// Every set composition of `ground` (ordered set partitions; Fubini many).
pub fn all_compositions(ground: &FiniteSet) -> Vec<SetComposition> {
    let mut out: Vec<SetComposition> = enumerate_partitions(ground)
        .iter()
        .flat_map(|p| permutations(p.blocks()))
        .map(SetComposition)
        .collect();
    out.sort();
    out
}

fn check_disjoint(a: &FiniteSet, b: &FiniteSet) -> Result<()> {
    if !a.is_disjoint(b) {
        return Err(Error::Overlap(format!("{a} and {b} intersect")));
    }
    Ok(())
}

/// `C1 ⧢ C2`: at each step take the next block of `C1`, of `C2`, or their union.
pub fn quasishuffle_comp(c1: &SetComposition, c2: &SetComposition) -> Result<CompLC> {
    check_disjoint(&c1.ground(), &c2.ground())?;
    let mut out = Vec::new();
    qsh_blocks(&c1.0, &c2.0, &mut Vec::new(), &mut out);
    Ok(out.into_iter().map(|c| (SetComposition(c), integer(1))).collect())
}

fn qsh_blocks(u: &[FiniteSet], v: &[FiniteSet], prefix: &mut Vec<FiniteSet>, out: &mut Vec<Vec<FiniteSet>>) {
    match (u.split_first(), v.split_first()) {
        (None, _) | (_, None) => {
            let mut c = prefix.clone();
            c.extend(u.iter().chain(v).cloned());
            out.push(c);
        }
        (Some((u0, ur)), Some((v0, vr))) => {
            for (block, ru, rv) in [(u0.clone(), ur, v), (v0.clone(), u, vr), (u0.union(v0), ur, vr)] {
                prefix.push(block);
                qsh_blocks(ru, rv, prefix, out);
                prefix.pop();
            }
        }
    }
}

/// `C1 ⧢ C2` by brute force: every composition of the union restricting to
/// `C1` and `C2`. Exponentially slower; kept as a cross-check.
pub fn quasishuffle_comp_by_restriction(c1: &SetComposition, c2: &SetComposition) -> Result<CompLC> {
    let (x, y) = (c1.ground(), c2.ground());
    check_disjoint(&x, &y)?;
    Ok(all_compositions(&x.union(&y))
        .into_iter()
        .filter(|c| c.restrict_unchecked(&x) == *c1 && c.restrict_unchecked(&y) == *c2)
        .map(|c| (c, integer(1)))
        .collect())
}

/// Bilinear `⧢`.
pub fn qsh_lc(a: &CompLC, b: &CompLC) -> Result<CompLC> {
    a.try_bilinear(b, quasishuffle_comp)
}

/// `Δ_{A,B}(C)`: the unique cut with `A` as prefix, or `0`.
pub fn deconcat_comp(c: &SetComposition, a: &FiniteSet, b: &FiniteSet) -> Result<CompPairLC> {
    let ground = c.ground();
    if !a.is_disjoint(b) || a.union(b) != ground {
        return Err(Error::NotACover {
            ground: ground.to_string(),
            detail: format!("{a} and {b}"),
        });
    }
    let mut prefix = FiniteSet::empty();
    for i in 0..=c.len() {
        if prefix == *a {
            return Ok(LinComb::basis(Tensor2(
                SetComposition(c.0[..i].to_vec()),
                SetComposition(c.0[i..].to_vec()),
            )));
        }
        if i < c.len() {
            prefix = prefix.union(&c.0[i]);
        }
    }
    Ok(LinComb::zero())
}

/// `Σ_i (X_1,…,X_i) ⊗ (X_{i+1},…,X_k)`, the sum of all `Δ_{A,B}`.
pub fn coproduct_comp(c: &SetComposition) -> CompPairLC {
    (0..=c.len())
        .map(|i| {
            (
                Tensor2(SetComposition(c.0[..i].to_vec()), SetComposition(c.0[i..].to_vec())),
                integer(1),
            )
        })
        .collect()
}

/// Cut sets `1 ≤ i_1 < … < i_p < k` as lists of interval bounds.
pub(crate) fn interval_splits(k: usize) -> Vec<Vec<(usize, usize)>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    (0u64..1 << (k - 1))
        .map(|mask| {
            let mut intervals = Vec::new();
            let mut start = 0;
            for i in 1..k {
                if mask >> (i - 1) & 1 == 1 {
                    intervals.push((start, i));
                    start = i;
                }
            }
            intervals.push((start, k));
            intervals
        })
        .collect()
}

/// `δ(X_1,…,X_k)`: sum over cut sets of the fused intervals ⊗ the `⧢` of the intervals.
pub fn delta_comp(c: &SetComposition) -> CompPairLC {
    let mut out = LinComb::zero();
    for intervals in interval_splits(c.len()) {
        let fused = SetComposition(
            intervals
                .iter()
                .map(|&(s, e)| c.0[s..e].iter().fold(FiniteSet::empty(), |acc, b| acc.union(b)))
                .collect(),
        );
        let mut right = LinComb::basis(SetComposition::empty());
        for &(s, e) in &intervals {
            let piece = LinComb::basis(SetComposition(c.0[s..e].to_vec()));
            right = qsh_lc(&right, &piece).expect("intervals are disjoint");
        }
        out += right.map_basis(|r| Tensor2(fused.clone(), r.clone()));
    }
    out
}

/// `ε_Δ`: 1 on the empty composition only.
pub fn counit_cut_comp(c: &SetComposition) -> Rational {
    integer(i64::from(c.is_empty()))
}

/// `ε_δ`: 1 on one-block compositions and on the empty one, 0 from two blocks on.
pub fn counit_delta_comp(c: &SetComposition) -> Rational {
    integer(i64::from(c.len() <= 1))
}

type CompTriple = LinComb<Tensor3<SetComposition, SetComposition, SetComposition>>;

/// `⧢` associative, commutative and unital on compositions of disjoint parts
/// of `{a,…}` with `n` letters.
pub fn check_comp_algebra(n: usize) -> Result<CheckReport> {
    ensure_size(n)?;
    let x = standard_ground(n);
    let mut tally = Tally::default();
    let one = LinComb::basis(SetComposition::empty());
    for a in x.subsets() {
        let rest = x.difference(&a);
        for b in rest.subsets() {
            let c = rest.difference(&b);
            for ca in all_compositions(&a) {
                let la = LinComb::basis(ca.clone());
                tally.record(&qsh_lc(&la, &one)?, &la, || format!("unit at {ca}"));
                for cb in all_compositions(&b) {
                    let lb = LinComb::basis(cb.clone());
                    let ab = qsh_lc(&la, &lb)?;
                    tally.record(&ab, &qsh_lc(&lb, &la)?, || format!("commutativity at {ca}, {cb}"));
                    for cc in all_compositions(&c) {
                        let lc = LinComb::basis(cc.clone());
                        let lhs = qsh_lc(&ab, &lc)?;
                        let rhs = qsh_lc(&la, &qsh_lc(&lb, &lc)?)?;
                        tally.record(&lhs, &rhs, || format!("associativity at {ca}, {cb}, {cc}"));
                    }
                }
            }
        }
    }
    Ok(tally.report("comp-algebra", &x, None))
}

#[derive(Default)]
struct Interner {
    ids: BTreeMap<SetComposition, usize>,
    items: Vec<SetComposition>,
}

impl Interner {
    fn id(&mut self, c: &SetComposition) -> usize {
        if let Some(&i) = self.ids.get(c) {
            return i;
        }
        self.items.push(c.clone());
        self.ids.insert(c.clone(), self.items.len() - 1);
        self.items.len() - 1
    }
}

/// Both coproducts coassociative and counital on `Comp[X]`, `|X| = n`.
pub fn check_comp_coalgebras(n: usize) -> Result<CheckReport> {
    ensure_size(n)?;
    let x = standard_ground(n);
    let mut tally = Tally::default();
    let comps = all_compositions(&x);
    for (name, cop, eps) in [
        ("Δ", coproduct_comp as fn(&SetComposition) -> CompPairLC, counit_cut_comp as fn(&SetComposition) -> Rational),
        ("δ", delta_comp, counit_delta_comp),
    ] {
        // Compositions are interned so the iterated coproducts are sums of index triples.
        let mut interner = Interner::default();
        let mut cache: BTreeMap<usize, LinComb<Tensor2<usize, usize>>> = BTreeMap::new();
        let mut cop_id = |id: usize, interner: &mut Interner| {
            if let Some(d) = cache.get(&id) {
                return d.clone();
            }
            let d = cop(&interner.items[id].clone())
                .map_basis(|Tensor2(p, q)| Tensor2(interner.id(p), interner.id(q)));
            cache.insert(id, d.clone());
            d
        };
        for c in &comps {
            let top = interner.id(c);
            let d = cop_id(top, &mut interner);
            let mut left = LinComb::zero();
            let mut right = LinComb::zero();
            for (Tensor2(p, q), coeff) in d.iter() {
                for (Tensor2(s, t), e) in cop_id(*p, &mut interner).iter() {
                    left.add_term(Tensor3(*s, *t, *q), coeff * e);
                }
                for (Tensor2(s, t), e) in cop_id(*q, &mut interner).iter() {
                    right.add_term(Tensor3(*p, *s, *t), coeff * e);
                }
            }
            if left == right {
                tally.record(&0, &0, String::new);
            } else {
                let show = |t: &LinComb<Tensor3<usize, usize, usize>>| -> CompTriple {
                    t.map_basis(|Tensor3(a, b, c)| {
                        Tensor3(interner.items[*a].clone(), interner.items[*b].clone(), interner.items[*c].clone())
                    })
                };
                tally.record(&show(&left), &show(&right), || format!("{name} coassociativity at {c}"));
            }
            let d = cop(c);
            let id = LinComb::basis(c.clone());
            let left = d.map(|Tensor2(p, q)| LinComb::term(q.clone(), eps(p)));
            let right = d.map(|Tensor2(p, q)| LinComb::term(p.clone(), eps(q)));
            tally.record(&left, &id, || format!("{name} left counit at {c}"));
            tally.record(&right, &id, || format!("{name} right counit at {c}"));
        }
    }
    Ok(tally.report("comp-coalgebras", &x, None))
}

/// `(Δ_{A,B}⊗Id)∘δ = m_{1,3,24}∘(δ⊗δ)∘Δ_{A,B}`, `Δ` and `δ` multiplicative.
pub fn check_comp_double(n: usize) -> Result<CheckReport> {
    ensure_size(n)?;
    let x = standard_ground(n);
    let mut tally = Tally::default();
    let comps = all_compositions(&x);
    for c in &comps {
        let d = delta_comp(c);
        for a in x.subsets() {
            let b = x.difference(&a);
            let lhs: CompTriple = d.try_map(|Tensor2(p, q)| {
                Ok::<_, Error>(
                    deconcat_comp(p, &a, &b)?
                        .map_basis(|Tensor2(s, t)| Tensor3(s.clone(), t.clone(), q.clone())),
                )
            })?;
            let rhs: CompTriple = deconcat_comp(c, &a, &b)?.try_map(|Tensor2(ca, cb)| {
                delta_comp(ca).try_bilinear(&delta_comp(cb), |Tensor2(a1, a2), Tensor2(b1, b2)| {
                    Ok::<_, Error>(
                        quasishuffle_comp(a2, b2)?
                            .map_basis(|r| Tensor3(a1.clone(), b1.clone(), r.clone())),
                    )
                })
            })?;
            tally.record(&lhs, &rhs, || format!("C={c}, A={a}, B={b}"));
        }
    }
    for a in x.subsets() {
        let b = x.difference(&a);
        for ca in all_compositions(&a) {
            for cb in all_compositions(&b) {
                let prod = quasishuffle_comp(&ca, &cb)?;
                let pair_mul = |u: &CompPairLC, v: &CompPairLC| {
                    u.try_bilinear(v, |Tensor2(u1, u2), Tensor2(v1, v2)| {
                        Ok::<_, Error>(crate::algebra::tensor_product(
                            &quasishuffle_comp(u1, v1)?,
                            &quasishuffle_comp(u2, v2)?,
                        ))
                    })
                };
                let lhs = prod.map(delta_comp);
                let rhs = pair_mul(&delta_comp(&ca), &delta_comp(&cb))?;
                tally.record(&lhs, &rhs, || format!("δ multiplicative at {ca}, {cb}"));
                let lhs = prod.map(coproduct_comp);
                let rhs = pair_mul(&coproduct_comp(&ca), &coproduct_comp(&cb))?;
                tally.record(&lhs, &rhs, || format!("Δ multiplicative at {ca}, {cb}"));
            }
        }
    }
    Ok(tally.report("comp-double", &x, None))
}

/// Convenience: the composition of singleton blocks in the given order.
pub fn singletons(names: &[&str]) -> Result<SetComposition> {
    let blocks = names
        .iter()
        .map(|n| Label::atom(n).map(|l| [l].into_iter().collect()))
        .collect::<Result<Vec<FiniteSet>>>()?;
    SetComposition::new(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(t: &str) -> SetComposition {
        SetComposition::parse(t).unwrap()
    }

    fn set(names: &[&str]) -> FiniteSet {
        FiniteSet::of_atoms(names).unwrap()
    }

    #[test]
    fn parse_render() {
        assert_eq!(comp(" ( {b,a} , {c} ) ").to_string(), "({a,b},{c})");
        assert_eq!(comp("()").to_string(), "()");
        assert!(SetComposition::parse("({a},{a})").is_err());
        assert!(SetComposition::parse("({a},)").is_err());
        assert!(SetComposition::parse("({})").is_err());
        assert!(SetComposition::parse("{a}").is_err());
    }

    #[test]
    fn restriction() {
        assert_eq!(comp("({a,b},{c})").restrict(&set(&["a", "c"])).unwrap(), comp("({a},{c})"));
        assert_eq!(comp("({a,b},{c})").restrict(&set(&["a", "b", "c"])).unwrap(), comp("({a,b},{c})"));
        assert_eq!(comp("({a,b},{c})").restrict(&FiniteSet::empty()).unwrap(), comp("()"));
        assert!(comp("({a})").restrict(&set(&["z"])).is_err());
    }

    #[test]
    fn fubini_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| all_compositions(&standard_ground(n)).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 13, 75]);
    }

    #[test]
    fn small_products() {
        let p = quasishuffle_comp(&comp("({a})"), &comp("({b})")).unwrap();
        assert_eq!(p.to_string(), "({a},{b}) + ({a,b}) + ({b},{a})");
        let unit = quasishuffle_comp(&comp("()"), &comp("({a},{b})")).unwrap();
        assert_eq!(unit, LinComb::basis(comp("({a},{b})")));
        assert!(quasishuffle_comp(&comp("({a})"), &comp("({a})")).is_err());
    }

    #[test]
    fn recursive_product_matches_restriction_filter() {
        let x = crate::twisted::checks::standard_ground(4);
        for a in x.subsets() {
            let b = x.difference(&a);
            for ca in all_compositions(&a) {
                for cb in all_compositions(&b) {
                    assert_eq!(
                        quasishuffle_comp(&ca, &cb).unwrap(),
                        quasishuffle_comp_by_restriction(&ca, &cb).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn deconcatenation() {
        let c = comp("({a},{b,c})");
        assert_eq!(
            deconcat_comp(&c, &set(&["a"]), &set(&["b", "c"])).unwrap(),
            LinComb::basis(Tensor2(comp("({a})"), comp("({b,c})")))
        );
        let c = comp("({a,b},{c})");
        assert!(deconcat_comp(&c, &set(&["a", "c"]), &set(&["b"])).unwrap().is_zero());
        assert_eq!(
            deconcat_comp(&c, &FiniteSet::empty(), &set(&["a", "b", "c"])).unwrap(),
            LinComb::basis(Tensor2(comp("()"), c.clone()))
        );
        assert!(deconcat_comp(&c, &set(&["a"]), &set(&["c"])).is_err());
    }

    #[test]
    fn delta_small() {
        assert_eq!(delta_comp(&comp("({a})")), LinComb::basis(Tensor2(comp("({a})"), comp("({a})"))));
        assert_eq!(delta_comp(&comp("()")), LinComb::basis(Tensor2(comp("()"), comp("()"))));
        assert_eq!(delta_comp(&comp("({a},{b})")).len(), 4);
    }

    #[test]
    fn checks_at_three() {
        assert!(check_comp_algebra(3).unwrap().passed());
        assert!(check_comp_coalgebras(3).unwrap().passed());
        assert!(check_comp_double(3).unwrap().passed());
    }
}
