//! Labels, finite label sets and set partitions.
//!
//! A [`Label`] is either an atom (`a`, `x1`, `7`) or a *block label*: the
//! sorted atoms of a block joined by commas (`a,b`). Merging block labels
//! re-splits and re-sorts their atoms, so the quotient of a quotient carries
//! exactly the labels of the coarser quotient of the original set.
//!
//! Order convention on partitions: `p ≤ q` means `p` is **coarser** than `q`,
//! i.e. every block of `q` lies inside a block of `p`. [`SetPartition::refines`]
//! follows this convention literally.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};

const RESERVED: &[char] = &[
    ',', '|', '{', '}', '(', ')', '[', ']', ';', ':', '-', '"', '\'',
];

fn valid_atom(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c))
}

/// A vertex or element name. Composite labels are sorted comma-joined atoms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Label(String);

impl Label {
    /// Parses an atom or a comma-separated block label; atoms are re-sorted.
    pub fn new(text: &str) -> Result<Label> {
        let atoms: Vec<&str> = text.split(',').collect();
        if atoms.iter().any(|a| !valid_atom(a)) {
            return Err(Error::InvalidLabel(text.to_string()));
        }
        let set: BTreeSet<&str> = atoms.iter().copied().collect();
        if set.len() != atoms.len() {
            return Err(Error::InvalidLabel(text.to_string()));
        }
        Ok(Label(set.into_iter().collect::<Vec<_>>().join(",")))
    }

    /// An atomic label; commas are rejected.
    pub fn atom(text: &str) -> Result<Label> {
        if valid_atom(text) {
            Ok(Label(text.to_string()))
        } else {
            Err(Error::InvalidLabel(text.to_string()))
        }
    }

    /// The block label of the union of the given labels' atoms.
    pub fn merge<'a, I>(labels: I) -> Label
    where
        I: IntoIterator<Item = &'a Label>,
    {
        let atoms: BTreeSet<&str> = labels.into_iter().flat_map(|l| l.atoms()).collect();
        Label(atoms.into_iter().collect::<Vec<_>>().join(","))
    }

    pub fn atoms(&self) -> impl Iterator<Item = &str> {
        self.0.split(',')
    }

    pub fn atom_labels(&self) -> impl Iterator<Item = Label> + '_ {
        self.atoms().map(|a| Label(a.to_string()))
    }

    pub fn is_atomic(&self) -> bool {
        !self.0.contains(',')
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for Label {
    type Error = Error;

    fn try_from(value: String) -> Result<Label> {
        Label::new(&value)
    }
}

impl From<Label> for String {
    fn from(l: Label) -> String {
        l.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A finite set of labels, kept sorted.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FiniteSet(BTreeSet<Label>);

impl FiniteSet {
    pub fn empty() -> FiniteSet {
        FiniteSet::default()
    }

    /// Builds a set of atoms from string slices.
    pub fn of_atoms<S: AsRef<str>>(names: &[S]) -> Result<FiniteSet> {
        names.iter().map(|n| Label::atom(n.as_ref())).collect()
    }

    /// Parses a comma-separated list of atoms; the empty string is the empty set.
    pub fn parse(text: &str) -> Result<FiniteSet> {
        let text = text.trim();
        let text = text
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(text);
        if text.trim().is_empty() {
            return Ok(FiniteSet::empty());
        }
        let mut out = BTreeSet::new();
        let mut offset = 0;
        for part in text.split(',') {
            let label = Label::atom(part.trim()).map_err(|_| {
                parse_err(offset, format!("invalid element {:?}", part.trim()))
            })?;
            if !out.insert(label) {
                return Err(parse_err(offset, format!("duplicate element {:?}", part.trim())));
            }
            offset += part.len() + 1;
        }
        Ok(FiniteSet(out))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, l: &Label) -> bool {
        self.0.contains(l)
    }

    pub fn insert(&mut self, l: Label) -> bool {
        self.0.insert(l)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &Label> + ExactSizeIterator {
        self.0.iter()
    }

    pub fn first(&self) -> Option<&Label> {
        self.0.first()
    }

    pub fn is_subset(&self, other: &FiniteSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &FiniteSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn intersection(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet(self.0.intersection(&other.0).cloned().collect())
    }

    pub fn difference(&self, other: &FiniteSet) -> FiniteSet {
        FiniteSet(self.0.difference(&other.0).cloned().collect())
    }

    /// The set of all atoms occurring in the labels.
    pub fn atoms(&self) -> FiniteSet {
        self.0.iter().flat_map(|l| l.atom_labels()).collect()
    }

    /// Whether the labels are pairwise atom-disjoint.
    pub fn atoms_disjoint(&self) -> bool {
        let total: usize = self.0.iter().map(|l| l.atoms().count()).sum();
        total == self.atoms().len()
    }

    /// All subsets, in order of their bitmask over the sorted elements.
    pub fn subsets(&self) -> Vec<FiniteSet> {
        let elems: Vec<&Label> = self.0.iter().collect();
        (0u64..1 << elems.len())
            .map(|mask| {
                elems
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, l)| (*l).clone())
                    .collect()
            })
            .collect()
    }
}

impl FromIterator<Label> for FiniteSet {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        FiniteSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a FiniteSet {
    type Item = &'a Label;
    type IntoIter = std::collections::btree_set::Iter<'a, Label>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Restricted growth strings of length `n`, in lexicographic order.
///
/// Entry `i` is the block index of element `i`; blocks are numbered by first
/// occurrence. There are Bell(n) of them.
pub fn restricted_growth_strings(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn go(n: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        let bound = if current.is_empty() { 0 } else { max + 1 };
        for v in 0..=bound {
            current.push(v);
            go(n, max.max(v), current, out);
            current.pop();
        }
    }
    go(n, 0, &mut current, &mut out);
    out
}

/// An equivalence relation on a finite label set, stored as its blocks.
///
/// Blocks are nonempty, pairwise disjoint, cover the ground set, and are
/// sorted by their minimum element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    ground: FiniteSet,
    blocks: Vec<FiniteSet>,
}

impl SetPartition {
    pub fn new(ground: FiniteSet, blocks: Vec<FiniteSet>) -> Result<SetPartition> {
        let mut seen = FiniteSet::empty();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidGraph("empty block in partition".into()));
            }
            if !b.is_disjoint(&seen) {
                return Err(Error::Overlap(format!("block {b} overlaps another block")));
            }
            seen = seen.union(b);
        }
        if seen != ground {
            return Err(Error::GroundMismatch {
                left: seen.to_string(),
                right: ground.to_string(),
            });
        }
        Ok(Self::from_blocks_unchecked(ground, blocks))
    }

    /// Partition whose ground set is the union of the given disjoint blocks.
    pub fn from_blocks(blocks: Vec<FiniteSet>) -> Result<SetPartition> {
        let ground = blocks.iter().fold(FiniteSet::empty(), |acc, b| acc.union(b));
        SetPartition::new(ground, blocks)
    }

    fn from_blocks_unchecked(ground: FiniteSet, mut blocks: Vec<FiniteSet>) -> SetPartition {
        blocks.sort();
        SetPartition { ground, blocks }
    }

    /// The equality relation: all singletons.
    pub fn discrete(ground: &FiniteSet) -> SetPartition {
        let blocks = ground.iter().map(|l| [l.clone()].into_iter().collect()).collect();
        SetPartition::from_blocks_unchecked(ground.clone(), blocks)
    }

    /// The full relation: one block (none when the ground set is empty).
    pub fn single_block(ground: &FiniteSet) -> SetPartition {
        let blocks = if ground.is_empty() {
            vec![]
        } else {
            vec![ground.clone()]
        };
        SetPartition::from_blocks_unchecked(ground.clone(), blocks)
    }

    /// Builds a partition from a block index per ground element (sorted order).
    pub fn from_assignment(ground: &FiniteSet, assignment: &[usize]) -> SetPartition {
        debug_assert_eq!(ground.len(), assignment.len());
        let count = assignment.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut blocks = vec![FiniteSet::empty(); count];
        for (l, &b) in ground.iter().zip(assignment) {
            blocks[b].insert(l.clone());
        }
        blocks.retain(|b| !b.is_empty());
        SetPartition::from_blocks_unchecked(ground.clone(), blocks)
    }

    /// Parses the text form `{a,b|c}`; `{}` is the partition of the empty set.
    pub fn parse(text: &str) -> Result<SetPartition> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| parse_err(0, "partition must be enclosed in braces"))?;
        if inner.trim().is_empty() {
            return Ok(SetPartition::discrete(&FiniteSet::empty()));
        }
        let mut blocks = Vec::new();
        let mut offset = 1;
        for part in inner.split('|') {
            let mut block = FiniteSet::empty();
            for atom in part.split(',') {
                let label = Label::atom(atom.trim())
                    .map_err(|_| parse_err(offset, format!("invalid element {:?}", atom.trim())))?;
                if !block.insert(label) {
                    return Err(parse_err(offset, format!("duplicate element {:?}", atom.trim())));
                }
            }
            blocks.push(block);
            offset += part.len() + 1;
        }
        SetPartition::from_blocks(blocks).map_err(|e| parse_err(0, e.to_string()))
    }

    pub fn ground(&self) -> &FiniteSet {
        &self.ground
    }

    pub fn blocks(&self) -> &[FiniteSet] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.ground.len()
    }

    pub fn block_of(&self, l: &Label) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(l))
    }

    /// `cl(x)` as a block label.
    pub fn class_label(&self, l: &Label) -> Option<Label> {
        self.block_of(l).map(|i| Label::merge(self.blocks[i].iter()))
    }

    /// `self ≤ other` in the refinement order: `self` is coarser than `other`,
    /// i.e. every block of `other` is contained in a block of `self`.
    pub fn refines(&self, other: &SetPartition) -> Result<bool> {
        self.check_same_ground(other)?;
        Ok(other
            .blocks
            .iter()
            .all(|q| self.blocks.iter().any(|p| q.is_subset(p))))
    }

    fn check_same_ground(&self, other: &SetPartition) -> Result<()> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch {
                left: self.ground.to_string(),
                right: other.ground.to_string(),
            });
        }
        Ok(())
    }

    /// `X/∼`: one merged block label per block.
    pub fn quotient_set(&self) -> FiniteSet {
        self.blocks.iter().map(|b| Label::merge(b.iter())).collect()
    }

    /// `∼ ∩ Y²`: nonempty intersections of the blocks with `subset`.
    pub fn restrict(&self, subset: &FiniteSet) -> Result<SetPartition> {
        if !subset.is_subset(&self.ground) {
            return Err(Error::NotSubset {
                subset: subset.to_string(),
                ground: self.ground.to_string(),
            });
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.intersection(subset))
            .filter(|b| !b.is_empty())
            .collect();
        Ok(SetPartition::from_blocks_unchecked(subset.clone(), blocks))
    }

    /// `∼_X ⊔ ∼_Y` on the disjoint union of the grounds.
    pub fn disjoint_union(&self, other: &SetPartition) -> Result<SetPartition> {
        if !self.ground.is_disjoint(&other.ground) {
            return Err(Error::Overlap(format!(
                "{} and {} intersect",
                self.ground, other.ground
            )));
        }
        let blocks = self.blocks.iter().chain(&other.blocks).cloned().collect();
        Ok(SetPartition::from_blocks_unchecked(
            self.ground.union(&other.ground),
            blocks,
        ))
    }

    /// Whether `self = self ∩ A² ⊔ self ∩ (X∖A)²`, i.e. no block meets both sides.
    pub fn splits_along(&self, part: &FiniteSet) -> bool {
        self.blocks
            .iter()
            .all(|b| b.is_subset(part) || b.is_disjoint(part))
    }

    /// All partitions `q` of the ground with `q ≤ self` (coarsenings).
    pub fn coarsenings_below(&self) -> Vec<SetPartition> {
        restricted_growth_strings(self.blocks.len())
            .into_iter()
            .map(|rgs| self.merge_blocks(&rgs))
            .collect()
    }

    /// Merges blocks according to a block-index assignment on `self.blocks`.
    fn merge_blocks(&self, assignment: &[usize]) -> SetPartition {
        let count = assignment.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut merged = vec![FiniteSet::empty(); count];
        for (block, &target) in self.blocks.iter().zip(assignment) {
            merged[target] = merged[target].union(block);
        }
        SetPartition::from_blocks_unchecked(self.ground.clone(), merged)
    }

    /// The partition of `X/self` induced by a coarser partition `coarser ≤ self`.
    pub fn project(&self, coarser: &SetPartition) -> Result<SetPartition> {
        if !coarser.refines(self)? {
            return Err(Error::GroundMismatch {
                left: coarser.to_string(),
                right: format!("a coarsening of {self}"),
            });
        }
        let labels: Vec<Label> = self.blocks.iter().map(|b| Label::merge(b.iter())).collect();
        let blocks = coarser
            .blocks
            .iter()
            .map(|c| {
                self.blocks
                    .iter()
                    .zip(&labels)
                    .filter(|(b, _)| b.is_subset(c))
                    .map(|(_, l)| l.clone())
                    .collect()
            })
            .collect();
        Ok(SetPartition::from_blocks_unchecked(self.quotient_set(), blocks))
    }

    /// The inverse of [`project`](Self::project): a partition of `X/self` lifted to `X`.
    pub fn lift(&self, on_quotient: &SetPartition) -> Result<SetPartition> {
        if on_quotient.ground != self.quotient_set() {
            return Err(Error::GroundMismatch {
                left: on_quotient.ground.to_string(),
                right: self.quotient_set().to_string(),
            });
        }
        let blocks = on_quotient
            .blocks
            .iter()
            .map(|b| b.iter().flat_map(|l| l.atom_labels()).collect::<FiniteSet>())
            .map(|atoms| {
                self.blocks
                    .iter()
                    .filter(|blk| blk.atoms().is_subset(&atoms))
                    .fold(FiniteSet::empty(), |acc, blk| acc.union(blk))
            })
            .collect();
        SetPartition::new(self.ground.clone(), blocks)
    }
}

/// `X/∼` for a partition of `X`.
pub fn quotient_set(ground: &FiniteSet, p: &SetPartition) -> Result<FiniteSet> {
    if ground != p.ground() {
        return Err(Error::GroundMismatch {
            left: ground.to_string(),
            right: p.ground().to_string(),
        });
    }
    Ok(p.quotient_set())
}

/// All partitions of `ground`, in lexicographic order of restricted growth strings.
pub fn enumerate_partitions(ground: &FiniteSet) -> Vec<SetPartition> {
    restricted_growth_strings(ground.len())
        .into_iter()
        .map(|rgs| SetPartition::from_assignment(ground, &rgs))
        .collect()
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, l) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{l}")?;
            }
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
