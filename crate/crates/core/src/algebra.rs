//! Exact rational coefficients and sparse formal linear combinations.
//!
//! Every algebraic operation in the crate produces a [`LinComb`]: a finite map
//! from basis objects to nonzero rationals. Basis objects carry a total order,
//! so iteration and printing are deterministic.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Reduced fraction with arbitrary-precision numerator and positive denominator.
pub type Rational = num::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Two-fold tensor of basis objects, `a ⊗ b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tensor2<A, B>(pub A, pub B);

/// Three-fold tensor of basis objects, `a ⊗ b ⊗ c`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tensor3<A, B, C>(pub A, pub B, pub C);

impl<A, B> Tensor2<A, B> {
    /// The flip `c(a ⊗ b) = b ⊗ a`.
    pub fn flip(self) -> Tensor2<B, A> {
        Tensor2(self.1, self.0)
    }
}

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Tensor2<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.0, self.1)
    }
}

impl<A: fmt::Display, B: fmt::Display, C: fmt::Display> fmt::Display for Tensor3<A, B, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {} ⊗ {}", self.0, self.1, self.2)
    }
}

/// A finite formal linear combination of basis objects with rational coefficients.
///
/// No stored coefficient is ever zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The combination `1·b`.
    pub fn basis(b: B) -> Self {
        Self::term(b, Rational::one())
    }

    pub fn term(b: B, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(b, coeff);
        out
    }

    /// Adds `coeff·b` in place, pruning the entry if it cancels.
    pub fn add_term(&mut self, b: B, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis objects with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Rational)> {
        self.terms.iter()
    }

    pub fn basis_elements(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(b, x)| (b.clone(), x * c))
                .collect(),
        }
    }

    /// Linear extension of a basis map `f: B -> LinComb<C>`.
    pub fn map<C, F>(&self, mut f: F) -> LinComb<C>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> LinComb<C>,
    {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            for (image, d) in f(b).terms {
                out.add_term(image, c * d);
            }
        }
        out
    }

    /// Fallible linear extension.
    pub fn try_map<C, E, F>(&self, mut f: F) -> Result<LinComb<C>, E>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> Result<LinComb<C>, E>,
    {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            for (image, d) in f(b)?.terms {
                out.add_term(image, c * d);
            }
        }
        Ok(out)
    }

    /// Linear extension of a map between bases.
    pub fn map_basis<C, F>(&self, mut f: F) -> LinComb<C>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> C,
    {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Bilinear extension of `f: B × C -> LinComb<D>`.
    pub fn bilinear<C, D, F>(&self, other: &LinComb<C>, mut f: F) -> LinComb<D>
    where
        C: Ord + Clone,
        D: Ord + Clone,
        F: FnMut(&B, &C) -> LinComb<D>,
    {
        let mut out = LinComb::zero();
        for (b, x) in &self.terms {
            for (c, y) in &other.terms {
                let xy = x * y;
                for (image, z) in f(b, c).terms {
                    out.add_term(image, &xy * z);
                }
            }
        }
        out
    }

    pub fn try_bilinear<C, D, E, F>(&self, other: &LinComb<C>, mut f: F) -> Result<LinComb<D>, E>
    where
        C: Ord + Clone,
        D: Ord + Clone,
        F: FnMut(&B, &C) -> Result<LinComb<D>, E>,
    {
        let mut out = LinComb::zero();
        for (b, x) in &self.terms {
            for (c, y) in &other.terms {
                let xy = x * y;
                for (image, z) in f(b, c)?.terms {
                    out.add_term(image, &xy * z);
                }
            }
        }
        Ok(out)
    }

    /// Applies a linear functional.
    pub fn pair<F>(&self, mut f: F) -> Rational
    where
        F: FnMut(&B) -> Rational,
    {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, (b, c)| acc + c * f(b))
    }

    /// Renders as a JSON array of `{"coeff": "p/q", "term": ...}` objects.
    pub fn to_json(&self) -> serde_json::Value
    where
        B: Serialize,
    {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(b, c)| {
                    serde_json::json!({
                        "coeff": c.to_string(),
                        "term": serde_json::to_value(b).unwrap_or(serde_json::Value::Null),
                    })
                })
                .collect(),
        )
    }

    #[cfg(test)]
    pub(crate) fn assert_pruned(&self) {
        assert!(self.terms.values().all(|c| !c.is_zero()));
    }
}

/// `a ⊗ b`, the bilinear tensor product of two combinations.
pub fn tensor_product<A, B>(a: &LinComb<A>, b: &LinComb<B>) -> LinComb<Tensor2<A, B>>
where
    A: Ord + Clone,
    B: Ord + Clone,
{
    a.bilinear(b, |x, y| LinComb::basis(Tensor2(x.clone(), y.clone())))
}

/// Componentwise product on two-fold tensors, `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
pub fn tensor_mul2<A, B, FA, FB>(
    x: &LinComb<Tensor2<A, B>>,
    y: &LinComb<Tensor2<A, B>>,
    mut mul_a: FA,
    mut mul_b: FB,
) -> LinComb<Tensor2<A, B>>
where
    A: Ord + Clone,
    B: Ord + Clone,
    FA: FnMut(&A, &A) -> LinComb<A>,
    FB: FnMut(&B, &B) -> LinComb<B>,
{
    x.bilinear(y, |Tensor2(a, b), Tensor2(c, d)| {
        tensor_product(&mul_a(a, c), &mul_b(b, d))
    })
}

impl<B: Ord + Clone> FromIterator<(B, Rational)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        let mut out = LinComb::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<B: Ord + Clone> IntoIterator for LinComb<B> {
    type Item = (B, Rational);
    type IntoIter = btree_map::IntoIter<B, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<B: Ord + Clone> AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl<B: Ord + Clone> AddAssign for LinComb<B> {
    fn add_assign(&mut self, rhs: LinComb<B>) {
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
    }
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = LinComb<B>;

    fn add(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self += rhs;
        self
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;

    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Ord + Clone> Neg for LinComb<B> {
    type Output = LinComb<B>;

    fn neg(mut self) -> LinComb<B> {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = LinComb<B>;

    fn sub(self, rhs: LinComb<B>) -> LinComb<B> {
        self + (-rhs)
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;

    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        self.clone() - rhs.clone()
    }
}

impl<B: Ord + Clone> Mul<&Rational> for &LinComb<B> {
    type Output = LinComb<B>;

    fn mul(self, rhs: &Rational) -> LinComb<B> {
        self.scale(rhs)
    }
}

impl<B: Ord + fmt::Debug> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(b, c)| (b, c.to_string())))
            .finish()
    }
}

impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if magnitude.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{magnitude} {b}")?;
            }
        }
        Ok(())
    }
}
