//! The trivial-monoid preset as the polynomial algebra `K[X]`.
//!
//! `x` generates `(T(K), ⧢)` because `x^{⧢n} = n! x^n + (lower terms)`. The
//! isomorphism sending `x ↦ X` is computed by inverting that triangular system;
//! under it `Δ` and `δ` become the substitutions `P(X+Y)` and `P(XY)`.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::algebra::{integer, LinComb, Rational, Tensor2};
use crate::error::{Error, Result};

use super::{qsh_product, Word, WordLC, WordPairLC};

/// A univariate polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> UniPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> UniPoly {
        UniPoly(Vec::new())
    }

    /// `X^n`.
    pub fn monomial(n: usize) -> UniPoly {
        let mut c = vec![Rational::zero(); n + 1];
        c[n] = Rational::one();
        UniPoly(c)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.0.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.0.is_empty() || other.0.is_empty() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: BTreeMap<std::cmp::Reverse<usize>, &Rational> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (std::cmp::Reverse(i), c))
            .collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (std::cmp::Reverse(i), c)) in terms.into_iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let var = match i {
                0 => String::new(),
                1 => "X".to_string(),
                n => format!("X^{n}"),
            };
            match (mag.is_one(), var.is_empty()) {
                (true, true) => f.write_str("1")?,
                (true, false) => f.write_str(&var)?,
                (false, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag} {var}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A bivariate polynomial in `X, Y`, keyed by exponent pairs.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct BiPoly(BTreeMap<(usize, usize), Rational>);

impl BiPoly {
    pub fn add_term(&mut self, i: usize, j: usize, c: Rational) {
        let entry = self.0.entry((i, j)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.0
    }

    /// `P(X) Q(Y)`.
    pub fn outer(p: &UniPoly, q: &UniPoly) -> BiPoly {
        let mut out = BiPoly::default();
        for (i, a) in p.coeffs().iter().enumerate() {
            for (j, b) in q.coeffs().iter().enumerate() {
                out.add_term(i, j, a * b);
            }
        }
        out
    }

    pub fn add(&mut self, other: &BiPoly) {
        for (&(i, j), c) in &other.0 {
            self.add_term(i, j, c.clone());
        }
    }
}

fn binomial(n: usize, k: usize) -> Rational {
    let mut r = Rational::one();
    for i in 0..k {
        r = r * integer((n - i) as i64) / integer((i + 1) as i64);
    }
    r
}

/// `P(X+Y)`.
pub fn substitute_sum(p: &UniPoly) -> BiPoly {
    let mut out = BiPoly::default();
    for (n, c) in p.coeffs().iter().enumerate() {
        for k in 0..=n {
            out.add_term(k, n - k, c * binomial(n, k));
        }
    }
    out
}

/// `P(XY)`.
pub fn substitute_product(p: &UniPoly) -> BiPoly {
    let mut out = BiPoly::default();
    for (n, c) in p.coeffs().iter().enumerate() {
        out.add_term(n, n, c.clone());
    }
    out
}

fn require_k(w: &Word) -> Result<()> {
    if w.letters().iter().all(|m| m.exponents().is_empty()) {
        Ok(())
    } else {
        Err(Error::WrongPreset { expected: "k" })
    }
}

/// `x^{⧢n}` expanded in words.
pub fn shuffle_power(n: usize) -> WordLC {
    let x = LinComb::basis(Word::x_power(1));
    (0..n).fold(LinComb::basis(Word::empty()), |acc, _| qsh_product(&acc, &x))
}

/// Images of the words `x^0, …, x^max_degree` in `K[X]`.
///
/// From `x^{⧢n} = Σ_k a_{n,k} x^k` with `a_{n,n} = n!` and `x^{⧢n} ↦ X^n`:
/// `x^n ↦ (X^n − Σ_{k<n} a_{n,k} [x^k]) / n!`.
pub fn realization_table(max_degree: usize) -> Vec<UniPoly> {
    let mut table: Vec<UniPoly> = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        let power = shuffle_power(n);
        let mut p = UniPoly::monomial(n);
        for (k, prev) in table.iter().enumerate() {
            let a = power.coeff(&Word::x_power(k));
            p = p.add(&prev.scale(&-a));
        }
        let lead = power.coeff(&Word::x_power(n));
        table.push(p.scale(&(Rational::one() / lead)));
    }
    table
}

fn max_len<'a>(words: impl Iterator<Item = &'a Word>) -> usize {
    words.map(Word::len).max().unwrap_or(0)
}

/// The polynomial corresponding to a combination of words in the `k` preset.
pub fn kx_realize(p: &WordLC) -> Result<UniPoly> {
    p.basis_elements().try_for_each(require_k)?;
    let table = realization_table(max_len(p.basis_elements()));
    Ok(p
        .iter()
        .fold(UniPoly::zero(), |acc, (w, c)| acc.add(&table[w.len()].scale(c))))
}

/// A tensor of word combinations as a polynomial in `X, Y`.
pub fn kx_realize_pair(p: &WordPairLC) -> Result<BiPoly> {
    for Tensor2(a, b) in p.basis_elements() {
        require_k(a)?;
        require_k(b)?;
    }
    let deg = p
        .basis_elements()
        .map(|Tensor2(a, b)| a.len().max(b.len()))
        .max()
        .unwrap_or(0);
    let table = realization_table(deg);
    let mut out = BiPoly::default();
    for (Tensor2(a, b), c) in p.iter() {
        let term = BiPoly::outer(&table[a.len()].scale(c), &table[b.len()]);
        out.add(&term);
    }
    Ok(out)
}

/// The combination of words corresponding to a polynomial: `X^n ↦ x^{⧢n}`.
pub fn kx_unrealize(p: &UniPoly) -> WordLC {
    p.coeffs()
        .iter()
        .enumerate()
        .fold(LinComb::zero(), |acc, (n, c)| acc + shuffle_power(n).scale(c))
}
