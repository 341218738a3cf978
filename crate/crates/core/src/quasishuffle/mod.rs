//! The double bialgebra `T(V)` of words over a commutative semigroup with a
//! grouplike basis: quasishuffle product, deconcatenation and the fusion
//! coproduct `δ`.

pub mod kx;

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::algebra::{integer, tensor_product, LinComb, Rational, Tensor2, Tensor3};
use crate::compositions::interval_splits;
use crate::error::{parse_err, Error, Result};
use crate::twisted::checks::{CheckReport, Tally};

pub use crate::monoid::{Monomial, Semigroup};

/// A word `v_1…v_k` of basis elements of `V`. Ordered by length, then letters.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Monomial>);

pub type WordLC = LinComb<Word>;
pub type WordPairLC = LinComb<Tensor2<Word, Word>>;

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn letter(m: Monomial) -> Word {
        Word(vec![m])
    }

    /// `x^n` in the trivial-monoid preset.
    pub fn x_power(n: usize) -> Word {
        Word(vec![Monomial::unit(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Monomial] {
        &self.0
    }

    pub fn validate(&self, preset: Semigroup) -> Result<()> {
        self.0.iter().try_for_each(|m| preset.validate(m))
    }

    /// Parses a word for the given preset.
    ///
    /// `k`: `1`, `x`, `x^n`. Others: `[l_1,…,l_k]` (or without brackets), with
    /// letters read by [`Semigroup::parse_letter`]; `[]` and `1` are empty.
    pub fn parse(preset: Semigroup, text: &str) -> Result<Word> {
        let t = text.trim();
        if t == "1" && preset != Semigroup::QSym || t == "[]" {
            return Ok(Word::empty());
        }
        if preset == Semigroup::K {
            if let Some(rest) = t.strip_prefix('x') {
                let n = match rest.strip_prefix('^') {
                    None if rest.is_empty() => 1,
                    Some(e) => e.parse().map_err(|_| parse_err(2, format!("bad exponent {e:?}")))?,
                    None => return Err(parse_err(1, "expected '^' after x")),
                };
                return Ok(Word::x_power(n));
            }
        }
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .unwrap_or(t);
        let mut letters = Vec::new();
        let mut depth = 0usize;
        let mut start = 0usize;
        let bytes: Vec<char> = inner.chars().collect();
        let mut pieces = Vec::new();
        for (i, &c) in bytes.iter().enumerate() {
            match c {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                ',' if depth == 0 => {
                    pieces.push((start, bytes[start..i].iter().collect::<String>()));
                    start = i + 1;
                }
                _ => {}
            }
        }
        pieces.push((start, bytes[start..].iter().collect::<String>()));
        for (offset, piece) in pieces {
            let m = preset
                .parse_letter(&piece)
                .map_err(|e| parse_err(offset, e.to_string()))?;
            letters.push(m);
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        if self.0.iter().all(|m| m.exponents().is_empty()) {
            return match self.0.len() {
                1 => f.write_str("x"),
                n => write!(f, "x^{n}"),
            };
        }
        f.write_str("[")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All `(k,l)`-quasishuffles: surjections `σ: [k+l] → [max σ]` strictly
/// increasing on `1..=k` and on `k+1..=k+l`. Values are 1-based.
pub fn enumerate_qsh(k: usize, l: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, l: usize, i: usize, j: usize, sigma: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == k && j == l {
            out.push(sigma.clone());
            return;
        }
        let next = sigma.iter().copied().max().unwrap_or(0) + 1;
        if i < k {
            sigma[i] = next;
            go(k, l, i + 1, j, sigma, out);
            sigma[i] = 0;
        }
        if j < l {
            sigma[k + j] = next;
            go(k, l, i, j + 1, sigma, out);
            sigma[k + j] = 0;
        }
        if i < k && j < l {
            sigma[i] = next;
            sigma[k + j] = next;
            go(k, l, i + 1, j + 1, sigma, out);
            sigma[i] = 0;
            sigma[k + j] = 0;
        }
    }
    let mut out = Vec::new();
    go(k, l, 0, 0, &mut vec![0; k + l], &mut out);
    out
}

/// `u ⧢ v` on words: letters sent to the same place are multiplied.
pub fn qsh_words(u: &Word, v: &Word) -> WordLC {
    let letters: Vec<&Monomial> = u.0.iter().chain(&v.0).collect();
    let mut out = LinComb::zero();
    for sigma in enumerate_qsh(u.len(), v.len()) {
        let m = sigma.iter().copied().max().unwrap_or(0);
        let mut word: Vec<Option<Monomial>> = vec![None; m];
        for (letter, &slot) in letters.iter().zip(&sigma) {
            let cell = &mut word[slot - 1];
            *cell = Some(match cell.take() {
                None => (*letter).clone(),
                Some(prev) => prev.mul(letter),
            });
        }
        out.add_term(Word(word.into_iter().map(|c| c.expect("surjective")).collect()), integer(1));
    }
    out
}

/// Bilinear `⧢`.
pub fn qsh_product(a: &WordLC, b: &WordLC) -> WordLC {
    a.bilinear(b, qsh_words)
}

/// `Δ(v_1…v_n) = Σ_k v_1…v_k ⊗ v_{k+1}…v_n`.
pub fn deconcat(w: &Word) -> WordPairLC {
    (0..=w.len())
        .map(|i| (Tensor2(Word(w.0[..i].to_vec()), Word(w.0[i..].to_vec())), integer(1)))
        .collect()
}

/// `δ(v_1…v_k)`: fused interval products ⊗ the `⧢` of the interval words.
pub fn delta_t(w: &Word) -> WordPairLC {
    let mut out = LinComb::zero();
    for intervals in interval_splits(w.len()) {
        let fused = Word(
            intervals
                .iter()
                .map(|&(s, e)| Monomial::product(&w.0[s..e]))
                .collect(),
        );
        let mut right = LinComb::basis(Word::empty());
        for &(s, e) in &intervals {
            right = qsh_product(&right, &LinComb::basis(Word(w.0[s..e].to_vec())));
        }
        out += right.map_basis(|r| Tensor2(fused.clone(), r.clone()));
    }
    out
}

/// `ε_Δ`: 1 on the empty word only.
pub fn counit_cut(w: &Word) -> Rational {
    integer(i64::from(w.is_empty()))
}

/// `ε_δ`: `ε_V(v_1) = 1` for one letter, 0 from two letters on, 1 on the empty word.
pub fn counit_delta(w: &Word) -> Rational {
    integer(i64::from(w.len() <= 1))
}

/// All words of length at most `max_len` over `alphabet`, shortest first.
pub fn all_words(alphabet: &[Monomial], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                alphabet.iter().map(move |m| {
                    let mut next = w.0.clone();
                    next.push(m.clone());
                    Word(next)
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn pair_qsh(a: &WordPairLC, b: &WordPairLC) -> WordPairLC {
    a.bilinear(b, |Tensor2(a1, a2), Tensor2(b1, b2)| {
        tensor_product(&qsh_words(a1, b1), &qsh_words(a2, b2))
    })
}

type WordTriple = LinComb<Tensor3<Word, Word, Word>>;

fn coassoc_sides(d: &WordPairLC, cop: fn(&Word) -> WordPairLC) -> (WordTriple, WordTriple) {
    let lhs = d.map(|Tensor2(p, q)| cop(p).map_basis(|Tensor2(s, t)| Tensor3(s.clone(), t.clone(), q.clone())));
    let rhs = d.map(|Tensor2(p, q)| cop(q).map_basis(|Tensor2(s, t)| Tensor3(p.clone(), s.clone(), t.clone())));
    (lhs, rhs)
}

/// Every axiom of the double bialgebra `T(V)` over the preset's alphabet:
/// `⧢` associative, commutative, unital (total length ≤ `max_len`); `Δ`, `δ`
/// coassociative and counital; `Δ`, `δ` multiplicative; and
/// `(Δ⊗Id)∘δ = m_{1,3,24}∘(δ⊗δ)∘Δ` (length ≤ `max_len`).
pub fn check_t_double(preset: Semigroup, max_len: usize) -> Result<CheckReport> {
    if max_len > 5 {
        return Err(Error::BoundExceeded { size: max_len, bound: 5 });
    }
    let alphabet = preset.alphabet();
    let words = all_words(&alphabet, max_len);
    let mut tally = Tally::default();
    let one = LinComb::basis(Word::empty());
    for u in &words {
        let lu = LinComb::basis(u.clone());
        tally.record(&qsh_product(&lu, &one), &lu, || format!("unit at {u}"));
        let id = lu.clone();
        for (name, cop, eps) in [
            ("Δ", deconcat as fn(&Word) -> WordPairLC, counit_cut as fn(&Word) -> Rational),
            ("δ", delta_t, counit_delta),
        ] {
            let d = cop(u);
            let (lhs, rhs) = coassoc_sides(&d, cop);
            tally.record(&lhs, &rhs, || format!("{name} coassociativity at {u}"));
            let left = d.map(|Tensor2(p, q)| LinComb::term(q.clone(), eps(p)));
            let right = d.map(|Tensor2(p, q)| LinComb::term(p.clone(), eps(q)));
            tally.record(&left, &id, || format!("{name} left counit at {u}"));
            tally.record(&right, &id, || format!("{name} right counit at {u}"));
        }
        let lhs: WordTriple = delta_t(u).map(|Tensor2(p, q)| {
            deconcat(p).map_basis(|Tensor2(s, t)| Tensor3(s.clone(), t.clone(), q.clone()))
        });
        let rhs: WordTriple = deconcat(u).map(|Tensor2(a, b)| {
            delta_t(a).bilinear(&delta_t(b), |Tensor2(a1, a2), Tensor2(b1, b2)| {
                qsh_words(a2, b2).map_basis(|r| Tensor3(a1.clone(), b1.clone(), r.clone()))
            })
        });
        tally.record(&lhs, &rhs, || format!("double law at {u}"));
        for v in words.iter().filter(|v| u.len() + v.len() <= max_len) {
            let lv = LinComb::basis(v.clone());
            let uv = qsh_product(&lu, &lv);
            tally.record(&uv, &qsh_product(&lv, &lu), || format!("commutativity at {u}, {v}"));
            tally.record(&uv.map(deconcat), &pair_qsh(&deconcat(u), &deconcat(v)), || {
                format!("Δ multiplicative at {u}, {v}")
            });
            tally.record(&uv.map(delta_t), &pair_qsh(&delta_t(u), &delta_t(v)), || {
                format!("δ multiplicative at {u}, {v}")
            });
            for w in words.iter().filter(|w| u.len() + v.len() + w.len() <= max_len) {
                let lw = LinComb::basis(w.clone());
                let lhs = qsh_product(&uv, &lw);
                let rhs = qsh_product(&lu, &qsh_product(&lv, &lw));
                tally.record(&lhs, &rhs, || format!("associativity at {u}, {v}, {w}"));
            }
        }
    }
    let label = crate::partitions::FiniteSet::empty();
    let mut report = tally.report("t-double-bialgebra", &label, None);
    report.x = format!("V={preset}");
    report.y = format!("len≤{max_len}");
    Ok(report)
}
