//! Grouplike bases of commutative semigroup bialgebras.
//!
//! Every basis element is an exponent vector over a fixed number of
//! generators; the product adds exponents. The coproduct is `m ↦ m ⊗ m` and the
//! counit is `1` on every basis element, so neither needs to be stored.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A basis element of `V`: an exponent vector.
///
/// The empty vector is the neutral element; it is the unique element of the
/// trivial monoid and serves as an adjoined unit for the other presets.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn unit() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Exponentwise sum; shorter vectors are padded with zeros.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (&self.0, &other.0)
        } else {
            (&other.0, &self.0)
        };
        let mut out = long.clone();
        for (o, s) in out.iter_mut().zip(short) {
            *o += s;
        }
        Monomial(out)
    }

    /// Product of a finite family; the empty product is the unit.
    pub fn product<'a, I: IntoIterator<Item = &'a Monomial>>(items: I) -> Monomial {
        items
            .into_iter()
            .fold(Monomial::unit(), |acc, m| acc.mul(m))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.as_slice() {
            [] => f.write_str("1"),
            [e] => write!(f, "{e}"),
            es => {
                f.write_str("(")?;
                for (i, e) in es.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{e}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Which commutative semigroup spans `V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Semigroup {
    /// `(N_{>0}, +)`: one generator, exponent at least 1. Words are compositions.
    QSym,
    /// The one-element monoid. `T(V)` is then a polynomial algebra in one variable.
    K,
    /// Free commutative semigroup on `g` generators (nonzero exponent vectors).
    Free(usize),
}

impl Semigroup {
    pub fn validate(&self, m: &Monomial) -> Result<()> {
        let ok = match self {
            Semigroup::QSym => m.0.len() == 1 && m.0[0] >= 1,
            Semigroup::K => m.0.is_empty(),
            Semigroup::Free(g) => m.0.len() == *g && !m.is_unit(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidDecoration(format!(
                "{m} is not an element of the {} semigroup",
                self.name()
            )))
        }
    }

    pub fn name(&self) -> String {
        match self {
            Semigroup::QSym => "qsym".into(),
            Semigroup::K => "k".into(),
            Semigroup::Free(g) => format!("free:{g}"),
        }
    }

    /// A small generating alphabet used by the exhaustive suites.
    pub fn alphabet(&self) -> Vec<Monomial> {
        match self {
            Semigroup::QSym => vec![Monomial(vec![1]), Monomial(vec![2])],
            Semigroup::K => vec![Monomial::unit()],
            Semigroup::Free(g) => (0..*g)
                .map(|i| {
                    let mut e = vec![0; *g];
                    e[i] = 1;
                    Monomial(e)
                })
                .collect(),
        }
    }

    /// Parses a letter: an integer for `qsym`, `x` or `*` for `k`,
    /// `(a,b,...)` for `free:g`.
    pub fn parse_letter(&self, text: &str) -> Result<Monomial> {
        let t = text.trim();
        let bad = || Error::InvalidDecoration(format!("cannot read {t:?} as a {} letter", self.name()));
        let m = match self {
            Semigroup::K => {
                if t == "x" || t == "*" || t == "1" {
                    Monomial::unit()
                } else {
                    return Err(bad());
                }
            }
            Semigroup::QSym => Monomial(vec![t.parse().map_err(|_| bad())?]),
            Semigroup::Free(_) => {
                let inner = t
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .unwrap_or(t);
                let exps = inner
                    .split(',')
                    .map(|e| e.trim().parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| bad())?;
                Monomial(exps)
            }
        };
        self.validate(&m)?;
        Ok(m)
    }
}

impl FromStr for Semigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Semigroup> {
        match s.trim().to_ascii_lowercase().as_str() {
            "qsym" => Ok(Semigroup::QSym),
            "k" => Ok(Semigroup::K),
            other => other
                .strip_prefix("free:")
                .and_then(|g| g.parse::<usize>().ok())
                .filter(|&g| g >= 1)
                .map(Semigroup::Free)
                .ok_or_else(|| Error::InvalidDecoration(format!("unknown preset {s:?}"))),
        }
    }
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
