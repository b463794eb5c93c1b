//! Positive roots by closure under simple reflections.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A vector in the simple-root basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Root(pub Vec<Scalar>);

impl Root {
    pub fn zero(n: usize) -> Root {
        Root(vec![Scalar::ZERO; n])
    }

    pub fn simple(n: usize, s: usize) -> Root {
        let mut v = vec![Scalar::ZERO; n];
        v[s] = Scalar::ONE;
        Root(v)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// All coefficients nonnegative and at least one positive.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|c| c.signum() >= 0) && self.0.iter().any(|c| c.signum() > 0)
    }

    pub fn scale(&self, k: Scalar) -> Root {
        Root(self.0.iter().map(|&c| c * k).collect())
    }

    pub fn is_exact(&self) -> bool {
        self.0.iter().all(|c| c.is_exact())
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a - b).collect())
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|&a| -a).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let txt = c.to_string();
            let (neg, mag) = match txt.strip_prefix('-') {
                Some(rest) if c.signum() < 0 && !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, txt.clone()),
            };
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let needs_parens = mag.contains(['+', '-']);
            match mag.as_str() {
                "1" => write!(f, "α{}", i + 1)?,
                _ if needs_parens => write!(f, "({mag})α{}", i + 1)?,
                _ => write!(f, "{mag}α{}", i + 1)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A positive root up to sign: `sign · β_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignedRoot {
    pub index: usize,
    pub positive: bool,
}

impl SignedRoot {
    pub fn pos(index: usize) -> Self {
        SignedRoot { index, positive: true }
    }

    pub fn neg(index: usize) -> Self {
        SignedRoot { index, positive: false }
    }

    pub fn negated(self) -> Self {
        SignedRoot { index: self.index, positive: !self.positive }
    }
}

/// Positive roots of a finite root system with the simple reflections
/// tabulated as signed permutations.
#[derive(Clone, Debug)]
pub struct RootSystem {
    rank: usize,
    roots: Vec<Root>,
    /// `tables[s][i] = r` means `s(β_i) = r`.
    tables: Vec<Vec<SignedRoot>>,
}

impl RootSystem {
    /// Closes the simple roots under the simple reflections
    /// `s_t(α_s) = α_s − cartan[s][t]·α_t`. `expected` is the number of
    /// positive roots the Coxeter data predicts; exceeding it means the
    /// Cartan matrix does not describe a finite root system.
    pub fn from_cartan(cartan: &[Vec<Scalar>], expected: usize) -> Result<RootSystem> {
        let n = cartan.len();
        let mut roots: Vec<Root> = (0..n).map(|s| Root::simple(n, s)).collect();
        let mut queue: VecDeque<usize> = (0..n).collect();
        while let Some(i) = queue.pop_front() {
            for s in 0..n {
                if i == s {
                    continue;
                }
                let image = reflect(cartan, &roots[i], s);
                if !image.is_positive() {
                    return Err(Error::Internal(format!(
                        "reflection s{} sends positive root {} to non-positive {}",
                        s + 1,
                        roots[i],
                        image
                    )));
                }
                if find_root(&roots, &image).is_none() {
                    roots.push(image);
                    if roots.len() > expected {
                        return Err(Error::Internal(format!(
                            "root closure exceeded the expected {expected} positive roots"
                        )));
                    }
                    queue.push_back(roots.len() - 1);
                }
            }
        }
        if roots.len() != expected {
            return Err(Error::Internal(format!(
                "root closure produced {} positive roots, expected {expected}",
                roots.len()
            )));
        }
        let tables = (0..n)
            .map(|s| {
                (0..roots.len())
                    .map(|i| {
                        if i == s {
                            return Ok(SignedRoot::neg(s));
                        }
                        let image = reflect(cartan, &roots[i], s);
                        find_root(&roots, &image)
                            .map(SignedRoot::pos)
                            .ok_or_else(|| Error::Internal("reflection table not closed".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RootSystem { rank: n, roots, tables })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    /// The vector of a signed root.
    pub fn vector(&self, r: SignedRoot) -> Root {
        if r.positive {
            self.roots[r.index].clone()
        } else {
            -&self.roots[r.index]
        }
    }

    pub fn table(&self, s: usize) -> &[SignedRoot] {
        &self.tables[s]
    }

    pub fn index_of(&self, v: &Root) -> Option<usize> {
        find_root(&self.roots, v)
    }

    /// Locates `v` as a signed positive root.
    pub fn signed_index_of(&self, v: &Root) -> Option<SignedRoot> {
        if let Some(i) = self.index_of(v) {
            return Some(SignedRoot::pos(i));
        }
        self.index_of(&-v).map(SignedRoot::neg)
    }

    pub fn is_exact(&self) -> bool {
        self.roots.iter().all(Root::is_exact)
    }

    pub fn format(&self, r: SignedRoot) -> String {
        self.vector(r).to_string()
    }
}

fn reflect(cartan: &[Vec<Scalar>], beta: &Root, s: usize) -> Root {
    // s(β) = β − (Σ_t c_t a(t,s)) α_s
    let pairing = beta
        .0
        .iter()
        .enumerate()
        .fold(Scalar::ZERO, |acc, (t, &c)| acc + c * cartan[t][s]);
    let mut out = beta.clone();
    out.0[s] = out.0[s] - pairing;
    out
}

fn find_root(roots: &[Root], v: &Root) -> Option<usize> {
    roots.iter().position(|r| r == v)
}
