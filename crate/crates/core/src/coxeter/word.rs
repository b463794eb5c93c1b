use std::fmt;
use std::ops::{Deref, DerefMut};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the simple generators. Letters are stored 0-based; generator
/// `s1` is letter `0`. Text form is the comma-separated generator names.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from 1-based generator numbers, as written on paper.
    pub fn from_one_based(letters: &[usize]) -> Self {
        Word(letters.iter().map(|&s| s - 1).collect())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    /// The subsequence of letters that belong to `keep`.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Word {
        Word(self.0.iter().copied().filter(|&s| keep(s)).collect())
    }

    /// Number of occurrences of each generator, for a rank-`n` alphabet.
    pub fn occurrences(&self, n: usize) -> Vec<usize> {
        let mut counts = vec![0; n];
        for &s in &self.0 {
            counts[s] += 1;
        }
        counts
    }

    /// Image under a letter map (e.g. the ψ involution).
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Word {
        Word(self.0.iter().map(|&s| f(s)).collect())
    }

    pub fn check_alphabet(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&s| s >= n) {
            Some(&s) => Err(Error::InvalidWord(format!(
                "letter s{} outside the alphabet s1..s{n}",
                s + 1
            ))),
            None => Ok(()),
        }
    }

    /// True when every generator of `0..n` appears exactly once.
    pub fn is_permutation_of(&self, n: usize) -> bool {
        self.0.len() == n && self.occurrences_checked(n).is_some_and(|c| c.iter().all(|&x| x == 1))
    }

    fn occurrences_checked(&self, n: usize) -> Option<Vec<usize>> {
        self.check_alphabet(n).ok()?;
        Some(self.occurrences(n))
    }

    /// Names joined by `sep`, e.g. `s1,s2,s1`.
    pub fn join(&self, sep: &str) -> String {
        self.0.iter().map(|s| format!("s{}", s + 1)).collect::<Vec<_>>().join(sep)
    }
}

impl Deref for Word {
    type Target = Vec<usize>;
    fn deref(&self) -> &Vec<usize> {
        &self.0
    }
}

impl DerefMut for Word {
    fn deref_mut(&mut self) -> &mut Vec<usize> {
        &mut self.0
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Word {
        Word(v)
    }
}

impl FromIterator<usize> for Word {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.join(","))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `s1,s3,s2`, `1,3,2`, optional brackets and whitespace.
    fn from_str(s: &str) -> Result<Word> {
        let body = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if body.trim().is_empty() {
            return Ok(Word::empty());
        }
        body.split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|tok| {
                let num = tok.trim().trim_start_matches(['s', 'S']);
                match num.parse::<usize>() {
                    Ok(k) if k >= 1 => Ok(k - 1),
                    _ => Err(Error::InvalidWord(format!("bad generator name {tok:?}"))),
                }
            })
            .collect()
    }
}
