use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Irreducible finite Coxeter families. `B` also covers the `C` series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    G,
    H,
    I2,
}

/// A validated Cartan-Killing type such as `A3`, `E6` or `I2(7)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupDescriptor {
    family: Family,
    rank: usize,
    /// Dihedral order; only meaningful for `I2`.
    dihedral_order: usize,
}

impl GroupDescriptor {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let legal = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
            Family::H => rank == 3 || rank == 4,
            Family::I2 => {
                return Err(Error::InvalidDescriptor(
                    "I2 needs a dihedral order, use GroupDescriptor::dihedral".into(),
                ))
            }
        };
        if !legal {
            return Err(Error::InvalidDescriptor(format!(
                "{family:?}{rank} is not a finite irreducible Coxeter type"
            )));
        }
        // safety cap: position sets are 128 bits wide, larger groups are out of desk scale anyway
        if rank > 64 {
            return Err(Error::InvalidDescriptor(format!("rank {rank} is too large")));
        }
        Ok(GroupDescriptor { family, rank, dihedral_order: 0 })
    }

    /// The dihedral group `I2(m)`. `m = 2` is the reducible `A1 × A1` and is rejected.
    pub fn dihedral(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidDescriptor(format!(
                "I2({m}) is reducible or degenerate; irreducible dihedral types need m >= 3"
            )));
        }
        Ok(GroupDescriptor { family: Family::I2, rank: 2, dihedral_order: m })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `Some(m)` for `I2(m)`.
    pub fn dihedral_order(&self) -> Option<usize> {
        (self.family == Family::I2).then_some(self.dihedral_order)
    }
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidDescriptor(format!("cannot parse group type {s:?}"));
        if let Some(rest) = s.strip_prefix("I2(").or_else(|| s.strip_prefix("i2(")) {
            let m = rest.strip_suffix(')').ok_or_else(bad)?;
            let m: usize = m.trim().parse().map_err(|_| bad())?;
            return GroupDescriptor::dihedral(m);
        }
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' | 'C' => Family::B,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            'H' => Family::H,
            _ => return Err(bad()),
        };
        GroupDescriptor::new(family, rank)
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::I2 => write!(f, "I2({})", self.dihedral_order),
            fam => write!(f, "{:?}{}", fam, self.rank),
        }
    }
}
