use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{BlockMask, Design};
use crate::error::{Error, Result};

/// Which relabelings of the points count as the same design.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryMode {
    /// No identification.
    Labeled,
    /// Rotations and reflections of the points' circular arrangement.
    Dihedral,
    /// All permutations of the points.
    Symmetric,
}

/// A relabeling of points `0..m`, with a flag recording whether it
/// reverses the circular orientation. Orientation-reversing relabelings
/// act on twist products by reversing the factor order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relabeling {
    pub images: Vec<usize>,
    pub reverses: bool,
}

impl Relabeling {
    pub fn apply_mask(&self, mask: BlockMask) -> BlockMask {
        let mut out = 0;
        for (x, &y) in self.images.iter().enumerate() {
            if mask >> x & 1 == 1 {
                out |= 1 << y;
            }
        }
        out
    }

    pub fn apply(&self, design: &Design) -> Design {
        Design::from_masks_unchecked(design.points(), design.masks().iter().map(|&b| self.apply_mask(b)).collect())
    }
}

impl SymmetryMode {
    /// All relabelings in the group, identity first.
    pub fn group(self, m: usize) -> Vec<Relabeling> {
        match self {
            SymmetryMode::Labeled => vec![Relabeling { images: (0..m).collect(), reverses: false }],
            SymmetryMode::Dihedral => {
                let mut g = Vec::with_capacity(2 * m);
                for k in 0..m {
                    g.push(Relabeling { images: (0..m).map(|x| (x + k) % m).collect(), reverses: false });
                }
                for k in 0..m {
                    g.push(Relabeling { images: (0..m).map(|x| (m + k - x) % m).collect(), reverses: true });
                }
                g
            }
            SymmetryMode::Symmetric => {
                let mut out = Vec::new();
                let mut p: Vec<usize> = (0..m).collect();
                loop {
                    out.push(Relabeling { images: p.clone(), reverses: false });
                    if !next_permutation(&mut p) {
                        break;
                    }
                }
                out
            }
        }
    }

    /// Smallest image of `design` under the group.
    pub fn canonical(self, design: &Design) -> Design {
        self.group(design.points()).iter().map(|g| g.apply(design)).min().expect("groups are non-empty")
    }
}

/// Lexicographic successor; false once `p` is the last permutation.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("p[i] qualifies");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

impl fmt::Display for SymmetryMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryMode::Labeled => "labeled",
            SymmetryMode::Dihedral => "dihedral",
            SymmetryMode::Symmetric => "symmetric",
        })
    }
}

impl FromStr for SymmetryMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "labeled" => Ok(SymmetryMode::Labeled),
            "dihedral" => Ok(SymmetryMode::Dihedral),
            "symmetric" => Ok(SymmetryMode::Symmetric),
            _ => Err(Error::Parse(format!("unknown symmetry mode {s:?}"))),
        }
    }
}
