use std::fmt;
use std::ops::Add;

/// Symmetric matrix of pairwise strand linking numbers.
///
/// Linking numbers are half-integers; entries are stored doubled (the raw
/// signed crossing count) so that all arithmetic stays exact.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinkingMatrix {
    strands: usize,
    doubled: Vec<i64>,
}

impl LinkingMatrix {
    pub fn zero(strands: usize) -> Self {
        LinkingMatrix { strands, doubled: vec![0; strands * strands] }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub(crate) fn add_crossing(&mut self, a: usize, b: usize, sign: i64) {
        let n = self.strands;
        self.doubled[a * n + b] += sign;
        self.doubled[b * n + a] += sign;
    }

    /// Twice the linking number of strands `x` and `y` (0-based).
    pub fn doubled(&self, x: usize, y: usize) -> i64 {
        self.doubled[x * self.strands + y]
    }

    /// The linking number when it is an integer.
    pub fn linking(&self, x: usize, y: usize) -> Option<i64> {
        let d = self.doubled(x, y);
        (d % 2 == 0).then_some(d / 2)
    }

    pub fn is_zero(&self) -> bool {
        self.doubled.iter().all(|&d| d == 0)
    }
}

impl Add for &LinkingMatrix {
    type Output = LinkingMatrix;

    fn add(self, rhs: &LinkingMatrix) -> LinkingMatrix {
        assert_eq!(self.strands, rhs.strands);
        LinkingMatrix {
            strands: self.strands,
            doubled: self.doubled.iter().zip(&rhs.doubled).map(|(a, b)| a + b).collect(),
        }
    }
}

impl fmt::Display for LinkingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in 0..self.strands {
            for y in 0..self.strands {
                if y > 0 {
                    write!(f, " ")?;
                }
                let d = self.doubled(x, y);
                if x == y {
                    write!(f, "{:>5}", ".")?;
                } else if d % 2 == 0 {
                    write!(f, "{:>5}", d / 2)?;
                } else {
                    write!(f, "{:>5}", format!("{d}/2"))?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
