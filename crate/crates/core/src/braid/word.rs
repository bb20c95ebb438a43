use std::fmt;
use std::str::FromStr;

use super::{LinkingMatrix, NormalForm, Permutation};
use crate::error::{Error, Result};

/// A word in the Artin generators of the braid group on `strands` strands.
///
/// Letters are signed 1-based generator indices: `2` is σ₂, `-2` is σ₂⁻¹.
/// Words are read in function notation, so the rightmost letter acts first,
/// matching the convention for products of Dehn twists. A letter's sign is
/// its crossing sign in [`BraidWord::linking_matrix`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::OutOfRange("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            check_letter(l, strands)?;
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands > 0, "a braid needs at least one strand");
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, letter: i32) -> Result<()> {
        check_letter(letter, self.strands)?;
        self.letters.push(letter);
        Ok(())
    }

    /// `self · other`: `other` acts first.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// Mirror image: every crossing changes sign.
    pub fn mirror(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|l| -l).collect() }
    }

    /// The central full twist on all strands, signed so that every pair of
    /// strands links `-1`.
    pub fn full_twist(strands: usize) -> BraidWord {
        Self::block_full_twist(strands, 1, strands)
    }

    /// Full twist (linking `-1` per pair) of the `size` adjacent strands at
    /// positions `first..first + size` (1-based).
    pub(crate) fn block_full_twist(strands: usize, first: usize, size: usize) -> BraidWord {
        assert!(first >= 1 && first + size <= strands + 1);
        let mut letters = Vec::with_capacity(size * size.saturating_sub(1));
        if size >= 2 {
            for _ in 0..size {
                for g in first..first + size - 1 {
                    letters.push(-(g as i32));
                }
            }
        }
        BraidWord { strands, letters }
    }

    /// Underlying strand permutation `s_{x1} ∘ ... ∘ s_{xk}`. The strand that
    /// starts at position `i` ends at position `permutation().apply(i)`.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &l in &self.letters {
            p.right_mul_transposition(l.unsigned_abs() as usize - 1);
        }
        p
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Pairwise linking numbers of the strands, indexed by starting position.
    pub fn linking_matrix(&self) -> LinkingMatrix {
        let mut lk = LinkingMatrix::zero(self.strands);
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in self.letters.iter().rev() {
            let g = l.unsigned_abs() as usize - 1;
            let (a, b) = (at[g], at[g + 1]);
            lk.add_crossing(a, b, l.signum() as i64);
            at.swap(g, g + 1);
        }
        lk
    }

    pub fn normal_form(&self) -> NormalForm {
        NormalForm::from_word(self)
    }

    /// Group equality, decided by comparing Garside normal forms.
    pub fn equals(&self, other: &BraidWord) -> Result<bool> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        Ok(self.normal_form() == other.normal_form())
    }

    /// Parses whitespace-separated signed generator indices.
    pub fn parse(strands: usize, text: &str) -> Result<BraidWord> {
        let letters = text
            .split_whitespace()
            .map(|tok| i32::from_str(tok).map_err(|_| Error::Parse(format!("bad braid letter `{tok}`"))))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }
}

fn check_letter(letter: i32, strands: usize) -> Result<()> {
    let g = letter.unsigned_abs() as usize;
    if letter == 0 || g >= strands {
        return Err(Error::InvalidGenerator { letter, strands });
    }
    Ok(())
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
