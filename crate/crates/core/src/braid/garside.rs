//! Garside left-greedy normal form for the classical braid monoid.
//!
//! A braid is written `Δ^inf · A₁ ⋯ A_r` where each `A_i` is a permutation
//! braid (a positive braid in which every pair of strands crosses at most
//! once), none is trivial or equal to `Δ`, and every adjacent pair is
//! left-weighted: each generator that left-divides `A_{i+1}` also
//! right-divides `A_i`.
//!
//! Permutation braids are identified with their permutations using the
//! same function-order convention as [`BraidWord::permutation`].

use super::{BraidWord, Permutation};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NormalForm {
    strands: usize,
    infimum: i64,
    factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn identity(strands: usize) -> Self {
        NormalForm { strands, infimum: 0, factors: Vec::new() }
    }

    pub fn from_word(word: &BraidWord) -> Self {
        let mut nf = Self::identity(word.strands());
        nf.push_word(word);
        nf
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    pub fn supremum(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// Right-multiplies by every letter of `word` in turn.
    pub fn push_word(&mut self, word: &BraidWord) {
        assert_eq!(word.strands(), self.strands);
        for &l in word.letters() {
            self.push_letter(l);
        }
    }

    pub fn push_letter(&mut self, letter: i32) {
        let g = letter.unsigned_abs() as usize - 1;
        let m = self.strands;
        if letter > 0 {
            self.push_simple(Permutation::transposition(m, g));
        } else {
            // σ_g⁻¹ = Δ⁻¹ · (Δ σ_g⁻¹), and A·Δ⁻¹ = Δ⁻¹·τ(A).
            let delta = Permutation::reversal(m);
            for f in self.factors.iter_mut() {
                *f = delta.compose(f).compose(&delta);
            }
            self.infimum -= 1;
            let mut complement = delta;
            complement.right_mul_transposition(g);
            self.push_simple(complement);
        }
    }

    /// Right-multiplies by the simple element `x` and restores the normal
    /// form with a single right-to-left sliding pass.
    fn push_simple(&mut self, x: Permutation) {
        if x.is_identity() {
            return;
        }
        self.factors.push(x);
        let mut i = self.factors.len() - 1;
        while i > 0 {
            let (left, right) = self.factors.split_at_mut(i);
            if !left_weight(&mut left[i - 1], &mut right[0]) {
                break;
            }
            i -= 1;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
        let delta = Permutation::reversal(self.strands);
        let leading = self.factors.iter().take_while(|f| **f == delta).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.infimum += leading as i64;
        }
    }

    /// Expands back into a braid word: `Δ^inf` followed by a reduced word
    /// for each factor.
    pub fn to_word(&self) -> BraidWord {
        let m = self.strands;
        let delta_word = reduced_word(&Permutation::reversal(m));
        let mut letters = Vec::new();
        for _ in 0..self.infimum.unsigned_abs() {
            if self.infimum > 0 {
                letters.extend(delta_word.iter().map(|&g| g as i32 + 1));
            } else {
                letters.extend(delta_word.iter().rev().map(|&g| -(g as i32 + 1)));
            }
        }
        for f in &self.factors {
            letters.extend(reduced_word(f).iter().map(|&g| g as i32 + 1));
        }
        BraidWord::new(m, letters).expect("normal form letters are in range")
    }

    /// Checks the structural invariants of a normal form.
    pub fn is_well_formed(&self) -> bool {
        let delta = Permutation::reversal(self.strands);
        if self.factors.iter().any(|f| f.is_identity() || *f == delta) {
            return false;
        }
        self.factors.windows(2).all(|pair| {
            let (a, b) = (&pair[0], &pair[1]);
            let b_inv = b.inverse();
            (0..self.strands.saturating_sub(1))
                .filter(|&j| b_inv.apply(j) > b_inv.apply(j + 1))
                .all(|j| a.apply(j) > a.apply(j + 1))
        })
    }
}

/// Moves generators from the front of `b` to the back of `a` while `a`
/// stays simple. Returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let m = a.len();
    let mut b_inv = b.inverse();
    let mut moved = false;
    loop {
        // σ_j left-divides b  ⟺  b⁻¹(j) > b⁻¹(j+1);
        // a·σ_j is simple     ⟺  a(j) < a(j+1).
        let found =
            (0..m.saturating_sub(1)).find(|&j| b_inv.apply(j) > b_inv.apply(j + 1) && a.apply(j) < a.apply(j + 1));
        match found {
            Some(j) => {
                a.right_mul_transposition(j);
                b.left_mul_transposition(j);
                b_inv.right_mul_transposition(j);
                moved = true;
            }
            None => return moved,
        }
    }
}

/// A reduced word (0-based generator indices, function order) for a
/// permutation braid.
fn reduced_word(p: &Permutation) -> Vec<usize> {
    let mut p = p.clone();
    let mut letters = Vec::new();
    while let Some(j) = (0..p.len().saturating_sub(1)).find(|&j| p.apply(j) > p.apply(j + 1)) {
        p.right_mul_transposition(j);
        letters.push(j);
    }
    letters.reverse();
    letters
}
