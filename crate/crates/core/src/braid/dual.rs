//! Left normal forms in the dual braid monoid, whose atoms are the band
//! generators `a_{ts} = (σ_{t-1} ⋯ σ_{s+1}) σ_s (σ_{t-1} ⋯ σ_{s+1})⁻¹`.
//!
//! Simple elements are the non-crossing partitions of the strands: the
//! block `{b_1 < ⋯ < b_k}` stands for `δ_B = a_{b_k b_{k-1}} ⋯ a_{b_2 b_1}`,
//! and the Garside element is `δ = σ_{m-1} ⋯ σ_1`, with `δ^m = Δ²`.
//! The positive full twist of a convex set of strands is `δ_B^{|B|}`, so
//! inverse swings are positive here even though they are not positive
//! Artin braids. Only right multiplication by positive elements is
//! supported; that is all the ordering search needs.

use super::BraidWord;

/// Largest supported strand count.
pub const MAX_DUAL_STRANDS: usize = 16;

/// A simple element, stored as its non-crossing partition: `label[x]` is
/// the smallest member of the block containing `x`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct DualSimple {
    m: u8,
    label: [u8; MAX_DUAL_STRANDS],
}

type Perm = [u8; MAX_DUAL_STRANDS];

impl DualSimple {
    pub fn identity(m: usize) -> Self {
        assert!((1..=MAX_DUAL_STRANDS).contains(&m), "unsupported strand count {m}");
        let mut label = [0; MAX_DUAL_STRANDS];
        for (x, l) in label.iter_mut().enumerate().take(m) {
            *l = x as u8;
        }
        DualSimple { m: m as u8, label }
    }

    /// `δ_B` for a block of 1-based strand labels.
    pub fn block(m: usize, support: &[usize]) -> Self {
        let mut s = Self::identity(m);
        if let Some(&first) = support.iter().min() {
            for &x in support {
                assert!((1..=m).contains(&x), "strand {x} out of range");
                s.label[x - 1] = (first - 1) as u8;
            }
        }
        s
    }

    pub fn delta(m: usize) -> Self {
        Self::block(m, &(1..=m).collect::<Vec<_>>())
    }

    pub fn strands(&self) -> usize {
        self.m as usize
    }

    pub fn is_identity(&self) -> bool {
        (0..self.m as usize).all(|x| self.label[x] == x as u8)
    }

    pub fn is_delta(&self) -> bool {
        (0..self.m as usize).all(|x| self.label[x] == 0)
    }

    /// Blocks with at least two strands, each sorted, 0-based.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let m = self.m as usize;
        (0..m)
            .filter(|&x| self.label[x] == x as u8)
            .map(|first| (first..m).filter(|&y| self.label[y] as usize == first).collect::<Vec<_>>())
            .filter(|b| b.len() > 1)
            .collect()
    }

    /// Strand permutation, in the convention of [`BraidWord::permutation`]:
    /// each block is the cycle `b_i ↦ b_{i-1}`, `b_1 ↦ b_k`.
    fn perm(&self) -> Perm {
        let m = self.m as usize;
        let mut p = [0u8; MAX_DUAL_STRANDS];
        let mut last = [u8::MAX; MAX_DUAL_STRANDS];
        for (x, px) in p.iter_mut().enumerate().take(m) {
            let l = self.label[x] as usize;
            *px = if last[l] != u8::MAX { last[l] } else { x as u8 };
            last[l] = x as u8;
        }
        // The smallest member maps to the largest.
        for x in 0..m {
            if self.label[x] == x as u8 {
                p[x] = last[x];
            }
        }
        p
    }

    fn from_perm(m: u8, p: &Perm) -> Self {
        let mut label = [u8::MAX; MAX_DUAL_STRANDS];
        for x in 0..m as usize {
            if label[x] != u8::MAX {
                continue;
            }
            let mut y = x;
            loop {
                label[y] = x as u8;
                y = p[y] as usize;
                if y == x {
                    break;
                }
            }
        }
        DualSimple { m, label }
    }

    /// Greatest common divisor: the common refinement of the partitions.
    fn meet(&self, other: &DualSimple) -> DualSimple {
        let m = self.m as usize;
        let mut label = [0u8; MAX_DUAL_STRANDS];
        for (x, lx) in label.iter_mut().enumerate().take(m) {
            *lx = (0..=x)
                .find(|&y| self.label[y] == self.label[x] && other.label[y] == other.label[x])
                .expect("x itself matches") as u8;
        }
        DualSimple { m: self.m, label }
    }

    /// `self⁻¹ δ`.
    fn complement(&self) -> DualSimple {
        let m = self.m as usize;
        let a = self.perm();
        let mut inv = [0u8; MAX_DUAL_STRANDS];
        for x in 0..m {
            inv[a[x] as usize] = x as u8;
        }
        // δ: x ↦ x - 1 cyclically.
        let mut p = [0u8; MAX_DUAL_STRANDS];
        for x in 0..m {
            p[x] = inv[(x + m - 1) % m];
        }
        DualSimple::from_perm(self.m, &p)
    }

    /// `self · other`, assuming the product is simple.
    fn mul(&self, other: &DualSimple) -> DualSimple {
        let (a, b) = (self.perm(), other.perm());
        let mut p = [0u8; MAX_DUAL_STRANDS];
        for x in 0..self.m as usize {
            p[x] = a[b[x] as usize];
        }
        DualSimple::from_perm(self.m, &p)
    }

    /// `self⁻¹ · other`, assuming `self` divides `other`.
    fn left_quotient(&self, other: &DualSimple) -> DualSimple {
        let (a, b) = (self.perm(), other.perm());
        let mut inv = [0u8; MAX_DUAL_STRANDS];
        for x in 0..self.m as usize {
            inv[a[x] as usize] = x as u8;
        }
        let mut p = [0u8; MAX_DUAL_STRANDS];
        for x in 0..self.m as usize {
            p[x] = inv[b[x] as usize];
        }
        DualSimple::from_perm(self.m, &p)
    }

    /// Artin word: product over blocks of `δ_B` in band generators.
    pub fn to_word(&self) -> BraidWord {
        let mut letters = Vec::new();
        for block in self.blocks() {
            for w in block.windows(2).rev() {
                let (s, t) = (w[0] + 1, w[1] + 1);
                let conj: Vec<i32> = (s + 1..t).rev().map(|g| g as i32).collect();
                letters.extend(&conj);
                letters.push(s as i32);
                letters.extend(conj.iter().rev().map(|g| -g));
            }
        }
        BraidWord::new(self.m as usize, letters).expect("band letters are in range")
    }
}

/// `δ^inf · x_1 ⋯ x_r` with every adjacent pair left-weighted.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DualNormalForm {
    m: u8,
    infimum: u32,
    factors: Vec<DualSimple>,
}

impl DualNormalForm {
    pub fn identity(m: usize) -> Self {
        assert!((1..=MAX_DUAL_STRANDS).contains(&m), "unsupported strand count {m}");
        DualNormalForm { m: m as u8, infimum: 0, factors: Vec::new() }
    }

    pub fn infimum(&self) -> usize {
        self.infimum as usize
    }

    /// Smallest `k` with this element dividing `δ^k`.
    pub fn supremum(&self) -> usize {
        self.infimum as usize + self.factors.len()
    }

    pub fn factors(&self) -> &[DualSimple] {
        &self.factors
    }

    /// Whether the element is exactly `δ^k`.
    pub fn is_delta_power(&self, k: usize) -> bool {
        self.factors.is_empty() && self.infimum as usize == k
    }

    pub fn push_simple(&mut self, x: DualSimple) {
        if x.is_identity() {
            return;
        }
        self.factors.push(x);
        let mut i = self.factors.len() - 1;
        while i > 0 {
            let (a, b) = (self.factors[i - 1], self.factors[i]);
            let t = a.complement().meet(&b);
            if t.is_identity() {
                break;
            }
            self.factors[i - 1] = a.mul(&t);
            self.factors[i] = t.left_quotient(&b);
            i -= 1;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
        let leading = self.factors.iter().take_while(|f| f.is_delta()).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.infimum += leading as u32;
        }
    }

    /// Right-multiplies by the positive full twist of a set of strands
    /// (1-based labels), i.e. by `δ_B^{|B|}`.
    pub fn push_positive_twist(&mut self, support: &[usize]) {
        let s = DualSimple::block(self.m as usize, support);
        for _ in 0..support.len() {
            self.push_simple(s);
        }
    }

    pub fn to_word(&self) -> BraidWord {
        let m = self.m as usize;
        let delta = DualSimple::delta(m).to_word();
        let mut letters = Vec::new();
        for _ in 0..self.infimum {
            letters.extend_from_slice(delta.letters());
        }
        for f in &self.factors {
            letters.extend_from_slice(f.to_word().letters());
        }
        BraidWord::new(m, letters).expect("letters are in range")
    }
}
