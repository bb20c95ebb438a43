use std::fmt;

/// A bijection on `0..len`, stored as its image table.
///
/// Composition follows function notation: `a.compose(&b)` maps `i` to
/// `a(b(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(len: usize) -> Self {
        Permutation { images: (0..len).collect() }
    }

    /// Builds a permutation from 0-based images. Returns `None` unless the
    /// table is a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation { images })
    }

    /// Adjacent transposition swapping `i` and `i + 1` (0-based).
    pub fn transposition(len: usize, i: usize) -> Self {
        let mut p = Self::identity(len);
        p.images.swap(i, i + 1);
        p
    }

    /// The order-reversing permutation `i -> len - 1 - i`.
    pub fn reversal(len: usize) -> Self {
        Permutation { images: (0..len).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Number of inversions, i.e. the length of a reduced word.
    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// In place `self <- self ∘ s_i`.
    #[inline]
    pub(crate) fn right_mul_transposition(&mut self, i: usize) {
        self.images.swap(i, i + 1);
    }

    /// In place `self <- s_i ∘ self`.
    #[inline]
    pub(crate) fn left_mul_transposition(&mut self, i: usize) {
        for x in self.images.iter_mut() {
            if *x == i {
                *x = i + 1;
            } else if *x == i + 1 {
                *x = i;
            }
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images.iter().map(|x| x + 1).collect::<Vec<_>>())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "]")
    }
}
