use std::collections::HashSet;

use super::{BlockMask, Design, ReplicationVector, SymmetryMode};
use crate::error::{Error, Result};

pub const MIN_POINTS: usize = 3;
pub const MAX_POINTS: usize = 7;

/// Exact-cover instance: columns are the pairs of points, rows are the
/// candidate blocks (every subset of size `2..m`).
struct Cover {
    m: usize,
    /// Pair bitmask of each candidate block, indexed by block mask.
    pair_bits: Vec<u64>,
    /// Candidate blocks through each pair.
    through: Vec<Vec<BlockMask>>,
}

fn pair_index(m: usize, x: usize, y: usize) -> usize {
    debug_assert!(x < y && y < m);
    x * (2 * m - x - 1) / 2 + (y - x - 1)
}

impl Cover {
    fn new(m: usize) -> Self {
        let pairs = m * (m - 1) / 2;
        let mut pair_bits = vec![0u64; 1 << m];
        let mut through = vec![Vec::new(); pairs];
        for block in 1..(1u32 << m) {
            let size = block.count_ones() as usize;
            if size < 2 || size >= m {
                continue;
            }
            let pts: Vec<usize> = (0..m).filter(|&x| block >> x & 1 == 1).collect();
            let mut bits = 0u64;
            for (i, &x) in pts.iter().enumerate() {
                for &y in &pts[i + 1..] {
                    let p = pair_index(m, x, y);
                    bits |= 1 << p;
                    through[p].push(block);
                }
            }
            pair_bits[block as usize] = bits;
        }
        Cover { m, pair_bits, through }
    }

    fn full(&self) -> u64 {
        let pairs = self.m * (self.m - 1) / 2;
        if pairs == 64 {
            u64::MAX
        } else {
            (1u64 << pairs) - 1
        }
    }

    /// Algorithm X: always branch on the lowest uncovered pair.
    fn solve(&self, covered: u64, chosen: &mut Vec<BlockMask>, visit: &mut dyn FnMut(&[BlockMask]) -> bool) -> bool {
        if covered == self.full() {
            return visit(chosen);
        }
        let p = (!covered).trailing_zeros() as usize;
        for &block in &self.through[p] {
            let bits = self.pair_bits[block as usize];
            if bits & covered != 0 {
                continue;
            }
            chosen.push(block);
            let stop = self.solve(covered | bits, chosen, visit);
            chosen.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

fn check_points(m: usize) -> Result<()> {
    if !(MIN_POINTS..=MAX_POINTS).contains(&m) {
        return Err(Error::OutOfRange(format!("m = {m}; enumeration supports {MIN_POINTS} <= m <= {MAX_POINTS}")));
    }
    Ok(())
}

/// Every design on `m` labeled points, sorted.
pub fn enumerate_labeled(m: usize) -> Result<Vec<Design>> {
    check_points(m)?;
    let cover = Cover::new(m);
    let mut out = Vec::new();
    cover.solve(0, &mut Vec::new(), &mut |blocks| {
        out.push(Design::from_masks_unchecked(m, blocks.to_vec()));
        false
    });
    out.sort();
    Ok(out)
}

/// One canonical representative per symmetry class, sorted.
pub fn enumerate(m: usize, mode: SymmetryMode) -> Result<Vec<Design>> {
    let labeled = enumerate_labeled(m)?;
    if mode == SymmetryMode::Labeled {
        return Ok(labeled);
    }
    let group = mode.group(m);
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for d in labeled {
        if seen.contains(&d) {
            continue;
        }
        let orbit: Vec<Design> = group.iter().map(|g| g.apply(&d)).collect();
        reps.push(orbit.iter().min().expect("orbit contains d").clone());
        seen.extend(orbit);
    }
    reps.sort();
    Ok(reps)
}

/// Whether some design on `m` points has exactly the replication numbers
/// `r` (point `x` lies in `r[x - 1]` blocks).
pub fn feasible_replication(m: usize, r: &ReplicationVector) -> bool {
    if r.0.len() != m || !(2..=MAX_POINTS + 1).contains(&m) {
        return false;
    }
    // Each block through x covers at least one pair at x, and the pairs at
    // x are split among its blocks, so 1 <= r_x <= m - 1 when m >= 2.
    if r.0.iter().any(|&k| k == 0 || k >= m) {
        return false;
    }
    let cover = Cover::new(m);
    let mut remaining = r.0.clone();
    feasible(&cover, 0, &mut remaining)
}

fn feasible(cover: &Cover, covered: u64, remaining: &mut [usize]) -> bool {
    let m = cover.m;
    if covered == cover.full() {
        return remaining.iter().all(|&k| k == 0);
    }
    // Uncovered pairs at x must be shared among its remaining blocks.
    for (x, &left) in remaining.iter().enumerate().take(m) {
        let open = (0..m).filter(|&y| y != x && covered >> pair_index(m, x.min(y), x.max(y)) & 1 == 0).count();
        if left > open || (open > 0 && left == 0) {
            return false;
        }
    }
    let p = (!covered).trailing_zeros() as usize;
    for &block in &cover.through[p] {
        let bits = cover.pair_bits[block as usize];
        if bits & covered != 0 {
            continue;
        }
        let pts: Vec<usize> = (0..m).filter(|&x| block >> x & 1 == 1).collect();
        if pts.iter().any(|&x| remaining[x] == 0) {
            continue;
        }
        pts.iter().for_each(|&x| remaining[x] -= 1);
        let found = feasible(cover, covered | bits, remaining);
        pts.iter().for_each(|&x| remaining[x] += 1);
        if found {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(r: &[usize]) -> ReplicationVector {
        ReplicationVector(r.to_vec())
    }

    #[test]
    fn class_counts() {
        assert_eq!(enumerate(4, SymmetryMode::Dihedral).unwrap().len(), 2);
        assert_eq!(enumerate(5, SymmetryMode::Symmetric).unwrap().len(), 4);
        assert_eq!(enumerate(5, SymmetryMode::Dihedral).unwrap().len(), 7);
        assert_eq!(enumerate(5, SymmetryMode::Labeled).unwrap().len(), 31);
        // m = 3: only the three pairs.
        assert_eq!(enumerate_labeled(3).unwrap().len(), 1);
    }

    #[test]
    fn m4_classes_are_all_pairs_and_triple() {
        let reps = enumerate(4, SymmetryMode::Dihedral).unwrap();
        let mut shapes: Vec<Vec<usize>> = reps.iter().map(|d| d.block_sizes()).collect();
        shapes.sort();
        assert_eq!(shapes, vec![vec![2, 2, 2, 2, 2, 2], vec![3, 2, 2, 2]]);
    }

    #[test]
    fn enumerated_designs_are_linear_spaces() {
        for m in 3..=6 {
            for d in enumerate_labeled(m).unwrap() {
                assert!(Design::new(m, &d.blocks()).is_ok(), "{d}");
                let pairs: usize = d.block_sizes().iter().map(|k| k * (k - 1) / 2).sum();
                assert_eq!(pairs, m * (m - 1) / 2);
            }
        }
    }

    #[test]
    fn feasibility_examples() {
        assert!(!feasible_replication(4, &rv(&[2, 2, 2, 2])));
        assert!(feasible_replication(3, &rv(&[2, 2, 2])));
        assert!(!feasible_replication(5, &rv(&[2, 2, 2, 2, 3])));
        assert!(feasible_replication(4, &rv(&[2, 2, 2, 3])));
        assert!(feasible_replication(6, &rv(&[3, 3, 3, 3, 3, 3])));
        assert!(!feasible_replication(4, &rv(&[2, 2, 2])));
    }

    #[test]
    fn feasibility_matches_enumeration() {
        for m in 3..=6 {
            let found: HashSet<Vec<usize>> = enumerate_labeled(m).unwrap().iter().map(|d| d.replication().0).collect();
            // Every vector with entries in 2..m.
            let mut r = vec![2; m];
            loop {
                assert_eq!(feasible_replication(m, &rv(&r)), found.contains(&r), "{r:?}");
                let Some(i) = r.iter().position(|&k| k < m - 1) else { break };
                r[i] += 1;
                r[..i].iter_mut().for_each(|k| *k = 2);
            }
        }
    }

    #[test]
    fn range_is_checked() {
        assert!(enumerate(2, SymmetryMode::Labeled).is_err());
        assert!(enumerate(8, SymmetryMode::Labeled).is_err());
    }
}
