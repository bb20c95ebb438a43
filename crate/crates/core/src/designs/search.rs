use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::Design;
use crate::braid::{BraidWord, DualNormalForm, NormalForm};
use crate::surface::swing_word;

/// Limits for [`search_orderings`].
#[derive(Clone, Debug)]
pub struct SearchBudget {
    /// Designs with at most this many blocks are searched exhaustively.
    pub exhaustive_cap: usize,
    /// Total search nodes (partial products) before giving up.
    pub max_nodes: u64,
    /// Stop a non-exhaustive search after this many orderings.
    pub max_orderings: usize,
    /// Orderings to try before searching, as indices into the design's
    /// blocks.
    pub seeds: Vec<Vec<usize>>,
    /// Seed for the randomized restarts.
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { exhaustive_cap: 8, max_nodes: 2_000_000, max_orderings: 16, seeds: Vec::new(), seed: 0x5eed }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchStatus {
    /// Every ordering was examined; `orderings` is complete.
    Exhausted,
    /// The search stopped early; `orderings` may be incomplete.
    Budget,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SearchReport {
    /// Realizing orderings as indices into [`Design::masks`], sorted.
    pub orderings: Vec<Vec<usize>>,
    pub status: SearchStatus,
    pub nodes: u64,
}

impl SearchReport {
    /// No ordering exists, and the search proves it.
    pub fn proven_empty(&self) -> bool {
        self.status == SearchStatus::Exhausted && self.orderings.is_empty()
    }
}

struct Problem {
    m: usize,
    supports: Vec<Vec<usize>>,
    /// Artin-side check for every ordering the search reports.
    swings: Vec<BraidWord>,
    target: NormalForm,
}

impl Problem {
    fn new(design: &Design) -> Self {
        let k = design.len();
        let word = design.ordered_word(&(0..k).collect::<Vec<_>>());
        let surface = word.surface();
        Problem {
            m: design.points(),
            supports: word.factors().iter().map(|f| f.support(surface)).collect(),
            swings: word.factors().iter().map(|f| swing_word(f, surface).expect("design blocks are valid")).collect(),
            target: NormalForm::from_word(&BraidWord::full_twist(design.points())),
        }
    }

    /// Whether the written order realizes the full twist, by Artin normal
    /// forms.
    fn confirms(&self, order: &[usize]) -> bool {
        let mut nf = NormalForm::identity(self.m);
        for &i in order {
            nf.push_word(&self.swings[i]);
        }
        nf == self.target
    }
}

/// Depth-first search in the dual monoid.
///
/// A written order `x_1 ⋯ x_k` realizes the full twist exactly when the
/// reversed product of inverse swings, each positive here, equals `δ^m`.
/// Every prefix of such a product divides `δ^m`, so prefixes with
/// supremum above `m` are cut. Prefixes are keyed by the blocks used and
/// their normal form; subtrees known to contain no solution are kept in
/// `dead`.
struct Dfs<'a> {
    problem: &'a Problem,
    dead: HashSet<(u32, DualNormalForm)>,
    nodes: u64,
    limit: u64,
    truncated: bool,
    /// Reversed orders found, in search order.
    found: Vec<Vec<usize>>,
    stop_after: usize,
    rng: Option<ChaCha8Rng>,
}

impl Dfs<'_> {
    /// Returns whether the subtree contains a solution.
    fn run(&mut self, used: u32, nf: &DualNormalForm, prefix: &mut Vec<usize>) -> bool {
        let k = self.problem.supports.len();
        if prefix.len() == k {
            if nf.is_delta_power(self.problem.m) {
                self.found.push(prefix.clone());
                return true;
            }
            return false;
        }
        if self.dead.contains(&(used, nf.clone())) {
            return false;
        }
        let mut children: Vec<usize> = (0..k).filter(|&i| used >> i & 1 == 0).collect();
        if let Some(rng) = self.rng.as_mut() {
            children.shuffle(rng);
        }
        let mut any = false;
        let truncated_before = self.truncated;
        for i in children {
            if self.nodes >= self.limit || self.found.len() >= self.stop_after {
                self.truncated = true;
                break;
            }
            self.nodes += 1;
            let mut next = nf.clone();
            next.push_positive_twist(&self.problem.supports[i]);
            if next.supremum() > self.problem.m {
                continue;
            }
            prefix.push(i);
            any |= self.run(used | 1 << i, &next, prefix);
            prefix.pop();
        }
        if !any && self.truncated == truncated_before {
            self.dead.insert((used, nf.clone()));
        }
        any
    }
}

/// Written orders from reversed orders found with block 0 first: every
/// cyclic rotation, since the full twist is central.
fn expand(problem: &Problem, reversed: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for y in reversed {
        let mut x: Vec<usize> = y.iter().rev().copied().collect();
        assert!(problem.confirms(&x), "dual and Artin normal forms disagree on {x:?}");
        for _ in 0..x.len() {
            out.push(x.clone());
            x.rotate_left(1);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Orderings of the blocks whose twist product has the braid of the outer
/// twist. Small designs are searched exhaustively, in parallel over the
/// second factor; larger ones try `budget.seeds` and then randomized
/// restarts, and are still reported exhausted if a restart completes.
/// Output does not depend on scheduling.
pub fn search_orderings(design: &Design, budget: &SearchBudget) -> SearchReport {
    let problem = Problem::new(design);
    let k = design.len();
    let m = problem.m;
    let mut first = DualNormalForm::identity(m);
    first.push_positive_twist(&problem.supports[0]);

    if k <= budget.exhaustive_cap {
        let per_branch = (budget.max_nodes / k.max(1) as u64).max(1);
        let branches: Vec<Dfs> = (1..k)
            .into_par_iter()
            .map(|second| {
                let mut dfs = Dfs {
                    problem: &problem,
                    dead: HashSet::new(),
                    nodes: 1,
                    limit: per_branch,
                    truncated: false,
                    found: Vec::new(),
                    stop_after: usize::MAX,
                    rng: None,
                };
                let mut nf = first.clone();
                nf.push_positive_twist(&problem.supports[second]);
                if nf.supremum() <= m {
                    dfs.run(1 | 1 << second, &nf, &mut vec![0, second]);
                }
                dfs
            })
            .collect();
        let found: Vec<Vec<usize>> = branches.iter().flat_map(|b| b.found.clone()).collect();
        let truncated = branches.iter().any(|b| b.truncated);
        return SearchReport {
            orderings: expand(&problem, &found),
            status: if truncated { SearchStatus::Budget } else { SearchStatus::Exhausted },
            nodes: branches.iter().map(|b| b.nodes).sum(),
        };
    }

    let mut orderings: Vec<Vec<usize>> = Vec::new();
    let mut nodes = 0u64;
    for seed in &budget.seeds {
        nodes += 1;
        if is_permutation(seed, k) && problem.confirms(seed) {
            orderings.push(seed.clone());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let restart_nodes = 50_000.min(budget.max_nodes.max(1));
    let mut complete = false;
    let mut dead = HashSet::new();
    let mut found = Vec::new();
    while orderings.len() + found.len() < budget.max_orderings && nodes < budget.max_nodes {
        let mut dfs = Dfs {
            problem: &problem,
            dead: std::mem::take(&mut dead),
            nodes: 0,
            limit: restart_nodes.min(budget.max_nodes - nodes),
            truncated: false,
            found: Vec::new(),
            stop_after: budget.max_orderings - orderings.len() - found.len(),
            rng: Some(ChaCha8Rng::seed_from_u64(rand::Rng::gen(&mut rng))),
        };
        dfs.run(1, &first, &mut vec![0]);
        nodes += dfs.nodes;
        for y in dfs.found.drain(..) {
            if !found.contains(&y) {
                found.push(y);
            }
        }
        dead = dfs.dead;
        if !dfs.truncated {
            complete = true;
            break;
        }
    }
    orderings.extend(expand(&problem, &found));
    orderings.sort();
    orderings.dedup();
    SearchReport { orderings, status: if complete { SearchStatus::Exhausted } else { SearchStatus::Budget }, nodes }
}

fn is_permutation(order: &[usize], k: usize) -> bool {
    let mut seen = vec![false; k];
    order.len() == k && order.iter().all(|&i| i < k && !std::mem::replace(&mut seen[i], true))
}
