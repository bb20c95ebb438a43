use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{builtin, Relation};
use crate::designs::{enumerate, mask_of, search_orderings, Design, SearchBudget, SearchStatus, SymmetryMode};
use crate::error::{Error, Result};
use crate::surface::BoundaryWord;

/// Search outcome for one symmetry class of designs.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AuditClass {
    pub design: Design,
    pub exponents: BoundaryWord,
    pub orderings_found: usize,
    pub status: SearchStatus,
    /// Some built-in relation's curve system lies in this class.
    pub matches_catalog: bool,
    pub catalog_labels: Vec<String>,
    /// A realizing product in written order, if one was found.
    pub example: Option<Vec<Vec<usize>>>,
    pub nodes: u64,
}

impl AuditClass {
    pub fn realizable(&self) -> bool {
        self.orderings_found > 0
    }

    pub fn proven_unrealizable(&self) -> bool {
        self.orderings_found == 0 && self.status == SearchStatus::Exhausted
    }
}

/// Design classes grouped by the multiset of left-side exponents, which
/// determines the plumbing graph.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GraphClass {
    /// Exponents sorted ascending.
    pub exponents: Vec<usize>,
    /// Graph names of built-in relations with these exponents.
    pub catalog_graphs: Vec<String>,
    pub design_classes: usize,
    pub realizable: bool,
    /// Every design class in the group was searched exhaustively and none
    /// is realizable.
    pub proven_unrealizable: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AuditReport {
    pub n: usize,
    pub mode: SymmetryMode,
    pub classes: Vec<AuditClass>,
    pub realizable_classes: usize,
    /// Built-in relations whose class was not found realizable.
    pub unmatched_catalog: Vec<String>,
    /// Realizable classes that no built-in relation belongs to.
    pub uncatalogued_realizable: usize,
    pub graphs: Vec<GraphClass>,
}

impl AuditReport {
    /// Every class was searched to completion.
    pub fn exhaustive(&self) -> bool {
        self.classes.iter().all(|c| c.status == SearchStatus::Exhausted)
    }
}

/// Enumerates the designs on `n - 1` points up to `mode`, searches each
/// class for a realizing ordering, and compares the outcome with the
/// built-in relations. Orderings of built-in relations, moved into each
/// class by rotations and reflections, are used as search seeds.
pub fn completeness_check(n: usize, mode: SymmetryMode, budget: &SearchBudget) -> Result<AuditReport> {
    if !(5..=7).contains(&n) {
        return Err(Error::Unsupported(format!("completeness audit supports n = 5, 6, 7; got {n}")));
    }
    let m = n - 1;
    let catalog = builtin(n)?;
    let reps = enumerate(m, mode)?;
    let dihedral = SymmetryMode::Dihedral.group(m);

    let classes: Vec<AuditClass> = reps
        .par_iter()
        .map(|rep| {
            let mut labels = Vec::new();
            let mut seeds = budget.seeds.clone();
            for r in &catalog {
                let d = Design::from_rhs(r.rhs()).expect("catalog designs are valid");
                if mode.canonical(&d) != *rep {
                    continue;
                }
                labels.push(r.label().to_string());
                for g in &dihedral {
                    if g.apply(&d) == *rep {
                        seeds.push(mapped_order(r, rep, g));
                    }
                }
            }
            let search = search_orderings(rep, &SearchBudget { seeds, ..budget.clone() });
            AuditClass {
                design: rep.clone(),
                exponents: rep.exponents(),
                orderings_found: search.orderings.len(),
                status: search.status,
                matches_catalog: !labels.is_empty(),
                catalog_labels: labels,
                example: search.orderings.first().map(|o| {
                    rep.ordered_word(o).factors().iter().map(|f| f.support(rep.exponents().surface())).collect()
                }),
                nodes: search.nodes,
            }
        })
        .collect();

    let unmatched_catalog = catalog
        .iter()
        .filter(|r| !classes.iter().any(|c| c.realizable() && c.catalog_labels.iter().any(|l| l == r.label())))
        .map(|r| r.label().to_string())
        .collect();
    let mut groups: BTreeMap<Vec<usize>, Vec<&AuditClass>> = BTreeMap::new();
    for c in &classes {
        let mut e = c.exponents.exponents().to_vec();
        e.sort_unstable();
        groups.entry(e).or_default().push(c);
    }
    let graphs = groups
        .into_iter()
        .map(|(exponents, members)| {
            let mut catalog_graphs: Vec<String> = catalog
                .iter()
                .filter(|r| {
                    let mut e = r.lhs().exponents().to_vec();
                    e.sort_unstable();
                    e == exponents
                })
                .filter_map(|r| r.graph().map(str::to_string))
                .collect();
            catalog_graphs.sort();
            catalog_graphs.dedup();
            GraphClass {
                exponents,
                catalog_graphs,
                design_classes: members.len(),
                realizable: members.iter().any(|c| c.realizable()),
                proven_unrealizable: members.iter().all(|c| c.proven_unrealizable()),
            }
        })
        .collect();

    Ok(AuditReport {
        n,
        mode,
        realizable_classes: classes.iter().filter(|c| c.realizable()).count(),
        uncatalogued_realizable: classes.iter().filter(|c| c.realizable() && !c.matches_catalog).count(),
        unmatched_catalog,
        classes,
        graphs,
    })
}

/// The relation's factor order carried to `rep` by the relabeling `g`, as
/// indices into `rep`'s blocks. Orientation-reversing relabelings reverse
/// the product.
fn mapped_order(r: &Relation, rep: &Design, g: &crate::designs::Relabeling) -> Vec<usize> {
    let surface = r.surface();
    let mut order: Vec<usize> = r
        .rhs()
        .factors()
        .iter()
        .map(|f| {
            let mask = g.apply_mask(mask_of(&f.support(surface)));
            rep.masks().iter().position(|&b| b == mask).expect("g maps the design onto rep")
        })
        .collect();
    if g.reverses {
        order.reverse();
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_boundary_audit() {
        let report = completeness_check(5, SymmetryMode::Dihedral, &SearchBudget::default()).unwrap();
        assert_eq!(report.classes.len(), 2);
        assert_eq!(report.realizable_classes, 2);
        assert!(report.exhaustive());
        assert!(report.unmatched_catalog.is_empty());
        assert_eq!(report.uncatalogued_realizable, 0);
    }

    #[test]
    fn rejects_other_sizes() {
        assert!(completeness_check(4, SymmetryMode::Dihedral, &SearchBudget::default()).is_err());
    }
}
