//! Known relations on the spheres with 5, 6 and 7 boundary components,
//! end-to-end verification, and completeness audits against the design
//! enumeration.

mod audit;

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::lk_equal;
use crate::error::{Error, Result};
use crate::plumbing::euler_characteristic;
use crate::surface::{BoundaryWord, ConvexCurve, SurfaceSpec, TwistWord};

pub use audit::{completeness_check, AuditClass, AuditReport, GraphClass};

/// A claimed equality between a boundary-parallel product and a product of
/// twists over non-boundary-parallel convex curves.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    label: String,
    lhs: BoundaryWord,
    rhs: TwistWord,
    graph: Option<String>,
    tabulated_chi: Option<(i64, i64)>,
    correction: Option<String>,
}

impl Relation {
    pub fn new(label: impl Into<String>, lhs: BoundaryWord, rhs: TwistWord) -> Result<Self> {
        if lhs.surface() != rhs.surface() {
            return Err(Error::SurfaceMismatch(lhs.surface().n(), rhs.surface().n()));
        }
        for f in rhs.factors() {
            if f.is_boundary_parallel(rhs.surface()) {
                return Err(Error::BoundaryParallel(f.support(rhs.surface())));
            }
        }
        Ok(Relation { label: label.into(), lhs, rhs, graph: None, tabulated_chi: None, correction: None })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn lhs(&self) -> &BoundaryWord {
        &self.lhs
    }

    pub fn rhs(&self) -> &TwistWord {
        &self.rhs
    }

    pub fn surface(&self) -> SurfaceSpec {
        self.lhs.surface()
    }

    /// Name of the plumbing class the relation was listed under.
    pub fn graph(&self) -> Option<&str> {
        self.graph.as_deref()
    }

    /// Euler characteristics as tabulated alongside the relation, which
    /// may disagree with the computed values.
    pub fn tabulated_chi(&self) -> Option<(i64, i64)> {
        self.tabulated_chi
    }

    /// Note describing how the stored relation differs from its source.
    pub fn correction(&self) -> Option<&str> {
        self.correction.as_deref()
    }

    /// `(χ(lhs), χ(rhs))` from twist counts.
    pub fn chi(&self) -> (i64, i64) {
        (euler_characteristic(&self.lhs.to_twist_word()), euler_characteristic(&self.rhs))
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} = {}", self.label, self.lhs, self.rhs)
    }
}

#[derive(Deserialize)]
struct CatalogFile {
    n: usize,
    relations: Vec<Entry>,
}

#[derive(Deserialize)]
struct Entry {
    label: String,
    lhs: LhsEntry,
    rhs: Vec<Vec<usize>>,
    graph: String,
    tabulated_chi: (i64, i64),
    correction: Option<CorrectionEntry>,
}

#[derive(Deserialize)]
struct LhsEntry {
    exponents: Vec<usize>,
    outer: usize,
}

#[derive(Deserialize)]
struct CorrectionEntry {
    note: String,
}

const N5: &str = include_str!("data/n5.json");
const N6: &str = include_str!("data/n6.json");
const N7: &str = include_str!("data/n7.json");

/// The known relations on the sphere with `n` boundary components, in their
/// written factor order.
pub fn builtin(n: usize) -> Result<Vec<Relation>> {
    let text = match n {
        5 => N5,
        6 => N6,
        7 => N7,
        _ => return Err(Error::Unsupported(format!("no built-in relations for n = {n}"))),
    };
    let file: CatalogFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    debug_assert_eq!(file.n, n);
    let surface = SurfaceSpec::new(file.n)?;
    file.relations
        .into_iter()
        .map(|e| {
            let lhs = BoundaryWord::new(surface, e.lhs.exponents, e.lhs.outer)?;
            let rhs = TwistWord::new(surface, e.rhs.into_iter().map(ConvexCurve::around).collect())?;
            let mut r = Relation::new(e.label, lhs, rhs)?;
            r.graph = Some(e.graph);
            r.tabulated_chi = Some(e.tabulated_chi);
            r.correction = e.correction.map(|c| c.note);
            Ok(r)
        })
        .collect()
}

/// All built-in relations, ordered by `n` and then as listed.
pub fn builtin_all() -> Vec<Relation> {
    [5, 6, 7].into_iter().flat_map(|n| builtin(n).expect("embedded catalog parses")).collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub label: String,
    pub n: usize,
    pub braid_equal: bool,
    pub multiplicities_equal: bool,
    /// Outer-parallel factor counts on each side. Not part of the verdict.
    pub outer_counts: (usize, usize),
    /// Braids and interior multiplicities agree while outer counts differ.
    pub outer_mismatch: bool,
    pub lhs_chi: i64,
    pub rhs_chi: i64,
    /// Whether the Lawrence–Krammer oracle agrees with the normal-form
    /// verdict; absent when the oracle was skipped.
    pub oracle_agreement: Option<bool>,
    pub verified: bool,
}

/// Checks a relation: braid equality by normal forms, interior
/// multiplicities, Euler characteristics, and optionally the
/// Lawrence–Krammer oracle.
pub fn verify(relation: &Relation, oracle: bool) -> VerificationReport {
    verify_words(&relation.label, &relation.lhs.to_twist_word(), &relation.rhs, oracle)
        .expect("relation sides share a surface")
}

/// [`verify`] for an arbitrary pair of twist words.
pub fn verify_words(label: &str, lhs: &TwistWord, rhs: &TwistWord, oracle: bool) -> Result<VerificationReport> {
    let cmp = lhs.compare(rhs)?;
    let oracle_agreement = oracle.then(|| {
        let same = lk_equal::<BigInt>(&lhs.to_braid(), &rhs.to_braid()).expect("same strand count");
        same == cmp.braid_equal
    });
    Ok(VerificationReport {
        label: label.to_string(),
        n: lhs.surface().n(),
        braid_equal: cmp.braid_equal,
        multiplicities_equal: cmp.multiplicities_equal,
        outer_counts: cmp.outer_counts,
        outer_mismatch: cmp.outer_mismatch(),
        lhs_chi: euler_characteristic(lhs),
        rhs_chi: euler_characteristic(rhs),
        oracle_agreement,
        verified: cmp.equivalent(),
    })
}

/// Verifies relations in parallel; reports keep the input order.
pub fn verify_all(relations: &[Relation], oracle: bool) -> Vec<VerificationReport> {
    relations.par_iter().map(|r| verify(r, oracle)).collect()
}

/// A disagreement between a relation's tabulated data and what the tool
/// computes or stores.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Discrepancy {
    /// Tabulated Euler characteristics differ from `2 - n + k`.
    Chi { label: String, tabulated: (i64, i64), computed: (i64, i64) },
    /// The stored relation differs from its source transcription.
    Correction { label: String, note: String },
}

/// Every tabulated-value mismatch and transcription correction, in
/// catalog order. Computed values are the values of record.
pub fn discrepancies(relations: &[Relation]) -> Vec<Discrepancy> {
    let mut out = Vec::new();
    for r in relations {
        if let Some(tab) = r.tabulated_chi {
            let computed = r.chi();
            if tab != computed {
                out.push(Discrepancy::Chi { label: r.label.clone(), tabulated: tab, computed });
            }
        }
        if let Some(note) = &r.correction {
            out.push(Discrepancy::Correction { label: r.label.clone(), note: note.clone() });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_sizes() {
        assert_eq!(builtin(5).unwrap().len(), 2);
        assert_eq!(builtin(6).unwrap().len(), 7);
        assert_eq!(builtin(7).unwrap().len(), 16);
        assert!(matches!(builtin(8), Err(Error::Unsupported(_))));
    }

    #[test]
    fn rel9_and_rel10_share_a_plumbing_class() {
        let rels = builtin(7).unwrap();
        let (a, b) = (&rels[8], &rels[9]);
        assert_eq!(a.lhs().exponents(), &[3, 2, 3, 3, 3, 4]);
        assert_eq!(b.lhs().exponents(), &[3, 2, 3, 3, 4, 3]);
        let sorted = |r: &Relation| {
            let mut e = r.lhs().exponents().to_vec();
            e.sort_unstable();
            e
        };
        assert_eq!(sorted(a), sorted(b));
        assert_eq!(a.graph(), b.graph());
    }

    #[test]
    fn corrected_left_sides_are_forced() {
        use crate::designs::{feasible_replication, ReplicationVector};
        // (4,3,2,3,2,4) as replications.
        assert!(!feasible_replication(6, &ReplicationVector(vec![5, 4, 3, 4, 3, 5])));
        // The tabulated left side of rel10 disagrees with its right side.
        let rel10 = &builtin(7).unwrap()[9];
        let tabulated = BoundaryWord::new(rel10.surface(), vec![3, 2, 3, 3, 3, 4], 1).unwrap();
        let cmp = tabulated.to_twist_word().compare(rel10.rhs()).unwrap();
        assert!(cmp.braid_equal);
        assert!(!cmp.multiplicities_equal);
    }

    #[test]
    fn catalog_verifies_without_oracle() {
        for r in builtin_all() {
            let report = verify(&r, false);
            assert!(report.verified, "{r}: {report:?}");
            // One outer twist on the left, none on the right.
            assert_eq!(report.outer_counts, (1, 0));
            assert!(report.outer_mismatch);
            assert_eq!(report.oracle_agreement, None);
        }
    }

    #[test]
    fn small_catalog_agrees_with_oracle() {
        for r in builtin(5).unwrap() {
            assert_eq!(verify(&r, true).oracle_agreement, Some(true));
        }
    }

    #[test]
    fn rhs_designs_reproduce_lhs() {
        for r in builtin_all() {
            let d = crate::designs::Design::from_rhs(r.rhs()).unwrap();
            assert_eq!(&d.exponents(), r.lhs(), "{}", r.label());
        }
    }

    #[test]
    fn removing_a_block_breaks_multiplicities() {
        let r = &builtin(6).unwrap()[3];
        let mut factors = r.rhs().factors().to_vec();
        factors.pop();
        let broken = Relation::new("broken", r.lhs().clone(), TwistWord::new(r.surface(), factors).unwrap()).unwrap();
        let report = verify(&broken, false);
        assert!(!report.multiplicities_equal);
        assert!(!report.verified);
    }

    #[test]
    fn chi_discrepancies_are_reported() {
        let d = discrepancies(&builtin_all());
        let chi: Vec<&str> = d
            .iter()
            .filter_map(|x| match x {
                Discrepancy::Chi { label, .. } => Some(label.as_str()),
                _ => None,
            })
            .collect();
        assert_eq!(chi, vec!["n5-rel1", "n5-rel2", "n7-rel1"]);
        let rel1 = d.iter().find(|x| matches!(x, Discrepancy::Chi { label, .. } if label == "n7-rel1")).unwrap();
        assert_eq!(rel1, &Discrepancy::Chi { label: "n7-rel1".into(), tabulated: (16, 10), computed: (20, 10) });
    }

    #[test]
    fn chi_difference_is_twist_difference() {
        for r in builtin_all() {
            let (l, rr) = r.chi();
            assert_eq!(l - rr, r.lhs().twist_count() as i64 - r.rhs().len() as i64);
        }
    }

    #[test]
    fn rejects_boundary_parallel_rhs() {
        let s = SurfaceSpec::new(4).unwrap();
        let lhs = BoundaryWord::new(s, vec![1, 1, 1], 1).unwrap();
        let rhs = TwistWord::new(s, vec![ConvexCurve::around([1])]).unwrap();
        assert!(matches!(Relation::new("x", lhs, rhs), Err(Error::BoundaryParallel(_))));
    }
}
