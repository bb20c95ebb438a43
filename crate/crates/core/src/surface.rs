//! Products of positive Dehn twists over convex curves on the sphere with
//! `n` boundary components, and their translation into braids.
//!
//! Interior boundary components `b_1..b_{n-1}` sit convexly on a
//! semicircle (`b_1` on top); `b_n` is the outer boundary. Capping the
//! interior components with punctured disks turns a twist over a convex
//! curve into a swing of the enclosed punctures, i.e. a braid on `n - 1`
//! strands.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, LinkingMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SurfaceSpec {
    n: usize,
}

impl SurfaceSpec {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange(format!("n = {n}; a surface needs n >= 2")));
        }
        Ok(SurfaceSpec { n })
    }

    /// Total number of boundary components.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of interior components, which is also the braid strand count.
    pub fn interior(&self) -> usize {
        self.n - 1
    }
}

/// A convex simple closed curve, identified by the interior components it
/// encloses, or the curve parallel to the outer boundary.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum ConvexCurve {
    Interior(Vec<usize>),
    Outer,
}

impl ConvexCurve {
    /// A curve around the given 1-based interior labels (any order).
    pub fn around(labels: impl IntoIterator<Item = usize>) -> Self {
        let mut support: Vec<usize> = labels.into_iter().collect();
        support.sort_unstable();
        support.dedup();
        ConvexCurve::Interior(support)
    }

    pub fn validate(&self, surface: SurfaceSpec) -> Result<()> {
        match self {
            ConvexCurve::Outer => Ok(()),
            ConvexCurve::Interior(s) => {
                let ok =
                    !s.is_empty() && s.windows(2).all(|p| p[0] < p[1]) && s.iter().all(|&x| x >= 1 && x < surface.n());
                if ok {
                    Ok(())
                } else {
                    Err(Error::InvalidCurve { support: s.clone(), n: surface.n() })
                }
            }
        }
    }

    /// Enclosed interior labels; the outer curve encloses all of them.
    pub fn support(&self, surface: SurfaceSpec) -> Vec<usize> {
        match self {
            ConvexCurve::Interior(s) => s.clone(),
            ConvexCurve::Outer => (1..surface.n()).collect(),
        }
    }

    pub fn contains(&self, label: usize) -> bool {
        match self {
            ConvexCurve::Interior(s) => s.binary_search(&label).is_ok(),
            ConvexCurve::Outer => true,
        }
    }

    /// Whether the curve is isotopic to the outer boundary component.
    pub fn is_outer_parallel(&self, surface: SurfaceSpec) -> bool {
        match self {
            ConvexCurve::Outer => true,
            ConvexCurve::Interior(s) => s.len() == surface.interior(),
        }
    }

    pub fn is_boundary_parallel(&self, surface: SurfaceSpec) -> bool {
        match self {
            ConvexCurve::Outer => true,
            ConvexCurve::Interior(s) => s.len() == 1 || s.len() == surface.interior(),
        }
    }
}

impl fmt::Display for ConvexCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConvexCurve::Outer => write!(f, "T_outer"),
            ConvexCurve::Interior(s) => {
                let labels: Vec<String> = s.iter().map(|x| format!("b{x}")).collect();
                write!(f, "T_{{{}}}", labels.join(","))
            }
        }
    }
}

/// Which side of the non-enclosed strands the gathered strands pass while
/// a swing brings its support together.
///
/// Both sides produce the same linking numbers; they differ as braids and
/// correspond to mirror-image placements of the punctures. `Front` is the
/// side consistent with reading twist products right to left.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum GatherSide {
    #[default]
    Front,
    Back,
}

impl GatherSide {
    fn crossing_sign(self) -> i32 {
        match self {
            GatherSide::Front => -1,
            GatherSide::Back => 1,
        }
    }
}

/// Braid of the twist over `curve`: gather the support next to its
/// smallest label, perform a full twist of the gathered block, ungather.
pub fn swing_word(curve: &ConvexCurve, surface: SurfaceSpec) -> Result<BraidWord> {
    swing_word_with(curve, surface, GatherSide::default())
}

pub fn swing_word_with(curve: &ConvexCurve, surface: SurfaceSpec, side: GatherSide) -> Result<BraidWord> {
    curve.validate(surface)?;
    let m = surface.interior();
    if curve.is_outer_parallel(surface) {
        return Ok(BraidWord::full_twist(m));
    }
    let support = curve.support(surface);
    let k = support.len();
    if k == 1 {
        return Ok(BraidWord::identity(m));
    }
    let first = support[0];
    let eps = side.crossing_sign();

    // Letters in the order they happen in time.
    let mut gather = Vec::new();
    for (j, &s) in support.iter().enumerate().skip(1) {
        for p in (first + j + 1..=s).rev() {
            gather.push(eps * (p as i32 - 1));
        }
    }
    let twist = BraidWord::block_full_twist(m, first, k);
    let mut timeline = gather.clone();
    timeline.extend_from_slice(twist.letters());
    timeline.extend(gather.iter().rev().map(|l| -l));
    timeline.reverse();
    BraidWord::new(m, timeline)
}

/// A product `T_{α_1} ⋯ T_{α_k}` in written order; the last factor acts
/// first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TwistWord {
    surface: SurfaceSpec,
    factors: Vec<ConvexCurve>,
}

impl TwistWord {
    pub fn new(surface: SurfaceSpec, factors: Vec<ConvexCurve>) -> Result<Self> {
        for f in &factors {
            f.validate(surface)?;
        }
        Ok(TwistWord { surface, factors })
    }

    pub fn empty(surface: SurfaceSpec) -> Self {
        TwistWord { surface, factors: Vec::new() }
    }

    pub fn surface(&self) -> SurfaceSpec {
        self.surface
    }

    pub fn factors(&self) -> &[ConvexCurve] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn push(&mut self, curve: ConvexCurve) -> Result<()> {
        curve.validate(self.surface)?;
        self.factors.push(curve);
        Ok(())
    }

    pub fn to_braid(&self) -> BraidWord {
        self.to_braid_with(GatherSide::default())
    }

    pub fn to_braid_with(&self, side: GatherSide) -> BraidWord {
        let m = self.surface.interior();
        let mut letters = Vec::new();
        for f in &self.factors {
            let w = swing_word_with(f, self.surface, side).expect("factors are validated");
            letters.extend_from_slice(w.letters());
        }
        BraidWord::new(m, letters).expect("swing letters are in range")
    }

    pub fn multiplicities(&self) -> MultiplicityVector {
        let m = self.surface.interior();
        let mut counts = vec![0; m];
        let mut outer = 0;
        for f in &self.factors {
            for label in f.support(self.surface) {
                counts[label - 1] += 1;
            }
            if f.is_outer_parallel(self.surface) {
                outer += 1;
            }
        }
        MultiplicityVector { counts, outer }
    }

    /// Braid comparison plus multiplicity comparison.
    pub fn compare(&self, other: &TwistWord) -> Result<Comparison> {
        if self.surface != other.surface {
            return Err(Error::SurfaceMismatch(self.surface.n(), other.surface.n()));
        }
        let braid_equal = self.to_braid().equals(&other.to_braid())?;
        let (ma, mb) = (self.multiplicities(), other.multiplicities());
        Ok(Comparison { braid_equal, multiplicities_equal: ma.counts == mb.counts, outer_counts: (ma.outer, mb.outer) })
    }

    /// Monoid equality: isotopic braids and equal interior multiplicities.
    pub fn equivalent(&self, other: &TwistWord) -> Result<bool> {
        Ok(self.compare(other)?.equivalent())
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Comparison {
    pub braid_equal: bool,
    pub multiplicities_equal: bool,
    /// Number of outer-parallel factors on each side. Reported, not compared.
    pub outer_counts: (usize, usize),
}

impl Comparison {
    pub fn equivalent(&self) -> bool {
        self.braid_equal && self.multiplicities_equal
    }

    /// Braids and interior multiplicities agree but the outer counts do not.
    pub fn outer_mismatch(&self) -> bool {
        self.equivalent() && self.outer_counts.0 != self.outer_counts.1
    }
}

/// Per-interior-component containment counts, plus the number of
/// outer-parallel factors.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiplicityVector {
    pub counts: Vec<usize>,
    pub outer: usize,
}

/// `T_{b_1}^{a_1} ⋯ T_{b_{n-1}}^{a_{n-1}} T_{b_n}^{outer}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BoundaryWord {
    surface: SurfaceSpec,
    exponents: Vec<usize>,
    outer: usize,
}

impl BoundaryWord {
    pub fn new(surface: SurfaceSpec, exponents: Vec<usize>, outer: usize) -> Result<Self> {
        if exponents.len() != surface.interior() {
            return Err(Error::OutOfRange(format!("{} exponents given for n = {}", exponents.len(), surface.n())));
        }
        Ok(BoundaryWord { surface, exponents, outer })
    }

    pub fn surface(&self) -> SurfaceSpec {
        self.surface
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn outer(&self) -> usize {
        self.outer
    }

    /// Total number of twists.
    pub fn twist_count(&self) -> usize {
        self.exponents.iter().sum::<usize>() + self.outer
    }

    pub fn to_twist_word(&self) -> TwistWord {
        let mut factors = Vec::with_capacity(self.twist_count());
        for (i, &a) in self.exponents.iter().enumerate() {
            factors.extend(std::iter::repeat_n(ConvexCurve::around([i + 1]), a));
        }
        factors.extend(std::iter::repeat_n(ConvexCurve::Outer, self.outer));
        TwistWord { surface: self.surface, factors }
    }
}

impl fmt::Display for BoundaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &a) in self.exponents.iter().enumerate() {
            match a {
                0 => {}
                1 => parts.push(format!("T_b{}", i + 1)),
                _ => parts.push(format!("T_b{}^{a}", i + 1)),
            }
        }
        match self.outer {
            0 => {}
            1 => parts.push(format!("T_b{}", self.surface.n())),
            o => parts.push(format!("T_b{}^{o}", self.surface.n())),
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Linking matrix of the braid of a twist word, computed from the braid.
pub fn linking_of(word: &TwistWord) -> LinkingMatrix {
    word.to_braid().linking_matrix()
}
