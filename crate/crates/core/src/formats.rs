//! JSON and text formats for words, designs and relation files.
//!
//! Twist products in files are read rightmost-first by default: the last
//! listed factor acts first. Files may declare `"order": "leftmost-first"`
//! instead, and are converted on parsing.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::braid::BraidWord;
use crate::designs::Design;
use crate::error::{Error, Result};
use crate::surface::{BoundaryWord, ConvexCurve, SurfaceSpec, TwistWord};

/// Reading order of a listed product.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Order {
    /// Function notation: the rightmost factor is applied first.
    #[default]
    RightmostFirst,
    /// The leftmost factor is applied first.
    LeftmostFirst,
}

/// A factor in a file: a list of interior labels or the string `"outer"`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FactorJson {
    Labels(Vec<usize>),
    Outer(OuterTag),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OuterTag {
    Outer,
}

impl FactorJson {
    fn to_curve(&self) -> ConvexCurve {
        match self {
            FactorJson::Labels(l) => ConvexCurve::around(l.iter().copied()),
            FactorJson::Outer(_) => ConvexCurve::Outer,
        }
    }

    fn from_curve(c: &ConvexCurve) -> Self {
        match c {
            ConvexCurve::Interior(l) => FactorJson::Labels(l.clone()),
            ConvexCurve::Outer => FactorJson::Outer(OuterTag::Outer),
        }
    }
}

fn surface_of(n: usize) -> Result<SurfaceSpec> {
    SurfaceSpec::new(n)
}

#[derive(Serialize, Deserialize)]
struct TwistWordJson {
    n: usize,
    factors: Vec<FactorJson>,
}

impl Serialize for TwistWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TwistWordJson { n: self.surface().n(), factors: self.factors().iter().map(FactorJson::from_curve).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TwistWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = TwistWordJson::deserialize(d)?;
        let surface = surface_of(raw.n).map_err(D::Error::custom)?;
        TwistWord::new(surface, raw.factors.iter().map(FactorJson::to_curve).collect()).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct BoundaryWordJson {
    n: usize,
    exponents: Vec<usize>,
    outer: usize,
}

impl Serialize for BoundaryWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BoundaryWordJson { n: self.surface().n(), exponents: self.exponents().to_vec(), outer: self.outer() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BoundaryWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BoundaryWordJson::deserialize(d)?;
        let surface = surface_of(raw.n).map_err(D::Error::custom)?;
        BoundaryWord::new(surface, raw.exponents, raw.outer).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct DesignJson {
    m: usize,
    blocks: Vec<Vec<usize>>,
}

impl Serialize for Design {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DesignJson { m: self.points(), blocks: self.blocks() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Design {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DesignJson::deserialize(d)?;
        Design::new(raw.m, &raw.blocks).map_err(D::Error::custom)
    }
}

/// Left side of a relation file; `n` may be omitted.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LhsJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub exponents: Vec<usize>,
    pub outer: usize,
}

/// A relation as stored in a file.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RelationFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub lhs: LhsJson,
    pub rhs: Vec<FactorJson>,
    #[serde(default)]
    pub order: Order,
}

impl RelationFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Left side and right side, with the right side in function order.
    pub fn words(&self) -> Result<(BoundaryWord, TwistWord)> {
        let surface = surface_of(self.n)?;
        if let Some(n) = self.lhs.n {
            if n != self.n {
                return Err(Error::SurfaceMismatch(self.n, n));
            }
        }
        let lhs = BoundaryWord::new(surface, self.lhs.exponents.clone(), self.lhs.outer)?;
        let mut factors: Vec<ConvexCurve> = self.rhs.iter().map(FactorJson::to_curve).collect();
        if self.order == Order::LeftmostFirst {
            factors.reverse();
        }
        Ok((lhs, TwistWord::new(surface, factors)?))
    }

    pub fn label(&self) -> String {
        self.label.clone().unwrap_or_else(|| "file".into())
    }
}

/// Parses a braid in text form: whitespace-separated signed generator
/// indices. Lines starting with `#` are comments, except that
/// `# order: leftmost-first` declares that letters are listed in the order
/// they act.
pub fn parse_braid_text(strands: usize, text: &str) -> Result<BraidWord> {
    let mut order = Order::RightmostFirst;
    let mut body = String::new();
    for line in text.lines() {
        let line = line.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(value) = comment.trim().strip_prefix("order:") {
                order = match value.trim() {
                    "leftmost-first" => Order::LeftmostFirst,
                    "rightmost-first" => Order::RightmostFirst,
                    other => return Err(Error::Parse(format!("unknown order {other:?}"))),
                };
            }
            continue;
        }
        body.push_str(line);
        body.push(' ');
    }
    let word = BraidWord::parse(strands, &body)?;
    Ok(match order {
        Order::RightmostFirst => word,
        Order::LeftmostFirst => {
            let mut letters = word.letters().to_vec();
            letters.reverse();
            BraidWord::new(strands, letters)?
        }
    })
}
