//! Star-shaped plumbing graphs of boundary-parallel factorizations and
//! Euler characteristics of the corresponding fillings.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::{BoundaryWord, TwistWord};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    /// Self-intersection number.
    pub weight: i64,
}

/// A weighted graph; edges are stored with the smaller id first, sorted.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PlumbingGraph {
    vertices: Vec<Vertex>,
    edges: Vec<[usize; 2]>,
}

impl PlumbingGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<[usize; 2]>) -> Result<Self> {
        let ids: HashSet<usize> = vertices.iter().map(|v| v.id).collect();
        if ids.len() != vertices.len() {
            return Err(Error::Parse("duplicate vertex id".into()));
        }
        let mut norm = Vec::with_capacity(edges.len());
        for [a, b] in edges {
            if a == b || !ids.contains(&a) || !ids.contains(&b) {
                return Err(Error::Parse(format!("bad edge [{a}, {b}]")));
            }
            norm.push([a.min(b), a.max(b)]);
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("duplicate edge".into()));
        }
        Ok(PlumbingGraph { vertices, edges: norm })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn is_tree(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 || self.edges.len() != n - 1 {
            return false;
        }
        let index = |id: usize| self.vertices.iter().position(|v| v.id == id).expect("edges are validated");
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &[a, b] in &self.edges {
            let (ra, rb) = (find(&mut parent, index(a)), find(&mut parent, index(b)));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph plumbing {\n");
        for v in &self.vertices {
            writeln!(s, "  {} [label=\"{}\"];", v.id, v.weight).expect("string write");
        }
        for [a, b] in &self.edges {
            writeln!(s, "  {a} -- {b};").expect("string write");
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PlumbingGraph = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        PlumbingGraph::new(raw.vertices, raw.edges)
    }

    pub fn emit(&self, format: GraphFormat) -> String {
        match format {
            GraphFormat::Dot => self.to_dot(),
            GraphFormat::Json => self.to_json(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphFormat {
    Dot,
    Json,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(GraphFormat::Dot),
            "json" => Ok(GraphFormat::Json),
            _ => Err(Error::Parse(format!("unknown graph format {s:?}"))),
        }
    }
}

/// Star with center weight `-n` and, for each `a_i >= 2`, a chain of
/// `a_i - 1` vertices of weight `-2`.
pub fn plumbing_of(word: &BoundaryWord) -> Result<PlumbingGraph> {
    if word.outer() != 1 {
        return Err(Error::Unsupported(format!("plumbing needs exactly one outer twist, got {}", word.outer())));
    }
    if let Some(i) = word.exponents().iter().position(|&a| a == 0) {
        return Err(Error::OutOfRange(format!("exponent of b{} is 0", i + 1)));
    }
    let n = word.surface().n();
    let mut vertices = vec![Vertex { id: 0, weight: -(n as i64) }];
    let mut edges = Vec::new();
    for &a in word.exponents() {
        let mut prev = 0;
        for _ in 1..a {
            let id = vertices.len();
            vertices.push(Vertex { id, weight: -2 });
            edges.push([prev, id]);
            prev = id;
        }
    }
    PlumbingGraph::new(vertices, edges)
}

/// `2 - n + k` for a product of `k` twists.
pub fn euler_characteristic(word: &TwistWord) -> i64 {
    2 - word.surface().n() as i64 + word.len() as i64
}

/// Closed forms for the two sides of the daisy relation `(n, i)`.
pub fn chi_formulas(n: usize, i: usize) -> Result<(i64, i64)> {
    if n < 4 || i < 2 || i + 1 >= n {
        return Err(Error::OutOfRange(format!("(n, i) = ({n}, {i}); need 2 <= i < n - 1")));
    }
    let (n, i) = (n as i64, i as i64);
    let lhs = n * n - 5 * n + 6 + 2 * i - i * i;
    let rhs = 3 - n + (n - i - 1) * (i - 1) + (n - i - 1) * (n - i) / 2;
    Ok((lhs, rhs))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: usize,
    pub min_twists: usize,
    pub max_twists: usize,
    pub min_chi: i64,
    pub max_chi: i64,
}

/// Range of twist counts and Euler characteristics over left sides
/// `T_{b_1}^{a_1} ⋯ T_{b_{n-1}}^{a_{n-1}} T_{b_n}` admitting another
/// factorization.
pub fn bounds(n: usize) -> Result<BoundsReport> {
    if n < 5 {
        return Err(Error::OutOfRange(format!("n = {n}; bounds start at n = 5")));
    }
    let ni = n as i64;
    Ok(BoundsReport {
        n,
        min_twists: 2 * n - 4,
        max_twists: (n - 3) * (n - 1) + 1,
        min_chi: ni - 2,
        max_chi: ni * ni - 5 * ni + 6,
    })
}
