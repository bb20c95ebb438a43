//! Sparse Laurent polynomials in two variables `q`, `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{CheckedAdd, CheckedMul, Signed};

/// Exact coefficient ring for [`LaurentPoly2`]. Arithmetic is checked;
/// overflow panics instead of wrapping.
pub trait Coefficient:
    Clone + fmt::Debug + fmt::Display + Signed + CheckedAdd + CheckedMul + Ord + Send + Sync
{
}

impl<T> Coefficient for T where
    T: Clone + fmt::Debug + fmt::Display + Signed + CheckedAdd + CheckedMul + Ord + Send + Sync
{
}

/// Exponent pair `(q-degree, t-degree)`.
pub type Exponent = (i32, i32);

/// Terms are kept sorted by exponent with no zero coefficients, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly2<C> {
    terms: Vec<(Exponent, C)>,
}

impl<C: Coefficient> LaurentPoly2<C> {
    pub fn zero() -> Self {
        LaurentPoly2 { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0, 0)
    }

    pub fn monomial(coeff: C, q: i32, t: i32) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        LaurentPoly2 { terms: vec![((q, t), coeff)] }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, C)>) -> Self {
        let mut terms: Vec<_> = terms.into_iter().collect();
        terms.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(Exponent, C)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = checked_add(lc, &c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentPoly2 { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> &[(Exponent, C)] {
        &self.terms
    }

    pub fn coeff(&self, q: i32, t: i32) -> C {
        match self.terms.binary_search_by_key(&(q, t), |(e, _)| *e) {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => C::zero(),
        }
    }

    pub fn max_abs_coeff(&self) -> C {
        self.terms.iter().map(|(_, c)| c.abs()).fold(C::zero(), |a, b| if b > a { b } else { a })
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &C| if negate_other { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, sign(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = checked_add(&a[i].1, &sign(&b[j].1));
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(e, c)| (*e, sign(c))));
        LaurentPoly2 { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (small, large) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        // One shifted copy of the larger operand per term of the smaller,
        // merged pairwise.
        let mut acc = Self::zero();
        for ((sq, st), sc) in &small.terms {
            let shifted = LaurentPoly2 {
                terms: large.terms.iter().map(|((q, t), c)| ((q + sq, t + st), checked_mul(c, sc))).collect(),
            };
            acc = acc.merge(&shifted, false);
        }
        acc
    }
}

fn checked_add<C: Coefficient>(a: &C, b: &C) -> C {
    a.checked_add(b).expect("Laurent coefficient overflow")
}

fn checked_mul<C: Coefficient>(a: &C, b: &C) -> C {
    a.checked_mul(b).expect("Laurent coefficient overflow")
}

impl<C: Coefficient> Add for &LaurentPoly2<C> {
    type Output = LaurentPoly2<C>;
    fn add(self, rhs: Self) -> LaurentPoly2<C> {
        self.merge(rhs, false)
    }
}

impl<C: Coefficient> Sub for &LaurentPoly2<C> {
    type Output = LaurentPoly2<C>;
    fn sub(self, rhs: Self) -> LaurentPoly2<C> {
        self.merge(rhs, true)
    }
}

impl<C: Coefficient> Mul for &LaurentPoly2<C> {
    type Output = LaurentPoly2<C>;
    fn mul(self, rhs: Self) -> LaurentPoly2<C> {
        self.product(rhs)
    }
}

impl<C: Coefficient> Neg for &LaurentPoly2<C> {
    type Output = LaurentPoly2<C>;
    fn neg(self) -> LaurentPoly2<C> {
        LaurentPoly2 { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<C: Coefficient> Add for LaurentPoly2<C> {
    type Output = LaurentPoly2<C>;
    fn add(self, rhs: Self) -> LaurentPoly2<C> {
        &self + &rhs
    }
}

impl<C: Coefficient> Sub for LaurentPoly2<C> {
    type Output = LaurentPoly2<C>;
    fn sub(self, rhs: Self) -> LaurentPoly2<C> {
        &self - &rhs
    }
}

impl<C: Coefficient> Mul for LaurentPoly2<C> {
    type Output = LaurentPoly2<C>;
    fn mul(self, rhs: Self) -> LaurentPoly2<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> fmt::Display for LaurentPoly2<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((q, t), c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let mono = monomial_text(*q, *t);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn monomial_text(q: i32, t: i32) -> String {
    let var = |name: &str, e: i32| match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    };
    let parts: Vec<String> = [var("q", q), var("t", t)].into_iter().filter(|s| !s.is_empty()).collect();
    parts.join("*")
}
