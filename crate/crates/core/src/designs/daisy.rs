use crate::catalog::Relation;
use crate::error::{Error, Result};
use crate::surface::{BoundaryWord, ConvexCurve, SurfaceSpec, TwistWord};

/// The daisy relation on `n` boundary components split at `i`:
///
/// `T_{b_1}^{n-i-1} ⋯ T_{b_i}^{n-i-1} T_{b_{i+1}}^{n-3} ⋯ T_{b_{n-1}}^{n-3} T_{b_n}
///   = T_{b_1,…,b_i} [T_{b_{i+1},b_i} ⋯ T_{b_{i+1},b_1}] ⋯ [T_{b_{n-1},b_{n-2}} ⋯ T_{b_{n-1},b_1}]`.
///
/// `(4, 2)` is the lantern relation.
pub fn daisy(n: usize, i: usize) -> Result<Relation> {
    if n < 4 || i < 2 || i + 1 >= n {
        return Err(Error::OutOfRange(format!("daisy({n}, {i}) needs n >= 4 and 2 <= i < n - 1")));
    }
    let surface = SurfaceSpec::new(n)?;
    let exponents = (1..n).map(|j| if j <= i { n - i - 1 } else { n - 3 }).collect();
    let lhs = BoundaryWord::new(surface, exponents, 1)?;
    let mut factors = vec![ConvexCurve::around(1..=i)];
    for j in i + 1..n {
        factors.extend((1..j).rev().map(|k| ConvexCurve::around([j, k])));
    }
    let rhs = TwistWord::new(surface, factors)?;
    Relation::new(format!("daisy-{n}-{i}"), lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;

    #[test]
    fn lantern() {
        let r = daisy(4, 2).unwrap();
        assert_eq!(r.lhs().exponents(), &[1, 1, 1]);
        assert_eq!(r.rhs().to_string(), "T_{b1,b2} T_{b2,b3} T_{b1,b3}");
        assert!(r.lhs().to_twist_word().equivalent(r.rhs()).unwrap());
    }

    #[test]
    fn matches_catalog_entries() {
        // The listed n = 5 relation is a cyclic rotation of the daisy
        // product, which is again a relation since the full twist is
        // central.
        let n5 = builtin(5).unwrap();
        let d = daisy(5, 3).unwrap();
        assert_eq!(d.lhs(), n5[1].lhs());
        let mut rotated = d.rhs().factors().to_vec();
        rotated.rotate_left(1);
        assert_eq!(rotated, n5[1].rhs().factors());
        let n6 = builtin(6).unwrap();
        let d = daisy(6, 2).unwrap();
        assert_eq!((d.lhs(), d.rhs()), (n6[0].lhs(), n6[0].rhs()));
    }

    #[test]
    fn range() {
        assert!(daisy(3, 2).is_err());
        assert!(daisy(6, 1).is_err());
        assert!(daisy(6, 5).is_err());
        assert!(daisy(6, 4).is_ok());
    }
}
