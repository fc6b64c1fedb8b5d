//! Resultants and discriminants via fraction-free elimination on the
//! Sylvester matrix. Entries live in `k[T]`, so the same code serves
//! univariate polynomials (constant entries) and parametric families.

use super::field::{FieldElem, FieldSpec};
use super::param::ParamPoly;
use super::poly::UniPoly;
use super::{guard_poly, ArithError};

/// Determinant of a square matrix over `k[T]` by Bareiss elimination with
/// row pivoting. Every intermediate division is exact.
pub(crate) fn det_bareiss(field: &FieldSpec, mut m: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one(field);
    }
    let mut negate = false;
    let mut prev = UniPoly::one(field);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return UniPoly::zero(field),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul_poly(&m[k][k]).sub_poly(&m[i][k].mul_poly(&m[k][j]));
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = UniPoly::zero(field);
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg_poly()
    } else {
        d
    }
}

/// Resultant with respect to `Y` of two polynomials given by their
/// `Y`-coefficient lists (ascending). The list lengths fix the formal
/// degrees, so a vanishing top coefficient is allowed.
pub fn resultant_y(field: &FieldSpec, f: &[UniPoly], g: &[UniPoly]) -> UniPoly {
    let m = f.len().saturating_sub(1);
    let n = g.len().saturating_sub(1);
    let size = m + n;
    let zero = UniPoly::zero(field);
    let mut rows = vec![vec![zero; size]; size];
    for i in 0..n {
        for (j, c) in f.iter().rev().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.iter().rev().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    det_bareiss(field, rows)
}

fn sign_for_degree(n: usize) -> bool {
    // (-1)^(n(n-1)/2) is negative
    (n * (n.saturating_sub(1)) / 2) % 2 == 1
}

/// Discriminant with respect to `Y` of a family monic in `Y`; a polynomial
/// in `T`. Zero iff the family is inseparable over `k(T)`.
pub fn discriminant_y(a: &ParamPoly) -> Result<UniPoly, ArithError> {
    let n = a.deg_y();
    if n == 0 {
        return Err(ArithError::ConstantPolynomial);
    }
    let field = a.field();
    let mut deriv = a.derivative_y();
    deriv.resize(n, UniPoly::zero(field));
    let res = resultant_y(field, a.coeffs(), &deriv);
    guard_poly(&res)?;
    Ok(if sign_for_degree(n) { res.neg_poly() } else { res })
}

/// Discriminant of a univariate polynomial of degree at least one,
/// `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &UniPoly) -> Result<FieldElem, ArithError> {
    let n = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(ArithError::ConstantPolynomial),
    };
    let field = f.field();
    let lift = |p: &UniPoly, len: usize| -> Vec<UniPoly> {
        let mut v: Vec<UniPoly> = p.coeffs().iter().map(|c| UniPoly::constant(field, c.clone())).collect();
        v.resize(len, UniPoly::zero(field));
        v
    };
    let res = resultant_y(field, &lift(f, n + 1), &lift(&f.derivative(), n));
    guard_poly(&res)?;
    let lc = f.leading().expect("nonzero");
    let mut d = field.div(&res.coeff(0), lc).expect("nonzero leading coefficient");
    if sign_for_degree(n) {
        d = field.neg(&d);
    }
    Ok(d)
}

/// `gcd(f, f') = 1`.
pub fn is_separable(f: &UniPoly) -> bool {
    f.gcd(&f.derivative()).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::rat;

    /// Independent route: resultant over a field by the Euclidean algorithm,
    /// `Res(f, g) = (-1)^(deg f deg g) lc(g)^(deg f - deg r) Res(g, r)`.
    fn euclid_resultant(f: &UniPoly, g: &UniPoly) -> FieldElem {
        let k = f.field();
        let (Some(m), Some(n)) = (f.degree(), g.degree()) else { return k.zero() };
        if n == 0 {
            return k.pow_u64(&g.coeff(0), m as u64);
        }
        let r = f.rem(g).unwrap();
        let Some(dr) = r.degree() else { return k.zero() };
        let mut out = k.mul(&k.pow_u64(g.leading().unwrap(), (m - dr) as u64), &euclid_resultant(g, &r));
        if (m * n) % 2 == 1 {
            out = k.neg(&out);
        }
        out
    }

    fn oracle_disc(f: &UniPoly) -> FieldElem {
        let k = f.field();
        let n = f.degree().unwrap();
        let mut d = k.div(&euclid_resultant(f, &f.derivative()), f.leading().unwrap()).unwrap();
        if sign_for_degree(n) {
            d = k.neg(&d);
        }
        d
    }

    #[test]
    fn quadratic() {
        let q = FieldSpec::Rationals;
        for (b, c) in [(3, 1), (-2, 5), (0, -2), (4, 4)] {
            let f = UniPoly::from_i64s(&q, &[c, b, 1]);
            assert_eq!(discriminant(&f).unwrap(), q.from_i64(b * b - 4 * c));
        }
    }

    #[test]
    fn depressed_cubic_matches_oracle() {
        let q = FieldSpec::Rationals;
        for p in -4..=4 {
            for c in -4..=4 {
                let f = UniPoly::from_i64s(&q, &[c, p, 0, 1]);
                let d = discriminant(&f).unwrap();
                assert_eq!(d, oracle_disc(&f));
                assert_eq!(d, q.from_i64(-4 * p * p * p - 27 * c * c));
            }
        }
    }

    #[test]
    fn general_polys_match_oracle() {
        let q = FieldSpec::Rationals;
        let f = UniPoly::new(&q, vec![rat(1, 2), rat(-3, 1), rat(0, 1), rat(2, 3), rat(7, 1)]);
        assert_eq!(discriminant(&f).unwrap(), oracle_disc(&f));
        let f9 = FieldSpec::galois(9).unwrap();
        let g = f9.generator().unwrap();
        let p = UniPoly::new(&f9, vec![g.clone(), f9.one(), f9.zero(), g, f9.one()]);
        assert_eq!(discriminant(&p).unwrap(), oracle_disc(&p));
    }

    #[test]
    fn constant_is_rejected() {
        let q = FieldSpec::Rationals;
        assert_eq!(discriminant(&UniPoly::from_i64s(&q, &[5])), Err(ArithError::ConstantPolynomial));
    }

    #[test]
    fn separability() {
        let q = FieldSpec::Rationals;
        assert!(is_separable(&UniPoly::from_i64s(&q, &[-2, 0, 1])));
        assert!(!is_separable(&UniPoly::from_i64s(&q, &[1, -2, 1])));
        let f5 = FieldSpec::Prime(5);
        let f = UniPoly::from_i64s(&f5, &[-1, 0, 0, 0, 0, 1]);
        assert!(!is_separable(&f));
        assert_eq!(discriminant(&f).unwrap(), f5.zero());
    }
}
