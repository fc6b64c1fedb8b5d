use super::GaloisError;
use crate::arith::{factor, is_separable, resultant_y, FieldSpec, UniPoly};

/// `f(T - s*Z)` as a list of `Z`-coefficients in `k[T]`.
fn shifted(f: &UniPoly, s: i64) -> Vec<UniPoly> {
    let field = f.field();
    // T - s*Z
    let lin = [UniPoly::x(field), UniPoly::constant(field, field.from_i64(-s))];
    let mut acc: Vec<UniPoly> = vec![UniPoly::zero(field)];
    for c in f.coeffs().iter().rev() {
        let mut next = vec![UniPoly::zero(field); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, l) in lin.iter().enumerate() {
                next[i + j] = next[i + j].add_poly(&a.mul_poly(l));
            }
        }
        next[0] = next[0].add_poly(&UniPoly::constant(field, c.clone()));
        acc = next;
    }
    while acc.len() > 1 && acc.last().unwrap().is_zero() {
        acc.pop();
    }
    acc
}

/// Number of roots of an irreducible `f` in its own stem field
/// `Q[Y]/(f)`, i.e. the order of `Aut(Q[Y]/(f) / Q)`.
///
/// Uses Trager's norm: for a shift `s` making
/// `N(T) = Res_Z(f(Z), f(T - s*Z))` squarefree, the factors of `f` over the
/// stem field correspond to the irreducible factors of `N`, with degrees
/// scaled by `deg f`. Linear factors of `f` match factors of `N` of degree
/// `deg f`.
pub fn stem_field_root_count(f: &UniPoly) -> Result<usize, GaloisError> {
    if *f.field() != FieldSpec::Rationals {
        return Err(GaloisError::WrongBase("coefficients in Q"));
    }
    if !f.is_monic() {
        return Err(GaloisError::NotMonic);
    }
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Err(GaloisError::BadDegree { expected: 1, got: 0 });
    }
    if !factor(f)?.is_irreducible() {
        return Err(GaloisError::NotIrreducible);
    }
    let field = f.field();
    let zs: Vec<UniPoly> = f.coeffs().iter().map(|c| UniPoly::constant(field, c.clone())).collect();
    for s in 1.. {
        let norm = resultant_y(field, &zs, &shifted(f, s));
        if !is_separable(&norm) {
            continue;
        }
        let fac = factor(&norm)?;
        return Ok(fac.factors.iter().filter(|(g, _)| g.degree() == Some(n)).count());
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly;

    fn count(s: &str) -> usize {
        stem_field_root_count(&parse_poly(&FieldSpec::Rationals, s).unwrap()).unwrap()
    }

    #[test]
    fn small_stems() {
        assert_eq!(count("Y - 5"), 1);
        assert_eq!(count("Y^2 - 2"), 2);
        assert_eq!(count("Y^3 - 2"), 1);
        assert_eq!(count("Y^3 + Y^2 - 2*Y - 1"), 3);
        assert_eq!(count("Y^4 + 1"), 4);
        assert_eq!(count("Y^4 - 2"), 2);
    }

    #[test]
    fn rejects_reducible() {
        let f = parse_poly(&FieldSpec::Rationals, "Y^2 - 1").unwrap();
        assert_eq!(stem_field_root_count(&f), Err(GaloisError::NotIrreducible));
    }
}
