use super::field::FieldElem;
use super::param::ParamPoly;
use super::poly::UniPoly;
use super::{guard_poly, ArithError};

/// Interpolate a family `R(T, Y)` with `R(node_i, Y) = fiber_i`, one
/// Lagrange interpolation per `Y`-coefficient. Every `T`-degree in the
/// result is below the number of nodes, and the result is monic in `Y`
/// because each fiber is.
pub fn lagrange_interpolate_coeffwise(nodes: &[FieldElem], fibers: &[UniPoly]) -> Result<ParamPoly, ArithError> {
    if nodes.len() < 2 {
        return Err(ArithError::TooFewNodes);
    }
    if nodes.len() != fibers.len() {
        return Err(ArithError::DegreeMismatch(format!("{} nodes but {} fibers", nodes.len(), fibers.len())));
    }
    let field = fibers[0].field().clone();
    if fibers.iter().any(|f| *f.field() != field) || nodes.iter().any(|x| !field.check_elem(x)) {
        return Err(ArithError::FieldMismatch);
    }
    for i in 0..nodes.len() {
        if nodes[i + 1..].contains(&nodes[i]) {
            return Err(ArithError::DuplicateNodes);
        }
    }
    let n = fibers[0].degree().unwrap_or(0);
    for (i, f) in fibers.iter().enumerate() {
        if f.degree() != Some(n) {
            return Err(ArithError::DegreeMismatch(format!("fiber {i} has degree {:?}, expected {n}", f.degree())));
        }
        if !f.is_monic() {
            return Err(ArithError::NonMonicFiber(i));
        }
    }

    // Lagrange basis polynomials in T
    let basis: Vec<UniPoly> = nodes
        .iter()
        .enumerate()
        .map(|(i, xi)| {
            let mut num = UniPoly::one(&field);
            let mut den = field.one();
            for (j, xj) in nodes.iter().enumerate() {
                if i != j {
                    num = num.mul_poly(&UniPoly::linear(&field, xj));
                    den = field.mul(&den, &field.sub(xi, xj));
                }
            }
            num.scale(&field.inv(&den).expect("nodes are distinct"))
        })
        .collect();

    let mut coeffs = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let mut c = UniPoly::zero(&field);
        for (b, f) in basis.iter().zip(fibers) {
            c = c.add_poly(&b.scale(&f.coeff(d)));
        }
        guard_poly(&c)?;
        coeffs.push(c);
    }
    ParamPoly::new(&field, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::{rat, FieldSpec};

    #[test]
    fn constant_data() {
        let q = FieldSpec::Rationals;
        let f = UniPoly::from_i64s(&q, &[-2, 0, 1]);
        let nodes: Vec<_> = (0..3).map(|i| q.from_i64(i)).collect();
        let r = lagrange_interpolate_coeffwise(&nodes, &[f.clone(), f.clone(), f.clone()]).unwrap();
        assert!(r.is_constant_in_t());
        assert_eq!(r, ParamPoly::from_fiber(&f).unwrap());
    }

    #[test]
    fn three_fiber_example() {
        // coefficientwise oracle worked by hand:
        //   Y^1: values (0, -1, 0) -> T^2 - 2T
        //   Y^0: values (-2, 0, -3) -> -5/2 T^2 + 9/2 T - 2
        let q = FieldSpec::Rationals;
        let nodes: Vec<_> = (0..3).map(|i| q.from_i64(i)).collect();
        let fibers = [
            UniPoly::from_i64s(&q, &[-2, 0, 1]),
            UniPoly::from_i64s(&q, &[0, -1, 1]),
            UniPoly::from_i64s(&q, &[-3, 0, 1]),
        ];
        let r = lagrange_interpolate_coeffwise(&nodes, &fibers).unwrap();
        let expect = ParamPoly::new(
            &q,
            vec![
                UniPoly::new(&q, vec![rat(-2, 1), rat(9, 2), rat(-5, 2)]),
                UniPoly::from_i64s(&q, &[0, -2, 1]),
                UniPoly::one(&q),
            ],
        )
        .unwrap();
        assert_eq!(r, expect);
        assert_eq!(r.to_string(), "Y^2 + (T^2 - 2*T)*Y + (-5/2*T^2 + 9/2*T - 2)");
        for (x, f) in nodes.iter().zip(&fibers) {
            assert_eq!(&r.eval_t(x), f);
        }
    }

    #[test]
    fn errors() {
        let q = FieldSpec::Rationals;
        let f = UniPoly::from_i64s(&q, &[-2, 0, 1]);
        let zero = q.zero();
        assert_eq!(
            lagrange_interpolate_coeffwise(&[zero.clone(), zero], &[f.clone(), f.clone()]),
            Err(ArithError::DuplicateNodes)
        );
        let g = UniPoly::from_i64s(&q, &[1, 1]);
        assert!(matches!(
            lagrange_interpolate_coeffwise(&[q.from_i64(0), q.from_i64(1)], &[f.clone(), g]),
            Err(ArithError::DegreeMismatch(_))
        ));
        let h = UniPoly::from_i64s(&q, &[1, 0, 2]);
        assert_eq!(
            lagrange_interpolate_coeffwise(&[q.from_i64(0), q.from_i64(1)], &[f, h]),
            Err(ArithError::NonMonicFiber(1))
        );
    }
}
