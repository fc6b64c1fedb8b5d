//! Polynomials in `k[T][Y]` that are monic in `Y`.

use std::fmt;

use super::field::{FieldElem, FieldSpec};
use super::poly::{join_terms, UniPoly};
use super::ArithError;

/// `A(T, Y) = sum_i a_i(T) Y^i` with `a_n = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamPoly {
    field: FieldSpec,
    coeffs: Vec<UniPoly>,
}

impl ParamPoly {
    /// `coeffs[i]` is the coefficient of `Y^i`, a polynomial in `T`.
    pub fn new(field: &FieldSpec, mut coeffs: Vec<UniPoly>) -> Result<Self, ArithError> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(ArithError::FieldMismatch);
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        match coeffs.last() {
            Some(top) if top.is_one() => Ok(ParamPoly { field: field.clone(), coeffs }),
            _ => Err(ArithError::NotMonic),
        }
    }

    /// A polynomial in `Y` alone, viewed as constant in `T`.
    pub fn from_fiber(f: &UniPoly) -> Result<Self, ArithError> {
        let field = f.field();
        let coeffs = f.coeffs().iter().map(|c| UniPoly::constant(field, c.clone())).collect();
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn deg_y(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Largest `T`-degree among the coefficients (0 when constant in `T`).
    pub fn deg_t(&self) -> usize {
        self.coeffs.iter().filter_map(|c| c.degree()).max().unwrap_or(0)
    }

    /// The fiber `A(t0, Y)`.
    pub fn eval_t(&self, t0: &FieldElem) -> UniPoly {
        UniPoly::new(&self.field, self.coeffs.iter().map(|c| c.eval(t0)).collect())
    }

    /// `dA/dY` as a coefficient list (not monic in general).
    pub fn derivative_y(&self) -> Vec<UniPoly> {
        self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.scale(&self.field.from_i64(i as i64))).collect()
    }

    pub fn is_constant_in_t(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_constant())
    }

    /// Add `delta` to the coefficient of `Y^i`. Used to build perturbed
    /// copies; fails if the result is no longer monic.
    pub fn perturb(&self, i: usize, delta: &UniPoly) -> Result<Self, ArithError> {
        let mut coeffs = self.coeffs.clone();
        if i >= coeffs.len() {
            coeffs.resize(i + 1, UniPoly::zero(&self.field));
        }
        coeffs[i] = coeffs[i].add_poly(delta);
        Self::new(&self.field, coeffs)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, usize)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.to_string_in("T"), i))
            .collect();
        f.write_str(&join_terms(&terms, "Y"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_monic() {
        let q = FieldSpec::Rationals;
        let t = UniPoly::x(&q);
        assert_eq!(ParamPoly::new(&q, vec![UniPoly::one(&q), t.clone()]), Err(ArithError::NotMonic));
        assert!(ParamPoly::new(&q, vec![t, UniPoly::one(&q)]).is_ok());
    }

    #[test]
    fn display_matches_grammar() {
        let q = FieldSpec::Rationals;
        let t1 = UniPoly::from_i64s(&q, &[-1, 1]);
        let p = ParamPoly::new(&q, vec![t1.clone(), t1, UniPoly::zero(&q), UniPoly::one(&q)]).unwrap();
        assert_eq!(p.to_string(), "Y^3 + (T - 1)*Y + (T - 1)");
        assert_eq!(p.eval_t(&q.from_i64(1)).to_string(), "Y^3");
    }
}
