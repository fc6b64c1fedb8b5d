use num_bigint::BigUint;

use super::GaloisError;
use crate::arith::{discriminant_y, factor_with, is_separable, FactorConfig, FieldElem, FieldSpec, ParamPoly, UniPoly};

/// One irreducible factor of the fiber `A(t0, Y)`; it presents one residue
/// extension at `T = t0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub factor: UniPoly,
    pub residue_degree: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationReport {
    pub field: FieldSpec,
    pub t0: FieldElem,
    pub unramified: bool,
    pub fibers: Vec<Fiber>,
    /// `sum residue_degree * multiplicity == deg_Y A`
    pub degree_sum_ok: bool,
}

/// `T - t0` is unramified whenever the fiber at `t0` stays separable, i.e.
/// the `Y`-discriminant does not vanish there.
pub fn unramified_at(a: &ParamPoly, t0: &FieldElem) -> Result<bool, GaloisError> {
    let disc = discriminant_y(a)?;
    if disc.is_zero() {
        return Err(GaloisError::InseparableFamily);
    }
    Ok(!a.field().is_zero(&disc.eval(t0)))
}

pub fn specialize_at(a: &ParamPoly, t0: &FieldElem) -> Result<SpecializationReport, GaloisError> {
    specialize_at_with(a, t0, &FactorConfig::default())
}

/// Factor the fiber `A(t0, Y)` into residue extensions. An inseparable
/// family is reported as ramified everywhere.
pub fn specialize_at_with(
    a: &ParamPoly,
    t0: &FieldElem,
    cfg: &FactorConfig,
) -> Result<SpecializationReport, GaloisError> {
    let unramified = match unramified_at(a, t0) {
        Ok(u) => u,
        Err(GaloisError::InseparableFamily) => false,
        Err(e) => return Err(e),
    };
    let fiber = a.eval_t(t0);
    let fac = factor_with(&fiber, cfg)?;
    let fibers: Vec<Fiber> = fac
        .factors
        .into_iter()
        .map(|(g, m)| Fiber { residue_degree: g.degree().unwrap_or(0), factor: g, multiplicity: m })
        .collect();
    let total: usize = fibers.iter().map(|f| f.residue_degree * f.multiplicity).sum();
    Ok(SpecializationReport {
        field: a.field().clone(),
        t0: t0.clone(),
        unramified,
        degree_sum_ok: total == a.deg_y(),
        fibers,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionData {
    pub factor: UniPoly,
    pub residue_degree: usize,
    /// Order of the decomposition group, read off as the orbit length of
    /// the Frobenius `x -> x^q` acting on the residue field `F_q[Y]/(g)`.
    pub decomposition_order: usize,
}

/// Frobenius orbit length of `Y` in `F_q[Y]/(g)`.
fn frobenius_order(g: &UniPoly) -> usize {
    let field = g.field();
    let q: BigUint = field.order().expect("finite field");
    let y = UniPoly::x(field).rem(g).expect("nonzero");
    let mut h = y.clone();
    let mut k = 0;
    loop {
        h = h.pow_mod(&q, g);
        k += 1;
        if h == y {
            return k;
        }
    }
}

/// At an unramified point over a finite field, inertia is trivial and the
/// decomposition group maps isomorphically onto the cyclic group generated
/// by Frobenius on each residue field.
pub fn frobenius_decomposition(a: &ParamPoly, t0: &FieldElem) -> Result<Vec<DecompositionData>, GaloisError> {
    if !a.field().is_finite() {
        return Err(GaloisError::WrongBase("a finite base field"));
    }
    let fiber = a.eval_t(t0);
    if !is_separable(&fiber) {
        return Err(GaloisError::RamifiedPoint);
    }
    let fac = crate::arith::factor(&fiber)?;
    Ok(fac
        .factors
        .into_iter()
        .map(|(g, _)| DecompositionData {
            residue_degree: g.degree().unwrap_or(0),
            decomposition_order: frobenius_order(&g),
            factor: g,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_param;

    fn family(field: &FieldSpec, s: &str) -> ParamPoly {
        parse_param(field, s).unwrap()
    }

    #[test]
    fn sqrt_t_over_q() {
        let q = FieldSpec::Rationals;
        let a = family(&q, "Y^2 - T");
        assert!(!unramified_at(&a, &q.from_i64(0)).unwrap());
        assert!(unramified_at(&a, &q.from_i64(1)).unwrap());
        let c = family(&q, "Y^2 - 2");
        assert!(unramified_at(&c, &q.from_i64(17)).unwrap());
    }

    #[test]
    fn inseparable_family() {
        let f5 = FieldSpec::Prime(5);
        let a = family(&f5, "Y^5 - T");
        assert_eq!(unramified_at(&a, &f5.from_i64(1)), Err(GaloisError::InseparableFamily));
        let r = specialize_at(&a, &f5.from_i64(1)).unwrap();
        assert!(!r.unramified);
        assert_eq!(r.fibers[0].multiplicity, 5);
        assert!(r.degree_sum_ok);
    }

    #[test]
    fn sqrt_t_mod_5() {
        let f5 = FieldSpec::Prime(5);
        let a = family(&f5, "Y^2 - T");
        let split = specialize_at(&a, &f5.from_i64(1)).unwrap();
        let shown: Vec<_> = split.fibers.iter().map(|f| (f.factor.to_string(), f.residue_degree)).collect();
        assert_eq!(shown, [("Y - 1".to_string(), 1), ("Y + 1".to_string(), 1)]);
        let inert = specialize_at(&a, &f5.from_i64(2)).unwrap();
        assert_eq!(inert.fibers.len(), 1);
        assert_eq!(inert.fibers[0].factor.to_string(), "Y^2 - 2");
        assert!(inert.unramified && inert.degree_sum_ok);

        let d1: Vec<_> = frobenius_decomposition(&a, &f5.from_i64(1))
            .unwrap()
            .iter()
            .map(|d| (d.residue_degree, d.decomposition_order))
            .collect();
        assert_eq!(d1, [(1, 1), (1, 1)]);
        let d2: Vec<_> = frobenius_decomposition(&a, &f5.from_i64(2))
            .unwrap()
            .iter()
            .map(|d| (d.residue_degree, d.decomposition_order))
            .collect();
        assert_eq!(d2, [(2, 2)]);
        assert_eq!(frobenius_decomposition(&a, &f5.zero()), Err(GaloisError::RamifiedPoint));
    }

    #[test]
    fn linear_family_and_wrong_base() {
        let f7 = FieldSpec::Prime(7);
        let a = family(&f7, "Y - T");
        for t in 0..7 {
            let d = frobenius_decomposition(&a, &f7.from_i64(t)).unwrap();
            assert_eq!((d.len(), d[0].residue_degree, d[0].decomposition_order), (1, 1, 1));
        }
        let q = FieldSpec::Rationals;
        assert!(matches!(frobenius_decomposition(&family(&q, "Y - T"), &q.zero()), Err(GaloisError::WrongBase(_))));
    }

    #[test]
    fn interpolated_family_at_zero() {
        let q = FieldSpec::Rationals;
        let a = family(&q, "Y^2 + (T^2 - 2*T)*Y + (-5/2*T^2 + 9/2*T - 2)");
        let r = specialize_at(&a, &q.zero()).unwrap();
        assert!(r.unramified);
        assert_eq!(r.fibers.len(), 1);
        assert_eq!(r.fibers[0].factor.to_string(), "Y^2 - 2");
        assert_eq!(r.fibers[0].residue_degree, 2);
    }
}
