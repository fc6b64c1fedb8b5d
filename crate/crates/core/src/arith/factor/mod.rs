//! Complete factorization of univariate polynomials over `Q` and finite
//! fields.
//!
//! Finite fields: squarefree decomposition, distinct-degree splitting and
//! Cantor–Zassenhaus equal-degree splitting driven by a seeded ChaCha
//! stream, so results never depend on ambient randomness. Rationals:
//! Yun's squarefree decomposition, then Zassenhaus (factor modulo the best
//! of several good primes, Hensel-lift, recombine).

mod finite;
mod rational;

pub(crate) use finite::{distinct_degree, is_irreducible_finite};

use super::field::{FieldElem, FieldSpec};
use super::poly::UniPoly;
use super::{ArithError, DEFAULT_DEGREE_CAP};

pub const DEFAULT_SEED: u64 = 0x5EED;

/// `f = unit * prod g_i^{m_i}` with each `g_i` monic irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub field: FieldSpec,
    pub unit: FieldElem,
    pub factors: Vec<(UniPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(&self.field, self.unit.clone()), |acc, (g, m)| acc.mul_poly(&g.pow(*m as u32)))
    }

    /// A single irreducible factor of multiplicity one.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }

    /// All factors linear and every multiplicity one.
    pub fn is_totally_split(&self) -> bool {
        self.is_squarefree() && self.factors.iter().all(|(g, _)| g.degree() == Some(1))
    }

    /// Factor degrees repeated by multiplicity, ascending.
    pub fn degree_pattern(&self) -> Vec<usize> {
        let mut v: Vec<usize> =
            self.factors.iter().flat_map(|(g, m)| std::iter::repeat_n(g.degree().unwrap_or(0), *m)).collect();
        v.sort_unstable();
        v
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FactorConfig {
    pub seed: u64,
    pub degree_cap: usize,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig { seed: DEFAULT_SEED, degree_cap: DEFAULT_DEGREE_CAP }
    }
}

pub fn factor(f: &UniPoly) -> Result<Factorization, ArithError> {
    factor_with(f, &FactorConfig::default())
}

pub fn factor_with_seed(f: &UniPoly, seed: u64) -> Result<Factorization, ArithError> {
    factor_with(f, &FactorConfig { seed, ..FactorConfig::default() })
}

pub fn factor_with(f: &UniPoly, cfg: &FactorConfig) -> Result<Factorization, ArithError> {
    let field = f.field().clone();
    let degree = f.degree().ok_or(ArithError::ZeroPolynomial)?;
    if degree > cfg.degree_cap {
        return Err(ArithError::DegreeCapExceeded { degree, cap: cfg.degree_cap });
    }
    let unit = f.leading().expect("nonzero").clone();
    let monic = f.make_monic();
    let raw = if degree == 0 {
        Vec::new()
    } else {
        match field {
            FieldSpec::Rationals => rational::factor_monic(&monic)?,
            _ => finite::factor_monic(&monic, cfg.seed)?,
        }
    };
    Ok(Factorization { field, unit, factors: merge_sorted(raw) })
}

/// Combine repeated irreducibles and sort by degree, then coefficients.
fn merge_sorted(raw: Vec<(UniPoly, usize)>) -> Vec<(UniPoly, usize)> {
    let mut out: Vec<(UniPoly, usize)> = Vec::new();
    for (g, m) in raw {
        match out.iter_mut().find(|(h, _)| *h == g) {
            Some(entry) => entry.1 += m,
            None => out.push((g, m)),
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares_mod_5() {
        let f5 = FieldSpec::Prime(5);
        let f = UniPoly::from_i64s(&f5, &[-1, 0, 1]);
        let fac = factor(&f).unwrap();
        let shown: Vec<(String, usize)> = fac.factors.iter().map(|(g, m)| (g.to_string(), *m)).collect();
        assert_eq!(shown, [("Y - 1".to_string(), 1), ("Y + 1".to_string(), 1)]);
    }

    #[test]
    fn y4_plus_1_mod_2_is_a_fourth_power() {
        let f2 = FieldSpec::Prime(2);
        let f = UniPoly::from_i64s(&f2, &[1, 0, 0, 0, 1]);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors, vec![(UniPoly::from_i64s(&f2, &[1, 1]), 4)]);
    }

    #[test]
    fn y4_plus_1_over_q_is_irreducible() {
        let q = FieldSpec::Rationals;
        let f = UniPoly::from_i64s(&q, &[1, 0, 0, 0, 1]);
        let fac = factor(&f).unwrap();
        assert!(fac.is_irreducible());
        assert_eq!(fac.factors[0].0, f);
    }

    #[test]
    fn rational_with_content_and_repeats() {
        let q = FieldSpec::Rationals;
        // 6 (Y - 1)^2 (Y^2 + 1) (2Y + 3)
        let f = &(&UniPoly::from_i64s(&q, &[6]) * &UniPoly::from_i64s(&q, &[-1, 1]).pow(2))
            * &(&UniPoly::from_i64s(&q, &[1, 0, 1]) * &UniPoly::from_i64s(&q, &[3, 2]));
        let fac = factor(&f).unwrap();
        assert_eq!(fac.expand(), f);
        assert_eq!(fac.degree_pattern(), vec![1, 1, 1, 2]);
        assert_eq!(fac.unit, q.from_i64(12));
    }

    #[test]
    fn degree_cap() {
        let q = FieldSpec::Rationals;
        let f = UniPoly::monomial(&q, q.one(), 65);
        assert_eq!(factor(&f), Err(ArithError::DegreeCapExceeded { degree: 65, cap: 64 }));
        assert_eq!(factor(&UniPoly::zero(&q)), Err(ArithError::ZeroPolynomial));
    }

    #[test]
    fn swinnerton_dyer_like_needs_recombination() {
        // (Y^2 - 2)(Y^2 - 3)(Y^4 - 10Y^2 + 1): the quartic splits modulo
        // every prime, so recombination must rebuild it
        let q = FieldSpec::Rationals;
        let a = UniPoly::from_i64s(&q, &[-2, 0, 1]);
        let b = UniPoly::from_i64s(&q, &[-3, 0, 1]);
        let c = UniPoly::from_i64s(&q, &[1, 0, -10, 0, 1]);
        let f = &(&a * &b) * &c;
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors, vec![(b, 1), (a, 1), (c, 1)]);
    }

    #[test]
    fn extension_field_factoring() {
        let f4 = FieldSpec::galois(4).unwrap();
        // Y^2 + Y + 1 splits over GF(4) as (Y - g)(Y - g^2)
        let f = UniPoly::from_i64s(&f4, &[1, 1, 1]);
        let fac = factor(&f).unwrap();
        assert!(fac.is_totally_split());
        assert_eq!(fac.expand(), f);
        let f9 = FieldSpec::galois(9).unwrap();
        let h = UniPoly::from_i64s(&f9, &[-1, 0, 0, 0, 0, 0, 0, 0, 1]);
        let fac = factor(&h).unwrap();
        assert_eq!(fac.factors.len(), 8);
    }
}
