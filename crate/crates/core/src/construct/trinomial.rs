use super::ConstructError;
use crate::arith::{discriminant_y, factor, resultant_y, FieldElem, FieldSpec, ParamPoly, UniPoly};

/// `P_x(T, Y) = Y^3 + (T - x)Y + (T - x)` with its `Y`-discriminant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrinomialFamily {
    pub x: FieldElem,
    pub poly: ParamPoly,
    /// `-(T - x)^2 (4(T - x) + 27)`
    pub discriminant: UniPoly,
    /// The discriminant divided by the square `(T - x)^2`. Its `T`-degree is
    /// odd, so it is not a square in `k(T)` and the generic group is `S_3`.
    /// `None` in characteristic 2, where the criterion does not apply.
    pub nonsquare_witness: Option<UniPoly>,
}

fn t_minus(field: &FieldSpec, x: &FieldElem) -> UniPoly {
    UniPoly::linear(field, x)
}

pub fn lp_trinomial(field: &FieldSpec, x: &FieldElem) -> TrinomialFamily {
    let s = t_minus(field, x);
    let coeffs = vec![s.clone(), s.clone(), UniPoly::zero(field), UniPoly::one(field)];
    let poly = ParamPoly::new(field, coeffs).expect("monic by construction");
    let discriminant = discriminant_y(&poly).expect("degree 3 in Y");
    let nonsquare_witness = if field.characteristic() == 2 {
        None
    } else {
        discriminant.exact_div(&s.pow(2)).filter(|w| w.degree().is_some_and(|d| d % 2 == 1))
    };
    TrinomialFamily { x: x.clone(), poly, discriminant, nonsquare_witness }
}

/// Necessary condition for the stem fields at `x1` and `x2` to differ:
/// `P_{x1}` and `P_{x2}` share no factor over `k(T)`, i.e. their
/// `Y`-resultant is nonzero. It does not decide the field equality itself.
pub fn lp_family_coprime(field: &FieldSpec, x1: &FieldElem, x2: &FieldElem) -> bool {
    let p1 = lp_trinomial(field, x1).poly;
    let p2 = lp_trinomial(field, x2).poly;
    !resultant_y(field, p1.coeffs(), p2.coeffs()).is_zero()
}

/// `Y^3 + aY + a = (Y - r1)(Y - r2)(Y - r3)` with distinct roots in `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitTrinomial {
    pub field: FieldSpec,
    /// The parameter the closed form was evaluated at; `None` when the
    /// trinomial came from exhaustive search.
    pub alpha: Option<FieldElem>,
    pub a: FieldElem,
    pub roots: [FieldElem; 3],
}

impl SplitTrinomial {
    pub fn poly(&self) -> UniPoly {
        let a = self.a.clone();
        UniPoly::new(&self.field, vec![a.clone(), a, self.field.zero(), self.field.one()])
    }

    /// Recheck the expansion, distinctness of the roots, and `a != 0`.
    pub fn check(&self) -> bool {
        let k = &self.field;
        let product = self.roots.iter().fold(UniPoly::one(k), |acc, r| acc.mul_poly(&UniPoly::linear(k, r)));
        let [r1, r2, r3] = &self.roots;
        product == self.poly() && r1 != r2 && r1 != r3 && r2 != r3 && !k.is_zero(&self.a)
    }
}

/// `2, 3, -3, 4, -4, ...`
pub fn rational_alpha_order() -> impl Iterator<Item = i64> {
    std::iter::once(2).chain((3..).flat_map(|k| [k, -k]))
}

pub fn is_admissible_alpha(field: &FieldSpec, alpha: &FieldElem) -> bool {
    let excluded = [0, 1, -1, -2].map(|c| field.from_i64(c));
    if excluded.contains(alpha) {
        return false;
    }
    if field.characteristic() != 2 {
        let minus_half = field.div(&field.from_i64(-1), &field.from_i64(2)).unwrap();
        if *alpha == minus_half {
            return false;
        }
    }
    let a2 = field.mul(alpha, alpha);
    !field.is_zero(&field.add(&field.add(&a2, alpha), &field.one()))
}

/// The closed form at a given `alpha`: `beta = -(a^2+a+1)/(a^2+a)`, roots
/// `beta, beta*alpha, beta*(-1-alpha)` and `a = -(a^2+a+1)^3/(a^2+a)^2`.
pub fn split_trinomial_at(field: &FieldSpec, alpha: &FieldElem) -> Result<SplitTrinomial, ConstructError> {
    let ch = field.characteristic();
    if ch == 3 {
        return Err(ConstructError::UnsupportedCharacteristic(3));
    }
    if !is_admissible_alpha(field, alpha) {
        return Err(ConstructError::InadmissibleAlpha(field.format_elem(alpha)));
    }
    let a2 = field.mul(alpha, alpha);
    let s = field.add(&a2, alpha);
    let num = field.neg(&field.add(&s, &field.one()));
    let beta = field.div(&num, &s).expect("alpha^2 + alpha != 0");
    let a = field.div(&field.pow_u64(&num, 3), &field.mul(&s, &s)).unwrap();
    let other = field.sub(&field.from_i64(-1), alpha);
    let roots = [beta.clone(), field.mul(&beta, alpha), field.mul(&beta, &other)];
    Ok(SplitTrinomial { field: field.clone(), alpha: Some(alpha.clone()), a, roots })
}

fn sort_roots(field: &FieldSpec, mut roots: [FieldElem; 3]) -> [FieldElem; 3] {
    roots.sort_by(|x, y| field.cmp_elems(x, y));
    roots
}

/// A separable `Y^3 + aY + a` splitting over `field`.
///
/// Over `Q` the closed form is taken at the first admissible `alpha` in
/// [`rational_alpha_order`]. Over a finite field the closed form is tried
/// at each element in index order, then every `a != 0` is searched.
pub fn split_trinomial(field: &FieldSpec) -> Result<SplitTrinomial, ConstructError> {
    if field.characteristic() == 3 {
        return Err(ConstructError::UnsupportedCharacteristic(3));
    }
    let Some(q) = field.order_u64() else {
        let alpha = rational_alpha_order()
            .map(|c| field.from_i64(c))
            .find(|al| is_admissible_alpha(field, al))
            .expect("Q is infinite");
        return split_trinomial_at(field, &alpha);
    };
    if let Some(alpha) = (0..q).map(|i| field.element_from_index(i)).find(|al| is_admissible_alpha(field, al)) {
        let mut st = split_trinomial_at(field, &alpha)?;
        st.roots = sort_roots(field, st.roots);
        return Ok(st);
    }
    for i in 1..q {
        let a = field.element_from_index(i);
        let cand = SplitTrinomial {
            field: field.clone(),
            alpha: None,
            a: a.clone(),
            roots: [field.zero(), field.zero(), field.zero()],
        };
        let fac = factor(&cand.poly())?;
        if fac.is_totally_split() {
            let roots: Vec<FieldElem> = fac.factors.iter().map(|(g, _)| field.neg(&g.coeff(0))).collect();
            let roots: [FieldElem; 3] = roots.try_into().expect("three linear factors");
            return Ok(SplitTrinomial { roots: sort_roots(field, roots), ..cand });
        }
    }
    Err(ConstructError::SplitTrinomialNotFound(field.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly_in_t;
    use crate::arith::rat;

    #[test]
    fn lp_family_examples() {
        let q = FieldSpec::Rationals;
        let p0 = lp_trinomial(&q, &q.zero());
        assert_eq!(p0.poly.to_string(), "Y^3 + T*Y + T");
        let p1 = lp_trinomial(&q, &q.one());
        assert_eq!(p1.poly.to_string(), "Y^3 + (T - 1)*Y + (T - 1)");
        assert_eq!(p0.discriminant, parse_poly_in_t(&q, "-T^2*(4*T + 27)").unwrap());
        assert_eq!(p0.nonsquare_witness, Some(parse_poly_in_t(&q, "-4*T - 27").unwrap()));
        assert!(lp_family_coprime(&q, &q.zero(), &q.one()));
        assert!(!lp_family_coprime(&q, &q.one(), &q.one()));
    }

    #[test]
    fn lp_family_small_characteristic() {
        let f2 = FieldSpec::Prime(2);
        assert_eq!(lp_trinomial(&f2, &f2.zero()).nonsquare_witness, None);
        let f3 = FieldSpec::Prime(3);
        let w = lp_trinomial(&f3, &f3.one()).nonsquare_witness.unwrap();
        assert_eq!(w.degree(), Some(1));
    }

    #[test]
    fn alpha_two_over_q() {
        let q = FieldSpec::Rationals;
        let st = split_trinomial(&q).unwrap();
        assert_eq!(st.alpha, Some(q.from_i64(2)));
        assert_eq!(st.a, rat(-343, 36));
        assert_eq!(st.roots, [rat(-7, 6), rat(-7, 3), rat(7, 2)]);
        assert!(st.check());
    }

    #[test]
    fn inadmissible_alphas() {
        let q = FieldSpec::Rationals;
        for al in [q.from_i64(0), q.from_i64(1), q.from_i64(-1), q.from_i64(-2), rat(-1, 2)] {
            assert!(matches!(split_trinomial_at(&q, &al), Err(ConstructError::InadmissibleAlpha(_))));
        }
        assert_eq!(split_trinomial(&FieldSpec::Prime(3)), Err(ConstructError::UnsupportedCharacteristic(3)));
    }

    /// Count of `a` in `GF(p)` with `Y^3 + aY + a` having three distinct
    /// roots, by direct evaluation.
    fn brute_force_split_count(p: i64) -> usize {
        (1..p)
            .filter(|&a| {
                let roots = (0..p).filter(|&y| (y * y * y + a * y + a).rem_euclid(p) == 0).count();
                roots == 3
            })
            .count()
    }

    #[test]
    fn gf7_falls_back_to_search() {
        let f7 = FieldSpec::Prime(7);
        assert!(f7.elements().iter().all(|al| !is_admissible_alpha(&f7, al)));
        match split_trinomial(&f7) {
            Ok(st) => {
                assert!(brute_force_split_count(7) > 0);
                assert_eq!(st.alpha, None);
                assert!(st.check());
            }
            Err(e) => {
                assert_eq!(brute_force_split_count(7), 0);
                assert_eq!(e, ConstructError::SplitTrinomialNotFound("GF(7)".into()));
            }
        }
    }

    #[test]
    fn finite_fields_agree_with_brute_force() {
        for p in [5i64, 11, 13, 17, 19] {
            let fp = FieldSpec::Prime(p as u64);
            match split_trinomial(&fp) {
                Ok(st) => assert!(st.check()),
                Err(_) => assert_eq!(brute_force_split_count(p), 0),
            }
        }
        for q in [4u64, 8, 16, 25, 49] {
            let k = FieldSpec::galois(q).unwrap();
            let elems = k.elements();
            let exists = elems.iter().filter(|a| !k.is_zero(a)).any(|a| {
                let f = |y: &FieldElem| k.add(&k.add(&k.pow_u64(y, 3), &k.mul(a, y)), a);
                elems.iter().filter(|y| k.is_zero(&f(y))).count() == 3
            });
            match split_trinomial(&k) {
                Ok(st) => assert!(exists && st.check(), "GF({q})"),
                Err(_) => assert!(!exists, "GF({q})"),
            }
        }
    }
}
