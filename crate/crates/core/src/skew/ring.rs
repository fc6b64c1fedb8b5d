use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::poly::join_terms;
use crate::arith::{FieldElem, FieldSpec};

/// A division ring with a family of automorphisms usable as twists.
///
/// `generators` must generate the ring over its prime subring, whose
/// elements are central and fixed by every automorphism; commutation and
/// twist checks only ever look at these.
pub trait DivisionRing: Clone + PartialEq + fmt::Debug + fmt::Display {
    type Elem: Clone + PartialEq + Eq + fmt::Debug;
    type Auto: Clone + PartialEq + Eq + fmt::Debug + fmt::Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn generators(&self) -> Vec<Self::Elem>;
    fn apply(&self, sigma: &Self::Auto, a: &Self::Elem) -> Self::Elem;
    fn identity(&self) -> Self::Auto;
    /// Every element, for finite rings.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    fn format_elem(&self, a: &Self::Elem) -> String;
    /// Named constants accepted by the parser, e.g. `g` or `i`.
    fn symbol(&self, name: &str) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

/// `x -> x^(p^j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Frobenius(pub u32);

impl fmt::Display for Frobenius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "id"),
            1 => write!(f, "frob"),
            j => write!(f, "frob^{j}"),
        }
    }
}

impl DivisionRing for FieldSpec {
    type Elem = FieldElem;
    type Auto = Frobenius;

    fn zero(&self) -> FieldElem {
        FieldSpec::zero(self)
    }
    fn one(&self) -> FieldElem {
        FieldSpec::one(self)
    }
    fn from_int(&self, n: &BigInt) -> FieldElem {
        self.from_bigint(n)
    }
    fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldSpec::add(self, a, b)
    }
    fn neg(&self, a: &FieldElem) -> FieldElem {
        FieldSpec::neg(self, a)
    }
    fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        FieldSpec::mul(self, a, b)
    }
    fn inv(&self, a: &FieldElem) -> Option<FieldElem> {
        FieldSpec::inv(self, a)
    }
    fn generators(&self) -> Vec<FieldElem> {
        self.generator().into_iter().collect()
    }
    fn apply(&self, sigma: &Frobenius, a: &FieldElem) -> FieldElem {
        self.frobenius(a, sigma.0)
    }
    fn identity(&self) -> Frobenius {
        Frobenius(0)
    }
    fn elements(&self) -> Option<Vec<FieldElem>> {
        self.is_finite().then(|| FieldSpec::elements(self))
    }
    fn format_elem(&self, a: &FieldElem) -> String {
        FieldSpec::format_elem(self, a)
    }
    fn symbol(&self, name: &str) -> Option<FieldElem> {
        (name == "g").then(|| self.generator()).flatten()
    }
    fn is_zero(&self, a: &FieldElem) -> bool {
        FieldSpec::is_zero(self, a)
    }
}

/// `a + b*i + c*j + d*k` in the rational quaternions `(-1, -1 / Q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

impl Quaternion {
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        let r = |x: i64| BigRational::from_integer(BigInt::from(x));
        Quaternion { a: r(a), b: r(b), c: r(c), d: r(d) }
    }

    pub fn scalar(a: BigRational) -> Self {
        Quaternion { a, b: BigRational::zero(), c: BigRational::zero(), d: BigRational::zero() }
    }

    pub fn conj(&self) -> Self {
        Quaternion { a: self.a.clone(), b: -&self.b, c: -&self.c, d: -&self.d }
    }

    /// Reduced norm `a^2 + b^2 + c^2 + d^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

/// Inner automorphism `x -> u x u^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Conjugation(pub Quaternion);

impl fmt::Display for Conjugation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conj({})", RationalQuaternions.format_elem(&self.0))
    }
}

/// The Hamilton quaternions over `Q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalQuaternions;

impl fmt::Display for RationalQuaternions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H")
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl DivisionRing for RationalQuaternions {
    type Elem = Quaternion;
    type Auto = Conjugation;

    fn zero(&self) -> Quaternion {
        Quaternion::from_ints(0, 0, 0, 0)
    }
    fn one(&self) -> Quaternion {
        Quaternion::from_ints(1, 0, 0, 0)
    }
    fn from_int(&self, n: &BigInt) -> Quaternion {
        Quaternion::scalar(BigRational::from_integer(n.clone()))
    }
    fn add(&self, x: &Quaternion, y: &Quaternion) -> Quaternion {
        Quaternion { a: &x.a + &y.a, b: &x.b + &y.b, c: &x.c + &y.c, d: &x.d + &y.d }
    }
    fn neg(&self, x: &Quaternion) -> Quaternion {
        Quaternion { a: -&x.a, b: -&x.b, c: -&x.c, d: -&x.d }
    }
    fn mul(&self, x: &Quaternion, y: &Quaternion) -> Quaternion {
        Quaternion {
            a: &x.a * &y.a - &x.b * &y.b - &x.c * &y.c - &x.d * &y.d,
            b: &x.a * &y.b + &x.b * &y.a + &x.c * &y.d - &x.d * &y.c,
            c: &x.a * &y.c - &x.b * &y.d + &x.c * &y.a + &x.d * &y.b,
            d: &x.a * &y.d + &x.b * &y.c - &x.c * &y.b + &x.d * &y.a,
        }
    }
    fn inv(&self, x: &Quaternion) -> Option<Quaternion> {
        if x.is_zero() {
            return None;
        }
        let n = x.norm();
        let c = x.conj();
        Some(Quaternion { a: &c.a / &n, b: &c.b / &n, c: &c.c / &n, d: &c.d / &n })
    }
    fn generators(&self) -> Vec<Quaternion> {
        vec![Quaternion::from_ints(0, 1, 0, 0), Quaternion::from_ints(0, 0, 1, 0)]
    }
    fn apply(&self, sigma: &Conjugation, x: &Quaternion) -> Quaternion {
        let u = &sigma.0;
        let ui = self.inv(u).expect("conjugating unit is nonzero");
        self.mul(&self.mul(u, x), &ui)
    }
    fn identity(&self) -> Conjugation {
        Conjugation(self.one())
    }
    fn elements(&self) -> Option<Vec<Quaternion>> {
        None
    }
    fn format_elem(&self, x: &Quaternion) -> String {
        let terms: Vec<(String, usize)> = [&x.a, &x.b, &x.c, &x.d]
            .into_iter()
            .enumerate()
            .filter(|(_, r)| !r.is_zero())
            .map(|(i, r)| (format_rational(r), i))
            .collect();
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (c, i)) in terms.iter().enumerate() {
            let (neg, mag) = match c.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, c.clone()),
            };
            let body = match (*i, mag.as_str()) {
                (0, _) => mag,
                (_, "1") => ["", "i", "j", "k"][*i].to_string(),
                _ => format!("{mag}*{}", ["", "i", "j", "k"][*i]),
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
    fn symbol(&self, name: &str) -> Option<Quaternion> {
        match name {
            "i" => Some(Quaternion::from_ints(0, 1, 0, 0)),
            "j" => Some(Quaternion::from_ints(0, 0, 1, 0)),
            "k" => Some(Quaternion::from_ints(0, 0, 0, 1)),
            _ => None,
        }
    }
    fn is_zero(&self, x: &Quaternion) -> bool {
        x.is_zero()
    }
}

/// Render `sum c_m T^m`, coefficients written left of the powers.
pub(crate) fn format_skew<R: DivisionRing>(ring: &R, coeffs: &[R::Elem]) -> String {
    let terms: Vec<(String, usize)> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !ring.is_zero(c))
        .map(|(i, c)| (ring.format_elem(c), i))
        .collect();
    join_terms(&terms, "T")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_units() {
        let h = RationalQuaternions;
        let [i, j, k] = ["i", "j", "k"].map(|s| h.symbol(s).unwrap());
        let m1 = h.neg(&h.one());
        assert_eq!(h.mul(&i, &i), m1);
        assert_eq!(h.mul(&j, &j), m1);
        assert_eq!(h.mul(&k, &k), m1);
        assert_eq!(h.mul(&i, &j), k);
        assert_eq!(h.mul(&j, &i), h.neg(&k));
        let x = Quaternion::from_ints(1, 2, -3, 4);
        assert_eq!(h.mul(&x, &h.inv(&x).unwrap()), h.one());
        assert_eq!(h.format_elem(&x), "1 + 2*i - 3*j + 4*k");
        assert_eq!(h.format_elem(&h.neg(&j)), "-j");
    }

    #[test]
    fn conjugation_by_i() {
        let h = RationalQuaternions;
        let s = Conjugation(h.symbol("i").unwrap());
        let j = h.symbol("j").unwrap();
        assert_eq!(h.apply(&s, &j), h.neg(&j));
        assert_eq!(h.apply(&s, &h.symbol("i").unwrap()), h.symbol("i").unwrap());
        assert_eq!(s.to_string(), "conj(i)");
    }
}
