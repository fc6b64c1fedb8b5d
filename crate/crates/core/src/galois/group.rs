use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::GaloisError;
use crate::arith::factor::distinct_degree;
use crate::arith::field::is_prime_u64;
use crate::arith::{discriminant, factor, FieldElem, FieldSpec, UniPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupLabel {
    Symmetric(usize),
    Cyclic(usize),
    /// Reducible polynomial with the given factor-degree pattern.
    Reducible(Vec<usize>),
    Inconclusive(String),
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Symmetric(n) => write!(f, "S{n}"),
            GroupLabel::Cyclic(n) => write!(f, "C{n}"),
            GroupLabel::Reducible(pattern) => {
                let parts: Vec<String> = pattern.iter().map(|d| d.to_string()).collect();
                write!(f, "reducible ({})", parts.join(","))
            }
            GroupLabel::Inconclusive(_) => write!(f, "inconclusive"),
        }
    }
}

/// Verifiable reason for a square-class verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SquareWitness {
    /// `root^2 = d` in `Q`.
    Root(FieldElem),
    /// `d < 0` in `Q`.
    Negative,
    /// The integer `num(d) * den(d)` is a quadratic non-residue modulo this
    /// odd prime.
    NonResidueMod(u64),
    /// Euler's criterion `d^((q-1)/2)` in an odd-characteristic finite field.
    Euler(FieldElem),
    /// Every element of a finite field of characteristic two is a square.
    PerfectField,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareClass {
    pub is_square: bool,
    pub witness: SquareWitness,
}

impl SquareClass {
    /// Re-check the witness against `d`.
    pub fn verify(&self, field: &FieldSpec, d: &FieldElem) -> bool {
        match (&self.witness, field) {
            (SquareWitness::Root(r), _) => self.is_square && field.mul(r, r) == *d,
            (SquareWitness::Negative, FieldSpec::Rationals) => {
                !self.is_square && field.as_rational(d).is_some_and(|r| r.is_negative())
            }
            (SquareWitness::NonResidueMod(p), FieldSpec::Rationals) => {
                let Some(r) = field.as_rational(d) else { return false };
                let n = r.numer() * r.denom();
                let fp = FieldSpec::Prime(*p);
                let x = fp.from_bigint(&n);
                !self.is_square && *p > 2 && is_prime_u64(*p) && !fp.is_zero(&x) && !fp.is_square(&x)
            }
            (SquareWitness::Euler(v), _) if field.is_finite() => {
                let q = field.order().unwrap();
                let v2 = field.pow(d, &((q - 1u32) / 2u32));
                v2 == *v && self.is_square == (field.is_zero(v) || field.is_one(v))
            }
            (SquareWitness::PerfectField, _) => self.is_square && field.characteristic() == 2,
            _ => false,
        }
    }
}

/// Decide whether `d` is a square and produce a witness.
pub fn square_class(field: &FieldSpec, d: &FieldElem) -> SquareClass {
    match field {
        FieldSpec::Rationals => {
            let r = field.as_rational(d).expect("rational");
            if r.is_negative() {
                return SquareClass { is_square: false, witness: SquareWitness::Negative };
            }
            if let Some(root) = FieldSpec::rational_sqrt(r) {
                return SquareClass { is_square: true, witness: SquareWitness::Root(FieldElem::Rational(root)) };
            }
            let n: BigInt = r.numer() * r.denom();
            let p = (3u64..)
                .filter(|&p| is_prime_u64(p))
                .find(|&p| {
                    let fp = FieldSpec::Prime(p);
                    let x = fp.from_bigint(&n);
                    !fp.is_zero(&x) && !fp.is_square(&x)
                })
                .expect("a non-square integer is a non-residue modulo some prime");
            SquareClass { is_square: false, witness: SquareWitness::NonResidueMod(p) }
        }
        _ if field.characteristic() == 2 => SquareClass { is_square: true, witness: SquareWitness::PerfectField },
        _ => {
            let q = field.order().unwrap();
            let v = field.pow(d, &((q - 1u32) / 2u32));
            let is_square = field.is_zero(&v) || field.is_one(&v);
            SquareClass { is_square, witness: SquareWitness::Euler(v) }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// Factor-degree pattern of the polynomial modulo a good prime; by
    /// Dedekind it is the cycle type of a Frobenius element.
    CycleType {
        prime: u64,
        cycle_type: Vec<usize>,
    },
    Discriminant {
        value: FieldElem,
        class: SquareClass,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCertificate {
    pub polynomial: UniPoly,
    pub discriminant: FieldElem,
    pub group: GroupLabel,
    pub evidence: Vec<Evidence>,
    /// Largest prime examined by the Dedekind scan (0 when none was needed).
    pub budget_used: u64,
}

impl GroupCertificate {
    pub fn is_symmetric(&self) -> bool {
        matches!(self.group, GroupLabel::Symmetric(_))
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self.group, GroupLabel::Inconclusive(_))
    }

    pub fn cycle_types(&self) -> impl Iterator<Item = (u64, &[usize])> {
        self.evidence.iter().filter_map(|e| match e {
            Evidence::CycleType { prime, cycle_type } => Some((*prime, cycle_type.as_slice())),
            _ => None,
        })
    }
}

/// Galois group of a separable cubic: split type when reducible, otherwise
/// `C3` or `S3` according to the square class of the discriminant.
pub fn cubic_galois_group(f: &UniPoly) -> Result<GroupCertificate, GaloisError> {
    let got = f.degree().unwrap_or(0);
    if got != 3 {
        return Err(GaloisError::BadDegree { expected: 3, got });
    }
    let field = f.field();
    let disc = discriminant(f)?;
    if field.is_zero(&disc) {
        return Err(GaloisError::NotSeparable);
    }
    let class = square_class(field, &disc);
    let fac = factor(f)?;
    let group = if !fac.is_irreducible() {
        GroupLabel::Reducible(fac.degree_pattern())
    } else if matches!(field.characteristic(), 2 | 3) {
        GroupLabel::Inconclusive("discriminant criterion needs characteristic other than 2 and 3".into())
    } else if class.is_square {
        GroupLabel::Cyclic(3)
    } else {
        GroupLabel::Symmetric(3)
    };
    Ok(GroupCertificate {
        polynomial: f.clone(),
        discriminant: disc.clone(),
        group,
        evidence: vec![Evidence::Discriminant { value: disc, class }],
        budget_used: 0,
    })
}

/// `f mod p` for a rational polynomial, `None` if `p` divides a denominator.
pub(crate) fn reduce_mod_prime(f: &UniPoly, p: u64) -> Option<UniPoly> {
    let fp = FieldSpec::Prime(p);
    let coeffs = f.coeffs().iter().map(|c| fp.from_rational(fp_rational(c))).collect::<Option<Vec<_>>>()?;
    Some(UniPoly::new(&fp, coeffs))
}

fn fp_rational(c: &FieldElem) -> &num_rational::BigRational {
    match c {
        FieldElem::Rational(r) => r,
        _ => panic!("expected a rational coefficient"),
    }
}

/// Cycle type of Frobenius at `p` from the distinct-degree factorization.
fn cycle_type_mod(fp: &UniPoly) -> Vec<usize> {
    let mut out = Vec::new();
    for (block, d) in distinct_degree(&fp.make_monic()) {
        let count = block.degree().unwrap() / d;
        out.extend(std::iter::repeat_n(d, count));
    }
    out.sort_unstable();
    out
}

/// A cycle type one of whose powers is a transposition: a single 2-cycle
/// and otherwise odd cycles.
fn yields_transposition(ct: &[usize]) -> bool {
    ct.iter().filter(|&&c| c == 2).count() == 1 && ct.iter().all(|&c| c == 2 || c % 2 == 1)
}

/// A cycle of prime length `l > n/2`; some power of the element is then an
/// `l`-cycle.
fn yields_large_prime_cycle(ct: &[usize], n: usize) -> bool {
    ct.iter().any(|&c| 2 * c > n && is_prime_u64(c as u64))
}

/// Certify that a monic separable `f` over `Q` has Galois group `S_n`.
///
/// Sound but incomplete: `S_n` is claimed only for an irreducible `f` whose
/// Frobenius cycle types at good primes `p <= prime_budget` include one
/// powering to a transposition and one powering to an `l`-cycle for a
/// prime `l > n/2` (which forces primitivity; Jordan then gives `S_n`).
pub fn certify_sn(f: &UniPoly, prime_budget: u64) -> Result<GroupCertificate, GaloisError> {
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
    let disc = discriminant(f)?;
    let q = FieldSpec::Rationals;
    if q.is_zero(&disc) {
        return Err(GaloisError::NotSeparable);
    }
    let mut cert = GroupCertificate {
        polynomial: f.clone(),
        discriminant: disc.clone(),
        group: GroupLabel::Symmetric(n),
        evidence: Vec::new(),
        budget_used: 0,
    };
    if n == 1 {
        return Ok(cert);
    }
    if !factor(f)?.is_irreducible() {
        cert.group = GroupLabel::Inconclusive("reducible".into());
        return Ok(cert);
    }
    if n == 2 {
        // any irreducible separable quadratic
        return Ok(cert);
    }

    let disc_num = fp_rational(&disc).numer().clone();
    let (mut transposition, mut prime_cycle) = (false, false);
    for p in (2..=prime_budget).filter(|&p| is_prime_u64(p)) {
        cert.budget_used = p;
        if (&disc_num % BigInt::from(p)).is_zero() {
            continue;
        }
        let Some(fp) = reduce_mod_prime(f, p) else { continue };
        let ct = cycle_type_mod(&fp);
        let t = yields_transposition(&ct);
        let l = yields_large_prime_cycle(&ct, n);
        transposition |= t;
        prime_cycle |= l;
        cert.evidence.push(Evidence::CycleType { prime: p, cycle_type: ct });
        if transposition && prime_cycle {
            return Ok(cert);
        }
    }
    cert.group = GroupLabel::Inconclusive(format!("no S{n} witnesses among primes up to {prime_budget}"));
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly;

    fn qpoly(s: &str) -> UniPoly {
        parse_poly(&FieldSpec::Rationals, s).unwrap()
    }

    #[test]
    fn cubic_examples() {
        let c = cubic_galois_group(&qpoly("Y^3 - 2")).unwrap();
        assert_eq!(c.group, GroupLabel::Symmetric(3));
        assert_eq!(c.discriminant, FieldSpec::Rationals.from_i64(-108));

        let c = cubic_galois_group(&qpoly("Y^3 + Y^2 - 2*Y - 1")).unwrap();
        assert_eq!(c.group, GroupLabel::Cyclic(3));
        assert_eq!(c.discriminant, FieldSpec::Rationals.from_i64(49));
        let Evidence::Discriminant { value, class } = &c.evidence[0] else { panic!() };
        assert_eq!(class.witness, SquareWitness::Root(FieldSpec::Rationals.from_i64(7)));
        assert!(class.verify(&FieldSpec::Rationals, value));

        let c = cubic_galois_group(&qpoly("Y^3 - 1")).unwrap();
        assert_eq!(c.group, GroupLabel::Reducible(vec![1, 2]));
        assert_eq!(c.group.to_string(), "reducible (1,2)");

        assert!(matches!(cubic_galois_group(&qpoly("Y^2 - 2")), Err(GaloisError::BadDegree { .. })));
        assert_eq!(cubic_galois_group(&qpoly("(Y - 1)^2*(Y + 1)")), Err(GaloisError::NotSeparable));
    }

    #[test]
    fn small_characteristic_is_inconclusive() {
        let f2 = FieldSpec::Prime(2);
        let c = cubic_galois_group(&parse_poly(&f2, "Y^3 + Y + 1").unwrap()).unwrap();
        assert!(c.is_inconclusive());
        let f7 = FieldSpec::Prime(7);
        // irreducible cubics over finite fields have cyclic groups
        let c = cubic_galois_group(&parse_poly(&f7, "Y^3 - 2").unwrap()).unwrap();
        assert_eq!(c.group, GroupLabel::Cyclic(3));
    }

    #[test]
    fn non_square_witnesses_verify() {
        let q = FieldSpec::Rationals;
        for d in [2i64, 3, 5, 6, 7, 10, 12, -1, -108] {
            let e = q.from_i64(d);
            let class = square_class(&q, &e);
            assert!(!class.is_square);
            assert!(class.verify(&q, &e));
        }
        let f9 = FieldSpec::galois(9).unwrap();
        for e in f9.elements() {
            assert!(square_class(&f9, &e).verify(&f9, &e));
        }
    }

    #[test]
    fn sn_examples() {
        let c = certify_sn(&qpoly("Y^2 - 2"), 100).unwrap();
        assert_eq!(c.group, GroupLabel::Symmetric(2));
        let c = certify_sn(&qpoly("(Y - 1)*(Y - 2)"), 100).unwrap();
        assert_eq!(c.group, GroupLabel::Inconclusive("reducible".into()));
        let c = certify_sn(&qpoly("Y^5 - Y - 1"), 200).unwrap();
        assert_eq!(c.group, GroupLabel::Symmetric(5));
        let c = certify_sn(&qpoly("Y^3 + Y^2 - 2*Y - 1"), 500).unwrap();
        assert!(c.is_inconclusive(), "cyclic cubic must never be labelled S3");
        assert_eq!(certify_sn(&qpoly("2*Y^2 - 1"), 10), Err(GaloisError::NotMonic));
        assert_eq!(certify_sn(&qpoly("Y^2"), 10), Err(GaloisError::NotSeparable));
    }

    #[test]
    fn rational_coefficients_skip_bad_primes() {
        let c = certify_sn(&qpoly("Y^3 - 1/3*Y - 1/2"), 200).unwrap();
        assert!(c.is_symmetric());
        assert!(c.cycle_types().all(|(p, _)| p != 2 && p != 3));
    }
}
