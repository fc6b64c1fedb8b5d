use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::field::{FieldElem, FieldSpec};
use crate::arith::poly::UniPoly;
use crate::arith::ArithError;

/// Equal-degree splitting gives up after this many random draws per call.
/// Each draw succeeds with probability about 1/2.
const MAX_SPLIT_ATTEMPTS: usize = 4096;

fn field_order(field: &FieldSpec) -> BigUint {
    field.order().expect("finite field")
}

/// Rabin's test over a finite field.
pub(crate) fn is_irreducible_finite(f: &UniPoly) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = f.make_monic();
    let q = field_order(f.field());
    let x = UniPoly::x(f.field());
    // x^(q^i) mod f for i = 0..=n
    let mut powers = vec![x.rem(&f).expect("nonzero")];
    for i in 0..n {
        let next = powers[i].pow_mod(&q, &f);
        powers.push(next);
    }
    if powers[n] != powers[0] {
        return false;
    }
    let mut m = n;
    let mut d = 2;
    let mut prime_divisors = Vec::new();
    while d * d <= m {
        if m % d == 0 {
            prime_divisors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        prime_divisors.push(m);
    }
    prime_divisors.into_iter().all(|r| powers[n / r].sub_poly(&x).gcd(&f).is_one())
}

fn pth_root_poly(f: &UniPoly) -> UniPoly {
    let field = f.field();
    let p = field.characteristic() as usize;
    let coeffs = f.coeffs().iter().step_by(p).map(|c| field.pth_root(c)).collect();
    UniPoly::new(field, coeffs)
}

/// Squarefree decomposition in positive characteristic. The product of
/// `g^m` over the output equals the monic input.
fn squarefree(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let p = f.field().characteristic() as usize;
    let mut out = Vec::new();
    let d = f.derivative();
    if d.is_zero() {
        for (g, m) in squarefree(&pth_root_poly(f)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = f.gcd(&d);
    let mut w = f.exact_div(&c).expect("gcd divides");
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.exact_div(&y).expect("gcd divides");
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        c = c.exact_div(&y).expect("gcd divides");
        w = y;
    }
    if !c.is_one() {
        for (g, m) in squarefree(&pth_root_poly(&c)) {
            out.push((g, m * p));
        }
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// `(product of all irreducible factors of degree d, d)`.
pub(crate) fn distinct_degree(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let field = f.field();
    let q = field_order(field);
    let x = UniPoly::x(field);
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg < 2 * (d + 1) {
            if deg > 0 {
                out.push((rest.clone(), deg));
            }
            break;
        }
        d += 1;
        h = h.pow_mod(&q, &rest);
        let g = h.sub_poly(&x).gcd(&rest);
        if !g.is_one() {
            rest = rest.exact_div(&g).expect("gcd divides");
            h = h.rem(&rest).expect("nonzero");
            out.push((g, d));
        }
    }
    out
}

fn random_elem(field: &FieldSpec, rng: &mut ChaCha8Rng) -> FieldElem {
    match field {
        FieldSpec::Prime(p) => FieldElem::Mod(rng.random_range(0..*p)),
        FieldSpec::Ext(e) => FieldElem::Ext((0..e.degree()).map(|_| rng.random_range(0..e.characteristic())).collect()),
        FieldSpec::Rationals => unreachable!("finite fields only"),
    }
}

/// Cantor–Zassenhaus splitting of a product of distinct irreducibles of
/// common degree `d`.
fn equal_degree(f: &UniPoly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<UniPoly>, ArithError> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let field = f.field();
    let q = field_order(field);
    let p = field.characteristic();
    for _ in 0..MAX_SPLIT_ATTEMPTS {
        let a = UniPoly::new(field, (0..n).map(|_| random_elem(field, rng)).collect());
        if a.is_constant() {
            continue;
        }
        let b = if p == 2 {
            // absolute trace a + a^2 + ... + a^(2^(k d - 1)) lands in GF(2)
            let steps = field.extension_degree() * d;
            let two = BigUint::from(2u32);
            let mut t = a.rem(f)?;
            let mut acc = t.clone();
            for _ in 1..steps {
                t = t.pow_mod(&two, f);
                acc = acc.add_poly(&t);
            }
            acc
        } else {
            let e = (q.pow(d as u32) - BigUint::one()) / 2u32;
            a.pow_mod(&e, f).sub_poly(&UniPoly::one(field))
        };
        let g = b.gcd(f);
        if let Some(gd) = g.degree() {
            if gd > 0 && gd < n {
                let h = f.exact_div(&g).expect("gcd divides");
                let mut out = equal_degree(&g, d, rng)?;
                out.extend(equal_degree(&h, d, rng)?);
                return Ok(out);
            }
        }
    }
    Err(ArithError::FactorizationFailed)
}

pub(super) fn factor_monic(f: &UniPoly, seed: u64) -> Result<Vec<(UniPoly, usize)>, ArithError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (part, m) in squarefree(f) {
        for (block, d) in distinct_degree(&part) {
            for g in equal_degree(&block, d, &mut rng)? {
                out.push((g.make_monic(), m));
            }
        }
    }
    Ok(out)
}
