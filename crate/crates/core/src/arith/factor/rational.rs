use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::finite;
use crate::arith::field::{is_prime_u64, FieldSpec};
use crate::arith::intpoly::{self, IntPoly};
use crate::arith::poly::UniPoly;
use crate::arith::{guard_size, ArithError};

/// Good primes tried before committing to the one with fewest modular
/// factors.
const CANDIDATE_PRIMES: usize = 5;

/// Yun's squarefree decomposition over a field of characteristic zero.
fn yun(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let d = f.derivative();
    let a0 = f.gcd(&d);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let mut c = d.exact_div(&a0).expect("gcd divides");
    let mut out = Vec::new();
    let mut i = 1;
    loop {
        let dd = c.sub_poly(&b.derivative());
        if b.is_one() {
            break;
        }
        let a = b.gcd(&dd);
        if !a.is_one() {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).expect("gcd divides");
        c = dd.exact_div(&a).expect("gcd divides");
        i += 1;
    }
    out
}

pub(super) fn factor_monic(f: &UniPoly) -> Result<Vec<(UniPoly, usize)>, ArithError> {
    let mut out = Vec::new();
    for (part, m) in yun(f) {
        let ints = intpoly::from_rational(&part);
        for g in factor_squarefree_primitive(&ints)? {
            out.push((intpoly::to_rational_monic(&g), m));
        }
    }
    Ok(out)
}

/// Primes `p` with `p` not dividing the leading coefficient and `f mod p`
/// squarefree, in ascending order.
fn good_primes(f: &IntPoly) -> impl Iterator<Item = (u64, UniPoly)> + '_ {
    let lc = f.last().expect("nonzero").clone();
    (2u64..).filter(|&p| is_prime_u64(p)).filter(move |&p| !(&lc % BigInt::from(p)).is_zero()).filter_map(move |p| {
        let field = FieldSpec::Prime(p);
        let fp = intpoly::to_mod_p(f, &field);
        crate::arith::is_separable(&fp).then_some((p, fp))
    })
}

fn factor_squarefree_primitive(f: &IntPoly) -> Result<Vec<IntPoly>, ArithError> {
    let n = f.len() - 1;
    if n <= 1 {
        return Ok(vec![f.clone()]);
    }

    // choose the good prime giving the fewest modular factors
    let mut best: Option<(u64, Vec<UniPoly>)> = None;
    for (p, fp) in good_primes(f).take(CANDIDATE_PRIMES) {
        let monic = fp.make_monic();
        let mut parts = Vec::new();
        for (block, d) in finite::distinct_degree(&monic) {
            parts.push((block, d));
        }
        let count: usize = parts.iter().map(|(b, d)| b.degree().unwrap() / d).sum();
        if count == 1 {
            return Ok(vec![f.clone()]);
        }
        if best.as_ref().is_none_or(|(_, fs)| count < fs.len()) {
            let factors: Vec<UniPoly> =
                finite::factor_monic(&monic, super::DEFAULT_SEED)?.into_iter().map(|(g, _)| g).collect();
            best = Some((p, factors));
        }
    }
    let (p, modular) = best.expect("infinitely many good primes");

    // coefficient bound for any factor, scaled by the leading coefficient
    let lc = f.last().unwrap().clone();
    let norm_bound = intpoly::max_abs(f) * BigInt::from(n + 1);
    let bound: BigInt = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * norm_bound;
    let pb = BigInt::from(p);
    let mut a = 1u32;
    let mut pa = pb.clone();
    while pa <= bound {
        pa *= &pb;
        a += 1;
    }
    guard_size(&pa)?;

    let lc_inv = mod_inverse(&lc, &pa);
    let target = intpoly::reduce_mod(&f.iter().map(|c| c * &lc_inv).collect::<Vec<_>>(), &pa);
    let lifted = multi_lift(&target, &modular, p, a)?;
    Ok(recombine(f.clone(), lifted, &pa))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Lift a factorization `f = g h mod p` of a monic `f` to `mod p^a`,
/// one power of `p` per step. Both lifts stay monic.
fn hensel_pair(f: &IntPoly, g: &UniPoly, h: &UniPoly, p: u64, a: u32) -> Result<(IntPoly, IntPoly), ArithError> {
    let field = g.field();
    let (one, s, t) = g.ext_gcd(h);
    debug_assert!(one.is_one());
    let pb = BigInt::from(p);
    let mut gl = intpoly::from_mod_p(g);
    let mut hl = intpoly::from_mod_p(h);
    let mut pk = pb.clone();
    for _ in 1..a {
        let next = &pk * &pb;
        let diff = intpoly::reduce_mod(&intpoly::sub(f, &intpoly::mul(&gl, &hl)), &next);
        let e: IntPoly = diff.iter().map(|c| c / &pk).collect();
        let e = intpoly::to_mod_p(&e, field);
        let (quot, dg) = e.mul_poly(&t).div_rem(g)?;
        let dh = e.mul_poly(&s).add_poly(&quot.mul_poly(h));
        gl = intpoly::add_scaled(&gl, &intpoly::from_mod_p(&dg), &pk);
        hl = intpoly::add_scaled(&hl, &intpoly::from_mod_p(&dh), &pk);
        guard_size(&next)?;
        pk = next;
    }
    Ok((gl, hl))
}

fn multi_lift(f: &IntPoly, factors: &[UniPoly], p: u64, a: u32) -> Result<Vec<IntPoly>, ArithError> {
    if factors.len() == 1 {
        return Ok(vec![f.clone()]);
    }
    let field = factors[0].field();
    let rest = factors[1..].iter().fold(UniPoly::one(field), |acc, g| acc.mul_poly(g));
    let (g, h) = hensel_pair(f, &factors[0], &rest, p, a)?;
    let mut out = vec![g];
    out.extend(multi_lift(&h, &factors[1..], p, a)?);
    Ok(out)
}

/// Advance `idx` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Zassenhaus recombination of lifted modular factors. Subsets are tried in
/// increasing size; size one is rational-root extraction.
fn recombine(mut f: IntPoly, mut lifted: Vec<IntPoly>, pa: &BigInt) -> Vec<IntPoly> {
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        let mut hit = false;
        loop {
            let lc = f.last().unwrap().clone();
            let mut cand = vec![lc];
            for &i in &idx {
                cand = intpoly::reduce_mod(&intpoly::mul(&cand, &lifted[i]), pa);
            }
            let cand = intpoly::primitive(&intpoly::symmetric_mod(&cand, pa));
            if let Some(q) = intpoly::exact_div(&f, &cand) {
                found.push(cand);
                f = q;
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
                hit = true;
                break;
            }
            if !next_combination(&mut idx, lifted.len()) {
                break;
            }
        }
        if !hit {
            size += 1;
        }
    }
    if f.len() > 1 {
        found.push(intpoly::primitive(&f));
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> IntPoly {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn combinations_enumerate_all_subsets() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.last().unwrap(), &vec![2, 3]);
    }

    #[test]
    fn non_monic_integer_factors() {
        // (3Y - 2)(2Y^2 + 5)(Y^3 + Y + 1)
        let f = intpoly::mul(&intpoly::mul(&z(&[-2, 3]), &z(&[5, 0, 2])), &z(&[1, 1, 0, 1]));
        let mut got = factor_squarefree_primitive(&f).unwrap();
        got.sort_by_key(|g| g.len());
        assert_eq!(got, vec![z(&[-2, 3]), z(&[5, 0, 2]), z(&[1, 1, 0, 1])]);
    }

    #[test]
    fn yun_multiplicities() {
        let q = FieldSpec::Rationals;
        let a = UniPoly::from_i64s(&q, &[1, 1]);
        let b = UniPoly::from_i64s(&q, &[-2, 0, 1]);
        let f = &a.pow(3) * &b.pow(2);
        let parts = yun(&f);
        assert_eq!(parts, vec![(b, 2), (a, 3)]);
    }
}
