use super::ConstructError;
use crate::arith::{factor, is_separable, lagrange_interpolate_coeffwise, FieldElem, FieldSpec, ParamPoly, UniPoly};
use crate::galois::{certify_sn, GroupCertificate, GroupLabel};

/// Recorded on every certificate: the closure of the stem field is not
/// checked by the constructor.
pub const GALOIS_CLOSURE_ASSUMPTION: &str =
    "the Galois closure of the stem field is the intended extension F/Q (caller-supplied, not verified)";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BbBudgets {
    /// Largest prime scanned when certifying `S_n`.
    pub prime_budget: u64,
    /// Number of candidate polynomials tried by [`search_sn_polynomial`].
    pub attempt_budget: usize,
}

impl Default for BbBudgets {
    fn default() -> Self {
        BbBudgets { prime_budget: 500, attempt_budget: 2000 }
    }
}

fn check_stem(stem: &UniPoly) -> Result<usize, ConstructError> {
    if *stem.field() != FieldSpec::Rationals {
        return Err(ConstructError::WrongBase);
    }
    if !stem.is_monic() {
        return Err(ConstructError::NotMonic);
    }
    let d = stem.degree().unwrap_or(0);
    if d == 0 || !factor(stem)?.is_irreducible() {
        return Err(ConstructError::NotIrreducible);
    }
    Ok(d)
}

/// `P0 = stem * prod (Y - c)` over the `n - deg stem` smallest non-negative
/// integers `c` that are not roots of the stem, and
/// `P1 = Y (Y - 1) ... (Y - (n - 1))`.
pub fn build_padded_fibers(stem: &UniPoly, n: usize) -> Result<(UniPoly, UniPoly), ConstructError> {
    let d = check_stem(stem)?;
    if n < d {
        return Err(ConstructError::NTooSmall { n, stem_degree: d });
    }
    let q = stem.field();
    let mut p0 = stem.clone();
    let mut c = 0i64;
    for _ in 0..n - d {
        while q.is_zero(&stem.eval(&q.from_i64(c))) {
            c += 1;
        }
        p0 = p0.mul_poly(&UniPoly::linear(q, &q.from_i64(c)));
        c += 1;
    }
    let p1 = (0..n as i64).fold(UniPoly::one(q), |acc, i| acc.mul_poly(&UniPoly::linear(q, &q.from_i64(i))));
    Ok((p0, p1))
}

/// Advance `c` through `[-h, h]^len` in lexicographic order.
fn next_vector(c: &mut [i64], h: i64) -> bool {
    for x in c.iter_mut() {
        if *x < h {
            *x += 1;
            return true;
        }
        *x = -h;
    }
    false
}

/// Monic integer candidates of degree `n`: `Y^n - Y - 1`, then every
/// coefficient vector of height 1, 2, ... with nonzero constant term.
fn candidates(n: usize) -> impl Iterator<Item = Vec<i64>> {
    let mut first = vec![0i64; n + 1];
    first[0] = -1;
    first[1] -= 1;
    first[n] = 1;
    let rest = (1i64..).flat_map(move |h| {
        let mut c = vec![-h; n];
        let mut done = false;
        std::iter::from_fn(move || loop {
            if done {
                return None;
            }
            let cur = c.clone();
            done = !next_vector(&mut c, h);
            if cur[0] != 0 && cur.iter().any(|x| x.abs() == h) {
                let mut full = cur;
                full.push(1);
                return Some(full);
            }
        })
    });
    std::iter::once(first.clone()).chain(rest.filter(move |c| *c != first))
}

/// A monic degree-`n` integer polynomial with a certified `S_n` group.
pub fn search_sn_polynomial(
    n: usize,
    prime_budget: u64,
    attempt_budget: usize,
) -> Result<(UniPoly, GroupCertificate), ConstructError> {
    let q = FieldSpec::Rationals;
    if n == 1 {
        let y = UniPoly::x(&q);
        let cert = certify_sn(&y, prime_budget)?;
        return Ok((y, cert));
    }
    for c in candidates(n).take(attempt_budget) {
        let f = UniPoly::from_i64s(&q, &c);
        if !is_separable(&f) {
            continue;
        }
        let cert = certify_sn(&f, prime_budget)?;
        if cert.group == GroupLabel::Symmetric(n) {
            return Ok((f, cert));
        }
    }
    Err(ConstructError::SearchBudgetExhausted { n, attempts: attempt_budget })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct BbChecks {
    pub fiber0_separable: bool,
    pub fiber0_contains_stem: bool,
    pub fiber1_totally_split: bool,
    pub nodes_distinct: bool,
}

impl BbChecks {
    pub fn all(&self) -> bool {
        self.fiber0_separable && self.fiber0_contains_stem && self.fiber1_totally_split && self.nodes_distinct
    }
}

/// A family `R(T, Y)` over `Q` with `R(0, Y) = fiber0` (the stem padded by
/// rational roots), `R(1, Y) = fiber1` totally split, and
/// `R(node_a, Y) = fiber_a` with group `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BbCertificate {
    pub input_stem: UniPoly,
    pub target_n: usize,
    pub r: ParamPoly,
    pub node_a: FieldElem,
    pub fiber0: UniPoly,
    pub fiber1: UniPoly,
    pub fiber_a: UniPoly,
    pub sn_cert: GroupCertificate,
    pub checks: BbChecks,
    pub assumptions: Vec<String>,
    pub prime_budget: u64,
}

/// Cofactor of the stem in `fiber0` is a product of distinct rational
/// linear factors.
fn contains_stem(stem: &UniPoly, fiber0: &UniPoly) -> bool {
    let Some(cof) = fiber0.exact_div(stem) else { return false };
    if cof.is_constant() {
        return cof.is_one();
    }
    factor(&cof).is_ok_and(|f| f.is_totally_split())
}

fn totally_split(f: &UniPoly) -> bool {
    factor(f).is_ok_and(|f| f.is_totally_split())
}

/// Build the family for `stem` and `n`. With `fiber_a` supplied, that
/// polynomial is used at the third node instead of searching; it must
/// still certify as `S_n`.
pub fn bb_construct(
    stem: &UniPoly,
    n: usize,
    budgets: &BbBudgets,
    fiber_a: Option<&UniPoly>,
) -> Result<BbCertificate, ConstructError> {
    let q = FieldSpec::Rationals;
    let (p0, p1) = build_padded_fibers(stem, n)?;
    let node_a = q.from_i64(2);
    let (pa, sn_cert) = match fiber_a {
        Some(f) => {
            let cert = certify_sn(f, budgets.prime_budget)?;
            if cert.group != GroupLabel::Symmetric(n) || f.degree() != Some(n) {
                return Err(ConstructError::UncertifiedFiber(n));
            }
            (f.clone(), cert)
        }
        // a linear stem leaves no freedom: every fiber is the stem
        None if n == 1 => (stem.clone(), certify_sn(stem, budgets.prime_budget)?),
        None => search_sn_polynomial(n, budgets.prime_budget, budgets.attempt_budget)?,
    };
    let (p0, p1) = if n == 1 { (stem.clone(), stem.clone()) } else { (p0, p1) };
    let nodes = [q.zero(), q.one(), node_a.clone()];
    let r = lagrange_interpolate_coeffwise(&nodes, &[p0.clone(), p1.clone(), pa.clone()])?;
    let checks = BbChecks {
        fiber0_separable: is_separable(&p0),
        fiber0_contains_stem: contains_stem(stem, &p0),
        fiber1_totally_split: totally_split(&p1),
        nodes_distinct: !q.is_zero(&node_a) && !q.is_one(&node_a),
    };
    Ok(BbCertificate {
        input_stem: stem.clone(),
        target_n: n,
        r,
        node_a,
        fiber0: p0,
        fiber1: p1,
        fiber_a: pa,
        sn_cert,
        checks,
        assumptions: vec![GALOIS_CLOSURE_ASSUMPTION.to_string()],
        prime_budget: budgets.prime_budget,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub ok: bool,
    pub reasons: Vec<String>,
}

/// Re-derive every claim of a certificate from its polynomials alone; the
/// recorded check flags and `sn_cert` are not trusted.
pub fn verify_bb_certificate(cert: &BbCertificate) -> Verification {
    let q = FieldSpec::Rationals;
    let mut reasons = Vec::new();
    let n = cert.target_n;
    let polys = [&cert.input_stem, &cert.fiber0, &cert.fiber1, &cert.fiber_a];
    if *cert.r.field() != q || polys.iter().any(|p| *p.field() != q) || !q.check_elem(&cert.node_a) {
        return Verification { ok: false, reasons: vec!["certificate is not over Q".into()] };
    }
    if q.is_zero(&cert.node_a) || q.is_one(&cert.node_a) {
        reasons.push("node a coincides with 0 or 1".into());
    }
    let label = q.format_elem(&cert.node_a);
    for (t0, fiber, name) in [
        (q.zero(), &cert.fiber0, "0".to_string()),
        (q.one(), &cert.fiber1, "1".to_string()),
        (cert.node_a.clone(), &cert.fiber_a, label),
    ] {
        if cert.r.eval_t(&t0) != *fiber {
            reasons.push(format!("node mismatch at T={name}"));
        }
        if fiber.degree() != Some(n) || !fiber.is_monic() {
            reasons.push(format!("fiber at {name} is not monic of degree {n}"));
        }
    }
    if cert.r.deg_y() != n {
        reasons.push(format!("R has Y-degree {}, expected {n}", cert.r.deg_y()));
    }
    let stem_ok = cert.input_stem.is_monic() && factor(&cert.input_stem).is_ok_and(|f| f.is_irreducible());
    if !stem_ok {
        reasons.push("stem is not monic irreducible".into());
    }
    if !is_separable(&cert.fiber0) {
        reasons.push("fiber at 0 not separable".into());
    }
    if !contains_stem(&cert.input_stem, &cert.fiber0) {
        reasons.push("fiber at 0 is not the stem times distinct rational linear factors".into());
    }
    if !totally_split(&cert.fiber1) {
        reasons.push("fiber at 1 not totally split".into());
    }
    match certify_sn(&cert.fiber_a, cert.prime_budget) {
        Ok(c) if c.group == GroupLabel::Symmetric(n) => {}
        _ => reasons.push(format!("fiber at a not certified S{n}")),
    }
    Verification { ok: reasons.is_empty(), reasons }
}
