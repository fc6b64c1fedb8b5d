use gforge::arith::{
    discriminant, factor, is_separable, lagrange_interpolate_coeffwise, FieldElem, FieldSpec, UniPoly,
};
use gforge::galois::{certify_sn, cubic_galois_group, GroupLabel};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;

fn fields() -> Vec<FieldSpec> {
    vec![
        FieldSpec::rationals(),
        FieldSpec::galois(5).unwrap(),
        FieldSpec::galois(8).unwrap(),
        FieldSpec::galois(9).unwrap(),
    ]
}

fn elem(k: &FieldSpec, seed: (i64, i64)) -> FieldElem {
    match k.order_u64() {
        Some(q) => k.element_from_index(seed.0.unsigned_abs() % q),
        None => k.from_rational(&BigRational::new(BigInt::from(seed.0), BigInt::from(seed.1.abs() % 7 + 1))).unwrap(),
    }
}

fn poly(k: &FieldSpec, seeds: &[(i64, i64)]) -> UniPoly {
    UniPoly::new(k, seeds.iter().map(|s| elem(k, *s)).collect())
}

fn monic(k: &FieldSpec, seeds: &[(i64, i64)]) -> UniPoly {
    let mut c: Vec<FieldElem> = seeds.iter().map(|s| elem(k, *s)).collect();
    c.push(k.one());
    UniPoly::new(k, c)
}

fn seed() -> impl Strategy<Value = (i64, i64)> {
    (-20i64..20, -20i64..20)
}

fn coeffs(max: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec(seed(), 1..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(fi in 0usize..4, a in seed(), b in seed(), c in seed()) {
        let k = &fields()[fi];
        let (a, b, c) = (elem(k, a), elem(k, b), elem(k, c));
        prop_assert_eq!(k.mul(&k.mul(&a, &b), &c), k.mul(&a, &k.mul(&b, &c)));
        prop_assert_eq!(k.mul(&a, &k.add(&b, &c)), k.add(&k.mul(&a, &b), &k.mul(&a, &c)));
        prop_assert_eq!(k.mul(&a, &b), k.mul(&b, &a));
        prop_assert!(k.is_zero(&k.add(&a, &k.neg(&a))));
        if !k.is_zero(&a) {
            prop_assert!(k.is_one(&k.mul(&a, &k.inv(&a).unwrap())));
        }
        if let Some(q) = k.order_u64() {
            prop_assert_eq!(k.pow(&a, &BigUint::from(q)), a);
        }
    }

    #[test]
    fn polynomial_division(fi in 0usize..4, a in coeffs(7), b in coeffs(4)) {
        let k = &fields()[fi];
        let (a, b) = (poly(k, &a), poly(k, &b));
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(q.mul_poly(&b).add_poly(&r), a.clone());
        prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        let g = a.gcd(&b);
        prop_assert!(g.divides(&a) && g.divides(&b));
    }

    #[test]
    fn factorization_round_trip(fi in 0usize..4, a in coeffs(5), b in coeffs(3)) {
        let k = &fields()[fi];
        let f = monic(k, &a).mul_poly(&monic(k, &b));
        let fac = factor(&f).unwrap();
        prop_assert_eq!(fac.expand(), f.clone());
        for (i, (g, m)) in fac.factors.iter().enumerate() {
            prop_assert!(g.is_monic() && *m >= 1);
            prop_assert!(fac.factors[i + 1..].iter().all(|(h, _)| h.gcd(g).is_one()));
            if let Some(q) = k.order_u64() {
                // a factor of degree 2 or 3 is irreducible iff it has no root
                if matches!(g.degree(), Some(2 | 3)) {
                    prop_assert!((0..q).all(|i| !k.is_zero(&g.eval(&k.element_from_index(i)))));
                }
            }
        }
    }

    #[test]
    fn separability_matches_discriminant(fi in 0usize..4, a in coeffs(5)) {
        let k = &fields()[fi];
        let f = monic(k, &a);
        let by_disc = !k.is_zero(&discriminant(&f).unwrap());
        let by_gcd = f.gcd(&f.derivative()).degree() == Some(0);
        prop_assert_eq!(is_separable(&f), by_disc);
        prop_assert_eq!(by_disc, by_gcd);
    }

    #[test]
    fn interpolation_hits_nodes(fi in 0usize..4, deg in 1usize..4, raw in prop::collection::vec(coeffs(3), 3)) {
        let k = &fields()[fi];
        let nodes: Vec<FieldElem> = match k.order_u64() {
            Some(_) => (0..3).map(|i| k.element_from_index(i)).collect(),
            None => [0, 1, 5].iter().map(|&i| k.from_i64(i)).collect(),
        };
        let fibers: Vec<UniPoly> = raw
            .iter()
            .map(|s| {
                let mut s = s.clone();
                s.resize(deg, (0, 0));
                monic(k, &s)
            })
            .collect();
        let r = lagrange_interpolate_coeffwise(&nodes, &fibers).unwrap();
        prop_assert!(r.deg_t() <= 2);
        for (x, f) in nodes.iter().zip(&fibers) {
            prop_assert_eq!(&r.eval_t(x), f);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// An `S_n` label must come from an irreducible polynomial whose
    /// discriminant is not a square.
    #[test]
    fn sn_labels_are_sound(c in prop::collection::vec(-6i64..=6, 2..=5), split in any::<bool>()) {
        let q = FieldSpec::rationals();
        let mut c = c;
        c.push(1);
        let mut f = UniPoly::from_i64s(&q, &c);
        if split {
            f = f.mul_poly(&UniPoly::from_i64s(&q, &[c[0], 1]));
        }
        let Ok(cert) = certify_sn(&f, 60) else { return Ok(()) };
        if cert.is_symmetric() {
            prop_assert!(!split);
            prop_assert!(factor(&f).unwrap().is_irreducible());
            let d = discriminant(&f).unwrap();
            prop_assert!(f.degree() == Some(1) || !q.is_square(&d));
        }
    }

    /// Cyclic cubics only ever split as 1+1+1 or 3 modulo good primes; an
    /// `S3` label has a nonsquare discriminant.
    #[test]
    fn cubic_labels_consistent(c in prop::collection::vec(-9i64..=9, 3)) {
        let q = FieldSpec::rationals();
        let f = UniPoly::from_i64s(&q, &[c[0], c[1], c[2], 1]);
        let Ok(cert) = cubic_galois_group(&f) else { return Ok(()) };
        let d = discriminant(&f).unwrap();
        let dnum = q.as_rational(&d).unwrap().numer().clone();
        let mut seen = 0;
        let mut p = 2u64;
        while seen < 50 {
            p += 1;
            if !(2..p).take_while(|i| i * i <= p).all(|i| !p.is_multiple_of(i)) || (&dnum % BigInt::from(p)) == BigInt::from(0) {
                continue;
            }
            seen += 1;
            let fp = FieldSpec::prime(p).unwrap();
            let red = UniPoly::new(&fp, c.iter().map(|&x| fp.from_i64(x)).chain([fp.one()]).collect());
            let pattern = factor(&red).unwrap().degree_pattern();
            match &cert.group {
                GroupLabel::Cyclic(3) => prop_assert!(pattern == vec![1, 1, 1] || pattern == vec![3]),
                GroupLabel::Reducible(_) => prop_assert!(pattern.contains(&1)),
                _ => {}
            }
        }
        match &cert.group {
            GroupLabel::Symmetric(3) => prop_assert!(!q.is_square(&d)),
            GroupLabel::Cyclic(3) => prop_assert!(q.is_square(&d)),
            _ => {}
        }
    }
}

mod skew {
    use gforge::arith::FieldSpec;
    use gforge::skew::{left_divide, AnySkewRing, Perm, SkewPoly};
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn left_division_contract(a in prop::collection::vec(0u64..9, 0..6), b in prop::collection::vec(0u64..9, 1..4)) {
            let AnySkewRing::Field(r) = "GF(9);frob".parse().unwrap() else { unreachable!() };
            let k: &FieldSpec = r.base();
            let a = SkewPoly::new(&r, a.iter().map(|&i| k.element_from_index(i)).collect());
            let b = SkewPoly::new(&r, b.iter().map(|&i| k.element_from_index(i)).collect());
            prop_assume!(!b.is_zero());
            let (q, rem) = left_divide(&a, &b).unwrap();
            prop_assert_eq!(b.mul(&q).add(&rem), a);
            prop_assert!(rem.degree().is_none_or(|d| d < b.degree().unwrap()));
        }

        #[test]
        fn permutation_group_laws(x in Just(()).prop_perturb(|_, mut rng| {
            let mut v: Vec<usize> = (0..5).collect();
            for i in (1..5).rev() { v.swap(i, rng.random_range(0..=i)); }
            v
        }), y in Just(()).prop_perturb(|_, mut rng| {
            let mut v: Vec<usize> = (0..5).collect();
            for i in (1..5).rev() { v.swap(i, rng.random_range(0..=i)); }
            v
        })) {
            let (x, y) = (Perm::from_images(x).unwrap(), Perm::from_images(y).unwrap());
            prop_assert!(x.compose(&x.inverse()).is_identity());
            prop_assert_eq!(x.compose(&y).inverse(), y.inverse().compose(&x.inverse()));
            prop_assert_eq!(Perm::parse(&x.to_string(), 5).unwrap(), x);
        }
    }
}
