mod support;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reeskernel_core::groebner::{
    eliminate, groebner_basis, hilbert_by_degree, ideal_contained, ideal_equal, ideal_member, k_dimension, krull_dim,
    radical_member,
};
use reeskernel_core::{Dimension, FieldSpec, Ideal, MonomialOrder, PolyRing, Polynomial, QuotientRing};
use support::*;

fn random_homogeneous_ideal(rng: &mut ChaCha8Rng, field: FieldSpec) -> Ideal {
    let names = ["x", "y", "z"];
    let n = rng.gen_range(1..=3);
    let r = ring(field, &names[..n]);
    let k = rng.gen_range(1..=3);
    let gens = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            let terms = rng.gen_range(1..=3);
            random_poly(rng, &r, d, terms, true)
        })
        .collect();
    Ideal::new(&r, gens).unwrap()
}

fn combination(rng: &mut ChaCha8Rng, ideal: &Ideal, degree: u32) -> Polynomial {
    let r = ideal.ring();
    let mut f = Polynomial::zero(r);
    for g in ideal.gens() {
        let dg = g.total_degree().unwrap() as u32;
        if dg <= degree {
            let c = random_poly(rng, r, degree - dg, 2, true);
            f = &f + &(&c * g);
        }
    }
    f
}

#[test]
fn membership_matches_dense_linear_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for field in [FieldSpec::prime(7).unwrap(), FieldSpec::Rationals] {
        for _ in 0..12 {
            let ideal = random_homogeneous_ideal(&mut rng, field);
            for d in 1..=5 {
                let member = combination(&mut rng, &ideal, d);
                assert!(ideal_member(&member, &ideal).unwrap(), "{member} in {ideal}");
                assert!(bounded_member(&member, ideal.gens(), d));
                let probe = random_poly(&mut rng, ideal.ring(), d, 3, true);
                assert_eq!(
                    ideal_member(&probe, &ideal).unwrap(),
                    bounded_member(&probe, ideal.gens(), d),
                    "{probe} against {ideal}"
                );
            }
        }
    }
}

#[test]
fn reduced_basis_is_a_fixed_point() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for field in [FieldSpec::prime(7).unwrap(), FieldSpec::Rationals] {
        for _ in 0..10 {
            let ideal = random_homogeneous_ideal(&mut rng, field);
            let gb = groebner_basis(&ideal).unwrap();
            let again = groebner_basis(&gb.to_ideal()).unwrap();
            assert_eq!(gb.polys(), again.polys());
            assert!(ideal_equal(&gb.to_ideal(), &ideal).unwrap());
            for p in gb.polys() {
                assert!(p.lead_coeff().unwrap().is_one());
            }
            let leads = gb.leading_monomials();
            for (i, a) in leads.iter().enumerate() {
                for (j, b) in leads.iter().enumerate() {
                    assert!(i == j || !a.divides(b), "{a:?} divides {b:?}");
                }
            }
        }
    }
}

#[test]
fn lex_basis_of_a_point_pair() {
    let r = PolyRing::new(FieldSpec::Rationals, &["x", "y"], MonomialOrder::Lex).unwrap();
    let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
    let one = Polynomial::one(&r);
    let ideal = Ideal::new(&r, vec![&(&x * &y) - &one, &y.pow(2) - &one]).unwrap();
    let gb = groebner_basis(&ideal).unwrap();
    let mut expected = vec![&x - &y, &y.pow(2) - &one];
    expected.sort_by(|a, b| r.order().cmp(b.lead_monomial().unwrap(), a.lead_monomial().unwrap()));
    let mut got = gb.polys().to_vec();
    got.sort_by(|a, b| r.order().cmp(b.lead_monomial().unwrap(), a.lead_monomial().unwrap()));
    assert_eq!(got, expected);
}

#[test]
fn cusp_by_elimination() {
    let r = ring(FieldSpec::Rationals, &["t", "u", "v"]);
    let v = vars(&r);
    let ideal = Ideal::new(&r, vec![&v[1] - &v[0].pow(2), &v[2] - &v[0].pow(3)]).unwrap();
    let e = eliminate(&ideal, &["t"]).unwrap();
    let cusp = &v[1].pow(3) - &v[2].pow(2);
    assert!(ideal_equal(&e, &Ideal::new(&r, vec![cusp.clone()]).unwrap()).unwrap());
    let t = &v[0];
    let sub = cusp.substitute(&[t.clone(), t.pow(2), t.pow(3)]).unwrap();
    assert!(sub.is_zero());
    assert!(e.gens().iter().all(|g| !g.uses_var(0)));
    assert!(ideal_contained(&e, &ideal).unwrap());
    let q = QuotientRing::new(e).unwrap();
    assert_eq!(krull_dim(&q), 2);
}

#[test]
fn elimination_is_contained_and_variable_free() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let r = ring(FieldSpec::prime(7).unwrap(), &["x", "y", "z"]);
    for _ in 0..8 {
        let gens = (0..3).map(|_| random_poly(&mut rng, &r, 2, 3, false)).collect();
        let ideal = Ideal::new(&r, gens).unwrap();
        let e = eliminate(&ideal, &["x"]).unwrap();
        assert!(e.gens().iter().all(|g| !g.uses_var(0)));
        assert!(ideal_contained(&e, &ideal).unwrap());
    }
}

#[test]
fn dimensions_against_standard_monomials() {
    let q = free_quotient(FieldSpec::Rationals, &["x", "y"]);
    let v = vars(q.ambient());
    let xy = QuotientRing::new(Ideal::new(q.ambient(), vec![&v[0] * &v[1]]).unwrap()).unwrap();
    assert_eq!(krull_dim(&xy), 1);
    assert_eq!(k_dimension(&xy), Dimension::Infinite);

    for p in [2, 3, 5] {
        let ex = example(p);
        let basis = standard_monomials(&ex.q);
        assert_eq!(k_dimension(&ex.q), Dimension::Finite(basis.len() as u64));
        assert_eq!(krull_dim(&ex.q), 0);
        let w = [1, 1, 1];
        let total: u64 = (0..=p as u64 + 1).map(|d| hilbert_by_degree(&ex.q, &w, d).unwrap()).sum();
        assert_eq!(total, basis.len() as u64);
    }
    assert_eq!(standard_monomials(&example(3).q).len(), 1 + 3 + 6 + 8);
    let ex = example(3);
    let z3 = ex.z.pow(3);
    assert_eq!(ex.q.gb().normal_form(&z3).unwrap(), z3);
}

#[test]
fn radical_membership() {
    let r = ring(FieldSpec::Rationals, &["x", "y"]);
    let v = vars(&r);
    let sq = Ideal::new(&r, vec![v[0].pow(2), v[1].pow(3)]).unwrap();
    assert!(radical_member(&(&v[0] + &v[1]), &sq).unwrap());
    let xy = Ideal::new(&r, vec![&v[0] * &v[1]]).unwrap();
    assert!(!radical_member(&v[0], &xy).unwrap());
    assert!(radical_member(&(&v[0] * &v[1]), &xy).unwrap());
}

#[test]
fn product_membership() {
    let r = ring(FieldSpec::Rationals, &["x", "y"]);
    let v = vars(&r);
    let a = Ideal::new(&r, vec![v[0].pow(2), v[1].pow(2)]).unwrap();
    let b = Ideal::new(&r, vec![v[0].pow(2), &v[0] * &v[1], v[1].pow(2)]).unwrap();
    let ab = reeskernel_core::polyring::ideal_product(&a, &b).unwrap();
    let f = &v[0].pow(2) * &v[1].pow(2);
    assert!(ideal_member(&f, &ab).unwrap());
    assert!(bounded_member(&f, ab.gens(), 4));
    assert!(!ideal_member(&v[0].pow(3), &ab).unwrap());
}

proptest! {
    #[test]
    fn prime_field_matches_integer_arithmetic(a in -100i64..100, b in -100i64..100) {
        let f = FieldSpec::prime(7).unwrap();
        let (x, y) = (f.from_i64(a), f.from_i64(b));
        prop_assert_eq!(&x + &y, f.from_i64(a + b));
        prop_assert_eq!(&x * &y, f.from_i64(a * b));
        prop_assert_eq!(&x - &y, f.from_i64(a - b));
        if !y.is_zero() {
            prop_assert_eq!(&(&x * &y.inv().unwrap()) * &y, x);
        }
    }

    #[test]
    fn univariate_membership_by_gcd(a in 1u32..6, b in 1u32..6) {
        let r = ring(FieldSpec::Rationals, &["x"]);
        let x = Polynomial::var(&r, 0);
        let ideal = Ideal::new(&r, vec![x.pow(a), x.pow(b)]).unwrap();
        let m = a.min(b);
        prop_assert!(ideal_member(&x.pow(m), &ideal).unwrap());
        prop_assert!(!ideal_member(&x.pow(m - 1), &ideal).unwrap());
    }
}
