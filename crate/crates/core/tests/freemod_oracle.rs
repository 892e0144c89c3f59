mod support;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reeskernel_core::freemod::{lift, matrix_kernel, module_gb, submodule_dimension, submodule_equal, syzygies};
use reeskernel_core::{FieldSpec, Ideal, ModuleVector, PolyMatrix, Polynomial, QuotientRing, Submodule};
use support::*;

fn artinian(field: FieldSpec) -> Arc<QuotientRing> {
    let r = ring(field, &["x", "y"]);
    let v = vars(&r);
    QuotientRing::new(Ideal::new(&r, vec![v[0].pow(2), v[1].pow(3)]).unwrap()).unwrap()
}

fn random_matrix(rng: &mut ChaCha8Rng, q: &Arc<QuotientRing>, nrows: usize, ncols: usize) -> PolyMatrix {
    let rows = (0..nrows)
        .map(|_| {
            (0..ncols)
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        Polynomial::zero(q.ambient())
                    } else {
                        let d = rng.gen_range(0..=2);
                        random_poly(rng, q.ambient(), d, 2, false)
                    }
                })
                .collect()
        })
        .collect();
    PolyMatrix::new(q, ncols, rows).unwrap()
}

fn annihilates(a: &PolyMatrix, v: &ModuleVector) -> bool {
    let col = PolyMatrix::new(a.ring(), 1, v.entries().iter().map(|e| vec![e.clone()]).collect()).unwrap();
    a.mul(&col).unwrap().is_zero()
}

#[test]
fn kernel_dimension_matches_dense_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for field in [FieldSpec::prime(7).unwrap(), FieldSpec::Rationals] {
        let q = artinian(field);
        for _ in 0..8 {
            let nrows = rng.gen_range(1..=2);
            let ncols = rng.gen_range(1..=3);
            let a = random_matrix(&mut rng, &q, nrows, ncols);
            let k = matrix_kernel(&a);
            assert_eq!(k.rank(), ncols);
            for g in k.gens() {
                assert!(annihilates(&a, g), "{g} not in ker {a}");
            }
            assert_eq!(submodule_dimension(&k).unwrap() as usize, dense_kernel_dimension(&a), "{a}");
        }
    }
}

#[test]
fn annihilator_in_dual_numbers() {
    let r = ring(FieldSpec::Rationals, &["x"]);
    let x = Polynomial::var(&r, 0);
    let q = QuotientRing::new(Ideal::new(&r, vec![x.pow(2)]).unwrap()).unwrap();
    let a = PolyMatrix::new(&q, 1, vec![vec![x.clone()]]).unwrap();
    let k = matrix_kernel(&a);
    assert!(submodule_equal(&k, &Submodule::from_rows(&q, 1, vec![vec![x.clone()]]).unwrap()).unwrap());
    assert_eq!(dense_kernel_dimension(&a), 1);
}

#[test]
fn koszul_syzygy() {
    let q = free_quotient(FieldSpec::Rationals, &["x", "y"]);
    let v = vars(q.ambient());
    let s = Submodule::from_ideal_gens(&q, &v).unwrap();
    let syz = syzygies(&s);
    let koszul = Submodule::from_rows(&q, 2, vec![vec![v[1].clone(), -&v[0]]]).unwrap();
    assert!(submodule_equal(&syz, &koszul).unwrap());
    let a = PolyMatrix::new(&q, 2, vec![v.clone()]).unwrap();
    assert!(submodule_equal(&matrix_kernel(&a), &koszul).unwrap());
}

#[test]
fn single_generator_is_its_own_basis() {
    let q = free_quotient(FieldSpec::Rationals, &["x", "y"]);
    let v = vars(q.ambient());
    let s = Submodule::from_rows(&q, 2, vec![vec![v[1].clone(), -&v[0]]]).unwrap();
    let gb = module_gb(&s);
    assert_eq!(gb.gens().len(), 1);
    assert!(submodule_equal(&gb, &s).unwrap());
}

#[test]
fn lifts_reproduce_the_vector() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let q = free_quotient(FieldSpec::prime(7).unwrap(), &["x", "y", "z"]);
    for _ in 0..10 {
        let a = random_matrix(&mut rng, &q, 2, 3);
        let s = a.column_span();
        let coeffs: Vec<Polynomial> = (0..3).map(|_| random_poly(&mut rng, q.ambient(), 1, 2, false)).collect();
        let mut v = ModuleVector::zero(&q, 2);
        for (g, c) in s.gens().iter().zip(&coeffs) {
            v = v.add(&g.scale(c).unwrap()).unwrap();
        }
        let c = lift(&v, &s).unwrap().expect("combination lifts");
        let mut back = ModuleVector::zero(&q, 2);
        for (g, c) in s.gens().iter().zip(&c) {
            back = back.add(&g.scale(c).unwrap()).unwrap();
        }
        assert_eq!(back, v);
    }
}

#[test]
fn kernels_over_polynomial_rings_are_annihilated() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let q = free_quotient(FieldSpec::Rationals, &["x", "y"]);
    for _ in 0..8 {
        let a = random_matrix(&mut rng, &q, 1, 3);
        for g in matrix_kernel(&a).gens() {
            assert!(annihilates(&a, g));
        }
    }
}
