mod support;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reeskernel_core::freemod::{submodule_contained, syzygies};
use reeskernel_core::groebner::{ideal_contained, ideal_equal};
use reeskernel_core::modpres::versal_map;
use reeskernel_core::rees::{
    base_change_check, classical_ideal_rees, compare_rees, functoriality_check, lemma16_check, lemma16_slices_agree,
    nilpotent_kernel_check, rees_ideal, rees_of_map, sym_presentation,
};
use reeskernel_core::{
    Dimension, Error, FieldSpec, Ideal, ModuleMap, ModulePresentation, PolyMatrix, Polynomial, QuotientRing,
    ReesComparison, ReesPresentation, Submodule,
};
use support::*;

fn g1(ex: &Example) -> ModuleMap {
    ModuleMap::new(&ex.m, 1, vec![vec![ex.z.clone()]]).unwrap()
}

fn g2(ex: &Example) -> ModuleMap {
    ModuleMap::new(&ex.m, 2, vec![vec![ex.x.clone(), ex.y.clone()]]).unwrap()
}

fn ideal_module(q: &Arc<QuotientRing>, gens: &[Polynomial]) -> ModulePresentation {
    ModulePresentation::from_submodule(&Submodule::from_ideal_gens(q, gens).unwrap()).unwrap()
}

fn assert_invariants(r: &ReesPresentation) {
    assert!(r.is_y_homogeneous());
    let c = r.contraction().unwrap();
    assert!(ideal_equal(&c, r.base().ideal()).unwrap(), "contraction of {r}");
}

#[test]
fn graded_pieces_vanish_at_p_only_for_the_projection() {
    for p in [2, 3, 5] {
        let ex = example(p);
        let r1 = rees_of_map(&g1(&ex)).unwrap();
        let r2 = rees_of_map(&g2(&ex)).unwrap();
        assert_eq!(r2.hilbert(p as u64).unwrap(), 0, "p = {p}");
        assert!(r1.hilbert(p as u64).unwrap() >= 1, "p = {p}");
        let y = Polynomial::var(r2.ring(), 0);
        assert!(r2.gb().contains(&y.pow(p)).unwrap());
        assert!(!r1.gb().contains(&Polynomial::var(r1.ring(), 0).pow(p)).unwrap());
    }
}

#[test]
fn slices_agree_with_dense_products() {
    for p in [2, 3] {
        let ex = example(p);
        let rm = rees_ideal(&ex.m).unwrap();
        let versal = versal_map(&ex.m).unwrap();
        let cases: Vec<(ReesPresentation, Vec<Vec<Polynomial>>)> = vec![
            ((*rm).clone(), versal.matrix().rows().to_vec()),
            (rees_of_map(&g1(&ex)).unwrap(), vec![vec![ex.z.clone()]]),
            (rees_of_map(&g2(&ex)).unwrap(), vec![vec![ex.x.clone(), ex.y.clone()]]),
        ];
        for (r, h) in &cases {
            let mut total = 0;
            for n in 0..=p + 2 {
                let expected = dense_slice_dimension(&ex.q, h, n);
                assert_eq!(r.hilbert(n as u64).unwrap() as usize, expected, "p = {p}, n = {n}, {r}");
                total += expected;
            }
            assert_eq!(r.k_dimension(), Dimension::Finite(total as u64));
        }
    }
}

#[test]
fn example_dimensions() {
    let ex = example(3);
    let rm = rees_ideal(&ex.m).unwrap();
    let r2 = rees_of_map(&g2(&ex)).unwrap();
    assert_eq!(rm.k_dimension(), Dimension::Finite(33));
    assert_eq!(r2.k_dimension(), Dimension::Finite(32));
    assert_eq!(compare_rees(&rm, &r2).unwrap(), ReesComparison::ProperQuotient);
    assert!(nilpotent_kernel_check(&ex.m, &g2(&ex)).unwrap());
    assert!(nilpotent_kernel_check(&ex.m, &versal_map(&ex.m).unwrap()).unwrap());
    assert_eq!(rees_ideal(&example(2).m).unwrap().k_dimension(), Dimension::Finite(13));
}

#[test]
fn every_map_gives_a_quotient_of_the_module_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let ex = example(3);
    let rm = rees_ideal(&ex.m).unwrap();
    assert_invariants(&rm);
    let sym = sym_presentation(&ex.m).unwrap();
    assert_invariants(&sym);
    assert!(ideal_contained(&sym.relations().embed(rm.ring()).unwrap(), rm.relations()).unwrap());
    let generators = [ex.x.clone(), ex.y.clone(), ex.z.clone()];
    for _ in 0..6 {
        let rank = rng.gen_range(1..=2);
        let row = (0..rank)
            .map(|_| {
                let mut e = Polynomial::zero(ex.q.ambient());
                for g in &generators {
                    let c = random_poly(&mut rng, ex.q.ambient(), 1, 2, false);
                    e = &e + &(&c * g);
                }
                e
            })
            .collect();
        let g = ModuleMap::new(&ex.m, rank, vec![row]).unwrap();
        let rg = rees_of_map(&g).unwrap();
        assert_invariants(&rg);
        assert_ne!(compare_rees(&rm, &rg).unwrap(), ReesComparison::Incomparable);
        assert!(nilpotent_kernel_check(&ex.m, &g).unwrap());
    }
}

#[test]
fn ill_defined_maps_are_rejected() {
    let ex = example(3);
    let one = Polynomial::one(ex.q.ambient());
    assert!(matches!(ModuleMap::new(&ex.m, 1, vec![vec![one]]), Err(Error::IllDefinedMap(_))));
}

#[test]
fn ideals_match_the_classical_algebra() {
    let q = free_quotient(FieldSpec::Rationals, &["x", "y"]);
    let v = vars(q.ambient());
    let (x, y) = (v[0].clone(), v[1].clone());
    let fixtures = [
        vec![x.clone(), y.clone()],
        vec![x.pow(2), &x * &y, y.pow(2)],
        vec![x.pow(2), y.pow(3)],
    ];
    for gens in &fixtures {
        let m = ideal_module(&q, gens);
        let rm = rees_ideal(&m).unwrap();
        let classical = classical_ideal_rees(&q, gens).unwrap();
        assert_eq!(compare_rees(&rm, &classical).unwrap(), ReesComparison::Equal, "{gens:?}");
        assert_invariants(&classical);
    }
    let ex = example(3);
    let rm = rees_ideal(&ex.m).unwrap();
    let classical = classical_ideal_rees(&ex.q, std::slice::from_ref(&ex.z)).unwrap();
    assert_eq!(compare_rees(&rm, &classical).unwrap(), ReesComparison::Equal);
    assert_eq!(compare_rees(&rees_of_map(&g1(&ex)).unwrap(), &classical).unwrap(), ReesComparison::Equal);
}

#[test]
fn koszul_relation_by_elimination_oracle() {
    let q = free_quotient(FieldSpec::Rationals, &["x", "y"]);
    let v = vars(q.ambient());
    let c = classical_ideal_rees(&q, &v).unwrap();
    let y1 = Polynomial::var_named(c.ring(), &c.sym_vars()[0]).unwrap();
    let y2 = Polynomial::var_named(c.ring(), &c.sym_vars()[1]).unwrap();
    let x = Polynomial::var_named(c.ring(), "x").unwrap();
    let y = Polynomial::var_named(c.ring(), "y").unwrap();
    let koszul = &(&x * &y2) - &(&y * &y1);
    assert!(ideal_equal(c.relations(), &Ideal::new(c.ring(), vec![koszul.clone()]).unwrap()).unwrap());
    // Y_j -> g_j * x, a specialisation of the map into R[t]
    let sub: Vec<Polynomial> = c
        .ring()
        .vars()
        .iter()
        .map(|n| {
            if *n == c.sym_vars()[0] {
                &x * &x
            } else if *n == c.sym_vars()[1] {
                &y * &x
            } else {
                Polynomial::var_named(c.ring(), n).unwrap()
            }
        })
        .collect();
    assert!(koszul.substitute(&sub).unwrap().is_zero());
    let m = ideal_module(&q, &v);
    assert!(base_change_check(&m, &["w"]).unwrap());
}

fn embedding_fixtures(q: &Arc<QuotientRing>) -> (ModulePresentation, Vec<ModuleMap>) {
    let v = vars(q.ambient());
    let (x, y) = (v[0].clone(), v[1].clone());
    let zero = Polynomial::zero(q.ambient());
    let m = ideal_module(q, &[x.clone(), y.clone()]);
    let maps = vec![
        ModuleMap::new(&m, 1, vec![vec![x.clone()], vec![y.clone()]]).unwrap(),
        ModuleMap::new(&m, 2, vec![vec![x.clone(), x.pow(2)], vec![y.clone(), &x * &y]]).unwrap(),
        ModuleMap::new(&m, 3, vec![vec![x.clone(), zero.clone(), &x * &y], vec![y.clone(), zero, y.pow(2)]]).unwrap(),
    ];
    (m, maps)
}

#[test]
fn embeddings_give_the_same_algebra() {
    let q = free_quotient(FieldSpec::Rationals, &["x", "y"]);
    let (m, maps) = embedding_fixtures(&q);
    let rm = rees_ideal(&m).unwrap();
    for g in &maps {
        assert_eq!(compare_rees(&rm, &rees_of_map(g).unwrap()).unwrap(), ReesComparison::Equal);
    }
}

/// Random `M ⊆ R^r` over `QQ[x,y]` whose projection away from the last
/// `split` coordinates is injective on `M`.
fn split_instance(rng: &mut ChaCha8Rng, q: &Arc<QuotientRing>) -> Option<(Submodule, usize)> {
    let r = rng.gen_range(2..=3);
    let split = rng.gen_range(1..r);
    let ngens = rng.gen_range(1..=2);
    let rows: Vec<Vec<Polynomial>> = (0..ngens)
        .map(|_| {
            (0..r)
                .map(|_| {
                    let d = rng.gen_range(1..=2);
                    random_poly(rng, q.ambient(), d, 2, true)
                })
                .collect()
        })
        .collect();
    let full = Submodule::from_rows(q, r, rows.clone()).unwrap();
    let cut = Submodule::from_rows(q, r - split, rows.iter().map(|row| row[..r - split].to_vec()).collect()).unwrap();
    if !submodule_contained(&syzygies(&cut), &syzygies(&full)).unwrap() {
        return None;
    }
    Some((full, split))
}

#[test]
fn split_slices_agree_in_characteristic_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let q = free_quotient(FieldSpec::Rationals, &["x", "y"]);
    let mut tested = 0;
    while tested < 10 {
        let Some((m, split)) = split_instance(&mut rng, &q) else { continue };
        for d in 1..=3 {
            assert!(lemma16_check(&m, split, d).unwrap(), "{m}, split {split}, d {d}");
        }
        tested += 1;
    }
}

#[test]
fn split_slices_in_characteristic_p() {
    let ex = example(3);
    let m = Submodule::from_rows(&ex.q, 3, vec![vec![ex.x.clone(), ex.y.clone(), ex.z.clone()]]).unwrap();
    assert!(matches!(lemma16_check(&m, 1, 3), Err(Error::PositiveCharacteristic(3))));
    assert!(lemma16_slices_agree(&m, 1, 2).unwrap());
    assert!(!lemma16_slices_agree(&m, 1, 3).unwrap());

    let r = ring(FieldSpec::Rationals, &["x", "y", "z"]);
    let v = vars(&r);
    let a = Ideal::new(&r, vec![v[0].pow(3), v[1].pow(3)]).unwrap();
    let i = reeskernel_core::polyring::ideal_sum(
        &a,
        &reeskernel_core::polyring::ideal_power(&Ideal::variables(&r), 4).unwrap(),
    )
    .unwrap();
    let q = QuotientRing::new(i).unwrap();
    let m = Submodule::from_rows(&q, 3, vec![v.clone()]).unwrap();
    for d in 0..=3 {
        assert!(lemma16_check(&m, 1, d).unwrap(), "d = {d}");
    }
    assert!(lemma16_check(&m, 0, 2).unwrap());
}

#[test]
fn base_change_and_functoriality() {
    let ex = example(3);
    assert!(base_change_check(&ex.m, &["w"]).unwrap());
    assert!(matches!(base_change_check(&ex.m, &["z"]), Err(Error::VariableCollision(_)) | Err(Error::InvalidRing(_))));
    assert!(functoriality_check(&ex.m, &ex.m, &PolyMatrix::identity(&ex.q, 1)).unwrap());

    let q = free_quotient(FieldSpec::Rationals, &["x", "y"]);
    let free2 = ModulePresentation::free(&q, 2);
    let free1 = ModulePresentation::free(&q, 1);
    let proj = PolyMatrix::new(&q, 1, vec![vec![Polynomial::one(q.ambient())], vec![Polynomial::zero(q.ambient())]]).unwrap();
    assert!(functoriality_check(&free2, &free1, &proj).unwrap());
    assert!(base_change_check(&free2, &["u", "w"]).unwrap());
}

#[test]
fn dual_numbers() {
    let r = ring(FieldSpec::Rationals, &["x"]);
    let x = Polynomial::var(&r, 0);
    let q = QuotientRing::new(Ideal::new(&r, vec![x.pow(2)]).unwrap()).unwrap();
    let m = ideal_module(&q, std::slice::from_ref(&x));
    let sym = sym_presentation(&m).unwrap();
    let rm = rees_ideal(&m).unwrap();
    assert_eq!(rm.k_dimension(), Dimension::Finite(3));
    assert_eq!(compare_rees(&sym, &rm).unwrap(), ReesComparison::ProperQuotient);
    assert_eq!(dense_slice_dimension(&q, &[vec![x.clone()]], 1), 1);
    assert_eq!(dense_slice_dimension(&q, &[vec![x]], 2), 0);
}
