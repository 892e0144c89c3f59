//! Independent oracles for the integration tests: dense linear algebra over
//! the coefficient field, with no Groebner machinery beyond normal forms
//! modulo a fixed base ideal.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rand::Rng;
use reeskernel_core::polyring::{ideal_power, ideal_sum};
use reeskernel_core::{
    FieldElement, FieldSpec, Ideal, ModulePresentation, Monomial, MonomialOrder, PolyMatrix, PolyRing, Polynomial,
    QuotientRing, Submodule,
};

pub fn ring(field: FieldSpec, vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::new(field, vars, MonomialOrder::GrevLex).unwrap()
}

pub fn vars(r: &Arc<PolyRing>) -> Vec<Polynomial> {
    (0..r.nvars()).map(|i| Polynomial::var(r, i)).collect()
}

/// `k[x,y,z] / ((x^p, y^p) + (x,y,z)^(p+1))` and `M = Rz`.
pub struct Example {
    pub q: Arc<QuotientRing>,
    pub m: ModulePresentation,
    pub x: Polynomial,
    pub y: Polynomial,
    pub z: Polynomial,
}

pub fn example(p: u32) -> Example {
    let r = ring(FieldSpec::prime(p as u64).unwrap(), &["x", "y", "z"]);
    let v = vars(&r);
    let a = Ideal::new(&r, vec![v[0].pow(p), v[1].pow(p)]).unwrap();
    let i = ideal_sum(&a, &ideal_power(&Ideal::variables(&r), p + 1).unwrap()).unwrap();
    let q = QuotientRing::new(i).unwrap();
    let m = ModulePresentation::from_submodule(&Submodule::from_ideal_gens(&q, &[v[2].clone()]).unwrap()).unwrap();
    Example {
        q,
        m,
        x: v[0].clone(),
        y: v[1].clone(),
        z: v[2].clone(),
    }
}

/// Polynomial ring as a quotient by zero.
pub fn free_quotient(field: FieldSpec, names: &[&str]) -> Arc<QuotientRing> {
    QuotientRing::polynomial(&ring(field, names))
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn exponents_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(k: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k + 1 == e.len() {
            e[k] = left;
            out.push(e.clone());
            return;
        }
        for x in (0..=left).rev() {
            e[k] = x;
            rec(k + 1, left - x, e, out);
        }
        e[k] = 0;
    }
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

pub fn exponents_up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    (0..=d).flat_map(|k| exponents_of_degree(n, k)).collect()
}

pub fn random_coeff(rng: &mut impl Rng, field: FieldSpec) -> FieldElement {
    loop {
        let c = field.from_i64(rng.gen_range(-5..=5));
        if !c.is_zero() {
            return c;
        }
    }
}

/// A random polynomial with up to `nterms` terms of degree at most `deg`,
/// or exactly `deg` when `homogeneous`.
pub fn random_poly(rng: &mut impl Rng, r: &Arc<PolyRing>, deg: u32, nterms: usize, homogeneous: bool) -> Polynomial {
    let pool = if homogeneous {
        exponents_of_degree(r.nvars(), deg)
    } else {
        exponents_up_to(r.nvars(), deg)
    };
    let terms = (0..nterms)
        .map(|_| {
            let e = &pool[rng.gen_range(0..pool.len())];
            (Monomial::from_exponents(e), random_coeff(rng, r.field()))
        })
        .collect();
    Polynomial::from_terms(r, terms)
}

/// Rank over the field of a list of sparse rows keyed by `K`.
pub fn rank<K: Ord + Clone>(field: FieldSpec, rows: &[BTreeMap<K, FieldElement>]) -> usize {
    let keys: BTreeSet<K> = rows.iter().flat_map(|r| r.keys().cloned()).collect();
    let keys: Vec<K> = keys.into_iter().collect();
    let mut dense: Vec<Vec<FieldElement>> = rows
        .iter()
        .map(|r| keys.iter().map(|k| r.get(k).cloned().unwrap_or_else(|| field.zero())).collect())
        .collect();
    let mut rank = 0;
    for col in 0..keys.len() {
        let Some(p) = (rank..dense.len()).find(|&i| !dense[i][col].is_zero()) else {
            continue;
        };
        dense.swap(rank, p);
        let inv = dense[rank][col].inv().unwrap();
        let pivot: Vec<FieldElement> = dense[rank].iter().map(|x| x * &inv).collect();
        for i in 0..dense.len() {
            if i != rank && !dense[i][col].is_zero() {
                let c = dense[i][col].clone();
                for (x, y) in dense[i].iter_mut().zip(&pivot) {
                    *x = &*x - &(&c * y);
                }
            }
        }
        dense[rank] = pivot;
        rank += 1;
    }
    rank
}

pub fn coords(p: &Polynomial) -> BTreeMap<Vec<u32>, FieldElement> {
    p.terms().iter().map(|(m, c)| (m.exponents().to_vec(), c.clone())).collect()
}

/// Membership by linear algebra: is `f` a `k`-combination of the products
/// `m * g` with `deg(m) + deg(g) <= bound`?
pub fn bounded_member(f: &Polynomial, gens: &[Polynomial], bound: u32) -> bool {
    let r = f.ring();
    let field = r.field();
    let mut rows = Vec::new();
    for g in gens {
        let Some(dg) = g.total_degree() else { continue };
        if dg as u32 > bound {
            continue;
        }
        for e in exponents_up_to(r.nvars(), bound - dg as u32) {
            rows.push(coords(&g.mul_monomial(&Monomial::from_exponents(&e))));
        }
    }
    let before = rank(field, &rows);
    rows.push(coords(f));
    rank(field, &rows) == before
}

/// Standard monomials of an Artinian quotient, found by normal forms.
pub fn standard_monomials(q: &QuotientRing) -> Vec<Polynomial> {
    let r = q.ambient();
    let one = r.field().one();
    let mut out = Vec::new();
    for d in 0.. {
        let mut found = false;
        for e in exponents_of_degree(r.nvars(), d) {
            let m = Polynomial::monomial(r, Monomial::from_exponents(&e), one.clone());
            if q.reduce(&m) == m {
                out.push(m);
                found = true;
            }
        }
        if !found {
            break;
        }
    }
    out
}

/// `dim_k` of the degree-`n` component of the image of `Sym(M) -> Sym(R^m)`
/// for the map with rows `h`, over an Artinian base: the span of
/// `b * prod h_j` over standard monomials `b` and multisets of rows.
pub fn dense_slice_dimension(q: &QuotientRing, h: &[Vec<Polynomial>], n: u32) -> usize {
    let field = q.ambient().field();
    let basis = standard_monomials(q);
    if n == 0 {
        return basis.len();
    }
    let a = h.len();
    let m = h.first().map_or(0, |r| r.len());
    type Elem = BTreeMap<Vec<u32>, Polynomial>;
    let form = |row: &Vec<Polynomial>| -> Elem {
        let mut e = Elem::new();
        for (i, c) in row.iter().enumerate() {
            if !c.is_zero() {
                let mut k = vec![0; m];
                k[i] = 1;
                e.insert(k, c.clone());
            }
        }
        e
    };
    let mul = |x: &Elem, y: &Elem| -> Elem {
        let mut out = Elem::new();
        for (ex, px) in x {
            for (ey, py) in y {
                let k: Vec<u32> = ex.iter().zip(ey).map(|(s, t)| s + t).collect();
                let prod = q.reduce(&(px * py));
                let slot = out.entry(k).or_insert_with(|| Polynomial::zero(q.ambient()));
                *slot = q.reduce(&(&*slot + &prod));
            }
        }
        out.retain(|_, p| !p.is_zero());
        out
    };
    let forms: Vec<Elem> = h.iter().map(form).collect();
    let mut rows = Vec::new();
    for multiset in exponents_of_degree(a, n) {
        let mut prod: Option<Elem> = None;
        for (j, &e) in multiset.iter().enumerate() {
            for _ in 0..e {
                prod = Some(match prod {
                    None => forms[j].clone(),
                    Some(p) => mul(&p, &forms[j]),
                });
            }
        }
        let prod = prod.unwrap();
        for b in &basis {
            let mut row = BTreeMap::new();
            for (k, p) in &prod {
                for (mono, c) in q.reduce(&(b * p)).terms() {
                    row.insert((k.clone(), mono.exponents().to_vec()), c.clone());
                }
            }
            rows.push(row);
        }
    }
    rank(field, &rows)
}

/// `dim_k ker(A)` for `A` over an Artinian base, as a linear map of
/// `k`-vector spaces.
pub fn dense_kernel_dimension(a: &PolyMatrix) -> usize {
    let q = a.ring();
    let basis = standard_monomials(q);
    let mut rows = Vec::new();
    for j in 0..a.ncols() {
        for b in &basis {
            let mut row = BTreeMap::new();
            for i in 0..a.nrows() {
                for (mono, c) in q.reduce(&(b * a.get(i, j))).terms() {
                    row.insert((i, mono.exponents().to_vec()), c.clone());
                }
            }
            rows.push(row);
        }
    }
    a.ncols() * basis.len() - rank(q.ambient().field(), &rows)
}
