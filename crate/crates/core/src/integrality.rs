//! Integral dependence of submodules, reductions and analytic spread.
//!
//! Submodules `U ⊆ L ⊆ M` are given in coordinates of the generators of
//! `M` and pushed through the versal map into `R^m`. Powers live in
//! `Sym_n(R^m)`, whose basis is the degree-`n` monomials in `t_1..t_m`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::freemod::{same_quotient, ModuleGb, ModuleVector, Submodule};
use crate::groebner::QuotientRing;
use crate::modpres::{versal_map, ModulePresentation};
use crate::polyring::{Ideal, Polynomial};
use crate::rees::rees_ideal;

/// Exponent vectors of degree `n` in `m` variables, lex descending.
pub fn sym_basis(m: usize, n: u32) -> Vec<Vec<u32>> {
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
    if m == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(0, n, &mut vec![0; m], &mut out);
    out
}

/// An element of `Sym_n(R^m)`, keyed by exponent vector.
type SymElement = BTreeMap<Vec<u32>, Polynomial>;

fn linear_form(v: &ModuleVector) -> SymElement {
    let m = v.rank();
    let mut out = SymElement::new();
    for (i, c) in v.entries().iter().enumerate() {
        if !c.is_zero() {
            let mut e = vec![0; m];
            e[i] = 1;
            out.insert(e, c.clone());
        }
    }
    out
}

fn sym_mul(ring: &QuotientRing, a: &SymElement, b: &SymElement) -> SymElement {
    let mut out = SymElement::new();
    for (ea, pa) in a {
        for (eb, pb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let prod = pa * pb;
            let slot = out.entry(e).or_insert_with(|| Polynomial::zero(ring.ambient()));
            *slot = &*slot + &prod;
        }
    }
    out.into_iter()
        .filter_map(|(e, p)| {
            let p = ring.reduce(&p);
            (!p.is_zero()).then_some((e, p))
        })
        .collect()
}

/// Pairwise products, zeros and duplicates dropped.
fn products(ring: &QuotientRing, a: &[SymElement], b: &[SymElement]) -> Vec<SymElement> {
    let mut out: Vec<SymElement> = Vec::new();
    for x in a {
        for y in b {
            let p = sym_mul(ring, x, y);
            if !p.is_empty() && !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

fn to_submodule(ring: &Arc<QuotientRing>, m: usize, n: u32, elems: &[SymElement]) -> Result<Submodule> {
    let basis = sym_basis(m, n);
    let index: BTreeMap<&Vec<u32>, usize> = basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let zero = Polynomial::zero(ring.ambient());
    let gens = elems
        .iter()
        .map(|el| {
            let mut entries = vec![zero.clone(); basis.len()];
            for (e, p) in el {
                entries[index[e]] = p.clone();
            }
            ModuleVector::new(ring, entries)
        })
        .collect::<Result<Vec<_>>>()?;
    Submodule::new(ring, basis.len(), gens)
}

/// A submodule of `Sym_n(R^m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedPower {
    rank: usize,
    degree: u32,
    module: Submodule,
}

impl GradedPower {
    /// Rank `m` of the free module whose symmetric power this lives in.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn module(&self) -> &Submodule {
        &self.module
    }
}

/// `S^n` inside `Sym_n(R^m)`: all `n`-fold products of generators.
pub fn graded_power(s: &Submodule, n: u32) -> Result<GradedPower> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    let ring = s.ring();
    let forms: Vec<SymElement> = s.gens().iter().map(linear_form).filter(|f| !f.is_empty()).collect();
    // multisets of generator indices, non-decreasing
    let mut out: Vec<SymElement> = Vec::new();
    let mut idx = vec![0usize; n as usize];
    if !forms.is_empty() {
        'outer: loop {
            let mut p = forms[idx[0]].clone();
            for &i in &idx[1..] {
                p = sym_mul(ring, &p, &forms[i]);
            }
            if !p.is_empty() && !out.contains(&p) {
                out.push(p);
            }
            let mut k = idx.len();
            loop {
                if k == 0 {
                    break 'outer;
                }
                k -= 1;
                if idx[k] + 1 < forms.len() {
                    let v = idx[k] + 1;
                    for slot in &mut idx[k..] {
                        *slot = v;
                    }
                    break;
                }
            }
        }
    }
    Ok(GradedPower {
        rank: s.rank(),
        degree: n,
        module: to_submodule(ring, s.rank(), n, &out)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegralityStatus {
    Integral,
    NotDecided,
}

/// Result of a bounded stabilization search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntegralityVerdict {
    pub status: IntegralityStatus,
    /// Least `n` with `U' L'^n = L'^(n+1)`, when found.
    pub witness_degree: Option<u32>,
    pub bound: u32,
}

impl fmt::Display for IntegralityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.status, self.witness_degree) {
            (IntegralityStatus::Integral, Some(n)) => write!(f, "INTEGRAL (witness degree {n})"),
            _ => write!(f, "NOT_DECIDED (bound {})", self.bound),
        }
    }
}

/// Searches `n = 1..=max_degree` for `L'^(n+1) ⊆ U' L'^n`, with `U'`, `L'`
/// submodules of `R^m` read as linear forms.
fn stabilization(ring: &Arc<QuotientRing>, u: &Submodule, l: &Submodule, max_degree: u32) -> Result<IntegralityVerdict> {
    let m = l.rank();
    let uf: Vec<SymElement> = u.gens().iter().map(linear_form).filter(|f| !f.is_empty()).collect();
    let lf: Vec<SymElement> = l.gens().iter().map(linear_form).filter(|f| !f.is_empty()).collect();
    let mut power = lf.clone();
    for n in 1..=max_degree {
        let next = products(ring, &power, &lf);
        let lower = products(ring, &power, &uf);
        let gb = ModuleGb::new(&to_submodule(ring, m, n + 1, &lower)?);
        let target = to_submodule(ring, m, n + 1, &next)?;
        let mut stable = true;
        for g in target.gens() {
            if !gb.contains(g)? {
                stable = false;
                break;
            }
        }
        if stable {
            return Ok(IntegralityVerdict {
                status: IntegralityStatus::Integral,
                witness_degree: Some(n),
                bound: max_degree,
            });
        }
        power = next;
    }
    Ok(IntegralityVerdict {
        status: IntegralityStatus::NotDecided,
        witness_degree: None,
        bound: max_degree,
    })
}

fn check_inside(u: &Submodule, l: &Submodule, m: &ModulePresentation) -> Result<()> {
    for s in [u, l] {
        if s.rank() != m.ngens() || !same_quotient(s.ring(), m.ring()) {
            return Err(Error::DimensionMismatch(format!(
                "submodule of rank {} for a module with {} generators",
                s.rank(),
                m.ngens()
            )));
        }
    }
    let gb = ModuleGb::new(&l.sum(&m.relations())?);
    for g in u.gens() {
        if !gb.contains(g)? {
            return Err(Error::NotContained(format!("{g} is not in {l}")));
        }
    }
    Ok(())
}

/// Whether `L` is integral over `U` inside `M`, through the versal image.
pub fn integral_in(u: &Submodule, l: &Submodule, m: &ModulePresentation, max_degree: u32) -> Result<IntegralityVerdict> {
    check_inside(u, l, m)?;
    let f = versal_map(m)?;
    stabilization(m.ring(), &f.image(u)?, &f.image(l)?, max_degree)
}

/// Whether `U` is a reduction of `M`; the witness is the reduction number.
pub fn is_reduction(u: &Submodule, m: &ModulePresentation, max_degree: u32) -> Result<IntegralityVerdict> {
    integral_in(u, &Submodule::free(m.ring(), m.ngens()), m, max_degree)
}

/// Integrality of the images in `F / QF` over `R / Q`.
pub fn integral_modulo_prime(
    u: &Submodule,
    l: &Submodule,
    m: &ModulePresentation,
    prime: &Ideal,
    max_degree: u32,
) -> Result<IntegralityVerdict> {
    check_inside(u, l, m)?;
    let rq = m.ring().quotient_by(prime)?;
    if rq.is_zero_ring() {
        return Err(Error::NotProper(prime.to_string()));
    }
    let f = versal_map(m)?;
    let down = |s: &Submodule| -> Result<Submodule> {
        let gens = s
            .gens()
            .iter()
            .map(|g| ModuleVector::new(&rq, g.entries().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Submodule::new(&rq, s.rank(), gens)
    };
    stabilization(&rq, &down(&f.image(u)?)?, &down(&f.image(l)?)?, max_degree)
}

/// Krull dimension of the fiber of `R(M)` at a maximal ideal.
pub fn analytic_spread(m: &ModulePresentation, max_ideal: &Ideal) -> Result<u64> {
    let r = rees_ideal(m)?;
    let d = r.fiber_dimension(max_ideal)?;
    Ok(d.max(0) as u64)
}
