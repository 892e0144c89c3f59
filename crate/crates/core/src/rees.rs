//! Rees algebras of modules and of maps to free modules.
//!
//! Every algebra here is a quotient of `P[Y_1..Y_a]`, one `Y` per module
//! generator, graded by `deg Y_j = 1` and `deg x = 0` on base variables.
//! The ring of a presentation is always `k[Y.., base..]` with grevlex.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::freemod::{same_quotient, PolyMatrix, Submodule};
use crate::groebner::{self, Dimension, GroebnerBasis, QuotientRing};
use crate::modpres::{versal_map, ModuleMap, ModulePresentation};
use crate::polyring::{Ideal, Monomial, MonomialOrder, PolyRing, Polynomial};

/// How a presentation was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Versal,
    OfMap,
    Classical,
    Symmetric,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Versal => "versal",
            Provenance::OfMap => "of_map",
            Provenance::Classical => "classical",
            Provenance::Symmetric => "symmetric",
        })
    }
}

/// A graded algebra `P[Y] / J` over the base quotient `P / I`.
#[derive(Clone, Debug)]
pub struct ReesPresentation {
    base: Arc<QuotientRing>,
    sym_vars: Vec<String>,
    target_vars: Vec<String>,
    quotient: Arc<QuotientRing>,
    provenance: Provenance,
}

/// Outcome of comparing two presentations on the same generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReesComparison {
    Equal,
    /// The first relation ideal is strictly contained in the second.
    ProperQuotient,
    Incomparable,
}

impl fmt::Display for ReesComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReesComparison::Equal => "EQUAL",
            ReesComparison::ProperQuotient => "PROPER_QUOTIENT",
            ReesComparison::Incomparable => "INCOMPARABLE",
        })
    }
}

fn numbered(base: &PolyRing, stem: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| base.fresh_name(&format!("{stem}{i}"))).collect()
}

/// `k[Y_1..Y_a, base vars]` with grevlex.
fn sym_ring(base: &QuotientRing, a: usize) -> Result<(Arc<PolyRing>, Vec<String>)> {
    let amb = base.ambient();
    let ys = numbered(amb, "Y", a);
    let mut names: Vec<&str> = ys.iter().map(|s| s.as_str()).collect();
    names.extend(amb.vars().iter().map(|s| s.as_str()));
    Ok((PolyRing::new(amb.field(), &names, MonomialOrder::GrevLex)?, ys))
}

impl ReesPresentation {
    pub fn base(&self) -> &Arc<QuotientRing> {
        &self.base
    }

    pub fn sym_vars(&self) -> &[String] {
        &self.sym_vars
    }

    /// Names of the eliminated target variables, empty for `Sym`.
    pub fn target_vars(&self) -> &[String] {
        &self.target_vars
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.quotient.ambient()
    }

    pub fn relations(&self) -> &Ideal {
        self.quotient.ideal()
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.quotient.gb()
    }

    pub fn quotient(&self) -> &Arc<QuotientRing> {
        &self.quotient
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Weight 1 on `Y` variables, 0 on base variables.
    pub fn weights(&self) -> Vec<u32> {
        let a = self.sym_vars.len();
        (0..self.ring().nvars()).map(|i| u32::from(i < a)).collect()
    }

    pub fn k_dimension(&self) -> Dimension {
        groebner::k_dimension(&self.quotient)
    }

    /// Dimension of the degree-`d` component.
    pub fn hilbert(&self, d: u64) -> Result<u64> {
        groebner::hilbert_by_degree(&self.quotient, &self.weights(), d)
    }

    pub fn krull_dim(&self) -> i64 {
        groebner::krull_dim(&self.quotient)
    }

    /// Reduced basis of the relations, rendered and sorted.
    pub fn relation_strings(&self) -> Vec<String> {
        let mut out: Vec<String> = self.gb().polys().iter().map(|p| p.to_string()).collect();
        out.sort();
        out
    }

    /// Whether every basis element is homogeneous in the `Y` grading.
    pub fn is_y_homogeneous(&self) -> bool {
        let w = self.weights();
        self.gb().polys().iter().all(|p| p.homogeneous_degree(&w).is_some())
    }

    /// `J ∩ P`, moved back into the base ring.
    pub fn contraction(&self) -> Result<Ideal> {
        let ys: Vec<&str> = self.sym_vars.iter().map(|s| s.as_str()).collect();
        let kept = groebner::eliminate(self.relations(), &ys)?;
        kept.embed(self.base.ambient())
    }

    fn fiber_ring(&self, max_ideal: &Ideal) -> Result<Arc<QuotientRing>> {
        if self.base.quotient_by(max_ideal)?.is_zero_ring() {
            return Err(Error::NotProper(max_ideal.to_string()));
        }
        self.quotient.quotient_by(&max_ideal.embed(self.ring())?)
    }

    /// Krull dimension of the fiber `k ⊗ algebra` at a maximal ideal.
    pub fn fiber_dimension(&self, max_ideal: &Ideal) -> Result<i64> {
        Ok(groebner::krull_dim(&*self.fiber_ring(max_ideal)?))
    }
}

impl fmt::Display for ReesPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / ({})", self.ring(), self.relation_strings().join(", "))
    }
}

/// `Sym(M)`: the linear forms from the columns of the presentation.
pub fn sym_presentation(m: &ModulePresentation) -> Result<ReesPresentation> {
    let base = m.ring();
    let (ring, ys) = sym_ring(base, m.ngens())?;
    let mut gens = base.gb().to_ideal().embed(&ring)?.gens().to_vec();
    let phi = m.phi();
    for c in 0..phi.ncols() {
        let mut form = Polynomial::zero(&ring);
        for (j, y) in ys.iter().enumerate() {
            let coeff = phi.get(j, c).embed(&ring)?;
            form = &form + &(&coeff * &Polynomial::var_named(&ring, y)?);
        }
        gens.push(form);
    }
    Ok(ReesPresentation {
        base: base.clone(),
        sym_vars: ys,
        target_vars: Vec::new(),
        quotient: QuotientRing::new(Ideal::new(&ring, gens)?)?,
        provenance: Provenance::Symmetric,
    })
}

/// Kernel of `Y_j -> sum_i h[j][i] T_i` from `P[Y]` to `(P/I)[T]`.
fn image_algebra(base: &Arc<QuotientRing>, h: &PolyMatrix, provenance: Provenance) -> Result<ReesPresentation> {
    let amb = base.ambient();
    let ts = numbered(amb, "T", h.ncols());
    let t_refs: Vec<&str> = ts.iter().map(|s| s.as_str()).collect();
    let target = base.adjoin(&t_refs)?;
    let tring = target.ambient();
    let mut images = Vec::with_capacity(h.nrows());
    for j in 0..h.nrows() {
        let mut img = Polynomial::zero(tring);
        for (i, t) in ts.iter().enumerate() {
            let c = h.get(j, i).embed(tring)?;
            if !c.is_zero() {
                img = &img + &(&c * &Polynomial::var_named(tring, t)?);
            }
        }
        images.push(img);
    }
    let ys = numbered(amb, "Y", h.nrows());
    let y_refs: Vec<&str> = ys.iter().map(|s| s.as_str()).collect();
    let fixed: Vec<&str> = amb.vars().iter().map(|s| s.as_str()).collect();
    let gb = groebner::ring_map_kernel(&y_refs, &images, &target, &fixed)?;
    Ok(ReesPresentation {
        base: base.clone(),
        sym_vars: ys,
        target_vars: ts,
        quotient: QuotientRing::from_gb(gb.to_ideal(), gb),
        provenance,
    })
}

/// The image of `Sym(g)`.
pub fn rees_of_map(g: &ModuleMap) -> Result<ReesPresentation> {
    image_algebra(g.ring(), g.matrix(), Provenance::OfMap)
}

/// `R(M)`, through the versal map. Cached on the module.
pub fn rees_ideal(m: &ModulePresentation) -> Result<Arc<ReesPresentation>> {
    if let Some(r) = m.rees.get() {
        return Ok(r.clone());
    }
    let f = versal_map(m)?;
    let r = Arc::new(image_algebra(m.ring(), f.matrix(), Provenance::Versal)?);
    let _ = m.rees.set(r.clone());
    Ok(r)
}

/// The Rees algebra of an ideal of `R`, as the image of the inclusion.
pub fn classical_ideal_rees(base: &Arc<QuotientRing>, gens: &[Polynomial]) -> Result<ReesPresentation> {
    let s = Submodule::from_ideal_gens(base, gens)?;
    let h = PolyMatrix::new(base, 1, s.gens().iter().map(|g| g.entries().to_vec()).collect())?;
    image_algebra(base, &h, Provenance::Classical)
}

fn check_comparable(a: &ReesPresentation, b: &ReesPresentation) -> Result<()> {
    if !same_quotient(&a.base, &b.base) {
        return Err(Error::RingMismatch(format!("base rings {} and {}", a.base, b.base)));
    }
    if a.sym_vars != b.sym_vars || !a.ring().same_as(b.ring()) {
        return Err(Error::DimensionMismatch(format!(
            "{} vs {} generators",
            a.sym_vars.len(),
            b.sym_vars.len()
        )));
    }
    Ok(())
}

fn basis_contained(a: &ReesPresentation, b: &ReesPresentation) -> Result<bool> {
    for p in a.gb().polys() {
        if !b.gb().reduce(&p.embed(b.ring())?).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn compare_rees(a: &ReesPresentation, b: &ReesPresentation) -> Result<ReesComparison> {
    check_comparable(a, b)?;
    if a.gb().polys() == b.gb().polys() {
        return Ok(ReesComparison::Equal);
    }
    if basis_contained(a, b)? {
        return Ok(ReesComparison::ProperQuotient);
    }
    Ok(ReesComparison::Incomparable)
}

/// Whether every relation of `R(g)` is nilpotent in `R(M)`.
pub fn nilpotent_kernel_check(m: &ModulePresentation, g: &ModuleMap) -> Result<bool> {
    if g.source_gens() != m.ngens() || !same_quotient(g.ring(), m.ring()) {
        return Err(Error::DimensionMismatch("map does not start at the module".into()));
    }
    let rm = rees_ideal(m)?;
    let rg = rees_of_map(g)?;
    check_comparable(&rm, &rg)?;
    for p in rg.gb().polys() {
        let p = p.embed(rm.ring())?;
        if rm.gb().reduce(&p).is_zero() {
            continue;
        }
        if !groebner::radical_member(&p, rm.relations())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All exponent vectors of total degree `d` in `a` variables.
fn y_monomials(a: usize, d: u32) -> Vec<Vec<u32>> {
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
    if a == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; a], &mut out);
    out
}

/// Whether the degree-`d` component of the ideal with basis `a` lies in
/// the ideal with basis `b`. Both bases are `Y`-homogeneous.
fn slice_contained(a: &ReesPresentation, b: &ReesPresentation, d: u32) -> Result<bool> {
    let w = a.weights();
    let ny = a.sym_vars.len();
    let n = a.ring().nvars();
    for p in a.gb().polys() {
        let e = p.homogeneous_degree(&w).ok_or(Error::NotHomogeneous)?;
        if e > d as u64 {
            continue;
        }
        let p = p.embed(b.ring())?;
        for ym in y_monomials(ny, d - e as u32) {
            let mut full = ym.clone();
            full.resize(n, 0);
            let q = p.mul_monomial(&Monomial::from_exponents(&full));
            if !b.gb().reduce(&q).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Compares the degree-`d` components of the kernels of
/// `Sym(R^a) -> Sym(F)` and `Sym(R^a) -> Sym(F) / H Sym(F)`, where `H`
/// spans the last `split_rank` coordinates of `F`. No restriction on the
/// characteristic.
pub fn lemma16_slices_agree(m: &Submodule, split_rank: usize, d: u32) -> Result<bool> {
    let r = m.rank();
    if split_rank > r {
        return Err(Error::DimensionMismatch(format!("split rank {split_rank} exceeds rank {r}")));
    }
    if split_rank == 0 {
        return Ok(true);
    }
    let base = m.ring();
    let rows: Vec<Vec<Polynomial>> = m.gens().iter().map(|g| g.entries().to_vec()).collect();
    let full = PolyMatrix::new(base, r, rows.clone())?;
    let cut = PolyMatrix::new(base, r - split_rank, rows.into_iter().map(|mut row| {
        row.truncate(r - split_rank);
        row
    }).collect())?;
    let k1 = image_algebra(base, &full, Provenance::OfMap)?;
    let k2 = image_algebra(base, &cut, Provenance::OfMap)?;
    Ok(slice_contained(&k2, &k1, d)? && slice_contained(&k1, &k2, d)?)
}

/// The slice comparison above, over a base of characteristic zero where
/// `d!` is invertible.
pub fn lemma16_check(m: &Submodule, split_rank: usize, d: u32) -> Result<bool> {
    let p = m.ring().ambient().field().characteristic();
    if p != 0 {
        return Err(Error::PositiveCharacteristic(p));
    }
    lemma16_slices_agree(m, split_rank, d)
}

/// Whether `R(M ⊗ R[fresh])` equals the extension of `R(M)`.
pub fn base_change_check(m: &ModulePresentation, fresh: &[&str]) -> Result<bool> {
    let big = m.ring().adjoin(fresh)?;
    let rows = m
        .phi()
        .rows()
        .iter()
        .map(|r| r.iter().map(|p| p.embed(big.ambient())).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let phi = PolyMatrix::new(&big, m.phi().ncols(), rows)?;
    let extended = ModulePresentation::new(phi, Some(m.labels().to_vec()))?;
    let after = rees_ideal(&extended)?;
    let before = rees_ideal(m)?;
    groebner::ideal_equal(after.relations(), &before.relations().embed(after.ring())?)
}

/// Whether `Y^M_j -> sum_k surj[j][k] Y^N_k` carries the relations of
/// `R(M)` into those of `R(N)`.
pub fn functoriality_check(m: &ModulePresentation, n: &ModulePresentation, surj: &PolyMatrix) -> Result<bool> {
    if surj.nrows() != m.ngens() || surj.ncols() != n.ngens() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix for {} and {} generators",
            surj.nrows(),
            surj.ncols(),
            m.ngens(),
            n.ngens()
        )));
    }
    if !same_quotient(m.ring(), n.ring()) {
        return Err(Error::RingMismatch("modules over different rings".into()));
    }
    let rm = rees_ideal(m)?;
    let rn = rees_ideal(n)?;
    let target = rn.ring();
    let mut images = Vec::with_capacity(rm.ring().nvars());
    for j in 0..m.ngens() {
        let mut img = Polynomial::zero(target);
        for (k, y) in rn.sym_vars().iter().enumerate() {
            let c = surj.get(j, k).embed(target)?;
            img = &img + &(&c * &Polynomial::var_named(target, y)?);
        }
        images.push(img);
    }
    for v in m.ring().ambient().vars() {
        images.push(Polynomial::var_named(target, v)?);
    }
    for p in rm.gb().polys() {
        if !rn.gb().reduce(&p.substitute(&images)?).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
