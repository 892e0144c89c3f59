//! Submodules of free modules over a quotient ring `R = P/I`.
//!
//! All Groebner computations happen upstairs in `P^r` with `I` adjoined in
//! every component. Vectors are ordered position-over-term, the smaller
//! component index dominant.

use std::fmt;
use std::sync::Arc;

use crate::engine::{self, RawVec};
use crate::error::{Error, Result};
use crate::groebner::{count_standard, k_dimension, Dimension, QuotientRing};
use crate::polyring::{terms, Polynomial};

pub(crate) fn same_quotient(a: &Arc<QuotientRing>, b: &Arc<QuotientRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn check_same(a: &Arc<QuotientRing>, b: &Arc<QuotientRing>) -> Result<()> {
    if same_quotient(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!("{a} vs {b}")))
    }
}

/// An element of `R^a`, stored with entries in normal form modulo `I`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleVector {
    ring: Arc<QuotientRing>,
    entries: Vec<Polynomial>,
}

impl ModuleVector {
    pub fn new(ring: &Arc<QuotientRing>, entries: Vec<Polynomial>) -> Result<Self> {
        let amb = ring.ambient();
        let entries = entries
            .into_iter()
            .map(|p| {
                if !p.ring().same_as(amb) {
                    return Err(Error::RingMismatch(format!("entry {p} is not in {amb}")));
                }
                Ok(ring.reduce(&p))
            })
            .collect::<Result<_>>()?;
        Ok(ModuleVector {
            ring: ring.clone(),
            entries,
        })
    }

    pub fn zero(ring: &Arc<QuotientRing>, rank: usize) -> Self {
        ModuleVector {
            ring: ring.clone(),
            entries: vec![Polynomial::zero(ring.ambient()); rank],
        }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(ring: &Arc<QuotientRing>, rank: usize, i: usize) -> Self {
        let mut v = Self::zero(ring, rank);
        v.entries[i] = ring.reduce(&Polynomial::one(ring.ambient()));
        v
    }

    fn from_raw(ring: &Arc<QuotientRing>, raw: RawVec) -> Self {
        let amb = ring.ambient();
        ModuleVector {
            ring: ring.clone(),
            entries: raw
                .into_iter()
                .map(|t| ring.reduce(&Polynomial::from_canonical(amb, t)))
                .collect(),
        }
    }

    fn to_raw(&self) -> RawVec {
        self.entries.iter().map(|p| p.terms().to_vec()).collect()
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        check_same(&self.ring, &other.ring)?;
        if self.rank() != other.rank() {
            return Err(Error::DimensionMismatch(format!("rank {} vs {}", self.rank(), other.rank())));
        }
        Ok(ModuleVector {
            ring: self.ring.clone(),
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, c: &Polynomial) -> Result<ModuleVector> {
        if !c.ring().same_as(self.ring.ambient()) {
            return Err(Error::RingMismatch(format!("scalar {c} is not in {}", self.ring.ambient())));
        }
        Ok(ModuleVector {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|p| self.ring.reduce(&(p * c))).collect(),
        })
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// A finitely generated submodule of `R^rank`.
#[derive(Clone, Debug, PartialEq)]
pub struct Submodule {
    ring: Arc<QuotientRing>,
    rank: usize,
    gens: Vec<ModuleVector>,
}

impl Submodule {
    pub fn new(ring: &Arc<QuotientRing>, rank: usize, gens: Vec<ModuleVector>) -> Result<Self> {
        for g in &gens {
            check_same(ring, &g.ring)?;
            if g.rank() != rank {
                return Err(Error::DimensionMismatch(format!(
                    "generator of rank {} in a submodule of rank {rank}",
                    g.rank()
                )));
            }
        }
        Ok(Submodule {
            ring: ring.clone(),
            rank,
            gens,
        })
    }

    /// Builds a submodule from rows of polynomials.
    pub fn from_rows(ring: &Arc<QuotientRing>, rank: usize, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let gens = rows
            .into_iter()
            .map(|r| ModuleVector::new(ring, r))
            .collect::<Result<Vec<_>>>()?;
        Submodule::new(ring, rank, gens)
    }

    /// An ideal of `R` as a submodule of `R^1`.
    pub fn from_ideal_gens(ring: &Arc<QuotientRing>, gens: &[Polynomial]) -> Result<Self> {
        Submodule::from_rows(ring, 1, gens.iter().map(|g| vec![g.clone()]).collect())
    }

    /// All of `R^rank`.
    pub fn free(ring: &Arc<QuotientRing>, rank: usize) -> Self {
        Submodule {
            ring: ring.clone(),
            rank,
            gens: (0..rank).map(|i| ModuleVector::unit(ring, rank, i)).collect(),
        }
    }

    pub fn zero(ring: &Arc<QuotientRing>, rank: usize) -> Self {
        Submodule {
            ring: ring.clone(),
            rank,
            gens: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gens(&self) -> &[ModuleVector] {
        &self.gens
    }

    /// The submodule generated by both generator lists.
    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        check_same(&self.ring, &other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Submodule::new(&self.ring, self.rank, gens)
    }

    /// Generators with zero vectors removed.
    pub fn nonzero_gens(&self) -> Vec<ModuleVector> {
        self.gens.iter().filter(|g| !g.is_zero()).cloned().collect()
    }
}

impl fmt::Display for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

/// A rectangular matrix over `R`, entries reduced modulo `I`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    ring: Arc<QuotientRing>,
    nrows: usize,
    ncols: usize,
    entries: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn new(ring: &Arc<QuotientRing>, ncols: usize, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let amb = ring.ambient();
        let mut entries = Vec::with_capacity(rows.len());
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            let row = row
                .into_iter()
                .map(|p| {
                    if p.ring().same_as(amb) {
                        Ok(ring.reduce(&p))
                    } else {
                        Err(Error::RingMismatch(format!("entry {p} is not in {amb}")))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            entries.push(row);
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            nrows: entries.len(),
            ncols,
            entries,
        })
    }

    pub fn zero(ring: &Arc<QuotientRing>, nrows: usize, ncols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            nrows,
            ncols,
            entries: vec![vec![Polynomial::zero(ring.ambient()); ncols]; nrows],
        }
    }

    pub fn identity(ring: &Arc<QuotientRing>, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.entries[i][i] = ring.reduce(&Polynomial::one(ring.ambient()));
        }
        m
    }

    /// The matrix whose columns are the generators of `s`.
    pub fn from_columns(s: &Submodule) -> Self {
        let mut m = Self::zero(&s.ring, s.rank, s.gens.len());
        for (j, g) in s.gens.iter().enumerate() {
            for i in 0..s.rank {
                m.entries[i][j] = g.entries[i].clone();
            }
        }
        m
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> ModuleVector {
        ModuleVector {
            ring: self.ring.clone(),
            entries: self.entries[i].clone(),
        }
    }

    pub fn column(&self, j: usize) -> ModuleVector {
        ModuleVector {
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|r| r[j].clone()).collect(),
        }
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = Self::zero(&self.ring, self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                t.entries[j][i] = self.entries[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        check_same(&self.ring, &other.ring)?;
        if self.ncols != other.nrows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let mut out = Self::zero(&self.ring, self.nrows, other.ncols);
        for i in 0..self.nrows {
            for j in 0..other.ncols {
                let mut acc = Polynomial::zero(self.ring.ambient());
                for k in 0..self.ncols {
                    acc = &acc + &(&self.entries[i][k] * &other.entries[k][j]);
                }
                out.entries[i][j] = self.ring.reduce(&acc);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|p| p.is_zero())
    }

    /// Submodule of `R^ncols` spanned by the rows.
    pub fn row_span(&self) -> Submodule {
        Submodule {
            ring: self.ring.clone(),
            rank: self.ncols,
            gens: (0..self.nrows).map(|i| self.row(i)).collect(),
        }
    }

    /// Submodule of `R^nrows` spanned by the columns.
    pub fn column_span(&self) -> Submodule {
        Submodule {
            ring: self.ring.clone(),
            rank: self.nrows,
            gens: (0..self.ncols).map(|j| self.column(j)).collect(),
        }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| {
                let parts: Vec<String> = r.iter().map(|p| p.to_string()).collect();
                format!("[{}]", parts.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// `I * e_k` for every component `k` in `range`, inside vectors of length `len`.
fn relation_block(ring: &QuotientRing, len: usize, range: std::ops::Range<usize>) -> Vec<RawVec> {
    let mut out = Vec::new();
    for k in range {
        for g in ring.gb().polys() {
            let mut v: RawVec = vec![Vec::new(); len];
            v[k] = g.terms().to_vec();
            out.push(v);
        }
    }
    out
}

/// A Groebner basis of `S + I R^r` in `P^r`.
#[derive(Clone, Debug)]
pub struct ModuleGb {
    ring: Arc<QuotientRing>,
    rank: usize,
    basis: Vec<RawVec>,
}

impl ModuleGb {
    pub fn new(s: &Submodule) -> ModuleGb {
        let ord = s.ring.ambient().order();
        let base = relation_block(&s.ring, s.rank, 0..s.rank);
        let gens = s.gens.iter().map(|g| g.to_raw()).collect();
        ModuleGb {
            ring: s.ring.clone(),
            rank: s.rank,
            basis: engine::groebner_over(base, gens, s.rank, &ord),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Normal form of `v`: zero iff `v` lies in the submodule.
    pub fn reduce(&self, v: &ModuleVector) -> Result<ModuleVector> {
        check_same(&self.ring, &v.ring)?;
        if v.rank() != self.rank {
            return Err(Error::DimensionMismatch(format!("rank {} vs {}", v.rank(), self.rank)));
        }
        let ord = self.ring.ambient().order();
        let r = engine::reduce(v.to_raw(), &self.basis, &ord);
        Ok(ModuleVector::from_raw(&self.ring, r))
    }

    pub fn contains(&self, v: &ModuleVector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// The basis elements whose leads are not leads of `I`, reduced
    /// modulo `I`. The others map into the span of these.
    pub fn to_submodule(&self) -> Submodule {
        let ideal_leads = self.ring.gb().leading_monomials();
        let gens = self
            .basis
            .iter()
            .filter(|v| match engine::lead(v) {
                Some((_, (m, _))) => !ideal_leads.iter().any(|l| l.divides(m)),
                None => false,
            })
            .map(|v| ModuleVector::from_raw(&self.ring, v.clone()))
            .filter(|v| !v.is_zero())
            .collect();
        Submodule {
            ring: self.ring.clone(),
            rank: self.rank,
            gens,
        }
    }

    /// `dim_k R^r / S`, from standard monomials component by component.
    pub fn quotient_dimension(&self) -> Dimension {
        let n = self.ring.ambient().nvars();
        let vars: Vec<usize> = (0..n).collect();
        let mut total = 0u64;
        for k in 0..self.rank {
            let leads: Vec<Vec<u32>> = self
                .basis
                .iter()
                .filter_map(|v| match engine::lead(v) {
                    Some((c, (m, _))) if c == k => Some(m.exponents().to_vec()),
                    _ => None,
                })
                .collect();
            if leads.is_empty() {
                if n == 0 {
                    total += 1;
                    continue;
                }
                return Dimension::Infinite;
            }
            match count_standard(&leads, &vars) {
                Some(c) => total += c,
                None => return Dimension::Infinite,
            }
        }
        Dimension::Finite(total)
    }
}

/// Reduced module Groebner basis of `S`, as a submodule over `R`.
pub fn module_gb(s: &Submodule) -> Submodule {
    ModuleGb::new(s).to_submodule()
}

pub fn module_member(v: &ModuleVector, s: &Submodule) -> Result<bool> {
    if v.rank() != s.rank {
        return Err(Error::DimensionMismatch(format!("rank {} vs {}", v.rank(), s.rank)));
    }
    ModuleGb::new(s).contains(v)
}

/// Whether every generator of `a` lies in `b`.
pub fn submodule_contained(a: &Submodule, b: &Submodule) -> Result<bool> {
    let gb = ModuleGb::new(b);
    for g in &a.gens {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn submodule_equal(a: &Submodule, b: &Submodule) -> Result<bool> {
    Ok(submodule_contained(a, b)? && submodule_contained(b, a)?)
}

/// `dim_k S` for a submodule of `R^r` over an Artinian `R`.
pub fn submodule_dimension(s: &Submodule) -> Result<u64> {
    let total = match k_dimension(&s.ring) {
        Dimension::Finite(d) => d * s.rank as u64,
        Dimension::Infinite => return Err(Error::InfiniteSlice),
    };
    match ModuleGb::new(s).quotient_dimension() {
        Dimension::Finite(q) => Ok(total - q),
        Dimension::Infinite => Err(Error::InfiniteSlice),
    }
}

/// Groebner basis of the generators tagged with unit vectors:
/// `(g_j, e_j)` together with `I` in every component. The first `rank`
/// components dominate, so the elements with vanishing first part
/// generate the relations among the `g_j`.
#[derive(Clone, Debug)]
pub struct Lifter {
    ring: Arc<QuotientRing>,
    rank: usize,
    ngens: usize,
    basis: Vec<RawVec>,
}

impl Lifter {
    pub fn new(s: &Submodule) -> Lifter {
        let r = s.rank;
        let n = s.gens.len();
        let ord = s.ring.ambient().order();
        let one = Polynomial::one(s.ring.ambient()).terms().to_vec();
        let base = relation_block(&s.ring, r + n, 0..r + n);
        let gens = s
            .gens
            .iter()
            .enumerate()
            .map(|(j, g)| {
                let mut v = g.to_raw();
                v.resize(r + n, Vec::new());
                v[r + j] = one.clone();
                v
            })
            .collect();
        Lifter {
            ring: s.ring.clone(),
            rank: r,
            ngens: n,
            basis: engine::groebner_over(base, gens, r + n, &ord),
        }
    }

    /// Coefficients `c` with `sum c_j g_j = v`, if `v` lies in the span.
    pub fn lift(&self, v: &ModuleVector) -> Result<Option<Vec<Polynomial>>> {
        check_same(&self.ring, &v.ring)?;
        if v.rank() != self.rank {
            return Err(Error::DimensionMismatch(format!("rank {} vs {}", v.rank(), self.rank)));
        }
        let ord = self.ring.ambient().order();
        let mut raw = v.to_raw();
        raw.resize(self.rank + self.ngens, Vec::new());
        let red = engine::reduce(raw, &self.basis, &ord);
        if red[..self.rank].iter().any(|c| !c.is_empty()) {
            return Ok(None);
        }
        let amb = self.ring.ambient();
        let minus_one = amb.field().from_i64(-1);
        Ok(Some(
            red[self.rank..]
                .iter()
                .map(|t| {
                    let neg = terms::scale(t, &minus_one, &crate::polyring::Monomial::one(amb.nvars()));
                    self.ring.reduce(&Polynomial::from_canonical(amb, neg))
                })
                .collect(),
        ))
    }

    /// Relations among the generators, as a submodule of `R^ngens`.
    pub fn syzygies(&self) -> Submodule {
        let ideal_leads = self.ring.gb().leading_monomials();
        let gens = self
            .basis
            .iter()
            .filter(|v| v[..self.rank].iter().all(|c| c.is_empty()))
            .filter(|v| match engine::lead(v) {
                Some((_, (m, _))) => !ideal_leads.iter().any(|l| l.divides(m)),
                None => false,
            })
            .map(|v| ModuleVector::from_raw(&self.ring, v[self.rank..].to_vec()))
            .filter(|v| !v.is_zero())
            .collect();
        Submodule {
            ring: self.ring.clone(),
            rank: self.ngens,
            gens,
        }
    }
}

/// Generators of the relation module among the listed generators of `s`.
pub fn syzygies(s: &Submodule) -> Submodule {
    Lifter::new(s).syzygies()
}

/// `ker(A: R^c -> R^r)`.
pub fn matrix_kernel(a: &PolyMatrix) -> Submodule {
    syzygies(&a.column_span())
}

/// Coefficients expressing `v` in terms of the generators of `s`.
pub fn lift(v: &ModuleVector, s: &Submodule) -> Result<Option<Vec<Polynomial>>> {
    Lifter::new(s).lift(v)
}
