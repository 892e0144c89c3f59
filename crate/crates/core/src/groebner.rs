//! Groebner bases of ideals and the ideal-theoretic operations built on them.

use std::fmt;
use std::sync::Arc;

use crate::engine;
use crate::error::{Error, Result};
use crate::polyring::{Ideal, Monomial, MonomialOrder, OrderKind, PolyRing, Polynomial};

/// A reduced, monic Groebner basis, sorted by leading monomial descending.
///
/// The monomial order is the order of `ring`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// Wraps polynomials that are already a reduced basis in `ring`'s order.
    pub(crate) fn from_reduced(ring: &Arc<PolyRing>, polys: Vec<Polynomial>) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            polys,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.polys.iter().filter_map(|p| p.lead_monomial()).collect()
    }

    /// Whether the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|p| p.is_constant() && !p.is_zero())
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.polys.clone()).expect("same ring")
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.ring().same_as(&self.ring) {
            return Err(Error::RingMismatch(format!(
                "polynomial in {} reduced against a basis in {} ({})",
                f.ring(),
                self.ring,
                self.ring.order()
            )));
        }
        Ok(self.reduce(f))
    }

    /// Normal form of a polynomial known to live in this basis' ring.
    pub(crate) fn reduce(&self, f: &Polynomial) -> Polynomial {
        if self.polys.is_empty() || f.is_zero() {
            return f.clone();
        }
        let basis: Vec<engine::RawVec> = self.polys.iter().map(|p| vec![p.terms().to_vec()]).collect();
        let mut r = engine::reduce(vec![f.terms().to_vec()], &basis, &self.ring.order());
        Polynomial::from_canonical(&self.ring, r.pop().unwrap())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.polys.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Reduced Groebner basis of `ideal` under `order`.
///
/// The basis lives in a copy of the ideal's ring carrying `order`.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> Result<GroebnerBasis> {
    let ring = if ideal.ring().order() == order {
        ideal.ring().clone()
    } else {
        ideal.ring().with_order(order)?
    };
    let gens: Vec<engine::RawVec> = ideal
        .gens()
        .iter()
        .map(|g| Ok(vec![g.embed(&ring)?.into_terms()]))
        .collect::<Result<_>>()?;
    let gb = engine::groebner(gens, 1, &order);
    let polys = gb
        .into_iter()
        .map(|mut v| Polynomial::from_canonical(&ring, v.pop().unwrap()))
        .collect();
    Ok(GroebnerBasis { ring, polys })
}

/// Groebner basis in the ideal's own ring order.
pub fn groebner_basis(ideal: &Ideal) -> Result<GroebnerBasis> {
    buchberger(ideal, ideal.ring().order())
}

pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(f)
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    f.check_ring(&Polynomial::zero(ideal.ring()))?;
    groebner_basis(ideal)?.contains(f)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    if !a.ring().same_as(b.ring()) {
        return Err(Error::RingMismatch(format!("{} vs {}", a.ring(), b.ring())));
    }
    Ok(groebner_basis(a)?.polys == groebner_basis(b)?.polys)
}

/// Whether every generator of `a` lies in `b`.
pub fn ideal_contained(a: &Ideal, b: &Ideal) -> Result<bool> {
    let gb = groebner_basis(b)?;
    for g in a.gens() {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn indices_of(ring: &PolyRing, names: &[&str]) -> Result<Vec<usize>> {
    names
        .iter()
        .map(|n| ring.var_index(n).ok_or_else(|| Error::UnknownVariable(n.to_string())))
        .collect()
}

/// `ideal ∩ k[remaining variables]`, via a block order that puts the
/// dropped variables first.
pub fn eliminate(ideal: &Ideal, drop_vars: &[&str]) -> Result<Ideal> {
    let ring = ideal.ring();
    let drop = indices_of(ring, drop_vars)?;
    if drop.is_empty() {
        return Ok(ideal.clone());
    }
    let mut names: Vec<&str> = drop.iter().map(|&i| ring.vars()[i].as_str()).collect();
    names.extend(
        ring.vars()
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, v)| v.as_str()),
    );
    let k = drop.len();
    let order = if k == ring.nvars() {
        MonomialOrder::GrevLex
    } else {
        MonomialOrder::Block {
            elim: k,
            inner: OrderKind::GrevLex,
        }
    };
    let elim_ring = PolyRing::new(ring.field(), &names, order)?;
    let gb = groebner_basis(&ideal.embed(&elim_ring)?)?;
    let kept = gb
        .polys
        .iter()
        .filter(|p| (0..k).all(|i| !p.uses_var(i)))
        .map(|p| p.embed(ring))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, kept)
}

/// `P / I` together with a reduced Groebner basis of `I`.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    ambient: Arc<PolyRing>,
    ideal: Ideal,
    gb: GroebnerBasis,
}

impl PartialEq for QuotientRing {
    fn eq(&self, other: &Self) -> bool {
        self.ambient.same_as(&other.ambient) && self.gb.polys == other.gb.polys
    }
}

impl QuotientRing {
    pub fn new(ideal: Ideal) -> Result<Arc<QuotientRing>> {
        let gb = groebner_basis(&ideal)?;
        Ok(Arc::new(QuotientRing {
            ambient: ideal.ring().clone(),
            ideal,
            gb,
        }))
    }

    /// The polynomial ring itself, as a quotient by the zero ideal.
    pub fn polynomial(ring: &Arc<PolyRing>) -> Arc<QuotientRing> {
        Arc::new(QuotientRing {
            ambient: ring.clone(),
            ideal: Ideal::zero(ring),
            gb: GroebnerBasis::from_reduced(ring, Vec::new()),
        })
    }

    pub(crate) fn from_gb(ideal: Ideal, gb: GroebnerBasis) -> Arc<QuotientRing> {
        Arc::new(QuotientRing {
            ambient: gb.ring.clone(),
            ideal,
            gb,
        })
    }

    pub fn ambient(&self) -> &Arc<PolyRing> {
        &self.ambient
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Canonical representative of the class of `f`.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.gb.reduce(f)
    }

    pub fn is_zero_ring(&self) -> bool {
        self.gb.is_unit()
    }

    /// `P / (I + J)` for an ideal `J` of the ambient ring.
    pub fn quotient_by(&self, extra: &Ideal) -> Result<Arc<QuotientRing>> {
        let mut gens = self.gb.polys.clone();
        gens.extend(extra.embed(&self.ambient)?.gens().iter().cloned());
        QuotientRing::new(Ideal::new(&self.ambient, gens)?)
    }

    /// `(P[fresh]) / I P[fresh]`, fresh variables appended.
    ///
    /// Appending variables leaves the order on old monomials unchanged,
    /// so the reduced basis carries over.
    pub fn adjoin(&self, fresh: &[&str]) -> Result<Arc<QuotientRing>> {
        for (i, v) in fresh.iter().enumerate() {
            if self.ambient.var_index(v).is_some() || fresh[..i].contains(v) {
                return Err(Error::VariableCollision(v.to_string()));
            }
        }
        let mut vars: Vec<&str> = self.ambient.vars().iter().map(|s| s.as_str()).collect();
        vars.extend(fresh.iter().copied());
        let order = match self.ambient.order() {
            MonomialOrder::Block { .. } => MonomialOrder::GrevLex,
            o => o,
        };
        let ring = PolyRing::new(self.ambient.field(), &vars, order)?;
        let ideal = self.ideal.embed(&ring)?;
        if order != self.ambient.order() {
            return QuotientRing::new(ideal);
        }
        let polys = self
            .gb
            .polys
            .iter()
            .map(|p| p.embed(&ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(QuotientRing::from_gb(ideal, GroebnerBasis::from_reduced(&ring, polys)))
    }
}

impl fmt::Display for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.ambient, self.ideal)
    }
}

/// Kernel of the map `k[source_vars, fixed_vars] -> target` sending each
/// source variable to its image and each fixed variable to itself. All
/// other target variables are eliminated.
///
/// The result is a reduced Groebner basis in the ring
/// `k[source_vars, fixed_vars]` with grevlex.
pub fn ring_map_kernel(
    source_vars: &[&str],
    images: &[Polynomial],
    target: &QuotientRing,
    fixed_vars: &[&str],
) -> Result<GroebnerBasis> {
    if source_vars.len() != images.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} source variables but {} images",
            source_vars.len(),
            images.len()
        )));
    }
    let tring = target.ambient();
    for v in source_vars {
        if tring.var_index(v).is_some() {
            return Err(Error::VariableCollision(v.to_string()));
        }
    }
    indices_of(tring, fixed_vars)?;
    let elim: Vec<&str> = tring
        .vars()
        .iter()
        .map(|s| s.as_str())
        .filter(|v| !fixed_vars.contains(v))
        .collect();
    let mut names = elim.clone();
    names.extend(source_vars.iter().copied());
    names.extend(fixed_vars.iter().copied());
    let big = PolyRing::new(
        tring.field(),
        &names,
        MonomialOrder::Block {
            elim: elim.len(),
            inner: OrderKind::GrevLex,
        },
    )?;
    let mut gens = target.gb().to_ideal().embed(&big)?.gens().to_vec();
    for (s, img) in source_vars.iter().zip(images) {
        if !img.ring().same_as(tring) {
            return Err(Error::RingMismatch(format!("image {img} is not in {tring}")));
        }
        gens.push(&Polynomial::var_named(&big, s)? - &img.embed(&big)?);
    }
    let gb = groebner_basis(&Ideal::new(&big, gens)?)?;

    let mut small_names: Vec<&str> = source_vars.to_vec();
    small_names.extend(fixed_vars.iter().copied());
    let small = PolyRing::new(tring.field(), &small_names, MonomialOrder::GrevLex)?;
    let kept = gb
        .polys
        .iter()
        .filter(|p| (0..elim.len()).all(|i| !p.uses_var(i)))
        .map(|p| p.embed(&small))
        .collect::<Result<Vec<_>>>()?;
    // block order restricted to the inner block is grevlex, so this is reduced
    Ok(GroebnerBasis::from_reduced(&small, kept))
}

fn support_mask(m: &Monomial) -> u64 {
    m.exponents()
        .iter()
        .enumerate()
        .fold(0, |acc, (i, &e)| if e > 0 { acc | (1u64 << i) } else { acc })
}

/// Krull dimension: the largest set of variables independent modulo the
/// leading-term ideal. `-1` for the zero ring.
pub fn krull_dim(q: &QuotientRing) -> i64 {
    if q.is_zero_ring() {
        return -1;
    }
    let n = q.ambient.nvars();
    assert!(n <= 64, "krull_dim supports at most 64 variables");
    let masks: Vec<u64> = q.gb.leading_monomials().into_iter().map(support_mask).collect();
    fn search(i: usize, n: usize, chosen: u64, size: i64, masks: &[u64], best: &mut i64) {
        if size + (n - i) as i64 <= *best {
            return;
        }
        if i == n {
            *best = size;
            return;
        }
        let with = chosen | (1 << i);
        if !masks.iter().any(|&m| m & !with == 0) {
            search(i + 1, n, with, size + 1, masks, best);
        }
        search(i + 1, n, chosen, size, masks, best);
    }
    let mut best = 0;
    search(0, n, 0, 0, &masks, &mut best);
    best
}

/// Vector-space dimension over the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dimension {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::Infinite => write!(f, "infinite"),
        }
    }
}

/// Number of monomials in the variables `vars` outside the monomial ideal
/// generated by `leads` (restricted to those variables), or `None` if
/// infinite. Leads are exponent vectors over the full variable list and
/// must only involve `vars`.
pub(crate) fn count_standard(leads: &[Vec<u32>], vars: &[usize]) -> Option<u64> {
    if leads.iter().any(|l| l.iter().all(|&e| e == 0)) {
        return Some(0);
    }
    for &v in vars {
        let pure = leads
            .iter()
            .any(|l| l[v] > 0 && l.iter().enumerate().all(|(i, &e)| i == v || e == 0));
        if !pure {
            return None;
        }
    }
    let n = leads.first().map_or(0, |l| l.len());
    let mut e = vec![0u32; n];
    fn in_ideal(e: &[u32], leads: &[Vec<u32>]) -> bool {
        leads.iter().any(|l| l.iter().zip(e).all(|(a, b)| a <= b))
    }
    fn rec(k: usize, vars: &[usize], e: &mut Vec<u32>, leads: &[Vec<u32>]) -> u64 {
        if k == vars.len() {
            return 1;
        }
        let v = vars[k];
        let mut total = 0;
        loop {
            if in_ideal(e, leads) {
                break;
            }
            total += rec(k + 1, vars, e, leads);
            e[v] += 1;
        }
        e[v] = 0;
        total
    }
    Some(rec(0, vars, &mut e, leads))
}

/// Number of standard monomials, when finite.
pub fn k_dimension(q: &QuotientRing) -> Dimension {
    if q.is_zero_ring() {
        return Dimension::Finite(0);
    }
    let n = q.ambient.nvars();
    let leads: Vec<Vec<u32>> = q
        .gb
        .leading_monomials()
        .into_iter()
        .map(|m| m.exponents().to_vec())
        .collect();
    if leads.is_empty() {
        return if n == 0 { Dimension::Finite(1) } else { Dimension::Infinite };
    }
    let vars: Vec<usize> = (0..n).collect();
    match count_standard(&leads, &vars) {
        Some(c) => Dimension::Finite(c),
        None => Dimension::Infinite,
    }
}

/// All exponent vectors over `vars` of weighted degree exactly `d`.
fn monomials_of_weight(vars: &[usize], weights: &[u32], n: usize, d: u64) -> Vec<Vec<u32>> {
    fn rec(k: usize, vars: &[usize], weights: &[u32], left: u64, e: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == vars.len() {
            if left == 0 {
                out.push(e.clone());
            }
            return;
        }
        let v = vars[k];
        let w = weights[v] as u64;
        let mut x = 0u64;
        while x * w <= left {
            e[v] = x as u32;
            rec(k + 1, vars, weights, left - x * w, e, out);
            x += 1;
        }
        e[v] = 0;
    }
    let mut out = Vec::new();
    rec(0, vars, weights, d, &mut vec![0; n], &mut out);
    out
}

/// Dimension of the weighted-degree-`d` slice of a quotient by an ideal
/// that is homogeneous for `weights`.
pub fn hilbert_by_degree(q: &QuotientRing, weights: &[u32], d: u64) -> Result<u64> {
    let n = q.ambient.nvars();
    if weights.len() != n {
        return Err(Error::DimensionMismatch(format!("{} weights for {n} variables", weights.len())));
    }
    if q.gb.polys.iter().any(|p| p.homogeneous_degree(weights).is_none()) {
        return Err(Error::NotHomogeneous);
    }
    if q.is_zero_ring() {
        return Ok(0);
    }
    let pos: Vec<usize> = (0..n).filter(|&i| weights[i] > 0).collect();
    let zero: Vec<usize> = (0..n).filter(|&i| weights[i] == 0).collect();
    let leads: Vec<Vec<u32>> = q
        .gb
        .leading_monomials()
        .into_iter()
        .map(|m| m.exponents().to_vec())
        .collect();
    let mut total = 0;
    for y in monomials_of_weight(&pos, weights, n, d) {
        // leads whose positive-weight part divides y, cut down to weight-0 vars
        let colon: Vec<Vec<u32>> = leads
            .iter()
            .filter(|l| pos.iter().all(|&i| l[i] <= y[i]))
            .map(|l| {
                let mut c = l.clone();
                for &i in &pos {
                    c[i] = 0;
                }
                c
            })
            .collect();
        if colon.is_empty() {
            if zero.is_empty() {
                total += 1;
                continue;
            }
            return Err(Error::InfiniteSlice);
        }
        match count_standard(&colon, &zero) {
            Some(c) => total += c,
            None => return Err(Error::InfiniteSlice),
        }
    }
    Ok(total)
}

/// `f ∈ √I`, by checking `1 ∈ I + (1 - w f)` with a fresh variable `w`.
pub fn radical_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    f.check_ring(&Polynomial::zero(ideal.ring()))?;
    let ring = ideal.ring();
    let w = ring.fresh_name("w");
    let mut vars: Vec<&str> = ring.vars().iter().map(|s| s.as_str()).collect();
    vars.push(&w);
    let big = PolyRing::new(ring.field(), &vars, MonomialOrder::GrevLex)?;
    let mut gens = ideal.embed(&big)?.gens().to_vec();
    let wf = &Polynomial::var_named(&big, &w)? * &f.embed(&big)?;
    gens.push(&Polynomial::one(&big) - &wf);
    Ok(groebner_basis(&Ideal::new(&big, gens)?)?.is_unit())
}
