//! Sparse multivariate polynomials over a [`FieldSpec`].
//!
//! A [`Polynomial`] is a list of `(Monomial, FieldElement)` terms kept
//! strictly descending in its ring's [`MonomialOrder`], with no zero
//! coefficients. Monomials are dense exponent vectors.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use smallvec::SmallVec;

use crate::coefficients::{FieldElement, FieldSpec};
use crate::error::{Error, Result};

/// Dense exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// The monomial `x_i`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(
                other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * n).collect())
    }
}

/// The two base comparison rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrevLex,
}

/// A monomial order on exponent vectors.
///
/// `Block { elim, inner }` compares the first `elim` exponents with `inner`
/// and breaks ties with `inner` on the remaining ones. Any monomial that
/// involves the first block is then larger than every monomial free of it,
/// which is what elimination relies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block { elim: usize, inner: OrderKind },
}

fn cmp_kind(kind: OrderKind, a: &[u32], b: &[u32]) -> Ordering {
    match kind {
        OrderKind::Lex => a.cmp(b),
        OrderKind::GrevLex => {
            let da: u64 = a.iter().map(|&e| e as u64).sum();
            let db: u64 = b.iter().map(|&e| e as u64).sum();
            da.cmp(&db).then_with(|| {
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            })
        }
    }
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => cmp_kind(OrderKind::Lex, &a.0, &b.0),
            MonomialOrder::GrevLex => cmp_kind(OrderKind::GrevLex, &a.0, &b.0),
            MonomialOrder::Block { elim, inner } => {
                cmp_kind(inner, &a.0[..elim], &b.0[..elim])
                    .then_with(|| cmp_kind(inner, &a.0[elim..], &b.0[elim..]))
            }
        }
    }

    fn validate(&self, nvars: usize) -> Result<()> {
        match *self {
            MonomialOrder::Block { elim, .. } if elim >= nvars && nvars > 0 => Err(
                Error::InvalidRing(format!("block size {elim} must be below {nvars} variables")),
            ),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Block { elim, inner } => write!(f, "block({elim}, {inner:?})"),
        }
    }
}

/// `field[vars]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: FieldSpec,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(
        field: FieldSpec,
        vars: &[S],
        order: MonomialOrder,
    ) -> Result<Arc<PolyRing>> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for v in &vars {
            if v.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        order.validate(vars.len())?;
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        PolyRing::new(self.field, &self.vars, order)
    }

    /// A variable name based on `stem` that does not clash with this ring.
    pub fn fresh_name(&self, stem: &str) -> String {
        let mut name = stem.to_string();
        while self.var_index(&name).is_some() {
            name.push('_');
        }
        name
    }

    pub fn same_as(self: &Arc<Self>, other: &Arc<PolyRing>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(", "))
    }
}

pub type Term = (Monomial, FieldElement);

/// Raw term-list kernels shared by polynomials and module vectors.
pub(crate) mod terms {
    use super::*;

    pub fn canonicalize(mut ts: Vec<Term>, ord: &MonomialOrder) -> Vec<Term> {
        ts.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(ts.len());
        for (m, c) in ts {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = &last.1 + &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        out
    }

    /// `a - c * m * b`; both inputs canonical.
    pub fn sub_mul(a: &[Term], c: &FieldElement, m: &Monomial, b: &[Term], ord: &MonomialOrder) -> Vec<Term> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut i = 0;
        let mut j = 0;
        let next_b = |j: usize| -> Term { (b[j].0.mul(m), -&(c * &b[j].1)) };
        let mut pending: Option<Term> = if b.is_empty() { None } else { Some(next_b(0)) };
        while i < a.len() || pending.is_some() {
            match (a.get(i), pending.as_ref()) {
                (Some(ta), Some(tb)) => match ord.cmp(&ta.0, &tb.0) {
                    Ordering::Greater => {
                        out.push(ta.clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(pending.take().unwrap());
                        j += 1;
                        pending = (j < b.len()).then(|| next_b(j));
                    }
                    Ordering::Equal => {
                        let s = &ta.1 + &tb.1;
                        if !s.is_zero() {
                            out.push((ta.0.clone(), s));
                        }
                        i += 1;
                        j += 1;
                        pending = (j < b.len()).then(|| next_b(j));
                    }
                },
                (Some(ta), None) => {
                    out.push(ta.clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(pending.take().unwrap());
                    j += 1;
                    pending = (j < b.len()).then(|| next_b(j));
                }
                (None, None) => unreachable!(),
            }
        }
        out
    }

    pub fn add(a: &[Term], b: &[Term], ord: &MonomialOrder) -> Vec<Term> {
        match b.first() {
            None => a.to_vec(),
            Some(t) => {
                let minus_one = -&t.1.field().one();
                sub_mul(a, &minus_one, &Monomial::one(t.0.len()), b, ord)
            }
        }
    }

    pub fn sub(a: &[Term], b: &[Term], ord: &MonomialOrder) -> Vec<Term> {
        match b.first() {
            None => a.to_vec(),
            Some(t) => sub_mul(a, &t.1.field().one(), &Monomial::one(t.0.len()), b, ord),
        }
    }

    /// `c * m * a`; order is preserved by multiplicativity.
    pub fn scale(a: &[Term], c: &FieldElement, m: &Monomial) -> Vec<Term> {
        if c.is_zero() {
            return Vec::new();
        }
        a.iter().map(|(mm, cc)| (mm.mul(m), c * cc)).collect()
    }

    pub fn mul(a: &[Term], b: &[Term], ord: &MonomialOrder) -> Vec<Term> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut acc: Vec<Term> = Vec::new();
        for (m, c) in small {
            let neg = -c;
            acc = sub_mul(&acc, &neg, m, large, ord);
        }
        acc
    }

    pub fn make_monic(a: &mut [Term]) {
        if let Some(first) = a.first() {
            if !first.1.is_one() {
                let inv = first.1.inv().expect("leading coefficient is nonzero");
                for t in a.iter_mut() {
                    t.1 = &t.1 * &inv;
                }
            }
        }
    }
}

/// A polynomial in canonical form.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

/// The three ring operations accepted by [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked ring arithmetic; fails on a ring mismatch.
pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    f.check_ring(g)?;
    Ok(match op {
        PolyOp::Add => f + g,
        PolyOp::Sub => f - g,
        PolyOp::Mul => f * g,
    })
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: FieldElement) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &Arc<PolyRing>, n: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(n))
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::monomial(ring, Monomial::variable(ring.nvars(), i), ring.field().one())
    }

    pub fn var_named(ring: &Arc<PolyRing>, name: &str) -> Result<Self> {
        let i = ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var(ring, i))
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: FieldElement) -> Self {
        debug_assert_eq!(m.len(), ring.nvars());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms (any order, duplicates allowed).
    pub fn from_terms(ring: &Arc<PolyRing>, ts: Vec<Term>) -> Self {
        let terms = terms::canonicalize(ts, &ring.order());
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Trusted constructor for already-canonical term lists.
    pub(crate) fn from_canonical(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn lead_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> Option<&FieldElement> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// The common weighted degree of all terms, or `None` if they differ.
    /// The zero polynomial is homogeneous of every degree (reported as 0).
    pub fn homogeneous_degree(&self, weights: &[u32]) -> Option<u64> {
        let mut degs = self.terms.iter().map(|(m, _)| m.weighted_degree(weights));
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponents()[i] > 0)
    }

    pub fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{} vs {}", self.ring, other.ring)))
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: terms::scale(&self.terms, c, &Monomial::one(self.ring.nvars())),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: terms::scale(&self.terms, &self.ring.field().one(), m),
        }
    }

    pub fn monic(&self) -> Polynomial {
        let mut terms = self.terms.clone();
        terms::make_monic(&mut terms);
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Moves this polynomial into `target`, matching variables by name.
    pub fn embed(&self, target: &Arc<PolyRing>) -> Result<Polynomial> {
        if self.ring.same_as(target) {
            return Ok(self.clone());
        }
        if self.ring.field() != target.field() {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring, target)));
        }
        let map = self
            .ring
            .vars()
            .iter()
            .map(|v| target.var_index(v))
            .collect::<Vec<_>>();
        let n = target.nvars();
        let mut ts = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; n];
            for (i, &x) in m.exponents().iter().enumerate() {
                if x > 0 {
                    let j = map[i].ok_or_else(|| Error::UnknownVariable(self.ring.vars()[i].clone()))?;
                    e[j] = x;
                }
            }
            ts.push((Monomial::from_exponents(&e), c.clone()));
        }
        Ok(Polynomial::from_terms(target, ts))
    }

    /// The ring homomorphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.ring.nvars()
            )));
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        for p in images {
            if !p.ring.same_as(&target) {
                return Err(Error::RingMismatch("substitution images".into()));
            }
        }
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &images[i].pow(e);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Writes the polynomial using `names` for the variables.
    pub fn fmt_with(&self, names: &[String], f: &mut impl fmt::Write) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(self.ring.vars(), f)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        debug_assert!(self.ring.same_as(&rhs.ring));
        Polynomial {
            ring: self.ring.clone(),
            terms: terms::add(&self.terms, &rhs.terms, &self.ring.order()),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        debug_assert!(self.ring.same_as(&rhs.ring));
        Polynomial {
            ring: self.ring.clone(),
            terms: terms::sub(&self.terms, &rhs.terms, &self.ring.order()),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        debug_assert!(self.ring.same_as(&rhs.ring));
        Polynomial {
            ring: self.ring.clone(),
            terms: terms::mul(&self.terms, &rhs.terms, &self.ring.order()),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-&self.ring.field().one())
    }
}

/// A finitely generated ideal, given by generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped; all generators must live in `ring`.
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            if !g.ring.same_as(ring) {
                return Err(Error::RingMismatch(format!("generator {g} is not in {ring}")));
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    /// The ideal generated by all variables.
    pub fn variables(ring: &Arc<PolyRing>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect(),
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn embed(&self, target: &Arc<PolyRing>) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.embed(target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn dedup_keep_first(ps: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut seen = HashSet::new();
    ps.into_iter()
        .filter(|p| !p.is_zero() && seen.insert(p.clone()))
        .collect()
}

/// All `n`-fold products of the generators of `ideal`, deduplicated.
pub fn ideal_power(ideal: &Ideal, n: u32) -> Result<Ideal> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    let gens = &ideal.gens;
    let mut out = Vec::new();
    // multisets of generator indices, non-decreasing
    let mut idx = vec![0usize; n as usize];
    if !gens.is_empty() {
        loop {
            let mut p = gens[idx[0]].clone();
            for &i in &idx[1..] {
                p = &p * &gens[i];
            }
            out.push(p);
            let mut k = idx.len();
            loop {
                if k == 0 {
                    return Ok(Ideal {
                        ring: ideal.ring.clone(),
                        gens: dedup_keep_first(out),
                    });
                }
                k -= 1;
                if idx[k] + 1 < gens.len() {
                    let v = idx[k] + 1;
                    for slot in &mut idx[k..] {
                        *slot = v;
                    }
                    break;
                }
            }
        }
    }
    Ok(Ideal::zero(&ideal.ring))
}

/// `I + J`: the concatenated generator lists.
pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if !a.ring.same_as(&b.ring) {
        return Err(Error::RingMismatch(format!("{} vs {}", a.ring, b.ring)));
    }
    let mut gens = a.gens.clone();
    gens.extend(b.gens.iter().cloned());
    Ok(Ideal {
        ring: a.ring.clone(),
        gens,
    })
}

/// The product ideal `I * J`.
pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if !a.ring.same_as(&b.ring) {
        return Err(Error::RingMismatch(format!("{} vs {}", a.ring, b.ring)));
    }
    let mut gens = Vec::new();
    for f in &a.gens {
        for g in &b.gens {
            gens.push(f * g);
        }
    }
    Ok(Ideal {
        ring: a.ring.clone(),
        gens: dedup_keep_first(gens),
    })
}
