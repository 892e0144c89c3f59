//! Buchberger's algorithm on vectors of polynomials.
//!
//! Everything is a vector of term lists over a shared polynomial ring:
//! ideals are the rank-1 case. Vectors are compared position-over-term,
//! with the smaller component index dominant.
//!
//! Pair bookkeeping follows the Gebauer-Moeller update. The coprime
//! criterion is only applied in rank 1, where it is valid.

use std::cmp::Ordering;

use crate::polyring::{terms, Monomial, MonomialOrder, Term};

pub(crate) type RawVec = Vec<Vec<Term>>;

pub(crate) fn lead(v: &[Vec<Term>]) -> Option<(usize, &Term)> {
    v.iter()
        .enumerate()
        .find_map(|(k, c)| c.first().map(|t| (k, t)))
}

pub(crate) fn is_zero(v: &[Vec<Term>]) -> bool {
    v.iter().all(|c| c.is_empty())
}

/// Position-over-term comparison of `(component, monomial)` pairs.
pub(crate) fn cmp_pot(ord: &MonomialOrder, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| ord.cmp(a.1, b.1))
}

fn make_monic(v: &mut RawVec) {
    let inv = match lead(v) {
        Some((_, (_, c))) if !c.is_one() => c.inv().expect("nonzero lead"),
        _ => return,
    };
    for comp in v.iter_mut() {
        for t in comp.iter_mut() {
            t.1 = &t.1 * &inv;
        }
    }
}

fn divmask(m: &Monomial) -> u64 {
    m.exponents()
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &e)| if e > 0 { acc | (1 << (i % 64)) } else { acc })
}

/// Lead data cached for fast divisor lookup.
struct LeadInfo {
    comp: usize,
    mono: Monomial,
    mask: u64,
}

impl LeadInfo {
    fn of(v: &RawVec) -> LeadInfo {
        let (comp, (mono, _)) = lead(v).expect("nonzero element");
        LeadInfo {
            comp,
            mono: mono.clone(),
            mask: divmask(mono),
        }
    }

    fn divides(&self, comp: usize, m: &Monomial, mask: u64) -> bool {
        self.comp == comp && self.mask & !mask == 0 && self.mono.divides(m)
    }
}

/// A set of monic reducers with cached leads.
pub(crate) struct Reducers<'a> {
    elems: Vec<&'a RawVec>,
    leads: Vec<LeadInfo>,
}

impl<'a> Reducers<'a> {
    pub fn new(elems: impl IntoIterator<Item = &'a RawVec>) -> Self {
        let elems: Vec<&RawVec> = elems.into_iter().filter(|v| !is_zero(v)).collect();
        let leads = elems.iter().map(|v| LeadInfo::of(v)).collect();
        Reducers { elems, leads }
    }

    fn find(&self, comp: usize, m: &Monomial) -> Option<usize> {
        let mask = divmask(m);
        self.leads.iter().position(|l| l.divides(comp, m, mask))
    }

    /// Full reduction: no term of the result is divisible by a reducer lead.
    pub fn reduce(&self, v: RawVec, ord: &MonomialOrder) -> RawVec {
        self.reduce_from(v, ord, 0)
    }

    /// Reduction that leaves the first `skip` terms of the lead component
    /// untouched; `skip = 1` tail-reduces an element against the others.
    fn reduce_from(&self, mut v: RawVec, ord: &MonomialOrder, skip: usize) -> RawVec {
        let rank = v.len();
        let mut out: RawVec = vec![Vec::new(); rank];
        let mut first = skip > 0;
        for k in 0..rank {
            let mut pos = 0usize;
            if first && !v[k].is_empty() {
                pos = skip.min(v[k].len());
                out[k].extend(v[k][..pos].iter().cloned());
                first = false;
            }
            while pos < v[k].len() {
                let (m, c) = &v[k][pos];
                match self.find(k, m) {
                    Some(j) => {
                        let g = self.elems[j];
                        let q = self.leads[j].mono.quotient_of(m).unwrap();
                        let coeff = c.clone();
                        let tail = v[k].split_off(pos);
                        v[k] = terms::sub_mul(&tail, &coeff, &q, &g[k], ord);
                        pos = 0;
                        for kk in k + 1..rank {
                            if !g[kk].is_empty() {
                                v[kk] = terms::sub_mul(&v[kk], &coeff, &q, &g[kk], ord);
                            }
                        }
                    }
                    None => {
                        out[k].push(v[k][pos].clone());
                        pos += 1;
                    }
                }
            }
            v[k].clear();
        }
        out
    }
}

/// Reduces `v` against a basis of monic vectors.
pub(crate) fn reduce(v: RawVec, basis: &[RawVec], ord: &MonomialOrder) -> RawVec {
    Reducers::new(basis.iter()).reduce(v, ord)
}

struct Pair {
    i: usize,
    j: usize,
    comp: usize,
    lcm: Monomial,
}

fn s_vector(f: &RawVec, g: &RawVec, lcm: &Monomial, ord: &MonomialOrder) -> RawVec {
    let (_, (lf, _)) = lead(f).unwrap();
    let (_, (lg, _)) = lead(g).unwrap();
    let qf = lf.quotient_of(lcm).unwrap();
    let qg = lg.quotient_of(lcm).unwrap();
    let one = lead(f).unwrap().1 .1.field().one();
    f.iter()
        .zip(g)
        .map(|(a, b)| {
            let fa = terms::scale(a, &one, &qf);
            terms::sub_mul(&fa, &one, &qg, b, ord)
        })
        .collect()
}

struct State<'o> {
    ord: &'o MonomialOrder,
    coprime_ok: bool,
    elems: Vec<RawVec>,
    leads: Vec<LeadInfo>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn active_reducers(&self) -> Reducers<'_> {
        let mut r = Reducers {
            elems: Vec::new(),
            leads: Vec::new(),
        };
        for (i, v) in self.elems.iter().enumerate() {
            if self.active[i] {
                r.elems.push(v);
                let l = &self.leads[i];
                r.leads.push(LeadInfo {
                    comp: l.comp,
                    mono: l.mono.clone(),
                    mask: l.mask,
                });
            }
        }
        r
    }

    fn coprime(&self, a: usize, b: usize) -> bool {
        self.coprime_ok && self.leads[a].mono.is_coprime(&self.leads[b].mono)
    }

    fn insert(&mut self, h: RawVec) {
        let t = self.elems.len();
        let info = LeadInfo::of(&h);
        self.elems.push(h);
        self.leads.push(info);
        self.active.push(true);
        let comp = self.leads[t].comp;

        let mut cands: Vec<Pair> = (0..t)
            .filter(|&k| self.active[k] && self.leads[k].comp == comp)
            .map(|k| Pair {
                i: k,
                j: t,
                comp,
                lcm: self.leads[k].mono.lcm(&self.leads[t].mono),
            })
            .collect();

        // chain criterion among new pairs
        let mut kept: Vec<Pair> = Vec::new();
        while !cands.is_empty() {
            let p = cands.remove(0);
            let dominated = |q: &Pair| q.lcm.divides(&p.lcm);
            if self.coprime(p.i, t) || (!cands.iter().any(dominated) && !kept.iter().any(dominated)) {
                kept.push(p);
            }
        }
        kept.retain(|p| !self.coprime(p.i, t));

        // criterion B on old pairs
        let lt = &self.leads[t];
        let leads = &self.leads;
        self.pairs.retain(|p| {
            if p.comp != comp || !lt.mono.divides(&p.lcm) {
                return true;
            }
            let li = leads[p.i].mono.lcm(&lt.mono);
            let lj = leads[p.j].mono.lcm(&lt.mono);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(kept);

        for k in 0..t {
            if self.active[k] && self.leads[k].comp == comp && self.leads[t].mono.divides(&self.leads[k].mono) {
                self.active[k] = false;
            }
        }
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ord = self.ord;
        let mut best = 0;
        for (idx, p) in self.pairs.iter().enumerate().skip(1) {
            let b = &self.pairs[best];
            let c = cmp_pot(ord, (p.comp, &p.lcm), (b.comp, &b.lcm))
                .then_with(|| (p.i, p.j).cmp(&(b.i, b.j)));
            if c == Ordering::Less {
                best = idx;
            }
        }
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Groebner basis of the vectors `gens`, each of length `rank`.
///
/// The result is monic, interreduced and sorted by lead descending.
pub(crate) fn groebner(gens: Vec<RawVec>, rank: usize, ord: &MonomialOrder) -> Vec<RawVec> {
    groebner_over(Vec::new(), gens, rank, ord)
}

/// Like [`groebner`], where `base` is already a monic Groebner basis of
/// the submodule it generates, so its internal pairs are skipped.
pub(crate) fn groebner_over(base: Vec<RawVec>, gens: Vec<RawVec>, rank: usize, ord: &MonomialOrder) -> Vec<RawVec> {
    let mut st = State {
        ord,
        coprime_ok: rank == 1,
        elems: Vec::new(),
        leads: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for b in base {
        debug_assert_eq!(b.len(), rank);
        if !is_zero(&b) {
            st.insert(b);
        }
    }
    st.pairs.clear();
    for g in gens {
        debug_assert_eq!(g.len(), rank);
        let mut h = st.active_reducers().reduce(g, ord);
        if !is_zero(&h) {
            make_monic(&mut h);
            st.insert(h);
        }
    }
    while let Some(p) = st.pop_pair() {
        let s = s_vector(&st.elems[p.i], &st.elems[p.j], &p.lcm, ord);
        let mut h = st.active_reducers().reduce(s, ord);
        if !is_zero(&h) {
            make_monic(&mut h);
            st.insert(h);
        }
    }
    let active: Vec<RawVec> = st
        .elems
        .into_iter()
        .zip(st.active)
        .filter_map(|(v, a)| a.then_some(v))
        .collect();
    interreduce(active, ord)
}

/// Turns a minimal basis into the reduced one and sorts it.
fn interreduce(basis: Vec<RawVec>, ord: &MonomialOrder) -> Vec<RawVec> {
    let mut out = Vec::with_capacity(basis.len());
    for (i, v) in basis.iter().enumerate() {
        let others = Reducers::new(basis.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, w)| w));
        let mut r = others.reduce_from(v.clone(), ord, 1);
        make_monic(&mut r);
        out.push(r);
    }
    out.sort_by(|a, b| {
        let (ca, (ma, _)) = lead(a).unwrap();
        let (cb, (mb, _)) = lead(b).unwrap();
        cmp_pot(ord, (cb, mb), (ca, ma))
    });
    out
}
