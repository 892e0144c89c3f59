//! Finitely presented modules, their duals and versal maps.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::coefficients::FieldElement;
use crate::error::{Error, Result};
use crate::freemod::{same_quotient, Lifter, ModuleGb, ModuleVector, PolyMatrix, Submodule};
use crate::groebner::QuotientRing;
use crate::polyring::{Ideal, Polynomial};
use crate::rees::ReesPresentation;

/// `M = coker(phi: R^b -> R^a)`.
#[derive(Clone, Debug)]
pub struct ModulePresentation {
    ring: Arc<QuotientRing>,
    phi: PolyMatrix,
    labels: Vec<String>,
    embedding: Option<Submodule>,
    versal: OnceLock<ModuleMap>,
    pub(crate) rees: OnceLock<Arc<ReesPresentation>>,
}

impl PartialEq for ModulePresentation {
    fn eq(&self, other: &Self) -> bool {
        self.phi == other.phi && self.labels == other.labels && self.embedding == other.embedding
    }
}

impl ModulePresentation {
    /// A module with `phi.nrows()` generators and the columns of `phi` as relations.
    pub fn new(phi: PolyMatrix, labels: Option<Vec<String>>) -> Result<Self> {
        let a = phi.nrows();
        let labels = labels.unwrap_or_else(|| (1..=a).map(|i| format!("m{i}")).collect());
        if labels.len() != a {
            return Err(Error::DimensionMismatch(format!("{} labels for {a} generators", labels.len())));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(Error::InvalidRing(format!("duplicate generator label `{l}`")));
            }
        }
        Ok(ModulePresentation {
            ring: phi.ring().clone(),
            phi,
            labels,
            embedding: None,
            versal: OnceLock::new(),
            rees: OnceLock::new(),
        })
    }

    /// The free module `R^r`.
    pub fn free(ring: &Arc<QuotientRing>, r: usize) -> Self {
        Self::new(PolyMatrix::zero(ring, r, 0), None).expect("default labels")
    }

    /// Presents a submodule of a free module by the relations among its generators.
    pub fn from_submodule(s: &Submodule) -> Result<Self> {
        let syz = Lifter::new(s).syzygies();
        let mut m = Self::new(PolyMatrix::from_columns(&syz), None)?;
        if syz.gens().is_empty() {
            m.phi = PolyMatrix::zero(s.ring(), s.gens().len(), 0);
        }
        m.embedding = Some(s.clone());
        Ok(m)
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    /// Number of generators.
    pub fn ngens(&self) -> usize {
        self.phi.nrows()
    }

    pub fn phi(&self) -> &PolyMatrix {
        &self.phi
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The submodule this presentation was built from, if any.
    pub fn embedding(&self) -> Option<&Submodule> {
        self.embedding.as_ref()
    }

    /// The relations as a submodule of `R^a`.
    pub fn relations(&self) -> Submodule {
        self.phi.column_span()
    }

    /// The inclusion into the ambient free module of the embedding.
    pub fn inclusion_map(&self) -> Option<ModuleMap> {
        let e = self.embedding.as_ref()?;
        let rows = e.gens().iter().map(|g| g.entries().to_vec()).collect();
        ModuleMap::new(self, e.rank(), rows).ok()
    }

    /// Coordinates, in terms of this module's generators, of a submodule
    /// of the embedding's ambient free module.
    pub fn coordinates(&self, s: &Submodule) -> Result<Submodule> {
        let e = self
            .embedding
            .as_ref()
            .ok_or_else(|| Error::NotContained("module has no embedding".into()))?;
        if s.rank() != e.rank() || !same_quotient(s.ring(), e.ring()) {
            return Err(Error::DimensionMismatch(format!("rank {} vs {}", s.rank(), e.rank())));
        }
        let lifter = Lifter::new(e);
        let mut gens = Vec::new();
        for g in s.gens() {
            let c = lifter
                .lift(g)?
                .ok_or_else(|| Error::NotContained(format!("{g} is not in {e}")))?;
            gens.push(ModuleVector::new(&self.ring, c)?);
        }
        Submodule::new(&self.ring, self.ngens(), gens)
    }
}

impl fmt::Display for ModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coker {} over {}", self.phi, self.ring)
    }
}

/// A map from a presented module to `R^m`; row `j` of `h` is the image of
/// generator `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMap {
    ring: Arc<QuotientRing>,
    source_gens: usize,
    h: PolyMatrix,
    versal: bool,
}

impl ModuleMap {
    /// Checks that every relation of `source` maps to zero.
    pub fn new(source: &ModulePresentation, rank: usize, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let h = PolyMatrix::new(&source.ring, rank, rows)?;
        Self::from_matrix(source, h, false)
    }

    fn from_matrix(source: &ModulePresentation, h: PolyMatrix, versal: bool) -> Result<Self> {
        if h.nrows() != source.ngens() {
            return Err(Error::DimensionMismatch(format!(
                "{} image rows for {} generators",
                h.nrows(),
                source.ngens()
            )));
        }
        if !same_quotient(h.ring(), &source.ring) {
            return Err(Error::RingMismatch("map and module rings differ".into()));
        }
        let composed = source.phi.transpose().mul(&h)?;
        for c in 0..composed.nrows() {
            if !composed.row(c).is_zero() {
                return Err(Error::IllDefinedMap(c));
            }
        }
        Ok(ModuleMap {
            ring: source.ring.clone(),
            source_gens: source.ngens(),
            h,
            versal,
        })
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn source_gens(&self) -> usize {
        self.source_gens
    }

    /// Rank of the target free module.
    pub fn rank(&self) -> usize {
        self.h.ncols()
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.h
    }

    pub fn is_versal(&self) -> bool {
        self.versal
    }

    /// Image of an element given in generator coordinates.
    pub fn apply(&self, v: &ModuleVector) -> Result<ModuleVector> {
        if v.rank() != self.source_gens {
            return Err(Error::DimensionMismatch(format!("rank {} vs {}", v.rank(), self.source_gens)));
        }
        let amb = self.ring.ambient();
        let mut out = vec![Polynomial::zero(amb); self.rank()];
        for (j, c) in v.entries().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate() {
                *slot = &*slot + &(c * self.h.get(j, i));
            }
        }
        ModuleVector::new(&self.ring, out)
    }

    /// Image of a submodule given in generator coordinates.
    pub fn image(&self, s: &Submodule) -> Result<Submodule> {
        let gens = s.gens().iter().map(|g| self.apply(g)).collect::<Result<Vec<_>>>()?;
        Submodule::new(&self.ring, self.rank(), gens)
    }
}

/// `M^* = ker(phi^T)`, as a submodule of `R^a`.
pub fn dual_module(m: &ModulePresentation) -> Submodule {
    Lifter::new(&m.phi.row_span()).syzygies()
}

/// Drops generators lying in the span of the ones kept so far and the ones
/// still to come.
fn prune(s: &Submodule) -> Result<Submodule> {
    let mut gens = s.nonzero_gens();
    let mut i = 0;
    while i < gens.len() && gens.len() > 1 {
        let others: Vec<ModuleVector> = gens
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let span = Submodule::new(s.ring(), s.rank(), others)?;
        if ModuleGb::new(&span).contains(&gens[i])? {
            gens.remove(i);
        } else {
            i += 1;
        }
    }
    Submodule::new(s.ring(), s.rank(), gens)
}

/// The versal map built from a generating set of `M^*`.
pub fn versal_map(m: &ModulePresentation) -> Result<ModuleMap> {
    if let Some(f) = m.versal.get() {
        return Ok(f.clone());
    }
    let dual = prune(&dual_module(m))?;
    let h = PolyMatrix::from_columns(&dual);
    let h = if dual.gens().is_empty() {
        PolyMatrix::zero(m.ring(), m.ngens(), 0)
    } else {
        h
    };
    let f = ModuleMap::from_matrix(m, h, true)?;
    let _ = m.versal.set(f.clone());
    Ok(f)
}

/// The image of the versal map, generated by the rows of its matrix.
pub fn torsionless_quotient(m: &ModulePresentation) -> Result<Submodule> {
    Ok(versal_map(m)?.h.row_span())
}

/// A matrix `W` with `H_f W = H_g`, when `g` factors through `f`.
pub fn factor_through(f: &ModuleMap, g: &ModuleMap) -> Result<Option<PolyMatrix>> {
    if f.source_gens != g.source_gens || !same_quotient(&f.ring, &g.ring) {
        return Err(Error::DimensionMismatch("maps have different sources".into()));
    }
    let lifter = Lifter::new(&f.h.column_span());
    let mut w = vec![Vec::with_capacity(g.rank()); f.rank()];
    for j in 0..g.rank() {
        match lifter.lift(&g.h.column(j))? {
            Some(c) => {
                for (i, ci) in c.into_iter().enumerate() {
                    w[i].push(ci);
                }
            }
            None => return Ok(None),
        }
    }
    Ok(Some(PolyMatrix::new(&f.ring, g.rank(), w)?))
}

/// Rank of a matrix over a field, by Gaussian elimination.
pub(crate) fn field_rank(mut rows: Vec<Vec<FieldElement>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        let pivot: Vec<FieldElement> = rows[rank].iter().map(|x| x * &inv).collect();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let c = rows[r][col].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x = &*x - &(&c * y);
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Minimal number of generators, by Nakayama at a rational maximal ideal.
pub fn min_generators(m: &ModulePresentation, max_ideal: &Ideal) -> Result<usize> {
    let fiber = m.ring.quotient_by(max_ideal)?;
    if fiber.is_zero_ring() {
        return Err(Error::NotProper(max_ideal.to_string()));
    }
    let field = m.ring.ambient().field();
    let mut rows = Vec::with_capacity(m.ngens());
    for j in 0..m.ngens() {
        let mut row = Vec::with_capacity(m.phi.ncols());
        for c in 0..m.phi.ncols() {
            let r = fiber.reduce(m.phi.get(j, c));
            if !r.is_constant() {
                return Err(Error::NonRationalPoint(max_ideal.to_string()));
            }
            row.push(r.lead_coeff().cloned().unwrap_or_else(|| field.zero()));
        }
        rows.push(row);
    }
    Ok(m.ngens() - field_rank(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::FieldSpec;
    use crate::freemod::{submodule_equal, Submodule};
    use crate::polyring::{ideal_power, ideal_sum, MonomialOrder, PolyRing};

    fn qring(field: FieldSpec, vars: &[&str], rel: impl Fn(&[Polynomial]) -> Vec<Polynomial>) -> Arc<QuotientRing> {
        let r = PolyRing::new(field, vars, MonomialOrder::GrevLex).unwrap();
        let v: Vec<Polynomial> = (0..r.nvars()).map(|i| Polynomial::var(&r, i)).collect();
        QuotientRing::new(Ideal::new(&r, rel(&v)).unwrap()).unwrap()
    }

    fn vars(q: &QuotientRing) -> Vec<Polynomial> {
        (0..q.ambient().nvars()).map(|i| Polynomial::var(q.ambient(), i)).collect()
    }

    fn example(p: u32) -> (Arc<QuotientRing>, ModulePresentation) {
        let r = PolyRing::new(FieldSpec::prime(p as u64).unwrap(), &["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let v: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(&r, i)).collect();
        let a = Ideal::new(&r, vec![v[0].pow(p), v[1].pow(p)]).unwrap();
        let i = ideal_sum(&a, &ideal_power(&Ideal::variables(&r), p + 1).unwrap()).unwrap();
        let q = QuotientRing::new(i).unwrap();
        let m = ModulePresentation::from_submodule(&Submodule::from_ideal_gens(&q, &[v[2].clone()]).unwrap()).unwrap();
        (q, m)
    }

    #[test]
    fn example_dual_and_versal_map() {
        let (q, m) = example(3);
        assert_eq!(dual_module(&m).gens().len(), 3);
        let f = versal_map(&m).unwrap();
        assert!(f.is_versal());
        let v = vars(&q);
        assert_eq!(f.matrix().rows(), &[vec![v[0].clone(), v[1].clone(), v[2].clone()]]);
        let tq = torsionless_quotient(&m).unwrap();
        let expected = Submodule::from_rows(&q, 3, vec![v.clone()]).unwrap();
        assert!(submodule_equal(&tq, &expected).unwrap());
        let max = Ideal::variables(q.ambient());
        assert_eq!(min_generators(&m, &max).unwrap(), 1);

        let g1 = ModuleMap::new(&m, 1, vec![vec![v[2].clone()]]).unwrap();
        let g2 = ModuleMap::new(&m, 2, vec![vec![v[0].clone(), v[1].clone()]]).unwrap();
        for g in [&g1, &g2] {
            let w = factor_through(&f, g).unwrap().unwrap();
            assert_eq!(f.matrix().mul(&w).unwrap(), *g.matrix());
        }
        assert!(!g1.is_versal());
    }

    #[test]
    fn ill_defined_maps_are_rejected() {
        let (q, m) = example(2);
        let one = Polynomial::one(q.ambient());
        assert_eq!(ModuleMap::new(&m, 1, vec![vec![one]]), Err(Error::IllDefinedMap(0)));
    }

    #[test]
    fn free_modules() {
        let q = qring(FieldSpec::Rationals, &["x"], |_| vec![]);
        let m = ModulePresentation::free(&q, 1);
        let d = dual_module(&m);
        assert!(submodule_equal(&d, &Submodule::free(&q, 1)).unwrap());
        let f = versal_map(&m).unwrap();
        assert_eq!(*f.matrix(), PolyMatrix::identity(&q, 1));
        let max = Ideal::variables(q.ambient());
        assert_eq!(min_generators(&ModulePresentation::free(&q, 2), &max).unwrap(), 2);
        let unit = PolyMatrix::identity(&q, 1);
        assert_eq!(min_generators(&ModulePresentation::new(unit, None).unwrap(), &max).unwrap(), 0);
    }

    #[test]
    fn cyclic_torsion_module() {
        // R/(x) over k[x]/(x^2)
        let q = qring(FieldSpec::Rationals, &["x"], |v| vec![v[0].pow(2)]);
        let x = vars(&q)[0].clone();
        let m = ModulePresentation::new(PolyMatrix::new(&q, 1, vec![vec![x.clone()]]).unwrap(), None).unwrap();
        let d = dual_module(&m);
        assert!(submodule_equal(&d, &Submodule::from_ideal_gens(&q, std::slice::from_ref(&x)).unwrap()).unwrap());
        let f = versal_map(&m).unwrap();
        assert_eq!(f.matrix().rows(), &[vec![x.clone()]]);
        let tq = torsionless_quotient(&m).unwrap();
        assert!(submodule_equal(&tq, &Submodule::from_ideal_gens(&q, &[x]).unwrap()).unwrap());
    }

    #[test]
    fn non_proper_and_irrational_points() {
        let q = qring(FieldSpec::Rationals, &["x"], |_| vec![]);
        let x = vars(&q)[0].clone();
        let m = ModulePresentation::new(PolyMatrix::new(&q, 1, vec![vec![x.clone()]]).unwrap(), None).unwrap();
        let unit = Ideal::new(q.ambient(), vec![Polynomial::one(q.ambient())]).unwrap();
        assert!(matches!(min_generators(&m, &unit), Err(Error::NotProper(_))));
        let irrational = Ideal::new(q.ambient(), vec![&x.pow(2) + &Polynomial::one(q.ambient())]).unwrap();
        assert!(matches!(min_generators(&m, &irrational), Err(Error::NonRationalPoint(_))));
    }

    #[test]
    fn coordinates_of_subideals() {
        let q = qring(FieldSpec::Rationals, &["x", "y"], |_| vec![]);
        let v = vars(&q);
        let sq = ideal_power(&Ideal::variables(q.ambient()), 2).unwrap();
        let m = ModulePresentation::from_submodule(&Submodule::from_ideal_gens(&q, sq.gens()).unwrap()).unwrap();
        assert_eq!(m.ngens(), 3);
        assert_eq!(m.phi().ncols(), 2);
        let u = Submodule::from_ideal_gens(&q, &[v[0].pow(2), v[1].pow(2)]).unwrap();
        let c = m.coordinates(&u).unwrap();
        let incl = m.inclusion_map().unwrap();
        assert!(submodule_equal(&incl.image(&c).unwrap(), &u).unwrap());
        let bad = Submodule::from_ideal_gens(&q, &[v[0].clone()]).unwrap();
        assert!(matches!(m.coordinates(&bad), Err(Error::NotContained(_))));
    }
}
