//! Evaluation of bindings and dispatch of commands to the engine.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;

use reeskernel_core::groebner::{hilbert_by_degree, k_dimension, krull_dim};
use reeskernel_core::integrality::{analytic_spread, integral_in, is_reduction};
use reeskernel_core::modpres::{min_generators, versal_map};
use reeskernel_core::polyring::{ideal_power, ideal_sum};
use reeskernel_core::rees::{
    base_change_check, classical_ideal_rees, compare_rees, lemma16_check, nilpotent_kernel_check, rees_ideal,
    rees_of_map, sym_presentation,
};
use reeskernel_core::{
    Dimension, FieldSpec, Ideal, IntegralityVerdict, ModuleMap, ModulePresentation, MonomialOrder, PolyMatrix,
    PolyRing, Polynomial, QuotientRing, ReesPresentation, Submodule,
};

use crate::parser::{AlgebraDef, Binding, Command, CommandKind, Definition, Expr, FieldDecl, IdealDef, ModuleDef, OrderDecl, Script};
use crate::report::{Payload, Report, RunReport, Status};
use crate::DomainError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    /// Bound for integrality searches without an explicit `maxdeg=`.
    pub maxdeg: u32,
    /// Order for rings declared without `order=`.
    pub order: MonomialOrder,
    pub timing: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            maxdeg: 10,
            order: MonomialOrder::GrevLex,
            timing: false,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Value {
    Ring(Arc<PolyRing>),
    Ideal(Ideal),
    Quotient(Arc<QuotientRing>),
    Module(Arc<ModulePresentation>),
    Map(Arc<ModuleMap>),
    Submodule(Submodule),
    Algebra(Arc<ReesPresentation>),
}

/// Named values of a script, in declaration order.
#[derive(Debug, Default)]
pub struct Session {
    values: HashMap<String, Value>,
    names: Vec<String>,
    map_algebras: RefCell<HashMap<String, Arc<ReesPresentation>>>,
}

type Eval<T> = std::result::Result<T, String>;

fn engine<T>(r: reeskernel_core::Result<T>) -> Eval<T> {
    r.map_err(|e| e.to_string())
}

fn eval_expr(e: &Expr, ring: &Arc<PolyRing>) -> Eval<Polynomial> {
    Ok(match e {
        Expr::Int(n) => {
            let n = i64::try_from(*n).map_err(|_| format!("coefficient {n} too large"))?;
            Polynomial::from_i64(ring, n)
        }
        Expr::Var(i) => Polynomial::var(ring, *i),
        Expr::Neg(a) => -&eval_expr(a, ring)?,
        Expr::Add(a, b) => &eval_expr(a, ring)? + &eval_expr(b, ring)?,
        Expr::Sub(a, b) => &eval_expr(a, ring)? - &eval_expr(b, ring)?,
        Expr::Mul(a, b) => &eval_expr(a, ring)? * &eval_expr(b, ring)?,
        Expr::Pow(a, n) => eval_expr(a, ring)?.pow(*n),
    })
}

fn eval_rows(rows: &[Vec<Expr>], ring: &Arc<PolyRing>) -> Eval<Vec<Vec<Polynomial>>> {
    rows.iter()
        .map(|r| r.iter().map(|e| eval_expr(e, ring)).collect())
        .collect()
}

impl Session {
    /// Evaluates every binding of the script in order.
    pub fn build(script: &Script, opts: &RunOptions) -> Result<Session, DomainError> {
        let mut s = Session::default();
        for b in &script.bindings {
            let v = s.evaluate(b, opts).map_err(|message| DomainError {
                line: b.line,
                message: format!("{}: {message}", b.name),
            })?;
            s.values.insert(b.name.clone(), v);
            s.names.push(b.name.clone());
        }
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.values.get(name)
    }

    fn ring(&self, name: &str) -> &Arc<PolyRing> {
        match &self.values[name] {
            Value::Ring(r) => r,
            _ => unreachable!("checked by the parser"),
        }
    }

    fn ideal(&self, name: &str) -> &Ideal {
        match &self.values[name] {
            Value::Ideal(i) => i,
            _ => unreachable!("checked by the parser"),
        }
    }

    fn quotient(&self, name: &str) -> &Arc<QuotientRing> {
        match &self.values[name] {
            Value::Quotient(q) => q,
            _ => unreachable!("checked by the parser"),
        }
    }

    fn module(&self, name: &str) -> &Arc<ModulePresentation> {
        match &self.values[name] {
            Value::Module(m) => m,
            _ => unreachable!("checked by the parser"),
        }
    }

    fn map(&self, name: &str) -> &Arc<ModuleMap> {
        match &self.values[name] {
            Value::Map(g) => g,
            _ => unreachable!("checked by the parser"),
        }
    }

    fn evaluate(&self, b: &Binding, opts: &RunOptions) -> Eval<Value> {
        Ok(match &b.def {
            Definition::Ring { field, vars, order } => {
                let field = match field {
                    FieldDecl::Prime(p) => engine(FieldSpec::prime(*p))?,
                    FieldDecl::Rationals => FieldSpec::Rationals,
                };
                let order = match order {
                    Some(OrderDecl::Lex) => MonomialOrder::Lex,
                    Some(OrderDecl::GrevLex) => MonomialOrder::GrevLex,
                    None => opts.order,
                };
                Value::Ring(engine(PolyRing::new(field, vars, order))?)
            }
            Definition::Ideal(def) => Value::Ideal(match def {
                IdealDef::Gens { ring, gens } => {
                    let r = self.ring(ring);
                    let gens = gens.iter().map(|g| eval_expr(g, r)).collect::<Eval<Vec<_>>>()?;
                    engine(Ideal::new(r, gens))?
                }
                IdealDef::Power { ideal, n } => engine(ideal_power(self.ideal(ideal), *n))?,
                IdealDef::Sum(a, b) => engine(ideal_sum(self.ideal(a), self.ideal(b)))?,
            }),
            Definition::Quotient { ideal, .. } => Value::Quotient(engine(QuotientRing::new(self.ideal(ideal).clone()))?),
            Definition::Module(ModuleDef::Coker { quotient, relations }) => {
                let q = self.quotient(quotient);
                let rel = eval_rows(relations, q.ambient())?;
                let ngens = rel[0].len();
                let rows = (0..ngens).map(|j| rel.iter().map(|r| r[j].clone()).collect()).collect();
                let phi = engine(PolyMatrix::new(q, rel.len(), rows))?;
                Value::Module(Arc::new(engine(ModulePresentation::new(phi, None))?))
            }
            Definition::Module(ModuleDef::Submodule { quotient, rank, gens }) => {
                let q = self.quotient(quotient);
                let s = engine(Submodule::from_rows(q, *rank, eval_rows(gens, q.ambient())?))?;
                Value::Module(Arc::new(engine(ModulePresentation::from_submodule(&s))?))
            }
            Definition::Map { module, rank, rows } => {
                let m = self.module(module);
                let rows = eval_rows(rows, m.ring().ambient())?;
                Value::Map(Arc::new(engine(ModuleMap::new(m, *rank, rows))?))
            }
            Definition::Span { module, rows } => {
                let m = self.module(module);
                let rows = eval_rows(rows, m.ring().ambient())?;
                Value::Submodule(engine(Submodule::from_rows(m.ring(), m.ngens(), rows))?)
            }
            Definition::Algebra(def) => Value::Algebra(match def {
                AlgebraDef::Rees(m) => engine(rees_ideal(self.module(m)))?,
                AlgebraDef::ReesOf(g) => Arc::new(engine(rees_of_map(self.map(g)))?),
                AlgebraDef::Classical { ideal, quotient } => Arc::new(engine(classical_ideal_rees(
                    self.quotient(quotient),
                    self.ideal(ideal).gens(),
                ))?),
                AlgebraDef::Sym(m) => Arc::new(engine(sym_presentation(self.module(m)))?),
            }),
        })
    }

    /// Display name of the algebra attached to a binding.
    fn label(&self, name: &str) -> String {
        match &self.values[name] {
            Value::Module(_) | Value::Map(_) => format!("R({name})"),
            _ => name.to_string(),
        }
    }

    fn algebra(&self, name: &str) -> Eval<Arc<ReesPresentation>> {
        match &self.values[name] {
            Value::Module(m) => engine(rees_ideal(m)),
            Value::Algebra(a) => Ok(a.clone()),
            Value::Map(g) => {
                if let Some(a) = self.map_algebras.borrow().get(name) {
                    return Ok(a.clone());
                }
                let a = Arc::new(engine(rees_of_map(g))?);
                self.map_algebras.borrow_mut().insert(name.to_string(), a.clone());
                Ok(a)
            }
            _ => unreachable!("checked by the parser"),
        }
    }

    fn relations(&self, label: String, a: &ReesPresentation) -> Payload {
        Payload::Relations {
            algebra: label,
            provenance: a.provenance().to_string(),
            variables: a.ring().vars().to_vec(),
            relations: a.relation_strings(),
        }
    }

    /// `U` as a submodule of the module's generator coordinates.
    fn coordinates(&self, u: &str, m: &ModulePresentation) -> Eval<Submodule> {
        match &self.values[u] {
            Value::Submodule(s) => Ok(s.clone()),
            Value::Ideal(i) => {
                let s = engine(Submodule::from_ideal_gens(m.ring(), i.gens()))?;
                engine(m.coordinates(&s))
            }
            _ => unreachable!("checked by the parser"),
        }
    }

    fn integrality(query: String, v: IntegralityVerdict) -> Payload {
        Payload::Integrality {
            query,
            verdict: v.to_string(),
            witness_degree: v.witness_degree,
            bound: v.bound,
        }
    }

    fn dispatch(&self, cmd: &Command, opts: &RunOptions) -> Eval<Payload> {
        Ok(match &cmd.kind {
            CommandKind::Rees(m) => self.relations(self.label(m), &*self.algebra(m)?),
            CommandKind::ReesOf(g) => self.relations(self.label(g), &*self.algebra(g)?),
            CommandKind::Classical { ideal, quotient } => {
                let a = engine(classical_ideal_rees(self.quotient(quotient), self.ideal(ideal).gens()))?;
                self.relations(format!("R({ideal})"), &a)
            }
            CommandKind::Compare(a, b) => {
                let result = engine(compare_rees(&*self.algebra(a)?, &*self.algebra(b)?))?;
                Payload::Comparison {
                    left: self.label(a),
                    right: self.label(b),
                    result: result.to_string(),
                }
            }
            CommandKind::Kdim(name) => {
                let d = match &self.values[name] {
                    Value::Quotient(q) => k_dimension(q),
                    _ => self.algebra(name)?.k_dimension(),
                };
                Payload::Dimension {
                    algebra: self.label(name),
                    dimension: match d {
                        Dimension::Finite(n) => Some(n),
                        Dimension::Infinite => None,
                    },
                }
            }
            CommandKind::Hilb(name, d) => {
                let dimension = match &self.values[name] {
                    Value::Quotient(q) => engine(hilbert_by_degree(q, &vec![1; q.ambient().nvars()], *d))?,
                    _ => engine(self.algebra(name)?.hilbert(*d))?,
                };
                Payload::Hilbert {
                    algebra: self.label(name),
                    degree: *d,
                    dimension,
                }
            }
            CommandKind::Krull(name) => Payload::Krull {
                algebra: self.label(name),
                dimension: match &self.values[name] {
                    Value::Quotient(q) => krull_dim(q),
                    _ => self.algebra(name)?.krull_dim(),
                },
            },
            CommandKind::Spread { module, ideal } => Payload::Spread {
                module: module.clone(),
                spread: engine(analytic_spread(self.module(module), self.ideal(ideal)))?,
            },
            CommandKind::MinGens { module, ideal } => Payload::Generators {
                module: module.clone(),
                count: engine(min_generators(self.module(module), self.ideal(ideal)))? as u64,
            },
            CommandKind::Reduction { u, module, maxdeg } => {
                let m = self.module(module);
                let us = self.coordinates(u, m)?;
                let v = engine(is_reduction(&us, m, maxdeg.unwrap_or(opts.maxdeg)))?;
                Self::integrality(format!("reduction {u} in {module}"), v)
            }
            CommandKind::Integral { u, l, module, maxdeg } => {
                let m = self.module(module);
                let us = self.coordinates(u, m)?;
                let ls = self.coordinates(l, m)?;
                let v = engine(integral_in(&us, &ls, m, maxdeg.unwrap_or(opts.maxdeg)))?;
                Self::integrality(format!("integral {u} {l} in {module}"), v)
            }
            CommandKind::NilKernel { module, map } => Payload::Check {
                query: format!("nilkernel {module} {map}"),
                holds: engine(nilpotent_kernel_check(self.module(module), self.map(map)))?,
            },
            CommandKind::BaseChange { module, fresh } => {
                let names: Vec<&str> = fresh.iter().map(String::as_str).collect();
                Payload::Check {
                    query: format!("basechange {module} [{}]", fresh.join(", ")),
                    holds: engine(base_change_check(self.module(module), &names))?,
                }
            }
            CommandKind::Lemma16 { module, split, deg } => {
                let m = self.module(module);
                let Some(emb) = m.embedding() else {
                    return Err(format!("`{module}` is not given as a submodule of a free module"));
                };
                Payload::Check {
                    query: format!("lemma16 {module} split={split} deg={deg}"),
                    holds: engine(lemma16_check(emb, *split, *deg))?,
                }
            }
            CommandKind::Versal(module) => {
                let f = engine(versal_map(self.module(module)))?;
                Payload::Versal {
                    module: module.clone(),
                    rows: f
                        .matrix()
                        .rows()
                        .iter()
                        .map(|r| r.iter().map(|p| p.to_string()).collect())
                        .collect(),
                }
            }
        })
    }

    /// Runs one command; engine failures become error reports.
    pub fn run_command(&self, cmd: &Command, opts: &RunOptions) -> Report {
        let start = Instant::now();
        let result = self.dispatch(cmd, opts);
        let ms = opts.timing.then(|| start.elapsed().as_millis() as u64);
        match result {
            Ok(payload) => Report {
                command: cmd.echo.clone(),
                status: Status::Ok,
                payload,
                ms,
            },
            Err(e) => Report {
                command: cmd.echo.clone(),
                status: Status::Error,
                payload: Payload::Error {
                    message: format!("line {}: {}: {e}", cmd.line, cmd.echo),
                },
                ms,
            },
        }
    }

    pub fn run_all(&self, script: &Script, opts: &RunOptions) -> RunReport {
        RunReport::new(script.commands.iter().map(|c| self.run_command(c, opts)).collect())
    }
}
