//! Running a parsed session and rendering its transcript.

use std::collections::HashMap;
use std::sync::Arc;

use lochom::cmfication::{
    canonical_module_check, check_goto_cmfication, check_uniqueness, cmfication_candidate, goto_vanishing_pattern,
    hom_into_gorenstein, two_planes_example, verify_cmfication,
};
use lochom::duality::{
    artinian_dual_of, find_sop, is_co_cm, koszul_homology_artinian, local_homology_top, noetherian_dim,
    noetherian_dual_of, top_local_cohomology, top_local_homology, width, ArtinianRep,
};
use lochom::{
    ext_module, invariants, koszul_complex, resolve, FPModule, FreeElement, FreeModule, Ideal, IsoAnswer, ModuleMap,
    Polynomial, Ring, Variant,
};

use crate::session::{Arg, Functor, Session, Statement, StatementKind, Verb};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Seed for randomized searches.
    pub seed: u64,
    /// Upper end of degree ranges printed by `hilbert`.
    pub max_degree: i32,
}

impl Default for Config {
    fn default() -> Self {
        Config { seed: 0, max_degree: 6 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub text: String,
    pub failed: bool,
}

impl Transcript {
    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed)
    }
}

#[derive(Clone, Debug)]
enum Value {
    Ideal(Ideal),
    Module(FPModule),
    Map(ModuleMap),
    Art(ArtinianRep),
}

type CmdResult<T> = Result<T, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

struct Env {
    ring: Arc<Ring>,
    cfg: Config,
    values: HashMap<String, Value>,
    last: Option<Value>,
}

pub fn render_module(m: &FPModule) -> String {
    m.render()
}

pub fn render_artinian(x: &ArtinianRep) -> String {
    format!("artinian, dual module:\n{}", x.dual().render())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Env {
    fn lookup(&self, name: &str) -> CmdResult<&Value> {
        let v = if name == "_" { self.last.as_ref() } else { self.values.get(name) };
        v.ok_or_else(|| format!("nothing bound to '{name}'"))
    }

    fn module(&self, name: &str) -> CmdResult<FPModule> {
        match self.lookup(name)? {
            Value::Module(m) => Ok(m.clone()),
            Value::Ideal(i) => Ok(i.quotient_module()),
            _ => Err(format!("'{name}' is not a module")),
        }
    }

    fn art(&self, name: &str) -> CmdResult<ArtinianRep> {
        match self.lookup(name)? {
            Value::Art(x) => Ok(x.clone()),
            _ => Err(format!("'{name}' is not an artinian module")),
        }
    }

    fn map(&self, name: &str) -> CmdResult<ModuleMap> {
        match self.lookup(name)? {
            Value::Map(f) => Ok(f.clone()),
            _ => Err(format!("'{name}' is not a map")),
        }
    }

    fn ideal(&self, name: &str) -> CmdResult<Ideal> {
        match self.lookup(name)? {
            Value::Ideal(i) => Ok(i.clone()),
            _ => Err(format!("'{name}' is not an ideal")),
        }
    }

    fn define(&mut self, kind: &StatementKind) -> CmdResult<()> {
        match kind {
            StatementKind::Ring | StatementKind::Command { .. } => {}
            StatementKind::Ideal { name, gens } => {
                let i = Ideal::new(&self.ring, gens).map_err(err)?;
                self.values.insert(name.clone(), Value::Ideal(i));
            }
            StatementKind::Module { name, twists, relations } => {
                let ambient = FreeModule::new(self.ring.clone(), twists.clone());
                let rels = relations
                    .iter()
                    .filter(|r| r.iter().any(|p| !p.is_zero()))
                    .map(|r| FreeElement::from_components(&ambient, r))
                    .collect::<lochom::Result<Vec<_>>>()
                    .map_err(err)?;
                let m = FPModule::from_relations(&ambient, &rels).map_err(err)?;
                self.values.insert(name.clone(), Value::Module(m));
            }
            StatementKind::Map { name, source, target, rows } => {
                let (s, t) = (self.module(source)?, self.module(target)?);
                if rows.len() != s.rank() || rows.iter().any(|r| r.len() != t.rank()) {
                    return Err(format!(
                        "map '{name}' needs {} rows of {} entries",
                        s.rank(),
                        t.rank()
                    ));
                }
                let f = ModuleMap::from_images(&s, &t, rows).map_err(err)?;
                self.values.insert(name.clone(), Value::Map(f));
            }
            StatementKind::Art { name, functor, module } => {
                let m = self.module(module)?;
                let x = match functor {
                    Functor::F1 => artinian_dual_of(&m),
                    Functor::F2 => top_local_cohomology(&m).map_err(err)?,
                };
                self.values.insert(name.clone(), Value::Art(x));
            }
        }
        Ok(())
    }

    fn render_polys(&self, ps: &[Polynomial]) -> String {
        let parts: Vec<String> = ps.iter().map(|p| p.render(&self.ring)).collect();
        format!("({})", parts.join(", "))
    }

    fn command(&mut self, verb: Verb, args: &[Arg]) -> CmdResult<Vec<String>> {
        let name = |i: usize| -> &str {
            match args.get(i) {
                Some(Arg::Name(n)) => n,
                _ => "",
            }
        };
        let int = |i: usize| -> Option<i64> {
            match args.get(i) {
                Some(Arg::Int(v)) => Some(*v),
                _ => None,
            }
        };
        let polys = |i: usize| -> Option<&Vec<Polynomial>> {
            match args.get(i) {
                Some(Arg::Polys(p)) => Some(p),
                _ => None,
            }
        };
        let n = self.ring.nvars() as i64;
        let lines = |s: String| -> Vec<String> { s.lines().map(str::to_string).collect() };
        let mut produced: Option<Value> = None;
        let out = match verb {
            Verb::Invariants => vec![invariants(&self.module(name(0))?).to_string()],
            Verb::Gb => match self.lookup(name(0))? {
                Value::Ideal(i) => i.groebner_basis().iter().map(|p| p.render(&self.ring)).collect(),
                _ => self.module(name(0))?.groebner_basis().render(),
            },
            Verb::Resolve => {
                let res = resolve(&self.module(name(0))?);
                let mut out = Vec::new();
                for i in 0..=res.len() {
                    out.push(format!("F{i}: {}", twists(res.free_module(i).twists())));
                }
                for i in 1..=res.len() {
                    out.push(format!("d{i}:"));
                    out.extend(lines(res.differential(i).render()));
                }
                out
            }
            Verb::Betti => lines(resolve(&self.module(name(0))?).betti().to_string()),
            Verb::Hilbert => {
                let m = self.module(name(0))?;
                let lo = int(1).map(|v| v as i32).unwrap_or_else(|| m.twists().iter().copied().min().unwrap_or(0));
                let hi = int(2).map(|v| v as i32).unwrap_or(self.cfg.max_degree);
                (lo..=hi).map(|d| format!("h({d})={}", m.hilbert_function(d))).collect()
            }
            Verb::Ext => {
                let i = int(0).unwrap_or(0);
                let m = self.module(name(1))?;
                let t = int(2).map(|v| v as i32).unwrap_or(-(n as i32));
                let e = ext_module(i, &m, t);
                let out = lines(e.render());
                produced = Some(Value::Module(e));
                out
            }
            Verb::Koszul => {
                let m = self.module(name(0))?;
                let i = int(1).unwrap_or(0);
                let xs = polys(2).cloned().unwrap_or_default();
                let h = if i < 0 || i as usize > xs.len() {
                    FPModule::zero(self.ring.clone())
                } else {
                    koszul_complex(&xs, &m, Variant::Chain).and_then(|k| k.homology(i as usize)).map_err(err)?
                };
                let out = lines(h.render());
                produced = Some(Value::Module(h));
                out
            }
            Verb::F1 | Verb::F2 => {
                let m = self.module(name(0))?;
                let x = if verb == Verb::F1 { artinian_dual_of(&m) } else { top_local_cohomology(&m).map_err(err)? };
                let out = lines(render_artinian(&x));
                produced = Some(Value::Art(x));
                out
            }
            Verb::G1 | Verb::G2 => {
                let x = self.art(name(0))?;
                let m = if verb == Verb::G1 { noetherian_dual_of(&x) } else { top_local_homology(&x).map_err(err)? };
                let out = lines(m.render());
                produced = Some(Value::Module(m));
                out
            }
            Verb::Ndim => vec![format!("ndim={}", noetherian_dim(&self.art(name(0))?))],
            Verb::Width => vec![format!("width={}", width(&self.art(name(0))?).map_err(err)?)],
            Verb::Cocm => vec![format!("cocm={}", yes_no(is_co_cm(&self.art(name(0))?).map_err(err)?))],
            Verb::LochomTop => {
                let x = self.art(name(0))?;
                let mut out = Vec::new();
                let xs = match polys(1) {
                    Some(p) => p.clone(),
                    None => {
                        let sop = find_sop(x.dual(), self.cfg.seed).map_err(err)?;
                        out.push(format!("sop={}", sop.render(&self.ring)));
                        sop.elements
                    }
                };
                let top = local_homology_top(&xs, &x).map_err(err)?;
                out.extend(top.trail.iter().cloned());
                out.extend(lines(top.module.render()));
                produced = Some(Value::Module(top.module));
                out
            }
            Verb::KoszulArt => {
                let x = self.art(name(0))?;
                let (t, i) = (int(1).unwrap_or(1), int(2).unwrap_or(0));
                if t < 1 || i < 0 {
                    return Err("t must be positive and i nonnegative".into());
                }
                let xs = polys(3).cloned().unwrap_or_default();
                let h = koszul_homology_artinian(&xs, t as u32, i as usize, &x).map_err(err)?;
                let mut out = vec![format!("elements={} t={t} i={i}", self.render_polys(&xs))];
                out.extend(lines(render_artinian(&h)));
                produced = Some(Value::Art(h));
                out
            }
            Verb::Cmfication => {
                let c = cmfication_candidate(&self.module(name(0))?).map_err(err)?;
                let out = lines(c.render());
                produced = Some(Value::Module(c));
                out
            }
            Verb::VerifyCmf => {
                let (m, mt, f) = (self.module(name(0))?, self.module(name(1))?, self.map(name(2))?);
                lines(verify_cmfication(&m, &mt, &f).map_err(err)?.to_string())
            }
            Verb::Uniqueness => {
                let (m, mt, f) = (self.module(name(0))?, self.module(name(1))?, self.map(name(2))?);
                vec![format!("unique={}", check_uniqueness(&m, &mt, &f, self.cfg.seed).map_err(err)?)]
            }
            Verb::Thm4Check => {
                let (m, b, f) = (self.module(name(0))?, self.module(name(1))?, self.map(name(2))?);
                lines(check_goto_cmfication(&m, &b, &f).map_err(err)?.to_string())
            }
            Verb::GotoCheck => lines(goto_vanishing_pattern(&self.module(name(0))?).map_err(err)?.to_string()),
            Verb::Cor2Check => {
                let m = self.module(name(0))?;
                let check = match args.get(1) {
                    Some(Arg::Name(j)) => hom_into_gorenstein(&m, &self.ideal(j)?),
                    _ => canonical_module_check(&m),
                }
                .map_err(err)?;
                let out = lines(check.to_string());
                produced = Some(Value::Module(check.ext_module));
                out
            }
            Verb::TwoPlanesExample => {
                let ex = two_planes_example(&self.ring).map_err(err)?;
                let out = vec![
                    format!("I = {}", ex.ideal.render()),
                    format!("R: generators {}, {} relations", twists(ex.ring_module.twists()), ex.ideal.generators().len()),
                    format!("B: generators {}", twists(ex.planes.twists())),
                    "iota: 1 -> (1, 1)".to_string(),
                ];
                self.values.insert("I".into(), Value::Ideal(ex.ideal));
                self.values.insert("R".into(), Value::Module(ex.ring_module));
                self.values.insert("B".into(), Value::Module(ex.planes));
                self.values.insert("iota".into(), Value::Map(ex.iota));
                out
            }
            Verb::Iso => {
                let (a, b) = (self.module(name(0))?, self.module(name(1))?);
                match lochom::is_isomorphic(&a, &b, self.cfg.seed) {
                    IsoAnswer::No(why) => vec![format!("no ({why})")],
                    other => vec![other.to_string()],
                }
            }
        };
        if let Some(v) = produced {
            self.last = Some(v);
        }
        Ok(out)
    }
}

fn twists(t: &[i32]) -> String {
    format!("[{}]", t.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(","))
}

fn run_statement(env: &mut Env, st: &Statement) -> CmdResult<Vec<String>> {
    match &st.kind {
        StatementKind::Command { verb, args } => {
            env.command(*verb, args).map_err(|e| format!("{}: {e}", verb.name()))
        }
        other => env.define(other).map(|_| Vec::new()),
    }
}

/// Echo each statement as `> text` followed by its output; stop at the first error.
pub fn run_session(session: &Session, cfg: &Config) -> Transcript {
    let mut text = String::new();
    let Some(ring) = session.ring.clone() else {
        return Transcript { text, failed: false };
    };
    let mut env = Env { ring, cfg: *cfg, values: HashMap::new(), last: None };
    for st in &session.statements {
        text.push_str("> ");
        text.push_str(&st.text);
        text.push('\n');
        match run_statement(&mut env, st) {
            Ok(lines) => {
                for l in lines {
                    text.push_str(&l);
                    text.push('\n');
                }
            }
            Err(e) => {
                text.push_str(&format!("error (line {}): {e}\n", st.line));
                return Transcript { text, failed: true };
            }
        }
    }
    Transcript { text, failed: false }
}
