//! Buchberger's algorithm for homogeneous submodules of graded free modules.
//!
//! The engine runs degree by degree (normal selection strategy). Within one
//! degree all S-vectors are first top-reduced against a snapshot of the basis,
//! possibly in parallel, and then finished sequentially in pair order; serial
//! and parallel runs therefore make identical choices.
//!
//! Optionally every basis element carries its representation in terms of the
//! input generators. Each reduction to zero then yields a syzygy of the inputs;
//! by Schreyer's theorem those syzygies generate the whole syzygy module.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::free::{FreeElement, FreeMap, FreeModule, SVec, Term};
use crate::monomial::Monomial;
use crate::par;

/// A reduced Gröbner basis: monic elements sorted by leading term, descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    parent: FreeModule,
    pub(crate) elements: Vec<SVec>,
    lead_index: Vec<Vec<usize>>,
}

#[derive(Clone)]
struct Elem {
    v: SVec,
    rep: SVec,
}

impl Elem {
    fn lead(&self) -> &Term {
        &self.v[0]
    }
}

struct Engine<'a> {
    f: &'a FreeModule,
    rep_f: Option<&'a FreeModule>,
    basis: Vec<Elem>,
    by_comp: Vec<Vec<usize>>,
    pending: BTreeMap<i32, Vec<(usize, usize)>>,
    pending_set: HashSet<(usize, usize)>,
    use_product: bool,
    syzygies: Vec<SVec>,
}

/// Minimum batch size before reductions within a degree go parallel.
const PAR_BATCH: usize = 8;

impl<'a> Engine<'a> {
    fn new(f: &'a FreeModule, rep_f: Option<&'a FreeModule>) -> Self {
        Engine {
            f,
            rep_f,
            basis: Vec::new(),
            by_comp: vec![Vec::new(); f.rank()],
            pending: BTreeMap::new(),
            pending_set: HashSet::new(),
            // the product criterion is only valid for ideals, and it discards
            // Koszul syzygies, so it is off when tracking
            use_product: f.rank() == 1 && rep_f.is_none(),
            syzygies: Vec::new(),
        }
    }

    fn divisor(&self, t: &Term, limit: usize) -> Option<usize> {
        self.by_comp[t.comp as usize]
            .iter()
            .copied()
            .take_while(|&k| k < limit)
            .find(|&k| self.basis[k].lead().mono.divides(&t.mono))
    }

    /// Reduce the leading term until no basis lead (among the first `limit`) divides it.
    fn top_reduce(&self, mut v: SVec, mut rep: SVec, limit: usize) -> (SVec, SVec) {
        while let Some(t) = v.first() {
            let Some(k) = self.divisor(t, limit) else { break };
            let g = &self.basis[k];
            let q = g.lead().mono.quotient_of(&t.mono);
            let c = t.coeff;
            v = self.f.sub_mul(&v, c, &q, &g.v);
            if let Some(rf) = self.rep_f {
                rep = rf.sub_mul(&rep, c, &q, &g.rep);
            }
        }
        (v, rep)
    }

    fn s_vector(&self, i: usize, j: usize) -> (SVec, SVec) {
        let (a, b) = (&self.basis[i], &self.basis[j]);
        let l = a.lead().mono.lcm(&b.lead().mono);
        let qa = a.lead().mono.quotient_of(&l);
        let qb = b.lead().mono.quotient_of(&l);
        let v = self.f.sub_mul(&self.f.mul_term(&a.v, 1, &qa), 1, &qb, &b.v);
        let rep = match self.rep_f {
            Some(rf) => rf.sub_mul(&rf.mul_term(&a.rep, 1, &qa), 1, &qb, &b.rep),
            None => Vec::new(),
        };
        (v, rep)
    }

    fn pair_degree(&self, i: usize, j: usize) -> i32 {
        let (a, b) = (self.basis[i].lead(), self.basis[j].lead());
        a.mono.lcm(&b.mono).degree() as i32 + self.f.twists()[a.comp as usize]
    }

    fn add(&mut self, v: SVec, rep: SVec) {
        let fld = self.f.ring().field();
        let inv = fld.inv(v[0].coeff);
        let v = self.f.scale(&v, inv);
        let rep = match self.rep_f {
            Some(rf) => rf.scale(&rep, inv),
            None => rep,
        };
        let k = self.basis.len();
        let comp = v[0].comp as usize;
        self.basis.push(Elem { v, rep });
        let partners = self.by_comp[comp].clone();
        for i in partners {
            let (li, lk) = (&self.basis[i].lead().mono, &self.basis[k].lead().mono);
            if self.use_product && li.is_coprime(lk) {
                continue;
            }
            let d = self.pair_degree(i, k);
            self.pending.entry(d).or_default().push((i, k));
            self.pending_set.insert((i, k));
        }
        self.by_comp[comp].push(k);
    }

    fn chain_criterion(&self, i: usize, j: usize) -> bool {
        let comp = self.basis[i].lead().comp as usize;
        let l = self.basis[i].lead().mono.lcm(&self.basis[j].lead().mono);
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        self.by_comp[comp].iter().any(|&k| {
            k != i
                && k != j
                && self.basis[k].lead().mono.divides(&l)
                && !self.pending_set.contains(&key(i, k))
                && !self.pending_set.contains(&key(j, k))
        })
    }

    /// Finish a batch of candidates that were top-reduced against the first `limit` elements.
    fn absorb(&mut self, candidates: Vec<(SVec, SVec)>, mut on_result: impl FnMut(bool)) {
        let limit = self.basis.len();
        let reduced = par::map(&candidates, PAR_BATCH, |(v, rep)| {
            self.top_reduce(v.clone(), rep.clone(), limit)
        });
        for (v, rep) in reduced {
            let (v, rep) = self.top_reduce(v, rep, self.basis.len());
            if v.is_empty() {
                if self.rep_f.is_some() && !rep.is_empty() {
                    self.syzygies.push(rep);
                }
                on_result(false);
            } else {
                self.add(v, rep);
                on_result(true);
            }
        }
    }

    fn process_pairs_of_degree(&mut self, d: i32) {
        let Some(pairs) = self.pending.remove(&d) else { return };
        let mut live = Vec::new();
        for (i, j) in pairs {
            if self.chain_criterion(i, j) {
                self.pending_set.remove(&(i, j));
            } else {
                live.push((i, j));
            }
        }
        let svecs: Vec<(SVec, SVec)> = live.iter().map(|&(i, j)| self.s_vector(i, j)).collect();
        for p in &live {
            self.pending_set.remove(p);
        }
        self.absorb(svecs, |_| {});
    }

    /// Run on homogeneous inputs `(vector, degree)`. Returns, per input, whether
    /// it was not already in the span of what came before it in degree order.
    fn run(&mut self, inputs: &[(SVec, i32)]) -> Vec<bool> {
        let mut order: Vec<usize> = (0..inputs.len()).collect();
        order.sort_by_key(|&i| inputs[i].1);
        let mut essential = vec![false; inputs.len()];
        let mut next = 0;
        loop {
            let next_in = order.get(next).map(|&i| inputs[i].1);
            let next_pair = self.pending.keys().next().copied();
            let d = match (next_in, next_pair) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            self.process_pairs_of_degree(d);
            if next_in == Some(d) {
                let start = next;
                while next < order.len() && inputs[order[next]].1 == d {
                    next += 1;
                }
                let batch: Vec<usize> = order[start..next].to_vec();
                let cands: Vec<(SVec, SVec)> = batch
                    .iter()
                    .map(|&i| {
                        let rep = match self.rep_f {
                            Some(rf) => rf.basis_vector(i),
                            None => Vec::new(),
                        };
                        (inputs[i].0.clone(), rep)
                    })
                    .collect();
                let mut flags = Vec::with_capacity(batch.len());
                self.absorb(cands, |kept| flags.push(kept));
                for (&i, kept) in batch.iter().zip(flags) {
                    essential[i] = kept;
                }
            }
        }
        essential
    }

    fn into_reduced(self) -> GroebnerBasis {
        let elems: Vec<SVec> = self.basis.into_iter().map(|e| e.v).collect();
        GroebnerBasis::interreduce(self.f.clone(), elems)
    }
}

impl GroebnerBasis {
    /// Reduced Gröbner basis of the submodule generated by `gens`.
    pub fn compute(parent: &FreeModule, gens: &[FreeElement]) -> Result<Self> {
        let inputs = homogeneous_inputs(parent, gens)?;
        Ok(Self::from_inputs(parent, &inputs))
    }

    pub(crate) fn from_inputs(parent: &FreeModule, inputs: &[(SVec, i32)]) -> Self {
        let mut e = Engine::new(parent, None);
        e.run(inputs);
        e.into_reduced()
    }

    pub(crate) fn from_svecs(parent: &FreeModule, gens: Vec<SVec>) -> Self {
        let inputs: Vec<(SVec, i32)> = gens
            .into_iter()
            .filter(|v| !v.is_empty())
            .map(|v| {
                let d = parent.term_degree(&v[0]);
                (v, d)
            })
            .collect();
        Self::from_inputs(parent, &inputs)
    }

    /// Wrap elements already known to form a reduced basis.
    pub(crate) fn from_reduced(parent: FreeModule, elements: Vec<SVec>) -> Self {
        let mut lead_index = vec![Vec::new(); parent.rank()];
        for (k, e) in elements.iter().enumerate() {
            lead_index[e[0].comp as usize].push(k);
        }
        GroebnerBasis { parent, elements, lead_index }
    }

    fn interreduce(parent: FreeModule, elems: Vec<SVec>) -> Self {
        let mut keep: Vec<SVec> = Vec::new();
        for (i, e) in elems.iter().enumerate() {
            let l = &e[0];
            let redundant = elems.iter().enumerate().any(|(j, o)| {
                j != i && o[0].comp == l.comp && o[0].mono.divides(&l.mono) && o[0].mono != l.mono
            });
            if !redundant {
                keep.push(e.clone());
            }
        }
        keep.sort_by(|a, b| parent.cmp_terms(&b[0], &a[0]));
        let shell = GroebnerBasis::from_reduced(parent.clone(), keep.clone());
        let fld = parent.ring().field();
        let mut out = Vec::with_capacity(keep.len());
        for (i, e) in keep.iter().enumerate() {
            let tail = shell.reduce_excluding(&e[1..], Some(i));
            let mut v = Vec::with_capacity(tail.len() + 1);
            v.push(e[0].clone());
            v.extend(tail);
            let inv = fld.inv(v[0].coeff);
            out.push(parent.scale(&v, inv));
        }
        GroebnerBasis::from_reduced(parent, out)
    }

    pub fn parent(&self) -> &FreeModule {
        &self.parent
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> Vec<FreeElement> {
        self.elements
            .iter()
            .map(|v| FreeElement::from_svec_unchecked(v.clone(), self.parent.term_degree(&v[0])))
            .collect()
    }

    fn divisor(&self, t: &Term, skip: Option<usize>) -> Option<usize> {
        self.lead_index[t.comp as usize]
            .iter()
            .copied()
            .filter(|&k| Some(k) != skip)
            .find(|&k| self.elements[k][0].mono.divides(&t.mono))
    }

    /// Is the term's monomial outside the leading-term module?
    pub(crate) fn is_standard(&self, comp: u32, mono: &Monomial) -> bool {
        self.lead_index[comp as usize].iter().all(|&k| !self.elements[k][0].mono.divides(mono))
    }

    fn reduce_excluding(&self, v: &[Term], skip: Option<usize>) -> SVec {
        let mut rest: SVec = v.to_vec();
        let mut out: SVec = Vec::new();
        let mut pos = 0;
        while pos < rest.len() {
            let t = &rest[pos];
            match self.divisor(t, skip) {
                Some(k) => {
                    let g = &self.elements[k];
                    let q = g[0].mono.quotient_of(&t.mono);
                    let c = t.coeff;
                    rest = self.parent.sub_mul(&rest[pos..], c, &q, g);
                    pos = 0;
                }
                None => {
                    out.push(t.clone());
                    pos += 1;
                }
            }
        }
        out
    }

    /// Fully reduced remainder.
    pub(crate) fn reduce(&self, v: &[Term]) -> SVec {
        self.reduce_excluding(v, None)
    }

    pub fn normal_form(&self, v: &FreeElement) -> FreeElement {
        FreeElement::from_svec_unchecked(self.reduce(&v.terms), v.degree())
    }

    pub fn contains(&self, v: &FreeElement) -> bool {
        self.reduce(&v.terms).is_empty()
    }

    /// Exhaustive Buchberger criterion: every S-vector reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let (a, b) = (&self.elements[i], &self.elements[j]);
                if a[0].comp != b[0].comp {
                    continue;
                }
                let l = a[0].mono.lcm(&b[0].mono);
                let qa = a[0].mono.quotient_of(&l);
                let qb = b[0].mono.quotient_of(&l);
                let s = self.parent.sub_mul(&self.parent.mul_term(a, 1, &qa), 1, &qb, b);
                if !self.reduce(&s).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    pub fn render(&self) -> Vec<String> {
        self.elements.iter().map(|e| self.parent.render_svec(e)).collect()
    }
}

pub(crate) fn homogeneous_inputs(parent: &FreeModule, gens: &[FreeElement]) -> Result<Vec<(SVec, i32)>> {
    gens.iter()
        .map(|g| {
            if let Some(d) = parent.vector_degree(&g.terms)? {
                if d != g.degree() {
                    return Err(Error::Inhomogeneous("generator degree mismatch".into()));
                }
            }
            Ok((g.terms.clone(), g.degree()))
        })
        .collect()
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
pub fn groebner_basis(parent: &FreeModule, gens: &[FreeElement]) -> Result<GroebnerBasis> {
    GroebnerBasis::compute(parent, gens)
}

pub fn normal_form(v: &FreeElement, basis: &GroebnerBasis) -> FreeElement {
    basis.normal_form(v)
}

/// Indices of a minimal generating subset of `inputs` (chosen in degree order,
/// then input order) together with the reduced basis of their span.
pub(crate) fn minimal_subset(parent: &FreeModule, inputs: &[(SVec, i32)]) -> (Vec<usize>, GroebnerBasis) {
    let mut e = Engine::new(parent, None);
    let flags = e.run(inputs);
    let keep = flags.iter().enumerate().filter(|(_, &k)| k).map(|(i, _)| i).collect();
    (keep, e.into_reduced())
}

/// Generators of the syzygy module of `inputs`, as vectors in `rep_module`
/// (whose twists are the input degrees). Not minimized.
pub(crate) fn raw_syzygies(parent: &FreeModule, rep_module: &FreeModule, inputs: &[(SVec, i32)]) -> Vec<SVec> {
    let mut e = Engine::new(parent, Some(rep_module));
    e.run(inputs);
    e.syzygies
}

/// Minimal homogeneous generators of a submodule, each made monic.
pub(crate) fn minimal_generators(parent: &FreeModule, gens: Vec<SVec>) -> Vec<SVec> {
    let fld = parent.ring().field();
    let inputs: Vec<(SVec, i32)> = gens
        .into_iter()
        .filter(|v| !v.is_empty())
        .map(|v| {
            let d = parent.term_degree(&v[0]);
            (v, d)
        })
        .collect();
    let (keep, _) = minimal_subset(parent, &inputs);
    let mut out: Vec<(SVec, i32)> = keep.into_iter().map(|i| inputs[i].clone()).collect();
    out.sort_by_key(|(_, d)| *d);
    out.into_iter()
        .map(|(v, _)| {
            let inv = fld.inv(v[0].coeff);
            parent.scale(&v, inv)
        })
        .collect()
}

/// Minimal generators of the syzygies of `gens`, as a map from a new free
/// module (twists = syzygy degrees) into the free module on the generators.
pub fn syzygies(parent: &FreeModule, gens: &[FreeElement]) -> Result<FreeMap> {
    let inputs = homogeneous_inputs(parent, gens)?;
    Ok(syzygy_map(parent, &inputs))
}

pub(crate) fn syzygy_map(parent: &FreeModule, inputs: &[(SVec, i32)]) -> FreeMap {
    let source = FreeModule::new(parent.ring().clone(), inputs.iter().map(|(_, d)| *d).collect());
    let raw = raw_syzygies(parent, &source, inputs);
    let mins = minimal_generators(&source, raw);
    let next = FreeModule::new(parent.ring().clone(), mins.iter().map(|v| source.term_degree(&v[0])).collect());
    FreeMap::from_svecs(next, source, mins)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Polynomial, Ring};
    use std::sync::Arc;

    fn ideal_gens(r: &Arc<Ring>, polys: &[&str]) -> (FreeModule, Vec<FreeElement>) {
        let s = FreeModule::new(r.clone(), vec![0]);
        let g = polys
            .iter()
            .map(|p| FreeElement::from_components(&s, &[r.poly(p)]).unwrap())
            .collect();
        (s, g)
    }

    fn polys(gb: &GroebnerBasis) -> Vec<Polynomial> {
        gb.elements().iter().map(|e| e.components(gb.parent())[0].clone()).collect()
    }

    /// Naive Buchberger: all pairs, no criteria, run to a fixpoint, then reduced.
    fn naive_reduced_gb(r: &Ring, gens: &[Polynomial]) -> Vec<Polynomial> {
        let f = r.field();
        let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        let reduce = |p: &Polynomial, basis: &[Polynomial]| -> Polynomial {
            let mut p = p.clone();
            let mut rem = Polynomial::zero();
            while let Some((c, m)) = p.leading().cloned() {
                if let Some(g) = basis.iter().find(|g| g.leading().unwrap().1.divides(&m)) {
                    let (gc, gm) = g.leading().unwrap();
                    let q = gm.quotient_of(&m);
                    let coef = f.div(c, *gc);
                    p = p.sub(&g.mul_monomial(coef, &q, r), r).unwrap();
                } else {
                    rem = rem.add(&Polynomial::monomial(c, m.clone()), r).unwrap();
                    p = p.sub(&Polynomial::monomial(c, m), r).unwrap();
                }
            }
            rem
        };
        loop {
            let mut added = false;
            let snapshot = basis.clone();
            for i in 0..snapshot.len() {
                for j in i + 1..snapshot.len() {
                    let (a, b) = (&snapshot[i], &snapshot[j]);
                    let (ac, am) = a.leading().unwrap();
                    let (bc, bm) = b.leading().unwrap();
                    let l = am.lcm(bm);
                    let s = a
                        .mul_monomial(f.inv(*ac), &am.quotient_of(&l), r)
                        .sub(&b.mul_monomial(f.inv(*bc), &bm.quotient_of(&l), r), r)
                        .unwrap();
                    let red = reduce(&s, &basis);
                    if !red.is_zero() {
                        basis.push(red);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        // minimalize and reduce
        let mut min: Vec<Polynomial> = Vec::new();
        for (i, g) in basis.iter().enumerate() {
            let lm = &g.leading().unwrap().1;
            let dominated = basis.iter().enumerate().any(|(j, h)| {
                let hm = &h.leading().unwrap().1;
                hm.divides(lm) && (hm != lm || j < i)
            });
            if !dominated {
                min.push(g.clone());
            }
        }
        let mut out: Vec<Polynomial> = min
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let others: Vec<Polynomial> =
                    min.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
                let (c, m) = g.leading().unwrap().clone();
                let tail = g.sub(&Polynomial::monomial(c, m.clone()), r).unwrap();
                let red = reduce(&tail, &others);
                red.add(&Polynomial::monomial(c, m), r).unwrap().scale(f.inv(c), r)
            })
            .collect();
        out.sort_by(|a, b| b.leading().unwrap().1.cmp(&a.leading().unwrap().1));
        out
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = Ring::standard(4);
        let (s, g) = ideal_gens(&r, &["x1*x3", "x1*x4", "x2*x3", "x2*x4"]);
        let gb = groebner_basis(&s, &g).unwrap();
        assert_eq!(gb.len(), 4);
        let got: HashSet<String> = gb.render().into_iter().collect();
        for m in ["x1*x3", "x1*x4", "x2*x3", "x2*x4"] {
            assert!(got.contains(m));
        }
        let empty = groebner_basis(&s, &[]).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn s_pair_completion_matches_naive_oracle() {
        let cases: &[(usize, &[&str])] = &[
            (3, &["x1*x3 - x2^2", "x2*x3 - x1^2"]),
            (3, &["x1^2 - x2*x3", "x1*x2 - x3^2"]),
            (4, &["x1*x3 - x2^2", "x2*x4 - x3^2", "x1*x4 - x2*x3"]),
            (4, &["x1^2 + x2*x3 - x4^2", "x1*x2 - 3*x3*x4", "x2^2 - x1*x4"]),
        ];
        for (n, gens) in cases {
            let r = Ring::standard(*n);
            let (s, g) = ideal_gens(&r, gens);
            let gb = groebner_basis(&s, &g).unwrap();
            assert!(gb.satisfies_buchberger_criterion());
            let oracle = naive_reduced_gb(&r, &gens.iter().map(|p| r.poly(p)).collect::<Vec<_>>());
            assert_eq!(polys(&gb), oracle, "{gens:?}");
        }
        // the second ideal needs a new element from its S-pair
        let r = Ring::standard(3);
        let (s, g) = ideal_gens(&r, &["x1^2 - x2*x3", "x1*x2 - x3^2"]);
        assert!(groebner_basis(&s, &g).unwrap().len() > 2);
    }

    #[test]
    fn normal_forms() {
        let r = Ring::standard(4);
        let (s, g) = ideal_gens(&r, &["x1*x3", "x1*x4", "x2*x3", "x2*x4"]);
        let gb = groebner_basis(&s, &g).unwrap();
        let e = |p: &str| FreeElement::from_components(&s, &[r.poly(p)]).unwrap();
        assert!(gb.normal_form(&e("x1*x3")).is_zero());
        assert_eq!(gb.normal_form(&e("x1*x2")), e("x1*x2"));
        assert_eq!(gb.normal_form(&e("x1*x2 + x2*x4")), e("x1*x2"));
    }

    #[test]
    fn koszul_syzygy() {
        let r = Ring::standard(2);
        let (s, g) = ideal_gens(&r, &["x1", "x2"]);
        let syz = syzygies(&s, &g).unwrap();
        assert_eq!(syz.source().twists(), &[2]);
        assert_eq!(syz.entry(0, 0), r.poly("x2"));
        assert_eq!(syz.entry(1, 0), r.poly("-x1"));
        let (s, g) = ideal_gens(&r, &["x1"]);
        assert_eq!(syzygies(&s, &g).unwrap().source().rank(), 0);
    }

    #[test]
    fn zero_generator_gives_unit_syzygy() {
        let r = Ring::standard(2);
        let s = FreeModule::new(r.clone(), vec![0]);
        let g = vec![
            FreeElement::from_components(&s, &[r.poly("x1")]).unwrap(),
            FreeElement::new(&s, &[Polynomial::zero()], 3).unwrap(),
        ];
        let syz = syzygies(&s, &g).unwrap();
        assert_eq!(syz.source().twists(), &[3]);
        assert_eq!(syz.entry(1, 0), r.poly("1"));
    }

    #[test]
    fn module_basis_with_mixed_twists() {
        let r = Ring::standard(3);
        let f = FreeModule::new(r.clone(), vec![0, 1]);
        let g = vec![
            FreeElement::from_components(&f, &[r.poly("x1^2"), r.poly("x2")]).unwrap(),
            FreeElement::from_components(&f, &[r.poly("x1*x3"), r.poly("x3")]).unwrap(),
            FreeElement::from_components(&f, &[r.poly("x2^2"), r.poly("x1")]).unwrap(),
        ];
        let gb = groebner_basis(&f, &g).unwrap();
        assert!(gb.satisfies_buchberger_criterion());
        for x in &g {
            assert!(gb.contains(x));
        }
        let syz = syzygies(&f, &g).unwrap();
        for j in 0..syz.source().rank() {
            let mut acc: SVec = Vec::new();
            for (i, gi) in g.iter().enumerate() {
                acc = f.axpy(&acc, 1, &f.mul_poly(&gi.terms, &syz.entry(i, j)));
            }
            assert!(acc.is_empty());
        }
    }
}
