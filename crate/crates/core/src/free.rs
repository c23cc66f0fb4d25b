//! Graded free modules `S(-a_1) ⊕ ... ⊕ S(-a_r)`, their homogeneous elements and
//! degree-0 maps between them.
//!
//! Twist convention: the generator of `S(-a)` lives in degree `a`.
//!
//! Elements are stored as sparse term vectors sorted descending in a
//! position-over-term order. Positions are ranked by twist (larger twist first),
//! ties by generator index; within a position terms follow grevlex. Ranking the
//! positions by twist puts every degree-0 scalar entry of a homogeneous vector
//! in front, which is what lets presentations be minimized from Gröbner leads.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{grevlex, Monomial};
use crate::poly::{Polynomial, Ring};

/// One term `coeff * mono * e_comp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Term {
    pub comp: u32,
    pub mono: Monomial,
    pub coeff: u32,
}

pub(crate) type SVec = Vec<Term>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeModule {
    ring: Arc<Ring>,
    twists: Vec<i32>,
    prio: Vec<u32>,
}

impl FreeModule {
    pub fn new(ring: Arc<Ring>, twists: Vec<i32>) -> Self {
        let mut idx: Vec<usize> = (0..twists.len()).collect();
        idx.sort_by(|&a, &b| twists[b].cmp(&twists[a]).then(a.cmp(&b)));
        let mut prio = vec![0u32; twists.len()];
        for (rank, &i) in idx.iter().enumerate() {
            prio[i] = rank as u32;
        }
        FreeModule { ring, twists, prio }
    }

    pub fn zero(ring: Arc<Ring>) -> Self {
        Self::new(ring, Vec::new())
    }

    #[inline]
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    #[inline]
    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    /// `F(k)`: every generator moves from degree `a` to `a - k`.
    pub fn shift(&self, k: i32) -> FreeModule {
        FreeModule::new(self.ring.clone(), self.twists.iter().map(|a| a - k).collect())
    }

    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        let mut t = self.twists.clone();
        t.extend_from_slice(&other.twists);
        FreeModule::new(self.ring.clone(), t)
    }

    pub fn same_ring(&self, other: &FreeModule) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    // ---- term-vector arithmetic in this module's order ----

    #[inline]
    pub(crate) fn cmp_pos(&self, ca: u32, ma: &Monomial, cb: u32, mb: &Monomial) -> Ordering {
        match self.prio[cb as usize].cmp(&self.prio[ca as usize]) {
            Ordering::Equal => grevlex(ma, mb),
            o => o,
        }
    }

    #[inline]
    pub(crate) fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp_pos(a.comp, &a.mono, b.comp, &b.mono)
    }

    #[inline]
    pub(crate) fn term_degree(&self, t: &Term) -> i32 {
        t.mono.degree() as i32 + self.twists[t.comp as usize]
    }

    /// Sort descending, merge duplicates and drop zeros.
    pub(crate) fn normalize(&self, mut terms: Vec<Term>) -> SVec {
        let f = self.ring.field();
        terms.sort_by(|a, b| self.cmp_terms(b, a));
        let mut out: SVec = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.comp == t.comp && last.mono == t.mono => {
                    last.coeff = f.add(last.coeff, t.coeff)
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        out
    }

    /// `a + c * b`
    pub(crate) fn axpy(&self, a: &[Term], c: u32, b: &[Term]) -> SVec {
        self.sub_mul_inner(a, c, None, b, false)
    }

    /// `f - c * m * g`
    pub(crate) fn sub_mul(&self, f: &[Term], c: u32, m: &Monomial, g: &[Term]) -> SVec {
        self.sub_mul_inner(f, c, Some(m), g, true)
    }

    fn sub_mul_inner(
        &self,
        f: &[Term],
        c: u32,
        m: Option<&Monomial>,
        g: &[Term],
        negate: bool,
    ) -> SVec {
        let fld = self.ring.field();
        let c = if negate { fld.neg(c) } else { c };
        if c == 0 {
            return f.to_vec();
        }
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |t: &Term| Term {
            comp: t.comp,
            mono: match m {
                Some(m) => t.mono.mul(m),
                None => t.mono.clone(),
            },
            coeff: fld.mul(t.coeff, c),
        };
        let mut gj = g.first().map(shifted);
        while i < f.len() || gj.is_some() {
            match (f.get(i), gj.as_ref()) {
                (Some(a), Some(b)) => match self.cmp_terms(a, b) {
                    Ordering::Greater => {
                        out.push(a.clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(gj.take().unwrap());
                        j += 1;
                        gj = g.get(j).map(shifted);
                    }
                    Ordering::Equal => {
                        let s = fld.add(a.coeff, b.coeff);
                        if s != 0 {
                            out.push(Term { comp: a.comp, mono: a.mono.clone(), coeff: s });
                        }
                        i += 1;
                        j += 1;
                        gj = g.get(j).map(shifted);
                    }
                },
                (Some(a), None) => {
                    out.push(a.clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(gj.take().unwrap());
                    j += 1;
                    gj = g.get(j).map(shifted);
                }
                (None, None) => unreachable!(),
            }
        }
        out
    }

    pub(crate) fn scale(&self, f: &[Term], c: u32) -> SVec {
        let fld = self.ring.field();
        if c == 0 {
            return Vec::new();
        }
        f.iter().map(|t| Term { comp: t.comp, mono: t.mono.clone(), coeff: fld.mul(t.coeff, c) }).collect()
    }

    pub(crate) fn mul_term(&self, f: &[Term], c: u32, m: &Monomial) -> SVec {
        let fld = self.ring.field();
        if c == 0 {
            return Vec::new();
        }
        f.iter()
            .map(|t| Term { comp: t.comp, mono: t.mono.mul(m), coeff: fld.mul(t.coeff, c) })
            .collect()
    }

    /// Multiply a vector by a polynomial.
    pub(crate) fn mul_poly(&self, f: &[Term], p: &Polynomial) -> SVec {
        let mut acc: SVec = Vec::new();
        for (c, m) in p.terms() {
            let part = self.mul_term(f, *c, m);
            acc = self.axpy(&acc, 1, &part);
        }
        acc
    }

    pub(crate) fn basis_vector(&self, i: usize) -> SVec {
        vec![Term { comp: i as u32, mono: Monomial::one(self.ring.nvars()), coeff: 1 }]
    }

    /// Homogeneous degree of a nonzero vector, or an error naming the offending term.
    pub(crate) fn vector_degree(&self, f: &[Term]) -> Result<Option<i32>> {
        let Some(first) = f.first() else { return Ok(None) };
        let d = self.term_degree(first);
        if let Some(t) = f.iter().find(|t| self.term_degree(t) != d) {
            return Err(Error::Inhomogeneous(format!(
                "vector has terms of degrees {d} and {}",
                self.term_degree(t)
            )));
        }
        Ok(Some(d))
    }

    pub(crate) fn svec_from_components(&self, comps: &[Polynomial]) -> Result<SVec> {
        if comps.len() != self.rank() {
            return Err(Error::Structural(format!(
                "{} components for a free module of rank {}",
                comps.len(),
                self.rank()
            )));
        }
        let mut terms = Vec::new();
        for (i, p) in comps.iter().enumerate() {
            for (c, m) in p.terms() {
                if m.nvars() != self.ring.nvars() {
                    return Err(Error::Structural("polynomial from a different ring".into()));
                }
                terms.push(Term { comp: i as u32, mono: m.clone(), coeff: *c });
            }
        }
        Ok(self.normalize(terms))
    }

    pub(crate) fn components_of(&self, f: &[Term]) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(u32, Monomial)>> = vec![Vec::new(); self.rank()];
        for t in f {
            buckets[t.comp as usize].push((t.coeff, t.mono.clone()));
        }
        // within one position the terms are already in descending grevlex
        buckets.into_iter().map(Polynomial::from_sorted_terms).collect()
    }

    /// Render a vector as comma separated components.
    pub(crate) fn render_svec(&self, f: &[Term]) -> String {
        self.components_of(f).iter().map(|p| p.render(&self.ring)).collect::<Vec<_>>().join(", ")
    }
}

/// A homogeneous element of a free module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeElement {
    pub(crate) terms: SVec,
    degree: i32,
}

impl FreeElement {
    /// Nonzero or zero element from components; zero elements need an explicit degree.
    pub fn new(parent: &FreeModule, components: &[Polynomial], degree: i32) -> Result<Self> {
        let terms = parent.svec_from_components(components)?;
        Self::from_svec(parent, terms, degree)
    }

    /// Element whose degree is read off its terms. Fails on zero input.
    pub fn from_components(parent: &FreeModule, components: &[Polynomial]) -> Result<Self> {
        let terms = parent.svec_from_components(components)?;
        match parent.vector_degree(&terms)? {
            Some(d) => Ok(FreeElement { terms, degree: d }),
            None => Err(Error::Structural("zero element needs an explicit degree".into())),
        }
    }

    pub(crate) fn from_svec(parent: &FreeModule, terms: SVec, degree: i32) -> Result<Self> {
        match parent.vector_degree(&terms)? {
            Some(d) if d != degree => Err(Error::Inhomogeneous(format!(
                "element of degree {d} declared with degree {degree}"
            ))),
            _ => Ok(FreeElement { terms, degree }),
        }
    }

    pub(crate) fn from_svec_unchecked(terms: SVec, degree: i32) -> Self {
        FreeElement { terms, degree }
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn components(&self, parent: &FreeModule) -> Vec<Polynomial> {
        parent.components_of(&self.terms)
    }
}

/// A degree-0 map of graded free modules, stored column by column: column `j`
/// is the image of the `j`-th source generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeMap {
    source: FreeModule,
    target: FreeModule,
    pub(crate) columns: Vec<SVec>,
}

impl FreeMap {
    /// Build from a `target.rank × source.rank` matrix given column by column,
    /// then run [`FreeMap::degree_check`].
    pub fn from_columns(
        source: FreeModule,
        target: FreeModule,
        columns: &[Vec<Polynomial>],
    ) -> Result<Self> {
        if !source.same_ring(&target) {
            return Err(Error::Structural("source and target over different rings".into()));
        }
        if columns.len() != source.rank() {
            return Err(Error::Structural(format!(
                "{} columns for a source of rank {}",
                columns.len(),
                source.rank()
            )));
        }
        let cols = columns
            .iter()
            .map(|c| target.svec_from_components(c))
            .collect::<Result<Vec<_>>>()?;
        FreeMap { source, target, columns: cols }.degree_check()
    }

    /// Build from a row-major `target.rank × source.rank` matrix.
    pub fn from_rows(source: FreeModule, target: FreeModule, rows: &[Vec<Polynomial>]) -> Result<Self> {
        if rows.len() != target.rank() || rows.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::Structural("matrix shape does not match the free modules".into()));
        }
        let columns: Vec<Vec<Polynomial>> =
            (0..source.rank()).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
        Self::from_columns(source, target, &columns)
    }

    pub(crate) fn from_svecs(source: FreeModule, target: FreeModule, columns: Vec<SVec>) -> Self {
        debug_assert_eq!(columns.len(), source.rank());
        let f = FreeMap { source, target, columns };
        debug_assert!(f.clone().degree_check().is_ok(), "constructed an inhomogeneous map");
        f
    }

    pub fn identity(f: &FreeModule) -> Self {
        let columns = (0..f.rank()).map(|i| f.basis_vector(i)).collect();
        FreeMap { source: f.clone(), target: f.clone(), columns }
    }

    pub fn zero(source: FreeModule, target: FreeModule) -> Self {
        let columns = vec![Vec::new(); source.rank()];
        FreeMap { source, target, columns }
    }

    /// Accept the map iff entry `(i, j)` is zero or of degree `a_j - b_i`.
    pub fn degree_check(self) -> Result<Self> {
        for (j, col) in self.columns.iter().enumerate() {
            for t in col {
                let expected = self.source.twists[j] - self.target.twists[t.comp as usize];
                if t.mono.degree() as i32 != expected {
                    return Err(Error::InhomogeneousMap { row: t.comp as usize, col: j });
                }
            }
        }
        Ok(self)
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn entry(&self, row: usize, col: usize) -> Polynomial {
        let terms = self.columns[col]
            .iter()
            .filter(|t| t.comp as usize == row)
            .map(|t| (t.coeff, t.mono.clone()))
            .collect();
        Polynomial::from_sorted_terms(terms)
    }

    pub fn column(&self, j: usize) -> FreeElement {
        FreeElement::from_svec_unchecked(self.columns[j].clone(), self.source.twists[j])
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    /// Image of a source vector.
    pub(crate) fn apply(&self, v: &[Term]) -> SVec {
        let mut acc: SVec = Vec::new();
        for t in v {
            let part = self.target.mul_term(&self.columns[t.comp as usize], t.coeff, &t.mono);
            acc = self.target.axpy(&acc, 1, &part);
        }
        acc
    }

    pub fn apply_element(&self, v: &FreeElement) -> FreeElement {
        FreeElement::from_svec_unchecked(self.apply(&v.terms), v.degree)
    }

    /// `g ∘ f`
    pub fn compose(g: &FreeMap, f: &FreeMap) -> Result<FreeMap> {
        if f.target != g.source {
            return Err(Error::Structural("composition of non-composable maps".into()));
        }
        let columns = f.columns.iter().map(|c| g.apply(c)).collect();
        Ok(FreeMap { source: f.source.clone(), target: g.target.clone(), columns })
    }

    /// Textual matrix form: twist lines, then the row-major matrix with rows
    /// separated by `;`.
    pub fn render(&self) -> String {
        let ring = self.source.ring();
        let rows: Vec<String> = (0..self.target.rank())
            .map(|i| {
                (0..self.source.rank())
                    .map(|j| self.entry(i, j).render(ring))
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        format!(
            "source twists: {}\ntarget twists: {}\n[{}]",
            render_twists(self.source.twists()),
            render_twists(self.target.twists()),
            rows.join("; ")
        )
    }
}

pub(crate) fn render_twists(t: &[i32]) -> String {
    format!("[{}]", t.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<Ring> {
        Ring::standard(2)
    }

    #[test]
    fn composition_of_scalars() {
        let r = ring();
        let s0 = FreeModule::new(r.clone(), vec![0]);
        let s1 = FreeModule::new(r.clone(), vec![1]);
        let s2 = FreeModule::new(r.clone(), vec![2]);
        let f = FreeMap::from_rows(s2.clone(), s1.clone(), &[vec![r.poly("x2")]]).unwrap();
        let g = FreeMap::from_rows(s1.clone(), s0.clone(), &[vec![r.poly("x1")]]).unwrap();
        let gf = FreeMap::compose(&g, &f).unwrap();
        assert_eq!(gf.entry(0, 0), r.poly("x1*x2"));
        let id = FreeMap::identity(&s1);
        assert_eq!(FreeMap::compose(&g, &id).unwrap(), g);
        assert!(FreeMap::compose(&f, &g).is_err());
    }

    #[test]
    fn koszul_differentials_compose_to_zero() {
        let r = ring();
        let k2 = FreeModule::new(r.clone(), vec![2]);
        let k1 = FreeModule::new(r.clone(), vec![1, 1]);
        let k0 = FreeModule::new(r.clone(), vec![0]);
        let d1 = FreeMap::from_rows(k1.clone(), k0, &[vec![r.poly("x1"), r.poly("x2")]]).unwrap();
        let d2 = FreeMap::from_rows(k2, k1, &[vec![r.poly("-x2")], vec![r.poly("x1")]]).unwrap();
        assert!(FreeMap::compose(&d1, &d2).unwrap().is_zero());
    }

    #[test]
    fn degree_check_cases() {
        let r = ring();
        let s = FreeModule::new(r.clone(), vec![0]);
        let s1 = FreeModule::new(r.clone(), vec![1]);
        assert!(FreeMap::from_rows(s1.clone(), s.clone(), &[vec![r.poly("x1")]]).is_ok());
        assert_eq!(
            FreeMap::from_rows(s.clone(), s.clone(), &[vec![r.poly("x1")]]).unwrap_err(),
            Error::InhomogeneousMap { row: 0, col: 0 }
        );
        let t = FreeModule::new(r.clone(), vec![5, -3]);
        assert!(FreeMap::from_rows(t.clone(), s1, &[vec![Polynomial::zero(), Polynomial::zero()]]).is_ok());
    }

    #[test]
    fn positions_rank_by_twist() {
        let r = ring();
        let f = FreeModule::new(r.clone(), vec![0, 2, 2, 1]);
        let v = f.normalize(vec![
            Term { comp: 0, mono: Monomial::from_exponents(&[1, 0]), coeff: 1 },
            Term { comp: 1, mono: Monomial::one(2), coeff: 1 },
            Term { comp: 2, mono: Monomial::one(2), coeff: 1 },
            Term { comp: 3, mono: Monomial::one(2), coeff: 1 },
        ]);
        let order: Vec<u32> = v.iter().map(|t| t.comp).collect();
        assert_eq!(order, vec![1, 2, 3, 0]);
    }

    #[test]
    fn render_matrix() {
        let r = ring();
        let k1 = FreeModule::new(r.clone(), vec![1, 1]);
        let k0 = FreeModule::new(r.clone(), vec![0]);
        let d1 = FreeMap::from_rows(k1, k0, &[vec![r.poly("x1"), r.poly("x2")]]).unwrap();
        assert_eq!(d1.render(), "source twists: [1,1]\ntarget twists: [0]\n[x1, x2]");
    }
}
