//! Finitely presented graded modules `M = F / U` and degree-0 maps between them.
//!
//! A module is stored as its ambient free module `F` together with the reduced
//! Gröbner basis of `U`. Public constructors minimize: generators that the
//! relations express through the others are eliminated, so the ambient twists
//! are the degrees of a minimal generating set.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::free::{render_twists, FreeElement, FreeMap, FreeModule, SVec, Term};
use crate::groebner::{minimal_generators, minimal_subset, syzygy_map, GroebnerBasis};
use crate::ideal::Ideal;
use crate::linalg::Matrix;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::{Polynomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FPModule {
    ambient: FreeModule,
    gb: GroebnerBasis,
}

/// Coordinate changes produced by minimalization: `to_new` sends the old
/// ambient onto the new one, `to_old` includes the new ambient into the old.
/// Both induce mutually inverse isomorphisms on the modules.
#[derive(Clone, Debug)]
pub(crate) struct Reindex {
    pub to_new: FreeMap,
    pub to_old: FreeMap,
}

/// A basis of one graded piece `M_d` by standard monomials `mono * e_comp`.
#[derive(Clone, Debug)]
pub(crate) struct Piece {
    pub degree: i32,
    pub basis: Vec<(u32, Monomial)>,
    index: HashMap<(u32, Monomial), usize>,
}

impl Piece {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, comp: u32, mono: &Monomial) -> Option<usize> {
        self.index.get(&(comp, mono.clone())).copied()
    }
}

pub(crate) fn with_degrees(f: &FreeModule, vs: Vec<SVec>) -> Vec<(SVec, i32)> {
    vs.into_iter()
        .filter(|v| !v.is_empty())
        .map(|v| {
            let d = f.term_degree(&v[0]);
            (v, d)
        })
        .collect()
}

/// Keep the terms with component below `r`, re-sorted for `target`.
fn project(target: &FreeModule, v: &[Term], r: usize) -> SVec {
    target.normalize(v.iter().filter(|t| (t.comp as usize) < r).cloned().collect())
}

/// Move a vector into `target`, renumbering components by `offset`.
fn shifted_comps(target: &FreeModule, v: &[Term], offset: usize) -> SVec {
    target.normalize(
        v.iter()
            .map(|t| Term { comp: t.comp + offset as u32, mono: t.mono.clone(), coeff: t.coeff })
            .collect(),
    )
}

impl FPModule {
    /// `coker(rel)`, canonicalized and minimized.
    pub fn present(ambient: &FreeModule, rel: &FreeMap) -> Result<Self> {
        if rel.target() != ambient {
            return Err(Error::Structural("relations do not target the ambient module".into()));
        }
        let rel = rel.clone().degree_check()?;
        Ok(Self::present_svecs(ambient, rel.columns).0)
    }

    /// `F / <relations>`, canonicalized and minimized.
    pub fn from_relations(ambient: &FreeModule, relations: &[FreeElement]) -> Result<Self> {
        let inputs = crate::groebner::homogeneous_inputs(ambient, relations)?;
        Ok(Self::present_svecs(ambient, inputs.into_iter().map(|(v, _)| v).collect()).0)
    }

    /// The free module itself.
    pub fn free(ambient: FreeModule) -> Self {
        let gb = GroebnerBasis::from_reduced(ambient.clone(), Vec::new());
        FPModule { ambient, gb }
    }

    pub fn zero(ring: Arc<Ring>) -> Self {
        Self::free(FreeModule::zero(ring))
    }

    /// `S / (gens)` generated in degree 0.
    pub fn cyclic(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<Self> {
        let s = FreeModule::new(ring.clone(), vec![0]);
        let rels = gens
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| FreeElement::from_components(&s, std::slice::from_ref(p)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_relations(&s, &rels)
    }

    pub(crate) fn present_svecs(ambient: &FreeModule, gens: Vec<SVec>) -> (Self, Reindex) {
        Self::unminimized(ambient, gens).minimalize_with_maps()
    }

    /// Relations replaced by their reduced Gröbner basis; ambient kept as is.
    pub(crate) fn unminimized(ambient: &FreeModule, gens: Vec<SVec>) -> Self {
        let gb = GroebnerBasis::from_svecs(ambient, gens);
        FPModule { ambient: ambient.clone(), gb }
    }

    pub fn minimalize(&self) -> Self {
        self.minimalize_with_maps().0
    }

    /// Eliminate every generator `e_c` that occurs as a scalar leading term of the
    /// reduced basis. Ranking positions by twist makes such an element read
    /// `e_c + (terms in other components of equal or lower twist)`, and
    /// reducedness keeps `e_c` out of all other elements, so the remaining
    /// elements form a reduced basis of the relations among the kept generators.
    pub(crate) fn minimalize_with_maps(&self) -> (Self, Reindex) {
        let f = &self.ambient;
        let rank = f.rank();
        let mut pruned: Vec<Option<usize>> = vec![None; rank];
        for (k, e) in self.gb.elements.iter().enumerate() {
            if e[0].mono.is_one() {
                pruned[e[0].comp as usize] = Some(k);
            }
        }
        if pruned.iter().all(|p| p.is_none()) {
            let id = FreeMap::identity(f);
            return (self.clone(), Reindex { to_new: id.clone(), to_old: id });
        }
        let kept: Vec<usize> = (0..rank).filter(|&c| pruned[c].is_none()).collect();
        let mut new_index = vec![u32::MAX; rank];
        for (i, &c) in kept.iter().enumerate() {
            new_index[c] = i as u32;
        }
        let g = FreeModule::new(f.ring().clone(), kept.iter().map(|&c| f.twists()[c]).collect());
        let remap = |v: &[Term]| -> SVec {
            g.normalize(
                v.iter()
                    .map(|t| {
                        debug_assert_ne!(new_index[t.comp as usize], u32::MAX);
                        Term { comp: new_index[t.comp as usize], mono: t.mono.clone(), coeff: t.coeff }
                    })
                    .collect(),
            )
        };
        let elements: Vec<SVec> =
            self.gb.elements.iter().filter(|e| !e[0].mono.is_one()).map(|e| remap(e)).collect();
        let fld = f.ring().field();
        let to_new_cols: Vec<SVec> = (0..rank)
            .map(|c| match pruned[c] {
                None => g.basis_vector(new_index[c] as usize),
                Some(k) => remap(&f.scale(&self.gb.elements[k][1..], fld.neg(1))),
            })
            .collect();
        let to_old_cols: Vec<SVec> = kept.iter().map(|&c| f.basis_vector(c)).collect();
        let m = FPModule { ambient: g.clone(), gb: GroebnerBasis::from_reduced(g.clone(), elements) };
        let re = Reindex {
            to_new: FreeMap::from_svecs(f.clone(), g.clone(), to_new_cols),
            to_old: FreeMap::from_svecs(g, f.clone(), to_old_cols),
        };
        (m, re)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.ambient.ring()
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.ambient.rank()
    }

    /// Degrees of the generators.
    pub fn twists(&self) -> &[i32] {
        self.ambient.twists()
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub(crate) fn relation_svecs(&self) -> &[SVec] {
        &self.gb.elements
    }

    /// The stored relations `P: G -> F` (the reduced Gröbner basis as columns).
    pub fn relations(&self) -> FreeMap {
        self.map_of(self.gb.elements.clone())
    }

    /// A minimal generating set of the relations, sorted by degree.
    pub fn minimal_relations(&self) -> FreeMap {
        self.map_of(self.minimal_relation_svecs())
    }

    pub(crate) fn minimal_relation_svecs(&self) -> Vec<SVec> {
        minimal_generators(&self.ambient, self.gb.elements.clone())
    }

    fn map_of(&self, cols: Vec<SVec>) -> FreeMap {
        let src = FreeModule::new(
            self.ring().clone(),
            cols.iter().map(|v| self.ambient.term_degree(&v[0])).collect(),
        );
        FreeMap::from_svecs(src, self.ambient.clone(), cols)
    }

    pub fn is_zero(&self) -> bool {
        (0..self.rank() as u32).all(|c| !self.gb.is_standard(c, &Monomial::one(self.ring().nvars())))
    }

    /// Is the element zero in the module?
    pub fn is_zero_element(&self, v: &FreeElement) -> bool {
        self.gb.contains(v)
    }

    pub fn normal_form(&self, v: &FreeElement) -> FreeElement {
        self.gb.normal_form(v)
    }

    /// The `i`-th generator as an element of the ambient free module.
    pub fn generator(&self, i: usize) -> FreeElement {
        FreeElement::from_svec_unchecked(self.ambient.basis_vector(i), self.twists()[i])
    }

    /// `M(k)`, whose degree-`d` piece is `M_{d+k}`.
    pub fn shift(&self, k: i32) -> Self {
        let amb = self.ambient.shift(k);
        let gb = GroebnerBasis::from_reduced(amb.clone(), self.gb.elements.clone());
        FPModule { ambient: amb, gb }
    }

    pub fn direct_sum(&self, other: &FPModule) -> Result<Self> {
        Ok(self.direct_sum_fixed(other)?.minimalize())
    }

    /// Block presentation on `F_A ⊕ F_B`, without minimizing.
    pub(crate) fn direct_sum_fixed(&self, other: &FPModule) -> Result<Self> {
        if !self.ambient.same_ring(&other.ambient) {
            return Err(Error::Structural("direct sum of modules over different rings".into()));
        }
        let f = self.ambient.direct_sum(&other.ambient);
        let r = self.rank();
        let mut gens: Vec<SVec> = self.gb.elements.iter().map(|v| shifted_comps(&f, v, 0)).collect();
        gens.extend(other.gb.elements.iter().map(|v| shifted_comps(&f, v, r)));
        Ok(Self::unminimized(&f, gens))
    }

    /// Direct sum of the given shifts of one module, as a fixed block presentation:
    /// block `i` is `self(-shifts[i])`.
    pub(crate) fn blocks(&self, shifts: &[i32]) -> Self {
        let r = self.rank();
        let mut twists = Vec::with_capacity(r * shifts.len());
        for s in shifts {
            twists.extend(self.twists().iter().map(|a| a + s));
        }
        let f = FreeModule::new(self.ring().clone(), twists);
        let mut gens = Vec::new();
        for i in 0..shifts.len() {
            gens.extend(self.gb.elements.iter().map(|v| shifted_comps(&f, v, i * r)));
        }
        Self::unminimized(&f, gens)
    }

    /// `dim_k M_d` by row reduction of the degree-`d` slice of the relations.
    pub fn hilbert_function(&self, d: i32) -> usize {
        hilbert_function_of(&self.ambient, &self.gb.elements, d)
    }

    /// `dim_k M_d` by counting standard monomials.
    pub fn hilbert_function_standard(&self, d: i32) -> usize {
        self.piece(d).dim()
    }

    pub(crate) fn piece(&self, d: i32) -> Piece {
        let n = self.ring().nvars();
        let mut basis = Vec::new();
        for (c, &a) in self.twists().iter().enumerate() {
            if d < a {
                continue;
            }
            for m in monomials_of_degree(n, (d - a) as u32) {
                if self.gb.is_standard(c as u32, &m) {
                    basis.push((c as u32, m));
                }
            }
        }
        let index = basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        Piece { degree: d, basis, index }
    }

    /// Coordinates of a homogeneous vector of degree `piece.degree` in the standard basis.
    pub(crate) fn coordinates(&self, piece: &Piece, v: &[Term]) -> Vec<u32> {
        debug_assert!(v.is_empty() || self.ambient.term_degree(&v[0]) == piece.degree);
        let mut out = vec![0u32; piece.dim()];
        for t in self.gb.reduce(v) {
            let i = piece.position(t.comp, &t.mono).expect("normal form outside the graded piece");
            out[i] = t.coeff;
        }
        out
    }

    /// The vector with the given coordinates.
    pub(crate) fn from_coordinates(&self, piece: &Piece, x: &[u32]) -> SVec {
        self.ambient.normalize(
            piece
                .basis
                .iter()
                .zip(x)
                .filter(|(_, &c)| c != 0)
                .map(|((comp, mono), &c)| Term { comp: *comp, mono: mono.clone(), coeff: c })
                .collect(),
        )
    }

    /// Matrix of multiplication by a monomial from `from` to `to` (rows index `to`).
    pub(crate) fn multiplication_matrix(&self, m: &Monomial, from: &Piece, to: &Piece) -> Matrix {
        let mut a = Matrix::zeros(to.dim(), from.dim());
        for (j, (comp, mono)) in from.basis.iter().enumerate() {
            let v = vec![Term { comp: *comp, mono: mono.mul(m), coeff: 1 }];
            for (i, c) in self.coordinates(to, &v).into_iter().enumerate() {
                a.set(i, j, c);
            }
        }
        a
    }

    /// Smallest degree in which the module can be nonzero.
    pub(crate) fn min_degree(&self) -> Option<i32> {
        self.twists().iter().copied().min()
    }

    /// Textual form: generator degrees, then the relations, one vector per `;`.
    pub fn render(&self) -> String {
        let rels: Vec<String> = self.gb.elements.iter().map(|e| self.ambient.render_svec(e)).collect();
        format!("generators: {}\nrelations: [{}]", render_twists(self.twists()), rels.join("; "))
    }
}

/// `dim_k (F / <gens>)_d` by plain linear algebra on monomial coordinates.
pub(crate) fn hilbert_function_of(f: &FreeModule, gens: &[SVec], d: i32) -> usize {
    let n = f.ring().nvars();
    let mut index: HashMap<(u32, Monomial), usize> = HashMap::new();
    for (c, &a) in f.twists().iter().enumerate() {
        if d >= a {
            for m in monomials_of_degree(n, (d - a) as u32) {
                let k = index.len();
                index.insert((c as u32, m), k);
            }
        }
    }
    let cols = index.len();
    if cols == 0 {
        return 0;
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_empty()) {
        let dg = f.term_degree(&g[0]);
        if dg > d {
            continue;
        }
        for m in monomials_of_degree(n, (d - dg) as u32) {
            let mut row = vec![0u32; cols];
            for t in g {
                row[index[&(t.comp, t.mono.mul(&m))]] = t.coeff;
            }
            rows.push(row);
        }
    }
    let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(&rows, cols).rank(f.ring().field()) };
    cols - rank
}

pub fn present(ambient: &FreeModule, rel: &FreeMap) -> Result<FPModule> {
    FPModule::present(ambient, rel)
}

pub fn minimalize(m: &FPModule) -> FPModule {
    m.minimalize()
}

pub fn direct_sum(a: &FPModule, b: &FPModule) -> Result<FPModule> {
    a.direct_sum(b)
}

pub fn hilbert_function(m: &FPModule, d: i32) -> usize {
    m.hilbert_function(d)
}

/// A degree-0 homomorphism, given by a lift between the ambient free modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    source: FPModule,
    target: FPModule,
    lift: FreeMap,
}

impl ModuleMap {
    /// Checks that the lift is between the ambients and carries relations into relations.
    pub fn new(source: FPModule, target: FPModule, lift: FreeMap) -> Result<Self> {
        if lift.source() != source.ambient() || lift.target() != target.ambient() {
            return Err(Error::Structural("lift does not match the module ambients".into()));
        }
        for (k, rel) in source.gb.elements.iter().enumerate() {
            if !target.gb.reduce(&lift.apply(rel)).is_empty() {
                return Err(Error::NotWellDefined(format!(
                    "relation {k} of the source does not map into the target relations"
                )));
            }
        }
        Ok(ModuleMap { source, target, lift })
    }

    pub(crate) fn new_unchecked(source: FPModule, target: FPModule, lift: FreeMap) -> Self {
        ModuleMap { source, target, lift }
    }

    /// Map sending source generator `j` to the target vector `images[j]`.
    pub fn from_images(source: &FPModule, target: &FPModule, images: &[Vec<Polynomial>]) -> Result<Self> {
        let lift = FreeMap::from_columns(source.ambient().clone(), target.ambient().clone(), images)?;
        Self::new(source.clone(), target.clone(), lift)
    }

    pub fn identity(m: &FPModule) -> Self {
        ModuleMap { source: m.clone(), target: m.clone(), lift: FreeMap::identity(m.ambient()) }
    }

    pub fn zero(source: &FPModule, target: &FPModule) -> Self {
        let lift = FreeMap::zero(source.ambient().clone(), target.ambient().clone());
        ModuleMap { source: source.clone(), target: target.clone(), lift }
    }

    pub fn source(&self) -> &FPModule {
        &self.source
    }

    pub fn target(&self) -> &FPModule {
        &self.target
    }

    pub fn lift(&self) -> &FreeMap {
        &self.lift
    }

    /// `g ∘ f`
    pub fn compose(g: &ModuleMap, f: &ModuleMap) -> Result<Self> {
        if f.target != g.source {
            return Err(Error::Structural("composition of non-composable module maps".into()));
        }
        let lift = FreeMap::compose(&g.lift, &f.lift)?;
        Ok(ModuleMap { source: f.source.clone(), target: g.target.clone(), lift })
    }

    pub fn is_zero(&self) -> bool {
        self.lift.columns.iter().all(|c| self.target.gb.reduce(c).is_empty())
    }

    /// Image of an ambient element of the source, in normal form.
    pub fn apply(&self, v: &FreeElement) -> FreeElement {
        self.target.normal_form(&self.lift.apply_element(v))
    }

    /// Do two maps between the same modules agree?
    pub fn agrees_with(&self, other: &ModuleMap) -> bool {
        let t = &self.target;
        let neg = t.ring().field().neg(1);
        self.source == other.source
            && t == &other.target
            && self
                .lift
                .columns
                .iter()
                .zip(&other.lift.columns)
                .all(|(a, b)| t.gb.reduce(&t.ambient.axpy(a, neg, b)).is_empty())
    }

    /// Textual form: the lift's matrix in generator coordinates.
    pub fn render(&self) -> String {
        self.lift.render()
    }
}

/// `(A + B) / B` for vectors of `F`: minimal generators taken from `a`, with the
/// inclusion of the result's ambient into `F` sending generators to their `a` vectors.
pub(crate) fn subquotient(f: &FreeModule, a: Vec<SVec>, b: Vec<SVec>) -> (FPModule, FreeMap) {
    let ring = f.ring().clone();
    let mut inputs = with_degrees(f, b);
    let nb = inputs.len();
    inputs.extend(with_degrees(f, a));
    let (keep, _) = minimal_subset(f, &inputs);
    let fld = f.ring().field();
    let kept: Vec<(SVec, i32)> = keep
        .into_iter()
        .filter(|&i| i >= nb)
        .map(|i| {
            let (v, d) = &inputs[i];
            (f.scale(v, fld.inv(v[0].coeff)), *d)
        })
        .collect();
    let na = kept.len();
    let fa = FreeModule::new(ring, kept.iter().map(|(_, d)| *d).collect());
    let mut syz_inputs = kept.clone();
    syz_inputs.extend(inputs[..nb].iter().cloned());
    let syz = syzygy_map(f, &syz_inputs);
    let rels: Vec<SVec> = syz.columns.iter().map(|c| project(&fa, c, na)).collect();
    let (m, re) = FPModule::present_svecs(&fa, rels);
    let gens = FreeMap::from_svecs(fa, f.clone(), kept.into_iter().map(|(v, _)| v).collect());
    let incl = FreeMap::compose(&gens, &re.to_old).expect("composable");
    (m, incl)
}

/// Vectors `a` of the source ambient generating `{a : lift(a) ∈ V}`,
/// from the syzygies of the stacked matrix `(lift | V)`.
pub(crate) fn preimage_generators(lift: &FreeMap, target_relations: &[SVec]) -> Vec<SVec> {
    let g = lift.target();
    let f = lift.source();
    let r = f.rank();
    let mut inputs: Vec<(SVec, i32)> =
        lift.columns.iter().enumerate().map(|(j, c)| (c.clone(), f.twists()[j])).collect();
    inputs.extend(with_degrees(g, target_relations.to_vec()));
    let syz = syzygy_map(g, &inputs);
    syz.columns.iter().map(|c| project(f, c, r)).filter(|v| !v.is_empty()).collect()
}

/// The kernel together with its inclusion into the source.
pub fn kernel(f: &ModuleMap) -> Result<(FPModule, ModuleMap)> {
    let gens = preimage_generators(&f.lift, &f.target.gb.elements);
    let (k, incl) = subquotient(f.source.ambient(), gens, f.source.gb.elements.clone());
    Ok((k.clone(), ModuleMap::new_unchecked(k, f.source.clone(), incl)))
}

/// The image together with its inclusion into the target.
pub fn image(f: &ModuleMap) -> Result<(FPModule, ModuleMap)> {
    let (m, incl) = subquotient(f.target.ambient(), f.lift.columns.clone(), f.target.gb.elements.clone());
    Ok((m.clone(), ModuleMap::new_unchecked(m, f.target.clone(), incl)))
}

pub fn cokernel(f: &ModuleMap) -> Result<FPModule> {
    Ok(cokernel_with_projection(f)?.0)
}

/// The cokernel together with the projection from the target.
pub fn cokernel_with_projection(f: &ModuleMap) -> Result<(FPModule, ModuleMap)> {
    let mut gens = f.target.gb.elements.clone();
    gens.extend(f.lift.columns.iter().filter(|c| !c.is_empty()).cloned());
    let (m, re) = FPModule::present_svecs(f.target.ambient(), gens);
    Ok((m.clone(), ModuleMap::new_unchecked(f.target.clone(), m, re.to_new)))
}

/// `Hom_S(A, B)` as the kernel of `Hom(F_A, B) -> Hom(G_A, B)` induced by a
/// minimal presentation `G_A -> F_A` of `A`. Generator `(j, i)` of the
/// ambient sends generator `j` of `A` to generator `i` of `B`.
pub fn hom_module(a: &FPModule, b: &FPModule) -> Result<FPModule> {
    Ok(hom_with_coordinates(a, b)?.0)
}

/// Hom together with the inclusion into `Hom(F_A, B)` in block coordinates.
pub(crate) fn hom_with_coordinates(a: &FPModule, b: &FPModule) -> Result<(FPModule, ModuleMap)> {
    if !a.ambient.same_ring(&b.ambient) {
        return Err(Error::Structural("Hom between modules over different rings".into()));
    }
    let rb = b.rank();
    let p = a.minimal_relation_svecs();
    let fa = a.ambient();
    let h0 = b.blocks(&fa.twists().iter().map(|t| -t).collect::<Vec<_>>());
    let h1 = b.blocks(&p.iter().map(|v| -fa.term_degree(&v[0])).collect::<Vec<_>>());
    let mut cols: Vec<Vec<Term>> = vec![Vec::new(); fa.rank() * rb];
    for (k, rel) in p.iter().enumerate() {
        for t in rel {
            for i in 0..rb {
                cols[t.comp as usize * rb + i].push(Term {
                    comp: (k * rb + i) as u32,
                    mono: t.mono.clone(),
                    coeff: t.coeff,
                });
            }
        }
    }
    let cols = cols.into_iter().map(|c| h1.ambient.normalize(c)).collect();
    let lift = FreeMap::from_svecs(h0.ambient.clone(), h1.ambient.clone(), cols);
    let induced = ModuleMap::new_unchecked(h0, h1, lift);
    kernel(&induced)
}

/// `{s ∈ S : s M = 0}`, the kernel of `S -> ⊕_i M(a_i)`, `1 ↦ (e_i)_i`.
pub fn annihilator(m: &FPModule) -> Ideal {
    let ring = m.ring().clone();
    let s = FreeModule::new(ring.clone(), vec![0]);
    let r = m.rank();
    if r == 0 {
        return Ideal::unit(&ring);
    }
    let blocks = m.blocks(&m.twists().iter().map(|a| -a).collect::<Vec<_>>());
    let col: SVec = blocks.ambient.normalize((0..r).map(|i| blocks.ambient.basis_vector(i * r + i).remove(0)).collect());
    let lift = FreeMap::from_svecs(s.clone(), blocks.ambient.clone(), vec![col]);
    let map = ModuleMap::new_unchecked(FPModule::free(s.clone()), blocks, lift);
    let gens = preimage_generators(&map.lift, &map.target.gb.elements);
    Ideal::from_svecs(&ring, gens)
}
