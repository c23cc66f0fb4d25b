//! Degree-0 homomorphisms by linear algebra and a certified isomorphism test.

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::free::{FreeMap, SVec, Term};
use crate::linalg::Matrix;
use crate::module::{annihilator, FPModule, ModuleMap, Piece};

/// A basis of `Hom(A, B)_0`; each map is given by the images of the generators of `A`.
#[derive(Clone, Debug)]
pub struct DegreeZeroHoms {
    source: FPModule,
    target: FPModule,
    pieces: Vec<Piece>,
    basis: Vec<Vec<u32>>,
}

impl DegreeZeroHoms {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The map with coefficient vector `coeffs` in the basis.
    pub fn combination(&self, coeffs: &[u32]) -> ModuleMap {
        let fld = self.target.ring().field();
        let len = self.pieces.iter().map(|p| p.dim()).sum();
        let mut x = vec![0u32; len];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi = fld.add(*xi, fld.mul(*c, *bi));
            }
        }
        self.map_from_coordinates(&x)
    }

    pub fn basis_map(&self, k: usize) -> ModuleMap {
        self.map_from_coordinates(&self.basis[k])
    }

    fn map_from_coordinates(&self, x: &[u32]) -> ModuleMap {
        let mut cols = Vec::with_capacity(self.pieces.len());
        let mut off = 0;
        for p in &self.pieces {
            cols.push(self.target.from_coordinates(p, &x[off..off + p.dim()]));
            off += p.dim();
        }
        let lift = FreeMap::from_svecs(self.source.ambient().clone(), self.target.ambient().clone(), cols);
        ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), lift)
    }
}

/// Cache of graded pieces of one module.
struct Pieces<'a> {
    m: &'a FPModule,
    cache: HashMap<i32, Piece>,
}

impl<'a> Pieces<'a> {
    fn new(m: &'a FPModule) -> Self {
        Pieces { m, cache: HashMap::new() }
    }

    fn get(&mut self, d: i32) -> &Piece {
        let m = self.m;
        self.cache.entry(d).or_insert_with(|| m.piece(d))
    }
}

/// `Hom(A, B)_0`: images `φ(e_j) ∈ B_{a_j}` subject to `Σ_j p_j φ(e_j) = 0` for
/// every relation `Σ_j p_j e_j` of `A`.
pub fn degree_zero_homs(a: &FPModule, b: &FPModule) -> DegreeZeroHoms {
    let fld = b.ring().field();
    let pieces: Vec<Piece> = a.twists().iter().map(|&d| b.piece(d)).collect();
    let mut offsets = Vec::with_capacity(pieces.len());
    let mut unknowns = 0;
    for p in &pieces {
        offsets.push(unknowns);
        unknowns += p.dim();
    }
    let mut targets = Pieces::new(b);
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for rel in a.relation_svecs() {
        let deg = a.ambient().term_degree(&rel[0]);
        let q = targets.get(deg).clone();
        let mut block = vec![vec![0u32; unknowns]; q.dim()];
        for t in rel {
            let j = t.comp as usize;
            for (u, (comp, mono)) in pieces[j].basis.iter().enumerate() {
                let v = vec![Term { comp: *comp, mono: mono.mul(&t.mono), coeff: t.coeff }];
                for (r, c) in b.coordinates(&q, &v).into_iter().enumerate() {
                    if c != 0 {
                        let cell = &mut block[r][offsets[j] + u];
                        *cell = fld.add(*cell, c);
                    }
                }
            }
        }
        rows.extend(block);
    }
    let basis = if unknowns == 0 {
        Vec::new()
    } else if rows.is_empty() {
        (0..unknowns)
            .map(|k| {
                let mut v = vec![0u32; unknowns];
                v[k] = 1;
                v
            })
            .collect()
    } else {
        Matrix::from_rows(&rows, unknowns).nullspace(fld)
    };
    DegreeZeroHoms { source: a.clone(), target: b.clone(), pieces, basis }
}

#[derive(Clone, Debug)]
pub enum IsoAnswer {
    /// Mutually inverse maps, both compositions verified.
    Yes { forward: Box<ModuleMap>, backward: Box<ModuleMap> },
    /// A certified obstruction.
    No(String),
    Unknown,
}

impl IsoAnswer {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoAnswer::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, IsoAnswer::No(_))
    }
}

impl fmt::Display for IsoAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoAnswer::Yes { .. } => write!(f, "yes"),
            IsoAnswer::No(_) => write!(f, "no"),
            IsoAnswer::Unknown => write!(f, "unknown"),
        }
    }
}

fn sorted(mut v: Vec<i32>) -> Vec<i32> {
    v.sort_unstable();
    v
}

/// A reason the modules cannot be isomorphic, if a cheap one exists.
fn obstruction(a: &FPModule, b: &FPModule) -> Option<String> {
    if a.ring() != b.ring() {
        return Some("modules over different rings".into());
    }
    if sorted(a.twists().to_vec()) != sorted(b.twists().to_vec()) {
        return Some("minimal generator degrees differ".into());
    }
    let rel_degrees = |m: &FPModule| sorted(m.minimal_relations().source().twists().to_vec());
    let (ra, rb) = (rel_degrees(a), rel_degrees(b));
    if ra != rb {
        return Some("minimal relation degrees differ".into());
    }
    let lo = a.twists().iter().copied().min().unwrap_or(0);
    let hi = a.twists().iter().chain(&ra).copied().max().unwrap_or(0) + 3;
    for d in lo..=hi {
        if a.hilbert_function_standard(d) != b.hilbert_function_standard(d) {
            return Some(format!("Hilbert functions differ in degree {d}"));
        }
    }
    if annihilator(a) != annihilator(b) {
        return Some("annihilators differ".into());
    }
    None
}

/// Coordinates of `ψ(v)` for every basis map `ψ` of `homs`, as columns.
fn images_under_basis(homs: &[ModuleMap], v: &SVec, target: &FPModule, piece: &Piece) -> Vec<Vec<u32>> {
    homs.iter().map(|h| target.coordinates(piece, &h.lift().apply(v))).collect()
}

/// Look for `ψ` in the span of `backs` with `ψ ∘ φ = id`.
fn solve_left_inverse(phi: &ModuleMap, backs: &[ModuleMap]) -> Option<ModuleMap> {
    let a = phi.source();
    let fld = a.ring().field();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    let mut rhs: Vec<u32> = Vec::new();
    for j in 0..a.rank() {
        let piece = a.piece(a.twists()[j]);
        let img = &phi.lift().columns[j];
        let cols = images_under_basis(backs, img, a, &piece);
        let unit = a.coordinates(&piece, &a.ambient().basis_vector(j));
        for r in 0..piece.dim() {
            rows.push(cols.iter().map(|c| c[r]).collect());
            rhs.push(unit[r]);
        }
    }
    let y = Matrix::from_rows(&rows, backs.len()).solve(&rhs, fld)?;
    let cols: Vec<SVec> = (0..phi.target().rank())
        .map(|c| {
            let mut acc: SVec = Vec::new();
            for (coef, psi) in y.iter().zip(backs) {
                acc = a.ambient().axpy(&acc, *coef, &psi.lift().columns[c]);
            }
            acc
        })
        .collect();
    let lift = FreeMap::from_svecs(phi.target().ambient().clone(), a.ambient().clone(), cols);
    Some(ModuleMap::new_unchecked(phi.target().clone(), a.clone(), lift))
}

/// Certified isomorphism test. "no" rests on an obstruction (generator or
/// relation degrees, Hilbert function, annihilator, or no degree-0 maps at
/// all); "yes" on a seeded random degree-0 map with a verified two-sided inverse.
pub fn is_isomorphic(a: &FPModule, b: &FPModule, seed: u64) -> IsoAnswer {
    if let Some(why) = obstruction(a, b) {
        return IsoAnswer::No(why);
    }
    if a.is_zero() {
        return IsoAnswer::Yes {
            forward: Box::new(ModuleMap::zero(a, b)),
            backward: Box::new(ModuleMap::zero(b, a)),
        };
    }
    let forth = degree_zero_homs(a, b);
    if forth.dim() == 0 {
        return IsoAnswer::No("no nonzero degree-0 map".into());
    }
    let back = degree_zero_homs(b, a);
    if back.dim() == 0 {
        return IsoAnswer::No("no nonzero degree-0 map back".into());
    }
    let backs: Vec<ModuleMap> = (0..back.dim()).map(|k| back.basis_map(k)).collect();
    let p = a.ring().field().characteristic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..4 {
        let coeffs: Vec<u32> = (0..forth.dim()).map(|_| rng.gen_range(0..p)).collect();
        let phi = forth.combination(&coeffs);
        let Some(psi) = solve_left_inverse(&phi, &backs) else { continue };
        let id_a = ModuleMap::compose(&psi, &phi).expect("composable");
        let id_b = ModuleMap::compose(&phi, &psi).expect("composable");
        if id_a.agrees_with(&ModuleMap::identity(a)) && id_b.agrees_with(&ModuleMap::identity(b)) {
            return IsoAnswer::Yes { forward: Box::new(phi), backward: Box::new(psi) };
        }
    }
    IsoAnswer::Unknown
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::FreeModule;
    use crate::poly::Ring;
    use std::sync::Arc;

    fn cyc(r: &Arc<Ring>, gens: &[&str]) -> FPModule {
        FPModule::cyclic(r, &gens.iter().map(|g| r.poly(g)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn obstructions() {
        let r = Ring::standard(4);
        let a = cyc(&r, &["x1", "x2"]);
        let b = cyc(&r, &["x1", "x3"]);
        assert!(is_isomorphic(&a, &b, 0).is_no());
        assert!(is_isomorphic(&a, &a.shift(1), 0).is_no());
    }

    #[test]
    fn change_of_basis_is_detected() {
        let r = Ring::standard(4);
        let p = cyc(&r, &["x1", "x2"]);
        let q = cyc(&r, &["x3", "x4"]);
        let b = p.direct_sum(&q).unwrap();
        // S^2 / ((x1,x2) e1 + (x3,x4) e2) in the basis e1 + e2, e2
        let f = FreeModule::new(r.clone(), vec![0, 0]);
        let rels: Vec<_> = [["x1", "-x1"], ["x2", "-x2"], ["0", "x3"], ["0", "x4"]]
            .iter()
            .map(|row| crate::free::FreeElement::from_components(&f, &row.map(|p| r.poly(p))).unwrap())
            .collect();
        let b2 = FPModule::from_relations(&f, &rels).unwrap();
        assert_ne!(b, b2);
        let ans = is_isomorphic(&b, &b2, 7);
        assert!(ans.is_yes(), "{ans:?}");
        assert!(is_isomorphic(&b2, &b, 7).is_yes());
    }

    #[test]
    fn hom_dimensions() {
        let r = Ring::standard(4);
        let k = cyc(&r, &["x1", "x2", "x3", "x4"]);
        let s = FPModule::free(FreeModule::new(r.clone(), vec![0]));
        assert_eq!(degree_zero_homs(&k, &s).dim(), 0);
        assert_eq!(degree_zero_homs(&s, &k).dim(), 1);
        let b = cyc(&r, &["x1", "x2"]).direct_sum(&cyc(&r, &["x3", "x4"])).unwrap();
        assert_eq!(degree_zero_homs(&b, &b).dim(), 2);
    }
}
