//! Artinian modules through their Matlis duals, and the four maps between
//! finitely generated and artinian modules.
//!
//! An artinian module `X` is held as a finitely generated `N` with `X = D(N)`.
//! Local cohomology enters through graded local duality:
//! `D(H^i_m(M)) = Ext^{n-i}_S(M, S(-n))`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{koszul_complex, Variant};
use crate::error::{Error, Result};
use crate::free::{FreeMap, SVec};
use crate::invariants::{depth, ext_module, invariants, krull_dim};
use crate::module::{kernel, FPModule, ModuleMap};
use crate::poly::{Polynomial, Ring};

/// The artinian module `D(dual)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinianRep {
    dual: FPModule,
}

impl ArtinianRep {
    pub fn new(dual: FPModule) -> Self {
        ArtinianRep { dual }
    }

    /// The finitely generated module `N` with `X = D(N)`.
    pub fn dual(&self) -> &FPModule {
        &self.dual
    }

    pub fn is_zero(&self) -> bool {
        self.dual.is_zero()
    }
}

fn nvars(m: &FPModule) -> i64 {
    m.ring().nvars() as i64
}

/// `M ↦ D(M)`.
pub fn artinian_dual_of(m: &FPModule) -> ArtinianRep {
    ArtinianRep::new(m.clone())
}

/// `M ↦ H^{dim M}_m(M)`, held through `Ext^{n - dim M}(M, S(-n))`.
pub fn top_local_cohomology(m: &FPModule) -> Result<ArtinianRep> {
    if m.is_zero() {
        return Err(Error::ZeroModule("top local cohomology"));
    }
    let n = nvars(m);
    Ok(ArtinianRep::new(ext_module(n - krull_dim(m) as i64, m, -(n as i32))))
}

/// `X ↦ D(X)`.
pub fn noetherian_dual_of(x: &ArtinianRep) -> FPModule {
    x.dual.clone()
}

/// `X ↦ H_{N.dim X}(X)`, the top local homology, computed as
/// `Ext^{n - d}(D(X), S(-n))` with `d = N.dim X`.
pub fn top_local_homology(x: &ArtinianRep) -> Result<FPModule> {
    if x.is_zero() {
        return Err(Error::ZeroModule("top local homology"));
    }
    let n = nvars(&x.dual);
    Ok(ext_module(n - noetherian_dim(x) as i64, &x.dual, -(n as i32)))
}

/// Noetherian dimension: `dim D(X)`, and -1 for zero.
pub fn noetherian_dim(x: &ArtinianRep) -> i32 {
    krull_dim(&x.dual)
}

/// Length of a maximal coregular sequence, `depth D(X)`.
pub fn width(x: &ArtinianRep) -> Result<usize> {
    if x.is_zero() {
        return Err(Error::ZeroModule("width"));
    }
    depth(&x.dual)
}

/// Co-Cohen-Macaulay: width equals Noetherian dimension.
pub fn is_co_cm(x: &ArtinianRep) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::ZeroModule("co-Cohen-Macaulay test"));
    }
    let inv = invariants(&x.dual);
    Ok(inv.depth.map(|d| d as i32) == Some(inv.dim))
}

/// `N / (xs) N`
pub fn quotient_by(n: &FPModule, xs: &[Polynomial]) -> FPModule {
    let f = n.ambient();
    let mut gens: Vec<SVec> = n.relation_svecs().to_vec();
    for x in xs {
        for c in 0..f.rank() {
            gens.push(f.mul_poly(&f.basis_vector(c), x));
        }
    }
    FPModule::present_svecs(f, gens).0
}

/// Is multiplication by `x` injective on `n`?
fn is_nonzerodivisor(x: &Polynomial, n: &FPModule) -> bool {
    let Some(dx) = x.degree() else { return n.is_zero() };
    let src = n.shift(-(dx as i32));
    let f = n.ambient();
    let cols: Vec<SVec> = (0..f.rank()).map(|c| f.mul_poly(&f.basis_vector(c), x)).collect();
    let lift = FreeMap::from_svecs(src.ambient().clone(), f.clone(), cols);
    let mult = ModuleMap::new_unchecked(src, n.clone(), lift);
    kernel(&mult).map(|(k, _)| k.is_zero()).unwrap_or(false)
}

/// Regular sequence on `N` (each element a nonzerodivisor modulo the previous
/// ones, and `N / (xs) N ≠ 0`).
pub fn is_regular_sequence(xs: &[Polynomial], n: &FPModule) -> bool {
    let mut cur = n.clone();
    for x in xs {
        if !is_nonzerodivisor(x, &cur) {
            return false;
        }
        cur = quotient_by(&cur, std::slice::from_ref(x));
    }
    !cur.is_zero()
}

/// `xs` is `X`-coregular iff it is regular on `D(X)`.
pub fn is_coregular(xs: &[Polynomial], x: &ArtinianRep) -> bool {
    is_regular_sequence(xs, &x.dual)
}

/// A system of parameters: `d = dim M` linear forms with `M / (xs) M` of finite length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sop {
    pub elements: Vec<Polynomial>,
    pub target_dim: usize,
}

impl Sop {
    pub fn render(&self, ring: &Ring) -> String {
        let parts: Vec<String> = self.elements.iter().map(|p| p.render(ring)).collect();
        format!("({})", parts.join(", "))
    }
}

/// Random linear forms tried after variables and pairwise sums.
const RANDOM_CANDIDATES: usize = 64;

/// Greedy search: take a candidate whenever it lowers the dimension of the
/// quotient by one. Candidates are the variables, then the sums `x_i + x_j`
/// in lexicographic order, then seeded random linear forms.
pub fn find_sop(m: &FPModule, seed: u64) -> Result<Sop> {
    if m.is_zero() {
        return Err(Error::ZeroModule("system of parameters"));
    }
    let ring = m.ring().clone();
    let n = ring.nvars();
    let d = krull_dim(m).max(0) as usize;
    let mut candidates: Vec<Polynomial> = (0..n).map(|i| ring.var(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            candidates.push(ring.var(i).add(&ring.var(j), &ring).expect("linear form"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = ring.field().characteristic();
    for _ in 0..RANDOM_CANDIDATES {
        let mut acc = Polynomial::zero();
        for i in 0..n {
            let c = rng.gen_range(0..p);
            acc = acc.add(&ring.var(i).scale(c, &ring), &ring).expect("linear form");
        }
        if !acc.is_zero() {
            candidates.push(acc);
        }
    }
    let mut chosen: Vec<Polynomial> = Vec::new();
    let mut quotient = m.clone();
    for c in candidates {
        if chosen.len() == d {
            break;
        }
        let next = quotient_by(&quotient, std::slice::from_ref(&c));
        if krull_dim(&next) == (d - chosen.len() - 1) as i32 {
            chosen.push(c);
            quotient = next;
        }
    }
    if chosen.len() < d || krull_dim(&quotient) > 0 {
        return Err(Error::SearchExhausted(format!(
            "found {} of {d} parameters after {} candidates",
            chosen.len(),
            n + n * (n - 1) / 2 + RANDOM_CANDIDATES
        )));
    }
    Ok(Sop { elements: chosen, target_dim: d })
}

/// The top local homology module with the checks that justify it.
#[derive(Clone, Debug)]
pub struct LocalHomologyTop {
    pub module: FPModule,
    pub trail: Vec<String>,
}

/// `H^{xs}_d(X)` for `d = N.dim X`, realized as `D(H^d_{(xs)}(D(X)))`, which the
/// support argument identifies with `Ext^{n-d}(D(X), S(-n))`. Requires `xs` to be
/// a system of parameters of `D(X)`, i.e. `0 :_X (xs)` of finite length.
pub fn local_homology_top(xs: &[Polynomial], x: &ArtinianRep) -> Result<LocalHomologyTop> {
    let n = nvars(&x.dual);
    let d = noetherian_dim(x);
    let mut trail = vec![format!("ndim={d}")];
    if d < 0 {
        return Err(Error::ZeroModule("top local homology"));
    }
    if xs.len() != d as usize {
        return Err(Error::Hypothesis(format!(
            "{} elements given, a system of parameters needs {d}",
            xs.len()
        )));
    }
    trail.push(format!("elements={}", xs.len()));
    let q = quotient_by(&x.dual, xs);
    let qdim = krull_dim(&q);
    if qdim > 0 {
        return Err(Error::Hypothesis(format!(
            "0 :_X (x) does not have finite length (its dual has dimension {qdim})"
        )));
    }
    trail.push("finite_length(0 :_X (x))=yes".into());
    let module = ext_module(n - d as i64, &x.dual, -(n as i32));
    trail.push(format!("module=Ext^{}(N, S({}))", n - d as i64, -n));
    Ok(LocalHomologyTop { module, trail })
}

/// The finite stage `H_i(K(x_1^t, ..., x_r^t; X))`, held through its dual
/// `H^i(K^•(x_1^t, ..., x_r^t; D(X)))`.
pub fn koszul_homology_artinian(xs: &[Polynomial], t: u32, i: usize, x: &ArtinianRep) -> Result<ArtinianRep> {
    if t == 0 {
        return Err(Error::Hypothesis("the exponent t must be at least 1".into()));
    }
    let ring = x.dual.ring().clone();
    if i > xs.len() {
        return Ok(ArtinianRep::new(FPModule::zero(ring)));
    }
    let powers: Vec<Polynomial> = xs.iter().map(|p| p.pow(t, &ring)).collect();
    let k = koszul_complex(&powers, &x.dual, Variant::Cochain)?;
    Ok(ArtinianRep::new(k.homology(i)?))
}
