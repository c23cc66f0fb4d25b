//! Ext into twisted copies of `S`, dimension, depth, Cohen-Macaulayness and
//! Matlis duals of finite-length modules.

use std::collections::HashMap;
use std::fmt;

use crate::complex::{free_resolution, Resolution};
use crate::error::{Error, Result};
use crate::free::{FreeModule, SVec, Term};
use crate::linalg::Matrix;
use crate::module::FPModule;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Ring;

/// Full minimal resolution (never longer than the number of variables).
pub fn resolve(m: &FPModule) -> Resolution {
    free_resolution(m, m.ring().nvars())
}

/// `Ext^i_S(M, S(t))`; zero outside `0 <= i <= n`.
pub fn ext_module(i: i64, m: &FPModule, t: i32) -> FPModule {
    resolve(m).ext(i, t)
}

pub fn krull_dim(m: &FPModule) -> i32 {
    resolve(m).hilbert_numerator().dimension()
}

pub fn depth(m: &FPModule) -> Result<usize> {
    if m.is_zero() {
        return Err(Error::ZeroModule("depth"));
    }
    Ok(m.ring().nvars() - resolve(m).len())
}

/// Depth equals dimension; the zero module counts as Cohen-Macaulay.
pub fn is_cohen_macaulay(m: &FPModule) -> bool {
    invariants(m).is_cm
}

pub fn is_finite_length(m: &FPModule) -> bool {
    krull_dim(m) <= 0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    /// -1 for the zero module.
    pub dim: i32,
    /// `None` stands for the infinite depth of the zero module.
    pub depth: Option<usize>,
    pub is_cm: bool,
    pub is_finite_length: bool,
}

/// All four invariants from a single resolution.
pub fn invariants(m: &FPModule) -> InvariantReport {
    let res = resolve(m);
    let dim = res.hilbert_numerator().dimension();
    let depth = if m.is_zero() { None } else { Some(m.ring().nvars() - res.len()) };
    InvariantReport {
        dim,
        depth,
        is_cm: depth.is_none_or(|d| d as i32 == dim),
        is_finite_length: dim <= 0,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let depth = self.depth.map_or("inf".to_string(), |d| d.to_string());
        write!(
            f,
            "dim={}, depth={}, CM={}, finite_length={}",
            self.dim,
            depth,
            yes_no(self.is_cm),
            yes_no(self.is_finite_length)
        )
    }
}

/// Graded pieces of a finite-length module from `lo` to its top degree.
fn nonzero_range(m: &FPModule) -> Option<(i32, i32)> {
    let lo = m.min_degree()?;
    let top_gen = m.twists().iter().copied().max()?;
    let mut hi = None;
    let mut d = lo;
    loop {
        let dim = m.hilbert_function_standard(d);
        if dim > 0 {
            hi = Some(d);
        } else if d >= top_gen {
            break;
        }
        d += 1;
    }
    hi.map(|h| (lo, h))
}

/// The graded Matlis dual `D(M)_e = Hom_k(M_{-e}, k)` of a finite-length module,
/// with each variable acting by the transpose of its action on `M`.
pub fn matlis_dual_finite(m: &FPModule) -> Result<FPModule> {
    if !is_finite_length(m) {
        return Err(Error::NotFiniteLength);
    }
    let ring = m.ring().clone();
    let Some((lo, hi)) = nonzero_range(m) else { return Ok(FPModule::zero(ring)) };
    let pieces: Vec<_> = (lo..=hi).map(|d| m.piece(d)).collect();
    let n = ring.nvars();
    // dual piece at e = -d has dimension dim M_d; x_k : D_e -> D_{e+1} is the
    // transpose of x_k : M_{-e-1} -> M_{-e}
    let dims: Vec<usize> = (-hi..=-lo).map(|e| pieces[(-e - lo) as usize].dim()).collect();
    let actions: Vec<Vec<Matrix>> = (-hi..-lo)
        .map(|e| {
            let from = &pieces[(-e - 1 - lo) as usize];
            let to = &pieces[(-e - lo) as usize];
            (0..n).map(|k| m.multiplication_matrix(&Monomial::var(n, k), from, to).transpose()).collect()
        })
        .collect();
    Ok(module_from_pieces(&ring, -hi, &dims, &actions))
}

/// Presentation of the finite-length graded module with pieces `V_e` of the
/// given dimensions (starting at degree `lo`) and `actions[e - lo][k]` the
/// matrix of `x_k: V_e -> V_{e+1}`. Generators are chosen degree by degree as
/// complements of what lower degrees generate; relations likewise as
/// complements of what lower-degree relations generate.
pub(crate) fn module_from_pieces(ring: &std::sync::Arc<Ring>, lo: i32, dims: &[usize], actions: &[Vec<Matrix>]) -> FPModule {
    let fld = ring.field();
    let n = ring.nvars();
    let top = lo + dims.len() as i32 - 1;
    let dim_at = |e: i32| if e < lo || e > top { 0 } else { dims[(e - lo) as usize] };
    let act = |k: usize, e: i32, v: &[u32]| -> Vec<u32> { actions[(e - lo) as usize][k].mul_vec(v, fld) };

    // generators
    let mut gens: Vec<(i32, Vec<u32>)> = Vec::new();
    for e in lo..=top {
        let dv = dim_at(e);
        let mut span: Vec<Vec<u32>> = Vec::new();
        if e > lo {
            let prev = dim_at(e - 1);
            for k in 0..n {
                for j in 0..prev {
                    let mut unit = vec![0u32; prev];
                    unit[j] = 1;
                    span.push(act(k, e - 1, &unit));
                }
            }
        }
        for j in 0..dv {
            let mut unit = vec![0u32; dv];
            unit[j] = 1;
            if !in_span(&span, &unit, dv, fld) {
                span.push(unit.clone());
                gens.push((e, unit));
            }
        }
    }
    let f = FreeModule::new(ring.clone(), gens.iter().map(|(e, _)| *e).collect());

    // images of monomial multiples of generators, degree by degree
    let mut images: HashMap<(usize, Monomial), Vec<u32>> = HashMap::new();
    let mut relations: Vec<SVec> = Vec::new();
    let mut prev_kernel: Vec<SVec> = Vec::new();
    for e in lo..=top + 1 {
        let mut coords: Vec<(usize, Monomial)> = Vec::new();
        for (g, (dg, v)) in gens.iter().enumerate() {
            if *dg > e {
                continue;
            }
            for mono in monomials_of_degree(n, (e - dg) as u32) {
                let img = if dim_at(e) == 0 {
                    Vec::new()
                } else if mono.is_one() {
                    v.clone()
                } else {
                    let k = mono.exponents().iter().position(|&x| x > 0).unwrap();
                    let lower = Monomial::var(n, k).quotient_of(&mono);
                    act(k, e - 1, &images[&(g, lower)])
                };
                images.insert((g, mono.clone()), img);
                coords.push((g, mono));
            }
        }
        if coords.is_empty() {
            continue;
        }
        let dv = dim_at(e);
        let mut pi = Matrix::zeros(dv, coords.len());
        for (c, key) in coords.iter().enumerate() {
            for (r, &x) in images[key].iter().enumerate() {
                pi.set(r, c, x);
            }
        }
        let to_svec = |x: &[u32]| -> SVec {
            f.normalize(
                coords
                    .iter()
                    .zip(x)
                    .filter(|(_, &c)| c != 0)
                    .map(|((g, mono), &c)| Term { comp: *g as u32, mono: mono.clone(), coeff: c })
                    .collect(),
            )
        };
        let index: HashMap<&(usize, Monomial), usize> = coords.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let to_coords = |v: &SVec| -> Vec<u32> {
            let mut x = vec![0u32; coords.len()];
            for t in v {
                x[index[&(t.comp as usize, t.mono.clone())]] = t.coeff;
            }
            x
        };
        let mut span: Vec<Vec<u32>> = Vec::new();
        for v in &prev_kernel {
            for k in 0..n {
                let var = Monomial::var(n, k);
                span.push(to_coords(&f.mul_term(v, 1, &var)));
            }
        }
        let kernel: Vec<Vec<u32>> =
            if dv == 0 { (0..coords.len()).map(|j| unit_vec(coords.len(), j)).collect() } else { pi.nullspace(fld) };
        for x in &kernel {
            if !in_span(&span, x, coords.len(), fld) {
                span.push(x.clone());
                relations.push(to_svec(x));
            }
        }
        prev_kernel = kernel.iter().map(|x| to_svec(x)).collect();
    }
    FPModule::present_svecs(&f, relations).0
}

fn unit_vec(len: usize, j: usize) -> Vec<u32> {
    let mut v = vec![0u32; len];
    v[j] = 1;
    v
}

fn in_span(span: &[Vec<u32>], v: &[u32], len: usize, fld: &crate::field::PrimeField) -> bool {
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    if span.is_empty() {
        return false;
    }
    let a = Matrix::from_rows(span, len);
    let mut rows = span.to_vec();
    rows.push(v.to_vec());
    Matrix::from_rows(&rows, len).rank(fld) == a.rank(fld)
}
