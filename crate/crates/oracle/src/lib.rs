//! Slow, independent reference computations used by the test suites.
//!
//! Everything here works on plain data (exponent vectors and coefficients mod
//! `p`) and decides questions by dense linear algebra in a single degree. It
//! only reads presentations out of `lochom`; no algorithm from the library is
//! reused.

use std::cmp::Ordering;
use std::collections::HashMap;

use lochom::{FPModule, FreeMap, Polynomial, DEFAULT_PRIME};

pub const P: u64 = DEFAULT_PRIME as u64;

pub type Exps = Vec<u32>;
/// `(coefficient, exponents)` pairs; zero coefficients never stored.
pub type Poly = Vec<(u64, Exps)>;
/// One polynomial per component.
pub type Vector = Vec<Poly>;

pub fn from_polynomial(p: &Polynomial) -> Poly {
    p.terms().iter().map(|(c, m)| (*c as u64, m.exponents().iter().map(|&e| e as u32).collect())).collect()
}

pub fn columns_of(f: &FreeMap) -> Vec<Vector> {
    (0..f.source().rank()).map(|j| f.column(j).components(f.target()).iter().map(from_polynomial).collect()).collect()
}

/// A graded presentation `⊕ S(-a_i) / <relations>`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub nvars: usize,
    pub twists: Vec<i32>,
    pub relations: Vec<Vector>,
}

impl Presentation {
    pub fn of(m: &FPModule) -> Self {
        Presentation {
            nvars: m.ring().nvars(),
            twists: m.twists().to_vec(),
            relations: columns_of(&m.relations()),
        }
    }

    pub fn hilbert(&self, d: i64) -> usize {
        free_dim(self.nvars, &self.twists, d) - span_dim(self.nvars, &self.twists, &self.relations, d)
    }
}

/// All exponent vectors of total degree `d`.
pub fn monomials(n: usize, d: i64) -> Vec<Exps> {
    fn rec(n: usize, d: u32, prefix: &mut Exps, out: &mut Vec<Exps>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d as u32, &mut Vec::new(), &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    a %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % P;
        }
        a = a * a % P;
        e >>= 1;
    }
    r
}

/// Rank of a matrix over `F_p`, given by rows.
pub fn rank_mod_p(rows: Vec<Vec<u64>>) -> usize {
    let mut echelon = Echelon::default();
    for row in rows {
        let sparse = row.into_iter().enumerate().filter(|(_, c)| c % P != 0).map(|(i, c)| (i, c % P)).collect();
        echelon.insert(sparse);
    }
    echelon.rank()
}

/// Incremental row echelon form over `F_p` with sparse rows sorted by column.
#[derive(Default)]
pub struct Echelon {
    pivots: HashMap<usize, Vec<(usize, u64)>>,
}

impl Echelon {
    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, mut row: Vec<(usize, u64)>) -> bool {
        while let Some(&(lead, c)) = row.first() {
            let Some(piv) = self.pivots.get(&lead) else {
                let inv = pow_mod(c, P - 2);
                for (_, x) in row.iter_mut() {
                    *x = *x * inv % P;
                }
                self.pivots.insert(lead, row);
                return true;
            };
            row = axpy(&row, P - c, piv);
        }
        false
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// `a + c b` on sparse rows.
fn axpy(a: &[(usize, u64)], c: u64, b: &[(usize, u64)]) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(&(ca, xa)), Some(&(cb, _))) if ca < cb => {
                i += 1;
                (ca, xa)
            }
            (Some(&(ca, _)), Some(&(cb, xb))) if cb < ca => {
                j += 1;
                (cb, c * xb % P)
            }
            (Some(&(ca, xa)), Some(&(_, xb))) => {
                i += 1;
                j += 1;
                (ca, (xa + c * xb) % P)
            }
            (Some(&t), None) => {
                i += 1;
                t
            }
            (None, Some(&(cb, xb))) => {
                j += 1;
                (cb, c * xb % P)
            }
            (None, None) => unreachable!(),
        };
        if next.1 != 0 {
            out.push(next);
        }
    }
    out
}

fn add_exps(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn poly_degree(p: &Poly) -> Option<i64> {
    p.first().map(|(_, e)| e.iter().sum::<u32>() as i64)
}

/// Degree of a homogeneous vector in `⊕ S(-a_i)`, `None` for zero.
pub fn vector_degree(twists: &[i32], v: &Vector) -> Option<i64> {
    v.iter().enumerate().find_map(|(c, p)| poly_degree(p).map(|d| d + twists[c] as i64))
}

/// Coordinates of the degree-`d` part of `⊕ S(-a_i)`.
struct Coordinates {
    index: HashMap<(usize, Exps), usize>,
}

impl Coordinates {
    fn new(n: usize, twists: &[i32], d: i64) -> Self {
        let mut index = HashMap::new();
        for (c, &a) in twists.iter().enumerate() {
            for m in monomials(n, d - a as i64) {
                let k = index.len();
                index.insert((c, m), k);
            }
        }
        Coordinates { index }
    }

    fn row(&self, v: &Vector, shift: &[u32]) -> Vec<(usize, u64)> {
        let mut acc: HashMap<usize, u64> = HashMap::new();
        for (c, p) in v.iter().enumerate() {
            for (coef, e) in p {
                let k = self.index[&(c, add_exps(e, shift))];
                let slot = acc.entry(k).or_insert(0);
                *slot = (*slot + coef) % P;
            }
        }
        let mut row: Vec<(usize, u64)> = acc.into_iter().filter(|(_, x)| *x != 0).collect();
        row.sort_unstable();
        row
    }
}

pub fn free_dim(n: usize, twists: &[i32], d: i64) -> usize {
    twists.iter().map(|&a| monomials(n, d - a as i64).len()).sum()
}

/// Dimension of the degree-`d` part of the submodule generated by `gens`.
pub fn span_dim(n: usize, twists: &[i32], gens: &[Vector], d: i64) -> usize {
    let coords = Coordinates::new(n, twists, d);
    let mut echelon = Echelon::default();
    for g in gens {
        let Some(dg) = vector_degree(twists, g) else { continue };
        for m in monomials(n, d - dg) {
            echelon.insert(coords.row(g, &m));
        }
    }
    echelon.rank()
}

/// Rank of multiplication by `u` from `S_d` to `(S/J)_{d + deg u}`; this is
/// also the rank on `(S/I)_d` whenever `u I ⊆ J`.
pub fn multiplication_rank(n: usize, u: &Poly, target_ideal: &[Poly], d: i64) -> usize {
    let du = poly_degree(u).expect("nonzero multiplier");
    let wrap = |p: &Poly| -> Vector { vec![p.clone()] };
    let target: Vec<Vector> = target_ideal.iter().map(wrap).collect();
    let base = span_dim(n, &[0], &target, d + du);
    let mut gens = target;
    for m in monomials(n, d) {
        gens.push(vec![u.iter().map(|(c, e)| (*c, add_exps(e, &m))).collect()]);
    }
    span_dim(n, &[0], &gens, d + du) - base
}

pub fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    if da != db {
        return da.cmp(&db);
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// Leading term for the position-over-term order in which components
/// rank by twist (largest first), then by index.
pub fn leading(twists: &[i32], v: &Vector) -> Option<(usize, Exps)> {
    let mut comps: Vec<usize> = (0..twists.len()).collect();
    comps.sort_by(|&a, &b| twists[b].cmp(&twists[a]).then(a.cmp(&b)));
    comps.into_iter().find(|&c| !v[c].is_empty()).map(|c| {
        let lead = v[c].iter().map(|(_, e)| e).max_by(|a, b| grevlex(a, b)).unwrap();
        (c, lead.clone())
    })
}

/// In degree `d`, a Gröbner basis spans exactly as many dimensions as there are
/// terms divisible by a leading term.
pub fn is_standard_in_degree(n: usize, twists: &[i32], basis: &[Vector], d: i64) -> bool {
    let leads: Vec<(usize, Exps)> = basis.iter().filter_map(|v| leading(twists, v)).collect();
    let mut in_leads = 0;
    for (c, &a) in twists.iter().enumerate() {
        for m in monomials(n, d - a as i64) {
            if leads.iter().any(|(lc, le)| *lc == c && le.iter().zip(&m).all(|(x, y)| x <= y)) {
                in_leads += 1;
            }
        }
    }
    in_leads == span_dim(n, twists, basis, d)
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut acc: HashMap<Exps, u64> = HashMap::new();
    for (ca, ea) in a {
        for (cb, eb) in b {
            let e = acc.entry(add_exps(ea, eb)).or_insert(0);
            *e = (*e + ca * cb) % P;
        }
    }
    acc.into_iter().filter(|(_, c)| *c != 0).map(|(e, c)| (c, e)).collect()
}

pub fn poly_pow(a: &Poly, e: u32) -> Poly {
    let n = a.first().map_or(0, |(_, x)| x.len());
    (0..e).fold(vec![(1, vec![0; n])], |acc, _| poly_mul(&acc, a))
}

/// Rank in degree `f` of the transition from stage `t` to stage `big_t` of the
/// system `(S/(I + (y_1^t, ..., y_r^t)))(t Σ deg y_i)` with maps given by
/// multiplication by `(y_1 ... y_r)^{big_t - t}`. Its colimit is `H^r_{(y)}(S/I)`.
pub fn cech_transition_rank(n: usize, ideal: &[Poly], ys: &[Poly], f: i64, t: u32, big_t: u32) -> usize {
    let shift: i64 = ys.iter().map(|y| poly_degree(y).unwrap()).sum();
    let d = f + t as i64 * shift;
    if d < 0 {
        return 0;
    }
    let mut target: Vec<Poly> = ideal.to_vec();
    target.extend(ys.iter().map(|y| poly_pow(y, big_t)));
    let product = ys.iter().fold(vec![(1, vec![0; n])], |acc, y| poly_mul(&acc, y));
    multiplication_rank(n, &poly_pow(&product, big_t - t), &target, d)
}

/// Is `f ∘ g` the zero map? `f` and `g` are given by columns.
pub fn composes_to_zero(f: &[Vector], g: &[Vector]) -> bool {
    g.iter().all(|col| {
        let mut acc: HashMap<(usize, Exps), u64> = HashMap::new();
        for (j, p) in col.iter().enumerate() {
            for (i, q) in f[j].iter().enumerate() {
                for (c, e) in poly_mul(p, q) {
                    let slot = acc.entry((i, e)).or_insert(0);
                    *slot = (*slot + c) % P;
                }
            }
        }
        acc.values().all(|&c| c == 0)
    })
}

/// `Σ_i (-1)^i Σ_{a ∈ twists_i} dim S_{d-a}`
pub fn alternating_twist_sum(n: usize, twists: &[Vec<i32>], d: i64) -> i64 {
    twists
        .iter()
        .enumerate()
        .map(|(i, t)| if i % 2 == 0 { 1 } else { -1 } * free_dim(n, t, d) as i64)
        .sum()
}

/// Exactness at `F_i` in degree `e` for `F_{i-1} <-d_i- F_i <-d_{i+1}- F_{i+1}`.
pub fn exact_at(n: usize, prev: &[i32], d_i: &[Vector], here: &[i32], d_next: &[Vector], e: i64) -> bool {
    let kernel = free_dim(n, here, e) - span_dim(n, prev, d_i, e);
    kernel == span_dim(n, here, d_next, e)
}


pub mod corpus;
