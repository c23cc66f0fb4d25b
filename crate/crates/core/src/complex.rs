//! Bounded complexes of presented modules, minimal free resolutions and
//! Koszul complexes.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::free::{render_twists, FreeMap, FreeModule, SVec, Term};
use crate::groebner::syzygy_map;
use crate::module::{preimage_generators, subquotient, FPModule, ModuleMap};
use crate::par;
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `d_i: C_i -> C_{i-1}`
    Chain,
    /// `d^i: C^i -> C^{i+1}`
    Cochain,
}

/// Modules `C_0, ..., C_len` with differentials between neighbours.
/// For chain complexes `maps[i]` goes `C_{i+1} -> C_i`; for cochain complexes
/// it goes `C_i -> C_{i+1}`.
#[derive(Clone, Debug)]
pub struct Complex {
    variant: Variant,
    modules: Vec<FPModule>,
    maps: Vec<ModuleMap>,
}

impl Complex {
    /// Checks shapes and that consecutive differentials compose to zero.
    pub fn new(variant: Variant, modules: Vec<FPModule>, maps: Vec<ModuleMap>) -> Result<Self> {
        if modules.is_empty() || maps.len() + 1 != modules.len() {
            return Err(Error::Structural("a complex needs one module more than maps".into()));
        }
        for (i, d) in maps.iter().enumerate() {
            let (src, dst) = match variant {
                Variant::Chain => (&modules[i + 1], &modules[i]),
                Variant::Cochain => (&modules[i], &modules[i + 1]),
            };
            if d.source() != src || d.target() != dst {
                return Err(Error::Structural(format!("differential {i} does not fit its modules")));
            }
        }
        for w in maps.windows(2) {
            let (first, second) = match variant {
                Variant::Chain => (&w[1], &w[0]),
                Variant::Cochain => (&w[0], &w[1]),
            };
            if !ModuleMap::compose(second, first)?.is_zero() {
                return Err(Error::Structural("consecutive differentials do not compose to zero".into()));
            }
        }
        Ok(Complex { variant, modules, maps })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Largest index carrying a module.
    pub fn len(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn module(&self, i: usize) -> &FPModule {
        &self.modules[i]
    }

    pub fn modules(&self) -> &[FPModule] {
        &self.modules
    }

    pub fn maps(&self) -> &[ModuleMap] {
        &self.maps
    }

    /// Map leaving `C_i`, if any.
    fn outgoing(&self, i: usize) -> Option<&ModuleMap> {
        match self.variant {
            Variant::Chain => i.checked_sub(1).map(|k| &self.maps[k]),
            Variant::Cochain => self.maps.get(i),
        }
    }

    /// Map arriving at `C_i`, if any.
    fn incoming(&self, i: usize) -> Option<&ModuleMap> {
        match self.variant {
            Variant::Chain => self.maps.get(i),
            Variant::Cochain => i.checked_sub(1).map(|k| &self.maps[k]),
        }
    }

    /// `ker / im` at index `i`; differentials beyond the ends are zero.
    pub fn homology(&self, i: usize) -> Result<FPModule> {
        let c = self.modules.get(i).ok_or_else(|| Error::Structural(format!("no module at index {i}")))?;
        let f = c.ambient();
        let cycles: Vec<SVec> = match self.outgoing(i) {
            Some(d) => preimage_generators(d.lift(), d.target().relation_svecs()),
            None => (0..f.rank()).map(|k| f.basis_vector(k)).collect(),
        };
        let mut boundaries: Vec<SVec> = c.relation_svecs().to_vec();
        if let Some(d) = self.incoming(i) {
            boundaries.extend(d.lift().columns.iter().cloned());
        }
        Ok(subquotient(f, cycles, boundaries).0)
    }

    /// Homology at every index, computed independently per index.
    pub fn all_homology(&self) -> Result<Vec<FPModule>> {
        par::map_range(0, self.len() as i64, |i| self.homology(i as usize)).into_iter().collect()
    }
}

pub fn complex_homology(c: &Complex, i: usize) -> Result<FPModule> {
    c.homology(i)
}

/// A minimal graded free resolution `0 <- F_0 <- F_1 <- ... <- F_len` of a module,
/// with `F_0` the module's ambient free module.
#[derive(Clone, Debug)]
pub struct Resolution {
    module: FPModule,
    maps: Vec<FreeMap>,
}

impl Resolution {
    pub fn module(&self) -> &FPModule {
        &self.module
    }

    /// Number of nonzero differentials.
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn free_module(&self, i: usize) -> &FreeModule {
        match i {
            0 => self.module.ambient(),
            _ => self.maps[i - 1].source(),
        }
    }

    /// `d_i: F_i -> F_{i-1}` for `1 <= i <= len`.
    pub fn differential(&self, i: usize) -> &FreeMap {
        &self.maps[i - 1]
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable { rows: (0..=self.len()).map(|i| self.free_module(i).twists().to_vec()).collect() }
    }

    /// The resolution as a chain complex of free modules.
    pub fn to_complex(&self) -> Complex {
        let modules: Vec<FPModule> = (0..=self.len()).map(|i| FPModule::free(self.free_module(i).clone())).collect();
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(k, d)| ModuleMap::new_unchecked(modules[k + 1].clone(), modules[k].clone(), d.clone()))
            .collect();
        Complex { variant: Variant::Chain, modules, maps }
    }

    /// `F_0 -> M`, the identity on generators.
    pub fn augmentation(&self) -> ModuleMap {
        let f0 = FPModule::free(self.module.ambient().clone());
        ModuleMap::new_unchecked(f0, self.module.clone(), FreeMap::identity(self.module.ambient()))
    }

    /// `Hom(F_i, S(t))`: the generator of `S(-a)` dualizes to one in degree `-a - t`.
    fn dual_free(&self, i: usize, t: i32) -> FreeModule {
        let f = self.free_module(i);
        FreeModule::new(f.ring().clone(), f.twists().iter().map(|a| -a - t).collect())
    }

    /// `d_i^T: Hom(F_{i-1}, S(t)) -> Hom(F_i, S(t))`
    pub fn dual_differential(&self, i: usize, t: i32) -> FreeMap {
        let src = self.dual_free(i - 1, t);
        let dst = self.dual_free(i, t);
        let mut cols: Vec<Vec<Term>> = vec![Vec::new(); src.rank()];
        for (c, col) in self.maps[i - 1].columns.iter().enumerate() {
            for term in col {
                cols[term.comp as usize].push(Term { comp: c as u32, mono: term.mono.clone(), coeff: term.coeff });
            }
        }
        let cols = cols.into_iter().map(|v| dst.normalize(v)).collect();
        FreeMap::from_svecs(src, dst, cols)
    }

    /// The dual complex `Hom(F_•, S(t))` as a cochain complex.
    pub fn dual(&self, t: i32) -> Complex {
        let modules: Vec<FPModule> = (0..=self.len()).map(|i| FPModule::free(self.dual_free(i, t))).collect();
        let maps = (1..=self.len())
            .map(|i| ModuleMap::new_unchecked(modules[i - 1].clone(), modules[i].clone(), self.dual_differential(i, t)))
            .collect();
        Complex { variant: Variant::Cochain, modules, maps }
    }

    /// `Ext^i_S(M, S(t))`, the `i`-th cohomology of the dual complex.
    pub fn ext(&self, i: i64, t: i32) -> FPModule {
        let ring = self.module.ring().clone();
        if i < 0 || i as usize > self.len() {
            return FPModule::zero(ring);
        }
        let i = i as usize;
        let fi = self.dual_free(i, t);
        let cycles: Vec<SVec> = if i < self.len() {
            preimage_generators(&self.dual_differential(i + 1, t), &[])
        } else {
            (0..fi.rank()).map(|k| fi.basis_vector(k)).collect()
        };
        let boundaries: Vec<SVec> = if i >= 1 { self.dual_differential(i, t).columns } else { Vec::new() };
        subquotient(&fi, cycles, boundaries).0
    }

    /// Numerator of the Hilbert series over `(1 - t)^n`.
    pub fn hilbert_numerator(&self) -> HilbertNumerator {
        let mut coeffs = BTreeMap::new();
        for i in 0..=self.len() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for &a in self.free_module(i).twists() {
                *coeffs.entry(a).or_insert(0) += sign;
            }
        }
        coeffs.retain(|_, c| *c != 0);
        HilbertNumerator { coeffs, nvars: self.module.ring().nvars() }
    }
}

/// Minimal graded free resolution of length `min(pd M, max_length)`.
pub fn free_resolution(m: &FPModule, max_length: usize) -> Resolution {
    let nvars = m.ring().nvars();
    let mut maps: Vec<FreeMap> = Vec::new();
    if max_length == 0 {
        return Resolution { module: m.clone(), maps };
    }
    let d1 = m.minimal_relations();
    if d1.source().rank() == 0 {
        return Resolution { module: m.clone(), maps };
    }
    maps.push(d1);
    while maps.len() < max_length {
        let last = maps.last().unwrap();
        let inputs: Vec<(SVec, i32)> = last
            .columns
            .iter()
            .zip(last.source().twists())
            .map(|(c, &d)| (c.clone(), d))
            .collect();
        let next = syzygy_map(last.target(), &inputs);
        if next.source().rank() == 0 {
            break;
        }
        maps.push(next);
    }
    assert!(maps.len() <= nvars, "resolution longer than the number of variables");
    Resolution { module: m.clone(), maps }
}

/// Projective dimension.
pub fn pd(m: &FPModule) -> Result<usize> {
    if m.is_zero() {
        return Err(Error::ZeroModule("pd"));
    }
    Ok(free_resolution(m, m.ring().nvars()).len())
}

/// Graded Betti numbers: row `i` lists the twists of `F_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub rows: Vec<Vec<i32>>,
}

impl BettiTable {
    pub fn ranks(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }
}

impl fmt::Display for BettiTable {
    /// One line per homological index: `i: rank(sorted twists)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            let mut t = row.clone();
            t.sort_unstable();
            let inner = render_twists(&t);
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{i}: {}({})", row.len(), &inner[1..inner.len() - 1])?;
        }
        Ok(())
    }
}

/// Laurent polynomial `Σ c_a t^a` with `HS_M(t) = numerator / (1 - t)^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertNumerator {
    pub coeffs: BTreeMap<i32, i64>,
    pub nvars: usize,
}

pub(crate) fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

impl HilbertNumerator {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `dim M_d` read off the series.
    pub fn hilbert_function(&self, d: i32) -> i64 {
        let n = self.nvars as i64;
        self.coeffs.iter().map(|(&a, &c)| c * binomial(d as i64 - a as i64 + n - 1, n - 1)).sum()
    }

    /// How often `1 - t` divides the numerator; `None` for the zero series.
    pub fn order_at_one(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let lo = *self.coeffs.keys().next().unwrap();
        let hi = *self.coeffs.keys().next_back().unwrap();
        let mut p: Vec<i64> = (lo..=hi).map(|a| self.coeffs.get(&a).copied().unwrap_or(0)).collect();
        let mut order = 0;
        while p.iter().sum::<i64>() == 0 {
            // p = (1 - t) q with q the prefix sums
            let mut q = Vec::with_capacity(p.len() - 1);
            let mut acc = 0;
            for &c in &p[..p.len() - 1] {
                acc += c;
                q.push(acc);
            }
            p = q;
            order += 1;
        }
        Some(order)
    }

    /// Krull dimension `n - order_at_one`, or -1 for the zero module.
    pub fn dimension(&self) -> i32 {
        match self.order_at_one() {
            None => -1,
            Some(k) => self.nvars as i32 - k as i32,
        }
    }
}

/// `k`-element subsets of `0..r` in lexicographic order.
pub(crate) fn subsets(r: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, r: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..r {
            cur.push(j);
            go(j + 1, r, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, r, k, &mut Vec::new(), &mut out);
    out
}

fn element_degree(x: &Polynomial) -> i32 {
    x.degree().unwrap_or(0) as i32
}

/// Koszul complex of `xs` with coefficients in `m`.
///
/// Chain variant: `K_i = ⊕_{|J|=i} M(-deg x_J)` with
/// `d(e_J) = Σ_t (-1)^(t+1) x_{j_t} e_{J \ j_t}`. Cochain variant: its
/// transpose, `K^i = ⊕_{|J|=i} M(deg x_J)`. Zero entries count as degree 0.
pub fn koszul_complex(xs: &[Polynomial], m: &FPModule, variant: Variant) -> Result<Complex> {
    let r = xs.len();
    let ring = m.ring().clone();
    for x in xs {
        if x.terms().iter().any(|(_, mono)| mono.nvars() != ring.nvars()) {
            return Err(Error::Structural("Koszul element from a different ring".into()));
        }
    }
    let degs: Vec<i32> = xs.iter().map(element_degree).collect();
    let levels: Vec<Vec<Vec<usize>>> = (0..=r).map(|k| subsets(r, k)).collect();
    let modules: Vec<FPModule> = levels
        .iter()
        .map(|subs| {
            let shifts: Vec<i32> = subs
                .iter()
                .map(|j| {
                    let s: i32 = j.iter().map(|&t| degs[t]).sum();
                    match variant {
                        Variant::Chain => s,
                        Variant::Cochain => -s,
                    }
                })
                .collect();
            m.blocks(&shifts)
        })
        .collect();
    let rank = m.rank();
    let fld = ring.field();
    let mut maps = Vec::with_capacity(r);
    for k in 0..r {
        // chain: K_{k+1} -> K_k; cochain: K^k -> K^{k+1}; both built from the
        // incidence between subsets of sizes k+1 and k
        let big = &levels[k + 1];
        let small = &levels[k];
        let small_pos = |s: &[usize]| small.iter().position(|x| x.as_slice() == s).unwrap();
        let (src, dst) = match variant {
            Variant::Chain => (&modules[k + 1], &modules[k]),
            Variant::Cochain => (&modules[k], &modules[k + 1]),
        };
        let mut cols: Vec<Vec<Term>> = vec![Vec::new(); src.rank()];
        for (bi, j) in big.iter().enumerate() {
            for (t, &jt) in j.iter().enumerate() {
                let mut rest = j.clone();
                rest.remove(t);
                let si = small_pos(&rest);
                let sign = if t % 2 == 0 { 1 } else { fld.neg(1) };
                let (from, to) = match variant {
                    Variant::Chain => (bi, si),
                    Variant::Cochain => (si, bi),
                };
                for (c, mono) in xs[jt].terms() {
                    for g in 0..rank {
                        cols[from * rank + g].push(Term {
                            comp: (to * rank + g) as u32,
                            mono: mono.clone(),
                            coeff: fld.mul(*c, sign),
                        });
                    }
                }
            }
        }
        let cols: Vec<SVec> = cols.into_iter().map(|v| dst.ambient().normalize(v)).collect();
        let lift = FreeMap::from_svecs(src.ambient().clone(), dst.ambient().clone(), cols);
        maps.push(ModuleMap::new_unchecked(src.clone(), dst.clone(), lift));
    }
    Complex::new(variant, modules, maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;
    use std::sync::Arc;

    fn cyc(r: &Arc<Ring>, gens: &[&str]) -> FPModule {
        FPModule::cyclic(r, &gens.iter().map(|g| r.poly(g)).collect::<Vec<_>>()).unwrap()
    }

    fn free0(r: &Arc<Ring>) -> FPModule {
        FPModule::free(FreeModule::new(r.clone(), vec![0]))
    }

    #[test]
    fn resolutions_of_basic_modules() {
        let r = Ring::standard(4);
        assert_eq!(free_resolution(&free0(&r), 4).len(), 0);
        let k = cyc(&r, &["x1", "x2", "x3", "x4"]);
        let res = free_resolution(&k, 4);
        assert_eq!(res.betti().ranks(), vec![1, 4, 6, 4, 1]);
        assert_eq!(pd(&k).unwrap(), 4);
        let rr = cyc(&r, &["x1*x3", "x1*x4", "x2*x3", "x2*x4"]);
        let res = free_resolution(&rr, 4);
        assert_eq!(res.betti().ranks(), vec![1, 4, 4, 1]);
        assert_eq!(res.betti().to_string(), "0: 1(0)\n1: 4(2,2,2,2)\n2: 4(3,3,3,3)\n3: 1(4)");
        assert_eq!(free_resolution(&rr, 2).len(), 2);
        assert_eq!(pd(&FPModule::zero(r.clone())), Err(Error::ZeroModule("pd")));
    }

    #[test]
    fn hilbert_numerator_dimensions() {
        let r = Ring::standard(4);
        let rr = cyc(&r, &["x1*x3", "x1*x4", "x2*x3", "x2*x4"]);
        let num = free_resolution(&rr, 4).hilbert_numerator();
        assert_eq!(num.dimension(), 2);
        for d in 0..7 {
            assert_eq!(num.hilbert_function(d), rr.hilbert_function(d) as i64);
        }
        assert_eq!(free_resolution(&free0(&r), 4).hilbert_numerator().dimension(), 4);
        assert_eq!(free_resolution(&FPModule::zero(r.clone()), 4).hilbert_numerator().dimension(), -1);
    }

    #[test]
    fn resolution_is_exact() {
        let r = Ring::standard(4);
        let rr = cyc(&r, &["x1*x3", "x1*x4", "x2*x3", "x2*x4"]);
        let res = free_resolution(&rr, 4);
        let c = res.to_complex();
        for i in 1..=c.len() {
            assert!(c.homology(i).unwrap().is_zero(), "H_{i}");
        }
        assert_eq!(c.homology(0).unwrap(), rr);
    }

    #[test]
    fn koszul_on_dependent_pair() {
        let r = Ring::standard(4);
        let x1 = r.poly("x1");
        let k = koszul_complex(&[x1.clone(), x1], &free0(&r), Variant::Chain).unwrap();
        let h1 = k.homology(1).unwrap();
        assert_eq!(h1, cyc(&r, &["x1"]).shift(-1));
    }

    #[test]
    fn koszul_regular_sequence_is_acyclic() {
        let r = Ring::standard(4);
        let xs: Vec<Polynomial> = ["x1", "x2^2", "x3*x4"].iter().map(|p| r.poly(p)).collect();
        let k = koszul_complex(&xs, &free0(&r), Variant::Chain).unwrap();
        for i in 1..=3 {
            assert!(k.homology(i).unwrap().is_zero());
        }
        assert_eq!(k.homology(0).unwrap(), cyc(&r, &["x1", "x2^2", "x3*x4"]));
        let empty = koszul_complex(&[], &free0(&r), Variant::Chain).unwrap();
        assert_eq!(empty.len(), 0);
    }

    #[test]
    fn ext_of_complete_intersection() {
        let r = Ring::standard(4);
        let p = cyc(&r, &["x1", "x2"]);
        let res = free_resolution(&p, 4);
        assert!(res.ext(0, -4).is_zero());
        assert!(res.ext(1, -4).is_zero());
        assert_eq!(res.ext(2, -4), p.shift(-2));
    }
}
