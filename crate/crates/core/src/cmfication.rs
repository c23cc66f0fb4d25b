//! Cohen-Macaulayfications: the candidate `G2(F2(M))`, verification of a
//! proposed overmodule, and the checks built on them.

use std::fmt;
use std::sync::Arc;

use crate::duality::{noetherian_dual_of, top_local_cohomology, top_local_homology};
use crate::error::{Error, Result};
use crate::free::FreeModule;
use crate::ideal::Ideal;
use crate::invariants::{ext_module, is_cohen_macaulay, krull_dim};
use crate::iso::{is_isomorphic, IsoAnswer};
use crate::module::{annihilator, cokernel, hom_module, kernel, FPModule, ModuleMap};
use crate::poly::{Polynomial, Ring};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `G2(F2(M)) = Ext^{n-d}(Ext^{n-d}(M, S(-n)), S(-n))` with `d = dim M`.
pub fn cmfication_candidate(m: &FPModule) -> Result<FPModule> {
    let top = top_local_cohomology(m)?;
    top_local_homology(&top)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    Injective,
    CohenMacaulay,
    SameDimension,
    QuotientVanishing,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Injective => "injective",
            Condition::CohenMacaulay => "cohen_macaulay",
            Condition::SameDimension => "same_dimension",
            Condition::QuotientVanishing => "quotient_vanishing",
        })
    }
}

/// The four conditions on `ι: M → M~`. `condition_iii` is the vanishing of
/// `H^{d-1}_m` and `H^d_m` of the cokernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmficationReport {
    pub injective: bool,
    pub condition_i: bool,
    pub condition_ii: bool,
    pub condition_iii: bool,
}

impl CmficationReport {
    /// First failing condition, checked in display order.
    pub fn first_failure(&self) -> Option<Condition> {
        [
            (self.injective, Condition::Injective),
            (self.condition_i, Condition::CohenMacaulay),
            (self.condition_ii, Condition::SameDimension),
            (self.condition_iii, Condition::QuotientVanishing),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, c)| c)
    }

    pub fn passes(&self) -> bool {
        self.first_failure().is_none()
    }
}

impl fmt::Display for CmficationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "injective={}", yes_no(self.injective))?;
        writeln!(f, "cohen_macaulay={}", yes_no(self.condition_i))?;
        writeln!(f, "same_dimension={}", yes_no(self.condition_ii))?;
        writeln!(f, "quotient_vanishing={}", yes_no(self.condition_iii))?;
        match self.first_failure() {
            None => write!(f, "verdict=pass"),
            Some(c) => write!(f, "verdict=fail({c})"),
        }
    }
}

pub fn verify_cmfication(m: &FPModule, mt: &FPModule, iota: &ModuleMap) -> Result<CmficationReport> {
    if iota.source() != m || iota.target() != mt {
        return Err(Error::Structural("map does not run from the module to the overmodule".into()));
    }
    let n = m.ring().nvars() as i64;
    let d = krull_dim(m);
    let injective = kernel(iota)?.0.is_zero();
    let condition_i = !mt.is_zero() && is_cohen_macaulay(mt);
    let condition_ii = krull_dim(mt) == d;
    let q = cokernel(iota)?;
    let e = n - d as i64;
    let t = -(n as i32);
    let condition_iii = ext_module(e, &q, t).is_zero() && ext_module(e + 1, &q, t).is_zero();
    Ok(CmficationReport { injective, condition_i, condition_ii, condition_iii })
}

/// Outcome of comparing a verified overmodule with the candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Uniqueness {
    Confirmed,
    Refuted(String),
    Inconclusive,
}

impl fmt::Display for Uniqueness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Uniqueness::Confirmed => write!(f, "true"),
            Uniqueness::Refuted(why) => write!(f, "false ({why})"),
            Uniqueness::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// A verified Cohen-Macaulayfication must be isomorphic to the candidate.
pub fn check_uniqueness(m: &FPModule, mt: &FPModule, iota: &ModuleMap, seed: u64) -> Result<Uniqueness> {
    let report = verify_cmfication(m, mt, iota)?;
    if let Some(c) = report.first_failure() {
        return Err(Error::Hypothesis(format!("not a Cohen-Macaulayfication: {c} fails")));
    }
    let candidate = cmfication_candidate(m)?;
    Ok(match is_isomorphic(mt, &candidate, seed) {
        IsoAnswer::Yes { .. } => Uniqueness::Confirmed,
        IsoAnswer::No(why) => Uniqueness::Refuted(why),
        IsoAnswer::Unknown => Uniqueness::Inconclusive,
    })
}

/// Vanishing pattern `H^i_m(A) = 0` for `i ∉ {1, d}` of a cyclic module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GotoPattern {
    pub dim: usize,
    /// Indices `i` with `H^i_m(A) ≠ 0`.
    pub nonvanishing: Vec<usize>,
}

impl GotoPattern {
    pub fn holds(&self) -> bool {
        self.nonvanishing.iter().all(|&i| i == 1 || i == self.dim)
    }
}

impl fmt::Display for GotoPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.nonvanishing.iter().map(|i| i.to_string()).collect();
        writeln!(f, "dim={}", self.dim)?;
        writeln!(f, "nonvanishing=[{}]", idx.join(","))?;
        writeln!(f, "pattern={}", yes_no(self.holds()))?;
        write!(f, "buchsbaum=not checked")
    }
}

pub fn goto_vanishing_pattern(a: &FPModule) -> Result<GotoPattern> {
    if a.rank() != 1 {
        return Err(Error::NotCyclic(a.rank()));
    }
    let d = krull_dim(a);
    if d < 1 {
        return Err(Error::Hypothesis(format!("dimension at least 1 required, got {d}")));
    }
    let n = a.ring().nvars() as i64;
    let nonvanishing = (0..=d as usize)
        .filter(|&i| !ext_module(n - i as i64, a, -(n as i32)).is_zero())
        .collect();
    Ok(GotoPattern { dim: d as usize, nonvanishing })
}

/// Checks that an intermediate overmodule `B ⊇ A` with `m B ⊆ A` is a
/// Cohen-Macaulayfication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GotoReport {
    pub dim: usize,
    pub cokernel_killed_by_m: bool,
    pub conditions: CmficationReport,
}

impl GotoReport {
    pub fn passes(&self) -> bool {
        self.cokernel_killed_by_m && self.conditions.passes()
    }
}

impl fmt::Display for GotoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim={}", self.dim)?;
        writeln!(f, "m_kills_cokernel={}", yes_no(self.cokernel_killed_by_m))?;
        write!(f, "{}", self.conditions)
    }
}

pub fn check_goto_cmfication(a: &FPModule, b: &FPModule, iota: &ModuleMap) -> Result<GotoReport> {
    let d = krull_dim(a);
    if d < 2 {
        return Err(Error::Hypothesis(format!("requires dimension at least 2, got {d}")));
    }
    let q = cokernel(iota)?;
    let killed = q.is_zero() || Ideal::maximal(a.ring()).is_subset_of(&annihilator(&q));
    let conditions = verify_cmfication(a, b, iota)?;
    Ok(GotoReport { dim: d as usize, cokernel_killed_by_m: killed, conditions })
}

/// `Ext^{n-d}(M, S(-n))` next to the Cohen-Macaulay flags of both modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalCheck {
    pub ext_module: FPModule,
    pub ext_is_cm: bool,
    pub module_is_cm: bool,
}

impl fmt::Display for CanonicalCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.ext_module.render())?;
        writeln!(f, "ext_cm={}", yes_no(self.ext_is_cm))?;
        write!(f, "module_cm={}", yes_no(self.module_is_cm))
    }
}

pub fn canonical_module_check(m: &FPModule) -> Result<CanonicalCheck> {
    let top = top_local_cohomology(m)?;
    let ext = noetherian_dual_of(&top);
    Ok(CanonicalCheck {
        ext_is_cm: !ext.is_zero() && is_cohen_macaulay(&ext),
        module_is_cm: is_cohen_macaulay(m),
        ext_module: ext,
    })
}

/// `Hom(M, S/J)` for a Gorenstein `S/J` with `J ⊆ ann M` and `dim S/J = dim M`.
pub fn hom_into_gorenstein(m: &FPModule, j: &Ideal) -> Result<CanonicalCheck> {
    if m.is_zero() {
        return Err(Error::ZeroModule("Hom into a Gorenstein quotient"));
    }
    if !j.is_subset_of(&annihilator(m)) {
        return Err(Error::Hypothesis("J does not annihilate the module".into()));
    }
    let sj = j.quotient_module();
    let d = krull_dim(m);
    if krull_dim(&sj) != d {
        return Err(Error::Hypothesis("dim S/J differs from dim M".into()));
    }
    let n = m.ring().nvars() as i64;
    let omega = ext_module(n - d as i64, &sj, -(n as i32));
    if omega.rank() != 1 || !is_cohen_macaulay(&sj) {
        return Err(Error::Hypothesis("S/J is not Gorenstein".into()));
    }
    let hom = hom_module(m, &sj)?;
    Ok(CanonicalCheck {
        ext_is_cm: !hom.is_zero() && is_cohen_macaulay(&hom),
        module_is_cm: is_cohen_macaulay(m),
        ext_module: hom,
    })
}

/// The union of two planes meeting in a point and its normalization-like overring.
#[derive(Clone, Debug)]
pub struct TwoPlanes {
    pub ideal: Ideal,
    pub ring_module: FPModule,
    pub planes: FPModule,
    pub iota: ModuleMap,
}

/// `R = S/((x1,x2) ∩ (x3,x4))` embedded diagonally in `S/(x1,x2) ⊕ S/(x3,x4)`.
pub fn two_planes_example(ring: &Arc<Ring>) -> Result<TwoPlanes> {
    if ring.nvars() != 4 {
        return Err(Error::Structural(format!("needs 4 variables, ring has {}", ring.nvars())));
    }
    let x: Vec<Polynomial> = (0..4).map(|i| ring.var(i)).collect();
    let p = Ideal::new(ring, &x[..2])?;
    let q = Ideal::new(ring, &x[2..])?;
    let ideal = p.intersect(&q)?;
    let ring_module = ideal.quotient_module();
    let planes = p.quotient_module().direct_sum(&q.quotient_module())?;
    debug_assert_eq!(planes.ambient(), &FreeModule::new(ring.clone(), vec![0, 0]));
    let one = Polynomial::constant(ring, 1);
    let iota = ModuleMap::from_images(&ring_module, &planes, &[vec![one.clone(), one]])?;
    Ok(TwoPlanes { ideal, ring_module, planes, iota })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(r: &Arc<Ring>, gens: &[&str]) -> FPModule {
        FPModule::cyclic(r, &gens.iter().map(|g| r.poly(g)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn two_planes_candidate_and_checks() {
        let r = Ring::standard(4);
        let ex = two_planes_example(&r).unwrap();
        assert_eq!(ex.ideal.render(), "(x1*x3, x2*x3, x1*x4, x2*x4)");
        let cand = cmfication_candidate(&ex.ring_module).unwrap();
        assert!(is_isomorphic(&cand, &ex.planes, 0).is_yes());
        let rep = verify_cmfication(&ex.ring_module, &ex.planes, &ex.iota).unwrap();
        assert!(rep.passes(), "{rep}");
        assert_eq!(check_uniqueness(&ex.ring_module, &ex.planes, &ex.iota, 0).unwrap(), Uniqueness::Confirmed);
        let goto = check_goto_cmfication(&ex.ring_module, &ex.planes, &ex.iota).unwrap();
        assert!(goto.passes(), "{goto}");
    }

    #[test]
    fn map_killing_one_is_not_injective() {
        let r = Ring::standard(4);
        let ex = two_planes_example(&r).unwrap();
        let zero = ModuleMap::zero(&ex.ring_module, &ex.planes);
        let rep = verify_cmfication(&ex.ring_module, &ex.planes, &zero).unwrap();
        assert_eq!(rep.first_failure(), Some(Condition::Injective));
        assert!(rep.to_string().ends_with("verdict=fail(injective)"));
        assert!(check_uniqueness(&ex.ring_module, &ex.planes, &zero, 0).is_err());
    }

    #[test]
    fn identity_on_cm_module_passes() {
        let r = Ring::standard(4);
        let m = cyc(&r, &["x1", "x2"]);
        let rep = verify_cmfication(&m, &m, &ModuleMap::identity(&m)).unwrap();
        assert!(rep.passes());
        assert!(is_isomorphic(&cmfication_candidate(&m).unwrap(), &m, 0).is_yes());
    }

    #[test]
    fn vanishing_patterns() {
        let r = Ring::standard(4);
        let ex = two_planes_example(&r).unwrap();
        let g = goto_vanishing_pattern(&ex.ring_module).unwrap();
        assert_eq!(g.nonvanishing, vec![1, 2]);
        assert!(g.holds());
        let s = FPModule::free(FreeModule::new(r.clone(), vec![0]));
        assert_eq!(goto_vanishing_pattern(&s).unwrap().nonvanishing, vec![4]);
        // a hyperplane and a plane meeting in a line: H^2 is nonzero below the top
        let mixed = cyc(&r, &["x1*x2", "x1*x3"]);
        let gm = goto_vanishing_pattern(&mixed).unwrap();
        assert!(!gm.holds(), "{gm}");
        assert!(matches!(goto_vanishing_pattern(&ex.planes), Err(Error::NotCyclic(2))));
    }

    #[test]
    fn goto_check_rejects_small_dimension() {
        let r = Ring::standard(4);
        let m = cyc(&r, &["x1", "x2", "x3"]);
        assert!(matches!(check_goto_cmfication(&m, &m, &ModuleMap::identity(&m)), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn canonical_module_flags() {
        let r = Ring::standard(4);
        let ex = two_planes_example(&r).unwrap();
        let c = canonical_module_check(&ex.ring_module).unwrap();
        assert!(c.ext_is_cm && !c.module_is_cm);
        let p = cyc(&r, &["x1", "x2"]);
        let cp = canonical_module_check(&p).unwrap();
        assert!(cp.ext_is_cm && cp.module_is_cm);
        assert_eq!(cp.ext_module, p.shift(-2));
        let j = Ideal::new(&r, &[r.poly("x1"), r.poly("x2")]).unwrap();
        let h = hom_into_gorenstein(&p, &j).unwrap();
        assert!(h.ext_is_cm && h.module_is_cm);
        assert!(is_isomorphic(&h.ext_module, &p, 0).is_yes());
    }
}
