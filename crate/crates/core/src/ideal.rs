//! Homogeneous ideals of `S`, kept as reduced Gröbner bases.

use std::sync::Arc;

use crate::error::Result;
use crate::free::{FreeElement, FreeModule, SVec};
use crate::groebner::{minimal_generators, GroebnerBasis};
use crate::module::{annihilator, FPModule};
use crate::poly::{Polynomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<Ring>,
    gb: GroebnerBasis,
}

fn ring_module(ring: &Arc<Ring>) -> FreeModule {
    FreeModule::new(ring.clone(), vec![0])
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: &[Polynomial]) -> Result<Self> {
        let s = ring_module(ring);
        let elems = gens
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| FreeElement::from_components(&s, std::slice::from_ref(p)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal { ring: ring.clone(), gb: GroebnerBasis::compute(&s, &elems)? })
    }

    pub(crate) fn from_svecs(ring: &Arc<Ring>, gens: Vec<SVec>) -> Self {
        let s = ring_module(ring);
        // vectors from other rank-1 modules carry a twist; re-home them in degree 0
        let gens = gens.into_iter().map(|v| s.normalize(v)).collect();
        Ideal { ring: ring.clone(), gb: GroebnerBasis::from_svecs(&s, gens) }
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Ideal { ring: ring.clone(), gb: GroebnerBasis::from_reduced(ring_module(ring), Vec::new()) }
    }

    pub fn unit(ring: &Arc<Ring>) -> Self {
        Self::new(ring, &[Polynomial::constant(ring, 1)]).expect("unit ideal")
    }

    /// `(x_1, ..., x_n)`
    pub fn maximal(ring: &Arc<Ring>) -> Self {
        Self::new(ring, &(0..ring.nvars()).map(|i| ring.var(i)).collect::<Vec<_>>()).expect("maximal ideal")
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.gb.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb.elements.iter().any(|e| e[0].mono.is_one())
    }

    fn to_polys(&self, vs: &[SVec]) -> Vec<Polynomial> {
        let s = self.gb.parent();
        vs.iter().map(|v| s.components_of(v).remove(0)).collect()
    }

    /// Minimal homogeneous generators, monic, by degree.
    pub fn generators(&self) -> Vec<Polynomial> {
        self.to_polys(&minimal_generators(self.gb.parent(), self.gb.elements.clone()))
    }

    /// The reduced Gröbner basis, sorted by leading monomial (descending).
    pub fn groebner_basis(&self) -> Vec<Polynomial> {
        self.to_polys(&self.gb.elements)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        if p.is_zero() {
            return true;
        }
        match FreeElement::from_components(self.gb.parent(), std::slice::from_ref(p)) {
            Ok(e) => self.gb.contains(&e),
            Err(_) => false,
        }
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.groebner_basis().iter().all(|p| other.contains(p))
    }

    /// `S / I` with its generator in degree 0.
    pub fn quotient_module(&self) -> FPModule {
        FPModule::unminimized(self.gb.parent(), self.gb.elements.clone()).minimalize()
    }

    /// `I ∩ J`, the annihilator of `S/I ⊕ S/J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        Ok(annihilator(&self.quotient_module().direct_sum_fixed(&other.quotient_module())?))
    }

    /// `(g_1, ..., g_k)` with minimal generators.
    pub fn render(&self) -> String {
        let gens: Vec<String> = self.generators().iter().map(|p| p.render(&self.ring)).collect();
        format!("({})", gens.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersection_of_coordinate_planes() {
        let r = Ring::standard(4);
        let a = Ideal::new(&r, &[r.poly("x1"), r.poly("x2")]).unwrap();
        let b = Ideal::new(&r, &[r.poly("x3"), r.poly("x4")]).unwrap();
        let i = a.intersect(&b).unwrap();
        assert_eq!(i.render(), "(x1*x3, x2*x3, x1*x4, x2*x4)");
        assert!(i.is_subset_of(&a) && i.is_subset_of(&b));
        assert!(!i.contains(&r.poly("x1")));
    }

    #[test]
    fn unit_and_zero() {
        let r = Ring::standard(2);
        assert!(Ideal::unit(&r).is_unit());
        assert!(Ideal::zero(&r).is_zero());
        assert!(Ideal::maximal(&r).contains(&r.poly("x1*x2 + x2^2")));
        assert!(Ideal::unit(&r).quotient_module().is_zero());
    }
}
