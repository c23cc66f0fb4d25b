//! Named example modules shared by the test suites.

use std::sync::Arc;

use lochom::{FPModule, FreeElement, FreeModule, Ring};

pub fn ring4() -> Arc<Ring> {
    Ring::standard(4)
}

pub fn cyclic(r: &Arc<Ring>, gens: &[&str]) -> FPModule {
    FPModule::cyclic(r, &gens.iter().map(|g| r.poly(g)).collect::<Vec<_>>()).unwrap()
}

/// Cokernel of a matrix given row by row (each row one relation).
pub fn coker(r: &Arc<Ring>, twists: &[i32], rows: &[&[&str]]) -> FPModule {
    let f = FreeModule::new(r.clone(), twists.to_vec());
    let rels: Vec<FreeElement> = rows
        .iter()
        .map(|row| FreeElement::from_components(&f, &row.iter().map(|p| r.poly(p)).collect::<Vec<_>>()).unwrap())
        .collect();
    FPModule::from_relations(&f, &rels).unwrap()
}

/// Cohen-Macaulay modules: `S`, a plane, a quadric, a line, the residue field.
pub fn cm_suite(r: &Arc<Ring>) -> Vec<(&'static str, FPModule)> {
    vec![
        ("S", cyclic(r, &[])),
        ("S/(x1,x2)", cyclic(r, &["x1", "x2"])),
        ("S/(x1x2-x3x4)", cyclic(r, &["x1*x2 - x3*x4"])),
        ("S/(x1,x2,x3)", cyclic(r, &["x1", "x2", "x3"])),
        ("k", cyclic(r, &["x1", "x2", "x3", "x4"])),
    ]
}

pub fn two_planes(r: &Arc<Ring>) -> FPModule {
    cyclic(r, &["x1*x3", "x1*x4", "x2*x3", "x2*x4"])
}

/// A mix of Cohen-Macaulay and non-Cohen-Macaulay modules in four variables.
pub fn corpus(r: &Arc<Ring>) -> Vec<(&'static str, FPModule)> {
    let mut out = cm_suite(r);
    out.extend([
        ("two planes", two_planes(r)),
        ("planes sum", cyclic(r, &["x1", "x2"]).direct_sum(&cyclic(r, &["x3", "x4"])).unwrap()),
        ("hyperplane and plane", cyclic(r, &["x1*x2", "x1*x3"])),
        ("hyperplane and line", cyclic(r, &["x1*x2", "x1*x3", "x1*x4"])),
        ("twisted cubic", cyclic(r, &["x1*x3 - x2^2", "x2*x4 - x3^2", "x1*x4 - x2*x3"])),
        ("m^2", cyclic(r, &["x1^2", "x1*x2", "x1*x3", "x1*x4", "x2^2", "x2*x3", "x2*x4", "x3^2", "x3*x4", "x4^2"])),
        ("complete intersection", cyclic(r, &["x1^2", "x2^2", "x3^3", "x4"])),
        ("double line", cyclic(r, &["x1^2", "x1*x2", "x2^2"])),
        ("2x2 cokernel", coker(r, &[0, 0], &[&["x1", "x2"], &["x3", "x4"]])),
        ("shifted sum", cyclic(r, &[]).shift(-1).direct_sum(&cyclic(r, &["x1"])).unwrap()),
        ("maximal ideal", coker(r, &[1, 1, 1, 1], &[
            &["x2", "-x1", "0", "0"], &["x3", "0", "-x1", "0"], &["x4", "0", "0", "-x1"],
            &["0", "x3", "-x2", "0"], &["0", "x4", "0", "-x2"], &["0", "0", "x4", "-x3"],
        ])),
    ]);
    out
}
