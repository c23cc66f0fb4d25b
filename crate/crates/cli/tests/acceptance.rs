//! Acceptance criteria, one line each. Runs without the libtest harness so the
//! per-criterion lines always reach the terminal.

use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lochom::cmfication::{canonical_module_check, cmfication_candidate, two_planes_example};
use lochom::duality::{
    artinian_dual_of, is_co_cm, local_homology_top, noetherian_dim, noetherian_dual_of, top_local_cohomology,
    top_local_homology, width,
};
use lochom::{
    ext_module, groebner_basis, is_cohen_macaulay, is_finite_length, is_isomorphic, krull_dim, matlis_dual_finite,
    resolve, FPModule, FreeElement, Monomial, Polynomial, Ring,
};
use lochom_cli::{run_text, Config};
use lochom_oracle::corpus::{cm_suite, corpus, cyclic, ring4};
use lochom_oracle::{
    alternating_twist_sum, cech_transition_rank, columns_of, composes_to_zero, exact_at, from_polynomial,
    is_standard_in_degree, Presentation,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    check(took < limit, format!("took {took:.2?}, limit {limit:?}"))
}

fn planes(r: &std::sync::Arc<Ring>) -> FPModule {
    cyclic(r, &["x1", "x2"]).direct_sum(&cyclic(r, &["x3", "x4"])).unwrap()
}

/// Total length of a finite-length module by the oracle.
fn oracle_length(m: &FPModule, lo: i64, hi: i64) -> usize {
    let p = Presentation::of(m);
    (lo..=hi).map(|d| p.hilbert(d)).sum()
}

fn two_planes_end_to_end() -> Outcome {
    let start = Instant::now();
    let session = "ring 32003 x1 x2 x3 x4\npaper-example\ncmfication R\niso _ B\nverify-cmf R B iota\nthm4-check R B iota\n";
    let t = run_text(session, &Config::default()).map_err(|e| e.to_string())?;
    check(!t.failed, format!("session failed:\n{}", t.text))?;
    check(t.text.contains("> iso _ B\nyes\n"), "candidate not certified isomorphic to B")?;
    let verify = "injective=yes\ncohen_macaulay=yes\nsame_dimension=yes\nquotient_vanishing=yes\nverdict=pass\n";
    check(t.text.contains(&format!("> verify-cmf R B iota\n{verify}")), "verify-cmf did not pass all flags")?;
    check(t.text.contains(&format!("> thm4-check R B iota\ndim=2\nm_kills_cokernel=yes\n{verify}")), "thm4-check failed")?;
    // the same comparison against an independently built S/(x1,x2) ⊕ S/(x3,x4)
    let r = ring4();
    let ex = two_planes_example(&r).map_err(|e| e.to_string())?;
    let cand = cmfication_candidate(&ex.ring_module).map_err(|e| e.to_string())?;
    check(is_isomorphic(&cand, &planes(&r), 1).is_yes(), "candidate vs planes")?;
    within(start, Duration::from_secs(10))?;
    Ok(format!("candidate ≅ S/(x1,x2) ⊕ S/(x3,x4), four flags pass, {:.2?}", start.elapsed()))
}

fn example_invariants() -> Outcome {
    let r = ring4();
    let rr = two_planes_example(&r).map_err(|e| e.to_string())?.ring_module;
    check(krull_dim(&rr) == 2, "dim R != 2")?;
    let ext: Vec<FPModule> = (0..=4).map(|i| ext_module(i, &rr, -4)).collect();
    for i in [0, 1, 4] {
        check(ext[i].is_zero(), format!("Ext^{i} nonzero"))?;
    }
    check(!ext[2].is_zero(), "Ext^2 vanishes")?;
    check(is_finite_length(&ext[3]), "Ext^3 not of finite length")?;
    let len = oracle_length(&ext[3], -10, 10);
    check(len == 1, format!("Ext^3 has length {len}"))?;
    check(is_isomorphic(&ext[3], &cyclic(&r, &["x1", "x2", "x3", "x4"]), 0).is_yes(), "Ext^3 is not k")?;
    Ok("dim 2; Ext^0 = Ext^1 = Ext^4 = 0; length Ext^3 = 1; Ext^2 ≠ 0".into())
}

fn cm_round_trip() -> Outcome {
    let start = Instant::now();
    let r = ring4();
    for (name, m) in cm_suite(&r) {
        let c = cmfication_candidate(&m).map_err(|e| format!("{name}: {e}"))?;
        check(is_isomorphic(&c, &m, 0).is_yes(), format!("{name}: candidate not isomorphic"))?;
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("5 modules, {:.2?}", start.elapsed()))
}

fn co_cm_suite() -> Outcome {
    let r = ring4();
    for (name, m) in cm_suite(&r) {
        let f1 = artinian_dual_of(&m);
        let f2 = top_local_cohomology(&m).map_err(|e| e.to_string())?;
        for (label, x) in [("F1", &f1), ("F2", &f2)] {
            check(is_co_cm(x).map_err(|e| e.to_string())?, format!("{label}({name}) not co-CM"))?;
            check(is_cohen_macaulay(&noetherian_dual_of(x)), format!("G1({label}({name})) not CM"))?;
            let g2 = top_local_homology(x).map_err(|e| e.to_string())?;
            check(is_cohen_macaulay(&g2), format!("G2({label}({name})) not CM"))?;
        }
    }
    Ok("F1, F2 co-CM and G1, G2 CM on 5 modules".into())
}

fn local_homology_against_colimit() -> Outcome {
    let r = ring4();
    let rr = two_planes_example(&r).map_err(|e| e.to_string())?.ring_module;
    let sop = [r.poly("x1 + x3"), r.poly("x2 + x4")];
    let top = local_homology_top(&sop, &artinian_dual_of(&rr)).map_err(|e| e.to_string())?;
    let ideal: Vec<_> = Presentation::of(&rr).relations.into_iter().map(|mut v| v.remove(0)).collect();
    let ys: Vec<_> = sop.iter().map(from_polynomial).collect();
    let mut dims = Vec::new();
    for f in -4..=4i64 {
        // the dual of the top local homology is H^2, whose degree f piece is the
        // degree -f piece of the computed module
        let computed = top.module.hilbert_function(-f as i32);
        let limit = cech_transition_rank(4, &ideal, &ys, f, 3, 4);
        check(computed == limit, format!("degree {f}: {computed} vs colimit {limit}"))?;
        let later = [cech_transition_rank(4, &ideal, &ys, f, 3, 5), cech_transition_rank(4, &ideal, &ys, f, 4, 5)];
        check(later == [limit, limit], format!("degree {f}: not stable at a fifth stage ({later:?})"))?;
        dims.push(limit);
    }
    Ok(format!("H^2 degrees -4..4: {dims:?}"))
}

fn random_artinian(seed: u64) -> FPModule {
    let r = ring4();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gens: Vec<Polynomial> =
        (0..4).map(|i| Polynomial::monomial(1, Monomial::var(4, i).pow(rng.gen_range(1..=2)))).collect();
    for _ in 0..rng.gen_range(0..=3) {
        let exps: Vec<_> = (0..4).map(|_| rng.gen_range(0..=1u32) as _).collect();
        let m = Monomial::from_exponents(&exps);
        if !m.is_one() {
            gens.push(Polynomial::monomial(1, m));
        }
    }
    FPModule::cyclic(&r, &gens).unwrap()
}

fn matlis_involution() -> Outcome {
    for seed in 0..20 {
        let m = random_artinian(seed);
        let d = matlis_dual_finite(&m).map_err(|e| e.to_string())?;
        let (pm, pd) = (Presentation::of(&m), Presentation::of(&d));
        for e in -6..=6 {
            check(pd.hilbert(e) == pm.hilbert(-e), format!("seed {seed}: degree {e} not reversed"))?;
        }
        let dd = matlis_dual_finite(&d).map_err(|e| e.to_string())?;
        check(is_isomorphic(&dd, &m, seed).is_yes(), format!("seed {seed}: double dual not certified"))?;
    }
    Ok("20 seeded monomial quotients".into())
}

fn kernel_properties() -> Outcome {
    let r = ring4();
    let mut checked = 0;
    for (name, m) in corpus(&r) {
        let gb = m.groebner_basis();
        check(gb.satisfies_buchberger_criterion(), format!("{name}: relations"))?;
        let pres = Presentation::of(&m);
        for d in 0..=6 {
            check(is_standard_in_degree(4, m.twists(), &pres.relations, d), format!("{name}: degree {d}"))?;
        }
        let res = resolve(&m);
        let tw: Vec<Vec<i32>> = (0..=res.len()).map(|i| res.free_module(i).twists().to_vec()).collect();
        let cols: Vec<_> = (1..=res.len()).map(|i| columns_of(res.differential(i))).collect();
        for i in 1..=res.len() {
            let d = res.differential(i);
            let elems: Vec<FreeElement> = (0..d.source().rank()).map(|j| d.column(j)).collect();
            let sgb = groebner_basis(d.target(), &elems).map_err(|e| e.to_string())?;
            check(sgb.satisfies_buchberger_criterion(), format!("{name}: image of d{i}"))?;
            if i < res.len() {
                check(composes_to_zero(&cols[i - 1], &cols[i]), format!("{name}: d{i} d{} != 0", i + 1))?;
            }
            let next = if i < res.len() { cols[i].clone() } else { Vec::new() };
            for e in 0..=6 {
                check(exact_at(4, &tw[i - 1], &cols[i - 1], &tw[i], &next, e), format!("{name}: H_{i} in degree {e}"))?;
            }
        }
        let complex = res.to_complex();
        for i in 1..=res.len() {
            check(complex.homology(i).map_err(|e| e.to_string())?.is_zero(), format!("{name}: H_{i} != 0"))?;
        }
        for d in 0..=6 {
            check(alternating_twist_sum(4, &tw, d) == pres.hilbert(d) as i64, format!("{name}: twist sum at {d}"))?;
        }
        for x in [artinian_dual_of(&m), top_local_cohomology(&m).map_err(|e| e.to_string())?] {
            let w = width(&x).map_err(|e| e.to_string())?;
            check(w as i32 <= noetherian_dim(&x), format!("{name}: width {w} > ndim"))?;
        }
        checked += 1;
    }
    Ok(format!("{checked} modules, {} artinian modules", 2 * checked))
}

fn canonical_module_necessity() -> Outcome {
    let r = ring4();
    for (name, m) in corpus(&r) {
        let c = canonical_module_check(&m).map_err(|e| e.to_string())?;
        check(!c.module_is_cm || c.ext_is_cm, format!("{name}: CM module with non-CM Ext"))?;
    }
    let rr = two_planes_example(&r).map_err(|e| e.to_string())?.ring_module;
    let c = canonical_module_check(&rr).map_err(|e| e.to_string())?;
    check(c.ext_is_cm && !c.module_is_cm, "two planes: expected Ext CM and module not CM")?;
    Ok("implication holds on the corpus; two planes: ext CM, module not CM".into())
}

fn golden_determinism() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/sessions");
    let mut files: Vec<_> = fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "lhcm"))
        .collect();
    files.sort();
    check(!files.is_empty(), "no sessions")?;
    for file in &files {
        let text = fs::read_to_string(file).map_err(|e| e.to_string())?;
        let expected = fs::read_to_string(file.with_extension("out")).map_err(|e| e.to_string())?;
        let cfg = Config::default();
        let first = run_text(&text, &cfg).map_err(|e| e.to_string())?;
        let second = run_text(&text, &cfg).map_err(|e| e.to_string())?;
        let was = lochom::par::set_parallel(false);
        let sequential = run_text(&text, &cfg).map_err(|e| e.to_string())?;
        lochom::par::set_parallel(was);
        let name = file.file_name().unwrap().to_string_lossy();
        check(first == second, format!("{name}: two runs differ"))?;
        check(first == sequential, format!("{name}: sequential run differs"))?;
        check(first.text == expected, format!("{name}: differs from the stored transcript"))?;
    }
    Ok(format!("{} sessions, two runs plus a sequential run", files.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("two planes end to end", two_planes_end_to_end),
        ("two planes invariants", example_invariants),
        ("Cohen-Macaulay round trip", cm_round_trip),
        ("co-Cohen-Macaulay suite", co_cm_suite),
        ("top local homology vs colimit", local_homology_against_colimit),
        ("Matlis involution", matlis_involution),
        ("kernel correctness", kernel_properties),
        ("canonical module necessity", canonical_module_necessity),
        ("transcript determinism", golden_determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
