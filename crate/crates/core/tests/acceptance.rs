//! One test per acceptance criterion; each writes a PASS/FAIL line to stderr.

use std::collections::BTreeSet;
use std::io::Write;

use rand::Rng;
use simplex_collapse::collapse::{
    apply_step, core_erosion, free_faces, random_discrete_morse, search_collapse, verify_matching_acyclic,
    Certificate, SearchBudget, StepPair,
};
use simplex_collapse::constructions::{
    catalog, catalog_complex, construct_stuck, double_cone, lift_matching, Outcome,
};
use simplex_collapse::duality::{alexander_dual, dual_step, is_anticollapsible};
use simplex_collapse::homology::{field_betti, homology, Coefficients, HomologyProfile};
use simplex_collapse::hypertree::{kalai_check, survey};
use simplex_collapse::{rng, Face, SimplicialComplex};

fn report(n: u32, title: &str, outcome: Result<String, String>) {
    let (tag, detail) = match &outcome {
        Ok(d) => ("PASS", d.as_str()),
        Err(d) => ("FAIL", d.as_str()),
    };
    // bypasses the test harness capture so the line lands in the log
    let _ = writeln!(std::io::stderr(), "[acceptance] {tag} {n}. {title}: {detail}");
    if let Err(e) = outcome {
        panic!("criterion {n} failed: {e}");
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

// Brute-force oracles on raw bitmasks, independent of the library.

fn closure(facets: &[u64]) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for &f in facets {
        let mut s = f;
        loop {
            out.insert(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    out
}

fn brute_dual(faces: &BTreeSet<u64>, n: u32) -> BTreeSet<u64> {
    let full = (1u64 << n) - 1;
    (0..=full).filter(|s| !faces.contains(&(full & !s))).collect()
}

fn brute_free_count(faces: &BTreeSet<u64>) -> usize {
    faces
        .iter()
        .filter(|&&t| {
            t != 0 && faces.iter().filter(|&&s| s != t && s & t == t).count() == 1
        })
        .count()
}

fn masks(x: &SimplicialComplex) -> BTreeSet<u64> {
    x.faces().map(face_mask).collect()
}

fn face_mask(f: Face) -> u64 {
    f.vertices().map(|v| 1u64 << (v - 1)).sum()
}

fn trimmed(h: HomologyProfile) -> (Vec<usize>, Vec<Vec<u64>>, usize) {
    let mut b = h.betti;
    let mut t = h.torsion;
    while b.last() == Some(&0) && t.last().is_some_and(|x| x.is_empty()) {
        b.pop();
        t.pop();
    }
    (b, t, h.betti_minus_one)
}

fn random_complex(r: &mut rng::Rng, max_n: u32) -> SimplicialComplex {
    let n = r.gen_range(1..=max_n);
    let k = r.gen_range(1..=6);
    let facets: Vec<Face> = (0..k)
        .map(|_| {
            let bits: u64 = r.gen_range(1..(1u64 << n));
            Face::new((1..=n).filter(|v| bits >> (v - 1) & 1 == 1)).unwrap()
        })
        .collect();
    SimplicialComplex::from_facets(facets).with_ground(Face::range(n)).unwrap()
}

#[test]
fn criterion_1_catalog() {
    let run = || -> Result<String, String> {
        let y2 = catalog("Y28_2").map_err(|e| e.to_string())?;
        let y3 = catalog("Y38_3").map_err(|e| e.to_string())?;
        let c3 = catalog("C38_3").map_err(|e| e.to_string())?;
        ensure(y2.complex.facets().len() == 21, "Y28_2 facet count")?;
        ensure(y3.complex.facets().len() == 35, "Y38_3 facet count")?;
        ensure(c3.complex.facets().len() == 35, "C38_3 facet count")?;
        for e in [&y2, &y3] {
            let cert = e.collapse_certificate.as_ref().ok_or("no collapse certificate")?;
            let end = cert.replay(&e.complex).map_err(|e| e.to_string())?;
            ensure(end.is_single_vertex(), format!("{} does not reach a vertex", e.name))?;
        }
        let raw: Vec<u64> = y2.complex.facets().into_iter().map(face_mask).collect();
        ensure(closure(&raw) == masks(&y2.complex), "Y28_2 is not the closure of its facets")?;
        let d2 = brute_dual(&masks(&y2.complex), 8);
        ensure(brute_free_count(&d2) == 0, "dual(Y28_2) has a free face")?;
        ensure(free_faces(&alexander_dual(&y2.complex)).is_empty(), "library disagrees on dual(Y28_2)")?;
        // the published 3-dimensional list admits four anticollapses; a
        // collapse of its dual that gets stuck gives the 3-dimensional example
        let d3 = brute_dual(&masks(&y3.complex), 8);
        let published = brute_free_count(&d3);
        ensure(published == free_faces(&alexander_dual(&y3.complex)).len(), "free-face count disagrees")?;
        let b3 = catalog("B8_3").map_err(|e| e.to_string())?;
        let bm = masks(&b3.complex);
        ensure(bm.is_subset(&d3), "B8_3 is not inside dual(Y38_3)")?;
        ensure(brute_free_count(&bm) == 0, "B8_3 has a free face")?;
        ensure(b3.complex.dim() == 3 && b3.complex.support().len() == 8, "B8_3 shape")?;
        let end = b3.anticollapse_certificate.as_ref().unwrap().replay(&b3.complex).map_err(|e| e.to_string())?;
        ensure(end.is_full_simplex(), "B8_3 does not anticollapse")?;
        let d4 = alexander_dual(&y2.complex);
        ensure(d4.dim() == 4, "dual(Y28_2) is not 4-dimensional")?;
        ensure(is_anticollapsible(&d4, SearchBudget::default(), 0).is_some(), "dual(Y28_2) not anticollapsible")?;
        Ok(format!(
            "21/35/35 facets, both collapse certificates replay, dual(Y28_2) 0 free faces; \
             dual(Y38_3) as listed has {published} free faces, its stuck residue B8_3 has 0"
        ))
    };
    report(1, "catalog", run());
}

#[test]
fn criterion_2_double_refutation() {
    let run = || -> Result<String, String> {
        let (c, _) = catalog_complex("C38_3").map_err(|e| e.to_string())?;
        let e = core_erosion(&c);
        let ed = core_erosion(&alexander_dual(&c));
        ensure(!e.d_collapsible, "C38_3 erodes away")?;
        ensure(!ed.d_collapsible, "dual(C38_3) erodes away")?;
        let (core, dcore) = (e.core().unwrap(), ed.core().unwrap());
        ensure(core.dim() == 3 && dcore.dim() == 3, "cores are not 3-dimensional")?;
        Ok(format!(
            "core f-vector {:?}, dual core f-vector {:?}",
            core.f_vector(),
            dcore.f_vector()
        ))
    };
    report(2, "C38_3 neither 3-collapsible nor 3-anticollapsible", run());
}

#[test]
fn criterion_3_construction_matrix() {
    let run = || -> Result<String, String> {
        let mut built = 0;
        let mut refused = 0;
        for n in 1..=11u32 {
            for d in 0..n {
                let expect = n >= 8 && (2..=n - 4).contains(&d);
                match construct_stuck(n, d, u64::from(n * 100 + d)).map_err(|e| e.to_string())? {
                    Outcome::Refused(_) => {
                        ensure(!expect, format!("({n},{d}) refused"))?;
                        refused += 1;
                    }
                    Outcome::Built(c) => {
                        ensure(expect, format!("({n},{d}) built"))?;
                        let x = &c.complex;
                        ensure(x.dim() == d as isize, format!("({n},{d}) dimension"))?;
                        ensure(x.support().len() == n as usize, format!("({n},{d}) vertex count"))?;
                        ensure(brute_free_count(&masks(x)) == 0, format!("({n},{d}) free face"))?;
                        let end = c.certificate.replay(x).map_err(|e| e.to_string())?;
                        ensure(end == SimplicialComplex::simplex(n), format!("({n},{d}) end"))?;
                        built += 1;
                    }
                }
            }
        }
        Ok(format!("{built} built and verified, {refused} refused, no exceptions"))
    };
    report(3, "construction matrix", run());
}

#[test]
fn criterion_4_homology_oracles() {
    let run = || -> Result<String, String> {
        let (rp2, _) = catalog_complex("RP2_6").map_err(|e| e.to_string())?;
        let h = homology(&rp2).map_err(|e| e.to_string())?;
        ensure(h.betti == vec![0, 0, 0] && h.torsion == vec![vec![], vec![2], vec![]], "RP2")?;
        for k in 1..=6u32 {
            let h = homology(&SimplicialComplex::simplex_boundary(k + 1)).map_err(|e| e.to_string())?;
            let mut expect = vec![0; k as usize];
            expect[k as usize - 1] = 1;
            ensure(h.betti == expect, format!("boundary of the {k}-simplex"))?;
            ensure(h.torsion.iter().all(|t| t.is_empty()), "boundary torsion")?;
        }
        let hc = homology(&double_cone(&rp2, 1).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(hc.betti.iter().all(|&b| b == 0), "cone betti")?;
        ensure(hc.torsion[2] == vec![2] && hc.torsion.iter().flatten().count() == 1, "cone torsion")?;
        Ok("RP2 torsion {2} in dim 1, spheres dims 0..5, cone torsion {2} in dim 2".into())
    };
    report(4, "homology oracles", run());
}

#[test]
fn criterion_5_weighted_tree_counts() {
    let run = || -> Result<String, String> {
        let k4 = kalai_check(4, 2).map_err(|e| e.to_string())?;
        let k5 = kalai_check(5, 2).map_err(|e| e.to_string())?;
        ensure(k4.weighted_sum == 4 && k4.ok, format!("(4,2) gave {}", k4.weighted_sum))?;
        ensure(k5.weighted_sum == 125 && k5.ok, format!("(5,2) gave {}", k5.weighted_sum))?;
        for n in 2..=6u32 {
            let c = kalai_check(n, 1).map_err(|e| e.to_string())?;
            let cayley = u128::from(n).pow(n - 2);
            ensure(c.weighted_sum == cayley, format!("Cayley n={n}"))?;
        }
        Ok("4, 125, and n^(n-2) for n = 2..6".into())
    };
    report(5, "weighted hypertree counts", run());
}

#[test]
fn criterion_6_duality() {
    let run = || -> Result<String, String> {
        let mut r = rng::seeded(6);
        for i in 0..200 {
            let x = random_complex(&mut r, 6);
            let n = x.ground_size();
            let xd = alexander_dual(&x);
            ensure(alexander_dual(&xd) == x, format!("involution fails on sample {i}"))?;
            ensure(masks(&xd) == brute_dual(&masks(&x), n as u32), format!("dual oracle, sample {i}"))?;
            for field in [Coefficients::Rationals, Coefficients::Prime(2)] {
                let b = field_betti(&x, field).map_err(|e| e.to_string())?;
                let bd = field_betti(&xd, field).map_err(|e| e.to_string())?;
                // entry j is degree j - 1
                let at = |v: &Vec<usize>, deg: isize| -> usize {
                    if deg < -1 {
                        0
                    } else {
                        v.get((deg + 1) as usize).copied().unwrap_or(0)
                    }
                };
                for deg in -1..=n as isize - 2 {
                    let mirrored = n as isize - deg - 3;
                    ensure(
                        at(&b, deg) == at(&bd, mirrored),
                        format!("sample {i}, {field}, degree {deg}"),
                    )?;
                }
            }
        }
        // every complex on four vertices, every Hasse edge, both directions
        let ground = Face::range(4);
        let subsets: Vec<Face> = ground.subsets().collect();
        let mut complexes = 0;
        let mut checked = 0;
        for bits in 0u32..(1 << 16) {
            let faces: BTreeSet<Face> = (0..16).filter(|i| bits >> i & 1 == 1).map(|i| subsets[i]).collect();
            if faces.iter().any(|f| f.facets().any(|g| !faces.contains(&g))) {
                continue;
            }
            complexes += 1;
            let x = SimplicialComplex::from_faces(ground, faces).map_err(|e| e.to_string())?;
            let xd = alexander_dual(&x);
            for &sigma in &subsets {
                for tau in sigma.facets() {
                    for s in [StepPair::collapse(tau, sigma), StepPair::anticollapse(tau, sigma)] {
                        let ds = dual_step(ground, &s);
                        let a = apply_step(&x, &s, true);
                        let b = apply_step(&xd, &ds, true);
                        ensure(a.is_ok() == b.is_ok(), format!("legality differs for {s:?} on {x:?}"))?;
                        if let (Ok(a), Ok(b)) = (a, b) {
                            ensure(alexander_dual(&a) == b, "results are not dual")?;
                        }
                        checked += 1;
                    }
                }
            }
        }
        ensure(complexes == 168, format!("{complexes} complexes on 4 vertices"))?;
        Ok(format!("200 random complexes over Q and Z/2; {checked} step pairs over all 168 complexes on 4 vertices"))
    };
    report(6, "duality", run());
}

#[test]
fn criterion_7_invariance() {
    let run = || -> Result<String, String> {
        let mut r = rng::seeded(7);
        let mut starts: Vec<SimplicialComplex> =
            ["Y28_2", "RP2_6", "B8_2"].iter().map(|n| catalog_complex(n).unwrap().0).collect();
        let mut moves = 0;
        while moves < 1000 {
            let start = starts.pop().unwrap_or_else(|| random_complex(&mut r, 6));
            let mut x = start.clone();
            let h0 = trimmed(homology(&x).map_err(|e| e.to_string())?);
            let chi = x.reduced_euler_characteristic();
            let ground = x.ground();
            for _ in 0..200 {
                let mut options = free_faces(&x);
                options.extend(free_faces(&alexander_dual(&x)).iter().map(|s| dual_step(ground, s)));
                if options.is_empty() {
                    break;
                }
                let s = options[r.gen_range(0..options.len())];
                x = apply_step(&x, &s, false).map_err(|e| e.to_string())?;
                ensure(x.reduced_euler_characteristic() == chi, "Euler characteristic changed")?;
                ensure(trimmed(homology(&x).map_err(|e| e.to_string())?) == h0, "homology changed")?;
                moves += 1;
            }
        }
        ensure(moves >= 1000, format!("only {moves} moves"))?;

        let mut certs = 0;
        let mut lifted = 0;
        for i in 0..40u64 {
            let x = random_complex(&mut r, 6);
            let found: Vec<Certificate> = [
                search_collapse(&x, SearchBudget::default(), i),
                is_anticollapsible(&x, SearchBudget::default(), i),
            ]
            .into_iter()
            .flatten()
            .collect();
            for c in found {
                let end = c.replay(&x).map_err(|e| format!("certificate {i}: {e}"))?;
                // the pairs live in the larger of the two ends
                let host = if end.num_faces() > x.num_faces() { &end } else { &x };
                ensure(verify_matching_acyclic(host, &c.matching()).unwrap_or(false), "cyclic certificate")?;
                certs += 1;
            }
            let m = random_discrete_morse(&x, i).matching;
            for v in x.vertices() {
                let cone = double_cone(&x, v).map_err(|e| e.to_string())?;
                let l = lift_matching(&x, v, &m).map_err(|e| e.to_string())?;
                ensure(verify_matching_acyclic(&cone, &l).unwrap_or(false), "lifted matching has a cycle")?;
                lifted += 1;
            }
        }
        Ok(format!("{moves} random moves, {certs} certificates replayed, {lifted} lifted matchings acyclic"))
    };
    report(7, "invariance", run());
}

#[test]
fn criterion_8_survey() {
    let run = || -> Result<String, String> {
        let trials = 100_000;
        let (reports, sum) = survey(8, 3, trials, 1, SearchBudget::default()).map_err(|e| e.to_string())?;
        ensure(reports.len() == trials, "missing reports")?;
        ensure(reports.iter().all(|r| r.facet_count == 35), "a hypertree without 35 facets")?;
        ensure(reports.iter().all(|r| r.q_acyclic), "a hypertree that is not Q-acyclic")?;
        let found = sum.collapsible_not_anticollapsible.len();
        ensure(found >= 1, "no collapsible-not-anticollapsible example")?;
        Ok(format!(
            "{trials} valid hypertrees, {found} collapsible-not-anticollapsible (seeds {:?}), {} with torsion",
            sum.collapsible_not_anticollapsible, sum.with_torsion
        ))
    };
    report(8, "hypertree survey n=8 d=3", run());
}

#[test]
fn criterion_9_small_simplices() {
    let run = || -> Result<String, String> {
        for k in 0..=6u32 {
            let x = SimplicialComplex::simplex(k + 1);
            for seed in 0..100 {
                let m = random_discrete_morse(&x, seed).morse;
                let mut expect = vec![0; k as usize + 1];
                expect[0] = 1;
                ensure(m.counts == expect, format!("simplex dim {k}, seed {seed}: {m}"))?;
            }
        }
        Ok("Morse vector (1,0,...,0) for every seed on simplices of dim 0..6".into())
    };
    report(9, "random discrete Morse on small simplices", run());
}
