//! Alexander duality over a fixed ground set.

use std::collections::BTreeSet;

use crate::collapse::{replay_steps, search_collapse, Certificate, Direction, SearchBudget, StepPair};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::homology::{field_betti, Coefficients};

/// Minimal non-faces: subsets of the ground set outside `x` whose facets all
/// lie in `x`.
pub fn minimal_non_faces(x: &SimplicialComplex) -> Vec<Face> {
    if x.is_void() {
        return vec![Face::EMPTY];
    }
    let ground = x.ground();
    let mut out = BTreeSet::new();
    for f in x.faces() {
        for v in ground.difference(f).vertices() {
            let g = f.with(v);
            if !x.contains(g) && g.facets().all(|h| x.contains(h)) {
                out.insert(g);
            }
        }
    }
    out.into_iter().collect()
}

/// `X* = { σ ⊆ V : V \ σ ∉ X }`, built from the complements of the minimal
/// non-faces of `x`.
pub fn alexander_dual(x: &SimplicialComplex) -> SimplicialComplex {
    let ground = x.ground();
    let mut faces = BTreeSet::new();
    let mut stack: Vec<Face> = minimal_non_faces(x)
        .into_iter()
        .map(|m| ground.difference(m))
        .collect();
    while let Some(f) = stack.pop() {
        if faces.insert(f) {
            stack.extend(f.facets().filter(|g| !faces.contains(g)));
        }
    }
    SimplicialComplex::from_parts_unchecked(ground, faces)
}

/// The dual move on `X*`: `(τ, σ)` becomes `(V \ σ, V \ τ)` with the
/// direction flipped.
pub fn dual_step(ground: Face, s: &StepPair) -> StepPair {
    StepPair {
        free: ground.difference(s.coface),
        coface: ground.difference(s.free),
        direction: s.direction.flip(),
    }
}

/// Transports every step of `c` to the dual side. The result runs from `X*`
/// to the dual of the end of `c`.
pub fn dual_steps(x: &SimplicialComplex, c: &Certificate) -> Result<Certificate> {
    let end = c
        .replay(x)
        .map_err(|e| Error::Input(format!("certificate does not replay: {e}")))?;
    let ground = x.ground();
    let steps = c.steps.iter().map(|s| dual_step(ground, s)).collect();
    let start = alexander_dual(x);
    let allow_trivial = c.steps.iter().any(|s| s.coface == ground);
    let cert = Certificate {
        kind: c.kind.flip(),
        steps,
        start_digest: start.digest(),
        end_digest: alexander_dual(&end).digest(),
        allow_trivial,
    };
    cert.replay(&start)?;
    Ok(cert)
}

/// Like [`dual_steps`], but a collapse certificate ending at a single vertex
/// `u` gets one more anticollapse `(V \ u, V)`, the dual of the trivial
/// collapse of `∅`. The result then ends at the full simplex on `V`.
pub fn dual_certificate(x: &SimplicialComplex, c: &Certificate) -> Result<Certificate> {
    let mut out = dual_steps(x, c)?;
    if c.kind != Direction::Collapse {
        return Ok(out);
    }
    let end = c.replay(x)?;
    if end.is_single_vertex() {
        let ground = x.ground();
        let u = end.support();
        let extra = StepPair::anticollapse(ground.difference(u), ground);
        out.steps.push(extra);
        let full = replay_steps(&alexander_dual(x), &out.steps, out.allow_trivial)?;
        out.end_digest = full.digest();
    }
    Ok(out)
}

/// Searches for an anticollapse of `x` to the full simplex on its ground set
/// by collapsing the dual.
pub fn is_anticollapsible(x: &SimplicialComplex, budget: SearchBudget, seed: u64) -> Option<Certificate> {
    let dual = alexander_dual(x);
    if dual.is_void() {
        return Some(Certificate {
            kind: Direction::Anticollapse,
            steps: Vec::new(),
            start_digest: x.digest(),
            end_digest: x.digest(),
            allow_trivial: false,
        });
    }
    let c = search_collapse(&dual, budget, seed)?;
    dual_certificate(&dual, &c).ok()
}

/// Compares reduced Betti numbers of `x` in degree `i` with those of `X*` in
/// degree `n - i - 3`, for every `i` from `-1` to `n - 2`.
pub fn check_alexander_duality(x: &SimplicialComplex, field: Coefficients) -> Result<bool> {
    if field == Coefficients::Integers {
        return Err(Error::Input("duality check needs field coefficients".into()));
    }
    let n = x.ground_size() as isize;
    let dual = alexander_dual(x);
    let bx = field_betti(x, field)?;
    let bd = field_betti(&dual, field)?;
    let at = |b: &[usize], i: isize| -> usize {
        if i < -1 {
            return 0;
        }
        b.get((i + 1) as usize).copied().unwrap_or(0)
    };
    Ok((-1..=n - 2).all(|i| at(&bx, i) == at(&bd, n - i - 3)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collapse::{apply_step, free_faces};
    use crate::rng;
    use rand::Rng;

    /// Direct evaluation of the defining formula.
    fn dual_by_subsets(x: &SimplicialComplex) -> SimplicialComplex {
        let ground = x.ground();
        let faces: BTreeSet<Face> = ground.subsets().filter(|s| !x.contains(ground.difference(*s))).collect();
        SimplicialComplex::from_faces(ground, faces).unwrap()
    }

    fn random_complex(r: &mut impl Rng, n: u32) -> SimplicialComplex {
        let ground = Face::range(n);
        let k = r.gen_range(0..6);
        let facets: Vec<Face> = (0..k)
            .map(|_| Face::from_bits(r.gen_range(0..(1u64 << n))))
            .filter(|f| !f.is_empty())
            .collect();
        if facets.is_empty() && r.gen_bool(0.5) {
            return SimplicialComplex::void(ground);
        }
        SimplicialComplex::from_facets(facets).with_ground(ground).unwrap()
    }

    #[test]
    fn degenerate_duals() {
        let v = Face::range(4);
        let full = SimplicialComplex::simplex(4);
        assert!(alexander_dual(&full).is_void());
        assert_eq!(alexander_dual(&SimplicialComplex::void(v)), full);
        assert_eq!(
            alexander_dual(&SimplicialComplex::empty(v)),
            SimplicialComplex::simplex_boundary(4)
        );
        let pt = SimplicialComplex::from_facets([Face::of(&[2])]).with_ground(v).unwrap();
        let d = alexander_dual(&pt);
        let mut expect = SimplicialComplex::simplex_boundary(4).facets();
        expect.retain(|&f| f != Face::of(&[1, 3, 4]));
        assert_eq!(d, SimplicialComplex::from_facets(expect).with_ground(v).unwrap());
    }

    #[test]
    fn matches_subset_formula_and_is_an_involution() {
        let mut r = rng::seeded(5);
        for _ in 0..200 {
            let n = r.gen_range(1..=6);
            let x = random_complex(&mut r, n);
            let d = alexander_dual(&x);
            assert_eq!(d, dual_by_subsets(&x), "{}", x.to_facet_file());
            assert_eq!(alexander_dual(&d), x);
        }
    }

    #[test]
    fn steps_commute_with_duality() {
        let mut r = rng::seeded(9);
        let mut checked = 0;
        for _ in 0..300 {
            let n = r.gen_range(2..=5);
            let x = random_complex(&mut r, n);
            for s in free_faces(&x) {
                let lhs = alexander_dual(&apply_step(&x, &s, false).unwrap());
                let rhs = apply_step(&alexander_dual(&x), &dual_step(x.ground(), &s), true).unwrap();
                assert_eq!(lhs, rhs);
                checked += 1;
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn smallest_transport_uses_the_trivial_step() {
        let tri = SimplicialComplex::simplex(3);
        let (c, _) = Certificate::record(
            &tri,
            Direction::Collapse,
            vec![(Face::of(&[1, 2]), Face::of(&[1, 2, 3]))],
        )
        .unwrap();
        let d = dual_steps(&tri, &c).unwrap();
        assert_eq!(d.steps, vec![StepPair::anticollapse(Face::EMPTY, Face::of(&[3]))]);
        assert!(d.allow_trivial);
        assert!(d.replay(&alexander_dual(&tri)).is_ok());
    }

    #[test]
    fn empty_certificate_transports_to_empty() {
        let x = SimplicialComplex::simplex_boundary(4);
        let (c, _) = Certificate::record(&x, Direction::Collapse, vec![]).unwrap();
        assert!(dual_steps(&x, &c).unwrap().is_empty());
    }

    #[test]
    fn anticollapse_via_dual() {
        let full = SimplicialComplex::simplex(5);
        assert!(is_anticollapsible(&full, SearchBudget::default(), 0).unwrap().is_empty());

        // a path on a 4-vertex ground set anticollapses to the tetrahedron
        let path = SimplicialComplex::from_lists::<&[u32]>(&[&[1, 2], &[2, 3], &[3, 4]]).unwrap();
        let cert = is_anticollapsible(&path, SearchBudget::default(), 1).unwrap();
        assert_eq!(cert.replay(&path).unwrap(), SimplicialComplex::simplex(4));

        // the triangle boundary admits no anticollapse at all
        let c = SimplicialComplex::simplex_boundary(3);
        assert!(is_anticollapsible(&c, SearchBudget::default(), 0).is_none());
    }

    #[test]
    fn duality_of_betti_numbers() {
        let two = SimplicialComplex::from_facets([Face::of(&[1]), Face::of(&[2])])
            .with_ground(Face::range(4))
            .unwrap();
        let dual = alexander_dual(&two);
        assert_eq!(field_betti(&two, Coefficients::Rationals).unwrap()[1], 1);
        assert_eq!(field_betti(&dual, Coefficients::Rationals).unwrap()[2], 1);
        let mut r = rng::seeded(21);
        for _ in 0..50 {
            let n = r.gen_range(1..=6);
            let x = random_complex(&mut r, n);
            assert!(check_alexander_duality(&x, Coefficients::Rationals).unwrap());
            assert!(check_alexander_duality(&x, Coefficients::Prime(2)).unwrap());
        }
    }
}
