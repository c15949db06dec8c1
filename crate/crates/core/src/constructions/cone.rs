use std::collections::BTreeSet;

use crate::collapse::{verify_matching_acyclic, Certificate, Direction, Matching};
use crate::complex::SimplicialComplex;
use crate::duality::{alexander_dual, dual_steps};
use crate::error::{Error, Result};
use crate::face::Face;

/// Labels `(a, b)` used by [`double_cone`]: `a` reuses `x`, `b` is one past
/// the largest ground vertex.
pub fn cone_labels(x: &SimplicialComplex, v: u32) -> Result<(u32, u32)> {
    if !x.ground().contains(v) {
        return Err(Error::Input(format!("vertex {v} is not in the ground set")));
    }
    let b = x.ground().max_vertex().unwrap_or(0) + 1;
    if b > 64 {
        return Err(Error::Size("double cone needs a 65th vertex label".into()));
    }
    Ok((v, b))
}

fn rename(f: Face, from: u32, to: u32) -> Face {
    if f.contains(from) {
        f.without(from).with(to)
    } else {
        f
    }
}

/// `a * X[x→b] ∪ b * X[x→a]` with `a = x` and `b` a fresh label.
/// If `x` is not a vertex of any face, both cones are over `X` itself.
pub fn double_cone(x: &SimplicialComplex, v: u32) -> Result<SimplicialComplex> {
    let (a, b) = cone_labels(x, v)?;
    let mut faces = BTreeSet::new();
    for f in x.faces() {
        let fb = rename(f, v, b);
        faces.insert(fb);
        faces.insert(fb.with(a));
        faces.insert(f);
        faces.insert(f.with(b));
    }
    let ground = x.ground().with(b);
    SimplicialComplex::from_faces(ground, faces)
}

/// Lifts an acyclic matching on `x` to `double_cone(x, v)`. With `M_b` the
/// matching relabeled `v → b`, each pair `(τ, σ)` of `M_b` contributes
/// `(aτ, aσ)`; also `(τ, σ)` when `b ∉ τ`; also `(bτ, bσ)` when `b ∉ σ`.
pub fn lift_matching(x: &SimplicialComplex, v: u32, m: &Matching) -> Result<Matching> {
    if !verify_matching_acyclic(x, m)? {
        return Err(Error::Input("matching is not acyclic".into()));
    }
    let (a, b) = cone_labels(x, v)?;
    let mut pairs = Vec::new();
    for &(tau, sigma) in &m.pairs {
        let (tau, sigma) = (rename(tau, v, b), rename(sigma, v, b));
        pairs.push((tau.with(a), sigma.with(a)));
        if !tau.contains(b) {
            pairs.push((tau, sigma));
        }
        if !sigma.contains(b) {
            pairs.push((tau.with(b), sigma.with(b)));
        }
    }
    Ok(Matching::new(pairs))
}

/// Given an anticollapse certificate taking `x` to the full simplex on its
/// ground set, produces one for `double_cone(x, v)`.
///
/// The dual of the double cone is the preimage of `X*` under the map that
/// merges `a` and `b`; collapses of `X*` lift to collapses there.
pub fn double_cone_certificate(x: &SimplicialComplex, v: u32, cert: &Certificate) -> Result<Certificate> {
    if cert.kind != Direction::Anticollapse {
        return Err(Error::Input("expected an anticollapse certificate".into()));
    }
    let (a, b) = cone_labels(x, v)?;
    let dual_c = dual_steps(x, cert)?;
    let mut lifted = Vec::new();
    for s in &dual_c.steps {
        let (tau, sigma) = (s.free, s.coface);
        if !sigma.contains(a) {
            lifted.push((tau, sigma));
        } else if !tau.contains(a) {
            lifted.push((sigma, sigma.with(b)));
            lifted.push((tau, tau.with(b)));
        } else {
            let w = sigma.difference(tau);
            let base = tau.without(a);
            let ab = base.with(a).with(b);
            lifted.push((ab, ab.union(w)));
            lifted.push((base.with(a), base.with(a).union(w)));
            lifted.push((base.with(b), base.with(b).union(w)));
        }
    }
    let cone = double_cone(x, v)?;
    let cone_dual = alexander_dual(&cone);
    let (dual_cert, end) = Certificate::record(&cone_dual, Direction::Collapse, lifted)?;
    debug_assert!(end.is_void());
    let out = dual_steps(&cone_dual, &dual_cert)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collapse::{free_faces, search_collapse, SearchBudget};
    use crate::duality::is_anticollapsible;
    use crate::homology::homology;

    fn rp2() -> SimplicialComplex {
        SimplicialComplex::from_lists::<&[u32]>(&[
            &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
            &[2, 3, 5], &[2, 4, 5], &[2, 4, 6], &[3, 4, 6], &[3, 5, 6],
        ])
        .unwrap()
    }

    #[test]
    fn cones_of_simplices_are_simplices() {
        let edge = SimplicialComplex::simplex(2);
        assert_eq!(double_cone(&edge, 1).unwrap(), SimplicialComplex::simplex(3));
        for n in 1..=5 {
            for v in 1..=n {
                assert_eq!(double_cone(&SimplicialComplex::simplex(n), v).unwrap(), SimplicialComplex::simplex(n + 1));
            }
        }
    }

    #[test]
    fn homology_shifts_up_by_one() {
        let x = rp2();
        let h = homology(&x).unwrap();
        let c = double_cone(&x, 1).unwrap();
        assert_eq!(c.ground_size(), 7);
        assert_eq!(c.dim(), 3);
        let hc = homology(&c).unwrap();
        assert_eq!(hc.betti[0], 0);
        assert!(hc.torsion[0].is_empty());
        for i in 0..h.betti.len() {
            assert_eq!(hc.betti[i + 1], h.betti[i]);
            assert_eq!(hc.torsion[i + 1], h.torsion[i]);
        }
        assert_eq!(hc.torsion[2], vec![2]);

        let circle = SimplicialComplex::simplex_boundary(3);
        let hc = homology(&double_cone(&circle, 2).unwrap()).unwrap();
        assert_eq!(hc.betti, vec![0, 0, 1]);
    }

    #[test]
    fn dual_is_preimage_of_dual() {
        let x = rp2();
        let v = 3;
        let (a, b) = cone_labels(&x, v).unwrap();
        let cd = alexander_dual(&double_cone(&x, v).unwrap());
        let xd = alexander_dual(&x);
        for f in cd.ground().subsets() {
            let merged = if f.contains(b) { f.without(b).with(a) } else { f };
            assert_eq!(cd.contains(f), xd.contains(merged), "{f}");
        }
    }

    #[test]
    fn absent_vertex_gives_two_cones() {
        let x = SimplicialComplex::from_lists::<&[u32]>(&[&[1, 2]]).unwrap().with_ground(Face::range(3)).unwrap();
        let c = double_cone(&x, 3).unwrap();
        let expect = SimplicialComplex::from_lists::<&[u32]>(&[&[1, 2, 3], &[1, 2, 4]]).unwrap();
        assert_eq!(c, expect);
    }

    #[test]
    fn lifted_matchings() {
        // no pairs: everything critical
        let x = SimplicialComplex::simplex(2);
        let lifted = lift_matching(&x, 1, &Matching::default()).unwrap();
        let cone = double_cone(&x, 1).unwrap();
        assert!(lifted.is_empty());
        assert_eq!(lifted.critical_cells(&cone).len(), 7);

        // edge collapsed onto vertex 2, special vertex 1
        let m = Matching::new(vec![(Face::of(&[1]), Face::of(&[1, 2]))]);
        let lifted = lift_matching(&x, 1, &m).unwrap();
        assert!(verify_matching_acyclic(&cone, &lifted).unwrap());
        // critical cells: the double cone of the single vertex 2, a path a-2-b
        let crit: BTreeSet<Face> = lifted.critical_cells(&cone).into_iter().collect();
        let expect: BTreeSet<Face> = [&[2][..], &[1, 2], &[2, 3], &[1], &[3]]
            .iter()
            .map(|f| Face::of(f))
            .collect();
        assert_eq!(crit, expect);
    }

    #[test]
    fn lifted_collapse_matching_is_acyclic() {
        let x = rp2();
        let cone = double_cone(&x, 1).unwrap();
        let m = crate::collapse::random_discrete_morse(&x, 4).matching;
        let lifted = lift_matching(&x, 1, &m).unwrap();
        assert!(verify_matching_acyclic(&cone, &lifted).unwrap());
        let tree = SimplicialComplex::from_lists::<&[u32]>(&[&[1, 2, 3], &[2, 3, 4], &[4, 5]]).unwrap();
        let c = search_collapse(&tree, SearchBudget::default(), 0).unwrap();
        for v in 1..=5 {
            let lifted = lift_matching(&tree, v, &c.matching()).unwrap();
            let cone = double_cone(&tree, v).unwrap();
            assert!(verify_matching_acyclic(&cone, &lifted).unwrap());
            // the critical vertex lifts to one segment, or two when it is not v
            let mv = lifted.morse_vector(&cone);
            let crit = c.matching().critical_cells(&tree);
            let expect = if crit == vec![Face::vertex(v)] { vec![2, 1, 0, 0] } else { vec![3, 2, 0, 0] };
            assert_eq!(mv.counts, expect);
        }
    }

    #[test]
    fn certificate_transport() {
        let x = SimplicialComplex::from_lists::<&[u32]>(&[&[1, 2, 3], &[3, 4], &[4, 5, 6]]).unwrap();
        let cert = is_anticollapsible(&x, SearchBudget::default(), 0).unwrap();
        for v in 1..=6 {
            let cone = double_cone(&x, v).unwrap();
            let c = double_cone_certificate(&x, v, &cert).unwrap();
            let end = c.replay(&cone).unwrap();
            assert!(end.is_full_simplex());
            assert_eq!(end.ground_size(), 7);
            assert!(!c.allow_trivial);
        }
        // no free faces survive the construction
        let circle = SimplicialComplex::simplex_boundary(4);
        assert!(free_faces(&double_cone(&circle, 2).unwrap()).is_empty());
    }
}
