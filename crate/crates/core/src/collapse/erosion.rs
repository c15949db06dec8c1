use std::collections::{BTreeSet, HashMap, VecDeque};

use rand::Rng;

use crate::complex::SimplicialComplex;
use crate::face::Face;
use crate::rng;

/// Result of exhaustive top-dimensional collapsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Erosion {
    pub residue: SimplicialComplex,
    pub d_collapsible: bool,
    pub steps: Vec<(Face, Face)>,
}

impl Erosion {
    /// The d-core left behind, if erosion stopped early.
    pub fn core(&self) -> Option<SimplicialComplex> {
        (!self.d_collapsible).then(|| self.residue.pure_part())
    }
}

/// Removes `(d-1)`-faces of degree one together with their `d`-coface until
/// none remain. Candidates are taken in canonical order.
pub fn core_erosion(x: &SimplicialComplex) -> Erosion {
    erode(x, |queue: &mut VecDeque<Face>| queue.pop_front())
}

/// As [`core_erosion`] but picks each next candidate at random.
pub fn core_erosion_shuffled(x: &SimplicialComplex, seed: u64) -> Erosion {
    let mut r = rng::seeded(seed);
    erode(x, move |queue: &mut VecDeque<Face>| {
        if queue.is_empty() {
            return None;
        }
        let i = r.gen_range(0..queue.len());
        queue.swap_remove_back(i)
    })
}

fn erode(x: &SimplicialComplex, mut next: impl FnMut(&mut VecDeque<Face>) -> Option<Face>) -> Erosion {
    let d = x.dim();
    let mut faces = x.face_set().clone();
    let mut steps = Vec::new();
    if d < 1 {
        return Erosion {
            residue: x.clone(),
            d_collapsible: d == 0 && x.count_of_dim(0) <= 1,
            steps,
        };
    }
    let ground = x.ground();
    let mut top: BTreeSet<Face> = x.faces_of_dim(d).collect();
    let mut degree: HashMap<Face, usize> = HashMap::new();
    for s in &top {
        for g in s.facets() {
            *degree.entry(g).or_default() += 1;
        }
    }
    let mut queue: VecDeque<Face> = x.faces_of_dim(d - 1).filter(|g| degree.get(g) == Some(&1)).collect();
    while let Some(tau) = next(&mut queue) {
        if degree.get(&tau) != Some(&1) || !faces.contains(&tau) {
            continue;
        }
        let sigma = ground
            .difference(tau)
            .vertices()
            .map(|u| tau.with(u))
            .find(|s| top.contains(s))
            .expect("degree one");
        top.remove(&sigma);
        faces.remove(&sigma);
        faces.remove(&tau);
        degree.remove(&tau);
        steps.push((tau, sigma));
        for g in sigma.facets().filter(|&g| g != tau) {
            let e = degree.get_mut(&g).expect("counted");
            *e -= 1;
            if *e == 1 {
                queue.push_back(g);
            }
        }
    }
    Erosion {
        d_collapsible: top.is_empty(),
        residue: SimplicialComplex::from_parts_unchecked(ground, faces),
        steps,
    }
}
