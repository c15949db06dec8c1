use std::collections::{BTreeSet, HashSet};

use super::state::CollapseState;
use super::{check_step, Certificate, Direction, StepPair};
use crate::complex::SimplicialComplex;
use crate::face::Face;
use crate::rng;

/// Limits for [`search_collapse`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Randomized greedy attempts, each with its own derived seed.
    pub restarts: u32,
    /// Run exhaustive backtracking when at most this many faces of
    /// dimension ≥ 1 are present (0 disables it).
    pub exhaustive_limit: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            restarts: 64,
            exhaustive_limit: 25,
        }
    }
}

/// Greedy collapse with uniformly random choices until no free face is left.
/// Returns the steps taken and the residue.
pub(crate) fn greedy_collapse(x: &SimplicialComplex, seed: u64) -> (Vec<(Face, Face)>, CollapseState) {
    let mut r = rng::seeded(seed);
    let mut st = CollapseState::new(x, false);
    let mut steps = Vec::new();
    while let Some((t, s)) = st.random_free(&mut r) {
        st.collapse(t, s);
        steps.push((t, s));
    }
    (steps, st)
}

/// Looks for a collapse of `x` to a single vertex. `None` only means the
/// budget ran out.
pub fn search_collapse(x: &SimplicialComplex, budget: SearchBudget, seed: u64) -> Option<Certificate> {
    search_collapse_steps(x, budget, seed).map(|steps| certify(x, steps))
}

/// The step list behind [`search_collapse`], without recording a certificate.
pub(crate) fn search_collapse_steps(x: &SimplicialComplex, budget: SearchBudget, seed: u64) -> Option<Vec<(Face, Face)>> {
    if x.is_void() || x.is_empty_complex() {
        return None;
    }
    if x.connected_components() != 1 || x.reduced_euler_characteristic() != 0 {
        return None;
    }
    for attempt in 0..budget.restarts.max(1) {
        let (steps, st) = greedy_collapse(x, rng::derive_seed(seed, attempt as u64));
        if st.is_single_vertex() {
            return Some(steps);
        }
    }
    let above_vertices = x.faces().filter(|f| f.len() >= 2).count();
    if above_vertices <= budget.exhaustive_limit {
        return exhaustive(x);
    }
    None
}

fn certify(x: &SimplicialComplex, steps: Vec<(Face, Face)>) -> Certificate {
    Certificate::record(x, Direction::Collapse, steps)
        .expect("search produced only legal steps")
        .0
}

/// Depth-first search over collapse orders, skipping visited face sets.
fn exhaustive(x: &SimplicialComplex) -> Option<Vec<(Face, Face)>> {
    let mut seen = HashSet::new();
    let mut path = Vec::new();
    let mut faces = x.face_set().clone();
    dfs(x.ground(), &mut faces, &mut path, &mut seen).then_some(path)
}

fn dfs(
    ground: Face,
    faces: &mut BTreeSet<Face>,
    path: &mut Vec<(Face, Face)>,
    seen: &mut HashSet<Vec<Face>>,
) -> bool {
    if faces.len() == 2 {
        return true;
    }
    if !seen.insert(faces.iter().copied().collect()) {
        return false;
    }
    let moves: Vec<(Face, Face)> = faces
        .iter()
        .filter(|t| !t.is_empty())
        .flat_map(|&t| ground.difference(t).vertices().map(move |u| (t, t.with(u))))
        .filter(|&(t, s)| {
            faces.contains(&s) && check_step(faces, ground, &StepPair::collapse(t, s), false).is_ok()
        })
        .collect();
    for (t, s) in moves {
        faces.remove(&t);
        faces.remove(&s);
        path.push((t, s));
        if dfs(ground, faces, path, seen) {
            return true;
        }
        path.pop();
        faces.insert(t);
        faces.insert(s);
    }
    false
}
