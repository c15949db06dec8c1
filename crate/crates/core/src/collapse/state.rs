use std::collections::HashSet;

use indexmap::{IndexMap, IndexSet};
use rand::Rng;

use crate::complex::SimplicialComplex;
use crate::face::Face;

/// Mutable complex with an incrementally maintained table of free pairs.
pub(crate) struct CollapseState {
    ground: Face,
    faces: HashSet<Face>,
    /// faces bucketed by cardinality
    by_size: Vec<IndexSet<Face>>,
    /// free face -> its unique coface, bucketed by cardinality of the free face
    free: Vec<IndexMap<Face, Face>>,
    allow_trivial: bool,
}

impl CollapseState {
    pub fn new(x: &SimplicialComplex, allow_trivial: bool) -> Self {
        let mut st = CollapseState {
            ground: x.ground(),
            faces: x.faces().collect(),
            by_size: vec![IndexSet::new(); 66],
            free: vec![IndexMap::new(); 66],
            allow_trivial,
        };
        for f in x.faces() {
            st.by_size[f.len()].insert(f);
        }
        for f in x.faces() {
            st.refresh(f);
        }
        st
    }

    /// The unique coface of `tau` if `tau` is free.
    fn free_partner(&self, tau: Face) -> Option<Face> {
        if !self.faces.contains(&tau) || (tau.is_empty() && !self.allow_trivial) {
            return None;
        }
        let mut found = None;
        for u in self.ground.difference(tau).vertices() {
            let s = tau.with(u);
            if self.faces.contains(&s) {
                if found.is_some() {
                    return None;
                }
                found = Some(s);
            }
        }
        let sigma = found?;
        let maximal = self
            .ground
            .difference(sigma)
            .vertices()
            .all(|u| !self.faces.contains(&sigma.with(u)));
        maximal.then_some(sigma)
    }

    fn refresh(&mut self, tau: Face) {
        match self.free_partner(tau) {
            Some(sigma) => {
                self.free[tau.len()].insert(tau, sigma);
            }
            None => {
                self.free[tau.len()].swap_remove(&tau);
            }
        }
    }

    /// Faces of `sigma` of codimension one and two are the only ones whose
    /// freeness can change when `sigma` disappears.
    fn refresh_below(&mut self, sigma: Face) {
        for g in sigma.facets() {
            self.refresh(g);
            for h in g.facets() {
                self.refresh(h);
            }
        }
    }

    fn remove(&mut self, f: Face) {
        self.faces.remove(&f);
        self.by_size[f.len()].swap_remove(&f);
        self.free[f.len()].swap_remove(&f);
    }

    pub fn collapse(&mut self, tau: Face, sigma: Face) {
        debug_assert_eq!(self.free[tau.len()].get(&tau), Some(&sigma));
        self.remove(tau);
        self.remove(sigma);
        self.refresh_below(sigma);
    }

    /// Deletes a maximal face.
    pub fn remove_facet(&mut self, sigma: Face) {
        self.remove(sigma);
        self.refresh_below(sigma);
    }

    pub fn num_free(&self) -> usize {
        self.free.iter().map(IndexMap::len).sum()
    }

    /// Uniformly random free pair.
    pub fn random_free(&self, rng: &mut impl Rng) -> Option<(Face, Face)> {
        let total = self.num_free();
        if total == 0 {
            return None;
        }
        let mut k = rng.gen_range(0..total);
        for m in &self.free {
            if k < m.len() {
                let (&t, &s) = m.get_index(k).expect("in range");
                return Some((t, s));
            }
            k -= m.len();
        }
        unreachable!()
    }

    /// Uniformly random free pair among those whose coface is largest.
    pub fn random_top_free(&self, rng: &mut impl Rng) -> Option<(Face, Face)> {
        let m = self.free.iter().rev().find(|m| !m.is_empty())?;
        let (&t, &s) = m.get_index(rng.gen_range(0..m.len())).expect("in range");
        Some((t, s))
    }

    /// Uniformly random face of top cardinality (nonempty faces only).
    pub fn random_top_face(&self, rng: &mut impl Rng) -> Option<Face> {
        let m = self.by_size[1..].iter().rev().find(|m| !m.is_empty())?;
        Some(*m.get_index(rng.gen_range(0..m.len())).expect("in range"))
    }

    /// Number of nonempty faces left.
    pub fn num_nonempty(&self) -> usize {
        self.by_size[1..].iter().map(IndexSet::len).sum()
    }

    pub fn is_single_vertex(&self) -> bool {
        self.by_size[1].len() == 1 && self.num_nonempty() == 1
    }
}
