//! Reduced simplicial homology over `Z`, `Q` and `Z/p`.
//!
//! The chain complex is augmented (`C_{-1}` is the coefficient ring spanned
//! by `∅`), so every group computed here is reduced homology.

mod modp;
mod snf;
mod span;

use std::collections::HashMap;
use std::fmt;

pub use span::RationalSpan;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{k_subsets, Face};


/// Matrix of `∂_i : C_i → C_{i-1}` in the canonical face order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub rows: Vec<Face>,
    pub cols: Vec<Face>,
    /// Row-major entries in `{-1, 0, 1}`.
    pub entries: Vec<i64>,
}

impl BoundaryMatrix {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols.len() + c]
    }

    /// Dense product `self * rhs` (requires `self.cols == rhs.rows`).
    pub fn compose(&self, rhs: &BoundaryMatrix) -> Vec<i64> {
        assert_eq!(self.cols, rhs.rows, "incompatible boundary matrices");
        let (n, k, m) = (self.nrows(), self.ncols(), rhs.ncols());
        let mut out = vec![0i64; n * m];
        for i in 0..n {
            for l in 0..k {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..m {
                    out[i * m + j] += a * rhs.get(l, j);
                }
            }
        }
        out
    }

    pub fn invariant_factors(&self) -> Vec<Option<u64>> {
        snf::integer_invariant_factors(self.nrows(), self.ncols(), &self.entries)
    }

    pub fn rank_mod_p(&self, p: u64) -> usize {
        modp::rank_mod_p(self.nrows(), self.ncols(), &self.entries, p)
    }
}

/// Signed boundary of a single face: `Σ_j (-1)^j [x_0, …, x̂_j, …, x_i]`.
pub fn face_boundary(f: Face) -> impl Iterator<Item = (Face, i64)> {
    f.vertices()
        .enumerate()
        .map(move |(j, v)| (f.without(v), if j % 2 == 0 { 1 } else { -1 }))
}

/// The `i`-th boundary matrix. For `i = 0` the single row is `∅`, which
/// realizes the augmentation.
pub fn boundary_matrix(x: &SimplicialComplex, i: usize) -> BoundaryMatrix {
    let rows: Vec<Face> = x.faces_of_dim(i as isize - 1).collect();
    let cols: Vec<Face> = x.faces_of_dim(i as isize).collect();
    let index: HashMap<Face, usize> = rows.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    let mut entries = vec![0i64; rows.len() * cols.len()];
    for (c, &f) in cols.iter().enumerate() {
        for (g, sign) in face_boundary(f) {
            let r = index[&g];
            entries[r * cols.len() + c] = sign;
        }
    }
    BoundaryMatrix {
        rows,
        cols,
        entries,
    }
}

/// Coefficients for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Integers,
    Rationals,
    /// `Z/p` for a prime `p`.
    Prime(u64),
}

impl Coefficients {
    pub fn validate(self) -> Result<Self> {
        match self {
            Coefficients::Prime(p) if !modp::is_prime(p) => {
                Err(Error::Input(format!("{p} is not prime")))
            }
            Coefficients::Prime(p) if p >= 1 << 32 => {
                Err(Error::Input(format!("prime {p} too large (must be < 2^32)")))
            }
            c => Ok(c),
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => f.write_str("Z"),
            Coefficients::Rationals => f.write_str("Q"),
            Coefficients::Prime(p) => write!(f, "Z/{p}"),
        }
    }
}

/// Reduced integral homology: free ranks plus torsion coefficients per degree
/// `0..=dim X`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
    /// Invariant factors greater than one.
    pub torsion: Vec<Vec<u64>>,
    /// Rank of reduced `H_{-1}`: 1 exactly for the complex `{∅}`.
    pub betti_minus_one: usize,
}

impl HomologyProfile {
    pub fn is_trivial(&self) -> bool {
        self.betti_minus_one == 0
            && self.betti.iter().all(|&b| b == 0)
            && self.torsion.iter().all(|t| t.is_empty())
    }

    pub fn is_rationally_trivial(&self) -> bool {
        self.betti_minus_one == 0 && self.betti.iter().all(|&b| b == 0)
    }

    /// Order of the torsion subgroup in degree `k`.
    pub fn torsion_order(&self, k: usize) -> u128 {
        self.torsion
            .get(k)
            .map_or(1, |t| t.iter().map(|&x| x as u128).product())
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (b, t)) in self.betti.iter().zip(&self.torsion).enumerate() {
            let ts: Vec<String> = t.iter().map(|x| x.to_string()).collect();
            writeln!(f, "dim {k}: betti={b} torsion=[{}]", ts.join(","))?;
        }
        Ok(())
    }
}

/// Rank and torsion of each boundary map `∂_0 … ∂_{dim+1}`.
fn boundary_data(x: &SimplicialComplex) -> Result<Vec<(usize, Vec<u64>)>> {
    let d = x.dim();
    let mut out = Vec::new();
    for i in 0..=(d + 1).max(0) as usize {
        let m = boundary_matrix(x, i);
        let factors = m.invariant_factors();
        let mut torsion = Vec::new();
        for f in &factors {
            match f {
                Some(v) if *v > 1 => torsion.push(*v),
                Some(_) => {}
                None => {
                    return Err(Error::Size(format!(
                        "torsion coefficient of ∂_{i} exceeds 64 bits"
                    )))
                }
            }
        }
        out.push((factors.len(), torsion));
    }
    Ok(out)
}

/// Reduced homology with integer coefficients via Smith normal form.
pub fn homology(x: &SimplicialComplex) -> Result<HomologyProfile> {
    if x.is_void() {
        return Ok(HomologyProfile::default());
    }
    let data = boundary_data(x)?;
    let d = x.dim();
    let mut profile = HomologyProfile {
        betti_minus_one: usize::from(x.is_empty_complex()),
        ..Default::default()
    };
    for k in 0..=d.max(-1) {
        let k = k as usize;
        let n_k = x.count_of_dim(k as isize);
        let rank_k = data[k].0;
        let (rank_next, torsion) = data.get(k + 1).cloned().unwrap_or_default();
        profile.betti.push(n_k - rank_k - rank_next);
        profile.torsion.push(torsion);
    }
    Ok(profile)
}

/// Reduced Betti numbers over a field, indexed from degree `-1`: entry `0`
/// is `H_{-1}`, entry `k + 1` is `H_k`, up to `dim X`.
pub fn field_betti(x: &SimplicialComplex, field: Coefficients) -> Result<Vec<usize>> {
    let field = field.validate()?;
    if x.is_void() {
        return Ok(Vec::new());
    }
    let d = x.dim();
    let rank = |i: usize| -> Result<usize> {
        let m = boundary_matrix(x, i);
        Ok(match field {
            Coefficients::Prime(p) => m.rank_mod_p(p),
            _ => m.invariant_factors().len(),
        })
    };
    let mut ranks = Vec::new();
    for i in 0..=(d + 1) as usize {
        ranks.push(rank(i)?);
    }
    let mut out = vec![1 - ranks[0]];
    for k in 0..=d {
        let k = k as usize;
        let n_k = x.count_of_dim(k as isize);
        out.push(n_k - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0));
    }
    Ok(out)
}

/// Does all reduced homology (degrees `≥ -1`) vanish over `ring`?
pub fn is_acyclic(x: &SimplicialComplex, ring: Coefficients) -> Result<bool> {
    let ring = ring.validate()?;
    match ring {
        Coefficients::Integers => Ok(homology(x)?.is_trivial()),
        _ => Ok(field_betti(x, ring)?.iter().all(|&b| b == 0)),
    }
}

/// Column of `∂_d σ` against a fixed row index of `(d-1)`-faces.
fn column(sigma: Face, rows: &HashMap<Face, usize>) -> Option<Vec<i64>> {
    let mut v = vec![0i64; rows.len()];
    for (g, s) in face_boundary(sigma) {
        v[*rows.get(&g)?] = s;
    }
    Some(v)
}

/// Would adding the `d`-face `sigma` to `x` create a new `d`-cycle over `Q`,
/// i.e. is its boundary column dependent on those of the `d`-faces already
/// present? Recomputes the full rank from scratch.
pub fn adds_top_cycle(x: &SimplicialComplex, sigma: Face) -> Result<bool> {
    let d = sigma.dim();
    if d < 0 {
        return Err(Error::Precondition("σ must be nonempty".into()));
    }
    if x.contains(sigma) {
        return Err(Error::Precondition(format!("{sigma} already in the complex")));
    }
    if let Some(g) = sigma.facets().find(|&g| !x.contains(g)) {
        return Err(Error::Precondition(format!(
            "boundary face {g} of {sigma} missing"
        )));
    }
    let rows: HashMap<Face, usize> = x
        .faces_of_dim(d - 1)
        .enumerate()
        .map(|(i, f)| (f, i))
        .collect();
    let mut span = RationalSpan::new(rows.len());
    for f in x.faces_of_dim(d) {
        span.insert(&column(f, &rows).expect("closed complex"));
    }
    Ok(span.contains(&column(sigma, &rows).expect("checked above")))
}

/// Incremental version of [`adds_top_cycle`] for a growing `d`-complex on a
/// fixed ground set whose `(d-1)`-skeleton is complete.
#[derive(Clone, Debug)]
pub struct TopCycleTracker {
    rows: HashMap<Face, usize>,
    span: RationalSpan,
}

impl TopCycleTracker {
    pub fn new(ground: Face, d: usize) -> Self {
        let rows: HashMap<Face, usize> = k_subsets(ground, d)
            .into_iter()
            .enumerate()
            .map(|(i, f)| (f, i))
            .collect();
        let span = RationalSpan::new(rows.len());
        TopCycleTracker { rows, span }
    }

    /// Number of accepted faces.
    pub fn rank(&self) -> usize {
        self.span.rank()
    }

    pub fn would_close_cycle(&mut self, sigma: Face) -> bool {
        let col = column(sigma, &self.rows).expect("face on the tracker's ground set");
        self.span.contains(&col)
    }

    /// Accepts `sigma` unless it closes a cycle; returns whether accepted.
    pub fn try_add(&mut self, sigma: Face) -> bool {
        let col = column(sigma, &self.rows).expect("face on the tracker's ground set");
        self.span.insert(&col)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(lists: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(lists).unwrap()
    }

    #[test]
    fn edge_boundary_sign_convention() {
        let m = boundary_matrix(&c(&[&[1, 2]]), 1);
        assert_eq!(m.rows, vec![Face::of(&[1]), Face::of(&[2])]);
        assert_eq!(m.entries, vec![-1, 1]);
        let aug = boundary_matrix(&c(&[&[1, 2]]), 0);
        assert_eq!(aug.entries, vec![1, 1]);
    }

    #[test]
    fn boundary_squared_vanishes_on_triangle() {
        let x = SimplicialComplex::simplex(3);
        let p = boundary_matrix(&x, 1).compose(&boundary_matrix(&x, 2));
        assert!(p.iter().all(|&v| v == 0));
    }

    #[test]
    fn spheres_have_one_top_class() {
        for n in 2..7u32 {
            let h = homology(&SimplicialComplex::simplex_boundary(n)).unwrap();
            let top = n as usize - 2;
            for (k, b) in h.betti.iter().enumerate() {
                assert_eq!(*b, usize::from(k == top), "∂Δ on {n} vertices, dim {k}");
            }
            assert!(h.torsion.iter().all(|t| t.is_empty()));
        }
    }

    #[test]
    fn degenerate_complexes() {
        let pt = c(&[&[1]]);
        for ring in [
            Coefficients::Integers,
            Coefficients::Rationals,
            Coefficients::Prime(2),
            Coefficients::Prime(3),
        ] {
            assert!(is_acyclic(&pt, ring).unwrap());
            assert!(!is_acyclic(&SimplicialComplex::simplex_boundary(3), ring).unwrap());
        }
        let e = SimplicialComplex::empty(Face::range(3));
        assert_eq!(homology(&e).unwrap().betti_minus_one, 1);
        assert!(!is_acyclic(&e, Coefficients::Rationals).unwrap());
        assert!(is_acyclic(&pt, Coefficients::Prime(4)).is_err());
    }

    #[test]
    fn two_points_have_betti_zero_one() {
        let x = c(&[&[1], &[2]]);
        assert_eq!(homology(&x).unwrap().betti, vec![1]);
        assert_eq!(field_betti(&x, Coefficients::Prime(2)).unwrap(), vec![0, 1]);
    }

    #[test]
    fn adds_top_cycle_examples() {
        let sphere = SimplicialComplex::simplex_boundary(4);
        let three: Vec<Face> = sphere.faces_of_dim(2).take(3).collect();
        let fourth = sphere.faces_of_dim(2).nth(3).unwrap();
        let x = SimplicialComplex::from_facets(three)
            .with_ground(Face::range(4))
            .unwrap();
        assert!(adds_top_cycle(&x, fourth).unwrap());

        let k4 = SimplicialComplex::simplex(4).skeleton(1);
        let mut facets = k4.facets();
        facets.push(Face::of(&[1, 2, 3]));
        let x = SimplicialComplex::from_facets(facets);
        assert!(!adds_top_cycle(&x, Face::of(&[1, 2, 4])).unwrap());

        assert!(adds_top_cycle(&c(&[&[1, 2]]), Face::of(&[1, 2, 3])).is_err());
        assert!(adds_top_cycle(&x, Face::of(&[1, 2, 3])).is_err());
    }

    #[test]
    fn tracker_matches_full_recomputation() {
        let ground = Face::range(5);
        let mut tracker = TopCycleTracker::new(ground, 2);
        let mut facets: Vec<Face> = SimplicialComplex::simplex(5).skeleton(1).facets();
        for sigma in k_subsets(ground, 3) {
            let x = SimplicialComplex::from_facets(facets.clone());
            let full = adds_top_cycle(&x, sigma).unwrap();
            assert_eq!(tracker.would_close_cycle(sigma), full);
            if tracker.try_add(sigma) {
                facets.push(sigma);
            }
        }
        assert_eq!(tracker.rank(), 6);
    }
}
