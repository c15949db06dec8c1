use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use super::catalog::catalog;
use super::cone::{double_cone, double_cone_certificate};
use super::stack::{stacking_certificate, stacking_move};
use crate::collapse::{free_faces, Certificate};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RefusalReason {
    /// `d >= n - 3`: such complexes always have a free face.
    HighDimension,
    /// A contractible graph is a tree, which has a leaf.
    DimensionOne,
    /// A contractible 0-dimensional complex is a point.
    DimensionZero,
    /// On at most 7 vertices contractible complexes are collapsible.
    FewVertices,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Refusal {
    pub n: u32,
    pub d: u32,
    pub reason: RefusalReason,
}

impl Refusal {
    pub fn citation(&self) -> &'static str {
        match self.reason {
            RefusalReason::HighDimension => {
                "a contractible complex on n vertices of dimension at least n-3 has a free face"
            }
            RefusalReason::DimensionOne => "a contractible 1-dimensional complex is a tree and has a leaf",
            RefusalReason::DimensionZero => "a contractible 0-dimensional complex is a single vertex",
            RefusalReason::FewVertices => {
                "on 7 or fewer vertices contractibility and collapsibility are equivalent"
            }
        }
    }
}

impl fmt::Display for Refusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.reason {
            RefusalReason::HighDimension if self.d >= self.n => "d >= n".to_string(),
            RefusalReason::HighDimension => format!("d = n-{}", self.n - self.d),
            RefusalReason::DimensionOne => "d = 1".to_string(),
            RefusalReason::DimensionZero => "d = 0".to_string(),
            RefusalReason::FewVertices => "n <= 7".to_string(),
        };
        write!(f, "Refusal: {what} ({})", self.citation())
    }
}

/// Decides whether a stuck complex exists for `(n, d)`.
pub fn refusal(n: u32, d: u32) -> Option<Refusal> {
    let reason = if d + 3 >= n {
        RefusalReason::HighDimension
    } else if d == 1 {
        RefusalReason::DimensionOne
    } else if d == 0 {
        RefusalReason::DimensionZero
    } else if n <= 7 {
        RefusalReason::FewVertices
    } else {
        return None;
    };
    Some(Refusal { n, d, reason })
}

/// A verified stuck complex with its anticollapse certificate.
#[derive(Clone, Debug)]
pub struct Construction {
    pub complex: SimplicialComplex,
    pub certificate: Certificate,
    /// Human-readable build steps.
    pub route: Vec<String>,
}

#[derive(Clone, Debug)]
pub enum Outcome {
    Built(Construction),
    Refused(Refusal),
}

/// Builds a `d`-dimensional complex on `n` vertices with no free faces that
/// anticollapses to the simplex, or explains why none exists. The seed picks
/// the facets to stack on and the vertices to double-cone at.
pub fn construct_stuck(n: u32, d: u32, seed: u64) -> Result<Outcome> {
    if n == 0 {
        return Err(Error::Input("n must be at least 1".into()));
    }
    if let Some(r) = refusal(n, d) {
        return Ok(Outcome::Refused(r));
    }
    if n > 63 {
        return Err(Error::Size(format!("n = {n} exceeds the 63-vertex label range")));
    }
    let mut r = rng::seeded(seed);
    let (start, cones) = if d + 4 == n {
        ("Y28_2_dual", d - 4)
    } else if d + 5 == n {
        ("B8_3", d - 3)
    } else {
        ("B8_2", d - 2)
    };
    let entry = catalog(start)?;
    let mut x = entry.complex;
    let mut cert = entry.anticollapse_certificate.expect("verified claim");
    let mut route = vec![format!("start {start} ({} vertices, dim {})", x.ground_size(), x.dim())];
    while x.ground_size() + (cones as usize) < n as usize {
        let top: Vec<_> = x.faces_of_dim(x.dim()).collect();
        let sigma = *top.choose(&mut r).expect("nonempty");
        cert = stacking_certificate(&x, sigma, &cert)?;
        x = stacking_move(&x, sigma)?;
        route.push(format!("stack on {sigma}"));
    }
    for _ in 0..cones {
        let verts = x.vertices();
        let v = verts[r.gen_range(0..verts.len())];
        cert = double_cone_certificate(&x, v, &cert)?;
        x = double_cone(&x, v)?;
        route.push(format!("double cone at {v}"));
    }
    verify(&x, &cert, n, d)?;
    Ok(Outcome::Built(Construction {
        complex: x,
        certificate: cert,
        route,
    }))
}

/// Dimension, vertex count, absence of free faces, and a replay ending at the
/// full simplex.
pub fn verify(x: &SimplicialComplex, cert: &Certificate, n: u32, d: u32) -> Result<()> {
    let bad = |m: String| Err(Error::Certificate(m));
    if x.dim() != d as isize {
        return bad(format!("dimension {} instead of {d}", x.dim()));
    }
    if x.ground_size() != n as usize || x.support().len() != n as usize {
        return bad(format!("{} vertices instead of {n}", x.support().len()));
    }
    if let Some(s) = free_faces(x).first() {
        return bad(format!("free face {} in {}", s.free, s.coface));
    }
    let end = cert.replay(x)?;
    if !end.is_full_simplex() {
        return bad("certificate does not end at the full simplex".into());
    }
    Ok(())
}
