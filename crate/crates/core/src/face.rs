//! Faces as vertex bitsets.
//!
//! Vertex `v` (1-based) occupies bit `v - 1`, so a face is a single `u64` and
//! labels are limited to `1..=64`. Every complex this crate manipulates lives
//! inside a simplex whose full face lattice has `2^n` members, so the label
//! cap is never the binding constraint.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest admissible vertex label.
pub const MAX_VERTEX: u32 = 64;

/// A simplex, stored as the set of its vertex labels.
///
/// Faces order first by cardinality and then lexicographically by their
/// sorted vertex lists, which is the canonical order used for boundary
/// matrices, facet files and digests.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn new<I: IntoIterator<Item = u32>>(vertices: I) -> Result<Face> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > MAX_VERTEX {
                return Err(Error::Input(format!(
                    "vertex label {v} outside 1..={MAX_VERTEX}"
                )));
            }
            let bit = 1u64 << (v - 1);
            if bits & bit != 0 {
                return Err(Error::Input(format!("duplicate vertex {v} in face")));
            }
            bits |= bit;
        }
        Ok(Face(bits))
    }

    /// Builds a face from a slice of labels, panicking on malformed input.
    /// Meant for literals in code and tests.
    pub fn of(vertices: &[u32]) -> Face {
        Face::new(vertices.iter().copied()).expect("malformed face literal")
    }

    pub fn vertex(v: u32) -> Face {
        Face::of(&[v])
    }

    /// The full simplex on `1..=n`.
    pub fn range(n: u32) -> Face {
        assert!(n <= MAX_VERTEX);
        if n == 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub const fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|σ| - 1`; the empty face has dimension -1.
    pub const fn dim(self) -> isize {
        self.0.count_ones() as isize - 1
    }

    pub const fn contains(self, v: u32) -> bool {
        v >= 1 && v <= MAX_VERTEX && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn with(self, v: u32) -> Face {
        debug_assert!((1..=MAX_VERTEX).contains(&v));
        Face(self.0 | (1u64 << (v - 1)))
    }

    pub fn without(self, v: u32) -> Face {
        debug_assert!((1..=MAX_VERTEX).contains(&v));
        Face(self.0 & !(1u64 << (v - 1)))
    }

    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest vertex label, if any.
    pub fn min_vertex(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    pub fn max_vertex(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.vertices().collect()
    }

    /// Codimension-one faces, i.e. the faces obtained by deleting one vertex,
    /// in order of the deleted vertex.
    pub fn facets(self) -> impl Iterator<Item = Face> {
        self.vertices().map(move |v| self.without(v))
    }

    /// All subsets, including the empty face and the face itself.
    pub fn subsets(self) -> Subsets {
        Subsets {
            full: self.0,
            next: Some(0),
        }
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Equal cardinality: the set owning the lowest differing vertex has
        // the smaller entry at the first differing position.
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl serde::Serialize for Face {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.vertices())
    }
}

impl<'de> serde::Deserialize<'de> for Face {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<u32>::deserialize(d)?;
        Face::new(labels).map_err(serde::de::Error::custom)
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Enumerates the submasks of `full` in increasing
/// numeric order.
pub struct Subsets {
    full: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        self.next = if cur == self.full {
            None
        } else {
            Some((cur.wrapping_sub(self.full)) & self.full)
        };
        Some(Face(cur))
    }
}

/// All `k`-element subsets of `ground`, in canonical (lexicographic) order.
pub fn k_subsets(ground: Face, k: usize) -> Vec<Face> {
    let verts = ground.to_vec();
    let mut out = Vec::new();
    if k > verts.len() {
        return out;
    }
    let m = verts.len();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(Face(
            idx.iter().fold(0u64, |acc, &i| acc | (1u64 << (verts[i] - 1))),
        ));
        // rightmost index that can still advance
        let Some(i) = (0..k).rev().find(|&i| idx[i] < m - (k - i)) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
