//! Abstract simplicial complexes over an explicit ground set.

use std::collections::BTreeSet;
use std::fmt;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::face::{k_subsets, Face};

/// A downward-closed family of faces together with the vertex set it lives on.
///
/// The ground set may be strictly larger than the set of vertices actually
/// used; Alexander duality is taken against it. Two degenerate complexes are
/// distinguished: the *empty complex* `{∅}` and the *void complex* with no
/// faces at all (the dual of a full simplex).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: Face,
    faces: BTreeSet<Face>,
}

/// An edge of the Hasse diagram: `lower` is a facet of `upper`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HasseEdge {
    pub lower: Face,
    pub upper: Face,
}

impl SimplicialComplex {
    /// Downward closure of `facets`; the ground set is their union.
    pub fn from_facets<I: IntoIterator<Item = Face>>(facets: I) -> SimplicialComplex {
        let mut faces = BTreeSet::new();
        let mut ground = Face::EMPTY;
        faces.insert(Face::EMPTY);
        for f in facets {
            ground = ground.union(f);
            if faces.contains(&f) {
                continue;
            }
            faces.extend(f.subsets());
        }
        SimplicialComplex { ground, faces }
    }

    /// Like [`from_facets`](Self::from_facets) but taking raw label lists.
    pub fn from_lists<L: AsRef<[u32]>>(lists: &[L]) -> Result<SimplicialComplex> {
        let facets = lists
            .iter()
            .map(|l| Face::new(l.as_ref().iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialComplex::from_facets(facets))
    }

    /// Builds a complex from an explicit face family, checking closure.
    pub fn from_faces(ground: Face, faces: BTreeSet<Face>) -> Result<SimplicialComplex> {
        for &f in &faces {
            if !f.is_subset(ground) {
                return Err(Error::Input(format!("face {f} leaves the ground set")));
            }
            for g in f.facets() {
                if !faces.contains(&g) {
                    return Err(Error::Input(format!(
                        "not downward closed: {f} present but {g} missing"
                    )));
                }
            }
        }
        Ok(SimplicialComplex { ground, faces })
    }

    pub(crate) fn from_parts_unchecked(ground: Face, faces: BTreeSet<Face>) -> SimplicialComplex {
        SimplicialComplex { ground, faces }
    }

    /// The complex with no faces at all.
    pub fn void(ground: Face) -> SimplicialComplex {
        SimplicialComplex {
            ground,
            faces: BTreeSet::new(),
        }
    }

    /// The complex whose only face is `∅`.
    pub fn empty(ground: Face) -> SimplicialComplex {
        SimplicialComplex {
            ground,
            faces: BTreeSet::from([Face::EMPTY]),
        }
    }

    /// The full simplex on `1..=n`, i.e. `Δ_{n-1}`.
    pub fn simplex(n: u32) -> SimplicialComplex {
        SimplicialComplex::from_facets([Face::range(n)])
    }

    /// The boundary of the simplex on `1..=n` (a sphere of dimension `n - 2`).
    pub fn simplex_boundary(n: u32) -> SimplicialComplex {
        let full = Face::range(n);
        let mut c = SimplicialComplex::from_facets(full.facets());
        c.ground = full;
        c
    }

    /// Replaces the ground set by a superset of the current one.
    pub fn with_ground(mut self, ground: Face) -> Result<SimplicialComplex> {
        if !self.support().is_subset(ground) {
            return Err(Error::Input(format!(
                "ground set {ground} does not contain the support {}",
                self.support()
            )));
        }
        self.ground = ground;
        Ok(self)
    }

    pub fn ground(&self) -> Face {
        self.ground
    }

    /// Number of vertices in the ground set.
    pub fn ground_size(&self) -> usize {
        self.ground.len()
    }

    /// Union of all faces.
    pub fn support(&self) -> Face {
        self.faces_of_dim(0).fold(Face::EMPTY, Face::union)
    }

    pub fn vertices(&self) -> Vec<u32> {
        self.support().to_vec()
    }

    pub fn contains(&self, f: Face) -> bool {
        self.faces.contains(&f)
    }

    /// All faces in canonical order, `∅` first when present.
    pub fn faces(&self) -> impl DoubleEndedIterator<Item = Face> + '_ {
        self.faces.iter().copied()
    }

    pub(crate) fn face_set(&self) -> &BTreeSet<Face> {
        &self.faces
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Faces of dimension `k` (`k = -1` yields `∅` if present).
    pub fn faces_of_dim(&self, k: isize) -> impl Iterator<Item = Face> + '_ {
        let size = (k + 1).max(0) as u32;
        let first = Face::range(size.min(64));
        self.faces
            .range(first..)
            .copied()
            .take_while(move |f| f.len() == size as usize)
    }

    pub fn count_of_dim(&self, k: isize) -> usize {
        self.faces_of_dim(k).count()
    }

    /// `f[k]` is the number of `k`-faces, for `k = 0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let d = self.dim();
        (0..=d).map(|k| self.count_of_dim(k)).collect()
    }

    /// Largest face dimension; `-1` for both the empty and the void complex.
    pub fn dim(&self) -> isize {
        self.faces.last().map_or(-1, |f| f.dim())
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// True for `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.faces.len() == 1 && self.faces.contains(&Face::EMPTY)
    }

    pub fn is_single_vertex(&self) -> bool {
        self.faces.len() == 2 && self.count_of_dim(0) == 1
    }

    /// Is this the full simplex on its ground set?
    pub fn is_full_simplex(&self) -> bool {
        !self.ground.is_empty() && self.faces.contains(&self.ground)
    }

    /// Faces of the form `f ∪ {v}` that belong to the complex.
    pub fn cofacets(&self, f: Face) -> impl Iterator<Item = Face> + '_ {
        self.ground
            .difference(f)
            .vertices()
            .map(move |v| f.with(v))
            .filter(move |g| self.faces.contains(g))
    }

    pub fn is_maximal(&self, f: Face) -> bool {
        self.contains(f) && self.cofacets(f).next().is_none()
    }

    /// Maximal faces in canonical order.
    pub fn facets(&self) -> Vec<Face> {
        self.faces
            .iter()
            .copied()
            .filter(|&f| self.cofacets(f).next().is_none())
            .collect()
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets().iter().all(|f| f.dim() == d)
    }

    /// `(link(v, X), del(v, X))`, both over the ground set minus `v`.
    pub fn link_and_del(&self, v: u32) -> Result<(SimplicialComplex, SimplicialComplex)> {
        if !self.ground.contains(v) {
            return Err(Error::Input(format!("vertex {v} not in the ground set")));
        }
        let ground = self.ground.without(v);
        let mut link = BTreeSet::new();
        let mut del = BTreeSet::new();
        for &f in &self.faces {
            if f.contains(v) {
                continue;
            }
            del.insert(f);
            if self.faces.contains(&f.with(v)) {
                link.insert(f);
            }
        }
        Ok((
            SimplicialComplex { ground, faces: link },
            SimplicialComplex { ground, faces: del },
        ))
    }

    pub fn link(&self, v: u32) -> Result<SimplicialComplex> {
        Ok(self.link_and_del(v)?.0)
    }

    pub fn deletion(&self, v: u32) -> Result<SimplicialComplex> {
        Ok(self.link_and_del(v)?.1)
    }

    /// The join `X * Y`: all unions of a face of `X` with a face of `Y`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if !self.ground.is_disjoint(other.ground) {
            return Err(Error::Input(format!(
                "join needs disjoint ground sets, both contain {}",
                self.ground.intersection(other.ground)
            )));
        }
        let mut faces = BTreeSet::new();
        for &f in &self.faces {
            for &g in &other.faces {
                faces.insert(f.union(g));
            }
        }
        Ok(SimplicialComplex {
            ground: self.ground.union(other.ground),
            faces,
        })
    }

    /// Faces of dimension at most `j`.
    pub fn skeleton(&self, j: isize) -> SimplicialComplex {
        SimplicialComplex {
            ground: self.ground,
            faces: self.faces.iter().copied().filter(|f| f.dim() <= j).collect(),
        }
    }

    /// Closure of the top-dimensional faces.
    pub fn pure_part(&self) -> SimplicialComplex {
        let d = self.dim();
        let mut c = SimplicialComplex::from_facets(self.faces_of_dim(d).collect::<Vec<_>>());
        if self.is_void() {
            c.faces.clear();
        }
        c.ground = self.ground;
        c
    }

    /// Does the complex contain every `j`-subset of its ground set?
    pub fn has_complete_skeleton(&self, j: isize) -> bool {
        if j < 0 {
            return !self.is_void();
        }
        k_subsets(self.ground, (j + 1) as usize)
            .into_iter()
            .all(|f| self.faces.contains(&f))
    }

    /// All Hasse edges `(τ, σ)` with `τ` a facet of `σ`, including the edges
    /// from `∅` up to the vertices.
    pub fn hasse_edges(&self) -> Vec<HasseEdge> {
        let mut out = Vec::new();
        for &upper in &self.faces {
            for lower in upper.facets() {
                out.push(HasseEdge { lower, upper });
            }
        }
        out
    }

    /// Applies a vertex relabeling. `map` must be injective on the ground set.
    pub fn relabel<F: Fn(u32) -> u32>(&self, map: F) -> Result<SimplicialComplex> {
        let relabel_face = |f: Face| Face::new(f.vertices().map(&map));
        let ground = relabel_face(self.ground)?;
        if ground.len() != self.ground.len() {
            return Err(Error::Input("relabeling is not injective".into()));
        }
        let faces = self
            .faces
            .iter()
            .map(|&f| relabel_face(f))
            .collect::<Result<BTreeSet<_>>>()?;
        Ok(SimplicialComplex { ground, faces })
    }

    /// Order-preserving relabeling of the ground set onto `1..=|ground|`.
    pub fn compress_labels(&self) -> SimplicialComplex {
        let verts = self.ground.to_vec();
        let map = |v: u32| verts.binary_search(&v).expect("vertex in ground") as u32 + 1;
        self.relabel(map).expect("order-preserving map is injective")
    }

    /// `Σ_{k ≥ -1} (-1)^k f_k`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .map(|f| if f.dim().rem_euclid(2) == 0 { 1 } else { -1 })
            .sum()
    }

    /// Number of connected components of the 1-skeleton.
    pub fn connected_components(&self) -> usize {
        let verts = self.vertices();
        let idx = |v: u32| verts.binary_search(&v).unwrap();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for e in self.faces_of_dim(1) {
            let vs = e.to_vec();
            let (a, b) = (find(&mut parent, idx(vs[0])), find(&mut parent, idx(vs[1])));
            parent[a] = b;
        }
        (0..verts.len()).filter(|&i| find(&mut parent, i) == i).count()
    }

    /// Canonical text form: directives, then one facet per line.
    pub fn to_facet_file(&self) -> String {
        let mut out = String::new();
        let n = self.ground.len() as u32;
        if self.ground == Face::range(n) {
            if self.ground != self.support() || self.is_void() {
                out.push_str(&format!("ground {n}\n"));
            }
        } else if self.ground != self.support() || self.is_void() {
            out.push_str("vertices");
            for v in self.ground.vertices() {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
        }
        if self.is_void() {
            out.push_str("void\n");
            return out;
        }
        for f in self.facets() {
            if f.is_empty() {
                continue;
            }
            let line: Vec<String> = f.vertices().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the facet file format. Lines starting with `#` are comments; a
    /// leading `ground n` fixes the ground set to `1..=n`, `vertices v1 ...`
    /// fixes it to an explicit list and `void` declares the void complex.
    pub fn parse_facet_file(text: &str) -> Result<SimplicialComplex> {
        let mut ground: Option<Face> = None;
        let mut void = false;
        let mut facets = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = i + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let perr = |msg: String| Error::Parse { line: lineno, msg };
            let mut words = line.split_whitespace();
            let head = words.next().unwrap_or_default();
            match head {
                "ground" | "vertices" => {
                    if ground.is_some() || !facets.is_empty() || void {
                        return Err(perr("ground directive must precede facets".into()));
                    }
                    let nums = words
                        .map(|w| w.parse::<u32>().map_err(|e| perr(format!("{w}: {e}"))))
                        .collect::<Result<Vec<_>>>()?;
                    let g = if head == "ground" {
                        match nums.as_slice() {
                            [n] if *n <= crate::face::MAX_VERTEX => Face::range(*n),
                            _ => return Err(perr("expected `ground n` with n <= 64".into())),
                        }
                    } else {
                        Face::new(nums).map_err(|e| perr(e.to_string()))?
                    };
                    ground = Some(g);
                }
                "void" => {
                    if !facets.is_empty() {
                        return Err(perr("void complex cannot list facets".into()));
                    }
                    void = true;
                }
                _ => {
                    if void {
                        return Err(perr("void complex cannot list facets".into()));
                    }
                    let labels = line
                        .split_whitespace()
                        .map(|w| w.parse::<u32>().map_err(|e| perr(format!("{w}: {e}"))))
                        .collect::<Result<Vec<_>>>()?;
                    facets.push(Face::new(labels).map_err(|e| perr(e.to_string()))?);
                }
            }
        }
        let mut c = if void {
            SimplicialComplex::void(Face::EMPTY)
        } else {
            SimplicialComplex::from_facets(facets)
        };
        if let Some(g) = ground {
            c = c.with_ground(g)?;
        }
        Ok(c)
    }

    /// Hex SHA-256 over the canonical facet file.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.to_facet_file().as_bytes()))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(ground={}, facets=", self.ground)?;
        if self.is_void() {
            f.write_str("void)")
        } else {
            f.debug_list().entries(self.facets()).finish()?;
            f.write_str(")")
        }
    }
}
