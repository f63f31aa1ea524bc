//! Combinatorial plane graphs.
//!
//! A [`PlaneGraph`] is a rotation system: every undirected edge `e` owns the two
//! half-edges (darts) `2e` and `2e + 1`, which are twins of each other. Around
//! every vertex the darts are arranged in clockwise drawing order via
//! `rot_next`. The face on the *right* of a dart `h` is `face(h)`; walking a
//! face uses `face_next(h) = rot_prev(twin(h))`, so bounded faces are walked
//! clockwise and the outer face counterclockwise (as drawn in the plane).
//!
//! Angles are identified with darts: the angle of dart `h` sits at
//! `origin(h)`, clockwise between `h` and `rot_next(h)`, inside `face(h)`.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type HalfEdgeId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

#[inline]
pub fn twin(h: HalfEdgeId) -> HalfEdgeId {
    h ^ 1
}

#[inline]
pub fn edge_of(h: HalfEdgeId) -> EdgeId {
    h >> 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// An angle (corner) of a plane graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Angle {
    pub at: VertexId,
    pub after: HalfEdgeId,
    pub face: FaceId,
}

/// How vertex colors are supplied to [`PlaneGraph::from_rotation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColorMode {
    Absent,
    /// Compute a bipartition; `s0` (or vertex 0) becomes black.
    Auto,
    Given(Vec<Color>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    names: Vec<String>,
    origin: Vec<VertexId>,
    rot_next: Vec<HalfEdgeId>,
    rot_prev: Vec<HalfEdgeId>,
    first_dart: Vec<HalfEdgeId>,
    face_of: Vec<FaceId>,
    faces: Vec<Vec<HalfEdgeId>>,
    outer: FaceId,
    outer_anchor: HalfEdgeId,
    color: Option<Vec<Color>>,
    specials: Option<(VertexId, VertexId)>,
}

impl PlaneGraph {
    /// Builds a simple plane graph from clockwise neighbor lists.
    ///
    /// The outer face is the face on the right of the dart `outer.0 -> outer.1`.
    pub fn from_rotation(
        names: Option<Vec<String>>,
        rotation: &[Vec<VertexId>],
        outer: (VertexId, VertexId),
        colors: ColorMode,
        specials: Option<(VertexId, VertexId)>,
    ) -> Result<PlaneGraph> {
        let n = rotation.len();
        if n == 0 {
            return Err(Error::Inconsistent("empty graph".into()));
        }
        let mut edge_id: HashMap<(VertexId, VertexId), EdgeId> = HashMap::new();
        let mut m = 0;
        for (u, nbrs) in rotation.iter().enumerate() {
            for (i, &v) in nbrs.iter().enumerate() {
                if v >= n {
                    return Err(Error::Inconsistent(format!("vertex {u} lists unknown vertex {v}")));
                }
                if v == u {
                    return Err(Error::Inconsistent(format!("self-loop at vertex {u}")));
                }
                if nbrs[..i].contains(&v) {
                    return Err(Error::Inconsistent(format!("vertex {u} lists {v} twice")));
                }
                let count = rotation[v].iter().filter(|&&x| x == u).count();
                if count != 1 {
                    return Err(Error::Inconsistent(format!(
                        "vertex {u} lists {v} but {v} lists {u} {count} times"
                    )));
                }
                if u < v {
                    edge_id.insert((u, v), m);
                    m += 1;
                }
            }
        }
        let dart_of = |u: VertexId, v: VertexId| -> HalfEdgeId {
            if u < v {
                2 * edge_id[&(u, v)]
            } else {
                2 * edge_id[&(v, u)] + 1
            }
        };
        let darts: Vec<Vec<HalfEdgeId>> = rotation
            .iter()
            .enumerate()
            .map(|(u, nbrs)| nbrs.iter().map(|&v| dart_of(u, v)).collect())
            .collect();
        if !rotation[outer.0].contains(&outer.1) {
            return Err(Error::Inconsistent(format!(
                "outer edge ({}, {}) is not an edge",
                outer.0, outer.1
            )));
        }
        let anchor = dart_of(outer.0, outer.1);
        let names = names.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        let mut g = PlaneGraph::from_darts(names, &darts, anchor)?;
        if let Some((s0, s1)) = specials {
            if s0 >= n || s1 >= n || s0 == s1 {
                return Err(Error::BadSpecials(format!("({s0}, {s1})")));
            }
            g.specials = Some((s0, s1));
        }
        match colors {
            ColorMode::Absent => {}
            ColorMode::Auto => {
                let root = specials.map(|s| s.0).unwrap_or(0);
                g.color = Some(g.bipartition(root).ok_or(Error::NotBipartite)?);
            }
            ColorMode::Given(c) => {
                if c.len() != n {
                    return Err(Error::Inconsistent("color list length differs from n".into()));
                }
                g.set_colors(c)?;
            }
        }
        Ok(g)
    }

    /// Builds a (possibly non-simple) plane graph from explicit dart rotations.
    /// Dart `h` must appear in exactly one list; `twin(h) = h ^ 1`.
    pub(crate) fn from_darts(
        names: Vec<String>,
        darts: &[Vec<HalfEdgeId>],
        outer_anchor: HalfEdgeId,
    ) -> Result<PlaneGraph> {
        let n = darts.len();
        let num_darts: usize = darts.iter().map(|d| d.len()).sum();
        if num_darts == 0 || num_darts % 2 != 0 {
            return Err(Error::Inconsistent("graph must have at least one edge".into()));
        }
        let mut origin = vec![usize::MAX; num_darts];
        let mut rot_next = vec![0; num_darts];
        let mut rot_prev = vec![0; num_darts];
        let mut first_dart = vec![usize::MAX; n];
        for (v, list) in darts.iter().enumerate() {
            for (i, &h) in list.iter().enumerate() {
                if h >= num_darts || origin[h] != usize::MAX {
                    return Err(Error::Inconsistent(format!("dart {h} misplaced")));
                }
                origin[h] = v;
                let nx = list[(i + 1) % list.len()];
                rot_next[h] = nx;
                rot_prev[nx] = h;
            }
            if let Some(&h) = list.first() {
                first_dart[v] = h;
            }
        }
        if first_dart.iter().any(|&h| h == usize::MAX) {
            return Err(Error::Disconnected);
        }
        // connectivity
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &h in &darts[v] {
                let w = origin[twin(h)];
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Disconnected);
        }
        let mut face_of = vec![usize::MAX; num_darts];
        let mut faces = Vec::new();
        for start in 0..num_darts {
            if face_of[start] != usize::MAX {
                continue;
            }
            let f = faces.len();
            let mut walk = Vec::new();
            let mut h = start;
            loop {
                face_of[h] = f;
                walk.push(h);
                h = rot_prev[twin(h)];
                if h == start {
                    break;
                }
            }
            faces.push(walk);
        }
        let m = num_darts / 2;
        let euler = n as i64 - m as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(Error::NonPlanar { euler });
        }
        if outer_anchor >= num_darts {
            return Err(Error::Inconsistent("outer anchor out of range".into()));
        }
        let outer = face_of[outer_anchor];
        Ok(PlaneGraph {
            names,
            origin,
            rot_next,
            rot_prev,
            first_dart,
            face_of,
            faces,
            outer,
            outer_anchor,
            color: None,
            specials: None,
        })
    }

    fn bipartition(&self, root: VertexId) -> Option<Vec<Color>> {
        let mut color: Vec<Option<Color>> = vec![None; self.n()];
        color[root] = Some(Color::Black);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for h in self.darts_at(v) {
                let w = self.dest(h);
                match color[w] {
                    None => {
                        color[w] = Some(cv.other());
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => return None,
                    _ => {}
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    fn set_colors(&mut self, c: Vec<Color>) -> Result<()> {
        for e in 0..self.m() {
            let (u, v) = self.endpoints(e);
            if c[u] == c[v] {
                return Err(Error::NotBipartite);
            }
        }
        self.color = Some(c);
        Ok(())
    }

    /// Returns a copy with the given special vertices.
    pub fn with_specials(&self, s0: VertexId, s1: VertexId) -> Result<PlaneGraph> {
        if s0 >= self.n() || s1 >= self.n() || s0 == s1 {
            return Err(Error::BadSpecials(format!("({s0}, {s1})")));
        }
        let mut g = self.clone();
        g.specials = Some((s0, s1));
        Ok(g)
    }

    /// Returns a copy colored by `mode`.
    pub fn with_colors(&self, mode: ColorMode) -> Result<PlaneGraph> {
        let mut g = self.clone();
        match mode {
            ColorMode::Absent => g.color = None,
            ColorMode::Auto => {
                let root = self.specials.map(|s| s.0).unwrap_or(0);
                g.color = Some(self.bipartition(root).ok_or(Error::NotBipartite)?);
            }
            ColorMode::Given(c) => {
                if c.len() != self.n() {
                    return Err(Error::Inconsistent("color list length differs from n".into()));
                }
                g.set_colors(c)?;
            }
        }
        Ok(g)
    }

    /// Returns a copy whose outer face is `face(anchor)`.
    pub fn with_outer(&self, anchor: HalfEdgeId) -> PlaneGraph {
        let mut g = self.clone();
        g.outer_anchor = anchor;
        g.outer = g.face_of[anchor];
        g
    }

    pub fn n(&self) -> usize {
        self.first_dart.len()
    }

    pub fn m(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn num_darts(&self) -> usize {
        self.origin.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.names.iter().position(|x| x == name)
    }

    pub fn origin(&self, h: HalfEdgeId) -> VertexId {
        self.origin[h]
    }

    pub fn dest(&self, h: HalfEdgeId) -> VertexId {
        self.origin[twin(h)]
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        (self.origin[2 * e], self.origin[2 * e + 1])
    }

    pub fn rot_next(&self, h: HalfEdgeId) -> HalfEdgeId {
        self.rot_next[h]
    }

    pub fn rot_prev(&self, h: HalfEdgeId) -> HalfEdgeId {
        self.rot_prev[h]
    }

    pub fn face_next(&self, h: HalfEdgeId) -> HalfEdgeId {
        self.rot_prev[twin(h)]
    }

    pub fn face_prev(&self, h: HalfEdgeId) -> HalfEdgeId {
        twin(self.rot_next[h])
    }

    pub fn face(&self, h: HalfEdgeId) -> FaceId {
        self.face_of[h]
    }

    pub fn face_walk(&self, f: FaceId) -> &[HalfEdgeId] {
        &self.faces[f]
    }

    pub fn faces(&self) -> &[Vec<HalfEdgeId>] {
        &self.faces
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer
    }

    pub fn outer_anchor(&self) -> HalfEdgeId {
        self.outer_anchor
    }

    pub fn angle(&self, h: HalfEdgeId) -> Angle {
        Angle { at: self.origin[h], after: h, face: self.face_of[h] }
    }

    pub fn first_dart(&self, v: VertexId) -> HalfEdgeId {
        self.first_dart[v]
    }

    /// Darts leaving `v` in clockwise order, starting at its first listed dart.
    pub fn darts_at(&self, v: VertexId) -> impl Iterator<Item = HalfEdgeId> + '_ {
        let start = self.first_dart[v];
        let mut cur = Some(start);
        std::iter::from_fn(move || {
            let h = cur?;
            let nx = self.rot_next[h];
            cur = if nx == start { None } else { Some(nx) };
            Some(h)
        })
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.darts_at(v).count()
    }

    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.darts_at(v).map(|h| self.dest(h)).collect()
    }

    /// Clockwise neighbor lists (meaningful for simple graphs).
    pub fn rotation(&self) -> Vec<Vec<VertexId>> {
        (0..self.n()).map(|v| self.neighbors(v)).collect()
    }

    /// First dart from `u` to `v`, if any.
    pub fn dart(&self, u: VertexId, v: VertexId) -> Option<HalfEdgeId> {
        self.darts_at(u).find(|&h| self.dest(h) == v)
    }

    pub fn colors(&self) -> Option<&[Color]> {
        self.color.as_deref()
    }

    pub fn color(&self, v: VertexId) -> Option<Color> {
        self.color.as_ref().map(|c| c[v])
    }

    pub fn specials(&self) -> Option<(VertexId, VertexId)> {
        self.specials
    }

    pub fn is_special(&self, v: VertexId) -> bool {
        matches!(self.specials, Some((a, b)) if a == v || b == v)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        for e in 0..self.m() {
            let (u, v) = self.endpoints(e);
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                return false;
            }
        }
        true
    }

    /// Same vertices, names, colors, specials, cyclic rotations and outer
    /// face, regardless of edge numbering. Both graphs must be simple.
    pub fn same_embedding(&self, other: &PlaneGraph) -> bool {
        if self.n() != other.n() || self.m() != other.m() || self.names != other.names {
            return false;
        }
        if self.color != other.color || self.specials != other.specials {
            return false;
        }
        for v in 0..self.n() {
            let (a, b) = (self.neighbors(v), other.neighbors(v));
            let same = a.len() == b.len()
                && (a.is_empty() || b.iter().position(|&x| x == a[0]).is_some_and(|k| (0..a.len()).all(|i| a[i] == b[(i + k) % b.len()])));
            if !same {
                return false;
            }
        }
        let h = self.outer_anchor();
        other.dart(self.origin(h), self.dest(h)).is_some_and(|d| other.face(d) == other.outer_face())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition(0).is_some()
    }

    /// Vertices on the outer face walk, in walk order (with repetitions).
    pub fn outer_vertices(&self) -> Vec<VertexId> {
        self.faces[self.outer].iter().map(|&h| self.origin[h]).collect()
    }

    pub fn on_outer_face(&self, v: VertexId) -> bool {
        self.faces[self.outer].iter().any(|&h| self.origin[h] == v)
    }

    /// The dart `w -> b` of edge `e` (requires colors).
    pub fn white_to_black(&self, e: EdgeId) -> Option<HalfEdgeId> {
        let c = self.color.as_ref()?;
        let h = 2 * e;
        Some(if c[self.origin[h]] == Color::White { h } else { h + 1 })
    }

    /// Same face walks as lists of vertices.
    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        self.faces[f].iter().map(|&h| self.origin[h]).collect()
    }

    fn specials_checked(&self) -> Result<(VertexId, VertexId)> {
        let (s0, s1) = self.specials.ok_or(Error::SpecialsMissing)?;
        if !self.on_outer_face(s0) || !self.on_outer_face(s1) {
            return Err(Error::SpecialsNotOnOuterFace);
        }
        Ok((s0, s1))
    }

    /// Splits the outer walk into the two arcs between the special vertices.
    ///
    /// Returns for every dart of the outer face the arc index: arc 0 is the arc
    /// starting at the clockwise successor of `s0` (walk order `s1 .. s0`),
    /// arc 1 is walk order `s0 .. s1`. Each special must occur once on the
    /// outer walk.
    pub fn outer_arcs(&self) -> Result<Vec<Option<u8>>> {
        let (s0, s1) = self.specials_checked()?;
        let walk = &self.faces[self.outer];
        let pos0: Vec<usize> = (0..walk.len()).filter(|&i| self.origin[walk[i]] == s0).collect();
        let pos1: Vec<usize> = (0..walk.len()).filter(|&i| self.origin[walk[i]] == s1).collect();
        if pos0.len() != 1 || pos1.len() != 1 {
            return Err(Error::BadSpecials("special vertex occurs more than once on the outer face".into()));
        }
        let mut arc = vec![None; self.num_darts()];
        let k = walk.len();
        let mut i = pos0[0];
        let mut current = 1u8;
        for _ in 0..k {
            if i == pos1[0] {
                current = 0;
            }
            arc[walk[i]] = Some(current);
            i = (i + 1) % k;
        }
        Ok(arc)
    }

    /// Outer-face walk starting at the dart leaving `v` (first occurrence).
    pub(crate) fn outer_walk_from(&self, v: VertexId) -> Vec<HalfEdgeId> {
        let walk = &self.faces[self.outer];
        let start = walk.iter().position(|&h| self.origin[h] == v).unwrap_or(0);
        walk[start..].iter().chain(walk[..start].iter()).copied().collect()
    }
}

/// The split-dual together with the maps relating it to its primal graph.
///
/// Dual dart `h` crosses primal dart `h` from `face(h)` to `face(twin(h))`.
#[derive(Clone, Debug)]
pub struct SplitDual {
    pub graph: PlaneGraph,
    pub o0: VertexId,
    pub o1: VertexId,
    /// Dual vertex hosting each primal dart's right-hand face.
    pub dual_vertex: Vec<VertexId>,
}

fn dual_vertices(g: &PlaneGraph) -> Result<(Vec<VertexId>, Vec<Option<VertexId>>, VertexId, VertexId)> {
    let arcs = g.outer_arcs()?;
    let mut face_vertex = vec![None; g.num_faces()];
    let mut next = 0;
    for (f, slot) in face_vertex.iter_mut().enumerate() {
        if f != g.outer_face() {
            *slot = Some(next);
            next += 1;
        }
    }
    let (o0, o1) = (next, next + 1);
    let dv = (0..g.num_darts())
        .map(|h| match face_vertex[g.face(h)] {
            Some(x) => x,
            None => {
                if arcs[h] == Some(0) {
                    o0
                } else {
                    o1
                }
            }
        })
        .collect();
    Ok((dv, face_vertex, o0, o1))
}

/// Dual graph with the outer-face vertex split into `o0` and `o1` along the
/// two outer arcs between the special vertices.
pub fn split_dual(g: &PlaneGraph) -> Result<SplitDual> {
    let (dv, face_vertex, o0, o1) = dual_vertices(g)?;
    let (s0, s1) = g.specials().unwrap();
    let nv = o1 + 1;
    let mut darts = vec![Vec::new(); nv];
    for (f, walk) in g.faces().iter().enumerate() {
        if let Some(x) = face_vertex[f] {
            darts[x] = walk.clone();
        }
    }
    for h in g.outer_walk_from(s0) {
        darts[dv[h]].push(h);
    }
    let mut names: Vec<String> = (0..g.num_faces())
        .filter(|&f| f != g.outer_face())
        .map(|f| format!("f{f}"))
        .collect();
    names.push("o0".into());
    names.push("o1".into());
    // the dual face on the right of dual dart h contains primal dest(h)
    let anchor = g.darts_at(s0).next().map(twin).unwrap();
    let mut graph = PlaneGraph::from_darts(names, &darts, anchor)?;
    let _ = s1;
    graph.specials = Some((o0, o1));
    Ok(SplitDual { graph, o0, o1, dual_vertex: dv })
}

/// Completion: the primal graph and its split-dual superimposed, with an
/// edge-vertex at every primal/dual crossing and the extra edge `o0 o1`.
#[derive(Clone, Debug)]
pub struct Completion {
    pub graph: PlaneGraph,
    pub split: SplitDual,
    /// Vertex offset of edge-vertices (`edge_vertex(e) = edge_base + e`).
    pub edge_base: VertexId,
    /// Vertex offset of split-dual vertices.
    pub dual_base: VertexId,
    /// Edge id of the exceptional edge joining `o0` and `o1`.
    pub exceptional_edge: EdgeId,
}

impl Completion {
    /// Completion face corresponding to primal angle `h`.
    pub fn face_of_angle(&self, h: HalfEdgeId) -> FaceId {
        self.graph.face(2 * h)
    }
}

pub fn completion(g: &PlaneGraph) -> Result<Completion> {
    let split = split_dual(g)?;
    let (s0, _) = g.specials().unwrap();
    let (n, m) = (g.n(), g.m());
    let edge_base = n;
    let dual_base = n + m;
    let nv = dual_base + split.graph.n();
    let mut darts = vec![Vec::new(); nv];
    // primal halves: edge id h joins origin(h) and edge-vertex(edge_of(h))
    for (v, list) in darts.iter_mut().enumerate().take(n) {
        *list = g.darts_at(v).map(|h| 2 * h).collect();
    }
    let dual_half = |h: HalfEdgeId| 2 * (2 * m + h);
    for e in 0..m {
        let (h, t) = (2 * e, 2 * e + 1);
        darts[edge_base + e] = vec![2 * t + 1, dual_half(h), 2 * h + 1, dual_half(t)];
    }
    for (f, walk) in g.faces().iter().enumerate() {
        if f != g.outer_face() {
            let x = dual_base + split.dual_vertex[walk[0]];
            darts[x] = walk.iter().map(|&h| dual_half(h) + 1).collect();
        }
    }
    let exceptional_edge = 4 * m;
    for h in g.outer_walk_from(s0) {
        darts[dual_base + split.dual_vertex[h]].push(dual_half(h) + 1);
    }
    darts[dual_base + split.o0].push(2 * exceptional_edge);
    darts[dual_base + split.o1].push(2 * exceptional_edge + 1);
    let mut names: Vec<String> = g.names().to_vec();
    names.extend((0..m).map(|e| format!("e{e}")));
    names.extend(split.graph.names().iter().cloned());
    let s0_outer = g.outer_walk_from(s0)[0];
    let graph = PlaneGraph::from_darts(names, &darts, 2 * s0_outer)?;
    Ok(Completion { graph, split, edge_base, dual_base, exceptional_edge })
}

/// The graph whose vertices are the vertices, edges and faces of `g`; every
/// edge-vertex is joined to its two endpoints and to the face on the right
/// of its white-to-black dart.
#[derive(Clone, Debug)]
pub struct Suspension {
    pub graph: PlaneGraph,
    pub edge_base: VertexId,
    pub face_base: VertexId,
}

impl Suspension {
    /// S_G edge joining edge-vertex `e` to `origin(2e + side)` (side 0/1) or,
    /// for `side == 2`, to its face.
    pub fn link(&self, e: EdgeId, side: usize) -> EdgeId {
        3 * e + side
    }
}

pub fn suspension_sg(g: &PlaneGraph) -> Result<Suspension> {
    g.colors().ok_or(Error::NotBipartite)?;
    g.specials().ok_or(Error::SpecialsMissing)?;
    let (n, m, f) = (g.n(), g.m(), g.num_faces());
    let edge_base = n;
    let face_base = n + m;
    let mut darts = vec![Vec::new(); n + m + f];
    // S edge 3e + s (s in {0,1}) joins x_e to origin(2e + s); 3e + 2 joins x_e to its face.
    // Dart 2k leaves x_e.
    for (v, list) in darts.iter_mut().enumerate().take(n) {
        *list = g.darts_at(v).map(|h| 2 * (3 * edge_of(h) + (h & 1)) + 1).collect();
    }
    for e in 0..m {
        let d = g.white_to_black(e).unwrap();
        let to_b = 2 * (3 * e + (twin(d) & 1));
        let to_w = 2 * (3 * e + (d & 1));
        let to_f = 2 * (3 * e + 2);
        darts[edge_base + e] = vec![to_b, to_f, to_w];
    }
    for (fi, walk) in g.faces().iter().enumerate() {
        darts[face_base + fi] = walk
            .iter()
            .filter(|&&h| g.white_to_black(edge_of(h)) == Some(h))
            .map(|&h| 2 * (3 * edge_of(h) + 2) + 1)
            .collect();
    }
    let mut names: Vec<String> = g.names().to_vec();
    names.extend((0..m).map(|e| format!("e{e}")));
    names.extend((0..f).map(|x| format!("f{x}")));
    let anchor = 2 * (3 * edge_of(g.outer_anchor()) + (g.outer_anchor() & 1)) + 1;
    let mut graph = PlaneGraph::from_darts(names, &darts, anchor)?;
    graph.specials = g.specials();
    Ok(Suspension { graph, edge_base, face_base })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicates {
    pub is_quadrangulation: bool,
    pub is_weakly_2connected: bool,
    pub has_block_with_right_chord: bool,
    pub specials_adjacent: bool,
}

/// A simple bipartite plane graph whose face walks all have length 4.
///
/// Apart from 4-cycles bounding faces this admits only the 2-path, whose
/// single face walk `s0 v s1 v` also has length 4.
pub fn is_quadrangulation(g: &PlaneGraph) -> bool {
    g.is_simple() && g.is_bipartite() && g.faces().iter().all(|w| w.len() == 4)
}

fn adjacency(g: &PlaneGraph) -> Vec<Vec<VertexId>> {
    (0..g.n()).map(|v| g.neighbors(v)).collect()
}

fn connected_without(adj: &[Vec<VertexId>], removed: &[VertexId]) -> bool {
    let n = adj.len();
    let Some(start) = (0..n).find(|v| !removed.contains(v)) else {
        return true;
    };
    let mut seen = vec![false; n];
    for &r in removed {
        seen[r] = true;
    }
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// 2-connected after adding the edge `s0 s1`.
pub fn is_weakly_2connected(g: &PlaneGraph) -> Result<bool> {
    let (s0, s1) = g.specials().ok_or(Error::SpecialsMissing)?;
    let mut adj = adjacency(g);
    if !adj[s0].contains(&s1) {
        adj[s0].push(s1);
        adj[s1].push(s0);
    }
    if g.n() < 3 {
        return Ok(g.n() == 2);
    }
    Ok((0..g.n()).all(|v| connected_without(&adj, &[v])))
}

/// Components of `g - {a, b}` (vertex lists), ignoring the removed vertices.
fn components_without(adj: &[Vec<VertexId>], a: VertexId, b: VertexId) -> Vec<Vec<VertexId>> {
    let n = adj.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if s == a || s == b || comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            i += 1;
            for &w in &adj[v] {
                if w != a && w != b && comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                }
            }
        }
        out.push(members);
    }
    out
}

/// Detects an edge `ab` (a black, b white) such that removing `a` and `b`
/// cuts off a component `C` from both specials, with `C` on the right of
/// the traversal `b -> a` at both ends: turning clockwise from `b -> a` at
/// `b`, and counterclockwise from `a -> b` at `a`, the first neighbor other
/// than `a`, `b` lies in `C`.
pub fn has_block_with_right_chord(g: &PlaneGraph) -> Result<bool> {
    Ok(right_chord_witness(g)?.is_some())
}

/// Witness `(edge, component)` for [`has_block_with_right_chord`].
pub fn right_chord_witness(g: &PlaneGraph) -> Result<Option<(EdgeId, Vec<VertexId>)>> {
    let (s0, s1) = g.specials().ok_or(Error::SpecialsMissing)?;
    g.colors().ok_or(Error::NotBipartite)?;
    let adj = adjacency(g);
    for e in 0..g.m() {
        let wb = g.white_to_black(e).unwrap();
        let (b, a) = (g.origin(wb), g.dest(wb));
        let first_other = |d: HalfEdgeId, clockwise: bool| -> Option<VertexId> {
            let mut h = d;
            loop {
                h = if clockwise { g.rot_next(h) } else { g.rot_prev(h) };
                if h == d {
                    return None;
                }
                let x = g.dest(h);
                if x != a && x != b {
                    return Some(x);
                }
            }
        };
        let (Some(at_b), Some(at_a)) = (first_other(wb, true), first_other(twin(wb), false)) else {
            continue;
        };
        for comp in components_without(&adj, a, b) {
            if comp.contains(&s0) || comp.contains(&s1) {
                continue;
            }
            if comp.contains(&at_b) && comp.contains(&at_a) {
                return Ok(Some((e, comp)));
            }
        }
    }
    Ok(None)
}

pub fn predicates(g: &PlaneGraph) -> Result<Predicates> {
    let (s0, s1) = g.specials().ok_or(Error::SpecialsMissing)?;
    let has_colors = g.colors().is_some();
    Ok(Predicates {
        is_quadrangulation: is_quadrangulation(g),
        is_weakly_2connected: is_weakly_2connected(g)?,
        has_block_with_right_chord: if has_colors { has_block_with_right_chord(g)? } else { false },
        specials_adjacent: g.dart(s0, s1).is_some(),
    })
}

/// Canonical code of a rooted plane graph.
///
/// Two graphs receive equal codes iff there is an orientation-preserving
/// isomorphism between them that respects the outer face, the special
/// vertices and the colors. Reflections are not factored out.
pub fn canonical_code(g: &PlaneGraph) -> Vec<u8> {
    let outer = g.outer_face();
    let candidates: Vec<HalfEdgeId> = g
        .face_walk(outer)
        .iter()
        .copied()
        .filter(|&h| match g.specials() {
            Some((s0, _)) => g.origin(h) == s0,
            None => true,
        })
        .collect();
    let mut best: Option<Vec<u32>> = None;
    for root in candidates {
        let code = code_from_root(g, root);
        if best.as_ref().map_or(true, |b| code < *b) {
            best = Some(code);
        }
    }
    best.unwrap_or_default()
        .into_iter()
        .flat_map(|x| x.to_le_bytes())
        .collect()
}

fn code_from_root(g: &PlaneGraph, root: HalfEdgeId) -> Vec<u32> {
    let n = g.n();
    let mut number = vec![u32::MAX; n];
    let mut entry = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    number[g.origin(root)] = 0;
    entry[g.origin(root)] = root;
    order.push(g.origin(root));
    let mut code = vec![n as u32, g.m() as u32];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        let special_flag = match g.specials() {
            Some((s0, _)) if s0 == v => 1,
            Some((_, s1)) if s1 == v => 2,
            _ => 0,
        };
        let color_flag = match g.color(v) {
            None => 0,
            Some(Color::Black) => 1,
            Some(Color::White) => 2,
        };
        code.push(u32::MAX - 1);
        code.push(special_flag);
        code.push(color_flag);
        let start = entry[v];
        let mut h = start;
        loop {
            let w = g.dest(h);
            if number[w] == u32::MAX {
                number[w] = order.len() as u32;
                entry[w] = twin(h);
                order.push(w);
            }
            code.push(number[w]);
            code.push(u32::from(g.face(h) == g.outer_face()));
            h = g.rot_next(h);
            if h == start {
                break;
            }
        }
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> PlaneGraph {
        // s0=0, a=1, s1=2, b=3
        PlaneGraph::from_rotation(
            None,
            &[vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]],
            (0, 3),
            ColorMode::Auto,
            Some((0, 2)),
        )
        .unwrap()
    }

    #[test]
    fn c4_faces() {
        let g = c4();
        assert_eq!(g.num_faces(), 2);
        assert!(g.faces().iter().all(|w| w.len() == 4));
        let outer: Vec<_> = g.outer_walk_from(0).iter().map(|&h| g.origin(h)).collect();
        assert_eq!(outer, vec![0, 3, 2, 1]);
        assert!(is_quadrangulation(&g));
    }

    #[test]
    fn two_path_single_face() {
        let g = PlaneGraph::from_rotation(None, &[vec![1], vec![0, 2], vec![1]], (0, 1), ColorMode::Auto, Some((0, 2)))
            .unwrap();
        assert_eq!(g.num_faces(), 1);
        assert_eq!(g.face_walk(0).len(), 4);
        assert!(is_quadrangulation(&g));
    }

    #[test]
    fn asymmetric_rotation_is_inconsistent() {
        let r = PlaneGraph::from_rotation(None, &[vec![1, 2], vec![0], vec![1]], (0, 1), ColorMode::Absent, None);
        assert!(matches!(r, Err(Error::Inconsistent(_))));
    }

    #[test]
    fn disconnected_and_nonplanar() {
        let r = PlaneGraph::from_rotation(None, &[vec![1], vec![0], vec![3], vec![2]], (0, 1), ColorMode::Absent, None);
        assert_eq!(r, Err(Error::Disconnected));
        // K4 with a non-planar rotation
        let r = PlaneGraph::from_rotation(
            None,
            &[vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]],
            (0, 1),
            ColorMode::Absent,
            None,
        );
        assert!(matches!(r, Err(Error::NonPlanar { .. })));
    }

    #[test]
    fn triangle_not_bipartite() {
        let r = PlaneGraph::from_rotation(None, &[vec![1, 2], vec![2, 0], vec![0, 1]], (0, 1), ColorMode::Auto, None);
        assert_eq!(r, Err(Error::NotBipartite));
    }

    #[test]
    fn c4_split_dual_and_completion() {
        let g = c4();
        let sd = split_dual(&g).unwrap();
        assert_eq!(sd.graph.n(), 3);
        assert_eq!(sd.graph.m(), 4);
        assert_eq!(sd.graph.degree(sd.o0), 2);
        assert_eq!(sd.graph.degree(sd.o1), 2);
        let c = completion(&g).unwrap();
        assert_eq!(c.graph.n(), 11);
        assert_eq!(c.graph.m(), 17);
        for e in 0..g.m() {
            assert_eq!(c.graph.degree(c.edge_base + e), 4);
        }
        assert_eq!(c.graph.num_faces(), 2 * g.m());
    }

    #[test]
    fn missing_specials() {
        let g = PlaneGraph::from_rotation(None, &[vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]], (0, 3), ColorMode::Auto, None)
            .unwrap();
        assert_eq!(split_dual(&g).err(), Some(Error::SpecialsMissing));
    }

    #[test]
    fn suspension_of_single_edge_is_a_star() {
        let g = PlaneGraph::from_rotation(None, &[vec![1], vec![0]], (0, 1), ColorMode::Auto, Some((0, 1))).unwrap();
        let s = suspension_sg(&g).unwrap();
        assert_eq!(s.graph.n(), 4);
        assert_eq!(s.graph.degree(s.edge_base), 3);
    }

    #[test]
    fn canonical_code_distinguishes() {
        let g = c4();
        let relabeled = PlaneGraph::from_rotation(
            None,
            &[vec![3, 1], vec![2, 0], vec![1, 3], vec![0, 2]],
            (2, 1),
            ColorMode::Auto,
            Some((2, 0)),
        )
        .unwrap();
        assert_eq!(canonical_code(&g), canonical_code(&relabeled));
        let path = PlaneGraph::from_rotation(None, &[vec![1], vec![0, 2], vec![1]], (0, 1), ColorMode::Auto, Some((0, 2)))
            .unwrap();
        assert_ne!(canonical_code(&g), canonical_code(&path));
    }
}
