//! Paths to the sinks, face-counting coordinates and 2-book embeddings.
//!
//! For a vertex `v` the paths `P_0(v)` and `P_1(v)` follow the out-edges of
//! each color to `s0` and `s1`. Together they cut the bounded faces into
//! the region `R_0(v)` right of `P_0(v)` and `R_1(v)` right of `P_1(v)`;
//! `f_i(v)` counts the faces of `R_i(v)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::embed::{edge_of, twin, Color, EdgeId, FaceId, HalfEdgeId, PlaneGraph, VertexId};
use crate::error::{Error, Result};
use crate::rules::{induce, validate, AngleLabeling, EdgeStructure, Flavor};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionData {
    /// `paths[i][v]` is `P_i(v)` from `v` to `s_i`; `None` for `s_{1-i}`.
    pub paths: [Vec<Option<Vec<VertexId>>>; 2],
    /// `f[i][v]`, with the fixed values at the specials.
    pub f: [Vec<i64>; 2],
    /// Bounded faces of `R_i(v)`; empty for the specials.
    pub regions: [Vec<BTreeSet<FaceId>>; 2],
}

fn out_dart(g: &PlaneGraph, es: &EdgeStructure, v: VertexId, c: u8) -> Option<HalfEdgeId> {
    g.darts_at(v).find(|&h| es.dart_color[h] == Some(c))
}

/// Darts of `P_c(v)`, following the unique out-dart of color `c`.
fn path_darts(g: &PlaneGraph, es: &EdgeStructure, v: VertexId, c: u8, sink: VertexId) -> Result<Vec<HalfEdgeId>> {
    let mut darts = Vec::new();
    let mut seen = vec![false; g.n()];
    let mut x = v;
    while x != sink {
        if seen[x] {
            return Err(Error::InvalidLabeling(format!("path of color {c} from {} cycles", g.name(v))));
        }
        seen[x] = true;
        let h = out_dart(g, es, x, c)
            .ok_or_else(|| Error::InvalidLabeling(format!("vertex {} has no out-edge of color {c}", g.name(x))))?;
        darts.push(h);
        x = g.dest(h);
    }
    Ok(darts)
}

/// Bounded faces reachable from the faces right of `seeds` without crossing
/// an edge of `barrier`.
///
/// `R_0(v)` is seeded from the right of `P_0(v)` and the left of `P_1(v)`.
/// For a strong labeling either side alone gives the same set; when the paths
/// share a bidirected edge the one-sided seeding drops faces.
fn flood(g: &PlaneGraph, seeds: &[HalfEdgeId], barrier: &[bool]) -> BTreeSet<FaceId> {
    let outer = g.outer_face();
    let mut seen = BTreeSet::new();
    let mut stack: Vec<FaceId> = seeds.iter().map(|&h| g.face(h)).filter(|&f| f != outer).collect();
    while let Some(f) = stack.pop() {
        if !seen.insert(f) {
            continue;
        }
        for &h in g.face_walk(f) {
            let other = g.face(twin(h));
            if !barrier[edge_of(h)] && other != outer && !seen.contains(&other) {
                stack.push(other);
            }
        }
    }
    seen
}

fn regions_of(g: &PlaneGraph, es: &EdgeStructure) -> Result<RegionData> {
    let (s0, s1) = g.specials().ok_or(Error::SpecialsMissing)?;
    let n = g.n();
    let bounded = g.num_faces() as i64 - 1;
    let sinks = [s0, s1];
    let mut paths: [Vec<Option<Vec<VertexId>>>; 2] = [vec![None; n], vec![None; n]];
    let mut f = [vec![0i64; n], vec![0i64; n]];
    let mut regions: [Vec<BTreeSet<FaceId>>; 2] = [vec![BTreeSet::new(); n], vec![BTreeSet::new(); n]];
    for v in 0..n {
        for c in 0..2 {
            if v != sinks[1 - c] {
                let darts = path_darts(g, es, v, c as u8, sinks[c])?;
                let mut p = vec![v];
                p.extend(darts.iter().map(|&h| g.dest(h)));
                paths[c][v] = Some(p);
            }
        }
        if v == s0 || v == s1 {
            continue;
        }
        let d0 = path_darts(g, es, v, 0, s0)?;
        let d1 = path_darts(g, es, v, 1, s1)?;
        let mut barrier = vec![false; g.m()];
        for &h in d0.iter().chain(&d1) {
            barrier[edge_of(h)] = true;
        }
        for (c, right, left) in [(0, &d0, &d1), (1, &d1, &d0)] {
            let seeds: Vec<HalfEdgeId> = right.iter().copied().chain(left.iter().map(|&h| twin(h))).collect();
            regions[c][v] = flood(g, &seeds, &barrier);
            f[c][v] = regions[c][v].len() as i64;
        }
    }
    f[0][s0] = -1;
    f[1][s1] = -1;
    f[1][s0] = bounded + 1;
    f[0][s1] = bounded + 1;
    Ok(RegionData { paths, f, regions })
}

fn strong_structure(g: &PlaneGraph, l: &AngleLabeling) -> Result<EdgeStructure> {
    let report = validate(g, l, Flavor::Strong)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidLabeling(format!("{}: {}", v.rule, v.message)));
    }
    induce(g, l, Flavor::Strong)
}

/// Paths, regions and face counts of a strong labeling.
pub fn paths_and_regions(g: &PlaneGraph, l: &AngleLabeling) -> Result<RegionData> {
    let es = strong_structure(g, l)?;
    regions_of(g, &es)
}

/// The same quantities for a generalized labeling, following colored darts
/// (both directions of a bidirected edge included).
pub fn generalized_regions(g: &PlaneGraph, l: &AngleLabeling) -> Result<RegionData> {
    let report = validate(g, l, Flavor::Generalized)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidLabeling(format!("{}: {}", v.rule, v.message)));
    }
    let es = induce(g, l, Flavor::Generalized)?;
    regions_of(g, &es)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BookEmbedding {
    /// Vertices from left to right.
    pub spine: Vec<VertexId>,
    /// `(edge, page)`; an edge may sit on both pages.
    pub pages: Vec<(EdgeId, u8)>,
}

impl BookEmbedding {
    /// Spine position of every vertex.
    pub fn positions(&self, n: usize) -> Vec<usize> {
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.spine.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

fn layout(g: &PlaneGraph, es: &EdgeStructure, f1: &[i64]) -> BookEmbedding {
    let mut spine: Vec<VertexId> = (0..g.n()).collect();
    spine.sort_by_key(|&v| (f1[v], v));
    let mut pages = Vec::new();
    for e in 0..g.m() {
        let mut cs: Vec<u8> = [es.dart_color[2 * e], es.dart_color[2 * e + 1]].into_iter().flatten().collect();
        cs.sort_unstable();
        cs.dedup();
        pages.extend(cs.into_iter().map(|c| (e, c)));
    }
    BookEmbedding { spine, pages }
}

/// The 2-book embedding of a strong labeling: spine by increasing `f_1`,
/// `T_i` on page `i`.
pub fn book_embed(g: &PlaneGraph, l: &AngleLabeling) -> Result<BookEmbedding> {
    let es = strong_structure(g, l)?;
    let data = regions_of(g, &es)?;
    let distinct: BTreeSet<i64> = data.f[1].iter().copied().collect();
    if distinct.len() != g.n() {
        return Err(Error::Inconsistent("f_1 is not injective".into()));
    }
    Ok(layout(g, &es, &data.f[1]))
}

/// The same layout for a generalized labeling; it need not be a valid book.
pub fn naive_generalized_layout(g: &PlaneGraph, l: &AngleLabeling) -> Result<BookEmbedding> {
    let data = generalized_regions(g, l)?;
    let es = induce(g, l, Flavor::Generalized)?;
    Ok(layout(g, &es, &data.f[1]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BookViolation {
    /// Two edges on `page` cross.
    Crossing { page: u8, first: EdgeId, second: EdgeId },
    /// `vertex` has neighbors on both sides within `page`.
    NotAlternating { page: u8, vertex: VertexId },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BookReport {
    pub violations: Vec<BookViolation>,
}

impl BookReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Reports crossings and alternation violations of a layout.
pub fn check_book(g: &PlaneGraph, b: &BookEmbedding) -> BookReport {
    let pos = b.positions(g.n());
    let mut violations = Vec::new();
    for page in 0..2u8 {
        let edges: Vec<(EdgeId, usize, usize)> = b
            .pages
            .iter()
            .filter(|&&(_, p)| p == page)
            .map(|&(e, _)| {
                let (u, v) = g.endpoints(e);
                (e, pos[u].min(pos[v]), pos[u].max(pos[v]))
            })
            .collect();
        for (i, &(e1, a, c)) in edges.iter().enumerate() {
            for &(e2, b2, d) in &edges[i + 1..] {
                if (a < b2 && b2 < c && c < d) || (b2 < a && a < d && d < c) {
                    violations.push(BookViolation::Crossing { page, first: e1, second: e2 });
                }
            }
        }
        let mut left = vec![false; g.n()];
        let mut right = vec![false; g.n()];
        for &(e, _, _) in &edges {
            let (u, v) = g.endpoints(e);
            for (x, y) in [(u, v), (v, u)] {
                if pos[y] < pos[x] {
                    left[x] = true;
                } else {
                    right[x] = true;
                }
            }
        }
        for &v in &b.spine {
            if left[v] && right[v] {
                violations.push(BookViolation::NotAlternating { page, vertex: v });
            }
        }
    }
    BookReport { violations }
}

/// Largest spine accepted by [`count_ncat`].
pub const MAX_NCAT: usize = 12;

/// Number of non-crossing alternating spanning trees on `k` points in
/// convex position on a line, by exhaustive search.
pub fn count_ncat(k: usize) -> Result<u64> {
    if k > MAX_NCAT {
        return Err(Error::TooLarge(format!("spine length {k} > {MAX_NCAT}")));
    }
    if k <= 1 {
        return Ok(1);
    }
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    struct Search<'a> {
        k: usize,
        pairs: &'a [(usize, usize)],
        chosen: Vec<(usize, usize)>,
        // -1 left only, 1 right only, 0 none yet
        side: Vec<i8>,
        count: u64,
    }
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        r
    }
    impl Search<'_> {
        fn run(&mut self, from: usize) {
            if self.chosen.len() == self.k - 1 {
                let mut parent: Vec<usize> = (0..self.k).collect();
                for &(a, b) in &self.chosen {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra == rb {
                        return;
                    }
                    parent[ra] = rb;
                }
                self.count += 1;
                return;
            }
            let need = self.k - 1 - self.chosen.len();
            for idx in from..self.pairs.len() {
                if self.pairs.len() - idx < need {
                    break;
                }
                let (a, b) = self.pairs[idx];
                if self.side[a] == -1 || self.side[b] == 1 {
                    continue;
                }
                if self.chosen.iter().any(|&(c, d)| (a < c && c < b && b < d) || (c < a && a < d && d < b)) {
                    continue;
                }
                let (sa, sb) = (self.side[a], self.side[b]);
                self.side[a] = 1;
                self.side[b] = -1;
                self.chosen.push((a, b));
                self.run(idx + 1);
                self.chosen.pop();
                self.side[a] = sa;
                self.side[b] = sb;
            }
        }
    }
    let mut s = Search { k, pairs: &pairs, chosen: Vec::new(), side: vec![0; k], count: 0 };
    s.run(0);
    Ok(s.count)
}

/// Edges violating the alternation inequalities of a generalized labeling:
/// for a dart of color 0 between black `x` and white `y`, `f_0(x) <= f_0(y)`;
/// for color 1, `f_0(x) >= f_0(y)`. Edges at the specials are skipped.
pub fn alternation_violations(g: &PlaneGraph, l: &AngleLabeling) -> Result<Vec<EdgeId>> {
    let data = generalized_regions(g, l)?;
    let es = induce(g, l, Flavor::Generalized)?;
    let f0 = &data.f[0];
    let mut bad = Vec::new();
    for e in 0..g.m() {
        let (u, v) = g.endpoints(e);
        if g.is_special(u) || g.is_special(v) {
            continue;
        }
        let (x, y) = if g.color(u) == Some(Color::Black) { (u, v) } else { (v, u) };
        for h in [2 * e, 2 * e + 1] {
            let ok = match es.dart_color[h] {
                Some(0) => f0[x] <= f0[y],
                Some(_) => f0[x] >= f0[y],
                None => true,
            };
            if !ok && !bad.contains(&e) {
                bad.push(e);
            }
        }
    }
    Ok(bad)
}

/// True iff [`alternation_violations`] is empty.
pub fn alternation_property(g: &PlaneGraph, l: &AngleLabeling) -> Result<bool> {
    Ok(alternation_violations(g, l)?.is_empty())
}
