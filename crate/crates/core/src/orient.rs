//! Alpha-orientations and the bijections between labelings, orientations and
//! separating decompositions.

use std::collections::VecDeque;

use crate::embed::{completion, edge_of, suspension_sg, twin, Color, EdgeId, HalfEdgeId, PlaneGraph, SplitDual, Suspension, VertexId};
use crate::error::{Error, Result};
use crate::flow::Network;
use crate::rules::{induce, validate, AngleLabeling, EdgeStructure, Flavor};

/// An orientation stores, for every edge, the dart pointing from tail to head.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    pub dir: Vec<HalfEdgeId>,
}

impl Orientation {
    /// Orientation with every edge along its even dart.
    pub fn canonical(m: usize) -> Orientation {
        Orientation { dir: (0..m).map(|e| 2 * e).collect() }
    }

    pub fn head(&self, g: &PlaneGraph, e: EdgeId) -> VertexId {
        g.dest(self.dir[e])
    }

    pub fn tail(&self, g: &PlaneGraph, e: EdgeId) -> VertexId {
        g.origin(self.dir[e])
    }

    pub fn is_forward(&self, h: HalfEdgeId) -> bool {
        self.dir[edge_of(h)] == h
    }

    pub fn out_degrees(&self, g: &PlaneGraph) -> Vec<usize> {
        let mut out = vec![0; g.n()];
        for &d in &self.dir {
            out[g.origin(d)] += 1;
        }
        out
    }

    /// Reverses every edge of the given darts (edge ids are taken from them).
    pub fn reversed(&self, darts: &[HalfEdgeId]) -> Orientation {
        let mut o = self.clone();
        for &h in darts {
            let e = edge_of(h);
            o.dir[e] = twin(o.dir[e]);
        }
        o
    }

    /// Orientation of a structure without bidirected edges. Uncolored edges
    /// keep their even dart.
    pub fn from_structure(es: &EdgeStructure) -> Orientation {
        let m = es.dart_color.len() / 2;
        Orientation { dir: (0..m).map(|e| es.directed_dart(e).unwrap_or(2 * e)).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutDegreeSpec {
    pub alpha: Vec<usize>,
}

impl OutDegreeSpec {
    /// Out-degree 2 everywhere except 0 at the special vertices.
    pub fn two_orientation(g: &PlaneGraph) -> Result<OutDegreeSpec> {
        let (s0, s1) = g.specials().ok_or(Error::SpecialsMissing)?;
        let alpha = (0..g.n()).map(|v| if v == s0 || v == s1 { 0 } else { 2 }).collect();
        Ok(OutDegreeSpec { alpha })
    }

    /// Out-degree 2 everywhere except 1 at the split outer vertices.
    pub fn two_star(sd: &SplitDual) -> OutDegreeSpec {
        let alpha = (0..sd.graph.n()).map(|v| if v == sd.o0 || v == sd.o1 { 1 } else { 2 }).collect();
        OutDegreeSpec { alpha }
    }
}

impl OutDegreeSpec {
    /// Out-degrees of the suspension whose orientations encode generalized
    /// labelings: 0 at the specials, 1 at edge-vertices, 2 elsewhere.
    pub fn suspension(g: &PlaneGraph, s: &Suspension) -> Result<OutDegreeSpec> {
        let (s0, s1) = g.specials().ok_or(Error::SpecialsMissing)?;
        let alpha = (0..s.graph.n())
            .map(|v| {
                if v == s0 || v == s1 {
                    0
                } else if (s.edge_base..s.face_base).contains(&v) {
                    1
                } else {
                    2
                }
            })
            .collect();
        Ok(OutDegreeSpec { alpha })
    }
}

/// Finds an orientation with out-degree `alpha(v)` at every vertex by a
/// max-flow computation.
pub fn solve_alpha(g: &PlaneGraph, spec: &OutDegreeSpec) -> Result<Orientation> {
    let (n, m) = (g.n(), g.m());
    if spec.alpha.len() != n {
        return Err(Error::InvalidInput("alpha must have one entry per vertex".into()));
    }
    let sum: usize = spec.alpha.iter().sum();
    if sum != m {
        return Err(Error::SpecSumMismatch { sum, edges: m });
    }
    // source, vertices, edges, sink
    let (source, sink) = (0, n + m + 1);
    let mut net = Network::new(n + m + 2);
    for v in 0..n {
        net.add_arc(source, 1 + v, spec.alpha[v] as i64);
    }
    let mut choice = Vec::with_capacity(m);
    for e in 0..m {
        let (u, v) = g.endpoints(e);
        let a = net.add_arc(1 + u, 1 + n + e, 1);
        let b = if u != v { Some(net.add_arc(1 + v, 1 + n + e, 1)) } else { None };
        net.add_arc(1 + n + e, sink, 1);
        choice.push((a, b));
    }
    if net.max_flow(source, sink) as usize == m {
        let dir = choice
            .iter()
            .enumerate()
            .map(|(e, &(a, _))| if net.flow(a) == 1 { 2 * e } else { 2 * e + 1 })
            .collect();
        return Ok(Orientation { dir });
    }
    let reach = net.reachable(source);
    let w: Vec<VertexId> = (0..n).filter(|&v| reach[1 + v]).collect();
    let incident = (0..m)
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            reach[1 + u] || reach[1 + v]
        })
        .count();
    let demand: usize = w.iter().map(|&v| spec.alpha[v]).sum();
    let witness = (incident < demand).then_some(w);
    Err(Error::Infeasible { witness })
}

/// All orientations realizing `spec`, in lexicographic order of their darts.
pub fn enumerate_alpha(g: &PlaneGraph, spec: &OutDegreeSpec, max_edges: usize) -> Result<Vec<Orientation>> {
    let m = g.m();
    if m > max_edges {
        return Err(Error::TooLarge(format!("{m} edges exceed the bound {max_edges}")));
    }
    if spec.alpha.len() != g.n() || spec.alpha.iter().sum::<usize>() != m {
        return Ok(Vec::new());
    }
    let mut remaining = vec![0usize; g.n()];
    for e in 0..m {
        let (u, v) = g.endpoints(e);
        remaining[u] += 1;
        if u != v {
            remaining[v] += 1;
        }
    }
    let mut state = AlphaSearch {
        g,
        alpha: &spec.alpha,
        out: vec![0; g.n()],
        remaining,
        dir: vec![0; m],
        found: Vec::new(),
    };
    state.recurse(0);
    Ok(state.found)
}

struct AlphaSearch<'a> {
    g: &'a PlaneGraph,
    alpha: &'a [usize],
    out: Vec<usize>,
    remaining: Vec<usize>,
    dir: Vec<HalfEdgeId>,
    found: Vec<Orientation>,
}

impl AlphaSearch<'_> {
    fn feasible(&self, v: VertexId) -> bool {
        self.out[v] <= self.alpha[v] && self.out[v] + self.remaining[v] >= self.alpha[v]
    }

    fn recurse(&mut self, e: EdgeId) {
        if e == self.dir.len() {
            self.found.push(Orientation { dir: self.dir.clone() });
            return;
        }
        let (u, v) = self.g.endpoints(e);
        self.remaining[u] -= 1;
        if u != v {
            self.remaining[v] -= 1;
        }
        for d in [2 * e, 2 * e + 1] {
            let tail = self.g.origin(d);
            self.out[tail] += 1;
            self.dir[e] = d;
            if self.feasible(u) && self.feasible(v) {
                self.recurse(e + 1);
            }
            self.out[tail] -= 1;
            if u == v {
                break;
            }
        }
        self.remaining[u] += 1;
        if u != v {
            self.remaining[v] += 1;
        }
    }
}

fn check_degrees(g: &PlaneGraph, x: &Orientation, spec: &OutDegreeSpec, what: &str) -> Result<()> {
    if x.dir.len() != g.m() || x.dir.iter().enumerate().any(|(e, &d)| edge_of(d) != e) {
        return Err(Error::BadOrientation(format!("{what}: malformed orientation")));
    }
    let out = x.out_degrees(g);
    if let Some(v) = (0..g.n()).find(|&v| out[v] != spec.alpha[v]) {
        return Err(Error::BadOrientation(format!(
            "{what}: vertex {} has out-degree {} instead of {}",
            g.name(v),
            out[v],
            spec.alpha[v]
        )));
    }
    Ok(())
}

/// Builds the weak labeling encoded by a 2-orientation `x` of `g` and a
/// 2*-orientation `xs` of its split-dual (whose darts share ids with `g`).
pub fn weak_from_pair(g: &PlaneGraph, x: &Orientation, xs: &Orientation) -> Result<AngleLabeling> {
    let comp = completion(g)?;
    let sd = &comp.split;
    check_degrees(g, x, &OutDegreeSpec::two_orientation(g)?, "primal orientation")?;
    check_degrees(&sd.graph, xs, &OutDegreeSpec::two_star(sd), "dual orientation")?;
    let c = &comp.graph;
    let m = g.m();
    // relevant completion edges: the halves entering an edge-vertex, plus e_o
    let mut relevant = vec![false; c.m()];
    for e in 0..m {
        let d = x.dir[e];
        relevant[d] = true; // primal half at the tail
        let ds = xs.dir[e];
        relevant[2 * m + ds] = true; // dual half at the dual tail
    }
    relevant[comp.exceptional_edge] = true;
    let (s0, _) = g.specials().unwrap();
    let mut color = vec![u8::MAX; c.num_faces()];
    let start = comp.face_of_angle(g.first_dart(s0));
    color[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        for &h in c.face_walk(f) {
            let other = c.face(twin(h));
            let want = color[f] ^ u8::from(relevant[edge_of(h)]);
            if color[other] == u8::MAX {
                color[other] = want;
                queue.push_back(other);
            } else if color[other] != want {
                return Err(Error::BadOrientation("relevant edges do not 2-color the completion".into()));
            }
        }
    }
    let labels = (0..g.num_darts()).map(|h| color[comp.face_of_angle(h)]).collect();
    let l = AngleLabeling::new(labels);
    let report = validate(g, &l, Flavor::Weak)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::BadOrientation(format!("resulting labeling violates {}: {}", v.rule, v.message)));
    }
    Ok(l)
}

/// The 2-orientation and split-dual 2*-orientation of a weak labeling.
pub fn pair_from_weak(g: &PlaneGraph, l: &AngleLabeling) -> Result<(Orientation, Orientation)> {
    let es = induce(g, l, Flavor::Weak)?;
    let x = Orientation::from_structure(&es);
    // dual dart h runs from face(h) to face(twin h); point it at the side
    // whose two labels coincide
    let dir = (0..g.m())
        .map(|e| {
            let h = 2 * e;
            let right_coincide = l.labels[h] == l.labels[g.face_next(h)];
            if right_coincide {
                twin(h)
            } else {
                h
            }
        })
        .collect();
    Ok((x, Orientation { dir }))
}

/// Recovers the strong labeling of a quadrangulation from its 2-orientation
/// by propagating labels face by face from the outer face.
pub fn strong_from_2orientation(g: &PlaneGraph, x: &Orientation) -> Result<AngleLabeling> {
    crate::rules::preconditions(g, Flavor::Strong)?;
    check_degrees(g, x, &OutDegreeSpec::two_orientation(g)?, "2-orientation")?;
    let colors = g.colors().unwrap();
    let (s0, _) = g.specials().unwrap();
    let mut label = vec![u8::MAX; g.num_darts()];
    let mut seen = vec![false; g.num_faces()];
    let outer_start = g.outer_walk_from(s0)[0];
    label[outer_start] = 0;
    let mut queue = VecDeque::from([outer_start]);
    seen[g.face(outer_start)] = true;
    while let Some(h0) = queue.pop_front() {
        // complete the face by the walking rule
        let mut h = h0;
        loop {
            let nx = g.face_next(h);
            let want = label[h] ^ u8::from(colors[g.origin(h)] == Color::Black);
            if nx == h0 {
                if label[h0] != want {
                    return Err(Error::ConflictingLabels { angle: h0 });
                }
                break;
            }
            if label[nx] != u8::MAX && label[nx] != want {
                return Err(Error::ConflictingLabels { angle: nx });
            }
            label[nx] = want;
            h = nx;
        }
        // copy the label at the tip of each edge to its other side
        for &d in g.face_walk(g.face(h0)) {
            let (inside, across) = if x.is_forward(d) {
                (g.face_next(d), twin(d))
            } else {
                (d, g.face_next(twin(d)))
            };
            let f = g.face(across);
            if label[across] == u8::MAX {
                label[across] = label[inside];
                if !seen[f] {
                    seen[f] = true;
                    queue.push_back(across);
                }
            } else if label[across] != label[inside] {
                return Err(Error::ConflictingLabels { angle: across });
            }
        }
    }
    let l = AngleLabeling::new(label);
    let report = validate(g, &l, Flavor::Strong)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::BadOrientation(format!("propagated labels violate {}: {}", v.rule, v.message)));
    }
    let back = Orientation::from_structure(&induce(g, &l, Flavor::Strong)?);
    if &back != x {
        return Err(Error::BadOrientation("propagated labels induce a different orientation".into()));
    }
    Ok(l)
}

/// A 2-orientation together with a 2-coloring of the edges into the trees
/// `T_0` and `T_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatingDecomposition {
    pub orientation: Orientation,
    pub coloring: Vec<u8>,
    pub sinks: (VertexId, VertexId),
}

pub fn sepdec_from_strong(g: &PlaneGraph, l: &AngleLabeling) -> Result<SeparatingDecomposition> {
    let es = induce(g, l, Flavor::Strong)?;
    let orientation = Orientation::from_structure(&es);
    let coloring = orientation.dir.iter().map(|&d| es.dart_color[d].unwrap()).collect();
    Ok(SeparatingDecomposition { orientation, coloring, sinks: g.specials().unwrap() })
}

/// Checks the tree and gathering conditions of a separating decomposition.
pub fn check_sepdec(g: &PlaneGraph, sd: &SeparatingDecomposition) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidInput(msg));
    if sd.orientation.dir.len() != g.m() || sd.coloring.len() != g.m() || sd.coloring.iter().any(|&c| c > 1) {
        return bad("orientation and coloring must cover every edge".into());
    }
    let (s0, s1) = sd.sinks;
    if g.specials() != Some(sd.sinks) {
        return bad("sinks differ from the special vertices".into());
    }
    let colors = g.colors().ok_or(Error::NotBipartite)?;
    let dart_color = |h: HalfEdgeId| -> Option<u8> {
        let e = edge_of(h);
        (sd.orientation.dir[e] == h).then_some(sd.coloring[e])
    };
    for v in 0..g.n() {
        let darts: Vec<HalfEdgeId> = g.darts_at(v).collect();
        if v == s0 || v == s1 {
            let want = u8::from(v == s1);
            for &h in &darts {
                if dart_color(h).is_some() || dart_color(twin(h)) != Some(want) {
                    return bad(format!("edges at sink {} must be incoming of color {want}", g.name(v)));
                }
            }
            continue;
        }
        // rotation order: clockwise for black, counterclockwise for white
        let mut seq: Vec<(bool, u8)> = darts
            .iter()
            .map(|&h| match dart_color(h) {
                Some(c) => (true, c),
                None => (false, dart_color(twin(h)).unwrap()),
            })
            .collect();
        if colors[v] == Color::White {
            seq.reverse();
        }
        let outs: Vec<usize> = (0..seq.len()).filter(|&i| seq[i].0).collect();
        if outs.len() != 2 || seq[outs[0]].1 == seq[outs[1]].1 {
            return bad(format!("vertex {} needs one outgoing edge of each color", g.name(v)));
        }
        let k = seq.len();
        let o1 = outs.into_iter().find(|&i| seq[i].1 == 1).unwrap();
        // after out1: in0*, out0, in1*
        let mut i = (o1 + 1) % k;
        while seq[i] == (false, 0) {
            i = (i + 1) % k;
        }
        if seq[i] != (true, 0) {
            return bad(format!("gathering condition fails at vertex {}", g.name(v)));
        }
        i = (i + 1) % k;
        while seq[i] == (false, 1) {
            i = (i + 1) % k;
        }
        if i != o1 {
            return bad(format!("gathering condition fails at vertex {}", g.name(v)));
        }
    }
    // T_i must lead every vertex but s_{1-i} to s_i
    for (c, sink) in [(0u8, s0), (1u8, s1)] {
        for v in 0..g.n() {
            if v == s0 || v == s1 {
                continue;
            }
            let mut cur = v;
            let mut steps = 0;
            while cur != sink {
                let Some(h) = g.darts_at(cur).find(|&h| dart_color(h) == Some(c)) else {
                    return bad(format!("T{c} path from {} ends before its sink", g.name(v)));
                };
                cur = g.dest(h);
                steps += 1;
                if steps > g.n() {
                    return bad(format!("T{c} contains a directed cycle"));
                }
            }
        }
    }
    Ok(())
}

/// Labels each angle from the colors of its flanking edges.
pub fn strong_from_sepdec(g: &PlaneGraph, sd: &SeparatingDecomposition) -> Result<AngleLabeling> {
    crate::rules::preconditions(g, Flavor::Strong)?;
    check_sepdec(g, sd)?;
    let colors = g.colors().unwrap();
    let mut label = vec![u8::MAX; g.num_darts()];
    let mut set = |h: HalfEdgeId, b: u8| -> Result<()> {
        if label[h] != u8::MAX && label[h] != b {
            return Err(Error::InvalidInput(format!("conflicting labels at angle {h}")));
        }
        label[h] = b;
        Ok(())
    };
    for e in 0..g.m() {
        let d = sd.orientation.dir[e];
        let c = sd.coloring[e];
        set(twin(d), c)?;
        set(g.face_next(d), c)?;
        if colors[g.origin(d)] == Color::White {
            set(d, c)?;
            set(g.rot_prev(d), 1 - c)?;
        } else {
            set(g.rot_prev(d), c)?;
            set(d, 1 - c)?;
        }
    }
    let l = AngleLabeling::new(label);
    let report = validate(g, &l, Flavor::Strong)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidInput(format!("labels violate {}: {}", v.rule, v.message)));
    }
    Ok(l)
}

/// The suspension orientation encoding a generalized labeling.
pub fn sg_from_generalized(g: &PlaneGraph, l: &AngleLabeling) -> Result<(Suspension, Orientation)> {
    let es = induce(g, l, Flavor::Generalized)?;
    let s = suspension_sg(g)?;
    let mut dir = vec![0; s.graph.m()];
    for e in 0..g.m() {
        let d = g.white_to_black(e).unwrap();
        let to_w = 3 * e + (d & 1);
        let to_b = 3 * e + (twin(d) & 1);
        let to_f = 3 * e + 2;
        // dart 2k leaves the edge-vertex, 2k + 1 enters it
        let out = if es.is_bidirected(e) {
            to_f
        } else if es.dart_color[d].is_some() {
            to_b
        } else {
            to_w
        };
        for k in [to_w, to_b, to_f] {
            dir[k] = if k == out { 2 * k } else { 2 * k + 1 };
        }
    }
    Ok((s, Orientation { dir }))
}

/// Union-find over angles with the parity of each angle relative to its root.
struct ParityForest {
    parent: Vec<usize>,
    parity: Vec<u8>,
}

impl ParityForest {
    fn new(n: usize) -> ParityForest {
        ParityForest { parent: (0..n).collect(), parity: vec![0; n] }
    }

    fn find(&mut self, x: usize) -> (usize, u8) {
        let p = self.parent[x];
        if p == x {
            return (x, 0);
        }
        let (root, par) = self.find(p);
        self.parent[x] = root;
        self.parity[x] ^= par;
        (root, self.parity[x])
    }

    /// Records `label(a) ^ label(b) = diff`; false on contradiction.
    fn relate(&mut self, a: usize, b: usize, diff: u8) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == diff;
        }
        self.parent[ra] = rb;
        self.parity[ra] = pa ^ pb ^ diff;
        true
    }
}

/// Reads the generalized labeling off an orientation of the suspension.
pub fn generalized_from_sg(g: &PlaneGraph, s: &Suspension, x: &Orientation) -> Result<AngleLabeling> {
    check_degrees(&s.graph, x, &OutDegreeSpec::suspension(g, s)?, "suspension orientation")?;
    let (s0, s1) = g.specials().unwrap();
    // per edge: Some(head) when unidirected, None when bidirected
    let heads: Vec<Option<VertexId>> = (0..g.m())
        .map(|e| {
            let d = g.white_to_black(e).unwrap();
            if x.dir[3 * e + 2] == 2 * (3 * e + 2) {
                None
            } else if x.dir[3 * e + (twin(d) & 1)] == 2 * (3 * e + (twin(d) & 1)) {
                Some(g.dest(d))
            } else {
                Some(g.origin(d))
            }
        })
        .collect();
    let ground = g.num_darts();
    let mut uf = ParityForest::new(ground + 1);
    for h in 0..g.num_darts() {
        let e = edge_of(h);
        let v = g.origin(h);
        if v == s0 || v == s1 {
            if !uf.relate(h, ground, u8::from(v == s1)) {
                return Err(Error::ConflictingLabels { angle: h });
            }
        }
        let head_here = heads[e] == Some(v);
        if !uf.relate(h, g.rot_prev(h), u8::from(!head_here)) {
            return Err(Error::ConflictingLabels { angle: h });
        }
        let coincide = g.white_to_black(e) == Some(h) && heads[e].is_some();
        if !uf.relate(h, g.face_next(h), u8::from(!coincide)) {
            return Err(Error::ConflictingLabels { angle: g.face_next(h) });
        }
    }
    let (gr, gp) = uf.find(ground);
    let labels = (0..g.num_darts())
        .map(|h| {
            let (r, p) = uf.find(h);
            if r == gr {
                p ^ gp
            } else {
                p
            }
        })
        .collect();
    let l = AngleLabeling::new(labels);
    let report = validate(g, &l, Flavor::Generalized)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::BadOrientation(format!("recovered labels violate {}: {}", v.rule, v.message)));
    }
    Ok(l)
}

/// A generalized labeling from a max-flow orientation of the suspension.
pub fn generalized_via_flow(g: &PlaneGraph) -> Result<AngleLabeling> {
    let s = suspension_sg(g)?;
    let x = solve_alpha(&s.graph, &OutDegreeSpec::suspension(g, &s)?)?;
    generalized_from_sg(g, &s, &x)
}

/// True iff neither `T_0 + T_1^{-1}` nor `T_1 + T_0^{-1}` has a directed cycle.
pub fn check_acyclic_mixed(g: &PlaneGraph, es: &EdgeStructure) -> bool {
    for flip_color in [1u8, 0u8] {
        let mut adj = vec![Vec::new(); g.n()];
        for (h, c) in es.dart_color.iter().enumerate() {
            let Some(c) = *c else { continue };
            let (u, v) = (g.origin(h), g.dest(h));
            if c == flip_color {
                adj[v].push(u);
            } else {
                adj[u].push(v);
            }
        }
        if has_cycle(&adj) {
            return false;
        }
    }
    true
}

pub(crate) fn has_cycle(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    let mut indeg = vec![0; n];
    for list in adj {
        for &w in list {
            indeg[w] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = stack.pop() {
        removed += 1;
        for &w in &adj[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    removed < n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{split_dual, ColorMode};
    use crate::rules::{c4_strong, enumerate_labelings};

    #[test]
    fn c4_two_orientation_is_unique() {
        let (g, l) = c4_strong();
        let spec = OutDegreeSpec::two_orientation(&g).unwrap();
        let all = enumerate_alpha(&g, &spec, 20).unwrap();
        assert_eq!(all.len(), 1);
        let x = solve_alpha(&g, &spec).unwrap();
        assert_eq!(x, all[0]);
        assert_eq!(strong_from_2orientation(&g, &x).unwrap(), l);
    }

    #[test]
    fn spec_sum_mismatch() {
        let star = PlaneGraph::from_rotation(None, &[vec![1, 2, 3], vec![0], vec![0], vec![0]], (0, 1), ColorMode::Absent, None)
            .unwrap();
        let spec = OutDegreeSpec { alpha: vec![2, 0, 0, 0] };
        assert_eq!(solve_alpha(&star, &spec), Err(Error::SpecSumMismatch { sum: 2, edges: 3 }));
    }

    #[test]
    fn infeasible_has_witness() {
        let star = PlaneGraph::from_rotation(None, &[vec![1, 2, 3], vec![0], vec![0], vec![0]], (0, 1), ColorMode::Absent, None)
            .unwrap();
        let spec = OutDegreeSpec { alpha: vec![0, 2, 1, 0] };
        match solve_alpha(&star, &spec) {
            Err(Error::Infeasible { witness: Some(w) }) => assert!(w.contains(&1)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(enumerate_alpha(&star, &spec, 20).unwrap().is_empty());
    }

    #[test]
    fn c4_weak_pair_round_trip() {
        let (g, _) = c4_strong();
        let weak = enumerate_labelings(&g, Flavor::Weak, 16).unwrap();
        let sd = split_dual(&g).unwrap();
        let xs_all = enumerate_alpha(&sd.graph, &OutDegreeSpec::two_star(&sd), 20).unwrap();
        assert_eq!(weak.len(), xs_all.len());
        for l in &weak {
            let (x, xs) = pair_from_weak(&g, l).unwrap();
            assert_eq!(&weak_from_pair(&g, &x, &xs).unwrap(), l);
        }
    }

    #[test]
    fn c4_sepdec_round_trip() {
        let (g, l) = c4_strong();
        let sd = sepdec_from_strong(&g, &l).unwrap();
        assert_eq!(strong_from_sepdec(&g, &sd).unwrap(), l);
        let mut bad = sd.clone();
        bad.coloring[0] ^= 1;
        assert!(matches!(strong_from_sepdec(&g, &bad), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn bad_degree_contract() {
        let (g, _) = c4_strong();
        let x = Orientation::canonical(g.m());
        assert!(matches!(strong_from_2orientation(&g, &x), Err(Error::BadOrientation(_))));
    }

    #[test]
    fn mixed_cycle_detector() {
        let (g, l) = c4_strong();
        let es = induce(&g, &l, Flavor::Strong).unwrap();
        assert!(check_acyclic_mixed(&g, &es));
        let mut cyc = EdgeStructure { dart_color: vec![None; g.num_darts()] };
        for (u, v) in [(1, 0), (0, 3), (3, 2), (2, 1)] {
            cyc.dart_color[g.dart(u, v).unwrap()] = Some(0);
        }
        assert!(!check_acyclic_mixed(&g, &cyc));
    }
}
