//! Angle labelings and their rule families.
//!
//! A labeling stores one bit per dart: `labels[h]` is the label of the angle
//! clockwise after `h` at `origin(h)` (see [`crate::embed`]).
//!
//! For a dart `d = tail -> head` the four angles flanking its edge are
//! `labels[d]` (tail, right side), `labels[rot_prev(d)]` (tail, left side),
//! `labels[face_next(d)]` (head, right side) and `labels[twin(d)]`
//! (head, left side).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::embed::{edge_of, is_quadrangulation, twin, Color, EdgeId, FaceId, HalfEdgeId, PlaneGraph, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AngleLabeling {
    pub labels: Vec<u8>,
}

impl AngleLabeling {
    pub fn new(labels: Vec<u8>) -> AngleLabeling {
        AngleLabeling { labels }
    }

    pub fn get(&self, h: HalfEdgeId) -> u8 {
        self.labels[h]
    }

    /// Labels around `v` in rotation order, starting after its first dart.
    pub fn around(&self, g: &PlaneGraph, v: VertexId) -> Vec<u8> {
        g.darts_at(v).map(|h| self.labels[h]).collect()
    }

    /// Labels along a face walk.
    pub fn along(&self, g: &PlaneGraph, f: FaceId) -> Vec<u8> {
        g.face_walk(f).iter().map(|&h| self.labels[h]).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    Weak,
    Strong,
    Generalized,
    ExtendedWeak,
}

impl Flavor {
    pub const ALL: [Flavor; 4] = [Flavor::Weak, Flavor::Strong, Flavor::Generalized, Flavor::ExtendedWeak];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Weak => "weak",
            Flavor::Strong => "strong",
            Flavor::Generalized => "generalized",
            Flavor::ExtendedWeak => "extended-weak",
        }
    }

    pub fn parse(s: &str) -> Option<Flavor> {
        Flavor::ALL.into_iter().find(|f| f.name() == s || (s == "extended_weak" && *f == Flavor::ExtendedWeak))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RuleId {
    G0,
    G1,
    G2,
    G3,
    #[serde(rename = "G3+")]
    G3Plus,
    #[serde(rename = "G3+_Q")]
    G3PlusQ,
    #[serde(rename = "G2+")]
    G2Plus,
    #[serde(rename = "G0'")]
    G0Prime,
    #[serde(rename = "G2'")]
    G2Prime,
    #[serde(rename = "walking")]
    Walking,
    #[serde(rename = "turning")]
    Turning,
    #[serde(rename = "strong_edge")]
    StrongEdge,
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RuleId::G0 => "G0",
            RuleId::G1 => "G1",
            RuleId::G2 => "G2",
            RuleId::G3 => "G3",
            RuleId::G3Plus => "G3+",
            RuleId::G3PlusQ => "G3+_Q",
            RuleId::G2Plus => "G2+",
            RuleId::G0Prime => "G0'",
            RuleId::G2Prime => "G2'",
            RuleId::Walking => "walking",
            RuleId::Turning => "turning",
            RuleId::StrongEdge => "strong_edge",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Location {
    Vertex(VertexId),
    Edge(EdgeId),
    Face(FaceId),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: RuleId,
    pub location: Location,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleReport {
    pub flavor: Flavor,
    pub violations: Vec<Violation>,
}

impl RuleReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Violations restricted to the base rules of the flavor (excludes the
    /// derived walking, turning and strong edge reports).
    pub fn base_violations(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| !matches!(v.rule, RuleId::Walking | RuleId::Turning | RuleId::StrongEdge))
    }
}

/// Colors and directions read off a labeling.
///
/// `dart_color[h]` is `Some(c)` when the edge of `h` is oriented along `h`
/// with color `c`. A bidirected edge has both darts colored; the `s0 s1`
/// edge of an extended weak labeling has neither.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeStructure {
    pub dart_color: Vec<Option<u8>>,
}

impl EdgeStructure {
    pub fn is_bidirected(&self, e: EdgeId) -> bool {
        self.dart_color[2 * e].is_some() && self.dart_color[2 * e + 1].is_some()
    }

    /// The dart of a unidirected edge, pointing to its head.
    pub fn directed_dart(&self, e: EdgeId) -> Option<HalfEdgeId> {
        match (self.dart_color[2 * e], self.dart_color[2 * e + 1]) {
            (Some(_), None) => Some(2 * e),
            (None, Some(_)) => Some(2 * e + 1),
            _ => None,
        }
    }

    /// Head of every edge; `None` for bidirected or uncolored edges.
    pub fn heads(&self, g: &PlaneGraph) -> Vec<Option<VertexId>> {
        (0..g.m()).map(|e| self.directed_dart(e).map(|h| g.dest(h))).collect()
    }

    /// Darts of color `c` leaving `v`.
    pub fn out_darts(&self, g: &PlaneGraph, v: VertexId, c: u8) -> Vec<HalfEdgeId> {
        g.darts_at(v).filter(|&h| self.dart_color[h] == Some(c)).collect()
    }

    pub fn out_degree(&self, g: &PlaneGraph, v: VertexId) -> usize {
        g.darts_at(v).filter(|&h| self.dart_color[h].is_some()).count()
    }
}

fn cyclic_changes(bits: &[u8]) -> usize {
    let k = bits.len();
    (0..k).filter(|&i| bits[i] != bits[(i + 1) % k]).count()
}

fn cyclic_pairs(bits: &[u8], value: u8) -> usize {
    let k = bits.len();
    if k == 1 {
        return usize::from(bits[0] == value);
    }
    (0..k).filter(|&i| bits[i] == value && bits[(i + 1) % k] == value).count()
}

/// Flanking labels of dart `d`: (tail right, tail left, head right, head left).
pub fn flanks(g: &PlaneGraph, l: &AngleLabeling, d: HalfEdgeId) -> (u8, u8, u8, u8) {
    (
        l.labels[d],
        l.labels[g.rot_prev(d)],
        l.labels[g.face_next(d)],
        l.labels[twin(d)],
    )
}

fn check_preconditions(g: &PlaneGraph, l: &AngleLabeling, flavor: Flavor) -> Result<()> {
    if l.labels.len() != g.num_darts() {
        return Err(Error::InvalidLabeling(format!(
            "expected {} angle labels, found {}",
            g.num_darts(),
            l.labels.len()
        )));
    }
    if l.labels.iter().any(|&b| b > 1) {
        return Err(Error::InvalidLabeling("labels must be 0 or 1".into()));
    }
    preconditions(g, flavor)
}

/// Structural preconditions of a flavor, independent of any labeling.
pub fn preconditions(g: &PlaneGraph, flavor: Flavor) -> Result<()> {
    let fail = |msg: &str| Err(Error::FlavorPreconditionFailed(format!("{}: {msg}", flavor.name())));
    let Some((s0, s1)) = g.specials() else {
        return fail("special vertices are required");
    };
    match flavor {
        Flavor::Weak => Ok(()),
        Flavor::Strong => {
            if !is_quadrangulation(g) {
                return fail("graph is not a quadrangulation");
            }
            if g.color(s0) != Some(Color::Black) || g.color(s1) != Some(Color::Black) {
                return fail("special vertices must be black");
            }
            let outer = g.outer_vertices();
            if !outer.contains(&s0) || !outer.contains(&s1) {
                return fail("special vertices must lie on the outer face");
            }
            Ok(())
        }
        Flavor::Generalized => {
            if g.colors().is_none() {
                return fail("graph must carry a black/white coloring");
            }
            if !g.on_outer_face(s0) || !g.on_outer_face(s1) {
                return fail("special vertices must lie on the outer face");
            }
            Ok(())
        }
        Flavor::ExtendedWeak => {
            if g.dart(s0, s1).is_none() {
                return fail("special vertices must be adjacent");
            }
            Ok(())
        }
    }
}

pub(crate) fn check_vertex(g: &PlaneGraph, l: &AngleLabeling, flavor: Flavor, v: VertexId) -> Option<Violation> {
    let (s0, s1) = g.specials().unwrap();
    let bits = l.around(g, v);
    if v == s0 || v == s1 {
        let want = u8::from(v == s1);
        if bits.iter().any(|&b| b != want) {
            let rule = if flavor == Flavor::ExtendedWeak { RuleId::G0Prime } else { RuleId::G0 };
            return Some(Violation {
                rule,
                location: Location::Vertex(v),
                message: format!("every angle at s{want} must be labeled {want}"),
            });
        }
        return None;
    }
    if cyclic_changes(&bits) != 2 {
        return Some(Violation {
            rule: RuleId::G1,
            location: Location::Vertex(v),
            message: format!("labels around the vertex do not form two intervals: {bits:?}"),
        });
    }
    None
}

fn coincide_at_tail(g: &PlaneGraph, l: &AngleLabeling, d: HalfEdgeId) -> bool {
    l.labels[d] == l.labels[g.rot_prev(d)]
}

pub(crate) fn check_edge(g: &PlaneGraph, l: &AngleLabeling, flavor: Flavor, e: EdgeId) -> Option<Violation> {
    let (s0, s1) = g.specials().unwrap();
    let (u, v) = g.endpoints(e);
    let tail = coincide_at_tail(g, l, 2 * e);
    let head = coincide_at_tail(g, l, 2 * e + 1);
    match flavor {
        Flavor::Weak | Flavor::Strong | Flavor::ExtendedWeak => {
            if flavor == Flavor::ExtendedWeak && (u == s0 && v == s1 || u == s1 && v == s0) {
                return None;
            }
            if tail == head {
                let rule = if flavor == Flavor::ExtendedWeak { RuleId::G2Prime } else { RuleId::G2 };
                let what = if tail { "coincide" } else { "differ" };
                return Some(Violation {
                    rule,
                    location: Location::Edge(e),
                    message: format!("labels {what} at both endpoints"),
                });
            }
            None
        }
        Flavor::Generalized => {
            let d = g.white_to_black(e).unwrap();
            let (_, wl, _, bl) = flanks(g, l, d);
            if wl == bl || (tail && head) {
                return Some(Violation {
                    rule: RuleId::G2Plus,
                    location: Location::Edge(e),
                    message: "labels do not form one of the six edge patterns".into(),
                });
            }
            None
        }
    }
}

/// Reversed walk of the outer face starting at the first dart leaving `s0`,
/// i.e. the outer face read clockwise in the drawing.
fn outer_clockwise_from(g: &PlaneGraph, l: &AngleLabeling, s0: VertexId) -> Vec<u8> {
    let walk = g.outer_walk_from(s0);
    let mut bits = vec![l.labels[walk[0]]];
    bits.extend(walk[1..].iter().rev().map(|&h| l.labels[h]));
    bits
}

pub(crate) fn check_face(g: &PlaneGraph, l: &AngleLabeling, flavor: Flavor, f: FaceId) -> Option<Violation> {
    let (s0, _) = g.specials().unwrap();
    let bits = l.along(g, f);
    let bad = |rule: RuleId, message: String| Some(Violation { rule, location: Location::Face(f), message });
    match flavor {
        Flavor::Weak | Flavor::ExtendedWeak => {
            if cyclic_changes(&bits) != 2 {
                return bad(RuleId::G3, format!("face labels do not form two intervals: {bits:?}"));
            }
        }
        Flavor::Strong => {
            if cyclic_pairs(&bits, 0) != 1 || cyclic_pairs(&bits, 1) != 1 || bits.len() != 4 {
                return bad(RuleId::G3PlusQ, format!("face labels are not 0011 cyclically: {bits:?}"));
            }
            if f == g.outer_face() && outer_clockwise_from(g, l, s0) != [0, 0, 1, 1] {
                return bad(
                    RuleId::G3PlusQ,
                    format!("outer face read clockwise from s0 is {:?}, not 0011", outer_clockwise_from(g, l, s0)),
                );
            }
        }
        Flavor::Generalized => {
            if cyclic_pairs(&bits, 0) != 1 || cyclic_pairs(&bits, 1) != 1 {
                return bad(RuleId::G3Plus, format!("face needs one 00 and one 11 pair: {bits:?}"));
            }
            if f == g.outer_face() {
                for &d in g.face_walk(f) {
                    let e = edge_of(d);
                    if g.white_to_black(e) != Some(d) || (g.origin(d) != s0 && g.dest(d) != s0) {
                        continue;
                    }
                    if l.labels[d] != 0 || l.labels[g.face_next(d)] != 0 {
                        return bad(
                            RuleId::G3Plus,
                            format!("outer edge {e} at s0 must carry two labels 0 on the outer face"),
                        );
                    }
                }
            }
        }
    }
    None
}

/// Orientation and color of a single edge, assuming its edge rule holds.
fn induce_edge(g: &PlaneGraph, l: &AngleLabeling, flavor: Flavor, e: EdgeId, out: &mut [Option<u8>]) {
    let (s0, s1) = g.specials().unwrap();
    let (u, v) = g.endpoints(e);
    if flavor == Flavor::ExtendedWeak && (u == s0 && v == s1 || u == s1 && v == s0) {
        return;
    }
    if flavor == Flavor::Generalized {
        let d = g.white_to_black(e).unwrap();
        let (wr, wl, br, bl) = flanks(g, l, d);
        if wr != wl {
            out[d] = Some(wr);
        }
        if br != bl {
            out[twin(d)] = Some(br);
        }
        return;
    }
    for d in [2 * e, 2 * e + 1] {
        // oriented toward the endpoint whose flanking labels coincide
        if coincide_at_tail(g, l, twin(d)) {
            out[d] = Some(l.labels[twin(d)]);
        }
    }
}

fn strong_derived(g: &PlaneGraph, l: &AngleLabeling, es: &EdgeStructure, out: &mut Vec<Violation>) {
    let colors = g.colors().unwrap();
    for (f, walk) in g.faces().iter().enumerate() {
        for &h in walk {
            let changes = l.labels[h] != l.labels[g.face_next(h)];
            let from_black = colors[g.origin(h)] == Color::Black;
            if changes != from_black {
                out.push(Violation {
                    rule: RuleId::Walking,
                    location: Location::Face(f),
                    message: format!("label change along dart {h} does not match a black-to-white step"),
                });
                break;
            }
        }
    }
    for e in 0..g.m() {
        let Some(d) = es.directed_dart(e) else { continue };
        let coincide = if colors[g.origin(d)] == Color::White {
            l.labels[d] == l.labels[g.face_next(d)]
        } else {
            l.labels[g.rot_prev(d)] == l.labels[twin(d)]
        };
        if !coincide {
            out.push(Violation {
                rule: RuleId::StrongEdge,
                location: Location::Edge(e),
                message: "labels do not coincide on the side prescribed by the tail color".into(),
            });
        }
    }
    for v in 0..g.n() {
        if g.is_special(v) {
            continue;
        }
        for back in g.darts_at(v) {
            let Some(c) = es.dart_color[twin(back)] else { continue };
            let step = |h| if colors[v] == Color::White { g.rot_prev(h) } else { g.rot_next(h) };
            let mut h = step(back);
            while h != back && es.dart_color[h].is_none() {
                h = step(h);
            }
            if es.dart_color[h] != Some(c) {
                out.push(Violation {
                    rule: RuleId::Turning,
                    location: Location::Vertex(v),
                    message: format!("incoming color-{c} edge {} is not followed by an outgoing color-{c} edge", edge_of(back)),
                });
            }
        }
    }
}

/// Checks every rule of `flavor`. For the strong flavor the walking, strong
/// edge and turning rules are reported as well.
pub fn validate(g: &PlaneGraph, l: &AngleLabeling, flavor: Flavor) -> Result<RuleReport> {
    check_preconditions(g, l, flavor)?;
    let mut violations = Vec::new();
    violations.extend((0..g.n()).filter_map(|v| check_vertex(g, l, flavor, v)));
    violations.extend((0..g.m()).filter_map(|e| check_edge(g, l, flavor, e)));
    violations.extend((0..g.num_faces()).filter_map(|f| check_face(g, l, flavor, f)));
    if flavor == Flavor::Strong {
        let mut dart_color = vec![None; g.num_darts()];
        for e in 0..g.m() {
            if check_edge(g, l, flavor, e).is_none() {
                induce_edge(g, l, flavor, e, &mut dart_color);
            }
        }
        strong_derived(g, l, &EdgeStructure { dart_color }, &mut violations);
    }
    Ok(RuleReport { flavor, violations })
}

pub fn is_valid(g: &PlaneGraph, l: &AngleLabeling, flavor: Flavor) -> bool {
    validate(g, l, flavor).map(|r| r.is_valid()).unwrap_or(false)
}

/// Orientation and 2-coloring induced by a valid labeling.
pub fn induce(g: &PlaneGraph, l: &AngleLabeling, flavor: Flavor) -> Result<EdgeStructure> {
    let report = validate(g, l, flavor)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidLabeling(format!("{} at {:?}: {}", v.rule, v.location, v.message)));
    }
    let mut dart_color = vec![None; g.num_darts()];
    for e in 0..g.m() {
        induce_edge(g, l, flavor, e, &mut dart_color);
    }
    Ok(EdgeStructure { dart_color })
}

/// Default bound on the edge count accepted by [`enumerate_labelings`].
pub const DEFAULT_ENUM_MAX_EDGES: usize = 16;

/// All valid labelings of `g` for `flavor`, in lexicographic order.
///
/// Every vertex picks one cyclic pattern allowed by the vertex rules; edges
/// and faces are checked as soon as all their vertices are fixed.
pub fn enumerate_labelings(g: &PlaneGraph, flavor: Flavor, max_edges: usize) -> Result<Vec<AngleLabeling>> {
    if g.m() > max_edges {
        return Err(Error::TooLarge(format!("{} edges exceed the bound {max_edges}", g.m())));
    }
    if preconditions(g, flavor).is_err() {
        return Ok(Vec::new());
    }
    let (s0, s1) = g.specials().unwrap();
    let n = g.n();
    // vertex order: BFS from s0
    let mut order = vec![s0];
    let mut pos = vec![usize::MAX; n];
    pos[s0] = 0;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for w in g.neighbors(v) {
            if pos[w] == usize::MAX {
                pos[w] = order.len();
                order.push(w);
            }
        }
    }
    let patterns: Vec<Vec<Vec<u8>>> = (0..n)
        .map(|v| {
            let k = g.degree(v);
            if v == s0 || v == s1 {
                vec![vec![u8::from(v == s1); k]]
            } else {
                two_block_patterns(k)
            }
        })
        .collect();
    let mut edges_at = vec![Vec::new(); n];
    for e in 0..g.m() {
        let (u, v) = g.endpoints(e);
        edges_at[if pos[u] > pos[v] { u } else { v }].push(e);
    }
    let mut faces_at = vec![Vec::new(); n];
    for f in 0..g.num_faces() {
        let last = g.face_vertices(f).into_iter().max_by_key(|&v| pos[v]).unwrap();
        faces_at[last].push(f);
    }
    let mut l = AngleLabeling::new(vec![0; g.num_darts()]);
    let mut out = Vec::new();
    let ctx = EnumCtx { g, flavor, order: &order, patterns: &patterns, edges_at: &edges_at, faces_at: &faces_at };
    ctx.recurse(0, &mut l, &mut out);
    out.retain(|x| is_valid(g, x, flavor));
    out.sort();
    Ok(out)
}

struct EnumCtx<'a> {
    g: &'a PlaneGraph,
    flavor: Flavor,
    order: &'a [VertexId],
    patterns: &'a [Vec<Vec<u8>>],
    edges_at: &'a [Vec<EdgeId>],
    faces_at: &'a [Vec<FaceId>],
}

impl EnumCtx<'_> {
    fn recurse(&self, i: usize, l: &mut AngleLabeling, out: &mut Vec<AngleLabeling>) {
        if i == self.order.len() {
            out.push(l.clone());
            return;
        }
        let v = self.order[i];
        let darts: Vec<HalfEdgeId> = self.g.darts_at(v).collect();
        for p in &self.patterns[v] {
            for (&h, &b) in darts.iter().zip(p) {
                l.labels[h] = b;
            }
            let ok = self.edges_at[v].iter().all(|&e| check_edge(self.g, l, self.flavor, e).is_none())
                && self.faces_at[v].iter().all(|&f| check_face(self.g, l, self.flavor, f).is_none());
            if ok {
                self.recurse(i + 1, l, out);
            }
        }
    }
}

/// Fills the unset angles of `partial` so that the result is valid for
/// `flavor`, trying assignments in lexicographic order. Returns the first
/// valid completion.
pub fn complete_labeling(g: &PlaneGraph, flavor: Flavor, partial: &[Option<u8>]) -> Option<AngleLabeling> {
    preconditions(g, flavor).ok()?;
    let unknown: Vec<HalfEdgeId> = (0..g.num_darts()).filter(|&h| partial[h].is_none()).collect();
    let mut rank = vec![usize::MAX; g.num_darts()];
    for (k, &h) in unknown.iter().enumerate() {
        rank[h] = k;
    }
    let mut l = AngleLabeling::new(partial.iter().map(|b| b.unwrap_or(0)).collect());
    // each element is checked once its last unknown angle is assigned
    let mut checks: Vec<Vec<Element>> = vec![Vec::new(); unknown.len()];
    let mut initial = Vec::new();
    let mut place = |deps: &mut dyn Iterator<Item = HalfEdgeId>, el: Element| {
        match deps.filter(|&h| rank[h] != usize::MAX).map(|h| rank[h]).max() {
            Some(k) => checks[k].push(el),
            None => initial.push(el),
        }
    };
    for v in 0..g.n() {
        place(&mut g.darts_at(v), Element::Vertex(v));
    }
    for e in 0..g.m() {
        let (a, b) = (2 * e, 2 * e + 1);
        place(&mut [a, g.rot_prev(a), b, g.rot_prev(b)].into_iter(), Element::Edge(e));
    }
    for f in 0..g.num_faces() {
        place(&mut g.face_walk(f).iter().copied(), Element::Face(f));
    }
    if !initial.iter().all(|el| el.holds(g, &l, flavor)) {
        return None;
    }
    fn rec(
        g: &PlaneGraph,
        flavor: Flavor,
        unknown: &[HalfEdgeId],
        checks: &[Vec<Element>],
        k: usize,
        l: &mut AngleLabeling,
    ) -> bool {
        if k == unknown.len() {
            return is_valid(g, l, flavor);
        }
        for b in [0, 1] {
            l.labels[unknown[k]] = b;
            if checks[k].iter().all(|el| el.holds(g, l, flavor)) && rec(g, flavor, unknown, checks, k + 1, l) {
                return true;
            }
        }
        false
    }
    rec(g, flavor, &unknown, &checks, 0, &mut l).then_some(l)
}

#[derive(Clone, Copy, Debug)]
enum Element {
    Vertex(VertexId),
    Edge(EdgeId),
    Face(FaceId),
}

impl Element {
    fn holds(self, g: &PlaneGraph, l: &AngleLabeling, flavor: Flavor) -> bool {
        match self {
            Element::Vertex(v) => check_vertex(g, l, flavor, v).is_none(),
            Element::Edge(e) => check_edge(g, l, flavor, e).is_none(),
            Element::Face(f) => check_face(g, l, flavor, f).is_none(),
        }
    }
}

/// Cyclic 0/1 sequences of length `k` with exactly two blocks.
fn two_block_patterns(k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for start in 0..k {
        for len in 1..k {
            let mut p = vec![0u8; k];
            for j in 0..len {
                p[(start + j) % k] = 1;
            }
            out.push(p);
        }
    }
    out
}

/// The 4-cycle `s0, a, s1, b` with its strong labeling.
#[cfg(test)]
pub(crate) fn c4_strong() -> (PlaneGraph, AngleLabeling) {
    use crate::embed::ColorMode;
    let g = PlaneGraph::from_rotation(
        Some(vec!["s0".into(), "a".into(), "s1".into(), "b".into()]),
        &[vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]],
        (0, 3),
        ColorMode::Auto,
        Some((0, 2)),
    )
    .unwrap();
    let inner = g.face(g.dart(0, 1).unwrap());
    let mut labels = vec![0u8; g.num_darts()];
    for h in 0..g.num_darts() {
        let is_inner = g.face(h) == inner;
        labels[h] = match (g.origin(h), is_inner) {
            (0, _) => 0,
            (1, true) => 1,
            (1, false) => 0,
            (2, _) => 1,
            (3, true) => 0,
            (3, false) => 1,
            _ => unreachable!(),
        };
    }
    (g, AngleLabeling::new(labels))
}
