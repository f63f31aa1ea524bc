//! Constructive labeling algorithms.
//!
//! Strong labelings are built by induction on the number of vertices:
//! interior degree-2 vertices are removed, otherwise a face at `s0` is
//! contracted towards `s0`. Generalized strong labelings follow the
//! edge-removal induction of the recognition theorem. Split and merge move
//! between generalized labelings and strong labelings of quadrangulations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::embed::{edge_of, is_quadrangulation, predicates, twin, Color, ColorMode, EdgeId, FaceId, HalfEdgeId, PlaneGraph, VertexId};
use crate::error::{Error, Result};
use crate::orient::generalized_via_flow;
use crate::rules::{complete_labeling, enumerate_labelings, induce, is_valid, AngleLabeling, Flavor};

/// Rebuilds a plane graph from per-vertex neighbor lists over a subset of
/// the vertices of `g`.
///
/// `rot[v]` is `None` for dropped vertices. Returns the new graph and the map
/// from old to new vertex ids.
pub(crate) fn rebuild(
    g: &PlaneGraph,
    rot: &[Option<Vec<VertexId>>],
    outer: (VertexId, VertexId),
    specials: Option<(VertexId, VertexId)>,
) -> Result<(PlaneGraph, Vec<Option<VertexId>>)> {
    let mut map = vec![None; g.n()];
    let mut next = 0;
    for (v, r) in rot.iter().enumerate() {
        if r.is_some() {
            map[v] = Some(next);
            next += 1;
        }
    }
    let id = |v: VertexId| map[v].ok_or_else(|| Error::Inconsistent(format!("dropped vertex {v} still referenced")));
    let mut names = Vec::with_capacity(next);
    let mut rotation = Vec::with_capacity(next);
    let mut colors = Vec::with_capacity(next);
    for (v, r) in rot.iter().enumerate() {
        if let Some(list) = r {
            names.push(g.name(v).to_string());
            rotation.push(list.iter().map(|&w| id(w)).collect::<Result<Vec<_>>>()?);
            if let Some(c) = g.color(v) {
                colors.push(c);
            }
        }
    }
    let mode = if g.colors().is_some() { ColorMode::Given(colors) } else { ColorMode::Absent };
    let specials = match specials {
        Some((a, b)) => Some((id(a)?, id(b)?)),
        None => None,
    };
    let h = PlaneGraph::from_rotation(Some(names), &rotation, (id(outer.0)?, id(outer.1)?), mode, specials)?;
    Ok((h, map))
}

/// Copies the labels of parent angles that survive unchanged in `child`.
///
/// An angle at `u` between neighbors `x` and `y` survives when the child has
/// the angle `(pi(u), pi(x), pi(y))`.
pub(crate) fn transfer(
    parent: &PlaneGraph,
    child: &PlaneGraph,
    pi: &[Option<VertexId>],
    labels: &AngleLabeling,
    complement: bool,
    out: &mut [Option<u8>],
) {
    for h in 0..parent.num_darts() {
        if out[h].is_some() {
            continue;
        }
        let (u, x, y) = (parent.origin(h), parent.dest(h), parent.dest(parent.rot_next(h)));
        let (Some(cu), Some(cx), Some(cy)) = (pi[u], pi[x], pi[y]) else {
            continue;
        };
        if let Some(ch) = child.dart(cu, cx) {
            if child.dest(child.rot_next(ch)) == cy {
                out[h] = Some(labels.get(ch) ^ u8::from(complement));
            }
        }
    }
}

fn strong_checks(q: &PlaneGraph) -> Result<(VertexId, VertexId)> {
    if !is_quadrangulation(q) {
        return Err(Error::NotQuadrangulation);
    }
    let (s0, s1) = q.specials().ok_or(Error::SpecialsMissing)?;
    let outer = q.outer_vertices();
    if !outer.contains(&s0) || !outer.contains(&s1) {
        return Err(Error::SpecialsNotOnOuterFace);
    }
    if q.color(s0) != Some(Color::Black) || q.color(s1) != Some(Color::Black) {
        return Err(Error::BadSpecials("specials must be the two black outer vertices".into()));
    }
    Ok((s0, s1))
}

/// A strong labeling of the quadrangulation `q`.
pub fn strong_label(q: &PlaneGraph) -> Result<AngleLabeling> {
    let q = if q.colors().is_none() { q.with_colors(ColorMode::Auto)? } else { q.clone() };
    strong_checks(&q)?;
    strong_rec(&q)
}

fn strong_rec(q: &PlaneGraph) -> Result<AngleLabeling> {
    let (s0, _) = q.specials().unwrap();
    if q.n() <= 4 {
        return enumerate_labelings(q, Flavor::Strong, q.m())?
            .into_iter()
            .next()
            .ok_or_else(|| Error::Inconsistent("base quadrangulation without strong labeling".into()));
    }
    let outer = q.outer_vertices();
    let interior_deg2 = (0..q.n()).find(|&v| q.degree(v) == 2 && !outer.contains(&v));
    if let Some(v) = interior_deg2 {
        let (child, pi) = remove_vertex(q, v)?;
        let lc = strong_rec(&child)?;
        let mut partial = vec![None; q.num_darts()];
        transfer(q, &child, &pi, &lc, false, &mut partial);
        // reinsertion is unique; let the validator find it
        return complete_labeling(q, Flavor::Strong, &partial)
            .ok_or_else(|| Error::Inconsistent(format!("no strong reinsertion of vertex {}", q.name(v))));
    }
    for h in q.darts_at(s0).collect::<Vec<_>>() {
        let f = q.face(h);
        if f == q.outer_face() {
            continue;
        }
        let Ok((child, rec)) = contract_face(q, f) else {
            continue;
        };
        let lc = strong_rec(&child)?;
        let mut pi: Vec<Option<VertexId>> = (0..q.n()).map(|v| child.vertex_by_name(q.name(v))).collect();
        pi[rec.p] = Some(child.vertex_by_name(q.name(s0)).unwrap());
        let mut partial = vec![None; q.num_darts()];
        // the angles inside the contracted face: 0 at s0, then the walking rule
        let walk = q.face_walk(f);
        let start = walk.iter().position(|&d| q.origin(d) == s0).unwrap();
        let mut label = 0u8;
        for i in 0..walk.len() {
            let d = walk[(start + i) % walk.len()];
            partial[d] = Some(label);
            if q.color(q.origin(d)) == Some(Color::Black) {
                label ^= 1;
            }
        }
        transfer(q, &child, &pi, &lc, false, &mut partial);
        let l = AngleLabeling::new(partial.iter().map(|b| b.unwrap_or(0)).collect());
        if partial.iter().all(Option::is_some) && is_valid(q, &l, Flavor::Strong) {
            return Ok(l);
        }
        return Err(Error::Inconsistent(format!("expansion of face {f} does not validate")));
    }
    Err(Error::Inconsistent("no contractible face at s0".into()))
}

/// `q - v` for a vertex `v` not on the outer face.
fn remove_vertex(q: &PlaneGraph, v: VertexId) -> Result<(PlaneGraph, Vec<Option<VertexId>>)> {
    let rot: Vec<Option<Vec<VertexId>>> = (0..q.n())
        .map(|u| (u != v).then(|| q.neighbors(u).into_iter().filter(|&w| w != v).collect()))
        .collect();
    let anchor = q.outer_anchor();
    rebuild(q, &rot, (q.origin(anchor), q.dest(anchor)), q.specials())
}

/// Undo information for [`contract_face`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contraction {
    /// Index of the removed vertex in the original graph.
    pub p: VertexId,
    pub p_name: String,
    pub p_color: Option<Color>,
    /// Original neighbor lists (by name) of every vertex the contraction touched.
    pub rotations: Vec<(String, Vec<String>)>,
    /// Original outer dart, by name.
    pub outer: (String, String),
}

/// Contracts the bounded face `f` at `s0`, identifying its opposite vertex with `s0`.
pub fn contract_face(q: &PlaneGraph, f: FaceId) -> Result<(PlaneGraph, Contraction)> {
    let (s0, s1) = q.specials().ok_or(Error::SpecialsMissing)?;
    if f >= q.num_faces() || f == q.outer_face() {
        return Err(Error::NotContractible(format!("face {f} is not a bounded face")));
    }
    let walk = q.face_walk(f);
    let Some(i0) = walk.iter().position(|&d| q.origin(d) == s0) else {
        return Err(Error::NotContractible(format!("face {f} is not incident to s0")));
    };
    if walk.len() != 4 {
        return Err(Error::NotQuadrangulation);
    }
    let vtx = |k: usize| q.origin(walk[(i0 + k) % 4]);
    let (a, p, b) = (vtx(1), vtx(2), vtx(3));
    if p == s1 {
        return Err(Error::NotContractible("face contains s1".into()));
    }
    let nbrs = |v: VertexId| q.neighbors(v);
    // p: ..., b, a, c1, ..., ck, (b) in clockwise order
    let pn = nbrs(p);
    let ia = pn.iter().position(|&x| x == a).unwrap();
    let cs: Vec<VertexId> = (1..pn.len()).map(|k| pn[(ia + k) % pn.len()]).take_while(|&x| x != b).collect();
    let s0n = nbrs(s0);
    if cs.iter().any(|c| s0n.contains(c)) {
        return Err(Error::NotContractible("contraction would create a parallel edge".into()));
    }
    let mut rot: Vec<Option<Vec<VertexId>>> = (0..q.n()).map(|v| Some(nbrs(v))).collect();
    rot[p] = None;
    // s0: ..., a, b, ... becomes ..., a, c1, ..., ck, b, ...
    let ja = s0n.iter().position(|&x| x == a).unwrap();
    let mut new_s0 = Vec::with_capacity(s0n.len() + cs.len());
    for k in 0..s0n.len() {
        let x = s0n[(ja + k) % s0n.len()];
        new_s0.push(x);
        if k == 0 {
            new_s0.extend(&cs);
        }
    }
    rot[s0] = Some(new_s0);
    for x in [a, b] {
        rot[x].as_mut().unwrap().retain(|&y| y != p);
    }
    for &c in &cs {
        for y in rot[c].as_mut().unwrap().iter_mut() {
            if *y == p {
                *y = s0;
            }
        }
    }
    let anchor = q.outer_walk_from(s0).into_iter().find(|&d| q.origin(d) != p && q.dest(d) != p).unwrap();
    let (child, _) = rebuild(q, &rot, (q.origin(anchor), q.dest(anchor)), q.specials())?;
    if !is_quadrangulation(&child) {
        return Err(Error::NotContractible("contraction does not yield a quadrangulation".into()));
    }
    let touched: Vec<VertexId> = [s0, p, a, b].into_iter().chain(cs.iter().copied()).collect();
    let names = |vs: Vec<VertexId>| vs.into_iter().map(|v| q.name(v).to_string()).collect::<Vec<_>>();
    let oa = q.outer_anchor();
    let record = Contraction {
        p,
        p_name: q.name(p).to_string(),
        p_color: q.color(p),
        rotations: touched.into_iter().map(|v| (q.name(v).to_string(), names(nbrs(v)))).collect(),
        outer: (q.name(q.origin(oa)).to_string(), q.name(q.dest(oa)).to_string()),
    };
    Ok((child, record))
}

/// Exact inverse of [`contract_face`].
pub fn expand_face(child: &PlaneGraph, rec: &Contraction) -> Result<PlaneGraph> {
    let n = child.n() + 1;
    if rec.p >= n {
        return Err(Error::InvalidInput("contraction record does not fit the graph".into()));
    }
    let mut names: Vec<String> = child.names().to_vec();
    names.insert(rec.p, rec.p_name.clone());
    let index = |name: &str| {
        names.iter().position(|x| x == name).ok_or_else(|| Error::InvalidInput(format!("unknown vertex {name}")))
    };
    let mut rotation = Vec::with_capacity(n);
    for v in 0..n {
        let name = &names[v];
        let list: Vec<String> = match rec.rotations.iter().find(|(x, _)| x == name) {
            Some((_, r)) => r.clone(),
            None => {
                let cv = child.vertex_by_name(name).unwrap();
                child.neighbors(cv).into_iter().map(|w| child.name(w).to_string()).collect()
            }
        };
        rotation.push(list.iter().map(|x| index(x)).collect::<Result<Vec<_>>>()?);
    }
    let colors = match child.colors() {
        Some(cs) => {
            let mut cs = cs.to_vec();
            cs.insert(rec.p, rec.p_color.ok_or_else(|| Error::InvalidInput("missing color of p".into()))?);
            ColorMode::Given(cs)
        }
        None => ColorMode::Absent,
    };
    let specials = match child.specials() {
        Some((a, b)) => Some((index(child.name(a))?, index(child.name(b))?)),
        None => None,
    };
    let outer = (index(&rec.outer.0)?, index(&rec.outer.1)?);
    PlaneGraph::from_rotation(Some(names.clone()), &rotation, outer, colors, specials)
}

/// The recognition conditions for generalized strong labelings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Condition {
    /// (1) the special vertices are nonadjacent.
    SpecialsNonadjacent,
    /// (2) the graph is weakly 2-connected.
    Weakly2Connected,
    /// (3) the graph contains no block with a right chord.
    NoRightChord,
}

impl Condition {
    pub fn number(self) -> u8 {
        match self {
            Condition::SpecialsNonadjacent => 1,
            Condition::Weakly2Connected => 2,
            Condition::NoRightChord => 3,
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self {
            Condition::SpecialsNonadjacent => "special vertices are adjacent",
            Condition::Weakly2Connected => "graph is not weakly 2-connected",
            Condition::NoRightChord => "graph contains a block with a right chord",
        };
        write!(f, "condition ({}): {what}", self.number())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneralizedOutcome {
    Labeling(AngleLabeling),
    NoLabeling(Condition),
}

impl GeneralizedOutcome {
    pub fn labeling(&self) -> Option<&AngleLabeling> {
        match self {
            GeneralizedOutcome::Labeling(l) => Some(l),
            GeneralizedOutcome::NoLabeling(_) => None,
        }
    }
}

/// Counters of one [`generalized_label_stats`] run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralizedStats {
    /// Induction steps taken (edge removals and component splits).
    pub steps: usize,
    /// Subproblems where the induction found no gluing and the labeling was
    /// obtained from a max-flow orientation of the suspension instead.
    pub flow_fallbacks: usize,
}

/// The first violated recognition condition, if any.
pub fn violated_condition(g: &PlaneGraph) -> Result<Option<Condition>> {
    let p = predicates(g)?;
    Ok(if p.specials_adjacent {
        Some(Condition::SpecialsNonadjacent)
    } else if !p.is_weakly_2connected {
        Some(Condition::Weakly2Connected)
    } else if p.has_block_with_right_chord {
        Some(Condition::NoRightChord)
    } else {
        None
    })
}

fn generalized_input(g: &PlaneGraph) -> Result<PlaneGraph> {
    let (s0, s1) = g.specials().ok_or(Error::SpecialsMissing)?;
    let g = if g.colors().is_none() { g.with_colors(ColorMode::Auto)? } else { g.clone() };
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    if !g.on_outer_face(s0) || !g.on_outer_face(s1) {
        return Err(Error::SpecialsNotOnOuterFace);
    }
    Ok(g)
}

/// A generalized strong labeling, or the recognition condition that rules
/// one out.
pub fn generalized_label(g: &PlaneGraph) -> Result<GeneralizedOutcome> {
    Ok(generalized_label_stats(g)?.0)
}

/// [`generalized_label`] together with counters of the construction.
pub fn generalized_label_stats(g: &PlaneGraph) -> Result<(GeneralizedOutcome, GeneralizedStats)> {
    let g = generalized_input(g)?;
    let mut stats = GeneralizedStats::default();
    if let Some(c) = violated_condition(&g)? {
        return Ok((GeneralizedOutcome::NoLabeling(c), stats));
    }
    let l = generalized_rec(&g, &mut stats)?;
    Ok((GeneralizedOutcome::Labeling(l), stats))
}

/// Labels a graph satisfying the three conditions.
fn generalized_rec(g: &PlaneGraph, stats: &mut GeneralizedStats) -> Result<AngleLabeling> {
    if g.m() <= 3 {
        return enumerate_labelings(g, Flavor::Generalized, g.m())?
            .into_iter()
            .next()
            .ok_or_else(|| Error::Inconsistent("small graph without generalized labeling".into()));
    }
    stats.steps += 1;
    let (s0, _) = g.specials().unwrap();
    let h_out = g.darts_at(s0).find(|&h| g.face(h) == g.outer_face()).unwrap();
    // the first edge clockwise after the outer angle at s0, then the last one
    for d in [g.rot_next(h_out), h_out] {
        if let Some(l) = induction_step(g, d, stats)? {
            return Ok(l);
        }
    }
    stats.flow_fallbacks += 1;
    generalized_via_flow(g)
}

/// Completes `partial` after freeing the angles at `free`; if that fails,
/// also frees every angle of the two faces along the removed edge `d`.
fn completes(g: &PlaneGraph, partial: &[Option<u8>], free: &[VertexId], d: HalfEdgeId) -> Option<AngleLabeling> {
    let mut partial = partial.to_vec();
    for &v in free {
        for h in g.darts_at(v) {
            partial[h] = None;
        }
    }
    if let Some(l) = complete_labeling(g, Flavor::Generalized, &partial) {
        return Some(l);
    }
    for f in [g.face(d), g.face(twin(d))] {
        for &h in g.face_walk(f) {
            partial[h] = None;
        }
    }
    complete_labeling(g, Flavor::Generalized, &partial)
}

/// Removes the edge of the dart `d` leaving `s0` and labels the rest.
fn induction_step(g: &PlaneGraph, d: HalfEdgeId, stats: &mut GeneralizedStats) -> Result<Option<AngleLabeling>> {
    let (s0, s1) = g.specials().unwrap();
    let v = g.dest(d);
    let keep_all: Vec<Option<Vec<VertexId>>> = (0..g.n()).map(|u| Some(g.neighbors(u))).collect();
    if g.degree(s0) == 1 {
        // s0 hangs off v: label G - s0 with specials (v, s1)
        let mut rot = keep_all.clone();
        rot[s0] = None;
        rot[v].as_mut().unwrap().retain(|&x| x != s0);
        let anchor = g.outer_walk_from(v).into_iter().find(|&h| g.origin(h) != s0 && g.dest(h) != s0).unwrap();
        let (h, pi) = rebuild(g, &rot, (g.origin(anchor), g.dest(anchor)), Some((v, s1)))?;
        let lh = match violated_condition(&h)? {
            None => generalized_rec(&h, stats)?,
            Some(Condition::SpecialsNonadjacent) if h.m() > 1 => {
                // drop the chord v s1 and label the remaining block
                let (hv, hs1) = (pi[v].unwrap(), pi[s1].unwrap());
                let mut rot2: Vec<Option<Vec<VertexId>>> = (0..h.n()).map(|u| Some(h.neighbors(u))).collect();
                rot2[hv].as_mut().unwrap().retain(|&x| x != hs1);
                rot2[hs1].as_mut().unwrap().retain(|&x| x != hv);
                let a2 = h.outer_walk_from(hv).into_iter().find(|&x| edge_of(x) != edge_of(h.dart(hv, hs1).unwrap()));
                let Some(a2) = a2 else { return Ok(None) };
                let Ok((h2, pi2)) = rebuild(&h, &rot2, (h.origin(a2), h.dest(a2)), Some((hv, hs1))) else {
                    return Ok(None);
                };
                if violated_condition(&h2)?.is_some() {
                    return Ok(None);
                }
                let l2 = generalized_rec(&h2, stats)?;
                let pi_g: Vec<Option<VertexId>> = pi.iter().map(|x| x.and_then(|y| pi2[y])).collect();
                let mut partial = vec![None; g.num_darts()];
                transfer(g, &h2, &pi_g, &l2, false, &mut partial);
                return Ok(completes(g, &partial, &[v, s1], d));
            }
            _ => return Ok(None),
        };
        let mut partial = vec![None; g.num_darts()];
        transfer(g, &h, &pi, &lh, false, &mut partial);
        return Ok(completes(g, &partial, &[v], d));
    }
    let mut rot = keep_all.clone();
    rot[s0].as_mut().unwrap().retain(|&x| x != v);
    rot[v].as_mut().unwrap().retain(|&x| x != s0);
    let other = g.darts_at(s0).find(|&h| h != d && (g.face(h) == g.outer_face() || g.face(twin(h)) == g.outer_face()));
    let anchor = match other {
        Some(h) if g.face(h) == g.outer_face() => (s0, g.dest(h)),
        Some(h) => (g.dest(h), s0),
        None => return Ok(None),
    };
    let Ok((gp, pi)) = rebuild(g, &rot, anchor, Some((s0, s1))) else {
        return Ok(None);
    };
    match violated_condition(&gp)? {
        None => {
            let lp = generalized_rec(&gp, stats)?;
            let mut partial = vec![None; g.num_darts()];
            transfer(g, &gp, &pi, &lp, false, &mut partial);
            Ok(completes(g, &partial, &[], d))
        }
        Some(Condition::Weakly2Connected) => cut_vertex_case(g, &rot, d, stats),
        Some(_) => Ok(None),
    }
}

/// `g - s0v` has a cut vertex `w`: label the part between `v` and `w` and the
/// part containing the specials separately and glue them at `w`.
fn cut_vertex_case(
    g: &PlaneGraph,
    rot: &[Option<Vec<VertexId>>],
    d: HalfEdgeId,
    stats: &mut GeneralizedStats,
) -> Result<Option<AngleLabeling>> {
    let (s0, s1) = g.specials().unwrap();
    let v = g.dest(d);
    let mut adj: Vec<Vec<VertexId>> = rot.iter().map(|r| r.clone().unwrap()).collect();
    adj[s0].push(s1);
    adj[s1].push(s0);
    let side_of_s0 = |w: VertexId| -> Vec<bool> {
        let mut seen = vec![false; adj.len()];
        seen[w] = true;
        seen[s0] = true;
        let mut stack = vec![s0];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    };
    let mut best: Option<(usize, VertexId, Vec<bool>)> = None;
    for w in 0..g.n() {
        if w == s0 || w == v {
            continue;
        }
        let side = side_of_s0(w);
        if side[v] {
            continue;
        }
        let size = side.iter().filter(|&&b| b).count();
        if best.as_ref().map_or(true, |b| size < b.0) {
            best = Some((size, w, side));
        }
    }
    let Some((_, w, k2)) = best else {
        return Ok(None);
    };
    let outer = g.outer_face();
    let e = edge_of(d);
    let part = |inside: &dyn Fn(VertexId) -> bool, specials: (VertexId, VertexId)| -> Result<Option<(PlaneGraph, Vec<Option<VertexId>>)>> {
        let sub: Vec<Option<Vec<VertexId>>> = (0..g.n())
            .map(|x| inside(x).then(|| rot[x].as_ref().unwrap().iter().copied().filter(|&y| inside(y)).collect()))
            .collect();
        let anchor = (0..g.num_darts()).find(|&h| {
            g.face(h) == outer && edge_of(h) != e && inside(g.origin(h)) && inside(g.dest(h))
        });
        let Some(anchor) = anchor else { return Ok(None) };
        Ok(rebuild(g, &sub, (g.origin(anchor), g.dest(anchor)), Some(specials)).ok())
    };
    let Some((g2, pi2)) = part(&|x| k2[x], (s0, s1))? else {
        return Ok(None);
    };
    if violated_condition(&g2)?.is_some() {
        return Ok(None);
    }
    let l2 = generalized_rec(&g2, stats)?;
    let mut base = vec![None; g.num_darts()];
    transfer(g, &g2, &pi2, &l2, false, &mut base);
    let in_k1 = |x: VertexId| !k2[x] || x == w;
    let mut k1_labelings = Vec::new();
    for specials in [(v, w), (w, v)] {
        let Some((g1, pi1)) = part(&in_k1, specials)? else { continue };
        if g1.m() > 1 && violated_condition(&g1)?.is_none() {
            let l1 = generalized_rec(&g1, stats)?;
            k1_labelings.push((g1, pi1, l1));
        }
    }
    for (g1, pi1, l1) in &k1_labelings {
        for complement in [false, true] {
            let mut partial = base.clone();
            transfer(g, g1, pi1, l1, complement, &mut partial);
            if let Some(l) = completes(g, &partial, &[v, w], d) {
                return Ok(Some(l));
            }
        }
    }
    if k1_labelings.is_empty() {
        return Ok(completes(g, &base, &[v, w], d));
    }
    Ok(None)
}

/// One move of a split/merge sequence, by vertex index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Move {
    /// Split the bidirected edge `u v` towards `x`.
    Split { u: VertexId, v: VertexId, x: VertexId },
    /// Merge at the angle of `v` following its edge to `after`.
    Merge { v: VertexId, after: VertexId },
}

/// Copies labels between two simple graphs on the same vertex set by
/// matching darts through their endpoints.
fn relabel(from: &PlaneGraph, l: &AngleLabeling, to: &PlaneGraph) -> Vec<Option<u8>> {
    (0..to.num_darts())
        .map(|h| from.dart(to.origin(h), to.dest(h)).map(|k| l.get(k)))
        .collect()
}

fn with_rotation(g: &PlaneGraph, rot: &[Vec<VertexId>], outer: (VertexId, VertexId)) -> Result<PlaneGraph> {
    let colors = g.colors().map_or(ColorMode::Absent, |c| ColorMode::Given(c.to_vec()));
    PlaneGraph::from_rotation(Some(g.names().to_vec()), rot, outer, colors, g.specials())
}

/// Opens the bidirected edge `e` into two unidirected edges by adding an
/// edge from its white end to the black vertex `x` inside the face that
/// sees `e` clockwise from white to black.
pub fn split_edge(g: &PlaneGraph, l: &AngleLabeling, e: EdgeId, x: VertexId) -> Result<(PlaneGraph, AngleLabeling)> {
    let es = induce(g, l, Flavor::Generalized)?;
    if e >= g.m() || !es.is_bidirected(e) {
        return Err(Error::NotBidirected);
    }
    let d = g.white_to_black(e).ok_or(Error::NotBipartite)?;
    let (v, u) = (g.origin(d), g.dest(d));
    let f = g.face(d);
    let walk = g.face_walk(f);
    let start = walk.iter().position(|&h| h == d).unwrap();
    let hx = (0..walk.len()).map(|k| walk[(start + k) % walk.len()]).find(|&h| g.origin(h) == x);
    let Some(hx) = hx else {
        return Err(Error::InvalidInput(format!("vertex {} is not on the split face", g.name(x))));
    };
    if x == u || g.color(x) != Some(Color::Black) || g.dart(v, x).is_some() {
        return Err(Error::NoFeasibleTarget);
    }
    let mut rot = g.rotation();
    let iv = rot[v].iter().position(|&y| y == u).unwrap();
    rot[v].insert(iv + 1, x);
    let y = g.dest(hx);
    let ix = rot[x].iter().position(|&z| z == y).unwrap();
    rot[x].insert(ix + 1, v);
    // the split face becomes v, u, ..., x (angle at v after u) and x, ..., v
    let outer = if f == g.outer_face() {
        let (s0, s1) = g.specials().ok_or(Error::SpecialsMissing)?;
        let probe = with_rotation(g, &rot, (v, u))?;
        let (fa, fb) = (probe.face(probe.dart(v, u).unwrap()), probe.face(probe.dart(v, x).unwrap()));
        let holds = |face: FaceId| {
            let vs = probe.face_vertices(face);
            vs.contains(&s0) && vs.contains(&s1)
        };
        if holds(fa) {
            (v, u)
        } else if holds(fb) {
            (v, x)
        } else {
            return Err(Error::OuterFaceCare);
        }
    } else {
        let a = g.outer_anchor();
        (g.origin(a), g.dest(a))
    };
    let g2 = with_rotation(g, &rot, outer)?;
    let mut partial = relabel(g, l, &g2);
    let vu = g2.dart(v, u).unwrap();
    partial[vu] = Some(1 - l.get(d));
    partial[g2.dart(v, x).unwrap()] = Some(l.get(d));
    partial[g2.dart(x, v).unwrap()] = Some(l.get(hx));
    let l2 = AngleLabeling::new(partial.into_iter().map(|b| b.unwrap()).collect());
    if !is_valid(&g2, &l2, Flavor::Generalized) {
        return Err(Error::NoFeasibleTarget);
    }
    Ok((g2, l2))
}

/// Black vertices of the split face of `e`, the candidate from the face
/// structure first: the black end of the first edge with equal labels met
/// walking the face clockwise from the white end of `e`.
pub fn split_targets(g: &PlaneGraph, l: &AngleLabeling, e: EdgeId) -> Result<Vec<VertexId>> {
    let d = g.white_to_black(e).ok_or(Error::NotBipartite)?;
    let walk = g.face_walk(g.face(d));
    let start = walk.iter().position(|&h| h == d).unwrap();
    let order: Vec<HalfEdgeId> = (0..walk.len()).map(|k| walk[(start + k) % walk.len()]).collect();
    let mut out = Vec::new();
    for &h in &order {
        let nx = g.face_next(h);
        if l.get(h) == l.get(nx) && g.color(g.dest(h)) == Some(Color::Black) {
            out.push(g.dest(h));
            break;
        }
    }
    for &h in &order {
        let y = g.origin(h);
        if g.color(y) == Some(Color::Black) && !out.contains(&y) {
            out.push(y);
        }
    }
    Ok(out)
}

/// The first target `x` for which [`split_edge`] succeeds.
pub fn feasible_split(g: &PlaneGraph, l: &AngleLabeling, e: EdgeId) -> Result<(VertexId, PlaneGraph, AngleLabeling)> {
    let mut care = false;
    for x in split_targets(g, l, e)? {
        match split_edge(g, l, e, x) {
            Ok((g2, l2)) => return Ok((x, g2, l2)),
            Err(Error::OuterFaceCare) => care = true,
            Err(Error::NoFeasibleTarget) => {}
            Err(err) => return Err(err),
        }
    }
    Err(if care { Error::OuterFaceCare } else { Error::NoFeasibleTarget })
}

/// Removes the outgoing one of the two unidirected edges bounding the angle
/// `h`, turning the incoming one into a bidirected edge.
pub fn merge(g: &PlaneGraph, l: &AngleLabeling, h: HalfEdgeId) -> Result<(PlaneGraph, AngleLabeling)> {
    let es = induce(g, l, Flavor::Generalized)?;
    let v = g.origin(h);
    let nx = g.rot_next(h);
    if nx == h || edge_of(nx) == edge_of(h) {
        return Err(Error::NotMergeable("the angle is bounded by a single edge".into()));
    }
    let dir = |k: HalfEdgeId| es.directed_dart(edge_of(k));
    let (out, keep) = match (dir(h), dir(nx)) {
        (Some(a), Some(b)) if a == twin(h) && b == nx => (nx, h),
        (Some(a), Some(b)) if a == h && b == twin(nx) => (h, nx),
        _ => {
            return Err(Error::NotMergeable(format!(
                "angle at {} is not between an incoming and an outgoing unidirected edge",
                g.name(v)
            )))
        }
    };
    let x = g.dest(out);
    // the merged angle at v takes the label beyond the removed edge
    let beyond = if out == nx { l.get(nx) } else { l.get(g.rot_prev(h)) };
    let at_x = (l.get(g.rot_prev(twin(out))), l.get(twin(out)));
    if at_x.0 != at_x.1 {
        return Err(Error::NotMergeable(format!("labels at {} differ across the removed edge", g.name(x))));
    }
    let mut rot = g.rotation();
    rot[v].retain(|&y| y != x);
    rot[x].retain(|&y| y != v);
    if rot[v].is_empty() || rot[x].is_empty() {
        return Err(Error::NotMergeable("merge would isolate a vertex".into()));
    }
    let a = g.outer_anchor();
    let outer = if edge_of(a) == edge_of(out) {
        let b = g.face_next(a);
        (g.origin(b), g.dest(b))
    } else {
        (g.origin(a), g.dest(a))
    };
    let g2 = with_rotation(g, &rot, outer).map_err(|err| Error::NotMergeable(err.to_string()))?;
    let mut partial = relabel(g, l, &g2);
    let w = g.dest(keep);
    let merged_v = if out == nx { g2.dart(v, w).unwrap() } else { g2.rot_prev(g2.dart(v, w).unwrap()) };
    partial[merged_v] = Some(beyond);
    let y = g.dest(g.rot_prev(twin(out)));
    partial[g2.dart(x, y).unwrap()] = Some(at_x.0);
    let l2 = AngleLabeling::new(partial.into_iter().map(|b| b.unwrap()).collect());
    if !is_valid(&g2, &l2, Flavor::Generalized) {
        return Err(Error::NotMergeable("merged labeling violates the rules".into()));
    }
    Ok((g2, l2))
}

/// The mirror image of `g` (all rotations reversed) with the two color
/// classes exchanged, and the labeling carried along angle by angle.
///
/// This maps generalized labelings with white specials to generalized
/// labelings with black specials.
pub fn mirror_swap(g: &PlaneGraph, l: &AngleLabeling) -> Result<(PlaneGraph, AngleLabeling)> {
    let rot: Vec<Vec<VertexId>> = g.rotation().into_iter().map(|r| r.into_iter().rev().collect()).collect();
    let colors = match g.colors() {
        Some(c) => ColorMode::Given(c.iter().map(|x| x.other()).collect()),
        None => ColorMode::Absent,
    };
    let a = g.outer_anchor();
    let m = PlaneGraph::from_rotation(Some(g.names().to_vec()), &rot, (g.dest(a), g.origin(a)), colors, g.specials())?;
    let mut labels = vec![0; m.num_darts()];
    for h in 0..g.num_darts() {
        // the angle after h becomes the angle after rot_next(h)
        let k = m.dart(g.origin(h), g.dest(g.rot_next(h))).unwrap();
        labels[k] = l.get(h);
    }
    Ok((m, AngleLabeling::new(labels)))
}

/// Result of [`split_to_quadrangulation`].
#[derive(Clone, Debug)]
pub struct SplitRun {
    pub quadrangulation: PlaneGraph,
    pub labeling: AngleLabeling,
    pub trace: Vec<Move>,
    /// Every intermediate graph and labeling, starting with the input.
    pub steps: Vec<(PlaneGraph, AngleLabeling)>,
}

/// Splits bidirected edges until none is left.
///
/// The final labeling is a strong labeling. Specials of different colors
/// can never end up as the two black vertices of a quadrangulation and are
/// rejected. White specials are handled on [`mirror_swap`] of the input, so
/// the run (steps and result) lives on the mirrored graph with swapped colors.
pub fn split_to_quadrangulation(g: &PlaneGraph, l: &AngleLabeling) -> Result<SplitRun> {
    let report = crate::rules::validate(g, l, Flavor::Generalized)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidLabeling(format!("{}: {}", v.rule, v.message)));
    }
    let (s0, s1) = g.specials().unwrap();
    if g.color(s0) != g.color(s1) {
        return Err(Error::BadSpecials("specials of different colors cannot both be black in a quadrangulation".into()));
    }
    let mut cur = if g.color(s0) == Some(Color::White) { mirror_swap(g, l)? } else { (g.clone(), l.clone()) };
    let mut steps = vec![cur.clone()];
    let mut trace = Vec::new();
    loop {
        let es = induce(&cur.0, &cur.1, Flavor::Generalized)?;
        let Some(e) = (0..cur.0.m()).find(|&e| es.is_bidirected(e)) else { break };
        let (x, g2, l2) = feasible_split(&cur.0, &cur.1, e)?;
        let d = cur.0.white_to_black(e).unwrap();
        trace.push(Move::Split { u: cur.0.dest(d), v: cur.0.origin(d), x });
        cur = (g2, l2);
        steps.push(cur.clone());
    }
    let (q, lq) = cur;
    if !is_valid(&q, &lq, Flavor::Strong) {
        return Err(Error::Inconsistent("split sequence ended without a strong labeling".into()));
    }
    Ok(SplitRun { quadrangulation: q, labeling: lq, trace, steps })
}

/// Replays a trace of moves.
pub fn replay(g: &PlaneGraph, l: &AngleLabeling, trace: &[Move]) -> Result<(PlaneGraph, AngleLabeling)> {
    let mut cur = (g.clone(), l.clone());
    for mv in trace {
        cur = match *mv {
            Move::Split { u, v, x } => {
                let d = cur.0.dart(v, u).ok_or_else(|| Error::InvalidInput("split of a missing edge".into()))?;
                split_edge(&cur.0, &cur.1, edge_of(d), x)?
            }
            Move::Merge { v, after } => {
                let h = cur.0.dart(v, after).ok_or_else(|| Error::InvalidInput("merge at a missing edge".into()))?;
                merge(&cur.0, &cur.1, h)?
            }
        };
    }
    Ok(cur)
}
