//! Plane Laman graphs: the pebble-game test, planar Henneberg sequences,
//! extended weak labelings and the two-tree decomposition.

use serde::{Deserialize, Serialize};

use crate::build::transfer;
use crate::embed::{edge_of, EdgeId, PlaneGraph, VertexId};
use crate::error::{Error, Result};
use crate::rules::{complete_labeling, AngleLabeling, Flavor};

/// (2,3) pebble game: true iff `edges` is a Laman graph on `n` vertices.
pub fn is_laman_edges(n: usize, edges: &[(VertexId, VertexId)]) -> bool {
    if n < 2 || edges.len() != 2 * n - 3 {
        return false;
    }
    let mut pebbles = vec![2u8; n];
    // accepted edges, directed from the vertex that paid for them
    let mut tail: Vec<VertexId> = Vec::new();
    let mut head: Vec<VertexId> = Vec::new();

    fn gather(
        root: VertexId,
        keep: VertexId,
        pebbles: &mut [u8],
        tail: &mut [VertexId],
        head: &mut [VertexId],
    ) -> bool {
        let n = pebbles.len();
        let mut via: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for i in 0..tail.len() {
                if tail[i] != x || seen[head[i]] {
                    continue;
                }
                let y = head[i];
                seen[y] = true;
                via[y] = Some(i);
                if y != keep && pebbles[y] > 0 {
                    pebbles[y] -= 1;
                    pebbles[root] += 1;
                    let mut z = y;
                    while let Some(i) = via[z] {
                        std::mem::swap(&mut tail[i], &mut head[i]);
                        z = head[i];
                    }
                    return true;
                }
                stack.push(y);
            }
        }
        false
    }

    for &(u, v) in edges {
        if u == v || u >= n || v >= n {
            return false;
        }
        while pebbles[u] + pebbles[v] < 4 {
            let moved = (pebbles[u] < 2 && gather(u, v, &mut pebbles, &mut tail, &mut head))
                || (pebbles[v] < 2 && gather(v, u, &mut pebbles, &mut tail, &mut head));
            if !moved {
                return false;
            }
        }
        pebbles[u] -= 1;
        tail.push(u);
        head.push(v);
    }
    true
}

/// True iff the underlying graph of `g` is Laman.
pub fn is_laman(g: &PlaneGraph) -> bool {
    g.is_simple() && is_laman_edges(g.n(), &(0..g.m()).map(|e| g.endpoints(e)).collect::<Vec<_>>())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HennebergStep {
    /// `v` joins `a` and `b` inside the face right of the dart `a -> after`;
    /// at `a` it is placed right after `after` in clockwise order.
    I { v: VertexId, a: VertexId, b: VertexId, after: VertexId },
    /// `v` subdivides `ab` and joins `w` in the face right of `a -> b`
    /// (`side` 0) or of `b -> a` (`side` 1).
    II { v: VertexId, a: VertexId, b: VertexId, w: VertexId, side: u8 },
}

impl HennebergStep {
    pub fn vertex(&self) -> VertexId {
        match *self {
            HennebergStep::I { v, .. } | HennebergStep::II { v, .. } => v,
        }
    }
}

/// A planar Henneberg construction of a graph, in the vertex numbering of
/// that graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HennebergSequence {
    pub n: usize,
    /// Base triangle; its edge `base[0] base[1]` is never split.
    pub base: [VertexId; 3],
    pub steps: Vec<HennebergStep>,
    /// The final outer face is right of this dart.
    pub outer: (VertexId, VertexId),
    pub names: Vec<String>,
}

type Rot = Vec<Option<Vec<VertexId>>>;

fn rot_of(g: &PlaneGraph) -> Rot {
    g.rotation().into_iter().map(Some).collect()
}

fn pos(r: &[VertexId], x: VertexId) -> Result<usize> {
    r.iter().position(|&y| y == x).ok_or_else(|| Error::Inconsistent(format!("missing neighbor {x}")))
}

fn nbrs(rot: &Rot, v: VertexId) -> Result<&Vec<VertexId>> {
    rot.get(v).and_then(|r| r.as_ref()).ok_or_else(|| Error::InvalidInput(format!("vertex {v} is not present")))
}

/// Darts `(x, y)` of the face right of `a -> b`.
fn face_walk(rot: &Rot, a: VertexId, b: VertexId) -> Result<Vec<(VertexId, VertexId)>> {
    nbrs(rot, a)?;
    pos(nbrs(rot, a)?, b)?;
    let mut walk = vec![(a, b)];
    let (mut x, mut y) = (a, b);
    loop {
        let r = nbrs(rot, y)?;
        let i = pos(r, x)?;
        let z = r[(i + r.len() - 1) % r.len()];
        (x, y) = (y, z);
        if (x, y) == (a, b) {
            return Ok(walk);
        }
        if walk.len() > 4 * rot.len() * rot.len() + 8 {
            return Err(Error::Inconsistent("face walk does not close".into()));
        }
        walk.push((x, y));
    }
}

fn insert_after(rot: &mut Rot, u: VertexId, after: VertexId, x: VertexId) -> Result<()> {
    let r = rot[u].as_mut().ok_or_else(|| Error::InvalidInput(format!("vertex {u} is not present")))?;
    let i = pos(r, after)?;
    r.insert(i + 1, x);
    Ok(())
}

fn replace(rot: &mut Rot, u: VertexId, old: VertexId, new: VertexId) -> Result<()> {
    let r = rot[u].as_mut().ok_or_else(|| Error::InvalidInput(format!("vertex {u} is not present")))?;
    let i = pos(r, old)?;
    r[i] = new;
    Ok(())
}

fn corner_in(walk: &[(VertexId, VertexId)], x: VertexId) -> Result<VertexId> {
    walk.iter()
        .find(|&&(u, _)| u == x)
        .map(|&(_, y)| y)
        .ok_or_else(|| Error::InvalidInput(format!("vertex {x} is not on the face")))
}

fn apply(rot: &mut Rot, step: &HennebergStep) -> Result<()> {
    let v = step.vertex();
    if v >= rot.len() || rot[v].is_some() {
        return Err(Error::InvalidInput(format!("step vertex {v} is already present")));
    }
    match *step {
        HennebergStep::I { a, b, after, .. } => {
            if a == b {
                return Err(Error::InvalidInput("Henneberg I needs two distinct vertices".into()));
            }
            let walk = face_walk(rot, a, after)?;
            let q = corner_in(&walk, b)?;
            insert_after(rot, a, after, v)?;
            insert_after(rot, b, q, v)?;
            rot[v] = Some(vec![a, b]);
        }
        HennebergStep::II { a, b, w, side, .. } => {
            if w == a || w == b {
                return Err(Error::InvalidInput("Henneberg II target is an endpoint".into()));
            }
            let walk = if side == 0 { face_walk(rot, a, b)? } else { face_walk(rot, b, a)? };
            let q = corner_in(&walk, w)?;
            replace(rot, a, b, v)?;
            replace(rot, b, a, v)?;
            insert_after(rot, w, q, v)?;
            rot[v] = Some(if side == 0 { vec![a, b, w] } else { vec![a, w, b] });
        }
    }
    Ok(())
}

fn edges_of(rot: &Rot) -> (Vec<Option<usize>>, Vec<(VertexId, VertexId)>) {
    let mut id = vec![None; rot.len()];
    let mut k = 0;
    for (v, r) in rot.iter().enumerate() {
        if r.is_some() {
            id[v] = Some(k);
            k += 1;
        }
    }
    let mut edges = Vec::new();
    for (u, r) in rot.iter().enumerate() {
        for &v in r.iter().flatten() {
            if u < v {
                edges.push((id[u].unwrap(), id[v].unwrap()));
            }
        }
    }
    (id, edges)
}

fn present(rot: &Rot) -> usize {
    rot.iter().filter(|r| r.is_some()).count()
}

fn laman_rot(rot: &Rot) -> bool {
    let (_, edges) = edges_of(rot);
    is_laman_edges(present(rot), &edges)
}

/// One reverse step removing `v`, if it keeps the graph Laman.
fn reverse_at(rot: &Rot, v: VertexId) -> Option<(Rot, HennebergStep)> {
    let r = rot[v].as_ref()?;
    match r.len() {
        2 => {
            let (a, b) = (r[0], r[1]);
            let ra = rot[a].as_ref()?;
            let i = ra.iter().position(|&x| x == v)?;
            let after = ra[(i + ra.len() - 1) % ra.len()];
            let mut next = rot.clone();
            next[v] = None;
            next[a].as_mut()?.retain(|&x| x != v);
            next[b].as_mut()?.retain(|&x| x != v);
            Some((next, HennebergStep::I { v, a, b, after }))
        }
        3 => {
            for k in 0..3 {
                let (w, a, b) = (r[k], r[(k + 1) % 3], r[(k + 2) % 3]);
                if rot[a].as_ref()?.contains(&b) {
                    continue;
                }
                let mut next = rot.clone();
                next[v] = None;
                replace(&mut next, a, v, b).ok()?;
                replace(&mut next, b, v, a).ok()?;
                next[w].as_mut()?.retain(|&x| x != v);
                if laman_rot(&next) {
                    return Some((next, HennebergStep::II { v, a, b, w, side: 0 }));
                }
            }
            None
        }
        _ => None,
    }
}

/// Edge protected by default: the special pair if adjacent, else the outer
/// anchor edge.
pub fn default_protected(g: &PlaneGraph) -> (VertexId, VertexId) {
    match g.specials() {
        Some((s0, s1)) if g.dart(s0, s1).is_some() => (s0, s1),
        _ => {
            let h = g.outer_anchor();
            (g.origin(h), g.dest(h))
        }
    }
}

/// A Henneberg construction of `g` never splitting the edge `protect`.
pub fn henneberg_sequence_protecting(g: &PlaneGraph, protect: (VertexId, VertexId)) -> Result<HennebergSequence> {
    if !is_laman(g) {
        return Err(Error::NotLaman);
    }
    if g.dart(protect.0, protect.1).is_none() {
        return Err(Error::InvalidInput("protected pair is not an edge".into()));
    }
    let mut rot = rot_of(g);
    let mut steps = Vec::new();
    while present(&rot) > 3 {
        let mut candidates: Vec<VertexId> =
            (0..g.n()).filter(|&v| v != protect.0 && v != protect.1 && rot[v].is_some()).collect();
        candidates.sort_by_key(|&v| (rot[v].as_ref().map_or(0, |r| r.len()), v));
        let (next, step) = candidates.iter().find_map(|&v| reverse_at(&rot, v)).ok_or(Error::NoValidBase)?;
        rot = next;
        steps.push(step);
    }
    steps.reverse();
    let third = (0..g.n()).find(|&v| rot[v].is_some() && v != protect.0 && v != protect.1).ok_or(Error::NoValidBase)?;
    let h = g.outer_anchor();
    Ok(HennebergSequence {
        n: g.n(),
        base: [protect.0, protect.1, third],
        steps,
        outer: (g.origin(h), g.dest(h)),
        names: g.names().to_vec(),
    })
}

/// A Henneberg construction of `g` protecting [`default_protected`].
pub fn henneberg_sequence(g: &PlaneGraph) -> Result<HennebergSequence> {
    henneberg_sequence_protecting(g, default_protected(g))
}

fn base_rot(seq: &HennebergSequence) -> Result<Rot> {
    let [a, b, c] = seq.base;
    if a == b || b == c || a == c || a.max(b).max(c) >= seq.n {
        return Err(Error::InvalidInput("base must be three distinct vertices".into()));
    }
    let mut rot: Rot = vec![None; seq.n];
    rot[a] = Some(vec![b, c]);
    rot[b] = Some(vec![c, a]);
    rot[c] = Some(vec![a, b]);
    Ok(rot)
}

fn graph_of(seq: &HennebergSequence, rot: &Rot, outer: (VertexId, VertexId), specials: bool) -> Result<PlaneGraph> {
    let (id, _) = edges_of(rot);
    let names: Vec<String> = (0..seq.n).filter(|&v| rot[v].is_some()).map(|v| seq.names[v].clone()).collect();
    let rotation: Vec<Vec<VertexId>> = rot.iter().flatten().map(|r| r.iter().map(|&x| id[x].unwrap()).collect()).collect();
    let map = |v: VertexId| id[v].ok_or_else(|| Error::InvalidInput(format!("vertex {v} is not present")));
    let specials = if specials { Some((map(seq.base[0])?, map(seq.base[1])?)) } else { None };
    PlaneGraph::from_rotation(Some(names), &rotation, (map(outer.0)?, map(outer.1)?), crate::embed::ColorMode::Absent, specials)
}

/// All graphs of the construction, from the base triangle to the result.
/// Every graph carries the protected edge as its special pair.
pub fn replay_graphs(seq: &HennebergSequence) -> Result<Vec<PlaneGraph>> {
    if seq.names.len() != seq.n || seq.steps.len() + 3 != seq.n {
        return Err(Error::InvalidInput("sequence does not cover every vertex once".into()));
    }
    let mut rot = base_rot(seq)?;
    let protect = (seq.base[0], seq.base[1]);
    let mut out = vec![graph_of(seq, &rot, protect, true)?];
    for step in &seq.steps {
        if let HennebergStep::II { a, b, .. } = *step {
            if (a, b) == protect || (b, a) == protect {
                return Err(Error::InvalidInput("the protected edge is split".into()));
            }
        }
        apply(&mut rot, step)?;
        out.push(graph_of(seq, &rot, protect, true)?);
    }
    Ok(out)
}

/// The plane graph built by the sequence, without special vertices.
pub fn replay(seq: &HennebergSequence) -> Result<PlaneGraph> {
    replay_graphs(seq)?;
    let mut rot = base_rot(seq)?;
    for step in &seq.steps {
        apply(&mut rot, step)?;
    }
    graph_of(seq, &rot, seq.outer, false)
}

/// An extended weak labeling of `g`, carried along a Henneberg construction.
/// The returned graph is `g` with the protected edge as special pair.
pub fn extended_weak_label(g: &PlaneGraph) -> Result<(PlaneGraph, AngleLabeling)> {
    let seq = henneberg_sequence(g)?;
    let gs = replay_graphs(&seq)?;
    let mut current = complete_labeling(&gs[0], Flavor::ExtendedWeak, &vec![None; gs[0].num_darts()])
        .ok_or_else(|| Error::Inconsistent("base triangle has no labeling".into()))?;
    for k in 1..gs.len() {
        let (parent, child) = (&gs[k], &gs[k - 1]);
        let v = seq.steps[k - 1].vertex();
        // vertex ids are compacted in increasing order, so names map back
        let mut pi = vec![None; parent.n()];
        for u in 0..parent.n() {
            pi[u] = (0..child.n()).find(|&x| child.name(x) == parent.name(u));
        }
        let mut partial = vec![None; parent.num_darts()];
        transfer(parent, child, &pi, &current, false, &mut partial);
        current = match complete_labeling(parent, Flavor::ExtendedWeak, &partial) {
            Some(l) => l,
            None => {
                let pv = (0..parent.n()).find(|&x| parent.name(x) == seq.names[v]).unwrap();
                let faces: Vec<_> = parent.darts_at(pv).map(|h| parent.face(h)).collect();
                for h in 0..parent.num_darts() {
                    if faces.contains(&parent.face(h)) {
                        partial[h] = None;
                    }
                }
                complete_labeling(parent, Flavor::ExtendedWeak, &partial)
                    .ok_or_else(|| Error::Inconsistent(format!("no labeling after step {k}")))?
            }
        };
    }
    let last = gs.last().unwrap();
    let (s0, s1) = (seq.base[0], seq.base[1]);
    let out = g.with_specials(s0, s1)?;
    let mut labels = vec![0u8; out.num_darts()];
    for h in 0..last.num_darts() {
        let (u, x) = (name_id(g, last.name(last.origin(h)))?, name_id(g, last.name(last.dest(h)))?);
        let d = out.dart(u, x).ok_or_else(|| Error::Inconsistent("replay changed the edge set".into()))?;
        labels[d] = current.get(h);
    }
    Ok((out, AngleLabeling::new(labels)))
}

fn name_id(g: &PlaneGraph, name: &str) -> Result<VertexId> {
    (0..g.n()).find(|&v| g.name(v) == name).ok_or_else(|| Error::Inconsistent(format!("unknown vertex {name}")))
}

/// Edge sets `(T, T')` partitioning the edges of `g`: `T` is a spanning
/// tree and `T'` a tree on all vertices but one.
pub fn two_tree_decomposition(g: &PlaneGraph) -> Result<(Vec<EdgeId>, Vec<EdgeId>)> {
    let seq = henneberg_sequence(g)?;
    let [a, b, c] = seq.base;
    let key = |u: VertexId, v: VertexId| (u.min(v), u.max(v));
    let missing = c;
    let mut t = vec![key(c, a), key(c, b)];
    let mut t2 = vec![key(a, b)];
    for step in &seq.steps {
        match *step {
            HennebergStep::I { v, a, b, .. } => {
                let (x, y) = if b == missing { (b, a) } else { (a, b) };
                t.push(key(v, x));
                t2.push(key(v, y));
            }
            HennebergStep::II { v, a, b, w, .. } => {
                let ab = key(a, b);
                if let Some(i) = t.iter().position(|&e| e == ab) {
                    t.swap_remove(i);
                    if w != missing {
                        t.extend([key(a, v), key(v, b)]);
                        t2.push(key(v, w));
                    } else if in_component(&t, a, w) {
                        t.extend([key(v, b), key(v, w)]);
                        t2.push(key(a, v));
                    } else {
                        t.extend([key(a, v), key(v, w)]);
                        t2.push(key(v, b));
                    }
                } else {
                    let i = t2.iter().position(|&e| e == ab).ok_or_else(|| Error::Inconsistent("split edge is in neither tree".into()))?;
                    t2.swap_remove(i);
                    t2.extend([key(a, v), key(v, b)]);
                    t.push(key(v, w));
                }
            }
        }
    }
    let to_ids = |pairs: &[(VertexId, VertexId)]| -> Result<Vec<EdgeId>> {
        let mut ids = pairs
            .iter()
            .map(|&(u, v)| g.dart(u, v).map(edge_of).ok_or_else(|| Error::Inconsistent("unknown tree edge".into())))
            .collect::<Result<Vec<_>>>()?;
        ids.sort_unstable();
        Ok(ids)
    };
    Ok((to_ids(&t)?, to_ids(&t2)?))
}

fn in_component(edges: &[(VertexId, VertexId)], from: VertexId, to: VertexId) -> bool {
    let mut seen = vec![from];
    let mut i = 0;
    while i < seen.len() {
        let x = seen[i];
        for &(u, v) in edges {
            let y = if u == x { v } else if v == x { u } else { continue };
            if !seen.contains(&y) {
                seen.push(y);
            }
        }
        i += 1;
    }
    seen.contains(&to)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::ColorMode;
    use crate::oracle::{gen_plane_laman, is_laman_brute};
    use crate::rules::is_valid;

    fn triangle() -> PlaneGraph {
        PlaneGraph::from_rotation(None, &[vec![1, 2], vec![2, 0], vec![0, 1]], (0, 1), ColorMode::Absent, None).unwrap()
    }

    #[test]
    fn pebble_game_matches_brute_force() {
        for n in 2..=6usize {
            let pool: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let m = 2 * n - 3;
            for mask in 0u32..(1 << pool.len()) {
                if mask.count_ones() as usize != m {
                    continue;
                }
                let edges: Vec<_> = (0..pool.len()).filter(|i| mask >> i & 1 == 1).map(|i| pool[i]).collect();
                assert_eq!(is_laman_edges(n, &edges), is_laman_brute(n, &edges), "{edges:?}");
            }
        }
    }

    #[test]
    fn k4_is_not_laman() {
        let k4 = PlaneGraph::from_rotation(
            None,
            &[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]],
            (0, 1),
            ColorMode::Absent,
            None,
        )
        .unwrap();
        assert!(!is_laman(&k4));
        assert_eq!(henneberg_sequence(&k4), Err(Error::NotLaman));
        assert!(is_laman(&triangle()));
    }

    #[test]
    fn triangle_has_empty_sequence() {
        let t = triangle();
        let seq = henneberg_sequence(&t).unwrap();
        assert!(seq.steps.is_empty());
        assert!(replay(&seq).unwrap().same_embedding(&t));
        let (g, l) = extended_weak_label(&t).unwrap();
        assert!(is_valid(&g, &l, Flavor::ExtendedWeak));
        let (s0, s1) = g.specials().unwrap();
        assert!(l.around(&g, s0).iter().all(|&b| b == 0));
        assert!(l.around(&g, s1).iter().all(|&b| b == 1));
    }

    #[test]
    fn corpus_sequences_replay_and_label() {
        for n in 4..=7 {
            for g in gen_plane_laman(n).unwrap() {
                let seq = henneberg_sequence(&g).unwrap();
                assert!(replay(&seq).unwrap().same_embedding(&g));
                let (h, l) = extended_weak_label(&g).unwrap();
                assert!(is_valid(&h, &l, Flavor::ExtendedWeak));
                let (t, t2) = two_tree_decomposition(&g).unwrap();
                assert_eq!(t.len() + t2.len(), g.m());
                assert_eq!(t.len(), n - 1);
                assert_eq!(t2.len(), n - 2);
                let pairs = |ids: &[EdgeId]| ids.iter().map(|&e| g.endpoints(e)).collect::<Vec<_>>();
                let (p, p2) = (pairs(&t), pairs(&t2));
                assert!((0..n).all(|v| in_component(&p, 0, v)));
                let touched: Vec<_> = (0..n).filter(|&v| p2.iter().any(|&(a, b)| a == v || b == v)).collect();
                assert_eq!(touched.len(), n - 1);
                assert!(touched.iter().all(|&v| in_component(&p2, touched[0], v)));
            }
        }
    }

    fn color_class_is_forest(g: &PlaneGraph, l: &AngleLabeling, c: u8) -> bool {
        let es = crate::rules::induce(g, l, Flavor::ExtendedWeak).unwrap();
        let mut comp: Vec<usize> = (0..g.n()).collect();
        for e in 0..g.m() {
            if es.dart_color[2 * e] != Some(c) && es.dart_color[2 * e + 1] != Some(c) {
                continue;
            }
            let (u, v) = g.endpoints(e);
            let (cu, cv) = (comp[u], comp[v]);
            if cu == cv {
                return false;
            }
            comp.iter_mut().filter(|x| **x == cu).for_each(|x| *x = cv);
        }
        true
    }

    #[test]
    fn labelings_need_not_induce_two_forests() {
        let g = PlaneGraph::from_rotation(
            None,
            &[vec![1, 5, 4, 3, 2], vec![2, 4, 0], vec![0, 1], vec![0, 4], vec![1, 3, 0, 5], vec![0, 4]],
            (1, 0),
            ColorMode::Absent,
            Some((1, 0)),
        )
        .unwrap();
        assert!(is_laman(&g));
        let all = crate::rules::enumerate_labelings(&g, Flavor::ExtendedWeak, 16).unwrap();
        assert!(!all.is_empty());
        for l in &all {
            assert!(!(color_class_is_forest(&g, l, 0) && color_class_is_forest(&g, l, 1)));
        }
        let (h, l) = extended_weak_label(&g).unwrap();
        assert!(is_valid(&h, &l, Flavor::ExtendedWeak));
    }
}
