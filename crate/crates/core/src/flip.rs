//! Directed cycles of 2-orientations, flips, and the flip graph of strong
//! labelings.

use std::collections::{BTreeSet, HashMap, VecDeque};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::embed::{edge_of, twin, FaceId, HalfEdgeId, PlaneGraph};
use crate::error::{Error, Result};
use crate::orient::{enumerate_alpha, Orientation, OutDegreeSpec};
use crate::rules::AngleLabeling;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectedCycle {
    /// Darts in traversal order.
    pub darts: Vec<HalfEdgeId>,
    /// True when the interior lies on the right of the traversal.
    pub clockwise: bool,
    /// Bounded faces enclosed by the cycle.
    pub interior: BTreeSet<FaceId>,
}

impl DirectedCycle {
    /// Tags a closed dart sequence with its sense and interior.
    pub fn from_darts(g: &PlaneGraph, darts: Vec<HalfEdgeId>) -> Result<DirectedCycle> {
        if darts.is_empty() {
            return Err(Error::InvalidInput("empty cycle".into()));
        }
        let mut seen = BTreeSet::new();
        for (i, &h) in darts.iter().enumerate() {
            if h >= g.num_darts() || g.dest(h) != g.origin(darts[(i + 1) % darts.len()]) {
                return Err(Error::InvalidInput("darts do not form a closed walk".into()));
            }
            if !seen.insert(g.origin(h)) {
                return Err(Error::InvalidInput("cycle is not simple".into()));
            }
        }
        let mut barrier = vec![false; g.m()];
        for &h in &darts {
            barrier[edge_of(h)] = true;
        }
        let right = side(g, darts.iter().map(|&h| g.face(h)), &barrier);
        let outer = g.outer_face();
        let (clockwise, interior) = if right.contains(&outer) {
            (false, side(g, darts.iter().map(|&h| g.face(twin(h))), &barrier))
        } else {
            (true, right)
        };
        Ok(DirectedCycle { darts, clockwise, interior })
    }

    /// The same cycle traversed backwards.
    pub fn reversed(&self) -> DirectedCycle {
        DirectedCycle {
            darts: self.darts.iter().rev().map(|&h| twin(h)).collect(),
            clockwise: !self.clockwise,
            interior: self.interior.clone(),
        }
    }
}

fn side(g: &PlaneGraph, seeds: impl Iterator<Item = FaceId>, barrier: &[bool]) -> BTreeSet<FaceId> {
    let mut seen = BTreeSet::new();
    let mut stack: Vec<FaceId> = seeds.collect();
    while let Some(f) = stack.pop() {
        if !seen.insert(f) {
            continue;
        }
        for &h in g.face_walk(f) {
            if !barrier[edge_of(h)] {
                stack.push(g.face(twin(h)));
            }
        }
    }
    seen
}

/// Largest edge count for exhaustive cycle enumeration.
pub const MAX_CYCLE_EDGES: usize = 40;

/// Depth-first search over simple directed cycles, each reported once from
/// its smallest vertex. `visit` returns false to stop.
fn walk_cycles(g: &PlaneGraph, x: &Orientation, mut visit: impl FnMut(Vec<HalfEdgeId>) -> bool) {
    let n = g.n();
    let out: Vec<Vec<HalfEdgeId>> = (0..n).map(|v| g.darts_at(v).filter(|&h| x.is_forward(h)).collect()).collect();
    let mut on_path = vec![false; n];
    for start in 0..n {
        let mut path: Vec<HalfEdgeId> = Vec::new();
        // stack of (vertex, next out index)
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        on_path[start] = true;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i == out[v].len() {
                stack.pop();
                on_path[v] = false;
                path.pop();
                continue;
            }
            let h = out[v][*i];
            *i += 1;
            let w = g.dest(h);
            if w == start {
                let mut c = path.clone();
                c.push(h);
                if !visit(c) {
                    for &(u, _) in &stack {
                        on_path[u] = false;
                    }
                    return;
                }
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(h);
                stack.push((w, 0));
            }
        }
    }
}

/// All simple directed cycles of `x`.
pub fn find_cycles(g: &PlaneGraph, x: &Orientation) -> Result<Vec<DirectedCycle>> {
    if g.m() > MAX_CYCLE_EDGES {
        return Err(Error::TooLarge(format!("{} edges > {MAX_CYCLE_EDGES}", g.m())));
    }
    let mut cycles = Vec::new();
    let mut err = None;
    walk_cycles(g, x, |darts| match DirectedCycle::from_darts(g, darts) {
        Ok(c) => {
            cycles.push(c);
            true
        }
        Err(e) => {
            err = Some(e);
            false
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(cycles),
    }
}

/// The first counterclockwise cycle in search order, if any.
pub fn find_ccw_cycle(g: &PlaneGraph, x: &Orientation) -> Option<DirectedCycle> {
    let mut found = None;
    walk_cycles(g, x, |darts| match DirectedCycle::from_darts(g, darts) {
        Ok(c) if !c.clockwise => {
            found = Some(c);
            false
        }
        _ => true,
    });
    found
}

/// Reverses a directed cycle.
pub fn flip(x: &Orientation, c: &DirectedCycle) -> Result<Orientation> {
    if !c.darts.iter().all(|&h| edge_of(h) < x.dir.len() && x.is_forward(h)) {
        return Err(Error::NotDirected);
    }
    Ok(x.reversed(&c.darts))
}

/// Complements every angle lying in a face enclosed by `c`.
pub fn flip_labeling(g: &PlaneGraph, l: &AngleLabeling, c: &DirectedCycle) -> AngleLabeling {
    let mut labels = l.labels.clone();
    for h in 0..g.num_darts() {
        if c.interior.contains(&g.face(h)) {
            labels[h] ^= 1;
        }
    }
    AngleLabeling::new(labels)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipGraph {
    /// All 2-orientations, sorted.
    pub nodes: Vec<Orientation>,
    /// Pairs `(i, j)`, `i < j`, joined by a single flip.
    pub edges: Vec<(usize, usize)>,
    pub connected: bool,
    /// Nodes without a counterclockwise directed cycle.
    pub minima: Vec<usize>,
}

/// Largest edge count accepted by [`flip_graph`].
pub const MAX_FLIP_GRAPH_EDGES: usize = 24;

/// The graph of 2-orientations (equivalently strong labelings) under single
/// cycle reversals.
pub fn flip_graph(g: &PlaneGraph) -> Result<FlipGraph> {
    if g.m() > MAX_FLIP_GRAPH_EDGES {
        return Err(Error::TooLarge(format!("{} edges > {MAX_FLIP_GRAPH_EDGES}", g.m())));
    }
    let spec = OutDegreeSpec::two_orientation(g)?;
    let mut nodes = enumerate_alpha(g, &spec, MAX_FLIP_GRAPH_EDGES)?;
    nodes.sort();
    let index: HashMap<&Orientation, usize> = nodes.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut edges = BTreeSet::new();
    let mut minima = Vec::new();
    for (i, x) in nodes.iter().enumerate() {
        let cycles = find_cycles(g, x)?;
        if cycles.iter().all(|c| c.clockwise) {
            minima.push(i);
        }
        for c in &cycles {
            let j = *index
                .get(&flip(x, c)?)
                .ok_or_else(|| Error::Inconsistent("flip left the set of 2-orientations".into()))?;
            edges.insert((i.min(j), i.max(j)));
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    let mut adj = vec![Vec::new(); nodes.len()];
    for &(i, j) in &edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut seen = vec![false; nodes.len()];
    let mut queue = VecDeque::new();
    if !nodes.is_empty() {
        seen[0] = true;
        queue.push_back(0);
    }
    while let Some(i) = queue.pop_front() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    let connected = seen.iter().all(|&s| s);
    Ok(FlipGraph { nodes, edges, connected, minima })
}

/// Which counterclockwise cycle to reverse at each descent step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescentOrder {
    /// The first one found by the search.
    First,
    /// A uniformly random one among all of them.
    Seeded(u64),
}

/// Reverses counterclockwise cycles until none remain.
pub fn lattice_minimum(g: &PlaneGraph, x: &Orientation) -> Result<Orientation> {
    lattice_minimum_with(g, x, DescentOrder::First)
}

pub fn lattice_minimum_with(g: &PlaneGraph, x: &Orientation, order: DescentOrder) -> Result<Orientation> {
    let mut x = x.clone();
    match order {
        DescentOrder::First => {
            while let Some(c) = find_ccw_cycle(g, &x) {
                x = flip(&x, &c)?;
            }
        }
        DescentOrder::Seeded(seed) => {
            let mut rng = StdRng::seed_from_u64(seed);
            loop {
                let ccw: Vec<DirectedCycle> = find_cycles(g, &x)?.into_iter().filter(|c| !c.clockwise).collect();
                match ccw.choose(&mut rng) {
                    Some(c) => x = flip(&x, c)?,
                    None => break,
                }
            }
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::gen_quadrangulations;
    use crate::orient::strong_from_2orientation;
    use crate::rules::c4_strong;

    #[test]
    fn c4_has_no_cycles() {
        let (g, _) = c4_strong();
        let fg = flip_graph(&g).unwrap();
        assert_eq!(fg.nodes.len(), 1);
        assert!(fg.connected);
        assert_eq!(fg.minima, vec![0]);
        assert!(find_cycles(&g, &fg.nodes[0]).unwrap().is_empty());
    }

    #[test]
    fn flips_commute_with_complementation() {
        for n in 4..=8 {
            for q in gen_quadrangulations(n).unwrap() {
                let fg = flip_graph(&q).unwrap();
                assert!(fg.connected);
                assert_eq!(fg.minima.len(), 1);
                for x in &fg.nodes {
                    let l = strong_from_2orientation(&q, x).unwrap();
                    for c in find_cycles(&q, x).unwrap() {
                        let y = flip(x, &c).unwrap();
                        assert_eq!(strong_from_2orientation(&q, &y).unwrap(), flip_labeling(&q, &l, &c));
                        assert_eq!(flip(&y, &c.reversed()).unwrap(), *x);
                    }
                    let min = lattice_minimum(&q, x).unwrap();
                    assert_eq!(min, fg.nodes[fg.minima[0]]);
                    assert_eq!(lattice_minimum_with(&q, x, DescentOrder::Seeded(7)).unwrap(), min);
                }
            }
        }
    }

    #[test]
    fn undirected_cycle_is_rejected() {
        for q in gen_quadrangulations(8).unwrap() {
            let fg = flip_graph(&q).unwrap();
            for x in &fg.nodes {
                if let Some(c) = find_cycles(&q, x).unwrap().first() {
                    assert_eq!(flip(x, &c.reversed()), Err(Error::NotDirected));
                    return;
                }
            }
        }
        panic!("no directed cycle at n = 8");
    }
}
