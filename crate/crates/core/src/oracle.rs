//! Exhaustive generators for small plane graphs.
//!
//! Every generator returns graphs rooted at an outer face and deduplicated by
//! [`canonical_code`]; the output is sorted by that code. The same abstract
//! graph therefore appears once per rooted form.

use std::collections::{BTreeMap, HashSet};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::embed::{canonical_code, is_quadrangulation, Color, ColorMode, PlaneGraph, VertexId};
use crate::error::{Error, Result};

/// Largest vertex count accepted by the quadrangulation generator.
pub const MAX_QUAD_VERTICES: usize = 12;

/// Largest vertex count accepted by the Laman generator.
pub const MAX_LAMAN_VERTICES: usize = 9;

/// Largest edge count accepted by the bipartite generator.
pub const MAX_BIPARTITE_EDGES: usize = 12;

/// Stable 64-bit FNV-1a hash, used to name corpus files.
pub fn code_hash(code: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in code {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Rotation lists plus rooting data, the mutable form used while generating.
#[derive(Clone, Debug)]
struct Rot {
    rot: Vec<Vec<VertexId>>,
    outer: (VertexId, VertexId),
    specials: Option<(VertexId, VertexId)>,
}

impl Rot {
    fn of(g: &PlaneGraph) -> Rot {
        let a = g.outer_anchor();
        Rot { rot: g.rotation(), outer: (g.origin(a), g.dest(a)), specials: g.specials() }
    }

    fn build(&self, colors: ColorMode) -> Result<PlaneGraph> {
        PlaneGraph::from_rotation(None, &self.rot, self.outer, colors, self.specials)
    }

    fn insert_after(&mut self, at: VertexId, after: VertexId, new: VertexId) {
        let list = &mut self.rot[at];
        let i = list.iter().position(|&x| x == after).unwrap();
        list.insert(i + 1, new);
    }

    fn insert_before(&mut self, at: VertexId, before: VertexId, new: VertexId) {
        let list = &mut self.rot[at];
        let i = list.iter().position(|&x| x == before).unwrap();
        list.insert(i, new);
    }
}

fn dedup_sorted(graphs: impl IntoIterator<Item = PlaneGraph>) -> Vec<PlaneGraph> {
    let mut map = BTreeMap::new();
    for g in graphs {
        map.entry(canonical_code(&g)).or_insert(g);
    }
    map.into_values().collect()
}

/// Children of a rooted quadrangulation under the two inverse reductions:
/// inserting a degree-2 vertex into a bounded face, and expanding `s0`
/// into a new face.
pub fn quad_children(g: &PlaneGraph) -> Vec<PlaneGraph> {
    let base = Rot::of(g);
    let n = g.n();
    let mut out = Vec::new();
    for (f, walk) in g.faces().iter().enumerate() {
        if f == g.outer_face() {
            continue;
        }
        for i in 0..2 {
            let mut r = base.clone();
            r.rot.push(Vec::new());
            for h in [walk[i], walk[i + 2]] {
                let x = g.origin(h);
                r.insert_after(x, g.dest(h), n);
                r.rot[n].push(x);
            }
            if let Ok(q) = r.build(ColorMode::Auto) {
                out.push(q);
            }
        }
    }
    let (s0, _) = g.specials().unwrap();
    let r0 = &base.rot[s0];
    let d = r0.len();
    let outer_after = g
        .darts_at(s0)
        .find(|&h| g.face(h) == g.outer_face())
        .map(|h| r0.iter().position(|&x| x == g.dest(h)).unwrap())
        .unwrap();
    for i in 0..d {
        for span in 1..d {
            // wedge covers the angles after r0[i], ..., r0[i + span - 1]
            if (0..span).any(|t| (i + t) % d == outer_after) {
                continue;
            }
            let a = r0[i];
            let b = r0[(i + span) % d];
            let moved: Vec<VertexId> = (1..span).map(|t| r0[(i + t) % d]).collect();
            let mut r = base.clone();
            r.rot[s0].retain(|x| !moved.contains(x));
            let mut prot = vec![a];
            prot.extend(&moved);
            prot.push(b);
            r.rot.push(prot);
            for &c in &moved {
                for x in r.rot[c].iter_mut() {
                    if *x == s0 {
                        *x = n;
                    }
                }
            }
            r.insert_before(a, s0, n);
            r.insert_after(b, s0, n);
            if let Ok(q) = r.build(ColorMode::Auto) {
                out.push(q);
            }
        }
    }
    out
}

/// The 4-cycle `s0, a, s1, b` rooted with its outer face on the right of `s0 -> b`.
pub fn c4() -> PlaneGraph {
    PlaneGraph::from_rotation(
        None,
        &[vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]],
        (0, 3),
        ColorMode::Auto,
        Some((0, 2)),
    )
    .unwrap()
}

/// All rooted quadrangulations on `4..=n` vertices, indexed by vertex count.
pub fn quadrangulations_up_to(n: usize) -> Result<Vec<Vec<PlaneGraph>>> {
    if n > MAX_QUAD_VERTICES {
        return Err(Error::TooLarge(format!("quadrangulations with {n} > {MAX_QUAD_VERTICES} vertices")));
    }
    let mut levels = vec![Vec::new(); n.max(4) + 1];
    if n < 4 {
        return Ok(levels);
    }
    levels[4] = vec![c4()];
    for k in 5..=n {
        let next = dedup_sorted(levels[k - 1].iter().flat_map(quad_children));
        levels[k] = next;
    }
    Ok(levels)
}

/// All rooted quadrangulations on `n` vertices with black specials.
pub fn gen_quadrangulations(n: usize) -> Result<Vec<PlaneGraph>> {
    let mut levels = quadrangulations_up_to(n)?;
    Ok(std::mem::take(&mut levels[n.max(4)]).into_iter().filter(|g| g.n() == n).collect())
}

/// Distinct random quadrangulations on `n` vertices obtained by random
/// growth from the 4-cycle.
pub fn sample_quadrangulations(n: usize, count: usize, seed: u64) -> Result<Vec<PlaneGraph>> {
    if n > MAX_QUAD_VERTICES + 4 {
        return Err(Error::TooLarge(format!("{n} vertices")));
    }
    if n < 4 {
        return Ok(Vec::new());
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 50 * count {
        attempts += 1;
        let mut g = c4();
        while g.n() < n {
            let children = quad_children(&g);
            g = children.choose(&mut rng).unwrap().clone();
        }
        if seen.insert(canonical_code(&g)) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Permutations of `items` that keep the first element in place (all cyclic
/// orders up to rotation).
fn cyclic_orders(items: &[VertexId]) -> Vec<Vec<VertexId>> {
    if items.len() <= 2 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    let mut rest = items[1..].to_vec();
    permute(&mut rest, 0, &mut |p| {
        let mut v = vec![items[0]];
        v.extend_from_slice(p);
        out.push(v);
    });
    out
}

fn permute(xs: &mut Vec<VertexId>, k: usize, f: &mut dyn FnMut(&[VertexId])) {
    if k == xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, f);
        xs.swap(k, i);
    }
}

/// Calls `f` with every planar rotation system of the simple graph `adj`.
fn for_each_embedding(adj: &[Vec<VertexId>], f: &mut dyn FnMut(&PlaneGraph)) {
    let orders: Vec<Vec<Vec<VertexId>>> = adj.iter().map(|a| cyclic_orders(a)).collect();
    let mut idx = vec![0usize; adj.len()];
    let first = (0..adj.len()).find(|&v| !adj[v].is_empty());
    let Some(u) = first else { return };
    loop {
        let rot: Vec<Vec<VertexId>> = (0..adj.len()).map(|v| orders[v][idx[v]].clone()).collect();
        if let Ok(g) = PlaneGraph::from_rotation(None, &rot, (u, rot[u][0]), ColorMode::Absent, None) {
            f(&g);
        }
        let mut k = 0;
        loop {
            if k == adj.len() {
                return;
            }
            idx[k] += 1;
            if idx[k] < orders[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn connected(adj: &[Vec<VertexId>]) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
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

/// Every subset of `pool` with exactly `k` elements.
fn subsets<T: Copy>(pool: &[T], k: usize, f: &mut dyn FnMut(&[T])) {
    fn rec<T: Copy>(pool: &[T], k: usize, start: usize, cur: &mut Vec<T>, f: &mut dyn FnMut(&[T])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - cur.len() {
                break;
            }
            cur.push(pool[i]);
            rec(pool, k, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(pool, k, 0, &mut Vec::new(), f);
}

fn adjacency_of(n: usize, edges: &[(VertexId, VertexId)]) -> Vec<Vec<VertexId>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Every rooting of `g`: one copy per face, anchored at a dart of that face.
fn rerootings(g: &PlaneGraph) -> impl Iterator<Item = PlaneGraph> + '_ {
    g.faces().iter().map(move |walk| g.with_outer(walk[0]))
}

/// Quadrangulations found by enumerating rotation systems of all bipartite
/// graphs with `2n - 4` edges. Independent of [`gen_quadrangulations`].
pub fn quadrangulations_direct(n: usize) -> Result<Vec<PlaneGraph>> {
    if n > 7 {
        return Err(Error::TooLarge(format!("direct enumeration for n = {n}")));
    }
    let mut found = Vec::new();
    if n < 4 {
        return Ok(found);
    }
    for b in 2..=n - 2 {
        let pool: Vec<(VertexId, VertexId)> = (0..b).flat_map(|u| (b..n).map(move |w| (u, w))).collect();
        subsets(&pool, 2 * n - 4, &mut |edges| {
            let adj = adjacency_of(n, edges);
            if adj.iter().any(|a| a.len() < 2) || !connected(&adj) {
                return;
            }
            let colors: Vec<Color> = (0..n).map(|v| if v < b { Color::Black } else { Color::White }).collect();
            for_each_embedding(&adj, &mut |g| {
                if !is_quadrangulation(g) {
                    return;
                }
                for r in rerootings(g) {
                    let walk = r.face_walk(r.outer_face()).to_vec();
                    for &h in &walk {
                        let s0 = r.origin(h);
                        if colors[s0] != Color::Black {
                            continue;
                        }
                        let s1 = r.dest(r.face_next(h));
                        let q = r
                            .with_colors(ColorMode::Given(colors.clone()))
                            .and_then(|q| q.with_specials(s0, s1))
                            .unwrap();
                        found.push(q);
                    }
                }
            });
        });
    }
    Ok(dedup_sorted(found))
}

/// Connected bipartite plane graphs, rooted at their outer face, with
/// `1..=max_edges` edges. Indexed by edge count; colors and specials unset.
pub fn bipartite_plane_up_to(max_edges: usize) -> Result<Vec<Vec<PlaneGraph>>> {
    if max_edges > MAX_BIPARTITE_EDGES {
        return Err(Error::TooLarge(format!("{max_edges} > {MAX_BIPARTITE_EDGES} edges")));
    }
    let mut levels: Vec<Vec<PlaneGraph>> = vec![Vec::new(); max_edges.max(1) + 1];
    let k2 = PlaneGraph::from_rotation(None, &[vec![1], vec![0]], (0, 1), ColorMode::Absent, None).unwrap();
    levels[1] = vec![k2];
    for m in 2..=max_edges {
        let next = dedup_sorted(levels[m - 1].iter().flat_map(|g| {
            bipartite_children(g).into_iter().flat_map(|c| rerootings(&c).collect::<Vec<_>>())
        }));
        levels[m] = next;
    }
    Ok(levels)
}

/// Connected bipartite plane graphs with `n` vertices and `m` edges.
pub fn gen_bipartite_plane(n: usize, m: usize) -> Result<Vec<PlaneGraph>> {
    if m == 0 || (n >= 3 && m > 3 * n - 6) || m + 1 < n {
        return Ok(Vec::new());
    }
    let levels = bipartite_plane_up_to(m)?;
    Ok(levels[m].iter().filter(|g| g.n() == n).cloned().collect())
}

/// One-edge extensions: a pendant vertex in some angle, or a new edge
/// between two non-adjacent vertices of opposite color in a common face.
fn bipartite_children(g: &PlaneGraph) -> Vec<PlaneGraph> {
    let base = Rot::of(g);
    let n = g.n();
    let side = {
        let c = g.with_colors(ColorMode::Auto).unwrap();
        c.colors().unwrap().to_vec()
    };
    let mut out = Vec::new();
    for h in 0..g.num_darts() {
        let mut r = base.clone();
        r.rot.push(vec![g.origin(h)]);
        r.insert_after(g.origin(h), g.dest(h), n);
        if let Ok(c) = r.build(ColorMode::Absent) {
            out.push(c);
        }
    }
    for walk in g.faces() {
        for (i, &h) in walk.iter().enumerate() {
            for &k in &walk[i + 1..] {
                let (u, v) = (g.origin(h), g.origin(k));
                if side[u] == side[v] || g.dart(u, v).is_some() {
                    continue;
                }
                let mut r = base.clone();
                r.insert_after(u, g.dest(h), v);
                r.insert_after(v, g.dest(k), u);
                if let Ok(c) = r.build(ColorMode::Absent) {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// Distinct random connected bipartite plane graphs with `m` edges, grown
/// one edge at a time from a single edge and rerooted at random.
pub fn sample_bipartite_plane(m: usize, count: usize, seed: u64) -> Result<Vec<PlaneGraph>> {
    if m > 2 * MAX_BIPARTITE_EDGES {
        return Err(Error::TooLarge(format!("{m} edges")));
    }
    if m == 0 {
        return Ok(Vec::new());
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 50 * count {
        attempts += 1;
        let mut g = PlaneGraph::from_rotation(None, &[vec![1], vec![0]], (0, 1), ColorMode::Absent, None)?;
        while g.m() < m {
            let children = bipartite_children(&g);
            g = children.choose(&mut rng).unwrap().clone();
        }
        let roots: Vec<PlaneGraph> = rerootings(&g).collect();
        let g = roots.choose(&mut rng).unwrap().clone();
        if seen.insert(canonical_code(&g)) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Bipartite plane graphs on `n` vertices found by enumerating rotation
/// systems directly. Independent of [`gen_bipartite_plane`].
pub fn bipartite_plane_direct(n: usize, m: usize) -> Result<Vec<PlaneGraph>> {
    if n > 6 {
        return Err(Error::TooLarge(format!("direct enumeration for n = {n}")));
    }
    let mut found = Vec::new();
    for b in 1..n {
        let pool: Vec<(VertexId, VertexId)> = (0..b).flat_map(|u| (b..n).map(move |w| (u, w))).collect();
        subsets(&pool, m, &mut |edges| {
            let adj = adjacency_of(n, edges);
            if !connected(&adj) {
                return;
            }
            for_each_embedding(&adj, &mut |g| found.extend(rerootings(g)));
        });
    }
    Ok(dedup_sorted(found))
}

/// All colorings and ordered special pairs on the outer face of the given
/// bipartite plane graphs, deduplicated.
pub fn with_all_specials(graphs: &[PlaneGraph]) -> Vec<PlaneGraph> {
    let mut out = Vec::new();
    for g in graphs {
        let base = g.with_colors(ColorMode::Auto).unwrap();
        let colors = base.colors().unwrap().to_vec();
        let swapped: Vec<Color> = colors.iter().map(|c| c.other()).collect();
        let mut outer = g.outer_vertices();
        outer.sort_unstable();
        outer.dedup();
        for cs in [colors, swapped] {
            let colored = g.with_colors(ColorMode::Given(cs)).unwrap();
            for &s0 in &outer {
                for &s1 in &outer {
                    if s0 != s1 {
                        out.push(colored.with_specials(s0, s1).unwrap());
                    }
                }
            }
        }
    }
    dedup_sorted(out)
}

/// Brute-force Laman test: `m = 2n - 3` and every vertex subset of size
/// `k >= 2` spans at most `2k - 3` edges.
pub fn is_laman_brute(n: usize, edges: &[(VertexId, VertexId)]) -> bool {
    if n < 2 || edges.len() != 2 * n - 3 {
        return false;
    }
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k < 2 {
            continue;
        }
        let inside = edges.iter().filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1).count();
        if inside > 2 * k - 3 {
            return false;
        }
    }
    true
}

fn triangle() -> PlaneGraph {
    PlaneGraph::from_rotation(None, &[vec![1, 2], vec![2, 0], vec![0, 1]], (0, 1), ColorMode::Absent, None).unwrap()
}

/// Plane Henneberg I and II extensions of `g` (outer face not preserved).
fn laman_children(g: &PlaneGraph) -> Vec<PlaneGraph> {
    let base = Rot::of(g);
    let n = g.n();
    let mut out = Vec::new();
    for walk in g.faces() {
        // Henneberg I: new vertex in this face joined to two distinct corners
        for (i, &h) in walk.iter().enumerate() {
            for &k in &walk[i + 1..] {
                let (a, b) = (g.origin(h), g.origin(k));
                if a == b {
                    continue;
                }
                let mut r = base.clone();
                r.insert_after(a, g.dest(h), n);
                r.insert_after(b, g.dest(k), n);
                r.rot.push(vec![a, b]);
                if let Ok(c) = r.build(ColorMode::Absent) {
                    out.push(c);
                }
            }
        }
        // Henneberg II: subdivide a boundary edge of this face, join to a corner
        for &d in walk {
            let (a, b) = (g.origin(d), g.dest(d));
            for &k in walk {
                let w = g.origin(k);
                if w == a || w == b {
                    continue;
                }
                let mut r = base.clone();
                for x in r.rot[a].iter_mut() {
                    if *x == b {
                        *x = n;
                    }
                }
                for x in r.rot[b].iter_mut() {
                    if *x == a {
                        *x = n;
                    }
                }
                r.insert_after(w, g.dest(k), n);
                // face(d) is on the right of a -> b, so w follows b clockwise
                r.rot.push(vec![a, b, w]);
                if base.outer == (a, b) {
                    r.outer = (a, n);
                } else if base.outer == (b, a) {
                    r.outer = (b, n);
                }
                if let Ok(c) = r.build(ColorMode::Absent) {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// All plane Laman graphs on `3..=n` vertices rooted at an outer face,
/// indexed by vertex count.
pub fn plane_laman_up_to(n: usize) -> Result<Vec<Vec<PlaneGraph>>> {
    if n > MAX_LAMAN_VERTICES {
        return Err(Error::TooLarge(format!("Laman graphs with {n} > {MAX_LAMAN_VERTICES} vertices")));
    }
    let mut levels = vec![Vec::new(); n.max(3) + 1];
    if n < 3 {
        return Ok(levels);
    }
    levels[3] = dedup_sorted(rerootings(&triangle()).collect::<Vec<_>>());
    for k in 4..=n {
        let next = dedup_sorted(
            levels[k - 1]
                .iter()
                .flat_map(laman_children)
                .filter(|c| c.is_simple())
                .flat_map(|c| rerootings(&c).collect::<Vec<_>>()),
        );
        levels[k] = next;
    }
    Ok(levels)
}

pub fn gen_plane_laman(n: usize) -> Result<Vec<PlaneGraph>> {
    let mut levels = plane_laman_up_to(n)?;
    Ok(std::mem::take(&mut levels[n.max(3)]).into_iter().filter(|g| g.n() == n).collect())
}

/// Plane Laman graphs found from rotation systems of all Laman graphs on `n`
/// labeled vertices. Independent of [`gen_plane_laman`].
pub fn plane_laman_direct(n: usize) -> Result<Vec<PlaneGraph>> {
    if n > 6 {
        return Err(Error::TooLarge(format!("direct enumeration for n = {n}")));
    }
    let mut found = Vec::new();
    if n < 3 {
        return Ok(found);
    }
    let pool: Vec<(VertexId, VertexId)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    subsets(&pool, 2 * n - 3, &mut |edges| {
        if !is_laman_brute(n, edges) {
            return;
        }
        let adj = adjacency_of(n, edges);
        for_each_embedding(&adj, &mut |g| found.extend(rerootings(g)));
    });
    Ok(dedup_sorted(found))
}

/// Non-crossing alternating spanning trees on `k` spine points, counted by
/// decoding every Prüfer sequence. Independent of `book::count_ncat`.
pub fn ncat_by_pruefer(k: usize) -> Result<u64> {
    if k > 9 {
        return Err(Error::TooLarge(format!("spine length {k}")));
    }
    if k <= 2 {
        return Ok(1);
    }
    let total = k.pow(k as u32 - 2);
    let mut count = 0;
    let mut seq = vec![0; k - 2];
    for code in 0..total {
        let mut c = code;
        for x in seq.iter_mut() {
            *x = c % k;
            c /= k;
        }
        let mut degree = vec![1; k];
        for &x in &seq {
            degree[x] += 1;
        }
        let mut edges = Vec::with_capacity(k - 1);
        for &x in &seq {
            let leaf = (0..k).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf.min(x), leaf.max(x)));
            degree[leaf] -= 1;
            degree[x] -= 1;
        }
        let rest: Vec<usize> = (0..k).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        let crossing = edges.iter().any(|&(a, b)| edges.iter().any(|&(c, d)| a < c && c < b && b < d));
        let alternating = (0..k).all(|v| {
            let left = edges.iter().any(|&(a, b)| b == v && a < v);
            let right = edges.iter().any(|&(a, _)| a == v);
            !(left && right)
        });
        if !crossing && alternating {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_only_at_four() {
        assert_eq!(gen_quadrangulations(4).unwrap().len(), 1);
        assert_eq!(quadrangulations_direct(4).unwrap().len(), 1);
    }

    #[test]
    fn quad_generators_agree_small() {
        for n in 5..=6 {
            let a: Vec<_> = gen_quadrangulations(n).unwrap().iter().map(canonical_code).collect();
            let b: Vec<_> = quadrangulations_direct(n).unwrap().iter().map(canonical_code).collect();
            assert_eq!(a, b, "n = {n}");
        }
    }

    #[test]
    fn laman_triangle() {
        assert_eq!(gen_plane_laman(3).unwrap().len(), 1);
    }

    #[test]
    fn bipartite_small_agree() {
        for (n, m) in [(2, 1), (3, 2), (4, 3), (4, 4), (5, 4), (5, 6)] {
            let a: Vec<_> = gen_bipartite_plane(n, m).unwrap().iter().map(canonical_code).collect();
            let b: Vec<_> = bipartite_plane_direct(n, m).unwrap().iter().map(canonical_code).collect();
            assert_eq!(a, b, "n = {n}, m = {m}");
        }
    }

    #[test]
    fn too_dense_is_empty() {
        assert!(gen_bipartite_plane(4, 7).unwrap().is_empty());
    }
}
