//! SVG figures. Coordinates are for display only.

use std::f64::consts::PI;
use std::fmt::Write as _;

use quadlabel::book::BookEmbedding;
use quadlabel::rules::{induce, AngleLabeling, Flavor};
use quadlabel::PlaneGraph;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;

/// Tutte barycentric placement: outer face on a regular polygon traversed
/// counterclockwise on screen, inner vertices at the average of their
/// neighbors.
pub fn tutte(g: &PlaneGraph) -> Vec<(f64, f64)> {
    let n = g.n();
    let mut pos = vec![(0.0, 0.0); n];
    let mut fixed = vec![false; n];
    let mut boundary = Vec::new();
    for &h in g.face_walk(g.outer_face()) {
        let v = g.origin(h);
        if !fixed[v] {
            fixed[v] = true;
            boundary.push(v);
        }
    }
    let k = boundary.len().max(1) as f64;
    let r = SIZE / 2.0 - MARGIN;
    for (i, &v) in boundary.iter().enumerate() {
        // screen y grows downwards, so decreasing angles run counterclockwise
        let t = -2.0 * PI * i as f64 / k - PI / 2.0;
        pos[v] = (SIZE / 2.0 + r * t.cos(), SIZE / 2.0 + r * t.sin());
    }
    for v in 0..n {
        if !fixed[v] {
            pos[v] = (SIZE / 2.0, SIZE / 2.0);
        }
    }
    for _ in 0..2000 {
        let mut delta: f64 = 0.0;
        for v in 0..n {
            if fixed[v] || g.degree(v) == 0 {
                continue;
            }
            let d = g.degree(v) as f64;
            let (sx, sy) = g.neighbors(v).iter().fold((0.0, 0.0), |(x, y), &w| (x + pos[w].0, y + pos[w].1));
            let p = (sx / d, sy / d);
            delta = delta.max((p.0 - pos[v].0).abs() + (p.1 - pos[v].1).abs());
            pos[v] = p;
        }
        if delta < 1e-6 {
            break;
        }
    }
    pos
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn header(width: f64, height: f64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    )
}

const COLORS: [&str; 2] = ["#1f77b4", "#d62728"];

fn screen_angle(p: (f64, f64), q: (f64, f64)) -> f64 {
    (q.1 - p.1).atan2(q.0 - p.0)
}

/// A labeled drawing: angle labels at the corners and, when the labeling
/// induces one, edges colored and arrowed by the induced structure.
pub fn svg_labeling(g: &PlaneGraph, l: &AngleLabeling, flavor: Flavor) -> String {
    let pos = tutte(g);
    let structure = induce(g, l, flavor).ok();
    let mut s = header(SIZE, SIZE);
    s.push_str("<defs>\n");
    for (i, c) in COLORS.iter().enumerate() {
        let _ = writeln!(
            s,
            "<marker id=\"arrow{i}\" viewBox=\"0 0 10 10\" refX=\"16\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"{c}\"/></marker>"
        );
    }
    s.push_str("</defs>\n");
    for e in 0..g.m() {
        let colored: Vec<(usize, u8)> = match &structure {
            Some(es) => [2 * e, 2 * e + 1].into_iter().filter_map(|h| es.dart_color[h].map(|c| (h, c))).collect(),
            None => Vec::new(),
        };
        if colored.is_empty() {
            let (u, v) = g.endpoints(e);
            let _ = writeln!(
                s,
                "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#888\" stroke-width=\"2\"/>",
                pos[u].0, pos[u].1, pos[v].0, pos[v].1
            );
        }
        for (h, c) in colored {
            let (u, v) = (g.origin(h), g.dest(h));
            let _ = writeln!(
                s,
                "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"{}\" stroke-width=\"2\" marker-end=\"url(#arrow{c})\"/>",
                pos[u].0, pos[u].1, pos[v].0, pos[v].1, COLORS[c as usize]
            );
        }
    }
    for h in 0..g.num_darts() {
        let u = g.origin(h);
        let a = screen_angle(pos[u], pos[g.dest(h)]);
        let b = screen_angle(pos[u], pos[g.dest(g.rot_next(h))]);
        let mut span = (b - a).rem_euclid(2.0 * PI);
        if g.degree(u) == 1 || span == 0.0 {
            span = 2.0 * PI;
        }
        let t = a + span / 2.0;
        let (x, y) = (pos[u].0 + 14.0 * t.cos(), pos[u].1 + 14.0 * t.sin());
        let _ = writeln!(
            s,
            "<text x=\"{x:.2}\" y=\"{y:.2}\" font-size=\"10\" text-anchor=\"middle\" dominant-baseline=\"middle\">{}</text>",
            l.get(h)
        );
    }
    for v in 0..g.n() {
        let fill = match g.color(v) {
            Some(quadlabel::Color::White) => "white",
            _ => "black",
        };
        let stroke = if g.is_special(v) { "#2ca02c" } else { "black" };
        let _ = writeln!(
            s,
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"5\" fill=\"{fill}\" stroke=\"{stroke}\" stroke-width=\"2\"/>",
            pos[v].0, pos[v].1
        );
        let _ = writeln!(
            s,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" fill=\"#555\">{}</text>",
            pos[v].0 + 7.0,
            pos[v].1 - 7.0,
            escape(g.name(v))
        );
    }
    s.push_str("</svg>\n");
    s
}

/// Vertices on a horizontal spine, page 0 above and page 1 below.
pub fn svg_book(g: &PlaneGraph, b: &BookEmbedding) -> String {
    let step = 48.0;
    let width = 2.0 * MARGIN + step * (b.spine.len().max(2) - 1) as f64;
    let height = width.max(200.0) / 2.0 + 2.0 * MARGIN;
    let y = height / 2.0;
    let pos = b.positions(g.n());
    let x = |v: usize| MARGIN + step * pos[v] as f64;
    let mut s = header(width, height);
    let _ = writeln!(
        s,
        "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"#aaa\" stroke-width=\"1\"/>",
        MARGIN / 2.0,
        width - MARGIN / 2.0
    );
    for &(e, p) in &b.pages {
        let (u, v) = g.endpoints(e);
        let (x1, x2) = (x(u).min(x(v)), x(u).max(x(v)));
        let r = (x2 - x1) / 2.0;
        let sweep = if p == 0 { 1 } else { 0 };
        let _ = writeln!(
            s,
            "<path d=\"M {x1:.2} {y:.2} A {r:.2} {r:.2} 0 0 {sweep} {x2:.2} {y:.2}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>",
            COLORS[p as usize % 2]
        );
    }
    for &v in &b.spine {
        let _ = writeln!(s, "<circle cx=\"{:.2}\" cy=\"{y:.2}\" r=\"4\" fill=\"black\"/>", x(v));
        let _ = writeln!(
            s,
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"middle\" fill=\"#555\">{}</text>",
            x(v),
            y + 16.0,
            escape(g.name(v))
        );
    }
    s.push_str("</svg>\n");
    s
}
