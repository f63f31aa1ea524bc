//! Line-oriented text formats. Every file starts with a `<kind> v1` header;
//! blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use crate::book::BookEmbedding;
use crate::build::Move;
use crate::embed::{edge_of, Color, ColorMode, PlaneGraph, VertexId};
use crate::error::{Error, Result};
use crate::laman::{HennebergSequence, HennebergStep};
use crate::orient::{Orientation, SeparatingDecomposition};
use crate::rules::AngleLabeling;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty lines with comments stripped, numbered from 1, header checked.
fn lines<'a>(text: &'a str, kind: &str) -> Result<Vec<(usize, Vec<&'a str>)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        if !toks.is_empty() {
            out.push((i + 1, toks));
        }
    }
    match out.first() {
        Some((_, t)) if t.len() == 2 && t[0] == kind && t[1] == "v1" => Ok(out.split_off(1)),
        Some((l, _)) => Err(perr(*l, format!("expected header `{kind} v1`"))),
        None => Err(perr(1, format!("empty input, expected `{kind} v1`"))),
    }
}

/// Splits `key <name>: rest` into the name and the tokens after the colon.
fn keyed<'a>(line: usize, toks: &[&'a str]) -> Result<(&'a str, Vec<&'a str>)> {
    let name = toks.get(1).ok_or_else(|| perr(line, "missing vertex name"))?;
    let name = name.strip_suffix(':').ok_or_else(|| perr(line, "expected `<name>:`"))?;
    if name.is_empty() {
        return Err(perr(line, "empty vertex name"));
    }
    Ok((name, toks[2..].to_vec()))
}

fn vid(g: &PlaneGraph, line: usize, name: &str) -> Result<VertexId> {
    g.vertex_by_name(name).ok_or_else(|| perr(line, format!("unknown vertex `{name}`")))
}

fn bit(line: usize, tok: &str) -> Result<u8> {
    match tok {
        "0" => Ok(0),
        "1" => Ok(1),
        _ => Err(perr(line, format!("expected 0 or 1, found `{tok}`"))),
    }
}

pub fn write_planegraph(g: &PlaneGraph) -> String {
    let mut s = String::from("planegraph v1\n");
    let _ = writeln!(s, "n {}", g.n());
    for v in 0..g.n() {
        let nb: Vec<&str> = g.neighbors(v).into_iter().map(|w| g.name(w)).collect();
        let _ = writeln!(s, "rot {}: {}", g.name(v), nb.join(" "));
    }
    let h = g.outer_anchor();
    let _ = writeln!(s, "outer: {} {}", g.name(g.origin(h)), g.name(g.dest(h)));
    if let Some((s0, s1)) = g.specials() {
        let _ = writeln!(s, "special: {} {}", g.name(s0), g.name(s1));
    }
    if g.colors().is_some() {
        for v in 0..g.n() {
            let c = if g.color(v) == Some(Color::Black) { "black" } else { "white" };
            let _ = writeln!(s, "color {}: {c}", g.name(v));
        }
    }
    s
}

pub fn parse_planegraph(text: &str) -> Result<PlaneGraph> {
    let ls = lines(text, "planegraph")?;
    let mut count = None;
    let mut names: Vec<String> = Vec::new();
    let mut rot_names: Vec<(usize, Vec<String>)> = Vec::new();
    let mut outer = None;
    let mut special = None;
    let mut colors: Vec<(usize, String, Color)> = Vec::new();
    for (l, t) in &ls {
        let l = *l;
        match t[0] {
            "n" => {
                let k = t.get(1).and_then(|x| x.parse::<usize>().ok()).ok_or_else(|| perr(l, "expected `n <count>`"))?;
                count = Some((l, k));
            }
            "rot" => {
                let (name, rest) = keyed(l, t)?;
                if names.iter().any(|x| x == name) {
                    return Err(perr(l, format!("vertex `{name}` listed twice")));
                }
                names.push(name.to_string());
                rot_names.push((l, rest.iter().map(|x| x.to_string()).collect()));
            }
            "outer:" | "special:" => {
                if t.len() != 3 {
                    return Err(perr(l, format!("expected `{} <u> <v>`", t[0])));
                }
                let pair = Some((l, t[1].to_string(), t[2].to_string()));
                if t[0] == "outer:" {
                    outer = pair;
                } else {
                    special = pair;
                }
            }
            "color" => {
                let (name, rest) = keyed(l, t)?;
                let c = match rest.as_slice() {
                    ["black"] => Color::Black,
                    ["white"] => Color::White,
                    _ => return Err(perr(l, "expected `black` or `white`")),
                };
                colors.push((l, name.to_string(), c));
            }
            other => return Err(perr(l, format!("unknown directive `{other}`"))),
        }
    }
    if let Some((l, k)) = count {
        if k != names.len() {
            return Err(perr(l, format!("n = {k} but {} rotations given", names.len())));
        }
    }
    let id = |l: usize, name: &str| -> Result<VertexId> {
        names.iter().position(|x| x == name).ok_or_else(|| perr(l, format!("unknown vertex `{name}`")))
    };
    let mut rotation = Vec::with_capacity(names.len());
    for (l, r) in &rot_names {
        rotation.push(r.iter().map(|w| id(*l, w)).collect::<Result<Vec<_>>>()?);
    }
    let last = ls.last().map_or(1, |x| x.0);
    let (ol, ou, ov) = outer.ok_or_else(|| perr(last, "missing `outer: <u> <v>`"))?;
    let outer = (id(ol, &ou)?, id(ol, &ov)?);
    let specials = match special {
        Some((l, a, b)) => Some((id(l, &a)?, id(l, &b)?)),
        None => None,
    };
    let mode = if colors.is_empty() {
        ColorMode::Absent
    } else {
        let mut given: Vec<Option<Color>> = vec![None; names.len()];
        for (l, name, c) in &colors {
            given[id(*l, name)?] = Some(*c);
        }
        let all: Option<Vec<Color>> = given.into_iter().collect();
        ColorMode::Given(all.ok_or_else(|| perr(last, "colors must be given for every vertex or none"))?)
    };
    PlaneGraph::from_rotation(Some(names), &rotation, outer, mode, specials)
}

/// Labels of the angles at each vertex, angle `i` following the `i`-th
/// neighbor of the rotation clockwise.
pub fn write_labeling(g: &PlaneGraph, l: &AngleLabeling) -> String {
    let mut s = String::from("labeling v1\n");
    for v in 0..g.n() {
        let bits: Vec<String> = g.darts_at(v).map(|h| l.get(h).to_string()).collect();
        let _ = writeln!(s, "ang {}: {}", g.name(v), bits.join(" "));
    }
    s
}

pub fn parse_labeling(g: &PlaneGraph, text: &str) -> Result<AngleLabeling> {
    let mut labels: Vec<Option<u8>> = vec![None; g.num_darts()];
    let mut seen = vec![false; g.n()];
    for (l, t) in lines(text, "labeling")? {
        if t[0] != "ang" {
            return Err(perr(l, format!("unknown directive `{}`", t[0])));
        }
        let (name, rest) = keyed(l, &t)?;
        let v = vid(g, l, name)?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(perr(l, format!("vertex `{name}` listed twice")));
        }
        let darts: Vec<_> = g.darts_at(v).collect();
        if rest.len() != darts.len() {
            return Err(perr(l, format!("vertex `{name}` has {} angles, {} labels given", darts.len(), rest.len())));
        }
        for (h, tok) in darts.into_iter().zip(rest) {
            labels[h] = Some(bit(l, tok)?);
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(perr(0, format!("no labels for vertex `{}`", g.name(v))));
    }
    Ok(AngleLabeling::new(labels.into_iter().map(|b| b.unwrap_or(0)).collect()))
}

pub fn write_orientation(g: &PlaneGraph, x: &Orientation) -> String {
    let mut s = String::from("orient v1\n");
    for &h in &x.dir {
        let _ = writeln!(s, "dir {} {}", g.name(g.origin(h)), g.name(g.dest(h)));
    }
    s
}

fn parse_dirs(g: &PlaneGraph, text: &str, colored: bool) -> Result<(Orientation, Vec<Option<u8>>)> {
    let mut dir = vec![None; g.m()];
    let mut col = vec![None; g.m()];
    for (l, t) in lines(text, "orient")? {
        match t[0] {
            "dir" if t.len() == 3 => {
                let (u, v) = (vid(g, l, t[1])?, vid(g, l, t[2])?);
                let h = g.dart(u, v).ok_or_else(|| perr(l, format!("`{} {}` is not an edge", t[1], t[2])))?;
                if dir[edge_of(h)].replace(h).is_some() {
                    return Err(perr(l, "edge oriented twice"));
                }
            }
            "col" if colored && t.len() == 4 => {
                let (u, v) = (vid(g, l, t[1])?, vid(g, l, t[2].strip_suffix(':').unwrap_or(t[2]))?);
                let h = g.dart(u, v).ok_or_else(|| perr(l, format!("`{} {}` is not an edge", t[1], t[2])))?;
                col[edge_of(h)] = Some(bit(l, t[3])?);
            }
            _ => return Err(perr(l, format!("unexpected line starting with `{}`", t[0]))),
        }
    }
    let dir = dir
        .into_iter()
        .enumerate()
        .map(|(e, h)| h.ok_or_else(|| perr(0, format!("edge {e} is not oriented"))))
        .collect::<Result<Vec<_>>>()?;
    Ok((Orientation { dir }, col))
}

pub fn parse_orientation(g: &PlaneGraph, text: &str) -> Result<Orientation> {
    Ok(parse_dirs(g, text, false)?.0)
}

pub fn write_sepdec(g: &PlaneGraph, sd: &SeparatingDecomposition) -> String {
    let mut s = write_orientation(g, &sd.orientation);
    for (e, &h) in sd.orientation.dir.iter().enumerate() {
        let _ = writeln!(s, "col {} {}: {}", g.name(g.origin(h)), g.name(g.dest(h)), sd.coloring[e]);
    }
    s
}

/// Sinks are taken from the special vertices of `g`.
pub fn parse_sepdec(g: &PlaneGraph, text: &str) -> Result<SeparatingDecomposition> {
    let sinks = g.specials().ok_or(Error::SpecialsMissing)?;
    let (orientation, col) = parse_dirs(g, text, true)?;
    let coloring = col
        .into_iter()
        .enumerate()
        .map(|(e, c)| c.ok_or_else(|| perr(0, format!("edge {e} has no color"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(SeparatingDecomposition { orientation, coloring, sinks })
}

pub fn write_book(g: &PlaneGraph, b: &BookEmbedding) -> String {
    let mut s = String::from("book v1\n");
    let spine: Vec<&str> = b.spine.iter().map(|&v| g.name(v)).collect();
    let _ = writeln!(s, "spine: {}", spine.join(" "));
    for &(e, p) in &b.pages {
        let (u, v) = g.endpoints(e);
        let _ = writeln!(s, "page{p}: {} {}", g.name(u), g.name(v));
    }
    s
}

pub fn parse_book(g: &PlaneGraph, text: &str) -> Result<BookEmbedding> {
    let mut spine = None;
    let mut pages = Vec::new();
    for (l, t) in lines(text, "book")? {
        match t[0] {
            "spine:" => spine = Some(t[1..].iter().map(|x| vid(g, l, x)).collect::<Result<Vec<_>>>()?),
            "page0:" | "page1:" if t.len() == 3 => {
                let (u, v) = (vid(g, l, t[1])?, vid(g, l, t[2])?);
                let h = g.dart(u, v).ok_or_else(|| perr(l, format!("`{} {}` is not an edge", t[1], t[2])))?;
                pages.push((edge_of(h), u8::from(t[0] == "page1:")));
            }
            _ => return Err(perr(l, format!("unexpected line starting with `{}`", t[0]))),
        }
    }
    let spine = spine.ok_or_else(|| perr(0, "missing `spine:`"))?;
    Ok(BookEmbedding { spine, pages })
}

pub fn write_trace(g: &PlaneGraph, trace: &[Move]) -> String {
    let mut s = String::from("trace v1\n");
    for m in trace {
        match *m {
            Move::Split { u, v, x } => {
                let _ = writeln!(s, "split {} {} -> {}", g.name(u), g.name(v), g.name(x));
            }
            Move::Merge { v, after } => {
                let _ = writeln!(s, "merge {} {}", g.name(v), g.name(after));
            }
        }
    }
    s
}

/// Names resolve against `g`, the graph the first move applies to. Vertices
/// never change under splits and merges.
pub fn parse_trace(g: &PlaneGraph, text: &str) -> Result<Vec<Move>> {
    let mut out = Vec::new();
    for (l, t) in lines(text, "trace")? {
        match t.as_slice() {
            ["split", u, v, "->", x] => {
                out.push(Move::Split { u: vid(g, l, u)?, v: vid(g, l, v)?, x: vid(g, l, x)? });
            }
            ["merge", v, a] => out.push(Move::Merge { v: vid(g, l, v)?, after: vid(g, l, a)? }),
            _ => return Err(perr(l, "expected `split <u> <v> -> <x>` or `merge <v> <after>`")),
        }
    }
    Ok(out)
}

/// Besides the step lines, a `vertices:` line fixes the numbering and an
/// `outer:` line the final outer face.
pub fn write_henneberg(seq: &HennebergSequence) -> String {
    let nm = |v: VertexId| seq.names[v].as_str();
    let mut s = String::from("henne v1\n");
    let _ = writeln!(s, "vertices: {}", seq.names.join(" "));
    let [a, b, c] = seq.base;
    let _ = writeln!(s, "base {} {} {} protect {} {}", nm(a), nm(b), nm(c), nm(a), nm(b));
    for step in &seq.steps {
        match *step {
            HennebergStep::I { v, a, b, after } => {
                let _ = writeln!(s, "I {} {} {} in-face-after {}", nm(v), nm(a), nm(b), nm(after));
            }
            HennebergStep::II { v, a, b, w, side } => {
                let _ = writeln!(s, "II {} on {} {} to {} side {side}", nm(v), nm(a), nm(b), nm(w));
            }
        }
    }
    let _ = writeln!(s, "outer: {} {}", nm(seq.outer.0), nm(seq.outer.1));
    s
}

pub fn parse_henneberg(text: &str) -> Result<HennebergSequence> {
    let ls = lines(text, "henne")?;
    let mut names: Option<Vec<String>> = None;
    let mut base = None;
    let mut steps = Vec::new();
    let mut outer = None;
    for (l, t) in &ls {
        let l = *l;
        if t[0] == "vertices:" {
            names = Some(t[1..].iter().map(|x| x.to_string()).collect());
            continue;
        }
        let names = names.as_ref().ok_or_else(|| perr(l, "`vertices:` must come first"))?;
        let id = |x: &str| names.iter().position(|y| y == x).ok_or_else(|| perr(l, format!("unknown vertex `{x}`")));
        match t.as_slice() {
            ["base", a, b, c, "protect", p, q] => {
                let (a, b, c) = (id(a)?, id(b)?, id(c)?);
                let protect = (id(p)?, id(q)?);
                base = Some(if protect == (a, b) {
                    [a, b, c]
                } else if protect == (b, c) {
                    [b, c, a]
                } else if protect == (c, a) {
                    [c, a, b]
                } else {
                    return Err(perr(l, "protected edge must be two consecutive base vertices"));
                });
            }
            ["I", v, a, b, "in-face-after", h] => {
                steps.push(HennebergStep::I { v: id(v)?, a: id(a)?, b: id(b)?, after: id(h)? });
            }
            ["II", v, "on", a, b, "to", w, "side", s] => {
                steps.push(HennebergStep::II { v: id(v)?, a: id(a)?, b: id(b)?, w: id(w)?, side: bit(l, s)? });
            }
            ["outer:", u, v] => outer = Some((id(u)?, id(v)?)),
            _ => return Err(perr(l, format!("unexpected line starting with `{}`", t[0]))),
        }
    }
    let last = ls.last().map_or(1, |x| x.0);
    let names = names.ok_or_else(|| perr(last, "missing `vertices:`"))?;
    Ok(HennebergSequence {
        n: names.len(),
        base: base.ok_or_else(|| perr(last, "missing `base`"))?,
        steps,
        outer: outer.ok_or_else(|| perr(last, "missing `outer:`"))?,
        names,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::book::book_embed;
    use crate::build::{generalized_label, split_to_quadrangulation};
    use crate::laman::henneberg_sequence;
    use crate::oracle::{bipartite_plane_up_to, gen_plane_laman, gen_quadrangulations, with_all_specials};
    use crate::orient::{sepdec_from_strong, OutDegreeSpec, solve_alpha};
    use crate::rules::{c4_strong, enumerate_labelings, Flavor};

    #[test]
    fn planegraph_round_trip() {
        for n in 4..=7 {
            for q in gen_quadrangulations(n).unwrap() {
                let text = write_planegraph(&q);
                assert_eq!(parse_planegraph(&text).unwrap(), q);
            }
        }
        for g in gen_plane_laman(5).unwrap() {
            assert_eq!(parse_planegraph(&write_planegraph(&g)).unwrap(), g);
        }
    }

    #[test]
    fn planegraph_parse_errors_carry_lines() {
        assert!(matches!(parse_planegraph("planegraph v2\n"), Err(Error::Parse { line: 1, .. })));
        let bad = "planegraph v1\n# c4\nn 4\nrot a: b d\nrot b: c a\nrot c: d b\nrot d: a x\nouter: a d\n";
        assert!(matches!(parse_planegraph(bad), Err(Error::Parse { line: 7, .. })));
        let text = "planegraph v1\nn 4\nrot a: b d\nrot b: c a\nrot c: d b\nrot d: a c # last\nouter: a d\nspecial: a c\n";
        let g = parse_planegraph(text).unwrap();
        assert_eq!(g.specials(), Some((0, 2)));
    }

    #[test]
    fn labeling_and_orientation_round_trip() {
        for q in gen_quadrangulations(7).unwrap() {
            for l in enumerate_labelings(&q, Flavor::Strong, 16).unwrap() {
                assert_eq!(parse_labeling(&q, &write_labeling(&q, &l)).unwrap(), l);
                let sd = sepdec_from_strong(&q, &l).unwrap();
                assert_eq!(parse_sepdec(&q, &write_sepdec(&q, &sd)).unwrap(), sd);
                let b = book_embed(&q, &l).unwrap();
                assert_eq!(parse_book(&q, &write_book(&q, &b)).unwrap(), b);
            }
            let x = solve_alpha(&q, &OutDegreeSpec::two_orientation(&q).unwrap()).unwrap();
            assert_eq!(parse_orientation(&q, &write_orientation(&q, &x)).unwrap(), x);
        }
        let (g, _) = c4_strong();
        assert!(matches!(parse_labeling(&g, "labeling v1\nang s0: 0 0\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn trace_round_trip() {
        let bp = bipartite_plane_up_to(7).unwrap();
        let mut nonempty = 0;
        for g in with_all_specials(&bp[7]) {
            let Some(l) = generalized_label(&g).unwrap().labeling().cloned() else { continue };
            let Ok(run) = split_to_quadrangulation(&g, &l) else { continue };
            let text = write_trace(&g, &run.trace);
            assert_eq!(parse_trace(&g, &text).unwrap(), run.trace);
            nonempty += usize::from(!run.trace.is_empty());
        }
        assert!(nonempty > 0);
        let (g, _) = c4_strong();
        assert!(parse_trace(&g, "trace v1\nsplit s0 a b\n").is_err());
    }

    #[test]
    fn henneberg_round_trip() {
        for g in gen_plane_laman(6).unwrap() {
            let seq = henneberg_sequence(&g).unwrap();
            assert_eq!(parse_henneberg(&write_henneberg(&seq)).unwrap(), seq);
        }
    }
}
