mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quadlabel::book::{book_embed, check_book};
use quadlabel::build::{generalized_label, strong_label, GeneralizedOutcome};
use quadlabel::embed::{completion, split_dual};
use quadlabel::flip::{flip_graph, lattice_minimum, MAX_FLIP_GRAPH_EDGES};
use quadlabel::format::*;
use quadlabel::laman::extended_weak_label;
use quadlabel::oracle::{code_hash, gen_plane_laman, gen_quadrangulations};
use quadlabel::orient::{
    sepdec_from_strong, solve_alpha, strong_from_2orientation, strong_from_sepdec, weak_from_pair, Orientation,
    OutDegreeSpec,
};
use quadlabel::rules::{induce, validate, AngleLabeling, Flavor, Location};
use quadlabel::{embed::canonical_code, PlaneGraph};

/// Environment variable bounding exhaustive enumerations by edge count.
const MAX_EDGES_VAR: &str = "QUADLABEL_ORACLE_MAX_EDGES";

#[derive(Parser)]
#[command(name = "quadlabel", version, about = "Binary angle labelings of plane graphs")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Weak,
    Strong,
    Generalized,
    ExtendedWeak,
}

impl FlavorArg {
    fn flavor(self) -> Flavor {
        match self {
            FlavorArg::Weak => Flavor::Weak,
            FlavorArg::Strong => Flavor::Strong,
            FlavorArg::Generalized => Flavor::Generalized,
            FlavorArg::ExtendedWeak => Flavor::ExtendedWeak,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FlipsMode {
    Enumerate,
    Min,
}

#[derive(Clone, Copy, ValueEnum)]
enum RecognizeKind {
    Weak,
    Generalized,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Quad,
    Laman,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderKind {
    Labeling,
    Book,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a labeling against a rule family.
    Validate { flavor: FlavorArg, graph: PathBuf, labeling: PathBuf },
    /// Strong labeling of a quadrangulation.
    StrongLabel { graph: PathBuf },
    /// Generalized strong labeling, or the violated recognition condition.
    GeneralizedLabel { graph: PathBuf },
    /// Extended weak labeling of a plane Laman graph.
    LamanLabel {
        graph: PathBuf,
        /// Also write the graph with its special pair.
        #[arg(long)]
        graph_out: Option<PathBuf>,
    },
    /// Alpha-orientation by max-flow.
    Orient {
        graph: PathBuf,
        /// `two` for 2-orientations, or an `alpha v1` file.
        #[arg(long)]
        alpha: String,
    },
    /// 2-orientation (or separating decomposition) of a strong labeling.
    ToOrientation {
        graph: PathBuf,
        labeling: PathBuf,
        #[arg(long)]
        sepdec: bool,
    },
    /// Strong labeling of a 2-orientation or separating decomposition.
    FromOrientation {
        graph: PathBuf,
        orientation: PathBuf,
        #[arg(long)]
        sepdec: bool,
    },
    /// 2-book embedding of a strong labeling.
    BookEmbed { graph: PathBuf, labeling: PathBuf },
    /// Flip graph summary, or the lattice minimum.
    Flips {
        mode: FlipsMode,
        graph: PathBuf,
        /// Starting orientation for `min`; defaults to one found by max-flow.
        #[arg(long)]
        orientation: Option<PathBuf>,
    },
    /// Decide whether a labeling of the given kind exists.
    Recognize { kind: RecognizeKind, graph: PathBuf },
    /// Exhaustive generation.
    Gen {
        kind: GenKind,
        #[arg(long)]
        n: usize,
        /// Write one file per instance, named by canonical-code hash.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// SVG figure of a labeling or a book embedding.
    Render {
        kind: RenderKind,
        graph: PathBuf,
        /// Labeling file, or book file for `book`.
        input: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        #[arg(long, value_enum, default_value = "strong")]
        flavor: FlavorArg,
    },
}

/// What a command produced: text, JSON, and whether it counts as success.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Outcome {
        Outcome { text, json, ok: true }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// Bipartite graphs without color lines are colored with `s0` black.
fn load_graph(path: &Path) -> Result<PlaneGraph> {
    let g = parse_planegraph(&read(path)?).with_context(|| format!("in {}", path.display()))?;
    if g.colors().is_none() && g.is_bipartite() {
        return Ok(g.with_colors(quadlabel::ColorMode::Auto)?);
    }
    Ok(g)
}

fn load_labeling(g: &PlaneGraph, path: &Path) -> Result<AngleLabeling> {
    parse_labeling(g, &read(path)?).with_context(|| format!("in {}", path.display()))
}

fn labeling_json(g: &PlaneGraph, l: &AngleLabeling) -> Value {
    let map: serde_json::Map<String, Value> =
        (0..g.n()).map(|v| (g.name(v).to_string(), json!(g.darts_at(v).map(|h| l.get(h)).collect::<Vec<_>>()))).collect();
    Value::Object(map)
}

fn max_edges(default: usize) -> Result<usize> {
    match std::env::var(MAX_EDGES_VAR) {
        Ok(s) => s.trim().parse().with_context(|| format!("{MAX_EDGES_VAR} must be an integer")),
        Err(_) => Ok(default),
    }
}

fn parse_alpha(g: &PlaneGraph, spec: &str) -> Result<OutDegreeSpec> {
    if spec == "two" {
        return Ok(OutDegreeSpec::two_orientation(g)?);
    }
    let text = read(Path::new(spec))?;
    let mut alpha = vec![None; g.n()];
    let mut header = false;
    for (i, raw) in text.lines().enumerate() {
        let toks: Vec<&str> = raw.split('#').next().unwrap_or("").split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            ["alpha", "v1"] if !header => header = true,
            ["out", v, k] if header => {
                let v = v.strip_suffix(':').unwrap_or(v);
                let id = g.vertex_by_name(v).with_context(|| format!("line {}: unknown vertex `{v}`", i + 1))?;
                alpha[id] = Some(k.parse::<usize>().with_context(|| format!("line {}: bad out-degree", i + 1))?);
            }
            _ => bail!("line {}: expected `alpha v1` header or `out <v>: <k>`", i + 1),
        }
    }
    let alpha = alpha
        .into_iter()
        .enumerate()
        .map(|(v, a)| a.with_context(|| format!("no out-degree for `{}`", g.name(v))))
        .collect::<Result<Vec<_>>>()?;
    Ok(OutDegreeSpec { alpha })
}

fn run(cmd: Cmd) -> Result<Outcome> {
    match cmd {
        Cmd::Validate { flavor, graph, labeling } => {
            let g = load_graph(&graph)?;
            let l = load_labeling(&g, &labeling)?;
            let report = validate(&g, &l, flavor.flavor())?;
            let mut text = String::from(if report.is_valid() { "valid\n" } else { "invalid\n" });
            for v in &report.violations {
                text.push_str(&format!("{} at {}: {}\n", v.rule, place(&g, v.location), v.message));
            }
            let ok = report.is_valid();
            Ok(Outcome { text, json: json!({ "valid": ok, "report": report }), ok })
        }
        Cmd::StrongLabel { graph } => {
            let g = load_graph(&graph)?;
            let l = strong_label(&g)?;
            Ok(Outcome::ok(write_labeling(&g, &l), json!({ "labeling": labeling_json(&g, &l) })))
        }
        Cmd::GeneralizedLabel { graph } | Cmd::Recognize { kind: RecognizeKind::Generalized, graph } => {
            let g = load_graph(&graph)?;
            match generalized_label(&g)? {
                GeneralizedOutcome::Labeling(l) => {
                    Ok(Outcome::ok(write_labeling(&g, &l), json!({ "exists": true, "labeling": labeling_json(&g, &l) })))
                }
                GeneralizedOutcome::NoLabeling(c) => Ok(Outcome {
                    text: format!("NO: {c}\n"),
                    json: json!({ "exists": false, "condition": c.number(), "message": c.to_string() }),
                    ok: false,
                }),
            }
        }
        Cmd::Recognize { kind: RecognizeKind::Weak, graph } => {
            let g = load_graph(&graph)?;
            if g.m() + 4 != 2 * g.n() {
                let text = format!("NO: {} edges, a weak labeling needs 2n-4 = {}\n", g.m(), 2 * g.n() - 4);
                return Ok(Outcome { text, json: json!({ "exists": false, "reason": "edge count" }), ok: false });
            }
            let x = solve_alpha(&g, &OutDegreeSpec::two_orientation(&g)?);
            let sd = split_dual(&g)?;
            let xs = solve_alpha(&sd.graph, &OutDegreeSpec::two_star(&sd));
            match (x, xs) {
                (Ok(x), Ok(xs)) => {
                    completion(&g)?;
                    let l = weak_from_pair(&g, &x, &xs)?;
                    Ok(Outcome::ok(write_labeling(&g, &l), json!({ "exists": true, "labeling": labeling_json(&g, &l) })))
                }
                (x, _) => {
                    let which = if x.is_err() { "2-orientation" } else { "split-dual 2*-orientation" };
                    Ok(Outcome {
                        text: format!("NO: no {which}\n"),
                        json: json!({ "exists": false, "reason": which }),
                        ok: false,
                    })
                }
            }
        }
        Cmd::LamanLabel { graph, graph_out } => {
            let g = load_graph(&graph)?;
            let (h, l) = extended_weak_label(&g)?;
            if let Some(path) = graph_out {
                fs::write(&path, write_planegraph(&h)).with_context(|| format!("cannot write {}", path.display()))?;
            }
            let (s0, s1) = h.specials().expect("labeled graph carries specials");
            let text = format!("# special: {} {}\n{}", h.name(s0), h.name(s1), write_labeling(&h, &l));
            Ok(Outcome::ok(
                text,
                json!({ "special": [h.name(s0), h.name(s1)], "labeling": labeling_json(&h, &l) }),
            ))
        }
        Cmd::Orient { graph, alpha } => {
            let g = load_graph(&graph)?;
            let spec = parse_alpha(&g, &alpha)?;
            let x = solve_alpha(&g, &spec)?;
            Ok(Outcome::ok(write_orientation(&g, &x), orientation_json(&g, &x)))
        }
        Cmd::ToOrientation { graph, labeling, sepdec } => {
            let g = load_graph(&graph)?;
            let l = load_labeling(&g, &labeling)?;
            let report = validate(&g, &l, Flavor::Strong)?;
            if let Some(v) = report.violations.first() {
                bail!("labeling is not strong: {} at {}: {}", v.rule, place(&g, v.location), v.message);
            }
            if sepdec {
                let sd = sepdec_from_strong(&g, &l)?;
                Ok(Outcome::ok(write_sepdec(&g, &sd), json!({ "orientation": orientation_json(&g, &sd.orientation), "colors": sd.coloring })))
            } else {
                let x = Orientation::from_structure(&induce(&g, &l, Flavor::Strong)?);
                Ok(Outcome::ok(write_orientation(&g, &x), orientation_json(&g, &x)))
            }
        }
        Cmd::FromOrientation { graph, orientation, sepdec } => {
            let g = load_graph(&graph)?;
            let text = read(&orientation)?;
            let l = if sepdec {
                strong_from_sepdec(&g, &parse_sepdec(&g, &text)?)?
            } else {
                strong_from_2orientation(&g, &parse_orientation(&g, &text)?)?
            };
            Ok(Outcome::ok(write_labeling(&g, &l), json!({ "labeling": labeling_json(&g, &l) })))
        }
        Cmd::BookEmbed { graph, labeling } => {
            let g = load_graph(&graph)?;
            let l = load_labeling(&g, &labeling)?;
            let b = book_embed(&g, &l)?;
            let report = check_book(&g, &b);
            if !report.is_valid() {
                bail!("computed layout fails its check: {:?}", report.violations);
            }
            let spine: Vec<&str> = b.spine.iter().map(|&v| g.name(v)).collect();
            Ok(Outcome::ok(write_book(&g, &b), json!({ "spine": spine, "pages": b.pages.iter().map(|&(e, p)| {
                let (u, v) = g.endpoints(e);
                json!([g.name(u), g.name(v), p])
            }).collect::<Vec<_>>() })))
        }
        Cmd::Flips { mode: FlipsMode::Enumerate, graph, .. } => {
            let g = load_graph(&graph)?;
            let limit = max_edges(MAX_FLIP_GRAPH_EDGES)?.min(MAX_FLIP_GRAPH_EDGES);
            if g.m() > limit {
                bail!("{} edges exceed the enumeration bound {limit} (set {MAX_EDGES_VAR})", g.m());
            }
            let fg = flip_graph(&g)?;
            let text = format!(
                "orientations {}\nflips {}\nconnected {}\nminima {}\n",
                fg.nodes.len(),
                fg.edges.len(),
                fg.connected,
                fg.minima.len()
            );
            let json = json!({ "orientations": fg.nodes.len(), "flips": fg.edges.len(), "connected": fg.connected, "minima": fg.minima.len() });
            Ok(Outcome { text, json, ok: fg.connected && fg.minima.len() == 1 })
        }
        Cmd::Flips { mode: FlipsMode::Min, graph, orientation } => {
            let g = load_graph(&graph)?;
            let x = match orientation {
                Some(p) => parse_orientation(&g, &read(&p)?)?,
                None => solve_alpha(&g, &OutDegreeSpec::two_orientation(&g)?)?,
            };
            let min = lattice_minimum(&g, &x)?;
            Ok(Outcome::ok(write_orientation(&g, &min), orientation_json(&g, &min)))
        }
        Cmd::Gen { kind, n, out_dir } => {
            let graphs = match kind {
                GenKind::Quad => gen_quadrangulations(n)?,
                GenKind::Laman => gen_plane_laman(n)?,
            };
            let limit = max_edges(usize::MAX)?;
            let graphs: Vec<PlaneGraph> = graphs.into_iter().filter(|g| g.m() <= limit).collect();
            let mut text = String::new();
            if let Some(dir) = &out_dir {
                fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
                for g in &graphs {
                    let path = dir.join(format!("{:016x}.pg", code_hash(&canonical_code(g))));
                    fs::write(&path, write_planegraph(g)).with_context(|| format!("cannot write {}", path.display()))?;
                }
                text = format!("{} instances written to {}\n", graphs.len(), dir.display());
            } else {
                for (i, g) in graphs.iter().enumerate() {
                    text.push_str(&format!("# instance {i}\n{}\n", write_planegraph(g)));
                }
            }
            Ok(Outcome::ok(text, json!({ "count": graphs.len() })))
        }
        Cmd::Render { kind, graph, input, svg, flavor } => {
            let g = load_graph(&graph)?;
            let doc = match kind {
                RenderKind::Labeling => render::svg_labeling(&g, &load_labeling(&g, &input)?, flavor.flavor()),
                RenderKind::Book => render::svg_book(&g, &parse_book(&g, &read(&input)?)?),
            };
            fs::write(&svg, &doc).with_context(|| format!("cannot write {}", svg.display()))?;
            Ok(Outcome::ok(format!("wrote {}\n", svg.display()), json!({ "svg": svg.display().to_string() })))
        }
    }
}

fn place(g: &PlaneGraph, loc: Location) -> String {
    match loc {
        Location::Vertex(v) => format!("vertex {}", g.name(v)),
        Location::Edge(e) => {
            let (u, v) = g.endpoints(e);
            format!("edge {} {}", g.name(u), g.name(v))
        }
        Location::Face(f) => {
            let names: Vec<&str> = g.face_walk(f).iter().map(|&h| g.name(g.origin(h))).collect();
            format!("face ({})", names.join(" "))
        }
    }
}

fn orientation_json(g: &PlaneGraph, x: &Orientation) -> Value {
    json!(x.dir.iter().map(|&h| json!([g.name(g.origin(h)), g.name(g.dest(h))])).collect::<Vec<_>>())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli.cmd) {
        Ok(out) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json values serialize"));
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if json {
                println!("{}", json!({ "error": format!("{e:#}") }));
            }
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
