//! `trisurf`: analysis, construction and verification of triangulated surfaces.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use trisurf::builtins::{self, Builtin, CATALOG};
use trisurf::cover::{check_belyi_theorem, face_coloring};
use trisurf::enumerate::{
    sphere_triangulations_cached, sphere_triangulations_with_forms, verify_spheres, CorpusReport,
};
use trisurf::geometry::{develop, TriangleShape};
use trisurf::germs::germ_components;
use trisurf::highdim::{link_pair_check, parity_check, unfolding_d, z2_nullhomologous_check};
use trisurf::monodromy::{odd_vertices, vertex_coloring};
use trisurf::platonic::{exceptional_vertices, platonic_coloring, platonic_monodromy_image};
use trisurf::surface::ComplexJson;
use trisurf::{
    coloring_monodromy, odd_subcomplex, space_of_germs, unfolding, Error, PureComplex,
    SimplicialSurface,
};

#[derive(Parser)]
#[command(
    name = "trisurf",
    version,
    about = "Coloring monodromy of triangulated surfaces"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Input complex as JSON: {"dim": 2, "facets": [[0,1,2], ...]}
    #[arg(
        long = "in",
        global = true,
        value_name = "FILE",
        conflicts_with = "builtin"
    )]
    input: Option<PathBuf>,
    /// Builtin fixture, see `trisurf gen --list`
    #[arg(long, global = true, value_name = "NAME")]
    builtin: Option<String>,
    /// Write the result here instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// JSON output for commands that default to text
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, odd and exceptional vertices, monodromy images and colorability
    Analyze,
    /// A proper coloring: three colors (k = 2) or by a platonic solid (k = 3, 4, 5)
    Color {
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// The unfolding (branched cover of colored triangles)
    Unfold,
    /// The space of germs between the input and a second closed surface
    Germs {
        /// Builtin name or JSON file
        #[arg(long, value_name = "NAME|FILE")]
        with: String,
    },
    /// Developing map into the sphere with triangle angles 2pi/k
    Develop {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Generate all spheres up to n vertices and check the theorems on them
    EnumerateVerify {
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [2, 3, 4, 5])]
        k: Vec<usize>,
        /// Corpus cache file, reused when its n matches
        #[arg(long, value_name = "FILE")]
        cache: Option<PathBuf>,
    },
    /// Construct fixtures
    Gen {
        #[arg(value_enum)]
        kind: Option<GenKind>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        rows: Option<u32>,
        #[arg(long)]
        cols: Option<u32>,
        /// Print the builtin catalog
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    /// All spheres with exactly n vertices, one JSON line each
    Sphere,
    /// Even triangulation of the n-gon
    Polygon,
    /// The rows x cols grid torus
    GridTorus,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_internal() { 3 } else { 2 },
            message: format!("{}: {e}", e.name()),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

enum Input {
    Surface(SimplicialSurface),
    Complex(PureComplex),
}

fn parse_input(text: &str) -> Result<Input, Failure> {
    let c: ComplexJson =
        serde_json::from_str(text).map_err(|e| Failure::from(Error::Json(e.to_string())))?;
    Ok(if c.dim == 2 {
        Input::Surface(SimplicialSurface::from_complex_json(&c)?)
    } else {
        Input::Complex(PureComplex::from_json(&c)?)
    })
}

fn load_named(name: &str) -> Result<Input, Failure> {
    if let Some(b) = builtins::by_name(name) {
        return Ok(match b {
            Builtin::Surface(s) => Input::Surface(s),
            Builtin::Complex(c) => Input::Complex(c),
        });
    }
    let text = fs::read_to_string(name)
        .map_err(|_| usage(format!("unknown builtin or unreadable file: {name}")))?;
    parse_input(&text)
}

fn load(g: &Global) -> Result<Input, Failure> {
    match (&g.input, &g.builtin) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            parse_input(&text)
        }
        (None, Some(name)) => {
            builtins::by_name(name).ok_or_else(|| usage(format!("unknown builtin: {name}")))?;
            load_named(name)
        }
        (None, None) => Err(usage("an input is required: --in FILE or --builtin NAME")),
    }
}

fn surface(input: Input) -> Result<SimplicialSurface, Failure> {
    match input {
        Input::Surface(s) => Ok(s),
        Input::Complex(c) => Err(Error::WrongDimension {
            expected: 2,
            found: c.dim(),
        }
        .into()),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

fn analyze_surface(s: &SimplicialSurface) -> Result<Value, Failure> {
    let connected = s.is_connected();
    let orientable = s.orientation().is_some();
    let mut histogram: BTreeMap<String, usize> = BTreeMap::new();
    for d in s.degrees().values() {
        *histogram.entry(d.to_string()).or_insert(0) += 1;
    }
    let mut exceptional = BTreeMap::new();
    let mut monodromy = BTreeMap::new();
    let mut platonic_colorable = BTreeMap::new();
    for k in 2..=5usize {
        exceptional.insert(k.to_string(), to_value(&exceptional_vertices(s, k)));
        if !connected {
            continue;
        }
        let entry = if k == 2 {
            let m = coloring_monodromy(s)?;
            json!({"image": m.kind().to_string(), "order": m.order()})
        } else {
            let m = platonic_monodromy_image(s, k)?;
            platonic_colorable.insert(k.to_string(), m.is_trivial());
            json!({"order": m.order(), "abelian": m.is_abelian()})
        };
        monodromy.insert(k.to_string(), entry);
    }
    let mut report = json!({
        "dim": 2,
        "vertices": s.num_vertices(),
        "edges": s.num_edges(),
        "triangles": s.num_triangles(),
        "euler_characteristic": s.euler_characteristic(),
        "connected": connected,
        "components": s.components().len(),
        "closed": s.is_closed(),
        "boundary_cycles": s.boundary_cycles().len(),
        "orientable": orientable,
        "genus": if s.is_closed() && connected && orientable { json!(s.genus()?) } else { Value::Null },
        "degree_histogram": histogram,
        "odd_vertices": to_value(&odd_vertices(s)),
        "exceptional_vertices": exceptional,
    });
    if connected {
        report["monodromy"] = to_value(&monodromy);
        report["vertex_colorable"] = json!(vertex_coloring(s)?.is_some());
        report["face_colorable"] = json!(face_coloring(s)?.is_some());
        report["platonic_colorable"] = to_value(&platonic_colorable);
        if s.is_closed() {
            report["colorability_theorem"] = to_value(&check_belyi_theorem(s)?);
        }
    }
    Ok(report)
}

fn analyze_complex(c: &PureComplex) -> Result<Value, Failure> {
    let odd = odd_subcomplex(c);
    let link_pairs = if c.dim() >= 3 {
        to_value(&link_pair_check(c)?)
    } else {
        Value::Null
    };
    Ok(json!({
        "dim": c.dim(),
        "f_vector": c.f_vector(),
        "euler_characteristic": c.euler_characteristic(),
        "closed_pseudomanifold": c.is_closed_pseudomanifold(),
        "odd_subcomplex": to_value(&odd),
        "odd_is_ridge_boundary": z2_nullhomologous_check(c),
        "parity_law": parity_check(c),
        "link_pairs": link_pairs,
    }))
}

fn text_report(v: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(m) = v {
        for (k, x) in m {
            out.push_str(&format!(
                "{k}: {}\n",
                serde_json::to_string(x).expect("json")
            ));
        }
    }
    out
}

fn render_json(v: &Value) -> String {
    // serde_json's map is ordered, so keys come out sorted
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn census_text(r: &CorpusReport) -> String {
    let mut out = format!("spheres up to {} vertices, k = {:?}\n", r.n_max, r.ks);
    for (n, c) in &r.spheres_by_n {
        out.push_str(&format!("  n = {n}: {c}\n"));
    }
    out.push_str(&format!("odd vertex counts: {:?}\n", r.odd_vertex_counts));
    out.push_str(&format!(
        "four pairwise adjacent odd vertices: {}\n",
        r.four_adjacent_odd
    ));
    for (k, c) in &r.census {
        out.push_str(&format!(
            "k = {k}: two exceptional {}, across an edge {}, none {}, transport strip-independent {}, keeps color {}\n",
            c.two_exceptional, c.across_edge, c.no_exceptional, c.transport_strip_independent, c.transport_matches_first
        ));
    }
    out.push_str(&format!(
        "vertex-colorable {}, face-colorable {}\n",
        r.vertex_colorable, r.face_colorable
    ));
    out.push_str(&format!("violations: {}\n", r.violations.len()));
    for v in &r.violations {
        out.push_str(&format!(
            "  {} n={} {}: {}\n",
            v.check, v.n, v.canonical, v.message
        ));
    }
    out
}

/// Runs a command; returns the output and whether it signals a violation.
fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let g = &cli.global;
    let out = match &cli.command {
        Command::Analyze => {
            let report = match load(g)? {
                Input::Surface(s) => analyze_surface(&s)?,
                Input::Complex(c) => analyze_complex(&c)?,
            };
            if g.json {
                render_json(&report)
            } else {
                text_report(&report)
            }
        }
        Command::Color { k } => {
            let s = surface(load(g)?)?;
            let v = if *k == 2 {
                match vertex_coloring(&s)? {
                    Some(c) => to_value(&c),
                    None => {
                        json!({"colors": null, "monodromy": coloring_monodromy(&s)?.kind().to_string()})
                    }
                }
            } else {
                match platonic_coloring(&s, *k)? {
                    Some(c) => to_value(&c),
                    None => {
                        json!({"k": k, "colors": null, "monodromy_order": platonic_monodromy_image(&s, *k)?.order()})
                    }
                }
            };
            render_json(&v)
        }
        Command::Unfold => match load(g)? {
            Input::Surface(s) => render_json(&to_value(&unfolding(&s)?.to_json_value())),
            Input::Complex(c) => {
                let u = unfolding_d(&c)?;
                render_json(&json!({
                    "total": u.total.to_json(),
                    "base": c.to_json(),
                    "facet_projection": u.facet_projection,
                    "vertex_projection": u.vertex_projection,
                    "colors": u.colors,
                    "component_count": u.component_count(),
                    "singular_vertices": u.singular_vertices(),
                }))
            }
        },
        Command::Germs { with } => {
            let a = surface(load(g)?)?;
            let b = surface(load_named(with)?)?;
            let space = space_of_germs(&a, &b)?;
            let comps: Vec<Value> = germ_components(&space)
                .iter()
                .map(|c| {
                    let s = &c.surface;
                    json!({
                        "vertices": s.num_vertices(),
                        "edges": s.num_edges(),
                        "triangles": s.num_triangles(),
                        "euler_characteristic": s.euler_characteristic(),
                        "genus": s.genus().ok(),
                        "left_degree": c.left.covering_degree(),
                        "right_degree": c.right.covering_degree(),
                    })
                })
                .collect();
            let mut v = to_value(&space.to_json_value());
            v["components"] = Value::Array(comps);
            render_json(&v)
        }
        Command::Develop { k, root } => {
            let s = surface(load(g)?)?;
            if *root >= s.num_triangles() {
                return Err(usage(format!("root triangle {root} out of range")));
            }
            let shape = TriangleShape::<f64>::new(*k)?;
            let p = develop(&s, *k, *root, shape.standard_placement())?;
            render_json(&p.to_json_value())
        }
        Command::EnumerateVerify { n, k, cache } => {
            if *n < 4 {
                return Err(usage("--n must be at least 4"));
            }
            if let Some(bad) = k.iter().find(|&&k| !(2..=5).contains(&k)) {
                return Err(Error::UnsupportedK(*bad).into());
            }
            let corpus = match cache {
                Some(path) => sphere_triangulations_cached(*n, path)?,
                None => sphere_triangulations_with_forms(*n),
            };
            let report = verify_spheres(&corpus, *n, k);
            let text = if g.json {
                render_json(&to_value(&report))
            } else {
                census_text(&report)
            };
            return Ok((text, !report.is_clean()));
        }
        Command::Gen {
            kind,
            n,
            rows,
            cols,
            list,
        } => {
            if *list {
                return Ok((CATALOG.iter().map(|c| format!("{c}\n")).collect(), false));
            }
            match kind.ok_or_else(|| usage("gen needs sphere, polygon or grid-torus"))? {
                GenKind::Sphere => {
                    let n = n.ok_or_else(|| usage("--n is required"))?;
                    if n < 4 {
                        return Err(usage("--n must be at least 4"));
                    }
                    sphere_triangulations_with_forms(n)
                        .into_iter()
                        .filter(|(_, s)| s.num_vertices() == n)
                        .map(|(_, s)| s.to_json() + "\n")
                        .collect()
                }
                GenKind::Polygon => {
                    let n = n.ok_or_else(|| usage("--n is required"))?;
                    render_json(&to_value(
                        &trisurf::monodromy::even_polygon_triangulation(n)?.to_complex_json(),
                    ))
                }
                GenKind::GridTorus => {
                    let (r, c) = (rows.unwrap_or(3), cols.unwrap_or(3));
                    if r < 3 || c < 3 {
                        return Err(usage("grid torus needs at least 3 rows and 3 columns"));
                    }
                    render_json(&to_value(&builtins::grid_torus(r, c).to_complex_json()))
                }
            }
        }
    };
    Ok((out, false))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, violated)) => {
            let written = match &cli.global.out {
                Some(path) => fs::write(path, &text),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if violated {
                eprintln!("error: theorem violations found");
                return ExitCode::from(3);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
