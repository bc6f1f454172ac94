use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use circlegraph::algebra::IntMatrix;
use circlegraph::deltamatroid::{dm_from_graph, dm_from_matrix, reconstruct_matrix, SetSystem};
use circlegraph::fixtures::{fixture, NAMES};
use circlegraph::formats::{
    dot_graph, dot_multigraph, parse_graph_or_dow, parse_matrix, parse_rotation_system,
    parse_set_system, write_four_regular, write_gf2_matrix, write_graph, write_int_matrix,
    write_matroid, write_multigraph, write_rotation_system, write_set_system, Matrix,
};
use circlegraph::fourregular::{
    boundary_trace, detach, enumerate_four_regular, interlacement, parse_dow, random_plane_map,
    random_spanning_tree, touch_graph, CircuitPartition, EulerSystem,
};
use circlegraph::graphs::LoopedGraph;
use circlegraph::isotropic::{ias_matroid, Transversal};
use circlegraph::pu::{
    is_t_regular_graph, pu_sign, pu_violation, transversal_determinants_unimodular,
};
use circlegraph::recognize::{characterization_report, crossing_lower_bound, is_circle, Method};
use circlegraph::{Error, Result};

#[derive(Parser)]
#[command(
    name = "circlegraph",
    version,
    about = "Circle graphs, isotropic matroids and delta-matroids"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Oracle,
    Obstruction,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Letter {
    P,
    C,
    S,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is a circle graph.
    Recognize {
        input: String,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
    },
    /// A double occurrence word realizing a circle graph.
    Realize { input: String },
    /// Interlacement graph of a double occurrence word.
    Interlace {
        input: String,
        #[arg(long)]
        dot: bool,
    },
    /// The IAS matrix `(I | A | I+A)` with element labels.
    Ias { input: String },
    /// Transverse circuits up to a size bound.
    Tcircuits {
        input: String,
        #[arg(long, default_value_t = 3)]
        max: usize,
    },
    /// Touch-graph of a circuit partition given as one letter per vertex.
    Touch {
        input: String,
        #[arg(long)]
        partition: Transversal,
        #[arg(long)]
        dot: bool,
    },
    /// Detach a vertex along one of its transitions.
    Detach {
        input: String,
        #[arg(long)]
        vertex: String,
        #[arg(long, value_enum)]
        kind: Letter,
    },
    /// Delta-matroid operations.
    Dm {
        #[command(subcommand)]
        op: DmOp,
    },
    /// PU signing of a GF(2) support, or a PU check of an integer matrix.
    PuSign { input: String },
    /// Sweep every tight section of the isotropic matroid.
    TRegular { input: String },
    /// Lower bound on crossings from disjoint transversal pairs.
    CrossBound {
        input: String,
        #[arg(long)]
        refine: bool,
    },
    /// 4-regular graphs on `n` vertices up to isomorphism.
    #[command(name = "enumerate-4regular")]
    Enumerate4Regular {
        n: usize,
        #[arg(long)]
        simple: bool,
    },
    /// Automorphism count of the isotropic matroid.
    Aut { input: String },
    /// Every characterization evaluated side by side.
    Report { input: String },
    /// Print a named fixture.
    Fixture { name: String },
    /// A random plane map as a rotation system.
    RandomMap {
        #[arg(long, default_value_t = 4)]
        cycle: usize,
        #[arg(long, default_value_t = 8)]
        edges: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Boundary word of a spanning tree in a plane map; the tree is drawn at random.
    BoundaryTrace {
        input: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum DmOp {
    /// `D_A` of a graph's adjacency matrix (loops on the diagonal).
    FromGraph { input: String },
    /// `D_A` of a symmetric GF(2) matrix.
    FromMatrix { input: String },
    Twist {
        input: String,
        /// Comma-separated elements.
        #[arg(long, default_value = "")]
        set: String,
    },
    LoopComplement {
        input: String,
        #[arg(long, default_value = "")]
        set: String,
    },
    /// Axioms, evenness, binarity, Eulerian and regular.
    Check { input: String },
    /// The symmetric matrix of a binary delta-matroid with the empty set feasible.
    Reconstruct { input: String },
}

/// Reads a file, or falls back to a fixture by name.
fn load(input: &str) -> Result<String> {
    if Path::new(input).exists() {
        return std::fs::read_to_string(input).map_err(|e| Error::Parse(format!("{input}: {e}")));
    }
    Ok(fixture(input)?.to_text(input))
}

fn load_graph(input: &str) -> Result<(String, LoopedGraph)> {
    parse_graph_or_dow(&load(input)?)
}

fn load_dow(input: &str) -> Result<EulerSystem> {
    parse_dow(&load(input)?)
}

fn parse_set(s: &str, n: usize) -> Result<u32> {
    let mut x = 0u32;
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok
            .parse()
            .map_err(|_| Error::Parse(format!("set element {tok:?}")))?;
        if v >= n {
            return Err(Error::Dimension(format!("element {v} outside 0..{n}")));
        }
        x |= 1 << v;
    }
    Ok(x)
}

struct Output {
    text: String,
    json: Value,
}

fn out(text: String, json: Value) -> Result<Output> {
    Ok(Output { text, json })
}

fn run(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Recognize { input, method } => {
            let (_, g) = load_graph(&input)?;
            let method = match method {
                MethodArg::Oracle => Method::Oracle,
                MethodArg::Obstruction => Method::Obstruction,
                MethodArg::Both => Method::Both,
            };
            let r = is_circle(&g, method)?;
            let mut text = format!(
                "{}\n",
                if r.verdict.is_circle() {
                    "CIRCLE"
                } else {
                    "NOT_CIRCLE"
                }
            );
            if let Some(dow) = &r.dow {
                text += &format!("dow {}\n", dow.replace('\n', " | "));
            }
            if let Some(o) = &r.obstruction {
                text += &format!(
                    "obstruction {} lc {:?} keep {:?}\n",
                    o.name, o.witness.lc_sequence, o.witness.image
                );
            }
            out(text, serde_json::to_value(&r).expect("serializable"))
        }
        Command::Realize { input } => {
            let (_, g) = load_graph(&input)?;
            let r = is_circle(&g, Method::Oracle)?;
            let text = match &r.dow {
                Some(dow) => format!("{dow}\n"),
                None => "NOT_CIRCLE\n".into(),
            };
            out(text, json!({ "verdict": r.verdict, "dow": r.dow }))
        }
        Command::Interlace { input, dot } => {
            let c = load_dow(&input)?;
            let g = interlacement(&c);
            let text = if dot {
                dot_graph("interlacement", &g)
            } else {
                write_graph("interlacement", &g)
            };
            let adjacency: Vec<(String, Vec<String>)> = (0..g.n())
                .map(|v| {
                    (
                        g.name(v),
                        g.neighbor_list(v).into_iter().map(|w| g.name(w)).collect(),
                    )
                })
                .collect();
            out(text, json!({ "n": g.n(), "adjacency": adjacency }))
        }
        Command::Ias { input } => {
            let (_, g) = load_graph(&input)?;
            let p = ias_matroid(&g)?;
            let m = p.matroid();
            out(
                write_matroid(m),
                json!({ "elements": m.labels(), "matrix": m.representation().to_rows() }),
            )
        }
        Command::Tcircuits { input, max } => {
            let (_, g) = load_graph(&input)?;
            let cs = ias_matroid(&g)?.transverse_circuits(max);
            let mut counts = vec![0usize; max + 1];
            let mut text = String::new();
            for c in &cs {
                counts[c.size()] += 1;
                text += &format!("{c}\n");
            }
            for (k, &c) in counts.iter().enumerate().skip(1) {
                text += &format!("# size {k}: {c}\n");
            }
            out(text, json!({ "circuits": cs, "counts_by_size": counts }))
        }
        Command::Touch {
            input,
            partition,
            dot,
        } => {
            let c = load_dow(&input)?;
            let f = c.graph();
            if partition.n() != f.n() || !partition.is_total() {
                return Err(Error::Dimension(format!(
                    "partition needs one letter for each of {} vertices",
                    f.n()
                )));
            }
            let choice = partition
                .0
                .iter()
                .enumerate()
                .map(|(v, l)| c.transition(v, l.expect("total")))
                .collect();
            let t = touch_graph(f, &CircuitPartition { choice });
            let words: Vec<Vec<String>> = t
                .circuits
                .iter()
                .map(|k| {
                    k.vertices()
                        .into_iter()
                        .map(|v| f.names()[v].clone())
                        .collect()
                })
                .collect();
            let mut text = if dot {
                dot_multigraph("touch", &t.graph)
            } else {
                write_multigraph("touch", &t.graph)
            };
            if !dot {
                for w in &words {
                    text += &format!("# circuit {}\n", w.join(" "));
                }
            }
            out(text, json!({ "circuits": words, "edges": t.graph.edges() }))
        }
        Command::Detach {
            input,
            vertex,
            kind,
        } => {
            let c = load_dow(&input)?;
            let f = c.graph();
            let v = f.vertex(&vertex)?;
            let t = c.transition(v, kind as u8);
            let d = detach(f, v, t)?;
            out(
                write_four_regular("detached", &d),
                json!({ "names": d.names(), "edges": d.edges(), "transition_index": t }),
            )
        }
        Command::Dm { op } => run_dm(op),
        Command::PuSign { input } => match parse_matrix(&load(&input)?)?.0 {
            Matrix::Gf2(m) => match pu_sign(&m)? {
                Some(s) => out(
                    write_int_matrix(s.matrix()),
                    json!({ "signable": true, "matrix": s.matrix().to_rows() }),
                ),
                None => out("NOT_SIGNABLE\n".into(), json!({ "signable": false })),
            },
            Matrix::Int(m) => {
                // `(I | A)` is read as its block `A`
                let n = m.rows();
                let a = if m.cols() == 2 * n
                    && m.submatrix(&(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>())
                        == IntMatrix::identity(n)
                {
                    m.submatrix(&(0..n).collect::<Vec<_>>(), &(n..2 * n).collect::<Vec<_>>())
                } else {
                    m
                };
                let v = pu_violation(&a)?;
                let transversal = transversal_determinants_unimodular(&a)?;
                let mut text = match &v {
                    None => "PU\n".to_string(),
                    Some(x) => format!("NOT_PU principal {x:?}\n"),
                };
                text += &format!("transversal determinants unimodular {transversal}\n");
                out(
                    text,
                    json!({ "pu": v.is_none(), "violation": v, "transversal_unimodular": transversal }),
                )
            }
        },
        Command::TRegular { input } => {
            let (_, g) = load_graph(&input)?;
            let r = is_t_regular_graph(&g)?;
            let mut text = format!(
                "{}\ntight sections checked {}\n",
                if r.regular {
                    "T_REGULAR"
                } else {
                    "NOT_T_REGULAR"
                },
                r.tight_sections
            );
            if let Some(w) = &r.witness {
                text += &format!("failing section deletes {w}\n");
            }
            out(
                text,
                json!({ "regular": r.regular, "tight_sections": r.tight_sections, "witness": r.witness }),
            )
        }
        Command::CrossBound { input, refine } => {
            let (_, g) = load_graph(&input)?;
            let b = crossing_lower_bound(&g, refine)?;
            let text = format!(
                "bound {}\nraw {}\npair {} {}\n",
                b.bound, b.raw, b.witness.0, b.witness.1
            );
            out(text, serde_json::to_value(&b).expect("serializable"))
        }
        Command::Enumerate4Regular { n, simple } => {
            let gs = enumerate_four_regular(n, simple)?;
            let mut text = format!("# {} graphs\n", gs.len());
            for (i, f) in gs.iter().enumerate() {
                text += &write_four_regular(&format!("F{n}_{i}"), f);
            }
            let edges: Vec<&[(usize, usize)]> = gs.iter().map(|f| f.edges()).collect();
            out(text, json!({ "count": gs.len(), "graphs": edges }))
        }
        Command::Aut { input } => {
            let (_, g) = load_graph(&input)?;
            let count = ias_matroid(&g)?.matroid().automorphism_count()?;
            out(
                format!("{count}\n"),
                json!({ "automorphisms": count.to_string() }),
            )
        }
        Command::Report { input } => {
            let (_, g) = load_graph(&input)?;
            let r = characterization_report(&g)?;
            let mut text = format!("circle {}\n", r.circle);
            for c in &r.characterizations {
                let implies = match c.implies_circle {
                    Some(b) => b.to_string(),
                    None => "-".into(),
                };
                text += &format!(
                    "{} applies={} implies_circle={}\n",
                    c.name, c.applies, implies
                );
                for (cond, v) in &c.conditions {
                    text += &format!("  {cond}: {v}\n");
                }
            }
            text += &format!("consistent {}\n", r.consistent);
            out(text, serde_json::to_value(&r).expect("serializable"))
        }
        Command::Fixture { name } => {
            let f = fixture(&name)?;
            let text = f.to_text(&name);
            out(
                text.clone(),
                json!({ "name": name, "text": text, "available": NAMES }),
            )
        }
        Command::RandomMap { cycle, edges, seed } => {
            if cycle < 1 {
                return Err(Error::Precondition("cycle length must be positive".into()));
            }
            let h = random_plane_map(&mut ChaCha8Rng::seed_from_u64(seed), cycle, edges);
            out(
                write_rotation_system(&h),
                json!({ "n": h.n(), "edges": h.edges() }),
            )
        }
        Command::BoundaryTrace { input, seed } => {
            let h = parse_rotation_system(
                &std::fs::read_to_string(&input)
                    .map_err(|e| Error::Parse(format!("{input}: {e}")))?,
            )?;
            let tree = random_spanning_tree(&mut ChaCha8Rng::seed_from_u64(seed), &h);
            let word = boundary_trace(&h, &tree)?;
            let text = format!(
                "tree {}\nword {}\n",
                tree.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
                word.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            out(text, json!({ "tree": tree, "word": word }))
        }
    }
}

fn run_dm(op: DmOp) -> Result<Output> {
    let emit = |d: SetSystem| {
        out(
            write_set_system(&d),
            json!({ "n": d.n(), "feasible": d.feasible().collect::<Vec<_>>() }),
        )
    };
    match op {
        DmOp::FromGraph { input } => emit(dm_from_graph(&load_graph(&input)?.1)),
        DmOp::FromMatrix { input } => match parse_matrix(&load(&input)?)?.0 {
            Matrix::Gf2(m) => emit(dm_from_matrix(&m)?),
            Matrix::Int(_) => Err(Error::Precondition("expected a gf2 matrix".into())),
        },
        DmOp::Twist { input, set } => {
            let d = parse_set_system(&load(&input)?)?;
            let x = parse_set(&set, d.n())?;
            emit(d.twist(x))
        }
        DmOp::LoopComplement { input, set } => {
            let d = parse_set_system(&load(&input)?)?;
            let x = parse_set(&set, d.n())?;
            emit(d.loop_complement(x))
        }
        DmOp::Check { input } => {
            let d = parse_set_system(&load(&input)?)?;
            let delta = d.is_delta_matroid()?;
            let even = d.is_even();
            let binary = d.is_binary()?;
            let eulerian = if binary && even {
                Some(d.is_eulerian()?)
            } else {
                None
            };
            let regular = if binary && even {
                Some(d.is_regular()?.is_some())
            } else {
                None
            };
            let show = |b: Option<bool>| b.map_or("-".to_string(), |b| b.to_string());
            let text = format!(
                "delta_matroid {delta}\neven {even}\nbinary {binary}\neulerian {}\nregular {}\n",
                show(eulerian),
                show(regular)
            );
            out(
                text,
                json!({ "delta_matroid": delta, "even": even, "binary": binary, "eulerian": eulerian, "regular": regular }),
            )
        }
        DmOp::Reconstruct { input } => {
            let d = parse_set_system(&load(&input)?)?;
            let a = reconstruct_matrix(&d)?;
            out(write_gf2_matrix(&a), json!({ "matrix": a.to_rows() }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(o) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&o.json).expect("serializable") + "\n"
            } else {
                o.text
            };
            // A closed pipe downstream is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Guard(_) => 3,
                _ => 2,
            })
        }
    }
}
