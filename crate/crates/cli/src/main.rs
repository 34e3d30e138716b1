mod render;

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use markov_core::classical::{
    compute_uv, map_q, map_s, map_y, markov_theorem_form, MarkovTriple,
};
use markov_core::matform::{map_a, map_c, map_w};
use markov_core::perron::{perron_extremum_with, perron_terms, MarkedPeriodicLls};
use markov_core::sail::{is_extremal_with, lls_from_sail, sail_of_sequence, sails_to_svg, cone_of_sequence};
use markov_core::triple::{
    classical_root, collision_search, enumerate_gen_markov, enumerate_levels, farey_root,
    matrix_root, reconstruct_from_middle, sequence_node_at, sequence_root, verify_markov_llsgraph,
    ClassicalOp, CollisionConfig, CollisionKey, ConcatOp, FareyCode, FareyOp, MatrixOp,
    SearchMode, TripleNode,
};
use markov_core::{Error, Exec, Seq};

use render::{form, matrix, num, radical, row, surd, table};

#[derive(Parser)]
#[command(name = "markov", version, about = "Exact computations on generalised Markov numbers")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Largest tree depth any command may enumerate.
    #[arg(long, global = true, default_value_t = 16)]
    max_depth: usize,
    /// Fractional digits in decimal renderings.
    #[arg(long, global = true, default_value_t = 30)]
    digits: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeKind {
    Farey,
    Markov,
    Seq,
    Matrix,
    Genmarkov,
}

#[derive(Clone, Copy, ValueEnum)]
enum KeyArg {
    Middle,
    Triple,
}

#[derive(Subcommand)]
enum Command {
    /// K, breve K and the trace coefficient of a sequence.
    Continuant { seq: String },
    /// Matrix, form, spectrum value and extremality of an even sequence.
    Diagram { seq: String },
    /// Enumerate a triple-graph as JSON Lines, breadth first.
    Tree {
        kind: TreeKind,
        #[arg(long, default_value = "1,1")]
        mu: String,
        #[arg(long, default_value = "2,2")]
        nu: String,
        #[arg(long, default_value_t = 16)]
        depth: usize,
    },
    /// Repeated middle numbers in the generalised Markov tree.
    Collisions {
        #[arg(long, default_value = "4,4")]
        mu: String,
        #[arg(long, default_value = "11,11")]
        nu: String,
        #[arg(long, default_value_t = 24)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = KeyArg::Middle)]
        key: KeyArg,
        /// Visit every node to the depth instead of the value-capped subtree.
        #[arg(long)]
        full: bool,
        #[arg(long, default_value_t = 1 << 22)]
        node_budget: u64,
    },
    /// Classical maps of a Markov triple.
    Classical {
        /// Three comma-separated entries in any order.
        #[arg(long)]
        triple: String,
    },
    /// Perron terms of a periodic sequence.
    Perron {
        seq: String,
        #[arg(long, default_value_t = 0)]
        mark: usize,
    },
    /// Sail of the cone of a periodic sequence.
    Sail {
        seq: String,
        #[arg(long, default_value_t = 2)]
        periods: usize,
        /// Also write an SVG drawing to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Check the Markov LLS triple-graph conditions for a seed pair.
    VerifyGraph {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Locate a middle sequence in the tree of a seed pair.
    Reconstruct {
        seq: String,
        #[arg(long, default_value = "1,1")]
        mu: String,
        #[arg(long, default_value = "2,2")]
        nu: String,
    },
}

struct Ctx {
    output: Output,
    max_depth: usize,
    digits: usize,
    exec: Exec,
}

fn parse_seq(s: &str) -> Result<Seq, Error> {
    Seq::from_str(s)
}

fn check_depth(ctx: &Ctx, depth: usize) -> Result<(), Error> {
    if depth > ctx.max_depth {
        return Err(Error::ResourceLimit(format!(
            "depth {depth} exceeds --max-depth {}",
            ctx.max_depth
        )));
    }
    Ok(())
}

fn emit(ctx: &Ctx, out: &mut impl Write, v: &Value) -> io::Result<()> {
    match ctx.output {
        Output::Json => writeln!(out, "{v}"),
        Output::Table => write!(out, "{}", table(v)),
    }
}

fn code_fields(code: &FareyCode) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("code".into(), num(code));
    m.insert("coordinate".into(), num(code.coordinate()));
    m
}

fn node_json<T>(n: &TripleNode<T>, enc: impl Fn(&T) -> Value) -> Map<String, Value> {
    let mut m = code_fields(&n.code);
    m.insert("left".into(), enc(&n.left));
    m.insert("middle".into(), enc(&n.middle));
    m.insert("right".into(), enc(&n.right));
    m
}

fn seq_json(s: &Seq) -> Value {
    Value::String(s.to_literal())
}

fn continuant(ctx: &Ctx, out: &mut impl Write, seq: &str) -> Result<(), Error> {
    let s = parse_seq(seq)?;
    let v = json!({
        "sequence": s.to_literal(),
        "K": num(s.continuant()),
        "breve": num(s.breve()?),
        "trace_coefficient": num(s.trace_coefficient()?),
    });
    emit(ctx, out, &v).map_err(io_err)
}

fn diagram(ctx: &Ctx, out: &mut impl Write, seq: &str) -> Result<(), Error> {
    let s = parse_seq(seq)?;
    let rep = is_extremal_with(&s, true, ctx.exec)?;
    let v = json!({
        "sequence": s.to_literal(),
        "matrix": matrix(&map_a(&s)?),
        "form": form(&map_c(&s)?),
        "spectrum": radical(&map_w(&s)?, ctx.digits),
        "extremal": rep.extremal,
        "value_at_origin": num(&rep.value_at_origin),
        "minimum": num(&rep.minimum),
        "witnesses": render::points(&rep.witnesses),
    });
    emit(ctx, out, &v).map_err(io_err)
}

fn tree(ctx: &Ctx, out: &mut impl Write, kind: TreeKind, mu: &str, nu: &str, depth: usize) -> Result<(), Error> {
    check_depth(ctx, depth)?;
    let fields = ["code", "coordinate", "left", "middle", "right"];
    let mut line = |m: Map<String, Value>| -> Result<(), Error> {
        let r = match ctx.output {
            Output::Json => writeln!(out, "{}", Value::Object(m)),
            Output::Table => writeln!(out, "{}", row(&m, &fields)),
        };
        r.map_err(io_err)
    };
    let exec = ctx.exec;
    match kind {
        TreeKind::Farey => enumerate_levels(farey_root(), &FareyOp, depth, exec, |lv| {
            lv.iter().try_for_each(|n| line(node_json(n, |x| num(x))))
        }),
        TreeKind::Markov => enumerate_levels(classical_root(), &ClassicalOp, depth, exec, |lv| {
            lv.iter().try_for_each(|n| line(node_json(n, |x| num(x))))
        }),
        TreeKind::Seq => {
            let root = sequence_root(&parse_seq(mu)?, &parse_seq(nu)?);
            enumerate_levels(root, &ConcatOp, depth, exec, |lv| {
                lv.iter().try_for_each(|n| line(node_json(n, seq_json)))
            })
        }
        TreeKind::Matrix => {
            let root = matrix_root(&map_a(&parse_seq(mu)?)?, &map_a(&parse_seq(nu)?)?);
            enumerate_levels(root, &MatrixOp, depth, exec, |lv| {
                lv.iter().try_for_each(|n| line(node_json(n, matrix)))
            })
        }
        TreeKind::Genmarkov => {
            for n in enumerate_gen_markov(&parse_seq(mu)?, &parse_seq(nu)?, depth, exec)? {
                let mut m = code_fields(n.code());
                let s = &n.seqs;
                for (k, (seq, b)) in ["left", "middle", "right"]
                    .into_iter()
                    .zip([&s.left, &s.middle, &s.right].into_iter().zip(&n.nums))
                {
                    let text = format!("{b} {}", seq.to_literal());
                    m.insert(k.into(), json!({ "sequence": seq.to_literal(), "breve": num(b), "text": text }));
                }
                line(m)?;
            }
            Ok(())
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn collisions(
    ctx: &Ctx,
    out: &mut impl Write,
    mu: &str,
    nu: &str,
    depth: usize,
    key: KeyArg,
    full: bool,
    node_budget: u64,
) -> Result<(), Error> {
    let (mu, nu) = (parse_seq(mu)?, parse_seq(nu)?);
    let report = verify_markov_llsgraph(&mu, &nu, 2)?;
    if !report.almost_markov() {
        return Err(Error::Precondition(format!(
            "({}, {}) does not give an almost-Markov LLS triple-graph",
            mu.to_literal(),
            nu.to_literal()
        )));
    }
    let cfg = CollisionConfig {
        depth,
        key: match key {
            KeyArg::Middle => CollisionKey::Middle,
            KeyArg::Triple => CollisionKey::Triple,
        },
        mode: if full { SearchMode::FullDepth { node_budget } } else { SearchMode::ValueCapped },
        exec: ctx.exec,
    };
    let rep = collision_search(&mu, &nu, &cfg)?;
    let mut groups = Vec::new();
    for g in &rep.groups {
        let mut members = Vec::new();
        for code in &g.members {
            let node = sequence_node_at(&mu, &nu, code)?;
            let mut m = code_fields(code);
            m.insert("sequence".into(), seq_json(&node.middle));
            m.insert("form".into(), form(&map_c(&node.middle)?));
            members.push(Value::Object(m));
        }
        groups.push(json!({
            "key": g.key.iter().map(num).collect::<Vec<_>>(),
            "members": members,
        }));
    }
    let v = json!({
        "mu": mu.to_literal(),
        "nu": nu.to_literal(),
        "depth": num(depth),
        "mode": if full { "full" } else { "value-capped" },
        "cap": rep.cap.as_ref().map(num),
        "nodes_examined": num(rep.nodes_examined),
        "groups": groups,
    });
    emit(ctx, out, &v).map_err(io_err)
}

fn classical(ctx: &Ctx, out: &mut impl Write, triple: &str) -> Result<(), Error> {
    let parts: Vec<BigUint> = triple
        .split(',')
        .map(|p| BigUint::from_str(p.trim()).map_err(|_| Error::Parse(format!("bad triple entry '{p}'"))))
        .collect::<Result<_, _>>()?;
    let [x, y, z]: [BigUint; 3] = parts
        .try_into()
        .map_err(|_| Error::Parse("a triple needs exactly three entries".into()))?;
    let t = MarkovTriple::new(x, y, z)?;
    let d = compute_uv(&t)?;
    let v = json!({
        "a": num(t.a()),
        "M": num(t.m()),
        "b": num(t.b()),
        "u": num(&d.u),
        "v": num(&d.v),
        "period": map_q(&t)?.to_literal(),
        "form_S": form(&map_s(&t)?),
        "form_markov": form(&markov_theorem_form(t.m(), t.b(), t.a())?),
        "Y": radical(&map_y(&t), ctx.digits),
    });
    emit(ctx, out, &v).map_err(io_err)
}

fn perron(ctx: &Ctx, out: &mut impl Write, seq: &str, mark: usize) -> Result<(), Error> {
    let s = parse_seq(seq)?;
    let m = MarkedPeriodicLls::new(s.clone(), mark)?;
    let terms = perron_terms(&m, ctx.exec)?;
    let (max, index) = perron_extremum_with(&m, ctx.exec)?;
    let mut v = json!({
        "sequence": s.to_literal(),
        "mark": num(mark),
        "terms": terms.iter().map(|t| surd(t, ctx.digits)).collect::<Vec<_>>(),
        "maximum": surd(&max, ctx.digits),
        "index": num(index),
    });
    if s.is_even() {
        let w = map_w(&s)?;
        v["map_w"] = radical(&w, ctx.digits);
        v["matches_map_w"] = json!(w.to_surd() == max);
    }
    emit(ctx, out, &v).map_err(io_err)
}

fn sail(ctx: &Ctx, out: &mut impl Write, seq: &str, periods: usize, svg: Option<&PathBuf>) -> Result<(), Error> {
    let s = parse_seq(seq)?;
    // ⟨s⟩ = ⟨s ⊕ s⟩ gives odd sequences an even period
    let p = if s.is_even() { s.clone() } else { s.concat(&s) };
    let cone = cone_of_sequence(&p)?;
    let poly = sail_of_sequence(&p, periods, ctx.exec)?;
    let lls = lls_from_sail(&poly)?;
    if let Some(path) = svg {
        std::fs::write(path, sails_to_svg(&[(cone.clone(), poly.clone())]))
            .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display())))?;
    }
    let v = json!({
        "sequence": s.to_literal(),
        "cone": {
            "high": surd(cone.slope_high(), ctx.digits),
            "low": surd(cone.slope_low(), ctx.digits),
        },
        "vertices": render::polyline(&poly),
        "lls": lls.sequence.to_literal(),
        "marked_index": num(lls.marked_index),
    });
    emit(ctx, out, &v).map_err(io_err)
}

fn verify_graph(ctx: &Ctx, out: &mut impl Write, mu: &str, nu: &str, depth: usize) -> Result<(), Error> {
    check_depth(ctx, depth)?;
    let r = verify_markov_llsgraph(&parse_seq(mu)?, &parse_seq(nu)?, depth)?;
    let v = json!({
        "depth": num(r.depth),
        "evenly_prime": r.evenly_prime,
        "order": r.order,
        "order_reversed": r.order_reversed,
        "extremal_mu": r.extremal_mu,
        "extremal_nu": r.extremal_nu,
        "palindromic": r.palindromic,
        "almost_markov": r.almost_markov(),
        "markov": r.markov(),
    });
    emit(ctx, out, &v).map_err(io_err)
}

fn reconstruct(ctx: &Ctx, out: &mut impl Write, seq: &str, mu: &str, nu: &str) -> Result<(), Error> {
    let target = parse_seq(seq)?;
    let node = reconstruct_from_middle(&target, &parse_seq(mu)?, &parse_seq(nu)?, ctx.max_depth)?
        .ok_or_else(|| {
            Error::Precondition(format!(
                "{} is not a middle within depth {}",
                target.to_literal(),
                ctx.max_depth
            ))
        })?;
    let mut m = node_json(&node, seq_json);
    m.insert("depth".into(), num(node.code.depth()));
    emit(ctx, out, &Value::Object(m)).map_err(io_err)
}

fn io_err(e: io::Error) -> Error {
    if e.kind() == io::ErrorKind::BrokenPipe {
        std::process::exit(0);
    }
    Error::Precondition(format!("output error: {e}"))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::ResourceLimit(_) => 4,
        _ => 3,
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    let ctx = Ctx { output: cli.output, max_depth: cli.max_depth, digits: cli.digits, exec: Exec::default() };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match &cli.command {
        Command::Continuant { seq } => continuant(&ctx, &mut out, seq)?,
        Command::Diagram { seq } => diagram(&ctx, &mut out, seq)?,
        Command::Tree { kind, mu, nu, depth } => tree(&ctx, &mut out, *kind, mu, nu, *depth)?,
        Command::Collisions { mu, nu, depth, key, full, node_budget } => {
            collisions(&ctx, &mut out, mu, nu, *depth, *key, *full, *node_budget)?
        }
        Command::Classical { triple } => classical(&ctx, &mut out, triple)?,
        Command::Perron { seq, mark } => perron(&ctx, &mut out, seq, *mark)?,
        Command::Sail { seq, periods, svg } => sail(&ctx, &mut out, seq, *periods, svg.as_ref())?,
        Command::VerifyGraph { mu, nu, depth } => verify_graph(&ctx, &mut out, mu, nu, *depth)?,
        Command::Reconstruct { seq, mu, nu } => reconstruct(&ctx, &mut out, seq, mu, nu)?,
    }
    out.flush().map_err(io_err)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
