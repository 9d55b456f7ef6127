//! Thin command-line front end: parses flags or a JSON job file, calls the
//! library, and prints deterministic JSON (or SVG for `render`).
//!
//! Exit codes: 0 success, 2 domain errors (`NotEffective`, `WallBase`,
//! `BoundaryAmbiguous`, `RankDeficient`) with a machine-readable error
//! field on stdout, 1 malformed input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use rgit::chambers;
use rgit::error::Error;
use rgit::json as enc;
use rgit::moment::{matroid_polytope, plucker};
use rgit::partitions::SetPartition;
use rgit::polygons::{self, SideLengths};
use rgit::qvec::QVec;
use rgit::rat::rat_from_str;
use rgit::relative::{
    facet_instance, forgetful_instance, forgetful_model, relative_classify, PairLinearization,
};
use rgit::render::{render_slice, SliceSpec};
use rgit::stability::{
    gm_check, sl2_classify, sln_classify, torus_classify_in, ConfigurationP1, SLnConfig,
    WeightVector,
};

#[derive(Parser)]
#[command(name = "rgit", version, about = "Exact stability, walls, chambers, and relative semistable loci for weighted point configurations")]
struct Cli {
    /// Write the artifact to a file instead of stdout
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a configuration at a weight vector
    Classify(ClassifyArgs),
    /// Enumerate the canonical walls of the (m, n) slice
    Walls {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
    /// Enumerate open chambers with witnesses and classification tables (n = 2)
    Chambers {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
    /// Wall signs and incidences of a weight vector
    Locate {
        #[arg(long)]
        weights: String,
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
    /// Cross-check the configuration and Grassmannian classifications
    GmCheck(GmCheckArgs),
    /// Relative semistable loci over forgetful and facet maps
    Relative {
        #[command(subcommand)]
        sub: RelativeCmd,
    },
    /// Polygon moduli: existence, degeneracy, wall crossings
    Polygon {
        #[command(subcommand)]
        sub: PolygonCmd,
    },
    /// SVG of a 2-plane slice through the m = 4 effective polytope
    Render(RenderArgs),
    /// Execute a JSON job specification
    Job {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Args)]
struct ClassifyArgs {
    /// Comma-separated rational weights, e.g. 1/2,1/2,1/2,1/2
    #[arg(long)]
    weights: Option<String>,
    #[arg(long, default_value_t = 2)]
    n: u32,
    /// Coincidence partition like "12|3|4" (n = 2)
    #[arg(long)]
    partition: Option<String>,
    /// Row-major rational matrix, e.g. [["1","0"],["0","1"]]
    #[arg(long)]
    matrix_json: Option<String>,
    /// JSON input document instead of inline flags
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct GmCheckArgs {
    #[arg(long)]
    weights: String,
    #[arg(long, default_value_t = 2)]
    n: u32,
    #[arg(long)]
    partition: Option<String>,
    #[arg(long)]
    matrix_json: Option<String>,
}

#[derive(Subcommand)]
enum RelativeCmd {
    /// Verify the forgetful-map product theorem at a deformation parameter
    Forgetful {
        #[arg(long)]
        m: usize,
        /// 1-based index of the forgotten point
        #[arg(long)]
        forget: usize,
        /// Base weights over the remaining m-1 points
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        eps: String,
        /// Pair linearization payload, e.g. {"mode":"finite","n":12}
        #[arg(long)]
        mode_json: Option<String>,
    },
    /// Classification table over an interior facet weight (alpha_i = 1)
    Facet {
        #[arg(long)]
        m: usize,
        /// 1-based index with weight 1
        #[arg(long)]
        index: usize,
        #[arg(long)]
        alpha: String,
    },
}

#[derive(Subcommand)]
enum PolygonCmd {
    Analyze {
        /// Comma-separated side lengths, e.g. 2,1,1,1
        #[arg(long)]
        sides: String,
    },
    Path {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long, default_value = "1/2,1/2,1/2,1/2")]
    center: String,
    #[arg(long)]
    dir1: String,
    #[arg(long)]
    dir2: String,
}

enum Artifact {
    Json(Value),
    Svg(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Ok(threads) = std::env::var("RGIT_THREADS") {
        if let Ok(k) = threads.trim().parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build_global();
        }
    }
    let output = cli.output.clone();
    match run(cli.command) {
        Ok(artifact) => {
            let text = render_artifact(&artifact);
            match output {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Err(e) if e.is_domain() => {
            let payload = json!({"error": e.name(), "message": e.to_string()});
            println!(
                "{}",
                serde_json::to_string_pretty(&payload).expect("serializable")
            );
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn render_artifact(artifact: &Artifact) -> String {
    match artifact {
        Artifact::Json(v) => {
            let mut s = serde_json::to_string_pretty(v).expect("serializable");
            s.push('\n');
            s
        }
        Artifact::Svg(s) => s.clone(),
    }
}

fn run(command: Command) -> Result<Artifact, Error> {
    match command {
        Command::Classify(args) => classify(args),
        Command::Walls { m, n } => {
            let walls = chambers::walls(m, n)?;
            Ok(Artifact::Json(json!({
                "m": m,
                "n": n,
                "count": walls.len(),
                "relevant_count": walls.iter().filter(|w| w.is_relevant()).count(),
                "walls": Value::Array(walls.iter().map(enc::wall_json).collect()),
            })))
        }
        Command::Chambers { m, n } => {
            let chambers = chambers::enumerate_chambers(m, n)?;
            Ok(Artifact::Json(json!({
                "m": m,
                "n": n,
                "count": chambers.len(),
                "chambers": Value::Array(chambers.iter().map(enc::chamber_json).collect()),
            })))
        }
        Command::Locate { weights, n } => {
            let w = WeightVector::new(QVec::parse(&weights)?, n)?;
            let (sig, on_walls) = chambers::locate(&w)?;
            Ok(Artifact::Json(json!({
                "signature": enc::signature_json(&sig),
                "on_walls": Value::Array(on_walls.iter().map(enc::wall_json).collect()),
            })))
        }
        Command::GmCheck(args) => {
            let w = WeightVector::new(QVec::parse(&args.weights)?, args.n)?;
            let cfg = config_from(args.partition.as_deref(), args.matrix_json.as_deref(), w.m())?;
            let agree = gm_check(&cfg, &w)?;
            let direct = sln_classify(&cfg, &w)?;
            let pv = plucker(cfg.matrix())?;
            let poly = matroid_polytope(&pv);
            let torus = torus_classify_in(&poly, w.alpha(), w.m() - 1)?;
            Ok(Artifact::Json(json!({
                "agree": agree,
                "plucker": enc::plucker_json(&pv),
                "sln": enc::verdict_json(&direct),
                "matroid_torus": enc::verdict_json(&torus),
            })))
        }
        Command::Relative { sub } => relative(sub),
        Command::Polygon { sub } => polygon(sub),
        Command::Render(args) => {
            let spec = SliceSpec::new(
                QVec::parse(&args.center)?,
                QVec::parse(&args.dir1)?,
                QVec::parse(&args.dir2)?,
            )?;
            Ok(Artifact::Svg(render_slice(&spec)?))
        }
        Command::Job { file } => job(&file),
    }
}

fn config_from(
    partition: Option<&str>,
    matrix_json: Option<&str>,
    m: usize,
) -> Result<SLnConfig, Error> {
    match (partition, matrix_json) {
        (Some(p), None) => {
            let part = SetPartition::parse(p, m)?;
            SLnConfig::realize_partition(&part)
        }
        (None, Some(mj)) => {
            let v: Value = serde_json::from_str(mj)
                .map_err(|e| Error::InvalidInput(format!("bad matrix JSON: {e}")))?;
            SLnConfig::new(enc::matrix_from_json(&v)?)
        }
        _ => Err(Error::InvalidInput(
            "give exactly one of --partition or --matrix-json".to_string(),
        )),
    }
}

fn classify(args: ClassifyArgs) -> Result<Artifact, Error> {
    let doc: Option<Value> = match &args.input {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("cannot read input: {e}")))?;
            Some(
                serde_json::from_str(&text)
                    .map_err(|e| Error::InvalidInput(format!("bad input JSON: {e}")))?,
            )
        }
        None => None,
    };
    let (weights, n, partition, matrix): (QVec, u32, Option<Value>, Option<Value>) = match doc {
        Some(Value::Object(obj)) => {
            for k in obj.keys() {
                if !["weights", "n", "partition", "matrix"].contains(&k.as_str()) {
                    return Err(Error::InvalidInput(format!("unknown field `{k}`")));
                }
            }
            let weights = enc::qvec_from_json(
                obj.get("weights")
                    .ok_or_else(|| Error::InvalidInput("missing `weights`".to_string()))?,
            )?;
            let n = obj
                .get("n")
                .and_then(|x| x.as_u64())
                .ok_or_else(|| Error::InvalidInput("missing `n`".to_string()))?
                as u32;
            (
                weights,
                n,
                obj.get("partition").cloned(),
                obj.get("matrix").cloned(),
            )
        }
        Some(_) => {
            return Err(Error::InvalidInput(
                "classify input must be a JSON object".to_string(),
            ))
        }
        None => {
            let weights = QVec::parse(
                args.weights
                    .as_deref()
                    .ok_or_else(|| Error::InvalidInput("--weights is required".to_string()))?,
            )?;
            (
                weights,
                args.n,
                args.partition.clone().map(Value::String),
                args.matrix_json
                    .as_deref()
                    .map(|s| {
                        serde_json::from_str(s)
                            .map_err(|e| Error::InvalidInput(format!("bad matrix JSON: {e}")))
                    })
                    .transpose()?,
            )
        }
    };
    let w = WeightVector::new(weights, n)?;
    let verdict = match (partition, matrix) {
        (Some(p), None) => {
            let part = enc::partition_from_json(&p, w.m())?;
            sl2_classify(&ConfigurationP1::from_partition(part), &w)?
        }
        (None, Some(mx)) => {
            let cfg = SLnConfig::new(enc::matrix_from_json(&mx)?)?;
            sln_classify(&cfg, &w)?
        }
        _ => {
            return Err(Error::InvalidInput(
                "give exactly one of a partition or a matrix".to_string(),
            ))
        }
    };
    Ok(Artifact::Json(enc::verdict_json(&verdict)))
}

fn relative(sub: RelativeCmd) -> Result<Artifact, Error> {
    match sub {
        RelativeCmd::Forgetful {
            m,
            forget,
            alpha,
            eps,
            mode_json,
        } => {
            if forget == 0 || forget > m {
                return Err(Error::InvalidInput(format!("forget index out of 1..={m}")));
            }
            let base = WeightVector::new(QVec::parse(&alpha)?, 2)?;
            let eps = rat_from_str(&eps)?;
            let report = forgetful_instance(m, forget - 1, &base, &eps)?;
            let mut out = enc::forgetful_report_json(&report);
            if let Some(mj) = mode_json {
                let v: Value = serde_json::from_str(&mj)
                    .map_err(|e| Error::InvalidInput(format!("bad mode JSON: {e}")))?;
                let mode = enc::mode_from_json(&v)?;
                let (model, _, total_parts) = forgetful_model(m, forget - 1);
                let verdict = relative_classify(
                    &model,
                    &PairLinearization {
                        base: base.clone(),
                        fiber: (),
                        mode,
                    },
                )?;
                let labels: Vec<String> = total_parts.iter().map(|p| p.to_string()).collect();
                out["model"] = enc::relative_verdict_json(&verdict, Some(&labels));
            }
            Ok(Artifact::Json(out))
        }
        RelativeCmd::Facet { m, index, alpha } => {
            if index == 0 || index > m {
                return Err(Error::InvalidInput(format!("index out of 1..={m}")));
            }
            let w = WeightVector::new(QVec::parse(&alpha)?, 2)?;
            let report = facet_instance(m, index - 1, &w)?;
            Ok(Artifact::Json(enc::facet_report_json(&report)))
        }
    }
}

fn polygon(sub: PolygonCmd) -> Result<Artifact, Error> {
    match sub {
        PolygonCmd::Analyze { sides } => {
            let r = SideLengths::parse(&sides)?;
            let report = polygons::analyze(&r)?;
            Ok(Artifact::Json(enc::polygon_report_json(&report)))
        }
        PolygonCmd::Path { from, to } => {
            let a = SideLengths::parse(&from)?;
            let b = SideLengths::parse(&to)?;
            let crossings = polygons::wall_crossing_path(&a, &b)?;
            Ok(Artifact::Json(json!({
                "crossings": enc::crossings_json(&crossings),
            })))
        }
    }
}

/// Executes `{"command": "...", "input": {...}, "output": "path"?}`; unknown
/// fields are rejected; the optional output field routes the artifact.
fn job(file: &PathBuf) -> Result<Artifact, Error> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::InvalidInput(format!("cannot read job file: {e}")))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInput(format!("bad job JSON: {e}")))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::InvalidInput("job must be an object".to_string()))?;
    for k in obj.keys() {
        if !["command", "input", "output"].contains(&k.as_str()) {
            return Err(Error::InvalidInput(format!("unknown field `{k}`")));
        }
    }
    let command = obj
        .get("command")
        .and_then(|c| c.as_str())
        .ok_or_else(|| Error::InvalidInput("job needs a command".to_string()))?;
    let input = obj.get("input").cloned().unwrap_or(Value::Null);
    let get_str = |key: &str| -> Result<String, Error> {
        input
            .get(key)
            .and_then(|x| x.as_str())
            .map(str::to_string)
            .ok_or_else(|| Error::InvalidInput(format!("job input needs `{key}`")))
    };
    let get_usize = |key: &str| -> Result<usize, Error> {
        input
            .get(key)
            .and_then(|x| x.as_u64())
            .map(|x| x as usize)
            .ok_or_else(|| Error::InvalidInput(format!("job input needs `{key}`")))
    };
    let artifact = match command {
        "walls" => run(Command::Walls {
            m: get_usize("m")?,
            n: get_usize("n").unwrap_or(2) as u32,
        })?,
        "chambers" => run(Command::Chambers {
            m: get_usize("m")?,
            n: get_usize("n").unwrap_or(2) as u32,
        })?,
        "locate" => run(Command::Locate {
            weights: get_str("weights")?,
            n: get_usize("n").unwrap_or(2) as u32,
        })?,
        "classify" => {
            let weights = enc::qvec_from_json(input.get("weights").ok_or_else(|| {
                Error::InvalidInput("job input needs `weights`".to_string())
            })?)?;
            let n = get_usize("n").unwrap_or(2) as u32;
            let w = WeightVector::new(weights, n)?;
            let verdict = match (input.get("partition"), input.get("matrix")) {
                (Some(p), None) => {
                    let part = enc::partition_from_json(p, w.m())?;
                    sl2_classify(&ConfigurationP1::from_partition(part), &w)?
                }
                (None, Some(mx)) => {
                    sln_classify(&SLnConfig::new(enc::matrix_from_json(mx)?)?, &w)?
                }
                _ => {
                    return Err(Error::InvalidInput(
                        "classify input needs a partition or a matrix".to_string(),
                    ))
                }
            };
            Artifact::Json(enc::verdict_json(&verdict))
        }
        "gm-check" => run(Command::GmCheck(GmCheckArgs {
            weights: get_str("weights")?,
            n: get_usize("n").unwrap_or(2) as u32,
            partition: get_str("partition").ok(),
            matrix_json: input.get("matrix").map(|m| m.to_string()),
        }))?,
        "relative" => {
            let kind = get_str("kind")?;
            match kind.as_str() {
                "forgetful" => run(Command::Relative {
                    sub: RelativeCmd::Forgetful {
                        m: get_usize("m")?,
                        forget: get_usize("forget")?,
                        alpha: get_str("alpha")?,
                        eps: get_str("eps")?,
                        mode_json: input.get("mode").map(|m| m.to_string()),
                    },
                })?,
                "facet" => run(Command::Relative {
                    sub: RelativeCmd::Facet {
                        m: get_usize("m")?,
                        index: get_usize("index")?,
                        alpha: get_str("alpha")?,
                    },
                })?,
                other => {
                    return Err(Error::InvalidInput(format!(
                        "unknown relative kind `{other}`"
                    )))
                }
            }
        }
        "polygon" => {
            let kind = get_str("kind")?;
            match kind.as_str() {
                "analyze" => run(Command::Polygon {
                    sub: PolygonCmd::Analyze {
                        sides: get_str("sides")?,
                    },
                })?,
                "path" => run(Command::Polygon {
                    sub: PolygonCmd::Path {
                        from: get_str("from")?,
                        to: get_str("to")?,
                    },
                })?,
                other => {
                    return Err(Error::InvalidInput(format!(
                        "unknown polygon kind `{other}`"
                    )))
                }
            }
        }
        "render" => run(Command::Render(RenderArgs {
            center: get_str("center").unwrap_or_else(|_| "1/2,1/2,1/2,1/2".to_string()),
            dir1: get_str("dir1")?,
            dir2: get_str("dir2")?,
        }))?,
        other => return Err(Error::InvalidInput(format!("unknown command `{other}`"))),
    };
    if let Some(path) = obj.get("output").and_then(|o| o.as_str()) {
        std::fs::write(path, render_artifact(&artifact))
            .map_err(|e| Error::InvalidInput(format!("cannot write output: {e}")))?;
        return Ok(Artifact::Json(json!({"written": path})));
    }
    Ok(artifact)
}
