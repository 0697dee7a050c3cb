//! Command-line front end: every computation of the library with
//! deterministic, machine-readable output.
//!
//! Exit codes: 0 success, 2 usage/parse/precondition errors, 3 internal
//! cross-check or consistency failures, 4 resource limits.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use affine_crystal::branching::{
    branching_series, irreducible_restriction, js_generating_function, js_modules, profile_weight,
    BranchingMethod,
};
use affine_crystal::crystal::{character, relabel, CrystalGraph};
use affine_crystal::error::Error;
use affine_crystal::multipartition::ColoredMultipartition;
use affine_crystal::path::Path as LambdaPath;
use affine_crystal::sharp::sharp_multipartition;
use affine_crystal::weights::AffineWeight;

/// Environment variable holding the default truncation order.
const TRUNCATION_ENV: &str = "AFFINE_CRYSTAL_TRUNCATION";

#[derive(Parser)]
#[command(
    name = "affine-crystal",
    about = "Crystals, paths and branching functions of affine sl_n",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    /// Coloured-diagram grid (multipartition outputs only).
    Diagram,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Multipartitions,
    Paths,
    Theta,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LabelsArg {
    Y,
    M,
    Both,
}

#[derive(Args)]
struct Shard {
    /// Emit only block INDEX of COUNT contiguous output blocks ("i/k");
    /// concatenating the blocks for i = 0..k reproduces the full output.
    #[arg(long)]
    shard: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Weight multiplicities of V(Λ) up to a principal degree, computed from
    /// the crystal and cross-checked against path enumeration.
    Character {
        #[arg(short)]
        n: u32,
        /// Highest weight, e.g. "2*L0".
        #[arg(short = 'L', long = "weight")]
        weight: String,
        /// Principal degree cutoff.
        #[arg(short = 'N', long)]
        truncation: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        shard: Shard,
    },
    /// The branching function b^Λ_{Λ'Λ''}(z) to order N.
    Branching {
        #[arg(short)]
        n: u32,
        /// Λ' (the restricting weight).
        #[arg(long = "L1")]
        lambda_prime: String,
        /// Λ'' (the weight whose crystal is enumerated).
        #[arg(long = "L2")]
        lambda_second: String,
        /// Λ (the branching weight).
        #[arg(short = 'L', long = "weight")]
        lambda: String,
        #[arg(short = 'N', long)]
        truncation: Option<u32>,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Jantzen-Seitz data: with -m the module labels of H_m(i) satisfying
    /// JS(j); with -N the generating function (crystal filter vs branching
    /// sum, cross-checked).
    Js {
        #[arg(short)]
        n: u32,
        /// Charge profile i as comma-separated counts, e.g. "2,0".
        #[arg(short = 'i', long)]
        i: String,
        /// JS condition j as comma-separated bounds, e.g. "1,0"; omitted
        /// means the union over the one-hot conditions.
        #[arg(short = 'j', long)]
        j: Option<String>,
        /// Module size m (lists labels).
        #[arg(short = 'm', long)]
        m: Option<u32>,
        /// Truncation order (prints the generating function).
        #[arg(short = 'N', long)]
        truncation: Option<u32>,
        #[arg(long, value_enum, default_value = "y")]
        labels: LabelsArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        shard: Shard,
    },
    /// The ♯ image of a restricted highest-lift multipartition.
    Sharp {
        #[arg(short)]
        n: u32,
        /// The multipartition, compact form "[[3,2],[1]]@0,1" or JSON.
        #[arg(long = "mp")]
        multipartition: String,
        /// The restricting weight Λ'.
        #[arg(long = "L1")]
        lambda_prime: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The crystal graph of V(Λ) up to a principal degree.
    Crystal {
        #[arg(short)]
        n: u32,
        #[arg(short = 'L', long = "weight")]
        weight: String,
        #[arg(short = 'N', long)]
        truncation: Option<u32>,
        #[arg(long, value_enum, default_value = "y")]
        labels: LabelsArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The highest-lift multipartition of a path, e.g. "01,11|2*L0".
    HighestLift {
        #[arg(short)]
        n: u32,
        #[arg(long)]
        path: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse(_)
        | Error::Precondition(_)
        | Error::InvalidModulus(_)
        | Error::AmbientMismatch(_)
        | Error::Unsupported(_) => 2,
        Error::CrossCheck(_) | Error::Inconsistency(_) => 3,
        Error::ResourceLimit(_) => 4,
    }
}

fn truncation_or_env(explicit: Option<u32>) -> Result<u32, Error> {
    if let Some(n) = explicit {
        return Ok(n);
    }
    match std::env::var(TRUNCATION_ENV) {
        Ok(value) => value
            .parse()
            .map_err(|_| Error::Parse(format!("bad {TRUNCATION_ENV} value '{value}'"))),
        Err(_) => Err(Error::Parse(format!(
            "no truncation given: pass -N or set {TRUNCATION_ENV}"
        ))),
    }
}

fn parse_shard(spec: &Option<String>, format: Format) -> Result<Option<(usize, usize)>, Error> {
    let Some(spec) = spec else { return Ok(None) };
    if format != Format::Text {
        return Err(Error::Precondition(
            "--shard applies to --format=text output only".into(),
        ));
    }
    let (i, k) = spec
        .split_once('/')
        .ok_or_else(|| Error::Parse(format!("shard spec '{spec}' is not 'index/count'")))?;
    let index: usize = i
        .parse()
        .map_err(|_| Error::Parse(format!("bad shard index '{i}'")))?;
    let count: usize = k
        .parse()
        .map_err(|_| Error::Parse(format!("bad shard count '{k}'")))?;
    if count == 0 || index >= count {
        return Err(Error::Parse(format!("shard '{spec}' out of range")));
    }
    Ok(Some((index, count)))
}

/// Contiguous block `index` of `count` over the lines of `text`; the blocks
/// concatenate to the full text.
fn shard_lines(text: &str, shard: Option<(usize, usize)>) -> String {
    let Some((index, count)) = shard else {
        return text.to_string();
    };
    let lines: Vec<&str> = text.lines().collect();
    let total = lines.len();
    let start = total * index / count;
    let end = total * (index + 1) / count;
    lines[start..end].iter().map(|l| format!("{l}\n")).collect()
}

fn parse_profile(n: u32, text: &str) -> Result<Vec<i64>, Error> {
    let parts: Vec<i64> = text
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad profile entry '{x}'")))
        })
        .collect::<Result<_, _>>()?;
    if parts.len() != n as usize {
        return Err(Error::Parse(format!(
            "profile '{text}' has {} entries, expected {n}",
            parts.len()
        )));
    }
    Ok(parts)
}

/// Inline compact form, inline JSON, or `@path` to a JSON file.
fn parse_multipartition(n: u32, text: &str) -> Result<ColoredMultipartition, Error> {
    let owned;
    let text = if let Some(path) = text.strip_prefix('@') {
        owned = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read '{path}': {e}")))?;
        owned.as_str()
    } else {
        text
    };
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("bad multipartition JSON: {e}")))
    } else {
        ColoredMultipartition::parse_compact(n, text)
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Character {
            n,
            weight,
            truncation,
            format,
            shard,
        } => {
            let truncation = truncation_or_env(truncation)?;
            let shard = parse_shard(&shard.shard, format)?;
            let weight = AffineWeight::parse(n, &weight)?;
            let table = character(&weight, truncation)?;
            // Order by principal depth below Λ (δ-degree), then by weight.
            let mut rows: Vec<(&AffineWeight, &u64)> = table.iter().collect();
            rows.sort_by_key(|(w, _)| (-w.delta_coeff(), (*w).clone()));
            match format {
                Format::Text => {
                    let mut out = String::new();
                    for (w, mult) in rows {
                        out.push_str(&format!("{w} : {mult}\n"));
                    }
                    print!("{}", shard_lines(&out, shard));
                }
                Format::Json => {
                    let map: BTreeMap<String, u64> =
                        table.iter().map(|(w, &m)| (w.to_string(), m)).collect();
                    let doc = serde_json::json!({
                        "n": n,
                        "weight": weight.to_string(),
                        "truncation": truncation,
                        "multiplicities": map,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
                }
                Format::Dot | Format::Diagram => {
                    return Err(Error::Precondition(
                        "character output is text or json".into(),
                    ))
                }
            }
        }
        Command::Branching {
            n,
            lambda_prime,
            lambda_second,
            lambda,
            truncation,
            method,
            format,
        } => {
            let truncation = truncation_or_env(truncation)? as usize;
            let lp = AffineWeight::parse(n, &lambda_prime)?;
            let ls = AffineWeight::parse(n, &lambda_second)?;
            let lam = AffineWeight::parse(n, &lambda)?;
            let method = match method {
                MethodArg::Multipartitions => BranchingMethod::Multipartitions,
                MethodArg::Paths => BranchingMethod::Paths,
                MethodArg::Theta => BranchingMethod::Theta,
                MethodArg::All => BranchingMethod::All,
            };
            let series = branching_series(&lp, &ls, &lam, truncation, method)?;
            match format {
                Format::Text => println!("{series}"),
                Format::Json => {
                    let doc = serde_json::json!({
                        "n": n,
                        "lambda_prime": lp.to_string(),
                        "lambda_second": ls.to_string(),
                        "lambda": lam.to_string(),
                        "series": series.to_json(),
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
                }
                Format::Dot | Format::Diagram => {
                    return Err(Error::Precondition(
                        "branching output is text or json".into(),
                    ))
                }
            }
        }
        Command::Js {
            n,
            i,
            j,
            m,
            truncation,
            labels,
            format,
            shard,
        } => {
            let shard = parse_shard(&shard.shard, format)?;
            let i_profile = parse_profile(n, &i)?;
            match (m, truncation) {
                (Some(m), None) => {
                    let modules = match &j {
                        Some(j) => js_modules(n, &i_profile, &parse_profile(n, j)?, m)?,
                        None => irreducible_restriction(n, &i_profile, m)?,
                    };
                    let with_m = labels != LabelsArg::Y;
                    let (y_graph, m_graph) = if with_m {
                        let w = profile_weight(n, &i_profile)?;
                        (
                            Some(CrystalGraph::build_y(&w, m)?),
                            Some(CrystalGraph::build_m(&w, m)?),
                        )
                    } else {
                        (None, None)
                    };
                    let mut lines = Vec::new();
                    let mut json_rows = Vec::new();
                    for label in &modules {
                        let m_label = match (&y_graph, &m_graph) {
                            (Some(y), Some(mg)) => Some(relabel(y, mg, label)?),
                            _ => None,
                        };
                        match labels {
                            LabelsArg::Y => {
                                lines.push(label.to_compact());
                                json_rows.push(serde_json::json!({"y": label}));
                            }
                            LabelsArg::M => {
                                let ml = m_label.expect("built");
                                lines.push(ml.to_compact());
                                json_rows.push(serde_json::json!({"m": ml}));
                            }
                            LabelsArg::Both => {
                                let ml = m_label.expect("built");
                                lines
                                    .push(format!("{} -> {}", label.to_compact(), ml.to_compact()));
                                json_rows.push(serde_json::json!({"y": label, "m": ml}));
                            }
                        }
                    }
                    match format {
                        Format::Text => {
                            let text: String = lines.iter().map(|l| format!("{l}\n")).collect();
                            print!("{}", shard_lines(&text, shard));
                        }
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&json_rows).expect("json")
                        ),
                        Format::Dot | Format::Diagram => {
                            return Err(Error::Precondition(
                                "js output is text or json".into(),
                            ))
                        }
                    }
                }
                (None, trunc) => {
                    let truncation = truncation_or_env(trunc)? as usize;
                    let j = j.ok_or_else(|| {
                        Error::Parse("the generating function needs an explicit -j".into())
                    })?;
                    let series =
                        js_generating_function(n, &i_profile, &parse_profile(n, &j)?, truncation)?;
                    match format {
                        Format::Text => println!("{series}"),
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&series.to_json()).expect("json")
                        ),
                        Format::Dot | Format::Diagram => {
                            return Err(Error::Precondition(
                                "js output is text or json".into(),
                            ))
                        }
                    }
                }
                (Some(_), Some(_)) => {
                    return Err(Error::Parse("pass either -m or -N, not both".into()))
                }
            }
        }
        Command::Sharp {
            n,
            multipartition,
            lambda_prime,
            format,
        } => {
            let mp = parse_multipartition(n, &multipartition)?;
            let lp = AffineWeight::parse(n, &lambda_prime)?;
            let image = sharp_multipartition(&mp, &lp)?;
            match format {
                Format::Text => println!("{}", image.to_compact()),
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&image).expect("json"))
                }
                Format::Diagram => print!("{}", image.diagram()),
                Format::Dot => return Err(Error::Precondition("sharp has no dot output".into())),
            }
        }
        Command::Crystal {
            n,
            weight,
            truncation,
            labels,
            format,
        } => {
            let truncation = truncation_or_env(truncation)?;
            let weight = AffineWeight::parse(n, &weight)?;
            let graph = match labels {
                LabelsArg::Y => CrystalGraph::build_y(&weight, truncation)?,
                LabelsArg::M => CrystalGraph::build_m(&weight, truncation)?,
                LabelsArg::Both => {
                    return Err(Error::Precondition(
                        "crystal output uses one labelling at a time".into(),
                    ))
                }
            };
            match format {
                Format::Dot => print!("{}", graph.to_dot()),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&graph.to_json()).expect("json")
                ),
                Format::Text => {
                    println!("vertices by degree: {:?}", graph.counts_by_degree());
                    for v in graph.vertices() {
                        println!("{}", v.to_compact());
                    }
                }
                Format::Diagram => {
                    return Err(Error::Precondition(
                        "crystal output is text, json or dot".into(),
                    ))
                }
            }
        }
        Command::HighestLift { n, path, format } => {
            let p = LambdaPath::parse(n, &path)?;
            let lift = p.highest_lift()?;
            match format {
                Format::Text => println!("{}", lift.to_compact()),
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&lift).expect("json"))
                }
                Format::Diagram => print!("{}", lift.diagram()),
                Format::Dot => {
                    return Err(Error::Precondition("highest-lift has no dot output".into()))
                }
            }
        }
    }
    Ok(())
}
