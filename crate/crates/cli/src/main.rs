//! `torgen`: fixed-point localization of genera from the command line.

mod builtin;

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use equigenus::fgl::{catalog, hurewicz, GenusSpec};
use equigenus::localize::{
    check_conner_floyd, genus_value, pairing_obstruction, phi, rigidity_check, search_pairings,
    special_vanishing_check, CfReport, LocalizeError, Mode, PairingReport,
};
use equigenus::quasitoric::{
    parse_manifold, refine, signs_and_weights, special_check, validate_pair, FixedPointData,
    Manifold, QuasitoricError, QuasitoricPair,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Quasitoric(#[from] QuasitoricError),
    #[error(transparent)]
    Localize(#[from] LocalizeError),
}

#[derive(Parser)]
#[command(name = "torgen", version, about = "Equivariant genera of torus manifolds by localization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Universal,
    Linear,
}

#[derive(clap::Args)]
struct Job {
    /// Manifold file (JSON) or builtin identifier such as `builtin:cp2:eps=--`.
    #[arg(long)]
    input: String,
    /// Genus name: augmentation, hurewicz, todd, cn, abel, t2, signature,
    /// elliptic or krichever.
    #[arg(long, default_value = "hurewicz")]
    genus: String,
    /// Number of generators b1, b2, … of the hurewicz genus (default: order + n).
    #[arg(long)]
    genus_order: Option<u32>,
    #[arg(long, value_enum, default_value = "linear")]
    mode: ModeArg,
    /// Truncation order in the u-variables.
    #[arg(long, default_value_t = 6)]
    order: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Reverse the global orientation (negates every sign).
    #[arg(long)]
    flip_orientation: bool,
    /// Blocks of points for `pairing`, e.g. `1-4,2-3`.
    #[arg(long)]
    pairing: Option<String>,
    /// Try every perfect pairing in `pairing`.
    #[arg(long)]
    search_pairings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check a quasitoric pair and list every violation.
    Validate(Job),
    /// Signs and weights at the fixed points.
    FixedPoints(Job),
    /// The localized series Φ(u).
    Phi(Job),
    /// The genus of the manifold (cf_n).
    Genus(Job),
    /// Conner–Floyd relations cf_l = 0 for l < n.
    CheckCf(Job),
    /// Rigidity: cf_l = 0 for n < l ≤ n + order.
    CheckRigidity(Job),
    /// Vanishing of block sums of the augmentation genus.
    Pairing(Job),
    /// Column sums of Λ and the vanishing theorems for special pairs.
    SpecialCheck(Job),
    /// Builtin manifolds and datasets.
    ListBuiltins {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Text or JSON to print, and the exit code.
struct Output {
    body: String,
    code: u8,
}

impl Output {
    fn new(body: String, pass: bool) -> Self {
        Output {
            body,
            code: if pass { 0 } else { 2 },
        }
    }
}

fn load(input: &str) -> Result<Manifold, CliError> {
    let m = match input.strip_prefix("builtin:") {
        Some(id) => builtin::resolve(id)?,
        None => {
            let text = fs::read_to_string(input)
                .map_err(|e| CliError::Input(format!("cannot read {input}: {e}")))?;
            parse_manifold(&text).map_err(|e| CliError::Input(format!("{input}: {e}")))?
        }
    };
    Ok(match m {
        Manifold::Quasitoric(pair) if !pair.lambda.is_refined() => {
            // Auto-refine when the leading minor is unimodular; otherwise keep
            // the pair so validation reports the problem.
            match refine(&pair.polytope, &pair.lambda) {
                Ok(lambda) => Manifold::Quasitoric(QuasitoricPair { lambda, ..pair }),
                Err(_) => Manifold::Quasitoric(pair),
            }
        }
        m => m,
    })
}

fn fixed_points(m: &Manifold, flip: bool) -> Result<FixedPointData, CliError> {
    let fpd = match m {
        Manifold::Quasitoric(pair) => signs_and_weights(pair)?,
        Manifold::FixedPoints(f) => f.clone(),
    };
    Ok(if flip { fpd.flip_orientation() } else { fpd })
}

fn genus_spec(job: &Job, n: usize) -> Result<GenusSpec, CliError> {
    let order = job.order + n as u32 + 1;
    let spec = if job.genus == "hurewicz" {
        hurewicz(job.genus_order.unwrap_or(job.order + n as u32), order)
    } else {
        catalog(&job.genus, order)
    };
    spec.map_err(|e| CliError::Input(e.to_string()))
}

fn report_output(r: &CfReport, format: Format) -> Output {
    let body = match format {
        Format::Text => r.to_text(),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(r).expect("serializable")),
    };
    Output::new(body, r.pass)
}

fn parse_blocks(s: &str) -> Result<Vec<Vec<usize>>, CliError> {
    s.split(',')
        .map(|b| {
            b.split('-')
                .map(|i| {
                    i.trim()
                        .parse()
                        .map_err(|_| CliError::Input(format!("bad pairing block `{b}`")))
                })
                .collect()
        })
        .collect()
}

fn pairing_text(r: &PairingReport) -> String {
    let blocks: Vec<String> = r
        .blocks
        .iter()
        .map(|b| {
            let pts: Vec<String> = b.points.iter().map(|i| format!("x{i}")).collect();
            format!("{{{}}}: {}", pts.join(","), if b.vanishes { "vanishes" } else { "nonzero" })
        })
        .collect();
    format!("{}  => {}\n", blocks.join("  "), if r.vanishes { "vanishes" } else { "nonzero" })
}

fn list_builtins(format: Format) -> Output {
    let body = match format {
        Format::Text => {
            let mut s = format!("{:<40} {:>3} {:>3} {:>6}  description\n", "id", "n", "k", "points");
            for b in &builtin::BUILTINS {
                s.push_str(&format!(
                    "{:<40} {:>3} {:>3} {:>6}  {}\n",
                    b.id, b.n, b.k, b.points, b.description
                ));
            }
            s
        }
        Format::Json => {
            let rows: Vec<_> = builtin::BUILTINS
                .iter()
                .map(|b| json!({"id": b.id, "n": b.n, "k": b.k, "points": b.points, "description": b.description}))
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&rows).expect("serializable"))
        }
    };
    Output::new(body, true)
}

fn run(command: Command) -> Result<Output, CliError> {
    let job = match command {
        Command::ListBuiltins { format } => return Ok(list_builtins(format)),
        Command::Validate(ref j)
        | Command::FixedPoints(ref j)
        | Command::Phi(ref j)
        | Command::Genus(ref j)
        | Command::CheckCf(ref j)
        | Command::CheckRigidity(ref j)
        | Command::Pairing(ref j)
        | Command::SpecialCheck(ref j) => j,
    };
    let manifold = load(&job.input)?;
    let format = job.format;
    match &command {
        Command::Validate(_) => {
            let Manifold::Quasitoric(pair) = &manifold else {
                return Err(CliError::Input("validate needs a quasitoric pair".into()));
            };
            let r = validate_pair(pair);
            let body = match format {
                Format::Text if r.is_valid() => "valid\n".to_string(),
                Format::Text => r.violations.iter().map(|v| format!("violation: {v}\n")).collect(),
                Format::Json => format!(
                    "{}\n",
                    json!({"valid": r.is_valid(), "violations": r.violations})
                ),
            };
            return Ok(Output::new(body, r.is_valid()));
        }
        Command::SpecialCheck(_) => {
            let Manifold::Quasitoric(pair) = &manifold else {
                return Err(CliError::Input("special-check needs a quasitoric pair".into()));
            };
            if !special_check(&pair.lambda) {
                let body = match format {
                    Format::Text => "special: false\n".to_string(),
                    Format::Json => format!("{}\n", json!({"special": false, "pass": false})),
                };
                return Ok(Output::new(body, false));
            }
            let r = special_vanishing_check(pair, job.order)?;
            let hr = r.hurewicz_value.as_ref().map(|p| p.to_string());
            let body = match format {
                Format::Text => format!(
                    "special: true\nkrichever_value: {}\nkrichever_rigid: {}\nhurewicz_value: {}\npass: {}\n",
                    r.krichever_value,
                    r.krichever_rigid,
                    hr.as_deref().unwrap_or("not computed (n >= 5)"),
                    r.pass
                ),
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "special": true,
                        "krichever_value": r.krichever_value.to_string(),
                        "krichever_rigid": r.krichever_rigid,
                        "hurewicz_value": hr,
                        "pass": r.pass,
                    })
                ),
            };
            return Ok(Output::new(body, r.pass));
        }
        _ => {}
    }
    let fpd = fixed_points(&manifold, job.flip_orientation)?;
    let genus = || genus_spec(job, fpd.n());
    Ok(match command {
        Command::FixedPoints(_) => {
            let body = match format {
                Format::Text => fpd
                    .points()
                    .iter()
                    .map(|p| {
                        let ws: Vec<String> = p
                            .weights
                            .iter()
                            .map(|w| {
                                let c: Vec<String> =
                                    w.coefficients().iter().map(|x| x.to_string()).collect();
                                format!("({})", c.join(","))
                            })
                            .collect();
                        format!("{} sign={:+} weights={}\n", p.label, p.sign, ws.join(" "))
                    })
                    .collect(),
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&Manifold::FixedPoints(fpd.clone()).to_json())
                        .expect("serializable")
                ),
            };
            Output::new(body, true)
        }
        Command::Phi(_) => {
            let mode = match job.mode {
                ModeArg::Universal => Mode::Universal,
                ModeArg::Linear => Mode::Linear,
            };
            match phi(&fpd, &genus()?, mode, job.order) {
                Ok(s) => Output::new(
                    match format {
                        Format::Text => format!("{s}\n"),
                        Format::Json => format!(
                            "{}\n",
                            serde_json::to_string_pretty(&s.to_json()).expect("serializable")
                        ),
                    },
                    true,
                ),
                Err(e @ LocalizeError::NotDivisible { .. }) => Output::new(
                    match format {
                        Format::Text => format!("violation: {e}\n"),
                        Format::Json => format!("{}\n", json!({"pass": false, "error": e.to_string()})),
                    },
                    false,
                ),
                Err(e) => return Err(e.into()),
            }
        }
        Command::Genus(_) => match genus_value(&fpd, &genus()?) {
            Ok(v) => Output::new(
                match format {
                    Format::Text => format!("genus_value: {v}\n"),
                    Format::Json => format!("{}\n", json!({"genus_value": v.to_string(), "pass": true})),
                },
                true,
            ),
            Err(e @ LocalizeError::ConnerFloyd { .. }) => Output::new(
                match format {
                    Format::Text => format!("violation: {e}\n"),
                    Format::Json => format!("{}\n", json!({"genus_value": null, "pass": false, "error": e.to_string()})),
                },
                false,
            ),
            Err(e) => return Err(e.into()),
        },
        Command::CheckCf(_) => report_output(&check_conner_floyd(&fpd, &genus()?, job.order)?, format),
        Command::CheckRigidity(_) => {
            report_output(&rigidity_check(&fpd, &genus()?, job.order)?, format)
        }
        Command::Pairing(_) => {
            let reports = match (&job.pairing, job.search_pairings) {
                (Some(p), false) => vec![pairing_obstruction(&fpd, &parse_blocks(p)?)?],
                (None, true) => search_pairings(&fpd),
                _ => {
                    return Err(CliError::Input(
                        "pairing needs exactly one of --pairing or --search-pairings".into(),
                    ))
                }
            };
            let pass = reports.iter().any(|r| r.vanishes);
            let body = match format {
                Format::Text => reports.iter().map(pairing_text).collect(),
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&json!({"pairings": reports, "pass": pass}))
                        .expect("serializable")
                ),
            };
            Output::new(body, pass)
        }
        Command::Validate(_) | Command::SpecialCheck(_) | Command::ListBuiltins { .. } => {
            unreachable!("handled above")
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.body);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
