mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use homog_core::contact::standard_acs;
use homog_core::exactalg::{Rational, Var};
use homog_core::fixture::{FixtureSource, StructureFile};
use homog_core::homog::{as_check, tv_classify, HomogStructure};
use homog_core::liealg::{catalog, sasakian_space_form, CatalogEntry, CatalogParams};
use homog_core::par::Strategy;
use homog_core::params::Params;
use homog_core::suite::{run_suite, Suite};
use homog_core::sweep::{parse_grid, sweep};
use homog_core::{connect::okumura_tensor, exactalg::ParamScalar, Error, Result};
use report::{Format, ReportDocument};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "homog", version, about = "Exact verification of homogeneous contact Riemannian structures")]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inspect the built-in Lie algebras.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = ["paper", "contact", "okumura", "sigma", "all"])]
        suite: String,
        /// `name=value` pairs; `value` is a rational or `sym`.
        #[arg(long)]
        param: Vec<String>,
    },
    /// Ambrose-Singer check and Tricerri-Vanhecke class of a structure.
    Classify {
        /// `okumura` or `file:<path>`.
        #[arg(long)]
        structure: String,
        /// Okumura parameter, a rational or `sym`.
        #[arg(long, default_value = "sym", allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        param: Vec<String>,
    },
    /// Instantiated checks of the A^r family over a (c, r) grid.
    Sweep {
        #[arg(long, allow_hyphen_values = true)]
        r_grid: String,
        #[arg(long, allow_hyphen_values = true)]
        c_grid: String,
        /// Keep only points with c = -3 - alpha^2.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long)]
        out: PathBuf,
        /// Evaluate grid points one at a time.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Show {
        name: String,
        #[arg(long)]
        param: Vec<String>,
    },
}

fn params_from(items: &[String]) -> Result<Params> {
    let mut p = Params::new();
    for item in items {
        p.extend_from(item)?;
    }
    Ok(p)
}

fn value(p: &Params, v: Var) -> Option<ParamScalar> {
    p.get(v).cloned().map(ParamScalar::from_rational)
}

fn rational(s: &str) -> Result<Rational> {
    s.trim().parse().map_err(|_| Error::Input(format!("`{s}` is not a rational")))
}

type Outcome = Result<(Value, bool)>;

fn cmd_catalog(action: &CatalogAction) -> Outcome {
    match action {
        CatalogAction::List => {
            let entries: Vec<Value> = CatalogEntry::ALL
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name(),
                        "description": e.description(),
                        "parameters": e.parameters(),
                        "sasakian": e.is_sasakian(),
                    })
                })
                .collect();
            Ok((json!({"entries": entries}), true))
        }
        CatalogAction::Show { name, param } => {
            let p = params_from(param)?;
            p.assignment()?;
            let params = CatalogParams { c: value(&p, Var::C), alpha: value(&p, Var::Alpha) };
            let a = catalog(name, &params)?;
            let mut doc = json!({"algebra": a.to_json()});
            if let Ok(acs) = standard_acs(&a) {
                doc["contact_structure"] = acs.to_json();
            }
            Ok((doc, true))
        }
    }
}

fn cmd_verify(suite: &str, param: &[String]) -> Outcome {
    let suite: Suite = suite.parse()?;
    let report = run_suite(suite, &params_from(param)?, &FixtureSource::from_env())?;
    Ok((report.to_json(), report.passed()))
}

fn classify(s: &HomogStructure) -> Outcome {
    let acs = standard_acs(s.algebra()).ok();
    let as_report = as_check(s, acs.as_ref())?;
    let class = tv_classify(s)?;
    let doc = json!({
        "algebra": s.algebra().name(),
        "structure": s.to_json(),
        "ambrose_singer": as_report.passed(),
        "ambrose_singer_checks": as_report.to_json(),
        "tv_class": class.class.label(),
        "witness": class.witness.as_ref().map(|w| w.iter().map(ToString::to_string).collect::<Vec<_>>()),
        "classification": class.to_json(),
    });
    Ok((doc, true))
}

fn cmd_classify(structure: &str, r: &str, param: &[String]) -> Outcome {
    if structure == "okumura" {
        let mut p = params_from(param)?;
        p.extend_from(&format!("r={r}"))?;
        p.assignment()?;
        let c = value(&p, Var::C).unwrap_or_else(ParamScalar::c);
        let r = value(&p, Var::R).unwrap_or_else(ParamScalar::r);
        let a = sasakian_space_form(&c)?;
        let acs = standard_acs(&a)?;
        classify(&HomogStructure::new(&a, okumura_tensor(&acs, &r)?)?)
    } else if let Some(path) = structure.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
        classify(&StructureFile::from_json(&text)?.structure()?)
    } else {
        Err(Error::Input(format!("unknown structure `{structure}`; use `okumura` or `file:<path>`")))
    }
}

fn cmd_sweep(r_grid: &str, c_grid: &str, alpha: Option<&str>, out: &PathBuf, sequential: bool) -> Outcome {
    let rs = parse_grid(r_grid)?;
    let cs = parse_grid(c_grid)?;
    let alpha = alpha.map(rational).transpose()?;
    let strategy = if sequential { Strategy::Sequential } else { Strategy::default() };
    let report = sweep(&cs, &rs, alpha.as_ref(), strategy)?;
    let doc = report.to_json();
    let text = serde_json::to_string_pretty(&doc).expect("report serializes");
    std::fs::write(out, text + "\n").map_err(|e| Error::Io(format!("{}: {e}", out.display())))?;
    let summary = json!({
        "out": out.display().to_string(),
        "total": doc["total"],
        "passed": doc["passed"],
        "failed": doc["failed"],
        "skipped": doc["skipped"],
        "skip_list": doc["skip_list"],
    });
    Ok((summary, report.passed()))
}

fn echo_params(command: &Command) -> Value {
    let items: &[String] = match command {
        Command::Verify { param, .. } | Command::Classify { param, .. } => param,
        Command::Catalog { action: CatalogAction::Show { param, .. } } => param,
        _ => &[],
    };
    params_from(items).map(|p| p.to_json()).unwrap_or_else(|_| json!({}))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let name = match &cli.command {
        Command::Catalog { .. } => "catalog",
        Command::Verify { .. } => "verify",
        Command::Classify { .. } => "classify",
        Command::Sweep { .. } => "sweep",
    };
    let doc = ReportDocument::new(name, args, echo_params(&cli.command));
    let outcome = match &cli.command {
        Command::Catalog { action } => cmd_catalog(action),
        Command::Verify { suite, param } => cmd_verify(suite, param),
        Command::Classify { structure, r, param } => cmd_classify(structure, r, param),
        Command::Sweep { r_grid, c_grid, alpha, out, sequential } => {
            cmd_sweep(r_grid, c_grid, alpha.as_deref(), out, *sequential)
        }
    };
    let doc = match outcome {
        Ok((result, passed)) => doc.finish(result, passed),
        Err(e) => doc.failed(&e),
    };
    let _ = writeln!(std::io::stdout(), "{}", doc.render(cli.format));
    ExitCode::from(doc.exit_code as u8)
}
