//! File-based front end: parse a structure definition, dispatch a
//! verification pipeline, and emit the report.
//!
//! Exit codes: 0 all executed sections pass, 1 at least one structural
//! failure, 2 input error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use duocat::defs::load_definition;
use duocat::field::Field;
use duocat::runner::{run, Command};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "duocat",
    version,
    about = "Exact verifier for weak bimonoids in duoidal categories"
)]
struct Cli {
    /// check-category | check-bimonoid | bases | hopf | all
    command: String,

    /// Structure-definition file (JSON)
    #[arg(long)]
    input: PathBuf,

    /// Optional probe-override file: a JSON array of object expressions
    #[arg(long)]
    probes: Option<PathBuf>,

    /// Report format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// Override the definition's field: Q or gf:<p>
    #[arg(long)]
    field: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match real_main(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn real_main(cli: Cli) -> Result<u8, String> {
    let command = Command::parse(&cli.command)
        .ok_or_else(|| format!("unknown command '{}'", cli.command))?;
    let field = match cli.field.as_deref() {
        None => None,
        Some("Q") => Some(Field::Q),
        Some(s) => {
            let p = s
                .strip_prefix("gf:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| format!("bad field '{s}' (expected Q or gf:<p>)"))?;
            Some(Field::Fp(p))
        }
    };
    let bytes = std::fs::read(&cli.input)
        .map_err(|e| format!("cannot read {}: {e}", cli.input.display()))?;
    let mut def = load_definition(&cli.input, field).map_err(|e| e.to_string())?;
    if let Some(probe_path) = &cli.probes {
        let text = std::fs::read_to_string(probe_path)
            .map_err(|e| format!("cannot read {}: {e}", probe_path.display()))?;
        let v: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| format!("probes: {e}"))?;
        let items = v
            .as_array()
            .ok_or_else(|| "probes file must be a JSON array".to_string())?;
        let probes = items
            .iter()
            .map(duocat::expr::ObjExpr::from_json)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        def.probes = Some(probes);
    }
    let (code, report) = run(command, &def, &bytes);
    match cli.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report.to_json()).expect("serializable report")
        ),
    }
    Ok(code as u8)
}
