//! `cstor`: file-driven front end to `cstor-core`.
//!
//! Every subcommand prints one JSON document. Exit status is 0 on success,
//! 1 when the computation rejects its input on mathematical grounds and 2
//! for usage errors and unreadable or malformed files.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cstor_core::json::{self, JsonSyntaxError};
use cstor_core::partition::REPORT_VERSION;
use cstor_core::{
    bw_partition_torus, compare, integral_homology, presentation_complex, seifert_presentation, specialize,
    torsion, torsion_choice_independence_check, BasedChainComplex, HomologyBasis, IntegerChainComplex,
    SeifertData,
};
use serde_json::{json, Value};

/// Version of the JSON formats read and written by this tool.
const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "cstor",
    about = "Exact torsion and Chern-Simons exponent computations",
    disable_version_flag = true
)]
struct Cli {
    /// Write the result to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Print schema and tool versions.
    #[arg(long)]
    version: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Smith normal form U·A·V = D of an integer matrix.
    Snf { matrix: PathBuf },
    /// Betti numbers, homology representatives and, for integral input, integral homology.
    Homology { complex: PathBuf },
    /// Reidemeister torsion of a based complex.
    Torsion {
        complex: PathBuf,
        #[arg(long, value_name = "FILE")]
        homology_basis: Option<PathBuf>,
        /// Recompute with N random re-choices of bases and lifts.
        #[arg(long, value_name = "N")]
        check_independence: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Abelianization matrix, its Smith form and H_1 of a presentation.
    Abelianize { presentation: PathBuf },
    /// Fundamental group data of the degree-n circle bundle over a genus-g surface.
    Seifert {
        #[arg(long)]
        genus: usize,
        #[arg(long, allow_negative_numbers = true)]
        euler: i64,
        #[arg(long, value_enum, default_value_t = Emit::Presentation)]
        emit: Emit,
    },
    /// Presentation complex twisted by a representation.
    Twist {
        presentation: PathBuf,
        #[arg(long, value_name = "FILE")]
        rep: PathBuf,
        /// Also compute torsion, using canonical homology representatives.
        #[arg(long)]
        torsion: bool,
    },
    /// Localization integral on the torus component at level k.
    Localize {
        #[arg(long)]
        genus: usize,
        #[arg(long, allow_negative_numbers = true)]
        level: i64,
        /// Euler degree; only the phase depends on it.
        #[arg(long, allow_negative_numbers = true, default_value_t = 1)]
        euler: i64,
    },
    /// Compare the torsion and localization exponents of k.
    Compare {
        #[arg(long)]
        genus: usize,
        #[arg(long, allow_negative_numbers = true)]
        euler: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Presentation,
    Homology,
    Report,
}

/// A failure together with its exit status and structured description.
struct Failure {
    code: u8,
    body: Value,
}

impl Failure {
    fn usage(kind: &str, message: impl Into<String>) -> Self {
        Failure { code: 2, body: json!({ "kind": kind, "message": message.into() }) }
    }

    fn syntax(path: &Path, e: &JsonSyntaxError) -> Self {
        Failure {
            code: 2,
            body: json!({
                "kind": "JsonSyntax",
                "message": e.to_string(),
                "file": path.display().to_string(),
                "offset": e.offset,
                "line": e.line,
                "column": e.column,
            }),
        }
    }
}

impl From<cstor_core::Error> for Failure {
    fn from(e: cstor_core::Error) -> Self {
        Failure {
            code: if e.is_parse() { 2 } else { 1 },
            body: json!({ "kind": e.kind(), "message": e.to_string() }),
        }
    }
}

type Outcome = Result<Value, Failure>;

fn read_json(path: &Path) -> Outcome {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage("Io", format!("cannot read {}: {e}", path.display())))?;
    json::parse_text(&text).map_err(|e| Failure::syntax(path, &e))
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Snf { matrix } => {
            let a = json::integer_matrix_from_json(&read_json(&matrix)?)?;
            Ok(json::snf_to_json(&a.smith_normal_form()))
        }
        Command::Homology { complex } => {
            let c = json::complex_from_json(&read_json(&complex)?)?;
            homology(&c)
        }
        Command::Torsion { complex, homology_basis, check_independence, seed } => {
            let c = json::complex_from_json(&read_json(&complex)?)?;
            let h = match homology_basis {
                Some(p) => Some(json::homology_basis_from_json(&read_json(&p)?)?),
                None => None,
            };
            let t = match check_independence {
                Some(n) => torsion_choice_independence_check(&c, h.as_ref(), n, seed)?,
                None => torsion(&c, h.as_ref())?,
            };
            let mut out = json::torsion_to_json(&t);
            if let Some(n) = check_independence {
                out["independence_check"] = json!({ "trials": n, "seed": seed, "agreed": true });
            }
            Ok(out)
        }
        Command::Abelianize { presentation } => {
            let p = json::presentation_from_json(&read_json(&presentation)?)?;
            let m = p.abelianization_matrix();
            Ok(json!({
                "abelianization_matrix": json::integer_matrix_to_json(&m),
                "snf": json::snf_to_json(&m.smith_normal_form()),
                "first_homology": json::abelian_group_to_json(&p.first_homology()),
                "dim_H1_real": p.dim_h1_real(),
            }))
        }
        Command::Seifert { genus, euler, emit } => {
            let p = seifert_presentation(genus, euler);
            match emit {
                Emit::Presentation => Ok(json::presentation_to_json(&p)),
                Emit::Homology => Ok(json!({
                    "first_homology": json::abelian_group_to_json(&p.first_homology()),
                    "dim_H1_real": p.dim_h1_real(),
                })),
                Emit::Report => Ok(json::report_to_json(&compare(SeifertData::new(genus, euler))?)),
            }
        }
        Command::Twist { presentation, rep, torsion: with_torsion } => {
            let p = json::presentation_from_json(&read_json(&presentation)?)?;
            let rho = json::representation_from_json(&p, &read_json(&rep)?)?;
            let gr = presentation_complex(&p);
            let c = specialize(&gr, &rho)?;
            let mut out = json!({
                "group_ring_complex": json::group_ring_complex_to_json(&gr),
                "complex": json::complex_to_json(&c),
                "betti": c.betti_numbers(),
            });
            if with_torsion {
                let h = HomologyBasis::compute(&c);
                out["torsion"] = json::torsion_to_json(&torsion(&c, Some(&h))?);
                out["homology_basis"] = json::homology_basis_to_json(&h);
            }
            Ok(out)
        }
        Command::Localize { genus, level, euler } => {
            Ok(json::bw_partition_to_json(&bw_partition_torus(genus, euler, level)?))
        }
        Command::Compare { genus, euler } => {
            Ok(json::report_to_json(&compare(SeifertData::new(genus, euler))?))
        }
    }
}

fn homology(c: &BasedChainComplex) -> Outcome {
    let h = HomologyBasis::compute(c);
    let mut out = json!({
        "betti": c.betti_numbers(),
        "euler_characteristic": c.euler_characteristic(),
        "acyclic": c.is_acyclic(),
        "homology_basis": json::homology_basis_to_json(&h),
    });
    let integral: Option<Vec<_>> = c
        .boundaries()
        .iter()
        .map(|m| m.entries().iter().all(|x| x.is_integer()).then(|| m.map(|x| x.to_integer())))
        .collect();
    if let Some(boundaries) = integral {
        let ic = IntegerChainComplex { degrees: c.degrees().to_vec(), boundaries };
        let groups = integral_homology(&ic)?;
        out["integral_homology"] = Value::Array(groups.iter().map(json::abelian_group_to_json).collect());
    }
    Ok(out)
}

fn emit(out: Option<&Path>, v: &Value) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::usage("Io", format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::usage("Io", format!("cannot write to stdout: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let result = if cli.version {
        Ok(json!({
            "tool": "cstor",
            "tool_version": env!("CARGO_PKG_VERSION"),
            "schema_version": SCHEMA_VERSION,
            "report_version": REPORT_VERSION,
        }))
    } else {
        match cli.command {
            Some(command) => run(command),
            None => Err(Failure::usage("Usage", "a subcommand is required; see --help")),
        }
    };
    match result.and_then(|v| emit(cli.out.as_deref(), &v)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", json!({ "error": f.body }));
            ExitCode::from(f.code)
        }
    }
}
