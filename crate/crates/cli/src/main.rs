use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use nilrep_core::chars::character_table;
use nilrep_core::unitgroup::{UnitGroup, DEFAULT_GROUP_CAP};
use nilrep_gutkin::{gutkin_decompose_with, verify_gutkin_all_with, Cache, GutkinError};
use nilrep_identities::halasi_explore_with_cap;

use nilrep_cli::catalog::{builtin, field_of_order, resolve, CatalogEntry};
use nilrep_cli::suites::{self, Suite};
use nilrep_cli::CliError;

#[derive(Parser)]
#[command(name = "nilrep", version, about = "Characters of unit groups of finite nilpotent algebras")]
struct Cli {
    /// Largest group order the tool will enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_GROUP_CAP)]
    cap: u128,
    /// Directory for output files; stdout only when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for sampling random functionals.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Disable every code path through the monomial construction.
    #[arg(long, global = true)]
    no_gutkin: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in algebras and any given algebra files.
    Catalog { files: Vec<String> },
    /// Print an algebra in the file format.
    Show { target: String },
    /// Compute the character table.
    Chartable { target: String },
    /// Write irreducible characters as induced from linear characters.
    Decompose {
        target: String,
        /// Index into the character table; all characters when absent.
        #[arg(long)]
        character: Option<usize>,
    },
    /// Run a verification suite.
    Verify {
        target: String,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Compare (1+J,1+J) meet 1+J^k with (1+J,1+J^(k-1)) in a free algebra.
    HalasiExplore {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        gens: usize,
        #[arg(long)]
        class: usize,
        #[arg(long)]
        k: usize,
    },
}

struct Output {
    text: String,
    passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn file_stem(name: &str) -> String {
    let s: String = name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    s.trim_matches('_').to_string()
}

fn write_out(cli: &Cli, name: &str, contents: &str) -> Result<(), CliError> {
    let Some(dir) = &cli.out else { return Ok(()) };
    std::fs::create_dir_all(dir).map_err(|e| CliError::Usage(format!("{}: {e}", dir.display())))?;
    let path = dir.join(name);
    std::fs::write(&path, contents).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn group(cli: &Cli, entry: &CatalogEntry) -> Result<UnitGroup, CliError> {
    Ok(UnitGroup::with_cap(entry.build()?, cli.cap)?)
}

fn refuse_without_gutkin(cli: &Cli, what: &str) -> Result<(), CliError> {
    if cli.no_gutkin {
        return Err(CliError::Usage(format!("{what} needs the monomial construction, disabled by --no-gutkin")));
    }
    Ok(())
}

#[derive(Serialize)]
struct Listing {
    name: String,
    source: String,
    q: u32,
    dim: usize,
    class: usize,
    order: u128,
}

fn catalog(cli: &Cli, files: &[String]) -> Result<Output, CliError> {
    let mut entries = builtin();
    for f in files {
        entries.push(resolve(f)?);
    }
    let mut rows = Vec::new();
    for e in &entries {
        let alg = e.build()?;
        let source = match &e.constructor {
            nilrep_cli::catalog::Constructor::File { path } => path.display().to_string(),
            _ => "built-in".to_string(),
        };
        rows.push(Listing { name: e.name.clone(), source, q: alg.field().order(), dim: alg.dim(), class: alg.class(), order: alg.size() });
    }
    let text = match cli.format {
        Format::Json => pretty(&rows),
        Format::Csv => {
            let mut s = String::from("name,source,q,dim,class,order\n");
            for r in &rows {
                s += &format!("\"{}\",\"{}\",{},{},{},{}\n", r.name, r.source, r.q, r.dim, r.class, r.order);
            }
            s
        }
    };
    Ok(Output::ok(text))
}

fn show(cli: &Cli, target: &str) -> Result<Output, CliError> {
    let alg = resolve(target)?.build()?;
    let text = match cli.format {
        Format::Json => alg.to_json(),
        Format::Csv => {
            let file = alg.to_file();
            let mut s = String::from("i,j,k,c\n");
            for (i, j, k, c) in &file.sc {
                s += &format!("{i},{j},{k},{c}\n");
            }
            s
        }
    };
    Ok(Output::ok(text))
}

fn chartable(cli: &Cli, target: &str) -> Result<Output, CliError> {
    let entry = resolve(target)?;
    let g = group(cli, &entry)?;
    let t = character_table(&g)?;
    if let Err(e) = t.check_orthogonality(&g) {
        return Err(CliError::Falsified(format!("orthogonality fails: {e}")));
    }
    let json = t.to_json(&g);
    let csv = t.to_csv();
    let stem = file_stem(&entry.name);
    write_out(cli, &format!("{stem}.table.json"), &json)?;
    write_out(cli, &format!("{stem}.table.csv"), &csv)?;
    Ok(Output::ok(match cli.format {
        Format::Json => json,
        Format::Csv => csv,
    }))
}

fn decompose(cli: &Cli, target: &str, character: Option<usize>) -> Result<Output, CliError> {
    refuse_without_gutkin(cli, "decompose")?;
    let entry = resolve(target)?;
    let g = group(cli, &entry)?;
    let cache = Cache::new();
    let result = match character {
        Some(i) => {
            let t = cache.table(&g)?;
            let chi = t
                .characters()
                .get(i)
                .ok_or_else(|| CliError::Usage(format!("character {i} out of range: the table has {}", t.len())))?;
            gutkin_decompose_with(&cache, &g, chi).map(|d| d.to_json())
        }
        None => verify_gutkin_all_with(&cache, &g).map(|r| r.to_json()),
    };
    let out = match result {
        Ok(text) => Output::ok(text),
        Err(GutkinError::VerificationFailed { stage, witness, transcript }) => Output {
            text: pretty(&json!({ "target": entry.name, "stage": stage, "witness": witness, "transcript": transcript })),
            passed: false,
        },
        Err(GutkinError::Core(e)) => return Err(e.into()),
    };
    write_out(cli, &format!("{}.decompose.json", file_stem(&entry.name)), &out.text)?;
    Ok(out)
}

fn verify(cli: &Cli, target: &str, suite: Suite) -> Result<Output, CliError> {
    if suite.needs_gutkin() {
        refuse_without_gutkin(cli, &format!("suite {suite:?}"))?;
    }
    let entry = resolve(target)?;
    let g = group(cli, &entry)?;
    let report = suites::run(&entry, &g, suite, cli.seed, !cli.no_gutkin)?;
    let json = pretty(&report);
    let stem = file_stem(&entry.name);
    let suite_name = serde_json::to_value(suite).expect("serializes");
    write_out(cli, &format!("{stem}.{}.json", suite_name.as_str().unwrap_or("suite")), &json)?;
    let text = match cli.format {
        Format::Json => json,
        Format::Csv => {
            let mut s = String::from("check,passed\n");
            for c in &report.checks {
                s += &format!("\"{}\",{}\n", c.name, c.passed);
            }
            s
        }
    };
    Ok(Output { text, passed: report.passed })
}

fn halasi(cli: &Cli, q: u32, gens: usize, class: usize, k: usize) -> Result<Output, CliError> {
    let field = field_of_order(q)?;
    let report = halasi_explore_with_cap(&field, gens, class, k, cli.cap)?;
    let text = pretty(&report);
    write_out(cli, &format!("halasi_{q}_{gens}_{class}_{k}.json"), &text)?;
    // Only the containment is a theorem; equality is reported, not asserted.
    Ok(Output { text, passed: report.contains })
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Catalog { files } => catalog(cli, files),
        Command::Show { target } => show(cli, target),
        Command::Chartable { target } => chartable(cli, target),
        Command::Decompose { target, character } => decompose(cli, target, *character),
        Command::Verify { target, suite } => verify(cli, target, *suite),
        Command::HalasiExplore { q, gens, class, k } => halasi(cli, *q, *gens, *class, *k),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            // A closed pipe downstream is not our failure.
            let _ = writeln!(std::io::stdout(), "{}", out.text.trim_end());
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("nilrep: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
