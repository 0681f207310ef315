use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fitbound::automorphism::{automorphism_from_map, parse_automorphism_text, AutomorphismText};
use fitbound::constructions::{DDomain, Psl2};
use fitbound::field::FiniteField;
use fitbound::frobid::{min_primitive_identity_degree, vandermonde_det};
use fitbound::group::io::load_group;
use fitbound::harness::search::{effective_bound, identity_search, SearchLimits};
use fitbound::harness::{run_catalog, Catalog, Format};
use fitbound::structure::{fitting_height, fitting_subgroup, soluble_radical};

#[derive(Parser)]
#[command(name = "fitbound", version, about = "Fitting height and radical bounds for automorphisms satisfying polynomial identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Verify every entry of a catalog and write a report.
    Verify {
        #[arg(long, conflicts_with = "builtin")]
        catalog: Option<PathBuf>,
        /// Use the embedded catalog (the default when no path is given).
        #[arg(long)]
        builtin: bool,
        /// Write the report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Leave per-entry timings out of the report.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print basic structure of a group file.
    Group {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        analyze: bool,
    },
    /// Build the group D(N, K) over GF(p^(2e)).
    Ddomain {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        e: u32,
        #[arg(long = "N", visible_alias = "n")]
        n: i64,
        #[arg(long)]
        check_axioms: bool,
    },
    /// Build PSL(2, q), optionally with a field automorphism.
    Psl2 {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        frobenius: Option<u32>,
    },
    /// Minimal degree of an additive identity of t -> t^p on GF(p^e).
    Frobid {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        max_degree: usize,
    },
    /// List primitive ordered identities of small degree.
    IdentitySearch {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        aut: PathBuf,
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        coeff_bound: i64,
    },
}

/// Bad input, reported with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, InputError> {
    match command {
        Command::Verify {
            catalog,
            builtin: _,
            report,
            format,
            no_timing,
        } => verify(catalog.as_deref(), report.as_deref(), format, !no_timing),
        Command::Group { file, analyze } => {
            let g = load_group(&file)?;
            println!("order: {}", g.order());
            println!("exponent: {}", g.exponent());
            println!("abelian: {}", g.is_abelian());
            if analyze {
                let soluble = g.whole().is_soluble();
                println!("soluble: {soluble}");
                if soluble {
                    println!("fitting height: {}", fitting_height(&g)?);
                }
                println!("soluble radical order: {}", soluble_radical(&g).order());
                println!("fitting subgroup order: {}", fitting_subgroup(&g).order());
            }
            Ok(0)
        }
        Command::Ddomain { p, e, n, check_axioms } => {
            let d = DDomain::new(p, e, n)?;
            println!("D(N={}, K=GF({}))", d.n_residue(), d.field().order());
            println!("order: {}", d.group().order());
            println!("projection surjective: {}", d.projection_surjective());
            println!("frobenius stable: {}", d.frobenius_stable());
            let phi = d.frobenius(1)?;
            println!("frobenius order: {}", phi.order());
            println!("frobenius fixed points: {}", phi.fixed_point_count());
            if check_axioms {
                match d.check_axioms() {
                    Ok(()) => println!("axioms: ok"),
                    Err(v) => {
                        println!("axioms: violated ({v:?})");
                        return Ok(1);
                    }
                }
            }
            Ok(0)
        }
        Command::Psl2 { q, frobenius } => {
            let g = Psl2::new(q)?;
            println!("PSL(2,{q})");
            println!("order: {} (formula {})", g.group().order(), Psl2::order_formula(q));
            if let Some(k) = frobenius {
                let phi = g.frobenius_action(k)?;
                println!("frobenius power: {k}");
                println!("frobenius order: {}", phi.order());
                println!("fixed points: {}", phi.fixed_point_count());
                println!("coprime: {}", phi.is_coprime());
            }
            Ok(0)
        }
        Command::Frobid { p, e, max_degree } => {
            let k = FiniteField::new(p, e)?;
            let found = min_primitive_identity_degree(&k, p, max_degree)?;
            println!("GF({}), t -> t^{p}", k.order());
            println!("minimal degree: {}", found.degree);
            println!("identity: {}", found.identity);
            for d in 1..=found.degree {
                let det = vandermonde_det(&k, p, d)?;
                println!("vandermonde d={d}: {}", if det.is_zero() { "zero" } else { "nonzero" });
            }
            Ok(0)
        }
        Command::IdentitySearch {
            group,
            aut,
            max_degree,
            coeff_bound,
        } => {
            let g = load_group(&group)?;
            let text = std::fs::read_to_string(&aut).map_err(|e| InputError(format!("{}: {e}", aut.display())))?;
            let phi = match parse_automorphism_text(&text)? {
                AutomorphismText::Map(pairs) => automorphism_from_map(&g, &pairs)?,
                AutomorphismText::Frobenius(_) => {
                    return Err(InputError("a frobenius automorphism needs a constructed group".into()))
                }
            };
            let result = identity_search(&phi, max_degree, coeff_bound, SearchLimits::default());
            println!(
                "coefficients in [-{0}, {0}] (requested {coeff_bound}), {1} vectors examined{2}",
                effective_bound(&phi, coeff_bound),
                result.examined,
                if result.partial { ", budget exhausted" } else { "" }
            );
            for f in &result.identities {
                println!("{f}");
            }
            Ok(0)
        }
    }
}

fn verify(catalog: Option<&Path>, report: Option<&Path>, format: FormatArg, timing: bool) -> Result<u8, InputError> {
    let (catalog, base_dir) = match catalog {
        Some(path) => (
            Catalog::load(path)?,
            path.parent().map(Path::to_path_buf).unwrap_or_default(),
        ),
        None => (Catalog::builtin(), PathBuf::from(".")),
    };
    let result = run_catalog(&catalog, &base_dir)?;
    let format = match format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let text = result.render(format, timing);
    match report {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            for line in result.summary_lines() {
                println!("{line}");
            }
        }
        None => print!("{text}"),
    }
    Ok(result.exit_code() as u8)
}
