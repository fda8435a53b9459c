//! Command-line surface: field inspection, construction, verification,
//! family enumeration and table reproduction with deterministic
//! machine-readable output.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use permcycle::{
    closed_form_count, construct_bin, construct_cyclotomic, construct_geom_sum, construct_tri,
    distinct_polynomials, divisors, enumerate_family, euler_phi, factor_pairs, reproduce_table,
    verify_all, verify_poly, Construction, Error, Family, Field, FieldRef, Pool, Result,
    SparsePoly, TableOptions,
};

fn js<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("JSON serialization cannot fail")
}

#[derive(Parser)]
#[command(name = "permcycle", version, about = "Permutation polynomials with prescribed cycle type over odd-order finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Args)]
struct FieldArgs {
    /// Field order q, an odd prime power
    #[arg(long, conflicts_with_all = ["p", "k", "modulus"])]
    q: Option<u64>,
    /// Odd prime characteristic (with --k)
    #[arg(long, requires = "k")]
    p: Option<u64>,
    /// Extension degree
    #[arg(long)]
    k: Option<u32>,
    /// Modulus coefficients "c0,c1,...", least degree first (monic; the
    /// leading 1 may be omitted)
    #[arg(long)]
    modulus: Option<String>,
}

impl FieldArgs {
    fn build(&self) -> Result<FieldRef> {
        match (self.q, self.p) {
            (Some(q), None) => Field::from_order(q),
            (None, Some(p)) => {
                let k = self.k.unwrap_or(1);
                let modulus = self
                    .modulus
                    .as_ref()
                    .map(|s| {
                        s.split(',')
                            .map(|t| t.trim().parse::<u64>())
                            .collect::<std::result::Result<Vec<_>, _>>()
                            .map_err(|_| Error::BadParameter(format!("bad modulus: {s}")))
                    })
                    .transpose()?;
                Field::extension(p, k, modulus)
            }
            _ => Err(Error::BadParameter(
                "exactly one of --q or --p/--k must be given".into(),
            )),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Bin,
    Tri,
    Cyclo,
    Geomsum,
}

impl FamilyArg {
    fn to_family(self, r: Option<u64>) -> Result<Family> {
        Ok(match self {
            FamilyArg::Bin => Family::Bin,
            FamilyArg::Tri => Family::Tri,
            FamilyArg::Cyclo => Family::Cyclo {
                r: r.ok_or_else(|| {
                    Error::BadParameter("--r is required for the cyclo family".into())
                })?,
            },
            FamilyArg::Geomsum => Family::GeomSum,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Describe a field: generator, factorization, valid (m, d) pairs
    Field {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build one construction from explicit units
    Construct {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Subgroup order m with m*d = q-1
        #[arg(long)]
        m: u64,
        /// Comma-separated units; each in element text format
        /// (residue, enc:N, or g^E)
        #[arg(long)]
        units: String,
        /// Number of terms for the cyclo family
        #[arg(long)]
        r: Option<u64>,
        /// Skip the exhaustive oracle check
        #[arg(long)]
        no_verify: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Analyze an arbitrary polynomial: bijection, cycle type, fixed points
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        /// Polynomial text, e.g. "3x^7+6x"
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Stream every construction of a family as JSON lines
    Enumerate {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        r: Option<u64>,
        /// Draw unit tuples from all of H_0 instead of elements of order
        /// exactly m
        #[arg(long)]
        mixed: bool,
        /// Skip per-member oracle verification
        #[arg(long)]
        no_verify: bool,
        /// Also report the number of distinct canonical polynomials
        #[arg(long)]
        distinct: bool,
    },
    /// Reproduce the per-field binomial/trinomial family table
    Table {
        #[command(flatten)]
        field: FieldArgs,
        /// Oracle-verify every member of every row
        #[arg(long)]
        verify_all: bool,
        /// Add a distinct-polynomial count column
        #[arg(long)]
        distinct: bool,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("PERMCYCLE_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            if n > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {} ({e})", e.name());
            match e {
                Error::VerificationFailed(_) | Error::NotAPermutation => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn field_json(f: &FieldRef) -> serde_json::Value {
    json!({
        "q": f.q(),
        "p": f.p(),
        "k": f.k(),
        "modulus": f.modulus(),
        "generator": f.generator(),
        "q_minus_1_factors": f.q_minus_1_factors(),
    })
}

fn run(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Field { field, format } => {
            let f = field.build()?;
            let divs: Vec<serde_json::Value> = divisors(f.q() - 1)
                .into_iter()
                .map(|m| json!({"m": m, "d": (f.q()-1)/m, "phi": euler_phi(m)}))
                .collect();
            let report = json!({
                "field": field_json(&f),
                "divisors": divs,
                "bin_pairs": factor_pairs(&f, 2),
                "tri_pairs": factor_pairs(&f, 3),
            });
            match format {
                Format::Json => println!("{}", js(&report)),
                _ => {
                    println!("q = {} = {}^{}", f.q(), f.p(), f.k());
                    if let Some(m) = f.modulus() {
                        println!("modulus coefficients (ascending): {m:?}");
                    }
                    println!("generator encoding: {}", f.generator());
                    println!(
                        "q-1 = {} with factors {:?}",
                        f.q() - 1,
                        f.q_minus_1_factors()
                    );
                    println!("m\td\tphi(m)");
                    for m in divisors(f.q() - 1) {
                        println!("{m}\t{}\t{}", (f.q() - 1) / m, euler_phi(m));
                    }
                    println!("binomial (m,d) pairs: {:?}", factor_pairs(&f, 2));
                    println!("trinomial (m,d) pairs: {:?}", factor_pairs(&f, 3));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct {
            field,
            family,
            m,
            units,
            r,
            no_verify,
            format,
        } => {
            let f = field.build()?;
            let parsed: Vec<u64> = units
                .split(',')
                .map(|t| f.parse_element(t))
                .collect::<Result<_>>()?;
            let fam = family.to_family(r)?;
            let c = build_one(&f, fam, m, &parsed)?;
            let verified = if no_verify {
                false
            } else {
                permcycle::verify_construction(&c, true)?;
                true
            };
            let mut v = serde_json::to_value(&c).expect("JSON serialization cannot fail");
            v["verified"] = json!(verified);
            match format {
                Format::Text => {
                    println!("poly: {}", c.poly());
                    println!("inverse: {}", c.inverse_poly());
                    println!("predicted cycle type: {}", c.predicted());
                    println!("verified: {verified}");
                }
                _ => println!("{}", js(&v)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { field, poly, format } => {
            let f = field.build()?;
            let p = SparsePoly::parse(f, &poly)?;
            let report = verify_poly(&p, None);
            match format {
                Format::Text => {
                    println!("is_permutation: {}", report.is_permutation);
                    if let Some(t) = &report.cycle_type {
                        println!("cycle_type: {t}");
                    }
                    println!("fixed_points: {:?}", report.fixed_points);
                }
                _ => println!("{}", js(&report)),
            }
            Ok(if report.is_permutation {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Enumerate {
            field,
            family,
            m,
            r,
            mixed,
            no_verify,
            distinct,
        } => {
            let f = field.build()?;
            let fam = family.to_family(r)?;
            let pool = if mixed { Pool::Mixed } else { Pool::EqualOrder };
            let cons = enumerate_family(&f, fam, m, pool)?;
            if !no_verify {
                verify_all(&cons)?;
            }
            let mut out = std::io::stdout().lock();
            use std::io::Write;
            for c in &cons {
                writeln!(out, "{}", js(c))
                    .map_err(|e| Error::BadParameter(e.to_string()))?;
            }
            let closed = closed_form_count(&f, fam, m, pool);
            let mut summary = json!({
                "count": cons.len(),
                "closed_form": closed,
                "verified": !no_verify,
            });
            if distinct {
                summary["distinct"] = json!(distinct_polynomials(&cons));
            }
            writeln!(out, "{summary}").map_err(|e| Error::BadParameter(e.to_string()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table {
            field,
            verify_all: verify,
            distinct,
            format,
        } => {
            let f = field.build()?;
            let rows = reproduce_table(&f, TableOptions { verify, distinct })?;
            match format {
                Format::Json => println!("{}", js(&rows)),
                _ => {
                    let mut header = "family\tm\td\tcycle_type\tcount\tverified".to_string();
                    if distinct {
                        header.push_str("\tdistinct");
                    }
                    println!("{header}");
                    for row in &rows {
                        let mut line = format!(
                            "{}\t{}\t{}\t{}\t{}\t{}",
                            row.family, row.m, row.d, row.cycle_type, row.count, row.verified
                        );
                        if let Some(dcount) = row.distinct {
                            line.push_str(&format!("\t{dcount}"));
                        }
                        println!("{line}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn build_one(f: &FieldRef, fam: Family, m: u64, units: &[u64]) -> Result<Construction> {
    let need = |n: usize| -> Result<()> {
        if units.len() != n {
            return Err(Error::BadParameter(format!(
                "family {} needs {n} units, got {}",
                fam.tag(),
                units.len()
            )));
        }
        Ok(())
    };
    match fam {
        Family::Bin => {
            need(2)?;
            construct_bin(f, m, units[0], units[1])
        }
        Family::Tri => {
            need(3)?;
            construct_tri(f, m, units[0], units[1], units[2])
        }
        Family::Cyclo { r } => construct_cyclotomic(f, r, m, units),
        Family::GeomSum => {
            need(2)?;
            construct_geom_sum(f, m, units[0], units[1])
        }
    }
}
