//! Command-line surface for the zigzag braid-action engine.
//!
//! Braid words are comma-separated nonzero integers: `"1,-2,3"` is the first
//! generator, then the inverse of the second, then the third, with the word
//! acting on the left (the last letter acts first). Exit codes: 0 success or
//! affirmative, 1 check failure or negative answer, 2 usage errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use zigzag_core::algebra::{AlgebraSpec, Coefficients};
use zigzag_core::braid::{apply_word, BraidWord};
use zigzag_core::burau::{burau_matrix, reduced_burau};
use zigzag_core::complexes::{hom_poincare, projective};
use zigzag_core::curves::{apply_word_curve, basic_curve, gin_basic, ibigr_basic,
    is_identity_word_witness};
use zigzag_core::json as zjson;
use zigzag_core::suites::run_suite;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CoefficientArg {
    Integers,
    Mod2,
}

impl From<CoefficientArg> for Coefficients {
    fn from(c: CoefficientArg) -> Self {
        match c {
            CoefficientArg::Integers => Coefficients::Integers,
            CoefficientArg::Mod2 => Coefficients::Mod2,
        }
    }
}

#[derive(Debug, Args)]
struct Common {
    /// Number of braid generators; the disc carries m+1 marked points.
    #[arg(long)]
    m: usize,
    /// Braid word, e.g. "1,-2,3"; empty for the identity braid.
    #[arg(long, default_value = "")]
    braid: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, value_enum, default_value_t = CoefficientArg::Integers)]
    coefficients: CoefficientArg,
}

#[derive(Debug, Parser)]
#[command(
    name = "zigzag",
    about = "Braid group action on complexes over the zigzag ring, curve \
             intersection numbers, and the Burau representation",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bigraded Hom Poincaré polynomial of P_i against the braid image of P_j.
    Hom {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Geometric and bigraded intersection numbers of b_i with the braid
    /// image of b_j.
    Gin {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        /// Also print the one-variable specialization q1 = q, q2 = q^n.
        #[arg(long)]
        n: Option<i32>,
    },
    /// Decide whether the braid word acts trivially.
    IsIdentity {
        #[command(flatten)]
        common: Common,
    },
    /// Run a named verification suite.
    Check {
        #[command(flatten)]
        common: Common,
        /// One of: tl, braid-relations, inverses, dimequals, main-theorem,
        /// burau-euler.
        #[arg(long)]
        suite: String,
        /// Number of random words for the randomized suites.
        #[arg(long, default_value_t = 50)]
        words: usize,
        /// Maximum word length for the randomized suites.
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Full and reduced Burau matrices of the braid word.
    Burau {
        #[command(flatten)]
        common: Common,
    },
}

fn parse_inputs(common: &Common) -> Result<(AlgebraSpec, BraidWord), String> {
    if common.m < 1 {
        return Err("m must be at least 1".into());
    }
    let spec = AlgebraSpec::with_coefficients(common.m, common.coefficients.into());
    let word = BraidWord::parse(common.m, &common.braid).map_err(|e| e.to_string())?;
    Ok((spec, word))
}

fn check_index(name: &str, v: usize, m: usize) -> Result<(), String> {
    if v > m {
        Err(format!("{name} = {v} out of range 0..={m}"))
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Hom { common, i, j } => {
            let (spec, word) = parse_inputs(&common)?;
            check_index("i", i, spec.m)?;
            check_index("j", j, spec.m)?;
            let complex =
                apply_word(&word, &projective(j, spec)).map_err(|e| e.to_string())?;
            let h = hom_poincare(i, &complex);
            // The curve side computes the same polynomial through the string
            // tables; the two routes must agree (checked over the integers;
            // the table route has no mod-2 variant).
            let curve_side = if spec.coefficients == Coefficients::Integers {
                let curve = apply_word_curve(&word, &basic_curve(spec.m, j))
                    .map_err(|e| e.to_string())?;
                Some(ibigr_basic(i, &curve).map_err(|e| e.to_string())?)
            } else {
                None
            };
            let matches = curve_side.as_ref().map(|c| *c == h.poly);
            match common.format {
                Format::Text => {
                    println!("{}", h.poly);
                    println!("total rank: {}", h.total_rank());
                    if h.torsion.is_empty() {
                        println!("torsion: none");
                    } else {
                        for t in &h.torsion {
                            println!("torsion at [{}]{{{}}}: {}", t.r1, t.r2, t.factor);
                        }
                    }
                    if let Some(ok) = matches {
                        println!("curve-side cross-check: {}", if ok { "ok" } else { "MISMATCH" });
                    }
                }
                Format::Json => {
                    let mut v = zjson::hom_poincare_json(&h);
                    v["m"] = json!(spec.m);
                    v["braid"] = json!(common.braid);
                    v["i"] = json!(i);
                    v["j"] = json!(j);
                    if let Some(ok) = matches {
                        v["curve_match"] = json!(ok);
                    }
                    println!("{v}");
                }
            }
            if matches == Some(false) {
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gin { common, i, j, n } => {
            let (spec, word) = parse_inputs(&common)?;
            check_index("i", i, spec.m)?;
            check_index("j", j, spec.m)?;
            let curve =
                apply_word_curve(&word, &basic_curve(spec.m, j)).map_err(|e| e.to_string())?;
            let ib = ibigr_basic(i, &curve).map_err(|e| e.to_string())?;
            let gin = gin_basic(i, &curve).map_err(|e| e.to_string())?;
            let special = n.map(|n| ib.specialize_comparison(n));
            match common.format {
                Format::Text => {
                    println!("I(b_{i}, w(b_{j})) = {gin}");
                    println!("I^bigr = {ib}");
                    if let (Some(n), Some(s)) = (n, &special) {
                        println!("specialization q1=q, q2=q^{n}: {s}");
                    }
                }
                Format::Json => {
                    let mut v = json!({
                        "schema_version": zjson::SCHEMA_VERSION,
                        "m": spec.m,
                        "braid": common.braid,
                        "i": i,
                        "j": j,
                        "gin_doubled": gin.doubled(),
                        "gin": gin.to_string(),
                        "bigraded": zjson::bigraded_poly_json(&ib),
                    });
                    if let (Some(n), Some(s)) = (n, &special) {
                        v["n"] = json!(n);
                        v["specialization"] = zjson::laurent_poly_json(s);
                    }
                    println!("{v}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::IsIdentity { common } => {
            let (_, word) = parse_inputs(&common)?;
            let witness = is_identity_word_witness(&word).map_err(|e| e.to_string())?;
            match common.format {
                Format::Text => match witness {
                    None => println!("true"),
                    Some((j, k)) => println!("false (witness: I(b_{j}, w(b_{k})) changed)"),
                },
                Format::Json => {
                    let v = json!({
                        "schema_version": zjson::SCHEMA_VERSION,
                        "m": common.m,
                        "braid": common.braid,
                        "identity": witness.is_none(),
                        "witness": witness.map(|(j, k)| json!({"j": j, "k": k})),
                    });
                    println!("{v}");
                }
            }
            Ok(if witness.is_none() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Check { common, suite, words, max_len, seed } => {
            let (spec, _) = parse_inputs(&common)?;
            let report =
                run_suite(&suite, spec.m, words, max_len, seed).map_err(|e| e.to_string())?;
            match common.format {
                Format::Text => {
                    if report.passed() {
                        println!("suite {}: {} cases, all passed", report.name, report.cases);
                    } else {
                        println!(
                            "suite {}: {} cases, {} FAILED",
                            report.name,
                            report.cases,
                            report.failures.len()
                        );
                        for f in &report.failures {
                            println!("  {f}");
                        }
                    }
                }
                Format::Json => {
                    let v = json!({
                        "schema_version": zjson::SCHEMA_VERSION,
                        "suite": report.name,
                        "m": spec.m,
                        "seed": seed,
                        "max_len": max_len,
                        "cases": report.cases,
                        "failures": report.failures,
                    });
                    println!("{v}");
                }
            }
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Burau { common } => {
            let (spec, word) = parse_inputs(&common)?;
            let full = burau_matrix(&word);
            let red = reduced_burau(&word);
            match common.format {
                Format::Text => {
                    println!("burau matrix ({0} x {0}):", spec.m + 1);
                    for r in 0..full.rows {
                        let row: Vec<String> =
                            (0..full.cols).map(|c| full.get(r, c).to_string()).collect();
                        println!("[ {} ]", row.join(", "));
                    }
                    println!("reduced ({0} x {0}):", spec.m);
                    for r in 0..red.rows {
                        let row: Vec<String> =
                            (0..red.cols).map(|c| red.get(r, c).to_string()).collect();
                        println!("[ {} ]", row.join(", "));
                    }
                }
                Format::Json => {
                    let v = json!({
                        "schema_version": zjson::SCHEMA_VERSION,
                        "m": spec.m,
                        "braid": common.braid,
                        "burau": zjson::laurent_matrix_json(&full),
                        "reduced": zjson::laurent_matrix_json(&red),
                    });
                    println!("{v}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
