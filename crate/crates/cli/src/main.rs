use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hlkit::format::{comparison_to_json, expansion_to_json, laurent_to_json, xpoly_to_json};
use hlkit::hall_littlewood::{
    add_one, aleph, one_minus_x_factorization, plane_partition_qprime, q_poly, qprime_kernel_schur,
    qprime_schur, schur_to_qprime, sub_one,
};
use hlkit::identities::{
    ct_scalar, defq_counterexample_check, dominant_scalar, prodx_check, sigmaxy_check, theta, theta_left_series,
    theta_right_series, theta_scalar_check, warnaar3_check, warnaar_check, CoefficientFamily,
};
use hlkit::partition::partitions_up_to;
use hlkit::tableaux::{charge, charge_tableau, enumerate_ssyt, enumerate_ssyt_by_weight};
use hlkit::verification::{run_criterion, SuiteConfig, CRITERIA};
use hlkit::{Basis, BasisExpansion, Comparison, IntVector, LaurentPoly, Partition, VarSet, XPoly};

#[derive(Parser)]
#[command(name = "hlkit", version, about = "Exact Hall-Littlewood polynomial computations")]
struct Cli {
    /// Output format on standard output.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Expansion of Q'_v (v a partition or any integer vector).
    Qprime {
        index: String,
        /// S for Schur functions, Qp for the Q' basis.
        #[arg(long, default_value = "S")]
        basis: String,
    },
    /// Value at the alphabet 1 of the skew function Q'_{lambda/mu}.
    Aleph { lambda: String, mu: String },
    /// Q'_lambda(X + 1) in the Q' basis.
    Addone { lambda: String },
    /// Q'_lambda(X - 1) in the Q' basis.
    Subone { lambda: String },
    /// Q'_lambda in n variables as a sum over plane partitions.
    PpExpand {
        lambda: String,
        #[arg(short, default_value_t = 3)]
        n: usize,
    },
    /// Charge of a word of dominant weight, letters separated by commas.
    Charge { word: String },
    /// Tableaux of a given weight, optionally of a fixed shape, with charges.
    Tableaux {
        weight: String,
        #[arg(long)]
        shape: Option<String>,
    },
    /// Factorization of Q'_lambda(t^r - X) in n variables.
    FactorCheck {
        lambda: String,
        #[arg(short, default_value_t = 2)]
        n: usize,
        #[arg(short, default_value_t = 0)]
        r: usize,
    },
    /// Check an identity; exit status 1 on a discrepancy.
    Verify {
        #[command(subcommand)]
        which: Verify,
    },
    /// Scalar products of Q_lambda or x^lambda against x^mu in n variables.
    Scalar {
        lambda: String,
        mu: String,
        #[arg(short, default_value_t = 3)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ScalarKind::Ct)]
        kind: ScalarKind,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScalarKind {
    /// Constant-term product of Q_lambda and x^mu.
    Ct,
    /// Pairing of the two series of the theta scalar-product identity.
    Theta,
}

#[derive(Args, Clone, Copy)]
struct Cap {
    /// Degree cap of the truncated series.
    #[arg(long, env = "HLKIT_DEG", default_value_t = 6)]
    deg: usize,
}

#[derive(Subcommand)]
enum Verify {
    /// sigma_1(X + Y + (1/t - 1)XY) against sum theta P P.
    Warnaar {
        #[arg(long, default_value_t = 2)]
        nx: usize,
        #[arg(long, default_value_t = 2)]
        ny: usize,
        #[command(flatten)]
        cap: Cap,
    },
    /// The theta expansion at a fixed lambda in n variables.
    Warnaar3 {
        #[arg(long)]
        lambda: String,
        #[arg(short, default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        cap: Cap,
    },
    /// sigma_1(X + XY(1-t)) against sum P P b aleph.
    Sigmaxy {
        #[arg(long, default_value_t = 2)]
        nx: usize,
        #[arg(long, default_value_t = 2)]
        ny: usize,
        #[command(flatten)]
        cap: Cap,
    },
    /// sigma_1(-X) sum c P against the signed sums of c.
    Prodx {
        #[arg(short, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Family::Cauchy)]
        family: Family,
        #[command(flatten)]
        cap: Cap,
    },
    /// The theta scalar-product identity and its steps.
    ThetaScalar {
        #[arg(long = "l")]
        lambda: String,
        #[arg(long = "m")]
        mu: String,
        #[arg(short, default_value_t = 3)]
        n: usize,
    },
    /// The two-variable symmetrizer normalization note.
    DefqNote,
    /// Factorization of Q'_lambda(t^r - X).
    Factor {
        #[arg(long)]
        lambda: String,
        #[arg(short, default_value_t = 2)]
        n: usize,
        #[arg(short, default_value_t = 0)]
        r: usize,
    },
    /// The whole acceptance suite.
    All {
        /// Use the acceptance bounds for every cap.
        #[arg(long)]
        small: bool,
        #[command(flatten)]
        cap: Cap,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// c_0 = 1, all other c_mu = 0.
    Unit,
    /// c_mu = Q_mu(y) in one variable y.
    Cauchy,
}

struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn value(text: String, json: Value) -> Self {
        Report { text, json, ok: true }
    }
}

enum Failure {
    Usage(String),
}

impl From<hlkit::Error> for Failure {
    fn from(e: hlkit::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn partition(s: &str) -> Result<Partition, Failure> {
    s.parse().map_err(|e: hlkit::Error| Failure::Usage(e.to_string()))
}

fn int_list(s: &str) -> Result<Vec<i64>, Failure> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    s.split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| t.trim().parse().map_err(|_| Failure::Usage(format!("invalid integer {t:?}"))))
        .collect()
}

fn comparisons(list: Vec<Comparison>) -> Report {
    let ok = list.iter().all(Comparison::holds);
    let mut text = String::new();
    for c in &list {
        if c.holds() {
            text.push_str(&format!("{}\n{} = {}\n", c.label, c.lhs, c.rhs));
        }
    }
    if !ok {
        // on a discrepancy only the failing sides are printed, as JSON
        let failing: Vec<Value> = list.iter().filter(|c| !c.holds()).map(comparison_to_json).collect();
        text = serde_json::to_string_pretty(&Value::Array(failing)).unwrap() + "\n";
    }
    let json = Value::Array(list.iter().map(comparison_to_json).collect());
    Report { text, json, ok }
}

fn expansion(e: BasisExpansion) -> Report {
    Report::value(format!("{e}\n"), expansion_to_json(&e))
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    Ok(match &cli.command {
        Command::Qprime { index, basis } => {
            let basis: Basis = basis.parse()?;
            let v = int_list(index)?;
            let e = match v.iter().map(|&x| usize::try_from(x).ok()).collect::<Option<Vec<_>>>() {
                Some(parts) if parts.windows(2).all(|w| w[0] >= w[1]) => qprime_schur(&Partition::new(parts)?),
                _ => {
                    let v: Vec<i32> = v
                        .iter()
                        .map(|&x| i32::try_from(x).map_err(|_| Failure::Usage(format!("entry {x} out of range"))))
                        .collect::<Result<_, _>>()?;
                    qprime_kernel_schur(&IntVector(v))
                }
            };
            match basis {
                Basis::S => expansion(e),
                Basis::Qp => expansion(schur_to_qprime(&e)),
                other => return Err(Failure::Usage(format!("qprime expands in S or Qp, not {other}"))),
            }
        }
        Command::Aleph { lambda, mu } => {
            let a = aleph(&partition(lambda)?, &partition(mu)?);
            Report::value(format!("{a}\n"), json!({ "poly": laurent_to_json(&a) }))
        }
        Command::Addone { lambda } => expansion(add_one(&partition(lambda)?)),
        Command::Subone { lambda } => expansion(sub_one(&partition(lambda)?)),
        Command::PpExpand { lambda, n } => {
            let f = plane_partition_qprime(&partition(lambda)?, *n);
            Report::value(format!("{f}\n"), xpoly_to_json(&f))
        }
        Command::Charge { word } => {
            let w: Vec<usize> = int_list(word)?
                .into_iter()
                .map(|x| usize::try_from(x).map_err(|_| Failure::Usage(format!("invalid letter {x}"))))
                .collect::<Result<_, _>>()?;
            let c = charge(&w)?;
            Report::value(format!("{c}\n"), json!({ "charge": c }))
        }
        Command::Tableaux { weight, shape } => {
            let w: Vec<usize> = int_list(weight)?
                .into_iter()
                .map(|x| usize::try_from(x).map_err(|_| Failure::Usage(format!("invalid weight entry {x}"))))
                .collect::<Result<_, _>>()?;
            let list = match shape {
                Some(s) => enumerate_ssyt(&partition(s)?, &w),
                None => enumerate_ssyt_by_weight(&w),
            };
            let mut text = String::new();
            let mut entries = Vec::new();
            for t in &list {
                let ch = charge_tableau(t).ok();
                let rows: Vec<String> = t
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
                    .collect();
                match ch {
                    Some(c) => text.push_str(&format!("{}  charge {c}\n", rows.join(" / "))),
                    None => text.push_str(&format!("{}\n", rows.join(" / "))),
                }
                entries.push(json!({ "rows": t.rows(), "shape": t.shape().parts(), "charge": ch }));
            }
            Report::value(text, Value::Array(entries))
        }
        Command::FactorCheck { lambda, n, r } => comparisons(vec![one_minus_x_factorization(&partition(lambda)?, *r, *n)?]),
        Command::Scalar { lambda, mu, n, kind } => {
            let (l, m) = (partition(lambda)?, partition(mu)?);
            let (lv, mv) = match (l.padded(*n), m.padded(*n)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(Failure::Usage(format!("partitions must have at most {n} parts"))),
            };
            let value = match kind {
                ScalarKind::Ct => {
                    let vars = VarSet::x(*n);
                    ct_scalar(&q_poly(&l, &vars), &XPoly::monomial(&vars, mv.0, LaurentPoly::one()))
                }
                ScalarKind::Theta => dominant_scalar(&theta_left_series(&lv), &theta_right_series(&mv)),
            };
            Report::value(format!("{value}\n"), json!({ "value": laurent_to_json(&value) }))
        }
        Command::Verify { which } => verify(which)?,
    })
}

fn verify(which: &Verify) -> Result<Report, Failure> {
    Ok(match which {
        Verify::Warnaar { nx, ny, cap } => comparisons(vec![warnaar_check(*nx, *ny, cap.deg)?]),
        Verify::Warnaar3 { lambda, n, cap } => comparisons(vec![warnaar3_check(&partition(lambda)?, *n, cap.deg)?]),
        Verify::Sigmaxy { nx, ny, cap } => comparisons(vec![sigmaxy_check(*nx, *ny, cap.deg)?]),
        Verify::Prodx { n, family, cap } => {
            let (fam, vars) = match family {
                Family::Unit => {
                    let none = VarSet::new(Vec::<String>::new());
                    (CoefficientFamily::from([(Partition::empty(), XPoly::one(&none))]), none)
                }
                Family::Cauchy => {
                    let y = VarSet::y(1);
                    let fam = partitions_up_to(cap.deg)
                        .into_iter()
                        .map(|mu| {
                            let q = q_poly(&mu, &VarSet::x(1)).embed(&y, &[0]);
                            (mu, q)
                        })
                        .collect();
                    (fam, y)
                }
            };
            comparisons(vec![prodx_check(&fam, &vars, *n, cap.deg)])
        }
        Verify::ThetaScalar { lambda, mu, n } => {
            let (l, m) = (partition(lambda)?, partition(mu)?);
            let mut report = comparisons(theta_scalar_check(&l, &m, *n)?);
            if report.ok {
                report.text = format!("theta({l}, {m}) = {}\n{}", theta(&l, &m), report.text);
            }
            report
        }
        Verify::DefqNote => {
            let note = defq_counterexample_check();
            let mut report = comparisons(note.comparisons.clone());
            report.ok = note.holds();
            report.json = json!({
                "comparisons": report.json,
                "difference": xpoly_to_json(&note.difference),
                "minor": laurent_to_json(&note.minor),
            });
            if report.ok {
                report.text.push_str(&format!(
                    "normalized image of x^02 minus (t Q_20 + (t-1) Q_11) = {}\nminor on (x^20, x^11) = {}\n",
                    note.difference, note.minor
                ));
            } else {
                report.text = serde_json::to_string_pretty(&report.json).unwrap() + "\n";
            }
            report
        }
        Verify::Factor { lambda, n, r } => comparisons(vec![one_minus_x_factorization(&partition(lambda)?, *r, *n)?]),
        Verify::All { small, cap } => {
            let cfg = if *small {
                SuiteConfig::default()
            } else {
                SuiteConfig { series_cap: cap.deg }
            };
            let mut text = String::new();
            let mut entries = Vec::new();
            let mut ok = true;
            for id in 1..=CRITERIA.len() {
                let r = run_criterion(id, cfg);
                ok &= r.passed();
                text.push_str(&format!(
                    "criterion {id:>2}: {}  {} ({} checks, {} failed)\n",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.title,
                    r.summary.checked,
                    r.summary.failures.len()
                ));
                if let Some(first) = r.summary.failures.first() {
                    text.push_str(&format!("{}\n", serde_json::to_string_pretty(&comparison_to_json(first)).unwrap()));
                }
                entries.push(json!({
                    "criterion": id,
                    "title": r.title,
                    "passed": r.passed(),
                    "checked": r.summary.checked,
                    "failures": r.summary.failures.iter().map(comparison_to_json).collect::<Vec<_>>(),
                }));
            }
            Report { text, json: Value::Array(entries), ok }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let body = match cli.format {
        Format::Text => report.text.clone(),
        Format::Json => serde_json::to_string_pretty(&report.json).unwrap() + "\n",
    };
    // a closed pipe on stdout is not an error of the computation
    let _ = io::stdout().lock().write_all(body.as_bytes());
    if let Some(path) = &cli.out {
        let body = serde_json::to_string_pretty(&report.json).unwrap() + "\n";
        if let Err(e) = fs::write(path, body) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
