//! Command-line front end: construct the polynomial families, evaluate
//! matrix elements, run the exact verifiers and the numeric limit
//! checks, with text or JSON output.
//!
//! Exit codes: 0 on success / all-pass, 1 when any verification fails,
//! 2 on usage errors.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qoscillator::identity::{
    verify_algebra_relations, verify_connection_formula, verify_eigenfunctions,
    verify_generating_function, verify_matrix_elements, verify_q_binomial_theorem,
    verify_realization, verify_specialization, verify_transformation_formula,
    GeneratingFunction, IdentityReport, Specialization, VerifyConfig,
};
use qoscillator::numeric::{check_limit, LimitCheckSpec, LimitIdentity};
use qoscillator::oscillator::matrix_element_closed_form;
use qoscillator::qfunctions::{
    continuous_big_q_hermite, continuous_q_hermite, q_laguerre, wall_polynomial,
    QuarterInt,
};
use qoscillator::render::{render_prational, render_upoly, render_zlaurent};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum VerifyTarget {
    Eq1,
    Eq9,
    Eq16,
    Eq19,
    Eq21,
    Eq27,
    Eq29,
    Eq31,
    Eq37,
    Eq40,
    Eigenfunctions,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum LimitTarget {
    Eq6,
    Eq32,
    Eq33,
    Qexp,
}

fn parse_quarter(s: &str) -> Result<QuarterInt, String> {
    QuarterInt::parse_literal(s)
        .ok_or_else(|| format!("expected one of 0, 1/4, 1/2, 3/4 (got {:?})", s))
}

#[derive(Parser, Debug)]
#[command(
    name = "qoscillator",
    about = "Exact q-oscillator algebra computations and identity verification",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Verifier parallelism bound (verifiers are pure; output ordering is
    /// independent of this value).
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the degree-n continuous q-Hermite polynomial.
    Hermite {
        #[arg(long)]
        n: u32,
    },
    /// Print the degree-n continuous big q-Hermite polynomial (parameter a).
    BigHermite {
        #[arg(long)]
        n: u32,
    },
    /// Print the degree-n Wall (little q-Laguerre) polynomial with a = q^gamma.
    Wall {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        gamma: i64,
    },
    /// Print the degree-n q-Laguerre polynomial with exponent rho.
    Laguerre {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        rho: i64,
    },
    /// Print the closed-form matrix element U_{m,n} as a polynomial in
    /// the formal group parameters alpha and beta.
    MatrixElement {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_quarter, default_value = "0")]
        mu: QuarterInt,
        #[arg(long, value_parser = parse_quarter, default_value = "0")]
        nu: QuarterInt,
    },
    /// Run one exact verifier (or all of them).
    Verify {
        #[arg(long, value_enum)]
        identity: VerifyTarget,
        #[arg(long, default_value_t = 12)]
        n_max: u32,
        #[arg(long, default_value_t = 16)]
        order: usize,
        #[arg(long, default_value_t = 4)]
        gamma_max: i64,
    },
    /// Run one numeric classical-limit check.
    Limit {
        #[arg(long, value_enum)]
        identity: LimitTarget,
        #[arg(long, default_value_t = 4)]
        n: u32,
        #[arg(long, value_parser = parse_quarter, default_value = "0")]
        mu: QuarterInt,
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Run every exact verifier and every numeric limit check.
    All,
}

fn print_poly(format: Format, name: &str, n: u32, rendered: String) {
    match format {
        Format::Text => println!("{}", rendered),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "family": name,
                "n": n,
                "polynomial": rendered,
            }))
            .expect("serializable")
        ),
    }
}

fn print_reports(format: Format, reports: &[IdentityReport]) {
    match format {
        Format::Text => {
            for r in reports {
                let verdict = if r.is_pass() { "pass" } else { "FAIL" };
                println!("{}: {} ({}) [{} ms]", r.identity, verdict, r.checked, r.elapsed_ms);
                if let Some(cex) = &r.counterexample {
                    println!("  counterexample at {:?}: {}", cex.point, cex.difference);
                }
            }
        }
        Format::Json => {
            let value = if reports.len() == 1 {
                serde_json::to_value(&reports[0])
            } else {
                serde_json::to_value(reports)
            }
            .expect("serializable");
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        }
    }
}

fn quarter_grid() -> [QuarterInt; 4] {
    [QuarterInt(0), QuarterInt(1), QuarterInt(2), QuarterInt(3)]
}

fn run_verify(target: VerifyTarget, n_max: u32, order: usize, gamma_max: i64) -> Vec<IdentityReport> {
    let c_powers: Vec<i64> = (1..=5).map(|d| n_max as i64 + d).collect();
    match target {
        VerifyTarget::Eq1 => vec![verify_algebra_relations(32)],
        VerifyTarget::Eq9 => vec![verify_realization(20)],
        VerifyTarget::Eq16 => {
            vec![verify_matrix_elements(8, &quarter_grid(), 32, 16)]
        }
        VerifyTarget::Eq19 => {
            vec![verify_specialization(Specialization::Eq19Wall, n_max.min(10), gamma_max)]
        }
        VerifyTarget::Eq21 => vec![verify_specialization(
            Specialization::Eq21Laguerre,
            n_max.min(10),
            gamma_max,
        )],
        VerifyTarget::Eq27 => vec![verify_q_binomial_theorem(order)],
        VerifyTarget::Eq29 => vec![verify_transformation_formula(n_max.min(8), &c_powers)],
        VerifyTarget::Eq31 => vec![verify_connection_formula(n_max)],
        VerifyTarget::Eq37 => {
            vec![verify_generating_function(GeneratingFunction::Eq37, order)]
        }
        VerifyTarget::Eq40 => {
            vec![verify_generating_function(GeneratingFunction::Eq40, order)]
        }
        VerifyTarget::Eigenfunctions => vec![verify_eigenfunctions(order)],
        VerifyTarget::All => {
            let config = VerifyConfig {
                n_max,
                order,
                gamma_max,
                ..VerifyConfig::default()
            };
            qoscillator::identity::verify_all(&config)
        }
    }
}

fn default_limit_reports() -> Vec<IdentityReport> {
    let mut reports = Vec::new();
    for n in 0..=6 {
        reports.push(check_limit(&LimitCheckSpec::new(LimitIdentity::Eq6, n)).expect("valid spec"));
        reports.push(check_limit(&LimitCheckSpec::new(LimitIdentity::Eq33, n)).expect("valid spec"));
    }
    for n in 0..=8 {
        reports.push(check_limit(&LimitCheckSpec::new(LimitIdentity::Eq32, n)).expect("valid spec"));
    }
    for mu in quarter_grid() {
        reports.push(
            check_limit(&LimitCheckSpec::new(LimitIdentity::QExpLimit, 0).with_mu(mu))
                .expect("valid spec"),
        );
    }
    reports
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Hermite { n } => {
            print_poly(
                cli.format,
                "continuous-q-hermite",
                n,
                render_zlaurent(&continuous_q_hermite(n), "z", "a"),
            );
            0
        }
        Command::BigHermite { n } => {
            print_poly(
                cli.format,
                "continuous-big-q-hermite",
                n,
                render_zlaurent(&continuous_big_q_hermite(n), "z", "a"),
            );
            0
        }
        Command::Wall { n, gamma } => match wall_polynomial(n, 4 * gamma) {
            Ok(p) => {
                print_poly(cli.format, "wall", n, render_upoly(&p, "x"));
                0
            }
            Err(e) => {
                eprintln!("error: {}", e);
                2
            }
        },
        Command::Laguerre { n, rho } => {
            if rho < 0 {
                eprintln!("error: --rho must be non-negative");
                return 2;
            }
            print_poly(cli.format, "q-laguerre", n, render_upoly(&q_laguerre(n, rho), "x"));
            0
        }
        Command::MatrixElement { m, n, mu, nu } => {
            let result = matrix_element_closed_form(mu, nu, m, n);
            let terms: Vec<String> = result
                .value
                .terms()
                .map(|((a, b), c)| {
                    format!("({}) alpha^{} beta^{}", render_prational(c), a, b)
                })
                .collect();
            let rendered = if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            };
            match cli.format {
                Format::Text => println!("{}", rendered),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "m": m,
                        "n": n,
                        "mu": mu.as_literal(),
                        "nu": nu.as_literal(),
                        "value": rendered,
                    }))
                    .expect("serializable")
                ),
            }
            0
        }
        Command::Verify {
            identity,
            n_max,
            order,
            gamma_max,
        } => {
            let reports = run_verify(identity, n_max, order, gamma_max);
            print_reports(cli.format, &reports);
            if reports.iter().all(|r| r.is_pass()) {
                0
            } else {
                1
            }
        }
        Command::Limit {
            identity,
            n,
            mu,
            tolerance,
        } => {
            let target = match identity {
                LimitTarget::Eq6 => LimitIdentity::Eq6,
                LimitTarget::Eq32 => LimitIdentity::Eq32,
                LimitTarget::Eq33 => LimitIdentity::Eq33,
                LimitTarget::Qexp => LimitIdentity::QExpLimit,
            };
            let mut spec = LimitCheckSpec::new(target, n).with_mu(mu);
            if let Some(t) = tolerance {
                spec.tolerance = t;
            }
            match check_limit(&spec) {
                Ok(report) => {
                    let pass = report.is_pass();
                    print_reports(cli.format, &[report]);
                    if pass {
                        0
                    } else {
                        1
                    }
                }
                Err(e) => {
                    eprintln!("error: {}", e);
                    2
                }
            }
        }
        Command::All => {
            let mut reports = qoscillator::identity::verify_all(&VerifyConfig::default());
            reports.extend(default_limit_reports());
            print_reports(cli.format, &reports);
            if reports.iter().all(|r| r.is_pass()) {
                0
            } else {
                1
            }
        }
    }
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}
