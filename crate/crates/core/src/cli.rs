//! Command-line interface. `run` returns the exit code and everything that
//! should be printed, so it can be driven from tests.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::combinatorics::{
    kostka, standard_tableaux_count, IntegerPartition, Permutation, SetPartition, SkewShape,
    YoungTableau,
};
use crate::error::{Error, Result};
use crate::lgv;
use crate::ncschur;
use crate::ncsym::{NcBasis, NcExpr};
use crate::rational::format_q;
use crate::sym::SymBasis;
use crate::verify::{self, SuiteOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "ncsym", version, about = "Exact symmetric functions in noncommuting variables")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "plain", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand an expression in the monomial basis, or as noncommuting
    /// monomials in `--vars` variables with `--oracle`.
    Expand {
        expr: String,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Rewrite an expression in another basis (m, p, e, h, s, st, tab).
    Convert {
        expr: String,
        #[arg(long)]
        to: String,
    },
    /// A Schur function in noncommuting variables, in the h basis (the e
    /// basis for `--transposed`).
    Schur {
        #[arg(long, conflicts_with_all = ["shape", "transposed", "tableau"])]
        pi: Option<String>,
        #[arg(long)]
        shape: Option<String>,
        /// Permutation acting on `s_[λ/μ]`.
        #[arg(long, requires = "shape")]
        delta: Option<String>,
        #[arg(long, conflicts_with_all = ["shape", "tableau"])]
        transposed: Option<String>,
        /// Rows separated by `/`, e.g. `12/3`; gives the tabloid function.
        #[arg(long, conflicts_with = "shape")]
        tableau: Option<String>,
    },
    Multiply {
        left: String,
        right: String,
    },
    /// Let the variables commute; the result is printed in `--to` (default s).
    Rho {
        expr: String,
        #[arg(long, default_value = "s")]
        to: String,
    },
    Omega {
        expr: String,
    },
    /// The permutation action `δ ∘ f`.
    Act {
        #[arg(long)]
        delta: String,
        expr: String,
    },
    /// Rosas–Sagan Schur function in the m basis.
    Rs {
        #[arg(long)]
        shape: String,
    },
    /// Littlewood–Richardson expansion `S_{λ/μ} = Σ c S_ν`.
    Lr {
        #[arg(long)]
        shape: String,
    },
    Kostka {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        content: String,
    },
    /// Rank of the Specht vectors of one shape, or of every shape up to
    /// `--max-size`.
    SpechtRank {
        #[arg(long, required_unless_present = "max_size")]
        shape: Option<String>,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Check the lattice-path swap on one shape; `--ledger` prints every
    /// signed monomial as TSV.
    LgvCheck {
        #[arg(long)]
        shape: String,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long)]
        ledger: bool,
    },
    /// Run a named identity suite.
    Verify {
        suite: String,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => {
            let code = match e {
                Error::IdentityViolation(_) | Error::Internal(_) => 1,
                _ => 2,
            };
            (code, format!("error: {}\n", e))
        }
    }
}

fn parse_expr(s: &str) -> Result<NcExpr> {
    if s.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::parse(s, e.column().saturating_sub(1), e.to_string()))?;
        NcExpr::from_json(&v)
    } else {
        s.parse()
    }
}

fn parse_basis(s: &str) -> Result<NcBasis> {
    NcBasis::from_letter(s).ok_or_else(|| Error::parse(s, 0, "unknown basis; expected m, p, e, h, s, st or tab"))
}

/// `12/3` or `1,2/3`: rows top to bottom.
fn parse_tableau(s: &str) -> Result<YoungTableau> {
    let mut rows = Vec::new();
    let mut offset = 0;
    for row in s.split('/') {
        let entries: Result<Vec<usize>> = if row.contains(',') {
            let mut pos = offset;
            row.split(',')
                .map(|e| {
                    let r = e.trim().parse().map_err(|_| Error::parse(s, pos, "expected a positive integer"));
                    pos += e.len() + 1;
                    r
                })
                .collect()
        } else {
            row.char_indices()
                .map(|(i, c)| {
                    c.to_digit(10)
                        .filter(|&d| d > 0)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::parse(s, offset + i, "expected a digit 1-9"))
                })
                .collect()
        };
        rows.push(entries?);
        offset += row.len() + 1;
    }
    let lengths: Vec<usize> = rows.iter().map(|r| r.len()).collect();
    let shape = IntegerPartition::new(lengths).map_err(|_| Error::parse(s, 0, "row lengths must weakly decrease"))?;
    YoungTableau::new(SkewShape::straight(shape), rows)
}

fn expr_out(format: Format, e: &NcExpr) -> String {
    match format {
        Format::Plain => format!("{}\n", e),
        Format::Json => format!("{}\n", e.to_json()),
    }
}

fn execute(cli: &Cli) -> Result<(i32, String)> {
    let f = cli.format;
    let ok = |s: String| Ok((0, s));
    match &cli.command {
        Command::Expand { expr, oracle, vars } => {
            let e = parse_expr(expr)?;
            if *oracle {
                let k = vars.unwrap_or_else(|| e.max_degree().max(1));
                let p = e.oracle_expand(k)?;
                return ok(match f {
                    Format::Plain => format!("{}\n", p),
                    Format::Json => format!("{}\n", p.to_json()),
                });
            }
            ok(expr_out(f, &e.to_m()?))
        }
        Command::Convert { expr, to } => ok(expr_out(f, &parse_expr(expr)?.convert(parse_basis(to)?)?)),
        Command::Schur {
            pi,
            shape,
            delta,
            transposed,
            tableau,
        } => {
            let e = if let Some(p) = pi {
                ncschur::standard_schur(&p.parse::<SetPartition>()?)
            } else if let Some(p) = transposed {
                ncschur::transposed_schur(&p.parse::<SetPartition>()?)
            } else if let Some(t) = tableau {
                ncschur::tabloid_schur(&parse_tableau(t)?)?
            } else if let Some(s) = shape {
                let s: SkewShape = s.parse()?;
                match delta {
                    Some(d) => ncschur::skew_schur_nc(&d.parse::<Permutation>()?, &s)?,
                    None => ncschur::source_skew_schur(&s),
                }
            } else {
                return Err(Error::invalid("one of --pi, --shape, --transposed or --tableau is required"));
            };
            ok(expr_out(f, &e))
        }
        Command::Multiply { left, right } => ok(expr_out(f, &parse_expr(left)?.product(&parse_expr(right)?)?)),
        Command::Rho { expr, to } => {
            let basis = SymBasis::from_letter(to).ok_or_else(|| Error::parse(to, 0, "unknown basis; expected m, p, e, h or s"))?;
            let r = parse_expr(expr)?.rho()?.convert(basis)?;
            ok(match f {
                Format::Plain => format!("{}\n", r),
                Format::Json => format!("{}\n", r.to_json()),
            })
        }
        Command::Omega { expr } => ok(expr_out(f, &parse_expr(expr)?.omega()?)),
        Command::Act { delta, expr } => {
            let d: Permutation = delta.parse()?;
            ok(expr_out(f, &parse_expr(expr)?.delta_action(&d)?))
        }
        Command::Rs { shape } => ok(expr_out(f, &ncschur::rosas_sagan(&shape.parse()?))),
        Command::Lr { shape } => {
            let s: SkewShape = shape.parse()?;
            let terms = ncschur::rs_lr_expand(&s)?;
            ok(match f {
                Format::Plain => {
                    let body: Vec<String> = terms.iter().map(|(nu, c)| format!("{} S[{}]", format_q(c), nu)).collect();
                    format!("S[{}] = {}\n", s, if body.is_empty() { "0".to_string() } else { body.join(" + ") })
                }
                Format::Json => {
                    let ts: Vec<Value> = terms.iter().map(|(nu, c)| json!({"index": nu.to_string(), "coeff": format_q(c)})).collect();
                    format!("{}\n", json!({"shape": s.to_string(), "basis": "S", "terms": ts}))
                }
            })
        }
        Command::Kostka { shape, content } => {
            let s: SkewShape = shape.parse()?;
            let nu: IntegerPartition = content.parse().or_else(|_| {
                content
                    .parse::<crate::combinatorics::Composition>()
                    .map(|c| c.sorted())
            })?;
            let k = kostka(&s, &nu);
            ok(match f {
                Format::Plain => format!("{}\n", k),
                Format::Json => format!("{}\n", json!({"shape": s.to_string(), "content": nu.to_string(), "kostka": k})),
            })
        }
        Command::SpechtRank { shape, max_size } => {
            let rows: Vec<(IntegerPartition, usize, usize)> = match shape {
                Some(s) => {
                    let l: IntegerPartition = s.parse()?;
                    let fl = standard_tableaux_count(&SkewShape::straight(l.clone()));
                    vec![(l.clone(), ncschur::specht_rank(&l)?, fl)]
                }
                None => verify::specht_ranks(max_size.unwrap_or(4))?,
            };
            let bad: Vec<_> = rows.iter().filter(|(_, r, fl)| *r != 0 && r != fl).collect();
            let text = match f {
                Format::Plain => rows
                    .iter()
                    .map(|(l, r, fl)| format!("{}\trank {}\tf {}\n", l, r, fl))
                    .collect::<String>(),
                Format::Json => {
                    let v: Vec<Value> = rows
                        .iter()
                        .map(|(l, r, fl)| json!({"shape": l.to_string(), "rank": r, "f": fl}))
                        .collect();
                    format!("{}\n", Value::Array(v))
                }
            };
            Ok((if bad.is_empty() { 0 } else { 1 }, text))
        }
        Command::LgvCheck { shape, vars, ledger } => {
            let s: SkewShape = shape.parse()?;
            if *ledger {
                let mut out = String::from("sign\tword\teps\tfixed\n");
                for (sign, w, eps, fixed) in lgv::monomial_ledger(&s, *vars) {
                    out.push_str(&format!("{}\t{}\t{}\t{}\n", sign, w, eps, fixed));
                }
                return ok(out);
            }
            let r = lgv::lgv_check(&s, *vars)?;
            let good = r.swap_is_sound() && r.identities_hold();
            let text = match f {
                Format::Plain => {
                    let mut t = format!(
                        "shape {} heights ≤ {}: {} tuples, {} fixed points\n\
                         involution failures {}, fixed-point failures {}, sign failures {}, height failures {}, monomial failures {}\n\
                         signed sum collapses: {}\nh-monomial bridge: {}\nfixed points ↔ SSYT: {}\n",
                        r.shape, r.height_cap, r.tuples, r.fixed_points,
                        r.involution_failures.len(), r.fixed_point_failures.len(), r.sign_failures.len(),
                        r.height_failures.len(), r.monomial_failures.len(),
                        r.signed_sum_collapses, r.bridge_holds, r.ssyt_bijection
                    );
                    if let Some(p) = r.involution_failures.first() {
                        t.push_str(&format!("counterexample:\n{}\n", p.dump()));
                    }
                    t
                }
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "shape": r.shape, "height_cap": r.height_cap, "tuples": r.tuples,
                        "fixed_points": r.fixed_points,
                        "involution_failures": r.involution_failures.len(),
                        "fixed_point_failures": r.fixed_point_failures.len(),
                        "sign_failures": r.sign_failures.len(),
                        "height_failures": r.height_failures.len(),
                        "monomial_failures": r.monomial_failures.len(),
                        "signed_sum_collapses": r.signed_sum_collapses,
                        "bridge_holds": r.bridge_holds,
                        "ssyt_bijection": r.ssyt_bijection,
                    })
                ),
            };
            Ok((if good { 0 } else { 1 }, text))
        }
        Command::Verify {
            suite,
            max_size,
            vars,
            seed,
        } => {
            let opts = SuiteOptions {
                max_size: *max_size,
                vars: *vars,
                seed: *seed,
            };
            let r = verify::run_suite(suite, &opts)?;
            let text = match f {
                Format::Plain => format!("{}\n", r),
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "suite": r.name, "range": r.range, "checks": r.checks,
                        "passed": r.passed(), "failures": r.failures, "notes": r.notes,
                    })
                ),
            };
            Ok((if r.passed() { 0 } else { 1 }, text))
        }
    }
}
