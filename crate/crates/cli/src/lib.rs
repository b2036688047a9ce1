//! Command-line front end for `grassnef`.
//!
//! Every subcommand parses its inputs, calls into the library, and wraps the
//! result in a [`Report`]. No arithmetic happens here.

pub mod error;
pub mod report;
pub mod spec;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};
use grassnef::corpus::hn_types_up_to;
use grassnef::{
    classify_tautological, enumerate_va, flag_nef_cone, grassmann_nef_cone, is_ample_flag,
    is_ample_gr, is_nef_flag, is_nef_gr, theta, theta_oracle, BigInt, FieldContext, FlagType,
    HnType, NsClassFlag, NsClassGr, Rational,
};

pub use error::CliError;
pub use report::{render_report, InputEcho, Mismatch, Outcome, RenderMode, Report, VaEntry};
pub use spec::{parse_bundle_spec, parse_class, parse_flag_dims, BundleSpec, JsonInt, RationalText};

/// Largest total rank in the built-in `oracle-check` corpus.
pub const CORPUS_MAX_RANK: u32 = 6;
/// Piece degrees of the built-in corpus range over `-CORPUS_MAX_DEGREE..=CORPUS_MAX_DEGREE`.
pub const CORPUS_MAX_DEGREE: i64 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "grassnef",
    version,
    about = "Positivity and nef cones of Grassmann and flag bundles from Harder-Narasimhan data"
)]
struct Cli {
    /// Emit the report as one JSON document
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// θ for quotient dimension r, with its breakdown
    Theta(Inputs),
    /// Ample / nef-not-ample / not-nef verdict for O(1) on Gr_r(E)
    Classify(Inputs),
    /// Extremal rays of a nef cone
    #[command(subcommand)]
    Cone(Target),
    /// Nef and ample membership of a class
    #[command(subcommand)]
    Member(Target),
    /// The graded pieces V_a of the r-th exterior power
    Vabundles(Inputs),
    /// Compare θ with the brute-force minimum, on one bundle or the built-in corpus
    OracleCheck(Inputs),
}

#[derive(Debug, Subcommand)]
enum Target {
    /// Grassmann bundle Gr_r(E)
    Gr(Inputs),
    /// Flag bundle Fl(E)
    Flag(Inputs),
}

#[derive(Debug, Args)]
struct Inputs {
    /// Bundle as inline JSON or @path
    #[arg(long)]
    bundle: Option<String>,
    /// Quotient dimension
    #[arg(long = "r", allow_negative_numbers = true)]
    r: Option<i64>,
    /// Quotient dimensions of a flag, e.g. 1,2
    #[arg(long)]
    flag: Option<String>,
    /// Class as JSON: [x.., y] or {"x": .., "y": ..}
    #[arg(long, allow_hyphen_values = true)]
    class: Option<String>,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Run the CLI on `argv` (including the program name).
pub fn run_command<A, T>(argv: A) -> Execution
where
    A: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Execution {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Execution {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    let mode = if cli.json {
        RenderMode::Json
    } else {
        RenderMode::Text
    };
    match dispatch(cli.command) {
        Ok(report) => {
            let code = match report.outcome {
                Outcome::OracleCheck { agree: false, .. } => 2,
                _ => 0,
            };
            let stderr = if code == 2 {
                "error: theta disagrees with the brute-force oracle\n".to_string()
            } else {
                String::new()
            };
            Execution {
                stdout: render_report(&report, mode),
                stderr,
                code,
            }
        }
        Err(e) => Execution {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}

struct Resolved {
    echo: InputEcho,
    h: Option<HnType<BigInt>>,
    ctx: FieldContext,
}

impl Inputs {
    fn resolve(&self, command: &str, needs: &[&str]) -> Result<Resolved, CliError> {
        let given = [
            ("bundle", self.bundle.is_some()),
            ("r", self.r.is_some()),
            ("flag", self.flag.is_some()),
            ("class", self.class.is_some()),
        ];
        for (name, present) in given {
            if present && !needs.contains(&name) {
                return Err(CliError::Usage(format!("--{name} is not used by `{command}`")));
            }
        }
        let mut echo = InputEcho {
            r: self.r,
            ..InputEcho::default()
        };
        let (h, ctx) = match &self.bundle {
            Some(text) => {
                let text = read_arg(text)?;
                let bundle = spec::read_bundle_spec(&text)?;
                let (h, ctx) = bundle.resolve()?;
                echo.bundle = Some(bundle);
                (Some(h), ctx)
            }
            None => (None, FieldContext::CharZero),
        };
        if let Some(f) = &self.flag {
            echo.flag = Some(parse_flag_dims(f)?);
        }
        if let Some(c) = &self.class {
            let coords = parse_class(&read_arg(c)?)?;
            echo.class = Some(coords.into_iter().map(RationalText).collect());
        }
        Ok(Resolved { echo, h, ctx })
    }
}

fn read_arg(text: &str) -> Result<String, CliError> {
    match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_string(),
            source,
        }),
        None => Ok(text.to_string()),
    }
}

fn required<T: Clone>(v: &Option<T>, flag: &str, command: &str) -> Result<T, CliError> {
    v.clone()
        .ok_or_else(|| CliError::Usage(format!("`{command}` needs --{flag}")))
}

fn json_ints(v: &[BigInt]) -> Vec<JsonInt> {
    v.iter().cloned().map(JsonInt).collect()
}

fn dispatch(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Theta(inputs) => {
            let res = inputs.resolve("theta", &["bundle", "r"])?;
            let h = required(&res.h, "bundle", "theta")?;
            let r = required(&res.echo.r, "r", "theta")?;
            let b = theta(&h, r, &res.ctx)?;
            Ok(Report {
                outcome: Outcome::Theta {
                    theta: b.theta.into(),
                    t: b.t,
                    s: b.s,
                    mu_t: b.mu_t.into(),
                    tail_rank: b.tail_rank,
                    tail_degree: b.tail_degree.into(),
                },
                input: res.echo,
            })
        }
        Command::Classify(inputs) => {
            let res = inputs.resolve("classify", &["bundle", "r"])?;
            let h = required(&res.h, "bundle", "classify")?;
            let r = required(&res.echo.r, "r", "classify")?;
            let class = classify_tautological(&h, r, &res.ctx)?;
            let th = theta(&h, r, &res.ctx)?.theta;
            Ok(Report {
                outcome: Outcome::Classify {
                    theta: th.into(),
                    classification: class.as_str().to_string(),
                },
                input: res.echo,
            })
        }
        Command::Cone(Target::Gr(inputs)) => {
            let res = inputs.resolve("cone gr", &["bundle", "r"])?;
            let h = required(&res.h, "bundle", "cone gr")?;
            let r = required(&res.echo.r, "r", "cone gr")?;
            let cone = grassmann_nef_cone(&h, r, &res.ctx)?;
            let rays = cone
                .rays()
                .iter()
                .map(|ray| json_ints(&[ray.u.clone(), ray.v.clone()]))
                .collect();
            Ok(Report {
                outcome: Outcome::ConeGr {
                    theta: cone.theta_used.into(),
                    p_delta: cone.p_delta.into(),
                    rays,
                },
                input: res.echo,
            })
        }
        Command::Cone(Target::Flag(inputs)) => {
            let res = inputs.resolve("cone flag", &["bundle", "flag"])?;
            let h = required(&res.h, "bundle", "cone flag")?;
            let dims = required(&res.echo.flag, "flag", "cone flag")?;
            let fl = FlagType::new(&dims, h.rank())?;
            let cone = flag_nef_cone(&h, &fl, &res.ctx)?;
            Ok(Report {
                outcome: Outcome::ConeFlag {
                    thetas: cone.thetas.iter().cloned().map(RationalText).collect(),
                    p_delta: cone.p_delta.clone().into(),
                    rays: cone.rays.iter().map(|r| json_ints(r)).collect(),
                },
                input: res.echo,
            })
        }
        Command::Member(Target::Gr(inputs)) => {
            let res = inputs.resolve("member gr", &["bundle", "r", "class"])?;
            let h = required(&res.h, "bundle", "member gr")?;
            let r = required(&res.echo.r, "r", "member gr")?;
            let coords = class_coords(&res.echo, "member gr")?;
            if coords.len() != 2 {
                return Err(grassnef::Error::DimensionMismatch {
                    expected: 2,
                    found: coords.len(),
                }
                .into());
            }
            let cone = grassmann_nef_cone(&h, r, &res.ctx)?;
            let c = NsClassGr::new(coords[0].clone(), coords[1].clone());
            Ok(Report {
                outcome: Outcome::MemberGr {
                    nef: is_nef_gr(&c, &cone),
                    ample: is_ample_gr(&c, &cone),
                    rays: cone
                        .rays()
                        .iter()
                        .map(|ray| json_ints(&[ray.u.clone(), ray.v.clone()]))
                        .collect(),
                },
                input: res.echo,
            })
        }
        Command::Member(Target::Flag(inputs)) => {
            let res = inputs.resolve("member flag", &["bundle", "flag", "class"])?;
            let h = required(&res.h, "bundle", "member flag")?;
            let dims = required(&res.echo.flag, "flag", "member flag")?;
            let mut coords = class_coords(&res.echo, "member flag")?;
            let fl = FlagType::new(&dims, h.rank())?;
            let cone = flag_nef_cone(&h, &fl, &res.ctx)?;
            let y = coords.pop().unwrap_or_default();
            let c = NsClassFlag::new(coords, y);
            Ok(Report {
                outcome: Outcome::MemberFlag {
                    nef: is_nef_flag(&c, &cone)?,
                    ample: is_ample_flag(&c, &cone)?,
                    rays: cone.rays.iter().map(|r| json_ints(r)).collect(),
                },
                input: res.echo,
            })
        }
        Command::Vabundles(inputs) => {
            let res = inputs.resolve("vabundles", &["bundle", "r"])?;
            let h = required(&res.h, "bundle", "vabundles")?;
            let r = required(&res.echo.r, "r", "vabundles")?;
            let bundles = enumerate_va(&h, r)?
                .into_iter()
                .map(|v| VaEntry {
                    a: v.composition,
                    rank: v.rank.into(),
                    degree: v.degree.into(),
                    slope_sum: v.slope_sum.into(),
                })
                .collect();
            let th = theta(&h, r, &res.ctx)?.theta;
            Ok(Report {
                outcome: Outcome::Vabundles {
                    theta: th.into(),
                    bundles,
                },
                input: res.echo,
            })
        }
        Command::OracleCheck(inputs) => {
            let res = inputs.resolve("oracle-check", &["bundle", "r"])?;
            let cases: Vec<(HnType<BigInt>, Vec<i64>)> = match (&res.h, res.echo.r) {
                (Some(h), Some(r)) => {
                    h.check_quotient_rank(r)?;
                    vec![(h.clone(), vec![r])]
                }
                (Some(h), None) => vec![(h.clone(), (1..h.rank() as i64).collect())],
                (None, Some(_)) => {
                    return Err(CliError::Usage("`oracle-check --r` needs --bundle".into()))
                }
                (None, None) => hn_types_up_to::<BigInt>(
                    CORPUS_MAX_RANK,
                    -CORPUS_MAX_DEGREE..=CORPUS_MAX_DEGREE,
                )
                .into_iter()
                .map(|h| {
                    let rs = (1..h.rank() as i64).collect();
                    (h, rs)
                })
                .collect(),
            };
            Ok(Report {
                outcome: oracle_check(&cases, &res.ctx)?,
                input: res.echo,
            })
        }
    }
}

fn class_coords(echo: &InputEcho, command: &str) -> Result<Vec<Rational>, CliError> {
    Ok(required(&echo.class, "class", command)?
        .into_iter()
        .map(|q| q.0)
        .collect())
}

fn oracle_check(cases: &[(HnType<BigInt>, Vec<i64>)], ctx: &FieldContext) -> Result<Outcome, CliError> {
    let mut count = 0u64;
    let mut mismatches = Vec::new();
    for (h, rs) in cases {
        for &r in rs {
            count += 1;
            let th = theta(h, r, ctx)?.theta;
            let oracle = theta_oracle(h, r)?;
            if th != oracle {
                mismatches.push(Mismatch {
                    pieces: h
                        .pieces()
                        .iter()
                        .map(|p| (JsonInt::from(p.rank() as i64), JsonInt(p.degree().clone())))
                        .collect(),
                    r,
                    theta: th.into(),
                    oracle: oracle.into(),
                });
            }
        }
    }
    Ok(Outcome::OracleCheck {
        cases: count,
        agree: mismatches.is_empty(),
        mismatches,
    })
}
