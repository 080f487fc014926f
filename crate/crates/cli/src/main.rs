use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tropinv::embed::{self, SampleBox};
use tropinv::invariants;
use tropinv::io;
use tropinv::polytope::newton_polytope;
use tropinv::rational::{self, Rational};
use tropinv::rewrite;
use tropinv::{Error, Exponent, TropPoly, TropScalar};

#[derive(Parser)]
#[command(name = "tropinv", version, about = "Exact tropical invariant theory for permutation groups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical form of a polynomial.
    Canon { poly: PathBuf },
    /// Equality as functions; exits 1 and prints a witness when different.
    Equal { f: PathBuf, g: PathBuf },
    /// Evaluate a polynomial at a rational point.
    Eval {
        poly: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Newton polytope of a polynomial.
    Newton { poly: PathBuf },
    /// Transfer (orbit sum) of a polynomial.
    Transfer {
        #[arg(long)]
        group: PathBuf,
        poly: PathBuf,
    },
    /// Elementary symmetric polynomial e_k in n variables.
    Efun {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Write Tr_{S_n}(x^gamma) as a product of elementary symmetric polynomials.
    Decompose {
        #[arg(long)]
        gamma: String,
    },
    /// Generators of the invariant semiring, when finitely generated.
    Generators {
        #[arg(long)]
        group: PathBuf,
    },
    /// Separating invariant set of a group.
    Separating {
        #[arg(long)]
        group: PathBuf,
    },
    /// Evaluate the orbit embedding at a point.
    Embed {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Squared orbit distance between two points.
    Distance {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Empirical distortion of the orbit embedding.
    Distortion {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = -10, allow_hyphen_values = true)]
        lo: i64,
        #[arg(long, default_value_t = 10, allow_hyphen_values = true)]
        hi: i64,
        #[arg(long, default_value_t = 4)]
        max_den: u32,
    },
    /// Rewrite Tr_G(x^beta) in transfers of exponents below the primorial bound.
    Rewrite {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        beta: String,
    },
    /// Factor a univariate Boolean rational function as x^a (1+x)^b.
    FactorBx { rational: PathBuf },
    /// Edge-direction counts of orbit polytopes for bounds 1..=B.
    Census {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        bound: u64,
    },
}

/// Result of a command: what to print and the exit code on success.
struct Output {
    json: Value,
    text: String,
    code: u8,
}

impl Output {
    fn ok(json: Value, text: impl Into<String>) -> Self {
        Output {
            json,
            text: text.into(),
            code: 0,
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Schema(_) => 2,
        Error::Resource(_) => 3,
        _ => 4,
    }
}

fn read_json(path: &Path) -> Result<Value, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Schema(format!("cannot read {}: {e}", path.display())))?;
    io::parse_json(&text)
}

fn read_poly(path: &Path) -> Result<TropPoly, Error> {
    io::poly_from_json(&read_json(path)?)
}

fn read_group(path: &Path) -> Result<tropinv::PermGroup, Error> {
    io::group_from_json(&read_json(path)?)
}

fn parse_exponent(s: &str) -> Result<Exponent, Error> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Schema(format!("bad exponent entry {t:?}")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Exponent::new)
}

fn scalar_text(s: &TropScalar) -> String {
    match s.finite() {
        Some(r) => rational::format(r),
        None => "-inf".into(),
    }
}

fn vector_text(v: &[Rational]) -> String {
    v.iter().map(rational::format).collect::<Vec<_>>().join(",")
}

fn polys_text(fs: &[TropPoly]) -> String {
    fs.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("\n")
}

fn run(cmd: Command) -> Result<Output, Error> {
    Ok(match cmd {
        Command::Canon { poly } => {
            let f = read_poly(&poly)?.canonicalize();
            Output::ok(io::poly_to_json(&f), f.to_string())
        }
        Command::Equal { f, g } => {
            let (f, g) = (read_poly(&f)?, read_poly(&g)?);
            match f.witness_point(&g)? {
                None => Output::ok(json!({"equal": true}), "equal"),
                Some(w) => {
                    let (fv, gv) = (f.evaluate(&w)?, g.evaluate(&w)?);
                    Output {
                        json: json!({
                            "equal": false,
                            "witness": io::rationals_to_json(&w),
                            "f": scalar_text(&fv),
                            "g": scalar_text(&gv),
                        }),
                        text: format!(
                            "different\nwitness {}\nf = {}\ng = {}",
                            vector_text(&w),
                            scalar_text(&fv),
                            scalar_text(&gv)
                        ),
                        code: 1,
                    }
                }
            }
        }
        Command::Eval { poly, at } => {
            let v = rational::parse_vector(&at)?;
            let s = read_poly(&poly)?.evaluate(&v)?;
            Output::ok(json!({"value": scalar_text(&s)}), scalar_text(&s))
        }
        Command::Newton { poly } => {
            let p = newton_polytope(&read_poly(&poly)?);
            let text = p.vertices().iter().map(|e| e.to_string()).collect::<Vec<_>>().join("\n");
            Output::ok(io::polytope_to_json(&p), text)
        }
        Command::Transfer { group, poly } => {
            let f = read_group(&group)?.transfer(&read_poly(&poly)?)?;
            Output::ok(io::poly_to_json(&f), f.to_string())
        }
        Command::Efun { n, k } => {
            let f = invariants::elementary_symmetric(n, k)?;
            Output::ok(io::poly_to_json(&f), f.to_string())
        }
        Command::Decompose { gamma } => {
            let d = invariants::sn_decompose(&parse_exponent(&gamma)?);
            let text = d
                .c
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, c)| format!("e{}^{}", i + 1, c))
                .collect::<Vec<_>>()
                .join(" ");
            let text = if text.is_empty() { "1".into() } else { text };
            Output::ok(serde_json::to_value(&d).expect("serializes"), text)
        }
        Command::Generators { group } => {
            let gens = invariants::finite_generators(&read_group(&group)?)?;
            Output::ok(
                Value::Array(gens.iter().map(io::poly_to_json).collect()),
                polys_text(&gens),
            )
        }
        Command::Separating { group } => {
            let spec = embed::separating_set(&read_group(&group)?)?;
            let text = format!(
                "m = {}\ne: {}\nf: {}",
                spec.m(),
                spec.e_list().iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ; "),
                spec.f_list().iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ; "),
            );
            Output::ok(io::spec_to_json(&spec), text)
        }
        Command::Embed { spec, at } => {
            let spec = io::spec_from_json(&read_json(&spec)?)?;
            let phi = embed::embed(&spec, &rational::parse_vector(&at)?)?;
            Output::ok(io::rationals_to_json(&phi), vector_text(&phi))
        }
        Command::Distance { group, v, w } => {
            let g = read_group(&group)?;
            let d2 = embed::orbit_distance(&g, &rational::parse_vector(&v)?, &rational::parse_vector(&w)?)?;
            let approx = rational::sqrt_decimal(&d2, embed::REPORT_DIGITS);
            Output::ok(
                json!({"squared_distance": rational::format(&d2), "distance": approx}),
                format!("squared {}\ndistance ~ {}", rational::format(&d2), approx),
            )
        }
        Command::Distortion {
            spec,
            samples,
            seed,
            lo,
            hi,
            max_den,
        } => {
            let spec = io::spec_from_json(&read_json(&spec)?)?;
            let bounds = SampleBox { lo, hi, max_den };
            let r = embed::distortion_estimate(&spec, samples, seed, &bounds)?;
            Output::ok(serde_json::to_value(&r).expect("serializes"), r.to_text())
        }
        Command::Rewrite { group, beta } => {
            let g = read_group(&group)?;
            let expr = rewrite::rewrite_transfer(&g, &parse_exponent(&beta)?)?;
            let json = expr.to_json();
            let text = serde_json::to_string(&json).expect("serializes");
            Output::ok(json, text)
        }
        Command::FactorBx { rational } => {
            let r = io::trop_rational_from_json(&read_json(&rational)?)?;
            let (a, b) = rewrite::factor_boolean_univariate(&r)?;
            Output::ok(json!({"a": a, "b": b}), format!("x^{a} (1+x)^{b}"))
        }
        Command::Census { group, bound } => {
            let g = read_group(&group)?;
            let mut rows = Vec::new();
            let mut text = format!("{:>4} {:>6}\n", "B", "count");
            for b in 1..=bound {
                let c = invariants::edge_direction_census(&g, b)?;
                rows.push(json!({"bound": b, "count": c}));
                text.push_str(&format!("{b:>4} {c:>6}\n"));
            }
            Output::ok(Value::Array(rows), text.trim_end().to_string())
        }
    })
}

fn emit(out: &Output, format: Format, path: Option<&Path>) -> std::io::Result<()> {
    let mut body = match format {
        Format::Json => serde_json::to_string_pretty(&out.json).expect("serializes"),
        Format::Text => out.text.clone(),
    };
    body.push('\n');
    match path {
        Some(p) => fs::write(p, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => match emit(&out, cli.format, cli.output.as_deref()) {
            Ok(()) => ExitCode::from(out.code),
            Err(e) => {
                eprintln!("error: cannot write output: {e}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
