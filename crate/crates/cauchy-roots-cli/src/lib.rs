//! Command-line front end: exact parsing of polynomials, points, and loops;
//! one subcommand per counting/evaluation capability; a single JSON object
//! on stdout with the result and an auditable certificate; disciplined exit
//! codes (0 success, 2 root on border, 3 degenerate input, 4 parse error,
//! 5 internal invariant breach).

pub mod parse;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use cauchy_roots::counting::{proots_half, proots_rectangle, proots_upper, BorderCheck, Rectangle};
use cauchy_roots::exactnum::{GaussianRational, Rational};
use cauchy_roots::isolate::isolate_roots;
use cauchy_roots::path::{winding_number, ArcSeg, LineSeg, Loop, PathSeg};
use cauchy_roots::poly::GaussPoly;
use cauchy_roots::Error as LibError;

use parse::{parse_point, parse_poly, parse_rational, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ROOT_ON_BORDER: i32 = 2;
pub const EXIT_DEGENERATE_INPUT: i32 = 3;
pub const EXIT_PARSE_ERROR: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

#[derive(Parser)]
#[command(
    name = "cauchy-roots",
    version,
    about = "Exact complex root counting and winding numbers over the Gaussian rationals"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count roots (with multiplicity) strictly inside an open rectangle.
    CountRect {
        /// Polynomial, e.g. "x^2 - 2*i*x - 1"
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Lower-left corner, e.g. "-1" or "1/2 - 2*i"
        #[arg(long, allow_hyphen_values = true)]
        ll: String,
        /// Upper-right corner
        #[arg(long, allow_hyphen_values = true)]
        ur: String,
    },
    /// Count roots (with multiplicity) in the open upper half-plane.
    CountUpper {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Count roots (with multiplicity) in the open half-plane to the left
    /// of the vector from A to B.
    CountHalf {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Routh-Hurwitz test: are all roots strictly in the left half-plane?
    Stable {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Isolate all roots into disjoint rectangles, one distinct root each.
    Isolate {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Refine boxes until both sides are at most this wide.
        #[arg(long, value_name = "RATIONAL")]
        max_width: Option<String>,
    },
    /// Winding number of a closed loop (JSON file) about a point.
    Winding {
        /// Loop description file; see the book for the JSON format.
        #[arg(long = "loop", value_name = "FILE")]
        loop_file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
}

/// Runs the CLI on the given argv (first element is the program name) and
/// returns the exit code plus everything destined for stdout.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion
            ) =>
        {
            return (EXIT_OK, e.to_string());
        }
        Err(e) => {
            return emit_error(EXIT_PARSE_ERROR, &e.to_string(), None);
        }
    };
    match dispatch(cli) {
        Ok(value) => (EXIT_OK, to_line(&value)),
        Err(failure) => failure,
    }
}

type Failure = (i32, String);

fn dispatch(cli: Cli) -> Result<Value, Failure> {
    match cli.cmd {
        Cmd::CountRect { poly, ll, ur } => {
            let p = parse_poly_arg(&poly)?;
            let ll = parse_point_arg(&ll, "--ll")?;
            let ur = parse_point_arg(&ur, "--ur")?;
            let rect = Rectangle::new(ll, ur).map_err(lib_failure)?;
            let report =
                with_thread_cap(|| proots_rectangle(&p, &rect))?.map_err(lib_failure)?;
            Ok(json!({
                "result": report.count,
                "certificate": {
                    "region": {
                        "kind": "rectangle",
                        "lower_left": gauss_json(rect.lower_left()),
                        "upper_right": gauss_json(rect.upper_right()),
                    },
                    "edges": border_edges_json(&report.border),
                },
            }))
        }
        Cmd::CountUpper { poly } => {
            let p = parse_poly_arg(&poly)?;
            let report = proots_upper(&p).map_err(lib_failure)?;
            Ok(json!({
                "result": report.count,
                "certificate": {
                    "region": { "kind": "upper-half-plane" },
                    "border_root_free": true,
                    "variation": axis_variation(&report.border),
                },
            }))
        }
        Cmd::CountHalf { poly, a, b } => {
            let p = parse_poly_arg(&poly)?;
            let a = parse_point_arg(&a, "--a")?;
            let b = parse_point_arg(&b, "--b")?;
            let report = proots_half(&p, &a, &b).map_err(lib_failure)?;
            Ok(json!({
                "result": report.count,
                "certificate": {
                    "region": {
                        "kind": "half-plane",
                        "a": gauss_json(&a),
                        "b": gauss_json(&b),
                    },
                    "border_root_free": true,
                    "variation": axis_variation(&report.border),
                },
            }))
        }
        Cmd::Stable { poly } => {
            let p = parse_poly_arg(&poly)?;
            let degree = match p.degree() {
                None => return Err(lib_failure(LibError::ZeroPolynomial)),
                Some(0) => return Err(lib_failure(LibError::ConstantPolynomial)),
                Some(d) => d,
            };
            match proots_half(&p, &GaussianRational::zero(), &GaussianRational::i()) {
                Ok(report) => Ok(json!({
                    "result": report.count as usize == degree,
                    "certificate": {
                        "degree": degree,
                        "left_half_plane_count": report.count,
                        "border_root_free": true,
                    },
                })),
                Err(LibError::RootOnBorder(_)) => Ok(json!({
                    "result": false,
                    "certificate": {
                        "degree": degree,
                        "left_half_plane_count": null,
                        "border_root_free": false,
                    },
                })),
                Err(other) => Err(lib_failure(other)),
            }
        }
        Cmd::Isolate { poly, max_width } => {
            let p = parse_poly_arg(&poly)?;
            let width = match max_width {
                None => None,
                Some(text) => Some(parse_rational_arg(&text, "--max-width")?),
            };
            let boxes =
                with_thread_cap(|| isolate_roots(&p, width.as_ref()))?.map_err(lib_failure)?;
            let total: u32 = boxes.iter().map(|b| b.multiplicity).sum();
            let result: Vec<Value> = boxes
                .iter()
                .map(|b| {
                    json!({
                        "lower_left": gauss_json(b.rect.lower_left()),
                        "upper_right": gauss_json(b.rect.upper_right()),
                        "multiplicity": b.multiplicity,
                    })
                })
                .collect();
            Ok(json!({
                "result": result,
                "certificate": {
                    "degree": p.degree().expect("nonzero"),
                    "distinct_roots": boxes.len(),
                    "multiplicity_total": total,
                },
            }))
        }
        Cmd::Winding { loop_file, point } => {
            let z0 = parse_point_arg(&point, "--point")?;
            let text = std::fs::read_to_string(&loop_file).map_err(|e| {
                emit_error(
                    EXIT_DEGENERATE_INPUT,
                    &format!("cannot read loop file {}: {e}", loop_file.display()),
                    None,
                )
            })?;
            let l = parse_loop_json(&text)?;
            let indices: Result<Vec<String>, LibError> = l
                .segments()
                .iter()
                .map(|seg| seg.cindex(&z0).map(|h| h.to_string()))
                .collect();
            let indices = indices.map_err(lib_failure)?;
            let n = winding_number(&l, &z0).map_err(lib_failure)?;
            Ok(json!({
                "result": n,
                "certificate": {
                    "point": gauss_json(&z0),
                    "segment_indices": indices,
                },
            }))
        }
    }
}

/// Caps rayon concurrency by CAUCHY_ROOTS_THREADS when set.
fn with_thread_cap<F, R>(f: F) -> Result<R, Failure>
where
    F: FnOnce() -> R + Send,
    R: Send,
{
    match std::env::var("CAUCHY_ROOTS_THREADS") {
        Err(_) => Ok(f()),
        Ok(raw) => {
            let threads: usize = raw
                .trim()
                .parse()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| {
                    emit_error(
                        EXIT_DEGENERATE_INPUT,
                        &format!("CAUCHY_ROOTS_THREADS must be a positive integer, got '{raw}'"),
                        None,
                    )
                })?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| emit_error(EXIT_INTERNAL, &e.to_string(), None))?;
            Ok(pool.install(f))
        }
    }
}

fn to_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn emit_error(code: i32, message: &str, parse: Option<&ParseError>) -> Failure {
    let body = match parse {
        Some(pe) => json!({
            "error": message,
            "position": pe.pos,
            "expected": pe.expected,
        }),
        None => json!({ "error": message }),
    };
    (code, to_line(&body))
}

fn parse_poly_arg(text: &str) -> Result<GaussPoly, Failure> {
    if text.trim_start().starts_with('[') {
        return parse_poly_coeff_json(text);
    }
    parse_poly(text)
        .map_err(|e| emit_error(EXIT_PARSE_ERROR, &format!("--poly: {e}"), Some(&e)))
}

/// JSON coefficient form: ascending degree, each entry an exact
/// ["re", "im"] string pair.
fn parse_poly_coeff_json(text: &str) -> Result<GaussPoly, Failure> {
    let entries: Vec<[String; 2]> = serde_json::from_str(text).map_err(|e| {
        emit_error(
            EXIT_PARSE_ERROR,
            &format!("--poly: bad coefficient list: {e}"),
            None,
        )
    })?;
    let mut coeffs = Vec::with_capacity(entries.len());
    for (k, [re, im]) in entries.iter().enumerate() {
        let re = parse_rational(re).map_err(|e| {
            emit_error(
                EXIT_PARSE_ERROR,
                &format!("--poly: coefficient {k} real part: {e}"),
                Some(&e),
            )
        })?;
        let im = parse_rational(im).map_err(|e| {
            emit_error(
                EXIT_PARSE_ERROR,
                &format!("--poly: coefficient {k} imaginary part: {e}"),
                Some(&e),
            )
        })?;
        coeffs.push(GaussianRational::new(re, im));
    }
    Ok(GaussPoly::from_coeffs(coeffs))
}

fn parse_point_arg(text: &str, flag: &str) -> Result<GaussianRational, Failure> {
    parse_point(text)
        .map_err(|e| emit_error(EXIT_PARSE_ERROR, &format!("{flag}: {e}"), Some(&e)))
}

fn parse_rational_arg(text: &str, flag: &str) -> Result<Rational, Failure> {
    parse_rational(text)
        .map_err(|e| emit_error(EXIT_PARSE_ERROR, &format!("{flag}: {e}"), Some(&e)))
}

#[derive(Deserialize)]
struct LoopFile {
    segments: Vec<SegDto>,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum SegDto {
    Line {
        a: [String; 2],
        b: [String; 2],
    },
    Arc {
        center: [String; 2],
        radius: String,
        from_quarter: i64,
        to_quarter: i64,
    },
}

fn gauss_from_pair(pair: &[String; 2], what: &str) -> Result<GaussianRational, Failure> {
    let re = parse_rational(&pair[0]).map_err(|e| {
        emit_error(EXIT_PARSE_ERROR, &format!("{what} real part: {e}"), Some(&e))
    })?;
    let im = parse_rational(&pair[1]).map_err(|e| {
        emit_error(
            EXIT_PARSE_ERROR,
            &format!("{what} imaginary part: {e}"),
            Some(&e),
        )
    })?;
    Ok(GaussianRational::new(re, im))
}

fn parse_loop_json(text: &str) -> Result<Loop, Failure> {
    let file: LoopFile = serde_json::from_str(text)
        .map_err(|e| emit_error(EXIT_PARSE_ERROR, &format!("loop file: {e}"), None))?;
    let mut segs = Vec::with_capacity(file.segments.len());
    for (k, dto) in file.segments.iter().enumerate() {
        let seg = match dto {
            SegDto::Line { a, b } => PathSeg::Line(LineSeg::new(
                gauss_from_pair(a, &format!("segment {k} point a"))?,
                gauss_from_pair(b, &format!("segment {k} point b"))?,
            )),
            SegDto::Arc {
                center,
                radius,
                from_quarter,
                to_quarter,
            } => {
                let center = gauss_from_pair(center, &format!("segment {k} center"))?;
                let radius = parse_rational(radius).map_err(|e| {
                    emit_error(
                        EXIT_PARSE_ERROR,
                        &format!("segment {k} radius: {e}"),
                        Some(&e),
                    )
                })?;
                PathSeg::Arc(
                    ArcSeg::new(center, radius, *from_quarter, *to_quarter)
                        .map_err(lib_failure)?,
                )
            }
        };
        segs.push(seg);
    }
    Loop::new(segs).map_err(lib_failure)
}

fn gauss_json(z: &GaussianRational) -> Value {
    json!([z.re().to_string(), z.im().to_string()])
}

fn border_edges_json(border: &[BorderCheck]) -> Value {
    let edges: Vec<Value> = border
        .iter()
        .map(|check| match check {
            BorderCheck::Edge {
                start,
                end,
                no_root,
                variation,
            } => json!({
                "start": gauss_json(start),
                "end": gauss_json(end),
                "no_root_on_edge": no_root,
                "variation": variation,
            }),
            BorderCheck::RealAxis { no_root, variation } => json!({
                "real_axis_root_free": no_root,
                "variation": variation,
            }),
        })
        .collect();
    Value::Array(edges)
}

fn axis_variation(border: &[BorderCheck]) -> i64 {
    border
        .iter()
        .find_map(|check| match check {
            BorderCheck::RealAxis { variation, .. } => Some(*variation),
            _ => None,
        })
        .expect("half-plane reports carry a real-axis check")
}

fn exit_code_for(e: &LibError) -> i32 {
    match e {
        LibError::RootOnBorder(_) => EXIT_ROOT_ON_BORDER,
        LibError::ZeroPolynomial
        | LibError::ConstantPolynomial
        | LibError::DegenerateRectangle
        | LibError::DegenerateDirection
        | LibError::BadInterval
        | LibError::EndpointIsRoot
        | LibError::BothZero
        | LibError::ZeroDenominator
        | LibError::NotClosed
        | LibError::EmptyLoop
        | LibError::PointOnPath
        | LibError::InvalidArc(_) => EXIT_DEGENERATE_INPUT,
        LibError::NotDivisible
        | LibError::NonIntegerResult
        | LibError::NoConvergence
        | LibError::TooCloseToPath
        | LibError::NumericOverflow
        | LibError::Internal(_) => EXIT_INTERNAL,
    }
}

fn lib_failure(e: LibError) -> Failure {
    emit_error(exit_code_for(&e), &e.to_string(), None)
}
