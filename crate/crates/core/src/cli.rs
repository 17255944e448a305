//! The `mcbc` command line: `construct`, `verify`, `serve`, `bounds`, `table`.
//!
//! Exit codes: 0 success or valid, 1 invalid code or unservable request,
//! 2 bad flags or malformed input, 3 construction precondition failed,
//! 4 enumeration cap exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::{
    construction_upper, exhaustive_optimal_n, known_exact_n, lower_bounds,
    profile_inequality_check, BoundsReport, SearchCaps,
};
use crate::constructions::{
    affine_plane_mcbc, construct_diagonal, construct_distance4, construct_from_cwc,
    construct_regular, construct_replication, construct_small_n_distinct, graham_sloane_cwc,
};
use crate::error::Error;
use crate::hall::{verify_multiset_hall, Witness};
use crate::io::{code_to_json, read_code};
use crate::request::MultisetRequest;
use crate::retrieval::{serve_request, verify_exhaustive_capped, DEFAULT_REQUEST_CAP};
use crate::setsystem::{block_profile, CodeParams, McbcCode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_CAP: i32 = 4;

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_u128(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Parser)]
#[command(name = "mcbc", version, about = "Multiset combinatorial batch codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Replication,
    SmallN,
    CwcGs,
    Distance4,
    Diagonal,
    SteinerAffine,
    Regular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Hall,
    Exhaustive,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code and print it as JSON.
    Construct {
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, value_parser = positive)]
        n: Option<usize>,
        #[arg(long, value_parser = positive)]
        k: Option<usize>,
        #[arg(long, value_parser = positive)]
        m: Option<usize>,
        #[arg(long, value_parser = positive)]
        r: Option<usize>,
        #[arg(long, value_parser = positive)]
        q: Option<usize>,
    },
    /// Check a code file for the given (k, r, t).
    Verify {
        /// Code JSON file, or `-` for stdin.
        #[arg(long)]
        code: PathBuf,
        #[arg(long, value_parser = positive)]
        k: usize,
        #[arg(long, value_parser = positive, default_value_t = 1)]
        r: usize,
        #[arg(long, value_parser = positive, default_value_t = 1)]
        t: usize,
        #[arg(long, value_enum, default_value_t = Mode::Hall)]
        mode: Mode,
        /// Maximum number of requests the exhaustive mode may enumerate.
        #[arg(long, value_parser = positive_u128, default_value_t = DEFAULT_REQUEST_CAP)]
        cap: u128,
    },
    /// Compute read sets for one request such as `3,3,4,4,5`.
    Serve {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        request: String,
        #[arg(long, value_parser = positive, default_value_t = 1)]
        t: usize,
        /// Reject requests larger than k.
        #[arg(long, value_parser = positive)]
        k: Option<usize>,
        /// Reject requests with an item more than r times.
        #[arg(long, value_parser = positive)]
        r: Option<usize>,
    },
    /// Report bounds on the minimum storage N(n, k, m; r) as JSON.
    Bounds {
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long, value_parser = positive)]
        k: usize,
        #[arg(long, value_parser = positive)]
        m: usize,
        #[arg(long, value_parser = positive)]
        r: usize,
        /// Also run the exhaustive optimum search.
        #[arg(long)]
        search: bool,
        /// Write the optimal code found by the search to this file.
        #[arg(long, requires = "search")]
        witness_out: Option<PathBuf>,
        #[arg(long, value_parser = positive, default_value_t = 5)]
        max_n: usize,
        #[arg(long, value_parser = positive, default_value_t = 5)]
        max_m: usize,
        #[arg(long, value_parser = positive, default_value_t = 5)]
        max_k: usize,
    },
    /// Tab-separated lower / exact / upper storage over a range of n.
    Table {
        #[arg(long, value_parser = positive)]
        k: usize,
        #[arg(long, value_parser = positive)]
        m: usize,
        #[arg(long, value_parser = positive)]
        r: usize,
        #[arg(long, value_parser = positive)]
        n_from: usize,
        #[arg(long, value_parser = positive)]
        n_to: usize,
    },
}

/// Failure carrying its exit code and message.
struct Exit(i32, String);

impl Exit {
    fn usage(msg: impl Into<String>) -> Self {
        Exit(EXIT_USAGE, msg.into())
    }
}

/// Default mapping: parameter problems are usage errors, caps exit 4.
fn classify(e: Error) -> Exit {
    match e {
        Error::CapExceeded { .. } => Exit(EXIT_CAP, e.to_string()),
        _ => Exit(EXIT_USAGE, e.to_string()),
    }
}

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Construct {
            method,
            n,
            k,
            m,
            r,
            q,
        } => construct(method, n, k, m, r, q, out, err),
        Command::Verify {
            code,
            k,
            r,
            t,
            mode,
            cap,
        } => verify(&code, k, r, t, mode, cap, out),
        Command::Serve {
            code,
            request,
            t,
            k,
            r,
        } => serve(&code, &request, t, k, r, out),
        Command::Bounds {
            n,
            k,
            m,
            r,
            search,
            witness_out,
            max_n,
            max_m,
            max_k,
        } => bounds(
            n,
            k,
            m,
            r,
            search.then_some(SearchCaps {
                max_n,
                max_m,
                max_k,
            }),
            witness_out,
            out,
        ),
        Command::Table {
            k,
            m,
            r,
            n_from,
            n_to,
        } => table(k, m, r, n_from, n_to, out),
    };
    match result {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn need(name: &str, v: Option<usize>, method: Method) -> Result<usize, Exit> {
    let method = method.to_possible_value().expect("no skipped variants");
    v.ok_or_else(|| {
        Exit::usage(format!(
            "--{name} is required for method {}",
            method.get_name()
        ))
    })
}

fn implied(name: &str, given: Option<usize>, value: usize, rule: &str) -> Result<(), Exit> {
    match given {
        Some(v) if v != value => Err(Exit(
            EXIT_PRECONDITION,
            format!("this method needs {name} = {rule} = {value}, got {v}"),
        )),
        _ => Ok(()),
    }
}

#[allow(clippy::too_many_arguments)]
fn construct(
    method: Method,
    n: Option<usize>,
    k: Option<usize>,
    m: Option<usize>,
    r: Option<usize>,
    q: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Exit> {
    let pre = |e: Error| Exit(EXIT_PRECONDITION, e.to_string());
    let k = need("k", k, method)?;
    let (code, r): (McbcCode, usize) = match method {
        Method::Replication => {
            let r = need("r", r, method)?;
            (
                construct_replication(need("n", n, method)?, k, need("m", m, method)?, r)
                    .map_err(pre)?,
                r,
            )
        }
        Method::SmallN => {
            implied("r", r, k.saturating_sub(1), "k - 1")?;
            (
                construct_small_n_distinct(need("n", n, method)?, k, need("m", m, method)?)
                    .map_err(pre)?,
                k - 1,
            )
        }
        Method::CwcGs => {
            let r = need("r", r, method)?;
            let m = need("m", m, method)?;
            let w = r.max(k.saturating_sub(2));
            let cwc = graham_sloane_cwc(m, w).map_err(pre)?;
            let cwc = match n {
                Some(n) if n > cwc.len() => {
                    return Err(Exit(
                        EXIT_PRECONDITION,
                        format!(
                            "need n <= {} codewords of weight {w}, got n = {n}",
                            cwc.len()
                        ),
                    ))
                }
                Some(n) => cwc.truncated(n),
                None => cwc,
            };
            (construct_from_cwc(&cwc, k, r).map_err(pre)?, r)
        }
        Method::Distance4 => {
            let r = need("r", r, method)?;
            (
                construct_distance4(need("n", n, method)?, k, need("m", m, method)?, r)
                    .map_err(pre)?,
                r,
            )
        }
        Method::Diagonal => {
            implied("m", m, k, "k")?;
            let r = need("r", r, method)?;
            (
                construct_diagonal(need("n", n, method)?, k, r).map_err(pre)?,
                r,
            )
        }
        Method::SteinerAffine => {
            let r = need("r", r, method)?;
            (
                affine_plane_mcbc(need("q", q, method)?, k, r).map_err(pre)?,
                r,
            )
        }
        Method::Regular => {
            implied("r", r, k, "k")?;
            (
                construct_regular(need("n", n, method)?, k, need("m", m, method)?).map_err(pre)?,
                k,
            )
        }
    };
    writeln!(out, "{}", code_to_json(&code)).map_err(|e| classify(e.into()))?;
    let _ = writeln!(
        err,
        "n={} m={} N={} k={} r={}",
        code.n(),
        code.m(),
        code.storage(),
        k,
        r
    );
    Ok(EXIT_OK)
}

fn load(path: &std::path::Path) -> Result<McbcCode, Exit> {
    read_code(path).map_err(|e| Exit::usage(format!("{}: {e}", path.display())))
}

fn verify(
    path: &std::path::Path,
    k: usize,
    r: usize,
    t: usize,
    mode: Mode,
    cap: u128,
    out: &mut dyn Write,
) -> Result<i32, Exit> {
    let code = load(path)?;
    let params = CodeParams::new(code.n(), k, code.m(), t, r).map_err(classify)?;
    let result = match mode {
        Mode::Hall => {
            if t != 1 {
                return Err(Exit::usage(
                    "hall mode requires t = 1; use --mode exhaustive",
                ));
            }
            verify_multiset_hall(code.item_view(), k, r).map_err(classify)?
        }
        Mode::Exhaustive => verify_exhaustive_capped(&code, &params, cap).map_err(classify)?,
    };
    let mut text = String::new();
    text.push_str(if result.valid { "valid\n" } else { "invalid\n" });
    match &result.witness {
        Some(Witness::Blocks(idx)) => {
            let idx: Vec<String> = idx.iter().map(usize::to_string).collect();
            text.push_str(&format!("blocks: {}\n", idx.join(" ")));
        }
        Some(Witness::Request(req)) => text.push_str(&format!("request: {req}\n")),
        None => {}
    }
    let profile = block_profile(code.item_view(), k);
    let counts: Vec<String> = profile
        .counts
        .iter()
        .enumerate()
        .map(|(i, c)| format!("A{i}={c}"))
        .collect();
    text.push_str(&format!(
        "profile: {} overflow={}\n",
        counts.join(" "),
        profile.overflow
    ));
    let inequality = match profile_inequality_check(&profile, k, code.m(), r) {
        Ok(true) => "holds",
        Ok(false) => "violated",
        Err(_) => "n/a",
    };
    text.push_str(&format!("profile inequality: {inequality}\n"));
    text.push_str(&format!(
        "n={} m={} N={}\n",
        code.n(),
        code.m(),
        code.storage()
    ));
    out.write_all(text.as_bytes())
        .map_err(|e| classify(e.into()))?;
    Ok(if result.valid { EXIT_OK } else { EXIT_INVALID })
}

fn serve(
    path: &std::path::Path,
    request: &str,
    t: usize,
    k: Option<usize>,
    r: Option<usize>,
    out: &mut dyn Write,
) -> Result<i32, Exit> {
    let code = load(path)?;
    let req: MultisetRequest = request.parse().map_err(classify)?;
    req.check_items(code.n()).map_err(classify)?;
    if let Some(r) = r {
        if let Some((i, c)) = req.iter().find(|&(_, c)| c > r) {
            return Err(Exit::usage(format!(
                "item {i} requested {c} times, more than r = {r}"
            )));
        }
    }
    if let Some(k) = k {
        if req.size() > k {
            return Err(Exit::usage(format!(
                "request size {} exceeds k = {k}",
                req.size()
            )));
        }
    }
    let text = match serve_request(&code, &req, t).map_err(classify)? {
        Some(a) => {
            let mut text = String::new();
            for (j, d) in a.reads.iter().enumerate().filter(|(_, d)| !d.is_empty()) {
                let items: Vec<String> = d.iter().map(usize::to_string).collect();
                text.push_str(&format!("server {}: {}\n", j + 1, items.join(" ")));
            }
            out.write_all(text.as_bytes())
                .map_err(|e| classify(e.into()))?;
            return Ok(EXIT_OK);
        }
        None => "INFEASIBLE\n",
    };
    out.write_all(text.as_bytes())
        .map_err(|e| classify(e.into()))?;
    Ok(EXIT_INVALID)
}

fn bounds(
    n: usize,
    k: usize,
    m: usize,
    r: usize,
    search: Option<SearchCaps>,
    witness_out: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32, Exit> {
    let mut report = BoundsReport::compute(n, k, m, r).map_err(classify)?;
    if let Some(caps) = search {
        let found = exhaustive_optimal_n(n, k, m, r, caps).map_err(classify)?;
        report.search_exact = Some(found.value);
        if let Some(path) = witness_out {
            std::fs::write(&path, code_to_json(&found.witness) + "\n")
                .map_err(|e| classify(e.into()))?;
        }
    }
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    writeln!(out, "{json}").map_err(|e| classify(e.into()))?;
    Ok(EXIT_OK)
}

fn table(
    k: usize,
    m: usize,
    r: usize,
    n_from: usize,
    n_to: usize,
    out: &mut dyn Write,
) -> Result<i32, Exit> {
    if n_from > n_to {
        return Err(Exit::usage(format!("empty range {n_from}..{n_to}")));
    }
    let cell = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
    let mut text = String::from("n\tlower\texact\tupper\n");
    for n in n_from..=n_to {
        let lower = lower_bounds(n, k, m, r).ok().map(|l| l.best());
        let exact = known_exact_n(n, k, m, r).map(|v| v.value);
        let upper = construction_upper(n, k, m, r)
            .ok()
            .flatten()
            .map(|l| l.value);
        text.push_str(&format!(
            "{n}\t{}\t{}\t{}\n",
            cell(lower),
            cell(exact),
            cell(upper)
        ));
    }
    out.write_all(text.as_bytes())
        .map_err(|e| classify(e.into()))?;
    Ok(EXIT_OK)
}
