//! Command-line front end for the `walls` enumeration library.
//!
//! [`run`] parses arguments, dispatches to a command and returns the exit
//! status: 0 success, 1 failed check or mismatch, 2 usage error, 3 poset
//! capacity exceeded.

pub mod args;
pub mod error;
pub mod oeis;
pub mod table;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::Parser;
use walls::exact_arith::ln_nat;
use walls::poset_lab::{a_brute, b3_brute, b_brute, build_f, build_ftilde, build_u, f_closed, family_sum, ftilde, u_from_b};
use walls::series_engine::{dk_by_kernel, dk_closed, dk_from_table};
use walls::tree_child::{tc_asym_ln, tc_asym_relative_error, TreeChildCounter};
use walls::wall_tables::{ATable, B3Table};

use args::{Cli, Command, Format, Method, Opts, Seq};
use error::{usage, CliError, Result};

pub const CACHE_ENV: &str = "WALLS_CACHE_DIR";

/// Largest index compared by `crosscheck` unless `--nmax` says otherwise.
pub const CROSSCHECK_LIMIT: usize = 60;

const FETCH_TIMEOUT: Duration = Duration::from_secs(5);

pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    let opts = &cli.opts;
    match cli.command {
        Command::Table => run_table(opts, out, err),
        Command::Verify => run_verify(opts, out),
        Command::Series => run_series(opts, out),
        Command::Oracle => run_oracle(opts, out),
        Command::Crosscheck => run_crosscheck(opts, out, err),
        Command::Asym => run_asym(opts, out),
    }
}

fn need<T: Copy>(value: Option<T>, flag: &str, command: &str) -> Result<T> {
    value.ok_or_else(|| CliError::Usage(format!("{command} needs {flag}")))
}

/// `WALLS_CACHE_DIR` when set, otherwise `--cache-dir`.
pub fn cache_dir(opts: &Opts) -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from).or_else(|| opts.cache_dir.clone())
}

fn run_table(opts: &Opts, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    let seq = need(opts.seq, "--seq", "table")?;
    let nmax = need(opts.nmax, "--nmax", "table")?;
    let format = opts.format.unwrap_or(Format::Csv);
    let slice = table::Slice { kmax: opts.kmax, k: opts.k, m: opts.m, diagonal: opts.diagonal };
    slice.validate(seq, format)?;
    let cells = table::load_or_compute(seq, nmax, cache_dir(opts).as_deref(), err)?;
    let kept: Vec<table::Cell> = cells.into_iter().filter(|c| slice.keeps(seq, c)).collect();
    table::write_cells(seq, &kept, format, out)?;
    Ok(0)
}

fn run_verify(opts: &Opts, out: &mut dyn Write) -> Result<u8> {
    let name = opts.check.as_deref().ok_or_else(|| CliError::Usage("verify needs --check NAME or --check all".into()))?;
    let over = verify::Bounds { nmax: opts.nmax, kmax: opts.kmax, order: opts.order };
    let selected: Vec<(&verify::Check, verify::Bounds)> = if name == "all" {
        verify::REGISTRY.iter().map(|c| (c, c.defaults)).collect()
    } else {
        let Some(check) = verify::find(name) else {
            let known: Vec<&str> = verify::REGISTRY.iter().map(|c| c.name).collect();
            return usage(format!("unknown check {name:?}; known checks: all, {}", known.join(", ")));
        };
        vec![(check, check.defaults.overridden(over))]
    };
    let mut failed = 0;
    for (check, bounds) in selected {
        let label = format!("{} {}", check.name, bounds.describe());
        match (check.run)(&bounds) {
            Ok(()) => writeln!(out, "PASS {}", label.trim_end())?,
            Err(why) => {
                failed += 1;
                writeln!(out, "FAIL {}: {why}", label.trim_end())?;
            }
        }
    }
    Ok(u8::from(failed > 0))
}

fn run_series(opts: &Opts, out: &mut dyn Write) -> Result<u8> {
    let k = need(opts.dk, "--dk", "series")?;
    let order = need(opts.order, "--order", "series")?;
    let series = match opts.method {
        Method::Recurrence => dk_from_table(k, order, &mut B3Table::new()),
        Method::Closed => dk_closed(k, order)?,
        Method::Kernel => dk_by_kernel(k, order)?,
    };
    match opts.format.unwrap_or(Format::Text) {
        Format::Text => writeln!(out, "{series}")?,
        Format::Csv => {
            writeln!(out, "index,value")?;
            for (i, c) in series.coeffs().iter().enumerate() {
                writeln!(out, "{i},{c}")?;
            }
        }
        Format::Bfile => {
            for (i, c) in series.coeffs().iter().enumerate() {
                writeln!(out, "{i} {c}")?;
            }
        }
        Format::Json => {
            let coeffs: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
            let doc = serde_json::json!({ "dk": k, "order": order, "coefficients": coeffs });
            writeln!(out, "{doc}")?;
        }
    }
    Ok(0)
}

fn run_oracle(opts: &Opts, out: &mut dyn Write) -> Result<u8> {
    let seq = need(opts.seq, "--seq", "oracle")?;
    let n = need(opts.n, "--n", "oracle")?;
    let k = need(opts.k, "--k", "oracle")?;
    let (ni, ki) = (n as i64, k as i64);
    let (brute, fast) = match seq {
        Seq::A => (a_brute(n, k)?, ATable::new().get(ni, ki)),
        Seq::B => (b_brute(n, k)?, B3Table::new().b(ni, ki)),
        Seq::B3 => {
            let m = need(opts.m, "--m", "oracle --seq b3")?;
            (b3_brute(n, m, k)?, B3Table::new().b3(ni, m as i64, ki))
        }
        Seq::F => (family_sum(n, k, build_f)?, f_closed(n, k)),
        Seq::Ftilde => (family_sum(n, k, build_ftilde)?, ftilde(n, k)),
        Seq::U => (family_sum(n, k, build_u)?, u_from_b(n, k, &mut B3Table::new())?),
        Seq::Omega | Seq::Tc => return usage(format!("no brute-force count for {}", seq.name())),
    };
    let agree = brute == fast;
    let verdict = if agree { "agree" } else { "disagree" };
    match opts.format.unwrap_or(Format::Text) {
        Format::Json => {
            let doc = serde_json::json!({
                "seq": seq.name(), "brute": brute.to_string(), "fast": fast.to_string(), "agree": agree,
            });
            writeln!(out, "{doc}")?;
        }
        _ => writeln!(out, "brute {brute}\nfast {fast}\n{verdict}")?,
    }
    Ok(u8::from(!agree))
}

fn run_crosscheck(opts: &Opts, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    let map = match (opts.map, opts.oeis.as_deref()) {
        (Some(name), id) => {
            let map = oeis::by_name(name);
            if id.is_some_and(|id| !id.eq_ignore_ascii_case(map.oeis)) {
                return usage(format!("slice {} is mapped to {}, not {}", map.label, map.oeis, id.unwrap_or_default()));
            }
            map
        }
        (None, Some(id)) => oeis::by_oeis(id).ok_or_else(|| CliError::Usage(format!("no slice is mapped to {id}")))?,
        (None, None) => return usage("crosscheck needs --map or --oeis"),
    };
    let (text, source) = if let Some(path) = &opts.bfile {
        (std::fs::read_to_string(path)?, path.display().to_string())
    } else if opts.offline {
        (map.fixture.to_string(), "bundled fixture".to_string())
    } else {
        match oeis::fetch(map.oeis, FETCH_TIMEOUT) {
            Ok(text) => (text, oeis::bfile_url(map.oeis)),
            Err(why) => {
                writeln!(err, "warning: fetching {} failed ({why}); using the bundled fixture", map.oeis)?;
                (map.fixture.to_string(), "bundled fixture".to_string())
            }
        }
    };
    let entries = oeis::parse_bfile(&text)?;
    if let Some((first, _)) = entries.first() {
        if *first != map.offset {
            writeln!(err, "warning: {} starts at index {first}, expected offset {}", map.oeis, map.offset)?;
        }
    }
    let limit = opts.nmax.unwrap_or(CROSSCHECK_LIMIT);
    let cmp = oeis::compare(map, &entries, limit, &mut oeis::SliceValues::new());
    let range = match (cmp.first, cmp.last) {
        (Some(a), Some(b)) => format!("{a}..={b}"),
        _ => "none".into(),
    };
    let summary = format!("{} ~ {} offset {} source {source}", map.oeis, map.label, map.offset);
    if let Some((index, theirs, ours)) = cmp.mismatch {
        writeln!(out, "FAIL {summary}: index {index}: oeis {theirs}, ours {ours}")?;
        return Ok(1);
    }
    if cmp.compared == 0 {
        writeln!(out, "FAIL {summary}: no overlapping indices")?;
        return Ok(1);
    }
    writeln!(out, "PASS {summary}: {} terms agree, indices {range}", cmp.compared)?;
    Ok(0)
}

fn run_asym(opts: &Opts, out: &mut dyn Write) -> Result<u8> {
    let n = need(opts.n, "--n", "asym")?;
    let k = opts.k.unwrap_or(0);
    if n == 0 || k >= n {
        return usage(format!("asym needs 0 <= k < n, got n={n}, k={k}"));
    }
    let exact = TreeChildCounter::new().tc(n, k);
    let err = tc_asym_relative_error(n, k, &exact);
    match opts.format.unwrap_or(Format::Text) {
        Format::Json => {
            let doc = serde_json::json!({
                "n": n, "k": k, "exact": exact.to_string(),
                "ln_exact": ln_nat(&exact), "ln_asym": tc_asym_ln(n, k), "relative_error": err,
            });
            writeln!(out, "{doc}")?;
        }
        _ => writeln!(
            out,
            "n={n} k={k} ln_exact={:.12} ln_asym={:.12} relative_error={err:.6e}",
            ln_nat(&exact),
            tc_asym_ln(n, k)
        )?,
    }
    Ok(0)
}
