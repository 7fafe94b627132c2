//! Command-line front end.
//!
//! Every subcommand writes one JSON document (default) or a CSV table to the
//! output stream. Exit codes: 0 success, 2 usage or invalid input, 3 resource
//! budget exceeded, 4 data integrity failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::classifier::{classify, is_terminal_fast, kawakita_form, oracle_verdict};
use crate::error::Error;
use crate::exactgeom::{WeightVector, ORACLE_DEFAULT_CAP};
use crate::families::{
    blowup_from_quintuple, bound_dim1, family_scan, instantiate, lookup, quintuple_table, write_table_csv,
    QuintupleId, SignPattern,
};
use crate::projections::{ell_l, facet_width, facets, max_facet_width, ProjectedConfig};
use crate::rat::Rat;
use crate::search::{enumerate_blowups, run_census, CensusOptions, CensusQuery, Histogram, DEFAULT_BUDGET};
use crate::sporadic::{
    blowups_from_record, fixtures, parse_dataset, record_from_weights, sporadic_histogram, DATASET_ENV,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_DATA: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "blowups", version, about = "Terminal and canonical weighted blowups of affine space")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Add a `timestamp` field to JSON output (breaks byte-for-byte reproducibility).
    #[arg(long, global = true)]
    pub timestamp: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one weight vector.
    Classify(ClassifyArgs),
    /// Exhaustive search over all weight vectors in an index range.
    Census(CensusArgs),
    /// Instantiate one quintuple family member, query its bound, or dump the table.
    Family(FamilyArgs),
    /// Run every quintuple, apex, sign and volume and report large smallest weights.
    FamilyScan(FamilyScanArgs),
    /// Facet widths and the ell_L bound of a projected point configuration.
    Width(WidthArgs),
    /// Blowups of sporadic empty 4-simplices.
    Sporadic(SporadicArgs),
    /// Run the built-in consistency checks.
    Selftest,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Comma-separated weights, e.g. 6,10,15,7.
    #[arg(long, value_delimiter = ',', required = true)]
    pub weights: Vec<u64>,
    /// Exact rational in (0, 1], written `p/q` or as an integer.
    #[arg(long, default_value = "1")]
    pub epsilon: String,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub dim: usize,
    #[arg(long, default_value_t = 1)]
    pub vmin: u64,
    #[arg(long)]
    pub vmax: u64,
    #[arg(long, default_value = "1")]
    pub epsilon: String,
    /// terminal | canonical | eps-lt | eps-lc
    #[arg(long, default_value = "terminal")]
    pub verdict: String,
    /// List only hits whose smallest weight is at least this.
    #[arg(long)]
    pub min_weight: Option<u64>,
    /// Worker threads; 0 uses all available cores.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Refuse to start if more candidates than this would be examined.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Row id such as Q29 or N5.
    #[arg(long, required_unless_present = "table")]
    pub id: Option<String>,
    /// Apex position, 1 to 5.
    #[arg(long, required_unless_present = "table")]
    pub apex: Option<usize>,
    #[arg(long, required_unless_present_any = ["table", "bound"])]
    pub volume: Option<u64>,
    /// Sign of the volume-dependent part, + or -.
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    pub sign: String,
    /// Print the smallest-weight bound for the row and apex instead.
    #[arg(long, conflicts_with = "table")]
    pub bound: bool,
    /// Print the whole table as CSV.
    #[arg(long)]
    pub table: bool,
}

#[derive(Debug, Args)]
pub struct FamilyScanArgs {
    #[arg(long, default_value_t = 300)]
    pub vmax: u64,
    /// Report terminal blowups with smallest weight above this.
    #[arg(long, default_value_t = 6)]
    pub threshold: u64,
    /// Restrict to the primitive rows Q1..Q29.
    #[arg(long)]
    pub primitive_only: bool,
}

#[derive(Debug, Args)]
pub struct WidthArgs {
    /// JSON array of integer points, e.g. [[0,0],[2,0],[0,2]].
    #[arg(long)]
    pub points: String,
    /// Which point is the image of the origin.
    #[arg(long, default_value_t = 0)]
    pub origin_index: usize,
}

#[derive(Debug, Args)]
pub struct SporadicArgs {
    /// Dataset file; defaults to the path in the SPORADIC_DATASET environment variable.
    #[arg(long, conflicts_with = "fixtures")]
    pub input: Option<PathBuf>,
    /// Use the embedded sample records.
    #[arg(long)]
    pub fixtures: bool,
    /// Emit only the smallest-weight histogram.
    #[arg(long)]
    pub histogram: bool,
    /// Whitespace separators and reduced residues only.
    #[arg(long)]
    pub strict: bool,
    /// Skip the terminal check on every extracted blowup.
    #[arg(long)]
    pub no_check: bool,
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::Malformed { .. } | Error::RecordInvariant { .. } | Error::Io(_) => EXIT_DATA,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: EXIT_DATA, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

type Outcome = std::result::Result<i32, Failure>;

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let ctx = Ctx { format: cli.format, timestamp: cli.timestamp };
    match &cli.command {
        Command::Classify(a) => classify_cmd(&ctx, a, out),
        Command::Census(a) => census_cmd(&ctx, a, out),
        Command::Family(a) => family_cmd(&ctx, a, out),
        Command::FamilyScan(a) => family_scan_cmd(&ctx, a, out),
        Command::Width(a) => width_cmd(&ctx, a, out),
        Command::Sporadic(a) => sporadic_cmd(&ctx, a, out),
        Command::Selftest => selftest_cmd(&ctx, out),
    }
}

struct Ctx {
    format: Format,
    timestamp: bool,
}

impl Ctx {
    fn json(&self, out: &mut dyn Write, mut value: Value) -> io::Result<()> {
        if self.timestamp {
            if let Value::Object(map) = &mut value {
                let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
                map.insert("timestamp".into(), json!(secs));
            }
        }
        serde_json::to_writer_pretty(&mut *out, &value)?;
        writeln!(out)
    }

    fn csv<S: AsRef<[u8]>>(&self, out: &mut dyn Write, header: &[&str], rows: &[Vec<S>]) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(header)?;
        for row in rows {
            w.write_record(row)?;
        }
        w.flush()
    }
}

fn parse_eps(s: &str) -> std::result::Result<Rat, Failure> {
    let eps: Rat = s.parse()?;
    crate::exactgeom::check_epsilon(&eps)?;
    Ok(eps)
}

fn join(w: &[u64]) -> String {
    w.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn histogram_rows(h: &Histogram) -> Vec<Vec<String>> {
    h.counts.iter().map(|(k, c)| vec![k.to_string(), c.to_string()]).collect()
}

fn classify_cmd(ctx: &Ctx, a: &ClassifyArgs, out: &mut dyn Write) -> Outcome {
    let eps = parse_eps(&a.epsilon)?;
    let n = WeightVector::new(a.weights.clone())?;
    let c = classify(&n, eps)?;
    match ctx.format {
        Format::Json => {
            let mut v = json!({
                "weights": n.weights(),
                "V": n.index(),
                "epsilon": eps,
                "eps_log_terminal": c.eps_log_terminal,
                "eps_log_canonical": c.eps_log_canonical,
            });
            if let Some(w) = &c.witness {
                v["witness"] = serde_json::to_value(w).map_err(|e| usage(e.to_string()))?;
            }
            ctx.json(out, v)?;
        }
        Format::Csv => ctx.csv(
            out,
            &["weights", "V", "epsilon", "eps_log_terminal", "eps_log_canonical"],
            &[vec![
                join(n.weights()),
                n.index().to_string(),
                eps.to_string(),
                c.eps_log_terminal.to_string(),
                c.eps_log_canonical.to_string(),
            ]],
        )?,
    }
    Ok(EXIT_OK)
}

fn census_cmd(ctx: &Ctx, a: &CensusArgs, out: &mut dyn Write) -> Outcome {
    let query = CensusQuery {
        dim: a.dim,
        v_range: a.vmin..=a.vmax,
        eps: parse_eps(&a.epsilon)?,
        min_weight: a.min_weight,
        verdict: a.verdict.parse()?,
    };
    query.validate()?;
    let mut file;
    let sink: &mut dyn Write = match &a.out {
        Some(path) => {
            file = File::create(path)?;
            &mut file
        }
        None => out,
    };
    let report = run_census(&query, &CensusOptions { threads: a.threads, budget: a.budget })?;
    match ctx.format {
        Format::Json => ctx.json(
            sink,
            json!({
                "dim": query.dim,
                "vmin": a.vmin,
                "vmax": a.vmax,
                "epsilon": query.eps,
                "verdict": query.verdict.to_string(),
                "min_weight": query.min_weight,
                "candidates": report.candidates,
                "histogram": report.histogram,
                "max_n_min": report.histogram.max_key(),
                "hits": report.hits,
            }),
        )?,
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .hits
                .iter()
                .map(|h| vec![h.v.to_string(), h.n_min.to_string(), join(&h.weights)])
                .collect();
            ctx.csv(sink, &["V", "n_min", "weights"], &rows)?
        }
    }
    Ok(EXIT_OK)
}

fn family_cmd(ctx: &Ctx, a: &FamilyArgs, out: &mut dyn Write) -> Outcome {
    if a.table {
        write_table_csv(out)?;
        return Ok(EXIT_OK);
    }
    let id: QuintupleId = a.id.as_deref().unwrap_or_default().parse()?;
    let apex = a.apex.unwrap_or_default();
    if a.bound {
        let b = bound_dim1(id, apex)?;
        match ctx.format {
            Format::Json => ctx.json(out, json!({ "id": id, "apex": apex, "bound": b, "floor": b.floor() }))?,
            Format::Csv => {
                ctx.csv(out, &["id", "apex", "bound"], &[vec![id.to_string(), apex.to_string(), b.to_string()]])?
            }
        }
        return Ok(EXIT_OK);
    }
    let sign: SignPattern = a.sign.parse()?;
    let v = a.volume.unwrap_or_default();
    let tuple = instantiate(id, v, sign)?;
    let blowup = blowup_from_quintuple(id, apex, v, sign)?;
    let terminal = blowup.as_ref().map(is_terminal_fast).transpose()?;
    match ctx.format {
        Format::Json => ctx.json(
            out,
            json!({
                "id": id,
                "apex": apex,
                "V": v,
                "sign": sign,
                "quintuple": tuple,
                "weights": blowup.as_ref().map(|n| n.weights().to_vec()),
                "n_min": blowup.as_ref().map(WeightVector::n_min),
                "terminal": terminal,
            }),
        )?,
        Format::Csv => ctx.csv(
            out,
            &["id", "apex", "V", "sign", "weights", "terminal"],
            &[vec![
                id.to_string(),
                apex.to_string(),
                v.to_string(),
                sign.to_string(),
                blowup.as_ref().map_or("none".into(), |n| join(n.weights())),
                terminal.map_or("none".into(), |t| t.to_string()),
            ]],
        )?,
    }
    Ok(EXIT_OK)
}

fn family_scan_cmd(ctx: &Ctx, a: &FamilyScanArgs, out: &mut dyn Write) -> Outcome {
    let rows = quintuple_table().iter().filter(|q| !a.primitive_only || q.is_primitive());
    let report = family_scan(rows, a.vmax, a.threshold, |_| {})?;
    match ctx.format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).map_err(|e| usage(e.to_string()))?;
            v["vmax"] = json!(a.vmax);
            v["threshold"] = json!(a.threshold);
            ctx.json(out, v)?
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .violations
                .iter()
                .map(|i| {
                    vec![i.id.to_string(), i.apex.to_string(), i.v.to_string(), i.sign.to_string(), join(&i.weights)]
                })
                .collect();
            ctx.csv(out, &["id", "apex", "V", "sign", "weights"], &rows)?
        }
    }
    Ok(EXIT_OK)
}

fn width_cmd(ctx: &Ctx, a: &WidthArgs, out: &mut dyn Write) -> Outcome {
    let points: Vec<Vec<i64>> =
        serde_json::from_str(&a.points).map_err(|e| usage(format!("--points is not a JSON integer matrix: {e}")))?;
    let s = ProjectedConfig::new(points, a.origin_index)?;
    let fs = facets(&s);
    let ell = ell_l(&s)?;
    match ctx.format {
        Format::Json => {
            let facets: Vec<Value> = fs
                .iter()
                .map(|f| {
                    json!({
                        "normal": f.normal,
                        "offset": f.offset,
                        "incident": f.incident,
                        "width": facet_width(&s, f),
                    })
                })
                .collect();
            ctx.json(
                out,
                json!({
                    "k": s.k(),
                    "origin_index": s.origin_index(),
                    "facets": facets,
                    "max_facet_width": max_facet_width(&s),
                    "ell_L": ell,
                }),
            )?
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = fs
                .iter()
                .map(|f| {
                    let normal = f.normal.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
                    vec![normal, f.offset.to_string(), facet_width(&s, f).to_string()]
                })
                .collect();
            ctx.csv(out, &["normal", "offset", "width"], &rows)?
        }
    }
    Ok(EXIT_OK)
}

fn sporadic_cmd(ctx: &Ctx, a: &SporadicArgs, out: &mut dyn Write) -> Outcome {
    let (source, records) = if a.fixtures {
        ("fixtures".to_string(), fixtures().to_vec())
    } else {
        let path = match (&a.input, std::env::var_os(DATASET_ENV)) {
            (Some(p), _) => p.clone(),
            (None, Some(p)) => PathBuf::from(p),
            (None, None) => return Err(usage(format!("pass --input, --fixtures, or set {DATASET_ENV}"))),
        };
        let records = parse_dataset(&path, a.strict)?;
        (path.display().to_string(), records)
    };
    let report = sporadic_histogram(&records, !a.no_check)?;
    match (ctx.format, a.histogram) {
        (Format::Csv, _) => ctx.csv(out, &["n_min", "count"], &histogram_rows(&report.histogram))?,
        (Format::Json, true) => ctx.json(out, json!({ "source": source, "histogram": report.histogram }))?,
        (Format::Json, false) => {
            let mut v = serde_json::to_value(&report).map_err(|e| usage(e.to_string()))?;
            v["source"] = json!(source);
            v["checked"] = json!(!a.no_check);
            ctx.json(out, v)?
        }
    }
    if report.non_terminal.is_empty() {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_DATA)
    }
}

#[derive(Serialize)]
struct Check {
    name: &'static str,
    passed: bool,
    detail: String,
}

/// Self-contained checks that need no external data.
pub fn selftest_checks() -> Vec<(&'static str, bool, String)> {
    let mut checks = Vec::new();

    let kawakita = (|| -> crate::Result<(bool, String)> {
        let report = run_census(&CensusQuery::terminal(3, 1..=50), &CensusOptions::default())?;
        let mut expected = 0;
        for v in 1..=50u64 {
            for n in enumerate_blowups(3, v) {
                expected += u64::from(kawakita_form(&n)?);
            }
        }
        let all_normal = report.hits.iter().all(|h| {
            WeightVector::new(h.weights.clone()).and_then(|n| kawakita_form(&n)).unwrap_or(false)
        });
        Ok((all_normal && report.histogram.total == expected, format!("{} terminal, {expected} of the form (1,a,b)", report.histogram.total)))
    })();
    checks.push(push("kawakita d=3 V<=50", kawakita));

    let oracle = (|| -> crate::Result<(bool, String)> {
        let mut compared = 0u64;
        let mut mismatches = Vec::new();
        for d in 2..=4 {
            for v in 1..=20 {
                for n in enumerate_blowups(d, v) {
                    for eps in [Rat::ONE, Rat::new(1, 2)?, Rat::new(1, 3)?] {
                        let c = classify(&n, eps)?;
                        let o = oracle_verdict(&n, eps, ORACLE_DEFAULT_CAP)?;
                        compared += 1;
                        if (c.eps_log_terminal, c.eps_log_canonical) != o {
                            mismatches.push(format!("{n} at {eps}"));
                        }
                    }
                }
            }
        }
        Ok((mismatches.is_empty(), format!("{compared} compared, mismatches {mismatches:?}")))
    })();
    checks.push(push("oracle equivalence V<=20", oracle));

    let sporadic = (|| -> crate::Result<(bool, String)> {
        let mut ok = true;
        for r in fixtures() {
            let blowups = blowups_from_record(&r);
            ok &= !blowups.is_empty();
            for (apex, n) in &blowups {
                ok &= is_terminal_fast(n)?;
                if *apex == 5 {
                    ok &= record_from_weights(n)? == r;
                }
            }
        }
        let report = sporadic_histogram(&fixtures(), true)?;
        let top = report.argmax.map(|b| b.weights).unwrap_or_default();
        ok &= top == [32, 41, 71, 102];
        Ok((ok, format!("{} blowups, argmax {top:?}", report.histogram.total)))
    })();
    checks.push(push("sporadic fixtures", sporadic));

    let family = (|| -> crate::Result<(bool, String)> {
        let q29 = lookup(QuintupleId::q(29)).map(|q| q.id).ok_or(Error::UnknownQuintuple("Q29".into()))?;
        let n = blowup_from_quintuple(q29, 2, 37, SignPattern::Plus)?;
        let weights = n.as_ref().map(|n| n.weights().to_vec());
        let ok = weights.as_deref() == Some(&[7, 6, 10, 15][..]) && n.as_ref().map(is_terminal_fast).transpose()? == Some(true);
        Ok((ok, format!("Q29 apex 2 V=37 gives {weights:?}")))
    })();
    checks.push(push("family Q29 at V=37", family));

    checks
}

fn push(name: &'static str, r: crate::Result<(bool, String)>) -> (&'static str, bool, String) {
    match r {
        Ok((passed, detail)) => (name, passed, detail),
        Err(e) => (name, false, format!("error: {e}")),
    }
}

fn selftest_cmd(ctx: &Ctx, out: &mut dyn Write) -> Outcome {
    let checks: Vec<Check> =
        selftest_checks().into_iter().map(|(name, passed, detail)| Check { name, passed, detail }).collect();
    let passed = checks.iter().all(|c| c.passed);
    match ctx.format {
        Format::Json => ctx.json(out, json!({ "passed": passed, "checks": checks }))?,
        Format::Csv => {
            let rows: Vec<Vec<String>> =
                checks.iter().map(|c| vec![c.name.to_string(), c.passed.to_string(), c.detail.clone()]).collect();
            ctx.csv(out, &["check", "passed", "detail"], &rows)?
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_DATA })
}
