//! Command line front end: superpartition listings, non-symmetric Jack
//! expansions, Jack superpolynomial computation in several bases, the
//! verification sweeps, and an on-disk cache of computed E_η and P_Λ.
//!
//! Exit codes: 0 when every requested check passes, 1 on a verification
//! failure (with the report still printed), 2 on malformed input.
//!
//! JSON output is byte-deterministic for fixed inputs: maps are keyed
//! through ordered containers and records follow the sector order.
//!
//! The cache is a versioned directory of one file per entry with a key
//! digest in the name; writes go through a temporary file and an atomic
//! rename, so concurrent processes agree on the stored value.

use crate::exact::AlphaRat;
use crate::inner::{verify_analytic_orthogonality, verify_comb_orthogonality, verify_eval};
use crate::nsjack::nonsym_jack;
use crate::ring::SPoly;
use crate::sjack::{expand_monomial, expand_quasi, super_jack, BasisExpansion, JackRoute};
use crate::spart::{list_sector, render_diagram, Sector, SuperPartition, Variant};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use std::io::Read;
use std::path::{Path, PathBuf};
use std::str::FromStr;

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "SUPERJACK_CACHE_DIR";
const CACHE_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "superjack",
    about = "Exact N=2 Jack superpolynomials: construction and verification",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit machine-readable JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for verification sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Superpartition utilities.
    #[command(subcommand)]
    Spart(SpartCmd),
    /// Non-symmetric Jack polynomial E_η.
    Nsjack {
        /// Composition, e.g. "0,1,0".
        eta: String,
        #[arg(long = "N", alias = "n")]
        n: Option<usize>,
    },
    /// Jack superpolynomials.
    #[command(subcommand)]
    Jack(JackCmd),
    /// Verification sweeps.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// On-disk cache maintenance.
    #[command(subcommand)]
    Cache(CacheCmd),
}

#[derive(Debug, Subcommand)]
enum SpartCmd {
    /// List every superpartition of a sector with length ≤ N.
    List {
        #[arg(long)]
        sector: String,
        #[arg(long = "N", alias = "n")]
        n: usize,
        #[arg(long, default_value = "SAA")]
        sigma: String,
    },
    /// Show one superpartition: sector, cores, diagram.
    Show { label: String },
}

#[derive(Debug, Subcommand)]
enum JackCmd {
    /// Compute P_Λ and print it in a basis.
    Compute(ComputeArgs),
    /// Expand a serialized superpolynomial (stdin or --file) in a basis.
    Expand {
        #[arg(long, default_value = "m")]
        basis: String,
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct ComputeArgs {
    label: String,
    #[arg(long = "N", alias = "n")]
    n: usize,
    #[arg(long, default_value = "SAA")]
    sigma: String,
    /// m, q or raw (the full term list).
    #[arg(long, default_value = "m")]
    basis: String,
    /// Skip the on-disk cache.
    #[arg(long)]
    no_cache: bool,
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    /// Commutativity of sampled conserved-charge pairs on a sector.
    Charges {
        #[arg(long)]
        sector: String,
        #[arg(long = "N", alias = "n")]
        n: usize,
        /// Pairs "i,k,j,l" separated by ';'. A default spanning sample
        /// is used when omitted.
        #[arg(long)]
        pairs: Option<String>,
    },
    /// Closed-form norms against the combinatorial scalar product.
    Norm {
        #[arg(long)]
        sector: String,
        #[arg(long = "N", alias = "n")]
        n: usize,
        #[arg(long, default_value = "SAA")]
        sigma: String,
    },
    /// Closed-form evaluations against the operator evaluation.
    Eval {
        #[arg(long)]
        sector: String,
        #[arg(long = "N", alias = "n")]
        n: usize,
        #[arg(long, default_value = "SAA")]
        sigma: String,
    },
    /// Orthogonality: combinatorial always, analytic when --beta is set.
    Orthogonality {
        #[arg(long)]
        sector: String,
        #[arg(long = "N", alias = "n")]
        n: usize,
        #[arg(long)]
        beta: Option<u32>,
        #[arg(long, default_value = "SAA")]
        sigma: String,
    },
}

#[derive(Debug, Subcommand)]
enum CacheCmd {
    /// Remove every cache entry.
    Clear,
    /// Entry count and total size.
    Stats,
}

/// Runs the CLI on explicit arguments; returns the process exit code.
pub fn run(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            // clap distinguishes --help/--version from real usage errors
            let benign = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if benign { 0 } else { 2 };
        }
    };
    match dispatch(&cli) {
        Ok(pass) => {
            if pass {
                0
            } else {
                1
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Result<bool, String> {
    match &cli.command {
        Command::Spart(cmd) => run_spart(cmd, cli.json),
        Command::Nsjack { eta, n } => run_nsjack(eta, *n, cli.json),
        Command::Jack(cmd) => run_jack(cmd, cli.json),
        Command::Verify(cmd) => run_verify(cmd, cli.json, cli.jobs),
        Command::Cache(cmd) => run_cache(cmd, cli.json),
    }
}

fn parse_sector(s: &str) -> Result<Sector, String> {
    Sector::from_str(s).map_err(|e| e.to_string())
}

fn parse_label(s: &str) -> Result<SuperPartition, String> {
    SuperPartition::from_str(s).map_err(|e| e.to_string())
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    Variant::from_str(s).map_err(|e| e.to_string())
}

fn run_spart(cmd: &SpartCmd, json: bool) -> Result<bool, String> {
    match cmd {
        SpartCmd::List { sector, n, sigma } => {
            let sec = parse_sector(sector)?;
            let variant = parse_variant(sigma)?;
            let labels = list_sector(sec, *n, variant).map_err(|e| e.to_string())?;
            if json {
                let v: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
                println!("{}", serde_json::to_string(&v).unwrap());
            } else {
                for l in &labels {
                    println!("{l}");
                }
            }
            Ok(true)
        }
        SpartCmd::Show { label } => {
            let sp = parse_label(label)?;
            if json {
                let cores = sp.core_quadruple();
                let out = json!({
                    "label": sp.to_string(),
                    "sector": sp.sector().to_string(),
                    "length": sp.length(),
                    "weight": sp.weight(),
                    "cores": cores,
                    "blocks": {
                        "lbd": sp.lbd(), "lt": sp.lt(), "lh": sp.lh(), "ls": sp.ls(),
                    },
                });
                println!("{}", serde_json::to_string(&out).unwrap());
            } else {
                println!("label   {sp}");
                println!("sector  {}", sp.sector());
                println!("length  {}", sp.length());
                println!("weight  {}", sp.weight());
                for (k, core) in sp.core_quadruple().iter().enumerate() {
                    println!("core[{k}] {core:?}");
                }
                print!("{}", render_diagram(&sp, Variant::SAA));
            }
            Ok(true)
        }
    }
}

fn run_nsjack(eta: &str, n: Option<usize>, json: bool) -> Result<bool, String> {
    let parts: Result<Vec<u32>, _> = eta
        .trim()
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|x| x.trim().parse::<u32>())
        .collect();
    let mut parts = parts.map_err(|_| format!("bad composition '{eta}'"))?;
    if let Some(n) = n {
        if n < parts.len() {
            return Err(format!("N = {n} below the composition length"));
        }
        parts.resize(n, 0);
    }
    let key = CacheKey {
        kind: "E".into(),
        n: parts.len(),
        label: format!("{parts:?}"),
        sigma: "-".into(),
    };
    let e = cache_lookup_or_compute(&cache_dir(), &key, || (*nonsym_jack(&parts)).clone())
        .map_err(|e| e.to_string())?;
    print_spoly(&e, json);
    Ok(true)
}

fn print_spoly(p: &SPoly, json: bool) {
    if json {
        println!("{}", serde_json::to_string(p).unwrap());
    } else {
        print!("{p}");
    }
}

fn expansion_map(exp: &BasisExpansion) -> Map<String, Value> {
    let mut map = Map::new();
    for (lab, c) in &exp.coeffs {
        map.insert(lab.to_string(), Value::String(c.to_string()));
    }
    map
}

fn print_expansion(exp: &BasisExpansion, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string(&Value::Object(expansion_map(exp))).unwrap()
        );
    } else {
        for (lab, c) in &exp.coeffs {
            println!("{}_{lab}  {c}", exp.basis.tag());
        }
    }
}

fn run_jack(cmd: &JackCmd, json: bool) -> Result<bool, String> {
    match cmd {
        JackCmd::Compute(args) => {
            let sp = parse_label(&args.label)?;
            let variant = parse_variant(&args.sigma)?;
            let compute = || {
                super_jack(&sp, args.n, variant, JackRoute::Direct)
                    .map_err(|e| e.to_string())
            };
            let p = if args.no_cache {
                compute()?
            } else {
                let key = CacheKey {
                    kind: "P".into(),
                    n: args.n,
                    label: sp.to_string(),
                    sigma: variant.name().into(),
                };
                cache_lookup_or_compute_fallible(&cache_dir(), &key, compute)?
            };
            match args.basis.as_str() {
                "raw" => print_spoly(&p, json),
                "m" => {
                    let exp = expand_monomial(&p, variant).map_err(|e| e.to_string())?;
                    print_expansion(&exp, json);
                }
                "q" => {
                    let exp = expand_quasi(&p).map_err(|e| e.to_string())?;
                    print_expansion(&exp, json);
                }
                other => return Err(format!("unknown basis '{other}'")),
            }
            Ok(true)
        }
        JackCmd::Expand { basis, file } => {
            let mut text = String::new();
            match file {
                Some(path) => {
                    text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
                }
                None => {
                    std::io::stdin()
                        .read_to_string(&mut text)
                        .map_err(|e| e.to_string())?;
                }
            }
            let p: SPoly = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let exp = match basis.as_str() {
                "m" => expand_monomial(&p, Variant::SAA).map_err(|e| e.to_string())?,
                "q" => expand_quasi(&p).map_err(|e| e.to_string())?,
                other => return Err(format!("unknown basis '{other}'")),
            };
            print_expansion(&exp, json);
            Ok(true)
        }
    }
}

/// Splits `items` across `jobs` threads, preserving output order.
fn run_parallel<T, R, F>(jobs: usize, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send + Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let jobs = jobs.max(1);
    if jobs == 1 || items.len() <= 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    let mut out: Vec<Option<R>> = Vec::new();
    out.resize_with(items.len(), || None);
    let fref = &f;
    std::thread::scope(|scope| {
        for (slot_chunk, item_chunk) in out.chunks_mut(chunk).zip(items.chunks(chunk)) {
            scope.spawn(move || {
                for (slot, item) in slot_chunk.iter_mut().zip(item_chunk) {
                    *slot = Some(fref(item));
                }
            });
        }
    });
    out.into_iter().map(|r| r.unwrap()).collect()
}

fn run_verify(cmd: &VerifyCmd, json: bool, jobs: usize) -> Result<bool, String> {
    match cmd {
        VerifyCmd::Charges { sector, n, pairs } => {
            let sec = parse_sector(sector)?;
            let sample: Vec<(usize, usize, usize, usize)> = match pairs {
                Some(text) => {
                    let mut out = Vec::new();
                    for quad in text.split(';') {
                        let nums: Result<Vec<usize>, _> =
                            quad.split(',').map(|x| x.trim().parse()).collect();
                        let nums = nums.map_err(|_| format!("bad pair '{quad}'"))?;
                        if nums.len() != 4 {
                            return Err(format!("bad pair '{quad}'"));
                        }
                        out.push((nums[0], nums[1], nums[2], nums[3]));
                    }
                    out
                }
                None => default_charge_pairs(*n),
            };
            let results = run_parallel(jobs, sample, |&(i, k, j, l)| {
                crate::charges::verify_commutativity(sec, *n, &[(i, k, j, l)])
                    .map(|r| r.samples[0].clone())
                    .map_err(|e| e.to_string())
            });
            let mut samples = Vec::new();
            for r in results {
                samples.push(r?);
            }
            let pass = samples.iter().all(|s| s.commutes);
            if json {
                let entries: Vec<Value> = samples
                    .iter()
                    .map(|s| {
                        json!({"i": s.i, "k": s.k, "j": s.j, "l": s.l, "commutes": s.commutes})
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string(&json!({
                        "kind": "charges", "sector": sec.to_string(), "N": n,
                        "pairs": entries, "pass": pass,
                    }))
                    .unwrap()
                );
            } else {
                for s in &samples {
                    println!(
                        "[H^[{}]_{}, H^[{}]_{}]  {}",
                        s.k,
                        s.i,
                        s.l,
                        s.j,
                        if s.commutes { "0" } else { "NONZERO" }
                    );
                }
                println!("{}", if pass { "PASS" } else { "FAIL" });
            }
            Ok(pass)
        }
        VerifyCmd::Norm { sector, n, sigma } => {
            let sec = parse_sector(sector)?;
            let variant = parse_variant(sigma)?;
            let labels = list_sector(sec, *n, variant).map_err(|e| e.to_string())?;
            let recs = run_parallel(jobs, labels, |lab| {
                verify_norm_single(lab, *n, variant).map_err(|e| e.to_string())
            });
            let mut records = Vec::new();
            for r in recs {
                records.push(r?);
            }
            let pass = records.iter().all(|r| r.matched);
            if json {
                let entries: Vec<Value> = records
                    .iter()
                    .map(|r| {
                        json!({
                            "label": r.label.to_string(),
                            "computed": r.computed.to_string(),
                            "expected": r.conjectured.to_string(),
                            "match": r.matched,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string(&json!({
                        "kind": "norm", "sector": sec.to_string(), "N": n,
                        "sigma": variant.name(), "records": entries, "pass": pass,
                    }))
                    .unwrap()
                );
            } else {
                for r in &records {
                    println!(
                        "{}  {}  {}",
                        r.label,
                        if r.matched { "ok" } else { "MISMATCH" },
                        r.computed
                    );
                }
                println!("{}", if pass { "PASS" } else { "FAIL" });
            }
            Ok(pass)
        }
        VerifyCmd::Eval { sector, n, sigma } => {
            let sec = parse_sector(sector)?;
            let variant = parse_variant(sigma)?;
            let records = verify_eval(sec, *n, variant).map_err(|e| e.to_string())?;
            let pass = records.iter().all(|r| r.matched);
            if json {
                let entries: Vec<Value> = records
                    .iter()
                    .map(|r| {
                        json!({
                            "label": r.label.to_string(),
                            "computed": r.computed.to_string(),
                            "expected": r.conjectured.to_string(),
                            "match": r.matched,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string(&json!({
                        "kind": "eval", "sector": sec.to_string(), "N": n,
                        "sigma": variant.name(), "records": entries, "pass": pass,
                    }))
                    .unwrap()
                );
            } else {
                for r in &records {
                    println!(
                        "{}  {}  {}",
                        r.label,
                        if r.matched { "ok" } else { "MISMATCH" },
                        r.computed
                    );
                }
                println!("{}", if pass { "PASS" } else { "FAIL" });
            }
            Ok(pass)
        }
        VerifyCmd::Orthogonality {
            sector,
            n,
            beta,
            sigma,
        } => {
            let sec = parse_sector(sector)?;
            let variant = parse_variant(sigma)?;
            let mut entries: Vec<Value> = Vec::new();
            let mut pass = true;
            let comb = verify_comb_orthogonality(sec, *n, variant).map_err(|e| e.to_string())?;
            for r in &comb {
                pass &= r.vanished;
                entries.push(json!({
                    "product": "combinatorial",
                    "left": r.left.to_string(),
                    "right": r.right.to_string(),
                    "match": r.vanished,
                }));
            }
            if let Some(b) = beta {
                let ana = verify_analytic_orthogonality(sec, *n, *b, variant)
                    .map_err(|e| e.to_string())?;
                for r in &ana {
                    pass &= r.ok;
                    entries.push(json!({
                        "product": format!("analytic(beta={b})"),
                        "left": r.left.to_string(),
                        "right": r.right.to_string(),
                        "value": r.value.to_string(),
                        "match": r.ok,
                    }));
                }
            }
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&json!({
                        "kind": "orthogonality", "sector": sec.to_string(), "N": n,
                        "sigma": variant.name(), "records": entries, "pass": pass,
                    }))
                    .unwrap()
                );
            } else {
                for e in &entries {
                    println!(
                        "{} <{}|{}> {}",
                        e["product"].as_str().unwrap(),
                        e["left"].as_str().unwrap(),
                        e["right"].as_str().unwrap(),
                        if e["match"].as_bool().unwrap() {
                            "ok"
                        } else {
                            "MISMATCH"
                        }
                    );
                }
                println!("{}", if pass { "PASS" } else { "FAIL" });
            }
            Ok(pass)
        }
    }
}

fn verify_norm_single(
    lab: &SuperPartition,
    n: usize,
    variant: Variant,
) -> Result<crate::inner::NormRecord, crate::inner::InnerError> {
    let p = super_jack(lab, n, variant, JackRoute::Direct)?;
    let computed = crate::inner::comb_scalar_variant(&p, &p, variant)?;
    let conjectured = crate::inner::norm_conjecture(lab, variant);
    let matched = {
        let diff = &computed - &conjectured;
        diff.is_zero()
    };
    Ok(crate::inner::NormRecord {
        label: lab.clone(),
        computed,
        conjectured,
        matched,
    })
}

/// A spanning sample of operator pairs across all four families.
fn default_charge_pairs(n: usize) -> Vec<(usize, usize, usize, usize)> {
    let hi = n.min(3);
    vec![
        (1, 0, 2, 0),
        (1, 0, 2, 1),
        (2, 0, 2, 1),
        (2, 0, 2, 2),
        (2, 0, 2, 3),
        (2, 1, 2, 2),
        (2, 1, 2, 3),
        (2, 2, 2, 3),
        (1, 1, 2, 3),
        (1, 2, 2, 0),
        (1, 3, 2, 1),
        (hi, 1, 2, 2),
    ]
}

// ---- on-disk cache -------------------------------------------------

/// Cache key for a stored polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub kind: String,
    pub n: usize,
    pub label: String,
    pub sigma: String,
}

impl CacheKey {
    fn canonical(&self) -> String {
        format!("{}|n={}|{}|{}", self.kind, self.n, self.label, self.sigma)
    }
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    version: u32,
    key: String,
    payload: SPoly,
}

/// The cache directory: `SUPERJACK_CACHE_DIR` or `.superjack-cache`.
pub fn cache_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".superjack-cache"))
}

fn fnv64(s: &str) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    for b in s.as_bytes() {
        hash ^= *b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

fn entry_path(dir: &Path, key: &CacheKey) -> PathBuf {
    dir.join(format!("{}-{:016x}.json", key.kind, fnv64(&key.canonical())))
}

/// Returns the cached polynomial for `key`, computing and storing it when
/// missing, version-incompatible or corrupt. Concurrent callers observe a
/// single stored value thanks to the create-then-rename write.
pub fn cache_lookup_or_compute<F>(dir: &Path, key: &CacheKey, compute: F) -> Result<SPoly, String>
where
    F: FnOnce() -> SPoly,
{
    cache_lookup_or_compute_fallible(dir, key, || Ok(compute()))
}

pub fn cache_lookup_or_compute_fallible<F>(
    dir: &Path,
    key: &CacheKey,
    compute: F,
) -> Result<SPoly, String>
where
    F: FnOnce() -> Result<SPoly, String>,
{
    let path = entry_path(dir, key);
    if let Ok(text) = std::fs::read_to_string(&path) {
        match serde_json::from_str::<CacheEntry>(&text) {
            Ok(entry) if entry.version == CACHE_VERSION && entry.key == key.canonical() => {
                return Ok(entry.payload);
            }
            Ok(_) => eprintln!("cache: stale entry for {}, recomputing", key.canonical()),
            Err(_) => eprintln!("cache: corrupt entry for {}, recomputing", key.canonical()),
        }
    }
    let payload = compute()?;
    let entry = CacheEntry {
        version: CACHE_VERSION,
        key: key.canonical(),
        payload,
    };
    if std::fs::create_dir_all(dir).is_ok() {
        let tmp = dir.join(format!(
            ".tmp-{}-{}",
            std::process::id(),
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_nanos())
                .unwrap_or(0)
        ));
        if let Ok(text) = serde_json::to_string(&entry) {
            if std::fs::write(&tmp, text).is_ok() {
                let _ = std::fs::rename(&tmp, &path);
            }
        }
    }
    Ok(entry.payload)
}

fn run_cache(cmd: &CacheCmd, json: bool) -> Result<bool, String> {
    let dir = cache_dir();
    match cmd {
        CacheCmd::Clear => {
            let mut removed = 0u64;
            if let Ok(entries) = std::fs::read_dir(&dir) {
                for e in entries.flatten() {
                    if e.path().extension().is_some_and(|x| x == "json") {
                        if std::fs::remove_file(e.path()).is_ok() {
                            removed += 1;
                        }
                    }
                }
            }
            if json {
                println!("{}", json!({"removed": removed}));
            } else {
                println!("removed {removed} entries");
            }
            Ok(true)
        }
        CacheCmd::Stats => {
            let mut count = 0u64;
            let mut bytes = 0u64;
            if let Ok(entries) = std::fs::read_dir(&dir) {
                for e in entries.flatten() {
                    if e.path().extension().is_some_and(|x| x == "json") {
                        count += 1;
                        bytes += e.metadata().map(|m| m.len()).unwrap_or(0);
                    }
                }
            }
            if json {
                println!(
                    "{}",
                    json!({"dir": dir.display().to_string(), "entries": count, "bytes": bytes})
                );
            } else {
                println!("{}: {count} entries, {bytes} bytes", dir.display());
            }
            Ok(true)
        }
    }
}

/// Parses an ℚ(α) scalar from CLI text (re-exported for the examples).
pub fn parse_scalar(s: &str) -> Result<AlphaRat, String> {
    crate::exact::parse_alpha_rat(s).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> i32 {
        let mut argv = vec!["superjack".to_string()];
        argv.extend(args.iter().map(|s| s.to_string()));
        run(argv)
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["spart", "list", "--sector", "nonsense", "--N", "3"]), 2);
        assert_eq!(run_args(&["jack", "compute", "(1,2;;;)", "--N", "3"]), 2);
        assert_eq!(run_args(&["frobnicate"]), 2);
    }

    #[test]
    fn cache_round_trip_and_versioning() {
        let dir = std::env::temp_dir().join(format!("sj-cache-test-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let key = CacheKey {
            kind: "E".into(),
            n: 2,
            label: "[1, 0]".into(),
            sigma: "-".into(),
        };
        let fresh = (*nonsym_jack(&[1, 0])).clone();
        let cold = cache_lookup_or_compute(&dir, &key, || fresh.clone()).unwrap();
        assert_eq!(cold, fresh);
        // warm hit must not recompute
        let warm =
            cache_lookup_or_compute(&dir, &key, || panic!("cache should have hit")).unwrap();
        assert_eq!(warm, fresh);
        // version bump forces a recompute and overwrite
        let path = entry_path(&dir, &key);
        let mut entry: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        entry["version"] = serde_json::json!(999);
        std::fs::write(&path, serde_json::to_string(&entry).unwrap()).unwrap();
        let recomputed = cache_lookup_or_compute(&dir, &key, || fresh.clone()).unwrap();
        assert_eq!(recomputed, fresh);
        let back: CacheEntry =
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(back.version, CACHE_VERSION);
        // corrupt payload also recomputes
        std::fs::write(&path, "{not json").unwrap();
        let recovered = cache_lookup_or_compute(&dir, &key, || fresh.clone()).unwrap();
        assert_eq!(recovered, fresh);
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn concurrent_lookups_observe_one_value() {
        let dir = std::env::temp_dir().join(format!("sj-cache-conc-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let key = CacheKey {
            kind: "P".into(),
            n: 3,
            label: "(0;0;1;)".into(),
            sigma: "SAA".into(),
        };
        let results: Vec<SPoly> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..4)
                .map(|_| {
                    let dir = dir.clone();
                    let key = key.clone();
                    scope.spawn(move || {
                        cache_lookup_or_compute(&dir, &key, || {
                            super_jack(
                                &"(0;0;1;)".parse().unwrap(),
                                3,
                                Variant::SAA,
                                JackRoute::Direct,
                            )
                            .unwrap()
                        })
                        .unwrap()
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for w in results.windows(2) {
            assert_eq!(w[0], w[1]);
        }
        // exactly one entry on disk
        let files = std::fs::read_dir(&dir).unwrap().count();
        assert_eq!(files, 1);
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn expansion_json_fixture_and_determinism() {
        let sp: SuperPartition = "(0;0;1;)".parse().unwrap();
        let p = super_jack(&sp, 4, Variant::SAA, JackRoute::Direct).unwrap();
        let exp = expand_monomial(&p, Variant::SAA).unwrap();
        let s1 = serde_json::to_string(&Value::Object(expansion_map(&exp))).unwrap();
        let s2 = serde_json::to_string(&Value::Object(expansion_map(&exp))).unwrap();
        assert_eq!(s1, s2);
        let v: Value = serde_json::from_str(&s1).unwrap();
        assert_eq!(v["(0;0;1;)"], "1");
        assert_eq!(v["(0;0;0;1)"], "-1/(α+3)");
    }

    #[test]
    fn printed_polynomial_reparses() {
        let sp: SuperPartition = "(0;1;0;)".parse().unwrap();
        let p = super_jack(&sp, 3, Variant::SAA, JackRoute::Direct).unwrap();
        let text = serde_json::to_string(&p).unwrap();
        let back: SPoly = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }
}
