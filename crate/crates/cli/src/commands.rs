use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use partrec::catalog::{self, ENTRIES};
use partrec::methods::compute;
use partrec::recurrence::verify;
use partrec::selftest::{self, Faults};
use partrec::{Count, Error, FamilySpec, Identity, Method, Oracle, Params, Result};
use rayon::prelude::*;

use crate::table::{self, CacheLookup};

pub enum Status {
    Ok,
    Failed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Builds `via` for `family`, passing on whichever family parameters the
/// entry accepts.
fn via_identity(id: &str, params: &Params) -> Result<Identity> {
    let entry = catalog::entry(id)?;
    let mut accepted = Params::new();
    for (k, v) in params.iter() {
        if entry.defaults.iter().any(|(d, _)| *d == k) {
            accepted.insert(k, v);
        }
    }
    catalog::build(id, &accepted)
}

pub struct ComputeArgs {
    pub family: String,
    pub params: Params,
    pub max: usize,
    pub method: Method,
    pub via: Option<String>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
}

pub fn compute_cmd(args: ComputeArgs) -> Result<Status> {
    let family = FamilySpec::from_name(&args.family, &args.params)?;
    let via = args.via.as_deref().map(|id| via_identity(id, &args.params)).transpose()?;
    if args.method == Method::Enum {
        // Fail before touching the cache so the guard is reported consistently.
        partrec::counting::enum_count(&family, args.max)?;
    }

    let values = match &args.cache_dir {
        None => compute(&family, args.max, args.method, via.as_ref())?,
        Some(dir) => match table::load_cache(dir, &family, args.max) {
            CacheLookup::Hit(values) => values,
            lookup => {
                if let CacheLookup::Rejected(why) = &lookup {
                    eprintln!("warning: ignoring cache: {why}");
                }
                let values = compute(&family, args.max, args.method, via.as_ref())?;
                let keep_existing = matches!(lookup, CacheLookup::Short(len) if len > values.len());
                if !keep_existing {
                    table::store_cache(dir, &family, &values)?;
                }
                values
            }
        },
    };

    let text = match args.format {
        Format::Csv => table::to_csv(&values),
        Format::Json => table::to_json(&family, &values),
    };
    match &args.out {
        Some(path) => table::write_atomic(path, &text)?,
        None => print!("{text}"),
    }
    Ok(Status::Ok)
}

pub fn verify_cmd(target: &str, params: &Params, max: usize, oracle: Oracle) -> Result<Status> {
    let idents = if target == "all" {
        if !params.is_empty() {
            return Err(Error::Usage("`verify all` runs the fixed parameter matrix; drop --params".into()));
        }
        catalog::full_matrix()
    } else {
        vec![catalog::build(target, params)?]
    };
    let reports: Vec<_> = idents.par_iter().map(|ident| verify(ident, max, oracle)).collect();

    let mut failed = 0;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for report in reports {
        let report = report?;
        match report.violations.first() {
            None => writeln!(out, "ok   {} (n <= {}, {})", report.id, report.max_n, report.oracle),
            Some(v) => {
                failed += 1;
                writeln!(out, "FAIL {}: n={} lhs={} rhs={}", report.id, v.n, v.lhs, v.rhs)
            }
        }
        .expect("stdout");
    }
    if failed > 0 {
        eprintln!("{failed} identities failed");
        return Ok(Status::Failed);
    }
    Ok(Status::Ok)
}

pub fn selftest_cmd(max: usize, faults: Faults) -> Result<Status> {
    let checks = selftest::run(max, faults)?;
    let mut ok = true;
    for check in &checks {
        match check.first_mismatch {
            None => println!("ok   {}", check.name),
            Some(n) => {
                ok = false;
                println!("FAIL {}: first mismatch at q^{n}", check.name);
            }
        }
    }
    Ok(if ok { Status::Ok } else { Status::Failed })
}

fn table_bytes(values: &[Count]) -> u64 {
    values.iter().map(|v| v.bits().div_ceil(8).max(1)).sum()
}

pub fn bench_cmd(
    family: &str,
    params: &Params,
    max: usize,
    methods: &[Method],
    via: Option<&str>,
    disagree: bool,
) -> Result<Status> {
    let family = FamilySpec::from_name(family, params)?;
    let via = via.map(|id| via_identity(id, params)).transpose()?;
    if methods.is_empty() {
        return Err(Error::Usage("no methods given".into()));
    }
    println!("{:<12} {:>12} {:>10} {:>12}", "method", "seconds", "entries", "bytes");
    let mut tables: Vec<(Method, Vec<Count>)> = Vec::new();
    for &method in methods {
        let start = Instant::now();
        let values = compute(&family, max, method, via.as_ref())?;
        let secs = start.elapsed().as_secs_f64();
        println!("{:<12} {:>12.6} {:>10} {:>12}", method.name(), secs, values.len(), table_bytes(&values));
        tables.push((method, values));
    }
    if disagree {
        if let Some(last) = tables.last_mut().and_then(|(_, t)| t.last_mut()) {
            *last += 1;
        }
    }

    let (base_method, base) = &tables[0];
    for (method, values) in &tables[1..] {
        if let Some(n) = (0..base.len()).find(|&n| base[n] != values[n]) {
            eprintln!("disagreement at n={n}: {base_method}={} {method}={}", base[n], values[n]);
            return Ok(Status::Failed);
        }
    }
    println!("{} = {} (all methods agree)", format_args!("{family}({max})"), base[max]);
    Ok(Status::Ok)
}

pub fn list_cmd(json: bool) -> Result<Status> {
    if json {
        let rows: Vec<serde_json::Value> = ENTRIES
            .iter()
            .map(|e| {
                let params: serde_json::Map<String, serde_json::Value> =
                    e.defaults.iter().map(|(k, v)| (k.to_string(), (*v).into())).collect();
                serde_json::json!({ "id": e.id, "params": params, "citation": e.citation })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&rows).expect("catalog serializes"));
    } else {
        for e in ENTRIES {
            let params: Vec<String> = e.defaults.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let params = if params.is_empty() { "-".to_string() } else { params.join(",") };
            println!("{}\t{}\t{}", e.id, params, e.citation);
        }
    }
    Ok(Status::Ok)
}
