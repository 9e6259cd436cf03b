//! Rendering: CSV to stdout, or one JSON document per run with a `meta`
//! header and a `reports` array.

use std::io;
use std::time::{SystemTime, UNIX_EPOCH};

use anzahl::counting::{Family, FormType, ProfileParams};
use anzahl::verify::{CheckStatus, IdentityReport, SweepReport};
use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// One evaluated profile of a `table` run.
pub struct TableRow {
    pub family: &'static str,
    pub q: Option<i64>,
    pub profile: ProfileParams,
    pub symbolic: String,
    pub numeric: Option<String>,
}

const TABLE_HEADER: [&str; 15] = [
    "family", "q", "n", "eps", "i", "j", "delta", "lambda", "k", "zeta", "nu", "mu", "eta",
    "symbolic", "numeric",
];

fn sign_cell(t: Option<FormType>) -> String {
    t.map(|t| t.sign().to_string()).unwrap_or_default()
}

fn int_cell(v: Option<i64>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

pub fn write_table_csv(rows: &[TableRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    w.write_record(TABLE_HEADER)?;
    for row in rows {
        let p = &row.profile;
        w.write_record([
            row.family.to_string(),
            int_cell(row.q),
            p.n.to_string(),
            sign_cell(Some(p.eps)),
            p.i.to_string(),
            p.j.to_string(),
            sign_cell(Some(p.delta)),
            sign_cell(p.lambda),
            int_cell(p.k),
            sign_cell(p.zeta),
            sign_cell(p.nu),
            sign_cell(p.mu),
            sign_cell(p.eta),
            row.symbolic.clone(),
            row.numeric.clone().unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn table_row_json(row: &TableRow) -> Value {
    let mut obj = match serde_json::to_value(&row.profile).expect("profile serializes") {
        Value::Object(map) => map,
        _ => unreachable!("a profile serializes as an object"),
    };
    obj.insert("family".into(), json!(row.family));
    obj.insert("q".into(), json!(row.q));
    obj.insert("symbolic".into(), json!(row.symbolic));
    obj.insert("numeric".into(), json!(row.numeric));
    Value::Object(obj)
}

fn unix_timestamp() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

pub fn table_meta(
    family: &str,
    n: i64,
    eps: Option<i64>,
    q: Option<i64>,
    timestamp: bool,
) -> Map<String, Value> {
    let mut meta = Map::new();
    meta.insert("command".into(), json!("table"));
    meta.insert("family".into(), json!(family));
    meta.insert("n".into(), json!(n));
    meta.insert("eps".into(), json!(eps));
    meta.insert("q".into(), json!(q));
    if timestamp {
        meta.insert("timestamp".into(), json!(unix_timestamp()));
    }
    meta
}

pub fn verify_meta(
    suite: &str,
    n_max: i64,
    primes: &[u32],
    timestamp: bool,
) -> Map<String, Value> {
    let mut meta = Map::new();
    meta.insert("command".into(), json!("verify"));
    meta.insert("suite".into(), json!(suite));
    meta.insert("n_max".into(), json!(n_max));
    meta.insert("primes".into(), json!(primes));
    if timestamp {
        meta.insert("timestamp".into(), json!(unix_timestamp()));
    }
    meta
}

pub fn json_doc(meta: Map<String, Value>, reports: Vec<Value>) -> String {
    serde_json::to_string_pretty(&json!({ "meta": meta, "reports": reports }))
        .expect("documents serialize")
}

pub fn verify_reports_json(
    identities: &[IdentityReport],
    sweeps: &[(Family, SweepReport)],
) -> Vec<Value> {
    let mut out = Vec::with_capacity(identities.len() + sweeps.len());
    for r in identities {
        let mut v = serde_json::to_value(r).expect("report serializes");
        v.as_object_mut().unwrap().insert("kind".into(), json!("identity"));
        out.push(v);
    }
    for (family, r) in sweeps {
        let mut v = serde_json::to_value(r).expect("report serializes");
        let obj = v.as_object_mut().unwrap();
        obj.insert("kind".into(), json!("sweep"));
        obj.insert("family".into(), json!(family.to_string()));
        out.push(v);
    }
    out
}

const VERIFY_HEADER: [&str; 8] = ["kind", "id", "params", "q", "lhs", "rhs", "status", "reason"];

fn status_cells(status: &CheckStatus) -> (String, String) {
    match status {
        CheckStatus::Match => ("match".into(), String::new()),
        CheckStatus::Mismatch => ("mismatch".into(), String::new()),
        CheckStatus::Skipped { reason } => ("skipped".into(), reason.clone()),
    }
}

pub fn write_verify_csv(
    identities: &[IdentityReport],
    sweeps: &[(Family, SweepReport)],
) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    w.write_record(VERIFY_HEADER)?;
    for r in identities {
        let (status, reason) = status_cells(&r.status);
        w.write_record([
            "identity".to_string(),
            r.identity_id.to_string(),
            r.params.clone(),
            String::new(),
            r.lhs.clone(),
            r.rhs.clone(),
            status,
            reason,
        ])?;
    }
    for (family, r) in sweeps {
        let (status, reason) = status_cells(&r.status);
        w.write_record([
            "sweep".to_string(),
            family.to_string(),
            r.profile.label(),
            r.q.to_string(),
            r.formula_value.clone().unwrap_or_default(),
            r.oracle_value.clone().unwrap_or_default(),
            status,
            reason,
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn print_verify_summary(
    identities: &[IdentityReport],
    sweeps: &[(Family, SweepReport)],
    n_max: i64,
) {
    if !identities.is_empty() {
        let bad = identities.iter().filter(|r| !r.status.is_match()).count();
        println!("identities (n <= {n_max}): {} checks, {bad} mismatches", identities.len());
    }
    for family in [Family::Alpha, Family::Beta, Family::Gamma, Family::Rho] {
        let fam: Vec<&SweepReport> =
            sweeps.iter().filter(|(f, _)| *f == family).map(|(_, r)| r).collect();
        if fam.is_empty() {
            continue;
        }
        let skipped =
            fam.iter().filter(|r| matches!(r.status, CheckStatus::Skipped { .. })).count();
        let bad = fam.iter().filter(|r| matches!(r.status, CheckStatus::Mismatch)).count();
        println!(
            "oracle {family}: {} compared, {skipped} skipped, {bad} mismatches",
            fam.len() - skipped
        );
    }
    let mut shown = 0;
    let mut detail = |line: String| {
        if shown < 20 {
            println!("{line}");
        } else if shown == 20 {
            println!("... further mismatches suppressed");
        }
        shown += 1;
    };
    for r in identities.iter().filter(|r| matches!(r.status, CheckStatus::Mismatch)) {
        detail(format!("MISMATCH {} [{}]: {} != {}", r.identity_id, r.params, r.lhs, r.rhs));
    }
    for (family, r) in sweeps.iter().filter(|(_, r)| matches!(r.status, CheckStatus::Mismatch)) {
        detail(format!(
            "MISMATCH {family} {} at q={}: formula {} != oracle {}",
            r.profile.label(),
            r.q,
            r.formula_value.as_deref().unwrap_or("-"),
            r.oracle_value.as_deref().unwrap_or("-"),
        ));
    }
}
