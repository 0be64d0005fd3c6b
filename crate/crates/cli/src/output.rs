//! Report and table serialization. Floats are written with 17 significant
//! digits so every value parses back to the same bits.

use std::io::Write;

use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;
use xi_harmonic::duffin::{ZeroEntry, ZerosTable};
use xi_harmonic::{Complex64, IdentityId, Param, VerificationReport};

pub fn fmt_f64(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{v:.16e}")
    }
}

pub fn parse_f64(s: &str) -> Option<f64> {
    match s {
        "nan" => Some(f64::NAN),
        "inf" => Some(f64::INFINITY),
        "-inf" => Some(f64::NEG_INFINITY),
        _ => s.parse().ok(),
    }
}

fn raw_f64(v: f64) -> Box<RawValue> {
    let text = if v.is_finite() { fmt_f64(v) } else { format!("\"{}\"", fmt_f64(v)) };
    RawValue::from_string(text).expect("formatted float is valid JSON")
}

/// `name=value;…` in input order, used in the CSV column.
pub fn inputs_to_text(inputs: &[Param]) -> String {
    inputs.iter().map(|p| format!("{}={}", p.name, fmt_f64(p.value))).collect::<Vec<_>>().join(";")
}

pub fn inputs_from_text(s: &str) -> Option<Vec<Param>> {
    if s.is_empty() {
        return Some(vec![]);
    }
    s.split(';')
        .map(|kv| {
            let (k, v) = kv.split_once('=')?;
            Some(Param::new(k, parse_f64(v)?))
        })
        .collect()
}

/// JSON object of the inputs; a name that occurs more than once maps to an array.
fn inputs_to_json(inputs: &[Param]) -> Box<RawValue> {
    let mut names: Vec<&str> = Vec::new();
    for p in inputs {
        if !names.contains(&p.name.as_str()) {
            names.push(&p.name);
        }
    }
    let fields: Vec<String> = names
        .iter()
        .map(|name| {
            let vals: Vec<String> = inputs
                .iter()
                .filter(|p| p.name == *name)
                .map(|p| raw_f64(p.value).get().to_string())
                .collect();
            let key = serde_json::to_string(name).expect("string key");
            if vals.len() == 1 {
                format!("{key}:{}", vals[0])
            } else {
                format!("{key}:[{}]", vals.join(","))
            }
        })
        .collect();
    RawValue::from_string(format!("{{{}}}", fields.join(","))).expect("inputs JSON")
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    identity_id: IdentityId,
    inputs: Box<RawValue>,
    lhs_re: Box<RawValue>,
    lhs_im: Box<RawValue>,
    rhs_re: Box<RawValue>,
    rhs_im: Box<RawValue>,
    abs_err: Box<RawValue>,
    rel_err: Box<RawValue>,
    pass: bool,
    variant_notes: &'a str,
    n_evals: usize,
}

/// One CSV row; every float is a string so the exact text survives.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CsvRecord {
    pub identity_id: String,
    pub inputs: String,
    pub lhs_re: String,
    pub lhs_im: String,
    pub rhs_re: String,
    pub rhs_im: String,
    pub abs_err: String,
    pub rel_err: String,
    pub pass: bool,
    pub variant_notes: String,
    pub n_evals: usize,
}

impl CsvRecord {
    pub fn from_report(r: &VerificationReport) -> Self {
        CsvRecord {
            identity_id: r.identity_id.as_str().into(),
            inputs: inputs_to_text(&r.inputs),
            lhs_re: fmt_f64(r.lhs.re),
            lhs_im: fmt_f64(r.lhs.im),
            rhs_re: fmt_f64(r.rhs.re),
            rhs_im: fmt_f64(r.rhs.im),
            abs_err: fmt_f64(r.abs_err),
            rel_err: fmt_f64(r.rel_err),
            pass: r.pass,
            variant_notes: r.variant_notes.clone(),
            n_evals: r.n_evals,
        }
    }

    /// Rebuilds the report fields carried by the CSV (err_budget is not one of them).
    pub fn to_report(&self) -> Result<VerificationReport, String> {
        let num = |s: &str| parse_f64(s).ok_or_else(|| format!("bad number {s:?}"));
        Ok(VerificationReport {
            identity_id: IdentityId::parse(&self.identity_id).ok_or_else(|| format!("unknown identity {:?}", self.identity_id))?,
            inputs: inputs_from_text(&self.inputs).ok_or_else(|| format!("bad inputs {:?}", self.inputs))?,
            lhs: Complex64::new(num(&self.lhs_re)?, num(&self.lhs_im)?),
            rhs: Complex64::new(num(&self.rhs_re)?, num(&self.rhs_im)?),
            abs_err: num(&self.abs_err)?,
            rel_err: num(&self.rel_err)?,
            pass: self.pass,
            variant_notes: self.variant_notes.clone(),
            n_evals: self.n_evals,
            err_budget: f64::NAN,
        })
    }
}

pub fn reports_json(reports: &[VerificationReport]) -> String {
    let recs: Vec<JsonRecord> = reports
        .iter()
        .map(|r| JsonRecord {
            identity_id: r.identity_id,
            inputs: inputs_to_json(&r.inputs),
            lhs_re: raw_f64(r.lhs.re),
            lhs_im: raw_f64(r.lhs.im),
            rhs_re: raw_f64(r.rhs.re),
            rhs_im: raw_f64(r.rhs.im),
            abs_err: raw_f64(r.abs_err),
            rel_err: raw_f64(r.rel_err),
            pass: r.pass,
            variant_notes: &r.variant_notes,
            n_evals: r.n_evals,
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&recs).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_text<T: Serialize>(rows: &[T], header: &[&str]) -> Result<String, csv::Error> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("CSV is UTF-8"))
}

pub const REPORT_COLUMNS: [&str; 11] =
    ["identity_id", "inputs", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err", "pass", "variant_notes", "n_evals"];

pub fn reports_csv(reports: &[VerificationReport]) -> Result<String, csv::Error> {
    let rows: Vec<CsvRecord> = reports.iter().map(CsvRecord::from_report).collect();
    csv_text(&rows, &REPORT_COLUMNS)
}

pub fn parse_reports_csv(text: &str) -> Result<Vec<VerificationReport>, String> {
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    let headers = rd.headers().map_err(|e| e.to_string())?.clone();
    if headers.iter().ne(REPORT_COLUMNS) {
        return Err(format!("unexpected report columns {headers:?}"));
    }
    rd.deserialize::<CsvRecord>().map(|r| r.map_err(|e| e.to_string())?.to_report()).collect()
}

#[derive(Debug, Serialize, Deserialize)]
struct ZeroRow {
    index: usize,
    gamma: String,
    bracket_lo: String,
    bracket_hi: String,
}

#[derive(Serialize)]
struct ZeroJson {
    index: usize,
    gamma: Box<RawValue>,
    bracket_lo: Box<RawValue>,
    bracket_hi: Box<RawValue>,
}

pub const ZERO_COLUMNS: [&str; 4] = ["index", "gamma", "bracket_lo", "bracket_hi"];

pub fn zeros_csv(table: &ZerosTable) -> Result<String, csv::Error> {
    let rows: Vec<ZeroRow> = table
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| ZeroRow { index: i + 1, gamma: fmt_f64(e.gamma), bracket_lo: fmt_f64(e.bracket.0), bracket_hi: fmt_f64(e.bracket.1) })
        .collect();
    csv_text(&rows, &ZERO_COLUMNS)
}

pub fn zeros_json(table: &ZerosTable) -> String {
    let rows: Vec<ZeroJson> = table
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| ZeroJson { index: i + 1, gamma: raw_f64(e.gamma), bracket_lo: raw_f64(e.bracket.0), bracket_hi: raw_f64(e.bracket.1) })
        .collect();
    let mut s = serde_json::to_string_pretty(&rows).expect("zeros serialize");
    s.push('\n');
    s
}

pub fn parse_zeros_csv(text: &str) -> Result<ZerosTable, String> {
    let mut rd = csv::Reader::from_reader(text.as_bytes());
    let headers = rd.headers().map_err(|e| e.to_string())?.clone();
    if headers.iter().ne(ZERO_COLUMNS) {
        return Err(format!("unexpected zeros columns {headers:?}"));
    }
    let mut entries = Vec::new();
    for (i, row) in rd.deserialize::<ZeroRow>().enumerate() {
        let row = row.map_err(|e| e.to_string())?;
        if row.index != i + 1 {
            return Err(format!("zeros rows must be numbered 1, 2, …; row {} has index {}", i + 1, row.index));
        }
        let num = |s: &str| parse_f64(s).ok_or_else(|| format!("bad number {s:?} in zeros row {}", row.index));
        entries.push(ZeroEntry { gamma: num(&row.gamma)?, bracket: (num(&row.bracket_lo)?, num(&row.bracket_hi)?) });
    }
    Ok(ZerosTable { entries })
}

#[derive(Serialize)]
struct TrajectoryRow {
    gamma: String,
    y: String,
    value: String,
}

#[derive(Serialize)]
struct TrajectoryJson {
    gamma: Box<RawValue>,
    y: Box<RawValue>,
    value: Box<RawValue>,
}

/// Plot-ready (γ, y, value) rows.
pub fn trajectories(rows: &[(f64, f64, f64)], json: bool) -> Result<String, csv::Error> {
    if json {
        let recs: Vec<TrajectoryJson> =
            rows.iter().map(|&(g, y, v)| TrajectoryJson { gamma: raw_f64(g), y: raw_f64(y), value: raw_f64(v) }).collect();
        let mut s = serde_json::to_string_pretty(&recs).expect("trajectories serialize");
        s.push('\n');
        return Ok(s);
    }
    let recs: Vec<TrajectoryRow> =
        rows.iter().map(|&(g, y, v)| TrajectoryRow { gamma: fmt_f64(g), y: fmt_f64(y), value: fmt_f64(v) }).collect();
    csv_text(&recs, &["gamma", "y", "value"])
}

pub fn write_output(text: &str, out: Option<&std::path::Path>) -> std::io::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text),
        None => {
            let mut o = std::io::stdout().lock();
            o.write_all(text.as_bytes())?;
            o.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn report(x: f64, lhs: f64, notes: &str) -> VerificationReport {
        VerificationReport::judged(
            IdentityId::Eq11,
            vec![Param::new("x", x), Param::new("y", 0.5), Param::new("y", 0.1)],
            Complex64::new(lhs, -lhs / 3.0),
            Complex64::new(1.0 / 3.0, 0.0),
            1e-12,
            42,
            lhs > 0.0,
            notes,
        )
    }

    fn same_bits(a: f64, b: f64) -> bool {
        a.to_bits() == b.to_bits() || (a.is_nan() && b.is_nan())
    }

    #[test]
    fn json_has_exact_fields() {
        let js = reports_json(&[report(0.25, 0.1, "n")]);
        let v: serde_json::Value = serde_json::from_str(&js).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 1);
        let keys: Vec<&String> = arr[0].as_object().unwrap().keys().collect();
        let mut want: Vec<&str> = REPORT_COLUMNS.to_vec();
        want.sort();
        assert_eq!(keys, want);
        assert_eq!(arr[0]["pass"], true);
        assert_eq!(arr[0]["inputs"]["y"].as_array().unwrap().len(), 2);
        assert!(js.contains("2.5000000000000000e-1"));
    }

    #[test]
    fn non_finite_values_render_as_strings() {
        let mut r = report(1.0, 1.0, "");
        r.rel_err = f64::INFINITY;
        let v: serde_json::Value = serde_json::from_str(&reports_json(&[r])).unwrap();
        assert_eq!(v[0]["rel_err"], "inf");
    }

    #[test]
    fn zeros_roundtrip() {
        let t = ZerosTable { entries: vec![ZeroEntry { gamma: 14.134725141734695, bracket: (14.134725137, 14.134725145) }] };
        let back = parse_zeros_csv(&zeros_csv(&t).unwrap()).unwrap();
        assert_eq!(back, t);
    }

    proptest! {
        #[test]
        fn csv_roundtrip_is_bit_exact(x in prop::num::f64::ANY, lhs in prop::num::f64::ANY,
                                      notes in "[ -~\n\"]{0,40}") {
            let reports = vec![report(x, lhs, &notes), report(1.0, -2.0, "a, \"quoted\" note")];
            let back = parse_reports_csv(&reports_csv(&reports).unwrap()).unwrap();
            prop_assert_eq!(back.len(), reports.len());
            for (a, b) in reports.iter().zip(&back) {
                prop_assert_eq!(a.identity_id, b.identity_id);
                prop_assert_eq!(a.inputs.len(), b.inputs.len());
                for (p, q) in a.inputs.iter().zip(&b.inputs) {
                    prop_assert_eq!(&p.name, &q.name);
                    prop_assert!(same_bits(p.value, q.value));
                }
                for (u, v) in [(a.lhs.re, b.lhs.re), (a.lhs.im, b.lhs.im), (a.rhs.re, b.rhs.re), (a.rhs.im, b.rhs.im),
                               (a.abs_err, b.abs_err), (a.rel_err, b.rel_err)] {
                    prop_assert!(same_bits(u, v), "{} vs {}", u, v);
                }
                prop_assert_eq!(a.pass, b.pass);
                prop_assert_eq!(&a.variant_notes, &b.variant_notes);
                prop_assert_eq!(a.n_evals, b.n_evals);
            }
        }
    }
}
