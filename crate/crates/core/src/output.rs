//! Flat records for CSV and JSON output.

use crate::lerch::Evaluation;
use crate::oracle::OracleResult;
use crate::ComplexScalar;
use serde::{Deserialize, Serialize};
use std::io::Write;

/// Shortest round-trip text for `x`, switching to exponent form outside
/// `[1e-5, 1e17)`.
pub fn format_real(x: f64) -> String {
    let mag = x.abs();
    if x == 0.0 || !x.is_finite() || (1e-5..1e17).contains(&mag) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn format_opt(x: Option<f64>) -> String {
    x.map(format_real).unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub z_re: f64,
    pub z_im: f64,
    pub s: f64,
    pub a: f64,
    pub tol: f64,
    pub value_re: f64,
    pub value_im: f64,
    pub n: usize,
    pub kn: usize,
    pub est_error: f64,
    pub oracle_re: Option<f64>,
    pub oracle_im: Option<f64>,
    pub deviation: Option<f64>,
}

impl OutputRecord {
    pub const HEADER: [&'static str; 13] = [
        "z_re", "z_im", "s", "a", "tol", "value_re", "value_im", "n", "kn", "est_error", "oracle_re",
        "oracle_im", "deviation",
    ];

    pub fn new(z: ComplexScalar, s: f64, a: f64, tol: f64, eval: &Evaluation, oracle: Option<&OracleResult>) -> Self {
        OutputRecord {
            z_re: z.re,
            z_im: z.im,
            s,
            a,
            tol,
            value_re: eval.value.re,
            value_im: eval.value.im,
            n: eval.n,
            kn: eval.kn,
            est_error: eval.est_error,
            oracle_re: oracle.map(|o| o.value.re),
            oracle_im: oracle.map(|o| o.value.im),
            deviation: oracle.map(|o| (o.value - eval.value).norm()),
        }
    }

    pub fn csv_fields(&self) -> Vec<String> {
        vec![
            format_real(self.z_re),
            format_real(self.z_im),
            format_real(self.s),
            format_real(self.a),
            format_real(self.tol),
            format_real(self.value_re),
            format_real(self.value_im),
            self.n.to_string(),
            self.kn.to_string(),
            format_real(self.est_error),
            format_opt(self.oracle_re),
            format_opt(self.oracle_im),
            format_opt(self.deviation),
        ]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}

/// Header plus rows as RFC 4180 CSV.
pub fn write_csv<W, I, R, S>(out: W, header: &[&str], rows: I) -> csv::Result<()>
where
    W: Write,
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = S>,
    S: AsRef<[u8]>,
{
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(header)?;
    for row in rows {
        writer.write_record(row)?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn sample() -> OutputRecord {
        let eval = Evaluation {
            value: Complex64::new(0.1 + 0.2, -1.0 / 3.0),
            n: 25,
            kn: 18,
            est_error: 2.0 / 3.0 * 1e-10,
            f_evals: 18,
            warnings: vec![],
        };
        OutputRecord::new(Complex64::new(-0.5, 0.0), 1.5, 1.0, 1e-10, &eval, None)
    }

    #[test]
    fn real_formatting() {
        assert_eq!(format_real(0.0), "0");
        assert_eq!(format_real(1.0), "1");
        assert_eq!(format_real(0.1111111111111111), "0.1111111111111111");
        assert_eq!(format_real(1e-10), "1e-10");
        assert_eq!(format_real(2.5e-11), "2.5e-11");
        for x in [0.1 + 0.2, 1.0 / 3.0, 6.02e23, 1e-300, -7.25e-6] {
            assert_eq!(format_real(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn json_round_trip() {
        let rec = sample();
        let back: OutputRecord = serde_json::from_str(&rec.to_json()).unwrap();
        assert_eq!(back, rec);
        assert!(rec.to_json().contains("\"oracle_re\":null"));
    }

    #[test]
    fn csv_and_json_agree() {
        let rec = sample();
        let mut buf = Vec::new();
        write_csv(&mut buf, &OutputRecord::HEADER, [rec.csv_fields()]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), OutputRecord::HEADER.join(","));
        let fields: Vec<&str> = lines.next().unwrap().split(',').collect();
        let json: serde_json::Value = serde_json::from_str(&rec.to_json()).unwrap();
        for (key, field) in OutputRecord::HEADER.iter().zip(fields) {
            match json[key].as_f64() {
                Some(v) => assert_eq!(field.parse::<f64>().unwrap(), v, "{key}"),
                None => assert_eq!(field, "", "{key}"),
            }
        }
    }
}
