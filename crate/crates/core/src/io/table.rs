use std::sync::Arc;

use serde_json::{json, Value};

use crate::centrality::{CentralityVector, MetricKind};
use crate::error::{Error, Result};

/// Formats `x` like C's `%.{digits}g`: `digits` significant digits, trailing
/// zeros dropped, exponent form outside `1e-4 <= |x| < 10^digits`.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Scores of several metrics over the same nodes, one column per metric.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultTable {
    labels: Arc<[String]>,
    columns: Vec<CentralityVector>,
}

impl ResultTable {
    pub fn new(labels: Arc<[String]>) -> Self {
        ResultTable {
            labels,
            columns: Vec::new(),
        }
    }

    /// Appends a column. Its nodes must be those of the table, in the same order.
    pub fn push(&mut self, column: CentralityVector) -> Result<()> {
        if column.labels() != &self.labels {
            return Err(Error::NodeSetMismatch(format!(
                "column {} does not follow the table's node order",
                column.column_name()
            )));
        }
        self.columns.push(column);
        Ok(())
    }

    pub fn labels(&self) -> &Arc<[String]> {
        &self.labels
    }

    pub fn columns(&self) -> &[CentralityVector] {
        &self.columns
    }

    /// CSV with a `node` column and one column per metric; cells carry six
    /// significant digits.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        let header = std::iter::once("node".to_string())
            .chain(self.columns.iter().map(CentralityVector::column_name));
        w.write_record(header).expect("in-memory write");
        for (i, label) in self.labels.iter().enumerate() {
            let row = std::iter::once(label.clone())
                .chain(self.columns.iter().map(|c| format_significant(c.scores()[i], 6)));
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    /// JSON at full precision. Non-finite scores become `null`.
    pub fn to_json(&self) -> String {
        let columns: Vec<Value> = self
            .columns
            .iter()
            .map(|c| {
                let (metric, alpha, direction) = match c.kind() {
                    MetricKind::Distinctiveness(s) => (
                        s.metric.to_string(),
                        json!(s.alpha),
                        json!(s.direction.as_str()),
                    ),
                    MetricKind::Baseline(b) => (b.to_string(), Value::Null, Value::Null),
                };
                json!({
                    "name": c.column_name(),
                    "metric": metric,
                    "alpha": alpha,
                    "direction": direction,
                    "normalized": c.is_normalized(),
                    "values": c.scores(),
                    "isolates": c.isolates().collect::<Vec<_>>(),
                })
            })
            .collect();
        let doc = json!({ "nodes": self.labels.as_ref(), "columns": columns });
        serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datasets::{builtin_dataset, Dataset};
    use crate::metrics::{Direction, Distinctiveness};

    #[test]
    fn significant_digits() {
        let cases = [
            (5.882352941, "5.88235"),
            (0.5, "0.5"),
            (2.0, "2"),
            (-0.000123456789, "-0.000123457"),
            (0.0000123456789, "1.23457e-05"),
            (1234567.0, "1.23457e+06"),
            (123456.0, "123456"),
            (999999.5, "1e+06"),
            (0.0, "0"),
            (-1.5, "-1.5"),
        ];
        for (x, want) in cases {
            assert_eq!(format_significant(x, 6), want, "{x}");
        }
        assert_eq!(format_significant(f64::NAN, 6), "NaN");
    }

    #[test]
    fn csv_and_json_agree() {
        let g = builtin_dataset(Dataset::ToyUndirected);
        let dc = Distinctiveness::new(&g, 2.0, Direction::Undirected).unwrap();
        let mut t = ResultTable::new(g.labels().clone());
        for v in dc.all() {
            t.push(v).unwrap();
        }
        let csv = t.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("node,d1@2,d2@2,d3@2,d4@2,d5@2"));
        assert_eq!(lines.count(), 6);
        assert!(!csv.contains('\r'));

        let json: Value = serde_json::from_str(&t.to_json()).unwrap();
        for (row, line) in csv.lines().skip(1).enumerate() {
            for (col, cell) in line.split(',').skip(1).enumerate() {
                let full = json["columns"][col]["values"][row].as_f64().unwrap();
                assert_eq!(format_significant(full, 6), cell);
                assert_eq!(full, t.columns()[col].scores()[row]);
            }
        }
        assert_eq!(json["columns"][0]["alpha"], 2.0);
    }

    #[test]
    fn rejects_foreign_columns() {
        let a = builtin_dataset(Dataset::ToyUndirected);
        let b = builtin_dataset(Dataset::Florentine);
        let mut t = ResultTable::new(a.labels().clone());
        let v = Distinctiveness::new(&b, 1.0, Direction::Undirected).unwrap().d1();
        assert!(t.push(v).is_err());
    }
}
