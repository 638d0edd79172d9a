//! Long-format CSV for [`CorrelationSweep`] and a static SVG plot of it.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::datasets::GeneratorParams;
use crate::error::{Error, Result};
use crate::metrics::MetricId;
use crate::stats::{CorrelationSweep, Peer, SweepRow};

const COLUMNS: [&str; 6] = ["metric", "peer", "alpha", "mean_rho", "max_abs_rho", "graphs"];

/// Serializes a sweep. Header comments carry the generator settings and
/// the master seed; values are written at full precision so that
/// [`read_sweep_csv`] restores them exactly.
pub fn write_sweep_csv(sweep: &CorrelationSweep) -> String {
    let g = &sweep.generator;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# generator=barabasi-albert n={} m_attach={} weight_low={} weight_high={}",
        g.n, g.m_attach, g.weight_low, g.weight_high
    );
    let _ = writeln!(out, "# ensemble={} seed={}", sweep.ensemble_size, g.seed);
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(COLUMNS).expect("in-memory write");
    for row in &sweep.rows {
        for (k, alpha) in sweep.alphas.iter().enumerate() {
            w.write_record([
                row.metric.to_string(),
                row.peer.to_string(),
                alpha.to_string(),
                row.mean_rho[k].to_string(),
                row.max_abs_rho[k].to_string(),
                row.graphs[k].to_string(),
            ])
            .expect("in-memory write");
        }
    }
    out.push_str(std::str::from_utf8(&w.into_inner().expect("in-memory flush")).expect("utf-8"));
    out
}

fn header_fields(line: &str) -> BTreeMap<&str, &str> {
    line.trim_start_matches('#')
        .split_whitespace()
        .filter_map(|kv| kv.split_once('='))
        .collect()
}

fn header_value<T: std::str::FromStr>(fields: &BTreeMap<&str, &str>, key: &str) -> Result<T> {
    fields
        .get(key)
        .ok_or_else(|| Error::Parse {
            line: 0,
            message: format!("sweep header lacks `{key}`"),
        })?
        .parse()
        .map_err(|_| Error::Parse {
            line: 0,
            message: format!("sweep header field `{key}` is malformed"),
        })
}

/// Reads a file written by [`write_sweep_csv`]. Per-graph events are not
/// stored in the CSV, so the result has none.
pub fn read_sweep_csv(text: &str) -> Result<CorrelationSweep> {
    let mut fields = BTreeMap::new();
    for line in text.lines().take_while(|l| l.starts_with('#')) {
        fields.extend(header_fields(line));
    }
    let generator = GeneratorParams::new(
        header_value(&fields, "n")?,
        header_value(&fields, "m_attach")?,
        header_value(&fields, "weight_low")?,
        header_value(&fields, "weight_high")?,
        header_value(&fields, "seed")?,
    );
    let ensemble_size: usize = header_value(&fields, "ensemble")?;

    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut alphas: Vec<f64> = Vec::new();
    let mut rows: Vec<SweepRow> = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map_or(0, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(i + 2, |p| p.line() as usize);
        let bad = |what: &str| Error::Parse {
            line,
            message: format!("bad {what}"),
        };
        if record.len() != COLUMNS.len() {
            return Err(bad("field count"));
        }
        let metric: MetricId = record[0].parse().map_err(|_| bad("metric"))?;
        let peer: Peer = record[1].parse().map_err(|_| bad("peer"))?;
        let alpha: f64 = record[2].parse().map_err(|_| bad("alpha"))?;
        let mean: f64 = record[3].parse().map_err(|_| bad("mean_rho"))?;
        let max_abs: f64 = record[4].parse().map_err(|_| bad("max_abs_rho"))?;
        let graphs: usize = record[5].parse().map_err(|_| bad("graphs"))?;

        let k = match alphas.iter().position(|&a| a == alpha) {
            Some(k) => k,
            None if rows.len() <= 1 => {
                alphas.push(alpha);
                alphas.len() - 1
            }
            None => return Err(bad("alpha (not present for the first pair)")),
        };
        let row = match rows.last_mut() {
            Some(r) if r.metric == metric && r.peer == peer => r,
            _ => {
                rows.push(SweepRow {
                    metric,
                    peer,
                    mean_rho: Vec::new(),
                    max_abs_rho: Vec::new(),
                    graphs: Vec::new(),
                });
                rows.last_mut().expect("just pushed")
            }
        };
        if k != row.mean_rho.len() {
            return Err(bad("alpha order"));
        }
        row.mean_rho.push(mean);
        row.max_abs_rho.push(max_abs);
        row.graphs.push(graphs);
    }
    if rows.iter().any(|r| r.mean_rho.len() != alphas.len()) || rows.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "sweep rows do not cover every alpha".into(),
        });
    }
    Ok(CorrelationSweep {
        alphas,
        rows,
        ensemble_size,
        generator,
        events: Vec::new(),
    })
}

const PALETTE: [&str; 5] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];
const DASHES: [&str; 6] = ["", "6 3", "2 3", "8 3 2 3", "1 2", "10 4"];

/// Renders mean rho against alpha, one polyline per `(metric, peer)` pair.
/// With `pairs` empty, every distinctiveness metric is plotted against every
/// baseline. Output depends only on the sweep values, so it is byte-stable.
pub fn render_sweep_svg(sweep: &CorrelationSweep, pairs: &[(MetricId, Peer)]) -> String {
    let rows: Vec<&SweepRow> = if pairs.is_empty() {
        sweep
            .rows
            .iter()
            .filter(|r| matches!(r.peer, Peer::Baseline(_)))
            .collect()
    } else {
        pairs.iter().filter_map(|&(m, p)| sweep.row(m, p)).collect()
    };

    let (plot_w, plot_h) = (560.0, 360.0);
    let (left, top) = (60.0, 40.0);
    let legend_x = left + plot_w + 30.0;
    let width = legend_x + 140.0;
    let height = (top + plot_h + 60.0f64).max(top + 14.0 * rows.len() as f64 + 20.0);

    let a_min = sweep.alphas.iter().copied().fold(f64::INFINITY, f64::min);
    let a_max = sweep.alphas.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let span = if a_max > a_min { a_max - a_min } else { 1.0 };
    let x_of = |a: f64| {
        if a_max > a_min {
            left + (a - a_min) / span * plot_w
        } else {
            left + plot_w / 2.0
        }
    };
    let y_of = |rho: f64| top + (1.0 - rho) / 2.0 * plot_h;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="20" text-anchor="middle" font-size="13">Mean Spearman rho vs alpha (ensemble {}, seed {})</text>"#,
        left + plot_w / 2.0,
        sweep.ensemble_size,
        sweep.generator.seed
    );
    for tick in [-1.0, -0.5, 0.0, 0.5, 1.0] {
        let y = y_of(tick);
        let _ = writeln!(
            s,
            r##"<line x1="{left:.1}" y1="{y:.1}" x2="{:.1}" y2="{y:.1}" stroke="#ddd"/><text x="{:.1}" y="{:.1}" text-anchor="end">{tick}</text>"##,
            left + plot_w,
            left - 6.0,
            y + 4.0
        );
    }
    for &a in &sweep.alphas {
        let x = x_of(a);
        let _ = writeln!(
            s,
            r##"<line x1="{x:.1}" y1="{top:.1}" x2="{x:.1}" y2="{:.1}" stroke="#eee"/><text x="{x:.1}" y="{:.1}" text-anchor="middle">{a}</text>"##,
            top + plot_h,
            top + plot_h + 16.0
        );
    }
    let _ = writeln!(
        s,
        r#"<rect x="{left:.1}" y="{top:.1}" width="{plot_w:.1}" height="{plot_h:.1}" fill="none" stroke="black"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">alpha</text>"#,
        left + plot_w / 2.0,
        top + plot_h + 34.0
    );

    for (i, row) in rows.iter().enumerate() {
        let color = PALETTE[row.metric as usize % PALETTE.len()];
        let dash_index = match row.peer {
            Peer::Baseline(b) => b.metric as usize,
            Peer::Distinctiveness(m) => m as usize,
        };
        let dash = DASHES[dash_index % DASHES.len()];
        let dash_attr = if dash.is_empty() {
            String::new()
        } else {
            format!(r#" stroke-dasharray="{dash}""#)
        };
        let width_px = match row.peer {
            Peer::Baseline(b) if b.weighted => 2.0,
            _ => 1.0,
        };
        let points: Vec<String> = sweep
            .alphas
            .iter()
            .zip(&row.mean_rho)
            .filter(|(_, r)| r.is_finite())
            .map(|(&a, &r)| format!("{:.2},{:.2}", x_of(a), y_of(r)))
            .collect();
        let name = format!("{} vs {}", row.metric, row.peer);
        let _ = writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="{width_px}"{dash_attr}><title>{name}</title></polyline>"#,
            points.join(" ")
        );
        let ly = top + 14.0 * i as f64;
        let _ = writeln!(
            s,
            r#"<line x1="{legend_x:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke="{color}" stroke-width="{width_px}"{dash_attr}/><text x="{:.1}" y="{:.1}">{name}</text>"#,
            legend_x + 24.0,
            legend_x + 30.0,
            ly + 4.0
        );
    }
    s.push_str("</svg>\n");
    s
}
