//! Tabulated curves and their CSV / JSON encodings.

use std::io::Write;

use anyhow::{bail, Result};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::curve::Curve;
use crate::format::fmt_g;
use hypercauchy_core::numerics::GridSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Row {
    pub x: f64,
    pub value: f64,
}

/// One evaluated curve: rows sorted by `x`, all finite.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub law: String,
    pub params: Value,
    pub rows: Vec<Row>,
}

/// Evaluates `curve` on every grid node, fanning out over the current rayon
/// pool; rows come back in grid order.
pub fn tabulate(curve: &Curve, grid: &GridSpec) -> Result<OutputRecord> {
    let rows = (0..grid.len())
        .into_par_iter()
        .map(|i| {
            let x = grid.node(i);
            let value = curve.eval(x)?;
            if !value.is_finite() {
                bail!("{} is not finite at x = {x}", curve.tag());
            }
            Ok(Row { x, value })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OutputRecord { law: curve.tag().to_string(), params: curve.params(), rows })
}

impl OutputRecord {
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "x,value")?;
        for r in &self.rows {
            writeln!(out, "{},{}", fmt_g(r.x), fmt_g(r.value))?;
        }
        out.flush()
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        serde_json::to_writer_pretty(&mut out, self)?;
        writeln!(out)?;
        out.flush()
    }

    pub fn write<W: Write>(&self, format: Format, out: W) -> std::io::Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::CurveArgs;

    #[test]
    fn csv_layout() {
        let c = Curve::from_args("cauchy", CurveArgs { t: 1.0, ..Default::default() }).unwrap();
        let rec = tabulate(&c, &GridSpec::new(-1.0, 1.0, 3).unwrap()).unwrap();
        let mut buf = Vec::new();
        rec.write_csv(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "x,value\n-1,0.159154943092\n0,0.318309886184\n1,0.159154943092\n"
        );
    }

    #[test]
    fn json_echoes_params() {
        let c = Curve::from_args("hyper", CurveArgs { n: Some(3), t: 2.0, ..Default::default() }).unwrap();
        let rec = tabulate(&c, &GridSpec::new(0.0, 1.0, 2).unwrap()).unwrap();
        let mut buf = Vec::new();
        rec.write_json(&mut buf).unwrap();
        let v: Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["law"], "hyper");
        assert_eq!(v["params"]["n"], 3);
        assert_eq!(v["rows"].as_array().unwrap().len(), 2);
    }
}
