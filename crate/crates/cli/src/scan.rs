//! Grid and ray scans over coupling space.
//!
//! A scan is configured by [`ScanConfig`] (JSON file mirroring the struct
//! field-for-field; command-line flags override file values), executed in
//! parallel over grid points, and emitted as ordered records regardless of
//! completion order.

use crate::output::{num, opt_num, text, OutFormat, Table};
use num::rational::BigRational;
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::Value;
use std::path::PathBuf;

use ptchain::ratio::rational_from_f64;
use ptchain::{
    char_poly_from_squares, oracle, to_secular_form, assess, DomainState,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanMode {
    Criteria,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, Deserialize)]
pub struct GridAxis {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl GridAxis {
    pub fn value(&self, i: usize) -> f64 {
        if self.steps <= 1 {
            self.min
        } else {
            self.min + (self.max - self.min) * i as f64 / (self.steps - 1) as f64
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct RaySpec {
    pub direction: Vec<f64>,
    pub steps: usize,
}

/// Mirrors the JSON config document field-for-field.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanConfig {
    pub n: usize,
    #[serde(default)]
    pub grid: Vec<GridAxis>,
    #[serde(default)]
    pub rays: Vec<RaySpec>,
    pub mode: ScanMode,
    pub epsilon: f64,
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default = "default_format")]
    pub format: String,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub threads: Option<usize>,
    #[serde(default)]
    pub spectrum: bool,
}

fn default_format() -> String {
    "csv".into()
}

impl ScanConfig {
    pub fn out_format(&self) -> Result<OutFormat, String> {
        match self.format.as_str() {
            "csv" => Ok(OutFormat::Csv),
            "json" => Ok(OutFormat::Json),
            other => Err(format!("unknown format '{other}' (expected csv or json)")),
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        let j = self.n / 2;
        if !(2..=11).contains(&self.n) {
            return Err(format!("unsupported dimension N = {}", self.n));
        }
        if self.epsilon <= 0.0 {
            return Err("epsilon must be positive".into());
        }
        if self.grid.is_empty() == self.rays.is_empty() {
            return Err("exactly one of grid or rays must be given".into());
        }
        for ax in &self.grid {
            if ax.steps < 1 {
                return Err("grid steps must be >= 1".into());
            }
            if ax.min > ax.max {
                return Err(format!("grid min {} exceeds max {}", ax.min, ax.max));
            }
        }
        if !self.grid.is_empty() && self.grid.len() != 1 && self.grid.len() != j {
            return Err(format!("need 1 or {j} grid axes for N = {}", self.n));
        }
        for ray in &self.rays {
            if ray.steps < 1 {
                return Err("ray steps must be >= 1".into());
            }
            if ray.direction.len() != j {
                return Err(format!("ray needs {j} components for N = {}", self.n));
            }
            if ray.direction.iter().map(|d| d * d).sum::<f64>() == 0.0 {
                return Err("ray direction must be nonzero".into());
            }
        }
        self.out_format().map(|_| ())
    }

    fn axes(&self) -> Vec<GridAxis> {
        let j = self.n / 2;
        if self.grid.len() == 1 && j > 1 {
            vec![self.grid[0]; j]
        } else {
            self.grid.clone()
        }
    }

    /// All scan points, ordered by grid index (grid) or ray-major (rays).
    pub fn points(&self) -> Vec<Vec<f64>> {
        if !self.grid.is_empty() {
            let axes = self.axes();
            let total: usize = axes.iter().map(|a| a.steps).product();
            (0..total)
                .map(|mut idx| {
                    let mut g = vec![0.0; axes.len()];
                    for (k, ax) in axes.iter().enumerate().rev() {
                        g[k] = ax.value(idx % ax.steps);
                        idx /= ax.steps;
                    }
                    g
                })
                .collect()
        } else {
            let mut pts = Vec::new();
            for ray in &self.rays {
                let norm = ray.direction.iter().map(|d| d * d).sum::<f64>().sqrt();
                let unit: Vec<f64> = ray.direction.iter().map(|d| d / norm).collect();
                let mut r_box = f64::INFINITY;
                for (k, d) in unit.iter().enumerate() {
                    if d.abs() > 0.0 {
                        let edge = (1.2 * ((self.n - (k + 1)) * (k + 1)) as f64).sqrt();
                        r_box = r_box.min(edge / d.abs());
                    }
                }
                for i in 0..ray.steps {
                    let r = if ray.steps <= 1 {
                        0.0
                    } else {
                        r_box * i as f64 / (ray.steps - 1) as f64
                    };
                    pts.push(unit.iter().map(|d| d * r).collect());
                }
            }
            pts
        }
    }
}

fn state_str(s: DomainState) -> &'static str {
    match s {
        DomainState::Inside => "inside",
        DomainState::Outside => "outside",
        DomainState::BoundaryBand => "boundary",
    }
}

pub struct ScanOutcome {
    pub table: Table,
    pub mismatches: usize,
}

/// Run the scan: one record per point, ordered by index.
pub fn run_scan(config: &ScanConfig) -> Result<ScanOutcome, ptchain::Error> {
    let j = config.n / 2;
    let mut header: Vec<String> = vec!["index".into()];
    header.extend((1..=j).map(|k| format!("g{k}")));
    header.extend(
        ["verdict", "witness", "margin", "oracle_verdict", "mismatch", "min_s_gap", "min_s_root"]
            .map(String::from),
    );

    let points = config.points();
    let rows: Result<Vec<(Vec<Value>, bool)>, ptchain::Error> = points
        .par_iter()
        .enumerate()
        .map(|(index, g)| {
            let squares: Vec<BigRational> = g
                .iter()
                .map(|&x| {
                    let r = rational_from_f64(x);
                    &r * &r
                })
                .collect();
            let form =
                to_secular_form(&char_poly_from_squares(config.n, &squares)?, config.n)?;

            let criteria_verdict = if config.mode != ScanMode::Oracle {
                Some(assess(&form, config.epsilon)?.verdict)
            } else {
                None
            };
            let oracle_verdict = if config.mode != ScanMode::Criteria {
                Some(oracle::oracle_verdict_form(&form)?)
            } else {
                None
            };
            let primary = criteria_verdict.as_ref().or(oracle_verdict.as_ref()).unwrap();

            let mismatch = match (&criteria_verdict, &oracle_verdict) {
                (Some(c), Some(o)) => Some(
                    c.state != DomainState::BoundaryBand
                        && o.state != DomainState::BoundaryBand
                        && c.state != o.state,
                ),
                _ => None,
            };

            let (gap, min_root) = if config.spectrum {
                let rep = oracle::numeric_spectrum_form(&form, config.n)?;
                (Some(rep.min_s_gap()), Some(rep.min_s_magnitude()))
            } else {
                (None, None)
            };

            let mut row: Vec<Value> = vec![Value::from(index)];
            row.extend(g.iter().map(|&x| num(x)));
            row.push(text(state_str(primary.state)));
            row.push(text(primary.witness.unwrap_or("")));
            row.push(num(primary.margin));
            row.push(match &oracle_verdict {
                Some(o) if config.mode == ScanMode::Both => text(state_str(o.state)),
                _ => Value::Null,
            });
            row.push(mismatch.map(Value::from).unwrap_or(Value::Null));
            row.push(opt_num(gap));
            row.push(opt_num(min_root));
            Ok((row, mismatch == Some(true)))
        })
        .collect();

    let rows = rows?;
    let mut table = Table::new(header);
    let mut mismatches = 0;
    for (row, bad) in rows {
        if bad {
            mismatches += 1;
        }
        table.push(row);
    }
    Ok(ScanOutcome { table, mismatches })
}
