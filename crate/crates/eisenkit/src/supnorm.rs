//! Grid scans of `|F(z)|` over a Siegel region, supremum extraction and
//! power-law fits of the supremum against the spectral parameter `T`.

use std::fmt::Write as _;
use std::time::Instant;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::DirichletCharacter;
use crate::eisenstein::{row_expansion, EisensteinParams, EvalOptions, DEFAULT_Y_MIN};
use crate::error::{Error, Result};

/// Schema tag written into every report.
pub const SCHEMA: &str = "eisenkit-scan-v1";

/// Exponent of `T` in the reference bound.
pub const REFERENCE_EXPONENT: f64 = 0.375;

/// The `ε` used when annotating reports with the reference bound.
pub const REFERENCE_EPSILON: f64 = 0.01;

/// Symbols of the bound that have no computational counterpart at the cusp ∞.
pub const UNHOUSED_SYMBOLS: &str = "n0, n1, n2, m1(g), theta_i, J_n, F_n2, lambda_{n,s}(q), iota: \
defined externally; evaluation is restricted to the cusp-infinity chart where they take default values";

/// Grid policy for a scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub x_steps: usize,
    pub y_min: f64,
    /// Upper end of the y-grid; `None` means `1.2 T/(2π)`.
    pub y_max: Option<f64>,
    pub y_ratio: f64,
    pub eps: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            x_steps: 64,
            y_min: DEFAULT_Y_MIN,
            y_max: None,
            y_ratio: 1.05,
            eps: 1e-8,
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        if self.x_steps == 0 || self.x_steps > 1 << 16 {
            return Err(Error::invalid("x_steps must lie in [1, 65536]"));
        }
        if !(self.y_min >= DEFAULT_Y_MIN) || !self.y_min.is_finite() {
            return Err(Error::invalid(format!("y_min must be at least {DEFAULT_Y_MIN}")));
        }
        if let Some(y) = self.y_max {
            if !(y >= self.y_min) || !y.is_finite() {
                return Err(Error::invalid("y_max must be finite and at least y_min"));
            }
        }
        if !(self.y_ratio > 1.0) || self.y_ratio > 10.0 {
            return Err(Error::invalid("y_ratio must lie in (1, 10]"));
        }
        if !(self.eps > 0.0 && self.eps < 1.0) {
            return Err(Error::invalid("eps must lie in (0, 1)"));
        }
        Ok(())
    }

    /// Geometric grid from `y_min` up to and including the first point at or above `y_max`.
    pub fn y_grid(&self, t: f64) -> Vec<f64> {
        let top = self.y_max.unwrap_or(1.2 * spectral_parameter(t) / (2.0 * std::f64::consts::PI));
        let mut ys = vec![self.y_min];
        let mut k = 1;
        while *ys.last().unwrap() < top {
            ys.push(self.y_min * self.y_ratio.powi(k));
            k += 1;
        }
        ys
    }

    /// `x_j = −1/2 + j/x_steps`, `0 ≤ j < x_steps`.
    pub fn x_grid(&self) -> Vec<f64> {
        (0..self.x_steps).map(|j| -0.5 + j as f64 / self.x_steps as f64).collect()
    }
}

/// `T = max(1/2, |t|)`.
pub fn spectral_parameter(t: f64) -> f64 {
    t.abs().max(0.5)
}

/// Serializable identification of the scanned series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanParams {
    pub chi1: String,
    pub chi2: String,
    pub s: Complex64,
    pub level: u64,
    pub weight: u32,
}

impl ScanParams {
    pub fn from_params(p: &EisensteinParams) -> Self {
        Self {
            chi1: p.chi1.label(),
            chi2: p.chi2.label(),
            s: p.s,
            level: p.level,
            weight: p.weight,
        }
    }

    pub fn to_params(&self) -> Result<EisensteinParams> {
        let c1: DirichletCharacter = self.chi1.parse()?;
        let c2: DirichletCharacter = self.chi2.parse()?;
        EisensteinParams::new(c1, c2, self.s)
    }
}

/// One grid entry.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridPoint {
    pub x: f64,
    pub y: f64,
    pub abs_f: f64,
}

/// Result of a scan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub schema: String,
    pub params: ScanParams,
    pub t0: f64,
    pub config: ScanConfig,
    pub grid: Vec<GridPoint>,
    pub supremum: f64,
    pub argmax: (f64, f64),
    pub truncation_eps: f64,
    pub wall_time: f64,
    pub theorem_reference: f64,
    pub notes: String,
}

impl ScanReport {
    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::invalid(format!("serialization failed: {e}")))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let r: Self = serde_json::from_str(text).map_err(|e| Error::invalid(format!("bad scan report: {e}")))?;
        if r.schema != SCHEMA {
            return Err(Error::invalid(format!("unknown schema {:?}", r.schema)));
        }
        Ok(r)
    }

    /// Grid rows as `x,y,absF`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,absF\n");
        for g in &self.grid {
            let _ = writeln!(out, "{},{},{}", g.x, g.y, g.abs_f);
        }
        out
    }

    /// Parse grid rows written by [`ScanReport::to_csv`].
    pub fn grid_from_csv(text: &str) -> Result<Vec<GridPoint>> {
        let mut lines = text.lines();
        if lines.next() != Some("x,y,absF") {
            return Err(Error::invalid("CSV header must be x,y,absF"));
        }
        lines
            .filter(|l| !l.is_empty())
            .map(|l| {
                let v: Vec<f64> = l
                    .split(',')
                    .map(|f| f.parse::<f64>().map_err(|e| Error::invalid(format!("bad CSV field {f:?}: {e}"))))
                    .collect::<Result<_>>()?;
                match v[..] {
                    [x, y, abs_f] => Ok(GridPoint { x, y, abs_f }),
                    _ => Err(Error::invalid(format!("CSV row {l:?} needs three fields"))),
                }
            })
            .collect()
    }
}

fn with_context(err: Error, ctx: &str) -> Error {
    match err {
        Error::InvalidInput(m) => Error::InvalidInput(format!("{m} ({ctx})")),
        Error::UnsupportedRegime(m) => Error::UnsupportedRegime(format!("{m} ({ctx})")),
        Error::NoConvergence(m) => Error::NoConvergence(format!("{m} ({ctx})")),
        Error::Pole { what, distance } => Error::Pole {
            what: format!("{what} ({ctx})"),
            distance,
        },
        other => other,
    }
}

/// Scan `|F|` on the grid of `cfg` at the spectral point of `params`.
pub fn scan(params: &EisensteinParams, cfg: &ScanConfig) -> Result<ScanReport> {
    cfg.validate()?;
    let start = Instant::now();
    let t0 = params.s.im;
    let ys = cfg.y_grid(t0);
    let xs = cfg.x_grid();
    let opts = EvalOptions {
        eps: cfg.eps,
        y_min: cfg.y_min,
    };
    let rows: Vec<Result<Vec<GridPoint>>> = ys
        .par_iter()
        .map(|&y| {
            let row = row_expansion(params, y, &opts)?;
            Ok(xs
                .iter()
                .map(|&x| GridPoint {
                    x,
                    y,
                    abs_f: row.truncated(x).norm(),
                })
                .collect())
        })
        .collect();
    let mut grid = Vec::with_capacity(xs.len() * ys.len());
    for (k, row) in rows.into_iter().enumerate() {
        match row {
            Ok(points) => grid.extend(points),
            Err(e) => {
                let ctx = format!("scan aborted at y = {}, {k} of {} rows complete", ys[k], ys.len());
                return Err(with_context(e, &ctx));
            }
        }
    }
    let best = grid
        .iter()
        .fold(None::<GridPoint>, |acc, g| match acc {
            Some(b) if b.abs_f >= g.abs_f => Some(b),
            _ => Some(*g),
        })
        .expect("grid is nonempty");
    Ok(ScanReport {
        schema: SCHEMA.to_string(),
        params: ScanParams::from_params(params),
        t0,
        config: *cfg,
        grid,
        supremum: best.abs_f,
        argmax: (best.x, best.y),
        truncation_eps: cfg.eps,
        wall_time: start.elapsed().as_secs_f64(),
        theorem_reference: theorem_reference(params, t0),
        notes: UNHOUSED_SYMBOLS.to_string(),
    })
}

/// Least-squares slope of `ln(sup)` against `ln T` for pairs `(T, sup)`.
pub fn fit_slope(points: &[(f64, f64)]) -> Result<f64> {
    if points.len() < 3 {
        return Err(Error::invalid("a slope fit needs at least 3 points"));
    }
    if points.iter().any(|&(t, v)| !(t > 0.0) || !(v > 0.0)) {
        return Err(Error::invalid("fit points must be positive"));
    }
    let n = points.len() as f64;
    let lx: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ly: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::invalid("fit needs at least two distinct T values"));
    }
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    Ok(sxy / sxx)
}

/// Slope of `ln(supremum)` against `ln T` over reports with a common series and grid policy.
pub fn exponent_fit(reports: &[ScanReport]) -> Result<f64> {
    if reports.len() < 3 {
        return Err(Error::invalid("exponent_fit needs at least 3 reports"));
    }
    let first = &reports[0];
    for r in reports {
        let same = r.params.chi1 == first.params.chi1
            && r.params.chi2 == first.params.chi2
            && r.config.x_steps == first.config.x_steps
            && r.config.y_ratio == first.config.y_ratio
            && r.config.y_min == first.config.y_min;
        if !same {
            return Err(Error::invalid("reports differ in characters or grid policy"));
        }
    }
    let pts: Vec<(f64, f64)> = reports.iter().map(|r| (spectral_parameter(r.t0), r.supremum)).collect();
    fit_slope(&pts)
}

/// `N^ε T^ε T^{3/8}` with `ε = 0.01` and `T = max(1/2, |t|)`.
pub fn theorem_reference(params: &EisensteinParams, t: f64) -> f64 {
    let big_t = spectral_parameter(t);
    (params.level as f64).powf(REFERENCE_EPSILON) * big_t.powf(REFERENCE_EPSILON + REFERENCE_EXPONENT)
}
