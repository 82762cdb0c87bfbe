//! Fit reports: a fixed-width summary table, a JSON document with full
//! residuals, and whitespace-separated plot data.
//!
//! All output uses fixed decimal formatting, so identical inputs give
//! byte-identical text.

use std::fmt::Write as _;

use qrotor_core::{compare, fit_a, BandData, Deformation, FitResult};
use serde::Serialize;
use thiserror::Error;

/// Fits of one band: the q-rotor fit (absent in classical-only runs) and
/// the rigid-rotor baseline.
#[derive(Debug, Clone, PartialEq)]
pub struct BandReport {
    pub band: BandData,
    pub q: Option<FitResult>,
    pub classical: FitResult,
}

impl BandReport {
    pub fn fit(band: BandData) -> Result<Self, qrotor_core::Error> {
        let c = compare(&band)?;
        Ok(BandReport {
            band,
            q: Some(c.q),
            classical: c.classical,
        })
    }

    pub fn fit_classical(band: BandData) -> Result<Self, qrotor_core::Error> {
        let classical = fit_a(&band, &Deformation::Classical)?;
        Ok(BandReport {
            band,
            q: None,
            classical,
        })
    }

    /// The q-rotor fit when present, otherwise the classical one.
    pub fn primary(&self) -> &FitResult {
        self.q.as_ref().unwrap_or(&self.classical)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("nothing to report")]
    Empty,
    #[error("band {0} has no q-rotor fit")]
    MissingQFit(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub table: String,
    pub json: String,
}

pub fn write_report(reports: &[BandReport]) -> Result<Report, ReportError> {
    Ok(Report {
        table: write_table(reports)?,
        json: write_json(reports)?,
    })
}

const HEADER: [&str; 6] = [
    "Nucleus",
    "tau",
    "A(keV)",
    "10^3chi2(MeV^2)",
    "rms(keV)",
    "rms_cl(keV)",
];

pub fn write_table(reports: &[BandReport]) -> Result<String, ReportError> {
    if reports.is_empty() {
        return Err(ReportError::Empty);
    }
    let name_width = reports
        .iter()
        .map(|r| r.band.name().len())
        .max()
        .unwrap_or(0)
        .max(12);
    let mut out = String::new();
    let row = |out: &mut String, cells: [&str; 6]| {
        writeln!(
            out,
            "{:<nw$}  {:>8}  {:>9}  {:>15}  {:>9}  {:>11}",
            cells[0],
            cells[1],
            cells[2],
            cells[3],
            cells[4],
            cells[5],
            nw = name_width
        )
        .unwrap();
    };
    row(&mut out, HEADER);
    for r in reports {
        let fit = r.primary();
        let tau = fit
            .qp
            .map_or_else(|| String::from("-"), |qp| format!("{:.4}", qp.tau()));
        row(
            &mut out,
            [
                r.band.name(),
                &tau,
                &format!("{:.2}", fit.a_kev),
                &format!("{:.2}", 1e3 * fit.chi2_mev2),
                &format!("{:.2}", fit.rms_kev),
                &format!("{:.2}", r.classical.rms_kev),
            ],
        );
    }
    Ok(out)
}

#[derive(Serialize)]
struct JsonFit<'a> {
    nucleus: &'a str,
    tau: Option<f64>,
    dim: Option<u64>,
    #[serde(rename = "A_keV")]
    a_kev: f64,
    #[serde(rename = "chi2_MeV2")]
    chi2_mev2: f64,
    #[serde(rename = "rms_keV")]
    rms_kev: f64,
    variant: &'static str,
    residuals: Vec<JsonResidual>,
}

#[derive(Serialize)]
struct JsonResidual {
    j: f64,
    #[serde(rename = "exp_keV")]
    exp_kev: f64,
    #[serde(rename = "theo_keV")]
    theo_kev: f64,
}

/// JSON list with one object per (band, variant), q-rotor first.
pub fn write_json(reports: &[BandReport]) -> Result<String, ReportError> {
    if reports.is_empty() {
        return Err(ReportError::Empty);
    }
    let docs: Vec<JsonFit> = reports
        .iter()
        .flat_map(|r| {
            r.q.iter()
                .chain(std::iter::once(&r.classical))
                .map(move |f| (r, f))
        })
        .map(|(r, f)| JsonFit {
            nucleus: r.band.name(),
            tau: f.qp.map(|qp| qp.tau()),
            dim: f.qp.map(|qp| qp.dim()),
            a_kev: f.a_kev,
            chi2_mev2: f.chi2_mev2,
            rms_kev: f.rms_kev,
            variant: f.variant.as_str(),
            residuals: f
                .residuals
                .iter()
                .map(|res| JsonResidual {
                    j: res.spin.value(),
                    exp_kev: res.exp_kev,
                    theo_kev: res.theo_kev,
                })
                .collect(),
        })
        .collect();
    let mut json = serde_json::to_string_pretty(&docs).expect("report serializes");
    json.push('\n');
    Ok(json)
}

/// Columns `j E_exp E_q E_classical residual_q residual_classical`, one row
/// per level, energies referenced to the band head.
pub fn emit_plot_data(report: &BandReport) -> Result<String, ReportError> {
    let q = report
        .q
        .as_ref()
        .ok_or_else(|| ReportError::MissingQFit(report.band.name().to_owned()))?;
    let mut out = String::new();
    writeln!(out, "# nucleus: {}", report.band.name()).unwrap();
    writeln!(
        out,
        "# j E_exp E_q E_classical residual_q residual_classical"
    )
    .unwrap();
    for (rq, rc) in q.residuals.iter().zip(&report.classical.residuals) {
        writeln!(
            out,
            "{} {:.6} {:.6} {:.6} {:.6} {:.6}",
            rq.spin,
            rq.exp_kev,
            rq.theo_kev,
            rc.theo_kev,
            rq.diff_kev(),
            rc.diff_kev()
        )
        .unwrap();
    }
    Ok(out)
}
