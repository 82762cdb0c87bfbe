//! One-parameter least-squares fits of `A = 1/2I`.
//!
//! Model and experimental energies are both referenced to the band head, so
//! the model is `A·f_j` with `f_j = [j][j+1] − [j_min][j_min+1]` and the
//! minimizer of `χ²(A) = Σ (e_j − A f_j)²` is `A* = Σ e_j f_j / Σ f_j²`.
//!
//! `A` and energies are in keV; `χ²` is reported in MeV².

use alloc::vec::Vec;

use crate::model::{band_energies, q_parameter_from_band, BandData};
use crate::{Deformation, Error, QParameter, Spin};

const KEV_PER_MEV: f64 = 1000.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    QDeformed,
    Classical,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::QDeformed => "q_deformed",
            Variant::Classical => "classical",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    pub spin: Spin,
    pub exp_kev: f64,
    pub theo_kev: f64,
}

impl Residual {
    /// `exp − theo`, in keV.
    pub fn diff_kev(&self) -> f64 {
        self.exp_kev - self.theo_kev
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitResult {
    pub variant: Variant,
    pub a_kev: f64,
    pub chi2_mev2: f64,
    pub rms_kev: f64,
    pub residuals: Vec<Residual>,
    pub qp: Option<QParameter>,
}

impl FitResult {
    pub fn deformation(&self) -> Deformation {
        self.qp.map_or(Deformation::Classical, Deformation::Q)
    }
}

/// Closed-form least-squares `A` for one variant.
pub fn fit_a(band: &BandData, deformation: &Deformation) -> Result<FitResult, Error> {
    let basis = model_basis(band, deformation)?;
    let exp = band.relative_energies();
    let sff: f64 = basis.iter().map(|f| f * f).sum();
    if sff == 0.0 {
        return Err(Error::DegenerateBand);
    }
    let sef: f64 = exp.iter().zip(&basis).map(|(e, f)| e * f).sum();
    let a = sef / sff;
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::NonPositiveA(a));
    }
    evaluate(band, deformation, a)
}

/// `χ²(A)` in MeV².
pub fn chi2(band: &BandData, deformation: &Deformation, a: f64) -> Result<f64, Error> {
    Ok(evaluate(band, deformation, a)?.chi2_mev2)
}

/// Residuals, `χ²` and rms of the model at a given `A`.
pub fn evaluate(band: &BandData, deformation: &Deformation, a: f64) -> Result<FitResult, Error> {
    let theo = band_energies(band, a, deformation)?;
    let residuals: Vec<Residual> = band
        .relative_energies()
        .into_iter()
        .zip(theo)
        .map(|(exp_kev, (spin, theo_kev))| Residual {
            spin,
            exp_kev,
            theo_kev,
        })
        .collect();
    let chi2_mev2: f64 = residuals
        .iter()
        .map(|r| sq(r.diff_kev() / KEV_PER_MEV))
        .sum();
    let rms_kev = libm::sqrt(chi2_mev2 / residuals.len() as f64) * KEV_PER_MEV;
    Ok(FitResult {
        variant: if deformation.qparameter().is_some() {
            Variant::QDeformed
        } else {
            Variant::Classical
        },
        a_kev: a,
        chi2_mev2,
        rms_kev,
        residuals,
        qp: deformation.qparameter().copied(),
    })
}

fn model_basis(band: &BandData, deformation: &Deformation) -> Result<Vec<f64>, Error> {
    Ok(band_energies(band, 1.0, deformation)?
        .into_iter()
        .map(|(_, f)| f)
        .collect())
}

fn sq(x: f64) -> f64 {
    x * x
}

/// Uniform scan grid for [`fit_a_oracle`]: `n + 1` points from `lo` to `hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl Grid {
    pub fn new(lo: f64, hi: f64, n: usize) -> Result<Self, Error> {
        if !(lo < hi && lo.is_finite() && hi.is_finite()) || n < 1000 {
            return Err(Error::InvalidGrid);
        }
        Ok(Grid { lo, hi, n })
    }

    pub fn resolution(&self) -> f64 {
        (self.hi - self.lo) / self.n as f64
    }

    fn point(&self, i: usize) -> f64 {
        self.lo + i as f64 * self.resolution()
    }
}

/// Brute-force minimizer of `χ²(A)`: exhaustive scan over the grid, then a
/// golden-section pass on the two cells around the best grid point.
pub fn fit_a_oracle(
    band: &BandData,
    deformation: &Deformation,
    grid: Grid,
) -> Result<FitResult, Error> {
    let grid = Grid::new(grid.lo, grid.hi, grid.n)?;
    let basis = model_basis(band, deformation)?;
    let exp = band.relative_energies();
    let objective = |a: f64| -> f64 {
        exp.iter()
            .zip(&basis)
            .map(|(e, f)| sq((e - a * f) / KEV_PER_MEV))
            .sum()
    };

    let mut best = (0, f64::INFINITY);
    for i in 0..=grid.n {
        let v = objective(grid.point(i));
        if v < best.1 {
            best = (i, v);
        }
    }
    let (i, _) = best;
    if i == 0 || i == grid.n {
        return Err(Error::MinimumOnGridBoundary { a: grid.point(i) });
    }

    let a = golden_section(objective, grid.point(i - 1), grid.point(i + 1));
    if a.is_nan() || a <= 0.0 {
        return Err(Error::NonPositiveA(a));
    }
    evaluate(band, deformation, a)
}

fn golden_section(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let inv_phi = (libm::sqrt(5.0) - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..200 {
        if hi - lo <= 4.0 * f64::EPSILON * hi.abs().max(lo.abs()) {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    (lo + hi) / 2.0
}

/// q-rotor fit (with `τ` fixed by the band) next to the rigid-rotor fit.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub q: FitResult,
    pub classical: FitResult,
}

pub fn compare(band: &BandData) -> Result<Comparison, Error> {
    let qp = q_parameter_from_band(band)?;
    Ok(Comparison {
        q: fit_a(band, &Deformation::Q(qp))?,
        classical: fit_a(band, &Deformation::Classical)?,
    })
}
