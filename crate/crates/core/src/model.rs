//! The q-rotor: space size from band spin content, and band energies.

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::{Deformation, Error, QParameter, Spin};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Level {
    pub spin: Spin,
    pub energy_kev: f64,
}

impl Level {
    pub fn new(spin: Spin, energy_kev: f64) -> Self {
        Level { spin, energy_kev }
    }
}

/// A rotational band: levels with spins increasing in a fixed step and
/// strictly increasing energies.
#[derive(Debug, Clone, PartialEq)]
pub struct BandData {
    name: String,
    levels: Vec<Level>,
    step: Spin,
}

impl BandData {
    pub fn new(name: impl Into<String>, levels: Vec<Level>) -> Result<Self, Error> {
        let mut step = None;
        for (i, level) in levels.iter().enumerate() {
            if !level.energy_kev.is_finite() {
                return Err(Error::NonFiniteEnergy { index: i });
            }
            if i == 0 {
                if level.energy_kev < 0.0 {
                    return Err(Error::NegativeBandHead(level.energy_kev));
                }
                continue;
            }
            let prev = levels[i - 1];
            if level.spin == prev.spin {
                return Err(Error::DuplicateSpin { index: i });
            }
            if level.spin < prev.spin {
                return Err(Error::NonMonotoneSpin { index: i });
            }
            let found = Spin::from_twice(level.spin.twice() - prev.spin.twice());
            match step {
                None => step = Some(found),
                Some(expected) if expected != found => {
                    return Err(Error::InconsistentStep {
                        index: i,
                        expected,
                        found,
                    })
                }
                Some(_) => {}
            }
            if level.energy_kev <= prev.energy_kev {
                return Err(Error::NonIncreasingEnergy { index: i });
            }
        }
        if levels.len() < 3 {
            return Err(Error::TooFewLevels(levels.len()));
        }
        let step = step.expect("at least two levels");
        Ok(BandData {
            name: name.into(),
            levels,
            step,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn step(&self) -> Spin {
        self.step
    }

    pub fn j_min(&self) -> Spin {
        self.levels[0].spin
    }

    pub fn j_max(&self) -> Spin {
        self.levels[self.levels.len() - 1].spin
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Experimental energies referenced to the band head, in keV.
    pub fn relative_energies(&self) -> Vec<f64> {
        let head = self.levels[0].energy_kev;
        self.levels.iter().map(|l| l.energy_kev - head).collect()
    }

    /// Same band with every energy multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self, Error> {
        let levels = self
            .levels
            .iter()
            .map(|l| Level::new(l.spin, l.energy_kev * factor))
            .collect();
        BandData::new(self.name.clone(), levels)
    }
}

/// Dimension `2l+1` of the smallest space holding every irrep of the band:
/// `Σ (2j+1)` over `j = j_min, j_min+step, …, j_max`, bumped to the next odd
/// number when the sum is even.
pub fn space_size(j_min: Spin, j_max: Spin, step: Spin) -> Result<u64, Error> {
    let malformed = Error::MalformedSpinRange { j_min, j_max, step };
    if step.twice() == 0
        || j_min > j_max
        || !(j_max.twice() - j_min.twice()).is_multiple_of(step.twice())
    {
        return Err(malformed);
    }
    let sum: u64 = (j_min.twice()..=j_max.twice())
        .step_by(step.twice() as usize)
        .map(|t| u64::from(t) + 1)
        .sum();
    Ok(if sum.is_multiple_of(2) { sum + 1 } else { sum })
}

/// Deformation parameter fixed by the band's own spins.
pub fn q_parameter_from_band(band: &BandData) -> Result<QParameter, Error> {
    let dim = space_size(band.j_min(), band.j_max(), band.step())?;
    if dim < 5 {
        return Err(Error::BandSpaceTooSmall(dim));
    }
    QParameter::new(dim)
}

/// `E_j = A [j][j+1] = A sin(τj) sin(τ(j+1)) / sin²τ`, in the units of `a`.
pub fn energy(j: Spin, a: f64, deformation: &Deformation) -> Result<f64, Error> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::NonPositiveA(a));
    }
    if let Deformation::Q(qp) = deformation {
        if qp.tau() * (j.value() + 1.0) >= PI {
            return Err(Error::RegimeViolation { j, tau: qp.tau() });
        }
    }
    Ok(a * deformation.casimir(j.value()))
}

/// Model energies for every spin of the band, referenced to the band head.
pub fn band_energies(
    band: &BandData,
    a: f64,
    deformation: &Deformation,
) -> Result<Vec<(Spin, f64)>, Error> {
    let head = energy(band.j_min(), a, deformation)?;
    band.levels()
        .iter()
        .map(|l| Ok((l.spin, energy(l.spin, a, deformation)? - head)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::sine_bracket;
    use alloc::vec;
    use proptest::prelude::*;

    fn s(j: u32) -> Spin {
        Spin::integer(j)
    }

    fn band(spins_twice: &[u32], energies: &[f64]) -> Result<BandData, Error> {
        let levels = spins_twice
            .iter()
            .zip(energies)
            .map(|(&t, &e)| Level::new(Spin::from_twice(t), e))
            .collect();
        BandData::new("test", levels)
    }

    #[test]
    fn band_validation() {
        assert!(band(&[4, 8, 12], &[0.0, 80.0, 260.0]).is_ok());
        assert_eq!(
            band(&[4, 8], &[0.0, 80.0]).unwrap_err(),
            Error::TooFewLevels(2)
        );
        assert_eq!(
            band(&[4, 8, 16], &[0.0, 80.0, 260.0]).unwrap_err(),
            Error::InconsistentStep {
                index: 2,
                expected: s(2),
                found: s(4)
            }
        );
        assert_eq!(
            band(&[4, 8, 8], &[0.0, 80.0, 260.0]).unwrap_err(),
            Error::DuplicateSpin { index: 2 }
        );
        assert_eq!(
            band(&[4, 8, 6], &[0.0, 80.0, 260.0]).unwrap_err(),
            Error::NonMonotoneSpin { index: 2 }
        );
        assert_eq!(
            band(&[4, 8, 12], &[0.0, 80.0, 70.0]).unwrap_err(),
            Error::NonIncreasingEnergy { index: 2 }
        );
        assert_eq!(
            band(&[4, 8, 12], &[-1.0, 80.0, 90.0]).unwrap_err(),
            Error::NegativeBandHead(-1.0)
        );
        assert_eq!(
            band(&[4, 8, 12], &[0.0, f64::NAN, 90.0]).unwrap_err(),
            Error::NonFiniteEnergy { index: 1 }
        );
    }

    #[test]
    fn space_size_examples() {
        assert_eq!(space_size(s(2), s(18), s(2)), Ok(189));
        assert_eq!(space_size(s(0), s(0), s(2)), Ok(1));
        assert_eq!(space_size(s(2), s(20), s(2)), Ok(231));
        assert_eq!(space_size(s(2), s(28), s(2)), Ok(435));
        // Half-integer spins: each 2j+1 is even.
        assert_eq!(
            space_size(Spin::from_twice(15), Spin::from_twice(23), s(2)),
            Ok(16 + 20 + 24 + 1)
        );
    }

    #[test]
    fn space_size_rejects_malformed_ranges() {
        assert!(space_size(s(4), s(2), s(2)).is_err());
        assert!(space_size(s(2), s(7), s(2)).is_err());
        assert!(space_size(s(2), s(6), Spin::ZERO).is_err());
    }

    #[test]
    fn tau_from_band() {
        let spins: Vec<u32> = (1..=9).map(|j| 4 * j).collect();
        let energies: Vec<f64> = (1..=9).map(|j| 100.0 * j as f64 * j as f64).collect();
        let b = band(&spins, &energies).unwrap();
        let qp = q_parameter_from_band(&b).unwrap();
        assert_eq!(qp.dim(), 189);
        assert!((qp.tau() - 0.033_244).abs() < 1e-6);

        let spins: Vec<u32> = (1..=14).map(|j| 4 * j).collect();
        let energies: Vec<f64> = (1..=14).map(|j| 100.0 * j as f64 * j as f64).collect();
        let qp = q_parameter_from_band(&band(&spins, &energies).unwrap()).unwrap();
        assert!((qp.tau() - 0.014_444_104).abs() < 1e-8);
    }

    #[test]
    fn smallest_band_space() {
        // Three levels span at least 1 + 2 + 3 states, so the dim ≥ 5 guard
        // can only fire on hand-built ranges.
        let b = band(&[0, 1, 2], &[0.0, 1.0, 3.0]).unwrap();
        assert_eq!(q_parameter_from_band(&b).unwrap().dim(), 7);
        assert_eq!(space_size(s(0), s(0), s(2)), Ok(1));
        assert_eq!(QParameter::new(1).unwrap_err(), Error::InvalidDimension(1));
    }

    #[test]
    fn energy_examples() {
        let qp = Deformation::Q(QParameter::new(189).unwrap());
        assert_eq!(energy(s(0), 12.81, &qp), Ok(0.0));
        // 12.81 · [2][3] at D = 189, mpmath
        assert!((energy(s(2), 12.81, &qp).unwrap() - 76.704_376_158_091_89).abs() < 1e-10);
        assert_eq!(energy(s(2), 10.0, &Deformation::Classical), Ok(60.0));
    }

    #[test]
    fn energy_errors() {
        let qp = Deformation::Q(QParameter::new(7).unwrap());
        // τ = 2π/7, τ(j+1) ≥ π from j = 2.5.
        assert!(energy(s(2), 1.0, &qp).is_ok());
        assert!(matches!(
            energy(s(3), 1.0, &qp),
            Err(Error::RegimeViolation { .. })
        ));
        assert_eq!(energy(s(2), 0.0, &qp), Err(Error::NonPositiveA(0.0)));
        assert!(energy(s(2), f64::NAN, &qp).is_err());
    }

    #[test]
    fn band_energies_classical_referenced() {
        let b = band(&[4, 8, 12], &[0.0, 80.0, 260.0]).unwrap();
        let e = band_energies(&b, 1.0, &Deformation::Classical).unwrap();
        assert_eq!(e, vec![(s(2), 0.0), (s(4), 14.0), (s(6), 36.0)]);
    }

    #[test]
    fn band_energies_converge_to_classical() {
        let b = band(&[4, 8, 12, 16], &[0.0, 80.0, 260.0, 500.0]).unwrap();
        let classical = band_energies(&b, 3.0, &Deformation::Classical).unwrap();
        let mut prev = f64::INFINITY;
        for d in [101, 1001, 10001, 100001] {
            let q = band_energies(&b, 3.0, &Deformation::Q(QParameter::new(d).unwrap())).unwrap();
            assert_eq!(q.len(), b.len());
            let dev = q
                .iter()
                .zip(&classical)
                .map(|(x, y)| (x.1 - y.1).abs())
                .fold(0.0, f64::max);
            assert!(dev < prev);
            prev = dev;
        }
        assert!(prev < 1e-4);
    }

    #[test]
    fn energy_even_in_tau() {
        let qp = QParameter::new(189).unwrap();
        for j in 0..30 {
            let jf = f64::from(j);
            let flipped = 7.0 * sine_bracket(jf, -qp.tau()) * sine_bracket(jf + 1.0, -qp.tau());
            assert!((energy(s(j), 7.0, &Deformation::Q(qp)).unwrap() - flipped).abs() < 1e-10);
        }
    }

    proptest! {
        #[test]
        fn space_size_is_odd(j_min in 0u32..40, n in 1u32..30, step in 1u32..5) {
            let lo = Spin::from_twice(j_min);
            let hi = Spin::from_twice(j_min + n * step);
            let d = space_size(lo, hi, Spin::from_twice(step)).unwrap();
            prop_assert_eq!(d % 2, 1);
            let raw: u64 = (0..=n).map(|i| u64::from(j_min + i * step) + 1).sum();
            prop_assert!(d - raw <= 1);
        }

        #[test]
        fn compressed_below_rigid_rotor(j in 2u32..=30, half_dim in 90u64..800, a in 1.0f64..20.0) {
            let qp = QParameter::new(2 * half_dim + 1).unwrap();
            prop_assume!(qp.tau() * (f64::from(j) + 1.0) < PI / 2.0);
            let jf = f64::from(j);
            prop_assert!(energy(s(j), a, &Deformation::Q(qp)).unwrap() < a * jf * (jf + 1.0));
        }

        #[test]
        fn monotone_band(jmax in 4u32..40, half_dim in 20u64..800) {
            let qp = QParameter::new(2 * half_dim + 1).unwrap();
            prop_assume!(qp.tau() * (f64::from(jmax) + 1.0) <= PI / 2.0);
            let d = Deformation::Q(qp);
            for j in (0..jmax).step_by(2) {
                prop_assert!(energy(s(j), 1.0, &d).unwrap() < energy(s(j + 2), 1.0, &d).unwrap());
            }
        }
    }
}
