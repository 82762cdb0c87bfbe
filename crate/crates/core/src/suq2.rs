//! Standard `(2j+1)`-dimensional irreps of SU_q(2) for pure-phase `q`.
//!
//! Basis index `k = 0..=2j` labels `|j m⟩` with `m = k − j`. With ħ = 1,
//!
//! ```text
//! J_z |jm⟩ = m |jm⟩
//! J_± |jm⟩ = ([j ∓ m][j ± m + 1])^{1/2} |j m±1⟩
//! ```
//!
//! Matrix elements are real as long as every bracket product is nonnegative,
//! which holds whenever `τ(2j+1) < π`.

use alloc::vec::Vec;

use crate::matrix::RealMatrix;
use crate::{Deformation, Error, Spin};

#[derive(Debug, Clone)]
pub struct IrrepMatrices {
    j: Spin,
    deformation: Deformation,
    jz: RealMatrix,
    jplus: RealMatrix,
    jminus: RealMatrix,
}

pub fn build_irrep(j: Spin, deformation: impl Into<Deformation>) -> Result<IrrepMatrices, Error> {
    let deformation = deformation.into();
    let n = j.multiplicity() as usize;
    let jv = j.value();
    let m_of = |k: usize| k as f64 - jv;

    let jz = RealMatrix::diagonal(&(0..n).map(m_of).collect::<Vec<_>>());
    let mut jplus = RealMatrix::zeros(n, n);
    for k in 0..n - 1 {
        let m = m_of(k);
        let product = deformation.bracket(jv - m) * deformation.bracket(jv + m + 1.0);
        if product < 0.0 {
            return Err(Error::NegativeBracketProduct {
                j,
                m2: 2 * k as i64 - i64::from(j.twice()),
                value: product,
            });
        }
        jplus[(k + 1, k)] = libm::sqrt(product);
    }
    let jminus = jplus.transpose();
    Ok(IrrepMatrices {
        j,
        deformation,
        jz,
        jplus,
        jminus,
    })
}

impl IrrepMatrices {
    pub fn spin(&self) -> Spin {
        self.j
    }

    pub fn deformation(&self) -> &Deformation {
        &self.deformation
    }

    pub fn dim(&self) -> usize {
        self.jz.rows()
    }

    pub fn jz(&self) -> &RealMatrix {
        &self.jz
    }

    pub fn jplus(&self) -> &RealMatrix {
        &self.jplus
    }

    pub fn jminus(&self) -> &RealMatrix {
        &self.jminus
    }

    fn diag_bracket(&self, f: impl Fn(f64) -> f64) -> RealMatrix {
        let d: Vec<f64> = (0..self.dim()).map(|k| f(self.jz[(k, k)])).collect();
        RealMatrix::diagonal(&d)
    }

    /// `[2J_z]`, brackets applied to the diagonal of `J_z`.
    pub fn bracket_2jz(&self) -> RealMatrix {
        self.diag_bracket(|m| self.deformation.bracket(2.0 * m))
    }

    /// Second-order Casimir `[J_z][J_z+1] + J₋J₊`.
    pub fn casimir(&self) -> RealMatrix {
        let diag =
            self.diag_bracket(|m| self.deformation.bracket(m) * self.deformation.bracket(m + 1.0));
        &diag + &self.jminus.matmul(&self.jplus)
    }
}

/// Max-norm deviation over `[J₊,J₋] = [2J_z]` and `[J_z,J_±] = ±J_±`.
pub fn check_commutators(irrep: &IrrepMatrices) -> f64 {
    let pm = irrep
        .jplus
        .commutator(&irrep.jminus)
        .max_abs_diff(&irrep.bracket_2jz());
    let zp = irrep.jz.commutator(&irrep.jplus).max_abs_diff(&irrep.jplus);
    let zm = irrep
        .jz
        .commutator(&irrep.jminus)
        .max_abs_diff(&irrep.jminus.scale(-1.0));
    pm.max(zp).max(zm)
}

/// Max-norm of `C₂ − [j][j+1]·I`.
pub fn check_casimir(irrep: &IrrepMatrices) -> f64 {
    let eigen = irrep.deformation.casimir(irrep.j.value());
    irrep
        .casimir()
        .max_abs_diff(&RealMatrix::identity(irrep.dim()).scale(eigen))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QParameter;

    fn qp(d: u64) -> QParameter {
        QParameter::new(d).unwrap()
    }

    fn direct_sum(blocks: &[&RealMatrix]) -> RealMatrix {
        let n: usize = blocks.iter().map(|b| b.rows()).sum();
        let mut out = RealMatrix::zeros(n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    out[(off + i, off + j)] = b[(i, j)];
                }
            }
            off += b.rows();
        }
        out
    }

    #[test]
    fn spin_half_is_undeformed() {
        let irrep = build_irrep(Spin::HALF, qp(189)).unwrap();
        assert_eq!(irrep.dim(), 2);
        assert_eq!(irrep.jplus()[(1, 0)], 1.0);
        assert_eq!(irrep.jplus()[(0, 1)], 0.0);
    }

    #[test]
    fn spin_one_matrix_element() {
        let irrep = build_irrep(Spin::integer(1), qp(189)).unwrap();
        // ⟨1,1|J₊|1,0⟩ = √([1][2]), mpmath
        assert!((irrep.jplus()[(2, 1)] - 1.413_822_801_437_772_5).abs() < 1e-14);
        assert!((irrep.jplus()[(1, 0)] - 1.413_822_801_437_772_5).abs() < 1e-14);
    }

    #[test]
    fn classical_irrep_is_standard() {
        let j = Spin::integer(1);
        let irrep = build_irrep(j, Deformation::Classical).unwrap();
        for k in 0..2 {
            let m = k as f64 - 1.0;
            let expected = libm::sqrt((1.0 - m) * (1.0 + m + 1.0));
            assert!((irrep.jplus()[(k + 1, k)] - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn ladder_structure() {
        let irrep = build_irrep(Spin::from_twice(7), qp(231)).unwrap();
        assert_eq!(irrep.jminus(), &irrep.jplus().transpose());
        for a in 0..irrep.dim() {
            for b in 0..irrep.dim() {
                if a != b + 1 {
                    assert_eq!(irrep.jplus()[(a, b)], 0.0);
                }
            }
        }
    }

    #[test]
    fn rejects_irrep_too_large_for_space() {
        // D = 7, j = 2: [4] < 0 while [1] > 0 at m = −2.
        let err = build_irrep(Spin::integer(2), qp(7)).unwrap_err();
        assert!(
            matches!(err, Error::NegativeBracketProduct { m2: -4, .. }),
            "{err:?}"
        );
        assert!(!qp(7).admits_irrep(Spin::integer(2)));
        assert!(qp(7).admits_irrep(Spin::integer(1)));
    }

    #[test]
    fn commutators_hold() {
        for (twice_j, d, tol) in [(1, 189, 1e-12), (4, 189, 1e-12), (20, 1001, 1e-11)] {
            let irrep = build_irrep(Spin::from_twice(twice_j), qp(d)).unwrap();
            let dev = check_commutators(&irrep);
            assert!(dev <= tol, "2j = {twice_j}: {dev:e}");
        }
    }

    #[test]
    fn casimir_is_scalar() {
        let irrep = build_irrep(Spin::ZERO, qp(189)).unwrap();
        assert_eq!(irrep.casimir(), RealMatrix::zeros(1, 1));
        for (twice_j, d) in [(2, 189), (5, 231), (20, 189)] {
            let irrep = build_irrep(Spin::from_twice(twice_j), qp(d)).unwrap();
            assert!(check_casimir(&irrep) <= 1e-12, "2j = {twice_j}");
        }
        let irrep = build_irrep(Spin::from_twice(5), qp(231)).unwrap();
        assert!((irrep.casimir()[(3, 3)] - 8.732_210_809_401_015).abs() < 1e-12);
    }

    #[test]
    fn casimir_commutes_with_generators() {
        for twice_j in [1, 4, 9, 20] {
            let irrep = build_irrep(Spin::from_twice(twice_j), qp(189)).unwrap();
            let c = irrep.casimir();
            for g in [irrep.jz(), irrep.jplus(), irrep.jminus()] {
                assert!(c.commutator(g).max_norm() < 1e-12);
            }
        }
    }

    #[test]
    fn ladder_operators_stay_in_their_irrep() {
        let a = build_irrep(Spin::integer(1), qp(189)).unwrap();
        let b = build_irrep(Spin::integer(2), qp(189)).unwrap();
        let jp = direct_sum(&[a.jplus(), b.jplus()]);
        let jm = direct_sum(&[a.jminus(), b.jminus()]);
        let jz = direct_sum(&[a.jz(), b.jz()]);
        for op in [&jp, &jm, &jp.matmul(&jm), &jz.commutator(&jp)] {
            for i in 0..3 {
                for k in 3..8 {
                    assert_eq!(op[(i, k)], 0.0);
                    assert_eq!(op[(k, i)], 0.0);
                }
            }
        }
    }

    #[test]
    fn deformed_ladder_converges_to_classical() {
        let j = Spin::integer(5);
        let classical = build_irrep(j, Deformation::Classical).unwrap();
        let dists: Vec<f64> = [101, 1001, 10001]
            .iter()
            .map(|&d| {
                build_irrep(j, qp(d))
                    .unwrap()
                    .jplus()
                    .max_abs_diff(classical.jplus())
            })
            .collect();
        assert!(dists[0] > dists[1] && dists[1] > dists[2], "{dists:?}");
    }
}
