//! Sweep of the operator identities behind the model: the quantum-plane
//! relation and cyclic shift of the angle space, and the deformed
//! commutators and Casimir of the SU_q(2) irreps.

use std::f64::consts::PI;

use qrotor_core::bp_space::{build_space, check_cyclic_shift, check_quantum_plane};
use qrotor_core::suq2::{build_irrep, check_casimir, check_commutators};
use qrotor_core::{Deformation, QParameter, Spin};

/// Largest angle-space dimension the dense checks accept.
pub const MAX_DENSE_DIM: u64 = 1001;

pub const DEFAULT_MAX_DIM: u64 = 201;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub identity: &'static str,
    pub params: String,
    pub deviation: f64,
}

/// Default tolerance: tighter for the desk-scale sweep, looser once the
/// largest dense products come in.
pub fn default_tolerance(max_dim: u64) -> f64 {
    if max_dim <= DEFAULT_MAX_DIM {
        1e-11
    } else {
        1e-10
    }
}

/// Cutoffs `l` probed for a given largest dimension.
pub fn l_sweep(max_dim: u64) -> Vec<u64> {
    let top = (max_dim - 1) / 2;
    let mut ls: Vec<u64> = [1, 2, 5, 25, top]
        .into_iter()
        .filter(|&l| l <= top)
        .collect();
    ls.sort_unstable();
    ls.dedup();
    ls
}

pub fn j_sweep() -> [Spin; 5] {
    [
        Spin::HALF,
        Spin::integer(1),
        Spin::integer(2),
        Spin::integer(5),
        Spin::integer(10),
    ]
}

/// Runs every identity over the sweep. `max_dim` must be odd and at least 3.
pub fn run_sweep(max_dim: u64) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let ls = l_sweep(max_dim);
    for &l in &ls {
        let thetas: &[f64] = if l <= 25 {
            &[0.0, PI / 3.0]
        } else {
            &[PI / 3.0]
        };
        for &theta0 in thetas {
            let space = build_space(Spin::integer(l as u32), theta0).expect("odd dimension >= 3");
            let params = format!("l={l} D={} theta0={theta0:.4}", 2 * l + 1);
            out.push(CheckOutcome {
                identity: "quantum-plane",
                params: params.clone(),
                deviation: check_quantum_plane(&space),
            });
            out.push(CheckOutcome {
                identity: "cyclic-shift",
                params,
                deviation: check_cyclic_shift(&space),
            });
        }
    }

    let mut deformations: Vec<Deformation> = ls
        .iter()
        .map(|&l| Deformation::Q(QParameter::new(2 * l + 1).expect("odd dimension >= 3")))
        .collect();
    deformations.push(Deformation::Classical);
    for j in j_sweep() {
        for d in &deformations {
            if d.qparameter().is_some_and(|qp| !qp.admits_irrep(j)) {
                continue;
            }
            let irrep = build_irrep(j, *d).expect("irrep admitted by the space");
            let params = match d.qparameter() {
                Some(qp) => format!("j={j} D={}", qp.dim()),
                None => format!("j={j} classical"),
            };
            out.push(CheckOutcome {
                identity: "commutators",
                params: params.clone(),
                deviation: check_commutators(&irrep),
            });
            out.push(CheckOutcome {
                identity: "casimir",
                params,
                deviation: check_casimir(&irrep),
            });
        }
    }
    out
}
