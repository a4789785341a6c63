//! Rigidity numerology: the Langlands-parameter dimension bookkeeping,
//! the open-orbit dimension check, the rigidity sum, and the Springer
//! dimension identity.
//!
//! Local-monodromy objects enter only through the integers their
//! dimension counts extract; every table-sourced integer carries a
//! provenance note that reports echo.

use crate::error::{input_err, Result};
use crate::root_system::RootSystem;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Computed,
    PaperTable,
}

#[derive(Debug, Clone, Serialize)]
pub struct RigidityInputs {
    pub dim_l: i64,
    pub dim_lq: i64,
    pub dim_lpsi: i64,
    /// `rk L_psi = dim T_psi`.
    pub rk_lpsi: i64,
    /// Invariants under the global fundamental group; 0 unless the
    /// scenario overrides it.
    pub dim_ginv_pi1: i64,
    pub provenance: Vec<(String, Provenance)>,
}

impl RigidityInputs {
    pub fn new(dim_l: i64, dim_lq: i64, dim_lpsi: i64, rk_lpsi: i64) -> Self {
        RigidityInputs {
            dim_l,
            dim_lq,
            dim_lpsi,
            rk_lpsi,
            dim_ginv_pi1: 0,
            provenance: Vec::new(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.dim_lq > self.dim_l {
            return input_err(format!(
                "dim L_Q = {} exceeds dim L = {}",
                self.dim_lq, self.dim_l
            ));
        }
        if self.rk_lpsi > self.dim_lpsi {
            return input_err(format!(
                "rk L_psi = {} exceeds dim L_psi = {}",
                self.rk_lpsi, self.dim_lpsi
            ));
        }
        Ok(())
    }
}

/// `dim L/Q = dim B_psi`, via the two halves `(dim L - dim L_Q)/2` and
/// `(rk L_psi + dim L_psi)/2`. Parity failures mean the scenario data is
/// inconsistent and are input errors.
pub fn open_orbit_check(inputs: &RigidityInputs) -> Result<bool> {
    inputs.validate()?;
    if (inputs.dim_l - inputs.dim_lq) % 2 != 0 {
        return input_err("dim L - dim L_Q must be even (dimension of L/Q counted twice)");
    }
    if (inputs.rk_lpsi + inputs.dim_lpsi) % 2 != 0 {
        return input_err("rk L_psi + dim L_psi must be even (dimension of a Borel)");
    }
    Ok((inputs.dim_l - inputs.dim_lq) / 2 == (inputs.rk_lpsi + inputs.dim_lpsi) / 2)
}

/// The Euler-characteristic sum whose vanishing is cohomological
/// rigidity: `Swan - dim L_Q - rk L_psi + dim g^pi_1` with
/// `Swan = dim L - dim L_psi`.
pub fn rigidity_sum(inputs: &RigidityInputs) -> i64 {
    (inputs.dim_l - inputs.dim_lpsi) - inputs.dim_lq - inputs.rk_lpsi + inputs.dim_ginv_pi1
}

/// `rank + 2 #Phi^+_J = dim L_J`: exact for every subset of simple roots.
pub fn springer_identity(rs: &RootSystem, q_subset: &BTreeSet<usize>) -> Result<bool> {
    let levi = rs.levi_from_simples(q_subset)?;
    let positive = levi.subset.members.iter().filter(|&&r| rs.is_positive(r)).count();
    Ok(rs.rank + 2 * positive == levi.dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::GroupType;

    #[test]
    fn g2_numerology() {
        let inputs = RigidityInputs::new(6, 4, 1, 1);
        assert!(open_orbit_check(&inputs).unwrap());
        assert_eq!(rigidity_sum(&inputs), 0);
    }

    #[test]
    fn degenerate_inputs() {
        let inputs = RigidityInputs::new(10, 10, 0, 0);
        assert!(open_orbit_check(&inputs).unwrap());
        let mut inputs = RigidityInputs::new(0, 0, 0, 0);
        inputs.dim_ginv_pi1 = 3;
        assert_eq!(rigidity_sum(&inputs), 3);
    }

    #[test]
    fn parity_violation_is_an_input_error() {
        let inputs = RigidityInputs::new(7, 4, 1, 1);
        assert!(open_orbit_check(&inputs).is_err());
        let inputs = RigidityInputs::new(6, 4, 2, 1);
        assert!(open_orbit_check(&inputs).is_err());
    }

    #[test]
    fn sum_vanishes_iff_open_orbit_matches() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let half_flag = rng.random_range(0i64..30);
            let b_psi = rng.random_range(0i64..30);
            let rk = rng.random_range(0i64..=b_psi.min(10));
            let dim_lpsi = 2 * b_psi - rk;
            let dim_lq = rng.random_range(0i64..40);
            let dim_l = dim_lq + 2 * half_flag;
            if dim_lpsi < rk {
                continue;
            }
            let inputs = RigidityInputs::new(dim_l, dim_lq, dim_lpsi, rk);
            let check = open_orbit_check(&inputs).unwrap();
            assert_eq!(rigidity_sum(&inputs) == 0, check);
        }
    }

    #[test]
    fn springer_identity_always_holds() {
        for (g, n) in [
            (GroupType::A, 2),
            (GroupType::A, 5),
            (GroupType::B, 3),
            (GroupType::C, 3),
            (GroupType::D, 4),
            (GroupType::F4, 4),
            (GroupType::G2, 2),
        ] {
            let rs = RootSystem::build(g, n).unwrap();
            for bits in 0..(1u32 << n) {
                let subset: BTreeSet<usize> = (0..n).filter(|i| bits & (1 << i) != 0).collect();
                assert!(springer_identity(&rs, &subset).unwrap());
            }
        }
    }
}
