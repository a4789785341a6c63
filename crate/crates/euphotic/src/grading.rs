//! The cyclic grading of the Lie algebra attached to a facet: Levi roots,
//! the weights of the first filtration quotient and its dual, and the
//! graded dimensions.

use crate::affine::{AffineRoot, Facet};
use crate::error::{Error, Result};
use crate::rat::{frac_part, rat, Rat};
use crate::root_system::RootSystem;
use num::{One, ToPrimitive, Zero};

/// Everything the downstream bookkeeping needs about the grading of `g`
/// induced by a facet barycenter: graded dimensions `d_0..d_{m-1}` and the
/// three distinguished affine root sets.
#[derive(Debug, Clone)]
pub struct GradingReport {
    pub facet: Facet,
    pub m: i64,
    pub dims: Vec<usize>,
    /// Affine roots of value 0 at the barycenter.
    pub levi_roots: Vec<AffineRoot>,
    /// Affine roots of value `1/m` (weights of the degree-1 piece).
    pub vp_weights: Vec<AffineRoot>,
    /// Affine roots of value `-1/m` (weights of the dual piece).
    pub vp_dual_weights: Vec<AffineRoot>,
}

/// Grades the Lie algebra by the residues of `<alpha, x_P>` modulo 1.
///
/// Re-derives the residue set and insists it is exactly
/// `{0, 1/m, ..., (m-1)/m}`; a mismatch means the barycenter solve went
/// wrong and is reported as an invariant violation.
pub fn grade(rs: &RootSystem, facet: &Facet) -> Result<GradingReport> {
    let m = facet.m;
    let x = &facet.barycenter;
    let mut dims = vec![0usize; m as usize];
    dims[0] += rs.rank; // Cartan sits in degree 0
    let mut levi_roots = Vec::new();
    let mut vp_weights = Vec::new();
    let mut vp_dual_weights = Vec::new();
    let inv_m = rat(1, m);
    let mut seen_residues = vec![false; m as usize];
    seen_residues[0] = true;

    for r in 0..rs.num_roots() {
        let val = rs.pairing(r, x);
        let residue = frac_part(&val);
        // residue must be k/m for integer k
        let scaled = &residue * rat(m, 1);
        if !scaled.denom().is_one() {
            return Err(Error::Invariant(format!(
                "root value {val} is not a multiple of 1/{m} at the barycenter"
            )));
        }
        let k = scaled.numer().to_i64().expect("residue class fits i64") as usize;
        dims[k] += 1;
        seen_residues[k] = true;

        let as_level = |target: &Rat| -> Option<AffineRoot> {
            let level = target - &val;
            level.denom().is_one().then(|| AffineRoot {
                gradient: r,
                level: level.numer().to_i64().expect("level fits i64"),
            })
        };
        if let Some(ar) = as_level(&Rat::zero()) {
            levi_roots.push(ar);
        }
        if m > 1 {
            if let Some(ar) = as_level(&inv_m) {
                vp_weights.push(ar);
            }
            if let Some(ar) = as_level(&-&inv_m) {
                vp_dual_weights.push(ar);
            }
        } else {
            // m = 1: degree 1 and degree charge -1 both reduce to the full
            // adjoint slice at levels 1 and -1
            vp_weights.push(AffineRoot { gradient: r, level: 1 - val.to_integer().to_i64().unwrap() });
            vp_dual_weights.push(AffineRoot { gradient: r, level: -1 - val.to_integer().to_i64().unwrap() });
        }
    }

    if !seen_residues.iter().all(|&b| b) {
        return Err(Error::Invariant(format!(
            "grading residues do not cover all of Z/{m} for facet {:?}",
            facet.j
        )));
    }

    levi_roots.sort();
    vp_weights.sort();
    vp_dual_weights.sort();
    Ok(GradingReport {
        facet: facet.clone(),
        m,
        dims,
        levi_roots,
        vp_weights,
        vp_dual_weights,
    })
}

/// Dimension of the Levi factor: the degree-0 graded dimension.
pub fn levi_dim(rs: &RootSystem, facet: &Facet) -> Result<usize> {
    Ok(grade(rs, facet)?.dims[0])
}

impl GradingReport {
    /// Finite roots occurring as gradients of the dual weights, in root
    /// index order. The gradient map is injective on this set.
    pub fn vp_dual_gradients(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.vp_dual_weights.iter().map(|a| a.gradient).collect();
        g.sort_unstable();
        g.dedup();
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::barycenter;
    use crate::root_system::GroupType;

    #[test]
    fn g2_subregular_facet_grades_6_8() {
        let rs = RootSystem::build(GroupType::G2, 2).unwrap();
        let facet = barycenter(&rs, &[0, 2]).unwrap();
        let g = grade(&rs, &facet).unwrap();
        assert_eq!(g.dims, vec![6, 8]);
        assert_eq!(levi_dim(&rs, &facet).unwrap(), 6);
        assert_eq!(g.vp_dual_weights.len(), 8);
        // dual weights are the negatives of the weights
        for (a, b) in g.vp_weights.iter().zip({
            let mut negs: Vec<_> = g.vp_dual_weights.iter().map(|w| w.negated(&rs)).collect();
            negs.sort();
            negs
        }.iter()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn f4_and_e8_example_facets() {
        let f4 = RootSystem::build(GroupType::F4, 4).unwrap();
        let facet = barycenter(&f4, &[0, 1, 3, 4]).unwrap();
        assert_eq!(facet.m, 3);
        assert_eq!(grade(&f4, &facet).unwrap().dims, vec![16, 18, 18]);

        let e8 = RootSystem::build(GroupType::E8, 8).unwrap();
        let facet = barycenter(&e8, &[0, 1, 2, 3, 4, 6, 7, 8]).unwrap();
        assert_eq!(facet.m, 5);
        assert_eq!(grade(&e8, &facet).unwrap().dims, vec![48, 50, 50, 50, 50]);
    }

    #[test]
    fn hyperspecial_and_iwahori_levi_dims() {
        let rs = RootSystem::build(GroupType::B, 3).unwrap();
        let hyper = barycenter(&rs, &[1, 2, 3]).unwrap();
        assert_eq!(levi_dim(&rs, &hyper).unwrap(), 21); // dim so(7)
        let iwahori = barycenter(&rs, &[]).unwrap();
        assert_eq!(levi_dim(&rs, &iwahori).unwrap(), 3);
    }

    #[test]
    fn palindrome_and_total_dimension_over_all_facets() {
        for (g, n) in [(GroupType::A, 4), (GroupType::C, 3), (GroupType::G2, 2), (GroupType::F4, 4)] {
            let rs = RootSystem::build(g, n).unwrap();
            let dim_g = rs.num_roots() + rs.rank;
            for bits in 0..(1u32 << (n + 1)) - 1 {
                let j: Vec<usize> = (0..=n).filter(|i| bits & (1 << i) != 0).collect();
                let facet = barycenter(&rs, &j).unwrap();
                let rep = grade(&rs, &facet).unwrap();
                assert_eq!(rep.dims.iter().sum::<usize>(), dim_g);
                let m = rep.m as usize;
                for i in 1..m {
                    assert_eq!(rep.dims[i], rep.dims[m - i], "palindrome fails for {g}{n} J={j:?}");
                }
                if m > 1 {
                    assert_eq!(rep.dims[1], rep.vp_weights.len());
                }
            }
        }
    }
}
