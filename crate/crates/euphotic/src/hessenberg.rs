//! Weight data of the Hessenberg strata: for each orbit point
//! `y = w x_Q`, the parabolic root set, the dual weight space it cuts
//! out, and the emptiness/meagerness gates.
//!
//! Sign conventions are part of the contract: the parabolic takes the
//! Levi roots with value `<= 0` at `y`, the perpendicular space takes the
//! dual weights with value `< 0` at `y`. Ties sit exactly on these
//! boundaries and the tests pin them.

use crate::affine::{
    exceptional_base_points, is_exceptional, orbit_points, AffineRoot, Facet, LatticeChoice,
    OrbitWitness,
};
use crate::cone::strict_cone_feasible;
use crate::error::{capability_err, Error, Result};
use crate::grading::{grade, GradingReport};
use crate::rat::{rat, Rat, RatVec};
use crate::root_system::RootSystem;
use num::Signed;
use serde::{Deserialize, Serialize};

/// A gradient-set rule: the stratum is empty for the scenario's
/// functional when every listed gradient is absent from the dual weight
/// support. Gradients are root coefficient vectors.
pub type GradientRule = Vec<Vec<i64>>;

/// Per-simple-root filter applied after enumeration, with strict or
/// non-strict comparison.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimpleRootBound {
    /// 1-based simple root index.
    pub simple: usize,
    pub min: Option<String>,
    pub max: Option<String>,
    #[serde(default)]
    pub strict_min: bool,
    #[serde(default)]
    pub strict_max: bool,
}

impl SimpleRootBound {
    pub fn admits(&self, rs: &RootSystem, y: &RatVec) -> Result<bool> {
        if self.simple == 0 || self.simple > rs.rank {
            return Err(Error::Input(format!("simple root {} out of range", self.simple)));
        }
        let v = &y.0[self.simple - 1];
        if let Some(min) = &self.min {
            let min = crate::rat::parse_rat(min)?;
            if (self.strict_min && *v <= min) || (!self.strict_min && *v < min) {
                return Ok(false);
            }
        }
        if let Some(max) = &self.max {
            let max = crate::rat::parse_rat(max)?;
            if (self.strict_max && *v >= max) || (!self.strict_max && *v > max) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GateFlags {
    pub exceptional: bool,
    pub halfspace_empty: bool,
    /// Only computed for hyperspecial facets.
    pub simple_root_meager: Option<bool>,
    /// Only computed when the scenario supplies rules.
    pub rule_empty: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct HessenbergDatum {
    pub y: RatVec,
    pub qw_roots: Vec<AffineRoot>,
    pub vw_perp: Vec<AffineRoot>,
    /// Root indices of the gradients of `vw_perp` (the gradient map is
    /// injective on the dual weights).
    pub vw_perp_gradients: Vec<usize>,
    pub flags: GateFlags,
    pub witness: Option<OrbitWitness>,
}

/// Levi roots of the facet with value `<= 0` at `y`.
pub fn qw_roots(rs: &RootSystem, grading: &GradingReport, y: &RatVec) -> Vec<AffineRoot> {
    grading
        .levi_roots
        .iter()
        .filter(|ar| !ar.value(rs, y).is_positive())
        .copied()
        .collect()
}

/// Dual weights with value `< 0` at `y`, cross-checked against the
/// gradient-form criterion `<grad, y - x_P> < 1/m`; disagreement is an
/// internal invariant violation.
pub fn vw_perp(rs: &RootSystem, grading: &GradingReport, y: &RatVec) -> Result<Vec<AffineRoot>> {
    let affine_form: Vec<AffineRoot> = grading
        .vp_dual_weights
        .iter()
        .filter(|ar| ar.value(rs, y).is_negative())
        .copied()
        .collect();
    let x_p = &grading.facet.barycenter;
    let diff = y - x_p;
    let threshold = rat(1, grading.m);
    let gradient_form: Vec<AffineRoot> = grading
        .vp_dual_weights
        .iter()
        .filter(|ar| rs.pairing(ar.gradient, &diff) < threshold)
        .copied()
        .collect();
    if affine_form != gradient_form {
        return Err(Error::Invariant(
            "affine-form and gradient-form dual weight sets disagree".into(),
        ));
    }
    Ok(affine_form)
}

/// True when the dual weight gradients fit in an open half-space not
/// containing 0, which certifies an empty stratum for a nonzero
/// semisimple functional. For hyperspecial facets the zero weight of the
/// dual module is not part of the gradient set, so this gate is
/// informational only there; the simple-root gate is the hyperspecial
/// certificate.
pub fn halfspace_empty(rs: &RootSystem, gradients: &[usize]) -> Result<bool> {
    let vectors: Vec<RatVec> = gradients.iter().map(|&r| RatVec::from_i64(&rs.roots[r])).collect();
    Ok(strict_cone_feasible(rs.rank, &vectors)?.is_some())
}

/// Meagerness certificate for hyperspecial facets: some simple root
/// pairs `>= 1` with the (dominant) orbit point.
pub fn simple_root_meager(rs: &RootSystem, facet: &Facet, y: &RatVec) -> Result<bool> {
    if !facet.is_hyperspecial(rs) {
        return capability_err("simple-root meagerness gate applies to hyperspecial facets only");
    }
    Ok(y.0.iter().any(|v| *v >= Rat::from_integer(1.into())))
}

/// True when some rule has all its gradients absent from the support.
pub fn rule_empty(rs: &RootSystem, gradients: &[usize], rules: &[GradientRule]) -> bool {
    rules.iter().any(|rule| {
        !rule.is_empty()
            && rule.iter().all(|coeffs| match rs.root_index(coeffs) {
                Some(idx) => !gradients.contains(&idx),
                None => true,
            })
    })
}

/// Builds the full datum for one point (any point, dominant or not).
pub fn datum_at(
    rs: &RootSystem,
    grading: &GradingReport,
    y: &RatVec,
    exceptional: bool,
    rules: Option<&[GradientRule]>,
    witness: Option<OrbitWitness>,
) -> Result<HessenbergDatum> {
    let qw = qw_roots(rs, grading, y);
    let perp = vw_perp(rs, grading, y)?;
    let mut gradients: Vec<usize> = perp.iter().map(|a| a.gradient).collect();
    gradients.sort_unstable();
    gradients.dedup();
    if gradients.len() != perp.len() {
        return Err(Error::Invariant("gradient map not injective on dual weights".into()));
    }
    let hs = halfspace_empty(rs, &gradients)?;
    let srm = if grading.facet.is_hyperspecial(rs) {
        Some(simple_root_meager(rs, &grading.facet, y)?)
    } else {
        None
    };
    let re = rules.map(|r| rule_empty(rs, &gradients, r));
    Ok(HessenbergDatum {
        y: y.clone(),
        qw_roots: qw,
        vw_perp: perp,
        vw_perp_gradients: gradients,
        flags: GateFlags {
            exceptional,
            halfspace_empty: hs,
            simple_root_meager: srm,
            rule_empty: re,
        },
        witness,
    })
}

pub struct EnumerationInput<'a> {
    pub facet_p: &'a Facet,
    pub x_q: &'a RatVec,
    pub lattice: LatticeChoice,
    pub bound: Rat,
    pub rules: Option<&'a [GradientRule]>,
    pub predicates: &'a [SimpleRootBound],
}

/// Enumerates the dominant orbit candidates within the bound and
/// populates every gate, applying the user predicates last.
pub fn enumerate_candidates(
    rs: &RootSystem,
    input: &EnumerationInput<'_>,
) -> Result<Vec<HessenbergDatum>> {
    let grading = grade(rs, input.facet_p)?;
    let base = exceptional_base_points(rs, input.x_q, input.facet_p, input.lattice)?;
    let points = orbit_points(rs, input.x_q, input.lattice, &input.bound)?;
    let mut out = Vec::new();
    'next: for p in points {
        for pred in input.predicates {
            if !pred.admits(rs, &p.point)? {
                continue 'next;
            }
        }
        let exceptional = is_exceptional(&base, &p.point);
        out.push(datum_at(rs, &grading, &p.point, exceptional, input.rules, Some(p.witness))?);
    }
    Ok(out)
}

/// Membership in a union of unit strips `0 < <gamma, y> < 1`.
pub fn in_strip_region(rs: &RootSystem, strips: &[Vec<i64>], y: &RatVec) -> bool {
    strips.iter().any(|coeffs| {
        let v = rs.pairing_coeffs(coeffs, y);
        v.is_positive() && v < Rat::from_integer(1.into())
    })
}
