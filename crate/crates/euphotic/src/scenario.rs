//! Scenario files: a full candidate datum as structured data, with
//! provenance enforced on every table-sourced integer, plus the audit
//! driver that consolidates grading, Swan, open-orbit and rigidity
//! arithmetic over one scenario.

use crate::affine::{barycenter, Facet, LatticeChoice};
use crate::chargen::CharacterTuple;
use crate::error::{input_err, Error, Result};
use crate::grading::{grade, levi_dim};
use crate::hessenberg::{GradientRule, SimpleRootBound};
use crate::psi::{centralizer, BlockFunctional};
use crate::rat::{parse_rat, Rat, RatVec};
use crate::rigidity::{open_orbit_check, rigidity_sum, Provenance, RigidityInputs};
use crate::root_system::{classical_to_value, GroupType, RootSystem};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupSpec {
    #[serde(rename = "type")]
    pub group: String,
    pub rank: Option<usize>,
    pub lattice: LatticeChoice,
}

/// Facet of the level-0 parahoric: a facet index set, a hyperspecial
/// parabolic label, or an explicit base point when the source states
/// coordinates directly.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FacetQSpec {
    Facet { j: Vec<usize> },
    Parabolic { parabolic: crate::spherical::ParabolicSpec },
    ValuePoint { value: Vec<String> },
    ClassicalPoint { classical: Vec<String> },
}

/// Table-sourced integer; the citation is mandatory.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Cited {
    pub value: i64,
    pub cite: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PsiSpec {
    Blocks { blocks: BlockFunctional },
    Table { table: PsiTable },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PsiTable {
    pub dim_lpsi: Cited,
    pub rk_lpsi: Cited,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ChiSpec {
    Symbolic(String),
    Tuple(CharacterTuple),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Scenario {
    pub schema: u32,
    pub name: String,
    pub group: GroupSpec,
    pub facet_p: Vec<usize>,
    pub facet_q: Option<FacetQSpec>,
    pub psi: Option<PsiSpec>,
    pub chi: Option<ChiSpec>,
    #[serde(default)]
    pub rules: Option<Vec<GradientRule>>,
    #[serde(default)]
    pub region_strips: Option<Vec<Vec<i64>>>,
    pub bound: Option<String>,
    #[serde(default)]
    pub predicates: Vec<SimpleRootBound>,
    #[serde(default)]
    pub dim_ginv_pi1: Option<Cited>,
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Scenario> {
        let sc: Scenario = serde_json::from_str(text)
            .map_err(|e| Error::Input(format!("scenario parse error: {e}")))?;
        sc.validate()?;
        Ok(sc)
    }

    pub fn from_path(path: &std::path::Path) -> Result<Scenario> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    fn validate(&self) -> Result<()> {
        let mut issues = Vec::new();
        if self.schema != 1 {
            issues.push(format!("unsupported schema {}", self.schema));
        }
        if let Some(PsiSpec::Table { table }) = &self.psi {
            if table.dim_lpsi.cite.trim().is_empty() {
                issues.push("psi.table.dim_lpsi.cite is empty".into());
            }
            if table.rk_lpsi.cite.trim().is_empty() {
                issues.push("psi.table.rk_lpsi.cite is empty".into());
            }
        }
        if let Some(c) = &self.dim_ginv_pi1 {
            if c.cite.trim().is_empty() {
                issues.push("dim_ginv_pi1.cite is empty".into());
            }
        }
        if let Some(ChiSpec::Symbolic(s)) = &self.chi {
            if s != "symbolic_generic" && s != "symbolic-generic" {
                issues.push(format!("unknown chi spec {s:?}"));
            }
        }
        if issues.is_empty() {
            Ok(())
        } else {
            input_err(format!("invalid scenario {:?}: {}", self.name, issues.join("; ")))
        }
    }

    pub fn root_system(&self) -> Result<RootSystem> {
        let group = GroupType::parse(&self.group.group)?;
        let rank = match (group.fixed_rank(), self.group.rank) {
            (Some(r), None) => r,
            (Some(r), Some(given)) if given == r => r,
            (Some(r), Some(given)) => {
                return input_err(format!("type {group} has rank {r}, got {given}"))
            }
            (None, Some(given)) => given,
            (None, None) => return input_err("rank required for classical types"),
        };
        RootSystem::build(group, rank)
    }

    pub fn facet_p(&self, rs: &RootSystem) -> Result<Facet> {
        barycenter(rs, &self.facet_p)
    }

    /// The level-0 base point: derived from the facet when given as `j`,
    /// or parsed from explicit coordinates.
    pub fn x_q(&self, rs: &RootSystem) -> Result<RatVec> {
        match &self.facet_q {
            None => input_err(format!("scenario {:?} has no facet_q", self.name)),
            Some(FacetQSpec::Facet { j }) => Ok(barycenter(rs, j)?.barycenter),
            Some(FacetQSpec::Parabolic { parabolic }) => {
                let levi = parabolic.levi_nodes(rs)?;
                let j: Vec<usize> = levi.iter().map(|&i| i + 1).collect();
                Ok(barycenter(rs, &j)?.barycenter)
            }
            Some(FacetQSpec::ValuePoint { value }) => {
                let refs: Vec<&str> = value.iter().map(|s| s.as_str()).collect();
                let v = RatVec::parse(&refs)?;
                if v.dim() != rs.rank {
                    return input_err("facet_q.value has wrong dimension");
                }
                Ok(v)
            }
            Some(FacetQSpec::ClassicalPoint { classical }) => {
                let coords: Vec<Rat> = classical
                    .iter()
                    .map(|s| parse_rat(s))
                    .collect::<Result<_>>()?;
                classical_to_value(rs, &coords)
            }
        }
    }

    pub fn lattice(&self) -> LatticeChoice {
        self.group.lattice
    }

    pub fn bound(&self) -> Result<Rat> {
        match &self.bound {
            Some(b) => parse_rat(b),
            None => input_err(format!("scenario {:?} has no enumeration bound", self.name)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub scenario: String,
    pub group: String,
    pub m: i64,
    pub grading_dims: Vec<usize>,
    pub dim_l: i64,
    pub dim_lq: i64,
    pub dim_lpsi: i64,
    pub rk_lpsi: i64,
    pub dim_ginv_pi1: i64,
    pub swan: i64,
    pub open_orbit_check: bool,
    pub rigidity_sum: i64,
    pub provenance: Vec<(String, String)>,
    pub passes: bool,
}

/// Consolidates the numerology of one scenario: grading dimensions, the
/// Swan prediction, the open-orbit dimension check and the rigidity sum,
/// with per-field provenance. Missing table fields are itemized.
pub fn run_audit(scenario: &Scenario) -> Result<AuditReport> {
    let rs = scenario.root_system()?;
    let facet_p = scenario.facet_p(&rs)?;
    let grading = grade(&rs, &facet_p)?;
    let dim_l = grading.dims[0] as i64;

    // dim L_Q from the facet of Q (its Levi is the Levi of the parabolic).
    let dim_lq = match &scenario.facet_q {
        Some(FacetQSpec::Facet { j }) => {
            let fq = barycenter(&rs, j)?;
            levi_dim(&rs, &fq)? as i64
        }
        Some(FacetQSpec::Parabolic { parabolic }) => parabolic.levi_dim(&rs)? as i64,
        Some(_) => {
            let x_q = scenario.x_q(&rs)?;
            rs.levi_from_functional(&x_q).dim as i64
        }
        None => return input_err(format!("scenario {:?}: audit needs facet_q", scenario.name)),
    };

    let mut provenance: Vec<(String, String)> = vec![
        ("dim_l".into(), "computed".into()),
        ("dim_lq".into(), "computed".into()),
    ];
    let (dim_lpsi, rk_lpsi, swan) = match &scenario.psi {
        Some(PsiSpec::Blocks { blocks }) => {
            if !facet_p.is_hyperspecial(&rs) {
                return input_err(
                    "block functionals audit only the hyperspecial case; use a data table otherwise",
                );
            }
            let rep = centralizer(&rs, blocks)?;
            let swan = rep.swan_numerator as i64;
            // hyperspecial identity: #R' = dim L - dim L_psi
            if swan != dim_l - rep.dim_gpsi as i64 {
                return Err(Error::Invariant("Swan identity violated".into()));
            }
            provenance.push(("dim_lpsi".into(), "computed".into()));
            provenance.push(("rk_lpsi".into(), "computed".into()));
            (rep.dim_gpsi as i64, rs.rank as i64, swan)
        }
        Some(PsiSpec::Table { table }) => {
            provenance.push(("dim_lpsi".into(), table.dim_lpsi.cite.clone()));
            provenance.push(("rk_lpsi".into(), table.rk_lpsi.cite.clone()));
            let dim_lpsi = table.dim_lpsi.value;
            (dim_lpsi, table.rk_lpsi.value, dim_l - dim_lpsi)
        }
        None => {
            return input_err(format!(
                "scenario {:?}: audit needs psi (blocks or table with dim_lpsi, rk_lpsi)",
                scenario.name
            ))
        }
    };

    let dim_ginv_pi1 = match &scenario.dim_ginv_pi1 {
        Some(c) => {
            provenance.push(("dim_ginv_pi1".into(), c.cite.clone()));
            c.value
        }
        None => 0,
    };

    let mut inputs = RigidityInputs::new(dim_l, dim_lq, dim_lpsi, rk_lpsi);
    inputs.dim_ginv_pi1 = dim_ginv_pi1;
    inputs.provenance = provenance
        .iter()
        .map(|(k, v)| {
            let p = if v == "computed" { Provenance::Computed } else { Provenance::PaperTable };
            (k.clone(), p)
        })
        .collect();
    let open = open_orbit_check(&inputs)?;
    let sum = rigidity_sum(&inputs);
    Ok(AuditReport {
        scenario: scenario.name.clone(),
        group: format!("{}{}", rs.group, rs.rank),
        m: facet_p.m,
        grading_dims: grading.dims.clone(),
        dim_l,
        dim_lq,
        dim_lpsi,
        rk_lpsi,
        dim_ginv_pi1,
        swan,
        open_orbit_check: open,
        rigidity_sum: sum,
        provenance,
        passes: open && sum == 0,
    })
}

/// Names of the scenarios shipped with the crate.
pub fn shipped_scenario_names() -> Vec<&'static str> {
    SHIPPED.iter().map(|(n, _)| *n).collect()
}

/// Loads a shipped scenario by name.
pub fn shipped_scenario(name: &str) -> Result<Scenario> {
    for (n, text) in SHIPPED {
        if *n == name {
            return Scenario::from_json(text);
        }
    }
    input_err(format!(
        "unknown shipped scenario {name:?}; available: {}",
        shipped_scenario_names().join(", ")
    ))
}

static SHIPPED: &[(&str, &str)] = &[
    ("g2", include_str!("../data/scenarios/g2.json")),
    ("f4_m3", include_str!("../data/scenarios/f4_m3.json")),
    ("f4_m2", include_str!("../data/scenarios/f4_m2.json")),
    ("e6_m3", include_str!("../data/scenarios/e6_m3.json")),
    ("e6_m2", include_str!("../data/scenarios/e6_m2.json")),
    ("e7_m3", include_str!("../data/scenarios/e7_m3.json")),
    ("e7_m2", include_str!("../data/scenarios/e7_m2.json")),
    ("e7_m4", include_str!("../data/scenarios/e7_m4.json")),
    ("e8_m5", include_str!("../data/scenarios/e8_m5.json")),
    ("b3_case4", include_str!("../data/scenarios/b3_case4.json")),
    ("c3_case2", include_str!("../data/scenarios/c3_case2.json")),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_shipped_scenarios_parse() {
        for name in shipped_scenario_names() {
            let sc = shipped_scenario(name).unwrap();
            assert_eq!(sc.name, name);
            sc.root_system().unwrap();
        }
    }

    #[test]
    fn g2_audit_passes() {
        let sc = shipped_scenario("g2").unwrap();
        let report = run_audit(&sc).unwrap();
        assert_eq!(report.m, 2);
        assert_eq!(report.grading_dims, vec![6, 8]);
        assert_eq!(report.dim_lq, 4);
        assert_eq!(report.swan, 5);
        assert!(report.open_orbit_check);
        assert_eq!(report.rigidity_sum, 0);
        assert!(report.passes);
    }

    #[test]
    fn missing_cite_is_rejected() {
        let bad = r#"{
            "schema": 1, "name": "bad",
            "group": {"type": "G2", "lattice": "simply_connected"},
            "facet_p": [0, 2],
            "facet_q": {"j": [0]},
            "psi": {"table": {"dim_lpsi": {"value": 1, "cite": ""},
                               "rk_lpsi": {"value": 1, "cite": "x"}}}
        }"#;
        assert!(Scenario::from_json(bad).is_err());
    }

    #[test]
    fn audit_without_psi_is_itemized() {
        let sc = Scenario::from_json(
            r#"{
            "schema": 1, "name": "incomplete",
            "group": {"type": "G2", "lattice": "simply_connected"},
            "facet_p": [0, 2],
            "facet_q": {"j": [0]}
        }"#,
        )
        .unwrap();
        let err = run_audit(&sc).unwrap_err();
        assert!(err.to_string().contains("psi"));
    }
}
