//! The hyperspecial classification layer: the dimension equality
//! `dim G_psi + dim L_Q = #Phi` and the canned case lists for the
//! classical types, with extras found by enumeration reported and never
//! suppressed.

use crate::error::{input_err, Result};
use crate::root_system::{GroupType, RootSystem};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// A parabolic (equivalently, a Levi up to association) of a classical
/// group, in the labelling the case lists use.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParabolicSpec {
    /// Type A: partition of `n` by Levi block sizes (stored descending).
    Partition(Vec<usize>),
    /// Types B/C/D: the set of Dynkin nodes removed from the Levi
    /// (1-based). `P_d` removes `{d}`, `P_{d,d'}` removes `{d, d'}`; in
    /// type D the stabilizer of an isotropic `(n-1)`-space removes both
    /// fork nodes.
    FlaggedNodes(Vec<usize>),
}

impl ParabolicSpec {
    pub fn partition(parts: &[usize]) -> ParabolicSpec {
        let mut p = parts.to_vec();
        p.sort_unstable_by(|a, b| b.cmp(a));
        ParabolicSpec::Partition(p)
    }

    pub fn maximal(group: GroupType, rank: usize, d: usize) -> ParabolicSpec {
        if group == GroupType::D && d == rank - 1 {
            ParabolicSpec::FlaggedNodes(vec![rank - 1, rank])
        } else {
            ParabolicSpec::FlaggedNodes(vec![d])
        }
    }

    pub fn two_step(d: usize, d2: usize) -> ParabolicSpec {
        ParabolicSpec::FlaggedNodes(vec![d, d2])
    }

    /// 0-based simple roots of the Levi.
    pub fn levi_nodes(&self, rs: &RootSystem) -> Result<BTreeSet<usize>> {
        match self {
            ParabolicSpec::Partition(parts) => {
                if rs.group != GroupType::A {
                    return input_err("partition specs are for type A only");
                }
                let n = rs.rank + 1;
                if parts.iter().sum::<usize>() != n || parts.iter().any(|&p| p == 0) {
                    return input_err(format!("partition {parts:?} does not sum to {n}"));
                }
                let mut removed = BTreeSet::new();
                let mut acc = 0;
                for &p in &parts[..parts.len() - 1] {
                    acc += p;
                    removed.insert(acc - 1); // 0-based node index
                }
                Ok((0..rs.rank).filter(|i| !removed.contains(i)).collect())
            }
            ParabolicSpec::FlaggedNodes(nodes) => {
                if rs.group == GroupType::A {
                    return input_err("node specs are for types B/C/D");
                }
                let mut removed = BTreeSet::new();
                for &d in nodes {
                    if d == 0 || d > rs.rank {
                        return input_err(format!("node {d} out of range 1..={}", rs.rank));
                    }
                    removed.insert(d - 1);
                }
                Ok((0..rs.rank).filter(|i| !removed.contains(i)).collect())
            }
        }
    }

    pub fn levi_dim(&self, rs: &RootSystem) -> Result<usize> {
        Ok(rs.levi_from_simples(&self.levi_nodes(rs)?)?.dim)
    }
}

impl fmt::Display for ParabolicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParabolicSpec::Partition(p) => {
                let s: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", s.join(","))
            }
            ParabolicSpec::FlaggedNodes(nodes) => {
                let s: Vec<String> = nodes.iter().map(|x| x.to_string()).collect();
                write!(f, "P_{{{}}}", s.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SphericalPair {
    pub group: GroupType,
    pub rank: usize,
    pub psi_spec: ParabolicSpec,
    pub q_spec: ParabolicSpec,
    pub dim_gpsi: usize,
    pub dim_lq: usize,
    pub n_roots: usize,
    pub holds: bool,
    pub in_paper_list: bool,
    pub paper_case: Option<String>,
}

/// Checks `dim G_psi + dim L_Q = #Phi` and returns all three numbers.
pub fn dim_equality(
    rs: &RootSystem,
    psi_spec: &ParabolicSpec,
    q_spec: &ParabolicSpec,
) -> Result<(bool, usize, usize, usize)> {
    let dim_gpsi = psi_spec.levi_dim(rs)?;
    let dim_lq = q_spec.levi_dim(rs)?;
    let n_roots = rs.num_roots();
    Ok((dim_gpsi + dim_lq == n_roots, dim_gpsi, dim_lq, n_roots))
}

fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            acc.push(k);
            rec(n - k, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn label_space(group: GroupType, rank: usize) -> Vec<ParabolicSpec> {
    match group {
        GroupType::A => partitions_of(rank + 1)
            .into_iter()
            .map(ParabolicSpec::Partition)
            .collect(),
        _ => {
            let mut out = Vec::new();
            for d in 1..=rank {
                out.push(ParabolicSpec::FlaggedNodes(vec![d]));
            }
            for d in 1..rank {
                for d2 in d + 1..=rank {
                    out.push(ParabolicSpec::FlaggedNodes(vec![d, d2]));
                }
            }
            out
        }
    }
}

/// All ordered label pairs satisfying the dimension equality, flagged
/// against the canned list. Extras beyond the list are reported as
/// equality-only pairs, never dropped.
pub fn enumerate_dim_eq(group: GroupType, max_rank: usize) -> Result<Vec<SphericalPair>> {
    if max_rank > 8 {
        return input_err("max rank capped at 8");
    }
    let min_rank = match group {
        GroupType::A => 1,
        GroupType::B => 2,
        GroupType::C => 2,
        GroupType::D => 3,
        g => return input_err(format!("classification covers classical types, got {g}")),
    };
    let mut out = Vec::new();
    for rank in min_rank..=max_rank {
        let rs = RootSystem::build(group, rank)?;
        let canned = paper_list(group, rank)?;
        let labels = label_space(group, rank);
        for psi in &labels {
            for q in &labels {
                let (holds, dim_gpsi, dim_lq, n_roots) = dim_equality(&rs, psi, q)?;
                if !holds {
                    continue;
                }
                let case = canned
                    .iter()
                    .find(|c| &c.psi_spec == psi && &c.q_spec == q)
                    .and_then(|c| c.paper_case.clone());
                out.push(SphericalPair {
                    group,
                    rank,
                    psi_spec: psi.clone(),
                    q_spec: q.clone(),
                    dim_gpsi,
                    dim_lq,
                    n_roots,
                    holds,
                    in_paper_list: case.is_some(),
                    paper_case: case,
                });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Deserialize)]
struct CaseFileEntry {
    #[serde(rename = "type")]
    group: GroupType,
    rank: usize,
    psi: ParabolicSpec,
    q: ParabolicSpec,
    cite: String,
}

#[derive(Debug, Deserialize)]
struct CaseFile {
    schema: u32,
    cases: Vec<CaseFileEntry>,
}

/// The canned case table, embedded from the versioned data file.
pub fn paper_list(group: GroupType, rank: usize) -> Result<Vec<SphericalPair>> {
    static DATA: &str = include_str!("../data/spherical_cases.json");
    let file: CaseFile = serde_json::from_str(DATA)
        .map_err(|e| crate::error::Error::Input(format!("bad spherical case data: {e}")))?;
    debug_assert_eq!(file.schema, 1);
    let rs = RootSystem::build(group, rank)?;
    let mut out = Vec::new();
    for e in file.cases {
        if e.group != group || e.rank != rank {
            continue;
        }
        let (holds, dim_gpsi, dim_lq, n_roots) = dim_equality(&rs, &e.psi, &e.q)?;
        out.push(SphericalPair {
            group,
            rank,
            psi_spec: e.psi,
            q_spec: e.q,
            dim_gpsi,
            dim_lq,
            n_roots,
            holds,
            in_paper_list: true,
            paper_case: Some(e.cite),
        });
    }
    Ok(out)
}

/// Regenerates the content of the canned case data file from the family
/// definitions; the shipped file is tested against this.
pub fn generate_case_data(max_rank: usize) -> serde_json::Value {
    use serde_json::json;
    let mut cases = Vec::new();
    let push = |group: GroupType,
                    rank: usize,
                    psi: &ParabolicSpec,
                    q: &ParabolicSpec,
                    cite: &str,
                    cases: &mut Vec<serde_json::Value>| {
        cases.push(json!({
            "type": group,
            "rank": rank,
            "psi": psi,
            "q": q,
            "cite": cite,
        }));
    };

    // Type A on SL_n, rank n-1.
    for rank in 1..=max_rank {
        let n = rank + 1;
        let ones = ParabolicSpec::partition(&vec![1; n]);
        let hook = ParabolicSpec::partition(&[n - 1, 1]);
        push(GroupType::A, rank, &ones, &hook, "sec 6.2 (2)", &mut cases);
        push(GroupType::A, rank, &hook, &ones, "sec 6.2 (1)", &mut cases);
        if n % 2 == 0 && n >= 4 {
            let m = n / 2;
            let mm = ParabolicSpec::partition(&[m, m]);
            let mm11 = ParabolicSpec::partition(&[m, m - 1, 1]);
            push(GroupType::A, rank, &mm11, &mm, "sec 6.2 (3)", &mut cases);
            push(GroupType::A, rank, &mm, &mm11, "sec 6.2 (4)", &mut cases);
        }
        if n % 2 == 1 && n >= 5 {
            let m = n / 2;
            let big = ParabolicSpec::partition(&[m + 1, m]);
            let small = ParabolicSpec::partition(&[m, m, 1]);
            push(GroupType::A, rank, &small, &big, "sec 6.2 (5)", &mut cases);
            push(GroupType::A, rank, &big, &small, "sec 6.2 (6)", &mut cases);
        }
        if n == 6 {
            let q222 = ParabolicSpec::partition(&[2, 2, 2]);
            let p42 = ParabolicSpec::partition(&[4, 2]);
            push(GroupType::A, rank, &p42, &q222, "sec 6.2 (7)", &mut cases);
            push(GroupType::A, rank, &q222, &p42, "sec 6.2 (8)", &mut cases);
        }
    }

    // Type B.
    for n in 2..=max_rank {
        let siegel = ParabolicSpec::maximal(GroupType::B, n, n);
        push(GroupType::B, n, &siegel, &siegel, "sec 6.3 (1) Siegel", &mut cases);
        if n == 2 || n == 3 {
            let p1 = ParabolicSpec::maximal(GroupType::B, n, 1);
            let p2 = ParabolicSpec::maximal(GroupType::B, n, 2);
            let (c1, c2) = if n == 2 {
                ("sec 6.3 (2)", "sec 6.3 (3)")
            } else {
                ("sec 6.3 (4)", "sec 6.3 (5)")
            };
            push(GroupType::B, n, &p1, &p2, c1, &mut cases);
            push(GroupType::B, n, &p2, &p1, c2, &mut cases);
        }
    }

    // Type C.
    for n in 3..=max_rank {
        let siegel = ParabolicSpec::maximal(GroupType::C, n, n);
        push(GroupType::C, n, &siegel, &siegel, "sec 6.4 (1) Siegel", &mut cases);
        if n == 3 {
            let p1 = ParabolicSpec::maximal(GroupType::C, n, 1);
            let p2 = ParabolicSpec::maximal(GroupType::C, n, 2);
            push(GroupType::C, n, &p1, &p2, "sec 6.4 (2)", &mut cases);
            push(GroupType::C, n, &p2, &p1, "sec 6.4 (3)", &mut cases);
        }
    }

    // Type D: the fixed low-rank cases, including the D4 outer orbit.
    if max_rank >= 4 {
        let d4_orbit: [(Vec<usize>, Vec<usize>); 6] = [
            (vec![4], vec![1, 2]),
            (vec![4], vec![2, 3]),
            (vec![1], vec![2, 4]),
            (vec![3], vec![1, 2]),
            (vec![1], vec![2, 3]),
            (vec![3], vec![2, 4]),
        ];
        for (a, b) in &d4_orbit {
            let pa = ParabolicSpec::FlaggedNodes(a.clone());
            let pb = ParabolicSpec::FlaggedNodes(b.clone());
            push(GroupType::D, 4, &pa, &pb, "sec 6.5 (1)", &mut cases);
            push(GroupType::D, 4, &pb, &pa, "sec 6.5 (2)", &mut cases);
        }
    }
    if max_rank >= 5 {
        let p5 = ParabolicSpec::maximal(GroupType::D, 5, 5);
        let p3 = ParabolicSpec::maximal(GroupType::D, 5, 3);
        push(GroupType::D, 5, &p5, &p3, "sec 6.5 (3)", &mut cases);
        push(GroupType::D, 5, &p3, &p5, "sec 6.5 (4)", &mut cases);
    }
    if max_rank >= 6 {
        let p6 = ParabolicSpec::maximal(GroupType::D, 6, 6);
        let p3 = ParabolicSpec::maximal(GroupType::D, 6, 3);
        push(GroupType::D, 6, &p6, &p3, "sec 6.5 (5)", &mut cases);
        push(GroupType::D, 6, &p3, &p6, "sec 6.5 (6)", &mut cases);
    }

    serde_json::json!({ "schema": 1, "cases": cases })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Set EUPHOTIC_REGEN_DATA=1 to rewrite the shipped data file from the
    // family definitions.
    #[test]
    fn regenerate_case_data_file() {
        if std::env::var("EUPHOTIC_REGEN_DATA").is_ok() {
            let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/spherical_cases.json");
            let body = serde_json::to_string_pretty(&generate_case_data(8)).unwrap();
            std::fs::write(path, body + "\n").unwrap();
        }
    }

    #[test]
    fn shipped_case_file_matches_generator() {
        let shipped: serde_json::Value =
            serde_json::from_str(include_str!("../data/spherical_cases.json")).unwrap();
        assert_eq!(shipped, generate_case_data(8));
    }

    #[test]
    fn dim_equality_examples() {
        let a5 = RootSystem::build(GroupType::A, 5).unwrap();
        let (ok, g, l, phi) = dim_equality(
            &a5,
            &ParabolicSpec::partition(&[4, 2]),
            &ParabolicSpec::partition(&[2, 2, 2]),
        )
        .unwrap();
        assert!(ok);
        assert_eq!((g, l, phi), (19, 11, 30));

        let b3 = RootSystem::build(GroupType::B, 3).unwrap();
        let (ok, g, l, phi) = dim_equality(
            &b3,
            &ParabolicSpec::maximal(GroupType::B, 3, 1),
            &ParabolicSpec::maximal(GroupType::B, 3, 2),
        )
        .unwrap();
        assert!(ok);
        assert_eq!((g, l, phi), (11, 7, 18));

        let a3 = RootSystem::build(GroupType::A, 3).unwrap();
        let (ok, g, l, phi) = dim_equality(
            &a3,
            &ParabolicSpec::partition(&[2, 2]),
            &ParabolicSpec::partition(&[2, 2]),
        )
        .unwrap();
        assert!(!ok);
        assert_eq!((g, l, phi), (7, 7, 12));
    }

    #[test]
    fn every_canned_case_satisfies_the_equality() {
        for group in [GroupType::A, GroupType::B, GroupType::C, GroupType::D] {
            for rank in 1..=8usize {
                if RootSystem::build(group, rank).is_err() {
                    continue;
                }
                for case in paper_list(group, rank).unwrap() {
                    assert!(
                        case.holds,
                        "canned case fails: {group}{rank} {} / {} ({:?})",
                        case.psi_spec, case.q_spec, case.paper_case
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_contains_the_canned_list() {
        for group in [GroupType::A, GroupType::B, GroupType::C, GroupType::D] {
            let all = enumerate_dim_eq(group, 8).unwrap();
            for rank in 1..=8usize {
                if RootSystem::build(group, rank).is_err() {
                    continue;
                }
                for case in paper_list(group, rank).unwrap() {
                    assert!(
                        all.iter().any(|p| p.rank == rank
                            && p.psi_spec == case.psi_spec
                            && p.q_spec == case.q_spec
                            && p.in_paper_list),
                        "missing from enumeration: {group}{rank} {} / {}",
                        case.psi_spec,
                        case.q_spec
                    );
                }
            }
        }
    }

    #[test]
    fn equality_is_symmetric_and_siegel_checks() {
        let b4 = RootSystem::build(GroupType::B, 4).unwrap();
        let s = ParabolicSpec::maximal(GroupType::B, 4, 4);
        let (ok, g, l, _) = dim_equality(&b4, &s, &s).unwrap();
        assert!(ok);
        assert_eq!((g, l), (16, 16));

        let d6 = RootSystem::build(GroupType::D, 6).unwrap();
        let (ok, g, l, phi) = dim_equality(
            &d6,
            &ParabolicSpec::maximal(GroupType::D, 6, 6),
            &ParabolicSpec::maximal(GroupType::D, 6, 3),
        )
        .unwrap();
        assert!(ok);
        assert_eq!((g, l, phi), (36, 24, 60));

        // symmetry of the verdict
        let a6 = RootSystem::build(GroupType::A, 6).unwrap();
        let p = ParabolicSpec::partition(&[4, 3]);
        let q = ParabolicSpec::partition(&[3, 3, 1]);
        assert_eq!(dim_equality(&a6, &p, &q).unwrap().0, dim_equality(&a6, &q, &p).unwrap().0);
        assert!(dim_equality(&a6, &p, &q).unwrap().0);
    }

    #[test]
    fn rank1_sanity_case() {
        let a1 = RootSystem::build(GroupType::A, 1).unwrap();
        let ones = ParabolicSpec::partition(&[1, 1]);
        let (ok, g, l, phi) = dim_equality(&a1, &ones, &ones).unwrap();
        assert!(ok);
        assert_eq!((g, l, phi), (1, 1, 2));
    }
}
