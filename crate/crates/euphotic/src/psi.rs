//! Symbolic semisimple toral functionals with prescribed eigenvalue
//! blocks, their centralizer data, and the Swan-conductor arithmetic.
//!
//! A functional is never given numeric eigenvalues: coordinates carry
//! symbols (with signs in types B/C/D, where nonzero eigenvalues come in
//! `+s / -s` pairs, plus an optional zero block). A root annihilates the
//! functional exactly when its symbol-coefficient vector vanishes, so
//! "generic with given multiplicities" is decided structurally and no
//! accidental numeric collision can enlarge the centralizer.

use crate::error::{input_err, Error, Result};
use crate::root_system::{GroupType, RootSubset, RootSystem};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Eigenvalue-block description of a toral functional.
///
/// Serializes as `{"type":"C","rank":3,"blocks":[["+a",[1,2]],["-a",[3]]]}`
/// with 1-based coordinate indices. Type A labels carry no signs; types
/// B/C/D use `+sym` / `-sym` and the reserved label `"0"`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BlockFunctional {
    #[serde(rename = "type")]
    pub group: GroupType,
    pub rank: usize,
    pub blocks: Vec<(String, Vec<usize>)>,
}

/// Per-coordinate symbolic value: `sign * symbol`, or zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct CoordValue {
    symbol: usize,
    sign: i64,
}

#[derive(Debug, Clone)]
pub struct CentralizerReport {
    pub phi_psi: RootSubset,
    pub dim_gpsi: usize,
    /// `#R' = #Phi - #Phi_psi`, the roots not annihilating the functional.
    pub swan_numerator: usize,
}

impl BlockFunctional {
    /// Number of classical coordinates (`rank + 1` in type A).
    pub fn coords(&self) -> usize {
        match self.group {
            GroupType::A => self.rank + 1,
            _ => self.rank,
        }
    }

    fn coordinate_values(&self) -> Result<Vec<CoordValue>> {
        let n = self.coords();
        match self.group {
            GroupType::A | GroupType::B | GroupType::C | GroupType::D => {}
            g => return input_err(format!("block functionals are classical only, got {g}")),
        }
        let mut vals: Vec<Option<CoordValue>> = vec![None; n];
        let mut symbols: Vec<String> = Vec::new();
        let symbol_id = |name: &str, symbols: &mut Vec<String>| -> usize {
            match symbols.iter().position(|s| s == name) {
                Some(i) => i,
                None => {
                    symbols.push(name.to_string());
                    symbols.len() - 1
                }
            }
        };
        for (label, indices) in &self.blocks {
            let (sign, name) = if self.group == GroupType::A {
                if label.starts_with('+') || label.starts_with('-') || label == "0" {
                    return input_err(format!(
                        "type A block labels are plain symbols, got {label:?}"
                    ));
                }
                (1i64, label.as_str())
            } else if label == "0" {
                (0i64, "0")
            } else if let Some(name) = label.strip_prefix('+') {
                (1, name)
            } else if let Some(name) = label.strip_prefix('-') {
                (-1, name)
            } else {
                return input_err(format!(
                    "block label {label:?} must be \"0\" or start with + or -"
                ));
            };
            let sym = if sign == 0 { usize::MAX } else { symbol_id(name, &mut symbols) };
            if indices.is_empty() {
                return input_err(format!("block {label:?} has no coordinates"));
            }
            for &i in indices {
                if i == 0 || i > n {
                    return input_err(format!("coordinate {i} out of range 1..={n}"));
                }
                if vals[i - 1].is_some() {
                    return input_err(format!("coordinate {i} assigned twice"));
                }
                vals[i - 1] = Some(CoordValue { symbol: sym, sign });
            }
        }
        // type A: symbols must be pairwise distinct block labels
        if self.group == GroupType::A {
            let mut seen = BTreeSet::new();
            for (label, _) in &self.blocks {
                if !seen.insert(label) {
                    return input_err(format!("duplicate type A block label {label:?}"));
                }
            }
        }
        vals.into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or(Error::Input(format!("coordinate {} not covered", i + 1))))
            .collect()
    }

    /// Partition of the eigenvalue multiplicities, used by the spherical
    /// classifier in type A.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m: Vec<usize> = self.blocks.iter().map(|(_, ix)| ix.len()).collect();
        m.sort_unstable_by(|a, b| b.cmp(a));
        m
    }
}

/// `e`-coordinate vector of a root (integer entries).
pub fn root_e_vector(rs: &RootSystem, r: usize) -> Result<Vec<i64>> {
    let n = rs.rank;
    let c = &rs.roots[r];
    let dim = if rs.group == GroupType::A { n + 1 } else { n };
    let mut e = vec![0i64; dim];
    let add_simple = |i: usize, mult: i64, e: &mut Vec<i64>| match rs.group {
        GroupType::A | GroupType::B | GroupType::D if i + 1 < n || rs.group == GroupType::A => {
            e[i] += mult;
            e[i + 1] -= mult;
        }
        GroupType::B => e[n - 1] += mult,
        GroupType::C => {
            if i + 1 < n {
                e[i] += mult;
                e[i + 1] -= mult;
            } else {
                e[n - 1] += 2 * mult;
            }
        }
        GroupType::D => {
            e[n - 2] += mult;
            e[n - 1] += mult;
        }
        _ => unreachable!(),
    };
    match rs.group {
        GroupType::A | GroupType::B | GroupType::C | GroupType::D => {
            for (i, &ci) in c.iter().enumerate() {
                if ci != 0 {
                    add_simple(i, ci, &mut e);
                }
            }
            Ok(e)
        }
        g => input_err(format!("no e-coordinates for type {g}")),
    }
}

/// Centralizer of a block functional: the subsystem of roots whose
/// symbol-coefficient vector vanishes identically.
pub fn centralizer(rs: &RootSystem, psi: &BlockFunctional) -> Result<CentralizerReport> {
    if psi.group != rs.group || psi.rank != rs.rank {
        return input_err("block functional does not match the root system");
    }
    let vals = psi.coordinate_values()?;
    let nsym = vals.iter().map(|v| if v.sign == 0 { 0 } else { v.symbol + 1 }).max().unwrap_or(0);
    let mut members = BTreeSet::new();
    for r in 0..rs.num_roots() {
        let e = root_e_vector(rs, r)?;
        let mut coeffs = vec![0i64; nsym];
        for (i, &ei) in e.iter().enumerate() {
            if ei != 0 && vals[i].sign != 0 {
                coeffs[vals[i].symbol] += ei * vals[i].sign;
            }
        }
        if coeffs.iter().all(|&c| c == 0) {
            members.insert(r);
        }
    }
    let dim_gpsi = members.len() + rs.rank;
    let swan_numerator = rs.num_roots() - members.len();
    Ok(CentralizerReport {
        phi_psi: RootSubset { members },
        dim_gpsi,
        swan_numerator,
    })
}

/// Sends each symbol to a concrete rational value (distinct primes) and
/// returns the numerically vanishing root set; test harnesses compare
/// this against the structural answer.
pub fn numeric_vanishing_set(
    rs: &RootSystem,
    psi: &BlockFunctional,
    primes: &[i64],
) -> Result<BTreeSet<usize>> {
    let vals = psi.coordinate_values()?;
    let nsym = vals.iter().map(|v| if v.sign == 0 { 0 } else { v.symbol + 1 }).max().unwrap_or(0);
    if primes.len() < nsym {
        return input_err("not enough primes for the symbols");
    }
    let concrete: Vec<i64> = vals
        .iter()
        .map(|v| if v.sign == 0 { 0 } else { v.sign * primes[v.symbol] })
        .collect();
    let mut out = BTreeSet::new();
    for r in 0..rs.num_roots() {
        let e = root_e_vector(rs, r)?;
        let total: i64 = e.iter().zip(&concrete).map(|(a, b)| a * b).sum();
        if total == 0 {
            out.insert(r);
        }
    }
    Ok(out)
}

/// Swan conductor in the hyperspecial case: `#R'` itself.
pub fn swan_direct(rs: &RootSystem, psi: &BlockFunctional) -> Result<usize> {
    Ok(centralizer(rs, psi)?.swan_numerator)
}

/// General prediction from scenario dimension data: `dim L - dim L_psi`.
pub fn swan_predicted(dim_l: i64, dim_lpsi: i64) -> i64 {
    dim_l - dim_lpsi
}

/// Graded form `#R'/m`; `m` must divide `#R'`.
pub fn swan_graded(r_prime: usize, m: i64) -> Result<usize> {
    if m <= 0 {
        return input_err("m must be positive");
    }
    if r_prime as i64 % m != 0 {
        return Err(Error::Consistency(format!(
            "m = {m} does not divide #R' = {r_prime}"
        )));
    }
    Ok(r_prime / m as usize)
}
