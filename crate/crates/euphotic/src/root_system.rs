//! Finite reduced irreducible root systems of types A-G with exact
//! reflection actions.
//!
//! Roots are stored as integer coefficient vectors over the simple roots.
//! Points of the (co)weight space are stored in simple-root-value
//! coordinates: `v_i = <alpha_i, x>`. With that choice every pairing the
//! combinatorics needs is an integer combination of the `v_i`, so all
//! evaluations stay rational and exact, uniformly across types.
//!
//! The Cartan matrix is stored as `cartan[i][j] = <alpha_i, alpha_j_check>`
//! and follows the Bourbaki tables, except in G2 where `alpha_1` is the
//! long root (so the highest root is `2 alpha_1 + 3 alpha_2`).

use crate::error::{capability_err, input_err, Error, Result};
use crate::rat::{rat, rat_int, Rat, RatVec};
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

/// Cap on full Weyl-group enumeration; E7/E8 exceed it and are refused.
pub const WEYL_CAP: u64 = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupType {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl GroupType {
    pub fn parse(s: &str) -> Result<GroupType> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(GroupType::A),
            "B" => Ok(GroupType::B),
            "C" => Ok(GroupType::C),
            "D" => Ok(GroupType::D),
            "E6" => Ok(GroupType::E6),
            "E7" => Ok(GroupType::E7),
            "E8" => Ok(GroupType::E8),
            "F4" => Ok(GroupType::F4),
            "G2" => Ok(GroupType::G2),
            other => input_err(format!("unknown group type {other:?}")),
        }
    }

    /// Default rank for the exceptional types, where it is determined.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            GroupType::E6 => Some(6),
            GroupType::E7 => Some(7),
            GroupType::E8 => Some(8),
            GroupType::F4 => Some(4),
            GroupType::G2 => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupType::A => "A",
            GroupType::B => "B",
            GroupType::C => "C",
            GroupType::D => "D",
            GroupType::E6 => "E6",
            GroupType::E7 => "E7",
            GroupType::E8 => "E8",
            GroupType::F4 => "F4",
            GroupType::G2 => "G2",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Length {
    Long,
    Short,
}

/// A subset of the roots of a parent system, by root index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSubset {
    pub members: BTreeSet<usize>,
}

/// Levi datum: a closed subsystem plus the reductive-group dimension
/// convention `dim = #roots + ambient rank`.
#[derive(Debug, Clone)]
pub struct LeviData {
    pub subset: RootSubset,
    pub dim: usize,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub group: GroupType,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_i, alpha_j_check>`.
    pub cartan: Vec<Vec<i64>>,
    /// All roots, as coefficient vectors over the simple roots, in
    /// lexicographic order.
    pub roots: Vec<Vec<i64>>,
    /// Index of `-roots[r]`.
    pub negation: Vec<usize>,
    pub lengths: Vec<Length>,
    /// Index of the highest root.
    pub highest: usize,
    /// `simple[i]` is the root index of `alpha_{i+1}`.
    pub simple: Vec<usize>,
    /// Squared lengths of the simple roots, short normalized to 2.
    pub simple_norms: Vec<i64>,
    index: HashMap<Vec<i64>, usize>,
}

fn cartan_matrix(group: GroupType, rank: usize) -> Result<Vec<Vec<i64>>> {
    let n = rank;
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |a: usize, b: usize, down: i64, up: i64, m: &mut Vec<Vec<i64>>| {
        m[a][b] = down;
        m[b][a] = up;
    };
    match group {
        GroupType::A => {
            if n < 1 {
                return input_err("type A needs rank >= 1");
            }
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1, -1, -1, &mut m);
            }
        }
        GroupType::B => {
            if n < 2 {
                return input_err("type B needs rank >= 2");
            }
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1, &mut m);
            }
            // alpha_{n-1} long, alpha_n short
            link(n - 2, n - 1, -2, -1, &mut m);
        }
        GroupType::C => {
            if n < 2 {
                return input_err("type C needs rank >= 2");
            }
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1, &mut m);
            }
            // alpha_{n-1} short, alpha_n long
            link(n - 2, n - 1, -1, -2, &mut m);
        }
        GroupType::D => {
            if n < 3 {
                return input_err("type D needs rank >= 3");
            }
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1, &mut m);
            }
            m[n - 2][n - 1] = 0;
            m[n - 1][n - 2] = 0;
            link(n - 3, n - 1, -1, -1, &mut m);
        }
        GroupType::E6 | GroupType::E7 | GroupType::E8 => {
            let need = group.fixed_rank().unwrap();
            if n != need {
                return input_err(format!("type {group} has rank {need}"));
            }
            // Bourbaki: chain 1-3-4-5-..., with 2 attached to 4.
            link(0, 2, -1, -1, &mut m);
            for i in 2..n - 1 {
                link(i, i + 1, -1, -1, &mut m);
            }
            link(1, 3, -1, -1, &mut m);
        }
        GroupType::F4 => {
            if n != 4 {
                return input_err("type F4 has rank 4");
            }
            link(0, 1, -1, -1, &mut m);
            link(1, 2, -2, -1, &mut m);
            link(2, 3, -1, -1, &mut m);
        }
        GroupType::G2 => {
            if n != 2 {
                return input_err("type G2 has rank 2");
            }
            // alpha_1 long: <alpha_1, alpha_2_check> = -3.
            link(0, 1, -3, -1, &mut m);
        }
    }
    Ok(m)
}

fn expected_root_count(group: GroupType, n: usize) -> usize {
    match group {
        GroupType::A => n * (n + 1),
        GroupType::B | GroupType::C => 2 * n * n,
        GroupType::D => 2 * n * (n - 1),
        GroupType::E6 => 72,
        GroupType::E7 => 126,
        GroupType::E8 => 240,
        GroupType::F4 => 48,
        GroupType::G2 => 12,
    }
}

/// Order of the finite Weyl group.
pub fn weyl_order(group: GroupType, n: usize) -> u64 {
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    match group {
        GroupType::A => fact(n + 1),
        GroupType::B | GroupType::C => (1u64 << n) * fact(n),
        GroupType::D => (1u64 << (n - 1)) * fact(n),
        GroupType::E6 => 51_840,
        GroupType::E7 => 2_903_040,
        GroupType::E8 => 696_729_600,
        GroupType::F4 => 1_152,
        GroupType::G2 => 12,
    }
}

impl RootSystem {
    /// Builds the root system by closing the simple roots under all simple
    /// reflections.
    pub fn build(group: GroupType, rank: usize) -> Result<RootSystem> {
        if rank > 8 {
            return input_err("rank capped at 8");
        }
        let cartan = cartan_matrix(group, rank)?;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..rank {
            let mut e = vec![0i64; rank];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..rank {
                // <beta, alpha_i_check> = sum_j c_j cartan[j][i]
                let pair: i64 = beta.iter().enumerate().map(|(j, c)| c * cartan[j][i]).sum();
                let mut refl = beta.clone();
                refl[i] -= pair;
                if seen.insert(refl.clone()) {
                    queue.push_back(refl);
                }
            }
        }
        let roots: Vec<Vec<i64>> = seen.into_iter().collect();
        if roots.len() != expected_root_count(group, rank) {
            return Err(Error::Invariant(format!(
                "{group}{rank}: built {} roots, expected {}",
                roots.len(),
                expected_root_count(group, rank)
            )));
        }

        let index: HashMap<Vec<i64>, usize> =
            roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let negation: Vec<usize> = roots
            .iter()
            .map(|r| index[&r.iter().map(|c| -c).collect::<Vec<_>>()])
            .collect();

        // Symmetrizer: norm ratios from cartan[i][j] * norm_j = cartan[j][i] * norm_i.
        // Propagate from 6 (divisible by every ratio factor), then rescale so
        // the short roots have squared length 2.
        let mut norm = vec![0i64; rank];
        norm[0] = 6;
        let mut pending: VecDeque<usize> = VecDeque::from([0]);
        while let Some(i) = pending.pop_front() {
            for j in 0..rank {
                if cartan[i][j] != 0 && i != j && norm[j] == 0 {
                    // norm_j / norm_i = cartan[j][i] / cartan[i][j]
                    debug_assert_eq!((norm[i] * cartan[j][i]) % cartan[i][j], 0);
                    norm[j] = norm[i] * cartan[j][i] / cartan[i][j];
                    pending.push_back(j);
                }
            }
        }
        let min_norm = *norm.iter().min().unwrap();
        for n in norm.iter_mut() {
            debug_assert_eq!((*n * 2) % min_norm, 0);
            *n = *n * 2 / min_norm;
        }
        let root_norm = |c: &Vec<i64>| -> i64 {
            // (beta, beta) with (alpha_i, alpha_j) = cartan[i][j] * norm_j / 2
            let mut s = 0i64;
            for (i, ci) in c.iter().enumerate() {
                for (j, cj) in c.iter().enumerate() {
                    s += ci * cj * cartan[i][j] * norm[j];
                }
            }
            s / 2
        };
        let max_root_norm = roots.iter().map(root_norm).max().unwrap();
        let lengths: Vec<Length> = roots
            .iter()
            .map(|r| {
                if root_norm(r) == max_root_norm {
                    Length::Long
                } else {
                    Length::Short
                }
            })
            .collect();

        let highest = roots
            .iter()
            .enumerate()
            .max_by_key(|(_, r)| r.iter().sum::<i64>())
            .map(|(i, _)| i)
            .unwrap();

        let simple: Vec<usize> = (0..rank)
            .map(|i| {
                let mut e = vec![0i64; rank];
                e[i] = 1;
                index[&e]
            })
            .collect();

        let simple_norms = norm;

        Ok(RootSystem {
            group,
            rank,
            cartan,
            roots,
            negation,
            lengths,
            highest,
            simple,
            simple_norms,
            index,
        })
    }

    /// Squared length of a root under the normalization where the short
    /// simple roots have squared length 2.
    pub fn root_norm(&self, r: usize) -> i64 {
        let c = &self.roots[r];
        let mut s = 0i64;
        for (i, ci) in c.iter().enumerate() {
            for (j, cj) in c.iter().enumerate() {
                s += ci * cj * self.cartan[i][j] * self.simple_norms[j];
            }
        }
        s / 2
    }

    /// Value-coordinate vector of the coroot `beta_check`, i.e. the integers
    /// `<alpha_j, beta_check>` for `j = 1..rank`.
    pub fn coroot_values(&self, r: usize) -> Vec<i64> {
        let c = &self.roots[r];
        let nb = self.root_norm(r);
        (0..self.rank)
            .map(|j| {
                let s: i64 = c
                    .iter()
                    .enumerate()
                    .map(|(i, ci)| ci * self.cartan[j][i] * self.simple_norms[i])
                    .sum();
                debug_assert_eq!(s % nb, 0);
                s / nb
            })
            .collect()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn is_positive(&self, r: usize) -> bool {
        self.roots[r].iter().sum::<i64>() > 0
    }

    /// `<beta, x>` for `beta = sum c_i alpha_i` and `x` in value coordinates.
    pub fn pairing(&self, root: usize, x: &RatVec) -> Rat {
        self.pairing_coeffs(&self.roots[root], x)
    }

    pub fn pairing_coeffs(&self, coeffs: &[i64], x: &RatVec) -> Rat {
        assert_eq!(coeffs.len(), x.dim(), "point has wrong dimension");
        coeffs
            .iter()
            .zip(&x.0)
            .map(|(c, v)| v * rat_int(*c))
            .fold(Rat::zero(), |acc, t| acc + t)
    }

    /// `<beta, alpha_i_check>` for a coefficient vector.
    pub fn coroot_pairing(&self, coeffs: &[i64], i: usize) -> i64 {
        coeffs.iter().enumerate().map(|(j, c)| c * self.cartan[j][i]).sum()
    }

    /// Simple reflection on roots, as an index map.
    pub fn reflect_root(&self, i: usize, r: usize) -> usize {
        let mut c = self.roots[r].clone();
        let pair = self.coroot_pairing(&self.roots[r], i);
        c[i] -= pair;
        self.index[&c]
    }

    /// Simple reflection `s_i` on a point in value coordinates:
    /// `v_j -> v_j - v_i * <alpha_j, alpha_i_check>`.
    pub fn reflect_point(&self, i: usize, x: &RatVec) -> RatVec {
        let vi = x.0[i].clone();
        RatVec(
            x.0.iter()
                .enumerate()
                .map(|(j, vj)| vj - &vi * rat_int(self.cartan[j][i]))
                .collect(),
        )
    }

    /// Applies a word of simple reflections as an instruction sequence,
    /// leftmost letter first.
    pub fn apply_word(&self, word: &[usize], x: &RatVec) -> RatVec {
        word.iter().fold(x.clone(), |p, &i| self.reflect_point(i, &p))
    }

    /// Applies a word as a group element `s_{w_1} ... s_{w_k}`: the
    /// rightmost letter acts first on the point.
    pub fn apply_group_word(&self, word: &[usize], x: &RatVec) -> RatVec {
        word.iter().rev().fold(x.clone(), |p, &i| self.reflect_point(i, &p))
    }

    pub fn is_dominant(&self, x: &RatVec) -> bool {
        x.0.iter().all(|v| !v.is_negative())
    }

    /// The unique dominant point of `W.x`, with a word `w` such that
    /// applying `w` to `x` (leftmost letter first) gives the dominant point.
    pub fn dominant_rep(&self, x: &RatVec) -> (RatVec, Vec<usize>) {
        let mut y = x.clone();
        let mut word = Vec::new();
        loop {
            match y.0.iter().position(|v| v.is_negative()) {
                Some(i) => {
                    y = self.reflect_point(i, &y);
                    word.push(i);
                }
                None => return (y, word),
            }
        }
    }

    /// Closed subsystem spanned inside a subset of simple roots, with the
    /// reductive dimension convention (full Cartan counted).
    pub fn levi_from_simples(&self, subset: &BTreeSet<usize>) -> Result<LeviData> {
        if let Some(&i) = subset.iter().find(|&&i| i >= self.rank) {
            return input_err(format!("simple-root index {i} out of range"));
        }
        let members: BTreeSet<usize> = (0..self.num_roots())
            .filter(|&r| {
                self.roots[r]
                    .iter()
                    .enumerate()
                    .all(|(j, c)| *c == 0 || subset.contains(&j))
            })
            .collect();
        Ok(LeviData {
            dim: members.len() + self.rank,
            subset: RootSubset { members },
        })
    }

    /// Levi of a functional: the roots pairing to zero with `x`.
    pub fn levi_from_functional(&self, x: &RatVec) -> LeviData {
        let members: BTreeSet<usize> = (0..self.num_roots())
            .filter(|&r| self.pairing(r, x).is_zero())
            .collect();
        LeviData {
            dim: members.len() + self.rank,
            subset: RootSubset { members },
        }
    }

    /// W-orbit of a point by closure under simple reflections.
    pub fn weyl_orbit(&self, x: &RatVec) -> Vec<RatVec> {
        let mut seen: BTreeSet<RatVec> = BTreeSet::new();
        let mut queue = VecDeque::from([x.clone()]);
        seen.insert(x.clone());
        while let Some(p) = queue.pop_front() {
            for i in 0..self.rank {
                let q = self.reflect_point(i, &p);
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Enumerates the full Weyl group as permutations of the root list,
    /// each with a reduced word. Refuses when the order exceeds [`WEYL_CAP`].
    pub fn weyl_elements(&self) -> Result<Vec<WeylElement>> {
        let order = weyl_order(self.group, self.rank);
        if order > WEYL_CAP {
            return capability_err(format!(
                "|W({}{})| = {order} exceeds the enumeration cap {WEYL_CAP}",
                self.group, self.rank
            ));
        }
        let nroots = self.num_roots();
        let gens: Vec<Vec<u16>> = (0..self.rank)
            .map(|i| (0..nroots).map(|r| self.reflect_root(i, r) as u16).collect())
            .collect();
        let identity: Vec<u16> = (0..nroots as u16).collect();
        let mut seen: HashMap<Vec<u16>, usize> = HashMap::new();
        seen.insert(identity.clone(), 0);
        let mut out = vec![WeylElement {
            perm: identity,
            word: Vec::new(),
        }];
        let mut head = 0;
        while head < out.len() {
            let current = out[head].clone();
            for (i, g) in gens.iter().enumerate() {
                // right multiplication: w' = w s_i, acting roots through s_i first
                let perm: Vec<u16> = (0..nroots).map(|r| current.perm[g[r] as usize]).collect();
                if !seen.contains_key(&perm) {
                    let mut word = current.word.clone();
                    word.push(i);
                    seen.insert(perm.clone(), out.len());
                    out.push(WeylElement { perm, word });
                }
            }
            head += 1;
        }
        debug_assert_eq!(out.len() as u64, order);
        Ok(out)
    }
}

/// Weyl group elements as integer matrices on value coordinates, each
/// with a group word (`w = s_{w_1} ... s_{w_k}`, rightmost acting first).
/// Row-major `rank x rank`. Refuses beyond [`WEYL_CAP`].
pub fn weyl_value_matrices(rs: &RootSystem) -> Result<Vec<(Vec<i64>, Vec<usize>)>> {
    let order = weyl_order(rs.group, rs.rank);
    if order > WEYL_CAP {
        return capability_err(format!(
            "|W({}{})| = {order} exceeds the enumeration cap {WEYL_CAP}",
            rs.group, rs.rank
        ));
    }
    let n = rs.rank;
    // generator matrix: identity except column i gets delta_{ji} - cartan[j][i]
    let gen = |i: usize| -> Vec<i64> {
        let mut m = vec![0i64; n * n];
        for j in 0..n {
            m[j * n + j] = 1;
            m[j * n + i] -= rs.cartan[j][i];
        }
        m
    };
    let gens: Vec<Vec<i64>> = (0..n).map(gen).collect();
    let identity: Vec<i64> = {
        let mut m = vec![0i64; n * n];
        for j in 0..n {
            m[j * n + j] = 1;
        }
        m
    };
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    seen.insert(identity.clone(), ());
    let mut out: Vec<(Vec<i64>, Vec<usize>)> = vec![(identity, Vec::new())];
    let mut head = 0;
    while head < out.len() {
        let (m, word) = out[head].clone();
        for (i, g) in gens.iter().enumerate() {
            // right multiplication m' = m * g
            let mut prod = vec![0i64; n * n];
            for r in 0..n {
                for c in 0..n {
                    let mut s = 0i64;
                    for k in 0..n {
                        s += m[r * n + k] * g[k * n + c];
                    }
                    prod[r * n + c] = s;
                }
            }
            if !seen.contains_key(&prod) {
                seen.insert(prod.clone(), ());
                let mut w = word.clone();
                w.push(i);
                out.push((prod, w));
            }
        }
        head += 1;
    }
    debug_assert_eq!(out.len() as u64, order);
    Ok(out)
}

/// A Weyl group element, stored as the permutation it induces on the root
/// list together with one reduced word (shortlex-minimal for the BFS
/// generator order).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub perm: Vec<u16>,
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn apply_root(&self, r: usize) -> usize {
        self.perm[r] as usize
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Action on a point in value coordinates, through the stored word.
    pub fn apply_point(&self, rs: &RootSystem, x: &RatVec) -> RatVec {
        // word letters multiply on the right, so the rightmost letter acts
        // first on the point
        self.word.iter().rev().fold(x.clone(), |p, &i| rs.reflect_point(i, &p))
    }
}

/// Conversion between value coordinates and the classical `e_i`
/// coordinates of types A-D. For `A_{n-1}` the `e`-vector has `n = rank+1`
/// entries normalized to sum zero.
pub fn value_to_classical(rs: &RootSystem, x: &RatVec) -> Result<Vec<Rat>> {
    let n = rs.rank;
    let v = &x.0;
    match rs.group {
        GroupType::A => {
            // x_i - x_{i+1} = v_i, sum x_i = 0
            let mut xs = vec![Rat::zero(); n + 1];
            for i in (0..n).rev() {
                xs[i] = &xs[i + 1] + &v[i];
            }
            let total: Rat = xs.iter().fold(Rat::zero(), |acc, c| acc + c);
            let shift = total / rat_int((n + 1) as i64);
            Ok(xs.into_iter().map(|c| c - &shift).collect())
        }
        GroupType::B => {
            let mut xs = vec![Rat::zero(); n];
            xs[n - 1] = v[n - 1].clone();
            for i in (0..n - 1).rev() {
                xs[i] = &xs[i + 1] + &v[i];
            }
            Ok(xs)
        }
        GroupType::C => {
            let mut xs = vec![Rat::zero(); n];
            xs[n - 1] = &v[n - 1] / rat_int(2);
            for i in (0..n - 1).rev() {
                xs[i] = &xs[i + 1] + &v[i];
            }
            Ok(xs)
        }
        GroupType::D => {
            let mut xs = vec![Rat::zero(); n];
            // v_{n-1} = x_{n-1} - x_n, v_n = x_{n-1} + x_n
            xs[n - 1] = (&v[n - 1] - &v[n - 2]) / rat_int(2);
            xs[n - 2] = (&v[n - 1] + &v[n - 2]) / rat_int(2);
            for i in (0..n - 2).rev() {
                xs[i] = &xs[i + 1] + &v[i];
            }
            Ok(xs)
        }
        _ => input_err(format!("no classical coordinates for type {}", rs.group)),
    }
}

pub fn classical_to_value(rs: &RootSystem, xs: &[Rat]) -> Result<RatVec> {
    let n = rs.rank;
    let expect = if rs.group == GroupType::A { n + 1 } else { n };
    if xs.len() != expect {
        return input_err(format!(
            "classical coordinates for {}{} need {expect} entries, got {}",
            rs.group,
            n,
            xs.len()
        ));
    }
    let mut v = vec![Rat::zero(); n];
    match rs.group {
        GroupType::A => {
            for i in 0..n {
                v[i] = &xs[i] - &xs[i + 1];
            }
        }
        GroupType::B => {
            for i in 0..n - 1 {
                v[i] = &xs[i] - &xs[i + 1];
            }
            v[n - 1] = xs[n - 1].clone();
        }
        GroupType::C => {
            for i in 0..n - 1 {
                v[i] = &xs[i] - &xs[i + 1];
            }
            v[n - 1] = &xs[n - 1] * rat(2, 1);
        }
        GroupType::D => {
            for i in 0..n - 1 {
                v[i] = &xs[i] - &xs[i + 1];
            }
            v[n - 1] = &xs[n - 2] + &xs[n - 1];
        }
        _ => return input_err(format!("no classical coordinates for type {}", rs.group)),
    }
    Ok(RatVec(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn root_counts_match_classical_values() {
        assert_eq!(RootSystem::build(GroupType::A, 3).unwrap().num_roots(), 12);
        assert_eq!(RootSystem::build(GroupType::G2, 2).unwrap().num_roots(), 12);
        assert_eq!(RootSystem::build(GroupType::E8, 8).unwrap().num_roots(), 240);
        assert_eq!(RootSystem::build(GroupType::F4, 4).unwrap().num_roots(), 48);
        assert_eq!(RootSystem::build(GroupType::B, 3).unwrap().num_roots(), 18);
        assert_eq!(RootSystem::build(GroupType::D, 4).unwrap().num_roots(), 24);
    }

    #[test]
    fn invalid_types_are_rejected() {
        assert!(RootSystem::build(GroupType::G2, 3).is_err());
        assert!(RootSystem::build(GroupType::F4, 5).is_err());
        assert!(RootSystem::build(GroupType::D, 2).is_err());
        assert!(RootSystem::build(GroupType::A, 9).is_err());
    }

    #[test]
    fn g2_highest_root_is_2_3() {
        let rs = RootSystem::build(GroupType::G2, 2).unwrap();
        assert_eq!(rs.roots[rs.highest], vec![2, 3]);
        // beta = alpha_1 + 3 alpha_2 is a root
        assert!(rs.root_index(&[1, 3]).is_some());
        assert_eq!(rs.lengths[rs.simple[0]], Length::Long);
        assert_eq!(rs.lengths[rs.simple[1]], Length::Short);
    }

    #[test]
    fn pairing_is_bilinear() {
        let rs = RootSystem::build(GroupType::G2, 2).unwrap();
        let x = RatVec(vec![rat(1, 5), rat(1, 5)]);
        let r = rs.root_index(&[1, 1]).unwrap();
        assert_eq!(rs.pairing(r, &x), rat(2, 5));
        assert_eq!(rs.pairing(rs.highest, &x), rat(1, 1));
        let zero = RatVec::zero(2);
        assert!(rs.pairing(rs.highest, &zero).is_zero());
    }

    #[test]
    fn reflection_is_involution_and_compatible_with_roots() {
        let rs = RootSystem::build(GroupType::G2, 2).unwrap();
        let x = RatVec(vec![rat(1, 5), rat(1, 5)]);
        let s1x = rs.reflect_point(0, &x);
        assert_eq!(s1x, RatVec(vec![rat(-1, 5), rat(2, 5)]));
        assert_eq!(rs.reflect_point(0, &s1x), x);
        // <beta, s_i x> = <s_i beta, x> for every root
        for r in 0..rs.num_roots() {
            for i in 0..rs.rank {
                let lhs = rs.pairing(r, &rs.reflect_point(i, &x));
                let rhs = rs.pairing(rs.reflect_root(i, r), &x);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn reflections_permute_roots_and_negation_closes() {
        for (g, n) in [
            (GroupType::A, 3),
            (GroupType::B, 3),
            (GroupType::C, 3),
            (GroupType::D, 4),
            (GroupType::G2, 2),
            (GroupType::F4, 4),
        ] {
            let rs = RootSystem::build(g, n).unwrap();
            let pos = (0..rs.num_roots()).filter(|&r| rs.is_positive(r)).count();
            assert_eq!(pos * 2, rs.num_roots());
            for r in 0..rs.num_roots() {
                assert_eq!(rs.negation[rs.negation[r]], r);
            }
        }
    }

    #[test]
    fn dominant_rep_matches_brute_force_orbit_minimum() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (g, n) in [(GroupType::A, 3), (GroupType::B, 3), (GroupType::C, 3), (GroupType::G2, 2)] {
            let rs = RootSystem::build(g, n).unwrap();
            for _ in 0..50 {
                let x = RatVec(
                    (0..n)
                        .map(|_| rat(rng.random_range(-8i64..=8), rng.random_range(1i64..=4)))
                        .collect(),
                );
                let (dom, word) = rs.dominant_rep(&x);
                assert!(rs.is_dominant(&dom));
                assert_eq!(rs.apply_word(&word, &x), dom);
                let orbit = rs.weyl_orbit(&x);
                let doms: Vec<_> = orbit.iter().filter(|p| rs.is_dominant(p)).collect();
                assert_eq!(doms.len(), 1);
                assert_eq!(*doms[0], dom);
                // W-invariance of the representative
                for i in 0..n {
                    let (dom2, _) = rs.dominant_rep(&rs.reflect_point(i, &x));
                    assert_eq!(dom2, dom);
                }
            }
        }
    }

    #[test]
    fn levi_dims_for_type_a_partitions() {
        let rs = RootSystem::build(GroupType::A, 5).unwrap();
        // lambda = (2,2,2): Levi simple roots {1,3,5} (1-based)
        let l = rs.levi_from_simples(&BTreeSet::from([0, 2, 4])).unwrap();
        assert_eq!(l.dim, 11);
        // lambda = (4,2): Levi simple roots 1..3 and 5
        let l = rs.levi_from_simples(&BTreeSet::from([0, 1, 2, 4])).unwrap();
        assert_eq!(l.dim, 19);
        let torus = rs.levi_from_simples(&BTreeSet::new()).unwrap();
        assert_eq!(torus.dim, 5);
    }

    #[test]
    fn levi_nilradical_dimension_identity() {
        for (g, n) in [(GroupType::B, 3), (GroupType::D, 4), (GroupType::F4, 4)] {
            let rs = RootSystem::build(g, n).unwrap();
            let subset = BTreeSet::from([0, 1]);
            let l = rs.levi_from_simples(&subset).unwrap();
            let phi = rs.num_roots();
            assert_eq!(l.dim + (phi - l.subset.members.len()), phi + rs.rank);
        }
    }

    #[test]
    fn classical_coordinate_round_trip() {
        for (g, n) in [(GroupType::A, 3), (GroupType::B, 3), (GroupType::C, 3), (GroupType::D, 4)] {
            let rs = RootSystem::build(g, n).unwrap();
            let x = RatVec((0..n).map(|i| rat(i as i64 + 1, 3)).collect());
            let e = value_to_classical(&rs, &x).unwrap();
            let back = classical_to_value(&rs, &e).unwrap();
            assert_eq!(back, x);
        }
        // B_n Siegel point in e-coordinates
        let rs = RootSystem::build(GroupType::B, 3).unwrap();
        let v = classical_to_value(&rs, &[rat(1, 2), rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(v, RatVec(vec![rat(0, 1), rat(0, 1), rat(1, 2)]));
    }

    #[test]
    fn weyl_enumeration_orders() {
        let rs = RootSystem::build(GroupType::G2, 2).unwrap();
        assert_eq!(rs.weyl_elements().unwrap().len(), 12);
        let rs = RootSystem::build(GroupType::B, 3).unwrap();
        let w = rs.weyl_elements().unwrap();
        assert_eq!(w.len(), 48);
        // longest element exists and sends the dominant chamber to the opposite
        let longest = w.iter().max_by_key(|e| e.len()).unwrap();
        let x = RatVec(vec![rat(1, 1), rat(1, 2), rat(1, 3)]);
        let y = longest.apply_point(&rs, &x);
        assert!(y.0.iter().all(|c| !c.is_positive()));
        let rs = RootSystem::build(GroupType::E7, 7).unwrap();
        assert!(rs.weyl_elements().is_err());
    }
}
