//! Polyhedral primitives over exact rationals.
//!
//! Two independent routes to the same question power the emptiness gates:
//!
//! * [`strict_cone_feasible`] finds a linear functional strictly positive on
//!   a finite vector set, by Fourier-Motzkin elimination;
//! * [`hull_contains_origin`] decides whether the origin lies in the convex
//!   hull, by an exact phase-1 simplex.
//!
//! Farkas duality says exactly one of the two succeeds, and the test suite
//! cross-checks them against each other on random inputs.

use crate::error::{input_err, Result};
use crate::rat::{Rat, RatVec};
use num::{BigInt, Integer, One, Signed, Zero};

fn check_dims(dim: usize, vectors: &[RatVec]) -> Result<()> {
    if dim == 0 {
        return input_err("ambient dimension must be at least 1");
    }
    if let Some(v) = vectors.iter().find(|v| v.dim() != dim) {
        return input_err(format!(
            "dimension mismatch: expected {dim}, got vector of dimension {}",
            v.dim()
        ));
    }
    Ok(())
}

/// A linear constraint `coeffs . x >= rhs`, carrying the set of original
/// constraints it was derived from (for Imbert's redundancy bound).
#[derive(Clone, PartialEq, Eq, Hash)]
struct Constraint {
    coeffs: Vec<Rat>,
    rhs: Rat,
    history: u128,
}

impl Constraint {
    /// Scales by a positive rational so all entries are integers with gcd 1.
    fn normalize(mut self) -> Constraint {
        let mut lcm = BigInt::one();
        for c in self.coeffs.iter().chain(std::iter::once(&self.rhs)) {
            lcm = lcm.lcm(c.denom());
        }
        let mut gcd = BigInt::zero();
        let scale = Rat::from(lcm);
        for c in self.coeffs.iter_mut() {
            *c = &*c * &scale;
            gcd = gcd.gcd(c.numer());
        }
        self.rhs = &self.rhs * &scale;
        gcd = gcd.gcd(self.rhs.numer());
        if !gcd.is_zero() && !gcd.is_one() {
            let inv = Rat::from(gcd);
            for c in self.coeffs.iter_mut() {
                *c = &*c / &inv;
            }
            self.rhs = &self.rhs / &inv;
        }
        self
    }
}

/// Searches for `xi` with `<v, xi> > 0` for every `v` in the set.
///
/// Scaling reduces strict feasibility to feasibility of `<v, xi> >= 1`,
/// which Fourier-Motzkin decides exactly; a witness is recovered by back
/// substitution. The empty set is feasible and yields the first unit vector.
pub fn strict_cone_feasible(dim: usize, vectors: &[RatVec]) -> Result<Option<RatVec>> {
    check_dims(dim, vectors)?;
    if vectors.is_empty() {
        let mut xi = RatVec::zero(dim);
        xi.0[0] = Rat::one();
        return Ok(Some(xi));
    }
    if vectors.iter().any(|v| v.is_zero()) {
        return Ok(None);
    }

    if vectors.len() > 128 {
        return crate::error::capability_err("cone feasibility capped at 128 vectors");
    }
    let mut constraints: Vec<Constraint> = vectors
        .iter()
        .enumerate()
        .map(|(i, v)| {
            Constraint {
                coeffs: v.0.clone(),
                rhs: Rat::one(),
                history: 1u128 << i,
            }
            .normalize()
        })
        .collect();
    dedup_keep_strongest(&mut constraints);

    // Eliminate one variable per level, greedily choosing the variable with
    // the fewest positive/negative pairings. Derived constraints whose
    // history exceeds `eliminated + 1` originals are redundant (Imbert's
    // acceleration bound) and are dropped, which keeps the projection
    // exact while containing the growth.
    let mut levels: Vec<(usize, Vec<Constraint>)> = Vec::new();
    let mut remaining: Vec<usize> = (0..dim).collect();
    let mut infeasible = false;
    while !remaining.is_empty() {
        let eliminated = levels.len() as u32 + 1;
        let &var = remaining
            .iter()
            .min_by_key(|&&k| {
                let pos = constraints.iter().filter(|c| c.coeffs[k].is_positive()).count();
                let neg = constraints.iter().filter(|c| c.coeffs[k].is_negative()).count();
                pos * neg + pos + neg
            })
            .unwrap();
        remaining.retain(|&k| k != var);

        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut keep = Vec::new();
        for c in &constraints {
            match c.coeffs[var].cmp(&Rat::zero()) {
                std::cmp::Ordering::Greater => pos.push(c.clone()),
                std::cmp::Ordering::Less => neg.push(c.clone()),
                std::cmp::Ordering::Equal => keep.push(c.clone()),
            }
        }
        for p in &pos {
            for n in &neg {
                let history = p.history | n.history;
                if history.count_ones() > eliminated + 1 {
                    continue;
                }
                // positive multipliers cancelling the eliminated variable
                let mp = -&n.coeffs[var];
                let mn = p.coeffs[var].clone();
                let coeffs: Vec<Rat> = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(a, b)| a * &mp + b * &mn)
                    .collect();
                let rhs = &p.rhs * &mp + &n.rhs * &mn;
                if coeffs.iter().all(|c| c.is_zero()) && rhs.is_positive() {
                    infeasible = true;
                    break;
                }
                keep.push(Constraint { coeffs, rhs, history }.normalize());
            }
            if infeasible {
                break;
            }
        }
        if infeasible {
            break;
        }
        dedup_keep_strongest(&mut keep);
        levels.push((var, constraints));
        constraints = keep;
    }

    // All variables gone: remaining constraints read `0 >= rhs`.
    if infeasible || constraints.iter().any(|c| c.rhs.is_positive()) {
        return Ok(None);
    }

    // Back-substitute a witness level by level.
    let mut xi = RatVec::zero(dim);
    for (var, cs) in levels.iter().rev() {
        let mut lower: Option<Rat> = None;
        let mut upper: Option<Rat> = None;
        for c in cs {
            let a = &c.coeffs[*var];
            if a.is_zero() {
                continue;
            }
            let mut rest = c.rhs.clone();
            for (j, coef) in c.coeffs.iter().enumerate() {
                if j != *var {
                    rest -= coef * &xi.0[j];
                }
            }
            let bound = &rest / a;
            if a.is_positive() {
                lower = Some(match lower {
                    Some(l) if l >= bound => l,
                    _ => bound,
                });
            } else {
                upper = Some(match upper {
                    Some(u) if u <= bound => u,
                    _ => bound,
                });
            }
        }
        xi.0[*var] = match (lower, upper) {
            (Some(l), Some(u)) => {
                debug_assert!(l <= u, "inconsistent bounds after elimination");
                (&l + &u) / crate::rat::rat_int(2)
            }
            (Some(l), None) => l,
            (None, Some(u)) => u,
            (None, None) => Rat::zero(),
        };
    }

    debug_assert!(vectors.iter().all(|v| v.dot(&xi).is_positive()));
    Ok(Some(xi))
}

fn dedup_keep_strongest(constraints: &mut Vec<Constraint>) {
    use std::collections::HashMap;
    let mut best: HashMap<Vec<Rat>, (Rat, u128)> = HashMap::new();
    for c in constraints.drain(..) {
        match best.get_mut(&c.coeffs) {
            Some((rhs, history)) => {
                if c.rhs > *rhs || (c.rhs == *rhs && c.history.count_ones() < history.count_ones()) {
                    *rhs = c.rhs;
                    *history = c.history;
                }
            }
            None => {
                best.insert(c.coeffs, (c.rhs, c.history));
            }
        }
    }
    constraints.extend(
        best.into_iter()
            .map(|(coeffs, (rhs, history))| Constraint { coeffs, rhs, history }),
    );
    constraints.sort_by(|a, b| a.coeffs.cmp(&b.coeffs).then(a.rhs.cmp(&b.rhs)));
}

/// Decides `0 in conv(S)` exactly.
///
/// Runs a phase-1 simplex with Bland's rule on `sum lambda_i v_i = 0`,
/// `sum lambda_i = 1`, `lambda >= 0`. Dual to [`strict_cone_feasible`] by
/// Farkas; the implementations share no code on purpose.
pub fn hull_contains_origin(dim: usize, vectors: &[RatVec]) -> Result<bool> {
    check_dims(dim, vectors)?;
    if vectors.is_empty() {
        return Ok(false);
    }
    let n = vectors.len();
    let m = dim + 1;

    // Tableau columns: n lambda variables, m artificials, then the rhs.
    let cols = n + m + 1;
    let mut t: Vec<Vec<Rat>> = vec![vec![Rat::zero(); cols]; m];
    for (i, row) in t.iter_mut().enumerate().take(dim) {
        for (j, v) in vectors.iter().enumerate() {
            row[j] = v.0[i].clone();
        }
    }
    for j in 0..n {
        t[dim][j] = Rat::one();
    }
    t[dim][cols - 1] = Rat::one();

    // Flip rows to nonnegative rhs, then install artificials.
    for (i, row) in t.iter_mut().enumerate() {
        if row[cols - 1].is_negative() {
            for entry in row.iter_mut() {
                *entry = -&*entry;
            }
        }
        row[n + i] = Rat::one();
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs for minimizing the sum of artificials.
    let mut cost = vec![Rat::zero(); cols];
    for j in 0..cols {
        let mut s = Rat::zero();
        for row in &t {
            s += &row[j];
        }
        cost[j] = if (n..n + m).contains(&j) { s - Rat::one() } else { s };
    }

    loop {
        // Bland: first column with positive reduced cost among lambdas,
        // where entering improves (cost stored as sum over rows minus
        // artificial contribution, so "positive" means improvement).
        let entering = (0..n + m).find(|&j| cost[j].is_positive() && !basis.contains(&j));
        let Some(e) = entering else {
            break;
        };
        let mut leave: Option<(usize, Rat)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[e].is_positive() {
                let ratio = &row[cols - 1] / &row[e];
                match &leave {
                    Some((li, best)) if *best < ratio || (*best == ratio && basis[*li] < basis[i]) => {}
                    _ => leave = Some((i, ratio)),
                }
            }
        }
        let Some((pivot_row, _)) = leave else {
            // Unbounded phase-1 cannot happen; treat as no improvement.
            break;
        };
        pivot(&mut t, &mut cost, pivot_row, e);
        basis[pivot_row] = e;
    }

    // Feasible iff all artificial variables are out of the solution.
    let objective: Rat = basis
        .iter()
        .enumerate()
        .filter(|(_, &b)| b >= n)
        .map(|(i, _)| t[i][cols - 1].clone())
        .fold(Rat::zero(), |acc, v| acc + v);
    Ok(objective.is_zero())
}

fn pivot(t: &mut [Vec<Rat>], cost: &mut [Rat], r: usize, c: usize) {
    let cols = t[0].len();
    let p = t[r][c].clone();
    for j in 0..cols {
        t[r][j] = &t[r][j] / &p;
    }
    for i in 0..t.len() {
        if i != r && !t[i][c].is_zero() {
            let f = t[i][c].clone();
            for j in 0..cols {
                let delta = &t[r][j] * &f;
                t[i][j] = &t[i][j] - &delta;
            }
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for j in 0..cols {
            let delta = &t[r][j] * &f;
            cost[j] = &cost[j] - &delta;
        }
    }
}

/// Rank of the rational span, by Gaussian elimination.
pub fn span_rank(vectors: &[RatVec]) -> Result<usize> {
    if vectors.is_empty() {
        return Ok(0);
    }
    let dim = vectors[0].dim();
    check_dims(dim, vectors)?;
    let mut rows: Vec<Vec<Rat>> = vectors.iter().map(|v| v.0.clone()).collect();
    let mut rank = 0;
    for col in 0..dim {
        let Some(pivot_row) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let p = rows[rank][col].clone();
        for j in col..dim {
            rows[rank][j] = &rows[rank][j] / &p;
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in col..dim {
                    let delta = &rows[rank][j] * &f;
                    rows[i][j] = &rows[i][j] - &delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn vecs(data: &[&[i64]]) -> Vec<RatVec> {
        data.iter().map(|v| RatVec::from_i64(v)).collect()
    }

    #[test]
    fn first_orthant_is_feasible() {
        let s = vecs(&[&[1, 0], &[0, 1]]);
        let xi = strict_cone_feasible(2, &s).unwrap().expect("feasible");
        for v in &s {
            assert!(v.dot(&xi).is_positive());
        }
    }

    #[test]
    fn opposite_vectors_are_infeasible() {
        let s = vecs(&[&[1, 0], &[-1, 0]]);
        assert!(strict_cone_feasible(2, &s).unwrap().is_none());
        assert!(hull_contains_origin(2, &s).unwrap());
    }

    #[test]
    fn zero_sum_triple_is_infeasible() {
        let s = vecs(&[&[1, 0], &[-1, 1], &[0, -1]]);
        assert!(strict_cone_feasible(2, &s).unwrap().is_none());
        assert!(hull_contains_origin(2, &s).unwrap());
    }

    #[test]
    fn empty_set_conventions() {
        let xi = strict_cone_feasible(3, &[]).unwrap().expect("trivially feasible");
        assert_eq!(xi.0[0], rat_int(1));
        assert!(!hull_contains_origin(3, &[]).unwrap());
    }

    #[test]
    fn open_half_plane_does_not_contain_origin() {
        let s = vecs(&[&[2, 1], &[1, 2]]);
        assert!(!hull_contains_origin(2, &s).unwrap());
        assert!(strict_cone_feasible(2, &s).unwrap().is_some());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let s = vec![RatVec::from_i64(&[1, 0]), RatVec::from_i64(&[1, 0, 0])];
        assert!(strict_cone_feasible(2, &s).is_err());
        assert!(hull_contains_origin(2, &s).is_err());
        assert!(span_rank(&s).is_err());
    }

    #[test]
    fn span_rank_basics() {
        assert_eq!(span_rank(&[]).unwrap(), 0);
        assert_eq!(span_rank(&vecs(&[&[1, 0, 0], &[0, 1, 0]])).unwrap(), 2);
        assert_eq!(span_rank(&vecs(&[&[1, 1], &[2, 2]])).unwrap(), 1);
    }

    #[test]
    fn zero_vector_kills_feasibility() {
        let s = vecs(&[&[0, 0], &[1, 1]]);
        assert!(strict_cone_feasible(2, &s).unwrap().is_none());
        assert!(hull_contains_origin(2, &s).unwrap());
    }
}
