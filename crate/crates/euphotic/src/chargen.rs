//! Genericity conditions for character tuples, with characters of the
//! multiplicative group of `F_q` modeled as exponents modulo `q - 1`.
//!
//! The condition is nontriviality on the connected center of every
//! maximal Levi; unwinding those centers gives, in type A, the
//! gcd-weighted subset conditions, and in types B/C/D the disjoint
//! subset-product conditions.

use crate::error::{capability_err, input_err, Result};
use serde::{Deserialize, Serialize};

pub const MAX_N: usize = 12;
pub const CENSUS_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CharacterTuple {
    /// Prime power `>= 2`; exponents live in `Z/(q-1)`.
    pub q: u64,
    pub exps: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CharKind {
    A,
    BCD,
}

impl CharacterTuple {
    fn reduced(&self) -> Vec<u64> {
        let m = self.q - 1;
        self.exps.iter().map(|&e| e.rem_euclid(m as i64) as u64).collect()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Type A condition: for every proper nonempty `I` with complement `J`,
/// `(b/g) * sum_I != (a/g) * sum_J mod (q-1)` where `a = |I|`, `b = |J|`,
/// `g = gcd(a, b)`. Returns the violating subsets `I` (1-based).
pub fn is_generic_a(n: usize, chi: &CharacterTuple) -> Result<(bool, Vec<Vec<usize>>)> {
    validate(n, chi)?;
    if n < 2 {
        return input_err("type A genericity needs n >= 2");
    }
    let m = chi.q - 1;
    let c = chi.reduced();
    let total: u64 = c.iter().fold(0, |acc, &x| (acc + x) % m);
    let mut violations = Vec::new();
    for mask in 1u32..(1 << n) - 1 {
        let a = mask.count_ones() as u64;
        let b = n as u64 - a;
        let g = gcd(a, b);
        let sum_i: u64 = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| c[i]).fold(0, |s, x| (s + x) % m);
        let sum_j = (total + m - sum_i % m) % m;
        let lhs = ((b / g) as u128 * sum_i as u128 % m as u128) as u64;
        let rhs = ((a / g) as u128 * sum_j as u128 % m as u128) as u64;
        if lhs == rhs {
            violations.push((0..n).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect());
        }
    }
    Ok((violations.is_empty(), violations))
}

/// Types B/C/D condition: for all disjoint `I`, `J` with `I u J`
/// nonempty, `sum_I != sum_J mod (q-1)`. Violating pairs are returned
/// with `I <= J` canonically.
#[allow(clippy::type_complexity)]
pub fn is_generic_bcd(n: usize, chi: &CharacterTuple) -> Result<(bool, Vec<(Vec<usize>, Vec<usize>)>)> {
    validate(n, chi)?;
    let m = chi.q - 1;
    let c = chi.reduced();
    let mut violations = Vec::new();
    // each coordinate: in I (1), in J (2), or absent (0)
    let mut assignment = vec![0u8; n];
    loop {
        let i_set: Vec<usize> = (0..n).filter(|&k| assignment[k] == 1).collect();
        let j_set: Vec<usize> = (0..n).filter(|&k| assignment[k] == 2).collect();
        if !(i_set.is_empty() && j_set.is_empty()) && i_set <= j_set {
            let sum = |s: &[usize]| s.iter().map(|&k| c[k]).fold(0u64, |acc, x| (acc + x) % m);
            if sum(&i_set) == sum(&j_set) {
                violations.push((
                    i_set.iter().map(|k| k + 1).collect(),
                    j_set.iter().map(|k| k + 1).collect(),
                ));
            }
        }
        // next ternary assignment
        let mut k = 0;
        loop {
            if k == n {
                violations.sort();
                return Ok((violations.is_empty(), violations));
            }
            assignment[k] += 1;
            if assignment[k] == 3 {
                assignment[k] = 0;
                k += 1;
            } else {
                break;
            }
        }
    }
}

fn validate(n: usize, chi: &CharacterTuple) -> Result<()> {
    if chi.q < 2 {
        return input_err("q must be at least 2");
    }
    if chi.exps.len() != n {
        return input_err(format!("expected {n} exponents, got {}", chi.exps.len()));
    }
    if n > MAX_N {
        return capability_err(format!("n capped at {MAX_N}"));
    }
    Ok(())
}

/// Brute-force census of generic tuples over all of `(Z/(q-1))^n`.
pub fn count_generic(kind: CharKind, n: usize, q: u64) -> Result<u64> {
    if q < 2 {
        return input_err("q must be at least 2");
    }
    if n > MAX_N {
        return capability_err(format!("n capped at {MAX_N}"));
    }
    let m = q - 1;
    let total = m.checked_pow(n as u32).filter(|&t| t <= CENSUS_CAP);
    let Some(total) = total else {
        return capability_err(format!("census of (q-1)^n = {m}^{n} tuples exceeds the cap"));
    };
    use rayon::prelude::*;
    let count = (0..total)
        .into_par_iter()
        .filter(|&t| {
            let mut exps = Vec::with_capacity(n);
            let mut v = t;
            for _ in 0..n {
                exps.push((v % m) as i64);
                v /= m;
            }
            let chi = CharacterTuple { q, exps };
            match kind {
                CharKind::A => is_generic_a(n, &chi).map(|r| r.0).unwrap_or(false),
                CharKind::BCD => is_generic_bcd(n, &chi).map(|r| r.0).unwrap_or(false),
            }
        })
        .count() as u64;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(q: u64, exps: &[i64]) -> CharacterTuple {
        CharacterTuple { q, exps: exps.to_vec() }
    }

    #[test]
    fn trivial_character_is_never_generic() {
        let (ok, vio) = is_generic_a(3, &chi(7, &[0, 0, 0])).unwrap();
        assert!(!ok);
        assert!(vio.contains(&vec![1]));
        let (ok, vio) = is_generic_bcd(2, &chi(7, &[0, 0])).unwrap();
        assert!(!ok);
        assert!(vio.iter().any(|(i, j)| i.is_empty() && j == &vec![1]));
    }

    #[test]
    fn a_rank1_condition_is_inequality() {
        // n = 2: the single constraint is c_1 != c_2
        let (ok, _) = is_generic_a(2, &chi(5, &[1, 2])).unwrap();
        assert!(ok);
        let (ok, _) = is_generic_a(2, &chi(5, &[3, 3])).unwrap();
        assert!(!ok);
    }

    #[test]
    fn a_constructed_violation_is_reported() {
        // sum over {1,2} equals sum over {3,4}
        let (ok, vio) = is_generic_a(4, &chi(11, &[1, 2, 3, 0])).unwrap();
        assert!(!ok);
        assert!(vio.contains(&vec![1, 2]));
    }

    #[test]
    fn bcd_small_counts() {
        assert_eq!(count_generic(CharKind::BCD, 1, 5).unwrap(), 3);
        assert_eq!(count_generic(CharKind::BCD, 2, 5).unwrap(), 4);
        // the four n = 2, q = 5 generic tuples
        for exps in [[1, 2], [2, 1], [2, 3], [3, 2]] {
            assert!(is_generic_bcd(2, &chi(5, &exps)).unwrap().0);
        }
        // q = 2: only the trivial character, which fails
        assert_eq!(count_generic(CharKind::BCD, 2, 2).unwrap(), 0);
        assert_eq!(count_generic(CharKind::A, 3, 2).unwrap(), 0);
    }

    #[test]
    fn verdicts_are_symmetric_and_weyl_invariant() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..60 {
            let q = [5u64, 7, 8, 9][rng.random_range(0..4)];
            let n = rng.random_range(1..=3);
            let exps: Vec<i64> = (0..n).map(|_| rng.random_range(0..(q as i64 - 1))).collect();
            let t = chi(q, &exps);
            let (ok, _) = is_generic_bcd(n, &t).unwrap();
            // inverse character
            let inv = chi(q, &exps.iter().map(|e| -e).collect::<Vec<_>>());
            assert_eq!(is_generic_bcd(n, &inv).unwrap().0, ok);
            // coordinate permutation (reverse) and a sign flip
            let mut flipped: Vec<i64> = exps.iter().rev().copied().collect();
            if n > 0 {
                flipped[0] = -flipped[0];
            }
            assert_eq!(is_generic_bcd(n, &chi(q, &flipped)).unwrap().0, ok);
        }
    }

    #[test]
    fn type_a_shift_invariance() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for _ in 0..60 {
            let q = [5u64, 7, 9][rng.random_range(0..3)];
            let n = rng.random_range(2..=3);
            let exps: Vec<i64> = (0..n).map(|_| rng.random_range(0..(q as i64 - 1))).collect();
            let shift = rng.random_range(0..(q as i64 - 1));
            let shifted: Vec<i64> = exps.iter().map(|e| e + shift).collect();
            assert_eq!(
                is_generic_a(n, &chi(q, &exps)).unwrap().0,
                is_generic_a(n, &chi(q, &shifted)).unwrap().0
            );
        }
    }

    #[test]
    fn census_caps() {
        assert!(count_generic(CharKind::BCD, 12, 64).is_err());
        assert!(is_generic_bcd(13, &chi(5, &[0; 13])).is_err());
    }
}
