//! Deterministic SVG rendering of rank-2 apartments: affine wall
//! families, the shaded fundamental alcove, orbit points, and unit-strip
//! overlays. The only floating point in the crate lives here; verdicts
//! never depend on it.

use crate::error::{capability_err, Result};
use crate::rat::RatVec;
use crate::root_system::RootSystem;
use num::ToPrimitive;
use std::fmt::Write;

const SIZE: f64 = 720.0;
const SCALE: f64 = 90.0;

struct Frame {
    /// Euclidean vectors of the fundamental coweights (dual basis), so a
    /// point with value coordinates `(v1, v2)` sits at `v1 w1 + v2 w2`.
    omega: [(f64, f64); 2],
}

fn frame(rs: &RootSystem) -> Frame {
    // Gram matrix (alpha_i, alpha_j) = cartan[i][j] * norm_j / 2
    let g = |i: usize, j: usize| (rs.cartan[i][j] * rs.simple_norms[j]) as f64 / 2.0;
    let a11 = g(0, 0).sqrt();
    let a12 = g(0, 1) / a11;
    let a22 = (g(1, 1) - a12 * a12).sqrt();
    let alpha = [(a11, 0.0), (a12, a22)];
    // dual basis for the pairing <alpha_i, x> = alpha_i . x * 2/|alpha_i|^2
    // i.e. x = v1 w1 + v2 w2 with <alpha_i, w_j> = delta_ij
    let covec = |i: usize| {
        let s = 2.0 / (rs.simple_norms[i] as f64);
        (alpha[i].0 * s, alpha[i].1 * s)
    };
    let c0 = covec(0);
    let c1 = covec(1);
    let det_c = c0.0 * c1.1 - c0.1 * c1.0;
    let omega = [(c1.1 / det_c, -c1.0 / det_c), (-c0.1 / det_c, c0.0 / det_c)];
    Frame { omega }
}

impl Frame {
    fn point(&self, v: (f64, f64)) -> (f64, f64) {
        (
            v.0 * self.omega[0].0 + v.1 * self.omega[1].0,
            v.0 * self.omega[0].1 + v.1 * self.omega[1].1,
        )
    }

    fn to_screen(&self, p: (f64, f64)) -> (f64, f64) {
        (SIZE / 2.0 + SCALE * p.0, SIZE / 2.0 - SCALE * p.1)
    }
}

fn ratvec_f64(x: &RatVec) -> (f64, f64) {
    (x.0[0].to_f64().unwrap_or(0.0), x.0[1].to_f64().unwrap_or(0.0))
}

/// Renders the apartment of a rank-2 system. `levels` bounds the wall
/// levels `|n| <= levels` drawn per root family; `strips` are unit-strip
/// overlays `0 < <gamma, x> < 1` by root coefficients; `points` are
/// marked orbit points in value coordinates.
pub fn plot_apartment(
    rs: &RootSystem,
    levels: i64,
    strips: &[Vec<i64>],
    points: &[RatVec],
) -> Result<String> {
    if rs.rank != 2 {
        return capability_err("plotting needs a rank-2 root system");
    }
    let fr = frame(rs);
    let mut svg = String::new();
    writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    )
    .unwrap();
    writeln!(svg, "<rect width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>").unwrap();

    // fundamental alcove: triangle 0, w1/n1, w2/n2
    let mk = crate::affine::marks(rs);
    let v1 = fr.to_screen(fr.point((1.0 / mk[1] as f64, 0.0)));
    let v2 = fr.to_screen(fr.point((0.0, 1.0 / mk[2] as f64)));
    let origin = fr.to_screen((0.0, 0.0));
    writeln!(
        svg,
        "<polygon points=\"{:.3},{:.3} {:.3},{:.3} {:.3},{:.3}\" fill=\"#c8c8c8\" fill-opacity=\"0.6\"/>",
        origin.0, origin.1, v1.0, v1.1, v2.0, v2.1
    )
    .unwrap();

    // strips first so walls draw over them
    for coeffs in strips {
        let (sa, sb) = strip_band(&fr, rs, coeffs);
        writeln!(
            svg,
            "<polygon points=\"{}\" fill=\"#ff4040\" fill-opacity=\"0.15\" stroke=\"red\" stroke-width=\"2\"/>",
            [sa.0, sa.1, sb.1, sb.0]
                .iter()
                .map(|p| format!("{:.3},{:.3}", p.0, p.1))
                .collect::<Vec<_>>()
                .join(" ")
        )
        .unwrap();
    }

    // wall families: one per positive root, levels |n| <= levels
    let mut walls = Vec::new();
    for r in 0..rs.num_roots() {
        if !rs.is_positive(r) {
            continue;
        }
        for n in -levels..=levels {
            walls.push((rs.roots[r].clone(), n));
        }
    }
    walls.sort();
    for (coeffs, n) in walls {
        let (p, q) = wall_segment(&fr, &coeffs, n as f64);
        writeln!(
            svg,
            "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"black\" stroke-width=\"1\"/>",
            p.0, p.1, q.0, q.1
        )
        .unwrap();
    }

    for x in points {
        let p = fr.to_screen(fr.point(ratvec_f64(x)));
        writeln!(
            svg,
            "<circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"5\" fill=\"#1060c0\"/>",
            p.0, p.1
        )
        .unwrap();
    }

    writeln!(svg, "</svg>").unwrap();
    Ok(svg)
}

/// Endpoints (on the canvas boundary) of the line `<gamma, x> = c`.
fn wall_segment(fr: &Frame, coeffs: &[i64], c: f64) -> ((f64, f64), (f64, f64)) {
    // the wall in value coordinates: c1 v1 + c2 v2 = c
    let (c1, c2) = (coeffs[0] as f64, coeffs[1] as f64);
    // direction in value space: (-c2, c1); base point
    let base = if c1.abs() > c2.abs() {
        (c / c1, 0.0)
    } else {
        (0.0, c / c2)
    };
    let reach = 2.0 * SIZE / SCALE;
    let dir = (-c2, c1);
    let norm = (dir.0 * dir.0 + dir.1 * dir.1).sqrt();
    let dir = (dir.0 / norm, dir.1 / norm);
    let a = (base.0 - reach * dir.0, base.1 - reach * dir.1);
    let b = (base.0 + reach * dir.0, base.1 + reach * dir.1);
    (fr.to_screen(fr.point(a)), fr.to_screen(fr.point(b)))
}

fn strip_band(
    fr: &Frame,
    _rs: &RootSystem,
    coeffs: &[i64],
) -> (((f64, f64), (f64, f64)), ((f64, f64), (f64, f64))) {
    (wall_segment(fr, coeffs, 0.0), wall_segment(fr, coeffs, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::GroupType;

    #[test]
    fn g2_plot_has_six_wall_families_and_is_deterministic() {
        let rs = RootSystem::build(GroupType::G2, 2).unwrap();
        let strips = vec![vec![1, 0], vec![1, 3]];
        let a = plot_apartment(&rs, 2, &strips, &[]).unwrap();
        let b = plot_apartment(&rs, 2, &strips, &[]).unwrap();
        assert_eq!(a, b);
        // 6 positive roots x 5 levels
        assert_eq!(a.matches("<line ").count(), 30);
        assert_eq!(a.matches("<polygon").count(), 3); // alcove + 2 strips
    }

    #[test]
    fn a2_plot_three_families_level_zero() {
        let rs = RootSystem::build(GroupType::A, 2).unwrap();
        let svg = plot_apartment(&rs, 0, &[], &[]).unwrap();
        assert_eq!(svg.matches("<line ").count(), 3);
    }

    #[test]
    fn rank_must_be_two() {
        let rs = RootSystem::build(GroupType::A, 3).unwrap();
        assert!(plot_apartment(&rs, 1, &[], &[]).is_err());
    }
}
