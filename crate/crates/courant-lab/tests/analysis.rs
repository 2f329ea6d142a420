use std::f64::consts::PI;

use courant_lab::eigen::{eval_c, eval_s};
use courant_lab::nodal::analysis::{self, edge_combination, Basis, FixedPointLabel, Locus, PolyKind};
use courant_lab::nodal::{
    bifurcation_angle, edge_critical_zeros, edge_restriction_roots, median_critical_zeros, median_fixed_points,
    polynomial_roots_unit_interval, wronskian, wronskian_factorized,
};
use courant_lab::Mode;

const P13: Mode = Mode::new(1, 3);
const P23: Mode = Mode::new(2, 3);

fn assert_close(got: f64, want: f64, tol: f64) {
    assert!((got - want).abs() <= tol, "got {got}, want {want} (tol {tol})");
}

fn assert_roots(mut got: Vec<f64>, mut want: Vec<f64>, tol: f64) {
    got.sort_by(f64::total_cmp);
    want.sort_by(f64::total_cmp);
    assert_eq!(got.len(), want.len(), "got {got:?}, want {want:?}");
    for (g, w) in got.iter().zip(&want) {
        assert_close(*g, *w, tol);
    }
}

#[test]
fn pc_root_and_its_edge_parameter() {
    let roots = polynomial_roots_unit_interval(P13, PolyKind::PC).unwrap();
    assert_roots(roots.clone(), vec![(2f64.sqrt() - 1.0) / 2.0], 1e-12);
    assert_close(roots[0].acos() / PI, 0.433595245, 1e-8);
}

#[test]
fn ps_roots_match_published_values() {
    assert_roots(polynomial_roots_unit_interval(P13, PolyKind::PS).unwrap(), vec![-0.9094691258, 0.6638481772], 1e-9);
    assert_roots(
        polynomial_roots_unit_interval(P23, PolyKind::PS).unwrap(),
        vec![0.7261887036, 0.5658979255, 0.06784981490],
        1e-9,
    );
    assert_roots(polynomial_roots_unit_interval(P23, PolyKind::PC).unwrap(), vec![-0.9311441818], 1e-9);
}

#[test]
fn pw_of_23_has_a_triple_root_at_one() {
    // -(x-1)^3 (x + xi)(x + eta); only -xi and 1 lie in [-1, 1].
    let p = analysis::polynomial(P23, PolyKind::PW).unwrap();
    let d1 = p.derivative();
    let d2 = d1.derivative();
    assert_eq!(p.eval(1.0), 0.0);
    assert_close(d1.eval(1.0), 0.0, 1e-12);
    assert_close(d2.eval(1.0), 0.0, 1e-12);
    assert!(d2.derivative().eval(1.0).abs() > 1.0);
}

#[test]
fn median_zeros_have_closed_forms() {
    let c13 = median_critical_zeros(P13, Basis::C).unwrap();
    let interior: Vec<f64> = c13.iter().map(|z| z.parameter_u).filter(|&u| u > 1e-9 && u < 1.0 - 1e-9).collect();
    assert_roots(interior, vec![1.0 - (0.75f64).acos() / PI], 1e-10);
    assert_close(1.0 - (0.75f64).acos() / PI, 0.7699465439, 1e-10);

    let c23 = median_critical_zeros(P23, Basis::C).unwrap();
    let interior: Vec<f64> = c23.iter().map(|z| z.parameter_u).filter(|&u| u > 1e-9 && u < 1.0 - 1e-9).collect();
    let closed = 1.0 - (1.0 - 1.0 / 2f64.sqrt()).acos() / PI;
    assert_roots(interior, vec![closed], 1e-10);
    assert_close(closed, 0.5946180472, 1e-9);
}

#[test]
fn median_zero_sets_include_endpoints_for_c_only_o_for_s() {
    for pair in [P13, P23] {
        let c: Vec<f64> = median_critical_zeros(pair, Basis::C).unwrap().iter().map(|z| z.parameter_u).collect();
        assert_eq!(c.len(), 3, "{c:?}");
        assert_close(c[0], 0.0, 1e-12);
        assert_close(c[2], 1.0, 1e-12);
        let s: Vec<f64> = median_critical_zeros(pair, Basis::S).unwrap().iter().map(|z| z.parameter_u).collect();
        assert_eq!(s, vec![0.0]);
    }
}

#[test]
fn median_zeros_are_zeros_of_function_and_gradient() {
    for pair in [P13, P23] {
        for z in median_critical_zeros(pair, Basis::C).unwrap() {
            let p = z.location;
            let h = 1e-7;
            let gs = (eval_c(pair.m, pair.n, p.s + h, p.t) - eval_c(pair.m, pair.n, p.s - h, p.t)) / (2.0 * h);
            let gt = (eval_c(pair.m, pair.n, p.s, p.t + h) - eval_c(pair.m, pair.n, p.s, p.t - h)) / (2.0 * h);
            assert!(eval_c(pair.m, pair.n, p.s, p.t).abs() < 1e-10);
            assert!(gs.abs() + gt.abs() < 1e-5, "{z:?}");
            assert!(z.order >= 2);
        }
    }
}

#[test]
fn fixed_points_match_coordinates() {
    let f13 = median_fixed_points(P13).unwrap();
    let want13 = [
        (FixedPointLabel::Centroid, 1.0 / 3.0, 1.0 / 3.0),
        (FixedPointLabel::O, 0.25, 0.25),
        (FixedPointLabel::A, 5.0 / 12.0, 1.0 / 3.0),
        (FixedPointLabel::B, 1.0 / 3.0, 5.0 / 12.0),
    ];
    let f23 = median_fixed_points(P23).unwrap();
    let want23 = [
        (FixedPointLabel::Centroid, 1.0 / 3.0, 1.0 / 3.0),
        (FixedPointLabel::O1, 0.2, 0.2),
        (FixedPointLabel::O2, 0.4, 0.4),
        (FixedPointLabel::A1, 7.0 / 15.0, 1.0 / 3.0),
        (FixedPointLabel::A2, 4.0 / 15.0, 1.0 / 3.0),
        (FixedPointLabel::B1, 1.0 / 3.0, 7.0 / 15.0),
        (FixedPointLabel::B2, 1.0 / 3.0, 4.0 / 15.0),
    ];
    for (got, want, pair) in [(&f13, &want13[..], P13), (&f23, &want23[..], P23)] {
        assert_eq!(got.len(), want.len());
        for &(label, s, t) in want {
            let p = got.iter().find(|f| f.label == label).unwrap_or_else(|| panic!("missing {label}"));
            assert_close(p.location.s, s, 1e-12);
            assert_close(p.location.t, t, 1e-12);
            let (m, n) = (pair.m, pair.n);
            assert!(eval_c(m, n, s, t).abs() + eval_s(m, n, s, t).abs() < 1e-12);
        }
    }
}

#[test]
fn restriction_roots_on_barrier_lines() {
    let r = edge_restriction_roots(P13, 2.0 / 3.0, 0.0).unwrap();
    assert_roots(r, vec![7.0 / 30.0, 1.0 / 3.0, 13.0 / 30.0], 1e-12);

    let r = edge_restriction_roots(P23, 0.4, PI / 2.0).unwrap();
    assert_roots(r, vec![0.2], 1e-9);

    let r = edge_restriction_roots(P23, 0.6, 0.0).unwrap();
    assert_roots(r, vec![4.0 / 15.0, 0.3, 1.0 / 3.0], 1e-12);

    assert!(edge_restriction_roots(P13, 1.0, 0.0).is_err());
}

#[test]
fn edge_zeros_of_23_at_pi_over_6() {
    let zs = edge_critical_zeros(P23, PI / 6.0).unwrap();
    let oa: Vec<f64> = zs.iter().filter(|z| z.edge_or_median == Locus::OA).map(|z| z.parameter_u).collect();
    let want: Vec<f64> = [0.7261887036f64, 0.5658979255, 0.06784981490].iter().map(|e| 2.0 / 3.0 - e.acos() / PI).collect();
    assert_roots(oa, want, 1e-9);
    assert_close(0.7261887036f64.acos() / PI, 0.2412898667, 1e-9);
}

#[test]
fn edge_zeros_of_23_below_bifurcation() {
    let zs = edge_critical_zeros(P23, 0.1).unwrap();
    let count = |l: Locus| zs.iter().filter(|z| z.edge_or_median == l).count();
    assert_eq!((count(Locus::OA), count(Locus::BA), count(Locus::OB)), (1, 3, 0));
}

#[test]
fn edge_zeros_of_13_tend_to_u1c() {
    let zs = edge_critical_zeros(P13, 1e-10).unwrap();
    let target = ((2f64.sqrt() - 1.0) / 2.0).acos() / PI;
    assert!(zs.iter().any(|z| (z.parameter_u - target).abs() < 1e-8), "{zs:?}");
}

#[test]
fn edge_zeros_move_monotonically() {
    for pair in [P13, P23] {
        let thetas: Vec<f64> = (1..=40).map(|k| PI / 6.0 * k as f64 / 40.0).collect();
        for locus in [Locus::OA, Locus::OB, Locus::BA] {
            let tracks: Vec<Vec<f64>> = thetas
                .iter()
                .map(|&th| {
                    edge_critical_zeros(pair, th)
                        .unwrap()
                        .into_iter()
                        .filter(|z| z.edge_or_median == locus)
                        .map(|z| z.parameter_u)
                        .collect()
                })
                .collect();
            // Where consecutive samples see the same number of zeros, each
            // sorted zero moves in a consistent direction.
            let mut dirs: Vec<Option<f64>> = Vec::new();
            for w in tracks.windows(2) {
                if w[0].len() != w[1].len() {
                    continue;
                }
                dirs.resize(w[0].len().max(dirs.len()), None);
                for (k, (a, b)) in w[0].iter().zip(&w[1]).enumerate() {
                    let d = (b - a).signum();
                    if let Some(prev) = dirs[k] {
                        assert_eq!(prev, d, "{pair:?} {locus} zero {k} reversed");
                    }
                    dirs[k] = Some(d);
                }
            }
        }
    }
}

#[test]
fn edge_zeros_are_zeros_of_their_combination() {
    for pair in [P13, P23] {
        for th in [0.05, 0.2, 0.4, PI / 6.0] {
            for z in edge_critical_zeros(pair, th).unwrap() {
                let plus = z.edge_or_median == Locus::OA;
                let j = edge_combination(pair, th, plus, z.parameter_u).unwrap();
                assert!(j.value.abs() < 1e-10, "{pair:?} {th} {z:?}");
                let h = courant_lab::EigenfunctionHandle::equilateral(pair.m, pair.n, th);
                let p = z.location;
                assert!(h.value(p.s, p.t).abs() < 1e-10);
            }
        }
    }
}

#[test]
fn wronskian_13_is_non_negative() {
    for k in 0..1000 {
        let u = -1.0 / 6.0 + (1.5 + 1.0 / 6.0) * (k as f64 + 0.5) / 1000.0;
        assert!(wronskian(P13, u).unwrap() >= -1e-9, "u = {u}");
    }
}

#[test]
fn wronskian_23_zeros() {
    let u0 = ((9.0 - 15f64.sqrt()) / 6.0).acos() / (3.0 * PI);
    let zeros = [0.0, 2.0 / 3.0, 4.0 / 3.0, 1.0 / 3.0 - u0, 1.0 / 3.0 + u0, 1.0 - u0, 1.0 + u0];
    for z in zeros {
        assert!(wronskian(P23, z).unwrap().abs() < 1e-9, "u = {z}");
    }
    assert_close(1.0 / 3.0 - u0, 0.2753793461, 1e-9);
    assert_close(1.0 / 3.0 + u0, 0.3912873205, 1e-9);
    assert_close(1.0 - u0, 0.9420460128, 1e-9);
    assert_close(1.0 + u0, 1.057953987, 1e-9);
}

#[test]
fn wronskian_factorizations_agree() {
    for pair in [P13, P23] {
        let grid: Vec<f64> = (1..200).map(|k| -1.0 / 6.0 + 1.6 * k as f64 / 200.0).collect();
        let scale = grid.iter().map(|&u| wronskian_factorized(pair, u).unwrap().abs()).fold(0.0, f64::max);
        for &u in &grid {
            let direct = wronskian(pair, u).unwrap();
            let fact = wronskian_factorized(pair, u).unwrap();
            // Away from zeros, where cancellation in the direct form is mild.
            if fact.abs() > 1e-3 * scale {
                assert!(((direct - fact) / fact).abs() < 1e-10, "{pair:?} u={u}: {direct} vs {fact}");
            }
        }
    }
}

#[test]
fn bifurcation_is_a_double_zero() {
    let b = bifurcation_angle().unwrap();
    assert_close(b.u_b, 0.3912873205, 1e-8);
    assert_close(b.theta_c, 0.3005211736, 1e-8);
    let k = edge_combination(P23, b.theta_c, true, b.u_b).unwrap();
    assert!(k.value.abs() < 1e-12);
    assert!(k.deriv.abs() < 1e-9);
}

#[test]
fn barrier_lines_touch_n_s13_tangentially() {
    // F_O on D_{1/2} and F_C on D_{2/3}: the restriction vanishes without changing sign.
    let s13 = courant_lab::EigenfunctionHandle::equilateral(1, 3, PI / 2.0);
    for (a, u) in [(0.5, 0.25), (2.0 / 3.0, 1.0 / 3.0)] {
        assert_roots(edge_restriction_roots(P13, a, PI / 2.0).unwrap(), vec![u], 1e-9);
        let (left, right) = (s13.value(u - 1e-3, a - u + 1e-3), s13.value(u + 1e-3, a - u - 1e-3));
        assert!(left * right > 0.0, "{left} {right}");
    }
}
