//! How the six triangle symmetries act on the angle of a Ψ^θ family.

use std::f64::consts::PI;

use courant_lab::eigen::{eval_psi, pullback_theta};
use courant_lab::geometry::{apply_symmetry, CENTROID};
use courant_lab::{AlcovePoint, EigenfunctionHandle, Mode, Symmetry};

fn main() -> courant_lab::Result<()> {
    let mode = Mode::new(2, 3);
    let theta = PI / 5.0;
    let h = EigenfunctionHandle::equilateral(mode.m, mode.n, theta);
    let p = AlcovePoint::new(0.3, 0.2);
    let e = eval_psi(&h, p.s, p.t)?;
    println!("Ψ^θ(2,3) at {p:?}: {:.6}, grad ({:.4}, {:.4})", e.value, e.grad_s, e.grad_t);
    for sym in Symmetry::ALL {
        let (t2, sign) = pullback_theta(sym, mode, theta);
        let q = apply_symmetry(sym, p);
        let g = EigenfunctionHandle::equilateral(mode.m, mode.n, t2);
        println!(
            "{sym:?}: θ -> {t2:.6}, Ψ(gp) = {:+.9}, {sign:+}Ψ^θ'(p) = {:+.9}",
            h.value(q.s, q.t),
            sign as f64 * g.value(p.s, p.t)
        );
    }
    println!("centroid value {:.3e}", h.value(CENTROID.s, CENTROID.t));
    Ok(())
}
