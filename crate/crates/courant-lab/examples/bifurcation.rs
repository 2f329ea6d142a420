//! Locate θ_c and watch the (2,3) nodal count change across it.

use courant_lab::nodal::{bifurcation_angle, count_nodal_domains};
use courant_lab::EigenfunctionHandle;

fn main() -> courant_lab::Result<()> {
    let b = bifurcation_angle()?;
    println!("u_b = {:.10}, θ_c = {:.10}", b.u_b, b.theta_c);
    for dt in [-0.05, -0.01, 0.01, 0.05] {
        let h = EigenfunctionHandle::equilateral(2, 3, b.theta_c + dt);
        let r = count_nodal_domains(&h, 512)?;
        println!("θ = θ_c {dt:+}: {} domains (stable {})", r.domain_count, r.stable);
    }
    Ok(())
}
