//! Nodal-domain counts for a few eigenfunctions on each triangle.

use std::f64::consts::PI;

use courant_lab::nodal::count_nodal_domains;
use courant_lab::EigenfunctionHandle;

fn main() -> courant_lab::Result<()> {
    let handles = [
        EigenfunctionHandle::equilateral(2, 2, PI / 2.0),
        EigenfunctionHandle::equilateral(3, 3, PI / 2.0),
        EigenfunctionHandle::equilateral(1, 3, PI / 12.0),
        EigenfunctionHandle::equilateral(2, 3, 0.45),
        EigenfunctionHandle::right_isosceles(4, 2),
        EigenfunctionHandle::hemiequilateral(5, 2),
    ];
    for h in handles {
        let r = count_nodal_domains(&h, 512)?;
        println!(
            "{:<16} ({},{}) θ={:.4}: {} domains ({}+ / {}-), stable {}",
            h.domain.to_string(),
            r.m,
            r.n,
            r.theta,
            r.domain_count,
            r.positive_components,
            r.negative_components,
            r.stable
        );
    }
    Ok(())
}
