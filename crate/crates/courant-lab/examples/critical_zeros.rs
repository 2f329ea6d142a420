//! Boundary and median critical zeros of the λ₄ = 13 and λ₇ = 19 families.

use courant_lab::nodal::{edge_critical_zeros, median_critical_zeros, median_fixed_points, Basis};
use courant_lab::Mode;

fn main() -> courant_lab::Result<()> {
    let theta: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0.2);
    for pair in [Mode::new(1, 3), Mode::new(2, 3)] {
        println!("pair ({},{}), θ = {theta}", pair.m, pair.n);
        for z in edge_critical_zeros(pair, theta)? {
            println!("  {:<3} u = {:.10} order {}", z.edge_or_median.to_string(), z.parameter_u, z.order);
        }
        for z in median_critical_zeros(pair, Basis::C)? {
            println!("  C on the median, u = {:.10}", z.parameter_u);
        }
        for f in median_fixed_points(pair)? {
            println!("  fixed point {} at ({:.6}, {:.6})", f.label, f.location.s, f.location.t);
        }
    }
    Ok(())
}
