//! Write the nodal set of Ψ^θ(1,3) with its fixed points and critical zeros as SVG.
//!
//! `cargo run --example nodal_plot -- out.svg`

use std::f64::consts::PI;

use courant_lab::nodal::{edge_critical_zeros, median_fixed_points, svg};
use courant_lab::{EigenfunctionHandle, Mode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "nodal-13.svg".into());
    let pair = Mode::new(1, 3);
    let theta = PI / 12.0;
    let h = EigenfunctionHandle::equilateral(pair.m, pair.n, theta);
    let fixed = median_fixed_points(pair)?;
    let zeros = edge_critical_zeros(pair, theta)?;
    let doc = svg::render_svg(&h, 512, &fixed, &zeros)?;
    std::fs::write(&path, doc)?;
    println!("{} nodal arcs written to {path}", svg::nodal_arcs(&h, 512)?.len());
    Ok(())
}
