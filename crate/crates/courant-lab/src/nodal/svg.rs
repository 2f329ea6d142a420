//! Zero-level contours by marching squares, and SVG export.
//!
//! Cells are the grid parallelograms of [`count`](super::count) whose four
//! corners lie strictly inside the domain. Ambiguous saddle cells are
//! resolved by the sign at the cell centre.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt::Write;

use crate::eigen::EigenfunctionHandle;
use crate::error::{invalid, CourantError, Result};
use crate::geometry::{self, to_cartesian, AlcovePoint, CartesianPoint, DomainKind};
use crate::nodal::analysis::{CriticalZero, FixedPoint};

/// Pixels per unit length.
pub const PIXELS_PER_UNIT: f64 = 512.0;
const MARGIN: f64 = 16.0;

type Arc = Vec<CartesianPoint>;

fn plane_point(d: DomainKind, a: f64, b: f64) -> CartesianPoint {
    if d.uses_cartesian() {
        CartesianPoint::new(a, b)
    } else {
        to_cartesian(AlcovePoint::new(a, b))
    }
}

/// Vertices of the domain in Cartesian coordinates.
pub fn outline(d: DomainKind) -> Result<Vec<CartesianPoint>> {
    let alcove = |s: f64, t: f64| to_cartesian(AlcovePoint::new(s, t));
    match d {
        DomainKind::Torus => Err(CourantError::Unsupported { operation: "plotting", domain: d }),
        DomainKind::Equilateral => Ok(vec![alcove(0.0, 0.0), alcove(2.0 / 3.0, 1.0 / 3.0), alcove(1.0 / 3.0, 2.0 / 3.0)]),
        DomainKind::Hemiequilateral => Ok(vec![alcove(0.0, 0.0), alcove(2.0 / 3.0, 1.0 / 3.0), alcove(0.5, 0.5)]),
        DomainKind::RightIsosceles => Ok(vec![
            CartesianPoint::new(0.0, 0.0),
            CartesianPoint::new(PI, 0.0),
            CartesianPoint::new(PI, PI),
        ]),
    }
}

/// Polylines of the zero set of `h`, in Cartesian coordinates.
pub fn nodal_arcs(h: &EigenfunctionHandle, resolution: usize) -> Result<Vec<Arc>> {
    if h.domain == DomainKind::Torus {
        return Err(CourantError::Unsupported { operation: "plotting", domain: h.domain });
    }
    if resolution < 16 {
        return Err(invalid(format!("resolution must be at least 16, got {resolution}")));
    }
    let d = h.domain;
    let side = resolution + 1;
    let step = if d.uses_cartesian() { PI } else { 1.0 } / resolution as f64;
    let coord = |i: usize| i as f64 * step;
    let mut values = vec![f64::NAN; side * side];
    for i in 0..side {
        for j in 0..side {
            if geometry::in_domain_strict(d, coord(i), coord(j)) {
                values[i * side + j] = h.value(coord(i), coord(j));
            }
        }
    }
    let val = |i: usize, j: usize| values[i * side + j];

    // Edge ids: 2k for (i,j)-(i+1,j), 2k+1 for (i,j)-(i,j+1), k = i*side + j.
    let mut crossing: HashMap<usize, CartesianPoint> = HashMap::new();
    let mut cross = |id: usize, (i0, j0): (usize, usize), (i1, j1): (usize, usize)| {
        crossing.entry(id).or_insert_with(|| {
            let (v0, v1) = (val(i0, j0), val(i1, j1));
            let r = v0 / (v0 - v1);
            let a = coord(i0) + r * (coord(i1) - coord(i0));
            let b = coord(j0) + r * (coord(j1) - coord(j0));
            plane_point(d, a, b)
        });
        id
    };

    let mut segments: Vec<[usize; 2]> = Vec::new();
    for i in 0..resolution {
        for j in 0..resolution {
            let corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
            let v = corners.map(|(a, b)| val(a, b));
            if v.iter().any(|x| x.is_nan()) {
                continue;
            }
            let pos = v.map(|x| x >= 0.0);
            let edge_ids = [
                2 * (i * side + j),
                2 * ((i + 1) * side + j) + 1,
                2 * (i * side + j + 1),
                2 * (i * side + j) + 1,
            ];
            let ends = [(0, 1), (1, 2), (3, 2), (0, 3)];
            let crossed: Vec<usize> = (0..4).filter(|&e| pos[ends[e].0] != pos[ends[e].1]).collect();
            let mut id = |e: usize| cross(edge_ids[e], corners[ends[e].0], corners[ends[e].1]);
            match crossed.len() {
                2 => segments.push([id(crossed[0]), id(crossed[1])]),
                4 => {
                    let centre = h.value(coord(i) + 0.5 * step, coord(j) + 0.5 * step);
                    if (centre >= 0.0) == pos[0] {
                        segments.push([id(0), id(1)]);
                        segments.push([id(2), id(3)]);
                    } else {
                        segments.push([id(0), id(3)]);
                        segments.push([id(1), id(2)]);
                    }
                }
                _ => {}
            }
        }
    }
    Ok(chain(&segments).into_iter().map(|ids| ids.iter().map(|e| crossing[e]).collect()).collect())
}

/// Joins segments sharing an edge id into maximal chains of edge ids.
fn chain(segments: &[[usize; 2]]) -> Vec<Vec<usize>> {
    let mut by_edge: HashMap<usize, Vec<usize>> = HashMap::new();
    for (k, seg) in segments.iter().enumerate() {
        for &e in seg {
            by_edge.entry(e).or_default().push(k);
        }
    }
    let mut used = vec![false; segments.len()];
    let walk = |start: usize, from: usize, used: &mut Vec<bool>| {
        let mut ids = vec![from];
        let mut seg = start;
        let mut at = from;
        loop {
            used[seg] = true;
            let s = segments[seg];
            let next = if s[0] == at { s[1] } else { s[0] };
            ids.push(next);
            at = next;
            match by_edge[&at].iter().find(|&&k| !used[k]) {
                Some(&k) => seg = k,
                None => break,
            }
        }
        ids
    };
    let mut out = Vec::new();
    // Open chains first, from their free ends; whatever is left is closed.
    let mut ends: Vec<usize> = by_edge.iter().filter(|(_, v)| v.len() == 1).map(|(&e, _)| e).collect();
    ends.sort_unstable();
    for e in ends {
        let k = by_edge[&e][0];
        if !used[k] {
            out.push(walk(k, e, &mut used));
        }
    }
    for k in 0..segments.len() {
        if !used[k] {
            out.push(walk(k, segments[k][0], &mut used));
        }
    }
    out
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
}

impl Frame {
    fn px(&self, p: CartesianPoint) -> (f64, f64) {
        (MARGIN + (p.x - self.min_x) * self.scale, MARGIN + (self.max_y - p.y) * self.scale)
    }
}

/// SVG document with the domain outline, one `path.nodal` per nodal arc,
/// a `circle.fixed-point` per fixed point and a cross per critical zero.
pub fn render_svg(
    h: &EigenfunctionHandle,
    resolution: usize,
    fixed_points: &[FixedPoint],
    critical_zeros: &[CriticalZero],
) -> Result<String> {
    let corners = outline(h.domain)?;
    let arcs = nodal_arcs(h, resolution)?;
    let scale = if h.domain.uses_cartesian() { PIXELS_PER_UNIT / PI } else { PIXELS_PER_UNIT };
    let min_x = corners.iter().map(|p| p.x).fold(f64::INFINITY, f64::min);
    let max_x = corners.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max);
    let min_y = corners.iter().map(|p| p.y).fold(f64::INFINITY, f64::min);
    let max_y = corners.iter().map(|p| p.y).fold(f64::NEG_INFINITY, f64::max);
    let frame = Frame { min_x, max_y, scale };
    let width = 2.0 * MARGIN + (max_x - min_x) * scale;
    let height = 2.0 * MARGIN + (max_y - min_y) * scale;
    let place = |p: AlcovePoint| frame.px(plane_point(h.domain, p.s, p.t));

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
    let _ = writeln!(
        out,
        "<style>.outline{{fill:none;stroke:#000;stroke-width:1.5}} .nodal{{fill:none;stroke:#c0392b;stroke-width:1.2}} \
         .fixed-point{{fill:#2471a3}} .critical-zero{{stroke:#1e8449;stroke-width:1.5}}</style>"
    );
    let poly: Vec<String> = corners
        .iter()
        .map(|&p| {
            let (x, y) = frame.px(p);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(out, r#"<polygon class="outline" points="{}"/>"#, poly.join(" "));
    for arc in &arcs {
        let mut d = String::new();
        for (k, &p) in arc.iter().enumerate() {
            let (x, y) = frame.px(p);
            let _ = write!(d, "{}{x:.2},{y:.2}", if k == 0 { "M" } else { " L" });
        }
        let _ = writeln!(out, r#"<path class="nodal" d="{d}"/>"#);
    }
    for fp in fixed_points {
        let (x, y) = place(fp.location);
        let _ = writeln!(out, r#"<circle class="fixed-point" cx="{x:.2}" cy="{y:.2}" r="4"><title>{}</title></circle>"#, fp.label);
    }
    for cz in critical_zeros {
        let (x, y) = place(cz.location);
        let r = 5.0;
        let _ = writeln!(
            out,
            r#"<path class="critical-zero" d="M{:.2},{:.2} L{:.2},{:.2} M{:.2},{:.2} L{:.2},{:.2}"/>"#,
            x - r,
            y - r,
            x + r,
            y + r,
            x - r,
            y + r,
            x + r,
            y - r
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
