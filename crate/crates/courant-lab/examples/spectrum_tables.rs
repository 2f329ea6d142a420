//! Distinct eigenvalues of each domain with index ranges and multiplicities.
//!
//! `cargo run --example spectrum_tables -- 40`

use courant_lab::spectrum::{enumerate_spectrum, scale};
use courant_lab::DomainKind;

fn main() -> courant_lab::Result<()> {
    let count: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(30);
    for d in DomainKind::ALL {
        println!("{d} (λ = {:.6} λ̄)", scale(d));
        for e in enumerate_spectrum(d, count)? {
            let modes: Vec<String> = e.representative_modes.iter().map(|m| format!("({},{})", m.m, m.n)).collect();
            println!("  {:>4}  {:>3}..{:<3} x{:<2} {}", e.normalized, e.min_index, e.max_index, e.multiplicity, modes.join(" "));
        }
    }
    Ok(())
}
