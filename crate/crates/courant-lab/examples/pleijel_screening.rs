//! Faber-Krahn thresholds, index cutoffs and the surviving candidate indices.

use courant_lab::screening::{screening_table, summary};
use courant_lab::DomainKind;

fn main() {
    for d in DomainKind::ALL {
        let s = summary(d);
        println!("{d}: threshold {:.10}, cutoff {}, candidates {:?}", s.threshold, s.index_cutoff, s.candidates);
        let failing = screening_table(d).iter().filter(|r| !r.passes).count();
        println!("  {failing} eigenvalues below the threshold");
    }
}
