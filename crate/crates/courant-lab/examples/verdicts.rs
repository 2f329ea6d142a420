//! Courant-sharp verdicts over the screened candidates of every domain.

use courant_lab::nodal::courant_sharp_verdict;
use courant_lab::DomainKind;

fn main() -> courant_lab::Result<()> {
    for d in DomainKind::ALL {
        println!("{d}");
        for row in courant_sharp_verdict(d)? {
            let max = row.max_domains.map_or("-".to_string(), |k| k.to_string());
            let mark = if row.sharp { "sharp" } else { "" };
            println!("  λ{:<3} λ̄={:<4} max domains {max:<3} {mark}", row.index, row.normalized);
        }
    }
    Ok(())
}
