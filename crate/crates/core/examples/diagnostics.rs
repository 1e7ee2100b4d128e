//! Colour class statistics of the stored colourings and structural facts
//! about the small Type II graphs.

use circulant_total::{colour_sporadic, CirculantGraph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in [11, 22] {
        let c = colour_sporadic(n)?;
        println!(
            "C_{n}: class sizes {:?}, parity condition {}",
            c.colour_class_sizes(),
            c.parity_condition()
        );
        for j in 1..=c.k() {
            let gaps = c
                .class_gap_multiset(j)
                .map(|g| format!("{g:?}"))
                .unwrap_or_else(|_| "empty".into());
            println!("  colour {j}: gaps {gaps}, chords {}", c.chord_colour_count(j));
        }
    }
    for n in [7, 8, 12, 13, 17] {
        let g = CirculantGraph::c13(n)?;
        println!(
            "C_{n}: independence number {}, K_4,4: {}",
            g.independence_number()?,
            g.is_complete_bipartite_4_4()
        );
    }
    Ok(())
}
