//! Writes C_n(1,3) as Graphviz DOT (default n = 13) to stdout.
//!
//!     cargo run --example export_dot -- 8 | dot -Tsvg > c8.svg

use circulant_total::CirculantGraph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map_or(Ok(13), |a| a.parse())?;
    print!("{}", CirculantGraph::c13(n)?.to_dot());
    Ok(())
}
