//! Runs the exact solver on C_n(1,3) with each symmetry level.
//!
//!     cargo run --release --example solve -- 13 5 [workers]

use std::time::Instant;

use circulant_total::solver::SymmetryLevel;
use circulant_total::{search_total_colouring, CirculantGraph, SearchConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(Ok(12), |a| a.parse())?;
    let k: u8 = args.get(1).map_or(Ok(5), |a| a.parse())?;
    let workers: usize = args.get(2).map_or(Ok(1), |a| a.parse())?;
    let g = CirculantGraph::c13(n)?;

    for level in [
        SymmetryLevel::None,
        SymmetryLevel::ColourPerm,
        SymmetryLevel::ColourPermPlusRotation,
    ] {
        let cfg = SearchConfig {
            k,
            symmetry_level: level,
            node_limit: 0,
            worker_count: workers,
            ..SearchConfig::default()
        };
        let start = Instant::now();
        let out = search_total_colouring(&g, &cfg)?;
        println!(
            "n={n} k={k} {level:?}: {:?}, {} nodes, depth {}, {:?}",
            out.status,
            out.nodes_visited,
            out.max_depth,
            start.elapsed()
        );
        if let Some(c) = out.colouring {
            print!("{}", c.to_compact()?);
        }
    }
    Ok(())
}
