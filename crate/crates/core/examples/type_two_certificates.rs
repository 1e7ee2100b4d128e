//! Produces and re-checks the k = 5 / k = 6 certificate pair for each Type II
//! order, writing them under the directory given as the first argument
//! (default: a fresh temporary directory).

use std::path::PathBuf;

use circulant_total::construct::TYPE_II_ORDERS;
use circulant_total::{prove_type2, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = match std::env::args().nth(1) {
        Some(d) => PathBuf::from(d),
        None => std::env::temp_dir().join("circulant-total-certificates"),
    };
    std::fs::create_dir_all(&dir)?;
    for n in TYPE_II_ORDERS {
        let proof = prove_type2(n, &SolveOptions::default())?;
        for cert in [&proof.without_five, &proof.with_six] {
            cert.recheck()?;
            let path = dir.join(format!("c{n}_k{}.json", cert.k));
            std::fs::write(&path, cert.to_json())?;
            println!(
                "n={n:2} k={} {:?} nodes={} digest={}.. -> {}",
                cert.k,
                cert.status,
                cert.nodes_visited,
                &cert.config_digest[..12],
                path.display()
            );
        }
        assert!(proof.is_conclusive());
    }
    Ok(())
}
