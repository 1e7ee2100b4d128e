//! Total chromatic number of C_n(1,3) for 7 <= n <= N (default 40).

use circulant_total::{chi_total_with_evidence, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max: usize = std::env::args().nth(1).map_or(Ok(40), |a| a.parse())?;
    let opts = SolveOptions::default();
    let mut type_two = Vec::new();
    for n in 7..=n_max {
        let (chi, evidence) = chi_total_with_evidence(n, &opts)?;
        println!("{n:4}  chi''={chi}  ({})", evidence.method());
        if chi == 6 {
            type_two.push(n);
        }
    }
    println!("Type II orders up to {n_max}: {type_two:?}");
    Ok(())
}
