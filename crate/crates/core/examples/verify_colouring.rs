//! Loads a colouring in the three-word format, verifies it, then breaks one
//! vertex colour and shows the conflict report.

use circulant_total::{CirculantGraph, TotalColouring};

const C16: &str = "2453534242353524\n1212121314141415\n4345453525232353\n";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = TotalColouring::parse(C16, None)?;
    let g = CirculantGraph::c13(c.n())?;
    println!("C_16 colouring proper: {}", c.verify(&g)?.is_proper());

    let mut vertices = c.vertex_colours().to_vec();
    vertices[0] = vertices[1];
    let broken = TotalColouring::new(c.k(), vertices, c.e1_colours().to_vec(), c.e3_colours().to_vec())?;
    let report = broken.verify(&g)?;
    println!("after recolouring v0: {} conflicts", report.len());
    print!("{report}");

    println!("structured form:\n{}", c.to_json());
    Ok(())
}
