//! Facet widths and the ell_L bound for two small configurations.

use toric_blowups::projections::{ell_l, facet_width, facets, ProjectedConfig};

fn show(name: &str, points: Vec<Vec<i64>>) -> Result<(), toric_blowups::Error> {
    let s = ProjectedConfig::new(points, 0)?;
    println!("{name}:");
    for f in facets(&s) {
        println!("  normal {:?} offset {} width {}", f.normal, f.offset, facet_width(&s, &f));
    }
    println!("  ell_L = {}", ell_l(&s)?);
    Ok(())
}

fn main() -> Result<(), toric_blowups::Error> {
    show("segment", vec![vec![0], vec![1], vec![0], vec![0]])?;
    show("triangle", vec![vec![0, 0], vec![2, 0], vec![0, 2], vec![0, 0], vec![2, 0]])?;
    Ok(())
}
