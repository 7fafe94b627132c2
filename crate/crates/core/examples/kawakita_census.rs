//! Terminal weighted blowups of A^3 are exactly (1, a, b) with a, b coprime.

use toric_blowups::{kawakita_form, run_census, CensusOptions, CensusQuery};

fn main() -> Result<(), toric_blowups::Error> {
    let report = run_census(&CensusQuery::terminal(3, 1..=60), &CensusOptions::default())?;
    let mut off_form = 0;
    for hit in &report.hits {
        let n = toric_blowups::WeightVector::new(hit.weights.clone())?;
        if !kawakita_form(&n)? {
            off_form += 1;
            println!("unexpected: {n}");
        }
    }
    println!("{} candidates, {} terminal, {off_form} not of the form (1,a,b)", report.candidates, report.hits.len());
    for hit in report.hits.iter().filter(|h| h.v == 12) {
        println!("  V = 12: {:?}", hit.weights);
    }
    Ok(())
}
