//! Blowups carried by sporadic empty 4-simplices.
//!
//! Reads the dataset named by SPORADIC_DATASET if set, else the built-in
//! sample records.

use toric_blowups::sporadic::{blowups_from_record, fixtures, parse_dataset, sporadic_histogram, DATASET_ENV};

fn main() -> Result<(), toric_blowups::Error> {
    let records = match std::env::var_os(DATASET_ENV) {
        Some(path) => parse_dataset(path, false)?,
        None => fixtures().to_vec(),
    };
    for r in records.iter().take(5) {
        for (apex, n) in blowups_from_record(r) {
            println!("V = {:>3} b = {:?}  apex {apex}: {n}", r.v, r.b);
        }
    }
    let report = sporadic_histogram(&records, true)?;
    println!("{} records, {} blowups, {} distinct", report.records, report.histogram.total, report.distinct);
    for (n_min, count) in &report.histogram.counts {
        println!("  n_min {n_min:>2}: {count}");
    }
    if let Some(top) = report.argmax {
        println!("largest n_min: {:?} (V = {})", top.weights, top.record.v);
    }
    Ok(())
}
