//! Classify a weighted blowup at a few values of epsilon.
//!
//! cargo run --example classify_blowup -- 6 10 15 7

use toric_blowups::{classify, Rat, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let weights = if args.is_empty() { vec![6, 10, 15, 7] } else { args };
    let n = WeightVector::new(weights)?;
    println!("n = {n}, V = {}", n.index());

    for eps in ["1", "2/3", "1/2", "1/3"] {
        let eps: Rat = eps.parse()?;
        let c = classify(&n, eps)?;
        print!("eps = {eps:>3}: log terminal {:<5}  log canonical {:<5}", c.eps_log_terminal, c.eps_log_canonical);
        match &c.witness {
            Some(w) => println!("  witness k={} point {:?} ({:?})", w.k, w.point, w.class),
            None => println!(),
        }
    }
    Ok(())
}
