//! Compare the coset enumeration with the brute-force scan in the original
//! coordinates, for every blowup of small index.

use toric_blowups::classifier::oracle_verdict;
use toric_blowups::exactgeom::ORACLE_DEFAULT_CAP;
use toric_blowups::{classify, enumerate_blowups, Rat};

fn main() -> Result<(), toric_blowups::Error> {
    let eps = [Rat::ONE, Rat::new(1, 2)?, Rat::new(1, 3)?];
    let (mut compared, mut disagreements) = (0, 0);
    for d in 2..=4 {
        for v in 1..=25 {
            for n in enumerate_blowups(d, v) {
                for &e in &eps {
                    let c = classify(&n, e)?;
                    let o = oracle_verdict(&n, e, ORACLE_DEFAULT_CAP)?;
                    compared += 1;
                    if (c.eps_log_terminal, c.eps_log_canonical) != o {
                        disagreements += 1;
                        println!("disagree: {n} at eps {e}");
                    }
                }
            }
        }
    }
    println!("{compared} comparisons, {disagreements} disagreements");
    Ok(())
}
