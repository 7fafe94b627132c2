//! The family (6, 10, 15, n) with n coprime to 30: terminal, smallest weight 6.

use toric_blowups::search::{verify_family, FamilyTemplate};
use toric_blowups::Rat;

fn main() -> Result<(), toric_blowups::Error> {
    let template = FamilyTemplate::parse("6,10,15,_")?;
    let entries = verify_family(&template, 1..=60, Rat::ONE)?;
    for e in &entries {
        let coprime = num_integer::Integer::gcd(&e.value, &30) == 1;
        if coprime || e.is_terminal() {
            println!("n = {:>2}  n_min = {}  terminal = {}", e.value, e.n_min, e.is_terminal());
        }
    }
    let terminal = entries.iter().filter(|e| e.is_terminal()).count();
    println!("{terminal} of {} members terminal", entries.len());
    Ok(())
}
