//! Smallest-weight bounds for the quintuple families, and a scan of the
//! blowups they produce.

use toric_blowups::families::{bound_dim1, check_ratio_lemma, family_scan, quintuple_table};

fn main() -> Result<(), toric_blowups::Error> {
    for q in quintuple_table() {
        if check_ratio_lemma(q.id)? {
            continue;
        }
        let bounds: Vec<String> = (1..=5)
            .filter_map(|l| bound_dim1(q.id, l).ok().map(|b| format!("l{l}:{b}")))
            .collect();
        println!("{:<4} {:?}  {}", q.id.to_string(), q.base, bounds.join(" "));
    }

    let report = family_scan(quintuple_table(), 300, 6, |_| {})?;
    println!(
        "scan to V = 300: {} instances, {} blowups, {} terminal, max n_min {}, {} above 6",
        report.instances,
        report.blowups,
        report.terminal,
        report.max_terminal_n_min,
        report.violations.len()
    );
    Ok(())
}
