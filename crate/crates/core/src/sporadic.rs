//! Sporadic empty 4-simplices and the weighted blowups they carry.
//!
//! A record `(V, b)` lists five residues modulo `V` summing to zero. Any
//! entry `b_l` that is a unit can be scaled to `-1`; the other four entries,
//! reduced into `[0, V)`, are blowup weights exactly when they add up to
//! `V + 1`.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::classifier::is_terminal_fast;
use crate::error::{Error, Result};
use crate::exactgeom::WeightVector;
use crate::families::normalise_at_apex;
use crate::search::Histogram;

/// Environment variable naming the default dataset path.
pub const DATASET_ENV: &str = "SPORADIC_DATASET";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SporadicRecord {
    #[serde(rename = "V")]
    pub v: u64,
    pub b: [u64; 5],
}

impl SporadicRecord {
    pub fn new(v: u64, b: [u64; 5]) -> Result<SporadicRecord> {
        if v == 0 {
            return Err(Error::InvalidQuery("record volume must be positive".into()));
        }
        let b = b.map(|x| x % v);
        if b.iter().map(|&x| x as u128).sum::<u128>() % v as u128 != 0 {
            return Err(Error::RecordInvariant { line: 0, v, b });
        }
        Ok(SporadicRecord { v, b })
    }

    /// Multiply every residue by `u` modulo `V`.
    pub fn scaled(&self, u: u64) -> SporadicRecord {
        let v = self.v as u128;
        SporadicRecord { v: self.v, b: self.b.map(|x| (x as u128 * u as u128 % v) as u64) }
    }
}

/// Records used when the published list is not available.
pub fn fixtures() -> [SporadicRecord; 3] {
    [
        SporadicRecord { v: 245, b: [32, 41, 71, 102, 244] },
        SporadicRecord { v: 419, b: [20, 57, 133, 210, 418] },
        SporadicRecord { v: 37, b: [6, 10, 15, 7, 36] },
    ]
}

pub fn parse_dataset(path: impl AsRef<Path>, strict: bool) -> Result<Vec<SporadicRecord>> {
    parse_reader(File::open(path)?, strict)
}

/// Lines hold `V b1 b2 b3 b4 b5`. Blank lines and lines starting with `#`
/// are skipped. Liberal mode also accepts commas and reduces residues modulo
/// `V`; strict mode wants whitespace only and residues already in `[0, V)`.
pub fn parse_reader(input: impl Read, strict: bool) -> Result<Vec<SporadicRecord>> {
    let mut records = Vec::new();
    for (idx, line) in BufReader::new(input).lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let malformed = |message: String| Error::Malformed { line: lineno, message };
        if strict && t.contains(',') {
            return Err(malformed("commas are not accepted in strict mode".into()));
        }
        let fields: Vec<&str> = t.split(|c: char| c.is_whitespace() || c == ',').filter(|f| !f.is_empty()).collect();
        if fields.len() != 6 {
            return Err(malformed(format!("expected 6 fields, found {}", fields.len())));
        }
        let v: u64 = fields[0].parse().map_err(|_| malformed(format!("bad volume {:?}", fields[0])))?;
        if v == 0 {
            return Err(malformed("volume must be positive".into()));
        }
        let mut b = [0u64; 5];
        for (slot, f) in b.iter_mut().zip(&fields[1..]) {
            let x: i128 = f.parse().map_err(|_| malformed(format!("bad residue {f:?}")))?;
            if strict && !(0..v as i128).contains(&x) {
                return Err(malformed(format!("residue {x} not in [0, {v})")));
            }
            *slot = x.rem_euclid(v as i128) as u64;
        }
        if b.iter().map(|&x| x as u128).sum::<u128>() % v as u128 != 0 {
            return Err(Error::RecordInvariant { line: lineno, v, b });
        }
        records.push(SporadicRecord { v, b });
    }
    Ok(records)
}

/// Blowups of one record, tagged with the 1-based apex that produced them.
pub fn blowups_from_record(r: &SporadicRecord) -> Vec<(usize, WeightVector)> {
    (0..5).filter_map(|l| normalise_at_apex(&r.b, l, r.v).map(|n| (l + 1, n))).collect()
}

/// The record of the simplex whose apex-5 blowup is `n`.
pub fn record_from_weights(n: &WeightVector) -> Result<SporadicRecord> {
    if n.dim() != 4 {
        return Err(Error::WrongDimension { expected: 4, got: n.dim() });
    }
    n.require_positive()?;
    let w = n.weights();
    let v = n.index();
    SporadicRecord::new(v, [w[0], w[1], w[2], w[3], v - 1])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SporadicBlowup {
    pub record: SporadicRecord,
    pub apex: usize,
    pub weights: Vec<u64>,
    pub n_min: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SporadicReport {
    pub records: usize,
    /// One count per `(record, apex)` pair producing a blowup.
    pub histogram: Histogram,
    /// Distinct `(V, sorted weights)` among those blowups.
    pub distinct: usize,
    pub distinct_histogram: Histogram,
    /// Blowups that fail the terminal check, if it was run.
    pub non_terminal: Vec<SporadicBlowup>,
    /// The first blowup, in record order, with the largest smallest weight.
    pub argmax: Option<SporadicBlowup>,
}

/// Extract every blowup and tally smallest weights. Work is split across
/// records and merged in input order.
pub fn sporadic_histogram(records: &[SporadicRecord], check_terminal: bool) -> Result<SporadicReport> {
    let per_record: Vec<Vec<(SporadicBlowup, bool)>> = records
        .par_iter()
        .map(|r| {
            blowups_from_record(r)
                .into_iter()
                .map(|(apex, n)| {
                    let terminal = !check_terminal || is_terminal_fast(&n)?;
                    let b = SporadicBlowup { record: *r, apex, n_min: n.n_min(), weights: n.weights().to_vec() };
                    Ok((b, terminal))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    let mut report = SporadicReport { records: records.len(), ..Default::default() };
    let mut seen = BTreeSet::new();
    for (b, terminal) in per_record.into_iter().flatten() {
        report.histogram.add(b.n_min);
        let mut key = b.weights.clone();
        key.sort_unstable();
        if seen.insert((b.record.v, key)) {
            report.distinct_histogram.add(b.n_min);
        }
        if !terminal {
            report.non_terminal.push(b.clone());
        }
        if report.argmax.as_ref().is_none_or(|a| b.n_min > a.n_min) {
            report.argmax = Some(b);
        }
    }
    report.distinct = seen.len();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(w: &[u64]) -> WeightVector {
        WeightVector::new(w.to_vec()).unwrap()
    }

    fn emitted(r: &SporadicRecord) -> Vec<Vec<u64>> {
        blowups_from_record(r).into_iter().map(|(_, n)| n.weights().to_vec()).collect()
    }

    #[test]
    fn parse_lines() {
        let text = "# header\n\n245 32 41 71 102 244\n419, 20, 57, 133, 210, 418\n";
        let rs = parse_reader(text.as_bytes(), false).unwrap();
        assert_eq!(rs, fixtures()[..2].to_vec());
        assert!(matches!(parse_reader(text.as_bytes(), true), Err(Error::Malformed { line: 4, .. })));
        assert_eq!(parse_reader("".as_bytes(), true).unwrap(), vec![]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_reader("5 1 2 3".as_bytes(), false), Err(Error::Malformed { line: 1, .. })));
        assert!(matches!(
            parse_reader("# c\n5 1 1 1 1 2\n".as_bytes(), false),
            Err(Error::RecordInvariant { line: 2, v: 5, .. })
        ));
        assert!(matches!(parse_reader("5 1 1 1 1 -4".as_bytes(), true), Err(Error::Malformed { .. })));
        assert_eq!(parse_reader("5 1 1 1 1 -4".as_bytes(), false).unwrap()[0].b, [1, 1, 1, 1, 1]);
    }

    #[test]
    fn fixture_blowups() {
        let [r245, r419, r37] = fixtures();
        assert!(blowups_from_record(&r245).contains(&(5, wv(&[32, 41, 71, 102]))));
        let w = emitted(&r419);
        assert!(w.contains(&vec![20, 57, 133, 210]));
        assert!(w.contains(&vec![60, 140, 199, 21]));
        assert!(blowups_from_record(&r37).contains(&(5, wv(&[6, 10, 15, 7]))));
    }

    #[test]
    fn no_unit_entries() {
        let r = SporadicRecord::new(6, [2, 3, 4, 0, 3]).unwrap();
        assert!(blowups_from_record(&r).is_empty());
    }

    #[test]
    fn record_round_trip() {
        assert_eq!(record_from_weights(&wv(&[32, 41, 71, 102])).unwrap(), fixtures()[0]);
        assert_eq!(record_from_weights(&wv(&[6, 10, 15, 7])).unwrap(), fixtures()[2]);
        let r = record_from_weights(&wv(&[1, 1, 1, 1])).unwrap();
        assert_eq!((r.v, r.b), (3, [1, 1, 1, 1, 2]));
        assert!(record_from_weights(&wv(&[1, 2, 3])).is_err());
    }

    #[test]
    fn histogram_on_fixtures() {
        let rep = sporadic_histogram(&fixtures(), true).unwrap();
        assert!(rep.non_terminal.is_empty());
        assert_eq!(rep.argmax.as_ref().unwrap().weights, vec![32, 41, 71, 102]);
        assert_eq!(rep.histogram.total, blowups_count());
        assert!(rep.distinct as u64 <= rep.histogram.total);
        assert_eq!(sporadic_histogram(&[], true).unwrap().histogram.total, 0);
    }

    fn blowups_count() -> u64 {
        fixtures().iter().map(|r| blowups_from_record(r).len() as u64).sum()
    }
}
