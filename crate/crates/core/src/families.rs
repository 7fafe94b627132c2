//! One-parameter families of hollow 4-simplices given by quintuples.
//!
//! A quintuple `q` (entries summing to zero) is the affine dependence among
//! the projected vertices of a family of hollow 4-simplices. For each volume
//! `V` the family has a member with barycentric generating point
//! `(q + V r) / V`, where `r` is zero for the primitive rows `Q1..Q29` and has
//! denominator 2, 3, 4 or 6 for the non-primitive rows `N1..N17`. Choosing
//! one entry as the apex (the vertex placed at the origin) turns a member
//! into a candidate weighted blowup of `A^4`.
//!
//! Rows are stored with their base entries ordered as
//! `q_1 > q_2 > 0 > q_3 >= q_4 >= q_5`.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactgeom::WeightVector;
use crate::rat::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyKind {
    Primitive,
    NonPrimitive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuintupleId {
    pub kind: FamilyKind,
    pub number: u8,
}

impl QuintupleId {
    pub const fn q(number: u8) -> QuintupleId {
        QuintupleId { kind: FamilyKind::Primitive, number }
    }

    pub const fn n(number: u8) -> QuintupleId {
        QuintupleId { kind: FamilyKind::NonPrimitive, number }
    }
}

impl fmt::Display for QuintupleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.kind {
            FamilyKind::Primitive => 'Q',
            FamilyKind::NonPrimitive => 'N',
        };
        write!(f, "{prefix}{}", self.number)
    }
}

impl Serialize for QuintupleId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for QuintupleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<QuintupleId> {
        let unknown = || Error::UnknownQuintuple(s.to_string());
        let t = s.trim();
        let (kind, digits) = match t.chars().next() {
            Some('Q' | 'q') => (FamilyKind::Primitive, &t[1..]),
            Some('N' | 'n') => (FamilyKind::NonPrimitive, &t[1..]),
            _ => return Err(unknown()),
        };
        let number: u8 = digits.parse().map_err(|_| unknown())?;
        let id = QuintupleId { kind, number };
        lookup(id).map(|_| id).ok_or_else(unknown)
    }
}

/// Which sign resolves the `±` in rows `N7..N17`. The sign applies to the
/// whole modifier of the row at once; mixing signs within a row breaks the
/// zero-sum condition modulo `V`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub enum SignPattern {
    #[default]
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl FromStr for SignPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<SignPattern> {
        match s.trim() {
            "+" | "plus" => Ok(SignPattern::Plus),
            "-" | "minus" => Ok(SignPattern::Minus),
            other => Err(Error::InvalidQuery(format!("sign must be + or -, got {other:?}"))),
        }
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignPattern::Plus => "+",
            SignPattern::Minus => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Quintuple {
    pub id: QuintupleId,
    /// The `V`-independent entries.
    pub base: [i64; 5],
    /// Numerators of the per-entry coefficient of `V`, over `denominator`.
    pub modifier: [i64; 5],
    pub denominator: i64,
    /// Whether the modifier carries a `±`.
    pub signed: bool,
}

impl Quintuple {
    const fn primitive(number: u8, base: [i64; 5]) -> Quintuple {
        Quintuple { id: QuintupleId::q(number), base, modifier: [0; 5], denominator: 1, signed: false }
    }

    const fn shifted(number: u8, base: [i64; 5], modifier: [i64; 5], denominator: i64, signed: bool) -> Quintuple {
        Quintuple { id: QuintupleId::n(number), base, modifier, denominator, signed }
    }

    pub fn is_primitive(&self) -> bool {
        self.id.kind == FamilyKind::Primitive
    }

    /// The sign resolutions worth trying for this row.
    pub fn signs(&self) -> &'static [SignPattern] {
        if self.signed {
            &[SignPattern::Plus, SignPattern::Minus]
        } else {
            &[SignPattern::Plus]
        }
    }
}

static TABLE: [Quintuple; 46] = [
    Quintuple::primitive(1, [9, 1, -2, -3, -5]),
    Quintuple::primitive(2, [9, 2, -1, -4, -6]),
    Quintuple::primitive(3, [12, 3, -4, -5, -6]),
    Quintuple::primitive(4, [12, 2, -3, -4, -7]),
    Quintuple::primitive(5, [9, 4, -2, -3, -8]),
    Quintuple::primitive(6, [12, 1, -2, -3, -8]),
    Quintuple::primitive(7, [12, 3, -1, -6, -8]),
    Quintuple::primitive(8, [15, 4, -5, -6, -8]),
    Quintuple::primitive(9, [12, 2, -1, -4, -9]),
    Quintuple::primitive(10, [10, 6, -2, -5, -9]),
    Quintuple::primitive(11, [15, 1, -2, -5, -9]),
    Quintuple::primitive(12, [12, 5, -3, -4, -10]),
    Quintuple::primitive(13, [15, 2, -3, -4, -10]),
    Quintuple::primitive(14, [12, 1, -3, -4, -6]),
    Quintuple::primitive(15, [14, 1, -3, -5, -7]),
    Quintuple::primitive(16, [14, 3, -1, -7, -9]),
    Quintuple::primitive(17, [15, 7, -3, -5, -14]),
    Quintuple::primitive(18, [15, 1, -3, -5, -8]),
    Quintuple::primitive(19, [15, 2, -1, -6, -10]),
    Quintuple::primitive(20, [15, 4, -2, -5, -12]),
    Quintuple::primitive(21, [18, 1, -4, -6, -9]),
    Quintuple::primitive(22, [18, 2, -5, -6, -9]),
    Quintuple::primitive(23, [18, 4, -1, -9, -12]),
    Quintuple::primitive(24, [20, 1, -4, -7, -10]),
    Quintuple::primitive(25, [20, 1, -3, -8, -10]),
    Quintuple::primitive(26, [20, 3, -4, -9, -10]),
    Quintuple::primitive(27, [20, 3, -1, -10, -12]),
    Quintuple::primitive(28, [24, 1, -5, -8, -12]),
    Quintuple::primitive(29, [30, 1, -6, -10, -15]),
    // Index 2.
    Quintuple::shifted(1, [6, 1, -2, -2, -3], [1, 0, 0, 1, 0], 2, false),
    Quintuple::shifted(2, [4, 3, -1, -2, -4], [0, 0, 0, 1, 1], 2, false),
    Quintuple::shifted(3, [8, 1, -2, -3, -4], [0, 0, 1, 0, 1], 2, false),
    Quintuple::shifted(4, [6, 3, -1, -2, -6], [1, 0, 0, 1, 0], 2, false),
    Quintuple::shifted(5, [8, 3, -1, -4, -6], [0, 0, 0, 1, 1], 2, false),
    Quintuple::shifted(6, [12, 1, -3, -4, -6], [0, 0, 0, 1, 1], 2, false),
    // Index 3.
    Quintuple::shifted(7, [3, 1, -1, -1, -2], [0, 0, 1, 2, 0], 3, true),
    Quintuple::shifted(8, [3, 2, -1, -1, -3], [0, 0, 0, 2, 1], 3, true),
    Quintuple::shifted(9, [3, 2, -1, -2, -2], [0, 0, 0, 1, 2], 3, true),
    Quintuple::shifted(10, [4, 2, -1, -1, -4], [1, 0, 0, 2, 0], 3, true),
    Quintuple::shifted(11, [6, 1, -2, -2, -3], [0, 0, 0, 2, 1], 3, true),
    Quintuple::shifted(12, [6, 1, -1, -2, -4], [0, 0, 2, 0, 1], 3, true),
    Quintuple::shifted(13, [4, 3, -1, -2, -4], [0, 0, 2, 0, 1], 3, true),
    Quintuple::shifted(14, [6, 3, -1, -2, -6], [0, 1, 0, 1, 1], 3, true),
    // Index 4.
    Quintuple::shifted(15, [3, 2, -1, -1, -3], [1, 0, 0, 1, 2], 4, true),
    Quintuple::shifted(16, [6, 1, -1, -3, -3], [0, 1, 0, 1, 2], 4, true),
    // Index 6.
    Quintuple::shifted(17, [3, 1, -1, -1, -2], [0, 1, 0, 1, 4], 6, true),
];

/// The 29 primitive and 17 non-primitive rows, in table order.
pub fn quintuple_table() -> &'static [Quintuple] {
    &TABLE
}

pub fn lookup(id: QuintupleId) -> Option<&'static Quintuple> {
    TABLE.iter().find(|q| q.id == id)
}

fn row(id: QuintupleId) -> Result<&'static Quintuple> {
    lookup(id).ok_or_else(|| Error::UnknownQuintuple(id.to_string()))
}

fn check_apex(apex: usize) -> Result<usize> {
    if (1..=5).contains(&apex) {
        Ok(apex - 1)
    } else {
        Err(Error::ApexOutOfRange(apex))
    }
}

/// `base + V * modifier` for volume `V`. The entries are integers because
/// `V` must be a multiple of the row's denominator; they sum to a multiple
/// of `V` (zero for the primitive rows).
pub fn instantiate(id: QuintupleId, v: u64, sign: SignPattern) -> Result<[i64; 5]> {
    let q = row(id)?;
    if v == 0 || v as i64 % q.denominator != 0 {
        return Err(Error::Divisibility { id: id.to_string(), denominator: q.denominator, v });
    }
    let step = v as i64 / q.denominator;
    let step = if q.signed && sign == SignPattern::Minus { -step } else { step };
    let mut out = q.base;
    for (entry, m) in out.iter_mut().zip(q.modifier) {
        *entry += step * m;
    }
    Ok(out)
}

/// The generating point `(1/V) (a_i)_{i != l}` of the family member of
/// volume `V`, with the apex entry removed.
pub fn family_point(id: QuintupleId, apex: usize, v: u64, sign: SignPattern) -> Result<Vec<Rat>> {
    let l = check_apex(apex)?;
    let a = instantiate(id, v, sign)?;
    a.iter()
        .enumerate()
        .filter(|&(i, _)| i != l)
        .map(|(_, &x)| Rat::new(x as i128, v as i128))
        .collect()
}

/// Weighted blowup of `A^4` carried by the family member of volume `V`
/// with the apex at entry `l` (1-based), if there is one.
///
/// The apex entry must be a unit mod `V`; the tuple is rescaled so that it
/// becomes `-1`, the apex is dropped, and the remaining residues in
/// `[0, V)` are the weights provided they sum to `V + 1`, are all positive
/// and are jointly primitive.
pub fn blowup_from_quintuple(id: QuintupleId, apex: usize, v: u64, sign: SignPattern) -> Result<Option<WeightVector>> {
    let l = check_apex(apex)?;
    let a = instantiate(id, v, sign)?;
    let residues = a.map(|x| x.rem_euclid(v as i64) as u64);
    Ok(normalise_at_apex(&residues, l, v))
}

/// Shared with the sporadic records: rescale `residues` (mod `v`) so the
/// apex entry becomes `-1` and read off the other four as weights.
pub(crate) fn normalise_at_apex(residues: &[u64], apex: usize, v: u64) -> Option<WeightVector> {
    let unit = negated_inverse(residues[apex], v)?;
    let weights: Vec<u64> = residues
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != apex)
        .map(|(_, &b)| ((b as u128 * unit as u128) % v as u128) as u64)
        .collect();
    if weights.contains(&0) || weights.iter().sum::<u64>() != v + 1 {
        return None;
    }
    WeightVector::new(weights).ok()
}

/// `-x^{-1} mod v`, when `x` is a unit.
pub(crate) fn negated_inverse(x: u64, v: u64) -> Option<u64> {
    if v == 1 {
        return Some(0);
    }
    let e = (x as i128 % v as i128).extended_gcd(&(v as i128));
    if e.gcd != 1 {
        return None;
    }
    Some((-e.x).rem_euclid(v as i128) as u64)
}

/// `max_{i != l} -q_i / q_l` over the base entries, the smallest-weight
/// bound for blowups whose origin sits at apex `l`. Only the direction of
/// the family enters, so the modifier is ignored.
pub fn bound_dim1(id: QuintupleId, apex: usize) -> Result<Rat> {
    let l = check_apex(apex)?;
    let q = row(id)?;
    let a0 = q.base[l];
    if a0 == 0 {
        return Err(Error::ZeroApexEntry { id: id.to_string(), apex });
    }
    let mut best: Option<Rat> = None;
    for (i, &ai) in q.base.iter().enumerate() {
        if i == l {
            continue;
        }
        let ratio = Rat::new(-(ai as i128), a0 as i128)?;
        best = Some(best.map_or(ratio, |b| b.max(ratio)));
    }
    Ok(best.expect("four non-apex entries"))
}

/// If `sum_{i in J} p_i - s * sum_i p_i` is an integer, the weights satisfy
/// `sum_{i in J} n_i <= s` unless every weight outside `J` is zero; returns
/// that bound `s`. `subset` holds 1-based coordinate indices.
pub fn bound_subset(p: &[Rat], subset: &[usize], s: u64) -> Result<Option<u64>> {
    let d = p.len();
    let mut seen = vec![false; d];
    for &i in subset {
        if i == 0 || i > d || seen[i - 1] {
            return Err(Error::BadSubset(d));
        }
        seen[i - 1] = true;
    }
    if subset.is_empty() || subset.len() == d || s == 0 {
        return Err(Error::BadSubset(d));
    }
    let inside = Rat::sum(subset.iter().map(|&i| &p[i - 1]))?;
    let total = Rat::sum(p)?;
    let value = inside.sub(&total.mul(&Rat::integer(s as i128))?)?;
    Ok(value.is_integer().then_some(s))
}

/// `max{-q_1/q_3, -q_5/q_2} < 7` on the ordered base entries. When it holds,
/// every apex choice gives a smallest-weight bound of at most 6.
pub fn check_ratio_lemma(id: QuintupleId) -> Result<bool> {
    let q = row(id)?.base;
    Ok(q[0] < -7 * q[2] && -q[4] < 7 * q[1])
}

/// One `(row, apex, V, sign)` instance that produced a weighted blowup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyInstance {
    pub id: QuintupleId,
    pub apex: usize,
    #[serde(rename = "V")]
    pub v: u64,
    pub sign: SignPattern,
    pub weights: Vec<u64>,
    pub n_min: u64,
    pub terminal: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FamilyScanReport {
    /// `(row, apex, V, sign)` combinations with `V` admissible for the row.
    pub instances: u64,
    /// Instances for which the recipe produced weights.
    pub blowups: u64,
    pub terminal: u64,
    /// Largest smallest weight among terminal blowups.
    pub max_terminal_n_min: u64,
    /// Terminal blowups with smallest weight above the threshold.
    pub violations: Vec<FamilyInstance>,
}

/// Run the blowup recipe over `rows`, every apex and sign and every
/// admissible `V <= v_max`, classifying each blowup at `eps = 1`.
pub fn family_scan<'a>(
    rows: impl IntoIterator<Item = &'a Quintuple>,
    v_max: u64,
    threshold: u64,
    mut on_terminal: impl FnMut(&FamilyInstance),
) -> Result<FamilyScanReport> {
    let mut report = FamilyScanReport::default();
    for q in rows {
        for apex in 1..=5 {
            for &sign in q.signs() {
                for v in (1..=v_max).filter(|v| *v as i64 % q.denominator == 0) {
                    report.instances += 1;
                    let Some(n) = blowup_from_quintuple(q.id, apex, v, sign)? else {
                        continue;
                    };
                    report.blowups += 1;
                    let terminal = crate::classifier::is_terminal_fast(&n)?;
                    let inst = FamilyInstance {
                        id: q.id,
                        apex,
                        v,
                        sign,
                        n_min: n.n_min(),
                        weights: n.weights().to_vec(),
                        terminal,
                    };
                    if terminal {
                        report.terminal += 1;
                        report.max_terminal_n_min = report.max_terminal_n_min.max(inst.n_min);
                        on_terminal(&inst);
                        if inst.n_min > threshold {
                            report.violations.push(inst);
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Export the table as CSV: id, five base entries, five modifier numerators,
/// modifier denominator, and whether the modifier carries a `±`.
pub fn write_table_csv<W: Write>(out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record([
        "id", "q1", "q2", "q3", "q4", "q5", "r1", "r2", "r3", "r4", "r5", "denominator", "signed",
    ])
    .map_err(io)?;
    for q in quintuple_table() {
        let mut rec = vec![q.id.to_string()];
        rec.extend(q.base.iter().map(i64::to_string));
        rec.extend(q.modifier.iter().map(i64::to_string));
        rec.push(q.denominator.to_string());
        rec.push(q.signed.to_string());
        w.write_record(&rec).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}
