//! Facet widths and the `ell_L` bound for small projected configurations.
//!
//! A configuration is a list of integer points in `Z^k`, `k <= 3`, one of
//! which is marked as the image of the origin; the others are the images
//! `s_i` of the unit vectors. Facets of the convex hull are found by brute
//! force over `k`-subsets, which is cheap for the handful of points involved.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectedConfig {
    k: usize,
    points: Vec<Vec<i64>>,
    origin: usize,
}

/// A facet `{x : f(x) = c}` of the hull, with every point satisfying `f(x) <= c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetData {
    pub normal: Vec<i64>,
    pub offset: i64,
    /// Indices into the configuration of the points on the facet.
    pub incident: Vec<usize>,
}

impl FacetData {
    pub fn eval(&self, x: &[i64]) -> i64 {
        dot(&self.normal, x)
    }
}

impl ProjectedConfig {
    pub fn new(points: Vec<Vec<i64>>, origin: usize) -> Result<ProjectedConfig> {
        let k = points.first().map_or(0, Vec::len);
        if !(1..=3).contains(&k) {
            return Err(Error::UnsupportedDimension(k));
        }
        if let Some(bad) = points.iter().find(|p| p.len() != k) {
            return Err(Error::DimensionMismatch { expected: k, got: bad.len() });
        }
        if origin >= points.len() {
            return Err(Error::InvalidQuery(format!(
                "origin index {origin} out of range for {} points",
                points.len()
            )));
        }
        let rank = affine_rank(&points);
        if rank < k {
            return Err(Error::DegenerateSpan(rank));
        }
        Ok(ProjectedConfig { k, points, origin })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn origin_index(&self) -> usize {
        self.origin
    }

    pub fn origin(&self) -> &[i64] {
        &self.points[self.origin]
    }

    /// The points other than the origin image.
    pub fn others(&self) -> impl Iterator<Item = &[i64]> {
        let o = self.origin;
        self.points.iter().enumerate().filter(move |(i, _)| *i != o).map(|(_, p)| p.as_slice())
    }
}

/// All facets of the convex hull, sorted by normal then offset.
pub fn facets(s: &ProjectedConfig) -> Vec<FacetData> {
    let distinct: Vec<Vec<i64>> = s.points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let mut found: BTreeSet<(Vec<i64>, i64)> = BTreeSet::new();
    let mut consider = |normal: Vec<i64>| {
        if normal.iter().all(|&c| c == 0) {
            return;
        }
        let normal = primitive(normal);
        let values: Vec<i64> = distinct.iter().map(|p| dot(&normal, p)).collect();
        let (lo, hi) = (*values.iter().min().unwrap(), *values.iter().max().unwrap());
        let neg: Vec<i64> = normal.iter().map(|c| -c).collect();
        found.insert((normal, hi));
        found.insert((neg, -lo));
    };
    match s.k {
        1 => consider(vec![1]),
        2 => {
            for (i, a) in distinct.iter().enumerate() {
                for b in &distinct[i + 1..] {
                    consider(vec![-(b[1] - a[1]), b[0] - a[0]]);
                }
            }
        }
        _ => {
            for (i, a) in distinct.iter().enumerate() {
                for (j, b) in distinct.iter().enumerate().skip(i + 1) {
                    for c in &distinct[j + 1..] {
                        consider(cross(&sub(b, a), &sub(c, a)));
                    }
                }
            }
        }
    }
    // Every candidate above supports the hull; keep those whose contact set
    // has full affine dimension k - 1.
    found
        .into_iter()
        .filter_map(|(normal, offset)| {
            let incident: Vec<usize> =
                (0..s.points.len()).filter(|&i| dot(&normal, &s.points[i]) == offset).collect();
            let on: Vec<Vec<i64>> = incident.iter().map(|&i| s.points[i].clone()).collect();
            (affine_rank(&on) + 1 == s.k).then_some(FacetData { normal, offset, incident })
        })
        .collect()
}

/// Length of the interval `f(Conv S)` for the facet's primitive normal `f`.
pub fn facet_width(s: &ProjectedConfig, f: &FacetData) -> u64 {
    let values = s.points.iter().map(|p| f.eval(p));
    let (lo, hi) = values.fold((i64::MAX, i64::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)));
    (hi - lo) as u64
}

pub fn max_facet_width(s: &ProjectedConfig) -> u64 {
    facets(s).iter().map(|f| facet_width(s, f)).max().unwrap_or(0)
}

/// Per-facet ratio `min_{s_i off H} dist(H, 0) / dist(H, s_i)`.
pub fn ell_h(s: &ProjectedConfig, f: &FacetData) -> Result<Rat> {
    let gaps: Vec<i64> = s.others().map(|p| f.offset - f.eval(p)).filter(|&g| g > 0).collect();
    if gaps.is_empty() {
        return Err(Error::FacetContainsAll { normal: f.normal.clone() });
    }
    let origin_gap = f.offset - f.eval(s.origin());
    if origin_gap == 0 {
        return Ok(Rat::ZERO);
    }
    let max_gap = *gaps.iter().max().unwrap();
    Rat::new(origin_gap as i128, max_gap as i128)
}

/// `max_H ell_H` over all facets.
pub fn ell_l(s: &ProjectedConfig) -> Result<Rat> {
    let mut best = Rat::ZERO;
    for f in facets(s) {
        best = best.max(ell_h(s, &f)?);
    }
    Ok(best)
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn cross(a: &[i64], b: &[i64]) -> Vec<i64> {
    vec![a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn primitive(v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &c| g.gcd(&c));
    v.into_iter().map(|c| c / g).collect()
}

/// Affine rank of a point list, by fraction-free elimination on differences.
fn affine_rank(points: &[Vec<i64>]) -> usize {
    let Some(first) = points.first() else { return 0 };
    let mut rows: Vec<Vec<i128>> =
        points[1..].iter().map(|p| p.iter().zip(first).map(|(a, b)| (a - b) as i128).collect()).collect();
    let cols = first.len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, pivot);
        for r in rank + 1..rows.len() {
            let (a, b) = (rows[rank][col], rows[r][col]);
            for c in 0..cols {
                rows[r][c] = rows[r][c] * a - rows[rank][c] * b;
            }
            let g = rows[r].iter().fold(0i128, |g, &x| g.gcd(&x));
            if g > 1 {
                rows[r].iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}
