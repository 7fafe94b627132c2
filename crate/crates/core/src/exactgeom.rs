//! Weight vectors, the shrunk standard simplex and the lattice `Z^d + Z p`.
//!
//! A weight vector `n` with index `V = sum(n) - 1` has generating point
//! `p = n / V`. The blowup is governed by which points of the group
//! `Z^d + Z p` fall inside `p + eps * (Delta - p)`, where `Delta` is the
//! standard simplex `Conv(0, e_1, ..., e_d)`.
//!
//! Everything here is exact. Lattice enumeration works on integers scaled
//! by the common denominator `b * V` (for `eps = a / b`) and only builds
//! [`Rat`] coordinates for the points it returns.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Default cap on `V` for [`brute_force_lattice_points`].
pub const ORACLE_DEFAULT_CAP: u64 = 60;

/// A primitive nonnegative weight vector `n` with `sum(n) >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightVector {
    weights: Vec<u64>,
    #[serde(rename = "V")]
    index: u64,
}

impl WeightVector {
    pub fn new(weights: Vec<u64>) -> Result<WeightVector> {
        if weights.len() < 2 {
            return Err(Error::DimensionTooSmall(weights.len()));
        }
        let sum = weights
            .iter()
            .try_fold(0u64, |acc, &w| acc.checked_add(w))
            .ok_or(Error::Overflow)?;
        if sum < 2 {
            return Err(Error::IndexTooSmall(weights));
        }
        // Keep k * n_i for k < V comfortably inside i128 after scaling.
        if sum > 1 << 40 {
            return Err(Error::Overflow);
        }
        if weights.iter().fold(0u64, |g, &w| g.gcd(&w)) != 1 {
            return Err(Error::NotPrimitive(weights));
        }
        Ok(WeightVector { weights, index: sum - 1 })
    }

    /// Like [`WeightVector::new`] but additionally rejects zero weights, as
    /// every classification entry point does.
    pub fn positive(weights: Vec<u64>) -> Result<WeightVector> {
        let w = WeightVector::new(weights)?;
        w.require_positive()?;
        Ok(w)
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// The index `V = sum(n) - 1`.
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn n_min(&self) -> u64 {
        self.weights.iter().copied().min().unwrap_or(0)
    }

    pub fn require_positive(&self) -> Result<()> {
        if self.weights.contains(&0) {
            Err(Error::ZeroWeight(self.weights.clone()))
        } else {
            Ok(())
        }
    }

    /// The nondecreasing representative of the permutation class.
    pub fn sorted(&self) -> WeightVector {
        let mut weights = self.weights.clone();
        weights.sort_unstable();
        WeightVector { weights, index: self.index }
    }

    pub fn generating_point(&self) -> GeneratingPoint {
        GeneratingPoint::new(self.clone())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// `p = n / V`, a point of `Omega = { x >= 0, sum(x) > 1 }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingPoint {
    weights: WeightVector,
    coords: Vec<Rat>,
}

impl GeneratingPoint {
    pub fn new(weights: WeightVector) -> GeneratingPoint {
        let v = weights.index() as i128;
        let coords = weights
            .weights()
            .iter()
            .map(|&w| Rat::new(w as i128, v).expect("V >= 1"))
            .collect();
        GeneratingPoint { weights, coords }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn index(&self) -> u64 {
        self.weights.index()
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// `Delta_{p,eps} = p + eps (Delta - p)`, with `eps` rational in `(0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShrunkSimplex {
    point: GeneratingPoint,
    eps: Rat,
}

impl ShrunkSimplex {
    pub fn new(point: GeneratingPoint, eps: Rat) -> Result<ShrunkSimplex> {
        check_epsilon(&eps)?;
        Ok(ShrunkSimplex { point, eps })
    }

    pub fn from_weights(n: &WeightVector, eps: Rat) -> Result<ShrunkSimplex> {
        ShrunkSimplex::new(n.generating_point(), eps)
    }

    pub fn point(&self) -> &GeneratingPoint {
        &self.point
    }

    pub fn eps(&self) -> Rat {
        self.eps
    }

    pub fn dim(&self) -> usize {
        self.point.dim()
    }

    /// The vertex `(1 - eps) p`, image of the origin.
    pub fn apex(&self) -> Result<Vec<Rat>> {
        let shrink = Rat::ONE.sub(&self.eps)?;
        self.point.coords().iter().map(|c| c.mul(&shrink)).collect()
    }

    /// All `d + 1` vertices, apex first, then `p + eps (e_i - p)`.
    pub fn vertices(&self) -> Result<Vec<Vec<Rat>>> {
        let apex = self.apex()?;
        let mut out = Vec::with_capacity(self.dim() + 1);
        out.push(apex.clone());
        for i in 0..self.dim() {
            let mut v = apex.clone();
            v[i] = v[i].add(&self.eps)?;
            out.push(v);
        }
        Ok(out)
    }
}

pub fn check_epsilon(eps: &Rat) -> Result<()> {
    if !eps.is_positive() || eps.cmp_int(1).is_gt() {
        return Err(Error::EpsilonOutOfRange(eps.to_string()));
    }
    Ok(())
}

/// Position of a point relative to a closed simplex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MembershipClass {
    Outside,
    Interior,
    BoundaryNonVertex,
    Vertex,
}

impl MembershipClass {
    pub fn in_closed(self) -> bool {
        self != MembershipClass::Outside
    }

    /// Classify from barycentric coordinates (any common positive scale).
    fn from_barycentric<T: Ord + Default + Copy>(coords: &[T]) -> MembershipClass {
        let zero = T::default();
        if coords.iter().any(|&c| c < zero) {
            return MembershipClass::Outside;
        }
        let zeros = coords.iter().filter(|&&c| c == zero).count();
        match zeros {
            0 => MembershipClass::Interior,
            z if z + 1 == coords.len() => MembershipClass::Vertex,
            _ => MembershipClass::BoundaryNonVertex,
        }
    }
}

impl fmt::Display for MembershipClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MembershipClass::Outside => "outside",
            MembershipClass::Interior => "interior",
            MembershipClass::BoundaryNonVertex => "boundary",
            MembershipClass::Vertex => "vertex",
        };
        f.write_str(s)
    }
}

/// A point `k p + z` of `Z^d + Z p`, with its position in the simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeWitness {
    pub k: u64,
    pub z: Vec<i64>,
    pub point: Vec<Rat>,
    pub class: MembershipClass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Interior points only.
    Open,
    /// Every point of the closed simplex.
    Closed,
}

/// The canonical representative of `k p` modulo `Z^d`: `({k n_i / V})_i`.
pub fn frac_point(n: &WeightVector, k: u64) -> Result<Vec<Rat>> {
    let v = n.index();
    if k == 0 || k >= v {
        return Err(Error::CosetOutOfRange { k, max: v.saturating_sub(1) });
    }
    Ok(residues(n, k)
        .map(|r| Rat::new(r as i128, v as i128).expect("V >= 1"))
        .collect())
}

fn residues(n: &WeightVector, k: u64) -> impl Iterator<Item = u64> + '_ {
    let v = n.index() as u128;
    n.weights()
        .iter()
        .map(move |&w| ((k as u128 * w as u128) % v) as u64)
}

/// Exact position of `x` relative to `s`.
pub fn classify_point(x: &[Rat], s: &ShrunkSimplex) -> Result<MembershipClass> {
    if x.len() != s.dim() {
        return Err(Error::DimensionMismatch { expected: s.dim(), got: x.len() });
    }
    let apex = s.apex()?;
    let mut bary = Vec::with_capacity(x.len() + 1);
    for (xi, ai) in x.iter().zip(&apex) {
        bary.push(xi.sub(ai)?.div(&s.eps())?);
    }
    let rest = Rat::ONE.sub(&Rat::sum(&bary)?)?;
    bary.push(rest);
    Ok(MembershipClass::from_barycentric(&bary))
}

/// Scaled integer description of `Delta_{p,eps}`: coordinates multiplied
/// by `scale = b V` where `eps = a / b`.
struct ScaledSimplex {
    v: i128,
    b: i128,
    /// `a V`, the scaled edge length.
    edge: i128,
    /// `(b - a) n_i`, the scaled apex.
    lower: Vec<i128>,
}

impl ScaledSimplex {
    fn new(s: &ShrunkSimplex) -> Result<ScaledSimplex> {
        let v = s.point().index() as i128;
        let (a, b) = (s.eps().numer(), s.eps().denom());
        let edge = a.checked_mul(v).ok_or(Error::Overflow)?;
        let lower = s
            .point()
            .weights()
            .weights()
            .iter()
            .map(|&w| (b - a).checked_mul(w as i128).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(ScaledSimplex { v, b, edge, lower })
    }

    /// Integers `z` with `r / V + z` inside the axis interval
    /// `[(1 - eps) p_i, (1 - eps) p_i + eps]`.
    fn axis_candidates(&self, axis: usize, residue: i128) -> Result<(i128, i128)> {
        let bv = self.b.checked_mul(self.v).ok_or(Error::Overflow)?;
        let br = self.b.checked_mul(residue).ok_or(Error::Overflow)?;
        let lo = self.lower[axis].checked_sub(br).ok_or(Error::Overflow)?;
        let hi = lo.checked_add(self.edge).ok_or(Error::Overflow)?;
        Ok((Integer::div_ceil(&lo, &bv), Integer::div_floor(&hi, &bv)))
    }
}

/// All points of `Z^d + Z p` in `s` (interior only for [`Mode::Open`]),
/// ordered by `k`, then lexicographically by `z`.
pub fn lattice_points_in_shrunk_simplex(s: &ShrunkSimplex, mode: Mode) -> Result<Vec<LatticeWitness>> {
    let mut out = Vec::new();
    scan_lattice_points(s, |w| {
        let keep = match mode {
            Mode::Open => w.class == MembershipClass::Interior,
            Mode::Closed => w.class.in_closed(),
        };
        if keep {
            out.push(w);
        }
        Ok(true)
    })?;
    Ok(out)
}

/// Visit every point of `Z^d + Z p` inside the closed simplex in canonical
/// order; the visitor returns `false` to stop early.
pub(crate) fn scan_lattice_points(
    s: &ShrunkSimplex,
    mut visit: impl FnMut(LatticeWitness) -> Result<bool>,
) -> Result<()> {
    let scaled = ScaledSimplex::new(s)?;
    let n = s.point().weights();
    let d = n.dim();
    let v = n.index();
    let mut ranges = Vec::with_capacity(d);
    let mut bases = Vec::with_capacity(d);
    for k in 0..v {
        ranges.clear();
        bases.clear();
        let mut empty = false;
        for (axis, r) in residues(n, k).enumerate() {
            let r = r as i128;
            let (lo, hi) = scaled.axis_candidates(axis, r)?;
            if lo > hi {
                empty = true;
                break;
            }
            ranges.push((lo, hi));
            bases.push(r);
        }
        if empty {
            continue;
        }
        let mut z: Vec<i128> = ranges.iter().map(|r| r.0).collect();
        'odometer: loop {
            if let Some(w) = evaluate(&scaled, k, &bases, &z)? {
                if !visit(w)? {
                    return Ok(());
                }
            }
            // Last axis fastest, so z comes out in lexicographic order.
            let mut axis = d;
            loop {
                if axis == 0 {
                    break 'odometer;
                }
                axis -= 1;
                if z[axis] < ranges[axis].1 {
                    z[axis] += 1;
                    for later in axis + 1..d {
                        z[later] = ranges[later].0;
                    }
                    break;
                }
            }
        }
    }
    Ok(())
}

fn evaluate(scaled: &ScaledSimplex, k: u64, residues: &[i128], z: &[i128]) -> Result<Option<LatticeWitness>> {
    let mut bary = Vec::with_capacity(z.len() + 1);
    let mut total: i128 = 0;
    for ((&r, &zi), &lo) in residues.iter().zip(z).zip(&scaled.lower) {
        let numer = zi
            .checked_mul(scaled.v)
            .and_then(|t| t.checked_add(r))
            .ok_or(Error::Overflow)?;
        let y = numer
            .checked_mul(scaled.b)
            .and_then(|t| t.checked_sub(lo))
            .ok_or(Error::Overflow)?;
        total = total.checked_add(y).ok_or(Error::Overflow)?;
        bary.push(y);
    }
    bary.push(scaled.edge - total);
    let class = MembershipClass::from_barycentric(&bary);
    if class == MembershipClass::Outside {
        return Ok(None);
    }
    let point = residues
        .iter()
        .zip(z)
        .map(|(&r, &zi)| Rat::new(r + zi * scaled.v, scaled.v))
        .collect::<Result<Vec<_>>>()?;
    let z = z
        .iter()
        .map(|&zi| i64::try_from(zi).map_err(|_| Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(LatticeWitness { k, z, point, class }))
}

/// An integer point of `eps * Conv(e_1, ..., e_d, n)` in the original
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OraclePoint {
    pub coords: Vec<i64>,
    pub class: MembershipClass,
}

/// Scan the integer bounding box of `eps * Conv(e_1, ..., e_d, n)` and
/// label every lattice point inside by exact barycentric coordinates.
///
/// This works in the original coordinates of the blowup and shares no code
/// with [`lattice_points_in_shrunk_simplex`]; it exists to cross-check it.
pub fn brute_force_lattice_points(n: &WeightVector, eps: Rat, cap: u64) -> Result<Vec<OraclePoint>> {
    check_epsilon(&eps)?;
    let v = n.index();
    if v > cap {
        return Err(Error::OracleCapExceeded { v, cap });
    }
    let d = n.dim();
    let upper: Vec<i64> = n
        .weights()
        .iter()
        .map(|&w| Rat::integer(w.max(1) as i128).mul(&eps).map(|r| r.floor() as i64))
        .collect::<Result<_>>()?;
    let vr = Rat::integer(v as i128);
    let mut out = Vec::new();
    let mut x = vec![0i64; d];
    loop {
        let scaled: Vec<Rat> = x
            .iter()
            .map(|&c| Rat::integer(c as i128).div(&eps))
            .collect::<Result<_>>()?;
        // x / eps = sum(lambda_i e_i) + mu n with sum(lambda) + mu = 1.
        let mu = Rat::sum(&scaled)?.sub(&Rat::ONE)?.div(&vr)?;
        let mut bary = Vec::with_capacity(d + 1);
        for (s, &w) in scaled.iter().zip(n.weights()) {
            bary.push(s.sub(&mu.mul(&Rat::integer(w as i128))?)?);
        }
        bary.push(mu);
        let class = MembershipClass::from_barycentric(&bary);
        if class.in_closed() {
            out.push(OraclePoint { coords: x.clone(), class });
        }
        let mut axis = d;
        loop {
            if axis == 0 {
                return Ok(out);
            }
            axis -= 1;
            if x[axis] < upper[axis] {
                x[axis] += 1;
                break;
            }
            x[axis] = 0;
        }
    }
}

/// The affine map fixing every `e_i` and sending `n` to the origin; it
/// sends the origin to `p` and carries `Z^d` onto `Z^d + Z p`.
pub fn to_generating_frame(n: &WeightVector, x: &[i64]) -> Result<Vec<Rat>> {
    if x.len() != n.dim() {
        return Err(Error::DimensionMismatch { expected: n.dim(), got: x.len() });
    }
    let p = n.generating_point();
    let shift = Rat::integer(x.iter().map(|&c| c as i128).sum::<i128>() - 1);
    x.iter()
        .zip(p.coords())
        .map(|(&c, pc)| Rat::integer(c as i128).sub(&pc.mul(&shift)?))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(w: &[u64]) -> WeightVector {
        WeightVector::new(w.to_vec()).unwrap()
    }

    fn r(n: i128, d: i128) -> Rat {
        Rat::new(n, d).unwrap()
    }

    #[test]
    fn weight_vector_invariants() {
        assert_eq!(wv(&[1, 2, 3]).index(), 5);
        assert!(matches!(WeightVector::new(vec![2, 2, 2]), Err(Error::NotPrimitive(_))));
        assert!(matches!(WeightVector::new(vec![1, 0]), Err(Error::IndexTooSmall(_))));
        assert!(matches!(WeightVector::new(vec![5]), Err(Error::DimensionTooSmall(1))));
        assert!(matches!(WeightVector::positive(vec![0, 1, 2]), Err(Error::ZeroWeight(_))));
        assert!(WeightVector::new(vec![0, 1, 2]).is_ok());
    }

    #[test]
    fn generating_point_sums_to_one_plus_inverse_index() {
        let p = wv(&[6, 10, 15, 7]).generating_point();
        assert_eq!(Rat::sum(p.coords()).unwrap(), r(38, 37));
    }

    #[test]
    fn frac_point_examples() {
        assert_eq!(frac_point(&wv(&[1, 2, 3]), 1).unwrap(), vec![r(1, 5), r(2, 5), r(3, 5)]);
        assert_eq!(
            frac_point(&wv(&[1, 1, 2, 2]), 3).unwrap(),
            vec![r(3, 5), r(3, 5), r(1, 5), r(1, 5)]
        );
        assert_eq!(
            frac_point(&wv(&[6, 10, 15, 7]), 36).unwrap(),
            vec![r(31, 37), r(27, 37), r(22, 37), r(30, 37)]
        );
        assert!(frac_point(&wv(&[1, 2, 3]), 0).is_err());
        assert!(frac_point(&wv(&[1, 2, 3]), 5).is_err());
    }

    #[test]
    fn shrunk_simplex_at_one_is_standard() {
        let s = ShrunkSimplex::from_weights(&wv(&[1, 2, 3]), Rat::ONE).unwrap();
        let v = s.vertices().unwrap();
        assert_eq!(v[0], vec![Rat::ZERO; 3]);
        assert_eq!(v[2], vec![Rat::ZERO, Rat::ONE, Rat::ZERO]);
        assert!(ShrunkSimplex::from_weights(&wv(&[1, 2]), Rat::ZERO).is_err());
        assert!(ShrunkSimplex::from_weights(&wv(&[1, 2]), r(3, 2)).is_err());
    }

    #[test]
    fn classify_point_examples() {
        let half = ShrunkSimplex::from_weights(&wv(&[1, 2]), r(1, 2)).unwrap();
        let apex = half.apex().unwrap();
        assert_eq!(classify_point(&apex, &half).unwrap(), MembershipClass::Vertex);
        assert_eq!(classify_point(&[r(1, 2), Rat::ONE], &half).unwrap(), MembershipClass::Outside);

        let full = ShrunkSimplex::from_weights(&wv(&[1, 2]), Rat::ONE).unwrap();
        assert_eq!(
            classify_point(&[r(1, 2), Rat::ZERO], &full).unwrap(),
            MembershipClass::BoundaryNonVertex
        );
        assert_eq!(classify_point(&[r(1, 4), r(1, 4)], &full).unwrap(), MembershipClass::Interior);
        assert!(matches!(
            classify_point(&[Rat::ZERO], &full),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn lattice_points_one_two() {
        let s = ShrunkSimplex::from_weights(&wv(&[1, 2]), Rat::ONE).unwrap();
        let pts = lattice_points_in_shrunk_simplex(&s, Mode::Closed).unwrap();
        assert!(pts.iter().all(|w| w.class != MembershipClass::Interior));
        let hit = pts.iter().find(|w| w.k == 1).unwrap();
        assert_eq!(hit.z, vec![0, 0]);
        assert_eq!(hit.point, vec![r(1, 2), Rat::ZERO]);
        assert_eq!(hit.class, MembershipClass::BoundaryNonVertex);
        // k = 0 contributes the three vertices of the standard triangle.
        assert_eq!(pts.iter().filter(|w| w.class == MembershipClass::Vertex).count(), 3);
        assert!(lattice_points_in_shrunk_simplex(&s, Mode::Open).unwrap().is_empty());
    }

    #[test]
    fn lattice_points_one_one_one() {
        let s = ShrunkSimplex::from_weights(&wv(&[1, 1, 1]), Rat::ONE).unwrap();
        let pts = lattice_points_in_shrunk_simplex(&s, Mode::Closed).unwrap();
        assert!(pts.iter().all(|w| w.class == MembershipClass::Vertex));
        assert!(pts.iter().all(|w| w.k == 0));
    }

    #[test]
    fn index_one_has_no_nontrivial_cosets() {
        for mode in [Mode::Open, Mode::Closed] {
            let s = ShrunkSimplex::from_weights(&wv(&[1, 1]), r(1, 2)).unwrap();
            let pts = lattice_points_in_shrunk_simplex(&s, mode).unwrap();
            assert!(pts.iter().all(|w| w.k == 0));
        }
    }

    #[test]
    fn axis_search_examines_at_most_two_integers() {
        for w in [&[1u64, 2, 3][..], &[2, 3, 5, 7], &[1, 1, 4]] {
            let n = wv(w);
            for eps in [Rat::ONE, r(1, 2), r(1, 3), r(2, 3), r(5, 7)] {
                let s = ShrunkSimplex::from_weights(&n, eps).unwrap();
                let scaled = ScaledSimplex::new(&s).unwrap();
                for k in 0..n.index() {
                    for (axis, res) in residues(&n, k).enumerate() {
                        let (lo, hi) = scaled.axis_candidates(axis, res as i128).unwrap();
                        let count = (hi - lo + 1).max(0);
                        assert!(count <= 2);
                        // Endpoints of the interval, unscaled.
                        let p = s.point().coords()[axis];
                        let low = Rat::ONE.sub(&eps).unwrap().mul(&p).unwrap();
                        let high = low.add(&eps).unwrap();
                        let frac = Rat::new(res as i128, n.index() as i128).unwrap();
                        let a = low.sub(&frac).unwrap();
                        let b = high.sub(&frac).unwrap();
                        if eps < Rat::ONE && !a.is_integer() && !b.is_integer() {
                            assert!(count <= 1);
                            // A window of length < 1 with non-integer ends holds
                            // exactly one integer iff floor(b) > floor(a).
                            assert_eq!(count, (b.floor() - a.floor()) as i128);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn brute_force_examples() {
        let pts = brute_force_lattice_points(&wv(&[1, 2]), Rat::ONE, ORACLE_DEFAULT_CAP).unwrap();
        let coords: Vec<_> = pts.iter().map(|p| (p.coords.clone(), p.class)).collect();
        assert_eq!(
            coords,
            vec![
                (vec![0, 1], MembershipClass::Vertex),
                (vec![1, 0], MembershipClass::Vertex),
                (vec![1, 1], MembershipClass::BoundaryNonVertex),
                (vec![1, 2], MembershipClass::Vertex),
            ]
        );
        for w in [&[1u64, 1, 1][..], &[1, 2, 3]] {
            let pts = brute_force_lattice_points(&wv(w), Rat::ONE, ORACLE_DEFAULT_CAP).unwrap();
            assert_eq!(pts.len(), 4);
            assert!(pts.iter().all(|p| p.class == MembershipClass::Vertex));
        }
        assert!(matches!(
            brute_force_lattice_points(&wv(&[1, 70]), Rat::ONE, ORACLE_DEFAULT_CAP),
            Err(Error::OracleCapExceeded { v: 70, cap: 60 })
        ));
    }

    #[test]
    fn change_of_frame_sends_n_to_origin() {
        let n = wv(&[1, 2, 3]);
        assert_eq!(to_generating_frame(&n, &[1, 2, 3]).unwrap(), vec![Rat::ZERO; 3]);
        assert_eq!(to_generating_frame(&n, &[0, 1, 0]).unwrap(), vec![Rat::ZERO, Rat::ONE, Rat::ZERO]);
        assert_eq!(to_generating_frame(&n, &[0, 0, 0]).unwrap(), n.generating_point().coords().to_vec());
    }
}
