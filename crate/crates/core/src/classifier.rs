//! Terminal / canonical verdicts for weighted blowups.
//!
//! [`classify`] is the geometric decision procedure: it walks the points of
//! `Z^d + Z p` inside the shrunk simplex. The `*_fast` predicates are the
//! `eps = 1` specialisation written directly on residues `k n_i mod V`; the
//! census relies on them, and the test suite checks them against
//! [`classify`] over exhaustive ranges.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactgeom::{
    brute_force_lattice_points, scan_lattice_points, LatticeWitness, MembershipClass, ShrunkSimplex, WeightVector,
};
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityClass {
    pub eps: Rat,
    pub eps_log_terminal: bool,
    pub eps_log_canonical: bool,
    /// First offending lattice point (smallest `k`, then smallest `z`).
    /// Interior when canonicity fails, otherwise a non-vertex boundary point.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<LatticeWitness>,
}

impl SingularityClass {
    pub fn is_terminal(&self) -> bool {
        self.eps_log_terminal
    }
}

/// Decide eps-log terminality and eps-log canonicity of the blowup with
/// weights `n`.
pub fn classify(n: &WeightVector, eps: Rat) -> Result<SingularityClass> {
    n.require_positive()?;
    let simplex = ShrunkSimplex::from_weights(n, eps)?;
    let mut boundary: Option<LatticeWitness> = None;
    let mut interior: Option<LatticeWitness> = None;
    scan_lattice_points(&simplex, |w| {
        match w.class {
            MembershipClass::Interior => {
                interior = Some(w);
                return Ok(false);
            }
            MembershipClass::BoundaryNonVertex if boundary.is_none() => boundary = Some(w),
            _ => {}
        }
        Ok(true)
    })?;
    let eps_log_canonical = interior.is_none();
    let eps_log_terminal = eps_log_canonical && boundary.is_none();
    Ok(SingularityClass {
        eps,
        eps_log_terminal,
        eps_log_canonical,
        witness: interior.or(boundary),
    })
}

/// `(eps_log_terminal, eps_log_canonical)` read off the original-coordinates
/// brute-force scan. Slow; meant for cross-checking [`classify`].
pub fn oracle_verdict(n: &WeightVector, eps: Rat, cap: u64) -> Result<(bool, bool)> {
    n.require_positive()?;
    let points = brute_force_lattice_points(n, eps, cap)?;
    let canonical = !points.iter().any(|p| p.class == MembershipClass::Interior);
    let terminal = canonical && !points.iter().any(|p| p.class == MembershipClass::BoundaryNonVertex);
    Ok((terminal, canonical))
}

/// Terminal at `eps = 1`: every `k` in `1..V` has `sum_i (k n_i mod V) > V`.
pub fn is_terminal_fast(n: &WeightVector) -> Result<bool> {
    n.require_positive()?;
    Ok(first_terminal_failure(n).is_none())
}

/// Smallest `k` violating the terminal residue condition, if any.
pub fn first_terminal_failure(n: &WeightVector) -> Option<u64> {
    let v = n.index();
    let weights = n.weights();
    (1..v).find(|&k| {
        let sum: u64 = weights.iter().map(|&w| mul_mod(k, w, v)).sum();
        sum <= v
    })
}

/// Canonical at `eps = 1`: for every `k` in `1..V`, either the residues sum
/// to at least `V` or some residue vanishes. A vanishing residue puts the
/// coset representative on a coordinate facet, which is boundary, not
/// interior.
pub fn is_canonical_fast(n: &WeightVector) -> Result<bool> {
    n.require_positive()?;
    let v = n.index();
    let weights = n.weights();
    Ok((1..v).all(|k| {
        let mut sum = 0u64;
        for &w in weights {
            let r = mul_mod(k, w, v);
            if r == 0 {
                return true;
            }
            sum += r;
        }
        sum >= v
    }))
}

/// In dimension 3: the sorted weights are `(1, a, b)` with `gcd(a, b) = 1`.
pub fn kawakita_form(n: &WeightVector) -> Result<bool> {
    if n.dim() != 3 {
        return Err(Error::WrongDimension { expected: 3, got: n.dim() });
    }
    n.require_positive()?;
    let s = n.sorted();
    let w = s.weights();
    Ok(w[0] == 1 && w[1].gcd(&w[2]) == 1)
}

#[inline]
fn mul_mod(k: u64, w: u64, v: u64) -> u64 {
    ((k as u128 * w as u128) % v as u128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::classify_point;

    fn wv(w: &[u64]) -> WeightVector {
        WeightVector::new(w.to_vec()).unwrap()
    }

    fn r(n: i128, d: i128) -> Rat {
        Rat::new(n, d).unwrap()
    }

    #[test]
    fn classify_examples() {
        let c = classify(&wv(&[6, 10, 15, 7]), Rat::ONE).unwrap();
        assert!(c.eps_log_terminal && c.eps_log_canonical && c.witness.is_none());

        assert!(!classify(&wv(&[2, 3, 5]), Rat::ONE).unwrap().eps_log_terminal);

        let c = classify(&wv(&[1, 2]), Rat::ONE).unwrap();
        assert!(!c.eps_log_terminal);
        assert!(c.eps_log_canonical);
        let w = c.witness.unwrap();
        assert_eq!(w.point, vec![r(1, 2), Rat::ZERO]);
        assert_eq!(w.class, MembershipClass::BoundaryNonVertex);

        let c = classify(&wv(&[1, 2]), r(1, 2)).unwrap();
        assert!(c.eps_log_terminal && c.eps_log_canonical);
    }

    #[test]
    fn classify_rejects_bad_input() {
        assert!(matches!(classify(&wv(&[0, 1, 2]), Rat::ONE), Err(Error::ZeroWeight(_))));
        assert!(matches!(classify(&wv(&[1, 2]), Rat::ZERO), Err(Error::EpsilonOutOfRange(_))));
        assert!(matches!(classify(&wv(&[1, 2]), r(5, 4)), Err(Error::EpsilonOutOfRange(_))));
    }

    #[test]
    fn witness_rechecks() {
        for w in [&[2u64, 3, 5][..], &[1, 2], &[2, 2, 3], &[3, 4, 5, 7]] {
            for eps in [Rat::ONE, r(1, 2), r(2, 3)] {
                let n = wv(w);
                let c = classify(&n, eps).unwrap();
                if let Some(wit) = c.witness {
                    let s = ShrunkSimplex::from_weights(&n, eps).unwrap();
                    let class = classify_point(&wit.point, &s).unwrap();
                    assert_eq!(class, wit.class);
                    if !c.eps_log_canonical {
                        assert_eq!(class, MembershipClass::Interior);
                    } else {
                        assert_eq!(class, MembershipClass::BoundaryNonVertex);
                    }
                }
            }
        }
    }

    #[test]
    fn fast_path_examples() {
        assert!(is_terminal_fast(&wv(&[1, 1, 2, 2])).unwrap());
        assert!(!is_terminal_fast(&wv(&[1, 2])).unwrap());
        assert!(is_terminal_fast(&wv(&[1, 1, 1])).unwrap());
        assert_eq!(first_terminal_failure(&wv(&[1, 2])), Some(1));

        // The coordinate-facet case: sum 1/2 < 1 but the residue of the
        // second weight is zero, so the point is on the boundary.
        assert!(is_canonical_fast(&wv(&[1, 2])).unwrap());
        assert!(is_canonical_fast(&wv(&[1, 1, 4])).unwrap());
        assert!(WeightVector::new(vec![2, 2, 2]).is_err());
    }

    #[test]
    fn kawakita_examples() {
        assert!(kawakita_form(&wv(&[1, 2, 3])).unwrap());
        assert!(kawakita_form(&wv(&[3, 1, 2])).unwrap());
        assert!(!kawakita_form(&wv(&[2, 3, 5])).unwrap());
        assert!(!kawakita_form(&wv(&[1, 2, 4])).unwrap());
        assert!(matches!(kawakita_form(&wv(&[1, 2])), Err(Error::WrongDimension { .. })));
    }

    #[test]
    fn fast_paths_agree_with_geometry_small() {
        for v in 1..=40u64 {
            for d in 2..=4usize {
                for n in crate::search::enumerate_blowups(d, v) {
                    let c = classify(&n, Rat::ONE).unwrap();
                    assert_eq!(is_terminal_fast(&n).unwrap(), c.eps_log_terminal, "{n}");
                    assert_eq!(is_canonical_fast(&n).unwrap(), c.eps_log_canonical, "{n}");
                }
            }
        }
    }
}
