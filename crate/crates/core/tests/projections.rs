use proptest::prelude::*;
use toric_blowups::projections::{ell_l, facet_width, facets, max_facet_width, ProjectedConfig};
use toric_blowups::{Error, Rat};

fn apply(m: &[[i64; 2]; 2], points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    points.iter().map(|p| vec![m[0][0] * p[0] + m[0][1] * p[1], m[1][0] * p[0] + m[1][1] * p[1]]).collect()
}

fn config_2d() -> impl Strategy<Value = (Vec<Vec<i64>>, usize)> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, 2), 3..=6)
        .prop_flat_map(|pts| {
            let len = pts.len();
            (Just(pts), 0..len)
        })
        .prop_filter("spans the plane and every facet misses some s_i", |(pts, o)| {
            ProjectedConfig::new(pts.clone(), *o).map(|s| ell_l(&s).is_ok()).unwrap_or(false)
        })
}

fn matrix() -> impl Strategy<Value = [[i64; 2]; 2]> {
    [[-3i64..=3, -3i64..=3], [-3i64..=3, -3i64..=3]]
        .prop_filter("invertible", |m| m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, ..ProptestConfig::default() })]

    #[test]
    fn ell_is_linear_invariant((pts, o) in config_2d(), m in matrix()) {
        let s = ProjectedConfig::new(pts.clone(), o).unwrap();
        let t = ProjectedConfig::new(apply(&m, &pts), o).unwrap();
        prop_assert_eq!(ell_l(&s).unwrap(), ell_l(&t).unwrap());
    }

    #[test]
    fn widths_are_unimodular_invariant((pts, o) in config_2d(), a in -3i64..=3, b in -3i64..=3) {
        // (1 a; 0 1)(1 0; b 1) has determinant 1.
        let m = [[1 + a * b, a], [b, 1]];
        let s = ProjectedConfig::new(pts.clone(), o).unwrap();
        let t = ProjectedConfig::new(apply(&m, &pts), o).unwrap();
        let mut ws: Vec<u64> = facets(&s).iter().map(|f| facet_width(&s, f)).collect();
        let mut wt: Vec<u64> = facets(&t).iter().map(|f| facet_width(&t, f)).collect();
        ws.sort_unstable();
        wt.sort_unstable();
        prop_assert_eq!(ws, wt);
    }

    #[test]
    fn ell_at_most_max_facet_width((pts, o) in config_2d()) {
        let s = ProjectedConfig::new(pts, o).unwrap();
        prop_assert!(ell_l(&s).unwrap() <= Rat::integer(max_facet_width(&s) as i128));
    }

    #[test]
    fn facets_support_the_hull((pts, o) in config_2d()) {
        let s = ProjectedConfig::new(pts, o).unwrap();
        let fs = facets(&s);
        prop_assert!(fs.len() >= 3);
        for f in &fs {
            prop_assert!(s.points().iter().all(|p| f.eval(p) <= f.offset));
            prop_assert!(f.incident.len() >= 2);
        }
    }
}

#[test]
fn sublattice_scales_widths() {
    let pts = vec![vec![0, 0], vec![2, 0], vec![0, 2], vec![0, 0]];
    let s = ProjectedConfig::new(pts.clone(), 0).unwrap();
    let t = ProjectedConfig::new(apply(&[[3, 0], [0, 1]], &pts), 0).unwrap();
    let width = |c: &ProjectedConfig, normal: &[i64]| {
        let f = facets(c).into_iter().find(|f| f.normal == normal).unwrap();
        facet_width(c, &f)
    };
    assert_eq!(width(&s, &[-1, 0]), 2);
    assert_eq!(width(&t, &[-1, 0]), 6);
    assert_eq!(width(&t, &[0, -1]), 2);
}

#[test]
fn three_dimensional_simplex() {
    let pts = vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]];
    let s = ProjectedConfig::new(pts, 0).unwrap();
    assert!(ell_l(&s).is_ok());
    assert!(matches!(
        ProjectedConfig::new(vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]], 0),
        Err(Error::DegenerateSpan(2))
    ));
}
