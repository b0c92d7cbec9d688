mod common;

use common::{form, isometry, source_change};
use proptest::prelude::*;
use rxsurf::geometry::{analyze, CorankOneJet, Degeneracy};
use rxsurf::heights::{binormal_roots, binormal_v2, BCoeffs, Branch};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn frame_invariance(f in form(), q in isometry(), (sx, sy) in source_change(4)) {
        let j = CorankOneJet::from_real(f.components(4)).unwrap();
        let moved = j.map_source(&sx, &sy).unwrap().map_target(&q).unwrap();
        let (a, b) = (analyze(&j), analyze(&moved));
        prop_assert_eq!(a.parabola.degeneracy, b.parabola.degeneracy);
        prop_assert_eq!(a.point_type, b.point_type);
        match (a.kappa_u, b.kappa_u) {
            (Some(x), Some(y)) => prop_assert!((x - y).abs() <= 1e-9 * x.abs().max(1.0), "{} vs {}", x, y),
            (x, y) => prop_assert_eq!(x.is_some(), y.is_some()),
        }
    }

    #[test]
    fn parabola_branches_trace_the_same_points(f in form(), q in isometry()) {
        let j = CorankOneJet::from_real(f.components(4)).unwrap().map_target(&q).unwrap();
        let p = analyze(&j).parabola;
        for k in 0..20 {
            let y = -2.0 + 0.2 * k as f64;
            let (u, v) = (p.eval_negative_branch(y), p.eval(-y));
            prop_assert!((0..4).all(|i| (u[i] - v[i]).abs() < 1e-12));
        }
    }

    #[test]
    fn umbilic_distance_is_constant(f in form(), q in isometry()) {
        let j = CorankOneJet::from_real(f.components(4)).unwrap().map_target(&q).unwrap();
        let g = analyze(&j);
        prop_assume!(g.parabola.degeneracy == Degeneracy::Nondegenerate);
        let nu3 = g.frame.normals[2];
        let vals: Vec<f64> = (0..20)
            .map(|k| {
                let e = g.parabola.eval(-2.0 + 0.2 * k as f64);
                (0..4).map(|i| e[i] * nu3[i]).sum()
            })
            .collect();
        let mean = vals.iter().sum::<f64>() / vals.len() as f64;
        let var = vals.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / vals.len() as f64;
        prop_assert!(var < 1e-12, "variance {}", var);
        prop_assert!((mean.abs() - g.kappa_u.unwrap()).abs() < 1e-9);
    }

    #[test]
    fn binormal_roots_match_formula(mut f in form()) {
        f.a03 = 0.0;
        let j = CorankOneJet::from_real(f.components(4)).unwrap();
        let b = BCoeffs { b20: f.b[0], b11: f.b[1], b02: f.b[2], b30: f.b[3], b21: f.b[4], b12: f.b[5], b03: f.b[6] };
        let roots = binormal_roots(&j);
        if b.b20 > 0.0 {
            let mut expected = [binormal_v2(&b, Branch::Lower).unwrap(), binormal_v2(&b, Branch::Upper).unwrap()];
            expected.sort_by(f64::total_cmp);
            prop_assert_eq!(roots.len(), 2);
            prop_assert!((roots[0] - expected[0]).abs() < 1e-9 && (roots[1] - expected[1]).abs() < 1e-9);
        } else if b.b20 == 0.0 {
            prop_assert_eq!(roots.len(), 1);
            prop_assert!((roots[0] + b.b11).abs() < 1e-9);
        } else {
            prop_assert!(roots.is_empty());
        }
    }
}
