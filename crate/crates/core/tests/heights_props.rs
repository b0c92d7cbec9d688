mod common;

use common::form;
use proptest::prelude::*;
use rxsurf::geometry::{analyze, CorankOneJet};
use rxsurf::heights::{
    binormal_roots, binormal_v2, contact_report_with, height_germ, recognize_ak, torsion_expr, BCoeffs, Branch,
    Direction4, SingularityType,
};

fn bcoeffs(b: &[f64; 7]) -> BCoeffs {
    BCoeffs { b20: b[0], b11: b[1], b02: b[2], b30: b[3], b21: b[4], b12: b[5], b03: b[6] }
}

fn kind(j: &CorankOneJet, v: [f64; 4]) -> SingularityType {
    recognize_ak(&height_germ(j, &Direction4::new(v).unwrap())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn a2_along_w_iff_c20_nonzero(mut f in form()) {
        f.a03 = 0.0;
        let j = CorankOneJet::from_real(f.components(6)).unwrap();
        prop_assume!(f.c[3] != 0.0);
        prop_assert_eq!(kind(&j, [0.0, 0.0, 0.0, 1.0]) == SingularityType::A2, f.c20 != 0.0);
    }

    #[test]
    fn binormal_rows(mut f in form(), quartic in 1.0f64..4.0, branch in prop_oneof![Just(Branch::Upper), Just(Branch::Lower)]) {
        f.a03 = 0.0;
        f.b[0] = f.b[0].abs() + 0.125;
        let b = bcoeffs(&f.b);
        let v2 = binormal_v2(&b, branch).unwrap();
        let tau = torsion_expr(&b, branch).unwrap();
        let j = CorankOneJet::from_real(f.components(6)).unwrap();
        if tau.abs() > 1e-6 {
            prop_assert_eq!(kind(&j, [0.0, v2, 1.0, 0.0]), SingularityType::A2);
        }
        // move b30 so the cubic vanishes along the asymptotic direction
        f.b[3] -= tau;
        let b = bcoeffs(&f.b);
        prop_assert!(torsion_expr(&b, branch).unwrap().abs() < 1e-9);
        let mut comps = f.components(6);
        comps[2].add_to(4, 0, quartic);
        let j = CorankOneJet::from_real(comps).unwrap();
        let t = kind(&j, [0.0, v2, 1.0, 0.0]);
        prop_assert!(t == SingularityType::A3 || t == SingularityType::DegenerateBeyond, "{}", t);
    }

    #[test]
    fn osculating_iff_binormal(mut f in form(), v2 in -4.0f64..4.0) {
        f.a03 = 0.0;
        let j = CorankOneJet::from_real(f.components(6)).unwrap();
        let geo = analyze(&j);
        let mut dirs = vec![[0.0, v2, 1.0, 0.0], [0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 0.0, 1.0]];
        dirs.extend(binormal_roots(&j).into_iter().map(|r| [0.0, r, 1.0, 0.0]));
        for v in dirs {
            let r = contact_report_with(&j, &geo, &Direction4::new(v).unwrap()).unwrap();
            let osculating = r.incidence.contains_tangent
                && !r.incidence.contains_ep
                && r.singularity != SingularityType::Regular
                && !r.singularity.is_a1();
            prop_assert_eq!(osculating, r.certificate.is_binormal, "v = {:?}: {:?}", v, r);
        }
    }
}
