use proptest::prelude::*;
use rxsurf::jetalg::{parse_poly, rat, Monomial, Poly};
use rxsurf::modelsurface::{apply_linear_change, LinearChange};
use rxsurf::rxclass::{classify, codimension, verify_trace};

const REPS: [&str; 6] = ["X", "-Z+X^2", "Z+X^3", "-Z-X^4", "Y", "W-X^2"];

fn p(s: &str) -> Poly {
    parse_poly(s, 4).unwrap()
}

/// Random terms of degree `lo..=hi` with small rational coefficients.
fn tail(lo: u32, hi: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::array::uniform4(0u32..=3), -3i64..=3, 1i64..=3), 0..5).prop_map(move |ts| {
        ts.into_iter().fold(Poly::zero(4), |acc, (e, n, d)| {
            let m = Monomial::new(&e);
            if (lo..=hi).contains(&m.degree()) {
                &acc + &Poly::term(m, rat(n, d))
            } else {
                acc
            }
        })
    })
}

#[test]
fn codimension_has_stabilized() {
    for s in REPS {
        assert_eq!(codimension(&p(s), 7).unwrap().value, codimension(&p(s), 8).unwrap().value, "{s}");
    }
}

#[test]
fn eta_changes_keep_codimension() {
    for s in REPS {
        let g = p(s);
        let c = classify(&g).unwrap().codim.unwrap().value;
        for i in 1..=8 {
            let eta = LinearChange::from_index(i).unwrap();
            let param = if eta.is_scaling() { rat(3, 2) } else { rat(-2, 3) };
            let moved = apply_linear_change(eta, &g, &param, 8).unwrap();
            assert_eq!(classify(&moved).unwrap().codim.unwrap().value, c, "{s} under {eta}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Perturbations above the determinacy degree keep the label, and the
    /// recorded trace replays to the normal form.
    #[test]
    fn traces_replay(k in 0usize..6, t in tail(5, 6)) {
        let g = p(REPS[k]);
        let base = classify(&g).unwrap();
        let moved = &g + &t;
        let r = classify(&moved).unwrap();
        prop_assert_eq!(r.label, base.label);
        prop_assert!(verify_trace(&r));
    }

    /// Generic lower-order perturbations of X + ... land in some table orbit
    /// with a sound trace, or are reported beyond scope.
    #[test]
    fn mixed_perturbations_are_sound(k in 0usize..6, t in tail(2, 4)) {
        let g = &p(REPS[k]) + &t;
        let r = classify(&g).unwrap();
        if r.normal_form.is_some() {
            prop_assert!(verify_trace(&r), "{}", g);
        }
    }
}
