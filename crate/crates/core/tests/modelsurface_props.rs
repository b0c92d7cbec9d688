use proptest::prelude::*;
use rxsurf::jetalg::{rat, Monomial, Poly};
use rxsurf::modelsurface::model;

fn poly4() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::array::uniform4(0u32..=3), -5i64..=5, 1i64..=4), 0..6).prop_map(|ts| {
        ts.into_iter().fold(Poly::zero(4), |acc, (e, n, d)| &acc + &Poly::term(Monomial::new(&e), rat(n, d)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fields_act_linearly(i in 0usize..13, g in poly4(), h in poly4()) {
        let xi = &model().fields[i];
        prop_assert_eq!(xi.apply(&(&g + &h)), &xi.apply(&g) + &xi.apply(&h));
    }

    #[test]
    fn fields_preserve_the_ideal(i in 0usize..13, j in 0usize..4, m in poly4()) {
        let s = model();
        let g = &s.ideal_gens[j] * &m;
        prop_assert!(s.is_in_ideal(&s.fields[i].apply(&g)));
    }
}
