use homog_core::connect::okumura_tensor;
use homog_core::contact::standard_acs;
use homog_core::curv::okumura_curvature_identities;
use homog_core::exactalg::{q, Assignment, ParamScalar, Rational, Var};
use homog_core::homog::{
    as_check, nomizu_reconstruct, sigma_structure, tilde_frame, tv_classify, HomogStructure, TVClass,
};
use homog_core::liealg::{nonunimodular, sasakian_space_form, FrameChange};
use homog_core::par::Strategy as Exec;
use homog_core::params::{ParamValue, Params};
use homog_core::sweep::{parse_grid, sweep};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..12, 1i64..5).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn okumura_family_at_rational_points(c in small_rational(), r in small_rational()) {
        let a = sasakian_space_form(&ParamScalar::from_rational(c.clone())).unwrap();
        let acs = standard_acs(&a).unwrap();
        let rs = ParamScalar::from_rational(r.clone());
        prop_assert!(okumura_curvature_identities(&acs, &rs).unwrap().passed());
        let s = HomogStructure::new(&a, okumura_tensor(&acs, &rs).unwrap()).unwrap();
        prop_assert!(as_check(&s, Some(&acs)).unwrap().passed());
        let class = tv_classify(&s).unwrap().class;
        let want = if r == q(-2, 1) { TVClass::T2 } else if r == q(1, 1) { TVClass::T3 } else { TVClass::T2T3 };
        prop_assert_eq!(class, want);
        let dim = nomizu_reconstruct(&s, Some(&acs)).unwrap().holonomy_dim;
        prop_assert_eq!(dim, if r == (&c + q(1, 1)) / q(2, 1) { 0 } else { 1 });
    }

    #[test]
    fn sigma_reconstruction_on_pythagorean_points(m in 2i64..6, n in 1i64..5, k in 1i64..3, flip in 0u8..4) {
        prop_assume!(n < m);
        let (mut s1, mut s2, alpha) = (k * (m * m - n * n), 2 * k * m * n, k * (m * m + n * n));
        if flip & 1 == 1 { s1 = -s1; }
        if flip & 2 == 2 { s2 = -s2; }
        let point = Assignment::new().with_int(Var::Alpha, alpha).with_int(Var::S1, s1).with_int(Var::S2, s2);
        let (s, acs) = sigma_structure(&sasakian_space_form(&ParamScalar::c_in_alpha()).unwrap()).unwrap();
        let l = nomizu_reconstruct(&s, Some(&acs)).unwrap().instantiate(&point).unwrap();
        prop_assert_eq!(l.holonomy_dim, 0);
        let m: Vec<Vec<ParamScalar>> = tilde_frame().unwrap().matrix().iter()
            .map(|row| row.iter().map(|x| x.instantiate_partial(&point).unwrap()).collect())
            .collect();
        let tilde = l.to_lie_algebra("l").unwrap().change_frame(&FrameChange::orthonormal(m)).unwrap();
        let target = nonunimodular(&ParamScalar::int(alpha)).unwrap();
        prop_assert_eq!(tilde.structure_constants(), target.structure_constants());
    }

    #[test]
    fn grid_length(a in -20i64..20, span in 0i64..20, step in 1i64..4) {
        let text = format!("{a}:{}:{step}", a + span);
        prop_assert_eq!(parse_grid(&text).unwrap().len() as i64, span / step + 1);
        let reversed = format!("{}:{a}:{step}", a + span + 1);
        prop_assert!(parse_grid(&reversed).unwrap().is_empty());
    }

    #[test]
    fn params_display_round_trips(n in -50i64..50, d in 1i64..9, sym in any::<bool>()) {
        let mut p = Params::new();
        p.set(Var::R, ParamValue::Value(q(n, d)));
        if sym { p.set(Var::C, ParamValue::Sym); }
        let text: Vec<String> = p.to_json().as_object().unwrap().iter()
            .map(|(k, v)| format!("{k}={}", v.as_str().unwrap()))
            .collect();
        prop_assert_eq!(Params::parse(&text.join(",")).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn sweep_strategies_agree(c0 in -6i64..2, r0 in -3i64..3) {
        let cs = parse_grid(&format!("{c0}:{}:1", c0 + 2)).unwrap();
        let rs = parse_grid(&format!("{r0}:{}:1/2", r0 + 1)).unwrap();
        let a = sweep(&cs, &rs, None, Exec::Sequential).unwrap();
        let b = sweep(&cs, &rs, None, Exec::Parallel).unwrap();
        prop_assert_eq!(a.to_json(), b.to_json());
        prop_assert!(a.passed());
        let order: Vec<usize> = a.points.iter().map(|p| p.index).collect();
        prop_assert_eq!(order, (0..cs.len() * rs.len()).collect::<Vec<_>>());
    }
}
