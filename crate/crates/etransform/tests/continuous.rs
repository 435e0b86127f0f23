mod common;

use etransform::orbitfunc::eval_generic;
use etransform::transform_cont::{
    e_norm_closed, forward_continuous, inner_product_continuous, p_e_by_norm, reconstruct, FundamentalDomain, Truncation,
};
use etransform::{Complex64, DomainPoint, GroupId, OrbitFunctionKind as K, QuadratureSpec, Weight};
use proptest::prelude::*;

fn simple() -> impl Strategy<Value = GroupId> {
    prop::sample::select(vec![GroupId::A2, GroupId::C2, GroupId::G2])
}

fn e_fn(g: GroupId, l: [i64; 2]) -> impl Fn([f64; 2]) -> Complex64 + Sync {
    move |x| eval_generic(K::E, &Weight::new(g, l[0], l[1]), &DomainPoint::new(g, x[0], x[1]))
}

#[test]
fn volume_is_torus_over_even_group() {
    for g in GroupId::ALL {
        let q = common::coroots(g);
        let covol = (q[0][0] * q[1][1] - q[0][1] * q[1][0]).abs();
        let want = covol / common::even_order(g) as f64;
        let got: f64 = FundamentalDomain::new(g).volume();
        assert!((got - want).abs() < 1e-14, "{g}: {got} vs {want}");
    }
}

#[test]
fn generic_norms() {
    let s3 = 3f64.sqrt();
    // G2 gives √3; integrating over a region of twice the true area gives 2√3.
    for (g, l, want) in [(GroupId::C2, [2, 1], 2.0), (GroupId::A2, [2, 1], s3), (GroupId::G2, [1, 1], s3), (GroupId::A1xA1, [1, -3], 2.0)] {
        let v = inner_product_continuous(g, e_fn(g, l), e_fn(g, l), &QuadratureSpec::new(48)).unwrap();
        assert!((v - Complex64::new(want, 0.0)).norm() < 1e-10, "{g}: {v}");
        let closed: f64 = e_norm_closed(&Weight::new(g, l[0], l[1]));
        assert!((closed - want).abs() < 1e-12);
    }
}

#[test]
fn g2_domain_vertices() {
    let d = FundamentalDomain::new(GroupId::G2);
    for v in [[0.0, 0.0], [0.0, 1.0 / 3.0], [1.0, -1.0 / 3.0]] {
        assert!(d.contains(v, 1e-12), "{v:?}");
    }
    assert!(!d.contains([0.5, -0.4], 1e-9));
}

#[test]
fn orthogonality_on_a_patch() {
    for g in GroupId::ALL {
        let labels = p_e_by_norm(g, 2.2);
        for a in &labels {
            for b in &labels {
                let v = inner_product_continuous(g, e_fn(g, a.coords), e_fn(g, b.coords), &QuadratureSpec::new(40)).unwrap();
                let want: f64 = if a == b { e_norm_closed(a) } else { 0.0 };
                assert!((v - Complex64::new(want, 0.0)).norm() < 1e-9, "{g} {:?} {:?}", a.coords, b.coords);
            }
        }
    }
}

#[test]
fn constant_function() {
    for g in GroupId::ALL {
        let sp = forward_continuous(g, |_| Complex64::new(5.0, 0.0), &Truncation::Radius(2.0), &QuadratureSpec::new(32)).unwrap();
        for (l, c) in &sp.entries {
            let want = if l.is_zero() { 5.0 } else { 0.0 };
            assert!((c - Complex64::new(want, 0.0)).norm() < 1e-10, "{g} {:?}", l.coords);
        }
        assert!(sp.norm_deviation < 1e-10);
    }
}

#[test]
fn c2_xi_combination() {
    let g = GroupId::C2;
    let f = |x: [f64; 2]| {
        let p = DomainPoint::new(g, x[0], x[1]);
        eval_generic(K::Xi, &Weight::new(g, 1, 1), &p) + eval_generic(K::Xi, &Weight::new(g, 2, 0), &p) * 2.0
    };
    let sp = forward_continuous(g, f, &Truncation::Radius(3.0), &QuadratureSpec::new(40)).unwrap();
    // both orbits are regular under the even subgroup, so Ξ = E
    for (l, c) in &sp.entries {
        let want = match l.coords {
            [1, 1] => 1.0,
            [2, 0] => 2.0,
            _ => 0.0,
        };
        assert!((c - Complex64::new(want, 0.0)).norm() < 1e-10, "{:?}: {c}", l.coords);
    }
    for x in [[0.1, 0.2], [0.3, 0.1]] {
        assert!((reconstruct(&sp, &DomainPoint::new(g, x[0], x[1])) - f(x)).norm() < 1e-9);
    }
}

#[test]
fn explicit_labels_fold_to_representatives() {
    let t = Truncation::Labels(vec![[1, 1], [1, -2]]);
    let got: Vec<[i64; 2]> = t.labels(GroupId::A2).iter().map(|w| w.coords).collect();
    assert_eq!(got.len(), 1);
}

#[test]
fn rejects_tiny_order() {
    let q = QuadratureSpec { order: 1, tolerance: 1e-8 };
    assert!(forward_continuous(GroupId::C2, |_| Complex64::new(1.0, 0.0), &Truncation::Lowest(3), &q).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn single_mode(g in simple(), a in -3i64..4, b in -3i64..4) {
        let mu = Weight::new(g, a, b).e_representative();
        let sp = forward_continuous(g, e_fn(g, mu.coords), &Truncation::Radius(3.5), &QuadratureSpec::new(40)).unwrap();
        let in_set = sp.coefficient(&mu).is_some();
        for (l, c) in &sp.entries {
            let want = if *l == mu { 1.0 } else { 0.0 };
            prop_assert!((c - Complex64::new(want, 0.0)).norm() < 1e-9);
        }
        if in_set {
            let p = DomainPoint::new(g, 0.11, 0.07);
            prop_assert!((reconstruct(&sp, &p) - e_fn(g, mu.coords)([0.11, 0.07])).norm() < 1e-9);
        }
    }

    #[test]
    fn bessel_and_linearity(g in simple(), s in -2.0f64..2.0, t in -2.0f64..2.0) {
        let f = move |x: [f64; 2]| Complex64::new((s * x[0] - t * x[1] * x[1]).exp(), x[0] * t);
        let h = move |x: [f64; 2]| Complex64::new((x[0] + x[1]).cos(), s);
        let quad = QuadratureSpec { order: 48, tolerance: 1e-6 };
        let tr = Truncation::Lowest(12);
        let sf = forward_continuous(g, f, &tr, &quad).unwrap();
        let sh = forward_continuous(g, h, &tr, &quad).unwrap();
        let sfh = forward_continuous(g, move |x| f(x) * 2.0 - h(x), &tr, &quad).unwrap();
        for ((a, b), c) in sf.entries.iter().zip(&sh.entries).zip(&sfh.entries) {
            prop_assert!((a.1 * 2.0 - b.1 - c.1).norm() < 1e-9);
        }
        let energy = inner_product_continuous(g, f, f, &quad).unwrap().re;
        let captured: f64 = sf.entries.iter().map(|(l, c)| c.norm_sqr() * e_norm_closed::<f64>(l)).sum();
        prop_assert!(captured <= energy * (1.0 + 1e-8));
    }
}
