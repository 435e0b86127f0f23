mod common;

use etransform::cartan::{alpha_to_omega, pairing, positive_roots, to_orthonormal};
use etransform::weyl::{
    congruence_class, full_group, in_fundamental_even, orbit, reduce_to_fundamental, simple_reflection, symmetry_group,
    Parity,
};
use etransform::{Basis, DomainPoint, GroupId, Weight};
use proptest::prelude::*;

fn group() -> impl Strategy<Value = GroupId> {
    prop::sample::select(GroupId::ALL.to_vec())
}

#[test]
fn printed_cartan_matrices() {
    assert_eq!(GroupId::A2.data().cartan, [[2, -1], [-1, 2]]);
    assert_eq!(GroupId::A1xA1.data().cartan, [[2, 0], [0, 2]]);
    // α2 = −2ω1 + 2ω2
    assert_eq!(GroupId::C2.data().cartan[1], [-2, 2]);
    assert_eq!(GroupId::G2.data().center_order, 1);
}

#[test]
fn cartan_from_geometry() {
    for g in GroupId::ALL {
        let a = common::simple_roots(g);
        for i in 0..2 {
            for j in 0..2 {
                let want = 2.0 * common::dot(a[i], a[j]) / common::dot(a[j], a[j]);
                assert!((g.data().cartan[i][j] as f64 - want).abs() < 1e-12, "{g} {i}{j}");
            }
        }
    }
}

#[test]
fn printed_root_lengths() {
    let l = |g, i| {
        let v = to_orthonormal::<f64>(g, if i == 0 { [1.0, 0.0] } else { [0.0, 1.0] }, Basis::Alpha);
        v[0] * v[0] + v[1] * v[1]
    };
    assert!((l(GroupId::A2, 0) - 2.0).abs() < 1e-14);
    assert!((l(GroupId::G2, 1) - 2.0 / 3.0).abs() < 1e-14);
    assert_eq!(to_orthonormal::<f64>(GroupId::C2, [0.0, 0.0], Basis::Omega), [0.0, 0.0]);
}

#[test]
fn printed_orbits() {
    let (a, b) = (4, 7);
    let sorted = |mut v: Vec<[i64; 2]>| {
        v.sort();
        v
    };
    let got = |g| orbit(&Weight::new(g, a, b), true).iter().map(|w| w.coords).collect::<Vec<_>>();
    assert_eq!(got(GroupId::A2), sorted(vec![[a, b], [b, -a - b], [-a - b, a]]));
    assert_eq!(got(GroupId::C2), sorted(vec![[a, b], [-a, -b], [a + 2 * b, -a - b], [-a - 2 * b, a + b]]));
    assert_eq!(
        got(GroupId::G2),
        sorted(vec![[a, b], [-a, -b], [2 * a + b, -3 * a - b], [-2 * a - b, 3 * a + b], [-a - b, 3 * a + 2 * b], [a + b, -3 * a - 2 * b]])
    );
    assert_eq!(simple_reflection(GroupId::A2, 1).apply_weight([a, b]), [-a, a + b]);
    assert_eq!(simple_reflection(GroupId::G2, 2).apply_weight([a, b]), [a + b, -b]);
}

#[test]
fn a1xa1_even_group() {
    let e = etransform::weyl::generate_group(GroupId::A1xA1, true);
    assert_eq!(e.len(), 2);
    let r12 = simple_reflection(GroupId::A1xA1, 1).compose(&simple_reflection(GroupId::A1xA1, 2));
    assert!(e.contains(&r12));
}

#[test]
fn a2_roots_are_one_orbit() {
    // W(1,1) already contains all six roots, so W(1,1) ∪ W(−1,−1) = W(1,1) = Δ.
    let g = GroupId::A2;
    let mut roots: Vec<[i64; 2]> = positive_roots(g).iter().flat_map(|r| {
        let w = alpha_to_omega(g, *r);
        [w, [-w[0], -w[1]]]
    }).collect();
    roots.sort();
    let w11: Vec<[i64; 2]> = orbit(&Weight::new(g, 1, 1), false).iter().map(|w| w.coords).collect();
    let wm: Vec<[i64; 2]> = orbit(&Weight::new(g, -1, -1), false).iter().map(|w| w.coords).collect();
    assert_eq!(w11, roots);
    assert_eq!(wm, roots);
}

#[test]
fn congruence_classes_of_c2_and_a2() {
    for a in -5..5 {
        for b in -5..5 {
            assert_eq!(congruence_class(&Weight::new(GroupId::C2, a, b)), a.rem_euclid(2) as usize);
        }
    }
    let c = |a, b| congruence_class(&Weight::new(GroupId::A2, a, b));
    assert_eq!(c(0, 0), 0);
    assert!(c(1, 0) != 0 && c(0, 1) != 0 && c(1, 0) != c(0, 1));
    assert_eq!(c(1, 1), 0);
}

proptest! {
    #[test]
    fn pairing_is_euclidean(g in group(), a in -20i64..20, b in -20i64..20, x in -2.0f64..2.0, y in -2.0f64..2.0) {
        let want = common::dot(common::weight(g, [a, b]), common::point(g, [x, y]));
        prop_assert!((pairing(g, [a, b], [x, y]) - want).abs() < 1e-12 * (1.0 + want.abs()));
        let u = to_orthonormal(g, [a as f64, b as f64], Basis::Omega);
        let v = to_orthonormal(g, [x, y], Basis::OmegaCheck);
        prop_assert!((u[0] * v[0] + u[1] * v[1] - want).abs() < 1e-12 * (1.0 + want.abs()));
    }

    #[test]
    fn orbits_match_geometry(g in group(), a in -9i64..9, b in -9i64..9) {
        for even in [false, true] {
            if g == GroupId::A1xA1 && even {
                continue;
            }
            let lib = orbit(&Weight::new(g, a, b), even);
            let geo = common::orbit(g, common::weight(g, [a, b]), even);
            prop_assert_eq!(lib.len(), geo.len());
            for w in &lib {
                let v = common::weight(g, w.coords);
                prop_assert!(geo.iter().any(|u| (u[0] - v[0]).abs() < 1e-9 && (u[1] - v[1]).abs() < 1e-9));
            }
        }
    }

    #[test]
    fn parity_is_a_homomorphism(g in group(), i in 0usize..12, j in 0usize..12) {
        let w = full_group(g);
        let (p, q) = (&w[i % w.len()], &w[j % w.len()]);
        prop_assert_eq!(p.compose(q).length_parity, p.length_parity.add(q.length_parity));
    }

    #[test]
    fn w_orbit_is_two_even_orbits(g in prop::sample::select(vec![GroupId::A2, GroupId::C2, GroupId::G2]), a in 0i64..9, b in 0i64..9) {
        let l = Weight::new(g, a, b);
        let full = orbit(&l, false);
        let e1 = orbit(&l, true);
        if l.is_strictly_dominant() {
            let e2 = orbit(&l.reflect(g.data().even_reflection_index), true);
            prop_assert!(e1.iter().all(|w| !e2.contains(w)));
            let mut u: Vec<Weight> = e1.iter().chain(&e2).copied().collect();
            u.sort();
            prop_assert_eq!(u, full);
        } else {
            prop_assert_eq!(e1, full);
        }
    }

    #[test]
    fn class_is_even_invariant(g in group(), a in -20i64..20, b in -20i64..20) {
        let l = Weight::new(g, a, b);
        for w in symmetry_group(g) {
            prop_assert_eq!(congruence_class(&l.apply(w)), congruence_class(&l));
        }
    }

    #[test]
    fn reduction_lands_in_domain(g in group(), x in -5.0f64..5.0, y in -5.0f64..5.0, a in -6i64..6, b in -6i64..6) {
        let p = DomainPoint::new(g, x, y);
        for even in [false, true] {
            let (q, rec) = reduce_to_fundamental(&p, even).unwrap();
            if even {
                prop_assert!(in_fundamental_even(g, q.coords, 1e-9));
                let e1 = common::e(g, [a, b], [x, y]);
                let e2 = common::e(g, [a, b], q.coords);
                prop_assert!(common::close(e1, e2, 1e-9));
            } else {
                prop_assert!(etransform::weyl::in_fundamental(g, q.coords, 1e-9));
            }
            if !(g == GroupId::A1xA1 && even) && !even {
                prop_assert_eq!(rec.linear.length_parity == Parity::Even || !even, true);
            }
            let back = rec.invert(q.coords);
            prop_assert!((back[0] - x).abs() < 1e-9 && (back[1] - y).abs() < 1e-9);
            let (q2, _) = reduce_to_fundamental(&q, even).unwrap();
            prop_assert!((q2.coords[0] - q.coords[0]).abs() < 1e-9 && (q2.coords[1] - q.coords[1]).abs() < 1e-9);
        }
    }
}
