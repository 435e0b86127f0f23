//! Independent reference implementation in plain Euclidean geometry: simple
//! roots as explicit planar vectors, reflections s_α(v) = v − 2⟨v,α⟩/⟨α,α⟩ α,
//! and orbit sums evaluated from dot products. Shares no code with the
//! library beyond the group tag.
#![allow(dead_code)]

use etransform::GroupId;
use num_complex::Complex64;

pub type V = [f64; 2];

pub fn dot(a: V, b: V) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

fn scale(a: V, s: f64) -> V {
    [a[0] * s, a[1] * s]
}

fn add(a: V, b: V) -> V {
    [a[0] + b[0], a[1] + b[1]]
}

pub fn simple_roots(g: GroupId) -> [V; 2] {
    let r2 = 2f64.sqrt();
    match g {
        GroupId::A1xA1 => [[r2, 0.0], [0.0, r2]],
        GroupId::A2 => [[r2, 0.0], [-r2 / 2.0, 6f64.sqrt() / 2.0]],
        GroupId::C2 => [[1.0, 0.0], [-1.0, 1.0]],
        GroupId::G2 => [[r2, 0.0], [-1.0 / r2, (1.0f64 / 6.0).sqrt()]],
    }
}

pub fn coroots(g: GroupId) -> [V; 2] {
    simple_roots(g).map(|a| scale(a, 2.0 / dot(a, a)))
}

/// Dual basis of `b`: vectors d_i with ⟨d_i, b_j⟩ = δ_ij.
fn dual(b: [V; 2]) -> [V; 2] {
    let det = b[0][0] * b[1][1] - b[0][1] * b[1][0];
    [[b[1][1] / det, -b[1][0] / det], [-b[0][1] / det, b[0][0] / det]]
}

/// ω_i, dual to the coroots.
pub fn fundamental_weights(g: GroupId) -> [V; 2] {
    dual(coroots(g))
}

/// ω̌_i, dual to the roots.
pub fn fundamental_coweights(g: GroupId) -> [V; 2] {
    dual(simple_roots(g))
}

pub fn weight(g: GroupId, l: [i64; 2]) -> V {
    let w = fundamental_weights(g);
    add(scale(w[0], l[0] as f64), scale(w[1], l[1] as f64))
}

pub fn point(g: GroupId, x: V) -> V {
    let w = fundamental_coweights(g);
    add(scale(w[0], x[0]), scale(w[1], x[1]))
}

pub fn reflect(alpha: V, v: V) -> V {
    add(v, scale(alpha, -2.0 * dot(v, alpha) / dot(alpha, alpha)))
}

fn key(v: V) -> (i64, i64) {
    ((v[0] * 1e8).round() as i64, (v[1] * 1e8).round() as i64)
}

/// Orbit of v under products of an even number of simple reflections (all
/// of W when `even` is false).
pub fn orbit(g: GroupId, v: V, even: bool) -> Vec<V> {
    let roots = simple_roots(g);
    let steps: Vec<Box<dyn Fn(V) -> V>> = if even {
        let mut s: Vec<Box<dyn Fn(V) -> V>> = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                let (a, b) = (roots[i], roots[j]);
                s.push(Box::new(move |v| reflect(a, reflect(b, v))));
            }
        }
        s
    } else {
        roots.iter().map(|&a| Box::new(move |v| reflect(a, v)) as Box<dyn Fn(V) -> V>).collect()
    };
    let mut seen = vec![key(v)];
    let mut out = vec![v];
    let mut i = 0;
    while i < out.len() {
        let cur = out[i];
        for s in &steps {
            let n = s(cur);
            if !seen.contains(&key(n)) {
                seen.push(key(n));
                out.push(n);
            }
        }
        i += 1;
    }
    out
}

/// E_λ(x) for simple groups, e^{2πi⟨λ,x⟩} for A1×A1.
pub fn e(g: GroupId, l: [i64; 2], x: V) -> Complex64 {
    let p = point(g, x);
    let lam = weight(g, l);
    let orb = if g == GroupId::A1xA1 { vec![lam] } else { orbit(g, lam, true) };
    orb.iter().map(|mu| Complex64::from_polar(1.0, std::f64::consts::TAU * dot(*mu, p))).sum()
}

/// C_λ(x): the sum over the full W-orbit.
pub fn c(g: GroupId, l: [i64; 2], x: V) -> Complex64 {
    let p = point(g, x);
    orbit(g, weight(g, l), false).iter().map(|mu| Complex64::from_polar(1.0, std::f64::consts::TAU * dot(*mu, p))).sum()
}

pub fn orbit_len(g: GroupId, l: [i64; 2], even: bool) -> usize {
    if g == GroupId::A1xA1 && even {
        return 1;
    }
    orbit(g, weight(g, l), even).len()
}

pub fn even_order(g: GroupId) -> usize {
    if g == GroupId::A1xA1 {
        1
    } else {
        orbit_len(g, [1, 1], true)
    }
}

pub fn xi(g: GroupId, l: [i64; 2], x: V) -> Complex64 {
    e(g, l, x) * (even_order(g) as f64 / orbit_len(g, l, true) as f64)
}

/// Coordinates of a planar vector in the basis `b`.
pub fn coords_in(b: [V; 2], v: V) -> V {
    let d = dual(b);
    [dot(d[0], v), dot(d[1], v)]
}

pub fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}
