//! Weyl groups as integer matrix groups, orbits, reduction of torus points to
//! the fundamental domains, and congruence classes of weights.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cartan::{pairing_exact, weight_norm_sq, GroupId};
use crate::error::{Error, Result};
use crate::mat::{iadj, idet, imul, imul_vec, int, IMat, Rational, IDENTITY};
use crate::scalar::Scalar;

const REDUCTION_CAP: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub group: GroupId,
    pub coords: [i64; 2],
}

impl Weight {
    pub fn new(group: GroupId, a: i64, b: i64) -> Self {
        Weight { group, coords: [a, b] }
    }

    pub fn zero(group: GroupId) -> Self {
        Weight::new(group, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords == [0, 0]
    }

    /// λ ∈ P⁺.
    pub fn is_dominant(&self) -> bool {
        self.coords[0] >= 0 && self.coords[1] >= 0
    }

    /// λ ∈ P⁺⁺.
    pub fn is_strictly_dominant(&self) -> bool {
        self.coords[0] > 0 && self.coords[1] > 0
    }

    /// λ ∈ P_e = P⁺ ∪ r_i P⁺⁺. Every weight qualifies for A1xA1, whose
    /// E-functions are the plain exponentials.
    pub fn in_p_e(&self) -> bool {
        if self.group == GroupId::A1xA1 {
            return true;
        }
        let i = self.group.data().even_reflection_index;
        self.is_dominant() || self.reflect(i).is_strictly_dominant()
    }

    /// r_i λ for i ∈ {1, 2}.
    pub fn reflect(&self, i: usize) -> Weight {
        self.apply(&simple_reflection(self.group, i))
    }

    pub fn apply(&self, w: &WeylElement) -> Weight {
        Weight { group: self.group, coords: w.apply_weight(self.coords) }
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(self.group, self.coords[0] + other.coords[0], self.coords[1] + other.coords[1])
    }

    pub fn neg(&self) -> Weight {
        Weight::new(self.group, -self.coords[0], -self.coords[1])
    }

    pub fn norm_sq(&self) -> Rational {
        weight_norm_sq(self.group, self.coords)
    }

    /// The dominant element of the W-orbit together with the parity of a
    /// Weyl element carrying λ there.
    pub fn dominant_with_parity(&self) -> (Weight, Parity) {
        let mut w = *self;
        let mut parity = Parity::Even;
        while let Some(k) = (0..2).find(|&k| w.coords[k] < 0) {
            w = w.reflect(k + 1);
            parity = parity.flip();
        }
        (w, parity)
    }

    pub fn dominant(&self) -> Weight {
        self.dominant_with_parity().0
    }

    /// The unique element of P_e in the orbit of λ under the symmetry group
    /// of the E-functions.
    pub fn e_representative(&self) -> Weight {
        if self.group == GroupId::A1xA1 {
            return *self;
        }
        let (dom, parity) = self.dominant_with_parity();
        if parity == Parity::Even || !dom.is_strictly_dominant() {
            dom
        } else {
            dom.reflect(self.group.data().even_reflection_index)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// An element of W, stored by its action on ω-coordinates (`matrix`) and on
/// ω̌-coordinates (`comatrix`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    pub matrix: IMat,
    pub comatrix: IMat,
    pub length_parity: Parity,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { matrix: IDENTITY, comatrix: IDENTITY, length_parity: Parity::Even }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            matrix: imul(&self.matrix, &other.matrix),
            comatrix: imul(&self.comatrix, &other.comatrix),
            length_parity: self.length_parity.add(other.length_parity),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let d = idet(&self.matrix);
        let inv = |m: &IMat| iadj(m).map(|r| r.map(|v| v * d));
        WeylElement { matrix: inv(&self.matrix), comatrix: inv(&self.comatrix), length_parity: self.length_parity }
    }

    pub fn apply_weight(&self, l: [i64; 2]) -> [i64; 2] {
        imul_vec(&self.matrix, l)
    }

    pub fn apply_point<T: Scalar>(&self, x: [T; 2]) -> [T; 2] {
        apply_int_mat(&self.comatrix, x)
    }

    pub fn apply_point_exact(&self, x: [i64; 2]) -> [i64; 2] {
        imul_vec(&self.comatrix, x)
    }
}

fn apply_int_mat<T: Scalar>(m: &IMat, x: [T; 2]) -> [T; 2] {
    let c = |v: i64| T::from_int(v);
    [c(m[0][0]) * x[0] + c(m[0][1]) * x[1], c(m[1][0]) * x[0] + c(m[1][1]) * x[1]]
}

/// r_i, i ∈ {1, 2}.
pub fn simple_reflection(g: GroupId, i: usize) -> WeylElement {
    assert!(i == 1 || i == 2, "simple reflection index must be 1 or 2");
    let i = i - 1;
    let c = g.data().cartan;
    let mut matrix = IDENTITY;
    let mut comatrix = IDENTITY;
    for j in 0..2 {
        // (r_i λ)_j = λ_j − λ_i C_ij,  (r_i x)_j = x_j − x_i C_ji
        matrix[j][i] -= c[i][j];
        comatrix[j][i] -= c[j][i];
    }
    WeylElement { matrix, comatrix, length_parity: Parity::Odd }
}

fn close(g: GroupId) -> Vec<WeylElement> {
    let gens = [simple_reflection(g, 1), simple_reflection(g, 2)];
    let mut seen: BTreeSet<WeylElement> = BTreeSet::new();
    let mut frontier = vec![WeylElement::identity()];
    seen.insert(WeylElement::identity());
    while let Some(w) = frontier.pop() {
        for s in &gens {
            let n = s.compose(&w);
            if seen.insert(n) {
                frontier.push(n);
            }
        }
    }
    seen.into_iter().collect()
}

fn cached(g: GroupId, which: usize) -> &'static [WeylElement] {
    static TABLE: OnceLock<Vec<[Vec<WeylElement>; 3]>> = OnceLock::new();
    let t = TABLE.get_or_init(|| {
        GroupId::ALL
            .iter()
            .map(|&g| {
                let full = close(g);
                let even: Vec<_> = full.iter().copied().filter(|w| w.length_parity == Parity::Even).collect();
                let sym = if g == GroupId::A1xA1 { vec![WeylElement::identity()] } else { even.clone() };
                [full, even, sym]
            })
            .collect()
    });
    &t[g as usize][which]
}

/// W, or its subgroup W_e of even-length elements, in a fixed sorted order.
pub fn generate_group(g: GroupId, even_only: bool) -> Vec<WeylElement> {
    cached(g, if even_only { 1 } else { 0 }).to_vec()
}

/// The group under which E-functions are invariant: W_e for the simple
/// groups and the trivial group for A1xA1, whose E-functions are products
/// of one-dimensional exponentials.
pub fn symmetry_group(g: GroupId) -> &'static [WeylElement] {
    cached(g, 2)
}

pub fn full_group(g: GroupId) -> &'static [WeylElement] {
    cached(g, 0)
}

/// Orbit of λ under W, or under the E-function symmetry group when
/// `even_only` is set; sorted and deduplicated.
pub fn orbit(lambda: &Weight, even_only: bool) -> Vec<Weight> {
    let group = if even_only { symmetry_group(lambda.group) } else { full_group(lambda.group) };
    let set: BTreeSet<[i64; 2]> = group.iter().map(|w| w.apply_weight(lambda.coords)).collect();
    set.into_iter().map(|c| Weight { group: lambda.group, coords: c }).collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DomainPoint<T> {
    pub group: GroupId,
    pub coords: [T; 2],
}

impl<T: Scalar> DomainPoint<T> {
    pub fn new(group: GroupId, x: T, y: T) -> Self {
        DomainPoint { group, coords: [x, y] }
    }

    pub fn translate(&self, v: [i64; 2]) -> Self {
        DomainPoint {
            group: self.group,
            coords: [self.coords[0] + T::from_int(v[0]), self.coords[1] + T::from_int(v[1])],
        }
    }

    pub fn apply(&self, w: &WeylElement) -> Self {
        DomainPoint { group: self.group, coords: w.apply_point(self.coords) }
    }
}

/// x' = w·x + t with w ∈ W acting on ω̌-coordinates and t ∈ Q̌.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AffineTransform {
    pub linear: WeylElement,
    pub translation: [i64; 2],
}

impl AffineTransform {
    pub fn identity() -> Self {
        AffineTransform { linear: WeylElement::identity(), translation: [0, 0] }
    }

    pub fn apply<T: Scalar>(&self, x: [T; 2]) -> [T; 2] {
        let y = self.linear.apply_point(x);
        [y[0] + T::from_int(self.translation[0]), y[1] + T::from_int(self.translation[1])]
    }

    /// Recovers x from x'.
    pub fn invert<T: Scalar>(&self, xp: [T; 2]) -> [T; 2] {
        let inv = self.linear.inverse();
        inv.apply_point([xp[0] - T::from_int(self.translation[0]), xp[1] - T::from_int(self.translation[1])])
    }
}

/// A wall {x : n·x = k} of the fundamental simplex together with the
/// coroot v (ω̌-coordinates) of its reflection x ↦ x − (n·x − k)v.
#[derive(Clone, Copy, Debug)]
struct Wall {
    normal: [i64; 2],
    offset: i64,
    coroot: [i64; 2],
}

fn walls(g: GroupId) -> Vec<Wall> {
    let d = g.data();
    let c = d.cartan;
    let col = |j: usize| [c[0][j], c[1][j]];
    let mut out = vec![
        Wall { normal: [1, 0], offset: 0, coroot: col(0) },
        Wall { normal: [0, 1], offset: 0, coroot: col(1) },
    ];
    if g == GroupId::A1xA1 {
        out.push(Wall { normal: [1, 0], offset: 1, coroot: col(0) });
        out.push(Wall { normal: [0, 1], offset: 1, coroot: col(1) });
    } else {
        let q = d.comarks;
        out.push(Wall {
            normal: d.highest_root_marks,
            offset: 1,
            coroot: [c[0][0] * q[0] + c[0][1] * q[1], c[1][0] * q[0] + c[1][1] * q[1]],
        });
    }
    out
}

impl Wall {
    fn value<T: Scalar>(&self, x: [T; 2]) -> T {
        T::from_int(self.normal[0]) * x[0] + T::from_int(self.normal[1]) * x[1] - T::from_int(self.offset)
    }

    /// Positive when x lies on the wrong side.
    fn violation<T: Scalar>(&self, x: [T; 2]) -> T {
        let v = self.value(x);
        if self.offset == 0 {
            -v
        } else {
            v
        }
    }

    fn reflect<T: Scalar>(&self, x: [T; 2]) -> [T; 2] {
        let v = self.value(x);
        [x[0] - v * T::from_int(self.coroot[0]), x[1] - v * T::from_int(self.coroot[1])]
    }

    fn element(&self) -> (WeylElement, [i64; 2]) {
        let mut m = IDENTITY;
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e -= self.coroot[i] * self.normal[j];
            }
        }
        let w = WeylElement { matrix: IDENTITY, comatrix: m, length_parity: Parity::Odd };
        (w, [self.offset * self.coroot[0], self.offset * self.coroot[1]])
    }
}

fn push(rec: &mut AffineTransform, wall: &Wall) {
    let (w, k) = wall.element();
    let t = w.apply_point_exact(rec.translation);
    rec.linear = WeylElement {
        matrix: IDENTITY,
        comatrix: imul(&w.comatrix, &rec.linear.comatrix),
        length_parity: rec.linear.length_parity.flip(),
    };
    rec.translation = [t[0] + k[0], t[1] + k[1]];
}

/// Fills in the ω-action of a record built from coweight matrices: the two
/// actions are related by transposition through the pairing.
fn finish(g: GroupId, mut rec: AffineTransform) -> AffineTransform {
    let found = full_group(g).iter().find(|w| w.comatrix == rec.linear.comatrix).copied();
    rec.linear = found.expect("reduction produced an element outside W");
    rec
}

fn tolerance<T: Scalar>(x: [T; 2]) -> T {
    let m = x[0].abs().max(x[1].abs()).max(T::one());
    T::lit(T::WALL_EPS) * m
}

/// Maps x to the fundamental domain F (or F^e when `even` is set) using
/// the affine Weyl group (or its even part). Points on the wall shared by F
/// and r_i F are returned in their F copy.
pub fn reduce_to_fundamental<T: Scalar>(
    x: &DomainPoint<T>,
    even: bool,
) -> Result<(DomainPoint<T>, AffineTransform)> {
    let g = x.group;
    if !x.coords[0].is_finite() || !x.coords[1].is_finite() {
        return Err(Error::InvalidArgument("non-finite point".into()));
    }
    if even && g == GroupId::A1xA1 {
        return Ok(reduce_a1xa1(x));
    }
    let d = g.data();
    let c = d.cartan;
    let ci = d.cartan_inv;
    let mut p = x.coords;
    // Translate into the cell spanned by α̌_1, α̌_2.
    let u = [0, 1].map(|i| T::from_ratio(ci[i][0]) * p[0] + T::from_ratio(ci[i][1]) * p[1]);
    let n = u.map(|v| v.floor().to_i64().unwrap_or(0));
    let shift = [-(c[0][0] * n[0] + c[0][1] * n[1]), -(c[1][0] * n[0] + c[1][1] * n[1])];
    p = [p[0] + T::from_int(shift[0]), p[1] + T::from_int(shift[1])];
    let mut rec = AffineTransform { linear: WeylElement::identity(), translation: shift };

    let ws = walls(g);
    let mut steps = 0;
    loop {
        let tol = tolerance(p);
        let worst = ws
            .iter()
            .map(|w| (w.violation(p), w))
            .filter(|(v, _)| *v > tol)
            .max_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let Some((_, wall)) = worst else { break };
        p = wall.reflect(p);
        push(&mut rec, wall);
        steps += 1;
        if steps > REDUCTION_CAP {
            return Err(Error::Internal(format!("reduction of {:?} did not terminate", x.coords)));
        }
    }
    // Clamp round-off just outside the walls.
    for w in &ws {
        if w.violation(p) > T::zero() && w.offset == 0 {
            let k = if w.normal[0] == 1 { 0 } else { 1 };
            p[k] = T::zero();
        }
    }
    if even && rec.linear.length_parity == Parity::Odd {
        let tol = tolerance(p);
        let i = d.even_reflection();
        if let Some(wall) = ws.iter().find(|w| w.value(p).abs() <= tol) {
            push(&mut rec, wall);
        } else {
            p = ws[i].reflect(p);
            push(&mut rec, &ws[i]);
        }
    }
    Ok((DomainPoint { group: g, coords: p }, finish(g, rec)))
}

fn reduce_a1xa1<T: Scalar>(x: &DomainPoint<T>) -> (DomainPoint<T>, AffineTransform) {
    let two = T::from_int(2);
    let mut t = [0i64; 2];
    let mut p = x.coords;
    for k in 0..2 {
        let n = ((p[k] + T::one()) / two).floor().to_i64().unwrap_or(0);
        t[k] = -2 * n;
        p[k] = p[k] + T::from_int(t[k]);
        if p[k] >= T::one() {
            p[k] = p[k] - two;
            t[k] -= 2;
        }
    }
    (DomainPoint { group: x.group, coords: p }, AffineTransform { linear: WeylElement::identity(), translation: t })
}

/// Membership in F (x_j ≥ 0, Σ m_j x_j ≤ 1; [0,1]² for A1xA1), with
/// boundary tolerance `tol`.
pub fn in_fundamental<T: Scalar>(g: GroupId, x: [T; 2], tol: T) -> bool {
    walls(g).iter().all(|w| w.violation(x) <= tol)
}

/// Membership in F^e = F ∪ r_i F ([−1,1]² for A1xA1).
pub fn in_fundamental_even<T: Scalar>(g: GroupId, x: [T; 2], tol: T) -> bool {
    if g == GroupId::A1xA1 {
        return x.iter().all(|v| v.abs() <= T::one() + tol);
    }
    let r = simple_reflection(g, g.data().even_reflection_index);
    in_fundamental(g, x, tol) || in_fundamental(g, r.apply_point(x), tol)
}

/// Exact membership in F^e for the rational point s/M.
pub fn in_fundamental_even_exact(g: GroupId, s: [i64; 2], m: i64) -> bool {
    let inside = |p: [i64; 2]| -> bool {
        if g == GroupId::A1xA1 {
            p.iter().all(|&v| v >= 0 && v <= m)
        } else {
            let mk = g.data().highest_root_marks;
            p[0] >= 0 && p[1] >= 0 && mk[0] * p[0] + mk[1] * p[1] <= m
        }
    };
    if g == GroupId::A1xA1 {
        return s.iter().all(|&v| v.abs() <= m);
    }
    let r = simple_reflection(g, g.data().even_reflection_index);
    inside(s) || inside(r.apply_point_exact(s))
}

/// Generators of the center P̌/Q̌ in ω̌-coordinates with their orders.
pub fn center_generators(g: GroupId) -> &'static [([i64; 2], i64)] {
    match g {
        GroupId::A1xA1 => &[([1, 0], 2), ([0, 1], 2)],
        GroupId::A2 => &[([1, 0], 3)],
        GroupId::C2 => &[([0, 1], 2)],
        GroupId::G2 => &[],
    }
}

/// A center element ž = Σ n_k ž_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterElement {
    pub coords: [i64; 2],
    pub digits: Vec<i64>,
}

/// All s elements of the center, the identity first.
pub fn center_elements(g: GroupId) -> Vec<CenterElement> {
    let mut out = vec![CenterElement { coords: [0, 0], digits: vec![] }];
    for &(gen, ord) in center_generators(g) {
        let mut next = Vec::new();
        for e in &out {
            for n in 0..ord {
                let mut digits = e.digits.clone();
                digits.push(n);
                next.push(CenterElement { coords: [e.coords[0] + n * gen[0], e.coords[1] + n * gen[1]], digits });
            }
        }
        out = next;
    }
    out
}

fn class_digits(lambda: &Weight) -> Vec<i64> {
    center_generators(lambda.group)
        .iter()
        .map(|&(gen, ord)| {
            let p = pairing_exact(lambda.group, lambda.coords, [int(gen[0]), int(gen[1])]) * int(ord);
            debug_assert!(p.is_integer());
            p.to_integer().rem_euclid(ord)
        })
        .collect()
}

/// Index j ∈ [0, s) of the character ž ↦ e^{2πi⟨λ,ž⟩} of the center.
pub fn congruence_class(lambda: &Weight) -> usize {
    let gens = center_generators(lambda.group);
    let digits = class_digits(lambda);
    let mut idx = 0i64;
    let mut radix = 1i64;
    for (k, &(_, ord)) in gens.iter().enumerate() {
        idx += digits[k] * radix;
        radix *= ord;
    }
    idx as usize
}

/// χ_j(ž) = e^{2πi φ}; returns φ ∈ [0, 1).
pub fn character_phase(g: GroupId, class: usize, z: &CenterElement) -> Rational {
    let mut rest = class as i64;
    let mut phase = Rational::zero();
    for (k, &(_, ord)) in center_generators(g).iter().enumerate() {
        let c = rest % ord;
        rest /= ord;
        phase += Rational::new(c * z.digits[k], ord);
    }
    phase - phase.floor()
}
