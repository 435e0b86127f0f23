//! Discrete E-transform on the grid F^e_M: counting coefficients, spectral
//! labels, discrete inner product, forward transform and interpolation.
//!
//! The torus sampled by the grid is T_M = (1/M)P̌/Q̌, with det(C)·M² points.
//! Grid points are stored as integer numerators s with x = s/M in
//! ω̌-coordinates. Distinct grid points on the boundary of F^e can be the
//! same point of T_M (for example A2's (M,0) and (−M,M)); such points form
//! one torus class and share the class weight.

use std::collections::{BTreeSet, HashMap};

use num_complex::Complex;
use num_traits::Zero;
use rayon::prelude::*;

use crate::cartan::GroupId;
use crate::error::{Error, Result};
use crate::mat::{iadj, idet, int, itranspose, IMat, Rational};
use crate::orbitfunc::{OrbitFunction, OrbitFunctionKind};
use crate::scalar::Scalar;
use crate::sum::ComplexSum;
use crate::tables;
use crate::weyl::{full_group, in_fundamental_even_exact, simple_reflection, symmetry_group, DomainPoint, Weight};

/// Residue of n modulo the lattice spanned by the columns of `b`.
fn lattice_key(b: &IMat, n: [i64; 2]) -> [i64; 2] {
    let d = idet(b).abs();
    let adj = iadj(b);
    let sign = idet(b).signum();
    [0, 1].map(|i| (sign * (adj[i][0] * n[0] + adj[i][1] * n[1])).rem_euclid(d))
}

fn scaled(m: &IMat, k: i64) -> IMat {
    m.map(|r| r.map(|v| v * k))
}

/// Basis (columns) of M·Q̌ in numerator units.
fn coroot_lattice(g: GroupId, m: i64) -> IMat {
    scaled(&g.data().cartan, m)
}

/// Basis (columns) of M·Q in ω-coordinates.
fn root_lattice(g: GroupId, m: i64) -> IMat {
    scaled(&itranspose(&g.data().cartan), m)
}

/// Canonical key of the torus point s/M modulo the E-function symmetry
/// group and Q̌.
pub fn torus_key(g: GroupId, m: i64, s: [i64; 2]) -> [i64; 2] {
    let b = coroot_lattice(g, m);
    symmetry_group(g).iter().map(|w| lattice_key(&b, w.apply_point_exact(s))).min().unwrap()
}

/// Canonical key of λ restricted to T_M, modulo the symmetry group.
pub fn label_key(g: GroupId, m: i64, lambda: [i64; 2]) -> [i64; 2] {
    let b = root_lattice(g, m);
    symmetry_group(g).iter().map(|w| lattice_key(&b, w.apply_weight(lambda))).min().unwrap()
}

/// Number of points of T_M in the orbit of s/M (the symmetry group, or the
/// full W when `full` is set).
pub fn torus_orbit_size(g: GroupId, m: i64, s: [i64; 2], full: bool) -> usize {
    let b = coroot_lattice(g, m);
    let group = if full { full_group(g) } else { symmetry_group(g) };
    group.iter().map(|w| lattice_key(&b, w.apply_point_exact(s))).collect::<BTreeSet<_>>().len()
}

/// |T_M| = det(C)·M².
pub fn torus_order(g: GroupId, m: i64) -> i64 {
    g.data().det() * m * m
}

#[derive(Clone, Debug)]
pub struct Grid {
    pub group: GroupId,
    pub m: i64,
    /// Numerators over M, sorted lexicographically.
    pub points: Vec<[i64; 2]>,
    pub eps: Vec<Rational>,
    classes: Vec<usize>,
    class_reps: Vec<usize>,
    class_keys: HashMap<[i64; 2], usize>,
    index: HashMap<[i64; 2], usize>,
}

fn grid_points(g: GroupId, m: i64) -> Vec<[i64; 2]> {
    let mut set = BTreeSet::new();
    if g == GroupId::A1xA1 {
        for a in -m..=m {
            for b in -m..=m {
                set.insert([a, b]);
            }
        }
    } else {
        let mk = g.data().highest_root_marks;
        let r = simple_reflection(g, g.data().even_reflection_index);
        for s1 in 0..=m {
            for s2 in 0..=m {
                if mk[0] * s1 + mk[1] * s2 <= m {
                    set.insert([s1, s2]);
                    set.insert(r.apply_point_exact([s1, s2]));
                }
            }
        }
    }
    set.into_iter().collect()
}

/// F^e_M with its counting coefficients.
pub fn build_grid(g: GroupId, m: i64) -> Result<Grid> {
    if m < 1 {
        return Err(Error::InvalidArgument(format!("M must be at least 1, got {m}")));
    }
    let points = grid_points(g, m);
    let keys: Vec<[i64; 2]> = points.iter().map(|s| torus_key(g, m, *s)).collect();
    let mut class_keys: HashMap<[i64; 2], usize> = HashMap::new();
    let mut class_reps = Vec::new();
    let mut classes = Vec::with_capacity(points.len());
    for (i, k) in keys.iter().enumerate() {
        let next = class_reps.len();
        let c = *class_keys.entry(*k).or_insert(next);
        if c == next {
            class_reps.push(i);
        }
        classes.push(c);
    }
    let mut members = vec![0i64; class_reps.len()];
    for &c in &classes {
        members[c] += 1;
    }
    let eps = points
        .iter()
        .zip(&classes)
        .map(|(s, &c)| Rational::new(torus_orbit_size(g, m, *s, false) as i64, members[c]))
        .collect();
    let index = points.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    Ok(Grid { group: g, m, points, eps, classes, class_reps, class_keys, index })
}

impl Grid {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point<T: Scalar>(&self, i: usize) -> DomainPoint<T> {
        let m = T::from_int(self.m);
        let s = self.points[i];
        DomainPoint { group: self.group, coords: [T::from_int(s[0]) / m, T::from_int(s[1]) / m] }
    }

    pub fn index_of(&self, s: [i64; 2]) -> Option<usize> {
        self.index.get(&s).copied()
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.classes[i]
    }

    /// Number of distinct torus points represented by the grid.
    pub fn class_count(&self) -> usize {
        self.class_reps.len()
    }

    /// First grid index of each class.
    pub fn class_representatives(&self) -> &[usize] {
        &self.class_reps
    }

    pub fn class_members(&self, c: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.classes[i] == c).collect()
    }

    /// Grid index representing the torus class of an arbitrary point s/M
    /// with s integral.
    pub fn locate(&self, s: [i64; 2]) -> Option<usize> {
        self.class_keys.get(&torus_key(self.group, self.m, s)).map(|&c| self.class_reps[c])
    }

    pub fn eps_sum(&self) -> Rational {
        self.eps.iter().fold(Rational::zero(), |a, b| a + b)
    }

    pub fn torus_order(&self) -> i64 {
        torus_order(self.group, self.m)
    }

    /// Largest difference between values assigned to grid points that are
    /// the same torus point. Zero for data sampled from a torus function.
    pub fn inconsistency<T: Scalar>(&self, values: &[Complex<T>]) -> T {
        let mut worst = T::zero();
        for (i, &c) in self.classes.iter().enumerate() {
            let r = self.class_reps[c];
            worst = worst.max((values[i] - values[r]).norm());
        }
        worst
    }

    /// Spreads one value per class over all grid points.
    pub fn expand_classes<T: Scalar>(&self, per_class: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
        if per_class.len() != self.class_count() {
            return Err(Error::LengthMismatch { expected: self.class_count(), got: per_class.len() });
        }
        Ok(self.classes.iter().map(|&c| per_class[c]).collect())
    }

    /// Samples a function on the grid.
    pub fn sample<T: Scalar, F: Fn(&DomainPoint<T>) -> Complex<T> + Sync>(&self, f: F) -> Vec<Complex<T>> {
        (0..self.len()).into_par_iter().map(|i| f(&self.point(i))).collect()
    }
}

/// ε_s for the grid point s (numerators over M).
pub fn epsilon_generic(g: GroupId, m: i64, s: [i64; 2]) -> Result<Rational> {
    if m < 1 {
        return Err(Error::InvalidArgument(format!("M must be at least 1, got {m}")));
    }
    if !in_fundamental_even_exact(g, s, m) {
        return Err(Error::OutsideDomain { point: s });
    }
    let grid = build_grid(g, m)?;
    let i = grid.index_of(s).ok_or(Error::OutsideDomain { point: s })?;
    Ok(grid.eps[i])
}

/// Provenance of Λ_M relative to the printed inequality description.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct LabelProvenance {
    pub printed: Vec<Weight>,
    /// Labels in Λ_M that the printed description does not contain.
    pub added: Vec<Weight>,
    /// Printed labels removed because they alias an earlier label on T_M.
    pub dropped: Vec<Weight>,
}

#[derive(Clone, Debug)]
pub struct LabelSet {
    pub group: GroupId,
    pub m: i64,
    /// Sorted lexicographically.
    pub labels: Vec<Weight>,
    /// Exact ⟨Ξ_λ|Ξ_λ⟩_M, aligned with `labels`.
    pub norms: Vec<Rational>,
    pub provenance: LabelProvenance,
}

impl LabelSet {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn position(&self, lambda: &Weight) -> Option<usize> {
        self.labels.binary_search(lambda).ok()
    }
}

/// ⟨Ξ_λ|Ξ_λ⟩_M = |T_M|·|W_e|·#{w ∈ W_e : wλ ≡ λ mod MQ}.
pub fn discrete_norm(g: GroupId, m: i64, lambda: &Weight) -> Rational {
    let b = root_lattice(g, m);
    let key = lattice_key(&b, lambda.coords);
    let sym = symmetry_group(g);
    let fixed = sym.iter().filter(|w| lattice_key(&b, w.apply_weight(lambda.coords)) == key).count();
    int(torus_order(g, m) * sym.len() as i64 * fixed as i64)
}

/// Dominant labels with Σ m̌_i λ_i ≤ M.
fn dominant_region(g: GroupId, m: i64) -> Vec<Weight> {
    let dm = g.data().dual_marks;
    let mut out = Vec::new();
    for a in 0..=m {
        for b in 0..=m {
            if dm[0] * a + dm[1] * b <= m {
                out.push(Weight::new(g, a, b));
            }
        }
    }
    out
}

/// Λ_M: a maximal set of P_e labels with pairwise distinct restrictions to
/// T_M. Built greedily from the origin, the printed inequality set, the
/// dominant label region and its r_i-reflection.
pub fn build_label_set(g: GroupId, m: i64) -> Result<LabelSet> {
    if m < 1 {
        return Err(Error::InvalidArgument(format!("M must be at least 1, got {m}")));
    }
    let printed = tables::lambda_printed(g, m);
    let region = dominant_region(g, m);
    let mut candidates = vec![Weight::zero(g)];
    candidates.extend(printed.iter().copied());
    candidates.extend(region.iter().copied());
    if g != GroupId::A1xA1 {
        let i = g.data().even_reflection_index;
        let mut refl: Vec<Weight> = region.iter().filter(|w| w.is_strictly_dominant()).map(|w| w.reflect(i)).collect();
        refl.sort();
        candidates.extend(refl);
    }
    let mut seen = BTreeSet::new();
    let mut labels = Vec::new();
    for c in candidates {
        debug_assert!(c.in_p_e());
        if seen.insert(label_key(g, m, c.coords)) {
            labels.push(c);
        }
    }
    let grid_classes = build_grid(g, m)?.class_count();
    if labels.len() != grid_classes {
        return Err(Error::Internal(format!(
            "{g}, M={m}: found {} labels for {grid_classes} torus classes",
            labels.len()
        )));
    }
    labels.sort();
    let in_labels: BTreeSet<Weight> = labels.iter().copied().collect();
    let in_printed: BTreeSet<Weight> = printed.iter().copied().collect();
    let provenance = LabelProvenance {
        added: labels.iter().filter(|l| !in_printed.contains(l)).copied().collect(),
        dropped: printed.iter().filter(|l| !in_labels.contains(l)).copied().collect(),
        printed,
    };
    let norms = labels.iter().map(|l| discrete_norm(g, m, l)).collect();
    Ok(LabelSet { group: g, m, labels, norms, provenance })
}

/// ⟨f|h⟩_M = Σ ε_s f(s) h̄(s).
pub fn inner_product_m<T: Scalar>(grid: &Grid, f: &[Complex<T>], h: &[Complex<T>]) -> Result<Complex<T>> {
    for v in [f, h] {
        if v.len() != grid.len() {
            return Err(Error::LengthMismatch { expected: grid.len(), got: v.len() });
        }
    }
    let mut s = ComplexSum::new();
    for i in 0..grid.len() {
        s.add(f[i] * h[i].conj() * T::from_ratio(grid.eps[i]));
    }
    Ok(s.value())
}

/// Ξ_λ sampled on the grid, one row per label.
pub fn evaluation_matrix<T: Scalar>(grid: &Grid, labels: &[Weight]) -> Vec<Vec<Complex<T>>> {
    labels
        .par_iter()
        .map(|l| {
            let xi = OrbitFunction::<T>::new(OrbitFunctionKind::Xi, *l);
            (0..grid.len()).map(|i| xi.eval(grid.point::<T>(i).coords)).collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<T> {
    pub group: GroupId,
    pub m: i64,
    /// Sorted by label.
    pub entries: Vec<(Weight, Complex<T>)>,
}

impl<T: Scalar> Spectrum<T> {
    pub fn coefficient(&self, lambda: &Weight) -> Option<Complex<T>> {
        self.entries.binary_search_by(|(l, _)| l.cmp(lambda)).ok().map(|i| self.entries[i].1)
    }
}

/// d_λ = ⟨f|Ξ_λ⟩_M / ⟨Ξ_λ|Ξ_λ⟩_M for every λ ∈ Λ_M.
pub fn forward_discrete<T: Scalar>(grid: &Grid, labels: &LabelSet, f: &[Complex<T>]) -> Result<Spectrum<T>> {
    if grid.group != labels.group || grid.m != labels.m {
        return Err(Error::InvalidArgument("grid and label set describe different transforms".into()));
    }
    if f.len() != grid.len() {
        return Err(Error::LengthMismatch { expected: grid.len(), got: f.len() });
    }
    let rows = evaluation_matrix::<T>(grid, &labels.labels);
    let coeffs: Vec<Result<Complex<T>>> = rows
        .par_iter()
        .zip(labels.norms.par_iter())
        .map(|(row, n)| Ok(inner_product_m(grid, f, row)? / T::from_ratio(*n)))
        .collect();
    let mut entries = Vec::with_capacity(labels.len());
    for (l, c) in labels.labels.iter().zip(coeffs) {
        entries.push((*l, c?));
    }
    Ok(Spectrum { group: grid.group, m: grid.m, entries })
}

/// Σ d_λ Ξ_λ(x).
pub fn interpolate<T: Scalar>(spectrum: &Spectrum<T>, x: &DomainPoint<T>) -> Complex<T> {
    let mut s = ComplexSum::new();
    for (l, d) in &spectrum.entries {
        s.add(*d * OrbitFunction::<T>::new(OrbitFunctionKind::Xi, *l).eval(x.coords));
    }
    s.value()
}

/// Interpolant evaluated at every grid point.
pub fn interpolate_on_grid<T: Scalar>(spectrum: &Spectrum<T>, grid: &Grid) -> Vec<Complex<T>> {
    let labels: Vec<Weight> = spectrum.entries.iter().map(|(l, _)| *l).collect();
    let rows = evaluation_matrix::<T>(grid, &labels);
    (0..grid.len())
        .map(|i| {
            let mut s = ComplexSum::new();
            for (k, (_, d)) in spectrum.entries.iter().enumerate() {
                s.add(*d * rows[k][i]);
            }
            s.value()
        })
        .collect()
}
