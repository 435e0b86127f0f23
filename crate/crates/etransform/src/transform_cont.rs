//! Continuous E-transform by quadrature over F^e.

use num_complex::Complex;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartan::{Basis, GroupId};
use crate::error::{Error, Result};
use crate::mat::{int, rat, rdet, Rational};
use crate::orbitfunc::{orbit_size, OrbitFunction, OrbitFunctionKind};
use crate::quadrature::{gauss_legendre, QuadratureSpec};
use crate::scalar::Scalar;
use crate::sum::ComplexSum;
use crate::weyl::{in_fundamental_even, DomainPoint, Weight};

#[derive(Clone, Debug, PartialEq)]
pub enum Shape {
    /// origin + u e1 + v e2, (u,v) ∈ [0,1]².
    Parallelogram { origin: [Rational; 2], e1: [Rational; 2], e2: [Rational; 2] },
    /// Collapsed square v0 + u(v1 − v0) + uv(v2 − v1).
    Triangle { v0: [Rational; 2], v1: [Rational; 2], v2: [Rational; 2] },
}

#[derive(Clone, Debug, PartialEq)]
pub struct FundamentalDomain {
    pub group: GroupId,
    /// Vertices in ω̌-coordinates.
    pub vertices: Vec<[Rational; 2]>,
    pub shape: Shape,
}

fn sub(a: [Rational; 2], b: [Rational; 2]) -> [Rational; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

fn det2(a: [Rational; 2], b: [Rational; 2]) -> Rational {
    rdet(&[a, b])
}

impl FundamentalDomain {
    pub fn new(group: GroupId) -> Self {
        let z = int(0);
        let p = |a: Rational, b: Rational| [a, b];
        match group {
            GroupId::A1xA1 => FundamentalDomain {
                group,
                vertices: vec![p(int(-1), int(-1)), p(int(1), int(-1)), p(int(1), int(1)), p(int(-1), int(1))],
                shape: Shape::Parallelogram { origin: p(int(-1), int(-1)), e1: p(int(2), z), e2: p(z, int(2)) },
            },
            GroupId::C2 => FundamentalDomain {
                group,
                vertices: vec![p(z, z), p(rat(1, 2), z), p(z, int(1)), p(rat(-1, 2), int(1))],
                shape: Shape::Parallelogram { origin: p(z, z), e1: p(rat(1, 2), z), e2: p(rat(-1, 2), int(1)) },
            },
            GroupId::A2 => FundamentalDomain {
                group,
                vertices: vec![p(z, z), p(int(1), z), p(z, int(1)), p(int(-1), int(1))],
                shape: Shape::Parallelogram { origin: p(z, z), e1: p(int(1), z), e2: p(int(-1), int(1)) },
            },
            GroupId::G2 => FundamentalDomain {
                group,
                vertices: vec![p(z, z), p(z, rat(1, 3)), p(int(1), rat(-1, 3))],
                shape: Shape::Triangle { v0: p(z, z), v1: p(z, rat(1, 3)), v2: p(int(1), rat(-1, 3)) },
            },
        }
    }

    /// Area in ω̌-coordinates.
    pub fn coord_area(&self) -> Rational {
        match &self.shape {
            Shape::Parallelogram { e1, e2, .. } => num_traits::Signed::abs(&det2(*e1, *e2)),
            Shape::Triangle { v0, v1, v2 } => num_traits::Signed::abs(&det2(sub(*v1, *v0), sub(*v2, *v1))) / int(2),
        }
    }

    /// √det of the ω̌ Gram matrix, converting coordinate area to Euclidean area.
    pub fn measure_factor<T: Scalar>(&self) -> T {
        T::from_ratio(rdet(&self.group.data().gram(Basis::OmegaCheck))).sqrt()
    }

    /// |F^e| in the Euclidean measure of orthonormal coordinates.
    pub fn volume<T: Scalar>(&self) -> T {
        T::from_ratio(self.coord_area()) * self.measure_factor()
    }

    /// Maps (u,v) ∈ [0,1]² onto the domain; returns the point and the
    /// coordinate Jacobian.
    pub fn map<T: Scalar>(&self, u: T, v: T) -> ([T; 2], T) {
        let c = |r: [Rational; 2]| r.map(T::from_ratio);
        match &self.shape {
            Shape::Parallelogram { origin, e1, e2 } => {
                let (o, a, b) = (c(*origin), c(*e1), c(*e2));
                let jac = T::from_ratio(num_traits::Signed::abs(&det2(*e1, *e2)));
                ([o[0] + u * a[0] + v * b[0], o[1] + u * a[1] + v * b[1]], jac)
            }
            Shape::Triangle { v0, v1, v2 } => {
                let (p0, d1, d2) = (c(*v0), c(sub(*v1, *v0)), c(sub(*v2, *v1)));
                let jac = T::from_ratio(num_traits::Signed::abs(&det2(sub(*v1, *v0), sub(*v2, *v1)))) * u;
                ([p0[0] + u * d1[0] + u * v * d2[0], p0[1] + u * d1[1] + u * v * d2[1]], jac)
            }
        }
    }

    /// Tensor Gauss–Legendre nodes with Euclidean weights.
    pub fn nodes<T: Scalar>(&self, order: usize) -> Vec<([T; 2], T)> {
        let (x, w) = gauss_legendre(order);
        let f = self.measure_factor::<T>();
        let mut out = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                let (p, jac) = self.map(T::lit(x[i]), T::lit(x[j]));
                out.push((p, T::lit(w[i] * w[j]) * jac * f));
            }
        }
        out
    }

    pub fn contains<T: Scalar>(&self, x: [T; 2], tol: T) -> bool {
        in_fundamental_even(self.group, x, tol)
    }
}

fn integrate<T: Scalar>(nodes: &[([T; 2], T)], vals: &[Complex<T>]) -> Complex<T> {
    let mut s = ComplexSum::new();
    for ((_, w), v) in nodes.iter().zip(vals) {
        s.add(*v * *w);
    }
    s.value()
}

fn check<T: Scalar>(hi: Complex<T>, lo: Complex<T>, tol: f64) -> Result<()> {
    let err = (hi - lo).norm().to_f64().unwrap_or(f64::INFINITY);
    let scale = hi.norm().to_f64().unwrap_or(1.0).max(1.0);
    if err <= tol * scale {
        Ok(())
    } else {
        Err(Error::Quadrature { requested: tol, achieved: err / scale })
    }
}

/// ∫_{F^e} f h̄ in the Euclidean measure.
pub fn inner_product_continuous<T, F, H>(g: GroupId, f: F, h: H, quad: &QuadratureSpec) -> Result<Complex<T>>
where
    T: Scalar,
    F: Fn([T; 2]) -> Complex<T> + Sync,
    H: Fn([T; 2]) -> Complex<T> + Sync,
{
    if quad.order < 2 {
        return Err(Error::InvalidArgument("quadrature order must be at least 2".into()));
    }
    let dom = FundamentalDomain::new(g);
    let run = |order: usize| {
        let nodes = dom.nodes::<T>(order);
        let vals: Vec<Complex<T>> = nodes.par_iter().map(|(p, _)| f(*p) * h(*p).conj()).collect();
        integrate(&nodes, &vals)
    };
    let hi = run(quad.order);
    let lo = run(quad.companion_order());
    check(hi, lo, quad.tolerance)?;
    Ok(hi)
}

/// Finite subsets of P_e.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Truncation {
    /// All λ ∈ P_e with ⟨λ,λ⟩ ≤ R².
    Radius(f64),
    /// The n labels of P_e with smallest ⟨λ,λ⟩ (ties broken by coordinates).
    Lowest(usize),
    Labels(Vec<[i64; 2]>),
}

impl Truncation {
    pub fn labels(&self, g: GroupId) -> Vec<Weight> {
        match self {
            Truncation::Radius(r) => p_e_by_norm(g, *r),
            Truncation::Lowest(n) => {
                let mut r = 1.0;
                loop {
                    let l = p_e_by_norm(g, r);
                    if l.len() >= *n {
                        return l.into_iter().take(*n).collect();
                    }
                    r *= 1.5;
                }
            }
            Truncation::Labels(v) => {
                let mut l: Vec<Weight> = v.iter().map(|c| Weight { group: g, coords: *c }.e_representative()).collect();
                l.sort();
                l.dedup();
                l
            }
        }
    }

    pub fn description(&self) -> String {
        match self {
            Truncation::Radius(r) => format!("P_e labels with |lambda| <= {r}"),
            Truncation::Lowest(n) => format!("{n} lowest P_e labels"),
            Truncation::Labels(v) => format!("{} explicit labels", v.len()),
        }
    }
}

/// P_e labels with ⟨λ,λ⟩ ≤ R², sorted by norm then coordinates.
pub fn p_e_by_norm(g: GroupId, radius: f64) -> Vec<Weight> {
    let gr = g.data().gram(Basis::Omega);
    let (a, b, c) = (
        f64::from_ratio(gr[0][0]),
        f64::from_ratio(gr[0][1]),
        f64::from_ratio(gr[1][1]),
    );
    let lmin = 0.5 * (a + c) - (0.25 * (a - c) * (a - c) + b * b).sqrt();
    let k = (radius / lmin.sqrt()).ceil() as i64 + 1;
    let r2 = radius * radius;
    let mut out: Vec<(Rational, Weight)> = Vec::new();
    for x in -k..=k {
        for y in -k..=k {
            let w = Weight::new(g, x, y);
            if !w.in_p_e() {
                continue;
            }
            let n = w.norm_sq();
            if f64::from_ratio(n) <= r2 * (1.0 + 1e-12) {
                out.push((n, w));
            }
        }
    }
    out.sort();
    out.into_iter().map(|(_, w)| w).collect()
}

/// ∫|E_λ|² = |F^e| |W_e(λ)|.
pub fn e_norm_closed<T: Scalar>(lambda: &Weight) -> T {
    FundamentalDomain::new(lambda.group).volume::<T>() * T::from_int(orbit_size(lambda, true) as i64)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ContinuousSpectrum<T> {
    pub group: GroupId,
    /// Sorted by label.
    pub entries: Vec<(Weight, Complex<T>)>,
    pub truncation: String,
    /// Largest relative gap between the quadrature norm ∫|E_λ|² and its
    /// closed form over the truncation.
    pub norm_deviation: T,
}

impl<T: Scalar> ContinuousSpectrum<T> {
    pub fn coefficient(&self, lambda: &Weight) -> Option<Complex<T>> {
        self.entries.binary_search_by(|(l, _)| l.cmp(lambda)).ok().map(|i| self.entries[i].1)
    }
}

/// c_λ = ∫ f Ē_λ / (|F^e||W_e(λ)|) for every λ of the truncation.
pub fn forward_continuous<T, F>(g: GroupId, f: F, truncation: &Truncation, quad: &QuadratureSpec) -> Result<ContinuousSpectrum<T>>
where
    T: Scalar,
    F: Fn([T; 2]) -> Complex<T> + Sync,
{
    if quad.order < 2 {
        return Err(Error::InvalidArgument("quadrature order must be at least 2".into()));
    }
    let dom = FundamentalDomain::new(g);
    let hi_nodes = dom.nodes::<T>(quad.order);
    let lo_nodes = dom.nodes::<T>(quad.companion_order());
    let hi_f: Vec<Complex<T>> = hi_nodes.par_iter().map(|(p, _)| f(*p)).collect();
    let lo_f: Vec<Complex<T>> = lo_nodes.par_iter().map(|(p, _)| f(*p)).collect();
    let labels = truncation.labels(g);
    let results: Vec<Result<(Weight, Complex<T>, T)>> = labels
        .par_iter()
        .map(|lambda| {
            let e = OrbitFunction::<T>::new(OrbitFunctionKind::E, *lambda);
            let proj = |nodes: &[([T; 2], T)], fv: &[Complex<T>]| {
                let mut s = ComplexSum::new();
                let mut n = ComplexSum::new();
                for ((p, w), v) in nodes.iter().zip(fv) {
                    let ev = e.eval(*p);
                    s.add(*v * ev.conj() * *w);
                    n.add(Complex::new(ev.norm_sqr() * *w, T::zero()));
                }
                (s.value(), n.value().re)
            };
            let (hi, hi_norm) = proj(&hi_nodes, &hi_f);
            let (lo, _) = proj(&lo_nodes, &lo_f);
            check(hi, lo, quad.tolerance)?;
            let norm = e_norm_closed::<T>(lambda);
            let dev = ((hi_norm - norm) / norm).abs();
            Ok((*lambda, hi / norm, dev))
        })
        .collect();
    let mut entries = Vec::with_capacity(labels.len());
    let mut dev = T::zero();
    for r in results {
        let (l, c, d) = r?;
        entries.push((l, c));
        dev = dev.max(d);
    }
    Ok(ContinuousSpectrum { group: g, entries, truncation: truncation.description(), norm_deviation: dev })
}

/// Σ c_λ E_λ(x).
pub fn reconstruct<T: Scalar>(spectrum: &ContinuousSpectrum<T>, x: &DomainPoint<T>) -> Complex<T> {
    let mut s = ComplexSum::new();
    for (l, c) in &spectrum.entries {
        if c.is_zero() {
            continue;
        }
        s.add(*c * OrbitFunction::<T>::new(OrbitFunctionKind::E, *l).eval(x.coords));
    }
    s.value()
}
