//! E-, Ξ-, C- and Ω-functions: generic orbit sums and the per-group closed
//! forms.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::cartan::{pairing_coeffs, GroupId};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::weyl::{full_group, orbit, symmetry_group, DomainPoint, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrbitFunctionKind {
    E,
    Xi,
    C,
    Omega,
}

impl OrbitFunctionKind {
    fn even(self) -> bool {
        matches!(self, OrbitFunctionKind::E | OrbitFunctionKind::Xi)
    }
}

impl fmt::Display for OrbitFunctionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OrbitFunctionKind::E => "E",
            OrbitFunctionKind::Xi => "Xi",
            OrbitFunctionKind::C => "C",
            OrbitFunctionKind::Omega => "Omega",
        };
        f.write_str(s)
    }
}

impl FromStr for OrbitFunctionKind {
    type Err = Error;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "e" => Ok(OrbitFunctionKind::E),
            "xi" | "ξ" => Ok(OrbitFunctionKind::Xi),
            "c" => Ok(OrbitFunctionKind::C),
            "omega" | "ω" => Ok(OrbitFunctionKind::Omega),
            _ => Err(Error::InvalidArgument(format!("unknown function kind '{s}'"))),
        }
    }
}

/// |W_e(λ)| (or |W(λ)|), the size of the orbit.
pub fn orbit_size(lambda: &Weight, even: bool) -> usize {
    orbit(lambda, even).len()
}

/// The multiplier turning an orbit sum into `kind`'s normalization.
pub fn scale_factor<T: Scalar>(kind: OrbitFunctionKind, lambda: &Weight) -> T {
    let g = lambda.group;
    match kind {
        OrbitFunctionKind::E | OrbitFunctionKind::C => T::one(),
        OrbitFunctionKind::Xi => {
            T::from_int(symmetry_group(g).len() as i64) / T::from_int(orbit_size(lambda, true) as i64)
        }
        OrbitFunctionKind::Omega => {
            T::from_int(full_group(g).len() as i64) / T::from_int(orbit_size(lambda, false) as i64)
        }
    }
}

/// e^{2πiθ} with θ reduced modulo 1 first.
pub fn cis_turns<T: Scalar>(theta: T) -> Complex<T> {
    let t = theta - theta.round();
    let a = T::TAU() * t;
    Complex::new(a.cos(), a.sin())
}

/// An orbit function with its exponents precomputed, for repeated
/// evaluation.
#[derive(Clone, Debug)]
pub struct OrbitFunction<T> {
    pub kind: OrbitFunctionKind,
    pub label: Weight,
    freqs: Vec<[T; 2]>,
    scale: T,
}

impl<T: Scalar> OrbitFunction<T> {
    pub fn new(kind: OrbitFunctionKind, label: Weight) -> Self {
        let freqs = orbit(&label, kind.even())
            .iter()
            .map(|mu| pairing_coeffs(label.group, mu.coords).map(T::from_ratio))
            .collect();
        OrbitFunction { kind, label, freqs, scale: scale_factor(kind, &label) }
    }

    pub fn eval(&self, x: [T; 2]) -> Complex<T> {
        let mut s = Complex::new(T::zero(), T::zero());
        for k in &self.freqs {
            s = s + cis_turns(k[0] * x[0] + k[1] * x[1]);
        }
        s * self.scale
    }
}

/// Orbit-sum evaluation; the reference definition of every function.
pub fn eval_generic<T: Scalar>(kind: OrbitFunctionKind, lambda: &Weight, x: &DomainPoint<T>) -> Complex<T> {
    debug_assert_eq!(lambda.group, x.group);
    OrbitFunction::new(kind, *lambda).eval(x.coords)
}

/// The per-group explicit formulas for E and Ξ.
pub fn eval_closed<T: Scalar>(kind: OrbitFunctionKind, lambda: &Weight, x: &DomainPoint<T>) -> Result<Complex<T>> {
    let g = lambda.group;
    if !kind.even() {
        return Err(Error::Unsupported { group: g, what: format!("closed form for {kind}") });
    }
    let [a, b] = lambda.coords.map(T::from_int);
    let [x, y] = x.coords;
    let two = T::from_int(2);
    let three = T::from_int(3);
    let pi = T::PI();
    let cos2 = |t: T| Complex::new(two * t.cos(), T::zero());
    let xi = match g {
        GroupId::A1xA1 => {
            let t = pi * (a * x + b * y);
            Complex::new(t.cos(), t.sin())
        }
        GroupId::C2 => cos2(pi * ((two * a + two * b) * x + (a + two * b) * y)) + cos2(pi * (two * b * x - a * y)),
        GroupId::A2 => {
            let e = |t: T| Complex::new(t.cos(), t.sin());
            let c = two * pi / three;
            e(c * ((two * a + b) * x + (a + two * b) * y))
                + e(-c * ((x + two * y) * a + (y - x) * b))
                + e(-c * ((x - y) * a + (two * x + y) * b))
        }
        GroupId::G2 => {
            let tp = two * pi;
            cos2(tp * ((two * a + b) * x + (three * a + two * b) * y))
                + cos2(tp * (a * x + (three * a + b) * y))
                + cos2(tp * ((a + b) * x + b * y))
        }
    };
    Ok(match kind {
        OrbitFunctionKind::Xi => xi,
        _ => xi / scale_factor::<T>(OrbitFunctionKind::Xi, lambda),
    })
}

/// C_λ assembled from E-functions: the W-orbit of λ splits into orbits of
/// the E-function symmetry group, one E per piece (two for λ ∈ P⁺⁺ in the
/// simple groups).
pub fn c_from_e<T: Scalar>(lambda: &Weight, x: &DomainPoint<T>) -> Result<Complex<T>> {
    if !lambda.is_dominant() {
        return Err(Error::InvalidArgument(format!("{:?} is not dominant", lambda.coords)));
    }
    let mut reps: Vec<Weight> = orbit(lambda, false).iter().map(|w| w.e_representative()).collect();
    reps.sort();
    reps.dedup();
    Ok(reps.iter().map(|r| eval_generic(OrbitFunctionKind::E, r, x)).fold(Complex::new(T::zero(), T::zero()), |s, v| s + v))
}

/// −4π²⟨λ,λ⟩.
pub fn laplace_eigenvalue<T: Scalar>(lambda: &Weight) -> T {
    let four = T::from_int(4);
    -four * T::PI() * T::PI() * T::from_ratio(lambda.norm_sq())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex<f64>, b: Complex<f64>, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn trivial_label_is_one() {
        for g in GroupId::ALL {
            let x = DomainPoint::new(g, 0.31, -0.17);
            let v = eval_generic(OrbitFunctionKind::E, &Weight::zero(g), &x);
            assert!(close(v, Complex::new(1.0, 0.0), 1e-15));
            let xi = eval_generic(OrbitFunctionKind::Xi, &Weight::zero(g), &x);
            assert!(close(xi, Complex::new(symmetry_group(g).len() as f64, 0.0), 1e-14));
        }
    }

    #[test]
    fn a1xa1_exponential() {
        let (a, b, x, y) = (3i64, -2i64, 0.37f64, -0.81f64);
        let v = eval_generic(OrbitFunctionKind::E, &Weight::new(GroupId::A1xA1, a, b), &DomainPoint::new(GroupId::A1xA1, x, y));
        let t = std::f64::consts::PI * (a as f64 * x + b as f64 * y);
        assert!(close(v, Complex::new(t.cos(), t.sin()), 1e-13));
    }

    #[test]
    fn g2_origin_is_six() {
        let v = eval_closed(OrbitFunctionKind::Xi, &Weight::zero(GroupId::G2), &DomainPoint::new(GroupId::G2, 0.0, 0.0)).unwrap();
        assert!(close(v, Complex::new(6.0, 0.0), 1e-14));
    }

    #[test]
    fn a2_origin_is_three() {
        for (a, b) in [(1, 0), (2, 5), (-3, 4)] {
            let v = eval_closed(OrbitFunctionKind::Xi, &Weight::new(GroupId::A2, a, b), &DomainPoint::new(GroupId::A2, 0.0, 0.0)).unwrap();
            assert!(close(v, Complex::new(3.0, 0.0), 1e-14));
        }
    }

    #[test]
    fn c2_wall_labels_are_c_functions() {
        let x = DomainPoint::new(GroupId::C2, 0.23, 0.41);
        let l = Weight::new(GroupId::C2, 3, 0);
        let e = eval_generic(OrbitFunctionKind::E, &l, &x);
        let c = eval_generic(OrbitFunctionKind::C, &l, &x);
        assert!(close(e, c, 1e-13));
    }

    #[test]
    fn c_from_e_splits() {
        let x = DomainPoint::new(GroupId::C2, 0.23, 0.41);
        let l = Weight::new(GroupId::C2, 2, 1);
        let c = eval_generic(OrbitFunctionKind::C, &l, &x);
        let xi = eval_generic(OrbitFunctionKind::Xi, &l, &x) + eval_generic(OrbitFunctionKind::Xi, &Weight::new(GroupId::C2, -2, 3), &x);
        assert!(close(c_from_e(&l, &x).unwrap(), c, 1e-13));
        // for regular labels Ω = Ξ_λ + Ξ_{r1 λ}
        assert!(close(eval_generic(OrbitFunctionKind::Omega, &l, &x), xi, 1e-13));
        assert!(c_from_e(&Weight::new(GroupId::C2, -1, 0), &x).is_err());
        assert!(close(c_from_e(&Weight::zero(GroupId::C2), &x).unwrap(), Complex::new(1.0, 0.0), 1e-15));
    }

    #[test]
    fn unsupported_closed_forms() {
        let x = DomainPoint::new(GroupId::A2, 0.1, 0.2);
        assert!(eval_closed(OrbitFunctionKind::C, &Weight::new(GroupId::A2, 1, 1), &x).is_err());
    }

    #[test]
    fn a2_eigenvalue() {
        let v: f64 = laplace_eigenvalue(&Weight::new(GroupId::A2, 1, 0));
        let pi = std::f64::consts::PI;
        assert!((v + 4.0 * pi * pi * 2.0 / 3.0).abs() < 1e-12);
        assert_eq!(laplace_eigenvalue::<f64>(&Weight::zero(GroupId::G2)), 0.0);
    }
}
