//! The rank-one case: E_k(x) = e^{iπkx} on the grid {−1, −(M−1)/M, …, 1},
//! with the endpoint weights ½ and the symmetric expansion over k = −M..M.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::mat::{int, rat, Rational};
use crate::scalar::Scalar;
use crate::sum::ComplexSum;

/// Grid numerators −M..M.
pub fn grid(m: i64) -> Vec<i64> {
    (-m..=m).collect()
}

pub fn epsilon(m: i64, k: i64) -> Rational {
    if k.abs() == m {
        rat(1, 2)
    } else {
        int(1)
    }
}

pub fn e<T: Scalar>(k: i64, x: T) -> Complex<T> {
    let t = T::PI() * T::from_int(k) * x;
    Complex::new(t.cos(), t.sin())
}

/// Samples E_k on the grid.
pub fn sample<T: Scalar>(m: i64, k: i64) -> Vec<Complex<T>> {
    grid(m).iter().map(|&s| e(k, T::from_int(s) / T::from_int(m))).collect()
}

/// Σ ε_s f(s) h̄(s).
pub fn inner_product<T: Scalar>(m: i64, f: &[Complex<T>], h: &[Complex<T>]) -> Result<Complex<T>> {
    let n = (2 * m + 1) as usize;
    for v in [f, h] {
        if v.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: v.len() });
        }
    }
    let mut s = ComplexSum::new();
    for (i, k) in (-m..=m).enumerate() {
        s.add(f[i] * h[i].conj() * T::from_ratio(epsilon(m, k)));
    }
    Ok(s.value())
}

/// ⟨f|E_k⟩_M = denominator·d_k: 4M at k = ±M, 2M otherwise.
pub fn coefficient_denominator(m: i64, k: i64) -> i64 {
    if k.abs() == m {
        4 * m
    } else {
        2 * m
    }
}

/// d_k for k = −M..M.
pub fn forward<T: Scalar>(m: i64, f: &[Complex<T>]) -> Result<Vec<(i64, Complex<T>)>> {
    if m < 1 {
        return Err(Error::InvalidArgument(format!("M must be at least 1, got {m}")));
    }
    (-m..=m)
        .map(|k| Ok((k, inner_product(m, f, &sample(m, k))? / T::from_int(coefficient_denominator(m, k)))))
        .collect()
}

pub fn interpolate<T: Scalar>(coeffs: &[(i64, Complex<T>)], x: T) -> Complex<T> {
    let mut s = ComplexSum::new();
    for (k, d) in coeffs {
        s.add(*d * e(*k, x));
    }
    s.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_of_seven() {
        assert_eq!(grid(3).len(), 7);
    }

    #[test]
    fn orthogonality() {
        for m in 1..6 {
            for a in -2 * m..=2 * m {
                for b in -2 * m..=2 * m {
                    let v = inner_product::<f64>(m, &sample(m, a), &sample(m, b)).unwrap();
                    let want = if (a - b).rem_euclid(2 * m) == 0 { 2.0 * m as f64 } else { 0.0 };
                    assert!((v - Complex::new(want, 0.0)).norm() < 1e-12, "{m} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn single_mode_is_reproduced() {
        let f = sample::<f64>(4, 1);
        let c = forward(4, &f).unwrap();
        for x in [-0.93, -0.2, 0.0, 0.41, 0.77] {
            assert!((interpolate(&c, x) - e(1, x)).norm() < 1e-12);
        }
    }
}
