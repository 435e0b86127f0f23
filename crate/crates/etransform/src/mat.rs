//! Tiny exact 2×2 linear algebra over integers and rationals.

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Rational = Ratio<i64>;
pub type IMat = [[i64; 2]; 2];
pub type RMat = [[Rational; 2]; 2];

pub const IDENTITY: IMat = [[1, 0], [0, 1]];

pub fn rat(n: i64, d: i64) -> Rational {
    Ratio::new(n, d)
}

pub fn int(n: i64) -> Rational {
    Ratio::from_integer(n)
}

pub fn to_rmat(m: &IMat) -> RMat {
    [[int(m[0][0]), int(m[0][1])], [int(m[1][0]), int(m[1][1])]]
}

pub fn to_imat(m: &RMat) -> Option<IMat> {
    let mut out = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            if !m[i][j].is_integer() {
                return None;
            }
            out[i][j] = m[i][j].to_integer();
        }
    }
    Some(out)
}

pub fn imul(a: &IMat, b: &IMat) -> IMat {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

pub fn imul_vec(a: &IMat, v: [i64; 2]) -> [i64; 2] {
    [a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]]
}

pub fn idet(a: &IMat) -> i64 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

pub fn itranspose(a: &IMat) -> IMat {
    [[a[0][0], a[1][0]], [a[0][1], a[1][1]]]
}

/// Adjugate, so that `a * adj(a) = det(a) * I`.
pub fn iadj(a: &IMat) -> IMat {
    [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]]
}

pub fn rmul(a: &RMat, b: &RMat) -> RMat {
    let mut c = [[Rational::zero(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

pub fn rmul_vec(a: &RMat, v: [Rational; 2]) -> [Rational; 2] {
    [a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]]
}

pub fn rtranspose(a: &RMat) -> RMat {
    [[a[0][0], a[1][0]], [a[0][1], a[1][1]]]
}

pub fn rdet(a: &RMat) -> Rational {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

pub fn rinv(a: &RMat) -> RMat {
    let d = rdet(a);
    assert!(!d.is_zero(), "singular matrix");
    [[a[1][1] / d, -a[0][1] / d], [-a[1][0] / d, a[0][0] / d]]
}

pub fn ridentity() -> RMat {
    [[Rational::one(), Rational::zero()], [Rational::zero(), Rational::one()]]
}
