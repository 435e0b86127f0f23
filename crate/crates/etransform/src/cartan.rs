//! Root-system constants for the four rank-two groups and the exact basis
//! conversions between simple roots, fundamental weights and their duals.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::mat::{int, rat, rinv, rmul, rmul_vec, rtranspose, to_rmat, IMat, RMat, Rational};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupId {
    A1xA1,
    A2,
    C2,
    G2,
}

impl GroupId {
    pub const ALL: [GroupId; 4] = [GroupId::A1xA1, GroupId::A2, GroupId::C2, GroupId::G2];

    pub fn name(self) -> &'static str {
        match self {
            GroupId::A1xA1 => "A1xA1",
            GroupId::A2 => "A2",
            GroupId::C2 => "C2",
            GroupId::G2 => "G2",
        }
    }

    pub fn data(self) -> &'static CartanData {
        cartan_data(self)
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm: String = s
            .trim()
            .chars()
            .filter(|c| !matches!(c, '×' | '*' | '_' | '-' | ' '))
            .collect::<String>()
            .to_ascii_uppercase();
        match norm.as_str() {
            "A1XA1" | "A1A1" => Ok(GroupId::A1xA1),
            "A2" => Ok(GroupId::A2),
            "C2" | "B2" => Ok(GroupId::C2),
            "G2" => Ok(GroupId::G2),
            _ => Err(Error::InvalidArgument(format!("unknown group '{s}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Alpha,
    Omega,
    AlphaCheck,
    OmegaCheck,
}

/// Constant root-system data. Row `i` of `cartan` holds α_i in ω-coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct CartanData {
    pub group: GroupId,
    pub gram_alpha: RMat,
    pub cartan: IMat,
    pub cartan_inv: RMat,
    /// Coefficients of the highest root in the α-basis. For A1xA1 these are
    /// the marks of each factor's highest root.
    pub highest_root_marks: [i64; 2],
    /// Coefficients of the highest root in the α̌-basis.
    pub comarks: [i64; 2],
    /// Coefficients of the highest coroot in the α̌-basis; they bound the
    /// spectral label region.
    pub dual_marks: [i64; 2],
    pub weyl_order: usize,
    pub center_order: usize,
    /// 1 or 2: the simple reflection r_i with F^e = F ∪ r_i F.
    pub even_reflection_index: usize,
}

impl CartanData {
    /// Zero-based index of the even reflection.
    pub fn even_reflection(&self) -> usize {
        self.even_reflection_index - 1
    }

    pub fn root_length_sq(&self, i: usize) -> Rational {
        self.gram_alpha[i][i]
    }

    /// det C, which equals |P/Q| and |P̌/Q̌|.
    pub fn det(&self) -> i64 {
        self.cartan[0][0] * self.cartan[1][1] - self.cartan[0][1] * self.cartan[1][0]
    }

    /// Rows express the vectors of `basis` in the α-basis.
    pub fn basis_matrix(&self, basis: Basis) -> RMat {
        let d = [
            [int(2) / self.root_length_sq(0), Rational::zero()],
            [Rational::zero(), int(2) / self.root_length_sq(1)],
        ];
        match basis {
            Basis::Alpha => crate::mat::ridentity(),
            Basis::Omega => self.cartan_inv,
            Basis::AlphaCheck => d,
            Basis::OmegaCheck => rmul(&d, &self.cartan_inv),
        }
    }

    /// Gram matrix of `basis`.
    pub fn gram(&self, basis: Basis) -> RMat {
        let m = self.basis_matrix(basis);
        rmul(&rmul(&m, &self.gram_alpha), &rtranspose(&m))
    }
}

fn build(group: GroupId) -> CartanData {
    let (gram_alpha, cartan, marks, dual_marks, weyl_order, even) = match group {
        GroupId::A1xA1 => (
            [[int(2), int(0)], [int(0), int(2)]],
            [[2, 0], [0, 2]],
            [1, 1],
            [1, 1],
            4,
            1,
        ),
        GroupId::A2 => (
            [[int(2), int(-1)], [int(-1), int(2)]],
            [[2, -1], [-1, 2]],
            [1, 1],
            [1, 1],
            6,
            1,
        ),
        GroupId::C2 => (
            [[int(1), int(-1)], [int(-1), int(2)]],
            [[2, -1], [-2, 2]],
            [2, 1],
            [1, 2],
            8,
            1,
        ),
        GroupId::G2 => (
            [[int(2), int(-1)], [int(-1), rat(2, 3)]],
            [[2, -3], [-1, 2]],
            [2, 3],
            [3, 2],
            12,
            2,
        ),
    };
    let cartan_inv = rinv(&to_rmat(&cartan));
    let comarks = [0, 1].map(|i| {
        let q = int(marks[i]) * gram_alpha[i][i] / int(2);
        assert!(q.is_integer());
        q.to_integer()
    });
    let det = cartan[0][0] * cartan[1][1] - cartan[0][1] * cartan[1][0];
    CartanData {
        group,
        gram_alpha,
        cartan,
        cartan_inv,
        highest_root_marks: marks,
        comarks,
        dual_marks,
        weyl_order,
        center_order: det as usize,
        even_reflection_index: even,
    }
}

pub fn cartan_data(g: GroupId) -> &'static CartanData {
    static TABLE: OnceLock<Vec<CartanData>> = OnceLock::new();
    &TABLE.get_or_init(|| GroupId::ALL.iter().map(|&g| build(g)).collect())[g.index()]
}

/// Expresses `v` (given in `from`) in the α-basis.
pub fn to_alpha(g: GroupId, v: [Rational; 2], from: Basis) -> [Rational; 2] {
    rmul_vec(&rtranspose(&g.data().basis_matrix(from)), v)
}

/// Exact change of basis.
pub fn convert(g: GroupId, v: [Rational; 2], from: Basis, to: Basis) -> [Rational; 2] {
    let a = to_alpha(g, v, from);
    rmul_vec(&rinv(&rtranspose(&g.data().basis_matrix(to))), a)
}

/// Exact inner product of two vectors given in arbitrary bases.
pub fn inner(g: GroupId, u: [Rational; 2], bu: Basis, v: [Rational; 2], bv: Basis) -> Rational {
    let a = to_alpha(g, u, bu);
    let b = to_alpha(g, v, bv);
    let gv = rmul_vec(&g.data().gram_alpha, b);
    a[0] * gv[0] + a[1] * gv[1]
}

/// ⟨λ,λ⟩ for a weight in ω-coordinates.
pub fn weight_norm_sq(g: GroupId, lambda: [i64; 2]) -> Rational {
    let l = [int(lambda[0]), int(lambda[1])];
    inner(g, l, Basis::Omega, l, Basis::Omega)
}

/// Coefficients k with ⟨λ, x⟩ = k·x for x in ω̌-coordinates.
pub fn pairing_coeffs(g: GroupId, lambda: [i64; 2]) -> [Rational; 2] {
    let ci = &g.data().cartan_inv;
    [0, 1].map(|j| int(lambda[0]) * ci[0][j] + int(lambda[1]) * ci[1][j])
}

/// ⟨λ, x⟩ with λ in ω-coordinates and x in ω̌-coordinates.
pub fn pairing<T: Scalar>(g: GroupId, lambda: [i64; 2], x: [T; 2]) -> T {
    let k = pairing_coeffs(g, lambda);
    T::from_ratio(k[0]) * x[0] + T::from_ratio(k[1]) * x[1]
}

/// Exact pairing of a weight with a rational point.
pub fn pairing_exact(g: GroupId, lambda: [i64; 2], x: [Rational; 2]) -> Rational {
    let k = pairing_coeffs(g, lambda);
    k[0] * x[0] + k[1] * x[1]
}

/// Lower-triangular factor of the α Gram matrix; row i is α_i in an
/// orthonormal frame.
fn cholesky<T: Scalar>(g: GroupId) -> [[T; 2]; 2] {
    let gr = g.data().gram_alpha;
    let g00 = T::from_ratio(gr[0][0]);
    let g01 = T::from_ratio(gr[0][1]);
    let g11 = T::from_ratio(gr[1][1]);
    let l00 = g00.sqrt();
    let l10 = g01 / l00;
    let l11 = (g11 - l10 * l10).sqrt();
    [[l00, T::zero()], [l10, l11]]
}

/// Coordinates of `v` (given in `basis`) in a fixed orthonormal frame.
pub fn to_orthonormal<T: Scalar>(g: GroupId, v: [T; 2], basis: Basis) -> [T; 2] {
    let m = g.data().basis_matrix(basis);
    let a = [0, 1].map(|k| T::from_ratio(m[0][k]) * v[0] + T::from_ratio(m[1][k]) * v[1]);
    let l = cholesky::<T>(g);
    [a[0] * l[0][0] + a[1] * l[1][0], a[0] * l[0][1] + a[1] * l[1][1]]
}

/// Inverse of [`to_orthonormal`].
pub fn from_orthonormal<T: Scalar>(g: GroupId, y: [T; 2], basis: Basis) -> [T; 2] {
    let l = cholesky::<T>(g);
    // y = a0 * L0 + a1 * L1 with L lower triangular.
    let a1 = y[1] / l[1][1];
    let a0 = (y[0] - a1 * l[1][0]) / l[0][0];
    let minv = rinv(&rtranspose(&g.data().basis_matrix(basis)));
    [0, 1].map(|i| T::from_ratio(minv[i][0]) * a0 + T::from_ratio(minv[i][1]) * a1)
}

/// Positive roots in the α-basis, found by closing the simple roots under
/// the simple reflections.
pub fn positive_roots(g: GroupId) -> Vec<[i64; 2]> {
    let c = g.data().cartan;
    let mut roots: Vec<[i64; 2]> = vec![[1, 0], [0, 1]];
    let mut i = 0;
    while i < roots.len() {
        let beta = roots[i];
        for k in 0..2 {
            // ⟨β, α̌_k⟩ = Σ_j β_j C_jk
            let p = beta[0] * c[0][k] + beta[1] * c[1][k];
            let mut r = beta;
            r[k] -= p;
            let r = if r[0] < 0 || r[1] < 0 { [-r[0], -r[1]] } else { r };
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        i += 1;
    }
    roots.sort();
    roots
}

/// The highest root in the α-basis for the simple groups.
pub fn highest_root(g: GroupId) -> Option<[i64; 2]> {
    let roots = positive_roots(g);
    let h = roots.iter().map(|r| r[0] + r[1]).max()?;
    let top: Vec<_> = roots.iter().filter(|r| r[0] + r[1] == h).collect();
    (top.len() == 1).then(|| *top[0])
}

/// ω-coordinates of a vector given in the α-basis.
pub fn alpha_to_omega(g: GroupId, c: [i64; 2]) -> [i64; 2] {
    let m = g.data().cartan;
    [c[0] * m[0][0] + c[1] * m[1][0], c[0] * m[0][1] + c[1] * m[1][1]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::{rmul as rm, to_rmat as tr};
    use num_traits::One;

    #[test]
    fn cartan_times_inverse_is_identity() {
        for g in GroupId::ALL {
            let d = g.data();
            let p = rm(&tr(&d.cartan), &d.cartan_inv);
            assert!(p[0][0].is_one() && p[1][1].is_one());
            assert!(p[0][1].is_zero() && p[1][0].is_zero());
        }
    }

    #[test]
    fn cartan_from_gram() {
        for g in GroupId::ALL {
            let d = g.data();
            for i in 0..2 {
                for j in 0..2 {
                    let c = int(2) * d.gram_alpha[i][j] / d.gram_alpha[j][j];
                    assert_eq!(c, int(d.cartan[i][j]), "{g} {i}{j}");
                }
            }
        }
    }

    #[test]
    fn printed_cartan_rows() {
        assert_eq!(GroupId::A2.data().cartan, [[2, -1], [-1, 2]]);
        assert_eq!(GroupId::C2.data().cartan, [[2, -1], [-2, 2]]);
        assert_eq!(GroupId::A1xA1.data().cartan, [[2, 0], [0, 2]]);
        assert_eq!(GroupId::G2.data().center_order, 1);
    }

    #[test]
    fn marks_match_highest_root() {
        for g in [GroupId::A2, GroupId::C2, GroupId::G2] {
            let d = g.data();
            assert_eq!(highest_root(g), Some(d.highest_root_marks));
            // ξ_h = Σ m_i α_i = Σ q_i α̌_i
            let m = [int(d.highest_root_marks[0]), int(d.highest_root_marks[1])];
            let q = convert(g, m, Basis::Alpha, Basis::AlphaCheck);
            assert_eq!(q, [int(d.comarks[0]), int(d.comarks[1])]);
        }
        assert_eq!(highest_root(GroupId::A1xA1), None);
    }

    #[test]
    fn dual_marks_are_highest_coroot() {
        for g in [GroupId::A2, GroupId::C2, GroupId::G2] {
            let d = g.data();
            let best = positive_roots(g)
                .into_iter()
                .map(|c| {
                    let v = [int(c[0]), int(c[1])];
                    let len = inner(g, v, Basis::Alpha, v, Basis::Alpha);
                    // coroot 2β/|β|² in the α̌ basis
                    let a = to_alpha(g, v, Basis::Alpha).map(|x| x * int(2) / len);
                    convert(g, a, Basis::Alpha, Basis::AlphaCheck)
                })
                .max_by_key(|v| v[0] + v[1])
                .unwrap();
            assert_eq!(best, [int(d.dual_marks[0]), int(d.dual_marks[1])], "{g}");
        }
    }

    #[test]
    fn orthonormal_lengths() {
        let a1 = to_orthonormal(GroupId::A2, [1.0f64, 0.0], Basis::Alpha);
        assert!((a1[0] * a1[0] + a1[1] * a1[1] - 2.0).abs() < 1e-14);
        let a2 = to_orthonormal(GroupId::G2, [0.0f64, 1.0], Basis::Alpha);
        assert!((a2[0] * a2[0] + a2[1] * a2[1] - 2.0 / 3.0).abs() < 1e-14);
        assert_eq!(to_orthonormal(GroupId::C2, [0.0, 0.0], Basis::OmegaCheck), [0.0, 0.0]);
    }

    #[test]
    fn pairing_a1xa1() {
        let v = pairing(GroupId::A1xA1, [3, -2], [0.25f64, 0.5]);
        assert!((v - (3.0 * 0.25 - 2.0 * 0.5) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn fundamental_weights_dual_to_coroots() {
        for g in GroupId::ALL {
            for i in 0..2 {
                for j in 0..2 {
                    let mut w = [int(0), int(0)];
                    w[i] = int(1);
                    let mut a = [int(0), int(0)];
                    a[j] = int(1);
                    let p = inner(g, w, Basis::Omega, a, Basis::AlphaCheck);
                    assert_eq!(p, if i == j { int(1) } else { int(0) });
                }
            }
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!("a1xa1".parse::<GroupId>().unwrap(), GroupId::A1xA1);
        assert_eq!("A1×A1".parse::<GroupId>().unwrap(), GroupId::A1xA1);
        assert_eq!("G2".parse::<GroupId>().unwrap(), GroupId::G2);
        assert!("E8".parse::<GroupId>().is_err());
    }
}
