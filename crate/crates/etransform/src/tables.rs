//! Case tables as printed for the discretizations: counting coefficients
//! ε_s, spectral label sets Λ_M and discrete norms. They are kept verbatim so
//! the generic computations can be checked against them; `None` means the
//! printed table has no case for the input.

use crate::cartan::GroupId;
use crate::mat::{int, rat, Rational};
use crate::weyl::Weight;

fn between(lo: i64, x: i64, hi: i64) -> bool {
    lo < x && x < hi
}

fn eps_a1(m: i64, k: i64) -> Option<Rational> {
    if k.abs() == m {
        Some(rat(1, 2))
    } else if k.abs() < m {
        Some(int(1))
    } else {
        None
    }
}

/// Printed ε_s for the grid point s/M.
pub fn epsilon_printed(g: GroupId, m: i64, s: [i64; 2]) -> Option<Rational> {
    let [s1, s2] = s;
    match g {
        GroupId::A1xA1 => Some(eps_a1(m, s1)? * eps_a1(m, s2)?),
        GroupId::C2 => {
            if (s1 == 0 && (s2 == 0 || s2 == m)) || (s2 == 0 && 2 * s1 == m) || (2 * s1 == -m && s2 == m) {
                Some(int(1))
            } else if (2 * s1 + s2 == 0 && between(0, s2, m))
                || (2 * s1 + s2 == m && between(0, s2, m))
                || (s2 == 0 && between(0, 2 * s1, m))
                || (s2 == m && between(-m, 2 * s1, 0))
            {
                Some(int(2))
            } else if between(0, s2, m) && between(0, 2 * s1 + s2, m) {
                Some(int(4))
            } else {
                None
            }
        }
        GroupId::A2 => {
            if (s2 == 0 && s1 == m) || (s2 == m && s1 == -m) {
                Some(rat(1, 2))
            } else if s1 == 0 && (s2 == 0 || s2 == m) {
                Some(int(1))
            } else if (s2 == 0 && between(0, s1, m))
                || (s2 == m && between(-m, s1, 0))
                || (s1 + s2 == m && between(0, s2, m))
                || (s1 + s2 == 0 && between(0, s2, m))
            {
                Some(rat(3, 2))
            } else if between(0, s2, m) && between(0, s1 + s2, m) {
                Some(int(3))
            } else {
                None
            }
        }
        GroupId::G2 => {
            if (s1 == 0 && s2 == 0) || (s1 == 0 && 3 * s2 == m) || (s1 == m && 3 * s2 == -m) {
                Some(int(1))
            } else if (s1 == 0 && between(0, 3 * s2, m))
                || (3 * s2 + s1 == 0 && between(0, s1, m))
                || (3 * s2 + 2 * s1 == m && between(0, s1, m))
            {
                Some(int(3))
            } else if between(0, s1, m) && 0 < s1 + 3 * s2 && 2 * s1 + 3 * s2 < m {
                Some(int(6))
            } else {
                None
            }
        }
    }
}

/// The printed inequality description of Λ_M, intersected with P_e.
pub fn lambda_printed(g: GroupId, m: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    for a in -3 * m..=3 * m {
        for b in -3 * m..=3 * m {
            let w = Weight::new(g, a, b);
            let keep = match g {
                GroupId::A1xA1 => a.abs() <= m && b.abs() <= m,
                GroupId::C2 => 0 < a + 2 * b && a + 2 * b <= m && 0 <= a && a < m,
                GroupId::A2 => 0 < a + b && a + b <= m && 0 <= a && a < m,
                GroupId::G2 => 0 < 3 * a + b && 3 * a + 2 * b <= m && 0 <= 3 * a && 3 * a <= m,
            };
            if keep && w.in_p_e() {
                out.push(w);
            }
        }
    }
    out
}

/// Printed ⟨Ξ_λ|Ξ_λ⟩_M, read off at the dominant label of λ's W-orbit
/// (reflected labels repeat the value of their dominant partner).
pub fn norm_printed(g: GroupId, m: i64, lambda: &Weight) -> Option<Rational> {
    let [a, b] = if g == GroupId::A1xA1 { lambda.coords } else { lambda.dominant().coords };
    let m2 = m * m;
    match g {
        GroupId::A1xA1 => (a.abs() <= m && b.abs() <= m).then(|| int(4 * m2)),
        GroupId::C2 => {
            let f = if (a == 0 || a == m) && b == 0 {
                4
            } else if a == 0 && 2 * b == m {
                2
            } else if (between(0, a, m) && between(0, a + 2 * b, m))
                || (a == 0 && between(0, 2 * b, m))
                || (a + 2 * b == m && between(0, 2 * b, m))
            {
                1
            } else {
                return None;
            };
            Some(int(8 * m2 * f))
        }
        GroupId::A2 => {
            let f = if (between(0, a, m) && (b == 0 || b == m)) || (0 <= a + b && a + b <= m && between(0, a, m)) {
                1
            } else if (a == 0 && b == 0) || (a == 0 && b == m) || (a == m && b == 0) {
                3
            } else {
                return None;
            };
            Some(int(9 * m2 * f))
        }
        GroupId::G2 => {
            let f = if a == 0 && b == 0 {
                6
            } else if 3 * a == m && b == 0 {
                3
            } else if a == 0 && 2 * b == m {
                2
            } else if (b == 0 && between(0, 3 * a, m)) || (a == 0 && between(0, 2 * b, m)) || (0 < 3 * a + b && 3 * a + 2 * b < m) {
                1
            } else {
                return None;
            };
            Some(int(6 * m2 * f))
        }
    }
}
