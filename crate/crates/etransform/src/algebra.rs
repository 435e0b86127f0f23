//! Products of orbit functions and central splitting into congruence-class
//! components.
//!
//! The exact identities used throughout are the group sums
//!
//!   Ξ_λ Ξ_λ' = Σ_{u ∈ W_e} Ξ_{λ+uλ'},     Ω_λ Ω_λ' = Σ_{u ∈ W} Ω_{λ+uλ'},
//!
//! and for C-functions, C_λ C_λ' = Σ_{μ ∈ W(λ')} |W(λ)|/|W(λ+μ)| C_{λ+μ}.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cartan::GroupId;
use crate::error::{Error, Result};
use crate::mat::{int, Rational};
use crate::orbitfunc::{orbit_size, OrbitFunction, OrbitFunctionKind};
use crate::scalar::Scalar;
use crate::sum::ComplexSum;
use crate::transform_disc::Grid;
use crate::weyl::{
    center_elements, character_phase, full_group, orbit, reduce_to_fundamental, symmetry_group, CenterElement,
    DomainPoint, Weight,
};

/// Which function family the labels of a multiset refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Normalization {
    E,
    Xi,
    C,
    Omega,
}

impl Normalization {
    pub fn kind(self) -> OrbitFunctionKind {
        match self {
            Normalization::E => OrbitFunctionKind::E,
            Normalization::Xi => OrbitFunctionKind::Xi,
            Normalization::C => OrbitFunctionKind::C,
            Normalization::Omega => OrbitFunctionKind::Omega,
        }
    }

    fn canonical(self, w: &Weight) -> Weight {
        match self {
            Normalization::E | Normalization::Xi => w.e_representative(),
            Normalization::C | Normalization::Omega => w.dominant(),
        }
    }
}

/// A finite sum Σ c_γ F_γ of functions of one family.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LabelMultiset {
    pub group: GroupId,
    pub normalization: Normalization,
    /// Sorted by label, coefficients nonzero.
    pub entries: Vec<(Weight, Rational)>,
}

impl LabelMultiset {
    /// Merges terms after moving every label to its canonical orbit
    /// representative.
    pub fn collect<I: IntoIterator<Item = (Weight, Rational)>>(group: GroupId, normalization: Normalization, terms: I) -> Self {
        let mut acc: BTreeMap<Weight, Rational> = BTreeMap::new();
        for (w, c) in terms {
            *acc.entry(normalization.canonical(&w)).or_insert_with(Rational::zero) += c;
        }
        let entries = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LabelMultiset { group, normalization, entries }
    }

    /// Terms kept exactly as given, without canonicalization or merging.
    pub fn verbatim<I: IntoIterator<Item = (Weight, Rational)>>(group: GroupId, normalization: Normalization, terms: I) -> Self {
        LabelMultiset { group, normalization, entries: terms.into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of the coefficients.
    pub fn total(&self) -> Rational {
        self.entries.iter().fold(Rational::zero(), |a, (_, c)| a + c)
    }

    pub fn coefficient(&self, w: &Weight) -> Rational {
        let key = self.normalization.canonical(w);
        self.entries
            .iter()
            .filter(|(l, _)| self.normalization.canonical(l) == key)
            .fold(Rational::zero(), |a, (_, c)| a + c)
    }

    pub fn eval<T: Scalar>(&self, x: &DomainPoint<T>) -> Complex<T> {
        let mut s = ComplexSum::new();
        for (l, c) in &self.entries {
            s.add(OrbitFunction::<T>::new(self.normalization.kind(), *l).eval(x.coords) * T::from_ratio(*c));
        }
        s.value()
    }
}

/// Ξ_λ Ξ_λ' in three forms.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductDecomposition {
    pub lambda: Weight,
    pub lambda_prime: Weight,
    /// λ + uλ' for every u ∈ W_e, in group order (|W_e| labels).
    pub raw: Vec<Weight>,
    /// λ + μ for μ in the orbit W_e(λ'), uncanonicalized.
    pub raw_orbit: Vec<Weight>,
    /// The exact identity in Ξ-normalization with P_e labels.
    pub canonical: LabelMultiset,
}

impl ProductDecomposition {
    /// The same identity for E_λ E_λ': E_γ coefficients rescaled by
    /// |W_e(λ)||W_e(λ')| / (|W_e||W_e(γ)|).
    pub fn e_normalized(&self) -> LabelMultiset {
        let g = self.lambda.group;
        let we = symmetry_group(g).len() as i64;
        let scale = |w: &Weight| Rational::new(we, orbit_size(w, true) as i64);
        let lhs = scale(&self.lambda) * scale(&self.lambda_prime);
        LabelMultiset::collect(
            g,
            Normalization::E,
            self.canonical.entries.iter().map(|(w, c)| (*w, *c * scale(w) / lhs)),
        )
    }
}

fn same_group(a: &Weight, b: &Weight) -> Result<GroupId> {
    if a.group != b.group {
        return Err(Error::InvalidArgument(format!("labels of {} and {} cannot be multiplied", a.group, b.group)));
    }
    Ok(a.group)
}

/// Decomposes Ξ_λ Ξ_λ'.
pub fn product_e(lambda: &Weight, lambda_prime: &Weight) -> Result<ProductDecomposition> {
    let g = same_group(lambda, lambda_prime)?;
    let raw: Vec<Weight> = symmetry_group(g).iter().map(|u| lambda.add(&lambda_prime.apply(u))).collect();
    let raw_orbit = orbit(lambda_prime, true).iter().map(|mu| lambda.add(mu)).collect();
    let canonical = LabelMultiset::collect(g, Normalization::Xi, raw.iter().map(|w| (*w, int(1))));
    Ok(ProductDecomposition { lambda: *lambda, lambda_prime: *lambda_prime, raw, raw_orbit, canonical })
}

fn require_dominant(w: &Weight) -> Result<()> {
    if w.is_dominant() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{:?} is not a dominant weight", w.coords)))
    }
}

/// Decomposes Ω_λ Ω_λ' for dominant λ, λ'. The coefficient of Ω_γ is the
/// number of u ∈ W with λ+uλ' ∈ W(γ).
pub fn product_omega(lambda: &Weight, lambda_prime: &Weight) -> Result<LabelMultiset> {
    let g = same_group(lambda, lambda_prime)?;
    require_dominant(lambda)?;
    require_dominant(lambda_prime)?;
    Ok(LabelMultiset::collect(
        g,
        Normalization::Omega,
        full_group(g).iter().map(|u| (lambda.add(&lambda_prime.apply(u)), int(1))),
    ))
}

/// Decomposes C_λ C_λ' for dominant λ, λ' as
/// Σ_{μ ∈ W(λ')} |W(λ)|/|W(λ+μ)| C_{λ+μ}.
pub fn product_c(lambda: &Weight, lambda_prime: &Weight) -> Result<LabelMultiset> {
    let g = same_group(lambda, lambda_prime)?;
    require_dominant(lambda)?;
    require_dominant(lambda_prime)?;
    let wl = orbit_size(lambda, false) as i64;
    Ok(LabelMultiset::collect(
        g,
        Normalization::C,
        orbit(lambda_prime, false).iter().map(|mu| {
            let s = lambda.add(mu);
            (s, Rational::new(wl, orbit_size(&s, false) as i64))
        }),
    ))
}

/// E_m Ē_m' = E_{m−m'} in rank one.
pub fn a1_product_conj(m: i64, m_prime: i64) -> i64 {
    m - m_prime
}

/// The product formulas in their printed form, kept verbatim (misprints
/// included) so they can be compared with the exact decompositions.
pub mod printed {
    use super::*;

    /// Labels of the printed four-, three- and six-term Ξ products.
    pub fn product_e_terms(g: GroupId, l: [i64; 2], lp: [i64; 2]) -> Option<Vec<[i64; 2]>> {
        let ([a, b], [c, d]) = (l, lp);
        match g {
            GroupId::C2 => Some(vec![[a + c, b + d], [a - c, b - d], [a + 2 * d + c, b - c - d], [a - 2 * d - c, b + d + c]]),
            GroupId::A2 => Some(vec![[a + c, b + d], [a + d, b - c - d], [a - c - d, b + c]]),
            GroupId::G2 => Some(vec![
                [a + c, b + d],
                [a - c, b - d],
                [a + 2 * d + c, b - 3 * c - d],
                [a - 2 * d - c, b + 3 * c + d],
                [a - c - d, b + 3 * c + 2 * d],
                [a + c + d, b - 3 * c - 2 * d],
            ]),
            GroupId::A1xA1 => None,
        }
    }

    /// The printed eight-term list for C2 products with regular labels.
    pub fn omega_c2_regular(l: [i64; 2], lp: [i64; 2]) -> Vec<[i64; 2]> {
        let ([a, b], [c, d]) = (l, lp);
        vec![
            [a + c, b + d],
            [a - c, b - d],
            [-a + c, a + b + d],
            [-a - c, a + b - d],
            [a + c + 2 * d, b - d],
            [a + c - 2 * d, b + c + d],
            [a + c + 2 * d, b - c - d],
            [a - c - 2 * d, b + d],
        ]
    }

    /// Coefficient |W|/|W(γ)| of the printed formulas.
    pub fn weight_factor(g: GroupId, w: [i64; 2]) -> Rational {
        Rational::new(full_group(g).len() as i64, orbit_size(&Weight { group: g, coords: w }, false) as i64)
    }

    /// The general printed rule Σ_{μ ∈ W(λ')} |W|/|W(λ+μ)| F_{λ+μ}.
    pub fn omega_general(g: GroupId, l: [i64; 2], lp: [i64; 2]) -> Vec<(Rational, [i64; 2])> {
        let lam = Weight { group: g, coords: l };
        orbit(&Weight { group: g, coords: lp }, false)
            .iter()
            .map(|mu| {
                let s = lam.add(mu).coords;
                (weight_factor(g, s), s)
            })
            .collect()
    }

    /// The printed special cases for labels on the walls of P⁺. `None` when
    /// the pair is not one of the listed cases.
    pub fn omega_special(g: GroupId, l: [i64; 2], lp: [i64; 2]) -> Option<Vec<(Rational, [i64; 2])>> {
        let ([a, b], [c, d]) = (l, lp);
        let one = int(1);
        let f = |w: [i64; 2]| (weight_factor(g, w), w);
        match g {
            GroupId::C2 => {
                if b == 0 && d == 0 && a > 0 && c > 0 {
                    Some(vec![(one, [a + c, 0]), (one, [a - c, 0]), f([a - c, c])])
                } else if a == 0 && c == 0 && b > 0 && d > 0 {
                    Some(vec![(one, [0, b + d]), (one, [0, b - d]), f([2 * d, b - d])])
                } else if b == 0 && c == 0 && a > 0 && d > 0 {
                    Some(vec![f([a, d]), f([a, -d])])
                } else {
                    None
                }
            }
            GroupId::A2 => {
                if b == 0 && d == 0 && a > 0 && c > 0 {
                    Some(vec![(one, [a + c, 0]), f([a, -c])])
                } else if a == 0 && c == 0 && b > 0 && d > 0 {
                    Some(vec![(one, [0, b + d]), f([-d, b])])
                } else if b == 0 && c == 0 && a > 0 && d > 0 {
                    Some(vec![f([a, d]), (one, [0, -a + d])])
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// The printed A2 splitting, as f_j = ⅓{f(x) + φ_j f(p) + φ_j f(q)}
    /// with the two folded points (p, q) chosen by the sign of a.
    pub fn a2_split_points<T: Scalar>(x: [T; 2]) -> [[T; 2]; 2] {
        let [a, b] = x;
        let one = T::one();
        if a >= T::zero() {
            [[b - one, -a - b + one], [b - one, a + one]]
        } else {
            [[one - a - b, a], [b, -a - b + one]]
        }
    }

    /// Phase (in turns) multiplying both folded values in the printed f_j.
    pub fn a2_split_phase(j: usize) -> Rational {
        match j {
            0 => Rational::zero(),
            1 => Rational::new(-1, 3),
            _ => Rational::new(1, 3),
        }
    }

    /// Evaluates a printed multiset in the given normalization.
    pub fn eval<T: Scalar>(g: GroupId, norm: Normalization, terms: &[(Rational, [i64; 2])], x: &DomainPoint<T>) -> Complex<T> {
        LabelMultiset::verbatim(g, norm, terms.iter().map(|(c, w)| (Weight { group: g, coords: *w }, *c))).eval(x)
    }
}

/// The order s of the center and its elements, identity first.
pub fn center(g: GroupId) -> Vec<CenterElement> {
    center_elements(g)
}

fn conj_character<T: Scalar>(g: GroupId, j: usize, z: &CenterElement) -> Complex<T> {
    let phi = T::from_ratio(character_phase(g, j, z));
    let t = -T::TAU() * phi;
    Complex::new(t.cos(), t.sin())
}

/// Central splitting of a function on F^e: f_j(x) = (1/s) Σ_ž χ̄_j(ž) f(x+ž),
/// with x+ž folded back into F^e.
pub struct CentralSplit<F> {
    pub group: GroupId,
    f: F,
    elements: Vec<CenterElement>,
}

impl<F> CentralSplit<F> {
    pub fn new(group: GroupId, f: F) -> Self {
        CentralSplit { group, f, elements: center_elements(group) }
    }

    /// Number of components s.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The folded points reduce(x+ž), one per center element.
    pub fn folded_points<T: Scalar>(&self, x: &DomainPoint<T>) -> Result<Vec<DomainPoint<T>>> {
        self.elements.iter().map(|z| Ok(reduce_to_fundamental(&x.translate(z.coords), true)?.0)).collect()
    }

    /// f_j(x).
    pub fn component<T: Scalar>(&self, j: usize, x: &DomainPoint<T>) -> Result<Complex<T>>
    where
        F: Fn(&DomainPoint<T>) -> Complex<T>,
    {
        Ok(self.components(x)?.swap_remove(j))
    }

    /// All of f_0(x), …, f_{s−1}(x).
    pub fn components<T: Scalar>(&self, x: &DomainPoint<T>) -> Result<Vec<Complex<T>>>
    where
        F: Fn(&DomainPoint<T>) -> Complex<T>,
    {
        let vals: Vec<Complex<T>> = self.folded_points(x)?.iter().map(|p| (self.f)(p)).collect();
        let s = T::from_int(self.order() as i64);
        Ok((0..self.order())
            .map(|j| {
                let mut acc = ComplexSum::new();
                for (z, v) in self.elements.iter().zip(&vals) {
                    acc.add(conj_character::<T>(self.group, j, z) * *v);
                }
                acc.value() / s
            })
            .collect())
    }
}

/// For every grid point s and center element ž, the grid index of the torus
/// class of s + Mž. Fails if a translate leaves the grid's classes.
pub fn folding_maps(grid: &Grid) -> Result<Vec<Vec<usize>>> {
    let m = grid.m;
    center_elements(grid.group)
        .iter()
        .map(|z| {
            (0..grid.len())
                .map(|i| {
                    let s = grid.points[i];
                    let t = [s[0] + m * z.coords[0], s[1] + m * z.coords[1]];
                    grid.locate(t).ok_or(Error::OutsideDomain { point: t })
                })
                .collect()
        })
        .collect()
}

/// Central splitting of grid data; returns s vectors aligned with the grid.
pub fn central_split_grid<T: Scalar>(grid: &Grid, values: &[Complex<T>]) -> Result<Vec<Vec<Complex<T>>>> {
    if values.len() != grid.len() {
        return Err(Error::LengthMismatch { expected: grid.len(), got: values.len() });
    }
    let elements = center_elements(grid.group);
    if elements.len() == 1 {
        return Ok(vec![values.to_vec()]);
    }
    let maps = folding_maps(grid)?;
    let s = T::from_int(elements.len() as i64);
    Ok((0..elements.len())
        .map(|j| {
            let phases: Vec<Complex<T>> = elements.iter().map(|z| conj_character::<T>(grid.group, j, z)).collect();
            (0..grid.len())
                .map(|i| {
                    let mut acc = ComplexSum::new();
                    for (k, map) in maps.iter().enumerate() {
                        acc.add(phases[k] * values[map[i]]);
                    }
                    acc.value() / s
                })
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbitfunc::eval_generic;

    fn close(a: Complex<f64>, b: Complex<f64>) -> bool {
        (a - b).norm() < 1e-10 * (1.0 + a.norm())
    }

    #[test]
    fn c2_product_labels() {
        let (a, b, c, d) = (2, 3, 1, 1);
        let p = product_e(&Weight::new(GroupId::C2, a, b), &Weight::new(GroupId::C2, c, d)).unwrap();
        let mut got: Vec<_> = p.raw_orbit.iter().map(|w| w.coords).collect();
        got.sort();
        let mut want = printed::product_e_terms(GroupId::C2, [a, b], [c, d]).unwrap();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(p.canonical.total(), int(4));
    }

    #[test]
    fn a2_product_labels() {
        let p = product_e(&Weight::new(GroupId::A2, 2, -1), &Weight::new(GroupId::A2, 1, 3)).unwrap();
        let mut got: Vec<_> = p.raw_orbit.iter().map(|w| w.coords).collect();
        got.sort();
        let mut want = printed::product_e_terms(GroupId::A2, [2, -1], [1, 3]).unwrap();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn product_by_trivial_label() {
        let l = Weight::new(GroupId::G2, 1, 2);
        let p = product_e(&l, &Weight::zero(GroupId::G2)).unwrap();
        assert_eq!(p.canonical.entries, vec![(l, int(6))]);
        let o = product_omega(&l, &Weight::zero(GroupId::G2)).unwrap();
        assert_eq!(o.entries, vec![(l, int(12))]);
    }

    #[test]
    fn omega_product_pointwise() {
        let x = DomainPoint::new(GroupId::C2, 0.137, 0.291);
        for (l, lp) in [([2, 1], [1, 0]), ([1, 0], [1, 0]), ([0, 2], [3, 1])] {
            let l = Weight::new(GroupId::C2, l[0], l[1]);
            let lp = Weight::new(GroupId::C2, lp[0], lp[1]);
            let lhs = eval_generic(OrbitFunctionKind::Omega, &l, &x) * eval_generic(OrbitFunctionKind::Omega, &lp, &x);
            assert!(close(lhs, product_omega(&l, &lp).unwrap().eval(&x)));
            let lhs = eval_generic(OrbitFunctionKind::C, &l, &x) * eval_generic(OrbitFunctionKind::C, &lp, &x);
            assert!(close(lhs, product_c(&l, &lp).unwrap().eval(&x)));
        }
        assert!(product_omega(&Weight::new(GroupId::C2, -1, 0), &Weight::new(GroupId::C2, 1, 0)).is_err());
    }

    #[test]
    fn e_normalized_product() {
        let x = DomainPoint::new(GroupId::A2, 0.21, 0.43);
        let (l, lp) = (Weight::new(GroupId::A2, 2, 0), Weight::new(GroupId::A2, 1, -1));
        let lhs = eval_generic(OrbitFunctionKind::E, &l, &x) * eval_generic(OrbitFunctionKind::E, &lp, &x);
        assert!(close(lhs, product_e(&l, &lp).unwrap().e_normalized().eval(&x)));
    }

    #[test]
    fn c2_folding_is_the_printed_map() {
        let split = CentralSplit::new(GroupId::C2, |_: &DomainPoint<f64>| Complex::new(0.0, 0.0));
        let p: Vec<DomainPoint<f64>> = split.folded_points(&DomainPoint::new(GroupId::C2, 0.1, 0.3)).unwrap();
        assert_eq!(p.len(), 2);
        assert!((p[1].coords[0] + 0.1).abs() < 1e-12 && (p[1].coords[1] - 0.7).abs() < 1e-12);
    }

    #[test]
    fn splitting_e_function_is_pure() {
        let g = GroupId::A2;
        let l = Weight::new(g, 2, 0);
        let j = crate::weyl::congruence_class(&l);
        let f = |x: &DomainPoint<f64>| eval_generic(OrbitFunctionKind::E, &l, x);
        let split = CentralSplit::new(g, f);
        let x = DomainPoint::new(g, 0.3, 0.2);
        let comps = split.components(&x).unwrap();
        for (k, v) in comps.iter().enumerate() {
            let want = if k == j { f(&x) } else { Complex::new(0.0, 0.0) };
            assert!(close(*v, want), "{k}");
        }
    }

    #[test]
    fn a1_conjugate_product() {
        assert_eq!(a1_product_conj(5, 2), 3);
    }
}
