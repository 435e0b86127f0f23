//! Numerical verification of the library's identities, one check per
//! criterion, collected into a JSON-serializable report.
//!
//! Every check is self-contained and seeded, so reports are reproducible.
//! Divergences between the printed case tables and the computed values are
//! listed under `discrepancies` rather than hidden.

use std::collections::BTreeMap;
use std::time::Instant;

use num_complex::Complex;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::a1;
use crate::algebra::{self, printed, product_c, product_e, product_omega, CentralSplit, Normalization};
use crate::cartan::{from_orthonormal, to_orthonormal, Basis, GroupId};
use crate::mat::{int, Rational};
use crate::orbitfunc::{eval_closed, eval_generic, laplace_eigenvalue, OrbitFunction, OrbitFunctionKind};
use crate::quadrature::QuadratureSpec;
use crate::tables;
use crate::transform_cont::{e_norm_closed, FundamentalDomain, Truncation};
use crate::transform_disc::{
    build_grid, build_label_set, discrete_norm, evaluation_matrix, forward_discrete, inner_product_m,
    interpolate_on_grid, Grid,
};
use crate::weyl::{congruence_class, simple_reflection, symmetry_group, DomainPoint, Weight};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub summary: String,
    pub metrics: BTreeMap<String, f64>,
    pub discrepancies: Vec<String>,
}

impl CriterionReport {
    fn new(id: u32, name: &str) -> Self {
        CriterionReport {
            id,
            name: name.to_string(),
            passed: true,
            summary: String::new(),
            metrics: BTreeMap::new(),
            discrepancies: Vec::new(),
        }
    }

    fn metric_max(&mut self, key: &str, v: f64) {
        let e = self.metrics.entry(key.to_string()).or_insert(0.0);
        *e = e.max(v);
    }

    fn fail(&mut self, msg: String) {
        self.passed = false;
        self.discrepancies.push(msg);
    }

    /// One line: `PASS|FAIL <id> <name>: <summary>`.
    pub fn line(&self) -> String {
        format!("{} {:>2} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.id, self.name, self.summary)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub passed: bool,
    pub criteria: Vec<CriterionReport>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub groups: Vec<GroupId>,
    /// Replaces the M ranges of the discrete checks when set.
    pub m_values: Option<Vec<i64>>,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { groups: GroupId::ALL.to_vec(), m_values: None, seed: 20_250_101 }
    }
}

impl VerifyOptions {
    fn ms(&self, default: &[i64]) -> Vec<i64> {
        self.m_values.clone().unwrap_or_else(|| default.to_vec())
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }

    fn has(&self, g: GroupId) -> bool {
        self.groups.contains(&g)
    }
}

pub fn run(opts: &VerifyOptions) -> Report {
    let criteria = vec![
        discrete_orthogonality(opts),
        norm_tables(opts),
        epsilon_tables(opts),
        round_trip(opts),
        continuous_orthogonality(opts),
        closed_forms(opts),
        products(opts),
        laplacian(opts),
        central_splitting(opts),
        invariance(opts),
    ];
    Report { passed: criteria.iter().all(|c| c.passed), criteria }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

fn random_point(rng: &mut ChaCha8Rng, g: GroupId) -> DomainPoint<f64> {
    DomainPoint::new(g, rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

fn random_weight(rng: &mut ChaCha8Rng, g: GroupId, lo: i64, hi: i64) -> Weight {
    Weight::new(g, rng.gen_range(lo..=hi), rng.gen_range(lo..=hi))
}

fn random_complex(rng: &mut ChaCha8Rng) -> Complex<f64> {
    Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Random data that is a function on the torus: one value per class.
pub fn random_grid_data(rng: &mut ChaCha8Rng, grid: &Grid) -> Vec<Complex<f64>> {
    let per_class: Vec<Complex<f64>> = (0..grid.class_count()).map(|_| random_complex(rng)).collect();
    grid.expand_classes(&per_class).expect("class count matches")
}

fn gram(grid: &Grid, rows: &[Vec<Complex<f64>>]) -> Vec<Vec<Complex<f64>>> {
    rows.iter().map(|r| rows.iter().map(|s| inner_product_m(grid, r, s).expect("aligned")).collect()).collect()
}

/// Criterion 1: the Gram matrix over Λ_M is diagonal with the exact norms.
pub fn discrete_orthogonality(opts: &VerifyOptions) -> CriterionReport {
    let mut c = CriterionReport::new(1, "discrete orthogonality");
    let start = Instant::now();
    for &g in &opts.groups {
        for m in opts.ms(&[1, 2, 3, 4, 5, 6, 7, 8]) {
            let grid = build_grid(g, m).expect("valid M");
            let labels = build_label_set(g, m).expect("label set");
            let rows = evaluation_matrix::<f64>(&grid, &labels.labels);
            let gm = gram(&grid, &rows);
            let scale = (m * m) as f64;
            for i in 0..labels.len() {
                for j in 0..labels.len() {
                    if i == j {
                        let want = f64_of(labels.norms[i]);
                        let d = rel(gm[i][i].re, want).max(gm[i][i].im.abs() / want);
                        c.metric_max("diag_rel_err", d);
                        if d > 1e-9 {
                            c.fail(format!("{g} M={m} {:?}: norm {} expected {want}", labels.labels[i].coords, gm[i][i]));
                        }
                    } else {
                        let off = gm[i][j].norm() / scale;
                        c.metric_max("offdiag_over_m2", off);
                        if off >= 1e-9 {
                            c.fail(format!("{g} M={m}: <{:?}|{:?}> = {}", labels.labels[i].coords, labels.labels[j].coords, gm[i][j]));
                        }
                    }
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    c.metrics.insert("seconds".into(), secs);
    if secs >= 10.0 {
        c.fail(format!("took {secs:.1} s"));
    }
    c.summary = format!(
        "max |off-diag|/M^2 = {:.1e}, max diag rel err = {:.1e}, {:.2} s",
        c.metrics.get("offdiag_over_m2").copied().unwrap_or(0.0),
        c.metrics.get("diag_rel_err").copied().unwrap_or(0.0),
        secs
    );
    c
}

fn f64_of(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Criterion 2: measured ⟨Ξ_λ|Ξ_λ⟩_M against the printed case tables.
pub fn norm_tables(opts: &VerifyOptions) -> CriterionReport {
    let mut c = CriterionReport::new(2, "norm tables");
    let mut compared = 0usize;
    let mut uncovered = 0usize;
    let ms = opts.ms(&[2, 3, 4, 6]);
    for &m in &ms {
        // Rank one: ⟨E_k|E_k⟩ = 2M; E_M and E_{-M} agree on the grid, hence
        // the doubled denominator 4M at k = ±M.
        for k in -m..=m {
            let e = a1::sample::<f64>(m, k);
            let n = a1::inner_product(m, &e, &e).expect("aligned").re;
            compared += 1;
            if rel(n, (2 * m) as f64) > 1e-9 {
                c.fail(format!("A1 M={m} k={k}: norm {n}, expected {}", 2 * m));
            }
            if k.abs() == m {
                let p = a1::inner_product(m, &e, &a1::sample::<f64>(m, -k)).expect("aligned").re;
                if rel(p + n, a1::coefficient_denominator(m, k) as f64) > 1e-9 {
                    c.fail(format!("A1 M={m} k={k}: aliased norm {}", p + n));
                }
            }
        }
    }
    for &g in &opts.groups {
        for &m in &ms {
            let grid = build_grid(g, m).expect("valid M");
            let labels = build_label_set(g, m).expect("label set");
            let rows = evaluation_matrix::<f64>(&grid, &labels.labels);
            for (l, row) in labels.labels.iter().zip(&rows) {
                let measured = inner_product_m(&grid, row, row).expect("aligned").re;
                match tables::norm_printed(g, m, l) {
                    Some(p) => {
                        compared += 1;
                        let d = rel(measured, f64_of(p));
                        c.metric_max("max_rel_err", d);
                        if d > 1e-9 {
                            c.fail(format!("{g} M={m} {:?}: measured {measured}, printed {}", l.coords, f64_of(p)));
                        }
                    }
                    None => {
                        uncovered += 1;
                        c.discrepancies.push(format!(
                            "{g} M={m} {:?}: no printed case; measured {measured} = {} (exact)",
                            l.coords,
                            discrete_norm(g, m, l)
                        ));
                    }
                }
            }
        }
    }
    c.metrics.insert("compared".into(), compared as f64);
    c.metrics.insert("uncovered".into(), uncovered as f64);
    c.summary = format!(
        "{compared} norms compared, max rel err {:.1e}; {uncovered} labels have no printed case (listed)",
        c.metrics.get("max_rel_err").copied().unwrap_or(0.0)
    );
    c
}

/// Criterion 3: ε_s against the printed tables, and the sum Σ ε_s = M².
pub fn epsilon_tables(opts: &VerifyOptions) -> CriterionReport {
    let mut c = CriterionReport::new(3, "epsilon tables");
    let mut points = 0usize;
    let mut table_mismatch = 0usize;
    let mut sum_literal_fail = Vec::new();
    for &g in &opts.groups {
        for m in opts.ms(&[2, 3, 4, 5, 6, 7, 8]) {
            let grid = build_grid(g, m).expect("valid M");
            for (s, e) in grid.points.iter().zip(&grid.eps) {
                points += 1;
                match tables::epsilon_printed(g, m, *s) {
                    Some(p) if p == *e => {}
                    other => {
                        table_mismatch += 1;
                        c.fail(format!("{g} M={m} s={s:?}: computed {e}, printed {other:?}"));
                    }
                }
            }
            let sum = grid.eps_sum();
            if sum != int(grid.torus_order()) {
                c.fail(format!("{g} M={m}: sum of eps {sum} differs from |T_M| = {}", grid.torus_order()));
            }
            if sum != int(m * m) {
                sum_literal_fail.push(format!("{g}/M={m}"));
                c.fail(format!("{g} M={m}: sum of eps = {sum} = det(C)·M², not M² = {}", m * m));
            }
        }
    }
    c.metrics.insert("points".into(), points as f64);
    c.metrics.insert("table_mismatches".into(), table_mismatch as f64);
    c.metrics.insert("sum_eq_m2_failures".into(), sum_literal_fail.len() as f64);
    c.summary = format!(
        "{points} grid points, {table_mismatch} table mismatches; sum = det(C)·M² everywhere; sum = M² fails for {} group/M pairs",
        sum_literal_fail.len()
    );
    c
}

/// Criterion 4: interpolate ∘ forward is the identity on grid data.
pub fn round_trip(opts: &VerifyOptions) -> CriterionReport {
    let mut c = CriterionReport::new(4, "round-trip interpolation");
    let mut rng = opts.rng(4);
    for &g in &opts.groups {
        for m in opts.ms(&[2, 4, 6]) {
            let grid = build_grid(g, m).expect("valid M");
            let labels = build_label_set(g, m).expect("label set");
            for _ in 0..50 {
                let f = random_grid_data(&mut rng, &grid);
                let spec = forward_discrete(&grid, &labels, &f).expect("forward");
                let back = interpolate_on_grid(&spec, &grid);
                let r = f.iter().zip(&back).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
                c.metric_max("max_residual", r);
                if r >= 1e-9 {
                    c.fail(format!("{g} M={m}: residual {r:.3e}"));
                }
            }
        }
    }
    c.summary = format!("max residual {:.1e}", c.metrics.get("max_residual").copied().unwrap_or(0.0));
    c
}

/// Criterion 5: quadrature Gram matrix of the 15 lowest E-functions.
pub fn continuous_orthogonality(opts: &VerifyOptions) -> CriterionReport {
    let mut c = CriterionReport::new(5, "continuous orthogonality");
    let start = Instant::now();
    let quad = QuadratureSpec::default();
    for &g in &opts.groups {
        let dom = FundamentalDomain::new(g);
        let nodes = dom.nodes::<f64>(quad.order);
        let labels = Truncation::Lowest(15).labels(g);
        let vals: Vec<Vec<Complex<f64>>> = labels
            .iter()
            .map(|l| {
                let e = OrbitFunction::<f64>::new(OrbitFunctionKind::E, *l);
                nodes.iter().map(|(p, _)| e.eval(*p)).collect()
            })
            .collect();
        for i in 0..labels.len() {
            for j in 0..labels.len() {
                let mut s = crate::sum::ComplexSum::new();
                for (k, (_, w)) in nodes.iter().enumerate() {
                    s.add(vals[i][k] * vals[j][k].conj() * *w);
                }
                let v = s.value();
                if i == j {
                    let want = e_norm_closed::<f64>(&labels[i]);
                    let d = (v - want).norm();
                    c.metric_max("diag_err", d);
                    if d >= 1e-6 {
                        c.fail(format!("{g} {:?}: norm {v}, expected {want}", labels[i].coords));
                    }
                } else {
                    c.metric_max("offdiag", v.norm());
                    if v.norm() >= 1e-6 {
                        c.fail(format!("{g}: <{:?}|{:?}> = {v}", labels[i].coords, labels[j].coords));
                    }
                }
            }
        }
        c.metrics.insert(format!("volume_{}", g.name()), dom.volume::<f64>());
    }
    let secs = start.elapsed().as_secs_f64();
    c.metrics.insert("seconds".into(), secs);
    if secs >= 60.0 {
        c.fail(format!("took {secs:.1} s"));
    }
    c.summary = format!(
        "max |off-diag| {:.1e}, max diag err {:.1e}, {:.2} s",
        c.metrics.get("offdiag").copied().unwrap_or(0.0),
        c.metrics.get("diag_err").copied().unwrap_or(0.0),
        secs
    );
    c
}

/// Criterion 6: explicit formulas against orbit sums.
pub fn closed_forms(opts: &VerifyOptions) -> CriterionReport {
    let mut c = CriterionReport::new(6, "closed forms");
    let mut rng = opts.rng(6);
    for &g in &opts.groups {
        for _ in 0..200 {
            let l = random_weight(&mut rng, g, -10, 10);
            let x = random_point(&mut rng, g);
            for kind in [OrbitFunctionKind::E, OrbitFunctionKind::Xi] {
                let a = eval_closed(kind, &l, &x).expect("closed form");
                let b = eval_generic(kind, &l, &x);
                let d = (a - b).norm();
                c.metric_max("max_err", d);
                if d >= 1e-10 {
                    c.fail(format!("{g} {kind} {:?} at {:?}: {a} vs {b}", l.coords, x.coords));
                }
            }
        }
    }
    c.summary = format!("max |closed - orbit sum| {:.1e}", c.metrics.get("max_err").copied().unwrap_or(0.0));
    c
}

fn pointwise_gap<L, R>(rng: &mut ChaCha8Rng, g: GroupId, lhs: L, rhs: R) -> f64
where
    L: Fn(&DomainPoint<f64>) -> Complex<f64>,
    R: Fn(&DomainPoint<f64>) -> Complex<f64>,
{
    (0..100)
        .map(|_| {
            let x = random_point(rng, g);
            let a = lhs(&x);
            (a - rhs(&x)).norm() / a.norm().max(1.0)
        })
        .fold(0.0, f64::max)
}

fn eval_kind(kind: OrbitFunctionKind, l: &Weight) -> impl Fn(&DomainPoint<f64>) -> Complex<f64> {
    let f = OrbitFunction::<f64>::new(kind, *l);
    move |x| f.eval(x.coords)
}

/// Criterion 7: product decompositions hold pointwise.
pub fn products(opts: &VerifyOptions) -> CriterionReport {
    let mut c = CriterionReport::new(7, "product identities");
    let mut rng = opts.rng(7);
    let tol = 1e-10;
    let mut literal_omega_fail = 0usize;
    let mut literal_omega_total = 0usize;
    for &g in &opts.groups {
        let mut printed_e_fail = 0usize;
        for _ in 0..20 {
            // Ξ products for arbitrary P_e labels.
            let l = random_weight(&mut rng, g, -6, 6).e_representative();
            let lp = random_weight(&mut rng, g, -6, 6).e_representative();
            let p = product_e(&l, &lp).expect("same group");
            let (f, h) = (eval_kind(OrbitFunctionKind::Xi, &l), eval_kind(OrbitFunctionKind::Xi, &lp));
            let gap = pointwise_gap(&mut rng, g, |x| f(x) * h(x), |x| p.canonical.eval(x));
            c.metric_max("xi_product", gap);
            if gap >= tol {
                c.fail(format!("{g} Xi{:?}·Xi{:?}: gap {gap:.2e}", l.coords, lp.coords));
            }
            let (f, h) = (eval_kind(OrbitFunctionKind::E, &l), eval_kind(OrbitFunctionKind::E, &lp));
            let en = p.e_normalized();
            let gap = pointwise_gap(&mut rng, g, |x| f(x) * h(x), |x| en.eval(x));
            c.metric_max("e_product", gap);
            if gap >= tol {
                c.fail(format!("{g} E{:?}·E{:?}: gap {gap:.2e}", l.coords, lp.coords));
            }
            if let Some(terms) = printed::product_e_terms(g, l.coords, lp.coords) {
                let t: Vec<(Rational, [i64; 2])> = terms.into_iter().map(|w| (int(1), w)).collect();
                let f = eval_kind(OrbitFunctionKind::Xi, &l);
                let h = eval_kind(OrbitFunctionKind::Xi, &lp);
                let gap = pointwise_gap(&mut rng, g, |x| f(x) * h(x), |x| printed::eval(g, Normalization::Xi, &t, x));
                if gap >= tol {
                    printed_e_fail += 1;
                }
            }

            // Ω and C products, λ ∈ P⁺⁺, λ' ∈ P⁺ \ {0}.
            if g == GroupId::A1xA1 {
                continue;
            }
            let l = Weight::new(g, rng.gen_range(1..=6), rng.gen_range(1..=6));
            let lp = loop {
                let w = random_weight(&mut rng, g, 0, 5);
                if !w.is_zero() {
                    break w;
                }
            };
            let (f, h) = (eval_kind(OrbitFunctionKind::Omega, &l), eval_kind(OrbitFunctionKind::Omega, &lp));
            let om = product_omega(&l, &lp).expect("dominant");
            let gap = pointwise_gap(&mut rng, g, |x| f(x) * h(x), |x| om.eval(x));
            c.metric_max("omega_product", gap);
            if gap >= tol {
                c.fail(format!("{g} Omega{:?}·Omega{:?}: gap {gap:.2e}", l.coords, lp.coords));
            }
            // The printed rule Σ |W|/|W(λ+μ)| F_{λ+μ} with F = C.
            let rule = printed::omega_general(g, l.coords, lp.coords);
            let (fc, hc) = (eval_kind(OrbitFunctionKind::C, &l), eval_kind(OrbitFunctionKind::C, &lp));
            let gap = pointwise_gap(&mut rng, g, |x| fc(x) * hc(x), |x| printed::eval(g, Normalization::C, &rule, x));
            c.metric_max("printed_rule_c", gap);
            if gap >= tol {
                c.fail(format!("{g} printed rule as C identity, {:?}·{:?}: gap {gap:.2e}", l.coords, lp.coords));
            }
            let pc = product_c(&l, &lp).expect("dominant");
            let gap = pointwise_gap(&mut rng, g, |x| fc(x) * hc(x), |x| pc.eval(x));
            c.metric_max("c_product", gap);
            if gap >= tol {
                c.fail(format!("{g} C{:?}·C{:?}: gap {gap:.2e}", l.coords, lp.coords));
            }
            // The same rule read with Ω on both sides.
            literal_omega_total += 1;
            let gap = pointwise_gap(&mut rng, g, |x| f(x) * h(x), |x| printed::eval(g, Normalization::Omega, &rule, x));
            if gap >= tol {
                literal_omega_fail += 1;
            }
        }
        if printed_e_fail > 0 {
            c.discrepancies.push(format!(
                "{g}: printed Xi product list disagrees with the product for {printed_e_fail}/20 label pairs"
            ));
        }
    }
    if literal_omega_fail > 0 {
        c.discrepancies.push(format!(
            "printed rule with Omega normalization on both sides fails for {literal_omega_fail}/{literal_omega_total} pairs (holds for C-functions)"
        ));
    }
    if opts.has(GroupId::C2) {
        product_notes_c2(&mut c);
    }
    if opts.has(GroupId::A2) {
        special_case_notes(&mut c, GroupId::A2);
    }
    c.summary = format!(
        "Xi/E/Omega/C products exact (max gap {:.1e}); printed Omega rule holds as a C-function identity; {} printed-formula discrepancies listed",
        ["xi_product", "e_product", "omega_product", "c_product", "printed_rule_c"]
            .iter()
            .filter_map(|k| c.metrics.get(*k))
            .fold(0.0f64, |a, b| a.max(*b)),
        c.discrepancies.len()
    );
    c
}

fn product_notes_c2(c: &mut CriterionReport) {
    let g = GroupId::C2;
    let mut rng = ChaCha8Rng::seed_from_u64(72);
    let (l, lp) = ([5, 4], [1, 1]);
    let list: Vec<(Rational, [i64; 2])> = printed::omega_c2_regular(l, lp).into_iter().map(|w| (int(1), w)).collect();
    let (f, h) = (eval_kind(OrbitFunctionKind::C, &Weight::new(g, l[0], l[1])), eval_kind(OrbitFunctionKind::C, &Weight::new(g, lp[0], lp[1])));
    let gap = pointwise_gap(&mut rng, g, |x| f(x) * h(x), |x| printed::eval(g, Normalization::C, &list, x));
    if gap >= 1e-10 {
        let mut fixed = list.clone();
        fixed[5].1 = [l[0] - lp[0] - 2 * lp[1], l[1] + lp[0] + lp[1]];
        let gap2 = pointwise_gap(&mut rng, g, |x| f(x) * h(x), |x| printed::eval(g, Normalization::C, &fixed, x));
        c.discrepancies.push(format!(
            "C2 eight-term list at (5,4)·(1,1): gap {gap:.2e}; with (a+c-2d,b+c+d) read as (a-c-2d,b+c+d) the gap is {gap2:.2e}"
        ));
    }
    special_case_notes(c, g);
    // Ω and Ξ on the walls of P⁺.
    let w = Weight::new(g, 2, 0);
    let x = DomainPoint::new(g, 0.21, 0.37);
    let ratio = eval_generic(OrbitFunctionKind::Omega, &w, &x) / eval_generic(OrbitFunctionKind::Xi, &w, &x);
    c.discrepancies.push(format!("C2: Omega_(2,0)/Xi_(2,0) = {:.12} (printed relation states equality)", ratio.re));
}

fn special_case_notes(c: &mut CriterionReport, g: GroupId) {
    let mut rng = ChaCha8Rng::seed_from_u64(73);
    let cases: [([i64; 2], [i64; 2]); 6] = [([3, 0], [1, 0]), ([0, 3], [0, 1]), ([3, 0], [0, 2]), ([2, 0], [2, 0]), ([0, 2], [0, 2]), ([1, 0], [0, 1])];
    for (l, lp) in cases {
        let Some(terms) = printed::omega_special(g, l, lp) else { continue };
        for norm in [Normalization::C, Normalization::Omega] {
            let (f, h) = (eval_kind(norm.kind(), &Weight::new(g, l[0], l[1])), eval_kind(norm.kind(), &Weight::new(g, lp[0], lp[1])));
            let gap = pointwise_gap(&mut rng, g, |x| f(x) * h(x), |x| printed::eval(g, norm, &terms, x));
            if gap >= 1e-10 {
                c.discrepancies.push(format!("{g} special case {l:?}·{lp:?} read with {norm:?}: gap {gap:.2e}"));
            }
        }
    }
}

/// Criterion 8: E_λ is an eigenfunction of the Laplacian.
pub fn laplacian(opts: &VerifyOptions) -> CriterionReport {
    let mut c = CriterionReport::new(8, "laplacian eigenvalue");
    let mut rng = opts.rng(8);
    let h = 1e-4;
    for &g in &opts.groups {
        let labels: Vec<Weight> = Truncation::Lowest(11).labels(g).into_iter().filter(|l| !l.is_zero()).take(10).collect();
        for l in labels {
            let e = OrbitFunction::<f64>::new(OrbitFunctionKind::E, l);
            let f = |y: [f64; 2]| e.eval(from_orthonormal(g, y, Basis::OmegaCheck));
            let eig: f64 = laplace_eigenvalue(&l);
            let mut checked = 0;
            while checked < 5 {
                let x = random_point(&mut rng, g);
                let v = e.eval(x.coords);
                if v.norm() <= 0.1 {
                    continue;
                }
                checked += 1;
                let y = to_orthonormal(g, x.coords, Basis::OmegaCheck);
                let mut lap: Complex<f64> = Complex::zero();
                for k in 0..2 {
                    let mut yp = y;
                    let mut ym = y;
                    yp[k] += h;
                    ym[k] -= h;
                    lap += (f(yp) - v * 2.0 + f(ym)) / (h * h);
                }
                let r = (lap - v * eig).norm() / (v * eig).norm();
                c.metric_max("max_rel_err", r);
                if r >= 1e-5 {
                    c.fail(format!("{g} {:?} at {:?}: relative error {r:.2e}", l.coords, x.coords));
                }
            }
        }
    }
    c.summary = format!("max relative error {:.1e}", c.metrics.get("max_rel_err").copied().unwrap_or(0.0));
    c
}

/// Criterion 9: central splitting is complete and spectrally pure.
pub fn central_splitting(opts: &VerifyOptions) -> CriterionReport {
    let mut c = CriterionReport::new(9, "central splitting");
    let mut rng = opts.rng(9);
    for &g in &opts.groups {
        if g == GroupId::G2 {
            let grid = build_grid(g, 3).expect("valid M");
            let f = random_grid_data(&mut rng, &grid);
            let parts = algebra::central_split_grid(&grid, &f).expect("split");
            if parts.len() != 1 || parts[0] != f {
                c.fail("G2 splitting is not the identity".into());
            }
            continue;
        }
        for m in opts.ms(&[2, 4, 6]) {
            let grid = build_grid(g, m).expect("valid M");
            let labels = build_label_set(g, m).expect("label set");
            for _ in 0..5 {
                let f = random_grid_data(&mut rng, &grid);
                let parts = match algebra::central_split_grid(&grid, &f) {
                    Ok(p) => p,
                    Err(e) => {
                        c.fail(format!("{g} M={m}: {e}"));
                        continue;
                    }
                };
                let mut sum_err: f64 = 0.0;
                for i in 0..grid.len() {
                    let s: Complex<f64> = parts.iter().map(|p| p[i]).sum();
                    sum_err = sum_err.max((s - f[i]).norm());
                }
                c.metric_max("sum_err", sum_err);
                if sum_err >= 1e-12 {
                    c.fail(format!("{g} M={m}: sum of components off by {sum_err:.2e}"));
                }
                for (j, part) in parts.iter().enumerate() {
                    let spec = forward_discrete(&grid, &labels, part).expect("forward");
                    for (l, d) in &spec.entries {
                        if congruence_class(l) != j {
                            c.metric_max("leak", d.norm());
                            if d.norm() >= 1e-9 {
                                c.fail(format!("{g} M={m} component {j}: d{:?} = {d}", l.coords));
                            }
                        }
                    }
                    let again = algebra::central_split_grid(&grid, part).expect("split");
                    for (k, q) in again.iter().enumerate() {
                        let want = if k == j { part.clone() } else { vec![Complex::zero(); grid.len()] };
                        let e = q.iter().zip(&want).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
                        c.metric_max("projector_err", e);
                        if e >= 1e-12 {
                            c.fail(format!("{g} M={m}: splitting f_{j} again moves {e:.2e} into slot {k}"));
                        }
                    }
                }
            }
        }
    }
    if opts.has(GroupId::A2) {
        a2_printed_split_notes(&mut c);
    }
    c.summary = format!(
        "sum error {:.1e}, max off-class coefficient {:.1e}, projector error {:.1e}",
        c.metrics.get("sum_err").copied().unwrap_or(0.0),
        c.metrics.get("leak").copied().unwrap_or(0.0),
        c.metrics.get("projector_err").copied().unwrap_or(0.0)
    );
    c
}

/// Compares the printed A2 component formulas with the splitting of single
/// E-functions, whose components are known exactly.
fn a2_printed_split_notes(c: &mut CriterionReport) {
    let g = GroupId::A2;
    let x = DomainPoint::new(g, 0.2, 0.3);
    let xn = DomainPoint::new(g, -0.2, 0.5);
    for l in [Weight::new(g, 1, 0), Weight::new(g, 0, 1), Weight::new(g, 1, 1)] {
        let e = eval_kind(OrbitFunctionKind::E, &l);
        let cls = congruence_class(&l);
        let split = CentralSplit::new(g, |p: &DomainPoint<f64>| e(p));
        for pt in [&x, &xn] {
            let generic = split.components(pt).expect("split");
            let [p, q] = printed::a2_split_points(pt.coords);
            for j in 0..3 {
                let ph = crate::orbitfunc::cis_turns(f64_of(printed::a2_split_phase(j)));
                let v = (e(pt) + ph * e(&DomainPoint::new(g, p[0], p[1])) + ph * e(&DomainPoint::new(g, q[0], q[1]))) / 3.0;
                let want = if j == cls { e(pt) } else { Complex::zero() };
                if (v - want).norm() > 1e-9 {
                    c.discrepancies.push(format!(
                        "A2 printed f_{j} for E{:?} at {:?}: {v:.6} (generic splitting gives {:.6})",
                        l.coords, pt.coords, generic[j]
                    ));
                }
            }
        }
    }
}

/// Criterion 10: W_e-invariance, Q̌-periodicity and E_λ(r_i x) = E_{r_i λ}(x).
pub fn invariance(opts: &VerifyOptions) -> CriterionReport {
    let mut c = CriterionReport::new(10, "invariance");
    let mut rng = opts.rng(10);
    for &g in &opts.groups {
        let cartan = g.data().cartan;
        for _ in 0..200 {
            let l = random_weight(&mut rng, g, -8, 8);
            let x = random_point(&mut rng, g);
            let e = eval_kind(OrbitFunctionKind::E, &l);
            let v = e(&x);
            for w in symmetry_group(g) {
                let d = (e(&x.apply(w)) - v).norm();
                c.metric_max("weyl", d);
                if d >= 1e-10 {
                    c.fail(format!("{g} {:?}: not invariant at {:?}", l.coords, x.coords));
                }
            }
            for j in 0..2 {
                let d = (e(&x.translate([cartan[0][j], cartan[1][j]])) - v).norm();
                c.metric_max("periodic", d);
                if d >= 1e-10 {
                    c.fail(format!("{g} {:?}: not periodic along coroot {}", l.coords, j + 1));
                }
            }
            for i in 1..=2 {
                let r = simple_reflection(g, i);
                let d = (e(&x.apply(&r)) - eval_kind(OrbitFunctionKind::E, &l.reflect(i))(&x)).norm();
                c.metric_max("reflection", d);
                if d >= 1e-10 {
                    c.fail(format!("{g} {:?}: reflection {i} at {:?}", l.coords, x.coords));
                }
            }
        }
    }
    c.summary = format!(
        "max errors: W_e {:.1e}, periodicity {:.1e}, reflection {:.1e}",
        c.metrics.get("weyl").copied().unwrap_or(0.0),
        c.metrics.get("periodic").copied().unwrap_or(0.0),
        c.metrics.get("reflection").copied().unwrap_or(0.0)
    );
    c
}
