//! Real wedges, cones with a distinguished element, and the gauge norm
//! they induce.
//!
//! A real wedge is a positive-measure Borel subset of the unit box in the
//! positive orthant, starlike with respect to the origin. Wedges and cones
//! are given by membership oracles, which keeps exotic examples (the
//! positive-definite Hermitian cone in m^2 real coordinates) on the same
//! footing as boxes and polyhedra.

use crate::error::{Error, Result};
use crate::sampling::{self, MeasureEstimate};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

pub type Indicator = Arc<dyn Fn(&[f64]) -> bool + Send + Sync>;

/// Default Monte Carlo sample count for measure estimates.
pub const DEFAULT_MEASURE_SAMPLES: u64 = 100_000;
/// Wedges with estimated measure below this floor make the bound chain
/// vacuous and are rejected by cone-induced constructions.
pub const DEFAULT_MEASURE_FLOOR: f64 = 1e-4;

/// Starlike positive-measure subset of [0,1]^n given by an indicator.
#[derive(Clone)]
pub struct RealWedge {
    nvars: usize,
    indicator: Indicator,
    measure_estimate: f64,
    seed: u64,
}

impl RealWedge {
    /// Wrap an indicator, estimating the measure by Monte Carlo.
    pub fn from_indicator<F>(nvars: usize, seed: u64, f: F) -> Self
    where
        F: Fn(&[f64]) -> bool + Send + Sync + 'static,
    {
        let indicator: Indicator = Arc::new(f);
        let m = sampling::estimate_measure(
            |x| indicator(x),
            nvars,
            DEFAULT_MEASURE_SAMPLES,
            seed,
            0,
        );
        RealWedge {
            nvars,
            indicator,
            measure_estimate: m.lower99,
            seed,
        }
    }

    /// The open unit box (0,1)^n; measure known exactly.
    pub fn unit_box(nvars: usize, seed: u64) -> Self {
        RealWedge {
            nvars,
            indicator: Arc::new(move |x: &[f64]| x.iter().all(|&v| v > 0.0 && v < 1.0)),
            measure_estimate: 1.0,
            seed,
        }
    }

    /// Product of intervals (0, upper_i), upper_i <= 1.
    pub fn box_wedge(upper: &[f64], seed: u64) -> Result<Self> {
        if upper.iter().any(|&u| u <= 0.0 || u > 1.0) {
            return Err(Error::BadInput(
                "box wedge bounds must lie in (0, 1]".into(),
            ));
        }
        let up = upper.to_vec();
        let measure: f64 = up.iter().product();
        Ok(RealWedge {
            nvars: up.len(),
            indicator: Arc::new(move |x: &[f64]| {
                x.iter().zip(&up).all(|(&v, &u)| v > 0.0 && v < u)
            }),
            measure_estimate: measure,
            seed,
        })
    }

    /// The ordered wedge {0 < x_1 < x_2 < ... < x_n < 1}; measure 1/n!.
    pub fn ordered(nvars: usize, seed: u64) -> Self {
        let measure = 1.0 / (1..=nvars).map(|k| k as f64).product::<f64>();
        RealWedge {
            nvars,
            indicator: Arc::new(move |x: &[f64]| {
                x.iter().all(|&v| v > 0.0 && v < 1.0) && x.windows(2).all(|w| w[0] < w[1])
            }),
            measure_estimate: measure,
            seed,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn measure_estimate(&self) -> f64 {
        self.measure_estimate
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        debug_assert_eq!(x.len(), self.nvars);
        if x.iter().any(|&v| v < 0.0) {
            return false;
        }
        (self.indicator)(x)
    }

    pub fn indicator(&self) -> Indicator {
        self.indicator.clone()
    }

    /// Spot-check the wedge axioms on `samples` points: starlike closure
    /// under radial shrinking, plus a fresh measure estimate.
    pub fn validate(&self, samples: u64) -> Result<WedgeReport> {
        let mut rng = sampling::substream(self.seed, 1);
        let mut checked = 0usize;
        let mut violations = 0usize;
        let mut attempts = 0u64;
        let mut x = vec![0.0f64; self.nvars];
        while checked < samples as usize && attempts < samples * 100 {
            attempts += 1;
            for xi in x.iter_mut() {
                *xi = rng.gen();
            }
            if !self.contains(&x) {
                continue;
            }
            let t: f64 = rng.gen_range(1e-6..1.0);
            let tx: Vec<f64> = x.iter().map(|v| v * t).collect();
            checked += 1;
            if !self.contains(&tx) {
                violations += 1;
            }
        }
        if violations > 0 {
            return Err(Error::NotStarlike {
                violations,
                checked,
            });
        }
        let measure = sampling::estimate_measure(
            |p| self.contains(p),
            self.nvars,
            DEFAULT_MEASURE_SAMPLES,
            self.seed,
            2,
        );
        Ok(WedgeReport {
            nvars: self.nvars,
            starlike_checked: checked,
            starlike_violations: violations,
            measure,
        })
    }

    /// Supremum of {r : r*dir is in the wedge}, found by doubling and
    /// bisection along the ray (valid because the wedge is starlike).
    pub fn radial_extent(&self, dir: &[f64]) -> f64 {
        let probe = |r: f64| {
            let p: Vec<f64> = dir.iter().map(|v| v * r).collect();
            p.iter().all(|&v| (0.0..=1.0).contains(&v)) && self.contains(&p)
        };
        if !probe(1e-9) {
            return 0.0;
        }
        let mut lo = 1e-9;
        let mut hi = 1.0;
        if probe(hi) {
            lo = hi;
            hi = 2.0; // box-bounded: no point above sqrt(n) anyway
        }
        while !probe(hi) && hi - lo > 1e-12 {
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                if probe(mid) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            break;
        }
        lo
    }

    /// Rejection-sample `count` interior points using substream `stream`.
    pub fn sample_interior(&self, count: usize, stream: u64) -> Vec<Vec<f64>> {
        let mut rng = sampling::substream(self.seed, stream);
        let mut out = Vec::with_capacity(count);
        let mut attempts = 0u64;
        let cap = (count as u64) * 100_000;
        let mut x = vec![0.0f64; self.nvars];
        while out.len() < count && attempts < cap {
            attempts += 1;
            for xi in x.iter_mut() {
                *xi = rng.gen();
            }
            if self.contains(&x) {
                out.push(x.clone());
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WedgeReport {
    pub nvars: usize,
    pub starlike_checked: usize,
    pub starlike_violations: usize,
    pub measure: MeasureEstimate,
}

// ---------------------------------------------------------------------------
// Cones and the gauge norm
// ---------------------------------------------------------------------------

pub type Membership = Arc<dyn Fn(&[f64]) -> bool + Send + Sync>;

/// Open convex cone with a distinguished interior element.
#[derive(Clone)]
pub struct ConeSpec {
    nvars: usize,
    membership: Membership,
    one: Vec<f64>,
}

/// Bisection tolerance and scale cap for the gauge computation.
#[derive(Debug, Clone, Copy)]
pub struct GaugeConfig {
    pub tolerance: f64,
    pub lambda_cap: f64,
}

impl Default for GaugeConfig {
    fn default() -> Self {
        GaugeConfig {
            tolerance: 1e-9,
            lambda_cap: 1e6,
        }
    }
}

impl ConeSpec {
    pub fn new<F>(nvars: usize, one: Vec<f64>, membership: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> bool + Send + Sync + 'static,
    {
        if one.len() != nvars {
            return Err(Error::InvalidCone(
                "distinguished element has wrong arity".into(),
            ));
        }
        if !membership(&one) {
            return Err(Error::InvalidCone(
                "distinguished element is not in the cone".into(),
            ));
        }
        Ok(ConeSpec {
            nvars,
            membership: Arc::new(membership),
            one,
        })
    }

    /// The positive orthant with the all-ones distinguished element.
    pub fn orthant(nvars: usize) -> Self {
        ConeSpec {
            nvars,
            membership: Arc::new(|x: &[f64]| x.iter().all(|&v| v > 0.0)),
            one: vec![1.0; nvars],
        }
    }

    /// Cone cut out by strict halfspaces a_i . x > 0.
    pub fn polyhedral(halfspaces: Vec<Vec<f64>>, one: Vec<f64>) -> Result<Self> {
        let nvars = one.len();
        if halfspaces.iter().any(|h| h.len() != nvars) {
            return Err(Error::InvalidCone("halfspace arity mismatch".into()));
        }
        let hs = halfspaces.clone();
        Self::new(nvars, one, move |x: &[f64]| {
            hs.iter()
                .all(|h| h.iter().zip(x).map(|(a, b)| a * b).sum::<f64>() > 0.0)
        })
    }

    /// Positive-definite Hermitian m x m matrices in m^2 real coordinates:
    /// first the m diagonal entries, then (re, im) pairs of the strictly
    /// upper triangle row by row. The distinguished element is the identity.
    pub fn hermitian(m: usize) -> Self {
        let nvars = m * m;
        let mut one = vec![0.0; nvars];
        one[..m].fill(1.0);
        ConeSpec {
            nvars,
            membership: Arc::new(move |x: &[f64]| hermitian_is_pd(m, x)),
            one,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn one(&self) -> &[f64] {
        &self.one
    }

    pub fn member(&self, x: &[f64]) -> bool {
        (self.membership)(x)
    }

    /// Spot-check the cone law `x in C => lambda x in C` on sampled members.
    pub fn validate(&self, samples: u64, seed: u64) -> Result<()> {
        let mut rng = sampling::substream(seed, 4);
        let mut checked = 0u64;
        let mut attempts = 0u64;
        let mut x = vec![0.0f64; self.nvars];
        while checked < samples && attempts < samples * 200 {
            attempts += 1;
            for xi in x.iter_mut() {
                *xi = rng.gen_range(-1.0..1.0);
            }
            if !self.member(&x) {
                continue;
            }
            checked += 1;
            for lambda in [0.25, 4.0] {
                let lx: Vec<f64> = x.iter().map(|v| v * lambda).collect();
                if !self.member(&lx) {
                    return Err(Error::InvalidCone(format!(
                        "cone law fails: x in C but {lambda}*x not in C"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn hermitian_is_pd(m: usize, x: &[f64]) -> bool {
    if x.len() != m * m {
        return false;
    }
    let mut a = DMatrix::<Complex64>::zeros(m, m);
    for i in 0..m {
        a[(i, i)] = Complex64::new(x[i], 0.0);
    }
    let mut k = m;
    for i in 0..m {
        for j in (i + 1)..m {
            let v = Complex64::new(x[k], x[k + 1]);
            k += 2;
            a[(i, j)] = v;
            a[(j, i)] = v.conj();
        }
    }
    nalgebra::linalg::Cholesky::new(a).is_some()
}

/// Gauge seminorm induced by a cone and its distinguished element:
/// the larger of inf{lambda >= 0 : lambda*one - x in C} and the same with
/// -x. For the orthant with one = (1,..,1) this is the sup norm.
pub fn cone_norm(spec: &ConeSpec, x: &[f64]) -> Result<f64> {
    cone_norm_cfg(spec, x, &GaugeConfig::default())
}

pub fn cone_norm_cfg(spec: &ConeSpec, x: &[f64], cfg: &GaugeConfig) -> Result<f64> {
    let a = directed_gauge(spec, x, 1.0, cfg)?;
    let b = directed_gauge(spec, x, -1.0, cfg)?;
    Ok(a.max(b))
}

fn directed_gauge(spec: &ConeSpec, x: &[f64], sign: f64, cfg: &GaugeConfig) -> Result<f64> {
    let member_at = |lambda: f64| {
        let p: Vec<f64> = spec
            .one
            .iter()
            .zip(x)
            .map(|(o, v)| lambda * o - sign * v)
            .collect();
        spec.member(&p)
    };
    // The feasible set is an up-set (C is convex and contains `one`),
    // so doubling then bisection is valid.
    if member_at(0.0) {
        return Ok(0.0);
    }
    let mut hi = cfg.tolerance.max(1e-12);
    while !member_at(hi) {
        hi *= 2.0;
        if hi > cfg.lambda_cap {
            return Err(Error::Unbounded { cap: cfg.lambda_cap });
        }
    }
    let mut lo = 0.0;
    while hi - lo > cfg.tolerance {
        let mid = 0.5 * (lo + hi);
        if member_at(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Complex extension: the larger of the gauge norms of the real and
/// imaginary parts.
pub fn cone_norm_complex(spec: &ConeSpec, z: &[Complex64]) -> Result<f64> {
    let re: Vec<f64> = z.iter().map(|c| c.re).collect();
    let im: Vec<f64> = z.iter().map(|c| c.im).collect();
    Ok(cone_norm(spec, &re)?.max(cone_norm(spec, &im)?))
}

/// The wedge {x in C : one - x in C}, clipped to the unit box so it
/// satisfies the real-wedge axioms, with Monte Carlo measure.
pub fn cone_wedge(spec: &ConeSpec, seed: u64, measure_floor: f64) -> Result<RealWedge> {
    let spec2 = spec.clone();
    let wedge = RealWedge::from_indicator(spec.nvars, seed, move |x: &[f64]| {
        if !x.iter().all(|&v| (0.0..=1.0).contains(&v)) {
            return false;
        }
        if !spec2.member(x) {
            return false;
        }
        let rest: Vec<f64> = spec2.one.iter().zip(x).map(|(o, v)| o - v).collect();
        spec2.member(&rest)
    });
    if wedge.measure_estimate() < measure_floor {
        return Err(Error::DegenerateCone {
            measure: wedge.measure_estimate(),
            floor: measure_floor,
        });
    }
    Ok(wedge)
}

/// Decomposition of a small complex vector into four parts in the closure
/// of the cone: z has x^± = Re z ± shift and y^± = Im z ± shift with
/// shift = ||z||_C * one. The parts sum to twice the input, so
/// [`FourPartDecomposition::recompose`] halves the signed combination.
#[derive(Debug, Clone, Serialize)]
pub struct FourPartDecomposition {
    pub xplus: Vec<f64>,
    pub xminus: Vec<f64>,
    pub yplus: Vec<f64>,
    pub yminus: Vec<f64>,
    pub norm: f64,
}

impl FourPartDecomposition {
    /// (x+ - x- + i y+ - i y-) / 2, which reproduces the input exactly.
    pub fn recompose(&self) -> Vec<Complex64> {
        self.xplus
            .iter()
            .zip(&self.xminus)
            .zip(self.yplus.iter().zip(&self.yminus))
            .map(|((xp, xm), (yp, ym))| Complex64::new(0.5 * (xp - xm), 0.5 * (yp - ym)))
            .collect()
    }
}

/// Split z with ||z||_C < 1/8 into four cone-closure parts of norm < 1/4.
pub fn four_part_decompose(spec: &ConeSpec, z: &[Complex64]) -> Result<FourPartDecomposition> {
    let norm = cone_norm_complex(spec, z)?;
    if norm >= 0.125 {
        return Err(Error::NormTooLarge { norm });
    }
    let shift: Vec<f64> = spec.one.iter().map(|o| o * norm).collect();
    let part = |sign: f64, take_im: bool| -> Vec<f64> {
        z.iter()
            .zip(&shift)
            .map(|(c, s)| {
                let v = if take_im { c.im } else { c.re };
                s + sign * v
            })
            .collect()
    };
    Ok(FourPartDecomposition {
        xplus: part(1.0, false),
        xminus: part(-1.0, false),
        yplus: part(1.0, true),
        yminus: part(-1.0, true),
        norm,
    })
}

// ---------------------------------------------------------------------------
// JSON specifications
// ---------------------------------------------------------------------------

/// Cone description as accepted on the command line.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ConeSpecJson {
    Orthant {
        n: usize,
    },
    /// Strict halfspaces a . x > 0 plus a distinguished interior element.
    Polyhedral {
        halfspaces: Vec<Vec<f64>>,
        one: Vec<f64>,
    },
    /// Named builtin; currently the positive-definite Hermitian cone in
    /// m^2 coordinates.
    Builtin {
        name: String,
        m: usize,
    },
}

impl ConeSpecJson {
    pub fn build(&self) -> Result<ConeSpec> {
        match self {
            ConeSpecJson::Orthant { n } => Ok(ConeSpec::orthant(*n)),
            ConeSpecJson::Polyhedral { halfspaces, one } => {
                ConeSpec::polyhedral(halfspaces.clone(), one.clone())
            }
            ConeSpecJson::Builtin { name, m } => {
                if name == "hermitian" {
                    Ok(ConeSpec::hermitian(*m))
                } else {
                    Err(Error::BadInput(format!("unknown builtin cone `{name}`")))
                }
            }
        }
    }
}

/// Wedge description as accepted on the command line.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum WedgeSpecJson {
    Cube { n: usize },
    Box { upper: Vec<f64> },
    Ordered { n: usize },
    Cone { cone: ConeSpecJson },
}

impl WedgeSpecJson {
    pub fn build(&self, seed: u64) -> Result<RealWedge> {
        match self {
            WedgeSpecJson::Cube { n } => Ok(RealWedge::unit_box(*n, seed)),
            WedgeSpecJson::Box { upper } => RealWedge::box_wedge(upper, seed),
            WedgeSpecJson::Ordered { n } => Ok(RealWedge::ordered(*n, seed)),
            WedgeSpecJson::Cone { cone } => {
                cone_wedge(&cone.build()?, seed, DEFAULT_MEASURE_FLOOR)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn orthant_norm_is_sup_norm() {
        let spec = ConeSpec::orthant(3);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let x: Vec<f64> = (0..3).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let linf = x.iter().fold(0.0f64, |a, &v| a.max(v.abs()));
            let n = cone_norm(&spec, &x).unwrap();
            assert!((n - linf).abs() <= 1e-8, "gauge {n} vs sup {linf}");
        }
    }

    #[test]
    fn norm_of_zero_and_symmetry() {
        let spec = ConeSpec::orthant(2);
        assert_eq!(cone_norm(&spec, &[0.0, 0.0]).unwrap(), 0.0);
        let x = [0.3, -0.7];
        let nx = cone_norm(&spec, &x).unwrap();
        let neg: Vec<f64> = x.iter().map(|v| -v).collect();
        assert!((nx - cone_norm(&spec, &neg).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn norm_positive_homogeneity() {
        let spec = ConeSpec::polyhedral(
            vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![3.0, -1.0]],
            vec![1.0, 1.0],
        )
        .unwrap();
        let x = [0.4, 0.9];
        let n1 = cone_norm(&spec, &x).unwrap();
        let x3: Vec<f64> = x.iter().map(|v| 3.0 * v).collect();
        let n3 = cone_norm(&spec, &x3).unwrap();
        assert!((n3 - 3.0 * n1).abs() < 1e-7);
    }

    #[test]
    fn triangle_inequality_on_convex_cones() {
        let spec = ConeSpec::polyhedral(
            vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![3.0, -1.0]],
            vec![1.0, 1.0],
        )
        .unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let x: Vec<f64> = (0..2).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let y: Vec<f64> = (0..2).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let s: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
            let lhs = cone_norm(&spec, &s).unwrap();
            let rhs = cone_norm(&spec, &x).unwrap() + cone_norm(&spec, &y).unwrap();
            assert!(lhs <= rhs + 1e-8);
        }
    }

    #[test]
    fn complex_norm_orthant_equals_sup_over_all_parts() {
        let spec = ConeSpec::orthant(2);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..50 {
            let z: Vec<Complex64> = (0..2)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let direct = z
                .iter()
                .flat_map(|c| [c.re.abs(), c.im.abs()])
                .fold(0.0f64, f64::max);
            let n = cone_norm_complex(&spec, &z).unwrap();
            assert!((n - direct).abs() < 1e-8);
        }
    }

    #[test]
    fn complex_norm_real_and_imaginary_specialisations() {
        let spec = ConeSpec::orthant(2);
        let zr = [Complex64::new(0.4, 0.0), Complex64::new(-0.2, 0.0)];
        assert!((cone_norm_complex(&spec, &zr).unwrap() - 0.4).abs() < 1e-8);
        let zi = [Complex64::new(0.0, 0.7), Complex64::new(0.0, 0.1)];
        assert!((cone_norm_complex(&spec, &zi).unwrap() - 0.7).abs() < 1e-8);
    }

    #[test]
    fn hermitian_cone_norm_is_spectral() {
        // Diagonal matrix diag(a, b): gauge norm = max(|a|, |b|)
        let spec = ConeSpec::hermitian(2);
        let x = [0.8, -0.3, 0.0, 0.0];
        let n = cone_norm(&spec, &x).unwrap();
        assert!((n - 0.8).abs() < 1e-7);
        // Off-diagonal [[0, c], [conj c, 0]] has eigenvalues +-|c|
        let y = [0.0, 0.0, 0.3, 0.4];
        let n = cone_norm(&spec, &y).unwrap();
        assert!((n - 0.5).abs() < 1e-7);
    }

    #[test]
    fn orthant_wedge_is_unit_box() {
        let w = cone_wedge(&ConeSpec::orthant(2), 5, 1e-4).unwrap();
        assert!(w.measure_estimate() > 0.99);
        assert!(w.contains(&[0.5, 0.5]));
        assert!(!w.contains(&[-0.1, 0.5]));
    }

    #[test]
    fn slab_cone_wedge_matches_polygon_area() {
        // C = {x1 > 0, x2 > 0, x2 < 3 x1}: the induced wedge is the unit
        // square minus two triangles; shoelace on its vertices gives the
        // exact area.
        let spec = ConeSpec::polyhedral(
            vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![3.0, -1.0]],
            vec![1.0, 1.0],
        )
        .unwrap();
        let w = cone_wedge(&spec, 11, 1e-4).unwrap();
        let verts = [
            (0.0, 0.0),
            (1.0 / 3.0, 1.0),
            (1.0, 1.0),
            (2.0 / 3.0, 0.0),
        ];
        let mut twice_area = 0.0;
        for i in 0..verts.len() {
            let (x0, y0) = verts[i];
            let (x1, y1) = verts[(i + 1) % verts.len()];
            twice_area += x0 * y1 - x1 * y0;
        }
        let exact = (twice_area / 2.0).abs();
        assert!((exact - 2.0 / 3.0).abs() < 1e-12);
        assert!((w.measure_estimate() - exact).abs() / exact < 0.02);
    }

    #[test]
    fn cone_must_contain_distinguished_element() {
        let err = ConeSpec::polyhedral(vec![vec![-1.0, 0.0]], vec![1.0, 1.0]);
        assert!(matches!(err, Err(Error::InvalidCone(_))));
    }

    #[test]
    fn four_part_example() {
        let spec = ConeSpec::orthant(2);
        let z = [Complex64::new(0.05, 0.0), Complex64::new(-0.05, 0.0)];
        let d = four_part_decompose(&spec, &z).unwrap();
        assert!((d.norm - 0.05).abs() < 1e-8);
        assert!((d.xplus[0] - 0.10).abs() < 1e-8 && d.xplus[1].abs() < 1e-8);
        assert!(d.xminus[0].abs() < 1e-8 && (d.xminus[1] - 0.10).abs() < 1e-8);
        let r = d.recompose();
        for (a, b) in r.iter().zip(&z) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn four_part_zero() {
        let spec = ConeSpec::orthant(2);
        let z = [Complex64::new(0.0, 0.0); 2];
        let d = four_part_decompose(&spec, &z).unwrap();
        assert!(d.xplus.iter().all(|&v| v == 0.0));
        assert!(d.yminus.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn four_part_rejects_large_vectors() {
        let spec = ConeSpec::orthant(2);
        let z = [Complex64::new(0.2, 0.0), Complex64::new(0.0, 0.0)];
        assert!(matches!(
            four_part_decompose(&spec, &z),
            Err(Error::NormTooLarge { .. })
        ));
    }

    #[test]
    fn starlike_validation_catches_violations() {
        // An annulus is not starlike with respect to the origin.
        let w = RealWedge::from_indicator(2, 3, |x| {
            let r = (x[0] * x[0] + x[1] * x[1]).sqrt();
            (0.5..0.9).contains(&r)
        });
        assert!(matches!(w.validate(2_000), Err(Error::NotStarlike { .. })));
        let good = RealWedge::unit_box(2, 3);
        assert!(good.validate(2_000).is_ok());
    }

    #[test]
    fn radial_extent_of_box_wedge() {
        let w = RealWedge::box_wedge(&[0.5, 1.0], 7).unwrap();
        let r = w.radial_extent(&[1.0, 1.0]);
        assert!((r - 0.5).abs() < 1e-9);
    }
}
