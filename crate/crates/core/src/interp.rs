//! Slice selection, Lagrange reconstruction across slices, and the
//! dimension-recursive constants of the coefficient-norm bound chain.
//!
//! The chain works one axis at a time: pick separated axis coordinates
//! whose slices are measure-rich, bound the slice polynomials by
//! induction, and control the coefficient-sum norm of the Lagrange
//! reconstruction by the product of basis-polynomial norms. Constants are
//! computed in exact rational arithmetic (with certified rational bounds
//! on e) and only rounded on output.

use crate::error::{Error, Result};
use crate::geometry::RealWedge;
use crate::poly::{CPoly, QPoly};
use crate::sampling;
use crate::scalar::{e_lower, e_upper, factorial, CxRat, PolyScalar, RealScalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

/// Axis coordinates of measure-rich, separated slices of a set.
#[derive(Debug, Clone, Serialize)]
pub struct SliceSelection {
    pub axis: usize,
    pub nodes: Vec<f64>,
    /// Guaranteed pairwise separation of the nodes.
    pub separation: f64,
    /// Smallest estimated slice measure among the chosen nodes
    /// (99% lower confidence bound).
    pub slice_measure: f64,
}

/// Sampling budget for the slice scan.
#[derive(Debug, Clone, Copy)]
pub struct SliceScanConfig {
    pub candidates: usize,
    pub samples_per_slice: u64,
}

impl SliceScanConfig {
    pub fn for_count(count: usize) -> Self {
        let candidates = (8 * count).max(64).min(512);
        let samples_per_slice = (100_000 / candidates as u64).max(2_000);
        SliceScanConfig {
            candidates,
            samples_per_slice,
        }
    }
}

/// Pick `count` axis coordinates, pairwise separated by at least
/// p/(2*count), whose slices each have estimated measure at least
/// `target_measure`. Nodes are chosen greedily from the left, so the
/// selection is deterministic for a fixed wedge seed.
///
/// Fails with [`Error::InsufficientMeasure`] when the set cannot supply
/// that many rich slices; by the slice-richness argument (slices of
/// measure >= p/2 occupy axis measure >= p/2), a set of measure p can
/// always supply `count` slices of measure p/2 at this separation, so a
/// failure signals that the caller asked for more than the hypotheses
/// grant.
pub fn select_slices(
    wedge: &RealWedge,
    axis: usize,
    count: usize,
    target_measure: f64,
) -> Result<SliceSelection> {
    select_slices_cfg(wedge, axis, count, target_measure, &SliceScanConfig::for_count(count))
}

pub fn select_slices_cfg(
    wedge: &RealWedge,
    axis: usize,
    count: usize,
    target_measure: f64,
    cfg: &SliceScanConfig,
) -> Result<SliceSelection> {
    if count == 0 {
        return Err(Error::BadInput("slice count must be at least 1".into()));
    }
    if axis >= wedge.nvars() {
        return Err(Error::BadInput("axis out of range".into()));
    }
    let separation = wedge.measure_estimate() / (2.0 * count as f64);
    let indicator = wedge.indicator();
    let nvars = wedge.nvars();
    let seed = wedge.seed();

    let measures: Vec<(f64, f64)> = (0..cfg.candidates)
        .into_par_iter()
        .map(|j| {
            let coord = (j as f64 + 0.5) / cfg.candidates as f64;
            let m = sampling::estimate_slice_measure(
                |x| indicator(x),
                nvars,
                axis,
                coord,
                cfg.samples_per_slice,
                seed,
                10_000 + j as u64,
            );
            (coord, m.lower99)
        })
        .collect();

    let mut nodes = Vec::with_capacity(count);
    let mut min_measure = f64::INFINITY;
    for &(coord, lcb) in &measures {
        if nodes.len() == count {
            break;
        }
        if lcb < target_measure {
            continue;
        }
        if let Some(&last) = nodes.last() {
            if coord - last < separation {
                continue;
            }
        }
        nodes.push(coord);
        min_measure = min_measure.min(lcb);
    }
    if nodes.len() < count {
        return Err(Error::InsufficientMeasure {
            wanted: count,
            found: nodes.len(),
            separation,
            target: target_measure,
        });
    }
    Ok(SliceSelection {
        axis,
        nodes,
        separation,
        slice_measure: min_measure,
    })
}

// ---------------------------------------------------------------------------
// Lagrange reconstruction
// ---------------------------------------------------------------------------

fn check_distinct<R: RealScalar>(nodes: &[R]) -> Result<()> {
    for i in 0..nodes.len() {
        for j in (i + 1)..nodes.len() {
            if nodes[i] == nodes[j] {
                return Err(Error::DuplicateNodes(i, j));
            }
        }
    }
    Ok(())
}

/// Reconstruct the unique polynomial of degree < k in a fresh variable
/// (inserted at index 0) that agrees with the k slice polynomials at the
/// k nodes. Exact.
pub fn lagrange_reconstruct_rational(
    slices: &[QPoly],
    nodes: &[BigRational],
) -> Result<QPoly> {
    if slices.is_empty() || slices.len() != nodes.len() {
        return Err(Error::BadInput(
            "need equally many slice polynomials and nodes, at least one".into(),
        ));
    }
    check_distinct(nodes)?;
    let inner_vars = slices[0].nvars();
    if slices.iter().any(|s| s.nvars() != inner_vars) {
        return Err(Error::BadInput("slice arity mismatch".into()));
    }
    let k = nodes.len();
    let mut out = QPoly::zero(inner_vars + 1);
    for i in 0..k {
        // Expand prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = vec![BigRational::one()];
        let mut weight = BigRational::one();
        for (j, node) in nodes.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (t, c) in basis.iter().enumerate() {
                next[t] += -(node.clone()) * c;
                next[t + 1] += c;
            }
            basis = next;
            weight *= &nodes[i] - node;
        }
        for (power, c) in basis.iter().enumerate() {
            let coeff = CxRat::from_real(&(c / &weight));
            if coeff.is_zero() {
                continue;
            }
            out = out.add(&slices[i].raise_with_new_var(power as u32, &coeff));
        }
    }
    Ok(out)
}

/// Float front end: inputs are lifted losslessly into exact rationals,
/// the reconstruction runs exactly, and coefficients round to f64 once.
/// Naive f64 assembly is amplified by the node-system conditioning
/// (~1e8 at eleven equispaced nodes in [0,1]) and cannot meet the
/// coefficient accuracy this module promises.
pub fn lagrange_reconstruct(slices: &[CPoly], nodes: &[f64]) -> Result<CPoly> {
    let exact: Vec<QPoly> = slices.iter().map(|s| s.to_exact()).collect();
    let qnodes: Vec<BigRational> = nodes
        .iter()
        .map(|&x| <BigRational as RealScalar>::from_f64(x))
        .collect();
    Ok(lagrange_reconstruct_rational(&exact, &qnodes)?.round_to_f64())
}

/// Upper bound for the coefficient-sum norm of a Lagrange reconstruction:
/// sum_i bound_i * prod_{j != i} (1 + |x_j|) / |x_i - x_j|, using that the
/// basis factor (x - x_j) has coefficient sum 1 + |x_j|.
pub fn l1_bound_from_slices<R: RealScalar>(slice_bounds: &[R], nodes: &[R]) -> Result<R> {
    if slice_bounds.len() != nodes.len() || nodes.is_empty() {
        return Err(Error::BadInput(
            "need equally many slice bounds and nodes, at least one".into(),
        ));
    }
    check_distinct(nodes)?;
    let mut total = R::zero();
    for i in 0..nodes.len() {
        let mut factor = slice_bounds[i].clone();
        for (j, node) in nodes.iter().enumerate() {
            if j == i {
                continue;
            }
            let num = R::one() + node.abs();
            let den = (nodes[i].clone() - node.clone()).abs();
            factor = factor * (num / den);
        }
        total = total + factor;
    }
    Ok(total)
}

// ---------------------------------------------------------------------------
// The constants recursion
// ---------------------------------------------------------------------------

/// Constants (K, C) such that any degree-d polynomial bounded by 1 on a
/// qualifying set of measure >= p in [0,1]^n has coefficient-sum norm at
/// most K * C^d.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct BoundConstants {
    pub n: usize,
    pub p: f64,
    pub k: f64,
    pub c: f64,
}

impl BoundConstants {
    pub fn bound_for_degree(&self, d: u32) -> f64 {
        self.k * self.c.powi(d as i32)
    }
}

/// One level of the recursion, in exact arithmetic.
///
/// With nodes separated by delta = p/(2(d+1)) and slice bounds from the
/// previous level, the Lagrange factor is at most
///   4^d / (d! delta^d) = 8^d (d+1)^d / (p^d d!) <= e * (8e/p)^d,
/// the last step by the Stirling-type bound (d+1)^d / d! <= e^{d+1}.
/// Hence each level multiplies K by e and C by 8e/p, and hands the next
/// level measure p/2 (slice richness costs half the measure).
pub fn chain_constants_exact(n: usize, p: &BigRational) -> Result<(BigRational, BigRational)> {
    if !p.is_positive() || p > &BigRational::one() {
        return Err(Error::InvalidMeasure(RealScalar::to_f64(p)));
    }
    let e_up = e_upper(40);
    let eight = BigRational::from_integer(BigInt::from(8));
    let mut k = BigRational::one();
    let mut c = BigRational::one();
    let mut level_p = p.clone();
    for _ in 0..n {
        k *= &e_up;
        c *= &eight * &e_up / &level_p;
        level_p /= BigRational::from_integer(BigInt::from(2));
    }
    Ok((k, c))
}

/// Exact per-degree Lagrange factor at one level:
/// 4^d / (d! * delta^d) with delta = p/(2(d+1)).
pub fn per_degree_chain_factor(d: u32, p: &BigRational) -> BigRational {
    let delta = p / BigRational::from_integer(BigInt::from(2 * (d as i64 + 1)));
    let four_pow = BigRational::from_integer(BigInt::from(4).pow(d));
    let mut delta_pow = BigRational::one();
    for _ in 0..d {
        delta_pow *= &delta;
    }
    four_pow / (BigRational::from_integer(factorial(d)) * delta_pow)
}

/// Certified majorant of the per-degree factor: e * (8e/p)^d with e
/// replaced by a rational upper bound.
pub fn per_degree_chain_majorant(d: u32, p: &BigRational) -> BigRational {
    let e_up = e_upper(40);
    let mut acc = e_up.clone();
    let base = BigRational::from_integer(BigInt::from(8)) * &e_up / p;
    for _ in 0..d {
        acc *= &base;
    }
    acc
}

/// Dimension-recursive constants for the bound chain; see
/// [`chain_constants_exact`] for the derivation.
pub fn compute_constants(n: usize, p: f64) -> Result<BoundConstants> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::InvalidMeasure(p));
    }
    let pr = <BigRational as RealScalar>::from_f64(p);
    let (k, c) = chain_constants_exact(n, &pr)?;
    Ok(BoundConstants {
        n,
        p,
        k: RealScalar::to_f64(&k),
        c: RealScalar::to_f64(&c),
    })
}

/// Exact check of d^d / d! <= e^d for each d up to `d_max`, via a rational
/// lower bound on e (if the inequality holds against the lower bound it
/// holds against e).
pub fn stirling_certificate(d_max: u32) -> bool {
    let e_lo = e_lower(40);
    let p = e_lo.numer();
    let q = e_lo.denom();
    for d in 1..=d_max {
        let lhs = BigInt::from(d).pow(d) * q.pow(d);
        let rhs = factorial(d) * p.pow(d);
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Rows of the `constants` table: per-degree factors and the resulting
/// bound K * C^d.
#[derive(Debug, Clone, Serialize)]
pub struct ConstantsRow {
    pub d: u32,
    pub delta: f64,
    pub lagrange_factor: f64,
    pub level_majorant: f64,
    pub k_c_pow_d: f64,
}

pub fn constants_table(n: usize, p: f64, d_max: u32) -> Result<(BoundConstants, Vec<ConstantsRow>)> {
    let constants = compute_constants(n, p)?;
    let pr = <BigRational as RealScalar>::from_f64(p);
    let rows = (0..=d_max)
        .map(|d| ConstantsRow {
            d,
            delta: p / (2.0 * (d as f64 + 1.0)),
            lagrange_factor: RealScalar::to_f64(&per_degree_chain_factor(d, &pr)),
            level_majorant: RealScalar::to_f64(&per_degree_chain_majorant(d, &pr)),
            k_c_pow_d: constants.bound_for_degree(d),
        })
        .collect();
    Ok((constants, rows))
}
