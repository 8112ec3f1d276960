//! Sparse multivariate polynomials with the coefficient-sum norm.
//!
//! Terms are kept in a BTreeMap keyed by graded-lex monomials, so the
//! canonical form (no explicit zeros, fixed order) doubles as a byte-stable
//! serialization order. Coefficients are either `Complex<f64>` or exact
//! `Complex<BigRational>`; see [`crate::scalar`].
//!
//! Zero coefficients are pruned only when they are exactly zero. Pruning by
//! epsilon would silently change coefficient-sum norms, which the bound
//! chain cannot tolerate.

use crate::scalar::{CxRat, PolyScalar, RealScalar};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Exponent vector with a fixed variable ordering.
///
/// Two monomials are equal iff their exponent vectors are equal; ordering
/// is graded lexicographic (total degree first, then lex).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    fn mul(&self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial in canonical form.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<S: PolyScalar> {
    nvars: usize,
    terms: BTreeMap<Monomial, S>,
}

pub type CPoly = MultiPoly<Complex64>;
pub type QPoly = MultiPoly<CxRat>;

impl<S: PolyScalar> MultiPoly<S> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::constant(nvars), c);
        p
    }

    /// The variable x_idx as a polynomial.
    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, idx), S::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, S)>>(nvars: usize, it: I) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// Accumulate a term, pruning exact zeros.
    pub fn add_term(&mut self, m: Monomial, c: S) {
        assert_eq!(m.nvars(), self.nvars, "monomial arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in self.terms() {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(self.nvars);
        if s.is_zero() {
            return out;
        }
        for (m, c) in self.terms() {
            let sc = c.clone() * s.clone();
            if !sc.is_zero() {
                out.terms.insert(m.clone(), sc);
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Total degree, or None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Largest exponent of variable `axis`.
    pub fn degree_in(&self, axis: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[axis]).max()
    }

    /// Coefficient-sum norm: the sum of the moduli of all coefficients.
    /// Zero iff the polynomial is zero.
    pub fn l1_norm(&self) -> S::Real {
        let mut acc = S::Real::zero();
        for c in self.terms.values() {
            acc = acc + c.modulus();
        }
        acc
    }

    /// Evaluate at a point. Powers use repeated multiplication, which is
    /// exact in rational mode.
    pub fn eval(&self, z: &[S]) -> S {
        assert_eq!(z.len(), self.nvars, "point arity mismatch");
        let mut acc = S::zero();
        for (m, c) in self.terms() {
            let mut term = c.clone();
            for (zi, &e) in z.iter().zip(&m.0) {
                for _ in 0..e {
                    term = term * zi.clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Split into homogeneous parts. The result has length
    /// `total_degree + 1` with explicit zero parts, and sums back to the
    /// input exactly.
    pub fn homogeneous_parts(&self) -> Vec<HomogeneousPoly<S>> {
        let deg = match self.total_degree() {
            None => return vec![HomogeneousPoly::zero(self.nvars, 0)],
            Some(d) => d,
        };
        let mut parts: Vec<MultiPoly<S>> =
            (0..=deg).map(|_| MultiPoly::zero(self.nvars)).collect();
        for (m, c) in self.terms() {
            parts[m.total_degree() as usize]
                .terms
                .insert(m.clone(), c.clone());
        }
        parts
            .into_iter()
            .enumerate()
            .map(|(d, base)| HomogeneousPoly {
                degree: d as u32,
                base,
            })
            .collect()
    }

    /// Substitute `value` for variable `axis`, producing a polynomial in
    /// one fewer variable. Exact over rational scalars; the `Complex64`
    /// instantiation exposes a lifted wrapper instead (see below).
    pub(crate) fn substitute_axis_raw(&self, axis: usize, value: &S) -> MultiPoly<S> {
        assert!(axis < self.nvars, "axis out of range");
        let mut out = MultiPoly::zero(self.nvars - 1);
        for (m, c) in self.terms() {
            let e = m.0[axis];
            let mut coeff = c.clone();
            for _ in 0..e {
                coeff = coeff * value.clone();
            }
            let rest: Vec<u32> = m
                .0
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != axis)
                .map(|(_, &v)| v)
                .collect();
            out.add_term(Monomial(rest), coeff);
        }
        out
    }

    /// Prepend a fresh variable at index 0 with exponent `power` on every
    /// term, scaled by `coeff`. Building block for Lagrange assembly.
    pub(crate) fn raise_with_new_var(&self, power: u32, coeff: &S) -> MultiPoly<S> {
        let mut out = MultiPoly::zero(self.nvars + 1);
        for (m, c) in self.terms() {
            let mut e = Vec::with_capacity(self.nvars + 1);
            e.push(power);
            e.extend_from_slice(&m.0);
            out.add_term(Monomial(e), c.clone() * coeff.clone());
        }
        out
    }
}

impl QPoly {
    /// Exact substitution of a rational value for one variable.
    pub fn substitute_axis(&self, axis: usize, value: &BigRational) -> QPoly {
        self.substitute_axis_raw(axis, &CxRat::from_real(value))
    }
}

impl CPoly {
    /// Substitution routed through exact dyadic arithmetic: f64 inputs are
    /// lifted losslessly, the coefficient transform runs exactly, and the
    /// result rounds to f64 once. Naive f64 accumulation here would be
    /// amplified by the interpolation conditioning downstream.
    pub fn substitute_axis(&self, axis: usize, value: f64) -> CPoly {
        let exact = self.to_exact();
        let v = <BigRational as RealScalar>::from_f64(value);
        exact.substitute_axis(axis, &v).round_to_f64()
    }

    /// Lossless lift into exact rational coefficients.
    pub fn to_exact(&self) -> QPoly {
        let mut out = QPoly::zero(self.nvars);
        for (m, c) in self.terms() {
            out.terms.insert(
                m.clone(),
                CxRat::new(
                    <BigRational as RealScalar>::from_f64(c.re),
                    <BigRational as RealScalar>::from_f64(c.im),
                ),
            );
        }
        out
    }
}

impl QPoly {
    /// Round each coefficient to the nearest f64.
    pub fn round_to_f64(&self) -> CPoly {
        let mut out = CPoly::zero(self.nvars);
        for (m, c) in self.terms() {
            let cc = c.approx_c64();
            if cc.re != 0.0 || cc.im != 0.0 {
                out.terms.insert(m.clone(), cc);
            }
        }
        out
    }
}

/// Polynomial all of whose terms share one total degree.
#[derive(Clone, PartialEq, Debug)]
pub struct HomogeneousPoly<S: PolyScalar> {
    base: MultiPoly<S>,
    degree: u32,
}

impl<S: PolyScalar> HomogeneousPoly<S> {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        HomogeneousPoly {
            base: MultiPoly::zero(nvars),
            degree,
        }
    }

    /// Wrap a polynomial, checking that every term has the stated degree.
    pub fn new(base: MultiPoly<S>, degree: u32) -> crate::Result<Self> {
        for (m, _) in base.terms() {
            if m.total_degree() != degree {
                return Err(crate::Error::BadInput(format!(
                    "term of degree {} in homogeneous polynomial of degree {}",
                    m.total_degree(),
                    degree
                )));
            }
        }
        Ok(HomogeneousPoly { base, degree })
    }

    pub fn base(&self) -> &MultiPoly<S> {
        &self.base
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn l1_norm(&self) -> S::Real {
        self.base.l1_norm()
    }

    pub fn eval(&self, z: &[S]) -> S {
        self.base.eval(z)
    }
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

/// On-disk form: `{"nvars": n, "terms": [{"exp": [..], "re": .., "im": ..}]}`
/// with terms in graded-lex order. Float coefficients are plain numbers;
/// rational ones are `{"num": "..", "den": ".."}` pairs (decimal strings,
/// since numerators outgrow any fixed-width integer).
#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct PolyRepr {
    pub nvars: usize,
    pub terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct TermRepr {
    pub exp: Vec<u32>,
    pub re: CoeffRepr,
    pub im: CoeffRepr,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(untagged)]
pub enum CoeffRepr {
    Float(f64),
    Rational { num: String, den: String },
}

impl CoeffRepr {
    fn to_f64(&self) -> crate::Result<f64> {
        match self {
            CoeffRepr::Float(x) => Ok(*x),
            CoeffRepr::Rational { .. } => Err(crate::Error::BadInput(
                "expected float coefficient, found rational".into(),
            )),
        }
    }

    fn to_rational(&self) -> crate::Result<BigRational> {
        match self {
            CoeffRepr::Float(x) => Ok(<BigRational as RealScalar>::from_f64(*x)),
            CoeffRepr::Rational { num, den } => {
                let n = num_bigint::BigInt::from_str(num)
                    .map_err(|e| crate::Error::BadInput(format!("bad numerator: {e}")))?;
                let d = num_bigint::BigInt::from_str(den)
                    .map_err(|e| crate::Error::BadInput(format!("bad denominator: {e}")))?;
                if d == num_bigint::BigInt::from(0) {
                    return Err(crate::Error::BadInput("zero denominator".into()));
                }
                Ok(BigRational::new(n, d))
            }
        }
    }
}

impl CPoly {
    pub fn to_repr(&self) -> PolyRepr {
        PolyRepr {
            nvars: self.nvars,
            terms: self
                .terms()
                .map(|(m, c)| TermRepr {
                    exp: m.0.clone(),
                    re: CoeffRepr::Float(c.re),
                    im: CoeffRepr::Float(c.im),
                })
                .collect(),
        }
    }

    pub fn from_repr(repr: &PolyRepr) -> crate::Result<CPoly> {
        let mut p = CPoly::zero(repr.nvars);
        for t in &repr.terms {
            if t.exp.len() != repr.nvars {
                return Err(crate::Error::BadInput("exponent arity mismatch".into()));
            }
            p.add_term(
                Monomial(t.exp.clone()),
                Complex64::new(t.re.to_f64()?, t.im.to_f64()?),
            );
        }
        Ok(p)
    }
}

impl QPoly {
    pub fn to_repr(&self) -> PolyRepr {
        PolyRepr {
            nvars: self.nvars,
            terms: self
                .terms()
                .map(|(m, c)| TermRepr {
                    exp: m.0.clone(),
                    re: CoeffRepr::Rational {
                        num: c.re.numer().to_string(),
                        den: c.re.denom().to_string(),
                    },
                    im: CoeffRepr::Rational {
                        num: c.im.numer().to_string(),
                        den: c.im.denom().to_string(),
                    },
                })
                .collect(),
        }
    }

    pub fn from_repr(repr: &PolyRepr) -> crate::Result<QPoly> {
        let mut p = QPoly::zero(repr.nvars);
        for t in &repr.terms {
            if t.exp.len() != repr.nvars {
                return Err(crate::Error::BadInput("exponent arity mismatch".into()));
            }
            p.add_term(
                Monomial(t.exp.clone()),
                CxRat::new(t.re.to_rational()?, t.im.to_rational()?),
            );
        }
        Ok(p)
    }
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:.6}{:+.6}i)", c.re, c.im)?;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    write!(f, "*x{i}")?;
                } else if e > 1 {
                    write!(f, "*x{i}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// All monomials of the given total degree in graded-lex order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fn rec(nvars: usize, idx: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if idx == nvars - 1 {
            current[idx] = left;
            out.push(Monomial(current.clone()));
            return;
        }
        for e in 0..=left {
            current[idx] = e;
            rec(nvars, idx + 1, left - e, current, out);
        }
        current[idx] = 0;
    }
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial(vec![]));
        }
        return out;
    }
    rec(nvars, 0, degree, &mut current, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn qreal(n: i64, d: i64) -> CxRat {
        CxRat::new(rat(n, d), rat(0, 1))
    }

    /// 3x^2 y - 2 y^3 in variables (x, y).
    fn sample_poly() -> QPoly {
        QPoly::from_terms(
            2,
            vec![
                (Monomial(vec![2, 1]), qreal(3, 1)),
                (Monomial(vec![0, 3]), qreal(-2, 1)),
            ],
        )
    }

    #[test]
    fn l1_norm_definition() {
        assert_eq!(sample_poly().l1_norm(), rat(5, 1));
        assert_eq!(QPoly::zero(2).l1_norm(), rat(0, 1));
    }

    #[test]
    fn l1_norm_of_disjoint_product_by_expansion() {
        // (x+y)(u-v) in a common 4-variable space; expanding by hand gives
        // xu - xv + yu - yv with four unit coefficients.
        let x = QPoly::var(4, 0);
        let y = QPoly::var(4, 1);
        let u = QPoly::var(4, 2);
        let v = QPoly::var(4, 3);
        let p = x.add(&y);
        let q = u.sub(&v);
        let prod = p.mul(&q);
        assert_eq!(prod.num_terms(), 4);
        assert_eq!(prod.l1_norm(), rat(4, 1));
        assert_eq!(prod.l1_norm(), p.l1_norm().mul(&q.l1_norm()));
    }

    #[test]
    fn mul_difference_of_squares() {
        let x = QPoly::var(1, 0);
        let one = QPoly::constant(1, CxRat::one());
        let p = x.add(&one).mul(&x.sub(&one));
        let mut expect = QPoly::zero(1);
        expect.add_term(Monomial(vec![2]), qreal(1, 1));
        expect.add_term(Monomial(vec![0]), qreal(-1, 1));
        assert_eq!(p, expect);
    }

    #[test]
    fn square_of_binomial_l1() {
        let x = QPoly::var(2, 0);
        let y = QPoly::var(2, 1);
        let p = x.add(&y);
        let sq = p.mul(&p);
        // x^2 + 2xy + y^2
        assert_eq!(sq.l1_norm(), rat(4, 1));
    }

    #[test]
    fn homogeneous_parts_listing() {
        // 1 + xy + x^2 y -> degrees 0..3 with an explicit zero at degree 1
        let p = QPoly::from_terms(
            2,
            vec![
                (Monomial(vec![0, 0]), qreal(1, 1)),
                (Monomial(vec![1, 1]), qreal(1, 1)),
                (Monomial(vec![2, 1]), qreal(1, 1)),
            ],
        );
        let parts = p.homogeneous_parts();
        assert_eq!(parts.len(), 4);
        assert!(!parts[0].base().is_zero());
        assert!(parts[1].base().is_zero());
        assert_eq!(parts[2].base().num_terms(), 1);
        assert_eq!(parts[3].base().num_terms(), 1);
    }

    #[test]
    fn homogeneous_input_is_single_part() {
        let h = QPoly::from_terms(2, vec![(Monomial(vec![2, 1]), qreal(5, 1))]);
        let parts = h.homogeneous_parts();
        assert_eq!(parts.len(), 4);
        for (d, part) in parts.iter().enumerate() {
            assert_eq!(part.base().is_zero(), d != 3);
        }
    }

    #[test]
    fn eval_examples() {
        let p = CPoly::from_terms(2, vec![(Monomial(vec![2, 1]), Complex64::new(1.0, 0.0))]);
        let v = p.eval(&[Complex64::new(2.0, 0.0), Complex64::new(3.0, 0.0)]);
        assert_eq!(v, Complex64::new(12.0, 0.0));

        let h = CPoly::var(2, 0);
        assert_eq!(h.eval(&[Complex64::new(0.0, 0.0); 2]), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn substitute_axis_reduces_arity() {
        // p = x^2 y + y, substitute x = 1/2 -> y/4 + y = 5y/4
        let p = QPoly::from_terms(
            2,
            vec![
                (Monomial(vec![2, 1]), qreal(1, 1)),
                (Monomial(vec![0, 1]), qreal(1, 1)),
            ],
        );
        let s = p.substitute_axis(0, &rat(1, 2));
        assert_eq!(s.nvars(), 1);
        assert_eq!(s.coeff(&Monomial(vec![1])), qreal(5, 4));
    }

    #[test]
    fn serialization_round_trip_rational() {
        let p = sample_poly();
        let repr = p.to_repr();
        let json = serde_json::to_string(&repr).unwrap();
        let back: PolyRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(QPoly::from_repr(&back).unwrap(), p);
    }

    #[test]
    fn monomial_basis_sizes() {
        assert_eq!(monomials_of_degree(2, 3).len(), 4);
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(1, 7).len(), 1);
    }

    fn arb_qpoly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = QPoly> {
        prop::collection::vec(
            (
                prop::collection::vec(0u32..=max_deg, nvars),
                -9i64..=9,
                1i64..=4,
            ),
            0..max_terms,
        )
        .prop_map(move |terms| {
            QPoly::from_terms(
                nvars,
                terms
                    .into_iter()
                    .map(|(e, n, d)| (Monomial(e), qreal(n, d))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn homogeneous_decomposition_round_trip(p in arb_qpoly(3, 4, 8)) {
            let parts = p.homogeneous_parts();
            let mut sum = QPoly::zero(p.nvars());
            for part in &parts {
                sum = sum.add(part.base());
            }
            prop_assert_eq!(sum, p);
        }

        #[test]
        fn mul_consistent_with_eval(
            p in arb_qpoly(2, 3, 6),
            q in arb_qpoly(2, 3, 6),
            zn in prop::collection::vec(-5i64..=5, 2),
        ) {
            let z: Vec<CxRat> = zn.iter().map(|&n| qreal(n, 3)).collect();
            let lhs = p.mul(&q).eval(&z);
            let rhs = p.eval(&z).mul(&q.eval(&z));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn l1_submultiplicative(
            p in arb_qpoly(2, 3, 6),
            q in arb_qpoly(2, 3, 6),
        ) {
            let prod_norm = p.mul(&q).l1_norm();
            let bound = p.l1_norm().mul(&q.l1_norm());
            prop_assert!(prod_norm <= bound);
        }
    }

    #[test]
    fn pointwise_bound_for_homogeneous_float() {
        // |h(z)| <= l1(h) * max|z_i|^d on random instances
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let nvars = rng.gen_range(1..=4usize);
            let d = rng.gen_range(0..=12u32);
            let basis = monomials_of_degree(nvars, d);
            let mut h = CPoly::zero(nvars);
            for m in basis {
                if rng.gen_bool(0.5) {
                    h.add_term(m, Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
                }
            }
            let h = HomogeneousPoly::new(h, d).unwrap();
            let z: Vec<Complex64> = (0..nvars)
                .map(|_| Complex64::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5)))
                .collect();
            let zmax = z.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
            let lhs = h.eval(&z).norm();
            let rhs = h.l1_norm() * zmax.powi(d as i32);
            assert!(lhs <= rhs * (1.0 + 1e-12) + 1e-300, "{lhs} > {rhs}");
        }
    }

    #[test]
    fn homogeneous_scaling_law() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let d = rng.gen_range(1..=8u32);
            let basis = monomials_of_degree(2, d);
            let mut h = CPoly::zero(2);
            for m in basis {
                h.add_term(m, Complex64::new(rng.gen_range(-1.0..1.0), 0.0));
            }
            let h = HomogeneousPoly::new(h, d).unwrap();
            let z = [
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            ];
            let t = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let tz: Vec<Complex64> = z.iter().map(|zi| t * zi).collect();
            let lhs = h.eval(&tz);
            let rhs = t.powu(d) * h.eval(&z);
            let scale = rhs.norm().max(1e-12);
            assert!((lhs - rhs).norm() / scale < 1e-10);
        }
    }
}
