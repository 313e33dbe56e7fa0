//! Symmetric decompositions of h*-type polynomials.
//!
//! Every decomposition is computed from closed-form partial sums and then
//! re-verified by reconstructing the decomposed polynomial. A reconstruction
//! mismatch is reported as [`Error::Internal`]; sign conditions are exposed
//! through `signs_hold` so callers can report them without aborting.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::ehrhart::open_numerator;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::{series_numerator, IntPolynomial};

/// `(1 + z + ... + z^(l-1)) h = a + z^l b` with `a` symmetric about `d` and
/// `b` symmetric about `s - 1`, where `l = d + 1 - s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricDecomposition {
    pub a: IntPolynomial,
    pub b: IntPolynomial,
    pub d: usize,
    pub s: usize,
    pub l: usize,
}

impl SymmetricDecomposition {
    /// `a + z^l b`.
    pub fn reconstruct(&self) -> IntPolynomial {
        &self.a + &self.b.shift(self.l)
    }

    pub fn is_symmetric(&self) -> bool {
        let b_ok = match self.s.checked_sub(1) {
            Some(center) => self.b.is_symmetric(center),
            None => self.b.is_zero(),
        };
        self.a.is_symmetric(self.d) && b_ok
    }

    pub fn is_nonnegative(&self) -> bool {
        self.a.is_nonnegative() && self.b.is_nonnegative()
    }
}

/// Decomposes `h` about ambient degree `d` with `s = deg h`.
pub fn ab_decompose(h: &IntPolynomial, d: usize) -> Result<SymmetricDecomposition> {
    let s = h.degree().ok_or(Error::ZeroPolynomial)?;
    ab_decompose_at(h, d, s)
}

/// Like [`ab_decompose`] but with an explicit `s >= deg h`, treating the
/// coefficients above the true degree as zero.
pub fn ab_decompose_at(h: &IntPolynomial, d: usize, s: usize) -> Result<SymmetricDecomposition> {
    if let Some(degree) = h.degree() {
        if degree > s {
            return Err(Error::DegreeTooLarge { degree, bound: s });
        }
    }
    if s > d {
        return Err(Error::DegreeTooLarge { degree: s, bound: d });
    }
    let l = d + 1 - s;
    // prefix[k] = h_0 + ... + h_{k-1}
    let mut prefix = vec![BigInt::zero()];
    for k in 0..=d {
        let next = &prefix[k] + h.coeff(k);
        prefix.push(next);
    }
    let sum_to = |k: usize| &prefix[k + 1];
    // a_i = (h_0 + .. + h_i) - (h_d + .. + h_{d-i+1})
    let a = (0..=d)
        .map(|i| sum_to(i) - (sum_to(d) - sum_to(d - i)))
        .collect();
    // b_i = (h_s + .. + h_{s-i}) - (h_0 + .. + h_i)
    let b = (0..s)
        .map(|i| {
            let top = sum_to(s) - &prefix[s - i];
            top - sum_to(i)
        })
        .collect();
    let dec = SymmetricDecomposition {
        a: IntPolynomial::new(a),
        b: IntPolynomial::new(b),
        d,
        s,
        l,
    };
    let expected = &IntPolynomial::geometric(l) * h;
    if dec.reconstruct() != expected {
        return Err(Error::Internal(format!(
            "decomposition of {h} at d = {d}, s = {s}: a + z^{l} b = {} but (1 + ... + z^{}) h = {expected}",
            dec.reconstruct(),
            l - 1
        )));
    }
    if !dec.is_symmetric() {
        return Err(Error::Internal(format!(
            "decomposition of {h} at d = {d}: a = {}, b = {} not symmetric",
            dec.a, dec.b
        )));
    }
    Ok(dec)
}

/// The decomposition `(1 + ... + z^(l-1)) h* = a* + z^l b*` of an Ehrhart
/// numerator. With `require_nonnegative`, a negative coefficient in `a*` or
/// `b*` is returned as [`Error::Counterexample`].
pub fn stapledon_pair(
    hstar: &IntPolynomial,
    d: usize,
    require_nonnegative: bool,
) -> Result<SymmetricDecomposition> {
    let dec = ab_decompose(hstar, d)?;
    if require_nonnegative && !dec.is_nonnegative() {
        return Err(Error::Counterexample(format!(
            "h* = {hstar}, d = {d}: a* = {}, b* = {}",
            dec.a, dec.b
        )));
    }
    Ok(dec)
}

/// `h_P = a_P - b_P` for the open polytope; `a_P` symmetric about `d + 1`,
/// `b_P` about `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenDecomposition {
    pub a: IntPolynomial,
    pub b: IntPolynomial,
    pub d: usize,
}

impl OpenDecomposition {
    pub fn numerator(&self) -> IntPolynomial {
        &self.a - &self.b
    }

    pub fn is_symmetric(&self) -> bool {
        self.a.is_symmetric(self.d + 1) && self.b.is_symmetric(self.d)
    }

    pub fn signs_hold(&self) -> bool {
        self.a.is_nonnegative() && self.b.is_nonnegative()
    }
}

/// `a_P` is the `a`-part of `h*` at ambient `d + 1` (the pyramid over `P`
/// shares `h*`), `b_P` the `a`-part at ambient `d`.
pub fn open_decomposition(hstar: &IntPolynomial, d: usize) -> Result<OpenDecomposition> {
    let pyramid = ab_decompose(hstar, d + 1)?;
    let base = ab_decompose(hstar, d)?;
    let dec = OpenDecomposition {
        a: pyramid.a,
        b: base.a,
        d,
    };
    let h_open = open_numerator(hstar, d)?;
    if dec.numerator() != h_open {
        return Err(Error::Internal(format!(
            "open decomposition of h* = {hstar}: a_P - b_P = {} differs from h_P = {h_open}",
            dec.numerator()
        )));
    }
    Ok(dec)
}

/// `h_Pi = a_Pi + z b_Pi` with `a_Pi` symmetric about `d + 1` and nonpositive,
/// `b_Pi` symmetric about `d` and nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderDecomposition {
    pub a: IntPolynomial,
    pub b: IntPolynomial,
    pub d: usize,
}

impl OrderDecomposition {
    pub fn numerator(&self) -> IntPolynomial {
        &self.a + &self.b.shift(1)
    }

    pub fn is_symmetric(&self) -> bool {
        self.a.is_symmetric(self.d + 1) && self.b.is_symmetric(self.d)
    }

    pub fn signs_hold(&self) -> bool {
        self.a.is_nonpositive() && self.b.is_nonnegative()
    }
}

impl std::ops::Add for OrderDecomposition {
    type Output = OrderDecomposition;
    fn add(self, rhs: Self) -> Self {
        OrderDecomposition {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            d: self.d,
        }
    }
}

/// `b_Pi = a*` (the `a`-part at ambient `d`) and `a_Pi = -z a*_1` (the
/// `a`-part at ambient `d - 1`, which the projected polytope shares). The
/// result is checked against the open numerator and against the direct
/// decomposition of `h_Pi` at ambient `d + 1`.
pub fn order_decomposition(hstar: &IntPolynomial, d: usize) -> Result<OrderDecomposition> {
    let b = ab_decompose(hstar, d)?.a;
    let a = match d.checked_sub(1) {
        Some(lower) => -ab_decompose(hstar, lower)?.a.shift(1),
        None => IntPolynomial::zero(),
    };
    let dec = OrderDecomposition { a, b, d };
    let h_open = open_numerator(hstar, d)?;
    if dec.numerator() != h_open {
        return Err(Error::Internal(format!(
            "order decomposition of h* = {hstar}: a + z b = {} differs from h_Pi = {h_open}",
            dec.numerator()
        )));
    }
    if h_open.degree() == Some(d + 1) {
        let direct = ab_decompose(&h_open, d + 1)?;
        if direct.a != dec.a || direct.b != dec.b {
            return Err(Error::Internal(format!(
                "order decomposition of h* = {hstar} disagrees with direct split a = {}, b = {}",
                direct.a, direct.b
            )));
        }
    }
    Ok(dec)
}

/// `h_G` with `sum_n chi_G(n) z^n = h_G / (1-z)^(d+1)`, computed from the
/// chromatic polynomial and from the acyclic-orientation sum of open order
/// polytope numerators. The two must agree.
pub fn graph_numerator(graph: &Graph) -> Result<IntPolynomial> {
    let d = graph.len();
    let from_chromatic = series_numerator(&graph.chromatic_polynomial(), d)?;
    let mut total = IntPolynomial::zero();
    for o in graph.acyclic_orientations() {
        let hstar = graph.orientation_poset(o)?.descent_h_star();
        total = &total + &open_numerator(&hstar, d)?;
    }
    let from_orientations = total
        .div_z()
        .ok_or_else(|| Error::Internal(format!("orientation sum {total} is not divisible by z")))?;
    if from_chromatic != from_orientations {
        return Err(Error::Internal(format!(
            "h_G from chromatic polynomial {from_chromatic} differs from orientation sum {from_orientations}"
        )));
    }
    Ok(from_chromatic)
}

/// `z h_G = a + z b` with `a` symmetric about `d + 1`, `b` about `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDecomposition {
    pub a: IntPolynomial,
    pub b: IntPolynomial,
    pub d: usize,
    pub numerator: IntPolynomial,
    pub acyclic_orientations: usize,
}

impl GraphDecomposition {
    pub fn is_symmetric(&self) -> bool {
        self.a.is_symmetric(self.d + 1) && self.b.is_symmetric(self.d)
    }

    pub fn signs_hold(&self) -> bool {
        self.a.is_nonpositive() && self.b.is_nonnegative()
    }
}

/// Sums the order decompositions over all acyclic orientations.
pub fn graph_decomposition(graph: &Graph) -> Result<GraphDecomposition> {
    let d = graph.len();
    let h_g = graph_numerator(graph)?;
    let mut sum = OrderDecomposition {
        a: IntPolynomial::zero(),
        b: IntPolynomial::zero(),
        d,
    };
    let mut count = 0;
    for o in graph.acyclic_orientations() {
        let hstar = graph.orientation_poset(o)?.descent_h_star();
        sum = sum + order_decomposition(&hstar, d)?;
        count += 1;
    }
    let z_h = h_g.shift(1);
    if sum.numerator() != z_h {
        return Err(Error::Internal(format!(
            "graph decomposition: a + z b = {} differs from z h_G = {z_h}",
            sum.numerator()
        )));
    }
    let direct = ab_decompose(&z_h, d + 1)?;
    if direct.a != sum.a || direct.b != sum.b {
        return Err(Error::Internal(format!(
            "graph decomposition summed over orientations (a = {}, b = {}) differs from direct split (a = {}, b = {})",
            sum.a, sum.b, direct.a, direct.b
        )));
    }
    Ok(GraphDecomposition {
        a: sum.a,
        b: sum.b,
        d,
        numerator: h_g,
        acyclic_orientations: count,
    })
}

/// Splits `h = a + z b` with `a` symmetric about `d` and `b` about `d - 1`,
/// as conjectured for chromatic numerators and shifted open order numerators.
/// Holds the conjecture when `-a` and `b` are nonnegative.
pub fn conjectured_split(h: &IntPolynomial, d: usize) -> Result<SymmetricDecomposition> {
    ab_decompose_at(h, d, d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InequalityMode {
    /// `h_d + .. + h_{d-i+1} - h_0 - .. - h_{i-1} >= 0` for `1 <= i <= (d+1)/2`.
    Theorem,
    /// `h_d + .. + h_{d-i+1} - h_0 - .. - h_i >= 0` for `1 <= i <= d/2`.
    Conjecture,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityTerm {
    pub i: usize,
    pub value: BigInt,
    pub holds: bool,
}

pub fn inequality_report(h: &IntPolynomial, d: usize, mode: InequalityMode) -> Vec<InequalityTerm> {
    let (last, extra) = match mode {
        InequalityMode::Theorem => (d.div_ceil(2), 0),
        InequalityMode::Conjecture => (d / 2, 1),
    };
    (1..=last)
        .map(|i| {
            let top: BigInt = (d + 1 - i..=d).map(|k| h.coeff(k)).sum();
            let bottom: BigInt = (0..i + extra).map(|k| h.coeff(k)).sum();
            let value = top - bottom;
            InequalityTerm {
                i,
                holds: !value.is_negative(),
                value,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn ab_examples() {
        let dec = ab_decompose(&ip(&[1, 3]), 2).unwrap();
        assert_eq!((dec.a.clone(), dec.b.clone(), dec.l), (ip(&[1, 4, 1]), ip(&[2]), 2));
        assert_eq!(dec.reconstruct(), ip(&[1, 4, 3]));

        let dec = ab_decompose(&ip(&[0, 0, 0, 1]), 3).unwrap();
        assert_eq!((dec.a, dec.b, dec.l), (ip(&[0, -1, -1]), ip(&[1, 1, 1]), 1));

        for d in 1..6 {
            let mut c = vec![0; d + 1];
            c[0] = 1;
            c[d] = 1;
            let dec = ab_decompose(&ip(&c), d).unwrap();
            assert_eq!(dec.a, ip(&c));
            assert!(dec.b.is_zero());
        }
    }

    #[test]
    fn ab_errors() {
        assert_eq!(ab_decompose(&IntPolynomial::zero(), 2).unwrap_err(), Error::ZeroPolynomial);
        assert_eq!(
            ab_decompose(&ip(&[1, 1, 1, 1]), 2).unwrap_err(),
            Error::DegreeTooLarge { degree: 3, bound: 2 }
        );
    }

    #[test]
    fn stapledon_examples() {
        let dec = stapledon_pair(&ip(&[1, 3]), 2, true).unwrap();
        assert_eq!((dec.a, dec.b), (ip(&[1, 4, 1]), ip(&[2])));
        let dec = stapledon_pair(&ip(&[1]), 2, true).unwrap();
        assert_eq!((dec.a, dec.b), (ip(&[1, 1, 1]), IntPolynomial::zero()));
        let dec = stapledon_pair(&ip(&[1, 4, 1]), 3, true).unwrap();
        assert_eq!((dec.a, dec.b), (ip(&[1, 5, 5, 1]), IntPolynomial::zero()));
    }

    #[test]
    fn stapledon_flags_negative() {
        // 1 - z is not an h*-polynomial: b* = -2 at d = 1
        let err = stapledon_pair(&ip(&[1, -1]), 1, true).unwrap_err();
        assert!(matches!(err, Error::Counterexample(_)));
        assert!(stapledon_pair(&ip(&[1, -1]), 1, false).is_ok());
    }

    #[test]
    fn open_examples() {
        let dec = open_decomposition(&ip(&[1, 3]), 2).unwrap();
        assert_eq!((dec.a.clone(), dec.b.clone()), (ip(&[1, 4, 4, 1]), ip(&[1, 4, 1])));
        assert_eq!(dec.numerator(), ip(&[0, 0, 3, 1]));
        assert!(dec.signs_hold() && dec.is_symmetric());

        let dec = open_decomposition(&ip(&[1]), 1).unwrap();
        assert_eq!((dec.a, dec.b), (ip(&[1, 1, 1]), ip(&[1, 1])));

        let dec = open_decomposition(&ip(&[1]), 0).unwrap();
        assert_eq!((dec.a, dec.b), (ip(&[1, 1]), ip(&[1])));
    }

    #[test]
    fn order_examples() {
        let dec = order_decomposition(&ip(&[1]), 2).unwrap();
        assert_eq!((dec.a.clone(), dec.b.clone()), (ip(&[0, -1, -1]), ip(&[1, 1, 1])));
        assert!(dec.signs_hold() && dec.is_symmetric());

        let dec = order_decomposition(&ip(&[1, 1]), 2).unwrap();
        assert_eq!((dec.a.clone(), dec.b.clone()), (ip(&[0, -1, -1]), ip(&[1, 2, 1])));
        assert_eq!(dec.numerator(), ip(&[0, 0, 1, 1]));

        let dec = order_decomposition(&ip(&[1, 4, 1]), 3).unwrap();
        assert_eq!((dec.a.clone(), dec.b.clone()), (ip(&[0, -1, -4, -1]), ip(&[1, 5, 5, 1])));
        assert_eq!(dec.numerator(), ip(&[0, 0, 1, 4, 1]));

        let dec = order_decomposition(&ip(&[1]), 0).unwrap();
        assert_eq!((dec.a, dec.b), (IntPolynomial::zero(), ip(&[1])));
    }

    #[test]
    fn graph_numerator_examples() {
        assert_eq!(graph_numerator(&Graph::complete(2)).unwrap(), ip(&[0, 0, 2]));
        assert_eq!(graph_numerator(&Graph::complete(3)).unwrap(), ip(&[0, 0, 0, 6]));
        assert_eq!(graph_numerator(&Graph::path(3)).unwrap(), ip(&[0, 0, 2, 4]));
        assert_eq!(graph_numerator(&Graph::edgeless(0)).unwrap(), ip(&[1]));
        assert_eq!(graph_numerator(&Graph::edgeless(1)).unwrap(), ip(&[0, 1]));
    }

    #[test]
    fn graph_decomposition_examples() {
        let dec = graph_decomposition(&Graph::complete(2)).unwrap();
        assert_eq!((dec.a.clone(), dec.b.clone()), (ip(&[0, -2, -2]), ip(&[2, 2, 2])));
        assert!(dec.signs_hold() && dec.is_symmetric());

        let dec = graph_decomposition(&Graph::complete(3)).unwrap();
        assert_eq!((dec.a, dec.b), (ip(&[0, -6, -6, -6]), ip(&[6, 6, 6, 6])));
        assert_eq!(dec.acyclic_orientations, 6);

        let dec = graph_decomposition(&Graph::edgeless(2)).unwrap();
        assert_eq!((dec.a, dec.b), (ip(&[0, -1, -1]), ip(&[1, 2, 1])));
    }

    #[test]
    fn inequality_examples() {
        let r = inequality_report(&ip(&[0, 0, 0, 6]), 3, InequalityMode::Theorem);
        let vals: Vec<_> = r.iter().map(|t| (t.i, t.value.clone(), t.holds)).collect();
        assert_eq!(vals, vec![(1, 6.into(), true), (2, 6.into(), true)]);

        let r = inequality_report(&ip(&[0, 0, 2, 4]), 3, InequalityMode::Conjecture);
        assert_eq!(r.len(), 1);
        assert_eq!((r[0].value.clone(), r[0].holds), (4.into(), true));

        let r = inequality_report(&ip(&[1]), 2, InequalityMode::Theorem);
        assert_eq!(r.len(), 1);
        assert_eq!((r[0].value.clone(), r[0].holds), ((-1).into(), false));

        assert!(inequality_report(&ip(&[1]), 0, InequalityMode::Theorem).is_empty());
    }

    #[test]
    fn conjectured_split_matches_inequalities() {
        // path on 3 vertices: h_G = 2z^2 + 4z^3
        let h = ip(&[0, 0, 2, 4]);
        let split = conjectured_split(&h, 3).unwrap();
        assert_eq!(split.reconstruct(), h);
        let report = inequality_report(&h, 3, InequalityMode::Conjecture);
        for t in report {
            assert_eq!(-split.a.coeff(t.i), t.value);
        }
    }

    #[test]
    fn explicit_degree_allows_low_degree_input() {
        let split = conjectured_split(&ip(&[0, 1]), 3).unwrap();
        assert_eq!(split.reconstruct(), ip(&[0, 1]));
        assert!(split.is_symmetric());
    }
}
