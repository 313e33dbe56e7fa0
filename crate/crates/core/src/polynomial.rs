//! Dense univariate polynomials over exact integers and rationals, and the
//! generating-function transforms built on them.
//!
//! Coefficients are stored in ascending degree with trailing zeros trimmed.
//! The zero polynomial has an empty coefficient list and `degree() == None`,
//! which plays the role of degree minus infinity throughout the crate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

fn trim<T: Zero>(coeffs: &mut Vec<T>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * z^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::new(coeffs)
    }

    /// `1 + z + ... + z^(len-1)`; the zero polynomial when `len == 0`.
    pub fn geometric(len: usize) -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one(); len],
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `z^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Exact division by `z`; `None` when the constant term is nonzero.
    pub fn div_z(&self) -> Option<Self> {
        match self.coeffs.first() {
            None => Some(Self::zero()),
            Some(c) if c.is_zero() => Some(IntPolynomial {
                coeffs: self.coeffs[1..].to_vec(),
            }),
            Some(_) => None,
        }
    }

    /// Coefficients padded with zeros to at least `len` entries.
    pub fn padded(&self, len: usize) -> Vec<BigInt> {
        let mut out = self.coeffs.clone();
        if out.len() < len {
            out.resize(len, BigInt::zero());
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn is_nonpositive(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_positive())
    }

    /// True when `p(z) = z^center p(1/z)`, i.e. `p_i = p_{center-i}` and
    /// `degree <= center`. The zero polynomial is symmetric about any center.
    pub fn is_symmetric(&self, center: usize) -> bool {
        match self.degree() {
            None => true,
            Some(deg) if deg > center => false,
            Some(_) => (0..=center).all(|i| self.coeff(i) == self.coeff(center - i)),
        }
    }

    pub fn to_rational(&self) -> RatPolynomial {
        RatPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    /// Coefficient list as decimal strings, padded to `len`.
    pub fn to_decimal_strings(&self, len: usize) -> Vec<String> {
        let mut padded = self.padded(len);
        if padded.is_empty() {
            padded.push(BigInt::zero());
        }
        padded.iter().map(ToString::to_string).collect()
    }
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        trim(&mut coeffs);
        RatPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RatPolynomial { coeffs: Vec::new() }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::from_i64s(coeffs).to_rational()
    }

    /// Builds from `(numerator, denominator)` pairs.
    pub fn from_fractions(coeffs: &[(i64, i64)]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, n: i64) -> BigRational {
        self.eval(&BigRational::from_integer(n.into()))
    }

    /// `p(n + k)` as a polynomial in `n`.
    pub fn translate(&self, k: i64) -> Self {
        let step = RatPolynomial::from_i64s(&[k, 1]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &step) + &RatPolynomial::new(vec![c.clone()])
        })
    }

    /// `Some` when every coefficient is an integer.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }

    pub fn to_strings(&self, len: usize) -> Vec<String> {
        let mut out: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        while out.len() < len.max(1) {
            out.push("0".into());
        }
        out
    }
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident) => {
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl $trait<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}

macro_rules! impl_ring_ops {
    ($ty:ident, $coef:ty) => {
        impl Add<&$ty> for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                let len = self.coeffs.len().max(rhs.coeffs.len());
                $ty::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
            }
        }

        impl Sub<&$ty> for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                let len = self.coeffs.len().max(rhs.coeffs.len());
                $ty::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
            }
        }

        impl Mul<&$ty> for &$ty {
            type Output = $ty;
            fn mul(self, rhs: &$ty) -> $ty {
                if self.is_zero() || rhs.is_zero() {
                    return $ty::zero();
                }
                let mut out = vec![<$coef>::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
                for (i, a) in self.coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in rhs.coeffs.iter().enumerate() {
                        out[i + j] += a * b;
                    }
                }
                $ty::new(out)
            }
        }

        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty {
                    coeffs: self.coeffs.iter().map(|c| -c).collect(),
                }
            }
        }

        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }

        impl Mul<&$coef> for &$ty {
            type Output = $ty;
            fn mul(self, rhs: &$coef) -> $ty {
                $ty::new(self.coeffs.iter().map(|c| c * rhs).collect())
            }
        }

        impl std::iter::Sum for $ty {
            fn sum<I: Iterator<Item = $ty>>(iter: I) -> $ty {
                iter.fold($ty::zero(), |acc, p| &acc + &p)
            }
        }

        forward_binop!($ty, Add, add);
        forward_binop!($ty, Sub, sub);
        forward_binop!($ty, Mul, mul);
    };
}

impl_ring_ops!(IntPolynomial, BigInt);
impl_ring_ops!(RatPolynomial, BigRational);

fn write_terms<T: fmt::Display + Zero + Signed + One + PartialEq>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[T],
    var: &str,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
        }
        first = false;
        let unit = mag.is_one();
        let mag = match mag.to_string() {
            m if i > 0 && m.contains('/') => format!("({m})"),
            m => m,
        };
        match i {
            0 => write!(f, "{mag}")?,
            1 if unit => write!(f, "{var}")?,
            1 => write!(f, "{mag}{var}")?,
            _ if unit => write!(f, "{var}^{i}")?,
            _ => write!(f, "{mag}{var}^{i}")?,
        }
    }
    Ok(())
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "z")
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "n")
    }
}

impl fmt::Debug for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPolynomial({self})")
    }
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `z^bound * p(1/z)`: coefficient `i` of the result is `p_{bound-i}`.
///
/// The zero polynomial reverses to itself.
pub fn reverse(p: &IntPolynomial, bound: usize) -> Result<IntPolynomial> {
    let Some(degree) = p.degree() else {
        return Ok(IntPolynomial::zero());
    };
    if degree > bound {
        return Err(Error::ReverseDegree { degree, bound });
    }
    Ok(IntPolynomial::new(
        (0..=bound).map(|i| p.coeff(bound - i)).collect(),
    ))
}

/// Lagrange interpolation through `(n, value)` pairs. The result has degree
/// below the number of points.
pub fn interpolate(points: &[(BigInt, BigRational)]) -> Result<RatPolynomial> {
    if points.is_empty() {
        return Err(Error::NoPoints);
    }
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(Error::DuplicateNode(x.to_string()));
        }
    }
    let mut total = RatPolynomial::zero();
    for (k, (xk, vk)) in points.iter().enumerate() {
        if vk.is_zero() {
            continue;
        }
        let mut basis = RatPolynomial::new(vec![BigRational::one()]);
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == k {
                continue;
            }
            let xj = BigRational::from_integer(xj.clone());
            basis = &basis * &RatPolynomial::new(vec![-xj.clone(), BigRational::one()]);
            denom *= BigRational::from_integer(xk.clone()) - xj;
        }
        total = &total + &(&basis * &(vk / denom));
    }
    Ok(total)
}

/// Interpolates integer values observed at `n = 0, 1, ..., values.len()-1`.
pub fn interpolate_from_zero(values: &[BigInt]) -> Result<RatPolynomial> {
    let points: Vec<_> = values
        .iter()
        .enumerate()
        .map(|(n, v)| (BigInt::from(n), BigRational::from_integer(v.clone())))
        .collect();
    interpolate(&points)
}

/// Numerator coefficients `h_0..h_{k-1}` of `sum_n c_n z^n = h(z) / (1-z)^(d+1)`
/// from the first `k` series coefficients.
///
/// Each `h_j` depends only on `c_0..c_j`, so the truncation is exact.
pub fn numerator_from_values(values: &[BigInt], d: usize) -> IntPolynomial {
    let signed_binoms: Vec<BigInt> = (0..=d as u64 + 1)
        .map(|i| {
            let b = binomial(d as u64 + 1, i);
            if i % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .collect();
    let h = (0..values.len())
        .map(|j| {
            (0..=j.min(d + 1))
                .map(|i| &signed_binoms[i] * &values[j - i])
                .sum::<BigInt>()
        })
        .collect();
    IntPolynomial::new(h)
}

/// Numerator `h` of `sum_{n>=0} L(n) z^n = h(z) / (1-z)^(d+1)` for a
/// polynomial `L` of degree at most `d`; `deg h <= d`.
pub fn series_numerator(l: &RatPolynomial, d: usize) -> Result<IntPolynomial> {
    if let Some(degree) = l.degree() {
        if degree > d {
            return Err(Error::DegreeTooLarge { degree, bound: d });
        }
    }
    let values: Vec<BigRational> = (0..=d as i64).map(|n| l.eval_int(n)).collect();
    let mut h = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut acc = BigRational::zero();
        for i in 0..=j {
            let term = BigRational::from_integer(binomial(d as u64 + 1, i as u64)) * &values[j - i];
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if !acc.is_integer() {
            return Err(Error::NonIntegerNumerator {
                index: j,
                value: acc.to_string(),
            });
        }
        h.push(acc.to_integer());
    }
    Ok(IntPolynomial::new(h))
}

/// First `n_max + 1` coefficients of `h(z) / (1-z)^(d+1)`.
pub fn expand_series(h: &IntPolynomial, d: usize, n_max: usize) -> Vec<BigInt> {
    (0..=n_max)
        .map(|n| {
            h.coeffs()
                .iter()
                .enumerate()
                .take_while(|(j, _)| *j <= n)
                .map(|(j, hj)| hj * binomial((n - j + d) as u64, d as u64))
                .sum()
        })
        .collect()
}

/// `(1-z)^(d+1) f(z/(1-z))`: the h-polynomial of a simplicial complex of
/// dimension `d` with f-polynomial `f = sum_i f_{i-1} z^i`.
pub fn f_to_h(f: &IntPolynomial, d: usize) -> Result<IntPolynomial> {
    if !f.coeff(0).is_one() {
        return Err(Error::EmptyFace(f.coeff(0).to_string()));
    }
    substitute(f, d, -1)
}

/// Inverse of [`f_to_h`]: `(1+z)^(d+1) h(z/(1+z))`.
pub fn h_to_f(h: &IntPolynomial, d: usize) -> Result<IntPolynomial> {
    substitute(h, d, 1)
}

// sum_i p_i z^i (1 + sign*z)^(d+1-i)
fn substitute(p: &IntPolynomial, d: usize, sign: i64) -> Result<IntPolynomial> {
    let top = d + 1;
    if let Some(degree) = p.degree() {
        if degree > top {
            return Err(Error::DegreeTooLarge { degree, bound: top });
        }
    }
    let factor = IntPolynomial::from_i64s(&[1, sign]);
    let mut powers = vec![IntPolynomial::one()];
    for k in 1..=top {
        let next = &powers[k - 1] * &factor;
        powers.push(next);
    }
    Ok(p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| &powers[top - i].shift(i) * c)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn zero_polynomial_conventions() {
        let z = IntPolynomial::zero();
        assert_eq!(z.degree(), None);
        assert_eq!(z.coeff(5), BigInt::zero());
        assert!(z.is_symmetric(0));
        assert_eq!(reverse(&z, 3).unwrap(), z);
        assert_eq!(ip(&[0, 0, 0]), z);
        assert_eq!(z.to_string(), "0");
        assert_eq!(z.div_z(), Some(IntPolynomial::zero()));
    }

    #[test]
    fn display_terms() {
        assert_eq!(ip(&[1, 3, 0, -1]).to_string(), "1 + 3z - z^3");
        assert_eq!(ip(&[0, -2, -2]).to_string(), "-2z - 2z^2");
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(reverse(&ip(&[1]), 2).unwrap(), ip(&[0, 0, 1]));
        assert_eq!(reverse(&ip(&[1, 3]), 3).unwrap(), ip(&[0, 0, 3, 1]));
        assert_eq!(reverse(&ip(&[1, 4, 1]), 2).unwrap(), ip(&[1, 4, 1]));
        assert_eq!(
            reverse(&ip(&[1, 2, 3]), 1).unwrap_err(),
            Error::ReverseDegree { degree: 2, bound: 1 }
        );
    }

    #[test]
    fn interpolate_examples() {
        let pts = |v: &[i64]| -> Vec<(BigInt, BigRational)> {
            v.iter()
                .enumerate()
                .map(|(n, &x)| (BigInt::from(n), BigRational::from_integer(x.into())))
                .collect()
        };
        assert_eq!(interpolate(&pts(&[1, 3, 5])).unwrap(), RatPolynomial::from_i64s(&[1, 2]));
        assert_eq!(interpolate(&pts(&[1, 4, 9])).unwrap(), RatPolynomial::from_i64s(&[1, 2, 1]));
        assert_eq!(interpolate(&pts(&[1, 6, 15])).unwrap(), RatPolynomial::from_i64s(&[1, 3, 2]));
    }

    #[test]
    fn interpolate_errors() {
        assert_eq!(interpolate(&[]).unwrap_err(), Error::NoPoints);
        let p = (BigInt::from(2), BigRational::one());
        assert!(matches!(
            interpolate(&[p.clone(), p]).unwrap_err(),
            Error::DuplicateNode(_)
        ));
    }

    #[test]
    fn interpolate_fractional() {
        // counts 0, 1, 3 at n = 0, 1, 2 give n(n+1)/2
        let p = interpolate_from_zero(&ints(&[0, 1, 3])).unwrap();
        assert_eq!(p, RatPolynomial::from_fractions(&[(0, 1), (1, 2), (1, 2)]));
    }

    #[test]
    fn series_numerator_examples() {
        assert_eq!(series_numerator(&RatPolynomial::from_i64s(&[1, 1]), 1).unwrap(), ip(&[1]));
        assert_eq!(
            series_numerator(&RatPolynomial::from_i64s(&[1, 3, 2]), 2).unwrap(),
            ip(&[1, 3])
        );
        // n(n-1)(n-2) = 2n - 3n^2 + n^3
        assert_eq!(
            series_numerator(&RatPolynomial::from_i64s(&[0, 2, -3, 1]), 3).unwrap(),
            ip(&[0, 0, 0, 6])
        );
    }

    #[test]
    fn series_numerator_errors() {
        let cubic = RatPolynomial::from_i64s(&[0, 0, 0, 1]);
        assert_eq!(
            series_numerator(&cubic, 2).unwrap_err(),
            Error::DegreeTooLarge { degree: 3, bound: 2 }
        );
        let half_n = RatPolynomial::from_fractions(&[(0, 1), (1, 2)]);
        assert!(matches!(
            series_numerator(&half_n, 1).unwrap_err(),
            Error::NonIntegerNumerator { .. }
        ));
    }

    #[test]
    fn expand_series_examples() {
        assert_eq!(expand_series(&ip(&[1]), 1, 3), ints(&[1, 2, 3, 4]));
        assert_eq!(expand_series(&ip(&[0, 0, 3, 1]), 2, 3), ints(&[0, 0, 3, 10]));
        assert_eq!(expand_series(&ip(&[0, 0, 2]), 2, 4), ints(&[0, 0, 2, 6, 12]));
        assert_eq!(expand_series(&IntPolynomial::zero(), 2, 2), ints(&[0, 0, 0]));
    }

    #[test]
    fn numerator_from_values_truncates_exactly() {
        // interior counts of the leg-2 triangle: (n-1)(2n-1)
        let h = numerator_from_values(&ints(&[0, 0, 3, 10]), 2);
        assert_eq!(h, ip(&[0, 0, 3, 1]));
    }

    #[test]
    fn f_to_h_examples() {
        assert_eq!(f_to_h(&ip(&[1, 3, 3, 1]), 2).unwrap(), ip(&[1]));
        assert_eq!(f_to_h(&ip(&[1, 4, 5, 2]), 2).unwrap(), ip(&[1, 1]));
        assert_eq!(f_to_h(&ip(&[1, 1]), 0).unwrap(), ip(&[1]));
        assert!(matches!(f_to_h(&ip(&[2, 1]), 0).unwrap_err(), Error::EmptyFace(_)));
        assert!(matches!(
            f_to_h(&ip(&[1, 1, 1, 1]), 1).unwrap_err(),
            Error::DegreeTooLarge { .. }
        ));
    }

    #[test]
    fn translate_shifts_argument() {
        // n(n+1)/2 evaluated at n+1
        let p = RatPolynomial::from_fractions(&[(0, 1), (1, 2), (1, 2)]);
        let q = p.translate(1);
        for n in -3..4 {
            assert_eq!(q.eval_int(n), p.eval_int(n + 1));
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn symmetry_test() {
        assert!(ip(&[1, 4, 1]).is_symmetric(2));
        assert!(ip(&[0, 1, 1]).is_symmetric(3));
        assert!(!ip(&[0, 1, 1]).is_symmetric(2));
        assert!(!ip(&[1, 2, 3]).is_symmetric(1));
    }
}
