//! Lattice-point counting in dilates of order polytopes, lattice simplices
//! and bounded H-representation polytopes, and h*-extraction from the counts.

use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::polynomial::{
    interpolate_from_zero, numerator_from_values, reverse, series_numerator, IntPolynomial,
    RatPolynomial,
};
use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticePolytope {
    /// `{0 <= x_i <= 1, x_i <= x_j whenever p_i < p_j}`.
    Order(Poset),
    Simplex(Simplex),
    HRep(HRep),
}

/// Full-dimensional lattice simplex in `Z^d`, stored with the integer
/// adjugate of its edge matrix for exact barycentric tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    vertices: Vec<Vec<i64>>,
    /// `adj * (x - v0) = det * lambda` where `x = v0 + sum lambda_i (v_i - v0)`.
    adjugate: Vec<Vec<BigInt>>,
    det: BigInt,
}

/// `{x : a.x <= b for every (a, b)}` with a bounding box for enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    dim: usize,
    inequalities: Vec<(Vec<i64>, i64)>,
    bounds: Vec<(BigRational, BigRational)>,
}

impl Simplex {
    pub fn new(vertices: Vec<Vec<i64>>) -> Result<Self> {
        let d = vertices.len().checked_sub(1).ok_or(Error::DegenerateSimplex)?;
        if let Some(bad) = vertices.iter().find(|v| v.len() != d) {
            return Err(Error::Dimension(format!(
                "simplex with {} vertices needs {d} coordinates per vertex, found {}",
                d + 1,
                bad.len()
            )));
        }
        // column i = v_{i+1} - v_0
        let m: Vec<Vec<BigRational>> = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| BigRational::from_integer((vertices[c + 1][r] - vertices[0][r]).into()))
                    .collect()
            })
            .collect();
        let (inverse, det) = invert(m).ok_or(Error::DegenerateSimplex)?;
        let adjugate = inverse
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| {
                        let scaled = x * &det;
                        debug_assert!(scaled.is_integer());
                        scaled.to_integer()
                    })
                    .collect()
            })
            .collect();
        Ok(Simplex {
            vertices,
            adjugate,
            det: det.to_integer(),
        })
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    /// Absolute determinant of the edge matrix: the normalized volume.
    pub fn normalized_volume(&self) -> BigInt {
        self.det.abs()
    }

    fn contains(&self, x: &[i64], n: i64, interior: bool) -> bool {
        let d = self.dim();
        let sign = if self.det.is_negative() { -BigInt::one() } else { BigInt::one() };
        let w: Vec<BigInt> = (0..d).map(|r| BigInt::from(x[r] - n * self.vertices[0][r])).collect();
        let mut sum = BigInt::zero();
        for row in &self.adjugate {
            let lam: BigInt = row.iter().zip(&w).map(|(a, b)| a * b).sum::<BigInt>() * &sign;
            if lam.is_negative() || (interior && lam.is_zero()) {
                return false;
            }
            sum += lam;
        }
        let cap = BigInt::from(n) * self.det.abs();
        if interior {
            sum < cap
        } else {
            sum <= cap
        }
    }

    fn box_for(&self, n: i64) -> Vec<(i64, i64)> {
        (0..self.dim())
            .map(|r| {
                let lo = self.vertices.iter().map(|v| v[r]).min().unwrap();
                let hi = self.vertices.iter().map(|v| v[r]).max().unwrap();
                (lo * n, hi * n)
            })
            .collect()
    }
}

// Gauss-Jordan inverse and determinant; `None` when singular.
fn invert(mut m: Vec<Vec<BigRational>>) -> Option<(Vec<Vec<BigRational>>, BigRational)> {
    let d = m.len();
    let mut inv: Vec<Vec<BigRational>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    let mut det = BigRational::one();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !m[r][col].is_zero())?;
        if pivot != col {
            m.swap(pivot, col);
            inv.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for j in 0..d {
            m[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..d {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for j in 0..d {
                let a = &m[col][j] * &factor;
                m[r][j] -= a;
                let b = &inv[col][j] * &factor;
                inv[r][j] -= b;
            }
        }
    }
    Some((inv, det))
}

impl HRep {
    /// `inequalities` are `(a, b)` meaning `a.x <= b`. Without `bounds` the
    /// bounding box is derived by interval propagation; if that leaves any
    /// coordinate unbounded the polytope is rejected.
    pub fn new(
        dim: usize,
        inequalities: Vec<(Vec<i64>, i64)>,
        bounds: Option<Vec<(i64, i64)>>,
    ) -> Result<Self> {
        if let Some((a, _)) = inequalities.iter().find(|(a, _)| a.len() != dim) {
            return Err(Error::Dimension(format!(
                "inequality normal has {} entries, dimension is {dim}",
                a.len()
            )));
        }
        let bounds = match bounds {
            Some(b) => {
                if b.len() != dim {
                    return Err(Error::Dimension(format!("box has {} ranges, dimension is {dim}", b.len())));
                }
                b.into_iter()
                    .map(|(lo, hi)| (BigRational::from_integer(lo.into()), BigRational::from_integer(hi.into())))
                    .collect()
            }
            None => propagate_bounds(dim, &inequalities).ok_or(Error::Unbounded)?,
        };
        Ok(HRep {
            dim,
            inequalities,
            bounds,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn inequalities(&self) -> &[(Vec<i64>, i64)] {
        &self.inequalities
    }

    /// Rational bounding box of the undilated polytope.
    pub fn bounds(&self) -> &[(BigRational, BigRational)] {
        &self.bounds
    }

    fn contains(&self, x: &[i64], n: i64, interior: bool) -> bool {
        self.inequalities.iter().all(|(a, b)| {
            let lhs: i128 = a.iter().zip(x).map(|(&ai, &xi)| i128::from(ai) * i128::from(xi)).sum();
            let rhs = i128::from(*b) * i128::from(n);
            if interior {
                lhs < rhs
            } else {
                lhs <= rhs
            }
        })
    }

    fn box_for(&self, n: i64) -> Vec<(i64, i64)> {
        let n = BigRational::from_integer(n.into());
        self.bounds
            .iter()
            .map(|(lo, hi)| {
                let lo = (lo * &n).ceil().to_integer();
                let hi = (hi * &n).floor().to_integer();
                (
                    i64::try_from(lo).unwrap_or(i64::MAX),
                    i64::try_from(hi).unwrap_or(i64::MIN),
                )
            })
            .collect()
    }
}

fn propagate_bounds(dim: usize, ineqs: &[(Vec<i64>, i64)]) -> Option<Vec<(BigRational, BigRational)>> {
    let mut lo: Vec<Option<BigRational>> = vec![None; dim];
    let mut hi: Vec<Option<BigRational>> = vec![None; dim];
    let rounds = 4 * (dim + 1) * (ineqs.len() + 1);
    for _ in 0..rounds {
        let mut changed = false;
        for (a, b) in ineqs {
            for j in 0..dim {
                if a[j] == 0 {
                    continue;
                }
                // smallest possible value of sum_{k != j} a_k x_k
                let mut rest = BigRational::zero();
                let mut finite = true;
                for (k, &ak) in a.iter().enumerate() {
                    if k == j || ak == 0 {
                        continue;
                    }
                    let bound = if ak > 0 { &lo[k] } else { &hi[k] };
                    match bound {
                        Some(v) => rest += v * BigRational::from_integer(ak.into()),
                        None => {
                            finite = false;
                            break;
                        }
                    }
                }
                if !finite {
                    continue;
                }
                let limit = (BigRational::from_integer((*b).into()) - rest) / BigRational::from_integer(a[j].into());
                if a[j] > 0 {
                    if hi[j].as_ref().is_none_or(|h| limit < *h) {
                        hi[j] = Some(limit);
                        changed = true;
                    }
                } else if lo[j].as_ref().is_none_or(|l| limit > *l) {
                    lo[j] = Some(limit);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    lo.into_iter().zip(hi).map(|(l, h)| Some((l?, h?))).collect()
}

fn count_in_box(
    bounds: &[(i64, i64)],
    budget: &Budget,
    mut accept: impl FnMut(&[i64]) -> bool,
) -> Result<u64> {
    let mut volume: u128 = 1;
    for &(lo, hi) in bounds {
        if lo > hi {
            return Ok(0);
        }
        volume = volume.saturating_mul((hi - lo + 1) as u128);
    }
    budget.charge("lattice points in bounding box", volume)?;
    let mut x: Vec<i64> = bounds.iter().map(|b| b.0).collect();
    let mut count = 0;
    loop {
        if accept(&x) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == x.len() {
                return Ok(count);
            }
            if x[k] < bounds[k].1 {
                x[k] += 1;
                break;
            }
            x[k] = bounds[k].0;
            k += 1;
        }
    }
}

impl LatticePolytope {
    pub fn order(poset: Poset) -> Self {
        LatticePolytope::Order(poset)
    }

    pub fn simplex(vertices: Vec<Vec<i64>>) -> Result<Self> {
        Simplex::new(vertices).map(LatticePolytope::Simplex)
    }

    /// `conv{0, k e_1, ..., k e_d}`.
    pub fn dilated_standard_simplex(d: usize, k: i64) -> Result<Self> {
        let mut vertices = vec![vec![0; d]];
        for i in 0..d {
            let mut v = vec![0; d];
            v[i] = k;
            vertices.push(v);
        }
        Self::simplex(vertices)
    }

    /// `[0, k]^d` as an H-representation.
    pub fn dilated_cube(d: usize, k: i64) -> Result<Self> {
        let mut ineqs = Vec::with_capacity(2 * d);
        for i in 0..d {
            let mut up = vec![0; d];
            up[i] = 1;
            let mut down = vec![0; d];
            down[i] = -1;
            ineqs.push((up, k));
            ineqs.push((down, 0));
        }
        HRep::new(d, ineqs, None).map(LatticePolytope::HRep)
    }

    pub fn dim(&self) -> usize {
        match self {
            LatticePolytope::Order(p) => p.len(),
            LatticePolytope::Simplex(s) => s.dim(),
            LatticePolytope::HRep(h) => h.dim(),
        }
    }

    /// Lattice points in `nP` (closed) or in its interior. The interior count
    /// at `n = 0` is 0 by convention.
    pub fn count_points(&self, n: u64, interior: bool, budget: &Budget) -> Result<u64> {
        if interior && n == 0 {
            return Ok(0);
        }
        let ni = i64::try_from(n).map_err(|_| Error::Dimension(format!("dilation {n} too large")))?;
        match self {
            LatticePolytope::Order(p) => {
                if interior {
                    p.count_order_maps(n - 1, true, budget)
                } else {
                    p.count_order_maps(n + 1, false, budget)
                }
            }
            LatticePolytope::Simplex(s) => count_in_box(&s.box_for(ni), budget, |x| s.contains(x, ni, interior)),
            LatticePolytope::HRep(h) => count_in_box(&h.box_for(ni), budget, |x| h.contains(x, ni, interior)),
        }
    }

    /// Interpolates closed counts at `n = 0..=d`. The result must have degree
    /// exactly `d` with positive leading coefficient.
    pub fn ehrhart_polynomial(&self, budget: &Budget) -> Result<RatPolynomial> {
        let d = self.dim();
        let counts = (0..=d as u64)
            .map(|n| self.count_points(n, false, budget).map(BigInt::from))
            .collect::<Result<Vec<_>>>()?;
        let poly = interpolate_from_zero(&counts)?;
        let leading_ok = poly.leading_coefficient().is_some_and(|c| c.is_positive());
        if poly.degree() != Some(d) || !leading_ok {
            return Err(Error::Dimension(format!(
                "Ehrhart polynomial {poly} does not have degree {d} with positive leading coefficient"
            )));
        }
        Ok(poly)
    }

    /// Numerator of the Ehrhart series.
    pub fn h_star(&self, budget: &Budget) -> Result<IntPolynomial> {
        let d = self.dim();
        let h = series_numerator(&self.ehrhart_polynomial(budget)?, d)?;
        if !h.coeff(0).is_one() || !h.is_nonnegative() {
            return Err(Error::Internal(format!(
                "h* = {h} must have constant term 1 and nonnegative coefficients"
            )));
        }
        Ok(h)
    }

    /// Numerator of `sum_{n>=1} L_{P°}(n) z^n`, computed from interior counts
    /// at `n = 0..=d+1` without using reciprocity.
    pub fn open_numerator_from_counts(&self, budget: &Budget) -> Result<IntPolynomial> {
        let d = self.dim();
        let counts = (0..=d as u64 + 1)
            .map(|n| self.count_points(n, true, budget).map(BigInt::from))
            .collect::<Result<Vec<_>>>()?;
        Ok(numerator_from_values(&counts, d))
    }

    /// Serializes in the polytope file format. Order polytopes are written as
    /// their poset file, since an `order` line only holds a path.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let join = |v: &[i64]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        match self {
            LatticePolytope::Order(p) => return p.to_text(),
            LatticePolytope::Simplex(s) => {
                let _ = writeln!(out, "simplex {}", s.dim());
                for v in s.vertices() {
                    let _ = writeln!(out, "{}", join(v));
                }
            }
            LatticePolytope::HRep(h) => {
                let _ = writeln!(out, "hrep {} {}", h.dim(), h.inequalities().len());
                for (a, b) in h.inequalities() {
                    let _ = writeln!(out, "{} {b}", join(a));
                }
                let bx: Vec<String> = h
                    .bounds()
                    .iter()
                    .flat_map(|(lo, hi)| [lo.floor().to_integer().to_string(), hi.ceil().to_integer().to_string()])
                    .collect();
                let _ = writeln!(out, "box {}", bx.join(" "));
            }
        }
        out
    }

    /// Reads a polytope file; `order` lines resolve relative to the file.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text, path.parent())
    }

    /// Parses `simplex <d>` + `d+1` vertex lines, `hrep <d> <k>` + `k` lines
    /// `a_1 .. a_d b` + optional `box l_1 u_1 .. l_d u_d`, `order <path>`, or an
    /// inline poset file.
    pub fn parse(text: &str, base_dir: Option<&Path>) -> Result<Self> {
        let lines: Vec<(usize, Vec<&str>)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
            .filter(|(_, f)| !f.is_empty() && !f[0].starts_with('c') && !f[0].starts_with('#'))
            .collect();
        let Some((first_line, header)) = lines.first() else {
            return Err(Error::parse(1, "empty polytope file"));
        };
        let ints = |line: usize, fields: &[&str]| -> Result<Vec<i64>> {
            fields
                .iter()
                .map(|s| s.parse::<i64>().map_err(|_| Error::parse(line, format!("expected an integer, found `{s}`"))))
                .collect()
        };
        let usize_at = |idx: usize| -> Result<usize> {
            header
                .get(idx)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::parse(*first_line, "malformed header"))
        };
        match header[0] {
            "p" => Ok(LatticePolytope::Order(Poset::parse(text)?)),
            "order" => {
                let rel = header.get(1).ok_or_else(|| Error::parse(*first_line, "`order` needs a poset file path"))?;
                let path = base_dir.map_or_else(|| Path::new(rel).to_path_buf(), |b| b.join(rel));
                let text = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                Ok(LatticePolytope::Order(Poset::parse(&text)?))
            }
            "simplex" => {
                let d = usize_at(1)?;
                let body = &lines[1..];
                if body.len() != d + 1 {
                    return Err(Error::parse(*first_line, format!("expected {} vertex lines, found {}", d + 1, body.len())));
                }
                let vertices = body.iter().map(|(l, f)| ints(*l, f)).collect::<Result<Vec<_>>>()?;
                Self::simplex(vertices)
            }
            "hrep" => {
                let d = usize_at(1)?;
                let k = usize_at(2)?;
                let mut body = &lines[1..];
                let mut bounds = None;
                if let Some((l, f)) = body.last() {
                    if f[0] == "box" {
                        let vals = ints(*l, &f[1..])?;
                        if vals.len() != 2 * d {
                            return Err(Error::parse(*l, format!("box needs {} integers", 2 * d)));
                        }
                        bounds = Some(vals.chunks(2).map(|c| (c[0], c[1])).collect());
                        body = &body[..body.len() - 1];
                    }
                }
                if body.len() != k {
                    return Err(Error::parse(*first_line, format!("expected {k} inequality lines, found {}", body.len())));
                }
                let ineqs = body
                    .iter()
                    .map(|(l, f)| {
                        let v = ints(*l, f)?;
                        if v.len() != d + 1 {
                            return Err(Error::parse(*l, format!("inequality needs {} integers", d + 1)));
                        }
                        Ok((v[..d].to_vec(), v[d]))
                    })
                    .collect::<Result<Vec<_>>>()?;
                HRep::new(d, ineqs, bounds).map(LatticePolytope::HRep)
            }
            other => Err(Error::parse(*first_line, format!("unknown polytope kind `{other}`"))),
        }
    }
}

/// Numerator of the interior series via reciprocity: `z^(d+1) h*(1/z)`.
pub fn open_numerator(hstar: &IntPolynomial, d: usize) -> Result<IntPolynomial> {
    if let Some(degree) = hstar.degree() {
        if degree > d {
            return Err(Error::DegreeTooLarge { degree, bound: d });
        }
    }
    reverse(hstar, d + 1)
}

/// `d!` times the leading coefficient of `L`.
pub fn normalized_volume(ehrhart: &RatPolynomial, d: usize) -> BigRational {
    let fact: BigInt = (1..=d as u64).map(BigInt::from).product();
    ehrhart.leading_coefficient().cloned().unwrap_or_else(BigRational::zero) * BigRational::from_integer(fact)
}
