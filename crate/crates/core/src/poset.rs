//! Finite labeled posets on elements `1..=d` (`d <= 64`).
//!
//! The strict order is stored as its transitive closure, one bitset per
//! element. Elements are 1-indexed in the public API and in the text format;
//! bit `i` of a mask refers to element `i + 1`.

use std::collections::HashSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::budget::{saturating_pow, Budget};
use crate::error::{Error, Result};
use crate::polynomial::{interpolate, IntPolynomial, RatPolynomial};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    size: usize,
    /// `above[i]` has bit `j` set iff element `i+1 < j+1`.
    above: Vec<u64>,
    /// `below[j]` has bit `i` set iff element `i+1 < j+1`.
    below: Vec<u64>,
}

#[inline]
fn bit(i: usize) -> u64 {
    1u64 << i
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

impl Poset {
    /// Builds the poset generated by `relations` (1-indexed pairs `i < j`),
    /// taking the transitive closure. Cyclic input is rejected with one cycle.
    pub fn new(size: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if size > 64 {
            return Err(Error::TooManyElements(size));
        }
        let mut succ = vec![0u64; size];
        for &(i, j) in relations {
            for v in [i, j] {
                if v == 0 || v > size {
                    return Err(Error::OutOfRange { index: v, size });
                }
            }
            if i == j {
                return Err(Error::Cycle(vec![i, i]));
            }
            succ[i - 1] |= bit(j - 1);
        }
        let mut above = succ.clone();
        // Warshall over bitsets
        for k in 0..size {
            for i in 0..size {
                if above[i] & bit(k) != 0 {
                    above[i] |= above[k];
                }
            }
        }
        if let Some(i) = (0..size).find(|&i| above[i] & bit(i) != 0) {
            return Err(Error::Cycle(find_cycle(&succ, &above, i)));
        }
        Ok(Self::from_closure(above))
    }

    fn from_closure(above: Vec<u64>) -> Self {
        let size = above.len();
        let mut below = vec![0u64; size];
        for (i, &up) in above.iter().enumerate() {
            for j in bits(up) {
                below[j] |= bit(i);
            }
        }
        Poset { size, above, below }
    }

    pub fn chain(size: usize) -> Self {
        let rel: Vec<_> = (1..size).map(|i| (i, i + 1)).collect();
        Self::new(size, &rel).expect("chains are acyclic")
    }

    pub fn antichain(size: usize) -> Self {
        Self::new(size, &[]).expect("antichains are acyclic")
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// `i < j` in the poset (1-indexed).
    pub fn is_less(&self, i: usize, j: usize) -> bool {
        self.above[i - 1] & bit(j - 1) != 0
    }

    /// Mask of elements strictly below element `i` (0-indexed bits).
    pub fn below_mask(&self, i: usize) -> u64 {
        self.below[i - 1]
    }

    pub fn above_mask(&self, i: usize) -> u64 {
        self.above[i - 1]
    }

    /// All strict relations `(i, j)` with `i < j`, lexicographic.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.size)
            .flat_map(|i| bits(self.above[i]).map(move |j| (i + 1, j + 1)))
            .collect()
    }

    /// Cover relations: `i < j` with nothing strictly between.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        (0..self.size)
            .flat_map(|i| {
                bits(self.above[i])
                    .filter(move |&j| self.above[i] & self.below[j] == 0)
                    .map(move |j| (i + 1, j + 1))
            })
            .collect()
    }

    /// Number of elements in a longest chain.
    pub fn longest_chain(&self) -> usize {
        let order = self.natural_order();
        let mut height = vec![0usize; self.size];
        for &e in &order {
            height[e] = 1 + bits(self.below[e]).map(|p| height[p]).max().unwrap_or(0);
        }
        height.into_iter().max().unwrap_or(0)
    }

    fn minimal_available(&self, placed: u64) -> u64 {
        let all = if self.size == 64 { u64::MAX } else { bit(self.size) - 1 };
        let mut out = 0;
        for e in bits(all & !placed) {
            if self.below[e] & !placed == 0 {
                out |= bit(e);
            }
        }
        out
    }

    /// Lexicographically first linear extension (0-indexed elements).
    fn natural_order(&self) -> Vec<usize> {
        let mut placed = 0u64;
        let mut order = Vec::with_capacity(self.size);
        for _ in 0..self.size {
            let e = self.minimal_available(placed).trailing_zeros() as usize;
            placed |= bit(e);
            order.push(e);
        }
        order
    }

    /// `labels[e-1]` is the position (1-based) of element `e` in the
    /// lexicographically first linear extension.
    pub fn natural_labeling(&self) -> Vec<usize> {
        let mut labels = vec![0; self.size];
        for (pos, e) in self.natural_order().into_iter().enumerate() {
            labels[e] = pos + 1;
        }
        labels
    }

    /// All linear extensions, each as the sequence of elements in increasing
    /// position, in lexicographic order of original labels.
    pub fn linear_extensions(&self) -> LinearExtensions<'_> {
        LinearExtensions {
            poset: self,
            seq: Vec::with_capacity(self.size),
            placed: 0,
            candidates: vec![self.minimal_available(0)],
            done: false,
        }
    }

    /// `sum_w z^des(w)` over linear extensions `w`, with descents read in the
    /// natural labeling. Equals the h*-polynomial of the order polytope.
    pub fn descent_h_star(&self) -> IntPolynomial {
        let labels = self.natural_labeling();
        let mut counts = vec![0u64; self.size.max(1)];
        for ext in self.linear_extensions() {
            let des = ext
                .windows(2)
                .filter(|w| labels[w[0] - 1] > labels[w[1] - 1])
                .count();
            counts[des] += 1;
        }
        IntPolynomial::new(counts.into_iter().map(BigInt::from).collect())
    }

    /// Number of maps `phi: P -> {1..n}` with `phi(p) <= phi(q)` (or `<` when
    /// `strict`) whenever `p < q`.
    pub fn count_order_maps(&self, n: u64, strict: bool, budget: &Budget) -> Result<u64> {
        if self.size == 0 {
            return Ok(1);
        }
        if n == 0 {
            return Ok(0);
        }
        budget.charge("order-preserving map enumeration", saturating_pow(n, self.size))?;
        let order = self.natural_order();
        let mut values = vec![0u64; self.size];
        Ok(self.count_maps_from(&order, 0, &mut values, n, strict))
    }

    // Assigns elements in a linear-extension order, so every predecessor of
    // `order[k]` already has a value.
    fn count_maps_from(
        &self,
        order: &[usize],
        k: usize,
        values: &mut [u64],
        n: u64,
        strict: bool,
    ) -> u64 {
        let e = order[k];
        let lo = bits(self.below[e])
            .map(|p| values[p] + u64::from(strict))
            .max()
            .unwrap_or(1);
        if lo > n {
            return 0;
        }
        if k + 1 == order.len() {
            return n - lo + 1;
        }
        let mut total = 0;
        for v in lo..=n {
            values[e] = v;
            total += self.count_maps_from(order, k + 1, values, n, strict);
        }
        total
    }

    /// Order polynomial `Omega(n)` (weak) or `Omega°(n)` (strict), by
    /// interpolating brute-force counts at `n = 0..=d`.
    pub fn order_polynomial(&self, strict: bool, budget: &Budget) -> Result<RatPolynomial> {
        let points = (0..=self.size as u64)
            .map(|n| {
                let count = self.count_order_maps(n, strict, budget)?;
                Ok((BigInt::from(n), BigRational::from_integer(count.into())))
            })
            .collect::<Result<Vec<_>>>()?;
        interpolate(&points)
    }

    /// Order ideals (down-closed subsets) as bitmasks, sorted by size then
    /// value, found by breadth-first search from the empty ideal.
    pub fn order_ideals(&self, budget: &Budget) -> Result<Vec<u64>> {
        let mut seen = HashSet::from([0u64]);
        let mut frontier = vec![0u64];
        let mut ideals = vec![0u64];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &ideal in &frontier {
                for e in bits(self.minimal_available(ideal)) {
                    let grown = ideal | bit(e);
                    if seen.insert(grown) {
                        if seen.len() > budget.max_ideals {
                            return Err(Error::BudgetExceeded {
                                what: "order-ideal lattice",
                                needed: seen.len() as u128,
                                budget: budget.max_ideals as u64,
                            });
                        }
                        next.push(grown);
                    }
                }
            }
            next.sort_unstable();
            ideals.extend_from_slice(&next);
            frontier = next;
        }
        Ok(ideals)
    }

    /// `f_T(z) = sum_i f_{i-1} z^i` where `f_{i-1}` counts `i`-element chains
    /// in the lattice of order ideals. These chains are the faces of the
    /// canonical unimodular triangulation of the order polytope.
    pub fn ideal_chain_f_vector(&self, budget: &Budget) -> Result<IntPolynomial> {
        let ideals = self.order_ideals(budget)?;
        let max_len = self.size + 1;
        // ending[k][c] = chains of c+1 ideals whose top is ideals[k]
        let mut ending: Vec<Vec<BigInt>> = Vec::with_capacity(ideals.len());
        let mut totals = vec![BigInt::from(0); max_len + 1];
        totals[0] = BigInt::from(1);
        for (k, &top) in ideals.iter().enumerate() {
            let mut row = vec![BigInt::from(0); max_len];
            row[0] = BigInt::from(1);
            for (j, &lower) in ideals[..k].iter().enumerate() {
                if lower & !top == 0 && lower != top {
                    for c in 1..max_len {
                        if ending[j][c - 1] != BigInt::from(0) {
                            row[c] += &ending[j][c - 1];
                        }
                    }
                }
            }
            for (c, count) in row.iter().enumerate() {
                totals[c + 1] += count;
            }
            ending.push(row);
        }
        Ok(IntPolynomial::new(totals))
    }

    /// Text serialization: `p <d> <k>` then `r i j` per cover relation.
    pub fn to_text(&self) -> String {
        let covers = self.cover_relations();
        let mut out = format!("p {} {}\n", self.size, covers.len());
        for (i, j) in covers {
            let _ = writeln!(out, "r {i} {j}");
        }
        out
    }

    /// Parses `p <d> <k>` followed by `k` lines `r i j`. Lines starting with
    /// `c` and blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let (size, pairs) = parse_header_and_pairs(text, 'r')?;
        Self::new(size, &pairs)
    }
}

/// Shared parser for the poset (`r`) and graph (`e`) formats.
pub(crate) fn parse_header_and_pairs(text: &str, tag: char) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(line_no, format!("expected a nonnegative integer, found `{s}`")))
        };
        match (fields[0], header) {
            ("p", None) => {
                if fields.len() != 3 {
                    return Err(Error::parse(line_no, "header must be `p <d> <k>`"));
                }
                header = Some((num(fields[1])?, num(fields[2])?));
            }
            ("p", Some(_)) => return Err(Error::parse(line_no, "duplicate header")),
            (t, Some(_)) if t.len() == 1 && t.starts_with(tag) => {
                if fields.len() != 3 {
                    return Err(Error::parse(line_no, format!("expected `{tag} i j`")));
                }
                pairs.push((num(fields[1])?, num(fields[2])?));
            }
            (_, None) => return Err(Error::parse(line_no, "missing `p` header")),
            (t, _) => return Err(Error::parse(line_no, format!("unexpected record `{t}`"))),
        }
    }
    let (size, count) = header.ok_or_else(|| Error::parse(1, "missing `p` header"))?;
    if pairs.len() != count {
        return Err(Error::parse(
            text.lines().count(),
            format!("header announces {count} lines, found {}", pairs.len()),
        ));
    }
    Ok((size, pairs))
}

// A cycle through `start`, reconstructed by walking successor edges that stay
// inside the strongly connected set of `start`.
fn find_cycle(succ: &[u64], closure: &[u64], start: usize) -> Vec<usize> {
    let mut path = vec![start];
    let mut current = start;
    let mut visited = bit(start);
    loop {
        // prefer closing the cycle directly
        if succ[current] & bit(start) != 0 {
            path.push(start);
            return path.into_iter().map(|v| v + 1).collect();
        }
        let next = bits(succ[current])
            .find(|&n| visited & bit(n) == 0 && closure[n] & bit(start) != 0)
            .expect("a vertex on a cycle has a successor on the same cycle");
        visited |= bit(next);
        path.push(next);
        current = next;
    }
}

/// Iterator over linear extensions; see [`Poset::linear_extensions`].
pub struct LinearExtensions<'a> {
    poset: &'a Poset,
    seq: Vec<usize>,
    placed: u64,
    // candidates.len() == seq.len() + 1 between calls
    candidates: Vec<u64>,
    done: bool,
}

impl LinearExtensions<'_> {
    fn retreat(&mut self) {
        self.candidates.pop();
        match self.seq.pop() {
            Some(e) => self.placed &= !bit(e),
            None => self.done = true,
        }
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        while !self.done {
            let depth = self.seq.len();
            if depth == self.poset.size {
                let out = self.seq.iter().map(|e| e + 1).collect();
                self.retreat();
                return Some(out);
            }
            let cands = self.candidates[depth];
            if cands == 0 {
                self.retreat();
                continue;
            }
            let e = cands.trailing_zeros() as usize;
            self.candidates[depth] &= !bit(e);
            self.seq.push(e);
            self.placed |= bit(e);
            let avail = self.poset.minimal_available(self.placed);
            self.candidates.push(avail);
        }
        None
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset(d={}, covers={:?})", self.size, self.cover_relations())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn budget() -> Budget {
        Budget::default()
    }

    fn v_poset() -> Poset {
        Poset::new(3, &[(1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn closure_and_covers() {
        let p = Poset::new(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(p.is_less(1, 3));
        assert_eq!(p.relations(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(p.cover_relations(), vec![(1, 2), (2, 3)]);
        // redundant input relation does not change covers
        let q = Poset::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn cycles_rejected_with_witness() {
        let err = Poset::new(4, &[(1, 2), (2, 3), (3, 1), (3, 4)]).unwrap_err();
        let Error::Cycle(cycle) = err else { panic!("expected cycle") };
        assert_eq!(cycle.first(), cycle.last());
        assert_eq!(cycle.len(), 4);
        assert!(matches!(Poset::new(2, &[(1, 1)]), Err(Error::Cycle(_))));
        assert!(matches!(Poset::new(2, &[(1, 3)]), Err(Error::OutOfRange { .. })));
        assert!(matches!(Poset::new(65, &[]), Err(Error::TooManyElements(65))));
    }

    #[test]
    fn linear_extension_examples() {
        assert_eq!(Poset::chain(3).linear_extensions().collect::<Vec<_>>(), vec![vec![1, 2, 3]]);
        assert_eq!(Poset::antichain(3).linear_extensions().count(), 6);
        assert_eq!(
            v_poset().linear_extensions().collect::<Vec<_>>(),
            vec![vec![1, 2, 3], vec![1, 3, 2]]
        );
        assert_eq!(Poset::antichain(0).linear_extensions().collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn linear_extensions_lexicographic() {
        let exts: Vec<_> = Poset::antichain(3).linear_extensions().collect();
        let mut sorted = exts.clone();
        sorted.sort();
        assert_eq!(exts, sorted);
    }

    #[test]
    fn descent_examples() {
        assert_eq!(Poset::chain(4).descent_h_star(), IntPolynomial::one());
        assert_eq!(Poset::antichain(2).descent_h_star(), IntPolynomial::from_i64s(&[1, 1]));
        assert_eq!(Poset::antichain(3).descent_h_star(), IntPolynomial::from_i64s(&[1, 4, 1]));
        assert_eq!(Poset::antichain(0).descent_h_star(), IntPolynomial::one());
    }

    #[test]
    fn natural_labeling_reversed_chain() {
        let p = Poset::new(3, &[(3, 2), (2, 1)]).unwrap();
        assert_eq!(p.natural_labeling(), vec![3, 2, 1]);
        assert_eq!(p.descent_h_star(), IntPolynomial::one());
    }

    #[test]
    fn order_map_examples() {
        let c2 = Poset::chain(2);
        assert_eq!(c2.count_order_maps(2, false, &budget()).unwrap(), 3);
        assert_eq!(c2.count_order_maps(2, true, &budget()).unwrap(), 1);
        assert_eq!(Poset::antichain(3).count_order_maps(2, false, &budget()).unwrap(), 8);
        assert_eq!(c2.count_order_maps(0, false, &budget()).unwrap(), 0);
        assert_eq!(Poset::antichain(0).count_order_maps(0, true, &budget()).unwrap(), 1);
    }

    #[test]
    fn order_map_budget() {
        let tight = Budget::with_max_work(10);
        assert!(Poset::antichain(3).count_order_maps(3, false, &tight).unwrap_err().is_budget());
    }

    #[test]
    fn order_polynomial_examples() {
        let c2 = Poset::chain(2);
        assert_eq!(
            c2.order_polynomial(false, &budget()).unwrap(),
            RatPolynomial::from_fractions(&[(0, 1), (1, 2), (1, 2)])
        );
        assert_eq!(
            c2.order_polynomial(true, &budget()).unwrap(),
            RatPolynomial::from_fractions(&[(0, 1), (-1, 2), (1, 2)])
        );
        for strict in [false, true] {
            assert_eq!(
                Poset::antichain(3).order_polynomial(strict, &budget()).unwrap(),
                RatPolynomial::from_i64s(&[0, 0, 0, 1])
            );
        }
    }

    #[test]
    fn ideal_chain_examples() {
        assert_eq!(
            Poset::chain(2).ideal_chain_f_vector(&budget()).unwrap(),
            IntPolynomial::from_i64s(&[1, 3, 3, 1])
        );
        assert_eq!(
            Poset::antichain(2).ideal_chain_f_vector(&budget()).unwrap(),
            IntPolynomial::from_i64s(&[1, 4, 5, 2])
        );
        assert_eq!(
            Poset::antichain(1).ideal_chain_f_vector(&budget()).unwrap(),
            IntPolynomial::from_i64s(&[1, 2, 1])
        );
    }

    #[test]
    fn ideal_budget() {
        let tight = Budget { max_work: 1000, max_ideals: 5 };
        assert!(Poset::antichain(3).order_ideals(&tight).unwrap_err().is_budget());
        assert_eq!(Poset::antichain(3).order_ideals(&budget()).unwrap().len(), 8);
    }

    #[test]
    fn longest_chain_lengths() {
        assert_eq!(Poset::chain(4).longest_chain(), 4);
        assert_eq!(Poset::antichain(4).longest_chain(), 1);
        assert_eq!(v_poset().longest_chain(), 2);
        assert_eq!(Poset::antichain(0).longest_chain(), 0);
    }

    #[test]
    fn text_round_trip() {
        let p = Poset::new(4, &[(1, 2), (2, 3), (1, 4)]).unwrap();
        let text = p.to_text();
        assert_eq!(text, "p 4 3\nr 1 2\nr 1 4\nr 2 3\n");
        assert_eq!(Poset::parse(&text).unwrap(), p);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Poset::parse("r 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Poset::parse("p 2 2\nr 1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(Poset::parse("p 2 1\nr 1 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Poset::parse("p 2 2\nr 1 2\nr 2 1\n"), Err(Error::Cycle(_))));
        assert_eq!(Poset::parse("c comment\n\np 2 0\n").unwrap(), Poset::antichain(2));
    }
}
