//! Simple labeled graphs, acyclic orientations and chromatic polynomials.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::budget::{saturating_pow, Budget};
use crate::error::{Error, Result};
use crate::polynomial::{IntPolynomial, RatPolynomial};
use crate::poset::{parse_header_and_pairs, Poset};

/// Simple undirected graph on vertices `1..=d` (`d <= 64`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    size: usize,
    /// Edges `(i, j)` with `i < j`, sorted lexicographically.
    edges: Vec<(usize, usize)>,
}

/// An orientation given by the set of flipped edges. Bit `k` refers to the
/// `k`-th edge of the host graph in lexicographic order; an edge `{i, j}`
/// with `i < j` points `i -> j` unless flipped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    pub flipped: u64,
}

impl Orientation {
    pub fn is_flipped(&self, edge_index: usize) -> bool {
        self.flipped & (1 << edge_index) != 0
    }
}

impl Graph {
    pub fn new(size: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if size > 64 {
            return Err(Error::TooManyElements(size));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for &(i, j) in edges {
            for v in [i, j] {
                if v == 0 || v > size {
                    return Err(Error::OutOfRange { index: v, size });
                }
            }
            if i == j {
                return Err(Error::Loop(i));
            }
            normalized.push((i.min(j), i.max(j)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Graph {
            size,
            edges: normalized,
        })
    }

    pub fn complete(size: usize) -> Self {
        let edges: Vec<_> = (1..=size)
            .flat_map(|i| (i + 1..=size).map(move |j| (i, j)))
            .collect();
        Self::new(size, &edges).expect("complete graph is simple")
    }

    pub fn path(size: usize) -> Self {
        let edges: Vec<_> = (1..size).map(|i| (i, i + 1)).collect();
        Self::new(size, &edges).expect("path is simple")
    }

    pub fn cycle(size: usize) -> Self {
        let mut edges: Vec<_> = (1..size).map(|i| (i, i + 1)).collect();
        if size >= 3 {
            edges.push((1, size));
        }
        Self::new(size, &edges).expect("cycle is simple")
    }

    pub fn edgeless(size: usize) -> Self {
        Graph {
            size,
            edges: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.size];
        for &(i, j) in &self.edges {
            adj[i - 1] |= 1 << (j - 1);
            adj[j - 1] |= 1 << (i - 1);
        }
        adj
    }

    /// Arcs `(tail, head)` of an orientation, 1-indexed.
    pub fn arcs(&self, orientation: Orientation) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .enumerate()
            .map(|(k, &(i, j))| if orientation.is_flipped(k) { (j, i) } else { (i, j) })
            .collect()
    }

    /// Every acyclic orientation exactly once, by backtracking over edges in
    /// lexicographic order with cycle pruning. Forward before flipped, so the
    /// first orientation yielded is the empty flip set.
    ///
    /// # Panics
    /// If the graph has more than 64 edges.
    pub fn acyclic_orientations(&self) -> AcyclicOrientations<'_> {
        assert!(self.edges.len() <= 64, "orientation masks hold at most 64 edges");
        AcyclicOrientations {
            graph: self,
            succ: vec![0; self.size],
            dirs: Vec::with_capacity(self.edges.len()),
            pending: 0,
            done: false,
        }
    }

    /// The poset on the vertices given by reachability under `orientation`.
    pub fn orientation_poset(&self, orientation: Orientation) -> Result<Poset> {
        Poset::new(self.size, &self.arcs(orientation))
    }

    /// Brute-force count of proper colorings with `n` colors.
    pub fn count_proper_colorings(&self, n: u64, budget: &Budget) -> Result<u64> {
        if self.size == 0 {
            return Ok(1);
        }
        budget.charge("proper coloring enumeration", saturating_pow(n, self.size))?;
        let adj = self.adjacency();
        let mut colors = vec![0u64; self.size];
        Ok(count_colorings_from(&adj, 0, &mut colors, n))
    }

    /// Chromatic polynomial by deletion-contraction on the lexicographically
    /// first edge, without memoization.
    pub fn chromatic_polynomial(&self) -> RatPolynomial {
        self.chromatic_polynomial_with(false).to_rational()
    }

    /// Deletion-contraction with optional memoization on the (labeled)
    /// remaining edge structure. Returns integer coefficients.
    pub fn chromatic_polynomial_with(&self, memoize: bool) -> IntPolynomial {
        let adj = self.adjacency();
        let alive = if self.size == 64 { u64::MAX } else { (1u64 << self.size) - 1 };
        let mut memo = memoize.then(HashMap::new);
        deletion_contraction(adj, alive, &mut memo)
    }

    /// `sum over acyclic orientations` of the strict order polynomial of the
    /// induced poset.
    pub fn chromatic_via_orientations(&self, budget: &Budget) -> Result<RatPolynomial> {
        let mut total = RatPolynomial::zero();
        for o in self.acyclic_orientations() {
            let poset = self.orientation_poset(o)?;
            total = &total + &poset.order_polynomial(true, budget)?;
        }
        Ok(total)
    }

    /// `p <d> <m>` then `e i j` per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("p {} {}\n", self.size, self.edges.len());
        for (i, j) in &self.edges {
            let _ = writeln!(out, "e {i} {j}");
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (size, pairs) = parse_header_and_pairs(text, 'e')?;
        Self::new(size, &pairs)
    }
}

fn count_colorings_from(adj: &[u64], v: usize, colors: &mut [u64], n: u64) -> u64 {
    let earlier = adj[v] & ((1u64 << v) - 1);
    let mut total = 0;
    for c in 0..n {
        let clash = (0..v).any(|u| earlier & (1 << u) != 0 && colors[u] == c);
        if clash {
            continue;
        }
        if v + 1 == adj.len() {
            total += 1;
        } else {
            colors[v] = c;
            total += count_colorings_from(adj, v + 1, colors, n);
        }
    }
    total
}

type Memo = HashMap<(u64, Vec<u64>), IntPolynomial>;

// `adj` is indexed by original vertex; only vertices in `alive` matter.
fn deletion_contraction(mut adj: Vec<u64>, alive: u64, memo: &mut Option<Memo>) -> IntPolynomial {
    let k = alive.count_ones() as usize;
    let first = (0..adj.len()).find(|&u| alive & (1 << u) != 0 && adj[u] != 0);
    let Some(u) = first else {
        return IntPolynomial::monomial(1, k);
    };
    let edge_count: u32 = (0..adj.len())
        .filter(|&x| alive & (1 << x) != 0)
        .map(|x| adj[x].count_ones())
        .sum::<u32>()
        / 2;
    if edge_count as usize == k * (k - 1) / 2 {
        return falling_factorial(k);
    }
    let key = memo.as_ref().map(|_| (alive, adj.clone()));
    if let (Some(m), Some(key)) = (memo.as_ref(), key.as_ref()) {
        if let Some(hit) = m.get(key) {
            return hit.clone();
        }
    }
    let v = adj[u].trailing_zeros() as usize;

    // contraction: merge v into u, dropping parallel edges and the loop
    let mut merged = adj.clone();
    let nbrs_v = merged[v] & !(1 << u);
    merged[u] = (merged[u] | nbrs_v) & !(1 << v);
    for (w, m) in merged.iter_mut().enumerate() {
        if nbrs_v & (1 << w) != 0 {
            *m = (*m & !(1 << v)) | (1 << u);
        }
    }
    merged[v] = 0;
    let contracted = deletion_contraction(merged, alive & !(1 << v), memo);

    adj[u] &= !(1 << v);
    adj[v] &= !(1 << u);
    let deleted = deletion_contraction(adj, alive, memo);

    let result = &deleted - &contracted;
    if let (Some(m), Some(key)) = (memo.as_mut(), key) {
        m.insert(key, result.clone());
    }
    result
}

/// `n (n-1) ... (n-k+1)`.
fn falling_factorial(k: usize) -> IntPolynomial {
    (0..k as i64).fold(IntPolynomial::one(), |acc, i| {
        &acc * &IntPolynomial::from_i64s(&[-i, 1])
    })
}

/// Iterator over acyclic orientations; see [`Graph::acyclic_orientations`].
pub struct AcyclicOrientations<'g> {
    graph: &'g Graph,
    /// directed successor sets of the arcs chosen so far
    succ: Vec<u64>,
    /// chosen direction per assigned edge: 0 forward, 1 flipped
    dirs: Vec<u8>,
    /// next direction to try for edge `dirs.len()`
    pending: u8,
    done: bool,
}

impl AcyclicOrientations<'_> {
    fn arc(&self, k: usize, dir: u8) -> (usize, usize) {
        let (i, j) = self.graph.edges[k];
        if dir == 0 {
            (i - 1, j - 1)
        } else {
            (j - 1, i - 1)
        }
    }

    fn reaches(&self, from: usize, to: usize) -> bool {
        let mut seen = 1u64 << from;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let x = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.succ[x];
            }
            if next & (1 << to) != 0 {
                return true;
            }
            frontier = next & !seen;
            seen |= next;
        }
        false
    }

    fn backtrack(&mut self) {
        match self.dirs.pop() {
            None => self.done = true,
            Some(dir) => {
                let (t, h) = self.arc(self.dirs.len(), dir);
                self.succ[t] &= !(1 << h);
                self.pending = dir + 1;
            }
        }
    }
}

impl Iterator for AcyclicOrientations<'_> {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        while !self.done {
            let k = self.dirs.len();
            if k == self.graph.edges.len() {
                let flipped = self
                    .dirs
                    .iter()
                    .enumerate()
                    .fold(0u64, |m, (i, &d)| m | (u64::from(d) << i));
                self.backtrack();
                return Some(Orientation { flipped });
            }
            if self.pending > 1 {
                self.backtrack();
                continue;
            }
            let dir = self.pending;
            let (t, h) = self.arc(k, dir);
            if self.reaches(h, t) {
                self.pending += 1;
                continue;
            }
            self.succ[t] |= 1 << h;
            self.dirs.push(dir);
            self.pending = 0;
        }
        None
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(d={}, edges={:?})", self.size, self.edges)
    }
}

/// Number of acyclic orientations predicted by `(-1)^d chi(-1)`.
pub fn acyclic_count_from_chromatic(chi: &RatPolynomial, d: usize) -> BigInt {
    let v = chi.eval(&BigRational::from_integer((-1).into()));
    let v = v.to_integer();
    if d.is_multiple_of(2) {
        v
    } else {
        -v
    }
}
