//! Corpus generation and batch verification.
//!
//! Every check recomputes its claim from two independent routes (closed-form
//! decompositions against brute-force lattice-point counts, or three separate
//! h* computations) and records the polynomials involved, so a failing
//! record is reproducible from its own contents.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::decomp::{
    ab_decompose, conjectured_split, graph_decomposition, graph_numerator, inequality_report,
    open_decomposition, order_decomposition, stapledon_pair, InequalityMode,
};
use crate::ehrhart::{open_numerator, LatticePolytope};
use crate::error::{Error, Result};
use crate::graph::{acyclic_count_from_chromatic, Graph};
use crate::polynomial::{expand_series, f_to_h, series_numerator, IntPolynomial};
use crate::poset::Poset;

/// Largest size accepted by the exhaustive enumerators unless overridden.
pub const DEFAULT_MAX_SIZE: usize = 5;

/// Every partial order on `1..=d`, each exactly once.
///
/// Posets on `k` elements are grown from posets on `k - 1` elements by adding
/// element `k` below a down-set `D` and above an up-set `U` with every element
/// of `D` below every element of `U`.
pub fn enumerate_labeled_posets(d: usize, max_size: usize) -> Result<impl Iterator<Item = Poset>> {
    if d > max_size {
        return Err(Error::BudgetExceeded {
            what: "labeled posets",
            needed: d as u128,
            budget: max_size as u64,
        });
    }
    // Each level holds strict-order successor masks.
    let mut level: Vec<Vec<u64>> = vec![Vec::new()];
    for k in 0..d {
        let mut next = Vec::new();
        for above in &level {
            let full = (1u64 << k) - 1;
            let below_of = |i: usize| (0..k).filter(|&j| above[j] & (1 << i) != 0).fold(0u64, |m, j| m | 1 << j);
            let is_down_set = |s: u64| (0..k).all(|i| s & (1 << i) == 0 || below_of(i) & !s == 0);
            let is_up_set = |s: u64| (0..k).all(|i| s & (1 << i) == 0 || above[i] & !s == 0);
            let downs: Vec<u64> = (0..=full).filter(|&s| is_down_set(s)).collect();
            let ups: Vec<u64> = (0..=full).filter(|&s| is_up_set(s)).collect();
            for &down in &downs {
                for &up in &ups {
                    if down & up != 0 {
                        continue;
                    }
                    let compatible = (0..k).all(|i| down & (1 << i) == 0 || above[i] & up == up);
                    if !compatible {
                        continue;
                    }
                    let mut succ = above.clone();
                    for (i, s) in succ.iter_mut().enumerate() {
                        if down & (1 << i) != 0 {
                            *s |= 1 << k;
                        }
                    }
                    succ.push(up);
                    next.push(succ);
                }
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(move |succ| {
        let relations: Vec<(usize, usize)> = succ
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| (0..d).filter(move |&j| m & (1 << j) != 0).map(move |j| (i + 1, j + 1)))
            .collect();
        Poset::new(d, &relations).expect("grown relation is a strict order")
    }))
}

/// All `2^(d choose 2)` labeled simple graphs on `1..=d`.
pub fn enumerate_labeled_graphs(d: usize, max_size: usize) -> Result<impl Iterator<Item = Graph>> {
    if d > max_size {
        return Err(Error::BudgetExceeded {
            what: "labeled graphs",
            needed: d as u128,
            budget: max_size as u64,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..=d).flat_map(|i| (i + 1..=d).map(move |j| (i, j))).collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(d, &edges).expect("distinct pairs form a simple graph")
    }))
}

/// `count` graphs on `d` vertices, each pair an edge with probability 1/2.
pub fn random_graphs(d: usize, count: usize, seed: u64) -> impl Iterator<Item = Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(move |_| {
        let mut edges = Vec::new();
        for i in 1..=d {
            for j in i + 1..=d {
                if rng.gen_bool(0.5) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(d, &edges).expect("distinct pairs form a simple graph")
    })
}

/// `count` posets on `d` elements: each pair `i < j` is related with
/// probability `prob`, then the transitive closure is taken.
pub fn random_posets(d: usize, count: usize, seed: u64, prob: f64) -> impl Iterator<Item = Poset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(move |_| {
        let mut rel = Vec::new();
        for i in 1..=d {
            for j in i + 1..=d {
                if rng.gen_bool(prob) {
                    rel.push((i, j));
                }
            }
        }
        Poset::new(d, &rel).expect("relations oriented by label are acyclic")
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InstanceKind {
    Poset,
    Graph,
    Polytope,
}

impl InstanceKind {
    pub fn name(self) -> &'static str {
        match self {
            InstanceKind::Poset => "poset",
            InstanceKind::Graph => "graph",
            InstanceKind::Polytope => "polytope",
        }
    }
}

/// Seeded random posets or graphs as harness instances.
pub fn random_instances(kind: InstanceKind, d: usize, count: usize, seed: u64, poset_prob: f64) -> Vec<Instance> {
    match kind {
        InstanceKind::Graph => random_graphs(d, count, seed).map(Instance::Graph).collect(),
        _ => random_posets(d, count, seed, poset_prob).map(Instance::Poset).collect(),
    }
}

#[derive(Clone, Debug)]
pub enum Instance {
    Poset(Poset),
    Graph(Graph),
    Polytope { label: String, polytope: LatticePolytope },
}

impl Instance {
    pub fn kind(&self) -> InstanceKind {
        match self {
            Instance::Poset(_) => InstanceKind::Poset,
            Instance::Graph(_) => InstanceKind::Graph,
            Instance::Polytope { .. } => InstanceKind::Polytope,
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Instance::Poset(p) => p.to_text(),
            Instance::Graph(g) => g.to_text(),
            Instance::Polytope { polytope, .. } => polytope.to_text(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Instance::Poset(p) => p.len(),
            Instance::Graph(g) => g.len(),
            Instance::Polytope { polytope, .. } => polytope.dim(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// h* from counts, from descents, and from the ideal-chain f-vector agree.
    HStar3Way,
    /// Interior counts match the open series; `Ω°(n) = (-1)^d Ω(-n)`.
    Reciprocity,
    /// Stapledon pair is nonnegative; `h* = a* - z a*_1`.
    Stapledon,
    /// `h_P = a_P - b_P` with both parts nonnegative.
    OpenSplit,
    /// `h_Pi = a_Pi + z b_Pi` with `-a_Pi, b_Pi >= 0`.
    OrderSplit,
    /// `z h_G = a + z b` with `-a, b >= 0`.
    GraphSplit,
    /// Degree, leading coefficient and partial-sum inequalities of `h_G`.
    GraphInequalities,
    /// Deletion–contraction, orientation sum and brute-force colorings agree.
    Chromatic3Way,
    /// `h_G = a + z b` with `-a, b >= 0`.
    Conj61,
    /// `h_Pi / z = a + z b` with `-a, b >= 0`.
    Conj62,
    /// Strengthened partial-sum inequalities of `h_G`.
    Conj64,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::HStar3Way,
        Check::Reciprocity,
        Check::Stapledon,
        Check::OpenSplit,
        Check::OrderSplit,
        Check::GraphSplit,
        Check::GraphInequalities,
        Check::Chromatic3Way,
        Check::Conj61,
        Check::Conj62,
        Check::Conj64,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::HStar3Way => "hstar3way",
            Check::Reciprocity => "reciprocity",
            Check::Stapledon => "thm3.6",
            Check::OpenSplit => "thm1.1",
            Check::OrderSplit => "thm1.2",
            Check::GraphSplit => "thm1.3",
            Check::GraphInequalities => "thm1.4",
            Check::Chromatic3Way => "chromatic3way",
            Check::Conj61 => "conj6.1",
            Check::Conj62 => "conj6.2",
            Check::Conj64 => "conj6.4",
        }
    }

    pub fn applies_to(self, kind: InstanceKind) -> bool {
        use Check::*;
        match kind {
            InstanceKind::Poset => matches!(self, HStar3Way | Reciprocity | Stapledon | OpenSplit | OrderSplit | Conj62),
            InstanceKind::Graph => matches!(self, GraphSplit | GraphInequalities | Chromatic3Way | Conj61 | Conj64),
            InstanceKind::Polytope => matches!(self, Reciprocity | Stapledon | OpenSplit),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
                format!("unknown check `{s}` (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Coefficient arrays, ascending degree, as decimal strings.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub witnesses: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub index: usize,
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub input: String,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl VerificationReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub inputs: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub failed_inputs: usize,
}

impl Summary {
    pub fn add(&mut self, report: &VerificationReport) {
        self.inputs += 1;
        for c in &report.checks {
            self.checks += 1;
            match c.status {
                Status::Pass => self.passed += 1,
                Status::Fail => self.failed += 1,
                Status::Skipped => self.skipped += 1,
            }
        }
        if report.failed() {
            self.failed_inputs += 1;
        }
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} inputs, {} failures", self.inputs, self.failed)?;
        if self.skipped > 0 {
            write!(f, ", {} skipped", self.skipped)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
#[derive(Default)]
pub struct HarnessConfig {
    pub budget: Budget,
    /// Remaining checks of an input are skipped once this much time is spent.
    pub time_limit: Option<Duration>,
    /// Negates the leading coefficient of the base polynomial of every input
    /// before checking, to prove that failures are reported.
    pub mutate: bool,
    pub timing: bool,
    /// Attach witnesses to passing checks too.
    pub all_witnesses: bool,
}


/// Runs `checks` on every instance and returns the reports in input order.
pub fn verify_all(instances: &[Instance], checks: &[Check], config: &HarnessConfig) -> (Vec<VerificationReport>, Summary) {
    let mut reports = Vec::with_capacity(instances.len());
    let summary = verify_each(instances, checks, config, |r| reports.push(r));
    (reports, summary)
}

/// Streams reports to `sink` in input order; the work runs in parallel.
pub fn verify_each(
    instances: &[Instance],
    checks: &[Check],
    config: &HarnessConfig,
    mut sink: impl FnMut(VerificationReport),
) -> Summary {
    const CHUNK: usize = 256;
    let mut summary = Summary::default();
    for (c, chunk) in instances.chunks(CHUNK).enumerate() {
        let reports: Vec<_> = chunk
            .par_iter()
            .enumerate()
            .map(|(i, inst)| verify_instance(c * CHUNK + i, inst, checks, config))
            .collect();
        for r in reports {
            summary.add(&r);
            sink(r);
        }
    }
    summary
}

/// Negates the leading coefficient.
pub fn mutate(p: &IntPolynomial) -> IntPolynomial {
    match p.degree() {
        Some(k) => {
            let lead = p.coeff(k);
            p - &IntPolynomial::monomial(&lead + &lead, k)
        }
        None => p.clone(),
    }
}

pub fn verify_instance(index: usize, instance: &Instance, checks: &[Check], config: &HarnessConfig) -> VerificationReport {
    let start = Instant::now();
    let mut ctx = Context::new(instance, config);
    let mut results = Vec::new();
    for &check in checks.iter().filter(|c| c.applies_to(instance.kind())) {
        if config.time_limit.is_some_and(|t| start.elapsed() > t) {
            results.push(CheckResult {
                check: check.name(),
                status: Status::Skipped,
                detail: Some("time limit reached".into()),
                witnesses: BTreeMap::new(),
            });
            continue;
        }
        results.push(ctx.run(check));
    }
    let label = match instance {
        Instance::Polytope { label, .. } => Some(label.clone()),
        _ => None,
    };
    VerificationReport {
        index,
        kind: instance.kind().name(),
        label,
        input: instance.to_text(),
        checks: results,
        elapsed_ms: config.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    }
}

/// What a check found: its verdict, a reason on failure, and the polynomials
/// it compared.
struct Outcome {
    ok: bool,
    reasons: Vec<String>,
    witnesses: Vec<(String, IntPolynomial)>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            ok: true,
            reasons: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    fn require(&mut self, cond: bool, reason: impl FnOnce() -> String) {
        if !cond {
            self.ok = false;
            self.reasons.push(reason());
        }
    }

    fn witness(&mut self, name: &str, p: &IntPolynomial) {
        self.witnesses.push((name.to_string(), p.clone()));
    }
}

/// Per-input cache of the expensive polynomials.
struct Context<'a> {
    instance: &'a Instance,
    config: &'a HarnessConfig,
    base: Option<Result<IntPolynomial>>,
    open_counts: Option<Result<IntPolynomial>>,
    reference_hg: Option<Result<IntPolynomial>>,
}

impl<'a> Context<'a> {
    fn new(instance: &'a Instance, config: &'a HarnessConfig) -> Self {
        Context {
            instance,
            config,
            base: None,
            open_counts: None,
            reference_hg: None,
        }
    }

    fn budget(&self) -> &Budget {
        &self.config.budget
    }

    fn d(&self) -> usize {
        self.instance.dim()
    }

    fn polytope(&self) -> LatticePolytope {
        match self.instance {
            Instance::Poset(p) => LatticePolytope::Order(p.clone()),
            Instance::Polytope { polytope, .. } => polytope.clone(),
            Instance::Graph(_) => unreachable!("graphs have no single polytope"),
        }
    }

    /// Unmutated `h_G`, itself cross-checked between two routes.
    fn reference_hg(&mut self) -> Result<IntPolynomial> {
        if self.reference_hg.is_none() {
            let Instance::Graph(g) = self.instance else {
                unreachable!("only graphs have h_G")
            };
            self.reference_hg = Some(graph_numerator(g));
        }
        self.reference_hg.clone().expect("just filled")
    }

    /// The polynomial under test: h* (descent route for posets, counts for
    /// other polytopes) or `h_G`, mutated on request.
    fn base(&mut self) -> Result<IntPolynomial> {
        if self.base.is_none() {
            let raw = match self.instance {
                Instance::Poset(p) => Ok(p.descent_h_star()),
                Instance::Polytope { polytope, .. } => polytope.h_star(self.budget()),
                Instance::Graph(_) => self.reference_hg(),
            };
            let value = raw.map(|p| if self.config.mutate { mutate(&p) } else { p });
            self.base = Some(value);
        }
        self.base.clone().expect("just filled")
    }

    /// Open numerator from interior lattice-point counts, without reciprocity.
    fn open_counts(&mut self) -> Result<IntPolynomial> {
        if self.open_counts.is_none() {
            let value = self.polytope().open_numerator_from_counts(self.budget());
            self.open_counts = Some(value);
        }
        self.open_counts.clone().expect("just filled")
    }

    fn run(&mut self, check: Check) -> CheckResult {
        let outcome = match check {
            Check::HStar3Way => self.hstar_3way(),
            Check::Reciprocity => self.reciprocity(),
            Check::Stapledon => self.stapledon(),
            Check::OpenSplit => self.open_split(),
            Check::OrderSplit => self.order_split(),
            Check::GraphSplit => self.graph_split(),
            Check::GraphInequalities => self.graph_inequalities(),
            Check::Chromatic3Way => self.chromatic_3way(),
            Check::Conj61 => self.conj61(),
            Check::Conj62 => self.conj62(),
            Check::Conj64 => self.conj64(),
        };
        let mut witnesses = BTreeMap::new();
        let (status, detail) = match outcome {
            Ok(None) => (Status::Skipped, Some("d = 0 is outside the conjecture's scope".to_string())),
            Ok(Some(o)) => {
                if !o.ok || self.config.all_witnesses {
                    for (name, p) in &o.witnesses {
                        witnesses.insert(name.clone(), p.to_decimal_strings(0));
                    }
                }
                if o.ok {
                    (Status::Pass, None)
                } else {
                    (Status::Fail, Some(o.reasons.join("; ")))
                }
            }
            Err(e) if e.is_budget() => (Status::Skipped, Some(e.to_string())),
            Err(e) => (Status::Fail, Some(e.to_string())),
        };
        CheckResult {
            check: check.name(),
            status,
            detail,
            witnesses,
        }
    }

    fn hstar_3way(&mut self) -> Result<Option<Outcome>> {
        let Instance::Poset(p) = self.instance else {
            unreachable!()
        };
        let d = self.d();
        let base = self.base()?;
        let counts = self.polytope().h_star(self.budget())?;
        let chains = f_to_h(&p.ideal_chain_f_vector(self.budget())?, d)?;
        let mut o = Outcome::new();
        o.witness("descents", &base);
        o.witness("counts", &counts);
        o.witness("ideal_chains", &chains);
        o.require(base == counts, || format!("descent h* {base} != counted h* {counts}"));
        o.require(counts == chains, || format!("counted h* {counts} != ideal-chain h* {chains}"));
        Ok(Some(o))
    }

    fn reciprocity(&mut self) -> Result<Option<Outcome>> {
        let d = self.d();
        let base = self.base()?;
        let poly = self.polytope();
        let h_open = open_numerator(&base, d)?;
        let series = expand_series(&h_open, d, d + 2);
        let mut o = Outcome::new();
        o.witness("h_star", &base);
        o.witness("h_open", &h_open);
        let ehrhart = poly.ehrhart_polynomial(self.budget())?;
        let sign = if d.is_multiple_of(2) { 1 } else { -1 };
        for n in 1..=d as u64 + 2 {
            let interior = BigInt::from(poly.count_points(n, true, self.budget())?);
            let k = n as usize;
            o.require(interior == series[k], || {
                format!("interior count {interior} at n = {n} != series coefficient {}", series[k])
            });
            let reflected = ehrhart.eval_int(-(n as i64)) * BigInt::from(sign);
            o.require(reflected == interior.clone().into(), || {
                format!("(-1)^d L(-{n}) = {reflected} != interior count {interior}")
            });
        }
        if let Instance::Poset(p) = self.instance {
            let omega = p.order_polynomial(false, self.budget())?;
            for n in 1..=d as u64 + 2 {
                let strict = BigInt::from(p.count_order_maps(n, true, self.budget())?);
                let reflected = omega.eval_int(-(n as i64)) * BigInt::from(sign);
                o.require(reflected == strict.clone().into(), || {
                    format!("(-1)^d Omega(-{n}) = {reflected} != strict count {strict}")
                });
            }
        }
        Ok(Some(o))
    }

    fn stapledon(&mut self) -> Result<Option<Outcome>> {
        let d = self.d();
        let base = self.base()?;
        let dec = stapledon_pair(&base, d, false)?;
        let mut o = Outcome::new();
        o.witness("h_star", &base);
        o.witness("a_star", &dec.a);
        o.witness("b_star", &dec.b);
        o.require(dec.is_nonnegative(), || "a* or b* has a negative coefficient".into());
        if d >= 1 {
            let a1 = ab_decompose(&base, d - 1)?.a;
            o.witness("a_star_1", &a1);
            let rebuilt = &dec.a - &a1.shift(1);
            o.require(rebuilt == base, || format!("a* - z a*_1 = {rebuilt} != h*"));
        }
        Ok(Some(o))
    }

    fn open_split(&mut self) -> Result<Option<Outcome>> {
        let d = self.d();
        let base = self.base()?;
        let counted = self.open_counts()?;
        let dec = open_decomposition(&base, d)?;
        let mut o = Outcome::new();
        o.witness("h_star", &base);
        o.witness("h_open_counts", &counted);
        o.witness("a_P", &dec.a);
        o.witness("b_P", &dec.b);
        o.require(dec.numerator() == counted, || {
            format!("a_P - b_P = {} != counted open numerator {counted}", dec.numerator())
        });
        o.require(dec.is_symmetric(), || "a_P or b_P not symmetric".into());
        o.require(dec.signs_hold(), || "a_P or b_P has a negative coefficient".into());
        Ok(Some(o))
    }

    fn order_split(&mut self) -> Result<Option<Outcome>> {
        let d = self.d();
        let base = self.base()?;
        let counted = self.open_counts()?;
        let dec = order_decomposition(&base, d)?;
        let mut o = Outcome::new();
        o.witness("h_star", &base);
        o.witness("h_open_counts", &counted);
        o.witness("a_Pi", &dec.a);
        o.witness("b_Pi", &dec.b);
        o.require(dec.numerator() == counted, || {
            format!("a_Pi + z b_Pi = {} != counted open numerator {counted}", dec.numerator())
        });
        o.require(dec.is_symmetric(), || "a_Pi or b_Pi not symmetric".into());
        o.require(dec.signs_hold(), || "-a_Pi or b_Pi has a negative coefficient".into());
        Ok(Some(o))
    }

    fn conj62(&mut self) -> Result<Option<Outcome>> {
        let d = self.d();
        if d == 0 {
            return Ok(None);
        }
        let base = self.base()?;
        let h_open = open_numerator(&base, d)?;
        let mut o = Outcome::new();
        o.witness("h_star", &base);
        o.witness("h_open", &h_open);
        let Some(p) = h_open.div_z() else {
            o.require(false, || format!("h_Pi = {h_open} is not divisible by z"));
            return Ok(Some(o));
        };
        let split = conjectured_split(&p, d)?;
        o.witness("a", &split.a);
        o.witness("b", &split.b);
        o.require(split.a.is_nonpositive() && split.b.is_nonnegative(), || {
            format!("p_Pi = {p}: -a or b has a negative coefficient")
        });
        Ok(Some(o))
    }

    fn graph(&self) -> &'a Graph {
        match self.instance {
            Instance::Graph(g) => g,
            _ => unreachable!(),
        }
    }

    fn graph_split(&mut self) -> Result<Option<Outcome>> {
        let g = self.graph();
        let d = self.d();
        let base = self.base()?;
        let dec = graph_decomposition(g)?;
        let z_h = base.shift(1);
        let mut o = Outcome::new();
        o.witness("h_G", &base);
        o.witness("a", &dec.a);
        o.witness("b", &dec.b);
        let rebuilt = &dec.a + &dec.b.shift(1);
        o.require(rebuilt == z_h, || format!("a + z b = {rebuilt} != z h_G = {z_h}"));
        if !z_h.is_zero() {
            let direct = ab_decompose(&z_h, d + 1)?;
            o.require(direct.a == dec.a && direct.b == dec.b, || {
                format!("orientation sum differs from direct split a = {}, b = {}", direct.a, direct.b)
            });
        }
        o.require(dec.is_symmetric(), || "a or b not symmetric".into());
        o.require(dec.signs_hold(), || "-a or b has a negative coefficient".into());
        Ok(Some(o))
    }

    fn graph_inequalities(&mut self) -> Result<Option<Outcome>> {
        let g = self.graph();
        let d = self.d();
        let base = self.base()?;
        let chi = g.chromatic_polynomial();
        let acyclic = BigInt::from(g.acyclic_orientations().count());
        let from_chi = acyclic_count_from_chromatic(&chi, d);
        let mut o = Outcome::new();
        o.witness("h_G", &base);
        o.require(base.degree() == Some(d), || format!("h_G = {base} does not have degree {d}"));
        o.require(base.is_nonnegative(), || format!("h_G = {base} has a negative coefficient"));
        let lead = base.coeff(d);
        o.require(lead == acyclic, || format!("leading coefficient {lead} != {acyclic} acyclic orientations"));
        o.require(acyclic == from_chi, || format!("{acyclic} acyclic orientations != (-1)^d chi(-1) = {from_chi}"));
        for t in inequality_report(&base, d, InequalityMode::Theorem) {
            o.require(t.holds, || format!("partial-sum inequality i = {} has value {}", t.i, t.value));
        }
        Ok(Some(o))
    }

    fn chromatic_3way(&mut self) -> Result<Option<Outcome>> {
        let g = self.graph();
        let d = self.d();
        let base = self.base()?;
        let chi = g.chromatic_polynomial();
        let via = g.chromatic_via_orientations(self.budget())?;
        let mut o = Outcome::new();
        o.witness("h_G", &base);
        o.require(chi == via, || format!("deletion-contraction {chi} != orientation sum {via}"));
        for n in 0..=4u64 {
            let brute = BigInt::from(g.count_proper_colorings(n, self.budget())?);
            let value = chi.eval_int(n as i64);
            o.require(value == brute.clone().into(), || {
                format!("chi({n}) = {value} != {brute} proper colorings")
            });
        }
        let numerator = series_numerator(&chi, d)?;
        o.require(numerator == base, || format!("numerator of chi {numerator} != h_G {base}"));
        Ok(Some(o))
    }

    fn conj61(&mut self) -> Result<Option<Outcome>> {
        let d = self.d();
        if d == 0 {
            return Ok(None);
        }
        let base = self.base()?;
        let split = conjectured_split(&base, d)?;
        let mut o = Outcome::new();
        o.witness("h_G", &base);
        o.witness("a", &split.a);
        o.witness("b", &split.b);
        o.require(split.a.is_nonpositive() && split.b.is_nonnegative(), || {
            "-a or b has a negative coefficient".into()
        });
        Ok(Some(o))
    }

    fn conj64(&mut self) -> Result<Option<Outcome>> {
        let d = self.d();
        if d == 0 {
            return Ok(None);
        }
        let base = self.base()?;
        let mut o = Outcome::new();
        o.witness("h_G", &base);
        for t in inequality_report(&base, d, InequalityMode::Conjecture) {
            o.require(!t.value.is_negative(), || format!("inequality i = {} has value {}", t.i, t.value));
        }
        Ok(Some(o))
    }
}
