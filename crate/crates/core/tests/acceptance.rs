//! Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any
//! criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use hstar_decomp::decomp::{graph_decomposition, graph_numerator, open_decomposition, order_decomposition};
use hstar_decomp::harness::{
    enumerate_labeled_graphs, enumerate_labeled_posets, mutate, random_graphs, verify_all, Check, HarnessConfig,
    Instance, Status, Summary,
};
use hstar_decomp::{Budget, Graph, IntPolynomial, LatticePolytope, Poset};
use num_bigint::BigInt;

struct Outcome {
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { ok: true, notes: Vec::new() }
    }

    fn require(&mut self, cond: bool, note: impl Into<String>) {
        if !cond {
            self.ok = false;
            self.notes.push(note.into());
        }
    }

    /// Zero failures and zero skips.
    fn clean(&mut self, what: &str, summary: &Summary, inputs: usize) {
        self.require(summary.inputs == inputs, format!("{what}: {} inputs, expected {inputs}", summary.inputs));
        self.require(summary.failed == 0, format!("{what}: {} failed checks", summary.failed));
        self.require(summary.skipped == 0, format!("{what}: {} skipped checks", summary.skipped));
    }

    fn within(&mut self, elapsed: Duration, limit_secs: u64) {
        self.require(
            elapsed <= Duration::from_secs(limit_secs),
            format!("took {:.1} s, limit {limit_secs} s", elapsed.as_secs_f64()),
        );
    }
}

fn ip(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

fn posets(d: usize) -> Vec<Instance> {
    enumerate_labeled_posets(d, d).unwrap().map(Instance::Poset).collect()
}

fn config() -> HarnessConfig {
    HarnessConfig::default()
}

fn print_failures(reports: &[hstar_decomp::harness::VerificationReport]) {
    for r in reports.iter().filter(|r| r.failed()).take(3) {
        for c in r.checks.iter().filter(|c| c.status == Status::Fail) {
            println!("    #{} {} {}: {}", r.index, r.kind, c.check, c.detail.as_deref().unwrap_or(""));
        }
    }
}

fn verify(instances: &[Instance], checks: &[Check], o: &mut Outcome, what: &str) {
    let (reports, summary) = verify_all(instances, checks, &config());
    print_failures(&reports);
    o.clean(what, &summary, instances.len());
}

/// Eulerian numbers `A(d, k)` by listing all permutations of `1..=d`.
fn eulerian_row(d: usize) -> IntPolynomial {
    let mut row = vec![0i64; d.max(1)];
    let mut perm: Vec<usize> = (1..=d).collect();
    // Heap's algorithm
    let mut c = vec![0; d];
    let count = |p: &[usize], row: &mut [i64]| row[p.windows(2).filter(|w| w[0] > w[1]).count()] += 1;
    count(&perm, &mut row);
    let mut i = 0;
    while i < d {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            count(&perm, &mut row);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    ip(&row)
}

/// Proper colorings by listing every map `V -> {0..n-1}`.
fn colorings(g: &Graph, n: u64) -> i128 {
    let d = g.len();
    let total = n.pow(d as u32);
    (0..total)
        .filter(|&code| {
            let color = |v: usize| (code / n.pow((v - 1) as u32)) % n;
            g.edges().iter().all(|&(u, v)| color(u) != color(v))
        })
        .count() as i128
}

/// Numerator of `sum chi(n) z^n` from brute-force color counts.
fn h_g_oracle(g: &Graph) -> IntPolynomial {
    let d = g.len();
    let chi: Vec<i128> = (0..=d as u64).map(|n| colorings(g, n)).collect();
    let binom = |n: i128, k: i128| (0..k).fold(1i128, |acc, i| acc * (n - i) / (i + 1));
    let h: Vec<BigInt> = (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    sign * binom(d as i128 + 1, i as i128) * chi[j - i]
                })
                .sum::<i128>()
                .into()
        })
        .collect();
    IntPolynomial::new(h)
}

/// All `(a, b)` with `a` symmetric about 3 and `b` about 2 and
/// `a + z b = target`, searched over small coefficients.
fn search_k2_decomposition(target: &IntPolynomial) -> Vec<(IntPolynomial, IntPolynomial)> {
    let mut found = Vec::new();
    for a0 in -4..=4 {
        for a1 in -4..=4 {
            for b0 in -4..=4 {
                for b1 in -4..=4 {
                    let a = ip(&[a0, a1, a1, a0]);
                    let b = ip(&[b0, b1, b0]);
                    if &a + &b.shift(1) == *target {
                        found.push((a, b));
                    }
                }
            }
        }
    }
    found
}

fn graph_corpus() -> Vec<Instance> {
    let mut g: Vec<Instance> = enumerate_labeled_graphs(5, 5).unwrap().map(Instance::Graph).collect();
    g.extend(random_graphs(6, 100, 6).map(Instance::Graph));
    g.extend(random_graphs(7, 100, 7).map(Instance::Graph));
    g
}

fn criterion_1(p45: &[Instance]) -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    verify(p45, &[Check::HStar3Way], &mut o, "posets on 4 and 5 elements");
    o.within(start.elapsed(), 60);
    o
}

fn criterion_2(p45: &[Instance]) -> Outcome {
    let mut o = Outcome::new();
    verify(p45, &[Check::Reciprocity], &mut o, "posets on 4 and 5 elements");
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let mut inst: Vec<Instance> = (0..=5).flat_map(posets).collect();
    for d in 1..=4 {
        for k in 1..=3 {
            for (label, polytope) in [
                (format!("{k} * unit simplex, d = {d}"), LatticePolytope::dilated_standard_simplex(d, k)),
                (format!("{k} * unit cube, d = {d}"), LatticePolytope::dilated_cube(d, k)),
            ] {
                inst.push(Instance::Polytope {
                    label,
                    polytope: polytope.unwrap(),
                });
            }
        }
    }
    let triangle = LatticePolytope::simplex(vec![vec![0, 0], vec![2, 0], vec![0, 2]]).unwrap();
    inst.push(Instance::Polytope {
        label: "leg-2 triangle".into(),
        polytope: triangle.clone(),
    });
    verify(&inst, &[Check::OpenSplit], &mut o, "order polytopes and dilates");
    let h = triangle.h_star(&Budget::default()).unwrap();
    let dec = open_decomposition(&h, 2).unwrap();
    o.require(dec.a == ip(&[1, 4, 4, 1]), format!("triangle a_P = {}", dec.a));
    o.require(dec.b == ip(&[1, 4, 1]), format!("triangle b_P = {}", dec.b));
    o.within(start.elapsed(), 120);
    o
}

fn criterion_4(p5: &[Instance]) -> Outcome {
    let mut o = Outcome::new();
    verify(p5, &[Check::OrderSplit], &mut o, "posets on 5 elements");
    let chain = Poset::chain(2);
    let dec = order_decomposition(&chain.descent_h_star(), 2).unwrap();
    o.require(dec.a == ip(&[0, -1, -1]), format!("2-chain a_Pi = {}", dec.a));
    o.require(dec.b == ip(&[1, 1, 1]), format!("2-chain b_Pi = {}", dec.b));
    o
}

fn criterion_5(graphs: &[Instance]) -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    verify(graphs, &[Check::GraphSplit, Check::GraphInequalities], &mut o, "graph corpus");
    o.within(start.elapsed(), 600);
    o
}

fn criterion_6(graphs: &[Instance]) -> Outcome {
    let mut o = Outcome::new();
    verify(graphs, &[Check::Chromatic3Way], &mut o, "graph corpus");
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    let k2 = Graph::complete(2);
    let k3 = Graph::complete(3);
    let p3 = Graph::path(3);
    let cases = [(&k2, ip(&[0, 0, 2])), (&k3, ip(&[0, 0, 0, 6])), (&p3, ip(&[0, 0, 2, 4]))];
    for (g, golden) in cases {
        let oracle = h_g_oracle(g);
        o.require(oracle == golden, format!("oracle h_G {oracle} != {golden}"));
        let got = graph_numerator(g).unwrap();
        o.require(got == golden, format!("h_G {got} != {golden}"));
    }
    let solutions = search_k2_decomposition(&ip(&[0, 0, 0, 2]));
    o.require(solutions.len() == 1, format!("{} K2 decompositions found", solutions.len()));
    let dec = graph_decomposition(&k2).unwrap();
    o.require(solutions.first() == Some(&(dec.a.clone(), dec.b.clone())), "K2 decomposition differs from search");
    o.require(dec.a == ip(&[0, -2, -2]) && dec.b == ip(&[2, 2, 2]), "K2 golden decomposition");
    let budget = Budget::default();
    for (d, golden) in [(3, ip(&[1, 4, 1])), (4, ip(&[1, 11, 11, 1]))] {
        let oracle = eulerian_row(d);
        o.require(oracle == golden, format!("Eulerian row {d} = {oracle}"));
        let p = Poset::antichain(d);
        o.require(p.descent_h_star() == golden, format!("antichain-{d} descent h*"));
        let counted = LatticePolytope::order(p).h_star(&budget).unwrap();
        o.require(counted == golden, format!("antichain-{d} counted h* = {counted}"));
    }
    o
}

fn criterion_8(p5: &[Instance], graphs: &[Instance]) -> Outcome {
    let mut o = Outcome::new();
    verify(p5, &[Check::Conj62], &mut o, "posets on 5 elements");
    verify(graphs, &[Check::Conj61, Check::Conj64], &mut o, "graph corpus");

    // Mutation self-test: the failure path fires and carries a reproducible witness.
    let small: Vec<Instance> = enumerate_labeled_graphs(3, 3).unwrap().map(Instance::Graph).collect();
    let cfg = HarnessConfig {
        mutate: true,
        ..config()
    };
    let (reports, summary) = verify_all(&small, &[Check::Conj61], &cfg);
    o.require(summary.failed > 0, "mutated graphs produced no failure");
    for r in reports.iter().filter(|r| r.failed()) {
        let g = Graph::parse(&r.input).unwrap();
        let mutated = mutate(&graph_numerator(&g).unwrap());
        let witness = &r.checks[0].witnesses["h_G"];
        o.require(
            *witness == mutated.to_decimal_strings(0),
            format!("witness {witness:?} does not reproduce from input"),
        );
    }
    let (_, summary) = verify_all(&posets(4), &[Check::OrderSplit], &cfg);
    o.require(summary.failed == 219, format!("{} of 219 mutated posets failed", summary.failed));

    let bin = env!("CARGO_BIN_EXE_hstar-decomp");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    o.require(
        status(&["verify", "--graphs", "3", "--checks", "conj6.1", "--mutate-selftest"]) == Some(1),
        "mutated CLI run did not exit 1",
    );
    o.require(
        status(&["verify", "--graphs", "4", "--checks", "conj6.1,conj6.4"]) == Some(0),
        "clean CLI run did not exit 0",
    );
    o
}

fn main() {
    let p4 = posets(4);
    let p5 = posets(5);
    let p45: Vec<Instance> = p4.iter().chain(&p5).cloned().collect();
    let graphs = graph_corpus();

    type Run<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let criteria: Vec<(&str, Run<'_>)> = vec![
        ("three-way h* agreement on 4450 labeled posets", Box::new(|| criterion_1(&p45))),
        ("reciprocity on 4450 labeled posets", Box::new(|| criterion_2(&p45))),
        ("open polytope decomposition nonnegative", Box::new(criterion_3)),
        ("order polytope decomposition signs on 4231 posets", Box::new(|| criterion_4(&p5))),
        ("chromatic decomposition and inequalities on 1224 graphs", Box::new(|| criterion_5(&graphs))),
        ("chromatic polynomial triple agreement", Box::new(|| criterion_6(&graphs))),
        ("golden values against brute-force oracles", Box::new(criterion_7)),
        ("conjecture sweep and mutation self-test", Box::new(|| criterion_8(&p5, &graphs))),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let verdict = if outcome.ok { "PASS" } else { "FAIL" };
        println!("criterion {} {verdict} {name} ({:.2} s)", i + 1, start.elapsed().as_secs_f64());
        for note in &outcome.notes {
            println!("    {note}");
        }
        if !outcome.ok {
            failures += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
