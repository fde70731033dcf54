//! The instance corpus and the driver that runs every check over it.

use rayon::prelude::*;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::family::{parse_family, parse_graph_spec, parse_product, NamedGraph};
use crate::theorems::checks::{
    verify_sequence_labeling, verify_strong_power_index, verify_strong_power_number,
    verify_traceable_index, PairAnalysis,
};
use crate::theorems::report::BoundReport;

/// Factor graphs and the pairs to run. With no explicit pairs, every
/// unordered pair `i <= j` runs.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub factors: Vec<NamedGraph>,
    pub pairs: Vec<(usize, usize)>,
}

impl Corpus {
    /// Paths P2..P6, cycles C3..C7 and complete graphs K2..K5.
    pub fn standard() -> Self {
        let mut factors: Vec<NamedGraph> = (2..=6).map(NamedGraph::path).collect();
        factors.extend((3..=7).map(|n| NamedGraph::cycle(n).expect("order at least 3")));
        factors.extend((2..=5).map(NamedGraph::complete));
        Corpus {
            factors,
            pairs: Vec::new(),
        }
    }

    /// One entry per line: a family shorthand or graph6 string, optionally
    /// followed by `prime`, or a product shorthand such as `P3xC5s` naming a
    /// pair. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut corpus = Corpus::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            let spec = words.next().expect("non-empty line");
            let prime = match words.next() {
                None => None,
                Some("prime") => Some(true),
                Some(other) => {
                    return Err(Error::Parse(format!(
                        "line {}: unexpected `{other}`",
                        lineno + 1
                    )));
                }
            };
            if let Some(p) = parse_product(spec) {
                let (a, b, _) = p?;
                let i = corpus.intern(a);
                let j = corpus.intern(b);
                corpus.pairs.push((i, j));
                continue;
            }
            let mut g = match parse_family(spec) {
                Some(g) => g?,
                None => parse_graph_spec(spec)?,
            };
            if let Some(p) = prime {
                g.declared_prime = p;
            }
            corpus.intern(g);
        }
        Ok(corpus)
    }

    fn intern(&mut self, g: NamedGraph) -> usize {
        if let Some(i) = self
            .factors
            .iter()
            .position(|f| f.name == g.name && f.graph == g.graph)
        {
            if g.declared_prime {
                self.factors[i].declared_prime = true;
            }
            return i;
        }
        self.factors.push(g);
        self.factors.len() - 1
    }

    pub fn pair_list(&self) -> Vec<(usize, usize)> {
        if !self.pairs.is_empty() {
            return self.pairs.clone();
        }
        let n = self.factors.len();
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
    }
}

enum Task {
    Factor(usize),
    Pair(usize, usize),
}

fn factor_reports(g: &NamedGraph, budget: &Budget) -> Vec<BoundReport> {
    vec![
        verify_strong_power_number(g, 2, budget),
        verify_strong_power_index(g, 2, budget),
    ]
}

fn pair_reports(g: &NamedGraph, h: &NamedGraph, budget: &Budget) -> Vec<BoundReport> {
    let pair = PairAnalysis::new(g, h, budget);
    let mut out = vec![
        pair.product_sandwich(),
        pair.strong_cartesian_equality(),
        pair.edge_lift(),
        pair.index_spanning_bound(),
        pair.index_thin_bound(),
        pair.path_cycle_index(),
    ];
    drop(pair);
    out.push(verify_sequence_labeling(g, h, budget));
    if g.name != h.name {
        out.push(verify_sequence_labeling(h, g, budget));
    }
    out.push(verify_traceable_index(&[g.clone(), h.clone()], budget));
    out
}

/// Runs every check over the corpus: per-factor power checks first, then
/// the pair checks. Output order is deterministic.
pub fn run_all(corpus: &Corpus, budget: &Budget) -> Vec<BoundReport> {
    let mut tasks: Vec<Task> = (0..corpus.factors.len()).map(Task::Factor).collect();
    tasks.extend(
        corpus
            .pair_list()
            .into_iter()
            .map(|(i, j)| Task::Pair(i, j)),
    );
    tasks
        .par_iter()
        .map(|t| match *t {
            Task::Factor(i) => factor_reports(&corpus.factors[i], budget),
            Task::Pair(i, j) => pair_reports(&corpus.factors[i], &corpus.factors[j], budget),
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}
