//! Seeded corpus generation: G(n,p), random chordal graphs built along a
//! perfect elimination order, random bipartite graphs, and complete
//! bipartite graphs. Identical specs produce identical corpora.

use clap::ValueEnum;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shiftlab::Graph;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Gnp,
    Chordal,
    Bipartite,
    Kab,
}

/// Parameters of a generated corpus.
#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub model: Model,
    pub n: Option<usize>,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub p: f64,
    pub count: usize,
    pub seed: u64,
}

impl CorpusSpec {
    fn require_n(&self) -> Result<usize, CliError> {
        self.n
            .ok_or_else(|| CliError::usage("this model requires --n"))
    }

    fn require_ab(&self) -> Result<(usize, usize), CliError> {
        match (self.a, self.b) {
            (Some(a), Some(b)) if a >= 1 && b >= 1 => Ok((a, b)),
            _ => Err(CliError::usage(
                "this model requires --a and --b (both >= 1)",
            )),
        }
    }
}

/// Generates the corpus described by a `CorpusSpec`; identical specs give
/// identical corpora.
pub fn gen_corpus(spec: &CorpusSpec) -> Result<Vec<Graph>, CliError> {
    if !(0.0..=1.0).contains(&spec.p) {
        return Err(CliError::usage("edge probability must lie in [0,1]"));
    }
    if spec.count < 1 {
        return Err(CliError::usage("count must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.model {
        Model::Gnp => {
            let n = spec.require_n()?;
            Ok((0..spec.count)
                .map(|_| random_gnp(&mut rng, n, spec.p))
                .collect())
        }
        Model::Chordal => {
            let n = spec.require_n()?;
            Ok((0..spec.count)
                .map(|_| random_chordal(&mut rng, n, spec.p))
                .collect())
        }
        Model::Bipartite => match (spec.a, spec.b) {
            (Some(_), Some(_)) => {
                let (a, b) = spec.require_ab()?;
                Ok((0..spec.count)
                    .map(|_| random_bipartite_fixed(&mut rng, a, b, spec.p))
                    .collect())
            }
            _ => {
                let n = spec.require_n()?;
                Ok((0..spec.count)
                    .map(|_| random_bipartite(&mut rng, n, spec.p))
                    .collect())
            }
        },
        Model::Kab => {
            let (a, b) = spec.require_ab()?;
            Ok(vec![Graph::complete_bipartite(a, b).expect("a, b >= 1")])
        }
    }
}

/// G(n, p): every pair independently with probability `p`.
pub fn random_gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("generated pairs are in range")
}

/// Random chordal graph: each vertex, with probability `p`, attaches to a
/// clique grown greedily among the earlier vertices, so the reverse insertion
/// order is a perfect elimination order and the result is always chordal.
pub fn random_chordal(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    build_chordal(rng, n, p, false)
}

/// Like [`random_chordal`] but every vertex attaches to at least one earlier
/// vertex, so the result is connected.
pub fn random_connected_chordal(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    build_chordal(rng, n, p, true)
}

fn build_chordal(rng: &mut impl Rng, n: usize, p: f64, always_attach: bool) -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let has_edge =
        |edges: &[(usize, usize)], a: usize, b: usize| edges.contains(&(a.min(b), a.max(b)));
    for v in 2..=n {
        if !always_attach && !rng.random_bool(p) {
            continue;
        }
        let anchor = rng.random_range(1..v);
        let mut clique = vec![anchor];
        loop {
            let common: Vec<usize> = (1..v)
                .filter(|&w| !clique.contains(&w))
                .filter(|&w| clique.iter().all(|&c| has_edge(&edges, c, w)))
                .collect();
            if common.is_empty() || !rng.random_bool(p) {
                break;
            }
            clique.push(common[rng.random_range(0..common.len())]);
        }
        for &c in &clique {
            edges.push((c, v));
        }
    }
    Graph::new(n, edges).expect("generated pairs are in range")
}

/// Random bipartite graph on `[n]`: each vertex lands in one of two parts by
/// a fair coin, then cross pairs appear independently with probability `p`.
pub fn random_bipartite(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if side[i - 1] != side[j - 1] && rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("generated pairs are in range")
}

/// Random subgraph of `K_{a,b}` with parts `{1..a}` and `{a+1..a+b}`.
pub fn random_bipartite_fixed(rng: &mut impl Rng, a: usize, b: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=a {
        for j in (a + 1)..=(a + b) {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(a + b, edges).expect("generated pairs are in range")
}
