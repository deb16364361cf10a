//! Comparison reports and the corpus-wide verification suite.

use std::collections::BTreeMap;

use serde::Serialize;
use shiftlab::{
    betti_shifted_formula, bipartite_sandwich_check, canonical_combinatorial_shift,
    chordal_shift_algorithm, classify_shift, coro_predicate,
    enumerate_combinatorial_shifted_graphs, exterior_profile, exterior_shift, shift_ij,
    symmetric_profile, symmetric_profile_pad_checked, GenericConfig, Graph, MProfile, ShiftClass,
    ShiftStep,
};

use crate::CliError;

pub const BETTI_LIMIT_N: usize = 14;
pub const ENUMERATE_LIMIT_N: usize = 9;

/// Shifting methods selectable on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Method {
    Exterior,
    Symmetric,
    Combinatorial,
    #[value(name = "chordal-algo")]
    ChordalAlgo,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Exterior => "exterior",
            Method::Symmetric => "symmetric",
            Method::Combinatorial => "combinatorial",
            Method::ChordalAlgo => "chordal-algo",
        }
    }
}

/// One method's outcome in a comparison report.
#[derive(Debug, Clone, Serialize)]
pub struct MethodResult {
    pub edges: Graph,
    pub profile: MProfile,
}

/// Per-method shifted graphs plus pairwise equality verdicts.
#[derive(Debug, Clone, Serialize)]
pub struct CompareReport {
    pub graph: Graph,
    pub results: BTreeMap<String, MethodResult>,
    pub verdicts: BTreeMap<String, bool>,
    /// Set when a verdict contradicts a guarantee (all methods agree on
    /// chordal inputs); drives the process exit code.
    pub violation: bool,
}

pub fn shift_by_method(g: &Graph, method: Method, cfg: &GenericConfig) -> Result<Graph, CliError> {
    let result = match method {
        Method::Exterior => exterior_shift(g, cfg)?,
        Method::Symmetric => shiftlab::symmetric_shift(g, cfg)?,
        Method::Combinatorial => canonical_combinatorial_shift(g).result,
        Method::ChordalAlgo => chordal_shift_algorithm(g)?.result,
    };
    Ok(result)
}

/// Runs every requested method and compares the outcomes pairwise.
pub fn run_compare(
    g: &Graph,
    methods: &[Method],
    cfg: &GenericConfig,
) -> Result<CompareReport, CliError> {
    let mut sorted: Vec<Method> = methods.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.is_empty() {
        return Err(CliError::usage("--methods requires at least one method"));
    }
    let mut results = BTreeMap::new();
    let mut outcomes = Vec::new();
    for &method in &sorted {
        let shifted = shift_by_method(g, method, cfg)?;
        let profile = shifted.m_profile()?;
        outcomes.push((method, shifted.clone()));
        results.insert(
            method.name().to_string(),
            MethodResult {
                edges: shifted,
                profile,
            },
        );
    }
    let mut verdicts = BTreeMap::new();
    let mut violation = false;
    let chordal = g.is_chordal();
    for x in 0..outcomes.len() {
        for y in (x + 1)..outcomes.len() {
            let equal = outcomes[x].1 == outcomes[y].1;
            verdicts.insert(
                format!("{}={}", outcomes[x].0.name(), outcomes[y].0.name()),
                equal,
            );
            // On chordal inputs every method must agree.
            if chordal && !equal {
                violation = true;
            }
        }
    }
    Ok(CompareReport {
        graph: g.clone(),
        results,
        verdicts,
        violation,
    })
}

/// One row of the verification table.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    pub name: String,
    pub cases: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<VerifyRow>,
    pub ok: bool,
}

struct Tally {
    rows: BTreeMap<&'static str, (usize, usize)>,
    order: Vec<&'static str>,
}

impl Tally {
    fn new() -> Tally {
        Tally {
            rows: BTreeMap::new(),
            order: Vec::new(),
        }
    }

    fn record(&mut self, name: &'static str, ok: bool) {
        if !self.rows.contains_key(name) {
            self.order.push(name);
        }
        let entry = self.rows.entry(name).or_insert((0, 0));
        entry.0 += 1;
        if !ok {
            entry.1 += 1;
        }
    }

    fn into_report(self) -> VerifyReport {
        let rows: Vec<VerifyRow> = self
            .order
            .into_iter()
            .map(|name| {
                let (cases, violations) = self.rows[name];
                VerifyRow {
                    name: name.to_string(),
                    cases,
                    violations,
                }
            })
            .collect();
        let ok = rows.iter().all(|r| r.violations == 0);
        VerifyReport { rows, ok }
    }
}

/// Runs the full property suite over a corpus. `bipartite` enables the
/// bounds that only hold for bipartite inputs.
pub fn run_verify(
    corpus: &[Graph],
    bipartite: bool,
    cfg: &GenericConfig,
    pad_check: bool,
) -> Result<VerifyReport, CliError> {
    let mut tally = Tally::new();
    for g in corpus {
        verify_one(&mut tally, g, bipartite, cfg, pad_check)?;
    }
    Ok(tally.into_report())
}

fn verify_one(
    tally: &mut Tally,
    g: &Graph,
    bipartite: bool,
    cfg: &GenericConfig,
    pad_check: bool,
) -> Result<(), CliError> {
    let e_profile = exterior_profile(g, cfg)?;
    let s_profile = if pad_check {
        symmetric_profile_pad_checked(g, cfg)?
    } else {
        symmetric_profile(g, cfg)?
    };
    let exterior = e_profile.to_graph();
    let symmetric = s_profile.to_graph();
    let combinatorial = canonical_combinatorial_shift(g).result;

    for shifted in [&exterior, &symmetric, &combinatorial] {
        tally.record("shift results are shifted graphs", shifted.is_shifted());
        tally.record(
            "shifting preserves the edge count",
            shifted.edge_count() == g.edge_count(),
        );
        tally.record(
            "profile and graph reconstruction agree",
            shifted
                .m_profile()
                .map(|p| p.to_graph() == *shifted)
                .unwrap_or(false),
        );
    }

    if g.n() <= BETTI_LIMIT_N {
        let mut ok = true;
        for i in 0..=(g.n().saturating_sub(2)) {
            if betti_shifted_formula(&exterior, i) != exterior.betti_hochster(i) {
                ok = false;
            }
        }
        tally.record("Betti formula agrees with the subset oracle", ok);
    }

    if g.is_chordal() {
        tally.record(
            "exterior and symmetric shifts agree on chordal graphs",
            exterior == symmetric,
        );
        let algo = chordal_shift_algorithm(g)?.result;
        tally.record(
            "chordal shift algorithm matches the exterior shift",
            algo == exterior,
        );
        tally.record(
            "lexicographic sweep matches the exterior shift on chordal graphs",
            combinatorial == exterior,
        );
        if g.n() <= ENUMERATE_LIMIT_N {
            let all = enumerate_combinatorial_shifted_graphs(g)?;
            tally.record(
                "algorithm result is a reachable combinatorial shift",
                all.contains(&algo),
            );
        }
        let mut connectivity_ok = true;
        for k in 1..g.n() {
            if g.is_k_connected(k) != exterior.is_k_connected(k) {
                connectivity_ok = false;
            }
        }
        tally.record(
            "shifting preserves k-connectivity verdicts",
            connectivity_ok,
        );

        if g.n() <= BETTI_LIMIT_N {
            let mut ok = true;
            for i in 0..=(g.n().saturating_sub(2)) {
                if g.betti_hochster(i) != exterior.betti_hochster(i) {
                    ok = false;
                }
            }
            tally.record("chordal graphs keep their Betti numbers under shifting", ok);
        }

        verify_shift_moves(tally, g)?;
    }

    if bipartite {
        tally.record(
            "sandwich bounds hold for bipartite graphs",
            bipartite_sandwich_check(&e_profile, &s_profile, g.n())?,
        );
        if coro_predicate(&exterior) {
            tally.record(
                "binomial-form edge forces the shifts apart",
                exterior != symmetric,
            );
        }
    }
    Ok(())
}

/// Edge and disjoint shift moves preserve chordality, clique counts, and (for
/// edge shifts) k-connectivity.
fn verify_shift_moves(tally: &mut Tally, g: &Graph) -> Result<(), CliError> {
    for i in 1..g.n() {
        for j in (i + 1)..=g.n() {
            let step = ShiftStep::new(i, j)?;
            let class = classify_shift(g, step)?;
            if class == ShiftClass::Other {
                continue;
            }
            let image = shift_ij(g, step)?;
            let t_preserved = (1..=g.n()).all(|k| g.t_count(k) == image.t_count(k));
            match class {
                ShiftClass::Edge => {
                    tally.record("edge shifts preserve chordality", image.is_chordal());
                    tally.record("edge shifts preserve clique counts", t_preserved);
                    let conn_ok = (1..g.n())
                        .filter(|&k| g.is_k_connected(k))
                        .all(|k| image.is_k_connected(k));
                    tally.record("edge shifts preserve k-connectivity", conn_ok);
                }
                ShiftClass::Disjoint => {
                    tally.record("disjoint shifts preserve chordality", image.is_chordal());
                    tally.record("disjoint shifts preserve clique counts", t_preserved);
                }
                ShiftClass::Other => unreachable!(),
            }
        }
    }
    Ok(())
}
