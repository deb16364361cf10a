//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured evidence. Run with `cargo test -p shiftlab-cli --test
//! acceptance`.

use std::collections::BTreeSet;
use std::time::Instant;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shiftlab::{
    betti_shifted_formula, bipartite_sandwich_check, chordal_shift_algorithm, classify_shift,
    coro_predicate, delta_c_is_unique, enumerate_combinatorial_shifted_graphs, exterior_profile,
    exterior_shift, kab_exterior_profile, kab_symmetric_profile, shift_ij, shift_ij_closed_form,
    symmetric_profile, symmetric_shift, GenericConfig, Graph, MProfile, ShiftClass, ShiftStep,
};
use shiftlab_cli::corpus::{random_bipartite, random_chordal, random_connected_chordal};

fn cfg() -> GenericConfig {
    GenericConfig::default()
}

fn seeded_gnp(rng: &mut ChaCha8Rng, n: usize, percent: u64) -> Graph {
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if rng.next_u64() % 100 < percent {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("pairs in range")
}

/// All shifted graphs on `[n]`, one per legal profile.
fn all_shifted_graphs(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    fn recurse(n: usize, k: usize, increments: &mut Vec<usize>, out: &mut Vec<Graph>) {
        if k == n {
            let mut cum = Vec::with_capacity(n - 1);
            let mut acc = 0;
            for &m in increments.iter() {
                acc += m;
                cum.push(acc);
            }
            out.push(MProfile::new(n, cum).expect("legal profile").to_graph());
            return;
        }
        let prev = increments.last().copied().unwrap_or(usize::MAX);
        let mut choices = vec![0usize];
        if prev > 0 {
            choices.extend(1..=(n - k).min(prev.saturating_sub(1)));
        }
        for m in choices {
            increments.push(m);
            recurse(n, k + 1, increments, out);
            increments.pop();
        }
    }
    recurse(n, 1, &mut Vec::new(), &mut out);
    out
}

#[test]
fn criterion_01_k66_golden_edge_sets() {
    let start = Instant::now();
    let k66 = Graph::complete_bipartite(6, 6).unwrap();

    // The two 36-edge listings, frozen: descending runs 11,9,7,5,3,1 for the
    // exterior shift and 11,10,9,5,1 for the symmetric one.
    let mut exterior_expected = Vec::new();
    for (i, top) in [(1, 12), (2, 11), (3, 10), (4, 9), (5, 8), (6, 7)] {
        for j in (i + 1)..=top {
            exterior_expected.push((i, j));
        }
    }
    let mut symmetric_expected = Vec::new();
    for (i, top) in [(1, 12), (2, 12), (3, 12), (4, 9), (5, 6)] {
        for j in (i + 1)..=top {
            symmetric_expected.push((i, j));
        }
    }
    assert_eq!(exterior_expected.len(), 36);
    assert_eq!(symmetric_expected.len(), 36);

    let exterior = exterior_shift(&k66, &cfg()).unwrap();
    assert_eq!(exterior, Graph::new(12, exterior_expected).unwrap());
    assert_eq!(
        exterior.m_profile().unwrap().increments()[..6],
        [11, 9, 7, 5, 3, 1]
    );

    let symmetric = symmetric_shift(&k66, &cfg()).unwrap();
    assert_eq!(symmetric, Graph::new(12, symmetric_expected).unwrap());
    assert_eq!(
        symmetric.m_profile().unwrap().increments()[..5],
        [11, 10, 9, 5, 1]
    );

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 10, "took {elapsed:?}, limit 10s");
    println!("[criterion 1] PASS - K_6,6 exterior and symmetric edge sets exact in {elapsed:?}");
}

#[test]
fn criterion_02_bipartite_closed_forms() {
    let start = Instant::now();
    for a in 1..=6usize {
        for b in 1..=a {
            let kab = Graph::complete_bipartite(a, b).unwrap();
            let e = exterior_profile(&kab, &cfg()).unwrap();
            let s = symmetric_profile(&kab, &cfg()).unwrap();
            assert_eq!(e, kab_exterior_profile(a, b).unwrap(), "exterior ({a},{b})");
            assert_eq!(
                s,
                kab_symmetric_profile(a, b).unwrap(),
                "symmetric ({a},{b})"
            );
            if a >= 3 && b >= 3 {
                assert_ne!(e, s, "shifts must differ for ({a},{b})");
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}, limit 120s");
    println!("[criterion 2] PASS - closed forms match for all 21 pairs b <= a <= 6 in {elapsed:?}");
}

#[test]
fn criterion_03_chordal_coincidence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..200usize {
        let n = 4 + trial % 6;
        let p = [0.3, 0.5, 0.7][trial % 3];
        let g = random_chordal(&mut rng, n, p);
        let exterior = exterior_shift(&g, &cfg()).unwrap();
        let symmetric = symmetric_shift(&g, &cfg()).unwrap();
        let algo = chordal_shift_algorithm(&g).unwrap();
        assert_eq!(exterior, symmetric, "trial {trial} graph {g:?}");
        assert_eq!(algo.result, exterior, "trial {trial} graph {g:?}");
        let all = enumerate_combinatorial_shifted_graphs(&g).unwrap();
        assert!(all.contains(&algo.result), "trial {trial} graph {g:?}");
        for k in 1..=n {
            assert_eq!(
                g.t_count(k),
                algo.result.t_count(k),
                "trial {trial} k={k} graph {g:?}"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "took {elapsed:?}, limit 300s");
    println!("[criterion 3] PASS - 200 chordal graphs: exterior = symmetric = algorithm, all enumerated, in {elapsed:?}");
}

#[test]
fn criterion_04_k33_separation() {
    let k33 = Graph::complete_bipartite(3, 3).unwrap();
    let exterior = exterior_shift(&k33, &cfg()).unwrap();
    let symmetric = symmetric_shift(&k33, &cfg()).unwrap();

    assert_eq!(exterior.m_profile().unwrap().cumulative(), &[5, 8, 9, 9, 9]);
    assert_eq!(
        symmetric.m_profile().unwrap().cumulative(),
        &[5, 9, 9, 9, 9]
    );

    let e_edges: BTreeSet<_> = exterior.edges().collect();
    let s_edges: BTreeSet<_> = symmetric.edges().collect();
    let only_e: Vec<_> = e_edges.difference(&s_edges).copied().collect();
    let only_s: Vec<_> = s_edges.difference(&e_edges).copied().collect();
    assert_eq!(only_e, vec![(3, 4)]);
    assert_eq!(only_s, vec![(2, 6)]);
    println!("[criterion 4] PASS - K_3,3 shifts differ exactly in {{3,4}} vs {{2,6}}");
}

#[test]
fn criterion_05_sandwich_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut coro_hits = 0usize;
    for trial in 0..100usize {
        let n = 4 + trial % 7; // 4..=10
        let p = [0.35, 0.6, 0.9][trial % 3];
        let g = random_bipartite(&mut rng, n, p);
        let e = exterior_profile(&g, &cfg()).unwrap();
        let s = symmetric_profile(&g, &cfg()).unwrap();
        assert!(
            bipartite_sandwich_check(&e, &s, n).unwrap(),
            "trial {trial} graph {g:?} e={e:?} s={s:?}"
        );
        if coro_predicate(&e.to_graph()) {
            coro_hits += 1;
            assert_ne!(
                e, s,
                "trial {trial}: binomial edge present but shifts equal"
            );
        }
    }
    println!("[criterion 5] PASS - sandwich bounds on 100 bipartite graphs; binomial-form edge predicted separation {coro_hits} times");
}

#[test]
fn criterion_06_betti_oracle_equivalence() {
    // Exhaustive over the shifted graphs on up to 8 vertices.
    let mut checked = 0usize;
    for n in 2..=8usize {
        for shifted in all_shifted_graphs(n) {
            for i in 0..=(n - 2) {
                assert_eq!(
                    betti_shifted_formula(&shifted, i).unwrap(),
                    shifted.betti_hochster(i).unwrap(),
                    "n={n} i={i} profile={:?}",
                    shifted.m_profile().unwrap().cumulative()
                );
                checked += 1;
            }
        }
    }

    // Shifting a chordal graph never changes the linear-strand Betti numbers.
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for trial in 0..100usize {
        let n = 4 + trial % 5; // 4..=8
        let g = random_chordal(&mut rng, n, [0.4, 0.6][trial % 2]);
        let shifted = exterior_shift(&g, &cfg()).unwrap();
        for i in 0..=(n - 2) {
            assert_eq!(
                g.betti_hochster(i).unwrap(),
                shifted.betti_hochster(i).unwrap(),
                "trial {trial} i={i} graph {g:?}"
            );
        }
    }

    // The 4-cycle is not chordal and breaks the equality at i = 1.
    let c4 = Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
    let c4_shift = exterior_shift(&c4, &cfg()).unwrap();
    assert_eq!(c4.betti_hochster(1).unwrap(), 0);
    assert_ne!(
        c4.betti_hochster(1).unwrap(),
        c4_shift.betti_hochster(1).unwrap()
    );
    println!("[criterion 6] PASS - formula = oracle on {checked} shifted cases; chordal equality holds, 4-cycle breaks at i=1");
}

#[test]
fn criterion_07_shift_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for trial in 0..1000usize {
        let n = 2 + trial % 7; // 2..=8
        let g = seeded_gnp(&mut rng, n, 20 + (trial as u64 * 7) % 61);
        let i = 1 + (rng.next_u64() as usize) % (n - 1).max(1);
        let j = i + 1 + (rng.next_u64() as usize) % (n - i);
        let step = ShiftStep::new(i, j).unwrap();

        let once = shift_ij(&g, step).unwrap();
        assert_eq!(once.edge_count(), g.edge_count(), "trial {trial}");
        assert_eq!(shift_ij(&once, step).unwrap(), once, "trial {trial}");
        assert_eq!(
            once,
            shift_ij_closed_form(&g, step).unwrap(),
            "trial {trial}"
        );

        let fixed_by_all = (1..n).all(|x| {
            ((x + 1)..=n).all(|y| {
                let s = ShiftStep::new(x, y).unwrap();
                shift_ij(&g, s).unwrap() == g
            })
        });
        assert_eq!(fixed_by_all, g.is_shifted(), "trial {trial} graph {g:?}");
    }
    println!("[criterion 7] PASS - idempotence, edge count, fixed-point iff shifted, closed form, over 1000 pairs");
}

#[test]
fn criterion_08_structure_preservation() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);

    // 500 edge-shift cases on chordal graphs.
    let mut edge_cases = 0usize;
    while edge_cases < 500 {
        let n = 4 + (rng.next_u64() as usize) % 5; // 4..=8
        let g = random_chordal(&mut rng, n, 0.6);
        let edges: Vec<_> = g.edges().collect();
        if edges.is_empty() {
            continue;
        }
        let (i, j) = edges[(rng.next_u64() as usize) % edges.len()];
        let step = ShiftStep::new(i, j).unwrap();
        assert_eq!(classify_shift(&g, step).unwrap(), ShiftClass::Edge);
        let image = shift_ij(&g, step).unwrap();
        assert!(image.is_chordal(), "edge case {edge_cases} graph {g:?}");
        for k in 1..=n {
            assert_eq!(
                g.t_count(k),
                image.t_count(k),
                "edge case {edge_cases} k={k}"
            );
        }
        for k in 1..n {
            if g.is_k_connected(k) {
                assert!(
                    image.is_k_connected(k),
                    "edge case {edge_cases} k={k} graph {g:?}"
                );
            }
        }
        edge_cases += 1;
    }

    // 500 disjoint-shift cases on disconnected chordal graphs.
    let mut disjoint_cases = 0usize;
    while disjoint_cases < 500 {
        let n = 4 + (rng.next_u64() as usize) % 5;
        let g = random_chordal(&mut rng, n, 0.45);
        let components = g.connected_components();
        if components.len() < 2 {
            continue;
        }
        let a = components[0][(rng.next_u64() as usize) % components[0].len()];
        let pick = 1 + (rng.next_u64() as usize) % (components.len() - 1);
        let b = components[pick][(rng.next_u64() as usize) % components[pick].len()];
        let (i, j) = (a.min(b), a.max(b));
        let step = ShiftStep::new(i, j).unwrap();
        assert_eq!(classify_shift(&g, step).unwrap(), ShiftClass::Disjoint);
        let image = shift_ij(&g, step).unwrap();
        assert!(
            image.is_chordal(),
            "disjoint case {disjoint_cases} graph {g:?}"
        );
        for k in 1..=n {
            assert_eq!(
                g.t_count(k),
                image.t_count(k),
                "disjoint case {disjoint_cases} k={k}"
            );
        }
        disjoint_cases += 1;
    }
    println!("[criterion 8] PASS - 500 edge shifts and 500 disjoint shifts preserve chordality, clique counts, connectivity");
}

#[test]
fn criterion_09_connectivity_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for trial in 0..100usize {
        let n = 4 + trial % 6; // 4..=9
        let g = random_connected_chordal(&mut rng, n, [0.35, 0.6][trial % 2]);
        let shifted = exterior_shift(&g, &cfg()).unwrap();
        for k in 1..n {
            assert_eq!(
                g.is_k_connected(k),
                shifted.is_k_connected(k),
                "trial {trial} k={k} graph {g:?}"
            );
        }
    }
    println!("[criterion 9] PASS - k-connectivity equivalence on 100 connected chordal graphs");
}

/// Graphs built from interval stars at the first `r` vertices plus two
/// disjoint cliques inside the last star's range; with the two-clique case
/// (`r = 0`) these are exactly the chordal graphs announced to have a unique
/// combinatorial shifted graph.
fn uniqueness_family(max_n: usize) -> BTreeSet<Graph> {
    let mut family = BTreeSet::new();

    // Two disjoint cliques.
    for n in 2..=max_n {
        for s in 0..=n {
            for t in 0..=(n - s) {
                let mut edges = Vec::new();
                for i in 1..=s {
                    for j in (i + 1)..=s {
                        edges.push((i, j));
                    }
                }
                for i in (s + 1)..=(s + t) {
                    for j in (i + 1)..=(s + t) {
                        edges.push((i, j));
                    }
                }
                family.insert(Graph::new(n, edges).unwrap());
            }
        }
    }

    // Interval stars: vertex i adjacent to every j in [i+1, n_i], for a
    // non-increasing sequence n_1 >= ... >= n_r > r, then disjoint cliques
    // A, B inside [r+1, n_r].
    fn sequences(r: usize, max_n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        fn recurse(r: usize, max_n: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if current.len() == r {
                out.push(current.clone());
                return;
            }
            let upper = current.last().copied().unwrap_or(max_n);
            for next in (r + 1)..=upper {
                current.push(next);
                recurse(r, max_n, current, out);
                current.pop();
            }
        }
        recurse(r, max_n, &mut Vec::new(), &mut out);
        out
    }

    for n in 2..=max_n {
        for r in 1..=3.min(n.saturating_sub(1)) {
            for seq in sequences(r, n) {
                let mut base = Vec::new();
                for (idx, &n_i) in seq.iter().enumerate() {
                    let i = idx + 1;
                    for j in (i + 1)..=n_i {
                        base.push((i, j));
                    }
                }
                let lo = r + 1;
                let hi = seq[r - 1];
                // All disjoint subset pairs when the range is small,
                // contiguous splits otherwise.
                let range: Vec<usize> = (lo..=hi).collect();
                if range.len() <= 4 {
                    let assignments = 3usize.pow(range.len() as u32);
                    for code in 0..assignments {
                        let mut edges = base.clone();
                        let mut a = Vec::new();
                        let mut b = Vec::new();
                        let mut c = code;
                        for &v in &range {
                            match c % 3 {
                                1 => a.push(v),
                                2 => b.push(v),
                                _ => {}
                            }
                            c /= 3;
                        }
                        for part in [&a, &b] {
                            for x in 0..part.len() {
                                for y in (x + 1)..part.len() {
                                    edges.push((part[x], part[y]));
                                }
                            }
                        }
                        family.insert(Graph::new(n, edges).unwrap());
                    }
                } else {
                    for s in 0..=range.len() {
                        for t in 0..=(range.len() - s) {
                            let mut edges = base.clone();
                            for x in 0..s {
                                for y in (x + 1)..s {
                                    edges.push((range[x], range[y]));
                                }
                            }
                            for x in s..(s + t) {
                                for y in (x + 1)..(s + t) {
                                    edges.push((range[x], range[y]));
                                }
                            }
                            family.insert(Graph::new(n, edges).unwrap());
                        }
                    }
                }
            }
        }
    }
    family
}

#[test]
fn criterion_10_uniqueness() {
    // Disjoint unions of two cliques always have a unique result.
    for (total, s) in [(4, 2), (5, 2), (6, 3), (7, 3), (7, 2)] {
        let mut edges = Vec::new();
        for i in 1..=s {
            for j in (i + 1)..=s {
                edges.push((i, j));
            }
        }
        for i in (s + 1)..=total {
            for j in (i + 1)..=total {
                edges.push((i, j));
            }
        }
        let g = Graph::new(total, edges).unwrap();
        assert!(
            delta_c_is_unique(&g).unwrap(),
            "K_{s} + K_{} not unique",
            total - s
        );
    }

    // The path plus a disjoint edge is the canonical non-unique example.
    let p3_k2 = Graph::new(5, [(1, 2), (2, 3), (4, 5)]).unwrap();
    assert!(!delta_c_is_unique(&p3_k2).unwrap());

    // Every generated member of the structural family reports uniqueness.
    let family = uniqueness_family(8);
    let mut checked = 0usize;
    for g in &family {
        assert!(g.is_chordal(), "family member not chordal: {g:?}");
        assert!(
            delta_c_is_unique(g).unwrap(),
            "family member not unique: {g:?}"
        );
        checked += 1;
    }
    println!("[criterion 10] PASS - clique pairs unique, P_3+K_2 non-unique, {checked} family members all unique");
}
