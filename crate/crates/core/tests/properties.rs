//! Randomized invariants, run with a fixed case budget.

use std::collections::BTreeSet;

use boxhom::complex::{barycentric_subdivision, SimplicialComplex};
use boxhom::graph::{random_graph, Graph};
use boxhom::hom::box_complex;
use boxhom::homology::reduced_betti;
use boxhom::poset::{strong_collapse_decide, Poset};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn brute_force_box_pairs(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut count = 0;
    for sigma in 1u64..(1 << n) {
        for tau in 1u64..(1 << n) {
            let ok = (0..n).all(|i| {
                sigma >> i & 1 == 0
                    || (0..n).all(|j| tau >> j & 1 == 0 || g.has_edge(i, j))
            });
            if ok {
                count += 1;
            }
        }
    }
    count
}

fn seeded_complex(seed: u64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(3..=5);
    let labels: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let mut maximal: Vec<Vec<String>> = Vec::new();
    for _ in 0..rng.gen_range(2..=4) {
        let size = rng.gen_range(1..=3);
        let mut s = BTreeSet::new();
        while s.len() < size {
            s.insert(labels[rng.gen_range(0..n)].clone());
        }
        maximal.push(s.into_iter().collect());
    }
    let used: BTreeSet<&String> = maximal.iter().flatten().collect();
    let live: Vec<&str> = labels.iter().filter(|l| used.contains(l)).map(|s| s.as_str()).collect();
    let mrefs: Vec<Vec<&str>> =
        maximal.iter().map(|m| m.iter().map(|s| s.as_str()).collect()).collect();
    SimplicialComplex::from_maximal(&live, &mrefs).unwrap()
}

fn seeded_poset(seed: u64) -> Poset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=7);
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let mut rels = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_range(0..100) < 35 {
                rels.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    let lrefs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let rrefs: Vec<(&str, &str)> = rels.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Poset::new(&lrefs, &rrefs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn box_pair_count_matches_brute_force(n in 2usize..=5, permille in 0u32..=1000, seed in any::<u64>()) {
        let g = random_graph(n, permille, seed);
        let b = box_complex(&g).unwrap();
        prop_assert_eq!(b.pairs.len(), brute_force_box_pairs(&g));
    }

    #[test]
    fn subdivision_preserves_homology(seed in any::<u64>()) {
        let k = seeded_complex(seed);
        let (sd, _) = barycentric_subdivision(&k, None, 1).unwrap();
        prop_assert_eq!(reduced_betti(&k, 2), reduced_betti(&sd, 2));
    }

    #[test]
    fn strong_collapse_preserves_homology(seed in any::<u64>()) {
        let p = seeded_poset(seed);
        let core = strong_collapse_decide(&p, None, None).unwrap().residue;
        let before = reduced_betti(&p.order_complex(), 2);
        let after = reduced_betti(&core.order_complex(), 2);
        prop_assert_eq!(before, after);
    }
}
