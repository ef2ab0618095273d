//! Cross-checks of every production algorithm against the independent
//! brute-force oracles in `common`, exhaustively over small corpora.

mod common;

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use edgereg::betti::betti_table;
use edgereg::enumerate::{canonical_form, enumerate_graphs};
use edgereg::graph::Graph;
use edgereg::graph6::{encode_graph6, parse_graph6};
use edgereg::homology::FieldSpec;
use edgereg::ideal::{edge_ideal, sqf_power, sqf_symbolic, SqfIdeal, SqfMonomial};
use edgereg::varset::VarSet;

use common::*;

fn q() -> FieldSpec {
    FieldSpec::rationals()
}

#[test]
fn graph_invariants_match_brute_force_up_to_5() {
    for g in corpus_up_to(5) {
        assert_eq!(g.matching_number(), brute_matching(&g), "{g:?}");
        assert_eq!(g.induced_matching_number(), brute_induced_matching(&g), "{g:?}");
        assert_eq!(g.ordered_matching_number(), brute_ordered_matching(&g), "{g:?}");
        assert_eq!(g.is_chordal(), brute_chordal(&g), "{g:?}");
        assert_eq!(g.minimal_vertex_covers(), brute_minimal_covers(&g), "{g:?}");
    }
}

#[test]
fn chordality_and_matching_chain_up_to_6() {
    for g in enumerate_graphs(6).unwrap() {
        assert_eq!(g.is_chordal(), brute_chordal(&g), "{g:?}");
        let (im, om, m) = (
            g.induced_matching_number(),
            g.ordered_matching_number(),
            g.matching_number(),
        );
        assert!(im <= om && om <= m, "{g:?}: {im} {om} {m}");
    }
}

#[test]
fn covers_are_valid_antichains_and_agree_with_height() {
    for g in corpus_up_to(6) {
        let covers = g.minimal_vertex_covers();
        for (i, c) in covers.iter().enumerate() {
            // covers every edge
            assert!(g.edges().iter().all(|&(a, b)| c.contains(a) || c.contains(b)));
            // every vertex has a private edge
            for v in c.iter() {
                let still_covered = g
                    .edges()
                    .iter()
                    .all(|&(a, b)| c.without(v).contains(a) || c.without(v).contains(b));
                assert!(!still_covered, "{g:?}: {c} is not minimal at {v}");
            }
            // antichain
            for (j, d) in covers.iter().enumerate() {
                if i != j {
                    assert!(!c.is_subset_of(*d), "{g:?}: nested covers {c} and {d}");
                }
            }
        }
        let min_cover = covers.iter().map(|c| c.len()).min().unwrap();
        assert_eq!(g.height(), min_cover, "{g:?}");
    }
}

#[test]
fn minimal_primes_equal_minimal_covers() {
    for g in corpus_up_to(6) {
        if g.is_edgeless() {
            continue;
        }
        let ideal = edge_ideal(&g);
        assert_eq!(ideal.minimal_primes().unwrap(), g.minimal_vertex_covers(), "{g:?}");
        assert_eq!(ideal.minimal_primes().unwrap(), brute_minimal_primes(&ideal), "{g:?}");
        assert_eq!(ideal.height().unwrap(), g.height(), "{g:?}");
    }
}

#[test]
fn primes_recompose_the_ideal() {
    for g in corpus_up_to(5) {
        if g.is_edgeless() {
            continue;
        }
        let ideal = edge_ideal(&g);
        let n = ideal.ambient();
        let mut acc = SqfIdeal::unit(n);
        for p in ideal.minimal_primes().unwrap() {
            let prime = SqfIdeal::from_supports(n, p.iter().map(VarSet::singleton)).unwrap();
            acc = acc.intersect(&prime).unwrap();
        }
        assert_eq!(acc, ideal, "{g:?}");
    }
}

#[test]
fn ideal_ops_have_membership_semantics() {
    // sum, intersection, colon, restrict against 2^n membership enumeration
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..40usize {
        let n = if round % 2 == 0 { 6 } else { 8 };
        let g1 = random_graph(&mut rng, n, 0.5);
        let g2 = random_graph(&mut rng, n, 0.5);
        let (a, b) = (edge_ideal(&g1), edge_ideal(&g2));
        let full = 1u64 << n;

        let sum = a.sum(&b).unwrap();
        let intersect = a.intersect(&b).unwrap();
        for bits in 0u64..full {
            let s = VarSet::from_bits(bits);
            assert_eq!(
                sum.contains_support(s),
                a.contains_support(s) || b.contains_support(s)
            );
            assert_eq!(
                intersect.contains_support(s),
                a.contains_support(s) && b.contains_support(s)
            );
        }

        if !a.is_zero() {
            let m = SqfMonomial::new(n, VarSet::from_bits(rng.gen_range(0..full))).unwrap();
            let colon = a.colon(&m).unwrap();
            for bits in 0u64..full {
                let s = VarSet::from_bits(bits);
                // u is in (J : m) iff u * m is in J; on supports that is the union
                assert_eq!(colon.contains_support(s), a.contains_support(s | m.support()));
            }
            let avoid = VarSet::from_bits(rng.gen_range(0..full));
            let restricted = a.restrict(avoid).unwrap();
            let expect = SqfIdeal::from_supports(
                n,
                member_supports(&a).into_iter().filter(|s| (*s & avoid).is_empty()),
            )
            .unwrap();
            assert_eq!(restricted, expect);

            // the symbolic-power routes also agree at this scale
            let ht = a.height().unwrap();
            for s in 1..=ht.min(3) {
                assert_eq!(sqf_symbolic(&a, s).unwrap(), brute_sqf_symbolic(&a, s));
            }
        }
    }
}

#[test]
fn symbolic_power_three_routes_agree_up_to_5() {
    for g in corpus_up_to(5) {
        if g.is_edgeless() {
            continue;
        }
        let ideal = edge_ideal(&g);
        let ht = ideal.height().unwrap();
        for s in 1..=ht + 1 {
            let fast = sqf_symbolic(&ideal, s).unwrap();
            assert_eq!(fast, brute_sqf_symbolic(&ideal, s), "{g:?} s={s}");
            assert_eq!(fast, intersection_sqf_symbolic(&ideal, s), "{g:?} s={s}");
        }
    }
}

#[test]
fn symbolic_chain_and_power_inclusions() {
    for g in corpus_up_to(6) {
        if g.is_edgeless() {
            continue;
        }
        let ideal = edge_ideal(&g);
        let ht = ideal.height().unwrap();
        assert_eq!(sqf_symbolic(&ideal, 1).unwrap(), ideal, "{g:?}");
        for s in 1..=ht {
            let cur = sqf_symbolic(&ideal, s).unwrap();
            let next = sqf_symbolic(&ideal, s + 1).unwrap();
            // next included in cur
            for m in next.gens() {
                assert!(cur.contains_support(m.support()), "{g:?} s={s}");
            }
            // ordinary squarefree power included in the symbolic one
            for m in sqf_power(&g, s).unwrap().gens() {
                assert!(cur.contains_support(m.support()), "{g:?} s={s}");
            }
            // nonzero exactly while s <= height (and unmixed => principal top)
            assert!(!cur.is_zero());
        }
        assert!(sqf_symbolic(&ideal, ht + 1).unwrap().is_zero(), "{g:?}");
        if ideal.is_unmixed().unwrap() {
            assert_eq!(sqf_symbolic(&ideal, ht).unwrap().gens().len(), 1, "{g:?}");
        }
    }
}

#[test]
fn bipartite_symbolic_equals_power() {
    for g in corpus_up_to(6) {
        if g.is_edgeless() || !g.is_bipartite() {
            continue;
        }
        let ideal = edge_ideal(&g);
        for s in 1..=g.matching_number() {
            assert_eq!(
                sqf_symbolic(&ideal, s).unwrap(),
                sqf_power(&g, s).unwrap(),
                "{g:?} s={s}"
            );
        }
    }
}

#[test]
fn colon_composes_over_coprime_monomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let g = random_graph(&mut rng, 7, 0.5);
        let ideal = edge_ideal(&g);
        if ideal.is_zero() {
            continue;
        }
        let u = VarSet::from_bits(u64::from(rng.gen_range(0u8..128)));
        let v = VarSet::from_bits(u64::from(rng.gen_range(0u8..128))) - u;
        let mu = SqfMonomial::new(7, u).unwrap();
        let mv = SqfMonomial::new(7, v).unwrap();
        let muv = SqfMonomial::new(7, u | v).unwrap();
        let step = ideal.colon(&mu).unwrap().colon(&mv).unwrap();
        assert_eq!(step, ideal.colon(&muv).unwrap());
    }
}

#[test]
fn hochster_agrees_with_taylor_oracle_on_small_ideals() {
    // every ideal with at most 4 generators arising from the n <= 5 corpus:
    // edge ideals and their symbolic squarefree powers
    let mut candidates: Vec<SqfIdeal> = Vec::new();
    for g in corpus_up_to(5) {
        if g.is_edgeless() {
            continue;
        }
        let ideal = edge_ideal(&g);
        let ht = ideal.height().unwrap();
        if ideal.gens().len() <= 4 {
            candidates.push(ideal.clone());
        }
        for s in 2..=ht {
            let j = sqf_symbolic(&ideal, s).unwrap();
            if !j.is_zero() && j.gens().len() <= 4 {
                candidates.push(j);
            }
        }
    }
    assert!(candidates.len() > 50, "expected a rich candidate pool");
    for j in candidates {
        for characteristic in [0u32, 2] {
            let field = if characteristic == 0 {
                q()
            } else {
                FieldSpec::prime(characteristic).unwrap()
            };
            let hochster = betti_table(&j, &field).unwrap();
            let taylor = taylor_betti(&j, characteristic);
            assert_eq!(
                hochster.quotient_entries(),
                &taylor,
                "J = {j} over char {characteristic}"
            );
        }
    }
}

#[test]
fn five_cycle_regularity_against_taylor() {
    // I(C5) has five generators, still within the Taylor oracle's reach
    let i = edge_ideal(&Graph::cycle(5).unwrap());
    let hochster = betti_table(&i, &q()).unwrap();
    assert_eq!(hochster.quotient_entries(), &taylor_betti(&i, 0));
    assert_eq!(hochster.reg_ideal(), 3);
}

#[test]
fn principal_ideal_regularity_is_degree_exhaustive() {
    for bits in 1u64..(1 << 5) {
        let f = VarSet::from_bits(bits);
        let j = SqfIdeal::from_supports(5, [f]).unwrap();
        assert_eq!(betti_table(&j, &q()).unwrap().reg_ideal(), f.len(), "{f}");
    }
}

#[test]
fn betti_tables_field_independent_on_corpus() {
    let f2 = FieldSpec::prime(2).unwrap();
    let mut disagreements = Vec::new();
    for g in corpus_up_to(5) {
        if g.is_edgeless() {
            continue;
        }
        let ideal = edge_ideal(&g);
        let ht = ideal.height().unwrap();
        for s in 1..=ht {
            let j = sqf_symbolic(&ideal, s).unwrap();
            let t0 = betti_table(&j, &q()).unwrap();
            let t2 = betti_table(&j, &f2).unwrap();
            if t0.quotient_entries() != t2.quotient_entries() {
                disagreements.push(format!("{g:?} s={s}"));
            }
        }
    }
    assert!(
        disagreements.is_empty(),
        "characteristic dependence found (a reportable finding): {disagreements:?}"
    );
}

#[test]
fn edge_ideal_regularity_bounds_up_to_6() {
    for g in corpus_up_to(6) {
        if g.is_edgeless() {
            continue;
        }
        let reg = betti_table(&edge_ideal(&g), &q()).unwrap().reg_ideal();
        let im = g.induced_matching_number();
        let m = g.matching_number();
        assert!(im + 1 <= reg && reg <= m + 1, "{g:?}: reg={reg} im={im} m={m}");
    }
}

#[test]
fn regularity_is_additive_over_disjoint_unions() {
    let pieces = [
        Graph::path(3).unwrap(),
        Graph::cycle(3).unwrap(),
        Graph::path(4).unwrap(),
        Graph::star(2).unwrap(),
    ];
    for a in &pieces {
        for b in &pieces {
            let shift = a.n();
            let edges = a
                .edges()
                .iter()
                .copied()
                .chain(b.edges().iter().map(|&(x, y)| (x + shift, y + shift)));
            let disjoint = Graph::new(a.n() + b.n(), edges).unwrap();
            let ra = betti_table(&edge_ideal(a), &q()).unwrap().reg_quotient();
            let rb = betti_table(&edge_ideal(b), &q()).unwrap().reg_quotient();
            let rd = betti_table(&edge_ideal(&disjoint), &q()).unwrap().reg_quotient();
            assert_eq!(rd, ra + rb, "{a:?} + {b:?}");
        }
    }
}

#[test]
fn enumeration_agrees_with_direct_dedup() {
    // independent count: canonicalize every labeled graph and dedup
    for n in [3usize, 4] {
        let bits = n * (n - 1) / 2;
        let mut classes = BTreeSet::new();
        for mask in 0u64..(1 << bits) {
            let pairs: Vec<(usize, usize)> =
                (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, e)| *e);
            let g = Graph::new(n, edges).unwrap();
            classes.insert(encode_graph6(&canonical_form(&g).unwrap()).unwrap());
        }
        let enumerated: BTreeSet<String> = enumerate_graphs(n)
            .unwrap()
            .iter()
            .map(|g| encode_graph6(g).unwrap())
            .collect();
        assert_eq!(classes, enumerated);
    }
}

#[test]
fn graph6_round_trips_on_the_corpus() {
    for g in corpus_up_to(6) {
        let enc = encode_graph6(&g).unwrap();
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }
}
