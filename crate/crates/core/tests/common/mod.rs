//! Independent oracles for the integration suites: everything here recomputes
//! library answers from first principles (exhaustive scans, permutation
//! search, Taylor strands) without touching the production code paths it
//! checks.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use edgereg::graph::Graph;
use edgereg::ideal::SqfIdeal;
use edgereg::varset::VarSet;

// -- graph oracles ------------------------------------------------------------

/// Minimal vertex covers by scanning all 2^n subsets.
pub fn brute_minimal_covers(g: &Graph) -> Vec<VarSet> {
    let n = g.n();
    let is_cover = |s: VarSet| g.edges().iter().all(|&(a, b)| s.contains(a) || s.contains(b));
    let mut covers: Vec<VarSet> = (0u64..(1u64 << n))
        .map(VarSet::from_bits)
        .filter(|&s| is_cover(s))
        .filter(|&s| s.iter().all(|v| !is_cover(s.without(v))))
        .collect();
    covers.sort_by(|a, b| VarSet::cmp_canonical(*a, *b));
    covers
}

/// Matching number by scanning all edge subsets.
pub fn brute_matching(g: &Graph) -> usize {
    let m = g.edges().len();
    assert!(m <= 20, "edge-subset scan oracle is for small graphs");
    let mut best = 0;
    'subset: for mask in 0u64..(1u64 << m) {
        let mut used = VarSet::empty();
        let mut size = 0;
        for (k, &(a, b)) in g.edges().iter().enumerate() {
            if mask >> k & 1 == 1 {
                if used.contains(a) || used.contains(b) {
                    continue 'subset;
                }
                used = used.with(a).with(b);
                size += 1;
            }
        }
        best = best.max(size);
    }
    best
}

/// Induced matching number by scanning all edge subsets.
pub fn brute_induced_matching(g: &Graph) -> usize {
    let m = g.edges().len();
    assert!(m <= 20, "edge-subset scan oracle is for small graphs");
    let mut best = 0;
    'subset: for mask in 0u64..(1u64 << m) {
        let mut used = VarSet::empty();
        let mut size = 0;
        for (k, &(a, b)) in g.edges().iter().enumerate() {
            if mask >> k & 1 == 1 {
                if used.contains(a) || used.contains(b) {
                    continue 'subset;
                }
                used = used.with(a).with(b);
                size += 1;
            }
        }
        // induced: no third edge inside the union of the chosen endpoints
        for (k, &(a, b)) in g.edges().iter().enumerate() {
            if mask >> k & 1 == 0 && used.contains(a) && used.contains(b) {
                continue 'subset;
            }
        }
        best = best.max(size);
    }
    best
}

/// Ordered matching number by trying every matching, every labeling
/// permutation, and every orientation directly against the definition.
pub fn brute_ordered_matching(g: &Graph) -> usize {
    let mut matchings: Vec<Vec<(usize, usize)>> = Vec::new();
    collect_matchings(g, 0, VarSet::empty(), &mut Vec::new(), &mut matchings);
    let mut best = 0;
    for m in matchings {
        let r = m.len();
        if r <= best {
            continue;
        }
        if ordered_by_permutations(g, &m) {
            best = r;
        }
    }
    best
}

fn collect_matchings(
    g: &Graph,
    idx: usize,
    used: VarSet,
    cur: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if !cur.is_empty() {
        out.push(cur.clone());
    }
    for k in idx..g.edges().len() {
        let (a, b) = g.edges()[k];
        if used.contains(a) || used.contains(b) {
            continue;
        }
        cur.push((a, b));
        collect_matchings(g, k + 1, used.with(a).with(b), cur, out);
        cur.pop();
    }
}

fn ordered_by_permutations(g: &Graph, m: &[(usize, usize)]) -> bool {
    let r = m.len();
    let mut order: Vec<usize> = (0..r).collect();
    permute(&mut order, 0, &mut |perm| {
        for bits in 0..(1u32 << r) {
            let mut a = vec![0usize; r];
            let mut b = vec![0usize; r];
            for (slot, &edge_idx) in perm.iter().enumerate() {
                let (x, y) = m[edge_idx];
                let (ak, bk) = if bits >> slot & 1 == 0 { (x, y) } else { (y, x) };
                a[slot] = ak;
                b[slot] = bk;
            }
            let independent = (0..r).all(|i| (i + 1..r).all(|j| !g.has_edge(a[i], a[j])));
            if !independent {
                continue;
            }
            let condition = (0..r).all(|i| (0..r).all(|j| !g.has_edge(a[i], b[j]) || i <= j));
            if condition {
                return true;
            }
        }
        false
    })
}

/// Calls `f` on every permutation until one returns true.
fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == items.len() {
        return f(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        if permute(items, k + 1, f) {
            items.swap(k, i);
            return true;
        }
        items.swap(k, i);
    }
    false
}

/// Chordality by scanning every vertex subset for an induced cycle >= 4.
pub fn brute_chordal(g: &Graph) -> bool {
    let n = g.n();
    for mask in 0u64..(1u64 << n) {
        let s = VarSet::from_bits(mask);
        if s.len() < 4 {
            continue;
        }
        if induces_cycle(g, s) {
            return false;
        }
    }
    true
}

fn induces_cycle(g: &Graph, s: VarSet) -> bool {
    // induced subgraph is a cycle: connected and every degree exactly 2
    let verts: Vec<usize> = s.iter().collect();
    for &v in &verts {
        if (g.neighbors(v) & s).len() != 2 {
            return false;
        }
    }
    let mut seen = VarSet::singleton(verts[0]);
    let mut stack = vec![verts[0]];
    while let Some(v) = stack.pop() {
        for u in ((g.neighbors(v) & s) - seen).iter() {
            seen = seen.with(u);
            stack.push(u);
        }
    }
    seen == s
}

// -- ideal oracles ------------------------------------------------------------

/// Minimal primes by scanning all 2^n variable subsets for minimal
/// transversals of the generator supports.
pub fn brute_minimal_primes(j: &SqfIdeal) -> Vec<VarSet> {
    let n = j.ambient();
    let supports: Vec<VarSet> = j.gens().iter().map(|g| g.support()).collect();
    let hits = |s: VarSet| supports.iter().all(|sup| !(*sup & s).is_empty());
    let mut primes: Vec<VarSet> = (0u64..(1u64 << n))
        .map(VarSet::from_bits)
        .filter(|&s| hits(s))
        .filter(|&s| s.iter().all(|v| !hits(s.without(v))))
        .collect();
    primes.sort_by(|a, b| VarSet::cmp_canonical(*a, *b));
    primes
}

/// Squarefree part of the s-th symbolic power by full 2^n membership
/// enumeration against independently computed primes.
pub fn brute_sqf_symbolic(j: &SqfIdeal, s: usize) -> SqfIdeal {
    let n = j.ambient();
    let primes = brute_minimal_primes(j);
    let members = (0u64..(1u64 << n))
        .map(VarSet::from_bits)
        .filter(|&a| primes.iter().all(|p| (a & *p).len() >= s));
    SqfIdeal::from_supports(n, members).unwrap()
}

/// Same ideal through the other route: intersect the squarefree parts of the
/// prime powers, each generated by the s-subsets of the prime.
pub fn intersection_sqf_symbolic(j: &SqfIdeal, s: usize) -> SqfIdeal {
    let n = j.ambient();
    let primes = brute_minimal_primes(j);
    let mut acc = SqfIdeal::unit(n);
    for p in primes {
        let gens = subsets_of_size(p, s);
        let power = SqfIdeal::from_supports(n, gens).unwrap();
        acc = acc.intersect(&power).unwrap();
    }
    acc
}

fn subsets_of_size(p: VarSet, s: usize) -> Vec<VarSet> {
    p.subsets().filter(|q| q.len() == s).collect()
}

/// All squarefree members of an ideal, for membership-semantics checks.
pub fn member_supports(j: &SqfIdeal) -> Vec<VarSet> {
    let n = j.ambient();
    (0u64..(1u64 << n))
        .map(VarSet::from_bits)
        .filter(|&a| j.contains_support(a))
        .collect()
}

// -- Taylor-complex Betti oracle ------------------------------------------------

/// Graded Betti numbers of `S/J` from the Taylor complex of the generators:
/// tensor with the residue field, split into multidegree strands, and take
/// exact homology ranks. Only sensible for a handful of generators.
pub fn taylor_betti(j: &SqfIdeal, characteristic: u32) -> BTreeMap<(usize, usize), u64> {
    let gens: Vec<VarSet> = j.gens().iter().map(|g| g.support()).collect();
    let m = gens.len();
    assert!(m <= 6, "Taylor oracle is exponential in the generator count");
    let lcm = |subset: u64| -> VarSet {
        let mut l = VarSet::empty();
        for k in 0..m {
            if subset >> k & 1 == 1 {
                l = l | gens[k];
            }
        }
        l
    };
    // group subsets by multidegree
    let mut strands: BTreeMap<VarSet, Vec<u64>> = BTreeMap::new();
    for subset in 0u64..(1u64 << m) {
        strands.entry(lcm(subset)).or_default().push(subset);
    }
    let mut table: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for (alpha, subsets) in strands {
        let mut by_card: Vec<Vec<u64>> = vec![Vec::new(); m + 1];
        for &f in &subsets {
            by_card[f.count_ones() as usize].push(f);
        }
        // rank of the differential from homological degree i to i-1
        let mut ranks = vec![0usize; m + 2];
        for i in 1..=m {
            let (lower, upper) = (&by_card[i - 1], &by_card[i]);
            if lower.is_empty() || upper.is_empty() {
                continue;
            }
            let mut mat = vec![vec![0i64; upper.len()]; lower.len()];
            for (col, &f) in upper.iter().enumerate() {
                let mut pos = 0;
                for k in 0..m {
                    if f >> k & 1 == 0 {
                        continue;
                    }
                    let sub = f & !(1u64 << k);
                    if lcm(sub) == alpha {
                        if let Ok(row) = lower.binary_search(&sub) {
                            mat[row][col] = if pos % 2 == 0 { 1 } else { -1 };
                        }
                    }
                    pos += 1;
                }
            }
            ranks[i] = oracle_rank(&mat, characteristic);
        }
        for i in 0..=m {
            let h = by_card[i].len() - ranks[i] - ranks[i + 1];
            if h > 0 {
                *table.entry((i, alpha.len())).or_insert(0) += h as u64;
            }
        }
    }
    table
}

/// Exact rank via rational Gaussian elimination (char 0) or arithmetic mod p.
pub fn oracle_rank(mat: &[Vec<i64>], characteristic: u32) -> usize {
    if mat.is_empty() || mat[0].is_empty() {
        return 0;
    }
    if characteristic == 0 {
        let mut a: Vec<Vec<BigRational>> = mat
            .iter()
            .map(|row| row.iter().map(|&v| BigRational::from_integer(v.into())).collect())
            .collect();
        let (rows, cols) = (a.len(), a[0].len());
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, pivot);
            let inv = a[rank][col].clone();
            for c in col..cols {
                let v = &a[rank][c] / &inv;
                a[rank][c] = v;
            }
            for r in 0..rows {
                if r != rank && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for c in col..cols {
                        let v = &a[r][c] - &factor * &a[rank][c];
                        a[r][c] = v;
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    } else {
        let p = i64::from(characteristic);
        let mut a: Vec<Vec<i64>> = mat
            .iter()
            .map(|row| row.iter().map(|&v| v.rem_euclid(p)).collect())
            .collect();
        let (rows, cols) = (a.len(), a[0].len());
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| a[r][col] % p != 0) else {
                continue;
            };
            a.swap(rank, pivot);
            let inv = mod_inv(a[rank][col], p);
            for c in col..cols {
                a[rank][c] = a[rank][c] * inv % p;
            }
            for r in 0..rows {
                if r != rank && a[r][col] % p != 0 {
                    let f = a[r][col];
                    for c in col..cols {
                        a[r][c] = (a[r][c] - f * a[rank][c]).rem_euclid(p);
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}

fn mod_inv(x: i64, p: i64) -> i64 {
    // p prime, x nonzero mod p
    let mut acc = 1i64;
    let mut base = x.rem_euclid(p);
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

// -- random graphs --------------------------------------------------------------

/// Random graph with `n` vertices and edge probability `p` from the given rng.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Every isomorphism class with 1..=max_n vertices.
pub fn corpus_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| edgereg::enumerate::enumerate_graphs(n).unwrap())
        .collect()
}
