//! Simple undirected graphs on dense vertex indices `0..n-1`, the named
//! families used as running examples, and the matching-type invariants
//! everything else is phrased in.
//!
//! All invariants are computed by exact exponential search with pruning; the
//! verification corpora cap `n`, so exactness and simplicity win over
//! sophisticated matching algorithms here.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::varset::{VarSet, MAX_VARS};

/// A simple graph: no loops, no multi-edges, vertices `0..n-1`.
///
/// The edge list is stored canonically (each pair ordered, pairs sorted), so
/// two equal graphs compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<VarSet>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        if n > MAX_VARS {
            return Err(Error::Capability(format!(
                "graphs are limited to {MAX_VARS} vertices, got {n}"
            )));
        }
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Parameter(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::Parameter(format!(
                    "edge ({a},{b}) out of range for {n} vertices"
                )));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if list.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parameter("duplicate edge".into()));
        }
        let mut adj = vec![VarSet::empty(); n];
        for &(a, b) in &list {
            adj[a] = adj[a].with(b);
            adj[b] = adj[b].with(a);
        }
        Ok(Graph { n, edges: list, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].contains(b)
    }

    /// Open neighborhood of `v` as a vertex set.
    pub fn neighbors(&self, v: usize) -> VarSet {
        self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VarSet {
        self.adj[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertex_set(&self) -> VarSet {
        VarSet::full(self.n)
    }

    // -- named families -----------------------------------------------------

    pub fn path(k: usize) -> Result<Graph> {
        if k < 1 {
            return Err(Error::Parameter("path length must be >= 1".into()));
        }
        Graph::new(k, (0..k.saturating_sub(1)).map(|i| (i, i + 1)))
    }

    pub fn cycle(k: usize) -> Result<Graph> {
        if k < 3 {
            return Err(Error::Parameter("cycle length must be >= 3".into()));
        }
        Graph::new(k, (0..k).map(|i| (i, (i + 1) % k)))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        if a < 1 || b < 1 {
            return Err(Error::Parameter("complete bipartite sides must be >= 1".into()));
        }
        Graph::new(a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))))
    }

    /// Star `K_{1,k}` with center `0`.
    pub fn star(k: usize) -> Result<Graph> {
        if k < 1 {
            return Err(Error::Parameter("star must have >= 1 leaf".into()));
        }
        Graph::new(k + 1, (1..=k).map(|i| (0, i)))
    }

    /// `t` triangles sharing exactly the apex vertex `0`; triangle `i` uses
    /// vertices `2i+1` and `2i+2`.
    pub fn star_triangle(t: usize) -> Result<Graph> {
        if t < 1 {
            return Err(Error::Parameter("star triangle needs >= 1 triangle".into()));
        }
        let mut edges = Vec::with_capacity(3 * t);
        for i in 0..t {
            let (y, z) = (2 * i + 1, 2 * i + 2);
            edges.push((0, y));
            edges.push((0, z));
            edges.push((y, z));
        }
        Graph::new(2 * t + 1, edges)
    }

    pub fn complete(k: usize) -> Result<Graph> {
        Graph::new(k, (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))))
    }

    pub fn build_named(family: GraphFamily, params: &[usize]) -> Result<Graph> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::Parameter(format!(
                    "{family:?} expects {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        match family {
            GraphFamily::Path => {
                want(1)?;
                Graph::path(params[0])
            }
            GraphFamily::Cycle => {
                want(1)?;
                Graph::cycle(params[0])
            }
            GraphFamily::CompleteBipartite => {
                want(2)?;
                Graph::complete_bipartite(params[0], params[1])
            }
            GraphFamily::Star => {
                want(1)?;
                Graph::star(params[0])
            }
            GraphFamily::StarTriangle => {
                want(1)?;
                Graph::star_triangle(params[0])
            }
            GraphFamily::FromEdges => {
                if params.is_empty() || params.len() % 2 == 0 {
                    return Err(Error::Parameter(
                        "from_edges expects n followed by endpoint pairs".into(),
                    ));
                }
                let n = params[0];
                let pairs = params[1..].chunks(2).map(|c| (c[0], c[1]));
                Graph::new(n, pairs)
            }
        }
    }

    // -- subgraphs -----------------------------------------------------------

    /// `G \ U`, relabeled to dense indices. The returned map sends each new
    /// index to the original one, so callers can translate monomials back.
    pub fn delete_vertices(&self, del: VarSet) -> Result<(Graph, Vec<usize>)> {
        if !del.is_subset_of(self.vertex_set()) {
            return Err(Error::Parameter(format!(
                "vertex set {del} out of range for {} vertices",
                self.n
            )));
        }
        let kept: Vec<usize> = (0..self.n).filter(|v| !del.contains(*v)).collect();
        let mut new_index = vec![usize::MAX; self.n];
        for (new, &old) in kept.iter().enumerate() {
            new_index[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|(a, b)| !del.contains(*a) && !del.contains(*b))
            .map(|&(a, b)| (new_index[a], new_index[b]));
        Ok((Graph::new(kept.len(), edges)?, kept))
    }

    /// Same vertex set, keeping only edges disjoint from `avoid`. This is the
    /// edge ideal of `G \ avoid` viewed inside the original ambient ring.
    pub fn edges_avoiding(&self, avoid: VarSet) -> Graph {
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|(a, b)| !avoid.contains(*a) && !avoid.contains(*b))
            .copied()
            .collect();
        let mut adj = vec![VarSet::empty(); self.n];
        for &(a, b) in &edges {
            adj[a] = adj[a].with(b);
            adj[b] = adj[b].with(a);
        }
        Graph { n: self.n, edges, adj }
    }

    /// Induced subgraph on `keep`, relabeled; returns the new-to-old map.
    pub fn induced(&self, keep: VarSet) -> Result<(Graph, Vec<usize>)> {
        self.delete_vertices(keep.complement(self.n))
    }

    // -- invariants ----------------------------------------------------------

    pub fn matching_number(&self) -> usize {
        let mut memo = HashMap::new();
        self.matching_rec(self.vertex_set(), &mut memo)
    }

    fn matching_rec(&self, alive: VarSet, memo: &mut HashMap<u64, usize>) -> usize {
        let mut pick = None;
        for v in alive.iter() {
            if !(self.adj[v] & alive).is_empty() {
                pick = Some(v);
                break;
            }
        }
        let Some(v) = pick else { return 0 };
        if let Some(&r) = memo.get(&alive.bits()) {
            return r;
        }
        let mut best = self.matching_rec(alive.without(v), memo);
        for u in (self.adj[v] & alive).iter() {
            best = best.max(1 + self.matching_rec(alive.without(v).without(u), memo));
        }
        memo.insert(alive.bits(), best);
        best
    }

    pub fn induced_matching_number(&self) -> usize {
        let mut memo = HashMap::new();
        self.ind_match_rec(0, self.vertex_set(), &mut memo)
    }

    fn ind_match_rec(
        &self,
        idx: usize,
        alive: VarSet,
        memo: &mut HashMap<(usize, u64), usize>,
    ) -> usize {
        if idx == self.edges.len() {
            return 0;
        }
        let key = (idx, alive.bits());
        if let Some(&r) = memo.get(&key) {
            return r;
        }
        let (a, b) = self.edges[idx];
        let mut best = self.ind_match_rec(idx + 1, alive, memo);
        if alive.contains(a) && alive.contains(b) {
            // taking edge ab forbids every vertex seen by either endpoint
            let blocked = self.closed_neighborhood(a) | self.closed_neighborhood(b);
            best = best.max(1 + self.ind_match_rec(idx + 1, alive - blocked, memo));
        }
        memo.insert(key, best);
        best
    }

    /// Largest matching `{a_i b_i}` admitting an orientation and indexing with
    /// `{a_i}` independent and every cross edge `a_i b_j` forcing `i <= j`.
    /// For each matching and each of the `2^|M|` orientations, the index
    /// constraints form a digraph on the matching edges; the matching is
    /// ordered exactly when some orientation makes that digraph acyclic.
    pub fn ordered_matching_number(&self) -> usize {
        let mut best = 0;
        let mut chosen = Vec::new();
        self.ord_match_rec(0, VarSet::empty(), &mut chosen, &mut best);
        best
    }

    fn ord_match_rec(
        &self,
        idx: usize,
        used: VarSet,
        chosen: &mut Vec<(usize, usize)>,
        best: &mut usize,
    ) {
        if chosen.len() > *best && self.has_ordered_orientation(chosen) {
            *best = chosen.len();
        }
        for k in idx..self.edges.len() {
            let (a, b) = self.edges[k];
            if used.contains(a) || used.contains(b) {
                continue;
            }
            chosen.push((a, b));
            self.ord_match_rec(k + 1, used.with(a).with(b), chosen, best);
            chosen.pop();
        }
    }

    fn has_ordered_orientation(&self, m: &[(usize, usize)]) -> bool {
        let r = m.len();
        debug_assert!(r < 32);
        'orient: for bits in 0..(1u32 << r) {
            let mut a = [0usize; 32];
            let mut b = [0usize; 32];
            let mut a_side = VarSet::empty();
            for (k, &(x, y)) in m.iter().enumerate() {
                let (ak, bk) = if bits >> k & 1 == 0 { (x, y) } else { (y, x) };
                a[k] = ak;
                b[k] = bk;
                a_side = a_side.with(ak);
            }
            // independence of the a-side
            for k in 0..r {
                if !(self.adj[a[k]] & a_side).is_empty() {
                    continue 'orient;
                }
            }
            // arc k -> l whenever a_k b_l is an edge; need the digraph acyclic
            let mut out = [VarSet::empty(); 32];
            let mut indeg = [0usize; 32];
            for k in 0..r {
                for l in 0..r {
                    if k != l && self.has_edge(a[k], b[l]) {
                        out[k] = out[k].with(l);
                        indeg[l] += 1;
                    }
                }
            }
            let mut queue: Vec<usize> = (0..r).filter(|&k| indeg[k] == 0).collect();
            let mut seen = 0;
            while let Some(k) = queue.pop() {
                seen += 1;
                for l in out[k].iter() {
                    indeg[l] -= 1;
                    if indeg[l] == 0 {
                        queue.push(l);
                    }
                }
            }
            if seen == r {
                return true;
            }
        }
        false
    }

    pub fn max_independent_set(&self) -> usize {
        let mut memo = HashMap::new();
        self.mis_rec(self.vertex_set(), &mut memo)
    }

    fn mis_rec(&self, alive: VarSet, memo: &mut HashMap<u64, usize>) -> usize {
        let Some(v) = alive.min_elem() else { return 0 };
        if let Some(&r) = memo.get(&alive.bits()) {
            return r;
        }
        let skip = self.mis_rec(alive.without(v), memo);
        let take = 1 + self.mis_rec(alive - self.closed_neighborhood(v), memo);
        let best = skip.max(take);
        memo.insert(alive.bits(), best);
        best
    }

    /// Minimum vertex cover size, i.e. the height of the edge ideal.
    pub fn height(&self) -> usize {
        self.n - self.max_independent_set()
    }

    /// All inclusion-minimal vertex covers, canonically sorted. Computed as
    /// complements of maximal independent sets (Bron-Kerbosch on the
    /// complement graph), independently of the transversal enumeration used
    /// on the ideal side.
    pub fn minimal_vertex_covers(&self) -> Vec<VarSet> {
        let mut mis = Vec::new();
        self.bk_independent(
            VarSet::empty(),
            self.vertex_set(),
            VarSet::empty(),
            &mut mis,
        );
        let mut covers: Vec<VarSet> = mis.into_iter().map(|s| s.complement(self.n)).collect();
        covers.sort_by(|a, b| VarSet::cmp_canonical(*a, *b));
        covers
    }

    fn bk_independent(&self, r: VarSet, mut p: VarSet, mut x: VarSet, out: &mut Vec<VarSet>) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let candidates: Vec<usize> = p.iter().collect();
        for v in candidates {
            let nonadj = self.adj[v].complement(self.n).without(v);
            self.bk_independent(r.with(v), p & nonadj, x & nonadj, out);
            p = p.without(v);
            x = x.with(v);
        }
    }

    /// Vertices whose open neighborhood is a clique.
    pub fn simplicial_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.is_clique(self.adj[v])).collect()
    }

    fn is_clique(&self, s: VarSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset_of(self.adj[v]))
    }

    /// Chordality via perfect elimination: repeatedly delete a simplicial
    /// vertex; the graph is chordal iff this empties it.
    pub fn is_chordal(&self) -> bool {
        let mut alive = self.vertex_set();
        while !alive.is_empty() {
            let mut found = None;
            for v in alive.iter() {
                if self.is_clique_within(self.adj[v] & alive, alive) {
                    found = Some(v);
                    break;
                }
            }
            match found {
                Some(v) => alive = alive.without(v),
                None => return false,
            }
        }
        true
    }

    fn is_clique_within(&self, s: VarSet, alive: VarSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset_of(self.adj[v] & alive))
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![-1i8; self.n];
        for start in 0..self.n {
            if color[start] >= 0 {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.adj[v].iter() {
                    if color[u] < 0 {
                        color[u] = 1 - color[v];
                        stack.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = VarSet::singleton(0);
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for u in (self.adj[v] - seen).iter() {
                seen = seen.with(u);
                stack.push(u);
            }
        }
        seen == self.vertex_set()
    }

    pub fn is_cameron_walker(&self) -> bool {
        self.matching_number() == self.induced_matching_number()
    }

    pub fn classify(&self) -> InvariantReport {
        let matching = self.matching_number();
        let ind_matching = self.induced_matching_number();
        let ord_matching = self.ordered_matching_number();
        debug_assert!(ind_matching <= ord_matching && ord_matching <= matching);
        InvariantReport {
            matching,
            ind_matching,
            ord_matching,
            height: self.height(),
            is_bipartite: self.is_bipartite(),
            is_chordal: self.is_chordal(),
            is_cameron_walker: matching == ind_matching,
            is_connected: self.is_connected(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Path,
    Cycle,
    CompleteBipartite,
    Star,
    StarTriangle,
    FromEdges,
}

impl FromStr for GraphFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<GraphFamily> {
        match s {
            "path" => Ok(GraphFamily::Path),
            "cycle" => Ok(GraphFamily::Cycle),
            "kbip" | "complete_bipartite" => Ok(GraphFamily::CompleteBipartite),
            "star" => Ok(GraphFamily::Star),
            "startri" | "star_triangle" => Ok(GraphFamily::StarTriangle),
            "from_edges" => Ok(GraphFamily::FromEdges),
            other => Err(Error::Parameter(format!("unknown graph family '{other}'"))),
        }
    }
}

/// Every graph invariant the verification checks are phrased in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    #[serde(rename = "match")]
    pub matching: usize,
    #[serde(rename = "ind_match")]
    pub ind_matching: usize,
    #[serde(rename = "ord_match")]
    pub ord_matching: usize,
    pub height: usize,
    pub is_bipartite: bool,
    pub is_chordal: bool,
    pub is_cameron_walker: bool,
    pub is_connected: bool,
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "match:             {}", self.matching)?;
        writeln!(f, "ind_match:         {}", self.ind_matching)?;
        writeln!(f, "ord_match:         {}", self.ord_matching)?;
        writeln!(f, "height:            {}", self.height)?;
        writeln!(f, "is_bipartite:      {}", self.is_bipartite)?;
        writeln!(f, "is_chordal:        {}", self.is_chordal)?;
        writeln!(f, "is_cameron_walker: {}", self.is_cameron_walker)?;
        write!(f, "is_connected:      {}", self.is_connected)
    }
}
