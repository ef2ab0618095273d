//! Named, executable checks over graph corpora, one per verified statement,
//! plus the conjecture explorer. Every check is a pure function of its graph:
//! it derives the valid exponent range from height / matching data itself,
//! evaluates each applicable instantiation, and reports pass, fail with a
//! witness, or skipped with a machine-readable reason. Identity checks
//! compare fully minimalized canonical ideals, so pass/fail is exact.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::betti::{betti_table, regularity};
use crate::enumerate::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{Graph, InvariantReport};
use crate::graph6::encode_graph6;
use crate::homology::FieldSpec;
use crate::ideal::{edge_ideal, sqf_power, sqf_symbolic, symbolic_member, Monomial, SqfIdeal, SqfMonomial};
use crate::varset::VarSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckId {
    PropZero,
    Del,
    BettiMono,
    Lower,
    ChordColon,
    ChordalBound,
    GenDegree,
    CwEq,
    BipartiteEq,
    IntSec,
    SecColDesc,
    SymOr,
    ColSy,
    TtSym,
    Sym2,
    Po3,
    Conj,
}

impl CheckId {
    pub const ALL: [CheckId; 17] = [
        CheckId::PropZero,
        CheckId::Del,
        CheckId::BettiMono,
        CheckId::Lower,
        CheckId::ChordColon,
        CheckId::ChordalBound,
        CheckId::GenDegree,
        CheckId::CwEq,
        CheckId::BipartiteEq,
        CheckId::IntSec,
        CheckId::SecColDesc,
        CheckId::SymOr,
        CheckId::ColSy,
        CheckId::TtSym,
        CheckId::Sym2,
        CheckId::Po3,
        CheckId::Conj,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckId::PropZero => "chk-prop-zero",
            CheckId::Del => "chk-del",
            CheckId::BettiMono => "chk-betti-mono",
            CheckId::Lower => "chk-lower",
            CheckId::ChordColon => "chk-chordcolon",
            CheckId::ChordalBound => "chk-chordal-bound",
            CheckId::GenDegree => "chk-gen-degree",
            CheckId::CwEq => "chk-cw-eq",
            CheckId::BipartiteEq => "chk-bipartite-eq",
            CheckId::IntSec => "chk-intsec",
            CheckId::SecColDesc => "chk-seccoldesc",
            CheckId::SymOr => "chk-symor",
            CheckId::ColSy => "chk-colsy",
            CheckId::TtSym => "chk-ttsym",
            CheckId::Sym2 => "chk-sym2",
            CheckId::Po3 => "chk-po3",
            CheckId::Conj => "chk-conj",
        }
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<CheckId> {
        CheckId::ALL
            .iter()
            .find(|c| c.as_str() == s)
            .copied()
            .ok_or_else(|| Error::Parameter(format!("unknown check id '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped { reason: String },
}

/// Outcome of one check instantiation on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub graph_id: String,
    pub params: BTreeMap<String, String>,
    #[serde(flatten)]
    pub status: CheckStatus,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn is_pass(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

/// Caller-tunable knobs. A pinned `s` restricts every check to that exponent
/// (after clamping to the valid range); the seed feeds the induced-subgraph
/// sampling of chk-betti-mono.
#[derive(Debug, Clone, Copy, Default)]
pub struct RunParams {
    pub s: Option<usize>,
    pub seed: u64,
}

/// Canonical graph6 identifier; graphs too large to canonicalize keep their
/// given labeling.
pub fn graph_ident(g: &Graph) -> String {
    let canon = canonical_form(g).unwrap_or_else(|_| g.clone());
    encode_graph6(&canon).unwrap_or_else(|_| format!("n{}:m{}", g.n(), g.edge_count()))
}

struct Ctx<'a> {
    g: &'a Graph,
    check: &'static str,
    graph_id: String,
    inv: InvariantReport,
    ideal: SqfIdeal,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Graph, check: CheckId) -> Ctx<'a> {
        Ctx {
            g,
            check: check.as_str(),
            graph_id: graph_ident(g),
            inv: g.classify(),
            ideal: edge_ideal(g),
        }
    }

    fn result(
        &self,
        params: BTreeMap<String, String>,
        status: CheckStatus,
        lhs: String,
        rhs: String,
        witness: Option<String>,
    ) -> CheckResult {
        CheckResult {
            check_id: self.check.to_string(),
            graph_id: self.graph_id.clone(),
            params,
            status,
            lhs,
            rhs,
            witness,
        }
    }

    fn skip(&self, reason: &str) -> CheckResult {
        self.result(
            BTreeMap::new(),
            CheckStatus::Skipped { reason: reason.to_string() },
            String::new(),
            String::new(),
            None,
        )
    }

    fn compare_ideals(
        &self,
        params: BTreeMap<String, String>,
        lhs: &SqfIdeal,
        rhs: &SqfIdeal,
    ) -> CheckResult {
        if lhs == rhs {
            self.result(params, CheckStatus::Pass, lhs.to_string(), rhs.to_string(), None)
        } else {
            let witness = lhs
                .gens()
                .iter()
                .find(|m| !rhs.contains_support(m.support()))
                .map(|m| format!("{m} lies in lhs but not rhs"))
                .or_else(|| {
                    rhs.gens()
                        .iter()
                        .find(|m| !lhs.contains_support(m.support()))
                        .map(|m| format!("{m} lies in rhs but not lhs"))
                })
                .unwrap_or_else(|| "generator lists differ".to_string());
            self.result(
                params,
                CheckStatus::Fail,
                lhs.to_string(),
                rhs.to_string(),
                Some(witness),
            )
        }
    }

    fn compare_bound(
        &self,
        params: BTreeMap<String, String>,
        lhs_label: String,
        lhs: usize,
        rhs_label: String,
        rhs: usize,
        ok: bool,
    ) -> CheckResult {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        let witness = if ok {
            None
        } else {
            Some(format!("{lhs_label} = {lhs} violates {rhs_label} = {rhs}"))
        };
        self.result(
            params,
            status,
            format!("{lhs_label} = {lhs}"),
            format!("{rhs_label} = {rhs}"),
            witness,
        )
    }
}

fn pmap(entries: &[(&str, String)]) -> BTreeMap<String, String> {
    entries.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Valid exponents, intersected with a pinned `s` when present.
fn s_values(rp: &RunParams, lo: usize, hi: usize) -> Vec<usize> {
    match rp.s {
        None => (lo..=hi).collect(),
        Some(t) if t >= lo && t <= hi => vec![t],
        Some(_) => Vec::new(),
    }
}

/// `I(G)^{{s}}` with the edgeless convention: the symbolic power of the zero
/// edge ideal is zero.
fn sym_graph(g: &Graph, s: usize) -> Result<SqfIdeal> {
    let ideal = edge_ideal(g);
    if ideal.is_zero() {
        Ok(SqfIdeal::zero(g.n()))
    } else {
        sqf_symbolic(&ideal, s)
    }
}

/// Colon that propagates the zero ideal instead of erroring; the statements
/// under test are degenerate-but-true there.
fn colon0(ideal: &SqfIdeal, m: &SqfMonomial) -> Result<SqfIdeal> {
    if ideal.is_zero() {
        Ok(ideal.clone())
    } else {
        ideal.colon(m)
    }
}

fn vars_ideal(n: usize, vars: VarSet) -> SqfIdeal {
    SqfIdeal::from_supports(n, vars.iter().map(VarSet::singleton))
        .expect("variables are within the ambient ring")
}

fn reg_q(ideal: &SqfIdeal) -> Result<usize> {
    regularity(ideal, &FieldSpec::rationals())
}

const Q: FieldSpec = FieldSpec::rationals();

pub fn run_check(check: CheckId, g: &Graph, rp: &RunParams) -> Result<Vec<CheckResult>> {
    let ctx = Ctx::new(g, check);
    match check {
        CheckId::PropZero => chk_prop_zero(&ctx, rp),
        CheckId::Del => chk_del(&ctx, rp),
        CheckId::BettiMono => chk_betti_mono(&ctx, rp),
        CheckId::Lower => chk_lower(&ctx, rp),
        CheckId::ChordColon => chk_chordcolon(&ctx, rp),
        CheckId::ChordalBound => chk_chordal_bound(&ctx, rp),
        CheckId::GenDegree => chk_gen_degree(&ctx, rp),
        CheckId::CwEq => chk_cw_eq(&ctx, rp),
        CheckId::BipartiteEq => chk_bipartite_eq(&ctx, rp),
        CheckId::IntSec => chk_intsec(&ctx, rp),
        CheckId::SecColDesc => chk_seccoldesc(&ctx, rp),
        CheckId::SymOr => chk_symor(&ctx, rp),
        CheckId::ColSy => chk_colsy(&ctx, rp),
        CheckId::TtSym => chk_ttsym(&ctx, rp),
        CheckId::Sym2 => chk_sym2(&ctx, rp),
        CheckId::Po3 => chk_po3(&ctx, rp),
        CheckId::Conj => chk_conj(&ctx, rp),
    }
}

/// `I^{{s}}` is nonzero exactly for `s <= height`; unmixed ideals are
/// principal at the top exponent.
fn chk_prop_zero(ctx: &Ctx, rp: &RunParams) -> Result<Vec<CheckResult>> {
    if ctx.g.is_edgeless() {
        return Ok(vec![ctx.skip("no edges")]);
    }
    let ht = ctx.ideal.height()?;
    let mut out = Vec::new();
    for s in s_values(rp, 1, ht + 1) {
        let j = sym_graph(ctx.g, s)?;
        let nonzero = !j.is_zero();
        let expected = s <= ht;
        let ok = nonzero == expected;
        out.push(ctx.result(
            pmap(&[("s", s.to_string())]),
            if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            format!("I^{{{s}}} {}", if nonzero { "nonzero" } else { "zero" }),
            format!("s <= height({ht}) is {expected}"),
            (!ok).then(|| format!("nonzero-ness disagrees with Prop-zero at s = {s}")),
        ));
    }
    if ctx.ideal.is_unmixed()? && rp.s.is_none() {
        let top = sym_graph(ctx.g, ht)?;
        let ok = top.gens().len() == 1;
        out.push(ctx.result(
            pmap(&[("part", "principal".to_string()), ("s", ht.to_string())]),
            if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            format!("I^{{{ht}}} = {top}"),
            "principal ideal".to_string(),
            (!ok).then(|| format!("unmixed ideal has {} generators at top exponent", top.gens().len())),
        ));
    }
    if out.is_empty() {
        out.push(ctx.skip("s out of valid range"));
    }
    Ok(out)
}

/// `I(G)^{{s}} + (x) = I(G \ x)^{{s}} + (x)` for every vertex.
fn chk_del(ctx: &Ctx, rp: &RunParams) -> Result<Vec<CheckResult>> {
    if ctx.g.is_edgeless() {
        return Ok(vec![ctx.skip("no edges")]);
    }
    let n = ctx.g.n();
    let ht = ctx.ideal.height()?;
    let mut out = Vec::new();
    for x in 0..n {
        let xi = vars_ideal(n, VarSet::singleton(x));
        let minus = ctx.g.edges_avoiding(VarSet::singleton(x));
        for s in s_values(rp, 1, ht) {
            let lhs = sym_graph(ctx.g, s)?.sum(&xi)?;
            let rhs = sym_graph(&minus, s)?.sum(&xi)?;
            out.push(ctx.compare_ideals(
                pmap(&[("x", x.to_string()), ("s", s.to_string())]),
                &lhs,
                &rhs,
            ));
        }
    }
    if out.is_empty() {
        out.push(ctx.skip("s out of valid range"));
    }
    Ok(out)
}

/// Graded Betti numbers only grow from an induced subgraph to the graph.
fn chk_betti_mono(ctx: &Ctx, rp: &RunParams) -> Result<Vec<CheckResult>> {
    if ctx.g.is_edgeless() {
        return Ok(vec![ctx.skip("no edges")]);
    }
    let n = ctx.g.n();
    let full = VarSet::full(n);
    let mut candidates: Vec<VarSet> = (1..full.bits())
        .map(VarSet::from_bits)
        .collect();
    const SAMPLE: usize = 20;
    if candidates.len() > 30 {
        // derive the per-graph stream from the suite seed and the graph id so
        // parallel corpus order cannot change the sample
        let mut h = 0xcbf29ce484222325u64;
        for b in ctx.graph_id.bytes() {
            h = (h ^ u64::from(b)).wrapping_mul(0x100000001b3);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(rp.seed ^ h);
        candidates.shuffle(&mut rng);
        candidates.truncate(SAMPLE);
        candidates.sort();
    }
    let mut g_tables: BTreeMap<usize, BTreeMap<(usize, usize), u64>> = BTreeMap::new();
    let mut out = Vec::new();
    for keep in candidates {
        let h = ctx.g.edges_avoiding(keep.complement(n));
        let h_ideal = edge_ideal(&h);
        if h_ideal.is_zero() {
            continue;
        }
        let h_height = h_ideal.height()?;
        for s in s_values(rp, 1, h_height) {
            let h_table = betti_table(&sqf_symbolic(&h_ideal, s)?, &Q)?.ideal_entries();
            if let std::collections::btree_map::Entry::Vacant(slot) = g_tables.entry(s) {
                slot.insert(betti_table(&sym_graph(ctx.g, s)?, &Q)?.ideal_entries());
            }
            let g_table = &g_tables[&s];
            let violation = h_table
                .iter()
                .find(|(key, v)| **v > g_table.get(key).copied().unwrap_or(0));
            let params = pmap(&[("subset", keep.to_string()), ("s", s.to_string())]);
            match violation {
                None => out.push(ctx.result(
                    params,
                    CheckStatus::Pass,
                    format!("beta(I(H)^{{{s}}}) with {} nonzero entries", h_table.len()),
                    "entrywise <= beta(I(G)^{{s}})".to_string(),
                    None,
                )),
                Some(((i, j), v)) => out.push(ctx.result(
                    params,
                    CheckStatus::Fail,
                    format!("beta_{{{i},{j}}}(I(H)^{{{s}}}) = {v}"),
                    format!(
                        "beta_{{{i},{j}}}(I(G)^{{{s}}}) = {}",
                        g_table.get(&(*i, *j)).copied().unwrap_or(0)
                    ),
                    Some(format!("entry ({i},{j}) grows under restriction")),
                )),
            }
        }
    }
    if out.is_empty() {
        out.push(ctx.skip("no induced subgraph with an edge"));
    }
    Ok(out)
}

/// `reg(I^{{s}}) >= s + ind-match` for `s` up to the induced matching number.
fn chk_lower(ctx: &Ctx, rp: &RunParams) -> Result<Vec<CheckResult>> {
    if ctx.g.is_edgeless() {
        return Ok(vec![ctx.skip("no edges")]);
    }
    let im = ctx.inv.ind_matching;
    let mut out = Vec::new();
    for s in s_values(rp, 1, im) {
        let reg = reg_q(&sym_graph(ctx.g, s)?)?;
        out.push(ctx.compare_bound(
            pmap(&[("s", s.to_string())]),
            format!("reg(I^{{{s}}})"),
            reg,
            format!("s + ind-match = {s} + {im}"),
            s + im,
            reg >= s + im,
        ));
    }
    if out.is_empty() {
        out.push(ctx.skip("s out of valid range"));
    }
    Ok(out)
}

/// Colon by the closed neighborhood of a simplicial vertex drops to a
/// smaller graph: `(I^{{s}} : x_{N[x]}) = I(G \ N[x])^{{s - d + 1}}`.
fn chk_chordcolon(ctx: &Ctx, rp: &RunParams) -> Result<Vec<CheckResult>> {
    let n = ctx.g.n();
    let simplicial: Vec<usize> = ctx
        .g
        .simplicial_vertices()
        .into_iter()
        .filter(|&v| ctx.g.degree(v) >= 1)
        .collect();
    if simplicial.is_empty() {
        return Ok(vec![ctx.skip("no simplicial vertex with a neighbor")]);
    }
    let ht = ctx.ideal.height()?;
    let mut out = Vec::new();
    for x in simplicial {
        let closed = ctx.g.closed_neighborhood(x);
        let d = closed.len();
        let m = SqfMonomial::new(n, closed)?;
        for s in s_values(rp, 1, ht) {
            let lhs = sym_graph(ctx.g, s)?.colon(&m)?;
            let rhs = if s + 1 <= d {
                SqfIdeal::unit(n)
            } else {
                sym_graph(&ctx.g.edges_avoiding(closed), s + 1 - d)?
            };
            out.push(ctx.compare_ideals(
                pmap(&[("x", x.to_string()), ("d", d.to_string()), ("s", s.to_string())]),
                &lhs,
                &rhs,
            ));
        }
    }
    if out.is_empty() {
        out.push(ctx.skip("s out of valid range"));
    }
    Ok(out)
}

/// Chordal graphs: `reg(I^{{s}}) <= s + ord-match`.
fn chk_chordal_bound(ctx: &Ctx, rp: &RunParams) -> Result<Vec<CheckResult>> {
    if !ctx.inv.is_chordal {
        return Ok(vec![ctx.skip("graph not chordal")]);
    }
    if ctx.g.is_edgeless() {
        return Ok(vec![ctx.skip("no edges")]);
    }
    let ht = ctx.inv.height;
    let om = ctx.inv.ord_matching;
    let mut out = Vec::new();
    for s in s_values(rp, 1, ht) {
        let reg = reg_q(&sym_graph(ctx.g, s)?)?;
        out.push(ctx.compare_bound(
            pmap(&[("s", s.to_string())]),
            format!("reg(I^{{{s}}})"),
            reg,
            format!("s + ord-match = {s} + {om}"),
            s + om,
            reg <= s + om,
        ));
    }
    if out.is_empty() {
        out.push(ctx.skip("s out of valid range"));
    }
    Ok(out)
}

/// Generator-degree statements: `I^{{ind-match}}` has a generator of degree
/// `2 ind-match` for every graph; Cameron-Walker graphs have one of degree
/// `s + ind-match` for every `ind-match <= s <= height`.
fn chk_gen_degree(ctx: &Ctx, rp: &RunParams) -> Result<Vec<CheckResult>> {
    if ctx.g.is_edgeless() {
        return Ok(vec![ctx.skip("no edges")]);
    }
    let im = ctx.inv.ind_matching;
    let ht = ctx.inv.height;
    let mut out = Vec::new();
    if rp.s.is_none() || rp.s == Some(im) {
        let j = sym_graph(ctx.g, im)?;
        let ok = j.gens().iter().any(|g| g.degree() == 2 * im);
        out.push(ctx.result(
            pmap(&[("part", "genindmatch".to_string()), ("s", im.to_string())]),
            if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            format!("degrees of I^{{{im}}}: {:?}", j.generator_degrees()?.multiset),
            format!("contains degree {}", 2 * im),
            (!ok).then(|| format!("no generator of degree {}", 2 * im)),
        ));
    }
    if ctx.inv.is_cameron_walker {
        for s in s_values(rp, im, ht) {
            let j = sym_graph(ctx.g, s)?;
            let ok = j.gens().iter().any(|g| g.degree() == s + im);
            out.push(ctx.result(
                pmap(&[("part", "gendis".to_string()), ("s", s.to_string())]),
                if ok { CheckStatus::Pass } else { CheckStatus::Fail },
                format!("degrees of I^{{{s}}}: {:?}", j.generator_degrees()?.multiset),
                format!("contains degree {}", s + im),
                (!ok).then(|| format!("no generator of degree {}", s + im)),
            ));
        }
    }
    if out.is_empty() {
        out.push(ctx.skip("s out of valid range"));
    }
    Ok(out)
}

/// Cameron-Walker graphs: `reg(I^{{s}}) = s + ind-match` on the whole range.
fn chk_cw_eq(ctx: &Ctx, rp: &RunParams) -> Result<Vec<CheckResult>> {
    if ctx.g.is_edgeless() {
        return Ok(vec![ctx.skip("no edges")]);
    }
    if !ctx.inv.is_cameron_walker {
        return Ok(vec![ctx.skip("graph not Cameron-Walker")]);
    }
    let im = ctx.inv.ind_matching;
    let ht = ctx.inv.height;
    let mut out = Vec::new();
    for s in s_values(rp, 1, ht) {
        let reg = reg_q(&sym_graph(ctx.g, s)?)?;
        out.push(ctx.compare_bound(
            pmap(&[("s", s.to_string())]),
            format!("reg(I^{{{s}}})"),
            reg,
            format!("s + ind-match = {s} + {im}"),
            s + im,
            reg == s + im,
        ));
    }
    if out.is_empty() {
        out.push(ctx.skip("s out of valid range"));
    }
    Ok(out)
}

/// Bipartite graphs: symbolic and ordinary squarefree parts coincide.
fn chk_bipartite_eq(ctx: &Ctx, rp: &RunParams) -> Result<Vec<CheckResult>> {
    if !ctx.inv.is_bipartite {
        return Ok(vec![ctx.skip("graph not bipartite")]);
    }
    if ctx.g.is_edgeless() {
        return Ok(vec![ctx.skip("no edges")]);
    }
    let mut out = Vec::new();
    for s in s_values(rp, 1, ctx.inv.matching) {
        let lhs = sym_graph(ctx.g, s)?;
        let rhs = sqf_power(ctx.g, s)?;
        out.push(ctx.compare_ideals(pmap(&[("s", s.to_string())]), &lhs, &rhs));
    }
    if out.is_empty() {
        out.push(ctx.skip("s out of valid range"));
    }
    Ok(out)
}

/// `(I^{{s+1}} : x_i x_j)` splits as an intersection over the two deletions.
fn chk_intsec(ctx: &Ctx, rp: &RunParams) -> Result<Vec<CheckResult>> {
    if ctx.g.is_edgeless() {
        return Ok(vec![ctx.skip("no edges")]);
    }
    let n = ctx.g.n();
    let ht = ctx.ideal.height()?;
    if ht < 2 {
        return Ok(vec![ctx.skip("s exceeds height")]);
    }
    let mut out = Vec::new();
    for &(i, j) in ctx.g.edges() {
        let eij = SqfMonomial::new(n, VarSet::pair(i, j))?;
        let xi = SqfMonomial::var(n, i)?;
        let xj = SqfMonomial::var(n, j)?;
        let minus_j = ctx.g.edges_avoiding(VarSet::singleton(j));
        let minus_i = ctx.g.edges_avoiding(VarSet::singleton(i));
        for s in s_values(rp, 1, ht - 1) {
            let lhs = sym_graph(ctx.g, s + 1)?.colon(&eij)?;
            let a = sym_graph(&minus_j, s)?.colon(&xi)?;
            let b = sym_graph(&minus_i, s)?.colon(&xj)?;
            let rhs = a.intersect(&b)?;
            out.push(ctx.compare_ideals(
                pmap(&[("edge", format!("{i}-{j}")), ("s", s.to_string())]),
                &lhs,
                &rhs,
            ));
        }
    }
    if out.is_empty() {
        out.push(ctx.skip("s out of valid range"));
    }
    Ok(out)
}

/// Explicit description of `(I^{{2}} : x_i x_j)`: the deleted graph's edge
/// ideal, cross-neighbor quadrics, and common-neighbor variables.
fn chk_seccoldesc(ctx: &Ctx, rp: &RunParams) -> Result<Vec<CheckResult>> {
    if ctx.g.is_edgeless() {
        return Ok(vec![ctx.skip("no edges")]);
    }
    if rp.s.is_some() && rp.s != Some(2) {
        return Ok(vec![ctx.skip("check is specific to s = 2")]);
    }
    let n = ctx.g.n();
    let mut out = Vec::new();
    for &(i, j) in ctx.g.edges() {
        let eij = SqfMonomial::new(n, VarSet::pair(i, j))?;
        let lhs = colon0(&sym_graph(ctx.g, 2)?, &eij)?;
        let pair = VarSet::pair(i, j);
        let mut supports: Vec<VarSet> = ctx
            .g
            .edges_avoiding(pair)
            .edges()
            .iter()
            .map(|&(a, b)| VarSet::pair(a, b))
            .collect();
        let ni = ctx.g.neighbors(i).without(j);
        let nj = ctx.g.neighbors(j).without(i);
        for p in ni.iter() {
            for q in nj.iter() {
                if p != q {
                    supports.push(VarSet::pair(p, q));
                }
            }
        }
        for t in (ctx.g.neighbors(i) & ctx.g.neighbors(j)).iter() {
            supports.push(VarSet::singleton(t));
        }
        let rhs = SqfIdeal::from_supports(n, supports)?;
        out.push(ctx.compare_ideals(pmap(&[("edge", format!("{i}-{j}"))]), &lhs, &rhs));
    }
    Ok(out)
}

/// Modulo the edge variables, the symbolic colon equals the squarefree one;
/// the left side is rebuilt from the membership oracle.
fn chk_symor(ctx: &Ctx, rp: &RunParams) -> Result<Vec<CheckResult>> {
    if ctx.g.is_edgeless() {
        return Ok(vec![ctx.skip("no edges")]);
    }
    if rp.s.is_some() && rp.s != Some(2) {
        return Ok(vec![ctx.skip("check is specific to s = 2")]);
    }
    let n = ctx.g.n();
    let mut out = Vec::new();
    for &(i, j) in ctx.g.edges() {
        let pair_ideal = vars_ideal(n, VarSet::pair(i, j));
        // minimal squarefree u with u * x_i x_j in I^(2); the family is
        // monotone, so an increasing-cardinality scan emits minimal members
        let mut minimal: Vec<VarSet> = Vec::new();
        let mut by_card: Vec<Vec<VarSet>> = vec![Vec::new(); n + 1];
        for bits in 0u64..(1u64 << n) {
            let s = VarSet::from_bits(bits);
            by_card[s.len()].push(s);
        }
        for level in &by_card {
            for &u in level {
                if minimal.iter().any(|m| m.is_subset_of(u)) {
                    continue;
                }
                let mut mono = Monomial::from_sqf(&SqfMonomial::new(n, u)?);
                mono = mono.times_var(i).times_var(j);
                if symbolic_member(&mono, &ctx.ideal, 2)? {
                    minimal.push(u);
                }
            }
        }
        let lhs = SqfIdeal::from_supports(n, minimal)?.sum(&pair_ideal)?;
        let eij = SqfMonomial::new(n, VarSet::pair(i, j))?;
        let rhs = colon0(&sym_graph(ctx.g, 2)?, &eij)?.sum(&pair_ideal)?;
        out.push(ctx.compare_ideals(pmap(&[("edge", format!("{i}-{j}"))]), &lhs, &rhs));
    }
    Ok(out)
}

/// Colon of `I^{{3}}` by a 2-matching factors through iterated squarefree
/// symbolic colons.
fn chk_colsy(ctx: &Ctx, rp: &RunParams) -> Result<Vec<CheckResult>> {
    if ctx.inv.matching < 2 {
        return Ok(vec![ctx.skip("matching number below 2")]);
    }
    if rp.s.is_some() && rp.s != Some(2) {
        return Ok(vec![ctx.skip("check is specific to s = 2")]);
    }
    let n = ctx.g.n();
    let mut out = Vec::new();
    let edges = ctx.g.edges();
    for (a, &e1) in edges.iter().enumerate() {
        for &e2 in edges.iter().skip(a + 1) {
            let s1 = VarSet::pair(e1.0, e1.1);
            let s2 = VarSet::pair(e2.0, e2.1);
            if !(s1 & s2).is_empty() {
                continue;
            }
            for (first, second) in [(s1, s2), (s2, s1)] {
                let u = SqfMonomial::new(n, first | second)?;
                let m1 = SqfMonomial::new(n, first)?;
                let m2 = SqfMonomial::new(n, second)?;
                let lhs = colon0(&sym_graph(ctx.g, 3)?, &u)?;
                let mid = sym_graph(ctx.g, 2)?.colon(&m1)?;
                let rhs = colon0(&sqf_symbolic(&mid, 2)?, &m2)?;
                out.push(ctx.compare_ideals(
                    pmap(&[
                        ("e1", format!("{}", m1)),
                        ("e2", format!("{}", m2)),
                    ]),
                    &lhs,
                    &rhs,
                ));
            }
        }
    }
    Ok(out)
}

/// `I^{{3}}` sits inside the squarefree part of the ordinary square.
fn chk_ttsym(ctx: &Ctx, rp: &RunParams) -> Result<Vec<CheckResult>> {
    if ctx.g.is_edgeless() {
        return Ok(vec![ctx.skip("no edges")]);
    }
    if rp.s.is_some() && rp.s != Some(3) {
        return Ok(vec![ctx.skip("check is specific to s = 3")]);
    }
    let ht = ctx.ideal.height()?;
    if ht < 3 {
        return Ok(vec![ctx.skip("s exceeds height")]);
    }
    let i3 = sym_graph(ctx.g, 3)?;
    let p2 = sqf_power(ctx.g, 2)?;
    let offender = i3
        .gens()
        .iter()
        .find(|m| !p2.contains_support(m.support()));
    Ok(vec![match offender {
        None => ctx.result(
            BTreeMap::new(),
            CheckStatus::Pass,
            format!("I^{{3}} = {i3}"),
            format!("subset of I^[2] = {p2}"),
            None,
        ),
        Some(m) => ctx.result(
            BTreeMap::new(),
            CheckStatus::Fail,
            format!("I^{{3}} = {i3}"),
            format!("subset of I^[2] = {p2}"),
            Some(format!("{m} is not in I^[2]")),
        ),
    }])
}

/// Second-power bound: `reg(I^{{2}}) <= min(reg(I) + 2, match + 2)`.
fn chk_sym2(ctx: &Ctx, rp: &RunParams) -> Result<Vec<CheckResult>> {
    if ctx.g.is_edgeless() {
        return Ok(vec![ctx.skip("no edges")]);
    }
    if rp.s.is_some() && rp.s != Some(2) {
        return Ok(vec![ctx.skip("check is specific to s = 2")]);
    }
    let ht = ctx.ideal.height()?;
    if ht < 2 {
        return Ok(vec![ctx.skip("s exceeds height")]);
    }
    let reg2 = reg_q(&sym_graph(ctx.g, 2)?)?;
    let reg1 = reg_q(&ctx.ideal)?;
    let bound = (reg1 + 2).min(ctx.inv.matching + 2);
    Ok(vec![ctx.compare_bound(
        pmap(&[("s", "2".to_string())]),
        "reg(I^{{2}})".to_string(),
        reg2,
        format!("min(reg(I)+2, match+2) = min({}, {})", reg1 + 2, ctx.inv.matching + 2),
        bound,
        reg2 <= bound,
    )])
}

/// Third-power bound: `reg(I^{{3}}) <= min(floor(n/2) + 3, reg(I) + 4)`.
fn chk_po3(ctx: &Ctx, rp: &RunParams) -> Result<Vec<CheckResult>> {
    if ctx.g.is_edgeless() {
        return Ok(vec![ctx.skip("no edges")]);
    }
    if rp.s.is_some() && rp.s != Some(3) {
        return Ok(vec![ctx.skip("check is specific to s = 3")]);
    }
    let ht = ctx.ideal.height()?;
    if ht < 3 {
        return Ok(vec![ctx.skip("s exceeds height")]);
    }
    let reg3 = reg_q(&sym_graph(ctx.g, 3)?)?;
    let reg1 = reg_q(&ctx.ideal)?;
    let bound = (ctx.g.n() / 2 + 3).min(reg1 + 4);
    Ok(vec![ctx.compare_bound(
        pmap(&[("s", "3".to_string())]),
        "reg(I^{{3}})".to_string(),
        reg3,
        format!(
            "min(floor(n/2)+3, reg(I)+4) = min({}, {})",
            ctx.g.n() / 2 + 3,
            reg1 + 4
        ),
        bound,
        reg3 <= bound,
    )])
}

/// Open conjecture: `reg(I^{{s}}) <= match + s` whenever `I^{{s}}` is
/// nonzero. Tightness is recorded so the explorer can surface it.
fn chk_conj(ctx: &Ctx, rp: &RunParams) -> Result<Vec<CheckResult>> {
    if ctx.g.is_edgeless() {
        return Ok(vec![ctx.skip("no edges")]);
    }
    let ht = ctx.inv.height;
    let m = ctx.inv.matching;
    let mut out = Vec::new();
    for s in s_values(rp, 1, ht) {
        let reg = reg_q(&sym_graph(ctx.g, s)?)?;
        let bound = m + s;
        let mut params = pmap(&[
            ("s", s.to_string()),
            ("reg", reg.to_string()),
            ("match", m.to_string()),
            ("bound", bound.to_string()),
        ]);
        params.insert("tight".to_string(), (reg == bound).to_string());
        out.push(ctx.compare_bound(
            params,
            format!("reg(I^{{{s}}})"),
            reg,
            format!("match + s = {m} + {s}"),
            bound,
            reg <= bound,
        ));
    }
    if out.is_empty() {
        out.push(ctx.skip("s out of valid range"));
    }
    Ok(out)
}

// -- suites -------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct CheckSummary {
    pub check_id: String,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub failures: Vec<CheckResult>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TightInstance {
    pub graph_id: String,
    pub s: usize,
    pub regularity: usize,
    #[serde(rename = "match")]
    pub matching: usize,
    pub bound: usize,
}

/// Aggregated outcome of a suite run. Serialized field order is fixed.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub corpus: String,
    pub seed: u64,
    pub checks: Vec<CheckSummary>,
    pub wall_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tight: Option<Vec<TightInstance>>,
}

impl Report {
    pub fn total_failures(&self) -> usize {
        self.checks.iter().map(|c| c.fail).sum()
    }

    pub fn summary_lines(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s.push_str(&format!(
                "{:<18} pass={:<6} fail={:<6} skip={}\n",
                c.check_id, c.pass, c.fail, c.skip
            ));
        }
        s
    }
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    let jobs = jobs.or_else(|| {
        std::env::var("EDGEREG_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    match jobs {
        None => Ok(f()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Runs the given checks over the corpus, one graph per parallel task, and
/// aggregates a deterministic report (failures sorted by graph id).
pub fn run_suite(
    graphs: &[Graph],
    checks: &[CheckId],
    corpus: &str,
    rp: &RunParams,
    jobs: Option<usize>,
) -> Result<Report> {
    let start = Instant::now();
    let per_graph: Vec<Vec<CheckResult>> = with_pool(jobs, || {
        graphs
            .par_iter()
            .map(|g| {
                let mut all = Vec::new();
                for &c in checks {
                    all.extend(run_check(c, g, rp)?);
                }
                Ok(all)
            })
            .collect::<Result<Vec<_>>>()
    })??;
    let mut summaries: Vec<CheckSummary> = checks
        .iter()
        .map(|c| CheckSummary {
            check_id: c.as_str().to_string(),
            pass: 0,
            fail: 0,
            skip: 0,
            failures: Vec::new(),
        })
        .collect();
    for results in per_graph {
        for r in results {
            let summary = summaries
                .iter_mut()
                .find(|s| s.check_id == r.check_id)
                .expect("every result comes from a requested check");
            match &r.status {
                CheckStatus::Pass => summary.pass += 1,
                CheckStatus::Fail => {
                    summary.fail += 1;
                    summary.failures.push(r);
                }
                CheckStatus::Skipped { .. } => summary.skip += 1,
            }
        }
    }
    for s in &mut summaries {
        s.failures
            .sort_by(|a, b| (&a.graph_id, &a.params).cmp(&(&b.graph_id, &b.params)));
    }
    Ok(Report {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        corpus: corpus.to_string(),
        seed: rp.seed,
        checks: summaries,
        wall_ms: start.elapsed().as_millis(),
        tight: None,
    })
}

/// Evaluates the conjecture bound across the corpus, reporting every tight
/// instance and any violation. A violation is a reportable discovery: it
/// lands in the failure list but this function never panics over it.
pub fn explore_conjecture(
    graphs: &[Graph],
    max_s: Option<usize>,
    corpus: &str,
    rp: &RunParams,
    jobs: Option<usize>,
) -> Result<Report> {
    let mut report = run_suite(graphs, &[CheckId::Conj], corpus, rp, jobs)?;
    let start = Instant::now();
    let mut tight = Vec::new();
    let per_graph: Vec<Vec<CheckResult>> = with_pool(jobs, || {
        graphs
            .par_iter()
            .map(|g| run_check(CheckId::Conj, g, rp))
            .collect::<Result<Vec<_>>>()
    })??;
    for results in &per_graph {
        for r in results {
            let s: usize = match r.params.get("s").and_then(|v| v.parse().ok()) {
                Some(v) => v,
                None => continue,
            };
            if let Some(cap) = max_s {
                if s > cap {
                    continue;
                }
            }
            if r.params.get("tight").map(String::as_str) == Some("true") && r.is_pass() {
                tight.push(TightInstance {
                    graph_id: r.graph_id.clone(),
                    s,
                    regularity: r.params["reg"].parse().unwrap_or(0),
                    matching: r.params["match"].parse().unwrap_or(0),
                    bound: r.params["bound"].parse().unwrap_or(0),
                });
            }
        }
    }
    tight.sort_by(|a, b| (&a.graph_id, a.s).cmp(&(&b.graph_id, b.s)));
    report.tight = Some(tight);
    report.wall_ms += start.elapsed().as_millis();
    Ok(report)
}
