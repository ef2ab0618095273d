//! Squarefree monomial ideals and the power / symbolic-power constructions.
//!
//! A squarefree monomial is just its support, so all ideal arithmetic here is
//! set arithmetic on `VarSet` masks. Minimal generating sets are kept as
//! canonically sorted antichains, which makes ideal equality structural
//! equality.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::varset::{VarSet, MAX_VARS};

/// A squarefree monomial `x_A` in an ambient ring with `n` variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SqfMonomial {
    n: usize,
    support: VarSet,
}

impl SqfMonomial {
    pub fn new(n: usize, support: VarSet) -> Result<SqfMonomial> {
        check_ambient(n)?;
        if !support.is_subset_of(VarSet::full(n)) {
            return Err(Error::Parameter(format!(
                "support {support} out of range for {n} variables"
            )));
        }
        Ok(SqfMonomial { n, support })
    }

    /// The monomial `1`.
    pub fn one(n: usize) -> SqfMonomial {
        SqfMonomial { n, support: VarSet::empty() }
    }

    pub fn var(n: usize, i: usize) -> Result<SqfMonomial> {
        SqfMonomial::new(n, VarSet::singleton(i))
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> VarSet {
        self.support
    }

    pub fn degree(&self) -> usize {
        self.support.len()
    }

    pub fn is_one(&self) -> bool {
        self.support.is_empty()
    }

    pub fn divides(&self, other: &SqfMonomial) -> bool {
        self.support.is_subset_of(other.support)
    }

    pub fn lcm(&self, other: &SqfMonomial) -> SqfMonomial {
        SqfMonomial { n: self.n, support: self.support | other.support }
    }
}

impl fmt::Display for SqfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "1");
        }
        for i in self.support.iter() {
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SqfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A general monomial as an exponent vector; only a membership oracle is
/// needed for these, never ideal arithmetic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Monomial> {
        check_ambient(exps.len())?;
        Ok(Monomial { exps })
    }

    pub fn one(n: usize) -> Result<Monomial> {
        Monomial::new(vec![0; n])
    }

    pub fn from_sqf(m: &SqfMonomial) -> Monomial {
        let mut exps = vec![0u32; m.ambient()];
        for i in m.support().iter() {
            exps[i] = 1;
        }
        Monomial { exps }
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    /// Total degree in the variables of `vars`.
    pub fn degree_on(&self, vars: VarSet) -> u64 {
        vars.iter().map(|i| u64::from(self.exps[i])).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> VarSet {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// Multiply by one variable.
    pub fn times_var(mut self, i: usize) -> Monomial {
        self.exps[i] += 1;
        self
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.iter().all(|&e| e == 0) {
            return write!(f, "1");
        }
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "x{i}")?,
                _ => write!(f, "x{i}^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A squarefree monomial ideal, stored by its minimal generators.
///
/// The zero ideal has no generators; the unit ideal is generated by `1`.
/// These are distinct values and several operations refuse one or both.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SqfIdeal {
    n: usize,
    gens: Vec<SqfMonomial>,
}

impl SqfIdeal {
    pub fn zero(n: usize) -> SqfIdeal {
        SqfIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> SqfIdeal {
        SqfIdeal { n, gens: vec![SqfMonomial::one(n)] }
    }

    /// Builds the ideal generated by the given supports, minimalizing and
    /// sorting. An empty list yields the zero ideal.
    pub fn from_supports(n: usize, supports: impl IntoIterator<Item = VarSet>) -> Result<SqfIdeal> {
        check_ambient(n)?;
        let full = VarSet::full(n);
        let mut sets = Vec::new();
        for s in supports {
            if !s.is_subset_of(full) {
                return Err(Error::Parameter(format!(
                    "support {s} out of range for {n} variables"
                )));
            }
            sets.push(s);
        }
        Ok(SqfIdeal { n, gens: minimalize_sets(n, sets) })
    }

    /// Minimalizes an explicit generator list (all in the same ambient ring).
    pub fn minimalize(n: usize, gens: impl IntoIterator<Item = SqfMonomial>) -> Result<SqfIdeal> {
        let mut sets = Vec::new();
        for g in gens {
            if g.ambient() != n {
                return Err(Error::Parameter(format!(
                    "generator ambient {} does not match ideal ambient {n}",
                    g.ambient()
                )));
            }
            sets.push(g.support());
        }
        SqfIdeal::from_supports(n, sets)
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[SqfMonomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Proper means different from the whole ring; the zero ideal is proper.
    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// Membership of a squarefree monomial given by its support.
    pub fn contains_support(&self, s: VarSet) -> bool {
        self.gens.iter().any(|g| g.support().is_subset_of(s))
    }

    /// Membership of a general monomial: some generator divides it.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.contains_support(m.support())
    }

    pub fn sum(&self, other: &SqfIdeal) -> Result<SqfIdeal> {
        self.check_same_ambient(other)?;
        SqfIdeal::from_supports(
            self.n,
            self.gens.iter().chain(&other.gens).map(|g| g.support()),
        )
    }

    pub fn intersect(&self, other: &SqfIdeal) -> Result<SqfIdeal> {
        self.check_same_ambient(other)?;
        let lcms = self
            .gens
            .iter()
            .cartesian_product(&other.gens)
            .map(|(a, b)| a.support() | b.support());
        SqfIdeal::from_supports(self.n, lcms)
    }

    /// Colon by a squarefree monomial. The zero ideal is refused: nothing in
    /// the verified statements ever colons it, so a call like that signals a
    /// caller bug rather than deserving a silent answer.
    pub fn colon(&self, m: &SqfMonomial) -> Result<SqfIdeal> {
        if m.ambient() != self.n {
            return Err(Error::Parameter(format!(
                "monomial ambient {} does not match ideal ambient {}",
                m.ambient(),
                self.n
            )));
        }
        if self.is_zero() {
            return Err(Error::Domain("colon of the zero ideal".into()));
        }
        SqfIdeal::from_supports(self.n, self.gens.iter().map(|g| g.support() - m.support()))
    }

    /// Subideal generated by the generators whose support avoids `vars`.
    pub fn restrict(&self, vars: VarSet) -> Result<SqfIdeal> {
        if !vars.is_subset_of(VarSet::full(self.n)) {
            return Err(Error::Parameter(format!(
                "variable set {vars} out of range for {} variables",
                self.n
            )));
        }
        SqfIdeal::from_supports(
            self.n,
            self.gens
                .iter()
                .map(|g| g.support())
                .filter(|s| (*s & vars).is_empty()),
        )
    }

    /// Minimal primes as variable sets: the inclusion-minimal transversals of
    /// the generator-support hypergraph.
    pub fn minimal_primes(&self) -> Result<Vec<VarSet>> {
        if self.is_zero() {
            return Err(Error::Domain("minimal primes of the zero ideal".into()));
        }
        if self.is_unit() {
            return Err(Error::Domain("minimal primes of the unit ideal".into()));
        }
        let supports: Vec<VarSet> = self.gens.iter().map(|g| g.support()).collect();
        let mut raw = Vec::new();
        transversal_rec(&supports, VarSet::empty(), &mut raw);
        raw.sort_by(|a, b| VarSet::cmp_canonical(*a, *b));
        raw.dedup();
        // drop non-minimal hits; sorting by cardinality makes one pass enough
        let mut minimal: Vec<VarSet> = Vec::new();
        for t in raw {
            if !minimal.iter().any(|m| m.is_subset_of(t)) {
                minimal.push(t);
            }
        }
        Ok(minimal)
    }

    pub fn height(&self) -> Result<usize> {
        Ok(self
            .minimal_primes()?
            .iter()
            .map(|p| p.len())
            .min()
            .expect("proper nonzero ideal has a minimal prime"))
    }

    pub fn generator_degrees(&self) -> Result<DegreeStats> {
        if self.is_zero() {
            return Err(Error::Domain("generator degrees of the zero ideal".into()));
        }
        if self.is_unit() {
            return Err(Error::Domain("generator degrees of the unit ideal".into()));
        }
        let mut multiset = BTreeMap::new();
        for g in &self.gens {
            *multiset.entry(g.degree()).or_insert(0usize) += 1;
        }
        Ok(DegreeStats {
            min: *multiset.keys().next().unwrap(),
            max: *multiset.keys().next_back().unwrap(),
            multiset,
        })
    }

    /// True when all minimal primes share one cardinality.
    pub fn is_unmixed(&self) -> Result<bool> {
        let primes = self.minimal_primes()?;
        Ok(primes.iter().map(|p| p.len()).all_equal())
    }

    fn check_same_ambient(&self, other: &SqfIdeal) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::Parameter(format!(
                "ambient mismatch: {} vs {} variables",
                self.n, other.n
            )))
        }
    }
}

impl fmt::Display for SqfIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for SqfIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub multiset: BTreeMap<usize, usize>,
}

fn check_ambient(n: usize) -> Result<()> {
    if n > MAX_VARS {
        Err(Error::Capability(format!(
            "ambient rings are limited to {MAX_VARS} variables, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// Keeps the minimal supports: sorts canonically and drops every support that
/// contains an earlier kept one.
fn minimalize_sets(_n: usize, mut sets: Vec<VarSet>) -> Vec<SqfMonomial> {
    sets.sort_by(|a, b| VarSet::cmp_canonical(*a, *b));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| k.is_subset_of(s)) {
            kept.push(s);
        }
    }
    kept.into_iter()
        .map(|support| SqfMonomial { n: _n, support })
        .collect()
}

/// Enumerates vertex sets hitting every support; each branch extends by one
/// element of the first unmet support, so every minimal transversal appears.
fn transversal_rec(supports: &[VarSet], hit: VarSet, out: &mut Vec<VarSet>) {
    match supports.iter().find(|s| (**s & hit).is_empty()) {
        None => out.push(hit),
        Some(s) => {
            for v in s.iter() {
                transversal_rec(supports, hit.with(v), out);
            }
        }
    }
}

// -- constructions from graphs and powers ------------------------------------

/// The edge ideal `I(G)`: one degree-2 generator per edge.
pub fn edge_ideal(g: &Graph) -> SqfIdeal {
    SqfIdeal::from_supports(g.n(), g.edges().iter().map(|&(a, b)| VarSet::pair(a, b)))
        .expect("graph vertices fit the ambient cap")
}

/// Squarefree part of the ordinary power: generated by the products of
/// `s`-edge matchings; zero exactly when `s` exceeds the matching number.
pub fn sqf_power(g: &Graph, s: usize) -> Result<SqfIdeal> {
    if s < 1 {
        return Err(Error::Parameter("power exponent must be >= 1".into()));
    }
    let mut products = Vec::new();
    matching_products(g, 0, VarSet::empty(), s, &mut products);
    SqfIdeal::from_supports(g.n(), products)
}

fn matching_products(g: &Graph, idx: usize, used: VarSet, left: usize, out: &mut Vec<VarSet>) {
    if left == 0 {
        out.push(used);
        return;
    }
    if g.edges().len() - idx < left {
        return;
    }
    for k in idx..g.edges().len() {
        let (a, b) = g.edges()[k];
        if used.contains(a) || used.contains(b) {
            continue;
        }
        matching_products(g, k + 1, used.with(a).with(b), left - 1, out);
    }
}

/// Squarefree part of the `s`-th symbolic power of a proper nonzero
/// squarefree ideal.
///
/// A squarefree monomial lies in `P^s` for a monomial prime `P` exactly when
/// at least `s` of its variables lie in `P`, so the wanted supports form a
/// monotone family; a breadth-first scan by increasing cardinality emits its
/// minimal members directly. Returns the zero ideal iff `s` exceeds the
/// height.
pub fn sqf_symbolic(ideal: &SqfIdeal, s: usize) -> Result<SqfIdeal> {
    if s < 1 {
        return Err(Error::Parameter("symbolic exponent must be >= 1".into()));
    }
    if ideal.is_zero() {
        return Err(Error::Domain("symbolic power of the zero ideal".into()));
    }
    if ideal.is_unit() {
        return Err(Error::Domain("symbolic power of the unit ideal".into()));
    }
    let primes = ideal.minimal_primes()?;
    let n = ideal.ambient();
    let member = |a: VarSet| primes.iter().all(|p| (a & *p).len() >= s);
    let mut emitted: Vec<VarSet> = Vec::new();
    for k in s..=n {
        for combo in (0..n).combinations(k) {
            let a: VarSet = combo.into_iter().collect();
            if emitted.iter().any(|e| e.is_subset_of(a)) {
                continue;
            }
            if member(a) {
                emitted.push(a);
            }
        }
    }
    SqfIdeal::from_supports(n, emitted)
}

/// Membership of a general monomial in the `s`-th symbolic power: the degree
/// of `m` in every minimal prime's variables must reach `s`. Non-positive `s`
/// always passes (the symbolic power is the whole ring then).
pub fn symbolic_member(m: &Monomial, ideal: &SqfIdeal, s: i64) -> Result<bool> {
    if m.ambient() != ideal.ambient() {
        return Err(Error::Parameter(format!(
            "monomial ambient {} does not match ideal ambient {}",
            m.ambient(),
            ideal.ambient()
        )));
    }
    if s <= 0 {
        return Ok(true);
    }
    let primes = ideal.minimal_primes()?;
    Ok(primes.iter().all(|p| m.degree_on(*p) >= s as u64))
}
