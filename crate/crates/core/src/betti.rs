//! Graded Betti numbers and Castelnuovo-Mumford regularity of squarefree
//! monomial ideals, computed through Hochster's formula:
//!
//! `beta_{i,j}(S/J) = sum over |W| = j of dim H~_{j-i-1}(D(J)|_W)`
//!
//! where `D(J)` is the Stanley-Reisner complex. The table is kept for the
//! quotient `S/J`; Betti numbers of the ideal itself are the shift
//! `beta_{i,j}(J) = beta_{i+1,j}(S/J)`, fixed here once so no downstream
//! check can be off by one.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::homology::{reduced_betti, stanley_reisner, FieldSpec};
use crate::ideal::SqfIdeal;
use crate::varset::VarSet;

/// The Hochster scan walks all `2^n` vertex subsets.
const MAX_HOCHSTER_VARS: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    field: FieldSpec,
    quotient: BTreeMap<(usize, usize), u64>,
    reg_quotient: usize,
    reg_ideal: usize,
}

impl BettiTable {
    /// `beta_{i,j}(S/J)`.
    pub fn beta_quotient(&self, i: usize, j: usize) -> u64 {
        self.quotient.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `beta_{i,j}(J) = beta_{i+1,j}(S/J)`.
    pub fn beta_ideal(&self, i: usize, j: usize) -> u64 {
        self.beta_quotient(i + 1, j)
    }

    pub fn quotient_entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.quotient
    }

    pub fn ideal_entries(&self) -> BTreeMap<(usize, usize), u64> {
        self.quotient
            .iter()
            .filter(|((i, _), _)| *i >= 1)
            .map(|(&(i, j), &v)| ((i - 1, j), v))
            .collect()
    }

    pub fn reg_quotient(&self) -> usize {
        self.reg_quotient
    }

    pub fn reg_ideal(&self) -> usize {
        self.reg_ideal
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.n
    }
}

impl fmt::Display for BettiTable {
    /// Betti diagram of `S/J`: row `r` column `i` holds `beta_{i,i+r}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max_i = self.quotient.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let max_r = self.reg_quotient;
        write!(f, "{:>6}", "")?;
        for i in 0..=max_i {
            write!(f, "{i:>6}")?;
        }
        writeln!(f)?;
        for r in 0..=max_r {
            write!(f, "{r:>5}:")?;
            for i in 0..=max_i {
                let v = self.beta_quotient(i, i + r);
                if v == 0 {
                    write!(f, "{:>6}", ".")?;
                } else {
                    write!(f, "{v:>6}")?;
                }
            }
            writeln!(f)?;
        }
        write!(
            f,
            "reg(S/J) = {}, reg(J) = {}  over {}",
            self.reg_quotient, self.reg_ideal, self.field
        )
    }
}

/// Full graded Betti table of `S/J` for a proper nonzero squarefree ideal.
pub fn betti_table(ideal: &SqfIdeal, field: &FieldSpec) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::Domain("Betti table of the zero ideal".into()));
    }
    if ideal.is_unit() {
        return Err(Error::Domain("Betti table of the unit ideal".into()));
    }
    let n = ideal.ambient();
    if n > MAX_HOCHSTER_VARS {
        return Err(Error::Capability(format!(
            "Hochster scan over 2^{n} subsets is infeasible; ambient is capped at {MAX_HOCHSTER_VARS} variables"
        )));
    }
    let complex = stanley_reisner(ideal)?;
    // scan by increasing |W|; each W contributes independently so the merge
    // below only needs to be commutative
    let masks: Vec<VarSet> = (0u64..(1u64 << n))
        .map(VarSet::from_bits)
        .sorted_by_key(|w| w.len())
        .collect();
    let quotient = masks
        .par_iter()
        .fold(
            BTreeMap::<(usize, usize), u64>::new,
            |mut acc, &w| {
                let dims = reduced_betti(&complex, w, field);
                let j = w.len();
                for (idx, &h) in dims.iter().enumerate() {
                    if h > 0 {
                        // dimension d = idx - 1 contributes to i = j - idx
                        acc.entry((j - idx, j))
                            .and_modify(|v| *v += h as u64)
                            .or_insert(h as u64);
                    }
                }
                acc
            },
        )
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let reg_quotient = quotient
        .keys()
        .map(|&(i, j)| j - i)
        .max()
        .expect("beta_{0,0} = 1 for a proper nonzero ideal");
    Ok(BettiTable {
        n,
        field: *field,
        quotient,
        reg_quotient,
        reg_ideal: reg_quotient + 1,
    })
}

/// Regularity of the ideal itself (`reg(S/J) + 1`).
pub fn regularity(ideal: &SqfIdeal, field: &FieldSpec) -> Result<usize> {
    Ok(betti_table(ideal, field)?.reg_ideal())
}
