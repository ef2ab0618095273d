//! Stanley-Reisner complexes and exact reduced simplicial homology.
//!
//! Complexes are stored by their facet list. The empty face is a face of
//! every nonvoid complex, so chain complexes here are augmented and homology
//! is reduced: the irrelevant complex `{∅}` has `H~_{-1}` of dimension 1.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::SqfIdeal;
use crate::linalg::{is_prime, rank, IntMatrix};
use crate::varset::VarSet;

/// Coefficient field: characteristic 0 (exact rationals) or a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const fn rationals() -> FieldSpec {
        FieldSpec { characteristic: 0 }
    }

    pub fn prime(p: u32) -> Result<FieldSpec> {
        if is_prime(p) {
            Ok(FieldSpec { characteristic: p })
        } else {
            Err(Error::Parameter(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::rationals()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic == 0 {
            write!(f, "Q")
        } else {
            write!(f, "GF({})", self.characteristic)
        }
    }
}

/// A simplicial complex on vertices `0..n-1`, stored as its facet antichain.
/// The void complex (no faces) and the irrelevant complex (only the empty
/// face) are distinct values.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    pub fn void(n: usize) -> SimplicialComplex {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn irrelevant(n: usize) -> SimplicialComplex {
        SimplicialComplex { n, facets: vec![VarSet::empty()] }
    }

    pub fn full_simplex(n: usize) -> SimplicialComplex {
        SimplicialComplex { n, facets: vec![VarSet::full(n)] }
    }

    /// Builds a complex from candidate facets, keeping the maximal ones.
    pub fn from_facets(n: usize, facets: impl IntoIterator<Item = VarSet>) -> Result<SimplicialComplex> {
        let full = VarSet::full(n);
        let mut sets = Vec::new();
        for s in facets {
            if !s.is_subset_of(full) {
                return Err(Error::Parameter(format!(
                    "facet {s} out of range for {n} vertices"
                )));
            }
            sets.push(s);
        }
        sets.sort_by(|a, b| VarSet::cmp_canonical(*a, *b));
        sets.dedup();
        let mut maximal: Vec<VarSet> = Vec::new();
        for s in &sets {
            if !sets.iter().any(|t| *s != *t && s.is_subset_of(*t)) {
                maximal.push(*s);
            }
        }
        Ok(SimplicialComplex { n, facets: maximal })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_face(&self, face: VarSet) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// All faces contained in `within`, grouped by cardinality and sorted.
    fn faces_within(&self, within: VarSet) -> Vec<Vec<VarSet>> {
        let mut seen: BTreeSet<u64> = BTreeSet::new();
        for f in &self.facets {
            for sub in (*f & within).subsets() {
                seen.insert(sub.bits());
            }
        }
        let mut by_card: Vec<Vec<VarSet>> = vec![Vec::new(); within.len() + 1];
        for bits in seen {
            let s = VarSet::from_bits(bits);
            by_card[s.len()].push(s);
        }
        by_card
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets={:?})", self.n, self.facets)
    }
}

/// Stanley-Reisner complex of a proper squarefree ideal: the faces are the
/// supports no generator divides. Facets are exactly the complements of the
/// minimal primes; the zero ideal gives the full simplex.
pub fn stanley_reisner(ideal: &SqfIdeal) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::Domain("Stanley-Reisner complex of the unit ideal".into()));
    }
    let n = ideal.ambient();
    if ideal.is_zero() {
        return Ok(SimplicialComplex::full_simplex(n));
    }
    let facets = ideal
        .minimal_primes()?
        .into_iter()
        .map(|p| p.complement(n));
    SimplicialComplex::from_facets(n, facets)
}

/// Dimensions of the reduced homology of the restriction `c|_W` over the
/// given field, indexed from dimension -1: entry `k` is `dim H~_{k-1}`.
/// The returned vector has length `|W| + 1`; the void restriction is all
/// zeros.
pub fn reduced_betti(complex: &SimplicialComplex, within: VarSet, field: &FieldSpec) -> Vec<usize> {
    let levels = within.len() + 1;
    let faces = complex.faces_within(within);
    if faces.iter().all(|lvl| lvl.is_empty()) {
        return vec![0; levels];
    }
    // boundary matrix from cardinality c to c-1; level 0 maps to nothing
    let mut ranks = vec![0usize; levels + 1];
    for c in 1..levels {
        let (lower, upper) = (&faces[c - 1], &faces[c]);
        if lower.is_empty() || upper.is_empty() {
            continue;
        }
        let mut m = IntMatrix::zeros(lower.len(), upper.len());
        for (col, face) in upper.iter().enumerate() {
            for (pos, v) in face.iter().enumerate() {
                let sub = face.without(v);
                let row = lower
                    .binary_search(&sub)
                    .expect("face families are downward closed");
                m.set(row, col, if pos % 2 == 0 { 1 } else { -1 });
            }
        }
        ranks[c] = rank(&m, field.characteristic());
    }
    let dims: Vec<usize> = (0..levels)
        .map(|c| faces[c].len() - ranks[c] - ranks[c + 1])
        .collect();
    debug_assert!(euler_balance(&faces, &dims), "reduced Euler characteristic mismatch");
    dims
}

/// Alternating sums of face counts and homology dimensions must agree.
fn euler_balance(faces: &[Vec<VarSet>], dims: &[usize]) -> bool {
    let mut f_sum = 0i64;
    let mut h_sum = 0i64;
    for c in 0..dims.len() {
        let sign = if c % 2 == 0 { 1 } else { -1 };
        f_sum += sign * faces[c].len() as i64;
        h_sum += sign * dims[c] as i64;
    }
    f_sum == h_sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::edge_ideal;
    use crate::graph::Graph;

    fn vs(items: &[usize]) -> VarSet {
        items.iter().copied().collect()
    }

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn field_spec_validates() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(4).is_err());
        assert_eq!(FieldSpec::rationals().to_string(), "Q");
        assert_eq!(FieldSpec::prime(2).unwrap().to_string(), "GF(2)");
    }

    #[test]
    fn stanley_reisner_examples() {
        let k3 = edge_ideal(&Graph::cycle(3).unwrap());
        let c = stanley_reisner(&k3).unwrap();
        // independence complex of the triangle: three isolated vertices
        assert_eq!(c.facets(), &[vs(&[0]), vs(&[1]), vs(&[2])]);
        assert!(c.is_face(VarSet::empty()));
        assert!(!c.is_face(vs(&[0, 1])));

        let hollow = SqfIdeal::from_supports(3, [vs(&[0, 1, 2])]).unwrap();
        let c = stanley_reisner(&hollow).unwrap();
        assert_eq!(c.facets(), &[vs(&[0, 1]), vs(&[0, 2]), vs(&[1, 2])]);

        let full = stanley_reisner(&SqfIdeal::zero(3)).unwrap();
        assert_eq!(full.facets(), &[vs(&[0, 1, 2])]);

        assert!(stanley_reisner(&SqfIdeal::unit(2)).is_err());
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        let hollow = SimplicialComplex::from_facets(
            3,
            [vs(&[0, 1]), vs(&[0, 2]), vs(&[1, 2])],
        )
        .unwrap();
        let dims = reduced_betti(&hollow, VarSet::full(3), &q());
        assert_eq!(dims, vec![0, 0, 1, 0]);
    }

    #[test]
    fn contractible_and_degenerate_cases() {
        let full = SimplicialComplex::full_simplex(3);
        for w in VarSet::full(3).subsets() {
            let dims = reduced_betti(&full, w, &q());
            if w.is_empty() {
                assert_eq!(dims, vec![1]);
            } else {
                assert!(dims.iter().all(|&d| d == 0));
            }
        }

        let irrelevant = SimplicialComplex::irrelevant(2);
        assert_eq!(reduced_betti(&irrelevant, VarSet::full(2), &q()), vec![1, 0, 0]);

        let void = SimplicialComplex::void(2);
        assert_eq!(reduced_betti(&void, VarSet::full(2), &q()), vec![0, 0, 0]);

        let two_points = SimplicialComplex::from_facets(2, [vs(&[0]), vs(&[1])]).unwrap();
        assert_eq!(reduced_betti(&two_points, VarSet::full(2), &q()), vec![0, 1, 0]);
    }

    #[test]
    fn cones_vanish() {
        // cone over the hollow triangle: apex 3 joined to every facet
        let cone = SimplicialComplex::from_facets(
            4,
            [vs(&[0, 1, 3]), vs(&[0, 2, 3]), vs(&[1, 2, 3])],
        )
        .unwrap();
        let dims = reduced_betti(&cone, VarSet::full(4), &q());
        assert!(dims.iter().all(|&d| d == 0));
        // restricting away the apex brings the circle back
        let dims = reduced_betti(&cone, vs(&[0, 1, 2]), &q());
        assert_eq!(dims, vec![0, 0, 1, 0]);
    }

    #[test]
    fn characteristic_two_detects_torsion() {
        // minimal 6-vertex triangulation of the real projective plane:
        // every edge lies in exactly two of these ten triangles
        let rp2 = [
            [0, 1, 3], [0, 1, 5], [0, 2, 4], [0, 2, 5], [0, 3, 4],
            [1, 2, 3], [1, 2, 4], [1, 4, 5], [2, 3, 5], [3, 4, 5],
        ];
        let c = SimplicialComplex::from_facets(
            6,
            rp2.iter().map(|f| f.iter().copied().collect::<VarSet>()),
        )
        .unwrap();
        let over_q = reduced_betti(&c, VarSet::full(6), &q());
        let over_f2 = reduced_betti(&c, VarSet::full(6), &FieldSpec::prime(2).unwrap());
        assert_eq!(over_q, vec![0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(over_f2, vec![0, 0, 1, 1, 0, 0, 0]);
    }

    #[test]
    fn from_facets_keeps_maximal_only() {
        let c = SimplicialComplex::from_facets(3, [vs(&[0]), vs(&[0, 1])]).unwrap();
        assert_eq!(c.facets(), &[vs(&[0, 1])]);
        assert!(SimplicialComplex::from_facets(2, [vs(&[5])]).is_err());
    }
}
