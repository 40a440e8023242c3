//! Decision procedures for weighted zero-sum subsequences.
//!
//! The core question: given a sequence S over Z_n and a weight set A, is
//! there a nonempty selection of indices I and weights a_i in A with
//! sum a_i * x_i = 0 (mod n)? Either unconstrained, or with |I| fixed.
//!
//! Everything here is a direct dynamic program over achievable sums. The
//! structural shortcuts proved elsewhere in the library (CRT splitting,
//! lifting) are deliberately *not* consulted: these procedures serve as the
//! ground truth the shortcuts are validated against.

use crate::bitset::SumSet;
use crate::error::{Error, Result};
use crate::residue::{orbit_of, WeightSet};
use crate::sequence::ResidueSequence;

/// Sums reachable from a single term: {a * x : a in A}.
pub fn reachable_sums(x: u64, weights: &WeightSet) -> Vec<u64> {
    orbit_of(x, weights)
}

/// Per-count sum feasibility. `rows[c]` holds every residue expressible as a
/// weighted sum over exactly `c` of the terms pushed so far; row 0 starts as
/// the singleton {0}.
#[derive(Debug, Clone)]
pub struct FeasibilityTable {
    n: usize,
    processed: usize,
    rows: Vec<SumSet>,
}

impl FeasibilityTable {
    pub fn new(n: u64, max_count: usize) -> FeasibilityTable {
        let n = n as usize;
        let mut rows = Vec::with_capacity(max_count + 1);
        rows.push(SumSet::singleton(n, 0));
        for _ in 0..max_count {
            rows.push(SumSet::empty(n));
        }
        FeasibilityTable {
            n,
            processed: 0,
            rows,
        }
    }

    pub fn max_count(&self) -> usize {
        self.rows.len() - 1
    }

    /// Extend every row by one term whose reachable sums are `orbit`.
    pub fn push_term(&mut self, orbit: &[u64]) {
        let top = self.processed.min(self.max_count() - 1);
        for c in (0..=top).rev() {
            let (lo, hi) = self.rows.split_at_mut(c + 1);
            for &o in orbit {
                hi[0].or_rotated(&lo[c], o as usize);
            }
        }
        self.processed += 1;
    }

    pub fn achievable(&self, count: usize, sum: u64) -> bool {
        self.rows[count].contains(sum as usize % self.n)
    }

    pub fn row(&self, count: usize) -> &SumSet {
        &self.rows[count]
    }
}

/// A concrete zero-sum selection: strictly increasing indices into the
/// sequence plus one weight per selected index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSelection {
    pub indices: Vec<usize>,
    pub weights: Vec<u64>,
}

impl WitnessSelection {
    /// Re-evaluate the selection against the sequence it was extracted from.
    pub fn validate(&self, seq: &ResidueSequence, weights: &WeightSet) -> bool {
        if self.indices.is_empty() || self.indices.len() != self.weights.len() {
            return false;
        }
        if self.indices.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        if *self.indices.last().unwrap() >= seq.len() {
            return false;
        }
        if self.weights.iter().any(|&a| !weights.contains(a)) {
            return false;
        }
        let n = seq.n();
        let sum = self
            .indices
            .iter()
            .zip(&self.weights)
            .fold(0u64, |acc, (&i, &a)| (acc + a * seq.terms()[i]) % n);
        sum == 0
    }
}

/// Does S have any nonempty A-weighted zero-sum subsequence?
pub fn has_zero_sum_subsequence(seq: &ResidueSequence, weights: &WeightSet) -> bool {
    let n = seq.n() as usize;
    let mut reach = SumSet::empty(n);
    let mut next = SumSet::empty(n);
    for &x in seq.terms() {
        next.clone_from_set(&reach);
        for &o in &orbit_of(x, weights) {
            next.insert(o as usize);
            next.or_rotated(&reach, o as usize);
        }
        reach.clone_from_set(&next);
        if reach.contains(0) {
            return true;
        }
    }
    false
}

/// Does S have an A-weighted zero-sum subsequence of length exactly `len`?
pub fn has_zero_sum_subsequence_of_length(
    seq: &ResidueSequence,
    weights: &WeightSet,
    len: usize,
) -> Result<bool> {
    if len == 0 || len > seq.len() {
        return Err(Error::LengthOutOfRange {
            len,
            max: seq.len(),
        });
    }
    let mut table = FeasibilityTable::new(seq.n(), len);
    for &x in seq.terms() {
        table.push_term(&orbit_of(x, weights));
    }
    Ok(table.achievable(len, 0))
}

/// Smallest weight in A sending x to the orbit element o.
fn weight_for(x: u64, o: u64, realized: &[u64], n: u64) -> u64 {
    *realized
        .iter()
        .find(|&&a| a * x % n == o)
        .expect("orbit element must be reachable by some weight")
}

/// Extract a witness for the unconstrained predicate, if one exists.
pub fn find_zero_sum_subsequence(
    seq: &ResidueSequence,
    weights: &WeightSet,
) -> Option<WitnessSelection> {
    let n = seq.n();
    let k = seq.len();
    let mut snapshots: Vec<SumSet> = Vec::with_capacity(k + 1);
    snapshots.push(SumSet::empty(n as usize));
    let orbits: Vec<Vec<u64>> = seq.terms().iter().map(|&x| orbit_of(x, weights)).collect();
    for i in 0..k {
        let mut next = snapshots[i].clone();
        for &o in &orbits[i] {
            next.insert(o as usize);
            next.or_rotated(&snapshots[i], o as usize);
        }
        snapshots.push(next);
    }
    if !snapshots[k].contains(0) {
        return None;
    }

    let realized = weights.realize();
    let mut picked: Vec<(usize, u64)> = Vec::new();
    let mut s = 0u64;
    for i in (0..k).rev() {
        if snapshots[i].contains(s as usize) {
            continue;
        }
        // The bit for s appeared with term i, so either term i alone
        // produces s, or it extends an earlier partial sum.
        let mut extended = false;
        for &o in &orbits[i] {
            let prev = (s + n - o) % n;
            if snapshots[i].contains(prev as usize) {
                picked.push((i, o));
                s = prev;
                extended = true;
                break;
            }
        }
        if !extended {
            debug_assert!(orbits[i].contains(&s));
            picked.push((i, s));
            s = 0;
            break;
        }
    }
    debug_assert_eq!(s, 0);
    picked.reverse();
    let witness = WitnessSelection {
        indices: picked.iter().map(|&(i, _)| i).collect(),
        weights: picked
            .iter()
            .map(|&(i, o)| weight_for(seq.terms()[i], o, &realized, n))
            .collect(),
    };
    debug_assert!(witness.validate(seq, weights));
    Some(witness)
}

/// Extract a witness of length exactly `len`, if one exists.
pub fn find_zero_sum_subsequence_of_length(
    seq: &ResidueSequence,
    weights: &WeightSet,
    len: usize,
) -> Result<Option<WitnessSelection>> {
    if len == 0 || len > seq.len() {
        return Err(Error::LengthOutOfRange {
            len,
            max: seq.len(),
        });
    }
    let n = seq.n();
    let k = seq.len();
    let orbits: Vec<Vec<u64>> = seq.terms().iter().map(|&x| orbit_of(x, weights)).collect();
    let mut snapshots: Vec<FeasibilityTable> = Vec::with_capacity(k + 1);
    snapshots.push(FeasibilityTable::new(n, len));
    for i in 0..k {
        let mut next = snapshots[i].clone();
        next.push_term(&orbits[i]);
        snapshots.push(next);
    }
    if !snapshots[k].achievable(len, 0) {
        return Ok(None);
    }

    let realized = weights.realize();
    let mut picked: Vec<(usize, u64)> = Vec::new();
    let mut s = 0u64;
    let mut c = len;
    for i in (0..k).rev() {
        if c == 0 {
            break;
        }
        if snapshots[i].achievable(c, s) {
            continue;
        }
        let mut advanced = false;
        for &o in &orbits[i] {
            let prev = (s + n - o) % n;
            if snapshots[i].achievable(c - 1, prev) {
                picked.push((i, o));
                s = prev;
                c -= 1;
                advanced = true;
                break;
            }
        }
        debug_assert!(advanced, "count bit must come from the previous row");
    }
    debug_assert_eq!(c, 0);
    debug_assert_eq!(s, 0);
    picked.reverse();
    let witness = WitnessSelection {
        indices: picked.iter().map(|&(i, _)| i).collect(),
        weights: picked
            .iter()
            .map(|&(i, o)| weight_for(seq.terms()[i], o, &realized, n))
            .collect(),
    };
    debug_assert!(witness.validate(seq, weights));
    Ok(Some(witness))
}

/// Lifting criterion: divide every term of S by a common divisor d of n,
/// reduce into Z_{n/d}, and test the quotient sequence for a full-length
/// weighted zero sum with the projected weights A'. A positive answer
/// implies S itself is an A-weighted zero-sum sequence over Z_n.
///
/// Requires A' to be contained in the image of A under Z_n -> Z_{n/d}.
pub fn lift_check(
    seq: &ResidueSequence,
    d: u64,
    weights: &WeightSet,
    quotient_weights: &WeightSet,
) -> Result<bool> {
    let n = seq.n();
    if d == 0 || d >= n || n % d != 0 {
        return Err(Error::NonDivisor { m: d, n });
    }
    let n_prime = n / d;
    if quotient_weights.modulus().n() != n_prime {
        return Err(Error::ModulusShape {
            n: quotient_weights.modulus().n(),
            expected: "weight set over Z_{n/d}",
        });
    }
    // Image containment. Units always survive reduction to a divisor
    // modulus, so the all-units/all-units case needs no materialization.
    if !(weights.is_all_units() && quotient_weights.is_all_units()) {
        let image: std::collections::BTreeSet<u64> =
            weights.realize().iter().map(|&a| a % n_prime).collect();
        if !quotient_weights
            .realize()
            .iter()
            .all(|a| image.contains(a))
        {
            return Err(Error::WeightImageMismatch);
        }
    }
    let quotient = seq.divide_down(d)?;
    if quotient.is_empty() {
        return Ok(false);
    }
    let len = quotient.len();
    has_zero_sum_subsequence_of_length(&quotient, quotient_weights, len)
}
