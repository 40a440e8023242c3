//! Exact computation of the weighted Davenport and Gao constants.
//!
//! Both constants are established by exhausting the canonical search space
//! of term-class multisets:
//!
//! * For the full unit group, scaling a term by a unit never changes any
//!   zero-sum predicate, so a sequence may be replaced by the multiset of
//!   gcd classes (divisors) of its terms.
//! * For a proper unit subgroup A, the same holds with A-orbits in place of
//!   gcd classes. Other weight sets fall back to raw residue multisets,
//!   which is still lossless because the predicates ignore term order.
//!
//! Zero terms never help a Davenport witness (a zero alone is a zero sum)
//! and are handled analytically in the Gao search: a multiset W of nonzero
//! classes extends to a free sequence W + 0^z exactly while z stays below
//! n minus the largest zero-sum selection size in W (and below n).

use crate::engine;
use crate::error::{Error, Result};
use crate::residue::{orbit_of, orbit_representatives, Modulus, WeightSet};
use crate::search::{davenport_profile_search, gao_profile_search, Budgeted, ClassAlphabet};
pub use crate::search::{Budget, SearchStats};
use crate::sequence::ResidueSequence;

/// Nonzero term classes for the search, ascending by representative.
pub(crate) fn class_alphabet_for(weights: &WeightSet) -> ClassAlphabet {
    let n = weights.modulus().n();
    let reps: Vec<u64> = if weights.is_all_units() {
        weights
            .modulus()
            .divisors()
            .into_iter()
            .filter(|&d| d < n)
            .collect()
    } else if weights.is_unit_subgroup() {
        orbit_representatives(weights)
            .expect("subgroup checked")
            .into_iter()
            .filter(|&r| r != 0)
            .collect()
    } else {
        (1..n).collect()
    };
    reps.into_iter()
        .map(|r| (r, orbit_of(r, weights)))
        .collect()
}

/// Lexicographic order on full profiles (class stack plus trailing zero
/// classes, which sort as n).
fn profile_less(a: (&[u64], usize), b: (&[u64], usize), n: u64) -> bool {
    let len_a = a.0.len() + a.1;
    let len_b = b.0.len() + b.1;
    let at = |p: (&[u64], usize), i: usize| -> u64 {
        if i < p.0.len() {
            p.0[i]
        } else {
            n
        }
    };
    for i in 0..len_a.min(len_b) {
        let (x, y) = (at(a, i), at(b, i));
        if x != y {
            return x < y;
        }
    }
    len_a < len_b
}

#[derive(Debug, Clone)]
pub struct DavenportResult {
    pub davenport: u64,
    /// A longest sequence with no weighted zero-sum subsequence.
    pub witness: ResidueSequence,
    pub stats: SearchStats,
}

#[derive(Debug, Clone)]
pub struct GaoResult {
    pub gao: u64,
    /// A longest sequence with no weighted zero-sum subsequence of length n.
    pub witness: ResidueSequence,
    pub stats: SearchStats,
}

/// Constants plus certifying witnesses for one modulus and weight set.
#[derive(Debug, Clone)]
pub struct ConstantsRecord {
    pub modulus: Modulus,
    pub weights: WeightSet,
    pub davenport: u64,
    pub gao: u64,
    pub davenport_witness: ResidueSequence,
    pub gao_witness: ResidueSequence,
    pub stats: SearchStats,
}

/// The least k such that every length-k sequence has a weighted zero-sum
/// subsequence: one more than the longest free multiset the exhaustive
/// search finds.
pub fn davenport_constant(
    modulus: &Modulus,
    weights: &WeightSet,
    budget: &Budget,
) -> Result<DavenportResult> {
    let n = modulus.n();
    if n > budget.davenport_n_ceiling {
        return Err(Error::ModulusOutOfRange {
            n,
            limit: budget.davenport_n_ceiling,
        });
    }
    let alphabet = class_alphabet_for(weights);
    // Free sequences are shorter than n for any nonempty weight set (a
    // single fixed weight already forces a zero sum by then), so a cap of
    // n + slack can only be hit if that bound is wrong.
    let cap = n as usize + budget.depth_slack;
    let mut tracker = Budgeted::new(budget);
    let mut best: (usize, Vec<u64>) = (0, Vec::new());
    let cap_hit = davenport_profile_search(n, &alphabet, cap, &mut tracker, |stack| {
        if stack.len() > best.0
            || (stack.len() == best.0 && profile_less((stack, 0), (&best.1, 0), n))
        {
            best = (stack.len(), stack.to_vec());
        }
    })?;
    if cap_hit {
        return Err(Error::DepthCapExceeded { n, cap });
    }
    let witness = ResidueSequence::new(modulus, best.1)?;
    debug_assert!(!engine::has_zero_sum_subsequence(&witness, weights));
    Ok(DavenportResult {
        davenport: best.0 as u64 + 1,
        witness,
        stats: tracker.stats(),
    })
}

fn realize_profile(modulus: &Modulus, classes: &[u64], zeros: usize) -> Result<ResidueSequence> {
    let mut terms: Vec<u64> = classes.to_vec();
    terms.extend(std::iter::repeat(0).take(zeros));
    ResidueSequence::new(modulus, terms)
}

/// Largest zero-sum selection size recorded in `zero_lens`, clamped to
/// sizes that a length-n window could use.
fn max_usable_zero_len(zero_lens: u128, t: usize, n: u64) -> usize {
    let limit = (n as usize).min(t);
    let masked = zero_lens & (((1u128 << (limit + 1)) - 1) & !1);
    if masked == 0 {
        0
    } else {
        127 - masked.leading_zeros() as usize
    }
}

/// The least k such that every length-k sequence has a weighted zero-sum
/// subsequence of length exactly n.
pub fn gao_constant(modulus: &Modulus, weights: &WeightSet, budget: &Budget) -> Result<GaoResult> {
    let n = modulus.n();
    if n > budget.gao_n_ceiling || n > 120 {
        return Err(Error::ModulusOutOfRange {
            n,
            limit: budget.gao_n_ceiling.min(120),
        });
    }
    let alphabet = class_alphabet_for(weights);
    let cap = if weights.is_all_units() {
        n as usize + modulus.big_omega() as usize + budget.depth_slack
    } else {
        2 * n as usize + budget.depth_slack
    };
    let mut tracker = Budgeted::new(budget);
    // best = (total length, nonzero classes, zero count)
    let mut best: (usize, Vec<u64>, usize) = (0, Vec::new(), 0);
    let cap_hit = gao_profile_search(n, &alphabet, cap, &mut tracker, |stack, zero_lens| {
        let t = stack.len();
        let max_zero_len = max_usable_zero_len(zero_lens, t, n);
        // Adding a zero extends every zero-sum selection by padding, so the
        // zero run must stay short enough that no selection reaches size n.
        let zeros = n as usize - 1 - max_zero_len;
        let total = t + zeros;
        if total > best.0
            || (total == best.0 && profile_less((stack, zeros), (&best.1, best.2), n))
        {
            best = (total, stack.to_vec(), zeros);
        }
    })?;
    if cap_hit {
        return Err(Error::DepthCapExceeded { n, cap });
    }
    let witness = realize_profile(modulus, &best.1, best.2)?;
    debug_assert!(
        !engine::has_zero_sum_subsequence_of_length(&witness, weights, n as usize).unwrap()
    );
    Ok(GaoResult {
        gao: best.0 as u64 + 1,
        witness,
        stats: tracker.stats(),
    })
}

/// Compute both constants with their witnesses.
pub fn constants_record(
    modulus: &Modulus,
    weights: &WeightSet,
    budget: &Budget,
) -> Result<ConstantsRecord> {
    let d = davenport_constant(modulus, weights, budget)?;
    let g = gao_constant(modulus, weights, budget)?;
    Ok(ConstantsRecord {
        modulus: modulus.clone(),
        weights: weights.clone(),
        davenport: d.davenport,
        gao: g.gao,
        davenport_witness: d.witness,
        gao_witness: g.witness,
        stats: SearchStats {
            nodes: d.stats.nodes + g.stats.nodes,
            elapsed: d.stats.elapsed + g.stats.elapsed,
        },
    })
}

/// Cross-check of the two constants for the full unit group: the Gao
/// constant should exceed the Davenport constant by n - 1, and should equal
/// n plus the number of prime factors of n counted with multiplicity.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub n: u64,
    pub davenport: u64,
    pub gao: u64,
    /// gao == davenport + n - 1, both sides computed by separate searches.
    pub additive_identity_holds: bool,
    /// gao == n + big_omega(n).
    pub unit_formula_holds: bool,
    pub stats: SearchStats,
}

impl IdentityReport {
    pub fn pass(&self) -> bool {
        self.additive_identity_holds && self.unit_formula_holds
    }
}

pub fn verify_identities(modulus: &Modulus, budget: &Budget) -> Result<IdentityReport> {
    let weights = WeightSet::all_units(modulus);
    let record = constants_record(modulus, &weights, budget)?;
    let n = modulus.n();
    Ok(IdentityReport {
        n,
        davenport: record.davenport,
        gao: record.gao,
        additive_identity_holds: record.gao == record.davenport + n - 1,
        unit_formula_holds: record.gao == n + modulus.big_omega() as u64,
        stats: record.stats,
    })
}
