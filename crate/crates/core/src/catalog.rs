//! Extremal sequences up to weighted equivalence.
//!
//! Two sequences are A-equivalent when one maps to the other by a global
//! unit, a permutation, and termwise weights from A. For the full unit
//! group the sorted multiset of gcd classes (divisors of n, with n standing
//! for the zero term) is a complete invariant; for a proper unit subgroup
//! the canonical form is the lexicographically least member of the orbit.

use std::collections::BTreeSet;

use crate::engine;
use crate::error::{Error, Result};
use crate::residue::{gcd, orbit_of, units, Modulus, WeightSet};
use crate::search::{davenport_profile_search, gao_profile_search, Budgeted};
use crate::solver::{self, Budget, SearchStats};
use crate::sequence::ResidueSequence;

/// Canonical form of an equivalence class.
///
/// For the full unit group the entries are divisors of n sorted ascending
/// (a zero term is stored as n). For a proper unit subgroup they are the
/// lexicographically least residue multiset in the class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalProfile {
    n: u64,
    entries: Vec<u64>,
}

impl CanonicalProfile {
    pub fn from_entries(modulus: &Modulus, mut entries: Vec<u64>) -> CanonicalProfile {
        entries.sort_unstable();
        CanonicalProfile {
            n: modulus.n(),
            entries,
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The deterministic representative: each entry taken literally as a
    /// residue (entry n becomes the zero term).
    pub fn representative(&self, modulus: &Modulus) -> ResidueSequence {
        let terms: Vec<u64> = self.entries.iter().map(|&d| d % self.n).collect();
        ResidueSequence::new(modulus, terms).expect("entries reduce into range")
    }
}

/// Canonical form of `seq` under A-equivalence. A must be a unit subgroup.
pub fn canonicalize(seq: &ResidueSequence, weights: &WeightSet) -> Result<CanonicalProfile> {
    if !weights.is_unit_subgroup() {
        return Err(Error::NotUnitSubgroup);
    }
    let n = seq.n();
    if weights.is_all_units() {
        let entries: Vec<u64> = seq
            .terms()
            .iter()
            .map(|&x| if x == 0 { n } else { gcd(x, n) })
            .collect();
        return Ok(CanonicalProfile::from_entries(seq.modulus(), entries));
    }
    // Proper subgroup: sweep the global unit, reduce each term to its
    // A-orbit minimum, and keep the least sorted multiset.
    let orbit_min: Vec<u64> = (0..n)
        .map(|x| orbit_of(x, weights)[0])
        .collect();
    let mut best: Option<Vec<u64>> = None;
    for u in units(seq.modulus()) {
        let mut cand: Vec<u64> = seq
            .terms()
            .iter()
            .map(|&x| orbit_min[(u * x % n) as usize])
            .collect();
        cand.sort_unstable();
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    Ok(CanonicalProfile {
        n,
        entries: best.unwrap_or_default(),
    })
}

/// Equality of canonical forms; sequences must have equal length.
pub fn are_equivalent(
    left: &ResidueSequence,
    right: &ResidueSequence,
    weights: &WeightSet,
) -> Result<bool> {
    if left.len() != right.len() {
        return Err(Error::LengthMismatch {
            left: left.len(),
            right: right.len(),
        });
    }
    Ok(canonicalize(left, weights)? == canonicalize(right, weights)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantKind {
    Gao,
    Davenport,
}

#[derive(Debug, Clone)]
pub struct CatalogClass {
    pub profile: CanonicalProfile,
    pub representative: ResidueSequence,
}

/// Every extremal class for one constant, with verified representatives.
#[derive(Debug, Clone)]
pub struct ExtremalCatalog {
    pub modulus: Modulus,
    pub kind: ConstantKind,
    /// The constant itself (the representatives have length constant - 1).
    pub constant: u64,
    pub classes: Vec<CatalogClass>,
    pub stats: SearchStats,
}

impl ExtremalCatalog {
    pub fn profiles(&self) -> Vec<&CanonicalProfile> {
        self.classes.iter().map(|c| &c.profile).collect()
    }
}

fn class_stack_to_profile(
    modulus: &Modulus,
    weights: &WeightSet,
    stack: &[u64],
    zeros: usize,
) -> Result<CanonicalProfile> {
    let n = modulus.n();
    if weights.is_all_units() {
        let mut entries = stack.to_vec();
        entries.extend(std::iter::repeat(n).take(zeros));
        Ok(CanonicalProfile::from_entries(modulus, entries))
    } else {
        let mut terms = stack.to_vec();
        terms.extend(std::iter::repeat(0).take(zeros));
        canonicalize(&ResidueSequence::new(modulus, terms)?, weights)
    }
}

/// All Gao-extremal classes: sequences of length E - 1 with no weighted
/// zero-sum subsequence of length n, up to A-equivalence. Complete over the
/// canonical space; every emitted representative is re-verified against the
/// engine.
pub fn enumerate_gao_extremal(
    modulus: &Modulus,
    weights: &WeightSet,
    budget: &Budget,
) -> Result<ExtremalCatalog> {
    if !weights.is_unit_subgroup() {
        return Err(Error::NotUnitSubgroup);
    }
    let n = modulus.n();
    let gao = solver::gao_constant(modulus, weights, budget)?;
    let target = (gao.gao - 1) as usize;

    let alphabet = solver::class_alphabet_for(weights);
    let mut tracker = Budgeted::new(budget);
    let mut found: BTreeSet<CanonicalProfile> = BTreeSet::new();
    let mut emit_error: Option<Error> = None;
    gao_profile_search(n, &alphabet, target, &mut tracker, |stack, zero_lens| {
        if emit_error.is_some() {
            return;
        }
        let t = stack.len();
        let zeros = target - t;
        if zeros as u64 > n - 1 {
            return;
        }
        // A window of length n takes c nonzero terms plus n - c zeros, so
        // every selection size in [n - zeros, min(n, t)] must be absent.
        let lo = (n as usize).saturating_sub(zeros).max(1);
        let hi = (n as usize).min(t);
        if lo <= hi {
            let window = (((1u128 << (hi + 1)) - 1) ^ ((1u128 << lo) - 1)) & zero_lens;
            if window != 0 {
                return;
            }
        }
        match class_stack_to_profile(modulus, weights, stack, zeros) {
            Ok(profile) => {
                found.insert(profile);
            }
            Err(e) => emit_error = Some(e),
        }
    })?;
    if let Some(e) = emit_error {
        return Err(e);
    }

    let mut classes = Vec::with_capacity(found.len());
    for profile in found {
        let representative = profile.representative(modulus);
        let free =
            !engine::has_zero_sum_subsequence_of_length(&representative, weights, n as usize)?;
        debug_assert!(free, "search emitted a non-extremal candidate");
        if free {
            classes.push(CatalogClass {
                profile,
                representative,
            });
        }
    }
    let mut stats = tracker.stats();
    stats.nodes += gao.stats.nodes;
    stats.elapsed += gao.stats.elapsed;
    Ok(ExtremalCatalog {
        modulus: modulus.clone(),
        kind: ConstantKind::Gao,
        constant: gao.gao,
        classes,
        stats,
    })
}

/// All Davenport-extremal classes: sequences of length D - 1 with no
/// weighted zero-sum subsequence at all, up to A-equivalence.
pub fn enumerate_davenport_extremal(
    modulus: &Modulus,
    weights: &WeightSet,
    budget: &Budget,
) -> Result<ExtremalCatalog> {
    if !weights.is_unit_subgroup() {
        return Err(Error::NotUnitSubgroup);
    }
    let n = modulus.n();
    let dav = solver::davenport_constant(modulus, weights, budget)?;
    let target = (dav.davenport - 1) as usize;

    let alphabet = solver::class_alphabet_for(weights);
    let mut tracker = Budgeted::new(budget);
    let mut found: BTreeSet<CanonicalProfile> = BTreeSet::new();
    let mut emit_error: Option<Error> = None;
    davenport_profile_search(n, &alphabet, target, &mut tracker, |stack| {
        if emit_error.is_some() || stack.len() != target {
            return;
        }
        match class_stack_to_profile(modulus, weights, stack, 0) {
            Ok(profile) => {
                found.insert(profile);
            }
            Err(e) => emit_error = Some(e),
        }
    })?;
    if let Some(e) = emit_error {
        return Err(e);
    }

    let mut classes = Vec::with_capacity(found.len());
    for profile in found {
        let representative = profile.representative(modulus);
        let free = !engine::has_zero_sum_subsequence(&representative, weights);
        debug_assert!(free, "search emitted a non-extremal candidate");
        if free {
            classes.push(CatalogClass {
                profile,
                representative,
            });
        }
    }
    let mut stats = tracker.stats();
    stats.nodes += dav.stats.nodes;
    stats.elapsed += dav.stats.elapsed;
    Ok(ExtremalCatalog {
        modulus: modulus.clone(),
        kind: ConstantKind::Davenport,
        constant: dav.davenport,
        classes,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residue::factorize;

    fn seq(n: u64, terms: &[u64]) -> ResidueSequence {
        ResidueSequence::new(&factorize(n).unwrap(), terms.to_vec()).unwrap()
    }

    fn all_units(n: u64) -> WeightSet {
        WeightSet::all_units(&factorize(n).unwrap())
    }

    #[test]
    fn canonicalize_examples() {
        let s = seq(8, &[1, 2, 4, 4, 4, 0, 0, 0, 0, 0]);
        let p = canonicalize(&s, &all_units(8)).unwrap();
        assert_eq!(p.entries(), &[1, 2, 4, 4, 4, 8, 8, 8, 8, 8]);

        let p6 = canonicalize(&seq(6, &[5, 3, 0]), &all_units(6)).unwrap();
        assert_eq!(p6.entries(), &[1, 3, 6]);

        let empty = canonicalize(&seq(6, &[]), &all_units(6)).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn equivalence_examples() {
        let w = all_units(6);
        assert!(are_equivalent(&seq(6, &[1, 3, 0]), &seq(6, &[5, 3, 0]), &w).unwrap());
        let s = seq(6, &[2, 3, 1]);
        assert!(are_equivalent(&s, &s, &w).unwrap());
        let w8 = all_units(8);
        assert!(!are_equivalent(
            &seq(8, &[1, 2, 0]),
            &seq(8, &[1, 4, 0]),
            &w8
        )
        .unwrap());
        assert!(matches!(
            are_equivalent(&seq(6, &[1]), &seq(6, &[1, 2]), &w),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn canonicalize_requires_subgroup() {
        let m = factorize(12).unwrap();
        let not_group = WeightSet::explicit(&m, &[5]).unwrap();
        let s = seq(12, &[1, 2]);
        assert!(matches!(
            canonicalize(&s, &not_group),
            Err(Error::NotUnitSubgroup)
        ));
    }

    #[test]
    fn canonicalize_proper_subgroup_orbit_constant() {
        let m = factorize(8).unwrap();
        let w = WeightSet::explicit(&m, &[1, 7]).unwrap();
        let a = seq(8, &[3, 2, 0]);
        // scale by the global unit 3 and flip signs termwise
        let b = seq(8, &[1, 6, 0]); // 3*3=9=1, 3*2=6, permuted
        assert!(are_equivalent(&a, &b, &w).unwrap());
    }

    #[test]
    fn gao_catalog_z8_matches_known_list() {
        let m = factorize(8).unwrap();
        let cat = enumerate_gao_extremal(&m, &all_units(8), &Budget::default()).unwrap();
        assert_eq!(cat.constant, 11);
        let profiles: Vec<&[u64]> = cat.classes.iter().map(|c| c.profile.entries()).collect();
        assert_eq!(
            profiles,
            vec![
                &[1, 2, 4, 4, 4, 4, 4, 4, 4, 8][..],
                &[1, 2, 4, 4, 4, 4, 4, 8, 8, 8][..],
                &[1, 2, 4, 4, 4, 8, 8, 8, 8, 8][..],
                &[1, 2, 4, 8, 8, 8, 8, 8, 8, 8][..],
            ]
        );
    }

    #[test]
    fn gao_catalog_small_cases() {
        let m2 = factorize(2).unwrap();
        let cat = enumerate_gao_extremal(&m2, &all_units(2), &Budget::default()).unwrap();
        assert_eq!(cat.classes.len(), 1);
        assert_eq!(cat.classes[0].profile.entries(), &[1, 2]);
        assert_eq!(cat.classes[0].representative.terms(), &[1, 0]);

        // Chain classes for a product of two odd primes: the leading term
        // only needs to avoid the first prime, so {3,5} appears alongside
        // {1,3} and {1,5}.
        let m15 = factorize(15).unwrap();
        let cat = enumerate_gao_extremal(&m15, &all_units(15), &Budget::default()).unwrap();
        let heads: Vec<&[u64]> = cat
            .classes
            .iter()
            .map(|c| &c.profile.entries()[..2])
            .collect();
        assert_eq!(heads, vec![&[1, 3][..], &[1, 5][..], &[3, 5][..]]);
        for class in &cat.classes {
            assert_eq!(class.profile.entries()[2..], vec![15u64; 14][..]);
        }
    }

    #[test]
    fn davenport_catalog_small_cases() {
        let m15 = factorize(15).unwrap();
        let cat = enumerate_davenport_extremal(&m15, &all_units(15), &Budget::default()).unwrap();
        let profiles: Vec<&[u64]> = cat.classes.iter().map(|c| c.profile.entries()).collect();
        assert_eq!(profiles, vec![&[1, 3][..], &[1, 5][..], &[3, 5][..]]);

        let m4 = factorize(4).unwrap();
        let cat = enumerate_davenport_extremal(&m4, &all_units(4), &Budget::default()).unwrap();
        let profiles: Vec<&[u64]> = cat.classes.iter().map(|c| c.profile.entries()).collect();
        assert_eq!(profiles, vec![&[1, 2][..]]);

        let m30 = factorize(30).unwrap();
        let cat = enumerate_davenport_extremal(&m30, &all_units(30), &Budget::default()).unwrap();
        assert!(cat
            .classes
            .iter()
            .any(|c| c.profile.entries() == [1, 3, 5]));
    }

    #[test]
    fn appending_any_class_breaks_extremality() {
        for n in [6u64, 8, 9] {
            let m = factorize(n).unwrap();
            let w = all_units(n);
            let cat = enumerate_gao_extremal(&m, &w, &Budget::default()).unwrap();
            for class in &cat.classes {
                for d in m.divisors() {
                    let mut terms = class.representative.terms().to_vec();
                    terms.push(d % n);
                    let extended = ResidueSequence::new(&m, terms).unwrap();
                    assert!(
                        engine::has_zero_sum_subsequence_of_length(&extended, &w, n as usize)
                            .unwrap(),
                        "n={n} profile={:?} d={d}",
                        class.profile.entries()
                    );
                }
            }
            let dav = enumerate_davenport_extremal(&m, &w, &Budget::default()).unwrap();
            for class in &dav.classes {
                for d in m.divisors() {
                    let mut terms = class.representative.terms().to_vec();
                    terms.push(d % n);
                    let extended = ResidueSequence::new(&m, terms).unwrap();
                    assert!(
                        engine::has_zero_sum_subsequence(&extended, &w),
                        "n={n} profile={:?} d={d}",
                        class.profile.entries()
                    );
                }
            }
        }
    }

    #[test]
    fn catalog_is_deterministic() {
        let m = factorize(12).unwrap();
        let w = all_units(12);
        let a = enumerate_gao_extremal(&m, &w, &Budget::default()).unwrap();
        let b = enumerate_gao_extremal(&m, &w, &Budget::default()).unwrap();
        let pa: Vec<_> = a.classes.iter().map(|c| c.profile.clone()).collect();
        let pb: Vec<_> = b.classes.iter().map(|c| c.profile.clone()).collect();
        assert_eq!(pa, pb);
    }
}
