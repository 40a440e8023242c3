//! Named verification suites: exhaustive lemma checks at fixed small moduli
//! plus seeded randomized agreement tests between independent code paths.
//!
//! Each suite returns a tally rather than panicking, so callers (tests and
//! the command line) can report every violation with a reproduction seed.

use crate::catalog::canonicalize;
use crate::crt::crt_equivalent_check;
use crate::engine::{has_zero_sum_subsequence, has_zero_sum_subsequence_of_length, lift_check};
use crate::error::Result;
use crate::residue::{gcd, units, Modulus, WeightSet};
use crate::sequence::ResidueSequence;

/// SplitMix64: tiny, seedable, and stable across platforms and releases,
/// which keeps reports byte-reproducible for a given seed.
#[derive(Debug, Clone)]
pub struct DetRng {
    state: u64,
}

impl DetRng {
    pub fn new(seed: u64) -> DetRng {
        DetRng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in [0, bound); bound must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    pub fn pick<'a, T>(&mut self, slice: &'a [T]) -> &'a T {
        &slice[self.below(slice.len() as u64) as usize]
    }

    pub fn shuffle<T>(&mut self, slice: &mut [T]) {
        for i in (1..slice.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            slice.swap(i, j);
        }
    }
}

/// Result of one suite run.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: String,
    pub checked: u64,
    pub violations: u64,
    pub first_failure: Option<String>,
}

impl SuiteOutcome {
    fn new(name: impl Into<String>) -> SuiteOutcome {
        SuiteOutcome {
            name: name.into(),
            checked: 0,
            violations: 0,
            first_failure: None,
        }
    }

    pub fn pass(&self) -> bool {
        self.violations == 0 && self.checked > 0
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }
}

/// Visit every multiset of `alphabet` values of length `lo..=hi`
/// (nondecreasing representative order).
fn for_each_multiset(
    alphabet: &[u64],
    lo: usize,
    hi: usize,
    f: &mut impl FnMut(&[u64]),
) {
    fn rec(
        alphabet: &[u64],
        from: usize,
        stack: &mut Vec<u64>,
        lo: usize,
        hi: usize,
        f: &mut impl FnMut(&[u64]),
    ) {
        if stack.len() >= lo {
            f(stack);
        }
        if stack.len() == hi {
            return;
        }
        for i in from..alphabet.len() {
            stack.push(alphabet[i]);
            rec(alphabet, i, stack, lo, hi, f);
            stack.pop();
        }
    }
    rec(alphabet, 0, &mut Vec::new(), lo, hi, f);
}

/// For an odd prime power n: every sequence with at least two terms coprime
/// to p is a full-length unit-weighted zero sum. Exhaustive over divisor
/// profiles up to `max_len` (unit scaling cannot change the predicate, so
/// profiles cover all sequences).
pub fn gri_suite(n: u64, max_len: usize) -> Result<SuiteOutcome> {
    let modulus = crate::residue::factorize(n)?;
    let mut outcome = SuiteOutcome::new(format!("gri n={n}"));
    let weights = WeightSet::all_units(&modulus);
    let divisors = modulus.divisors();
    let mut error = None;
    for_each_multiset(&divisors, 2, max_len, &mut |profile| {
        if error.is_some() {
            return;
        }
        let coprime = profile.iter().filter(|&&d| d == 1).count();
        if coprime < 2 {
            return;
        }
        let terms: Vec<u64> = profile.iter().map(|&d| d % n).collect();
        let seq = ResidueSequence::new(&modulus, terms).unwrap();
        match has_zero_sum_subsequence_of_length(&seq, &weights, seq.len()) {
            Ok(ok) => outcome.record(ok, || format!("profile {profile:?}")),
            Err(e) => error = Some(e),
        }
    });
    if let Some(e) = error {
        return Err(e);
    }
    Ok(outcome)
}

/// For n = 2^r: every sequence with an even number (at least two) of odd
/// terms is a full-length unit-weighted zero sum. Exhaustive over profiles.
pub fn two_r0_suite(n: u64, max_len: usize) -> Result<SuiteOutcome> {
    let modulus = crate::residue::factorize(n)?;
    let mut outcome = SuiteOutcome::new(format!("2r0 n={n}"));
    let weights = WeightSet::all_units(&modulus);
    let divisors = modulus.divisors();
    let mut error = None;
    for_each_multiset(&divisors, 2, max_len, &mut |profile| {
        if error.is_some() {
            return;
        }
        let odd = profile.iter().filter(|&&d| d == 1).count();
        if odd < 2 || odd % 2 != 0 {
            return;
        }
        let terms: Vec<u64> = profile.iter().map(|&d| d % n).collect();
        let seq = ResidueSequence::new(&modulus, terms).unwrap();
        match has_zero_sum_subsequence_of_length(&seq, &weights, seq.len()) {
            Ok(ok) => outcome.record(ok, || format!("profile {profile:?}")),
            Err(e) => error = Some(e),
        }
    });
    if let Some(e) = error {
        return Err(e);
    }
    Ok(outcome)
}

/// For n = 2p: every sequence with an even number of odd terms and not
/// exactly one term coprime to p is a full-length unit-weighted zero sum.
pub fn w_suite(n: u64, max_len: usize) -> Result<SuiteOutcome> {
    let modulus = crate::residue::factorize(n)?;
    let p = n / 2;
    let mut outcome = SuiteOutcome::new(format!("w n={n}"));
    let weights = WeightSet::all_units(&modulus);
    let divisors = modulus.divisors();
    let mut error = None;
    for_each_multiset(&divisors, 1, max_len, &mut |profile| {
        if error.is_some() {
            return;
        }
        // odd residues have gcd class 1 or p; coprime-to-p classes are 1 and 2
        let odd = profile.iter().filter(|&&d| d == 1 || d == p).count();
        let coprime_p = profile.iter().filter(|&&d| d == 1 || d == 2).count();
        if odd % 2 != 0 || coprime_p == 1 {
            return;
        }
        let terms: Vec<u64> = profile.iter().map(|&d| d % n).collect();
        let seq = ResidueSequence::new(&modulus, terms).unwrap();
        match has_zero_sum_subsequence_of_length(&seq, &weights, seq.len()) {
            Ok(ok) => outcome.record(ok, || format!("profile {profile:?}")),
            Err(e) => error = Some(e),
        }
    });
    if let Some(e) = error {
        return Err(e);
    }
    Ok(outcome)
}

const SUITE_MAX_N: u64 = 60;
const SUITE_MAX_LEN: u64 = 12;

/// Randomized implication test for the lifting criterion: whenever
/// `lift_check` accepts, the direct engine must see a full-length zero sum.
pub fn lifts_suite(seed: u64, trials: u64) -> Result<SuiteOutcome> {
    let mut rng = DetRng::new(seed);
    let mut outcome = SuiteOutcome::new("lifts");
    let composites: Vec<u64> = (4..=SUITE_MAX_N)
        .filter(|&n| Modulus::of(n).divisors().len() > 2)
        .collect();
    let mut accepted = 0u64;
    for _ in 0..trials {
        let n = *rng.pick(&composites);
        let modulus = crate::residue::factorize(n)?;
        let proper: Vec<u64> = modulus
            .divisors()
            .into_iter()
            .filter(|&d| d > 1 && d < n)
            .collect();
        let d = *rng.pick(&proper);
        let len = 1 + rng.below(SUITE_MAX_LEN) as usize;
        let terms: Vec<u64> = (0..len).map(|_| d * rng.below(n / d)).collect();
        let seq = ResidueSequence::new(&modulus, terms)?;

        let quotient_modulus = crate::residue::factorize(n / d)?;
        let (weights, quotient_weights) = if rng.below(10) < 7 {
            (
                WeightSet::all_units(&modulus),
                WeightSet::all_units(&quotient_modulus),
            )
        } else {
            // arbitrary weights with an image-respecting projection
            let size = 1 + rng.below(5);
            let ws: Vec<u64> = (0..size).map(|_| rng.below(n)).collect();
            let weights = WeightSet::explicit(&modulus, &ws)?;
            let image: Vec<u64> = weights.realize().iter().map(|&a| a % (n / d)).collect();
            let sub: Vec<u64> = (0..=rng.below(image.len() as u64) as usize)
                .map(|_| *rng.pick(&image))
                .collect();
            (weights, WeightSet::explicit(&quotient_modulus, &sub)?)
        };

        let lifted = lift_check(&seq, d, &weights, &quotient_weights)?;
        if lifted {
            accepted += 1;
            let direct = has_zero_sum_subsequence_of_length(&seq, &weights, seq.len())?;
            outcome.record(direct, || {
                format!("n={n} d={d} terms={:?}", seq.terms())
            });
        } else {
            outcome.record(true, String::new);
        }
    }
    debug_assert!(accepted > 0, "generator produced no positive instances");
    Ok(outcome)
}

/// Randomized agreement between the direct engine and the component-ring
/// decomposition, on both predicates.
pub fn obs_suite(seed: u64, trials: u64) -> Result<SuiteOutcome> {
    let mut rng = DetRng::new(seed);
    let mut outcome = SuiteOutcome::new("obs");
    for _ in 0..trials {
        let n = 2 + rng.below(SUITE_MAX_N - 1);
        let modulus = crate::residue::factorize(n)?;
        let weights = WeightSet::all_units(&modulus);
        let len = 1 + rng.below(SUITE_MAX_LEN) as usize;
        let terms: Vec<u64> = (0..len).map(|_| rng.below(n)).collect();
        let seq = ResidueSequence::new(&modulus, terms)?;
        let window = if rng.below(2) == 0 {
            None
        } else {
            Some(1 + rng.below(len as u64) as usize)
        };
        let via_crt = crt_equivalent_check(&seq, &weights, window)?;
        let direct = match window {
            None => has_zero_sum_subsequence(&seq, &weights),
            Some(l) => has_zero_sum_subsequence_of_length(&seq, &weights, l)?,
        };
        outcome.record(via_crt == direct, || {
            format!("n={n} terms={:?} window={window:?}", seq.terms())
        });
    }
    Ok(outcome)
}

/// Randomized invariance of the predicates and canonical form under
/// termwise unit scaling plus permutation.
pub fn unit_invariance_suite(seed: u64, trials: u64) -> Result<SuiteOutcome> {
    let mut rng = DetRng::new(seed);
    let mut outcome = SuiteOutcome::new("unit-invariance");
    for _ in 0..trials {
        let n = 2 + rng.below(SUITE_MAX_N - 1);
        let modulus = crate::residue::factorize(n)?;
        let weights = WeightSet::all_units(&modulus);
        let us = units(&modulus);
        let len = 1 + rng.below(10) as usize;
        let terms: Vec<u64> = (0..len).map(|_| rng.below(n)).collect();
        let seq = ResidueSequence::new(&modulus, terms.clone())?;

        let mut scaled: Vec<u64> = terms.iter().map(|&x| rng.pick(&us) * x % n).collect();
        rng.shuffle(&mut scaled);
        let twin = ResidueSequence::new(&modulus, scaled)?;

        let l = 1 + rng.below(len as u64) as usize;
        let same_any =
            has_zero_sum_subsequence(&seq, &weights) == has_zero_sum_subsequence(&twin, &weights);
        let same_len = has_zero_sum_subsequence_of_length(&seq, &weights, l)?
            == has_zero_sum_subsequence_of_length(&twin, &weights, l)?;
        let same_profile = canonicalize(&seq, &weights)? == canonicalize(&twin, &weights)?;
        outcome.record(same_any && same_len && same_profile, || {
            format!("n={n} terms={:?} twin={:?}", seq.terms(), twin.terms())
        });
    }
    Ok(outcome)
}

/// Small raw-sequence sanity layer under the profile-exhaustive suites:
/// checks the same lemma directly on every raw sequence up to `max_len`.
pub fn gri_raw_suite(n: u64, max_len: usize) -> Result<SuiteOutcome> {
    let modulus = crate::residue::factorize(n)?;
    let mut outcome = SuiteOutcome::new(format!("gri-raw n={n}"));
    let weights = WeightSet::all_units(&modulus);
    let p = modulus.factors()[0].0;
    let mut terms = Vec::new();
    let mut error = None;
    fn rec(
        n: u64,
        p: u64,
        modulus: &Modulus,
        weights: &WeightSet,
        terms: &mut Vec<u64>,
        max_len: usize,
        outcome: &mut SuiteOutcome,
        error: &mut Option<crate::error::Error>,
    ) {
        if error.is_some() {
            return;
        }
        if terms.len() >= 2 {
            let coprime = terms.iter().filter(|&&t| gcd(t, p) == 1).count();
            if coprime >= 2 {
                let seq = ResidueSequence::new(modulus, terms.clone()).unwrap();
                match has_zero_sum_subsequence_of_length(&seq, weights, seq.len()) {
                    Ok(ok) => outcome.record(ok, || format!("terms {terms:?}")),
                    Err(e) => *error = Some(e),
                }
            }
        }
        if terms.len() == max_len {
            return;
        }
        for t in 0..n {
            terms.push(t);
            rec(n, p, modulus, weights, terms, max_len, outcome, error);
            terms.pop();
        }
    }
    rec(
        n,
        p,
        &modulus,
        &weights,
        &mut terms,
        max_len,
        &mut outcome,
        &mut error,
    );
    if let Some(e) = error {
        return Err(e);
    }
    Ok(outcome)
}
