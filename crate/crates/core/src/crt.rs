//! Prime-power decomposition of the zero-sum predicates.
//!
//! A full sequence is a unit-weighted zero sum over Z_n exactly when each of
//! its images in the prime-power component rings Z_{p^{v_p(n)}} is one, with
//! the unit weights chosen independently per component. This module decides
//! the subsequence predicates entirely inside the product of component
//! rings — mixed-radix state indexing, per-ring orbits, no arithmetic mod n —
//! so it shares no code path with the direct engine and can be paired
//! against it as an oracle.

use crate::error::{Error, Result};
use crate::residue::{gcd, Modulus, WeightSet};
use crate::sequence::ResidueSequence;

struct ProductSpace {
    /// Component moduli p^{v_p(n)}, in prime order.
    rings: Vec<u64>,
    /// Mixed-radix strides; state = sum coord_j * stride_j.
    strides: Vec<u64>,
    /// Total number of states (= n).
    size: usize,
}

impl ProductSpace {
    fn new(modulus: &Modulus) -> ProductSpace {
        let rings: Vec<u64> = modulus
            .factors()
            .iter()
            .map(|&(p, e)| p.pow(e))
            .collect();
        let mut strides = Vec::with_capacity(rings.len());
        let mut acc = 1u64;
        for &m in &rings {
            strides.push(acc);
            acc *= m;
        }
        ProductSpace {
            rings,
            strides,
            size: acc as usize,
        }
    }

    fn encode(&self, coords: &[u64]) -> usize {
        coords
            .iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c * s)
            .sum::<u64>() as usize
    }

    /// The unit orbit of x inside component ring m: all y with
    /// gcd(y, m) = gcd(x mod m, m).
    fn component_orbit(m: u64, x: u64) -> Vec<u64> {
        let x = x % m;
        let d = gcd(x, m);
        if d == m {
            return vec![0];
        }
        (1..=m / d)
            .filter(|&t| gcd(t, m / d) == 1)
            .map(|t| d * t % m)
            .collect()
    }

    /// For one term, the state permutations "add (o_1, ..., o_r)" over every
    /// tuple of per-component orbit elements.
    fn term_shifts(&self, x: u64) -> Vec<Vec<u32>> {
        let orbits: Vec<Vec<u64>> = self
            .rings
            .iter()
            .map(|&m| Self::component_orbit(m, x))
            .collect();
        let mut tuples: Vec<Vec<u64>> = vec![Vec::new()];
        for orbit in &orbits {
            let mut next = Vec::with_capacity(tuples.len() * orbit.len());
            for t in &tuples {
                for &o in orbit {
                    let mut t2 = t.clone();
                    t2.push(o);
                    next.push(t2);
                }
            }
            tuples = next;
        }
        tuples
            .into_iter()
            .map(|tuple| {
                let mut map = vec![0u32; self.size];
                let mut coords = vec![0u64; self.rings.len()];
                for (state, slot) in map.iter_mut().enumerate() {
                    // decode, add, re-encode
                    let mut rem = state as u64;
                    for (j, &m) in self.rings.iter().enumerate() {
                        coords[j] = (rem % m + tuple[j]) % m;
                        rem /= m;
                    }
                    *slot = self.encode(&coords) as u32;
                }
                map
            })
            .collect()
    }
}

/// Decide the unit-weighted zero-sum subsequence predicate by working in the
/// product of prime-power component rings. `len` of `None` asks for any
/// nonempty subsequence; `Some(l)` for one of length exactly l.
///
/// Agrees with `has_zero_sum_subsequence(_of_length)` for the full unit
/// group; only unit weights are accepted.
pub fn crt_equivalent_check(
    seq: &ResidueSequence,
    weights: &WeightSet,
    len: Option<usize>,
) -> Result<bool> {
    if !weights.is_all_units() {
        return Err(Error::UnitWeightsRequired);
    }
    if let Some(l) = len {
        if l == 0 || l > seq.len() {
            return Err(Error::LengthOutOfRange {
                len: l,
                max: seq.len(),
            });
        }
    }
    let space = ProductSpace::new(seq.modulus());
    debug_assert_eq!(space.size as u64, seq.n());

    match len {
        Some(l) => {
            let mut rows: Vec<Vec<bool>> = vec![vec![false; space.size]; l + 1];
            rows[0][0] = true;
            for (t, &x) in seq.terms().iter().enumerate() {
                let shifts = space.term_shifts(x);
                let top = t.min(l - 1);
                for c in (0..=top).rev() {
                    let (lo, hi) = rows.split_at_mut(c + 1);
                    for map in &shifts {
                        for state in 0..space.size {
                            if lo[c][state] {
                                hi[0][map[state] as usize] = true;
                            }
                        }
                    }
                }
            }
            Ok(rows[l][0])
        }
        None => {
            let mut reach = vec![false; space.size];
            for &x in seq.terms() {
                let shifts = space.term_shifts(x);
                let prev = reach.clone();
                for map in &shifts {
                    // the term by itself
                    reach[map[0] as usize] = true;
                    // the term extending an earlier nonempty selection
                    for state in 0..space.size {
                        if prev[state] {
                            reach[map[state] as usize] = true;
                        }
                    }
                }
                if reach[0] {
                    return Ok(true);
                }
            }
            Ok(reach[0])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{has_zero_sum_subsequence, has_zero_sum_subsequence_of_length};
    use crate::residue::factorize;

    fn seq(n: u64, terms: &[u64]) -> ResidueSequence {
        ResidueSequence::new(&factorize(n).unwrap(), terms.to_vec()).unwrap()
    }

    #[test]
    fn single_prime_reduces_to_direct() {
        let s = seq(9, &[1, 2]);
        let w = WeightSet::all_units(s.modulus());
        assert!(crt_equivalent_check(&s, &w, None).unwrap());
        assert!(crt_equivalent_check(&s, &w, Some(2)).unwrap());
    }

    #[test]
    fn all_component_zero_terms() {
        let s = seq(12, &[0, 0, 0]);
        let w = WeightSet::all_units(s.modulus());
        for l in 1..=3 {
            assert!(crt_equivalent_check(&s, &w, Some(l)).unwrap());
        }
    }

    #[test]
    fn rejects_non_unit_weights() {
        let m = factorize(12).unwrap();
        let s = ResidueSequence::new(&m, vec![1, 2]).unwrap();
        let w = WeightSet::explicit(&m, &[1, 5]).unwrap();
        assert!(matches!(
            crt_equivalent_check(&s, &w, None),
            Err(Error::UnitWeightsRequired)
        ));
    }

    #[test]
    fn agrees_with_direct_engine_exhaustively_small() {
        for n in [6u64, 12, 18, 30] {
            let m = factorize(n).unwrap();
            let w = WeightSet::all_units(&m);
            // all sequences of length 3 over a spread of residues
            let picks: Vec<u64> = (0..n).step_by((n as usize / 6).max(1)).collect();
            for &a in &picks {
                for &b in &picks {
                    for &c in &picks {
                        let s = ResidueSequence::new(&m, vec![a, b, c]).unwrap();
                        assert_eq!(
                            crt_equivalent_check(&s, &w, None).unwrap(),
                            has_zero_sum_subsequence(&s, &w),
                            "n={n} {:?}",
                            s.terms()
                        );
                        for l in 1..=3usize {
                            assert_eq!(
                                crt_equivalent_check(&s, &w, Some(l)).unwrap(),
                                has_zero_sum_subsequence_of_length(&s, &w, l).unwrap(),
                                "n={n} {:?} l={l}",
                                s.terms()
                            );
                        }
                    }
                }
            }
        }
    }
}
