//! Moduli, factorizations, unit groups, and multiplicative orbits.
//!
//! Residues are plain `u64` values in `[0, n)`; the types here carry the
//! ring structure (the factored modulus and the weight set acting on it).

use crate::error::{Error, Result};

/// Largest modulus `factorize` accepts by default. The library targets
/// exhaustive search at small n, not cryptographic sizes.
pub const DEFAULT_MODULUS_LIMIT: u64 = 1_000_000;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// A modulus n together with its prime factorization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Modulus {
    n: u64,
    /// (prime, exponent) pairs sorted by prime. Empty exactly when n = 1.
    factors: Vec<(u64, u32)>,
}

/// Factor `n` by trial division. Errors outside `2..=limit`.
pub fn factorize_with_limit(n: u64, limit: u64) -> Result<Modulus> {
    if n < 2 || n > limit {
        return Err(Error::ModulusOutOfRange { n, limit });
    }
    Ok(Modulus::of(n))
}

/// Factor `n` by trial division with the default size limit.
pub fn factorize(n: u64) -> Result<Modulus> {
    factorize_with_limit(n, DEFAULT_MODULUS_LIMIT)
}

impl Modulus {
    /// Unchecked-by-limit constructor; accepts any n >= 1 (n = 1 is the
    /// trivial ring, used only as the image of projections).
    pub(crate) fn of(n: u64) -> Modulus {
        assert!(n >= 1);
        let mut factors = Vec::new();
        let mut rest = n;
        let mut p = 2u64;
        while p * p <= rest {
            if rest % p == 0 {
                let mut e = 0u32;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                factors.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            factors.push((rest, 1));
        }
        Modulus { n, factors }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Number of prime factors counted with multiplicity.
    pub fn big_omega(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    /// Number of distinct prime factors.
    pub fn small_omega(&self) -> u32 {
        self.factors.len() as u32
    }

    /// Exponent of `p` in n (0 when p does not divide n).
    pub fn v_p(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// All divisors of n, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let base = divs.clone();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                divs.extend(base.iter().map(|d| d * pk));
            }
        }
        divs.sort_unstable();
        divs
    }

    pub fn reduce(&self, x: u64) -> u64 {
        x % self.n
    }
}

/// The units of Z_n: residues in `[1, n)` coprime to n, ascending.
pub fn units(m: &Modulus) -> Vec<u64> {
    (1..m.n()).filter(|&x| gcd(x, m.n()) == 1).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    AllUnits,
    Explicit,
}

/// The weight set A acting on Z_n.
///
/// `AllUnits` is kept symbolic: orbit computations reduce to gcd classes
/// and never materialize the unit list unless explicitly asked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSet {
    modulus: Modulus,
    kind: WeightKind,
    /// Sorted, deduplicated residues; present only for `Explicit`.
    residues: Vec<u64>,
    is_unit_subgroup: bool,
}

impl WeightSet {
    pub fn all_units(modulus: &Modulus) -> WeightSet {
        WeightSet {
            modulus: modulus.clone(),
            kind: WeightKind::AllUnits,
            residues: Vec::new(),
            is_unit_subgroup: true,
        }
    }

    pub fn explicit(modulus: &Modulus, residues: &[u64]) -> Result<WeightSet> {
        let n = modulus.n();
        let mut rs: Vec<u64> = residues.to_vec();
        for &r in &rs {
            if r >= n {
                return Err(Error::ResidueOutOfRange { value: r, n });
            }
        }
        rs.sort_unstable();
        rs.dedup();
        if rs.is_empty() {
            return Err(Error::EmptyWeightSet);
        }
        let all_units = rs.iter().all(|&r| gcd(r, n) == 1);
        // A finite subset of a group closed under the operation is a subgroup.
        let closed = all_units
            && rs
                .iter()
                .all(|&a| rs.iter().all(|&b| rs.binary_search(&(a * b % n)).is_ok()));
        Ok(WeightSet {
            modulus: modulus.clone(),
            kind: WeightKind::Explicit,
            residues: rs,
            is_unit_subgroup: closed,
        })
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    pub fn is_all_units(&self) -> bool {
        self.kind == WeightKind::AllUnits
    }

    /// True iff the realized set is a subgroup of U(n).
    pub fn is_unit_subgroup(&self) -> bool {
        self.is_unit_subgroup
    }

    /// Materialize the weight set as a sorted residue list.
    pub fn realize(&self) -> Vec<u64> {
        match self.kind {
            WeightKind::AllUnits => units(&self.modulus),
            WeightKind::Explicit => self.residues.clone(),
        }
    }

    pub fn contains(&self, a: u64) -> bool {
        match self.kind {
            WeightKind::AllUnits => a < self.modulus.n() && gcd(a, self.modulus.n()) == 1,
            WeightKind::Explicit => self.residues.binary_search(&a).is_ok(),
        }
    }
}

/// The orbit {a * x mod n : a in A}, sorted ascending.
///
/// For the full unit group this is exactly the gcd class
/// {y : gcd(y, n) = gcd(x, n)}, with the zero class {0} arising as
/// divisor d = n.
pub fn orbit_of(x: u64, weights: &WeightSet) -> Vec<u64> {
    let n = weights.modulus().n();
    let x = x % n;
    match weights.kind() {
        WeightKind::AllUnits => {
            let d = gcd(x, n);
            if d == n {
                return vec![0];
            }
            let q = n / d;
            let mut orbit: Vec<u64> = (1..=q).filter(|&t| gcd(t, q) == 1).map(|t| d * t % n).collect();
            orbit.sort_unstable();
            orbit
        }
        WeightKind::Explicit => {
            let mut orbit: Vec<u64> = weights.residues.iter().map(|&a| a * x % n).collect();
            orbit.sort_unstable();
            orbit.dedup();
            orbit
        }
    }
}

/// Orbit representatives of the A-action on Z_n (minimum of each orbit,
/// ascending). Only meaningful when A is a unit subgroup, in which case the
/// orbits partition the ring.
pub fn orbit_representatives(weights: &WeightSet) -> Result<Vec<u64>> {
    if !weights.is_unit_subgroup() {
        return Err(Error::NotUnitSubgroup);
    }
    let n = weights.modulus().n();
    if weights.is_all_units() {
        return Ok(weights.modulus().divisors().into_iter().map(|d| d % n).collect());
    }
    let mut seen = vec![false; n as usize];
    let mut reps = Vec::new();
    for x in 0..n {
        if !seen[x as usize] {
            reps.push(x);
            for y in orbit_of(x, weights) {
                seen[y as usize] = true;
            }
        }
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(12).unwrap().factors(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(8).unwrap().factors(), &[(2, 3)]);
        assert_eq!(factorize(30).unwrap().factors(), &[(2, 1), (3, 1), (5, 1)]);
        assert!(matches!(factorize(1), Err(Error::ModulusOutOfRange { .. })));
        assert!(matches!(factorize(0), Err(Error::ModulusOutOfRange { .. })));
        assert!(factorize_with_limit(101, 100).is_err());
    }

    #[test]
    fn omega_and_valuation() {
        let m12 = factorize(12).unwrap();
        assert_eq!(m12.big_omega(), 3);
        assert_eq!(m12.small_omega(), 2);
        assert_eq!(factorize(8).unwrap().big_omega(), 3);
        assert_eq!(factorize(24).unwrap().v_p(2), 3);
        assert_eq!(factorize(24).unwrap().v_p(5), 0);
    }

    #[test]
    fn units_examples() {
        assert_eq!(units(&factorize(12).unwrap()), vec![1, 5, 7, 11]);
        assert_eq!(units(&factorize(2).unwrap()), vec![1]);
        assert_eq!(units(&factorize(7).unwrap()), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn units_form_a_group() {
        for n in 2..=200u64 {
            let m = Modulus::of(n);
            let us = units(&m);
            assert!(us.contains(&1));
            for &a in &us {
                for &b in &us {
                    assert!(us.binary_search(&(a * b % n)).is_ok(), "n={n} {a}*{b}");
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let m12 = factorize(12).unwrap();
        let u12 = WeightSet::all_units(&m12);
        assert_eq!(orbit_of(2, &u12), vec![2, 10]);
        assert_eq!(orbit_of(0, &u12), vec![0]);
        let m6 = factorize(6).unwrap();
        assert_eq!(orbit_of(3, &WeightSet::all_units(&m6)), vec![3]);
        // Orbit of 1 is the whole unit group.
        let m9 = factorize(9).unwrap();
        assert_eq!(orbit_of(1, &WeightSet::all_units(&m9)), units(&m9));
    }

    #[test]
    fn orbits_are_gcd_classes() {
        for n in 2..=200u64 {
            let m = Modulus::of(n);
            let w = WeightSet::all_units(&m);
            for x in 0..n {
                let d = gcd(x, n);
                let class: Vec<u64> = (0..n).filter(|&y| gcd(y, n) == d).collect();
                assert_eq!(orbit_of(x, &w), class, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn orbits_are_unit_invariant() {
        for n in 2..=50u64 {
            let m = Modulus::of(n);
            let w = WeightSet::all_units(&m);
            for x in 0..n {
                let ox = orbit_of(x, &w);
                for u in units(&m) {
                    assert_eq!(orbit_of(u * x % n, &w), ox, "n={n} x={x} u={u}");
                }
            }
        }
    }

    #[test]
    fn explicit_weight_sets() {
        let m12 = factorize(12).unwrap();
        let w = WeightSet::explicit(&m12, &[1, 11]).unwrap();
        assert!(w.is_unit_subgroup());
        assert_eq!(orbit_of(2, &w), vec![2, 10]);

        let not_group = WeightSet::explicit(&m12, &[5]).unwrap();
        assert!(!not_group.is_unit_subgroup()); // 5*5 = 1 is missing

        let non_unit = WeightSet::explicit(&m12, &[2, 3]).unwrap();
        assert!(!non_unit.is_unit_subgroup());

        assert!(matches!(
            WeightSet::explicit(&m12, &[]),
            Err(Error::EmptyWeightSet)
        ));
        assert!(matches!(
            WeightSet::explicit(&m12, &[12]),
            Err(Error::ResidueOutOfRange { .. })
        ));
    }

    #[test]
    fn orbit_representatives_all_units() {
        let m12 = factorize(12).unwrap();
        let reps = orbit_representatives(&WeightSet::all_units(&m12)).unwrap();
        // divisor n maps to the zero class
        assert_eq!(reps, vec![1, 2, 3, 4, 6, 0]);
    }
}
