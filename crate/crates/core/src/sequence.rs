//! Finite sequences of residues and the projection maps between rings.

use crate::error::{Error, Result};
use crate::residue::Modulus;

/// An ordered, finite sequence over Z_n. Terms are residues in `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueSequence {
    modulus: Modulus,
    terms: Vec<u64>,
}

impl ResidueSequence {
    pub fn new(modulus: &Modulus, terms: Vec<u64>) -> Result<ResidueSequence> {
        let n = modulus.n();
        for &t in &terms {
            if t >= n {
                return Err(Error::ResidueOutOfRange { value: t, n });
            }
        }
        Ok(ResidueSequence {
            modulus: modulus.clone(),
            terms,
        })
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn n(&self) -> u64 {
        self.modulus.n()
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Termwise reduction along Z_n -> Z_m for a divisor m of n.
    pub fn natural_map(&self, m: u64) -> Result<ResidueSequence> {
        let n = self.n();
        if m == 0 || n % m != 0 {
            return Err(Error::NonDivisor { m, n });
        }
        Ok(ResidueSequence {
            modulus: Modulus::of(m),
            terms: self.terms.iter().map(|&t| t % m).collect(),
        })
    }

    /// The image in Z_{p^{v_p(n)}} for a prime divisor p of n.
    pub fn crt_project(&self, p: u64) -> Result<ResidueSequence> {
        let e = self.modulus.v_p(p);
        if e == 0 || self.modulus.factors().iter().all(|&(q, _)| q != p) {
            return Err(Error::NonDivisor { m: p, n: self.n() });
        }
        self.natural_map(p.pow(e))
    }

    /// Divide every term by `d` (which must divide them all) and reduce into
    /// Z_{n/d}. This is the sequence the lifting criterion tests.
    pub fn divide_down(&self, d: u64) -> Result<ResidueSequence> {
        let n = self.n();
        if d == 0 || n % d != 0 || d == n {
            return Err(Error::NonDivisor { m: d, n });
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for &t in &self.terms {
            if t % d != 0 {
                return Err(Error::TermNotDivisible { d, term: t });
            }
            terms.push(t / d);
        }
        Ok(ResidueSequence {
            modulus: Modulus::of(n / d),
            terms,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residue::factorize;

    #[test]
    fn crt_project_examples() {
        let m12 = factorize(12).unwrap();
        let s = ResidueSequence::new(&m12, vec![1, 3, 4]).unwrap();
        let s3 = s.crt_project(3).unwrap();
        assert_eq!(s3.n(), 3);
        assert_eq!(s3.terms(), &[1, 0, 1]);
        let s2 = s.crt_project(2).unwrap();
        assert_eq!(s2.n(), 4);
        assert_eq!(s2.terms(), &[1, 3, 0]);
        assert!(s.crt_project(5).is_err());

        let z = ResidueSequence::new(&m12, vec![0, 0]).unwrap();
        assert_eq!(z.crt_project(3).unwrap().terms(), &[0, 0]);
    }

    #[test]
    fn natural_map_examples() {
        let m12 = factorize(12).unwrap();
        let s = ResidueSequence::new(&m12, vec![5, 6]).unwrap();
        assert_eq!(s.natural_map(4).unwrap().terms(), &[1, 2]);
        assert_eq!(s.natural_map(12).unwrap().terms(), &[5, 6]);
        assert_eq!(s.natural_map(1).unwrap().terms(), &[0, 0]);
        assert!(s.natural_map(5).is_err());
    }

    #[test]
    fn crt_projection_tuple_is_injective() {
        for n in 2..=200u64 {
            let m = crate::residue::Modulus::of(n);
            let primes: Vec<u64> = m.factors().iter().map(|&(p, _)| p).collect();
            let mut seen = std::collections::HashSet::new();
            for x in 0..n {
                let s = ResidueSequence::new(&m, vec![x]).unwrap();
                let tuple: Vec<u64> = primes
                    .iter()
                    .map(|&p| s.crt_project(p).unwrap().terms()[0])
                    .collect();
                assert!(seen.insert(tuple), "n={n} x={x} collides");
            }
        }
    }

    #[test]
    fn out_of_range_terms_rejected() {
        let m6 = factorize(6).unwrap();
        assert!(ResidueSequence::new(&m6, vec![6]).is_err());
    }

    #[test]
    fn divide_down_checks_terms() {
        let m9 = factorize(9).unwrap();
        let s = ResidueSequence::new(&m9, vec![3, 6]).unwrap();
        let s3 = s.divide_down(3).unwrap();
        assert_eq!(s3.n(), 3);
        assert_eq!(s3.terms(), &[1, 2]);
        let bad = ResidueSequence::new(&m9, vec![3, 4]).unwrap();
        assert!(matches!(
            bad.divide_down(3),
            Err(Error::TermNotDivisible { d: 3, term: 4 })
        ));
    }
}
