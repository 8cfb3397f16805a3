//! Numerical semigroup rings `K[[t^m1, ..., t^mn]]` and the normal filtration
//! of their maximal ideal.
//!
//! The integral closure of `m^n` is `{f : ord(f) >= m1·n}`, so every length in
//! sight is a count of semigroup elements in a window.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinat::ceil_div;
use crate::hilbert::{
    self, Assumptions, FiltrationProfile, HVector, HilbertCoefficients, HilbertError,
};
use crate::report::{exact_vec, ExactInt, Instance, Invariants, Report, Verdicts};
use crate::verdict::{Criterion, Verdict};

/// Membership tables larger than this are refused.
pub const MAX_TABLE: u64 = 1 << 26;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("no generators given")]
    EmptyGenerators,
    #[error("generators must be positive")]
    NonPositive,
    #[error("generators have gcd {0}; a numerical semigroup needs gcd 1")]
    GcdNotOne(u64),
    #[error("membership table would need {0} entries")]
    TooLarge(u64),
    #[error("length table up to {got} is too short; need at least {needed}")]
    RangeTooSmall { needed: usize, got: usize },
    #[error("closed form and fitted value disagree: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    /// `membership[s]` for `0 <= s <= F + m1`.
    membership: Vec<bool>,
    /// `#{x in S : x < s}` for `0 <= s <= F + m1 + 1`.
    prefix: Vec<u64>,
    frobenius: i64,
}

impl NumericalSemigroup {
    /// Sorts and dedups the generators, then fills the membership table until
    /// `m1` consecutive members appear.
    pub fn build(generators: &[u64]) -> Result<Self, SemigroupError> {
        if generators.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if generators.contains(&0) {
            return Err(SemigroupError::NonPositive);
        }
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(SemigroupError::GcdNotOne(g));
        }
        let m1 = gens[0];
        let mn = *gens.last().unwrap();
        // F <= (m1 - 1)(mn - 1) - 1, so the run of m1 members starts before m1·mn.
        let cap = m1.saturating_mul(mn).saturating_add(m1);
        if cap > MAX_TABLE {
            return Err(SemigroupError::TooLarge(cap));
        }

        let mut membership: Vec<bool> = Vec::with_capacity(cap as usize);
        let mut run = 0u64;
        let mut s = 0u64;
        while run < m1 {
            let member = s == 0 || gens.iter().any(|&g| g <= s && membership[(s - g) as usize]);
            membership.push(member);
            run = if member { run + 1 } else { 0 };
            s += 1;
        }
        // membership covers 0..s; the last m1 entries are the run, so F = s - m1 - 1.
        let frobenius = s as i64 - m1 as i64 - 1;
        let table_len = (frobenius + m1 as i64 + 1).max(1) as usize;
        membership.truncate(table_len);
        while membership.len() < table_len {
            membership.push(true);
        }
        let mut prefix = Vec::with_capacity(table_len + 1);
        prefix.push(0);
        for &m in &membership {
            prefix.push(prefix.last().unwrap() + m as u64);
        }
        Ok(NumericalSemigroup {
            generators: gens,
            membership,
            prefix,
            frobenius,
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Smallest generator `m1 = e0`.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// `F(S)`; `-1` for `S = ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn contains(&self, s: i64) -> bool {
        if s < 0 {
            false
        } else if s > self.frobenius {
            true
        } else {
            self.membership[s as usize]
        }
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        let upto = (self.frobenius + 1).max(0) as usize;
        upto as u64 - self.prefix[upto]
    }

    /// Smallest element of `S` in each residue class mod `m1`, by class.
    pub fn apery_set(&self) -> Vec<u64> {
        let m1 = self.multiplicity();
        let mut ap = vec![u64::MAX; m1 as usize];
        for (s, &m) in self.membership.iter().enumerate() {
            let r = s % m1 as usize;
            if m && ap[r] == u64::MAX {
                ap[r] = s as u64;
            }
        }
        ap
    }

    /// `F` odd and `a ∈ S ⇔ F - a ∉ S` on `0..=F`.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius;
        if f < 0 {
            // ℕ: the condition is vacuous
            return true;
        }
        f % 2 == 1 && (0..=f).all(|a| self.contains(a) != self.contains(f - a))
    }

    /// `⌈F/m1⌉`, or `1` when `F <= 0`.
    pub fn normal_reduction_number(&self) -> u64 {
        if self.frobenius <= 0 {
            1
        } else {
            ceil_div(self.frobenius as u64, self.multiplicity()).max(1)
        }
    }

    /// `#{s ∈ S : s < x}`.
    fn count_below(&self, x: u64) -> u64 {
        let top = self.prefix.len() as u64 - 1;
        if x <= top {
            self.prefix[x as usize]
        } else {
            self.prefix[top as usize] + (x - top)
        }
    }

    /// `ℓ(A / \bar{m^n}) = #{s ∈ S : s < m1·n}`.
    pub fn normal_power_length(&self, n: u64) -> u64 {
        self.count_below(self.multiplicity() * n)
    }

    /// `ℓ(\bar{m^n} / Q \bar{m^{n-1}})` with `Q = (t^m1)`: the Apéry elements
    /// of order at least `m1·n`.
    pub fn fiber_length(&self, n: u64) -> u64 {
        let bound = self.multiplicity() * n;
        self.apery_set().iter().filter(|&&w| w >= bound).count() as u64
    }

    /// `H(0..=max_n)` with `d = 1`, Cohen-Macaulay and depth flags set (always
    /// true in dimension one) and the ambient flag set iff `S` is symmetric.
    pub fn normal_profile(&self, max_n: usize) -> Result<FiltrationProfile, SemigroupError> {
        let needed = self.normal_reduction_number() as usize + 2;
        if max_n < needed {
            return Err(SemigroupError::RangeTooSmall { needed, got: max_n });
        }
        let lengths = (0..=max_n as u64)
            .map(|n| BigInt::from(self.normal_power_length(n)))
            .collect();
        let assumptions = Assumptions {
            ambient_gorenstein: self.is_symmetric(),
            assoc_graded_cm: true,
            depth_at_least_d_minus_1: true,
        };
        Ok(FiltrationProfile::new(1, lengths, assumptions)?)
    }

    /// `ē1 = e0·r̄ - H(r̄)`, read off the single point `n = r̄` where `H` first
    /// equals its polynomial.
    pub fn normal_e1(&self) -> i64 {
        let r = self.normal_reduction_number();
        (self.multiplicity() * r) as i64 - self.normal_power_length(r) as i64
    }

    pub fn analyze(&self) -> Result<Report, SemigroupError> {
        self.analyze_with(None)
    }

    /// Full report using the length table up to `max_n` (default `r̄ + 2`).
    pub fn analyze_with(&self, max_n: Option<usize>) -> Result<Report, SemigroupError> {
        let m1 = self.multiplicity();
        let r = self.normal_reduction_number();
        let max_n = max_n.unwrap_or(r as usize + 2);
        let profile = self.normal_profile(max_n)?;
        let assumptions = profile.assumptions();

        let e0 = BigInt::from(m1);
        let e1 = BigInt::from(self.normal_e1());
        let lambda = BigInt::from(1);
        let coefficients = HilbertCoefficients::new(vec![e0.clone(), e1.clone()], 1)?;
        // The polynomial read at r̄ must also hold at r̄ + 1.
        let next = BigInt::from(self.normal_power_length(r + 1));
        if coefficients.eval(r as i64 + 1) != next {
            return Err(SemigroupError::Inconsistent(format!(
                "H({}) = {next} but e0·n - e1 gives {}",
                r + 1,
                coefficients.eval(r as i64 + 1)
            )));
        }
        let fit = hilbert::fit_profile(&profile)?;
        if fit.coefficients != coefficients {
            return Err(SemigroupError::Inconsistent(format!(
                "fitted {:?} vs closed form ({e0}, {e1})",
                fit.coefficients.coeffs()
            )));
        }
        let h = hilbert::h_vector_from_increments(&profile.increments(), 1)?;

        let nr = r as i64;
        let bound = hilbert::relative_reduction_bound(e0.clone(), e1.clone(), 1);
        let maximal = BigInt::from(nr) == bound;

        let mut parts = vec![hilbert::gorenstein_by_symmetry(&h, &assumptions)];
        // ℕ is a regular ring; the reduction-number criteria assume F(S) >= 1.
        if self.frobenius >= 1 {
            match r {
                1 => parts.push(hilbert::reduction_one_verdict(&e0, &e1, &assumptions)),
                2 => parts.push(hilbert::reduction_two_verdict(&e0, &e1, &assumptions)),
                _ => {}
            }
        }
        if maximal && r >= 2 {
            parts.push(hilbert::gorenstein_maximal(&lambda, &e0, nr, &assumptions, true));
        }
        if !assumptions.ambient_gorenstein {
            parts.push(Verdict::inapplicable(
                Criterion::HVectorSymmetry,
                format!(
                    "S is not symmetric (F = {}, genus {}), so A is not Gorenstein",
                    self.frobenius,
                    self.genus()
                ),
            ));
        }
        let gorenstein = Verdict::combine(parts).map_err(HilbertError::from)?;

        let invariants = Invariants {
            dim: 1,
            lambda: ExactInt::from(&lambda),
            length_table: exact_vec(profile.lengths()),
            e0: Some(ExactInt::from(&e0)),
            e1: Some(ExactInt::from(&e1)),
            hilbert_coefficients: Some(exact_vec(coefficients.coeffs())),
            reduction_number: Some(nr),
            relative_reduction_number: Some(nr),
            bound: Some(ExactInt::from(bound)),
            maximal: Some(maximal),
            h_vector: Some(exact_vec(h.coeffs())),
            postulation_number: Some(fit.postulation),
        };
        let instance = Instance::Semigroup {
            generators: self.generators.clone(),
            frobenius: self.frobenius,
            genus: self.genus(),
            symmetric: self.is_symmetric(),
            apery_set: self.apery_set(),
        };
        let verdicts = Verdicts {
            gorenstein,
            cohen_macaulay: Some(true),
            ring_class: None,
            max_embedding_dimension: None,
        };
        let mut notes = Vec::new();
        if self.frobenius < 1 {
            notes.push("S = ℕ: regular ring, r̄ fixed to 1 by convention".to_string());
        }
        Ok(Report::new(instance, invariants, verdicts, assumptions, notes))
    }

    /// h-vector of the normal tangent cone.
    pub fn h_vector(&self) -> Result<HVector, SemigroupError> {
        let p = self.normal_profile(self.normal_reduction_number() as usize + 2)?;
        Ok(hilbert::h_vector_from_increments(&p.increments(), 1)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verdict::Status;

    fn s(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::build(g).unwrap()
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(s(&[3, 4]).frobenius(), 5);
        assert_eq!(s(&[4, 5, 6]).frobenius(), 7);
        assert_eq!(s(&[4, 6, 7]).frobenius(), 9);
        assert_eq!(s(&[1]).frobenius(), -1);
        assert_eq!(s(&[2, 7]).frobenius(), 5);
        assert_eq!(s(&[7, 4, 4]).generators(), &[4, 7]);
    }

    #[test]
    fn build_errors() {
        assert_eq!(NumericalSemigroup::build(&[]), Err(SemigroupError::EmptyGenerators));
        assert_eq!(NumericalSemigroup::build(&[2, 2]), Err(SemigroupError::GcdNotOne(2)));
        assert_eq!(NumericalSemigroup::build(&[4, 6]), Err(SemigroupError::GcdNotOne(2)));
        assert_eq!(NumericalSemigroup::build(&[0, 3]), Err(SemigroupError::NonPositive));
        assert!(matches!(
            NumericalSemigroup::build(&[100_000, 100_001]),
            Err(SemigroupError::TooLarge(_))
        ));
    }

    #[test]
    fn symmetry() {
        assert!(s(&[3, 4]).is_symmetric());
        assert!(s(&[4, 6, 7]).is_symmetric());
        assert!(!s(&[3, 5, 7]).is_symmetric());
        assert_eq!(s(&[3, 5, 7]).frobenius(), 4);
        assert_eq!(s(&[3, 5, 7]).genus(), 3);
    }

    #[test]
    fn apery_and_genus() {
        assert_eq!(s(&[3, 4]).apery_set(), vec![0, 4, 8]);
        assert_eq!(s(&[3, 4]).genus(), 3);
        assert_eq!(s(&[4, 6, 7]).apery_set(), vec![0, 13, 6, 7]);
    }

    #[test]
    fn reduction_numbers() {
        assert_eq!(s(&[3, 4]).normal_reduction_number(), 2);
        assert_eq!(s(&[2, 7]).normal_reduction_number(), 3);
        assert_eq!(s(&[4, 6, 7]).normal_reduction_number(), 3);
        assert_eq!(s(&[1]).normal_reduction_number(), 1);
    }

    #[test]
    fn power_lengths() {
        assert_eq!(s(&[3, 4]).normal_power_length(2), 3);
        assert_eq!(s(&[4, 6, 7]).normal_power_length(3), 7);
        assert_eq!(s(&[4, 6, 7]).normal_power_length(0), 0);
        let t: Vec<u64> = (0..8).map(|n| s(&[4, 6, 7]).normal_power_length(n)).collect();
        assert_eq!(t, vec![0, 1, 4, 7, 11, 15, 19, 23]);
        let t: Vec<u64> = (0..8).map(|n| s(&[4, 5, 6]).normal_power_length(n)).collect();
        assert_eq!(t, vec![0, 1, 4, 8, 12, 16, 20, 24]);
    }

    #[test]
    fn profiles() {
        let p = s(&[3, 4]).normal_profile(5).unwrap();
        let want: Vec<BigInt> = [0, 1, 3, 6, 9, 12].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(p.lengths(), want.as_slice());
        assert!(p.assumptions().ambient_gorenstein);
        let p = s(&[2, 7]).normal_profile(5).unwrap();
        let want: Vec<BigInt> = [0, 1, 2, 3, 5, 7].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(p.lengths(), want.as_slice());
        let p = s(&[1]).normal_profile(4).unwrap();
        let want: Vec<BigInt> = (0..=4).map(BigInt::from).collect();
        assert_eq!(p.lengths(), want.as_slice());
        assert_eq!(
            s(&[4, 6, 7]).normal_profile(4),
            Err(SemigroupError::RangeTooSmall { needed: 5, got: 4 })
        );
        assert!(!s(&[3, 5, 7]).normal_profile(6).unwrap().assumptions().ambient_gorenstein);
    }

    #[test]
    fn fibers() {
        let g = s(&[4, 6, 7]);
        let f: Vec<u64> = (1..=4).map(|n| g.fiber_length(n)).collect();
        assert_eq!(f, vec![3, 1, 1, 0]);
        let g = s(&[4, 5, 6]);
        let f: Vec<u64> = (1..=3).map(|n| g.fiber_length(n)).collect();
        assert_eq!(f, vec![3, 1, 0]);
    }

    fn e(r: &Report) -> (i64, i64, i64) {
        let inv = &r.invariants;
        let g = |x: &Option<ExactInt>| i64::try_from(&x.as_ref().unwrap().0).unwrap();
        (g(&inv.e0), g(&inv.e1), inv.reduction_number.unwrap())
    }

    #[test]
    fn analyze_examples() {
        let r = s(&[3, 4]).analyze().unwrap();
        assert_eq!(e(&r), (3, 3, 2));
        assert_eq!(r.gorenstein(), Status::Holds);
        assert!(r.provenance.criteria_applied.contains(&Criterion::ReductionTwo));

        let r = s(&[4, 6, 7]).analyze().unwrap();
        assert_eq!(e(&r), (4, 5, 3));
        assert_eq!(r.invariants.maximal, Some(true));
        assert_eq!(r.gorenstein(), Status::Fails);
        let h: Vec<i64> = r.invariants.h_vector.as_ref().unwrap().iter().map(|x| i64::try_from(&x.0).unwrap()).collect();
        assert_eq!(h, vec![1, 2, 0, 1]);
        assert_eq!(r.invariants.postulation_number, Some(2));

        let r = s(&[4, 5, 6]).analyze().unwrap();
        assert_eq!(e(&r), (4, 4, 2));
        assert_eq!(r.gorenstein(), Status::Holds);

        let r = s(&[2, 7]).analyze().unwrap();
        assert_eq!(e(&r), (2, 3, 3));
        assert_eq!(r.gorenstein(), Status::Holds);
        assert!(r
            .provenance
            .criteria_applied
            .contains(&Criterion::MaximalRelativeReduction));
    }

    #[test]
    fn analyze_edge_cases() {
        let r = s(&[3, 5, 7]).analyze().unwrap();
        assert_eq!(r.gorenstein(), Status::Inapplicable);
        let r = s(&[1]).analyze().unwrap();
        assert_eq!(e(&r), (1, 0, 1));
        assert_eq!(r.gorenstein(), Status::Holds);
        let r = s(&[2, 3]).analyze().unwrap();
        assert_eq!(e(&r), (2, 1, 1));
        assert!(r.provenance.criteria_applied.contains(&Criterion::ReductionOne));
        assert!(s(&[3, 4]).analyze_with(Some(3)).is_err());
        assert!(s(&[3, 4]).analyze_with(Some(10)).is_ok());
    }
}
