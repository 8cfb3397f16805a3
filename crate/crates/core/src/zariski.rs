//! Zariski-type hypersurfaces `A = K[[x, y1..ym]] / (x^a - g(y))` with
//! `2 <= a <= b = ord(g)`.
//!
//! Nothing here depends on `g` beyond its order `b`. The integral closure of
//! `m^n` is `Σ_k x^k Q^{max(n - n_k, 0)}` with `Q = (y1..ym)` and the ladder
//! `n_k = ⌊k b / a⌋`, and everything else is read off that presentation.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinat::{binomial, ceil_div};
use crate::hilbert::{self, Assumptions, FiltrationProfile, HilbertError};
use crate::report::{exact_vec, ExactInt, Instance, Invariants, Report, Verdicts};
use crate::verdict::{Criterion, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ZariskiError {
    #[error("need 2 <= a <= b and m >= 1, got a = {a}, b = {b}, m = {m}")]
    Domain { a: u64, b: u64, m: u64 },
    #[error("length table up to {got} is too short; need at least {needed}")]
    RangeTooSmall { needed: usize, got: usize },
    #[error("closed form and fitted value disagree: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
}

/// How `A` sits among Gorenstein rings when its normal tangent cone is
/// Gorenstein.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RingClass {
    /// `b ≡ 0 (mod a)`: the normal tangent cone is a reduced hypersurface.
    ReducedHypersurface,
    /// `b ≡ 1 (mod a)` with `gcd(a, b) = 1`: a non-reduced hypersurface.
    NonreducedHypersurface,
    /// `b ≡ gcd(a, b) > 1 (mod a)`: a complete intersection, not a hypersurface.
    CompleteIntersection,
    NotGorenstein,
}

impl RingClass {
    pub fn id(self) -> &'static str {
        match self {
            RingClass::ReducedHypersurface => "reduced_hypersurface",
            RingClass::NonreducedHypersurface => "nonreduced_hypersurface",
            RingClass::CompleteIntersection => "complete_intersection",
            RingClass::NotGorenstein => "not_gorenstein",
        }
    }
}

impl std::fmt::Display for RingClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GorensteinClass {
    pub gorenstein: bool,
    pub ring_class: RingClass,
}

/// `\bar{m^n} = Σ_{k=0}^{a-1} x^k Q^{t_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialPresentation {
    pub n: u64,
    /// `t_k = max(n - n_k, 0)` for `k = 0..a-1`.
    pub exponents: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZariskiParams {
    a: u64,
    b: u64,
    m: u64,
    d: u64,
    ladder: Vec<u64>,
}

impl ZariskiParams {
    pub fn build(a: u64, b: u64, m: u64) -> Result<Self, ZariskiError> {
        if a < 2 || b < a || m < 1 {
            return Err(ZariskiError::Domain { a, b, m });
        }
        let ladder = (1..a).map(|k| k * b / a).collect();
        Ok(ZariskiParams {
            a,
            b,
            m,
            d: a.gcd(&b),
            ladder,
        })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// `gcd(a, b)`.
    pub fn gcd(&self) -> u64 {
        self.d
    }

    pub fn a_reduced(&self) -> u64 {
        self.a / self.d
    }

    pub fn b_reduced(&self) -> u64 {
        self.b / self.d
    }

    /// `n_1..n_{a-1}`.
    pub fn ladder(&self) -> &[u64] {
        &self.ladder
    }

    /// `n_k` with `n_0 = 0`.
    pub fn n_k(&self, k: u64) -> u64 {
        if k == 0 {
            0
        } else {
            self.ladder[k as usize - 1]
        }
    }

    /// `r̄ = nr = n_{a-1}`.
    pub fn normal_reduction_number(&self) -> u64 {
        *self.ladder.last().unwrap()
    }

    /// `ℓ(A / (Q + \bar{m^n}))`: the least `k` with `n <= n_k`, or `a` past the
    /// top of the ladder.
    pub fn ell_n(&self, n: u64) -> u64 {
        self.ladder
            .iter()
            .position(|&nk| n <= nk)
            .map_or(self.a, |i| i as u64 + 1)
    }

    /// `ℓ_1..ℓ_r`.
    pub fn colengths(&self) -> Vec<u64> {
        (1..=self.normal_reduction_number()).map(|n| self.ell_n(n)).collect()
    }

    /// `ℓ_n + ℓ_{r+1-n} = a` for `n = 1..⌈r/2⌉`.
    pub fn gorenstein_by_duality(&self) -> bool {
        let r = self.normal_reduction_number();
        (1..=ceil_div(r, 2)).all(|n| self.ell_n(n) + self.ell_n(r + 1 - n) == self.a)
    }

    pub fn gorenstein_verdict(&self) -> GorensteinClass {
        let res = self.b % self.a;
        let ring_class = if res == 0 {
            RingClass::ReducedHypersurface
        } else if res == self.d && self.d == 1 {
            RingClass::NonreducedHypersurface
        } else if res == self.d {
            RingClass::CompleteIntersection
        } else {
            RingClass::NotGorenstein
        };
        GorensteinClass {
            gorenstein: ring_class != RingClass::NotGorenstein,
            ring_class,
        }
    }

    /// `nr` attains the bound `ē1 - e0 + 2` exactly for `a = 2` and
    /// `(a, b) ∈ {(3,3), (3,4), (3,5)}`.
    pub fn is_nr_maximal(&self) -> bool {
        self.a == 2 || (self.a == 3 && self.b <= 5)
    }

    /// `ℓ(\bar{m^n} / Q \bar{m^{n-1}}) = max(a - ⌈a n / b⌉, 0)`, independent of `m`.
    pub fn fiber_length(&self, n: u64) -> u64 {
        self.a.saturating_sub(ceil_div(self.a * n, self.b))
    }

    /// `ē1 = (e0 - λ) + Σ_{n=2}^{r} fiber_length(n)` with `e0 = a`, `λ = 1`.
    pub fn normal_e1(&self) -> u64 {
        let r = self.normal_reduction_number();
        (self.a - 1) + (2..=r).map(|n| self.fiber_length(n)).sum::<u64>()
    }

    /// The normal tangent cone has embedding dimension `a + m - 1`.
    pub fn max_embedding_dimension(&self) -> bool {
        self.a == 2 || self.b % self.a == self.a - 1
    }

    pub fn presentation(&self, n: u64) -> MonomialPresentation {
        let exponents = (0..self.a).map(|k| n.saturating_sub(self.n_k(k))).collect();
        MonomialPresentation { n, exponents }
    }

    /// `ℓ(A / \bar{m^n}) = Σ_k C(t_k + m - 1, m)`: monomials `x^k y^α` with
    /// `|α| < t_k`.
    pub fn normal_hilbert_function(&self, n: u64) -> BigInt {
        let m = self.m as i64;
        self.presentation(n)
            .exponents
            .iter()
            .map(|&t| binomial(t as i64 + m - 1, m))
            .sum()
    }

    /// `H(0..=max_n)` in dimension `m`. `A` is a hypersurface and its normal
    /// tangent cone is Cohen-Macaulay, so every flag is set.
    pub fn normal_profile(&self, max_n: usize) -> Result<FiltrationProfile, ZariskiError> {
        let needed = self.min_table();
        if max_n < needed {
            return Err(ZariskiError::RangeTooSmall { needed, got: max_n });
        }
        let lengths = (0..=max_n as u64).map(|n| self.normal_hilbert_function(n)).collect();
        Ok(FiltrationProfile::new(self.m as u32, lengths, Assumptions::all())?)
    }

    fn min_table(&self) -> usize {
        (self.normal_reduction_number() + self.m + 2) as usize
    }

    pub fn analyze(&self) -> Result<Report, ZariskiError> {
        self.analyze_with(None)
    }

    /// Full report on the length table up to `max_n` (default `r̄ + m + 2`).
    /// Every applicable Gorenstein criterion runs; disagreement is an error.
    pub fn analyze_with(&self, max_n: Option<usize>) -> Result<Report, ZariskiError> {
        let max_n = max_n.unwrap_or(self.min_table());
        let profile = self.normal_profile(max_n)?;
        let assumptions = profile.assumptions();
        let a = self.a;
        let r = self.normal_reduction_number();

        let fit = hilbert::fit_profile(&profile)?;
        let h = hilbert::h_vector_from_increments(&profile.increments(), self.m as u32)?;
        let e = &fit.coefficients;
        let e0 = e.e(0).clone();
        let e1 = e.e(1).clone();
        if e0 != BigInt::from(a) || e1 != BigInt::from(self.normal_e1()) {
            return Err(ZariskiError::Inconsistent(format!(
                "fitted (e0, e1) = ({e0}, {e1}), closed form ({a}, {})",
                self.normal_e1()
            )));
        }
        let postulated = fit.postulation + self.m as i64;
        if postulated != r as i64 {
            return Err(ZariskiError::Inconsistent(format!(
                "n(F) + m = {postulated} but n_(a-1) = {r}"
            )));
        }
        let lambda = BigInt::from(1);
        let bound = hilbert::relative_reduction_bound(e0.clone(), e1.clone(), 1);
        let maximal = self.is_nr_maximal();

        let class = self.gorenstein_verdict();
        let mut parts = vec![
            Verdict::decided(
                class.gorenstein,
                Criterion::ResidueOfBModA,
                format!("b mod a = {}, gcd(a, b) = {}", self.b % a, self.d),
            ),
            Verdict::decided(
                self.gorenstein_by_duality(),
                Criterion::LengthDuality,
                format!("r = {r}, ℓ = {:?}", self.colengths()),
            ),
            hilbert::gorenstein_by_symmetry(&h, &assumptions),
        ];
        match r {
            1 => parts.push(hilbert::reduction_one_verdict(&e0, &e1, &assumptions)),
            2 => parts.push(hilbert::reduction_two_verdict(&e0, &e1, &assumptions)),
            _ => {}
        }
        if maximal && r >= 2 {
            parts.push(hilbert::gorenstein_maximal(&lambda, &e0, r as i64, &assumptions, true));
        }
        let max_emb = self.max_embedding_dimension();
        if max_emb {
            parts.push(Verdict::decided(
                a == 2,
                Criterion::MaximalEmbeddingDimension,
                format!("maximal embedding dimension with a = {a}"),
            ));
        }
        let gorenstein = Verdict::combine(parts).map_err(HilbertError::from)?;

        let mut notes = vec!["assumes a is invertible in the residue field".to_string()];
        if maximal && self.m >= 2 {
            notes.push(format!(
                "maximal nr: e_i = C({r}, i) for 2 <= i <= m: {}",
                hilbert::ei_binomial_check(r as i64, e)
            ));
        }

        let invariants = Invariants {
            dim: self.m as u32,
            lambda: ExactInt::from(&lambda),
            length_table: exact_vec(profile.lengths()),
            e0: Some(ExactInt::from(&e0)),
            e1: Some(ExactInt::from(&e1)),
            hilbert_coefficients: Some(exact_vec(e.coeffs())),
            reduction_number: Some(r as i64),
            relative_reduction_number: Some(r as i64),
            bound: Some(ExactInt::from(bound)),
            maximal: Some(maximal),
            h_vector: Some(exact_vec(h.coeffs())),
            postulation_number: Some(fit.postulation),
        };
        let instance = Instance::Hypersurface {
            a,
            b: self.b,
            m: self.m,
            gcd: self.d,
            a_reduced: self.a_reduced(),
            b_reduced: self.b_reduced(),
            ladder: self.ladder.clone(),
            colengths: self.colengths(),
            fiber_lengths: (1..=r).map(|n| self.fiber_length(n)).collect(),
        };
        let verdicts = Verdicts {
            gorenstein,
            cohen_macaulay: Some(true),
            ring_class: Some(class.ring_class),
            max_embedding_dimension: Some(max_emb),
        };
        Ok(Report::new(instance, invariants, verdicts, assumptions, notes))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verdict::Status;

    fn p(a: u64, b: u64, m: u64) -> ZariskiParams {
        ZariskiParams::build(a, b, m).unwrap()
    }

    #[test]
    fn ladders() {
        assert_eq!(p(3, 5, 1).ladder(), &[1, 3]);
        assert_eq!(p(4, 6, 1).ladder(), &[1, 3, 4]);
        assert_eq!(p(2, 2, 1).ladder(), &[1]);
        assert!(ZariskiParams::build(3, 2, 1).is_err());
        assert!(ZariskiParams::build(1, 2, 1).is_err());
        assert!(ZariskiParams::build(2, 3, 0).is_err());
        let q = p(4, 6, 1);
        assert_eq!((q.gcd(), q.a_reduced(), q.b_reduced()), (2, 2, 3));
    }

    #[test]
    fn reduction_numbers() {
        assert_eq!(p(3, 5, 2).normal_reduction_number(), 3);
        for b in 2..20 {
            assert_eq!(p(2, b, 1).normal_reduction_number(), b / 2);
        }
        for a in 2..10 {
            assert_eq!(p(a, a, 1).normal_reduction_number(), a - 1);
        }
    }

    #[test]
    fn colengths_and_duality() {
        assert_eq!(p(4, 6, 1).colengths(), vec![1, 2, 2, 3]);
        assert_eq!(p(3, 5, 1).colengths(), vec![1, 2, 2]);
        assert_eq!(p(3, 5, 1).ell_n(4), 3);
        assert!(p(4, 6, 1).gorenstein_by_duality());
        assert!(!p(3, 5, 1).gorenstein_by_duality());
        assert!(p(3, 4, 1).gorenstein_by_duality());
    }

    #[test]
    fn residue_classes() {
        let v = p(3, 6, 1).gorenstein_verdict();
        assert_eq!((v.gorenstein, v.ring_class), (true, RingClass::ReducedHypersurface));
        let v = p(3, 4, 1).gorenstein_verdict();
        assert_eq!((v.gorenstein, v.ring_class), (true, RingClass::NonreducedHypersurface));
        let v = p(3, 5, 1).gorenstein_verdict();
        assert_eq!((v.gorenstein, v.ring_class), (false, RingClass::NotGorenstein));
        let v = p(4, 6, 1).gorenstein_verdict();
        assert_eq!((v.gorenstein, v.ring_class), (true, RingClass::CompleteIntersection));
    }

    #[test]
    fn maximality_and_fibers() {
        assert!(p(2, 9, 1).is_nr_maximal());
        assert!(p(3, 5, 1).is_nr_maximal());
        assert!(!p(4, 6, 1).is_nr_maximal());
        assert_eq!(p(3, 5, 1).fiber_length(2), 1);
        assert_eq!(p(4, 6, 1).fiber_length(4), 1);
        assert_eq!(p(4, 6, 1).fiber_length(7), 0);
        for a in 2..8 {
            for b in a..20 {
                assert_eq!(p(a, b, 1).fiber_length(1), a - 1);
            }
        }
    }

    #[test]
    fn e1_values() {
        assert_eq!(p(3, 5, 1).normal_e1(), 4);
        assert_eq!(p(4, 6, 1).normal_e1(), 8);
        assert_eq!(p(2, 2, 1).normal_e1(), 1);
    }

    #[test]
    fn embedding_dimension() {
        assert!(p(2, 7, 1).max_embedding_dimension());
        assert!(p(3, 5, 1).max_embedding_dimension());
        assert!(!p(3, 4, 1).max_embedding_dimension());
    }

    #[test]
    fn presentations() {
        assert_eq!(p(3, 5, 1).presentation(3).exponents, vec![3, 2, 0]);
        assert_eq!(p(3, 5, 1).presentation(1).exponents, vec![1, 0, 0]);
        assert_eq!(p(4, 6, 1).presentation(5).exponents, vec![5, 4, 2, 1]);
    }

    #[test]
    fn hilbert_function() {
        assert_eq!(p(4, 6, 1).normal_hilbert_function(4), BigInt::from(8));
        assert_eq!(p(3, 5, 2).normal_hilbert_function(2), BigInt::from(4));
        for (a, b, m) in [(3, 5, 1), (5, 7, 3), (2, 2, 2)] {
            assert_eq!(p(a, b, m).normal_hilbert_function(1), BigInt::from(1));
            assert_eq!(p(a, b, m).normal_hilbert_function(0), BigInt::from(0));
        }
        let t: Vec<BigInt> = (0..9).map(|n| p(3, 5, 2).normal_hilbert_function(n)).collect();
        let want: Vec<BigInt> = [0, 1, 4, 9, 17, 28, 42, 59, 79].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(t, want);
    }

    fn ints(v: &Option<Vec<ExactInt>>) -> Vec<i64> {
        v.as_ref().unwrap().iter().map(|x| i64::try_from(&x.0).unwrap()).collect()
    }

    #[test]
    fn analyze_three_five() {
        for m in 1..=3 {
            let r = p(3, 5, m).analyze().unwrap();
            assert_eq!(r.invariants.reduction_number, Some(3));
            assert_eq!(ints(&r.invariants.h_vector), vec![1, 1, 0, 1]);
            assert_eq!(r.invariants.maximal, Some(true));
            assert_eq!(r.gorenstein(), Status::Fails);
        }
        let r = p(3, 5, 3).analyze().unwrap();
        assert_eq!(ints(&r.invariants.hilbert_coefficients), vec![3, 4, 3, 1]);
        assert!(r.provenance.notes.iter().any(|n| n.ends_with("true")));
    }

    #[test]
    fn analyze_small_cases() {
        let r = p(3, 4, 1).analyze().unwrap();
        assert_eq!(ints(&r.invariants.hilbert_coefficients), vec![3, 3]);
        assert_eq!(r.invariants.reduction_number, Some(2));
        assert_eq!(r.gorenstein(), Status::Holds);
        let r = p(2, 3, 1).analyze().unwrap();
        assert_eq!(r.invariants.reduction_number, Some(1));
        assert_eq!(r.gorenstein(), Status::Holds);
        assert_eq!(r.verdicts.ring_class, Some(RingClass::NonreducedHypersurface));
        let r = p(4, 6, 2).analyze().unwrap();
        assert_eq!(ints(&r.invariants.hilbert_coefficients), vec![4, 8, 9]);
        assert_eq!(ints(&r.invariants.h_vector), vec![1, 1, 0, 1, 1]);
        assert_eq!(r.gorenstein(), Status::Holds);
        assert!(p(3, 5, 1).analyze_with(Some(5)).is_err());
    }
}
