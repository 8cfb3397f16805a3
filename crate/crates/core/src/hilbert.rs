//! Filtration-agnostic numerics.
//!
//! A Hilbert filtration `F = {F_n}` of a `d`-dimensional local ring is seen
//! only through its length table `H(n) = ℓ(A/F_n)`. From that table this module
//! extracts the Hilbert polynomial
//!
//! ```text
//! P(n) = Σ_{i=0}^{d} (-1)^i e_i C(n+d-1-i, d-i)
//! ```
//!
//! the postulation number, and the h-vector of the associated graded ring
//! `G(F)`, and evaluates the numeric Gorenstein criteria on top of them.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinat::{binomial, multichoose_poly};
use crate::report::{exact_vec, ExactInt, Instance, Invariants, Report, Verdicts};
use crate::verdict::{Criterion, Verdict, VerdictConflict};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("the h-vector is zero")]
    ZeroVector,
    #[error("h-vector entries sum to {0}; the multiplicity must be at least 1")]
    NonPositiveMultiplicity(BigInt),
    #[error("length table does not stabilize: {found} consecutive fit points, {needed} required")]
    NonStabilized { needed: usize, found: usize },
    #[error("fitted Hilbert coefficients are not integral")]
    NonIntegerFit,
    #[error("invalid length table: {0}")]
    InvalidProfile(String),
    #[error("domain violation: {0}")]
    Domain(String),
    #[error("h-vector entry h_{index} = {value} is negative")]
    NegativeEntry { index: usize, value: BigInt },
    #[error("missing hypothesis: {0}")]
    Inapplicable(&'static str),
    #[error(transparent)]
    Conflict(#[from] VerdictConflict),
}

/// How many consecutive agreeing points count as evidence that a sequence has
/// reached its polynomial regime: `d + 2 + extra_points`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FitPolicy {
    pub extra_points: usize,
}

impl FitPolicy {
    pub fn required_points(&self, dim: u32) -> usize {
        dim as usize + 2 + self.extra_points
    }
}

/// Hypotheses the numbers alone cannot certify.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Assumptions {
    /// The base ring `A` is Gorenstein.
    pub ambient_gorenstein: bool,
    /// `G(F)` is Cohen-Macaulay.
    pub assoc_graded_cm: bool,
    /// `depth G(F) >= d - 1`.
    pub depth_at_least_d_minus_1: bool,
}

impl Assumptions {
    pub fn all() -> Self {
        Assumptions {
            ambient_gorenstein: true,
            assoc_graded_cm: true,
            depth_at_least_d_minus_1: true,
        }
    }

    /// Cohen-Macaulayness already gives the depth bound.
    pub fn depth_ok(&self) -> bool {
        self.depth_at_least_d_minus_1 || self.assoc_graded_cm
    }
}

/// Numerator `h_0 + h_1 t + ... + h_s t^s` of the Hilbert series of `G(F)`
/// over `(1-t)^d`, with `h_s != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HVector {
    coeffs: Vec<BigInt>,
    dim: u32,
}

impl HVector {
    /// Trims trailing zeros. Rejects the zero vector and vectors whose entries
    /// do not sum to a positive multiplicity.
    pub fn new(mut coeffs: Vec<BigInt>, dim: u32) -> Result<Self, HilbertError> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(HilbertError::ZeroVector);
        }
        let sum: BigInt = coeffs.iter().sum();
        if sum < BigInt::one() {
            return Err(HilbertError::NonPositiveMultiplicity(sum));
        }
        Ok(HVector { coeffs, dim })
    }

    pub fn from_i64s(coeffs: &[i64], dim: u32) -> Result<Self, HilbertError> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), dim)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// `s`, the index of the last nonzero entry.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn multiplicity(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        is_symmetric(self)
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    /// First `len` coefficients of `h(t) / (1-t)^d`, i.e. the Hilbert function
    /// `n ↦ ℓ(F_n/F_{n+1})` of `G(F)`.
    pub fn series_prefix(&self, len: usize) -> Vec<BigInt> {
        let mut c: Vec<BigInt> = (0..len)
            .map(|j| self.coeffs.get(j).cloned().unwrap_or_default())
            .collect();
        for _ in 0..self.dim {
            for j in 1..len {
                let prev = c[j - 1].clone();
                c[j] += prev;
            }
        }
        c
    }

    fn display(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// `(e_0, ..., e_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertCoefficients {
    e: Vec<BigInt>,
    dim: u32,
}

impl HilbertCoefficients {
    pub fn new(e: Vec<BigInt>, dim: u32) -> Result<Self, HilbertError> {
        if e.len() != dim as usize + 1 {
            return Err(HilbertError::Domain(format!(
                "expected {} coefficients for dimension {dim}, got {}",
                dim + 1,
                e.len()
            )));
        }
        if e[0] < BigInt::one() {
            return Err(HilbertError::Domain(format!(
                "multiplicity e0 = {} must be positive",
                e[0]
            )));
        }
        Ok(HilbertCoefficients { e, dim })
    }

    pub fn from_i64s(e: &[i64], dim: u32) -> Result<Self, HilbertError> {
        Self::new(e.iter().map(|&v| BigInt::from(v)).collect(), dim)
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.e
    }

    pub fn e(&self, i: usize) -> &BigInt {
        &self.e[i]
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.e.iter().map(ToPrimitive::to_i64).collect()
    }

    /// `P(n)`, valid for every integer `n`.
    pub fn eval(&self, n: i64) -> BigInt {
        let d = self.dim;
        let mut acc = BigInt::zero();
        for (i, ei) in self.e.iter().enumerate() {
            let term = ei * multichoose_poly(n, d - i as u32);
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
}

/// Length table `H(0..=N)` of a Hilbert filtration plus the hypotheses the
/// caller vouches for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationProfile {
    dim: u32,
    lengths: Vec<BigInt>,
    assumptions: Assumptions,
}

impl FiltrationProfile {
    /// Requires `d >= 1`, `H(0) = 0`, `H(1) >= 1` and `H` non-decreasing.
    pub fn new(dim: u32, lengths: Vec<BigInt>, assumptions: Assumptions) -> Result<Self, HilbertError> {
        if dim == 0 {
            return Err(HilbertError::InvalidProfile("dimension must be at least 1".into()));
        }
        if lengths.len() < 2 {
            return Err(HilbertError::InvalidProfile(
                "need at least H(0) and H(1)".into(),
            ));
        }
        if !lengths[0].is_zero() {
            return Err(HilbertError::InvalidProfile(format!(
                "H(0) must be 0, got {}",
                lengths[0]
            )));
        }
        if lengths[1] < BigInt::one() {
            return Err(HilbertError::InvalidProfile(format!(
                "H(1) = ℓ(A/F_1) must be at least 1, got {}",
                lengths[1]
            )));
        }
        if let Some(n) = (1..lengths.len()).find(|&n| lengths[n] < lengths[n - 1]) {
            return Err(HilbertError::InvalidProfile(format!(
                "H is decreasing at n = {n}: {} > {}",
                lengths[n - 1],
                lengths[n]
            )));
        }
        Ok(FiltrationProfile {
            dim,
            lengths,
            assumptions,
        })
    }

    pub fn from_i64s(dim: u32, lengths: &[i64], assumptions: Assumptions) -> Result<Self, HilbertError> {
        Self::new(dim, lengths.iter().map(|&v| BigInt::from(v)).collect(), assumptions)
    }

    /// Integrates `h(t)/(1-t)^d` into the length table `H(0..=max_n)`.
    pub fn from_hvector(h: &HVector, max_n: usize, assumptions: Assumptions) -> Result<Self, HilbertError> {
        let c = h.series_prefix(max_n);
        let mut lengths = Vec::with_capacity(max_n + 1);
        lengths.push(BigInt::zero());
        for cn in c {
            let next = lengths.last().unwrap() + cn;
            lengths.push(next);
        }
        Self::new(h.dim(), lengths, assumptions)
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn lengths(&self) -> &[BigInt] {
        &self.lengths
    }

    pub fn assumptions(&self) -> Assumptions {
        self.assumptions
    }

    pub fn with_assumptions(mut self, assumptions: Assumptions) -> Self {
        self.assumptions = assumptions;
        self
    }

    /// `λ = ℓ(A/F_1)`.
    pub fn lambda(&self) -> &BigInt {
        &self.lengths[1]
    }

    /// `c_n = H(n+1) - H(n) = ℓ(F_n/F_{n+1})` for `n = 0..N-1`.
    pub fn increments(&self) -> Vec<BigInt> {
        self.lengths.windows(2).map(|w| &w[1] - &w[0]).collect()
    }

    /// `H(n)` for any integer `n`; `F_n = A` below zero.
    fn length_at(&self, n: i64) -> BigInt {
        if n < 0 {
            BigInt::zero()
        } else {
            self.lengths[n as usize].clone()
        }
    }
}

/// Result of fitting the Hilbert polynomial to a length table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileFit {
    pub coefficients: HilbertCoefficients,
    /// `sup{n : H(n) != P(n)}` with `H(n) = 0` for `n < 0`.
    pub postulation: i64,
    /// Number of supplied indices past the postulation number.
    pub fit_points: usize,
}

/// Fits `P` from iterated backward differences of `H` read at the last index,
/// then scans downward for the last disagreement.
pub fn fit_profile_with(p: &FiltrationProfile, policy: FitPolicy) -> Result<ProfileFit, HilbertError> {
    let d = p.dim as usize;
    let top = p.lengths.len() - 1;
    // diffs[j] = ∇^{d-j} H on indices 0..=top, with H = 0 below index 0.
    let mut diffs: Vec<Vec<BigInt>> = vec![p.lengths.clone()];
    for _ in 0..d {
        let prev = diffs.last().unwrap();
        let next: Vec<BigInt> = (0..=top)
            .map(|n| if n == 0 { prev[0].clone() } else { &prev[n] - &prev[n - 1] })
            .collect();
        diffs.push(next);
    }
    diffs.reverse();

    // ∇ maps the degree-j part of P onto the degree-(j-1) part, so the value of
    // ∇^{d-j} H at the last index pins e_j once e_0..e_{j-1} are known.
    let n = top as i64;
    let mut e: Vec<BigInt> = Vec::with_capacity(d + 1);
    for (j, level) in diffs.iter().enumerate() {
        let mut known = BigInt::zero();
        for (i, ei) in e.iter().enumerate() {
            let term = ei * multichoose_poly(n, (j - i) as u32);
            if i % 2 == 0 {
                known += term;
            } else {
                known -= term;
            }
        }
        let rest = &level[top] - known;
        e.push(if j % 2 == 0 { rest } else { -rest });
    }
    if e[0] < BigInt::one() {
        return Err(HilbertError::NonStabilized {
            needed: policy.required_points(p.dim),
            found: 0,
        });
    }
    let coefficients = HilbertCoefficients { e, dim: p.dim };

    let mut postulation = n;
    while postulation >= 0 && p.length_at(postulation) == coefficients.eval(postulation) {
        postulation -= 1;
    }
    let fit_points = (n - postulation.max(-1)) as usize;
    let needed = policy.required_points(p.dim);
    if fit_points < needed {
        return Err(HilbertError::NonStabilized {
            needed,
            found: fit_points,
        });
    }
    if postulation < 0 {
        // Below the table H vanishes; P has at most d roots, so this ends fast.
        while p.length_at(postulation) == coefficients.eval(postulation) {
            postulation -= 1;
        }
    }
    Ok(ProfileFit {
        coefficients,
        postulation,
        fit_points,
    })
}

pub fn fit_profile(p: &FiltrationProfile) -> Result<ProfileFit, HilbertError> {
    fit_profile_with(p, FitPolicy::default())
}

pub fn coefficients_from_profile(p: &FiltrationProfile) -> Result<HilbertCoefficients, HilbertError> {
    fit_profile(p).map(|f| f.coefficients)
}

pub fn postulation_number(p: &FiltrationProfile) -> Result<i64, HilbertError> {
    fit_profile(p).map(|f| f.postulation)
}

/// `r(F) = n(F) + d`, valid when `depth G(F) >= d - 1`.
pub fn reduction_from_postulation(n_f: i64, d: u32, depth_at_least_d_minus_1: bool) -> Result<i64, HilbertError> {
    if !depth_at_least_d_minus_1 {
        return Err(HilbertError::Inapplicable("depth G(F) >= d - 1"));
    }
    Ok(n_f + d as i64)
}

/// `h_j = Σ_{i=0}^{d} (-1)^i C(d,i) c_{j-i}`, trimmed. The transform must
/// vanish on at least one trailing index, which is the same evidence the
/// polynomial fit asks for (`d + 2` agreeing points of `H`).
pub fn h_vector_from_increments_with(c: &[BigInt], d: u32, policy: FitPolicy) -> Result<HVector, HilbertError> {
    let signed_binomials: Vec<BigInt> = (0..=d as i64)
        .map(|i| {
            let b = binomial(d as i64, i);
            if i % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .collect();
    let h: Vec<BigInt> = (0..c.len())
        .map(|j| {
            signed_binomials
                .iter()
                .enumerate()
                .take(j + 1)
                .map(|(i, b)| b * &c[j - i])
                .sum()
        })
        .collect();
    let Some(last) = h.iter().rposition(|x| !x.is_zero()) else {
        return Err(HilbertError::ZeroVector);
    };
    // The table behind `c` agrees with its polynomial on `trailing + d + 1`
    // points past the postulation number.
    let trailing = h.len() - 1 - last;
    let found = trailing + d as usize + 1;
    let needed = policy.required_points(d);
    if trailing == 0 || found < needed {
        return Err(HilbertError::NonStabilized { needed, found });
    }
    HVector::new(h, d)
}

pub fn h_vector_from_increments(c: &[BigInt], d: u32) -> Result<HVector, HilbertError> {
    h_vector_from_increments_with(c, d, FitPolicy::default())
}

/// `h_i = h_{s-i}` for all `i`.
pub fn is_symmetric(h: &HVector) -> bool {
    let c = &h.coeffs;
    c.iter().eq(c.iter().rev())
}

/// Over a Gorenstein base with Cohen-Macaulay `G(F)`, `G(F)` is Gorenstein iff
/// its h-vector is palindromic.
pub fn gorenstein_by_symmetry(h: &HVector, assumptions: &Assumptions) -> Verdict {
    if !(assumptions.ambient_gorenstein && assumptions.assoc_graded_cm) {
        return Verdict::inapplicable(
            Criterion::HVectorSymmetry,
            "needs a Gorenstein base ring and Cohen-Macaulay G(F)",
        );
    }
    let sym = is_symmetric(h);
    Verdict::decided(
        sym,
        Criterion::HVectorSymmetry,
        format!(
            "h = {} is {}palindromic",
            h.display(),
            if sym { "" } else { "not " }
        ),
    )
}

/// Hilbert series numerator `λ + (e0 - λ) t` for reduction number one.
pub fn hs_reduction_one(lambda: impl Into<BigInt>, e0: impl Into<BigInt>, d: u32) -> Result<HVector, HilbertError> {
    let (lambda, e0) = (lambda.into(), e0.into());
    if lambda < BigInt::one() || lambda > e0 {
        return Err(HilbertError::Domain(format!(
            "need 1 <= λ <= e0, got λ = {lambda}, e0 = {e0}"
        )));
    }
    let t1 = &e0 - &lambda;
    HVector::new(vec![lambda, t1], d)
}

/// Hilbert series numerator `λ + (2e0 - e1 - 2λ) t + (λ - e0 + e1) t^2` for
/// reduction number two with `F2 ∩ Q = Q F1`.
pub fn hs_reduction_two(
    lambda: impl Into<BigInt>,
    e0: impl Into<BigInt>,
    e1: impl Into<BigInt>,
    d: u32,
) -> Result<HVector, HilbertError> {
    let (lambda, e0, e1) = (lambda.into(), e0.into(), e1.into());
    let h1 = BigInt::from(2) * &e0 - &e1 - BigInt::from(2) * &lambda;
    let h2 = &lambda - &e0 + &e1;
    let h = vec![lambda, h1, h2];
    if let Some((index, value)) = h.iter().enumerate().find(|(_, v)| v.is_negative()) {
        return Err(HilbertError::NegativeEntry {
            index,
            value: value.clone(),
        });
    }
    HVector::new(h, d)
}

pub fn gorenstein_r1(e0: impl Into<BigInt>, e1: impl Into<BigInt>) -> bool {
    e0.into() == BigInt::from(2) * e1.into()
}

pub fn gorenstein_r2(e0: impl Into<BigInt>, e1: impl Into<BigInt>) -> bool {
    e0.into() == e1.into()
}

/// [`gorenstein_r1`] gated on a Gorenstein base.
pub fn reduction_one_verdict(e0: &BigInt, e1: &BigInt, assumptions: &Assumptions) -> Verdict {
    if !assumptions.ambient_gorenstein {
        return Verdict::inapplicable(Criterion::ReductionOne, "needs a Gorenstein base ring");
    }
    Verdict::decided(
        gorenstein_r1(e0.clone(), e1.clone()),
        Criterion::ReductionOne,
        format!("r = 1: e0 = {e0}, 2·e1 = {}", BigInt::from(2) * e1),
    )
}

/// [`gorenstein_r2`] gated on a Gorenstein base and Cohen-Macaulay `G(F)`
/// (which supplies `F2 ∩ Q = Q F1`).
pub fn reduction_two_verdict(e0: &BigInt, e1: &BigInt, assumptions: &Assumptions) -> Verdict {
    if !(assumptions.ambient_gorenstein && assumptions.assoc_graded_cm) {
        return Verdict::inapplicable(
            Criterion::ReductionTwo,
            "needs a Gorenstein base ring and F2 ∩ Q = Q F1",
        );
    }
    Verdict::decided(
        gorenstein_r2(e0.clone(), e1.clone()),
        Criterion::ReductionTwo,
        format!("r = 2: e0 = {e0}, e1 = {e1}"),
    )
}

/// `e1 - e0 + λ + 1`.
pub fn relative_reduction_bound(e0: impl Into<BigInt>, e1: impl Into<BigInt>, lambda: impl Into<BigInt>) -> BigInt {
    e1.into() - e0.into() + lambda.into() + 1
}

pub fn is_maximal_nr(
    nr: impl Into<BigInt>,
    e0: impl Into<BigInt>,
    e1: impl Into<BigInt>,
    lambda: impl Into<BigInt>,
) -> bool {
    nr.into() == relative_reduction_bound(e0, e1, lambda)
}

/// `λ + (e0 - λ - 1) t + t^r` for a maximal relative reduction number `r >= 2`.
pub fn hs_maximal(lambda: impl Into<BigInt>, e0: impl Into<BigInt>, r: usize, d: u32) -> Result<HVector, HilbertError> {
    let (lambda, e0) = (lambda.into(), e0.into());
    if r < 2 {
        return Err(HilbertError::Domain(format!("need r >= 2, got {r}")));
    }
    if lambda < BigInt::one() || e0 < &lambda + 1 {
        return Err(HilbertError::Domain(format!(
            "need 1 <= λ and e0 >= λ + 1, got λ = {lambda}, e0 = {e0}"
        )));
    }
    let mut h = vec![BigInt::zero(); r + 1];
    h[1] = &e0 - &lambda - 1;
    h[0] = lambda;
    h[r] += 1;
    HVector::new(h, d)
}

/// Gorenstein criterion for maximal relative reduction number `r >= 2`:
/// `r = 2` needs `λ = 1`; `r >= 3` needs `λ = 1` and `e0 = 2`.
pub fn gorenstein_maximal(
    lambda: &BigInt,
    e0: &BigInt,
    r: i64,
    assumptions: &Assumptions,
    nr_maximal: bool,
) -> Verdict {
    if !(assumptions.ambient_gorenstein && assumptions.assoc_graded_cm && nr_maximal) {
        return Verdict::inapplicable(
            Criterion::MaximalRelativeReduction,
            "needs a Gorenstein base ring, Cohen-Macaulay G(F) and maximal nr",
        );
    }
    if r < 2 {
        return Verdict::inapplicable(Criterion::MaximalRelativeReduction, format!("r = {r} < 2"));
    }
    let lambda_one = lambda.is_one();
    if r == 2 {
        Verdict::decided(
            lambda_one,
            Criterion::MaximalRelativeReduction,
            format!("r = 2: λ = {lambda}"),
        )
    } else {
        Verdict::decided(
            lambda_one && *e0 == BigInt::from(2),
            Criterion::MaximalRelativeReduction,
            format!("r = {r}: λ = {lambda}, e0 = {e0}"),
        )
    }
}

/// `e_i = C(nr, i)` for `2 <= i <= d`.
pub fn ei_binomial_check(nr: i64, e: &HilbertCoefficients) -> bool {
    (2..=e.dim as usize).all(|i| e.e[i] == binomial(nr, i as i64))
}

/// `e_i = Σ_j C(j, i) h_j`.
pub fn coefficients_from_hvector(h: &HVector) -> HilbertCoefficients {
    let e = (0..=h.dim as i64)
        .map(|i| {
            h.coeffs
                .iter()
                .enumerate()
                .map(|(j, hj)| binomial(j as i64, i) * hj)
                .sum()
        })
        .collect();
    HilbertCoefficients { e, dim: h.dim }
}

/// Full numeric pipeline on a user-supplied length table: fit, h-vector,
/// reduction numbers, and every Gorenstein criterion the hypothesis flags
/// allow. A table that never stabilizes is reported in-band as inapplicable.
pub fn analyze_profile(p: &FiltrationProfile) -> Result<Report, HilbertError> {
    let assumptions = p.assumptions;
    let lambda = p.lambda().clone();
    let mut invariants = Invariants {
        dim: p.dim,
        lambda: ExactInt::from(&lambda),
        length_table: exact_vec(&p.lengths),
        e0: None,
        e1: None,
        hilbert_coefficients: None,
        reduction_number: None,
        relative_reduction_number: None,
        bound: None,
        maximal: None,
        h_vector: None,
        postulation_number: None,
    };
    let cohen_macaulay = assumptions.assoc_graded_cm.then_some(true);
    let instance = Instance::Filtration { dim: p.dim };

    let fitted = fit_profile(p)
        .and_then(|fit| Ok((h_vector_from_increments(&p.increments(), p.dim)?, fit)));
    let (h, fit) = match fitted {
        Ok(v) => v,
        Err(err @ HilbertError::NonStabilized { .. }) => {
            let verdicts = Verdicts {
                gorenstein: Verdict::inapplicable(Criterion::Stabilization, err.to_string()),
                cohen_macaulay,
                ring_class: None,
                max_embedding_dimension: None,
            };
            return Ok(Report::new(instance, invariants, verdicts, assumptions, vec![]));
        }
        Err(err) => return Err(err),
    };

    let e = &fit.coefficients;
    let e0 = e.e(0).clone();
    let e1 = if p.dim >= 1 { e.e(1).clone() } else { BigInt::zero() };
    let reduction = assumptions
        .depth_ok()
        .then(|| fit.postulation + p.dim as i64);
    // Cohen-Macaulay G(F) forces nr = r.
    let nr = if assumptions.assoc_graded_cm { reduction } else { None };
    let bound = relative_reduction_bound(e0.clone(), e1.clone(), lambda.clone());
    let maximal = nr.map(|nr| BigInt::from(nr) == bound);

    let mut parts = vec![gorenstein_by_symmetry(&h, &assumptions)];
    if assumptions.assoc_graded_cm {
        match reduction {
            Some(1) => parts.push(reduction_one_verdict(&e0, &e1, &assumptions)),
            Some(2) => parts.push(reduction_two_verdict(&e0, &e1, &assumptions)),
            _ => {}
        }
    }
    if let (Some(true), Some(r)) = (maximal, nr) {
        if r >= 2 {
            parts.push(gorenstein_maximal(&lambda, &e0, r, &assumptions, true));
        }
    }
    let gorenstein = Verdict::combine(parts)?;

    let mut notes = Vec::new();
    if let (Some(true), Some(nr)) = (maximal, nr) {
        if p.dim >= 2 {
            notes.push(format!(
                "maximal nr: e_i = C({nr}, i) for 2 <= i <= d: {}",
                ei_binomial_check(nr, e)
            ));
        }
    }

    invariants.e0 = Some(ExactInt::from(&e0));
    invariants.e1 = Some(ExactInt::from(&e1));
    invariants.hilbert_coefficients = Some(exact_vec(e.coeffs()));
    invariants.reduction_number = reduction;
    invariants.relative_reduction_number = nr;
    invariants.bound = Some(ExactInt::from(bound));
    invariants.maximal = maximal;
    invariants.h_vector = Some(exact_vec(h.coeffs()));
    invariants.postulation_number = Some(fit.postulation);

    let verdicts = Verdicts {
        gorenstein,
        cohen_macaulay,
        ring_class: None,
        max_embedding_dimension: None,
    };
    Ok(Report::new(instance, invariants, verdicts, assumptions, notes))
}
