//! Brute-force twins of the closed forms in [`crate::semigroup`],
//! [`crate::zariski`] and [`crate::hilbert`].
//!
//! Each routine here counts lattice points or multiplies polynomials directly
//! and shares no code path with the function it checks. Bounds are always
//! derived from the instance.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinat::binomial;
use crate::hilbert::{self, FiltrationProfile, HVector, HilbertCoefficients, HilbertError};
use crate::report::Verification;
use crate::semigroup::NumericalSemigroup;
use crate::zariski::ZariskiParams;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no generators given")]
    EmptyGenerators,
    #[error("generators have gcd {0}")]
    GcdNotOne(u64),
    #[error("bound {bound} is below the required {needed}")]
    BoundTooSmall { bound: u64, needed: u64 },
    #[error("singular system while fitting")]
    Singular,
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
}

/// A closed form disagreed with its twin.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub instance: String,
    pub invariant: String,
    pub detail: String,
}

/// Representable sums found by breadth-first search from `0`, up to `m1·mn`.
fn reachable(gens: &[u64]) -> Result<Vec<bool>, OracleError> {
    let Some(&m1) = gens.iter().min() else {
        return Err(OracleError::EmptyGenerators);
    };
    let mn = *gens.iter().max().unwrap();
    let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
    if g != 1 {
        return Err(OracleError::GcdNotOne(g));
    }
    let limit = (m1 * mn) as usize;
    let mut seen = vec![false; limit + 1];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(s) = queue.pop_front() {
        for &gen in gens {
            let t = s + gen as usize;
            if t <= limit && !seen[t] {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    Ok(seen)
}

/// Largest gap below `m1·mn`, or `-1` when there is none.
pub fn brute_frobenius(gens: &[u64]) -> Result<i64, OracleError> {
    let seen = reachable(gens)?;
    Ok(seen.iter().rposition(|&x| !x).map_or(-1, |i| i as i64))
}

/// Genus and symmetry straight from the gap set: `S` is symmetric iff it has
/// exactly `(F + 1)/2` gaps.
pub fn brute_symmetric(gens: &[u64]) -> Result<bool, OracleError> {
    let seen = reachable(gens)?;
    let f = seen.iter().rposition(|&x| !x).map_or(-1, |i| i as i64);
    let gaps = seen.iter().filter(|&&x| !x).count() as i64;
    Ok(2 * gaps == f + 1)
}

/// `#{s ∈ S : s < m1·n}` by enumerating sums, with a window wide enough to
/// cover `m1·n`.
pub fn brute_semigroup_lengths(gens: &[u64], max_n: u64) -> Result<Vec<u64>, OracleError> {
    let m1 = *gens.iter().min().ok_or(OracleError::EmptyGenerators)?;
    let top = (m1 * max_n) as usize;
    let mut seen = reachable(gens)?;
    // beyond m1·mn every integer is reachable
    seen.resize(seen.len().max(top + 1), true);
    Ok((0..=max_n)
        .map(|n| seen[..(m1 * n) as usize].iter().filter(|&&x| x).count() as u64)
        .collect())
}

/// Least `n0 >= 1` with `H(n+1) - H(n) = m1` for every `n >= n0` in range.
pub fn brute_semigroup_reduction(gens: &[u64]) -> Result<u64, OracleError> {
    let m1 = *gens.iter().min().ok_or(OracleError::EmptyGenerators)?;
    let mn = *gens.iter().max().unwrap();
    let max_n = mn + 2;
    let h = brute_semigroup_lengths(gens, max_n)?;
    let mut n0 = max_n;
    while n0 > 1 && h[n0 as usize] - h[n0 as usize - 1] == m1 {
        n0 -= 1;
    }
    Ok(n0)
}

/// `ℓ(\bar{m^n} / Q \bar{m^{n-1}})` by set difference: elements of order at
/// least `m1·n` that are not `m1` plus an element of order at least `m1·(n-1)`.
pub fn brute_semigroup_fiber(gens: &[u64], n: u64) -> Result<u64, OracleError> {
    let m1 = *gens.iter().min().ok_or(OracleError::EmptyGenerators)?;
    let mn = *gens.iter().max().unwrap();
    let mut seen = reachable(gens)?;
    let top = (m1 * (n + mn + 1)) as usize;
    seen.resize(seen.len().max(top + 1), true);
    let lo = (m1 * n) as usize;
    Ok((lo..=top)
        .filter(|&s| seen[s] && !(s >= m1 as usize && seen[s - m1 as usize]))
        .count() as u64)
}

/// `h = c · (1 - t)^d` by explicit polynomial multiplication, trimmed.
pub fn brute_hvector(c: &[BigInt], d: u32) -> Result<HVector, OracleError> {
    let mut poly = c.to_vec();
    for _ in 0..d {
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (i, x) in poly.iter().enumerate() {
            next[i] += x;
            next[i + 1] -= x;
        }
        // the truncated series only knows the first c.len() coefficients
        next.truncate(c.len());
        poly = next;
    }
    Ok(HVector::new(poly, d)?)
}

/// `x (x-1) ... (x-k+1) / k!` for any integer `x`.
fn falling_binomial(x: i64, k: i64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= x - i;
        den *= i + 1;
    }
    num / den
}

/// Solves for `e_0..e_d` on the last `d + 1` points of `H` by exact rational
/// elimination, then checks the fit on one more point.
pub fn brute_fit(lengths: &[BigInt], d: u32) -> Result<HilbertCoefficients, OracleError> {
    let k = d as usize + 1;
    if lengths.len() < k + 1 {
        return Err(OracleError::Hilbert(HilbertError::NonStabilized {
            needed: k + 1,
            found: lengths.len(),
        }));
    }
    let top = lengths.len() - 1;
    // P(n) = Σ_i (-1)^i e_i C(n + d - 1 - i, d - i)
    let basis = |n: i64, i: usize| -> BigRational {
        let sign = if i.is_multiple_of(2) { 1 } else { -1 };
        let c = falling_binomial(n + d as i64 - 1 - i as i64, d as i64 - i as i64);
        BigRational::from_integer(c * sign)
    };
    let mut rows: Vec<Vec<BigRational>> = (0..k)
        .map(|row| {
            let n = (top - row) as i64;
            let mut r: Vec<BigRational> = (0..k).map(|i| basis(n, i)).collect();
            r.push(BigRational::from_integer(lengths[top - row].clone()));
            r
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k)
            .find(|&r| !rows[r][col].is_zero())
            .ok_or(OracleError::Singular)?;
        rows.swap(col, pivot);
        let inv = BigRational::one() / rows[col][col].clone();
        for x in rows[col].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &factor * p;
                }
            }
        }
    }
    let mut e = Vec::with_capacity(k);
    for row in &rows {
        let v = &row[k];
        if !v.is_integer() {
            return Err(OracleError::Hilbert(HilbertError::NonIntegerFit));
        }
        e.push(v.to_integer());
    }
    let coeffs = HilbertCoefficients::new(e, d)?;
    let check = top - k;
    let p_check: BigInt = (0..k)
        .map(|i| basis(check as i64, i).to_integer() * coeffs.e(i))
        .sum();
    if p_check != lengths[check] {
        return Err(OracleError::Hilbert(HilbertError::NonStabilized {
            needed: k + 1,
            found: k,
        }));
    }
    Ok(coeffs)
}

/// `x^k ∈ \bar{Q^n}` iff `(x^k)^a = g^k` lies in `Q^{a n}`, i.e. `k b >= a n`.
pub fn xk_membership(p: &ZariskiParams, k: u64, n: u64) -> bool {
    k * p.b() >= p.a() * n
}

/// Compares the weight ideal `I = {x^k y^α : k b' + |α| a' >= n a'}` with the
/// ladder ideal `J_n = Σ_j x^j Q^{t_j}` on every monomial with `|α| <= bound`.
/// Monomials with the same `(k, |α|)` behave identically in both predicates,
/// so one representative per class suffices.
pub fn jn_equals_in(p: &ZariskiParams, n: u64, bound: u64) -> Result<bool, OracleError> {
    if bound < n {
        return Err(OracleError::BoundTooSmall { bound, needed: n });
    }
    let (ar, br) = (p.a_reduced(), p.b_reduced());
    let t: Vec<u64> = p.presentation(n).exponents;
    for k in 0..p.a() {
        for s in 0..=bound {
            let in_i = k * br + s * ar >= n * ar;
            let in_j = (0..=k as usize).any(|j| s >= t[j]);
            if in_i != in_j {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// [`jn_equals_in`] with the default instance-derived bound
/// `n·max(a', b') + m`.
pub fn jn_equals_in_default(p: &ZariskiParams, n: u64) -> Result<bool, OracleError> {
    jn_equals_in(p, n, n * p.a_reduced().max(p.b_reduced()) + p.m())
}

/// Number of `α ∈ ℕ^m` with `|α| = s`.
fn monomials_of_degree(s: u64, m: u64) -> BigInt {
    binomial((s + m - 1) as i64, (m - 1) as i64)
}

/// `ℓ(A / \bar{m^n})` as the number of basis monomials `x^k y^α` outside the
/// weight ideal.
pub fn brute_zariski_length(p: &ZariskiParams, n: u64) -> BigInt {
    let (ar, br) = (p.a_reduced(), p.b_reduced());
    let mut total = BigInt::zero();
    for k in 0..p.a() {
        let mut s = 0;
        while k * br + s * ar < n * ar {
            total += monomials_of_degree(s, p.m());
            s += 1;
        }
    }
    total
}

/// `ℓ(A / (Q + \bar{m^n}))`: pure `x`-powers outside the weight ideal.
pub fn brute_ell(p: &ZariskiParams, n: u64) -> u64 {
    (0..p.a())
        .filter(|&k| k * p.b_reduced() < n * p.a_reduced())
        .count() as u64
}

/// `ℓ(\bar{m^n} / Q \bar{m^{n-1}})` counted over all monomial classes with
/// their multiplicities.
pub fn brute_zariski_fiber(p: &ZariskiParams, n: u64) -> BigInt {
    let (ar, br) = (p.a_reduced(), p.b_reduced());
    let mut total = BigInt::zero();
    for k in 0..p.a() {
        for s in 0..=n {
            let in_fn = k * br + s * ar >= n * ar;
            let in_qf = s >= 1 && k * br + (s - 1) * ar >= n.saturating_sub(1) * ar;
            if in_fn && !in_qf {
                total += monomials_of_degree(s, p.m());
            }
        }
    }
    total
}

/// Least `n0` with `\bar{m^{n+1}} = Q \bar{m^n}` for every `n >= n0`, scanning
/// down from `b + 2`.
pub fn brute_zariski_reduction(p: &ZariskiParams) -> u64 {
    let top = p.b() + 2;
    let mut n0 = top;
    while n0 > 0 && brute_zariski_fiber(p, n0).is_zero() {
        n0 -= 1;
    }
    n0
}

/// Counts indecomposable generators `x^k t^{n_k}` of the graded maximal ideal
/// of the normal tangent cone: `x^k t^{n_k}` is a product iff
/// `n_i + n_{k-i} = n_k` for some `0 < i < k`.
pub fn brute_max_embedding_dimension(p: &ZariskiParams) -> bool {
    let a = p.a();
    let nk = |k: u64| k * p.b() / a;
    let indecomposable = (1..a)
        .filter(|&k| (1..k).all(|i| nk(i) + nk(k - i) != nk(k)))
        .count() as u64;
    indecomposable + p.m() == a + p.m() - 1
}

fn push_eq<T: PartialEq + std::fmt::Debug>(v: &mut Verification, name: &str, closed: T, brute: T) {
    let passed = closed == brute;
    v.push(name, passed, format!("closed form {closed:?}, oracle {brute:?}"));
}

/// Runs every semigroup twin.
pub fn verify_semigroup(s: &NumericalSemigroup) -> Result<Verification, OracleError> {
    let gens = s.generators();
    let mut v = Verification::default();
    let r = s.normal_reduction_number();
    let max_n = r + 3;
    push_eq(&mut v, "frobenius", s.frobenius(), brute_frobenius(gens)?);
    push_eq(&mut v, "symmetric", s.is_symmetric(), brute_symmetric(gens)?);
    let closed: Vec<u64> = (0..=max_n).map(|n| s.normal_power_length(n)).collect();
    push_eq(&mut v, "normal_power_length", closed, brute_semigroup_lengths(gens, max_n)?);
    if s.frobenius() >= 1 {
        push_eq(&mut v, "normal_reduction_number", r, brute_semigroup_reduction(gens)?);
    }
    let closed: Vec<u64> = (1..=r + 1).map(|n| s.fiber_length(n)).collect();
    let brute = (1..=r + 1)
        .map(|n| brute_semigroup_fiber(gens, n))
        .collect::<Result<Vec<_>, _>>()?;
    push_eq(&mut v, "fiber_length", closed, brute);
    let p = s.normal_profile(max_n as usize).map_err(|e| match e {
        crate::semigroup::SemigroupError::Hilbert(h) => OracleError::Hilbert(h),
        other => OracleError::Hilbert(HilbertError::Domain(other.to_string())),
    })?;
    verify_profile_into(&p, &mut v)?;
    Ok(v)
}

/// Runs every hypersurface twin, including `J_n = I_{n a'}` for `n <= r̄ + 2`.
pub fn verify_hypersurface(p: &ZariskiParams) -> Result<Verification, OracleError> {
    let mut v = Verification::default();
    let r = p.normal_reduction_number();
    let jn_fail = (1..=r + 2).find(|&n| !jn_equals_in_default(p, n).unwrap_or(false));
    v.push(
        "jn_equals_in",
        jn_fail.is_none(),
        match jn_fail {
            None => format!("J_n = I_(n a') for n = 1..={}", r + 2),
            Some(n) => format!("mismatch at n = {n}"),
        },
    );
    let ladder_ok = (1..p.a()).all(|k| {
        let nk = p.n_k(k);
        xk_membership(p, k, nk) && !xk_membership(p, k, nk + 1)
    });
    v.push("xk_membership", ladder_ok, format!("ladder {:?}", p.ladder()));
    let top = r + p.m() + 2;
    let closed: Vec<BigInt> = (0..=top).map(|n| p.normal_hilbert_function(n)).collect();
    let brute: Vec<BigInt> = (0..=top).map(|n| brute_zariski_length(p, n)).collect();
    push_eq(&mut v, "normal_hilbert_function", closed, brute);
    let closed: Vec<u64> = (1..=r + 1).map(|n| p.ell_n(n)).collect();
    let brute: Vec<u64> = (1..=r + 1).map(|n| brute_ell(p, n)).collect();
    push_eq(&mut v, "ell_n", closed, brute);
    let closed: Vec<BigInt> = (1..=r + 2).map(|n| BigInt::from(p.fiber_length(n))).collect();
    let brute: Vec<BigInt> = (1..=r + 2).map(|n| brute_zariski_fiber(p, n)).collect();
    push_eq(&mut v, "fiber_length", closed, brute);
    push_eq(&mut v, "normal_reduction_number", r, brute_zariski_reduction(p));
    push_eq(
        &mut v,
        "max_embedding_dimension",
        p.max_embedding_dimension(),
        brute_max_embedding_dimension(p),
    );
    let profile = p.normal_profile(top as usize).map_err(|e| match e {
        crate::zariski::ZariskiError::Hilbert(h) => OracleError::Hilbert(h),
        other => OracleError::Hilbert(HilbertError::Domain(other.to_string())),
    })?;
    verify_profile_into(&profile, &mut v)?;
    Ok(v)
}

/// Checks the difference-table fit and transform against their twins.
pub fn verify_profile(p: &FiltrationProfile) -> Result<Verification, OracleError> {
    let mut v = Verification::default();
    verify_profile_into(p, &mut v)?;
    Ok(v)
}

fn verify_profile_into(p: &FiltrationProfile, v: &mut Verification) -> Result<(), OracleError> {
    let c = p.increments();
    if let (Ok(fast), Ok(slow)) = (
        hilbert::h_vector_from_increments(&c, p.dim()),
        brute_hvector(&c, p.dim()),
    ) {
        let detail = format!("closed form {:?}, oracle {:?}", fast.coeffs(), slow.coeffs());
        v.push("h_vector", fast == slow, detail);
    }
    if let (Ok(fast), Ok(slow)) = (hilbert::coefficients_from_profile(p), brute_fit(p.lengths(), p.dim())) {
        let detail = format!("closed form {:?}, oracle {:?}", fast.coeffs(), slow.coeffs());
        v.push("hilbert_coefficients", fast == slow, detail);
    }
    Ok(())
}
