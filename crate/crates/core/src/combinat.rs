use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(n, k)` with the counting convention: zero whenever `n < k` or `n < 0`.
pub(crate) fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || n < k {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n + k - 1, k)` read as a polynomial in `n`, i.e. the rising factorial
/// `n (n+1) ... (n+k-1) / k!`. Agrees with [`binomial`] for `n >= 1` and stays
/// a polynomial for `n <= 0` (in particular it is `1` for `k = 0`).
pub(crate) fn multichoose_poly(n: i64, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= n + i;
        den *= i + 1;
    }
    num / den
}

pub(crate) fn ceil_div(num: u64, den: u64) -> u64 {
    num.div_ceil(den)
}
