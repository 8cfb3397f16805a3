//! The `normcone.report.v1` document produced by every analysis.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::hilbert::Assumptions;
use crate::verdict::{Criterion, Verdict};
use crate::zariski::RingClass;

pub const SCHEMA_VERSION: &str = "normcone.report.v1";

/// Arbitrary-precision integer that serializes as a JSON integer when it fits
/// in `i64` and as a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactInt(pub BigInt);

impl From<BigInt> for ExactInt {
    fn from(v: BigInt) -> Self {
        ExactInt(v)
    }
}

impl From<&BigInt> for ExactInt {
    fn from(v: &BigInt) -> Self {
        ExactInt(v.clone())
    }
}

impl From<i64> for ExactInt {
    fn from(v: i64) -> Self {
        ExactInt(BigInt::from(v))
    }
}

impl From<u64> for ExactInt {
    fn from(v: u64) -> Self {
        ExactInt(BigInt::from(v))
    }
}

impl fmt::Display for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for ExactInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for ExactInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct IntVisitor;

        impl Visitor<'_> for IntVisitor {
            type Value = ExactInt;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExactInt, E> {
                Ok(ExactInt(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExactInt, E> {
                Ok(ExactInt(v.into()))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExactInt, E> {
                v.parse::<BigInt>().map(ExactInt).map_err(E::custom)
            }
        }

        d.deserialize_any(IntVisitor)
    }
}

pub(crate) fn exact_vec(v: &[BigInt]) -> Vec<ExactInt> {
    v.iter().map(ExactInt::from).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub instance: Instance,
    pub invariants: Invariants,
    pub verdicts: Verdicts,
    pub provenance: Provenance,
    #[serde(default)]
    pub verification: Option<Verification>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Instance {
    Semigroup {
        generators: Vec<u64>,
        frobenius: i64,
        genus: u64,
        symmetric: bool,
        apery_set: Vec<u64>,
    },
    Hypersurface {
        a: u64,
        b: u64,
        m: u64,
        gcd: u64,
        a_reduced: u64,
        b_reduced: u64,
        /// `n_k = ⌊k b / a⌋` for `k = 1..a-1`.
        ladder: Vec<u64>,
        /// `ℓ(A/(Q + F_n))` for `n = 1..=r`.
        colengths: Vec<u64>,
        /// `ℓ(F_n / Q F_{n-1})` for `n = 1..=r`.
        fiber_lengths: Vec<u64>,
    },
    Filtration {
        dim: u32,
    },
}

impl Instance {
    pub fn family(&self) -> &'static str {
        match self {
            Instance::Semigroup { .. } => "semigroup",
            Instance::Hypersurface { .. } => "hypersurface",
            Instance::Filtration { .. } => "filtration",
        }
    }
}

/// Numeric invariants of the filtration. Fields are `None` when the input does
/// not determine them (missing hypotheses or a length table that never
/// stabilized).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub dim: u32,
    /// `λ = ℓ(A/F_1)`.
    pub lambda: ExactInt,
    /// `H(0..=N)`.
    pub length_table: Vec<ExactInt>,
    pub e0: Option<ExactInt>,
    pub e1: Option<ExactInt>,
    pub hilbert_coefficients: Option<Vec<ExactInt>>,
    pub reduction_number: Option<i64>,
    pub relative_reduction_number: Option<i64>,
    /// `e1 - e0 + λ + 1`, the upper bound for the relative reduction number.
    pub bound: Option<ExactInt>,
    pub maximal: Option<bool>,
    pub h_vector: Option<Vec<ExactInt>>,
    pub postulation_number: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub gorenstein: Verdict,
    pub cohen_macaulay: Option<bool>,
    pub ring_class: Option<RingClass>,
    pub max_embedding_dimension: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub criteria_applied: Vec<Criterion>,
    pub assumptions: Assumptions,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl Report {
    pub(crate) fn new(
        instance: Instance,
        invariants: Invariants,
        verdicts: Verdicts,
        assumptions: Assumptions,
        notes: Vec<String>,
    ) -> Self {
        let criteria_applied = verdicts.gorenstein.deciding_criteria();
        Report {
            schema: SCHEMA_VERSION.to_string(),
            instance,
            invariants,
            verdicts,
            provenance: Provenance {
                criteria_applied,
                assumptions,
                notes,
            },
            verification: None,
        }
    }

    pub fn gorenstein(&self) -> crate::verdict::Status {
        self.verdicts.gorenstein.status
    }
}
