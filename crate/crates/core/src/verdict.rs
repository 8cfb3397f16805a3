//! Tri-state decisions with a criterion trail.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    Inapplicable,
}

impl Status {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Status::Holds
        } else {
            Status::Fails
        }
    }

    pub fn is_decided(self) -> bool {
        self != Status::Inapplicable
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Inapplicable => "inapplicable",
        })
    }
}

/// Identifiers of the numeric criteria a verdict can cite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// Palindromic h-vector of a Cohen-Macaulay associated graded ring over a
    /// Gorenstein base.
    HVectorSymmetry,
    /// Reduction number one: Gorenstein iff `e0 = 2 e1`.
    ReductionOne,
    /// Reduction number two (with `F2 ∩ Q = Q F1`): Gorenstein iff `e0 = e1`.
    ReductionTwo,
    /// Maximal relative reduction number `r >= 2`: Gorenstein iff `λ = 1`
    /// (and `e0 = 2` when `r >= 3`).
    MaximalRelativeReduction,
    /// Zariski hypersurfaces: Gorenstein iff `b ≡ 0` or `b ≡ gcd(a,b)` mod `a`.
    ResidueOfBModA,
    /// Zariski hypersurfaces: `ℓ_n + ℓ_{r+1-n} = a` for `n <= ⌈r/2⌉`.
    LengthDuality,
    /// Zariski hypersurfaces with maximal embedding dimension: Gorenstein iff `a = 2`.
    MaximalEmbeddingDimension,
    /// The length table did not stabilize, so no numeric criterion could run.
    Stabilization,
}

impl Criterion {
    pub fn id(self) -> &'static str {
        match self {
            Criterion::HVectorSymmetry => "h_vector_symmetry",
            Criterion::ReductionOne => "reduction_one",
            Criterion::ReductionTwo => "reduction_two",
            Criterion::MaximalRelativeReduction => "maximal_relative_reduction",
            Criterion::ResidueOfBModA => "residue_of_b_mod_a",
            Criterion::LengthDuality => "length_duality",
            Criterion::MaximalEmbeddingDimension => "maximal_embedding_dimension",
            Criterion::Stabilization => "stabilization",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One criterion's contribution to a verdict, with the instantiated
/// (in)equality in `detail`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reason {
    pub criterion: Criterion,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub reasons: Vec<Reason>,
}

/// Two applicable criteria reached opposite decisions.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("criteria disagree: {}", .reasons.iter().map(|r| format!("{}={} ({})", r.criterion, r.status, r.detail)).collect::<Vec<_>>().join("; "))]
pub struct VerdictConflict {
    pub reasons: Vec<Reason>,
}

impl Verdict {
    pub fn decided(holds: bool, criterion: Criterion, detail: impl Into<String>) -> Self {
        let status = Status::from_bool(holds);
        Verdict {
            status,
            reasons: vec![Reason { criterion, status, detail: detail.into() }],
        }
    }

    pub fn inapplicable(criterion: Criterion, detail: impl Into<String>) -> Self {
        Verdict {
            status: Status::Inapplicable,
            reasons: vec![Reason {
                criterion,
                status: Status::Inapplicable,
                detail: detail.into(),
            }],
        }
    }

    /// Merges independent verdicts on the same property. Applicable criteria
    /// must agree; the merged verdict keeps every reason.
    pub fn combine<I: IntoIterator<Item = Verdict>>(parts: I) -> Result<Verdict, VerdictConflict> {
        let reasons: Vec<Reason> = parts.into_iter().flat_map(|v| v.reasons).collect();
        let mut status = Status::Inapplicable;
        for r in reasons.iter().filter(|r| r.status.is_decided()) {
            if status == Status::Inapplicable {
                status = r.status;
            } else if status != r.status {
                return Err(VerdictConflict { reasons });
            }
        }
        Ok(Verdict { status, reasons })
    }

    /// Criteria that actually decided the verdict.
    pub fn deciding_criteria(&self) -> Vec<Criterion> {
        let mut out: Vec<Criterion> = self
            .reasons
            .iter()
            .filter(|r| r.status.is_decided())
            .map(|r| r.criterion)
            .collect();
        out.dedup();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combine_agreeing_and_inapplicable() {
        let v = Verdict::combine([
            Verdict::decided(true, Criterion::ReductionTwo, "3 = 3"),
            Verdict::inapplicable(Criterion::MaximalRelativeReduction, "not maximal"),
            Verdict::decided(true, Criterion::HVectorSymmetry, "(1,1,1)"),
        ])
        .unwrap();
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.reasons.len(), 3);
        assert_eq!(
            v.deciding_criteria(),
            vec![Criterion::ReductionTwo, Criterion::HVectorSymmetry]
        );
    }

    #[test]
    fn combine_all_inapplicable() {
        let v = Verdict::combine([Verdict::inapplicable(Criterion::HVectorSymmetry, "no flags")])
            .unwrap();
        assert_eq!(v.status, Status::Inapplicable);
        assert!(!v.reasons.is_empty());
    }

    #[test]
    fn combine_conflict() {
        let err = Verdict::combine([
            Verdict::decided(true, Criterion::ReductionTwo, "a"),
            Verdict::decided(false, Criterion::HVectorSymmetry, "b"),
        ])
        .unwrap_err();
        assert_eq!(err.reasons.len(), 2);
        assert!(err.to_string().contains("reduction_two=holds"));
    }
}
