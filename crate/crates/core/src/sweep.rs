//! Parameter sweeps that check every closed form against its independent
//! counterpart. Instances run in parallel; results come back sorted by
//! parameters.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinat::{binomial, ceil_div};
use crate::hilbert::{self, Assumptions, FiltrationProfile};
use crate::oracle;
use crate::semigroup::NumericalSemigroup;
use crate::verdict::Status;
use crate::zariski::ZariskiParams;

/// One failed invariant on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub instance: String,
    pub invariant: String,
    pub detail: String,
}

/// Per-group tallies: `key` is `a` for hypersurfaces and `m1` for semigroups.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub key: u64,
    pub instances: u64,
    pub gorenstein: u64,
    pub maximal: u64,
    pub max_embedding_dimension: u64,
    pub violations: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub family: String,
    pub instances: u64,
    pub rows: Vec<SummaryRow>,
    pub violations: Vec<Violation>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Inclusive parameter box for hypersurfaces; `b` is clamped below by `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZariskiRange {
    pub a: (u64, u64),
    pub b: (u64, u64),
    pub m: (u64, u64),
}

impl ZariskiRange {
    pub fn params(&self) -> Vec<(u64, u64, u64)> {
        let mut out = Vec::new();
        for a in self.a.0.max(2)..=self.a.1 {
            for b in self.b.0.max(a)..=self.b.1 {
                for m in self.m.0.max(1)..=self.m.1 {
                    out.push((a, b, m));
                }
            }
        }
        out
    }
}

struct Outcome {
    key: u64,
    gorenstein: bool,
    maximal: bool,
    max_emb: bool,
    violations: Vec<Violation>,
}

struct Checker {
    instance: String,
    violations: Vec<Violation>,
}

impl Checker {
    fn new(instance: String) -> Self {
        Checker {
            instance,
            violations: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, invariant: &str, detail: impl FnOnce() -> String) {
        if !ok {
            self.violations.push(Violation {
                instance: self.instance.clone(),
                invariant: invariant.to_string(),
                detail: detail(),
            });
        }
    }
}

/// `e_i = C(r, i)` for `2 <= i <= 2` on the dimension-two profile integrated
/// from `λ + (e0 - λ - 1) t + t^r`.
fn constructed_d2_check(e0: u64, r: u64) -> Result<bool, String> {
    let h = hilbert::hs_maximal(1, e0, r as usize, 2).map_err(|e| e.to_string())?;
    let p = FiltrationProfile::from_hvector(&h, r as usize + 4, Assumptions::all())
        .map_err(|e| e.to_string())?;
    let e = hilbert::coefficients_from_profile(&p).map_err(|e| e.to_string())?;
    Ok(hilbert::ei_binomial_check(r as i64, &e))
}

fn check_zariski(a: u64, b: u64, m: u64, verify: bool) -> Outcome {
    let mut c = Checker::new(format!("(a,b,m)=({a},{b},{m})"));
    let p = match ZariskiParams::build(a, b, m) {
        Ok(p) => p,
        Err(e) => {
            c.check(false, "build", || e.to_string());
            return Outcome {
                key: a,
                gorenstein: false,
                maximal: false,
                max_emb: false,
                violations: c.violations,
            };
        }
    };
    let r = p.normal_reduction_number();
    let class = p.gorenstein_verdict();
    let duality = p.gorenstein_by_duality();
    c.check(class.gorenstein == duality, "residue_vs_duality", || {
        format!("residue says {}, duality says {duality}", class.gorenstein)
    });

    // analyze runs every applicable criterion and refuses disagreement
    let report = p.analyze();
    let report = match report {
        Ok(rep) => Some(rep),
        Err(e) => {
            c.check(false, "analyze", || e.to_string());
            None
        }
    };
    if let Some(rep) = &report {
        let holds = rep.gorenstein() == Status::Holds;
        c.check(holds == class.gorenstein, "verdict_vs_residue", || {
            format!("combined verdict {}", rep.gorenstein())
        });
    }

    // h-vector symmetry on the m = 1 table
    let line = ZariskiParams::build(a, b, 1).expect("valid");
    let h1 = line
        .normal_profile(r as usize + 3)
        .ok()
        .and_then(|pr| hilbert::h_vector_from_increments(&pr.increments(), 1).ok());
    match &h1 {
        Some(h) => c.check(h.is_symmetric() == class.gorenstein, "h_symmetry_vs_residue", || {
            format!("h = {:?}", h.coeffs())
        }),
        None => c.check(false, "h_vector", || "m = 1 table did not stabilize".into()),
    }

    let e1 = p.normal_e1();
    if m == 1 {
        if let Some(rep) = &report {
            let fitted = rep.invariants.e1.as_ref().map(|x| x.0.clone());
            c.check(fitted == Some(BigInt::from(e1)), "e1_fit", || {
                format!("fit {fitted:?}, closed form {e1}")
            });
        }
    }

    let fibers: Vec<u64> = (1..=r + 1).map(|n| p.fiber_length(n)).collect();
    let last_nonzero = fibers.iter().rposition(|&f| f != 0).map_or(0, |i| i as u64 + 1);
    c.check(last_nonzero == r, "reduction_vs_fibers", || {
        format!("r = {r}, fibers {fibers:?}")
    });
    c.check(fibers[0] == a - 1, "first_fiber", || format!("fiber(1) = {}", fibers[0]));
    // ℓ(A/Q\bar{m^{n-1}}) - ℓ(A/\bar{m^n}) with the first term counted from the
    // shifted presentation
    for n in 1..=r + 1 {
        let mm = m as i64;
        let shifted: BigInt = p
            .presentation(n - 1)
            .exponents
            .iter()
            .map(|&t| binomial(t as i64 + 1 + mm - 1, mm))
            .sum();
        let diff = shifted - p.normal_hilbert_function(n);
        let want = BigInt::from(p.fiber_length(n));
        c.check(diff == want, "fiber_vs_shifted_presentation", || {
            format!("n = {n}: difference {diff}, fiber {want}")
        });
    }

    let bound = e1 as i64 - a as i64 + 2;
    c.check(r as i64 <= bound, "bound", || format!("r = {r} > {bound}"));
    let all_ones = fibers[1..r as usize].iter().all(|&f| f == 1);
    let equality = r as i64 == bound;
    c.check(equality == all_ones, "maximal_vs_fibers", || {
        format!("r = {r}, bound = {bound}, fibers {fibers:?}")
    });
    let maximal = p.is_nr_maximal();
    c.check(
        maximal == hilbert::is_maximal_nr(r, a, e1, 1),
        "classification_vs_bound",
        || format!("classification {maximal}, bound arithmetic {equality}"),
    );
    if maximal && r >= 2 {
        if let Some(h) = &h1 {
            let want = hilbert::hs_maximal(1, a, r as usize, 1).ok();
            c.check(want.as_ref() == Some(h), "hs_maximal", || format!("h = {:?}", h.coeffs()));
        }
        match constructed_d2_check(a, r) {
            Ok(ok) => c.check(ok, "ei_binomial_d2", || format!("nr = {r}, e0 = {a}")),
            Err(e) => c.check(false, "ei_binomial_d2", || e),
        }
        if m >= 2 {
            if let Some(rep) = &report {
                let ok = rep.provenance.notes.iter().any(|n| n.ends_with(": true"));
                c.check(ok, "ei_binomial", || "e_i != C(nr, i) on the length table".into());
            }
        }
    }
    let max_emb = p.max_embedding_dimension();
    if max_emb {
        c.check(class.gorenstein == (a == 2), "max_embedding_gorenstein", || {
            format!("gorenstein {}, a = {a}", class.gorenstein)
        });
    }

    // the ring is K[[t^a, t^b]] when gcd(a, b) = 1 and m = 1
    if m == 1 && a.gcd(&b) == 1 && a < b {
        match NumericalSemigroup::build(&[a, b]).map(|s| (s.analyze(), s)) {
            Ok((Ok(srep), _)) => {
                if let Some(rep) = &report {
                    let same = srep.invariants.e0 == rep.invariants.e0
                        && srep.invariants.e1 == rep.invariants.e1
                        && srep.invariants.reduction_number == rep.invariants.reduction_number
                        && srep.gorenstein() == rep.gorenstein();
                    c.check(same, "cross_family", || {
                        format!(
                            "semigroup e1 {:?} r {:?} {}; hypersurface e1 {:?} r {:?} {}",
                            srep.invariants.e1,
                            srep.invariants.reduction_number,
                            srep.gorenstein(),
                            rep.invariants.e1,
                            rep.invariants.reduction_number,
                            rep.gorenstein()
                        )
                    });
                }
            }
            Ok((Err(e), _)) => c.check(false, "cross_family", || e.to_string()),
            Err(e) => c.check(false, "cross_family", || e.to_string()),
        }
    }

    if verify {
        match oracle::verify_hypersurface(&p) {
            Ok(v) => {
                for f in v.failures() {
                    c.check(false, &format!("oracle:{}", f.name), || f.detail.clone());
                }
            }
            Err(e) => c.check(false, "oracle", || e.to_string()),
        }
    }

    Outcome {
        key: a,
        gorenstein: class.gorenstein,
        maximal,
        max_emb,
        violations: c.violations,
    }
}

fn summarize(family: &str, outcomes: Vec<Outcome>) -> SweepReport {
    let mut rows: BTreeMap<u64, SummaryRow> = BTreeMap::new();
    let mut violations = Vec::new();
    let instances = outcomes.len() as u64;
    for o in outcomes {
        let row = rows.entry(o.key).or_insert_with(|| SummaryRow {
            key: o.key,
            ..Default::default()
        });
        row.instances += 1;
        row.gorenstein += o.gorenstein as u64;
        row.maximal += o.maximal as u64;
        row.max_embedding_dimension += o.max_emb as u64;
        row.violations += o.violations.len() as u64;
        violations.extend(o.violations);
    }
    SweepReport {
        family: family.to_string(),
        instances,
        rows: rows.into_values().collect(),
        violations,
    }
}

/// Checks every hypersurface invariant over the box; `verify` adds the
/// brute-force twins.
pub fn zariski_sweep(range: ZariskiRange, verify: bool) -> SweepReport {
    let params = range.params();
    #[cfg(feature = "parallel")]
    let iter = params.into_par_iter();
    #[cfg(not(feature = "parallel"))]
    let iter = params.into_iter();
    let outcomes: Vec<Outcome> = iter.map(|(a, b, m)| check_zariski(a, b, m, verify)).collect();
    summarize("hypersurface", outcomes)
}

/// Minimal generating systems with `2 <= m1 <= max_m1`, every generator at
/// most `bound`, and gcd 1, in lexicographic order.
pub fn minimal_generating_systems(max_m1: u64, bound: u64) -> Vec<Vec<u64>> {
    fn extend(gens: &mut Vec<u64>, member: &mut Vec<bool>, bound: u64, out: &mut Vec<Vec<u64>>) {
        if gens.iter().fold(0u64, |acc, &x| acc.gcd(&x)) == 1 {
            out.push(gens.clone());
        }
        // a minimal system has at most m1 generators
        if gens.len() as u64 >= gens[0] {
            return;
        }
        let last = *gens.last().unwrap();
        for g in last + 1..=bound {
            if member[g as usize] {
                continue;
            }
            let saved = member.clone();
            for s in g as usize..=bound as usize {
                if member[s - g as usize] {
                    member[s] = true;
                }
            }
            gens.push(g);
            extend(gens, member, bound, out);
            gens.pop();
            *member = saved;
        }
    }
    let mut out = Vec::new();
    for m1 in 2..=max_m1.min(bound) {
        let mut member = vec![false; bound as usize + 1];
        for s in (0..=bound as usize).step_by(m1 as usize) {
            member[s] = true;
        }
        let mut gens = vec![m1];
        extend(&mut gens, &mut member, bound, &mut out);
    }
    out
}

fn check_semigroup(gens: &[u64], verify: bool) -> Outcome {
    let mut c = Checker::new(format!("<{}>", gens.iter().map(u64::to_string).collect::<Vec<_>>().join(",")));
    let key = gens[0];
    let s = match NumericalSemigroup::build(gens) {
        Ok(s) => s,
        Err(e) => {
            c.check(false, "build", || e.to_string());
            return Outcome {
                key,
                gorenstein: false,
                maximal: false,
                max_emb: false,
                violations: c.violations,
            };
        }
    };
    let m1 = s.multiplicity();
    let f = s.frobenius();
    let r = s.normal_reduction_number();

    match oracle::brute_frobenius(gens) {
        Ok(bf) => c.check(bf == f, "frobenius", || format!("table {f}, search {bf}")),
        Err(e) => c.check(false, "frobenius", || e.to_string()),
    }

    let top = r + 3;
    let lengths: Vec<u64> = (0..=top).map(|n| s.normal_power_length(n)).collect();
    c.check(lengths.windows(2).all(|w| w[0] <= w[1]), "lengths_monotone", || {
        format!("{lengths:?}")
    });
    let genus = s.genus();
    let from = ceil_div((f + 1).max(0) as u64, m1);
    for n in from..=top {
        c.check(lengths[n as usize] == m1 * n - genus, "lengths_tail", || {
            format!("H({n}) = {} != {m1}·{n} - {genus}", lengths[n as usize])
        });
    }
    if f >= 1 {
        match oracle::brute_semigroup_reduction(gens) {
            Ok(br) => c.check(br == r, "reduction_stabilization", || {
                format!("ceil formula {r}, stabilization index {br}")
            }),
            Err(e) => c.check(false, "reduction_stabilization", || e.to_string()),
        }
    }

    let report = match s.analyze() {
        Ok(rep) => Some(rep),
        Err(e) => {
            c.check(false, "analyze", || e.to_string());
            None
        }
    };
    let e1 = s.normal_e1();
    let bound = e1 - m1 as i64 + 2;
    c.check(r as i64 <= bound, "bound", || format!("r = {r} > {bound}"));
    let fibers: Vec<u64> = (1..=r).map(|n| s.fiber_length(n)).collect();
    let all_ones = fibers[1..].iter().all(|&x| x == 1);
    let maximal = r as i64 == bound;
    c.check(maximal == all_ones, "maximal_vs_fibers", || {
        format!("r = {r}, bound = {bound}, fibers {fibers:?}")
    });

    let profile = s.normal_profile(top as usize);
    let h = profile
        .as_ref()
        .ok()
        .and_then(|p| hilbert::h_vector_from_increments(&p.increments(), 1).ok());
    if maximal && r >= 2 {
        let want = hilbert::hs_maximal(1, m1, r as usize, 1).ok();
        c.check(want.is_some() && want == h, "hs_maximal", || format!("h = {h:?}"));
        match constructed_d2_check(m1, r) {
            Ok(ok) => c.check(ok, "ei_binomial_d2", || format!("nr = {r}, e0 = {m1}")),
            Err(e) => c.check(false, "ei_binomial_d2", || e),
        }
    }
    let symmetric = s.is_symmetric();
    if symmetric && r <= 2 && f >= 1 {
        if let Some(h) = &h {
            let by_e = if r == 1 {
                hilbert::gorenstein_r1(m1, e1)
            } else {
                hilbert::gorenstein_r2(m1, e1)
            };
            c.check(by_e == h.is_symmetric(), "reduction_criterion_vs_symmetry", || {
                format!("e0 = {m1}, e1 = {e1}, h = {:?}", h.coeffs())
            });
        }
    }
    if let Ok(p) = &profile {
        let fast = hilbert::coefficients_from_profile(p);
        let slow = oracle::brute_fit(p.lengths(), 1);
        if let (Ok(fast), Ok(slow)) = (&fast, &slow) {
            c.check(fast == slow, "brute_fit", || format!("{fast:?} vs {slow:?}"));
        }
    }
    if verify {
        match oracle::verify_semigroup(&s) {
            Ok(v) => {
                for fl in v.failures() {
                    c.check(false, &format!("oracle:{}", fl.name), || fl.detail.clone());
                }
            }
            Err(e) => c.check(false, "oracle", || e.to_string()),
        }
    }

    Outcome {
        key,
        gorenstein: report.as_ref().is_some_and(|r| r.gorenstein() == Status::Holds),
        maximal,
        max_emb: false,
        violations: c.violations,
    }
}

/// Checks every semigroup invariant over all minimal generating systems with
/// `m1 <= max_m1` and entries `<= bound`.
pub fn semigroup_sweep(max_m1: u64, bound: u64, verify: bool) -> SweepReport {
    let systems = minimal_generating_systems(max_m1, bound);
    #[cfg(feature = "parallel")]
    let iter = systems.par_iter();
    #[cfg(not(feature = "parallel"))]
    let iter = systems.iter();
    let outcomes: Vec<Outcome> = iter.map(|g| check_semigroup(g, verify)).collect();
    summarize("semigroup", outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_zariski_box_is_clean() {
        let rep = zariski_sweep(
            ZariskiRange {
                a: (2, 5),
                b: (2, 14),
                m: (1, 2),
            },
            true,
        );
        assert!(rep.is_clean(), "{:#?}", &rep.violations[..rep.violations.len().min(5)]);
        assert_eq!(rep.rows.len(), 4);
        assert_eq!(rep.instances, rep.rows.iter().map(|r| r.instances).sum::<u64>());
    }

    #[test]
    fn empty_box() {
        let rep = zariski_sweep(
            ZariskiRange {
                a: (5, 4),
                b: (2, 10),
                m: (1, 1),
            },
            false,
        );
        assert_eq!(rep.instances, 0);
        assert!(rep.rows.is_empty());
    }

    #[test]
    fn generating_systems() {
        let g = minimal_generating_systems(3, 7);
        assert_eq!(
            g,
            vec![
                vec![2, 3],
                vec![2, 5],
                vec![2, 7],
                vec![3, 4],
                vec![3, 4, 5],
                vec![3, 5],
                vec![3, 5, 7],
                vec![3, 7],
            ]
        );
    }

    #[test]
    fn small_semigroup_sweep_is_clean() {
        let rep = semigroup_sweep(6, 20, true);
        assert!(rep.is_clean(), "{:#?}", &rep.violations[..rep.violations.len().min(5)]);
    }
}
