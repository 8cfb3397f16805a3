//! Plain-text layout. Every number printed here is a field of the JSON report
//! and every numeric field of the JSON report is printed here; labels carry
//! no standalone digits.

use std::fmt::Write;

use normcone::report::{ExactInt, Instance, Report};
use normcone::sweep::SweepReport;

fn list<T: ToString>(v: &[T]) -> String {
    if v.is_empty() {
        "(none)".into()
    } else {
        v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "n/a".into(), T::to_string)
}

fn opt_list(v: &Option<Vec<ExactInt>>) -> String {
    v.as_ref().map_or_else(|| "n/a".into(), |v| list(v))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt_yes(b: Option<bool>) -> &'static str {
    b.map_or("n/a", yes)
}

pub fn report_text(r: &Report) -> String {
    let mut out = String::new();
    let o = &mut out;
    let _ = writeln!(o, "schema: {}", r.schema);
    match &r.instance {
        Instance::Semigroup {
            generators,
            frobenius,
            genus,
            symmetric,
            apery_set,
        } => {
            let _ = writeln!(o, "family: semigroup");
            let _ = writeln!(o, "  generators: {}", list(generators));
            let _ = writeln!(o, "  frobenius number: {frobenius}");
            let _ = writeln!(o, "  genus: {genus}");
            let _ = writeln!(o, "  symmetric: {}", yes(*symmetric));
            let _ = writeln!(o, "  apery set: {}", list(apery_set));
        }
        Instance::Hypersurface {
            a,
            b,
            m,
            gcd,
            a_reduced,
            b_reduced,
            ladder,
            colengths,
            fiber_lengths,
        } => {
            let _ = writeln!(o, "family: hypersurface");
            let _ = writeln!(o, "  a: {a}");
            let _ = writeln!(o, "  b: {b}");
            let _ = writeln!(o, "  m: {m}");
            let _ = writeln!(o, "  gcd: {gcd}");
            let _ = writeln!(o, "  reduced a: {a_reduced}");
            let _ = writeln!(o, "  reduced b: {b_reduced}");
            let _ = writeln!(o, "  ladder n_k: {}", list(ladder));
            let _ = writeln!(o, "  colengths ell_n: {}", list(colengths));
            let _ = writeln!(o, "  fiber lengths: {}", list(fiber_lengths));
        }
        Instance::Filtration { dim } => {
            let _ = writeln!(o, "family: filtration");
            let _ = writeln!(o, "  dim: {dim}");
        }
    }

    let i = &r.invariants;
    let _ = writeln!(o, "invariants");
    let _ = writeln!(o, "  dim: {}", i.dim);
    let _ = writeln!(o, "  lambda: {}", i.lambda);
    let _ = writeln!(o, "  e0: {}", opt(&i.e0));
    let _ = writeln!(o, "  e1: {}", opt(&i.e1));
    let _ = writeln!(o, "  hilbert coefficients: {}", opt_list(&i.hilbert_coefficients));
    let _ = writeln!(o, "  reduction number: {}", opt(&i.reduction_number));
    let _ = writeln!(o, "  relative reduction number: {}", opt(&i.relative_reduction_number));
    let _ = writeln!(o, "  bound e1-e0+lambda+one: {}", opt(&i.bound));
    let _ = writeln!(o, "  maximal: {}", opt_yes(i.maximal));
    let _ = writeln!(o, "  h-vector: {}", opt_list(&i.h_vector));
    let _ = writeln!(o, "  postulation number: {}", opt(&i.postulation_number));
    let _ = writeln!(o, "  length table: {}", list(&i.length_table));

    let v = &r.verdicts;
    let _ = writeln!(o, "verdicts");
    let _ = writeln!(o, "  gorenstein: {}", v.gorenstein.status);
    for reason in &v.gorenstein.reasons {
        let _ = writeln!(o, "    {} {}: {}", reason.criterion, reason.status, reason.detail);
    }
    let _ = writeln!(o, "  cohen-macaulay: {}", opt_yes(v.cohen_macaulay));
    let _ = writeln!(o, "  ring class: {}", opt(&v.ring_class));
    let _ = writeln!(o, "  maximal embedding dimension: {}", opt_yes(v.max_embedding_dimension));

    let p = &r.provenance;
    let _ = writeln!(o, "provenance");
    let _ = writeln!(o, "  criteria applied: {}", list(&p.criteria_applied));
    let a = &p.assumptions;
    let _ = writeln!(
        o,
        "  assumptions: ambient_gorenstein={} assoc_graded_cm={} depth_at_least_d_minus_one={}",
        yes(a.ambient_gorenstein),
        yes(a.assoc_graded_cm),
        yes(a.depth_at_least_d_minus_1)
    );
    for note in &p.notes {
        let _ = writeln!(o, "  note: {note}");
    }

    if let Some(ver) = &r.verification {
        let _ = writeln!(o, "verification");
        for c in &ver.checks {
            let _ = writeln!(o, "  [{}] {}: {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
        }
    }
    out
}

pub fn sweep_text(s: &SweepReport) -> String {
    let key = if s.family == "semigroup" { "m1" } else { "a" };
    let mut out = String::new();
    let o = &mut out;
    let _ = writeln!(o, "{} sweep: {} instances", s.family, s.instances);
    let _ = writeln!(
        o,
        "{key:>4} {:>10} {:>10} {:>8} {:>8} {:>10}",
        "instances", "gorenstein", "maximal", "max_emb", "violations"
    );
    for r in &s.rows {
        let _ = writeln!(
            o,
            "{:>4} {:>10} {:>10} {:>8} {:>8} {:>10}",
            r.key, r.instances, r.gorenstein, r.maximal, r.max_embedding_dimension, r.violations
        );
    }
    for v in &s.violations {
        let _ = writeln!(o, "violation {} {}: {}", v.instance, v.invariant, v.detail);
    }
    out
}
