//! Plain-text and JSON renderings of check results. Both forms carry the same
//! verdicts and witnesses; grades are printed as exact fractions.

use std::fmt::Write as _;

use hyperfuzz_core::explore::{DisagreementDetail, Instance, Mode, VerificationReport, VerificationScope};
use hyperfuzz_core::{
    AssociativityReport, ElementSet, FuzzySubset, HyperGroupoid, IdealKind, IdealProfile, IdealReport, IdealWitness,
    Method,
};
use serde_json::{json, Value};

use crate::format::{render_fuzzy, render_hypergroupoid};

/// A report in both output forms.
#[derive(Clone, Debug, PartialEq)]
pub struct Rendered {
    pub text: String,
    pub json: Value,
}

impl Rendered {
    pub fn output(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("json values serialize");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

fn names(h: &HyperGroupoid, set: ElementSet) -> Value {
    set.iter().map(|e| Value::from(h.name(e))).collect()
}

fn grades(f: &FuzzySubset) -> Value {
    f.grades().iter().map(|g| Value::from(g.to_string())).collect()
}

pub fn associativity(h: &HyperGroupoid, report: &AssociativityReport) -> Rendered {
    let mut text = String::new();
    let witness = match &report.witness {
        None => {
            text.push_str("hypersemigroup: yes\n");
            Value::Null
        }
        Some(w) => {
            let (x, y, z) = (h.name(w.x), h.name(w.y), h.name(w.z));
            let _ = writeln!(text, "hypersemigroup: no");
            let _ = writeln!(text, "witness: x={x} y={y} z={z}");
            let _ = writeln!(text, "  ({x}∘{y})*{{{z}}} = {}", h.display_set(w.left));
            let _ = writeln!(text, "  {{{x}}}*({y}∘{z}) = {}", h.display_set(w.right));
            json!({
                "x": x, "y": y, "z": z,
                "left": names(h, w.left),
                "right": names(h, w.right),
            })
        }
    };
    Rendered {
        text,
        json: json!({ "hypersemigroup": report.holds(), "witness": witness }),
    }
}

pub fn characterization(kind: IdealKind) -> &'static str {
    match kind {
        IdealKind::Right => "f∘1 ⪯ f",
        IdealKind::Left => "1∘f ⪯ f",
        IdealKind::Quasi => "(f∘1)∧(1∘f) ⪯ f",
        IdealKind::Bi => "f∘1∘f ⪯ f",
    }
}

fn witness_text(h: &HyperGroupoid, w: &IdealWitness) -> String {
    let n = |e| h.name(e);
    match *w {
        IdealWitness::Right { x, y, u, grade_u, grade_x } => format!(
            "{} ∈ {}∘{}, f({}) = {grade_u} < f({}) = {grade_x}",
            n(u), n(x), n(y), n(u), n(x)
        ),
        IdealWitness::Left { x, y, u, grade_u, grade_y } => format!(
            "{} ∈ {}∘{}, f({}) = {grade_u} < f({}) = {grade_y}",
            n(u), n(x), n(y), n(u), n(y)
        ),
        IdealWitness::Quasi { x, b, s, t, c, grade_x, grade_b, grade_c } => format!(
            "{} ∈ {}∘{} and {} ∈ {}∘{}, f({}) = {grade_x} < min(f({}), f({})) = min({grade_b}, {grade_c})",
            n(x), n(b), n(s), n(x), n(t), n(c), n(x), n(b), n(c)
        ),
        IdealWitness::Bi { x, y, z, u, grade_u, grade_x, grade_z } => format!(
            "{} ∈ ({}∘{})*{{{}}}, f({}) = {grade_u} < min(f({}), f({})) = min({grade_x}, {grade_z})",
            n(u), n(x), n(y), n(z), n(u), n(x), n(z)
        ),
        IdealWitness::Inequality { element, composed, actual } => format!(
            "at {}, composed side = {composed} > f({}) = {actual}",
            n(element), n(element)
        ),
    }
}

fn witness_json(h: &HyperGroupoid, w: &IdealWitness) -> Value {
    let n = |e| h.name(e);
    match *w {
        IdealWitness::Right { x, y, u, grade_u, grade_x } => json!({
            "type": "right", "x": n(x), "y": n(y), "u": n(u),
            "f_u": grade_u.to_string(), "f_x": grade_x.to_string(),
        }),
        IdealWitness::Left { x, y, u, grade_u, grade_y } => json!({
            "type": "left", "x": n(x), "y": n(y), "u": n(u),
            "f_u": grade_u.to_string(), "f_y": grade_y.to_string(),
        }),
        IdealWitness::Quasi { x, b, s, t, c, grade_x, grade_b, grade_c } => json!({
            "type": "quasi", "x": n(x), "b": n(b), "s": n(s), "t": n(t), "c": n(c),
            "f_x": grade_x.to_string(), "f_b": grade_b.to_string(), "f_c": grade_c.to_string(),
        }),
        IdealWitness::Bi { x, y, z, u, grade_u, grade_x, grade_z } => json!({
            "type": "bi", "x": n(x), "y": n(y), "z": n(z), "u": n(u),
            "f_u": grade_u.to_string(), "f_x": grade_x.to_string(), "f_z": grade_z.to_string(),
        }),
        IdealWitness::Inequality { element, composed, actual } => json!({
            "type": "inequality", "element": n(element),
            "composed": composed.to_string(), "f": actual.to_string(),
        }),
    }
}

/// One block per method; `agree` is set when both methods ran.
pub fn ideal(h: &HyperGroupoid, reports: &[IdealReport], agree: Option<bool>) -> Rendered {
    let mut text = String::new();
    let mut results = Vec::new();
    for r in reports {
        let label = match r.method {
            Method::Definition => "definition".to_string(),
            Method::Characterization => format!("characterization, {}", characterization(r.kind)),
        };
        let verdict = if r.holds() { "holds" } else { "fails" };
        let _ = writeln!(text, "{} ideal ({label}): {verdict}", r.kind);
        if let Some(w) = &r.witness {
            let _ = writeln!(text, "  witness: {}", witness_text(h, w));
        }
        results.push(json!({
            "method": r.method.as_str(),
            "holds": r.holds(),
            "witness": r.witness.as_ref().map_or(Value::Null, |w| witness_json(h, w)),
        }));
    }
    match agree {
        Some(true) => text.push_str("methods agree\n"),
        Some(false) => text.push_str("METHODS DISAGREE (internal error)\n"),
        None => {}
    }
    let kind = reports.first().map(|r| r.kind.as_str());
    Rendered {
        text,
        json: json!({ "kind": kind, "results": results, "methods_agree": agree }),
    }
}

pub fn profile(p: &IdealProfile) -> Rendered {
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let bi = p.bi.map_or("n/a", yes_no);
    let mut text = String::new();
    let _ = writeln!(text, "{:<16}{}", "hypersemigroup", yes_no(p.associative));
    let _ = writeln!(text, "{:<16}{}", "right", yes_no(p.right));
    let _ = writeln!(text, "{:<16}{}", "left", yes_no(p.left));
    let _ = writeln!(text, "{:<16}{}", "quasi", yes_no(p.quasi));
    let _ = writeln!(text, "{:<16}{}", "bi", bi);
    Rendered {
        text,
        json: json!({
            "hypersemigroup": p.associative,
            "right": p.right,
            "left": p.left,
            "quasi": p.quasi,
            "bi": p.bi,
        }),
    }
}

pub fn scope_text(scope: &VerificationScope) -> String {
    let mut s = format!("n={} grid={} ", scope.size, scope.grid);
    match scope.mode {
        Mode::Exhaustive => s.push_str("exhaustive"),
        Mode::Sampled { samples, seed } => {
            let _ = write!(s, "sampled samples={samples} seed={seed}");
        }
    }
    if scope.associative_only {
        s.push_str(" associative-only");
    }
    s
}

fn scope_json(scope: &VerificationScope) -> Value {
    let (mode, samples, seed) = match scope.mode {
        Mode::Exhaustive => ("exhaustive", None, None),
        Mode::Sampled { samples, seed } => ("sampled", Some(samples), Some(seed)),
    };
    json!({
        "size": scope.size,
        "grid": scope.grid,
        "mode": mode,
        "samples": samples,
        "seed": seed,
        "associative_only": scope.associative_only,
    })
}

fn detail_text(h: &HyperGroupoid, d: &DisagreementDetail) -> String {
    match *d {
        DisagreementDetail::Verdicts { kind, definition, characterization: c } => format!(
            "{kind} ideal: definition {}, {} {}",
            if definition { "holds" } else { "fails" },
            characterization(kind),
            if c { "holds" } else { "fails" },
        ),
        DisagreementDetail::UnsoundWitness { kind, method } => {
            format!("{kind} ideal: {method} produced a witness that does not re-check")
        }
        DisagreementDetail::Bracketing { element, left, right } => {
            format!("at {}: ((f∘g)∘h) = {left} but (f∘(g∘h)) = {right}", h.name(element))
        }
        DisagreementDetail::NotBi { one_sided } => format!("{one_sided} ideal that is not a bi-ideal"),
    }
}

fn instance_text(out: &mut String, h: &HyperGroupoid, subsets: &[FuzzySubset]) {
    for line in render_hypergroupoid(h).lines() {
        let _ = writeln!(out, "  {line}");
    }
    for (i, f) in subsets.iter().enumerate() {
        let _ = writeln!(out, "  subset {}:", i + 1);
        for line in render_fuzzy(h, f).lines() {
            let _ = writeln!(out, "    {line}");
        }
    }
}

fn instance_json(index: u64, h: &HyperGroupoid, subsets: &[FuzzySubset]) -> Value {
    json!({
        "index": index,
        "table": render_hypergroupoid(h),
        "subsets": subsets.iter().map(grades).collect::<Vec<_>>(),
    })
}

/// `timing` controls whether the wall-time line / field is included.
pub fn verification(r: &VerificationReport, timing: bool) -> Rendered {
    let mut text = String::new();
    let _ = writeln!(text, "theorem: {}", r.theorem);
    let _ = writeln!(text, "scope: {}", scope_text(&r.scope));
    let _ = writeln!(text, "{} instances, {} disagreements", r.instances, r.disagreements);
    let mut first = Value::Null;
    if let Some(d) = &r.first {
        let _ = writeln!(text, "first disagreement at instance {}:", d.index);
        instance_text(&mut text, &d.table, &d.subsets);
        let detail = detail_text(&d.table, &d.detail);
        let _ = writeln!(text, "  {detail}");
        let mut v = instance_json(d.index, &d.table, &d.subsets);
        v["detail"] = Value::from(detail);
        first = v;
    }
    let mut json = json!({
        "theorem": r.theorem.id(),
        "scope": scope_json(&r.scope),
        "instances": r.instances,
        "disagreements": r.disagreements,
        "first_disagreement": first,
    });
    if timing {
        if let Some(t) = r.elapsed {
            let _ = writeln!(text, "elapsed: {} ms", t.as_millis());
            json["elapsed_ms"] = Value::from(t.as_millis() as u64);
        }
    }
    Rendered { text, json }
}

pub fn search(property: &str, scope: &VerificationScope, found: Option<&Instance>) -> Rendered {
    let mut text = String::new();
    let _ = writeln!(text, "property: {property}");
    let _ = writeln!(text, "scope: {}", scope_text(scope));
    let instance = match found {
        None => {
            text.push_str("no instance found in this scope\n");
            Value::Null
        }
        Some(i) => {
            let _ = writeln!(text, "found at instance {}:", i.index);
            instance_text(&mut text, &i.table, &i.subsets);
            instance_json(i.index, &i.table, &i.subsets)
        }
    };
    Rendered {
        text,
        json: json!({
            "property": property,
            "scope": scope_json(scope),
            "found": found.is_some(),
            "instance": instance,
        }),
    }
}
