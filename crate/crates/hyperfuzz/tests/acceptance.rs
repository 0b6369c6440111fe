//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! fails if any criterion fails. Run with `--nocapture` to see the lines.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use hyperfuzz::{parse_hypergroupoid, render_hypergroupoid};
use hyperfuzz_core::explore::{
    canonical_key, enumerate_hypergroupoids, random_fuzzy_subset, random_table, verify_theorem, Budget, InstanceRng,
    Theorem, VerificationScope,
};
use hyperfuzz_core::fuzzy::{compose, leq, meet};
use hyperfuzz_core::{ElementSet, FuzzySubset, Grade, HyperGroupoid};

const ASSOCIATIVE_TWO_ELEMENT_TABLES: usize = 30;
const TWO_ELEMENT_ASSOCIATIVE_INSTANCES: u64 = 270;
const SAMPLES: u64 = 1000;
const SEED: u64 = 20_240_917;
const LAW_INSTANCES: u64 = 500;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn exhaustive(theorem: Theorem, scope: VerificationScope, expected: u64, limit: Duration) -> Outcome {
    let started = Instant::now();
    let r = verify_theorem(theorem, &scope, Budget::DEFAULT).map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    if r.instances != expected {
        return Err(format!("{} instances, expected {expected}", r.instances));
    }
    if r.disagreements != 0 {
        return Err(format!("{} disagreements, first {:?}", r.disagreements, r.first));
    }
    within(elapsed, limit)?;
    Ok(format!("{}/{} agree in {elapsed:.2?}", r.instances - r.disagreements, r.instances))
}

fn definition_vs_characterization(theorem: Theorem, limit: Duration) -> Outcome {
    exhaustive(theorem, VerificationScope::exhaustive(2, 2), 729, limit)
}

fn bi_ideals() -> Outcome {
    let tables = enumerate_hypergroupoids(2, Budget::DEFAULT).map_err(|e| e.to_string())?;
    let associative = tables.filter(|h| h.is_hypersemigroup().holds()).count();
    if associative != ASSOCIATIVE_TWO_ELEMENT_TABLES {
        return Err(format!("{associative} associative tables, expected {ASSOCIATIVE_TWO_ELEMENT_TABLES}"));
    }
    exhaustive(
        Theorem::BiIdeal,
        VerificationScope::exhaustive(2, 2).associative_only(),
        TWO_ELEMENT_ASSOCIATIVE_INSTANCES,
        Duration::from_secs(5),
    )
}

fn bracketings() -> Outcome {
    let triples = (ASSOCIATIVE_TWO_ELEMENT_TABLES as u64) * 64;
    exhaustive(
        Theorem::Associativity,
        VerificationScope::exhaustive(2, 1).associative_only(),
        triples,
        Duration::from_secs(10),
    )
}

fn one_sided_implies_bi() -> Outcome {
    exhaustive(
        Theorem::OneSidedImpliesBi,
        VerificationScope::exhaustive(2, 2).associative_only(),
        TWO_ELEMENT_ASSOCIATIVE_INSTANCES,
        Duration::from_secs(5),
    )
    .map(|s| format!("{s}, 0 violations"))
}

fn sampled_args(theorem: &str, associative: bool) -> Vec<String> {
    let mut args: Vec<String> = ["verify", "--theorem", theorem, "--size", "3", "--grid", "2", "--no-timing"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    args.extend(["--samples".into(), SAMPLES.to_string(), "--seed".into(), SEED.to_string()]);
    if associative {
        args.push("--assoc-only".into());
    }
    args
}

fn sampled_scale_up() -> Outcome {
    let runs = [("T4", false), ("T6", false), ("T8", false), ("T11", true), ("P9", true)];
    let started = Instant::now();
    let mut first = Vec::new();
    for (theorem, associative) in runs {
        let args = sampled_args(theorem, associative);
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, out, err) = common::run(&args);
        let expected = format!("{SAMPLES} instances, 0 disagreements");
        if code != 0 || !out.contains(&expected) {
            return Err(format!("{theorem}: exit {code}\n{out}{err}"));
        }
        first.push(out);
    }
    let elapsed = started.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    for ((theorem, associative), earlier) in runs.iter().zip(&first) {
        let args = sampled_args(theorem, *associative);
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        if common::run(&args).1 != *earlier {
            return Err(format!("{theorem}: second run produced different report bytes"));
        }
    }
    Ok(format!("5 x {SAMPLES} samples, 0 disagreements in {elapsed:.2?}, reruns byte-identical"))
}

fn as_set(f: &FuzzySubset) -> ElementSet {
    f.grades()
        .iter()
        .enumerate()
        .filter(|(_, g)| **g == Grade::ONE)
        .map(|(i, _)| hyperfuzz_core::Element::new(i))
        .collect()
}

fn law_instance(index: u64) -> Result<(), String> {
    let mut rng = InstanceRng::new(SEED, index);
    let n = 1 + (index % 4) as usize;
    let h = random_table(&mut rng, n);
    let pick = |rng: &mut InstanceRng, nonempty: bool| {
        let mut s = as_set(&random_fuzzy_subset(rng, n, 1));
        if nonempty {
            s.insert(hyperfuzz_core::Element::new((index as usize) % n));
        }
        s
    };
    let (a, b) = (pick(&mut rng, true), pick(&mut rng, true));
    let (extra_a, extra_b) = (pick(&mut rng, false), pick(&mut rng, false));
    let k = 1 + (index % 5) as u32;
    let f = random_fuzzy_subset(&mut rng, n, k);
    let g = random_fuzzy_subset(&mut rng, n, k);
    let fail = |law: &str| Err(format!("instance {index}: {law}\n{}", render_hypergroupoid(&h)));

    let ab = h.star(a, b).map_err(|e| e.to_string())?;
    for x in h.elements() {
        let witnessed = a.iter().any(|p| b.iter().any(|q| h.hyperop(p, q).contains(x)));
        if ab.contains(x) != witnessed {
            return fail("membership in A*B");
        }
    }
    if a.iter().any(|p| b.iter().any(|q| !h.hyperop(p, q).is_subset(ab))) {
        return fail("a∘b ⊆ A*B");
    }
    let (big_a, big_b) = (a | extra_a, b | extra_b);
    let big = h.star(big_a, big_b).map_err(|e| e.to_string())?;
    let flipped = h.star(b, a).map_err(|e| e.to_string())?;
    let big_flipped = h.star(big_b, big_a).map_err(|e| e.to_string())?;
    if !ab.is_subset(big) || !flipped.is_subset(big_flipped) {
        return fail("monotonicity of *");
    }
    if !h.star(h.carrier(), h.carrier()).map_err(|e| e.to_string())?.is_subset(h.carrier()) {
        return fail("H*H ⊆ H");
    }
    for x in h.elements() {
        for y in h.elements() {
            let single = h.star(ElementSet::singleton(x), ElementSet::singleton(y)).map_err(|e| e.to_string())?;
            if single != h.hyperop(x, y) {
                return fail("singleton law");
            }
        }
    }
    let c = compose(&h, &f, &g).map_err(|e| e.to_string())?;
    if c.grades().iter().any(|v| *v != Grade::ZERO && !f.grades().contains(v) && !g.grades().contains(v)) {
        return fail("grade closure of composition");
    }
    let m = meet(&f, &g).map_err(|e| e.to_string())?;
    let below = |x: &FuzzySubset, y: &FuzzySubset| leq(x, y).map_err(|e| e.to_string());
    if !below(&m, &f)? || !below(&m, &g)? {
        return fail("meet is a lower bound");
    }
    if h.elements().any(|e| m[e] != f[e].min(g[e])) {
        return fail("meet is the pointwise minimum");
    }
    let r = random_fuzzy_subset(&mut rng, n, k);
    if below(&r, &f)? && below(&r, &g)? && !below(&r, &m)? {
        return fail("meet is the greatest lower bound");
    }
    Ok(())
}

fn core_laws() -> Outcome {
    (0..LAW_INSTANCES).try_for_each(law_instance)?;
    Ok(format!("{LAW_INSTANCES}/{LAW_INSTANCES} seeded instances satisfy every law"))
}

fn parser() -> Outcome {
    let mut round_trips = 0;
    for h in enumerate_hypergroupoids(2, Budget::DEFAULT).map_err(|e| e.to_string())? {
        let text = render_hypergroupoid(&h);
        match parse_hypergroupoid(&text) {
            Ok(back) if back == h => round_trips += 1,
            other => return Err(format!("round trip failed for\n{text}{other:?}")),
        }
    }
    for (name, class, line, column) in common::ERROR_FIXTURES {
        let e = common::fixture_error(name);
        if (e.kind.class(), e.position.line, e.position.column) != (class, line, column) {
            return Err(format!("{name}: got {} {e}, expected {class} at {line}:{column}", e.kind.class()));
        }
    }
    Ok(format!("{round_trips}/81 round trips, {}/10 error fixtures", common::ERROR_FIXTURES.len()))
}

fn enumeration() -> Outcome {
    let count = |n| enumerate_hypergroupoids(n, Budget::DEFAULT).map(|t| t.collect::<Vec<HyperGroupoid>>());
    let one = count(1).map_err(|e| e.to_string())?;
    let two = count(2).map_err(|e| e.to_string())?;
    let distinct: std::collections::BTreeSet<_> = two.iter().map(render_hypergroupoid).collect();
    if one.len() != 1 || two.len() != 81 || distinct.len() != 81 {
        return Err(format!("counts {} and {} ({} distinct)", one.len(), two.len(), distinct.len()));
    }
    let mut classes = BTreeMap::new();
    for h in &two {
        *classes.entry(canonical_key(h, Budget::DEFAULT).map_err(|e| e.to_string())?).or_insert(0u32) += 1;
    }
    let total: u32 = classes.values().sum();
    if total != 81 {
        return Err(format!("canonical class sizes sum to {total}"));
    }
    Ok(format!("n=1: 1, n=2: 81, {} canonical classes of total size {total}", classes.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("right ideals, n=2 k=2 exhaustive", || {
            definition_vs_characterization(Theorem::RightIdeal, Duration::from_secs(1))
        }),
        ("left ideals, n=2 k=2 exhaustive", || {
            definition_vs_characterization(Theorem::LeftIdeal, Duration::from_secs(1))
        }),
        ("quasi-ideals, n=2 k=2 exhaustive", || {
            definition_vs_characterization(Theorem::QuasiIdeal, Duration::from_secs(5))
        }),
        ("bi-ideals, associative n=2 k=2", bi_ideals),
        ("composition bracketings, associative n=2 k=1", bracketings),
        ("one-sided ideals are bi-ideals", one_sided_implies_bi),
        ("sampled n=3 k=2", sampled_scale_up),
        ("core laws", core_laws),
        ("parser", parser),
        ("enumeration counts", enumeration),
    ];
    let mut failed = Vec::new();
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        match criterion() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(reason) => {
                println!("criterion {:>2} FAIL  {name}: {reason}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
