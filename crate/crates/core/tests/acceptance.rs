//! Acceptance run: one PASS/FAIL line per criterion, each with a pinned
//! wall-clock limit. Runs without the libtest harness so the lines always
//! reach the terminal; the process exits non-zero when any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde_json::Value;

use fitbound::automorphism::{automorphism_from_map, Automorphism};
use fitbound::bounds::{b1, b2, b3_exact};
use fitbound::constructions::{stock, DDomain};
use fitbound::field::{FieldElement, FiniteField};
use fitbound::frobid::{min_primitive_identity_degree, vandermonde_det, FrobIdError};
use fitbound::group::{Group, Permutation};
use fitbound::harness::search::{identity_search, SearchLimits};
use fitbound::harness::{run_catalog, CatalogEntry, Catalog, CheckStatus, Outcome};
use fitbound::structure::{fitting_height, fitting_subgroup, o_qprime_q, soluble_radical};

use common::Set;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict, u64);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// Bound formulas, checked against direct big-integer evaluation.
fn bounds() -> Verdict {
    ensure(b1(1, 0) == 10, || format!("B1(1,0) = {}", b1(1, 0)))?;
    ensure(b1(5, 6) == 48, || format!("B1(5,6) = {}", b1(5, 6)))?;
    for d in 0..=6u64 {
        for m in 0..=10u64 {
            ensure(b1(d, m) == 8 * d + m + 2, || format!("B1({d},{m})"))?;
        }
    }
    ensure(b3_exact(3, 1).unwrap() == BigUint::from(2u32), || "B3(3,1) != 2".into())?;
    ensure(b3_exact(0, 7).unwrap() == BigUint::from(8u32), || "B3(0,7) != 8".into())?;
    let direct = BigUint::from(2u32) + BigUint::from(2u32).pow(1000);
    ensure(b3_exact(1, 2).unwrap() == direct, || "B3(1,2) != 2 + 2^1000".into())?;
    for d in 0..=10 {
        let v = b2(d, 1).unwrap();
        ensure(v.exact() == Some(&BigUint::from(1u32)), || format!("B2({d},1) = {}", v.summary()))?;
    }
    let big = b2(1, 2).unwrap();
    ensure(big.ge(&BigUint::from(10u32).pow(9)), || "B2(1,2) not >= 10^9".into())?;
    ensure(big.ge_u64(32736), || "B2(1,2) not >= 32736".into())?;
    // d = 0 makes the factorial argument 1 for every m.
    ensure(b2(0, 2).unwrap().exact() == Some(&BigUint::from(1u32)), || "B2(0,2) != 1".into())?;
    Ok("B1, B3 exact; B2(d,1) = 1 for d <= 10; B2(1,2) >= 10^9".into())
}

// The group D(N, K): exhaustive axioms from the defining formula, order,
// projection and Frobenius stability, with field arithmetic as the only
// primitive.
fn ddomain_suite() -> Verdict {
    let mut checked = 0;
    for p in [2u64, 3, 5] {
        let k = FiniteField::new(p, 2).unwrap();
        let q = p;
        for n in 0..p as i64 {
            let nf = k.from_int(n);
            let frob = |x: FieldElement| k.pow(x, q);
            let on_curve = |(s, u): (FieldElement, FieldElement)| {
                k.add(u, frob(u)) == k.neg(k.mul(nf, k.mul(s, frob(s))))
            };
            let op = |(s, u): (FieldElement, FieldElement), (t, v): (FieldElement, FieldElement)| {
                (k.add(s, t), k.sub(k.add(u, v), k.mul(nf, k.mul(frob(s), t))))
            };
            let elems: Vec<_> = k
                .elements()
                .flat_map(|s| k.elements().map(move |u| (s, u)))
                .filter(|&x| on_curve(x))
                .collect();
            ensure(elems.len() as u64 == q * q * q, || format!("q={q} N={n}: {} elements", elems.len()))?;
            let members: BTreeSet<(u32, u32)> = elems.iter().map(|(s, u)| (s.index(), u.index())).collect();
            let e = (k.zero(), k.zero());
            for &a in &elems {
                ensure(op(a, e) == a && op(e, a) == a, || format!("q={q} N={n}: identity fails"))?;
                ensure(elems.iter().any(|&b| op(a, b) == e), || format!("q={q} N={n}: no inverse"))?;
                for &b in &elems {
                    let ab = op(a, b);
                    ensure(members.contains(&(ab.0.index(), ab.1.index())), || {
                        format!("q={q} N={n}: not closed")
                    })?;
                    for &c in &elems {
                        ensure(op(ab, c) == op(a, op(b, c)), || format!("q={q} N={n}: not associative"))?;
                    }
                }
            }
            let projected: BTreeSet<u32> = elems.iter().map(|(s, _)| s.index()).collect();
            ensure(projected.len() as u64 == k.order(), || format!("q={q} N={n}: projection not onto"))?;
            ensure(elems.iter().all(|&(s, u)| on_curve((frob(s), frob(u)))), || {
                format!("q={q} N={n}: not frobenius stable")
            })?;

            let d = DDomain::new(p, 1, n).map_err(|e| e.to_string())?;
            ensure(d.group().order() as u64 == q * q * q, || format!("library order q={q}"))?;
            ensure(d.check_axioms().is_ok(), || format!("library axioms q={q} N={n}"))?;
            ensure(d.projection_surjective() && d.frobenius_stable(), || format!("library q={q} N={n}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} groups D(N, GF(p^2)), p in {{2,3,5}}, all N"))
}

/// Whether `q0^i = q0^j mod (q - 1)` for some `i < j <= d`, by u128 powers.
fn repeated(q: u64, q0: u64, d: usize) -> bool {
    let m = (q - 1) as u128;
    let mut seen = BTreeSet::new();
    (0..=d as u32).any(|i| !seen.insert((q0 as u128).pow(i) % m))
}

/// Brute force: does some `sum a_i s^(p^i)` with `a_d != 0`, `d < e`, vanish
/// on the whole field?
fn lower_identity_exists(k: &FiniteField, p: u64, e: u32) -> bool {
    let powers: Vec<Vec<FieldElement>> = k
        .elements()
        .map(|s| (0..e).map(|i| k.pow(s, p.pow(i))).collect())
        .collect();
    for d in 1..e as usize {
        let total = (p as usize).pow(d as u32 + 1);
        for code in 0..total {
            let digits: Vec<u64> = (0..=d).map(|i| (code / (p as usize).pow(i as u32)) as u64 % p).collect();
            if digits[d] == 0 {
                continue;
            }
            let vanishes = powers.iter().all(|row| {
                (0..=d).fold(k.zero(), |acc, i| k.add(acc, k.mul(k.from_int(digits[i] as i64), row[i]))).is_zero()
            });
            if vanishes {
                return true;
            }
        }
    }
    false
}

fn frobenius_order_bound() -> Verdict {
    let mut fields = 0;
    let mut dets = 0;
    for p in [2u64, 3, 5, 7] {
        for e in 1..=5u32 {
            let k = FiniteField::new(p, e).map_err(|x| x.to_string())?;
            let q = k.order();
            match min_primitive_identity_degree(&k, p, 8) {
                Err(FrobIdError::TrivialFrobenius { .. }) if e == 1 => {}
                Ok(found) if e > 1 => {
                    ensure(found.degree == e as usize, || format!("GF({q}): degree {}", found.degree))?;
                    let a = common::coeffs_of(&found.identity);
                    ensure(
                        k.elements().all(|s| {
                            a.iter()
                                .enumerate()
                                .fold(k.zero(), |acc, (i, &c)| k.add(acc, k.mul(k.from_int(c), k.pow(s, p.pow(i as u32)))))
                                .is_zero()
                        }),
                        || format!("GF({q}): reported identity does not vanish"),
                    )?;
                    if q <= 256 {
                        ensure(!lower_identity_exists(&k, p, e), || format!("GF({q}): lower identity exists"))?;
                    }
                }
                other => return Err(format!("GF({q}): unexpected {other:?}")),
            }
            fields += 1;
            if q <= 256 {
                for d in 1..=(e as usize + 2) {
                    let zero = vandermonde_det(&k, p, d).map_err(|x| x.to_string())?.is_zero();
                    ensure(zero == repeated(q, p, d), || format!("GF({q}) d={d}: det zero = {zero}"))?;
                    dets += 1;
                }
            }
        }
    }
    Ok(format!("{fields} fields, minimal degree = e for e >= 2, {dets} determinants match the congruence"))
}

fn catalog_groups() -> Result<Vec<(String, Group)>, String> {
    Catalog::builtin()
        .entries
        .iter()
        .map(|e: &CatalogEntry| {
            e.resolve(Path::new("."))
                .map(|r| (e.label.clone(), r.group))
                .map_err(|x| x.to_string())
        })
        .collect()
}

fn structural_oracles() -> Verdict {
    let mut brute = 0;
    let groups = catalog_groups()?;
    for (label, g) in &groups {
        let f: Set = fitting_subgroup(g).members().iter().copied().collect();
        let mut meet: Set = g.elements().collect();
        for q in common::prime_factors(g.order() as u64) {
            let o: Set = o_qprime_q(g, q).map_err(|e| e.to_string())?.members().iter().copied().collect();
            meet = meet.intersection(&o).copied().collect();
        }
        ensure(f == meet, || format!("{label}: F != intersection of O_(q',q)"))?;
        if g.order() <= 400 {
            ensure(f == common::fitting(g), || format!("{label}: F disagrees with oracle"))?;
            let r: Set = soluble_radical(g).members().iter().copied().collect();
            ensure(r == common::radical(g), || format!("{label}: R disagrees with oracle"))?;
            for q in common::prime_factors(g.order() as u64) {
                let o: Set = o_qprime_q(g, q).unwrap().members().iter().copied().collect();
                ensure(o == common::o_qprime_q(g, q), || format!("{label}: O_({q}',{q}) disagrees"))?;
            }
            brute += 1;
        }
    }
    let s4 = stock("S4").unwrap();
    let s3 = stock("S3").unwrap();
    let a5 = stock("A5").unwrap();
    ensure(fitting_height(&s4) == Ok(3) && common::fitting_height(&s4) == Some(3), || "h(S4) != 3".into())?;
    ensure(fitting_height(&s3) == Ok(2) && common::fitting_height(&s3) == Some(2), || "h(S3) != 2".into())?;
    ensure(soluble_radical(&a5).order() == 1 && common::radical(&a5).len() == 1, || "R(A5) != 1".into())?;
    // V4 in S4: the identity and the three double transpositions.
    let v4: Set = ["()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"]
        .iter()
        .map(|c| s4.index_of(&Permutation::parse(c, Some(4)).unwrap()).unwrap())
        .collect();
    let f_s4: Set = fitting_subgroup(&s4).members().iter().copied().collect();
    ensure(f_s4 == v4 && common::fitting(&s4) == v4, || "F(S4) != V4".into())?;
    Ok(format!("{} catalog groups, {brute} against the brute-force oracle; h(S4)=3, h(S3)=2, R(A5)=1, F(S4)=V4", groups.len()))
}

fn catalog_sweep() -> Verdict {
    let catalog = Catalog::builtin();
    ensure(catalog.entries.len() >= 12, || "fewer than 12 entries".into())?;
    let report = run_catalog(&catalog, Path::new(".")).map_err(|e| e.to_string())?;
    let mut seen_addenda = BTreeSet::new();
    for r in &report.records {
        ensure(r.outcome != Outcome::Violation, || format!("{}: violation {:?}", r.label, r.verdicts))?;
        ensure(r.expectation_failures.is_empty(), || format!("{}: {:?}", r.label, r.expectation_failures))?;
        if r.outcome == Outcome::Pass {
            for c in r.verdicts.iter().chain(&r.addenda) {
                ensure(c.status != CheckStatus::Fail, || format!("{}: {} failed: {}", r.label, c.name, c.detail))?;
                if c.status == CheckStatus::Pass {
                    seen_addenda.insert(c.name.clone());
                }
            }
        }
    }
    let a5 = report
        .records
        .iter()
        .find(|r| r.label == "a5^2-shift-constant-60")
        .ok_or("constant-60 entry missing")?;
    ensure(
        a5.outcome == Outcome::HypothesisFailure && a5.reasons.iter().any(|s| s.contains("content 60")),
        || format!("constant-60 entry: {:?} {:?}", a5.outcome, a5.reasons),
    )?;
    for name in ["turull", "corollary", "section bounds"] {
        ensure(seen_addenda.contains(name), || format!("addendum {name} never applied"))?;
    }
    ensure(report.exit_code() == 0, || "exit code not 0".into())?;
    Ok(format!(
        "{} entries: {} pass, {} hypothesis failures, 0 violations",
        report.records.len(),
        report.count(Outcome::Pass),
        report.count(Outcome::HypothesisFailure)
    ))
}

fn conjugation_cases() -> Vec<(&'static str, Automorphism)> {
    let s4 = stock("S4").unwrap();
    let a4 = stock("A4").unwrap();
    let d8 = stock("D8").unwrap();
    let el = |g: &Group, c: &str| g.index_of(&Permutation::parse(c, g.degree()).unwrap()).unwrap();
    let pairs = |list: &[(&str, &str)]| -> Vec<(String, String)> {
        list.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    };
    let a4_outer = automorphism_from_map(&a4, &pairs(&[("(1 2 3)", "(1 3 2)"), ("(2 3 4)", "(1 3 4)")])).unwrap();
    let dd = DDomain::new(2, 1, 1).unwrap();
    vec![
        ("S4 inner (1 2 3)", Automorphism::inner(&s4, el(&s4, "(1 2 3)"))),
        ("S4 inner (1 2 3 4)", Automorphism::inner(&s4, el(&s4, "(1 2 3 4)"))),
        ("A4 conj by (1 2)", a4_outer),
        ("A4 inner (1 2 3)", Automorphism::inner(&a4, el(&a4, "(1 2 3)"))),
        ("D8 inner (1 2 3 4)", Automorphism::inner(&d8, el(&d8, "(1 2 3 4)"))),
        ("D8 inner (2 4)", Automorphism::inner(&d8, el(&d8, "(2 4)"))),
        ("D(1,GF(4)) frobenius", dd.frobenius(1).unwrap()),
    ]
}

fn conjugation_invariance() -> Verdict {
    let mut count = 0;
    for (name, phi) in conjugation_cases() {
        let g = phi.group().clone();
        let identities = identity_search(&phi, phi.order() as usize, 1, SearchLimits::default()).identities;
        ensure(!identities.is_empty(), || format!("{name}: no identity found"))?;
        let fixed = common::fixed_points(&phi);
        for gamma_el in g.elements() {
            let gamma = Automorphism::inner(&g, gamma_el);
            let psi = phi.conjugate(&gamma).map_err(|e| e.to_string())?;
            // brute-force check that psi = gamma phi gamma^-1 pointwise
            let gi = g.inv(gamma_el);
            for x in g.elements() {
                let pre = g.mul(g.mul(gi, x), gamma_el);
                let expected = g.mul(g.mul(gamma_el, phi.apply(pre)), gi);
                ensure(psi.apply(x) == expected, || format!("{name}: conjugate map wrong"))?;
            }
            ensure(psi.order() == phi.order(), || format!("{name}: order changed"))?;
            let moved: Set = fixed.iter().map(|&x| g.mul(g.mul(gamma_el, x), gi)).collect();
            ensure(common::fixed_points(&psi) == moved, || format!("{name}: fixed points not gamma(C)"))?;
            for f in &identities {
                ensure(common::satisfies(&psi, &common::coeffs_of(f)), || format!("{name}: {f} lost"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} conjugates over S4, A4, D8, D(1,GF(4))"))
}

fn search_completeness() -> Verdict {
    let c7 = stock("C7").unwrap();
    let phi = Automorphism::power_map(&c7, 2).unwrap();
    let r = identity_search(&phi, 2, 3, SearchLimits::default());
    ensure(!r.partial && r.bound == 3, || "search incomplete".into())?;
    let got: Vec<Vec<i64>> = r.identities.iter().map(common::coeffs_of).collect();
    // phi^i(g) = g^(2^i), so the identity holds iff sum a_i 2^i = 0 mod 7.
    let mut expected = Vec::new();
    for d in 0..=2usize {
        let mut v = vec![-3i64; d + 1];
        loop {
            let value: i64 = v.iter().enumerate().map(|(i, &a)| a << i).sum();
            let content = v.iter().fold(0, |acc, &a| common::gcd(acc, a));
            if v[d] != 0 && value.rem_euclid(7) == 0 && content == 1 {
                expected.push(v.clone());
            }
            let mut i = d as isize;
            while i >= 0 && v[i as usize] == 3 {
                v[i as usize] = -3;
                i -= 1;
            }
            if i < 0 {
                break;
            }
            v[i as usize] += 1;
        }
    }
    ensure(got == expected, || format!("search {} vs brute force {}", got.len(), expected.len()))?;
    for f in &got {
        ensure(common::satisfies(&phi, f), || format!("{f:?} does not hold"))?;
    }
    Ok(format!("{} identities of degree <= 2 with |a_i| <= 3, same order as brute force", got.len()))
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("elapsed_ms");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

fn determinism() -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let run = |name: &str| -> Result<String, String> {
        let path = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_fitbound"))
            .args(["verify", "--builtin", "--report"])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(status.status.code() == Some(0), || format!("exit status {:?}", status.status))?;
        std::fs::read_to_string(&path).map_err(|e| e.to_string())
    };
    let first = run("a.json")?;
    let second = run("b.json")?;
    let mut a: Value = serde_json::from_str(&first).map_err(|e| e.to_string())?;
    let mut b: Value = serde_json::from_str(&second).map_err(|e| e.to_string())?;
    ensure(first.contains("elapsed_ms"), || "timing fields missing".into())?;
    strip_timing(&mut a);
    strip_timing(&mut b);
    let (a, b) = (serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    ensure(a == b, || "reports differ".into())?;
    // Without timings the files must match byte for byte.
    let bytes = |name: &str| -> Result<Vec<u8>, String> {
        let path = dir.path().join(name);
        Command::new(env!("CARGO_BIN_EXE_fitbound"))
            .args(["verify", "--builtin", "--no-timing", "--report"])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?;
        std::fs::read(&path).map_err(|e| e.to_string())
    };
    ensure(bytes("c.json")? == bytes("d.json")?, || "untimed reports differ".into())?;
    Ok(format!("two runs identical ({} bytes without timings)", a.len()))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("1 bound formulas", bounds, 1),
        ("2 D(N,K) suite", ddomain_suite, 30),
        ("3 frobenius order bound", frobenius_order_bound, 120),
        ("4 structural oracles", structural_oracles, 60),
        ("5 catalog sweep", catalog_sweep, 300),
        ("6 conjugation invariance", conjugation_invariance, 60),
        ("7 identity search vs brute force", search_completeness, 10),
        ("8 report determinism", determinism, 300),
    ];
    // `ACCEPTANCE_ONLY=3` runs a single criterion.
    let only = std::env::var("ACCEPTANCE_ONLY").ok();
    let mut failures = 0;
    for (name, run, limit) in criteria {
        if only.as_deref().is_some_and(|o| !name.starts_with(o)) {
            continue;
        }
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let verdict = match &result {
            Ok(_) if elapsed <= limit => "PASS",
            _ => "FAIL",
        };
        let detail = match result {
            Ok(msg) if elapsed <= limit => msg,
            Ok(msg) => format!("{msg}; too slow"),
            Err(msg) => msg,
        };
        if verdict == "FAIL" {
            failures += 1;
        }
        println!(
            "{verdict} criterion {name}: {detail} [{:.2}s, limit {}s]",
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
