//! Per-entry verification: hypotheses, invariants, bounds, verdicts, addenda.

use std::time::Instant;

use num_bigint::BigUint;

use crate::arith;
use crate::automorphism::{section_data, Automorphism};
use crate::bounds::{b1, b2, corollary_bound, BigBound};
use crate::group::Group;
use crate::structure::{self, composition_length};

use super::catalog::{ExpectedOutcome, Identity, Resolved};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypotheses {
    pub content: BigUint,
    pub primitive: bool,
    pub coprime: bool,
    pub identity_satisfied: bool,
    /// Element violating the identity, in the group's notation.
    pub witness: Option<String>,
}

impl Hypotheses {
    pub fn all_hold(&self) -> bool {
        self.primitive && self.coprime && self.identity_satisfied
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub order: u64,
    pub phi_order: u64,
    pub m: u64,
    pub d: u64,
    pub soluble: bool,
    pub radical_order: u64,
    pub h_radical: u64,
    /// `None` when the centraliser is not soluble.
    pub h_centraliser: Option<u64>,
    pub centraliser_order: u64,
    pub quotient_order: u64,
}

#[derive(Clone, Debug)]
pub struct Bounds {
    pub b1_d_hc: Option<u64>,
    pub b1_d_m: u64,
    pub b2_d_m: BigBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Not decidable as stated, recorded without failing.
    Flagged,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Flagged => "flagged",
            CheckStatus::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    fn new(name: &str, status: CheckStatus, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            status,
            detail: detail.into(),
        }
    }

    fn compare(name: &str, holds: bool, detail: String) -> Self {
        let status = if holds { CheckStatus::Pass } else { CheckStatus::Fail };
        Check::new(name, status, detail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Hypotheses hold and every applicable check passes.
    Pass,
    /// The entry does not meet the hypotheses (primitive identity, coprime order).
    HypothesisFailure,
    /// Hypotheses hold but a bound or addendum fails.
    Violation,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::HypothesisFailure => "hypothesis_failure",
            Outcome::Violation => "violation",
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationRecord {
    pub label: String,
    pub group: String,
    pub identity: String,
    pub order: u64,
    pub phi_order: u64,
    pub m: u64,
    pub d: u64,
    pub hypotheses: Hypotheses,
    pub outcome: Outcome,
    pub reasons: Vec<String>,
    pub invariants: Option<Invariants>,
    pub bounds: Option<Bounds>,
    pub corollary_bound: Option<BigUint>,
    pub verdicts: Vec<Check>,
    pub addenda: Vec<Check>,
    /// Differences from the entry's expectation; empty when it matched.
    pub expectation_failures: Vec<String>,
    pub elapsed_ms: u128,
}

impl VerificationRecord {
    /// True when the entry behaved as expected and nothing failed.
    pub fn ok(&self) -> bool {
        self.expectation_failures.is_empty() && self.outcome != Outcome::Violation
    }
}

pub fn verify_resolved(label: &str, resolved: &Resolved) -> VerificationRecord {
    let start = Instant::now();
    let g = &resolved.group;
    let phi = &resolved.automorphism;
    let identity = &resolved.identity;
    let f = identity.polynomial();
    let content = f.content().magnitude().clone();
    let witness = identity.witness(phi);
    let hypotheses = Hypotheses {
        primitive: f.is_primitive(),
        content,
        coprime: phi.is_coprime(),
        identity_satisfied: witness.is_none(),
        witness: witness.map(|w| g.describe(w)),
    };
    let mut record = VerificationRecord {
        label: label.to_string(),
        group: resolved.description.clone(),
        identity: identity.describe(),
        order: g.order() as u64,
        phi_order: phi.order(),
        m: phi.fixed_point_count() as u64,
        d: identity.d(),
        hypotheses: hypotheses.clone(),
        outcome: Outcome::Pass,
        reasons: Vec::new(),
        invariants: None,
        bounds: None,
        corollary_bound: None,
        verdicts: Vec::new(),
        addenda: Vec::new(),
        expectation_failures: Vec::new(),
        elapsed_ms: 0,
    };
    if !hypotheses.primitive {
        record.reasons.push(format!("identity not primitive (content {})", hypotheses.content));
    }
    if !hypotheses.coprime {
        record.reasons.push(format!(
            "automorphism not coprime (gcd({}, {}) = {})",
            record.order,
            record.phi_order,
            arith::gcd(record.order, record.phi_order)
        ));
    }
    if let Some(w) = &hypotheses.witness {
        record.reasons.push(format!("identity not satisfied (witness {w})"));
    }
    if !hypotheses.all_hold() {
        record.outcome = Outcome::HypothesisFailure;
        record.elapsed_ms = start.elapsed().as_millis();
        return record;
    }

    let invariants = compute_invariants(g, phi, identity);
    let (d, m) = (invariants.d, invariants.m);
    let b2 = b2(d, m).expect("m >= 1");
    let bounds = Bounds {
        b1_d_hc: invariants.h_centraliser.map(|h| b1(d, h)),
        b1_d_m: b1(d, m),
        b2_d_m: b2,
    };
    record.verdicts = verdicts(&invariants, &bounds);
    record.addenda = addenda(g, phi, identity, &invariants, &mut record.corollary_bound);
    record.invariants = Some(invariants);
    record.bounds = Some(bounds);
    let failed: Vec<String> = record
        .verdicts
        .iter()
        .chain(&record.addenda)
        .filter(|c| c.status == CheckStatus::Fail)
        .map(|c| format!("{} failed: {}", c.name, c.detail))
        .collect();
    if !failed.is_empty() {
        record.outcome = Outcome::Violation;
        record.reasons = failed;
    }
    record.elapsed_ms = start.elapsed().as_millis();
    record
}

fn compute_invariants(g: &Group, phi: &Automorphism, identity: &Identity) -> Invariants {
    let radical = structure::soluble_radical(g);
    let h_radical = structure::subgroup_fitting_height(&radical).expect("the radical is soluble") as u64;
    let centraliser = phi.fixed_points();
    let h_centraliser = structure::subgroup_fitting_height(&centraliser)
        .ok()
        .map(|h| h as u64);
    Invariants {
        order: g.order() as u64,
        phi_order: phi.order(),
        m: centraliser.order() as u64,
        d: identity.d(),
        soluble: radical.is_whole(),
        radical_order: radical.order() as u64,
        h_radical,
        h_centraliser,
        centraliser_order: centraliser.order() as u64,
        quotient_order: (g.order() / radical.order()) as u64,
    }
}

fn verdicts(inv: &Invariants, bounds: &Bounds) -> Vec<Check> {
    let mut out = Vec::new();
    match (inv.h_centraliser, bounds.b1_d_hc) {
        (Some(hc), Some(b)) => {
            out.push(Check::compare(
                "h(R) <= B1(d,h(C))",
                inv.h_radical <= b,
                format!("{} <= {b}", inv.h_radical),
            ));
            out.push(Check::compare(
                "h(C) <= m",
                hc <= inv.m,
                format!("{hc} <= {}", inv.m),
            ));
        }
        _ => {
            let note = "C_G(phi) is not soluble, h(C) undefined";
            out.push(Check::new("h(R) <= B1(d,h(C))", CheckStatus::Flagged, note));
            out.push(Check::new("h(C) <= m", CheckStatus::Flagged, note));
        }
    }
    out.push(Check::compare(
        "h(R) <= B1(d,m)",
        inv.h_radical <= bounds.b1_d_m,
        format!("{} <= {}", inv.h_radical, bounds.b1_d_m),
    ));
    out.push(Check::compare(
        "|G/R| <= B2(d,m)",
        bounds.b2_d_m.ge_u64(inv.quotient_order),
        format!("{} <= {}", inv.quotient_order, bounds.b2_d_m.summary()),
    ));
    out
}

fn addenda(
    g: &Group,
    phi: &Automorphism,
    identity: &Identity,
    inv: &Invariants,
    corollary_out: &mut Option<BigUint>,
) -> Vec<Check> {
    let mut out = Vec::new();
    let h_g = inv.soluble.then_some(inv.h_radical);

    // corollary: h(G) <= 8 deg f + 2|f(1)| + 2
    let name = "corollary";
    out.push(match (identity, h_g) {
        (Identity::Unordered(_), _) => {
            Check::new(name, CheckStatus::Skipped, "stated for ordered identities")
        }
        (_, None) => Check::new(name, CheckStatus::Skipped, "G is not soluble"),
        (Identity::Ordered(f), Some(h)) => match corollary_bound(f) {
            Err(_) => Check::new(name, CheckStatus::Skipped, "f(1) = 0"),
            Ok(bound) => {
                let holds = BigUint::from(h) <= bound;
                let detail = format!("{h} <= {bound}");
                *corollary_out = Some(bound);
                Check::compare(name, holds, detail)
            }
        },
    });

    // Turull: h(G) <= 2 k(|phi|) + h(C)
    let name = "turull";
    out.push(match (h_g, inv.h_centraliser) {
        (Some(h), Some(hc)) => {
            let k = composition_length(inv.phi_order) as u64;
            Check::compare(name, h <= 2 * k + hc, format!("{h} <= 2*{k} + {hc}"))
        }
        _ => Check::new(name, CheckStatus::Skipped, "G is not soluble"),
    });

    // section bounds: |<phi|_H>| <= (2d)^(2d) and k(|phi|_H|) <= 4d
    let name = "section bounds";
    out.push(if h_g.is_none() {
        Check::new(name, CheckStatus::Skipped, "G is not soluble")
    } else if g.is_trivial() {
        Check::new(name, CheckStatus::Skipped, "G is trivial")
    } else {
        section_check(phi, inv.d)
    });

    // fixed-point-free coprime action with a primitive identity forces solubility
    let name = "rowley";
    out.push(if inv.m == 1 {
        Check::compare(name, inv.soluble, format!("m = 1, soluble = {}", inv.soluble))
    } else {
        Check::new(name, CheckStatus::Skipped, format!("m = {}", inv.m))
    });

    // C_R(phi|_R) = C_G(phi) ∩ R
    let name = "restriction";
    let radical = structure::soluble_radical(g);
    out.push(match phi.restrict(&radical) {
        Ok((r, _)) => {
            let mr = r.fixed_point_count() as u64;
            Check::compare(name, mr <= inv.m, format!("|C_R| = {mr} <= {}", inv.m))
        }
        Err(e) => Check::new(name, CheckStatus::Fail, format!("restriction to R failed: {e}")),
    });
    out
}

fn section_check(phi: &Automorphism, d: u64) -> Check {
    let name = "section bounds";
    // 0^0 = 1 keeps d = 0 meaningful
    let order_bound = BigUint::from(2 * d).pow(2 * d as u32);
    let mut parts = Vec::new();
    let mut holds = true;
    for q in arith::prime_divisors(phi.group().order() as u64) {
        match section_data(phi, q) {
            Ok(s) => {
                let ok = BigUint::from(s.order) <= order_bound && s.composition_length as u64 <= 4 * d;
                holds &= ok;
                parts.push(format!(
                    "q={q}: |H|={}, |phi_H|={} <= {order_bound}, k={} <= {}",
                    s.group.order(),
                    s.order,
                    s.composition_length,
                    4 * d
                ));
            }
            Err(e) => {
                holds = false;
                parts.push(format!("q={q}: {e}"));
            }
        }
    }
    Check::compare(name, holds, parts.join("; "))
}

/// Compares a record against the expectation of its catalog entry.
pub fn expectation_failures(
    record: &VerificationRecord,
    expect: &super::catalog::Expectation,
) -> Vec<String> {
    let mut out = Vec::new();
    let outcome_ok = matches!(
        (expect.outcome, record.outcome),
        (ExpectedOutcome::Pass, Outcome::Pass)
            | (ExpectedOutcome::HypothesisFailure, Outcome::HypothesisFailure)
    );
    if !outcome_ok {
        out.push(format!(
            "expected outcome {:?}, got {}",
            expect.outcome,
            record.outcome.as_str()
        ));
    }
    if let Some(text) = &expect.reason_contains {
        if !record.reasons.iter().any(|r| r.contains(text.as_str())) {
            out.push(format!("no reason mentions {text:?}"));
        }
    }
    let mut value = |name: &str, expected: Option<u64>, actual: Option<u64>| {
        if let Some(e) = expected {
            if actual != Some(e) {
                out.push(format!("{name}: expected {e}, got {actual:?}"));
            }
        }
    };
    let inv = record.invariants.as_ref();
    value("order", expect.order, Some(record.order));
    value("phi_order", expect.phi_order, Some(record.phi_order));
    value("m", expect.m, Some(record.m));
    value("d", expect.d, Some(record.d));
    value("radical_order", expect.radical_order, inv.map(|i| i.radical_order));
    value("h_radical", expect.h_radical, inv.map(|i| i.h_radical));
    value("h_centraliser", expect.h_centraliser, inv.and_then(|i| i.h_centraliser));
    out
}
