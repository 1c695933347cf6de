//! Embedding obstructions, loop noncontractibility certificates and the
//! breaking analysis for the index-zero cylinders between the two boundary
//! orbits.

use std::fmt;

use serde::Serialize;

use crate::domain::{
    check_ball_sandwich, contains, inclusion_gauge, make_ellipsoid, ConvexToricDomain, RadiusInterval,
};
use crate::ech::{capacities, capacity, classify_low_index};
use crate::error::{Error, Result};
use crate::orbits::{enumerate_orbit_sets, orbit_action, OrbitFamilyLabel, OrbitSet};
use crate::rational::{int, Rational};

/// Smallest `k ≤ k_max` with `c_k(Ω₁) > c_k(Ω₂)`, which rules out any
/// symplectic embedding `X_Ω₁ → X_Ω₂`.
pub fn embedding_obstruction(
    inner: &ConvexToricDomain,
    outer: &ConvexToricDomain,
    k_max: u64,
) -> Result<Option<u64>> {
    if k_max == 0 {
        return Err(Error::InvalidParameter("K must be at least 1".into()));
    }
    let ci = capacities(inner, k_max).values;
    let co = capacities(outer, k_max).values;
    Ok((1..=k_max).find(|&k| ci[k as usize] > co[k as usize]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Noncontractible,
    ContractibleByBallSandwich,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Noncontractible => "NONCONTRACTIBLE",
            Verdict::ContractibleByBallSandwich => "CONTRACTIBLE (ball sandwich)",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = "<=")]
    Le,
}

impl Relation {
    fn holds(self, l: &Rational, r: &Rational) -> bool {
        match self {
            Relation::Lt => l < r,
            Relation::Le => l <= r,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
        })
    }
}

/// One compared inequality of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(with = "crate::rational::serde_str")]
    pub left: Rational,
    pub relation: Relation,
    #[serde(with = "crate::rational::serde_str")]
    pub right: Rational,
    pub passed: bool,
}

impl Check {
    fn new(name: &str, left: Rational, relation: Relation, right: Rational) -> Self {
        let passed = relation.holds(&left, &right);
        Self { name: name.to_string(), left, relation, right, passed }
    }
}

/// Which intercept ordering the certificate was evaluated against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Ordering {
    /// `a < c < f₁(0) < f₂(0)`
    Standard,
    /// `f₁(0) < f₂(0) < a < c`
    Symmetric,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub verdict: Verdict,
    pub ordering: Ordering,
    pub checks: Vec<Check>,
    pub ball_interval: Option<RadiusInterval>,
    #[serde(with = "crate::rational::serde_str")]
    pub c1_outer: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub c2_inner: Rational,
}

impl CertificateReport {
    pub fn theorem_checks_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn ordering_checks(inner: &ConvexToricDomain, outer: &ConvexToricDomain, ordering: Ordering) -> Vec<Check> {
    let (a, f1) = (inner.a().clone(), inner.f0().clone());
    let (c, f2) = (outer.a().clone(), outer.f0().clone());
    let lt = Relation::Lt;
    match ordering {
        Ordering::Standard => vec![
            Check::new("a < c", a, lt, c.clone()),
            Check::new("c < f1(0)", c, lt, f1.clone()),
            Check::new("f1(0) < f2(0)", f1, lt, f2),
        ],
        Ordering::Symmetric => vec![
            Check::new("f1(0) < f2(0)", f1, lt, f2.clone()),
            Check::new("f2(0) < a", f2, lt, a.clone()),
            Check::new("a < c", a, lt, c),
        ],
    }
}

/// Sufficient criteria for the loop of embeddings `X_Ω₁ → X_Ω₂` to be
/// noncontractible (theorem hypotheses) or contractible (a ball fits between
/// the two domains). Anything else is inconclusive.
pub fn noncontractibility_certificate(inner: &ConvexToricDomain, outer: &ConvexToricDomain) -> CertificateReport {
    let standard = ordering_checks(inner, outer, Ordering::Standard);
    let symmetric = ordering_checks(inner, outer, Ordering::Symmetric);
    let (ordering, order_checks) = if !standard.iter().all(|c| c.passed) && symmetric.iter().all(|c| c.passed) {
        (Ordering::Symmetric, symmetric)
    } else {
        (Ordering::Standard, standard)
    };
    let c1_outer = capacity(outer, 1);
    let c2_inner = capacity(inner, 2);
    let mut checks = vec![Check::new("inclusion gauge", inclusion_gauge(inner, outer), Relation::Le, int(1))];
    checks.extend(order_checks);
    checks.push(Check::new("c1(outer) < c2(inner)", c1_outer.clone(), Relation::Lt, c2_inner.clone()));

    let mut report = CertificateReport {
        verdict: Verdict::Inconclusive,
        ordering,
        checks,
        ball_interval: None,
        c1_outer,
        c2_inner,
    };
    if report.theorem_checks_passed() {
        report.verdict = Verdict::Noncontractible;
    } else if let Some(iv) = check_ball_sandwich(inner, outer) {
        report.verdict = Verdict::ContractibleByBallSandwich;
        report.ball_interval = Some(iv);
    }
    report
}

/// The certificate for `E(a,b) ⊂ E(c,d)`, cross-checked against the direct
/// criterion `a < c < b < d` and `c < 2a`.
pub fn ellipsoid_certificate(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Result<CertificateReport> {
    if a > b {
        return Err(Error::InvalidEllipsoid(format!("expected a <= b, got a = {a}, b = {b}")));
    }
    if c > d {
        return Err(Error::InvalidEllipsoid(format!("expected c <= d, got c = {c}, d = {d}")));
    }
    let inner = make_ellipsoid(a.clone(), b.clone())?;
    let outer = make_ellipsoid(c.clone(), d.clone())?;
    let report = noncontractibility_certificate(&inner, &outer);
    let direct = a < c && c < b && b < d && c < &(a * int(2));
    if direct != (report.verdict == Verdict::Noncontractible) {
        return Err(Error::Inconsistent(format!(
            "ellipsoid criterion says {direct} but the general certificate says {:?}",
            report.verdict
        )));
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CandidateStatus {
    Candidate,
    ExcludedByAction,
    ExcludedByIndexActionLemma,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BreakingCandidate {
    pub set: OrbitSet,
    pub action: Rational,
    pub ech_index: i64,
    pub status: CandidateStatus,
}

/// An index-2 orbit set of `∂X_Ω₁` and whether its action lies in the window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditEntry {
    pub set: OrbitSet,
    pub action: Rational,
    pub in_window: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BreakingReport {
    pub window: (Rational, Rational),
    /// `x`-intercept of `Ω₂`, reported next to `c = c₁(Ω₂)`.
    pub outer_x_intercept: Rational,
    pub window_uses_x_intercept: bool,
    pub candidates: Vec<BreakingCandidate>,
    pub survivors: Vec<OrbitSet>,
    pub hypothesis_held: bool,
    /// Orbit sets of index at least 5 with action below `c₂(Ω₁)`; always
    /// empty unless the capacity or index computation is wrong.
    pub lemma_violations: Vec<OrbitSet>,
    pub index_two_audit: Vec<AuditEntry>,
}

/// Orbit sets of `∂X_Ω₁` through which the index-zero cylinders from the
/// outer short orbit to the inner one could break, by action window.
pub fn breaking_analysis(inner: &ConvexToricDomain, outer: &ConvexToricDomain) -> Result<BreakingReport> {
    if !contains(inner, outer) {
        return Err(Error::InvalidInput("breaking analysis needs nested domains".into()));
    }
    let a = inner.a().clone();
    let c = capacity(outer, 1);
    let c2 = capacity(inner, 2);
    let mut candidates = Vec::new();
    let mut survivors = Vec::new();
    let mut lemma_violations = Vec::new();
    for s in enumerate_orbit_sets(inner, &c) {
        let status = if s.action < a {
            CandidateStatus::ExcludedByAction
        } else if s.ech_index >= 5 && s.action < c2 {
            lemma_violations.push(s.set.clone());
            CandidateStatus::ExcludedByIndexActionLemma
        } else {
            survivors.push(s.set.clone());
            CandidateStatus::Candidate
        };
        candidates.push(BreakingCandidate { set: s.set, action: s.action, ech_index: s.ech_index, status });
    }
    let h11 = OrbitFamilyLabel::hyperbolic(1, 1).expect("valid label");
    let hypothesis_held = c < c2 && c < orbit_action(inner, &h11);
    let index_two_audit = classify_low_index(inner, 2)
        .remove(&2)
        .unwrap_or_default()
        .into_iter()
        .map(|set| {
            let action = set.action(inner);
            let in_window = a <= action && action <= c;
            AuditEntry { set, action, in_window }
        })
        .collect();
    Ok(BreakingReport {
        window_uses_x_intercept: &c == outer.a(),
        outer_x_intercept: outer.a().clone(),
        window: (a, c),
        candidates,
        survivors,
        hypothesis_held,
        lemma_violations,
        index_two_audit,
    })
}
