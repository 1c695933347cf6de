//! Embedded Reeb orbits on `∂X_Ω` and orbit sets.
//!
//! Label convention: the family `(p,q)` sits where the boundary has slope
//! `-q/p`, winds `(q,p)` times around `(θ₁,θ₂)` and has action
//! `support(Ω, q, p)`. This gives `A(e_{0,1}) = a`, `A(e_{1,0}) = f(0)` and
//! `A(e_{1,1}) = x + f(x)` at the point where `f' = -1`.
//!
//! Each Morse–Bott torus `T_{p,q}` (`p,q ≥ 1`) splits into an elliptic orbit
//! `e_{p,q}` and a hyperbolic orbit `h_{p,q}`. The splitting is symbolic: both
//! carry exactly the unperturbed action, and the caller's action bound plays
//! the role of the perturbation threshold.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::domain::ConvexToricDomain;
use crate::ech::ConvexGenerator;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum OrbitKind {
    #[serde(rename = "e")]
    Elliptic,
    #[serde(rename = "h")]
    Hyperbolic,
}

/// `e_{p,q}` or `h_{p,q}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitFamilyLabel {
    p: u64,
    q: u64,
    kind: OrbitKind,
}

impl OrbitFamilyLabel {
    pub fn new(p: u64, q: u64, kind: OrbitKind) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::InvalidInput("orbit label (0,0)".into()));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidInput(format!("orbit label ({p},{q}) is not primitive")));
        }
        if kind == OrbitKind::Hyperbolic && (p == 0 || q == 0) {
            return Err(Error::InvalidInput(format!("no hyperbolic orbit h_{{{p},{q}}}")));
        }
        Ok(Self { p, q, kind })
    }

    pub fn elliptic(p: u64, q: u64) -> Result<Self> {
        Self::new(p, q, OrbitKind::Elliptic)
    }

    pub fn hyperbolic(p: u64, q: u64) -> Result<Self> {
        Self::new(p, q, OrbitKind::Hyperbolic)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn kind(&self) -> OrbitKind {
        self.kind
    }
}

impl fmt::Display for OrbitFamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            OrbitKind::Elliptic => 'e',
            OrbitKind::Hyperbolic => 'h',
        };
        write!(f, "{c}_{{{},{}}}", self.p, self.q)
    }
}

/// Action of the orbit `label` on `∂X_Ω`.
pub fn orbit_action(domain: &ConvexToricDomain, label: &OrbitFamilyLabel) -> Rational {
    domain.support_unchecked(&BigInt::from(label.q), &BigInt::from(label.p))
}

/// A finite product `∏ α_i^{m_i}` of distinct embedded orbits. Hyperbolic
/// orbits appear with multiplicity exactly one.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitSet {
    entries: BTreeMap<OrbitFamilyLabel, u64>,
}

impl OrbitSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(entries: impl IntoIterator<Item = (OrbitFamilyLabel, u64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (label, m) in entries {
            if m == 0 {
                continue;
            }
            *map.entry(label).or_insert(0) += m;
        }
        if let Some((l, _)) = map.iter().find(|(l, &m)| l.kind == OrbitKind::Hyperbolic && m > 1) {
            return Err(Error::InvalidInput(format!("hyperbolic orbit {l} repeated")));
        }
        Ok(Self { entries: map })
    }

    pub fn entries(&self) -> &BTreeMap<OrbitFamilyLabel, u64> {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn action(&self, domain: &ConvexToricDomain) -> Rational {
        self.entries
            .iter()
            .map(|(l, &m)| orbit_action(domain, l) * Rational::from_integer(BigInt::from(m)))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// ECH index via the associated convex generator.
    pub fn ech_index(&self) -> i64 {
        ConvexGenerator::from_orbit_set(self).ech_index()
    }
}

impl fmt::Display for OrbitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "∅");
        }
        for (i, (l, &m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if m == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{m}")?;
            }
        }
        Ok(())
    }
}

/// An orbit family with its action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitFamily {
    pub label: OrbitFamilyLabel,
    pub action: Rational,
}

/// Every embedded orbit with action at most `bound`, sorted by action and then
/// by label.
pub fn enumerate_orbit_families(domain: &ConvexToricDomain, bound: &Rational) -> Vec<OrbitFamily> {
    let mut out = Vec::new();
    if bound <= &Rational::zero() {
        return out;
    }
    // action ≥ q·a and ≥ p·f(0)
    let q_max = (bound / domain.a()).floor().to_integer().to_u64().unwrap_or(u64::MAX);
    let p_max = (bound / domain.f0()).floor().to_integer().to_u64().unwrap_or(u64::MAX);
    for p in 0..=p_max {
        for q in 0..=q_max {
            if p.gcd(&q) != 1 {
                continue;
            }
            let e = OrbitFamilyLabel { p, q, kind: OrbitKind::Elliptic };
            let action = orbit_action(domain, &e);
            if &action > bound {
                continue;
            }
            if p > 0 && q > 0 {
                let h = OrbitFamilyLabel { p, q, kind: OrbitKind::Hyperbolic };
                out.push(OrbitFamily { label: h, action: action.clone() });
            }
            out.push(OrbitFamily { label: e, action });
        }
    }
    out.sort_by(|x, y| x.action.cmp(&y.action).then(x.label.cmp(&y.label)));
    out
}

/// An orbit set with its action and ECH index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedOrbitSet {
    pub set: OrbitSet,
    pub action: Rational,
    pub ech_index: i64,
}

/// All orbit sets (including `∅`) with total action at most `bound`, by a
/// bounded multiset search over [`enumerate_orbit_families`]. Sorted by action,
/// then by the orbit set's label sequence.
pub fn enumerate_orbit_sets(domain: &ConvexToricDomain, bound: &Rational) -> Vec<AnnotatedOrbitSet> {
    let families = enumerate_orbit_families(domain, bound);
    let mut out = Vec::new();
    let mut current: Vec<(OrbitFamilyLabel, u64)> = Vec::new();
    multiset_search(&families, 0, bound, &Rational::zero(), &mut current, &mut out);
    let mut annotated: Vec<AnnotatedOrbitSet> = out
        .into_iter()
        .map(|(entries, action)| {
            let set = OrbitSet { entries: entries.into_iter().collect() };
            let ech_index = set.ech_index();
            AnnotatedOrbitSet { set, action, ech_index }
        })
        .collect();
    annotated.sort_by(|x, y| x.action.cmp(&y.action).then_with(|| x.set.cmp(&y.set)));
    annotated
}

type Found = (Vec<(OrbitFamilyLabel, u64)>, Rational);

fn multiset_search(
    families: &[OrbitFamily],
    start: usize,
    bound: &Rational,
    action: &Rational,
    current: &mut Vec<(OrbitFamilyLabel, u64)>,
    out: &mut Vec<Found>,
) {
    out.push((current.clone(), action.clone()));
    for i in start..families.len() {
        let fam = &families[i];
        let max_mult = match fam.label.kind {
            OrbitKind::Hyperbolic => 1,
            OrbitKind::Elliptic => u64::MAX,
        };
        let mut m = 1;
        let mut act = action + &fam.action;
        while m <= max_mult && &act <= bound {
            current.push((fam.label, m));
            multiset_search(families, i + 1, bound, &act, current, out);
            current.pop();
            m += 1;
            act += &fam.action;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{make_ball, make_ellipsoid, make_polydisk};
    use crate::rational::{int, ratio};

    fn e(p: u64, q: u64) -> OrbitFamilyLabel {
        OrbitFamilyLabel::elliptic(p, q).unwrap()
    }

    fn h(p: u64, q: u64) -> OrbitFamilyLabel {
        OrbitFamilyLabel::hyperbolic(p, q).unwrap()
    }

    #[test]
    fn label_invariants() {
        assert!(OrbitFamilyLabel::elliptic(0, 0).is_err());
        assert!(OrbitFamilyLabel::elliptic(2, 2).is_err());
        assert!(OrbitFamilyLabel::hyperbolic(0, 1).is_err());
        assert!(OrbitFamilyLabel::hyperbolic(1, 0).is_err());
        assert!(OrbitFamilyLabel::hyperbolic(2, 3).is_ok());
        assert!(OrbitSet::new([(h(1, 1), 2)]).is_err());
    }

    #[test]
    fn axis_actions_are_the_intercepts() {
        let t = make_ellipsoid(int(3), ratio(7, 2)).unwrap();
        assert_eq!(orbit_action(&t, &e(0, 1)), int(3));
        assert_eq!(orbit_action(&t, &e(1, 0)), ratio(7, 2));
        let p = make_polydisk(int(1), int(1)).unwrap();
        assert_eq!(orbit_action(&p, &e(1, 1)), int(2));
        assert_eq!(orbit_action(&p, &h(1, 1)), int(2));
    }

    #[test]
    fn families_of_the_unit_ball() {
        let b = make_ball(int(1)).unwrap();
        let fams = enumerate_orbit_families(&b, &ratio(5, 2));
        let got: Vec<(OrbitFamilyLabel, Rational)> =
            fams.into_iter().map(|f| (f.label, f.action)).collect();
        let expected = vec![
            (e(0, 1), int(1)),
            (e(1, 0), int(1)),
            (e(1, 1), int(1)),
            (h(1, 1), int(1)),
            (e(1, 2), int(2)),
            (h(1, 2), int(2)),
            (e(2, 1), int(2)),
            (h(2, 1), int(2)),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn families_below_the_shortest_orbit() {
        let t = make_ellipsoid(int(1), int(2)).unwrap();
        assert!(enumerate_orbit_families(&t, &ratio(1, 2)).is_empty());
        let fams = enumerate_orbit_families(&t, &int(1));
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].label, e(0, 1));
    }

    #[test]
    fn orbit_sets_of_the_unit_ball() {
        let b = make_ball(int(1)).unwrap();
        let sets = enumerate_orbit_sets(&b, &int(1));
        let names: Vec<String> = sets.iter().map(|s| s.set.to_string()).collect();
        assert_eq!(names, vec!["∅", "e_{0,1}", "e_{1,0}", "e_{1,1}", "h_{1,1}"]);
        assert_eq!(sets.iter().map(|s| s.ech_index).collect::<Vec<_>>(), vec![0, 2, 2, 4, 3]);
        let none = enumerate_orbit_sets(&b, &ratio(1, 2));
        assert_eq!(none.len(), 1);
        assert!(none[0].set.is_empty());
    }

    #[test]
    fn orbit_sets_of_e12_up_to_two() {
        // support(Ω, 2, 1) = 2 on E(1,2), so e_{1,2} and h_{1,2} also have action 2
        let t = make_ellipsoid(int(1), int(2)).unwrap();
        let sets = enumerate_orbit_sets(&t, &int(2));
        let names: Vec<String> = sets.iter().map(|s| s.set.to_string()).collect();
        assert_eq!(
            names,
            vec![
                "∅", "e_{0,1}", "e_{0,1}^2", "e_{1,0}", "e_{1,1}", "h_{1,1}", "e_{1,2}", "h_{1,2}"
            ]
        );
        let actions: Vec<Rational> = sets.iter().map(|s| s.action.clone()).collect();
        assert_eq!(actions, vec![int(0), int(1), int(2), int(2), int(2), int(2), int(2), int(2)]);
    }
}
