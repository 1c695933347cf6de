//! JSON documents emitted by the command line tool and the C interface.
//! Rationals are always strings.

use serde_json::{json, Value};

use crate::curves::CurveCheckReport;
use crate::domain::{ball_inradius, ball_outradius, check_ball_sandwich, ConvexToricDomain, DomainSpec};
use crate::ech::{CapacitySequence, CapacityWitness, ConvexGenerator, GeneratorSummary};
use crate::obstructions::{BreakingReport, CertificateReport};
use crate::orbits::{OrbitFamily, OrbitKind, OrbitSet};
use crate::rational::{format_rational, Rational};

fn rat(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn kind(k: OrbitKind) -> &'static str {
    match k {
        OrbitKind::Elliptic => "e",
        OrbitKind::Hyperbolic => "h",
    }
}

pub fn domain(d: &ConvexToricDomain) -> Value {
    serde_json::to_value(DomainSpec::of(d)).expect("domain specs serialize")
}

pub fn orbit_set(s: &OrbitSet) -> Value {
    let entries: Vec<Value> = s
        .entries()
        .iter()
        .map(|(l, m)| json!({"p": l.p(), "q": l.q(), "kind": kind(l.kind()), "m": m}))
        .collect();
    json!({"display": s.to_string(), "entries": entries})
}

pub fn generator(g: &ConvexGenerator) -> Value {
    serde_json::to_value(g).expect("generators serialize")
}

pub fn capacities(seq: &CapacitySequence, witnesses: Option<&[CapacityWitness]>) -> Value {
    let mut v = json!({
        "domain": domain(&seq.domain),
        "capacities": seq.values.iter().map(rat).collect::<Vec<_>>(),
    });
    if let Some(ws) = witnesses {
        v["witnesses"] = ws
            .iter()
            .map(|w| {
                json!({
                    "k": w.k,
                    "value": rat(&w.value),
                    "generators": w.minimizers.iter().map(generator).collect::<Vec<_>>(),
                })
            })
            .collect();
    }
    v
}

pub fn orbit_families(d: &ConvexToricDomain, bound: &Rational, fams: &[OrbitFamily]) -> Value {
    let rows: Vec<Value> = fams
        .iter()
        .map(|f| {
            json!({
                "label": f.label.to_string(),
                "p": f.label.p(),
                "q": f.label.q(),
                "kind": kind(f.label.kind()),
                "action": rat(&f.action),
            })
        })
        .collect();
    json!({"domain": domain(d), "action_bound": rat(bound), "families": rows})
}

pub fn generators(d: &ConvexToricDomain, budget: &Rational, gens: &[GeneratorSummary]) -> Value {
    let rows: Vec<Value> = gens
        .iter()
        .map(|g| {
            json!({
                "edges": generator(&g.generator)["edges"].clone(),
                "orbit_set": g.generator.to_orbit_set().to_string(),
                "action": rat(&g.action),
                "ech_index": g.ech_index,
            })
        })
        .collect();
    json!({"domain": domain(d), "budget": rat(budget), "generators": rows})
}

pub fn index(d: &ConvexToricDomain, g: &ConvexGenerator) -> Value {
    json!({
        "domain": domain(d),
        "generator": generator(g),
        "orbit_set": orbit_set(&g.to_orbit_set()),
        "lattice_count": g.lattice_count(),
        "ech_index": g.ech_index(),
        "action": rat(&g.action(d)),
    })
}

pub fn check_embed(
    inner: &ConvexToricDomain,
    outer: &ConvexToricDomain,
    ci: &[Rational],
    co: &[Rational],
    obstructed_at: Option<u64>,
) -> Value {
    json!({
        "inner": domain(inner),
        "outer": domain(outer),
        "k_max": ci.len() - 1,
        "obstructed_at": obstructed_at,
        "capacities_inner": ci.iter().map(rat).collect::<Vec<_>>(),
        "capacities_outer": co.iter().map(rat).collect::<Vec<_>>(),
    })
}

pub fn certificate(inner: &ConvexToricDomain, outer: &ConvexToricDomain, r: &CertificateReport) -> Value {
    let mut v = serde_json::to_value(r).expect("reports serialize");
    v["inner"] = domain(inner);
    v["outer"] = domain(outer);
    v
}

pub fn ball_radii(d: &ConvexToricDomain) -> Value {
    json!({
        "domain": domain(d),
        "inradius": rat(&ball_inradius(d)),
        "outradius": rat(&ball_outradius(d)),
    })
}

pub fn ball_sandwich(inner: &ConvexToricDomain, outer: &ConvexToricDomain) -> Value {
    json!({
        "inner": domain(inner),
        "outer": domain(outer),
        "outradius_inner": rat(&ball_outradius(inner)),
        "inradius_outer": rat(&ball_inradius(outer)),
        "interval": check_ball_sandwich(inner, outer),
    })
}

pub fn breaking(inner: &ConvexToricDomain, outer: &ConvexToricDomain, r: &BreakingReport) -> Value {
    let candidates: Vec<Value> = r
        .candidates
        .iter()
        .map(|c| {
            json!({
                "orbit_set": orbit_set(&c.set),
                "action": rat(&c.action),
                "ech_index": c.ech_index,
                "status": c.status,
            })
        })
        .collect();
    let audit: Vec<Value> = r
        .index_two_audit
        .iter()
        .map(|a| json!({"orbit_set": orbit_set(&a.set), "action": rat(&a.action), "in_window": a.in_window}))
        .collect();
    json!({
        "inner": domain(inner),
        "outer": domain(outer),
        "window": [rat(&r.window.0), rat(&r.window.1)],
        "outer_x_intercept": rat(&r.outer_x_intercept),
        "window_uses_x_intercept": r.window_uses_x_intercept,
        "candidates": candidates,
        "survivors": r.survivors.iter().map(orbit_set).collect::<Vec<_>>(),
        "hypothesis_held": r.hypothesis_held,
        "lemma_violations": r.lemma_violations.iter().map(orbit_set).collect::<Vec<_>>(),
        "index_two_audit": audit,
    })
}

pub fn curve_check(r: &CurveCheckReport) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

/// Compact single-line rendering, or two-space indented when `pretty`.
pub fn render(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("values render")
    } else {
        serde_json::to_string(v).expect("values render")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::make_ellipsoid;
    use crate::ech::capacities as caps;
    use crate::rational::int;

    #[test]
    fn capacity_document() {
        let d = make_ellipsoid(int(1), int(2)).unwrap();
        let v = capacities(&caps(&d, 3), None);
        assert_eq!(
            render(&v, false),
            r#"{"capacities":["0","1","2","2"],"domain":{"a":"1","b":"2","type":"ellipsoid"}}"#
        );
    }

    #[test]
    fn orbit_set_document() {
        let g = ConvexGenerator::from_orbit_set(&OrbitSet::empty());
        assert_eq!(generator(&g), json!({"edges": []}));
        let d = make_ellipsoid(int(1), int(2)).unwrap();
        let v = index(&d, &g);
        assert_eq!(v["ech_index"], 0);
        assert_eq!(v["orbit_set"]["display"], "∅");
    }
}
