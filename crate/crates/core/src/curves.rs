//! Index, transversality, writhe and adjunction arithmetic for punctured
//! holomorphic curves in a symplectization, in a fixed trivialization `τ`.
//!
//! Conley–Zehnder indices are inputs. Writhes that are only known up to
//! bounds are carried as integer intervals and every operation propagates
//! them conservatively. Counterclockwise twisting counts positively.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EndSign {
    #[serde(alias = "+")]
    Positive,
    #[serde(alias = "-")]
    Negative,
}

fn one() -> u64 {
    1
}

/// A puncture asymptotic to the `d`-fold cover of an orbit whose iterate has
/// Conley–Zehnder index `cz`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EndSpec {
    pub sign: EndSign,
    pub cz: i64,
    #[serde(default = "one")]
    pub covering: u64,
}

impl EndSpec {
    pub fn new(sign: EndSign, cz: i64, covering: u64) -> Result<Self> {
        if covering == 0 {
            return Err(Error::InvalidParameter("covering multiplicity must be at least 1".into()));
        }
        Ok(Self { sign, cz, covering })
    }

    pub fn positive(cz: i64) -> Self {
        Self { sign: EndSign::Positive, cz, covering: 1 }
    }

    pub fn negative(cz: i64) -> Self {
        Self { sign: EndSign::Negative, cz, covering: 1 }
    }
}

/// `ind(u) = -χ(u) + 2 c_τ(u) + Σ CZ_τ(γ⁺) - Σ CZ_τ(γ⁻)`.
pub fn fredholm_index(euler_characteristic: i64, rel_chern: i64, ends: &[EndSpec]) -> i64 {
    let cz: i64 = ends
        .iter()
        .map(|e| match e.sign {
            EndSign::Positive => e.cz,
            EndSign::Negative => -e.cz,
        })
        .sum();
    -euler_characteristic + 2 * rel_chern + cz
}

/// Ends at orbits of even Conley–Zehnder index, i.e. positive hyperbolic.
pub fn even_cz_ends(ends: &[EndSpec]) -> u64 {
    ends.iter().filter(|e| e.cz.is_even()).count() as u64
}

/// `2g - 2 + h⁺ < ind`.
pub fn automatic_transversality(genus: u64, positive_hyperbolic: u64, ind: i64) -> bool {
    2 * genus as i128 - 2 + (positive_hyperbolic as i128) < ind as i128
}

fn ceil_half(n: i64) -> i64 {
    Integer::div_ceil(&n, &2)
}

fn floor_half(n: i64) -> i64 {
    Integer::div_floor(&n, &2)
}

fn check_covering(d: u64) -> Result<i64> {
    if d == 0 {
        return Err(Error::InvalidParameter("covering multiplicity must be at least 1".into()));
    }
    i64::try_from(d).map_err(|_| Error::InvalidParameter("covering multiplicity too large".into()))
}

/// `(max winding, max writhe)` of the braid at a positive end:
/// `wind ≤ ⌊cz/2⌋` and `w ≤ (d-1)·⌊cz/2⌋`.
pub fn positive_end_bounds(cz: i64, d: u64) -> Result<(i64, i64)> {
    let d = check_covering(d)?;
    let wind = floor_half(cz);
    Ok((wind, (d - 1) * wind))
}

/// `(min winding, min writhe)` of the braid at a negative end:
/// `wind ≥ ⌈cz/2⌉` and `w ≥ (d-1)·⌈cz/2⌉`.
pub fn negative_end_bounds(cz: i64, d: u64) -> Result<(i64, i64)> {
    let d = check_covering(d)?;
    let wind = ceil_half(cz);
    Ok((wind, (d - 1) * wind))
}

/// A possibly unbounded closed interval of integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntInterval {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

impl IntInterval {
    pub fn exact(v: i64) -> Self {
        Self { lo: Some(v), hi: Some(v) }
    }

    pub fn at_most(v: i64) -> Self {
        Self { lo: None, hi: Some(v) }
    }

    pub fn at_least(v: i64) -> Self {
        Self { lo: Some(v), hi: None }
    }

    pub fn new(lo: Option<i64>, hi: Option<i64>) -> Result<Self> {
        if let (Some(l), Some(h)) = (lo, hi) {
            if l > h {
                return Err(Error::InvalidInput(format!("empty interval [{l}, {h}]")));
            }
        }
        Ok(Self { lo, hi })
    }

    pub fn value(&self) -> Option<i64> {
        match (self.lo, self.hi) {
            (Some(l), Some(h)) if l == h => Some(l),
            _ => None,
        }
    }

    pub fn scale(self, k: i64) -> Self {
        let (lo, hi) = (self.lo.map(|v| v * k), self.hi.map(|v| v * k));
        if k >= 0 {
            Self { lo, hi }
        } else {
            Self { lo: hi, hi: lo }
        }
    }
}

impl From<i64> for IntInterval {
    fn from(v: i64) -> Self {
        Self::exact(v)
    }
}

impl Add for IntInterval {
    type Output = IntInterval;

    fn add(self, o: IntInterval) -> IntInterval {
        IntInterval { lo: self.lo.zip(o.lo).map(|(a, b)| a + b), hi: self.hi.zip(o.hi).map(|(a, b)| a + b) }
    }
}

impl Neg for IntInterval {
    type Output = IntInterval;

    fn neg(self) -> IntInterval {
        self.scale(-1)
    }
}

impl Sub for IntInterval {
    type Output = IntInterval;

    fn sub(self, o: IntInterval) -> IntInterval {
        self + (-o)
    }
}

impl fmt::Display for IntInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.value() {
            return write!(f, "{v}");
        }
        match self.lo {
            Some(l) => write!(f, "[{l}, ")?,
            None => write!(f, "(-inf, ")?,
        }
        match self.hi {
            Some(h) => write!(f, "{h}]"),
            None => write!(f, "+inf)"),
        }
    }
}

/// `w(ζ ∪ ζ') = w(ζ) + w(ζ') + 2 l(ζ, ζ')`.
pub fn braid_union_writhe(w1: i64, w2: i64, linking: i64) -> i64 {
    w1 + w2 + 2 * linking
}

/// [`braid_union_writhe`] on intervals.
pub fn braid_union_writhe_bounds(w1: IntInterval, w2: IntInterval, linking: IntInterval) -> IntInterval {
    w1 + w2 + linking.scale(2)
}

/// Topological data entering the relative adjunction formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveHomologyData {
    pub euler_characteristic: i64,
    pub rel_chern: i64,
    pub rel_self_intersection: i64,
    #[serde(with = "writhe_serde")]
    pub writhe: IntInterval,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub singularity_count: Option<u64>,
}

mod writhe_serde {
    use super::IntInterval;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Wire {
        Exact(i64),
        Bounds(IntInterval),
    }

    pub fn serialize<S: Serializer>(w: &IntInterval, s: S) -> Result<S::Ok, S::Error> {
        match w.value() {
            Some(v) => Wire::Exact(v).serialize(s),
            None => Wire::Bounds(*w).serialize(s),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<IntInterval, D::Error> {
        match Wire::deserialize(d)? {
            Wire::Exact(v) => Ok(IntInterval::exact(v)),
            Wire::Bounds(b) => IntInterval::new(b.lo, b.hi).map_err(serde::de::Error::custom),
        }
    }
}

fn delta_at(data: &CurveHomologyData, w: i64) -> Rational {
    let num = data.euler_characteristic as i128 + data.rel_self_intersection as i128 + w as i128
        - data.rel_chern as i128;
    Rational::new(BigInt::from(num), BigInt::from(2))
}

/// `δ = (χ + Q_τ + w_τ - c_τ) / 2` for an exactly known writhe. A negative or
/// non-integral value means no embedded curve carries this data.
pub fn adjunction_delta(data: &CurveHomologyData) -> Result<Rational> {
    match data.writhe.value() {
        Some(w) => Ok(delta_at(data, w)),
        None => Err(Error::InvalidInput("writhe is only known as an interval".into())),
    }
}

/// Bounds on `δ` from bounds on the writhe (`δ` is increasing in `w`).
pub fn adjunction_delta_bounds(data: &CurveHomologyData) -> (Option<Rational>, Option<Rational>) {
    (data.writhe.lo.map(|w| delta_at(data, w)), data.writhe.hi.map(|w| delta_at(data, w)))
}

/// Whether the adjunction data rules out an embedded curve: the largest
/// possible `δ` is negative, or the writhe is exact and `δ` is not an integer.
pub fn adjunction_contradiction(data: &CurveHomologyData) -> bool {
    let (_, hi) = adjunction_delta_bounds(data);
    if hi.as_ref().is_some_and(|d| d < &Rational::from_integer(0.into())) {
        return true;
    }
    match adjunction_delta(data) {
        Ok(d) => !d.is_integer(),
        Err(_) => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TraceRelation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

impl fmt::Display for TraceRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TraceRelation::Le => "<=",
            TraceRelation::Ge => ">=",
        })
    }
}

/// One bound in the uniqueness argument: `quantity relation bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub quantity: String,
    pub relation: TraceRelation,
    #[serde(with = "crate::rational::serde_str")]
    pub bound: Rational,
    pub reason: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UniquenessVerdict {
    /// Two distinct such cylinders would force `δ < 0`.
    TwoDistinctCylindersImpossible,
    NotForced,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub cz_top: i64,
    pub cz_bottom: i64,
    pub verdict: UniquenessVerdict,
    pub top_writhe_max: i64,
    pub bottom_writhe_min: i64,
    pub total_writhe_max: i64,
    #[serde(with = "crate::rational::serde_str")]
    pub delta_max: Rational,
    pub trace: Vec<TraceStep>,
}

/// Two distinct index-zero cylinders `u₁, u₂` from a simple orbit with index
/// `cz_top` down to a simple orbit with index `cz_bottom`: bounds the writhe of
/// `u₁ ∪ u₂` at both ends and feeds it into the adjunction formula with
/// `χ = c_τ = Q_τ = 0`.
pub fn two_cylinder_uniqueness(cz_top: i64, cz_bottom: i64) -> UniquenessReport {
    let int = |v: i64| Rational::from_integer(BigInt::from(v));
    let (wind_top, strand_top) = positive_end_bounds(cz_top, 1).expect("d = 1");
    let (wind_bottom, strand_bottom) = negative_end_bounds(cz_bottom, 1).expect("d = 1");
    // two strands each winding at most wind_top link at most wind_top times
    let top = IntInterval::at_most(strand_top);
    let w_top = braid_union_writhe_bounds(top, top, IntInterval::at_most(wind_top));
    let bottom = IntInterval::at_least(strand_bottom);
    let w_bottom = braid_union_writhe_bounds(bottom, bottom, IntInterval::at_least(wind_bottom));
    let total = w_top - w_bottom;
    let top_writhe_max = w_top.hi.expect("bounded above");
    let bottom_writhe_min = w_bottom.lo.expect("bounded below");
    let total_writhe_max = total.hi.expect("bounded above");
    let data = CurveHomologyData {
        euler_characteristic: 0,
        rel_chern: 0,
        rel_self_intersection: 0,
        writhe: total,
        singularity_count: None,
    };
    let delta_max = adjunction_delta_bounds(&data).1.expect("bounded above");

    let le = TraceRelation::Le;
    let ge = TraceRelation::Ge;
    let trace = vec![
        TraceStep {
            quantity: "wind(zeta_c)".into(),
            relation: le,
            bound: int(wind_top),
            reason: format!("positive end, floor({cz_top}/2)"),
        },
        TraceStep {
            quantity: "l(zeta_c^1, zeta_c^2)".into(),
            relation: le,
            bound: int(wind_top),
            reason: "linking of two strands bounded by their winding".into(),
        },
        TraceStep {
            quantity: "w(zeta_c)".into(),
            relation: le,
            bound: int(top_writhe_max),
            reason: format!("{strand_top} + {strand_top} + 2*{wind_top}"),
        },
        TraceStep {
            quantity: "wind(zeta_a)".into(),
            relation: ge,
            bound: int(wind_bottom),
            reason: format!("negative end, ceil({cz_bottom}/2)"),
        },
        TraceStep {
            quantity: "l(zeta_a^1, zeta_a^2)".into(),
            relation: ge,
            bound: int(wind_bottom),
            reason: "linking of two strands bounded by their winding".into(),
        },
        TraceStep {
            quantity: "w(zeta_a)".into(),
            relation: ge,
            bound: int(bottom_writhe_min),
            reason: format!("{strand_bottom} + {strand_bottom} + 2*{wind_bottom}"),
        },
        TraceStep {
            quantity: "w(u1 u u2)".into(),
            relation: le,
            bound: int(total_writhe_max),
            reason: "w(zeta_c) - w(zeta_a)".into(),
        },
        TraceStep {
            quantity: "delta(u1 u u2)".into(),
            relation: le,
            bound: delta_max.clone(),
            reason: "(chi + Q + w - c)/2 with chi = Q = c = 0".into(),
        },
    ];
    let verdict = if delta_max < int(0) {
        UniquenessVerdict::TwoDistinctCylindersImpossible
    } else {
        UniquenessVerdict::NotForced
    };
    UniquenessReport { cz_top, cz_bottom, verdict, top_writhe_max, bottom_writhe_min, total_writhe_max, delta_max, trace }
}

fn default_cz() -> i64 {
    1
}

/// Input of the `curve-check` command. Every section is optional; an empty
/// document runs the uniqueness check with both indices equal to 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveCheckConfig {
    #[serde(default)]
    pub curve: Option<CurveSpec>,
    #[serde(default)]
    pub adjunction: Option<CurveHomologyData>,
    #[serde(default)]
    pub uniqueness: Option<UniquenessSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    #[serde(default)]
    pub genus: u64,
    pub euler_characteristic: i64,
    pub rel_chern: i64,
    pub ends: Vec<EndSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UniquenessSpec {
    #[serde(default = "default_cz")]
    pub cz_top: i64,
    #[serde(default = "default_cz")]
    pub cz_bottom: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndReport {
    #[serde(flatten)]
    pub end: EndSpec,
    pub wind_bound: i64,
    pub writhe_bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveReport {
    pub fredholm_index: i64,
    pub even_cz_ends: u64,
    pub automatic_transversality: bool,
    pub ends: Vec<EndReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjunctionReport {
    #[serde(with = "crate::rational::serde_opt_str")]
    pub delta_min: Option<Rational>,
    #[serde(with = "crate::rational::serde_opt_str")]
    pub delta_max: Option<Rational>,
    pub contradiction: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveCheckReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve: Option<CurveReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adjunction: Option<AdjunctionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub uniqueness: Option<UniquenessReport>,
}

impl CurveCheckReport {
    /// Some check ruled a configuration out.
    pub fn found_contradiction(&self) -> bool {
        self.adjunction.as_ref().is_some_and(|a| a.contradiction)
            || self
                .uniqueness
                .as_ref()
                .is_some_and(|u| u.verdict == UniquenessVerdict::TwoDistinctCylindersImpossible)
    }
}

pub fn curve_check(config: &CurveCheckConfig) -> Result<CurveCheckReport> {
    let curve = match &config.curve {
        None => None,
        Some(spec) => {
            let mut ends = Vec::new();
            for e in &spec.ends {
                let (wind_bound, writhe_bound) = match e.sign {
                    EndSign::Positive => positive_end_bounds(e.cz, e.covering)?,
                    EndSign::Negative => negative_end_bounds(e.cz, e.covering)?,
                };
                ends.push(EndReport { end: *e, wind_bound, writhe_bound });
            }
            let ind = fredholm_index(spec.euler_characteristic, spec.rel_chern, &spec.ends);
            let h = even_cz_ends(&spec.ends);
            Some(CurveReport {
                fredholm_index: ind,
                even_cz_ends: h,
                automatic_transversality: automatic_transversality(spec.genus, h, ind),
                ends,
            })
        }
    };
    let adjunction = config.adjunction.as_ref().map(|d| {
        let (delta_min, delta_max) = adjunction_delta_bounds(d);
        AdjunctionReport { delta_min, delta_max, contradiction: adjunction_contradiction(d) }
    });
    let uniqueness = match (&config.uniqueness, &config.curve, &config.adjunction) {
        (Some(u), _, _) => Some(two_cylinder_uniqueness(u.cz_top, u.cz_bottom)),
        (None, None, None) => Some(two_cylinder_uniqueness(1, 1)),
        _ => None,
    };
    Ok(CurveCheckReport { curve, adjunction, uniqueness })
}

pub fn parse_curve_config(text: &str) -> Result<CurveCheckConfig> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("curve configuration: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn fredholm_examples() {
        assert_eq!(fredholm_index(0, 0, &[EndSpec::positive(1), EndSpec::negative(1)]), 0);
        assert_eq!(fredholm_index(0, 0, &[EndSpec::positive(3), EndSpec::negative(1)]), 2);
        let same = [EndSpec::positive(2), EndSpec::positive(5), EndSpec::negative(5), EndSpec::negative(2)];
        assert_eq!(fredholm_index(0, 0, &same), 0);
        assert_eq!(fredholm_index(2, 1, &[]), 0);
    }

    #[test]
    fn transversality_examples() {
        assert!(automatic_transversality(0, 0, 0));
        assert!(!automatic_transversality(0, 2, 0));
        assert!(automatic_transversality(1, 0, 1));
        assert!(!automatic_transversality(1, 0, 0));
    }

    #[test]
    fn end_bounds() {
        assert_eq!(positive_end_bounds(1, 1).unwrap(), (0, 0));
        assert_eq!(positive_end_bounds(3, 2).unwrap(), (1, 1));
        assert_eq!(positive_end_bounds(0, 1).unwrap(), (0, 0));
        assert_eq!(positive_end_bounds(-1, 3).unwrap(), (-1, -2));
        assert_eq!(negative_end_bounds(1, 1).unwrap(), (1, 0));
        assert_eq!(negative_end_bounds(2, 3).unwrap(), (1, 2));
        assert_eq!(negative_end_bounds(1, 2).unwrap(), (1, 1));
        assert_eq!(negative_end_bounds(-1, 1).unwrap(), (0, 0));
        assert!(positive_end_bounds(1, 0).is_err());
        assert!(negative_end_bounds(1, 0).is_err());
    }

    #[test]
    fn writhe_of_unions() {
        assert_eq!(braid_union_writhe(0, 0, 1), 2);
        assert_eq!(braid_union_writhe(0, 0, 0), 0);
        assert_eq!(braid_union_writhe(1, -1, 0), 0);
        let w = braid_union_writhe_bounds(IntInterval::at_most(0), 1.into(), IntInterval::new(Some(-1), Some(2)).unwrap());
        assert_eq!(w, IntInterval { lo: None, hi: Some(5) });
        assert_eq!(w.to_string(), "(-inf, 5]");
        assert!(IntInterval::new(Some(2), Some(1)).is_err());
    }

    fn data(chi: i64, c: i64, q: i64, w: IntInterval) -> CurveHomologyData {
        CurveHomologyData {
            euler_characteristic: chi,
            rel_chern: c,
            rel_self_intersection: q,
            writhe: w,
            singularity_count: None,
        }
    }

    #[test]
    fn adjunction_examples() {
        assert_eq!(adjunction_delta(&data(0, 0, 0, (-2).into())).unwrap(), int(-1));
        assert_eq!(adjunction_delta(&data(0, 0, 0, 0.into())).unwrap(), int(0));
        assert_eq!(adjunction_delta(&data(2, 1, 1, 0.into())).unwrap(), int(1));
        assert_eq!(adjunction_delta(&data(0, 0, 0, 1.into())).unwrap(), ratio(1, 2));
        assert!(adjunction_contradiction(&data(0, 0, 0, (-2).into())));
        assert!(adjunction_contradiction(&data(0, 0, 0, 1.into())));
        assert!(!adjunction_contradiction(&data(0, 0, 0, 0.into())));
        let bounded = data(0, 0, 0, IntInterval::at_most(-2));
        assert!(adjunction_delta(&bounded).is_err());
        assert_eq!(adjunction_delta_bounds(&bounded), (None, Some(int(-1))));
        assert!(adjunction_contradiction(&bounded));
    }

    #[test]
    fn uniqueness_chain() {
        let r = two_cylinder_uniqueness(1, 1);
        assert_eq!(r.verdict, UniquenessVerdict::TwoDistinctCylindersImpossible);
        assert_eq!((r.top_writhe_max, r.bottom_writhe_min, r.total_writhe_max), (0, 2, -2));
        assert_eq!(r.delta_max, int(-1));
        assert_eq!(r.trace.last().unwrap().bound, int(-1));

        let r = two_cylinder_uniqueness(3, 1);
        assert_eq!(r.top_writhe_max, 2);
        assert_eq!(r.total_writhe_max, 0);
        assert_eq!(r.verdict, UniquenessVerdict::NotForced);

        let r = two_cylinder_uniqueness(1, 3);
        assert_eq!(r.bottom_writhe_min, 4);
        assert_eq!(r.total_writhe_max, -4);
        assert_eq!(r.verdict, UniquenessVerdict::TwoDistinctCylindersImpossible);
    }

    #[test]
    fn config_round_trip() {
        let cfg = parse_curve_config(
            r#"{"curve":{"euler_characteristic":0,"rel_chern":0,
                "ends":[{"sign":"positive","cz":1},{"sign":"-","cz":1,"covering":1}]},
                "adjunction":{"euler_characteristic":0,"rel_chern":0,"rel_self_intersection":0,
                "writhe":{"lo":null,"hi":-2}}}"#,
        )
        .unwrap();
        let r = curve_check(&cfg).unwrap();
        let c = r.curve.as_ref().unwrap();
        assert_eq!(c.fredholm_index, 0);
        assert!(c.automatic_transversality);
        assert!(r.adjunction.as_ref().unwrap().contradiction);
        assert!(r.uniqueness.is_none());
        assert!(r.found_contradiction());

        let empty = curve_check(&parse_curve_config("{}").unwrap()).unwrap();
        assert_eq!(empty.uniqueness.unwrap().delta_max, int(-1));

        assert!(parse_curve_config(r#"{"bogus":1}"#).is_err());
        let bad = parse_curve_config(r#"{"curve":{"euler_characteristic":0,"rel_chern":0,"ends":[{"sign":"positive","cz":1,"covering":0}]}}"#).unwrap();
        assert!(curve_check(&bad).is_err());
    }
}
