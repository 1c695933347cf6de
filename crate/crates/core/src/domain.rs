//! Convex toric domains and their moment regions.
//!
//! A convex toric domain `X_Ω` is described by the region
//! `Ω = {0 ≤ x ≤ a, 0 ≤ y ≤ f(x)}` with `f` nonincreasing and concave. We only
//! store piecewise-linear `f` with exact rational breakpoints; ellipsoids,
//! polydisks and balls are exactly polygons, and smooth profiles enter through
//! [`polygonalize`] with an explicit inner/outer bracket.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, min_rat, parse_rational, Rational};

/// Breakpoints `(x_i, f(x_i))` of a concave nonincreasing profile.
///
/// Normalized at construction: duplicate points and collinear interior points
/// are dropped, so consecutive edge slopes are strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ToricProfile {
    points: Vec<(Rational, Rational)>,
}

impl ToricProfile {
    pub fn new(points: Vec<(Rational, Rational)>) -> Result<Self> {
        let mut pts: Vec<(Rational, Rational)> = Vec::with_capacity(points.len());
        for (x, y) in points {
            if let Some((px, py)) = pts.last() {
                if *px == x {
                    if *py == y {
                        continue;
                    }
                    return Err(Error::InvalidProfile(format!(
                        "two breakpoints share x = {} with different heights",
                        format_rational(&x)
                    )));
                }
                if x < *px {
                    return Err(Error::InvalidProfile(
                        "breakpoint x coordinates must increase".into(),
                    ));
                }
            }
            pts.push((x, y));
        }
        if pts.len() < 2 {
            return Err(Error::InvalidProfile(
                "a profile needs at least two distinct breakpoints".into(),
            ));
        }
        if !pts[0].0.is_zero() {
            return Err(Error::InvalidProfile("first breakpoint must have x = 0".into()));
        }
        if !pts[0].1.is_positive() {
            return Err(Error::InvalidProfile("f(0) must be positive".into()));
        }
        if pts[pts.len() - 1].1.is_negative() {
            return Err(Error::InvalidProfile("f(a) must be nonnegative".into()));
        }

        let slope = |a: &(Rational, Rational), b: &(Rational, Rational)| {
            (&b.1 - &a.1) / (&b.0 - &a.0)
        };
        let mut out: Vec<(Rational, Rational)> = vec![pts[0].clone()];
        for p in pts.into_iter().skip(1) {
            while out.len() >= 2 {
                let n = out.len();
                if slope(&out[n - 2], &out[n - 1]) == slope(&out[n - 1], &p) {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        let mut prev: Option<Rational> = None;
        for w in out.windows(2) {
            let s = slope(&w[0], &w[1]);
            if s.is_positive() {
                return Err(Error::InvalidProfile("profile must be nonincreasing".into()));
            }
            if let Some(ps) = &prev {
                if s >= *ps {
                    return Err(Error::InvalidProfile("profile must be concave".into()));
                }
            }
            prev = Some(s);
        }
        Ok(Self { points: out })
    }

    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    /// The x-intercept `a`.
    pub fn width(&self) -> &Rational {
        &self.points[self.points.len() - 1].0
    }

    /// The y-intercept `f(0)`.
    pub fn height(&self) -> &Rational {
        &self.points[0].1
    }

    /// `f(a)`; positive when the region has a vertical right side.
    pub fn end_height(&self) -> &Rational {
        &self.points[self.points.len() - 1].1
    }

    /// `f(x)` for `0 ≤ x ≤ a`, `None` outside.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        if x.is_negative() || x > self.width() {
            return None;
        }
        for w in self.points.windows(2) {
            let ((x0, y0), (x1, y1)) = (&w[0], &w[1]);
            if x <= x1 {
                return Some(y0 + (y1 - y0) * (x - x0) / (x1 - x0));
            }
        }
        Some(self.end_height().clone())
    }

    /// Primitive outward normals `(p, q)` with `p, q ≥ 0` of every facet of Ω
    /// not lying on a coordinate axis, including `(1,0)` for the vertical side
    /// `x = a` and `(0,1)` for a horizontal top edge.
    pub fn facet_normals(&self) -> Vec<(BigInt, BigInt)> {
        let mut out = vec![(BigInt::one(), BigInt::zero())];
        for w in self.points.windows(2) {
            let dx = &w[1].0 - &w[0].0;
            let dy = &w[0].1 - &w[1].1;
            // normal (dy, dx) scaled to a primitive integer vector
            let s = dy / dx;
            let (n, d) = (s.numer().clone(), s.denom().clone());
            out.push((n, d));
        }
        out.sort();
        out.dedup();
        out
    }
}

/// How a domain was specified. Only informs rendering and reports; every
/// computation uses the profile.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Provenance {
    Ellipsoid { a: Rational, b: Rational },
    Polydisk { a: Rational, b: Rational },
    Ball { r: Rational },
    Polygon,
    PolygonalizedSmooth,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConvexToricDomain {
    profile: ToricProfile,
    provenance: Provenance,
}

fn require_positive(name: &str, v: &Rational) -> Result<()> {
    if v.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} must be positive, got {}",
            format_rational(v)
        )))
    }
}

/// The ellipsoid `E(a,b)`: Ω is the triangle `(0,0),(a,0),(0,b)`.
pub fn make_ellipsoid(a: Rational, b: Rational) -> Result<ConvexToricDomain> {
    require_positive("a", &a)?;
    require_positive("b", &b)?;
    let profile = ToricProfile::new(vec![(Rational::zero(), b.clone()), (a.clone(), Rational::zero())])?;
    Ok(ConvexToricDomain { profile, provenance: Provenance::Ellipsoid { a, b } })
}

/// The polydisk `P(a,b) = B²(a) × B²(b)`: Ω is the rectangle `[0,a]×[0,b]`.
pub fn make_polydisk(a: Rational, b: Rational) -> Result<ConvexToricDomain> {
    require_positive("a", &a)?;
    require_positive("b", &b)?;
    let profile = ToricProfile::new(vec![(Rational::zero(), b.clone()), (a.clone(), b.clone())])?;
    Ok(ConvexToricDomain { profile, provenance: Provenance::Polydisk { a, b } })
}

/// The ball `B⁴(r) = E(r,r)`.
pub fn make_ball(r: Rational) -> Result<ConvexToricDomain> {
    require_positive("r", &r)?;
    let profile = ToricProfile::new(vec![(Rational::zero(), r.clone()), (r.clone(), Rational::zero())])?;
    Ok(ConvexToricDomain { profile, provenance: Provenance::Ball { r } })
}

pub fn make_polygon(breakpoints: Vec<(Rational, Rational)>) -> Result<ConvexToricDomain> {
    Ok(ConvexToricDomain {
        profile: ToricProfile::new(breakpoints)?,
        provenance: Provenance::Polygon,
    })
}

impl ConvexToricDomain {
    pub fn from_profile(profile: ToricProfile, provenance: Provenance) -> Self {
        Self { profile, provenance }
    }

    pub fn profile(&self) -> &ToricProfile {
        &self.profile
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// `a`, the x-intercept.
    pub fn a(&self) -> &Rational {
        self.profile.width()
    }

    /// `f(0)`, the y-intercept.
    pub fn f0(&self) -> &Rational {
        self.profile.height()
    }

    /// `max_{(x,y) ∈ Ω} p·x + q·y`.
    pub fn support(&self, p: u64, q: u64) -> Result<Rational> {
        if p == 0 && q == 0 {
            return Err(Error::InvalidParameter("support direction (0,0)".into()));
        }
        Ok(self.support_unchecked(&BigInt::from(p), &BigInt::from(q)))
    }

    /// Support value for a nonnegative direction; `(0,0)` yields 0.
    pub(crate) fn support_unchecked(&self, p: &BigInt, q: &BigInt) -> Rational {
        let p = Rational::from_integer(p.clone());
        let q = Rational::from_integer(q.clone());
        // the origin is in Ω, but every breakpoint dominates it for p, q ≥ 0
        self.profile
            .points
            .iter()
            .map(|(x, y)| &p * x + &q * y)
            .max()
            .expect("profile has breakpoints")
    }

    /// Every breakpoint multiplied by `λ`.
    pub fn scale(&self, lambda: &Rational) -> Result<ConvexToricDomain> {
        require_positive("scale factor", lambda)?;
        let points = self
            .profile
            .points
            .iter()
            .map(|(x, y)| (x * lambda, y * lambda))
            .collect();
        let provenance = match &self.provenance {
            Provenance::Ellipsoid { a, b } => Provenance::Ellipsoid { a: a * lambda, b: b * lambda },
            Provenance::Polydisk { a, b } => Provenance::Polydisk { a: a * lambda, b: b * lambda },
            Provenance::Ball { r } => Provenance::Ball { r: r * lambda },
            other => other.clone(),
        };
        Ok(ConvexToricDomain { profile: ToricProfile::new(points)?, provenance })
    }

    /// The mirror image across the diagonal `x = y`, i.e. the domain with
    /// `z₁` and `z₂` exchanged. Always again a convex toric domain.
    pub fn reflect(&self) -> ConvexToricDomain {
        let pts = &self.profile.points;
        let mut out = Vec::with_capacity(pts.len() + 2);
        let (a, fa) = &pts[pts.len() - 1];
        if fa.is_positive() {
            out.push((Rational::zero(), a.clone()));
        }
        out.extend(pts.iter().rev().map(|(x, y)| (y.clone(), x.clone())));
        // a horizontal top edge becomes a vertical side, which stays implicit
        if out.len() >= 2 && out[out.len() - 2].0 == out[out.len() - 1].0 {
            out.pop();
        }
        let provenance = match &self.provenance {
            Provenance::Ellipsoid { a, b } => Provenance::Ellipsoid { a: b.clone(), b: a.clone() },
            Provenance::Polydisk { a, b } => Provenance::Polydisk { a: b.clone(), b: a.clone() },
            other => other.clone(),
        };
        let profile = ToricProfile::new(out).expect("reflection of a valid profile is valid");
        ConvexToricDomain { profile, provenance }
    }

    /// `Ω₁ ∩ Ω₂`, again a convex toric domain.
    pub fn intersect(&self, other: &ConvexToricDomain) -> ConvexToricDomain {
        let a = min_rat(self.a(), other.a());
        let f = self.profile.clone();
        let g = other.profile.clone();
        let points = lower_envelope_points(&a, |x| {
            min_rat(&f.eval(x).expect("x in range"), &g.eval(x).expect("x in range"))
        }, {
            let mut xs: Vec<Rational> = f.points.iter().chain(g.points.iter()).map(|p| p.0.clone()).collect();
            for e in f.points.windows(2) {
                for h in g.points.windows(2) {
                    if let Some(x) = segment_crossing(&e[0], &e[1], &h[0], &h[1]) {
                        xs.push(x);
                    }
                }
            }
            xs
        });
        ConvexToricDomain {
            profile: ToricProfile::new(points).expect("intersection of valid profiles is valid"),
            provenance: Provenance::Polygon,
        }
    }
}

/// x where the lines through two segments cross, if they are not parallel.
fn segment_crossing(
    p0: &(Rational, Rational),
    p1: &(Rational, Rational),
    q0: &(Rational, Rational),
    q1: &(Rational, Rational),
) -> Option<Rational> {
    let s = (&p1.1 - &p0.1) / (&p1.0 - &p0.0);
    let t = (&q1.1 - &q0.1) / (&q1.0 - &q0.0);
    if s == t {
        return None;
    }
    // p0.y + s (x - p0.x) = q0.y + t (x - q0.x)
    Some((&q0.1 - &p0.1 + &s * &p0.0 - &t * &q0.0) / (s - t))
}

/// Samples a concave piecewise-linear function at every candidate kink in
/// `[0, a]`; the interpolant through these samples is the function itself.
fn lower_envelope_points(
    a: &Rational,
    eval: impl Fn(&Rational) -> Rational,
    mut xs: Vec<Rational>,
) -> Vec<(Rational, Rational)> {
    xs.push(Rational::zero());
    xs.push(a.clone());
    xs.retain(|x| !x.is_negative() && x <= a);
    xs.sort();
    xs.dedup();
    xs.into_iter()
        .map(|x| {
            let y = eval(&x);
            (x, y)
        })
        .collect()
}

/// True iff Ω_inner ⊆ Ω_outer. By convexity it suffices that every breakpoint
/// of the inner profile lies under the outer one.
pub fn contains(inner: &ConvexToricDomain, outer: &ConvexToricDomain) -> bool {
    inner.profile.points.iter().all(|(x, y)| match outer.profile.eval(x) {
        Some(fx) => *y <= fx,
        None => false,
    })
}

/// Smallest `μ` with Ω_inner ⊆ μ·Ω_outer. Inclusion holds iff `μ ≤ 1`; the
/// value is reported as the inclusion witness in certificates.
pub fn inclusion_gauge(inner: &ConvexToricDomain, outer: &ConvexToricDomain) -> Rational {
    let normals = outer.profile.facet_normals();
    let mut extra = vec![(BigInt::zero(), BigInt::one())];
    extra.extend(normals);
    let mut best = Rational::zero();
    for (p, q) in &extra {
        let h = outer.support_unchecked(p, q);
        let ratio = inner.support_unchecked(p, q) / h;
        if ratio > best {
            best = ratio;
        }
    }
    best
}

/// Largest `r` with `B⁴(r) ⊆ X_Ω`, namely `min(a, f(0))`.
pub fn ball_inradius(domain: &ConvexToricDomain) -> Rational {
    min_rat(domain.a(), domain.f0())
}

/// Smallest `r` with `X_Ω ⊆ B⁴(r)`, namely the support value in direction (1,1).
pub fn ball_outradius(domain: &ConvexToricDomain) -> Rational {
    domain.support_unchecked(&BigInt::one(), &BigInt::one())
}

/// A closed interval `[lo, hi]` of ball radii.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadiusInterval {
    #[serde(with = "crate::rational::serde_str")]
    pub lo: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub hi: Rational,
}

/// `[outradius(Ω₁), inradius(Ω₂)]` when nonempty: every `r` in it gives
/// `X_Ω₁ ⊆ B⁴(r) ⊆ X_Ω₂`.
pub fn check_ball_sandwich(
    inner: &ConvexToricDomain,
    outer: &ConvexToricDomain,
) -> Option<RadiusInterval> {
    let lo = ball_outradius(inner);
    let hi = ball_inradius(outer);
    (lo <= hi).then_some(RadiusInterval { lo, hi })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolygonalizeMode {
    Inner,
    Outer,
}

/// A point on a smooth profile, optionally with the derivative `f'(x)` there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileSample {
    pub x: Rational,
    pub y: Rational,
    pub slope: Option<Rational>,
}

impl ProfileSample {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y, slope: None }
    }

    pub fn with_slope(x: Rational, y: Rational, slope: Rational) -> Self {
        Self { x, y, slope: Some(slope) }
    }
}

/// Polygonal approximation of a smooth concave nonincreasing profile.
///
/// `Inner` interpolates the samples (inscribed polygon). `Outer` takes the
/// lower envelope of the tangent lines at samples carrying a slope, clipped to
/// `[0, a]` where `a` is the last sample's x; a missing slope contributes no
/// tangent (use it for vertical tangents such as `f'(a) = -∞`).
pub fn polygonalize(samples: &[ProfileSample], mode: PolygonalizeMode) -> Result<ConvexToricDomain> {
    if samples.len() < 2 {
        return Err(Error::InvalidProfile("need at least two samples".into()));
    }
    let inner = ToricProfile::new(samples.iter().map(|s| (s.x.clone(), s.y.clone())).collect())?;
    let profile = match mode {
        PolygonalizeMode::Inner => inner,
        PolygonalizeMode::Outer => {
            let lines: Vec<(Rational, Rational)> = samples
                .iter()
                .filter_map(|s| s.slope.as_ref().map(|m| (m.clone(), &s.y - m * &s.x)))
                .collect();
            if lines.is_empty() {
                return Err(Error::InvalidProfile("outer mode needs slope data".into()));
            }
            if lines.iter().any(|(m, _)| m.is_positive()) {
                return Err(Error::InvalidProfile("tangent slopes must be nonpositive".into()));
            }
            let a = samples[samples.len() - 1].x.clone();
            let envelope = |x: &Rational| {
                lines
                    .iter()
                    .map(|(m, c)| m * x + c)
                    .min()
                    .expect("nonempty")
            };
            let mut xs = Vec::new();
            for (i, (m1, c1)) in lines.iter().enumerate() {
                for (m2, c2) in &lines[i + 1..] {
                    if m1 != m2 {
                        xs.push((c2 - c1) / (m1 - m2));
                    }
                }
            }
            for s in samples {
                if envelope(&s.x) < s.y {
                    return Err(Error::InvalidProfile(format!(
                        "tangent lines pass below the sample at x = {}; samples are not concave",
                        format_rational(&s.x)
                    )));
                }
            }
            ToricProfile::new(lower_envelope_points(&a, envelope, xs))?
        }
    };
    Ok(ConvexToricDomain { profile, provenance: Provenance::PolygonalizedSmooth })
}

impl fmt::Display for ConvexToricDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.provenance {
            Provenance::Ellipsoid { a, b } => {
                write!(f, "E({},{})", format_rational(a), format_rational(b))
            }
            Provenance::Polydisk { a, b } => {
                write!(f, "P({},{})", format_rational(a), format_rational(b))
            }
            Provenance::Ball { r } => write!(f, "B({})", format_rational(r)),
            Provenance::Polygon | Provenance::PolygonalizedSmooth => {
                write!(f, "polygon[")?;
                for (i, (x, y)) in self.profile.points.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "({},{})", format_rational(x), format_rational(y))?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Wire form of a domain:
/// `{"type":"ellipsoid","a":"1","b":"2"}`, `{"type":"polydisk",...}`,
/// `{"type":"ball","r":"3/2"}` or `{"type":"polygon","breakpoints":[["0","2"],["1","0"]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum DomainSpec {
    Ellipsoid { a: String, b: String },
    Polydisk { a: String, b: String },
    Ball { r: String },
    Polygon { breakpoints: Vec<[String; 2]> },
}

impl DomainSpec {
    pub fn build(&self) -> Result<ConvexToricDomain> {
        match self {
            DomainSpec::Ellipsoid { a, b } => make_ellipsoid(parse_rational(a)?, parse_rational(b)?),
            DomainSpec::Polydisk { a, b } => make_polydisk(parse_rational(a)?, parse_rational(b)?),
            DomainSpec::Ball { r } => make_ball(parse_rational(r)?),
            DomainSpec::Polygon { breakpoints } => {
                let pts = breakpoints
                    .iter()
                    .map(|[x, y]| Ok((parse_rational(x)?, parse_rational(y)?)))
                    .collect::<Result<Vec<_>>>()?;
                make_polygon(pts)
            }
        }
    }

    pub fn parse_json(text: &str) -> Result<ConvexToricDomain> {
        let spec: DomainSpec =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("domain spec: {e}")))?;
        spec.build()
    }

    /// Canonical spec of a domain. Polygonalized domains serialize as polygons.
    pub fn of(domain: &ConvexToricDomain) -> DomainSpec {
        match &domain.provenance {
            Provenance::Ellipsoid { a, b } => DomainSpec::Ellipsoid { a: format_rational(a), b: format_rational(b) },
            Provenance::Polydisk { a, b } => DomainSpec::Polydisk { a: format_rational(a), b: format_rational(b) },
            Provenance::Ball { r } => DomainSpec::Ball { r: format_rational(r) },
            Provenance::Polygon | Provenance::PolygonalizedSmooth => DomainSpec::Polygon {
                breakpoints: domain
                    .profile
                    .points
                    .iter()
                    .map(|(x, y)| [format_rational(x), format_rational(y)])
                    .collect(),
            },
        }
    }
}
