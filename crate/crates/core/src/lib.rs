//! ECH capacities of convex toric domains in ℂ² and the decision procedures
//! built on them: embedding obstructions, loop noncontractibility
//! certificates, breaking analysis and curve arithmetic.
//!
//! ```
//! use toric_ech::{capacities, make_ellipsoid, int};
//!
//! let e = make_ellipsoid(int(1), int(2)).unwrap();
//! let c = capacities(&e, 5);
//! assert_eq!(c.values, vec![int(0), int(1), int(2), int(2), int(3), int(3)]);
//! ```

pub mod cli;
pub mod curves;
pub mod domain;
pub mod ech;
pub mod error;
pub mod json;
pub mod obstructions;
pub mod orbits;
pub mod rational;
mod search;
pub mod svg;

pub use curves::{
    adjunction_delta, automatic_transversality, braid_union_writhe, fredholm_index, negative_end_bounds,
    positive_end_bounds, two_cylinder_uniqueness, CurveHomologyData, EndSign, EndSpec,
};
pub use domain::{
    ball_inradius, ball_outradius, check_ball_sandwich, contains, make_ball, make_ellipsoid, make_polydisk,
    make_polygon, polygonalize, ConvexToricDomain, DomainSpec, ToricProfile,
};
pub use ech::{
    capacities, capacity, capacity_witnesses, classify_low_index, enumerate_generators, CapacitySequence,
    ConvexGenerator, Edge, EdgeLabel,
};
pub use error::{Error, Result};
pub use obstructions::{
    breaking_analysis, ellipsoid_certificate, embedding_obstruction, noncontractibility_certificate,
    BreakingReport, CertificateReport, Verdict,
};
pub use orbits::{enumerate_orbit_families, enumerate_orbit_sets, OrbitFamilyLabel, OrbitKind, OrbitSet};
pub use rational::{int, parse_rational, ratio, Rational};
