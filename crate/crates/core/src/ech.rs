//! Convex generators, their ECH index and action, and ECH capacities.
//!
//! A convex generator is a concave lattice path from the y-axis to the
//! x-axis whose edges carry an `e`/`h` label. The edge of direction `(p,q)`
//! and multiplicity `m` has displacement `m·(q,-p)` and encodes
//! `e_{p,q}^m` (label `e`) or `e_{p,q}^{m-1} h_{p,q}` (label `h`). The ECH
//! index is
//!
//! ```text
//! I(Λ) = 2 (L(Λ) - 1) - h(Λ)
//! ```
//!
//! where `L` counts lattice points enclosed by the path and the axes (boundary
//! included) and `h` is the number of `h`-labeled edges. The action is
//! `Σ m·support(Ω, q, p)`.
//!
//! `c_k(X_Ω)` is the least action over generators of index `2k`. The search
//! enumerates unlabeled paths and accounts for every labeling analytically: a
//! path with `n` non-axis edges reaches exactly the indices `2(L-1) - j` for
//! `0 ≤ j ≤ n`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::domain::ConvexToricDomain;
use crate::error::{Error, Result};
use crate::orbits::{OrbitFamilyLabel, OrbitKind, OrbitSet};
use crate::rational::{min_rat, Rational};
use crate::search::{fits_i128, slope_order, ActionScalar, Direction, ScaledDomain, ShapeSearch};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeLabel {
    #[serde(rename = "e")]
    E,
    #[serde(rename = "h")]
    H,
}

/// One edge of a convex generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub p: u64,
    pub q: u64,
    pub m: u64,
    pub label: EdgeLabel,
}

impl Edge {
    pub fn new(p: u64, q: u64, m: u64, label: EdgeLabel) -> Self {
        Self { p, q, m, label }
    }

    fn is_axis(&self) -> bool {
        self.p == 0 || self.q == 0
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GeneratorWire", into = "GeneratorWire")]
pub struct ConvexGenerator {
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorWire {
    edges: Vec<Edge>,
}

impl TryFrom<GeneratorWire> for ConvexGenerator {
    type Error = Error;

    fn try_from(w: GeneratorWire) -> Result<Self> {
        ConvexGenerator::new(w.edges)
    }
}

impl From<ConvexGenerator> for GeneratorWire {
    fn from(g: ConvexGenerator) -> Self {
        GeneratorWire { edges: g.edges }
    }
}

impl ConvexGenerator {
    /// Validates and sorts edges into path order.
    pub fn new(mut edges: Vec<Edge>) -> Result<Self> {
        for e in &edges {
            if e.p == 0 && e.q == 0 {
                return Err(Error::InvalidInput("edge direction (0,0)".into()));
            }
            if e.p.gcd(&e.q) != 1 {
                return Err(Error::InvalidInput(format!("edge ({},{}) is not primitive", e.p, e.q)));
            }
            if e.m == 0 {
                return Err(Error::InvalidInput("edge multiplicity must be at least 1".into()));
            }
            if e.is_axis() && e.label == EdgeLabel::H {
                return Err(Error::InvalidInput(format!(
                    "axis edge ({},{}) cannot be labeled h",
                    e.p, e.q
                )));
            }
        }
        edges.sort_by(|a, b| slope_order((a.p, a.q), (b.p, b.q)));
        if edges.windows(2).any(|w| (w[0].p, w[0].q) == (w[1].p, w[1].q)) {
            return Err(Error::InvalidInput("repeated edge direction".into()));
        }
        Ok(Self { edges })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// One edge per direction with the total multiplicity; `h` iff the
    /// hyperbolic orbit is present.
    pub fn from_orbit_set(set: &OrbitSet) -> Self {
        let mut by_dir: BTreeMap<(u64, u64), (u64, bool)> = BTreeMap::new();
        for (label, &m) in set.entries() {
            let slot = by_dir.entry((label.p(), label.q())).or_insert((0, false));
            slot.0 += m;
            if label.kind() == OrbitKind::Hyperbolic {
                slot.1 = true;
            }
        }
        let edges = by_dir
            .into_iter()
            .map(|((p, q), (m, hyp))| Edge::new(p, q, m, if hyp { EdgeLabel::H } else { EdgeLabel::E }))
            .collect();
        Self::new(edges).expect("orbit sets map to valid generators")
    }

    pub fn to_orbit_set(&self) -> OrbitSet {
        let mut entries = Vec::new();
        for e in &self.edges {
            let ell = OrbitFamilyLabel::elliptic(e.p, e.q).expect("validated edge");
            match e.label {
                EdgeLabel::E => entries.push((ell, e.m)),
                EdgeLabel::H => {
                    entries.push((ell, e.m - 1));
                    entries.push((OrbitFamilyLabel::hyperbolic(e.p, e.q).expect("validated edge"), 1));
                }
            }
        }
        OrbitSet::new(entries).expect("generators map to valid orbit sets")
    }

    /// `(X, Y)`: the path runs from `(0, Y)` to `(X, 0)`.
    pub fn intercepts(&self) -> (u64, u64) {
        let x = self.edges.iter().map(|e| e.m * e.q).sum();
        let y = self.edges.iter().map(|e| e.m * e.p).sum();
        (x, y)
    }

    /// Path vertices from `(0, Y)` to `(X, 0)`.
    pub fn vertices(&self) -> Vec<(u64, u64)> {
        let (_, y) = self.intercepts();
        let mut out = vec![(0, y)];
        let (mut cx, mut cy) = (0u64, y);
        for e in &self.edges {
            cx += e.m * e.q;
            cy -= e.m * e.p;
            out.push((cx, cy));
        }
        out
    }

    pub fn hyperbolic_edges(&self) -> usize {
        self.edges.iter().filter(|e| e.label == EdgeLabel::H).count()
    }

    /// Lattice points in the closed region bounded by the path and the axes,
    /// summed column by column: `Σ_{x=0}^{X} (⌊height(x)⌋ + 1)`.
    pub fn lattice_count(&self) -> u64 {
        let (_, y_start) = self.intercepts();
        // column 0 has height Y (a leading vertical edge cannot occur)
        let mut total = y_start + 1;
        let mut y0 = y_start;
        for e in &self.edges {
            let width = e.m * e.q;
            // the t-th column past the edge's start has height y0 - p·t/q
            for t in 1..=width {
                let drop = (e.p * t).div_ceil(e.q);
                total += y0 - drop + 1;
            }
            y0 -= e.m * e.p;
        }
        total
    }

    pub fn ech_index(&self) -> i64 {
        2 * (self.lattice_count() as i64 - 1) - self.hyperbolic_edges() as i64
    }

    pub fn action(&self, domain: &ConvexToricDomain) -> Rational {
        self.edges
            .iter()
            .map(|e| {
                domain.support_unchecked(&BigInt::from(e.q), &BigInt::from(e.p))
                    * Rational::from_integer(BigInt::from(e.m))
            })
            .fold(Rational::zero(), |a, b| a + b)
    }
}

impl fmt::Display for ConvexGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            return write!(f, "[]");
        }
        write!(f, "[")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let l = match e.label {
                EdgeLabel::E => 'e',
                EdgeLabel::H => 'h',
            };
            write!(f, "({},{})x{}{}", e.p, e.q, e.m, l)?;
        }
        write!(f, "]")
    }
}

/// A generator with its index and action on a particular domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSummary {
    pub generator: ConvexGenerator,
    pub action: Rational,
    pub ech_index: i64,
}

fn canonical_sort(v: &mut [GeneratorSummary]) {
    v.sort_by(|x, y| {
        x.action
            .cmp(&y.action)
            .then(x.ech_index.cmp(&y.ech_index))
            .then_with(|| x.generator.edges.cmp(&y.generator.edges))
    });
}

/// Every labeling of an unlabeled path that has exactly `h_count` h-edges
/// (all labelings when `h_count` is `None`).
fn labelings(shape: &[(u64, u64, u64)], h_count: Option<usize>) -> Vec<ConvexGenerator> {
    let non_axis: Vec<usize> = (0..shape.len()).filter(|&i| shape[i].0 > 0 && shape[i].1 > 0).collect();
    let n = non_axis.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if let Some(h) = h_count {
            if mask.count_ones() as usize != h {
                continue;
            }
        }
        let mut edges: Vec<Edge> = shape.iter().map(|&(p, q, m)| Edge::new(p, q, m, EdgeLabel::E)).collect();
        for (bit, &i) in non_axis.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                edges[i].label = EdgeLabel::H;
            }
        }
        out.push(ConvexGenerator { edges });
    }
    out
}

/// Precomputed search inputs for a domain and a budget.
struct Prepared<T> {
    scaled: ScaledDomain,
    dirs: Vec<Direction<T>>,
    budget: T,
}

fn prepare<T: ActionScalar>(scaled: ScaledDomain, budget: &BigInt) -> Prepared<T> {
    let dirs = scaled
        .directions(budget)
        .into_iter()
        .map(|(p, q, s)| Direction { p, q, action: T::from_bigint(&s) })
        .collect();
    Prepared { scaled, dirs, budget: T::from_bigint(budget) }
}

/// All labeled generators with action at most `budget`, canonically sorted
/// by (action, index, edges).
pub fn enumerate_generators(domain: &ConvexToricDomain, budget: &Rational) -> Vec<GeneratorSummary> {
    if budget < &Rational::zero() {
        return Vec::new();
    }
    let scaled = ScaledDomain::new(domain);
    let b = scaled.scale_budget(budget);
    let mut out = if fits_i128(&b) {
        enumerate_with::<i128>(prepare(scaled, &b))
    } else {
        enumerate_with::<BigInt>(prepare(scaled, &b))
    };
    canonical_sort(&mut out);
    out
}

fn enumerate_with<T: ActionScalar + Into<BigInt>>(prep: Prepared<T>) -> Vec<GeneratorSummary> {
    let search = ShapeSearch { dirs: &prep.dirs, budget: Some(prep.budget.clone()), max_min_index: None };
    let dirs = &prep.dirs;
    let scaled = &prep.scaled;
    search.run(
        Vec::new,
        |acc: &mut Vec<GeneratorSummary>, view| {
            let shape: Vec<(u64, u64, u64)> =
                view.edges.iter().map(|&(d, m)| (dirs[d].p, dirs[d].q, m)).collect();
            let action = scaled.unscale(&view.action.clone().into());
            let l = view.stats.lattice_count() as i64;
            for g in labelings(&shape, None) {
                let ech_index = 2 * (l - 1) - g.hyperbolic_edges() as i64;
                acc.push(GeneratorSummary { generator: g, action: action.clone(), ech_index });
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )
}

/// `c_0, …, c_K` of a domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapacitySequence {
    pub domain: ConvexToricDomain,
    pub values: Vec<Rational>,
}

/// `c_k` together with every minimizing generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapacityWitness {
    pub k: u64,
    pub value: Rational,
    pub minimizers: Vec<ConvexGenerator>,
}

/// Per-index best action and the unlabeled shapes attaining it.
#[derive(Clone)]
struct Best<T> {
    value: Vec<Option<T>>,
    shapes: Vec<Vec<Vec<(u64, u64, u64)>>>,
}

impl<T: ActionScalar> Best<T> {
    fn new(k_max: usize) -> Self {
        Self { value: vec![None; k_max + 1], shapes: vec![Vec::new(); k_max + 1] }
    }

    fn offer(&mut self, k: usize, action: &T, shape: impl FnOnce() -> Vec<(u64, u64, u64)>, keep: bool) {
        match &self.value[k] {
            Some(v) if action > v => {}
            Some(v) if action == v => {
                if keep {
                    self.shapes[k].push(shape());
                }
            }
            _ => {
                self.value[k] = Some(action.clone());
                self.shapes[k].clear();
                if keep {
                    self.shapes[k].push(shape());
                }
            }
        }
    }

    fn merge(mut self, other: Self) -> Self {
        for k in 0..self.value.len() {
            let take = match (&self.value[k], &other.value[k]) {
                (_, None) => continue,
                (None, Some(_)) => std::cmp::Ordering::Greater,
                (Some(a), Some(b)) => a.cmp(b),
            };
            match take {
                std::cmp::Ordering::Greater => {
                    self.value[k] = other.value[k].clone();
                    self.shapes[k] = other.shapes[k].clone();
                }
                std::cmp::Ordering::Equal => self.shapes[k].extend(other.shapes[k].iter().cloned()),
                std::cmp::Ordering::Less => {}
            }
        }
        self
    }
}

/// Index-`2k` minima for every `k ≤ k_max` among generators with action at
/// most `budget` (scaled).
fn best_within<T: ActionScalar>(prep: &Prepared<T>, k_max: u64, keep_shapes: bool) -> Best<T> {
    let search = ShapeSearch {
        dirs: &prep.dirs,
        budget: Some(prep.budget.clone()),
        max_min_index: Some(2 * k_max as i64),
    };
    let dirs = &prep.dirs;
    let km = k_max as usize;
    search.run(
        || Best::new(km),
        |acc: &mut Best<T>, view| {
            let l = view.stats.lattice_count() as i64;
            let n = view.stats.non_axis_edges as i64;
            // reachable k: L-1-n/2 ≤ k ≤ L-1
            let hi = (l - 1).min(k_max as i64);
            let lo = (l - 1 - n / 2).max(0);
            for k in lo..=hi {
                let shape = || view.edges.iter().map(|&(d, m)| (dirs[d].p, dirs[d].q, m)).collect();
                acc.offer(k as usize, view.action, shape, keep_shapes);
            }
        },
        Best::merge,
    )
}

/// Unlabeled path as `(p, q, m)` edges.
type Shape = Vec<(u64, u64, u64)>;

/// Iterative deepening over action budgets: start at `min(a, f(0))`, double,
/// and stop at the first budget under which every index `2k`, `k ≤ k_max`, is
/// realized. The cap `k_max·min(a, f(0))` is always sufficient since `k`
/// parallel copies of the shorter axis edge have index `2k`.
fn deepen(domain: &ConvexToricDomain, k_max: u64, keep_shapes: bool) -> (Vec<Rational>, Vec<Vec<Shape>>) {
    let unit = min_rat(domain.a(), domain.f0());
    let cap = &unit * Rational::from_integer(BigInt::from(k_max.max(1)));
    let mut budget = unit.clone();
    loop {
        if budget > cap {
            budget = cap.clone();
        }
        let scaled = ScaledDomain::new(domain);
        let b = scaled.scale_budget(&budget);
        let (vals, shapes) = if fits_i128(&b) {
            let prep = prepare::<i128>(scaled, &b);
            let best = best_within(&prep, k_max, keep_shapes);
            (
                best.value.iter().map(|v| v.map(|v| prep.scaled.unscale(&BigInt::from(v)))).collect::<Vec<_>>(),
                best.shapes,
            )
        } else {
            let prep = prepare::<BigInt>(scaled, &b);
            let best = best_within(&prep, k_max, keep_shapes);
            (
                best.value.iter().map(|v| v.as_ref().map(|v| prep.scaled.unscale(v))).collect::<Vec<_>>(),
                best.shapes,
            )
        };
        if vals.iter().all(Option::is_some) {
            return (vals.into_iter().map(Option::unwrap).collect(), shapes);
        }
        assert!(budget < cap, "index-2k generators always exist under the cap");
        budget *= Rational::from_integer(BigInt::from(2));
    }
}

/// `c_k(X_Ω) = min { A(Λ) : I(Λ) = 2k }`.
pub fn capacity(domain: &ConvexToricDomain, k: u64) -> Rational {
    if k == 0 {
        return Rational::zero();
    }
    let (vals, _) = deepen(domain, k, false);
    vals[k as usize].clone()
}

/// `c_k` and all minimizing generators (every minimizing path with every
/// labeling of index exactly `2k`).
pub fn capacity_witnesses(domain: &ConvexToricDomain, k: u64) -> CapacityWitness {
    let (vals, shapes) = deepen(domain, k, true);
    witness_from(k, &vals, &shapes)
}

fn witness_from(k: u64, vals: &[Rational], shapes: &[Vec<Shape>]) -> CapacityWitness {
    let mut minimizers = Vec::new();
    for shape in &shapes[k as usize] {
        let probe = ConvexGenerator {
            edges: shape.iter().map(|&(p, q, m)| Edge::new(p, q, m, EdgeLabel::E)).collect(),
        };
        let l = probe.lattice_count();
        let h = 2 * (l - 1) - 2 * k;
        minimizers.extend(labelings(shape, Some(h as usize)));
    }
    minimizers.sort_by(|a, b| a.edges.cmp(&b.edges));
    minimizers.dedup();
    CapacityWitness { k, value: vals[k as usize].clone(), minimizers }
}

/// `c_0 … c_K` from one shared search.
pub fn capacities(domain: &ConvexToricDomain, k_max: u64) -> CapacitySequence {
    let values = if k_max == 0 { vec![Rational::zero()] } else { deepen(domain, k_max, false).0 };
    CapacitySequence { domain: domain.clone(), values }
}

/// Capacities with a minimizer list for every `k ≤ K`.
pub fn capacities_with_witnesses(domain: &ConvexToricDomain, k_max: u64) -> Vec<CapacityWitness> {
    let (vals, shapes) = deepen(domain, k_max, true);
    (0..=k_max).map(|k| witness_from(k, &vals, &shapes)).collect()
}

/// All orbit sets of ECH index `I ≤ i_max`, grouped by index. The index
/// depends only on the path, so the answer is the same for every domain;
/// `domain` fixes the ordering within each group (by action, then label).
pub fn classify_low_index(domain: &ConvexToricDomain, i_max: u64) -> BTreeMap<u64, Vec<OrbitSet>> {
    // a path containing the edge (p,q) encloses the triangle with legs p and
    // q, so its minimal index is at least 2(p+q) - 1
    let reach = i_max.div_ceil(2);
    let mut dirs: Vec<Direction<i128>> = Vec::new();
    for p in 0..=reach {
        for q in 0..=reach - p {
            if p.gcd(&q) == 1 {
                dirs.push(Direction { p, q, action: 0 });
            }
        }
    }
    dirs.sort_by(|x, y| slope_order((x.p, x.q), (y.p, y.q)));
    let search = ShapeSearch { dirs: &dirs, budget: None, max_min_index: Some(i_max as i64) };
    let found: Vec<ConvexGenerator> = search.run(
        Vec::new,
        |acc: &mut Vec<ConvexGenerator>, view| {
            let shape: Vec<(u64, u64, u64)> =
                view.edges.iter().map(|&(d, m)| (dirs[d].p, dirs[d].q, m)).collect();
            acc.extend(labelings(&shape, None));
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    let mut out: BTreeMap<u64, Vec<(Rational, OrbitSet)>> = (0..=i_max).map(|i| (i, Vec::new())).collect();
    for g in found {
        let i = g.ech_index();
        if (0..=i_max as i64).contains(&i) {
            out.get_mut(&(i as u64)).expect("prefilled").push((g.action(domain), g.to_orbit_set()));
        }
    }
    out.into_iter()
        .map(|(i, mut v)| {
            v.sort();
            (i, v.into_iter().map(|(_, s)| s).collect())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{make_ball, make_ellipsoid, make_polydisk};
    use crate::orbits::OrbitFamilyLabel as L;
    use crate::rational::{int, ratio};

    fn gen(edges: &[(u64, u64, u64, char)]) -> ConvexGenerator {
        ConvexGenerator::new(
            edges
                .iter()
                .map(|&(p, q, m, l)| Edge::new(p, q, m, if l == 'h' { EdgeLabel::H } else { EdgeLabel::E }))
                .collect(),
        )
        .unwrap()
    }

    fn set(entries: &[(u64, u64, char, u64)]) -> OrbitSet {
        OrbitSet::new(entries.iter().map(|&(p, q, k, m)| {
            let kind = if k == 'h' { OrbitKind::Hyperbolic } else { OrbitKind::Elliptic };
            (L::new(p, q, kind).unwrap(), m)
        }))
        .unwrap()
    }

    #[test]
    fn orbit_set_to_generator() {
        assert_eq!(ConvexGenerator::from_orbit_set(&OrbitSet::empty()), ConvexGenerator::empty());
        let g = ConvexGenerator::from_orbit_set(&set(&[(0, 1, 'e', 2)]));
        assert_eq!(g, gen(&[(0, 1, 2, 'e')]));
        assert_eq!(g.vertices(), vec![(0, 0), (2, 0)]);
        let g = ConvexGenerator::from_orbit_set(&set(&[(1, 1, 'h', 1)]));
        assert_eq!(g, gen(&[(1, 1, 1, 'h')]));
        assert_eq!(g.vertices(), vec![(0, 1), (1, 0)]);
        let mixed = set(&[(1, 1, 'e', 2), (1, 1, 'h', 1), (1, 0, 'e', 1)]);
        let g = ConvexGenerator::from_orbit_set(&mixed);
        assert_eq!(g, gen(&[(1, 1, 3, 'h'), (1, 0, 1, 'e')]));
        assert_eq!(g.to_orbit_set(), mixed);
    }

    #[test]
    fn generator_validation() {
        assert!(ConvexGenerator::new(vec![Edge::new(0, 1, 1, EdgeLabel::H)]).is_err());
        assert!(ConvexGenerator::new(vec![Edge::new(2, 2, 1, EdgeLabel::E)]).is_err());
        assert!(ConvexGenerator::new(vec![Edge::new(1, 1, 0, EdgeLabel::E)]).is_err());
        assert!(ConvexGenerator::new(vec![Edge::new(1, 1, 1, EdgeLabel::E), Edge::new(1, 1, 1, EdgeLabel::H)]).is_err());
        // sorted into path order
        let g = gen(&[(1, 0, 1, 'e'), (1, 2, 1, 'e'), (0, 1, 1, 'e')]);
        let dirs: Vec<(u64, u64)> = g.edges().iter().map(|e| (e.p, e.q)).collect();
        assert_eq!(dirs, vec![(0, 1), (1, 2), (1, 0)]);
    }

    #[test]
    fn lattice_counts() {
        assert_eq!(ConvexGenerator::empty().lattice_count(), 1);
        assert_eq!(gen(&[(1, 1, 1, 'e')]).lattice_count(), 3);
        assert_eq!(gen(&[(0, 1, 2, 'e')]).lattice_count(), 3);
        assert_eq!(gen(&[(1, 0, 1, 'e')]).lattice_count(), 2);
        assert_eq!(gen(&[(0, 1, 1, 'e'), (1, 0, 1, 'e')]).lattice_count(), 4);
        // triangle (0,1)-(2,0): (0,0),(1,0),(2,0),(0,1)
        assert_eq!(gen(&[(1, 2, 1, 'e')]).lattice_count(), 4);
    }

    #[test]
    fn low_index_values() {
        assert_eq!(ConvexGenerator::empty().ech_index(), 0);
        assert_eq!(gen(&[(0, 1, 1, 'e')]).ech_index(), 2);
        assert_eq!(gen(&[(1, 0, 1, 'e')]).ech_index(), 2);
        assert_eq!(gen(&[(1, 1, 1, 'h')]).ech_index(), 3);
        assert_eq!(gen(&[(1, 1, 1, 'e')]).ech_index(), 4);
        assert_eq!(gen(&[(0, 1, 2, 'e')]).ech_index(), 4);
        assert_eq!(gen(&[(1, 0, 2, 'e')]).ech_index(), 4);
    }

    #[test]
    fn actions() {
        let t = make_ellipsoid(int(1), int(2)).unwrap();
        assert_eq!(ConvexGenerator::empty().action(&t), int(0));
        assert_eq!(gen(&[(0, 1, 1, 'e')]).action(&t), int(1));
        assert_eq!(gen(&[(1, 1, 1, 'e')]).action(&t), int(2));
        let x = make_ellipsoid(int(7), int(3)).unwrap();
        assert_eq!(gen(&[(0, 1, 1, 'e')]).action(&x), int(7));
    }

    #[test]
    fn generators_of_the_unit_ball() {
        let b = make_ball(int(1)).unwrap();
        let gens = enumerate_generators(&b, &int(1));
        let got: Vec<(String, i64)> = gens.iter().map(|g| (g.generator.to_string(), g.ech_index)).collect();
        assert_eq!(
            got,
            vec![
                ("[]".to_string(), 0),
                ("[(0,1)x1e]".to_string(), 2),
                ("[(1,0)x1e]".to_string(), 2),
                ("[(1,1)x1h]".to_string(), 3),
                ("[(1,1)x1e]".to_string(), 4),
            ]
        );
        assert_eq!(enumerate_generators(&b, &ratio(1, 2)).len(), 1);
        assert!(enumerate_generators(&b, &int(-1)).is_empty());
    }

    #[test]
    fn enumeration_agrees_with_index_and_action() {
        let t = make_ellipsoid(int(2), int(3)).unwrap();
        let gens = enumerate_generators(&t, &int(6));
        assert!(gens.windows(2).all(|w| w[0].action <= w[1].action));
        for g in &gens {
            assert_eq!(g.ech_index, g.generator.ech_index());
            assert_eq!(g.action, g.generator.action(&t));
            assert!(g.action <= int(6));
        }
    }

    #[test]
    fn capacity_small_cases() {
        let t = make_ellipsoid(int(1), int(2)).unwrap();
        let vals: Vec<Rational> = (0..=5).map(|k| capacity(&t, k)).collect();
        assert_eq!(vals, vec![int(0), int(1), int(2), int(2), int(3), int(3)]);
        let b = make_ball(int(1)).unwrap();
        assert_eq!(
            capacities(&b, 6).values,
            vec![int(0), int(1), int(1), int(2), int(2), int(2), int(3)]
        );
        let p = make_polydisk(int(1), int(1)).unwrap();
        assert_eq!(capacities(&p, 2).values, vec![int(0), int(1), int(2)]);
        assert_eq!(capacities(&p, 0).values, vec![int(0)]);
    }

    #[test]
    fn witnesses_have_the_right_index_and_action() {
        let p = make_polydisk(int(2), int(3)).unwrap();
        for w in capacities_with_witnesses(&p, 6) {
            assert!(!w.minimizers.is_empty());
            for g in &w.minimizers {
                assert_eq!(g.ech_index(), 2 * w.k as i64);
                assert_eq!(g.action(&p), w.value);
            }
        }
        let b = make_ball(int(1)).unwrap();
        let w = capacity_witnesses(&b, 2);
        assert_eq!(w.value, int(1));
        let names = |w: &CapacityWitness| w.minimizers.iter().map(|g| g.to_orbit_set().to_string()).collect::<Vec<_>>();
        assert_eq!(names(&w), vec!["e_{1,1}"]);
        let t = make_ellipsoid(int(1), int(2)).unwrap();
        let w = capacity_witnesses(&t, 2);
        assert_eq!(w.value, int(2));
        assert_eq!(names(&w), vec!["e_{0,1}^2", "e_{1,1}"]);
    }

    #[test]
    fn classification_up_to_four() {
        let t = make_ellipsoid(int(1), int(2)).unwrap();
        let c = classify_low_index(&t, 4);
        let names = |i: u64| c[&i].iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert_eq!(names(0), vec!["∅"]);
        assert!(names(1).is_empty());
        assert_eq!(names(2), vec!["e_{0,1}", "e_{1,0}"]);
        assert_eq!(names(3), vec!["h_{1,1}"]);
        assert_eq!(names(4), vec!["e_{0,1}^2", "e_{1,1}", "e_{1,0}^2"]);
        assert_eq!(classify_low_index(&t, 0).len(), 1);
    }
}
