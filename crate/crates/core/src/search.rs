//! Depth-first enumeration of unlabeled convex lattice paths ("shapes").
//!
//! A shape is a multiset of primitive directions `(p,q)`; laid out in order of
//! decreasing slope `-p/q` the edges `m·(q,-p)` form a concave path from the
//! y-axis to the x-axis. Appending an edge at the steep end shifts the old
//! path up, so the enclosed region only grows: the lattice count `L`, the
//! action and `2(L-1) - #non-axis edges` are all monotone along every DFS
//! branch, which is what makes budget and index pruning exact.

use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::domain::ConvexToricDomain;
use crate::rational::Rational;

/// Scaled action arithmetic: actions are stored as integers `D·A` for a
/// common denominator `D` of the domain's breakpoints.
pub(crate) trait ActionScalar:
    Clone + Ord + Send + Sync + Zero + Add<Output = Self> + for<'a> Add<&'a Self, Output = Self>
{
    fn from_bigint(v: &BigInt) -> Self;
}

impl ActionScalar for i128 {
    fn from_bigint(v: &BigInt) -> Self {
        v.to_i128().expect("checked to fit")
    }
}

impl ActionScalar for BigInt {
    fn from_bigint(v: &BigInt) -> Self {
        v.clone()
    }
}

/// A candidate edge direction with its scaled action `D·support(Ω, q, p)`.
#[derive(Debug, Clone)]
pub(crate) struct Direction<T> {
    pub p: u64,
    pub q: u64,
    pub action: T,
}

/// Sort key placing `(0,1)` first, then increasing `p/q`, then `(1,0)`.
pub(crate) fn slope_order(a: (u64, u64), b: (u64, u64)) -> std::cmp::Ordering {
    // p_a / q_a vs p_b / q_b with q = 0 meaning +infinity
    (a.0 as u128 * b.1 as u128).cmp(&(b.0 as u128 * a.1 as u128))
}

/// The domain with all breakpoints scaled to integers.
pub(crate) struct ScaledDomain {
    pub denom: BigInt,
    points: Vec<(BigInt, BigInt)>,
}

impl ScaledDomain {
    pub fn new(domain: &ConvexToricDomain) -> Self {
        let pts = domain.profile().breakpoints();
        let mut denom = BigInt::from(1);
        for (x, y) in pts {
            denom = denom.lcm(x.denom());
            denom = denom.lcm(y.denom());
        }
        let points = pts
            .iter()
            .map(|(x, y)| {
                (
                    (x * Rational::from_integer(denom.clone())).to_integer(),
                    (y * Rational::from_integer(denom.clone())).to_integer(),
                )
            })
            .collect();
        Self { denom, points }
    }

    /// `D · max_{Ω} (s·x + t·y)`.
    pub fn support(&self, s: u64, t: u64) -> BigInt {
        let (s, t) = (BigInt::from(s), BigInt::from(t));
        self.points
            .iter()
            .map(|(x, y)| &s * x + &t * y)
            .max()
            .expect("nonempty profile")
    }

    /// Largest scaled action not exceeding `budget`.
    pub fn scale_budget(&self, budget: &Rational) -> BigInt {
        (budget * Rational::from_integer(self.denom.clone())).floor().to_integer()
    }

    pub fn unscale(&self, v: &BigInt) -> Rational {
        Rational::new(v.clone(), self.denom.clone())
    }

    /// Scaled `a` and `f(0)`.
    pub fn intercepts(&self) -> (BigInt, BigInt) {
        (self.points[self.points.len() - 1].0.clone(), self.points[0].1.clone())
    }

    /// All primitive directions whose edge action `support(Ω, q, p)` is at
    /// most `budget` (scaled), sorted in path order.
    pub fn directions(&self, budget: &BigInt) -> Vec<(u64, u64, BigInt)> {
        let (a, f0) = self.intercepts();
        // action(p,q) >= q·a and >= p·f(0)
        let q_max = (budget / &a).to_u64().unwrap_or(u64::MAX);
        let p_max = (budget / &f0).to_u64().unwrap_or(u64::MAX);
        let mut out = Vec::new();
        for p in 0..=p_max {
            for q in 0..=q_max {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let s = self.support(q, p);
                if &s <= budget {
                    out.push((p, q, s));
                }
            }
        }
        out.sort_by(|x, y| slope_order((x.0, x.1), (y.0, y.1)));
        out
    }
}

/// Running geometry of the path built so far.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct PathStats {
    /// x-intercept `X = Σ m q`.
    pub x_end: u64,
    /// y-intercept `Y = Σ m p`.
    pub y_start: u64,
    two_area: u128,
    boundary: u64,
    pub non_axis_edges: u32,
}

impl PathStats {
    /// Stats after appending `m` copies of `(p,q)` at the steep end.
    pub fn push(&self, p: u64, q: u64, m: u64) -> PathStats {
        let (mp, mq) = ((m * p) as u128, (m * q) as u128);
        PathStats {
            x_end: self.x_end + m * q,
            y_start: self.y_start + m * p,
            two_area: self.two_area + 2 * self.x_end as u128 * mp + mp * mq,
            boundary: self.boundary + m * (p + q + 1),
            non_axis_edges: self.non_axis_edges + u32::from(p > 0 && q > 0 && m > 0),
        }
    }

    /// Lattice points of the closed region under the path, by Pick's theorem.
    pub fn lattice_count(&self) -> u64 {
        ((self.two_area + self.boundary as u128) / 2 + 1) as u64
    }

    /// Smallest ECH index over all labelings: every non-axis edge labeled h.
    pub fn min_index(&self) -> i64 {
        2 * (self.lattice_count() as i64 - 1) - self.non_axis_edges as i64
    }
}

/// A shape reached by the search.
pub(crate) struct ShapeView<'a, T> {
    /// `(direction index, multiplicity)` in path order.
    pub edges: &'a [(usize, u64)],
    pub action: &'a T,
    pub stats: PathStats,
}

pub(crate) struct ShapeSearch<'a, T> {
    pub dirs: &'a [Direction<T>],
    /// Inclusive action budget.
    pub budget: Option<T>,
    /// Prune shapes whose minimal index exceeds this.
    pub max_min_index: Option<i64>,
}

impl<'a, T: ActionScalar> ShapeSearch<'a, T> {
    fn admissible(&self, action: &T, stats: &PathStats) -> bool {
        if let Some(b) = &self.budget {
            if action > b {
                return false;
            }
        }
        if let Some(i) = self.max_min_index {
            if stats.min_index() > i {
                return false;
            }
        }
        true
    }

    fn dfs<A>(
        &self,
        start: usize,
        edges: &mut Vec<(usize, u64)>,
        action: &T,
        stats: PathStats,
        acc: &mut A,
        visit: &(impl Fn(&mut A, &ShapeView<'_, T>) + Sync),
    ) {
        for d in start..self.dirs.len() {
            let dir = &self.dirs[d];
            let mut m = 1;
            let mut act = action.clone() + &dir.action;
            loop {
                let st = stats.push(dir.p, dir.q, m);
                if !self.admissible(&act, &st) {
                    break;
                }
                edges.push((d, m));
                visit(acc, &ShapeView { edges, action: &act, stats: st });
                self.dfs(d + 1, edges, &act, st, acc, visit);
                edges.pop();
                m += 1;
                act = act + &dir.action;
            }
        }
    }

    /// Visits every admissible shape (including the empty one) once. The top
    /// level is split across the rayon pool; accumulators are merged in
    /// direction order so the result does not depend on scheduling.
    pub fn run<A: Send>(
        &self,
        init: impl Fn() -> A + Sync,
        visit: impl Fn(&mut A, &ShapeView<'_, T>) + Sync,
        merge: impl Fn(A, A) -> A + Sync,
    ) -> A {
        let mut root = init();
        visit(&mut root, &ShapeView { edges: &[], action: &T::zero(), stats: PathStats::default() });
        let parts: Vec<A> = (0..self.dirs.len())
            .into_par_iter()
            .map(|d| {
                let mut acc = init();
                let dir = &self.dirs[d];
                let mut edges = Vec::new();
                let mut m = 1;
                let mut act = dir.action.clone();
                loop {
                    let st = PathStats::default().push(dir.p, dir.q, m);
                    if !self.admissible(&act, &st) {
                        break;
                    }
                    edges.push((d, m));
                    visit(&mut acc, &ShapeView { edges: &edges, action: &act, stats: st });
                    self.dfs(d + 1, &mut edges, &act, st, &mut acc, &visit);
                    edges.pop();
                    m += 1;
                    act = act + &dir.action;
                }
                acc
            })
            .collect();
        parts.into_iter().fold(root, merge)
    }
}

/// Whether scaled actions up to `budget` can use the `i128` fast path. Sums
/// never exceed twice the budget because every step is checked against it.
pub(crate) fn fits_i128(budget: &BigInt) -> bool {
    budget.bits() < 100
}
