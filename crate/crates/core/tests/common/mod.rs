//! Random domains and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toric_ech::domain::{make_ellipsoid, make_polygon, ConvexToricDomain};
use toric_ech::rational::{int, ratio, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rand_ratio(r: &mut ChaCha8Rng, lo: i64, hi: i64, den: i64) -> Rational {
    ratio(r.gen_range(lo..=hi), den)
}

/// A random concave nonincreasing polygonal profile with 1 to 4 edges,
/// optionally starting flat and ending in a vertical drop, with
/// `a / f(0)` in `[1/4, 4]`.
pub fn random_profile(r: &mut ChaCha8Rng) -> ConvexToricDomain {
    loop {
        let n = r.gen_range(1..=4);
        let mut slopes: Vec<Rational> = (0..n).map(|_| -rand_ratio(r, 1, 24, 4)).collect();
        if r.gen_bool(0.25) {
            slopes[0] = int(0);
        }
        slopes.sort_by(|a, b| b.cmp(a));
        slopes.dedup();
        let widths: Vec<Rational> = slopes.iter().map(|_| rand_ratio(r, 1, 8, 4)).collect();
        let drop: Rational = slopes.iter().zip(&widths).map(|(s, w)| -(s * w)).sum();
        let end = if r.gen_bool(0.3) { rand_ratio(r, 1, 8, 4) } else { int(0) };
        let mut pts = vec![(int(0), &drop + &end)];
        let (mut x, mut y) = (int(0), &drop + &end);
        for (s, w) in slopes.iter().zip(&widths) {
            x += w;
            y += s * w;
            pts.push((x.clone(), y.clone()));
        }
        if y.is_zero() && pts.len() == 2 && slopes[0].is_zero() {
            continue;
        }
        let Ok(d) = make_polygon(pts) else { continue };
        let aspect = d.a() / d.f0();
        if aspect >= ratio(1, 4) && aspect <= int(4) {
            return d;
        }
    }
}

pub fn random_ellipsoid(r: &mut ChaCha8Rng) -> ConvexToricDomain {
    make_ellipsoid(rand_ratio(r, 2, 16, 4), rand_ratio(r, 2, 16, 4)).unwrap()
}

pub fn random_scale(r: &mut ChaCha8Rng) -> Rational {
    let den = r.gen_range(1..=7);
    rand_ratio(r, 1, 20, den)
}

/// Upper concave hull of points with nonnegative coordinates that include a
/// point on the y-axis; the result starts at the highest y-axis point.
pub fn upper_hull(mut pts: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    pts.sort();
    pts.dedup();
    let cross = |o: &(Rational, Rational), a: &(Rational, Rational), b: &(Rational, Rational)| {
        (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
    };
    let mut hull: Vec<(Rational, Rational)> = Vec::new();
    for p in pts {
        // on the y-axis keep only the highest point
        if let Some(last) = hull.last() {
            if last.0 == p.0 {
                hull.pop();
            }
        }
        while hull.len() >= 2 && !cross(&hull[hull.len() - 2], &hull[hull.len() - 1], &p).is_negative() {
            hull.pop();
        }
        hull.push(p);
    }
    hull
}

/// `max` of `s·x + t·y` over the breakpoints of the profile.
pub fn oracle_support(d: &ConvexToricDomain, s: &BigInt, t: &BigInt) -> Rational {
    d.profile()
        .breakpoints()
        .iter()
        .map(|(x, y)| x * Rational::from_integer(s.clone()) + y * Rational::from_integer(t.clone()))
        .max()
        .unwrap()
}

/// The `k`-th smallest element (from 0) of `{m a + n b}`.
pub fn ellipsoid_oracle(a: &Rational, b: &Rational, k_max: usize) -> Vec<Rational> {
    let unit = if a < b { a.clone() } else { b.clone() };
    let bound = &unit * int(k_max as i64 + 1);
    let mut vals = Vec::new();
    let mut m = 0i64;
    while a * int(m) <= bound {
        let mut n = 0i64;
        loop {
            let v = a * int(m) + b * int(n);
            if v > bound {
                break;
            }
            vals.push(v);
            n += 1;
        }
        m += 1;
    }
    vals.sort();
    vals.truncate(k_max + 1);
    vals
}

/// Lattice points in the closed region bounded by the path with vertices
/// `verts` (from the y-axis to the x-axis) and the axes, by testing every
/// grid point against every edge.
pub fn brute_lattice_count(verts: &[(i64, i64)]) -> u64 {
    let x_end = verts.last().unwrap().0;
    let y_start = verts[0].1;
    let mut n = 0;
    for i in 0..=x_end {
        for j in 0..=y_start {
            if verts.windows(2).all(|w| {
                let (a, b) = (w[0], w[1]);
                (b.0 - a.0) * (j - a.1) - (b.1 - a.1) * (i - a.0) <= 0
            }) {
                n += 1;
            }
        }
    }
    n
}

/// One unlabeled convex path found by the naive oracle.
pub struct NaivePath {
    pub edges: Vec<(u64, u64, u64)>,
    pub action: Rational,
    pub lattice_count: u64,
}

impl NaivePath {
    pub fn non_axis(&self) -> usize {
        self.edges.iter().filter(|e| e.0 > 0 && e.1 > 0).count()
    }
}

fn vertices(edges: &[(u64, u64, u64)]) -> Vec<(i64, i64)> {
    let y0: u64 = edges.iter().map(|e| e.0 * e.2).sum();
    let mut v = vec![(0i64, y0 as i64)];
    for &(p, q, m) in edges {
        let (x, y) = *v.last().unwrap();
        v.push((x + (q * m) as i64, y - (p * m) as i64));
    }
    v
}

/// Every convex path with action at most `budget`, by plain recursion over
/// primitive directions in slope order with no pruning beyond the budget.
pub fn naive_paths(d: &ConvexToricDomain, budget: &Rational) -> Vec<NaivePath> {
    let a = d.a().clone();
    let f0 = d.f0().clone();
    let q_max = (budget / &a).floor().to_integer().try_into().unwrap_or(0u64);
    let p_max = (budget / &f0).floor().to_integer().try_into().unwrap_or(0u64);
    let mut dirs: Vec<(u64, u64, Rational)> = Vec::new();
    for p in 0..=p_max {
        for q in 0..=q_max {
            if p.gcd(&q) == 1 {
                let s = oracle_support(d, &BigInt::from(q), &BigInt::from(p));
                if &s <= budget {
                    dirs.push((p, q, s));
                }
            }
        }
    }
    // p/q increasing, (1,0) last
    dirs.sort_by(|x, y| (x.0 * y.1).cmp(&(y.0 * x.1)));
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        dirs: &[(u64, u64, Rational)],
        start: usize,
        cur: &mut Vec<(u64, u64, u64)>,
        action: Rational,
        budget: &Rational,
        out: &mut Vec<NaivePath>,
    ) {
        out.push(NaivePath {
            edges: cur.clone(),
            action: action.clone(),
            lattice_count: brute_lattice_count(&vertices(cur)),
        });
        for i in start..dirs.len() {
            let (p, q, ref s) = dirs[i];
            let mut m = 1;
            loop {
                let act = &action + s * int(m as i64);
                if &act > budget {
                    break;
                }
                cur.push((p, q, m));
                rec(dirs, i + 1, cur, act, budget, out);
                cur.pop();
                m += 1;
            }
        }
    }
    rec(&dirs, 0, &mut cur, Rational::zero(), budget, &mut out);
    out
}

/// Least action of index `2k` over all labelings of the naive paths.
pub fn naive_capacities(paths: &[NaivePath], k_max: usize) -> BTreeMap<usize, Rational> {
    let mut best: BTreeMap<usize, Rational> = BTreeMap::new();
    for path in paths {
        let l = path.lattice_count as i64;
        for h in 0..=path.non_axis() as i64 {
            let index = 2 * (l - 1) - h;
            if index % 2 != 0 || index < 0 {
                continue;
            }
            let k = (index / 2) as usize;
            if k > k_max {
                continue;
            }
            let e = best.entry(k).or_insert_with(|| path.action.clone());
            if path.action < *e {
                *e = path.action.clone();
            }
        }
    }
    best
}
