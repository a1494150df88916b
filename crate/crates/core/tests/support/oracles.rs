//! Independent reference computations for tests. Nothing here calls the
//! code paths it is used to check.

#![allow(dead_code)]

use curveplan::geometry::{Obstacle, Point2};

fn dist(a: Point2, b: Point2) -> f64 {
    ((a.x - b.x).powi(2) + (a.y - b.y).powi(2)).sqrt()
}

/// Segment/disc hit test by dense sampling: `n` evenly spaced points,
/// endpoints included, each tested for strict containment.
pub fn sampled_segment_hits(a: Point2, b: Point2, o: &Obstacle, n: usize) -> bool {
    (0..n).any(|i| {
        let t = i as f64 / (n - 1) as f64;
        let p = Point2::new(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
        dist(p, o.center) < o.radius
    })
}

/// Closest approach of the segment to `c` by ternary search on the convex
/// distance profile. Used only to decide whether a pair sits at tangency.
pub fn closest_approach(a: Point2, b: Point2, c: Point2) -> f64 {
    let at = |t: f64| dist(Point2::new(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)), c);
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if at(m1) < at(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    at((lo + hi) / 2.0).min(at(0.0)).min(at(1.0))
}

/// Double loop over points and obstacles.
pub fn brute_curvature_deviation(path: &[Point2], obstacles: &[Obstacle]) -> f64 {
    let mut total = 0.0;
    for p in path {
        for o in obstacles {
            let d = dist(*p, o.center).max(1e-9);
            total += 1.0 / (o.radius + d);
        }
    }
    total
}

/// Cheapest simple path cost by enumerating every simple path with DFS.
pub fn exhaustive_shortest_cost(
    nodes: &[Point2],
    adjacency: &[Vec<usize>],
    source: usize,
    target: usize,
) -> Option<f64> {
    fn walk(
        at: usize,
        target: usize,
        cost: f64,
        nodes: &[Point2],
        adjacency: &[Vec<usize>],
        visited: &mut Vec<bool>,
        best: &mut Option<f64>,
    ) {
        if at == target {
            if best.is_none_or(|b| cost < b) {
                *best = Some(cost);
            }
            return;
        }
        for &next in &adjacency[at] {
            if visited[next] {
                continue;
            }
            visited[next] = true;
            let step = dist(nodes[at], nodes[next]);
            walk(next, target, cost + step, nodes, adjacency, visited, best);
            visited[next] = false;
        }
    }
    let mut visited = vec![false; nodes.len()];
    visited[source] = true;
    let mut best = None;
    walk(source, target, 0.0, nodes, adjacency, &mut visited, &mut best);
    best
}

/// True when every sampled point of the circle of radius `ring` around
/// `center` lies strictly inside some obstacle: any continuous path from
/// inside that circle to outside it must collide.
pub fn ring_is_sealed(center: Point2, ring: f64, obstacles: &[Obstacle], samples: usize) -> bool {
    (0..samples).all(|i| {
        let a = i as f64 * std::f64::consts::TAU / samples as f64;
        let p = Point2::new(center.x + ring * a.cos(), center.y + ring * a.sin());
        obstacles.iter().any(|o| dist(p, o.center) < o.radius)
    })
}
