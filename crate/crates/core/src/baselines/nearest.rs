//! Nearest-neighbour queries by linear scan. Ties break on lower index.

use crate::geometry::{distance, Point2};

pub fn nearest(points: &[Point2], query: Point2) -> Option<usize> {
    let mut best: Option<(f64, usize)> = None;
    for (i, &p) in points.iter().enumerate() {
        let d = distance(p, query);
        if best.is_none_or(|(bd, _)| d < bd) {
            best = Some((d, i));
        }
    }
    best.map(|(_, i)| i)
}

/// Indices of the `k` points nearest `points[of]`, excluding `of` itself,
/// ordered by (distance, index).
pub fn k_nearest(points: &[Point2], of: usize, k: usize) -> Vec<usize> {
    let query = points[of];
    let mut candidates: Vec<(f64, usize)> = points
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != of)
        .map(|(i, &p)| (distance(p, query), i))
        .collect();
    let by_key = |a: &(f64, usize), b: &(f64, usize)| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1));
    if k < candidates.len() {
        candidates.select_nth_unstable_by(k, by_key);
        candidates.truncate(k);
    }
    candidates.sort_by(by_key);
    candidates.into_iter().map(|(_, i)| i).collect()
}
