//! Undirected roadmap with Euclidean edge costs and label-setting
//! shortest-path search.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::baselines::nearest::k_nearest;
use crate::geometry::{distance, segment_collides, Obstacle, Point2, Segment};

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Roadmap {
    pub nodes: Vec<Point2>,
    /// Sorted, deduplicated neighbour lists; symmetric.
    pub adjacency: Vec<Vec<usize>>,
}

impl Roadmap {
    pub fn new(nodes: Vec<Point2>) -> Self {
        let adjacency = vec![Vec::new(); nodes.len()];
        Roadmap { nodes, adjacency }
    }

    /// Connects every node to its `k` nearest neighbours through
    /// collision-free straight edges.
    pub fn connect_k_nearest(nodes: Vec<Point2>, k: usize, obstacles: &[Obstacle]) -> Self {
        let mut map = Roadmap::new(nodes);
        for i in 0..map.nodes.len() {
            for j in k_nearest(&map.nodes, i, k) {
                let edge = Segment::new(map.nodes[i], map.nodes[j]);
                if !segment_collides(&edge, obstacles) {
                    map.add_edge(i, j);
                }
            }
        }
        map
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for (from, to) in [(a, b), (b, a)] {
            let list = &mut self.adjacency[from];
            if let Err(pos) = list.binary_search(&to) {
                list.insert(pos, to);
            }
        }
    }

    pub fn edge_cost(&self, a: usize, b: usize) -> f64 {
        distance(self.nodes[a], self.nodes[b])
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    /// Cheapest node sequence from `source` to `target` and its cost.
    /// Ties between equal-cost labels settle the lower node index first.
    pub fn shortest_path(&self, source: usize, target: usize) -> Option<(Vec<usize>, f64)> {
        let n = self.nodes.len();
        let mut dist = vec![f64::INFINITY; n];
        let mut parent = vec![usize::MAX; n];
        let mut settled = vec![false; n];
        let mut heap = BinaryHeap::new();
        dist[source] = 0.0;
        heap.push(Reverse(Label { cost: 0.0, node: source }));

        while let Some(Reverse(Label { cost, node })) = heap.pop() {
            if settled[node] {
                continue;
            }
            settled[node] = true;
            if node == target {
                break;
            }
            for &next in &self.adjacency[node] {
                if settled[next] {
                    continue;
                }
                let candidate = cost + self.edge_cost(node, next);
                if candidate < dist[next] {
                    dist[next] = candidate;
                    parent[next] = node;
                    heap.push(Reverse(Label { cost: candidate, node: next }));
                }
            }
        }

        if !settled[target] {
            return None;
        }
        let mut route = vec![target];
        let mut at = target;
        while at != source {
            at = parent[at];
            route.push(at);
        }
        route.reverse();
        Some((route, dist[target]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Label {
    cost: f64,
    node: usize,
}

impl Eq for Label {}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cost
            .total_cmp(&other.cost)
            .then(self.node.cmp(&other.node))
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Roadmap {
        // 0 --- 1
        // |     |
        // 3 --- 2   plus diagonal 0-2
        let mut m = Roadmap::new(vec![
            Point2::new(0.0, 1.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 0.0),
        ]);
        m.add_edge(0, 1);
        m.add_edge(1, 2);
        m.add_edge(2, 3);
        m.add_edge(3, 0);
        m
    }

    #[test]
    fn picks_cheaper_route() {
        let mut m = square();
        let (route, cost) = m.shortest_path(0, 2).unwrap();
        assert_eq!(cost, 2.0);
        // Equal-cost routes: 0-1-2 and 0-3-2; node 1 settles first.
        assert_eq!(route, vec![0, 1, 2]);
        m.add_edge(0, 2);
        let (route, cost) = m.shortest_path(0, 2).unwrap();
        assert_eq!(route, vec![0, 2]);
        assert!((cost - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn disconnected_is_none() {
        let m = Roadmap::new(vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)]);
        assert_eq!(m.shortest_path(0, 1), None);
        assert_eq!(m.shortest_path(0, 0), Some((vec![0], 0.0)));
    }

    #[test]
    fn edges_are_symmetric_and_unique() {
        let mut m = square();
        m.add_edge(1, 0);
        m.add_edge(2, 2);
        assert_eq!(m.edge_count(), 4);
        assert_eq!(m.edges().count(), 4);
        for (a, list) in m.adjacency.iter().enumerate() {
            for &b in list {
                assert!(m.adjacency[b].contains(&a));
            }
        }
    }

    #[test]
    fn blocked_edges_are_skipped() {
        let nodes = vec![Point2::new(-5.0, 0.0), Point2::new(5.0, 0.0), Point2::new(0.0, 8.0)];
        let obstacles = [Obstacle::new(0.0, 0.0, 1.0)];
        let m = Roadmap::connect_k_nearest(nodes, 2, &obstacles);
        assert!(!m.adjacency[0].contains(&1));
        assert_eq!(m.adjacency[2], vec![0, 1]);
    }
}
