//! Exact 2D primitives shared by every planner: distances, point and segment
//! tests against circular obstacles.
//!
//! The robot is a point. Obstacles are open discs: a point exactly on the
//! boundary circle is admissible.

use serde::{Deserialize, Serialize};

/// A position in the workspace.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(&self, other: &Point2) -> f64 {
        distance(*self, *other)
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Point2::new(x, y)
    }
}

/// Euclidean distance between two points.
pub fn distance(p: Point2, q: Point2) -> f64 {
    (p.x - q.x).hypot(p.y - q.y)
}

/// A circular obstacle.
///
/// Serialized as `{"cx": .., "cy": .., "r": ..}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "ObstacleRecord", into = "ObstacleRecord")]
pub struct Obstacle {
    pub center: Point2,
    pub radius: f64,
}

impl Obstacle {
    pub const fn new(cx: f64, cy: f64, radius: f64) -> Self {
        Obstacle {
            center: Point2::new(cx, cy),
            radius,
        }
    }

    pub fn contains(&self, p: Point2) -> bool {
        point_in_obstacle(p, self)
    }
}

#[derive(Serialize, Deserialize)]
struct ObstacleRecord {
    cx: f64,
    cy: f64,
    r: f64,
}

impl From<ObstacleRecord> for Obstacle {
    fn from(rec: ObstacleRecord) -> Self {
        Obstacle::new(rec.cx, rec.cy, rec.r)
    }
}

impl From<Obstacle> for ObstacleRecord {
    fn from(o: Obstacle) -> Self {
        ObstacleRecord {
            cx: o.center.x,
            cy: o.center.y,
            r: o.radius,
        }
    }
}

/// A closed straight segment. `a == b` is allowed and behaves as a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Point2,
    pub b: Point2,
}

impl Segment {
    pub const fn new(a: Point2, b: Point2) -> Self {
        Segment { a, b }
    }

    pub fn length(&self) -> f64 {
        distance(self.a, self.b)
    }

    /// Point on the segment closest to `p`.
    pub fn closest_point(&self, p: Point2) -> Point2 {
        let dx = self.b.x - self.a.x;
        let dy = self.b.y - self.a.y;
        let len_sq = dx * dx + dy * dy;
        if len_sq == 0.0 {
            return self.a;
        }
        let t = (((p.x - self.a.x) * dx + (p.y - self.a.y) * dy) / len_sq).clamp(0.0, 1.0);
        Point2::new(self.a.x + t * dx, self.a.y + t * dy)
    }

    /// Minimum distance from `p` to any point of the segment.
    pub fn distance_to(&self, p: Point2) -> f64 {
        distance(self.closest_point(p), p)
    }
}

/// True iff `p` lies strictly inside `o`.
pub fn point_in_obstacle(p: Point2, o: &Obstacle) -> bool {
    distance(p, o.center) < o.radius
}

/// True iff the closed segment passes strictly inside `o`.
pub fn segment_intersects_obstacle(s: &Segment, o: &Obstacle) -> bool {
    s.distance_to(o.center) < o.radius
}

pub fn point_collides(p: Point2, obstacles: &[Obstacle]) -> bool {
    obstacles.iter().any(|o| point_in_obstacle(p, o))
}

pub fn segment_collides(s: &Segment, obstacles: &[Obstacle]) -> bool {
    obstacles.iter().any(|o| segment_intersects_obstacle(s, o))
}

/// True iff any vertex or any edge of the polyline touches the interior of
/// an obstacle.
pub fn path_collides(path: &[Point2], obstacles: &[Obstacle]) -> bool {
    if path.iter().any(|&p| point_collides(p, obstacles)) {
        return true;
    }
    path.windows(2)
        .any(|w| segment_collides(&Segment::new(w[0], w[1]), obstacles))
}

/// Axis-aligned workspace rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl Bounds {
    pub const fn new(min_x: f64, min_y: f64, max_x: f64, max_y: f64) -> Self {
        Bounds {
            min_x,
            min_y,
            max_x,
            max_y,
        }
    }

    pub fn width(&self) -> f64 {
        self.max_x - self.min_x
    }

    pub fn height(&self) -> f64 {
        self.max_y - self.min_y
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }

    pub fn contains(&self, p: Point2) -> bool {
        p.x >= self.min_x && p.x <= self.max_x && p.y >= self.min_y && p.y <= self.max_y
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn unit_disc() -> Obstacle {
        Obstacle::new(0.0, 0.0, 1.0)
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance(Point2::new(0.0, 0.0), Point2::new(3.0, 4.0)), 5.0);
        assert_eq!(distance(Point2::new(1.0, 1.0), Point2::new(1.0, 1.0)), 0.0);
        assert_eq!(distance(Point2::new(-2.0, 0.0), Point2::new(2.0, 0.0)), 4.0);
    }

    #[test]
    fn point_in_obstacle_excludes_boundary() {
        assert!(point_in_obstacle(Point2::new(0.0, 0.0), &unit_disc()));
        assert!(!point_in_obstacle(Point2::new(1.0, 0.0), &unit_disc()));
        assert!(!point_in_obstacle(Point2::new(5.0, 5.0), &unit_disc()));
    }

    #[test]
    fn segment_examples() {
        let o = unit_disc();
        let through = Segment::new(Point2::new(0.0, -2.0), Point2::new(0.0, 2.0));
        let beside = Segment::new(Point2::new(2.0, -2.0), Point2::new(2.0, 2.0));
        let chord = Segment::new(Point2::new(-3.0, 0.5), Point2::new(3.0, 0.5));
        assert!(segment_intersects_obstacle(&through, &o));
        assert!(!segment_intersects_obstacle(&beside, &o));
        assert!(segment_intersects_obstacle(&chord, &o));
        assert_eq!(chord.distance_to(o.center), 0.5);
    }

    #[test]
    fn tangent_segment_is_clear() {
        let tangent = Segment::new(Point2::new(-3.0, 1.0), Point2::new(3.0, 1.0));
        assert!(!segment_intersects_obstacle(&tangent, &unit_disc()));
    }

    #[test]
    fn degenerate_segment_is_a_point() {
        let o = unit_disc();
        let inside = Segment::new(Point2::new(0.2, 0.1), Point2::new(0.2, 0.1));
        let outside = Segment::new(Point2::new(3.0, 0.0), Point2::new(3.0, 0.0));
        assert!(segment_intersects_obstacle(&inside, &o));
        assert!(!segment_intersects_obstacle(&outside, &o));
    }

    #[test]
    fn segment_pointing_away_uses_endpoint() {
        // Projection parameter is negative; the near endpoint decides.
        let s = Segment::new(Point2::new(1.5, 0.0), Point2::new(4.0, 0.0));
        assert_eq!(s.distance_to(Point2::new(0.0, 0.0)), 1.5);
        assert!(!segment_intersects_obstacle(&s, &unit_disc()));
    }

    #[test]
    fn path_collides_examples() {
        let obs = [unit_disc()];
        assert!(path_collides(&[Point2::new(-5.0, 0.0), Point2::new(5.0, 0.0)], &obs));
        assert!(!path_collides(&[Point2::new(-5.0, 3.0), Point2::new(5.0, 3.0)], &obs));
        assert!(!path_collides(&[Point2::new(0.0, 0.0)], &[]));
    }

    #[test]
    fn obstacle_json_shape() {
        let json = serde_json::to_string(&Obstacle::new(1.5, 2.0, 3.0)).unwrap();
        assert_eq!(json, r#"{"cx":1.5,"cy":2.0,"r":3.0}"#);
    }

    fn coord() -> impl Strategy<Value = f64> {
        -100.0..100.0f64
    }

    fn point() -> impl Strategy<Value = Point2> {
        (coord(), coord()).prop_map(|(x, y)| Point2::new(x, y))
    }

    proptest! {
        #[test]
        fn triangle_inequality(a in point(), b in point(), c in point()) {
            prop_assert!(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-9);
        }

        #[test]
        fn distance_is_symmetric(a in point(), b in point()) {
            prop_assert_eq!(distance(a, b), distance(b, a));
        }

        #[test]
        fn adding_an_obstacle_never_clears_a_path(
            path in prop::collection::vec(point(), 1..6),
            base in prop::collection::vec((point(), 0.5..20.0f64), 0..5),
            extra in (point(), 0.5..20.0f64),
        ) {
            let mut obstacles: Vec<Obstacle> =
                base.iter().map(|(c, r)| Obstacle { center: *c, radius: *r }).collect();
            let before = path_collides(&path, &obstacles);
            obstacles.push(Obstacle { center: extra.0, radius: extra.1 });
            prop_assert!(!before || path_collides(&path, &obstacles));
        }
    }
}
