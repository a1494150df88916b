#[path = "support/oracles.rs"]
mod oracles;

use curveplan::geometry::{segment_intersects_obstacle, Obstacle, Point2, Segment};
use curveplan::rng::{RngSeed, TrialRng};

#[test]
fn chord_example_agrees_with_sampling() {
    let s = Segment::new(Point2::new(-3.0, 0.5), Point2::new(3.0, 0.5));
    let o = Obstacle::new(0.0, 0.0, 1.0);
    assert!(segment_intersects_obstacle(&s, &o));
    assert!(oracles::sampled_segment_hits(s.a, s.b, &o, 10_000));
}

#[test]
fn random_pairs_agree_with_sampling() {
    let mut rng = TrialRng::new(RngSeed(0x5EED));
    let mut disagreements = 0;
    for _ in 0..2_000 {
        let a = Point2::new(rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0));
        let b = if rng.bernoulli(0.05) {
            a
        } else {
            Point2::new(rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0))
        };
        let o = Obstacle::new(rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0), rng.uniform(0.5, 8.0));
        let exact = segment_intersects_obstacle(&Segment::new(a, b), &o);
        let sampled = oracles::sampled_segment_hits(a, b, &o, 10_000);
        if exact != sampled {
            let margin = (oracles::closest_approach(a, b, o.center) - o.radius).abs();
            assert!(margin <= 1e-9, "disagreement away from tangency: margin {margin}");
            disagreements += 1;
        }
    }
    assert!(disagreements <= 2);
}
