//! Shared inputs for the criterion benches.

use curveplan::rng::TrialRng;
use curveplan::{generate_scenario, Bounds, RngSeed, Scenario, Segment};

/// `n` random segments inside `bounds`, reproducible from `seed`.
pub fn random_segments(bounds: &Bounds, n: usize, seed: u64) -> Vec<Segment> {
    let mut rng = TrialRng::new(RngSeed(seed));
    (0..n)
        .map(|_| Segment::new(rng.point_in(bounds), rng.point_in(bounds)))
        .collect()
}

/// A generated 100x100 scenario with `n` obstacles of radius 2 to 5.
pub fn field(n: usize, seed: u64) -> Scenario {
    generate_scenario(Bounds::new(0.0, 0.0, 100.0, 100.0), n, (2.0, 5.0), RngSeed(seed))
        .expect("a 100x100 field has room for the requested obstacles")
}
