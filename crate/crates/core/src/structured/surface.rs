//! Degeneracy profiles of graphs embeddable in a surface of Euler genus `ρ`.

use serde::{Deserialize, Serialize};

use crate::graph::DegeneracyProfile;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfaceProfile {
    pub euler_genus: usize,
    /// `(13 + √(73 + 48ρ)) / 2`; only meaningful for `ρ ≥ 2`.
    pub k: f64,
    pub profile: DegeneracyProfile,
    pub list_size: usize,
}

fn isqrt(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Sphere and projective plane use the planar profile `(1, 5)` with 11 colors.
/// Otherwise the profile is `(⌊k⌋, (k - 1) / 2)` and the list size `⌈k⌉`,
/// computed exactly whenever `73 + 48ρ` is a perfect square.
pub fn surface_profile(euler_genus: usize) -> SurfaceProfile {
    let disc = 73 + 48 * euler_genus as u64;
    let root = isqrt(disc);
    let (k, floor_k, ceil_k) = if root * root == disc {
        let twice = 13 + root;
        (twice as f64 / 2.0, (twice / 2) as usize, twice.div_ceil(2) as usize)
    } else {
        let k = (13.0 + (disc as f64).sqrt()) / 2.0;
        (k, k.floor() as usize, k.ceil() as usize)
    };
    if euler_genus <= 1 {
        return SurfaceProfile {
            euler_genus,
            k,
            profile: DegeneracyProfile::new(1, 5.0),
            list_size: 11,
        };
    }
    SurfaceProfile {
        euler_genus,
        k,
        profile: DegeneracyProfile::new(floor_k, (k - 1.0) / 2.0),
        list_size: ceil_k,
    }
}

impl SurfaceProfile {
    /// The bound `g(x) = 6 - (12 - 6ρ) / x` on average degree of an `x`-vertex graph.
    pub fn average_degree_bound(&self, x: usize) -> f64 {
        self.average_degree_bound_at(x as f64)
    }

    fn average_degree_bound_at(&self, x: f64) -> f64 {
        6.0 - (12.0 - 6.0 * self.euler_genus as f64) / x
    }
}
