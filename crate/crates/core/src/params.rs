// Copyright 2026 The pewald developers
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

use pewald_specfun::erfc;

use crate::{CoreError, Periodicity};

/// Target size of the neglected real-space and k-space terms in the
/// default truncation.
pub const TRUNCATION_TOLERANCE: f64 = 1e-14;

/// Splitting parameter and truncation of an Ewald evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EwaldParams {
    /// Splitting parameter ξ (inverse length).
    pub xi: f64,
    /// Real-space pair cutoff.
    pub r_cut: f64,
    /// Wave-number cutoff, `|k| ≤ k_max`.
    pub k_max: f64,
    /// Image shells summed in real space beyond the primary cell.
    pub real_layers: u32,
}

impl EwaldParams {
    pub fn new(xi: f64, r_cut: f64, k_max: f64, real_layers: u32) -> Result<Self, CoreError> {
        let p = Self {
            xi,
            r_cut,
            k_max,
            real_layers,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), CoreError> {
        for (name, v) in [("xi", self.xi), ("r_cut", self.r_cut), ("k_max", self.k_max)] {
            // r_cut = ∞ is allowed: it means "every image in the listed shells"
            let finite_ok = name == "r_cut" || v.is_finite();
            if !(v > 0.0) || !finite_ok {
                return Err(CoreError::InvalidParams(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(())
    }

    /// Default truncation for a given ξ: `erfc(ξ r_cut) ≤ tol`,
    /// `exp(−k_max²/4ξ²) ≤ tol`, and enough image shells to contain the
    /// cutoff sphere around every pair.
    pub fn with_defaults(xi: f64, box_lengths: [f64; 3], mode: Periodicity) -> Result<Self, CoreError> {
        if !(xi > 0.0 && xi.is_finite()) {
            return Err(CoreError::InvalidParams(format!("xi must be positive, got {xi}")));
        }
        let r_cut = default_r_cut(xi);
        let k_max = default_k_max(xi);
        let real_layers = default_layers(r_cut, box_lengths, mode);
        Self::new(xi, r_cut, k_max, real_layers)
    }

    /// Defaults with ξ from [`default_xi`].
    pub fn for_box(box_lengths: [f64; 3], mode: Periodicity) -> Result<Self, CoreError> {
        Self::with_defaults(default_xi(box_lengths, mode), box_lengths, mode)
    }

    /// `erfc(ξ r_cut)`, the relative size of the first neglected real-space term.
    pub fn real_space_bound(&self) -> f64 {
        erfc(self.xi * self.r_cut)
    }

    /// `exp(−k_max²/4ξ²)`, the Gaussian factor of the first neglected mode.
    pub fn kspace_bound(&self) -> f64 {
        (-(self.k_max * self.k_max) / (4.0 * self.xi * self.xi)).exp()
    }
}

/// `ξ₀ = π / L_min` over the periodic directions, which balances the
/// number of image shells against the number of wave vectors.
pub fn default_xi(box_lengths: [f64; 3], mode: Periodicity) -> f64 {
    std::f64::consts::PI / mode.min_periodic_length(&box_lengths)
}

/// Smallest `r` with `erfc(ξ r) ≤` [`TRUNCATION_TOLERANCE`].
pub fn default_r_cut(xi: f64) -> f64 {
    let (mut lo, mut hi) = (0.0_f64, 10.0_f64);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if erfc(mid) > TRUNCATION_TOLERANCE {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi / xi
}

/// `k_max = 2ξ √(ln(1/tol))`, so that `exp(−k_max²/4ξ²) = tol`.
pub fn default_k_max(xi: f64) -> f64 {
    2.0 * xi * (-TRUNCATION_TOLERANCE.ln()).sqrt()
}

/// Pair separations within the primary cell reach one box length, so the
/// image index needs `ceil(r_cut / L) + 1` to cover the cutoff sphere.
pub fn default_layers(r_cut: f64, box_lengths: [f64; 3], mode: Periodicity) -> u32 {
    let l = mode.min_periodic_length(&box_lengths);
    (r_cut / l).ceil() as u32 + 1
}
