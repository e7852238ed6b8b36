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

//! Far-field multipole expansion of a planar logarithmic potential.

use pewald_core::ParticleSystem;

use crate::OracleError;

/// Terms of `Σ q_n ln(|r − r_n|²/|r|²)` for a target far from a neutral
/// cluster, with positions taken in the `x, y` plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultipoleTerms {
    /// The sum itself, evaluated as `Σ q_n ln_1p(w_n)`.
    pub exact: f64,
    pub dipole: f64,
    pub trace: f64,
    pub quadrupole: f64,
}

impl MultipoleTerms {
    /// `exact − (dipole + trace + quadrupole)`, which is `O(|r|^{−3})`.
    pub fn residual(&self) -> f64 {
        self.exact - (self.dipole + self.trace + self.quadrupole)
    }
}

/// Expands the planar log-sum at `target = (x, y)` to second order.
///
/// Targets inside the disk that encloses the sources are rejected, since
/// the expansion does not converge there.
pub fn log_sum_multipole(system: &ParticleSystem, target: [f64; 2]) -> Result<MultipoleTerms, OracleError> {
    let [x, y] = target;
    let r2 = x * x + y * y;
    let extent = system
        .positions()
        .iter()
        .map(|p| (p[0] * p[0] + p[1] * p[1]).sqrt())
        .fold(0.0, f64::max);
    if !(r2.sqrt() > extent) {
        return Err(OracleError::Rejected(format!(
            "target radius {:.3e} is inside the source disk of radius {extent:.3e}",
            r2.sqrt()
        )));
    }
    let (mut exact, mut px, mut py, mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    for (p, &q) in system.positions().iter().zip(system.charges()) {
        let (a, b) = (p[0], p[1]);
        let w = (-2.0 * (x * a + y * b) + a * a + b * b) / r2;
        exact += q * w.ln_1p();
        px += q * a;
        py += q * b;
        sxx += q * a * a;
        syy += q * b * b;
        sxy += q * a * b;
    }
    Ok(MultipoleTerms {
        exact,
        dipole: -2.0 / r2 * (x * px + y * py),
        trace: (sxx + syy) / r2,
        quadrupole: -2.0 / (r2 * r2) * (x * x * sxx + y * y * syy + 2.0 * x * y * sxy),
    })
}
