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

use std::f64::consts::PI;

use crate::{CoreError, Periodicity};

/// Nonzero wave vectors of one periodicity mode with `|k| ≤ k_max`.
///
/// Components along free directions are zero: 1P grids hold `(0, 0, k₃)`,
/// 2P grids `(k₁, k₂, 0)`. Vectors are ordered lexicographically by their
/// integer index, and the set is closed under negation.
#[derive(Debug, Clone, PartialEq)]
pub struct KGrid {
    pub mode: Periodicity,
    pub k_max: f64,
    pub indices: Vec<[i64; 3]>,
    pub vectors: Vec<[f64; 3]>,
}

impl KGrid {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn norms(&self) -> impl Iterator<Item = f64> + '_ {
        self.vectors.iter().map(norm)
    }

    pub fn require_mode(&self, mode: Periodicity) -> Result<(), CoreError> {
        if self.mode == mode {
            Ok(())
        } else {
            Err(CoreError::InvalidArgument(format!(
                "k-grid built for {} used in a {} sum",
                self.mode, mode
            )))
        }
    }
}

fn norm(k: &[f64; 3]) -> f64 {
    (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]).sqrt()
}

pub fn build_kgrid(box_lengths: [f64; 3], mode: Periodicity, k_max: f64) -> Result<KGrid, CoreError> {
    if !(k_max > 0.0 && k_max.is_finite()) {
        return Err(CoreError::InvalidParams(format!("k_max must be positive, got {k_max}")));
    }
    let axes = mode.periodic_axes();
    let mut range = [0i64; 3];
    for i in 0..3 {
        if axes[i] {
            range[i] = (k_max * box_lengths[i] / (2.0 * PI)).floor() as i64;
        }
    }
    let mut indices = Vec::new();
    let mut vectors = Vec::new();
    for n1 in -range[0]..=range[0] {
        for n2 in -range[1]..=range[1] {
            for n3 in -range[2]..=range[2] {
                if n1 == 0 && n2 == 0 && n3 == 0 {
                    continue;
                }
                let n = [n1, n2, n3];
                let k = [0, 1, 2].map(|i| 2.0 * PI * n[i] as f64 / box_lengths[i]);
                if norm(&k) <= k_max {
                    indices.push(n);
                    vectors.push(k);
                }
            }
        }
    }
    Ok(KGrid {
        mode,
        k_max,
        indices,
        vectors,
    })
}

/// A lattice translation `p ∈ P_D` with its integer index and shell number
/// (max-norm of the index).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImageVector {
    pub index: [i64; 3],
    pub shift: [f64; 3],
    pub shell: u32,
}

/// Integer indices of max-norm exactly `shell` along the periodic
/// directions, in lexicographic order.
pub fn shell_indices(mode: Periodicity, shell: u32) -> Vec<[i64; 3]> {
    let s = shell as i64;
    let axes = mode.periodic_axes();
    let r = axes.map(|a| if a { s } else { 0 });
    let mut out = Vec::new();
    for i in -r[0]..=r[0] {
        for j in -r[1]..=r[1] {
            for k in -r[2]..=r[2] {
                if i.abs().max(j.abs()).max(k.abs()) == s {
                    out.push([i, j, k]);
                }
            }
        }
    }
    out
}

/// All translations with index in `[−layers, layers]` per periodic
/// direction, ordered by shell and lexicographically within a shell.
pub fn build_image_vectors(box_lengths: [f64; 3], mode: Periodicity, layers: u32) -> Vec<ImageVector> {
    let mut out = Vec::new();
    for shell in 0..=layers {
        for index in shell_indices(mode, shell) {
            let shift = [0, 1, 2].map(|i| index[i] as f64 * box_lengths[i]);
            out.push(ImageVector { index, shift, shell });
        }
    }
    out
}
