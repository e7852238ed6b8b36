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

use pewald_core::{build_image_vectors, build_kgrid, Components, EwaldParams, ParticleSystem, Periodicity, PotentialResult};
use pewald_specfun::QuadratureConfig;
use rayon::prelude::*;

use crate::kspace::{KSpace1, KSpace2, KSpace3};
use crate::real::{real_space_at, self_term};
use crate::targets::{resolve, EvalTargets, Target};
use crate::zero::{zero_1p_log_form, zero_1p_terms, zero_2p_at, ZeroModeVariant};
use crate::EwaldError;

/// Evaluation options that do not change the mathematical result.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EwaldOptions {
    /// Tolerances for the incomplete Bessel quadrature of the wire sum.
    pub quadrature: QuadratureConfig,
    /// Evaluate targets on the rayon thread pool. Each target is summed in
    /// the same order either way.
    pub parallel: bool,
    #[doc(hidden)]
    pub zero_mode_variant: ZeroModeVariant,
}

enum KSpace<'a> {
    P1(KSpace1<'a>),
    P2(KSpace2<'a>),
    P3(KSpace3<'a>),
}

/// Total potential and its four components at each target.
///
/// The system and any explicit points are first wrapped into the box along
/// the periodic directions.
pub fn ewald_potential(
    system: &ParticleSystem,
    mode: Periodicity,
    params: &EwaldParams,
    targets: &EvalTargets,
    opts: &EwaldOptions,
) -> Result<PotentialResult, EwaldError> {
    params.validate()?;
    system.require_neutral()?;
    let sys = system.wrapped(mode);
    let targets = match targets {
        EvalTargets::Sources => EvalTargets::Sources,
        EvalTargets::Points(p) => {
            let dummy = ParticleSystem::new(p.clone(), vec![0.0; p.len()], sys.box_lengths());
            match dummy {
                Ok(d) => EvalTargets::Points(d.wrapped(mode).positions().to_vec()),
                Err(_) if p.is_empty() => EvalTargets::Points(Vec::new()),
                Err(e) => return Err(e.into()),
            }
        }
    };
    let resolved = resolve(&sys, mode, &targets)?;

    let xi = params.xi;
    let box_lengths = sys.box_lengths();
    let images = build_image_vectors(box_lengths, mode, params.real_layers);
    let grid = build_kgrid(box_lengths, mode, params.k_max)?;
    let kspace = match mode {
        Periodicity::P1 => KSpace::P1(KSpace1::new(&sys, xi, &grid, &opts.quadrature)?),
        Periodicity::P2 => KSpace::P2(KSpace2::new(&sys, xi, &grid)?),
        Periodicity::P3 => KSpace::P3(KSpace3::new(&sys, xi, &grid)?),
    };

    let eval = |(i, t): (usize, &Target)| -> Result<Components, EwaldError> {
        let real = real_space_at(&sys, &images, xi, params.r_cut, i, t)?;
        let kspace = match &kspace {
            KSpace::P1(k) => k.at(t)?.0,
            KSpace::P2(k) => k.at(t)?.0,
            KSpace::P3(k) => k.at(t).0,
        };
        let zero_mode = match mode {
            Periodicity::P3 => 0.0,
            Periodicity::P2 => zero_2p_at(&sys, xi, t),
            Periodicity::P1 => zero_1p(&sys, xi, i, t, opts.zero_mode_variant)?,
        };
        let self_term = t.source.map_or(0.0, |m| self_term(sys.charges()[m], xi));
        Ok(Components {
            real,
            kspace,
            zero_mode,
            self_term,
        })
    };

    let components: Result<Vec<_>, _> = if opts.parallel {
        resolved.par_iter().enumerate().map(eval).collect()
    } else {
        resolved.iter().enumerate().map(eval).collect()
    };
    Ok(PotentialResult::from_components(components?))
}

fn zero_1p(
    sys: &ParticleSystem,
    xi: f64,
    index: usize,
    t: &Target,
    variant: ZeroModeVariant,
) -> Result<f64, EwaldError> {
    if t.source.is_some() || variant != ZeroModeVariant::Derived {
        return zero_1p_terms(sys, xi, t, variant);
    }
    match zero_1p_log_form(sys, xi, index, t) {
        Err(EwaldError::OnAxis { .. }) => zero_1p_terms(sys, xi, t, variant),
        other => other,
    }
}
