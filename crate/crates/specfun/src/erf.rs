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

// The rational approximations below originate from FreeBSD msun
// (s_erf.c):
//
// ====================================================
// Copyright (C) 1993 by Sun Microsystems, Inc. All rights reserved.
//
// Developed at SunPro, a Sun Microsystems, Inc. business.
// Permission to use, copy, modify, and distribute this
// software is freely granted, provided that this notice
// is preserved.
// ====================================================

//! Error function, complementary error function and the scaled
//! complementary error function `erfcx(x) = exp(x²) erfc(x)`.
//!
//! `erf`/`erfc` follow the msun piecewise rational scheme (max error below
//! one ulp). `erfcx` reuses the same tail approximation with the Gaussian
//! factor cancelled analytically, so it stays finite for all `x ≥ 0`.

use std::f64::consts::PI;

const ERX: f64 = 8.450_629_115_104_675_292_97e-01;
// erf on [0, 0.84375]
const EFX8: f64 = 1.027_033_336_764_100_690_53e+00;
const PP0: f64 = 1.283_791_670_955_125_585_61e-01;
const PP1: f64 = -3.250_421_072_470_014_993_70e-01;
const PP2: f64 = -2.848_174_957_559_851_047_66e-02;
const PP3: f64 = -5.770_270_296_489_441_591_57e-03;
const PP4: f64 = -2.376_301_665_665_016_260_84e-05;
const QQ1: f64 = 3.979_172_239_591_553_528_19e-01;
const QQ2: f64 = 6.502_224_998_876_729_444_85e-02;
const QQ3: f64 = 5.081_306_281_875_765_627_76e-03;
const QQ4: f64 = 1.324_947_380_043_216_445_26e-04;
const QQ5: f64 = -3.960_228_278_775_368_123_20e-06;
// erf on [0.84375, 1.25]
const PA0: f64 = -2.362_118_560_752_659_440_77e-03;
const PA1: f64 = 4.148_561_186_837_483_316_66e-01;
const PA2: f64 = -3.722_078_760_357_013_238_47e-01;
const PA3: f64 = 3.183_466_199_011_617_536_74e-01;
const PA4: f64 = -1.108_946_942_823_966_774_76e-01;
const PA5: f64 = 3.547_830_432_561_823_593_71e-02;
const PA6: f64 = -2.166_375_594_868_790_843_00e-03;
const QA1: f64 = 1.064_208_804_008_442_282_86e-01;
const QA2: f64 = 5.403_979_177_021_710_489_37e-01;
const QA3: f64 = 7.182_865_441_419_626_628_68e-02;
const QA4: f64 = 1.261_712_198_087_616_421_12e-01;
const QA5: f64 = 1.363_708_391_202_905_073_62e-02;
const QA6: f64 = 1.198_449_984_679_910_741_70e-02;
// erfc on [1.25, 1/0.35]
const RA0: f64 = -9.864_944_034_847_148_227_05e-03;
const RA1: f64 = -6.938_585_727_071_817_643_72e-01;
const RA2: f64 = -1.055_862_622_532_329_098_14e+01;
const RA3: f64 = -6.237_533_245_032_600_603_96e+01;
const RA4: f64 = -1.623_966_694_625_734_703_55e+02;
const RA5: f64 = -1.846_050_929_067_110_359_94e+02;
const RA6: f64 = -8.128_743_550_630_659_342_46e+01;
const RA7: f64 = -9.814_329_344_169_145_485_92e+00;
const SA1: f64 = 1.965_127_166_743_925_712_92e+01;
const SA2: f64 = 1.376_577_541_435_190_426_00e+02;
const SA3: f64 = 4.345_658_774_752_292_288_21e+02;
const SA4: f64 = 6.453_872_717_332_678_803_36e+02;
const SA5: f64 = 4.290_081_400_275_678_333_86e+02;
const SA6: f64 = 1.086_350_055_417_794_351_34e+02;
const SA7: f64 = 6.570_249_770_319_281_701_35e+00;
const SA8: f64 = -6.042_441_521_485_809_874_38e-02;
// erfc on [1/0.35, 28]
const RB0: f64 = -9.864_942_924_700_099_285_97e-03;
const RB1: f64 = -7.992_832_376_805_230_065_74e-01;
const RB2: f64 = -1.775_795_491_775_475_198_89e+01;
const RB3: f64 = -1.606_363_848_558_219_160_62e+02;
const RB4: f64 = -6.375_664_433_683_896_277_22e+02;
const RB5: f64 = -1.025_095_131_611_077_249_54e+03;
const RB6: f64 = -4.835_191_916_086_513_970_19e+02;
const SB1: f64 = 3.033_806_074_348_245_829_24e+01;
const SB2: f64 = 3.257_925_129_965_739_188_26e+02;
const SB3: f64 = 1.536_729_586_084_436_959_94e+03;
const SB4: f64 = 3.199_858_219_508_595_539_08e+03;
const SB5: f64 = 2.553_050_406_433_164_425_83e+03;
const SB6: f64 = 4.745_285_412_069_553_672_15e+02;
const SB7: f64 = -2.244_095_244_658_581_833_62e+01;

#[inline]
fn high_word(x: f64) -> u32 {
    (x.to_bits() >> 32) as u32
}

#[inline]
fn clear_low_word(x: f64) -> f64 {
    f64::from_bits(x.to_bits() & 0xffff_ffff_0000_0000)
}

/// `x + x*R(x²)` core on `|x| < 0.84375`; returns `R(x²)`.
#[inline]
fn small_ratio(x: f64) -> f64 {
    let z = x * x;
    let r = PP0 + z * (PP1 + z * (PP2 + z * (PP3 + z * PP4)));
    let s = 1.0 + z * (QQ1 + z * (QQ2 + z * (QQ3 + z * (QQ4 + z * QQ5))));
    r / s
}

/// `erfc(|x|)` for `|x|` in `[0.84375, 1.25)`.
#[inline]
fn erfc_near_one(ax: f64) -> f64 {
    let s = ax - 1.0;
    let p = PA0 + s * (PA1 + s * (PA2 + s * (PA3 + s * (PA4 + s * (PA5 + s * PA6)))));
    let q = 1.0 + s * (QA1 + s * (QA2 + s * (QA3 + s * (QA4 + s * (QA5 + s * QA6)))));
    1.0 - ERX - p / q
}

/// `R/S` of the tail form `erfc(x) = exp(-x² - 0.5625 + R/S) / x`,
/// valid for `x` in `[1.25, 28]`.
#[inline]
fn tail_correction(ax: f64) -> f64 {
    let s = 1.0 / (ax * ax);
    if ax < 1.0 / 0.35 {
        let r = RA0 + s * (RA1 + s * (RA2 + s * (RA3 + s * (RA4 + s * (RA5 + s * (RA6 + s * RA7))))));
        let big_s = 1.0
            + s * (SA1 + s * (SA2 + s * (SA3 + s * (SA4 + s * (SA5 + s * (SA6 + s * (SA7 + s * SA8)))))));
        r / big_s
    } else {
        let r = RB0 + s * (RB1 + s * (RB2 + s * (RB3 + s * (RB4 + s * (RB5 + s * RB6)))));
        let big_s =
            1.0 + s * (SB1 + s * (SB2 + s * (SB3 + s * (SB4 + s * (SB5 + s * (SB6 + s * SB7))))));
        r / big_s
    }
}

/// `erfc(|x|)` for `|x|` in `[1.25, 28)`.
#[inline]
fn erfc_tail(ax: f64) -> f64 {
    let z = clear_low_word(ax);
    (-z * z - 0.5625).exp() * ((z - ax) * (z + ax) + tail_correction(ax)).exp() / ax
}

/// Error function.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return x;
    }
    if x.is_infinite() {
        return x.signum();
    }
    let ix = high_word(x) & 0x7fff_ffff;
    let ax = x.abs();
    if ix < 0x3feb_0000 {
        if ix < 0x3e30_0000 {
            return 0.125 * (8.0 * x + EFX8 * x);
        }
        return x + x * small_ratio(x);
    }
    let y = if ix < 0x3ff4_0000 {
        1.0 - erfc_near_one(ax)
    } else if ix < 0x4018_0000 {
        1.0 - erfc_tail(ax)
    } else {
        1.0 - f64::MIN_POSITIVE
    };
    if x < 0.0 {
        -y
    } else {
        y
    }
}

/// Complementary error function `1 - erf(x)`, computed without cancellation
/// for large positive `x`.
pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return x;
    }
    if x.is_infinite() {
        return if x > 0.0 { 0.0 } else { 2.0 };
    }
    let ix = high_word(x) & 0x7fff_ffff;
    let negative = x < 0.0;
    let ax = x.abs();
    if ix < 0x3feb_0000 {
        if ix < 0x3c70_0000 {
            return 1.0 - x;
        }
        let y = small_ratio(x);
        if negative || ix < 0x3fd0_0000 {
            return 1.0 - (x + x * y);
        }
        return 0.5 - (x - 0.5 + x * y);
    }
    if ix < 0x403c_0000 {
        let tail = if ix < 0x3ff4_0000 {
            erfc_near_one(ax)
        } else {
            erfc_tail(ax)
        };
        return if negative { 2.0 - tail } else { tail };
    }
    if negative {
        2.0 - f64::MIN_POSITIVE
    } else {
        0.0
    }
}

/// `exp(x²)` with the rounding error of `x*x` folded back in.
#[inline]
fn exp_square(x: f64) -> f64 {
    let hi = x * x;
    let lo = x.mul_add(x, -hi);
    hi.exp() * (1.0 + lo)
}

/// Scaled complementary error function `exp(x²) erfc(x)`.
///
/// Finite for every `x ≥ 0` (it decays like `1/(x√π)`); returns
/// `+∞` once `exp(x²)` overflows for very negative `x`.
pub fn erfcx(x: f64) -> f64 {
    if x.is_nan() {
        return x;
    }
    if x < 0.0 {
        if x * x > 709.0 {
            let two_exp = 2.0 * exp_square(x);
            return if two_exp.is_finite() {
                two_exp - erfcx(-x)
            } else {
                f64::INFINITY
            };
        }
        return 2.0 * exp_square(x) - erfcx(-x);
    }
    if x.is_infinite() {
        return 0.0;
    }
    if x < 1.25 {
        return exp_square(x) * erfc(x);
    }
    if x < 28.0 {
        return (tail_correction(x) - 0.5625).exp() / x;
    }
    // asymptotic series; at x = 28 the tenth term is below 1e-22
    let inv2x2 = 0.5 / (x * x);
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..10 {
        term *= -((2 * k - 1) as f64) * inv2x2;
        sum += term;
    }
    sum / (x * PI.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn erfc_at_zero_is_one() {
        assert_eq!(erfc(0.0), 1.0);
        assert_eq!(erfcx(0.0), 1.0);
    }

    #[test]
    fn reflection_identity() {
        for x in [0.3, 1.7, 4.0] {
            assert_relative_eq!(erfc(-x) + erfc(x), 2.0, max_relative = 1e-15);
        }
    }

    #[test]
    fn erfc_two_matches_quadrature_value() {
        // (2/√π)∫_2^∞ e^{-t²} dt by adaptive quadrature
        assert_relative_eq!(erfc(2.0), 0.004_677_734_981_047_266, max_relative = 1e-14);
    }

    #[test]
    fn erfcx_large_argument_asymptote() {
        let v = erfcx(30.0);
        assert!(v.is_finite());
        let asym = 1.0 / (30.0 * PI.sqrt());
        assert!((v / asym - 1.0).abs() < 1e-3);
    }

    #[test]
    fn erfcx_matches_definition() {
        for x in [0.5, 1.0, 2.0] {
            assert_relative_eq!(erfcx(x) * (-x * x).exp(), erfc(x), max_relative = 1e-14);
        }
    }

    #[test]
    fn erfcx_overflow_is_infinite() {
        assert_eq!(erfcx(-30.0), f64::INFINITY);
        assert!(erfcx(-26.0).is_finite());
    }

    #[test]
    fn erfcx_is_continuous_across_branches() {
        for x0 in [1.25_f64, 1.0 / 0.35, 28.0] {
            let lo = erfcx(x0 * (1.0 - 1e-15));
            let hi = erfcx(x0);
            assert_relative_eq!(lo, hi, max_relative = 1e-14);
        }
    }

    proptest! {
        #[test]
        fn erfc_is_decreasing(a in -5.0f64..6.0, d in 1e-3f64..1.0) {
            prop_assert!(erfc(a + d) < erfc(a));
        }

        #[test]
        fn erfcx_agrees_with_erfc_on_overlap(x in 0.0f64..25.0) {
            let direct = erfc(x) * exp_square(x);
            prop_assert!((erfcx(x) - direct).abs() <= 1e-13 * direct);
        }
    }
}
