//! A line bundle on a non-reduced cover whose transform is unstable.
//!
//! Take `g = 0`, `C = 2Θ` and `L = p̂*ω² ⊗ O_C`, which sits in
//!
//! ```text
//! 0 → p̂*ω ⊗ O_Θ → L → p̂*ω² ⊗ O_Θ → 0.
//! ```
//!
//! Its transform is a rank-2 bundle `F` with `0 → O_X → F → p*ω → 0`. On `C`
//! the slope of `L` is `−4e` and that of the subsheaf is `−3e`, so `L` is
//! unstable unless `e = 0`; on `X`, `O_X` destabilizes `F` for every `aH + bμ`
//! unless `e = 0`. [`verify`] recomputes all of this two ways.

use num_traits::Zero;

use crate::error::Result;
use crate::fourier_mukai::{fm_inverse_ch, ChernCharacter, Polarization};
use crate::geometry::{DivisorClass, Side, SurfaceGeometry};
use crate::rational::{int, q, Rational};
use crate::spectral::{CoverClass, HilbertPolynomial};
use crate::stability::{is_destabilizing, slope, SubsheafCandidate};

/// Polarizations `aH + bμ` sampled for the destabilization check.
pub const SAMPLE_COEFFICIENTS: [(i64, i64); 6] = [(1, 100), (1, 3), (1, 1), (2, 1), (7, 1), (100, 1)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemarkReport {
    pub e: u32,
    /// `ch(F)` from `ch(O_X) + ch(p*ω)`.
    pub bundle: ChernCharacter,
    /// `ch(L)` from the filtration of `L` by twists of `O_Θ`.
    pub line_bundle_ch: ChernCharacter,
    /// Inverse transform of `ch(L)`; must equal `bundle`.
    pub bundle_via_transform: ChernCharacter,
    pub line_slope: Rational,
    pub sub_slope: Rational,
    pub line_slope_via_hilbert: Rational,
    pub sub_slope_via_hilbert: Rational,
    /// Polarizations (as `(a, b)`) at which `O_X` strictly destabilizes `F`.
    pub destabilized_at: Vec<(Rational, Rational)>,
    pub sampled: usize,
}

impl RemarkReport {
    pub fn expected_line_slope(&self) -> Rational {
        int(-4 * i64::from(self.e))
    }

    pub fn expected_sub_slope(&self) -> Rational {
        int(-3 * i64::from(self.e))
    }

    pub fn slopes_match(&self) -> bool {
        self.line_slope == self.expected_line_slope()
            && self.line_slope_via_hilbert == self.expected_line_slope()
            && self.sub_slope == self.expected_sub_slope()
            && self.sub_slope_via_hilbert == self.expected_sub_slope()
    }

    /// True when `O_X` destabilizes at every sample, false when at none;
    /// `None` for a mixed outcome.
    pub fn destabilized(&self) -> Option<bool> {
        match self.destabilized_at.len() {
            0 => Some(false),
            k if k == self.sampled => Some(true),
            _ => None,
        }
    }

    /// `true` when `e = 0` and nothing destabilizes strictly.
    pub fn on_stable_boundary(&self) -> bool {
        self.e == 0 && self.destabilized_at.is_empty() && self.line_slope.is_zero()
    }

    pub fn passed(&self) -> bool {
        self.slopes_match()
            && self.bundle == self.bundle_via_transform
            && self.destabilized() == Some(self.e > 0)
    }
}

/// `ch(O_Θ ⊗ p̂*ω^j)` on `X̂`, from `0 → O(−Θ) → O → O_Θ → 0` and `ω = O_B(−E)`.
fn twisted_section_ch(geo: &SurfaceGeometry, j: i64) -> Result<ChernCharacter> {
    let theta = DivisorClass::section_class(Side::Xhat);
    let o_theta = ChernCharacter::new(int(0), theta.clone(), -geo.intersect(&theta, &theta)? / int(2));
    let twist = DivisorClass::new(Side::Xhat, int(0), -geo.e() * int(j));
    // (0, D, s)·(1, T, 0) = (0, D, s + D·T)
    let ch2 = &o_theta.ch2 + geo.intersect(&o_theta.c1, &twist)?;
    Ok(ChernCharacter::new(int(0), o_theta.c1, ch2))
}

/// `χ(B, ω^j(m))` on `B = ℙ¹`.
fn chi_on_section(geo: &SurfaceGeometry, j: i64) -> HilbertPolynomial {
    HilbertPolynomial::new(int(1), int(1) - geo.e() * int(j))
}

pub fn verify(e: u32) -> Result<RemarkReport> {
    let geo = SurfaceGeometry::new(0, e);
    let cover = CoverClass::new(geo, 2, 0)?;

    let o_x = ChernCharacter::structure_sheaf(Side::X);
    let pullback_omega = ChernCharacter::new(int(1), DivisorClass::new(Side::X, int(0), -geo.e()), int(0));
    let bundle = o_x.checked_add(&pullback_omega)?;

    let line_bundle_ch = twisted_section_ch(&geo, 1)?.checked_add(&twisted_section_ch(&geo, 2)?)?;
    let bundle_via_transform = fm_inverse_ch(&geo, &line_bundle_ch)?;

    let line = cover.degree_on_cover(&bundle)?;
    let sub = cover.degree_on_cover(&o_x)?;

    let sub_poly = chi_on_section(&geo, 1);
    let quot_poly = chi_on_section(&geo, 2);
    let line_poly = HilbertPolynomial::new(
        &sub_poly.leading + &quot_poly.leading,
        &sub_poly.constant + &quot_poly.constant,
    );
    let line_h = cover.simpson_from_hilbert(&line_poly)?;
    let sub_h = cover.simpson_from_hilbert(&sub_poly)?;

    let o_x_candidate = SubsheafCandidate::new(1, 0, 0);
    let mut destabilized_at = Vec::new();
    for &(a, b) in &SAMPLE_COEFFICIENTS {
        let pol = Polarization::new(q(a, 1), q(b, 1))?;
        let by_inequality = is_destabilizing(&geo, &o_x_candidate, &bundle, &pol)?;
        let by_slopes = slope(&geo, &o_x, &pol)? > slope(&geo, &bundle, &pol)?;
        debug_assert_eq!(by_inequality, by_slopes);
        if by_inequality && by_slopes {
            destabilized_at.push((pol.a().clone(), pol.b().clone()));
        }
    }

    Ok(RemarkReport {
        e,
        bundle,
        line_bundle_ch,
        bundle_via_transform,
        line_slope: line.slope(),
        sub_slope: sub.slope(),
        line_slope_via_hilbert: line_h.slope(),
        sub_slope_via_hilbert: sub_h.slope(),
        destabilized_at,
        sampled: SAMPLE_COEFFICIENTS.len(),
    })
}
