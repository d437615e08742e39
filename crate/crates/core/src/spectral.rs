//! Spectral covers `C = nΘ + kμ̂ ⊂ X̂` and sheaves of pure dimension one on them.
//!
//! A cover of degree `n` over `B` is polarized by `μ_C = μ̂ ∩ C`, of degree `n`.
//! The Simpson rank and degree of a sheaf `G` on `C` are read off its Hilbert
//! polynomial
//!
//! ```text
//! P(G, m) = χ(C, G(mμ_C)) = r_C·n·m + d_C + r_C·χ(C)
//! ```

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fourier_mukai::{ChernCharacter, FibreInvariants};
use crate::geometry::{DivisorClass, Side, SurfaceGeometry};
use crate::rational::{half, int, is_positive, render, Rational};

/// Numerical class `nΘ + kμ̂` of a cover finite of degree `n ≥ 1` over `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoverClass {
    geo: SurfaceGeometry,
    n: u32,
    k: i64,
}

/// `χ(O_C)`, `p = 1 − χ(C)` and `ℓ = C·Θ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverInvariants {
    pub chi: Rational,
    pub p: Rational,
    pub ell: Rational,
}

impl CoverClass {
    pub fn new(geo: SurfaceGeometry, n: u32, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidCoverDegree(n));
        }
        Ok(Self { geo, n, k })
    }

    pub fn geometry(&self) -> &SurfaceGeometry {
        &self.geo
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn fibre_coefficient(&self) -> i64 {
        self.k
    }

    pub fn class(&self) -> DivisorClass {
        DivisorClass::from_ints(Side::Xhat, self.n.into(), self.k)
    }

    pub fn chi(&self) -> Rational {
        self.geo
            .chi_divisor_curve(&self.class())
            .expect("a cover class has positive fibre degree")
    }

    pub fn invariants(&self) -> CoverInvariants {
        let chi = self.chi();
        let ell = self.self_section_pairing();
        CoverInvariants { p: int(1) - &chi, chi, ell }
    }

    /// `ℓ = C·Θ = −ne + k`.
    fn self_section_pairing(&self) -> Rational {
        self.geo
            .intersect(&self.class(), &DivisorClass::section_class(Side::Xhat))
            .expect("both classes on X̂")
    }

    fn n_rat(&self) -> Rational {
        int(self.n.into())
    }

    /// Simpson `(r_C, d_C)` of a sheaf with Hilbert polynomial `poly`.
    pub fn simpson_from_hilbert(&self, poly: &HilbertPolynomial) -> Result<CoverSheafInvariants> {
        if !is_positive(&poly.leading) {
            return Err(Error::NonPositiveLeading(poly.leading.clone()));
        }
        let rank = &poly.leading / self.n_rat();
        let degree = &poly.constant - &rank * self.chi();
        Ok(CoverSheafInvariants { cover: *self, rank_on_cover: rank, degree_on_cover: degree })
    }

    /// Rank and degree on `C` of `Ĝ = S¹(G)` for a WIT₁ sheaf `G` on `X` whose
    /// transform is supported on `C`:
    ///
    /// ```text
    /// r_C = n'/n,   d_C = c' − n'e + n'(1 − g) − (n'/n)·χ(C)
    /// ```
    pub fn degree_on_cover(&self, g: &ChernCharacter) -> Result<CoverSheafInvariants> {
        g.c1.expect_side(Side::X)?;
        let FibreInvariants { rank, fibre_degree, section_degree, .. } =
            g.fibre_invariants(&self.geo);
        if !fibre_degree.is_zero() {
            return Err(Error::NonzeroFibreDegree {
                degree: fibre_degree,
                gate: "sheaves transforming onto a spectral cover",
            });
        }
        let rank_on_cover = &rank / self.n_rat();
        let degree = section_degree - &rank * self.geo.e()
            + &rank * (int(1) - self.geo.genus())
            - &rank_on_cover * self.chi();
        Ok(CoverSheafInvariants { cover: *self, rank_on_cover, degree_on_cover: degree })
    }

    /// `ch(Ŝ(L))` for `L` of pure dimension one, rank one and degree `r` on `C`:
    /// `(n, ϖ⁻¹(C) − nH + (r − p + 1 + n(g − 1) − ℓ)μ, −(ne + ℓ))`.
    pub fn cover_sheaf_to_surface_ch(&self, r: &Rational) -> ChernCharacter {
        let CoverInvariants { p, ell, .. } = self.invariants();
        let (n, g, e) = (self.n_rat(), self.geo.genus(), self.geo.e());
        let fibre = r - p + int(1) + &n * (g - int(1)) - &ell;
        let c1 = self.class().varpi_inverse().expect("cover class on X̂")
            + DivisorClass::new(Side::X, -&n, fibre);
        let ch2 = -(&n * e + ell);
        ChernCharacter::new(n, c1, ch2)
    }

    /// `ch(L)` of the same sheaf viewed on `X̂`: `(0, C, r − ½C²)`.
    pub fn cover_sheaf_ch_on_cover_side(&self, r: &Rational) -> ChernCharacter {
        let c = self.class();
        let self_int = self.geo.intersect(&c, &c).expect("both classes on X̂");
        ChernCharacter::new(int(0), c, r - half(&self_int))
    }
}

impl fmt::Display for CoverClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.class().fmt(f)
    }
}

/// `P(m) = leading·m + constant`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPolynomial {
    pub leading: Rational,
    pub constant: Rational,
}

impl HilbertPolynomial {
    pub fn new(leading: Rational, constant: Rational) -> Self {
        Self { leading, constant }
    }

    pub fn eval(&self, m: &Rational) -> Rational {
        &self.leading * m + &self.constant
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·m + {}", render(&self.leading), render(&self.constant))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSheafInvariants {
    pub cover: CoverClass,
    pub rank_on_cover: Rational,
    pub degree_on_cover: Rational,
}

impl CoverSheafInvariants {
    /// `d_C / r_C`; panics when the rank is zero.
    pub fn slope(&self) -> Rational {
        assert!(!self.rank_on_cover.is_zero(), "slope of a rank-zero sheaf");
        &self.degree_on_cover / &self.rank_on_cover
    }

    pub fn hilbert_polynomial(&self) -> HilbertPolynomial {
        HilbertPolynomial {
            leading: &self.rank_on_cover * self.cover.n_rat(),
            constant: &self.degree_on_cover + &self.rank_on_cover * self.cover.chi(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier_mukai::fm_inverse_ch;
    use crate::rational::q;

    fn cover(g: u32, e: u32, n: u32, k: i64) -> CoverClass {
        CoverClass::new(SurfaceGeometry::new(g, e), n, k).unwrap()
    }

    fn on_x(rank: i64, h: i64, f: i64, ch2: i64) -> ChernCharacter {
        ChernCharacter::from_ints(Side::X, rank, h, f, ch2)
    }

    #[test]
    fn rejects_degree_zero() {
        assert_eq!(
            CoverClass::new(SurfaceGeometry::new(0, 1), 0, 3),
            Err(Error::InvalidCoverDegree(0))
        );
    }

    #[test]
    fn invariants_examples() {
        for g in 0..3u32 {
            for e in 0..5u32 {
                let inv = cover(g, e, 1, 0).invariants();
                assert_eq!(inv.chi, int(1 - g as i64));
                assert_eq!(inv.p, int(g.into()));
                assert_eq!(inv.ell, -int(e.into()));
            }
        }
        for e in 0..5i64 {
            let inv = cover(0, e as u32, 2, 0).invariants();
            assert_eq!((inv.chi, inv.p, inv.ell), (int(e + 2), int(-e - 1), int(-2 * e)));
        }
        let inv = cover(0, 1, 1, 1).invariants();
        assert_eq!((inv.chi, inv.p, inv.ell), (int(0), int(1), int(0)));
    }

    #[test]
    fn remark_hilbert_polynomials() {
        for e in 0..6i64 {
            let c = cover(0, e as u32, 2, 0);
            let line = c.simpson_from_hilbert(&HilbertPolynomial::new(int(2), int(-3 * e + 2))).unwrap();
            assert_eq!((line.rank_on_cover.clone(), line.degree_on_cover.clone()), (int(1), int(-4 * e)));
            assert_eq!(line.slope(), int(-4 * e));
            let sub = c.simpson_from_hilbert(&HilbertPolynomial::new(int(1), int(-e + 1))).unwrap();
            assert_eq!((sub.rank_on_cover.clone(), sub.degree_on_cover.clone()), (q(1, 2), q(-3 * e, 2)));
            assert_eq!(sub.slope(), int(-3 * e));
        }
    }

    #[test]
    fn normalized_structure_polynomial_has_degree_zero() {
        for (n, k) in [(1, 0), (2, 3), (3, -1)] {
            let c = cover(1, 2, n, k);
            let inv = c
                .simpson_from_hilbert(&HilbertPolynomial::new(int(n.into()), c.chi()))
                .unwrap();
            assert_eq!((inv.rank_on_cover, inv.degree_on_cover), (int(1), int(0)));
        }
    }

    #[test]
    fn hilbert_from_simpson_examples() {
        let e = 3;
        let c = cover(0, e, 2, 0);
        let inv = CoverSheafInvariants { cover: c, rank_on_cover: int(1), degree_on_cover: int(-4 * e as i64) };
        assert_eq!(inv.hilbert_polynomial(), HilbertPolynomial::new(int(2), int(-3 * e as i64 + 2)));
        let c = cover(2, 1, 3, 4);
        let inv = CoverSheafInvariants { cover: c, rank_on_cover: int(1), degree_on_cover: int(0) };
        assert_eq!(inv.hilbert_polynomial(), HilbertPolynomial::new(int(3), c.chi()));
    }

    #[test]
    fn nonpositive_leading_rejected() {
        let c = cover(0, 1, 2, 0);
        assert!(matches!(
            c.simpson_from_hilbert(&HilbertPolynomial::new(int(0), int(1))),
            Err(Error::NonPositiveLeading(_))
        ));
    }

    #[test]
    fn degree_on_cover_examples() {
        for e in 0..6i64 {
            let c = cover(0, e as u32, 2, 0);
            let f = c.degree_on_cover(&on_x(2, 0, -e, 0)).unwrap();
            assert_eq!((f.rank_on_cover, f.degree_on_cover), (int(1), int(-4 * e)));
            let o = c.degree_on_cover(&ChernCharacter::structure_sheaf(Side::X)).unwrap();
            assert_eq!((o.rank_on_cover, o.degree_on_cover), (q(1, 2), q(-3 * e, 2)));
        }
        for g in 0..3 {
            for n in 1..5u32 {
                let c = cover(g, 2, n, 0);
                let inv = c.degree_on_cover(&on_x(n.into(), 0, 0, 0)).unwrap();
                let n = int(n.into());
                let expected = -&n * int(2) + &n * (int(1) - int(g.into())) - c.chi();
                assert_eq!((inv.rank_on_cover, inv.degree_on_cover), (int(1), expected));
            }
        }
    }

    #[test]
    fn degree_on_cover_rejects_nonzero_fibre_degree() {
        let c = cover(0, 1, 2, 0);
        assert!(matches!(c.degree_on_cover(&on_x(2, 1, 0, 0)), Err(Error::NonzeroFibreDegree { .. })));
        let hat = ChernCharacter::structure_sheaf(Side::Xhat);
        assert!(matches!(c.degree_on_cover(&hat), Err(Error::WrongSide { .. })));
    }

    #[test]
    fn surface_character_examples() {
        for e in 0..6i64 {
            let c = cover(0, e as u32, 2, 0);
            assert_eq!(c.cover_sheaf_to_surface_ch(&int(-4 * e)), on_x(2, 0, -e, 0));
        }
        for g in 0..4 {
            for e in 0..5i64 {
                let c = cover(g, e as u32, 1, 0);
                assert_eq!(c.cover_sheaf_to_surface_ch(&int(0)), on_x(1, 0, e, 0));
            }
        }
    }

    #[test]
    fn cover_side_character_examples() {
        for e in 0..6i64 {
            let two = cover(0, e as u32, 2, 0);
            assert_eq!(
                two.cover_sheaf_ch_on_cover_side(&int(-4 * e)),
                ChernCharacter::new(int(0), DivisorClass::from_ints(Side::Xhat, 2, 0), int(-2 * e))
            );
            let one = cover(0, e as u32, 1, 0);
            assert_eq!(
                one.cover_sheaf_ch_on_cover_side(&int(0)),
                ChernCharacter::new(int(0), DivisorClass::from_ints(Side::Xhat, 1, 0), q(e, 2))
            );
        }
    }

    proptest::proptest! {
        #[test]
        fn inverse_of_cover_side_matches_surface_character(
            g in 0u32..4, e in 0u32..6, n in 1u32..8, k in -8i64..8, rn in -40i64..40, rd in 1i64..6
        ) {
            let c = cover(g, e, n, k);
            let r = q(rn, rd);
            let via_inverse = fm_inverse_ch(c.geometry(), &c.cover_sheaf_ch_on_cover_side(&r)).unwrap();
            proptest::prop_assert_eq!(via_inverse, c.cover_sheaf_to_surface_ch(&r));
        }

        #[test]
        fn surface_character_has_rank_n_and_degree_zero(
            g in 0u32..4, e in 0u32..6, n in 1u32..8, k in -8i64..8, rn in -40i64..40, rd in 1i64..6
        ) {
            let c = cover(g, e, n, k);
            let ch = c.cover_sheaf_to_surface_ch(&q(rn, rd));
            proptest::prop_assert_eq!(ch.rank.clone(), int(n.into()));
            proptest::prop_assert_eq!(ch.fibre_degree(c.geometry()), int(0));
        }

        #[test]
        fn simpson_hilbert_round_trip(
            n in 1u32..8, k in -8i64..8, ln in 1i64..50, ld in 1i64..7, cn in -50i64..50, cd in 1i64..7
        ) {
            let c = cover(1, 3, n, k);
            let poly = HilbertPolynomial::new(q(ln, ld), q(cn, cd));
            proptest::prop_assert_eq!(c.simpson_from_hilbert(&poly).unwrap().hilbert_polynomial(), poly);
        }
    }
}
