//! Chern characters on `X` and `X̂` and the relative Fourier–Mukai transform.
//!
//! The transform `S: D(X) → D(X̂)` has the relative Poincaré sheaf as kernel;
//! Grothendieck–Riemann–Roch for `π̂` turns it into an affine-linear map on
//! `(n, c1, s)`, written below in terms of the four scalars
//! `n = ch0`, `d = c1·μ`, `c = c1·H`, `s = ch2`. The inverse transform `Ŝ` has
//! the symmetric formula on `X̂`, and `Ŝ∘S = [−1]` shows up here as `−id`.
//!
//! A [`ChernCharacter`] is the alternating sum over a complex, so
//! `fm_transform_ch` returns `ch(S⁰) − ch(S¹)`. For a WIT₁ sheaf the sheaf
//! `F̂ = S¹(F)` has the negated character; see [`wit1_transform_ch`].

use std::fmt;
use std::ops::{Add, Neg};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{DivisorClass, Side, SurfaceGeometry};
use crate::rational::{half, int, is_positive, render, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChernCharacter {
    pub side: Side,
    pub rank: Rational,
    pub c1: DivisorClass,
    /// Coefficient of the point class `w` (resp. `ŵ`).
    pub ch2: Rational,
}

/// The scalars `(n, d, c, s)` every transform formula is written in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibreInvariants {
    pub rank: Rational,
    /// `d = c1·μ`, the relative degree.
    pub fibre_degree: Rational,
    /// `c = c1·H` (or `c1·Θ`).
    pub section_degree: Rational,
    pub ch2: Rational,
}

impl ChernCharacter {
    pub fn new(rank: Rational, c1: DivisorClass, ch2: Rational) -> Self {
        Self { side: c1.side, rank, c1, ch2 }
    }

    /// `(rank, section·S + fibre·F, ch2)` with integer entries.
    pub fn from_ints(side: Side, rank: i64, section: i64, fibre: i64, ch2: i64) -> Self {
        Self::new(int(rank), DivisorClass::from_ints(side, section, fibre), int(ch2))
    }

    pub fn zero(side: Side) -> Self {
        Self::from_ints(side, 0, 0, 0, 0)
    }

    /// `ch(O_X)` (or `ch(O_X̂)`).
    pub fn structure_sheaf(side: Side) -> Self {
        Self::from_ints(side, 1, 0, 0, 0)
    }

    pub fn fibre_degree(&self, geo: &SurfaceGeometry) -> Rational {
        geo.intersect(&self.c1, &DivisorClass::fibre(self.side))
            .expect("c1 lives on the character's side")
    }

    pub fn section_degree(&self, geo: &SurfaceGeometry) -> Rational {
        geo.intersect(&self.c1, &DivisorClass::section_class(self.side))
            .expect("c1 lives on the character's side")
    }

    pub fn fibre_invariants(&self, geo: &SurfaceGeometry) -> FibreInvariants {
        FibreInvariants {
            rank: self.rank.clone(),
            fibre_degree: self.fibre_degree(geo),
            section_degree: self.section_degree(geo),
            ch2: self.ch2.clone(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let c1 = self.c1.checked_add(&other.c1)?;
        Ok(Self::new(&self.rank + &other.rank, c1, &self.ch2 + &other.ch2))
    }

    pub(crate) fn expect_side(&self, expected: Side) -> Result<()> {
        self.c1.expect_side(expected)
    }
}

impl fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", render(&self.rank), self.c1, render(&self.ch2))
    }
}

impl Add for ChernCharacter {
    type Output = ChernCharacter;

    fn add(self, rhs: ChernCharacter) -> ChernCharacter {
        self.checked_add(&rhs).expect("Chern characters on the same side")
    }
}

impl Neg for ChernCharacter {
    type Output = ChernCharacter;

    fn neg(self) -> ChernCharacter {
        ChernCharacter::new(-self.rank, -self.c1, -self.ch2)
    }
}

/// Polarization `aH + bμ` with `a, b > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polarization {
    a: Rational,
    b: Rational,
}

impl Polarization {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if is_positive(&a) && is_positive(&b) {
            Ok(Self { a, b })
        } else {
            Err(Error::NonPositivePolarization { a, b })
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn class(&self) -> DivisorClass {
        DivisorClass::new(Side::X, self.a.clone(), self.b.clone())
    }
}

/// `ch(S(F))` for `F` on `X`:
///
/// ```text
/// ch0 = d
/// ch1 = −ϖ(c1(F)) + d·p̂*E + (d − n)Θ + (c − ½ed + s)μ̂
/// ch2 = −c − de + ½ne
/// ```
pub fn fm_transform_ch(geo: &SurfaceGeometry, f: &ChernCharacter) -> Result<ChernCharacter> {
    f.expect_side(Side::X)?;
    let FibreInvariants { rank: n, fibre_degree: d, section_degree: c, ch2: s } =
        f.fibre_invariants(geo);
    let e = geo.e();
    let c1 = -f.c1.varpi()?
        + geo.relative_canonical_class(Side::Xhat).scale(&d)
        + DivisorClass::new(Side::Xhat, &d - &n, &c - half(&(&e * &d)) + &s);
    let ch2 = -&c - &d * &e + half(&(&n * &e));
    Ok(ChernCharacter::new(d, c1, ch2))
}

/// `ch(Ŝ(G))` for `G` on `X̂`:
///
/// ```text
/// ch0 = d̂
/// ch1 = ϖ⁻¹(c1(G)) − n̂·p*E − (d̂ + n̂)H + (ŝ + n̂e − ĉ − ½ed̂)μ
/// ch2 = −(ĉ + d̂e + ½n̂e)
/// ```
pub fn fm_inverse_ch(geo: &SurfaceGeometry, g: &ChernCharacter) -> Result<ChernCharacter> {
    g.expect_side(Side::Xhat)?;
    let FibreInvariants { rank: n, fibre_degree: d, section_degree: c, ch2: s } =
        g.fibre_invariants(geo);
    let e = geo.e();
    let c1 = g.c1.varpi_inverse()?
        - geo.relative_canonical_class(Side::X).scale(&n)
        + DivisorClass::new(Side::X, -(&d + &n), &s + &n * &e - &c - half(&(&e * &d)));
    let ch2 = -(&c + &d * &e + half(&(&n * &e)));
    Ok(ChernCharacter::new(d, c1, ch2))
}

/// Character of the sheaf `F̂ = S¹(F)` for a WIT₁ sheaf `F`.
///
/// Only the degree-zero condition is checkable from invariants; the caller
/// asserts that `F` is fibrewise torsion-free and semistable.
pub fn wit1_transform_ch(geo: &SurfaceGeometry, f: &ChernCharacter) -> Result<ChernCharacter> {
    f.expect_side(Side::X)?;
    let d = f.fibre_degree(geo);
    if !d.is_zero() {
        return Err(Error::NonzeroFibreDegree {
            degree: d,
            gate: "WIT1 transform requires fibrewise degree 0",
        });
    }
    Ok(-fm_transform_ch(geo, f)?)
}
