//! Intersection theory on the sublattice spanned by the section and a fibre.
//!
//! On `X` the lattice is `ℤH ⊕ ℤμ` with `H² = −e`, `H·μ = 1`, `μ² = 0`, where
//! `e = deg E` and `ω_{X/B} ≅ p*O_B(E)`. On `X̂` the same relations hold for
//! `Θ` and `μ̂`. The isomorphism `ϖ: X → X̂` of `B`-schemes sends `H ↦ Θ` and
//! `μ ↦ μ̂`, so it is an isometry of these lattices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{half, int, render, Rational};

/// Which surface a class lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    X,
    Xhat,
}

impl Side {
    fn section_symbol(self) -> &'static str {
        match self {
            Side::X => "H",
            Side::Xhat => "Θ",
        }
    }

    fn fibre_symbol(self) -> &'static str {
        match self {
            Side::X => "μ",
            Side::Xhat => "μ̂",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::X => "X",
            Side::Xhat => "Xhat",
        })
    }
}

/// Genus of the base curve and the Weierstrass degree `e = −H²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceGeometry {
    pub genus: u32,
    pub e: u32,
}

impl SurfaceGeometry {
    pub fn new(genus: u32, e: u32) -> Self {
        Self { genus, e }
    }

    pub fn e(&self) -> Rational {
        int(self.e.into())
    }

    pub fn genus(&self) -> Rational {
        int(self.genus.into())
    }

    /// Gram matrix of the pairing in the basis (section, fibre).
    pub fn pairing_matrix(&self) -> [[Rational; 2]; 2] {
        [[-self.e(), int(1)], [int(1), int(0)]]
    }

    /// `u·v = −e·u_H·v_H + u_H·v_μ + u_μ·v_H`.
    pub fn intersect(&self, u: &DivisorClass, v: &DivisorClass) -> Result<Rational> {
        u.same_side(v)?;
        Ok(-self.e() * &u.section * &v.section + &u.section * &v.fibre + &u.fibre * &v.section)
    }

    /// Absolute canonical class `K = p*(K_B + E) = (2g − 2 + e)·fibre`.
    pub fn canonical_class(&self, side: Side) -> DivisorClass {
        let coeff = int(2) * self.genus() - int(2) + self.e();
        DivisorClass::new(side, int(0), coeff)
    }

    /// Relative canonical class `K_{X/B} = p*E ≡ e·fibre`.
    pub fn relative_canonical_class(&self, side: Side) -> DivisorClass {
        DivisorClass::new(side, int(0), self.e())
    }

    /// Todd class of the virtual relative tangent bundle, `1 − ½p*E + e·w`.
    pub fn todd_relative(&self, side: Side) -> GradedClass {
        GradedClass {
            deg0: int(1),
            deg2: -self.relative_canonical_class(side).scale(&half(&int(1))),
            deg4: self.e(),
        }
    }

    /// `χ(O_C) = −½·C·(C + K)` for a curve `C ⊂ X̂` of positive fibre degree.
    pub fn chi_divisor_curve(&self, curve: &DivisorClass) -> Result<Rational> {
        curve.expect_side(Side::Xhat)?;
        let fibre = DivisorClass::fibre(Side::Xhat);
        if !self.intersect(curve, &fibre)?.is_positive() {
            return Err(Error::NotEffectiveCurve(curve.to_string()));
        }
        let with_k = curve + &self.canonical_class(Side::Xhat);
        Ok(-half(&self.intersect(curve, &with_k)?))
    }
}

/// `section·S + fibre·F` where `(S, F)` is `(H, μ)` on `X` and `(Θ, μ̂)` on `X̂`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub side: Side,
    pub section: Rational,
    pub fibre: Rational,
}

impl DivisorClass {
    pub fn new(side: Side, section: Rational, fibre: Rational) -> Self {
        Self { side, section, fibre }
    }

    pub fn from_ints(side: Side, section: i64, fibre: i64) -> Self {
        Self::new(side, int(section), int(fibre))
    }

    pub fn zero(side: Side) -> Self {
        Self::from_ints(side, 0, 0)
    }

    /// `H` or `Θ`.
    pub fn section_class(side: Side) -> Self {
        Self::from_ints(side, 1, 0)
    }

    /// `μ` or `μ̂`.
    pub fn fibre(side: Side) -> Self {
        Self::from_ints(side, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.section.is_zero() && self.fibre.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.side, &self.section * k, &self.fibre * k)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_side(other)?;
        Ok(Self::new(self.side, &self.section + &other.section, &self.fibre + &other.fibre))
    }

    /// Transport along `ϖ`: `αH + βμ ↦ αΘ + βμ̂`.
    pub fn varpi(&self) -> Result<Self> {
        self.expect_side(Side::X)?;
        Ok(Self::new(Side::Xhat, self.section.clone(), self.fibre.clone()))
    }

    /// Transport along `ϖ⁻¹`: `αΘ + βμ̂ ↦ αH + βμ`.
    pub fn varpi_inverse(&self) -> Result<Self> {
        self.expect_side(Side::Xhat)?;
        Ok(Self::new(Side::X, self.section.clone(), self.fibre.clone()))
    }

    pub(crate) fn expect_side(&self, expected: Side) -> Result<()> {
        if self.side == expected {
            Ok(())
        } else {
            Err(Error::WrongSide { expected, found: self.side })
        }
    }

    fn same_side(&self, other: &Self) -> Result<()> {
        if self.side == other.side {
            Ok(())
        } else {
            Err(Error::MixedSides { left: self.side, right: other.side })
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.side.section_symbol();
        let m = self.side.fibre_symbol();
        match (self.section.is_zero(), self.fibre.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}{}", coeff(&self.section), s),
            (true, false) => write!(f, "{}{}", coeff(&self.fibre), m),
            (false, false) => {
                let sign = if self.fibre.is_negative() { "-" } else { "+" };
                write!(f, "{}{}{}{}{}", coeff(&self.section), s, sign, coeff(&self.fibre.abs()), m)
            }
        }
    }
}

fn coeff(x: &Rational) -> String {
    match render(x).as_str() {
        "1" => String::new(),
        "-1" => "-".to_owned(),
        r if x.is_integer() => r.to_owned(),
        r => format!("({r})"),
    }
}

// Panicking operators are for internal use on classes already known to share
// a side; public fallible entry points go through `checked_add`/`intersect`.
impl Add<&DivisorClass> for &DivisorClass {
    type Output = DivisorClass;

    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.checked_add(rhs).expect("divisor classes on the same side")
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;

    fn add(self, rhs: DivisorClass) -> DivisorClass {
        &self + &rhs
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;

    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        &self + &(-rhs)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;

    fn neg(self) -> DivisorClass {
        DivisorClass::new(self.side, -self.section, -self.fibre)
    }
}

impl Mul<DivisorClass> for Rational {
    type Output = DivisorClass;

    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        rhs.scale(&self)
    }
}

/// Element `deg0 + deg2 + deg4·w` of the truncated Chow ring, restricted to
/// the sublattice in degree 2. `w` is the class of a point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedClass {
    pub deg0: Rational,
    pub deg2: DivisorClass,
    pub deg4: Rational,
}

impl GradedClass {
    pub fn one(side: Side) -> Self {
        Self { deg0: int(1), deg2: DivisorClass::zero(side), deg4: int(0) }
    }

    pub fn side(&self) -> Side {
        self.deg2.side
    }

    /// Product truncated above degree 4.
    pub fn mul(&self, other: &Self, geo: &SurfaceGeometry) -> Result<Self> {
        let deg2 = self.deg2.scale(&other.deg0).checked_add(&other.deg2.scale(&self.deg0))?;
        let deg4 = &self.deg0 * &other.deg4
            + &self.deg4 * &other.deg0
            + geo.intersect(&self.deg2, &other.deg2)?;
        Ok(Self { deg0: &self.deg0 * &other.deg0, deg2, deg4 })
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let point = match self.side() {
            Side::X => "w",
            Side::Xhat => "ŵ",
        };
        let mut terms = Vec::new();
        if !self.deg0.is_zero() {
            terms.push(render(&self.deg0));
        }
        if !self.deg2.is_zero() {
            terms.push(self.deg2.to_string());
        }
        if !self.deg4.is_zero() {
            terms.push(format!("{}{point}", coeff(&self.deg4)));
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            if let Some(rest) = t.strip_prefix('-') {
                out.push_str(&format!(" - {rest}"));
            } else if let Some(rest) = t.strip_prefix("(-") {
                out.push_str(&format!(" - ({rest}"));
            } else {
                out.push_str(&format!(" + {t}"));
            }
        }
        f.write_str(&out)
    }
}
