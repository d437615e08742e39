//! Independent oracles shared by the integration suites. Nothing here calls
//! the transform formulas; each value is rebuilt from first principles.
#![allow(dead_code)]

use ellfm_core::rational::{int, q};
use ellfm_core::{ChernCharacter, DivisorClass, GradedClass, Rational, Side, SurfaceGeometry};
use rand::Rng;

/// `td(x) = 1 + x/2 + x²/12` for a line bundle with first Chern class `x`.
pub fn todd_line(geo: &SurfaceGeometry, x: &DivisorClass) -> GradedClass {
    GradedClass { deg0: int(1), deg2: x.scale(&q(1, 2)), deg4: geo.intersect(x, x).unwrap() / int(12) }
}

/// Multiplicative inverse of a class with `deg0 = 1`: `1 − y + y²`.
pub fn invert_unit(geo: &SurfaceGeometry, c: &GradedClass) -> GradedClass {
    assert_eq!(c.deg0, int(1));
    let y = GradedClass { deg0: int(0), deg2: c.deg2.clone(), deg4: c.deg4.clone() };
    let y2 = y.mul(&y, geo).unwrap();
    GradedClass { deg0: int(1), deg2: -y.deg2.clone(), deg4: -y.deg4 + y2.deg4 }
}

/// Todd class of `T_{X/B} = [j*T_{P/B}] − [N_{X/P}]` for the Weierstrass
/// embedding `X ⊂ P = Proj S(O ⊕ ω² ⊕ ω³)`, `O_P(1)|_X = O(3H)`:
/// `j*T_{P/B} + O = O(3H) ⊕ O(3H + 2p*E) ⊕ O(3H + 3p*E)`, `N = O(9H + 6p*E)`.
pub fn todd_from_weierstrass(geo: &SurfaceGeometry) -> GradedClass {
    let e = i64::from(geo.e);
    let l = |h: i64, f: i64| DivisorClass::from_ints(Side::X, h, f);
    let mut td = GradedClass::one(Side::X);
    for summand in [l(3, 0), l(3, 2 * e), l(3, 3 * e)] {
        td = td.mul(&todd_line(geo, &summand), geo).unwrap();
    }
    td.mul(&invert_unit(geo, &todd_line(geo, &l(9, 6 * e))), geo).unwrap()
}

/// `1 − ½p⁻¹E + H·p⁻¹E + (13/12)(p⁻¹E)²` evaluated with the pairing.
pub fn todd_from_expansion(geo: &SurfaceGeometry) -> GradedClass {
    let pe = DivisorClass::new(Side::X, int(0), geo.e());
    let h = DivisorClass::section_class(Side::X);
    let deg4 = geo.intersect(&h, &pe).unwrap() + q(13, 12) * geo.intersect(&pe, &pe).unwrap();
    GradedClass { deg0: int(1), deg2: pe.scale(&q(-1, 2)), deg4 }
}

/// `ch(O_D)` for an effective divisor `D`, from `0 → O(−D) → O → O_D → 0`.
pub fn structure_sheaf_of_divisor(geo: &SurfaceGeometry, d: &DivisorClass) -> ChernCharacter {
    // ch(O(−D)) = (1, −D, ½D²)
    ChernCharacter::new(int(0), d.clone(), -geo.intersect(d, d).unwrap() / int(2))
}

/// `ch(A ⊗ L)` for a torsion `A` of rank 0 and a line bundle `L = O(T)`.
pub fn twist_rank_zero(geo: &SurfaceGeometry, a: &ChernCharacter, t: &DivisorClass) -> ChernCharacter {
    assert_eq!(a.rank, int(0));
    let ch2 = &a.ch2 + geo.intersect(&a.c1, t).unwrap();
    ChernCharacter::new(int(0), a.c1.clone(), ch2)
}

/// `ch(O_Θ ⊗ p̂*ω)` with `ω = O_B(−E)`.
pub fn twisted_section(geo: &SurfaceGeometry) -> ChernCharacter {
    let theta = DivisorClass::section_class(Side::Xhat);
    let omega = DivisorClass::new(Side::Xhat, int(0), -geo.e());
    twist_rank_zero(geo, &structure_sheaf_of_divisor(geo, &theta), &omega)
}

/// Colength of `𝔪^k` at a smooth curve point, counting monomials `t^i`, `i < k`.
pub fn colength_smooth(k: u32) -> u64 {
    (0..k).count() as u64
}

/// Colength of `𝔪^k` in `k[[x, y]]/(xy)`, counting monomials `x^i y^j` with
/// `ij = 0` and `i + j < k`.
pub fn colength_node(k: u32) -> u64 {
    let mut count = 0;
    for i in 0..k {
        for j in 0..k {
            if i * j == 0 && i + j < k {
                count += 1;
            }
        }
    }
    count
}

pub fn random_chern<R: Rng>(rng: &mut R, side: Side, bound: i64) -> ChernCharacter {
    ChernCharacter::from_ints(
        side,
        rng.gen_range(-bound..=bound),
        rng.gen_range(-bound..=bound),
        rng.gen_range(-bound..=bound),
        rng.gen_range(-bound..=bound),
    )
}

/// `{p/q : |p| ≤ 6, q ∈ {1, 2, 3}}`.
pub fn rational_grid() -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    for den in 1..=3 {
        for num in -6..=6 {
            let x = q(num, den);
            if !out.contains(&x) {
                out.push(x);
            }
        }
    }
    out
}

pub fn geometry_grid() -> Vec<SurfaceGeometry> {
    (0..=2).flat_map(|g| (0..=4).map(move |e| SurfaceGeometry::new(g, e))).collect()
}
