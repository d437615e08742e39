//! Slope stability with respect to `aH + bμ` and S-equivalence bookkeeping.
//!
//! A subsheaf `G ⊂ F` of rank `n' < n` with `c' = c1(G)·H`, `d' = c1(G)·μ`
//! destabilizes `F` for `H' = aH + bμ` exactly when
//!
//! ```text
//! [n·c1(G) − n'·c1(F)]·H' = a(n·c' − n'·c) + b·n·d' > 0      (when d = 0)
//! ```
//!
//! Strict inequality only: equality is the semistable boundary.
//!
//! For a fibrewise semistable `F` of degree 0 every subsheaf has `d' ≤ 0`.
//! Candidates with `d' < 0` stop destabilizing once `b` is large; those with
//! `d' = 0` do not depend on `b` at all. [`threshold_b0`] computes the exact
//! threshold over a finite box of candidate invariants. Whether a box holds
//! every actual subsheaf of a given sheaf cannot be decided from invariants,
//! so the reported value is a lower bound for the threshold of the sheaf.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::fourier_mukai::{ChernCharacter, FibreInvariants, Polarization};
use crate::geometry::{Side, SurfaceGeometry};
use crate::rational::{int, is_positive, render, Rational};

/// `(c1·(aH + bμ)) / rank`.
pub fn slope(geo: &SurfaceGeometry, f: &ChernCharacter, pol: &Polarization) -> Result<Rational> {
    f.expect_side(Side::X)?;
    let FibreInvariants { rank, fibre_degree, section_degree, .. } = f.fibre_invariants(geo);
    if !is_positive(&rank) {
        return Err(Error::NonPositiveRank(rank));
    }
    Ok((pol.a() * section_degree + pol.b() * fibre_degree) / rank)
}

/// Numerical shadow `(n', c', d')` of a possible subsheaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsheafCandidate {
    pub n_prime: u32,
    pub c_prime: i64,
    pub d_prime: i64,
}

impl SubsheafCandidate {
    pub fn new(n_prime: u32, c_prime: i64, d_prime: i64) -> Self {
        Self { n_prime, c_prime, d_prime }
    }
}

impl fmt::Display for SubsheafCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n'={}, c'={}, d'={})", self.n_prime, self.c_prime, self.d_prime)
    }
}

/// Rank and section degree `(n, c)` of `F`, checking `n > n' ≥ 1`.
fn rank_and_section(
    geo: &SurfaceGeometry,
    cand: &SubsheafCandidate,
    f: &ChernCharacter,
) -> Result<(Rational, Rational)> {
    f.expect_side(Side::X)?;
    let n = f.rank.clone();
    if cand.n_prime < 1 || int(cand.n_prime.into()) >= n {
        return Err(Error::RankViolation { n, n_prime: cand.n_prime });
    }
    Ok((n, f.section_degree(geo)))
}

/// `[n·c1(G) − n'·c1(F)]·(aH + bμ)`; positive means destabilizing.
pub fn destabilizing_margin(
    geo: &SurfaceGeometry,
    cand: &SubsheafCandidate,
    f: &ChernCharacter,
    pol: &Polarization,
) -> Result<Rational> {
    let (n, c) = rank_and_section(geo, cand, f)?;
    let d = f.fibre_degree(geo);
    let (n_p, c_p, d_p) = (int(cand.n_prime.into()), int(cand.c_prime), int(cand.d_prime));
    Ok(pol.a() * (&n * c_p - &n_p * c) + pol.b() * (&n * d_p - n_p * d))
}

pub fn is_destabilizing(
    geo: &SurfaceGeometry,
    cand: &SubsheafCandidate,
    f: &ChernCharacter,
    pol: &Polarization,
) -> Result<bool> {
    Ok(is_positive(&destabilizing_margin(geo, cand, f, pol)?))
}

/// Inclusive ranges for `c'` and `d'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CandidateBox {
    c_min: i64,
    c_max: i64,
    d_min: i64,
    d_max: i64,
}

impl CandidateBox {
    pub fn new(c_min: i64, c_max: i64, d_min: i64, d_max: i64) -> Result<Self> {
        if c_min > c_max || d_min > d_max {
            return Err(Error::InvertedBox(format!("c' in [{c_min}, {c_max}], d' in [{d_min}, {d_max}]")));
        }
        Ok(Self { c_min, c_max, d_min, d_max })
    }

    /// `|c'| ≤ c_bound`, `|d'| ≤ d_bound`.
    pub fn symmetric(c_bound: u32, d_bound: u32) -> Self {
        let (c, d) = (i64::from(c_bound), i64::from(d_bound));
        Self { c_min: -c, c_max: c, d_min: -d, d_max: d }
    }

    pub fn c_range(&self) -> (i64, i64) {
        (self.c_min, self.c_max)
    }

    pub fn d_range(&self) -> (i64, i64) {
        (self.d_min, self.d_max)
    }

    /// Every candidate of rank `1 ≤ n' < n` in lexicographic `(n', c', d')` order.
    pub fn candidates(&self, n: u32) -> impl Iterator<Item = SubsheafCandidate> + '_ {
        (1..n.max(1)).flat_map(move |np| {
            (self.c_min..=self.c_max).flat_map(move |cp| {
                (self.d_min..=self.d_max).map(move |dp| SubsheafCandidate::new(np, cp, dp))
            })
        })
    }
}

impl fmt::Display for CandidateBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c' in [{}, {}], d' in [{}, {}]", self.c_min, self.c_max, self.d_min, self.d_max)
    }
}

fn integral_rank(f: &ChernCharacter) -> Result<u32> {
    if !f.rank.is_integer() {
        return Err(Error::NonIntegralRank(f.rank.clone()));
    }
    if !is_positive(&f.rank) {
        return Err(Error::NonPositiveRank(f.rank.clone()));
    }
    u32::try_from(f.rank.numer()).map_err(|_| Error::NonIntegralRank(f.rank.clone()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Destabilizer {
    pub candidate: SubsheafCandidate,
    pub margin: Rational,
}

/// All candidates in `bounds` that strictly destabilize `f`, largest margin
/// first, ties in lexicographic `(n', c', d')` order.
pub fn destabilizer_scan(
    geo: &SurfaceGeometry,
    f: &ChernCharacter,
    pol: &Polarization,
    bounds: &CandidateBox,
) -> Result<Vec<Destabilizer>> {
    f.expect_side(Side::X)?;
    let n = integral_rank(f)?;
    let mut hits = Vec::new();
    for candidate in bounds.candidates(n) {
        let margin = destabilizing_margin(geo, &candidate, f, pol)?;
        if is_positive(&margin) {
            hits.push(Destabilizer { candidate, margin });
        }
    }
    hits.sort_by(|x, y| y.margin.cmp(&x.margin).then(x.candidate.cmp(&y.candidate)));
    Ok(hits)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdReport {
    /// Smallest `b ≥ 0` beyond which no `d' < 0` candidate destabilizes.
    pub b0: Rational,
    /// Candidate attaining `b0`, if any attains a nonnegative bound.
    pub binding: Option<SubsheafCandidate>,
    /// Max of `n·c' − n'·c` over the `d' < 0` candidates scanned.
    pub rho_used: Option<Rational>,
    /// `d' = 0` candidates with `n·c' > n'·c`; these destabilize for every `b`.
    pub b_independent: Vec<SubsheafCandidate>,
    pub bounds: CandidateBox,
}

/// Exact `b₀` over `bounds` for a degree-zero `f` and fixed `a > 0`:
/// `max over d' < 0 of a(n·c' − n'·c) / (n·(−d'))`, clamped at 0.
pub fn threshold_b0(
    geo: &SurfaceGeometry,
    f: &ChernCharacter,
    a: &Rational,
    bounds: &CandidateBox,
) -> Result<ThresholdReport> {
    f.expect_side(Side::X)?;
    if !is_positive(a) {
        return Err(Error::NonPositivePolarization { a: a.clone(), b: int(1) });
    }
    let d = f.fibre_degree(geo);
    if !d.is_zero() {
        return Err(Error::NonzeroFibreDegree {
            degree: d,
            gate: "b0 threshold requires a fibrewise semistable sheaf of degree 0",
        });
    }
    let n = integral_rank(f)?;
    let c = f.section_degree(geo);
    let n_rat = int(n.into());

    let mut best: Option<(Rational, SubsheafCandidate)> = None;
    let mut rho: Option<Rational> = None;
    let mut b_independent = Vec::new();
    for cand in bounds.candidates(n) {
        let excess = &n_rat * int(cand.c_prime) - int(cand.n_prime.into()) * &c;
        match cand.d_prime.cmp(&0) {
            Ordering::Less => {
                let bound = a * &excess / (&n_rat * int(-cand.d_prime));
                if best.as_ref().map_or(true, |(b, _)| bound > *b) {
                    best = Some((bound, cand));
                }
                if rho.as_ref().map_or(true, |r| excess > *r) {
                    rho = Some(excess);
                }
            }
            Ordering::Equal if excess.is_positive() => b_independent.push(cand),
            _ => {}
        }
    }

    let (b0, binding) = match best {
        Some((bound, cand)) if !bound.is_negative() => (bound, Some(cand)),
        _ => (int(0), None),
    };
    Ok(ThresholdReport { b0, binding, rho_used: rho, b_independent, bounds: *bounds })
}

/// Opaque label for a point `ξ*` of a fibre of `X̂`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointId(pub String);

impl fmt::Display for PointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for PointId {
    fn from(s: &str) -> Self {
        PointId(s.to_owned())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SEquivalencePart {
    pub point: PointId,
    pub multiplicity: u32,
    /// Marks the singular point of the fibre, where the factor is not locally free.
    pub singular: bool,
}

impl SEquivalencePart {
    pub fn new(point: impl Into<PointId>, multiplicity: u32, singular: bool) -> Self {
        Self { point: point.into(), multiplicity, singular }
    }
}

/// S-equivalence class of a fibrewise torsion-free semistable sheaf of degree
/// 0 on a fibre: the multiset `{(ξᵢ*, nᵢ)}` of its Jordan–Hölder factors.
///
/// Parts sharing a point are merged. At most one point may be singular.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SEquivalenceClass {
    parts: BTreeMap<PointId, (u32, bool)>,
}

impl SEquivalenceClass {
    pub fn new(parts: impl IntoIterator<Item = SEquivalencePart>) -> Result<Self> {
        let mut merged: BTreeMap<PointId, (u32, bool)> = BTreeMap::new();
        for part in parts {
            if part.multiplicity == 0 {
                return Err(Error::InvalidSEquivalence(format!("point {} has multiplicity 0", part.point)));
            }
            match merged.get_mut(&part.point) {
                Some((m, singular)) => {
                    if *singular != part.singular {
                        return Err(Error::InvalidSEquivalence(format!(
                            "point {} is marked both singular and smooth",
                            part.point
                        )));
                    }
                    *m += part.multiplicity;
                }
                None => {
                    merged.insert(part.point, (part.multiplicity, part.singular));
                }
            }
        }
        if merged.is_empty() {
            return Err(Error::InvalidSEquivalence("no parts (total rank 0)".to_owned()));
        }
        let singular: Vec<_> = merged.iter().filter(|(_, (_, s))| *s).map(|(p, _)| p.0.as_str()).collect();
        if singular.len() > 1 {
            return Err(Error::InvalidSEquivalence(format!(
                "more than one singular point: {}",
                singular.join(", ")
            )));
        }
        Ok(Self { parts: merged })
    }

    pub fn rank(&self) -> u64 {
        self.parts.values().map(|(m, _)| u64::from(*m)).sum()
    }

    /// `n₀`, the multiplicity at the singular point (0 if none).
    pub fn singular_multiplicity(&self) -> u32 {
        self.parts.values().find(|(_, s)| *s).map_or(0, |(m, _)| *m)
    }

    pub fn parts(&self) -> impl Iterator<Item = SEquivalencePart> + '_ {
        self.parts.iter().map(|(p, (m, s))| SEquivalencePart::new(p.clone(), *m, *s))
    }

    /// `F₀ = ∏ 𝔪ᵢ^{nᵢ}` and its colength.
    ///
    /// At a smooth point `O/𝔪ᵏ` has length `k`; at the singular point of a
    /// plane cubic (multiplicity 2) it has length `2k − 1`.
    pub fn fitting_cycle(&self) -> FittingCycle {
        let cycle: Vec<_> = self.parts.iter().map(|(p, (m, _))| (p.clone(), *m)).collect();
        let length = self
            .parts
            .values()
            .map(|&(m, singular)| if singular { 2 * u64::from(m) - 1 } else { u64::from(m) })
            .sum();
        FittingCycle { cycle, length }
    }

    /// The point `n₀ξ₀* + … + n_rξ_r*` of the symmetric product.
    pub fn sym_point(&self) -> SymmetricPoint {
        SymmetricPoint(self.parts.iter().map(|(p, (m, _))| (p.clone(), *m)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittingCycle {
    pub cycle: Vec<(PointId, u32)>,
    pub length: u64,
}

/// Effective zero-cycle `Σ nᵢ ξᵢ*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricPoint(pub BTreeMap<PointId, u32>);

impl SymmetricPoint {
    pub fn degree(&self) -> u64 {
        self.0.values().map(|&m| u64::from(m)).sum()
    }
}

impl fmt::Display for SymmetricPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self
            .0
            .iter()
            .map(|(p, &m)| if m == 1 { format!("{p}*") } else { format!("{m}{p}*") })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Display for ThresholdReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b0 = {}", render(&self.b0))?;
        if let Some(c) = &self.binding {
            write!(f, " (binding {c})")?;
        }
        write!(f, " over {}", self.bounds)
    }
}
