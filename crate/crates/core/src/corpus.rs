//! Named example maps and families.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::ballmap::RationalBallMap;
use crate::blaschke::BlaschkeProduct;
use crate::error::Result;
use crate::homotopy::{self, HomotopyFamily};
use crate::poly::Polynomial;
use crate::sample::Sampler;
use crate::whitney::{self, WhitneyTerm};
use crate::Settings;

fn sqrt(x: f64) -> f64 {
    Float::sqrt(x)
}

fn mono(n: usize, comps: &[(&[u32], f64)]) -> RationalBallMap {
    RationalBallMap::monomial(n, comps).expect("well-formed corpus map")
}

/// `(z, zw, zw², zw³, w⁴)`.
pub fn ex2_1_f() -> RationalBallMap {
    mono(2, &[(&[1, 0], 1.0), (&[1, 1], 1.0), (&[1, 2], 1.0), (&[1, 3], 1.0), (&[0, 4], 1.0)])
}

/// `(−w², zw, −zw², z²w, z²)`.
pub fn ex2_1_g() -> RationalBallMap {
    mono(2, &[(&[0, 2], -1.0), (&[1, 1], 1.0), (&[1, 2], -1.0), (&[2, 1], 1.0), (&[2, 0], 1.0)])
}

/// `(z, zw, w²)`.
pub fn ex2_1_h() -> RationalBallMap {
    mono(2, &[(&[1, 0], 1.0), (&[1, 1], 1.0), (&[0, 2], 1.0)])
}

/// Whitney map `(ζ₁, ζ₂, ζ₁ζ₃, ζ₂ζ₃, ζ₃²)`.
pub fn whitney_w() -> RationalBallMap {
    mono(3, &[(&[1, 0, 0], 1.0), (&[0, 1, 0], 1.0), (&[1, 0, 1], 1.0), (&[0, 1, 1], 1.0), (&[0, 0, 2], 1.0)])
}

/// `(z, w, 0)`.
pub fn faran_f() -> RationalBallMap {
    RationalBallMap::identity(2).padded(3)
}

/// `(z², zw, w)`.
pub fn faran_g() -> RationalBallMap {
    mono(2, &[(&[2, 0], 1.0), (&[1, 1], 1.0), (&[0, 1], 1.0)])
}

/// `(z², √2 zw, w²)`.
pub fn faran_h() -> RationalBallMap {
    mono(2, &[(&[2, 0], 1.0), (&[1, 1], sqrt(2.0)), (&[0, 2], 1.0)])
}

/// `(z³, √3 zw, w³)`.
pub fn faran_phi() -> RationalBallMap {
    mono(2, &[(&[3, 0], 1.0), (&[1, 1], sqrt(3.0)), (&[0, 3], 1.0)])
}

/// `(z₁⁵, √5 z₁³z₂, √5 z₁z₂², z₂⁵)`.
pub fn ex4_1_map() -> RationalBallMap {
    mono(2, &[(&[5, 0], 1.0), (&[3, 1], sqrt(5.0)), (&[1, 2], sqrt(5.0)), (&[0, 5], 1.0)])
}

/// Closed form `(cz₁ − sz₂², z₁z₂, (cz₁ − sz₂²)(sz₁ + cz₂²), z₁z₂(sz₁ + cz₂²),
/// (sz₁ + cz₂²)²)` with `c = t` and `s = √(1 − t²)`.
pub fn ex4_2_map(t: f64) -> Result<RationalBallMap> {
    let c = Complex64::new(t, 0.0);
    let s = Complex64::new(sqrt((1.0 - t * t).max(0.0)), 0.0);
    let z1 = Polynomial::var(2, 0);
    let z2 = Polynomial::var(2, 1);
    let z2sq = &z2 * &z2;
    let a = &z1.scale(c) - &z2sq.scale(s);
    let b = &z1.scale(s) + &z2sq.scale(c);
    let z1z2 = &z1 * &z2;
    RationalBallMap::polynomial(2, alloc::vec![a.clone(), z1z2.clone(), &a * &b, &z1z2 * &b, &b * &b])
}

pub fn ex4_2_family() -> HomotopyFamily {
    HomotopyFamily::new("ex4.2.family", 5, ex2_1_g(), ex2_1_f(), ex4_2_map).expect("consistent dimensions")
}

/// Blaschke product with `factors` random zeros of modulus below `0.9` and
/// a random phase.
pub fn random_blaschke(seed: u64, factors: usize) -> BlaschkeProduct {
    let mut s = Sampler::new(seed);
    let theta = s.uniform_range(-core::f64::consts::PI, core::f64::consts::PI);
    let zeros = (0..factors).map(|_| s.ball_point_within(1, 0.9)[0]).collect();
    BlaschkeProduct::new(theta, zeros).expect("zeros inside the disc")
}

/// Random Whitney term over `B_n` with `len` steps.
pub fn random_whitney(seed: u64, n: usize, len: usize) -> Result<WhitneyTerm> {
    whitney::random_term(seed, n, len, &Settings::default())
}

#[derive(Clone, Debug)]
pub enum CorpusItem {
    Map(RationalBallMap),
    Family(HomotopyFamily),
}

#[derive(Clone, Copy)]
pub struct CorpusEntry {
    pub id: &'static str,
    pub description: &'static str,
    build: fn() -> CorpusItem,
}

impl CorpusEntry {
    pub fn build(&self) -> CorpusItem {
        (self.build)()
    }

    pub fn is_family(&self) -> bool {
        self.id.ends_with(".family")
    }
}

impl core::fmt::Debug for CorpusEntry {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("CorpusEntry").field("id", &self.id).finish()
    }
}

macro_rules! entry {
    ($id:literal, $desc:literal, map $f:expr) => {
        CorpusEntry { id: $id, description: $desc, build: || CorpusItem::Map($f()) }
    };
    ($id:literal, $desc:literal, family $f:expr) => {
        CorpusEntry { id: $id, description: $desc, build: || CorpusItem::Family($f()) }
    };
}

const ENTRIES: &[CorpusEntry] = &[
    entry!("ex2.1.f", "(z, zw, zw^2, zw^3, w^4), degree 4 into B_5", map ex2_1_f),
    entry!("ex2.1.g", "(-w^2, zw, -zw^2, z^2w, z^2), degree 3 into B_5", map ex2_1_g),
    entry!("ex2.1.h", "(z, zw, w^2) into B_3", map ex2_1_h),
    entry!("whitney.W", "Whitney map B_3 -> B_5", map whitney_w),
    entry!("ex2.1.family", "W o U_theta o h with t = cos(theta), target dimension 5", family homotopy::ex2_1_family),
    entry!("faran.f", "(z, w, 0)", map faran_f),
    entry!("faran.g", "(z^2, zw, w)", map faran_g),
    entry!("faran.h", "(z^2, sqrt2 zw, w^2)", map faran_h),
    entry!("faran.phi", "(z^3, sqrt3 zw, w^3)", map faran_phi),
    entry!("faran.fg.family", "f to g in target dimension 4", family homotopy::faran_fg),
    entry!("faran.gh.family", "h to g in target dimension 4", family homotopy::faran_gh),
    entry!("faran.hphi.family", "phi to h in target dimension 5", family homotopy::faran_hphi),
    entry!("ex4.1.map", "group-invariant map (z1^5, sqrt5 z1^3 z2, sqrt5 z1 z2^2, z2^5)", map ex4_1_map),
    entry!("ex4.2.family", "closed form of ex2.1.family with c = t", family ex4_2_family),
];

pub fn entries() -> &'static [CorpusEntry] {
    ENTRIES
}

pub fn get(id: &str) -> Option<CorpusItem> {
    ENTRIES.iter().find(|e| e.id == id).map(CorpusEntry::build)
}

pub fn map(id: &str) -> Option<RationalBallMap> {
    match get(id)? {
        CorpusItem::Map(m) => Some(m),
        CorpusItem::Family(_) => None,
    }
}

pub fn family(id: &str) -> Option<HomotopyFamily> {
    match get(id)? {
        CorpusItem::Family(f) => Some(f),
        CorpusItem::Map(_) => None,
    }
}

/// Every map entry, with its id.
pub fn maps() -> Vec<(&'static str, RationalBallMap)> {
    ENTRIES
        .iter()
        .filter_map(|e| match e.build() {
            CorpusItem::Map(m) => Some((e.id, m)),
            CorpusItem::Family(_) => None,
        })
        .collect()
}
