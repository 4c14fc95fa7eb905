//! Tangent and Ext characters at fixed points of Hilbⁿ.
//!
//! For partitions `λ, μ` in a chart with weights `(w1, w2)`, the local
//! contribution to `χ(O, O) − χ(I_λ, I_μ)` is
//!
//! ```text
//! E_{λμ} = Σ_{□∈λ} (−l_μ(□)·w1 + (a_λ(□)+1)·w2) + Σ_{□∈μ} ((l_λ(□)+1)·w1 − a_μ(□)·w2)
//! ```
//!
//! Row index of a box goes with `w1`, column index with `w2`.

use super::{HilbFixedPoint, Partition};
use crate::arith::LinearForm;
use crate::character::Character;
use crate::error::{Error, Result};
use crate::toric::{EquivLineBundle, SurfaceName, ToricSurfaceModel};

pub fn local_ext(lambda: &Partition, mu: &Partition, w1: LinearForm, w2: LinearForm) -> Character {
    let mut c = Character::new();
    for (i, j) in lambda.boxes() {
        c.push(-mu.leg(i, j) * w1 + (lambda.arm(i, j) + 1) * w2, 1);
    }
    for (i, j) in mu.boxes() {
        c.push((lambda.leg(i, j) + 1) * w1 - mu.arm(i, j) * w2, 1);
    }
    c
}

pub fn tangent_char(s: &ToricSurfaceModel, fp: &HilbFixedPoint) -> Character {
    let mut c = Character::new();
    for (p, lam) in s.fixed_points.iter().zip(&fp.assignment) {
        let (w1, w2) = p.chart();
        c = &c + &local_ext(lam, lam, w1, w2);
    }
    c
}

/// `χ(I₁, I₂ ⊗ L)`.
pub fn pair_ext_char(
    s: &ToricSurfaceModel,
    fp1: &HilbFixedPoint,
    fp2: &HilbFixedPoint,
    l: &EquivLineBundle,
) -> Result<Character> {
    let mut c = s.chi_character(l)?;
    for ((p, lam), mu) in s.fixed_points.iter().zip(&fp1.assignment).zip(&fp2.assignment) {
        let (w1, w2) = p.chart();
        c = &c - &local_ext(lam, mu, w1, w2).twist(s.fiber_weight(p, l));
    }
    Ok(c)
}

/// Does the local monomial `x^e` carry `I_λ` into `I_μ`?
fn carries(e: &[u32], lambda: &Partition, mu: &Partition) -> bool {
    let (e1, e2) = (e[0] as i64, e[1] as i64);
    // fails iff some u ∉ λ has u + e ∈ μ
    !mu.boxes().any(|(i, j)| {
        let (u1, u2) = (i - e1, j - e2);
        u1 >= 0 && u2 >= 0 && !lambda.contains(u1, u2)
    })
}

/// `Hom(I₁, I₂ ⊗ L)`: sections of `L` multiplying `I₁` into `I₂` in every chart.
pub fn hom_char(
    s: &ToricSurfaceModel,
    fp1: &HilbFixedPoint,
    fp2: &HilbFixedPoint,
    l: &EquivLineBundle,
) -> Result<Character> {
    if l.degree.iter().any(|&d| d < 0) {
        return Ok(Character::new());
    }
    let mut c = Character::new();
    for sec in s.sections(l)? {
        let ok = sec
            .local_exponents
            .iter()
            .zip(fp1.assignment.iter().zip(&fp2.assignment))
            .all(|(e, (lam, mu))| carries(e, lam, mu));
        if ok {
            c.push(sec.weight, 1);
        }
    }
    Ok(c)
}

/// `K_S ⊗ L^{-1}` has negative degree on every curve class.
fn ext2_vanishes(s: &ToricSurfaceModel, l: &EquivLineBundle) -> Result<bool> {
    let k = s.canonical()?;
    Ok(match s.name {
        SurfaceName::P2 | SurfaceName::P1xP1 => k.degree.iter().zip(&l.degree).all(|(kd, d)| kd - d < 0),
        SurfaceName::SymP1(_) => false,
    })
}

/// `Ext¹(I, I ⊗ L)` as a genuine character.
pub fn ext1_char(s: &ToricSurfaceModel, fp: &HilbFixedPoint, l: &EquivLineBundle) -> Result<Character> {
    if !ext2_vanishes(s, l)? {
        return Err(Error::Ext2Obstruction);
    }
    let c = &hom_char(s, fp, fp, l)? - &pair_ext_char(s, fp, fp, l)?;
    if !c.is_genuine() {
        return Err(Error::NotGenuine(format!("Ext¹ at {fp}: {c}")));
    }
    Ok(c)
}

/// Virtual `Ext¹(I₁, I₂ ⊗ L) = Hom + Ext² − χ`, with `Ext²` from Serre duality.
pub fn virtual_ext1_char(
    s: &ToricSurfaceModel,
    fp1: &HilbFixedPoint,
    fp2: &HilbFixedPoint,
    l: &EquivLineBundle,
) -> Result<Character> {
    let k = s.canonical()?;
    let ext2 = hom_char(s, fp2, fp1, &k.tensor(&l.inverse()))?.dual();
    let hom = hom_char(s, fp1, fp2, l)?;
    Ok(&(&hom + &ext2) - &pair_ext_char(s, fp1, fp2, l)?)
}
