//! Toric models of ℙ², ℙ¹×ℙ¹ and ℙ^m = Sym^m ℙ¹ with equivariant line bundles.
//!
//! Homogeneous coordinates carry weights, and a fixed point is the locus where
//! one coordinate per factor is nonzero. The local coordinate `u/base` has
//! function weight `wt(u) − wt(base)`; the tangent weight is its negative.
//! Conventions:
//!
//! * ℙ²: `x0, x1, x2` with weights `0, −s1, −s2`.
//! * ℙ¹×ℙ¹: `x0, x1, y0, y1` with weights `0, −s1, 0, −s2`.
//! * ℙ^m: `z_j` with weight `−j·s1`, so the tangent at point `a` is `{(j−a)·s1}`.
//!
//! With this choice a section of weight `σ` has local exponents `e` at `p` with
//! `σ = ℓ_p − Σ e_i·w_i`, where `ℓ_p` is the fiber weight and `w_i` the chart weights.

use crate::arith::LinearForm;
use crate::character::Character;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurfaceName {
    P2,
    P1xP1,
    SymP1(u32),
}

impl fmt::Display for SurfaceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceName::P2 => f.write_str("p2"),
            SurfaceName::P1xP1 => f.write_str("p1xp1"),
            SurfaceName::SymP1(m) => write!(f, "sym_p1({m})"),
        }
    }
}

impl FromStr for SurfaceName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p2" => Ok(SurfaceName::P2),
            "p1xp1" => Ok(SurfaceName::P1xP1),
            _ => s
                .strip_prefix("sym_p1(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|m| m.parse().ok())
                .map(SurfaceName::SymP1)
                .ok_or_else(|| Error::UnknownSurface(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coordinate {
    pub weight: LinearForm,
    pub factor: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricFixedPoint {
    pub label: String,
    /// Nonvanishing coordinate of each factor.
    pub base: Vec<usize>,
    /// Local coordinates, in the order of `tangent`.
    pub local: Vec<usize>,
    pub tangent: Vec<LinearForm>,
}

impl ToricFixedPoint {
    pub fn chart(&self) -> (LinearForm, LinearForm) {
        (self.tangent[0], self.tangent[1])
    }

    pub fn tangent_char(&self) -> Character {
        Character::from_weights(self.tangent.iter().copied())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricSurfaceModel {
    pub name: SurfaceName,
    pub coords: Vec<Coordinate>,
    pub fixed_points: Vec<ToricFixedPoint>,
    pub euler_number: usize,
}

pub fn make_surface(name: SurfaceName) -> ToricSurfaceModel {
    let (coords, bases): (Vec<Coordinate>, Vec<Vec<usize>>) = match name {
        SurfaceName::P2 => (
            vec![
                Coordinate { weight: LinearForm::ZERO, factor: 0 },
                Coordinate { weight: -LinearForm::S1, factor: 0 },
                Coordinate { weight: -LinearForm::S2, factor: 0 },
            ],
            vec![vec![0], vec![1], vec![2]],
        ),
        SurfaceName::P1xP1 => (
            vec![
                Coordinate { weight: LinearForm::ZERO, factor: 0 },
                Coordinate { weight: -LinearForm::S1, factor: 0 },
                Coordinate { weight: LinearForm::ZERO, factor: 1 },
                Coordinate { weight: -LinearForm::S2, factor: 1 },
            ],
            vec![vec![0, 2], vec![1, 2], vec![0, 3], vec![1, 3]],
        ),
        SurfaceName::SymP1(m) => (
            (0..=m as i64).map(|j| Coordinate { weight: -j * LinearForm::S1, factor: 0 }).collect(),
            (0..=m as usize).map(|a| vec![a]).collect(),
        ),
    };
    let fixed_points: Vec<ToricFixedPoint> = bases
        .into_iter()
        .map(|base| {
            let local: Vec<usize> = (0..coords.len()).filter(|i| !base.contains(i)).collect();
            let tangent = local
                .iter()
                .map(|&u| {
                    let b = base[coords[u].factor];
                    coords[b].weight - coords[u].weight
                })
                .collect();
            let label = match name {
                SurfaceName::P2 => format!("p{}", base[0]),
                SurfaceName::P1xP1 => format!("p{}{}", base[0], base[1] - 2),
                SurfaceName::SymP1(_) => format!("a{}", base[0]),
            };
            ToricFixedPoint { label, base, local, tangent }
        })
        .collect();
    ToricSurfaceModel { name, euler_number: fixed_points.len(), coords, fixed_points }
}

/// Line bundle with a chosen linearization, given by its degree on each factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EquivLineBundle {
    pub degree: Vec<i64>,
    pub offset: LinearForm,
}

impl EquivLineBundle {
    pub fn new(degree: Vec<i64>) -> Self {
        EquivLineBundle { degree, offset: LinearForm::ZERO }
    }

    pub fn trivial(s: &ToricSurfaceModel) -> Self {
        Self::new(vec![0; s.factors()])
    }

    pub fn with_offset(mut self, offset: LinearForm) -> Self {
        self.offset = offset;
        self
    }

    pub fn tensor(&self, o: &EquivLineBundle) -> Self {
        EquivLineBundle {
            degree: self.degree.iter().zip(&o.degree).map(|(a, b)| a + b).collect(),
            offset: self.offset + o.offset,
        }
    }

    pub fn inverse(&self) -> Self {
        EquivLineBundle { degree: self.degree.iter().map(|d| -d).collect(), offset: -self.offset }
    }

    pub fn fiber_weights(&self, s: &ToricSurfaceModel) -> Vec<LinearForm> {
        s.fixed_points.iter().map(|p| s.fiber_weight(p, self)).collect()
    }
}

/// A monomial section with its local exponents at every fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub weight: LinearForm,
    pub local_exponents: Vec<Vec<u32>>,
}

impl ToricSurfaceModel {
    pub fn factors(&self) -> usize {
        self.coords.iter().map(|c| c.factor).max().map_or(0, |f| f + 1)
    }

    fn check_degree(&self, l: &EquivLineBundle) {
        assert_eq!(l.degree.len(), self.factors(), "degree data does not match {}", self.name);
    }

    pub fn fiber_weight(&self, p: &ToricFixedPoint, l: &EquivLineBundle) -> LinearForm {
        self.check_degree(l);
        p.base
            .iter()
            .zip(&l.degree)
            .fold(l.offset, |acc, (&b, &d)| acc + d * self.coords[b].weight)
    }

    /// Canonical bundle: degree and the linearization making it `det T^∨`.
    pub fn canonical(&self) -> Result<EquivLineBundle> {
        let degree = match self.name {
            SurfaceName::P2 => vec![-3],
            SurfaceName::P1xP1 => vec![-2, -2],
            SurfaceName::SymP1(m) => vec![-(m as i64) - 1],
        };
        let bare = EquivLineBundle::new(degree);
        let mut offset = None;
        for p in &self.fixed_points {
            let k = -p.tangent.iter().fold(LinearForm::ZERO, |a, w| a + *w);
            let o = k - self.fiber_weight(p, &bare);
            if *offset.get_or_insert(o) != o {
                return Err(Error::Inconsistent("canonical linearization".into()));
            }
        }
        Ok(bare.with_offset(offset.unwrap_or_default()))
    }

    /// All monomials of the given multidegree.
    fn monomials(&self, degree: &[i64]) -> Vec<Vec<u32>> {
        let mut out = vec![vec![0u32; self.coords.len()]];
        for (f, &d) in degree.iter().enumerate() {
            let idx: Vec<usize> = (0..self.coords.len()).filter(|&i| self.coords[i].factor == f).collect();
            let mut next = Vec::new();
            for m in &out {
                compositions(d as u32, idx.len(), &mut |parts| {
                    let mut m2 = m.clone();
                    for (i, &e) in idx.iter().zip(parts) {
                        m2[*i] = e;
                    }
                    next.push(m2);
                });
            }
            out = next;
        }
        out
    }

    pub fn sections(&self, l: &EquivLineBundle) -> Result<Vec<Section>> {
        self.check_degree(l);
        if l.degree.iter().any(|&d| d < 0) {
            return Err(Error::HigherCohomology);
        }
        Ok(self
            .monomials(&l.degree)
            .into_iter()
            .map(|m| {
                let weight = m
                    .iter()
                    .zip(&self.coords)
                    .fold(l.offset, |acc, (&e, c)| acc + (e as i64) * c.weight);
                let local_exponents = self.fixed_points.iter().map(|p| p.local.iter().map(|&u| m[u]).collect()).collect();
                Section { weight, local_exponents }
            })
            .collect())
    }

    pub fn h0_character(&self, l: &EquivLineBundle) -> Result<Character> {
        Ok(Character::from_weights(self.sections(l)?.into_iter().map(|s| s.weight)))
    }

    pub fn chi_character(&self, l: &EquivLineBundle) -> Result<Character> {
        self.check_degree(l);
        if l.degree.iter().all(|&d| d >= 0) {
            return self.h0_character(l);
        }
        let k = self.canonical()?;
        let vanishing = match self.name {
            SurfaceName::P2 => matches!(l.degree[0], -2 | -1),
            SurfaceName::P1xP1 => l.degree.contains(&-1),
            SurfaceName::SymP1(_) => false,
        };
        if vanishing {
            return Ok(Character::new());
        }
        let dual = k.tensor(&l.inverse());
        if matches!(self.name, SurfaceName::P2 | SurfaceName::P1xP1) && dual.degree.iter().all(|&d| d >= 0) {
            return Ok(self.h0_character(&dual)?.dual());
        }
        Err(Error::UnsupportedTwist(format!("{:?} on {}", l.degree, self.name)))
    }
}

fn compositions(total: u32, parts: usize, f: &mut dyn FnMut(&[u32])) {
    fn go(rem: u32, slots: usize, acc: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if slots == 1 {
            acc.push(rem);
            f(acc);
            acc.pop();
            return;
        }
        for e in (0..=rem).rev() {
            acc.push(e);
            go(rem - e, slots - 1, acc, f);
            acc.pop();
        }
    }
    if parts > 0 {
        go(total, parts, &mut Vec::with_capacity(parts), f);
    }
}
