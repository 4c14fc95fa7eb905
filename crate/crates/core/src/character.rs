//! Virtual torus characters and their Chern/Euler data.

use crate::arith::{GradedPoly, LinearForm, Rational};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Finite formal sum of weights with nonzero integer multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Character {
    weights: BTreeMap<LinearForm, i64>,
}

impl Character {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(w: LinearForm) -> Self {
        let mut c = Self::new();
        c.push(w, 1);
        c
    }

    pub fn from_weights<I: IntoIterator<Item = LinearForm>>(ws: I) -> Self {
        let mut c = Self::new();
        for w in ws {
            c.push(w, 1);
        }
        c
    }

    pub fn push(&mut self, w: LinearForm, mult: i64) {
        if mult == 0 {
            return;
        }
        let slot = self.weights.entry(w).or_insert(0);
        *slot += mult;
        if *slot == 0 {
            self.weights.remove(&w);
        }
    }

    pub fn mult(&self, w: &LinearForm) -> i64 {
        self.weights.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LinearForm, &i64)> {
        self.weights.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn rank(&self) -> i64 {
        self.weights.values().sum()
    }

    pub fn is_genuine(&self) -> bool {
        self.weights.values().all(|&m| m > 0)
    }

    pub fn dual(&self) -> Character {
        self.map_weights(|w| -w)
    }

    /// Tensor with the one-dimensional representation of weight `by`.
    pub fn twist(&self, by: LinearForm) -> Character {
        self.map_weights(|w| w + by)
    }

    /// Tensor with `t^k`.
    pub fn shift_s(&self, k: i64) -> Character {
        self.map_weights(|w| w.shift_s(k))
    }

    pub fn scale(&self, k: i64) -> Character {
        let mut c = Self::new();
        for (w, m) in &self.weights {
            c.push(*w, m * k);
        }
        c
    }

    pub fn tensor(&self, o: &Character) -> Character {
        let mut c = Self::new();
        for (w1, m1) in &self.weights {
            for (w2, m2) in &o.weights {
                c.push(*w1 + *w2, m1 * m2);
            }
        }
        c
    }

    fn map_weights(&self, f: impl Fn(LinearForm) -> LinearForm) -> Character {
        let mut c = Self::new();
        for (w, m) in &self.weights {
            c.push(f(*w), *m);
        }
        c
    }

    /// First Chern class of the determinant: Σ mult·w.
    pub fn det_weight(&self) -> LinearForm {
        self.weights.iter().fold(LinearForm::ZERO, |acc, (w, m)| acc + *m * *w)
    }

    /// ∏ (1 + w)^mult, truncated at `cutoff`.
    pub fn chern_series(&self, cutoff: u32) -> GradedPoly {
        let mut acc = GradedPoly::one(cutoff);
        for (w, m) in &self.weights {
            let f = GradedPoly::one(cutoff).add(&GradedPoly::linear(*w, cutoff));
            // 1 + w always has constant term 1
            acc = acc.mul(&f.pow_signed(*m, cutoff).expect("unit constant term"), cutoff);
        }
        acc
    }

    pub fn chern_class(&self, k: u32) -> GradedPoly {
        self.chern_series(k).homogeneous(k)
    }

    /// ∏ w(x)^mult at a numeric point.
    pub fn euler_eval(&self, x: &[Rational; 3]) -> Result<Rational> {
        let mut acc = Rational::one();
        for (w, m) in &self.weights {
            if w.is_zero() {
                return Err(Error::NonIsolated);
            }
            let v = w.eval(x);
            if v.is_zero() {
                return Err(Error::DegenerateSeed);
            }
            acc *= crate::arith::pow_signed(&v, *m);
        }
        Ok(acc)
    }

    /// ∏ w^mult with `s = 1`, as a series in `s1, s2`.
    ///
    /// Weights with a nonzero `s` part expand around their constant term;
    /// pure surface weights may only occur with positive multiplicity.
    pub fn euler_series_s_one(&self, cutoff: u32) -> Result<GradedPoly> {
        let mut acc = GradedPoly::one(cutoff);
        for (w, m) in &self.weights {
            if w.c == 0 && *m < 0 {
                return Err(Error::NonInvertibleSeries);
            }
            let f = GradedPoly::linear_at_s_one(*w, cutoff);
            acc = acc.mul(&f.pow_signed(*m, cutoff)?, cutoff);
        }
        Ok(acc)
    }
}

impl Add for &Character {
    type Output = Character;
    fn add(self, o: &Character) -> Character {
        let mut c = self.clone();
        for (w, m) in &o.weights {
            c.push(*w, *m);
        }
        c
    }
}

impl Sub for &Character {
    type Output = Character;
    fn sub(self, o: &Character) -> Character {
        self + &(-o)
    }
}

impl Neg for &Character {
    type Output = Character;
    fn neg(self) -> Character {
        self.scale(-1)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (w, m)) in self.weights.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}: {m}")?;
        }
        f.write_str("}")
    }
}
