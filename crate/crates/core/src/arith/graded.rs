use super::{LinearForm, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

type Exp = [u32; 3];

/// Polynomial in `s1, s2, s` truncated above a total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoly {
    terms: BTreeMap<Exp, Rational>,
    cutoff: u32,
}

fn deg(e: &Exp) -> u32 {
    e[0] + e[1] + e[2]
}

impl GradedPoly {
    pub fn zero(cutoff: u32) -> Self {
        GradedPoly { terms: BTreeMap::new(), cutoff }
    }

    pub fn constant(c: Rational, cutoff: u32) -> Self {
        let mut p = Self::zero(cutoff);
        p.add_term([0, 0, 0], c);
        p
    }

    pub fn one(cutoff: u32) -> Self {
        Self::constant(Rational::one(), cutoff)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp, Rational)>>(it: I, cutoff: u32) -> Self {
        let mut p = Self::zero(cutoff);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    /// `a·s1 + b·s2 + c·s` as a polynomial.
    pub fn linear(w: LinearForm, cutoff: u32) -> Self {
        Self::from_terms(
            [([1, 0, 0], w.a), ([0, 1, 0], w.b), ([0, 0, 1], w.c)]
                .into_iter()
                .map(|(e, k)| (e, Rational::from_integer(BigInt::from(k)))),
            cutoff,
        )
    }

    /// The weight with `s` specialized to 1: `c + a·s1 + b·s2`.
    pub fn linear_at_s_one(w: LinearForm, cutoff: u32) -> Self {
        Self::from_terms(
            [([0, 0, 0], w.c), ([1, 0, 0], w.a), ([0, 1, 0], w.b)]
                .into_iter()
                .map(|(e, k)| (e, Rational::from_integer(BigInt::from(k)))),
            cutoff,
        )
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exp) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff([0, 0, 0])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest total degree present, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(deg).max()
    }

    fn add_term(&mut self, e: Exp, c: Rational) {
        if deg(&e) > self.cutoff || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &GradedPoly) -> GradedPoly {
        let mut p = GradedPoly { terms: self.terms.clone(), cutoff: self.cutoff.min(o.cutoff) };
        p.terms.retain(|e, _| deg(e) <= p.cutoff);
        for (e, c) in &o.terms {
            p.add_term(*e, c.clone());
        }
        p
    }

    pub fn neg(&self) -> GradedPoly {
        GradedPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            cutoff: self.cutoff,
        }
    }

    pub fn sub(&self, o: &GradedPoly) -> GradedPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: &Rational) -> GradedPoly {
        if k.is_zero() {
            return Self::zero(self.cutoff);
        }
        GradedPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
            cutoff: self.cutoff,
        }
    }

    pub fn with_cutoff(&self, cutoff: u32) -> GradedPoly {
        GradedPoly {
            terms: self.terms.iter().filter(|(e, _)| deg(e) <= cutoff).map(|(e, c)| (*e, c.clone())).collect(),
            cutoff,
        }
    }

    pub fn mul(&self, o: &GradedPoly, cutoff: u32) -> GradedPoly {
        let mut p = Self::zero(cutoff);
        for (ea, ca) in &self.terms {
            let da = deg(ea);
            if da > cutoff {
                continue;
            }
            for (eb, cb) in &o.terms {
                if da + deg(eb) > cutoff {
                    continue;
                }
                p.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb);
            }
        }
        p
    }

    /// Multiplicative inverse as a power series, by Newton-free recursion on degree.
    pub fn inverse(&self, cutoff: u32) -> Result<GradedPoly> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let inv0 = c0.recip();
        // a = c0 (1 + r)  =>  a^{-1} = c0^{-1} Σ (-r)^k
        let r = self.scale(&inv0).sub(&Self::one(cutoff)).with_cutoff(cutoff);
        let neg_r = r.neg();
        let mut acc = Self::one(cutoff);
        let mut power = Self::one(cutoff);
        for _ in 0..cutoff {
            power = power.mul(&neg_r, cutoff);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc.scale(&inv0))
    }

    pub fn pow(&self, k: u32, cutoff: u32) -> GradedPoly {
        let mut acc = Self::one(cutoff);
        let mut base = self.with_cutoff(cutoff);
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, cutoff);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base, cutoff);
            }
        }
        acc
    }

    /// `self^k` for signed `k`; negative powers need an invertible constant term.
    pub fn pow_signed(&self, k: i64, cutoff: u32) -> Result<GradedPoly> {
        if k >= 0 {
            Ok(self.pow(k as u32, cutoff))
        } else {
            Ok(self.inverse(cutoff)?.pow(k.unsigned_abs() as u32, cutoff))
        }
    }

    /// Homogeneous component of total degree `k`.
    pub fn homogeneous(&self, k: u32) -> GradedPoly {
        GradedPoly {
            terms: self.terms.iter().filter(|(e, _)| deg(e) == k).map(|(e, c)| (*e, c.clone())).collect(),
            cutoff: self.cutoff,
        }
    }

    pub fn eval(&self, x: &[Rational; 3]) -> Rational {
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in x.iter().zip(e.iter()) {
                if k > 0 {
                    t *= num_traits::pow(v.clone(), k as usize);
                }
            }
            total += t;
        }
        total
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (k, name) in e.iter().zip(["s1", "s2", "s"]) {
                match k {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}
