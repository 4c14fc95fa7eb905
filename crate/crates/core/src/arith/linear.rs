use super::Rational;
use num_bigint::BigInt;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `a·s1 + b·s2 + c·s`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl LinearForm {
    pub const ZERO: LinearForm = LinearForm { a: 0, b: 0, c: 0 };
    pub const S1: LinearForm = LinearForm { a: 1, b: 0, c: 0 };
    pub const S2: LinearForm = LinearForm { a: 0, b: 1, c: 0 };
    pub const S: LinearForm = LinearForm { a: 0, b: 0, c: 1 };

    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        LinearForm { a, b, c }
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    pub fn eval(&self, x: &[Rational; 3]) -> Rational {
        &x[0] * BigInt::from(self.a) + &x[1] * BigInt::from(self.b) + &x[2] * BigInt::from(self.c)
    }

    /// The same weight twisted by `t^k`.
    pub fn shift_s(self, k: i64) -> Self {
        LinearForm { c: self.c + k, ..self }
    }

    /// Part living on the surface torus, i.e. with `s` dropped.
    pub fn surface_part(self) -> Self {
        LinearForm { c: 0, ..self }
    }
}

impl Add for LinearForm {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        LinearForm::new(self.a + o.a, self.b + o.b, self.c + o.c)
    }
}

impl Sub for LinearForm {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        LinearForm::new(self.a - o.a, self.b - o.b, self.c - o.c)
    }
}

impl Neg for LinearForm {
    type Output = Self;
    fn neg(self) -> Self {
        LinearForm::new(-self.a, -self.b, -self.c)
    }
}

impl Mul<LinearForm> for i64 {
    type Output = LinearForm;
    fn mul(self, w: LinearForm) -> LinearForm {
        LinearForm::new(self * w.a, self * w.b, self * w.c)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, name) in [(self.a, "s1"), (self.b, "s2"), (self.c, "s")] {
            if k == 0 {
                continue;
            }
            let sign = if k < 0 { "-" } else if out.is_empty() { "" } else { "+" };
            let mag = k.unsigned_abs();
            if mag == 1 {
                out.push_str(&format!("{sign}{name}"));
            } else {
                out.push_str(&format!("{sign}{mag}{name}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}
