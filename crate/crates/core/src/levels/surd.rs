use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::rat::{format_rat, rat_sqrt, Rat};

/// `a + b·√d` with rational `a`, `b` and an integer radicand `d` with small
/// square factors removed. Equality compares values, so radicands that differ
/// by a large square still compare equal.
#[derive(Clone, Debug)]
pub struct Surd {
    pub a: Rat,
    pub b: Rat,
    pub d: Rat,
}

impl Surd {
    pub fn rational(a: Rat) -> Self {
        Surd {
            a,
            b: Rat::zero(),
            d: Rat::one(),
        }
    }

    pub fn new(a: Rat, b: Rat, d: Rat) -> Self {
        // fold rational square roots back into `a`
        if b.is_zero() {
            return Surd::rational(a);
        }
        if let Some(r) = rat_sqrt(&d) {
            return Surd::rational(a + b * r);
        }
        let (b, d) = reduce_radicand(b, d);
        Surd { a, b, d }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `other` rewritten over the radicand of `self`.
    fn align(&self, other: &Surd) -> (Rat, Surd) {
        if self.is_rational() {
            return (other.d.clone(), other.clone());
        }
        if other.is_rational() || other.d == self.d {
            return (self.d.clone(), other.clone());
        }
        let r = rat_sqrt(&(&other.d / &self.d)).expect("surds over different fields");
        let b = &other.b * r;
        (self.d.clone(), Surd { a: other.a.clone(), b, d: self.d.clone() })
    }

    pub fn add(&self, other: &Surd) -> Surd {
        let (d, other) = self.align(other);
        Surd::new(&self.a + &other.a, &self.b + &other.b, d)
    }

    pub fn mul(&self, other: &Surd) -> Surd {
        let (d, other) = self.align(other);
        Surd::new(
            &self.a * &other.a + &self.b * &other.b * &d,
            &self.a * &other.b + &self.b * &other.a,
            d,
        )
    }

    pub fn scale(&self, c: &Rat) -> Surd {
        Surd::new(&self.a * c, &self.b * c, self.d.clone())
    }

    /// `None` for zero.
    pub fn recip(&self) -> Option<Surd> {
        let n = &self.a * &self.a - &self.b * &self.b * &self.d;
        if n.is_zero() {
            return None;
        }
        Some(Surd::new(&self.a / &n, -&self.b / &n, self.d.clone()))
    }
}

/// Makes `d` an integer and moves square factors of small primes into `b`.
fn reduce_radicand(b: Rat, d: Rat) -> (Rat, Rat) {
    let den = d.denom().clone();
    let mut n: BigInt = d.numer() * &den;
    let mut b = b / Rat::from_integer(den);
    let mut p = 2u32;
    while p < 1000 {
        let sq = BigInt::from(p * p);
        while (&n % &sq).is_zero() {
            n /= &sq;
            b *= Rat::from_integer(BigInt::from(p));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (b, Rat::from_integer(n))
}

impl PartialEq for Surd {
    fn eq(&self, other: &Surd) -> bool {
        if self.a != other.a {
            return false;
        }
        match (self.is_rational(), other.is_rational()) {
            (true, true) => true,
            (false, false) => {
                self.b.is_positive() == other.b.is_positive()
                    && &self.b * &self.b * &self.d == &other.b * &other.b * &other.d
            }
            _ => false,
        }
    }
}

impl Eq for Surd {}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", format_rat(&self.a))
        } else {
            write!(f, "{} + {}*sqrt({})", format_rat(&self.a), format_rat(&self.b), format_rat(&self.d))
        }
    }
}

impl Serialize for Surd {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
