//! Dense univariate polynomials and exact rational root finding.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{MPoly, Monomial, PolyError, VarTable};
use crate::rat::{format_rat_short, int, Rat};

/// Dense univariate polynomial, coefficients from degree 0 upward, with no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UPoly {
    coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// `t - r`.
    pub fn linear_root(r: &Rat) -> Self {
        Self::new(vec![-r, Rat::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * t + c)
    }

    pub fn derivative(&self) -> UPoly {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> UPoly {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rat::zero();
        Self::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&z) + other.coeffs.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() / &lc;
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0)` is zero.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self / gcd(self, self')`.
    pub fn squarefree_part(&self) -> UPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Scales to integer coefficients with content one.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let den = crate::rat::common_denominator(self.coeffs.iter());
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|v| v / &g).collect()
    }

    fn sign_changes(seq: &[UPoly], t: &Rat) -> usize {
        let mut changes = 0;
        let mut prev = 0i8;
        for p in seq {
            let v = p.eval(t);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if prev != 0 && s != prev {
                    changes += 1;
                }
                prev = s;
            }
        }
        changes
    }

    fn sturm_sequence(&self) -> Vec<UPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push(r.scale(&-Rat::one()));
        }
        seq
    }

    /// Distinct rational roots in increasing order.
    ///
    /// Real roots of the square-free part are isolated by Sturm sequences to
    /// intervals shorter than `1/a_n`; each such interval holds at most one
    /// candidate `k/a_n`, which is then tested exactly.
    pub fn rational_roots(&self) -> Vec<Rat> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let sf = UPoly::new(
            self.squarefree_part()
                .primitive_integer()
                .into_iter()
                .map(Rat::from_integer)
                .collect(),
        );
        let mut roots = Vec::new();
        if sf.eval(&Rat::zero()).is_zero() {
            roots.push(Rat::zero());
        }
        let an = sf.leading().abs();
        let bound = sf
            .coeffs
            .iter()
            .map(|c| c.abs() / &an)
            .fold(Rat::zero(), |m, c| if c > m { c } else { m })
            + Rat::one();
        let seq = sf.sturm_sequence();
        let step = an.recip();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let count = Self::sign_changes(&seq, &lo) as i64 - Self::sign_changes(&seq, &hi) as i64;
            if count <= 0 {
                continue;
            }
            if &hi - &lo <= step {
                // candidates k/a_n with lo < k/a_n <= hi
                let k_lo: BigInt = (&lo * &an).floor().to_integer() + 1;
                let k_hi: BigInt = (&hi * &an).floor().to_integer();
                let mut k = k_lo;
                while k <= k_hi {
                    let cand = Rat::new(k.clone(), an.to_integer());
                    if !cand.is_zero() && sf.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                    k += 1;
                }
                continue;
            }
            let mid = (&lo + &hi) / int(2);
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
        roots.sort();
        roots.dedup();
        roots
    }

    /// Views a polynomial in a single variable `k` of its table.
    pub fn from_mpoly(p: &MPoly, k: usize) -> Result<UPoly, PolyError> {
        if p.occurring_vars().iter().any(|&j| j != k) {
            return Err(PolyError::NotUnivariate(p.vars().name(k).to_string()));
        }
        let deg = p.degree_in(k).unwrap_or(0) as usize;
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (m, c) in p.terms() {
            coeffs[m.exponents()[k] as usize] = c.clone();
        }
        Ok(Self::new(coeffs))
    }

    pub fn to_mpoly(&self, vars: &VarTable, k: usize) -> MPoly {
        MPoly::from_terms(
            vars,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| (Monomial::var(vars.len(), k, e as u32), c.clone())),
        )
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let body = match (e, a.is_one()) {
                (0, _) => format_rat_short(&a),
                (1, true) => "t".to_string(),
                (1, false) => format!("{}*t", format_rat_short(&a)),
                (_, true) => format!("t^{e}"),
                (_, false) => format!("{}*t^{e}", format_rat_short(&a)),
            };
            f.write_str(&body)?;
        }
        Ok(())
    }
}

/// Monic gcd of two polynomials univariate in `var`.
pub fn univariate_gcd(p: &MPoly, q: &MPoly, var: &str) -> Result<MPoly, PolyError> {
    if p.vars() != q.vars() {
        return Err(PolyError::TableMismatch);
    }
    let k = p.vars().require(var)?;
    let a = UPoly::from_mpoly(p, k)?;
    let b = UPoly::from_mpoly(q, k)?;
    if a.is_zero() && b.is_zero() {
        return Err(PolyError::BothZero);
    }
    Ok(a.gcd(&b).to_mpoly(p.vars(), k))
}
