use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::{Monomial, PolyError, VarTable};
use crate::rat::{int, Rat};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms live in a map keyed by grevlex-ordered monomials; zero coefficients
/// are never stored, so structural equality is polynomial equality. Arithmetic
/// operators panic when the two operands use different variable tables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    vars: VarTable,
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero(vars: &VarTable) -> Self {
        MPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarTable, c: Rat) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    pub fn one(vars: &VarTable) -> Self {
        Self::constant(vars, Rat::one())
    }

    /// The polynomial consisting of a single variable.
    pub fn var(vars: &VarTable, name: &str) -> Result<Self, PolyError> {
        let k = vars.require(name)?;
        Ok(Self::var_at(vars, k))
    }

    pub fn var_at(vars: &VarTable, k: usize) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::var(vars.len(), k, 1), Rat::one());
        p
    }

    pub fn term(vars: &VarTable, coeff: Rat, exps: &[u32]) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        p.add_term(Monomial::from_exponents(exps.to_vec()), coeff);
        p
    }

    pub fn from_terms(vars: &VarTable, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.exponents().len(), vars.len(), "exponent vector length");
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> + '_ {
        self.terms.iter()
    }

    /// Terms from the leading one down.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Rat)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coefficient_of(&self, exps: &[u32]) -> Rat {
        self.coefficient(&Monomial::from_exponents(exps.to_vec()))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rat {
        self.leading_term().map_or_else(Rat::zero, |(_, c)| c.clone())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, k: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponents()[k]).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.coefficient(&Monomial::one(self.vars.len())))
        } else {
            None
        }
    }

    /// Indices of the variables that actually occur.
    pub fn occurring_vars(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&k| self.terms.keys().any(|m| m.exponents()[k] > 0))
            .collect()
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> MPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at a named assignment. Every variable occurring in `self`
    /// must be assigned; extra names are ignored.
    pub fn eval(&self, point: &[(&str, Rat)]) -> Result<Rat, PolyError> {
        let mut values = vec![None; self.vars.len()];
        for (name, v) in point {
            if let Some(k) = self.vars.index_of(name) {
                values[k] = Some(v.clone());
            }
        }
        for k in self.occurring_vars() {
            if values[k].is_none() {
                return Err(PolyError::MissingAssignment(self.vars.name(k).to_string()));
            }
        }
        let values: Vec<Rat> = values.into_iter().map(|v| v.unwrap_or_else(Rat::zero)).collect();
        Ok(self.eval_at(&values))
    }

    /// Evaluates at positional values (one per variable of the table).
    pub fn eval_at(&self, values: &[Rat]) -> Rat {
        assert_eq!(values.len(), self.vars.len(), "one value per variable");
        let mut powers: Vec<Vec<Rat>> = vec![vec![Rat::one()]; values.len()];
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[k];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &values[k];
                    cache.push(next);
                }
                t *= &cache[e as usize];
            }
            total += t;
        }
        total
    }

    /// Formal partial derivative with respect to a named variable.
    pub fn derivative(&self, name: &str) -> Result<MPoly, PolyError> {
        let k = self.vars.require(name)?;
        Ok(self.derivative_at(k))
    }

    pub fn derivative_at(&self, k: usize) -> MPoly {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exponents()[k];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[k] -= 1;
            out.add_term(Monomial::from_exponents(exps), c * int(e as i64));
        }
        out
    }

    /// Substitutes a value for one variable; the table is unchanged.
    pub fn specialize(&self, k: usize, value: &Rat) -> MPoly {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exponents()[k];
            let mut exps = m.exponents().to_vec();
            exps[k] = 0;
            let factor = num_traits::pow(value.clone(), e as usize);
            out.add_term(Monomial::from_exponents(exps), c * factor);
        }
        out
    }

    /// Composition: variable `k` of `self` is replaced by `images[k]`.
    /// All images must share one table, which becomes the result's table.
    pub fn compose(&self, images: &[MPoly]) -> Result<MPoly, PolyError> {
        if images.len() != self.vars.len() {
            return Err(PolyError::ArityMismatch {
                expected: self.vars.len(),
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.vars.clone(),
            None => return Ok(self.clone()),
        };
        if images.iter().any(|p| p.vars != target) {
            return Err(PolyError::TableMismatch);
        }
        let mut cache: Vec<Vec<MPoly>> = images.iter().map(|p| vec![Self::one(&target), p.clone()]).collect();
        let mut out = Self::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&target, c.clone());
            for (k, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let powers = &mut cache[k];
                while powers.len() <= e as usize {
                    let next = powers.last().unwrap() * &images[k];
                    powers.push(next);
                }
                t = &t * &powers[e as usize];
            }
            out += t;
        }
        Ok(out)
    }

    /// Substitution by polynomials of degree at most one. Variables without an
    /// entry in `map` are kept as themselves, which requires them to exist in
    /// the target table.
    pub fn substitute_linear(&self, map: &[(&str, MPoly)]) -> Result<MPoly, PolyError> {
        let target = match map.first() {
            Some((_, p)) => p.vars.clone(),
            None => return Ok(self.clone()),
        };
        for (name, img) in map {
            self.vars.require(name)?;
            if img.vars != target {
                return Err(PolyError::TableMismatch);
            }
            if img.degree().unwrap_or(0) > 1 {
                return Err(PolyError::NotLinear(name.to_string()));
            }
        }
        let mut images = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            match map.iter().find(|(n, _)| n == name) {
                Some((_, img)) => images.push(img.clone()),
                None => images.push(Self::var(&target, name)?),
            }
        }
        self.compose(&images)
    }

    /// Re-expresses the polynomial over another table containing every
    /// occurring variable.
    pub fn embed(&self, target: &VarTable) -> Result<MPoly, PolyError> {
        let mut map = Vec::with_capacity(self.vars.len());
        for k in 0..self.vars.len() {
            map.push(target.index_of(self.vars.name(k)));
        }
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for (k, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let j = map[k].ok_or_else(|| PolyError::UnknownVariable(self.vars.name(k).to_string()))?;
                exps[j] += e;
            }
            out.add_term(Monomial::from_exponents(exps), c.clone());
        }
        Ok(out)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        assert_eq!(self.vars, d.vars, "variable tables differ");
        let (dm, dc) = d.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            rem -= d.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Coefficients with respect to variable `k`: `self = Σ_i out[i] · var_k^i`.
    pub fn coefficients_in(&self, k: usize) -> Vec<MPoly> {
        let deg = self.degree_in(k).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(&self.vars); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exponents()[k] as usize;
            let mut exps = m.exponents().to_vec();
            exps[k] = 0;
            out[e].add_term(Monomial::from_exponents(exps), c.clone());
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(mut self) -> MPoly {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        assert_eq!(self.vars, rhs.vars, "variable tables differ");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign<MPoly> for MPoly {
    fn add_assign(&mut self, rhs: MPoly) {
        assert_eq!(self.vars, rhs.vars, "variable tables differ");
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        assert_eq!(self.vars, rhs.vars, "variable tables differ");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl SubAssign<MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: MPoly) {
        *self -= &rhs;
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += rhs;
        self
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: MPoly) -> MPoly {
        self -= &rhs;
        self
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.vars, rhs.vars, "variable tables differ");
        let mut out = MPoly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn xy() -> VarTable {
        VarTable::of(&["x", "y"])
    }

    #[test]
    fn eval_examples() {
        let v = xy();
        let x = MPoly::var(&v, "x").unwrap();
        let y = MPoly::var(&v, "y").unwrap();
        let p = &(&x * &x) * &y + MPoly::constant(&v, int(3));
        assert_eq!(p.eval(&[("x", int(2)), ("y", int(1))]).unwrap(), int(7));
        assert_eq!(MPoly::zero(&v).eval(&[]).unwrap(), int(0));
        let q = &x.pow(3) - &x;
        assert_eq!(q.eval(&[("x", int(1))]).unwrap(), int(0));
        let err = p.eval(&[("x", int(2))]).unwrap_err();
        assert_eq!(err, PolyError::MissingAssignment("y".into()));
    }

    #[test]
    fn derivative_examples() {
        let v = VarTable::of(&["x", "y", "u", "v"]);
        let x = MPoly::var(&v, "x").unwrap();
        let y = MPoly::var(&v, "y").unwrap();
        let u = MPoly::var(&v, "u").unwrap();
        let w = MPoly::var(&v, "v").unwrap();
        assert_eq!((&x.pow(3) * &y).derivative("x").unwrap(), (&x.pow(2) * &y).scale(&int(3)));
        assert!(MPoly::constant(&v, int(5)).derivative("x").unwrap().is_zero());
        let p = &(&x * &u.pow(2)) + &(&y * &w.pow(2));
        assert_eq!(p.derivative("u").unwrap(), (&x * &u).scale(&int(2)));
        assert!(matches!(p.derivative("z"), Err(PolyError::UnknownVariable(_))));
    }

    #[test]
    fn substitution_examples() {
        let v = xy();
        let w = VarTable::of(&["u"]);
        let x = MPoly::var(&v, "x").unwrap();
        let y = MPoly::var(&v, "y").unwrap();
        let u = MPoly::var(&w, "u").unwrap();
        let one = MPoly::one(&w);
        let p = &x + &y;
        let r = p.substitute_linear(&[("x", &u + &one), ("y", &u - &one)]).unwrap();
        assert_eq!(r, u.scale(&int(2)));
        let sq = x.pow(2);
        assert_eq!(sq.substitute_linear(&[("x", x.clone())]).unwrap(), sq);
        let xy_ = &x * &y;
        let r = xy_
            .substitute_linear(&[("x", x.scale(&int(2))), ("y", y.scale(&int(3)))])
            .unwrap();
        assert_eq!(r, (&x * &y).scale(&int(6)));
        assert!(matches!(
            sq.substitute_linear(&[("x", x.pow(2))]),
            Err(PolyError::NotLinear(_))
        ));
    }

    #[test]
    fn exact_division() {
        let v = xy();
        let x = MPoly::var(&v, "x").unwrap();
        let y = MPoly::var(&v, "y").unwrap();
        let a = &x + &y.scale(&rat(1, 2));
        let b = &x.pow(2) - &y;
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!((&prod + &MPoly::one(&v)).div_exact(&a), None);
    }

    #[test]
    fn embed_and_coefficients() {
        let v = xy();
        let big = VarTable::of(&["t", "x", "y"]);
        let x = MPoly::var(&v, "x").unwrap();
        let p = &x.pow(2) + &MPoly::var(&v, "y").unwrap();
        let e = p.embed(&big).unwrap();
        assert_eq!(e.coefficient_of(&[0, 2, 0]), int(1));
        let cs = p.coefficients_in(0);
        assert_eq!(cs.len(), 3);
        assert!(cs[1].is_zero());
    }
}
