use std::cmp::Ordering;

/// Exponent vector, one entry per variable of the owning table.
///
/// `Ord` is graded reverse lexicographic: higher total degree wins; on a tie
/// the monomial with the smaller exponent in the last differing variable is
/// the larger one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn var(nvars: usize, k: usize, power: u32) -> Self {
        let mut e = vec![0; nvars];
        e[k] = power;
        Monomial(e.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial::from_exponents)
    }

    /// Exponent-wise half, when every exponent is even.
    pub fn half(&self) -> Option<Monomial> {
        if self.0.iter().all(|e| e % 2 == 0) {
            Some(Monomial(self.0.iter().map(|e| e / 2).collect()))
        } else {
            None
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(other.0.iter()).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_order() {
        // x > y > z, degree first
        assert!(m(&[1, 0, 0]) > m(&[0, 1, 0]));
        assert!(m(&[0, 1, 0]) > m(&[0, 0, 1]));
        assert!(m(&[0, 0, 2]) > m(&[1, 0, 0]));
        // x^2 y^0 z^1 vs x y^2 : same degree 3 ; last var z: 1 vs 0 -> second larger
        assert!(m(&[1, 2, 0]) > m(&[2, 0, 1]));
        // classic grevlex: x y z < x^2 z ? last var equal (1), then y: 1 vs 0 -> x^2 z larger
        assert!(m(&[2, 0, 1]) > m(&[1, 1, 1]));
    }

    #[test]
    fn division() {
        assert_eq!(m(&[2, 1]).div(&m(&[1, 1])), Some(m(&[1, 0])));
        assert_eq!(m(&[0, 1]).div(&m(&[1, 0])), None);
        assert_eq!(m(&[2, 4]).half(), Some(m(&[1, 2])));
        assert_eq!(m(&[1, 4]).half(), None);
    }
}
