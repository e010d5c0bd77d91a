//! Exact linear algebra over the rationals, the integers, a prime field and
//! polynomial rings.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::MPoly;
use crate::rat::{common_denominator, primitive_integer_vector, Rat};

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn diagonal(entries: &[Rat]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn scale(&self, c: &Rat) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Reduced row-echelon form and pivot columns, by Gauss-Jordan over Q.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = &m[(r, j)] * &f;
                    m[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn determinant(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "square matrix required");
        let rows = integer_rows(self);
        let scale: Rat = (0..self.rows)
            .map(|i| Rat::from_integer(common_denominator(self.row(i))))
            .product();
        Rat::from_integer(bareiss_determinant(rows)) / scale
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "square matrix required");
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|r| r.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Each row multiplied by the lcm of its denominators.
pub fn integer_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let d = Rat::from_integer(common_denominator(m.row(i)));
            m.row(i).iter().map(|r| (r * &d).to_integer()).collect()
        })
        .collect()
}

/// Fraction-free row echelon form.
///
/// Every entry stays an integer: the update `a_ij <- (p·a_ij − a_ik·a_rj) / prev`
/// divides exactly, so intermediate sizes stay bounded by minors of the input.
pub fn bareiss_echelon(mut rows: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let piv = rows[r][c].clone();
        for i in r + 1..nrows {
            let lead = rows[i][c].clone();
            for j in c..ncols {
                let v = (&piv * &rows[i][j] - &lead * &rows[r][j]) / &prev;
                rows[i][j] = v;
            }
            for j in 0..c {
                rows[i][j] = BigInt::zero();
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

fn bareiss_determinant(rows: Vec<Vec<BigInt>>) -> BigInt {
    let n = rows.len();
    let mut rows = rows;
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !rows[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            rows.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&rows[k][k] * &rows[i][j] - &rows[i][k] * &rows[k][j]) / &prev;
                rows[i][j] = v;
            }
        }
        prev = rows[k][k].clone();
    }
    sign * prev
}

/// Right kernel of `m` in canonical form.
///
/// The rows are cleared of denominators and brought to echelon form by
/// [`bareiss_echelon`]; the echelon form is reduced over Q, a kernel basis is
/// read off the free columns, put in reduced row-echelon form, and each vector
/// is scaled to coprime integers with positive leading entry.
pub fn kernel(m: &Matrix) -> Vec<Vec<Rat>> {
    let (ech, pivots) = bareiss_echelon(integer_rows(m));
    let ech = Matrix::from_rows(
        ech.into_iter()
            .map(|row| row.into_iter().map(Rat::from_integer).collect())
            .collect(),
    );
    let ncols = m.cols();
    let (red, piv) = if ech.rows() == 0 {
        (Matrix::zeros(0, ncols), Vec::new())
    } else {
        ech.rref()
    };
    debug_assert_eq!(piv, pivots);
    let free: Vec<usize> = (0..ncols).filter(|c| !piv.contains(c)).collect();
    let raw: Vec<Vec<Rat>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (i, &p) in piv.iter().enumerate() {
                v[p] = -red[(i, f)].clone();
            }
            v
        })
        .collect();
    canonical_span_basis(&raw)
}

/// Canonical basis of the row span: reduced row-echelon form with each row
/// scaled to primitive integers.
pub fn canonical_span_basis(vectors: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (r, piv) = Matrix::from_rows(vectors.to_vec()).rref();
    (0..piv.len())
        .map(|i| {
            primitive_integer_vector(r.row(i))
                .into_iter()
                .map(Rat::from_integer)
                .collect()
        })
        .collect()
}

/// 2^61 − 1.
pub const MERSENNE_61: u64 = (1 << 61) - 1;

fn reduce_mod(r: &Rat, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let n = r.numer().mod_floor(&pb).to_u64()?;
    let d = r.denom().mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    Some(mulmod(n, powmod(d, p - 2, p), p))
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Rank over the prime field F_p, or `None` when some denominator vanishes
/// mod `p`. `p` must be prime.
pub fn rank_mod_p(m: &Matrix, p: u64) -> Option<usize> {
    let mut a: Vec<Vec<u64>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|r| reduce_mod(r, p)).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    let (nr, nc) = (m.rows(), m.cols());
    let mut rank = 0;
    for c in 0..nc {
        if rank == nr {
            break;
        }
        let Some(piv) = (rank..nr).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = powmod(a[rank][c], p - 2, p);
        for i in rank + 1..nr {
            if a[i][c] == 0 {
                continue;
            }
            let f = mulmod(a[i][c], inv, p);
            for j in c..nc {
                let sub = mulmod(f, a[rank][j], p);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    Some(rank)
}

/// Determinant of a square matrix of polynomials by Bareiss elimination with
/// exact polynomial division.
pub fn mpoly_determinant(entries: &[Vec<MPoly>]) -> MPoly {
    let n = entries.len();
    assert!(n > 0 && entries.iter().all(|r| r.len() == n), "square matrix required");
    let vars = entries[0][0].vars().clone();
    let mut a = entries.to_vec();
    let mut prev = MPoly::one(&vars);
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return MPoly::zero(&vars);
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    if negate {
        -prev
    } else {
        prev
    }
}

/// Adjugate of a 3×3 polynomial matrix.
pub fn mpoly_adjugate3(m: &[Vec<MPoly>]) -> Vec<Vec<MPoly>> {
    let minor = |r0: usize, r1: usize, c0: usize, c1: usize| &(&m[r0][c0] * &m[r1][c1]) - &(&m[r0][c1] * &m[r1][c0]);
    let others = |k: usize| -> (usize, usize) {
        match k {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        }
    };
    (0..3)
        .map(|i| {
            (0..3)
                .map(|j| {
                    // adj[i][j] = (-1)^{i+j} · minor with row j and column i removed
                    let (r0, r1) = others(j);
                    let (c0, c1) = others(i);
                    let c = minor(r0, r1, c0, c1);
                    if (i + j) % 2 == 1 {
                        -c
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect()
}

/// True when the first nonzero entry is positive.
pub fn leading_positive(v: &[Rat]) -> bool {
    v.iter().find(|r| !r.is_zero()).is_some_and(|r| r.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, VarTable};
    use crate::rat::{int, rat};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        assert_eq!(a.determinant(), int(6));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(3));
        let s = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.determinant(), int(0));
        assert!(s.inverse().is_none());
        let h = Matrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 3), rat(1, 4)]]);
        assert_eq!(h.determinant(), rat(1, 72));
    }

    #[test]
    fn kernel_is_canonical() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 0, 1, 1]]);
        let k = kernel(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
            assert!(leading_positive(v));
        }
        let row_ops = m(&[&[0, 0, 1, 1], &[1, 2, 4, 5]]);
        assert_eq!(kernel(&row_ops), k);
        assert_eq!(rank_mod_p(&a, MERSENNE_61), Some(2));
    }

    #[test]
    fn polynomial_determinant() {
        let v = VarTable::of(&["t"]);
        let p = |s: &str| parse_poly(s, &v).unwrap();
        let d = mpoly_determinant(&[
            vec![p("t"), p("1"), p("0")],
            vec![p("1"), p("t"), p("1")],
            vec![p("0"), p("1"), p("t")],
        ]);
        assert_eq!(d, p("t^3 - 2 t"));
        let a = vec![
            vec![p("t"), p("1"), p("2")],
            vec![p("3"), p("t"), p("1")],
            vec![p("0"), p("1"), p("t^2")],
        ];
        let adj = mpoly_adjugate3(&a);
        let det = mpoly_determinant(&a);
        for i in 0..3 {
            for j in 0..3 {
                let mut s = MPoly::zero(&v);
                for k in 0..3 {
                    s += &a[i][k] * &adj[k][j];
                }
                let expect = if i == j { det.clone() } else { MPoly::zero(&v) };
                assert_eq!(s, expect);
            }
        }
    }
}
