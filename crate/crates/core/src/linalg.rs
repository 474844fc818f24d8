//! Dense integer matrices, Smith normal form and a fraction-free determinant.
//!
//! Everything here works at "desk scale" (dimensions up to a few hundred) and
//! is exact: entries are `i64`, intermediate products go through `i128`.

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMat {
    pub nrows: usize,
    pub ncols: usize,
    pub a: Vec<i64>,
}

impl std::fmt::Debug for IntMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMat {}x{} [", self.nrows, self.ncols)?;
        for r in 0..self.nrows {
            writeln!(f, "  {:?}", &self.a[r * self.ncols..(r + 1) * self.ncols])?;
        }
        write!(f, "]")
    }
}

fn mul_i64(x: i64, y: i64) -> i64 {
    let p = (x as i128) * (y as i128);
    assert!(p >= i64::MIN as i128 && p <= i64::MAX as i128, "integer overflow");
    p as i64
}

impl IntMat {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        IntMat { nrows, ncols, a: vec![0; nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = if nrows == 0 { 0 } else { rows[0].len() };
        let mut a = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols);
            a.extend_from_slice(r);
        }
        IntMat { nrows, ncols, a }
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.a[r * self.ncols..(r + 1) * self.ncols]
    }

    pub fn col(&self, c: usize) -> Vec<i64> {
        (0..self.nrows).map(|r| self[(r, c)]).collect()
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.ncols, other.nrows);
        let mut out = IntMat::zero(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let x = self[(i, k)];
                if x == 0 {
                    continue;
                }
                for j in 0..other.ncols {
                    out[(i, j)] = out[(i, j)].checked_add(mul_i64(x, other[(k, j)])).expect("overflow");
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.ncols, v.len());
        (0..self.nrows)
            .map(|i| {
                (0..self.ncols)
                    .map(|j| mul_i64(self[(i, j)], v[j]))
                    .fold(0i64, |acc, x| acc.checked_add(x).expect("overflow"))
            })
            .collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut out = IntMat::zero(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn add(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let a = self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect();
        IntMat { nrows: self.nrows, ncols: self.ncols, a }
    }

    pub fn sub(&self, other: &IntMat) -> IntMat {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let a = self.a.iter().zip(&other.a).map(|(x, y)| x - y).collect();
        IntMat { nrows: self.nrows, ncols: self.ncols, a }
    }

    pub fn scale(&self, c: i64) -> IntMat {
        let a = self.a.iter().map(|x| mul_i64(*x, c)).collect();
        IntMat { nrows: self.nrows, ncols: self.ncols, a }
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols && *self == IntMat::identity(self.nrows)
    }

    pub fn pow(&self, mut e: u64) -> IntMat {
        assert_eq!(self.nrows, self.ncols);
        let mut base = self.clone();
        let mut acc = IntMat::identity(self.nrows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative order, for matrices of finite order (lattice automorphisms).
    pub fn order(&self, cap: u64) -> Result<u64, Error> {
        let mut p = self.clone();
        for k in 1..=cap {
            if p.is_identity() {
                return Ok(k);
            }
            p = p.mul(self);
        }
        Err(Error::math(format!("matrix order exceeds cap {cap}")))
    }

    /// Inverse of a finite-order matrix: the (order-1)-th power.
    pub fn finite_order_inverse(&self, cap: u64) -> Result<IntMat, Error> {
        let ord = self.order(cap)?;
        Ok(self.pow(ord - 1))
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det_bareiss(&self) -> i64 {
        assert_eq!(self.nrows, self.ncols);
        let n = self.nrows;
        if n == 0 {
            return 1;
        }
        let mut m: Vec<i128> = self.a.iter().map(|&x| x as i128).collect();
        let at = |m: &Vec<i128>, i: usize, j: usize| m[i * n + j];
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if at(&m, k, k) == 0 {
                let mut swap = None;
                for i in k + 1..n {
                    if at(&m, i, k) != 0 {
                        swap = Some(i);
                        break;
                    }
                }
                match swap {
                    None => return 0,
                    Some(i) => {
                        for j in 0..n {
                            m.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = at(&m, i, j) * at(&m, k, k) - at(&m, i, k) * at(&m, k, j);
                    m[i * n + j] = num / prev;
                }
            }
            prev = at(&m, k, k);
        }
        let d = sign * at(&m, n - 1, n - 1);
        assert!(d >= i64::MIN as i128 && d <= i64::MAX as i128);
        d as i64
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = i64;
    fn index(&self, (r, c): (usize, usize)) -> &i64 {
        &self.a[r * self.ncols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut i64 {
        &mut self.a[r * self.ncols + c]
    }
}

/// Smith normal form: the invariant factors of the integer matrix, nonnegative,
/// each dividing the next, padded with zeros up to min(nrows, ncols).
pub fn smith_normal_form(mat: &IntMat) -> Vec<i64> {
    let (nr, nc) = (mat.nrows, mat.ncols);
    let mut m: Vec<i128> = mat.a.iter().map(|&x| x as i128).collect();
    let n = nr.min(nc);
    let mut factors = vec![0i128; n];
    let at = |m: &Vec<i128>, i: usize, j: usize| m[i * nc + j];

    for t in 0..n {
        // find a nonzero pivot in the remaining block, smallest |value|
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                let v = at(&m, i, j);
                if v != 0 {
                    match pivot {
                        None => pivot = Some((i, j)),
                        Some(p) => {
                            if v.abs() < at(&m, p.0, p.1).abs() {
                                pivot = Some((i, j));
                            }
                        }
                    }
                }
            }
        }
        let (pi, pj) = match pivot {
            None => break,
            Some(p) => p,
        };
        for j in 0..nc {
            m.swap(t * nc + j, pi * nc + j);
        }
        for i in 0..nr {
            m.swap(i * nc + t, i * nc + pj);
        }

        loop {
            // reduce column t below the pivot
            let mut clean = true;
            for i in t + 1..nr {
                let q = at(&m, i, t).div_euclid(at(&m, t, t));
                if q != 0 {
                    for j in t..nc {
                        m[i * nc + j] -= q * at(&m, t, j);
                    }
                }
                if at(&m, i, t) != 0 {
                    clean = false;
                    // remainder smaller than pivot: swap rows and restart
                    for j in 0..nc {
                        m.swap(t * nc + j, i * nc + j);
                    }
                    break;
                }
            }
            if !clean {
                continue;
            }
            // reduce row t right of the pivot
            for j in t + 1..nc {
                let q = at(&m, t, j).div_euclid(at(&m, t, t));
                if q != 0 {
                    for i in t..nr {
                        m[i * nc + j] -= q * at(&m, i, t);
                    }
                }
                if at(&m, t, j) != 0 {
                    clean = false;
                    for i in 0..nr {
                        m.swap(i * nc + t, i * nc + j);
                    }
                    break;
                }
            }
            if clean {
                break;
            }
        }
        factors[t] = at(&m, t, t).abs();
    }

    // enforce the divisibility chain d_i | d_{i+1}
    let k = factors.iter().position(|&d| d == 0).unwrap_or(n);
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..k.saturating_sub(1) {
            let (a, b) = (factors[i], factors[i + 1]);
            if b % a != 0 {
                let g = gcd_i128(a, b);
                let l = a / g * b;
                factors[i] = g;
                factors[i + 1] = l;
                changed = true;
            }
        }
    }
    factors.iter().map(|&d| d as i64).collect()
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    gcd_i128(a as i128, b as i128) as i64
}

/// Solves B x = v exactly over the rationals for square invertible B,
/// returning the solution only when it is integral.
pub fn solve_integer(b: &IntMat, v: &[i64]) -> Option<Vec<i64>> {
    assert_eq!(b.nrows, b.ncols);
    assert_eq!(b.nrows, v.len());
    let n = b.nrows;
    let det = b.det_bareiss();
    if det == 0 {
        return None;
    }
    // Cramer's rule; dimensions are tiny (rank <= 8).
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let mut bj = b.clone();
        for i in 0..n {
            bj[(i, j)] = v[i];
        }
        let dj = bj.det_bareiss();
        if dj % det != 0 {
            return None;
        }
        out.push(dj / det);
    }
    Some(out)
}

/// Solves B x = v over the rationals for B with full column rank (possibly
/// more rows than columns), returning the solution only when the system is
/// consistent and the solution integral.
pub fn solve_integer_rect(b: &IntMat, v: &[i64]) -> Option<Vec<i64>> {
    assert_eq!(b.nrows, v.len());
    let (nr, nc) = (b.nrows, b.ncols);
    // exact elimination on i128 fractions (num, den), den > 0
    let red = |num: i128, den: i128| -> (i128, i128) {
        let g = gcd_i128(num, den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        (s * num / g, s * den / g)
    };
    let mut m: Vec<(i128, i128)> = Vec::with_capacity(nr * (nc + 1));
    for i in 0..nr {
        for j in 0..nc {
            m.push((b[(i, j)] as i128, 1));
        }
        m.push((v[i] as i128, 1));
    }
    let w = nc + 1;
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..nc {
        let Some(p) = (rank..nr).find(|&r| m[r * w + col].0 != 0) else { continue };
        for j in 0..w {
            m.swap(rank * w + j, p * w + j);
        }
        let (pn, pd) = m[rank * w + col];
        for j in 0..w {
            let (n, d) = m[rank * w + j];
            m[rank * w + j] = red(n * pd, d * pn);
        }
        for r in 0..nr {
            if r == rank || m[r * w + col].0 == 0 {
                continue;
            }
            let (cn, cd) = m[r * w + col];
            for j in 0..w {
                let (n, d) = m[r * w + j];
                let (sn, sd) = m[rank * w + j];
                // n/d - (cn/cd)(sn/sd)
                let num = n * cd * sd - cn * sn * d;
                let den = d * cd * sd;
                m[r * w + j] = red(num, den);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rank < nc {
        return None; // not full column rank: no unique solution
    }
    for r in rank..nr {
        if m[r * w + nc].0 != 0 {
            return None; // inconsistent
        }
    }
    let mut out = vec![0i64; nc];
    for (r, &col) in pivots.iter().enumerate() {
        let (n, d) = m[r * w + nc];
        if d != 1 || n < i64::MIN as i128 || n > i64::MAX as i128 {
            return None;
        }
        out[col] = n as i64;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_diagonalizes_simple_matrices() {
        let m = IntMat::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(smith_normal_form(&m), vec![1, 6]);
        let m = IntMat::from_rows(&[vec![2, 4], vec![4, 8]]);
        assert_eq!(smith_normal_form(&m), vec![2, 0]);
        let m = IntMat::from_rows(&[vec![1, 0], vec![0, 0]]);
        assert_eq!(smith_normal_form(&m), vec![1, 0]);
    }

    #[test]
    fn snf_product_matches_det() {
        let m = IntMat::from_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        let f = smith_normal_form(&m);
        let prod: i64 = f.iter().product();
        assert_eq!(prod.abs(), m.det_bareiss().abs());
        assert_eq!(m.det_bareiss(), 4); // Cartan matrix of A3
    }

    #[test]
    fn bareiss_det_small_cases() {
        let m = IntMat::from_rows(&[vec![0, 1], vec![-1, 0]]);
        assert_eq!(m.det_bareiss(), 1);
        let m = IntMat::from_rows(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(m.det_bareiss(), -2);
        let m = IntMat::from_rows(&[vec![2, -2], vec![-1, 2]]);
        assert_eq!(m.det_bareiss(), 2); // Cartan matrix of B2
    }

    #[test]
    fn finite_order_inverse_of_rotation() {
        let w = IntMat::from_rows(&[vec![0, -1], vec![1, -1]]);
        let ord = w.order(100).unwrap();
        assert_eq!(ord, 3);
        let winv = w.finite_order_inverse(100).unwrap();
        assert!(w.mul(&winv).is_identity());
    }

    #[test]
    fn integer_solve_recovers_coefficients() {
        let b = IntMat::from_rows(&[vec![1, 1], vec![0, 2]]);
        assert_eq!(solve_integer(&b, &[3, 4]), Some(vec![1, 2]));
        assert_eq!(solve_integer(&b, &[0, 1]), None); // non-integral solution
    }

    #[test]
    fn rect_solve_handles_overdetermined_systems() {
        // columns (1,0,1) and (0,1,1); target 2*c0 + 3*c1
        let b = IntMat::from_rows(&[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(solve_integer_rect(&b, &[2, 3, 5]), Some(vec![2, 3]));
        assert_eq!(solve_integer_rect(&b, &[2, 3, 6]), None); // inconsistent
        let half = IntMat::from_rows(&[vec![2], vec![2]]);
        assert_eq!(solve_integer_rect(&half, &[1, 1]), None); // non-integral
    }
}
