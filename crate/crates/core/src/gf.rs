//! Finite fields F_{l^m} with small cardinality, and dense matrices over them.
//!
//! Elements are encoded as integers in [0, l^m): the base-l digits of the code
//! are the coefficients of the residue polynomial, constant term first.  For
//! m > 1 the modulus is the lexicographically first monic irreducible
//! polynomial of degree m, ordering coefficient vectors (c_0, c_1, ...)
//! ascending.  This makes every encoding decision deterministic.

use crate::error::Error;

pub type Elt = u64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fq {
    pub l: u64,
    pub m: u32,
    pub q: u64,
    /// modulus coefficients, constant first, length m+1, monic; empty for m = 1
    pub modulus: Vec<u64>,
    /// x^(m+i) mod modulus for i in 0..m-1, as coefficient vectors of length m
    red: Vec<Vec<u64>>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Fq {
    pub fn new(l: u64, m: u32) -> Result<Fq, Error> {
        if !is_prime(l) {
            return Err(Error::usage(format!("{l} is not prime")));
        }
        if m == 0 {
            return Err(Error::usage("field degree must be positive"));
        }
        let q = l
            .checked_pow(m)
            .filter(|&q| q <= 1 << 31)
            .ok_or_else(|| Error::resource(format!("field size {l}^{m} too large")))?;
        if m == 1 {
            return Ok(Fq { l, m, q, modulus: vec![], red: vec![] });
        }
        let modulus = first_irreducible(l, m)?;
        let mut red = Vec::with_capacity(m as usize - 1);
        // x^m = -(c_0 + c_1 x + ... + c_{m-1} x^{m-1})
        let base: Vec<u64> = (0..m as usize).map(|i| (l - modulus[i] % l) % l).collect();
        red.push(base.clone());
        for _ in 1..m - 1 {
            let prev = red.last().unwrap().clone();
            // multiply by x and reduce
            let mut nxt = vec![0u64; m as usize];
            for i in 0..m as usize - 1 {
                nxt[i + 1] = prev[i];
            }
            let top = prev[m as usize - 1];
            for i in 0..m as usize {
                nxt[i] = (nxt[i] + top * base[i]) % l;
            }
            red.push(nxt);
        }
        Ok(Fq { l, m, q, modulus, red })
    }

    pub fn zero(&self) -> Elt {
        0
    }
    pub fn one(&self) -> Elt {
        1
    }

    pub fn from_int(&self, n: i64) -> Elt {
        // embeds the prime field
        let r = n.rem_euclid(self.l as i64) as u64;
        r
    }

    fn decode(&self, x: Elt) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.m as usize);
        let mut x = x;
        for _ in 0..self.m {
            v.push(x % self.l);
            x /= self.l;
        }
        v
    }

    fn encode(&self, v: &[u64]) -> Elt {
        let mut x = 0u64;
        for &c in v.iter().rev() {
            x = x * self.l + c % self.l;
        }
        x
    }

    pub fn add(&self, a: Elt, b: Elt) -> Elt {
        if self.m == 1 {
            return (a + b) % self.l;
        }
        let (va, vb) = (self.decode(a), self.decode(b));
        let v: Vec<u64> = va.iter().zip(&vb).map(|(x, y)| (x + y) % self.l).collect();
        self.encode(&v)
    }

    pub fn neg(&self, a: Elt) -> Elt {
        if self.m == 1 {
            return (self.l - a % self.l) % self.l;
        }
        let va = self.decode(a);
        let v: Vec<u64> = va.iter().map(|x| (self.l - x % self.l) % self.l).collect();
        self.encode(&v)
    }

    pub fn sub(&self, a: Elt, b: Elt) -> Elt {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        if self.m == 1 {
            return a * b % self.l;
        }
        let (va, vb) = (self.decode(a), self.decode(b));
        let md = self.m as usize;
        let mut conv = vec![0u128; 2 * md - 1];
        for i in 0..md {
            if va[i] == 0 {
                continue;
            }
            for j in 0..md {
                conv[i + j] += va[i] as u128 * vb[j] as u128;
            }
        }
        let mut v = vec![0u64; md];
        for i in 0..md {
            v[i] = (conv[i] % self.l as u128) as u64;
        }
        for i in 0..md - 1 {
            let c = (conv[md + i] % self.l as u128) as u64;
            if c == 0 {
                continue;
            }
            for j in 0..md {
                v[j] = (v[j] + c * self.red[i][j]) % self.l;
            }
        }
        self.encode(&v)
    }

    pub fn pow(&self, a: Elt, mut e: u64) -> Elt {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            base = self.mul(base, base);
        }
        acc
    }

    pub fn inv(&self, a: Elt) -> Elt {
        assert!(a != 0, "division by zero");
        self.pow(a, self.q - 2)
    }

    /// a^e with e possibly negative.
    pub fn powi(&self, a: Elt, e: i64) -> Elt {
        if e >= 0 {
            self.pow(a, e as u64)
        } else {
            self.pow(self.inv(a), (-e) as u64)
        }
    }

    pub fn mult_order(&self, a: Elt) -> u64 {
        assert!(a != 0);
        let mut ord = self.q - 1;
        for p in prime_factors(self.q - 1) {
            while ord % p == 0 && self.pow(a, ord / p) == 1 {
                ord /= p;
            }
        }
        ord
    }

    /// Smallest generator of the multiplicative group, in encoding order.
    pub fn generator(&self) -> Elt {
        for g in 2..self.q {
            if self.mult_order(g) == self.q - 1 {
                return g;
            }
        }
        1 // q = 2
    }

    /// Canonical primitive n-th root of unity: g^((q-1)/n) for the smallest generator.
    pub fn root_of_unity(&self, n: u64) -> Result<Elt, Error> {
        if n == 0 || (self.q - 1) % n != 0 {
            return Err(Error::pre(format!("no {n}-th roots of unity in F_{}", self.q)));
        }
        Ok(self.pow(self.generator(), (self.q - 1) / n))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elt> {
        0..self.q
    }
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Lexicographically first monic irreducible polynomial of degree m over F_l,
/// coefficient vectors (c_0, ..., c_{m-1}) ordered ascending.
fn first_irreducible(l: u64, m: u32) -> Result<Vec<u64>, Error> {
    let md = m as usize;
    let total = l.checked_pow(m).unwrap();
    for code in 0..total {
        let mut coeffs = Vec::with_capacity(md + 1);
        let mut x = code;
        for _ in 0..md {
            coeffs.push(x % l);
            x /= l;
        }
        coeffs.push(1); // monic
        if poly_irreducible(&coeffs, l) {
            return Ok(coeffs);
        }
    }
    Err(Error::math(format!("no irreducible polynomial of degree {m} over F_{l}")))
}

/// Irreducibility over F_l by the derivative-free criterion:
/// f irreducible of degree m iff x^(l^m) = x mod f and gcd(x^(l^(m/p)) - x, f) = 1
/// for every prime p | m.  Polynomials are dense coefficient vectors over F_l.
fn poly_irreducible(f: &[u64], l: u64) -> bool {
    let m = f.len() - 1;
    let xq = |e: u32, f: &[u64]| -> Vec<u64> {
        // x^(l^e) mod f by repeated Frobenius powering
        let mut h = vec![0, 1]; // x
        for _ in 0..e {
            h = poly_powmod(&h, l, f, l);
        }
        h
    };
    let x = vec![0u64, 1];
    let mut h = xq(m as u32, f);
    h = poly_mod(&poly_sub(&h, &x, l), f, l);
    if !h.is_empty() {
        return false;
    }
    for p in prime_factors(m as u64) {
        let e = m as u32 / p as u32;
        let mut g = xq(e, f);
        g = poly_mod(&poly_sub(&g, &x, l), f, l);
        if poly_gcd(&g, f, l).len() > 1 {
            return false;
        }
    }
    true
}

fn poly_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + l - y % l) % l;
    }
    poly_trim(out)
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], l: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut conv = vec![0u128; a.len() + b.len() - 1];
    for i in 0..a.len() {
        for j in 0..b.len() {
            conv[i + j] += a[i] as u128 * b[j] as u128;
        }
    }
    let c: Vec<u64> = conv.iter().map(|&x| (x % l as u128) as u64).collect();
    poly_mod(&poly_trim(c), f, l)
}

fn poly_mod(a: &[u64], f: &[u64], l: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    r = poly_trim(r);
    let df = f.len() - 1;
    let finv = mod_inv(f[df], l);
    while r.len() > df {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - df;
        let c = lead * finv % l;
        for i in 0..=df {
            let idx = shift + i;
            r[idx] = (r[idx] + l - c * f[i] % l) % l;
        }
        r = poly_trim(r);
    }
    r
}

fn poly_powmod(base: &[u64], mut e: u64, f: &[u64], l: u64) -> Vec<u64> {
    let mut b = poly_mod(base, f, l);
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, f, l);
        }
        e >>= 1;
        b = poly_mulmod(&b, &b, f, l);
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], l: u64) -> Vec<u64> {
    let (mut a, mut b) = (poly_trim(a.to_vec()), poly_trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_mod(&a, &b, l);
        a = b;
        b = r;
    }
    a
}

fn mod_inv(a: u64, l: u64) -> u64 {
    // l prime
    let mut acc = 1u64;
    let mut base = a % l;
    let mut e = l - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % l;
        }
        e >>= 1;
        base = base * base % l;
    }
    acc
}

// ---------------------------------------------------------------------------
// matrices over Fq

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FMat {
    pub nrows: usize,
    pub ncols: usize,
    pub a: Vec<Elt>,
}

impl std::fmt::Debug for FMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FMat {}x{} [", self.nrows, self.ncols)?;
        for r in 0..self.nrows {
            writeln!(f, "  {:?}", &self.a[r * self.ncols..(r + 1) * self.ncols])?;
        }
        write!(f, "]")
    }
}

impl FMat {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        FMat { nrows, ncols, a: vec![0; nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = FMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Elt>]) -> Self {
        let nrows = rows.len();
        let ncols = if nrows == 0 { 0 } else { rows[0].len() };
        let mut a = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols);
            a.extend_from_slice(r);
        }
        FMat { nrows, ncols, a }
    }

    pub fn from_int_mat(f: &Fq, m: &crate::linalg::IntMat) -> Self {
        let a = m.a.iter().map(|&x| f.from_int(x)).collect();
        FMat { nrows: m.nrows, ncols: m.ncols, a }
    }

    pub fn row(&self, r: usize) -> &[Elt] {
        &self.a[r * self.ncols..(r + 1) * self.ncols]
    }

    pub fn mul(&self, f: &Fq, other: &FMat) -> FMat {
        assert_eq!(self.ncols, other.nrows);
        let mut out = FMat::zero(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let x = self[(i, k)];
                if x == 0 {
                    continue;
                }
                for j in 0..other.ncols {
                    let p = f.mul(x, other[(k, j)]);
                    out[(i, j)] = f.add(out[(i, j)], p);
                }
            }
        }
        out
    }

    pub fn apply(&self, f: &Fq, v: &[Elt]) -> Vec<Elt> {
        assert_eq!(self.ncols, v.len());
        (0..self.nrows)
            .map(|i| {
                let mut acc = 0;
                for j in 0..self.ncols {
                    acc = f.add(acc, f.mul(self[(i, j)], v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, f: &Fq, other: &FMat) -> FMat {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let a = self.a.iter().zip(&other.a).map(|(&x, &y)| f.add(x, y)).collect();
        FMat { nrows: self.nrows, ncols: self.ncols, a }
    }

    pub fn sub(&self, f: &Fq, other: &FMat) -> FMat {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let a = self.a.iter().zip(&other.a).map(|(&x, &y)| f.sub(x, y)).collect();
        FMat { nrows: self.nrows, ncols: self.ncols, a }
    }

    pub fn scale(&self, f: &Fq, c: Elt) -> FMat {
        let a = self.a.iter().map(|&x| f.mul(x, c)).collect();
        FMat { nrows: self.nrows, ncols: self.ncols, a }
    }

    pub fn transpose(&self) -> FMat {
        let mut out = FMat::zero(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn pow(&self, f: &Fq, mut e: u64) -> FMat {
        assert_eq!(self.nrows, self.ncols);
        let mut base = self.clone();
        let mut acc = FMat::identity(self.nrows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(f, &base);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        if self.nrows != self.ncols {
            return false;
        }
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                let want = if i == j { 1 } else { 0 };
                if self[(i, j)] != want {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_scalar(&self) -> Option<Elt> {
        if self.nrows != self.ncols || self.nrows == 0 {
            return None;
        }
        let c = self[(0, 0)];
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                let want = if i == j { c } else { 0 };
                if self[(i, j)] != want {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn trace(&self, f: &Fq) -> Elt {
        assert_eq!(self.nrows, self.ncols);
        let mut acc = 0;
        for i in 0..self.nrows {
            acc = f.add(acc, self[(i, i)]);
        }
        acc
    }

    /// Row echelon reduction in place; returns the rank and pivot columns.
    pub fn row_reduce(&mut self, f: &Fq) -> (usize, Vec<usize>) {
        let mut rank = 0;
        let mut pivots = Vec::new();
        for col in 0..self.ncols {
            let mut pivot = None;
            for r in rank..self.nrows {
                if self[(r, col)] != 0 {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            for j in 0..self.ncols {
                let tmp = self[(rank, j)];
                self[(rank, j)] = self[(p, j)];
                self[(p, j)] = tmp;
            }
            let inv = f.inv(self[(rank, col)]);
            for j in col..self.ncols {
                self[(rank, j)] = f.mul(self[(rank, j)], inv);
            }
            for r in 0..self.nrows {
                if r != rank && self[(r, col)] != 0 {
                    let c = self[(r, col)];
                    for j in col..self.ncols {
                        let s = f.mul(c, self[(rank, j)]);
                        self[(r, j)] = f.sub(self[(r, j)], s);
                    }
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == self.nrows {
                break;
            }
        }
        (rank, pivots)
    }

    pub fn rank(&self, f: &Fq) -> usize {
        let mut m = self.clone();
        m.row_reduce(f).0
    }

    /// Basis of the right nullspace, as rows.
    pub fn nullspace(&self, f: &Fq) -> Vec<Vec<Elt>> {
        let mut m = self.clone();
        let (_, pivots) = m.row_reduce(f);
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0u64; self.ncols];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                // row r reads: x_pc + sum over later columns = 0
                v[pc] = f.neg(m[(r, fc)]);
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self, f: &Fq) -> Option<FMat> {
        assert_eq!(self.nrows, self.ncols);
        let n = self.nrows;
        let mut aug = FMat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = 1;
        }
        let (_, pivots) = aug.row_reduce(f);
        // invertible iff the pivots stay inside the left block
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut out = FMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)];
            }
        }
        Some(out)
    }

    pub fn det(&self, f: &Fq) -> Elt {
        assert_eq!(self.nrows, self.ncols);
        let n = self.nrows;
        let mut m = self.clone();
        let mut det = f.one();
        for col in 0..n {
            let mut pivot = None;
            for r in col..n {
                if m[(r, col)] != 0 {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(p) = pivot else { return 0 };
            if p != col {
                for j in 0..n {
                    let tmp = m[(col, j)];
                    m[(col, j)] = m[(p, j)];
                    m[(p, j)] = tmp;
                }
                det = f.neg(det);
            }
            det = f.mul(det, m[(col, col)]);
            let inv = f.inv(m[(col, col)]);
            for r in col + 1..n {
                if m[(r, col)] != 0 {
                    let c = f.mul(m[(r, col)], inv);
                    for j in col..n {
                        let s = f.mul(c, m[(col, j)]);
                        m[(r, j)] = f.sub(m[(r, j)], s);
                    }
                }
            }
        }
        det
    }

    /// Sum of principal k x k minors: the k-th elementary symmetric function of
    /// the eigenvalues, i.e. the trace of the k-th exterior power.
    pub fn exterior_trace(&self, f: &Fq, k: usize) -> Elt {
        assert_eq!(self.nrows, self.ncols);
        let n = self.nrows;
        if k == 0 {
            return 1;
        }
        if k > n {
            return 0;
        }
        let mut acc = 0;
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mut sub = FMat::zero(k, k);
            for i in 0..k {
                for j in 0..k {
                    sub[(i, j)] = self[(idx[i], idx[j])];
                }
            }
            acc = f.add(acc, sub.det(f));
            // next combination
            let mut i = k;
            loop {
                if i == 0 {
                    return acc;
                }
                i -= 1;
                if idx[i] != i + n - k {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
}

/// Incremental row-echelon accumulator: feed rows one at a time, tracking the
/// rank without storing dependent rows.
pub struct Echelon {
    f: Fq,
    ncols: usize,
    /// normalized pivot rows, sorted by pivot column
    rows: Vec<Vec<Elt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(f: &Fq, ncols: usize) -> Echelon {
        Echelon { f: f.clone(), ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Reduces the row against the current basis; returns true when it was
    /// independent (rank grew).
    pub fn insert(&mut self, mut row: Vec<Elt>) -> bool {
        assert_eq!(row.len(), self.ncols);
        let f = &self.f;
        for (r, &p) in self.pivots.iter().enumerate() {
            if row[p] != 0 {
                let c = row[p];
                for j in p..self.ncols {
                    let s = f.mul(c, self.rows[r][j]);
                    row[j] = f.sub(row[j], s);
                }
            }
        }
        let Some(p) = row.iter().position(|&x| x != 0) else { return false };
        let inv = f.inv(row[p]);
        for x in row.iter_mut() {
            *x = f.mul(*x, inv);
        }
        // keep pivot list sorted so reduction stays one forward pass
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, row);
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Expresses v in the span; None if independent.  Callers that need exact
    /// coordinates should insert a spanning set first.
    pub fn reduce_to_zero(&self, mut v: Vec<Elt>) -> bool {
        let f = &self.f;
        for (r, &p) in self.pivots.iter().enumerate() {
            if v[p] != 0 {
                let c = v[p];
                for j in p..self.ncols {
                    let s = f.mul(c, self.rows[r][j]);
                    v[j] = f.sub(v[j], s);
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }
}

impl std::ops::Index<(usize, usize)> for FMat {
    type Output = Elt;
    fn index(&self, (r, c): (usize, usize)) -> &Elt {
        &self.a[r * self.ncols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Elt {
        &mut self.a[r * self.ncols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Fq::new(13, 1).unwrap();
        assert_eq!(f.mul(3, 9), 1);
        assert_eq!(f.inv(3), 9);
        assert_eq!(f.pow(2, 12), 1);
        assert_eq!(f.mult_order(2), 12);
        assert_eq!(f.generator(), 2);
        assert_eq!(f.root_of_unity(3).unwrap(), f.pow(2, 4)); // 16 mod 13 = 3
    }

    #[test]
    fn extension_field_is_a_field() {
        let f = Fq::new(13, 2).unwrap();
        assert_eq!(f.q, 169);
        // x^2 + 2 is the first irreducible: -1 is a square mod 13, -2 is not
        assert_eq!(f.modulus, vec![2, 0, 1]);
        for a in 1..f.q {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        // Frobenius has order 2
        let g = f.generator();
        let frob = f.pow(g, 13);
        assert_ne!(frob, g);
        assert_eq!(f.pow(frob, 13), g);
    }

    #[test]
    fn cube_roots_exist_in_f169_not_f13() {
        let f13 = Fq::new(13, 1).unwrap();
        assert!(f13.root_of_unity(3).is_err() == false); // 3 | 12, fine
        let f169 = Fq::new(13, 2).unwrap();
        let z = f169.root_of_unity(3).unwrap();
        assert_ne!(z, 1);
        assert_eq!(f169.pow(z, 3), 1);
        // but 7th roots live only in F_169
        assert!(f13.root_of_unity(7).is_err());
        let z7 = f169.root_of_unity(7).unwrap();
        assert_eq!(f169.pow(z7, 7), 1);
        assert_ne!(z7, 1);
    }

    #[test]
    fn matrix_inverse_and_nullspace() {
        let f = Fq::new(7, 1).unwrap();
        let m = FMat::from_rows(&[vec![1, 2], vec![3, 4]]);
        let inv = m.inverse(&f).unwrap();
        assert!(m.mul(&f, &inv).is_identity());
        let sing = FMat::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert!(sing.inverse(&f).is_none());
        let ns = sing.nullspace(&f);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert_eq!(sing.apply(&f, v), vec![0, 0]);
    }

    #[test]
    fn exterior_traces_match_char_poly_coefficients() {
        let f = Fq::new(13, 1).unwrap();
        let m = FMat::from_rows(&[vec![3, 0, 0], vec![0, 9, 0], vec![0, 0, 1]]);
        assert_eq!(m.exterior_trace(&f, 1), f.from_int(3 + 9 + 1));
        assert_eq!(m.exterior_trace(&f, 2), f.from_int(27 + 3 + 9));
        assert_eq!(m.exterior_trace(&f, 3), f.from_int(27));
    }
}
