//! Dense univariate polynomials over Fq, with enough factorization machinery
//! to split minimal polynomials: squarefree decomposition, distinct-degree
//! factorization, and seeded Cantor-Zassenhaus equal-degree splitting.
//!
//! Polynomials are coefficient vectors, constant term first, no trailing zeros.

use crate::error::Error;
use crate::gf::{Elt, FMat, Fq};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Poly = Vec<Elt>;

pub fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn deg(p: &Poly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn add(f: &Fq, a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let mut out = vec![0; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = f.add(x, y);
    }
    trim(out)
}

pub fn sub(f: &Fq, a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let mut out = vec![0; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = f.sub(x, y);
    }
    trim(out)
}

pub fn mul(f: &Fq, a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for i in 0..a.len() {
        if a[i] == 0 {
            continue;
        }
        for j in 0..b.len() {
            out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
        }
    }
    trim(out)
}

pub fn scale(f: &Fq, a: &Poly, c: Elt) -> Poly {
    trim(a.iter().map(|&x| f.mul(x, c)).collect())
}

pub fn monic(f: &Fq, a: &Poly) -> Poly {
    match a.last() {
        None => vec![],
        Some(&lead) if lead == 1 => a.clone(),
        Some(&lead) => scale(f, a, f.inv(lead)),
    }
}

pub fn divmod(f: &Fq, a: &Poly, b: &Poly) -> (Poly, Poly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let db = b.len() - 1;
    let mut r = a.clone();
    if r.len() <= db {
        return (vec![], trim(r));
    }
    let mut q = vec![0; r.len() - db];
    let linv = f.inv(b[db]);
    for k in (db..r.len()).rev() {
        let c = f.mul(r[k], linv);
        if c == 0 {
            continue;
        }
        q[k - db] = c;
        for i in 0..=db {
            let s = f.mul(c, b[i]);
            r[k - db + i] = f.sub(r[k - db + i], s);
        }
    }
    (trim(q), trim(r))
}

pub fn rem(f: &Fq, a: &Poly, b: &Poly) -> Poly {
    divmod(f, a, b).1
}

pub fn gcd(f: &Fq, a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    monic(f, &a)
}

pub fn pow_mod(f: &Fq, base: &Poly, mut e: u64, modulus: &Poly) -> Poly {
    let mut b = rem(f, base, modulus);
    let mut acc = vec![1];
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &b), modulus);
        }
        e >>= 1;
        b = rem(f, &mul(f, &b, &b), modulus);
    }
    acc
}

pub fn derivative(f: &Fq, a: &Poly) -> Poly {
    if a.len() <= 1 {
        return vec![];
    }
    let mut out = Vec::with_capacity(a.len() - 1);
    for i in 1..a.len() {
        let mut c = 0;
        for _ in 0..(i as u64 % f.l) {
            c = f.add(c, a[i]);
        }
        out.push(c);
    }
    trim(out)
}

pub fn eval(f: &Fq, a: &Poly, x: Elt) -> Elt {
    let mut acc = 0;
    for &c in a.iter().rev() {
        acc = f.add(f.mul(acc, x), c);
    }
    acc
}

/// Monic irreducible factors with multiplicity, sorted by (degree, coefficients).
pub fn factor(f: &Fq, p: &Poly, seed: u64) -> Result<Vec<(Poly, usize)>, Error> {
    let p = monic(f, p);
    if p.len() <= 1 {
        return Err(Error::pre("cannot factor a constant polynomial"));
    }
    let mut out: Vec<(Poly, usize)> = Vec::new();
    for (g, mult) in squarefree_parts(f, &p)? {
        for h in factor_squarefree(f, &g, seed)? {
            out.push((h, mult));
        }
    }
    out.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| {
        a.iter().rev().cmp(b.iter().rev())
    }));
    // sanity: the product reconstructs the input
    let mut prod = vec![1];
    for (g, m) in &out {
        for _ in 0..*m {
            prod = mul(f, &prod, g);
        }
    }
    if prod != p {
        return Err(Error::math("factorization product check failed"));
    }
    Ok(out)
}

/// (squarefree part, multiplicity) pairs via repeated gcd with the derivative.
/// Handles derivative-zero polynomials (p-th powers) by exponent division.
fn squarefree_parts(f: &Fq, p: &Poly) -> Result<Vec<(Poly, usize)>, Error> {
    let mut out: Vec<(Poly, usize)> = Vec::new();
    let mut stack = vec![(monic(f, p), 1usize)];
    while let Some((p, outer)) = stack.pop() {
        if p.len() <= 1 {
            continue;
        }
        let dp = derivative(f, &p);
        if dp.is_empty() {
            // p(x) = r(x^l); extract the l-th root coefficientwise
            // (Frobenius: c^(q/l) recovers the root of each coefficient only for
            // prime fields; for extensions take c^(q/l) as well since x -> x^l
            // has inverse x -> x^(q/l) on Fq)
            let l = f.l as usize;
            let mut root = Vec::with_capacity((p.len() - 1) / l + 1);
            for (i, &c) in p.iter().enumerate() {
                if i % l == 0 {
                    root.push(f.pow(c, f.q / f.l));
                } else if c != 0 {
                    return Err(Error::math("derivative-zero polynomial is not an l-th power"));
                }
            }
            stack.push((trim(root), outer * l));
            continue;
        }
        let mut c = gcd(f, &p, &dp);
        let mut w = divmod(f, &p, &c).0;
        // w holds each squarefree factor once; peel multiplicities
        let mut i = 1usize;
        while w.len() > 1 {
            let y = gcd(f, &w, &c);
            let fac = divmod(f, &w, &y).0;
            if fac.len() > 1 {
                out.push((monic(f, &fac), outer * i));
            }
            w = y.clone();
            c = divmod(f, &c, &y).0;
            i += 1;
        }
        if c.len() > 1 {
            stack.push((c, outer));
        }
    }
    Ok(out)
}

/// Irreducible factors of a squarefree monic polynomial.
fn factor_squarefree(f: &Fq, p: &Poly, seed: u64) -> Result<Vec<Poly>, Error> {
    let mut out = Vec::new();
    // distinct-degree: strip factors of degree d for d = 1, 2, ...
    let mut rest = p.clone();
    let mut h = vec![0, 1]; // x
    let mut d = 0usize;
    while rest.len() > 1 {
        d += 1;
        if 2 * d > rest.len() - 1 {
            // remainder is irreducible
            out.push(monic(f, &rest));
            break;
        }
        h = pow_mod(f, &h, f.q, &rest);
        let g = gcd(f, &sub(f, &h, &vec![0, 1]), &rest);
        if g.len() > 1 {
            equal_degree_split(f, &g, d, seed, &mut out)?;
            rest = divmod(f, &rest, &g).0;
            h = rem(f, &h, &rest);
        }
    }
    Ok(out)
}

/// Cantor-Zassenhaus split of a product of distinct irreducibles of degree d.
fn equal_degree_split(
    f: &Fq,
    p: &Poly,
    d: usize,
    seed: u64,
    out: &mut Vec<Poly>,
) -> Result<(), Error> {
    let n = p.len() - 1;
    if n == d {
        out.push(monic(f, p));
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 32 ^ d as u64);
    for _ in 0..200 {
        // random polynomial of degree < n
        let a: Poly = trim((0..n).map(|_| rng.gen_range(0..f.q)).collect());
        if a.len() <= 0 {
            continue;
        }
        let g = gcd(f, &a, p);
        let split = if g.len() > 1 && g.len() - 1 < n {
            g
        } else if f.l == 2 {
            // trace map: a + a^2 + a^4 + ... (q^d terms)
            let mut t = rem(f, &a, p);
            let mut acc = t.clone();
            let steps = (f.m as usize) * d;
            for _ in 1..steps {
                t = rem(f, &mul(f, &t, &t), p);
                acc = add(f, &acc, &t);
            }
            let g = gcd(f, &acc, p);
            if g.len() > 1 && g.len() - 1 < n {
                g
            } else {
                continue;
            }
        } else {
            let e = (f.q.pow(d as u32) - 1) / 2;
            let b = pow_mod(f, &a, e, p);
            let g = gcd(f, &sub(f, &b, &vec![1]), p);
            if g.len() > 1 && g.len() - 1 < n {
                g
            } else {
                continue;
            }
        };
        let other = divmod(f, p, &split).0;
        equal_degree_split(f, &split, d, seed.wrapping_add(1), out)?;
        equal_degree_split(f, &other, d, seed.wrapping_add(1), out)?;
        return Ok(());
    }
    Err(Error::math("equal-degree splitting failed to find a separating element"))
}

/// Minimal polynomial of a square matrix: lcm of the minimal polynomials of
/// the Krylov sequences of the standard basis vectors.
pub fn min_poly(f: &Fq, mat: &FMat) -> Poly {
    assert_eq!(mat.nrows, mat.ncols);
    let n = mat.nrows;
    let mut acc: Poly = vec![1];
    for start in 0..n {
        let mut e = vec![0; n];
        e[start] = 1;
        // reduce e by the relation already known
        let local = krylov_min_poly(f, mat, &e);
        let g = gcd(f, &acc, &local);
        let (q, r) = divmod(f, &mul(f, &acc, &local), &g);
        debug_assert!(r.is_empty());
        acc = monic(f, &q);
        if acc.len() == n + 1 {
            break;
        }
    }
    acc
}

fn krylov_min_poly(f: &Fq, mat: &FMat, v: &[Elt]) -> Poly {
    let n = mat.nrows;
    // rows of the echelon basis, paired with their coordinates in the Krylov basis
    let mut krylov: Vec<Vec<Elt>> = Vec::new();
    let mut cur = v.to_vec();
    loop {
        krylov.push(cur.clone());
        // test linear dependence of krylov vectors via row reduction
        let m = FMat::from_rows(&krylov);
        if m.rank(f) < krylov.len() {
            break;
        }
        if krylov.len() > n {
            break;
        }
        cur = mat.apply(f, &cur);
    }
    // last vector is dependent on the previous ones; solve for coefficients
    let k = krylov.len() - 1;
    let mut cols: Vec<Vec<Elt>> = Vec::new();
    for i in 0..k {
        cols.push(krylov[i].clone());
    }
    // solve sum c_i K_i = K_k
    let mut aug = FMat::zero(n, k + 1);
    for i in 0..k {
        for r in 0..n {
            aug[(r, i)] = cols[i][r];
        }
    }
    for r in 0..n {
        aug[(r, k)] = krylov[k][r];
    }
    let mut red = aug.clone();
    let (_, pivots) = red.row_reduce(f);
    let mut coef = vec![0; k];
    for (row, &pc) in pivots.iter().enumerate() {
        if pc < k {
            coef[pc] = red[(row, k)];
        }
    }
    // min poly: x^k - sum c_i x^i
    let mut p = vec![0; k + 1];
    p[k] = 1;
    for i in 0..k {
        p[i] = f.neg(coef[i]);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_roundtrip() {
        let f = Fq::new(13, 1).unwrap();
        let a = vec![1, 0, 2, 5, 7];
        let b = vec![3, 1, 4];
        let (q, r) = divmod(&f, &a, &b);
        let back = add(&f, &mul(&f, &q, &b), &r);
        assert_eq!(back, trim(a));
        assert!(r.len() < b.len());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = Fq::new(7, 1).unwrap();
        let p = vec![6, 1]; // x - 1
        let a = mul(&f, &p, &vec![1, 1, 1]);
        let b = mul(&f, &p, &vec![2, 0, 1]);
        assert_eq!(gcd(&f, &a, &b), monic(&f, &p));
    }

    #[test]
    fn factor_product_of_linears() {
        let f = Fq::new(13, 1).unwrap();
        // (x-1)(x-3)^2 (x-9)
        let mut p = vec![1];
        for (root, mult) in [(1u64, 1usize), (3, 2), (9, 1)] {
            for _ in 0..mult {
                p = mul(&f, &p, &vec![f.neg(root), 1]);
            }
        }
        let fs = factor(&f, &p, 42).unwrap();
        assert_eq!(fs.len(), 3);
        let mut mults: Vec<usize> = fs.iter().map(|(_, m)| *m).collect();
        mults.sort();
        assert_eq!(mults, vec![1, 1, 2]);
        for (g, _) in &fs {
            assert_eq!(g.len(), 2);
        }
    }

    #[test]
    fn factor_irreducible_quadratic() {
        let f = Fq::new(13, 1).unwrap();
        // x^2 + 2 has no roots mod 13
        let p = vec![2, 0, 1];
        let fs = factor(&f, &p, 7).unwrap();
        assert_eq!(fs, vec![(p, 1)]);
    }

    #[test]
    fn factor_cyclotomic_over_splitting_field() {
        // 13 = 1 mod 3: the cube roots of unity 3, 9 already live in F_13
        let f13 = Fq::new(13, 1).unwrap();
        let p = vec![1, 1, 1];
        let fs = factor(&f13, &p, 1).unwrap();
        assert_eq!(fs.len(), 2);
        for (g, _) in &fs {
            let root = f13.neg(g[0]);
            assert_eq!(f13.pow(root, 3), 1);
            assert_ne!(root, 1);
        }
        // 29 = 2 mod 3: irreducible over F_29, splits over F_841
        let f29 = Fq::new(29, 1).unwrap();
        assert_eq!(factor(&f29, &p, 1).unwrap().len(), 1);
        let f841 = Fq::new(29, 2).unwrap();
        let fs = factor(&f841, &p, 1).unwrap();
        assert_eq!(fs.len(), 2);
        for (g, m) in fs {
            assert_eq!((g.len(), m), (2, 1));
            let root = f841.neg(g[0]);
            assert_eq!(f841.pow(root, 3), 1);
            assert_ne!(root, 1);
        }
    }

    #[test]
    fn min_poly_of_companion_and_diagonal() {
        let f = Fq::new(13, 1).unwrap();
        // companion matrix of x^2 + x + 1
        let c = FMat::from_rows(&[vec![0, 12], vec![1, 12]]);
        assert_eq!(min_poly(&f, &c), vec![1, 1, 1]);
        let d = FMat::from_rows(&[vec![3, 0, 0], vec![0, 3, 0], vec![0, 0, 9]]);
        // (x-3)(x-9), degree 2 despite 3x3 size
        let mp = min_poly(&f, &d);
        assert_eq!(mp.len(), 3);
        assert_eq!(eval(&f, &mp, 3), 0);
        assert_eq!(eval(&f, &mp, 9), 0);
    }

    #[test]
    fn squarefree_handles_pth_powers() {
        let f = Fq::new(3, 1).unwrap();
        // (x+1)^3 = x^3 + 1 over F_3 has zero derivative
        let p = vec![1, 0, 0, 1];
        let fs = factor(&f, &p, 5).unwrap();
        assert_eq!(fs, vec![(vec![1, 1], 3)]);
    }
}
