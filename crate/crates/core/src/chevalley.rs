//! Chevalley bases: integer structure constants for the simple Lie algebras,
//! adjoint representations, nilpotent exponentials and Weyl-element lifts.
//!
//! Basis order: h_0 .. h_{r-1} (simple coroots), then one e_gamma per root in
//! datum order.  Structure constants for positive special pairs are fixed by
//! the extraspecial-pair convention: for each sum gamma the decomposition
//! with the smallest first summand gets a positive constant, and everything
//! else is derived from Jacobi identities with exact integer divisions.

use std::collections::HashMap;

use crate::error::Error;
use crate::gf::{Elt, FMat, Fq};
use crate::linalg::{solve_integer_rect, IntMat};
use crate::rootdata::{dot, RootDatum, Series};

pub struct Chevalley {
    pub rd: RootDatum,
    pub rank: usize,
    pub dim: usize,
    /// canonical positive special pairs (i < j in root order), N(root_i, root_j)
    pos_pairs: HashMap<(usize, usize), i64>,
    /// coroot of each root expanded in the simple-coroot basis
    coroot_coords: Vec<Vec<i64>>,
}

impl Chevalley {
    pub fn new(rd: &RootDatum) -> Result<Chevalley, Error> {
        if rd.dim != rd.rank {
            return Err(Error::pre(
                "Chevalley basis requires a full-rank datum (not a proper Levi)",
            ));
        }
        let rank = rd.rank;
        let np = rd.num_positive();

        // expand every coroot in the simple-coroot basis
        let mut cols = IntMat::zero(rank, rank);
        for (j, &si) in rd.simple.iter().enumerate() {
            for i in 0..rank {
                cols[(i, j)] = rd.coroots[si][i];
            }
        }
        let mut coroot_coords = Vec::with_capacity(rd.num_roots());
        for cr in &rd.coroots {
            let c = solve_integer_rect(&cols, cr)
                .ok_or_else(|| Error::math("coroot outside the simple-coroot lattice"))?;
            coroot_coords.push(c);
        }

        let mut chev = Chevalley {
            rd: rd.clone(),
            rank,
            dim: rank + rd.num_roots(),
            pos_pairs: HashMap::new(),
            coroot_coords,
        };

        // positive roots are sorted by (height, lex), so iterating sums in
        // index order makes every derivation reference known constants
        for g in 0..np {
            let decs = chev.decompositions(g);
            let Some(&(e, h)) = decs.first() else { continue };
            // extraspecial pair: minimal first summand, positive constant
            let p = chev.chain_down(h, e);
            chev.pos_pairs.insert((e, h), p + 1);
            for &(a, b) in decs.iter().skip(1) {
                let n = chev.derive_special(a, b, e, g)?;
                chev.pos_pairs.insert((a, b), n);
            }
        }
        Ok(chev)
    }

    /// Ordered decompositions gamma = a + b with a < b positive (a <= b
    /// cannot collide since roots are nonzero and 2a is never a root).
    fn decompositions(&self, g: usize) -> Vec<(usize, usize)> {
        let rd = &self.rd;
        let np = rd.num_positive();
        let mut out = Vec::new();
        for a in 0..np {
            let rest: Vec<i64> = rd.roots[g]
                .iter()
                .zip(&rd.roots[a])
                .map(|(x, y)| x - y)
                .collect();
            if let Some(b) = rd.root_index(&rest) {
                if b < np && a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Largest k with beta - k*alpha a root.
    fn chain_down(&self, beta: usize, alpha: usize) -> i64 {
        let rd = &self.rd;
        let mut k = 0i64;
        let mut cur = rd.roots[beta].clone();
        loop {
            let next: Vec<i64> = cur.iter().zip(&rd.roots[alpha]).map(|(x, y)| x - y).collect();
            match rd.root_index(&next) {
                Some(_) => {
                    k += 1;
                    cur = next;
                }
                None => return k,
            }
        }
    }

    /// Jacobi on (-eps, a, b) with eps the first member of the extraspecial
    /// pair of g:
    /// N(a,b) N(g,-eps) + N(-eps,a) N(a-eps,b) + N(b,-eps) N(b-eps,a) = 0.
    fn derive_special(&self, a: usize, b: usize, eps: usize, g: usize) -> Result<i64, Error> {
        let rd = &self.rd;
        let neg_eps = rd.neg_index(eps);
        let t1 = self.n_const(neg_eps, a).map_or(0, |n| {
            let a_minus = self.sum_index(a, neg_eps).expect("term paired");
            n * self.n_const(a_minus, b).unwrap_or(0)
        });
        let t3 = self.n_const(b, neg_eps).map_or(0, |n| {
            let b_minus = self.sum_index(b, neg_eps).expect("term paired");
            n * self.n_const(b_minus, a).unwrap_or(0)
        });
        // N(g, -eps): g - eps = eta is a root, so this is never zero
        let pivot = self
            .n_const(g, neg_eps)
            .ok_or_else(|| Error::math("extraspecial pivot vanished"))?;
        let num = -(t1 + t3);
        if num % pivot != 0 {
            return Err(Error::math("structure constant derivation is not integral"));
        }
        Ok(num / pivot)
    }

    fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        let s: Vec<i64> = self.rd.roots[i]
            .iter()
            .zip(&self.rd.roots[j])
            .map(|(x, y)| x + y)
            .collect();
        self.rd.root_index(&s)
    }

    /// N(root_i, root_j): None when the sum is not a root (including i = -j).
    /// Sign cases reduce to the stored positive table through the weighted
    /// Jacobi identity; every quotient of squared lengths divides exactly.
    pub fn n_const(&self, i: usize, j: usize) -> Option<i64> {
        let rd = &self.rd;
        let np = rd.num_positive();
        if rd.neg_index(i) == j {
            return None;
        }
        let s = self.sum_index(i, j)?;
        let (pi, pj) = (i < np, j < np);
        Some(match (pi, pj) {
            (true, true) => {
                if i < j {
                    self.pos_pairs[&(i, j)]
                } else {
                    -self.pos_pairs[&(j, i)]
                }
            }
            (false, false) => -self
                .n_const(rd.neg_index(i), rd.neg_index(j))
                .expect("negated pair sums to a root"),
            (false, true) => {
                // i < 0 < j
                if s < np {
                    // N(x,y) = -(z,z) N(z,-x) / (y,y), all positive on the right
                    let n = self
                        .n_const(s, rd.neg_index(i))
                        .expect("z + (-x) = y is a root");
                    let num = rd.root_len2(s) * n;
                    let den = rd.root_len2(j);
                    assert_eq!(num % den, 0, "weighted identity must divide exactly");
                    -(num / den)
                } else {
                    // N(x,y) = -(z,z) N(-z,y) / (x,x), sum is negative
                    let n = self
                        .n_const(rd.neg_index(s), j)
                        .expect("(-z) + y = -x is a root");
                    let num = rd.root_len2(s) * n;
                    let den = rd.root_len2(i);
                    assert_eq!(num % den, 0, "weighted identity must divide exactly");
                    -(num / den)
                }
            }
            (true, false) => -self.n_const(j, i).expect("swap keeps the sum a root"),
        })
    }

    pub fn basis_len(&self) -> usize {
        self.dim
    }

    pub fn h_index(&self, i: usize) -> usize {
        i
    }

    pub fn e_index(&self, root: usize) -> usize {
        self.rank + root
    }

    /// Coefficients of the coroot of root i in the simple-coroot basis.
    pub fn coroot_coords(&self, i: usize) -> &[i64] {
        &self.coroot_coords[i]
    }

    /// Bracket of two basis elements, as sparse (index, coefficient) terms.
    pub fn bracket_basis(&self, x: usize, y: usize) -> Vec<(usize, i64)> {
        let r = self.rank;
        let rd = &self.rd;
        match (x < r, y < r) {
            (true, true) => vec![],
            (true, false) => {
                let g = y - r;
                let k = dot(&rd.roots[g], &rd.coroots[rd.simple[x]]);
                if k == 0 {
                    vec![]
                } else {
                    vec![(y, k)]
                }
            }
            (false, true) => {
                let g = x - r;
                let k = dot(&rd.roots[g], &rd.coroots[rd.simple[y]]);
                if k == 0 {
                    vec![]
                } else {
                    vec![(x, -k)]
                }
            }
            (false, false) => {
                let (g, d) = (x - r, y - r);
                if rd.neg_index(g) == d {
                    self.coroot_coords[g]
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(i, &c)| (i, c))
                        .collect()
                } else {
                    match self.n_const(g, d) {
                        Some(n) => vec![(self.e_index(self.sum_index(g, d).unwrap()), n)],
                        None => vec![],
                    }
                }
            }
        }
    }

    /// Bracket of coefficient vectors.
    pub fn bracket(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                for (k, c) in self.bracket_basis(i, j) {
                    out[k] = out[k]
                        .checked_add(
                            xi.checked_mul(yj)
                                .and_then(|p| p.checked_mul(c))
                                .expect("bracket overflow"),
                        )
                        .expect("bracket overflow");
                }
            }
        }
        out
    }

    /// Matrix of ad(e_root) on the basis (columns are bracket images).
    pub fn ad_e(&self, root: usize) -> IntMat {
        let mut m = IntMat::zero(self.dim, self.dim);
        let x = self.e_index(root);
        for y in 0..self.dim {
            for (k, c) in self.bracket_basis(x, y) {
                m[(k, y)] = c;
            }
        }
        m
    }

    /// exp(ad(c e_root)); the divided powers are integral and the fourth
    /// power of ad(e) vanishes for every root system handled here.
    pub fn exp_ad_e(&self, root: usize, c: i64) -> IntMat {
        let n1 = self.ad_e(root).scale(c);
        let n2 = n1.mul(&n1);
        let n3 = n2.mul(&n1);
        assert!(
            n3.mul(&n1).a.iter().all(|&x| x == 0),
            "ad(e)^4 must vanish"
        );
        let mut out = IntMat::identity(self.dim).add(&n1);
        let half: Vec<i64> = n2
            .a
            .iter()
            .map(|&x| {
                assert_eq!(x % 2, 0, "ad(e)^2 entries must be even");
                x / 2
            })
            .collect();
        let sixth: Vec<i64> = n3
            .a
            .iter()
            .map(|&x| {
                assert_eq!(x % 6, 0, "ad(e)^3 entries must be divisible by 6");
                x / 6
            })
            .collect();
        out = out.add(&IntMat { nrows: self.dim, ncols: self.dim, a: half });
        out.add(&IntMat { nrows: self.dim, ncols: self.dim, a: sixth })
    }

    /// Adjoint action of the standard lift of the simple reflection s_i:
    /// exp(ad e_i) exp(-ad e_{-i}) exp(ad e_i).
    pub fn simple_lift_adjoint(&self, i: usize) -> IntMat {
        let pos = self.rd.simple[i];
        let neg = self.rd.neg_index(pos);
        let a = self.exp_ad_e(pos, 1);
        let b = self.exp_ad_e(neg, -1);
        a.mul(&b).mul(&a)
    }

    /// Adjoint action of the lift of a Weyl word (left-to-right product).
    pub fn weyl_lift_adjoint(&self, word: &[usize]) -> IntMat {
        let mut m = IntMat::identity(self.dim);
        for &i in word {
            m = m.mul(&self.simple_lift_adjoint(i));
        }
        m
    }

    /// Adjoint action of the torus point determined by c mod t (the point
    /// sends x in M to zeta^<x, c>): diagonal on root spaces, identity on
    /// the Cartan.
    pub fn torus_adjoint(&self, f: &Fq, zeta: Elt, c: &[u64], t: u64) -> FMat {
        assert_eq!(f.pow(zeta, t), 1, "zeta must be a t-th root of unity");
        let mut m = FMat::identity(self.dim);
        for g in 0..self.rd.num_roots() {
            let mut exp: i128 = 0;
            for (x, &ci) in self.rd.roots[g].iter().zip(c) {
                exp += *x as i128 * ci as i128;
            }
            let e = exp.rem_euclid(t as i128) as u64;
            let idx = self.e_index(g);
            m[(idx, idx)] = f.pow(zeta, e);
        }
        m
    }

    pub fn reduce(&self, f: &Fq, m: &IntMat) -> FMat {
        FMat::from_int_mat(f, m)
    }
}

// ---------------------------------------------------------------------------
// type A matrix-group realizations: SL_n alongside its adjoint image

/// Standard lift of a simple reflection in SL_n: the 2x2 block
/// ((0,1),(-1,0)) at position i.
pub fn sl_simple_lift(f: &Fq, n: usize, i: usize) -> FMat {
    assert!(i + 1 < n);
    let mut m = FMat::identity(n);
    m[(i, i)] = 0;
    m[(i + 1, i + 1)] = 0;
    m[(i, i + 1)] = 1;
    m[(i + 1, i)] = f.neg(1);
    m
}

pub fn sl_weyl_lift(f: &Fq, n: usize, word: &[usize]) -> FMat {
    let mut m = FMat::identity(n);
    for &i in word {
        m = m.mul(f, &sl_simple_lift(f, n, i));
    }
    m
}

/// Diagonal torus point of SL_n whose simple-root values are zeta^{c_i}:
/// solves the determinant-one constraint, which requires gcd(n, t) = 1.
pub fn sl_torus_point(
    f: &Fq,
    n: usize,
    zeta: Elt,
    c: &[u64],
    t: u64,
) -> Result<FMat, Error> {
    assert_eq!(c.len(), n - 1);
    let tt = t as i128;
    // exponents a_i with a_i - a_{i+1} = c_i and sum a_i = 0 mod t
    let mut suffix = vec![0i128; n];
    for i in (0..n - 1).rev() {
        suffix[i] = suffix[i + 1] + c[i] as i128;
    }
    let total: i128 = suffix.iter().sum();
    // a_i = suffix_i + base, n*base = -total mod t
    let ninv = mod_inverse(n as i128, tt)
        .ok_or_else(|| Error::pre(format!("torus point needs gcd({n}, {t}) = 1")))?;
    let base = (-total).rem_euclid(tt) * ninv % tt;
    let mut m = FMat::zero(n, n);
    for i in 0..n {
        let e = (suffix[i] + base).rem_euclid(tt) as u64;
        m[(i, i)] = f.pow(zeta, e);
    }
    Ok(m)
}

fn mod_inverse(a: i128, m: i128) -> Option<i128> {
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m))
}

/// Adjoint action of g in SL_n on the Chevalley basis of sl_n: conjugate each
/// basis matrix and re-expand (off-diagonal entries are root coefficients,
/// diagonal prefix sums give the Cartan coefficients).
pub fn sl_ad_matrix(chev: &Chevalley, f: &Fq, g: &FMat) -> FMat {
    assert_eq!(chev.rd.series, Series::A);
    let n = g.nrows;
    assert_eq!(chev.rank + 1, n);
    let ginv = g.inverse(f).expect("group element is invertible");
    let mut out = FMat::zero(chev.dim, chev.dim);
    for col in 0..chev.dim {
        let b = sl_basis_matrix(chev, f, col);
        let x = g.mul(f, &b).mul(f, &ginv);
        // h-part: prefix sums of the diagonal
        let mut acc = 0;
        for k in 0..n - 1 {
            acc = f.add(acc, x[(k, k)]);
            out[(k, col)] = acc;
        }
        // e-part: off-diagonal entries
        for gidx in 0..chev.rd.num_roots() {
            let (i, j) = sl_root_position(chev, gidx);
            out[(chev.e_index(gidx), col)] = x[(i, j)];
        }
    }
    out
}

/// The (row, col) of the elementary matrix realizing root gidx in sl_n.
fn sl_root_position(chev: &Chevalley, gidx: usize) -> (usize, usize) {
    let coords = chev.rd.simple_coords(gidx);
    let positive = chev.rd.is_positive(gidx);
    let abs: Vec<i64> = coords.iter().map(|&c| c.abs()).collect();
    let lo = abs.iter().position(|&c| c == 1).expect("type A root support");
    let hi = abs.iter().rposition(|&c| c == 1).expect("type A root support");
    if positive {
        (lo, hi + 1)
    } else {
        (hi + 1, lo)
    }
}

fn sl_basis_matrix(chev: &Chevalley, f: &Fq, idx: usize) -> FMat {
    let n = chev.rank + 1;
    let mut m = FMat::zero(n, n);
    if idx < chev.rank {
        m[(idx, idx)] = 1;
        m[(idx + 1, idx + 1)] = f.neg(1);
    } else {
        let (i, j) = sl_root_position(chev, idx - chev.rank);
        m[(i, j)] = 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{Isogeny, Series};

    fn chev(series: Series, rank: usize) -> Chevalley {
        let rd = RootDatum::new(series, rank, Isogeny::Sc).unwrap();
        Chevalley::new(&rd).unwrap()
    }

    fn jacobi_holds(c: &Chevalley) -> bool {
        let d = c.dim;
        let basis = |i: usize| {
            let mut v = vec![0i64; d];
            v[i] = 1;
            v
        };
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let (bx, by, bz) = (basis(x), basis(y), basis(z));
                    let t1 = c.bracket(&c.bracket(&bx, &by), &bz);
                    let t2 = c.bracket(&c.bracket(&by, &bz), &bx);
                    let t3 = c.bracket(&c.bracket(&bz, &bx), &by);
                    for k in 0..d {
                        if t1[k] + t2[k] + t3[k] != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    #[test]
    fn jacobi_identity_small_types() {
        for (s, n) in [(Series::A, 1), (Series::A, 2), (Series::B, 2), (Series::G, 2)] {
            let c = chev(s, n);
            assert!(jacobi_holds(&c), "{}{n}", s.letter());
        }
    }

    #[test]
    fn jacobi_identity_a3_and_b3() {
        for (s, n) in [(Series::A, 3), (Series::B, 3)] {
            let c = chev(s, n);
            assert!(jacobi_holds(&c), "{}{n}", s.letter());
        }
    }

    #[test]
    fn antisymmetry_and_negation_of_constants() {
        let c = chev(Series::G, 2);
        let rd = &c.rd;
        for i in 0..rd.num_roots() {
            for j in 0..rd.num_roots() {
                if rd.neg_index(i) == j {
                    continue;
                }
                match (c.n_const(i, j), c.n_const(j, i)) {
                    (Some(a), Some(b)) => {
                        assert_eq!(a, -b);
                        let ni = rd.neg_index(i);
                        let nj = rd.neg_index(j);
                        assert_eq!(c.n_const(ni, nj), Some(-a));
                    }
                    (None, None) => {}
                    _ => panic!("asymmetric support"),
                }
            }
        }
    }

    #[test]
    fn constant_magnitudes_are_chain_lengths() {
        // A-series: all +-1; G2 reaches +-2 and +-3
        let a2 = chev(Series::A, 2);
        for i in 0..a2.rd.num_roots() {
            for j in 0..a2.rd.num_roots() {
                if let Some(n) = a2.n_const(i, j) {
                    assert_eq!(n.abs(), 1);
                }
            }
        }
        let g2 = chev(Series::G, 2);
        let mut mags = std::collections::BTreeSet::new();
        for i in 0..g2.rd.num_roots() {
            for j in 0..g2.rd.num_roots() {
                if let Some(n) = g2.n_const(i, j) {
                    mags.insert(n.abs());
                }
            }
        }
        assert_eq!(mags.into_iter().collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn sl2_triples() {
        for (s, n) in [(Series::B, 2), (Series::G, 2)] {
            let c = chev(s, n);
            let rd = c.rd.clone();
            for g in 0..rd.num_positive() {
                // [e, f] = h_g, [h_g, e] = 2e, [h_g, f] = -2f
                let mut e = vec![0i64; c.dim];
                e[c.e_index(g)] = 1;
                let mut f = vec![0i64; c.dim];
                f[c.e_index(rd.neg_index(g))] = 1;
                let h = c.bracket(&e, &f);
                let he = c.bracket(&h, &e);
                let hf = c.bracket(&h, &f);
                for k in 0..c.dim {
                    assert_eq!(he[k], 2 * e[k]);
                    assert_eq!(hf[k], -2 * f[k]);
                }
            }
        }
    }

    #[test]
    fn lifts_permute_root_spaces_with_signs() {
        for (s, n) in [(Series::A, 2), (Series::B, 2), (Series::G, 2)] {
            let c = chev(s, n);
            let rd = c.rd.clone();
            for i in 0..rd.rank {
                let m = c.simple_lift_adjoint(i);
                let refl = rd.simple_reflection_matrix(i);
                for g in 0..rd.num_roots() {
                    let target = rd.root_index(&refl.apply(&rd.roots[g])).unwrap();
                    let col = c.e_index(g);
                    for r in 0..c.dim {
                        let want_nonzero = r == c.e_index(target);
                        let v = m[(r, col)];
                        if want_nonzero {
                            assert_eq!(v.abs(), 1);
                        } else {
                            assert_eq!(v, 0);
                        }
                    }
                }
                // squared lift acts on root spaces by (-1)^<gamma, alpha_i^vee>
                let m2 = m.mul(&m);
                for g in 0..rd.num_roots() {
                    let k = dot(&rd.roots[g], &rd.coroots[rd.simple[i]]);
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    assert_eq!(m2[(c.e_index(g), c.e_index(g))], sign);
                }
            }
        }
    }

    #[test]
    fn braid_relation_a2() {
        let c = chev(Series::A, 2);
        let n0 = c.simple_lift_adjoint(0);
        let n1 = c.simple_lift_adjoint(1);
        assert_eq!(n0.mul(&n1).mul(&n0), n1.mul(&n0).mul(&n1));
    }

    #[test]
    fn braid_relation_b2() {
        let c = chev(Series::B, 2);
        let n0 = c.simple_lift_adjoint(0);
        let n1 = c.simple_lift_adjoint(1);
        // m(s0, s1) = 4
        assert_eq!(
            n0.mul(&n1).mul(&n0).mul(&n1),
            n1.mul(&n0).mul(&n1).mul(&n0)
        );
    }

    #[test]
    fn lift_preserves_bracket() {
        // Ad(n) is a Lie algebra automorphism
        let c = chev(Series::G, 2);
        let m = c.weyl_lift_adjoint(&[0, 1]);
        let d = c.dim;
        for x in 0..d {
            for y in 0..d {
                let mut bx = vec![0i64; d];
                bx[x] = 1;
                let mut by = vec![0i64; d];
                by[y] = 1;
                let lhs = m.apply(&c.bracket(&bx, &by));
                let rhs = c.bracket(&m.apply(&bx), &m.apply(&by));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn torus_adjoint_is_diagonal_with_root_values() {
        let c = chev(Series::A, 2);
        let f = Fq::new(13, 1).unwrap();
        let zeta = f.root_of_unity(3).unwrap();
        let cvec = vec![1u64, 2];
        let m = c.torus_adjoint(&f, zeta, &cvec, 3);
        for g in 0..c.rd.num_roots() {
            let idx = c.e_index(g);
            let exp: i64 = dot(&c.rd.roots[g], &[1, 2]);
            let want = f.powi(zeta, exp);
            assert_eq!(m[(idx, idx)], want);
        }
        // torus adjoint commutes with any h, i.e. fixes the Cartan block
        for i in 0..c.rank {
            assert_eq!(m[(i, i)], 1);
        }
    }

    #[test]
    fn sl_lift_squares_to_minus_identity() {
        let f = Fq::new(13, 1).unwrap();
        let s = sl_simple_lift(&f, 2, 0);
        let s2 = s.mul(&f, &s);
        assert_eq!(s2.is_scalar(), Some(f.neg(1)));
        // order 4
        assert!(s2.mul(&f, &s2).is_identity());
    }

    #[test]
    fn sl_adjoint_matches_chevalley_lift() {
        let c = chev(Series::A, 2);
        let f = Fq::new(13, 1).unwrap();
        for word in [vec![0], vec![1], vec![0, 1], vec![0, 1, 0]] {
            let ad_int = c.weyl_lift_adjoint(&word);
            let ad_red = c.reduce(&f, &ad_int);
            let g = sl_weyl_lift(&f, 3, &word);
            let ad_grp = sl_ad_matrix(&c, &f, &g);
            assert_eq!(ad_red, ad_grp, "word {word:?}");
        }
    }

    #[test]
    fn sl_adjoint_matches_torus_adjoint() {
        // t = 7 is coprime to n = 3, so the determinant-one lift exists;
        // the 7th roots of unity need the quadratic extension of F_13
        let c = chev(Series::A, 2);
        let f = Fq::new(13, 2).unwrap();
        let zeta = f.root_of_unity(7).unwrap();
        let cvec = vec![1u64, 0];
        let v = sl_torus_point(&f, 3, zeta, &cvec, 7).unwrap();
        assert_eq!(v.det(&f), 1);
        let lhs = sl_ad_matrix(&c, &f, &v);
        let rhs = c.torus_adjoint(&f, zeta, &cvec, 7);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn sl_torus_point_needs_coprime_order() {
        // t = 3 shares a factor with n = 3: no determinant-one diagonal lift
        let f = Fq::new(13, 1).unwrap();
        let zeta = f.root_of_unity(3).unwrap();
        assert!(sl_torus_point(&f, 3, zeta, &[1, 0], 3).is_err());
    }

    #[test]
    fn sl_adjoint_is_homomorphism() {
        let c = chev(Series::A, 2);
        let f = Fq::new(7, 1).unwrap();
        let a = sl_weyl_lift(&f, 3, &[0, 1]);
        let mut b = FMat::identity(3);
        b[(0, 1)] = 4; // a unipotent
        let lhs = sl_ad_matrix(&c, &f, &a.mul(&f, &b));
        let rhs = sl_ad_matrix(&c, &f, &a).mul(&f, &sl_ad_matrix(&c, &f, &b));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn levi_data_are_rejected() {
        let rd = RootDatum::new(Series::A, 3, Isogeny::Sc).unwrap();
        let levi = rd.levi(&[0, 2]).unwrap();
        assert!(Chevalley::new(&levi).is_err());
    }
}
