//! The affine Hecke algebra in its commutative presentation: a basis of
//! lattice elements times finite Weyl group elements over Z[q], with the
//! cross relation
//!
//!   T_s theta_mu = theta_{s mu} T_s + (q - 1) B(mu, s)
//!
//! where B is the geometric-series correction
//!
//!   B(mu, s) = sum_{i=0}^{n-1} theta_{mu - i a^} for n = <a, mu> >= 0,
//!   B(mu, s) = -sum_{j=1}^{|n|} theta_{mu + j a^} for n < 0.
//!
//! Every correction is checked on the fly against the division identity
//! B * (1 - theta_{-a^}) = theta_mu - theta_{s mu}, so a bad telescope can
//! never propagate.  Orbit sums of lattice elements land in the center, the
//! full symmetrizer squares to its Poincare polynomial multiple, and at
//! q = 1 the algebra degenerates to the group algebra of the extended
//! affine Weyl group, all of which is exercised by the tests.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::gf::{FMat, Fq};
use crate::linalg::IntMat;
use crate::rootdata::RootDatum;
use crate::weyl::{dual_action, WeylGroup};

pub const WEYL_CAP: usize = 1_000_000;

/// polynomial in q with integer coefficients, constant term first
pub type ZPoly = Vec<i64>;

fn zp_trim(p: &mut ZPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

pub fn zp_add(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    zp_trim(&mut out);
    out
}

pub fn zp_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zp_trim(&mut out);
    out
}

pub fn zp_neg(a: &ZPoly) -> ZPoly {
    a.iter().map(|c| -c).collect()
}

pub fn zp_eval(a: &ZPoly, q: i64) -> i64 {
    a.iter().rev().fold(0i64, |acc, c| acc * q + c)
}

fn zp_const(c: i64) -> ZPoly {
    if c == 0 {
        vec![]
    } else {
        vec![c]
    }
}

/// q - 1
fn zp_qm1() -> ZPoly {
    vec![-1, 1]
}

pub type Key = (Vec<i64>, usize);

/// element of the algebra: lattice-times-Weyl basis keys with Z[q]
/// coefficients
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HElt(pub BTreeMap<Key, ZPoly>);

impl HElt {
    fn insert(&mut self, key: Key, p: ZPoly) {
        if p.is_empty() {
            return;
        }
        let e = self.0.entry(key.clone()).or_default();
        *e = zp_add(e, &p);
        if e.is_empty() {
            self.0.remove(&key);
        }
    }

    pub fn add(&self, other: &HElt) -> HElt {
        let mut out = self.clone();
        for (k, p) in &other.0 {
            let e = out.0.entry(k.clone()).or_default();
            *e = zp_add(e, p);
        }
        out.0.retain(|_, p| !p.is_empty());
        out
    }

    pub fn scale(&self, p: &ZPoly) -> HElt {
        let mut out = HElt::default();
        for (k, c) in &self.0 {
            let q = zp_mul(c, p);
            if !q.is_empty() {
                out.0.insert(k.clone(), q);
            }
        }
        out
    }

    pub fn neg(&self) -> HElt {
        HElt(self.0.iter().map(|(k, p)| (k.clone(), zp_neg(p))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

pub struct Hecke {
    pub rd: RootDatum,
    pub w: WeylGroup,
    /// element index of each simple reflection
    simple_idx: Vec<usize>,
    /// contragredient action of each Weyl element on the cocharacter side
    dual: Vec<IntMat>,
}

impl Hecke {
    pub fn new(rd: &RootDatum, cap: usize) -> Result<Hecke, Error> {
        let w = WeylGroup::enumerate(rd, cap)?;
        let simple_idx = (0..rd.simple.len())
            .map(|i| w.index_of(&w.gens[i]).expect("generator enumerated"))
            .collect();
        let dual = w.elements.iter().map(|e| dual_action(&e.mat)).collect();
        Ok(Hecke {
            rd: rd.clone(),
            w,
            simple_idx,
            dual,
        })
    }

    pub fn one(&self) -> HElt {
        self.theta(&vec![0; self.rd.dim])
    }

    pub fn theta(&self, mu: &[i64]) -> HElt {
        HElt(BTreeMap::from([((mu.to_vec(), 0), zp_const(1))]))
    }

    pub fn tw(&self, widx: usize) -> HElt {
        HElt(BTreeMap::from([((vec![0; self.rd.dim], widx), zp_const(1))]))
    }

    pub fn ts(&self, i: usize) -> HElt {
        self.tw(self.simple_idx[i])
    }

    fn pair_alpha(&self, i: usize, mu: &[i64]) -> i64 {
        let ri = self.rd.simple[i];
        self.rd.roots[ri]
            .iter()
            .zip(mu)
            .map(|(a, b)| a * b)
            .sum()
    }

    fn reflect_cochar(&self, i: usize, mu: &[i64]) -> Vec<i64> {
        let n = self.pair_alpha(i, mu);
        let ri = self.rd.simple[i];
        mu.iter()
            .zip(&self.rd.coroots[ri])
            .map(|(m, c)| m - n * c)
            .collect()
    }

    /// The correction term of the cross relation, with its defining
    /// division identity verified on every call.
    pub fn bernstein_correction(&self, i: usize, mu: &[i64]) -> BTreeMap<Vec<i64>, i64> {
        let n = self.pair_alpha(i, mu);
        let ri = self.rd.simple[i];
        let coroot = &self.rd.coroots[ri];
        let mut out: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        if n >= 0 {
            for k in 0..n {
                let w: Vec<i64> = mu.iter().zip(coroot).map(|(m, c)| m - k * c).collect();
                *out.entry(w).or_insert(0) += 1;
            }
        } else {
            for k in 1..=(-n) {
                let w: Vec<i64> = mu.iter().zip(coroot).map(|(m, c)| m + k * c).collect();
                *out.entry(w).or_insert(0) -= 1;
            }
        }
        out.retain(|_, c| *c != 0);

        // division oracle: B * (1 - theta_{-coroot}) = theta_mu - theta_{s mu}
        let mut check: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for (w, c) in &out {
            *check.entry(w.clone()).or_insert(0) += c;
            let shifted: Vec<i64> = w.iter().zip(coroot).map(|(a, b)| a - b).collect();
            *check.entry(shifted).or_insert(0) -= c;
        }
        check.retain(|_, c| *c != 0);
        let mut expect: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        *expect.entry(mu.to_vec()).or_insert(0) += 1;
        *expect.entry(self.reflect_cochar(i, mu)).or_insert(0) -= 1;
        expect.retain(|_, c| *c != 0);
        assert_eq!(check, expect, "correction fails its division identity");
        out
    }

    /// T_{s_i} * (theta_mu T_w), expanded back into the basis.
    fn ts_mul_term(&self, i: usize, mu: &[i64], widx: usize, coeff: &ZPoly) -> HElt {
        let mut out = HElt::default();
        // theta_{s mu} T_s T_w
        let smu = self.reflect_cochar(i, mu);
        let s = self.simple_idx[i];
        let sw = self.w.mul(s, widx);
        if self.w.length(sw) > self.w.length(widx) {
            out.insert((smu, sw), coeff.clone());
        } else {
            out.insert((smu.clone(), sw), zp_mul(coeff, &vec![0, 1]));
            out.insert((smu, widx), zp_mul(coeff, &zp_qm1()));
        }
        // (q - 1) B(mu, s) T_w
        let b = self.bernstein_correction(i, mu);
        let qm1 = zp_mul(coeff, &zp_qm1());
        for (nu, c) in b {
            out.insert((nu, widx), zp_mul(&qm1, &zp_const(c)));
        }
        out.0.retain(|_, p| !p.is_empty());
        out
    }

    /// left multiplication by T_{s_i}
    pub fn ts_mul(&self, i: usize, x: &HElt) -> HElt {
        let mut out = HElt::default();
        for ((mu, widx), p) in &x.0 {
            out = out.add(&self.ts_mul_term(i, mu, *widx, p));
        }
        out
    }

    /// left multiplication by theta_mu
    pub fn theta_mul(&self, mu: &[i64], x: &HElt) -> HElt {
        let mut out = HElt::default();
        for ((nu, widx), p) in &x.0 {
            let sum: Vec<i64> = mu.iter().zip(nu).map(|(a, b)| a + b).collect();
            out.insert((sum, *widx), p.clone());
        }
        out
    }

    pub fn mul(&self, a: &HElt, b: &HElt) -> HElt {
        let mut out = HElt::default();
        for ((mu, widx), p) in &a.0 {
            // T_w * b, one generator at a time, right to left
            let mut acc = b.clone();
            for &i in self.w.elements[*widx].word.iter().rev() {
                acc = self.ts_mul(i, &acc);
            }
            acc = self.theta_mul(mu, &acc);
            out = out.add(&acc.scale(p));
        }
        out
    }

    /// sum of theta over the Weyl orbit of mu on the cocharacter side
    pub fn orbit_theta_sum(&self, mu: &[i64]) -> HElt {
        let mut seen: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
        for d in &self.dual {
            seen.insert(d.apply(mu), ());
        }
        let mut out = HElt::default();
        for (w, _) in seen {
            out.insert((w, 0), zp_const(1));
        }
        out
    }

    /// z commutes with every T_s and with a basis of lattice elements
    pub fn is_central(&self, z: &HElt) -> bool {
        for i in 0..self.rd.simple.len() {
            let ts = self.ts(i);
            if self.mul(&ts, z) != self.mul(z, &ts) {
                return false;
            }
        }
        for j in 0..self.rd.dim {
            let mut mu = vec![0i64; self.rd.dim];
            mu[j] = 1;
            let th = self.theta(&mu);
            if self.mul(&th, z) != self.mul(z, &th) {
                return false;
            }
        }
        true
    }

    pub fn poincare(&self) -> ZPoly {
        let mut p = vec![0i64; self.w.elements.iter().map(|e| e.word.len()).max().unwrap() + 1];
        for e in &self.w.elements {
            p[e.word.len()] += 1;
        }
        zp_trim(&mut p);
        p
    }

    pub fn symmetrizer(&self) -> HElt {
        let mut out = HElt::default();
        for i in 0..self.w.len() {
            out.insert((vec![0; self.rd.dim], i), zp_const(1));
        }
        out
    }

    pub fn specialize(&self, x: &HElt, q: i64) -> BTreeMap<Key, i64> {
        let mut out = BTreeMap::new();
        for (k, p) in &x.0 {
            let v = zp_eval(p, q);
            if v != 0 {
                out.insert(k.clone(), v);
            }
        }
        out
    }

    /// multiplication in the q = 1 degeneration: the group algebra of the
    /// semidirect product of the cocharacter lattice by the Weyl group
    pub fn group_mul(
        &self,
        a: &BTreeMap<Key, i64>,
        b: &BTreeMap<Key, i64>,
    ) -> BTreeMap<Key, i64> {
        let mut out: BTreeMap<Key, i64> = BTreeMap::new();
        for ((mu, wi), ca) in a {
            for ((nu, vi), cb) in b {
                let moved = self.dual[*wi].apply(nu);
                let key = (
                    mu.iter().zip(&moved).map(|(x, y)| x + y).collect::<Vec<i64>>(),
                    self.w.mul(*wi, *vi),
                );
                *out.entry(key).or_insert(0) += ca * cb;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectorReport {
    pub group_order: usize,
    pub orbit_size: usize,
    pub module_dim: usize,
    pub u_rank_on_module: usize,
    /// dimension of the summand cut out by the single character c
    pub localization_dim: usize,
    /// rank of the symmetrizer on that summand; equality with
    /// `localization_dim` says the symmetrizer embeds it
    pub u_rank_on_localization: usize,
    /// the orbit summand splits as the direct sum of the single-character
    /// summands: ranks add up and the idempotents annihilate each other
    pub orbit_decomposition: bool,
    pub idempotent: bool,
    pub conjugation_invariant: bool,
}

/// Finite model of the q = 1 algebra acting on a character-orbit summand.
///
/// The cocharacter lattice is reduced mod n, giving the group algebra of
/// (Z/n)^rank x| W over F_l.  A character of the lattice part with trivial
/// stabilizer spans a free W-orbit; the sum of its idempotents cuts out a
/// summand of dimension |W|^2 that decomposes over the orbit, and the
/// symmetrizer U = sum of the Weyl part is injective on each single
/// character's summand.  A stabilized character is rejected.
pub fn projector_model(
    rd: &RootDatum,
    l: u64,
    n: u64,
    c: &[u64],
    cap: usize,
) -> Result<ProjectorReport, Error> {
    let f = Fq::new(l, 1)?;
    if (l - 1) % n != 0 {
        return Err(Error::pre("need an n-th root of unity in the prime field"));
    }
    let zeta = f.root_of_unity(n)?;
    let w = WeylGroup::enumerate(rd, cap)?;
    let dual: Vec<IntMat> = w.elements.iter().map(|e| dual_action(&e.mat)).collect();
    let r = rd.dim;
    let ln = n.pow(r as u32) as usize;
    let order = ln * w.len();
    if order > cap {
        return Err(Error::resource("finite model too large"));
    }

    // lattice points mod n
    let point = |idx: usize| -> Vec<u64> {
        let mut v = vec![0u64; r];
        let mut rest = idx;
        for x in v.iter_mut() {
            *x = (rest % n as usize) as u64;
            rest /= n as usize;
        }
        v
    };
    let index_of = |v: &[u64]| -> usize {
        v.iter()
            .rev()
            .fold(0usize, |acc, &x| acc * n as usize + x as usize)
    };
    let act = |wi: usize, v: &[u64]| -> Vec<u64> {
        let iv: Vec<i64> = v.iter().map(|&x| x as i64).collect();
        dual[wi]
            .apply(&iv)
            .iter()
            .map(|&x| x.rem_euclid(n as i64) as u64)
            .collect()
    };
    // group element (lambda, w) at index lam * |W| + w
    let gidx = |lam: usize, wi: usize| lam * w.len() + wi;
    let gmul = |a: usize, b: usize| -> usize {
        let (la, wa) = (a / w.len(), a % w.len());
        let (lb, wb) = (b / w.len(), b % w.len());
        let moved = act(wa, &point(lb));
        let lam: Vec<u64> = point(la)
            .iter()
            .zip(&moved)
            .map(|(x, y)| (x + y) % n)
            .collect();
        gidx(index_of(&lam), w.mul(wa, wb))
    };

    // Orbit of the character exponent c.  Conjugating the idempotent of
    // the dot-pairing character chi_c by w transports c by the plain Weyl
    // matrix, the transpose-inverse of the action on the lattice part.
    let mut orbit: Vec<Vec<u64>> = Vec::new();
    for wi in 0..w.len() {
        let iv: Vec<i64> = c.iter().map(|&x| x as i64).collect();
        let img: Vec<u64> = w.elements[wi]
            .mat
            .apply(&iv)
            .iter()
            .map(|&x| x.rem_euclid(n as i64) as u64)
            .collect();
        if !orbit.contains(&img) {
            orbit.push(img);
        }
    }
    let orbit_size = orbit.len();
    if orbit_size != w.len() {
        return Err(Error::pre(format!(
            "character has a stabilizer of order {} in the Weyl group",
            w.len() / orbit_size
        )));
    }

    // the idempotent of one character, as a vector supported on the
    // lattice part
    let ninv = f.inv(f.from_int(ln as i64));
    let idem = |cc: &[u64]| -> Vec<u64> {
        let mut e_psi = vec![0u64; order];
        for lam in 0..ln {
            let p = point(lam);
            let e: u64 = p.iter().zip(cc).map(|(&a, &b)| a * b % n).sum::<u64>() % n;
            // character value zeta^{-e}
            let val = f.pow(zeta, (n - e) % n);
            e_psi[gidx(lam, 0)] = f.mul(ninv, val);
        }
        e_psi
    };
    let mut es = vec![0u64; order];
    for cc in &orbit {
        for (pos, &v) in idem(cc).iter().enumerate() {
            es[pos] = f.add(es[pos], v);
        }
    }

    // right multiplication matrices
    let rmul = |x: &[u64]| -> FMat {
        let mut m = FMat::zero(order, order);
        for g in 0..order {
            for (h, &coeff) in x.iter().enumerate() {
                if coeff != 0 {
                    let tgt = gmul(g, h);
                    m[(tgt, g)] = f.add(m[(tgt, g)], coeff);
                }
            }
        }
        m
    };
    let res = rmul(&es);
    let idempotent = res.mul(&f, &res) == res;

    // conjugation by every group element fixes e_S
    let mut conjugation_invariant = true;
    for wi in 0..w.len() {
        let mut conj = vec![0u64; order];
        let g = gidx(0, wi);
        let ginv = gidx(0, w.inverse(wi));
        for (pos, &coeff) in es.iter().enumerate() {
            if coeff != 0 {
                conj[gmul(gmul(g, pos), ginv)] = coeff;
            }
        }
        if conj != es {
            conjugation_invariant = false;
        }
    }

    let module_dim = res.rank(&f);

    // the summand as a column basis, then the symmetrizer's rank on it
    let mut u = vec![0u64; order];
    for wi in 0..w.len() {
        u[gidx(0, wi)] = 1;
    }
    let ru = rmul(&u);
    // rank of the symmetrizer on a summand: push every column of the
    // projector through U and row-reduce the images
    let u_rank_on = |proj: &FMat| -> usize {
        let cols = proj.transpose();
        let mut image_rows = Vec::new();
        for i in 0..order {
            let v = cols.row(i).to_vec();
            image_rows.push(ru.apply(&f, &v));
        }
        let mut image = FMat::from_rows(&image_rows);
        image.row_reduce(&f).0
    };
    let u_rank = u_rank_on(&res);

    // the single-character summand and the symmetrizer's rank on it
    let r_single: Vec<FMat> = orbit.iter().map(|cc| rmul(&idem(cc))).collect();
    let localization_dim = r_single[0].rank(&f);
    let u_rank_on_localization = u_rank_on(&r_single[0]);

    // direct sum decomposition over the orbit: ranks add and distinct
    // idempotents multiply to zero
    let zero = FMat::zero(order, order);
    let mut orbit_decomposition =
        r_single.iter().map(|m| m.rank(&f)).sum::<usize>() == module_dim;
    for (i, a) in r_single.iter().enumerate() {
        for b in r_single.iter().skip(i + 1) {
            if a.mul(&f, b) != zero {
                orbit_decomposition = false;
            }
        }
    }

    Ok(ProjectorReport {
        group_order: order,
        orbit_size,
        module_dim,
        u_rank_on_module: u_rank,
        localization_dim,
        u_rank_on_localization,
        orbit_decomposition,
        idempotent,
        conjugation_invariant,
    })
}
