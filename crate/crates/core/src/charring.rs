//! Characters of highest-weight representations, as Weyl-invariant sums of
//! lattice weights.
//!
//! Everything here works inside a root datum whose simple coroots are unit
//! vectors, so that fundamental weights are the standard basis and dominance
//! is a sign condition on coordinates.  The datum dual to a root-lattice
//! datum has this shape, as does any of its Levi subdata.  Multiplicities
//! come from the Freudenthal recursion; the Weyl dimension formula and
//! evaluation at torus elements serve as independent checks.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::error::Error;
use crate::gf::{Elt, Fq, FMat};
use crate::linalg::IntMat;
use crate::rootdata::RootDatum;
use crate::weyl;

pub type Weight = Vec<i64>;
/// weight -> multiplicity; the zero map is the empty map
pub type WeightSum = BTreeMap<Weight, i64>;

pub const ORBIT_CAP: usize = 1_000_000;
pub const EXPAND_CAP: usize = 20_000;

pub struct CharRing {
    pub d: RootDatum,
    /// coordinate carrying each simple coroot's unit entry
    unit_pos: Vec<usize>,
    /// sum of the fundamental weights of the subsystem
    pub rho: Weight,
    refl: Vec<IntMat>,
}

impl CharRing {
    pub fn new(d: &RootDatum) -> Result<CharRing, Error> {
        let mut unit_pos = Vec::new();
        for (k, &ri) in d.simple.iter().enumerate() {
            let co = &d.coroots[ri];
            let ones: Vec<usize> = (0..d.dim).filter(|&j| co[j] != 0).collect();
            if ones.len() != 1 || co[ones[0]] != 1 {
                return Err(Error::pre(
                    "character ring needs unit simple coroots (a dual-side datum)",
                ));
            }
            unit_pos.push(ones[0]);
            let _ = k;
        }
        let mut rho = vec![0i64; d.dim];
        for &p in &unit_pos {
            rho[p] = 1;
        }
        let refl = (0..d.simple.len())
            .map(|i| d.simple_reflection_matrix(i))
            .collect();
        Ok(CharRing {
            d: d.clone(),
            unit_pos,
            rho,
            refl,
        })
    }

    fn pair_simple(&self, mu: &[i64], i: usize) -> i64 {
        mu[self.unit_pos[i]]
    }

    pub fn is_dominant(&self, mu: &[i64]) -> bool {
        (0..self.unit_pos.len()).all(|i| self.pair_simple(mu, i) >= 0)
    }

    /// the dominant weight in the orbit of mu
    pub fn dominant_rep(&self, mu: &[i64]) -> Weight {
        let mut v = mu.to_vec();
        loop {
            match (0..self.unit_pos.len()).find(|&i| self.pair_simple(&v, i) < 0) {
                Some(i) => v = self.refl[i].apply(&v),
                None => return v,
            }
        }
    }

    pub fn orbit(&self, mu: &[i64]) -> Result<Vec<Weight>, Error> {
        weyl::orbit(&self.refl, mu, ORBIT_CAP)
    }

    pub fn orbit_sum(&self, mu: &[i64]) -> Result<WeightSum, Error> {
        Ok(self.orbit(mu)?.into_iter().map(|w| (w, 1)).collect())
    }

    fn form(&self, x: &[i64], y: &[i64]) -> i128 {
        self.d.invariant_form(x, y) as i128
    }

    fn shifted_norm(&self, mu: &[i64]) -> i128 {
        let s: Vec<i64> = mu.iter().zip(&self.rho).map(|(a, b)| a + b).collect();
        self.form(&s, &s)
    }

    /// all multiplicities of the irreducible with the given highest weight,
    /// indexed by dominant weights
    pub fn dominant_multiplicities(
        &self,
        lambda: &[i64],
    ) -> Result<BTreeMap<Weight, i64>, Error> {
        if !self.is_dominant(lambda) {
            return Err(Error::pre("highest weight must be dominant"));
        }
        // minuscule weights have a single orbit and need no recursion; this
        // also keeps large-rank minuscule cases clear of the ball search
        if (0..self.d.num_positive()).all(|r| self.d.pair_with_coroot(lambda, r) <= 1) {
            return Ok(BTreeMap::from([(lambda.to_vec(), 1)]));
        }
        let bound = self.shifted_norm(lambda);
        // all weights below lambda within the norm bound, found by
        // subtracting simple roots
        let mut seen: BTreeMap<Weight, ()> = BTreeMap::new();
        let mut queue = vec![lambda.to_vec()];
        seen.insert(lambda.to_vec(), ());
        let mut head = 0;
        while head < queue.len() {
            let cur = queue[head].clone();
            head += 1;
            for (i, &ri) in self.d.simple.iter().enumerate() {
                let _ = i;
                let root = &self.d.roots[ri];
                let next: Vec<i64> = cur.iter().zip(root).map(|(a, b)| a - b).collect();
                if self.shifted_norm(&next) <= bound && !seen.contains_key(&next) {
                    seen.insert(next.clone(), ());
                    queue.push(next);
                    if queue.len() > EXPAND_CAP {
                        return Err(Error::resource("weight search exceeded cap"));
                    }
                }
            }
        }
        let mut dominants: Vec<Weight> = seen
            .keys()
            .filter(|w| self.is_dominant(w))
            .cloned()
            .collect();
        // higher weights first, so the recursion only consults known values
        dominants.sort_by_key(|w| (-self.form(w, &self.rho), std::cmp::Reverse(w.clone())));

        let np = self.d.num_positive();
        let mut mult: BTreeMap<Weight, i64> = BTreeMap::new();
        mult.insert(lambda.to_vec(), 1);
        for mu in &dominants {
            if mu[..] == lambda[..] {
                continue;
            }
            let mut rhs: i128 = 0;
            for r in 0..np {
                let alpha = &self.d.roots[r];
                let mut nu: Vec<i64> = mu.iter().zip(alpha).map(|(a, b)| a + b).collect();
                loop {
                    if self.shifted_norm(&nu) > bound {
                        break;
                    }
                    let m = mult.get(&self.dominant_rep(&nu)).copied().unwrap_or(0);
                    if m != 0 {
                        rhs += (m as i128) * self.form(&nu, alpha);
                    }
                    nu = nu.iter().zip(alpha).map(|(a, b)| a + b).collect();
                }
            }
            rhs *= 2;
            if rhs == 0 {
                continue;
            }
            let denom = bound - self.shifted_norm(mu);
            if denom <= 0 || rhs % denom != 0 {
                return Err(Error::math("multiplicity recursion is not integral"));
            }
            mult.insert(mu.clone(), (rhs / denom) as i64);
        }
        mult.retain(|_, m| *m != 0);
        Ok(mult)
    }

    /// the full character: every weight with its multiplicity
    pub fn irreducible(&self, lambda: &[i64]) -> Result<WeightSum, Error> {
        let mut out = WeightSum::new();
        for (mu, m) in self.dominant_multiplicities(lambda)? {
            for w in self.orbit(&mu)? {
                *out.entry(w).or_insert(0) += m;
            }
        }
        Ok(out)
    }

    /// product of the positive-root pairings of lambda + rho over those of
    /// rho; an independent dimension count
    pub fn weyl_dim(&self, lambda: &[i64]) -> Result<i128, Error> {
        if !self.is_dominant(lambda) {
            return Err(Error::pre("highest weight must be dominant"));
        }
        let shifted: Vec<i64> = lambda.iter().zip(&self.rho).map(|(a, b)| a + b).collect();
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for r in 0..self.d.num_positive() {
            num *= self.d.pair_with_coroot(&shifted, r) as i128;
            den *= self.d.pair_with_coroot(&self.rho, r) as i128;
            let g = gcd_i128(num, den);
            num /= g;
            den /= g;
        }
        if den != 1 && num % den != 0 {
            return Err(Error::math("dimension formula did not divide out"));
        }
        Ok(num / den)
    }

    pub fn mul(&self, a: &WeightSum, b: &WeightSum) -> WeightSum {
        let mut out = WeightSum::new();
        for (wa, ma) in a {
            for (wb, mb) in b {
                let w: Weight = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
                let e = out.entry(w).or_insert(0);
                *e += ma * mb;
                if *e == 0 {
                    out.remove(&wa.iter().zip(wb).map(|(x, y)| x + y).collect::<Vec<_>>());
                }
            }
        }
        out.retain(|_, m| *m != 0);
        out
    }

    /// greedy expansion of a virtual character in irreducible characters,
    /// peeling the highest remaining weight; fails if some maximal weight
    /// is not dominant
    pub fn expand_in_irreducibles(&self, x: &WeightSum) -> Result<BTreeMap<Weight, i64>, Error> {
        let mut rest = x.clone();
        rest.retain(|_, m| *m != 0);
        let mut out = BTreeMap::new();
        let mut steps = 0;
        while !rest.is_empty() {
            steps += 1;
            if steps > EXPAND_CAP {
                return Err(Error::resource("expansion exceeded cap"));
            }
            let top = rest
                .keys()
                .max_by_key(|w| (self.form(w, &self.rho), (*w).clone()))
                .unwrap()
                .clone();
            if !self.is_dominant(&top) {
                return Err(Error::math(
                    "maximal weight is not dominant; not a character of this subsystem",
                ));
            }
            let c = rest[&top];
            *out.entry(top.clone()).or_insert(0) += c;
            for (w, m) in self.irreducible(&top)? {
                let e = rest.entry(w).or_insert(0);
                *e -= c * m;
            }
            rest.retain(|_, m| *m != 0);
        }
        Ok(out)
    }

    /// restriction to the Levi subdatum on the given simple nodes: the same
    /// weight sum expanded in the subsystem's irreducibles
    pub fn restrict_to_levi(
        &self,
        subset: &[usize],
        x: &WeightSum,
    ) -> Result<BTreeMap<Weight, i64>, Error> {
        let levi = self.d.levi(subset)?;
        let ring = CharRing::new(&levi)?;
        ring.expand_in_irreducibles(x)
    }

    /// value at the torus element sending each lattice coordinate to
    /// zeta^{c_i}, where zeta has order t
    pub fn evaluate_fq(&self, x: &WeightSum, f: &Fq, zeta: Elt, c: &[u64], t: u64) -> Elt {
        debug_assert_eq!(f.pow(zeta, t), 1);
        let mut acc = 0u64;
        for (w, m) in x {
            let mut e: i128 = 0;
            for (a, &b) in w.iter().zip(c) {
                e += *a as i128 * b as i128;
            }
            let e = e.rem_euclid(t as i128) as u64;
            let term = f.mul(f.from_int(*m), f.pow(zeta, e));
            acc = f.add(acc, term);
        }
        acc
    }

    /// value at a rational torus element (x_1, ..., x_dim)
    pub fn evaluate_rational(&self, x: &WeightSum, pt: &[Ratio<i128>]) -> Ratio<i128> {
        let mut acc = Ratio::from_integer(0);
        for (w, m) in x {
            let mut term = Ratio::from_integer(*m as i128);
            for (e, v) in w.iter().zip(pt) {
                term *= rat_pow(v, *e);
            }
            acc += term;
        }
        acc
    }

    /// the character of the dual representation: every weight negated
    pub fn dual(&self, x: &WeightSum) -> WeightSum {
        x.iter()
            .map(|(w, m)| (w.iter().map(|a| -a).collect(), *m))
            .collect()
    }

    /// Twisting by a t-torsion torus element c that kills every root: all
    /// weights of the support must shift by one common phase, which is
    /// returned.  Errors if c is not central or the support disagrees.
    pub fn central_twist_exponent(
        &self,
        x: &WeightSum,
        c: &[u64],
        t: u64,
    ) -> Result<u64, Error> {
        for r in 0..self.d.num_roots() {
            let mut e: i128 = 0;
            for (a, &b) in self.d.roots[r].iter().zip(c) {
                e += *a as i128 * b as i128;
            }
            if e.rem_euclid(t as i128) != 0 {
                return Err(Error::pre("torus element is not central"));
            }
        }
        let mut common: Option<u64> = None;
        for w in x.keys() {
            let mut e: i128 = 0;
            for (a, &b) in w.iter().zip(c) {
                e += *a as i128 * b as i128;
            }
            let e = e.rem_euclid(t as i128) as u64;
            match common {
                None => common = Some(e),
                Some(p) if p == e => {}
                Some(_) => {
                    return Err(Error::math(
                        "support weights twist by different phases; not a single central character",
                    ))
                }
            }
        }
        common.ok_or_else(|| Error::pre("empty character"))
    }

    /// total multiplicity; the dimension when x is a genuine character
    pub fn total(&self, x: &WeightSum) -> i64 {
        x.values().sum()
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a.max(1)
}

fn rat_pow(x: &Ratio<i128>, e: i64) -> Ratio<i128> {
    let mut acc = Ratio::from_integer(1);
    let base = if e >= 0 { x.clone() } else { x.recip() };
    for _ in 0..e.unsigned_abs() {
        acc *= base.clone();
    }
    acc
}

/// Exponent vector x with <alpha_i, x> = c_i mod t over the simple roots:
/// converts simple-root phases into a torus element in coordinates.
pub fn torus_exponent_solve(d: &RootDatum, c: &[u64], t: u64) -> Result<Vec<u64>, Error> {
    if d.dim != d.rank {
        return Err(Error::pre("need a full-rank datum"));
    }
    let f = Fq::new(t, 1)?;
    let n = d.rank;
    let mut rows = Vec::with_capacity(n);
    for k in 0..n {
        let ri = d.simple[k];
        let row: Vec<u64> = d.roots[ri]
            .iter()
            .map(|&a| (a.rem_euclid(t as i64)) as u64)
            .collect();
        rows.push(row);
    }
    let mat = FMat::from_rows(&rows);
    let inv = mat
        .inverse(&f)
        .ok_or_else(|| Error::math("simple roots are singular mod t"))?;
    Ok(inv.apply(&f, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::sl_torus_point;
    use crate::coxeterhom::CoxeterHom;
    use crate::rootdata::{Isogeny, Series};

    fn dual_ring(series: Series, rank: usize) -> CharRing {
        let rd = RootDatum::new(series, rank, Isogeny::Sc).unwrap();
        CharRing::new(&rd.dual()).unwrap()
    }

    #[test]
    fn rank_one_strings() {
        let ring = dual_ring(Series::A, 1);
        for k in 0..6i64 {
            let ch = ring.irreducible(&[k]).unwrap();
            assert_eq!(ring.total(&ch), k + 1);
            for (w, m) in &ch {
                assert_eq!(*m, 1);
                assert!((w[0] - k) % 2 == 0 && w[0].abs() <= k);
            }
            assert_eq!(ring.weyl_dim(&[k]).unwrap(), (k + 1) as i128);
        }
    }

    #[test]
    fn adjoint_of_a2_has_a_double_zero_weight() {
        let ring = dual_ring(Series::A, 2);
        let ch = ring.irreducible(&[1, 1]).unwrap();
        assert_eq!(ring.total(&ch), 8);
        assert_eq!(ch[&vec![0, 0]], 2);
        let mults = ring.dominant_multiplicities(&[1, 1]).unwrap();
        assert_eq!(mults.len(), 2);
    }

    #[test]
    fn tensor_products_decompose_correctly() {
        // 2 x 2 = 3 + 1
        let a1 = dual_ring(Series::A, 1);
        let two = a1.irreducible(&[1]).unwrap();
        let prod = a1.mul(&two, &two);
        let dec = a1.expand_in_irreducibles(&prod).unwrap();
        assert_eq!(dec, BTreeMap::from([(vec![2], 1), (vec![0], 1)]));
        // 3 x dual(3) = 8 + 1
        let a2 = dual_ring(Series::A, 2);
        let std = a2.irreducible(&[1, 0]).unwrap();
        let dualstd = a2.irreducible(&[0, 1]).unwrap();
        assert_eq!(a2.dual(&std), dualstd);
        let prod = a2.mul(&std, &dualstd);
        let dec = a2.expand_in_irreducibles(&prod).unwrap();
        assert_eq!(dec, BTreeMap::from([(vec![1, 1], 1), (vec![0, 0], 1)]));
    }

    #[test]
    fn g2_small_representations() {
        let ring = dual_ring(Series::G, 2);
        let dims: Vec<i64> = (0..2)
            .map(|i| {
                let mut l = vec![0i64; 2];
                l[i] = 1;
                ring.total(&ring.irreducible(&l).unwrap())
            })
            .collect();
        let mut sorted = dims.clone();
        sorted.sort();
        assert_eq!(sorted, vec![7, 14]);
        // the 14-dimensional representation is the adjoint one: its nonzero
        // weights are the twelve roots
        let adj_node = if dims[0] == 14 { 0 } else { 1 };
        let mut l = vec![0i64; 2];
        l[adj_node] = 1;
        let ch = ring.irreducible(&l).unwrap();
        assert_eq!(ch[&vec![0, 0]], 2);
        // 7 x 7 = 27 + 14 + 7 + 1
        let mut l7 = vec![0i64; 2];
        l7[1 - adj_node] = 1;
        let seven = ring.irreducible(&l7).unwrap();
        let prod = ring.mul(&seven, &seven);
        let dec = ring.expand_in_irreducibles(&prod).unwrap();
        let dims: Vec<i128> = dec
            .iter()
            .flat_map(|(w, &m)| {
                std::iter::repeat(ring.weyl_dim(w).unwrap()).take(m as usize)
            })
            .collect();
        let mut dims = dims;
        dims.sort();
        assert_eq!(dims, vec![1, 7, 14, 27]);
    }

    #[test]
    fn freudenthal_matches_weyl_dimension() {
        for (series, rank, lambda) in [
            (Series::A, 2, vec![2i64, 1]),
            (Series::B, 2, vec![1, 1]),
            (Series::C, 3, vec![0, 1, 0]),
            (Series::G, 2, vec![1, 1]),
        ] {
            let ring = dual_ring(series, rank);
            let ch = ring.irreducible(&lambda).unwrap();
            assert_eq!(
                ring.total(&ch) as i128,
                ring.weyl_dim(&lambda).unwrap(),
                "{series:?}{rank} {lambda:?}"
            );
        }
    }

    #[test]
    fn e6_has_a_27_dimensional_representation() {
        let ring = dual_ring(Series::E, 6);
        let mut l = vec![0i64; 6];
        l[0] = 1;
        assert_eq!(ring.weyl_dim(&l).unwrap(), 27);
        let ch = ring.irreducible(&l).unwrap();
        assert_eq!(ring.total(&ch), 27);
        // minuscule: a single Weyl orbit
        assert!(ch.values().all(|&m| m == 1));
    }

    #[test]
    fn characters_are_weyl_invariant() {
        let ring = dual_ring(Series::B, 2);
        let ch = ring.irreducible(&[1, 1]).unwrap();
        for i in 0..2 {
            let refl = ring.d.simple_reflection_matrix(i);
            let moved: WeightSum = ch
                .iter()
                .map(|(w, m)| (refl.apply(w), *m))
                .collect();
            assert_eq!(moved, ch);
        }
    }

    #[test]
    fn levi_restriction_of_the_standard_representation() {
        let ring = dual_ring(Series::A, 2);
        let std = ring.irreducible(&[1, 0]).unwrap();
        let dec = ring.restrict_to_levi(&[0], &std).unwrap();
        // a doublet plus a singlet
        assert_eq!(dec.len(), 2);
        assert_eq!(dec.values().copied().collect::<Vec<_>>(), vec![1, 1]);
        let sizes: Vec<usize> = dec
            .keys()
            .map(|w| {
                let levi = ring.d.levi(&[0]).unwrap();
                let lring = CharRing::new(&levi).unwrap();
                lring.total(&lring.irreducible(w).unwrap()) as usize
            })
            .collect();
        let mut sizes = sizes;
        sizes.sort();
        assert_eq!(sizes, vec![1, 2]);
    }

    #[test]
    fn rational_evaluation() {
        let ring = dual_ring(Series::A, 1);
        let ch = ring.irreducible(&[1]).unwrap();
        let x = Ratio::new(3i128, 2);
        let v = ring.evaluate_rational(&ch, &[x]);
        assert_eq!(v, Ratio::new(13, 6));
        // evaluating any character at 1 gives the dimension
        let a2 = dual_ring(Series::A, 2);
        let adj = a2.irreducible(&[1, 1]).unwrap();
        let ones = vec![Ratio::from_integer(1); 2];
        assert_eq!(a2.evaluate_rational(&adj, &ones), Ratio::from_integer(8));
    }

    #[test]
    fn central_twists() {
        let ring = dual_ring(Series::A, 2);
        // c = (1, 2) kills both simple roots mod 3: a center element
        let c = vec![1u64, 2];
        let std = ring.irreducible(&[1, 0]).unwrap();
        assert_eq!(ring.central_twist_exponent(&std, &c, 3).unwrap(), 1);
        let dualstd = ring.irreducible(&[0, 1]).unwrap();
        assert_eq!(ring.central_twist_exponent(&dualstd, &c, 3).unwrap(), 2);
        let adj = ring.irreducible(&[1, 1]).unwrap();
        assert_eq!(ring.central_twist_exponent(&adj, &c, 3).unwrap(), 0);
        // a non-central element is rejected
        assert!(ring.central_twist_exponent(&std, &[1, 0], 3).is_err());
    }

    #[test]
    fn duality_permutes_highest_weights() {
        let ring = dual_ring(Series::A, 2);
        let ch = ring.irreducible(&[2, 1]).unwrap();
        let dual = ring.dual(&ch);
        let dec = ring.expand_in_irreducibles(&dual).unwrap();
        assert_eq!(dec, BTreeMap::from([(vec![1, 2], 1)]));
        // self-dual series: the dual character is the character itself
        let b2 = dual_ring(Series::B, 2);
        let ch = b2.irreducible(&[1, 1]).unwrap();
        assert_eq!(b2.dual(&ch), ch);
    }

    #[test]
    fn character_values_match_matrix_traces() {
        // rank 1: the torus point diag(9, 3) of the order-12 source
        let rd = RootDatum::new(Series::A, 1, Isogeny::Sc).unwrap();
        let hom = CoxeterHom::build(&rd, 2, 13).unwrap();
        let d = rd.dual();
        let ring = CharRing::new(&d).unwrap();
        let vhat = sl_torus_point(&hom.f, 2, hom.zeta, &hom.c, hom.t).unwrap();
        let x = torus_exponent_solve(&d, &hom.c, hom.t).unwrap();
        let std = ring.irreducible(&[1]).unwrap();
        assert_eq!(
            ring.evaluate_fq(&std, &hom.f, hom.zeta, &x, hom.t),
            vhat.trace(&hom.f)
        );

        // rank 2 over the quadratic extension of F_13
        let rd = RootDatum::new(Series::A, 2, Isogeny::Sc).unwrap();
        let hom = CoxeterHom::build(&rd, 2, 13).unwrap();
        let d = rd.dual();
        let ring = CharRing::new(&d).unwrap();
        let vhat = sl_torus_point(&hom.f, 3, hom.zeta, &hom.c, hom.t).unwrap();
        let x = torus_exponent_solve(&d, &hom.c, hom.t).unwrap();
        let vals: Vec<Elt> = [vec![1i64, 0], vec![0, 1]]
            .iter()
            .map(|l| {
                let ch = ring.irreducible(l).unwrap();
                ring.evaluate_fq(&ch, &hom.f, hom.zeta, &x, hom.t)
            })
            .collect();
        let traces = vec![
            vhat.exterior_trace(&hom.f, 1),
            vhat.exterior_trace(&hom.f, 2),
        ];
        let mut a = vals.clone();
        let mut b = traces.clone();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        assert_eq!(vhat.exterior_trace(&hom.f, 3), 1);
    }
}
