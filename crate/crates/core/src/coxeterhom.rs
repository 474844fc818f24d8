//! Homomorphisms from the metacyclic group Z/t x| Z/h (conjugation acting by
//! q) into adjoint groups over small fields, built from a Coxeter element and
//! a torsion point of the dual torus.
//!
//! The torsion prime t is chosen so that q has multiplicative order exactly
//! the Coxeter number h modulo t; then q is a simple eigenvalue of the
//! Coxeter element on the cocharacter lattice mod t, an eigenvector c gives a
//! t-torsion torus point, and the standard lift of the Coxeter element
//! conjugates that point to its q-th power.  The pair (torus point, lift)
//! therefore generates an embedded copy of the metacyclic group inside the
//! adjoint group of the datum.

use std::collections::BTreeMap;

use crate::chevalley::{sl_torus_point, sl_weyl_lift, Chevalley};
use crate::error::Error;
use crate::finitegrp::{
    h0, h1, isotypic_classes, simple_submodules, FiniteGroup, GroupModule,
};
use crate::gf::{Elt, FMat, Fq};
use crate::linalg::IntMat;
use crate::rootdata::{RootDatum, Series};
use crate::weyl::{coxeter_element, root_permutation, torsion_eigenvectors};

pub const GROUP_CAP: usize = 200_000;
pub const PRIME_BOUND: u64 = 10_000;

fn ord_mod(q: u64, t: u64) -> u64 {
    assert!(q % t != 0);
    let mut x = q % t;
    let mut k = 1;
    while x != 1 {
        x = x * q % t;
        k += 1;
    }
    k
}

/// Smallest prime t not dividing the Weyl group order with ord_t(q) equal to
/// the Coxeter number.
pub fn coxeter_prime(rd: &RootDatum, q: u64, bound: u64) -> Result<u64, Error> {
    if q < 2 {
        return Err(Error::usage("q must be at least 2"));
    }
    let h = rd.coxeter_number()?;
    let w = rd.weyl_order()?;
    let mut t = 2;
    while t <= bound {
        if crate::gf::is_prime(t) && w % t != 0 && q % t != 0 && ord_mod(q, t) == h {
            return Ok(t);
        }
        t += 1;
    }
    Err(Error::math(format!(
        "no torsion prime below {bound} for q={q} and Coxeter number {h}"
    )))
}

pub struct CoxeterHom {
    pub rd: RootDatum,
    pub q: u64,
    pub t: u64,
    pub l: u64,
    pub m: u32,
    pub f: Fq,
    pub zeta: Elt,
    /// eigenvector of the Coxeter element on the cocharacter lattice mod t
    pub c: Vec<u64>,
    pub chev: Chevalley,
    pub cox: IntMat,
    /// adjoint action of the torus point
    pub torus_ad: FMat,
    /// adjoint action of the Coxeter lift
    pub weyl_ad: FMat,
    pub image: FiniteGroup,
}

impl CoxeterHom {
    pub fn build(rd: &RootDatum, q: u64, l: u64) -> Result<CoxeterHom, Error> {
        let t = coxeter_prime(rd, q, PRIME_BOUND)?;
        Self::build_with_t(rd, q, t, l)
    }

    pub fn build_with_t(rd: &RootDatum, q: u64, t: u64, l: u64) -> Result<CoxeterHom, Error> {
        let h = rd.coxeter_number()?;
        if !crate::gf::is_prime(t) || rd.weyl_order()? % t == 0 || q % t == 0 {
            return Err(Error::usage(format!("invalid torsion prime {t}")));
        }
        if ord_mod(q, t) != h {
            return Err(Error::pre(format!(
                "q={q} must have order {h} modulo t={t}"
            )));
        }
        if !crate::gf::is_prime(l) {
            return Err(Error::usage(format!("{l} is not prime")));
        }
        if l == t || l <= h {
            return Err(Error::pre(format!(
                "coefficient prime l={l} must differ from t and exceed the Coxeter number {h}"
            )));
        }
        let m = ord_mod(l, t) as u32;
        let f = Fq::new(l, m)?;
        let zeta = f.root_of_unity(t)?;

        let cox = coxeter_element(rd);
        let eig = torsion_eigenvectors(rd, &cox, q % t, t)?;
        let c = eig
            .into_iter()
            .next()
            .ok_or_else(|| Error::math("no torsion eigenvector for the chosen eigenvalue"))?;

        let chev = Chevalley::new(rd)?;
        let torus_ad = chev.torus_adjoint(&f, zeta, &c, t);
        let cox_word: Vec<usize> = (0..rd.rank).collect();
        let weyl_ad = chev.reduce(&f, &chev.weyl_lift_adjoint(&cox_word));

        let image =
            FiniteGroup::generate(&f, &[torus_ad.clone(), weyl_ad.clone()], GROUP_CAP)?;
        if image.len() as u64 != t * h {
            return Err(Error::math(format!(
                "image has order {}, expected t*h = {}",
                image.len(),
                t * h
            )));
        }
        Ok(CoxeterHom {
            rd: rd.clone(),
            q,
            t,
            l,
            m,
            f,
            zeta,
            c,
            chev,
            cox,
            torus_ad,
            weyl_ad,
            image,
        })
    }

    /// The adjoint representation of the image as a module over it.
    pub fn adjoint_module(&self) -> GroupModule {
        GroupModule::new(vec![self.torus_ad.clone(), self.weyl_ad.clone()])
    }

    /// Structural verification: every image element is monomial on the root
    /// spaces, the induced root permutations are exactly the powers of the
    /// Coxeter element, the diagonal kernel is the torus part of order t, and
    /// the lift conjugates the torus point to its q-th power.
    pub fn verify_definition(&self) -> Result<VerifyReport, Error> {
        let f = &self.f;
        let rank = self.rd.rank;
        let nroots = self.rd.num_roots();
        let h = self.rd.coxeter_number()?;

        // permutations realized by powers of the Coxeter element
        let cox_perm = root_permutation(&self.rd, &self.cox);
        let mut powers = Vec::with_capacity(h as usize);
        let mut p: Vec<usize> = (0..nroots).collect();
        for _ in 0..h {
            powers.push(p.clone());
            p = p.iter().map(|&i| cox_perm[i]).collect();
        }
        if p != powers[0] {
            return Err(Error::math("Coxeter permutation order mismatch"));
        }

        let mut diagonal = 0usize;
        let mut seen_powers = vec![0usize; h as usize];
        for g in &self.image.elements {
            // the Cartan block must not leak into root rows and vice versa
            for col in 0..rank {
                for row in rank..self.chev.dim {
                    if g[(row, col)] != 0 {
                        return Err(Error::math("image element does not normalize the Cartan"));
                    }
                }
            }
            let mut perm = vec![0usize; nroots];
            for gamma in 0..nroots {
                let col = self.chev.e_index(gamma);
                let mut target = None;
                for row in 0..self.chev.dim {
                    if g[(row, col)] != 0 {
                        if row < rank || target.is_some() {
                            return Err(Error::math(
                                "image element is not monomial on root spaces",
                            ));
                        }
                        target = Some(row - rank);
                    }
                }
                perm[gamma] =
                    target.ok_or_else(|| Error::math("root space killed by image element"))?;
            }
            match powers.iter().position(|q| q == &perm) {
                Some(k) => {
                    seen_powers[k] += 1;
                    if k == 0 {
                        diagonal += 1;
                    }
                }
                None => {
                    return Err(Error::math(
                        "image element permutes roots outside the Coxeter cycle",
                    ))
                }
            }
        }
        if diagonal as u64 != self.t {
            return Err(Error::math(format!(
                "diagonal part has order {diagonal}, expected {}",
                self.t
            )));
        }
        if seen_powers.iter().any(|&n| n as u64 != self.t) {
            return Err(Error::math("fibers over the Coxeter cycle are uneven"));
        }

        // conjugation acts on the torus part by the q-th power
        let binv = self
            .weyl_ad
            .inverse(f)
            .ok_or_else(|| Error::math("lift is singular"))?;
        let conj = self.weyl_ad.mul(f, &self.torus_ad).mul(f, &binv);
        if conj != self.torus_ad.pow(f, self.q % self.t) {
            return Err(Error::math(
                "lift does not conjugate the torus point to its q-th power",
            ));
        }
        Ok(VerifyReport {
            image_order: self.image.len() as u64,
            torus_order: self.t,
            weyl_order: h,
            conjugation_power: self.q % self.t,
        })
    }

    /// Dimensions of the simple summands of the adjoint module, ascending,
    /// plus the isotypic class sizes.
    pub fn adjoint_decomposition(&self, seed: u64) -> Result<DecompReport, Error> {
        let module = self.adjoint_module();
        let simples = simple_submodules(&self.image, &module, seed)?;
        let dims: Vec<usize> = simples.iter().map(|s| s.dim()).collect();
        let classes = isotypic_classes(&self.image, &module, &simples);
        let mut class_sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        class_sizes.sort();
        Ok(DecompReport { dims, class_sizes })
    }

    /// The vanishing and witness conditions that make the image large enough
    /// to control deformations: no invariants or first cohomology on the
    /// adjoint module or its dual, and for every simple summand of the dual a
    /// regular semisimple element with nonzero fixed space on it.
    pub fn abundance(&self, seed: u64) -> Result<AbundanceReport, Error> {
        let f = &self.f;
        let module = self.adjoint_module();
        let dual = module.dual(f);
        let trivial = GroupModule::trivial(2, 1);
        let rank = self.rd.rank;

        let h0_ad = h0(&self.image, &module);
        let h0_dual = h0(&self.image, &dual);
        let h1_dual = h1(&self.image, &dual)?;
        let h1_trivial = h1(&self.image, &trivial)?;

        let fix_dim = |g: &FMat| -> usize {
            let mut m = g.clone();
            for i in 0..m.nrows {
                m[(i, i)] = f.sub(m[(i, i)], 1);
            }
            m.nullspace(f).len()
        };

        let simples = simple_submodules(&self.image, &dual, seed)?;
        let dual_acts = dual.all_actions(&self.image);
        let mut witnesses = Vec::new();
        for s in &simples {
            let mut found = None;
            for (gi, g) in self.image.elements.iter().enumerate() {
                if fix_dim(g) != rank {
                    continue; // not regular semisimple in the adjoint group
                }
                // fixed space on the summand: solve g' v = v within the span
                let act = &dual_acts[gi];
                let mut rows = Vec::new();
                for b in &s.basis {
                    let img = act.apply(f, b);
                    let diff: Vec<Elt> = img.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect();
                    rows.push(diff);
                }
                // v = sum x_i b_i with sum x_i (act b_i - b_i) = 0
                let mat = FMat::from_rows(&rows).transpose();
                if !mat.nullspace(f).is_empty() {
                    found = Some(gi);
                    break;
                }
            }
            match found {
                Some(gi) => witnesses.push(WitnessReport {
                    summand_dim: s.dim(),
                    element: gi,
                    element_order: self.image.order_of(gi),
                }),
                None => {
                    return Ok(AbundanceReport {
                        h0_adjoint: h0_ad,
                        h0_dual,
                        h1_dual,
                        h1_trivial,
                        witnesses,
                        missing_witness_dim: Some(s.dim()),
                        abundant: false,
                    })
                }
            }
        }
        let abundant =
            h0_ad == 0 && h0_dual == 0 && h1_dual == 0 && h1_trivial == 0;
        Ok(AbundanceReport {
            h0_adjoint: h0_ad,
            h0_dual,
            h1_dual,
            h1_trivial,
            witnesses,
            missing_witness_dim: None,
            abundant,
        })
    }

    /// Rank-one groups only: lift the construction to 2x2 matrices and check
    /// that witness centralizers are maximal tori (order q +- 1) and that the
    /// centralizer of the whole image is the scalars.
    pub fn rank_one_group_level(&self, cap: usize) -> Result<RankOneReport, Error> {
        if self.rd.series != Series::A || self.rd.rank != 1 {
            return Err(Error::pre("group-level checks are for rank-one type A"));
        }
        let f = &self.f;
        let vhat = sl_torus_point(f, 2, self.zeta, &self.c, self.t)?;
        let what = sl_weyl_lift(f, 2, &[0]);

        // ambient: all of GL_2 over the field
        let qf = f.q;
        let gl_order = (qf * qf - 1) * (qf * qf - qf);
        if gl_order as usize > cap {
            return Err(Error::resource(format!(
                "GL2 enumeration of order {gl_order} exceeds cap {cap}"
            )));
        }
        // generators: a generating torus pair plus a transvection
        let g = f.generator();
        let mut d1 = FMat::identity(2);
        d1[(0, 0)] = g;
        let mut u = FMat::identity(2);
        u[(0, 1)] = 1;
        let mut w = FMat::zero(2, 2);
        w[(0, 1)] = 1;
        w[(1, 0)] = f.neg(1);
        let gl2 = FiniteGroup::generate(f, &[d1, u, w], cap)?;
        if gl2.len() as u64 != gl_order {
            return Err(Error::math("GL2 enumeration has unexpected order"));
        }

        let vi = gl2
            .index_of(&vhat)
            .ok_or_else(|| Error::math("torus point missing from GL2"))?;
        let wi = gl2
            .index_of(&what)
            .ok_or_else(|| Error::math("lift missing from GL2"))?;

        // centralizers of the two generators: maximal tori
        let cent_v = gl2.centralizer_order(&[vi]);
        let cent_w = gl2.centralizer_order(&[wi]);
        let split = (qf - 1) * (qf - 1);
        let nonsplit = qf * qf - 1;
        for cent in [cent_v as u64, cent_w as u64] {
            if cent != split && cent != nonsplit {
                return Err(Error::math(format!(
                    "regular element centralizer {cent} is not a maximal torus"
                )));
            }
        }
        // in SL2 those tori have order q-1 and q+1
        let sl_cent_v = cent_v as u64 / (qf - 1);
        let sl_cent_w = cent_w as u64 / (qf - 1);

        let cent_both = gl2.centralizer_order(&[vi, wi]);
        let scalars_only = cent_both as u64 == qf - 1;
        Ok(RankOneReport {
            source_order: self.t * what_order(f, &what),
            lift_order: what_order(f, &what),
            witness_centralizers_sl: vec![sl_cent_v, sl_cent_w],
            image_centralizer_order: cent_both as u64,
            scalars_only,
        })
    }
}

fn what_order(f: &Fq, m: &FMat) -> u64 {
    let mut p = m.clone();
    for k in 1..=1000u64 {
        if p.is_identity() {
            return k;
        }
        p = p.mul(f, m);
    }
    panic!("order exceeds cap");
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub image_order: u64,
    pub torus_order: u64,
    pub weyl_order: u64,
    pub conjugation_power: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompReport {
    pub dims: Vec<usize>,
    pub class_sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub summand_dim: usize,
    pub element: usize,
    pub element_order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbundanceReport {
    pub h0_adjoint: usize,
    pub h0_dual: usize,
    pub h1_dual: usize,
    pub h1_trivial: usize,
    pub witnesses: Vec<WitnessReport>,
    pub missing_witness_dim: Option<usize>,
    pub abundant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOneReport {
    pub source_order: u64,
    pub lift_order: u64,
    pub witness_centralizers_sl: Vec<u64>,
    pub image_centralizer_order: u64,
    pub scalars_only: bool,
}

/// Invariants of the construction that must not depend on the coefficient
/// prime: torsion data, eigenvector, image order and permutation structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub t: u64,
    pub c: Vec<u64>,
    pub image_order: u64,
    pub verify: VerifyReport,
}

pub fn reduction_consistency(
    rd: &RootDatum,
    q: u64,
    l1: u64,
    l2: u64,
) -> Result<(ReductionReport, ReductionReport, bool), Error> {
    let a = CoxeterHom::build(rd, q, l1)?;
    let b = CoxeterHom::build(rd, q, l2)?;
    let ra = ReductionReport {
        t: a.t,
        c: a.c.clone(),
        image_order: a.image.len() as u64,
        verify: a.verify_definition()?,
    };
    let rb = ReductionReport {
        t: b.t,
        c: b.c.clone(),
        image_order: b.image.len() as u64,
        verify: b.verify_definition()?,
    };
    let equal = ra == rb;
    Ok((ra, rb, equal))
}

/// Orders of the simple summands of the adjoint module over a range of
/// coefficient primes; used to see the field-degree dependence.
pub fn decomposition_by_prime(
    rd: &RootDatum,
    q: u64,
    primes: &[u64],
    seed: u64,
) -> Result<BTreeMap<u64, DecompReport>, Error> {
    let mut out = BTreeMap::new();
    for &l in primes {
        let hom = CoxeterHom::build(rd, q, l)?;
        out.insert(l, hom.adjoint_decomposition(seed)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Isogeny;

    fn sc(series: Series, rank: usize) -> RootDatum {
        RootDatum::new(series, rank, Isogeny::Sc).unwrap()
    }

    #[test]
    fn torsion_primes_match_known_values() {
        assert_eq!(coxeter_prime(&sc(Series::A, 1), 2, 1000).unwrap(), 3);
        assert_eq!(coxeter_prime(&sc(Series::A, 2), 2, 1000).unwrap(), 7);
        assert_eq!(coxeter_prime(&sc(Series::G, 2), 3, 1000).unwrap(), 7);
    }

    #[test]
    fn a1_hom_builds_and_verifies() {
        let rd = sc(Series::A, 1);
        let hom = CoxeterHom::build(&rd, 2, 13).unwrap();
        assert_eq!(hom.t, 3);
        assert_eq!(hom.m, 1);
        assert_eq!(hom.image.len(), 6);
        let rep = hom.verify_definition().unwrap();
        assert_eq!(rep.image_order, 6);
        assert_eq!(rep.torus_order, 3);
        assert_eq!(rep.weyl_order, 2);
        assert_eq!(rep.conjugation_power, 2);
    }

    #[test]
    fn a1_adjoint_decomposition() {
        let rd = sc(Series::A, 1);
        let hom = CoxeterHom::build(&rd, 2, 13).unwrap();
        let dec = hom.adjoint_decomposition(42).unwrap();
        assert_eq!(dec.dims, vec![1, 2]);
        assert_eq!(dec.class_sizes, vec![1, 1]);
    }

    #[test]
    fn a1_abundance_holds() {
        let rd = sc(Series::A, 1);
        let hom = CoxeterHom::build(&rd, 2, 13).unwrap();
        let ab = hom.abundance(42).unwrap();
        assert!(ab.abundant, "{ab:?}");
        assert_eq!(ab.h0_adjoint, 0);
        assert_eq!(ab.h0_dual, 0);
        assert_eq!(ab.h1_dual, 0);
        assert_eq!(ab.h1_trivial, 0);
        assert_eq!(ab.witnesses.len(), 2);
    }

    #[test]
    fn a1_group_level_dicyclic() {
        let rd = sc(Series::A, 1);
        let hom = CoxeterHom::build(&rd, 2, 13).unwrap();
        let rep = hom.rank_one_group_level(100_000).unwrap();
        // lift of the reflection has order 4, so the source is dicyclic of order 12
        assert_eq!(rep.lift_order, 4);
        assert_eq!(rep.source_order, 12);
        assert!(rep.scalars_only);
        for c in &rep.witness_centralizers_sl {
            assert!(*c == 12 || *c == 14, "centralizer {c}");
        }
    }

    #[test]
    fn a2_hom_field_degrees() {
        let rd = sc(Series::A, 2);
        // 29 = 1 mod 7: prime field; 13 has order 2 mod 7: quadratic extension
        let h29 = CoxeterHom::build(&rd, 2, 29).unwrap();
        assert_eq!((h29.t, h29.m), (7, 1));
        let h13 = CoxeterHom::build(&rd, 2, 13).unwrap();
        assert_eq!((h13.t, h13.m), (7, 2));
        assert_eq!(h13.f.q, 169);
        for hom in [&h29, &h13] {
            assert_eq!(hom.image.len(), 21);
            hom.verify_definition().unwrap();
        }
    }

    #[test]
    fn a2_decomposition_depends_on_field_degree() {
        let rd = sc(Series::A, 2);
        let d29 = CoxeterHom::build(&rd, 2, 29)
            .unwrap()
            .adjoint_decomposition(5)
            .unwrap();
        assert_eq!(d29.dims, vec![2, 3, 3]);
        let d13 = CoxeterHom::build(&rd, 2, 13)
            .unwrap()
            .adjoint_decomposition(5)
            .unwrap();
        assert_eq!(d13.dims, vec![1, 1, 3, 3]);
    }

    #[test]
    fn a2_abundance_holds() {
        let rd = sc(Series::A, 2);
        for l in [13, 29] {
            let hom = CoxeterHom::build(&rd, 2, l).unwrap();
            let ab = hom.abundance(7).unwrap();
            assert!(ab.abundant, "l={l}: {ab:?}");
        }
    }

    #[test]
    fn g2_hom_builds() {
        let rd = sc(Series::G, 2);
        let hom = CoxeterHom::build(&rd, 3, 13).unwrap();
        assert_eq!(hom.t, 7);
        assert_eq!(hom.image.len(), 42);
        let rep = hom.verify_definition().unwrap();
        assert_eq!(rep.weyl_order, 6);
        // dim g = 2 + 12
        assert_eq!(hom.chev.dim, 14);
    }

    #[test]
    fn reduction_across_primes_is_consistent() {
        let rd = sc(Series::A, 1);
        let (ra, rb, equal) = reduction_consistency(&rd, 2, 13, 19).unwrap();
        assert!(equal, "{ra:?} vs {rb:?}");
    }

    #[test]
    fn bad_parameters_are_rejected() {
        let rd = sc(Series::A, 2);
        // l = t is forbidden
        assert!(CoxeterHom::build_with_t(&rd, 2, 7, 7).is_err());
        // q of the wrong order mod t
        assert!(CoxeterHom::build_with_t(&rd, 2, 5, 13).is_err());
        // l must exceed the Coxeter number
        assert!(CoxeterHom::build_with_t(&rd, 2, 7, 3).is_err());
        // composite l
        assert!(CoxeterHom::build_with_t(&rd, 2, 7, 15).is_err());
    }
}
