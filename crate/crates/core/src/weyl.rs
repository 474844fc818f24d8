//! Weyl groups as explicit lattice-automorphism groups: BFS enumeration with
//! reduced words, Coxeter elements, and torsion eigenvector computations on
//! the cocharacter side.
//!
//! Matrices act on column vectors in M-coordinates.  The action on the dual
//! lattice is the contragredient (inverse transpose), so a matrix and its
//! dual action pair compatibly: <w x, w' y> = <x, y> when w' = (w^{-1})^T.

use std::collections::HashMap;

use crate::error::Error;
use crate::gf::{FMat, Fq};
use crate::linalg::{smith_normal_form, IntMat};
use crate::rootdata::RootDatum;

const ORDER_CAP: u64 = 1000;

#[derive(Clone, Debug)]
pub struct WeylElement {
    pub mat: IntMat,
    /// reduced word in simple reflections (BFS finds geodesics)
    pub word: Vec<usize>,
}

pub struct WeylGroup {
    pub elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
    pub gens: Vec<IntMat>,
}

impl WeylGroup {
    /// Enumerates the full group by breadth-first closure of the simple
    /// reflections; fails if the group exceeds `cap` elements.
    pub fn enumerate(rd: &RootDatum, cap: usize) -> Result<WeylGroup, Error> {
        let gens: Vec<IntMat> =
            (0..rd.rank).map(|i| rd.simple_reflection_matrix(i)).collect();
        let id = IntMat::identity(rd.dim);
        let mut elements = vec![WeylElement { mat: id.clone(), word: vec![] }];
        let mut index = HashMap::new();
        index.insert(id.a.clone(), 0usize);
        let mut head = 0;
        while head < elements.len() {
            let cur = elements[head].clone();
            head += 1;
            for (i, g) in gens.iter().enumerate() {
                let m = cur.mat.mul(g);
                if !index.contains_key(&m.a) {
                    if elements.len() >= cap {
                        return Err(Error::resource(format!(
                            "Weyl group of {} exceeds enumeration cap {cap}",
                            rd.label
                        )));
                    }
                    let mut word = cur.word.clone();
                    word.push(i);
                    index.insert(m.a.clone(), elements.len());
                    elements.push(WeylElement { mat: m, word });
                }
            }
        }
        Ok(WeylGroup { elements, index, gens })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, m: &IntMat) -> Option<usize> {
        self.index.get(&m.a).copied()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        let m = self.elements[i].mat.mul(&self.elements[j].mat);
        self.index[&m.a]
    }

    pub fn inverse(&self, i: usize) -> usize {
        let m = self.elements[i]
            .mat
            .finite_order_inverse(ORDER_CAP)
            .expect("Weyl elements have finite order");
        self.index[&m.a]
    }

    pub fn length(&self, i: usize) -> usize {
        self.elements[i].word.len()
    }

    /// The unique element of maximal length.
    pub fn longest(&self) -> usize {
        (0..self.len()).max_by_key(|&i| self.length(i)).unwrap()
    }

    /// How each element permutes the roots of the datum.
    pub fn root_permutation(&self, rd: &RootDatum, i: usize) -> Vec<usize> {
        root_permutation(rd, &self.elements[i].mat)
    }
}

pub fn root_permutation(rd: &RootDatum, w: &IntMat) -> Vec<usize> {
    (0..rd.num_roots())
        .map(|r| {
            let img = w.apply(&rd.roots[r]);
            rd.root_index(&img).expect("Weyl action permutes roots")
        })
        .collect()
}

/// Product of the simple reflections in Bourbaki order.
pub fn coxeter_element(rd: &RootDatum) -> IntMat {
    let mut m = IntMat::identity(rd.dim);
    for i in 0..rd.rank {
        m = m.mul(&rd.simple_reflection_matrix(i));
    }
    m
}

/// Contragredient: the action on the dual lattice.
pub fn dual_action(w: &IntMat) -> IntMat {
    w.finite_order_inverse(ORDER_CAP)
        .expect("lattice automorphism of finite order")
        .transpose()
}

/// Invariant factors of M / (1 - w) M.
pub fn coinvariant_factors(w: &IntMat) -> Vec<i64> {
    let one_minus = IntMat::identity(w.nrows).sub(w);
    smith_normal_form(&one_minus)
        .into_iter()
        .filter(|&d| d != 1)
        .collect()
}

/// Basis of the q-eigenspace of w acting on M_ tensor F_t (dual action).
/// Vectors are residues mod t; an element c corresponds to the t-torsion
/// point of the torus sending x in M to zeta_t^{<x, c>}.
pub fn torsion_eigenvectors(
    rd: &RootDatum,
    w: &IntMat,
    q: u64,
    t: u64,
) -> Result<Vec<Vec<u64>>, Error> {
    let f = Fq::new(t, 1)?;
    let wd = dual_action(w);
    let a = FMat::from_int_mat(&f, &wd);
    let mut shifted = a.clone();
    for i in 0..rd.dim {
        shifted[(i, i)] = f.sub(shifted[(i, i)], f.from_int(q as i64));
    }
    Ok(shifted.nullspace(&f))
}

/// All (element index, scalar) pairs where the dual action of the element
/// scales c: w.c = lambda c mod t.
pub fn scaling_stabilizer(
    weyl: &WeylGroup,
    c: &[u64],
    t: u64,
) -> Result<Vec<(usize, u64)>, Error> {
    let f = Fq::new(t, 1)?;
    let lead = c
        .iter()
        .position(|&x| x % t != 0)
        .ok_or_else(|| Error::pre("zero vector has no scaling stabilizer"))?;
    let mut out = Vec::new();
    'outer: for i in 0..weyl.len() {
        let wd = dual_action(&weyl.elements[i].mat);
        let u: Vec<u64> = FMat::from_int_mat(&f, &wd)
            .apply(&f, &c.iter().map(|&x| x % t).collect::<Vec<_>>());
        let lam = f.mul(u[lead], f.inv(c[lead] % t));
        for j in 0..c.len() {
            if u[j] != f.mul(lam, c[j] % t) {
                continue 'outer;
            }
        }
        out.push((i, lam));
    }
    Ok(out)
}

/// Orbit of a vector under a list of integer matrices, BFS order.
pub fn orbit(gens: &[IntMat], v: &[i64], cap: usize) -> Result<Vec<Vec<i64>>, Error> {
    let mut seen = std::collections::HashSet::new();
    let mut out = vec![v.to_vec()];
    seen.insert(v.to_vec());
    let mut head = 0;
    while head < out.len() {
        let cur = out[head].clone();
        head += 1;
        for g in gens {
            let img = g.apply(&cur);
            if seen.insert(img.clone()) {
                if out.len() >= cap {
                    return Err(Error::resource(format!("orbit exceeds cap {cap}")));
                }
                out.push(img);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{Isogeny, Series};

    fn sc(series: Series, rank: usize) -> RootDatum {
        RootDatum::new(series, rank, Isogeny::Sc).unwrap()
    }

    #[test]
    fn enumeration_matches_degree_tables() {
        for (s, n) in [
            (Series::A, 1),
            (Series::A, 3),
            (Series::B, 2),
            (Series::B, 3),
            (Series::D, 4),
            (Series::G, 2),
            (Series::F, 4),
        ] {
            let rd = sc(s, n);
            let w = WeylGroup::enumerate(&rd, 1 << 20).unwrap();
            assert_eq!(w.len() as u64, rd.weyl_order().unwrap(), "{}", rd.label);
        }
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let rd = sc(Series::F, 4);
        assert!(WeylGroup::enumerate(&rd, 100).is_err());
    }

    #[test]
    fn longest_element_has_one_length_per_positive_root() {
        for (s, n) in [(Series::A, 3), (Series::B, 3), (Series::G, 2)] {
            let rd = sc(s, n);
            let w = WeylGroup::enumerate(&rd, 1 << 20).unwrap();
            let w0 = w.longest();
            assert_eq!(w.length(w0), rd.num_positive(), "{}", rd.label);
            // longest element is an involution
            assert_eq!(w.mul(w0, w0), 0);
            // it maps every positive root to a negative root
            let perm = w.root_permutation(&rd, w0);
            for i in 0..rd.num_positive() {
                assert!(!rd.is_positive(perm[i]));
            }
        }
    }

    #[test]
    fn bfs_words_are_reduced() {
        let rd = sc(Series::B, 2);
        let w = WeylGroup::enumerate(&rd, 1 << 20).unwrap();
        // sum over W of x^len = Poincare polynomial; for B2: (1+x)(1+x+x^2+x^3)
        let mut by_len = vec![0usize; rd.num_positive() + 1];
        for i in 0..w.len() {
            by_len[w.length(i)] += 1;
        }
        assert_eq!(by_len, vec![1, 2, 2, 2, 1]);
    }

    #[test]
    fn coxeter_element_order_is_coxeter_number() {
        for (s, n) in [
            (Series::A, 2),
            (Series::A, 3),
            (Series::B, 3),
            (Series::D, 4),
            (Series::G, 2),
            (Series::F, 4),
            (Series::E, 6),
        ] {
            let rd = sc(s, n);
            let c = coxeter_element(&rd);
            assert_eq!(c.order(1000).unwrap(), rd.coxeter_number().unwrap(), "{}", rd.label);
        }
    }

    #[test]
    fn det_one_minus_coxeter_equals_cartan_det() {
        for (s, n) in [
            (Series::A, 2),
            (Series::A, 4),
            (Series::B, 3),
            (Series::C, 3),
            (Series::D, 5),
            (Series::E, 6),
            (Series::G, 2),
        ] {
            let rd = sc(s, n);
            let c = coxeter_element(&rd);
            let one_minus = IntMat::identity(rd.dim).sub(&c);
            assert_eq!(
                one_minus.det_bareiss(),
                rd.cartan().det_bareiss(),
                "{}",
                rd.label
            );
            // and the coinvariant lattice has that order
            let prod: i64 = coinvariant_factors(&c).iter().product();
            assert_eq!(prod, rd.center_order(), "{}", rd.label);
        }
    }

    #[test]
    fn a2_coxeter_rotation() {
        let rd = sc(Series::A, 2);
        let c = coxeter_element(&rd);
        // s0 s1 in root coordinates
        assert_eq!(c, IntMat::from_rows(&[vec![0, -1], vec![1, -1]]));
        assert_eq!(c.order(10).unwrap(), 3);
    }

    #[test]
    fn torsion_eigenvectors_exist_iff_order_matches() {
        // A2: cox has char poly x^2+x+1; mod 7 its eigenvalues are 2 and 4
        let rd = sc(Series::A, 2);
        let c = coxeter_element(&rd);
        for (q, expect) in [(2u64, 1usize), (4, 1), (3, 0), (1, 0)] {
            let vs = torsion_eigenvectors(&rd, &c, q, 7).unwrap();
            assert_eq!(vs.len(), expect, "q={q}");
        }
        // eigenvector equation holds exactly
        let vs = torsion_eigenvectors(&rd, &c, 2, 7).unwrap();
        let f = Fq::new(7, 1).unwrap();
        let wd = FMat::from_int_mat(&f, &dual_action(&c));
        let img = wd.apply(&f, &vs[0]);
        let want: Vec<u64> = vs[0].iter().map(|&x| f.mul(2, x)).collect();
        assert_eq!(img, want);
    }

    #[test]
    fn g2_torsion_eigenvalues_mod_7() {
        let rd = sc(Series::G, 2);
        let c = coxeter_element(&rd);
        // order 6 eigenvalues mod 7: the primitive sixth roots 3 and 5
        for (q, expect) in [(3u64, 1usize), (5, 1), (2, 0), (6, 0)] {
            assert_eq!(torsion_eigenvectors(&rd, &c, q, 7).unwrap().len(), expect);
        }
    }

    #[test]
    fn scaling_stabilizer_of_coxeter_eigenvector() {
        let rd = sc(Series::A, 2);
        let weyl = WeylGroup::enumerate(&rd, 1 << 20).unwrap();
        let c = coxeter_element(&rd);
        let vs = torsion_eigenvectors(&rd, &c, 2, 7).unwrap();
        let stab = scaling_stabilizer(&weyl, &vs[0], 7).unwrap();
        // exactly the powers of the Coxeter rotation, scaling by 1, 2, 4
        assert_eq!(stab.len(), 3);
        let mut lambdas: Vec<u64> = stab.iter().map(|&(_, l)| l).collect();
        lambdas.sort();
        assert_eq!(lambdas, vec![1, 2, 4]);
        for &(i, _) in &stab {
            let m = &weyl.elements[i].mat;
            assert!(m.is_identity() || m == &c || m == &c.mul(&c));
        }
    }

    #[test]
    fn orbit_of_fundamental_coweight() {
        // W(A2) orbit of a fundamental weight has 3 elements (vertices of a triangle)
        let rd = sc(Series::A, 2);
        let gens: Vec<IntMat> = (0..2).map(|i| rd.simple_reflection_matrix(i)).collect();
        let orb = orbit(&gens, &[1, 0], 100).unwrap();
        // in root coordinates the fundamental-weight orbit is not integral;
        // use a root instead: orbit of a simple root = all 6 roots
        let orb_root = orbit(&gens, &rd.roots[rd.simple[0]].clone(), 100).unwrap();
        assert_eq!(orb_root.len(), 6);
        assert!(orb.len() == 3 || orb.len() == 6); // depends on lattice; sanity only
    }

    #[test]
    fn dual_action_preserves_pairing() {
        let rd = sc(Series::B, 2);
        let w = WeylGroup::enumerate(&rd, 1 << 20).unwrap();
        for i in 0..w.len() {
            let m = &w.elements[i].mat;
            let md = dual_action(m);
            for r in 0..rd.num_roots() {
                let x = m.apply(&rd.roots[r]);
                let y = md.apply(&rd.coroots[r]);
                // image of a (root, coroot) pair is again such a pair
                let idx = rd.root_index(&x).unwrap();
                assert_eq!(rd.coroots[idx], y);
            }
        }
    }
}
