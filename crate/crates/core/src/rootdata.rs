//! Root data for the simple series A-G: pairing tables, root enumeration by
//! reflection closure, duality, Levi subsystems and lattice indices.
//!
//! Coordinates: a datum stores its character lattice M as Z^dim and its
//! cocharacter lattice M_ in the dual basis, so the canonical pairing is the
//! dot product of coordinate vectors.  For a standard simply connected datum
//! the simple roots are the unit vectors and the simple coroots are the
//! columns of the Cartan matrix.  The adjoint datum is the dual of the
//! simply connected datum of the dual series (B and C swap, the rest are
//! self-dual).
//!
//! Roots are index-paired with their coroots and sorted so that the positive
//! roots come first in (height, lex) order, followed by their negatives in
//! the same order: the negative of root i is root i + num_positive.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::{smith_normal_form, solve_integer_rect, IntMat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    /// The series of the dual root system.
    pub fn dual(self) -> Series {
        match self {
            Series::B => Series::C,
            Series::C => Series::B,
            s => s,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Isogeny {
    Sc,
    Ad,
}

impl Isogeny {
    pub fn tag(self) -> &'static str {
        match self {
            Isogeny::Sc => "sc",
            Isogeny::Ad => "ad",
        }
    }
}

/// Parses labels like "A2", "E8", "d4" into (series, rank).
pub fn parse_label(s: &str) -> Result<(Series, usize), Error> {
    let s = s.trim();
    let mut chars = s.chars();
    let letter = chars.next().ok_or_else(|| Error::usage("empty type label"))?;
    let series = match letter.to_ascii_uppercase() {
        'A' => Series::A,
        'B' => Series::B,
        'C' => Series::C,
        'D' => Series::D,
        'E' => Series::E,
        'F' => Series::F,
        'G' => Series::G,
        c => return Err(Error::usage(format!("unknown series letter '{c}'"))),
    };
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::usage(format!("bad rank in type label '{s}'")))?;
    Ok((series, rank))
}

/// Cartan matrix in Bourbaki numbering: entry (i, j) is the pairing of the
/// i-th simple root with the j-th simple coroot.
pub fn cartan_matrix(series: Series, rank: usize) -> Result<IntMat, Error> {
    let ok = match series {
        Series::A => rank >= 1,
        Series::B | Series::C => rank >= 2,
        Series::D => rank >= 3,
        Series::E => (6..=8).contains(&rank),
        Series::F => rank == 4,
        Series::G => rank == 2,
    };
    if !ok {
        return Err(Error::usage(format!(
            "rank {rank} is out of range for series {}",
            series.letter()
        )));
    }
    let n = rank;
    let mut m = IntMat::zero(n, n);
    for i in 0..n {
        m[(i, i)] = 2;
    }
    let mut edge = |i: usize, j: usize| {
        m[(i, j)] = -1;
        m[(j, i)] = -1;
    };
    match series {
        Series::A => {
            for i in 0..n - 1 {
                edge(i, i + 1);
            }
        }
        Series::B => {
            for i in 0..n - 1 {
                edge(i, i + 1);
            }
            m[(n - 2, n - 1)] = -2; // last simple root is short
        }
        Series::C => {
            for i in 0..n - 1 {
                edge(i, i + 1);
            }
            m[(n - 1, n - 2)] = -2; // last simple root is long
        }
        Series::D => {
            for i in 0..n - 2 {
                edge(i, i + 1);
            }
            edge(n - 3, n - 1);
        }
        Series::E => {
            // chain 0-2-3-4-... with node 1 hanging off node 3
            edge(0, 2);
            for i in 2..n - 1 {
                edge(i, i + 1);
            }
            edge(1, 3);
        }
        Series::F => {
            edge(0, 1);
            edge(1, 2);
            edge(2, 3);
            m[(1, 2)] = -2; // roots 0,1 long; 2,3 short
        }
        Series::G => {
            m[(0, 1)] = -1;
            m[(1, 0)] = -3; // root 0 short, root 1 long
        }
    }
    Ok(m)
}

/// Degrees of the fundamental invariants of the Weyl group, ascending.
pub fn degrees(series: Series, rank: usize) -> Result<Vec<u64>, Error> {
    cartan_matrix(series, rank)?; // validates the (series, rank) pair
    let n = rank as u64;
    let mut d: Vec<u64> = match series {
        Series::A => (2..=n + 1).collect(),
        Series::B | Series::C => (1..=n).map(|i| 2 * i).collect(),
        Series::D => {
            let mut v: Vec<u64> = (1..n).map(|i| 2 * i).collect();
            v.push(n);
            v
        }
        Series::E => match rank {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        Series::F => vec![2, 6, 8, 12],
        Series::G => vec![2, 6],
    };
    d.sort();
    Ok(d)
}

pub fn weyl_order(series: Series, rank: usize) -> Result<u64, Error> {
    let mut w = 1u64;
    for d in degrees(series, rank)? {
        w = w
            .checked_mul(d)
            .ok_or_else(|| Error::resource("Weyl group order overflows u64"))?;
    }
    Ok(w)
}

pub fn coxeter_number(series: Series, rank: usize) -> Result<u64, Error> {
    Ok(*degrees(series, rank)?.last().unwrap())
}

/// Whether l is a very good characteristic for the simple type: l must not
/// divide n+1 in type A_n, must avoid 2 outside type A, must avoid 3 in the
/// exceptional types, and must avoid 5 for E8.
pub fn very_good(series: Series, rank: usize, l: u64) -> bool {
    match series {
        Series::A => (rank as u64 + 1) % l != 0,
        Series::B | Series::C | Series::D => l != 2,
        Series::E => l != 2 && l != 3 && (rank != 8 || l != 5),
        Series::F | Series::G => l != 2 && l != 3,
    }
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub series: Series,
    pub rank: usize,
    /// coordinate dimension of M; equals `rank` except for Levi subdata
    pub dim: usize,
    pub isogeny: Isogeny,
    pub label: String,
    /// all roots, positive first by (height, lex), then negatives in the same order
    pub roots: Vec<Vec<i64>>,
    /// coroots, index-paired with `roots`
    pub coroots: Vec<Vec<i64>>,
    /// indices into `roots` of the simple roots, in Bourbaki order
    pub simple: Vec<usize>,
    /// coefficients of each root in the simple-root basis
    simple_coords: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

pub fn dot(x: &[i64], y: &[i64]) -> i64 {
    assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

impl RootDatum {
    pub fn new(series: Series, rank: usize, isogeny: Isogeny) -> Result<RootDatum, Error> {
        let sc = Self::simply_connected(series, rank)?;
        match isogeny {
            Isogeny::Sc => Ok(sc),
            Isogeny::Ad => {
                // dual of the simply connected datum of the dual series
                let mut ad = Self::simply_connected(series.dual(), rank)?.dual();
                ad.label = format!("{}{}-{}", series.letter(), rank, Isogeny::Ad.tag());
                debug_assert_eq!(ad.series, series);
                Ok(ad)
            }
        }
    }

    fn simply_connected(series: Series, rank: usize) -> Result<RootDatum, Error> {
        let cartan = cartan_matrix(series, rank)?;
        let n = rank;
        let mut simple_roots = Vec::with_capacity(n);
        let mut simple_coroots = Vec::with_capacity(n);
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            simple_roots.push(e);
            simple_coroots.push(cartan.col(i));
        }
        let label = format!("{}{}-{}", series.letter(), rank, Isogeny::Sc.tag());
        let rd = Self::from_simple_system(
            series,
            rank,
            n,
            Isogeny::Sc,
            label,
            &simple_roots,
            &simple_coroots,
        )?;
        // cross-check the enumeration against the degree tables
        let expected = rank as u64 * coxeter_number(series, rank)?;
        if rd.roots.len() as u64 != expected {
            return Err(Error::math(format!(
                "{}: found {} roots, expected {expected}",
                rd.label,
                rd.roots.len()
            )));
        }
        Ok(rd)
    }

    /// Closes the given simple (root, coroot) pairs under simple reflections
    /// and canonicalizes the ordering.
    fn from_simple_system(
        series: Series,
        rank: usize,
        dim: usize,
        isogeny: Isogeny,
        label: String,
        simple_roots: &[Vec<i64>],
        simple_coroots: &[Vec<i64>],
    ) -> Result<RootDatum, Error> {
        let n = simple_roots.len();
        let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        let mut work: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            seen.insert(simple_roots[i].clone(), simple_coroots[i].clone());
            work.push(simple_roots[i].clone());
        }
        while let Some(beta) = work.pop() {
            let beta_co = seen[&beta].clone();
            for i in 0..n {
                let k = dot(&beta, &simple_coroots[i]);
                let kc = dot(&simple_roots[i], &beta_co);
                let new_root: Vec<i64> = beta
                    .iter()
                    .zip(&simple_roots[i])
                    .map(|(b, a)| b - k * a)
                    .collect();
                let new_co: Vec<i64> = beta_co
                    .iter()
                    .zip(&simple_coroots[i])
                    .map(|(b, a)| b - kc * a)
                    .collect();
                if !seen.contains_key(&new_root) {
                    seen.insert(new_root.clone(), new_co);
                    work.push(new_root);
                }
            }
        }

        // coefficients in the simple-root basis determine sign and height
        let basis = {
            let mut cols = IntMat::zero(dim, n);
            for (j, r) in simple_roots.iter().enumerate() {
                for i in 0..dim {
                    cols[(i, j)] = r[i];
                }
            }
            cols
        };
        let mut pos: Vec<(Vec<i64>, Vec<i64>, Vec<i64>)> = Vec::new();
        for (root, coroot) in &seen {
            let coords = solve_integer_rect(&basis, root).ok_or_else(|| {
                Error::math("root does not lie in the lattice spanned by the simple roots")
            })?;
            if coords.iter().all(|&c| c >= 0) && coords.iter().any(|&c| c > 0) {
                pos.push((coords, root.clone(), coroot.clone()));
            }
        }
        // ties broken by descending coefficient vectors, so the simple roots
        // start the list in Bourbaki order
        pos.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
        });
        if 2 * pos.len() != seen.len() {
            return Err(Error::math("root system is not symmetric under negation"));
        }

        let np = pos.len();
        let mut roots = Vec::with_capacity(2 * np);
        let mut coroots = Vec::with_capacity(2 * np);
        let mut simple_coords = Vec::with_capacity(2 * np);
        for (c, r, cr) in &pos {
            roots.push(r.clone());
            coroots.push(cr.clone());
            simple_coords.push(c.clone());
        }
        for (c, r, cr) in &pos {
            roots.push(r.iter().map(|x| -x).collect());
            coroots.push(cr.iter().map(|x| -x).collect());
            simple_coords.push(c.iter().map(|x| -x).collect());
        }
        let index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let simple = simple_roots
            .iter()
            .map(|r| *index.get(r).expect("simple root present"))
            .collect();
        Ok(RootDatum {
            series,
            rank,
            dim,
            isogeny,
            label,
            roots,
            coroots,
            simple,
            simple_coords,
            index,
        })
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    /// Index of -root(i).
    pub fn neg_index(&self, i: usize) -> usize {
        let np = self.num_positive();
        if i < np {
            i + np
        } else {
            i - np
        }
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Coefficients of root i in the simple-root basis.
    pub fn simple_coords(&self, i: usize) -> &[i64] {
        &self.simple_coords[i]
    }

    pub fn height(&self, i: usize) -> i64 {
        self.simple_coords[i].iter().sum()
    }

    /// Pairing of root i with coroot j.
    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        dot(&self.roots[i], &self.coroots[j])
    }

    /// Pairing of an arbitrary M-vector with coroot j.
    pub fn pair_with_coroot(&self, x: &[i64], j: usize) -> i64 {
        dot(x, &self.coroots[j])
    }

    /// Cartan matrix of the stored simple system.
    pub fn cartan(&self) -> IntMat {
        let n = self.simple.len();
        let mut m = IntMat::zero(n, n);
        for (a, &i) in self.simple.iter().enumerate() {
            for (b, &j) in self.simple.iter().enumerate() {
                m[(a, b)] = self.pairing(i, j);
            }
        }
        m
    }

    /// Canonical W-invariant symmetric form on M: sum over all coroots of the
    /// products of pairings.  Only length ratios are meaningful.
    pub fn invariant_form(&self, x: &[i64], y: &[i64]) -> i64 {
        self.coroots
            .iter()
            .map(|co| dot(x, co) * dot(y, co))
            .sum()
    }

    /// Squared length of root i under `invariant_form`.
    pub fn root_len2(&self, i: usize) -> i64 {
        self.invariant_form(&self.roots[i], &self.roots[i])
    }

    /// Matrix of the simple reflection s_i acting on M (column convention).
    pub fn simple_reflection_matrix(&self, i: usize) -> IntMat {
        let ri = self.simple[i];
        let alpha = &self.roots[ri];
        let alpha_co = &self.coroots[ri];
        let mut m = IntMat::identity(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                m[(r, c)] -= alpha[r] * alpha_co[c];
            }
        }
        m
    }

    /// Reflection in root j applied to root i; returns the index of the image.
    pub fn reflect_root(&self, j: usize, i: usize) -> usize {
        let k = dot(&self.roots[i], &self.coroots[j]);
        let img: Vec<i64> = self.roots[i]
            .iter()
            .zip(&self.roots[j])
            .map(|(b, a)| b - k * a)
            .collect();
        self.index[&img]
    }

    /// The dual datum: roots and coroots swap, the isogeny tag flips.
    pub fn dual(&self) -> RootDatum {
        let simple_roots: Vec<Vec<i64>> =
            self.simple.iter().map(|&i| self.coroots[i].clone()).collect();
        let simple_coroots: Vec<Vec<i64>> =
            self.simple.iter().map(|&i| self.roots[i].clone()).collect();
        let isogeny = match self.isogeny {
            Isogeny::Sc => Isogeny::Ad,
            Isogeny::Ad => Isogeny::Sc,
        };
        let series = self.series.dual();
        let label = format!("{}{}-{}", series.letter(), self.rank, isogeny.tag());
        Self::from_simple_system(
            series,
            self.rank,
            self.dim,
            isogeny,
            label,
            &simple_roots,
            &simple_coroots,
        )
        .expect("dual of a valid datum is valid")
    }

    /// Levi subdatum: the roots supported on the simple subset I.  The lattice
    /// (and coordinate dimension) stays that of the parent.
    pub fn levi(&self, subset: &[usize]) -> Result<RootDatum, Error> {
        let mut seen = std::collections::HashSet::new();
        for &i in subset {
            if i >= self.rank || !seen.insert(i) {
                return Err(Error::usage(format!(
                    "Levi subset entry {i} is out of range or repeated"
                )));
            }
        }
        let mut subset = subset.to_vec();
        subset.sort();
        let simple_roots: Vec<Vec<i64>> = subset
            .iter()
            .map(|&i| self.roots[self.simple[i]].clone())
            .collect();
        let simple_coroots: Vec<Vec<i64>> = subset
            .iter()
            .map(|&i| self.coroots[self.simple[i]].clone())
            .collect();
        let label = format!(
            "{}-levi{:?}",
            self.label,
            subset.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("")
        );
        let rd = Self::from_simple_system(
            self.series,
            subset.len(),
            self.dim,
            self.isogeny,
            label,
            &simple_roots,
            &simple_coroots,
        )?;
        // every Levi root must be a root of the parent
        for r in &rd.roots {
            if self.root_index(r).is_none() {
                return Err(Error::math("Levi enumeration left the parent root system"));
            }
        }
        Ok(rd)
    }

    /// Invariant factors of M_ / (lattice generated by the coroots); their
    /// product is the order of the center of the associated group.
    pub fn center_invariants(&self) -> Vec<i64> {
        let n = self.simple.len();
        let mut cols = IntMat::zero(self.dim, n);
        for (j, &si) in self.simple.iter().enumerate() {
            for i in 0..self.dim {
                cols[(i, j)] = self.coroots[si][i];
            }
        }
        let snf = smith_normal_form(&cols);
        snf.into_iter().filter(|&d| d > 1).collect()
    }

    pub fn center_order(&self) -> i64 {
        self.center_invariants().iter().product()
    }

    /// Invariant factors of M / (lattice generated by the roots).
    pub fn root_index_invariants(&self) -> Vec<i64> {
        let n = self.simple.len();
        let mut cols = IntMat::zero(self.dim, n);
        for (j, &si) in self.simple.iter().enumerate() {
            for i in 0..self.dim {
                cols[(i, j)] = self.roots[si][i];
            }
        }
        let snf = smith_normal_form(&cols);
        snf.into_iter().filter(|&d| d > 1).collect()
    }

    pub fn degrees(&self) -> Result<Vec<u64>, Error> {
        degrees(self.series, self.rank)
    }

    pub fn weyl_order(&self) -> Result<u64, Error> {
        weyl_order(self.series, self.rank)
    }

    pub fn coxeter_number(&self) -> Result<u64, Error> {
        coxeter_number(self.series, self.rank)
    }

    pub fn very_good(&self, l: u64) -> bool {
        very_good(self.series, self.rank, l)
    }

    /// Dimension of the associated Lie algebra (Cartan of the full coordinate
    /// lattice plus one line per root); for Levi subdata the Cartan keeps the
    /// parent dimension.
    pub fn lie_dim(&self) -> usize {
        self.dim + self.roots.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(series: Series, rank: usize) -> RootDatum {
        RootDatum::new(series, rank, Isogeny::Sc).unwrap()
    }

    #[test]
    fn root_counts_match_closed_forms() {
        let cases: Vec<(Series, usize, usize)> = vec![
            (Series::A, 1, 2),
            (Series::A, 2, 6),
            (Series::A, 3, 12),
            (Series::B, 2, 8),
            (Series::B, 3, 18),
            (Series::C, 3, 18),
            (Series::D, 4, 24),
            (Series::G, 2, 12),
            (Series::F, 4, 48),
            (Series::E, 6, 72),
        ];
        for (s, n, count) in cases {
            let rd = sc(s, n);
            assert_eq!(rd.num_roots(), count, "{}", rd.label);
            assert_eq!(rd.num_roots(), n * rd.coxeter_number().unwrap() as usize);
        }
    }

    #[test]
    fn coroot_of_root_pairs_to_two() {
        for (s, n) in [(Series::B, 3), (Series::G, 2), (Series::F, 4), (Series::D, 4)] {
            let rd = sc(s, n);
            for i in 0..rd.num_roots() {
                assert_eq!(rd.pairing(i, i), 2);
                // negation pairing
                assert_eq!(rd.neg_index(rd.neg_index(i)), i);
                assert_eq!(rd.pairing(i, rd.neg_index(i)), -2);
            }
        }
    }

    #[test]
    fn length_ratios_by_series() {
        use std::collections::BTreeSet;
        let ratios = |rd: &RootDatum| -> Vec<i64> {
            let set: BTreeSet<i64> = (0..rd.num_roots()).map(|i| rd.root_len2(i)).collect();
            let min = *set.iter().next().unwrap();
            set.iter().map(|l| l / min).collect()
        };
        assert_eq!(ratios(&sc(Series::A, 3)), vec![1]);
        assert_eq!(ratios(&sc(Series::D, 4)), vec![1]);
        assert_eq!(ratios(&sc(Series::B, 2)), vec![1, 2]);
        assert_eq!(ratios(&sc(Series::C, 3)), vec![1, 2]);
        assert_eq!(ratios(&sc(Series::F, 4)), vec![1, 2]);
        assert_eq!(ratios(&sc(Series::G, 2)), vec![1, 3]);
    }

    #[test]
    fn center_orders() {
        assert_eq!(sc(Series::A, 1).center_order(), 2);
        assert_eq!(sc(Series::A, 2).center_order(), 3);
        assert_eq!(sc(Series::A, 4).center_order(), 5);
        assert_eq!(sc(Series::B, 3).center_order(), 2);
        assert_eq!(sc(Series::C, 3).center_order(), 2);
        assert_eq!(sc(Series::E, 6).center_order(), 3);
        assert_eq!(sc(Series::E, 8).center_order(), 1);
        assert_eq!(sc(Series::F, 4).center_order(), 1);
        assert_eq!(sc(Series::G, 2).center_order(), 1);
        // D4 center is 2x2, D5 center is cyclic of order 4
        assert_eq!(sc(Series::D, 4).center_invariants(), vec![2, 2]);
        assert_eq!(sc(Series::D, 5).center_invariants(), vec![4]);
        // adjoint data have trivial center
        for (s, n) in [(Series::A, 2), (Series::B, 2), (Series::D, 4)] {
            let ad = RootDatum::new(s, n, Isogeny::Ad).unwrap();
            assert_eq!(ad.center_order(), 1, "{}", ad.label);
            assert_eq!(ad.root_index_invariants().iter().product::<i64>(), {
                let scd = sc(s, n);
                scd.center_order()
            });
        }
    }

    #[test]
    fn dual_swaps_b_and_c() {
        let b3 = sc(Series::B, 3);
        let d = b3.dual();
        assert_eq!(d.series, Series::C);
        assert_eq!(d.isogeny, Isogeny::Ad);
        assert_eq!(d.num_roots(), b3.num_roots());
        // double dual returns to the original datum
        let dd = d.dual();
        assert_eq!(dd.series, Series::B);
        assert_eq!(dd.isogeny, Isogeny::Sc);
        assert_eq!(dd.roots, b3.roots);
        assert_eq!(dd.coroots, b3.coroots);
    }

    #[test]
    fn dual_cartan_is_transpose() {
        for (s, n) in [(Series::B, 3), (Series::G, 2), (Series::F, 4)] {
            let rd = sc(s, n);
            let c = rd.cartan();
            let cd = rd.dual().cartan();
            assert_eq!(cd, c.transpose(), "{}", rd.label);
        }
    }

    #[test]
    fn weyl_orders_match_degree_products() {
        assert_eq!(weyl_order(Series::A, 3).unwrap(), 24);
        assert_eq!(weyl_order(Series::B, 3).unwrap(), 48);
        assert_eq!(weyl_order(Series::D, 4).unwrap(), 192);
        assert_eq!(weyl_order(Series::G, 2).unwrap(), 12);
        assert_eq!(weyl_order(Series::F, 4).unwrap(), 1152);
        assert_eq!(weyl_order(Series::E, 6).unwrap(), 51840);
        assert_eq!(weyl_order(Series::E, 8).unwrap(), 696_729_600);
    }

    #[test]
    fn levi_of_a3_is_a1_x_a1() {
        let a3 = sc(Series::A, 3);
        let levi = a3.levi(&[0, 2]).unwrap();
        assert_eq!(levi.num_roots(), 4);
        assert_eq!(levi.rank, 2);
        assert_eq!(levi.dim, 3);
        // middle node gives a connected A2
        let a2 = a3.levi(&[0, 1]).unwrap();
        assert_eq!(a2.num_roots(), 6);
        // out-of-range subset is rejected
        assert!(a3.levi(&[0, 7]).is_err());
    }

    #[test]
    fn b3_levi_keeps_short_roots() {
        let b3 = sc(Series::B, 3);
        // nodes 1,2 span a B2 with a short root
        let levi = b3.levi(&[1, 2]).unwrap();
        assert_eq!(levi.num_roots(), 8);
        let lens: std::collections::BTreeSet<i64> =
            (0..levi.num_roots()).map(|i| levi.root_len2(i)).collect();
        assert_eq!(lens.len(), 2);
    }

    #[test]
    fn simple_reflection_matrices_are_involutions() {
        for (s, n) in [(Series::A, 2), (Series::B, 3), (Series::G, 2)] {
            let rd = sc(s, n);
            for i in 0..rd.rank {
                let m = rd.simple_reflection_matrix(i);
                assert!(m.mul(&m).is_identity());
                // permutes the root set
                for r in 0..rd.num_roots() {
                    let img = m.apply(&rd.roots[r]);
                    assert!(rd.root_index(&img).is_some());
                }
            }
        }
    }

    #[test]
    fn highest_root_is_last_positive() {
        let rd = sc(Series::G, 2);
        let np = rd.num_positive();
        // G2 highest root is 3a1 + 2a2
        assert_eq!(rd.simple_coords(np - 1), &[3, 2]);
        let e6 = sc(Series::E, 6);
        assert_eq!(e6.height(e6.num_positive() - 1), e6.coxeter_number().unwrap() as i64 - 1);
    }

    #[test]
    fn parse_labels() {
        assert_eq!(parse_label("A2").unwrap(), (Series::A, 2));
        assert_eq!(parse_label("e8").unwrap(), (Series::E, 8));
        assert!(parse_label("H3").is_err());
        assert!(parse_label("A").is_err());
    }

    #[test]
    fn very_good_characteristics() {
        // spot checks of the defining table
        assert!(!very_good(Series::A, 2, 3));
        assert!(very_good(Series::A, 2, 2));
        assert!(!very_good(Series::A, 3, 2));
        assert!(!very_good(Series::B, 2, 2));
        assert!(very_good(Series::B, 2, 3));
        assert!(!very_good(Series::G, 2, 3));
        assert!(very_good(Series::G, 2, 5));
        assert!(!very_good(Series::E, 8, 5));
        assert!(very_good(Series::E, 8, 7));
        assert!(very_good(Series::E, 7, 5));
        // a prime not dividing |W| is always very good
        let all: &[(Series, usize)] = &[
            (Series::A, 1),
            (Series::A, 4),
            (Series::B, 3),
            (Series::C, 3),
            (Series::D, 4),
            (Series::E, 6),
            (Series::E, 7),
            (Series::E, 8),
            (Series::F, 4),
            (Series::G, 2),
        ];
        for &(s, r) in all {
            let w = weyl_order(s, r).unwrap();
            for l in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
                if w % l != 0 {
                    assert!(very_good(s, r, l), "{s:?}{r} at {l}");
                }
            }
        }
    }
}
