//! Trace tables of matrix representations of small groups.
//!
//! A representation of a finite group into GL_n assigns to every word in
//! group elements the fundamental traces (exterior-power traces) of the
//! corresponding matrix product.  This system of functions satisfies two
//! compatibility axioms — pullback along maps of index sets and collapse of
//! the last two slots under multiplication — and, over a field whose
//! characteristic does not divide the group order, the single-slot table
//! already determines the representation up to conjugacy.  The experiments
//! here verify both directions constructively: representations are
//! enumerated, bucketed by their tables, and every pair in a bucket is
//! linked by an explicit invertible intertwiner.  The witness search must
//! run over GL_n, not SL_n: a pair of quaternion representations below is
//! related only by matrices whose determinant is a fixed non-square.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::gf::{Elt, FMat, Fq};
use crate::finitegrp::FiniteGroup;

pub const POOL_CAP: usize = 200_000;

/// A finite group given by its multiplication table.  Elements are indexed
/// in breadth-first discovery order from the chosen generators, and the
/// parent tree records one reduced expression per element.
#[derive(Debug, Clone)]
pub struct SmallGroup {
    pub name: String,
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub gens: Vec<usize>,
    /// (parent element, generator index); the identity points to itself
    pub parent: Vec<(usize, usize)>,
    /// breadth-first ordering of the element indices
    pub bfs: Vec<usize>,
}

impl SmallGroup {
    fn finish(name: &str, mul: Vec<Vec<usize>>, gens: Vec<usize>) -> SmallGroup {
        let n = mul.len();
        // identity and associativity; the table must really be a group
        for x in 0..n {
            assert_eq!(mul[0][x], x);
            assert_eq!(mul[x][0], x);
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    assert_eq!(mul[mul[x][y]][z], mul[x][mul[y][z]]);
                }
            }
        }
        let mut inv = vec![usize::MAX; n];
        for x in 0..n {
            inv[x] = (0..n).find(|&y| mul[x][y] == 0).expect("group inverse");
        }
        // BFS parent tree from the identity
        let mut parent = vec![(usize::MAX, usize::MAX); n];
        let mut bfs = vec![0usize];
        parent[0] = (0, usize::MAX);
        let mut head = 0;
        while head < bfs.len() {
            let x = bfs[head];
            head += 1;
            for (gi, &g) in gens.iter().enumerate() {
                let y = mul[x][g];
                if parent[y].0 == usize::MAX {
                    parent[y] = (x, gi);
                    bfs.push(y);
                }
            }
        }
        assert_eq!(bfs.len(), n, "generators must generate");
        SmallGroup {
            name: name.to_string(),
            order: n,
            mul,
            inv,
            gens,
            parent,
            bfs,
        }
    }

    fn from_perm_gens(name: &str, degree: usize, gen_perms: &[Vec<usize>]) -> SmallGroup {
        let id: Vec<usize> = (0..degree).collect();
        let mut elements = vec![id];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0usize);
        let mut head = 0;
        while head < elements.len() {
            let cur = elements[head].clone();
            head += 1;
            for g in gen_perms {
                let prod: Vec<usize> = (0..degree).map(|i| g[cur[i]]).collect();
                if !index.contains_key(&prod) {
                    index.insert(prod.clone(), elements.len());
                    elements.push(prod);
                }
            }
        }
        let n = elements.len();
        let mut mul = vec![vec![0usize; n]; n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let prod: Vec<usize> = (0..degree).map(|x| b[a[x]]).collect();
                mul[i][j] = index[&prod];
            }
        }
        let gens: Vec<usize> = gen_perms.iter().map(|g| index[g]).collect();
        SmallGroup::finish(name, mul, gens)
    }

    fn from_matrix_gens(name: &str, f: &Fq, gens: &[FMat]) -> SmallGroup {
        let grp = FiniteGroup::generate(f, gens, POOL_CAP).expect("small matrix group");
        let n = grp.len();
        let mut mul = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in 0..n {
                mul[i][j] = grp.mul(i, j);
            }
        }
        SmallGroup::finish(name, mul, grp.gens.clone())
    }

    pub fn cyclic(n: usize) -> SmallGroup {
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        SmallGroup::from_perm_gens(&format!("C{n}"), n, &[rot])
    }

    pub fn klein() -> SmallGroup {
        SmallGroup::from_perm_gens("V4", 4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]])
    }

    pub fn s3() -> SmallGroup {
        SmallGroup::from_perm_gens("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]])
    }

    pub fn a4() -> SmallGroup {
        SmallGroup::from_perm_gens("A4", 4, &[vec![1, 0, 3, 2], vec![1, 2, 0, 3]])
    }

    pub fn q8() -> SmallGroup {
        let f = Fq::new(3, 1).unwrap();
        let i = FMat::from_rows(&[vec![0, 2], vec![1, 0]]);
        let j = FMat::from_rows(&[vec![1, 1], vec![1, 2]]);
        SmallGroup::from_matrix_gens("Q8", &f, &[i, j])
    }

    pub fn sl2f3() -> SmallGroup {
        let f = Fq::new(3, 1).unwrap();
        let s = FMat::from_rows(&[vec![0, 2], vec![1, 0]]);
        let t = FMat::from_rows(&[vec![1, 1], vec![0, 1]]);
        SmallGroup::from_matrix_gens("SL2(F3)", &f, &[s, t])
    }

    /// Order 4m, generated by a of order 2m and b with b^2 = a^m and
    /// b a b^-1 = a^-1.  Elements are the normal forms a^i b^e.
    pub fn dicyclic(m: usize) -> SmallGroup {
        assert!(m >= 2);
        let two_m = 2 * m;
        let n = 4 * m;
        let idx = |i: usize, e: usize| e * two_m + i;
        let mut mul = vec![vec![0usize; n]; n];
        for i in 0..two_m {
            for e in 0..2 {
                for j in 0..two_m {
                    for d in 0..2 {
                        let (k, c) = if e == 0 {
                            (i + j, d)
                        } else if d == 0 {
                            (i + two_m - j % two_m, 1)
                        } else {
                            (i + two_m - j % two_m + m, 0)
                        };
                        mul[idx(i, e)][idx(j, d)] = idx(k % two_m, c);
                    }
                }
            }
        }
        SmallGroup::finish(&format!("Dic{m}"), mul, vec![idx(1, 0), idx(0, 1)])
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul[y][x];
            k += 1;
        }
        k
    }

    /// the groups of order at most 24 and coprime to 13 used in the
    /// bucketing experiments
    pub fn battery() -> Vec<SmallGroup> {
        let mut out: Vec<SmallGroup> = (1..=12).map(SmallGroup::cyclic).collect();
        out.push(SmallGroup::cyclic(14));
        out.push(SmallGroup::klein());
        out.push(SmallGroup::s3());
        out.push(SmallGroup::q8());
        out.push(SmallGroup::dicyclic(3));
        out.push(SmallGroup::dicyclic(6));
        out.push(SmallGroup::a4());
        out.push(SmallGroup::sl2f3());
        out
    }
}

/// A homomorphism into GL_n recorded on every group element.
#[derive(Debug, Clone)]
pub struct Hom {
    pub images: Vec<FMat>,
}

/// Value of a word table: slots index into the tuple of group elements, and
/// the value is the k-th exterior trace of the image of the product.
pub fn word_value(f: &Fq, hom: &Hom, word: &[usize], tuple: &[usize], k: usize) -> Elt {
    let n = hom.images[0].nrows;
    let mut m = FMat::identity(n);
    for &slot in word {
        m = m.mul(f, &hom.images[tuple[slot]]);
    }
    m.exterior_trace(f, k)
}

/// Single-slot table: the fundamental traces of every element's image.
pub fn fundamental_table(f: &Fq, hom: &Hom) -> Vec<Vec<Elt>> {
    let n = hom.images[0].nrows;
    (0..hom.images.len())
        .map(|g| (1..=n).map(|k| word_value(f, hom, &[0], &[g], k)).collect())
        .collect()
}

/// Pullback axiom: relabeling slots through any map commutes with
/// evaluation.
pub fn check_pullback_axiom(
    f: &Fq,
    g: &SmallGroup,
    hom: &Hom,
    samples: usize,
    seed: u64,
) -> Result<(), Error> {
    let n = hom.images[0].nrows;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let m = rng.gen_range(1..=3usize);
        let m2 = rng.gen_range(1..=3usize);
        let word: Vec<usize> = (0..rng.gen_range(1..=4usize))
            .map(|_| rng.gen_range(0..m))
            .collect();
        let zeta: Vec<usize> = (0..m).map(|_| rng.gen_range(0..m2)).collect();
        let tuple2: Vec<usize> = (0..m2).map(|_| rng.gen_range(0..g.order)).collect();
        let pulled: Vec<usize> = zeta.iter().map(|&z| tuple2[z]).collect();
        let relabeled: Vec<usize> = word.iter().map(|&s| zeta[s]).collect();
        for k in 1..=n {
            let lhs = word_value(f, hom, &relabeled, &tuple2, k);
            let rhs = word_value(f, hom, &word, &pulled, k);
            if lhs != rhs {
                return Err(Error::math("pullback axiom fails"));
            }
        }
    }
    Ok(())
}

/// Collapse axiom: splitting the last slot into a product of two fresh
/// slots does not change any value.
pub fn check_collapse_axiom(
    f: &Fq,
    g: &SmallGroup,
    hom: &Hom,
    samples: usize,
    seed: u64,
) -> Result<(), Error> {
    let n = hom.images[0].nrows;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let m = rng.gen_range(1..=3usize);
        let word: Vec<usize> = (0..rng.gen_range(1..=4usize))
            .map(|_| rng.gen_range(0..m))
            .collect();
        let tuple: Vec<usize> = (0..m + 1).map(|_| rng.gen_range(0..g.order)).collect();
        // replace every occurrence of the last slot by the two-slot product
        let mut split = Vec::new();
        for &s in &word {
            if s == m - 1 {
                split.push(m - 1);
                split.push(m);
            } else {
                split.push(s);
            }
        }
        let mut collapsed = tuple[..m].to_vec();
        collapsed[m - 1] = g.mul[tuple[m - 1]][tuple[m]];
        for k in 1..=n {
            let lhs = word_value(f, hom, &split, &tuple, k);
            let rhs = word_value(f, hom, &word, &collapsed, k);
            if lhs != rhs {
                return Err(Error::math("collapse axiom fails"));
            }
        }
    }
    Ok(())
}

/// All elements of SL_n over the field, by closing the elementary
/// transvections; fails if the group exceeds the cap.
pub fn special_linear_pool(f: &Fq, n: usize, cap: usize) -> Result<FiniteGroup, Error> {
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = FMat::identity(n);
                m[(i, j)] = 1;
                gens.push(m);
            }
        }
    }
    FiniteGroup::generate(f, &gens, cap)
}

/// Every homomorphism from the group into SL_n over the field, found by
/// assigning generator images from the pool and propagating along the
/// parent tree.
pub fn enumerate_homs(
    g: &SmallGroup,
    f: &Fq,
    pool: &FiniteGroup,
) -> Result<Vec<Hom>, Error> {
    let n = pool.elements[0].nrows;
    let pool_orders: Vec<u64> = (0..pool.len()).map(|i| pool.order_of(i)).collect();
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    for &gen in &g.gens {
        let o = g.element_order(gen) as u64;
        candidates.push(
            (0..pool.len())
                .filter(|&i| o % pool_orders[i] == 0)
                .collect(),
        );
    }
    let k = g.gens.len();
    if k > 2 {
        return Err(Error::pre("hom enumeration supports at most two generators"));
    }

    let mut homs = Vec::new();
    let mut try_assignment = |gen_imgs: &[&FMat]| {
        // propagate along the BFS tree, then check the generator products
        let mut images = vec![FMat::identity(n); g.order];
        for &x in &g.bfs[1..] {
            let (p, gi) = g.parent[x];
            images[x] = images[p].mul(f, gen_imgs[gi]);
        }
        for x in 0..g.order {
            for (gi, &s) in g.gens.iter().enumerate() {
                if images[g.mul[x][s]] != images[x].mul(f, gen_imgs[gi]) {
                    return;
                }
            }
        }
        homs.push(Hom { images });
    };

    if k == 1 {
        for &a in &candidates[0] {
            try_assignment(&[&pool.elements[a]]);
        }
    } else {
        // quick kill: the image of the product must have compatible order
        let prod = g.mul[g.gens[0]][g.gens[1]];
        let prod_order = g.element_order(prod) as u64;
        for &a in &candidates[0] {
            for &b in &candidates[1] {
                let ab = pool.mul(a, b);
                if prod_order % pool_orders[ab] != 0 {
                    continue;
                }
                try_assignment(&[&pool.elements[a], &pool.elements[b]]);
            }
        }
    }
    Ok(homs)
}

/// Solutions g of g r1(s) = r2(s) g over the generators, as a basis of the
/// space of intertwiners.
pub fn intertwiner_space(f: &Fq, r1: &[&FMat], r2: &[&FMat]) -> Vec<FMat> {
    let n = r1[0].nrows;
    let mut rows = Vec::new();
    for (m1, m2) in r1.iter().zip(r2) {
        for i in 0..n {
            for j in 0..n {
                // coefficient of g_{uv} in (g m1 - m2 g)_{ij}
                let mut row = vec![0u64; n * n];
                for kk in 0..n {
                    row[i * n + kk] = f.add(row[i * n + kk], m1[(kk, j)]);
                    row[kk * n + j] = f.sub(row[kk * n + j], m2[(i, kk)]);
                }
                rows.push(row);
            }
        }
    }
    let mat = FMat::from_rows(&rows);
    mat.nullspace(f)
        .into_iter()
        .map(|v| {
            let mut m = FMat::zero(n, n);
            for u in 0..n {
                for v2 in 0..n {
                    m[(u, v2)] = v[u * n + v2];
                }
            }
            m
        })
        .collect()
}

/// An invertible element of the span of the given matrices, if one exists.
/// Exhaustive over the span when small, otherwise seeded random search.
pub fn invertible_in_span(f: &Fq, span: &[FMat], seed: u64) -> Option<FMat> {
    if span.is_empty() {
        return None;
    }
    let d = span.len();
    let n = span[0].nrows;
    let combine = |coeffs: &[Elt]| {
        let mut m = FMat::zero(n, n);
        for (c, b) in coeffs.iter().zip(span) {
            m = m.add(f, &b.scale(f, *c));
        }
        m
    };
    let total = (f.q as u128).checked_pow(d as u32);
    if let Some(total) = total.filter(|&t| t <= 60_000) {
        for i in 1..total {
            let mut coeffs = vec![0u64; d];
            let mut rest = i;
            for c in coeffs.iter_mut() {
                *c = (rest % f.q as u128) as u64;
                rest /= f.q as u128;
            }
            let m = combine(&coeffs);
            if m.inverse(f).is_some() {
                return Some(m);
            }
        }
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..2000 {
        let coeffs: Vec<Elt> = (0..d).map(|_| rng.gen_range(0..f.q)).collect();
        let m = combine(&coeffs);
        if m.inverse(f).is_some() {
            return Some(m);
        }
    }
    None
}

/// Invertible g with g r1(x) g^-1 = r2(x) for all x, searched through the
/// intertwiner space of the generator images.
pub fn conjugacy_witness(
    f: &Fq,
    g: &SmallGroup,
    h1: &Hom,
    h2: &Hom,
    seed: u64,
) -> Option<FMat> {
    let r1: Vec<&FMat> = g.gens.iter().map(|&s| &h1.images[s]).collect();
    let r2: Vec<&FMat> = g.gens.iter().map(|&s| &h2.images[s]).collect();
    let span = intertwiner_space(f, &r1, &r2);
    let w = invertible_in_span(f, &span, seed)?;
    for (m1, m2) in r1.iter().zip(&r2) {
        if w.mul(f, m1) != m2.mul(f, &w) {
            return None;
        }
    }
    Some(w)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BucketReport {
    pub group: String,
    pub homs: usize,
    pub buckets: usize,
    /// every same-bucket pair is conjugate by an explicit witness
    pub witnessed: bool,
}

/// Enumerate all homomorphisms into SL_n, bucket them by their single-slot
/// fundamental trace tables, and certify each bucket is one conjugacy
/// class.  Distinct buckets differ in some trace, so they are never
/// conjugate; the content is the converse.
pub fn bucket_experiment(
    g: &SmallGroup,
    f: &Fq,
    pool: &FiniteGroup,
    seed: u64,
) -> Result<BucketReport, Error> {
    let homs = enumerate_homs(g, f, pool)?;
    let mut buckets: BTreeMap<Vec<Elt>, Vec<usize>> = BTreeMap::new();
    for (i, h) in homs.iter().enumerate() {
        let key: Vec<Elt> = fundamental_table(f, h).into_iter().flatten().collect();
        buckets.entry(key).or_default().push(i);
    }
    let mut witnessed = true;
    for members in buckets.values() {
        let rep = members[0];
        for &other in &members[1..] {
            if conjugacy_witness(f, g, &homs[rep], &homs[other], seed).is_none() {
                witnessed = false;
            }
        }
    }
    Ok(BucketReport {
        group: g.name.clone(),
        homs: homs.len(),
        buckets: buckets.len(),
        witnessed,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistReport {
    pub tables_equal: bool,
    pub intertwiner_dim: usize,
    pub witness_det: Elt,
    pub gl_witnesses: usize,
    pub unit_det_witnesses: usize,
}

/// Two quaternion representations over F_13 that share every trace but are
/// conjugate only by matrices of non-square determinant.  This is why
/// witness searches must range over GL_n rather than SL_n.
pub fn quaternion_det_twist(f: &Fq) -> Result<TwistReport, Error> {
    if f.q != 13 {
        return Err(Error::usage("the twist example lives over F_13"));
    }
    let g = SmallGroup::q8();
    let a = FMat::from_rows(&[vec![5, 0], vec![0, 8]]);
    let b = FMat::from_rows(&[vec![0, 12], vec![1, 0]]);
    let build = |ia: &FMat, ib: &FMat| -> Hom {
        let mut images = vec![FMat::identity(2); g.order];
        for &x in &g.bfs[1..] {
            let (p, gi) = g.parent[x];
            let img = if gi == 0 { ia } else { ib };
            images[x] = images[p].mul(f, img);
        }
        Hom { images }
    };
    let h1 = build(&a, &b);
    let h2 = build(&b, &a);
    // both really are homomorphisms
    for h in [&h1, &h2] {
        for x in 0..g.order {
            for y in 0..g.order {
                if h.images[g.mul[x][y]] != h.images[x].mul(f, &h.images[y]) {
                    return Err(Error::math("not a homomorphism"));
                }
            }
        }
    }
    let tables_equal = fundamental_table(f, &h1) == fundamental_table(f, &h2);

    let r1: Vec<&FMat> = g.gens.iter().map(|&s| &h1.images[s]).collect();
    let r2: Vec<&FMat> = g.gens.iter().map(|&s| &h2.images[s]).collect();
    let span = intertwiner_space(f, &r1, &r2);
    let witness = invertible_in_span(f, &span, 1).ok_or_else(|| Error::math("no witness"))?;
    let witness_det = witness.det(f);

    // exhaustive cross-check over all of GL_2
    let mut gl_gens = vec![
        FMat::from_rows(&[vec![1, 1], vec![0, 1]]),
        FMat::from_rows(&[vec![0, 12], vec![1, 0]]),
    ];
    let mut d = FMat::identity(2);
    d[(0, 0)] = f.generator();
    gl_gens.push(d);
    let gl2 = FiniteGroup::generate(f, &gl_gens, POOL_CAP)?;
    let mut gl_witnesses = 0usize;
    let mut unit_det = 0usize;
    for w in &gl2.elements {
        if r1.iter().zip(&r2).all(|(m1, m2)| w.mul(f, m1) == m2.mul(f, w)) {
            gl_witnesses += 1;
            if w.det(f) == 1 {
                unit_det += 1;
            }
        }
    }
    Ok(TwistReport {
        tables_equal,
        intertwiner_dim: span.len(),
        witness_det,
        gl_witnesses,
        unit_det_witnesses: unit_det,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusReport {
    pub n: usize,
    pub t: u64,
    pub homs: usize,
    pub buckets: usize,
    /// buckets coincide with orbits of coordinate permutations
    pub orbits_match: bool,
    pub witnessed: bool,
}

/// Diagonal representations of a cyclic group of prime order t inside SL_n:
/// exponent tuples summing to zero mod t.  Their trace tables agree exactly
/// when the tuples are permutations of each other, and the permutation
/// matrix is then an explicit witness.
pub fn torus_permutation_conjugacy(f: &Fq, n: usize, t: u64) -> Result<TorusReport, Error> {
    let zeta = f.root_of_unity(t)?;
    let mut tuples = Vec::new();
    let tn = (t as u128).pow(n as u32 - 1);
    for i in 0..tn {
        let mut tup = vec![0u64; n];
        let mut rest = i;
        for c in tup.iter_mut().take(n - 1) {
            *c = (rest % t as u128) as u64;
            rest /= t as u128;
        }
        let partial: u64 = tup[..n - 1].iter().sum();
        tup[n - 1] = (t - partial % t) % t;
        tuples.push(tup);
    }
    let g = SmallGroup::cyclic(t as usize);
    let make_hom = |tup: &[u64]| -> Hom {
        let mut diag = FMat::identity(n);
        for (i, &e) in tup.iter().enumerate() {
            diag[(i, i)] = f.pow(zeta, e);
        }
        let mut images = vec![FMat::identity(n); g.order];
        for &x in &g.bfs[1..] {
            let (p, _) = g.parent[x];
            images[x] = images[p].mul(f, &diag);
        }
        Hom { images }
    };
    let homs: Vec<Hom> = tuples.iter().map(|t| make_hom(t)).collect();

    let mut buckets: BTreeMap<Vec<Elt>, Vec<usize>> = BTreeMap::new();
    for (i, h) in homs.iter().enumerate() {
        let key: Vec<Elt> = fundamental_table(f, h).into_iter().flatten().collect();
        buckets.entry(key).or_default().push(i);
    }
    let sorted = |tup: &[u64]| {
        let mut s = tup.to_vec();
        s.sort();
        s
    };
    let mut orbits_match = true;
    let mut witnessed = true;
    for members in buckets.values() {
        let rep = &tuples[members[0]];
        for &other in members {
            if sorted(&tuples[other]) != sorted(rep) {
                orbits_match = false;
            }
        }
    }
    // distinct buckets must have distinct sorted tuples
    let mut seen = BTreeMap::new();
    for (key, members) in &buckets {
        if seen.insert(sorted(&tuples[members[0]]), key.clone()).is_some() {
            orbits_match = false;
        }
    }
    // permutation-matrix witnesses within each bucket
    for members in buckets.values() {
        let rep = members[0];
        'outer: for &other in &members[1..] {
            let perms = all_permutations(n);
            for p in &perms {
                let mut pm = FMat::zero(n, n);
                for (i, &pi) in p.iter().enumerate() {
                    pm[(pi, i)] = 1;
                }
                let pinv = pm.transpose();
                let conj = pm
                    .mul(f, &homs[rep].images[g.gens[0]])
                    .mul(f, &pinv);
                if conj == homs[other].images[g.gens[0]] {
                    continue 'outer;
                }
            }
            witnessed = false;
        }
    }
    Ok(TorusReport {
        n,
        t,
        homs: homs.len(),
        buckets: buckets.len(),
        orbits_match,
        witnessed,
    })
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    for sub in all_permutations(n - 1) {
        for pos in 0..n {
            let mut p: Vec<usize> = sub.iter().map(|&x| if x >= pos { x + 1 } else { x }).collect();
            p.insert(0, pos);
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f13() -> Fq {
        Fq::new(13, 1).unwrap()
    }

    #[test]
    fn battery_groups_have_expected_orders() {
        let orders: Vec<usize> = SmallGroup::battery().iter().map(|g| g.order).collect();
        assert_eq!(
            orders,
            vec![1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 4, 6, 8, 12, 24, 12, 24]
        );
    }

    #[test]
    fn dicyclic_structure() {
        let g = SmallGroup::dicyclic(3);
        assert_eq!(g.order, 12);
        let (a, b) = (g.gens[0], g.gens[1]);
        assert_eq!(g.element_order(a), 6);
        assert_eq!(g.element_order(b), 4);
        // b^2 = a^3
        let b2 = g.mul[b][b];
        let a3 = g.mul[g.mul[a][a]][a];
        assert_eq!(b2, a3);
        // b a b^-1 = a^-1
        let conj = g.mul[g.mul[b][a]][g.inv[b]];
        assert_eq!(conj, g.inv[a]);
    }

    #[test]
    fn sl2_pool_has_full_order() {
        let f = f13();
        let pool = special_linear_pool(&f, 2, POOL_CAP).unwrap();
        assert_eq!(pool.len(), 2184);
    }

    #[test]
    fn s3_has_two_homs_into_sl2() {
        let f = f13();
        let pool = special_linear_pool(&f, 2, POOL_CAP).unwrap();
        let g = SmallGroup::s3();
        let homs = enumerate_homs(&g, &f, &pool).unwrap();
        // only the trivial and the sign representation: reflections cannot
        // map to a non-central involution of determinant one
        assert_eq!(homs.len(), 2);
        let rep = bucket_experiment(&g, &f, &pool, 3).unwrap();
        assert_eq!(rep.buckets, 2);
        assert!(rep.witnessed);
    }

    #[test]
    fn cyclic_bucket_counts() {
        let f = f13();
        let pool = special_linear_pool(&f, 2, POOL_CAP).unwrap();
        // eigenvalue pairs {a, 1/a} with a^12 = 1: two central, five others
        let rep = bucket_experiment(&SmallGroup::cyclic(12), &f, &pool, 3).unwrap();
        assert_eq!(rep.buckets, 7);
        assert!(rep.witnessed);
        // order 14 forces eigenvalues in the quadratic extension
        let rep = bucket_experiment(&SmallGroup::cyclic(14), &f, &pool, 3).unwrap();
        assert_eq!(rep.buckets, 8);
        assert!(rep.witnessed);
        // order 11 is coprime to |SL_2(F_13)|: only the trivial map
        let rep = bucket_experiment(&SmallGroup::cyclic(11), &f, &pool, 3).unwrap();
        assert_eq!((rep.homs, rep.buckets), (1, 1));
    }

    #[test]
    fn a4_has_no_faithful_two_dimensional_representation() {
        let f = f13();
        let pool = special_linear_pool(&f, 2, POOL_CAP).unwrap();
        let g = SmallGroup::a4();
        let homs = enumerate_homs(&g, &f, &pool).unwrap();
        assert!(!homs.is_empty());
        // the double transposition always dies
        for h in &homs {
            assert!(h.images[g.gens[0]].is_identity());
        }
        let rep = bucket_experiment(&g, &f, &pool, 3).unwrap();
        assert_eq!(rep.buckets, 2);
        assert!(rep.witnessed);
    }

    #[test]
    fn quaternion_buckets() {
        let f = f13();
        let pool = special_linear_pool(&f, 2, POOL_CAP).unwrap();
        let rep = bucket_experiment(&SmallGroup::q8(), &f, &pool, 3).unwrap();
        // four diagonal classes through the abelianization plus the
        // irreducible quaternion representation
        assert_eq!(rep.buckets, 5);
        assert!(rep.witnessed);
    }

    #[test]
    fn quaternion_twist_needs_nonsquare_determinant() {
        let f = f13();
        let rep = quaternion_det_twist(&f).unwrap();
        assert!(rep.tables_equal);
        assert_eq!(rep.intertwiner_dim, 1);
        // 12 scalar multiples of one witness, none of determinant one
        assert_eq!(rep.gl_witnesses, 12);
        assert_eq!(rep.unit_det_witnesses, 0);
        // the witness determinant is a non-square
        let d = rep.witness_det;
        assert!(f.pow(d, (f.q - 1) / 2) != 1);
    }

    #[test]
    fn word_axioms_hold_for_a_faithful_representation() {
        let f = f13();
        let pool = special_linear_pool(&f, 2, POOL_CAP).unwrap();
        let g = SmallGroup::dicyclic(3);
        let homs = enumerate_homs(&g, &f, &pool).unwrap();
        // pick a faithful one
        let h = homs
            .iter()
            .find(|h| {
                let mut seen: Vec<&FMat> = Vec::new();
                h.images.iter().all(|m| {
                    if seen.contains(&m) {
                        false
                    } else {
                        seen.push(m);
                        true
                    }
                })
            })
            .expect("dicyclic embeds in SL2");
        check_pullback_axiom(&f, &g, h, 200, 11).unwrap();
        check_collapse_axiom(&f, &g, h, 200, 12).unwrap();
    }

    #[test]
    fn fundamental_table_matches_exterior_traces() {
        let f = f13();
        let pool = special_linear_pool(&f, 2, POOL_CAP).unwrap();
        let g = SmallGroup::cyclic(6);
        let homs = enumerate_homs(&g, &f, &pool).unwrap();
        let h = &homs[homs.len() / 2];
        let table = fundamental_table(&f, h);
        for (x, row) in table.iter().enumerate() {
            assert_eq!(row[0], h.images[x].trace(&f));
            assert_eq!(row[1], h.images[x].det(&f));
        }
    }

    #[test]
    fn full_battery_buckets_are_conjugacy_classes() {
        let f = f13();
        let pool = special_linear_pool(&f, 2, POOL_CAP).unwrap();
        for g in SmallGroup::battery() {
            let rep = bucket_experiment(&g, &f, &pool, 3).unwrap();
            assert!(rep.witnessed, "{rep:?}");
            assert!(rep.homs >= 1);
        }
        // two groups where the count is easy to get wrong: the dicyclic
        // group of order 24 has three induced and four diagonal classes,
        // and only the quaternionic two-dimensional representation of
        // SL_2(F_3) has trivial determinant
        let dic6 = bucket_experiment(&SmallGroup::dicyclic(6), &f, &pool, 3).unwrap();
        assert_eq!(dic6.buckets, 7);
        let bt = bucket_experiment(&SmallGroup::sl2f3(), &f, &pool, 3).unwrap();
        assert_eq!(bt.buckets, 3);
    }

    #[test]
    fn torus_conjugacy_small_rank() {
        let f = f13();
        let r2 = torus_permutation_conjugacy(&f, 2, 3).unwrap();
        assert_eq!((r2.homs, r2.buckets), (3, 2));
        assert!(r2.orbits_match && r2.witnessed);
        let r3 = torus_permutation_conjugacy(&f, 3, 3).unwrap();
        assert_eq!((r3.homs, r3.buckets), (9, 4));
        assert!(r3.orbits_match && r3.witnessed);
    }
}
