//! Finite matrix groups over small fields: enumeration, group cohomology in
//! degrees 0 and 1, splitting modules into simple summands, and order
//! computations for unipotent lifts modulo l^2.
//!
//! Cohomology is plain cocycle linear algebra and works in any
//! characteristic; only module chopping needs |G| invertible, since it
//! leans on semisimplicity.

use std::collections::HashMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::gf::{Echelon, Elt, FMat, Fq};
use crate::polyfq;

#[derive(Clone)]
pub struct FiniteGroup {
    pub f: Fq,
    pub elements: Vec<FMat>,
    index: HashMap<FMat, usize>,
    pub gens: Vec<usize>,
    /// BFS tree: (parent element, generator index); identity points to itself
    pub parent: Vec<(usize, usize)>,
}

impl FiniteGroup {
    pub fn generate(f: &Fq, gens: &[FMat], cap: usize) -> Result<FiniteGroup, Error> {
        let n = gens
            .first()
            .map(|g| g.nrows)
            .ok_or_else(|| Error::usage("no generators given"))?;
        for g in gens {
            if g.nrows != n || g.ncols != n {
                return Err(Error::usage("generators must be square of equal size"));
            }
        }
        let id = FMat::identity(n);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0usize);
        let mut parent = vec![(0usize, usize::MAX)];
        let mut head = 0;
        while head < elements.len() {
            let cur = elements[head].clone();
            for (j, g) in gens.iter().enumerate() {
                let m = cur.mul(f, g);
                if !index.contains_key(&m) {
                    if elements.len() >= cap {
                        return Err(Error::resource(format!(
                            "group enumeration exceeds cap {cap}"
                        )));
                    }
                    index.insert(m.clone(), elements.len());
                    parent.push((head, j));
                    elements.push(m);
                }
            }
            head += 1;
        }
        let gens = gens
            .iter()
            .map(|g| index[g])
            .collect();
        Ok(FiniteGroup { f: f.clone(), elements, index, gens, parent })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index_of(&self, m: &FMat) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        let m = self.elements[i].mul(&self.f, &self.elements[j]);
        self.index[&m]
    }

    pub fn inv(&self, i: usize) -> usize {
        let m = self.elements[i].inverse(&self.f).expect("group element");
        self.index[&m]
    }

    pub fn order_of(&self, i: usize) -> u64 {
        let mut p = i;
        for k in 1..=self.len() as u64 {
            if self.elements[p].is_identity() {
                return k;
            }
            p = self.mul(p, i);
        }
        unreachable!("order exceeds group size")
    }

    /// Number of elements commuting with every element of the list.
    pub fn centralizer_order(&self, elems: &[usize]) -> usize {
        let f = &self.f;
        self.elements
            .iter()
            .filter(|c| {
                elems.iter().all(|&e| {
                    let g = &self.elements[e];
                    c.mul(f, g) == g.mul(f, c)
                })
            })
            .count()
    }

    pub fn scalar_count(&self) -> usize {
        self.elements.iter().filter(|m| m.is_scalar().is_some()).count()
    }
}

/// A linear action of the group, given on its generators (column convention).
#[derive(Clone)]
pub struct GroupModule {
    pub dim: usize,
    pub gen_action: Vec<FMat>,
}

impl GroupModule {
    pub fn new(gen_action: Vec<FMat>) -> GroupModule {
        let dim = gen_action.first().map(|m| m.nrows).unwrap_or(0);
        for m in &gen_action {
            assert_eq!((m.nrows, m.ncols), (dim, dim));
        }
        GroupModule { dim, gen_action }
    }

    /// Trivial action for a group with `k` generators.
    pub fn trivial(k: usize, dim: usize) -> GroupModule {
        GroupModule { dim, gen_action: vec![FMat::identity(dim); k] }
    }

    fn action(&self, j: usize) -> &FMat {
        &self.gen_action[j]
    }

    /// The contragredient module: inverse transpose on each generator.
    pub fn dual(&self, f: &Fq) -> GroupModule {
        let gen_action = self
            .gen_action
            .iter()
            .map(|m| m.inverse(f).expect("invertible action").transpose())
            .collect();
        GroupModule { dim: self.dim, gen_action }
    }

    /// Action matrices for every group element, in enumeration order.
    pub fn all_actions(&self, group: &FiniteGroup) -> Vec<FMat> {
        let f = &group.f;
        let mut out = Vec::with_capacity(group.len());
        out.push(FMat::identity(self.dim));
        for i in 1..group.len() {
            let (p, j) = group.parent[i];
            let m = out[p].mul(f, self.action(j));
            out.push(m);
        }
        out
    }

    /// Checks the generator matrices satisfy all relations the group does:
    /// the map element -> action is well defined.
    pub fn is_well_defined(&self, group: &FiniteGroup) -> bool {
        let f = &group.f;
        let acts = self.all_actions(group);
        for x in 0..group.len() {
            for (j, &gj) in group.gens.iter().enumerate() {
                let y = group.mul(x, gj);
                if acts[x].mul(f, self.action(j)) != acts[y] {
                    return false;
                }
            }
        }
        true
    }
}

fn check_coprime(group: &FiniteGroup) -> Result<(), Error> {
    if group.len() as u64 % group.f.l == 0 {
        return Err(Error::pre(format!(
            "coefficient characteristic {} divides the group order {}",
            group.f.l,
            group.len()
        )));
    }
    Ok(())
}

/// Basis of the invariant subspace (degree-zero cohomology).
pub fn invariants(group: &FiniteGroup, module: &GroupModule) -> Vec<Vec<Elt>> {
    let f = &group.f;
    let d = module.dim;
    if module.gen_action.is_empty() {
        return (0..d)
            .map(|i| {
                let mut v = vec![0; d];
                v[i] = 1;
                v
            })
            .collect();
    }
    let k = module.gen_action.len();
    let mut stacked = FMat::zero(k * d, d);
    for (g, m) in module.gen_action.iter().enumerate() {
        for r in 0..d {
            for c in 0..d {
                let v = if r == c { f.sub(m[(r, c)], 1) } else { m[(r, c)] };
                stacked[(g * d + r, c)] = v;
            }
        }
    }
    stacked.nullspace(f)
}

pub fn h0(group: &FiniteGroup, module: &GroupModule) -> usize {
    invariants(group, module).len()
}

/// Dimension of first cohomology via the presentation-free Cayley-graph
/// method: a cocycle is determined by its generator values, propagated along
/// the BFS tree; every remaining Cayley edge contributes linear constraints.
/// Valid in any characteristic: H1 = Z1 - B1 with B1 = dim V - H0.
pub fn h1(group: &FiniteGroup, module: &GroupModule) -> Result<usize, Error> {
    let f = &group.f;
    let d = module.dim;
    let k = group.gens.len();
    if d == 0 || k == 0 {
        return Ok(0);
    }
    let acts = module.all_actions(group);

    // coeff[x] is d x (k d): f(x) = coeff[x] . (c_0, ..., c_{k-1})
    let mut coeff: Vec<FMat> = Vec::with_capacity(group.len());
    coeff.push(FMat::zero(d, k * d));
    for x in 1..group.len() {
        let (p, j) = group.parent[x];
        let mut m = coeff[p].clone();
        // f(p g_j) = f(p) + act(p) c_j
        for r in 0..d {
            for c in 0..d {
                let add = acts[p][(r, c)];
                let idx = (r, j * d + c);
                m[idx] = f.add(m[idx], add);
            }
        }
        coeff.push(m);
    }

    let mut ech = Echelon::new(f, k * d);
    for x in 0..group.len() {
        for (j, &gj) in group.gens.iter().enumerate() {
            let y = group.mul(x, gj);
            if group.parent[y] == (x, j) {
                continue; // tree edge: constraint holds by construction
            }
            // f(x g_j) - f(x) - act(x) c_j = 0, one row per coordinate
            for r in 0..d {
                let mut row = vec![0u64; k * d];
                for c in 0..k * d {
                    row[c] = f.sub(coeff[y][(r, c)], coeff[x][(r, c)]);
                }
                for c in 0..d {
                    let idx = j * d + c;
                    row[idx] = f.sub(row[idx], acts[x][(r, c)]);
                }
                ech.insert(row);
            }
        }
    }
    let z1 = k * d - ech.rank();
    let b1 = d - h0(group, module);
    if z1 < b1 {
        return Err(Error::math("cocycle space smaller than coboundaries"));
    }
    Ok(z1 - b1)
}

/// Independent first-cohomology computation: solve for the full function
/// G -> V subject to all |G|^2 cocycle constraints.  Quadratic in |G|; the
/// cap keeps it honest as an oracle rather than a production path.
pub fn h1_naive(group: &FiniteGroup, module: &GroupModule, cap: usize) -> Result<usize, Error> {
    if group.len() > cap {
        return Err(Error::resource(format!(
            "naive cohomology cap {cap} exceeded by group of order {}",
            group.len()
        )));
    }
    let f = &group.f;
    let d = module.dim;
    let n = group.len();
    if d == 0 {
        return Ok(0);
    }
    let acts = module.all_actions(group);
    // unknowns: f(x) for all x; constraints f(xy) = f(x) + act(x) f(y)
    let mut ech = Echelon::new(f, n * d);
    for x in 0..n {
        for y in 0..n {
            let xy = group.mul(x, y);
            for r in 0..d {
                let mut row = vec![0u64; n * d];
                row[xy * d + r] = f.add(row[xy * d + r], 1);
                row[x * d + r] = f.sub(row[x * d + r], 1);
                for c in 0..d {
                    let idx = y * d + c;
                    row[idx] = f.sub(row[idx], acts[x][(r, c)]);
                }
                ech.insert(row);
            }
        }
    }
    let z1 = n * d - ech.rank();
    let b1 = d - h0(group, module);
    if z1 < b1 {
        return Err(Error::math("cocycle space smaller than coboundaries"));
    }
    Ok(z1 - b1)
}

// ---------------------------------------------------------------------------
// splitting a module into simple summands

#[derive(Clone, Debug)]
pub struct Submodule {
    /// basis rows in ambient coordinates
    pub basis: Vec<Vec<Elt>>,
}

impl Submodule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Expresses v in the row space of basis (which must be linearly independent);
/// returns the coefficient vector.
fn express(f: &Fq, basis: &[Vec<Elt>], v: &[Elt]) -> Option<Vec<Elt>> {
    let b = basis.len();
    let d = v.len();
    let mut aug = FMat::zero(d, b + 1);
    for (j, row) in basis.iter().enumerate() {
        for i in 0..d {
            aug[(i, j)] = row[i];
        }
    }
    for i in 0..d {
        aug[(i, b)] = v[i];
    }
    let mut red = aug.clone();
    let (_, pivots) = red.row_reduce(f);
    if pivots.contains(&b) {
        return None; // inconsistent
    }
    let mut out = vec![0; b];
    for (r, &p) in pivots.iter().enumerate() {
        out[p] = red[(r, b)];
    }
    Some(out)
}

/// Generator matrices of the action restricted to the span of basis.
fn restrict(f: &Fq, module: &GroupModule, basis: &[Vec<Elt>]) -> Option<GroupModule> {
    let b = basis.len();
    let mut gen_action = Vec::with_capacity(module.gen_action.len());
    for g in &module.gen_action {
        let mut m = FMat::zero(b, b);
        for (i, row) in basis.iter().enumerate() {
            let img = g.apply(f, row);
            let coeffs = express(f, basis, &img)?;
            for r in 0..b {
                m[(r, i)] = coeffs[r];
            }
        }
        gen_action.push(m);
    }
    Some(GroupModule { dim: b, gen_action })
}

/// Basis of the algebra of matrices commuting with every generator action.
fn endomorphisms(f: &Fq, module: &GroupModule) -> Vec<FMat> {
    let d = module.dim;
    let k = module.gen_action.len();
    let mut sys = FMat::zero(k * d * d, d * d);
    for (g, rho) in module.gen_action.iter().enumerate() {
        // (rho X - X rho)_{rc} = sum_i rho[r,i] X[i,c] - sum_j X[r,j] rho[j,c]
        for r in 0..d {
            for c in 0..d {
                let row = g * d * d + r * d + c;
                for i in 0..d {
                    let idx = (row, i * d + c);
                    sys[idx] = f.add(sys[idx], rho[(r, i)]);
                }
                for j in 0..d {
                    let idx = (row, r * d + j);
                    sys[idx] = f.sub(sys[idx], rho[(j, c)]);
                }
            }
        }
    }
    sys.nullspace(f)
        .into_iter()
        .map(|v| FMat { nrows: d, ncols: d, a: v })
        .collect()
}

fn is_commutative(f: &Fq, mats: &[FMat]) -> bool {
    for (i, a) in mats.iter().enumerate() {
        for b in &mats[i + 1..] {
            if a.mul(f, b) != b.mul(f, a) {
                return false;
            }
        }
    }
    true
}

fn eval_matrix_poly(f: &Fq, p: &[Elt], m: &FMat) -> FMat {
    let d = m.nrows;
    let mut acc = FMat::zero(d, d);
    for &c in p.iter().rev() {
        acc = acc.mul(f, m);
        for i in 0..d {
            acc[(i, i)] = f.add(acc[(i, i)], c);
        }
    }
    acc
}

/// Splits the module into simple submodules (bases in ambient coordinates).
/// Requires the coefficient characteristic coprime to |G|.
pub fn simple_submodules(
    group: &FiniteGroup,
    module: &GroupModule,
    seed: u64,
) -> Result<Vec<Submodule>, Error> {
    check_coprime(group)?;
    let f = &group.f;
    let d = module.dim;
    let ambient: Vec<Vec<Elt>> = (0..d)
        .map(|i| {
            let mut v = vec![0; d];
            v[i] = 1;
            v
        })
        .collect();
    let mut out = Vec::new();
    let mut stack = vec![(ambient, module.clone())];
    while let Some((basis, restr)) = stack.pop() {
        if basis.is_empty() {
            continue;
        }
        let ends = endomorphisms(f, &restr);
        if ends.len() == 1 {
            out.push(Submodule { basis });
            continue;
        }
        let commutative = is_commutative(f, &ends);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ basis.len() as u64);
        let candidates: Vec<FMat> =
            ends.iter().filter(|m| m.is_scalar().is_none()).cloned().collect();
        let mut done = false;
        for attempt in 0..60 {
            let theta = if attempt < candidates.len() {
                candidates[attempt].clone()
            } else {
                // random combination of the endomorphism basis
                let mut m = FMat::zero(restr.dim, restr.dim);
                for e in &ends {
                    let c = rng.gen_range(0..f.q);
                    m = m.add(f, &e.scale(f, c));
                }
                if m.is_scalar().is_some() {
                    continue;
                }
                m
            };
            let mp = polyfq::min_poly(f, &theta);
            let factors = polyfq::factor(f, &mp, seed.wrapping_add(attempt as u64))?;
            if factors.len() >= 2 {
                // split into generalized kernels, in restricted coordinates
                let mut pieces = Vec::new();
                for (g, mult) in factors {
                    let mut gm = eval_matrix_poly(f, &g, &theta);
                    gm = gm.pow(f, mult as u64);
                    let ker = gm.nullspace(f);
                    pieces.push(ker);
                }
                let total: usize = pieces.iter().map(|p| p.len()).sum();
                if total != restr.dim {
                    return Err(Error::math("kernel split does not fill the module"));
                }
                for ker in pieces {
                    // map restricted coordinates back to ambient rows
                    let amb: Vec<Vec<Elt>> = ker
                        .iter()
                        .map(|v| {
                            let mut row = vec![0; d];
                            for (c, bv) in v.iter().zip(&basis) {
                                for i in 0..d {
                                    row[i] = f.add(row[i], f.mul(*c, bv[i]));
                                }
                            }
                            row
                        })
                        .collect();
                    let sub_restr = restrict(f, module, &amb)
                        .ok_or_else(|| Error::math("split piece is not a submodule"))?;
                    stack.push((amb, sub_restr));
                }
                done = true;
                break;
            }
            // irreducible minimal polynomial
            if commutative && mp.len() - 1 == ends.len() {
                // End is a field: the module is simple
                out.push(Submodule { basis });
                done = true;
                break;
            }
            // otherwise keep trying other elements
        }
        if !done {
            return Err(Error::math(
                "failed to split a module with nontrivial endomorphisms",
            ));
        }
    }
    out.sort_by_key(|s| s.dim());
    Ok(out)
}

/// Dimension of the space of module maps from sub1 to sub2 (bases in ambient
/// coordinates of the same parent module).
pub fn hom_dim(
    group: &FiniteGroup,
    module: &GroupModule,
    sub1: &Submodule,
    sub2: &Submodule,
) -> usize {
    let f = &group.f;
    let r1 = restrict(f, module, &sub1.basis).expect("submodule");
    let r2 = restrict(f, module, &sub2.basis).expect("submodule");
    let (a, b) = (r1.dim, r2.dim);
    let k = module.gen_action.len();
    // X: b x a with rho2(g) X = X rho1(g)
    let mut sys = FMat::zero(k * b * a, b * a);
    for g in 0..k {
        let (p2, p1) = (&r2.gen_action[g], &r1.gen_action[g]);
        for r in 0..b {
            for c in 0..a {
                let row = g * b * a + r * a + c;
                for i in 0..b {
                    let idx = (row, i * a + c);
                    sys[idx] = f.add(sys[idx], p2[(r, i)]);
                }
                for j in 0..a {
                    let idx = (row, r * a + j);
                    sys[idx] = f.sub(sys[idx], p1[(j, c)]);
                }
            }
        }
    }
    sys.nullspace(f).len()
}

/// Groups the simple summands into isomorphism classes (indices into the
/// input list).
pub fn isotypic_classes(
    group: &FiniteGroup,
    module: &GroupModule,
    simples: &[Submodule],
) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'next: for (i, s) in simples.iter().enumerate() {
        for class in classes.iter_mut() {
            let rep = &simples[class[0]];
            if rep.dim() == s.dim() && hom_dim(group, module, rep, s) > 0 {
                class.push(i);
                continue 'next;
            }
        }
        classes.push(vec![i]);
    }
    classes
}

// ---------------------------------------------------------------------------
// unipotent order growth modulo l^2

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftReport {
    pub vacuous: bool,
    pub trials: usize,
}

/// Verifies that every sampled determinant-one lift of a nontrivial unipotent
/// gamma to Z/l^2 has order l^2 rather than l (its l-th power stays nontrivial).
/// The identity is reported as vacuous.  Requires l > 2n.
pub fn unipotent_lift_order(
    f: &Fq,
    gamma: &FMat,
    trials: usize,
    seed: u64,
) -> Result<LiftReport, Error> {
    if f.m != 1 {
        return Err(Error::pre("lift test works over prime fields"));
    }
    let n = gamma.nrows;
    if n > 4 {
        return Err(Error::pre("lift test supports matrices up to size 4"));
    }
    let l = f.l;
    if l <= 2 * n as u64 {
        return Err(Error::pre(format!("lift test needs l > 2n, got l={l}, n={n}")));
    }
    if gamma.is_identity() {
        return Ok(LiftReport { vacuous: true, trials: 0 });
    }
    // unipotence check: (gamma - 1)^n = 0
    let mut u = gamma.clone();
    for i in 0..n {
        u[(i, i)] = f.sub(u[(i, i)], 1);
    }
    if !u.pow(f, n as u64).a.iter().all(|&x| x == 0) {
        return Err(Error::pre("element is not unipotent"));
    }

    let m2 = l * l;
    let mul_mod = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] =
                        ((out[i * n + j] as u128 + x as u128 * b[k * n + j] as u128) % m2 as u128)
                            as u64;
                }
            }
        }
        out
    };
    let pow_mod = |a: &[u64], mut e: u64| -> Vec<u64> {
        let mut base = a.to_vec();
        let mut acc = vec![0u64; n * n];
        for i in 0..n {
            acc[i * n + i] = 1;
        }
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &base);
            }
            e >>= 1;
            base = mul_mod(&base, &base);
        }
        acc
    };
    let is_id = |a: &[u64]| -> bool {
        (0..n).all(|i| (0..n).all(|j| a[i * n + j] == if i == j { 1 } else { 0 }))
    };
    let det_mod = |a: &[u64]| -> u64 {
        let mut im = crate::linalg::IntMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                im[(i, j)] = a[i * n + j] as i64;
            }
        }
        im.det_bareiss().rem_euclid(m2 as i64) as u64
    };

    let base: Vec<u64> = gamma.a.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let run = |v: &[u64]| -> Result<(), Error> {
        // candidate lift, then fix the determinant to 1 mod l^2
        let mut lift: Vec<u64> = base
            .iter()
            .zip(v)
            .map(|(&g, &x)| (g + l * (x % l)) % m2)
            .collect();
        let det = det_mod(&lift);
        if det % l != 1 {
            return Err(Error::math("lift lost its determinant residue"));
        }
        // det = 1 + l*delta; scale the first row by (1 - l*delta)
        let delta = det / l % l;
        let fix = (1 + l * ((l - delta) % l)) % m2;
        for j in 0..n {
            lift[j] = ((lift[j] as u128 * fix as u128) % m2 as u128) as u64;
        }
        if det_mod(&lift) != 1 {
            return Err(Error::math("determinant correction failed"));
        }
        let p = pow_mod(&lift, l);
        if is_id(&p) {
            return Err(Error::math(
                "found a determinant-one lift whose l-th power is trivial",
            ));
        }
        // and the full order is l^2
        if !is_id(&pow_mod(&lift, l * l)) {
            return Err(Error::math("lift order does not divide l^2"));
        }
        Ok(())
    };

    run(&vec![0u64; n * n])?;
    for _ in 0..trials {
        let v: Vec<u64> = (0..n * n).map(|_| rng.gen_range(0..l)).collect();
        run(&v)?;
    }
    Ok(LiftReport { vacuous: false, trials: trials + 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2(f: &Fq) -> FiniteGroup {
        let mut e = FMat::identity(2);
        e[(0, 1)] = 1;
        let mut ft = FMat::identity(2);
        ft[(1, 0)] = 1;
        FiniteGroup::generate(f, &[e, ft], 1 << 20).unwrap()
    }

    fn adjoint_module(f: &Fq, group: &FiniteGroup) -> GroupModule {
        // conjugation action on trace-zero 2x2 matrices, basis (h, e, f)
        let basis = [
            FMat::from_rows(&[vec![1, 0], vec![0, f.neg(1)]]),
            FMat::from_rows(&[vec![0, 1], vec![0, 0]]),
            FMat::from_rows(&[vec![0, 0], vec![1, 0]]),
        ];
        let gen_action = group
            .gens
            .iter()
            .map(|&gi| {
                let g = &group.elements[gi];
                let ginv = g.inverse(f).unwrap();
                let mut m = FMat::zero(3, 3);
                for (col, b) in basis.iter().enumerate() {
                    let x = g.mul(f, b).mul(f, &ginv);
                    // coordinates: h-coeff = x[0][0], e = x[0][1], f = x[1][0]
                    m[(0, col)] = x[(0, 0)];
                    m[(1, col)] = x[(0, 1)];
                    m[(2, col)] = x[(1, 0)];
                }
                m
            })
            .collect();
        GroupModule::new(gen_action)
    }

    #[test]
    fn sl2_orders() {
        let f5 = Fq::new(5, 1).unwrap();
        assert_eq!(sl2(&f5).len(), 120);
        let f7 = Fq::new(7, 1).unwrap();
        assert_eq!(sl2(&f7).len(), 336);
        let f13 = Fq::new(13, 1).unwrap();
        assert_eq!(sl2(&f13).len(), 2184);
    }

    #[test]
    fn elementary_matrices_have_order_l() {
        let f = Fq::new(7, 1).unwrap();
        let g = sl2(&f);
        assert_eq!(g.order_of(g.gens[0]), 7);
        // -I is central of order 2
        let minus = FMat::from_rows(&[vec![6, 0], vec![0, 6]]);
        let i = g.index_of(&minus).unwrap();
        assert_eq!(g.order_of(i), 2);
        assert_eq!(g.centralizer_order(&[i]), g.len());
    }

    #[test]
    fn adjoint_cohomology_of_sl2_f7_vanishes() {
        // the modular case: 7 divides |SL2(F7)| = 336, and the adjoint
        // cohomology still vanishes
        let f7 = Fq::new(7, 1).unwrap();
        let g = sl2(&f7);
        let ad = adjoint_module(&f7, &g);
        assert_eq!(h0(&g, &ad), 0);
        assert_eq!(h1(&g, &ad).unwrap(), 0);
    }

    #[test]
    fn modular_cohomology_agrees_with_naive_solver() {
        // unipotent C3 on the standard module over F3: the norm element
        // vanishes, so H1 is one-dimensional
        let f3 = Fq::new(3, 1).unwrap();
        let u = FMat::from_rows(&[vec![1, 1], vec![0, 1]]);
        let g = FiniteGroup::generate(&f3, &[u.clone()], 10).unwrap();
        assert_eq!(g.len(), 3);
        let m = GroupModule::new(vec![u]);
        assert_eq!(h1(&g, &m).unwrap(), 1);
        assert_eq!(h1_naive(&g, &m, 100).unwrap(), 1);
        // trivial coefficients: Hom(C3, F3) is a line
        let t = GroupModule::trivial(1, 1);
        assert_eq!(h1(&g, &t).unwrap(), 1);
        assert_eq!(h1_naive(&g, &t, 100).unwrap(), 1);
    }

    #[test]
    fn cohomology_of_cyclic_group_on_eigenlines() {
        // C_3 acting on F_13 by a cube root of unity: no invariants, h1 = 0
        let f = Fq::new(13, 1).unwrap();
        let z = f.root_of_unity(3).unwrap();
        let gen = FMat::from_rows(&[vec![z]]);
        let g = FiniteGroup::generate(&f, &[gen], 100).unwrap();
        assert_eq!(g.len(), 3);
        let m = GroupModule::new(vec![FMat::from_rows(&[vec![z]])]);
        assert_eq!(h0(&g, &m), 0);
        assert_eq!(h1(&g, &m).unwrap(), 0);
        assert_eq!(h1_naive(&g, &m, 200).unwrap(), 0);
        // trivial action: h0 = 1, h1 = 0 (order coprime to characteristic)
        let t = GroupModule::new(vec![FMat::identity(1)]);
        assert_eq!(h0(&g, &t), 1);
        assert_eq!(h1(&g, &t).unwrap(), 0);
        assert_eq!(h1_naive(&g, &t, 200).unwrap(), 0);
    }

    #[test]
    fn tree_and_naive_solvers_agree_on_s3_permutation_module() {
        // S3 as permutation matrices on F_13^3
        let f = Fq::new(13, 1).unwrap();
        let s = FMat::from_rows(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        let c = FMat::from_rows(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
        let g = FiniteGroup::generate(&f, &[s.clone(), c.clone()], 100).unwrap();
        assert_eq!(g.len(), 6);
        let m = GroupModule::new(vec![s, c]);
        assert_eq!(h0(&g, &m), 1); // the all-ones line
        let a = h1(&g, &m).unwrap();
        let b = h1_naive(&g, &m, 200).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, 0);
    }

    #[test]
    fn permutation_module_splits_into_trivial_and_standard() {
        let f = Fq::new(13, 1).unwrap();
        let s = FMat::from_rows(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        let c = FMat::from_rows(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
        let g = FiniteGroup::generate(&f, &[s.clone(), c.clone()], 100).unwrap();
        let m = GroupModule::new(vec![s, c]);
        let simples = simple_submodules(&g, &m, 42).unwrap();
        let dims: Vec<usize> = simples.iter().map(|s| s.dim()).collect();
        assert_eq!(dims, vec![1, 2]);
        let classes = isotypic_classes(&g, &m, &simples);
        assert_eq!(classes.len(), 2);
    }

    #[test]
    fn isotypic_multiplicity_two_splits() {
        // C_3 acting on two copies of the same eigenline: End is 2x2
        let f = Fq::new(13, 1).unwrap();
        let z = f.root_of_unity(3).unwrap();
        let gen = FMat::from_rows(&[vec![z, 0], vec![0, z]]);
        let g = FiniteGroup::generate(&f, &[FMat::from_rows(&[vec![z]])], 100).unwrap();
        let m = GroupModule::new(vec![gen]);
        let simples = simple_submodules(&g, &m, 7).unwrap();
        assert_eq!(simples.len(), 2);
        assert!(simples.iter().all(|s| s.dim() == 1));
        let classes = isotypic_classes(&g, &m, &simples);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].len(), 2);
    }

    #[test]
    fn two_dimensional_irreducible_over_extension() {
        // C_7 inside SL_2(F_13) via an element of order 7 has an irreducible
        // 2-dimensional standard module (eigenvalues live in F_169)
        let f = Fq::new(13, 1).unwrap();
        let g13 = sl2(&f);
        let elt = g13
            .elements
            .iter()
            .find(|m| {
                let i = g13.index_of(m).unwrap();
                g13.order_of(i) == 7
            })
            .unwrap()
            .clone();
        let g = FiniteGroup::generate(&f, &[elt.clone()], 100).unwrap();
        assert_eq!(g.len(), 7);
        let m = GroupModule::new(vec![elt]);
        let simples = simple_submodules(&g, &m, 3).unwrap();
        assert_eq!(simples.len(), 1);
        assert_eq!(simples[0].dim(), 2);
    }

    #[test]
    fn module_well_definedness_detects_bad_images() {
        let f = Fq::new(13, 1).unwrap();
        let s = FMat::from_rows(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        let c = FMat::from_rows(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]]);
        let g = FiniteGroup::generate(&f, &[s.clone(), c.clone()], 100).unwrap();
        let good = GroupModule::new(vec![s.clone(), c.clone()]);
        assert!(good.is_well_defined(&g));
        // sending the transposition to something of order 3 breaks relations
        let bad = GroupModule::new(vec![c.clone(), c]);
        assert!(!bad.is_well_defined(&g));
    }

    #[test]
    fn unipotent_lifts_gain_order() {
        let f = Fq::new(13, 1).unwrap();
        let mut u = FMat::identity(2);
        u[(0, 1)] = 1;
        let rep = unipotent_lift_order(&f, &u, 25, 99).unwrap();
        assert!(!rep.vacuous);
        assert_eq!(rep.trials, 26);
        // identity is vacuous
        let rep = unipotent_lift_order(&f, &FMat::identity(2), 25, 99).unwrap();
        assert!(rep.vacuous);
        // non-unipotent input is rejected
        let mut d = FMat::identity(2);
        d[(0, 0)] = 2;
        d[(1, 1)] = 7; // 2*7 = 14 = 1 mod 13
        assert!(unipotent_lift_order(&f, &d, 5, 1).is_err());
        // small characteristic is rejected
        let f3 = Fq::new(3, 1).unwrap();
        let mut u3 = FMat::identity(2);
        u3[(0, 1)] = 1;
        assert!(unipotent_lift_order(&f3, &u3, 5, 1).is_err());
    }

    #[test]
    fn dual_module_inverts_eigenvalues() {
        let f = Fq::new(13, 1).unwrap();
        let z = f.root_of_unity(3).unwrap();
        let g = FiniteGroup::generate(&f, &[FMat::from_rows(&[vec![z]])], 100).unwrap();
        let m = GroupModule::new(vec![FMat::from_rows(&[vec![z]])]);
        let d = m.dual(&f);
        assert_eq!(d.gen_action[0][(0, 0)], f.inv(z));
        assert_eq!(h0(&g, &d), 0);
        let _ = g;
    }
}
