//! One function per subcommand.  Every command assembles a `RunReport`
//! whose checks carry both the computed data (in `details`) and a pass
//! verdict; the process exit code is derived from the overall verdict.

use std::collections::BTreeMap;

use serde::Deserialize;

use coxlab::charring::CharRing;
use coxlab::chevalley::{sl_ad_matrix, Chevalley};
use coxlab::coxeterhom::CoxeterHom;
use coxlab::error::Error;
use coxlab::finitegrp::{h0, h1, h1_naive, FiniteGroup, GroupModule};
use coxlab::gf::{FMat, Fq};
use coxlab::hecke::{projector_model, HElt, Hecke};
use coxlab::pseudochar::{
    bucket_experiment, quaternion_det_twist, special_linear_pool, torus_permutation_conjugacy,
    SmallGroup, POOL_CAP,
};
use coxlab::rootdata::{cartan_matrix, Isogeny, RootDatum, Series};
use coxlab::weyl::{
    coinvariant_factors, coxeter_element, scaling_stabilizer, torsion_eigenvectors, WeylGroup,
};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{check, check_w, Check, RunReport};
use crate::suites;
use crate::{GROUP_CAP, REP_DIM_CAP, WEYL_CAP};

fn config(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn element_order(w: &WeylGroup, i: usize) -> usize {
    let mut cur = i;
    let mut ord = 1;
    while cur != 0 {
        cur = w.mul(cur, i);
        ord += 1;
    }
    ord
}

pub fn cmd_rootdata(
    series: Series,
    rank: usize,
    isogeny: Isogeny,
    l: Option<u64>,
) -> Result<RunReport, Error> {
    let rd = RootDatum::new(series, rank, isogeny)?;
    let mut checks = Vec::new();
    let h = rd.coxeter_number()?;
    let wo = rd.weyl_order()?;
    checks.push(check(
        "rootdata/counts",
        rd.roots.len() as u64 == rank as u64 * h,
        format!(
            "{}: dimension {}, {} roots = rank * coxeter number {h}, |W| = {wo}",
            rd.label,
            rd.dim,
            rd.roots.len()
        ),
    ));

    let dd = rd.dual().dual();
    checks.push(check(
        "rootdata/double_dual",
        dd.roots == rd.roots && dd.coroots == rd.coroots,
        "dualizing twice returns the same root and coroot lists".to_string(),
    ));

    let det = cartan_matrix(series, rank)?.det_bareiss();
    let factors = coinvariant_factors(&coxeter_element(&rd));
    let prod: i64 = factors.iter().product();
    checks.push(check(
        "rootdata/coinvariant_order",
        prod == det,
        format!("coinvariant factors {factors:?} multiply to det(Cartan) = {det}"),
    ));

    if let Some(l) = l {
        checks.push(check(
            "rootdata/very_good",
            true,
            format!("characteristic {l} very good: {}", rd.very_good(l)),
        ));
    }

    Ok(RunReport::new(
        format!("rootdata {}", rd.label),
        config(&[
            ("type", rd.label.clone()),
            ("isogeny", isogeny.tag().to_string()),
            ("l", l.map(|v| v.to_string()).unwrap_or_default()),
        ]),
        checks,
    ))
}

pub fn cmd_weyl(
    series: Series,
    rank: usize,
    isogeny: Isogeny,
    t: Option<u64>,
    q: Option<u64>,
) -> Result<RunReport, Error> {
    let rd = RootDatum::new(series, rank, isogeny)?;
    let w = WeylGroup::enumerate(&rd, WEYL_CAP)?;
    let mut checks = Vec::new();

    checks.push(check(
        "weyl/order",
        w.len() as u64 == rd.weyl_order()?,
        format!("enumerated {} elements, formula gives {}", w.len(), rd.weyl_order()?),
    ));
    checks.push(check(
        "weyl/longest_length",
        w.length(w.longest()) == rd.roots.len() / 2,
        format!(
            "longest element has length {} = number of positive roots",
            w.length(w.longest())
        ),
    ));
    let cox = coxeter_element(&rd);
    let ci = w.index_of(&cox).ok_or_else(|| Error::math("Coxeter element not enumerated"))?;
    let h = rd.coxeter_number()? as usize;
    checks.push(check(
        "weyl/coxeter_order",
        element_order(&w, ci) == h,
        format!("Coxeter element has order {h}"),
    ));

    if let (Some(t), Some(q)) = (t, q) {
        let eig = torsion_eigenvectors(&rd, &cox, q, t)?;
        let mut detail = format!("q = {q} eigenspace on t = {t} torsion has dimension {}", eig.len());
        let mut witnesses = Vec::new();
        if let Some(c) = eig.first() {
            let stab = scaling_stabilizer(&w, c, t)?;
            detail.push_str(&format!(", scaling stabilizer order {}", stab.len()));
            witnesses.push(format!("c = {c:?}"));
        }
        checks.push(check_w("weyl/eigenspace", !eig.is_empty(), detail, witnesses));
    }

    Ok(RunReport::new(
        format!("weyl {}", rd.label),
        config(&[
            ("type", rd.label.clone()),
            ("t", t.map(|v| v.to_string()).unwrap_or_default()),
            ("q", q.map(|v| v.to_string()).unwrap_or_default()),
        ]),
        checks,
    ))
}

pub fn cmd_chevalley(series: Series, rank: usize, isogeny: Isogeny) -> Result<RunReport, Error> {
    let rd = RootDatum::new(series, rank, isogeny)?;
    let chev = Chevalley::new(&rd)?;
    let n = chev.basis_len();
    let mut checks = Vec::new();
    checks.push(check(
        "chevalley/dimension",
        n == rd.lie_dim(),
        format!("basis has {n} vectors = dim(T) {} + number of roots {}", rd.dim, rd.roots.len()),
    ));

    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut antisym = true;
    for x in 0..n {
        for y in 0..n {
            let mut xy = chev.bracket(&unit(x), &unit(y));
            let yx = chev.bracket(&unit(y), &unit(x));
            for (a, b) in xy.iter_mut().zip(&yx) {
                *a += *b;
            }
            if xy.iter().any(|&c| c != 0) {
                antisym = false;
            }
        }
    }
    checks.push(check(
        "chevalley/antisymmetry",
        antisym,
        format!("[x,y] + [y,x] = 0 on all {} basis pairs", n * n),
    ));

    // full Jacobi sweep; the basis is small enough for every listed type
    let mut jacobi = true;
    for x in 0..n {
        let bx = unit(x);
        for y in 0..n {
            let by = unit(y);
            let xy = chev.bracket(&bx, &by);
            for z in 0..n {
                let bz = unit(z);
                let mut total = chev.bracket(&bx, &chev.bracket(&by, &bz));
                for (a, b) in total.iter_mut().zip(&chev.bracket(&by, &chev.bracket(&bz, &bx))) {
                    *a += *b;
                }
                for (a, b) in total.iter_mut().zip(&chev.bracket(&bz, &xy)) {
                    *a += *b;
                }
                if total.iter().any(|&c| c != 0) {
                    jacobi = false;
                }
            }
        }
    }
    checks.push(check(
        "chevalley/jacobi",
        jacobi,
        format!("the Jacobi identity holds on all {} basis triples", n * n * n),
    ));

    Ok(RunReport::new(
        format!("chevalley {}", rd.label),
        config(&[("type", rd.label.clone())]),
        checks,
    ))
}

pub fn cmd_cohomology(l: u64, m: u32) -> Result<RunReport, Error> {
    let f = Fq::new(l, m)?;
    // upper unipotents u(t) for t in a spanning set, plus the flip, generate
    // SL2; powers of a multiplicative generator span the field over its
    // prime subfield
    let s = FMat::from_rows(&[vec![0, f.from_int(-1)], vec![1, 0]]);
    let mut gens = vec![s];
    let step = f.generator();
    let mut t = f.one();
    for _ in 0..m {
        gens.push(FMat::from_rows(&[vec![1, t], vec![0, 1]]));
        t = f.mul(t, step);
    }
    let g = FiniteGroup::generate(&f, &gens, GROUP_CAP)?;
    let rd = RootDatum::new(Series::A, 1, Isogeny::Sc)?;
    let chev = Chevalley::new(&rd)?;
    let acts: Vec<FMat> = g
        .gens
        .iter()
        .map(|&i| sl_ad_matrix(&chev, &f, &g.elements[i]))
        .collect();
    let module = GroupModule::new(acts);

    let mut checks = Vec::new();
    let expected = f.q * (f.q * f.q - 1);
    checks.push(check(
        "cohomology/group_order",
        g.len() as u64 == expected,
        format!("|SL2(F{})| = {} (formula {expected})", f.q, g.len()),
    ));
    let h0v = h0(&g, &module);
    let h1v = h1(&g, &module)?;
    // in characteristic 2 the scalars are traceless, so the adjoint module
    // has a one-dimensional invariant center; odd characteristic has none
    let center = usize::from(l == 2);
    checks.push(check(
        "cohomology/adjoint_h0",
        h0v == center,
        format!("h0 = {h0v} on the adjoint module (invariant center has dimension {center})"),
    ));
    checks.push(check(
        "cohomology/adjoint_h1",
        true,
        format!("h1 = {h1v} on the adjoint module"),
    ));
    if g.len() <= 200 {
        let naive = h1_naive(&g, &module, 200)?;
        checks.push(check(
            "cohomology/naive_agreement",
            h1v == naive,
            format!("tree solver {h1v}, naive solver {naive}"),
        ));
    }

    Ok(RunReport::new(
        format!("cohomology --l {l} --m {m}"),
        config(&[("l", l.to_string()), ("m", m.to_string())]),
        checks,
    ))
}

pub fn cmd_coxeter(
    series: Series,
    rank: usize,
    q: u64,
    l: u64,
    t: Option<u64>,
    seed: u64,
) -> Result<RunReport, Error> {
    let rd = RootDatum::new(series, rank, Isogeny::Sc)?;
    let hom = match t {
        Some(t) => CoxeterHom::build_with_t(&rd, q, t, l)?,
        None => CoxeterHom::build(&rd, q, l)?,
    };
    let h = rd.coxeter_number()?;
    let mut checks = Vec::new();

    let ver = hom.verify_definition()?;
    checks.push(check_w(
        "coxeter/definition",
        ver.image_order == ver.torus_order * ver.weyl_order
            && ver.torus_order == hom.t
            && ver.weyl_order == h
            && ver.conjugation_power == q % hom.t,
        format!(
            "image of order {} = torsion {} * coxeter number {}; the lift conjugates the \
             torus point to its q-th power",
            ver.image_order, ver.torus_order, ver.weyl_order
        ),
        vec![format!("t = {}, eigenvector c = {:?}", hom.t, hom.c)],
    ));

    let dec = hom.adjoint_decomposition(seed)?;
    let total: usize = dec.dims.iter().sum();
    checks.push(check(
        "coxeter/adjoint_decomposition",
        total == rd.lie_dim(),
        format!(
            "simple summands of dimensions {:?} fill the {}-dimensional adjoint module",
            dec.dims,
            rd.lie_dim()
        ),
    ));

    let ab = hom.abundance(seed)?;
    let witnesses: Vec<String> = ab
        .witnesses
        .iter()
        .map(|w| {
            format!(
                "summand of dimension {}: element #{} of order {}",
                w.summand_dim, w.element, w.element_order
            )
        })
        .collect();
    checks.push(check_w(
        "coxeter/abundance",
        ab.abundant,
        format!(
            "h0(g) = {}, h0(g*) = {}, h1(g*) = {}, h1(k) = {}, missing witness: {:?}",
            ab.h0_adjoint, ab.h0_dual, ab.h1_dual, ab.h1_trivial, ab.missing_witness_dim
        ),
        witnesses,
    ));

    if series == Series::A && rank == 1 {
        let g = hom.rank_one_group_level(GROUP_CAP)?;
        // the matrix-level source double-covers the adjoint image: the Weyl
        // lift squares to the central -1 instead of the identity
        checks.push(check(
            "coxeter/group_level",
            g.scalars_only && g.source_order == 2 * hom.image.len() as u64,
            format!(
                "matrix-level source of order {} over the order-{} adjoint image; Weyl lift \
                 of order {}; joint centralizer in GL2 has order {} (scalars only: {})",
                g.source_order,
                hom.image.len(),
                g.lift_order,
                g.image_centralizer_order,
                g.scalars_only
            ),
        ));
    }

    Ok(RunReport::new(
        format!("coxeter {} --q {q} --l {l}", rd.label),
        config(&[
            ("type", rd.label.clone()),
            ("q", q.to_string()),
            ("l", l.to_string()),
            ("t", hom.t.to_string()),
            ("seed", seed.to_string()),
        ]),
        checks,
    ))
}

pub fn cmd_pseudochar(l: u64, seed: u64) -> Result<RunReport, Error> {
    let f = Fq::new(l, 1)?;
    let pool = special_linear_pool(&f, 2, POOL_CAP)?;
    let mut checks = Vec::new();
    for g in SmallGroup::battery() {
        let rep = bucket_experiment(&g, &f, &pool, seed)?;
        checks.push(check(
            format!("pseudochar/buckets_{}", rep.group),
            rep.witnessed,
            format!(
                "{} homomorphisms in {} trace buckets, each a single conjugacy class",
                rep.homs, rep.buckets
            ),
        ));
    }
    if l == 13 {
        let tw = quaternion_det_twist(&f)?;
        checks.push(check(
            "pseudochar/quaternion_det_twist",
            tw.tables_equal && tw.gl_witnesses > 0 && tw.unit_det_witnesses == 0,
            format!(
                "equal trace tables, {} GL2 intertwiners, {} of determinant one: conjugate \
                 in GL2 but not in SL2",
                tw.gl_witnesses, tw.unit_det_witnesses
            ),
        ));
    }
    for n in [2usize, 3] {
        let rep = torus_permutation_conjugacy(&f, n, 3)?;
        checks.push(check(
            format!("pseudochar/torus_sl{n}"),
            rep.orbits_match && rep.witnessed,
            format!(
                "{} diagonal homomorphisms, {} buckets matching permutation orbits",
                rep.homs, rep.buckets
            ),
        ));
    }
    Ok(RunReport::new(
        format!("pseudochar --l {l}"),
        config(&[("l", l.to_string()), ("seed", seed.to_string())]),
        checks,
    ))
}

pub fn cmd_char(
    series: Series,
    rank: usize,
    weight: &[i64],
    levi: Option<&[usize]>,
) -> Result<RunReport, Error> {
    let rd = RootDatum::new(series, rank, Isogeny::Sc)?;
    let ring = CharRing::new(&rd.dual())?;
    if weight.len() != ring.d.rank {
        return Err(Error::usage(format!(
            "weight must have {} coordinates",
            ring.d.rank
        )));
    }
    let formula = ring.weyl_dim(weight)?;
    if formula > REP_DIM_CAP {
        return Err(Error::resource(format!(
            "representation dimension {formula} exceeds the cap {REP_DIM_CAP}"
        )));
    }
    let ch = ring.irreducible(weight)?;
    let total = ring.total(&ch) as i128;
    let mut checks = Vec::new();
    checks.push(check(
        "char/dimension",
        total == formula,
        format!("summed multiplicities {total} match the dimension formula {formula}"),
    ));
    let mults = ring.dominant_multiplicities(weight)?;
    checks.push(check_w(
        "char/dominant_multiplicities",
        mults.get(weight).copied() == Some(1),
        format!("{} dominant weights in the support", mults.len()),
        mults.iter().map(|(w, m)| format!("{w:?}: {m}")).collect(),
    ));
    if let Some(nodes) = levi {
        let dec = ring.restrict_to_levi(nodes, &ch)?;
        let lrd = ring.d.levi(nodes)?;
        let lring = CharRing::new(&lrd)?;
        let mut sum: i128 = 0;
        let mut parts = Vec::new();
        for (w, m) in &dec {
            let dim = lring.total(&lring.irreducible(w)?) as i128;
            sum += dim * *m as i128;
            parts.push(format!("{w:?} of dimension {dim} with multiplicity {m}"));
        }
        checks.push(check_w(
            "char/levi_restriction",
            sum == total,
            format!(
                "restriction to nodes {nodes:?} splits into {} irreducibles totalling {sum}",
                dec.len()
            ),
            parts,
        ));
    }
    Ok(RunReport::new(
        format!("char {} --weight {weight:?}", rd.label),
        config(&[
            ("type", rd.label.clone()),
            ("weight", format!("{weight:?}")),
            ("levi", levi.map(|n| format!("{n:?}")).unwrap_or_default()),
        ]),
        checks,
    ))
}

#[derive(Deserialize)]
struct TermLit {
    lambda: Vec<i64>,
    w_word: Vec<usize>,
    coeff: Vec<i64>,
}

#[derive(Deserialize)]
struct EltLit {
    terms: Vec<TermLit>,
}

#[derive(Deserialize)]
struct PairLit {
    a: EltLit,
    b: EltLit,
}

fn parse_elt(h: &Hecke, lit: &EltLit) -> Result<HElt, Error> {
    let mut out = HElt::default();
    for t in &lit.terms {
        if t.lambda.len() != h.rd.dim {
            return Err(Error::usage(format!(
                "lambda must have {} coordinates",
                h.rd.dim
            )));
        }
        let mat = t.w_word.iter().try_fold(
            coxlab::linalg::IntMat::identity(h.rd.dim),
            |acc, &i| {
                if i >= h.rd.rank {
                    return Err(Error::usage(format!("generator index {i} out of range")));
                }
                Ok(acc.mul(&h.w.gens[i]))
            },
        )?;
        let wi = h
            .w
            .index_of(&mat)
            .ok_or_else(|| Error::math("word does not land in the enumerated group"))?;
        let term = HElt(BTreeMap::from([((t.lambda.clone(), wi), t.coeff.clone())]));
        out = out.add(&term);
    }
    Ok(out)
}

fn render_elt(h: &Hecke, x: &HElt) -> Vec<String> {
    if x.0.is_empty() {
        return vec!["0".to_string()];
    }
    x.0.iter()
        .map(|((mu, wi), p)| {
            format!(
                "theta{mu:?} T(word {:?}) * poly {p:?}",
                h.w.elements[*wi].word
            )
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_hecke(
    action: &str,
    series: Series,
    rank: usize,
    samples: usize,
    seed: u64,
    json: Option<&str>,
    l: Option<u64>,
    t: Option<u64>,
    weight: Option<&[i64]>,
) -> Result<RunReport, Error> {
    let rd = RootDatum::new(series, rank, Isogeny::Sc)?;
    let cfg = config(&[
        ("type", rd.label.clone()),
        ("action", action.to_string()),
        ("samples", samples.to_string()),
        ("seed", seed.to_string()),
    ]);
    let command = format!("hecke {action} {}", rd.label);
    let mut checks = Vec::new();
    match action {
        "mul" => {
            let h = Hecke::new(&rd, WEYL_CAP)?;
            let src = json.ok_or_else(|| Error::usage("mul needs --json with fields a and b"))?;
            let pair: PairLit =
                serde_json::from_str(src).map_err(|e| Error::usage(format!("bad element JSON: {e}")))?;
            let a = parse_elt(&h, &pair.a)?;
            let b = parse_elt(&h, &pair.b)?;
            let prod = h.mul(&a, &b);
            checks.push(check_w(
                "hecke/product",
                true,
                format!("product has {} term(s)", prod.0.len()),
                render_elt(&h, &prod),
            ));
        }
        "assoc" => {
            let h = Hecke::new(&rd, WEYL_CAP)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut ok = 0usize;
            for _ in 0..samples {
                let elts: Vec<HElt> = (0..3)
                    .map(|_| {
                        let mut x = HElt::default();
                        for _ in 0..2 {
                            let mu: Vec<i64> =
                                (0..h.rd.dim).map(|_| rng.gen_range(-2..=2i64)).collect();
                            let wi = rng.gen_range(0..h.w.len());
                            let c = rng.gen_range(-2..=2i64);
                            if c != 0 {
                                x = x.add(&HElt(BTreeMap::from([((mu, wi), vec![c])])));
                            }
                        }
                        x
                    })
                    .collect();
                if h.mul(&h.mul(&elts[0], &elts[1]), &elts[2])
                    == h.mul(&elts[0], &h.mul(&elts[1], &elts[2]))
                {
                    ok += 1;
                }
            }
            checks.push(check(
                "hecke/associativity",
                ok == samples,
                format!("{ok}/{samples} random triples associate"),
            ));
        }
        "center" => {
            let h = Hecke::new(&rd, WEYL_CAP)?;
            let mu: Vec<i64> = match weight {
                Some(w) => w.to_vec(),
                None => {
                    let mut v = vec![0i64; rd.dim];
                    v[0] = 1;
                    v
                }
            };
            let z = h.orbit_theta_sum(&mu);
            let bare_central = h.is_central(&h.theta(&mu));
            checks.push(check(
                "hecke/orbit_sum_central",
                h.is_central(&z),
                format!("the orbit sum through {mu:?} has {} terms and is central", z.0.len()),
            ));
            checks.push(check(
                "hecke/bare_theta_not_central",
                !bare_central || mu.iter().all(|&c| c == 0),
                "a single lattice element away from the origin fails centrality".to_string(),
            ));
        }
        "degenerate" => {
            let h = Hecke::new(&rd, WEYL_CAP)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut ok = 0usize;
            for _ in 0..samples {
                let mut make = || {
                    let mut x = HElt::default();
                    for _ in 0..2 {
                        let mu: Vec<i64> =
                            (0..h.rd.dim).map(|_| rng.gen_range(-2..=2i64)).collect();
                        let wi = rng.gen_range(0..h.w.len());
                        let c = rng.gen_range(-2..=2i64);
                        let d = rng.gen_range(-1..=1i64);
                        if c != 0 || d != 0 {
                            x = x.add(&HElt(BTreeMap::from([((mu, wi), vec![c, d])])));
                        }
                    }
                    x
                };
                let a = make();
                let b = make();
                if h.group_mul(&h.specialize(&a, 1), &h.specialize(&b, 1))
                    == h.specialize(&h.mul(&a, &b), 1)
                {
                    ok += 1;
                }
            }
            checks.push(check(
                "hecke/q1_degeneration",
                ok == samples,
                format!("{ok}/{samples} products specialize multiplicatively at q = 1"),
            ));
        }
        "projector" => {
            let l = l.ok_or_else(|| Error::usage("projector needs --l"))?;
            let n = t.ok_or_else(|| Error::usage("projector needs --t as the torsion order"))?;
            let c: Vec<u64> = weight
                .ok_or_else(|| Error::usage("projector needs --weight as the character exponent"))?
                .iter()
                .map(|&x| {
                    u64::try_from(x).map_err(|_| Error::usage("character exponents must be nonnegative"))
                })
                .collect::<Result<_, _>>()?;
            let rep = projector_model(&rd, l, n, &c, GROUP_CAP)?;
            checks.push(check(
                "hecke/projector_structure",
                rep.idempotent && rep.conjugation_invariant && rep.orbit_decomposition,
                format!(
                    "group order {}, orbit size {}, summand dimension {}",
                    rep.group_order, rep.orbit_size, rep.module_dim
                ),
            ));
            checks.push(check(
                "hecke/projector_symmetrizer",
                rep.u_rank_on_module == rep.orbit_size
                    && rep.u_rank_on_localization == rep.localization_dim,
                format!(
                    "symmetrizer rank {} on the summand, {} = dimension on each localization",
                    rep.u_rank_on_module, rep.u_rank_on_localization
                ),
            ));
        }
        other => {
            return Err(Error::usage(format!(
                "unknown hecke action {other:?}; expected mul, assoc, center, degenerate, projector"
            )))
        }
    }
    Ok(RunReport::new(command, cfg, checks))
}

pub fn cmd_acceptance(suite: Option<&str>, seed: u64) -> Result<RunReport, Error> {
    let name = suite.unwrap_or("all");
    let checks: Vec<Check> = suites::run_suite(name, seed)?;
    Ok(RunReport::new(
        format!("acceptance --suite {name} --seed {seed}"),
        config(&[
            ("suite", name.to_string()),
            ("seed", seed.to_string()),
            ("group_cap", crate::GROUP_CAP.to_string()),
            ("weyl_cap", WEYL_CAP.to_string()),
            ("module_dim_cap", crate::MODULE_DIM_CAP.to_string()),
            ("rep_dim_cap", REP_DIM_CAP.to_string()),
        ]),
        checks,
    ))
}
