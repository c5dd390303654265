//! Hypersurfaces `g(z0, z1) + h(z2, z3, z4) = 0` in `P^4`: the cones of lines
//! through the roots of `g`, and the rank of the conditions for a line
//! avoiding `{z2 = z3 = z4 = 0}` to lie on the hypersurface.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cayley_bacharach::normalize_point;
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Residue};
use crate::linalg::ExactMatrix;
use crate::poly::{monomial_basis, Monomial, MultiPoly};
use crate::subspace::LinearSubspace;
use crate::univariate::UniPoly;

use super::{contains_subspace, random_form};

/// Sampled rulings per cone.
const RULINGS: usize = 3;
const DIM_U: usize = 6;

#[derive(Clone, Debug, Serialize)]
pub struct Example46Report {
    pub d1: u32,
    pub g: String,
    pub h: String,
    /// Points of `{g = 0}` on the line `{z2 = z3 = z4 = 0}`.
    pub vertices: Vec<Vec<String>>,
    pub families_verified: usize,
    pub rulings_per_family: usize,
    /// A line from a vertex to a point of the plane off `{h = 0}` was rejected.
    pub non_rulings_rejected: bool,
    pub rank_m1: usize,
    pub rank_m2: usize,
    pub dim_u: usize,
    pub rank_certificate: bool,
    /// Fewer than `d1` distinct vertices.
    pub degenerate: bool,
    pub warnings: Vec<String>,
}

/// Matrix of the linear map from the coefficients of `(g, h)` to the binary
/// forms of degree `d1` on `line`. Columns: monomials of `g` (in the order of
/// `monomial_basis(2, d1)`), then those of `h` (`monomial_basis(3, d1)`).
pub fn restriction_conditions<F: Field>(field: &F, d1: u32, line: &LinearSubspace<F>) -> Result<ExactMatrix<F>> {
    if line.ambient_dim() != 4 || line.sub_dim() != 1 {
        return Err(Error::InvalidParameters("expected a line in P^4".into()));
    }
    let g_monos = monomial_basis(2, d1).into_iter().map(|m| (m, [0usize, 1].to_vec()));
    let h_monos = monomial_basis(3, d1).into_iter().map(|m| (m, [2usize, 3, 4].to_vec()));
    let cols: Vec<Vec<F::Elem>> = g_monos
        .chain(h_monos)
        .map(|(m, pos)| {
            let p = MultiPoly::monomial(field, m, field.one()).embed(5, &pos)?;
            Ok(p.restrict_to_subspace(line)?.coeff_vector())
        })
        .collect::<Result<_>>()?;
    Ok(ExactMatrix::from_rows(field, d1 as usize + 1, cols)?.transpose())
}

fn representative_lines<F: Field>(field: &F) -> Result<[LinearSubspace<F>; 2]> {
    // m1: z0 = z1 = z3, z4 = 0 and m2: z0 = z2, z1 = z3, z4 = 0
    Ok([
        LinearSubspace::from_int_vectors(field, &[vec![1, 1, 0, 1, 0], vec![0, 0, 1, 0, 0]])?,
        LinearSubspace::from_int_vectors(field, &[vec![1, 0, 1, 0, 0], vec![0, 1, 0, 1, 0]])?,
    ])
}

/// Binary form `c * prod (z0 - r_i z1)` with distinct random `r_i`.
fn split_binary_form(field: &PrimeField, d1: u32, rng: &mut ChaCha8Rng) -> MultiPoly<PrimeField> {
    let mut roots = BTreeSet::new();
    while roots.len() < d1 as usize {
        if !roots.insert(field.elem(rng.gen_range(0..field.modulus()))) {
            log::warn!("repeated root drawn for g; redrawing it");
        }
    }
    let c = field.elem(rng.gen_range(1..field.modulus()));
    roots.iter().fold(MultiPoly::constant(field, 2, c), |acc, r| {
        let factor = MultiPoly::linear_form(field, &[field.one(), field.neg(r)]);
        acc.mul(&factor).expect("same ring")
    })
}

/// Draws `g` with `d1` distinct roots and a random `h`, then runs the checks.
pub fn example46_check(field: &PrimeField, d1: u32, seed: u64) -> Result<Example46Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = split_binary_form(field, d1, &mut rng);
    let h = random_form(field, 3, d1, &mut rng);
    example46_check_forms(field, d1, &g, &h, rng.gen())
}

/// Roots of a binary form as points of `P^1`, including `(1 : 0)`.
fn binary_roots(field: &PrimeField, g: &MultiPoly<PrimeField>, seed: u64) -> Vec<[Residue; 2]> {
    let d = g.degree();
    let coeffs: Vec<Residue> = (0..=d).map(|i| g.coeff(&Monomial::new(vec![i, d - i]))).collect();
    let uni = UniPoly::new(field, coeffs.clone());
    let mut out: Vec<[Residue; 2]> = uni.roots(field, seed).into_iter().map(|r| [r, field.one()]).collect();
    if field.is_zero(&coeffs[d as usize]) {
        out.push([field.one(), field.zero()]);
    }
    out
}

/// Up to `count` distinct points of `{h = 0}` in `P^2`, found on random lines.
fn curve_points(field: &PrimeField, h: &MultiPoly<PrimeField>, count: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<Residue>>> {
    const LINES: usize = 400;
    let mut found = BTreeSet::new();
    for _ in 0..LINES {
        let p: Vec<Residue> = (0..3).map(|_| field.random(rng)).collect();
        let q: Vec<Residue> = (0..3).map(|_| field.random(rng)).collect();
        let Ok(line) = LinearSubspace::new(field, vec![q.clone(), p.clone()]) else { continue };
        let on_line = h.restrict_to_subspace(&line)?;
        if on_line.is_zero() {
            continue;
        }
        for [x, y] in binary_roots(field, &on_line, rng.gen()) {
            let pt: Vec<Residue> = (0..3).map(|k| field.add(&field.mul(&x, &q[k]), &field.mul(&y, &p[k]))).collect();
            found.extend(normalize_point(field, &pt));
        }
        if found.len() >= count {
            return Ok(found.into_iter().take(count).collect());
        }
    }
    Err(Error::RetriesExhausted { attempts: LINES, reason: "too few points found on {h = 0}".into() })
}

pub fn example46_check_forms(
    field: &PrimeField,
    d1: u32,
    g: &MultiPoly<PrimeField>,
    h: &MultiPoly<PrimeField>,
    seed: u64,
) -> Result<Example46Report> {
    if g.num_vars() != 2 || h.num_vars() != 3 || g.degree() != d1 || h.degree() != d1 {
        return Err(Error::InvalidParameters(format!("g and h must be forms of degree {d1} in 2 and 3 variables")));
    }
    if g.is_zero() || h.is_zero() {
        return Err(Error::InvalidParameters("g and h must be nonzero".into()));
    }
    let mut warnings = Vec::new();
    if d1 <= 5 {
        warnings.push(format!("d1 = {d1} is at most 5; the rank bound d1 + 1 > {DIM_U} fails"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = g.embed(5, &[0, 1])?.add(&h.embed(5, &[2, 3, 4])?)?;

    let vertices: Vec<Vec<Residue>> = binary_roots(field, g, rng.gen())
        .into_iter()
        .map(|[a, b]| vec![a, b, field.zero(), field.zero(), field.zero()])
        .collect();
    let degenerate = vertices.len() < d1 as usize;
    if degenerate {
        warnings.push(format!("g has {} distinct roots over F_{}, expected {d1}", vertices.len(), field.modulus()));
    }

    let lift = |pt: &[Residue]| vec![field.zero(), field.zero(), pt[0], pt[1], pt[2]];
    let samples = curve_points(field, h, RULINGS, &mut rng)?;
    let off_curve = loop {
        let pt: Vec<Residue> = (0..3).map(|_| field.random(&mut rng)).collect();
        if !field.is_zero(&h.eval(&pt)?) {
            break pt;
        }
    };

    let mut families_verified = 0;
    let mut non_rulings_rejected = true;
    for v in &vertices {
        let mut all = true;
        for q in &samples {
            let ruling = LinearSubspace::new(field, vec![v.clone(), lift(q)])?;
            all &= contains_subspace(&f, &ruling)?;
        }
        families_verified += all as usize;
        let stray = LinearSubspace::new(field, vec![v.clone(), lift(&off_curve)])?;
        non_rulings_rejected &= !contains_subspace(&f, &stray)?;
    }

    let [m1, m2] = representative_lines(field)?;
    let rank_m1 = restriction_conditions(field, d1, &m1)?.rank();
    let rank_m2 = restriction_conditions(field, d1, &m2)?.rank();
    let rank_certificate = rank_m1 == d1 as usize + 1 && rank_m2 == d1 as usize + 1 && d1 as usize + 1 > DIM_U;

    Ok(Example46Report {
        d1,
        g: g.to_string(),
        h: h.to_string(),
        vertices: vertices.iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect(),
        families_verified,
        rulings_per_family: samples.len(),
        non_rulings_rejected,
        rank_m1,
        rank_m2,
        dim_u: DIM_U,
        rank_certificate,
        degenerate,
        warnings,
    })
}
