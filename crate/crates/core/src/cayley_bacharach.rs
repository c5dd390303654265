//! Reduced zero-dimensional schemes given by explicit points, and the
//! evaluation-matrix realization of `h^0(I_Z(m))` and `h^1(I_Z(m))`.
//!
//! Complete intersections are realized as grids: each divisor is a union of
//! random hyperplanes, so every point is rational and is cut out by one
//! hyperplane from each divisor.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{parse_scalar, Field};
use crate::hilbert::{h0_projective, CIType};
use crate::linalg::ExactMatrix;
use crate::poly::{monomial_basis, Monomial};

const GRID_RETRIES: usize = 32;

/// How a point set was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance<F: Field> {
    /// Divisor `i` is the union of the hyperplanes `hyperplanes[i]`.
    Grid { degrees: Vec<u32>, hyperplanes: Vec<Vec<Vec<F::Elem>>>, attempts: usize },
    Random { seed: u64 },
    Explicit,
}

#[derive(Clone, Debug)]
pub struct PointSet<F: Field> {
    field: F,
    ambient_dim: usize,
    points: Vec<Vec<F::Elem>>,
    provenance: Provenance<F>,
}

/// Scales so the first nonzero coordinate is one. `None` for the zero vector.
pub fn normalize_point<F: Field>(field: &F, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let lead = v.iter().find(|x| !field.is_zero(x))?;
    let inv = field.inv(lead)?;
    Some(v.iter().map(|x| field.mul(x, &inv)).collect())
}

impl<F: Field> PointSet<F> {
    /// Validates, normalizes and deduplication-checks the points.
    pub fn new(field: &F, ambient_dim: usize, points: Vec<Vec<F::Elem>>, provenance: Provenance<F>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(points.len());
        for p in points {
            if p.len() != ambient_dim + 1 {
                return Err(Error::DimensionMismatch { expected: ambient_dim + 1, got: p.len() });
            }
            let q = normalize_point(field, &p)
                .ok_or_else(|| Error::InvalidParameters("the zero vector is not a projective point".into()))?;
            if !seen.insert(q.clone()) {
                return Err(Error::InvalidParameters("repeated point; the scheme must be reduced".into()));
            }
            out.push(q);
        }
        if let Provenance::Grid { degrees, .. } = &provenance {
            let expected: usize = degrees.iter().map(|&d| d as usize).product();
            if expected != out.len() {
                return Err(Error::InvalidParameters(format!("grid of type {degrees:?} has {} points", out.len())));
            }
        }
        Ok(Self { field: field.clone(), ambient_dim, points: out, provenance })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn points(&self) -> &[Vec<F::Elem>] {
        &self.points
    }
    pub fn len(&self) -> usize {
        self.points.len()
    }
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
    pub fn provenance(&self) -> &Provenance<F> {
        &self.provenance
    }

    /// Type of the complete intersection this set realizes, if it is a grid.
    pub fn ci_type(&self) -> Option<CIType> {
        match &self.provenance {
            Provenance::Grid { degrees, .. } => CIType::new(self.ambient_dim, degrees).ok(),
            _ => None,
        }
    }

    /// The sub-collection with the given indices.
    pub fn subset(&self, indices: &[usize]) -> Self {
        Self {
            field: self.field.clone(),
            ambient_dim: self.ambient_dim,
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
            provenance: Provenance::Explicit,
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.points
                .iter()
                .map(|p| Value::Array(p.iter().map(|x| scalar_json(&self.field, x)).collect()))
                .collect(),
        )
    }

    /// Reads a JSON list of coordinate vectors (numbers or `"a/b"` strings).
    pub fn from_json(field: &F, value: &Value) -> Result<Self> {
        let rows = value.as_array().ok_or_else(|| Error::Parse("expected a list of points".into()))?;
        let mut points = Vec::with_capacity(rows.len());
        for row in rows {
            let coords = row.as_array().ok_or_else(|| Error::Parse("expected a coordinate list".into()))?;
            points.push(coords.iter().map(|c| scalar_from_json(field, c)).collect::<Result<Vec<_>>>()?);
        }
        let ambient = points
            .first()
            .map(|p| p.len())
            .filter(|&l| l >= 2)
            .ok_or_else(|| Error::Parse("need at least one point with two or more coordinates".into()))?
            - 1;
        Self::new(field, ambient, points, Provenance::Explicit)
    }
}

pub fn scalar_json<F: Field>(field: &F, x: &F::Elem) -> Value {
    let text = field.to_text(x);
    match text.parse::<i64>() {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(text),
    }
}

pub fn scalar_from_json<F: Field>(field: &F, v: &Value) -> Result<F::Elem> {
    match v {
        Value::Number(n) => {
            let i = n.as_i64().ok_or_else(|| Error::Parse(format!("non-integer coordinate {n}")))?;
            Ok(field.from_i64(i))
        }
        Value::String(s) => parse_scalar(field, s),
        other => Err(Error::Parse(format!("bad coordinate {other}"))),
    }
}

/// Intersection point of `n` hyperplanes in `P^n`, if it is a single point.
fn meet_hyperplanes<F: Field>(field: &F, forms: &[&Vec<F::Elem>]) -> Option<Vec<F::Elem>> {
    let cols = forms[0].len();
    let m = ExactMatrix::from_rows(field, cols, forms.iter().map(|f| (*f).clone()).collect()).ok()?;
    let kernel = m.kernel_basis();
    if kernel.len() != 1 {
        return None;
    }
    normalize_point(field, &kernel[0])
}

fn random_vector<F: Field>(field: &F, len: usize, rng: &mut ChaCha8Rng) -> Vec<F::Elem> {
    (0..len).map(|_| field.random(rng)).collect()
}

/// Complete intersection of `n` divisors in `P^n`, divisor `i` being the union
/// of `degrees[i]` random hyperplanes. Redraws on any degeneracy.
pub fn build_grid_scheme<F: Field>(field: &F, n: usize, degrees: &[u32], seed: u64) -> Result<PointSet<F>> {
    if degrees.len() != n || n == 0 {
        return Err(Error::InvalidParameters(format!("need exactly n = {n} divisor degrees, got {}", degrees.len())));
    }
    if degrees.contains(&0) {
        return Err(Error::InvalidParameters("divisor degrees must be >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_reason = String::new();
    for attempt in 1..=GRID_RETRIES {
        let hyperplanes: Vec<Vec<Vec<F::Elem>>> = degrees
            .iter()
            .map(|&d| (0..d).map(|_| random_vector(field, n + 1, &mut rng)).collect())
            .collect();
        match grid_points(field, &hyperplanes) {
            Ok(points) => {
                let prov = Provenance::Grid { degrees: degrees.to_vec(), hyperplanes, attempts: attempt };
                return PointSet::new(field, n, points, prov);
            }
            Err(reason) => {
                log::warn!("grid attempt {attempt} for type {degrees:?} degenerate: {reason}; redrawing");
                last_reason = reason;
            }
        }
    }
    Err(Error::RetriesExhausted { attempts: GRID_RETRIES, reason: last_reason })
}

fn grid_points<F: Field>(field: &F, hyperplanes: &[Vec<Vec<F::Elem>>]) -> std::result::Result<Vec<Vec<F::Elem>>, String> {
    let sizes: Vec<usize> = hyperplanes.iter().map(|h| h.len()).collect();
    let total: usize = sizes.iter().product();
    let tuples: Vec<Vec<usize>> = (0..total)
        .map(|mut k| {
            sizes
                .iter()
                .map(|&s| {
                    let i = k % s;
                    k /= s;
                    i
                })
                .collect()
        })
        .collect();
    let points: Vec<Option<Vec<F::Elem>>> = tuples
        .par_iter()
        .map(|t| {
            let forms: Vec<&Vec<F::Elem>> = t.iter().enumerate().map(|(i, &j)| &hyperplanes[i][j]).collect();
            meet_hyperplanes(field, &forms)
        })
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(total);
    for p in points {
        let p = p.ok_or("hyperplanes not in general position")?;
        if !seen.insert(p.clone()) {
            return Err("coincident grid points".into());
        }
        out.push(p);
    }
    Ok(out)
}

/// The zero-dimensional scheme of the bundle construction for a surface of type
/// `surface_degrees = (d_1, ..., d_{n-2})`: a complete intersection of type
/// `(1, 1, d_1 - 1, d_2, ..., d_{n-2})`. The two linear divisors cut the
/// codimension-two plane, and the residual factor of the first hypersurface is
/// a union of `d_1 - 1` hyperplanes inside it.
pub fn residual_configuration<F: Field>(field: &F, n: usize, surface_degrees: &[u32], seed: u64) -> Result<PointSet<F>> {
    if surface_degrees.len() + 2 != n || surface_degrees[0] < 2 {
        return Err(Error::InvalidParameters(format!(
            "need n - 2 = {} surface degrees with d_1 >= 2, got {surface_degrees:?}",
            n.saturating_sub(2)
        )));
    }
    let mut degrees = vec![1, 1, surface_degrees[0] - 1];
    degrees.extend_from_slice(&surface_degrees[1..]);
    build_grid_scheme(field, n, &degrees, seed)
}

/// `count` random points of `P^n`.
pub fn random_points<F: Field>(field: &F, n: usize, count: usize, seed: u64) -> Result<PointSet<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<Vec<F::Elem>> = Vec::with_capacity(count);
    let mut seen = HashSet::new();
    while pts.len() < count {
        if let Some(p) = normalize_point(field, &random_vector(field, n + 1, &mut rng)) {
            if seen.insert(p.clone()) {
                pts.push(p);
            }
        }
    }
    PointSet::new(field, n, pts, Provenance::Random { seed })
}

/// Values of the degree-`m` monomials at each point (rows = points).
#[derive(Clone, Debug)]
pub struct EvaluationMatrix<F: Field> {
    pub monomials: Vec<Monomial>,
    pub matrix: ExactMatrix<F>,
}

impl<F: Field> EvaluationMatrix<F> {
    pub fn new(z: &PointSet<F>, m: u32) -> Self {
        let field = z.field();
        let monomials = monomial_basis(z.ambient_dim() + 1, m);
        let rows: Vec<Vec<F::Elem>> = z
            .points()
            .par_iter()
            .map(|p| {
                // powers[i][e] = p_i^e
                let powers: Vec<Vec<F::Elem>> = p
                    .iter()
                    .map(|x| {
                        let mut v = Vec::with_capacity(m as usize + 1);
                        v.push(field.one());
                        for e in 1..=m as usize {
                            v.push(field.mul(&v[e - 1], x));
                        }
                        v
                    })
                    .collect();
                monomials
                    .iter()
                    .map(|mono| {
                        mono.exponents()
                            .iter()
                            .enumerate()
                            .fold(field.one(), |acc, (i, &e)| field.mul(&acc, &powers[i][e as usize]))
                    })
                    .collect()
            })
            .collect();
        let matrix = ExactMatrix::from_rows(field, monomials.len(), rows).expect("rows have monomial length");
        Self { monomials, matrix }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// Echelon basis of a subspace of `F^k`, each vector keyed by its pivot.
struct EchelonSpan<F: Field> {
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> EchelonSpan<F> {
    fn new() -> Self {
        Self { rows: Vec::new() }
    }

    /// Adds `v` if it is outside the span; returns whether it was.
    fn insert(&mut self, field: &F, mut v: Vec<F::Elem>) -> bool {
        for (pivot, row) in &self.rows {
            if !field.is_zero(&v[*pivot]) {
                let c = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = field.sub(x, &field.mul(&c, r));
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !field.is_zero(x)) else {
            return false;
        };
        let inv = field.inv(&v[pivot]).expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = field.mul(x, &inv);
        }
        for (_, row) in self.rows.iter_mut() {
            if !field.is_zero(&row[pivot]) {
                let c = row[pivot].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    *x = field.sub(x, &field.mul(&c, r));
                }
            }
        }
        self.rows.push((pivot, v));
        true
    }
}

/// Ranks of the evaluation maps in degrees `0..=max_m`.
///
/// Every degree-`m` monomial is a coordinate times a degree-`(m-1)` monomial,
/// so the image in degree `m` is spanned by the coordinatewise products of the
/// coordinate vectors with a basis of the image in degree `m - 1`. This never
/// forms the (possibly huge) monomial matrix.
pub fn evaluation_ranks<F: Field>(z: &PointSet<F>, max_m: u32) -> Vec<usize> {
    let field = z.field();
    if z.is_empty() {
        return vec![0; max_m as usize + 1];
    }
    let coords: Vec<Vec<F::Elem>> =
        (0..=z.ambient_dim()).map(|i| z.points().iter().map(|p| p[i].clone()).collect()).collect();
    let mut basis = vec![vec![field.one(); z.len()]];
    let mut ranks = vec![1];
    for _ in 1..=max_m {
        if basis.len() == z.len() {
            ranks.push(z.len());
            continue;
        }
        let mut span = EchelonSpan::new();
        let mut next = Vec::new();
        'outer: for x in &coords {
            for b in &basis {
                let v: Vec<F::Elem> = x.iter().zip(b).map(|(a, c)| field.mul(a, c)).collect();
                if span.insert(field, v.clone()) {
                    next.push(v);
                    if next.len() == z.len() {
                        break 'outer;
                    }
                }
            }
        }
        ranks.push(next.len());
        basis = next;
    }
    ranks
}

/// Rank of the evaluation map in degree `m` (0 for negative `m`).
pub fn evaluation_rank<F: Field>(z: &PointSet<F>, m: i64) -> usize {
    if m < 0 || z.is_empty() {
        return 0;
    }
    if h0_projective(z.ambient_dim(), m) <= 4 * z.len() as i128 {
        EvaluationMatrix::new(z, m as u32).rank()
    } else {
        evaluation_ranks(z, m as u32)[m as usize]
    }
}

/// `h^0(P^n, I_Z(m))` = #monomials - rank.
pub fn h0_ideal_points<F: Field>(z: &PointSet<F>, m: i64) -> i128 {
    h0_projective(z.ambient_dim(), m) - evaluation_rank(z, m) as i128
}

/// `h^1(P^n, I_Z(m))` = |Z| - rank.
pub fn h1_ideal_points<F: Field>(z: &PointSet<F>, m: i64) -> i128 {
    z.len() as i128 - evaluation_rank(z, m) as i128
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CbOutcome {
    pub holds: bool,
    /// Index of a point violating the property.
    pub witness: Option<usize>,
}

/// Whether every degree-`m` form through all but one point of `Z` passes
/// through the last one too.
///
/// A point fails exactly when its evaluation row is independent of the other
/// rows, i.e. when it lies outside the support of every linear relation among
/// the rows; those relations form the kernel of the transposed matrix.
pub fn cayley_bacharach_check<F: Field>(z: &PointSet<F>, m: i64) -> CbOutcome {
    if z.is_empty() {
        return CbOutcome { holds: true, witness: None };
    }
    if m < 0 {
        // only the zero form exists
        return CbOutcome { holds: true, witness: None };
    }
    let eval = EvaluationMatrix::new(z, m as u32);
    let relations = eval.matrix.transpose().kernel_basis();
    let field = z.field();
    let witness = (0..z.len()).find(|&i| relations.iter().all(|r| field.is_zero(&r[i])));
    CbOutcome { holds: witness.is_none(), witness }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualIdentity {
    pub m: i64,
    pub dual_twist: i64,
    pub lhs: i128,
    pub rhs: i128,
    pub holds: bool,
}

/// Checks `h^0(I_{Z'}(m)) - h^0(I_Z(m)) = h^1(I_{Z''}(d - n - 1 - m))` for the
/// split of `Z` into `first` (Z') and its complement (Z''), all by ranks.
pub fn residual_identity_check<F: Field>(z: &PointSet<F>, first: &[usize], m: i64, degree_sum: i64) -> Result<ResidualIdentity> {
    let n = z.ambient_dim() as i64;
    let dual_twist = degree_sum - n - 1 - m;
    if dual_twist < 0 {
        return Err(Error::InvalidParameters(format!("need m <= d - n - 1 = {}", degree_sum - n - 1)));
    }
    if let Some(ci) = z.ci_type() {
        if ci.degree_sum() != degree_sum {
            return Err(Error::InvalidParameters(format!(
                "degree sum {degree_sum} does not match the grid type {:?}",
                ci.degrees()
            )));
        }
    }
    let mut in_first = vec![false; z.len()];
    for &i in first {
        if i >= z.len() || in_first[i] {
            return Err(Error::InvalidParameters(format!("bad or repeated index {i} in the split")));
        }
        in_first[i] = true;
    }
    let second: Vec<usize> = (0..z.len()).filter(|&i| !in_first[i]).collect();
    let z1 = z.subset(first);
    let z2 = z.subset(&second);
    let lhs = h0_ideal_points(&z1, m) - h0_ideal_points(z, m);
    let rhs = h1_ideal_points(&z2, dual_twist);
    Ok(ResidualIdentity { m, dual_twist, lhs, rhs, holds: lhs == rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::hilbert::{cb_deficiency, hilbert_function};

    fn fp() -> PrimeField {
        PrimeField::new(1_000_003).unwrap()
    }

    /// Literal definition: compare h^0 with each point removed.
    fn cb_brute<F: Field>(z: &PointSet<F>, m: i64) -> Option<usize> {
        let full = h0_ideal_points(z, m);
        (0..z.len()).find(|&i| {
            let rest: Vec<usize> = (0..z.len()).filter(|&j| j != i).collect();
            h0_ideal_points(&z.subset(&rest), m) != full
        })
    }

    #[test]
    fn grid_sizes() {
        let f = fp();
        assert_eq!(build_grid_scheme(&f, 2, &[3, 3], 1).unwrap().len(), 9);
        assert_eq!(build_grid_scheme(&f, 3, &[2, 2, 2], 1).unwrap().len(), 8);
        let z = build_grid_scheme(&f, 4, &[1, 1, 3, 6], 1).unwrap();
        assert_eq!(z.len(), 18);
        // all 18 points lie in the plane cut out by the two linear divisors
        assert_eq!(h0_ideal_points(&z, 1), 2);
        assert!(build_grid_scheme(&f, 2, &[3], 1).is_err());
    }

    #[test]
    fn grid_retries_are_bounded() {
        let f = PrimeField::new(3).unwrap();
        // only 13 points in P^2(F_3): a 5x5 grid cannot exist
        assert!(matches!(build_grid_scheme(&f, 2, &[5, 5], 7), Err(Error::RetriesExhausted { .. })));
    }

    #[test]
    fn nine_point_grid() {
        let f = fp();
        let z = build_grid_scheme(&f, 2, &[3, 3], 11).unwrap();
        assert_eq!(h0_ideal_points(&z, 1), 0);
        // the pencil spanned by the two triangles
        assert_eq!(h0_ideal_points(&z, 3), 2);
        assert_eq!(h0_ideal_points(&z, 9), h0_projective(2, 9) - 9);
        let cb = cayley_bacharach_check(&z, 3);
        assert!(cb.holds);
        assert_eq!(cb_brute(&z, 3), None);
    }

    #[test]
    fn random_points_fail_cb() {
        let f = fp();
        let z = random_points(&f, 2, 9, 5).unwrap();
        let cb = cayley_bacharach_check(&z, 3);
        assert!(!cb.holds);
        assert_eq!(cb.witness, cb_brute(&z, 3));
    }

    #[test]
    fn cb_check_matches_definition() {
        let f = fp();
        for (n, d, seed) in [(2, vec![2, 4], 3u64), (3, vec![2, 2, 3], 4), (4, vec![1, 1, 2, 5], 5)] {
            let z = build_grid_scheme(&f, n, &d, seed).unwrap();
            let sum: i64 = d.iter().map(|&x| x as i64).sum();
            for m in 0..=(sum - n as i64) {
                let fast = cayley_bacharach_check(&z, m);
                assert_eq!(fast.witness, cb_brute(&z, m), "type {d:?} m={m}");
            }
            assert!(cayley_bacharach_check(&z, sum - n as i64 - 1).holds);
        }
    }

    #[test]
    fn serre_configuration_cb() {
        let f = fp();
        for (d1, d2) in [(4u32, 6u32), (3, 5)] {
            let z = residual_configuration(&f, 4, &[d1, d2], 9).unwrap();
            assert_eq!(z.len(), ((d1 - 1) * d2) as usize);
            let d = (d1 + d2) as i64;
            assert!(cayley_bacharach_check(&z, d - 4).holds);
            assert_eq!(h1_ideal_points(&z, d - 4), 1);
        }
    }

    #[test]
    fn residual_examples() {
        let f = fp();
        let z = build_grid_scheme(&f, 2, &[3, 3], 2).unwrap();
        let r = residual_identity_check(&z, &[0, 1, 2, 3, 4, 5, 6, 7], 3, 6).unwrap();
        assert!(r.holds);
        assert_eq!((r.lhs, r.rhs), (0, 0));
        // remove one line of the grid: the points whose first-divisor index is 0
        let Provenance::Grid { .. } = z.provenance() else { panic!() };
        let first: Vec<usize> = (0..9).filter(|k| k % 3 != 0).collect();
        let r = residual_identity_check(&z, &first, 2, 6).unwrap();
        assert!(r.holds, "{r:?}");
        assert!(residual_identity_check(&z, &first, 4, 6).is_err());
        assert!(residual_identity_check(&z, &[0, 0], 1, 6).is_err());
        assert!(residual_identity_check(&z, &first, 1, 7).is_err());
    }

    #[test]
    fn evaluation_ranks_match_closed_form() {
        let f = fp();
        let z = build_grid_scheme(&f, 3, &[2, 3, 3], 8).unwrap();
        let ci = z.ci_type().unwrap();
        for m in 0..=ci.degree_sum() {
            assert_eq!(evaluation_rank(&z, m) as i128, hilbert_function(&ci, m));
            assert_eq!(h1_ideal_points(&z, m), cb_deficiency(&ci, m).unwrap());
        }
    }

    #[test]
    fn span_recursion_matches_matrix_rank() {
        let f = fp();
        for (n, degrees, seed) in [(2, vec![3, 3], 1), (3, vec![1, 2, 5], 2), (4, vec![1, 1, 3, 4], 3)] {
            let z = build_grid_scheme(&f, n, &degrees, seed).unwrap();
            let ranks = evaluation_ranks(&z, 8);
            for m in 0..=8u32 {
                assert_eq!(ranks[m as usize], EvaluationMatrix::new(&z, m).rank(), "{degrees:?} m={m}");
            }
        }
        let z = random_points(&f, 3, 11, 5).unwrap();
        let ranks = evaluation_ranks(&z, 4);
        for m in 0..=4u32 {
            assert_eq!(ranks[m as usize], EvaluationMatrix::new(&z, m).rank());
        }
    }

    #[test]
    fn json_round_trip() {
        let f = fp();
        let z = build_grid_scheme(&f, 2, &[2, 2], 4).unwrap();
        let back = PointSet::from_json(&f, &z.to_json()).unwrap();
        assert_eq!(back.points(), z.points());
        let q = crate::field::Rationals;
        let v = serde_json::json!([[1, "1/2", 0], [0, 1, -3]]);
        let pts = PointSet::from_json(&q, &v).unwrap();
        assert_eq!(pts.len(), 2);
        assert!(PointSet::from_json(&q, &serde_json::json!([[1, 2], [2, 4]])).is_err());
        assert!(PointSet::from_json(&q, &serde_json::json!([[0, 0]])).is_err());
    }
}
