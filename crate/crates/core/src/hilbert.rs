//! Closed-form cohomology of complete intersections in `P^n`.
//!
//! Everything here is integer bookkeeping on the Koszul resolution: the
//! Hilbert series `prod_i (1 - t^{e_i}) / (1 - t)^{n+1}`, Serre duality with
//! `K_X = (sum e_i - n - 1) H`, and the restriction sequence
//! `0 -> I_X(m) -> O(m) -> O_X(m) -> 0`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Type of a complete intersection: ambient `P^n` and the degrees of the
/// cutting hypersurfaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CIType {
    n: usize,
    degrees: Vec<u32>,
}

impl CIType {
    pub fn new(n: usize, degrees: &[u32]) -> Result<Self> {
        if degrees.is_empty() || degrees.len() > n {
            return Err(Error::InvalidParameters(format!(
                "codimension {} must lie in [1, {n}]",
                degrees.len()
            )));
        }
        if degrees.contains(&0) {
            return Err(Error::InvalidParameters("degrees must be >= 1".into()));
        }
        let mut degrees = degrees.to_vec();
        degrees.sort_unstable();
        Ok(Self { n, degrees })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }
    pub fn codim(&self) -> usize {
        self.degrees.len()
    }
    pub fn dim(&self) -> usize {
        self.n - self.codim()
    }
    pub fn degree_sum(&self) -> i64 {
        self.degrees.iter().map(|&d| d as i64).sum()
    }
    /// Degree of the subscheme: product of the degrees.
    pub fn degree(&self) -> i64 {
        self.degrees.iter().map(|&d| d as i64).product()
    }
    /// Coefficient `sigma` with `omega_X = O_X(sigma)`.
    pub fn canonical_twist(&self) -> i64 {
        self.degree_sum() - self.n as i64 - 1
    }
}

/// `C(a, k)` extended polynomially to all integers `a` (`k >= 0`).
pub fn binomial(a: i64, k: u32) -> i128 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..k as i128 {
        num *= a as i128 - i;
        den *= i + 1;
    }
    num / den
}

/// `h^0(P^n, O(m))`.
pub fn h0_projective(n: usize, m: i64) -> i128 {
    if m < 0 {
        0
    } else {
        binomial(m + n as i64, n as u32)
    }
}

/// `h^n(P^n, O(m))`, nonzero only for `m <= -n-1`.
pub fn hn_projective(n: usize, m: i64) -> i128 {
    if m > -(n as i64) - 1 {
        0
    } else {
        binomial(-m - 1, n as u32)
    }
}

/// Truncated power series `prod (1 - t^{e_i}) / (1 - t)^{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    coefficients: Vec<i128>,
}

impl HilbertSeries {
    pub fn default_order(ci: &CIType) -> usize {
        ci.degree_sum() as usize + ci.n + 5
    }

    /// Coefficients of `t^0 ..= t^order`.
    pub fn new(ci: &CIType, order: usize) -> Self {
        let mut numerator = vec![0i128; order + 1];
        numerator[0] = 1;
        for &e in &ci.degrees {
            let e = e as usize;
            for k in (e..=order).rev() {
                numerator[k] -= numerator[k - e];
            }
        }
        // divide by (1 - t) exactly n + 1 times: running prefix sums
        let mut coefficients = numerator;
        for _ in 0..=ci.n {
            for k in 1..=order {
                coefficients[k] += coefficients[k - 1];
            }
        }
        Self { coefficients }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, m: usize) -> Option<i128> {
        self.coefficients.get(m).copied()
    }

    pub fn coefficients(&self) -> &[i128] {
        &self.coefficients
    }
}

/// Hilbert function of the coordinate ring. Returns 0 for `m < 0` by
/// convention; that is *not* `h^0(O_X(m))` for zero-dimensional `X`.
pub fn hilbert_function(ci: &CIType, m: i64) -> i128 {
    if m < 0 {
        return 0;
    }
    let order = HilbertSeries::default_order(ci).max(m as usize);
    HilbertSeries::new(ci, order).coefficient(m as usize).expect("order covers m")
}

/// `chi(O_X(m))` straight from the Koszul resolution:
/// `sum_{S subset degrees} (-1)^{|S|} C(m - sum S + n, n)`.
pub fn koszul_euler_characteristic(ci: &CIType, m: i64) -> i128 {
    let c = ci.degrees.len();
    (0u32..1 << c)
        .map(|mask| {
            let (size, sum) = (0..c)
                .filter(|i| mask >> i & 1 == 1)
                .fold((0u32, 0i64), |(s, t), i| (s + 1, t + ci.degrees[i] as i64));
            let sign = if size % 2 == 0 { 1 } else { -1 };
            sign * binomial(m - sum + ci.n as i64, ci.n as u32)
        })
        .sum()
}

/// Cohomology dimensions `h^0 ..= h^k` of a sheaf at one twist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub twist: i64,
    pub h: Vec<i128>,
    pub euler: i128,
}

impl CohomologyTable {
    fn from_values(twist: i64, h: Vec<i128>) -> Result<Self> {
        if let Some(bad) = h.iter().find(|&&x| x < 0) {
            return Err(Error::InternalInconsistency(format!("negative cohomology dimension {bad}")));
        }
        let euler = h.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x } else { -x }).sum();
        Ok(Self { twist, h, euler })
    }

    pub fn get(&self, i: usize) -> i128 {
        self.h.get(i).copied().unwrap_or(0)
    }
}

fn h0_structure(ci: &CIType, m: i64) -> i128 {
    if ci.dim() == 0 {
        ci.degree() as i128
    } else if m < 0 {
        0
    } else {
        hilbert_function(ci, m)
    }
}

/// `h^i(X, O_X(m))` for `i = 0 ..= dim X`.
///
/// Cross-checks the resulting Euler characteristic against
/// [`koszul_euler_characteristic`].
pub fn structure_sheaf_cohomology(ci: &CIType, m: i64) -> Result<CohomologyTable> {
    let dim = ci.dim();
    let mut h = vec![0i128; dim + 1];
    h[0] = h0_structure(ci, m);
    if dim > 0 {
        h[dim] = h0_structure(ci, ci.canonical_twist() - m);
    }
    let table = CohomologyTable::from_values(m, h)?;
    let chi = koszul_euler_characteristic(ci, m);
    if table.euler != chi {
        return Err(Error::InternalInconsistency(format!(
            "chi(O_X({m})) = {} from the table but {chi} from the Koszul sum for {ci:?}",
            table.euler
        )));
    }
    Ok(table)
}

/// `h^i(P^n, I_X(m))` for `i = 0 ..= n`.
pub fn ideal_sheaf_cohomology(ci: &CIType, m: i64) -> Result<CohomologyTable> {
    let n = ci.n;
    let ox = structure_sheaf_cohomology(ci, m)?;
    let mut h = vec![0i128; n + 1];
    // restriction on global sections is surjective for complete intersections
    // of positive dimension; for points the cokernel is h^1.
    if ci.dim() == 0 {
        let rank = hilbert_function(ci, m);
        h[0] = h0_projective(n, m) - rank;
        h[1] = ci.degree() as i128 - rank + if n == 1 { hn_projective(1, m) } else { 0 };
    } else {
        h[0] = h0_projective(n, m) - ox.get(0);
    }
    for (i, slot) in h.iter_mut().enumerate().take(n).skip(2) {
        *slot = ox.get(i - 1);
    }
    if n >= 2 {
        h[n] = ox.get(n - 1) + hn_projective(n, m);
    }
    let table = CohomologyTable::from_values(m, h)?;
    let chi = chi_projective(n, m) - ox.euler;
    if table.euler != chi {
        return Err(Error::InternalInconsistency(format!(
            "chi(I_X({m})) = {} from the table but {chi} from additivity",
            table.euler
        )));
    }
    Ok(table)
}

/// `chi(P^n, O(m)) = C(m + n, n)` as a polynomial in `m`.
pub fn chi_projective(n: usize, m: i64) -> i128 {
    binomial(m + n as i64, n as u32)
}

/// `h^1(P^n, I_Z(m)) = deg Z - HF_Z(m)` for zero-dimensional `Z`.
pub fn cb_deficiency(ci: &CIType, m: i64) -> Result<i128> {
    if ci.dim() != 0 {
        return Err(Error::InvalidParameters(format!(
            "Cayley-Bacharach deficiency needs a zero-dimensional type, got dimension {}",
            ci.dim()
        )));
    }
    Ok(ci.degree() as i128 - hilbert_function(ci, m))
}

#[derive(Serialize)]
pub struct CohomologyJson<'a> {
    pub n: usize,
    pub degrees: &'a [u32],
    pub twist: i64,
    pub h: &'a [i128],
    pub chi: i128,
}

impl CohomologyTable {
    pub fn to_json(&self, ci: &CIType) -> serde_json::Value {
        serde_json::to_value(CohomologyJson {
            n: ci.n,
            degrees: &ci.degrees,
            twist: self.twist,
            h: &self.h,
            chi: self.euler,
        })
        .expect("plain data serializes")
    }
}
