//! Normal bundles of lines and planes via syzygies of restricted partials.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::MultiPoly;
use crate::subspace::LinearSubspace;

use super::{contains_subspace, have_common_zero, syzygy_dimension, SplittingType};

/// Partials of `f` along the coordinate directions complementary to `sub`,
/// restricted to `sub`. These are the components of `N_{sub/P^n} -> O(d)`.
pub fn normal_forms<F: Field>(f: &MultiPoly<F>, sub: &LinearSubspace<F>) -> Result<Vec<MultiPoly<F>>> {
    if f.num_vars() != sub.ambient_dim() + 1 {
        return Err(Error::DimensionMismatch { expected: f.num_vars(), got: sub.ambient_dim() + 1 });
    }
    sub.complement_coordinates()
        .into_iter()
        .map(|j| f.partial_derivative(j).restrict_to_subspace(sub))
        .collect()
}

fn check_contained_with_degree<F: Field>(f: &MultiPoly<F>, sub: &LinearSubspace<F>) -> Result<u32> {
    let d = f.degree();
    if d == 0 {
        return Err(Error::InvalidParameters("hypersurface of degree zero".into()));
    }
    f.field().check_coprime(&[d as u64])?;
    if !contains_subspace(f, sub)? {
        return Err(Error::NotContained);
    }
    Ok(d)
}

/// Splitting type of `N_{l/X}` for a line `l` on the hypersurface `X = {f = 0}`.
pub fn normal_bundle_splitting<F: Field>(f: &MultiPoly<F>, line: &LinearSubspace<F>) -> Result<SplittingType> {
    if line.sub_dim() != 1 {
        return Err(Error::InvalidParameters(format!("expected a line, got a {}-plane", line.sub_dim())));
    }
    let d = check_contained_with_degree(f, line)? as i64;
    let n = line.ambient_dim() as i64;
    let g = normal_forms(f, line)?;
    if have_common_zero(&g)? {
        return Err(Error::SingularAlongSubspace);
    }

    let (lo, hi) = (-d - 2, d);
    // h[k] = h(lo - 1 + k)
    let h: Vec<usize> = (lo - 1..=hi).map(|m| syzygy_dimension(&g, m + 1)).collect::<Result<_>>()?;
    let inc: Vec<i64> = h.windows(2).map(|w| w[1] as i64 - w[0] as i64).collect();
    // inc[k] = #{a_i >= -(lo + k)}; the count with a_i = -m is inc(m) - inc(m - 1)
    let mut twists = Vec::new();
    for (k, &c) in inc.iter().enumerate() {
        let m = lo + k as i64;
        let prev = if k == 0 { 0 } else { inc[k - 1] };
        let count = c - prev;
        if count < 0 {
            return Err(Error::InternalInconsistency(format!("negative multiplicity at m = {m}")));
        }
        twists.extend(std::iter::repeat(-m).take(count as usize));
    }
    let s = SplittingType::new(twists);

    if s.rank() as i64 != n - 2 || s.degree() != (n - 1) - d {
        return Err(Error::InternalInconsistency(format!(
            "recovered {s} has rank {} and degree {}, expected {} and {}",
            s.rank(),
            s.degree(),
            n - 2,
            n - 1 - d
        )));
    }
    for (k, &hm) in h.iter().enumerate() {
        let m = lo - 1 + k as i64;
        if s.sections(m) != hm {
            return Err(Error::InternalInconsistency(format!("{s} predicts h({m}) = {}, kernel gives {hm}", s.sections(m))));
        }
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaneSections {
    /// `h^0(N_{plane/X})`.
    pub h0: usize,
    /// The restricted partials share a zero, so `X` is singular on the plane.
    pub singular: bool,
}

/// Sections of the normal bundle of a plane: linear `(L_0, L_1, L_2)` with
/// `sum L_i F_i = 0` on the plane, where the `F_i` are the normal forms.
pub fn plane_normal_sections<F: Field>(f: &MultiPoly<F>, plane: &LinearSubspace<F>) -> Result<PlaneSections> {
    if plane.sub_dim() != 2 {
        return Err(Error::InvalidParameters(format!("expected a plane, got a {}-plane", plane.sub_dim())));
    }
    check_contained_with_degree(f, plane)?;
    let g = normal_forms(f, plane)?;
    Ok(PlaneSections { h0: syzygy_dimension(&g, 1)?, singular: have_common_zero(&g)? })
}
