//! Linear spaces on special hypersurfaces: enumeration, containment and the
//! local structure of the Fano scheme at each enumerated point.

mod bott;
mod cone;
mod fermat;
mod normal;

use std::collections::HashMap;
use std::fmt;

use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::ExactMatrix;
use crate::poly::{monomial_basis, Monomial, MultiPoly};
use crate::subspace::LinearSubspace;

pub use bott::{bott_line_count, bott_sum, BottCount};
pub use cone::{example46_check, example46_check_forms, restriction_conditions, Example46Report};
pub use fermat::{
    example42_hypersurface, example42_lines, fermat_lines, fermat_planes_p5, fermat_surface, Example42Run,
    FermatHost,
};
pub use normal::{normal_bundle_splitting, normal_forms, plane_normal_sections, PlaneSections};

/// Twists `a_1 >= ... >= a_r` of a split normal bundle `N = sum O(a_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplittingType {
    twists: Vec<i64>,
}

impl SplittingType {
    pub fn new(mut twists: Vec<i64>) -> Self {
        twists.sort_by(|a, b| b.cmp(a));
        Self { twists }
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }
    pub fn rank(&self) -> usize {
        self.twists.len()
    }
    pub fn degree(&self) -> i64 {
        self.twists.iter().sum()
    }

    /// `h^0(N(m))` on the line.
    pub fn sections(&self, m: i64) -> usize {
        self.twists.iter().map(|&a| (a + m + 1).max(0) as usize).sum()
    }

    pub fn h0(&self) -> usize {
        self.sections(0)
    }

    pub fn is_balanced(&self) -> bool {
        match (self.twists.first(), self.twists.last()) {
            (Some(a), Some(b)) => a - b <= 1,
            _ => true,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "twists": self.twists, "rank": self.rank(), "degree": self.degree() })
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.twists.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// One enumerated linear space and what was verified about it.
#[derive(Clone, Debug)]
pub struct FanoItem<F: Field> {
    pub subspace: LinearSubspace<F>,
    pub contained: bool,
    pub h0_normal: usize,
    pub splitting: Option<SplittingType>,
    pub singular: bool,
}

impl<F: Field> FanoItem<F> {
    /// Contained, smooth along it, and without first-order deformations.
    pub fn is_isolated(&self) -> bool {
        self.contained && !self.singular && self.h0_normal == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "subspace": self.subspace.describe(),
            "contained": self.contained,
            "h0_normal": self.h0_normal,
            "splitting": self.splitting.as_ref().map(|s| s.to_json()),
            "singular": self.singular,
        })
    }
}

#[derive(Clone, Debug)]
pub struct FanoReport<F: Field> {
    pub items: Vec<FanoItem<F>>,
    pub component_count: usize,
    pub component_dims: Vec<usize>,
}

impl<F: Field> FanoReport<F> {
    /// Sorts the items canonically; every isolated item is its own
    /// zero-dimensional component.
    pub fn from_items(mut items: Vec<FanoItem<F>>) -> Self {
        items.sort_by(|a, b| a.subspace.cmp(&b.subspace));
        let component_count = items.iter().filter(|i| i.is_isolated()).count();
        Self { items, component_count, component_dims: vec![0; component_count] }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn all_contained(&self) -> bool {
        self.items.iter().all(|i| i.contained)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "items": self.items.iter().map(|i| i.to_json()).collect::<Vec<_>>(),
            "component_count": self.component_count,
            "component_dims": self.component_dims,
        })
    }
}

/// Summary line used by reports that do not need every item.
#[derive(Clone, Debug, Serialize)]
pub struct FanoSummary {
    pub count: usize,
    pub distinct: usize,
    pub all_contained: bool,
    pub isolated: usize,
    pub splittings: Vec<String>,
}

impl<F: Field> From<&FanoReport<F>> for FanoSummary {
    fn from(r: &FanoReport<F>) -> Self {
        let mut splittings: Vec<String> =
            r.items.iter().filter_map(|i| i.splitting.as_ref().map(|s| s.to_string())).collect();
        splittings.sort();
        splittings.dedup();
        let mut subs: Vec<&LinearSubspace<F>> = r.items.iter().map(|i| &i.subspace).collect();
        subs.dedup();
        Self {
            count: r.items.len(),
            distinct: subs.len(),
            all_contained: r.all_contained(),
            isolated: r.component_count,
            splittings,
        }
    }
}

/// `L ⊂ {f = 0}`, decided by restricting `f` to `L`.
pub fn contains_subspace<F: Field>(f: &MultiPoly<F>, sub: &LinearSubspace<F>) -> Result<bool> {
    Ok(f.restrict_to_subspace(sub)?.is_zero())
}

/// Matrix of `(A_1, ..., A_r) -> sum A_i G_i` from `(S_a)^r` to `S_{a+e}`,
/// where the `G_i` are forms of degree `e` in a common ring. Columns are
/// grouped by form, then by monomial of degree `a`.
pub fn multiplication_matrix<F: Field>(forms: &[MultiPoly<F>], coeff_degree: u32) -> Result<ExactMatrix<F>> {
    let Some(first) = forms.first() else {
        return Err(Error::InvalidParameters("need at least one form".into()));
    };
    let (nv, e) = (first.num_vars(), first.degree());
    if let Some(bad) = forms.iter().find(|g| g.num_vars() != nv || g.degree() != e) {
        return Err(Error::NotHomogeneous(format!("mixed form ring/degree: {bad}")));
    }
    let field = first.field();
    let source = monomial_basis(nv, coeff_degree);
    let target = monomial_basis(nv, coeff_degree + e);
    let index: HashMap<&Monomial, usize> = target.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut m = ExactMatrix::zeros(field, target.len(), source.len() * forms.len());
    for (k, g) in forms.iter().enumerate() {
        for (j, mono) in source.iter().enumerate() {
            let col = k * source.len() + j;
            for (t, c) in g.terms() {
                let row = index[&mono.mul(t)];
                let v = field.add(m.get(row, col), c);
                m.set(row, col, v);
            }
        }
    }
    Ok(m)
}

/// `dim {(A_i) in (S_a)^r : sum A_i G_i = 0}`, zero when `a < 0`.
pub fn syzygy_dimension<F: Field>(forms: &[MultiPoly<F>], coeff_degree: i64) -> Result<usize> {
    if coeff_degree < 0 {
        return Ok(0);
    }
    Ok(multiplication_matrix(forms, coeff_degree as u32)?.nullity())
}

/// Whether forms of a common degree `e` in `v` variables vanish together at
/// some point over the algebraic closure.
///
/// No common zero iff they generate an ideal containing all forms of degree
/// `v(e - 1) + 1`, so one rank computation decides it.
pub fn have_common_zero<F: Field>(forms: &[MultiPoly<F>]) -> Result<bool> {
    let Some(first) = forms.first() else {
        return Ok(true);
    };
    let (v, e) = (first.num_vars() as u32, first.degree());
    if e == 0 {
        return Ok(forms.iter().all(|g| g.is_zero()));
    }
    let a = (v - 1) * (e - 1);
    let m = multiplication_matrix(forms, a)?;
    Ok(m.rank() < m.rows())
}

/// Form with independent uniformly random coefficients on every monomial.
pub fn random_form<F: Field, R: Rng + ?Sized>(field: &F, num_vars: usize, degree: u32, rng: &mut R) -> MultiPoly<F> {
    let terms: Vec<(Monomial, F::Elem)> =
        monomial_basis(num_vars, degree).into_iter().map(|m| (m, field.random(rng))).collect();
    MultiPoly::from_terms(field, num_vars, degree, terms).expect("basis monomials share a degree")
}
