//! Numerical profile of the rank-2 bundle `E` on a complete intersection
//! surface `X = D_1 ∩ ... ∩ D_{n-2}` in `P^n`. Here `Φ ⊂ D_1` is an
//! `(n-3)`-plane, `Λ ⊃ Φ` an `(n-2)`-plane, and `Z` is residual to `X ∩ Φ`
//! in `X ∩ Λ`.
//!
//! `E` sits in `0 -> O_X -> E -> I_Z(1) -> 0`, with `c_1 = H` and
//! `c_2 = deg Z = (d_1 - 1) e`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::cayley_bacharach::{build_grid_scheme, h0_ideal_points};
use crate::error::{Error, Result};
use crate::fano::{
    bott_line_count, contains_subspace, example42_lines, example46_check, fermat_planes_p5, plane_normal_sections,
};
use crate::field::PrimeField;
use crate::hilbert::{cb_deficiency, ideal_sheaf_cohomology, structure_sheaf_cohomology, CIType};
use crate::poly::MultiPoly;
use crate::subspace::LinearSubspace;

/// Admissible `(n, d_1 < d_2 <= ... <= d_{n-2})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BundleParams {
    pub n: usize,
    pub degrees: Vec<u32>,
    /// `d = sum d_i`.
    pub d: i64,
    /// `e = prod_{i >= 2} d_i`.
    pub e: i64,
    /// `1` when `d_1 = 2`.
    pub delta: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

/// Validates the degrees; errors name the violated inequality.
pub fn check_parameters(n: usize, degrees: &[u32]) -> Result<BundleParams> {
    let bad = |msg: String| Err(Error::InvalidParameters(msg));
    if n < 4 {
        return bad(format!("need n >= 4, got {n}"));
    }
    if degrees.len() != n - 2 {
        return bad(format!("need n - 2 = {} degrees, got {}", n - 2, degrees.len()));
    }
    let d1 = degrees[0];
    if d1 < 2 || (d1 == 2 && n > 5) {
        return bad(format!("need d_1 > 2 (d_1 = 2 only for n = 4, 5), got d_1 = {d1}"));
    }
    if degrees[1] <= d1 {
        return bad(format!("need d_1 < d_2, got {d1} >= {}", degrees[1]));
    }
    if let Some(w) = degrees[1..].windows(2).find(|w| w[0] > w[1]) {
        return bad(format!("need d_2 <= ... <= d_{{n-2}}, got {} > {}", w[0], w[1]));
    }
    let d: i64 = degrees.iter().map(|&x| x as i64).sum();
    if d < n as i64 + 1 {
        return bad(format!("need d = sum d_i >= n + 1 = {}, got {d}", n + 1));
    }
    let e = degrees[1..].iter().map(|&x| x as i64).product();
    Ok(BundleParams { n, degrees: degrees.to_vec(), d, e, delta: (d1 == 2) as i64 })
}

impl BundleParams {
    pub fn d1(&self) -> u32 {
        self.degrees[0]
    }

    pub fn surface_type(&self) -> CIType {
        CIType::new(self.n, &self.degrees).expect("validated")
    }

    /// `Z` is cut from `X` by two hyperplanes and the residual factor of `D_1`.
    pub fn z_type(&self) -> CIType {
        let mut deg = vec![1, 1, self.d1() - 1];
        deg.extend_from_slice(&self.degrees[1..]);
        CIType::new(self.n, &deg).expect("validated")
    }

    /// `K_X = O_X(d - n - 1)`.
    pub fn canonical_twist(&self) -> i64 {
        self.d - self.n as i64 - 1
    }

    /// The extra degree conditions of the main existence theorem.
    pub fn theorem_hypotheses(&self) -> Vec<Hypothesis> {
        let mut out = vec![Hypothesis { name: "2 < d_1".into(), holds: self.d1() > 2 }];
        if self.n == 4 {
            out.push(Hypothesis { name: "d_1 >= 4 (n = 4)".into(), holds: self.d1() >= 4 });
            out.push(Hypothesis { name: "d_2 >= 6 (n = 4)".into(), holds: self.degrees[1] >= 6 });
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChernData {
    pub rank: u32,
    /// In units of `H`.
    pub c1: i64,
    pub c2: i64,
    pub chi: i128,
}

/// `chi(E) = chi(O_X) + chi(O_X(1)) - deg Z`.
pub fn chern_data(p: &BundleParams) -> Result<ChernData> {
    let x = p.surface_type();
    let c2 = (p.d1() as i64 - 1) * p.e;
    if c2 != p.z_type().degree() {
        return Err(Error::InternalInconsistency(format!("deg Z = {} but c_2 = {c2}", p.z_type().degree())));
    }
    let chi = structure_sheaf_cohomology(&x, 0)?.euler + structure_sheaf_cohomology(&x, 1)?.euler - c2 as i128;
    Ok(ChernData { rank: 2, c1: 1, c2, chi })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BundleCohomology {
    pub h0: i128,
    pub h1: i128,
    pub h2: i128,
    pub chi: i128,
    /// `h^0(X, I_Z(1))`.
    pub h0_ideal_z_1: i128,
    /// `h^2(E)` from Euler characteristics and from global sections.
    pub h2_routes: [i128; 2],
}

/// `h^0`, `h^1`, `h^2` of `E`.
///
/// `h^2(E) = h^0(E(d - n - 2))` by duality, and twisting the defining
/// sequence gives two independent evaluations:
/// `chi(O_X(d-n-2)) + chi(I_Z(d-n-1)) - 3 - delta` and
/// `h^0(O_X(d-n-2)) + h^0(P^n, I_Z(d-n-1)) - h^0(P^n, I_X(d-n-1))`.
pub fn cohomology_of_e(p: &BundleParams) -> Result<BundleCohomology> {
    let (x, z) = (p.surface_type(), p.z_type());
    let chern = chern_data(p)?;
    let h0_ideal = |m: i64| -> Result<i128> { Ok(ideal_sheaf_cohomology(&z, m)?.get(0) - ideal_sheaf_cohomology(&x, m)?.get(0)) };
    let h0_ideal_z_1 = h0_ideal(1)?;
    let h0 = 1 + h0_ideal_z_1;

    let k = p.canonical_twist();
    let chi_iz = structure_sheaf_cohomology(&x, k)?.euler - chern.c2 as i128;
    let by_chi = structure_sheaf_cohomology(&x, k - 1)?.euler + chi_iz - 3 - p.delta as i128;
    let by_sections = structure_sheaf_cohomology(&x, k - 1)?.get(0) + h0_ideal(k)?;
    if by_chi != by_sections {
        return Err(Error::InternalInconsistency(format!("h^2(E): {by_chi} from chi, {by_sections} from sections")));
    }
    let h1 = h0 + by_chi - chern.chi;
    if h1 != 0 {
        return Err(Error::InternalInconsistency(format!("h^1(E) = {h1} for {p:?}")));
    }
    Ok(BundleCohomology { h0, h1, h2: by_chi, chi: chern.chi, h0_ideal_z_1, h2_routes: [by_chi, by_sections] })
}

/// `h^1(X, I_Z(d - n)) = h^1(P^n, I_Z(d - n))`, the dimension of the
/// extension group that produces `E`.
pub fn ext1_check(p: &BundleParams) -> Result<i128> {
    cb_deficiency(&p.z_type(), p.d - p.n as i64)
}

/// `h^1(P^n, I_Z(d - n - 1))`.
pub fn z_deficiency_below(p: &BundleParams) -> Result<i128> {
    cb_deficiency(&p.z_type(), p.d - p.n as i64 - 1)
}

/// `h^0(P^n, I_Z(1))` from the rank of the evaluation matrix of a grid
/// realization of `Z`.
pub fn span_certificate(field: &PrimeField, p: &BundleParams, seed: u64) -> Result<i128> {
    let z = p.z_type();
    let pts = build_grid_scheme(field, p.n, z.degrees(), seed)?;
    Ok(h0_ideal_points(&pts, 1))
}

/// The worked families of special `D_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Example {
    Quintic,
    Fermat4,
    Spinor,
    Fermat5,
    Cone46,
}

impl Example {
    pub const ALL: [Example; 5] = [Example::Quintic, Example::Fermat4, Example::Spinor, Example::Fermat5, Example::Cone46];

    pub fn name(self) -> &'static str {
        match self {
            Example::Quintic => "quintic",
            Example::Fermat4 => "fermat4",
            Example::Spinor => "spinor",
            Example::Fermat5 => "fermat5",
            Example::Cone46 => "cone46",
        }
    }

    /// Ambient dimension of the example.
    pub fn n(self) -> usize {
        match self {
            Example::Quintic | Example::Fermat4 | Example::Cone46 => 4,
            Example::Spinor | Example::Fermat5 => 5,
        }
    }

    /// Root orders the field must support.
    pub fn root_orders(self, d1: u32) -> Vec<u64> {
        match self {
            Example::Fermat4 | Example::Fermat5 => vec![d1 as u64],
            _ => Vec::new(),
        }
    }

    /// Small default degrees satisfying the example's hypotheses.
    pub fn default_degrees(self) -> Vec<u32> {
        match self {
            Example::Quintic => vec![5, 6],
            Example::Fermat4 => vec![6, 7],
            Example::Spinor => vec![2, 3, 3],
            Example::Fermat5 => vec![3, 4, 4],
            Example::Cone46 => vec![6, 7],
        }
    }

    fn check(self, p: &BundleParams) -> Result<()> {
        let (d1, d2) = (p.d1(), p.degrees[1]);
        let ok = p.n == self.n()
            && match self {
                Example::Quintic => d1 == 5 && d2 >= 6,
                Example::Fermat4 => d1 >= 6,
                Example::Spinor => d1 == 2 && d2 >= 3,
                Example::Fermat5 => d1 >= 3,
                Example::Cone46 => d1 > 5,
            };
        if ok {
            Ok(())
        } else {
            let need = match self {
                Example::Quintic => "n = 4, d_1 = 5, d_2 >= 6",
                Example::Fermat4 => "n = 4, d_1 >= 6, d_2 > d_1",
                Example::Spinor => "n = 5, d_1 = 2, d_2, d_3 >= 3",
                Example::Fermat5 => "n = 5, d_1 >= 3, d_2, d_3 > d_1",
                Example::Cone46 => "n = 4, d_1 > 5, d_2 > d_1",
            };
            Err(Error::InvalidParameters(format!("{} needs {need}; got n = {}, degrees {:?}", self.name(), p.n, p.degrees)))
        }
    }
}

impl fmt::Display for Example {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Example {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Example::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown example {s:?}; expected one of quintic, fermat4, spinor, fermat5, cone46")))
    }
}

/// Moduli components obtained from the Fano scheme of `D_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub example: String,
    pub count: u64,
    /// Dimension of each moduli component.
    pub dim: usize,
    /// Machine-checked facts the count rests on.
    pub checked: Vec<String>,
    /// Hypotheses taken from the setting, not verified here.
    pub assumed: Vec<String>,
}

/// Planes `z0 = z1 = z2 = 0`, `z3 = z4 = z5 = 0`, `z0 = z1 = z5 = 0` on the
/// quadric `z0 z3 + z1 z4 + z2 z5`, sorted into rulings by the parity of
/// pairwise intersection dimensions. Returns the number of rulings met and
/// `h^0(N)` of each plane.
fn spinor_certificate(field: &PrimeField) -> Result<(usize, Vec<usize>)> {
    let quadric = MultiPoly::parse(field, 6, "z0*z3 + z1*z4 + z2*z5")?;
    let planes = [
        LinearSubspace::coordinate(field, 5, &[3, 4, 5])?,
        LinearSubspace::coordinate(field, 5, &[0, 1, 2])?,
        LinearSubspace::coordinate(field, 5, &[2, 3, 4])?,
    ];
    let mut sections = Vec::new();
    for pl in &planes {
        if !contains_subspace(&quadric, pl)? {
            return Err(Error::InternalInconsistency("reference plane not on the quadric".into()));
        }
        let s = plane_normal_sections(&quadric, pl)?;
        if s.singular {
            return Err(Error::InternalInconsistency("smooth quadric reported singular".into()));
        }
        sections.push(s.h0);
    }
    // two planes lie in the same ruling iff their intersection has even dimension
    let same = |a: &LinearSubspace<PrimeField>, b: &LinearSubspace<PrimeField>| -> Result<bool> {
        Ok(a.intersection_dim(b)?.rem_euclid(2) == 0)
    };
    let class: Vec<bool> = planes.iter().map(|pl| same(&planes[0], pl)).collect::<Result<_>>()?;
    for i in 0..planes.len() {
        for j in i + 1..planes.len() {
            if same(&planes[i], &planes[j])? != (class[i] == class[j]) {
                return Err(Error::InternalInconsistency("ruling parity is not an equivalence".into()));
            }
        }
    }
    let rulings = 1 + class.iter().any(|&c| !c) as usize;
    Ok((rulings, sections))
}

/// Component count and dimension for `example` at `degrees`.
pub fn component_report(example: Example, degrees: &[u32], field: &PrimeField, seed: u64) -> Result<ComponentReport> {
    let p = check_parameters(example.n(), degrees)?;
    example.check(&p)?;
    let d1 = p.d1();
    let very_general = match p.n {
        4 => "D_2 very general".to_string(),
        n => format!("D_2, ..., D_{} very general", n - 2),
    };
    let pic = "Pic(X) = Z H".to_string();
    let report = match example {
        Example::Quintic => {
            let b = bott_line_count(4, 5, seed)?;
            ComponentReport {
                example: example.name().into(),
                count: u64::try_from(&b.count).map_err(|_| Error::InternalInconsistency("line count overflow".into()))?,
                dim: 0,
                checked: vec![format!("localization count {} agrees for two weight sets", b.count)],
                assumed: vec!["D_1 general quintic: finitely many lines, each isolated".into(), very_general, pic],
            }
        }
        Example::Fermat4 => {
            let run = example42_lines(field, d1, seed)?;
            let r = &run.report;
            ComponentReport {
                example: example.name().into(),
                count: r.component_count as u64,
                dim: 0,
                checked: vec![
                    format!("{} lines contained in D_1", r.items.iter().filter(|i| i.contained).count()),
                    format!("splitting {} and h0(N) = 0 on every line", run.expected),
                    format!("{} redraws of g", run.redraws),
                ],
                assumed: vec!["D_1 smooth for general g".into(), very_general, pic],
            }
        }
        Example::Spinor => {
            let (rulings, sections) = spinor_certificate(field)?;
            ComponentReport {
                example: example.name().into(),
                count: rulings as u64,
                dim: 0,
                checked: vec![
                    format!("reference planes meet {rulings} rulings by intersection parity"),
                    format!("h0(N) = {sections:?} for the reference planes"),
                ],
                assumed: vec!["each ruling of planes gives a unique bundle".into(), very_general, pic],
            }
        }
        Example::Fermat5 => {
            let r = fermat_planes_p5(field, d1)?;
            ComponentReport {
                example: example.name().into(),
                count: r.component_count as u64,
                dim: 0,
                checked: vec![
                    format!("{} planes contained in D_1", r.items.iter().filter(|i| i.contained).count()),
                    "h0(N) = 0 and no common zero of normal forms on every plane".into(),
                ],
                assumed: vec![very_general, pic],
            }
        }
        Example::Cone46 => {
            let r = example46_check(field, d1, seed)?;
            ComponentReport {
                example: example.name().into(),
                count: r.families_verified as u64,
                dim: 1,
                checked: vec![
                    format!("{} cones of lines verified by {} sampled rulings each", r.families_verified, r.rulings_per_family),
                    format!("condition ranks {} and {} exceed dim U = {}", r.rank_m1, r.rank_m2, r.dim_u),
                ],
                assumed: vec![
                    "no lines off the cones for general g, h (only the rank bound is checked)".into(),
                    "D_1 smooth".into(),
                    very_general,
                    pic,
                ],
            }
        }
    };
    Ok(report)
}

/// Everything known about `E` for one parameter set.
#[derive(Clone, Debug, Serialize)]
pub struct BundleReport {
    pub params: BundleParams,
    pub chern: ChernData,
    pub cohomology: BundleCohomology,
    pub ext1: i128,
    pub z_deficiency: i128,
    pub hypotheses: Vec<Hypothesis>,
    pub components: Vec<ComponentReport>,
    /// `4 c_2 - c_1^2 - 3 chi(O_X)`, informational only.
    pub expected_dim: i128,
}

pub fn bundle_report(p: &BundleParams, components: Vec<ComponentReport>) -> Result<BundleReport> {
    let chern = chern_data(p)?;
    let cohomology = cohomology_of_e(p)?;
    let chi_ox = structure_sheaf_cohomology(&p.surface_type(), 0)?.euler;
    let c1_sq = (p.d1() as i64 * p.e) as i128;
    Ok(BundleReport {
        params: p.clone(),
        expected_dim: 4 * chern.c2 as i128 - c1_sq - 3 * chi_ox,
        chern,
        cohomology,
        ext1: ext1_check(p)?,
        z_deficiency: z_deficiency_below(p)?,
        hypotheses: p.theorem_hypotheses(),
        components,
    })
}

impl BundleReport {
    pub fn to_json(&self) -> Value {
        let p = &self.params;
        json!({
            "params": {
                "n": p.n, "degrees": p.degrees, "d": p.d, "e": p.e,
                "canonical_twist": p.canonical_twist(), "delta": p.delta,
            },
            "chern": { "r": self.chern.rank, "c1": self.chern.c1, "c2": self.chern.c2 },
            "slope": "1/2",
            "h": [self.cohomology.h0 as i64, self.cohomology.h1 as i64, self.cohomology.h2 as i64],
            "chi": self.cohomology.chi as i64,
            "h2_routes": [self.cohomology.h2_routes[0] as i64, self.cohomology.h2_routes[1] as i64],
            "ext1": self.ext1 as i64,
            "h1_ideal_z_below": self.z_deficiency as i64,
            "components": self.components.iter().map(|c| json!({"example": c.example, "count": c.count, "dim": c.dim})).collect::<Vec<_>>(),
            "checked": self.components.iter().flat_map(|c| c.checked.iter().map(move |s| format!("{}: {s}", c.example))).collect::<Vec<_>>(),
            "assumed": self.components.iter().flat_map(|c| c.assumed.iter().map(move |s| format!("{}: {s}", c.example))).collect::<Vec<_>>(),
            "hypotheses": self.hypotheses,
            "expected_dim": { "value": self.expected_dim as i64, "source": "standard-theory" },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::hilbert_function;

    fn params(n: usize, d: &[u32]) -> BundleParams {
        check_parameters(n, d).unwrap()
    }

    #[test]
    fn chern_examples() {
        assert_eq!(chern_data(&params(4, &[4, 6])).unwrap().c2, 18);
        let p = params(5, &[2, 3, 4]);
        assert_eq!((p.e, chern_data(&p).unwrap().c2), (12, 12));
        assert_eq!(chern_data(&params(4, &[6, 7])).unwrap().c2, 35);
    }

    #[test]
    fn cohomology_examples() {
        let c = cohomology_of_e(&params(4, &[4, 6])).unwrap();
        assert_eq!((c.h0, c.h1, c.h2, c.chi), (3, 0, 175, 178));
        let c = cohomology_of_e(&params(5, &[2, 3, 4])).unwrap();
        assert_eq!((c.h0, c.h1), (4, 0));
    }

    /// `chi(E)` via Riemann-Roch on the surface: with `K = k H`, `H^2 = deg X`,
    /// `chi(E) = 2 chi(O_X) + (c_1^2 - 2 c_2)/2 - c_1 K / 2`.
    #[test]
    fn chi_matches_riemann_roch() {
        for (n, d) in [(4, vec![4u32, 6]), (4, vec![3, 5]), (5, vec![3, 4, 5]), (6, vec![3, 4, 4, 5])] {
            let p = params(n, &d);
            let deg_x = (p.d1() as i64 * p.e) as i128;
            let k = p.canonical_twist() as i128;
            let chi_o = structure_sheaf_cohomology(&p.surface_type(), 0).unwrap().euler;
            let c2 = chern_data(&p).unwrap().c2 as i128;
            let twice = 4 * chi_o + deg_x - 2 * c2 - k * deg_x;
            assert_eq!(twice % 2, 0);
            assert_eq!(chern_data(&p).unwrap().chi, twice / 2, "{n} {d:?}");
        }
    }

    #[test]
    fn ext1_examples() {
        assert_eq!(ext1_check(&params(4, &[4, 6])).unwrap(), 1);
        assert_eq!(ext1_check(&params(5, &[3, 4, 5])).unwrap(), 1);
        // deficiency of (1,1,1,6) at twist 4 is HF(0) by Gorenstein symmetry
        let p = params(4, &[2, 6]);
        assert_eq!(p.z_type().degrees(), &[1, 1, 1, 6]);
        assert_eq!(ext1_check(&p).unwrap(), hilbert_function(&p.z_type(), 0));
        assert_eq!(ext1_check(&p).unwrap(), 1);
    }

    #[test]
    fn sweep_invariants() {
        let mut count = 0;
        for n in 4..=6usize {
            let mut stack: Vec<Vec<u32>> = (2..=6).map(|d1| vec![d1]).collect();
            while let Some(deg) = stack.pop() {
                if deg.len() < n - 2 {
                    let lo = if deg.len() == 1 { deg[0] + 1 } else { *deg.last().unwrap() };
                    for next in lo..=7 {
                        let mut d = deg.clone();
                        d.push(next);
                        stack.push(d);
                    }
                    continue;
                }
                let Ok(p) = check_parameters(n, &deg) else { continue };
                let c = cohomology_of_e(&p).unwrap();
                assert_eq!(c.h0, 3 + p.delta as i128);
                assert_eq!(c.h0 - c.h1 + c.h2, c.chi);
                assert_eq!(ext1_check(&p).unwrap(), 1);
                assert_eq!(z_deficiency_below(&p).unwrap(), n as i128 - 1 - p.delta as i128);
                assert_eq!(c.h0_ideal_z_1, 2 + p.delta as i128);
                count += 1;
            }
        }
        assert_eq!(count, 85);
    }

    #[test]
    fn admissibility_messages() {
        let msg = |n, d: &[u32]| check_parameters(n, d).unwrap_err().to_string();
        assert!(msg(3, &[4]).contains("n >= 4"));
        assert!(msg(4, &[4, 6, 7]).contains("2 degrees"));
        assert!(msg(4, &[6, 6]).contains("d_1 < d_2"));
        assert!(msg(6, &[2, 3, 4, 5]).contains("d_1 > 2"));
        assert!(msg(5, &[3, 5, 4]).contains("<="));
        assert!(check_parameters(4, &[2, 3]).is_ok());
        let hyp = params(4, &[3, 5]).theorem_hypotheses();
        assert!(hyp.iter().any(|h| !h.holds));
    }

    #[test]
    fn span_certificate_matches_closed_form() {
        let f = PrimeField::new(1_000_003).unwrap();
        for (n, d) in [(4, vec![4u32, 6]), (4, vec![2, 6]), (5, vec![3, 4, 5])] {
            let p = params(n, &d);
            assert_eq!(span_certificate(&f, &p, 3).unwrap(), 2 + p.delta as i128);
        }
    }

    #[test]
    fn components() {
        let f = PrimeField::new(1_000_003).unwrap();
        let r = component_report(Example::Quintic, &[5, 6], &f, 1).unwrap();
        assert_eq!((r.count, r.dim), (2875, 0));
        let r = component_report(Example::Spinor, &[2, 3, 3], &f, 1).unwrap();
        assert_eq!((r.count, r.dim), (2, 0));
        assert!(r.checked[1].contains("[3, 3, 3]"));
        let r = component_report(Example::Cone46, &[6, 7], &f, 1).unwrap();
        assert_eq!((r.count, r.dim), (6, 1));
        assert!(component_report(Example::Fermat4, &[5, 6], &f, 1).is_err());
        assert!(component_report(Example::Quintic, &[4, 6], &f, 1).is_err());
    }

    #[test]
    fn example_names_round_trip() {
        for e in Example::ALL {
            assert_eq!(e.name().parse::<Example>().unwrap(), e);
        }
        assert!("sextic".parse::<Example>().is_err());
    }
}
