//! Lines and planes on Fermat-type hypersurfaces, enumerated by coordinate
//! pairings and roots of `x^d = +-1`.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Residue};
use crate::poly::{Monomial, MultiPoly};
use crate::primes::nth_roots;
use crate::subspace::LinearSubspace;

use super::{contains_subspace, normal_bundle_splitting, plane_normal_sections, random_form, FanoItem, FanoReport, SplittingType};

/// Where the Fermat lines are studied.
#[derive(Clone, Debug)]
pub enum FermatHost {
    /// `z0^d - z1^d + z2^d - z3^d` in `P^3`.
    Surface,
    /// `z0^d - z1^d + z2^d - z3^d + z4 g` in `P^4`, lines lifted by `z4 = 0`.
    Threefold { g: MultiPoly<PrimeField> },
}

const SIGNS: [i64; 4] = [1, -1, 1, -1];
const PAIRINGS: [[(usize, usize); 2]; 3] = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];

/// The alternating Fermat form in `num_vars >= 4` variables (extra variables unused).
pub fn fermat_surface(field: &PrimeField, num_vars: usize, d: u32) -> MultiPoly<PrimeField> {
    let terms = (0..4).map(|i| {
        let mut e = vec![0; num_vars];
        e[i] = d;
        (Monomial::new(e), field.from_i64(SIGNS[i]))
    });
    MultiPoly::from_terms(field, num_vars, d, terms).expect("terms share degree d")
}

/// `z0^d - z1^d + z2^d - z3^d + z4 g` with `deg g = d - 1`.
pub fn example42_hypersurface(field: &PrimeField, d: u32, g: &MultiPoly<PrimeField>) -> Result<MultiPoly<PrimeField>> {
    if g.num_vars() != 5 || g.degree() + 1 != d {
        return Err(Error::InvalidParameters(format!(
            "g must be a form of degree {} in 5 variables",
            d.saturating_sub(1)
        )));
    }
    fermat_surface(field, 5, d).add(&MultiPoly::var(field, 5, 4).mul(g)?)
}

fn vectors_for(ambient: usize, pairs: &[(usize, usize)], ratios: &[Residue], field: &PrimeField) -> Vec<Vec<Residue>> {
    // z_i = a z_j on each pair (i, j): spanned by e_j + a e_i
    pairs
        .iter()
        .zip(ratios)
        .map(|(&(i, j), a)| {
            let mut v = vec![field.zero(); ambient];
            v[j] = field.one();
            v[i] = *a;
            v
        })
        .collect()
}

/// All `3 d^2` lines on the Fermat surface, studied on `host`.
pub fn fermat_lines(field: &PrimeField, d: u32, host: &FermatHost) -> Result<FanoReport<PrimeField>> {
    if d < 1 {
        return Err(Error::InvalidParameters("degree must be positive".into()));
    }
    field.check_coprime(&[d as u64, d.saturating_sub(1) as u64])?;
    let (ambient, f) = match host {
        FermatHost::Surface => (4, fermat_surface(field, 4, d)),
        FermatHost::Threefold { g } => (5, example42_hypersurface(field, d, g)?),
    };
    let surface = fermat_surface(field, 4, d);

    let mut candidates = Vec::new();
    for pairs in PAIRINGS {
        // z_i = a z_j on {f = 0} needs eps_i a^d + eps_j = 0
        let roots: Vec<Vec<Residue>> = pairs
            .iter()
            .map(|&(i, j)| nth_roots(field, d as u64, (-SIGNS[j] * SIGNS[i]) as i8))
            .collect::<Result<_>>()?;
        for a in &roots[0] {
            for b in &roots[1] {
                candidates.push((pairs, [*a, *b]));
            }
        }
    }

    let items: Vec<FanoItem<PrimeField>> = candidates
        .par_iter()
        .map(|(pairs, ratios)| -> Result<FanoItem<PrimeField>> {
            let on_surface = LinearSubspace::new(field, vectors_for(4, pairs, ratios, field))?;
            if !contains_subspace(&surface, &on_surface)? {
                return Err(Error::InternalInconsistency(format!("{:?} misses the Fermat surface", on_surface.describe())));
            }
            let line = LinearSubspace::new(field, vectors_for(ambient, pairs, ratios, field))?;
            let contained = contains_subspace(&f, &line)?;
            let splitting = normal_bundle_splitting(&f, &line)?;
            Ok(FanoItem { h0_normal: splitting.h0(), subspace: line, contained, splitting: Some(splitting), singular: false })
        })
        .collect::<Result<_>>()?;

    let distinct: HashSet<&LinearSubspace<PrimeField>> = items.iter().map(|i| &i.subspace).collect();
    if distinct.len() != 3 * (d * d) as usize {
        return Err(Error::InternalInconsistency(format!("{} distinct lines, expected {}", distinct.len(), 3 * d * d)));
    }
    Ok(FanoReport::from_items(items))
}

/// Outcome of the threefold example: the lines, the `g` that was used, and how
/// many draws of `g` were discarded.
#[derive(Clone, Debug)]
pub struct Example42Run {
    pub report: FanoReport<PrimeField>,
    pub g: MultiPoly<PrimeField>,
    pub redraws: usize,
    pub expected: SplittingType,
}

/// Draws `g` until every Fermat line on `z0^d - z1^d + z2^d - z3^d + z4 g`
/// has the balanced splitting of degree `3 - d`.
pub fn example42_lines(field: &PrimeField, d: u32, seed: u64) -> Result<Example42Run> {
    const ATTEMPTS: usize = 8;
    if d < 2 {
        return Err(Error::InvalidParameters("degree must be at least 2".into()));
    }
    let deg = 3 - d as i64;
    let expected = SplittingType::new(vec![deg.div_euclid(2), deg - deg.div_euclid(2)]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..ATTEMPTS {
        let g = random_form(field, 5, d - 1, &mut rng);
        let outcome = fermat_lines(field, d, &FermatHost::Threefold { g: g.clone() });
        match outcome {
            Ok(report) if report.items.iter().all(|i| i.splitting.as_ref() == Some(&expected)) => {
                return Ok(Example42Run { report, g, redraws: attempt, expected });
            }
            Ok(_) => log::warn!("draw {attempt} of g gives a non-generic splitting; redrawing"),
            Err(Error::SingularAlongSubspace) => log::warn!("draw {attempt} of g is singular along a line; redrawing"),
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetriesExhausted { attempts: ATTEMPTS, reason: "no draw of g gave the generic splitting".into() })
}

/// Perfect matchings of `{0, ..., 5}` as sorted pairs.
fn matchings(rest: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let Some((&first, tail)) = rest.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for (k, &partner) in tail.iter().enumerate() {
        let remaining: Vec<usize> = tail.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &x)| x).collect();
        for mut m in matchings(&remaining) {
            m.insert(0, (first, partner));
            out.push(m);
        }
    }
    out
}

/// All `15 d^3` planes on `sum z_i^d = 0` in `P^5`.
pub fn fermat_planes_p5(field: &PrimeField, d: u32) -> Result<FanoReport<PrimeField>> {
    if d < 3 {
        return Err(Error::InvalidParameters(format!("need d >= 3, got {d}")));
    }
    field.check_coprime(&[d as u64, (d - 1) as u64])?;
    let terms = (0..6).map(|i| {
        let mut e = vec![0; 6];
        e[i] = d;
        (Monomial::new(e), field.one())
    });
    let f = MultiPoly::from_terms(field, 6, d, terms)?;
    let omegas = nth_roots(field, d as u64, -1)?;

    let mut candidates = Vec::new();
    for m in matchings(&[0, 1, 2, 3, 4, 5]) {
        for a in &omegas {
            for b in &omegas {
                for c in &omegas {
                    // z_j = w z_i with i < j: spanned by e_i + w e_j
                    let swapped: Vec<(usize, usize)> = m.iter().map(|&(i, j)| (j, i)).collect();
                    candidates.push((swapped, [*a, *b, *c]));
                }
            }
        }
    }

    let items: Vec<FanoItem<PrimeField>> = candidates
        .par_iter()
        .map(|(pairs, ratios)| -> Result<FanoItem<PrimeField>> {
            let plane = LinearSubspace::new(field, vectors_for(6, pairs, ratios, field))?;
            let contained = contains_subspace(&f, &plane)?;
            let sections = plane_normal_sections(&f, &plane)?;
            Ok(FanoItem { subspace: plane, contained, h0_normal: sections.h0, splitting: None, singular: sections.singular })
        })
        .collect::<Result<_>>()?;

    let distinct: HashSet<&LinearSubspace<PrimeField>> = items.iter().map(|i| &i.subspace).collect();
    if distinct.len() != 15 * (d * d * d) as usize {
        return Err(Error::InternalInconsistency(format!("{} distinct planes, expected {}", distinct.len(), 15 * d * d * d)));
    }
    Ok(FanoReport::from_items(items))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fano::bott_line_count;
    use crate::primes::auto_prime;

    fn field_for(d: u64) -> PrimeField {
        PrimeField::new(auto_prime(&[d])).unwrap()
    }

    #[test]
    fn fifteen_matchings() {
        let m = matchings(&[0, 1, 2, 3, 4, 5]);
        assert_eq!(m.len(), 15);
        let set: HashSet<_> = m.iter().collect();
        assert_eq!(set.len(), 15);
    }

    #[test]
    fn cubic_surface_lines_match_bott() {
        let f = field_for(3);
        let r = fermat_lines(&f, 3, &FermatHost::Surface).unwrap();
        assert_eq!(r.len(), 27);
        assert_eq!(num_bigint::BigInt::from(r.len()), bott_line_count(3, 3, 7).unwrap().count);
        assert!(r.all_contained());
        assert!(r.items.iter().all(|i| i.splitting.as_ref().unwrap().twists() == [-1]));
        assert_eq!(r.component_count, 27);
    }

    #[test]
    fn line_counts_over_small_degrees() {
        for d in [4u32, 5] {
            let f = field_for(d as u64);
            assert_eq!(fermat_lines(&f, d, &FermatHost::Surface).unwrap().len(), 3 * (d * d) as usize);
        }
    }

    #[test]
    fn enumeration_is_closed_under_coordinate_symmetry() {
        // swapping z0 <-> z2 and z1 <-> z3 preserves the form, hence the line set
        let f = field_for(4);
        let r = fermat_lines(&f, 4, &FermatHost::Surface).unwrap();
        let set: HashSet<LinearSubspace<PrimeField>> = r.items.iter().map(|i| i.subspace.clone()).collect();
        for item in &r.items {
            let swapped: Vec<Vec<Residue>> =
                item.subspace.param().iter().map(|v| vec![v[2], v[3], v[0], v[1]]).collect();
            assert!(set.contains(&LinearSubspace::new(&f, swapped).unwrap()));
        }
    }

    #[test]
    fn threefold_lines_are_isolated() {
        let f = field_for(6);
        let run = example42_lines(&f, 6, 11).unwrap();
        assert_eq!(run.report.len(), 108);
        assert_eq!(run.expected.twists(), &[-1, -2]);
        assert_eq!(run.report.component_count, 108);
    }

    #[test]
    fn cubic_planes_in_p5() {
        let f = field_for(3);
        let r = fermat_planes_p5(&f, 3).unwrap();
        assert_eq!(r.len(), 405);
        assert!(r.items.iter().all(|i| i.contained && i.h0_normal == 0 && !i.singular));
        assert!(fermat_planes_p5(&f, 2).is_err());
    }

    #[test]
    fn missing_roots_are_reported() {
        // 7 - 1 = 6 is not divisible by 2 * 5
        let f = PrimeField::new(7).unwrap();
        assert!(fermat_lines(&f, 5, &FermatHost::Surface).is_err());
    }
}
