//! Number of lines on a general hypersurface of degree `2n - 3` in `P^n`, by
//! torus localization on the Grassmannian of lines.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct BottCount {
    #[serde(serialize_with = "as_string")]
    pub count: BigInt,
    /// The two independent weight vectors that produced `count`.
    pub weights: [Vec<i64>; 2],
}

fn as_string<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Fixed-point sum over the coordinate lines `<e_i, e_j>` for weights `lambda`.
///
/// Fails if two weights coincide (the fixed points are then not isolated).
pub fn bott_sum(n: usize, d: u32, lambda: &[i64]) -> Result<BigRational> {
    if lambda.len() != n + 1 {
        return Err(Error::DimensionMismatch { expected: n + 1, got: lambda.len() });
    }
    let w: Vec<BigInt> = lambda.iter().map(|&x| BigInt::from(x)).collect();
    let mut total = BigRational::zero();
    for i in 0..=n {
        for j in i + 1..=n {
            let num = (0..=d as i64).fold(BigInt::one(), |acc, a| {
                acc * (BigInt::from(a) * &w[i] + BigInt::from(d as i64 - a) * &w[j])
            });
            let mut den = BigInt::one();
            for k in (0..=n).filter(|&k| k != i && k != j) {
                den *= (&w[i] - &w[k]) * (&w[j] - &w[k]);
            }
            if den.is_zero() || w[i] == w[j] {
                return Err(Error::InvalidParameters(format!("weights {lambda:?} are not generic")));
            }
            total += BigRational::new(num, den);
        }
    }
    Ok(total)
}

fn draw_weights(rng: &mut ChaCha8Rng, len: usize) -> Vec<i64> {
    loop {
        let w: Vec<i64> = (0..len).map(|_| rng.gen_range(-1_000_000..=1_000_000)).collect();
        let mut sorted = w.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() == len {
            return w;
        }
        log::warn!("weight collision in {w:?}; redrawing");
    }
}

/// Line count for `d = 2n - 3`, computed twice with independent seeded weights.
pub fn bott_line_count(n: usize, d: u32, seed: u64) -> Result<BottCount> {
    if n < 2 || d as i64 != 2 * n as i64 - 3 {
        return Err(Error::InvalidParameters(format!("need n >= 2 and d = 2n - 3, got n = {n}, d = {d}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let first = draw_weights(&mut rng, n + 1);
    let second = draw_weights(&mut rng, n + 1);
    let a = bott_sum(n, d, &first)?;
    let b = bott_sum(n, d, &second)?;
    if a != b || !a.is_integer() {
        return Err(Error::InternalInconsistency(format!("localization gave {a} and {b}")));
    }
    Ok(BottCount { count: a.to_integer(), weights: [first, second] })
}
