//! Prime selection and roots of unity in prime fields.

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Residue};

/// Lower bound for automatically selected primes.
pub const AUTO_PRIME_FLOOR: u64 = 1_000_000;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut k = 3;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 2;
    }
    true
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(values: &[u64]) -> u64 {
    values.iter().fold(1, |acc, &v| if v == 0 { acc } else { acc / gcd(acc, v) * v })
}

/// Smallest prime `p > AUTO_PRIME_FLOOR` with `2 * lcm(root_orders) | p - 1`.
pub fn auto_prime(root_orders: &[u64]) -> u64 {
    let modulus = 2 * lcm(root_orders);
    let mut p = (AUTO_PRIME_FLOOR / modulus + 1) * modulus + 1;
    while !is_prime(p) {
        p += modulus;
    }
    p
}

/// Checks `2 * lcm(root_orders) | p - 1`.
pub fn check_root_orders(p: u64, root_orders: &[u64]) -> Result<()> {
    let modulus = 2 * lcm(root_orders);
    if (p - 1) % modulus != 0 {
        return Err(Error::MissingRoots { p, modulus });
    }
    Ok(())
}

/// The field for a computation needing roots of the given orders: `fixed`
/// when supplied (and suitable), otherwise [`auto_prime`].
pub fn resolve_field(fixed: Option<u64>, root_orders: &[u64]) -> Result<PrimeField> {
    match fixed {
        Some(p) => {
            let field = PrimeField::new(p)?;
            check_root_orders(p, root_orders)?;
            Ok(field)
        }
        None => PrimeField::new(auto_prime(root_orders)),
    }
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            out.push(k);
            while n % k == 0 {
                n /= k;
            }
        }
        k += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest generator of the multiplicative group of `field`.
pub fn primitive_root(field: &PrimeField) -> Residue {
    let p = field.modulus();
    let factors = distinct_prime_factors(p - 1);
    (2..p)
        .map(|g| field.elem(g))
        .find(|g| factors.iter().all(|q| !field.is_one(&field.pow(g, (p - 1) / q))))
        .expect("F_p^* is cyclic")
}

/// All `N` solutions of `x^N = sign` in `F_p`, sorted. Requires `2N | p - 1`.
pub fn nth_roots(field: &PrimeField, order: u64, sign: i8) -> Result<Vec<Residue>> {
    let p = field.modulus();
    if order == 0 || sign.abs() != 1 {
        return Err(Error::InvalidParameters(format!(
            "need order >= 1 and sign = +-1, got {order}, {sign}"
        )));
    }
    check_root_orders(p, &[order])?;
    // zeta is a primitive 2N-th root; x^N = 1 at even powers, x^N = -1 at odd ones.
    let zeta = field.pow(&primitive_root(field), (p - 1) / (2 * order));
    let start = if sign > 0 { 0 } else { 1 };
    let mut roots: Vec<Residue> = (0..order)
        .map(|k| field.pow(&zeta, 2 * k + start))
        .collect();
    roots.sort();
    Ok(roots)
}
