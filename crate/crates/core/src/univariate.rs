//! Dense univariate polynomials over `F_p`, just enough to find roots.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, PrimeField, Residue};

/// Coefficients from the constant term up; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Residue>,
}

impl UniPoly {
    pub fn new(field: &PrimeField, mut coeffs: Vec<Residue>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Residue] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, field: &PrimeField, x: &Residue) -> Residue {
        self.coeffs.iter().rev().fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
    }

    fn monic(&self, field: &PrimeField) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => {
                let inv = field.inv(lead).expect("leading coefficient is nonzero");
                Self { coeffs: self.coeffs.iter().map(|c| field.mul(c, &inv)).collect() }
            }
        }
    }

    pub fn sub(&self, field: &PrimeField, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let z = field.zero();
        let coeffs = (0..len)
            .map(|i| field.sub(self.coeffs.get(i).unwrap_or(&z), other.coeffs.get(i).unwrap_or(&z)))
            .collect();
        Self::new(field, coeffs)
    }

    pub fn mul(&self, field: &PrimeField, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self { coeffs: Vec::new() };
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(&out[i + j], &field.mul(a, b));
            }
        }
        Self::new(field, out)
    }

    /// Remainder of division by a nonzero polynomial.
    pub fn rem(&self, field: &PrimeField, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv = field.inv(divisor.coeffs.last().unwrap()).unwrap();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let factor = field.mul(&r[top], &inv);
            if !field.is_zero(&factor) {
                for (k, c) in divisor.coeffs.iter().enumerate() {
                    let idx = top - dd + k;
                    r[idx] = field.sub(&r[idx], &field.mul(&factor, c));
                }
            }
            r.pop();
            while r.last().is_some_and(|c| field.is_zero(c)) {
                r.pop();
            }
        }
        Self::new(field, r)
    }

    pub fn gcd(&self, field: &PrimeField, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(field, &b);
            a = b;
            b = r;
        }
        a.monic(field)
    }

    pub fn derivative(&self, field: &PrimeField) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| field.mul(c, &field.from_i64(i as i64)))
            .collect();
        Self::new(field, coeffs)
    }

    /// `base^e mod self`.
    fn pow_mod(&self, field: &PrimeField, base: &Self, mut e: u64) -> Self {
        let mut acc = Self::new(field, vec![field.one()]).rem(field, self);
        let mut b = base.rem(field, self);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(field, &b).rem(field, self);
            }
            b = b.mul(field, &b).rem(field, self);
            e >>= 1;
        }
        acc
    }

    /// Distinct roots in `F_p`, sorted. The zero polynomial has no listed roots.
    pub fn roots(&self, field: &PrimeField, seed: u64) -> Vec<Residue> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let f = self.monic(field);
        let x = Self::new(field, vec![field.zero(), field.one()]);
        // product of (x - r) over the distinct roots r in F_p
        let xp = f.pow_mod(field, &x, field.modulus());
        let split = f.gcd(field, &xp.sub(field, &x));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        equal_degree_split(field, split, &mut rng, &mut out);
        out.sort();
        out
    }
}

/// Cantor-Zassenhaus splitting of a squarefree product of linear factors.
fn equal_degree_split(field: &PrimeField, f: UniPoly, rng: &mut ChaCha8Rng, out: &mut Vec<Residue>) {
    match f.degree() {
        None | Some(0) => {}
        Some(1) => {
            let g = f.monic(field);
            out.push(field.neg(&g.coeffs[0]));
        }
        Some(_) => loop {
            let a = field.elem(rng.gen_range(0..field.modulus()));
            let shifted = UniPoly::new(field, vec![a, field.one()]);
            let w = f.pow_mod(field, &shifted, (field.modulus() - 1) / 2);
            let g = f.gcd(field, &w.sub(field, &UniPoly::new(field, vec![field.one()])));
            let dg = g.degree().unwrap_or(0);
            if dg > 0 && dg < f.degree().unwrap() {
                let h = divide_exact(field, &f, &g);
                equal_degree_split(field, g, rng, out);
                equal_degree_split(field, h, rng, out);
                return;
            }
        },
    }
}

fn divide_exact(field: &PrimeField, num: &UniPoly, den: &UniPoly) -> UniPoly {
    let dd = den.degree().unwrap();
    let inv = field.inv(den.coeffs.last().unwrap()).unwrap();
    let mut r = num.coeffs.clone();
    let mut q = vec![field.zero(); r.len() - dd];
    for top in (dd..r.len()).rev() {
        let factor = field.mul(&r[top], &inv);
        q[top - dd] = factor;
        for (k, c) in den.coeffs.iter().enumerate() {
            let idx = top - dd + k;
            r[idx] = field.sub(&r[idx], &field.mul(&factor, c));
        }
    }
    UniPoly::new(field, q)
}
