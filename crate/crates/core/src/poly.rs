//! Sparse homogeneous polynomials over an exact field.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is graded
//! reverse lexicographic. Iteration and the text form list terms from the
//! largest monomial down.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{parse_scalar, Field};
use crate::subspace::LinearSubspace;

/// Exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(num_vars: usize) -> Self {
        Self(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn eval<F: Field>(&self, field: &F, pt: &[F::Elem]) -> F::Elem {
        self.0
            .iter()
            .zip(pt)
            .filter(|(e, _)| **e > 0)
            .fold(field.one(), |acc, (&e, x)| field.mul(&acc, &field.pow(x, e as u64)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // reverse lex: smaller exponent in the last differing variable wins
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate().filter(|(_, e)| **e > 0) {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match e {
                1 => write!(f, "z{i}")?,
                _ => write!(f, "z{i}^{e}")?,
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials of degree `degree` in `num_vars` variables, largest first.
pub fn monomial_basis(num_vars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, left: u32, vars_left: usize, out: &mut Vec<Monomial>) {
        if vars_left == 1 {
            prefix.push(left);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(prefix, left - e, vars_left - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if num_vars == 0 {
        if degree == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(&mut Vec::with_capacity(num_vars), degree, num_vars, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Homogeneous polynomial with nonzero coefficients only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly<F: Field> {
    field: F,
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(field: &F, num_vars: usize, degree: u32) -> Self {
        Self { field: field.clone(), num_vars, degree, terms: BTreeMap::new() }
    }

    /// Builds from `(monomial, coefficient)` pairs, summing repeats and
    /// dropping zeros. The degree is taken from the terms; `degree_hint` is used
    /// only when no term survives.
    pub fn from_terms(
        field: &F,
        num_vars: usize,
        degree_hint: u32,
        terms: impl IntoIterator<Item = (Monomial, F::Elem)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        let mut degree: Option<u32> = None;
        for (m, c) in terms {
            if m.num_vars() != num_vars {
                return Err(Error::DimensionMismatch { expected: num_vars, got: m.num_vars() });
            }
            match degree {
                None => degree = Some(m.degree()),
                Some(d) if d != m.degree() => {
                    return Err(Error::NotHomogeneous(format!("degrees {d} and {}", m.degree())))
                }
                _ => {}
            }
            let entry = map.entry(m).or_insert_with(|| field.zero());
            *entry = field.add(entry, &c);
        }
        map.retain(|_, c| !field.is_zero(c));
        Ok(Self { field: field.clone(), num_vars, degree: degree.unwrap_or(degree_hint), terms: map })
    }

    pub fn monomial(field: &F, m: Monomial, coeff: F::Elem) -> Self {
        let (n, d) = (m.num_vars(), m.degree());
        Self::from_terms(field, n, d, [(m, coeff)]).expect("single term is homogeneous")
    }

    /// The coordinate `z_i`.
    pub fn var(field: &F, num_vars: usize, i: usize) -> Self {
        Self::monomial(field, Monomial::var(num_vars, i), field.one())
    }

    pub fn constant(field: &F, num_vars: usize, c: F::Elem) -> Self {
        Self::monomial(field, Monomial::one(num_vars), c)
    }

    /// Linear form `sum_i coeffs[i] z_i`.
    pub fn linear_form(field: &F, coeffs: &[F::Elem]) -> Self {
        let n = coeffs.len();
        Self::from_terms(
            field,
            n,
            1,
            coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
        .expect("linear form is homogeneous")
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }
    pub fn degree(&self) -> u32 {
        self.degree
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Coefficients in the order of [`monomial_basis`].
    pub fn coeff_vector(&self) -> Vec<F::Elem> {
        monomial_basis(self.num_vars, self.degree).iter().map(|m| self.coeff(m)).collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, got: other.num_vars });
        }
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::NotHomogeneous(format!("degrees {} and {}", self.degree, other.degree)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let terms = self.terms.iter().chain(&other.terms).map(|(m, c)| (m.clone(), c.clone()));
        Self::from_terms(&self.field, self.num_vars, degree, terms)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&self.field.neg(&self.field.one())))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let terms = self.terms.iter().map(|(m, x)| (m.clone(), self.field.mul(x, c)));
        Self::from_terms(&self.field, self.num_vars, self.degree, terms).expect("scaling keeps degree")
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, got: other.num_vars });
        }
        let f = &self.field;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), f.mul(ca, cb)));
            }
        }
        Self::from_terms(f, self.num_vars, self.degree + other.degree, terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.field, self.num_vars, self.field.one());
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Exact value at `pt`.
    pub fn eval(&self, pt: &[F::Elem]) -> Result<F::Elem> {
        if pt.len() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, got: pt.len() });
        }
        let f = &self.field;
        Ok(self
            .terms
            .iter()
            .fold(f.zero(), |acc, (m, c)| f.add(&acc, &f.mul(c, &m.eval(f, pt)))))
    }

    /// `d/dz_i`. Degree drops by one (saturating at zero).
    pub fn partial_derivative(&self, i: usize) -> Self {
        let f = &self.field;
        let terms = self.terms.iter().filter(|(m, _)| m.0[i] > 0).map(|(m, c)| {
            let e = m.0[i];
            let mut m2 = m.0.clone();
            m2[i] -= 1;
            (Monomial(m2), f.mul(c, &f.from_i64(e as i64)))
        });
        Self::from_terms(f, self.num_vars, self.degree.saturating_sub(1), terms)
            .expect("derivative of a homogeneous form is homogeneous")
    }

    /// Substitutes `z_i = forms[i]`, where every form lives in the same ring.
    pub fn substitute(&self, forms: &[MultiPoly<F>]) -> Result<Self> {
        if forms.len() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, got: forms.len() });
        }
        let target_vars = forms.first().map_or(0, |g| g.num_vars);
        let target_degree = self.degree * forms.first().map_or(0, |g| g.degree);
        // powers[i][e] = forms[i]^e
        let mut powers: Vec<Vec<MultiPoly<F>>> = forms
            .iter()
            .map(|g| vec![Self::constant(&self.field, g.num_vars, self.field.one())])
            .collect();
        let mut out = Self::zero(&self.field, target_vars, target_degree);
        for (m, c) in &self.terms {
            let mut term = Self::constant(&self.field, target_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&forms[i])?;
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize])?;
            }
            out = out.add(&term)?;
        }
        out.degree = target_degree;
        Ok(out)
    }

    /// Pulls the form back along the parameterization of `sub`; the result lives
    /// in `sub.sub_dim() + 1` variables.
    pub fn restrict_to_subspace(&self, sub: &LinearSubspace<F>) -> Result<Self> {
        if self.num_vars != sub.ambient_dim() + 1 {
            return Err(Error::DimensionMismatch { expected: self.num_vars, got: sub.ambient_dim() + 1 });
        }
        let forms: Vec<MultiPoly<F>> = (0..self.num_vars)
            .map(|i| {
                let coeffs: Vec<F::Elem> = sub.param().iter().map(|col| col[i].clone()).collect();
                Self::linear_form(&self.field, &coeffs)
            })
            .collect();
        self.substitute(&forms)
    }

    /// Embeds into a ring with more variables: variable `i` becomes `positions[i]`.
    pub fn embed(&self, num_vars: usize, positions: &[usize]) -> Result<Self> {
        if positions.len() != self.num_vars {
            return Err(Error::DimensionMismatch { expected: self.num_vars, got: positions.len() });
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; num_vars];
            for (i, &x) in m.0.iter().enumerate() {
                e[positions[i]] += x;
            }
            (Monomial(e), c.clone())
        });
        Self::from_terms(&self.field, num_vars, self.degree, terms)
    }

    /// Parses the text format `c*z0^a0*...*zn^an +- ...`.
    ///
    /// Coefficients are integers or `num/den`; whitespace is ignored. The
    /// variable count must be given because trailing variables may not appear.
    pub fn parse(field: &F, num_vars: usize, text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut rest = s.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let negative = match rest.as_bytes()[0] {
                b'+' => {
                    rest = &rest[1..];
                    false
                }
                b'-' => {
                    rest = &rest[1..];
                    true
                }
                _ if first => false,
                _ => return Err(Error::Parse(format!("expected sign before `{rest}`"))),
            };
            first = false;
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            let (mono, mut coeff) = parse_term(field, num_vars, term)?;
            if negative {
                coeff = field.neg(&coeff);
            }
            terms.push((mono, coeff));
        }
        let degree = terms.first().map_or(0, |(m, _): &(Monomial, F::Elem)| m.degree());
        Self::from_terms(field, num_vars, degree, terms)
    }
}

fn parse_term<F: Field>(field: &F, num_vars: usize, term: &str) -> Result<(Monomial, F::Elem)> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut exps = vec![0u32; num_vars];
    let mut coeff = field.one();
    for factor in term.split('*') {
        if let Some(var) = factor.strip_prefix('z') {
            let (idx, exp) = match var.split_once('^') {
                Some((i, e)) => (i, e.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?),
                None => (var, 1),
            };
            let idx: usize = idx.parse().map_err(|_| Error::Parse(format!("bad variable `{factor}`")))?;
            if idx >= num_vars {
                return Err(Error::Parse(format!("variable z{idx} out of range for {num_vars} variables")));
            }
            exps[idx] += exp;
        } else if factor.bytes().all(|b| b.is_ascii_digit() || b == b'/') && !factor.is_empty() {
            coeff = field.mul(&coeff, &parse_scalar(field, factor)?);
        } else {
            return Err(Error::Parse(format!("unrecognized factor `{factor}`")));
        }
    }
    Ok((Monomial(exps), coeff))
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let mut text = self.field.to_text(c);
            let negative = text.starts_with('-');
            if negative {
                text.remove(0);
            }
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_const = m.degree() == 0;
            if text == "1" && !is_const {
                write!(f, "{m}")?;
            } else if is_const {
                write!(f, "{text}")?;
            } else {
                write!(f, "{text}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Integer coefficient helper used by tests and builders.
pub fn int<F: Field>(field: &F, v: i64) -> F::Elem {
    field.from_ratio(&BigInt::from(v), &BigInt::from(1)).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn binom(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
    }

    #[test]
    fn eval_examples() {
        let q = Rationals;
        let f = MultiPoly::parse(&q, 2, "z0^2 + z1^2").unwrap();
        assert_eq!(f.eval(&[q.from_i64(1), q.from_i64(2)]).unwrap(), q.from_i64(5));
        let g = MultiPoly::parse(&q, 4, "z0^3 - z1^3 + z2^3 - z3^3").unwrap();
        let ones = vec![q.one(); 4];
        assert_eq!(g.eval(&ones).unwrap(), q.zero());
        assert!(g.eval(&ones[..3]).is_err());

        let f7 = PrimeField::new(7).unwrap();
        let g7 = MultiPoly::parse(&f7, 4, "z0^3 - z1^3 + z2^3 - z3^3").unwrap();
        let pt = [f7.elem(2), f7.elem(2), f7.elem(0), f7.elem(0)];
        assert_eq!(g7.eval(&pt).unwrap(), f7.zero());
    }

    #[test]
    fn derivative_examples() {
        let q = Rationals;
        let f = MultiPoly::parse(&q, 3, "z0^5").unwrap();
        assert_eq!(f.partial_derivative(0), MultiPoly::parse(&q, 3, "5*z0^4").unwrap());
        let g = MultiPoly::parse(&q, 3, "z0*z1").unwrap();
        let dg = g.partial_derivative(2);
        assert!(dg.is_zero());
        assert_eq!(dg.degree(), 1);
        let f5 = PrimeField::new(5).unwrap();
        assert!(MultiPoly::parse(&f5, 3, "z0^5").unwrap().partial_derivative(0).is_zero());
    }

    #[test]
    fn monomial_basis_sizes_and_order() {
        assert_eq!(monomial_basis(3, 3).len(), 10);
        assert_eq!(monomial_basis(5, 1).len(), 5);
        assert_eq!(monomial_basis(5, 0).len(), 1);
        for (n, d) in [(2, 7), (4, 5), (6, 3)] {
            let b = monomial_basis(n, d);
            assert_eq!(b.len() as u64, binom(d as u64 + n as u64 - 1, n as u64 - 1));
            assert!(b.windows(2).all(|w| w[0] > w[1]));
        }
        // grevlex in three variables, degree 2
        let b: Vec<String> = monomial_basis(3, 2).iter().map(|m| m.to_string()).collect();
        assert_eq!(b, ["z0^2", "z0*z1", "z1^2", "z0*z2", "z1*z2", "z2^2"]);
    }

    #[test]
    fn parser_rejects_garbage() {
        let q = Rationals;
        assert!(MultiPoly::parse(&q, 2, "z0^2 + z1").is_err());
        assert!(MultiPoly::parse(&q, 2, "z3").is_err());
        assert!(MultiPoly::parse(&q, 2, "z0 ++ z1").is_err());
        assert!(MultiPoly::parse(&q, 2, "x0").is_err());
        assert!(MultiPoly::parse(&q, 2, "").is_err());
        let f = MultiPoly::parse(&q, 3, " 1/2 * z0 ^2* z2 - 3*z1*z1*z2").unwrap();
        assert_eq!(f.to_string(), "1/2*z0^2*z2 - 3*z1^2*z2");
    }

    #[test]
    fn cancellation_keeps_degree() {
        let q = Rationals;
        let f = MultiPoly::parse(&q, 2, "z0^3 - z0^3").unwrap();
        assert!(f.is_zero());
        assert_eq!(f.degree(), 3);
        assert_eq!(f.to_string(), "0");
    }

    #[test]
    fn restriction_examples() {
        let q = Rationals;
        let line = LinearSubspace::from_int_vectors(&q, &[vec![1, 1, 0, 0, 0], vec![0, 0, 1, 1, 0]]).unwrap();
        let on = |text: &str| MultiPoly::parse(&q, 5, text).unwrap().restrict_to_subspace(&line).unwrap();
        assert!(on("z0 - z1").is_zero());
        assert!(on("z4").is_zero());
        assert_eq!(on("z2"), MultiPoly::var(&q, 2, 1));
        let f = on("z0^4 - z1^4 + z2^4 - z3^4 + z4*z0^3 - 2*z4*z1*z2*z3");
        assert!(f.is_zero());
        assert_eq!(f.num_vars(), 2);
        let short = LinearSubspace::from_int_vectors(&q, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert!(MultiPoly::parse(&q, 5, "z0").unwrap().restrict_to_subspace(&short).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = (usize, u32, Vec<(Vec<u32>, i64, i64)>)> {
        (1usize..5, 0u32..5).prop_flat_map(|(n, d)| {
            let mono = proptest::collection::vec(0u32..=d, n);
            (
                Just(n),
                Just(d),
                proptest::collection::vec((mono, -20i64..20, 1i64..6), 0..6),
            )
        })
    }

    fn build(n: usize, d: u32, raw: &[(Vec<u32>, i64, i64)]) -> MultiPoly<Rationals> {
        let q = Rationals;
        // project raw exponents onto degree d by dumping the excess on the last variable
        let terms = raw.iter().map(|(e, a, b)| {
            let mut e = e.clone();
            let mut total: u32 = 0;
            for x in e.iter_mut() {
                *x = (*x).min(d - total);
                total += *x;
            }
            *e.last_mut().unwrap() += d - total;
            (Monomial::new(e), q.from_ratio(&(*a).into(), &(*b).into()).unwrap())
        });
        MultiPoly::from_terms(&q, n, d, terms).unwrap()
    }

    proptest! {
        #[test]
        fn text_round_trip((n, d, raw) in arb_poly()) {
            let f = build(n, d, &raw);
            let g = MultiPoly::parse(&Rationals, n, &f.to_string()).unwrap();
            if f.is_zero() {
                prop_assert!(g.is_zero());
            } else {
                prop_assert_eq!(g, f);
            }
        }

        #[test]
        fn restriction_commutes_with_eval(
            coeffs in proptest::collection::vec(0u64..1_000_003, 35),
            cols in proptest::collection::vec(0u64..1_000_003, 10),
            st in proptest::collection::vec(0u64..1_000_003, 2),
        ) {
            let f = PrimeField::new(1_000_003).unwrap();
            let poly = MultiPoly::from_terms(
                &f, 5, 3, monomial_basis(5, 3).into_iter().zip(coeffs.iter().map(|&c| f.elem(c))),
            ).unwrap();
            let span = vec![cols[..5].iter().map(|&c| f.elem(c)).collect::<Vec<_>>(),
                            cols[5..].iter().map(|&c| f.elem(c)).collect()];
            let Ok(line) = LinearSubspace::new(&f, span) else { return Ok(()) };
            let params: Vec<_> = st.iter().map(|&c| f.elem(c)).collect();
            let lhs = poly.restrict_to_subspace(&line).unwrap().eval(&params).unwrap();
            let rhs = poly.eval(&line.point(&params).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn derivative_matches_euler((n, d, raw) in arb_poly()) {
            // sum_i z_i df/dz_i = d f
            let q = Rationals;
            let f = build(n, d, &raw);
            prop_assume!(d >= 1);
            let mut acc = MultiPoly::zero(&q, n, d);
            for i in 0..n {
                let zi = MultiPoly::var(&q, n, i);
                acc = acc.add(&zi.mul(&f.partial_derivative(i)).unwrap()).unwrap();
            }
            prop_assert_eq!(acc, f.scale(&q.from_i64(d as i64)));
        }
    }
}
