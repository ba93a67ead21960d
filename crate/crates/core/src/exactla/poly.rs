use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use serde::ser::SerializeSeq;
use serde::Serialize;

use super::scalar::{rational_is_negative, rational_text, Scalar, ScalarDomain};

/// A coordinate variable `x_{row,col}`. `set` separates independent families
/// of coordinates (0 prints as `x`, 1 as `y`, 2 as `z`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub set: u8,
    pub row: usize,
    pub col: usize,
}

impl Var {
    pub fn x(row: usize, col: usize) -> Self {
        Self { set: 0, row, col }
    }

    pub fn with_set(set: u8, row: usize, col: usize) -> Self {
        Self { set, row, col }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.set {
            0 => "x".to_string(),
            1 => "y".to_string(),
            2 => "z".to_string(),
            s => format!("t{s}_"),
        };
        if self.row < 10 && self.col < 10 {
            write!(f, "{letter}{}{}", self.row, self.col)
        } else {
            write!(f, "{letter}{{{},{}}}", self.row, self.col)
        }
    }
}

impl Serialize for Var {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A product of variable powers, sorted by variable, exponents positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Self(vec![(v, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(a, ea)), Some(&(b, eb))) if a == b => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
                (Some(&(a, ea)), Some(&(b, _))) if a < b => {
                    out.push((a, ea));
                    i += 1;
                }
                (Some(_), Some(&(b, eb))) => {
                    out.push((b, eb));
                    j += 1;
                }
                (Some(&t), None) => {
                    out.push(t);
                    i += 1;
                }
                (None, Some(&t)) => {
                    out.push(t);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Self(out)
    }

    fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|&&(u, _)| u == v).map_or(0, |&(_, e)| e)
    }

    fn without(&self, v: Var) -> Self {
        Self(self.0.iter().copied().filter(|&(u, _)| u != v).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A multivariate polynomial with rational coefficients in sparse normal
/// form: no zero coefficients are stored, so equality is term comparison.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Self { terms }
    }

    pub fn var(v: Var) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(v), BigRational::one());
        Self { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The value if this polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect()
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        Self { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// Replaces `v` by `value` everywhere.
    pub fn substitute(&self, v: Var, value: &Poly) -> Self {
        let mut out = Poly::default();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let rest = Poly { terms: BTreeMap::from([(m.without(v), c.clone())]) };
            let mut term = rest;
            for _ in 0..e {
                term = term * value.clone();
            }
            out = out + term;
        }
        out
    }

    /// Evaluates with every variable replaced by the given scalar.
    pub fn evaluate<S: Scalar>(&self, value: impl Fn(Var) -> S, coeff: impl Fn(&BigRational) -> S) -> S {
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = coeff(c);
            for &(v, e) in &m.0 {
                for _ in 0..e {
                    t = t * value(v);
                }
            }
            acc = acc + t;
        }
        acc
    }
}

impl Add for Poly {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (m, c) in o.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for Poly {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for Poly {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Mul for Poly {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = Poly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Scalar for Poly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn unit_inverse(&self) -> Option<Self> {
        let c = self.as_constant()?;
        (!c.is_zero()).then(|| Self::constant(c.recip()))
    }
    fn from_i64(v: i64) -> Self {
        Self::constant(BigRational::from_integer(v.into()))
    }
    fn domain() -> ScalarDomain {
        ScalarDomain::Polynomial
    }
}

impl fmt::Display for Poly {
    /// Higher degree first; within a degree, variable order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Monomial, &BigRational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(a.0.cmp(b.0)));
        for (idx, (m, c)) in terms.into_iter().enumerate() {
            let negative = rational_is_negative(c);
            let abs = if negative { -c.clone() } else { c.clone() };
            let sign = match (idx, negative) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let body = if m.0.is_empty() {
                rational_text(&abs)
            } else if abs.is_one() {
                m.to_string()
            } else {
                format!("{}*{}", rational_text(&abs), m)
            };
            write!(f, "{sign}{body}")?;
        }
        Ok(())
    }
}

/// Serialized as a monomial list: `[[coefficient, [[variable, exponent], …]], …]`.
impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            let factors: Vec<(String, u32)> = m.0.iter().map(|&(v, e)| (v.to_string(), e)).collect();
            seq.serialize_element(&(rational_text(c), factors))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(a: usize, b: usize) -> Poly {
        Poly::var(Var::x(a, b))
    }

    #[test]
    fn ring_laws_and_normal_form() {
        let p = x(1, 2) + x(4, 5) * x(1, 2);
        let q = x(4, 5) - Poly::one();
        assert_eq!(p.clone() * q.clone(), q.clone() * p.clone());
        assert_eq!((p.clone() + q.clone()) - q.clone(), p);
        assert!((p.clone() - p.clone()).is_zero());
        let sq = (x(1, 2) + Poly::one()) * (x(1, 2) + Poly::one());
        assert_eq!(sq.to_string(), "x12^2 + 2*x12 + 1");
        assert_eq!(sq.degree(), 2);
    }

    #[test]
    fn display_and_units() {
        assert_eq!((x(4, 6) + x(5, 6) * x(4, 5)).to_string(), "x45*x56 + x46");
        assert_eq!(Poly::var(Var::x(10, 12)).to_string(), "x{10,12}");
        assert_eq!(Poly::var(Var::with_set(1, 2, 3)).to_string(), "y23");
        assert_eq!(Poly::from_i64(2).unit_inverse().unwrap().to_string(), "1/2");
        assert!(x(1, 2).unit_inverse().is_none());
        assert!(Poly::zero().unit_inverse().is_none());
        assert_eq!((-x(1, 2)).to_string(), "-x12");
    }

    #[test]
    fn substitution() {
        let p = x(2, 6) * (x(4, 5) + x(1, 2)) + x(1, 2);
        let q = p.substitute(Var::x(1, 2), &Poly::zero());
        assert_eq!(q, x(2, 6) * x(4, 5));
        let r = p.substitute(Var::x(1, 2), &x(3, 3));
        assert_eq!(r, x(2, 6) * x(4, 5) + x(2, 6) * x(3, 3) + x(3, 3));
    }

    #[test]
    fn serialization_is_a_monomial_list() {
        let p = x(4, 5) * x(5, 6) + Poly::from_i64(-3);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"[["-3",[]],["1",[["x45",1],["x56",1]]]]"#);
    }
}
