use std::fmt;

use serde::Serialize;

use crate::combinatorics::composition::parse_list;
use crate::error::{Error, Result};

/// A nondecreasing function `h: [n] → [n]` with `h(i) < i` for every `i`.
///
/// Values are stored for `i = 1..=n`; `h(1) = 0` is forced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    /// Validates the values; the error lists every violated constraint.
    pub fn new(values: impl Into<Vec<usize>>) -> Result<Self> {
        let values = values.into();
        let mut problems = Vec::new();
        if values.is_empty() {
            problems.push("h must have at least one value".to_string());
        }
        for (idx, &v) in values.iter().enumerate() {
            let i = idx + 1;
            if v >= i {
                problems.push(format!("h({i}) = {v} must be < {i}"));
            }
        }
        for (idx, pair) in values.windows(2).enumerate() {
            if pair[1] < pair[0] {
                problems.push(format!(
                    "h({}) = {} is smaller than h({}) = {}",
                    idx + 2,
                    pair[1],
                    idx + 1,
                    pair[0]
                ));
            }
        }
        if problems.is_empty() {
            Ok(Self { values })
        } else {
            Err(Error::InvalidHessenberg(problems))
        }
    }

    /// `h = (0, 1, …, n-1)`, whose Hessenberg variety is the Springer fiber.
    pub fn springer(n: usize) -> Self {
        Self { values: (0..n).collect() }
    }

    /// `h ≡ 0`.
    pub fn zero(n: usize) -> Self {
        Self { values: vec![0; n] }
    }

    /// Every valid function for a given `n`, in lexicographic order.
    /// There are Catalan(n) of them.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(i: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
            if i > n {
                out.push(HessenbergFunction { values: cur.clone() });
                return;
            }
            let lo = cur.last().copied().unwrap_or(0);
            for v in lo..i {
                cur.push(v);
                rec(i + 1, n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(1, n, &mut Vec::new(), &mut out);
        out
    }

    /// Parses `springer` (needs `n`) or a comma-separated list.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("springer") {
            return Ok(Self::springer(n));
        }
        let values = parse_list(s)?;
        let h = Self::new(values)?;
        if h.n() != n {
            return Err(Error::SizeMismatch { expected: n, found: h.n() });
        }
        Ok(h)
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `h(i)` for 1-based `i`.
    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_springer(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i)
    }

    /// Pointwise order `self ⪯ other`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { expected: self.n(), found: other.n() });
        }
        Ok(self.values.iter().zip(&other.values).all(|(a, b)| a <= b))
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_lists_every_problem() {
        let err = HessenbergFunction::new(vec![0, 2, 1]).unwrap_err();
        match err {
            Error::InvalidHessenberg(p) => {
                assert_eq!(p.len(), 2, "{p:?}");
                assert!(p[0].contains("h(2) = 2"));
                assert!(p[1].contains("h(3) = 1"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn catalan_many() {
        let counts: Vec<usize> = (1..=7).map(|n| HessenbergFunction::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429]);
        assert!(HessenbergFunction::all(4).iter().any(|h| h.is_springer()));
    }

    #[test]
    fn order_examples() {
        let h = |v: &[usize]| HessenbergFunction::new(v.to_vec()).unwrap();
        assert!(h(&[0, 0, 1]).leq(&h(&[0, 1, 2])).unwrap());
        assert!(h(&[0, 1, 2]).leq(&h(&[0, 1, 2])).unwrap());
        assert!(!h(&[0, 1, 1]).leq(&h(&[0, 0, 2])).unwrap());
        assert!(!h(&[0, 0, 2]).leq(&h(&[0, 1, 1])).unwrap());
        assert!(h(&[0, 1]).leq(&h(&[0, 1, 2])).is_err());
    }

    #[test]
    fn parse_springer_and_lists() {
        assert_eq!(HessenbergFunction::parse("springer", 3).unwrap().values(), &[0, 1, 2]);
        assert_eq!(HessenbergFunction::parse("0,0,1", 3).unwrap().values(), &[0, 0, 1]);
        assert!(HessenbergFunction::parse("0,0", 3).is_err());
        assert!(HessenbergFunction::parse("0,2", 2).is_err());
    }
}
