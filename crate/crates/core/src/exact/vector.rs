use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{self, Rational};

/// A point or vector of ℚ^d.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct QVector(Vec<Rational>);

impl QVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        QVector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        QVector(coords.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        QVector(vec![Rational::zero(); dim])
    }

    /// Standard basis vector e_i (0-based index).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    /// Squared distance ‖self − other‖².
    pub fn dist_sq(&self, other: &QVector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| {
                let d = a - b;
                acc + &d * &d
            })
    }

    pub fn scale(&self, k: &Rational) -> QVector {
        QVector(self.0.iter().map(|c| c * k).collect())
    }

    /// self + k·other
    pub fn add_scaled(&self, k: &Rational, other: &QVector) -> QVector {
        QVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }

    /// Drops the last coordinate.
    pub fn truncate_last(&self) -> QVector {
        QVector(self.0[..self.0.len() - 1].to_vec())
    }

    /// Appends one coordinate.
    pub fn extended(&self, c: Rational) -> QVector {
        let mut v = self.0.clone();
        v.push(c);
        QVector(v)
    }

    pub fn last(&self) -> &Rational {
        self.0.last().expect("nonempty vector")
    }

    pub fn max_abs(&self) -> Rational {
        rational::max_abs(&self.0)
    }

    /// Parallel to `other` (both nonzero, or either zero).
    pub fn is_parallel(&self, other: &QVector) -> bool {
        // all 2x2 minors vanish
        let n = self.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                if &self.0[i] * &other.0[j] != &self.0[j] * &other.0[i] {
                    return false;
                }
            }
        }
        true
    }

    /// Rescales so that the first nonzero coordinate is 1.
    pub fn normalized_leading(&self) -> QVector {
        match self.0.iter().find(|c| !c.is_zero()) {
            Some(lead) => self.scale(&lead.recip()),
            None => self.clone(),
        }
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn linf_norm(&self) -> Rational {
        self.0
            .iter()
            .map(|c| c.abs())
            .fold(Rational::zero(), |a, b| if b > a { b } else { a })
    }
}

impl Index<usize> for QVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &QVector {
    type Output = QVector;
    fn add(self, rhs: &QVector) -> QVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &QVector {
    type Output = QVector;
    fn sub(self, rhs: &QVector) -> QVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &QVector {
    type Output = QVector;
    fn neg(self) -> QVector {
        QVector(self.0.iter().map(|a| -a).collect())
    }
}

impl From<Vec<Rational>> for QVector {
    fn from(v: Vec<Rational>) -> Self {
        QVector(v)
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", rational::to_canonical(c))?;
        }
        write!(f, ")")
    }
}

impl Serialize for QVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        rational::seq::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for QVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let coords = rational::seq::deserialize(d)?;
        if coords.is_empty() {
            return Err(serde::de::Error::custom("vector must have dimension >= 1"));
        }
        Ok(QVector(coords))
    }
}

/// Shorthand for integer vectors in tests and examples.
#[macro_export]
macro_rules! qv {
    ($($x:expr),* $(,)?) => {
        $crate::exact::QVector::from_ints(&[$($x),*])
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::ratio;

    #[test]
    fn json_form_is_canonical_strings() {
        let v = QVector::new(vec![ratio(-3, 2), rational::zero(), rational::int(4)]);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["-3/2","0","4"]"#);
        let back: QVector = serde_json::from_str(r#"["-6/4", 0, "4"]"#).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<QVector>("[]").is_err());
    }

    #[test]
    fn parallel_and_leading_normalization() {
        assert!(qv![1, 2, 3].is_parallel(&qv![-2, -4, -6]));
        assert!(!qv![1, 2, 3].is_parallel(&qv![1, 2, 4]));
        assert_eq!(qv![0, -2, 4].normalized_leading(), qv![0, 1, -2]);
    }
}
