use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};

/// All nonzero differences x − x′.
pub fn nonzero_differences(xs: &[Rational]) -> HashSet<Rational> {
    let mut out = HashSet::new();
    for a in xs {
        for b in xs {
            if a != b {
                out.insert(a - b);
            }
        }
    }
    out
}

/// m values in (−ε, ε) whose pairwise differences avoid (X − X) ∖ {0}.
pub fn difference_avoiding_set(xs: &[Rational], eps: &Rational, m: usize) -> Result<Vec<Rational>> {
    avoiding_differences(&nonzero_differences(xs), eps, m)
}

/// The evenly spaced εj/m (j < m) when they already avoid `forbidden`;
/// otherwise a greedy scan of εj/(J+1) for j = 0, 1, …, J, −1, …, −J,
/// doubling J until m values fit.
pub(crate) fn avoiding_differences(
    forbidden: &HashSet<Rational>,
    eps: &Rational,
    m: usize,
) -> Result<Vec<Rational>> {
    if m == 0 {
        return Err(Error::Invalid("m must be at least 1".into()));
    }
    if !eps.is_positive() {
        return Err(Error::Invalid("epsilon must be positive".into()));
    }
    let even: Vec<Rational> = (0..m as i64)
        .map(|j| eps * rational::ratio(j, m as i64))
        .collect();
    if check_avoidance(&even, forbidden, eps) {
        return Ok(even);
    }
    let mut big_j = 2 * (m as u64).pow(2) * (forbidden.len() as u64 + 1);
    loop {
        let step = eps / Rational::from_integer(BigInt::from(big_j + 1));
        let candidates = (0..=big_j as i64).chain((1..=big_j as i64).map(|j| -j));
        let mut accepted: Vec<Rational> = Vec::with_capacity(m);
        for j in candidates {
            let c = &step * rational::int(j);
            if accepted.iter().all(|s| !forbidden.contains(&(&c - s))) {
                accepted.push(c);
                if accepted.len() == m {
                    debug_assert!(check_avoidance(&accepted, forbidden, eps));
                    return Ok(accepted);
                }
            }
        }
        big_j *= 2;
    }
}

/// Exhaustive check of the defining property.
pub fn is_difference_avoiding(s: &[Rational], xs: &[Rational], eps: &Rational) -> bool {
    check_avoidance(s, &nonzero_differences(xs), eps)
}

fn check_avoidance(s: &[Rational], forbidden: &HashSet<Rational>, eps: &Rational) -> bool {
    let distinct: HashSet<&Rational> = s.iter().collect();
    distinct.len() == s.len()
        && s.iter().all(|x| x.abs() < *eps)
        && s.iter()
            .all(|a| s.iter().all(|b| a == b || !forbidden.contains(&(a - b))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, ratio};

    #[test]
    fn trivial_forbidden_set() {
        let s = difference_avoiding_set(&[int(0)], &int(1), 3).unwrap();
        assert_eq!(s.len(), 3);
        assert!(is_difference_avoiding(&s, &[int(0)], &int(1)));
    }

    #[test]
    fn unit_gap() {
        let xs = [int(0), int(1)];
        let s = difference_avoiding_set(&xs, &int(1), 3).unwrap();
        assert!(is_difference_avoiding(&s, &xs, &int(1)));
        assert_eq!(s, vec![int(0), ratio(1, 3), ratio(2, 3)]);
    }

    #[test]
    fn dense_forbidden_sets_force_spread() {
        // every multiple of 1/10 up to 1 is forbidden
        let xs: Vec<Rational> = (0..=10).map(|j| ratio(j, 10)).collect();
        let eps = ratio(1, 2);
        let s = difference_avoiding_set(&xs, &eps, 6).unwrap();
        assert!(is_difference_avoiding(&s, &xs, &eps));
    }

    #[test]
    fn bad_arguments() {
        assert!(difference_avoiding_set(&[], &int(1), 0).is_err());
        assert!(difference_avoiding_set(&[], &int(0), 1).is_err());
    }
}
