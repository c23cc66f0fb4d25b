//! Monomials in `k[x_1, ..., x_n]` and the graded reverse lexicographic order.

use std::cmp::Ordering;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponent = u16;

/// A monomial `x^a` with its total degree cached.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 8]>,
    degree: u32,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, n), degree: 0 }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[Exponent]) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps: SmallVec::from_slice(exps), degree }
    }

    #[inline]
    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Product; exponent overflow is a hard error.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    /// `self | other`
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps = other.exps.iter().zip(&self.exps).map(|(&a, &b)| a - b).collect();
        Monomial { exps, degree: other.degree - self.degree }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[Exponent; 8]> =
            self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|&a| {
                let v = a as u32 * e;
                Exponent::try_from(v).expect("monomial exponent overflow")
            })
            .collect();
        Monomial { exps, degree: self.degree * e }
    }

    /// Render with the given variable names, e.g. `x1^2*x3`. The unit renders as `1`.
    pub fn render(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Graded reverse lexicographic comparison: total degree first, then the
/// monomial with the smaller exponent in the last differing variable is larger.
#[inline]
pub fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree.cmp(&b.degree) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// Checked form of [`grevlex`] for monomials that may come from different rings.
pub fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::Structural(format!(
            "comparing monomials in {} and {} variables",
            a.nvars(),
            b.nvars()
        )));
    }
    Ok(grevlex(a, b))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `d` in `n` variables, in descending grevlex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut exps = vec![0 as Exponent; n];
    fn rec(i: usize, left: u32, exps: &mut Vec<Exponent>, out: &mut Vec<Monomial>) {
        let n = exps.len();
        if i == n - 1 {
            exps[i] = left as Exponent;
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in 0..=left {
            exps[i] = e as Exponent;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    rec(0, d, &mut exps, &mut out);
    out.sort_by(|a, b| grevlex(b, a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[Exponent]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn variable_order() {
        assert_eq!(grevlex(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(grevlex(&m(&[1, 1]), &m(&[1, 1])), Ordering::Equal);
        assert_eq!(grevlex(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        assert!(grevlex_cmp(&m(&[1]), &m(&[1, 0])).is_err());
    }

    /// Textbook rule evaluated independently: a > b iff deg a > deg b, or equal
    /// degree and the last nonzero entry of a - b is negative.
    fn textbook(a: &Monomial, b: &Monomial) -> Ordering {
        if a.degree() != b.degree() {
            return a.degree().cmp(&b.degree());
        }
        let diff: Vec<i32> =
            a.exponents().iter().zip(b.exponents()).map(|(&x, &y)| x as i32 - y as i32).collect();
        match diff.iter().rev().find(|&&v| v != 0) {
            None => Ordering::Equal,
            Some(&v) if v < 0 => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    #[test]
    fn degree_two_enumeration_matches_textbook_rule() {
        for n in 1..=4 {
            let all = monomials_of_degree(n, 2);
            assert_eq!(all.len(), n * (n + 1) / 2);
            for a in &all {
                for b in &all {
                    assert_eq!(grevlex(a, b), textbook(a, b));
                }
            }
        }
    }

    #[test]
    fn enumeration_is_descending() {
        let all = monomials_of_degree(3, 3);
        assert_eq!(all.len(), 10);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(all[0], m(&[3, 0, 0]));
        assert_eq!(all[9], m(&[0, 0, 3]));
    }

    #[test]
    fn lcm_and_division() {
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 3, 0]);
        let l = a.lcm(&b);
        assert_eq!(l, m(&[2, 3, 1]));
        assert!(a.divides(&l) && b.divides(&l));
        assert_eq!(a.quotient_of(&l), m(&[0, 3, 0]));
        assert!(!a.is_coprime(&b));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 2, 1])));
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_a_hard_error() {
        let big = m(&[Exponent::MAX]);
        let _ = big.mul(&m(&[1]));
    }
}
