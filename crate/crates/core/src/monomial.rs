//! Exponent vectors and the monomial orderings used throughout the crate.
//!
//! Variables are indexed `0..n` with `x_0` the greatest variable, so the
//! declaration order of a ring is also the order of significance.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::Error;

/// A power product `x_0^{a_0} ... x_{n-1}^{a_{n-1}}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u32,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { deg: 0, exps: vec![0; n] }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { deg: 1, exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        let deg = exps.iter().sum();
        Monomial { deg, exps }
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// Total degree.
    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn deg_in(&self, i: usize) -> u32 {
        self.exps[i]
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { deg: self.deg + other.deg, exps }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] += 1;
        m.deg += 1;
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { deg: other.deg - self.deg, exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exps(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_exps(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Pommaret class: one plus the largest index with a positive exponent,
    /// and `0` for the monomial `1`.
    pub fn class(&self) -> usize {
        self.exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, names }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match self.names.get(i) {
                Some(name) => f.write_str(name)?,
                None => write!(f, "x{}", i + 1)?,
            }
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

/// The admissible orderings supported by the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    DegLex,
    #[default]
    DegRevLex,
}

impl MonomialOrder {
    #[inline]
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::DegLex => a.deg.cmp(&b.deg).then_with(|| lex(a, b)),
            MonomialOrder::DegRevLex => a.deg.cmp(&b.deg).then_with(|| revlex(a, b)),
        }
    }

    /// Compares `a1 * a2` against `b1 * b2` without building the products.
    #[inline]
    pub fn compare_products(self, a1: &Monomial, a2: &Monomial, b1: &Monomial, b2: &Monomial) -> Ordering {
        let ea = a1.exps.iter().zip(&a2.exps).map(|(x, y)| x + y);
        let eb = b1.exps.iter().zip(&b2.exps).map(|(x, y)| x + y);
        match self {
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::DegLex => (a1.deg + a2.deg).cmp(&(b1.deg + b2.deg)).then_with(|| ea.cmp(eb)),
            MonomialOrder::DegRevLex => {
                (a1.deg + a2.deg).cmp(&(b1.deg + b2.deg)).then_with(|| ea.rev().cmp(eb.rev()).reverse())
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::DegRevLex => "degrevlex",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "lex" | "plex" => Some(MonomialOrder::Lex),
            "deglex" | "grlex" | "dlex" => Some(MonomialOrder::DegLex),
            "degrevlex" | "grevlex" | "drl" | "dp" => Some(MonomialOrder::DegRevLex),
            _ => None,
        }
    }
}

#[inline]
fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps.iter().zip(&b.exps) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

// The monomial whose last nonzero entry of (a - b) is negative is greater.
#[inline]
fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps.iter().zip(&b.exps).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

/// Ring context: number of variables, variable names and the active ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    pub names: Vec<String>,
    pub order: MonomialOrder,
}

impl Ring {
    pub fn new(names: Vec<String>, order: MonomialOrder) -> Self {
        Ring { names, order }
    }

    /// Ring with variables `x1..xn`.
    pub fn with_nvars(n: usize, order: MonomialOrder) -> Self {
        let names = (1..=n).map(|i| alloc::format!("x{}", i)).collect();
        Ring { names, order }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|v| v == name)
    }
}

/// Checked comparison; fails when the exponent vectors have different lengths.
pub fn compare_monomials(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Result<Ordering, Error> {
    if a.nvars() != b.nvars() {
        return Err(Error::DimensionMismatch { expected: a.nvars(), found: b.nvars() });
    }
    Ok(order.compare(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    #[test]
    fn one_is_minimum() {
        for ord in [MonomialOrder::Lex, MonomialOrder::DegLex, MonomialOrder::DegRevLex] {
            assert_eq!(ord.compare(&m(&[0, 0, 0]), &m(&[1, 0, 0])), Ordering::Less);
        }
    }

    #[test]
    fn degrevlex_prefers_smaller_last_exponent() {
        // xz vs y^2 in K[x,y,z]
        let xz = m(&[1, 0, 1]);
        let y2 = m(&[0, 2, 0]);
        assert_eq!(MonomialOrder::DegRevLex.compare(&xz, &y2), Ordering::Less);
        // lex and deglex disagree on this pair
        assert_eq!(MonomialOrder::DegLex.compare(&xz, &y2), Ordering::Greater);
    }

    #[test]
    fn deglex_tie_break_on_first_variable() {
        assert_eq!(MonomialOrder::DegLex.compare(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        assert!(compare_monomials(&m(&[1, 0]), &m(&[1, 0, 0]), MonomialOrder::Lex).is_err());
    }

    #[test]
    fn class_and_support() {
        assert_eq!(m(&[1, 1, 0]).class(), 2);
        assert_eq!(m(&[1, 0, 1]).class(), 3);
        assert_eq!(m(&[0, 0, 0]).class(), 0);
        assert_eq!(m(&[2, 0, 3]).support().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn quotient_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert_eq!(a.quotient_of(&b), Some(m(&[1, 0, 1])));
        assert_eq!(b.quotient_of(&a), None);
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 1]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 2, 1])));
    }
}
