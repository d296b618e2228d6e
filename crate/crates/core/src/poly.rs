//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept strictly decreasing in the ordering passed to each
//! operation; the ordering itself is not stored per polynomial, so callers
//! must use one ordering consistently for a given value.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use dashu_ratio::RBig;
use num_traits::{One, Signed};

use crate::error::Error;
use crate::monomial::{Monomial, MonomialOrder};

pub type Coeff = RBig;

pub fn rat(n: i64) -> Coeff {
    RBig::from(n)
}

pub fn ratio(n: i64, d: i64) -> Coeff {
    RBig::from(n) / RBig::from(d)
}

pub(crate) trait Recip {
    fn recip(&self) -> Coeff;
}

impl Recip for Coeff {
    fn recip(&self) -> Coeff {
        RBig::ONE / self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(c: Coeff, nvars: usize) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn term(c: Coeff, m: Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: alloc::vec![Term { coeff: c, mono: m }] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Coeff::one(), Monomial::var(nvars, i))
    }

    /// Canonical form from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(mut terms: Vec<(Coeff, Monomial)>, ord: MonomialOrder) -> Self {
        terms.sort_by(|a, b| ord.compare(&b.1, &a.1));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.mono == m => last.coeff += c,
                _ => out.push(Term { coeff: c, mono: m }),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial { terms: out }
    }

    /// Wraps terms that are already strictly decreasing with nonzero coefficients.
    pub fn from_sorted_terms(terms: Vec<Term>) -> Self {
        Polynomial { terms }
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    #[inline]
    pub fn lc(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    #[inline]
    pub fn lt(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Leading monomial; panics on zero. For internal use where nonzero is an invariant.
    #[inline]
    pub(crate) fn lead(&self) -> &Monomial {
        &self.terms[0].mono
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.mono.degree() == t.mono.degree()),
        }
    }

    pub fn coeff_of(&self, m: &Monomial, ord: MonomialOrder) -> Option<&Coeff> {
        self.terms.binary_search_by(|t| ord.compare(m, &t.mono)).ok().map(|i| &self.terms[i].coeff)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|t| Term { coeff: -&t.coeff, mono: t.mono.clone() }).collect() }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|t| Term { coeff: &t.coeff * c, mono: t.mono.clone() }).collect() }
    }

    /// `c * m * self`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|t| Term { coeff: &t.coeff * c, mono: t.mono.mul(m) }).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|t| Term { coeff: t.coeff.clone(), mono: t.mono.mul(m) }).collect() }
    }

    pub fn add(&self, other: &Polynomial, ord: MonomialOrder) -> Polynomial {
        self.combine(other, &Coeff::one(), None, ord)
    }

    pub fn sub(&self, other: &Polynomial, ord: MonomialOrder) -> Polynomial {
        self.combine(other, &-Coeff::one(), None, ord)
    }

    /// `self - c * m * g`.
    pub fn sub_mul_term(&self, c: &Coeff, m: &Monomial, g: &Polynomial, ord: MonomialOrder) -> Polynomial {
        let mut out = self.clone();
        out.add_assign_mul_term(&-c, Some(m), g, ord);
        out
    }

    /// `self -= c * m * g`.
    pub fn sub_assign_mul_term(&mut self, c: &Coeff, m: &Monomial, g: &Polynomial, ord: MonomialOrder) {
        self.add_assign_mul_term(&-c, Some(m), g, ord);
    }

    /// Removes and returns the leading term.
    pub fn pop_lead(&mut self) -> Option<Term> {
        (!self.terms.is_empty()).then(|| self.terms.remove(0))
    }

    fn combine(&self, other: &Polynomial, c: &Coeff, m: Option<&Monomial>, ord: MonomialOrder) -> Polynomial {
        let mut out = self.clone();
        out.add_assign_mul_term(c, m, other, ord);
        out
    }

    /// `self += c * m * other`, with `m = 1` when absent.
    pub(crate) fn add_assign_mul_term(
        &mut self,
        c: &Coeff,
        m: Option<&Monomial>,
        other: &Polynomial,
        ord: MonomialOrder,
    ) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mine = core::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(mine.len() + other.terms.len());
        let mut a = mine.into_iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|t| {
                let mono = match m {
                    Some(m) => t.mono.mul(m),
                    None => t.mono.clone(),
                };
                (mono, &t.coeff)
            })
            .peekable();
        loop {
            let step = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => ord.compare(&x.mono, &y.0),
            };
            match step {
                Ordering::Greater => out.push(a.next().unwrap()),
                Ordering::Less => {
                    let (mono, coeff) = b.next().unwrap();
                    out.push(Term { coeff: coeff * c, mono });
                }
                Ordering::Equal => {
                    let mut x = a.next().unwrap();
                    let (_, coeff) = b.next().unwrap();
                    x.coeff += coeff * c;
                    if !x.coeff.is_zero() {
                        out.push(x);
                    }
                }
            }
        }
        self.terms = out;
    }

    pub fn mul(&self, other: &Polynomial, ord: MonomialOrder) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for s in &self.terms {
            for t in &other.terms {
                terms.push((&s.coeff * &t.coeff, s.mono.mul(&t.mono)));
            }
        }
        Polynomial::from_terms(terms, ord)
    }

    pub fn pow(&self, e: u32, nvars: usize, ord: MonomialOrder) -> Polynomial {
        let mut acc = Polynomial::constant(Coeff::one(), nvars);
        for _ in 0..e {
            acc = acc.mul(self, ord);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Result<Polynomial, Error> {
        let lc = self.lc().ok_or(Error::ZeroPolynomial)?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        let inv = lc.recip();
        Ok(self.scale(&inv))
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| c.is_one())
    }

    /// Re-sorts the terms for a different ordering.
    pub fn reorder(&self, ord: MonomialOrder) -> Polynomial {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ord.compare(&b.mono, &a.mono));
        Polynomial { terms }
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.poly.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let unit = abs.is_one();
            if t.mono.is_one() {
                write!(f, "{}", abs)?;
            } else if unit {
                write!(f, "{}", t.mono.display(self.names))?;
            } else {
                write!(f, "{}*{}", abs, t.mono.display(self.names))?;
            }
        }
        Ok(())
    }
}
