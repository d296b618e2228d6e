//! Elements of free modules `P^t` and module monomial orderings.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::Error;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Recip;
use crate::poly::{Coeff, Polynomial};
use num_traits::One;

/// `mono * e_slot`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleMonomial {
    pub mono: Monomial,
    pub slot: usize,
}

impl ModuleMonomial {
    pub fn new(mono: Monomial, slot: usize) -> Self {
        ModuleMonomial { mono, slot }
    }

    /// `a e_i | b e_j` iff `i = j` and `a | b`.
    #[inline]
    pub fn divides(&self, other: &ModuleMonomial) -> bool {
        self.slot == other.slot && self.mono.divides(&other.mono)
    }

    pub fn mul(&self, m: &Monomial) -> ModuleMonomial {
        ModuleMonomial { mono: self.mono.mul(m), slot: self.slot }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleOrderKind {
    /// Term over position.
    Top,
    /// Position over term.
    Pot,
    Schreyer,
}

/// A module monomial ordering. In every kind a lower slot index ranks higher
/// when the monomial parts do not decide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    kind: ModuleOrderKind,
    base: MonomialOrder,
    leads: Vec<Monomial>,
}

impl ModuleOrder {
    pub fn top(base: MonomialOrder) -> Self {
        ModuleOrder { kind: ModuleOrderKind::Top, base, leads: Vec::new() }
    }

    pub fn pot(base: MonomialOrder) -> Self {
        ModuleOrder { kind: ModuleOrderKind::Pot, base, leads: Vec::new() }
    }

    /// Schreyer ordering induced by the leading monomials `lm(g_1), ..., lm(g_t)`.
    pub fn schreyer(base: MonomialOrder, leads: Vec<Monomial>) -> Result<Self, Error> {
        if leads.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(ModuleOrder { kind: ModuleOrderKind::Schreyer, base, leads })
    }

    /// Schreyer ordering over a list of nonzero polynomials.
    pub fn schreyer_for(base: MonomialOrder, gens: &[Polynomial]) -> Result<Self, Error> {
        let leads = gens.iter().map(|g| g.lm().cloned().ok_or(Error::ZeroPolynomial)).collect::<Result<_, _>>()?;
        Self::schreyer(base, leads)
    }

    pub(crate) fn schreyer_empty(base: MonomialOrder) -> Self {
        ModuleOrder { kind: ModuleOrderKind::Schreyer, base, leads: Vec::new() }
    }

    pub(crate) fn push_lead(&mut self, lead: Monomial) {
        debug_assert_eq!(self.kind, ModuleOrderKind::Schreyer);
        self.leads.push(lead);
    }

    pub fn kind(&self) -> ModuleOrderKind {
        self.kind
    }

    pub fn base(&self) -> MonomialOrder {
        self.base
    }

    pub fn leads(&self) -> &[Monomial] {
        &self.leads
    }

    /// Unchecked comparison; Schreyer slots must index into the lead list.
    #[inline]
    pub fn compare(&self, a: &ModuleMonomial, b: &ModuleMonomial) -> Ordering {
        match self.kind {
            ModuleOrderKind::Top => self.base.compare(&a.mono, &b.mono).then_with(|| b.slot.cmp(&a.slot)),
            ModuleOrderKind::Pot => b.slot.cmp(&a.slot).then_with(|| self.base.compare(&a.mono, &b.mono)),
            ModuleOrderKind::Schreyer => self
                .base
                .compare_products(&a.mono, &self.leads[a.slot], &b.mono, &self.leads[b.slot])
                .then_with(|| b.slot.cmp(&a.slot)),
        }
    }

    /// The monomial `lm(m * g_slot)` a Schreyer module monomial stands for.
    pub fn schreyer_image(&self, a: &ModuleMonomial) -> Monomial {
        a.mono.mul(&self.leads[a.slot])
    }
}

/// Checked module monomial comparison.
pub fn compare_module_monomials(
    a: &ModuleMonomial,
    b: &ModuleMonomial,
    order: &ModuleOrder,
) -> Result<Ordering, Error> {
    if a.mono.nvars() != b.mono.nvars() {
        return Err(Error::DimensionMismatch { expected: a.mono.nvars(), found: b.mono.nvars() });
    }
    if order.kind == ModuleOrderKind::Schreyer {
        let len = order.leads.len();
        for s in [a.slot, b.slot] {
            if s >= len {
                return Err(Error::SlotOutOfRange { slot: s, len });
            }
        }
    }
    Ok(order.compare(a, b))
}

/// Sparse element of `P^t`: slot index to nonzero polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct ModuleElement {
    coords: BTreeMap<usize, Polynomial>,
}

impl ModuleElement {
    pub fn zero() -> Self {
        ModuleElement { coords: BTreeMap::new() }
    }

    /// The standard basis vector `e_slot`.
    pub fn unit(slot: usize, nvars: usize) -> Self {
        Self::single(slot, Polynomial::constant(Coeff::one(), nvars))
    }

    pub fn single(slot: usize, p: Polynomial) -> Self {
        let mut coords = BTreeMap::new();
        if !p.is_zero() {
            coords.insert(slot, p);
        }
        ModuleElement { coords }
    }

    pub fn from_coords(coords: impl IntoIterator<Item = (usize, Polynomial)>) -> Self {
        ModuleElement { coords: coords.into_iter().filter(|(_, p)| !p.is_zero()).collect() }
    }

    /// Dense tuple `(h_1, ..., h_t)`.
    pub fn from_dense(entries: Vec<Polynomial>) -> Self {
        Self::from_coords(entries.into_iter().enumerate())
    }

    pub fn to_dense(&self, rank: usize) -> Vec<Polynomial> {
        (0..rank).map(|i| self.get(i).cloned().unwrap_or_default()).collect()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn get(&self, slot: usize) -> Option<&Polynomial> {
        self.coords.get(&slot)
    }

    pub fn coords(&self) -> impl Iterator<Item = (usize, &Polynomial)> {
        self.coords.iter().map(|(s, p)| (*s, p))
    }

    pub fn slots(&self) -> impl Iterator<Item = usize> + '_ {
        self.coords.keys().copied()
    }

    pub fn max_slot(&self) -> Option<usize> {
        self.coords.keys().next_back().copied()
    }

    pub fn add(&self, other: &ModuleElement, ord: MonomialOrder) -> ModuleElement {
        let mut out = self.clone();
        out.add_scaled(&Coeff::one(), None, other, ord);
        out
    }

    pub fn sub(&self, other: &ModuleElement, ord: MonomialOrder) -> ModuleElement {
        let mut out = self.clone();
        out.add_scaled(&-Coeff::one(), None, other, ord);
        out
    }

    pub fn scale(&self, c: &Coeff) -> ModuleElement {
        if c.is_zero() {
            return ModuleElement::zero();
        }
        ModuleElement { coords: self.coords.iter().map(|(s, p)| (*s, p.scale(c))).collect() }
    }

    pub fn neg(&self) -> ModuleElement {
        ModuleElement { coords: self.coords.iter().map(|(s, p)| (*s, p.neg())).collect() }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> ModuleElement {
        if c.is_zero() {
            return ModuleElement::zero();
        }
        ModuleElement { coords: self.coords.iter().map(|(s, p)| (*s, p.mul_term(c, m))).collect() }
    }

    pub fn mul_poly(&self, f: &Polynomial, ord: MonomialOrder) -> ModuleElement {
        ModuleElement::from_coords(self.coords.iter().map(|(s, p)| (*s, p.mul(f, ord))))
    }

    /// `self += c * m * other` (`m = 1` when absent).
    pub fn add_scaled(&mut self, c: &Coeff, m: Option<&Monomial>, other: &ModuleElement, ord: MonomialOrder) {
        if c.is_zero() {
            return;
        }
        for (slot, p) in &other.coords {
            let mut cur = self.coords.remove(slot).unwrap_or_default();
            cur.add_assign_mul_term(c, m, p, ord);
            if !cur.is_zero() {
                self.coords.insert(*slot, cur);
            }
        }
    }

    /// `self + sum c_k * m_k * g_k`, collected per slot and normalized once.
    pub fn add_products<'a>(
        &self,
        items: impl IntoIterator<Item = (Coeff, &'a Monomial, &'a ModuleElement)>,
        ord: MonomialOrder,
    ) -> ModuleElement {
        let mut buckets: BTreeMap<usize, Vec<(Coeff, Monomial)>> = BTreeMap::new();
        for (s, p) in &self.coords {
            buckets.entry(*s).or_default().extend(p.terms().iter().map(|t| (t.coeff.clone(), t.mono.clone())));
        }
        for (c, m, g) in items {
            for (s, p) in &g.coords {
                let b = buckets.entry(*s).or_default();
                b.extend(p.terms().iter().map(|t| (&t.coeff * &c, t.mono.mul(m))));
            }
        }
        ModuleElement::from_coords(buckets.into_iter().map(|(s, ts)| (s, Polynomial::from_terms(ts, ord))))
    }

    /// Adds `p * e_slot`.
    pub fn add_at(&mut self, slot: usize, p: &Polynomial, ord: MonomialOrder) {
        let cur = self.coords.remove(&slot).unwrap_or_default();
        let next = cur.add(p, ord);
        if !next.is_zero() {
            self.coords.insert(slot, next);
        }
    }

    /// Leading term with respect to a module ordering.
    pub fn lt(&self, order: &ModuleOrder) -> Option<(ModuleMonomial, &Coeff)> {
        let mut best: Option<(ModuleMonomial, &Coeff)> = None;
        for (slot, p) in &self.coords {
            let t = &p.terms()[0];
            let cand = ModuleMonomial { mono: t.mono.clone(), slot: *slot };
            let better = match &best {
                None => true,
                Some((b, _)) => order.compare(&cand, b) == Ordering::Greater,
            };
            if better {
                best = Some((cand, &t.coeff));
            }
        }
        best
    }

    pub fn lm(&self, order: &ModuleOrder) -> Option<ModuleMonomial> {
        self.lt(order).map(|(m, _)| m)
    }

    /// Checked leading monomial: fails on zero elements and on Schreyer slots
    /// outside the lead list.
    pub fn lm_module(&self, order: &ModuleOrder) -> Result<ModuleMonomial, Error> {
        if order.kind() == ModuleOrderKind::Schreyer {
            if let Some(max) = self.max_slot() {
                if max >= order.leads().len() {
                    return Err(Error::SlotOutOfRange { slot: max, len: order.leads().len() });
                }
            }
        }
        self.lm(order).ok_or(Error::ZeroModuleElement)
    }

    /// `sum_i self[i] * gens[i]`.
    pub fn evaluate(&self, gens: &[Polynomial], ord: MonomialOrder) -> Result<Polynomial, Error> {
        let mut acc = Polynomial::zero();
        for (slot, p) in &self.coords {
            let g = gens.get(*slot).ok_or(Error::SlotOutOfRange { slot: *slot, len: gens.len() })?;
            acc = acc.add(&p.mul(g, ord), ord);
        }
        Ok(acc)
    }

    pub fn is_syzygy_of(&self, gens: &[Polynomial], ord: MonomialOrder) -> bool {
        self.evaluate(gens, ord).is_ok_and(|p| p.is_zero())
    }

    pub fn map_slots(&self, mut f: impl FnMut(usize) -> usize) -> ModuleElement {
        let mut out = ModuleElement::zero();
        for (s, p) in &self.coords {
            let t = f(*s);
            debug_assert!(!out.coords.contains_key(&t));
            out.coords.insert(t, p.clone());
        }
        out
    }

    /// Replaces every `e_s` by `image(s)`, a module element of the target module.
    pub fn substitute(&self, mut image: impl FnMut(usize) -> ModuleElement, ord: MonomialOrder) -> ModuleElement {
        let mut out = ModuleElement::zero();
        for (s, p) in &self.coords {
            let img = image(*s);
            for (t, q) in img.coords() {
                out.add_at(t, &p.mul(q, ord), ord);
            }
        }
        out
    }

    pub fn map_polys(&self, mut f: impl FnMut(&Polynomial) -> Polynomial) -> ModuleElement {
        ModuleElement::from_coords(self.coords.iter().map(|(s, p)| (*s, f(p))))
    }

    /// Normalizes so that the leading coefficient is one.
    pub fn monic(&self, order: &ModuleOrder) -> Result<ModuleElement, Error> {
        let (_, c) = self.lt(order).ok_or(Error::ZeroModuleElement)?;
        let inv = c.recip();
        Ok(self.scale(&inv))
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> ModuleDisplay<'a> {
        ModuleDisplay { elem: self, names }
    }
}

pub struct ModuleDisplay<'a> {
    elem: &'a ModuleElement,
    names: &'a [String],
}

impl fmt::Display for ModuleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return f.write_str("0");
        }
        for (i, (slot, p)) in self.elem.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({})*e{}", p.display(self.names), slot + 1)?;
        }
        Ok(())
    }
}
