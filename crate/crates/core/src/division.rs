//! Janet and Pommaret divisions.
//!
//! A division assigns to every element of a finite monomial set a set of
//! multiplicative variables; `u` involutively divides `w` when `u | w` and
//! `w / u` only involves multiplicative variables of `u`.

use alloc::vec::Vec;
use core::borrow::Borrow;
use core::fmt;

use crate::error::Error;
use crate::module::{ModuleElement, ModuleOrder};
use crate::monomial::{Monomial, MonomialOrder};

/// A set of variable indices, `n <= 64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn all(n: usize) -> VarSet {
        if n >= 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    /// `{from, ..., n - 1}`.
    pub fn range(from: usize, n: usize) -> VarSet {
        VarSet(VarSet::all(n).0 & !VarSet::all(from).0)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    #[inline]
    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    #[inline]
    pub fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| bits >> i & 1 == 1)
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VarSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DivisionKind {
    Janet,
    Pommaret,
}

impl DivisionKind {
    /// Janet is Noetherian (every ideal has a finite Janet basis); Pommaret is not.
    pub fn is_noetherian(self) -> bool {
        matches!(self, DivisionKind::Janet)
    }

    pub fn name(self) -> &'static str {
        match self {
            DivisionKind::Janet => "janet",
            DivisionKind::Pommaret => "pommaret",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "janet" | "Janet" | "J" => Some(DivisionKind::Janet),
            "pommaret" | "Pommaret" | "P" => Some(DivisionKind::Pommaret),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VariablePartition {
    pub mult: VarSet,
    pub nonmult: VarSet,
}

impl VariablePartition {
    pub fn from_mult(mult: VarSet, n: usize) -> Self {
        VariablePartition { mult, nonmult: VarSet::all(n).difference(mult) }
    }
}

/// Janet multiplicative variables of every element of `set`, in input order.
///
/// `x_0` is multiplicative for `u` iff `deg_0(u)` is maximal in `set`; `x_i`
/// is multiplicative iff `deg_i(u)` is maximal among the elements sharing
/// `deg_0, ..., deg_{i-1}` with `u`.
pub fn janet_multiplicative<M: Borrow<Monomial>>(set: &[M]) -> Vec<VarSet> {
    let set: Vec<&Monomial> = set.iter().map(Borrow::borrow).collect();
    let len = set.len();
    if len == 0 {
        return Vec::new();
    }
    let n = set[0].nvars();
    let mut idx: Vec<usize> = (0..len).collect();
    idx.sort_by(|&a, &b| set[a].exps().cmp(set[b].exps()));
    let mut mult = alloc::vec![VarSet::EMPTY; len];
    for i in 0..n {
        // Elements sharing the first `i` exponents are contiguous in lexicographic order.
        let mut start = 0;
        while start < len {
            let prefix = &set[idx[start]].exps()[..i];
            let mut end = start + 1;
            while end < len && &set[idx[end]].exps()[..i] == prefix {
                end += 1;
            }
            let max = idx[start..end].iter().map(|&k| set[k].deg_in(i)).max().unwrap_or(0);
            for &k in &idx[start..end] {
                if set[k].deg_in(i) == max {
                    mult[k].insert(i);
                }
            }
            start = end;
        }
    }
    mult
}

pub fn janet_partition(u: &Monomial, set: &[Monomial]) -> Result<VariablePartition, Error> {
    let pos = set.iter().position(|v| v == u).ok_or(Error::NotInSet)?;
    let mult = janet_multiplicative(set);
    Ok(VariablePartition::from_mult(mult[pos], u.nvars()))
}

/// Pommaret multiplicative variables: `{x_k, ..., x_n}` for `k = cls(u)`,
/// every variable for `u = 1`.
pub fn pommaret_multiplicative(u: &Monomial) -> VarSet {
    let n = u.nvars();
    match u.class() {
        0 => VarSet::all(n),
        k => VarSet::range(k - 1, n),
    }
}

pub fn pommaret_partition(u: &Monomial) -> VariablePartition {
    VariablePartition::from_mult(pommaret_multiplicative(u), u.nvars())
}

/// Multiplicative variables for every element of `set` under `kind`.
pub fn multiplicative_sets<M: Borrow<Monomial>>(set: &[M], kind: DivisionKind) -> Vec<VarSet> {
    match kind {
        DivisionKind::Janet => janet_multiplicative(set),
        DivisionKind::Pommaret => set.iter().map(|u| pommaret_multiplicative(u.borrow())).collect(),
    }
}

/// `w` lies in the cone `u * K[mult]`.
#[inline]
pub fn in_cone(u: &Monomial, mult: VarSet, w: &Monomial) -> bool {
    if !u.divides(w) {
        return false;
    }
    u.exps().iter().zip(w.exps()).enumerate().all(|(i, (a, b))| a == b || mult.contains(i))
}

pub fn inv_divides(u: &Monomial, w: &Monomial, set: &[Monomial], kind: DivisionKind) -> Result<bool, Error> {
    let mult = match kind {
        DivisionKind::Janet => janet_partition(u, set)?.mult,
        DivisionKind::Pommaret => pommaret_multiplicative(u),
    };
    Ok(in_cone(u, mult, w))
}

/// Multiplicative variables of a module element inside a set of module
/// elements: the set is split by leading slot and the monomial division is
/// applied to the leading monomials within each slot.
pub fn module_partition(
    h: &ModuleElement,
    set: &[ModuleElement],
    kind: DivisionKind,
    order: &ModuleOrder,
) -> Result<VariablePartition, Error> {
    let lead = h.lm(order).ok_or(Error::ZeroModuleElement)?;
    let n = lead.mono.nvars();
    let mut block = Vec::new();
    for g in set {
        let l = g.lm(order).ok_or(Error::ZeroModuleElement)?;
        if l.slot == lead.slot && !block.contains(&l.mono) {
            block.push(l.mono);
        }
    }
    let mult = match kind {
        DivisionKind::Janet => janet_partition(&lead.mono, &block)?.mult,
        DivisionKind::Pommaret => pommaret_multiplicative(&lead.mono),
    };
    Ok(VariablePartition::from_mult(mult, n))
}

/// A violated division axiom, with positions into the checked set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// Cones of `u` and `v` meet although neither contains the other generator.
    ConeIntersection { u: usize, v: usize },
    /// `v` lies in the cone of `u` but has a multiplicative variable `u` lacks.
    Containment { u: usize, v: usize },
    /// Restricting to the subset `mask` removed a multiplicative variable of `u`.
    Restriction { u: usize, mask: u64 },
}

/// Largest set size for which every subset is enumerated in the restriction check.
pub const AXIOM_SUBSET_CAP: usize = 8;

/// Checks the three involutive-division axioms for the concrete partition of `set`.
pub fn check_division_axioms(set: &[Monomial], kind: DivisionKind) -> Vec<AxiomViolation> {
    let mut uniq: Vec<Monomial> = Vec::new();
    for u in set {
        if !uniq.contains(u) {
            uniq.push(u.clone());
        }
    }
    let set = &uniq[..];
    let mut out = Vec::new();
    if set.is_empty() {
        return out;
    }
    let mult = multiplicative_sets(set, kind);
    for (a, u) in set.iter().enumerate() {
        for (b, v) in set.iter().enumerate() {
            if a < b && cones_meet(u, mult[a], v, mult[b]) && !in_cone(v, mult[b], u) && !in_cone(u, mult[a], v) {
                out.push(AxiomViolation::ConeIntersection { u: a, v: b });
            }
            if a != b && in_cone(u, mult[a], v) && !mult[b].is_subset(mult[a]) {
                out.push(AxiomViolation::Containment { u: a, v: b });
            }
        }
    }
    if set.len() <= AXIOM_SUBSET_CAP {
        let full = (1u64 << set.len()) - 1;
        for mask in 1..full {
            let members: Vec<usize> = (0..set.len()).filter(|i| mask >> i & 1 == 1).collect();
            let sub: Vec<Monomial> = members.iter().map(|&i| set[i].clone()).collect();
            let sub_mult = multiplicative_sets(&sub, kind);
            for (k, &i) in members.iter().enumerate() {
                if !mult[i].is_subset(sub_mult[k]) {
                    out.push(AxiomViolation::Restriction { u: i, mask });
                }
            }
        }
    }
    out
}

/// Whether the cones `u * K[mu]` and `v * K[mv]` intersect.
pub fn cones_meet(u: &Monomial, mu: VarSet, v: &Monomial, mv: VarSet) -> bool {
    u.exps().iter().zip(v.exps()).enumerate().all(|(i, (a, b))| match (mu.contains(i), mv.contains(i)) {
        (false, false) => a == b,
        (false, true) => a >= b,
        (true, false) => b >= a,
        (true, true) => true,
    })
}

/// Lookup table from leading monomials to multiplicative sets, used by
/// reduction loops that test many monomials against one fixed set.
#[derive(Clone, Debug, Default)]
pub struct ConeIndex {
    // (lead, mult, owner) sorted by increasing lead in the active ordering
    entries: Vec<(Monomial, VarSet, usize)>,
}

impl ConeIndex {
    pub fn new(entries: Vec<(Monomial, VarSet, usize)>) -> Self {
        ConeIndex { entries }
    }

    /// First entry (in construction order) whose cone contains `w`.
    #[inline]
    pub fn find(&self, w: &Monomial) -> Option<(usize, &Monomial)> {
        self.entries.iter().find(|(u, m, _)| in_cone(u, *m, w)).map(|(u, _, owner)| (*owner, u))
    }

    /// Adds an entry, keeping entries sorted by lead under `ord` then owner.
    pub fn insert(&mut self, lead: Monomial, mult: VarSet, owner: usize, ord: MonomialOrder) {
        let at = self.entries.partition_point(|(u, _, o)| ord.compare(u, &lead).then(o.cmp(&owner)).is_lt());
        self.entries.insert(at, (lead, mult, owner));
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    // lm of the six-generator Janet basis: z^2, yz, xz, y^2, xy, x^2 in K[x,y,z]
    fn six() -> Vec<Monomial> {
        vec![m(&[0, 0, 2]), m(&[0, 1, 1]), m(&[1, 0, 1]), m(&[0, 2, 0]), m(&[1, 1, 0]), m(&[2, 0, 0])]
    }

    #[test]
    fn janet_nonmultiplicative_variables_of_six_generator_basis() {
        let u = six();
        let x = 0;
        let y = 1;
        for i in 0..3 {
            let p = janet_partition(&u[i], &u).unwrap();
            assert_eq!(p.nonmult, [x, y].into_iter().collect());
        }
        for i in 3..5 {
            let p = janet_partition(&u[i], &u).unwrap();
            assert_eq!(p.nonmult, [x].into_iter().collect());
        }
        assert!(janet_partition(&u[5], &u).unwrap().nonmult.is_empty());
    }

    #[test]
    fn singleton_is_fully_multiplicative() {
        let u = vec![m(&[1, 2, 0])];
        assert_eq!(janet_partition(&u[0], &u).unwrap().mult, VarSet::all(3));
        assert_eq!(janet_partition(&m(&[1, 0, 0]), &u), Err(Error::NotInSet));
    }

    #[test]
    fn pommaret_classes() {
        assert_eq!(pommaret_partition(&m(&[0, 0, 0])).mult, VarSet::all(3));
        assert_eq!(m(&[1, 1, 0]).class(), 2);
        assert_eq!(pommaret_partition(&m(&[1, 1, 0])).mult, [1, 2].into_iter().collect());
        assert_eq!(pommaret_partition(&m(&[1, 0, 1])).mult, [2].into_iter().collect());
    }

    #[test]
    fn involutive_divisibility() {
        let u = vec![m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[0, 0, 1]), m(&[1, 0, 1]), m(&[0, 1, 1])];
        let xz = m(&[1, 0, 1]);
        let x2z = m(&[2, 0, 1]);
        assert!(inv_divides(&xz, &xz, &u, DivisionKind::Janet).unwrap());
        assert!(inv_divides(&xz, &x2z, &u, DivisionKind::Janet).unwrap());
        assert!(!inv_divides(&xz, &x2z, &u, DivisionKind::Pommaret).unwrap());
    }

    #[test]
    fn module_partition_with_distinct_slots() {
        use crate::module::ModuleElement;
        use crate::monomial::MonomialOrder;
        use crate::poly::{rat, Polynomial};
        let ord = ModuleOrder::top(MonomialOrder::DegRevLex);
        let h: Vec<ModuleElement> =
            (0..3).map(|i| ModuleElement::single(i, Polynomial::term(rat(1), m(&[i as u32, 1, 0])))).collect();
        for e in &h {
            let p = module_partition(e, &h, DivisionKind::Janet, &ord).unwrap();
            assert_eq!(p.mult, VarSet::all(3));
        }
    }

    #[test]
    fn axioms_hold_on_small_sets() {
        let u = vec![m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[0, 0, 1]), m(&[1, 0, 1]), m(&[0, 1, 1])];
        assert!(check_division_axioms(&u, DivisionKind::Janet).is_empty());
        assert!(check_division_axioms(&u, DivisionKind::Pommaret).is_empty());
        assert!(check_division_axioms(&u[..1], DivisionKind::Janet).is_empty());
    }

    #[test]
    fn varset_ops() {
        let a: VarSet = [0, 2].into_iter().collect();
        assert!(a.contains(2) && !a.contains(1));
        assert_eq!(VarSet::range(1, 3), [1, 2].into_iter().collect());
        assert_eq!(VarSet::all(3).difference(a), [1].into_iter().collect());
        assert_eq!(a.len(), 2);
    }
}
