//! Classical Groebner machinery: normal forms with quotients, Buchberger's
//! algorithm with a transformation matrix, Schreyer and Wall syzygies,
//! submodule Groebner bases, and the dimension of monomial ideals.
//!
//! Besides being building blocks, these routines are the independent
//! reference that the involutive algorithms are checked against.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};

use num_traits::One;

use crate::error::Error;
use crate::module::{ModuleElement, ModuleMonomial, ModuleOrder};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Recip;
use crate::poly::{Coeff, Polynomial};

pub(crate) fn poll(cancel: Option<&AtomicBool>) -> Result<(), Error> {
    match cancel {
        Some(flag) if flag.load(AtomicOrdering::Relaxed) => Err(Error::Cancelled),
        _ => Ok(()),
    }
}

/// Rejects empty input and zero generators.
pub(crate) fn check_generators(gens: &[Polynomial]) -> Result<(), Error> {
    if gens.is_empty() {
        return Err(Error::EmptyInput);
    }
    match gens.iter().position(Polynomial::is_zero) {
        Some(index) => Err(Error::ZeroGenerator { index }),
        None => Ok(()),
    }
}

/// Full multivariate division: returns `(r, q)` with `f = sum q[i] g[i] + r`
/// and no term of `r` divisible by a leading monomial of `gens`.
pub fn normal_form(f: &Polynomial, gens: &[Polynomial], ord: MonomialOrder) -> (Polynomial, ModuleElement) {
    let mut p = f.clone();
    let mut rem = Vec::new();
    let mut quot: Vec<Vec<(Coeff, Monomial)>> = vec![Vec::new(); gens.len()];
    while let Some(lt) = p.lt().cloned() {
        let hit = gens.iter().enumerate().find(|(_, g)| g.lm().is_some_and(|l| l.divides(&lt.mono)));
        match hit {
            Some((i, g)) => {
                let c = &lt.coeff / g.lc().unwrap();
                let m = g.lead().quotient_of(&lt.mono).unwrap();
                p.sub_assign_mul_term(&c, &m, g, ord);
                quot[i].push((c, m));
            }
            None => {
                let t = p.pop_lead().unwrap();
                rem.push((t.coeff, t.mono));
            }
        }
    }
    let q =
        ModuleElement::from_coords(quot.into_iter().enumerate().map(|(i, ts)| (i, Polynomial::from_terms(ts, ord))));
    (Polynomial::from_terms(rem, ord), q)
}

/// Critical pair data: `spoly = a_ji m_ji g_i - a_ij m_ij g_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPair {
    pub i: usize,
    pub j: usize,
    pub lcm: Monomial,
    pub m_ji: Monomial,
    pub m_ij: Monomial,
    pub a_ji: Coeff,
    pub a_ij: Coeff,
}

impl SPair {
    pub fn new(i: usize, j: usize, gens: &[Polynomial]) -> SPair {
        let (gi, gj) = (&gens[i], &gens[j]);
        let lcm = gi.lead().lcm(gj.lead());
        SPair {
            i,
            j,
            m_ji: gi.lead().quotient_of(&lcm).unwrap(),
            m_ij: gj.lead().quotient_of(&lcm).unwrap(),
            a_ji: gi.lc().unwrap().recip(),
            a_ij: gj.lc().unwrap().recip(),
            lcm,
        }
    }

    pub fn spoly(&self, gens: &[Polynomial], ord: MonomialOrder) -> Polynomial {
        let left = gens[self.i].mul_term(&self.a_ji, &self.m_ji);
        left.sub_mul_term(&self.a_ij, &self.m_ij, &gens[self.j], ord)
    }

    /// `a_ji m_ji e_i - a_ij m_ij e_j`.
    pub fn module_part(&self) -> ModuleElement {
        ModuleElement::from_coords(vec![
            (self.i, Polynomial::term(self.a_ji.clone(), self.m_ji.clone())),
            (self.j, Polynomial::term(-self.a_ij.clone(), self.m_ij.clone())),
        ])
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BuchbergerOptions<'a> {
    /// Product and chain criteria; off gives the plain algorithm.
    pub criteria: bool,
    /// Return the reduced basis (minimal, monic, tail-reduced).
    pub reduced: bool,
    pub cancel: Option<&'a AtomicBool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GBResult {
    pub basis: Vec<Polynomial>,
    /// `transform[j]` expresses `basis[j]` over the input generators.
    pub transform: Vec<ModuleElement>,
}

impl GBResult {
    /// Checks `basis[j] = sum_i transform[j][i] * input[i]` for every `j`.
    pub fn transform_is_exact(&self, input: &[Polynomial], ord: MonomialOrder) -> bool {
        self.basis.iter().zip(&self.transform).all(|(b, a)| a.evaluate(input, ord).is_ok_and(|v| &v == b))
    }
}

/// Buchberger's algorithm. Without `reduced`, the input generators are the
/// first `|F|` basis elements and their transform columns are unit vectors.
pub fn buchberger(input: &[Polynomial], ord: MonomialOrder, opts: BuchbergerOptions) -> Result<GBResult, Error> {
    check_generators(input)?;
    let n = input[0].lead().nvars();
    let mut basis: Vec<Polynomial> = input.to_vec();
    let mut transform: Vec<ModuleElement> = (0..input.len()).map(|i| ModuleElement::unit(i, n)).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut done: Vec<(usize, usize)> = Vec::new();
    while !pairs.is_empty() {
        poll(opts.cancel)?;
        // normal selection strategy: smallest lcm first, then insertion order
        let pick = (0..pairs.len())
            .min_by(|&a, &b| {
                let la = basis[pairs[a].0].lead().lcm(basis[pairs[a].1].lead());
                let lb = basis[pairs[b].0].lead().lcm(basis[pairs[b].1].lead());
                ord.compare(&la, &lb).then(a.cmp(&b))
            })
            .unwrap();
        let (i, j) = pairs.remove(pick);
        if opts.criteria && skip_pair(i, j, &basis, &pairs, &done) {
            done.push((i, j));
            continue;
        }
        done.push((i, j));
        let sp = SPair::new(i, j, &basis);
        let s = sp.spoly(&basis, ord);
        let (r, q) = normal_form(&s, &basis, ord);
        if r.is_zero() {
            continue;
        }
        let inv = r.lc().unwrap().recip();
        let mut a = transform[i].mul_term(&sp.a_ji, &sp.m_ji);
        a.add_scaled(&-sp.a_ij.clone(), Some(&sp.m_ij), &transform[j], ord);
        for (l, ql) in q.coords() {
            a = a.sub(&transform[l].mul_poly(ql, ord), ord);
        }
        let k = basis.len();
        basis.push(r.scale(&inv));
        transform.push(a.scale(&inv));
        for i in 0..k {
            pairs.push((i, k));
        }
    }
    let mut out = GBResult { basis, transform };
    if opts.reduced {
        out = reduce_result(out, ord);
    }
    Ok(out)
}

// Buchberger's product criterion and the chain criterion.
fn skip_pair(i: usize, j: usize, basis: &[Polynomial], pending: &[(usize, usize)], done: &[(usize, usize)]) -> bool {
    let (li, lj) = (basis[i].lead(), basis[j].lead());
    if li.is_coprime(lj) {
        return true;
    }
    let lcm = li.lcm(lj);
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    (0..basis.len()).any(|k| {
        k != i
            && k != j
            && basis[k].lead().divides(&lcm)
            && !pending.contains(&key(i, k))
            && !pending.contains(&key(j, k))
            && done.contains(&key(i, k))
            && done.contains(&key(j, k))
    })
}

fn reduce_result(gb: GBResult, ord: MonomialOrder) -> GBResult {
    let GBResult { basis, transform } = gb;
    // minimal: drop elements whose lead is divisible by another kept lead
    let mut keep: Vec<usize> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, h)| j != i && h.lead().divides(g.lead()) && (h.lead() != g.lead() || j < i));
        if !redundant {
            keep.push(i);
        }
    }
    keep.sort_by(|&a, &b| ord.compare(basis[a].lead(), basis[b].lead()));
    let mut polys: Vec<Polynomial> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut trans: Vec<ModuleElement> = keep.iter().map(|&i| transform[i].clone()).collect();
    for k in 0..polys.len() {
        let (r, q) = normal_form_skipping(&polys[k], &polys, k, ord);
        let mut a = trans[k].clone();
        for (l, ql) in q.coords() {
            a = a.sub(&trans[l].mul_poly(ql, ord), ord);
        }
        let inv = r.lc().unwrap().recip();
        polys[k] = r.scale(&inv);
        trans[k] = a.scale(&inv);
    }
    GBResult { basis: polys, transform: trans }
}

// Division by every generator except `skip`.
fn normal_form_skipping(
    f: &Polynomial,
    gens: &[Polynomial],
    skip: usize,
    ord: MonomialOrder,
) -> (Polynomial, ModuleElement) {
    let filtered: Vec<(usize, &Polynomial)> =
        gens.iter().enumerate().filter(|(i, g)| *i != skip && !g.is_zero()).collect();
    let list: Vec<Polynomial> = filtered.iter().map(|(_, g)| (*g).clone()).collect();
    let (r, q) = normal_form(f, &list, ord);
    (r, q.map_slots(|s| filtered[s].0))
}

/// Reduced Groebner basis (monic, sorted by increasing leading monomial).
pub fn reduced_groebner(input: &[Polynomial], ord: MonomialOrder) -> Result<Vec<Polynomial>, Error> {
    let opts = BuchbergerOptions { criteria: true, reduced: true, cancel: None };
    Ok(buchberger(input, ord, opts)?.basis)
}

/// First S-pair `(i, j)` whose S-polynomial has a nonzero remainder, if any.
pub fn buchberger_criterion_violation(gens: &[Polynomial], ord: MonomialOrder) -> Option<(usize, usize)> {
    for j in 0..gens.len() {
        for i in 0..j {
            let s = SPair::new(i, j, gens).spoly(gens, ord);
            if !normal_form(&s, gens, ord).0.is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_groebner(gens: &[Polynomial], ord: MonomialOrder) -> bool {
    buchberger_criterion_violation(gens, ord).is_none()
}

/// Schreyer syzygies `S_ij = a_ji m_ji e_i - a_ij m_ij e_j - sum h_ijl e_l`
/// of a Groebner basis; they form a Groebner basis of `syz(G)` for the
/// Schreyer ordering induced by `G`.
pub fn schreyer_syzygies(gens: &[Polynomial], ord: MonomialOrder) -> Result<Vec<ModuleElement>, Error> {
    check_generators(gens)?;
    let mut out = Vec::new();
    for j in 0..gens.len() {
        for i in 0..j {
            let sp = SPair::new(i, j, gens);
            let s = sp.spoly(gens, ord);
            let (r, h) = normal_form(&s, gens, ord);
            if !r.is_zero() {
                return Err(Error::NotGroebner { i, j });
            }
            out.push(sp.module_part().sub(&h, ord));
        }
    }
    Ok(out)
}

/// Generators of `syz(F)` obtained by pulling the Schreyer syzygies of a
/// Groebner basis `G = F A` back through `A`.
pub fn wall_syzygies(input: &[Polynomial], ord: MonomialOrder) -> Result<Vec<ModuleElement>, Error> {
    let gb = buchberger(input, ord, BuchbergerOptions::default())?;
    let syz = schreyer_syzygies(&gb.basis, ord)?;
    let mut out = Vec::new();
    for s in syz {
        let mut pulled = ModuleElement::zero();
        for (l, sl) in s.coords() {
            pulled = pulled.add(&gb.transform[l].mul_poly(sl, ord), ord);
        }
        if !pulled.is_zero() && !out.contains(&pulled) {
            out.push(pulled);
        }
    }
    Ok(out)
}

/// Ideal equality through reduced Groebner bases.
pub fn ideal_equal(a: &[Polynomial], b: &[Polynomial], ord: MonomialOrder) -> Result<bool, Error> {
    let ga = reduced_groebner(a, ord)?;
    let gb = reduced_groebner(b, ord)?;
    Ok(ga == gb)
}

/// Two finite monomial sets generate the same monomial ideal.
pub fn same_monomial_ideal(a: &[Monomial], b: &[Monomial]) -> bool {
    let covered = |xs: &[Monomial], ys: &[Monomial]| xs.iter().all(|x| ys.iter().any(|y| y.divides(x)));
    covered(a, b) && covered(b, a)
}

/// Two finite sets of module monomials generate the same monomial submodule.
pub fn same_monomial_submodule(a: &[ModuleMonomial], b: &[ModuleMonomial]) -> bool {
    let covered = |xs: &[ModuleMonomial], ys: &[ModuleMonomial]| xs.iter().all(|x| ys.iter().any(|y| y.divides(x)));
    covered(a, b) && covered(b, a)
}

/// Krull dimension of `P / <U>`: the largest number of variables that can
/// be set free without containing the support of a generator. Computed as
/// `n` minus a minimum transversal of the generator supports.
pub fn monomial_ideal_dimension(gens: &[Monomial], nvars: usize) -> usize {
    let mut supports: Vec<u64> = gens.iter().map(|m| m.support().fold(0u64, |acc, i| acc | 1 << i)).collect();
    supports.sort_by_key(|s| s.count_ones());
    let mut minimal: Vec<u64> = Vec::new();
    for s in supports {
        if !minimal.iter().any(|&t| t & !s == 0) {
            minimal.push(s);
        }
    }
    if minimal.contains(&0) {
        // the unit ideal; by convention its quotient has dimension 0 here
        return 0;
    }
    let mut best = nvars;
    min_transversal(&minimal, 0, 0, &mut best);
    nvars - best
}

fn min_transversal(sets: &[u64], chosen: u64, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    match sets.iter().find(|&&s| s & chosen == 0) {
        None => *best = size,
        Some(&s) => {
            let mut bits = s;
            while bits != 0 {
                let i = bits.trailing_zeros();
                bits &= bits - 1;
                min_transversal(sets, chosen | 1 << i, size + 1, best);
            }
        }
    }
}

/// Dimension of an ideal, read off the leading monomials of a Groebner basis.
pub fn ideal_dimension(input: &[Polynomial], ord: MonomialOrder) -> Result<usize, Error> {
    let n = input.first().and_then(|p| p.lm()).map_or(0, Monomial::nvars);
    let gb = reduced_groebner(input, ord)?;
    let leads: Vec<Monomial> = gb.iter().map(|g| g.lead().clone()).collect();
    Ok(monomial_ideal_dimension(&leads, n))
}

/// Division of a module element by a list of module elements; returns the remainder.
pub fn module_normal_form(f: &ModuleElement, gens: &[ModuleElement], order: &ModuleOrder) -> ModuleElement {
    module_reduce(f, gens, order, true)
}

fn module_reduce(f: &ModuleElement, gens: &[ModuleElement], order: &ModuleOrder, full: bool) -> ModuleElement {
    let ord = order.base();
    let leads: Vec<Option<(ModuleMonomial, Coeff)>> =
        gens.iter().map(|g| g.lt(order).map(|(m, c)| (m, c.clone()))).collect();
    let mut p = f.clone();
    let mut rem = ModuleElement::zero();
    while let Some((lm, lc)) = p.lt(order).map(|(m, c)| (m, c.clone())) {
        let hit = leads.iter().enumerate().find_map(|(i, l)| match l {
            Some((gm, gc)) if gm.divides(&lm) => Some((i, gm, gc)),
            _ => None,
        });
        match hit {
            Some((i, gm, gc)) => {
                let c = &lc / gc;
                let m = gm.mono.quotient_of(&lm.mono).unwrap();
                p.add_scaled(&-c, Some(&m), &gens[i], ord);
            }
            None if !full => return p,
            None => {
                let t = Polynomial::term(lc.clone(), lm.mono.clone());
                rem.add_at(lm.slot, &t, ord);
                p.add_at(lm.slot, &t.neg(), ord);
            }
        }
    }
    rem
}

/// Groebner basis of the submodule generated by `gens` (zero elements dropped).
pub fn module_buchberger(gens: &[ModuleElement], order: &ModuleOrder) -> Vec<ModuleElement> {
    module_buchberger_with(gens, order, None).unwrap_or_default()
}

pub fn module_buchberger_with(
    gens: &[ModuleElement],
    order: &ModuleOrder,
    cancel: Option<&AtomicBool>,
) -> Result<Vec<ModuleElement>, Error> {
    let ord = order.base();
    let mut basis: Vec<ModuleElement> = Vec::new();
    let mut leads: Vec<ModuleMonomial> = Vec::new();
    let mut pairs: Vec<(usize, usize, ModuleMonomial)> = Vec::new();
    let mut done: Vec<(usize, usize)> = Vec::new();
    let mut input: Vec<ModuleElement> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    input.sort_by(|a, b| order.compare(&a.lm(order).unwrap(), &b.lm(order).unwrap()));
    let push = |r: ModuleElement,
                basis: &mut Vec<ModuleElement>,
                leads: &mut Vec<ModuleMonomial>,
                pairs: &mut Vec<(usize, usize, ModuleMonomial)>|
     -> Result<(), Error> {
        let r = r.monic(order)?;
        let l = r.lm(order).unwrap();
        let k = basis.len();
        for (i, li) in leads.iter().enumerate() {
            if li.slot == l.slot {
                pairs.push((i, k, ModuleMonomial::new(li.mono.lcm(&l.mono), l.slot)));
            }
        }
        basis.push(r);
        leads.push(l);
        Ok(())
    };
    for g in input {
        let r = module_reduce(&g, &basis, order, false);
        if !r.is_zero() {
            push(r, &mut basis, &mut leads, &mut pairs)?;
        }
    }
    while !pairs.is_empty() {
        poll(cancel)?;
        let pick = (0..pairs.len()).min_by(|&a, &b| order.compare(&pairs[a].2, &pairs[b].2).then(a.cmp(&b))).unwrap();
        let (i, j, lcm) = pairs.remove(pick);
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i && k != j && leads[k].divides(&lcm) && done.contains(&key(i, k)) && done.contains(&key(j, k))
        });
        done.push((i, j));
        if chain {
            continue;
        }
        let mi = leads[i].mono.quotient_of(&lcm.mono).unwrap();
        let mj = leads[j].mono.quotient_of(&lcm.mono).unwrap();
        let mut s = basis[i].mul_term(&Coeff::one(), &mi);
        s.add_scaled(&-Coeff::one(), Some(&mj), &basis[j], ord);
        let r = module_reduce(&s, &basis, order, false);
        if !r.is_zero() {
            push(r, &mut basis, &mut leads, &mut pairs)?;
        }
    }
    Ok(basis)
}

/// Whether two sets generate the same submodule (mutual reduction to zero
/// against each other's Groebner bases).
pub fn module_equal(a: &[ModuleElement], b: &[ModuleElement], order: &ModuleOrder) -> bool {
    let ga = module_buchberger(a, order);
    let gb = module_buchberger(b, order);
    a.iter().all(|x| module_normal_form(x, &gb, order).is_zero())
        && b.iter().all(|x| module_normal_form(x, &ga, order).is_zero())
}

/// `a` is contained in the submodule generated by `b`.
pub fn module_contains(b: &[ModuleElement], a: &[ModuleElement], order: &ModuleOrder) -> bool {
    let gb = module_buchberger(b, order);
    a.iter().all(|x| module_normal_form(x, &gb, order).is_zero())
}

/// Sorts polynomials by increasing leading monomial (stable).
pub fn sort_by_lead(polys: &mut [Polynomial], ord: MonomialOrder) {
    polys.sort_by(|a, b| match (a.lm(), b.lm()) {
        (Some(x), Some(y)) => ord.compare(x, y),
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    const DL: MonomialOrder = MonomialOrder::DegLex;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    fn p(terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_terms(terms.iter().map(|(c, e)| (rat(*c), m(e))).collect(), DL)
    }

    // Variables (y, x) so that x < y under deglex.
    fn xy_minus_x() -> Polynomial {
        p(&[(1, &[1, 1]), (-1, &[0, 1])])
    }
    fn x2_minus_y() -> Polynomial {
        p(&[(1, &[0, 2]), (-1, &[1, 0])])
    }
    fn y2_minus_y() -> Polynomial {
        p(&[(1, &[2, 0]), (-1, &[1, 0])])
    }

    #[test]
    fn one_step_normal_form() {
        // y^2 - x^2 reduced by x^2 - y
        let f = p(&[(1, &[2, 0]), (-1, &[0, 2])]);
        let (r, q) = normal_form(&f, &[x2_minus_y()], DL);
        assert_eq!(r, y2_minus_y());
        assert_eq!(q, ModuleElement::single(0, p(&[(-1, &[0, 0])])));
    }

    #[test]
    fn normal_form_of_generator_and_of_one() {
        let g = x2_minus_y();
        let (r, q) = normal_form(&g, core::slice::from_ref(&g), DL);
        assert!(r.is_zero());
        assert_eq!(q, ModuleElement::unit(0, 2));
        let one = p(&[(1, &[0, 0])]);
        let (r, q) = normal_form(&one, &[g], DL);
        assert_eq!(r, one);
        assert!(q.is_zero());
    }

    #[test]
    fn worked_groebner_basis() {
        let f = [xy_minus_x(), x2_minus_y()];
        let gb = buchberger(&f, DL, BuchbergerOptions::default()).unwrap();
        assert_eq!(gb.basis, vec![xy_minus_x(), x2_minus_y(), y2_minus_y()]);
        assert!(gb.transform_is_exact(&f, DL));
        let red = reduced_groebner(&f, DL).unwrap();
        assert_eq!(red.len(), 3);
        assert!(red.contains(&y2_minus_y()));
    }

    #[test]
    fn singleton_basis_has_no_syzygies() {
        let f = [p(&[(1, &[0, 1])])];
        assert_eq!(buchberger(&f, DL, BuchbergerOptions::default()).unwrap().basis, f.to_vec());
        assert!(schreyer_syzygies(&f, DL).unwrap().is_empty());
        assert!(wall_syzygies(&f, DL).unwrap().is_empty());
    }

    #[test]
    fn schreyer_rejects_non_basis() {
        let f = [xy_minus_x(), x2_minus_y()];
        assert!(matches!(schreyer_syzygies(&f, DL), Err(Error::NotGroebner { .. })));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(monomial_ideal_dimension(&[], 3), 3);
        // xy, y^2, z in K[x,y,z]
        let u = [m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[0, 0, 1])];
        assert_eq!(monomial_ideal_dimension(&u, 3), 1);
        assert_eq!(monomial_ideal_dimension(&[m(&[0, 0, 0])], 3), 0);
    }

    #[test]
    fn ideal_equality() {
        let f = [xy_minus_x(), x2_minus_y()];
        let g = [xy_minus_x(), x2_minus_y(), y2_minus_y()];
        assert!(ideal_equal(&f, &g, DL).unwrap());
        let x = [p(&[(1, &[0, 1])])];
        let x2 = [p(&[(1, &[0, 2])])];
        assert!(!ideal_equal(&x, &x2, DL).unwrap());
    }

    #[test]
    fn module_basis_of_unit_vector() {
        let ord = ModuleOrder::top(DL);
        let e1 = ModuleElement::unit(0, 2);
        assert_eq!(module_buchberger(core::slice::from_ref(&e1), &ord), vec![e1]);
    }
}
