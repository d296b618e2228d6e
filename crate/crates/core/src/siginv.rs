//! Strong involutive bases in the style of signature-based algorithms.
//!
//! Elements are pairs `(u, v)` with `u_1 f_1 + ... + u_k f_k = v` over the
//! sorted input `F`. The signature of a pair is the leading module monomial
//! of `u` under the Schreyer ordering induced by `F`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::sync::atomic::AtomicBool;

use num_traits::One;

use crate::division::{in_cone, multiplicative_sets, DivisionKind, VarSet};
use crate::error::Error;
use crate::groebner::poll;
use crate::invbasis::{default_cap, prepare_input};
use crate::module::{ModuleElement, ModuleMonomial, ModuleOrder};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Recip;
use crate::poly::{Coeff, Polynomial, Term};

/// A pair `(rep, poly)` of the relation module with its bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigPair {
    pub poly: Polynomial,
    /// Ancestor id; ids below `|F|` are the sorted inputs.
    pub anc: usize,
    pub nmproc: VarSet,
    /// Representation over the sorted input slots.
    pub rep: ModuleElement,
    /// Cached `lm(rep)`.
    pub sig: ModuleMonomial,
    pub flag: bool,
}

impl SigPair {
    /// The pair `(e_slot, f)`.
    pub fn input(f: &Polynomial, slot: usize) -> SigPair {
        let n = f.lead().nvars();
        SigPair {
            poly: f.clone(),
            anc: slot,
            nmproc: VarSet::EMPTY,
            rep: ModuleElement::unit(slot, n),
            sig: ModuleMonomial::new(Monomial::one(n), slot),
            flag: false,
        }
    }

    /// Builds a pair from a representation; `None` when `rep` is zero.
    pub fn from_rep(rep: ModuleElement, poly: Polynomial, anc: usize, order: &ModuleOrder) -> Option<SigPair> {
        let sig = rep.lm(order)?;
        Some(SigPair { poly, anc, nmproc: VarSet::EMPTY, rep, sig, flag: false })
    }

    /// `x_i * self`.
    pub fn prolong(&self, i: usize) -> SigPair {
        let xm = Monomial::var(self.sig.mono.nvars(), i);
        SigPair {
            poly: self.poly.mul_monomial(&xm),
            anc: self.anc,
            nmproc: VarSet::EMPTY,
            rep: self.rep.mul_term(&Coeff::one(), &xm),
            sig: self.sig.mul(&xm),
            flag: false,
        }
    }

    /// `rep` evaluates to `poly` over `gens`.
    pub fn is_exact(&self, gens: &[Polynomial], ord: MonomialOrder) -> bool {
        self.rep.evaluate(gens, ord).is_ok_and(|v| v == self.poly)
    }
}

/// `p` is covered by `q`: `sig(q) | sig(p)` and `t lm(poly q) < lm(poly p)`
/// with `t = sig(p) / sig(q)`. A pair with zero polynomial covers everything
/// its signature divides.
pub fn covered(p: &SigPair, q: &SigPair, ord: MonomialOrder) -> bool {
    if !q.sig.divides(&p.sig) {
        return false;
    }
    let Some(lq) = q.poly.lm() else {
        return true;
    };
    let Some(lp) = p.poly.lm() else {
        return false;
    };
    let t = q.sig.mono.quotient_of(&p.sig.mono).unwrap();
    ord.compare(&t.mul(lq), lp) == Ordering::Less
}

/// Cover by a syzygy pair `(u, 0)` with `lm(u) = m`.
pub fn covered_by_sig(p: &SigPair, m: &ModuleMonomial) -> bool {
    m.divides(&p.sig)
}

/// Multiplicative variables of every element of `t` w.r.t. the leads of `t`.
fn mult_sets(t: &[SigPair], kind: DivisionKind) -> Vec<VarSet> {
    let leads: Vec<Monomial> = t.iter().map(|g| g.poly.lead().clone()).collect();
    multiplicative_sets(&leads, kind)
}

fn top_reduce_with(p: &SigPair, t: &[SigPair], mult: &[VarSet], order: &ModuleOrder) -> SigPair {
    let ord = order.base();
    let mut h = p.poly.clone();
    let mut quot: Vec<(Coeff, Monomial, &SigPair)> = Vec::new();
    let mut rem: Vec<Term> = Vec::new();
    while let Some(lt) = h.lt().cloned() {
        let reducer = t.iter().zip(mult).find_map(|(q, &mq)| {
            let lq = q.poly.lead();
            if !in_cone(lq, mq, &lt.mono) {
                return None;
            }
            let m = lq.quotient_of(&lt.mono).unwrap();
            (order.compare(&q.sig.mul(&m), &p.sig) == Ordering::Less).then_some((q, m))
        });
        match reducer {
            Some((q, m)) => {
                let c = &lt.coeff / q.poly.lc().unwrap();
                h.sub_assign_mul_term(&c, &m, &q.poly, ord);
                quot.push((-c, m, q));
            }
            None => rem.extend(h.pop_lead()),
        }
    }
    let rep = p.rep.add_products(quot.iter().map(|(c, m, q)| (c.clone(), m, &q.rep)), ord);
    debug_assert_eq!(rep.lm(order).as_ref(), Some(&p.sig), "regular reduction changed the signature");
    SigPair { poly: Polynomial::from_sorted_terms(rem), rep, ..p.clone() }
}

/// Eliminates every term of `poly(p)` that is involutively divisible by some
/// `q` in `t` whose scaled signature is strictly below `sig(p)`.
pub fn inv_top_reduce(p: &SigPair, t: &[SigPair], kind: DivisionKind, order: &ModuleOrder) -> SigPair {
    let live: Vec<SigPair> = t.iter().filter(|q| !q.poly.is_zero()).cloned().collect();
    let mult = mult_sets(&live, kind);
    top_reduce_with(p, &live, &mult, order)
}

/// `p` can be top-reduced by some `q` in `t` with `t lm(u_q) = lm(u_p)`.
fn super_reducible(p: &SigPair, t: &[SigPair], mult: &[VarSet]) -> bool {
    let Some(lp) = p.poly.lm() else {
        return false;
    };
    t.iter().zip(mult).any(|(q, &mq)| {
        let lq = q.poly.lead();
        in_cone(lq, mq, lp) && q.sig.mul(&lq.quotient_of(lp).unwrap()) == p.sig
    })
}

/// Which live pairs take part in cover checks (syzygy signatures always do).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CoverMode {
    /// Basis and queue.
    #[default]
    Live,
    /// Basis only.
    BasisOnly,
    /// No cover checks at all.
    Off,
}

#[derive(Clone, Copy, Debug)]
pub struct SigOptions<'a> {
    pub cover: CoverMode,
    /// Keep the representations of zero reductions.
    pub keep_syzygies: bool,
    pub max_iter: Option<usize>,
    pub cancel: Option<&'a AtomicBool>,
}

impl Default for SigOptions<'_> {
    fn default() -> Self {
        SigOptions { cover: CoverMode::Live, keep_syzygies: false, max_iter: None, cancel: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SigStats {
    pub cover_skips: usize,
    pub redz: usize,
    pub max_deg: u32,
    pub queue_peak: usize,
    pub iterations: usize,
}

#[derive(Clone, Debug)]
pub struct StrongBasisResult {
    /// `poly` of the final pairs, monic and sorted by increasing lead.
    pub basis: Vec<Polynomial>,
    /// The final pairs, in the same order as `basis`.
    pub pairs: Vec<SigPair>,
    /// Signatures of zero reductions, over the sorted input slots.
    pub syz_lms: Vec<ModuleMonomial>,
    /// Zero-reduction representations (only with `keep_syzygies`).
    pub syzygies: Vec<ModuleElement>,
    /// The input sorted by increasing leading monomial.
    pub input: Vec<Polynomial>,
    /// `input_order[s]` is the original index of sorted input `s`.
    pub input_order: Vec<usize>,
    /// Schreyer ordering induced by the sorted input.
    pub order: ModuleOrder,
    pub stats: SigStats,
}

struct Queued {
    pair: SigPair,
    seq: usize,
}

struct Engine<'a> {
    kind: DivisionKind,
    ord: MonomialOrder,
    order: ModuleOrder,
    opts: SigOptions<'a>,
    n: usize,
    anc_leads: Vec<Monomial>,
    t: Vec<SigPair>,
    q: Vec<Queued>,
    h: Vec<ModuleMonomial>,
    syz: Vec<ModuleElement>,
    seq: usize,
    stats: SigStats,
}

impl Engine<'_> {
    fn enqueue(&mut self, pair: SigPair) {
        self.q.push(Queued { pair, seq: self.seq });
        self.seq += 1;
        self.stats.queue_peak = self.stats.queue_peak.max(self.q.len());
    }

    fn pop(&mut self) -> Option<SigPair> {
        let mut best = 0;
        for i in 1..self.q.len() {
            let (a, b) = (&self.q[i], &self.q[best]);
            if self.order.compare(&a.pair.sig, &b.pair.sig).then(a.seq.cmp(&b.seq)) == Ordering::Less {
                best = i;
            }
        }
        (!self.q.is_empty()).then(|| self.q.swap_remove(best).pair)
    }

    fn is_covered(&self, p: &SigPair) -> bool {
        if self.h.iter().any(|m| covered_by_sig(p, m)) {
            return true;
        }
        match self.opts.cover {
            CoverMode::Off => false,
            CoverMode::BasisOnly => self.t.iter().any(|g| covered(p, g, self.ord)),
            CoverMode::Live => {
                self.t.iter().any(|g| covered(p, g, self.ord)) || self.q.iter().any(|g| covered(p, &g.pair, self.ord))
            }
        }
    }

    fn prolong(&mut self) {
        let mult = mult_sets(&self.t, self.kind);
        let all = VarSet::all(self.n);
        let mut fresh = Vec::new();
        for (g, m) in self.t.iter_mut().zip(&mult) {
            let nm = all.difference(*m);
            fresh.extend(nm.difference(g.nmproc).iter().map(|x| g.prolong(x)));
            g.nmproc = g.nmproc.union(nm);
        }
        for p in fresh {
            self.enqueue(p);
        }
    }

    fn run(&mut self, max_iter: usize) -> Result<(), Error> {
        while let Some(p) = self.pop() {
            poll(self.opts.cancel)?;
            self.stats.iterations += 1;
            if self.stats.iterations > max_iter {
                return Err(Error::IterationCap { limit: max_iter });
            }
            if self.is_covered(&p) {
                self.stats.cover_skips += 1;
                continue;
            }
            self.step(p);
        }
        Ok(())
    }

    fn step(&mut self, p: SigPair) {
        self.stats.max_deg = self.stats.max_deg.max(p.poly.degree().unwrap_or(0));
        let mult = mult_sets(&self.t, self.kind);
        let h = top_reduce_with(&p, &self.t, &mult, &self.order);
        if h.poly.is_zero() {
            self.stats.redz += 1;
            if !self.h.contains(&p.sig) {
                self.h.push(p.sig.clone());
            }
            if self.opts.keep_syzygies {
                self.syz.push(h.rep);
            }
            if p.poly.lm() == Some(&self.anc_leads[p.anc]) {
                self.q.retain(|q| q.pair.anc != p.anc || q.pair.flag);
            }
        } else {
            self.stats.max_deg = self.stats.max_deg.max(h.poly.degree().unwrap_or(0));
            let inv = h.poly.lc().unwrap().recip();
            let (poly, rep) = (h.poly.scale(&inv), h.rep.scale(&inv));
            if poly.lm() != p.poly.lm() {
                let lh = poly.lead().clone();
                let mut kept = Vec::new();
                for g in core::mem::take(&mut self.t) {
                    let lg = g.poly.lead();
                    if lh.divides(lg) && &lh != lg {
                        self.enqueue(SigPair { flag: true, ..g });
                    } else {
                        kept.push(g);
                    }
                }
                self.t = kept;
                self.anc_leads.push(lh);
                let anc = self.anc_leads.len() - 1;
                self.t.push(SigPair { poly, rep, anc, nmproc: VarSet::EMPTY, sig: h.sig, flag: false });
            } else {
                self.t.push(SigPair { poly, rep, anc: p.anc, nmproc: p.nmproc, sig: h.sig, flag: false });
            }
        }
        self.prolong();
    }
}

/// Strong involutive basis of `<F>`: an involutive basis of the ideal and the
/// signatures of the zero reductions, which generate the leading module of
/// the syzygies of the sorted input.
pub fn st_inv_basis(
    input: &[Polynomial],
    kind: DivisionKind,
    ord: MonomialOrder,
    opts: SigOptions,
) -> Result<StrongBasisResult, Error> {
    let (sorted, input_order) = prepare_input(input, ord)?;
    let order = ModuleOrder::schreyer_for(ord, &sorted)?;
    let n = sorted[0].lead().nvars();
    let mut e = Engine {
        kind,
        ord,
        order,
        opts,
        n,
        anc_leads: sorted.iter().map(|f| f.lead().clone()).collect(),
        t: Vec::new(),
        q: Vec::new(),
        h: Vec::new(),
        syz: Vec::new(),
        seq: 0,
        stats: SigStats::default(),
    };
    for (i, f) in sorted.iter().enumerate() {
        e.enqueue(SigPair::input(f, i));
    }
    e.run(opts.max_iter.unwrap_or_else(|| default_cap(input)))?;
    let mut pairs: Vec<SigPair> =
        e.t.into_iter()
            .map(|g| {
                let inv = g.poly.lc().unwrap().recip();
                SigPair { poly: g.poly.scale(&inv), rep: g.rep.scale(&inv), ..g }
            })
            .collect();
    pairs.sort_by(|a, b| ord.compare(a.poly.lead(), b.poly.lead()).then_with(|| e.order.compare(&a.sig, &b.sig)));
    Ok(StrongBasisResult {
        basis: pairs.iter().map(|g| g.poly.clone()).collect(),
        pairs,
        syz_lms: e.h,
        syzygies: e.syz,
        input: sorted,
        input_order,
        order: e.order,
        stats: e.stats,
    })
}

/// A failure of the strong-basis certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrongIssue {
    /// No signature divides `e_slot`.
    SlotUncovered { slot: usize },
    /// The pair's representation does not evaluate to its polynomial.
    Inexact { index: usize },
    /// The head of `pairs[index]` admits a regular top-reduction by `pairs`.
    Reducible { index: usize },
    /// `x_var * pairs[index]` is neither covered nor eventually super reducible.
    Prolongation { index: usize, var: usize },
}

/// Checks that no pair is regularly top-reducible by the others and that
/// every non-multiplicative prolongation of `pairs` is covered by `pairs` and
/// `syz_lms`, or is eventually super top-reducible by them. An empty report
/// certifies a strong involutive basis.
pub fn strong_basis_check(
    pairs: &[SigPair],
    syz_lms: &[ModuleMonomial],
    input: &[Polynomial],
    kind: DivisionKind,
    order: &ModuleOrder,
) -> Vec<StrongIssue> {
    let ord = order.base();
    let mut issues = Vec::new();
    let n = input.first().map_or(0, |f| f.lead().nvars());
    for slot in 0..input.len() {
        let e = ModuleMonomial::new(Monomial::one(n), slot);
        if !pairs.iter().any(|g| g.sig.divides(&e)) && !syz_lms.iter().any(|m| m.divides(&e)) {
            issues.push(StrongIssue::SlotUncovered { slot });
        }
    }
    for (index, g) in pairs.iter().enumerate() {
        if !g.is_exact(input, ord) {
            issues.push(StrongIssue::Inexact { index });
        }
    }
    let live: Vec<SigPair> = pairs.iter().filter(|g| !g.poly.is_zero()).cloned().collect();
    let mult = mult_sets(&live, kind);
    for (index, g) in live.iter().enumerate() {
        let head = SigPair { poly: Polynomial::term(g.poly.lc().unwrap().clone(), g.poly.lead().clone()), ..g.clone() };
        if top_reduce_with(&head, &live, &mult, order).poly.is_zero() {
            issues.push(StrongIssue::Reducible { index });
        }
    }
    let all = VarSet::all(n);
    for (index, (g, m)) in live.iter().zip(&mult).enumerate() {
        for var in all.difference(*m).iter() {
            let p = g.prolong(var);
            if syz_lms.iter().any(|s| covered_by_sig(&p, s)) || pairs.iter().any(|q| covered(&p, q, ord)) {
                continue;
            }
            let h = top_reduce_with(&p, &live, &mult, order);
            if !super_reducible(&h, &live, &mult) {
                issues.push(StrongIssue::Prolongation { index, var });
            }
        }
    }
    issues
}
