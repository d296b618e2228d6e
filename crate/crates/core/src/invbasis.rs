//! Involutive completion with syzygy tracking.
//!
//! Every polynomial that enters the basis is bound to a slot of an
//! append-only registry, and every tracked element carries a representation
//! over registry slots. Syzygies found during completion are expressed over
//! the registry and finally rewritten over the returned basis.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::sync::atomic::AtomicBool;

use num_traits::One;

use crate::division::{in_cone, multiplicative_sets, ConeIndex, DivisionKind, VarSet};
use crate::error::Error;
use crate::groebner::{check_generators, poll};
use crate::module::{ModuleElement, ModuleMonomial, ModuleOrder};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Recip;
use crate::poly::{Coeff, Polynomial, Term};

/// A polynomial under completion together with its bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrackedGen {
    pub poly: Polynomial,
    /// Registry slot of the ancestor.
    pub anc: usize,
    /// Non-multiplicative variables already prolonged.
    pub nmproc: VarSet,
    /// Representation over registry slots (zero when tracking is off).
    pub rep: ModuleElement,
    /// Set once the element has been moved back from the basis to the queue.
    pub flag: bool,
    /// Registry slot bound to `poly`, if registered.
    pub slot: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InvStats {
    pub c1: usize,
    pub c2: usize,
    pub redz: usize,
    /// Elements discarded by the syzygy-signature test.
    pub syz: usize,
    pub max_deg: u32,
    pub queue_peak: usize,
    pub iterations: usize,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct InvOptions<'a> {
    /// Iteration budget; `None` uses `10 (n |F| d)^2`.
    pub max_iter: Option<usize>,
    /// Assert representation exactness after every iteration.
    pub check_reps: bool,
    pub cancel: Option<&'a AtomicBool>,
}

#[derive(Clone, Debug)]
pub struct InvBasisResult {
    /// Final basis, sorted by increasing leading monomial.
    pub basis: Vec<Polynomial>,
    /// Bookkeeping of the basis elements, in the same order.
    pub tracked: Vec<TrackedGen>,
    /// Syzygies of `basis`, over basis positions.
    pub syzygies: Vec<ModuleElement>,
    /// Every polynomial ever bound to a slot.
    pub registry: Vec<Polynomial>,
    /// Syzygies over registry slots, before rewriting.
    pub raw_syzygies: Vec<ModuleElement>,
    /// `input_order[s]` is the original index of the input bound to slot `s`.
    pub input_order: Vec<usize>,
    pub stats: InvStats,
}

/// Outcome of an involutive normal form computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalForm {
    /// Reduced to zero (or discarded by a criterion) with the recorded syzygy.
    Zero {
        syzygy: ModuleElement,
        criterion: Option<Criterion>,
    },
    Reduced {
        poly: Polynomial,
        rep: ModuleElement,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Criterion {
    C1,
    C2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Selection {
    Signature,
    Lead,
}

struct Config<'a> {
    kind: DivisionKind,
    ord: MonomialOrder,
    track: bool,
    selection: Selection,
    c2: bool,
    skip: &'a [ModuleMonomial],
    max_iter: usize,
    check_reps: bool,
    cancel: Option<&'a AtomicBool>,
}

struct Queued {
    gen: TrackedGen,
    sig: Option<ModuleMonomial>,
    seq: usize,
    skippable: bool,
}

/// Validates input and sorts it by increasing leading monomial.
pub(crate) fn prepare_input(input: &[Polynomial], ord: MonomialOrder) -> Result<(Vec<Polynomial>, Vec<usize>), Error> {
    check_generators(input)?;
    let n = input[0].lead().nvars();
    for (i, f) in input.iter().enumerate() {
        if f.lead().nvars() != n {
            return Err(Error::DimensionMismatch { expected: n, found: f.lead().nvars() });
        }
        let mf = f.monic()?;
        if let Some(j) = input[..i].iter().position(|g| g.lm() == f.lm() && g.monic().as_ref() == Ok(&mf)) {
            return Err(Error::DuplicateGenerator { first: j, second: i });
        }
    }
    let mut order: Vec<usize> = (0..input.len()).collect();
    order.sort_by(|&a, &b| ord.compare(input[a].lead(), input[b].lead()));
    Ok((order.iter().map(|&i| input[i].clone()).collect(), order))
}

pub(crate) fn default_cap(input: &[Polynomial]) -> usize {
    let n = input.first().and_then(|f| f.lm()).map_or(1, Monomial::nvars);
    let d = input.iter().filter_map(Polynomial::degree).max().unwrap_or(1).max(1) as usize;
    let base = n.max(1) * input.len() * d;
    10usize.saturating_mul(base.saturating_mul(base))
}

/// Cones of a list of polynomials, ordered by increasing leading monomial
/// then position, so lookups pick the smallest admissible divisor.
pub fn cone_index(polys: &[Polynomial], kind: DivisionKind, ord: MonomialOrder) -> ConeIndex {
    lead_cone_index(polys.iter().map(|p| p.lead().clone()).collect(), kind, ord)
}

pub(crate) fn lead_cone_index(leads: Vec<Monomial>, kind: DivisionKind, ord: MonomialOrder) -> ConeIndex {
    let mult = multiplicative_sets(&leads, kind);
    let mut idx: Vec<usize> = (0..leads.len()).collect();
    idx.sort_by(|&a, &b| ord.compare(&leads[a], &leads[b]).then(a.cmp(&b)));
    ConeIndex::new(idx.into_iter().map(|i| (leads[i].clone(), mult[i], i)).collect())
}

/// Full involutive reduction with quotients over positions of `basis`.
pub fn involutive_reduce(
    f: &Polynomial,
    basis: &[Polynomial],
    cones: &ConeIndex,
    ord: MonomialOrder,
) -> (Polynomial, ModuleElement) {
    let mut h = f.clone();
    let mut rem: Vec<Term> = Vec::new();
    let mut quot: Vec<Vec<(Coeff, Monomial)>> = vec![Vec::new(); basis.len()];
    while let Some(lt) = h.lt().cloned() {
        match cones.find(&lt.mono) {
            Some((i, u)) => {
                let g = &basis[i];
                let c = &lt.coeff / g.lc().unwrap();
                let m = u.quotient_of(&lt.mono).unwrap();
                h.sub_assign_mul_term(&c, &m, g, ord);
                quot[i].push((c, m));
            }
            None => rem.extend(h.pop_lead()),
        }
    }
    let q = ModuleElement::from_coords(quot.into_iter().enumerate().map(|(i, t)| (i, Polynomial::from_terms(t, ord))));
    (Polynomial::from_sorted_terms(rem), q)
}

/// Involutive normal form of a tracked element against the current basis `t`.
///
/// A term is eliminated whenever it is involutively divisible by a basis
/// element; when the first eliminated term is the leading term and the
/// ancestors satisfy criterion C1 (or C2 if enabled) the element is
/// discarded and the ancestors' Koszul syzygy is returned.
pub fn inv_normal_form(
    p: &TrackedGen,
    t: &[TrackedGen],
    registry: &[Polynomial],
    kind: DivisionKind,
    ord: MonomialOrder,
) -> NormalForm {
    let cones = lead_cone_index(t.iter().map(|g| g.poly.lead().clone()).collect(), kind, ord);
    normal_form_in(p, t, &cones, registry, ord, true, false)
}

fn normal_form_in(
    p: &TrackedGen,
    t: &[TrackedGen],
    cones: &ConeIndex,
    registry: &[Polynomial],
    ord: MonomialOrder,
    track: bool,
    c2: bool,
) -> NormalForm {
    let mut h = p.poly.clone();
    let mut quot: Vec<(Coeff, Monomial, usize)> = Vec::new();
    let mut rem: Vec<Term> = Vec::new();
    let head = p.poly.lm().cloned();
    let mut first = true;
    while let Some(lt) = h.lt().cloned() {
        let Some((i, u)) = cones.find(&lt.mono) else {
            rem.extend(h.pop_lead());
            first = false;
            continue;
        };
        let g = &t[i];
        if first && Some(&lt.mono) == head.as_ref() && g.anc != p.anc {
            let ap = registry[p.anc].lead();
            let ag = registry[g.anc].lead();
            let crit = if &ap.mul(ag) == head.as_ref().unwrap() {
                Some(Criterion::C1)
            } else if c2 && {
                let l = ap.lcm(ag);
                l.divides(&lt.mono) && l != lt.mono
            } {
                Some(Criterion::C2)
            } else {
                None
            };
            if let Some(criterion) = crit {
                let syzygy = if track {
                    ModuleElement::from_coords(vec![(g.anc, registry[p.anc].clone()), (p.anc, registry[g.anc].neg())])
                } else {
                    ModuleElement::zero()
                };
                return NormalForm::Zero { syzygy, criterion: Some(criterion) };
            }
        }
        first = false;
        let c = &lt.coeff / g.poly.lc().unwrap();
        let m = u.quotient_of(&lt.mono).unwrap();
        h.sub_assign_mul_term(&c, &m, &g.poly, ord);
        if track {
            quot.push((-c, m, i));
        }
    }
    let q = if track {
        p.rep.add_products(quot.iter().map(|(c, m, i)| (c.clone(), m, &t[*i].rep)), ord)
    } else {
        p.rep.clone()
    };
    if rem.is_empty() {
        NormalForm::Zero { syzygy: q, criterion: None }
    } else {
        NormalForm::Reduced { poly: Polynomial::from_sorted_terms(rem), rep: q }
    }
}

struct Engine<'a> {
    cfg: Config<'a>,
    n: usize,
    registry: Vec<Polynomial>,
    sorder: ModuleOrder,
    t: Vec<TrackedGen>,
    q: Vec<Queued>,
    syz: Vec<ModuleElement>,
    defs: Vec<ModuleElement>,
    skipped: Vec<TrackedGen>,
    revived: bool,
    cones: Option<ConeIndex>,
    prolonged: usize,
    seq: usize,
    stats: InvStats,
}

impl<'a> Engine<'a> {
    fn new(cfg: Config<'a>, sorted: &[Polynomial]) -> Self {
        let n = sorted[0].lead().nvars();
        let mut e = Engine {
            sorder: ModuleOrder::schreyer_empty(cfg.ord),
            cfg,
            n,
            registry: Vec::new(),
            t: Vec::new(),
            q: Vec::new(),
            syz: Vec::new(),
            defs: Vec::new(),
            skipped: Vec::new(),
            revived: false,
            cones: None,
            prolonged: 0,
            seq: 0,
            stats: InvStats::default(),
        };
        for (i, f) in sorted.iter().enumerate() {
            e.bind(f.clone());
            let gen = TrackedGen {
                poly: f.clone(),
                anc: i,
                nmproc: VarSet::EMPTY,
                rep: e.unit(i),
                flag: false,
                slot: Some(i),
            };
            if i == 0 {
                e.t.push(gen);
            } else {
                e.enqueue(gen);
            }
        }
        e
    }

    fn unit(&self, slot: usize) -> ModuleElement {
        if self.cfg.track {
            ModuleElement::unit(slot, self.n)
        } else {
            ModuleElement::zero()
        }
    }

    fn bind(&mut self, f: Polynomial) -> usize {
        self.sorder.push_lead(f.lead().clone());
        self.registry.push(f);
        self.registry.len() - 1
    }

    // Binds `f` to a fresh slot and records `trace - e_slot`.
    fn register(&mut self, f: Polynomial, trace: &ModuleElement) -> usize {
        let j = self.bind(f);
        if self.cfg.track {
            let mut d = trace.clone();
            d.add_at(j, &Polynomial::constant(-Coeff::one(), self.n), self.cfg.ord);
            self.defs.push(d);
        }
        j
    }

    fn enqueue(&mut self, gen: TrackedGen) {
        self.enqueue_with(gen, true);
    }

    fn enqueue_with(&mut self, gen: TrackedGen, skippable: bool) {
        let sig = if self.cfg.track { gen.rep.lm(&self.sorder) } else { None };
        self.q.push(Queued { gen, sig, seq: self.seq, skippable });
        self.seq += 1;
        self.stats.queue_peak = self.stats.queue_peak.max(self.q.len());
    }

    fn pop(&mut self) -> Option<Queued> {
        if self.q.is_empty() {
            return None;
        }
        let ord = self.cfg.ord;
        let mut best = 0;
        for i in 1..self.q.len() {
            let (a, b) = (&self.q[i], &self.q[best]);
            let c = match self.cfg.selection {
                Selection::Signature => match (&a.sig, &b.sig) {
                    (Some(x), Some(y)) => self.sorder.compare(x, y),
                    _ => ord.compare(a.gen.poly.lead(), b.gen.poly.lead()),
                },
                Selection::Lead => ord.compare(a.gen.poly.lead(), b.gen.poly.lead()),
            };
            if c.then(a.seq.cmp(&b.seq)) == Ordering::Less {
                best = i;
            }
        }
        Some(self.q.swap_remove(best))
    }

    fn prolong(&mut self) {
        // Pommaret sets do not depend on the rest of T, so a processed prefix stays processed.
        let start = match self.cfg.kind {
            DivisionKind::Pommaret => self.prolonged.min(self.t.len()),
            DivisionKind::Janet => 0,
        };
        let leads: Vec<&Monomial> = self.t.iter().map(|g| g.poly.lead()).collect();
        let mult = match self.cfg.kind {
            DivisionKind::Pommaret => multiplicative_sets(&leads[start..], self.cfg.kind),
            DivisionKind::Janet => multiplicative_sets(&leads, self.cfg.kind),
        };
        self.prolonged = self.t.len();
        let all = VarSet::all(self.n);
        let mut fresh = Vec::new();
        for (g, m) in self.t[start..].iter_mut().zip(&mult) {
            let nm = all.difference(*m);
            let todo = nm.difference(g.nmproc);
            for x in todo.iter() {
                let xm = Monomial::var(self.n, x);
                fresh.push(TrackedGen {
                    poly: g.poly.mul_monomial(&xm),
                    anc: g.anc,
                    nmproc: VarSet::EMPTY,
                    rep: g.rep.mul_term(&Coeff::one(), &xm),
                    flag: false,
                    slot: None,
                });
            }
            g.nmproc = g.nmproc.union(nm);
        }
        for gen in fresh {
            self.enqueue(gen);
        }
    }

    fn run(&mut self) -> Result<(), Error> {
        if self.q.is_empty() {
            self.prolong();
        }
        loop {
            while let Some(Queued { gen, sig, skippable, .. }) = self.pop() {
                poll(self.cfg.cancel)?;
                self.stats.iterations += 1;
                if self.stats.iterations > self.cfg.max_iter {
                    return Err(Error::IterationCap { limit: self.cfg.max_iter });
                }
                if skippable && sig.as_ref().is_some_and(|s| self.cfg.skip.iter().any(|m| m.divides(s))) {
                    self.skipped.push(gen);
                    continue;
                }
                self.step(gen);
                if self.cfg.check_reps && self.cfg.track {
                    self.assert_reps();
                }
            }
            if !self.revive_skipped() {
                break;
            }
        }
        self.stats.syz = self.skipped.len();
        Ok(())
    }

    // Skipped elements that no longer reduce to zero are queued again,
    // this time without the syzygy test.
    fn revive_skipped(&mut self) -> bool {
        if self.skipped.is_empty() {
            return false;
        }
        let ord = self.cfg.ord;
        let polys: Vec<Polynomial> = self.t.iter().map(|g| g.poly.clone()).collect();
        let cones = cone_index(&polys, self.cfg.kind, ord);
        let mut revived = false;
        for p in core::mem::take(&mut self.skipped) {
            if involutive_reduce(&p.poly, &polys, &cones, ord).0.is_zero() {
                self.skipped.push(p);
            } else {
                self.enqueue_with(p, false);
                revived = true;
            }
        }
        self.revived |= revived;
        revived
    }

    fn step(&mut self, p: TrackedGen) {
        let ord = self.cfg.ord;
        self.stats.max_deg = self.stats.max_deg.max(p.poly.degree().unwrap_or(0));
        if self.cones.is_none() {
            let leads = self.t.iter().map(|g| g.poly.lead().clone()).collect();
            self.cones = Some(lead_cone_index(leads, self.cfg.kind, ord));
        }
        let cones = self.cones.as_ref().expect("built above");
        let nf = normal_form_in(&p, &self.t, cones, &self.registry, ord, self.cfg.track, self.cfg.c2);
        match nf {
            NormalForm::Zero { syzygy, criterion } => {
                match criterion {
                    Some(Criterion::C1) => self.stats.c1 += 1,
                    Some(Criterion::C2) => self.stats.c2 += 1,
                    None => self.stats.redz += 1,
                }
                if !syzygy.is_zero() {
                    self.syz.push(syzygy);
                }
                if p.poly.lm() == self.registry[p.anc].lm() {
                    self.q.retain(|q| q.gen.anc != p.anc || q.gen.flag);
                }
            }
            NormalForm::Reduced { poly: h, rep } => {
                self.stats.max_deg = self.stats.max_deg.max(h.degree().unwrap_or(0));
                let inv = h.lc().unwrap().recip();
                if h.lm() != p.poly.lm() {
                    self.requeue_multiples(h.lead());
                    let j = self.register(h.scale(&inv), &rep.scale(&inv));
                    let gen = TrackedGen {
                        poly: self.registry[j].clone(),
                        anc: j,
                        nmproc: VarSet::EMPTY,
                        rep: self.unit(j),
                        flag: false,
                        slot: Some(j),
                    };
                    self.push_t(gen);
                } else {
                    if self.revived {
                        // revived elements arrive out of order, so T may hold multiples of lm(h)
                        self.requeue_multiples(h.lead());
                    }
                    let reuse = p.slot.filter(|&s| self.registry[s] == h);
                    let (poly, rep, slot) = match reuse {
                        Some(s) => {
                            if self.cfg.track && rep != self.unit(s) {
                                let mut d = rep.clone();
                                d.add_at(s, &Polynomial::constant(-Coeff::one(), self.n), ord);
                                if !d.is_zero() {
                                    self.defs.push(d);
                                }
                            }
                            (h, rep, s)
                        }
                        None => {
                            let (h, rep) = (h.scale(&inv), rep.scale(&inv));
                            let j = self.register(h.clone(), &rep);
                            (h, rep, j)
                        }
                    };
                    self.push_t(TrackedGen { poly, anc: p.anc, nmproc: p.nmproc, rep, flag: false, slot: Some(slot) });
                }
            }
        }
        self.prolong();
    }

    fn push_t(&mut self, gen: TrackedGen) {
        match (&mut self.cones, self.cfg.kind) {
            (Some(cones), DivisionKind::Pommaret) => {
                let lead = gen.poly.lead().clone();
                let mult = crate::division::pommaret_multiplicative(&lead);
                cones.insert(lead, mult, self.t.len(), self.cfg.ord);
            }
            _ => self.cones = None,
        }
        self.t.push(gen);
    }

    // Moves elements of T whose lead is a proper multiple of `lead` back to Q.
    fn requeue_multiples(&mut self, lead: &Monomial) {
        if !self.t.iter().any(|g| lead.divides(g.poly.lead()) && lead != g.poly.lead()) {
            return;
        }
        self.cones = None;
        self.prolonged = 0;
        let mut kept = Vec::new();
        for g in core::mem::take(&mut self.t) {
            let lg = g.poly.lead();
            if lead.divides(lg) && lead != lg {
                self.enqueue(TrackedGen { flag: true, ..g });
            } else {
                kept.push(g);
            }
        }
        self.t = kept;
    }

    fn assert_reps(&self) {
        let ord = self.cfg.ord;
        for g in self.t.iter().chain(self.q.iter().map(|q| &q.gen)) {
            let v = g.rep.evaluate(&self.registry, ord).expect("slot in range");
            assert_eq!(v, g.poly, "representation out of sync");
        }
    }

    fn finish(self, input_order: Vec<usize>) -> Result<InvBasisResult, Error> {
        let ord = self.cfg.ord;
        let mut tracked = self.t;
        tracked.sort_by(|a, b| ord.compare(a.poly.lead(), b.poly.lead()).then(a.slot.cmp(&b.slot)));
        let basis: Vec<Polynomial> = tracked.iter().map(|g| g.poly.clone()).collect();
        let mut raw = self.syz;
        raw.extend(self.defs);
        let mut syzygies = Vec::new();
        if self.cfg.track {
            let cones = cone_index(&basis, self.cfg.kind, ord);
            let mut image: Vec<ModuleElement> = Vec::with_capacity(self.registry.len());
            for (s, f) in self.registry.iter().enumerate() {
                match tracked.iter().position(|g| g.slot == Some(s)) {
                    Some(i) => image.push(ModuleElement::unit(i, self.n)),
                    None => {
                        let (r, q) = involutive_reduce(f, &basis, &cones, ord);
                        if !r.is_zero() {
                            return Err(Error::Unreduced { slot: s });
                        }
                        image.push(q);
                    }
                }
            }
            for x in &raw {
                let y = x.substitute(|s| image[s].clone(), ord);
                if !y.is_zero() && !syzygies.contains(&y) {
                    syzygies.push(y);
                }
            }
            if let Some(index) = syzygies.iter().position(|s| !s.is_syzygy_of(&basis, ord)) {
                return Err(Error::NotSyzygy { index });
            }
        }
        Ok(InvBasisResult {
            basis,
            tracked,
            syzygies,
            registry: self.registry,
            raw_syzygies: raw,
            input_order,
            stats: self.stats,
        })
    }
}

#[allow(clippy::too_many_arguments)]
fn complete(
    input: &[Polynomial],
    kind: DivisionKind,
    ord: MonomialOrder,
    track: bool,
    selection: Selection,
    c2: bool,
    skip: &[ModuleMonomial],
    opts: InvOptions,
) -> Result<InvBasisResult, Error> {
    let (sorted, order) = prepare_input(input, ord)?;
    let cfg = Config {
        kind,
        ord,
        track,
        selection,
        c2,
        skip,
        max_iter: opts.max_iter.unwrap_or_else(|| default_cap(input)),
        check_reps: opts.check_reps,
        cancel: opts.cancel,
    };
    let mut engine = Engine::new(cfg, &sorted);
    engine.run()?;
    engine.finish(order)
}

/// Minimal involutive basis of `<F>` together with generators of the syzygy
/// module of the returned basis.
pub fn inv_basis(
    input: &[Polynomial],
    kind: DivisionKind,
    ord: MonomialOrder,
    opts: InvOptions,
) -> Result<InvBasisResult, Error> {
    complete(input, kind, ord, true, Selection::Signature, false, &[], opts)
}

/// Gerdt's completion without syzygy tracking, queue sorted by leading
/// monomial, criteria C1 and optionally C2.
pub fn gerdt_classic(
    input: &[Polynomial],
    kind: DivisionKind,
    ord: MonomialOrder,
    use_c2: bool,
    opts: InvOptions,
) -> Result<InvBasisResult, Error> {
    complete(input, kind, ord, false, Selection::Lead, use_c2, &[], opts)
}

/// Completion of `F` that discards every queued element whose signature is
/// divisible by the leading module monomial of a known syzygy of `F`.
/// `syz` is indexed by the positions of `input`.
pub fn next_inv_basis(
    input: &[Polynomial],
    syz: &[ModuleElement],
    kind: DivisionKind,
    ord: MonomialOrder,
    opts: InvOptions,
) -> Result<InvBasisResult, Error> {
    if let Some(index) = syz.iter().position(|s| !s.is_syzygy_of(input, ord)) {
        return Err(Error::NotSyzygy { index });
    }
    next_inv_basis_trusted(input, syz, kind, ord, opts)
}

/// `next_inv_basis` for syzygies known to be valid, e.g. images of syzygies
/// under an invertible change of variables.
pub(crate) fn next_inv_basis_trusted(
    input: &[Polynomial],
    syz: &[ModuleElement],
    kind: DivisionKind,
    ord: MonomialOrder,
    opts: InvOptions,
) -> Result<InvBasisResult, Error> {
    let (sorted, order) = prepare_input(input, ord)?;
    let mut slot_of = vec![0; input.len()];
    for (s, &orig) in order.iter().enumerate() {
        slot_of[orig] = s;
    }
    let sorder = ModuleOrder::schreyer_for(ord, &sorted)?;
    let leads: Vec<ModuleMonomial> = syz.iter().filter_map(|s| s.map_slots(|i| slot_of[i]).lm(&sorder)).collect();
    complete(input, kind, ord, true, Selection::Signature, false, &leads, opts)
}

/// `x_k h_i - sum_j p_j e_j` for every element and every non-multiplicative
/// variable, where the sum is the involutive standard representation of the
/// prolongation.
pub fn syzygies_direct(
    basis: &[Polynomial],
    kind: DivisionKind,
    ord: MonomialOrder,
) -> Result<Vec<ModuleElement>, Error> {
    check_generators(basis)?;
    let n = basis[0].lead().nvars();
    let leads: Vec<Monomial> = basis.iter().map(|p| p.lead().clone()).collect();
    let mult = multiplicative_sets(&leads, kind);
    let cones = cone_index(basis, kind, ord);
    let mut out = Vec::new();
    for (i, h) in basis.iter().enumerate() {
        for k in VarSet::all(n).difference(mult[i]).iter() {
            let xk = Monomial::var(n, k);
            let (r, q) = involutive_reduce(&h.mul_monomial(&xk), basis, &cones, ord);
            if !r.is_zero() {
                return Err(Error::NotInvolutive { element: i, var: k });
            }
            let mut s = ModuleElement::single(i, Polynomial::term(Coeff::one(), xk));
            s = s.sub(&q, ord);
            out.push(s);
        }
    }
    Ok(out)
}

/// Orders the basis so that the involutive divisor of every
/// non-multiplicative prolongation comes later. Returns the permutation
/// (new position -> old position), or `None` if no such order exists.
pub fn involutive_order(basis: &[Polynomial], kind: DivisionKind, ord: MonomialOrder) -> Option<Vec<usize>> {
    if basis.is_empty() {
        return Some(Vec::new());
    }
    let n = basis[0].lead().nvars();
    let leads: Vec<Monomial> = basis.iter().map(|p| p.lead().clone()).collect();
    let mult = multiplicative_sets(&leads, kind);
    let cones = cone_index(basis, kind, ord);
    let len = basis.len();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); len];
    let mut indeg = vec![0usize; len];
    for i in 0..len {
        for k in VarSet::all(n).difference(mult[i]).iter() {
            if let Some((j, _)) = cones.find(&leads[i].mul_var(k)) {
                if j == i {
                    return None;
                }
                succ[i].push(j);
                indeg[j] += 1;
            }
        }
    }
    let mut out = Vec::with_capacity(len);
    let mut ready: Vec<usize> = (0..len).filter(|&i| indeg[i] == 0).collect();
    while !ready.is_empty() {
        let pos = (0..ready.len()).min_by(|&a, &b| ord.compare(&leads[ready[a]], &leads[ready[b]])).unwrap();
        let i = ready.swap_remove(pos);
        out.push(i);
        for &j in &succ[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                ready.push(j);
            }
        }
    }
    (out.len() == len).then_some(out)
}

/// No leading monomial is involutively divisible by another one.
pub fn is_involutively_autoreduced(basis: &[Polynomial], kind: DivisionKind) -> bool {
    let leads: Vec<Monomial> = basis.iter().map(|p| p.lead().clone()).collect();
    let mult = multiplicative_sets(&leads, kind);
    (0..leads.len()).all(|i| (0..leads.len()).all(|j| i == j || !in_cone(&leads[j], mult[j], &leads[i])))
}

/// Every non-multiplicative prolongation of a leading monomial lies in an
/// involutive cone (local involution). Returns the first failure.
pub fn prolongations_covered(leads: &[Monomial], kind: DivisionKind) -> Result<(), (usize, usize)> {
    if leads.is_empty() {
        return Ok(());
    }
    let n = leads[0].nvars();
    let mult = multiplicative_sets(leads, kind);
    for (i, u) in leads.iter().enumerate() {
        for k in VarSet::all(n).difference(mult[i]).iter() {
            let w = u.mul_var(k);
            if !leads.iter().zip(&mult).any(|(v, m)| in_cone(v, *m, &w)) {
                return Err((i, k));
            }
        }
    }
    Ok(())
}

/// Every monomial of `<leads>` up to degree `max deg + extra` lies in some
/// involutive cone. Returns a monomial that is not covered, if any.
pub fn bounded_completeness(leads: &[Monomial], kind: DivisionKind, extra: u32) -> Option<Monomial> {
    let n = leads.first()?.nvars();
    let mult = multiplicative_sets(leads, kind);
    let top = leads.iter().map(Monomial::degree).max().unwrap_or(0) + extra;
    let mut stack: Vec<Monomial> = leads.to_vec();
    let mut seen: alloc::collections::BTreeSet<Monomial> = stack.iter().cloned().collect();
    while let Some(w) = stack.pop() {
        if !leads.iter().zip(&mult).any(|(v, m)| in_cone(v, *m, &w)) {
            return Some(w);
        }
        if w.degree() < top {
            for k in 0..n {
                let next = w.mul_var(k);
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{module_equal, reduced_groebner};
    use crate::poly::rat;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    fn p(ord: MonomialOrder, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_terms(terms.iter().map(|(c, e)| (rat(*c), m(e))).collect(), ord)
    }

    const DRL: MonomialOrder = MonomialOrder::DegRevLex;

    #[test]
    fn janet_completion_of_monomial_ideal() {
        let f = [p(DRL, &[(1, &[1, 1, 0])]), p(DRL, &[(1, &[0, 2, 0])]), p(DRL, &[(1, &[0, 0, 1])])];
        let res =
            inv_basis(&f, DivisionKind::Janet, DRL, InvOptions { check_reps: true, ..Default::default() }).unwrap();
        let mut leads: Vec<Monomial> = res.basis.iter().map(|b| b.lead().clone()).collect();
        leads.sort();
        let mut want = vec![m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[0, 0, 1]), m(&[1, 0, 1]), m(&[0, 1, 1])];
        want.sort();
        assert_eq!(leads, want);
        assert!(res.syzygies.iter().all(|s| s.is_syzygy_of(&res.basis, DRL)));
    }

    #[test]
    fn pommaret_completion_hits_cap() {
        let f = [p(DRL, &[(1, &[1, 1, 0])]), p(DRL, &[(1, &[0, 2, 0])]), p(DRL, &[(1, &[0, 0, 1])])];
        let opts = InvOptions { max_iter: Some(200), ..Default::default() };
        assert_eq!(inv_basis(&f, DivisionKind::Pommaret, DRL, opts).unwrap_err(), Error::IterationCap { limit: 200 });
    }

    fn seiler_example() -> Vec<Polynomial> {
        vec![
            p(DRL, &[(1, &[0, 0, 2])]),
            p(DRL, &[(1, &[0, 1, 1])]),
            p(DRL, &[(1, &[1, 0, 1]), (-1, &[0, 1, 0])]),
            p(DRL, &[(1, &[0, 2, 0])]),
            p(DRL, &[(1, &[1, 1, 0]), (-1, &[0, 1, 0])]),
            p(DRL, &[(1, &[2, 0, 0]), (-1, &[1, 0, 0]), (1, &[0, 0, 1])]),
        ]
    }

    #[test]
    fn janet_basis_is_its_own_completion() {
        let f = seiler_example();
        let res =
            inv_basis(&f, DivisionKind::Janet, DRL, InvOptions { check_reps: true, ..Default::default() }).unwrap();
        assert_eq!(res.basis, f);
        let direct = syzygies_direct(&f, DivisionKind::Janet, DRL).unwrap();
        assert_eq!(direct.len(), 8);
        let order = ModuleOrder::schreyer_for(DRL, &f).unwrap();
        assert!(module_equal(&res.syzygies, &direct, &order));
    }

    #[test]
    fn singleton_has_no_syzygies() {
        let f = [p(DRL, &[(1, &[1, 1]), (1, &[0, 0])])];
        let res = inv_basis(&f, DivisionKind::Janet, DRL, InvOptions::default()).unwrap();
        assert_eq!(res.basis.len(), 1);
        assert!(res.syzygies.is_empty());
        assert!(syzygies_direct(&f, DivisionKind::Janet, DRL).unwrap().is_empty());
    }

    #[test]
    fn c1_returns_koszul_syzygy() {
        // ancestors x and y; the prolongation y*x has lead equal to their product
        let ord = DRL;
        let x = p(ord, &[(1, &[1, 0])]);
        let y = p(ord, &[(1, &[0, 1])]);
        let registry = vec![y.clone(), x.clone()];
        let t = vec![
            TrackedGen {
                poly: y.clone(),
                anc: 0,
                nmproc: VarSet::EMPTY,
                rep: ModuleElement::unit(0, 2),
                flag: false,
                slot: Some(0),
            },
            TrackedGen {
                poly: x.clone(),
                anc: 1,
                nmproc: VarSet::EMPTY,
                rep: ModuleElement::unit(1, 2),
                flag: false,
                slot: Some(1),
            },
        ];
        let xm = Monomial::var(2, 0);
        let prolong = TrackedGen {
            poly: y.mul_monomial(&xm),
            anc: 0,
            nmproc: VarSet::EMPTY,
            rep: ModuleElement::unit(0, 2).mul_term(&rat(1), &xm),
            flag: false,
            slot: None,
        };
        match inv_normal_form(&prolong, &t, &registry, DivisionKind::Janet, ord) {
            NormalForm::Zero { syzygy, criterion } => {
                assert_eq!(criterion, Some(Criterion::C1));
                assert!(syzygy.is_syzygy_of(&registry, ord));
                assert!(!syzygy.is_zero());
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn irreducible_element_is_unchanged() {
        let ord = DRL;
        let x = p(ord, &[(1, &[1, 0])]);
        let y = p(ord, &[(1, &[0, 1]), (1, &[0, 0])]);
        let t = vec![TrackedGen {
            poly: x.clone(),
            anc: 0,
            nmproc: VarSet::EMPTY,
            rep: ModuleElement::unit(0, 2),
            flag: false,
            slot: Some(0),
        }];
        let q = TrackedGen {
            poly: y.clone(),
            anc: 1,
            nmproc: VarSet::EMPTY,
            rep: ModuleElement::unit(1, 2),
            flag: false,
            slot: Some(1),
        };
        assert_eq!(
            inv_normal_form(&q, &t, &[x, y.clone()], DivisionKind::Janet, ord),
            NormalForm::Reduced { poly: y, rep: ModuleElement::unit(1, 2) }
        );
    }

    #[test]
    fn gerdt_matches_groebner_leads() {
        let ord = MonomialOrder::DegLex;
        let f = [p(ord, &[(1, &[1, 1]), (-1, &[0, 1])]), p(ord, &[(1, &[0, 2]), (-1, &[1, 0])])];
        let gb = reduced_groebner(&f, ord).unwrap();
        for c2 in [false, true] {
            let res = gerdt_classic(&f, DivisionKind::Janet, ord, c2, InvOptions::default()).unwrap();
            let leads: Vec<Monomial> = res.basis.iter().map(|b| b.lead().clone()).collect();
            assert!(gb.iter().all(|g| leads.iter().any(|l| l.divides(g.lead()))));
            assert!(leads.iter().all(|l| gb.iter().any(|g| g.lead().divides(l))));
        }
    }

    #[test]
    fn involutive_order_of_example() {
        let f = seiler_example();
        let order = involutive_order(&f, DivisionKind::Janet, DRL).unwrap();
        assert_eq!(order.len(), 6);
        assert!(
            prolongations_covered(&f.iter().map(|g| g.lead().clone()).collect::<Vec<_>>(), DivisionKind::Janet).is_ok()
        );
    }

    #[test]
    fn rejects_degenerate_input() {
        let x = p(DRL, &[(1, &[1, 0])]);
        let x2 = p(DRL, &[(2, &[1, 0])]);
        assert_eq!(
            inv_basis(&[x.clone(), x2], DivisionKind::Janet, DRL, InvOptions::default()).unwrap_err(),
            Error::DuplicateGenerator { first: 0, second: 1 }
        );
        assert_eq!(
            inv_basis(&[x, Polynomial::zero()], DivisionKind::Janet, DRL, InvOptions::default()).unwrap_err(),
            Error::ZeroGenerator { index: 1 }
        );
    }
}
