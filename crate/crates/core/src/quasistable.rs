//! Linear changes of coordinates towards quasi-stable position.
//!
//! A minimal Janet basis whose Janet-multiplicative variables are all
//! Pommaret-multiplicative is a Pommaret basis. Otherwise an elementary
//! change `x_k -> x_k + c x_l` is tried and the Janet basis of the
//! transformed ideal is recomputed, reusing the transformed syzygies.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::division::{janet_multiplicative, pommaret_multiplicative, DivisionKind};
use crate::error::Error;
use crate::groebner::{check_generators, monomial_ideal_dimension};
use crate::invbasis::{inv_basis, next_inv_basis_trusted, InvOptions};
use crate::module::ModuleElement;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Coeff, Polynomial};

/// `x_target -> x_target + coeff * x_source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryStep {
    pub target: usize,
    pub source: usize,
    pub coeff: Coeff,
}

/// The substitution `x_i -> sum_j matrix[i][j] x_j`, with the elementary
/// steps it was built from (applied first to last).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    pub matrix: Vec<Vec<Coeff>>,
    pub log: Vec<ElementaryStep>,
}

impl LinearChange {
    pub fn identity(n: usize) -> Self {
        let matrix =
            (0..n).map(|i| (0..n).map(|j| if i == j { Coeff::one() } else { Coeff::zero() }).collect()).collect();
        LinearChange { matrix, log: Vec::new() }
    }

    pub fn elementary(n: usize, target: usize, source: usize, coeff: Coeff) -> Result<Self, Error> {
        if coeff.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        if target >= n || source >= n || target == source {
            return Err(Error::SlotOutOfRange { slot: target.max(source), len: n });
        }
        let mut out = Self::identity(n);
        out.matrix[target][source] = coeff.clone();
        out.log.push(ElementaryStep { target, source, coeff });
        Ok(out)
    }

    pub fn nvars(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Self::identity(self.nvars()).matrix
    }

    /// The change that applies `self` first and `next` afterwards.
    pub fn then(&self, next: &LinearChange) -> LinearChange {
        let n = self.nvars();
        let mut matrix = vec![vec![Coeff::zero(); n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for k in 0..n {
                    if !self.matrix[i][k].is_zero() && !next.matrix[k][j].is_zero() {
                        *cell += &self.matrix[i][k] * &next.matrix[k][j];
                    }
                }
            }
        }
        let mut log = self.log.clone();
        log.extend(next.log.iter().cloned());
        LinearChange { matrix, log }
    }

    /// Inverse, built by undoing the logged steps in reverse order.
    pub fn inverse(&self) -> LinearChange {
        let n = self.nvars();
        let mut out = Self::identity(n);
        for s in self.log.iter().rev() {
            let step = Self::elementary(n, s.target, s.source, -s.coeff.clone()).unwrap();
            out = out.then(&step);
        }
        out
    }

    fn images(&self, ord: MonomialOrder) -> Vec<Polynomial> {
        let n = self.nvars();
        self.matrix
            .iter()
            .map(|row| {
                let terms = row
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (c.clone(), Monomial::var(n, j)))
                    .collect();
                Polynomial::from_terms(terms, ord)
            })
            .collect()
    }

    pub fn apply(&self, f: &Polynomial, ord: MonomialOrder) -> Polynomial {
        self.apply_all(core::slice::from_ref(f), ord).pop().unwrap()
    }

    /// Applies the substitution to every polynomial, sharing powers of the
    /// linear forms.
    pub fn apply_all(&self, fs: &[Polynomial], ord: MonomialOrder) -> Vec<Polynomial> {
        let mut sub = Substitution::new(self.images(ord), ord);
        fs.iter().map(|f| sub.apply(f)).collect()
    }

    pub fn apply_module(&self, s: &ModuleElement, ord: MonomialOrder) -> ModuleElement {
        let mut sub = Substitution::new(self.images(ord), ord);
        s.map_polys(|p| sub.apply(p))
    }
}

struct Substitution {
    images: Vec<Polynomial>,
    powers: Vec<Vec<Polynomial>>,
    ord: MonomialOrder,
}

impl Substitution {
    fn new(images: Vec<Polynomial>, ord: MonomialOrder) -> Self {
        let n = images.len();
        let powers = images.iter().map(|_| vec![Polynomial::constant(Coeff::one(), n)]).collect();
        Substitution { images, powers, ord }
    }

    fn power(&mut self, i: usize, e: u32) -> &Polynomial {
        while self.powers[i].len() <= e as usize {
            let next = self.powers[i].last().unwrap().mul(&self.images[i], self.ord);
            self.powers[i].push(next);
        }
        &self.powers[i][e as usize]
    }

    fn apply(&mut self, f: &Polynomial) -> Polynomial {
        let n = self.images.len();
        let mut acc = Polynomial::zero();
        for t in f.terms() {
            let mut prod = Polynomial::constant(t.coeff.clone(), n);
            for (i, &e) in t.mono.exps().iter().enumerate() {
                if e > 0 {
                    let pw = self.power(i, e).clone();
                    prod = prod.mul(&pw, self.ord);
                }
            }
            acc = acc.add(&prod, self.ord);
        }
        acc
    }
}

/// Result of checking whether a minimal Janet basis is a Pommaret basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TestVerdict {
    Pass,
    /// `var` is Janet- but not Pommaret-multiplicative for `witness`,
    /// whose class (1-based) is `class`.
    Fail {
        var: usize,
        class: usize,
        witness: Monomial,
    },
}

impl TestVerdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, TestVerdict::Pass)
    }

    /// Equality on the variable and class only.
    pub fn same_as(&self, other: &TestVerdict) -> bool {
        match (self, other) {
            (TestVerdict::Pass, TestVerdict::Pass) => true,
            (TestVerdict::Fail { var: a, class: b, .. }, TestVerdict::Fail { var: c, class: d, .. }) => {
                a == c && b == d
            }
            _ => false,
        }
    }
}

/// Scans the set from the greatest monomial down, and the variables of each
/// element by increasing index; the first violation is reported.
pub fn test_pommaret(set: &[Monomial], ord: MonomialOrder) -> Result<TestVerdict, Error> {
    if set.is_empty() {
        return Err(Error::EmptyInput);
    }
    let janet = janet_multiplicative(set);
    let mut idx: Vec<usize> = (0..set.len()).collect();
    idx.sort_by(|&a, &b| ord.compare(&set[b], &set[a]));
    for i in idx {
        let u = &set[i];
        let extra = janet[i].difference(pommaret_multiplicative(u));
        if let Some(var) = extra.iter().next() {
            return Ok(TestVerdict::Fail { var, class: u.class(), witness: u.clone() });
        }
    }
    Ok(TestVerdict::Pass)
}

/// `x_k -> x_k + c x_l` for a failing verdict `(x_l, k)`.
pub fn elementary_change(verdict: &TestVerdict, nvars: usize, c: Coeff) -> Result<LinearChange, Error> {
    match verdict {
        TestVerdict::Pass => Err(Error::VerdictPassed),
        TestVerdict::Fail { var, class, .. } => LinearChange::elementary(nvars, class - 1, *var, c),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuasiStableStats {
    /// Committed elementary changes.
    pub lin: usize,
    /// Elementary changes tried, committed or not.
    pub attempts: usize,
    pub max_deg: u32,
    pub dim: usize,
    pub syz: usize,
    pub c1: usize,
    pub redz: usize,
}

#[derive(Clone, Debug)]
pub struct QuasiStableResult {
    pub phi: LinearChange,
    /// Pommaret basis of the transformed ideal.
    pub basis: Vec<Polynomial>,
    pub stats: QuasiStableStats,
}

#[derive(Clone, Copy, Debug)]
pub struct QuasiStableOptions<'a> {
    pub seed: u64,
    /// Budget of elementary changes; `None` uses `20 n^2`.
    pub max_changes: Option<usize>,
    pub inv: InvOptions<'a>,
}

impl Default for QuasiStableOptions<'_> {
    fn default() -> Self {
        QuasiStableOptions { seed: 1, max_changes: None, inv: InvOptions::default() }
    }
}

fn leads(ps: &[Polynomial]) -> Vec<Monomial> {
    ps.iter().map(|p| p.lm().unwrap().clone()).collect()
}

/// Searches a linear change `Phi` such that `Phi(<F>)` has a finite Pommaret
/// basis. The coefficients of the elementary changes are drawn from `1..=100`.
pub fn quasi_stable(
    input: &[Polynomial],
    ord: MonomialOrder,
    opts: QuasiStableOptions,
) -> Result<QuasiStableResult, Error> {
    check_generators(input)?;
    if let Some(index) = input.iter().position(|f| !f.is_homogeneous()) {
        return Err(Error::NotHomogeneous { index });
    }
    let n = input[0].lm().unwrap().nvars();
    let cap = opts.max_changes.unwrap_or(20 * n * n);
    let mut stats = QuasiStableStats::default();
    let first = inv_basis(input, DivisionKind::Janet, ord, opts.inv)?;
    let absorb = |stats: &mut QuasiStableStats, s: &crate::invbasis::InvStats| {
        stats.c1 += s.c1;
        stats.redz += s.redz;
        stats.syz += s.syz;
        stats.max_deg = stats.max_deg.max(s.max_deg);
    };
    absorb(&mut stats, &first.stats);
    let j = first.basis;
    let s = first.syzygies;
    let mut phi = LinearChange::identity(n);
    let mut basis = j.clone();
    let mut verdict = test_pommaret(&leads(&basis), ord)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    while !verdict.is_pass() {
        if stats.attempts >= cap {
            return Err(Error::ChangeCap { limit: cap });
        }
        stats.attempts += 1;
        let c = crate::poly::rat(rng.gen_range(1..=100));
        let step = elementary_change(&verdict, n, c)?;
        let candidate = phi.then(&step);
        let tj = candidate.apply_all(&j, ord);
        let ts: Vec<ModuleElement> = s.iter().map(|x| candidate.apply_module(x, ord)).collect();
        let temp = next_inv_basis_trusted(&tj, &ts, DivisionKind::Janet, ord, opts.inv)?;
        absorb(&mut stats, &temp.stats);
        let next = test_pommaret(&leads(&temp.basis), ord)?;
        if !next.same_as(&verdict) {
            phi = candidate;
            verdict = next;
            basis = temp.basis;
            stats.lin += 1;
        }
    }
    stats.dim = monomial_ideal_dimension(&leads(&basis), n);
    Ok(QuasiStableResult { phi, basis, stats })
}

/// Homogenizes with a new variable appended as the smallest one.
pub fn homogenize(polys: &[Polynomial], ord: MonomialOrder) -> Vec<Polynomial> {
    polys
        .iter()
        .map(|f| {
            let d = f.degree().unwrap_or(0);
            let terms = f
                .terms()
                .iter()
                .map(|t| {
                    let mut e = t.mono.exps().to_vec();
                    e.push(d - t.mono.degree());
                    (t.coeff.clone(), Monomial::from_exps(e))
                })
                .collect();
            Polynomial::from_terms(terms, ord)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    const DRL: MonomialOrder = MonomialOrder::DegRevLex;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    #[test]
    fn single_variable_passes() {
        assert_eq!(test_pommaret(&[m(&[1, 0, 0])], DRL).unwrap(), TestVerdict::Pass);
    }

    #[test]
    fn janet_basis_of_monomial_example_fails() {
        let u = [m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[0, 0, 1]), m(&[1, 0, 1]), m(&[0, 1, 1])];
        assert_eq!(test_pommaret(&u, DRL).unwrap(), TestVerdict::Fail { var: 0, class: 2, witness: m(&[1, 1, 0]) });
    }

    #[test]
    fn quasi_stable_leads_pass() {
        let u = [m(&[0, 0, 2]), m(&[0, 1, 1]), m(&[1, 0, 1]), m(&[0, 2, 0]), m(&[1, 1, 0]), m(&[2, 0, 0])];
        assert_eq!(test_pommaret(&u, DRL).unwrap(), TestVerdict::Pass);
    }

    #[test]
    fn elementary_change_action() {
        let v = TestVerdict::Fail { var: 0, class: 2, witness: m(&[1, 1, 0]) };
        let phi = elementary_change(&v, 3, rat(1)).unwrap();
        let y = Polynomial::var(3, 1);
        let want = Polynomial::from_terms(vec![(rat(1), m(&[0, 1, 0])), (rat(1), m(&[1, 0, 0]))], DRL);
        assert_eq!(phi.apply(&y, DRL), want);
        let c = rat(3);
        let xy = Polynomial::term(rat(1), m(&[1, 1, 0]));
        let phi3 = elementary_change(&v, 3, c).unwrap();
        let want = Polynomial::from_terms(vec![(rat(1), m(&[1, 1, 0])), (rat(3), m(&[2, 0, 0]))], DRL);
        assert_eq!(phi3.apply(&xy, DRL), want);
        assert_eq!(elementary_change(&v, 3, rat(0)).unwrap_err(), Error::ZeroCoefficient);
        assert_eq!(elementary_change(&TestVerdict::Pass, 3, rat(1)).unwrap_err(), Error::VerdictPassed);
    }

    #[test]
    fn composition_and_inverse() {
        let a = LinearChange::elementary(3, 1, 0, rat(2)).unwrap();
        let b = LinearChange::elementary(3, 2, 1, rat(5)).unwrap();
        let ab = a.then(&b);
        let f = Polynomial::from_terms(vec![(rat(1), m(&[0, 1, 2])), (rat(-1), m(&[1, 2, 0]))], DRL);
        assert_eq!(ab.apply(&f, DRL), b.apply(&a.apply(&f, DRL), DRL));
        assert!(ab.then(&ab.inverse()).is_identity());
        assert_eq!(ab.inverse().apply(&ab.apply(&f, DRL), DRL), f);
    }

    #[test]
    fn already_quasi_stable_needs_no_change() {
        let f = [Polynomial::var(3, 0)];
        let res = quasi_stable(&f, DRL, QuasiStableOptions::default()).unwrap();
        assert!(res.phi.is_identity());
        assert_eq!(res.stats.lin, 0);
    }

    #[test]
    fn monomial_example_becomes_quasi_stable() {
        let f: Vec<Polynomial> =
            [m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[0, 0, 1])].into_iter().map(|u| Polynomial::term(rat(1), u)).collect();
        let res = quasi_stable(&f, DRL, QuasiStableOptions::default()).unwrap();
        assert!(res.stats.lin >= 1);
        assert_eq!(res.stats.dim, 1);
        assert!(test_pommaret(&leads(&res.basis), DRL).unwrap().is_pass());
    }

    #[test]
    fn rejects_inhomogeneous_input() {
        let f = [Polynomial::from_terms(vec![(rat(1), m(&[1, 1])), (rat(1), m(&[1, 0]))], DRL)];
        assert_eq!(
            quasi_stable(&f, DRL, QuasiStableOptions::default()).unwrap_err(),
            Error::NotHomogeneous { index: 0 }
        );
    }
}
