//! Buchberger's algorithm over the rationals and the ideal operations built on
//! reduced Gröbner bases: membership, equality, powers, products, sums and
//! intersection by elimination.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use itertools::Itertools;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::ring::{Coeff, Monomial, MonomialOrder, Polynomial, RingContext, Term};

/// Reduced Gröbner basis: monic, sorted ascending by leading monomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedGB {
    ctx: RingContext,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
}

impl ReducedGB {
    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().filter_map(|p| p.lead_mono().copied()).collect()
    }

    /// Normal form of `f` modulo the basis.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        self.ctx.check_same(f.ctx())?;
        let refs: Vec<&Polynomial> = self.basis.iter().collect();
        Ok(reduce_full(f, &refs))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }
}

/// Ideal given by generators, with a lazily computed reduced Gröbner basis.
#[derive(Clone)]
pub struct Ideal {
    ctx: RingContext,
    gens: Vec<Polynomial>,
    cache: OnceLock<Arc<ReducedGB>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal")
            .field("ctx", &self.ctx)
            .field("gens", &self.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>())
            .finish()
    }
}

impl Ideal {
    /// Zero generators are dropped; all generators must live in `ctx`.
    pub fn new(ctx: RingContext, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            ctx.check_same(g.ctx())?;
        }
        Ok(Ideal {
            ctx,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: OnceLock::new(),
        })
    }

    /// Ideal whose generators are already a reduced GB (checked in debug builds).
    pub(crate) fn from_reduced(gb: ReducedGB) -> Self {
        let cache = OnceLock::new();
        let ideal = Ideal { ctx: gb.ctx, gens: gb.basis.clone(), cache };
        let _ = ideal.cache.set(Arc::new(gb));
        ideal
    }

    /// The ideal generated by the given variables.
    pub fn from_vars(ctx: RingContext, vars: &[usize]) -> Self {
        let gens = vars.iter().map(|&v| Polynomial::var(ctx, v)).collect();
        Ideal { ctx, gens, cache: OnceLock::new() }
    }

    pub fn unit(ctx: RingContext) -> Self {
        Ideal { ctx, gens: vec![Polynomial::one(ctx)], cache: OnceLock::new() }
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn cached_gb(&self) -> Option<&Arc<ReducedGB>> {
        self.cache.get()
    }

    /// Reduced Gröbner basis under `order`, computed once and cached.
    pub fn reduced_gb(&self, order: MonomialOrder, cfg: &Config) -> Result<Arc<ReducedGB>> {
        if let Some(gb) = self.cache.get() {
            if gb.order == order {
                return Ok(gb.clone());
            }
        }
        if self.gens.is_empty() {
            return Err(Error::EmptyIdeal("Gröbner basis of the zero ideal".into()));
        }
        let basis = buchberger(self.ctx, &self.gens, cfg)?;
        let gb = Arc::new(ReducedGB { ctx: self.ctx, order, basis });
        let _ = self.cache.set(gb.clone());
        Ok(gb)
    }

    /// Variables (bitmask) occurring in some generator.
    pub fn support_mask(&self) -> u32 {
        self.gens.iter().fold(0, |acc, g| acc | g.support_mask())
    }
}

/// Multivariate division: reduces the greatest reducible term first, always by
/// the first eligible divisor in `basis` order.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Result<Polynomial> {
    let MonomialOrder::Lex = order;
    for b in basis {
        f.ctx().check_same(b.ctx())?;
        if b.is_zero() {
            return Err(Error::InvalidArgument("zero polynomial in division basis".into()));
        }
    }
    let refs: Vec<&Polynomial> = basis.iter().collect();
    Ok(reduce_full(f, &refs))
}

fn find_divisor(m: &Monomial, basis: &[&Polynomial]) -> Option<usize> {
    basis
        .iter()
        .position(|b| b.lead_mono().is_some_and(|lm| lm.divides(m)))
}

/// `acc - c * m * g`, merged in descending order.
fn sub_multiple(acc: &[Term], c: &Coeff, m: &Monomial, gt: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(acc.len() + gt.len());
    let (mut i, mut j) = (0, 0);
    // shifted monomials of g keep their relative order
    let next_g = |j: usize| gt[j].mono.mul(m);
    let mut gm = if gt.is_empty() { None } else { Some(next_g(0)) };
    while i < acc.len() {
        let Some(gmono) = gm else { break };
        match acc[i].mono.cmp(&gmono) {
            Ordering::Greater => {
                out.push(acc[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term { mono: gmono, coeff: -(c * &gt[j].coeff) });
                j += 1;
                gm = (j < gt.len()).then(|| next_g(j));
            }
            Ordering::Equal => {
                let coeff = &acc[i].coeff - &(c * &gt[j].coeff);
                if !coeff.is_zero() {
                    out.push(Term { mono: gmono, coeff });
                }
                i += 1;
                j += 1;
                gm = (j < gt.len()).then(|| next_g(j));
            }
        }
    }
    out.extend_from_slice(&acc[i..]);
    while j < gt.len() {
        out.push(Term { mono: gt[j].mono.mul(m), coeff: -(c * &gt[j].coeff) });
        j += 1;
    }
    out
}

fn reduce_full(f: &Polynomial, basis: &[&Polynomial]) -> Polynomial {
    let ctx = *f.ctx();
    let mut rem: Vec<Term> = Vec::new();
    let mut work: Vec<Term> = f.terms().to_vec();
    let mut pos = 0;
    while pos < work.len() {
        let lead = &work[pos];
        match find_divisor(&lead.mono, basis) {
            Some(idx) => {
                let g = basis[idx];
                let glead = g.lead().expect("nonzero divisor");
                let q = glead.mono.quotient_of(&lead.mono).expect("divisor");
                let c = &lead.coeff / &glead.coeff;
                // the leading terms cancel exactly
                let rest = sub_multiple(&work[pos + 1..], &c, &q, &g.terms()[1..]);
                work = rest;
                pos = 0;
            }
            None => {
                rem.push(lead.clone());
                pos += 1;
            }
        }
    }
    Polynomial::from_sorted(ctx, rem)
}

/// Like [`reduce_full`] but leaves the leading term untouched.
fn reduce_tail(f: &Polynomial, basis: &[&Polynomial]) -> Polynomial {
    let Some(lead) = f.lead() else { return f.clone() };
    let t = tail(f);
    let r = reduce_full(&t, basis);
    let mut terms = Vec::with_capacity(r.len() + 1);
    terms.push(lead.clone());
    terms.extend(r.into_terms());
    Polynomial::from_sorted(*f.ctx(), terms)
}

fn tail(g: &Polynomial) -> Polynomial {
    Polynomial::from_sorted(*g.ctx(), g.terms()[1..].to_vec())
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let lf = f.lead().expect("nonzero");
    let lg = g.lead().expect("nonzero");
    let lcm = lf.mono.lcm(&lg.mono);
    let qf = lf.mono.quotient_of(&lcm).expect("lcm");
    let qg = lg.mono.quotient_of(&lcm).expect("lcm");
    let a = tail(f).mul_term(&lf.coeff.inv(), &qf);
    let b = tail(g).mul_term(&lg.coeff.inv(), &qg);
    a.sub(&b).expect("same ring")
}

/// Critical pair ordered by the normal strategy: lcm degree over the main
/// variables, then lex on the lcm, then indices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Pair {
    degree: u32,
    lcm: Monomial,
    i: usize,
    j: usize,
}

struct Buchberger<'a> {
    cfg: &'a Config,
    aux: usize,
    polys: Vec<Polynomial>,
    active: Vec<usize>,
    pairs: BTreeSet<Pair>,
}

impl<'a> Buchberger<'a> {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].lead_mono().expect("nonzero basis element")
    }

    fn active_refs(&self) -> Vec<&Polynomial> {
        self.active.iter().map(|&i| &self.polys[i]).collect()
    }

    fn pair(&self, i: usize, j: usize) -> Pair {
        let lcm = self.lm(i).lcm(self.lm(j));
        Pair { degree: lcm.degree_from(self.aux), lcm, i: i.min(j), j: i.max(j) }
    }

    fn push(&mut self, h: Polynomial) -> Result<()> {
        if h.degree() > self.cfg.max_degree {
            return Err(Error::ResourceLimit(format!(
                "Gröbner basis element of degree {} exceeds the bound of {}",
                h.degree(),
                self.cfg.max_degree
            )));
        }
        if self.polys.len() >= self.cfg.max_basis {
            return Err(Error::ResourceLimit(format!(
                "Gröbner basis grew beyond {} elements",
                self.cfg.max_basis
            )));
        }
        self.polys.push(h);
        let hi = self.polys.len() - 1;
        self.update(hi);
        Ok(())
    }

    /// Gebauer–Möller installation of a new element: coprime and chain
    /// criteria on new pairs, pruning of old pairs, removal of elements whose
    /// leading monomial became redundant.
    fn update(&mut self, h: usize) {
        let lm_h = *self.lm(h);
        let mut candidates: Vec<Pair> = self.active.iter().map(|&g| self.pair(h, g)).collect();
        let mut kept: Vec<Pair> = Vec::new();
        let other = |p: &Pair| if p.i == h { p.j } else { p.i };
        while !candidates.is_empty() {
            let p = candidates.remove(0);
            let coprime = lm_h.is_coprime(self.lm(other(&p)));
            if coprime
                || (!candidates.iter().any(|q| q.lcm.divides(&p.lcm))
                    && !kept.iter().any(|q| q.lcm.divides(&p.lcm)))
            {
                kept.push(p);
            }
        }
        kept.retain(|p| !lm_h.is_coprime(self.lm(other(p))));

        let old = std::mem::take(&mut self.pairs);
        self.pairs = old
            .into_iter()
            .filter(|p| {
                !(lm_h.divides(&p.lcm)
                    && self.lm(p.i).lcm(&lm_h) != p.lcm
                    && self.lm(p.j).lcm(&lm_h) != p.lcm)
            })
            .collect();
        self.pairs.extend(kept);

        let polys = &self.polys;
        self.active
            .retain(|&g| !lm_h.divides(polys[g].lead_mono().expect("nonzero")));
        self.active.push(h);
    }

    fn run(&mut self) -> Result<()> {
        while let Some(p) = self.pairs.pop_first() {
            let s = s_polynomial(&self.polys[p.i], &self.polys[p.j]);
            let h = reduce_full(&s, &self.active_refs());
            if !h.is_zero() {
                self.push(h.monic())?;
            }
        }
        Ok(())
    }

    fn reduced_basis(&self) -> Vec<Polynomial> {
        let mut basis: Vec<Polynomial> = self
            .active
            .iter()
            .map(|&g| {
                let others: Vec<&Polynomial> = self
                    .active
                    .iter()
                    .filter(|&&o| o != g)
                    .map(|&o| &self.polys[o])
                    .collect();
                reduce_tail(&self.polys[g], &others)
            })
            .collect();
        basis.sort_by(|a, b| a.lead_mono().cmp(&b.lead_mono()));
        basis
    }
}

/// Reduced lex Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(ctx: RingContext, gens: &[Polynomial], cfg: &Config) -> Result<Vec<Polynomial>> {
    cfg.validate()?;
    let mut input: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            ctx.check_same(g.ctx())?;
            Ok(g.monic())
        })
        .collect::<Result<_>>()?;
    if input.is_empty() {
        return Err(Error::EmptyIdeal("no nonzero generators".into()));
    }
    input.sort_by(|a, b| {
        a.lead_mono()
            .map(|m| m.degree())
            .cmp(&b.lead_mono().map(|m| m.degree()))
            .then_with(|| a.lead_mono().cmp(&b.lead_mono()))
            .then_with(|| a.terms().len().cmp(&b.terms().len()))
    });
    input.dedup();
    let mut engine = Buchberger {
        cfg,
        aux: ctx.aux(),
        polys: Vec::new(),
        active: Vec::new(),
        pairs: BTreeSet::new(),
    };
    for g in input {
        let h = reduce_full(&g, &engine.active_refs());
        if !h.is_zero() {
            if h.lead_mono().is_some_and(|m| m.is_one()) {
                return Ok(vec![Polynomial::one(ctx)]);
            }
            engine.push(h.monic())?;
        }
    }
    engine.run()?;
    let basis = engine.reduced_basis();
    if basis.iter().any(|b| b.lead_mono().is_some_and(|m| m.is_one())) {
        return Ok(vec![Polynomial::one(ctx)]);
    }
    Ok(basis)
}

/// Reduced Gröbner basis of `ideal` (cached on the ideal).
pub fn reduced_gb(ideal: &Ideal, order: MonomialOrder, cfg: &Config) -> Result<Arc<ReducedGB>> {
    ideal.reduced_gb(order, cfg)
}

/// Leading monomials of the reduced Gröbner basis.
pub fn initial_ideal(ideal: &Ideal, order: MonomialOrder, cfg: &Config) -> Result<MonomialIdeal> {
    let gb = ideal.reduced_gb(order, cfg)?;
    Ok(MonomialIdeal::new(*ideal.ctx(), gb.leading_monomials()))
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal, cfg: &Config) -> Result<bool> {
    ideal.ctx.check_same(f.ctx())?;
    if f.is_zero() {
        return Ok(true);
    }
    if ideal.is_zero() {
        return Ok(false);
    }
    ideal.reduced_gb(MonomialOrder::Lex, cfg)?.contains(f)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal, cfg: &Config) -> Result<bool> {
    a.ctx.check_same(&b.ctx)?;
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Ok(true),
        (true, false) | (false, true) => return Ok(false),
        _ => {}
    }
    let ga = a.reduced_gb(MonomialOrder::Lex, cfg)?;
    let gb = b.reduced_gb(MonomialOrder::Lex, cfg)?;
    Ok(ga.basis == gb.basis)
}

/// `b ⊆ a`: every generator of `b` lies in `a`.
pub fn ideal_contains(a: &Ideal, b: &Ideal, cfg: &Config) -> Result<bool> {
    a.ctx.check_same(&b.ctx)?;
    for g in &b.gens {
        if !ideal_member(g, a, cfg)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_product_degree(degree: u32, cfg: &Config) -> Result<()> {
    if degree > cfg.max_degree {
        return Err(Error::ResourceLimit(format!(
            "product of degree {degree} exceeds the bound of {}",
            cfg.max_degree
        )));
    }
    Ok(())
}

/// Generated by all products of `k` generators (with repetition).
pub fn ideal_power(ideal: &Ideal, k: usize, cfg: &Config) -> Result<Ideal> {
    if k == 0 {
        return Err(Error::InvalidArgument("ideal power needs k >= 1".into()));
    }
    if k == 1 {
        return Ok(ideal.clone());
    }
    let max_deg = ideal.gens.iter().map(|g| g.degree()).max().unwrap_or(0);
    check_product_degree(max_deg * k as u32, cfg)?;
    let gens = (0..ideal.gens.len())
        .combinations_with_replacement(k)
        .map(|idx| {
            idx.iter().skip(1).try_fold(ideal.gens[idx[0]].clone(), |acc, &i| acc.mul(&ideal.gens[i]))
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ctx, gens)
}

pub fn ideal_product(a: &Ideal, b: &Ideal, cfg: &Config) -> Result<Ideal> {
    a.ctx.check_same(&b.ctx)?;
    let da = a.gens.iter().map(|g| g.degree()).max().unwrap_or(0);
    let db = b.gens.iter().map(|g| g.degree()).max().unwrap_or(0);
    check_product_degree(da + db, cfg)?;
    let gens = a
        .gens
        .iter()
        .cartesian_product(&b.gens)
        .map(|(f, g)| f.mul(g))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(a.ctx, gens)
}

pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.ctx.check_same(&b.ctx)?;
    Ideal::new(a.ctx, a.gens.iter().chain(&b.gens).cloned().collect())
}

fn basis_or_gens(ideal: &Ideal) -> &[Polynomial] {
    match ideal.cache.get() {
        Some(gb) => &gb.basis,
        None => &ideal.gens,
    }
}

/// `A ∩ B` as the `t`-free part of the reduced GB of `t·A + (1 - t)·B`.
pub fn ideal_intersection(a: &Ideal, b: &Ideal, cfg: &Config) -> Result<Ideal> {
    a.ctx.check_same(&b.ctx)?;
    if a.ctx.aux() != 0 {
        return Err(Error::InvalidArgument("intersection expects ideals in the main ring".into()));
    }
    if a.is_zero() || b.is_zero() {
        return Ideal::new(a.ctx, Vec::new());
    }
    let lifted = a.ctx.with_aux(1)?;
    let t = Polynomial::var(lifted, lifted.t(1));
    let one_minus_t = Polynomial::one(lifted).sub(&t)?;
    let mut gens = Vec::new();
    for f in basis_or_gens(a) {
        gens.push(t.mul(&f.lift(1)?)?);
    }
    for g in basis_or_gens(b) {
        gens.push(one_minus_t.mul(&g.lift(1)?)?);
    }
    let basis = buchberger(lifted, &gens, cfg)?;
    let kept = basis
        .iter()
        .filter(|p| !p.involves_leading_vars(1))
        .map(|p| p.to_main())
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::from_reduced(ReducedGB { ctx: a.ctx, order: MonomialOrder::Lex, basis: kept }))
}

/// Left fold of [`ideal_intersection`] over `ideals` in the given order.
pub fn intersect_all(ideals: &[Ideal], cfg: &Config) -> Result<Ideal> {
    let (first, rest) = ideals
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("intersection of no ideals".into()))?;
    rest.iter()
        .try_fold(first.clone(), |acc, next| ideal_intersection(&acc, next, cfg))
}

/// Every S-polynomial of the basis reduces to zero.
pub fn satisfies_buchberger_criterion(basis: &[Polynomial]) -> bool {
    let refs: Vec<&Polynomial> = basis.iter().collect();
    basis.iter().tuple_combinations().all(|(f, g)| reduce_full(&s_polynomial(f, g), &refs).is_zero())
}

/// Monic, sorted ascending, and no term of any element divisible by the
/// leading monomial of another.
pub fn is_reduced(basis: &[Polynomial]) -> bool {
    let monic = basis.iter().all(|b| b.lead().is_some_and(|t| t.coeff.is_one()));
    let sorted = basis.windows(2).all(|w| w[0].lead_mono() < w[1].lead_mono());
    let interreduced = basis.iter().enumerate().all(|(i, b)| {
        basis.iter().enumerate().all(|(j, o)| {
            i == j
                || b.terms()
                    .iter()
                    .all(|t| !o.lead_mono().expect("nonzero").divides(&t.mono))
        })
    });
    monic && sorted && interreduced
}
