//! Monomial ideals: canonical minimal generators, intersections, powers,
//! minimal primes of squarefree ideals and symbolic powers via `∩ p^k`.

use std::fmt;

use itertools::Itertools;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::par;
use crate::ring::{Monomial, RingContext};

/// Monomial ideal in canonical form: minimal generators, sorted descending in
/// lex. The zero ideal has no generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ctx: RingContext,
    gens: Vec<Monomial>,
}

/// Prime ideal generated by a set of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariablePrime {
    vars: Vec<usize>,
}

impl VariablePrime {
    pub fn new(mut vars: Vec<usize>) -> Result<Self> {
        vars.sort_unstable();
        vars.dedup();
        if vars.is_empty() {
            return Err(Error::InvalidArgument("variable prime needs a variable".into()));
        }
        Ok(VariablePrime { vars })
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn render(&self, ctx: &RingContext) -> String {
        format!("({})", self.vars.iter().map(|&v| ctx.var_name(v)).join(", "))
    }
}

/// Divisibility-minimal subset of `ms`.
fn minimal_subset(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    ms.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(ms.len());
    for m in ms {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

pub fn minimalize(ctx: RingContext, ms: Vec<Monomial>) -> MonomialIdeal {
    MonomialIdeal::new(ctx, ms)
}

impl MonomialIdeal {
    pub fn new(ctx: RingContext, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|m| m.len() == ctx.num_vars()));
        MonomialIdeal { ctx, gens: minimal_subset(gens) }
    }

    pub fn zero(ctx: RingContext) -> Self {
        MonomialIdeal { ctx, gens: Vec::new() }
    }

    pub fn unit(ctx: RingContext) -> Self {
        MonomialIdeal { ctx, gens: vec![Monomial::one(&ctx)] }
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|m| self.contains(m))
    }

    pub fn render(&self) -> String {
        self.gens.iter().map(|m| m.render(&self.ctx)).join(", ")
    }

    fn check_ctx(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(format!("{:?} vs {:?}", self.ctx, other.ctx)));
        }
        Ok(())
    }

    fn require_squarefree(&self) -> Result<()> {
        match self.gens.iter().find(|m| !m.is_squarefree()) {
            Some(m) => Err(Error::NotSquarefree(m.render(&self.ctx))),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render())
    }
}

pub fn mono_intersect(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    a.check_ctx(b)?;
    let lcms = a
        .gens
        .iter()
        .cartesian_product(&b.gens)
        .map(|(x, y)| x.lcm(y))
        .collect();
    Ok(MonomialIdeal::new(a.ctx, lcms))
}

pub fn mono_product(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    a.check_ctx(b)?;
    let prods = a
        .gens
        .iter()
        .cartesian_product(&b.gens)
        .map(|(x, y)| {
            x.checked_mul(y)
                .ok_or_else(|| Error::ResourceLimit("exponent overflow".into()))
        })
        .collect::<Result<_>>()?;
    Ok(MonomialIdeal::new(a.ctx, prods))
}

pub fn mono_power(ideal: &MonomialIdeal, k: usize) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::InvalidArgument("monomial power needs k >= 1".into()));
    }
    // repeated multiplication with minimalization in between keeps the
    // intermediate generator lists small
    (1..k).try_fold(ideal.clone(), |acc, _| mono_product(&acc, ideal))
}

/// Minimal transversals of the generator supports, i.e. the minimal primes.
pub fn minimal_primes_squarefree(ideal: &MonomialIdeal) -> Result<Vec<VariablePrime>> {
    ideal.require_squarefree()?;
    if ideal.gens.is_empty() {
        return Ok(Vec::new());
    }
    if ideal.gens.iter().any(Monomial::is_one) {
        return Ok(Vec::new());
    }
    // Berge's algorithm over bitmask transversals
    let mut covers: Vec<u32> = vec![0];
    for g in &ideal.gens {
        let edge = g.support_mask();
        let mut next: Vec<u32> = Vec::new();
        for &c in &covers {
            if c & edge != 0 {
                next.push(c);
            } else {
                let mut bits = edge;
                while bits != 0 {
                    let b = bits & bits.wrapping_neg();
                    next.push(c | b);
                    bits &= bits - 1;
                }
            }
        }
        next.sort_unstable_by_key(|m| (m.count_ones(), *m));
        next.dedup();
        let mut minimal: Vec<u32> = Vec::with_capacity(next.len());
        for m in next {
            if !minimal.iter().any(|&k| k & !m == 0) {
                minimal.push(m);
            }
        }
        covers = minimal;
    }
    let mut primes: Vec<VariablePrime> = covers
        .into_iter()
        .map(|mask| VariablePrime {
            vars: (0..32).filter(|v| mask & (1 << v) != 0).collect(),
        })
        .collect();
    primes.sort_by(|a, b| a.vars.len().cmp(&b.vars.len()).then_with(|| a.vars.cmp(&b.vars)));
    Ok(primes)
}

/// All degree-`k` monomials in the prime's variables.
pub fn prime_power(ctx: &RingContext, p: &VariablePrime, k: usize) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::InvalidArgument("prime power needs k >= 1".into()));
    }
    if let Some(&v) = p.vars.iter().find(|&&v| v >= ctx.num_vars()) {
        return Err(Error::InvalidIndex(format!("variable {v} outside the ring")));
    }
    let gens = p
        .vars
        .iter()
        .copied()
        .combinations_with_replacement(k)
        .map(|vs| Monomial::from_vars(ctx, &vs))
        .collect();
    Ok(MonomialIdeal::new(*ctx, gens))
}

/// `∩ p^k` over the minimal primes of a squarefree ideal.
pub fn symbolic_power_squarefree(ideal: &MonomialIdeal, k: usize) -> Result<MonomialIdeal> {
    symbolic_power_with(ideal, k, &Config::sequential())
}

fn symbolic_power_with(ideal: &MonomialIdeal, k: usize, cfg: &Config) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::InvalidArgument("symbolic power needs k >= 1".into()));
    }
    ideal.require_squarefree()?;
    if k == 1 {
        return Ok(ideal.clone());
    }
    let primes = minimal_primes_squarefree(ideal)?;
    if primes.is_empty() {
        return Ok(ideal.clone());
    }
    let powers = par::try_map(cfg, &primes, |p| prime_power(&ideal.ctx, p, k))?;
    powers
        .iter()
        .try_fold(MonomialIdeal::unit(ideal.ctx), |acc, q| mono_intersect(&acc, q))
}

/// Outcome of comparing ordinary and symbolic powers for `k = 2..=kmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NtfReport {
    pub kmax: usize,
    /// Powers compared before stopping (all of `2..=kmax` without a violation).
    pub checked: Vec<usize>,
    pub violation: Option<NtfViolation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NtfViolation {
    pub k: usize,
    /// Lex-smallest minimal generator of `I^(k)` outside `I^k`.
    pub witness: Monomial,
}

impl NtfReport {
    pub fn summary(&self, ctx: &RingContext) -> String {
        match &self.violation {
            Some(v) => format!(
                "violation at k={}: {} lies in the symbolic power but not the ordinary power",
                v.k,
                v.witness.render(ctx)
            ),
            None => format!(
                "no violation for k <= {} (finite evidence only, not a proof of normal torsion-freeness)",
                self.kmax
            ),
        }
    }
}

fn compare_at(ideal: &MonomialIdeal, k: usize, cfg: &Config) -> Result<Option<Monomial>> {
    let ordinary = mono_power(ideal, k)?;
    let symbolic = symbolic_power_with(ideal, k, cfg)?;
    let missing = par::map(cfg, &symbolic.gens, |m| !ordinary.contains(m));
    // gens are sorted descending, so the last miss is the lex-smallest
    Ok(symbolic.gens.iter().zip(missing).rev().find(|(_, miss)| *miss).map(|(m, _)| *m))
}

/// Bounded probe for `I^k = I^(k)`. Evidence only: a clean report up to
/// `kmax` does not prove the equality for larger `k`.
pub fn ntf_probe(ideal: &MonomialIdeal, kmax: usize, cfg: &Config) -> Result<NtfReport> {
    if kmax < 2 {
        return Err(Error::InvalidArgument("kmax must be at least 2".into()));
    }
    ideal.require_squarefree()?;
    let mut checked = Vec::new();
    for k in 2..=kmax {
        checked.push(k);
        if let Some(witness) = compare_at(ideal, k, cfg)? {
            return Ok(NtfReport { kmax, checked, violation: Some(NtfViolation { k, witness }) });
        }
    }
    Ok(NtfReport { kmax, checked, violation: None })
}
