use std::cmp::Ordering;
use std::fmt;

use super::{Coeff, Monomial, RingContext};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: Coeff,
}

/// Sparse polynomial with terms strictly descending in lex order and no zero
/// coefficients. The zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    ctx: RingContext,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ctx: RingContext) -> Self {
        Polynomial { ctx, terms: Vec::new() }
    }

    pub fn constant(ctx: RingContext, c: Coeff) -> Self {
        Polynomial::monomial(ctx, Monomial::one(&ctx), c)
    }

    pub fn one(ctx: RingContext) -> Self {
        Polynomial::constant(ctx, Coeff::one())
    }

    pub fn monomial(ctx: RingContext, mono: Monomial, coeff: Coeff) -> Self {
        debug_assert_eq!(mono.len(), ctx.num_vars());
        if coeff.is_zero() {
            return Polynomial::zero(ctx);
        }
        Polynomial { ctx, terms: vec![Term { mono, coeff }] }
    }

    pub fn var(ctx: RingContext, var: usize) -> Self {
        Polynomial::monomial(ctx, Monomial::var(&ctx, var), Coeff::one())
    }

    /// Sorts, merges equal monomials and drops zero coefficients.
    pub fn from_terms(ctx: RingContext, mut raw: Vec<(Monomial, Coeff)>) -> Self {
        raw.sort_by_key(|t| std::cmp::Reverse(t.0));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for (mono, coeff) in raw {
            debug_assert_eq!(mono.len(), ctx.num_vars());
            match terms.last_mut() {
                Some(last) if last.mono == mono => last.coeff = &last.coeff + &coeff,
                _ => {
                    if let Some(last) = terms.last() {
                        if last.coeff.is_zero() {
                            terms.pop();
                        }
                    }
                    terms.push(Term { mono, coeff });
                }
            }
        }
        if terms.last().is_some_and(|t| t.coeff.is_zero()) {
            terms.pop();
        }
        Polynomial { ctx, terms }
    }

    /// Caller guarantees the canonical-form invariants.
    pub(crate) fn from_sorted(ctx: RingContext, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].mono > w[1].mono));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { ctx, terms }
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_mono(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    /// Maximum total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.mono.degree();
                self.terms.iter().all(|s| s.mono.degree() == d)
            }
        }
    }

    /// True if some term involves one of the first `count` variables.
    pub fn involves_leading_vars(&self, count: usize) -> bool {
        let mask = if count >= 32 { u32::MAX } else { (1u32 << count) - 1 };
        self.terms.iter().any(|t| t.mono.support_mask() & mask != 0)
    }

    /// Bitmask of variables occurring in some term.
    pub fn support_mask(&self) -> u32 {
        self.terms.iter().fold(0, |acc, t| acc | t.mono.support_mask())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|t| Term { mono: t.mono, coeff: -&t.coeff })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ctx);
        }
        Polynomial {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|t| Term { mono: t.mono, coeff: &t.coeff * c })
                .collect(),
        }
    }

    /// Leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) if t.coeff.is_one() => self.clone(),
            Some(t) => self.scale(&t.coeff.inv()),
        }
    }

    /// `c * m * self`; panics on exponent overflow.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ctx);
        }
        Polynomial {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|t| Term { mono: t.mono.mul(m), coeff: &t.coeff * c })
                .collect(),
        }
    }

    fn combine(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let other_coeff = |c: &Coeff| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].mono.cmp(&b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { mono: b[j].mono, coeff: other_coeff(&b[j].coeff) });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].coeff - &b[j].coeff
                    } else {
                        &a[i].coeff + &b[j].coeff
                    };
                    if !c.is_zero() {
                        out.push(Term { mono: a[i].mono, coeff: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|t| Term { mono: t.mono, coeff: other_coeff(&t.coeff) }));
        Polynomial { ctx: self.ctx, terms: out }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ctx.check_same(&other.ctx)?;
        Ok(self.combine(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ctx.check_same(&other.ctx)?;
        Ok(self.combine(other, true))
    }

    /// Exact product. Fails on context mismatch or exponent overflow.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ctx.check_same(&other.ctx)?;
        let mut raw = Vec::with_capacity(self.len() * other.len());
        for s in &self.terms {
            for o in &other.terms {
                let mono = s.mono.checked_mul(&o.mono).ok_or_else(|| {
                    Error::ResourceLimit("exponent overflow in product".into())
                })?;
                raw.push((mono, &s.coeff * &o.coeff));
            }
        }
        Ok(Polynomial::from_terms(self.ctx, raw))
    }

    /// Embed into the ring with `count` extra elimination variables.
    pub fn lift(&self, count: usize) -> Result<Polynomial> {
        let ctx = self.ctx.with_aux(self.ctx.aux() + count)?;
        Ok(Polynomial {
            ctx,
            terms: self
                .terms
                .iter()
                .map(|t| Term { mono: t.mono.shift_leading(count), coeff: t.coeff.clone() })
                .collect(),
        })
    }

    /// Drop all elimination variables; fails if any of them occurs.
    pub fn to_main(&self) -> Result<Polynomial> {
        let aux = self.ctx.aux();
        if self.involves_leading_vars(aux) {
            return Err(Error::InvalidArgument(
                "polynomial involves elimination variables".into(),
            ));
        }
        Ok(Polynomial {
            ctx: self.ctx.main(),
            terms: self
                .terms
                .iter()
                .map(|t| Term { mono: t.mono.drop_leading(aux), coeff: t.coeff.clone() })
                .collect(),
        })
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let abs = t.coeff.abs();
            if t.mono.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.mono.render(&self.ctx))?;
            } else {
                write!(f, "{abs}*{}", t.mono.render(&self.ctx))?;
            }
        }
        Ok(())
    }
}
