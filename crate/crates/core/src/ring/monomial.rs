use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::RingContext;

/// Upper bound on `aux + 2n`.
pub const MAX_VARS: usize = 32;

/// Dense exponent vector indexed by variable precedence, so lex comparison is
/// plain array comparison.
#[derive(Clone, Copy)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    len: u8,
    // bit v set iff exps[v] > 0
    support: u32,
}

impl Monomial {
    pub fn one(ctx: &RingContext) -> Self {
        Monomial {
            exps: [0; MAX_VARS],
            len: ctx.num_vars() as u8,
            support: 0,
        }
    }

    pub fn var(ctx: &RingContext, var: usize) -> Self {
        assert!(var < ctx.num_vars(), "variable index out of range");
        let mut m = Monomial::one(ctx);
        m.exps[var] = 1;
        m.support = 1 << var;
        m
    }

    /// Panics if `exps` is longer than the context or an exponent exceeds 255.
    pub fn from_exponents(ctx: &RingContext, exps: &[u32]) -> Self {
        assert!(exps.len() <= ctx.num_vars(), "exponent vector too long");
        let mut m = Monomial::one(ctx);
        for (v, &e) in exps.iter().enumerate() {
            m.exps[v] = u8::try_from(e).expect("exponent exceeds 255");
            if e > 0 {
                m.support |= 1 << v;
            }
        }
        m
    }

    /// Product of the given variables (with repetition).
    pub fn from_vars(ctx: &RingContext, vars: &[usize]) -> Self {
        vars.iter()
            .fold(Monomial::one(ctx), |m, &v| m.mul(&Monomial::var(ctx, v)))
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps[..self.len as usize]
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var] as u32
    }

    pub fn support_mask(&self) -> u32 {
        self.support
    }

    pub fn degree(&self) -> u32 {
        self.exponents().iter().map(|&e| e as u32).sum()
    }

    /// Degree over the variables from `from` on (skips elimination variables).
    pub fn degree_from(&self, from: usize) -> u32 {
        self.exponents()[from..].iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.support == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents().iter().all(|&e| e <= 1)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.len, other.len);
        let mut out = *self;
        for v in 0..self.len as usize {
            out.exps[v] = self.exps[v].checked_add(other.exps[v])?;
        }
        out.support |= other.support;
        Some(out)
    }

    /// Panics on exponent overflow; use [`Monomial::checked_mul`] for untrusted degrees.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut out = *self;
        out.support = if k == 0 { 0 } else { self.support };
        for v in 0..self.len as usize {
            let e = self.exps[v] as u32 * k;
            out.exps[v] = u8::try_from(e).expect("exponent overflow");
        }
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.support & !other.support != 0 {
            return false;
        }
        self.exps[..self.len as usize]
            .iter()
            .zip(&other.exps[..self.len as usize])
            .all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = *other;
        for v in 0..self.len as usize {
            out.exps[v] -= self.exps[v];
            if out.exps[v] == 0 {
                out.support &= !(1 << v);
            }
        }
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for v in 0..self.len as usize {
            out.exps[v] = self.exps[v].max(other.exps[v]);
        }
        out.support |= other.support;
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for v in 0..self.len as usize {
            out.exps[v] = self.exps[v].min(other.exps[v]);
        }
        out.support &= other.support;
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.support & other.support == 0
    }

    /// Variables occurring in the monomial, ascending.
    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len as usize).filter(move |&v| self.exps[v] > 0)
    }

    /// Same exponents in a ring with `aux` fewer leading variables; the
    /// dropped variables must not occur.
    pub(crate) fn drop_leading(&self, count: usize) -> Monomial {
        debug_assert!(self.exps[..count].iter().all(|&e| e == 0));
        let mut out = Monomial {
            exps: [0; MAX_VARS],
            len: self.len - count as u8,
            support: self.support >> count,
        };
        out.exps[..out.len as usize].copy_from_slice(&self.exps[count..self.len as usize]);
        out
    }

    /// Embed into a ring with `count` extra leading variables.
    pub(crate) fn shift_leading(&self, count: usize) -> Monomial {
        let mut out = Monomial {
            exps: [0; MAX_VARS],
            len: self.len + count as u8,
            support: self.support << count,
        };
        out.exps[count..out.len as usize].copy_from_slice(self.exponents());
        out
    }

    /// Renders as `x1^2*x4*y3`; the unit monomial renders as `1`.
    pub fn render(&self, ctx: &RingContext) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for v in self.vars() {
            let e = self.exps[v];
            if e == 1 {
                parts.push(ctx.var_name(v));
            } else {
                parts.push(format!("{}^{}", ctx.var_name(v), e));
            }
        }
        parts.join("*")
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.len.hash(state);
        self.exps.hash(state);
    }
}

/// Lex order over variable precedence.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.cmp(&other.exps).then(self.len.cmp(&other.len))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}
