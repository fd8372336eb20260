//! Exact polynomial arithmetic in `t_1..t_aux, x_1..x_n, y_1..y_n` under the
//! pure lexicographic order `t_1 > .. > t_aux > x_1 > .. > x_n > y_1 > .. > y_n`.

mod coeff;
mod monomial;
mod polynomial;

use std::cmp::Ordering;

pub use coeff::Coeff;
pub use monomial::{Monomial, MAX_VARS};
pub use polynomial::{Polynomial, Term};

use crate::error::{Error, Result};

/// Ambient ring: `n` graph vertices give `2n` main variables, preceded by
/// `aux` elimination variables that rank above all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingContext {
    n: usize,
    aux: usize,
}

impl RingContext {
    pub fn new(n: usize, aux: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("ring needs at least one vertex".into()));
        }
        if aux + 2 * n > MAX_VARS {
            return Err(Error::InvalidArgument(format!(
                "{} variables exceed the supported maximum of {MAX_VARS}",
                aux + 2 * n
            )));
        }
        Ok(RingContext { n, aux })
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn aux(&self) -> usize {
        self.aux
    }

    pub fn num_vars(&self) -> usize {
        self.aux + 2 * self.n
    }

    /// The same ring without elimination variables.
    pub fn main(&self) -> RingContext {
        RingContext { n: self.n, aux: 0 }
    }

    pub fn with_aux(&self, aux: usize) -> Result<RingContext> {
        RingContext::new(self.n, aux)
    }

    /// Variable index of `x_i`, `i` 1-based.
    pub fn x(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.n);
        self.aux + i - 1
    }

    /// Variable index of `y_i`, `i` 1-based.
    pub fn y(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.n);
        self.aux + self.n + i - 1
    }

    /// Variable index of `t_j`, `j` 1-based.
    pub fn t(&self, j: usize) -> usize {
        debug_assert!(j >= 1 && j <= self.aux);
        j - 1
    }

    pub fn is_aux_var(&self, var: usize) -> bool {
        var < self.aux
    }

    /// Graph vertex (1-based) owning a main variable.
    pub fn vertex_of(&self, var: usize) -> Option<usize> {
        if var < self.aux || var >= self.num_vars() {
            return None;
        }
        Some((var - self.aux) % self.n + 1)
    }

    pub fn var_name(&self, var: usize) -> String {
        if var < self.aux {
            format!("t{}", var + 1)
        } else if var < self.aux + self.n {
            format!("x{}", var - self.aux + 1)
        } else {
            format!("y{}", var - self.aux - self.n + 1)
        }
    }

    pub(crate) fn check_same(&self, other: &RingContext) -> Result<()> {
        if self != other {
            return Err(Error::ContextMismatch(format!("{self:?} vs {other:?}")));
        }
        Ok(())
    }
}

/// The only supported order: pure lex over the ring's variable precedence.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    #[default]
    Lex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::ContextMismatch(format!(
                "monomials over {} and {} variables",
                a.len(),
                b.len()
            )));
        }
        Ok(match self {
            MonomialOrder::Lex => a.cmp(b),
        })
    }
}

/// The 2-minor `x_i y_j - x_j y_i` for `1 <= i < j <= n`.
pub fn make_minor(ctx: &RingContext, i: usize, j: usize) -> Result<Polynomial> {
    if i == 0 || j > ctx.vertices() || i >= j {
        return Err(Error::InvalidIndex(format!(
            "minor [{i},{j}] needs 1 <= i < j <= {}",
            ctx.vertices()
        )));
    }
    let a = Monomial::var(ctx, ctx.x(i)).mul(&Monomial::var(ctx, ctx.y(j)));
    let b = Monomial::var(ctx, ctx.x(j)).mul(&Monomial::var(ctx, ctx.y(i)));
    Ok(Polynomial::from_terms(
        *ctx,
        vec![(a, Coeff::one()), (b, Coeff::from_int(-1))],
    ))
}
