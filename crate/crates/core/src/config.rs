use crate::error::{Error, Result};

/// Resource bounds and execution mode shared by every computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Largest basis (including superseded elements) Buchberger may build.
    pub max_basis: usize,
    /// Largest total degree of any polynomial produced during a GB run.
    pub max_degree: u32,
    /// Vertex bound for computations on the binomial side.
    pub max_vertices: usize,
    /// Vertex bound for monomial-side probes.
    pub max_monomial_vertices: usize,
    /// Largest power `k`/`t` for binomial-side comparisons.
    pub max_power: usize,
    /// Vertex bound for the `2^n` cut-set scan.
    pub max_enum_vertices: usize,
    /// Vertex bound for the `n!` closed-labeling search.
    pub max_labeling_vertices: usize,
    /// Use rayon when the `parallel` feature is compiled in.
    pub parallel: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_basis: 5000,
            max_degree: 40,
            max_vertices: 8,
            max_monomial_vertices: 10,
            max_power: 3,
            max_enum_vertices: 16,
            max_labeling_vertices: 9,
            parallel: true,
        }
    }
}

impl Config {
    pub fn sequential() -> Self {
        Config { parallel: false, ..Config::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_basis == 0 || self.max_degree == 0 || self.max_power == 0 {
            return Err(Error::InvalidArgument("bounds must be positive".into()));
        }
        // exponents are stored in a byte
        if self.max_degree > 255 {
            return Err(Error::InvalidArgument("max degree is capped at 255".into()));
        }
        if self.max_vertices == 0 || self.max_monomial_vertices == 0 {
            return Err(Error::InvalidArgument("vertex bounds must be positive".into()));
        }
        if self.max_enum_vertices > 30 {
            return Err(Error::InvalidArgument("cut-set enumeration is capped at 30 vertices".into()));
        }
        Ok(())
    }

    pub(crate) fn check_vertices(&self, n: usize, bound: usize, what: &str) -> Result<()> {
        if n > bound {
            return Err(Error::ResourceLimit(format!(
                "{what}: {n} vertices exceed the bound of {bound}"
            )));
        }
        Ok(())
    }

    pub(crate) fn check_power(&self, k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::InvalidArgument("power must be at least 1".into()));
        }
        if k > self.max_power {
            return Err(Error::ResourceLimit(format!(
                "power {k} exceeds the bound of {}",
                self.max_power
            )));
        }
        Ok(())
    }
}
