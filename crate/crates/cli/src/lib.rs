//! Command-line front end: argument parsing, dispatch and exit codes.

pub mod commands;
pub mod report;

use std::path::PathBuf;

use bek_core::{Config, Error, Graph};
use clap::{Args, Parser, Subcommand};

use crate::report::Report;

#[derive(Debug, Parser)]
#[command(name = "bek", version, about = "Symbolic and ordinary powers of binomial edge ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Generators of J_G
    Ideal,
    /// Cut sets and the minimal primes P_S(G)
    Primes,
    /// Decide J_G^k = J_G^(k)
    Compare,
    /// Reduced Gröbner basis of J_G^(k)
    Symbolic,
    /// Lex initial ideal of J_G
    Initial,
    /// Search for a closed labeling
    Closed,
    /// Check the initial-ideal transfer hypotheses at power t
    Certify,
    /// Compare powers and symbolic powers of ini(J_G) for k <= kmax
    NtfProbe,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Ideal => "ideal",
            Command::Primes => "primes",
            Command::Compare => "compare",
            Command::Symbolic => "symbolic",
            Command::Initial => "initial",
            Command::Closed => "closed",
            Command::Certify => "certify",
            Command::NtfProbe => "ntf-probe",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Opts {
    /// Graph file: `n <N>` then one `u v` edge per line
    #[arg(long, global = true)]
    pub graph: Option<PathBuf>,
    /// Power for compare/symbolic
    #[arg(short = 'k', global = true, default_value_t = 2)]
    pub k: usize,
    /// Power for certify
    #[arg(short = 't', global = true, default_value_t = 2)]
    pub t: usize,
    /// Largest power probed on the monomial side
    #[arg(long, global = true, default_value_t = 3)]
    pub kmax: usize,
    /// Run the normal torsion-freeness probe with `initial`
    #[arg(long, global = true)]
    pub probe_ntf: bool,
    /// Also decide the certified equality directly
    #[arg(long, global = true)]
    pub cross_check: bool,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Vertex bound for binomial-side computations
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
    /// Largest power accepted on the binomial side
    #[arg(long, global = true)]
    pub max_k: Option<usize>,
    /// Gröbner basis size bound
    #[arg(long, global = true, env = "BEK_MAX_BASIS")]
    pub max_basis: Option<usize>,
    /// Degree bound for Gröbner basis elements
    #[arg(long, global = true)]
    pub max_degree: Option<u32>,
    /// Disable the thread pool
    #[arg(long, global = true)]
    pub sequential: bool,
}

/// Failure with its process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit(_) => 3,
            Error::Invariant(_) => 4,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

impl Opts {
    pub fn config(&self) -> Result<Config, Failure> {
        let mut cfg = Config::default();
        if let Some(n) = self.max_n {
            cfg.max_vertices = n;
            cfg.max_monomial_vertices = cfg.max_monomial_vertices.max(n);
            cfg.max_enum_vertices = cfg.max_enum_vertices.max(n);
        }
        if let Some(k) = self.max_k {
            cfg.max_power = k;
        }
        if let Some(b) = self.max_basis {
            cfg.max_basis = b;
        }
        if let Some(d) = self.max_degree {
            cfg.max_degree = d;
        }
        cfg.parallel = !self.sequential;
        cfg.validate()?;
        if self.k == 0 || self.t == 0 {
            return Err(input_error("k and t must be at least 1".into()));
        }
        if self.kmax < 2 {
            return Err(input_error("kmax must be at least 2".into()));
        }
        Ok(cfg)
    }
}

pub fn load_graph(opts: &Opts) -> Result<Graph, Failure> {
    let path = opts
        .graph
        .as_ref()
        .ok_or_else(|| input_error("--graph PATH is required".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    Ok(text.parse::<Graph>()?)
}

pub fn run(cli: &Cli) -> Result<Report, Failure> {
    let cfg = cli.opts.config()?;
    let g = load_graph(&cli.opts)?;
    let o = &cli.opts;
    let report = match cli.command {
        Command::Ideal => commands::ideal(&g),
        Command::Primes => commands::primes(&g, &cfg),
        Command::Compare => commands::compare(&g, o.k, &cfg),
        Command::Symbolic => commands::symbolic(&g, o.k, &cfg),
        Command::Initial => commands::initial(&g, o.probe_ntf.then_some(o.kmax), &cfg),
        Command::Closed => commands::closed(&g, &cfg),
        Command::Certify => commands::certify(&g, o.t, o.cross_check, &cfg),
        Command::NtfProbe => commands::ntf(&g, o.kmax, &cfg),
    }?;
    Ok(report)
}

/// Rendered output (text or JSON) and exit code.
pub fn execute(cli: &Cli) -> (i32, String) {
    match run(cli) {
        Ok(r) if cli.opts.json => (0, r.to_json()),
        Ok(r) => (0, r.to_text()),
        Err(f) => (f.code, format!("error: {}\n", f.message)),
    }
}
