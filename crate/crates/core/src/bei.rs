//! Binomial edge ideals: construction, minimal primes from cut sets, symbolic
//! versus ordinary powers, and instance checks of the initial-ideal transfer
//! argument.

use std::sync::Arc;

use itertools::Itertools;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::graph::{cut_sets, CutSet, Graph};
use crate::groebner::{
    ideal_equal, ideal_member, ideal_power, ideal_product, initial_ideal, intersect_all, Ideal,
    ReducedGB,
};
use crate::monomial::{
    mono_intersect, mono_power, ntf_probe, symbolic_power_squarefree, MonomialIdeal, NtfReport,
};
use crate::par;
use crate::ring::{make_minor, MonomialOrder, Polynomial, RingContext};

const LEX: MonomialOrder = MonomialOrder::Lex;

fn ring_of(g: &Graph) -> Result<RingContext> {
    RingContext::new(g.n(), 0)
}

fn check_binomial_bounds(g: &Graph, cfg: &Config) -> Result<()> {
    cfg.validate()?;
    cfg.check_vertices(g.n(), cfg.max_vertices, "binomial edge ideal")
}

/// `J_G`: one minor `[i,j]` per edge, edges in sorted order.
pub fn binomial_edge_ideal(g: &Graph) -> Result<Ideal> {
    if g.num_edges() == 0 {
        return Err(Error::EmptyIdeal("graph has no edges".into()));
    }
    let ctx = ring_of(g)?;
    let gens = g.edges().map(|(i, j)| make_minor(&ctx, i, j)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ctx, gens)
}

/// `P_S(G)` together with its cut set.
#[derive(Clone, Debug)]
pub struct MinimalPrime {
    pub cutset: CutSet,
    pub ideal: Ideal,
    /// Whether `S` satisfies the cut-point criterion, i.e. `P_S` is a minimal prime.
    pub is_cut_set: bool,
}

fn is_cut_point_set(g: &Graph, cs: &CutSet) -> Result<bool> {
    for &i in &cs.set {
        let without: Vec<usize> = cs.set.iter().copied().filter(|&v| v != i).collect();
        if g.components_without(&without)?.c() >= cs.c() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(x_i, y_i : i ∈ S) + Σ J_{complete(class)}` over the components of `G - S`.
pub fn minimal_prime_ideal(g: &Graph, s: &[usize]) -> Result<MinimalPrime> {
    let cutset = g.components_without(s)?;
    let is_cut_set = is_cut_point_set(g, &cutset)?;
    let ideal = prime_of(g, &cutset)?;
    Ok(MinimalPrime { cutset, ideal, is_cut_set })
}

fn prime_of(g: &Graph, cutset: &CutSet) -> Result<Ideal> {
    let ctx = ring_of(g)?;
    let mut gens = Vec::new();
    for &i in &cutset.set {
        gens.push(Polynomial::var(ctx, ctx.x(i)));
        gens.push(Polynomial::var(ctx, ctx.y(i)));
    }
    for class in &cutset.components {
        for (&i, &j) in class.iter().tuple_combinations() {
            gens.push(make_minor(&ctx, i, j)?);
        }
    }
    Ideal::new(ctx, gens)
}

/// One prime per cut set, in cut-set order.
pub fn minimal_primes(g: &Graph, cfg: &Config) -> Result<Vec<MinimalPrime>> {
    cut_sets(g, cfg)?
        .into_iter()
        .map(|cutset| {
            let ideal = prime_of(g, &cutset)?;
            Ok(MinimalPrime { cutset, ideal, is_cut_set: true })
        })
        .collect()
}

/// `J_G = ∩ P_S(G)` over the cut sets.
pub fn check_radical_decomposition(g: &Graph, cfg: &Config) -> Result<bool> {
    check_binomial_bounds(g, cfg)?;
    let j = binomial_edge_ideal(g)?;
    let primes: Vec<Ideal> = minimal_primes(g, cfg)?.into_iter().map(|p| p.ideal).collect();
    let meet = intersect_all(&primes, cfg)?;
    ideal_equal(&j, &meet, cfg)
}

/// `J_G^(k) = ∩ P_S(G)^k` over the cut sets.
pub fn symbolic_power(g: &Graph, k: usize, cfg: &Config) -> Result<Ideal> {
    check_binomial_bounds(g, cfg)?;
    cfg.check_power(k)?;
    if g.num_edges() == 0 {
        return Err(Error::EmptyIdeal("graph has no edges".into()));
    }
    let primes = minimal_primes(g, cfg)?;
    let powers = par::try_map(cfg, &primes, |p| {
        let pk = ideal_power(&p.ideal, k, cfg)?;
        pk.reduced_gb(LEX, cfg)?;
        Ok(pk)
    })?;
    intersect_all(&powers, cfg)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    StrictlyContained,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Equal => "EQUAL",
            Verdict::StrictlyContained => "STRICT",
        }
    }
}

/// How a comparison was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Reduced GBs of `J^k` and `J^(k)` compared on the whole graph.
    Direct,
    /// Every connected component with edges compared for all powers up to `k`.
    PerComponent,
}

#[derive(Clone, Debug)]
pub struct PowerComparison {
    pub graph: Graph,
    pub k: usize,
    pub verdict: Verdict,
    pub route: Route,
    /// Element of `J^(k)` outside `J^k`.
    pub witness: Option<Polynomial>,
    pub ordinary_gb: Option<Arc<ReducedGB>>,
    pub symbolic_gb: Option<Arc<ReducedGB>>,
}

impl PowerComparison {
    fn direct(
        graph: &Graph,
        k: usize,
        ordinary: Arc<ReducedGB>,
        symbolic: Arc<ReducedGB>,
    ) -> Result<Self> {
        if ordinary.basis() == symbolic.basis() {
            return Ok(PowerComparison {
                graph: graph.clone(),
                k,
                verdict: Verdict::Equal,
                route: Route::Direct,
                witness: None,
                ordinary_gb: Some(ordinary),
                symbolic_gb: Some(symbolic),
            });
        }
        // basis is ascending, so the first miss is the lex-smallest
        let mut witness = None;
        for f in symbolic.basis() {
            if !ordinary.contains(f)? {
                witness = Some(f.clone());
                break;
            }
        }
        let witness = witness.ok_or_else(|| {
            Error::Invariant(format!(
                "J^{k} and J^({k}) differ but J^({k}) is contained in J^{k}"
            ))
        })?;
        if ordinary.contains(&witness)? || !symbolic.contains(&witness)? {
            return Err(Error::Invariant("witness failed re-verification".into()));
        }
        Ok(PowerComparison {
            graph: graph.clone(),
            k,
            verdict: Verdict::StrictlyContained,
            route: Route::Direct,
            witness: Some(witness),
            ordinary_gb: Some(ordinary),
            symbolic_gb: Some(symbolic),
        })
    }
}

fn compare_direct(g: &Graph, k: usize, cfg: &Config) -> Result<PowerComparison> {
    let j = binomial_edge_ideal(g)?;
    let ordinary = ideal_power(&j, k, cfg)?;
    let symbolic = symbolic_power(g, k, cfg)?;
    let og = ordinary.reduced_gb(LEX, cfg)?;
    let sg = symbolic.reduced_gb(LEX, cfg)?;
    PowerComparison::direct(g, k, og, sg)
}

/// Connected components carrying at least one edge, each as a graph on `[n]`.
pub fn edge_components(g: &Graph) -> Vec<Graph> {
    g.components()
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| g.restrict_edges(&c))
        .collect()
}

/// Decide `J^k = J^(k)`. Graphs with several edge components are compared
/// component by component for every power up to `k`; full ideals are only
/// assembled when a witness is needed.
pub fn compare_powers(g: &Graph, k: usize, cfg: &Config) -> Result<PowerComparison> {
    check_binomial_bounds(g, cfg)?;
    cfg.check_power(k)?;
    if g.num_edges() == 0 {
        return Err(Error::EmptyIdeal("graph has no edges".into()));
    }
    let parts = edge_components(g);
    if parts.len() > 1 && k > 1 {
        let jobs: Vec<(usize, usize)> =
            (0..parts.len()).cartesian_product(2..=k).collect();
        let verdicts = par::try_map(cfg, &jobs, |&(p, t)| {
            Ok(compare_direct(&parts[p], t, cfg)?.verdict)
        })?;
        if verdicts.iter().all(|v| *v == Verdict::Equal) {
            return Ok(PowerComparison {
                graph: g.clone(),
                k,
                verdict: Verdict::Equal,
                route: Route::PerComponent,
                witness: None,
                ordinary_gb: None,
                symbolic_gb: None,
            });
        }
        // some component fails at a power <= k, so the sum fails at k
        let full = compare_direct(g, k, cfg)?;
        if full.verdict == Verdict::Equal {
            return Err(Error::Invariant(
                "a component comparison failed but the assembled ideals agree".into(),
            ));
        }
        return Ok(full);
    }
    compare_direct(g, k, cfg)
}

fn initial_of_prime(p: &MinimalPrime, cfg: &Config) -> Result<MonomialIdeal> {
    initial_ideal(&p.ideal, LEX, cfg)
}

/// `ini(J_G)` equals `∩ ini(P_S)` over the cut sets.
pub fn check_ini_intersection(g: &Graph, cfg: &Config) -> Result<bool> {
    check_binomial_bounds(g, cfg)?;
    let j = binomial_edge_ideal(g)?;
    let lhs = initial_ideal(&j, LEX, cfg)?;
    let primes = minimal_primes(g, cfg)?;
    let inis = par::try_map(cfg, &primes, |p| initial_of_prime(p, cfg))?;
    let mut rhs = MonomialIdeal::unit(*j.ctx());
    for ini in &inis {
        rhs = mono_intersect(&rhs, ini)?;
    }
    Ok(lhs == rhs)
}

/// `ini(P_S^t)` equals `ini(P_S)^t`.
pub fn check_ini_power_commutes(g: &Graph, s: &[usize], t: usize, cfg: &Config) -> Result<bool> {
    check_binomial_bounds(g, cfg)?;
    cfg.check_power(t)?;
    let p = minimal_prime_ideal(g, s)?;
    prime_power_commutes(&p, t, cfg)
}

fn prime_power_commutes(p: &MinimalPrime, t: usize, cfg: &Config) -> Result<bool> {
    if p.ideal.is_zero() {
        // S = ∅ with no edges inside any class: both sides are zero
        return Ok(true);
    }
    let lhs = initial_ideal(&ideal_power(&p.ideal, t, cfg)?, LEX, cfg)?;
    let rhs = mono_power(&initial_of_prime(p, cfg)?, t)?;
    Ok(lhs == rhs)
}

/// Status of the hypothesis `P^(t) = P^t` for the minimal primes.
pub const PRIME_POWER_HYPOTHESIS: &str =
    "theorem for determinantal primes, not checked";

/// Instance check of the hypotheses that let `J_G^(t) = J_G^t` be read off
/// from the initial ideal.
#[derive(Clone, Debug)]
pub struct CertificateReport {
    pub graph: Graph,
    pub t: usize,
    /// `ini(J_G) = ∩ ini(P_S)`.
    pub ini_intersection: bool,
    /// `ini(P_S^t) = ini(P_S)^t` per cut set, in cut-set order.
    pub ini_power_commutes: Vec<(Vec<usize>, bool)>,
    /// `ini(J_G)^(t) = ini(J_G)^t`.
    pub ini_symbolic_equal: bool,
    /// Lex-smallest minimal generator of `ini(J_G)^(t)` outside `ini(J_G)^t`.
    pub ini_witness: Option<String>,
    pub prime_powers: &'static str,
    pub conclusion: bool,
    /// Direct comparison, when requested.
    pub cross_check: Option<Verdict>,
}

impl CertificateReport {
    pub fn all_primes_commute(&self) -> bool {
        self.ini_power_commutes.iter().all(|(_, ok)| *ok)
    }
}

pub fn lemma_certificate(g: &Graph, t: usize, cross_check: bool, cfg: &Config) -> Result<CertificateReport> {
    check_binomial_bounds(g, cfg)?;
    if t < 2 {
        return Err(Error::InvalidArgument("certificate needs t >= 2".into()));
    }
    cfg.check_power(t)?;
    let j = binomial_edge_ideal(g)?;
    let ini_intersection = check_ini_intersection(g, cfg)?;
    let primes = minimal_primes(g, cfg)?;
    let commutes = par::try_map(cfg, &primes, |p| prime_power_commutes(p, t, cfg))?;
    let ini_power_commutes: Vec<(Vec<usize>, bool)> = primes
        .iter()
        .map(|p| p.cutset.set.clone())
        .zip(commutes)
        .collect();
    let ini = initial_ideal(&j, LEX, cfg)?;
    let symbolic = symbolic_power_squarefree(&ini, t).map_err(|e| match e {
        Error::NotSquarefree(m) => Error::Invariant(format!("initial ideal not squarefree: {m}")),
        other => other,
    })?;
    let ordinary = mono_power(&ini, t)?;
    let ini_witness = symbolic
        .gens()
        .iter()
        .rev()
        .find(|m| !ordinary.contains(m))
        .map(|m| m.render(ini.ctx()));
    let ini_symbolic_equal = ini_witness.is_none() && ordinary == symbolic;
    let conclusion = ini_intersection
        && ini_power_commutes.iter().all(|(_, ok)| *ok)
        && ini_symbolic_equal;
    let cross_check = if cross_check {
        Some(compare_powers(g, t, cfg)?.verdict)
    } else {
        None
    };
    if conclusion && cross_check == Some(Verdict::StrictlyContained) {
        return Err(Error::Invariant(
            "certificate applies but the direct comparison found a strict containment".into(),
        ));
    }
    Ok(CertificateReport {
        graph: g.clone(),
        t,
        ini_intersection,
        ini_power_commutes,
        ini_symbolic_equal,
        ini_witness,
        prime_powers: PRIME_POWER_HYPOTHESIS,
        conclusion,
        cross_check,
    })
}

/// An ideal whose symbolic powers can be computed.
pub trait SymbolicPowers {
    fn ideal(&self) -> &Ideal;
    fn symbolic_power(&self, k: usize, cfg: &Config) -> Result<Ideal>;
}

/// Binomial edge ideal of one edge component, living in the ring of the whole graph.
#[derive(Clone, Debug)]
pub struct EdgeIdealPart {
    graph: Graph,
    ideal: Ideal,
}

impl EdgeIdealPart {
    pub fn new(graph: Graph) -> Result<Self> {
        let ideal = binomial_edge_ideal(&graph)?;
        Ok(EdgeIdealPart { graph, ideal })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

impl SymbolicPowers for EdgeIdealPart {
    fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    fn symbolic_power(&self, k: usize, cfg: &Config) -> Result<Ideal> {
        symbolic_power(&self.graph, k, cfg)
    }
}

/// One part per edge component of `g`.
pub fn disjoint_parts(g: &Graph) -> Result<Vec<EdgeIdealPart>> {
    edge_components(g).into_iter().map(EdgeIdealPart::new).collect()
}

/// Compositions of `k` into `parts` non-negative summands, lex order.
fn compositions(k: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![k]];
    }
    (0..=k)
        .rev()
        .flat_map(|first| {
            compositions(k - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// `(I_1 + .. + I_c)^(k) = Σ_{i_1+..+i_c=k} I_1^(i_1) ⋯ I_c^(i_c)` for ideals
/// in pairwise disjoint sets of variables (`I^(0)` is the unit ideal).
pub fn symbolic_power_disjoint<P: SymbolicPowers + Sync>(
    parts: &[P],
    k: usize,
    cfg: &Config,
) -> Result<Ideal> {
    if k == 0 {
        return Err(Error::InvalidArgument("symbolic power needs k >= 1".into()));
    }
    let first = parts
        .first()
        .ok_or_else(|| Error::InvalidArgument("no parts given".into()))?;
    let ctx = *first.ideal().ctx();
    let mut used = 0u32;
    for p in parts {
        let m = p.ideal().support_mask();
        if used & m != 0 {
            return Err(Error::VariableOverlap(format!(
                "variables {} appear in more than one part",
                (0..32).filter(|v| used & m & (1 << v) != 0).map(|v| ctx.var_name(v)).join(", ")
            )));
        }
        used |= m;
    }
    let jobs: Vec<(usize, usize)> = (0..parts.len()).cartesian_product(1..=k).collect();
    let computed = par::try_map(cfg, &jobs, |&(p, t)| {
        let sp = parts[p].symbolic_power(t, cfg)?;
        let gb = sp.reduced_gb(LEX, cfg)?;
        Ideal::new(ctx, gb.basis().to_vec())
    })?;
    let power = |p: usize, t: usize| -> &Ideal { &computed[p * k + (t - 1)] };
    let mut gens = Vec::new();
    for comp in compositions(k, parts.len()) {
        let mut acc: Option<Ideal> = None;
        for (p, &t) in comp.iter().enumerate() {
            if t == 0 {
                continue;
            }
            acc = Some(match acc {
                None => power(p, t).clone(),
                Some(a) => ideal_product(&a, power(p, t), cfg)?,
            });
        }
        if let Some(a) = acc {
            gens.extend_from_slice(a.gens());
        }
    }
    Ideal::new(ctx, gens)
}

/// Lex initial ideal of `J_G` (monomial-side vertex bound).
pub fn initial_ideal_of_graph(g: &Graph, cfg: &Config) -> Result<MonomialIdeal> {
    cfg.validate()?;
    cfg.check_vertices(g.n(), cfg.max_monomial_vertices, "initial ideal")?;
    initial_ideal(&binomial_edge_ideal(g)?, LEX, cfg)
}

/// Normal torsion-freeness probe on the lex initial ideal of `J_G`.
pub fn ntf_probe_graph(g: &Graph, kmax: usize, cfg: &Config) -> Result<(MonomialIdeal, NtfReport)> {
    let ini = initial_ideal_of_graph(g, cfg)?;
    let report = ntf_probe(&ini, kmax, cfg).map_err(|e| match e {
        Error::NotSquarefree(m) => Error::Invariant(format!("initial ideal not squarefree: {m}")),
        other => other,
    })?;
    Ok((ini, report))
}

/// `J_G^k ⊆ J_G^(k)`, checked generator by generator.
pub fn power_contained_in_symbolic(g: &Graph, k: usize, cfg: &Config) -> Result<bool> {
    let j = binomial_edge_ideal(g)?;
    let ordinary = ideal_power(&j, k, cfg)?;
    let symbolic = symbolic_power(g, k, cfg)?;
    for f in ordinary.gens() {
        if !ideal_member(f, &symbolic, cfg)? {
            return Ok(false);
        }
    }
    Ok(true)
}
