//! Simple graphs on `[n]`: components of induced subgraphs, the cut-point
//! sets indexing minimal primes, and closed-labeling detection.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::par;

/// Simple undirected graph on vertices `1..=n`; edges stored as `(i, j)`, `i < j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    // adjacency bitmask per vertex, index 0 unused
    adj: Vec<u64>,
}

/// A vertex subset `S` with the components of `G - S`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CutSet {
    pub set: Vec<usize>,
    /// Vertex classes sorted by least element, each sorted ascending.
    pub components: Vec<Vec<usize>>,
}

impl CutSet {
    pub fn c(&self) -> usize {
        self.components.len()
    }

    pub fn render(&self) -> String {
        format!("{{{}}}", self.set.iter().join(","))
    }
}

fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | (1 << v))
}

fn vertices_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|v| mask & (1 << v) != 0).collect()
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > 62 {
            return Err(Error::InvalidArgument("graphs are limited to 62 vertices".into()));
        }
        let mut g = Graph { n, edges: BTreeSet::new(), adj: vec![0; n + 1] };
        for (u, v) in edges {
            let (i, j) = (u.min(v), u.max(v));
            if i == j {
                return Err(Error::InvalidArgument(format!("loop at vertex {i}")));
            }
            if i == 0 || j > n {
                return Err(Error::InvalidIndex(format!("edge {{{u},{v}}} outside [1,{n}]")));
            }
            if !g.edges.insert((i, j)) {
                return Err(Error::InvalidArgument(format!("duplicate edge {{{i},{j}}}")));
            }
            g.adj[i] |= 1 << j;
            g.adj[j] |= 1 << i;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i, i + 1))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs 3 vertices");
        Graph::new(n, (1..n).map(|i| (i, i + 1)).chain([(1, n)])).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n, (1..=n).tuple_combinations()).expect("valid complete graph")
    }

    /// Star with center 1.
    pub fn star(n: usize) -> Self {
        Graph::new(n, (2..=n).map(|i| (1, i))).expect("valid star")
    }

    /// Vertex-disjoint union; the second graph's vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        Graph::new(
            self.n + other.n,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(i, j)| (i + shift, j + shift))),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    fn all_mask(&self) -> u64 {
        ((1u64 << (self.n + 1)) - 1) & !1
    }

    /// Components of the subgraph induced on `keep` (bitmask over vertices).
    fn components_of_mask(&self, keep: u64) -> Vec<u64> {
        let mut left = keep;
        let mut comps = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & keep & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            left &= !comp;
            comps.push(comp);
        }
        comps
    }

    fn component_count(&self, removed: u64) -> usize {
        self.components_of_mask(self.all_mask() & !removed).len()
    }

    fn check_subset(&self, s: &[usize]) -> Result<()> {
        match s.iter().find(|&&v| v == 0 || v > self.n) {
            Some(v) => Err(Error::InvalidIndex(format!("vertex {v} outside [1,{}]", self.n))),
            None => Ok(()),
        }
    }

    /// Connected components of `G - S`, classes ordered by least element.
    pub fn components_without(&self, s: &[usize]) -> Result<CutSet> {
        self.check_subset(s)?;
        let removed = mask_of(s);
        let components = self
            .components_of_mask(self.all_mask() & !removed)
            .into_iter()
            .map(vertices_of)
            .collect();
        Ok(CutSet { set: vertices_of(removed), components })
    }

    /// Connected components of `G` as vertex classes.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_of_mask(self.all_mask()).into_iter().map(vertices_of).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components_of_mask(self.all_mask()).len() == 1
    }

    /// Subgraph on `[n]` keeping only the edges inside `class`.
    pub fn restrict_edges(&self, class: &[usize]) -> Graph {
        let m = mask_of(class);
        Graph::new(
            self.n,
            self.edges
                .iter()
                .copied()
                .filter(|&(i, j)| m & (1 << i) != 0 && m & (1 << j) != 0),
        )
        .expect("subgraph of a valid graph")
    }

    /// Apply a relabeling: vertex `v` becomes `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = perm.to_vec();
        seen.sort_unstable();
        if seen != (1..=self.n).collect::<Vec<_>>() {
            return Err(Error::InvalidArgument("relabeling is not a permutation of [n]".into()));
        }
        Graph::new(self.n, self.edges.iter().map(|&(i, j)| (perm[i - 1], perm[j - 1])))
    }

    /// Serialize in the graph file format.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (i, j) in &self.edges {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} edges=[{}]",
            self.n,
            self.edges.iter().map(|(i, j)| format!("{i}-{j}")).join(", ")
        )
    }
}

/// Parses `n <N>` followed by `u v` edge lines; `#` starts a comment.
impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        let mut seen = BTreeSet::new();
        for (lineno, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse(format!("line {}: {msg}: {raw:?}", lineno + 1));
            let fields: Vec<&str> = line.split_whitespace().collect();
            match n {
                None => {
                    if fields.len() != 2 || fields[0] != "n" {
                        return Err(err("expected header `n <N>`"));
                    }
                    let count: usize = fields[1].parse().map_err(|_| err("bad vertex count"))?;
                    if count == 0 || count > 62 {
                        return Err(err("vertex count must be in 1..=62"));
                    }
                    n = Some(count);
                }
                Some(count) => {
                    if fields.len() != 2 {
                        return Err(err("expected `u v`"));
                    }
                    let u: usize = fields[0].parse().map_err(|_| err("bad vertex"))?;
                    let v: usize = fields[1].parse().map_err(|_| err("bad vertex"))?;
                    if !(1 <= u && u < v && v <= count) {
                        return Err(err("edge must satisfy 1 <= u < v <= n"));
                    }
                    if !seen.insert((u, v)) {
                        return Err(err("duplicate edge"));
                    }
                    edges.push((u, v));
                }
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing header `n <N>`".into()))?;
        Graph::new(n, edges)
    }
}

/// All `S ⊆ [n]` with `S = ∅` or `c(S \ {i}) < c(S)` for every `i ∈ S`,
/// sorted by size then lexicographically.
pub fn cut_sets(g: &Graph, cfg: &Config) -> Result<Vec<CutSet>> {
    cfg.check_vertices(g.n, cfg.max_enum_vertices, "cut-set enumeration")?;
    let n = g.n;
    let total = 1u64 << n;
    // per-mask work is tiny, so hand rayon blocks of masks
    let blocks: Vec<u64> = (0..total).step_by(1024).collect();
    let block = |start: u64| start..(start + 1024).min(total);
    // c(S) for every subset, indexed by the 0-based subset mask
    let counts: Vec<usize> =
        par::map(cfg, &blocks, |&b| block(b).map(|m| g.component_count(m << 1)).collect::<Vec<_>>()).concat();
    let is_cut = |m: u64| {
        m == 0 || (0..n).filter(|b| m & (1 << b) != 0).all(|b| counts[(m & !(1 << b)) as usize] < counts[m as usize])
    };
    let mut found: Vec<Vec<usize>> = par::map(cfg, &blocks, |&b| {
        block(b)
            .filter(|&m| is_cut(m))
            .map(|m| (0..n).filter(|b| m & (1 << b) != 0).map(|b| b + 1).collect::<Vec<usize>>())
            .collect::<Vec<_>>()
    })
    .concat();
    found.sort_by(|a: &Vec<usize>, b: &Vec<usize>| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    par::try_map(cfg, &found, |s| g.components_without(s))
}

/// For every edge `{i,k}`, `i < k`, and every `i < j < k`: `{i,j}` and `{j,k}` are edges.
pub fn is_closed_under_labeling(g: &Graph) -> bool {
    g.edges.iter().all(|&(i, k)| ((i + 1)..k).all(|j| g.has_edge(i, j) && g.has_edge(j, k)))
}

/// First permutation (lex order, `perm[v-1]` = new label of `v`) under which
/// the graph is closed.
pub fn find_closed_labeling(g: &Graph, cfg: &Config) -> Result<Option<Vec<usize>>> {
    cfg.check_vertices(g.n, cfg.max_labeling_vertices, "closed-labeling search")?;
    if g.n == 0 {
        return Ok(Some(Vec::new()));
    }
    // split on the first entry so the parallel search still reports the lex-first hit
    let firsts: Vec<usize> = (1..=g.n).collect();
    Ok(par::find_map_first(cfg, &firsts, |&first| {
        let rest: Vec<usize> = (1..=g.n).filter(|&v| v != first).collect();
        let k = rest.len();
        rest.into_iter().permutations(k).find_map(|tail| {
            let mut perm = Vec::with_capacity(g.n);
            perm.push(first);
            perm.extend(tail);
            let h = g.relabel(&perm).expect("permutation");
            is_closed_under_labeling(&h).then_some(perm)
        })
    }))
}
