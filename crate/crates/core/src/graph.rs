//! Finite simple graphs and their compositions.
//!
//! Vertices of a composition are pairs `(v, w)` of a vertex of each factor;
//! the pair is stored at index `v * |W| + w`. The layout is part of the public
//! contract so that compositions are reproducible bit for bit.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Order of the group behind a Cayley graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupOrder {
    Finite(u64),
    Infinite,
}

impl GroupOrder {
    /// Order of the direct product. Saturates at `u64::MAX`.
    pub fn times(self, other: GroupOrder) -> GroupOrder {
        match (self, other) {
            (GroupOrder::Finite(a), GroupOrder::Finite(b)) => GroupOrder::Finite(a.saturating_mul(b)),
            _ => GroupOrder::Infinite,
        }
    }
}

/// Whether the recorded generating set is known to generate the group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generation {
    Generates,
    DoesNotGenerate,
    /// Not decided, e.g. `S x T` inside `Γ x Δ`.
    Undetermined,
}

impl Generation {
    fn and(self, other: Generation) -> Generation {
        use Generation::*;
        match (self, other) {
            (Generates, Generates) => Generates,
            (DoesNotGenerate, _) | (_, DoesNotGenerate) => DoesNotGenerate,
            _ => Undetermined,
        }
    }
}

/// Group bookkeeping carried along with a Cayley graph `Cay(Γ, S)`.
///
/// `degree` is the regular degree `k` of the graph. For a Cayley graph it
/// equals `generating_set_size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CayleyMeta {
    pub group_order: GroupOrder,
    pub degree: usize,
    pub generating_set_size: usize,
    pub is_cayley: bool,
    pub generation: Generation,
}

impl CayleyMeta {
    pub fn finite(order: u64, generating_set_size: usize) -> Self {
        CayleyMeta {
            group_order: GroupOrder::Finite(order),
            degree: generating_set_size,
            generating_set_size,
            is_cayley: true,
            generation: Generation::Generates,
        }
    }

    pub fn infinite(generating_set_size: usize) -> Self {
        CayleyMeta {
            group_order: GroupOrder::Infinite,
            degree: generating_set_size,
            generating_set_size,
            is_cayley: true,
            generation: Generation::Generates,
        }
    }

    /// `G + H` is `Cay(Γ x Δ, S ∪ T)`.
    pub fn sum(&self, other: &CayleyMeta) -> CayleyMeta {
        CayleyMeta {
            group_order: self.group_order.times(other.group_order),
            degree: self.degree + other.degree,
            generating_set_size: self.generating_set_size + other.generating_set_size,
            is_cayley: self.is_cayley && other.is_cayley,
            generation: self.generation.and(other.generation),
        }
    }

    /// `G x H` is the graph of `S x T` on `Γ x Δ`; whether `S x T` generates
    /// is left undetermined, so the result is not claimed to be Cayley.
    pub fn product(&self, other: &CayleyMeta) -> CayleyMeta {
        CayleyMeta {
            group_order: self.group_order.times(other.group_order),
            degree: self.degree * other.degree,
            generating_set_size: self.generating_set_size * other.generating_set_size,
            is_cayley: false,
            generation: Generation::Undetermined,
        }
    }

    /// `G x_s H` is `Cay(Γ x Δ, S ∪ T ∪ (S x T))`.
    pub fn strong(&self, other: &CayleyMeta) -> CayleyMeta {
        let (s, t) = (self.generating_set_size, other.generating_set_size);
        CayleyMeta {
            group_order: self.group_order.times(other.group_order),
            degree: self.degree + other.degree + self.degree * other.degree,
            generating_set_size: s + t + s * t,
            is_cayley: self.is_cayley && other.is_cayley,
            generation: self.generation.and(other.generation),
        }
    }
}

/// A finite simple graph on vertices `0..n_vertices`.
///
/// Equality compares the vertex count and edge set only; the optional Cayley
/// metadata is ignored.
#[derive(Debug, Clone)]
pub struct FiniteGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    cayley: Option<CayleyMeta>,
}

impl PartialEq for FiniteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for FiniteGraph {}

impl FiniteGraph {
    /// Builds a graph from unordered pairs. Duplicates collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn new<I>(n_vertices: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n_vertices == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v || u >= n_vertices || v >= n_vertices {
                return Err(Error::InvalidEdge(u, v));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(FiniteGraph {
            n: n_vertices,
            edges: set,
            cayley: None,
        })
    }

    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Result<Self> {
        FiniteGraph::new(n, core::iter::empty())
    }

    // Callers guarantee normalized, in-range pairs.
    fn from_parts(n: usize, edges: BTreeSet<(usize, usize)>, cayley: Option<CayleyMeta>) -> Self {
        debug_assert!(n > 0);
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n));
        FiniteGraph { n, edges, cayley }
    }

    pub fn with_cayley(mut self, meta: CayleyMeta) -> Self {
        self.cayley = Some(meta);
        self
    }

    pub fn cayley(&self) -> Option<&CayleyMeta> {
        self.cayley.as_ref()
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = self.degrees();
        deg.sort_unstable();
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// `Some(k)` if every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let deg = self.degrees();
        let k = deg[0];
        deg.iter().all(|&d| d == k).then_some(k)
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.regular_degree() == Some(k)
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == self.n
    }

    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency_lists();
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let s = side[u].unwrap();
                for &v in &adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!s);
                            queue.push_back(v);
                        }
                        Some(t) if t == s => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Dense row-major 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for &(u, v) in &self.edges {
            a[u * n + v] = 1.0;
            a[v * n + u] = 1.0;
        }
        a
    }
}

/// `K_n`, the Cayley graph of any group of order `n` with respect to all
/// non-identity elements.
pub fn complete_graph(n: usize) -> Result<FiniteGraph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok(FiniteGraph::from_parts(n, edges, Some(CayleyMeta::finite(n as u64, n - 1))))
}

/// `K_{n,n}` with parts `0..n` and `n..2n`. It is the Cayley graph of a group
/// of order `2n` with respect to the complement of an index-2 subgroup.
pub fn complete_bipartite(n: usize) -> Result<FiniteGraph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let edges = (0..n).flat_map(|u| (n..2 * n).map(move |v| (u, v))).collect();
    Ok(FiniteGraph::from_parts(2 * n, edges, Some(CayleyMeta::finite(2 * n as u64, n))))
}

/// The cycle `C_m`, i.e. `Cay(Z/m, {±1})`.
pub fn cycle_graph(m: usize) -> Result<FiniteGraph> {
    if m < 3 {
        return Err(Error::TooSmall { what: "cycle length", min: 3, got: m });
    }
    let edges = (0..m).map(|i| {
        let j = (i + 1) % m;
        (i.min(j), i.max(j))
    });
    Ok(FiniteGraph::from_parts(m, edges.collect(), Some(CayleyMeta::finite(m as u64, 2))))
}

/// The path `P_m` on `m` vertices.
pub fn path_graph(m: usize) -> Result<FiniteGraph> {
    if m == 0 {
        return Err(Error::TooSmall { what: "path length", min: 1, got: 0 });
    }
    let edges = (1..m).map(|i| (i - 1, i)).collect();
    Ok(FiniteGraph::from_parts(m, edges, None))
}

/// Multiplication table of a finite group with elements `0..order` and
/// identity `0`. Row `g`, column `h` holds `g·h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultTable {
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
}

impl MultTable {
    /// Validates every group axiom. Associativity is checked exhaustively,
    /// which costs `O(order^3)`.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        let mut table = Vec::with_capacity(order * order);
        for (g, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotAGroup(format!("row {g} has {} entries, expected {order}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= order) {
                return Err(Error::NotAGroup(format!("entry {x} in row {g} is out of range")));
            }
            table.extend_from_slice(row);
        }
        let mul = |a: usize, b: usize| table[a * order + b];
        for g in 0..order {
            if mul(0, g) != g || mul(g, 0) != g {
                return Err(Error::NotAGroup(format!("0 is not an identity for {g}")));
            }
        }
        let mut inverses = vec![usize::MAX; order];
        for (g, inv) in inverses.iter_mut().enumerate() {
            match (0..order).find(|&h| mul(g, h) == 0) {
                Some(h) if mul(h, g) == 0 => *inv = h,
                _ => return Err(Error::NotAGroup(format!("{g} has no two-sided inverse"))),
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = mul(a, b);
                for c in 0..order {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::NotAGroup(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                    }
                }
            }
        }
        Ok(MultTable { order, table, inverses })
    }

    /// The cyclic group `Z/n` under addition.
    pub fn cyclic(n: usize) -> Result<Self> {
        MultTable::new((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Whether `gens` generates the whole group.
    pub fn generates(&self, gens: &[usize]) -> bool {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(g) = stack.pop() {
            for &s in gens {
                let h = self.mul(g, s);
                if !seen[h] {
                    seen[h] = true;
                    count += 1;
                    stack.push(h);
                }
            }
        }
        count == self.order
    }
}

/// `Cay(Γ, S)`: vertices are group elements, edges `{g, g·s}` for `s ∈ S`.
///
/// `gens` must be closed under inverses and must not contain the identity.
/// Duplicates in `gens` are ignored.
pub fn cayley_graph(group: &MultTable, gens: &[usize]) -> Result<FiniteGraph> {
    let order = group.order();
    let gens: BTreeSet<usize> = gens.iter().copied().collect();
    for &s in &gens {
        if s >= order {
            return Err(Error::GeneratorOutOfRange(s, order));
        }
        if s == 0 {
            return Err(Error::IdentityGenerator);
        }
        let inv = group.inverse(s);
        if !gens.contains(&inv) {
            return Err(Error::AsymmetricGenerators(s, inv));
        }
    }
    let mut edges = BTreeSet::new();
    for g in 0..order {
        for &s in &gens {
            let h = group.mul(g, s);
            edges.insert((g.min(h), g.max(h)));
        }
    }
    let gens: Vec<usize> = gens.into_iter().collect();
    let mut meta = CayleyMeta::finite(order as u64, gens.len());
    if !group.generates(&gens) {
        meta.generation = Generation::DoesNotGenerate;
    }
    Ok(FiniteGraph::from_parts(order, edges, Some(meta)))
}

fn compose_meta(
    g: &FiniteGraph,
    h: &FiniteGraph,
    rule: impl Fn(&CayleyMeta, &CayleyMeta) -> CayleyMeta,
) -> Option<CayleyMeta> {
    Some(rule(g.cayley.as_ref()?, h.cayley.as_ref()?))
}

fn sum_edges(g: &FiniteGraph, h: &FiniteGraph) -> BTreeSet<(usize, usize)> {
    let w = h.n;
    let mut edges = BTreeSet::new();
    for v in 0..g.n {
        for &(a, b) in &h.edges {
            edges.insert((v * w + a, v * w + b));
        }
    }
    for &(u, v) in &g.edges {
        for x in 0..w {
            edges.insert((u * w + x, v * w + x));
        }
    }
    edges
}

fn product_edges(g: &FiniteGraph, h: &FiniteGraph) -> BTreeSet<(usize, usize)> {
    let w = h.n;
    let mut edges = BTreeSet::new();
    for &(u, v) in &g.edges {
        for &(a, b) in &h.edges {
            // u < v, so the first coordinate orders each pair
            edges.insert((u * w + a, v * w + b));
            edges.insert((u * w + b, v * w + a));
        }
    }
    edges
}

/// The sum `G + H` (Cartesian product): one coordinate moves along an edge
/// of its factor, the other stays fixed.
pub fn graph_sum(g: &FiniteGraph, h: &FiniteGraph) -> FiniteGraph {
    FiniteGraph::from_parts(g.n * h.n, sum_edges(g, h), compose_meta(g, h, CayleyMeta::sum))
}

/// The product `G x H` (tensor product): both coordinates move along edges.
pub fn graph_product(g: &FiniteGraph, h: &FiniteGraph) -> FiniteGraph {
    FiniteGraph::from_parts(g.n * h.n, product_edges(g, h), compose_meta(g, h, CayleyMeta::product))
}

/// The strong product `G x_s H`, whose edge set is the union of the sum's and
/// the product's.
pub fn graph_strong_product(g: &FiniteGraph, h: &FiniteGraph) -> FiniteGraph {
    let mut edges = sum_edges(g, h);
    edges.extend(product_edges(g, h));
    FiniteGraph::from_parts(g.n * h.n, edges, compose_meta(g, h, CayleyMeta::strong))
}

/// `count`-fold sum `G + G + ... + G`, folded from the right.
pub fn graph_power_sum(g: &FiniteGraph, count: usize) -> Result<FiniteGraph> {
    if count == 0 {
        return Err(Error::TooSmall { what: "repeat count", min: 1, got: 0 });
    }
    let mut acc = g.clone();
    for _ in 1..count {
        acc = graph_sum(g, &acc);
    }
    Ok(acc)
}
