//! The graph of partitions: colength-r monomial ideals in K\[x,y\] are in
//! bijection with partitions of r, and the induced subgraph 𝒢ʳ is computed by
//! running the edge decision over all pairs.

use rayon::prelude::*;

use crate::edges::{edge_scheme, EdgeStatus};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Direction, Monomial};
use crate::schubert::SchemeIdeal;

/// A partition of r: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition(
                "partition parts must be positive".into(),
            ));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Precondition(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// All partitions of r in reverse-lexicographic order: (r) first, (1,…,1)
/// last.
pub fn partitions_of(r: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    gen_partitions(r, r, &mut current, &mut out);
    out
}

fn gen_partitions(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let top = remaining.min(max_part);
    for part in (1..=top).rev() {
        current.push(part);
        gen_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// The colength-r ideal whose staircase has rows along x: for
/// p = (p₁,…,p_k) the standard monomials are
/// {x^i y^j : 0 ≤ j ≤ k−1, 0 ≤ i < p_{j+1}}.
pub fn partition_to_ideal(p: &Partition) -> MonomialIdeal {
    let k = p.parts.len();
    let mut gens = Vec::with_capacity(k + 1);
    for (j, &row) in p.parts.iter().enumerate() {
        gens.push(Monomial::new(vec![row, j as u32]));
    }
    gens.push(Monomial::new(vec![0, k as u32]));
    MonomialIdeal::new(2, gens).expect("two variables")
}

/// Invert [`partition_to_ideal`]: read row lengths off the staircase.
pub fn ideal_to_partition(m: &MonomialIdeal) -> Result<Partition> {
    if m.nvars() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: m.nvars(),
        });
    }
    let staircase = m.standard_monomials()?;
    let height = staircase
        .iter()
        .map(|u| u.exponent(1))
        .max()
        .map_or(0, |h| h + 1);
    let mut rows = vec![0u32; height as usize];
    for u in &staircase {
        let j = u.exponent(1) as usize;
        rows[j] = rows[j].max(u.exponent(0) + 1);
    }
    Partition::new(rows)
}

/// One undirected edge of the graph with its direction and scheme.
#[derive(Clone, Debug)]
pub struct GraphEdge {
    pub endpoints: (usize, usize),
    pub direction: Direction,
    pub scheme: SchemeIdeal,
}

/// The graph 𝒢ʳ (or any induced subgraph on a fixed vertex list).
#[derive(Clone, Debug)]
pub struct IdealGraph {
    pub labels: Vec<Partition>,
    pub vertices: Vec<MonomialIdeal>,
    pub edges: Vec<GraphEdge>,
}

/// Compute 𝒢ʳ over the given field: all colength-r ideals in two variables,
/// pairwise edge tests as a parallel map, deterministic assembly in sorted
/// pair order.
pub fn partition_graph(r: u32, k: &Field, max_r: u32) -> Result<IdealGraph> {
    if r < 1 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    if r > max_r {
        return Err(Error::BudgetExceeded(format!(
            "r = {} exceeds the configured budget {}",
            r, max_r
        )));
    }
    let labels = partitions_of(r);
    let vertices: Vec<MonomialIdeal> = labels.iter().map(partition_to_ideal).collect();
    let mut pairs = Vec::new();
    for i in 0..vertices.len() {
        for j in (i + 1)..vertices.len() {
            pairs.push((i, j));
        }
    }
    let results: Vec<Option<GraphEdge>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let result = edge_scheme(&vertices[i], &vertices[j], k).expect("artinian inputs");
            if result.status == EdgeStatus::Edge {
                Some(GraphEdge {
                    endpoints: (i, j),
                    direction: result.direction.expect("edge has a direction"),
                    scheme: result.scheme.expect("edge has a scheme"),
                })
            } else {
                None
            }
        })
        .collect();
    Ok(IdealGraph {
        labels,
        vertices,
        edges: results.into_iter().flatten().collect(),
    })
}

/// Standard connected components (BFS over the undirected edge set).
pub fn connected_components(graph: &IdealGraph) -> Vec<Vec<usize>> {
    let n = graph.vertices.len();
    let mut adjacency = vec![Vec::new(); n];
    for e in &graph.edges {
        adjacency[e.endpoints.0].push(e.endpoints.1);
        adjacency[e.endpoints.1].push(e.endpoints.0);
    }
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut component = Vec::new();
        let mut queue = std::collections::VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            component.push(v);
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    components
}

/// Compare edge sets of 𝒢ʳ over two fields; returns the symmetric
/// difference as pairs of partition labels.
pub fn edge_set_difference(a: &IdealGraph, b: &IdealGraph) -> Vec<(Partition, Partition)> {
    let set = |g: &IdealGraph| -> std::collections::BTreeSet<(usize, usize)> {
        g.edges.iter().map(|e| e.endpoints).collect()
    };
    let sa = set(a);
    let sb = set(b);
    sa.symmetric_difference(&sb)
        .map(|&(i, j)| (a.labels[i].clone(), a.labels[j].clone()))
        .collect()
}
