//! Cartesian and direct products of arbitrary graphs.
//!
//! Both constructors enumerate the defining adjacency rule over the factor
//! edge sets; nothing here special-cases known families, so product graphs
//! are an independent input for the centrality oracle.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Direct,
}

impl ProductKind {
    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Direct => "direct",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "cartesian" => Ok(ProductKind::Cartesian),
            "direct" => Ok(ProductKind::Direct),
            other => Err(format!("unknown product kind `{other}`")),
        }
    }
}

/// A product graph together with its factor bookkeeping.
///
/// Vertex `(i, j)` of the product maps to flat id `i * |V(H)| + j`, so
/// outputs are reproducible across runs. Product vertices are labeled
/// `"(i,j)"`.
#[derive(Clone, Debug)]
pub struct ProductGraph {
    graph: Graph,
    left_order: usize,
    right_order: usize,
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn left_order(&self) -> usize {
        self.left_order
    }

    pub fn right_order(&self) -> usize {
        self.right_order
    }

    pub fn flat_id(&self, left: u32, right: u32) -> u32 {
        left * self.right_order as u32 + right
    }

    pub fn pair(&self, v: u32) -> (u32, u32) {
        (v / self.right_order as u32, v % self.right_order as u32)
    }

    fn assemble(left_order: usize, right_order: usize, edges: Vec<(u32, u32)>) -> ProductGraph {
        let order = left_order * right_order;
        let mut graph = Graph::from_edge_list(order, &edges).expect("product edges are valid");
        for v in 0..order as u32 {
            let (i, j) = (v / right_order as u32, v % right_order as u32);
            graph.set_label(v, format!("({i},{j})"));
        }
        ProductGraph {
            graph,
            left_order,
            right_order,
        }
    }
}

fn check_factors(g: &Graph, h: &Graph) -> Result<()> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::EmptyFactor);
    }
    Ok(())
}

/// Cartesian product: `(u,v) ~ (u',v')` iff one coordinate is equal and
/// the other is an edge of its factor. Edge count is
/// `|V(G)|·|E(H)| + |V(H)|·|E(G)|`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    check_factors(g, h)?;
    let nh = h.order() as u32;
    let flat = |i: u32, j: u32| i * nh + j;
    let mut edges = Vec::with_capacity(g.order() * h.edge_count() + h.order() * g.edge_count());
    for i in 0..g.order() as u32 {
        for (v, w) in h.edges() {
            edges.push((flat(i, v), flat(i, w)));
        }
    }
    for (u, w) in g.edges() {
        for j in 0..nh {
            edges.push((flat(u, j), flat(w, j)));
        }
    }
    Ok(ProductGraph::assemble(g.order(), h.order(), edges))
}

/// Direct (tensor) product: `(u,v) ~ (u',v')` iff both coordinates are
/// edges of their factors. Edge count is `2·|E(G)|·|E(H)|`.
pub fn direct_product(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    check_factors(g, h)?;
    let nh = h.order() as u32;
    let flat = |i: u32, j: u32| i * nh + j;
    let mut edges = Vec::with_capacity(2 * g.edge_count() * h.edge_count());
    for (u, w) in g.edges() {
        for (v, x) in h.edges() {
            edges.push((flat(u, v), flat(w, x)));
            edges.push((flat(u, x), flat(w, v)));
        }
    }
    Ok(ProductGraph::assemble(g.order(), h.order(), edges))
}

pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<ProductGraph> {
    match kind {
        ProductKind::Cartesian => cartesian_product(g, h),
        ProductKind::Direct => direct_product(g, h),
    }
}
