//! Simple undirected graphs with BFS distances and edge-list text I/O.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Finite simple undirected graph over dense vertex ids `0..n`.
///
/// Adjacency is stored as a sorted neighbor list per vertex, which gives
/// deterministic iteration everywhere downstream. Graphs are immutable
/// after construction apart from label assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    labels: Vec<Option<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w as usize >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph {
            adj,
            labels: vec![None; n],
        })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        0..self.order() as u32
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as u32;
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn label(&self, v: u32) -> Option<&str> {
        self.labels[v as usize].as_deref()
    }

    pub fn set_label(&mut self, v: u32, label: impl Into<String>) {
        self.labels[v as usize] = Some(label.into());
    }

    /// The vertex label, or the id in decimal for unlabeled vertices.
    pub fn label_or_id(&self, v: u32) -> String {
        match self.label(v) {
            Some(l) => l.to_owned(),
            None => v.to_string(),
        }
    }

    fn check_vertex(&self, v: u32) -> Result<()> {
        if (v as usize) < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Hop distances from `source` to every vertex; `None` marks vertices
    /// in other components.
    pub fn bfs_distances(&self, source: u32) -> Result<DistanceRow> {
        self.check_vertex(source)?;
        let mut distances: Vec<Option<u32>> = vec![None; self.order()];
        distances[source as usize] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let next = distances[u as usize].expect("queued vertices have distances") + 1;
            for &v in self.neighbors(u) {
                if distances[v as usize].is_none() {
                    distances[v as usize] = Some(next);
                    queue.push_back(v);
                }
            }
        }
        Ok(DistanceRow { source, distances })
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.order()];
        let mut components = 0;
        for start in 0..self.order() {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u as u32) {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        queue.push_back(v as usize);
                    }
                }
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.component_count() == 1
    }

    /// Two-colorability check over every component.
    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.order()];
        for start in 0..self.order() as u32 {
            if color[start as usize].is_some() {
                continue;
            }
            color[start as usize] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let side = color[u as usize].expect("queued vertices are colored");
                for &v in self.neighbors(u) {
                    match color[v as usize] {
                        None => {
                            color[v as usize] = Some(!side);
                            queue.push_back(v);
                        }
                        Some(other) if other == side => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        degrees
    }

    /// Parses the edge-list text format: a `n <order>` header, then one
    /// `<u> <v>` pair per line. Blank lines are skipped and lines starting
    /// with `#` are comments.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut order: Option<usize> = None;
        let mut edges: Vec<(u32, u32)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let invalid = |reason: String| Error::InvalidEdgeList {
                line: idx + 1,
                reason,
            };
            let mut tokens = line.split_whitespace();
            if order.is_none() {
                if tokens.next() != Some("n") {
                    return Err(invalid("expected header `n <order>`".to_owned()));
                }
                let value = tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| invalid("expected a vertex count after `n`".to_owned()))?;
                if tokens.next().is_some() {
                    return Err(invalid("trailing tokens after header".to_owned()));
                }
                order = Some(value);
                continue;
            }
            let mut endpoint = || {
                tokens
                    .next()
                    .and_then(|t| t.parse::<u32>().ok())
                    .ok_or_else(|| invalid("expected `<u> <v>` with numeric ids".to_owned()))
            };
            let u = endpoint()?;
            let v = endpoint()?;
            if tokens.next().is_some() {
                return Err(invalid("trailing tokens after edge".to_owned()));
            }
            edges.push((u, v));
        }
        let order = order.ok_or(Error::InvalidEdgeList {
            line: 0,
            reason: "missing `n <order>` header".to_owned(),
        })?;
        Graph::from_edge_list(order, &edges)
    }

    /// Renders the graph in the edge-list text format accepted by
    /// [`Graph::parse_edge_list`], edges in sorted order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.order());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// BFS distances from one source vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceRow {
    source: u32,
    distances: Vec<Option<u32>>,
}

impl DistanceRow {
    pub fn source(&self) -> u32 {
        self.source
    }

    /// Distance to `v`, or `None` if `v` is unreachable.
    pub fn distance(&self, v: u32) -> Option<u32> {
        self.distances[v as usize]
    }

    pub fn distances(&self) -> &[Option<u32>] {
        &self.distances
    }

    /// `counts[d]` = number of vertices other than the source at distance
    /// `d`. Unreachable vertices are not counted.
    pub fn distance_histogram(&self) -> Vec<usize> {
        let max = self.distances.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0usize; max + 1];
        for (v, d) in self.distances.iter().enumerate() {
            if let Some(d) = d {
                if v as u32 != self.source {
                    counts[*d as usize] += 1;
                }
            }
        }
        counts
    }
}
