//! Generators for the base graph families: paths, cycles, fans and stars.
//!
//! Vertex 0 is `v1` for paths and cycles, and the hub `v0` for fans and
//! stars; generated graphs carry those names as labels.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Cycle,
    Fan,
    Star,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Fan => "fan",
            Family::Star => "star",
        }
    }

    /// Smallest admissible size parameter.
    pub fn min_m(self) -> u32 {
        match self {
            Family::Path | Family::Fan | Family::Star => 1,
            Family::Cycle => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "fan" => Ok(Family::Fan),
            "star" => Ok(Family::Star),
            other => Err(Error::UnknownFamily(other.to_owned())),
        }
    }
}

/// A validated `(family, m)` pair.
///
/// `m` counts the path/cycle vertices; fans and stars additionally have a
/// hub, so their order is `m + 1`. `F_1` degenerates to `K_2` and the fan
/// edge count `2m - 1` holds for every `m >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    family: Family,
    m: u32,
}

impl FamilySpec {
    pub fn new(family: Family, m: u32) -> Result<FamilySpec> {
        if m < family.min_m() {
            return Err(Error::InvalidFamilyParameter {
                family,
                min: family.min_m(),
                m,
            });
        }
        Ok(FamilySpec { family, m })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn m(self) -> u32 {
        self.m
    }

    pub fn order(self) -> usize {
        match self.family {
            Family::Path | Family::Cycle => self.m as usize,
            Family::Fan | Family::Star => self.m as usize + 1,
        }
    }

    /// Builds the graph, with canonical vertex labels.
    pub fn generate(self) -> Graph {
        let m = self.m;
        let mut edges: Vec<(u32, u32)> = Vec::new();
        match self.family {
            Family::Path => edges.extend((0..m.saturating_sub(1)).map(|i| (i, i + 1))),
            Family::Cycle => edges.extend((0..m).map(|i| (i, (i + 1) % m))),
            Family::Fan => {
                edges.extend((1..m).map(|i| (i, i + 1)));
                edges.extend((1..=m).map(|i| (0, i)));
            }
            Family::Star => edges.extend((1..=m).map(|i| (0, i))),
        }
        let mut graph =
            Graph::from_edge_list(self.order(), &edges).expect("family edges are valid");
        let offset = match self.family {
            Family::Path | Family::Cycle => 1,
            Family::Fan | Family::Star => 0,
        };
        for v in graph.vertices().collect::<Vec<_>>() {
            graph.set_label(v, format!("v{}", v + offset));
        }
        graph
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family, self.m)
    }
}
