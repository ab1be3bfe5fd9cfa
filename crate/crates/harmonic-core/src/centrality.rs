//! Exact harmonic centrality and harmonic centralization.
//!
//! This is the brute-force side of the crate: everything is computed from
//! BFS distances, never from closed forms, so it can adjudicate the
//! formula bank in [`crate::formulas`].
//!
//! For a vertex `u` of a graph of order `n`, the reciprocal sum is
//! `R(u) = Σ_{x≠u} 1/d(u,x)` with unreachable pairs contributing 0, and
//! the harmonic centrality is `H(u) = R(u)/(n−1)`. The graph-level
//! centralization is `Σ_u (max_H − H(u))` divided by `(n−2)/2`, the gap
//! sum of a star of the same order, so stars score exactly 1 and
//! vertex-transitive graphs score exactly 0.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numeric::Rational;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Per-vertex centrality row.
#[derive(Clone, Debug, Serialize)]
pub struct VertexCentrality {
    pub vertex: u32,
    pub label: String,
    #[serde(rename = "R")]
    pub reciprocal: Rational,
    #[serde(rename = "H")]
    pub centrality: Rational,
}

/// Full per-graph centrality report.
///
/// `centralization` is `None` for graphs of order 2, where the normalizer
/// degenerates.
#[derive(Clone, Debug, Serialize)]
pub struct CentralityReport {
    pub order: usize,
    #[serde(rename = "vertices")]
    pub per_vertex: Vec<VertexCentrality>,
    #[serde(rename = "max_H")]
    pub max_centrality: Rational,
    pub argmax: Vec<u32>,
    pub centralization: Option<Rational>,
}

/// CSV header of [`CentralityReport::to_csv`].
pub const CENTRALITY_CSV_HEADER: &str = "vertex,label,R,H";

impl CentralityReport {
    /// Renders the report as CSV: one row per vertex plus a trailing
    /// `#centralization,<value>` line (`undefined` for order 2).
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CENTRALITY_CSV_HEADER);
        out.push('\n');
        for row in &self.per_vertex {
            out.push_str(&format!(
                "{},{},{},{}\n",
                row.vertex, row.label, row.reciprocal, row.centrality
            ));
        }
        match &self.centralization {
            Some(c) => out.push_str(&format!("#centralization,{c}\n")),
            None => out.push_str("#centralization,undefined\n"),
        }
        out
    }
}

fn reciprocal_sum_unchecked(graph: &Graph, vertex: u32) -> Rational {
    let row = graph
        .bfs_distances(vertex)
        .expect("vertex checked by caller");
    let histogram = row.distance_histogram();
    histogram
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, &count)| count > 0)
        .map(|(d, &count)| {
            Rational::new(count as i64, d as i64).expect("distance >= 1") // count/d
        })
        .sum()
}

/// `Σ_{x≠u} 1/d(u,x)` with unreachable vertices contributing 0.
pub fn reciprocal_sum(graph: &Graph, vertex: u32) -> Result<Rational> {
    graph.bfs_distances(vertex)?; // validates the vertex
    Ok(reciprocal_sum_unchecked(graph, vertex))
}

/// Reciprocal sums for every vertex, sequentially.
pub fn reciprocal_sums_seq(graph: &Graph) -> Vec<Rational> {
    graph
        .vertices()
        .map(|v| reciprocal_sum_unchecked(graph, v))
        .collect()
}

/// Reciprocal sums for every vertex, one BFS task per source.
#[cfg(feature = "parallel")]
pub fn reciprocal_sums_par(graph: &Graph) -> Vec<Rational> {
    (0..graph.order() as u32)
        .into_par_iter()
        .map(|v| reciprocal_sum_unchecked(graph, v))
        .collect()
}

/// Reciprocal sums for every vertex. Runs the per-source BFS tasks in
/// parallel when the `parallel` feature is enabled; the result is
/// identical either way.
pub fn reciprocal_sums(graph: &Graph) -> Vec<Rational> {
    #[cfg(feature = "parallel")]
    {
        reciprocal_sums_par(graph)
    }
    #[cfg(not(feature = "parallel"))]
    {
        reciprocal_sums_seq(graph)
    }
}

/// `H(u) = R(u)/(n−1)`. Errors on graphs of order < 2.
pub fn harmonic_centrality(graph: &Graph, vertex: u32) -> Result<Rational> {
    let n = graph.order();
    if n < 2 {
        return Err(Error::DegenerateGraph {
            order: n,
            reason: "harmonic centrality needs order >= 2",
        });
    }
    let r = reciprocal_sum(graph, vertex)?;
    Ok(r / Rational::from_integer(n as i64 - 1))
}

fn centralization_of(values: &[Rational]) -> Rational {
    let max = values.iter().max().expect("nonempty");
    let gaps: Rational = values.iter().map(|v| max - v).sum();
    let normalizer = Rational::new(values.len() as i64 - 2, 2).expect("len checked by caller");
    gaps / normalizer
}

/// Harmonic centralization of a graph of order >= 3.
pub fn centralization(graph: &Graph) -> Result<Rational> {
    let n = graph.order();
    if n < 3 {
        return Err(Error::DegenerateGraph {
            order: n,
            reason: "centralization needs order >= 3",
        });
    }
    let inverse_n_minus_1 = Rational::new(1, n as i64 - 1).expect("n >= 3");
    let values: Vec<Rational> = reciprocal_sums(graph)
        .into_iter()
        .map(|r| r * &inverse_n_minus_1)
        .collect();
    Ok(centralization_of(&values))
}

/// The same centralization arithmetic, decoupled from a graph.
pub fn centralization_from_values(values: &[Rational]) -> Result<Rational> {
    if values.len() < 3 {
        return Err(Error::TooFewValues(values.len()));
    }
    Ok(centralization_of(values))
}

/// Computes R and H for every vertex plus the graph-level summary.
pub fn centrality_profile(graph: &Graph) -> Result<CentralityReport> {
    let n = graph.order();
    if n < 2 {
        return Err(Error::DegenerateGraph {
            order: n,
            reason: "centrality profile needs order >= 2",
        });
    }
    let inverse_n_minus_1 = Rational::new(1, n as i64 - 1).expect("n >= 2");
    let per_vertex: Vec<VertexCentrality> = reciprocal_sums(graph)
        .into_iter()
        .enumerate()
        .map(|(v, reciprocal)| {
            let v = v as u32;
            let centrality = &reciprocal * &inverse_n_minus_1;
            VertexCentrality {
                vertex: v,
                label: graph.label_or_id(v),
                reciprocal,
                centrality,
            }
        })
        .collect();
    let max_centrality = per_vertex
        .iter()
        .map(|row| row.centrality.clone())
        .max()
        .expect("order >= 2");
    let argmax: Vec<u32> = per_vertex
        .iter()
        .filter(|row| row.centrality == max_centrality)
        .map(|row| row.vertex)
        .collect();
    let centralization = if n == 2 {
        None
    } else {
        let values: Vec<Rational> = per_vertex
            .iter()
            .map(|row| row.centrality.clone())
            .collect();
        Some(centralization_of(&values))
    };
    Ok(CentralityReport {
        order: n,
        per_vertex,
        max_centrality,
        argmax,
        centralization,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{Family, FamilySpec};
    use crate::products::{cartesian_product, direct_product};
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().expect("test literal")
    }

    fn family(f: Family, m: u32) -> Graph {
        FamilySpec::new(f, m).unwrap().generate()
    }

    #[test]
    fn reciprocal_sum_examples() {
        let k2 = family(Family::Path, 2);
        assert_eq!(reciprocal_sum(&k2, 0).unwrap(), Rational::one());
        assert_eq!(reciprocal_sum(&k2, 1).unwrap(), Rational::one());

        let c6 = family(Family::Cycle, 6);
        for v in c6.vertices() {
            assert_eq!(reciprocal_sum(&c6, v).unwrap(), q("10/3"));
        }

        let two_edges = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        for v in two_edges.vertices() {
            assert_eq!(reciprocal_sum(&two_edges, v).unwrap(), Rational::one());
        }
    }

    #[test]
    fn harmonic_centrality_examples() {
        let k2 = family(Family::Path, 2);
        assert_eq!(harmonic_centrality(&k2, 0).unwrap(), Rational::one());

        let ladder = cartesian_product(&family(Family::Path, 2), &family(Family::Path, 3))
            .unwrap()
            .into_graph();
        assert_eq!(harmonic_centrality(&ladder, 0).unwrap(), q("2/3"));

        let split = direct_product(&family(Family::Path, 2), &family(Family::Path, 3))
            .unwrap()
            .into_graph();
        assert_eq!(harmonic_centrality(&split, 0).unwrap(), q("3/10"));
    }

    #[test]
    fn degenerate_orders_error() {
        let k1 = family(Family::Path, 1);
        assert!(matches!(
            harmonic_centrality(&k1, 0),
            Err(Error::DegenerateGraph { order: 1, .. })
        ));
        assert!(matches!(
            centrality_profile(&k1),
            Err(Error::DegenerateGraph { order: 1, .. })
        ));
        let k2 = family(Family::Path, 2);
        assert!(matches!(
            centralization(&k2),
            Err(Error::DegenerateGraph { order: 2, .. })
        ));
        assert!(matches!(
            centralization_from_values(&[Rational::one(), Rational::one()]),
            Err(Error::TooFewValues(2))
        ));
    }

    #[test]
    fn reference_centralization_values() {
        let values: Vec<Rational> = ["37/72", "29/36", "23/36", "5/6", "3/4", "13/18", "35/72"]
            .iter()
            .map(|s| q(s))
            .collect();
        assert_eq!(centralization_from_values(&values).unwrap(), q("13/30"));
    }

    #[test]
    fn equal_values_centralize_to_zero() {
        let values = vec![q("1/2"), q("1/2"), q("1/2")];
        assert_eq!(
            centralization_from_values(&values).unwrap(),
            Rational::zero()
        );
        let c5 = family(Family::Cycle, 5);
        assert_eq!(centralization(&c5).unwrap(), Rational::zero());
    }

    #[test]
    fn star_attains_one() {
        let star5 = family(Family::Star, 4); // order 5
        assert_eq!(centralization(&star5).unwrap(), Rational::one());
        let values = vec![q("1"), q("5/8"), q("5/8"), q("5/8"), q("5/8")];
        assert_eq!(
            centralization_from_values(&values).unwrap(),
            Rational::one()
        );
    }

    #[test]
    fn profile_of_k2_has_undefined_centralization() {
        let k2 = family(Family::Path, 2);
        let report = centrality_profile(&k2).unwrap();
        assert_eq!(report.order, 2);
        assert!(report
            .per_vertex
            .iter()
            .all(|row| row.centrality == Rational::one()));
        assert_eq!(report.argmax, vec![0, 1]);
        assert!(report.centralization.is_none());
        assert!(report.to_csv().ends_with("#centralization,undefined\n"));
    }

    #[test]
    fn profile_of_triangular_prism() {
        let prism = cartesian_product(&family(Family::Path, 2), &family(Family::Cycle, 3))
            .unwrap()
            .into_graph();
        let report = centrality_profile(&prism).unwrap();
        assert!(report
            .per_vertex
            .iter()
            .all(|row| row.centrality == q("4/5")));
        assert_eq!(report.centralization, Some(Rational::zero()));
        assert_eq!(report.argmax.len(), 6);
    }

    #[test]
    fn profile_of_ladder_l4() {
        let ladder = cartesian_product(&family(Family::Path, 2), &family(Family::Path, 4))
            .unwrap()
            .into_graph();
        let report = centrality_profile(&ladder).unwrap();
        let corners = [0u32, 3, 4, 7];
        for row in &report.per_vertex {
            let expected = if corners.contains(&row.vertex) {
                q("47/84")
            } else {
                q("29/42")
            };
            assert_eq!(row.centrality, expected, "vertex {}", row.vertex);
        }
        assert_eq!(report.centralization, Some(q("11/63")));
        assert_eq!(report.argmax, vec![1, 2, 5, 6]);
    }

    #[test]
    fn csv_shape() {
        let k2 = family(Family::Path, 2);
        let csv = centrality_profile(&k2).unwrap().to_csv();
        assert_eq!(
            csv,
            "vertex,label,R,H\n0,v1,1,1\n1,v2,1,1\n#centralization,undefined\n"
        );
    }

    #[test]
    fn sequential_and_default_paths_agree() {
        let prism = cartesian_product(&family(Family::Path, 2), &family(Family::Cycle, 7))
            .unwrap()
            .into_graph();
        assert_eq!(reciprocal_sums(&prism), reciprocal_sums_seq(&prism));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn centrality_is_normalized(g in crate::graph::tests::arb_graph(8)) {
            prop_assume!(g.order() >= 2);
            let report = centrality_profile(&g).unwrap();
            for row in &report.per_vertex {
                prop_assert!(row.centrality >= Rational::zero());
                prop_assert!(row.centrality <= Rational::one());
                let dominates = g.degree(row.vertex) == g.order() - 1;
                prop_assert_eq!(row.centrality == Rational::one(), dominates);
            }
        }

        #[test]
        fn isolated_vertex_dilutes_centrality(g in crate::graph::tests::arb_graph(7)) {
            prop_assume!(g.order() >= 2);
            let before = centrality_profile(&g).unwrap();
            let edges: Vec<(u32, u32)> = g.edges().collect();
            let extended = Graph::from_edge_list(g.order() + 1, &edges).unwrap();
            let after = centrality_profile(&extended).unwrap();
            for (b, a) in before.per_vertex.iter().zip(&after.per_vertex) {
                prop_assert_eq!(&b.reciprocal, &a.reciprocal);
                if b.reciprocal.is_zero() {
                    prop_assert_eq!(&a.centrality, &b.centrality);
                } else {
                    prop_assert!(a.centrality < b.centrality);
                }
            }
        }

        #[test]
        fn p2_product_copies_have_equal_centrality(
            h in crate::graph::tests::arb_graph(6),
            direct in proptest::bool::ANY,
        ) {
            let p2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
            let product = if direct {
                direct_product(&p2, &h).unwrap()
            } else {
                cartesian_product(&p2, &h).unwrap()
            };
            let report = centrality_profile(product.graph()).unwrap();
            let nh = h.order();
            for j in 0..nh {
                prop_assert_eq!(
                    &report.per_vertex[j].centrality,
                    &report.per_vertex[nh + j].centrality
                );
            }
        }

        #[test]
        fn relabeling_preserves_centrality_multiset(
            g in crate::graph::tests::arb_graph(7),
            seed in proptest::num::u64::ANY,
        ) {
            prop_assume!(g.order() >= 2);
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut perm: Vec<u32> = g.vertices().collect();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            perm.shuffle(&mut rng);
            let edges: Vec<(u32, u32)> = g
                .edges()
                .map(|(u, v)| (perm[u as usize], perm[v as usize]))
                .collect();
            let h = Graph::from_edge_list(g.order(), &edges).unwrap();

            let multiset = |g: &Graph| {
                let mut values: Vec<(Rational, Rational)> = centrality_profile(g)
                    .unwrap()
                    .per_vertex
                    .into_iter()
                    .map(|row| (row.reciprocal, row.centrality))
                    .collect();
                values.sort();
                values
            };
            prop_assert_eq!(multiset(&g), multiset(&h));
        }
    }
}
