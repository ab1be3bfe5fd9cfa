//! Formula-vs-oracle verification.
//!
//! For each catalogued closed form this module builds the actual product
//! graph, evaluates the form, recomputes the same quantity with the BFS
//! oracle, and records the comparison. Both sides are exact rationals, so
//! records compare with `==` — a tolerance would only mask real
//! discrepancies. Mismatches are data, not errors: the harness exists to
//! map which closed forms survive the oracle.

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Serialize, Serializer};

use crate::centrality::{centrality_profile, harmonic_centrality};
use crate::error::{Error, Result};
use crate::families::{Family, FamilySpec};
use crate::formulas::{
    cartesian_centrality, cartesian_centralization, direct_centrality, direct_centralization,
    TheoremId, TheoremKind, VertexClass,
};
use crate::numeric::Rational;
use crate::products::{product, ProductGraph, ProductKind};

/// What a record compares: one vertex class, or the whole graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Locator {
    Class(VertexClass),
    Graph,
}

impl fmt::Display for Locator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Locator::Class(class) => class.fmt(f),
            Locator::Graph => f.write_str("graph"),
        }
    }
}

impl Serialize for Locator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// One `(theorem, m, locator)` comparison.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationRecord {
    pub theorem: TheoremId,
    pub m: u32,
    pub locator: Locator,
    pub formula: Rational,
    pub oracle: Rational,
    #[serde(rename = "match")]
    pub matches: bool,
    pub note: String,
}

/// Per-theorem tallies of a sweep.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremSummary {
    pub theorem: TheoremId,
    pub checked: usize,
    pub matched: usize,
    pub mismatched: usize,
}

/// Sweep result over all twelve theorems.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationSummary {
    pub theorems: Vec<TheoremSummary>,
    pub mismatches: Vec<VerificationRecord>,
}

/// CSV header of [`records_to_csv`].
pub const VERIFICATION_CSV_HEADER: &str = "theorem,m,locator,formula,oracle,match,note";

/// Renders records as CSV, one line per record. Notes never contain
/// commas, so no quoting is needed.
pub fn records_to_csv(records: &[VerificationRecord]) -> String {
    let mut out = String::from(VERIFICATION_CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.theorem, r.m, r.locator, r.formula, r.oracle, r.matches, r.note
        ));
    }
    out
}

/// The vertex classes a centrality theorem addresses for `(family, m)`.
pub fn classes_for(family: Family, m: u32) -> Vec<VertexClass> {
    match family {
        Family::Path => {
            let mut classes = vec![VertexClass::End];
            classes.extend((2..m).map(VertexClass::Interior));
            classes
        }
        Family::Cycle => vec![VertexClass::Any],
        Family::Fan => {
            let mut classes = vec![VertexClass::Hub, VertexClass::FanEnd];
            if m >= 3 {
                classes.push(VertexClass::FanInterior);
            }
            classes
        }
        Family::Star => Vec::new(),
    }
}

fn right_factor_ids(family: Family, m: u32, class: VertexClass) -> Vec<u32> {
    match (family, class) {
        (Family::Path, VertexClass::End) => {
            if m == 1 {
                vec![0]
            } else {
                vec![0, m - 1]
            }
        }
        (Family::Path, VertexClass::Interior(j)) => vec![j - 1],
        (Family::Cycle, VertexClass::Any) => (0..m).collect(),
        (Family::Fan, VertexClass::Hub) => vec![0],
        (Family::Fan, VertexClass::FanEnd) => {
            if m == 1 {
                vec![1]
            } else {
                vec![1, m]
            }
        }
        (Family::Fan, VertexClass::FanInterior) => (2..m).collect(),
        _ => unreachable!("class validated against family"),
    }
}

fn right_factor_m(product: &ProductGraph, family: Family) -> u32 {
    let right = product.right_order() as u32;
    match family {
        Family::Path | Family::Cycle => right,
        Family::Fan | Family::Star => right - 1,
    }
}

/// Flat product ids of every vertex the class names, across both copies.
pub fn class_members(product: &ProductGraph, family: Family, class: VertexClass) -> Vec<u32> {
    let m = right_factor_m(product, family);
    let mut members = Vec::new();
    for i in 0..product.left_order() as u32 {
        for j in right_factor_ids(family, m, class) {
            members.push(product.flat_id(i, j));
        }
    }
    members
}

/// The shared oracle centrality of a vertex class.
///
/// Every member of the class must agree; disagreement means the class is
/// not an automorphism orbit of the product and is reported as
/// [`Error::ClassNotAnOrbit`].
pub fn oracle_class_value(
    product: &ProductGraph,
    family: Family,
    class: VertexClass,
) -> Result<Rational> {
    let m = right_factor_m(product, family);
    class.validate(family, m)?;
    let members = class_members(product, family, class);
    let mut values = members
        .iter()
        .map(|&v| harmonic_centrality(product.graph(), v));
    let first = values.next().expect("classes are nonempty")?;
    for value in values {
        if value? != first {
            return Err(Error::ClassNotAnOrbit { class, m });
        }
    }
    Ok(first)
}

fn connectivity_note(product: &ProductGraph) -> String {
    if product.graph().is_connected() {
        "product is connected; formula assumes two disjoint copies".to_owned()
    } else {
        String::new()
    }
}

/// Flat ids the ladder centralization form names as its maximizers.
fn named_ladder_maximizers(product: &ProductGraph, m: u32) -> Vec<u32> {
    let positions: Vec<u32> = if m % 2 == 1 {
        vec![(m - 1) / 2]
    } else {
        vec![m / 2 - 1, m / 2]
    };
    let mut ids = Vec::new();
    for i in 0..product.left_order() as u32 {
        for &j in &positions {
            ids.push(product.flat_id(i, j));
        }
    }
    ids.sort_unstable();
    ids
}

fn instance_records(theorem: TheoremId, m: u32) -> Vec<VerificationRecord> {
    let family = theorem.family();
    let left = FamilySpec::new(Family::Path, 2)
        .expect("P_2 is valid")
        .generate();
    let right = FamilySpec::new(family, m)
        .expect("m within theorem domain")
        .generate();
    let prod = product(theorem.product(), &left, &right).expect("factors are nonempty");

    match theorem.kind() {
        TheoremKind::Centrality => classes_for(family, m)
            .into_iter()
            .map(|class| {
                let formula = match theorem.product() {
                    ProductKind::Cartesian => cartesian_centrality(family, m, class),
                    ProductKind::Direct => direct_centrality(family, m, class),
                }
                .expect("m within theorem domain");
                let (oracle, matches, mut note) = match oracle_class_value(&prod, family, class) {
                    Ok(oracle) => {
                        let matches = formula == oracle;
                        (oracle, matches, String::new())
                    }
                    Err(Error::ClassNotAnOrbit { .. }) => {
                        let representative = class_members(&prod, family, class)[0];
                        let oracle =
                            harmonic_centrality(prod.graph(), representative).expect("order >= 2");
                        (
                            oracle,
                            false,
                            "class is not an orbit; member centralities differ".to_owned(),
                        )
                    }
                    Err(other) => unreachable!("swept classes are valid: {other}"),
                };
                if !matches
                    && note.is_empty()
                    && theorem.product() == ProductKind::Direct
                    && family == Family::Fan
                {
                    note = connectivity_note(&prod);
                }
                VerificationRecord {
                    theorem,
                    m,
                    locator: Locator::Class(class),
                    formula,
                    oracle,
                    matches,
                    note,
                }
            })
            .collect(),
        TheoremKind::Centralization => {
            let formula = match theorem.product() {
                ProductKind::Cartesian => cartesian_centralization(family, m),
                ProductKind::Direct => direct_centralization(family, m),
            }
            .expect("m within theorem domain");
            let report = centrality_profile(prod.graph()).expect("product order >= 4");
            let oracle = report.centralization.clone().expect("product order >= 3");
            let matches = formula == oracle;
            let mut note = String::new();
            if theorem == TheoremId::CartesianPathCentralization
                && report.argmax != named_ladder_maximizers(&prod, m)
            {
                note = "named maximizers differ from oracle argmax".to_owned();
            }
            if !matches
                && note.is_empty()
                && theorem.product() == ProductKind::Direct
                && family == Family::Fan
            {
                note = connectivity_note(&prod);
            }
            vec![VerificationRecord {
                theorem,
                m,
                locator: Locator::Graph,
                formula,
                oracle,
                matches,
                note,
            }]
        }
    }
}

#[cfg(feature = "parallel")]
fn map_instances(ms: Vec<u32>, theorem: TheoremId) -> Vec<Vec<VerificationRecord>> {
    use rayon::prelude::*;
    ms.into_par_iter()
        .map(|m| instance_records(theorem, m))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn map_instances(ms: Vec<u32>, theorem: TheoremId) -> Vec<Vec<VerificationRecord>> {
    ms.into_iter()
        .map(|m| instance_records(theorem, m))
        .collect()
}

/// Sweeps one theorem over `m_range`.
///
/// Values of `m` outside the theorem's domain are skipped; each covered
/// instance yields one record per vertex class (centrality theorems) or
/// one graph-level record (centralization theorems), ordered by
/// `(m, locator)`.
pub fn verify_theorem(theorem: TheoremId, m_range: RangeInclusive<u32>) -> Vec<VerificationRecord> {
    let ms: Vec<u32> = m_range.filter(|&m| theorem.covers(m)).collect();
    map_instances(ms, theorem).into_iter().flatten().collect()
}

/// Sweeps all twelve theorems over their domains up to `m_max`
/// (inclusive). `m_max` must be at least 4 so every odd/even branch is
/// exercised; 5 or more also covers the nonempty ladder tail sums.
pub fn verify_all(m_max: u32) -> VerificationSummary {
    assert!(m_max >= 4, "m_max must be at least 4, got {m_max}");
    let mut theorems = Vec::with_capacity(TheoremId::ALL.len());
    let mut mismatches = Vec::new();
    for theorem in TheoremId::ALL {
        let records = verify_theorem(theorem, 1..=m_max);
        let matched = records.iter().filter(|r| r.matches).count();
        theorems.push(TheoremSummary {
            theorem,
            checked: records.len(),
            matched,
            mismatched: records.len() - matched,
        });
        mismatches.extend(records.into_iter().filter(|r| !r.matches));
    }
    VerificationSummary {
        theorems,
        mismatches,
    }
}
