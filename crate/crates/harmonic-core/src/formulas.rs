//! Closed-form harmonic centrality and centralization of `P_2` products.
//!
//! Each evaluator returns the exact value of a catalogued closed form for
//! the Cartesian or direct product of `P_2` with a path, cycle or fan on
//! parameter `m`, as a pure function of `(family, m, vertex class)`. The
//! forms are transcribed as catalogued — including the direct-fan entries
//! (3.9/3.12) that the verification harness shows to disagree with the
//! BFS oracle — so the harness in [`crate::verify`] can adjudicate them
//! rather than silently repair them.
//!
//! Theorem ids: 3.1–3.3 Cartesian centrality (path/cycle/fan), 3.4–3.6
//! Cartesian centralization, 3.7–3.9 direct centrality, 3.10–3.12 direct
//! centralization.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::Family;
use crate::numeric::{harmonic_number, Rational};
use crate::products::ProductKind;

/// Which orbit of the product a centrality formula addresses.
///
/// Positions are 1-based along the right factor: `interior(j)` requires
/// `1 < j < m`, `end` means `j ∈ {1, m}`, and `hub` is the fan hub `v0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexClass {
    End,
    Interior(u32),
    Hub,
    FanEnd,
    FanInterior,
    Any,
}

impl fmt::Display for VertexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexClass::End => f.write_str("end"),
            VertexClass::Interior(j) => write!(f, "interior({j})"),
            VertexClass::Hub => f.write_str("hub"),
            VertexClass::FanEnd => f.write_str("fan_end"),
            VertexClass::FanInterior => f.write_str("fan_interior"),
            VertexClass::Any => f.write_str("any"),
        }
    }
}

impl Serialize for VertexClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl VertexClass {
    /// Checks that the class names a valid orbit of the `(family, m)`
    /// product.
    pub fn validate(self, family: Family, m: u32) -> Result<()> {
        let fits = match (family, self) {
            (Family::Path, VertexClass::End) => true,
            (Family::Path, VertexClass::Interior(j)) => 1 < j && j < m,
            (Family::Cycle, VertexClass::Any) => true,
            (Family::Fan, VertexClass::Hub | VertexClass::FanEnd) => true,
            (Family::Fan, VertexClass::FanInterior) => m >= 3,
            _ => false,
        };
        if fits {
            Ok(())
        } else {
            Err(Error::ClassDomain {
                class: self,
                family,
                m,
            })
        }
    }
}

/// Centrality or centralization statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremKind {
    Centrality,
    Centralization,
}

/// Identifier of one catalogued closed form. The `(kind, product,
/// family)` triple is in bijection with the ids `3.1`–`3.12`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    CartesianPathCentrality,
    CartesianCycleCentrality,
    CartesianFanCentrality,
    CartesianPathCentralization,
    CartesianCycleCentralization,
    CartesianFanCentralization,
    DirectPathCentrality,
    DirectCycleCentrality,
    DirectFanCentrality,
    DirectPathCentralization,
    DirectCycleCentralization,
    DirectFanCentralization,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::CartesianPathCentrality,
        TheoremId::CartesianCycleCentrality,
        TheoremId::CartesianFanCentrality,
        TheoremId::CartesianPathCentralization,
        TheoremId::CartesianCycleCentralization,
        TheoremId::CartesianFanCentralization,
        TheoremId::DirectPathCentrality,
        TheoremId::DirectCycleCentrality,
        TheoremId::DirectFanCentrality,
        TheoremId::DirectPathCentralization,
        TheoremId::DirectCycleCentralization,
        TheoremId::DirectFanCentralization,
    ];

    pub fn number(self) -> &'static str {
        match self {
            TheoremId::CartesianPathCentrality => "3.1",
            TheoremId::CartesianCycleCentrality => "3.2",
            TheoremId::CartesianFanCentrality => "3.3",
            TheoremId::CartesianPathCentralization => "3.4",
            TheoremId::CartesianCycleCentralization => "3.5",
            TheoremId::CartesianFanCentralization => "3.6",
            TheoremId::DirectPathCentrality => "3.7",
            TheoremId::DirectCycleCentrality => "3.8",
            TheoremId::DirectFanCentrality => "3.9",
            TheoremId::DirectPathCentralization => "3.10",
            TheoremId::DirectCycleCentralization => "3.11",
            TheoremId::DirectFanCentralization => "3.12",
        }
    }

    pub fn kind(self) -> TheoremKind {
        match self {
            TheoremId::CartesianPathCentrality
            | TheoremId::CartesianCycleCentrality
            | TheoremId::CartesianFanCentrality
            | TheoremId::DirectPathCentrality
            | TheoremId::DirectCycleCentrality
            | TheoremId::DirectFanCentrality => TheoremKind::Centrality,
            _ => TheoremKind::Centralization,
        }
    }

    pub fn product(self) -> ProductKind {
        match self {
            TheoremId::CartesianPathCentrality
            | TheoremId::CartesianCycleCentrality
            | TheoremId::CartesianFanCentrality
            | TheoremId::CartesianPathCentralization
            | TheoremId::CartesianCycleCentralization
            | TheoremId::CartesianFanCentralization => ProductKind::Cartesian,
            _ => ProductKind::Direct,
        }
    }

    pub fn family(self) -> Family {
        match self {
            TheoremId::CartesianPathCentrality
            | TheoremId::CartesianPathCentralization
            | TheoremId::DirectPathCentrality
            | TheoremId::DirectPathCentralization => Family::Path,
            TheoremId::CartesianCycleCentrality
            | TheoremId::CartesianCycleCentralization
            | TheoremId::DirectCycleCentrality
            | TheoremId::DirectCycleCentralization => Family::Cycle,
            _ => Family::Fan,
        }
    }

    /// Smallest `m` the closed form covers.
    pub fn min_m(self) -> u32 {
        match self {
            TheoremId::CartesianPathCentrality | TheoremId::DirectPathCentrality => 1,
            TheoremId::CartesianFanCentrality
            | TheoremId::CartesianFanCentralization
            | TheoremId::DirectFanCentrality
            | TheoremId::DirectFanCentralization => 2,
            _ => 3,
        }
    }

    pub fn covers(self, m: u32) -> bool {
        m >= self.min_m()
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.number())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.number() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_owned()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.number())
    }
}

fn frac(p: i64, q: i64) -> Rational {
    Rational::new(p, q).expect("nonzero denominator")
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn hn(k: i64) -> Rational {
    debug_assert!(k >= 0, "harmonic index must be nonnegative");
    harmonic_number(k as usize)
}

fn domain_err(family: Family, m: u32, reason: &'static str) -> Error {
    Error::FormulaDomain { family, m, reason }
}

fn require(cond: bool, family: Family, m: u32, reason: &'static str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(domain_err(family, m, reason))
    }
}

fn check_product_family(family: Family, m: u32) -> Result<()> {
    if family == Family::Star {
        return Err(domain_err(family, m, "no closed form covers star products"));
    }
    Ok(())
}

fn check_centrality_domain(family: Family, m: u32, class: VertexClass) -> Result<()> {
    check_product_family(family, m)?;
    class.validate(family, m)?;
    match family {
        Family::Path => require(m >= 1, family, m, "path products need m >= 1"),
        Family::Cycle => require(m >= 3, family, m, "cycle products need m >= 3"),
        Family::Fan => match class {
            VertexClass::FanInterior => {
                require(m >= 3, family, m, "fan interior vertices need m >= 3")
            }
            _ => require(m >= 2, family, m, "fan products need m >= 2"),
        },
        Family::Star => unreachable!("rejected above"),
    }
}

/// `Σ_{i=2}^{upper} (2H_{i-1} + 2H_{m-i} + (1-i)/i + 1/(m-i+1))`; empty
/// when `upper < 2`.
fn ladder_gap_tail(m: i64, upper: i64) -> Rational {
    let mut sum = Rational::zero();
    for i in 2..=upper {
        sum = sum + int(2) * hn(i - 1) + int(2) * hn(m - i) + frac(1 - i, i) + frac(1, m - i + 1);
    }
    sum
}

/// `Σ_{j=2}^{upper} (H_{j-1} + H_{m-j})`; empty when `upper < 2`.
fn path_gap_tail(m: i64, upper: i64) -> Rational {
    let mut sum = Rational::zero();
    for j in 2..=upper {
        sum = sum + hn(j - 1) + hn(m - j);
    }
    sum
}

/// Harmonic centrality of a vertex class of `P_2 □ path/cycle/fan(m)`
/// (ids 3.1, 3.2, 3.3).
pub fn cartesian_centrality(family: Family, m: u32, class: VertexClass) -> Result<Rational> {
    check_centrality_domain(family, m, class)?;
    let m = i64::from(m);
    let value = match (family, class) {
        (Family::Path, VertexClass::End) => (int(2) * hn(m - 1) + frac(1, m)) / int(2 * m - 1),
        (Family::Path, VertexClass::Interior(j)) => {
            let j = i64::from(j);
            (int(2) * (hn(j - 1) + hn(m - j)) + frac(1, j) + frac(1, m - j + 1) - int(1))
                / int(2 * m - 1)
        }
        (Family::Cycle, VertexClass::Any) => {
            if m % 2 == 1 {
                (int(4) * hn((m - 1) / 2) + frac(3 - m, m + 1)) / int(2 * m - 1)
            } else {
                (int(4) * hn(m / 2) + frac(2, m + 2) - frac(m + 2, m)) / int(2 * m - 1)
            }
        }
        (Family::Fan, VertexClass::Hub) => frac(3 * m + 2, 2 * (2 * m + 1)),
        (Family::Fan, VertexClass::FanEnd) => frac(5 * m + 14, 6 * (2 * m + 1)),
        (Family::Fan, VertexClass::FanInterior) => frac(5 * m + 18, 6 * (2 * m + 1)),
        _ => unreachable!("class validated against family"),
    };
    Ok(value)
}

/// Harmonic centralization of `P_2 □ path/cycle/fan(m)` (ids 3.4, 3.5,
/// 3.6).
///
/// The path form has odd/even branches whose trailing sums are empty at
/// m = 3 and m = 4; the even branch does not extend to m = 2, which is
/// rejected.
pub fn cartesian_centralization(family: Family, m: u32) -> Result<Rational> {
    check_product_family(family, m)?;
    let m_u32 = m;
    let m = i64::from(m);
    match family {
        Family::Path => {
            require(
                m >= 3,
                Family::Path,
                m_u32,
                "ladder centralization needs m >= 3",
            )?;
            let value = if m % 2 == 1 {
                let bracket = int(2 * (m - 1)) * hn((m - 1) / 2) - int(2) * hn(m - 1)
                    + frac(2 * (m - 1), m + 1)
                    - frac(m - 1, 2)
                    - frac(1, m)
                    - ladder_gap_tail(m, (m - 1) / 2);
                frac(4, (m - 1) * (2 * m - 1)) * bracket
            } else {
                let bracket =
                    int(4 * (m - 2)) * hn(m / 2) - int(4) * hn(m - 1) - frac(m * m - 2, m)
                        + frac(2 * m - 4, m + 2)
                        - int(2) * ladder_gap_tail(m, (m - 2) / 2);
                frac(2, (2 * m - 1) * (m - 1)) * bracket
            };
            Ok(value)
        }
        Family::Cycle => {
            require(m >= 3, Family::Cycle, m_u32, "cycle products need m >= 3")?;
            Ok(Rational::zero())
        }
        Family::Fan => {
            require(m >= 2, Family::Fan, m_u32, "fan products need m >= 2")?;
            Ok(frac(4 * (m - 1) * (m - 2), 3 * m * (2 * m + 1)))
        }
        Family::Star => unreachable!("rejected above"),
    }
}

/// Harmonic centrality of a vertex class of `P_2 × path/cycle/fan(m)`
/// (ids 3.7, 3.8, 3.9).
pub fn direct_centrality(family: Family, m: u32, class: VertexClass) -> Result<Rational> {
    check_centrality_domain(family, m, class)?;
    let m = i64::from(m);
    let value = match (family, class) {
        (Family::Path, VertexClass::End) => hn(m - 1) / int(2 * m - 1),
        (Family::Path, VertexClass::Interior(j)) => {
            let j = i64::from(j);
            (hn(j - 1) + hn(m - j)) / int(2 * m - 1)
        }
        (Family::Cycle, VertexClass::Any) => {
            if m % 2 == 1 {
                (int(2) * hn(m - 1) + frac(1, m)) / int(2 * m - 1)
            } else {
                (int(2) * hn((m - 2) / 2) + frac(2, m)) / int(2 * m - 1)
            }
        }
        (Family::Fan, VertexClass::Hub) => frac(m, 2 * m + 1),
        (Family::Fan, VertexClass::FanEnd) => frac(m + 2, 2 * (2 * m + 1)),
        (Family::Fan, VertexClass::FanInterior) => frac(m + 3, 2 * (2 * m + 1)),
        _ => unreachable!("class validated against family"),
    };
    Ok(value)
}

/// Harmonic centralization of `P_2 × path/cycle/fan(m)` (ids 3.10, 3.11,
/// 3.12).
pub fn direct_centralization(family: Family, m: u32) -> Result<Rational> {
    check_product_family(family, m)?;
    let m_u32 = m;
    let m = i64::from(m);
    match family {
        Family::Path => {
            require(
                m >= 3,
                Family::Path,
                m_u32,
                "path centralization needs m >= 3",
            )?;
            let numerator = if m % 2 == 1 {
                int(m - 1) * hn((m - 1) / 2) - hn(m - 1) - path_gap_tail(m, (m - 1) / 2)
            } else {
                int(m - 2) * (hn((m - 2) / 2) + frac(1, m))
                    - hn(m - 1)
                    - path_gap_tail(m, (m - 2) / 2)
            };
            Ok(int(4) * numerator / int((m - 1) * (2 * m - 1)))
        }
        Family::Cycle => {
            require(m >= 3, Family::Cycle, m_u32, "cycle products need m >= 3")?;
            Ok(Rational::zero())
        }
        Family::Fan => {
            require(m >= 2, Family::Fan, m_u32, "fan products need m >= 2")?;
            Ok(frac((m - 1) * (m - 2), m * (2 * m + 1)))
        }
        Family::Star => unreachable!("rejected above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().expect("test literal")
    }

    #[test]
    fn theorem_ids_are_a_bijection() {
        for (idx, t) in TheoremId::ALL.into_iter().enumerate() {
            assert_eq!(t.number(), format!("3.{}", idx + 1));
            assert_eq!(t.number().parse::<TheoremId>().unwrap(), t);
        }
        assert!(matches!(
            "3.13".parse::<TheoremId>(),
            Err(Error::UnknownTheorem(_))
        ));
    }

    #[test]
    fn cartesian_path_values() {
        assert_eq!(
            cartesian_centrality(Family::Path, 1, VertexClass::End).unwrap(),
            Rational::one()
        );
        assert_eq!(
            cartesian_centrality(Family::Path, 3, VertexClass::End).unwrap(),
            q("2/3")
        );
        assert_eq!(
            cartesian_centrality(Family::Path, 3, VertexClass::Interior(2)).unwrap(),
            q("4/5")
        );
        assert_eq!(
            cartesian_centrality(Family::Path, 4, VertexClass::End).unwrap(),
            q("47/84")
        );
    }

    #[test]
    fn cartesian_cycle_values() {
        assert_eq!(
            cartesian_centrality(Family::Cycle, 3, VertexClass::Any).unwrap(),
            q("4/5")
        );
        assert_eq!(
            cartesian_centrality(Family::Cycle, 4, VertexClass::Any).unwrap(),
            q("29/42")
        );
    }

    #[test]
    fn cartesian_fan_values() {
        assert_eq!(
            cartesian_centrality(Family::Fan, 3, VertexClass::Hub).unwrap(),
            q("11/14")
        );
        assert_eq!(
            cartesian_centrality(Family::Fan, 3, VertexClass::FanEnd).unwrap(),
            q("29/42")
        );
        assert_eq!(
            cartesian_centrality(Family::Fan, 3, VertexClass::FanInterior).unwrap(),
            q("11/14")
        );
    }

    #[test]
    fn cartesian_centralization_values() {
        assert_eq!(
            cartesian_centralization(Family::Path, 3).unwrap(),
            q("4/15")
        );
        assert_eq!(
            cartesian_centralization(Family::Path, 4).unwrap(),
            q("11/63")
        );
        assert_eq!(
            cartesian_centralization(Family::Path, 5).unwrap(),
            q("31/180")
        );
        assert_eq!(
            cartesian_centralization(Family::Path, 6).unwrap(),
            q("38/275")
        );
        for m in 3..=20 {
            assert_eq!(
                cartesian_centralization(Family::Cycle, m).unwrap(),
                Rational::zero()
            );
        }
        assert_eq!(cartesian_centralization(Family::Fan, 3).unwrap(), q("8/63"));
        assert_eq!(
            cartesian_centralization(Family::Fan, 2).unwrap(),
            Rational::zero()
        );
    }

    #[test]
    fn direct_centrality_values() {
        assert_eq!(
            direct_centrality(Family::Path, 3, VertexClass::End).unwrap(),
            q("3/10")
        );
        assert_eq!(
            direct_centrality(Family::Path, 1, VertexClass::End).unwrap(),
            Rational::zero()
        );
        assert_eq!(
            direct_centrality(Family::Cycle, 3, VertexClass::Any).unwrap(),
            q("2/3")
        );
        assert_eq!(
            direct_centrality(Family::Fan, 3, VertexClass::Hub).unwrap(),
            q("3/7")
        );
    }

    #[test]
    fn direct_centralization_values() {
        assert_eq!(direct_centralization(Family::Path, 3).unwrap(), q("1/5"));
        assert_eq!(direct_centralization(Family::Path, 4).unwrap(), q("8/63"));
        assert_eq!(direct_centralization(Family::Path, 5).unwrap(), q("13/108"));
        assert_eq!(direct_centralization(Family::Path, 6).unwrap(), q("26/275"));
        assert_eq!(
            direct_centralization(Family::Cycle, 8).unwrap(),
            Rational::zero()
        );
        assert_eq!(direct_centralization(Family::Fan, 3).unwrap(), q("2/21"));
        assert_eq!(
            direct_centralization(Family::Fan, 2).unwrap(),
            Rational::zero()
        );
    }

    #[test]
    fn domain_guards() {
        assert!(matches!(
            cartesian_centrality(Family::Cycle, 2, VertexClass::Any),
            Err(Error::FormulaDomain { .. })
        ));
        assert!(matches!(
            cartesian_centrality(Family::Path, 4, VertexClass::Hub),
            Err(Error::ClassDomain { .. })
        ));
        assert!(matches!(
            cartesian_centrality(Family::Path, 4, VertexClass::Interior(4)),
            Err(Error::ClassDomain { .. })
        ));
        assert!(matches!(
            cartesian_centrality(Family::Fan, 1, VertexClass::Hub),
            Err(Error::FormulaDomain { .. })
        ));
        assert!(matches!(
            cartesian_centrality(Family::Fan, 2, VertexClass::FanInterior),
            Err(Error::ClassDomain { .. })
        ));
        assert!(matches!(
            cartesian_centralization(Family::Path, 2),
            Err(Error::FormulaDomain { .. })
        ));
        assert!(matches!(
            direct_centralization(Family::Path, 2),
            Err(Error::FormulaDomain { .. })
        ));
        assert!(matches!(
            direct_centrality(Family::Star, 3, VertexClass::Hub),
            Err(Error::FormulaDomain { .. })
        ));
    }

    #[test]
    fn path_interior_formulas_are_symmetric() {
        for m in 3..=40u32 {
            for j in 2..m {
                let mirrored = m + 1 - j;
                assert_eq!(
                    cartesian_centrality(Family::Path, m, VertexClass::Interior(j)).unwrap(),
                    cartesian_centrality(Family::Path, m, VertexClass::Interior(mirrored)).unwrap(),
                    "cartesian m = {m}, j = {j}"
                );
                assert_eq!(
                    direct_centrality(Family::Path, m, VertexClass::Interior(j)).unwrap(),
                    direct_centrality(Family::Path, m, VertexClass::Interior(mirrored)).unwrap(),
                    "direct m = {m}, j = {j}"
                );
            }
        }
    }

    #[test]
    fn fan_class_ordering() {
        for m in 3..=40u32 {
            let hub = cartesian_centrality(Family::Fan, m, VertexClass::Hub).unwrap();
            let interior = cartesian_centrality(Family::Fan, m, VertexClass::FanInterior).unwrap();
            let end = cartesian_centrality(Family::Fan, m, VertexClass::FanEnd).unwrap();
            assert!(hub >= interior, "m = {m}");
            assert!(interior >= end, "m = {m}");
            assert_eq!(hub == interior, m == 3, "m = {m}");
        }
    }
}
