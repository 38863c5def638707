//! Extremal and proof-case graph families, and the spectral thresholds for
//! k-factor-criticality.
//!
//! For a `(k+1)`-connected graph of order `n ≡ k (mod 2)`, `n >= k + 4`, the
//! threshold depends on `(n, k)`:
//!
//! * `n = k + 6`: `(k + 1 + √(k² + 18k + 33)) / 2`, attained by `K_{k+2} ∨ 4K₁`;
//! * `n = k + 8`, `k >= 1`: `(k + 2 + √(k² + 24k + 64)) / 2`, attained by
//!   `K_{k+3} ∨ 5K₁`;
//! * otherwise, including `(k, n) = (0, 8)`: `θ(n, k)`, the largest root of
//!   `φ(x) = x³ − (n−4)x² − (n+2k−1)x + 2(k+1)(n−k−4)`, attained by
//!   `K_{n−k−3} ∨ K_{k+1} ∨ 2K₁`.
//!
//! Any graph whose spectral radius exceeds its threshold is k-factor-critical,
//! and each attaining graph is not.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{disjoint_union, sequential_join, Graph};
use crate::poly::Polynomial;
use crate::spectral::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    GeneralCubic,
    #[serde(rename = "n_eq_k_plus_6")]
    NEqKPlus6,
    #[serde(rename = "n_eq_k_plus_8")]
    NEqKPlus8,
}

impl Regime {
    /// Pure function of `(n, k)`; `(k, n) = (0, 8)` falls to the cubic.
    pub fn of(n: usize, k: usize) -> Regime {
        if n == k + 6 {
            Regime::NEqKPlus6
        } else if n == k + 8 && k >= 1 {
            Regime::NEqKPlus8
        } else {
            Regime::GeneralCubic
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Regime::GeneralCubic => "general_cubic",
            Regime::NEqKPlus6 => "n_eq_k_plus_6",
            Regime::NEqKPlus8 => "n_eq_k_plus_8",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThresholdSpec {
    pub n: usize,
    pub k: usize,
    pub regime: Regime,
    pub value: f64,
    /// The polynomial whose largest root is `value`: `φ` for the cubic
    /// regime, the extremal graph's quotient polynomial otherwise.
    pub defining_polynomial: Polynomial,
}

fn int(x: usize) -> i64 {
    i64::try_from(x).expect("parameter fits in i64")
}

/// `φ(x) = x³ − (n−4)x² − (n+2k−1)x + 2(k+1)(n−k−4)`.
pub fn phi(n: usize, k: usize) -> Polynomial {
    let (n, k) = (int(n), int(k));
    Polynomial::from_integers(&[1, -(n - 4), -(n + 2 * k - 1), 2 * (k + 1) * (n - k - 4)])
}

/// `x² − (d−1)x − d(n−d)`, the quotient polynomial of `K_d ∨ (n−d)K₁`.
pub fn clique_join_independent_poly(d: usize, n: usize) -> Polynomial {
    let (d, n) = (int(d), int(n));
    Polynomial::from_integers(&[1, -(d - 1), -d * (n - d)])
}

/// `x³ − (n−d+k−3)x² − (n+d²−kd+k−2)x + d(d−k+1)(n−2d+k−2)`, the quotient
/// polynomial of `K_d ∨ (K_{n₁} ∪ (d−k+1)K₁)` with `n = 2d + n₁ − k + 1`.
pub fn clique_join_clique_and_singletons_poly(n: usize, d: usize, k: usize) -> Polynomial {
    let (n, d, k) = (int(n), int(d), int(k));
    Polynomial::from_integers(&[
        1,
        -(n - d + k - 3),
        -(n + d * d - k * d + k - 2),
        d * (d - k + 1) * (n - 2 * d + k - 2),
    ])
}

/// `ρ(K_d ∨ mK₁) = (d − 1 + √((d−1)² + 4dm)) / 2`.
pub fn clique_join_independent_radius(d: usize, m: usize) -> f64 {
    let (d, m) = (d as f64, m as f64);
    (d - 1.0 + ((d - 1.0).powi(2) + 4.0 * d * m).sqrt()) / 2.0
}

/// `θ(k + 4, k) = (k + √(k² + 12k + 12)) / 2`.
pub fn theta_k_plus_4(k: usize) -> f64 {
    let k = k as f64;
    (k + (k * k + 12.0 * k + 12.0).sqrt()) / 2.0
}

fn check_order(n: usize, k: usize) -> Result<()> {
    if n % 2 != k % 2 {
        return Err(Error::Parity { n, k });
    }
    if n < k + 4 {
        return Err(Error::OrderTooSmall { n, k, min: k + 4 });
    }
    Ok(())
}

/// The spectral threshold for `(n, k)`.
pub fn threshold(n: usize, k: usize) -> Result<ThresholdSpec> {
    check_order(n, k)?;
    let regime = Regime::of(n, k);
    let kf = k as f64;
    let (value, defining_polynomial) = match regime {
        Regime::NEqKPlus6 => (
            (kf + 1.0 + (kf * kf + 18.0 * kf + 33.0).sqrt()) / 2.0,
            Polynomial::from_integers(&[1, -(int(k) + 1), -4 * (int(k) + 2)]),
        ),
        Regime::NEqKPlus8 => (
            (kf + 2.0 + (kf * kf + 24.0 * kf + 64.0).sqrt()) / 2.0,
            Polynomial::from_integers(&[1, -(int(k) + 2), -5 * (int(k) + 3)]),
        ),
        Regime::GeneralCubic => {
            let p = phi(n, k);
            (p.largest_real_root(None)?, p)
        }
    };
    Ok(ThresholdSpec { n, k, regime, value, defining_polynomial })
}

/// A constructed graph with the block partition it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyGraph {
    pub name: String,
    pub graph: Graph,
    pub partition: Partition,
}

fn clique_name(m: usize) -> String {
    format!("K{m}")
}

fn independent_name(m: usize) -> String {
    format!("{m}K1")
}

/// `K_{n−k−3} ∨ K_{k+1} ∨ 2K₁`.
pub fn extremal_general(n: usize, k: usize) -> Result<FamilyGraph> {
    check_order(n, k)?;
    let a = sequential_join(&[Graph::complete(n - k - 3), Graph::complete(k + 1), Graph::empty(2)])?;
    Ok(FamilyGraph {
        name: format!("{} v {} v {}", clique_name(n - k - 3), clique_name(k + 1), independent_name(2)),
        partition: Partition::from_ranges(&a.blocks),
        graph: a.graph,
    })
}

fn clique_join_independent(d: usize, m: usize) -> FamilyGraph {
    let a = sequential_join(&[Graph::complete(d), Graph::empty(m)]).expect("two parts");
    FamilyGraph {
        name: format!("{} v {}", clique_name(d), independent_name(m)),
        partition: Partition::from_ranges(&a.blocks),
        graph: a.graph,
    }
}

/// `K_{k+2} ∨ 4K₁`, order `k + 6`.
pub fn extremal_k_plus_6(k: usize) -> FamilyGraph {
    clique_join_independent(k + 2, 4)
}

/// `K_{k+3} ∨ 5K₁`, order `k + 8`.
pub fn extremal_k_plus_8(k: usize) -> FamilyGraph {
    clique_join_independent(k + 3, 5)
}

/// The attaining graph for the regime of `(n, k)`.
pub fn extremal_for(n: usize, k: usize) -> Result<FamilyGraph> {
    check_order(n, k)?;
    Ok(match Regime::of(n, k) {
        Regime::GeneralCubic => extremal_general(n, k)?,
        Regime::NEqKPlus6 => extremal_k_plus_6(k),
        Regime::NEqKPlus8 => extremal_k_plus_8(k),
    })
}

/// `K_d ∨ (K_{n₁} ∪ (d−k+1)K₁)`: a clique `D` joined to `d − k + 2` odd
/// cliques, all but the first of them single vertices.
///
/// For `n₁ = 1` this is `K_d ∨ (d−k+2)K₁` and the partition has two blocks
/// `{D, rest}`; otherwise three blocks `{D, V(K_{n₁}), singletons}`.
pub fn proof_case_graph(d: usize, k: usize, n1: usize) -> Result<FamilyGraph> {
    if d < k + 1 {
        return Err(Error::InvalidParameter(format!("d = {d} must be at least k + 1 = {}", k + 1)));
    }
    if n1.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("n1 = {n1} must be odd")));
    }
    let singles = d - k + 1;
    if n1 == 1 {
        return Ok(clique_join_independent(d, singles + 1));
    }
    let rest = disjoint_union(&[Graph::complete(n1), Graph::empty(singles)]);
    let a = sequential_join(&[Graph::complete(d), rest.graph])?;
    let start = d;
    Ok(FamilyGraph {
        name: format!("{} v ({} u {})", clique_name(d), clique_name(n1), independent_name(singles)),
        partition: Partition::from_ranges(&[0..d, start..start + n1, start + n1..start + n1 + singles]),
        graph: a.graph,
    })
}

/// `K_d ∨ (K_{n₁} ∪ K_{n₂} ∪ … ∪ K_{n_β})` with the partition
/// `{D, V(G₁), …, V(G_β)}`.
pub fn star_of_cliques(d: usize, sizes: &[usize]) -> Result<FamilyGraph> {
    if d == 0 || sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::InvalidParameter("need d >= 1 and nonempty positive clique sizes".into()));
    }
    let cliques: Vec<Graph> = sizes.iter().map(|&s| Graph::complete(s)).collect();
    let rest = disjoint_union(&cliques);
    let a = sequential_join(&[Graph::complete(d), rest.graph])?;
    let ranges: Vec<_> =
        std::iter::once(0..d).chain(rest.blocks.iter().map(|r| r.start + d..r.end + d)).collect();
    let parts: Vec<String> = sizes.iter().map(|&s| clique_name(s)).collect();
    Ok(FamilyGraph {
        name: format!("{} v ({})", clique_name(d), parts.join(" u ")),
        partition: Partition::from_ranges(&ranges),
        graph: a.graph,
    })
}
