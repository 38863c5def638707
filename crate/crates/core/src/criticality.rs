//! k-factor-criticality, decided two independent ways.
//!
//! `is_k_factor_critical_by_definition` removes every k-subset and asks for a
//! perfect matching; `is_k_factor_critical_by_favaron` checks the odd
//! component bound `o(G - D) <= |D| - k` over all `D` with `|D| >= k`. Both
//! return the first failing set in (size, lexicographic) order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matching::has_perfect_matching;

/// Largest order the subset-enumerating deciders accept.
pub const CRITICALITY_GUARD: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    /// `|D| >= k` and `o(G - D) > |D| - k`.
    ViolatingSet,
    /// `|Q| = k` and `G - Q` has no perfect matching.
    UnmatchedRemoval,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub witness: VertexSet,
    /// `o(G - D)`; only set for violating sets.
    pub odd_components: Option<usize>,
}

impl Certificate {
    /// Re-checks the certificate from scratch against `g` and `k`.
    pub fn is_valid_for(&self, g: &Graph, k: usize) -> bool {
        if !self.witness.difference(g.vertices()).is_empty() {
            return false;
        }
        let d = self.witness.len();
        match self.kind {
            CertificateKind::ViolatingSet => {
                let (rest, _) = g.delete_vertices(self.witness).expect("witness within graph");
                let odd = rest.components().odd_count;
                d >= k && odd + k > d && self.odd_components == Some(odd)
            }
            CertificateKind::UnmatchedRemoval => {
                let (rest, _) = g.delete_vertices(self.witness).expect("witness within graph");
                d == k && !has_perfect_matching(&rest)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityVerdict {
    pub is_critical: bool,
    pub k: usize,
    pub certificate: Option<Certificate>,
}

impl CriticalityVerdict {
    fn critical(k: usize) -> Self {
        CriticalityVerdict { is_critical: true, k, certificate: None }
    }

    fn refuted(k: usize, certificate: Certificate) -> Self {
        CriticalityVerdict { is_critical: false, k, certificate: Some(certificate) }
    }
}

/// k-subsets of `{0..n}` in lexicographic order of their sorted members.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let mut current: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let idx = current.as_mut()?;
        let out: VertexSet = idx.iter().copied().collect();
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

fn check_preconditions(g: &Graph, k: usize) -> Result<()> {
    let n = g.order();
    if n > CRITICALITY_GUARD {
        return Err(Error::GuardExceeded { what: "criticality check", n, guard: CRITICALITY_GUARD });
    }
    if n % 2 != k % 2 {
        return Err(Error::Parity { n, k });
    }
    if n < k {
        return Err(Error::OrderTooSmall { n, k, min: k });
    }
    Ok(())
}

/// Every k-subset removal leaves a perfectly matchable graph.
pub fn is_k_factor_critical_by_definition(g: &Graph, k: usize) -> Result<CriticalityVerdict> {
    check_preconditions(g, k)?;
    for q in subsets_of_size(g.order(), k) {
        let (rest, _) = g.delete_vertices(q)?;
        if !has_perfect_matching(&rest) {
            return Ok(CriticalityVerdict::refuted(
                k,
                Certificate { kind: CertificateKind::UnmatchedRemoval, witness: q, odd_components: None },
            ));
        }
    }
    Ok(CriticalityVerdict::critical(k))
}

/// `o(G - D) <= |D| - k` for every `D` with `|D| >= k`.
///
/// Sizes with `|D| - k >= n - |D|` are skipped: `G - D` has at most
/// `n - |D|` components.
pub fn is_k_factor_critical_by_favaron(g: &Graph, k: usize) -> Result<CriticalityVerdict> {
    check_preconditions(g, k)?;
    let n = g.order();
    for size in (k..=n).take_while(|&s| s - k < n - s) {
        for d in subsets_of_size(n, size) {
            let odd = g.odd_components_without(d);
            if odd > size - k {
                return Ok(CriticalityVerdict::refuted(
                    k,
                    Certificate { kind: CertificateKind::ViolatingSet, witness: d, odd_components: Some(odd) },
                ));
            }
        }
    }
    Ok(CriticalityVerdict::critical(k))
}

/// Which of the spectral theorem's hypotheses hold for `(g, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub parity_ok: bool,
    pub connectivity_ok: bool,
    pub order_ok: bool,
    pub connectivity: usize,
}

impl HypothesisReport {
    pub fn all(&self) -> bool {
        self.parity_ok && self.connectivity_ok && self.order_ok
    }
}

pub fn check_theorem_hypotheses(g: &Graph, k: usize) -> HypothesisReport {
    let n = g.order();
    let connectivity = g.vertex_connectivity();
    HypothesisReport {
        parity_ok: n % 2 == k % 2,
        connectivity_ok: connectivity > k,
        order_ok: n >= k + 4,
        connectivity,
    }
}
