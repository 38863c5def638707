//! Spectral radius conditions for k-factor-critical graphs.
//!
//! A graph is *k-factor-critical* when deleting any `k` vertices leaves a
//! graph with a perfect matching. This crate computes adjacency spectral
//! radii, decides k-factor-criticality two independent ways, builds the
//! graphs that attain the spectral thresholds, and sweeps all small graphs
//! to confirm that no `(k+1)`-connected graph above its threshold fails to
//! be k-factor-critical.
//!
//! ```
//! use kfcrit_core::{families, spectral};
//!
//! let t = families::threshold(6, 0).unwrap();
//! let g = families::extremal_k_plus_6(0);
//! let rho = spectral::spectral_radius(&g.graph, 1e-12).unwrap();
//! assert!((rho - t.value).abs() < 1e-9);
//! ```

pub mod criticality;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod matching;
pub mod poly;
pub mod report;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
