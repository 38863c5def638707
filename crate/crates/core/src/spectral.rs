//! Adjacency spectral radius, equitable partitions and quotient matrices.

use std::ops::Range;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::Polynomial;

/// Tolerance used for computed eigenvalues.
pub const COMPUTE_TOLERANCE: f64 = 1e-12;
/// Tolerance used when comparing computed values against each other.
pub const COMPARE_TOLERANCE: f64 = 1e-9;

const MAX_POWER_ITERATIONS: usize = 2_000_000;

/// Ordered list of disjoint nonempty vertex blocks covering `V(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<VertexSet>,
}

impl Partition {
    pub fn new(blocks: Vec<VertexSet>) -> Self {
        Partition { blocks }
    }

    pub fn from_ranges(ranges: &[Range<usize>]) -> Self {
        Partition::new(ranges.iter().cloned().map(VertexSet::range).collect())
    }

    pub fn from_lists(lists: &[&[usize]]) -> Self {
        Partition::new(lists.iter().map(|l| l.iter().copied().collect()).collect())
    }

    /// Every vertex its own block.
    pub fn discrete(n: usize) -> Self {
        Partition::new((0..n).map(VertexSet::singleton).collect())
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Checks that the blocks are nonempty, disjoint and cover `V(g)`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = VertexSet::EMPTY;
        for (i, &b) in self.blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            if let Some(v) = b.difference(g.vertices()).first() {
                return Err(Error::InvalidPartition(format!("block {i} holds vertex {v} outside the graph")));
            }
            if let Some(v) = b.intersection(seen).first() {
                return Err(Error::InvalidPartition(format!("vertex {v} appears in two blocks")));
            }
            seen = seen.union(b);
        }
        if let Some(v) = g.vertices().difference(seen).first() {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(())
    }
}

/// Square matrix of average row sums between partition blocks, kept exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    entries: Vec<Vec<BigRational>>,
}

impl QuotientMatrix {
    pub fn new(entries: Vec<Vec<BigRational>>) -> Result<Self> {
        let s = entries.len();
        if entries.iter().any(|row| row.len() != s) {
            return Err(Error::InvalidParameter("quotient matrix must be square".into()));
        }
        Ok(QuotientMatrix { entries })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        QuotientMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect())
            .collect()
    }

    /// Entries as integers, if all are integral.
    pub fn integer_entries(&self) -> Option<Vec<Vec<i64>>> {
        self.entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
                    .collect()
            })
            .collect()
    }
}

/// Largest adjacency eigenvalue of `g`, to within `tol`.
///
/// Power iteration on `A + I` per connected component from the all-ones
/// vector; the shift makes the iteration matrix primitive even for bipartite
/// components. `ρ(G)` is the maximum over components.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<f64> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut rho: f64 = 0.0;
    for comp in g.components().blocks {
        if comp.len() > 1 {
            rho = rho.max(component_radius(g, comp, tol));
        }
    }
    Ok(rho)
}

fn component_radius(g: &Graph, comp: VertexSet, tol: f64) -> f64 {
    let verts = comp.to_vec();
    let index = |v: usize| verts.binary_search(&v).expect("neighbour inside component");
    let adj: Vec<Vec<usize>> = verts
        .iter()
        .map(|&v| g.neighbors(v).iter().map(index).collect())
        .collect();
    let m = verts.len();

    let mut x = vec![1.0 / (m as f64).sqrt(); m];
    let mut y = vec![0.0; m];
    let mut lambda = f64::NAN;
    for _ in 0..MAX_POWER_ITERATIONS {
        for (i, nbrs) in adj.iter().enumerate() {
            y[i] = x[i] + nbrs.iter().map(|&j| x[j]).sum::<f64>();
        }
        // x is unit length, so x·y is the Rayleigh quotient of A + I
        let next: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - next * a).powi(2))
            .sum::<f64>()
            .sqrt();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        let settled = (next - lambda).abs() <= tol * next.max(1.0);
        lambda = next;
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
        if settled && residual <= 1e-9 * lambda {
            break;
        }
    }
    lambda - 1.0
}

/// Number of neighbours of `v` inside `block`.
fn neighbours_in(g: &Graph, v: usize, block: VertexSet) -> usize {
    g.neighbors(v).intersection(block).len()
}

/// True iff every vertex of block `i` has the same number of neighbours in
/// block `j`, for every pair of blocks.
pub fn is_equitable(g: &Graph, p: &Partition) -> Result<bool> {
    p.validate(g)?;
    Ok(p.blocks().iter().all(|&bi| {
        p.blocks().iter().all(|&bj| {
            let mut counts = bi.iter().map(|v| neighbours_in(g, v, bj));
            let first = counts.next();
            counts.all(|c| Some(c) == first)
        })
    }))
}

/// Quotient matrix: entry `(i, j)` is the average number of neighbours in
/// block `j` over the vertices of block `i`.
pub fn quotient_matrix(g: &Graph, p: &Partition) -> Result<QuotientMatrix> {
    p.validate(g)?;
    let entries = p
        .blocks()
        .iter()
        .map(|&bi| {
            p.blocks()
                .iter()
                .map(|&bj| {
                    let edges: usize = bi.iter().map(|v| neighbours_in(g, v, bj)).sum();
                    BigRational::new(BigInt::from(edges), BigInt::from(bi.len()))
                })
                .collect()
        })
        .collect();
    QuotientMatrix::new(entries)
}

/// Monic characteristic polynomial `det(xI - M)`, computed exactly by the
/// Faddeev–LeVerrier recursion.
pub fn char_poly(m: &QuotientMatrix) -> Polynomial {
    char_poly_exact(m.entries())
}

/// Characteristic polynomial of the full adjacency matrix of `g`.
pub fn adjacency_char_poly(g: &Graph) -> Polynomial {
    let one = BigRational::from_integer(BigInt::from(1));
    let zero = BigRational::zero();
    let a: Vec<Vec<BigRational>> = (0..g.order())
        .map(|u| {
            (0..g.order())
                .map(|v| if g.has_edge(u, v) { one.clone() } else { zero.clone() })
                .collect()
        })
        .collect();
    char_poly_exact(&a)
}

fn char_poly_exact(a: &[Vec<BigRational>]) -> Polynomial {
    let n = a.len();
    // coefficients c_n = 1, c_{n-1}, ..., c_0 stored leading first
    let mut coeffs = vec![BigRational::from_integer(BigInt::from(1))];
    let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
    for step in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = matmul(a, &m);
        let c_prev = coeffs.last().unwrap().clone();
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c_prev;
        }
        // c_{n-k} = -tr(A M_k) / k
        let am = matmul(a, &next);
        let trace = (0..n).fold(BigRational::zero(), |acc, i| acc + &am[i][i]);
        coeffs.push(-trace / BigRational::from_integer(BigInt::from(step)));
        m = next;
    }
    Polynomial::new(coeffs)
}

fn matmul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .filter(|&k| !a[i][k].is_zero() && !b[k][j].is_zero())
                        .fold(BigRational::zero(), |acc, k| acc + &a[i][k] * &b[k][j])
                })
                .collect()
        })
        .collect()
}

/// Largest eigenvalue of the quotient matrix of an equitable partition,
/// which equals `ρ(g)` for nonnegative matrices.
pub fn quotient_spectral_radius(g: &Graph, p: &Partition) -> Result<f64> {
    if !is_equitable(g, p)? {
        return Err(Error::NotEquitable);
    }
    let poly = char_poly(&quotient_matrix(g, p)?);
    let bound = g.order() as f64;
    poly.largest_real_root(Some((-bound, bound)))
}
