//! Dense symmetric eigensolver and adjacency/Laplacian spectra.
//!
//! All spectra come from a cyclic Jacobi diagonalisation. It is slower than a
//! tridiagonal QR for large orders, but every graph handled here has at most a
//! few hundred vertices, and Jacobi is deterministic, needs no shifts, and
//! computes small eigenvalues to high relative accuracy.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Relative tolerance used when callers do not pick one.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Upper bound on full Jacobi sweeps before giving up.
pub const MAX_SWEEPS: usize = 64;

/// Relative width used to merge nearly equal eigenvalues for display.
pub const GROUPING_TOL: f64 = 1e-6;

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(order: usize) -> Self {
        SymmetricMatrix {
            order,
            entries: vec![0.0; order * order],
        }
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = SymmetricMatrix::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.entries[i * values.len() + i] = v;
        }
        m
    }

    /// Builds from rows, requiring exact symmetry.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::DimensionMismatch("matrix is not square".into()));
        }
        for i in 0..order {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::DimensionMismatch(format!(
                        "entry ({i}, {j}) differs from ({j}, {i})"
                    )));
                }
            }
        }
        Ok(SymmetricMatrix {
            order,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    /// Builds from the closure `f(i, j)` evaluated on the lower triangle and mirrored.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SymmetricMatrix::zeros(order);
        for i in 0..order {
            for j in 0..=i {
                let v = f(i, j);
                m.entries[i * order + j] = v;
                m.entries[j * order + i] = v;
            }
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries
            .chunks(self.order.max(1))
            .take(self.order)
            .map(<[f64]>::to_vec)
            .collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Principal submatrix on the given (distinct, in-range) indices.
    pub fn principal_submatrix(&self, keep: &[usize]) -> SymmetricMatrix {
        let k = keep.len();
        let mut m = SymmetricMatrix::zeros(k);
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                m.entries[a * k + b] = self.get(i, j);
            }
        }
        m
    }

    /// `M · x`.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.order)
            .map(|i| {
                self.entries[i * self.order..(i + 1) * self.order]
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }
}

/// Real eigenvalues of a symmetric matrix in non-increasing order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
    scale: f64,
}

impl Spectrum {
    /// Wraps raw values, sorting them in non-increasing order.
    pub fn from_values(mut values: Vec<f64>, tol: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let scale = values.iter().map(|v| v * v).sum::<f64>().sqrt().max(1.0);
        Spectrum { values, tol, scale }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// `max(1, ‖M‖_F)` of the source matrix.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// The `i`-th largest value, 1-based.
    pub fn largest(&self, i: usize) -> Result<f64> {
        self.check_index(i)?;
        Ok(self.values[i - 1])
    }

    /// The `i`-th smallest value, 1-based.
    pub fn smallest(&self, i: usize) -> Result<f64> {
        self.check_index(i)?;
        Ok(self.values[self.values.len() - i])
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.values.len() {
            Err(Error::IndexOutOfRange {
                index: i,
                len: self.values.len(),
            })
        } else {
            Ok(())
        }
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Values strictly above `threshold`.
    pub fn count_above(&self, threshold: f64) -> usize {
        self.values.iter().filter(|&&v| v > threshold).count()
    }

    /// Runs of values within `GROUPING_TOL · scale` of their neighbour,
    /// reported as `(mean, multiplicity)`. Display only.
    pub fn grouped(&self) -> Vec<(f64, usize)> {
        let width = GROUPING_TOL * self.scale;
        let mut out: Vec<(f64, usize, f64)> = Vec::new();
        for &v in &self.values {
            match out.last_mut() {
                Some((sum, count, last)) if (*last - v).abs() <= width => {
                    *sum += v;
                    *count += 1;
                    *last = v;
                }
                _ => out.push((v, 1, v)),
            }
        }
        out.into_iter()
            .map(|(sum, count, _)| (sum / count as f64, count))
            .collect()
    }

    /// True when both spectra have equal length and agree entrywise within `eps`.
    pub fn approx_eq(&self, other: &[f64], eps: f64) -> bool {
        let mut other = other.to_vec();
        other.sort_by(|a, b| b.total_cmp(a));
        self.values.len() == other.len()
            && self
                .values
                .iter()
                .zip(&other)
                .all(|(a, b)| (a - b).abs() <= eps)
    }
}

/// All eigenvalues of `m` by cyclic Jacobi rotations.
///
/// Each returned value is within `tol · max(1, ‖M‖_F)` of an exact eigenvalue.
/// Sweeps continue until the off-diagonal mass reaches round-off level, so in
/// practice the error is far below `tol`; `tol` only decides whether a run that
/// exhausts [`MAX_SWEEPS`] is still acceptable.
pub fn eigenvalues_symmetric(m: &SymmetricMatrix, tol: f64) -> Result<Spectrum> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    let n = m.order;
    let scale = m.frobenius_norm().max(1.0);
    let mut a = m.entries.clone();
    let floor = 4.0 * f64::EPSILON * scale;

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        s.sqrt()
    };

    let mut converged = off_norm(&a) <= floor;
    let mut sweeps = 0;
    while !converged && sweeps < MAX_SWEEPS {
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // entries negligible against both diagonals are dropped outright
                if apq.abs() * 1e18 < app.abs().min(aqq.abs()) {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                // signum(0.0) is 1.0, so equal diagonals rotate by π/4
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
        converged = off_norm(&a) <= floor;
    }
    if !converged && off_norm(&a) > tol * scale {
        return Err(Error::NoConvergence { sweeps });
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum { values, tol, scale })
}

/// `A(G)`: entry `(i, j)` is `m(v_i, v_j)`.
pub fn adjacency_matrix(g: &Multigraph) -> SymmetricMatrix {
    SymmetricMatrix::from_fn(g.vertex_count(), |i, j| g.multiplicity_between(i, j) as f64)
}

/// `L(G) = D(G) − A(G)`.
pub fn laplacian_matrix(g: &Multigraph) -> SymmetricMatrix {
    let degrees = g.degrees();
    SymmetricMatrix::from_fn(g.vertex_count(), |i, j| {
        if i == j {
            degrees.as_slice()[i] as f64
        } else {
            -(g.multiplicity_between(i, j) as f64)
        }
    })
}

pub fn adjacency_spectrum(g: &Multigraph) -> Result<Spectrum> {
    eigenvalues_symmetric(&adjacency_matrix(g), DEFAULT_TOL)
}

pub fn laplacian_spectrum(g: &Multigraph) -> Result<Spectrum> {
    eigenvalues_symmetric(&laplacian_matrix(g), DEFAULT_TOL)
}

/// `λ_i(G)`, the `i`-th largest adjacency eigenvalue.
pub fn lambda_i(g: &Multigraph, i: usize) -> Result<f64> {
    adjacency_spectrum(g)?.largest(i)
}

/// `μ_i(G)`, the `i`-th smallest Laplacian eigenvalue.
pub fn mu_i(g: &Multigraph, i: usize) -> Result<f64> {
    laplacian_spectrum(g)?.smallest(i)
}

/// Number of adjacency eigenvalues strictly greater than `tol`.
pub fn count_positive_eigenvalues(g: &Multigraph, tol: f64) -> Result<usize> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    Ok(adjacency_spectrum(g)?.count_above(tol))
}
