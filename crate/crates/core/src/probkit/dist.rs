//! Probability mass functions, joint distributions and stochastic kernels.

use super::{ProbError, MASS_TOL};

fn check_mass(probs: &[f64], what: &str) -> Result<(), ProbError> {
    for &p in probs {
        if !(p >= 0.0) {
            return Err(ProbError::InvalidDistribution(format!(
                "{what}: negative or NaN entry {p}"
            )));
        }
    }
    let total: f64 = probs.iter().sum();
    if (total - 1.0).abs() > MASS_TOL {
        return Err(ProbError::InvalidDistribution(format!(
            "{what}: mass {total} differs from 1 by more than {MASS_TOL:e}"
        )));
    }
    Ok(())
}

/// Probability mass function over a finite alphabet `0..len-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Pmf {
    probs: Vec<f64>,
}

impl Pmf {
    pub fn new(probs: Vec<f64>) -> Result<Self, ProbError> {
        if probs.is_empty() {
            return Err(ProbError::InvalidDistribution("empty pmf".into()));
        }
        check_mass(&probs, "pmf")?;
        Ok(Self { probs })
    }

    pub fn uniform(len: usize) -> Self {
        Self {
            probs: vec![1.0 / len as f64; len],
        }
    }

    /// Point mass on `symbol`.
    pub fn delta(len: usize, symbol: usize) -> Self {
        let mut probs = vec![0.0; len];
        probs[symbol] = 1.0;
        Self { probs }
    }

    pub(crate) fn from_vec_unchecked(probs: Vec<f64>) -> Self {
        Self { probs }
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn get(&self, i: usize) -> f64 {
        self.probs[i]
    }
}

/// Joint pmf over a product alphabet `[rows] x [cols]`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Joint2 {
    probs: Vec<f64>,
    rows: usize,
    cols: usize,
}

impl Joint2 {
    pub fn new(probs: Vec<f64>, rows: usize, cols: usize) -> Result<Self, ProbError> {
        if probs.len() != rows * cols || rows == 0 || cols == 0 {
            return Err(ProbError::DimensionMismatch(format!(
                "joint2 expects {rows}x{cols} = {} entries, got {}",
                rows * cols,
                probs.len()
            )));
        }
        check_mass(&probs, "joint2")?;
        Ok(Self { probs, rows, cols })
    }

    pub(crate) fn from_vec_unchecked(probs: Vec<f64>, rows: usize, cols: usize) -> Self {
        Self { probs, rows, cols }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.probs[r * self.cols + c]
    }

    /// Marginal over the row index (sums out columns).
    pub fn marginal_rows(&self) -> Pmf {
        let mut m = vec![0.0; self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[r] += self.get(r, c);
            }
        }
        Pmf::from_vec_unchecked(m)
    }

    /// Marginal over the column index (sums out rows).
    pub fn marginal_cols(&self) -> Pmf {
        let mut m = vec![0.0; self.cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[c] += self.get(r, c);
            }
        }
        Pmf::from_vec_unchecked(m)
    }

    /// Product coupling `rows ⊗ cols` of two pmfs.
    pub fn product(rows: &Pmf, cols: &Pmf) -> Self {
        let mut probs = Vec::with_capacity(rows.len() * cols.len());
        for r in 0..rows.len() {
            for c in 0..cols.len() {
                probs.push(rows.get(r) * cols.get(c));
            }
        }
        Self {
            probs,
            rows: rows.len(),
            cols: cols.len(),
        }
    }
}

/// Joint pmf over `[U] x [X] x [Y]`, stored with `y` fastest, then `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct Joint3 {
    probs: Vec<f64>,
    nu: usize,
    nx: usize,
    ny: usize,
}

impl Joint3 {
    pub fn new(probs: Vec<f64>, nu: usize, nx: usize, ny: usize) -> Result<Self, ProbError> {
        if probs.len() != nu * nx * ny || nu == 0 || nx == 0 || ny == 0 {
            return Err(ProbError::DimensionMismatch(format!(
                "joint3 expects {nu}x{nx}x{ny} = {} entries, got {}",
                nu * nx * ny,
                probs.len()
            )));
        }
        check_mass(&probs, "joint3")?;
        Ok(Self { probs, nu, nx, ny })
    }

    pub(crate) fn from_vec_unchecked(probs: Vec<f64>, nu: usize, nx: usize, ny: usize) -> Self {
        Self { probs, nu, nx, ny }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.nu, self.nx, self.ny)
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    #[inline]
    pub fn idx(&self, u: usize, x: usize, y: usize) -> usize {
        (u * self.nx + x) * self.ny + y
    }

    #[inline]
    pub fn get(&self, u: usize, x: usize, y: usize) -> f64 {
        self.probs[self.idx(u, x, y)]
    }

    pub fn marginal_u(&self) -> Pmf {
        let mut m = vec![0.0; self.nu];
        for u in 0..self.nu {
            for x in 0..self.nx {
                for y in 0..self.ny {
                    m[u] += self.get(u, x, y);
                }
            }
        }
        Pmf::from_vec_unchecked(m)
    }

    pub fn marginal_x(&self) -> Pmf {
        let mut m = vec![0.0; self.nx];
        for u in 0..self.nu {
            for x in 0..self.nx {
                for y in 0..self.ny {
                    m[x] += self.get(u, x, y);
                }
            }
        }
        Pmf::from_vec_unchecked(m)
    }

    pub fn marginal_y(&self) -> Pmf {
        let mut m = vec![0.0; self.ny];
        for u in 0..self.nu {
            for x in 0..self.nx {
                for y in 0..self.ny {
                    m[y] += self.get(u, x, y);
                }
            }
        }
        Pmf::from_vec_unchecked(m)
    }

    pub fn marginal_ux(&self) -> Joint2 {
        let mut m = vec![0.0; self.nu * self.nx];
        for u in 0..self.nu {
            for x in 0..self.nx {
                for y in 0..self.ny {
                    m[u * self.nx + x] += self.get(u, x, y);
                }
            }
        }
        Joint2::from_vec_unchecked(m, self.nu, self.nx)
    }

    pub fn marginal_uy(&self) -> Joint2 {
        let mut m = vec![0.0; self.nu * self.ny];
        for u in 0..self.nu {
            for x in 0..self.nx {
                for y in 0..self.ny {
                    m[u * self.ny + y] += self.get(u, x, y);
                }
            }
        }
        Joint2::from_vec_unchecked(m, self.nu, self.ny)
    }

    pub fn marginal_xy(&self) -> Joint2 {
        let mut m = vec![0.0; self.nx * self.ny];
        for u in 0..self.nu {
            for x in 0..self.nx {
                for y in 0..self.ny {
                    m[x * self.ny + y] += self.get(u, x, y);
                }
            }
        }
        Joint2::from_vec_unchecked(m, self.nx, self.ny)
    }
}

/// Stochastic kernel: `rows[x][u]` is the probability of `u` given `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct Kernel {
    rows: Vec<f64>,
    nx: usize,
    nu: usize,
}

impl Kernel {
    pub fn new(rows: Vec<f64>, nx: usize, nu: usize) -> Result<Self, ProbError> {
        if rows.len() != nx * nu || nx == 0 || nu == 0 {
            return Err(ProbError::DimensionMismatch(format!(
                "kernel expects {nx}x{nu} = {} entries, got {}",
                nx * nu,
                rows.len()
            )));
        }
        for x in 0..nx {
            check_mass(&rows[x * nu..(x + 1) * nu], &format!("kernel row {x}"))?;
        }
        Ok(Self { rows, nx, nu })
    }

    /// Identity kernel (`U = X` with probability one).
    pub fn identity(n: usize) -> Self {
        let mut rows = vec![0.0; n * n];
        for x in 0..n {
            rows[x * n + x] = 1.0;
        }
        Self { rows, nx: n, nu: n }
    }

    /// Constant kernel onto a singleton auxiliary alphabet.
    pub fn constant(nx: usize) -> Self {
        Self {
            rows: vec![1.0; nx],
            nx,
            nu: 1,
        }
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn get(&self, x: usize, u: usize) -> f64 {
        self.rows[x * self.nu + u]
    }
}

/// Compose an auxiliary kernel with a pair distribution over X x Y:
/// `out[u][x][y] = kernel[x][u] * pair[x][y]`.
///
/// The X x Y marginal of the output equals `pair` exactly, and the output
/// satisfies the Markov chain U — X — Y.
pub fn compose_joint(kernel: &Kernel, pair: &Joint2) -> Result<Joint3, ProbError> {
    if kernel.nx() != pair.rows() {
        return Err(ProbError::DimensionMismatch(format!(
            "kernel X-dimension {} does not match pair X-dimension {}",
            kernel.nx(),
            pair.rows()
        )));
    }
    let (nu, nx, ny) = (kernel.nu(), pair.rows(), pair.cols());
    let mut probs = vec![0.0; nu * nx * ny];
    for u in 0..nu {
        for x in 0..nx {
            for y in 0..ny {
                probs[(u * nx + x) * ny + y] = kernel.get(x, u) * pair.get(x, y);
            }
        }
    }
    Ok(Joint3::from_vec_unchecked(probs, nu, nx, ny))
}
