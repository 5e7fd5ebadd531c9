//! Square matrices over [`SuperScalar`] with an even|odd block split.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::grassmann::{GrassmannError, SuperScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not in OSp(1|2)")]
    NotInGroup,
    #[error("not invertible: {0}")]
    NotInvertible(#[from] GrassmannError),
}

type Grid = Vec<Vec<SuperScalar>>;

/// Square supermatrix. The first `even_dim` rows and columns are
/// even-indexed, the remaining `odd_dim` are odd-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperMatrix {
    even_dim: usize,
    odd_dim: usize,
    entries: Grid,
}

impl SuperMatrix {
    pub fn new(even_dim: usize, odd_dim: usize, entries: Grid) -> Result<Self, MatrixError> {
        let n = even_dim + odd_dim;
        if n == 0 {
            return Err(MatrixError::DimensionMismatch("empty matrix".into()));
        }
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(MatrixError::DimensionMismatch(format!(
                "block ({even_dim},{odd_dim}) needs a {n}x{n} grid"
            )));
        }
        Ok(SuperMatrix {
            even_dim,
            odd_dim,
            entries,
        })
    }

    /// Builds from a closure over (row, column).
    pub fn from_fn(
        even_dim: usize,
        odd_dim: usize,
        f: impl Fn(usize, usize) -> SuperScalar,
    ) -> Self {
        let n = even_dim + odd_dim;
        let entries = (0..n).map(|r| (0..n).map(|c| f(r, c)).collect()).collect();
        SuperMatrix {
            even_dim,
            odd_dim,
            entries,
        }
    }

    #[must_use]
    pub fn identity(even_dim: usize, odd_dim: usize) -> Self {
        Self::from_fn(even_dim, odd_dim, |r, c| {
            if r == c {
                SuperScalar::one()
            } else {
                SuperScalar::zero()
            }
        })
    }

    #[must_use]
    pub fn diagonal(even_dim: usize, odd_dim: usize, diag: &[SuperScalar]) -> Self {
        Self::from_fn(even_dim, odd_dim, |r, c| {
            if r == c {
                diag[r].clone()
            } else {
                SuperScalar::zero()
            }
        })
    }

    /// The matrix `diag(−1, −1, 1)` with block (2,1).
    #[must_use]
    pub fn hill_target() -> Self {
        Self::diagonal(
            2,
            1,
            &[
                SuperScalar::from_integer(-1),
                SuperScalar::from_integer(-1),
                SuperScalar::one(),
            ],
        )
    }

    pub fn dim(&self) -> usize {
        self.even_dim + self.odd_dim
    }

    pub fn block(&self) -> (usize, usize) {
        (self.even_dim, self.odd_dim)
    }

    pub fn get(&self, row: usize, col: usize) -> &SuperScalar {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<SuperScalar>] {
        &self.entries
    }

    /// True if the entry at (row, col) is expected to be even.
    fn even_position(&self, row: usize, col: usize) -> bool {
        (row < self.even_dim) == (col < self.even_dim)
    }

    /// Even-even and odd-odd blocks hold even entries; the off-diagonal
    /// blocks hold odd entries.
    pub fn is_homogeneous_even(&self) -> bool {
        (0..self.dim()).all(|r| {
            (0..self.dim()).all(|c| {
                let e = &self.entries[r][c];
                if self.even_position(r, c) {
                    e.is_even()
                } else {
                    e.is_odd()
                }
            })
        })
    }

    pub fn mat_mul(&self, other: &SuperMatrix) -> Result<SuperMatrix, MatrixError> {
        if self.block() != other.block() {
            return Err(MatrixError::DimensionMismatch(format!(
                "blocks {:?} and {:?}",
                self.block(),
                other.block()
            )));
        }
        Ok(SuperMatrix {
            even_dim: self.even_dim,
            odd_dim: self.odd_dim,
            entries: grid_mul(&self.entries, &other.entries),
        })
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[SuperScalar]) -> Result<Vec<SuperScalar>, MatrixError> {
        if v.len() != self.dim() {
            return Err(MatrixError::DimensionMismatch(format!(
                "vector of length {} for a {}x{} matrix",
                v.len(),
                self.dim(),
                self.dim()
            )));
        }
        Ok(self
            .entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(m, x)| m * x).sum())
            .collect())
    }

    /// Membership in OSp(1|2) for a matrix `(a b γ; c d δ; α β e)`.
    pub fn is_osp12(&self) -> bool {
        if self.block() != (2, 1) || !self.is_homogeneous_even() {
            return false;
        }
        let m = &self.entries;
        let (a, b, gamma) = (&m[0][0], &m[0][1], &m[0][2]);
        let (c, d, delta) = (&m[1][0], &m[1][1], &m[1][2]);
        let (alpha, beta, e) = (&m[2][0], &m[2][1], &m[2][2]);
        let one = SuperScalar::one();
        let ab = alpha * beta;
        a * d - b * c == &one - &ab
            && *e == &one + &ab
            && -(a * delta) + c * gamma == *alpha
            && -(b * delta) + d * gamma == *beta
    }

    /// Inverse of an OSp(1|2) element.
    pub fn osp_inverse(&self) -> Result<SuperMatrix, MatrixError> {
        if !self.is_osp12() {
            return Err(MatrixError::NotInGroup);
        }
        let inv = self.inverse()?;
        debug_assert!(inv.is_osp12());
        Ok(inv)
    }

    /// Block inverse through the even block and its Schur complement.
    pub fn inverse(&self) -> Result<SuperMatrix, MatrixError> {
        let (p, q) = self.block();
        let (a, b, c, d) = self.split();
        if q == 0 {
            return SuperMatrix::new(p, 0, even_inverse(&a)?);
        }
        if p == 0 {
            return SuperMatrix::new(0, q, even_inverse(&d)?);
        }
        let a_inv = even_inverse(&a)?;
        let ainv_b = grid_mul(&a_inv, &b);
        let c_ainv = grid_mul(&c, &a_inv);
        let schur = grid_sub(&d, &grid_mul(&c, &ainv_b));
        let s_inv = even_inverse(&schur)?;
        let ainv_b_sinv = grid_mul(&ainv_b, &s_inv);
        let top_left = grid_add(&a_inv, &grid_mul(&ainv_b_sinv, &c_ainv));
        let top_right = grid_neg(&ainv_b_sinv);
        let bottom_left = grid_neg(&grid_mul(&s_inv, &c_ainv));
        Ok(SuperMatrix::from_blocks(
            &top_left,
            &top_right,
            &bottom_left,
            &s_inv,
        ))
    }

    /// The blocks (A, B, C, D): even-even, even-odd, odd-even, odd-odd.
    #[must_use]
    pub fn split(&self) -> (Grid, Grid, Grid, Grid) {
        let p = self.even_dim;
        let n = self.dim();
        let sub = |r0: usize, r1: usize, c0: usize, c1: usize| -> Grid {
            (r0..r1)
                .map(|r| (c0..c1).map(|c| self.entries[r][c].clone()).collect())
                .collect()
        };
        (sub(0, p, 0, p), sub(0, p, p, n), sub(p, n, 0, p), sub(p, n, p, n))
    }

    /// Assembles `[[A, B], [C, D]]`; A must be square.
    #[must_use]
    pub fn from_blocks(a: &Grid, b: &Grid, c: &Grid, d: &Grid) -> SuperMatrix {
        let p = a.len();
        let q = d.len();
        let mut entries = Vec::with_capacity(p + q);
        for r in 0..p {
            let mut row = a[r].clone();
            row.extend(b[r].iter().cloned());
            entries.push(row);
        }
        for r in 0..q {
            let mut row = c[r].clone();
            row.extend(d[r].iter().cloned());
            entries.push(row);
        }
        SuperMatrix {
            even_dim: p,
            odd_dim: q,
            entries,
        }
    }

    /// `det(A − B·D⁻¹·C) · det(D)⁻¹`.
    pub fn berezinian(&self) -> Result<SuperScalar, MatrixError> {
        let (a, b, c, d) = self.split();
        if self.odd_dim == 0 {
            return Ok(determinant(&a));
        }
        let det_d = determinant(&d);
        let det_d_inv = det_d.invert()?;
        let d_inv = grid_scale(&adjugate(&d), &det_d_inv);
        if self.even_dim == 0 {
            return Ok(det_d_inv);
        }
        let reduced = grid_sub(&a, &grid_mul(&grid_mul(&b, &d_inv), &c));
        Ok(determinant(&reduced) * det_d_inv)
    }

    /// Recursive expansion along the first column, entry before minor.
    pub fn det_first_column(&self) -> SuperScalar {
        determinant(&self.entries)
    }
}

/// Expansion of a square grid along its first column, recursively, with
/// each entry multiplied on the left of its minor. For grids whose entries
/// commute this is the ordinary determinant.
#[must_use]
pub fn determinant(grid: &[Vec<SuperScalar>]) -> SuperScalar {
    let n = grid.len();
    if n == 0 {
        return SuperScalar::one();
    }
    assert!(n < 64, "determinant size limited to 63");
    let mut memo: HashMap<u64, SuperScalar> = HashMap::new();
    expand(grid, (1u64 << n) - 1, &mut memo)
}

fn expand(grid: &[Vec<SuperScalar>], rows: u64, memo: &mut HashMap<u64, SuperScalar>) -> SuperScalar {
    if rows == 0 {
        return SuperScalar::one();
    }
    if let Some(v) = memo.get(&rows) {
        return v.clone();
    }
    let n = grid.len();
    let col = n - rows.count_ones() as usize;
    let mut acc = SuperScalar::zero();
    let mut position = 0usize;
    for r in 0..n {
        if rows & (1 << r) == 0 {
            continue;
        }
        let entry = &grid[r][col];
        if !entry.is_zero() {
            let minor = expand(grid, rows & !(1 << r), memo);
            let term = entry * &minor;
            if position.is_multiple_of(2) {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        position += 1;
    }
    memo.insert(rows, acc.clone());
    acc
}

fn minor(grid: &[Vec<SuperScalar>], skip_row: usize, skip_col: usize) -> Grid {
    grid.iter()
        .enumerate()
        .filter(|(r, _)| *r != skip_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(c, _)| *c != skip_col)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// Adjugate of a grid with commuting entries.
fn adjugate(grid: &[Vec<SuperScalar>]) -> Grid {
    let n = grid.len();
    if n == 1 {
        return vec![vec![SuperScalar::one()]];
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let m = determinant(&minor(grid, j, i));
                    if (i + j) % 2 == 0 {
                        m
                    } else {
                        -m
                    }
                })
                .collect()
        })
        .collect()
}

fn even_inverse(grid: &[Vec<SuperScalar>]) -> Result<Grid, MatrixError> {
    let det_inv = determinant(grid).invert()?;
    Ok(grid_scale(&adjugate(grid), &det_inv))
}

fn grid_mul(a: &[Vec<SuperScalar>], b: &[Vec<SuperScalar>]) -> Grid {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| (0..inner).map(|k| &row[k] * &b[k][c]).sum())
                .collect()
        })
        .collect()
}

fn grid_zip(
    a: &[Vec<SuperScalar>],
    b: &[Vec<SuperScalar>],
    f: impl Fn(&SuperScalar, &SuperScalar) -> SuperScalar,
) -> Grid {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| f(x, y)).collect())
        .collect()
}

fn grid_add(a: &[Vec<SuperScalar>], b: &[Vec<SuperScalar>]) -> Grid {
    grid_zip(a, b, |x, y| x + y)
}

fn grid_sub(a: &[Vec<SuperScalar>], b: &[Vec<SuperScalar>]) -> Grid {
    grid_zip(a, b, |x, y| x - y)
}

fn grid_neg(a: &[Vec<SuperScalar>]) -> Grid {
    a.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
}

fn grid_scale(a: &[Vec<SuperScalar>], s: &SuperScalar) -> Grid {
    a.iter().map(|r| r.iter().map(|x| s * x).collect()).collect()
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[ {} ]", cells.join(" ; "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    block: [usize; 2],
    entries: Grid,
}

impl Serialize for SuperMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixRepr {
            rows: self.dim(),
            cols: self.dim(),
            block: [self.even_dim, self.odd_dim],
            entries: self.entries.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SuperMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let r = MatrixRepr::deserialize(deserializer)?;
        if r.rows != r.cols || r.rows != r.block[0] + r.block[1] {
            return Err(D::Error::custom("rows, cols and block do not agree"));
        }
        SuperMatrix::new(r.block[0], r.block[1], r.entries).map_err(D::Error::custom)
    }
}
