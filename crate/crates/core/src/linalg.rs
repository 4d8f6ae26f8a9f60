//! Dense exact matrices, linear solving and canonical subspaces.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn diagonal(entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn field(&self) -> Result<Field> {
        Field::join_all(self.data.iter())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let t = a * b;
                        out.data[i * other.cols + j] += &t;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Block diagonal `[[self, 0], [0, other]]`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Matrix {
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.to_rows();
        let pivots = reduce_rows(&mut rows, self.cols, true);
        rows.truncate(pivots.len());
        let mut m = Matrix::zeros(pivots.len(), self.cols);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, x) in row.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        reduce_rows(&mut rows, self.cols, false).len()
    }

    /// Basis of `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        nullspace_from_rref(&r.to_rows(), &pivots, self.cols)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
                row
            })
            .collect();
        let pivots = reduce_rows(&mut rows, n, true);
        if pivots.len() < n {
            return None;
        }
        let data = rows.into_iter().flat_map(|r| r.into_iter().skip(n)).collect();
        Some(Matrix { rows: n, cols: n, data })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|r| Value::Array(self.row(r).iter().map(|s| Value::String(s.to_string())).collect()))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Matrix> {
        let rows = v.as_array().ok_or_else(|| Error::Parse("matrix must be an array".into()))?;
        let parsed = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?
                    .iter()
                    .map(|x| {
                        x.as_str()
                            .ok_or_else(|| Error::Parse("matrix entry must be a string".into()))?
                            .parse::<Scalar>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(parsed)
    }
}

/// Gaussian elimination restricted to the first `pivot_cols` columns. Pivot rows
/// end up normalized at the top; with `full` the pivot columns are also cleared
/// above each pivot. Returns the pivot columns.
fn reduce_rows(rows: &mut [Vec<Scalar>], pivot_cols: usize, full: bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        if !rows[r][c].is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let support: Vec<usize> = (c..rows[r].len()).filter(|&j| !rows[r][j].is_zero()).collect();
        let pivot_row = rows[r].clone();
        let start = if full { 0 } else { r + 1 };
        for i in start..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].clone();
            for &j in &support {
                let t = &factor * &pivot_row[j];
                rows[i][j] -= &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn nullspace_from_rref(rows: &[Vec<Scalar>], pivots: &[usize], cols: usize) -> Vec<Vec<Scalar>> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -&rows[i][f];
            }
            v
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Feasible { particular: Vec<Scalar>, nullspace: Vec<Vec<Scalar>> },
    Infeasible,
}

impl LinearSolution {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LinearSolution::Feasible { .. })
    }
}

/// Solves `A x = b` exactly.
pub fn solve_linear(a: &Matrix, b: &[Scalar]) -> Result<LinearSolution> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch(format!("{} rows vs rhs of length {}", a.rows, b.len())));
    }
    let field = a.field()?;
    Field::join_all(b.iter())?
        .join(field)
        .ok_or_else(|| Error::FieldMismatch(field.to_string(), "rhs".into()))?;
    let n = a.cols;
    let mut rows: Vec<Vec<Scalar>> = (0..a.rows)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    // forward pass first so infeasible systems skip back substitution
    let pivots = reduce_rows(&mut rows, n, false);
    let rank = pivots.len();
    if rows[rank..].iter().any(|row| !row[n].is_zero()) {
        return Ok(LinearSolution::Infeasible);
    }
    rows.truncate(rank);
    for k in (0..rank).rev() {
        let c = pivots[k];
        let support: Vec<usize> = (c..=n).filter(|&j| !rows[k][j].is_zero()).collect();
        let pivot_row = rows[k].clone();
        for i in 0..k {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].clone();
            for &j in &support {
                let t = &factor * &pivot_row[j];
                rows[i][j] -= &t;
            }
        }
    }
    let mut particular = vec![Scalar::zero(); n];
    for (k, &p) in pivots.iter().enumerate() {
        particular[p] = rows[k][n].clone();
    }
    let nullspace = nullspace_from_rref(&rows, &pivots, n);
    Ok(LinearSolution::Feasible { particular, nullspace })
}

/// A linear subspace of k^n in canonical reduced row-echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::span(ambient, (0..ambient).map(|i| unit_vector(ambient, i))).unwrap()
    }

    pub fn span<I>(ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch(format!("vector of length {} in k^{}", v.len(), ambient)));
            }
            rows.push(v);
        }
        Field::join_all(rows.iter().flatten())?;
        let pivots = reduce_rows(&mut rows, ambient, true);
        rows.truncate(pivots.len());
        Ok(Subspace { ambient, basis: rows, pivots })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the stored basis, or None if `v` is not in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient {
            return None;
        }
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, row) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, b) in residual.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &(c * b);
                }
            }
        }
        residual.iter().all(Scalar::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!("ambient {} vs {}", self.ambient, other.ambient)));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Subspace::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let (k, l) = (self.dim(), other.dim());
        if k == 0 || l == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        // columns: basis of self, then basis of other; kernel pairs give the intersection
        let mut m = Matrix::zeros(self.ambient, k + l);
        for (j, v) in self.basis.iter().chain(&other.basis).enumerate() {
            for (i, x) in v.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        let vectors = m.nullspace().into_iter().map(|coeffs| {
            let mut v = vec![Scalar::zero(); self.ambient];
            for (c, b) in coeffs[..k].iter().zip(&self.basis) {
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(b) {
                    *x += &(c * y);
                }
            }
            v
        });
        Subspace::span(self.ambient, vectors)
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "ambient": self.ambient,
            "basis": self.basis.iter().map(|v| v.iter().map(|s| s.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Rank of a sparse matrix given as rows of `(column, value)` maps.
pub fn sparse_rank(rows: impl IntoIterator<Item = BTreeMap<usize, Scalar>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Scalar>> = BTreeMap::new();
    for mut row in rows {
        row.retain(|_, c| !c.is_zero());
        while let Some((&lead, c)) = row.iter().next() {
            let Some(piv) = pivots.get(&lead) else {
                let inv = c.inv().expect("nonzero");
                for v in row.values_mut() {
                    *v = &*v * &inv;
                }
                pivots.insert(lead, row);
                break;
            };
            let c = c.clone();
            for (&k, v) in piv {
                let e = row.entry(k).or_insert_with(Scalar::zero);
                *e -= &(&c * v);
                if e.is_zero() {
                    row.remove(&k);
                }
            }
        }
    }
    pivots.len()
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn identity_solve() {
        let sol = solve_linear(&Matrix::identity(3), &ints(&[1, 2, 3])).unwrap();
        assert_eq!(sol, LinearSolution::Feasible { particular: ints(&[1, 2, 3]), nullspace: vec![] });
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let a = Matrix::from_i64(&[&[1, -1, 0, 0], &[0, 1, -1, 0], &[1, 0, -1, 0], &[0, 0, 3, 2]]);
        let rows = a.to_rows().into_iter().map(|r| r.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect());
        assert_eq!(sparse_rank(rows), a.rank());
        assert_eq!(sparse_rank(Vec::new()), 0);
    }

    #[test]
    fn inconsistent_rows() {
        let a = Matrix::from_i64(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve_linear(&a, &ints(&[1, 3])).unwrap(), LinearSolution::Infeasible);
    }

    #[test]
    fn underdetermined_solution_checks() {
        let a = Matrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 7, 9], &[0, 0, 1, 1]]);
        let b = ints(&[1, 3, 1]);
        let LinearSolution::Feasible { particular, nullspace } = solve_linear(&a, &b).unwrap() else {
            panic!("expected feasible");
        };
        assert_eq!(a.mul_vec(&particular), b);
        assert_eq!(nullspace.len(), 2);
        for n in &nullspace {
            assert!(a.mul_vec(n).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn field_mismatch_is_reported() {
        let a = Matrix::from_rows(vec![vec![Scalar::zeta(3), Scalar::v()]]).unwrap();
        assert!(matches!(solve_linear(&a, &ints(&[1])), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn subspace_equality_and_intersection() {
        let s = Subspace::span(2, vec![ints(&[1, 0]), ints(&[0, 1])]).unwrap();
        let t = Subspace::span(2, vec![ints(&[1, 1]), ints(&[1, -1])]).unwrap();
        assert_eq!(s, t);
        let x = Subspace::span(2, vec![ints(&[1, 0])]).unwrap();
        let y = Subspace::span(2, vec![ints(&[0, 1])]).unwrap();
        assert_eq!(x.intersect(&y).unwrap().dim(), 0);
        assert_eq!(x.sum(&y).unwrap(), s);
    }

    #[test]
    fn inverse_round_trip() {
        let a = Matrix::from_i64(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
