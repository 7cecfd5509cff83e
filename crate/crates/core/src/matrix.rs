//! Exact linear algebra over the integers and rationals: fraction-free
//! determinants, row-style Hermite normal form (with transform), integer
//! kernels, and rational elimination.

use crate::error::{Error, Result};
use crate::rational::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Rectangular integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMat {
    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        IntMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut out = IntMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn neg(&self) -> IntMat {
        IntMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// row[dst] += k * row[src]
    fn add_multiple(&mut self, dst: usize, src: usize, k: &Int) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = k * &self[(src, j)];
            self[(dst, j)] += t;
        }
    }

    /// Replaces rows (a, b) by (s*row_a + t*row_b, u*row_a + v*row_b).
    fn combine_rows(&mut self, a: usize, b: usize, s: &Int, t: &Int, u: &Int, v: &Int) {
        for j in 0..self.cols {
            let x = self[(a, j)].clone();
            let y = self[(b, j)].clone();
            self[(a, j)] = s * &x + t * &y;
            self[(b, j)] = u * &x + v * &y;
        }
    }

    pub fn to_rat(&self) -> RatMat {
        RatMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| Rat::from_integer(x.clone())).collect(),
        }
    }

    /// Inverse of a matrix with determinant +-1, exact over the integers.
    pub fn unimodular_inverse(&self) -> Result<IntMat> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let det = integer_det(self)?;
        if !det.abs().is_one() {
            return Err(Error::DependentRows);
        }
        let n = self.rows;
        let mut adj = IntMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(i, j);
                let c = integer_det(&minor)?;
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                adj[(j, i)] = Int::from(sign) * c;
            }
        }
        if det.is_negative() {
            Ok(adj.neg())
        } else {
            Ok(adj)
        }
    }

    fn minor(&self, skip_i: usize, skip_j: usize) -> IntMat {
        let mut rows = Vec::with_capacity(self.rows - 1);
        for i in 0..self.rows {
            if i == skip_i {
                continue;
            }
            let mut row = Vec::with_capacity(self.cols - 1);
            for j in 0..self.cols {
                if j == skip_j {
                    continue;
                }
                row.push(self[(i, j)].clone());
            }
            rows.push(row);
        }
        IntMat::from_rows(rows)
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

impl std::fmt::Display for IntMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Exact determinant by fraction-free Bareiss elimination.
pub fn integer_det(m: &IntMat) -> Result<Int> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Int::one());
    }
    let mut a = m.clone();
    let mut prev = Int::one();
    let mut sign = 1i32;
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let pivot = (k + 1..n).find(|&i| !a[(i, k)].is_zero());
            match pivot {
                Some(i) => {
                    a.swap_rows(i, k);
                    sign = -sign;
                }
                None => return Ok(Int::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[(k, k)] * &a[(i, j)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = t / &prev;
            }
            a[(i, k)] = Int::zero();
        }
        prev = a[(k, k)].clone();
    }
    Ok(Int::from(sign) * a[(n - 1, n - 1)].clone())
}

/// Row-style Hermite normal form with the unimodular transform:
/// returns (H, U) with U * M = H, U square and det +-1.
///
/// H is an upper staircase: pivot entries positive, entries above each
/// pivot reduced into [0, pivot), zero rows collected at the bottom.
pub fn hnf_with_transform(m: &IntMat) -> (IntMat, IntMat) {
    let mut h = m.clone();
    let mut u = IntMat::identity(m.rows());
    let rows = m.rows();
    let cols = m.cols();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // clear column c below row r by pairwise gcd steps
        loop {
            let pivot = (r..rows).find(|&i| !h[(i, c)].is_zero());
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let a = h[(r, c)].clone();
                let b = h[(i, c)].clone();
                let eg = a.extended_gcd(&b);
                let (g, s, t) = (eg.gcd, eg.x, eg.y);
                // (row_r, row_i) <- (s*row_r + t*row_i, -(b/g)*row_r + (a/g)*row_i)
                let bm = -(&b / &g);
                let am = &a / &g;
                h.combine_rows(r, i, &s, &t, &bm, &am);
                u.combine_rows(r, i, &s, &t, &bm, &am);
                done = false;
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            let m1 = Int::from(-1);
            for j in 0..cols {
                h[(r, j)] = &h[(r, j)] * &m1;
            }
            for j in 0..u.cols() {
                u[(r, j)] = &u[(r, j)] * &m1;
            }
        }
        // reduce the entries above this pivot into [0, pivot)
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            if !q.is_zero() {
                let k = -q;
                h.add_multiple(i, r, &k);
                u.add_multiple(i, r, &k);
            }
        }
        r += 1;
    }
    (h, u)
}

/// Canonical HNF of the lattice generated by `vectors`: a square k x k
/// matrix (k = ambient dimension) whose top rows form the staircase basis
/// and whose remaining rows are zero. Idempotent, suitable for equality
/// tests of lattices.
pub fn hnf(vectors: &[Vec<Int>]) -> Result<IntMat> {
    if vectors.is_empty() {
        return Err(Error::EmptyInput);
    }
    let k = vectors[0].len();
    if vectors.iter().any(|v| v.len() != k) {
        return Err(Error::ShapeMismatch);
    }
    let (h, _) = hnf_with_transform(&IntMat::from_rows(vectors.to_vec()));
    let mut rows: Vec<Vec<Int>> = h
        .row_vecs()
        .into_iter()
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .collect();
    while rows.len() < k {
        rows.push(vec![Int::zero(); k]);
    }
    Ok(IntMat::from_rows(rows))
}

/// Basis of the left kernel {w : w M = 0} as rows, via the HNF transform.
pub fn left_kernel(m: &IntMat) -> Vec<Vec<Int>> {
    let (h, u) = hnf_with_transform(m);
    let mut out = Vec::new();
    for i in 0..h.rows() {
        if h.row(i).iter().all(|x| x.is_zero()) {
            out.push(u.row(i).to_vec());
        }
    }
    out
}

/// Rectangular rational matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        RatMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = RatMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    /// Least common multiple of all entry denominators.
    pub fn common_denominator(&self) -> Int {
        let mut d = Int::one();
        for x in &self.data {
            d = d.lcm(x.denom());
        }
        d
    }

    /// Clears denominators: returns (D, D * self) with D the minimal
    /// common denominator.
    pub fn scaled_integer(&self) -> (Int, IntMat) {
        let d = self.common_denominator();
        let dr = Rat::from_integer(d.clone());
        let data: Vec<Int> = self.data.iter().map(|x| (x * &dr).to_integer()).collect();
        (
            d,
            IntMat {
                rows: self.rows,
                cols: self.cols,
                data,
            },
        )
    }

    pub fn det(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        if self.rows == 0 {
            return Ok(Rat::one());
        }
        let (d, m) = self.scaled_integer();
        let det = integer_det(&m)?;
        Ok(Rat::new(det, d.pow(self.rows as u32)))
    }

    pub fn is_nonsingular(&self) -> bool {
        self.det().map(|d| !d.is_zero()).unwrap_or(false)
    }

    /// Gauss-Jordan inverse; error when singular.
    pub fn inverse(&self) -> Result<RatMat> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&i| !a[(i, col)].is_zero()).ok_or(Error::DependentRows)?;
            a.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] / &p;
                inv[(col, j)] = &inv[(col, j)] / &p;
            }
            for i in 0..n {
                if i == col || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                for j in 0..n {
                    let t = &f * &a[(col, j)];
                    a[(i, j)] -= t;
                    let t = &f * &inv[(col, j)];
                    inv[(i, j)] -= t;
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            if rank == a.rows {
                break;
            }
            let Some(p) = (rank..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, rank);
            let inv = Rat::one() / a[(rank, col)].clone();
            for i in rank + 1..a.rows {
                if a[(i, col)].is_zero() {
                    continue;
                }
                let f = &a[(i, col)] * &inv;
                for j in col..a.cols {
                    let t = &f * &a[(rank, j)];
                    a[(i, j)] -= t;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Solves x * A = b for a row vector x (A is self, possibly rectangular
    /// with more columns than rows). Returns None when inconsistent, errors
    /// when the rows of A are dependent.
    pub fn solve_left(&self, b: &[Rat]) -> Result<Option<Vec<Rat>>> {
        assert_eq!(b.len(), self.cols, "dimension mismatch");
        // transpose to solve A^T x^T = b^T by elimination
        let n = self.rows; // unknowns
        let m = self.cols; // equations
        let mut a = RatMat::zero(m, n + 1);
        for i in 0..m {
            for j in 0..n {
                a[(i, j)] = self[(j, i)].clone();
            }
            a[(i, n)] = b[i].clone();
        }
        let mut row = 0;
        let mut pivots = Vec::new();
        for col in 0..n {
            let Some(p) = (row..m).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, row);
            let inv = Rat::one() / a[(row, col)].clone();
            for j in col..=n {
                a[(row, j)] = &a[(row, j)] * &inv;
            }
            for i in 0..m {
                if i == row || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                for j in col..=n {
                    let t = &f * &a[(row, j)];
                    a[(i, j)] -= t;
                }
            }
            pivots.push(col);
            row += 1;
        }
        if pivots.len() < n {
            return Err(Error::DependentRows);
        }
        // consistency: remaining rows must be all zero
        for i in row..m {
            if !a[(i, n)].is_zero() {
                return Ok(None);
            }
        }
        let mut x = vec![Rat::zero(); n];
        for (r, &col) in pivots.iter().enumerate() {
            x[col] = a[(r, n)].clone();
        }
        Ok(Some(x))
    }
}

impl std::ops::Index<(usize, usize)> for RatMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}
