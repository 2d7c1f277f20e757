//! Exact integer linear algebra.
//!
//! Every invariant computed by this crate reduces to a handful of primitives
//! on arbitrary-precision integer matrices: Smith normal form, cokernel
//! invariants, Diophantine systems, and preimage-lattice indices. All
//! arithmetic is exact; nothing here rounds or wraps.

use std::cmp::min;
use std::fmt;
use std::ops::{Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix with value semantics; entries are stored row-major.
///
/// All public operations return fresh values; a constructed matrix is never
/// mutated.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// Builds a matrix from row-major entries.
    ///
    /// Panics if either dimension is zero or the entry count does not match.
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count must be rows * cols"
        );
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::from_vec(
            rows,
            cols,
            entries.iter().map(|&e| BigInt::from(e)).collect(),
        )
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_vec(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Matrix-vector product; `v` must have length `cols`.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Horizontal concatenation `[self | right]`; row counts must match.
    pub fn hstack(&self, right: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, right.rows, "row counts must match");
        let mut entries = Vec::with_capacity(self.rows * (self.cols + right.cols));
        for i in 0..self.rows {
            entries.extend_from_slice(self.row(i));
            entries.extend_from_slice(right.row(i));
        }
        IntMatrix::from_vec(self.rows, self.cols + right.cols, entries)
    }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant requires a square matrix");
        let n = self.rows;
        let mut m = self.entries.clone();
        let mut negated = false;
        let mut prev = BigInt::one();
        for k in 0..n.saturating_sub(1) {
            if m[k * n + k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    m.swap(k * n + j, swap * n + j);
                }
                negated = !negated;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = t / &prev; // exact by Bareiss
                }
            }
            prev = m[k * n + k].clone();
        }
        let d = m[n * n - 1].clone();
        if negated {
            -d
        } else {
            d
        }
    }

    /// Adjugate: `adjugate(A) * A = det(A) * I`. The 1x1 adjugate is `[1]`.
    pub fn adjugate(&self) -> IntMatrix {
        assert!(self.is_square(), "adjugate requires a square matrix");
        let n = self.rows;
        if n == 1 {
            return IntMatrix::identity(1);
        }
        let mut adj = IntMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut cof = self.minor(i, j).det();
                if (i + j) % 2 == 1 {
                    cof = -cof;
                }
                adj.set(j, i, cof);
            }
        }
        adj
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> IntMatrix {
        let n = self.rows;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in 0..n {
            if i == skip_row {
                continue;
            }
            for j in 0..n {
                if j == skip_col {
                    continue;
                }
                entries.push(self.get(i, j).clone());
            }
        }
        IntMatrix::from_vec(n - 1, n - 1, entries)
    }

    // Internal mutators; the public surface stays immutable.

    fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        for j in 0..self.cols {
            let t = self.get(src, j) * c;
            let v = self.get(dst, j) + t;
            self.set(dst, j, v);
        }
    }

    /// col[dst] += c * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        for i in 0..self.rows {
            let t = self.get(i, src) * c;
            let v = self.get(i, dst) + t;
            self.set(i, dst, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    /// Rows (i, j) <- (p*row_i + q*row_j, r*row_i + s*row_j).
    fn left_two_by_two(
        &mut self,
        i: usize,
        j: usize,
        p: &BigInt,
        q: &BigInt,
        r: &BigInt,
        s: &BigInt,
    ) {
        let ri: Vec<BigInt> = self.row(i).to_vec();
        let rj: Vec<BigInt> = self.row(j).to_vec();
        for c in 0..self.cols {
            self.set(i, c, p * &ri[c] + q * &rj[c]);
            self.set(j, c, r * &ri[c] + s * &rj[c]);
        }
    }

    /// Cols (i, j) <- (p*col_i + r*col_j, q*col_i + s*col_j).
    fn right_two_by_two(
        &mut self,
        i: usize,
        j: usize,
        p: &BigInt,
        q: &BigInt,
        r: &BigInt,
        s: &BigInt,
    ) {
        let ci = self.column(i);
        let cj = self.column(j);
        for rw in 0..self.rows {
            self.set(rw, i, p * &ci[rw] + r * &cj[rw]);
            self.set(rw, j, q * &ci[rw] + s * &cj[rw]);
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must match");
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * rhs.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "dimensions must match"
        );
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        IntMatrix::from_vec(self.rows, self.cols, entries)
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;

    fn neg(self) -> IntMatrix {
        IntMatrix::from_vec(
            self.rows,
            self.cols,
            self.entries.iter().map(|e| -e).collect(),
        )
    }
}

/// Order of a finitely generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupOrder {
    Finite(BigInt),
    Infinite,
}

impl GroupOrder {
    pub fn finite(n: i64) -> Self {
        GroupOrder::Finite(BigInt::from(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, GroupOrder::Finite(_))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, GroupOrder::Finite(n) if n.is_one())
    }

    pub fn as_finite(&self) -> Option<&BigInt> {
        match self {
            GroupOrder::Finite(n) => Some(n),
            GroupOrder::Infinite => None,
        }
    }
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(n) => write!(f, "{n}"),
            GroupOrder::Infinite => write!(f, "infinite"),
        }
    }
}

/// Smith normal form `U * A * V = D` with `U`, `V` unimodular and `D`
/// diagonal, nonnegative, its entries forming a divisibility chain with
/// zeros trailing. `D` is unique given `A`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    u: IntMatrix,
    d: IntMatrix,
    v: IntMatrix,
}

impl SmithDecomposition {
    pub fn u(&self) -> &IntMatrix {
        &self.u
    }

    pub fn d(&self) -> &IntMatrix {
        &self.d
    }

    pub fn v(&self) -> &IntMatrix {
        &self.v
    }

    /// Diagonal entries d_1, ..., d_min(rows,cols), trailing zeros included.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..min(self.d.rows, self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|e| !e.is_zero()).count()
    }
}

/// Computes the Smith normal form by elementary row/column reduction with a
/// least-absolute-value pivot, then restores the divisibility chain with
/// paired 2x2 unimodular factors.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let mut w = SnfWork {
        d: a.clone(),
        u: IntMatrix::identity(a.rows()),
        v: IntMatrix::identity(a.cols()),
    };
    let steps = min(a.rows(), a.cols());
    let mut t = 0;
    while t < steps {
        let Some((pi, pj)) = w.min_abs_entry(t) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        w.clear_cross(t);
        t += 1;
    }
    w.fix_divisibility(t);
    w.fix_signs(t);
    SmithDecomposition {
        u: w.u,
        d: w.d,
        v: w.v,
    }
}

struct SnfWork {
    d: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl SnfWork {
    /// Position of a nonzero entry of least absolute value in d[t.., t..].
    fn min_abs_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.d.rows {
            for j in t..self.d.cols {
                let e = self.d.get(i, j);
                if e.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.d.get(bi, bj).abs() <= e.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
    }

    fn add_row_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.d.add_row_multiple(dst, src, c);
        self.u.add_row_multiple(dst, src, c);
    }

    fn add_col_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.d.add_col_multiple(dst, src, c);
        self.v.add_col_multiple(dst, src, c);
    }

    /// Zeroes column t below the pivot and row t right of it. A nonzero
    /// Euclidean remainder becomes the new (strictly smaller) pivot, so the
    /// restart loop terminates.
    fn clear_cross(&mut self, t: usize) {
        'restart: loop {
            for i in t + 1..self.d.rows {
                if self.d.get(i, t).is_zero() {
                    continue;
                }
                let q = self.d.get(i, t) / self.d.get(t, t);
                if !q.is_zero() {
                    self.add_row_multiple(i, t, &(-q));
                }
                if !self.d.get(i, t).is_zero() {
                    self.swap_rows(t, i);
                    continue 'restart;
                }
            }
            for j in t + 1..self.d.cols {
                if self.d.get(t, j).is_zero() {
                    continue;
                }
                let q = self.d.get(t, j) / self.d.get(t, t);
                if !q.is_zero() {
                    self.add_col_multiple(j, t, &(-q));
                }
                if !self.d.get(t, j).is_zero() {
                    self.swap_cols(t, j);
                    continue 'restart;
                }
            }
            return;
        }
    }

    /// Repairs d_i | d_{i+1} over the nonzero diagonal without leaving the
    /// unimodular setting: for each offending pair, a left factor
    /// [[1, 1], [-tb, sa]] and right factor [[s, -b], [t, a]] replace
    /// diag(x, y) by diag(gcd, +-lcm), where g = sx + ty, a = x/g, b = y/g.
    fn fix_divisibility(&mut self, rank: usize) {
        if rank < 2 {
            return;
        }
        loop {
            let mut changed = false;
            for i in 0..rank - 1 {
                let x = self.d.get(i, i).clone();
                let y = self.d.get(i + 1, i + 1).clone();
                if x.is_zero() || y.is_multiple_of(&x) {
                    continue;
                }
                let (g, s, t) = extended_gcd(&x, &y);
                let a = &x / &g;
                let b = &y / &g;
                let one = BigInt::one();
                self.left_two_by_two(i, i + 1, &one, &one, &(-(&t * &b)), &(&s * &a));
                self.right_two_by_two(i, i + 1, &s, &(-&b), &t, &a);
                changed = true;
            }
            if !changed {
                return;
            }
        }
    }

    fn left_two_by_two(
        &mut self,
        i: usize,
        j: usize,
        p: &BigInt,
        q: &BigInt,
        r: &BigInt,
        s: &BigInt,
    ) {
        self.d.left_two_by_two(i, j, p, q, r, s);
        self.u.left_two_by_two(i, j, p, q, r, s);
    }

    fn right_two_by_two(
        &mut self,
        i: usize,
        j: usize,
        p: &BigInt,
        q: &BigInt,
        r: &BigInt,
        s: &BigInt,
    ) {
        self.d.right_two_by_two(i, j, p, q, r, s);
        self.v.right_two_by_two(i, j, p, q, r, s);
    }

    fn fix_signs(&mut self, rank: usize) {
        for i in 0..rank {
            if self.d.get(i, i).is_negative() {
                self.d.negate_row(i);
                self.u.negate_row(i);
            }
        }
    }
}

/// Extended gcd with the gcd normalized positive: g = s*x + t*y, g > 0.
fn extended_gcd(x: &BigInt, y: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = x.extended_gcd(y);
    let (mut g, mut s, mut t) = (e.gcd, e.x, e.y);
    if g.is_negative() {
        g = -g;
        s = -s;
        t = -t;
    }
    debug_assert_eq!(g, &s * x + &t * y);
    (g, s, t)
}

/// Isomorphism type of the quotient `Z^rows / column-lattice(A)`: torsion
/// orders in a divisibility chain (each >= 2) plus a free rank. The group is
/// finite iff the free rank is zero, and then its order is the product of
/// the torsion orders (empty product = 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CokernelInvariants {
    torsion_orders: Vec<BigInt>,
    free_rank: usize,
}

impl CokernelInvariants {
    pub fn torsion_orders(&self) -> &[BigInt] {
        &self.torsion_orders
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion_orders.is_empty() && self.free_rank == 0
    }

    pub fn order(&self) -> GroupOrder {
        if self.free_rank > 0 {
            return GroupOrder::Infinite;
        }
        let mut order = BigInt::one();
        for t in &self.torsion_orders {
            order *= t;
        }
        GroupOrder::Finite(order)
    }
}

impl fmt::Display for CokernelInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .torsion_orders
            .iter()
            .map(|t| format!("Z/{t}"))
            .collect();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Invariants of `Z^rows / column-lattice(A)`, read off the Smith diagonal:
/// units are discarded, entries >= 2 are torsion orders, and rows beyond the
/// rank contribute free summands.
pub fn cokernel(a: &IntMatrix) -> CokernelInvariants {
    let snf = smith_normal_form(a);
    let diagonal = snf.diagonal();
    let rank = diagonal.iter().filter(|d| !d.is_zero()).count();
    let torsion_orders = diagonal
        .into_iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .collect();
    CokernelInvariants {
        torsion_orders,
        free_rank: a.rows() - rank,
    }
}

/// One integer solution of `A x = b` together with a basis of the integer
/// kernel of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiophantineSolution {
    pub particular: Vec<BigInt>,
    pub kernel_basis: Vec<Vec<BigInt>>,
}

/// Solves `A x = b` over the integers. Returns `None` when no integer
/// solution exists; unsolvability is a value, not an error.
pub fn solve_diophantine(a: &IntMatrix, b: &[BigInt]) -> Option<DiophantineSolution> {
    assert_eq!(
        b.len(),
        a.rows(),
        "right-hand side length must match row count"
    );
    let snf = smith_normal_form(a);
    let c = snf.u().mul_vec(b);
    let diagonal = snf.diagonal();
    let rank = snf.rank();

    // In transformed coordinates the system is d_i * y_i = c_i.
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        match diagonal.get(i) {
            Some(d) if !d.is_zero() => {
                let (q, r) = ci.div_rem(d);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            }
            _ => {
                if !ci.is_zero() {
                    return None;
                }
            }
        }
    }

    let particular = snf.v().mul_vec(&y);
    let kernel_basis = (rank..a.cols()).map(|j| snf.v().column(j)).collect();
    Some(DiophantineSolution {
        particular,
        kernel_basis,
    })
}

/// Index in `Z^n` of the preimage lattice
/// `{alpha in Z^n : R alpha in column-lattice(B)}` for `R` of shape k x n and
/// square `B` of size k, i.e. the order of the image of the composite
/// `Z^n -> Z^k -> Z^k / B Z^k`.
///
/// The lattice is obtained as the projection to the first n coordinates of
/// the integer kernel of `[R | -B]`, and the index as the cokernel order of
/// that projection.
pub fn preimage_lattice_index(r: &IntMatrix, b: &IntMatrix) -> GroupOrder {
    assert!(b.is_square(), "B must be square");
    assert_eq!(r.rows(), b.rows(), "R and B must have the same row count");
    let n = r.cols();
    let block = r.hstack(&-b);
    let snf = smith_normal_form(&block);

    let kernel_cols: Vec<Vec<BigInt>> = (snf.rank()..block.cols())
        .map(|j| snf.v().column(j))
        .collect();
    let generators = if kernel_cols.is_empty() {
        IntMatrix::zero(n, 1)
    } else {
        let mut entries = Vec::with_capacity(n * kernel_cols.len());
        for i in 0..n {
            for col in &kernel_cols {
                entries.push(col[i].clone());
            }
        }
        IntMatrix::from_vec(n, kernel_cols.len(), entries)
    };
    cokernel(&generators).order()
}
