//! Exact scalars and dense exact linear algebra.
//!
//! Every symbolic computation in this crate runs over [`Rat`]
//! (arbitrary-precision rationals, always reduced with positive denominator)
//! or [`Gq`] (Gaussian rationals, complex numbers with rational real and
//! imaginary parts). [`ExactMatrix`] provides the deterministic nullspace
//! used by the tangency and annihilator solvers, and [`real_linearize`]
//! turns complex-linear constraints that involve conjugated unknowns into a
//! real matrix whose kernel is in bijection with the solution set.

use num_complex::Complex;
use num_traits::{Num, One, Signed, Zero};

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;
/// Gaussian rational: exact complex scalar with rational parts.
pub type Gq = Complex<Rat>;

/// Rational `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Integer as a rational.
pub fn rati(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Gaussian rational from parts.
pub fn gq(re: Rat, im: Rat) -> Gq {
    Complex::new(re, im)
}

/// Gaussian rational `n/d` (real).
pub fn gq_rat(n: i64, d: i64) -> Gq {
    gq(rat(n, d), Rat::zero())
}

/// Gaussian rational integer.
pub fn gqi(n: i64) -> Gq {
    gq(rati(n), Rat::zero())
}

/// The imaginary unit.
pub fn gq_i() -> Gq {
    gq(Rat::zero(), Rat::one())
}

/// `a * i` for integer `a`.
pub fn gq_im(n: i64) -> Gq {
    gq(Rat::zero(), rati(n))
}

/// Dense matrix over an exact field scalar, row-major.
///
/// The scalar is either `Rat` (real mode) or `Gq` (complex mode); the two
/// aliases [`RealMatrix`] and [`ComplexMatrix`] name the modes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RealMatrix = ExactMatrix<Rat>;
pub type ComplexMatrix = ExactMatrix<Gq>;

impl<T: Clone + Num> ExactMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for c in 0..self.cols {
                    acc = acc + self.at(r, c).clone() * v[c].clone();
                }
                acc
            })
            .collect()
    }

    /// Rank via row reduction (does not modify `self`).
    pub fn rank(&self) -> usize {
        let (_, pivots) = self.rref();
        pivots.len()
    }

    /// Reduced row echelon form with first-nonzero column pivoting.
    ///
    /// Pivot search order is fixed (top-to-bottom, left-to-right), so the
    /// result and everything derived from it are reproducible byte for byte.
    fn rref(&self) -> (Vec<Vec<T>>, Vec<usize>) {
        let mut a: Vec<Vec<T>> = (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect();
        let mut pivot_cols = Vec::new();
        let mut pr = 0usize;
        for col in 0..self.cols {
            if pr >= self.rows {
                break;
            }
            let Some(nz) = (pr..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(pr, nz);
            let inv_pivot = T::one() / a[pr][col].clone();
            for j in col..self.cols {
                a[pr][j] = a[pr][j].clone() * inv_pivot.clone();
            }
            for r in 0..self.rows {
                if r == pr || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for j in col..self.cols {
                    let sub = factor.clone() * a[pr][j].clone();
                    a[r][j] = a[r][j].clone() - sub;
                }
            }
            pivot_cols.push(col);
            pr += 1;
        }
        (a, pivot_cols)
    }

    /// Exact kernel basis.
    ///
    /// Returns the canonical basis read off the reduced row echelon form:
    /// one vector per free column, with a `1` in the free position.  The
    /// vectors are linearly independent, each satisfies `M v = 0` exactly,
    /// and together they span the kernel.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (a, pivot_cols) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![T::zero(); self.cols];
            v[free] = T::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = T::zero() - a[row][free].clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// One homogeneous constraint `sum_j (c_j a_j + d_j conj(a_j)) = 0` on
/// complex unknowns `a_1..a_k`.  Nonlinear constraints are unrepresentable
/// by construction.
#[derive(Debug, Clone)]
pub struct ComplexLinearForm {
    /// `(c_j, d_j)` per unknown: coefficient of the unknown and of its
    /// conjugate.
    pub coeffs: Vec<(Gq, Gq)>,
}

impl ComplexLinearForm {
    pub fn zero(unknowns: usize) -> Self {
        ComplexLinearForm {
            coeffs: vec![(Gq::zero(), Gq::zero()); unknowns],
        }
    }

    pub fn add_plain(&mut self, j: usize, c: Gq) {
        self.coeffs[j].0 = self.coeffs[j].0.clone() + c;
    }

    pub fn add_conj(&mut self, j: usize, d: Gq) {
        self.coeffs[j].1 = self.coeffs[j].1.clone() + d;
    }
}

/// Encode a system of complex constraints with conjugations as one real
/// matrix in the unknowns' real and imaginary parts.
///
/// Writing `a_j = x_j + i y_j`, the output has `2 * unknowns` columns in the
/// interleaved order `(x_1, y_1, x_2, y_2, ...)` and two rows per form (the
/// real and imaginary part of the constraint).  Its kernel is in bijection
/// with the solution set of the input system; [`complex_from_real_vec`]
/// maps kernel vectors back to complex unknowns.
pub fn real_linearize(forms: &[ComplexLinearForm], unknowns: usize) -> RealMatrix {
    let mut m = ExactMatrix::zeros(2 * forms.len(), 2 * unknowns);
    for (fi, form) in forms.iter().enumerate() {
        assert_eq!(form.coeffs.len(), unknowns);
        for (j, (c, d)) in form.coeffs.iter().enumerate() {
            // c*(x+iy): Re = cr x - ci y, Im = ci x + cr y
            // d*(x-iy): Re = dr x + di y, Im = di x - dr y
            let re_x = c.re.clone() + d.re.clone();
            let re_y = -c.im.clone() + d.im.clone();
            let im_x = c.im.clone() + d.im.clone();
            let im_y = c.re.clone() - d.re.clone();
            let add = |m: &mut RealMatrix, r: usize, col: usize, v: Rat| {
                let cur = m.at(r, col).clone();
                m.set(r, col, cur + v);
            };
            add(&mut m, 2 * fi, 2 * j, re_x);
            add(&mut m, 2 * fi, 2 * j + 1, re_y);
            add(&mut m, 2 * fi + 1, 2 * j, im_x);
            add(&mut m, 2 * fi + 1, 2 * j + 1, im_y);
        }
    }
    m
}

/// Interpret a real kernel vector in interleaved `(x_j, y_j)` layout as
/// complex unknowns.
pub fn complex_from_real_vec(v: &[Rat]) -> Vec<Gq> {
    assert!(v.len() % 2 == 0);
    v.chunks(2).map(|xy| gq(xy[0].clone(), xy[1].clone())).collect()
}

/// Scale a real vector so its first nonzero entry is `1`.
pub fn normalize_leading(v: &mut [Rat]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        for x in v.iter_mut() {
            *x = x.clone() / lead.clone();
        }
    }
}

/// Scale a complex vector so its first nonzero entry is `1` (complex
/// normalization, used for complex-linear solution spaces).
pub fn normalize_leading_complex(v: &mut [Gq]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        for x in v.iter_mut() {
            *x = x.clone() / lead.clone();
        }
    }
}

/// `|x|^2` as an exact rational.
pub fn gq_norm_sqr(x: &Gq) -> Rat {
    x.re.clone() * x.re.clone() + x.im.clone() * x.im.clone()
}

/// True when the scalar has no imaginary part.
pub fn gq_is_real(x: &Gq) -> bool {
    x.im.is_zero()
}

/// Format a rational as `n` or `n/d` (reduced, sign on the numerator).
pub fn rat_to_string(x: &Rat) -> String {
    x.to_string()
}

/// Sign-aware absolute value helper for tests and reports.
pub fn rat_abs(x: &Rat) -> Rat {
    x.abs()
}

/// `r^e` for integer `e` (negative allowed, `r` nonzero).
pub fn rat_pow(r: &Rat, e: i64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    let mut base = if e < 0 {
        assert!(!r.is_zero(), "zero base with negative exponent");
        Rat::one() / r.clone()
    } else {
        r.clone()
    };
    let mut exp = e.unsigned_abs();
    let mut acc = Rat::one();
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= base.clone();
        }
        base = base.clone() * base;
        exp >>= 1;
    }
    acc
}
