use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Complex tridiagonal matrix stored by diagonals. `lower[0]` and
/// `upper[n - 1]` lie outside the matrix and are ignored.
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal<T> {
    lower: Vec<Complex<T>>,
    diag: Vec<Complex<T>>,
    upper: Vec<Complex<T>>,
}

impl<T: Real> Tridiagonal<T> {
    pub fn new(
        lower: Vec<Complex<T>>,
        diag: Vec<Complex<T>>,
        upper: Vec<Complex<T>>,
    ) -> Result<Self> {
        let n = diag.len();
        if n == 0 || lower.len() != n || upper.len() != n {
            return Err(Error::parameter(
                "diag",
                format!(
                    "diagonals must share a non-zero length, got {}/{}/{}",
                    lower.len(),
                    n,
                    upper.len()
                ),
            ));
        }
        Ok(Self { lower, diag, upper })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// `out = self * x`.
    pub fn apply(&self, x: &[Complex<T>], out: &mut [Complex<T>]) {
        let n = self.len();
        assert!(x.len() == n && out.len() == n, "dimension mismatch");
        for j in 0..n {
            let mut acc = self.diag[j] * x[j];
            if j > 0 {
                acc = acc + self.lower[j] * x[j - 1];
            }
            if j + 1 < n {
                acc = acc + self.upper[j] * x[j + 1];
            }
            out[j] = acc;
        }
    }

    /// Thomas-algorithm factorization without pivoting. Intended for
    /// diagonally dominant systems; a vanishing pivot is reported.
    pub fn factor(&self) -> Result<TridiagonalLu<T>> {
        let n = self.len();
        let mut c_prime = vec![Complex::new(T::zero(), T::zero()); n];
        let mut inv_pivot = vec![Complex::new(T::zero(), T::zero()); n];
        let tiny = T::min_positive_value();
        for j in 0..n {
            let pivot = if j == 0 {
                self.diag[0]
            } else {
                self.diag[j] - self.lower[j] * c_prime[j - 1]
            };
            if !(pivot.norm() > tiny) || !pivot.re.is_finite() || !pivot.im.is_finite() {
                return Err(Error::numeric(format!(
                    "singular tridiagonal pivot at row {j}"
                )));
            }
            inv_pivot[j] = pivot.inv();
            if j + 1 < n {
                c_prime[j] = self.upper[j] * inv_pivot[j];
            }
        }
        Ok(TridiagonalLu {
            lower: self.lower.clone(),
            c_prime,
            inv_pivot,
        })
    }
}

/// Factored tridiagonal matrix; each solve is `O(n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalLu<T> {
    lower: Vec<Complex<T>>,
    c_prime: Vec<Complex<T>>,
    inv_pivot: Vec<Complex<T>>,
}

impl<T: Real> TridiagonalLu<T> {
    pub fn len(&self) -> usize {
        self.inv_pivot.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inv_pivot.is_empty()
    }

    /// Overwrites `rhs` with the solution.
    pub fn solve_in_place(&self, rhs: &mut [Complex<T>]) {
        let n = self.len();
        assert_eq!(rhs.len(), n, "dimension mismatch");
        rhs[0] = rhs[0] * self.inv_pivot[0];
        for j in 1..n {
            rhs[j] = (rhs[j] - self.lower[j] * rhs[j - 1]) * self.inv_pivot[j];
        }
        for j in (0..n - 1).rev() {
            rhs[j] = rhs[j] - self.c_prime[j] * rhs[j + 1];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type C = Complex<f64>;

    fn dense_solve(a: &Tridiagonal<f64>, b: &[C]) -> Vec<C> {
        let n = a.len();
        let mut m = vec![vec![C::new(0.0, 0.0); n + 1]; n];
        for j in 0..n {
            m[j][j] = a.diag[j];
            if j > 0 {
                m[j][j - 1] = a.lower[j];
            }
            if j + 1 < n {
                m[j][j + 1] = a.upper[j];
            }
            m[j][n] = b[j];
        }
        for col in 0..n {
            let piv = (col..n)
                .max_by(|&p, &q| m[p][col].norm().total_cmp(&m[q][col].norm()))
                .unwrap();
            m.swap(col, piv);
            for row in col + 1..n {
                let f = m[row][col] / m[col][col];
                let pivot = m[col].clone();
                for (x, p) in m[row].iter_mut().zip(&pivot).skip(col) {
                    *x -= f * p;
                }
            }
        }
        let mut x = vec![C::new(0.0, 0.0); n];
        for row in (0..n).rev() {
            let mut acc = m[row][n];
            for k in row + 1..n {
                acc -= m[row][k] * x[k];
            }
            x[row] = acc / m[row][row];
        }
        x
    }

    fn complex() -> impl Strategy<Value = C> {
        (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(r, i)| C::new(r, i))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn matches_dense_elimination(
            n in 1usize..24,
            entries in proptest::collection::vec((complex(), complex(), complex(), complex()), 24),
        ) {
            let lower: Vec<C> = entries[..n].iter().map(|e| e.0).collect();
            let upper: Vec<C> = entries[..n].iter().map(|e| e.2).collect();
            // diagonal dominance keeps the unpivoted factorization well posed
            let diag: Vec<C> = entries[..n].iter().map(|e| e.1 + C::new(3.0, 0.0)).collect();
            let rhs: Vec<C> = entries[..n].iter().map(|e| e.3).collect();
            let a = Tridiagonal::new(lower, diag, upper).unwrap();
            let mut x = rhs.clone();
            a.factor().unwrap().solve_in_place(&mut x);
            let reference = dense_solve(&a, &rhs);
            for (u, v) in x.iter().zip(&reference) {
                prop_assert!((u - v).norm() < 1e-12);
            }
            let mut back = vec![C::new(0.0, 0.0); n];
            a.apply(&x, &mut back);
            for (u, v) in back.iter().zip(&rhs) {
                prop_assert!((u - v).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn singular_pivot_reported() {
        let z = C::new(0.0, 0.0);
        let a = Tridiagonal::new(vec![z, z], vec![z, C::new(1.0, 0.0)], vec![z, z]).unwrap();
        assert!(matches!(a.factor(), Err(Error::Numeric(_))));
        assert!(Tridiagonal::<f64>::new(vec![z], vec![z, z], vec![z, z]).is_err());
    }
}
