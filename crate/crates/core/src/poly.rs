//! Affine-plus-quadratic scalar polynomials on R^n.
//!
//! Both the conformal factor and the one-form potential are restricted to
//! this family so that every derivative used elsewhere stays closed-form.

use crate::error::{Error, Result};

/// p(x) = c0 + sum_i l_i x_i + sum_{i<=j} q_ij x_i x_j.
///
/// Coefficients are packed as `[c0, l_1..l_n, q_11, q_12, .., q_1n, q_22, .., q_nn]`
/// (upper triangle, row-major). Shorter coefficient lists are zero-padded.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadPoly {
    dim: usize,
    constant: f64,
    linear: Vec<f64>,
    // upper triangle, packed row-major
    quadratic: Vec<f64>,
}

impl QuadPoly {
    pub fn coeff_len(dim: usize) -> usize {
        1 + dim + dim * (dim + 1) / 2
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            constant: 0.0,
            linear: vec![0.0; dim],
            quadratic: vec![0.0; dim * (dim + 1) / 2],
        }
    }

    pub fn from_coeffs(dim: usize, coeffs: &[f64]) -> Result<Self> {
        let max = Self::coeff_len(dim);
        if coeffs.len() > max {
            return Err(Error::InvalidConfig(format!(
                "too many polynomial coefficients: got {}, at most {} for dimension {}",
                coeffs.len(),
                max,
                dim
            )));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidConfig(
                "polynomial coefficients must be finite".into(),
            ));
        }
        let mut padded = coeffs.to_vec();
        padded.resize(max, 0.0);
        Ok(Self {
            dim,
            constant: padded[0],
            linear: padded[1..=dim].to_vec(),
            quadratic: padded[dim + 1..].to_vec(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(Self::coeff_len(self.dim));
        out.push(self.constant);
        out.extend_from_slice(&self.linear);
        out.extend_from_slice(&self.quadratic);
        out
    }

    fn quad_index(&self, i: usize, j: usize) -> usize {
        // packed upper triangle: row i starts after i rows of lengths n, n-1, ...
        debug_assert!(i <= j);
        i * self.dim - i * (i + 1) / 2 + j
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.dim);
        let mut v = self.constant;
        for i in 0..self.dim {
            v += self.linear[i] * x[i];
        }
        for i in 0..self.dim {
            for j in i..self.dim {
                v += self.quadratic[self.quad_index(i, j)] * x[i] * x[j];
            }
        }
        v
    }

    /// Exact gradient of `eval`.
    pub fn gradient(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.dim);
        let mut g = self.linear.clone();
        for i in 0..self.dim {
            for j in i..self.dim {
                let q = self.quadratic[self.quad_index(i, j)];
                if i == j {
                    g[i] += 2.0 * q * x[i];
                } else {
                    g[i] += q * x[j];
                    g[j] += q * x[i];
                }
            }
        }
        g
    }

    /// True when the polynomial has no quadratic part (constant gradient).
    pub fn is_affine(&self) -> bool {
        self.quadratic.iter().all(|&q| q == 0.0)
    }

    /// True when the polynomial is a constant.
    pub fn is_constant(&self) -> bool {
        self.is_affine() && self.linear.iter().all(|&l| l == 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_and_gradient_match_hand_expansion() {
        // p(x, y) = 1 + 2x + 3y + 4x^2 + 5xy + 6y^2
        let p = QuadPoly::from_coeffs(2, &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        let x = [0.5, -1.5];
        let expected = 1.0 + 2.0 * 0.5 + 3.0 * (-1.5)
            + 4.0 * 0.25
            + 5.0 * 0.5 * (-1.5)
            + 6.0 * 2.25;
        assert!((p.eval(&x) - expected).abs() < 1e-14);

        let g = p.gradient(&x);
        // dp/dx = 2 + 8x + 5y, dp/dy = 3 + 5x + 12y
        assert!((g[0] - (2.0 + 8.0 * 0.5 + 5.0 * (-1.5))).abs() < 1e-14);
        assert!((g[1] - (3.0 + 5.0 * 0.5 + 12.0 * (-1.5))).abs() < 1e-14);
    }

    #[test]
    fn short_coefficient_lists_are_zero_padded() {
        let p = QuadPoly::from_coeffs(3, &[0.0, 1.0]).unwrap();
        assert!(p.is_affine());
        assert!((p.eval(&[2.0, 5.0, -1.0]) - 2.0).abs() < 1e-15);
        assert_eq!(p.gradient(&[0.3, 0.4, 0.5]), vec![1.0, 0.0, 0.0]);
    }

    #[test]
    fn too_many_coefficients_is_an_error() {
        assert!(QuadPoly::from_coeffs(2, &[0.0; 7]).is_err());
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let p = QuadPoly::from_coeffs(3, &[0.7, 0.1, -0.2, 0.3, 0.05, -0.1, 0.2, 0.0, 0.4, -0.3])
            .unwrap();
        let x = [0.2, -0.7, 1.1];
        let g = p.gradient(&x);
        let h = 1e-6;
        for k in 0..3 {
            let mut xp = x;
            let mut xm = x;
            xp[k] += h;
            xm[k] -= h;
            let fd = (p.eval(&xp) - p.eval(&xm)) / (2.0 * h);
            assert!((g[k] - fd).abs() < 1e-8, "component {k}: {} vs {}", g[k], fd);
        }
    }
}
