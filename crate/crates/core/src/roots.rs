//! Univariate complex polynomials and a simultaneous root finder.

use num_complex::Complex64;

/// Coefficients in increasing degree order; trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPoly {
    coeffs: Vec<Complex64>,
}

impl ComplexPoly {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| *c == Complex64::new(0.0, 0.0)) {
            coeffs.pop();
        }
        ComplexPoly { coeffs }
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut c = vec![Complex64::new(1.0, 0.0)];
        for r in roots {
            let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
            for (i, a) in c.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * r;
            }
            c = next;
        }
        ComplexPoly::new(c)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// Value and first derivative by Horner.
    pub fn eval_with_deriv(&self, z: Complex64) -> (Complex64, Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        let mut p = zero;
        let mut dp = zero;
        for c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    pub fn derivative(&self) -> ComplexPoly {
        ComplexPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        )
    }

    /// All complex roots with multiplicity (Aberth–Ehrlich iteration followed
    /// by a Newton polish). Returns an empty list for constants.
    pub fn roots(&self) -> Vec<Complex64> {
        let Some(n) = self.degree() else {
            return Vec::new();
        };
        if n == 0 {
            return Vec::new();
        }
        let lead = self.coeffs[n];
        if n == 1 {
            return vec![-self.coeffs[0] / lead];
        }
        // zero roots split off exactly
        let zeros = self.coeffs.iter().take_while(|c| c.norm() == 0.0).count();
        if zeros > 0 {
            let mut out = vec![Complex64::new(0.0, 0.0); zeros];
            out.extend(ComplexPoly::new(self.coeffs[zeros..].to_vec()).roots());
            return out;
        }

        // Fujiwara-style radius for the initial circle
        let radius = (0..n)
            .map(|k| (self.coeffs[k] / lead).norm().powf(1.0 / (n - k) as f64))
            .fold(0.0f64, f64::max)
            * 2.0;
        let mut z: Vec<Complex64> = (0..n)
            .map(|k| {
                let t = std::f64::consts::TAU * (k as f64 + 0.25) / n as f64 + 0.4;
                Complex64::from_polar(radius.max(1e-3), t)
            })
            .collect();

        for _ in 0..500 {
            let mut moved = 0.0f64;
            for i in 0..n {
                let (p, dp) = self.eval_with_deriv(z[i]);
                if p.norm() == 0.0 {
                    continue;
                }
                let ratio = p / dp;
                let s: Complex64 = (0..n)
                    .filter(|&j| j != i)
                    .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                    .sum();
                let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
                if w.is_finite() {
                    z[i] -= w;
                    moved = moved.max(w.norm() / z[i].norm().max(1.0));
                }
            }
            if moved < 1e-15 {
                break;
            }
        }
        for zi in z.iter_mut() {
            for _ in 0..3 {
                let (p, dp) = self.eval_with_deriv(*zi);
                if dp.norm() == 0.0 {
                    break;
                }
                let step = p / dp;
                if !step.is_finite() {
                    break;
                }
                *zi -= step;
            }
        }
        z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        z
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn planted_roots_recovered() {
        let planted = [c(1.0, 0.0), c(-2.0, 0.5), c(0.3, -1.7), c(0.0, 2.0), c(-0.4, -0.4)];
        let p = ComplexPoly::from_roots(&planted);
        let found = p.roots();
        assert_eq!(found.len(), planted.len());
        for r in planted {
            let best = found.iter().map(|f| (f - r).norm()).fold(f64::MAX, f64::min);
            assert!(best < 1e-12, "{r} missed by {best}");
        }
    }

    #[test]
    fn zero_roots_and_constants() {
        let p = ComplexPoly::new(vec![c(0.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0)]);
        let r = p.roots();
        assert_eq!(r, vec![c(0.0, 0.0), c(1.0, 0.0)]);
        assert!(ComplexPoly::new(vec![c(3.0, 0.0)]).roots().is_empty());
        assert_eq!(ComplexPoly::new(vec![]).degree(), None);
    }

    #[test]
    fn derivative_matches_horner() {
        let p = ComplexPoly::new(vec![c(1.0, 2.0), c(0.0, -1.0), c(3.0, 0.0), c(0.5, 0.5)]);
        let z = c(0.7, -0.2);
        let (_, dp) = p.eval_with_deriv(z);
        assert!((dp - p.derivative().eval(z)).norm() < 1e-14);
    }
}
