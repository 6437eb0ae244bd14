//! Small self-contained numerical kernels: a cyclic Jacobi eigensolver for
//! real symmetric matrices, adaptive Simpson quadrature, half-period summation
//! for oscillatory tails, and a scaling-and-squaring matrix exponential.

use ndarray::{Array1, Array2};
use num_complex::Complex64 as C64;

/// Eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.
///
/// Returns `(eigenvalues, transform)` with eigenvalues ascending and the
/// transform `A` holding one eigenvector per row, so that `A · H · Aᵀ` is
/// diagonal. The sign of each eigenvector is fixed by making its
/// largest-magnitude component positive.
pub fn symmetric_eigen(h: &Array2<f64>) -> (Array1<f64>, Array2<f64>) {
    let n = h.nrows();
    assert_eq!(n, h.ncols(), "symmetric_eigen: matrix must be square");
    let mut a = h.clone();
    let mut v = Array2::<f64>::eye(n);

    let off = |a: &Array2<f64>| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += a[[i, j]] * a[[i, j]];
            }
        }
        s
    };

    let scale: f64 = h.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1e-300);
    let tol = (1e-15 * scale).powi(2) * (n * n) as f64;

    for _sweep in 0..100 {
        if off(&a) <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[[p, q]];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let theta = (a[[q, q]] - a[[p, p]]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[[k, p]];
                    let akq = a[[k, q]];
                    a[[k, p]] = c * akp - s * akq;
                    a[[k, q]] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[[p, k]];
                    let aqk = a[[q, k]];
                    a[[p, k]] = c * apk - s * aqk;
                    a[[q, k]] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[[k, p]];
                    let vkq = v[[k, q]];
                    v[[k, p]] = c * vkp - s * vkq;
                    v[[k, q]] = s * vkp + c * vkq;
                }
            }
        }
    }

    // Columns of v are eigenvectors; sort ascending and fix signs.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[[i, i]].partial_cmp(&a[[j, j]]).unwrap());
    let mut eigvals = Array1::<f64>::zeros(n);
    let mut rows = Array2::<f64>::zeros((n, n));
    for (row, &col) in order.iter().enumerate() {
        eigvals[row] = a[[col, col]];
        let mut imax = 0;
        let mut vmax = 0.0f64;
        for k in 0..n {
            if v[[k, col]].abs() > vmax {
                vmax = v[[k, col]].abs();
                imax = k;
            }
        }
        let sign = if v[[imax, col]] < 0.0 { -1.0 } else { 1.0 };
        for k in 0..n {
            rows[[row, k]] = sign * v[[k, col]];
        }
    }
    (eigvals, rows)
}

/// Eigenvalues of a complex Hermitian matrix via the real symmetric embedding
/// `[[X, -Y], [Y, X]]`; each eigenvalue of the original appears twice.
pub fn hermitian_eigenvalues(h: &Array2<C64>) -> Vec<f64> {
    let n = h.nrows();
    let mut e = Array2::<f64>::zeros((2 * n, 2 * n));
    for i in 0..n {
        for j in 0..n {
            e[[i, j]] = h[[i, j]].re;
            e[[i, j + n]] = -h[[i, j]].im;
            e[[i + n, j]] = h[[i, j]].im;
            e[[i + n, j + n]] = h[[i, j]].re;
        }
    }
    let (vals, _) = symmetric_eigen(&e);
    // Doubled spectrum: keep every other entry of the sorted list.
    vals.iter().step_by(2).copied().collect()
}

/// Result of an adaptive quadrature together with its error estimate.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub value: f64,
    pub residual: f64,
}

/// Adaptive Simpson integration of `f` over `[a, b]`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Quadrature {
    fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
        h / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: usize,
        residual: &mut f64,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fa, flm, fm, m - a);
        let right = simpson(fm, frm, fb, b - m);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            *residual += delta.abs() / 15.0;
            return left + right + delta / 15.0;
        }
        recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, residual)
            + recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, residual)
    }

    if a == b {
        return Quadrature {
            value: 0.0,
            residual: 0.0,
        };
    }
    let fa = f(a);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(fa, fm, fb, b - a);
    let mut residual = 0.0;
    let value = recurse(f, a, b, fa, fm, fb, whole, tol, 48, &mut residual);
    Quadrature { value, residual }
}

/// Which oscillatory kernel multiplies the integrand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel {
    Cos,
    Sin,
}

/// `∫₀^∞ f(ω) · cos(aω) dω` or the sine analogue, by summing half-period
/// segments and accelerating the alternating tail with repeated averaging
/// (Euler transformation). Valid for `a > 0` and integrands decaying at least
/// like `1/ω`; conditional convergence is handled by the acceleration.
pub fn oscillatory_integral<F: Fn(f64) -> f64>(f: &F, a: f64, kernel: Kernel, tol: f64) -> Quadrature {
    assert!(a > 0.0, "oscillatory_integral requires a positive frequency");
    let half = std::f64::consts::PI / a;
    // First zero of the kernel.
    let first = match kernel {
        Kernel::Cos => 0.5 * half,
        Kernel::Sin => half,
    };
    let g = |w: f64| match kernel {
        Kernel::Cos => f(w) * (a * w).cos(),
        Kernel::Sin => f(w) * (a * w).sin(),
    };

    let head = adaptive_simpson(&g, 0.0, first, tol);
    let mut segments: Vec<f64> = Vec::with_capacity(96);
    let mut residual = head.residual;
    let mut lo = first;
    let max_segments = 96;
    for _ in 0..max_segments {
        let hi = lo + half;
        let q = adaptive_simpson(&g, lo, hi, tol);
        segments.push(q.value);
        residual += q.residual;
        lo = hi;
        if segments.len() >= 8 {
            // Euler-transformed tail estimate.
            let (sum, err) = euler_sum(&segments);
            if err <= tol.max(1e-14 * (head.value.abs() + sum.abs())) {
                return Quadrature {
                    value: head.value + sum,
                    residual: residual + err,
                };
            }
        }
    }
    let (sum, err) = euler_sum(&segments);
    Quadrature {
        value: head.value + sum,
        residual: residual + err,
    }
}

/// Euler transformation of a (nearly) alternating series given its terms:
/// repeatedly average the partial sums. Returns the accelerated sum and a
/// convergence estimate from the last averaging stage.
fn euler_sum(terms: &[f64]) -> (f64, f64) {
    let mut s: Vec<f64> = Vec::with_capacity(terms.len());
    let mut acc = 0.0;
    for &t in terms {
        acc += t;
        s.push(acc);
    }
    let mut err = f64::MAX;
    while s.len() > 1 {
        for i in 0..s.len() - 1 {
            s[i] = 0.5 * (s[i] + s[i + 1]);
        }
        s.pop();
        if s.len() >= 2 {
            err = (s[s.len() - 1] - s[s.len() - 2]).abs();
        }
    }
    (s[0], err.min(terms.last().map_or(f64::MAX, |t| t.abs())))
}

/// Matrix exponential `e^A` of a real square matrix by scaling and squaring
/// with a Taylor series on the scaled matrix.
pub fn expm_real(a: &Array2<f64>) -> Array2<f64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols());
    let norm = a
        .rows()
        .into_iter()
        .map(|r| r.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0f64, f64::max);
    let s = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = a.mapv(|x| x / f64::powi(2.0, s as i32));

    let mut result = Array2::<f64>::eye(n);
    let mut term = Array2::<f64>::eye(n);
    for k in 1..=30 {
        term = term.dot(&scaled) / k as f64;
        result += &term;
        let tnorm: f64 = term.iter().map(|x| x.abs()).sum();
        if tnorm < 1e-18 {
            break;
        }
    }
    for _ in 0..s {
        result = result.dot(&result);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn jacobi_two_site() {
        let h = array![[-75.0, 100.0], [100.0, 75.0]];
        let (vals, a) = symmetric_eigen(&h);
        assert!((vals[0] + 125.0).abs() < 1e-10);
        assert!((vals[1] - 125.0).abs() < 1e-10);
        // A H Aᵀ diagonal
        let d = a.dot(&h).dot(&a.t());
        assert!(d[[0, 1]].abs() < 1e-9 && d[[1, 0]].abs() < 1e-9);
    }

    #[test]
    fn jacobi_random_orthogonality() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [3usize, 5, 8, 12] {
            let mut h = Array2::<f64>::zeros((n, n));
            for i in 0..n {
                for j in 0..=i {
                    let x: f64 = rng.gen_range(-100.0..100.0);
                    h[[i, j]] = x;
                    h[[j, i]] = x;
                }
            }
            let (vals, a) = symmetric_eigen(&h);
            let id = a.dot(&a.t());
            for i in 0..n {
                for j in 0..n {
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert!((id[[i, j]] - expect).abs() < 1e-10);
                }
            }
            let trace: f64 = (0..n).map(|i| h[[i, i]]).sum();
            let sum: f64 = vals.iter().sum();
            assert!((trace - sum).abs() < 1e-9 * trace.abs().max(1.0));
            for w in vals.windows(2) {
                assert!(w[0] <= w[1] + 1e-12);
            }
        }
    }

    #[test]
    fn simpson_known_integrals() {
        let q = adaptive_simpson(&|x: f64| x.sin(), 0.0, std::f64::consts::PI, 1e-12);
        assert!((q.value - 2.0).abs() < 1e-10);
        let q = adaptive_simpson(&|x: f64| (-x * x).exp(), -8.0, 8.0, 1e-12);
        assert!((q.value - std::f64::consts::PI.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn oscillatory_lorentzian_cos_transform() {
        // ∫₀^∞ cos(a ω)/(ω²+1) dω = (π/2) e^{-a}
        for &a in &[0.3, 1.0, 2.5] {
            let q = oscillatory_integral(&|w: f64| 1.0 / (w * w + 1.0), a, Kernel::Cos, 1e-10);
            let exact = 0.5 * std::f64::consts::PI * (-a).exp();
            assert!((q.value - exact).abs() < 1e-7, "a={a}: {} vs {exact}", q.value);
        }
    }

    #[test]
    fn oscillatory_slowly_decaying_sin_transform() {
        // ∫₀^∞ sin(a ω) ω/(ω²+1) dω = (π/2) e^{-a}; integrand decays like 1/ω.
        let a = 0.7;
        let q = oscillatory_integral(&|w: f64| w / (w * w + 1.0), a, Kernel::Sin, 1e-10);
        let exact = 0.5 * std::f64::consts::PI * (-a).exp();
        assert!((q.value - exact).abs() < 1e-6, "{} vs {exact}", q.value);
    }

    #[test]
    fn expm_matches_scalar_and_rotation() {
        let a = array![[-0.3f64]];
        let e = expm_real(&a);
        assert!((e[[0, 0]] - (-0.3f64).exp()).abs() < 1e-14);

        // Rotation generator: exp([[0,-t],[t,0]]) = [[cos t, -sin t],[sin t, cos t]]
        let t = 1.234f64;
        let g = array![[0.0, -t], [t, 0.0]];
        let e = expm_real(&g);
        assert!((e[[0, 0]] - t.cos()).abs() < 1e-12);
        assert!((e[[1, 0]] - t.sin()).abs() < 1e-12);
    }

    #[test]
    fn hermitian_eigenvalues_of_pauli_y_like() {
        let h = array![
            [C64::new(1.0, 0.0), C64::new(0.0, -2.0)],
            [C64::new(0.0, 2.0), C64::new(1.0, 0.0)]
        ];
        let vals = hermitian_eigenvalues(&h);
        assert!((vals[0] + 1.0).abs() < 1e-10);
        assert!((vals[1] - 3.0).abs() < 1e-10);
    }
}
