//! Polynomial (voltage) matrices and the spectrum of their lifts.
//!
//! For a voltage graph over `Z_q` with polynomial matrix `B(z)`, the spectrum
//! of the lift's associated digraph is the union of the spectra of `B(ζ^r)`,
//! `ζ = e^{2πi/q}`, over `r = 0..q`.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::families::{DartKind, VoltageBaseGraph};

/// Square matrix whose entries are polynomials in `z` reduced mod `z^q - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialMatrix {
    size: usize,
    q: u64,
    entries: Vec<BTreeMap<u64, i64>>,
}

impl PolynomialMatrix {
    pub fn zero(size: usize, q: u64) -> Self {
        Self {
            size,
            q,
            entries: vec![BTreeMap::new(); size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Coefficients by power, zero terms omitted.
    pub fn entry(&self, i: usize, j: usize) -> &BTreeMap<u64, i64> {
        &self.entries[i * self.size + j]
    }

    /// Adds `coef · z^power` to entry `(i, j)`.
    pub fn add_term(&mut self, i: usize, j: usize, power: i64, coef: i64) {
        let p = power.rem_euclid(self.q as i64) as u64;
        let cell = &mut self.entries[i * self.size + j];
        let c = cell.entry(p).or_insert(0);
        *c += coef;
        if *c == 0 {
            cell.remove(&p);
        }
    }

    /// Polynomial matrix of a voltage base graph: an arc `(u,v,g)` adds `z^g`
    /// at `(u,v)`, an edge adds `z^g` at `(u,v)` and `z^-g` at `(v,u)`.
    pub fn from_base(base: &VoltageBaseGraph) -> Self {
        let mut b = Self::zero(base.order(), base.q());
        for d in base.darts() {
            let g = d.voltage as i64;
            b.add_term(d.tail, d.head, g, 1);
            if d.kind == DartKind::Edge {
                b.add_term(d.head, d.tail, -g, 1);
            }
        }
        b
    }
}

/// The 4×4 matrix of the `BDM(2,5)` base over `Z_5`:
/// rows `[0,1,0,z²]`, `[1,0,1,0]`, `[0,z²,0,1]`, `[z,0,1,0]`.
pub fn bdm5_polynomial_matrix() -> PolynomialMatrix {
    let mut b = PolynomialMatrix::zero(4, 5);
    for (i, j, p) in [
        (0, 1, 0),
        (0, 3, 2),
        (1, 0, 0),
        (1, 2, 0),
        (2, 1, 2),
        (2, 3, 0),
        (3, 0, 1),
        (3, 2, 0),
    ] {
        b.add_term(i, j, p, 1);
    }
    b
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_real(n: usize, values: &[f64]) -> Self {
        assert_eq!(values.len(), n * n);
        Self {
            n,
            data: values.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.data[i * self.n + i]).sum()
    }
}

/// Entrywise evaluation at `ζ^r`.
pub fn evaluate_at_root(b: &PolynomialMatrix, r: u64) -> Result<ComplexMatrix> {
    if r >= b.q {
        return Err(Error::BadParams(format!("r = {r} must be below q = {}", b.q)));
    }
    let n = b.size;
    let mut out = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            out.data[i * n + j] = b
                .entry(i, j)
                .iter()
                .map(|(&p, &c)| {
                    let angle = 2.0 * std::f64::consts::PI * ((r * p) % b.q) as f64 / b.q as f64;
                    Complex64::from_polar(c as f64, angle)
                })
                .sum();
        }
    }
    Ok(out)
}

/// Coefficients `c_0..=c_n` of `det(λI - M) = Σ c_i λ^i`, by the
/// Faddeev–LeVerrier trace recursion.
pub fn characteristic_polynomial(m: &ComplexMatrix) -> Vec<Complex64> {
    let n = m.n;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    let mut mk = ComplexMatrix::zeros(n);
    for k in 1..=n {
        mk = m.mul(&mk);
        for i in 0..n {
            mk.data[i * n + i] += coeffs[n - k + 1];
        }
        coeffs[n - k] = -m.mul(&mk).trace() / k as f64;
    }
    coeffs
}

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

const RESIDUAL_TOL: f64 = 1e-9;
const MAX_ITER: usize = 20_000;

/// Roots of a monic polynomial (ascending coefficients) by Durand–Kerner
/// iteration from the fixed seeds `(0.4 + 0.9i)^(j+1)`.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let deg = coeffs.len() - 1;
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (1..=deg).map(|j| seed.powu(j as u32)).collect();
    for _ in 0..MAX_ITER {
        let mut moved = 0.0f64;
        for j in 0..deg {
            let denom: Complex64 = (0..deg)
                .filter(|&l| l != j)
                .map(|l| z[j] - z[l])
                .product();
            if denom.norm() == 0.0 {
                z[j] += Complex64::new(1e-8, 1e-8);
                moved = f64::INFINITY;
                continue;
            }
            let step = horner(coeffs, z[j]) / denom;
            z[j] -= step;
            moved = moved.max(step.norm() / (1.0 + z[j].norm()));
        }
        if moved < 1e-15 {
            break;
        }
    }
    if let Some(bad) = z.iter().find(|&&x| horner(coeffs, x).norm() >= RESIDUAL_TOL) {
        return Err(Error::NoConvergence(format!(
            "root estimate {bad} has residual {:e}",
            horner(coeffs, *bad).norm()
        )));
    }
    Ok(z)
}

/// Sorts by real part (to 1e-7), then imaginary part.
pub fn sort_spectrum(values: &mut [Complex64]) {
    values.sort_by(|a, b| {
        let ka = (a.re * 1e7).round() as i64;
        let kb = (b.re * 1e7).round() as i64;
        ka.cmp(&kb).then(a.im.total_cmp(&b.im))
    });
}

/// Eigenvalues of a small complex matrix, sorted.
pub fn eigenvalues(m: &ComplexMatrix) -> Result<Vec<Complex64>> {
    let mut roots = polynomial_roots(&characteristic_polynomial(m))?;
    sort_spectrum(&mut roots);
    Ok(roots)
}

pub fn quartic_eigenvalues(m: &ComplexMatrix) -> Result<[Complex64; 4]> {
    if m.n != 4 {
        return Err(Error::BadParams(format!("expected a 4x4 matrix, got {0}x{0}", m.n)));
    }
    let v = eigenvalues(m)?;
    Ok([v[0], v[1], v[2], v[3]])
}

/// Spectrum of `B(ζ^r)` for each `r = 0..q`.
pub fn spectrum_by_root(b: &PolynomialMatrix) -> Result<Vec<Vec<Complex64>>> {
    (0..b.q).map(|r| eigenvalues(&evaluate_at_root(b, r)?)).collect()
}

/// Spectrum of the lift: all `size·q` values, grouped by `r`.
pub fn lift_spectrum(b: &PolynomialMatrix) -> Result<Vec<Complex64>> {
    Ok(spectrum_by_root(b)?.concat())
}

/// Multiset equality up to `tol`, by greedy nearest matching.
pub fn spectra_match(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|x| {
        let best = (0..b.len())
            .filter(|&j| !used[j])
            .min_by(|&i, &j| (b[i] - x).norm().total_cmp(&(b[j] - x).norm()));
        match best {
            Some(j) if (b[j] - x).norm() <= tol => {
                used[j] = true;
                true
            }
            _ => false,
        }
    })
}

/// Four-decimal rendering: `-0.8266+0.7015i`, or `2.0000` for real values.
pub fn format_complex(z: Complex64) -> String {
    let clean = |x: f64| if x.abs() < 5e-5 { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    if im == 0.0 {
        format!("{re:.4}")
    } else {
        format!("{re:.4}{im:+.4}i")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn matrix_entries() {
        let b = bdm5_polynomial_matrix();
        assert_eq!(b.entry(0, 3), &BTreeMap::from([(2, 1)]));
        assert_eq!(b.entry(3, 0), &BTreeMap::from([(1, 1)]));
        assert!(b.entry(1, 1).is_empty());
    }

    #[test]
    fn matrix_matches_base_graph() {
        assert_eq!(
            PolynomialMatrix::from_base(&VoltageBaseGraph::bdm5_base()),
            bdm5_polynomial_matrix()
        );
    }

    #[test]
    fn evaluation_at_roots() {
        let b = bdm5_polynomial_matrix();
        let m0 = evaluate_at_root(&b, 0).unwrap();
        for i in 0..4 {
            let s: Complex64 = (0..4).map(|j| m0.get(i, j)).sum();
            assert!((s - c(2.0, 0.0)).norm() < 1e-12);
        }
        assert!((m0.get(0, 3) - c(1.0, 0.0)).norm() < 1e-12);
        let m1 = evaluate_at_root(&b, 1).unwrap();
        let a = 4.0 * std::f64::consts::PI / 5.0;
        assert!((m1.get(0, 3) - c(a.cos(), a.sin())).norm() < 1e-12);
        assert!(evaluate_at_root(&b, 5).is_err());
    }

    #[test]
    fn triangular_eigenvalues() {
        let m = ComplexMatrix::from_real(
            4,
            &[1.0, 5.0, -2.0, 0.5, 0.0, 2.0, 3.0, 1.0, 0.0, 0.0, 3.0, 7.0, 0.0, 0.0, 0.0, 4.0],
        );
        let v = quartic_eigenvalues(&m).unwrap();
        for (x, want) in v.iter().zip(1..=4) {
            assert!((x - c(want as f64, 0.0)).norm() < 1e-9, "{v:?}");
        }
        assert!(quartic_eigenvalues(&ComplexMatrix::identity(3)).is_err());
    }

    #[test]
    fn untwisted_block() {
        let b = bdm5_polynomial_matrix();
        let v = quartic_eigenvalues(&evaluate_at_root(&b, 0).unwrap()).unwrap();
        let want = [c(-2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)];
        assert!(spectra_match(&v, &want, 1e-6), "{v:?}");
    }

    #[test]
    fn charpoly_of_companion_like_matrix() {
        // [[0,1],[-2,-3]] has characteristic polynomial λ² + 3λ + 2
        let m = ComplexMatrix::from_real(2, &[0.0, 1.0, -2.0, -3.0]);
        let p = characteristic_polynomial(&m);
        assert!((p[0] - c(2.0, 0.0)).norm() < 1e-12);
        assert!((p[1] - c(3.0, 0.0)).norm() < 1e-12);
        assert!((p[2] - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(format_complex(c(-0.82661, 0.70149)), "-0.8266+0.7015i");
        assert_eq!(format_complex(c(2.0, 1e-12)), "2.0000");
        assert_eq!(format_complex(c(-1e-13, 0.0)), "0.0000");
    }
}
