//! Covariants `d2..d10` of a harmonic tensor, the invariants `Jk = tr dk`,
//! their scale-free normalization, and the characteristic / Betten identities.

use nalgebra::SymmetricEigen;

use crate::error::{Error, Result};
use crate::tencore::{symmetrize, ElasticityTensor, Harmonic4, Mat3};

/// The nine symmetric covariant matrices `d2..d10`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CovariantSet {
    d: [Mat3; 9],
}

impl CovariantSet {
    /// `dk` for `k` in `2..=10`.
    pub fn get(&self, k: usize) -> &Mat3 {
        &self.d[k - 2]
    }

    pub fn invariants(&self) -> InvariantVector {
        InvariantVector {
            j: self.d.map(|m| m.trace()),
        }
    }
}

// Symmetric part of a product; traces are unchanged.
fn sym_prod(a: &Mat3, b: &Mat3) -> Mat3 {
    symmetrize(&(a * b))
}

/// Boehler covariants. With `D^2 = D_ijpq D_pqkl` and `(D:x)_ij = D_ijkl x_kl`:
///
/// ```text
/// d2 = tr13(D^2)   d3 = tr13(D^3)   d4 = d2^2   d6 = d2^3
/// d5 = d2 (D:d2)   d7 = d4 (D:d2)   d8 = d4 (D^2:d2)
/// d9 = d4 (D:d4)   d10 = d4 (D^2:d4)
/// ```
///
/// The mixed products are not symmetric in general and are replaced by their
/// symmetric parts.
pub fn covariants(d: &Harmonic4) -> CovariantSet {
    let t = d.tensor4();
    let t2 = t.compose(&t);
    let t3 = t2.compose(&t);
    let d2 = symmetrize(&t2.trace13());
    let d3 = symmetrize(&t3.trace13());
    let d4 = d2 * d2;
    let d5 = sym_prod(&d2, &t.contract(&d2));
    let d6 = d4 * d2;
    let d7 = sym_prod(&d4, &t.contract(&d2));
    let d8 = sym_prod(&d4, &t2.contract(&d2));
    let d9 = sym_prod(&d4, &t.contract(&d4));
    let d10 = sym_prod(&d4, &t2.contract(&d4));
    CovariantSet {
        d: [
            d2,
            d3,
            symmetrize(&d4),
            d5,
            symmetrize(&d6),
            d7,
            d8,
            d9,
            d10,
        ],
    }
}

/// `J2..J10` with `Jk` homogeneous of degree `k` in `D`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InvariantVector {
    j: [f64; 9],
}

impl InvariantVector {
    /// `values[0]` is `J2`.
    pub fn new(values: [f64; 9]) -> Self {
        InvariantVector { j: values }
    }

    pub fn get(&self, k: usize) -> f64 {
        self.j[k - 2]
    }

    pub fn values(&self) -> [f64; 9] {
        self.j
    }

    /// Invariants of `t D`.
    pub fn scaled(&self, t: f64) -> Self {
        InvariantVector {
            j: std::array::from_fn(|i| self.j[i] * t.powi(i as i32 + 2)),
        }
    }

    pub fn normalize(&self, j2_floor: f64) -> Result<NormalizedInvariants> {
        normalize(self, j2_floor)
    }
}

pub fn boehler_invariants(d: &Harmonic4) -> InvariantVector {
    covariants(d).invariants()
}

/// `jk = Jk / J2^(k/2)`; `j2 = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalizedInvariants {
    j: [f64; 9],
    j2: f64,
}

impl NormalizedInvariants {
    pub fn get(&self, k: usize) -> f64 {
        self.j[k - 2]
    }

    pub fn values(&self) -> [f64; 9] {
        self.j
    }

    /// The `J2` that was divided out; `sqrt(J2)` is the linear scale of `D`.
    pub fn j2(&self) -> f64 {
        self.j2
    }

    /// Indexable by invariant degree, `[_, _, j2, ..., j10]`.
    pub(crate) fn by_degree(&self) -> [f64; 11] {
        let mut a = [0.0; 11];
        a[2..].copy_from_slice(&self.j);
        a
    }
}

/// Fails with [`Error::ZeroHarmonic`] when `J2 <= j2_floor`.
pub fn normalize(inv: &InvariantVector, j2_floor: f64) -> Result<NormalizedInvariants> {
    let j2 = inv.get(2);
    if !(j2 > j2_floor.max(0.0)) {
        return Err(Error::ZeroHarmonic);
    }
    let s = j2.sqrt();
    Ok(NormalizedInvariants {
        j: std::array::from_fn(|i| inv.j[i] / s.powi(i as i32 + 2)),
        j2,
    })
}

/// `J2` threshold below which `D` counts as zero: `(tau_zero * scale)^2`, with
/// `scale` the Frobenius norm of the input Kelvin matrix (1 when that is 0).
pub fn zero_threshold(scale: f64, tau_zero: f64) -> f64 {
    let scale = if scale > 0.0 { scale } else { 1.0 };
    (tau_zero * scale).powi(2)
}

/// Coefficients of `chi_D(z) = det(z I - K(D))`, highest degree first.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CharacteristicPolynomial {
    /// From the invariant formula
    /// `z^6 - J2/2 z^4 - J3/3 z^3 + (J2^2 - 2 J4)/5 z^2 + 2 (J2 J3 - 3 J5)/25 z`.
    pub from_invariants: [f64; 7],
    /// From the eigenvalues of the Kelvin matrix.
    pub from_eigenvalues: [f64; 7],
}

impl CharacteristicPolynomial {
    /// Relative mismatch between the two coefficient sets.
    pub fn discrepancy(&self) -> f64 {
        let scale = self
            .from_eigenvalues
            .iter()
            .fold(1.0f64, |s, c| s.max(c.abs()));
        self.from_invariants
            .iter()
            .zip(&self.from_eigenvalues)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
            / scale
    }
}

fn coefficients_from_invariants(j: &InvariantVector) -> [f64; 7] {
    let (j2, j3, j4, j5) = (j.get(2), j.get(3), j.get(4), j.get(5));
    [
        1.0,
        0.0,
        -j2 / 2.0,
        -j3 / 3.0,
        (j2 * j2 - 2.0 * j4) / 5.0,
        2.0 * (j2 * j3 - 3.0 * j5) / 25.0,
        0.0,
    ]
}

fn coefficients_from_roots(roots: &[f64]) -> Vec<f64> {
    let mut c = vec![1.0];
    for r in roots {
        let mut next = c.clone();
        next.push(0.0);
        for (i, ci) in c.iter().enumerate() {
            next[i + 1] -= r * ci;
        }
        c = next;
    }
    c
}

pub fn characteristic_polynomial(d: &Harmonic4) -> CharacteristicPolynomial {
    let eig = SymmetricEigen::new(d.kelvin()).eigenvalues;
    let c = coefficients_from_roots(eig.as_slice());
    CharacteristicPolynomial {
        from_invariants: coefficients_from_invariants(&boehler_invariants(d)),
        from_eigenvalues: std::array::from_fn(|i| c[i]),
    }
}

/// Largest relative gap between `det(K(D) - K(lambda, mu))` and
/// `(3 lambda + 2 mu) chi_r(2 mu)`, `chi_r = chi_D / z`, over `samples`.
pub fn betten_identity_residual(d: &Harmonic4, samples: &[(f64, f64)]) -> f64 {
    let k = d.kelvin();
    let chi = coefficients_from_invariants(&boehler_invariants(d));
    let reduced = &chi[..6];
    let mut worst = 0.0f64;
    for &(lambda, mu) in samples {
        let iso = *ElasticityTensor::isotropic(lambda, mu).kelvin().matrix();
        let lhs = (k - iso).determinant();
        let z = 2.0 * mu;
        let rhs = (3.0 * lambda + 2.0 * mu) * reduced.iter().fold(0.0, |acc, c| acc * z + c);
        // floor keeps near-singular samples (3 lambda + 2 mu ~ 0) meaningful
        let floor = 1e-6 * (k.norm() + iso.norm()).powi(6);
        let denom = lhs.abs().max(rhs.abs()).max(floor).max(f64::MIN_POSITIVE);
        worst = worst.max((lhs - rhs).abs() / denom);
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_tensor_has_zero_covariants() {
        let c = covariants(&Harmonic4::zero());
        for k in 2..=10 {
            assert_eq!(*c.get(k), Mat3::zeros());
        }
    }

    #[test]
    fn cubic_slice_values() {
        let j = boehler_invariants(&Harmonic4::cubic(1.0)).values();
        let want = [480.0, 1920.0, 76800.0, 0.0, 12288000.0, 0.0, 0.0, 0.0, 0.0];
        for (a, b) in j.iter().zip(want) {
            assert!((a - b).abs() <= 1e-10 * b.abs().max(1.0), "{a} vs {b}");
        }
    }

    #[test]
    fn normalize_rejects_zero() {
        let j = boehler_invariants(&Harmonic4::zero());
        assert_eq!(normalize(&j, 0.0), Err(Error::ZeroHarmonic));
    }

    #[test]
    fn normalized_cubic_j3() {
        let n = boehler_invariants(&Harmonic4::cubic(1.0))
            .normalize(0.0)
            .unwrap();
        assert!((n.get(3) - 1920.0 / 480f64.powf(1.5)).abs() < 1e-15);
        assert!((n.get(3) - 0.182574).abs() < 1e-6);
    }

    #[test]
    fn zero_tensor_char_poly() {
        let p = characteristic_polynomial(&Harmonic4::zero());
        assert_eq!(p.from_invariants, [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn betten_zero_tensor_unit_lame() {
        // det(-K(1,1)) = 5 * 2^5 and chi_r(z) = z^5
        let k = -*ElasticityTensor::isotropic(1.0, 1.0).kelvin().matrix();
        assert!((k.determinant() - 160.0).abs() < 1e-12);
        assert!(betten_identity_residual(&Harmonic4::zero(), &[(1.0, 1.0)]) < 1e-15);
    }
}
