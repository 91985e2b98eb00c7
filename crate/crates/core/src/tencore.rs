//! Tensor data model: Voigt and Kelvin encodings, the rotation action and the
//! harmonic decomposition `C = (lambda, mu, a, b, D)`.

use std::f64::consts::SQRT_2;

use nalgebra::{Matrix3, Matrix6, Unit, Vector3};
use rand::Rng;

use crate::error::{Error, Result};

pub type Mat3 = Matrix3<f64>;
pub type Mat6 = Matrix6<f64>;
pub type Vec3 = Vector3<f64>;

/// Default tolerance for rotation validity checks.
pub const ROTATION_TOL: f64 = 1e-10;
/// Relative trace allowed on a deviator before it is rejected instead of projected.
pub const TRACE_TOL: f64 = 1e-10;

const VOIGT_PAIRS: [(usize, usize); 6] = [(0, 0), (1, 1), (2, 2), (1, 2), (0, 2), (0, 1)];

/// Voigt position (0-based) of the symmetric index pair `(i, j)`.
pub fn voigt_index(i: usize, j: usize) -> usize {
    if i == j {
        i
    } else {
        6 - i - j
    }
}

/// Index pair (0-based) behind a Voigt position.
pub fn voigt_pair(m: usize) -> (usize, usize) {
    VOIGT_PAIRS[m]
}

fn packed(m: usize, n: usize) -> usize {
    let (m, n) = if m <= n { (m, n) } else { (n, m) };
    // rows above m hold 6, 5, ... entries
    6 * m - m * m.saturating_sub(1) / 2 + (n - m)
}

pub fn deviatoric(a: &Mat3) -> Mat3 {
    a - Mat3::identity() * (a.trace() / 3.0)
}

pub(crate) fn symmetrize(a: &Mat3) -> Mat3 {
    (a + a.transpose()) * 0.5
}

fn asymmetry(m: &[f64], dim: usize, rel_tol: f64) -> Option<Error> {
    let scale = m.iter().fold(0.0f64, |s, x| s.max(x.abs()));
    for i in 0..dim {
        for j in i + 1..dim {
            let (u, l) = (m[i * dim + j], m[j * dim + i]);
            if (u - l).abs() > rel_tol * scale {
                return Some(Error::Asymmetric {
                    row: i + 1,
                    col: j + 1,
                    upper: u,
                    lower: l,
                });
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Fourth-order tensors

/// Dense 3x3x3x3 array, no symmetry assumed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tensor4(pub [[[[f64; 3]; 3]; 3]; 3]);

impl Default for Tensor4 {
    fn default() -> Self {
        Tensor4([[[[0.0; 3]; 3]; 3]; 3])
    }
}

impl Tensor4 {
    pub fn from_fn(f: impl Fn(usize, usize, usize, usize) -> f64) -> Self {
        let mut t = Tensor4::default();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        t.0[i][j][k][l] = f(i, j, k, l);
                    }
                }
            }
        }
        t
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        self.0[i][j][k][l]
    }

    pub fn norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .flatten()
            .flatten()
            .map(|x| x * x)
            .sum::<f64>()
            .sqrt()
    }

    pub fn sub(&self, other: &Tensor4) -> Tensor4 {
        Tensor4::from_fn(|i, j, k, l| self.get(i, j, k, l) - other.get(i, j, k, l))
    }

    /// `T'_ijkl = g_ip g_jq g_kr g_ls T_pqrs`, one index at a time.
    pub fn rotate(&self, g: &Mat3) -> Tensor4 {
        let mut src = *self;
        for slot in 0..4 {
            let mut dst = Tensor4::default();
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        for l in 0..3 {
                            let idx = [i, j, k, l];
                            let mut s = 0.0;
                            for p in 0..3 {
                                let mut q = idx;
                                q[slot] = p;
                                s += g[(idx[slot], p)] * src.0[q[0]][q[1]][q[2]][q[3]];
                            }
                            dst.0[i][j][k][l] = s;
                        }
                    }
                }
            }
            src = dst;
        }
        src
    }

    /// `(T : x)_ij = T_ijkl x_kl`.
    pub fn contract(&self, x: &Mat3) -> Mat3 {
        Mat3::from_fn(|i, j| {
            let mut s = 0.0;
            for k in 0..3 {
                for l in 0..3 {
                    s += self.0[i][j][k][l] * x[(k, l)];
                }
            }
            s
        })
    }

    /// `(A B)_ijkl = A_ijpq B_pqkl`.
    pub fn compose(&self, other: &Tensor4) -> Tensor4 {
        Tensor4::from_fn(|i, j, k, l| {
            let mut s = 0.0;
            for p in 0..3 {
                for q in 0..3 {
                    s += self.0[i][j][p][q] * other.0[p][q][k][l];
                }
            }
            s
        })
    }

    /// `tr13(T)_ij = T_kikj`.
    pub fn trace13(&self) -> Mat3 {
        Mat3::from_fn(|i, j| (0..3).map(|k| self.0[k][i][k][j]).sum())
    }
}

// ---------------------------------------------------------------------------
// Rotations

/// Proper orthogonal 3x3 matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rotation(Mat3);

impl Rotation {
    pub fn new(g: Mat3) -> Result<Self> {
        Self::with_tolerance(g, ROTATION_TOL)
    }

    pub fn with_tolerance(g: Mat3, tol: f64) -> Result<Self> {
        let orthogonality = (g.transpose() * g - Mat3::identity()).norm();
        let determinant = g.determinant();
        if orthogonality > tol || (determinant - 1.0).abs() > tol {
            return Err(Error::InvalidRotation {
                orthogonality,
                determinant,
            });
        }
        Ok(Rotation(g))
    }

    pub fn identity() -> Self {
        Rotation(Mat3::identity())
    }

    pub fn from_axis_angle(axis: &Vec3, angle: f64) -> Self {
        let r = nalgebra::Rotation3::from_axis_angle(&Unit::new_normalize(*axis), angle);
        Rotation(*r.matrix())
    }

    /// Haar-uniform rotation (Shoemake's subgroup algorithm).
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let (u1, u2, u3): (f64, f64, f64) = (rng.gen(), rng.gen(), rng.gen());
        let tau = std::f64::consts::TAU;
        let (a, b) = ((1.0 - u1).sqrt(), u1.sqrt());
        let q = nalgebra::Quaternion::new(
            b * (tau * u3).cos(),
            a * (tau * u2).sin(),
            a * (tau * u2).cos(),
            b * (tau * u3).sin(),
        );
        let r = nalgebra::UnitQuaternion::from_quaternion(q).to_rotation_matrix();
        Rotation(*r.matrix())
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.0
    }

    pub fn inverse(&self) -> Rotation {
        Rotation(self.0.transpose())
    }

    pub fn compose(&self, other: &Rotation) -> Rotation {
        Rotation(self.0 * other.0)
    }

    /// `g a g^T`.
    pub fn conjugate(&self, a: &Mat3) -> Mat3 {
        self.0 * a * self.0.transpose()
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        self.0 * v
    }
}

// ---------------------------------------------------------------------------
// Second-order harmonic parts

/// Symmetric traceless 3x3 matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Deviator(Mat3);

impl Deviator {
    /// Accepts `a` if symmetric and traceless up to rounding; a residual trace
    /// below `1e-10 * |a|` is projected out.
    pub fn new(a: Mat3) -> Result<Self> {
        if let Some(e) = asymmetry(a.transpose().as_slice(), 3, TRACE_TOL) {
            return Err(e);
        }
        let norm = a.norm();
        let trace = a.trace();
        if trace.abs() > TRACE_TOL * norm {
            return Err(Error::NotTraceless { trace, norm });
        }
        Ok(Deviator(deviatoric(&symmetrize(&a))))
    }

    /// Symmetric traceless part of any matrix.
    pub fn project(a: &Mat3) -> Self {
        Deviator(deviatoric(&symmetrize(a)))
    }

    pub fn zero() -> Self {
        Deviator(Mat3::zeros())
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.0
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn rotate(&self, g: &Rotation) -> Self {
        Deviator(g.conjugate(&self.0))
    }
}

// ---------------------------------------------------------------------------
// Fourth-order harmonic part

// Totally symmetric component with index multiplicities (n1, n2, n3), n1+n2+n3 = 4.
fn harmonic_component(h: &[f64; 9], n: [usize; 3]) -> f64 {
    let [h1, h2, h3, h4, h5, h6, h7, h8, h9] = *h;
    match n {
        [4, 0, 0] => -h8 - h9,
        [0, 4, 0] => -h9 - h7,
        [0, 0, 4] => -h8 - h7,
        [2, 2, 0] => h9,
        [2, 0, 2] => h8,
        [0, 2, 2] => h7,
        [3, 1, 0] => h1,
        [3, 0, 1] => h2,
        [1, 3, 0] => h3,
        [1, 0, 3] => h4,
        [0, 3, 1] => h5,
        [0, 1, 3] => h6,
        [2, 1, 1] => -h5 - h6,
        [1, 2, 1] => -h2 - h4,
        [1, 1, 2] => -h1 - h3,
        _ => unreachable!("index multiplicities must sum to 4"),
    }
}

fn multiplicities(idx: [usize; 4]) -> [usize; 3] {
    let mut n = [0; 3];
    for i in idx {
        n[i] += 1;
    }
    n
}

/// Element of H^4 in the nine-parameter chart `h1..h9`:
///
/// | h1 | h2 | h3 | h4 | h5 | h6 | h7 | h8 | h9 |
/// |----|----|----|----|----|----|----|----|----|
/// | D1112 | D1113 | D2212 | D3313 | D2223 | D3323 | D2233 | D1133 | D1122 |
///
/// The remaining components follow from total symmetry and tracelessness.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Harmonic4 {
    h: [f64; 9],
}

impl Harmonic4 {
    pub fn from_h(h: [f64; 9]) -> Self {
        Harmonic4 { h }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn h(&self) -> [f64; 9] {
        self.h
    }

    pub fn component(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        harmonic_component(&self.h, multiplicities([i, j, k, l]))
    }

    pub fn tensor4(&self) -> Tensor4 {
        Tensor4::from_fn(|i, j, k, l| self.component(i, j, k, l))
    }

    /// Reads the chart coordinates off a full tensor and checks that the
    /// tensor really is harmonic, relative to its norm.
    pub fn from_tensor4(t: &Tensor4, rel_tol: f64) -> Result<Self> {
        let d = Self::from_tensor4_unchecked(t);
        let defect = t.sub(&d.tensor4()).norm();
        if defect > rel_tol * t.norm() {
            return Err(Error::NotHarmonic { defect });
        }
        Ok(d)
    }

    pub(crate) fn from_tensor4_unchecked(t: &Tensor4) -> Self {
        let g = |i: usize, j: usize, k: usize, l: usize| t.get(i, j, k, l);
        Harmonic4 {
            h: [
                g(0, 0, 0, 1),
                g(0, 0, 0, 2),
                g(1, 1, 0, 1),
                g(2, 2, 0, 2),
                g(1, 1, 1, 2),
                g(2, 2, 1, 2),
                g(1, 1, 2, 2),
                g(0, 0, 2, 2),
                g(0, 0, 1, 1),
            ],
        }
    }

    /// Kelvin 6x6 view `[[D11, sqrt2 D12], [sqrt2 D12^T, 2 D22]]`.
    pub fn kelvin(&self) -> Mat6 {
        let t = self.tensor4();
        kelvin_of(|m, n| {
            let (i, j) = VOIGT_PAIRS[m];
            let (k, l) = VOIGT_PAIRS[n];
            t.get(i, j, k, l)
        })
    }

    pub fn norm(&self) -> f64 {
        self.tensor4().norm()
    }

    pub fn scale(&self, t: f64) -> Self {
        Harmonic4 {
            h: self.h.map(|x| t * x),
        }
    }

    pub fn rotate(&self, g: &Rotation) -> Self {
        Self::from_tensor4_unchecked(&self.tensor4().rotate(g.matrix()))
    }

    /// Cubic normal form, axes along the frame.
    pub fn cubic(delta: f64) -> Self {
        let e = -4.0 * delta;
        Self::from_h([0.0, 0.0, 0.0, 0.0, 0.0, 0.0, e, e, e])
    }

    /// Transversely isotropic normal form, axis `e3`.
    pub fn transverse(delta: f64) -> Self {
        let e = -4.0 * delta;
        Self::from_h([0.0, 0.0, 0.0, 0.0, 0.0, 0.0, e, e, delta])
    }

    /// Trigonal normal form, three-fold axis `e3`.
    pub fn trigonal(delta: f64, sigma: f64) -> Self {
        let e = -4.0 * delta;
        Self::from_h([0.0, 0.0, 0.0, 0.0, sigma, 0.0, e, e, delta])
    }

    /// Tetragonal normal form, four-fold axis `e3`.
    pub fn tetragonal(delta: f64, sigma: f64) -> Self {
        let e = -4.0 * delta;
        Self::from_h([0.0, 0.0, 0.0, 0.0, 0.0, 0.0, e, e, sigma + delta])
    }

    /// Orthotropic normal form; `lambda[i]` is the coefficient paired with axis `i`.
    pub fn orthotropic(lambda: [f64; 3]) -> Self {
        let [l1, l2, l3] = lambda;
        Self::from_h([0.0, 0.0, 0.0, 0.0, 0.0, 0.0, l1, l2, l3])
    }
}

fn kelvin_weight(m: usize, n: usize) -> f64 {
    match (m >= 3, n >= 3) {
        (false, false) => 1.0,
        (true, true) => 2.0,
        _ => SQRT_2,
    }
}

fn kelvin_of(f: impl Fn(usize, usize) -> f64) -> Mat6 {
    Mat6::from_fn(|m, n| kelvin_weight(m, n) * f(m, n))
}

// Undo a sqrt(2) weight. The plain quotient can land one ulp off, and
// multiplication by sqrt(2) is not injective, so among the neighbours that
// map back onto `k` the one with the shortest mantissa wins. Short-mantissa
// inputs (integers, few-digit data) then survive the round trip exactly.
fn unweight_sqrt2(k: f64) -> f64 {
    let c = k / SQRT_2;
    [c, c.next_up(), c.next_down()]
        .into_iter()
        .filter(|x| x * SQRT_2 == k)
        .max_by_key(|x| x.to_bits().trailing_zeros())
        .unwrap_or(c)
}

// ---------------------------------------------------------------------------
// Elasticity tensors

/// Kelvin (Mandel) matrix: a symmetric operator on symmetric 3x3 matrices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KelvinMatrix(Mat6);

impl KelvinMatrix {
    pub fn new(m: Mat6, rel_tol: f64) -> Result<Self> {
        if let Some(e) = asymmetry(m.transpose().as_slice(), 6, rel_tol) {
            return Err(e);
        }
        Ok(KelvinMatrix(m))
    }

    pub fn matrix(&self) -> &Mat6 {
        &self.0
    }
}

/// The 21 independent stiffness components, stored as the upper triangle of
/// the Voigt matrix, row by row.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ElasticityTensor {
    c: [f64; 21],
}

impl ElasticityTensor {
    pub fn from_components(c: [f64; 21]) -> Self {
        ElasticityTensor { c }
    }

    pub fn components(&self) -> [f64; 21] {
        self.c
    }

    /// Builds from a Voigt matrix, rejecting asymmetry above `rel_tol * max|c|`.
    pub fn from_voigt(m: &Mat6, rel_tol: f64) -> Result<Self> {
        if let Some(e) = asymmetry(m.transpose().as_slice(), 6, rel_tol) {
            return Err(e);
        }
        let mut c = [0.0; 21];
        for mm in 0..6 {
            for n in mm..6 {
                c[packed(mm, n)] = 0.5 * (m[(mm, n)] + m[(n, mm)]);
            }
        }
        Ok(ElasticityTensor { c })
    }

    #[inline]
    pub fn voigt_entry(&self, m: usize, n: usize) -> f64 {
        self.c[packed(m, n)]
    }

    pub fn voigt(&self) -> Mat6 {
        Mat6::from_fn(|m, n| self.voigt_entry(m, n))
    }

    pub fn kelvin(&self) -> KelvinMatrix {
        KelvinMatrix(kelvin_of(|m, n| self.voigt_entry(m, n)))
    }

    pub fn from_kelvin(k: &KelvinMatrix) -> Self {
        let mut c = [0.0; 21];
        for m in 0..6 {
            for n in m..6 {
                let x = k.0[(m, n)];
                c[packed(m, n)] = match (m >= 3, n >= 3) {
                    (false, false) => x,
                    (true, true) => x / 2.0,
                    _ => unweight_sqrt2(x),
                };
            }
        }
        ElasticityTensor { c }
    }

    /// `lambda d_ij d_kl + mu (d_ik d_jl + d_il d_jk)`.
    pub fn isotropic(lambda: f64, mu: f64) -> Self {
        let mut c = [0.0; 21];
        for m in 0..3 {
            for n in m..3 {
                c[packed(m, n)] = if m == n { lambda + 2.0 * mu } else { lambda };
            }
        }
        for m in 3..6 {
            c[packed(m, m)] = mu;
        }
        ElasticityTensor { c }
    }

    pub fn component(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        self.voigt_entry(voigt_index(i, j), voigt_index(k, l))
    }

    pub fn tensor4(&self) -> Tensor4 {
        Tensor4::from_fn(|i, j, k, l| self.component(i, j, k, l))
    }

    /// Averages over the minor/major symmetric copies of each component.
    pub fn from_tensor4(t: &Tensor4) -> Self {
        let mut c = [0.0; 21];
        for m in 0..6 {
            for n in m..6 {
                let (i, j) = VOIGT_PAIRS[m];
                let (k, l) = VOIGT_PAIRS[n];
                let copies = [
                    t.get(i, j, k, l),
                    t.get(j, i, k, l),
                    t.get(i, j, l, k),
                    t.get(j, i, l, k),
                    t.get(k, l, i, j),
                    t.get(l, k, i, j),
                    t.get(k, l, j, i),
                    t.get(l, k, j, i),
                ];
                // pairwise sum keeps exactly symmetric input exact
                let pair = |a: f64, b: f64| a + b;
                let s = pair(
                    pair(pair(copies[0], copies[1]), pair(copies[2], copies[3])),
                    pair(pair(copies[4], copies[5]), pair(copies[6], copies[7])),
                );
                c[packed(m, n)] = s / 8.0;
            }
        }
        ElasticityTensor { c }
    }

    pub fn rotate(&self, g: &Rotation) -> Self {
        Self::from_tensor4(&self.tensor4().rotate(g.matrix()))
    }

    /// Frobenius norm of the full tensor (equal to that of the Kelvin matrix).
    pub fn norm(&self) -> f64 {
        self.kelvin().0.norm()
    }

    /// Dilatation `d_ij = C_kkij` and Voigt `v_ij = C_kikj` tensors.
    pub fn dilatation_voigt(&self) -> (Mat3, Mat3) {
        let d = Mat3::from_fn(|i, j| (0..3).map(|k| self.component(k, k, i, j)).sum());
        let v = Mat3::from_fn(|i, j| (0..3).map(|k| self.component(k, i, k, j)).sum());
        (d, v)
    }

    pub fn decompose(&self) -> HarmonicDecomposition {
        let (d, v) = self.dilatation_voigt();
        let (trd, trv) = (d.trace(), v.trace());
        let lambda = (2.0 * trd - trv) / 15.0;
        let mu = (-trd + 3.0 * trv) / 30.0;
        let (dd, dv) = (deviatoric(&d), deviatoric(&v));
        let a = Deviator::project(&((dd * 5.0 - dv * 4.0) / 7.0));
        let b = Deviator::project(&((dd * -2.0 + dv * 3.0) / 7.0));
        let lower = lower_order_tensor(lambda, mu, a.matrix(), b.matrix());
        let rest = self.tensor4().sub(&lower);
        HarmonicDecomposition {
            lambda,
            mu,
            a,
            b,
            d: Harmonic4::from_tensor4_unchecked(&rest),
        }
    }
}

fn lower_order_tensor(lambda: f64, mu: f64, a: &Mat3, b: &Mat3) -> Tensor4 {
    let q = |i: usize, j: usize| if i == j { 1.0 } else { 0.0 };
    Tensor4::from_fn(|i, j, k, l| {
        lambda * q(i, j) * q(k, l)
            + mu * (q(i, k) * q(j, l) + q(i, l) * q(j, k))
            + q(i, j) * a[(k, l)]
            + q(k, l) * a[(i, j)]
            + q(i, k) * b[(j, l)]
            + q(j, l) * b[(i, k)]
            + q(i, l) * b[(j, k)]
            + q(j, k) * b[(i, l)]
    })
}

/// `(lambda, mu, a, b, D)` with `C = lambda q(x)q + 2 mu I + q(x)a + a(x)q + b-terms + D`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HarmonicDecomposition {
    pub lambda: f64,
    pub mu: f64,
    pub a: Deviator,
    pub b: Deviator,
    pub d: Harmonic4,
}

impl HarmonicDecomposition {
    pub fn recompose(&self) -> ElasticityTensor {
        let low = lower_order_tensor(self.lambda, self.mu, self.a.matrix(), self.b.matrix());
        let d = self.d.tensor4();
        ElasticityTensor::from_tensor4(&Tensor4::from_fn(|i, j, k, l| {
            low.get(i, j, k, l) + d.get(i, j, k, l)
        }))
    }

    pub fn rotate(&self, g: &Rotation) -> Self {
        HarmonicDecomposition {
            lambda: self.lambda,
            mu: self.mu,
            a: self.a.rotate(g),
            b: self.b.rotate(g),
            d: self.d.rotate(g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_tensor(rng: &mut impl Rng) -> ElasticityTensor {
        ElasticityTensor::from_components(std::array::from_fn(|_| rng.gen_range(-1.0..1.0)))
    }

    #[test]
    fn packed_layout_is_row_major_upper_triangle() {
        let mut seen = vec![];
        for m in 0..6 {
            for n in m..6 {
                seen.push(packed(m, n));
            }
        }
        assert_eq!(seen, (0..21).collect::<Vec<_>>());
        assert_eq!(packed(4, 1), packed(1, 4));
    }

    #[test]
    fn voigt_index_follows_nine_minus_rule() {
        // 1-based: alpha(i, j) = 9 - (i + j) off the diagonal
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { i + 1 } else { 9 - (i + 1) - (j + 1) };
                assert_eq!(voigt_index(i, j) + 1, expect);
            }
        }
    }

    #[test]
    fn isotropic_kelvin_blocks() {
        let k = *ElasticityTensor::isotropic(1.0, 1.0).kelvin().matrix();
        for m in 0..3 {
            for n in 0..3 {
                assert_eq!(k[(m, n)], if m == n { 3.0 } else { 1.0 });
            }
        }
        for m in 3..6 {
            assert_eq!(k[(m, m)], 2.0);
        }
    }

    #[test]
    fn single_c14_gets_sqrt2() {
        let mut c = [0.0; 21];
        c[packed(0, 3)] = 1.0;
        let k = *ElasticityTensor::from_components(c).kelvin().matrix();
        assert_eq!(k[(0, 3)], SQRT_2);
        assert_eq!(k[(3, 0)], SQRT_2);
        assert_eq!(k.iter().filter(|x| **x != 0.0).count(), 2);
    }

    #[test]
    fn kelvin_round_trip_on_integers_is_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let c = ElasticityTensor::from_components(std::array::from_fn(|_| {
                rng.gen_range(-1000i32..1000) as f64
            }));
            assert_eq!(ElasticityTensor::from_kelvin(&c.kelvin()), c);
        }
    }

    #[test]
    fn kelvin_round_trip_on_random_reals_within_one_ulp() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..1000 {
            let c = random_tensor(&mut rng);
            let back = ElasticityTensor::from_kelvin(&c.kelvin());
            for (x, y) in c.components().iter().zip(back.components()) {
                assert!(*x == y || x.next_up() == y || x.next_down() == y);
            }
        }
    }

    #[test]
    fn kelvin_is_an_isometry() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let c = random_tensor(&mut rng);
        let eps = symmetrize(&Mat3::from_fn(|_, _| rng.gen_range(-1.0..1.0)));
        let stress = c.tensor4().contract(&eps);
        let lhs = (stress * eps).trace();
        let e6 = nalgebra::Vector6::from_fn(|m, _| {
            let (i, j) = VOIGT_PAIRS[m];
            let w = if m < 3 { 1.0 } else { SQRT_2 };
            w * eps[(i, j)]
        });
        let rhs = e6.dot(&(c.kelvin().matrix() * e6));
        assert!((lhs - rhs).abs() <= 1e-14 * lhs.abs().max(1.0));
    }

    #[test]
    fn rotation_rejects_reflections_and_shears() {
        let reflect = Mat3::from_diagonal(&Vec3::new(1.0, 1.0, -1.0));
        assert!(matches!(
            Rotation::new(reflect),
            Err(Error::InvalidRotation { .. })
        ));
        let mut shear = Mat3::identity();
        shear[(0, 1)] = 1e-6;
        assert!(Rotation::new(shear).is_err());
    }

    #[test]
    fn identity_rotation_is_a_no_op() {
        let c = random_tensor(&mut ChaCha8Rng::seed_from_u64(6));
        assert_eq!(c.rotate(&Rotation::identity()), c);
    }

    #[test]
    fn isotropic_dilatation_and_voigt() {
        let (d, v) = ElasticityTensor::isotropic(1.0, 1.0).dilatation_voigt();
        assert_eq!(d, Mat3::identity() * 5.0);
        assert_eq!(v, Mat3::identity() * 5.0);
    }

    #[test]
    fn harmonic_chart_is_harmonic() {
        let d = Harmonic4::from_h(std::array::from_fn(|i| (i as f64 + 1.0) * 0.37 - 1.2));
        let t = d.tensor4();
        for i in 0..3 {
            for j in 0..3 {
                let tr: f64 = (0..3).map(|k| t.get(k, k, i, j)).sum();
                assert!(tr.abs() < 1e-14);
            }
        }
        assert_eq!(Harmonic4::from_tensor4(&t, 1e-12).unwrap(), d);
        // D annihilates the metric
        let kq = d.kelvin() * nalgebra::Vector6::new(1.0, 1.0, 1.0, 0.0, 0.0, 0.0);
        assert!(kq.norm() < 1e-14);
    }

    #[test]
    fn kelvin_blocks_match_chart() {
        let h: [f64; 9] =
            std::array::from_fn(|i| [2.0, -3.0, 5.0, 7.0, -11.0, 13.0, 1.0, -4.0, 6.0][i]);
        let [h1, h2, h3, h4, h5, h6, h7, h8, h9] = h;
        let k = Harmonic4::from_h(h).kelvin();
        let d11 = [[-h9 - h8, h9, h8], [h9, -h9 - h7, h7], [h8, h7, -h8 - h7]];
        let d12 = [[-h5 - h6, h2, h1], [h5, -h2 - h4, h3], [h6, h4, -h1 - h3]];
        let d22 = [
            [h7, -h1 - h3, -h2 - h4],
            [-h1 - h3, h8, -h5 - h6],
            [-h2 - h4, -h5 - h6, h9],
        ];
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(k[(r, c)], d11[r][c]);
                assert!((k[(r, c + 3)] - SQRT_2 * d12[r][c]).abs() < 1e-14);
                assert!((k[(c + 3, r)] - SQRT_2 * d12[r][c]).abs() < 1e-14);
                assert!((k[(r + 3, c + 3)] - 2.0 * d22[r][c]).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn from_tensor4_rejects_non_harmonic() {
        let t = ElasticityTensor::isotropic(1.0, 0.0).tensor4();
        assert!(matches!(
            Harmonic4::from_tensor4(&t, 1e-10),
            Err(Error::NotHarmonic { .. })
        ));
    }

    #[test]
    fn deviator_projection_and_rejection() {
        let mut a = Mat3::from_diagonal(&Vec3::new(1.0, -1.0, 1e-14));
        assert!(Deviator::new(a).unwrap().matrix().trace().abs() < 1e-16);
        a[(2, 2)] = 0.5;
        assert!(matches!(Deviator::new(a), Err(Error::NotTraceless { .. })));
        let mut s = Mat3::zeros();
        s[(0, 1)] = 1.0;
        assert!(matches!(
            Deviator::new(s),
            Err(Error::Asymmetric { row: 1, col: 2, .. })
        ));
    }

    #[test]
    fn decompose_isotropic() {
        let p = ElasticityTensor::isotropic(2.0, 3.0).decompose();
        assert!((p.lambda - 2.0).abs() < 1e-14 && (p.mu - 3.0).abs() < 1e-14);
        assert!(p.a.norm() < 1e-14 && p.b.norm() < 1e-14 && p.d.norm() < 1e-14);
    }

    #[test]
    fn recompose_unit_isotropic() {
        let parts = HarmonicDecomposition {
            lambda: 1.0,
            mu: 1.0,
            a: Deviator::zero(),
            b: Deviator::zero(),
            d: Harmonic4::zero(),
        };
        let c = parts.recompose();
        assert_eq!(c.voigt_entry(0, 0), 3.0);
        assert_eq!(c.voigt_entry(0, 1), 1.0);
        assert_eq!(c.voigt_entry(3, 3), 1.0);
    }

    #[test]
    fn pure_a_round_trip() {
        let a = Deviator::new(Mat3::from_diagonal(&Vec3::new(1.0, -1.0, 0.0))).unwrap();
        let parts = HarmonicDecomposition {
            lambda: 0.0,
            mu: 0.0,
            a,
            b: Deviator::zero(),
            d: Harmonic4::zero(),
        };
        let back = parts.recompose().decompose();
        assert!((back.a.matrix() - a.matrix()).norm() < 1e-15);
        assert!(back.lambda.abs() < 1e-15 && back.mu.abs() < 1e-15);
        assert!(back.b.norm() < 1e-15 && back.d.norm() < 1e-15);
    }

    #[test]
    fn harmonic_part_has_no_traces() {
        let d = Harmonic4::from_h([0.3, -1.0, 0.2, 0.5, 0.9, -0.4, 1.1, 0.7, -0.8]);
        let c = HarmonicDecomposition {
            lambda: 0.0,
            mu: 0.0,
            a: Deviator::zero(),
            b: Deviator::zero(),
            d,
        }
        .recompose();
        let (dd, vv) = c.dilatation_voigt();
        assert!(dd.norm() < 1e-15 && vv.norm() < 1e-15);
    }
}
