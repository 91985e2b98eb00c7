//! Symmetry classes of tuples of quadratic forms, the Hermite root count for
//! symmetric 3x3 matrices, and the Cowin-Mehrabadi symmetry-plane test.

use std::cmp::Ordering;
use std::fmt;

use nalgebra::SymmetricEigen;

use crate::error::{Error, Result};
use crate::tencore::{deviatoric, ElasticityTensor, Mat3, Rotation, Vec3};

/// Forms together with the reference magnitude their zero tests are measured
/// against. A form built from a larger object (say the deviator `a` of a
/// stiffness tensor `C`) should carry that object's scale, not its own norm.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadTuple {
    forms: Vec<Mat3>,
    scales: Vec<f64>,
}

impl QuadTuple {
    /// Each form is its own scale.
    pub fn new(forms: Vec<Mat3>) -> Self {
        let scales = forms.iter().map(|f| f.norm()).collect();
        QuadTuple { forms, scales }
    }

    pub fn with_scales(forms: Vec<(Mat3, f64)>) -> Self {
        let (forms, scales) = forms.into_iter().unzip();
        QuadTuple { forms, scales }
    }

    pub fn forms(&self) -> &[Mat3] {
        &self.forms
    }

    pub fn push(&mut self, form: Mat3, scale: f64) {
        self.forms.push(form);
        self.scales.push(scale);
    }

    pub fn rotate(&self, g: &Rotation) -> Self {
        QuadTuple {
            forms: self.forms.iter().map(|f| g.conjugate(f)).collect(),
            scales: self.scales.clone(),
        }
    }
}

/// Isotropy class of a tuple, with a witness frame where one exists.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TupleClass {
    Trivial,
    /// Common eigenvector `normal` of every form.
    Z2 {
        normal: Vec3,
    },
    /// Common eigenframe (columns).
    D2 {
        frame: Mat3,
    },
    /// Common uniaxial axis.
    O2 {
        axis: Vec3,
    },
    SO3,
}

impl TupleClass {
    /// Position in the total order `1 < Z2 < D2 < O(2) < SO(3)`.
    pub fn rank(&self) -> u8 {
        match self {
            TupleClass::Trivial => 0,
            TupleClass::Z2 { .. } => 1,
            TupleClass::D2 { .. } => 2,
            TupleClass::O2 { .. } => 3,
            TupleClass::SO3 => 4,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TupleClass::Trivial => "1",
            TupleClass::Z2 { .. } => "Z2",
            TupleClass::D2 { .. } => "D2",
            TupleClass::O2 { .. } => "O(2)",
            TupleClass::SO3 => "SO(3)",
        }
    }

    pub fn cmp_rank(&self, other: &TupleClass) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for TupleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `w` with `ab - ba = j(w)`, where `j(w) x = w x x`.
pub fn commutator_vector(a: &Mat3, b: &Mat3) -> Vec3 {
    let s = a * b - b * a;
    Vec3::new(s[(2, 1)], s[(0, 2)], s[(1, 0)])
}

/// Hermite count of distinct roots of `x^3 - s1 x^2 + s2 x - s3`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HermiteCount {
    pub distinct: u8,
    /// False when two roots are complex conjugate.
    pub real: bool,
    pub delta2: f64,
    pub delta3: f64,
}

/// Root-count from `Delta2 = 2 s1^2 - 6 s2` and the discriminant
/// `Delta3 = -27 s3^2 + (18 s1 s2 - 4 s1^3) s3 - 4 s2^3 + s1^2 s2^2`.
/// Zero tests are relative to the root scale `max(|s1|, |s2|^(1/2), |s3|^(1/3))`.
pub fn hermite_distinct_roots(s1: f64, s2: f64, s3: f64, tol: f64) -> HermiteCount {
    let delta2 = 2.0 * s1 * s1 - 6.0 * s2;
    let delta3 = -27.0 * s3 * s3 + (18.0 * s1 * s2 - 4.0 * s1.powi(3)) * s3 - 4.0 * s2.powi(3)
        + s1 * s1 * s2 * s2;
    let r = s1.abs().max(s2.abs().sqrt()).max(s3.abs().cbrt());
    let zero2 = delta2.abs() <= tol * r * r;
    let zero3 = delta3.abs() <= tol * r.powi(6);
    let (distinct, real) = if zero3 {
        (if zero2 { 1 } else { 2 }, true)
    } else {
        (3, delta3 > 0.0)
    };
    HermiteCount {
        distinct,
        real,
        delta2,
        delta3,
    }
}

/// Same count for the eigenvalues of a symmetric matrix.
pub fn hermite_for_matrix(a: &Mat3, tol: f64) -> HermiteCount {
    let s1 = a.trace();
    let s2 = 0.5 * (s1 * s1 - (a * a).trace());
    hermite_distinct_roots(s1, s2, a.determinant(), tol)
}

struct Nonzero {
    dev: Mat3,
    norm: f64,
}

fn uniaxial(a: &Nonzero, tol: f64) -> bool {
    // [tr a^2]^3 = 6 [tr a^3]^2 iff the deviator has a double eigenvalue
    let t2 = (a.dev * a.dev).trace();
    let t3 = (a.dev * a.dev * a.dev).trace();
    (t2.powi(3) - 6.0 * t3 * t3).abs() <= tol * t2.powi(3)
}

fn parallel(a: &Nonzero, b: &Nonzero, tol: f64) -> bool {
    let ab = (a.dev * b.dev).trace();
    let (aa, bb) = (a.norm * a.norm, b.norm * b.norm);
    (ab * ab - aa * bb).abs() <= tol * aa * bb
}

fn common_eigenvector(devs: &[Nonzero], n: &Vec3, tol: f64) -> bool {
    devs.iter().all(|a| {
        let an = a.dev * n;
        (an - n * n.dot(&an)).norm() <= tol * a.norm
    })
}

/// Classifies a tuple by the bifurcation conditions, top down: all deviators
/// zero; all uniaxial and pairwise proportional; pairwise commuting; a common
/// eigenvector; otherwise trivial.
pub fn classify_tuple(t: &QuadTuple, tol: f64) -> TupleClass {
    let devs: Vec<Nonzero> = t
        .forms
        .iter()
        .zip(&t.scales)
        .filter_map(|(f, s)| {
            let dev = deviatoric(f);
            let norm = dev.norm();
            (norm > tol * s).then_some(Nonzero { dev, norm })
        })
        .collect();
    if devs.is_empty() {
        return TupleClass::SO3;
    }

    if devs.iter().all(|a| uniaxial(a, tol)) && devs.iter().all(|b| parallel(&devs[0], b, tol)) {
        let eig = SymmetricEigen::new(devs[0].dev);
        let i = eig.eigenvalues.iamax();
        return TupleClass::O2 {
            axis: eig.eigenvectors.column(i).into_owned(),
        };
    }

    let mut commutators = vec![];
    for (k, a) in devs.iter().enumerate() {
        for b in &devs[k + 1..] {
            let w = commutator_vector(&a.dev, &b.dev);
            let rel = w.norm() / (a.norm * b.norm);
            if rel > tol {
                commutators.push((rel, w));
            }
        }
    }
    if commutators.is_empty() {
        // weights only need to avoid accidental eigenvalue coincidences
        let generic = devs.iter().enumerate().fold(Mat3::zeros(), |acc, (k, a)| {
            acc + a.dev * (1.0 / (a.norm * (k as f64 + std::f64::consts::SQRT_2)))
        });
        return TupleClass::D2 {
            frame: SymmetricEigen::new(generic).eigenvectors,
        };
    }

    commutators.sort_by(|x, y| y.0.total_cmp(&x.0));
    let from_commutators = commutators.iter().map(|(_, w)| w.normalize());
    let from_eigenvectors = devs.iter().flat_map(|a| {
        let v = SymmetricEigen::new(a.dev).eigenvectors;
        (0..3).map(move |i| v.column(i).into_owned())
    });
    for n in from_commutators.chain(from_eigenvectors) {
        if common_eigenvector(&devs, &n, tol) {
            return TupleClass::Z2 { normal: n };
        }
    }
    TupleClass::Trivial
}

fn parallel_to(x: &Vec3, n: &Vec3, tol: f64) -> bool {
    (x - n * n.dot(x)).norm() <= tol
}

/// Cowin-Mehrabadi conditions for `n` to be normal to a symmetry plane of `c`:
/// `d n`, `v n`, `(C : n n) n` and `(C : m m) n` all parallel to `n` for every
/// `m` orthogonal to `n`. The last condition is quadratic in `m`, so it is
/// imposed on `m1`, `m2` and `(m1 + m2)/sqrt 2` for an orthonormal pair `m1, m2`.
pub fn cowin_mehrabadi(c: &ElasticityTensor, n: &Vec3, tol: f64) -> Result<bool> {
    let norm = n.norm();
    if !(norm > 0.0) || !norm.is_finite() {
        return Err(Error::InvalidNormal);
    }
    let n = n / norm;
    let (m1, m2) = orthonormal_completion(&n);
    let t = c.tensor4();
    let scale = c.norm() * tol;
    let (d, v) = c.dilatation_voigt();
    let m3 = (m1 + m2) / std::f64::consts::SQRT_2;
    let checks = [
        d * n,
        v * n,
        t.contract(&(n * n.transpose())) * n,
        t.contract(&(m1 * m1.transpose())) * n,
        t.contract(&(m2 * m2.transpose())) * n,
        t.contract(&(m3 * m3.transpose())) * n,
    ];
    Ok(checks.iter().all(|x| parallel_to(x, &n, scale)))
}

/// Brute-force counterpart of [`cowin_mehrabadi`]: `C` is compared with its
/// image under the half-turn about `n` (same action as the reflection through
/// the plane normal to `n`, since `C` has even order).
pub fn reflection_symmetric(c: &ElasticityTensor, n: &Vec3, tol: f64) -> Result<bool> {
    let norm = n.norm();
    if !(norm > 0.0) || !norm.is_finite() {
        return Err(Error::InvalidNormal);
    }
    let n = n / norm;
    let g = n * n.transpose() * 2.0 - Mat3::identity();
    let turned = c.tensor4().rotate(&g);
    Ok(turned.sub(&c.tensor4()).norm() <= tol * c.norm())
}

pub(crate) fn orthonormal_completion(n: &Vec3) -> (Vec3, Vec3) {
    let helper = if n.x.abs() < 0.9 {
        Vec3::x()
    } else {
        Vec3::y()
    };
    let m1 = n.cross(&helper).normalize();
    let m2 = n.cross(&m1);
    (m1, m2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(a: f64, b: f64, c: f64) -> Mat3 {
        Mat3::from_diagonal(&Vec3::new(a, b, c))
    }

    #[test]
    fn commutator_of_diagonals_vanishes() {
        assert_eq!(
            commutator_vector(&diag(1.0, 2.0, 3.0), &diag(4.0, 1.0, 2.0)),
            Vec3::zeros()
        );
    }

    #[test]
    fn commutator_sign_convention() {
        let mut b = Mat3::zeros();
        b[(0, 1)] = 1.0;
        b[(1, 0)] = 1.0;
        let w = commutator_vector(&diag(1.0, 2.0, 3.0), &b);
        assert_eq!(w, Vec3::new(0.0, 0.0, 1.0));
    }

    #[test]
    fn hermite_examples() {
        let h = hermite_distinct_roots(6.0, 11.0, 6.0, 1e-12);
        assert_eq!(
            (h.distinct, h.real, h.delta2, h.delta3),
            (3, true, 6.0, 4.0)
        );
        assert_eq!(hermite_distinct_roots(3.0, 3.0, 1.0, 1e-12).distinct, 1);
        // roots 2, 2, 5
        let h = hermite_distinct_roots(9.0, 24.0, 20.0, 1e-12);
        assert_eq!((h.distinct, h.delta2, h.delta3), (2, 18.0, 0.0));
        // roots 1, +-i
        let h = hermite_distinct_roots(1.0, 1.0, 1.0, 1e-12);
        assert!(!h.real);
    }

    #[test]
    fn tuple_examples() {
        let t = QuadTuple::new(vec![Mat3::identity(), Mat3::identity() * 3.0]);
        assert_eq!(classify_tuple(&t, 1e-8), TupleClass::SO3);
        let t = QuadTuple::new(vec![diag(1.0, 1.0, -2.0), diag(2.0, 2.0, -4.0)]);
        match classify_tuple(&t, 1e-8) {
            TupleClass::O2 { axis } => assert!((axis.z.abs() - 1.0).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
        let t = QuadTuple::new(vec![diag(1.0, 2.0, 3.0), diag(4.0, 1.0, 2.0)]);
        assert_eq!(classify_tuple(&t, 1e-8).rank(), 2);
    }

    #[test]
    fn z2_witness_is_the_shared_axis() {
        let a = Mat3::new(1.0, 0.3, 0.0, 0.3, -2.0, 0.0, 0.0, 0.0, 0.5);
        let b = Mat3::new(0.2, -0.7, 0.0, -0.7, 1.0, 0.0, 0.0, 0.0, 3.0);
        match classify_tuple(&QuadTuple::new(vec![a, b]), 1e-8) {
            TupleClass::Z2 { normal } => assert!((normal.z.abs() - 1.0).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn isotropic_tensor_has_every_plane() {
        let c = ElasticityTensor::isotropic(1.3, 0.7);
        let n = Vec3::new(0.3, -1.0, 2.0);
        assert!(cowin_mehrabadi(&c, &n, 1e-10).unwrap());
        assert!(reflection_symmetric(&c, &n, 1e-10).unwrap());
        assert_eq!(
            cowin_mehrabadi(&c, &Vec3::zeros(), 1e-10),
            Err(Error::InvalidNormal)
        );
    }
}
