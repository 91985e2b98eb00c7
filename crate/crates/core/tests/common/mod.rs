#![allow(dead_code)]

use elastic_symmetry::tencore::{ElasticityTensor, Harmonic4, Mat3, Rotation, Vec3};
use rand::Rng;
use rand_distr::StandardNormal;

/// Each component `c` becomes `c (1 + eps z)`, `z ~ N(0, 1)`.
pub fn perturb(c: &ElasticityTensor, eps: f64, rng: &mut impl Rng) -> ElasticityTensor {
    ElasticityTensor::from_components(c.components().map(|x| {
        let z: f64 = rng.sample(StandardNormal);
        x * (1.0 + eps * z)
    }))
}

pub fn random_harmonic(rng: &mut impl Rng) -> Harmonic4 {
    Harmonic4::from_h(std::array::from_fn(|_| rng.gen_range(-1.0..1.0)))
}

pub fn random_symmetric(rng: &mut impl Rng) -> Mat3 {
    let m = Mat3::from_fn(|_, _| rng.gen_range(-1.0..1.0));
    (m + m.transpose()) / 2.0
}

pub fn random_unit(rng: &mut impl Rng) -> Vec3 {
    loop {
        let v = Vec3::from_fn(|_, _| rng.gen_range(-1.0..1.0));
        if v.norm() > 0.1 && v.norm() <= 1.0 {
            return v.normalize();
        }
    }
}

pub fn diag(a: f64, b: f64, c: f64) -> Mat3 {
    Mat3::from_diagonal(&Vec3::new(a, b, c))
}

/// `g A g^T`.
pub fn conj(g: &Rotation, a: &Mat3) -> Mat3 {
    g.matrix() * a * g.matrix().transpose()
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}
