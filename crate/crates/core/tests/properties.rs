use elastic_symmetry::classifier::{classify, random_sample, Tolerances};
use elastic_symmetry::h4strata::{relations, SliceParams, DECISION_ORDER};
use elastic_symmetry::invariants::boehler_invariants;
use elastic_symmetry::quadstrata::TupleClass;
use elastic_symmetry::tencore::Mat3;
use elastic_symmetry::{
    Deviator, ElasticityTensor, Harmonic4, HarmonicDecomposition, Rotation, SymmetryClass,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn harmonic() -> impl Strategy<Value = Harmonic4> {
    prop::array::uniform9(-1.0..1.0f64).prop_map(Harmonic4::from_h)
}

fn rotation() -> impl Strategy<Value = Rotation> {
    any::<u64>().prop_map(|s| Rotation::random(&mut ChaCha8Rng::seed_from_u64(s)))
}

fn deviator() -> impl Strategy<Value = Deviator> {
    prop::array::uniform6(-1.0..1.0f64).prop_map(|v| {
        Deviator::project(&Mat3::new(
            v[0], v[5], v[4], v[5], v[1], v[3], v[4], v[3], v[2],
        ))
    })
}

fn stiffness() -> impl Strategy<Value = ElasticityTensor> {
    prop::array::uniform21(-1.0..1.0f64).prop_map(ElasticityTensor::from_components)
}

fn class() -> impl Strategy<Value = SymmetryClass> {
    prop::sample::select(SymmetryClass::ALL.to_vec())
}

fn close(a: f64, b: f64, rel: f64, scale: f64) -> bool {
    (a - b).abs() <= rel * scale
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invariants_are_rotation_invariant(d in harmonic(), g in rotation()) {
        let (a, b) = (boehler_invariants(&d), boehler_invariants(&d.rotate(&g)));
        let j2 = a.get(2);
        for k in 2..=10 {
            let scale = j2.powf(k as f64 / 2.0);
            prop_assert!(close(a.get(k), b.get(k), 1e-10, scale), "J{k}: {} vs {}", a.get(k), b.get(k));
        }
    }

    #[test]
    fn decompose_recompose_round_trip(c in stiffness()) {
        let back = c.decompose().recompose();
        prop_assert!((back.voigt() - c.voigt()).norm() <= 1e-12 * c.voigt().norm().max(1.0));
    }

    #[test]
    fn recompose_decompose_round_trip(lambda in -2.0..2.0f64, mu in -2.0..2.0f64, a in deviator(), b in deviator(), d in harmonic()) {
        let parts = HarmonicDecomposition { lambda, mu, a, b, d };
        let back = parts.recompose().decompose();
        prop_assert!((back.lambda - lambda).abs() < 1e-12);
        prop_assert!((back.mu - mu).abs() < 1e-12);
        prop_assert!((back.a.matrix() - a.matrix()).norm() < 1e-12);
        prop_assert!((back.b.matrix() - b.matrix()).norm() < 1e-12);
        prop_assert!((back.d.kelvin() - d.kelvin()).norm() < 1e-12);
    }

    #[test]
    fn kelvin_round_trip(c in stiffness()) {
        let back = ElasticityTensor::from_kelvin(&c.kelvin());
        for (x, y) in back.components().iter().zip(c.components()) {
            prop_assert!((x - y).abs() <= 4.0 * f64::EPSILON * y.abs().max(f64::MIN_POSITIVE));
        }
    }

    #[test]
    fn decomposition_is_equivariant(c in stiffness(), g in rotation()) {
        let (a, b) = (c.rotate(&g).decompose(), c.decompose().rotate(&g));
        prop_assert!((a.lambda - b.lambda).abs() < 1e-12);
        prop_assert!((a.mu - b.mu).abs() < 1e-12);
        prop_assert!((a.a.matrix() - b.a.matrix()).norm() < 1e-11);
        prop_assert!((a.b.matrix() - b.b.matrix()).norm() < 1e-11);
        prop_assert!((a.d.kelvin() - b.d.kelvin()).norm() < 1e-11);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn certificate_is_rotation_invariant(class in class(), seed in any::<u64>(), g in rotation()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_sample(class, 0.1, &mut rng).tensor().unwrap();
        let tol = Tolerances::default();
        let (a, b) = (classify(&c, &tol), classify(&c.rotate(&g), &tol));
        prop_assert_eq!(a.class, class);
        prop_assert_eq!(b.class, class);
        prop_assert_eq!(a.tuple_class.rank(), b.tuple_class.rank());
        prop_assert_eq!(a.normalized.is_some(), b.normalized.is_some());
        if let (Some(na), Some(nb)) = (a.normalized, b.normalized) {
            for (x, y) in na.values().iter().zip(nb.values()) {
                prop_assert!((x - y).abs() <= 1e-9 * y.abs().max(1.0));
            }
        }
        let flat = |p: Option<SliceParams>| match p {
            Some(SliceParams::Delta { delta }) => vec![delta],
            Some(SliceParams::DeltaSigma { delta, sigma }) => vec![delta, sigma],
            Some(SliceParams::Orthotropic { lambda, .. }) => lambda.to_vec(),
            _ => vec![],
        };
        let (pa, pb) = (flat(a.parameters), flat(b.parameters));
        prop_assert_eq!(pa.len(), pb.len());
        let size = pa.iter().fold(1e-300f64, |s, x| s.max(x.abs()));
        for (x, y) in pa.iter().zip(&pb) {
            prop_assert!((x - y).abs() <= 1e-8 * size, "{:?} vs {:?}", pa, pb);
        }
    }

    // Whenever the second-order parts are isotropic (tuple class SO(3)),
    // d2 must be proportional to the identity.
    #[test]
    fn pruning_is_consistent(class in class(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_sample(class, 0.1, &mut rng).tensor().unwrap();
        let cert = classify(&c, &Tolerances::default());
        if cert.tuple_class == TupleClass::SO3 && !cert.d_is_zero {
            let r = cert.scalar_d2_residual.unwrap();
            prop_assert!(r <= cert.tolerances.syzygy || cert.mga_violation);
        }
    }
}

#[test]
fn relations_are_weighted_homogeneous() {
    for c in DECISION_ORDER {
        for r in relations(c) {
            let deg = r
                .degree()
                .unwrap_or_else(|| panic!("{c}: {r} is not homogeneous"));
            assert!(deg >= 4, "{c}: {r}");
        }
    }
}
