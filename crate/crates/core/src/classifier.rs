//! End-to-end symmetry identification of an elasticity tensor, assuming its
//! low-order parts do not cut below the symmetry of `D` unless the
//! evidence says so, plus generators of tensors of known class.

use rand::Rng;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::h4strata::{
    bifurcation_path, classify_h4, family_distances, slice_transitions, H4Verdict, SliceParams,
    SymmetryClass, Transition,
};
use crate::invariants::{boehler_invariants, covariants, InvariantVector, NormalizedInvariants};
use crate::quadstrata::{classify_tuple, cowin_mehrabadi, QuadTuple, TupleClass};
use crate::tencore::{
    Deviator, ElasticityTensor, Harmonic4, HarmonicDecomposition, Mat3, Rotation, Vec3,
};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Relation residuals, inequality margins, tuple and plane tests.
    pub syzygy: f64,
    /// `D = 0` when `sqrt(J2) <= zero * |C|`.
    pub zero: f64,
    /// Orthogonality defect accepted for user-supplied rotations.
    pub rotation: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            syzygy: 1e-8,
            zero: 1e-10,
            rotation: 1e-10,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ClassifyOptions {
    pub tolerances: Tolerances,
    /// Compare the class of `(a, b, d2)` with that of `d2` alone and flag any
    /// difference.
    pub strict_mga: bool,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlaneTest {
    pub normal: Vec3,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    /// SHA-256 of the 21 components (little-endian bit patterns).
    pub digest: String,
    pub class: SymmetryClass,
    /// Class of `(a, b, d2)`; of `(a, b)` when `D` is zero.
    pub tuple_class: TupleClass,
    /// Class of `d2` alone, in strict mode.
    pub d2_class: Option<TupleClass>,
    pub plane_test: Option<PlaneTest>,
    pub d_is_zero: bool,
    pub invariants: InvariantVector,
    pub normalized: Option<NormalizedInvariants>,
    pub h4: Option<H4Verdict>,
    /// `|J2^2 - 3 J4| / (3 J2^2)`; zero when `d2` is isotropic.
    pub scalar_d2_residual: Option<f64>,
    pub mga_violation: bool,
    pub parameters: Option<SliceParams>,
    /// Nearest transitions, when the class has no normal form.
    pub nearest: Vec<Transition>,
    pub tolerances: Tolerances,
    /// Decisions taken, in order.
    pub trail: Vec<String>,
    pub warnings: Vec<String>,
}

impl Certificate {
    /// Largest relation residual of every tested stratum.
    pub fn residual_summary(&self) -> Vec<(SymmetryClass, f64)> {
        self.h4
            .iter()
            .flat_map(|v| v.tested.iter().map(|r| (r.class, r.max_residual())))
            .collect()
    }
}

pub fn digest(c: &ElasticityTensor) -> String {
    let mut h = Sha256::new();
    for x in c.components() {
        h.update(x.to_le_bytes());
    }
    hex::encode(h.finalize())
}

fn tuple_to_class(t: &TupleClass) -> SymmetryClass {
    match t {
        TupleClass::Trivial => SymmetryClass::Triclinic,
        TupleClass::Z2 { .. } => SymmetryClass::Monoclinic,
        TupleClass::D2 { .. } => SymmetryClass::Orthotropic,
        TupleClass::O2 { .. } => SymmetryClass::Transverse,
        TupleClass::SO3 => SymmetryClass::Isotropic,
    }
}

// Classes of D compatible with a tuple class when G_C = G_D.
fn consistent(class: SymmetryClass, tuple: &TupleClass) -> bool {
    match class {
        SymmetryClass::Orthotropic => tuple.rank() >= 2,
        SymmetryClass::Trigonal | SymmetryClass::Tetragonal | SymmetryClass::Transverse => {
            matches!(tuple, TupleClass::O2 { .. })
        }
        SymmetryClass::Cubic | SymmetryClass::Isotropic => matches!(tuple, TupleClass::SO3),
        _ => true,
    }
}

pub fn classify(c: &ElasticityTensor, tol: &Tolerances) -> Certificate {
    classify_with(
        c,
        &ClassifyOptions {
            tolerances: *tol,
            strict_mga: false,
        },
    )
}

pub fn classify_with(c: &ElasticityTensor, opts: &ClassifyOptions) -> Certificate {
    let tol = opts.tolerances;
    let dec = c.decompose();
    let scale = c.norm();
    let invariants = boehler_invariants(&dec.d);
    let d_is_zero = crate::h4strata::test_isotropic(&invariants, scale, tol.zero).open();
    let normalized = (!d_is_zero)
        .then(|| invariants.normalize(0.0).ok())
        .flatten();
    let mut cert = Certificate {
        digest: digest(c),
        class: SymmetryClass::Triclinic,
        tuple_class: TupleClass::Trivial,
        d2_class: None,
        plane_test: None,
        d_is_zero,
        invariants,
        normalized,
        h4: None,
        scalar_d2_residual: normalized.map(|n| (1.0 - 3.0 * n.get(4)).abs() / 3.0),
        mga_violation: false,
        parameters: None,
        nearest: vec![],
        tolerances: tol,
        trail: vec![],
        warnings: vec![],
    };

    let mut forms = vec![(*dec.a.matrix(), scale), (*dec.b.matrix(), scale)];
    let d2 = *covariants(&dec.d).get(2);
    if d_is_zero {
        cert.trail.push("D = 0: class of (a, b)".into());
    } else {
        forms.push((d2, invariants.get(2)));
    }
    let tuple = classify_tuple(&QuadTuple::with_scales(forms), tol.syzygy);
    cert.tuple_class = tuple;
    cert.trail.push(format!("tuple class {tuple}"));

    if d_is_zero {
        cert.class = tuple_to_class(&tuple);
        if cert.class == SymmetryClass::Isotropic {
            cert.parameters = Some(SliceParams::Isotropic);
        }
        return cert;
    }

    match tuple {
        TupleClass::Trivial => {
            cert.class = SymmetryClass::Triclinic;
        }
        TupleClass::Z2 { normal } => {
            cert.class = plane_verdict(c, &normal, tol.syzygy, &mut cert);
        }
        _ => {
            high_symmetry(c, &dec, &tuple, opts, &mut cert);
        }
    }
    if cert.parameters.is_none() && cert.class.is_below(SymmetryClass::Monoclinic) {
        // distances of D from each class; second-order parts may still
        // break the symmetry of the closest one
        cert.nearest = family_distances(cert.class.group(), &invariants, tol.syzygy);
    }
    cert
}

fn plane_verdict(
    c: &ElasticityTensor,
    normal: &Vec3,
    tol: f64,
    cert: &mut Certificate,
) -> SymmetryClass {
    let passed = cowin_mehrabadi(c, normal, tol).unwrap_or(false);
    cert.plane_test = Some(PlaneTest {
        normal: *normal,
        passed,
    });
    cert.trail.push(format!(
        "symmetry-plane test on ({:.6}, {:.6}, {:.6}): {}",
        normal.x,
        normal.y,
        normal.z,
        if passed { "pass" } else { "fail" }
    ));
    if passed {
        SymmetryClass::Monoclinic
    } else {
        SymmetryClass::Triclinic
    }
}

fn high_symmetry(
    c: &ElasticityTensor,
    dec: &HarmonicDecomposition,
    tuple: &TupleClass,
    opts: &ClassifyOptions,
    cert: &mut Certificate,
) {
    let tol = opts.tolerances;
    if opts.strict_mga {
        let d2 = *covariants(&dec.d).get(2);
        let alone = classify_tuple(
            &QuadTuple::with_scales(vec![(d2, cert.invariants.get(2))]),
            tol.syzygy,
        );
        cert.d2_class = Some(alone);
        if alone.rank() != tuple.rank() {
            cert.mga_violation = true;
            cert.warnings.push(format!(
                "strict mode: (a, b, d2) has class {tuple} but d2 alone has {alone}"
            ));
        }
    }

    let verdict = classify_h4(&cert.invariants, c.norm(), tol.zero, tol.syzygy);
    match tuple {
        TupleClass::O2 { .. } => cert
            .trail
            .push("tuple O(2): D is neither cubic nor isotropic".into()),
        TupleClass::SO3 => cert.trail.push(
            "tuple SO(3): J2^2 = 3 J4 and D is not trigonal, tetragonal or transverse".into(),
        ),
        _ => {}
    }
    if matches!(tuple, TupleClass::SO3) {
        if let Some(r) = cert.scalar_d2_residual {
            if r > tol.syzygy {
                cert.mga_violation = true;
                cert.warnings.push(format!(
                    "tuple class SO(3) but |J2^2 - 3 J4| / 3 J2^2 = {r:.3e}"
                ));
            }
        }
    }
    match verdict.class {
        Some(h4) => {
            cert.trail.push(format!("D in the {h4} stratum"));
            if !consistent(h4, tuple) {
                cert.mga_violation = true;
                cert.warnings.push(format!(
                    "D is {h4} but (a, b, d2) has class {tuple}; only G_C contained in G_D is guaranteed"
                ));
            }
            cert.class = h4;
            cert.parameters = verdict.result().and_then(|r| r.slice);
        }
        None => {
            cert.trail.push("D below the orthotropic stratum".into());
            cert.class = low_symmetry_of_d(c, dec, tol, cert);
        }
    }
    cert.h4 = Some(verdict);
}

// D is monoclinic or triclinic while (a, b, d2) is at least orthotropic. The
// remaining covariants of D are added to the tuple; any Z2 it admits, or the
// axes of a higher-symmetry frame, are tried as symmetry-plane normals.
fn low_symmetry_of_d(
    c: &ElasticityTensor,
    dec: &HarmonicDecomposition,
    tol: Tolerances,
    cert: &mut Certificate,
) -> SymmetryClass {
    let cov = covariants(&dec.d);
    let forms = (2..=10).map(|k| (*cov.get(k), cov.get(k).norm()));
    let mut forms: Vec<(Mat3, f64)> = forms.collect();
    forms.push((*dec.a.matrix(), c.norm()));
    forms.push((*dec.b.matrix(), c.norm()));
    let extended = classify_tuple(&QuadTuple::with_scales(forms), tol.syzygy);
    cert.trail.push(format!("extended tuple class {extended}"));
    let candidates: Vec<Vec3> = match extended {
        TupleClass::Trivial => vec![],
        TupleClass::Z2 { normal } => vec![normal],
        TupleClass::D2 { frame } => (0..3).map(|i| frame.column(i).into_owned()).collect(),
        TupleClass::O2 { axis } => vec![axis],
        TupleClass::SO3 => vec![Vec3::x(), Vec3::y(), Vec3::z()],
    };
    for n in candidates {
        if plane_verdict(c, &n, tol.syzygy, cert) == SymmetryClass::Monoclinic {
            return SymmetryClass::Monoclinic;
        }
    }
    SymmetryClass::Triclinic
}

// ---------------------------------------------------------------------------
// Sample generation

/// Normal-form parameters of `D` for each class.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ShapeParams {
    Isotropic,
    Cubic {
        delta: f64,
    },
    Transverse {
        delta: f64,
    },
    Trigonal {
        delta: f64,
        sigma: f64,
    },
    Tetragonal {
        delta: f64,
        sigma: f64,
    },
    Orthotropic {
        lambda: [f64; 3],
    },
    /// Components in the h-chart; entries 2, 4, 5, 6 (1-based) must vanish.
    Monoclinic {
        h: [f64; 9],
    },
    Triclinic {
        h: [f64; 9],
    },
}

impl ShapeParams {
    pub fn class(&self) -> SymmetryClass {
        match self {
            ShapeParams::Isotropic => SymmetryClass::Isotropic,
            ShapeParams::Cubic { .. } => SymmetryClass::Cubic,
            ShapeParams::Transverse { .. } => SymmetryClass::Transverse,
            ShapeParams::Trigonal { .. } => SymmetryClass::Trigonal,
            ShapeParams::Tetragonal { .. } => SymmetryClass::Tetragonal,
            ShapeParams::Orthotropic { .. } => SymmetryClass::Orthotropic,
            ShapeParams::Monoclinic { .. } => SymmetryClass::Monoclinic,
            ShapeParams::Triclinic { .. } => SymmetryClass::Triclinic,
        }
    }

    /// `D` in the normal frame.
    pub fn harmonic(&self) -> Harmonic4 {
        match *self {
            ShapeParams::Isotropic => Harmonic4::zero(),
            ShapeParams::Cubic { delta } => Harmonic4::cubic(delta),
            ShapeParams::Transverse { delta } => Harmonic4::transverse(delta),
            ShapeParams::Trigonal { delta, sigma } => Harmonic4::trigonal(delta, sigma),
            ShapeParams::Tetragonal { delta, sigma } => Harmonic4::tetragonal(delta, sigma),
            ShapeParams::Orthotropic { lambda } => Harmonic4::orthotropic(lambda),
            ShapeParams::Monoclinic { h } | ShapeParams::Triclinic { h } => Harmonic4::from_h(h),
        }
    }
}

/// Isotropic and deviatoric second-order parts, in the normal frame.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LowerParts {
    pub lambda: f64,
    pub mu: f64,
    pub a: Deviator,
    pub b: Deviator,
}

impl LowerParts {
    pub fn isotropic(lambda: f64, mu: f64) -> Self {
        LowerParts {
            lambda,
            mu,
            a: Deviator::zero(),
            b: Deviator::zero(),
        }
    }
}

fn uniaxial_e3(a: &Mat3, tol: f64) -> bool {
    let off = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| a[(i, j)].abs())
        .fold(0.0, f64::max);
    off <= tol && (a[(0, 0)] - a[(1, 1)]).abs() <= tol
}

fn diagonal(a: &Mat3, tol: f64) -> bool {
    [(0, 1), (0, 2), (1, 2)]
        .iter()
        .all(|&(i, j)| a[(i, j)].abs() <= tol)
}

fn e3_eigenvector(a: &Mat3, tol: f64) -> bool {
    a[(0, 2)].abs() <= tol && a[(1, 2)].abs() <= tol
}

fn check_lower_parts(class: SymmetryClass, low: &LowerParts, tol: f64) -> Result<()> {
    let scale = low.a.norm().max(low.b.norm()).max(1.0);
    let t = tol * scale;
    let ok = |f: &dyn Fn(&Mat3, f64) -> bool| f(low.a.matrix(), t) && f(low.b.matrix(), t);
    let fits = match class {
        SymmetryClass::Isotropic | SymmetryClass::Cubic => low.a.norm() <= t && low.b.norm() <= t,
        SymmetryClass::Transverse | SymmetryClass::Trigonal | SymmetryClass::Tetragonal => {
            ok(&uniaxial_e3)
        }
        SymmetryClass::Orthotropic => ok(&diagonal),
        SymmetryClass::Monoclinic => ok(&e3_eigenvector),
        SymmetryClass::Triclinic => true,
    };
    if fits {
        Ok(())
    } else {
        Err(Error::InvalidParameters {
            class,
            reason: "second-order parts do not share the symmetry of the normal form".into(),
        })
    }
}

// Closed-form degeneracies of the normal forms, as the class they fall into.
fn degeneracy(params: &ShapeParams, tol: f64) -> Option<SymmetryClass> {
    let near = |x: f64, scale: f64| x.abs() <= tol * scale.max(f64::MIN_POSITIVE);
    match *params {
        ShapeParams::Isotropic => None,
        ShapeParams::Cubic { delta } | ShapeParams::Transverse { delta } => {
            (delta == 0.0).then_some(SymmetryClass::Isotropic)
        }
        ShapeParams::Trigonal { delta, sigma } | ShapeParams::Tetragonal { delta, sigma } => {
            let cubic_ratio = if params.class() == SymmetryClass::Trigonal {
                50.0
            } else {
                25.0
            };
            let size = delta.abs().max(sigma.abs());
            if size == 0.0 {
                Some(SymmetryClass::Isotropic)
            } else if near(sigma, size) {
                Some(SymmetryClass::Transverse)
            } else if near(sigma * sigma - cubic_ratio * delta * delta, size * size) {
                Some(SymmetryClass::Cubic)
            } else {
                None
            }
        }
        ShapeParams::Orthotropic { lambda: l } => {
            let size = l.iter().fold(0.0f64, |s, x| s.max(x.abs()));
            let pairs = [(0, 1, 2), (0, 2, 1), (1, 2, 0)];
            if size == 0.0 {
                Some(SymmetryClass::Isotropic)
            } else if near(l[0] - l[1], size) && near(l[1] - l[2], size) {
                Some(SymmetryClass::Cubic)
            } else if let Some(&(a, b, c)) =
                pairs.iter().find(|&&(a, b, _)| near(l[a] - l[b], size))
            {
                if near(l[a] + l[b] + 8.0 * l[c], size) {
                    Some(SymmetryClass::Transverse)
                } else {
                    Some(SymmetryClass::Tetragonal)
                }
            } else {
                None
            }
        }
        ShapeParams::Monoclinic { h } | ShapeParams::Triclinic { h } => {
            let d = Harmonic4::from_h(h);
            classify_h4(
                &boehler_invariants(&d),
                d.norm().max(f64::MIN_POSITIVE),
                1e-10,
                1e-8,
            )
            .class
        }
    }
}

/// Degeneracy guard tolerance, relative to the parameter size.
pub const DEGENERACY_TOL: f64 = 1e-8;

/// `C = g * (lambda, mu, a, b, D)` with `D` the normal form of `params`.
pub fn generate_sample(
    params: &ShapeParams,
    g: &Rotation,
    low: &LowerParts,
) -> Result<ElasticityTensor> {
    let class = params.class();
    if let ShapeParams::Monoclinic { h } = params {
        if [1, 3, 4, 5].iter().any(|&i| h[i] != 0.0) {
            return Err(Error::InvalidParameters {
                class,
                reason: "h2, h4, h5 and h6 must vanish".into(),
            });
        }
    }
    if let Some(actual) = degeneracy(params, DEGENERACY_TOL) {
        return Err(Error::Degenerate {
            requested: class,
            actual,
        });
    }
    check_lower_parts(class, low, DEGENERACY_TOL)?;
    let dec = HarmonicDecomposition {
        lambda: low.lambda,
        mu: low.mu,
        a: low.a,
        b: low.b,
        d: params.harmonic(),
    };
    let c = dec.rotate(g).recompose();
    if class == SymmetryClass::Triclinic {
        let forms = vec![
            (*low.a.matrix(), 1.0),
            (*low.b.matrix(), 1.0),
            (*covariants(&dec.d).get(2), 1.0),
        ];
        let t = classify_tuple(&QuadTuple::with_scales(forms), DEGENERACY_TOL);
        if t != TupleClass::Trivial {
            let actual = classify(&c, &Tolerances::default()).class;
            return Err(Error::Degenerate {
                requested: class,
                actual,
            });
        }
    }
    Ok(c)
}

/// Parameters, second-order parts and rotation of a random sample.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampleSpec {
    pub params: ShapeParams,
    pub lower: LowerParts,
    pub rotation: Rotation,
}

impl SampleSpec {
    pub fn tensor(&self) -> Result<ElasticityTensor> {
        generate_sample(&self.params, &self.rotation, &self.lower)
    }
}

fn signed(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    let x = rng.gen_range(lo..hi);
    if rng.gen_bool(0.5) {
        x
    } else {
        -x
    }
}

fn dev_from(m: Mat3) -> Deviator {
    Deviator::project(&m)
}

fn uniaxial(x: f64) -> Deviator {
    dev_from(Mat3::from_diagonal(&Vec3::new(x, x, -2.0 * x)))
}

/// Smallest normalized distance of a normal form from the degeneracies of its
/// class. For monoclinic and triclinic forms this is the smallest
/// finite-monodromy family residual, which lives on a much smaller scale; see
/// [`LOW_CLASS_RESIDUAL_FLOOR`].
pub fn degeneracy_margin(params: &ShapeParams) -> f64 {
    match *params {
        ShapeParams::Isotropic => f64::INFINITY,
        ShapeParams::Cubic { .. } | ShapeParams::Transverse { .. } => 1.0,
        ShapeParams::Trigonal { delta, sigma } | ShapeParams::Tetragonal { delta, sigma } => {
            first_transition(params, SliceParams::DeltaSigma { delta, sigma })
        }
        ShapeParams::Orthotropic { lambda } => first_transition(
            params,
            SliceParams::Orthotropic {
                sigma: [0.0; 3],
                lambda,
            },
        ),
        ShapeParams::Monoclinic { .. } | ShapeParams::Triclinic { .. } => {
            let j = boehler_invariants(&params.harmonic());
            bifurcation_path(&j, 1e-8)
                .first()
                .map_or(0.0, |t| t.residual)
        }
    }
}

// Read off the parameters directly: classifying the normal form would hide
// near-degenerate samples behind the higher class they approach.
fn first_transition(params: &ShapeParams, slice: SliceParams) -> f64 {
    let j2 = boehler_invariants(&params.harmonic()).get(2);
    slice_transitions(params.class(), slice, j2)
        .first()
        .map_or(0.0, |t| t.residual)
}

fn random_params(class: SymmetryClass, rng: &mut impl Rng) -> ShapeParams {
    match class {
        SymmetryClass::Isotropic => ShapeParams::Isotropic,
        SymmetryClass::Cubic => ShapeParams::Cubic {
            delta: signed(rng, 0.2, 2.0),
        },
        SymmetryClass::Transverse => ShapeParams::Transverse {
            delta: signed(rng, 0.2, 2.0),
        },
        SymmetryClass::Trigonal => ShapeParams::Trigonal {
            delta: rng.gen_range(-1.0..1.0),
            sigma: signed(rng, 0.2, 8.0),
        },
        SymmetryClass::Tetragonal => ShapeParams::Tetragonal {
            delta: rng.gen_range(-1.0..1.0),
            sigma: signed(rng, 0.2, 6.0),
        },
        SymmetryClass::Orthotropic => ShapeParams::Orthotropic {
            lambda: std::array::from_fn(|_| rng.gen_range(-2.0..2.0)),
        },
        SymmetryClass::Monoclinic => {
            let mut h: [f64; 9] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
            for i in [1, 3, 4, 5] {
                h[i] = 0.0;
            }
            ShapeParams::Monoclinic { h }
        }
        SymmetryClass::Triclinic => ShapeParams::Triclinic {
            h: std::array::from_fn(|_| rng.gen_range(-1.0..1.0)),
        },
    }
}

/// Random second-order parts sharing the symmetry of the normal form of `class`.
pub fn random_lower(class: SymmetryClass, rng: &mut impl Rng) -> LowerParts {
    let lambda = rng.gen_range(0.5..2.0);
    let mu = rng.gen_range(0.5..2.0);
    let (a, b) = match class {
        SymmetryClass::Isotropic | SymmetryClass::Cubic => (Deviator::zero(), Deviator::zero()),
        SymmetryClass::Transverse | SymmetryClass::Trigonal | SymmetryClass::Tetragonal => (
            uniaxial(rng.gen_range(-1.0..1.0)),
            uniaxial(rng.gen_range(-1.0..1.0)),
        ),
        SymmetryClass::Orthotropic => {
            let mut diag = || {
                dev_from(Mat3::from_diagonal(&Vec3::from_fn(|_, _| {
                    rng.gen_range(-1.0..1.0)
                })))
            };
            (diag(), diag())
        }
        SymmetryClass::Monoclinic => {
            let mut plane = || {
                let (x, y, z, w) = (
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                );
                dev_from(Mat3::new(x, w, 0.0, w, y, 0.0, 0.0, 0.0, z))
            };
            (plane(), plane())
        }
        SymmetryClass::Triclinic => {
            let mut any = || {
                let m = Mat3::from_fn(|_, _| rng.gen_range(-1.0..1.0));
                dev_from(m + m.transpose())
            };
            (any(), any())
        }
    };
    LowerParts { lambda, mu, a, b }
}

// Relative size of the [a, b] commutator: keeps monoclinic samples away from
// orthotropic second-order parts.
fn lower_margin(class: SymmetryClass, low: &LowerParts) -> f64 {
    match class {
        SymmetryClass::Monoclinic | SymmetryClass::Triclinic => {
            let (a, b) = (low.a.matrix(), low.b.matrix());
            let denom = a.norm() * b.norm();
            if denom == 0.0 {
                0.0
            } else {
                (a * b - b * a).norm() / denom
            }
        }
        _ => f64::INFINITY,
    }
}

/// Required family residual of monoclinic and triclinic `D` in random
/// samples: four decades above the default relation tolerance.
pub const LOW_CLASS_RESIDUAL_FLOOR: f64 = 1e-4;

/// Random sample of a class whose normalized distance from every degeneracy
/// is at least `margin`, under a uniformly random rotation.
pub fn random_sample(class: SymmetryClass, margin: f64, rng: &mut impl Rng) -> SampleSpec {
    loop {
        let params = random_params(class, rng);
        let lower = random_lower(class, rng);
        let floor = if class.is_below(SymmetryClass::Monoclinic) {
            LOW_CLASS_RESIDUAL_FLOOR
        } else {
            margin
        };
        if degeneracy_margin(&params) < floor || lower_margin(class, &lower) < margin {
            continue;
        }
        let spec = SampleSpec {
            params,
            lower,
            rotation: Rotation::random(rng),
        };
        if spec.tensor().is_ok() {
            return spec;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_lame_cubic_is_cubic() {
        let c = generate_sample(
            &ShapeParams::Cubic { delta: 1.0 },
            &Rotation::identity(),
            &LowerParts::isotropic(1.0, 1.0),
        )
        .unwrap();
        let cert = classify(&c, &Tolerances::default());
        assert_eq!(cert.class, SymmetryClass::Cubic);
        assert!(matches!(cert.tuple_class, TupleClass::SO3));
        assert!(cert.scalar_d2_residual.unwrap() < 1e-12);
    }

    #[test]
    fn isotropic_is_isotropic() {
        let c = ElasticityTensor::isotropic(2.0, 0.7);
        assert_eq!(
            classify(&c, &Tolerances::default()).class,
            SymmetryClass::Isotropic
        );
    }

    #[test]
    fn equal_lambdas_rejected() {
        let e = generate_sample(
            &ShapeParams::Orthotropic {
                lambda: [1.0, 1.0, 3.0],
            },
            &Rotation::identity(),
            &LowerParts::isotropic(1.0, 1.0),
        );
        assert_eq!(
            e,
            Err(Error::Degenerate {
                requested: SymmetryClass::Orthotropic,
                actual: SymmetryClass::Tetragonal
            })
        );
    }

    #[test]
    fn misaligned_lower_parts_rejected() {
        let low = LowerParts {
            a: uniaxial(1.0),
            ..LowerParts::isotropic(1.0, 1.0)
        };
        let e = generate_sample(
            &ShapeParams::Cubic { delta: 1.0 },
            &Rotation::identity(),
            &low,
        );
        assert!(matches!(e, Err(Error::InvalidParameters { .. })));
    }

    #[test]
    fn digest_is_stable() {
        let c = ElasticityTensor::isotropic(1.0, 1.0);
        assert_eq!(digest(&c), digest(&c.clone()));
        assert_eq!(digest(&c).len(), 64);
    }
}
