//! Stratum membership for harmonic fourth-order tensors from their invariants:
//! relation residuals, reality inequalities, strictness conditions, recovery of
//! slice parameters and normal forms, and the bifurcation transitions between
//! classes.

use std::fmt;
use std::str::FromStr;

use nalgebra::Matrix3;

use crate::error::{Error, Result};
use crate::invariants::{normalize, InvariantVector, NormalizedInvariants};
use crate::tencore::Harmonic4;

mod relations;

/// The eight symmetry classes shared by elasticity tensors and `H^4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetryClass {
    Triclinic,
    Monoclinic,
    Orthotropic,
    Trigonal,
    Tetragonal,
    Transverse,
    Cubic,
    Isotropic,
}

impl SymmetryClass {
    pub const ALL: [SymmetryClass; 8] = [
        SymmetryClass::Triclinic,
        SymmetryClass::Monoclinic,
        SymmetryClass::Orthotropic,
        SymmetryClass::Trigonal,
        SymmetryClass::Tetragonal,
        SymmetryClass::Transverse,
        SymmetryClass::Cubic,
        SymmetryClass::Isotropic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SymmetryClass::Triclinic => "triclinic",
            SymmetryClass::Monoclinic => "monoclinic",
            SymmetryClass::Orthotropic => "orthotropic",
            SymmetryClass::Trigonal => "trigonal",
            SymmetryClass::Tetragonal => "tetragonal",
            SymmetryClass::Transverse => "transversely-isotropic",
            SymmetryClass::Cubic => "cubic",
            SymmetryClass::Isotropic => "isotropic",
        }
    }

    /// Representative subgroup of SO(3).
    pub fn group(self) -> &'static str {
        match self {
            SymmetryClass::Triclinic => "1",
            SymmetryClass::Monoclinic => "Z2",
            SymmetryClass::Orthotropic => "D2",
            SymmetryClass::Trigonal => "D3",
            SymmetryClass::Tetragonal => "D4",
            SymmetryClass::Transverse => "O(2)",
            SymmetryClass::Cubic => "O",
            SymmetryClass::Isotropic => "SO(3)",
        }
    }

    /// Partial order of the isotropy lattice: `self <= other` when a tensor
    /// of class `other` also lies in the closed stratum of `self`.
    pub fn is_below(self, other: SymmetryClass) -> bool {
        use SymmetryClass::*;
        if self == other || self == Triclinic || other == Isotropic {
            return true;
        }
        match self {
            Monoclinic => other != Triclinic,
            Orthotropic => matches!(other, Tetragonal | Transverse | Cubic),
            Trigonal => matches!(other, Transverse | Cubic),
            Tetragonal => matches!(other, Transverse | Cubic),
            _ => false,
        }
    }

    pub fn comparable(self, other: SymmetryClass) -> bool {
        self.is_below(other) || other.is_below(self)
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SymmetryClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key = s.trim().to_ascii_lowercase().replace(['_', ' '], "-");
        let found = match key.as_str() {
            "triclinic" | "1" | "trivial" => SymmetryClass::Triclinic,
            "monoclinic" | "z2" => SymmetryClass::Monoclinic,
            "orthotropic" | "orthorhombic" | "d2" => SymmetryClass::Orthotropic,
            "trigonal" | "d3" => SymmetryClass::Trigonal,
            "tetragonal" | "d4" => SymmetryClass::Tetragonal,
            "transversely-isotropic" | "transverse" | "hexagonal" | "o(2)" | "o2" => {
                SymmetryClass::Transverse
            }
            "cubic" | "o" => SymmetryClass::Cubic,
            "isotropic" | "so(3)" | "so3" => SymmetryClass::Isotropic,
            _ => return Err(format!("unknown symmetry class `{s}`")),
        };
        Ok(found)
    }
}

// ---------------------------------------------------------------------------
// Relations

#[derive(Debug)]
pub struct Term {
    coef: f64,
    factors: &'static [u8],
}

pub(crate) const fn t(coef: f64, factors: &'static [u8]) -> Term {
    Term { coef, factors }
}

/// Polynomial relation `sum coef * J_f1 * J_f2 * ... = 0`.
#[derive(Debug)]
pub struct Relation {
    terms: &'static [Term],
}

impl Relation {
    pub fn evaluate(&self, j: &[f64; 11]) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coef * t.factors.iter().map(|&k| j[k as usize]).product::<f64>())
            .sum()
    }

    /// Absolute coefficient of the leading (left-hand side) monomial.
    pub fn lead(&self) -> f64 {
        self.terms[0].coef.abs()
    }

    /// `|S(j)| / lead` on normalized invariants.
    pub fn residual(&self, j: &NormalizedInvariants) -> f64 {
        self.evaluate(&j.by_degree()).abs() / self.lead()
    }

    /// Weighted degree (deg Jk = k) if every term agrees.
    pub fn degree(&self) -> Option<u32> {
        let mut degrees = self
            .terms
            .iter()
            .map(|t| t.factors.iter().map(|&k| k as u32).sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn terms(&self) -> impl Iterator<Item = (f64, &'static [u8])> + '_ {
        self.terms.iter().map(|t| (t.coef, t.factors))
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            let sign = if t.coef < 0.0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{sign}{}", t.coef.abs())?;
            for k in t.factors {
                write!(f, "*J{k}")?;
            }
        }
        f.write_str(" = 0")
    }
}

/// The printed relations for a class with finite monodromy; empty otherwise.
/// For the orthotropic class these are the six explicit ones; the remaining
/// three are checked through the parametric polynomials.
pub fn relations(class: SymmetryClass) -> &'static [Relation] {
    match class {
        SymmetryClass::Cubic => relations::CUBIC,
        SymmetryClass::Transverse => relations::TRANSVERSE,
        SymmetryClass::Trigonal => relations::TRIGONAL,
        SymmetryClass::Tetragonal => relations::TETRAGONAL,
        SymmetryClass::Orthotropic => relations::ORTHOTROPIC,
        _ => &[],
    }
}

// ---------------------------------------------------------------------------
// Orthotropic slice

/// `Jk = pk(s1, s2, s3)` on the orthotropic slice, `k = 2..=10`.
pub fn orthotropic_invariant(k: usize, s: [f64; 3]) -> f64 {
    let [s1, s2, s3] = s;
    let terms: &[(f64, i32, i32, i32)] = match k {
        2 => &[(8.0, 2, 0, 0), (-14.0, 0, 1, 0)],
        3 => &[(-6.0, 1, 1, 0), (24.0, 0, 0, 1)],
        4 => &[
            (32.0, 4, 0, 0),
            (-112.0, 2, 1, 0),
            (40.0, 1, 0, 1),
            (68.0, 0, 2, 0),
        ],
        5 => &[
            (-16.0, 3, 1, 0),
            (64.0, 2, 0, 1),
            (28.0, 1, 2, 0),
            (-12.0, 0, 1, 1),
        ],
        6 => &[
            (128.0, 6, 0, 0),
            (-672.0, 4, 1, 0),
            (192.0, 3, 0, 1),
            (1008.0, 2, 2, 0),
            (-504.0, 1, 1, 1),
            (-344.0, 0, 3, 0),
            (-24.0, 0, 0, 2),
        ],
        7 => &[
            (-64.0, 5, 1, 0),
            (384.0, 4, 0, 1),
            (192.0, 3, 2, 0),
            (-432.0, 2, 1, 1),
            (-248.0, 1, 3, 0),
            (-96.0, 1, 0, 2),
            (104.0, 0, 2, 1),
        ],
        8 => &[
            (-768.0, 5, 0, 1),
            (288.0, 4, 2, 0),
            (608.0, 3, 1, 1),
            (-416.0, 2, 3, 0),
            (192.0, 2, 0, 2),
            (744.0, 1, 2, 1),
            (80.0, 0, 4, 0),
            (72.0, 0, 1, 2),
        ],
        9 => &[
            (-256.0, 7, 1, 0),
            (2304.0, 6, 0, 1),
            (1024.0, 5, 2, 0),
            (-5248.0, 4, 1, 1),
            (-2304.0, 3, 3, 0),
            (-1152.0, 3, 0, 2),
            (2880.0, 2, 2, 1),
            (2160.0, 1, 4, 0),
            (1328.0, 1, 1, 2),
            (-880.0, 0, 3, 1),
            (144.0, 0, 0, 3),
        ],
        10 => &[
            (-4608.0, 7, 0, 1),
            (1536.0, 6, 2, 0),
            (10752.0, 5, 1, 1),
            (-4224.0, 4, 3, 0),
            (2304.0, 4, 0, 2),
            (-1280.0, 3, 2, 1),
            (3104.0, 2, 4, 0),
            (-2688.0, 2, 1, 2),
            (-5664.0, 1, 3, 1),
            (-288.0, 1, 0, 3),
            (-800.0, 0, 5, 0),
            (-1344.0, 0, 2, 2),
        ],
        _ => panic!("orthotropic_invariant: degree {k} outside 2..=10"),
    };
    terms
        .iter()
        .map(|&(c, a, b, e)| c * s1.powi(a) * s2.powi(b) * s3.powi(e))
        .sum()
}

// 6 J6 - 9 J2 J4 - 20 J3^2 + 3 J2^3 on normalized invariants; 432 times the
// discriminant of the slice cubic.
fn orthotropic_discriminant(j: &[f64; 11]) -> f64 {
    6.0 * j[6] - 9.0 * j[4] - 20.0 * j[3] * j[3] + 3.0
}

// Numerator of s1: 3 J7 - 3 J2 J5 + 3 J3 J4 - J2^2 J3.
fn orthotropic_numerator(j: &[f64; 11]) -> f64 {
    3.0 * j[7] - 3.0 * j[5] + 3.0 * j[3] * j[4] - j[3]
}

/// Normalized `(s1, s2, s3)` from normalized invariants, if the discriminant
/// is away from zero.
fn orthotropic_sigmas(j: &[f64; 11], tol: f64) -> Option<[f64; 3]> {
    let disc = orthotropic_discriminant(j);
    if disc.abs() <= tol * 6.0 {
        return None;
    }
    let s1 = -4.5 * orthotropic_numerator(j) / disc;
    let s2 = 4.0 / 7.0 * s1 * s1 - 1.0 / 14.0;
    let s3 = j[3] / 24.0 + s1.powi(3) / 7.0 - s1 / 56.0;
    Some([s1, s2, s3])
}

/// Roots of `x^3 - s1 x^2 + s2 x - s3` by companion-matrix eigenvalues,
/// descending. Complex pairs contribute their real parts.
pub fn cubic_roots(s: [f64; 3]) -> [f64; 3] {
    let [s1, s2, s3] = s;
    let companion = Matrix3::new(s1, -s2, s3, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0);
    let eig = companion.complex_eigenvalues();
    let mut r = [eig[0].re, eig[1].re, eig[2].re];
    r.sort_by(|a, b| b.total_cmp(a));
    r
}

// ---------------------------------------------------------------------------
// Stratum results

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SliceParams {
    Isotropic,
    /// Cubic or transversely isotropic.
    Delta {
        delta: f64,
    },
    /// Trigonal or tetragonal; `sigma >= 0`.
    DeltaSigma {
        delta: f64,
        sigma: f64,
    },
    /// `sigma` are the elementary symmetric functions of `lambda`, sorted
    /// descending.
    Orthotropic {
        sigma: [f64; 3],
        lambda: [f64; 3],
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    /// In the stratum itself: relations, inequalities and strictness hold.
    Open,
    /// In the closed stratum only; the tensor has a strictly higher class.
    Boundary,
    /// Relations hold but a reality inequality fails (complex parameters).
    NotReal,
    /// Some relation fails.
    Outside,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StratumResult {
    pub class: SymmetryClass,
    pub membership: Membership,
    pub syzygy_residuals: Vec<f64>,
    /// Signed margins of the reality inequalities (>= 0 when satisfied).
    pub inequality_margins: Vec<(&'static str, f64)>,
    /// Strictness conditions separating the stratum from its boundary.
    pub genericity_flags: Vec<(&'static str, bool)>,
    pub slice: Option<SliceParams>,
    pub note: Option<&'static str>,
}

impl StratumResult {
    pub fn closed(&self) -> bool {
        matches!(self.membership, Membership::Open | Membership::Boundary)
    }

    pub fn open(&self) -> bool {
        self.membership == Membership::Open
    }

    pub fn max_residual(&self) -> f64 {
        self.syzygy_residuals.iter().copied().fold(0.0, f64::max)
    }

    fn new(class: SymmetryClass, residuals: Vec<f64>) -> Self {
        StratumResult {
            class,
            membership: Membership::Outside,
            syzygy_residuals: residuals,
            inequality_margins: vec![],
            genericity_flags: vec![],
            slice: None,
            note: None,
        }
    }

    fn settle(mut self, tol: f64) -> Self {
        self.membership = if self.max_residual() > tol {
            Membership::Outside
        } else if self.inequality_margins.iter().any(|(_, m)| *m < -tol) {
            Membership::NotReal
        } else if self.genericity_flags.iter().all(|(_, ok)| *ok) {
            Membership::Open
        } else {
            Membership::Boundary
        };
        self
    }
}

fn family_residuals(class: SymmetryClass, j: &NormalizedInvariants) -> Vec<f64> {
    relations(class).iter().map(|r| r.residual(j)).collect()
}

/// `D = 0` test: `sqrt(J2) <= tau_zero * scale`, with `scale` the norm of the
/// tensor `D` came from. The residual is `sqrt(J2) / scale`.
pub fn test_isotropic(j: &InvariantVector, scale: f64, tau_zero: f64) -> StratumResult {
    let scale = if scale > 0.0 { scale } else { 1.0 };
    let rel = j.get(2).max(0.0).sqrt() / scale;
    let mut r = StratumResult::new(SymmetryClass::Isotropic, vec![rel]);
    r.membership = if rel <= tau_zero {
        r.slice = Some(SliceParams::Isotropic);
        Membership::Open
    } else {
        Membership::Outside
    };
    r
}

fn unscaled(j: &NormalizedInvariants) -> f64 {
    j.j2().sqrt()
}

pub fn test_cubic(j: &NormalizedInvariants, tol: f64) -> StratumResult {
    let mut r = StratumResult::new(
        SymmetryClass::Cubic,
        family_residuals(SymmetryClass::Cubic, j),
    );
    r.genericity_flags.push(("J2 != 0", true));
    r = r.settle(tol);
    if r.closed() {
        r.slice = Some(SliceParams::Delta {
            delta: j.get(3) / 4.0 * unscaled(j),
        });
    }
    r
}

pub fn test_transverse(j: &NormalizedInvariants, tol: f64) -> StratumResult {
    let class = SymmetryClass::Transverse;
    let mut r = StratumResult::new(class, family_residuals(class, j));
    r.genericity_flags.push(("J2 != 0", true));
    r = r.settle(tol);
    if r.closed() {
        r.slice = Some(SliceParams::Delta {
            delta: 7.0 * j.get(3) / 18.0 * unscaled(j),
        });
    }
    r
}

/// `2 J2 (J2^2 - 3 J4)^2 - 35 J5^2 >= 0`, normalized by its leading 2.
fn dihedral_reality(j: &NormalizedInvariants) -> f64 {
    let q = 1.0 - 3.0 * j.get(4);
    (2.0 * q * q - 35.0 * j.get(5).powi(2)) / 2.0
}

fn dihedral(
    class: SymmetryClass,
    j: &NormalizedInvariants,
    tol: f64,
    sigma_weight: f64,
    second_flag: (&'static str, f64),
) -> StratumResult {
    let mut r = StratumResult::new(class, family_residuals(class, j));
    r.inequality_margins
        .push(("2J2(J2^2-3J4)^2-35J5^2", dihedral_reality(j)));
    let q = 1.0 - 3.0 * j.get(4);
    r.genericity_flags
        .push(("3J4-J2^2 != 0", q.abs() / 3.0 > tol));
    r.genericity_flags
        .push((second_flag.0, second_flag.1.abs() > tol));
    if q.abs() / 3.0 <= tol {
        // delta = -J5 / (4 (J2^2 - 3 J4)) is not available at the cubic point
        r = r.settle(tol);
        r.note = Some("delta recovery undefined where J2^2 = 3 J4");
        return r;
    }
    let delta = -j.get(5) / (4.0 * q);
    let sigma2 = (1.0 - 280.0 * delta * delta) / sigma_weight;
    if sigma2 < -tol {
        r.inequality_margins.push(("sigma^2", sigma2));
    }
    r = r.settle(tol);
    if r.closed() {
        let s = unscaled(j);
        r.slice = Some(SliceParams::DeltaSigma {
            delta: delta * s,
            sigma: sigma2.max(0.0).sqrt() * s,
        });
    }
    r
}

pub fn test_trigonal(j: &NormalizedInvariants, tol: f64) -> StratumResult {
    let flag = (98.0 * j.get(4) - 41.0) / 98.0;
    dihedral(
        SymmetryClass::Trigonal,
        j,
        tol,
        16.0,
        ("98J4-41J2^2 != 0", flag),
    )
}

pub fn test_tetragonal(j: &NormalizedInvariants, tol: f64) -> StratumResult {
    let flag = (5.0 - 8.0 * j.get(4) - 70.0 * j.get(3).powi(2)) / 70.0;
    dihedral(
        SymmetryClass::Tetragonal,
        j,
        tol,
        8.0,
        ("5J2^3-8J2J4-70J3^2 != 0", flag),
    )
}

/// `6 J2 disc^2 - 405 M^2 >= 0` with `M = 3J7 - 3J2J5 + 3J3J4 - J2^2 J3`;
/// equal to `14 disc^2 Delta2` on the slice. Normalized by the leading 6.
fn orthotropic_second_inequality(j: &[f64; 11]) -> f64 {
    let disc = orthotropic_discriminant(j);
    let m = orthotropic_numerator(j);
    (6.0 * disc * disc - 405.0 * m * m) / 6.0
}

pub fn test_orthotropic(j: &NormalizedInvariants, tol: f64) -> StratumResult {
    let class = SymmetryClass::Orthotropic;
    let jd = j.by_degree();
    let mut r = StratumResult::new(class, family_residuals(class, j));
    let disc = orthotropic_discriminant(&jd) / 6.0;
    r.inequality_margins.push(("6J6-9J2J4-20J3^2+3J2^3", disc));
    r.inequality_margins
        .push(("N2", orthotropic_second_inequality(&jd)));
    r.genericity_flags.push(("discriminant > 0", disc > tol));
    let Some(sig) = orthotropic_sigmas(&jd, tol) else {
        r = r.settle(tol);
        r.note = Some("closed-stratum boundary; use higher-symmetry tests");
        return r;
    };
    for k in 8..=10 {
        r.syzygy_residuals
            .push((jd[k] - orthotropic_invariant(k, sig)).abs());
    }
    r = r.settle(tol);
    if r.closed() {
        let s = unscaled(j);
        let sigma = [sig[0] * s, sig[1] * s * s, sig[2] * s.powi(3)];
        r.slice = Some(SliceParams::Orthotropic {
            sigma,
            lambda: cubic_roots(sig).map(|l| l * s),
        });
    }
    r
}

/// Residuals of a class's relations on normalized invariants. For the
/// orthotropic class the three parametric checks are appended when the
/// discriminant allows recovery.
pub fn syzygy_residuals(class: SymmetryClass, j: &NormalizedInvariants) -> Vec<f64> {
    match class {
        SymmetryClass::Orthotropic => test_orthotropic(j, 0.0).syzygy_residuals,
        _ => family_residuals(class, j),
    }
}

/// Runs the test for one class with finite monodromy.
pub fn test_class(
    class: SymmetryClass,
    j: &NormalizedInvariants,
    tol: f64,
) -> Option<StratumResult> {
    Some(match class {
        SymmetryClass::Cubic => test_cubic(j, tol),
        SymmetryClass::Transverse => test_transverse(j, tol),
        SymmetryClass::Tetragonal => test_tetragonal(j, tol),
        SymmetryClass::Trigonal => test_trigonal(j, tol),
        SymmetryClass::Orthotropic => test_orthotropic(j, tol),
        _ => return None,
    })
}

/// Classes with finite monodromy, in decision order.
pub const DECISION_ORDER: [SymmetryClass; 5] = [
    SymmetryClass::Cubic,
    SymmetryClass::Transverse,
    SymmetryClass::Tetragonal,
    SymmetryClass::Trigonal,
    SymmetryClass::Orthotropic,
];

#[derive(Clone, Debug, PartialEq)]
pub struct H4Verdict {
    /// `None` when no finite-monodromy class holds (monoclinic or triclinic;
    /// the invariants used here do not separate those two).
    pub class: Option<SymmetryClass>,
    /// Every test that was run, in order.
    pub tested: Vec<StratumResult>,
}

impl H4Verdict {
    pub fn result(&self) -> Option<&StratumResult> {
        let c = self.class?;
        self.tested.iter().find(|r| r.class == c)
    }
}

/// Top-down classification: isotropic, cubic, transverse, tetragonal,
/// trigonal, orthotropic. The first class whose relations, inequalities and
/// strictness conditions all hold wins.
pub fn classify_h4(j: &InvariantVector, scale: f64, tau_zero: f64, tol: f64) -> H4Verdict {
    let iso = test_isotropic(j, scale, tau_zero);
    if iso.open() {
        return H4Verdict {
            class: Some(SymmetryClass::Isotropic),
            tested: vec![iso],
        };
    }
    let mut tested = vec![iso];
    let Ok(n) = normalize(j, 0.0) else {
        return H4Verdict {
            class: None,
            tested,
        };
    };
    for class in DECISION_ORDER {
        let r = test_class(class, &n, tol).expect("finite monodromy class");
        let won = r.open();
        tested.push(r);
        if won {
            return H4Verdict {
                class: Some(class),
                tested,
            };
        }
    }
    H4Verdict {
        class: None,
        tested,
    }
}

/// Normal form of a member, with the conventions `sigma >= 0` and descending
/// `lambda`.
pub fn reconstruct_normal_form(r: &StratumResult) -> Result<Harmonic4> {
    if !r.closed() {
        return Err(Error::NoNormalForm(format!(
            "not a member of the {} closed stratum",
            r.class
        )));
    }
    let missing = || Error::NoNormalForm(format!("no slice parameters recovered for {}", r.class));
    let slice = r.slice.ok_or_else(missing)?;
    Ok(match (r.class, slice) {
        (SymmetryClass::Isotropic, _) => Harmonic4::zero(),
        (SymmetryClass::Cubic, SliceParams::Delta { delta }) => Harmonic4::cubic(delta),
        (SymmetryClass::Transverse, SliceParams::Delta { delta }) => Harmonic4::transverse(delta),
        (SymmetryClass::Trigonal, SliceParams::DeltaSigma { delta, sigma }) => {
            Harmonic4::trigonal(delta, sigma)
        }
        (SymmetryClass::Tetragonal, SliceParams::DeltaSigma { delta, sigma }) => {
            Harmonic4::tetragonal(delta, sigma)
        }
        (SymmetryClass::Orthotropic, SliceParams::Orthotropic { lambda, .. }) => {
            Harmonic4::orthotropic(lambda)
        }
        _ => return Err(missing()),
    })
}

// ---------------------------------------------------------------------------
// Bifurcations

#[derive(Clone, Debug, PartialEq)]
pub struct Transition {
    pub from: &'static str,
    pub to: &'static str,
    /// Scale-free distance of the condition from vanishing.
    pub residual: f64,
}

impl Transition {
    pub fn label(&self) -> String {
        format!("{}->{}", self.from, self.to)
    }
}

fn sorted(mut v: Vec<Transition>) -> Vec<Transition> {
    v.sort_by(|a, b| a.residual.total_cmp(&b.residual));
    v
}

/// Distance from each finite-monodromy class, as the largest normalized
/// relation residual of its family, closest first.
pub fn family_distances(from: &'static str, j: &InvariantVector, tol: f64) -> Vec<Transition> {
    let Ok(n) = normalize(j, 0.0) else {
        return vec![];
    };
    sorted(
        DECISION_ORDER
            .iter()
            .map(|&c| {
                let r = test_class(c, &n, tol).expect("finite monodromy class");
                Transition {
                    from,
                    to: c.group(),
                    residual: r.max_residual(),
                }
            })
            .collect(),
    )
}

/// Degeneracy transitions of a normal-form slice point whose `D` has squared
/// norm `j2`, closest first.
pub fn slice_transitions(class: SymmetryClass, slice: SliceParams, j2: f64) -> Vec<Transition> {
    let tr = |from, to, residual| Transition { from, to, residual };
    match (class, slice) {
        (
            SymmetryClass::Trigonal | SymmetryClass::Tetragonal,
            SliceParams::DeltaSigma { delta, sigma },
        ) => {
            let (from, cubic_ratio) = if class == SymmetryClass::Trigonal {
                ("D3", 50.0)
            } else {
                ("D4", 25.0)
            };
            sorted(vec![
                tr(from, "O(2)", sigma.abs() / j2.sqrt()),
                tr(
                    from,
                    "O",
                    (sigma * sigma - cubic_ratio * delta * delta).abs() / j2,
                ),
            ])
        }
        (SymmetryClass::Orthotropic, SliceParams::Orthotropic { lambda, .. }) => {
            let s = j2.sqrt();
            let l = lambda.map(|x| x / s);
            let pairs = [(0, 1, 2), (0, 2, 1), (1, 2, 0)];
            let collision = pairs
                .iter()
                .map(|&(a, b, _)| (l[a] - l[b]).abs())
                .fold(f64::MAX, f64::min);
            let uniaxial = pairs
                .iter()
                .map(|&(a, b, c)| {
                    (l[a] - l[b])
                        .abs()
                        .max((l[a] + l[b] + 8.0 * l[c]).abs() / 2.0)
                })
                .fold(f64::MAX, f64::min);
            let all = pairs
                .iter()
                .map(|&(a, b, _)| (l[a] - l[b]).abs())
                .fold(0.0, f64::max);
            sorted(vec![
                tr("D2", "D4", collision),
                tr("D2", "O(2)", uniaxial),
                tr("D2", "O", all),
            ])
        }
        _ => vec![],
    }
}

/// Conditions whose vanishing moves the tensor up the lattice from its current
/// class, sorted by residual. Below the orthotropic class every
/// finite-monodromy family is listed with its largest relation residual.
pub fn bifurcation_path(j: &InvariantVector, tol: f64) -> Vec<Transition> {
    let Ok(n) = normalize(j, 0.0) else {
        return vec![];
    };
    let v = classify_h4(j, 0.0, 0.0, tol);
    let tr = |from, to, residual| Transition { from, to, residual };
    match (v.class, v.result().and_then(|r| r.slice)) {
        (Some(SymmetryClass::Cubic), _) => vec![tr("O", "SO(3)", 1.0)],
        (Some(SymmetryClass::Transverse), _) => vec![tr("O(2)", "SO(3)", 1.0)],
        (Some(c), Some(slice)) => slice_transitions(c, slice, n.j2()),
        (Some(_), _) => vec![],
        (None, _) => family_distances("1", j, tol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::boehler_invariants;

    fn normalized(d: &Harmonic4) -> NormalizedInvariants {
        boehler_invariants(d).normalize(0.0).unwrap()
    }

    #[test]
    fn relations_are_weighted_homogeneous() {
        for c in DECISION_ORDER {
            for r in relations(c) {
                assert!(r.degree().is_some(), "{c}: {r}");
            }
        }
    }

    #[test]
    fn lattice_examples() {
        use SymmetryClass::*;
        assert!(Orthotropic.is_below(Cubic));
        assert!(Trigonal.is_below(Transverse));
        assert!(!Trigonal.comparable(Tetragonal));
        assert!(!Orthotropic.comparable(Trigonal));
        assert!(!Cubic.comparable(Transverse));
        assert!(Monoclinic.is_below(Trigonal));
    }

    #[test]
    fn class_names_parse_back() {
        for c in SymmetryClass::ALL {
            assert_eq!(c.name().parse::<SymmetryClass>(), Ok(c));
            assert_eq!(c.group().parse::<SymmetryClass>(), Ok(c));
        }
    }

    #[test]
    fn cubic_member_recovers_delta() {
        let r = test_cubic(&normalized(&Harmonic4::cubic(1.0)), 1e-8);
        assert!(r.open());
        assert_eq!(
            r.slice
                .map(|s| matches!(s, SliceParams::Delta { delta } if (delta - 1.0).abs() < 1e-12)),
            Some(true)
        );
    }

    #[test]
    fn transverse_is_trigonal_boundary() {
        let r = test_trigonal(&normalized(&Harmonic4::transverse(1.0)), 1e-8);
        assert_eq!(r.membership, Membership::Boundary);
    }

    #[test]
    fn cubic_is_tetragonal_boundary() {
        let r = test_tetragonal(&normalized(&Harmonic4::cubic(1.0)), 1e-8);
        assert_eq!(r.membership, Membership::Boundary);
    }

    #[test]
    fn cubic_roots_sorted() {
        let r = cubic_roots([6.0, 11.0, 6.0]);
        for (a, b) in r.iter().zip([3.0, 2.0, 1.0]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn orthotropic_slice_at_one_two_three() {
        // lambda = (1, 2, 3): J2 = 134, J3 = -252, sigma2 recovers 11
        let s = [6.0, 11.0, 6.0];
        assert_eq!(orthotropic_invariant(2, s), 134.0);
        assert_eq!(orthotropic_invariant(3, s), -252.0);
        assert!((4.0 / 7.0 * 36.0 - 134.0 / 14.0 - 11.0f64).abs() < 1e-12);
    }
}
