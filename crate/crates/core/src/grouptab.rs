//! Closed subgroups of SO(3), their normalizers and monodromy groups, and the
//! character formulas for fixed-point dimensions. Regenerates the
//! stratification tables of `Ela` and `H^4`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::h4strata::SymmetryClass;

/// Closed subgroups of SO(3) up to conjugacy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subgroup {
    Trivial,
    /// Cyclic group `Z_n`, `n >= 2`.
    Cyclic(u32),
    /// Dihedral group `D_n`, `n >= 2`.
    Dihedral(u32),
    Tetrahedral,
    Octahedral,
    Icosahedral,
    SO2,
    O2,
    SO3,
}

impl Subgroup {
    pub fn of_class(class: SymmetryClass) -> Subgroup {
        match class {
            SymmetryClass::Triclinic => Subgroup::Trivial,
            SymmetryClass::Monoclinic => Subgroup::Cyclic(2),
            SymmetryClass::Orthotropic => Subgroup::Dihedral(2),
            SymmetryClass::Trigonal => Subgroup::Dihedral(3),
            SymmetryClass::Tetragonal => Subgroup::Dihedral(4),
            SymmetryClass::Transverse => Subgroup::O2,
            SymmetryClass::Cubic => Subgroup::Octahedral,
            SymmetryClass::Isotropic => Subgroup::SO3,
        }
    }

    /// Dimension as a Lie group.
    pub fn dim(self) -> u32 {
        match self {
            Subgroup::SO2 | Subgroup::O2 => 1,
            Subgroup::SO3 => 3,
            _ => 0,
        }
    }

    pub fn normalizer(self) -> Subgroup {
        match self {
            Subgroup::Trivial | Subgroup::SO3 => Subgroup::SO3,
            Subgroup::Cyclic(_) | Subgroup::SO2 | Subgroup::O2 => Subgroup::O2,
            Subgroup::Dihedral(2) | Subgroup::Tetrahedral | Subgroup::Octahedral => {
                Subgroup::Octahedral
            }
            Subgroup::Dihedral(n) => Subgroup::Dihedral(2 * n),
            Subgroup::Icosahedral => Subgroup::Icosahedral,
        }
    }

    /// `N(H)/H`.
    pub fn monodromy(self) -> Monodromy {
        match self {
            Subgroup::Trivial => Monodromy::SO3,
            Subgroup::Cyclic(_) => Monodromy::O2,
            Subgroup::Dihedral(2) => Monodromy::Symmetric(3),
            Subgroup::Dihedral(_) | Subgroup::Tetrahedral | Subgroup::SO2 => {
                Monodromy::Symmetric(2)
            }
            Subgroup::Octahedral | Subgroup::Icosahedral | Subgroup::O2 | Subgroup::SO3 => {
                Monodromy::Trivial
            }
        }
    }

    /// Contribution of one copy of `H^k` to `V^H`.
    pub fn fixed_in_harmonic(self, k: u32) -> u32 {
        let fl = |p: u32| k / p;
        let even = u32::from(k.is_multiple_of(2));
        match self {
            Subgroup::Trivial => 2 * k + 1,
            Subgroup::Cyclic(p) => 2 * fl(p) + 1,
            Subgroup::Dihedral(p) => fl(p) + even,
            // the bracket sums below never drop under k - 1
            Subgroup::Tetrahedral => 2 * fl(3) + fl(2) + 1 - k,
            Subgroup::Octahedral => fl(4) + fl(3) + fl(2) + 1 - k,
            Subgroup::Icosahedral => fl(5) + fl(3) + fl(2) + 1 - k,
            Subgroup::SO2 => 1,
            Subgroup::O2 => even,
            Subgroup::SO3 => u32::from(k == 0),
        }
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subgroup::Trivial => f.write_str("1"),
            Subgroup::Cyclic(n) => write!(f, "Z{n}"),
            Subgroup::Dihedral(n) => write!(f, "D{n}"),
            Subgroup::Tetrahedral => f.write_str("T"),
            Subgroup::Octahedral => f.write_str("O"),
            Subgroup::Icosahedral => f.write_str("I"),
            Subgroup::SO2 => f.write_str("SO(2)"),
            Subgroup::O2 => f.write_str("O(2)"),
            Subgroup::SO3 => f.write_str("SO(3)"),
        }
    }
}

impl FromStr for Subgroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_ascii_uppercase();
        let unknown = || Error::UnknownSubgroup(s.to_string());
        let order = |rest: &str| rest.parse::<u32>().ok().filter(|&n| n >= 2);
        Ok(match key.as_str() {
            "1" | "TRIV" | "TRIVIAL" => Subgroup::Trivial,
            "T" => Subgroup::Tetrahedral,
            "O" => Subgroup::Octahedral,
            "I" => Subgroup::Icosahedral,
            "SO(2)" | "SO2" => Subgroup::SO2,
            "O(2)" | "O2" => Subgroup::O2,
            "SO(3)" | "SO3" => Subgroup::SO3,
            _ => {
                if let Some(rest) = key.strip_prefix('Z') {
                    Subgroup::Cyclic(order(rest).ok_or_else(unknown)?)
                } else if let Some(rest) = key.strip_prefix('D') {
                    Subgroup::Dihedral(order(rest).ok_or_else(unknown)?)
                } else {
                    return Err(unknown());
                }
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Monodromy {
    Trivial,
    /// Symmetric group `S_n`.
    Symmetric(u32),
    O2,
    SO3,
}

impl Monodromy {
    /// `None` for infinite groups.
    pub fn cardinality(self) -> Option<u64> {
        match self {
            Monodromy::Trivial => Some(1),
            Monodromy::Symmetric(n) => Some((1..=u64::from(n)).product()),
            Monodromy::O2 | Monodromy::SO3 => None,
        }
    }
}

impl fmt::Display for Monodromy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monodromy::Trivial => f.write_str("1"),
            Monodromy::Symmetric(n) => write!(f, "S{n}"),
            Monodromy::O2 => f.write_str("O(2)"),
            Monodromy::SO3 => f.write_str("SO(3)"),
        }
    }
}

/// `alpha[k]` copies of `H^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplicities(pub Vec<u32>);

impl Multiplicities {
    /// `Ela = 2 H^0 + 2 H^2 + H^4`.
    pub fn elasticity() -> Self {
        Multiplicities(vec![2, 0, 2, 0, 1])
    }

    pub fn harmonic(k: usize) -> Self {
        let mut a = vec![0; k + 1];
        a[k] = 1;
        Multiplicities(a)
    }

    /// `n` symmetric second-order tensors: `n H^0 + n H^2`.
    pub fn quadratic_forms(n: u32) -> Self {
        Multiplicities(vec![n, 0, n])
    }

    pub fn dim(&self) -> u32 {
        self.0
            .iter()
            .zip(0u32..)
            .map(|(a, k)| a * (2 * k + 1))
            .sum()
    }
}

pub fn fixed_point_dim(h: Subgroup, m: &Multiplicities) -> u32 {
    m.0.iter()
        .zip(0u32..)
        .map(|(a, k)| a * h.fixed_in_harmonic(k))
        .sum()
}

/// `(dim V^H, dim Sigma_H / G, dim Sigma_H)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StratumDims {
    pub fixed: i64,
    pub quotient: i64,
    pub stratum: i64,
}

pub fn stratum_dims(h: Subgroup, m: &Multiplicities) -> StratumDims {
    let fixed = i64::from(fixed_point_dim(h, m));
    let n = i64::from(h.normalizer().dim());
    StratumDims {
        fixed,
        quotient: fixed + i64::from(h.dim()) - n,
        stratum: fixed + 3 - n,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub subgroup: Subgroup,
    pub normalizer: Subgroup,
    pub monodromy: Monodromy,
    /// `None` for infinite monodromy.
    pub cardinality: Option<u64>,
    pub ela: StratumDims,
    pub h4: StratumDims,
}

pub fn class_info(h: Subgroup) -> ClassInfo {
    let monodromy = h.monodromy();
    ClassInfo {
        subgroup: h,
        normalizer: h.normalizer(),
        monodromy,
        cardinality: monodromy.cardinality(),
        ela: stratum_dims(h, &Multiplicities::elasticity()),
        h4: stratum_dims(h, &Multiplicities::harmonic(4)),
    }
}

/// Subgroups of the eight elasticity classes, in table order.
pub const ELASTICITY_SUBGROUPS: [Subgroup; 8] = [
    Subgroup::Trivial,
    Subgroup::Cyclic(2),
    Subgroup::Dihedral(2),
    Subgroup::Dihedral(3),
    Subgroup::Dihedral(4),
    Subgroup::O2,
    Subgroup::Octahedral,
    Subgroup::SO3,
];

/// Rows `[H] | N(H) | N(H)/H | card | dim V^H | dim Sigma/G | dim Sigma`.
pub fn render_table(title: &str, m: &Multiplicities) -> String {
    let mut out = format!("{title}\n");
    let header = [
        "[H]", "N(H)", "N(H)/H", "card", "dim V^H", "dim S/G", "dim S",
    ];
    let rows: Vec<[String; 7]> = ELASTICITY_SUBGROUPS
        .iter()
        .map(|&h| {
            let d = stratum_dims(h, m);
            let card = h
                .monodromy()
                .cardinality()
                .map_or("inf".to_string(), |c| c.to_string());
            [
                h.to_string(),
                h.normalizer().to_string(),
                h.monodromy().to_string(),
                card,
                d.fixed.to_string(),
                d.quotient.to_string(),
                d.stratum.to_string(),
            ]
        })
        .collect();
    let widths: Vec<usize> = (0..7)
        .map(|c| {
            rows.iter()
                .map(|r| r[c].len())
                .chain([header[c].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    out += &line(header.to_vec());
    out += &line(
        widths
            .iter()
            .map(|&w| "-".repeat(w))
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str)
            .collect(),
    );
    for r in &rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

/// Both stratification tables, `Ela` then `H^4`.
pub fn render_tables() -> String {
    format!(
        "{}\n{}",
        render_table("Ela (dim 21)", &Multiplicities::elasticity()),
        render_table("H^4 (dim 9)", &Multiplicities::harmonic(4))
    )
}
