use std::process::ExitCode;

use clap::Args;
use elastic_symmetry::classifier::{generate_sample, random_lower, ShapeParams};
use elastic_symmetry::tencore::Mat3;
use elastic_symmetry::{Deviator, ElasticityTensor, Rotation, SymmetryClass};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde_json::{json, Value};

use crate::input::{InputRecord, MatrixFormat};

#[derive(Args)]
pub struct GenerateArgs {
    /// Target class, by name or group label (cubic, D3, transverse, ...).
    class: SymmetryClass,
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<f64>,
    /// Orthotropic coefficients, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lambda: Option<Vec<f64>>,
    /// The nine h-chart components of D (monoclinic, triclinic).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    h: Option<Vec<f64>>,
    /// Lame-type isotropic part `lambda,mu` (default 1,1).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lame: Option<Vec<f64>>,
    /// Draw second-order parts `a`, `b` compatible with the class from the
    /// seed instead of setting them to zero.
    #[arg(long)]
    random_lower: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Keep the normal frame instead of a seeded random rotation.
    #[arg(long)]
    no_rotation: bool,
    /// Multiply every component by `1 + eps z`, `z` standard normal.
    #[arg(long)]
    perturb: Option<f64>,
    #[arg(long)]
    id: Option<String>,
}

fn need(v: Option<f64>, name: &str, class: SymmetryClass) -> Result<f64, String> {
    v.ok_or_else(|| format!("{class} needs --{name}"))
}

fn shape(args: &GenerateArgs) -> Result<ShapeParams, String> {
    let c = args.class;
    let arr = |v: &Option<Vec<f64>>, name: &str, len: usize| match v {
        Some(v) if v.len() == len => Ok(v.clone()),
        Some(v) => Err(format!("--{name} takes {len} values, got {}", v.len())),
        None => Err(format!("{c} needs --{name}")),
    };
    Ok(match c {
        SymmetryClass::Isotropic => ShapeParams::Isotropic,
        SymmetryClass::Cubic => ShapeParams::Cubic {
            delta: need(args.delta, "delta", c)?,
        },
        SymmetryClass::Transverse => ShapeParams::Transverse {
            delta: need(args.delta, "delta", c)?,
        },
        SymmetryClass::Trigonal => ShapeParams::Trigonal {
            delta: need(args.delta, "delta", c)?,
            sigma: need(args.sigma, "sigma", c)?,
        },
        SymmetryClass::Tetragonal => ShapeParams::Tetragonal {
            delta: need(args.delta, "delta", c)?,
            sigma: need(args.sigma, "sigma", c)?,
        },
        SymmetryClass::Orthotropic => {
            let l = arr(&args.lambda, "lambda", 3)?;
            ShapeParams::Orthotropic {
                lambda: [l[0], l[1], l[2]],
            }
        }
        SymmetryClass::Monoclinic => ShapeParams::Monoclinic {
            h: to9(arr(&args.h, "h", 9)?),
        },
        SymmetryClass::Triclinic => ShapeParams::Triclinic {
            h: to9(arr(&args.h, "h", 9)?),
        },
    })
}

fn to9(v: Vec<f64>) -> [f64; 9] {
    std::array::from_fn(|i| v[i])
}

fn rows(m: &Mat3) -> Value {
    json!((0..3)
        .map(|i| [m[(i, 0)], m[(i, 1)], m[(i, 2)]])
        .collect::<Vec<_>>())
}

fn shape_json(p: &ShapeParams) -> Value {
    match *p {
        ShapeParams::Isotropic => json!({}),
        ShapeParams::Cubic { delta } | ShapeParams::Transverse { delta } => {
            json!({ "delta": delta })
        }
        ShapeParams::Trigonal { delta, sigma } | ShapeParams::Tetragonal { delta, sigma } => {
            json!({ "delta": delta, "sigma": sigma })
        }
        ShapeParams::Orthotropic { lambda } => json!({ "lambda": lambda }),
        ShapeParams::Monoclinic { h } | ShapeParams::Triclinic { h } => json!({ "h": h }),
    }
}

pub fn run(args: &GenerateArgs) -> ExitCode {
    match build(args) {
        Ok(v) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&v).expect("serializable")
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn build(args: &GenerateArgs) -> Result<Value, String> {
    let params = shape(args)?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let drawn = random_lower(args.class, &mut rng);
    let mut low = if args.random_lower {
        drawn
    } else {
        elastic_symmetry::classifier::LowerParts {
            a: Deviator::zero(),
            b: Deviator::zero(),
            ..drawn
        }
    };
    let [lambda, mu] = match args.lame.as_deref() {
        Some(&[l, m]) => [l, m],
        Some(v) => return Err(format!("--lame takes 2 values, got {}", v.len())),
        None => [1.0, 1.0],
    };
    low.lambda = lambda;
    low.mu = mu;
    let g = if args.no_rotation {
        Rotation::identity()
    } else {
        Rotation::random(&mut rng)
    };
    let mut c = generate_sample(&params, &g, &low).map_err(|e| e.to_string())?;
    if let Some(eps) = args.perturb {
        c = ElasticityTensor::from_components(c.components().map(|x| {
            let z: f64 = rng.sample(StandardNormal);
            x * (1.0 + eps * z)
        }));
    }
    let v = c.voigt();
    let record = InputRecord {
        id: args
            .id
            .clone()
            .unwrap_or_else(|| format!("{}-seed{}", args.class.name(), args.seed)),
        format: Some(MatrixFormat::Voigt),
        matrix: (0..36).map(|i| v[(i / 6, i % 6)]).collect(),
        units: None,
    };
    let mut out = serde_json::to_value(&record).expect("serializable");
    out["provenance"] = json!({
        "class": args.class.name(),
        "params": shape_json(&params),
        "lambda": low.lambda,
        "mu": low.mu,
        "a": rows(low.a.matrix()),
        "b": rows(low.b.matrix()),
        "rotation": rows(g.matrix()),
        "seed": args.seed,
        "perturb": args.perturb,
    });
    Ok(json!([out]))
}
