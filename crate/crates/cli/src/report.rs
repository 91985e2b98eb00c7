use std::fmt::Write as _;

use elastic_symmetry::classifier::Certificate;
use elastic_symmetry::h4strata::{Membership, SliceParams, StratumResult};
use elastic_symmetry::quadstrata::TupleClass;
use elastic_symmetry::tencore::Vec3;
use serde_json::{json, Map, Value};

fn vec3(v: &Vec3) -> Value {
    json!([v.x, v.y, v.z])
}

fn membership(m: Membership) -> &'static str {
    match m {
        Membership::Open => "open",
        Membership::Boundary => "boundary",
        Membership::NotReal => "not-real",
        Membership::Outside => "outside",
    }
}

fn tuple_class(t: &TupleClass) -> Value {
    let mut v = json!({ "class": t.name() });
    match t {
        TupleClass::Z2 { normal } => v["normal"] = vec3(normal),
        TupleClass::O2 { axis } => v["axis"] = vec3(axis),
        TupleClass::D2 { frame } => {
            v["frame"] = Value::Array(
                (0..3)
                    .map(|c| vec3(&frame.column(c).into_owned()))
                    .collect(),
            );
        }
        TupleClass::Trivial | TupleClass::SO3 => {}
    }
    v
}

fn parameters(p: &SliceParams) -> Value {
    match *p {
        SliceParams::Isotropic => json!({}),
        SliceParams::Delta { delta } => json!({ "delta": delta }),
        SliceParams::DeltaSigma { delta, sigma } => json!({ "delta": delta, "sigma": sigma }),
        SliceParams::Orthotropic { sigma, lambda } => json!({ "sigma": sigma, "lambda": lambda }),
    }
}

fn stratum(r: &StratumResult) -> Value {
    let margins: Map<String, Value> = r
        .inequality_margins
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    let flags: Map<String, Value> = r
        .genericity_flags
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    json!({
        "class": r.class.name(),
        "membership": membership(r.membership),
        "syzygy_residuals": r.syzygy_residuals,
        "inequality_margins": margins,
        "genericity": flags,
        "note": r.note,
    })
}

/// Machine-readable report for one record. Keys come out sorted.
pub fn to_json(id: &str, c: &Certificate, strict_mga: bool) -> Value {
    json!({
        "id": id,
        "digest": c.digest,
        "class": c.class.name(),
        "group": c.class.group(),
        "tuple_class": tuple_class(&c.tuple_class),
        "d2_class": c.d2_class.as_ref().map(tuple_class),
        "d_is_zero": c.d_is_zero,
        "invariants": {
            "raw": c.invariants.values(),
            "normalized": c.normalized.map(|n| n.values()),
        },
        "strata": c.h4.as_ref().map_or(vec![], |v| v.tested.iter().map(stratum).collect::<Vec<_>>()),
        "h4_class": c.h4.as_ref().and_then(|v| v.class).map(|k| k.name()),
        "scalar_d2_residual": c.scalar_d2_residual,
        "mga_violation": c.mga_violation,
        "parameters": c.parameters.as_ref().map(parameters),
        "plane_test": c.plane_test.as_ref().map(|p| json!({ "normal": vec3(&p.normal), "passed": p.passed })),
        "nearest": c.nearest.iter().map(|t| json!({ "transition": t.label(), "residual": t.residual })).collect::<Vec<_>>(),
        "tolerances": {
            "syzygy": c.tolerances.syzygy,
            "zero": c.tolerances.zero,
            "rotation": c.tolerances.rotation,
            "strict_mga": strict_mga,
        },
        "trail": c.trail,
        "warnings": c.warnings,
    })
}

fn fmt_params(p: &SliceParams) -> String {
    match *p {
        SliceParams::Isotropic => String::new(),
        SliceParams::Delta { delta } => format!("delta = {delta}"),
        SliceParams::DeltaSigma { delta, sigma } => format!("delta = {delta}, sigma = {sigma}"),
        SliceParams::Orthotropic { lambda, .. } => {
            format!("lambda = ({}, {}, {})", lambda[0], lambda[1], lambda[2])
        }
    }
}

pub fn to_text(id: &str, c: &Certificate) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{id}: {} [{}]", c.class.name(), c.class.group());
    let _ = writeln!(s, "  tuple class: {}", c.tuple_class.name());
    if let Some(p) = c
        .parameters
        .as_ref()
        .map(fmt_params)
        .filter(|p| !p.is_empty())
    {
        let _ = writeln!(s, "  parameters: {p}");
    }
    for (class, r) in c.residual_summary() {
        let _ = writeln!(s, "  residual {:<24} {r:.3e}", class.name());
    }
    for t in &c.nearest {
        let _ = writeln!(s, "  nearest {:<12} {:.3e}", t.label(), t.residual);
    }
    if c.mga_violation {
        let _ = writeln!(s, "  MGA violation");
    }
    for w in &c.warnings {
        let _ = writeln!(s, "  warning: {w}");
    }
    s
}
