use cartan_limits::limits::{
    characteristic_configuration, classify_abelian_subalgebra, configuration_of_plane,
    random_table_instance, Digraph,
};
use cartan_limits::linalg::normalizer_dimension;
use cartan_limits::numeric::{detect_limit_plane, RealMatrixSeq};
use cartan_limits::sl2::classify_sl2;
use cartan_limits::{
    full_classify, parse_hreal, ConfigClass, HMatrix3, HReal, LimitClass, Matrix3, Plane2,
    QMatrix3, Rational,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::CliError;

/// A report plus the error that should set the exit status, if any.
pub struct Output {
    pub json: Value,
    pub error: Option<CliError>,
}

impl From<Value> for Output {
    fn from(json: Value) -> Self {
        Output { json, error: None }
    }
}

type Rows = [[String; 3]; 3];

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixInput {
    #[serde(rename = "P")]
    p: Rows,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisInput {
    basis: [Rows; 2],
}

fn parse_entry(s: &str) -> Result<HReal, CliError> {
    parse_hreal(s).map_err(|source| CliError::Entry {
        entry: s.to_string(),
        source,
    })
}

fn parse_matrix(rows: &Rows) -> Result<HMatrix3, CliError> {
    let mut m = HMatrix3::zero();
    for (i, row) in rows.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            m.0[i][j] = parse_entry(s)?;
        }
    }
    Ok(m)
}

fn parse_rational_matrix(rows: &Rows) -> Result<QMatrix3, CliError> {
    let m = parse_matrix(rows)?;
    let mut q = QMatrix3::zero();
    for (qi, (mi, ri)) in q.0.iter_mut().zip(m.0.iter().zip(rows)) {
        for (x, (y, s)) in qi.iter_mut().zip(mi.iter().zip(ri)) {
            *x = y
                .as_rational()
                .ok_or_else(|| CliError::Input(format!("entry {s:?} is not a rational number")))?;
        }
    }
    Ok(q)
}

fn matrix_json<F: std::fmt::Display>(m: &Matrix3<F>) -> Value {
    Value::from(
        m.0.iter()
            .map(|r| Value::from(r.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
            .collect::<Vec<_>>(),
    )
}

fn plane_json(p: &Plane2<Rational>) -> Value {
    Value::from(p.basis().iter().map(matrix_json).collect::<Vec<_>>())
}

fn coordinate(x: &HReal) -> Value {
    json!({
        "valuation": x.valuation().ok().map(|v| v.to_string()),
        "magnitude": x.magnitude().as_str(),
    })
}

pub fn classify_matrix(p: &HMatrix3) -> Result<Output, CliError> {
    let report = full_classify(p)?;
    let t = &report.triangle;
    let json = json!({
        "input": { "P": matrix_json(p) },
        "delta": coordinate(&t.delta),
        "epsilon": coordinate(&t.epsilon),
        "eta": coordinate(&t.eta),
        "alpha": coordinate(&t.alpha),
        "infinitesimal_sides": report.counts.sides,
        "infinitesimal_angles": report.counts.angles,
        "triangle_class": report.triangle_class.as_str(),
        "oracle_class": report.oracle_class.as_str(),
        "agree": report.agree,
        "config_class": report.config_class.as_str(),
        "normalizer_dim": report.normalizer_dim,
        "limit_algebra": plane_json(&report.shadow_plane),
    });
    let error = (!report.agree).then(|| {
        CliError::Internal(format!(
            "triangle table gives {} but the Grassmannian limit is {}",
            report.triangle_class, report.oracle_class
        ))
    });
    Ok(Output { json, error })
}

pub fn classify(input: &str) -> Result<Output, CliError> {
    let m: MatrixInput = serde_json::from_str(input)?;
    classify_matrix(&parse_matrix(&m.p)?)
}

/// One compact report per nonblank line, computed in parallel; the exit
/// status is the most severe over all lines.
pub fn classify_batch(text: &str) -> (Vec<Value>, Option<CliError>) {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();
    let outputs: Vec<(usize, Output)> = lines
        .par_iter()
        .map(|&(k, l)| {
            let out = classify(l).unwrap_or_else(|e| Output {
                json: json!({ "error": e.to_string() }),
                error: Some(e),
            });
            (k + 1, out)
        })
        .collect();
    let mut worst: Option<CliError> = None;
    let mut values = Vec::with_capacity(outputs.len());
    for (line, mut out) in outputs {
        if let Some(obj) = out.json.as_object_mut() {
            obj.insert("line".into(), line.into());
        }
        values.push(out.json);
        if let Some(e) = out.error {
            let worse = worst.as_ref().is_none_or(|w| e.exit_code() > w.exit_code());
            if worse {
                worst = Some(e);
            }
        }
    }
    (values, worst)
}

pub fn subalgebra(input: &str) -> Result<Output, CliError> {
    let b: BasisInput = serde_json::from_str(input)?;
    let plane = Plane2::new(
        parse_rational_matrix(&b.basis[0])?,
        parse_rational_matrix(&b.basis[1])?,
    )?;
    let class = classify_abelian_subalgebra(&plane)?;
    Ok(json!({
        "basis": plane_json(&plane),
        "class": class.as_str(),
        "config_class": configuration_of_plane(&plane)?.as_str(),
        "normalizer_dim": normalizer_dimension(&plane),
    })
    .into())
}

pub fn digraph(from: &str, to: &str, proper: bool) -> Result<Output, CliError> {
    let (a, b): (LimitClass, LimitClass) = (from.parse()?, to.parse()?);
    let base = |path: Value| {
        json!({
            "from": a.as_str(),
            "to": b.as_str(),
            "proper": proper,
            "path": path,
        })
    };
    Ok(match Digraph::path(a, b, proper) {
        Some(p) => base(p.iter().map(|c| c.as_str()).collect::<Vec<_>>().into()).into(),
        None => Output {
            json: base("unreachable".into()),
            error: Some(CliError::Unreachable {
                from: a.to_string(),
                to: b.to_string(),
            }),
        },
    })
}

pub fn sl2(delta: &str) -> Result<Output, CliError> {
    let d = parse_entry(delta)?;
    let class = classify_sl2(&d)?;
    Ok(json!({
        "delta": d.to_string(),
        "delta_valuation": d.valuation()?.to_string(),
        "class": class.as_str(),
        "fixed_points": class.fixed_points(),
    })
    .into())
}

pub fn sequence(input: &str, schedule: &[u64]) -> Result<Output, CliError> {
    let m: MatrixInput = serde_json::from_str(input)?;
    let p = parse_matrix(&m.p)?;
    let exact = full_classify(&p)?.oracle_class;
    let limit = detect_limit_plane(&RealMatrixSeq::Hyperreal(p.clone()), schedule)?;
    Ok(json!({
        "input": { "P": matrix_json(&p) },
        "schedule": schedule,
        "class": limit.class.as_str(),
        "exact_class": exact.as_str(),
        "agree": limit.class == exact,
        "last_step": format!("{:.3e}", limit.last_step),
    })
    .into())
}

fn config_json(c: ConfigClass) -> Value {
    json!({
        "configuration": c.as_str(),
        "points": c.points(),
        "lines": c.lines(),
        "description": c.description(),
        "dual": c.dual().as_str(),
    })
}

pub fn config(name: &str) -> Result<Output, CliError> {
    if let Ok(class) = name.parse::<LimitClass>() {
        let mut v = config_json(characteristic_configuration(class));
        v["class"] = class.as_str().into();
        v["group"] = class.group_form().into();
        return Ok(v.into());
    }
    let c = ConfigClass::ALL
        .into_iter()
        .find(|c| c.as_str().eq_ignore_ascii_case(name.trim()))
        .ok_or_else(|| {
            CliError::Input(format!(
                "{name:?} is neither a limit class nor a configuration"
            ))
        })?;
    Ok(config_json(c).into())
}

/// Random instances of every table row through both pipelines.
pub fn selftest(seed: u64, per_row: usize) -> Result<Output, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let instances: Vec<_> = LimitClass::ALL
        .iter()
        .flat_map(|&row| {
            (0..per_row)
                .map(|_| random_table_instance(row, &mut rng))
                .collect::<Vec<_>>()
        })
        .collect();
    let results: Vec<(LimitClass, Option<(LimitClass, LimitClass)>)> = instances
        .par_iter()
        .map(|i| {
            let r = full_classify(&i.matrix).ok();
            (i.row, r.map(|r| (r.triangle_class, r.oracle_class)))
        })
        .collect();
    let mut rows = serde_json::Map::new();
    let mut failures = 0;
    for row in LimitClass::ALL {
        let of_row: Vec<_> = results.iter().filter(|(r, _)| *r == row).collect();
        let matched = of_row
            .iter()
            .filter(|(_, c)| *c == Some((row, row)))
            .count();
        failures += of_row.len() - matched;
        rows.insert(
            row.as_str().into(),
            json!({ "matched": matched, "total": of_row.len() }),
        );
    }
    let json = json!({
        "seed": seed,
        "per_row": per_row,
        "rows": rows,
        "failures": failures,
    });
    let error = (failures > 0)
        .then(|| CliError::Internal(format!("{failures} instances left their table row")));
    Ok(Output { json, error })
}
