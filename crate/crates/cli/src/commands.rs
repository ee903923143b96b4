use serde_json::{json, Value};
use triquad_core::cohomology::{cohomology, ext1_line, initialized_acm_line_bundles_within};
use triquad_core::conformance::{self, ConformanceReport, Scope};
use triquad_core::delpezzo::{cremona, curve_classes, normal_chi, orbit_reduce, pushforward, s_degree, s_genus, SurfaceClass};
use triquad_core::enumerate::{
    decomposable_candidates, divisorial_table, intermediate_table, theorem_a_filter, Classifier,
    CurveType, DivisorialVerdict,
};
use triquad_core::golden::Golden;
use triquad_core::invariants::{chi_line, chi_rank2, chi_rank2_direct, F};
use triquad_core::{BundleData, Coeff, CurveClass, DivisorClass};

use crate::render::{json_string, Format, Table};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
}

impl From<triquad_core::Error> for CliError {
    fn from(e: triquad_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub enum Output {
    Table(Table),
    Report(ConformanceReport),
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match self {
            Output::Table(t) => t.render(format),
            Output::Report(r) => match format {
                Format::Json => json_string(&serde_json::to_value(r).expect("report serializes")),
                _ => {
                    let mut out = checks_table(r).render(format);
                    if format == Format::Md {
                        let s = &r.summary;
                        out += &format!(
                            "\n{} checks: {} pass, {} fail, {} paper-discrepancy (golden data: {})\n",
                            s.total, s.pass, s.fail, s.paper_discrepancy, r.golden_source
                        );
                    }
                    out
                }
            },
        }
    }
}

fn checks_table(r: &ConformanceReport) -> Table {
    let mut t = Table::new(["name", "criterion", "scope", "provenance", "status", "detail"]);
    for c in &r.checks {
        t.push(vec![
            json!(c.name),
            c.criterion.map_or(Value::Null, |n| json!(n)),
            json!(c.scope.name()),
            json!(c.provenance.name()),
            json!(c.status.name()),
            json!(c.detail),
        ]);
    }
    t
}

fn triple_cells(t: &[Coeff; 3]) -> [Value; 3] {
    [json!(t[0]), json!(t[1]), json!(t[2])]
}

pub fn cohom(d: [Coeff; 3]) -> Output {
    let v = cohomology(&DivisorClass(d));
    Output::Table(Table::record([
        ("h0", json!(v.h0)),
        ("h1", json!(v.h1)),
        ("h2", json!(v.h2)),
        ("h3", json!(v.h3)),
    ]))
}

pub fn chi(c1: [Coeff; 3], c2: Option<[Coeff; 3]>) -> CliResult<Output> {
    let t = match c2 {
        None => Table::record([("rank", json!(1)), ("chi", json!(chi_line(&DivisorClass(c1))?))]),
        Some(c2) => {
            let b = BundleData::new(DivisorClass(c1), CurveClass(c2));
            let closed = chi_rank2(&b)?;
            let direct = chi_rank2_direct(&b, &F)?;
            if closed != direct {
                return Err(CliError::Usage(format!(
                    "Riemann-Roch routes disagree: closed form {closed}, direct {direct}"
                )));
            }
            Table::record([("rank", json!(2)), ("chi", json!(closed))])
        }
    };
    Ok(Output::Table(t))
}

pub fn ext(target: [Coeff; 3], sub: [Coeff; 3]) -> Output {
    Output::Table(Table::record([(
        "ext1",
        json!(ext1_line(&DivisorClass(target), &DivisorClass(sub))),
    )]))
}

pub fn acm_lines(bound: Coeff) -> Output {
    let mut t = Table::new(["d1", "d2", "d3"]);
    for d in initialized_acm_line_bundles_within(bound) {
        t.push(triple_cells(&d.0).to_vec());
    }
    Output::Table(t)
}

pub fn divisorial(verdict: Option<&str>) -> CliResult<Output> {
    let filter = verdict
        .map(|v| {
            DivisorialVerdict::parse(v).ok_or_else(|| {
                let names: Vec<_> = DivisorialVerdict::ALL.iter().map(|x| x.name()).collect();
                CliError::Usage(format!("unknown verdict {v:?}; expected one of {}", names.join(", ")))
            })
        })
        .transpose()?;
    let mut t = Table::new([
        "a1", "a2", "a3", "d1", "d2", "d3", "e", "b1", "b2", "b3", "cE1", "cE2", "cE3", "verdict",
    ]);
    for r in divisorial_table()? {
        if filter.is_some_and(|f| f != r.verdict) {
            continue;
        }
        let mut row = Vec::new();
        row.extend(triple_cells(&r.alpha.0));
        row.extend(triple_cells(&r.delta.0));
        row.push(json!(r.e));
        row.extend(triple_cells(&r.beta.0));
        row.extend(triple_cells(&r.class_e.0));
        row.push(json!(r.verdict.name()));
        t.push(row);
    }
    Ok(Output::Table(t))
}

const INTERMEDIATE_KINDS: [&str; 5] =
    ["Admissible", "Decomposable", "NonExistent", "ExcludedEmpty", "ExcludedDualPositivity"];

pub fn intermediate(verdict: Option<&str>) -> CliResult<Output> {
    if let Some(v) = verdict {
        if !INTERMEDIATE_KINDS.contains(&v) {
            return Err(CliError::Usage(format!(
                "unknown verdict {v:?}; expected one of {}",
                INTERMEDIATE_KINDS.join(", ")
            )));
        }
    }
    let mut t = Table::new(["label", "a1", "a2", "a3", "b1", "b2", "b3", "deg", "pa", "verdict"]);
    for r in intermediate_table()? {
        if verdict.is_some_and(|v| v != r.verdict.kind()) {
            continue;
        }
        let mut row = vec![json!(r.label)];
        row.extend(triple_cells(&r.alpha.0));
        row.extend(triple_cells(&r.beta.0));
        row.extend([json!(r.deg), json!(r.pa), json!(r.verdict.to_string())]);
        t.push(row);
    }
    Ok(Output::Table(t))
}

fn split_text(pairs: &[(DivisorClass, DivisorClass)]) -> String {
    let zero = |d: &DivisorClass| if d.is_zero() { "0".to_string() } else { d.to_string() };
    pairs
        .iter()
        .map(|(a, b)| format!("O({})+O({})", zero(a), zero(b)))
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn classify(c1: [Coeff; 3], c2: Option<[Coeff; 3]>) -> CliResult<Output> {
    let c1 = DivisorClass(c1);
    let in_a = theorem_a_filter(&c1);
    let classifier = Classifier::new()?;
    let mut fields: Vec<(&str, Value)> = vec![
        ("c1", json!(c1.to_string())),
        ("theorem_a", json!(in_a)),
    ];
    let target = c2.map(CurveClass);
    let splits = decomposable_candidates(&c1, None, target.as_ref())?;
    match target {
        None => {
            let v = classifier.verdict(&c1, &CurveClass::ZERO);
            let allowed: Vec<_> = v.allowed_c2.iter().map(|x| x.to_string()).collect();
            let summary = if !in_a {
                "outside Theorem A bounds".to_string()
            } else if allowed.is_empty() {
                "not admissible (Theorem B)".to_string()
            } else {
                format!("admissible for c2 in {{{}}} up to permutation", allowed.join(", "))
            };
            fields.push(("c1_canonical", json!(v.c1_sorted.to_string())));
            fields.push(("admissible_c2", json!(allowed.join("; "))));
            fields.push(("split_candidates", json!(split_text(&splits))));
            fields.push(("verdict", json!(summary)));
        }
        Some(c2) => {
            let v = classifier.verdict(&c1, &c2);
            let summary = if !in_a {
                "outside Theorem A bounds".to_string()
            } else if v.is_admissible() {
                let mut s = format!("admissible: {}", v.curve.description());
                if v.curve == CurveType::EllipticNormalOctic {
                    s += "; indecomposable unless complete intersection pair";
                }
                s
            } else {
                "not admissible (Theorem B)".to_string()
            };
            fields.push(("c2", json!(c2.to_string())));
            fields.push(("c1_canonical", json!(v.c1_sorted.to_string())));
            fields.push(("c2_canonical", json!(v.c2_canonical.to_string())));
            fields.push(("curve", json!(v.curve.description())));
            fields.push((
                "indecomposability",
                json!(v.indecomposability_condition.unwrap_or_default()),
            ));
            fields.push(("split_candidates", json!(split_text(&splits))));
            fields.push(("verdict", json!(summary)));
        }
    }
    Ok(Output::Table(Table::record(fields)))
}

fn surface_row(c: &SurfaceClass) -> CliResult<Vec<Value>> {
    let p = pushforward(c);
    Ok(vec![
        json!(c.a),
        json!(c.b[0]),
        json!(c.b[1]),
        json!(c.b[2]),
        json!(s_degree(c)),
        json!(s_genus(c)?),
        json!(p[0]),
        json!(p[1]),
        json!(p[2]),
    ])
}

const SURFACE_COLUMNS: [&str; 9] = ["a", "b1", "b2", "b3", "deg", "genus", "p1", "p2", "p3"];

pub fn delpezzo_classes(degree: Coeff, genus: Coeff, reduce: bool) -> CliResult<Output> {
    if degree < 1 {
        return Err(CliError::Usage(format!("degree must be at least 1, got {degree}")));
    }
    let mut classes = curve_classes(degree, genus);
    if reduce {
        classes = orbit_reduce(&classes);
    }
    let mut t = Table::new(SURFACE_COLUMNS);
    for c in &classes {
        t.push(surface_row(c)?);
    }
    Ok(Output::Table(t))
}

pub fn delpezzo_single(c: SurfaceClass, apply_cremona: bool) -> CliResult<Output> {
    let c = if apply_cremona { cremona(&c) } else { c };
    let mut fields: Vec<(String, Value)> = SURFACE_COLUMNS
        .iter()
        .map(|s| s.to_string())
        .zip(surface_row(&c)?)
        .collect();
    if let Ok((chi_os, chi_n)) = normal_chi(&c) {
        fields.push(("chi_OS_C".into(), json!(chi_os)));
        fields.push(("chi_N".into(), json!(chi_n)));
    }
    Ok(Output::Table(Table::record(fields)))
}

pub fn verify(only: Option<Scope>) -> CliResult<Output> {
    let golden = Golden::load()?;
    Ok(Output::Report(conformance::run(&golden, only)))
}
