//! Report assembly: machine-readable structures (schema `multiproj.report/1`)
//! and the deterministic text rendering.

use serde::{Deserialize, Serialize};

use multiproj::charts::Chart;
use multiproj::cones::{Cone, HilbertBasis};
use multiproj::grading::{Monomial, RingSpec};
use multiproj::projmodel::{FanVerdict, Overall, PairwiseEntry, ProjModel, SeparationReport};
use multiproj::relevance::Support;
use multiproj::render;
use multiproj::Result;

pub const SCHEMA: &str = "multiproj.report/1";

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct RingOut {
    pub coefficients: String,
    pub variables: Vec<String>,
    pub free_rank: usize,
    pub torsion_orders: Vec<i64>,
    pub degrees: Vec<DegreeOut>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct DegreeOut {
    pub free: Vec<i64>,
    pub torsion: Vec<i64>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct ConeOut {
    pub ambient_dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub lineality: Vec<Vec<i64>>,
    pub halfspaces: Vec<Vec<i64>>,
    pub dim: usize,
    pub strongly_convex: bool,
    pub simplicial: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct GeneratorOut {
    pub monomial: String,
    pub exponents: Vec<i64>,
    pub m_coordinates: Vec<i64>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct ChartOut {
    pub support: Vec<String>,
    pub generators: Vec<GeneratorOut>,
    pub monoid_inequalities: Vec<Vec<i64>>,
    pub fan_cone: ConeOut,
    pub degree_cone: ConeOut,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct SeparationOut {
    pub supports: Vec<Vec<String>>,
    /// `certified` or `inconclusive`, symmetric with certified diagonal.
    pub pairwise: Vec<Vec<String>>,
    pub fan_verdict: String,
    pub overall: String,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct AnalyzeReport {
    pub schema: String,
    pub ring: RingOut,
    pub torus_dim: usize,
    /// Columns of the kernel lattice basis, one per torus coordinate.
    pub kernel_basis: Vec<Vec<i64>>,
    pub minimal_supports: Vec<Vec<String>>,
    pub irrelevant_radical: Vec<String>,
    pub charts: Vec<ChartOut>,
    pub fan: Vec<ConeOut>,
    pub separation: SeparationOut,
    pub notes: Vec<String>,
    pub warnings: Vec<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct ChartReport {
    pub schema: String,
    pub ring: RingOut,
    pub chart: ChartOut,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct SectionReport {
    pub schema: String,
    pub ring: RingOut,
    pub kind: String,
    pub forms: Vec<Vec<i64>>,
    pub generators: Vec<GeneratorOut>,
    pub relation_bound: Option<usize>,
    /// Relation vectors over the generators; each encodes a binomial identity.
    pub relations: Vec<RelationOut>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct RelationOut {
    pub vector: Vec<i64>,
    pub equation: String,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct SeparationOnlyReport {
    pub schema: String,
    pub ring: RingOut,
    pub separation: SeparationOut,
}

pub fn ring_out(spec: &RingSpec) -> RingOut {
    RingOut {
        coefficients: spec.coefficient_label.clone(),
        variables: spec.variables.clone(),
        free_rank: spec.free_rank(),
        torsion_orders: spec.grading.torsion_orders.clone(),
        degrees: spec
            .degrees
            .iter()
            .map(|d| DegreeOut {
                free: d.free.clone(),
                torsion: d.torsion.clone(),
            })
            .collect(),
    }
}

pub fn cone_out(c: &Cone) -> Result<ConeOut> {
    Ok(ConeOut {
        ambient_dim: c.ambient_dim(),
        rays: c.extreme_rays().to_vec(),
        lineality: c.lineality_basis().to_vec(),
        halfspaces: c.halfspaces(),
        dim: c.dim()?,
        strongly_convex: c.is_strongly_convex(),
        simplicial: c.is_simplicial()?,
    })
}

pub fn chart_out(spec: &RingSpec, chart: &Chart) -> Result<ChartOut> {
    Ok(ChartOut {
        support: support_names(spec, &chart.support),
        generators: chart
            .generators
            .iter()
            .map(|(m, e)| GeneratorOut {
                monomial: render::monomial_string(&spec.variables, e),
                exponents: e.clone(),
                m_coordinates: m.clone(),
            })
            .collect(),
        monoid_inequalities: chart.monoid_inequalities.clone(),
        fan_cone: cone_out(&chart.fan_cone)?,
        degree_cone: cone_out(&chart.degree_cone)?,
    })
}

pub fn support_names(spec: &RingSpec, j: &Support) -> Vec<String> {
    j.indices()
        .iter()
        .map(|&i| spec.variables[i].clone())
        .collect()
}

pub fn separation_out(spec: &RingSpec, report: &SeparationReport) -> SeparationOut {
    SeparationOut {
        supports: report
            .supports
            .iter()
            .map(|j| support_names(spec, j))
            .collect(),
        pairwise: report
            .pairwise
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        PairwiseEntry::Certified => "certified".to_string(),
                        PairwiseEntry::Inconclusive => "inconclusive".to_string(),
                    })
                    .collect()
            })
            .collect(),
        fan_verdict: fan_verdict_string(spec, &report.fan_verdict),
        overall: overall_string(report.overall).to_string(),
    }
}

pub fn fan_verdict_string(spec: &RingSpec, v: &FanVerdict) -> String {
    match v {
        FanVerdict::IsFan => "is a fan".to_string(),
        FanVerdict::DuplicateCone(a, b) => {
            format!(
                "duplicate cone for {} and {}",
                a.display(spec),
                b.display(spec)
            )
        }
        FanVerdict::BadIntersection(a, b) => {
            format!(
                "bad intersection for {} and {}",
                a.display(spec),
                b.display(spec)
            )
        }
    }
}

pub fn overall_string(o: Overall) -> &'static str {
    match o {
        Overall::Separated => "Separated",
        Overall::NotSeparated => "NotSeparated",
        Overall::Unknown => "Unknown",
    }
}

pub fn generator_out(spec: &RingSpec, hb: &HilbertBasis) -> Vec<GeneratorOut> {
    hb.elements
        .iter()
        .map(|e| GeneratorOut {
            monomial: render::monomial_string(&spec.variables, e),
            exponents: e.clone(),
            m_coordinates: vec![],
        })
        .collect()
}

pub fn relation_out(spec: &RingSpec, hb: &HilbertBasis, u: &[i64]) -> RelationOut {
    let side = |positive: bool| -> String {
        let factors: Vec<String> = u
            .iter()
            .zip(&hb.elements)
            .filter(|(&c, _)| if positive { c > 0 } else { c < 0 })
            .map(|(&c, e)| {
                let m = render::monomial_string(&spec.variables, e);
                let mag = c.abs();
                if mag == 1 {
                    format!("({m})")
                } else {
                    format!("({m})^{mag}")
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    };
    RelationOut {
        vector: u.to_vec(),
        equation: format!("{} = {}", side(true), side(false)),
    }
}

pub fn monomial_name(spec: &RingSpec, m: &Monomial) -> String {
    render::monomial_string(&spec.variables, &m.exponents)
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

fn cone_text(label: &str, c: &ConeOut, indent: &str, out: &mut String) {
    let rays: Vec<String> = c.rays.iter().map(|r| render::vector_string(r)).collect();
    let rays = if rays.is_empty() {
        "none".to_string()
    } else {
        rays.join(" ")
    };
    out.push_str(&format!(
        "{indent}{label}: dim {}, rays {}, lineality {}\n",
        c.dim,
        rays,
        c.lineality.len()
    ));
}

fn ring_text(ring: &RingOut, out: &mut String) {
    out.push_str(&format!(
        "ring: {}[{}]\n",
        ring.coefficients,
        ring.variables.join(", ")
    ));
    let mut grading_parts = Vec::new();
    match ring.free_rank {
        0 => {}
        1 => grading_parts.push("Z".to_string()),
        s => grading_parts.push(format!("Z^{s}")),
    }
    for m in &ring.torsion_orders {
        grading_parts.push(format!("Z/{m}"));
    }
    let grading = if grading_parts.is_empty() {
        "0".to_string()
    } else {
        grading_parts.join(" x ")
    };
    out.push_str(&format!("grading group: {grading}\n"));
    for (v, d) in ring.variables.iter().zip(&ring.degrees) {
        let parts: Vec<String> = d
            .free
            .iter()
            .map(|x| x.to_string())
            .chain(d.torsion.iter().map(|x| format!("[{x}]")))
            .collect();
        out.push_str(&format!("  deg {v} = ({})\n", parts.join(", ")));
    }
}

fn chart_text(c: &ChartOut, out: &mut String) {
    out.push_str(&format!("chart {{{}}}:\n", c.support.join(",")));
    let gens: Vec<&str> = c.generators.iter().map(|g| g.monomial.as_str()).collect();
    out.push_str(&format!(
        "  generators: {}\n",
        if gens.is_empty() {
            "none".to_string()
        } else {
            gens.join(", ")
        }
    ));
    let ineqs: Vec<String> = c
        .monoid_inequalities
        .iter()
        .map(|r| render::vector_string(r))
        .collect();
    out.push_str(&format!(
        "  monoid inequalities over M: {}\n",
        if ineqs.is_empty() {
            "none".to_string()
        } else {
            ineqs.join(" ")
        }
    ));
    cone_text("fan cone", &c.fan_cone, "  ", out);
    cone_text("degree cone", &c.degree_cone, "  ", out);
}

fn separation_text(sep: &SeparationOut, out: &mut String) {
    out.push_str("separation:\n");
    let n = sep.supports.len();
    let mut certified = 0usize;
    let mut total = 0usize;
    let mut inconclusive_pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            total += 1;
            if sep.pairwise[a][b] == "certified" {
                certified += 1;
            } else {
                inconclusive_pairs.push(format!(
                    "{{{}}} ~ {{{}}}",
                    sep.supports[a].join(","),
                    sep.supports[b].join(",")
                ));
            }
        }
    }
    out.push_str(&format!(
        "  pairwise certificates: {certified} of {total} pairs certified\n"
    ));
    if !inconclusive_pairs.is_empty() {
        out.push_str(&format!(
            "  inconclusive pairs ({}):\n",
            inconclusive_pairs.len()
        ));
        for p in &inconclusive_pairs {
            out.push_str(&format!("    {p}\n"));
        }
    }
    out.push_str(&format!("  fan check: {}\n", sep.fan_verdict));
    out.push_str(&format!("  verdict: {}\n", sep.overall));
}

pub fn analyze_text(r: &AnalyzeReport) -> String {
    let mut out = String::new();
    ring_text(&r.ring, &mut out);
    out.push_str(&format!("torus dimension: {}\n", r.torus_dim));
    out.push_str("kernel lattice basis (degree-zero exponent vectors):\n");
    if r.kernel_basis.is_empty() {
        out.push_str("  none\n");
    }
    for c in &r.kernel_basis {
        out.push_str(&format!("  {}\n", render::vector_string(c)));
    }
    let supports: Vec<String> = r
        .minimal_supports
        .iter()
        .map(|s| format!("{{{}}}", s.join(",")))
        .collect();
    out.push_str(&format!(
        "minimal relevant supports ({}): {}\n",
        supports.len(),
        if supports.is_empty() {
            "none".to_string()
        } else {
            supports.join(" ")
        }
    ));
    out.push_str(&format!(
        "irrelevant ideal radical generators: {}\n",
        if r.irrelevant_radical.is_empty() {
            "none".to_string()
        } else {
            r.irrelevant_radical.join(", ")
        }
    ));
    for chart in &r.charts {
        chart_text(chart, &mut out);
    }
    let mut distinct = r.fan.iter().map(|c| &c.rays).collect::<Vec<_>>();
    distinct.sort();
    distinct.dedup();
    out.push_str(&format!(
        "fan: {} maximal cones, {} distinct\n",
        r.fan.len(),
        distinct.len()
    ));
    separation_text(&r.separation, &mut out);
    for w in &r.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    for n in &r.notes {
        out.push_str(&format!("note: {n}\n"));
    }
    out
}

pub fn charts_text(r: &ChartReport) -> String {
    let mut out = String::new();
    ring_text(&r.ring, &mut out);
    chart_text(&r.chart, &mut out);
    out
}

pub fn section_text(r: &SectionReport) -> String {
    let mut out = String::new();
    ring_text(&r.ring, &mut out);
    if r.kind == "veronese" {
        let forms: Vec<String> = r.forms.iter().map(|f| render::vector_string(f)).collect();
        out.push_str(&format!(
            "veronese forms: {}\n",
            if forms.is_empty() {
                "none (whole ring)".to_string()
            } else {
                forms.join(" ")
            }
        ));
    }
    out.push_str(&format!("generators ({}):\n", r.generators.len()));
    for g in &r.generators {
        out.push_str(&format!("  {}\n", g.monomial));
    }
    if let Some(bound) = r.relation_bound {
        out.push_str(&format!(
            "binomial relations up to total degree {} ({}):\n",
            bound,
            r.relations.len()
        ));
        for rel in &r.relations {
            out.push_str(&format!("  {}\n", rel.equation));
        }
        if r.relations.is_empty() {
            out.push_str("  none (free polynomial algebra up to this degree)\n");
        }
    }
    out
}

pub fn separation_only_text(r: &SeparationOnlyReport) -> String {
    let mut out = String::new();
    ring_text(&r.ring, &mut out);
    separation_text(&r.separation, &mut out);
    out
}

pub fn build_analyze_report(
    spec: &RingSpec,
    model: &ProjModel,
    sep: &SeparationReport,
    radical: &[Monomial],
    kernel_basis: Vec<Vec<i64>>,
) -> Result<AnalyzeReport> {
    let mut warnings = Vec::new();
    if model.charts.is_empty() {
        warnings.push("no monomial charts: no support is relevant, the model is empty".to_string());
    }
    Ok(AnalyzeReport {
        schema: SCHEMA.to_string(),
        ring: ring_out(spec),
        torus_dim: model.torus_dim,
        kernel_basis,
        minimal_supports: model
            .minimal_supports()
            .iter()
            .map(|j| support_names(spec, j))
            .collect(),
        irrelevant_radical: radical.iter().map(|m| monomial_name(spec, m)).collect(),
        charts: model
            .charts
            .iter()
            .map(|c| chart_out(spec, c))
            .collect::<Result<Vec<_>>>()?,
        fan: model
            .charts
            .iter()
            .map(|c| cone_out(&c.fan_cone))
            .collect::<Result<Vec<_>>>()?,
        separation: separation_out(spec, sep),
        notes: vec![
            "the spectrum is universally closed over the degree-zero ring; completeness never \
             requires separatedness"
                .to_string(),
        ],
        warnings,
    })
}
