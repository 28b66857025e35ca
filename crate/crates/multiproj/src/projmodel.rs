//! The assembled homogeneous spectrum: covering charts, the multi-fan, and a
//! three-valued separation analysis.
//!
//! Separation is probed from two independent sides. The certifying side is
//! the degree-cone criterion: two charts glue separately whenever the cones
//! spanned by their supports' degrees intersect with nonempty interior in
//! `R^s`; for nonnegative gradings this holds trivially, so those spectra
//! are always certified separated. The refuting side is the toric fan check
//! on the chart cones in `N`: the union of two charts is separated exactly
//! when their cones intersect in a common face that equals the cone of the
//! union support (the overlap chart `D_+(fg)` of `D_+(f)` and `D_+(g)`).
//! Duplicate cones at distinct supports are the degenerate case of that
//! failure and are reported separately.
//!
//! `Certified` entries are sound, and a fan defect is a sound refutation, so
//! a report can never honestly carry both; that situation aborts loudly as
//! an internal inconsistency. When neither side decides, the overall verdict
//! is `Unknown` rather than a guess.

use crate::charts::{self, Chart};
use crate::cones::{self, Cone};
use crate::grading::{self, RingSpec};
use crate::relevance::{self, RelevantFamily, Support};
use crate::{Error, Result};

/// The homogeneous spectrum of a graded polynomial ring, as a toric model:
/// one chart per minimal relevant support.
#[derive(Clone, Debug)]
pub struct ProjModel {
    pub spec: RingSpec,
    pub family: RelevantFamily,
    pub charts: Vec<Chart>,
    /// Rank of the kernel lattice `M`; the dimension of the dense torus.
    pub torus_dim: usize,
}

impl ProjModel {
    /// The multiset of maximal fan cones, aligned with `charts`.
    pub fn fan_cones(&self) -> Vec<&Cone> {
        self.charts.iter().map(|c| &c.fan_cone).collect()
    }

    pub fn minimal_supports(&self) -> &[Support] {
        &self.family.minimal_supports
    }
}

/// Outcome of the pairwise degree-cone test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairwiseEntry {
    /// The union of the two charts is separated.
    Certified,
    /// The criterion does not apply; no negative information.
    Inconclusive,
}

/// Outcome of the fan compatibility check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FanVerdict {
    IsFan,
    /// Two distinct minimal supports span the same cone.
    DuplicateCone(Support, Support),
    /// A pairwise intersection is not a common face equal to the cone of the
    /// union support.
    BadIntersection(Support, Support),
}

/// Overall three-valued separation verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Overall {
    Separated,
    NotSeparated,
    Unknown,
}

/// Pairwise matrix, fan verdict, and the combined conclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationReport {
    pub supports: Vec<Support>,
    pub pairwise: Vec<Vec<PairwiseEntry>>,
    pub fan_verdict: FanVerdict,
    pub overall: Overall,
}

/// Builds the model: charts at exactly the minimal relevant supports, in
/// lexicographic support order. An empty chart list means no relevant
/// monomial exists.
pub fn build_model(spec: &RingSpec, cap: usize) -> Result<ProjModel> {
    let family = relevance::minimal_relevant_supports(spec, cap)?;
    let m = grading::kernel_lattice_of(spec)?;
    let charts = family
        .minimal_supports
        .iter()
        .map(|j| charts::build_chart_with_basis(spec, j, &m))
        .collect::<Result<Vec<_>>>()?;
    Ok(ProjModel {
        spec: spec.clone(),
        family,
        charts,
        torus_dim: m.rank(),
    })
}

/// Degree-cone separation test for a pair of relevant supports: `Certified`
/// exactly when the intersection of the two degree cones is full-dimensional
/// in `R^s` (nonempty interior).
pub fn pairwise_separation(spec: &RingSpec, j1: &Support, j2: &Support) -> Result<PairwiseEntry> {
    let c1 = charts::degree_cone(spec, j1)?;
    let c2 = charts::degree_cone(spec, j2)?;
    let meet = cones::intersect(&c1, &c2)?;
    if meet.dim()? == spec.free_rank() {
        Ok(PairwiseEntry::Certified)
    } else {
        Ok(PairwiseEntry::Inconclusive)
    }
}

/// Checks that the maximal chart cones assemble into a fan describing a
/// separated gluing: pairwise intersections must be common faces and must
/// equal the cone of the union support.
pub fn fan_check(model: &ProjModel) -> Result<FanVerdict> {
    let m = grading::kernel_lattice_of(&model.spec)?;
    let supports = model.minimal_supports();
    for (a, ca) in model.charts.iter().enumerate() {
        for (b, cb) in model.charts.iter().enumerate().skip(a + 1) {
            if ca.fan_cone == cb.fan_cone {
                return Ok(FanVerdict::DuplicateCone(
                    supports[a].clone(),
                    supports[b].clone(),
                ));
            }
            let meet = cones::intersect(&ca.fan_cone, &cb.fan_cone)?;
            let union = supports[a].union(&supports[b]);
            let overlap = charts::chart_cone_with_basis(&model.spec, &union, &m)?;
            if overlap != meet
                || !cones::is_face(&meet, &ca.fan_cone)?
                || !cones::is_face(&meet, &cb.fan_cone)?
            {
                return Ok(FanVerdict::BadIntersection(
                    supports[a].clone(),
                    supports[b].clone(),
                ));
            }
        }
    }
    Ok(FanVerdict::IsFan)
}

/// Assembles the separation report. Overall: `Separated` when every pairwise
/// entry is certified, `NotSeparated` when the fan check finds a defect,
/// `Unknown` otherwise. Both triggers firing at once is a contradiction
/// between two sound criteria and raises an internal error.
pub fn separation_verdict(model: &ProjModel) -> Result<SeparationReport> {
    let supports = model.minimal_supports().to_vec();
    let n = supports.len();
    let mut pairwise = vec![vec![PairwiseEntry::Certified; n]; n];
    let mut all_certified = true;
    for a in 0..n {
        for b in a..n {
            let entry = if a == b {
                PairwiseEntry::Certified
            } else {
                pairwise_separation(&model.spec, &supports[a], &supports[b])?
            };
            pairwise[a][b] = entry;
            pairwise[b][a] = entry;
            if entry == PairwiseEntry::Inconclusive {
                all_certified = false;
            }
        }
    }
    let fan_verdict = fan_check(model)?;
    let fan_ok = fan_verdict == FanVerdict::IsFan;
    let overall = match (all_certified, fan_ok) {
        (true, false) => {
            return Err(Error::Inconsistency(format!(
                "all pairs certified separated but the fan check found {:?}",
                fan_verdict
            )));
        }
        (true, true) => Overall::Separated,
        (false, false) => Overall::NotSeparated,
        (false, true) => Overall::Unknown,
    };
    Ok(SeparationReport {
        supports,
        pairwise,
        fan_verdict,
        overall,
    })
}
