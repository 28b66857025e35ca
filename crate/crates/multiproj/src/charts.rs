//! Affine charts of the homogeneous spectrum.
//!
//! For a relevant support `J` the chart at the squarefree monomial `T^J` has
//! coordinate ring generated by the Laurent monomials whose exponent vectors
//! lie in the monoid `M_J = {v in M : v_i >= 0 for i outside J}`, where `M`
//! is the kernel lattice of the degree map. The chart depends only on `J`,
//! never on the exponents of a chosen monomial, so charts are keyed by
//! supports.
//!
//! Fan data lives in `N`, the dual of `M`, represented concretely as
//! `Z^rank(M)` through the dual of the Hermite kernel basis: the projection
//! of the `i`-th coordinate restricted to `M` is the `i`-th row of the basis
//! matrix. The fan cone of a chart is spanned by the rows outside its
//! support. For a relevant support these rows are linearly independent
//! (relevance is equivalent to that independence), which makes every fan
//! cone strongly convex and simplicial.

use crate::cones::{self, Cone, HilbertBasis};
use crate::grading::{self, RingSpec};
use crate::intlin::LatticeBasis;
use crate::relevance::{self, Support};
use crate::{Error, Result};

/// A chart of the homogeneous spectrum at a relevant support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    pub support: Support,
    /// Halfspaces cutting the chart monoid out of `M`, in the Hermite basis
    /// coordinates of `M` (one row per variable outside the support).
    pub monoid_inequalities: Vec<Vec<i64>>,
    /// Generators of the chart monoid as `(M-coordinates, exponent vector)`
    /// pairs, sorted by the M-coordinates.
    pub generators: Vec<(Vec<i64>, Vec<i64>)>,
    /// The cone of the chart in the fan, in `N`-coordinates.
    pub fan_cone: Cone,
    /// Cone spanned by the free degree parts over the support, in `R^s`.
    pub degree_cone: Cone,
}

impl Chart {
    /// Exponent vectors of the generators (Laurent monomials in `Z^k`).
    pub fn generator_exponents(&self) -> Vec<Vec<i64>> {
        self.generators.iter().map(|(_, e)| e.clone()).collect()
    }
}

/// Builds the chart at a relevant support; irrelevant supports are rejected
/// with the rank deficit in the diagnostic.
pub fn build_chart(spec: &RingSpec, j: &Support) -> Result<Chart> {
    let m = grading::kernel_lattice_of(spec)?;
    build_chart_with_basis(spec, j, &m)
}

pub(crate) fn build_chart_with_basis(
    spec: &RingSpec,
    j: &Support,
    m: &LatticeBasis,
) -> Result<Chart> {
    let s = spec.free_rank();
    let rank = relevance::degree_rank(spec, j)?;
    if rank != s {
        return Err(Error::IrrelevantSupport { rank, needed: s });
    }

    let k = spec.num_vars();
    let r = m.rank();
    let basis = m.basis();

    // One inequality row per variable outside the support.
    let outside: Vec<usize> = (0..k).filter(|i| !j.contains_index(*i)).collect();
    let monoid_inequalities: Vec<Vec<i64>> =
        outside.iter().map(|&i| basis.row(i).to_vec()).collect();

    // Hilbert basis of the chart monoid, in ambient exponent coordinates.
    let halfspaces: Vec<Vec<i64>> = outside
        .iter()
        .map(|&i| {
            let mut e = vec![0i64; k];
            e[i] = 1;
            e
        })
        .collect();
    let hb: HilbertBasis = cones::hilbert_basis(k, &halfspaces, m)?;
    let mut generators = Vec::with_capacity(hb.elements.len());
    for v in &hb.elements {
        let coords = m
            .coords_of(v)?
            .ok_or_else(|| Error::Inconsistency("generator outside the kernel lattice".into()))?;
        generators.push((coords, v.clone()));
    }
    generators.sort();

    let fan_cone = cones::cone_from_generators(r, &monoid_inequalities)?;
    let degree_cone = degree_cone_with(spec, j)?;

    Ok(Chart {
        support: j.clone(),
        monoid_inequalities,
        generators,
        fan_cone,
        degree_cone,
    })
}

/// The fan cone of a support: the cone in `N` spanned by the coordinate
/// projections restricted to `M` for the variables outside the support.
/// Defined for every support; relevance is not required.
pub fn chart_cone(spec: &RingSpec, j: &Support) -> Result<Cone> {
    let m = grading::kernel_lattice_of(spec)?;
    chart_cone_with_basis(spec, j, &m)
}

pub(crate) fn chart_cone_with_basis(
    spec: &RingSpec,
    j: &Support,
    m: &LatticeBasis,
) -> Result<Cone> {
    let k = spec.num_vars();
    let gens: Vec<Vec<i64>> = (0..k)
        .filter(|i| !j.contains_index(*i))
        .map(|i| m.basis().row(i).to_vec())
        .collect();
    cones::cone_from_generators(m.rank(), &gens)
}

/// Cone in `R^s` spanned by the free degree parts over the support. For a
/// monomial with support `J` this is the closed cone generated by the
/// degrees of the homogeneous divisors of its powers.
pub fn degree_cone(spec: &RingSpec, j: &Support) -> Result<Cone> {
    degree_cone_with(spec, j)
}

fn degree_cone_with(spec: &RingSpec, j: &Support) -> Result<Cone> {
    let s = spec.free_rank();
    if j.is_empty() && s > 0 {
        return Err(Error::Validation(
            "degree cone needs a nonempty support unless the free rank is zero".into(),
        ));
    }
    cones::cone_from_generators(s, &spec.free_parts(j.indices()))
}
