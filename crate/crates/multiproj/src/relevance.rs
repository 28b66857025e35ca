//! Relevance of monomials and supports; enumeration of the minimal relevant
//! supports and the radical generators of the monomial irrelevant ideal.
//!
//! A monomial is relevant exactly when the free parts of the degrees of the
//! variables in its support span `Q^s`: the degrees of the homogeneous
//! divisors of its powers then generate a finite-index subgroup of the
//! grading group. Torsion components never influence the verdict, and the
//! public API is monomial-only; relevance of general polynomials would need
//! factorization and is not decided here.
//!
//! Relevance is upward closed in the support, and the rank condition makes
//! the family of relevant supports a matroid spanning family: a minimal
//! relevant support is exactly an independent set of size `s`. The
//! breadth-first enumeration therefore prunes every cardinality below `s`
//! (rank bound) and above `s` (every relevant support contains a relevant
//! `s`-subset), leaving the independent `s`-subsets.

use itertools::Itertools;

use crate::grading::{Monomial, RingSpec};
use crate::intlin;
use crate::{Error, Result};

/// Default cap on the number of variables for subset enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

/// A sorted, duplicate-free set of variable indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Support {
    indices: Vec<usize>,
}

impl Support {
    pub fn new(mut indices: Vec<usize>) -> Support {
        indices.sort_unstable();
        indices.dedup();
        Support { indices }
    }

    pub fn empty() -> Support {
        Support { indices: vec![] }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &Support) -> bool {
        self.indices.iter().all(|&i| other.contains_index(i))
    }

    pub fn union(&self, other: &Support) -> Support {
        let mut v = self.indices.clone();
        v.extend_from_slice(&other.indices);
        Support::new(v)
    }

    /// Complement within `{0, .., k-1}`.
    pub fn complement(&self, k: usize) -> Support {
        Support::new((0..k).filter(|i| !self.contains_index(*i)).collect())
    }

    /// Render with the ring's variable names, e.g. `{X1,Z}`.
    pub fn display(&self, spec: &RingSpec) -> String {
        let names: Vec<&str> = self
            .indices
            .iter()
            .map(|&i| spec.variables[i].as_str())
            .collect();
        format!("{{{}}}", names.join(","))
    }
}

/// The antichain of minimal relevant supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelevantFamily {
    /// Sorted lexicographically as index sets.
    pub minimal_supports: Vec<Support>,
    /// Enumeration was exhaustive for all supports up to this cardinality.
    pub max_cardinality_checked: usize,
}

/// Whether the support is relevant: the free parts of its degrees have rank
/// `s`. For `s = 0` every support is relevant, including the empty one.
pub fn is_relevant_support(spec: &RingSpec, j: &Support) -> Result<bool> {
    assert!(
        j.indices().iter().all(|&i| i < spec.num_vars()),
        "support index out of range"
    );
    degree_rank(spec, j).map(|r| r == spec.free_rank())
}

/// Rank of the free degree parts over a support.
pub(crate) fn degree_rank(spec: &RingSpec, j: &Support) -> Result<usize> {
    intlin::rank(&intlin::IntMatrix::from_rows(spec.free_parts(j.indices())))
}

/// Whether a nonconstant monomial is relevant; decided on its support.
pub fn is_relevant_monomial(spec: &RingSpec, m: &Monomial) -> Result<bool> {
    assert_eq!(
        m.exponents.len(),
        spec.num_vars(),
        "exponent vector length mismatch"
    );
    if m.is_constant() {
        return Err(Error::ConstantMonomial);
    }
    is_relevant_support(spec, &Support::new(m.support_indices()))
}

/// The exact antichain of minimal relevant supports.
///
/// Enumerates subsets breadth-first by cardinality. Cardinalities below `s`
/// cannot reach rank `s`; at cardinality `s` the relevant supports are the
/// independent ones; every larger relevant support contains one of those, so
/// the search stops there. Returns the empty family exactly when no relevant
/// monomial exists.
pub fn minimal_relevant_supports(spec: &RingSpec, cap: usize) -> Result<RelevantFamily> {
    let k = spec.num_vars();
    if k > cap {
        return Err(Error::EnumerationCap { vars: k, cap });
    }
    let s = spec.free_rank();
    if s == 0 {
        return Ok(RelevantFamily {
            minimal_supports: vec![Support::empty()],
            max_cardinality_checked: k,
        });
    }
    let mut minimal = Vec::new();
    if s <= k {
        for combo in (0..k).combinations(s) {
            let j = Support { indices: combo };
            if is_relevant_support(spec, &j)? {
                minimal.push(j);
            }
        }
    }
    minimal.sort();
    Ok(RelevantFamily {
        minimal_supports: minimal,
        max_cardinality_checked: k,
    })
}

/// Squarefree monomial generators of the radical of the monomial part of the
/// irrelevant ideal: one product of variables per minimal relevant support.
///
/// The paper-side ideal is generated by all relevant homogeneous elements;
/// whether its radical agrees with the radical of the ideal generated by
/// relevant monomials is not settled in general, but the toric chart
/// decomposition is indexed by exactly these supports.
pub fn irrelevant_radical_generators(spec: &RingSpec, cap: usize) -> Result<Vec<Monomial>> {
    let family = minimal_relevant_supports(spec, cap)?;
    Ok(family
        .minimal_supports
        .iter()
        .map(|j| {
            let mut exps = vec![0i64; spec.num_vars()];
            for &i in j.indices() {
                exps[i] = 1;
            }
            Monomial::new(exps)
        })
        .collect())
}
