//! Section rings: degree-zero subrings, Veronese submonoid generators, and
//! brute-force binomial relations.
//!
//! The degree-zero subring of a graded polynomial ring is spanned by the
//! monomials whose exponent vectors land in the kernel of the degree map;
//! its minimal monomial generators are the Hilbert basis of the normal
//! affine monoid `N^k /\ M`. A Veronese subring over a submonoid of the
//! grading group cut out by linear forms is handled the same way, with the
//! forms pulled back through the degree map. Relations between generators
//! are verified purely combinatorially: a primitive integer vector in the
//! kernel of the generator exponent matrix encodes a binomial identity whose
//! two sides expand to the same exponent vector, so coefficients never enter.

use crate::cones::{self, HilbertBasis};
use crate::grading::{self, RingSpec};
use crate::intlin::LatticeBasis;
use crate::{arith, Error, Result};

/// Minimal monomial generators of the degree-zero subring: the Hilbert basis
/// of `{v in N^k : degree(v) = 0}` (torsion congruences included).
pub fn zero_subring_generators(spec: &RingSpec) -> Result<HilbertBasis> {
    let k = spec.num_vars();
    let m = grading::kernel_lattice_of(spec)?;
    cones::hilbert_basis(k, &orthant_halfspaces(k), &m)
}

/// Minimal monomial generators of the Veronese subring over the submonoid
/// `{d : psi(d) >= 0 for all forms psi}` of the free grading group.
/// Torsion-graded rings are rejected; the forms do not see torsion and a
/// silent wrong answer is worse than an error.
pub fn veronese_generators(spec: &RingSpec, forms: &[Vec<i64>]) -> Result<HilbertBasis> {
    if !spec.grading.is_torsion_free() {
        return Err(Error::TorsionUnsupported);
    }
    let k = spec.num_vars();
    let s = spec.free_rank();
    let mut halfspaces = orthant_halfspaces(k);
    for psi in forms {
        if psi.len() != s {
            return Err(Error::DimensionMismatch(format!(
                "linear form has {} components, free rank is {}",
                psi.len(),
                s
            )));
        }
        // Pull the form back through the degree map: one row over Z^k.
        let row = (0..k)
            .map(|i| arith::dot(psi, &spec.degrees[i].free))
            .collect::<Result<Vec<_>>>()?;
        halfspaces.push(row);
    }
    cones::hilbert_basis(k, &halfspaces, &LatticeBasis::standard(k))
}

fn orthant_halfspaces(k: usize) -> Vec<Vec<i64>> {
    (0..k)
        .map(|i| {
            let mut e = vec![0i64; k];
            e[i] = 1;
            e
        })
        .collect()
}

/// All primitive relation vectors `u` with `|u|_1 <= degree_bound` in the
/// kernel of the generator exponent matrix. Each encodes the binomial
/// identity `prod g_i^{u_i^+} = prod g_i^{u_i^-}`; the sign is normalized so
/// the first nonzero entry is positive, and the output is sorted.
pub fn binomial_relations(basis: &HilbertBasis, degree_bound: usize) -> Result<Vec<Vec<i64>>> {
    assert!(degree_bound >= 1, "degree bound must be at least 1");
    let g = basis.elements.len();
    let mut relations = Vec::new();
    if g == 0 {
        return Ok(relations);
    }
    let mut u = vec![0i64; g];
    search_relations(basis, degree_bound as i64, 0, &mut u, &mut relations)?;
    relations.sort();
    Ok(relations)
}

fn search_relations(
    basis: &HilbertBasis,
    budget: i64,
    idx: usize,
    u: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) -> Result<()> {
    if idx == u.len() {
        if u.iter().all(|&x| x == 0) {
            return Ok(());
        }
        if u.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            return Ok(());
        }
        if arith::vec_gcd(u) != 1 {
            return Ok(());
        }
        // Kernel test: the weighted exponent sum must vanish.
        let dim = basis.ambient_dim;
        let mut sum = vec![0i64; dim];
        for (c, e) in u.iter().zip(&basis.elements) {
            if *c == 0 {
                continue;
            }
            for (s, &x) in sum.iter_mut().zip(e) {
                *s = arith::add_mul(*s, *c, x)?;
            }
        }
        if sum.iter().all(|&x| x == 0) {
            out.push(u.clone());
        }
        return Ok(());
    }
    for v in -budget..=budget {
        u[idx] = v;
        search_relations(basis, budget - v.abs(), idx + 1, u, out)?;
    }
    u[idx] = 0;
    Ok(())
}
