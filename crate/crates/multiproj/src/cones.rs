//! Rational polyhedral cones with exact arithmetic: dual descriptions,
//! intersection, faces, and Hilbert bases of cone-lattice monoids.
//!
//! A [`Cone`] always carries both canonical descriptions. The generator side
//! is the lineality lattice (in Hermite form) together with the primitive
//! extreme rays, each ray projected orthogonally onto the complement of the
//! lineality space so that representatives are intrinsic to the cone. The
//! halfspace side is the same data for the dual cone, so dualization is a
//! plain swap and an exact involution.
//!
//! Conversions run the classical incremental double description method: the
//! halfspaces are inserted one at a time while the current lineality basis
//! and extreme ray set are maintained. Candidate rays produced by combining
//! positive/negative pairs are kept exactly when the rank of their active
//! constraint set identifies a one-dimensional face; no floating point, no
//! adjacency heuristics.
//!
//! Hilbert bases are computed Normaliz-style at desk scale: quotient out the
//! unit sublattice, cover the pointed quotient cone by the simplicial
//! subcones spanned by independent subsets of its extreme rays, enumerate
//! each fundamental parallelotope through the Smith normal form of its ray
//! matrix, and minimize the resulting candidate set by pairwise subtraction.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::arith::{self, Rat};
use crate::intlin::{self, smith_normal_form, IntMatrix, LatticeBasis};
use crate::{Error, Result};

/// A rational polyhedral cone in `R^ambient_dim`, canonically described from
/// both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    ambient_dim: usize,
    /// Primitive extreme rays, projected into the orthogonal complement of
    /// the lineality space, sorted.
    rays: Vec<Vec<i64>>,
    /// Hermite basis of the lineality lattice.
    lineality: Vec<Vec<i64>>,
    /// Extreme rays of the dual cone (the irredundant halfspace normals).
    dual_rays: Vec<Vec<i64>>,
    /// Hermite basis of the dual lineality lattice; as constraints these are
    /// the implicit equalities of the cone.
    dual_lineality: Vec<Vec<i64>>,
}

impl Cone {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Canonical generator list: extreme rays together with both signs of the
    /// lineality basis, sorted lexicographically.
    pub fn generators(&self) -> Vec<Vec<i64>> {
        flat(&self.rays, &self.lineality)
    }

    /// Canonical halfspace list; the cone is `{x : <u, x> >= 0 for all u}`.
    pub fn halfspaces(&self) -> Vec<Vec<i64>> {
        flat(&self.dual_rays, &self.dual_lineality)
    }

    pub fn extreme_rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn lineality_basis(&self) -> &[Vec<i64>] {
        &self.lineality
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    /// Dimension of the linear span. Rays are stored orthogonal to the
    /// lineality space, so the two ranks add.
    pub fn dim(&self) -> Result<usize> {
        Ok(self.lineality.len() + arith::rank_rows(&self.rays)?)
    }

    pub fn is_strongly_convex(&self) -> bool {
        self.lineality.is_empty()
    }

    /// Generated by a linearly independent set of rays. This forces strong
    /// convexity; a cone with lineality has no independent generating set.
    pub fn is_simplicial(&self) -> Result<bool> {
        Ok(self.lineality.is_empty() && arith::rank_rows(&self.rays)? == self.rays.len())
    }

    /// Membership test via the halfspace side.
    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        assert_eq!(v.len(), self.ambient_dim);
        for h in &self.dual_rays {
            if arith::dot(h, v)? < 0 {
                return Ok(false);
            }
        }
        for h in &self.dual_lineality {
            if arith::dot(h, v)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn flat(rays: &[Vec<i64>], lineality: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut out: BTreeSet<Vec<i64>> = rays.iter().cloned().collect();
    for b in lineality {
        out.insert(b.clone());
        out.insert(b.iter().map(|&x| -x).collect());
    }
    out.into_iter().collect()
}

/// Canonical cone spanned by the given vectors.
pub fn cone_from_generators(dim: usize, gens: &[Vec<i64>]) -> Result<Cone> {
    for g in gens {
        assert_eq!(g.len(), dim, "generator length mismatch");
    }
    let (dual_lineality, dual_rays) = ray_description(dim, gens)?;
    let hs = flat(&dual_rays, &dual_lineality);
    let (lineality, rays) = ray_description(dim, &hs)?;
    Ok(Cone {
        ambient_dim: dim,
        rays,
        lineality,
        dual_rays,
        dual_lineality,
    })
}

/// Canonical cone `{x : <u, x> >= 0 for all u in halfspaces}`.
pub fn cone_from_halfspaces(dim: usize, halfspaces: &[Vec<i64>]) -> Result<Cone> {
    for h in halfspaces {
        assert_eq!(h.len(), dim, "halfspace length mismatch");
    }
    let (lineality, rays) = ray_description(dim, halfspaces)?;
    let gens = flat(&rays, &lineality);
    let (dual_lineality, dual_rays) = ray_description(dim, &gens)?;
    Ok(Cone {
        ambient_dim: dim,
        rays,
        lineality,
        dual_rays,
        dual_lineality,
    })
}

/// The dual cone `{u : <u, v> >= 0 for all v in c}`. An exact involution on
/// canonical cones.
pub fn dualize(c: &Cone) -> Cone {
    Cone {
        ambient_dim: c.ambient_dim,
        rays: c.dual_rays.clone(),
        lineality: c.dual_lineality.clone(),
        dual_rays: c.rays.clone(),
        dual_lineality: c.lineality.clone(),
    }
}

/// Intersection, canonicalized from the concatenated halfspace lists.
pub fn intersect(c1: &Cone, c2: &Cone) -> Result<Cone> {
    assert_eq!(c1.ambient_dim, c2.ambient_dim, "ambient dimension mismatch");
    let mut hs = c1.halfspaces();
    hs.extend(c2.halfspaces());
    cone_from_halfspaces(c1.ambient_dim, &hs)
}

/// Shorthand for [`Cone::dim`].
pub fn dim(c: &Cone) -> Result<usize> {
    c.dim()
}

pub fn is_strongly_convex(c: &Cone) -> bool {
    c.is_strongly_convex()
}

pub fn is_simplicial(c: &Cone) -> Result<bool> {
    c.is_simplicial()
}

/// Whether `f` is a face of `c`: either `c` itself, or the intersection of
/// `c` with the vanishing locus of valid constraints.
///
/// Every face of a polyhedral cone is the intersection of the facets that
/// contain it, so it suffices to check `f = c /\ {h = 0 : h active on f}`
/// over the canonical halfspaces `h` of `c`.
pub fn is_face(f: &Cone, c: &Cone) -> Result<bool> {
    assert_eq!(f.ambient_dim, c.ambient_dim, "ambient dimension mismatch");
    let fgens = f.generators();
    let chs = c.halfspaces();
    // f must be contained in c.
    for g in &fgens {
        for h in &chs {
            if arith::dot(h, g)? < 0 {
                return Ok(false);
            }
        }
    }
    // Cut c down by the constraints active on all of f.
    let mut cut = chs.clone();
    for h in &chs {
        let mut active = true;
        for g in &fgens {
            if arith::dot(h, g)? != 0 {
                active = false;
                break;
            }
        }
        if active {
            cut.push(h.iter().map(|&x| -x).collect());
        }
    }
    // The zero cone has no generators; it is always the smallest face.
    Ok(cone_from_halfspaces(c.ambient_dim, &cut)? == *f)
}

/// Lineality basis and extreme rays, both canonical.
type LinealityAndRays = (Vec<Vec<i64>>, Vec<Vec<i64>>);

/// Double description: canonical `(lineality basis, extreme rays)` of
/// `{x : <row, x> >= 0 for every row}`.
fn ray_description(dim: usize, rows: &[Vec<i64>]) -> Result<LinealityAndRays> {
    // Current lineality basis (primitive vectors, span maintained exactly)
    // and current extreme rays.
    let mut lin: Vec<Vec<i64>> = IntMatrix::identity(dim).col_vecs();
    let mut rays: Vec<Vec<i64>> = Vec::new();
    let mut processed: Vec<Vec<i64>> = Vec::new();

    for h in rows {
        if h.iter().all(|&x| x == 0) {
            continue;
        }
        let lin_vals: Vec<i64> = lin
            .iter()
            .map(|b| arith::dot(h, b))
            .collect::<Result<Vec<_>>>()?;
        if let Some(pivot) = lin_vals.iter().position(|&v| v != 0) {
            // The halfspace cuts the lineality space: one direction becomes a
            // ray, the rest of the basis moves into the hyperplane of h.
            let pv = lin_vals[pivot];
            let b_star = lin[pivot].clone();
            let sign = pv.signum();
            let mut new_lin = Vec::with_capacity(lin.len() - 1);
            for (j, b) in lin.iter().enumerate() {
                if j == pivot {
                    continue;
                }
                let v = lin_vals[j];
                if v == 0 {
                    new_lin.push(b.clone());
                } else {
                    new_lin.push(arith::primitive(arith::combine(pv, b, -v, &b_star)?));
                }
            }
            let mut new_rays = Vec::with_capacity(rays.len() + 1);
            new_rays.push(arith::primitive(arith::scale(&b_star, sign)?));
            for r in &rays {
                let v = arith::dot(h, r)?;
                // |pv| r - sign(pv) v b*  lies in the hyperplane of h and
                // differs from a positive multiple of r by lineality.
                new_rays.push(arith::primitive(arith::combine(
                    pv.abs(),
                    r,
                    -sign * v,
                    &b_star,
                )?));
            }
            lin = new_lin;
            rays = dedup(new_rays);
            processed.push(h.clone());
            continue;
        }

        // Lineality untouched; split the rays by sign.
        let vals: Vec<i64> = rays
            .iter()
            .map(|r| arith::dot(h, r))
            .collect::<Result<Vec<_>>>()?;
        if vals.iter().all(|&v| v >= 0) {
            processed.push(h.clone());
            continue;
        }
        processed.push(h.clone());
        let mut new_rays: Vec<Vec<i64>> = Vec::new();
        for (r, &v) in rays.iter().zip(&vals) {
            if v >= 0 {
                new_rays.push(r.clone());
            }
        }
        // Combine each positive/negative pair; keep a candidate exactly when
        // its active constraints cut out a one-dimensional face.
        let target_rank = dim - lin.len() - 1;
        let mut seen: BTreeSet<Vec<i64>> = new_rays.iter().cloned().collect();
        for (p, &vp) in rays.iter().zip(&vals) {
            if vp <= 0 {
                continue;
            }
            for (n, &vn) in rays.iter().zip(&vals) {
                if vn >= 0 {
                    continue;
                }
                let w = arith::primitive(arith::combine(vp, n, -vn, p)?);
                debug_assert!(w.iter().any(|&x| x != 0));
                if seen.contains(&w) {
                    continue;
                }
                let mut active: Vec<Vec<i64>> = Vec::new();
                for q in &processed {
                    if arith::dot(q, &w)? == 0 {
                        active.push(q.clone());
                    }
                }
                if arith::rank_rows(&active)? == target_rank {
                    seen.insert(w.clone());
                    new_rays.push(w);
                }
            }
        }
        rays = dedup(new_rays);
    }

    // Canonical output: saturated Hermite lineality basis, rays projected
    // onto the orthogonal complement of the lineality space.
    let lin_lattice = if processed.is_empty() {
        LatticeBasis::standard(dim)
    } else {
        intlin::kernel_of(&IntMatrix::from_rows(processed.clone()))?
    };
    let lin_cols = lin_lattice.columns();
    debug_assert_eq!(lin_cols.len(), lin.len());
    let rays = canonical_rays(rays, &lin_cols)?;
    Ok((lin_cols, rays))
}

fn dedup(rays: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let set: BTreeSet<Vec<i64>> = rays.into_iter().collect();
    set.into_iter().collect()
}

/// Projects each ray onto the orthogonal complement of the lineality span
/// and rescales to a primitive integer vector; sorted and deduplicated.
fn canonical_rays(rays: Vec<Vec<i64>>, lin: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    if lin.is_empty() {
        return Ok(dedup(rays.into_iter().map(arith::primitive).collect()));
    }
    let l = lin.len();
    // Gram matrix of the lineality basis.
    let mut gram = vec![vec![Rat::from_i64(0); l]; l];
    for i in 0..l {
        for j in 0..l {
            gram[i][j] = Rat::from_i64(arith::dot(&lin[i], &lin[j])?);
        }
    }
    let mut out = Vec::with_capacity(rays.len());
    for r in rays {
        let rhs: Vec<Rat> = lin
            .iter()
            .map(|b| Ok(Rat::from_i64(arith::dot(b, &r)?)))
            .collect::<Result<Vec<_>>>()?;
        let coeffs = arith::solve_rat(&gram, &rhs)?
            .ok_or_else(|| Error::Inconsistency("singular Gram matrix".into()))?;
        // p = r - sum coeffs_i lin_i, cleared to integers.
        let mut den: i128 = 1;
        for c in &coeffs {
            den = den
                .checked_mul(c.den / arith_gcd_i128(den, c.den))
                .ok_or(Error::Overflow)?;
        }
        let mut p: Vec<i128> = r.iter().map(|&x| (x as i128) * den).collect();
        for (c, b) in coeffs.iter().zip(lin) {
            let factor = c.num * (den / c.den);
            for (pi, &bi) in p.iter_mut().zip(b) {
                *pi = pi
                    .checked_sub(factor.checked_mul(bi as i128).ok_or(Error::Overflow)?)
                    .ok_or(Error::Overflow)?;
            }
        }
        let g = p.iter().fold(0i128, |g, &x| arith_gcd_i128(g, x));
        debug_assert!(g > 0, "ray inside the lineality space");
        let v: Vec<i64> = p
            .iter()
            .map(|&x| i64::try_from(x / g).map_err(|_| Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        out.push(v);
    }
    Ok(dedup(out))
}

fn arith_gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a as i128
}

/// A minimal generating set of an affine monoid, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    pub ambient_dim: usize,
    pub elements: Vec<Vec<i64>>,
}

impl HilbertBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Ceilings for the bounded enumerations inside [`hilbert_basis`].
#[derive(Clone, Copy, Debug)]
pub struct EnumerationLimits {
    /// Total lattice points enumerated over all fundamental parallelotopes.
    pub max_parallelotope_points: usize,
    /// Total candidate generators before minimization.
    pub max_candidates: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_parallelotope_points: 2_000_000,
            max_candidates: 200_000,
        }
    }
}

/// Hilbert basis of the monoid `{v in lattice : <h, v> >= 0 for all h}`.
///
/// When the monoid has units (the cone's lineality meets the lattice
/// nontrivially) the result contains both signs of a basis of the unit
/// sublattice, followed by canonical lifts of the Hilbert basis of the
/// pointed quotient monoid. Elements are reported in ambient coordinates.
pub fn hilbert_basis(
    dim: usize,
    halfspaces: &[Vec<i64>],
    lattice: &LatticeBasis,
) -> Result<HilbertBasis> {
    hilbert_basis_with(EnumerationLimits::default(), dim, halfspaces, lattice)
}

pub fn hilbert_basis_with(
    limits: EnumerationLimits,
    dim: usize,
    halfspaces: &[Vec<i64>],
    lattice: &LatticeBasis,
) -> Result<HilbertBasis> {
    assert_eq!(
        lattice.ambient_dim(),
        dim,
        "lattice ambient dimension mismatch"
    );
    for h in halfspaces {
        assert_eq!(h.len(), dim, "halfspace length mismatch");
    }
    let r = lattice.rank();
    if r == 0 {
        return Ok(HilbertBasis {
            ambient_dim: dim,
            elements: vec![],
        });
    }

    // Work in lattice coordinates: v = B x turns the constraints into
    // (h B) x >= 0 over the standard lattice Z^r.
    let b = lattice.basis();
    let hb: Vec<Vec<i64>> = halfspaces
        .iter()
        .map(|h| {
            (0..r)
                .map(|j| arith::dot(h, &b.col(j)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    // Unit sublattice = lineality of the cone in lattice coordinates.
    let constraint_matrix = if hb.is_empty() {
        IntMatrix::zeros(0, r)
    } else {
        IntMatrix::from_rows(hb.clone())
    };
    let units = intlin::kernel_of(&constraint_matrix)?;
    let l = units.rank();

    let mut elements: Vec<Vec<i64>> = Vec::new();
    for u in units.columns() {
        let v = b.mul_vec(&u)?;
        elements.push(v.iter().map(|&x| -x).collect());
        elements.push(v);
    }

    // Pointed part lives in the quotient by the unit sublattice.
    let q = r - l;
    if q > 0 {
        let (lift, hq) = quotient_by_units(r, &units, &hb)?;
        let pointed = pointed_hilbert_basis(limits, q, &hq)?;
        for y in pointed {
            // Canonical lift through the chosen complement, mapped to ambient.
            let x = lift.mul_vec(&y)?;
            elements.push(b.mul_vec(&x)?);
        }
    }

    let mut elements = dedup(elements);
    elements.retain(|v| v.iter().any(|&x| x != 0));
    Ok(HilbertBasis {
        ambient_dim: dim,
        elements,
    })
}

/// Splits `Z^r` along the saturated unit sublattice: returns the lift matrix
/// (a complement basis, as the last columns of `U^-1` from the Smith form of
/// the unit basis) and the constraint rows rewritten on the quotient.
fn quotient_by_units(
    r: usize,
    units: &LatticeBasis,
    constraints: &[Vec<i64>],
) -> Result<(IntMatrix, Vec<Vec<i64>>)> {
    let l = units.rank();
    let q = r - l;
    if l == 0 {
        return Ok((IntMatrix::identity(r), constraints.to_vec()));
    }
    // U * B * V = [I_l; 0], so the first l columns of U^-1 span the unit
    // lattice and the last q columns complete it to a basis of Z^r.
    let snf = smith_normal_form(units.basis())?;
    if snf.invariant_factors.iter().any(|&d| d != 1) {
        return Err(Error::Inconsistency(
            "unit sublattice is not saturated".into(),
        ));
    }
    let u_inv = unimodular_inverse(&snf.u)?;
    let lift_cols: Vec<Vec<i64>> = (l..r).map(|j| u_inv.col(j)).collect();
    let lift = IntMatrix::from_cols(r, &lift_cols);
    // Constraints factor through the quotient because they vanish on units.
    let hq: Vec<Vec<i64>> = constraints
        .iter()
        .map(|row| {
            (0..q)
                .map(|j| arith::dot(row, &lift.col(j)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((lift, hq))
}

/// Inverse of a unimodular integer matrix via exact adjugate data.
fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    let n = m.rows();
    assert_eq!(m.cols(), n);
    let det = arith::det_rows(&m.row_vecs())?;
    if det.abs() != 1 {
        return Err(Error::Inconsistency("matrix is not unimodular".into()));
    }
    let mut inv = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            // Cofactor C_{j,i} for the (i, j) entry of the inverse.
            let mut minor: Vec<Vec<i64>> = Vec::with_capacity(n - 1);
            for rr in 0..n {
                if rr == j {
                    continue;
                }
                let mut row = Vec::with_capacity(n - 1);
                for cc in 0..n {
                    if cc == i {
                        continue;
                    }
                    row.push(m.get(rr, cc));
                }
                minor.push(row);
            }
            let c = arith::det_rows(&minor)?;
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            let val = c * sign * det; // det = +-1, so this is the inverse entry
            inv.set(i, j, i64::try_from(val).map_err(|_| Error::Overflow)?);
        }
    }
    debug_assert_eq!(m.mul(&inv).unwrap(), IntMatrix::identity(n));
    Ok(inv)
}

/// Hilbert basis of the pointed monoid `{x in Z^q : H x >= 0}`.
fn pointed_hilbert_basis(
    limits: EnumerationLimits,
    q: usize,
    constraints: &[Vec<i64>],
) -> Result<Vec<Vec<i64>>> {
    let (lin, rays) = ray_description(q, constraints)?;
    if !lin.is_empty() {
        return Err(Error::Inconsistency(
            "pointed quotient cone has lineality".into(),
        ));
    }
    if rays.is_empty() {
        return Ok(vec![]);
    }
    let t = arith::rank_rows(&rays)?;

    let mut candidates: BTreeSet<Vec<i64>> = rays.iter().cloned().collect();
    let mut total_points = 0usize;
    for subset in rays.iter().combinations(t) {
        let sub: Vec<Vec<i64>> = subset.into_iter().cloned().collect();
        if arith::rank_rows(&sub)? != t {
            continue;
        }
        let points = parallelotope_points(limits, q, &sub, &mut total_points)?;
        candidates.extend(points);
        if candidates.len() > limits.max_candidates {
            return Err(Error::ResourceCeiling(format!(
                "more than {} Hilbert basis candidates",
                limits.max_candidates
            )));
        }
    }
    candidates.remove(&vec![0; q]);

    // The sum of the constraint rows is strictly positive on the pointed
    // monoid, so it grades the candidates. A reducible element has an
    // irreducible summand of strictly smaller grade; processing candidates
    // by grade, it suffices to test subtraction of the basis found so far.
    let grade = |v: &[i64]| -> Result<i64> {
        let mut acc = 0i64;
        for h in constraints {
            acc = arith::add(acc, arith::dot(h, v)?)?;
        }
        Ok(acc)
    };
    let mut graded: Vec<(i64, Vec<i64>)> = candidates
        .into_iter()
        .map(|c| Ok((grade(&c)?, c)))
        .collect::<Result<Vec<_>>>()?;
    graded.sort();
    let in_monoid = |v: &[i64]| -> Result<bool> {
        if v.iter().all(|&x| x == 0) {
            return Ok(false);
        }
        for h in constraints {
            if arith::dot(h, v)? < 0 {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut basis: Vec<Vec<i64>> = Vec::new();
    'next: for (_, h) in &graded {
        for c in &basis {
            let diff: Vec<i64> = h
                .iter()
                .zip(c)
                .map(|(&a, &b)| arith::sub(a, b))
                .collect::<Result<Vec<_>>>()?;
            if in_monoid(&diff)? {
                continue 'next;
            }
        }
        basis.push(h.clone());
    }
    Ok(basis)
}

/// Lattice points of the half-open parallelotope spanned by `t` independent
/// integer vectors, enumerated through the Smith form of the coordinate
/// matrix (one point per residue class, no box scans).
fn parallelotope_points(
    limits: EnumerationLimits,
    q: usize,
    rays: &[Vec<i64>],
    total: &mut usize,
) -> Result<Vec<Vec<i64>>> {
    let t = rays.len();
    // Saturated lattice of the span: vectors orthogonal to the orthogonal
    // complement of the rays.
    let ortho = intlin::kernel_of(&IntMatrix::from_rows(rays.to_vec()))?;
    let span_lattice = if ortho.rank() == 0 {
        LatticeBasis::standard(q)
    } else {
        intlin::kernel_of(&IntMatrix::from_rows(ortho.columns()))?
    };
    debug_assert_eq!(span_lattice.rank(), t);

    // Coordinates of each ray in the span lattice basis.
    let mut a_cols = Vec::with_capacity(t);
    for r in rays {
        let coords = span_lattice
            .coords_of(r)?
            .ok_or_else(|| Error::Inconsistency("ray outside its span lattice".into()))?;
        a_cols.push(coords);
    }
    let a = IntMatrix::from_cols(t, &a_cols);
    let snf = smith_normal_form(&a)?;
    if snf.invariant_factors.len() != t {
        return Err(Error::Inconsistency(
            "parallelotope matrix is singular".into(),
        ));
    }
    let index: i128 = snf.invariant_factors.iter().map(|&d| d as i128).product();
    let index = usize::try_from(index).map_err(|_| Error::Overflow)?;
    *total += index;
    if *total > limits.max_parallelotope_points {
        return Err(Error::ResourceCeiling(format!(
            "more than {} parallelotope lattice points",
            limits.max_parallelotope_points
        )));
    }

    let u_inv = unimodular_inverse(&snf.u)?;
    // Rational inverse of A for the fractional-part reduction, via Cramer.
    let a_rows = a.row_vecs();
    let det_a = arith::det_rows(&a_rows)?;

    let mut points = Vec::with_capacity(index);
    let mut counters = vec![0i64; t];
    loop {
        // Representative x = U^-1 c of the residue class.
        let x = u_inv.mul_vec(&counters)?;
        // Reduce x into the half-open parallelotope: x - A floor(A^-1 x).
        let mut lam = Vec::with_capacity(t);
        for i in 0..t {
            // Cramer: component i of A^-1 x.
            let mut cols = a_cols.clone();
            cols[i] = x.clone();
            let num = arith::det_rows(&IntMatrix::from_cols(t, &cols).row_vecs())?;
            lam.push(Rat::new(num, det_a)?);
        }
        let mut x_red = x.clone();
        for (i, l) in lam.iter().enumerate() {
            let f = l.floor();
            if f != 0 {
                let f = i64::try_from(f).map_err(|_| Error::Overflow)?;
                for (xr, &ai) in x_red.iter_mut().zip(&a_cols[i]) {
                    *xr = arith::sub(*xr, arith::mul(f, ai)?)?;
                }
            }
        }
        // Map back to ambient quotient coordinates.
        let p = span_lattice.basis().mul_vec(&x_red)?;
        points.push(p);

        // Odometer over the invariant factor box.
        let mut idx = 0;
        loop {
            if idx == t {
                break;
            }
            counters[idx] += 1;
            if counters[idx] < snf.invariant_factors[idx] {
                break;
            }
            counters[idx] = 0;
            idx += 1;
        }
        if idx == t {
            break;
        }
    }
    Ok(points)
}
