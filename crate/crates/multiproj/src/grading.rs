//! Graded polynomial rings: the grading group, variable degrees, monomials,
//! the degree map, and its kernel lattice.
//!
//! A ring is described by a document of the form
//!
//! ```json
//! {
//!   "variables": ["X", "Y"],
//!   "grading": { "free_rank": 1, "torsion": [] },
//!   "degrees": [ { "free": [1] }, { "free": [-1] } ],
//!   "coefficients": "Q"
//! }
//! ```
//!
//! where `grading.torsion` lists the orders of the cyclic factors and each
//! degree then carries a matching `torsion` residue list. The coefficient
//! field is a display label only: every computation in this crate depends on
//! the degree data alone.

use serde::Deserialize;

use crate::intlin::{self, IntMatrix, LatticeBasis};
use crate::{arith, Error, Result};

/// The grading group `Z^s (+) Z/m_1 (+) ... (+) Z/m_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingGroup {
    pub free_rank: usize,
    pub torsion_orders: Vec<i64>,
}

impl GradingGroup {
    pub fn new(free_rank: usize, torsion_orders: Vec<i64>) -> Result<GradingGroup> {
        if let Some(&m) = torsion_orders.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidTorsionOrder(m));
        }
        Ok(GradingGroup {
            free_rank,
            torsion_orders,
        })
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion_orders.is_empty()
    }
}

/// An element of the grading group; torsion residues are kept reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multidegree {
    pub free: Vec<i64>,
    pub torsion: Vec<i64>,
}

impl Multidegree {
    pub fn new(group: &GradingGroup, free: Vec<i64>, torsion: Vec<i64>) -> Result<Multidegree> {
        if free.len() != group.free_rank {
            return Err(Error::DimensionMismatch(format!(
                "degree has {} free components, grading has free rank {}",
                free.len(),
                group.free_rank
            )));
        }
        if torsion.len() != group.torsion_orders.len() {
            return Err(Error::DimensionMismatch(format!(
                "degree has {} torsion components, grading has {} torsion factors",
                torsion.len(),
                group.torsion_orders.len()
            )));
        }
        let torsion = torsion
            .into_iter()
            .zip(&group.torsion_orders)
            .map(|(r, &m)| r.rem_euclid(m))
            .collect();
        Ok(Multidegree { free, torsion })
    }

    pub fn zero(group: &GradingGroup) -> Multidegree {
        Multidegree {
            free: vec![0; group.free_rank],
            torsion: vec![0; group.torsion_orders.len()],
        }
    }

    /// Componentwise sum with torsion reduction.
    pub fn add(&self, other: &Multidegree, group: &GradingGroup) -> Result<Multidegree> {
        let free = self
            .free
            .iter()
            .zip(&other.free)
            .map(|(&a, &b)| arith::add(a, b))
            .collect::<Result<Vec<_>>>()?;
        let torsion = self
            .torsion
            .iter()
            .zip(&other.torsion)
            .zip(&group.torsion_orders)
            .map(|((&a, &b), &m)| Ok(arith::add(a, b)?.rem_euclid(m)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Multidegree { free, torsion })
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|&x| x == 0) && self.torsion.iter().all(|&x| x == 0)
    }
}

impl std::fmt::Display for Multidegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .free
            .iter()
            .map(|x| x.to_string())
            .chain(self.torsion.iter().map(|x| format!("[{x}]")))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A graded polynomial ring: distinct variable names, one degree per
/// variable, and a display-only coefficient label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    pub variables: Vec<String>,
    pub degrees: Vec<Multidegree>,
    pub grading: GradingGroup,
    pub coefficient_label: String,
}

impl RingSpec {
    pub fn new(
        variables: Vec<String>,
        degrees: Vec<Multidegree>,
        grading: GradingGroup,
        coefficient_label: String,
    ) -> Result<RingSpec> {
        if variables.is_empty() {
            return Err(Error::Validation(
                "ring must have at least one variable".into(),
            ));
        }
        if degrees.len() != variables.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} variables but {} degrees",
                variables.len(),
                degrees.len()
            )));
        }
        for name in &variables {
            if name.is_empty() {
                return Err(Error::Validation("variable names must be nonempty".into()));
            }
        }
        for (i, a) in variables.iter().enumerate() {
            if variables[..i].contains(a) {
                return Err(Error::DuplicateVariable(a.clone()));
            }
        }
        Ok(RingSpec {
            variables,
            degrees,
            grading,
            coefficient_label,
        })
    }

    /// Number of variables.
    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    /// Free rank `s` of the grading group.
    pub fn free_rank(&self) -> usize {
        self.grading.free_rank
    }

    /// The free part of the degree map as an `s x k` matrix (columns are the
    /// variable degrees).
    pub fn free_degree_matrix(&self) -> IntMatrix {
        let s = self.free_rank();
        let mut m = IntMatrix::zeros(s, self.num_vars());
        for (j, d) in self.degrees.iter().enumerate() {
            for (i, &x) in d.free.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    /// The torsion part of the degree map as a `t x k` matrix of residues.
    pub fn torsion_degree_matrix(&self) -> IntMatrix {
        let t = self.grading.torsion_orders.len();
        let mut m = IntMatrix::zeros(t, self.num_vars());
        for (j, d) in self.degrees.iter().enumerate() {
            for (i, &x) in d.torsion.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    /// Free parts of the degrees at the given variable indices.
    pub fn free_parts(&self, indices: &[usize]) -> Vec<Vec<i64>> {
        indices
            .iter()
            .map(|&i| self.degrees[i].free.clone())
            .collect()
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }
}

/// A monomial in the ring, stored as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub exponents: Vec<i64>,
}

impl Monomial {
    pub fn new(exponents: Vec<i64>) -> Monomial {
        assert!(
            exponents.iter().all(|&e| e >= 0),
            "monomial exponents must be nonnegative"
        );
        Monomial { exponents }
    }

    /// Indices of the variables that occur.
    pub fn support_indices(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter_map(|(i, &e)| (e > 0).then_some(i))
            .collect()
    }

    pub fn is_constant(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RingDoc {
    variables: Vec<String>,
    grading: GradingDoc,
    degrees: Vec<DegreeDoc>,
    #[serde(default)]
    coefficients: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GradingDoc {
    free_rank: usize,
    #[serde(default)]
    torsion: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DegreeDoc {
    #[serde(default)]
    free: Vec<i64>,
    #[serde(default)]
    torsion: Vec<i64>,
}

/// Parses and validates a ring document. Unknown keys are rejected and each
/// failure mode carries its own diagnostic.
pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    let doc: RingDoc = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    let grading = GradingGroup::new(doc.grading.free_rank, doc.grading.torsion)?;
    let degrees = doc
        .degrees
        .into_iter()
        .map(|d| Multidegree::new(&grading, d.free, d.torsion))
        .collect::<Result<Vec<_>>>()?;
    RingSpec::new(
        doc.variables,
        degrees,
        grading,
        doc.coefficients.unwrap_or_else(|| "Q".to_string()),
    )
}

/// Degree of an exponent vector (negative exponents allowed, for Laurent
/// monomials): the degree-map image with torsion reduction.
pub fn degree_of_vector(spec: &RingSpec, exponents: &[i64]) -> Result<Multidegree> {
    assert_eq!(
        exponents.len(),
        spec.num_vars(),
        "exponent vector length mismatch"
    );
    let mut acc = Multidegree::zero(&spec.grading);
    for (i, d) in spec.degrees.iter().enumerate() {
        let free = d
            .free
            .iter()
            .map(|&x| arith::mul(x, exponents[i]))
            .collect::<Result<Vec<_>>>()?;
        let torsion = d
            .torsion
            .iter()
            .zip(&spec.grading.torsion_orders)
            .map(|(&x, &m)| Ok(arith::mul(x, exponents[i])?.rem_euclid(m)))
            .collect::<Result<Vec<_>>>()?;
        acc = acc.add(&Multidegree { free, torsion }, &spec.grading)?;
    }
    Ok(acc)
}

/// Degree of a monomial.
pub fn degree_of_monomial(spec: &RingSpec, m: &Monomial) -> Result<Multidegree> {
    degree_of_vector(spec, &m.exponents)
}

/// The kernel lattice `M` of the degree map `Z^k -> D`, including the
/// congruences imposed by torsion factors.
pub fn kernel_lattice_of(spec: &RingSpec) -> Result<LatticeBasis> {
    intlin::kernel_lattice(
        &spec.free_degree_matrix(),
        &spec.torsion_degree_matrix(),
        &spec.grading.torsion_orders,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn doubled_line() -> RingSpec {
        parse_ring_spec(
            r#"{
                "variables": ["X", "Y"],
                "grading": { "free_rank": 1, "torsion": [] },
                "degrees": [ { "free": [1] }, { "free": [-1] } ],
                "coefficients": "Q"
            }"#,
        )
        .unwrap()
    }

    #[test]
    fn parse_doubled_line() {
        let spec = doubled_line();
        assert_eq!(spec.num_vars(), 2);
        assert_eq!(spec.free_rank(), 1);
        assert_eq!(spec.degrees[1].free, vec![-1]);
        assert_eq!(spec.coefficient_label, "Q");
    }

    #[test]
    fn parse_p2() {
        let spec = parse_ring_spec(
            r#"{
                "variables": ["x", "y", "z"],
                "grading": { "free_rank": 1 },
                "degrees": [ { "free": [1] }, { "free": [1] }, { "free": [1] } ]
            }"#,
        )
        .unwrap();
        assert_eq!(spec.num_vars(), 3);
        assert_eq!(spec.free_rank(), 1);
    }

    #[test]
    fn parse_diagnostics_are_distinct() {
        assert!(matches!(
            parse_ring_spec("not json"),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            parse_ring_spec(
                r#"{"variables":["x","y"],"grading":{"free_rank":1},"degrees":[{"free":[1]}]}"#
            ),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            parse_ring_spec(
                r#"{"variables":["x","x"],"grading":{"free_rank":1},
                    "degrees":[{"free":[1]},{"free":[1]}]}"#
            ),
            Err(Error::DuplicateVariable(_))
        ));
        assert!(matches!(
            parse_ring_spec(
                r#"{"variables":["x"],"grading":{"free_rank":0,"torsion":[1]},
                    "degrees":[{"torsion":[0]}]}"#
            ),
            Err(Error::InvalidTorsionOrder(1))
        ));
        assert!(matches!(
            parse_ring_spec(
                r#"{"variables":["x"],"grading":{"free_rank":1},
                    "degrees":[{"free":[1]}],"unknown_key":0}"#
            ),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn torsion_residues_reduced() {
        let spec = parse_ring_spec(
            r#"{
                "variables": ["x"],
                "grading": { "free_rank": 0, "torsion": [3] },
                "degrees": [ { "torsion": [-1] } ]
            }"#,
        )
        .unwrap();
        assert_eq!(spec.degrees[0].torsion, vec![2]);
    }

    #[test]
    fn degree_examples() {
        let spec = doubled_line();
        let d = degree_of_monomial(&spec, &Monomial::new(vec![1, 1])).unwrap();
        assert!(d.is_zero());

        // Z^2-graded example: deg X1 = (1,0), deg Z = (1,1); X1*Z has degree (2,1).
        let spec = parse_ring_spec(
            r#"{
                "variables": ["X1", "Z"],
                "grading": { "free_rank": 2 },
                "degrees": [ { "free": [1, 0] }, { "free": [1, 1] } ]
            }"#,
        )
        .unwrap();
        let d = degree_of_monomial(&spec, &Monomial::new(vec![1, 1])).unwrap();
        assert_eq!(d.free, vec![2, 1]);
    }

    #[test]
    fn degree_additive_on_products() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(3);
        let spec = parse_ring_spec(
            r#"{
                "variables": ["a", "b", "c"],
                "grading": { "free_rank": 2, "torsion": [2, 3] },
                "degrees": [
                    { "free": [1, 0], "torsion": [1, 2] },
                    { "free": [-1, 2], "torsion": [0, 1] },
                    { "free": [0, -1], "torsion": [1, 0] }
                ]
            }"#,
        )
        .unwrap();
        for _ in 0..50 {
            let m1 = Monomial::new((0..3).map(|_| rng.gen_range(0..5)).collect());
            let m2 = Monomial::new((0..3).map(|_| rng.gen_range(0..5)).collect());
            let prod = Monomial::new(
                m1.exponents
                    .iter()
                    .zip(&m2.exponents)
                    .map(|(&a, &b)| a + b)
                    .collect(),
            );
            let lhs = degree_of_monomial(&spec, &prod).unwrap();
            let rhs = degree_of_monomial(&spec, &m1)
                .unwrap()
                .add(&degree_of_monomial(&spec, &m2).unwrap(), &spec.grading)
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn degree_overflow_detected() {
        let spec = parse_ring_spec(&format!(
            r#"{{
                "variables": ["x"],
                "grading": {{ "free_rank": 1 }},
                "degrees": [ {{ "free": [{}] }} ]
            }}"#,
            i64::MAX
        ))
        .unwrap();
        assert_eq!(
            degree_of_monomial(&spec, &Monomial::new(vec![2])),
            Err(Error::Overflow)
        );
    }

    #[test]
    fn kernel_examples() {
        let spec = doubled_line();
        let m = kernel_lattice_of(&spec).unwrap();
        assert_eq!(m.columns(), vec![vec![1, 1]]);

        let p2 = parse_ring_spec(
            r#"{
                "variables": ["x", "y", "z"],
                "grading": { "free_rank": 1 },
                "degrees": [ { "free": [1] }, { "free": [1] }, { "free": [1] } ]
            }"#,
        )
        .unwrap();
        assert_eq!(kernel_lattice_of(&p2).unwrap().rank(), 2);
    }

    #[test]
    fn kernel_columns_have_degree_zero() {
        let spec = parse_ring_spec(
            r#"{
                "variables": ["a", "b", "c", "d"],
                "grading": { "free_rank": 1, "torsion": [2] },
                "degrees": [
                    { "free": [1], "torsion": [1] },
                    { "free": [-1], "torsion": [0] },
                    { "free": [2], "torsion": [1] },
                    { "free": [0], "torsion": [1] }
                ]
            }"#,
        )
        .unwrap();
        let m = kernel_lattice_of(&spec).unwrap();
        assert!(m.rank() > 0);
        for c in m.columns() {
            assert!(degree_of_vector(&spec, &c).unwrap().is_zero());
        }
    }
}
