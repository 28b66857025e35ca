//! Acceptance suite: one test per criterion, each printing a PASS line and
//! asserting its stated time budget.
//!
//! Run with `cargo test -p multiproj --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use std::time::{Duration, Instant};

use rand::{rngs::StdRng, Rng, SeedableRng};

use multiproj::arith;
use multiproj::cones::{self, hilbert_basis};
use multiproj::grading::{parse_ring_spec, RingSpec};
use multiproj::intlin::{smith_normal_form, IntMatrix, LatticeBasis};
use multiproj::projmodel::{
    build_model, fan_check, pairwise_separation, separation_verdict, FanVerdict, Overall,
    PairwiseEntry,
};
use multiproj::relevance::{is_relevant_support, Support, DEFAULT_ENUMERATION_CAP};
use multiproj::{charts, grading};

fn finish(criterion: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its budget: {elapsed:?} > {budget:?}"
    );
    println!("[criterion {criterion}] PASS in {elapsed:?} (budget {budget:?})");
}

fn spec_from(vars: &[&str], s: usize, degrees: &[Vec<i64>]) -> RingSpec {
    let var_list: Vec<String> = vars.iter().map(|v| format!("\"{v}\"")).collect();
    let deg_list: Vec<String> = degrees
        .iter()
        .map(|d| {
            let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            format!("{{ \"free\": [{}] }}", parts.join(","))
        })
        .collect();
    parse_ring_spec(&format!(
        r#"{{ "variables": [{}], "grading": {{ "free_rank": {} }}, "degrees": [{}] }}"#,
        var_list.join(","),
        s,
        deg_list.join(",")
    ))
    .unwrap()
}

/// Criterion 1: the affine line with doubled origin. Two charts, each
/// generated by the single Laurent monomial XY; the fan cone of each chart
/// is the ray (1) in R^1 (multiplicity 2); the verdict is NotSeparated.
#[test]
fn criterion_1_doubled_line() {
    let start = Instant::now();
    let spec = spec_from(&["X", "Y"], 1, &[vec![1], vec![-1]]);
    let model = build_model(&spec, DEFAULT_ENUMERATION_CAP).unwrap();

    assert_eq!(model.charts.len(), 2);
    for chart in &model.charts {
        assert_eq!(chart.generators, vec![(vec![1], vec![1, 1])]);
    }
    let fan = model.fan_cones();
    assert_eq!(fan.len(), 2);
    assert_eq!(fan[0].extreme_rays(), &[vec![1]]);
    assert_eq!(fan[0], fan[1]);

    let report = separation_verdict(&model).unwrap();
    assert_eq!(report.overall, Overall::NotSeparated);
    finish("1 (doubled line)", start, Duration::from_secs(1));
}

/// Criterion 2: rings with positive Z-gradings are always certified
/// separated; the pairwise degree-cone test holds trivially there.
#[test]
fn criterion_2_positively_graded_always_separated() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..100 {
        let k = rng.gen_range(1..=6);
        let degrees: Vec<Vec<i64>> = (0..k).map(|_| vec![rng.gen_range(1..=9)]).collect();
        let names: Vec<String> = (0..k).map(|i| format!("t{i}")).collect();
        let name_refs: Vec<&str> = names.iter().map(|n| n.as_str()).collect();
        let spec = spec_from(&name_refs, 1, &degrees);
        let model = build_model(&spec, DEFAULT_ENUMERATION_CAP).unwrap();
        let report = separation_verdict(&model).unwrap();
        assert_eq!(report.overall, Overall::Separated, "degrees {degrees:?}");
        assert!(report
            .pairwise
            .iter()
            .flatten()
            .all(|&e| e == PairwiseEntry::Certified));
    }
    finish(
        "2 (positive gradings separated)",
        start,
        Duration::from_secs(5),
    );
}

/// Criterion 3: the Z^2-graded ring k[X1..X4, Y1..Y4, Z] with degrees
/// (1,0), (0,1), (1,1). Exactly 24 minimal relevant supports split
/// 16/4/4; the (X1 Z, Y1 Z) pair is inconclusive with degree-cone
/// intersection the ray (1,1); the model is not separated.
#[test]
fn criterion_3_z2_nonseparated_example() {
    let start = Instant::now();
    let mut vars: Vec<String> = (1..=4).map(|i| format!("X{i}")).collect();
    vars.extend((1..=4).map(|i| format!("Y{i}")));
    vars.push("Z".into());
    let var_refs: Vec<&str> = vars.iter().map(|v| v.as_str()).collect();
    let mut degrees: Vec<Vec<i64>> = vec![vec![1, 0]; 4];
    degrees.extend(vec![vec![0, 1]; 4]);
    degrees.push(vec![1, 1]);
    let spec = spec_from(&var_refs, 2, &degrees);

    let model = build_model(&spec, DEFAULT_ENUMERATION_CAP).unwrap();
    assert_eq!(model.charts.len(), 24);

    let is_x = |i: usize| i < 4;
    let is_y = |i: usize| (4..8).contains(&i);
    let mut xy = 0;
    let mut xz = 0;
    let mut yz = 0;
    for j in model.minimal_supports() {
        let idx = j.indices();
        assert_eq!(idx.len(), 2);
        match (idx[0], idx[1]) {
            (a, b) if is_x(a) && is_y(b) => xy += 1,
            (a, 8) if is_x(a) => xz += 1,
            (a, 8) if is_y(a) => yz += 1,
            other => panic!("unexpected support {other:?}"),
        }
    }
    assert_eq!((xy, xz, yz), (16, 4, 4));

    let x1z = Support::new(vec![0, 8]);
    let y1z = Support::new(vec![4, 8]);
    assert_eq!(
        pairwise_separation(&spec, &x1z, &y1z).unwrap(),
        PairwiseEntry::Inconclusive
    );
    let meet = cones::intersect(
        &charts::degree_cone(&spec, &x1z).unwrap(),
        &charts::degree_cone(&spec, &y1z).unwrap(),
    )
    .unwrap();
    assert_eq!(meet.extreme_rays(), &[vec![1, 1]]);
    assert_eq!(meet.dim().unwrap(), 1);

    let report = separation_verdict(&model).unwrap();
    assert_eq!(report.overall, Overall::NotSeparated);
    finish(
        "3 (Z^2 nonseparated example)",
        start,
        Duration::from_secs(5),
    );
}

/// Criterion 4: determinantal section rings. For degrees 1 on X_0..X_m and
/// -1 on T_1..T_r, the degree-zero subring is generated by the (m+1) x r
/// products X_i T_j, with binomial relations at bound 4 exactly the 2x2
/// minors: C(m+1, 2) * C(r, 2) of them.
#[test]
fn criterion_4_determinantal_section_rings() {
    let start = Instant::now();
    let choose2 = |n: usize| n * n.saturating_sub(1) / 2;
    for m in 1..=3usize {
        for r in 1..=3usize {
            let mut names: Vec<String> = (0..=m).map(|i| format!("X{i}")).collect();
            names.extend((1..=r).map(|j| format!("T{j}")));
            let refs: Vec<&str> = names.iter().map(|n| n.as_str()).collect();
            let mut degrees = vec![vec![1i64]; m + 1];
            degrees.extend(vec![vec![-1i64]; r]);
            let spec = spec_from(&refs, 1, &degrees);

            let hb = multiproj::sections::zero_subring_generators(&spec).unwrap();
            assert_eq!(hb.len(), (m + 1) * r, "m={m} r={r}");
            for e in &hb.elements {
                assert!(grading::degree_of_vector(&spec, e).unwrap().is_zero());
            }

            let rels = multiproj::sections::binomial_relations(&hb, 4).unwrap();
            assert_eq!(rels.len(), choose2(m + 1) * choose2(r), "m={m} r={r}");
            // Every relation is a 2x2 minor: two +1 and two -1 entries.
            for u in &rels {
                let plus = u.iter().filter(|&&x| x == 1).count();
                let minus = u.iter().filter(|&&x| x == -1).count();
                let zero = u.iter().filter(|&&x| x == 0).count();
                assert_eq!((plus, minus, zero), (2, 2, u.len() - 4));
            }
        }
    }
    finish(
        "4 (determinantal section rings)",
        start,
        Duration::from_secs(10),
    );
}

/// Criterion 5: projection-algebra section rings. For degrees 1 on
/// X_0..X_m, -1 on S, and 1 on T, the degree-zero subring is the free
/// algebra on X_0 S, .., X_m S, S T: m+2 generators and no relations.
#[test]
fn criterion_5_projection_section_rings() {
    let start = Instant::now();
    for m in 1..=4usize {
        let mut names: Vec<String> = (0..=m).map(|i| format!("X{i}")).collect();
        names.push("S".into());
        names.push("T".into());
        let refs: Vec<&str> = names.iter().map(|n| n.as_str()).collect();
        let mut degrees = vec![vec![1i64]; m + 1];
        degrees.push(vec![-1]);
        degrees.push(vec![1]);
        let spec = spec_from(&refs, 1, &degrees);

        let hb = multiproj::sections::zero_subring_generators(&spec).unwrap();
        assert_eq!(hb.len(), m + 2, "m={m}");
        let rels = multiproj::sections::binomial_relations(&hb, 4).unwrap();
        assert!(rels.is_empty(), "m={m}: unexpected relations {rels:?}");
    }
    finish(
        "5 (projection section rings)",
        start,
        Duration::from_secs(5),
    );
}

/// Criterion 6: the projective plane. Chart cones carry the rays (1,0),
/// (0,1), (-1,-1) in the canonical Hermite kernel basis; the fan check
/// passes and the verdict is Separated.
#[test]
fn criterion_6_p2_fan() {
    let start = Instant::now();
    let spec = spec_from(&["x", "y", "z"], 1, &[vec![1], vec![1], vec![1]]);
    let model = build_model(&spec, DEFAULT_ENUMERATION_CAP).unwrap();
    assert_eq!(model.charts.len(), 3);

    let mut rays: Vec<Vec<i64>> = model
        .fan_cones()
        .iter()
        .flat_map(|c| c.extreme_rays().to_vec())
        .collect();
    rays.sort();
    rays.dedup();
    assert_eq!(rays, vec![vec![-1, -1], vec![0, 1], vec![1, 0]]);

    assert_eq!(fan_check(&model).unwrap(), FanVerdict::IsFan);
    assert_eq!(
        separation_verdict(&model).unwrap().overall,
        Overall::Separated
    );
    finish("6 (P^2 fan)", start, Duration::from_secs(1));
}

/// Criterion 7: relevance against the cone side, over random specs and all
/// supports. A support is relevant exactly when the degree map is onto up to
/// finite index (the kernel lattice has rank k - s) and its chart cone is
/// spanned by linearly independent projections, i.e. the cone dimension
/// equals the number of variables outside the support. Relevance then forces
/// the cone to be strongly convex and simplicial, and the chart generators
/// span the whole kernel lattice.
///
/// Strong convexity alone is strictly weaker than relevance: for the doubled
/// line and the empty support the chart cone is the strongly convex ray (1)
/// while the support is irrelevant. That counterexample is pinned here, and
/// the equivalence is asserted in its corrected form.
#[test]
fn criterion_7_relevance_matches_cone_side() {
    let start = Instant::now();

    // Pinned counterexample to the naive equivalence.
    let dl = spec_from(&["X", "Y"], 1, &[vec![1], vec![-1]]);
    let empty_cone = charts::chart_cone(&dl, &Support::empty()).unwrap();
    assert!(empty_cone.is_strongly_convex());
    assert!(!is_relevant_support(&dl, &Support::empty()).unwrap());

    let mut rng = StdRng::seed_from_u64(777);
    for case in 0..200 {
        let k = rng.gen_range(1..=6usize);
        let s = rng.gen_range(0..=3usize);
        let degrees: Vec<Vec<i64>> = (0..k)
            .map(|_| (0..s).map(|_| rng.gen_range(-3..=3)).collect())
            .collect();
        let names: Vec<String> = (0..k).map(|i| format!("t{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|n| n.as_str()).collect();
        let spec = spec_from(&refs, s, &degrees);
        let m = grading::kernel_lattice_of(&spec).unwrap();
        // The free degree parts span Q^s exactly when the kernel has rank k - s.
        let degrees_span = m.rank() + s == k;

        for mask in 0..(1u32 << k) {
            let j = Support::new((0..k).filter(|i| mask & (1 << i) != 0).collect());
            let cone = charts::chart_cone(&spec, &j).unwrap();
            let relevant = is_relevant_support(&spec, &j).unwrap();
            let independent = degrees_span && cone.dim().unwrap() == k - j.len();
            assert_eq!(
                relevant,
                independent,
                "case {case}: support {:?} of degrees {degrees:?}",
                j.indices()
            );
            if relevant {
                assert!(cone.is_strongly_convex());
                assert!(cone.is_simplicial().unwrap());

                let chart = charts::build_chart(&spec, &j).unwrap();
                let coords: Vec<Vec<i64>> =
                    chart.generators.iter().map(|(c, _)| c.clone()).collect();
                let span = LatticeBasis::from_spanning_cols(m.rank(), &coords).unwrap();
                assert_eq!(
                    span.basis(),
                    LatticeBasis::standard(m.rank()).basis(),
                    "case {case}: generators of {:?} do not span the kernel lattice",
                    j.indices()
                );
            }
        }
    }
    finish("7 (relevance vs cone side)", start, Duration::from_secs(60));
}

/// Criterion 8: Hilbert bases against a brute-force oracle. For random
/// pointed 2D/3D cones, the computed basis restricted to the coordinate box
/// of radius 6 equals the box's monoid points that admit no in-box
/// decomposition; additionally, every box point must be a sum of computed
/// generators and no computed generator may absorb another.
#[test]
fn criterion_8_hilbert_basis_oracle() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(88);
    let mut tested = 0;
    while tested < 100 {
        let dim = if rng.gen_bool(0.5) { 2 } else { 3 };
        let n = rng.gen_range(dim..=dim + 2);
        let gens: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..dim).map(|_| rng.gen_range(-4..=4)).collect())
            .collect();
        let cone = cones::cone_from_generators(dim, &gens).unwrap();
        if !cone.is_strongly_convex() || cone.dim().unwrap() == 0 {
            continue;
        }
        tested += 1;

        let halfspaces = cone.halfspaces();
        let hb = hilbert_basis(dim, &halfspaces, &LatticeBasis::standard(dim)).unwrap();

        let in_monoid = |v: &[i64]| -> bool {
            v.iter().any(|&x| x != 0) && halfspaces.iter().all(|h| arith::dot(h, v).unwrap() >= 0)
        };

        // Box enumeration of monoid points, radius 6.
        let mut box_points: Vec<Vec<i64>> = Vec::new();
        let mut v = vec![-6i64; dim];
        loop {
            if in_monoid(&v) {
                box_points.push(v.clone());
            }
            let mut idx = 0;
            while idx < dim {
                v[idx] += 1;
                if v[idx] <= 6 {
                    break;
                }
                v[idx] = -6;
                idx += 1;
            }
            if idx == dim {
                break;
            }
        }

        // Oracle: minimality filter over the box.
        let mut oracle: Vec<Vec<i64>> = Vec::new();
        'points: for p in &box_points {
            for a in &box_points {
                let diff: Vec<i64> = p.iter().zip(a).map(|(&x, &y)| x - y).collect();
                if in_monoid(&diff) && a != p {
                    continue 'points;
                }
            }
            oracle.push(p.clone());
        }
        oracle.sort();

        let mut hb_in_box: Vec<Vec<i64>> = hb
            .elements
            .iter()
            .filter(|e| e.iter().all(|&x| x.abs() <= 6))
            .cloned()
            .collect();
        hb_in_box.sort();
        assert_eq!(hb_in_box, oracle, "cone generators {gens:?}");

        // Exact global minimality of the computed basis.
        for h in &hb.elements {
            assert!(in_monoid(h));
            for c in &hb.elements {
                if c == h {
                    continue;
                }
                let diff: Vec<i64> = h.iter().zip(c).map(|(&x, &y)| x - y).collect();
                assert!(!in_monoid(&diff), "{h:?} reducible by {c:?}");
            }
        }

        // Generation: every box point decomposes over the basis.
        for p in &box_points {
            let mut rest = p.clone();
            'reduce: while rest.iter().any(|&x| x != 0) {
                for c in &hb.elements {
                    let diff: Vec<i64> = rest.iter().zip(c).map(|(&x, &y)| x - y).collect();
                    if diff.iter().all(|&x| x == 0) || in_monoid(&diff) {
                        rest = diff;
                        continue 'reduce;
                    }
                }
                panic!("{p:?} is not generated by {:?}", hb.elements);
            }
        }
    }
    finish("8 (Hilbert basis oracle)", start, Duration::from_secs(60));
}

/// Criterion 9: Smith normal form properties over 500 random matrices up to
/// 5x5 with entries in [-9, 9]: the transform identity, unimodularity, and
/// the divisibility chain.
#[test]
fn criterion_9_snf_properties() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..500 {
        let m = rng.gen_range(1..=5);
        let n = rng.gen_range(1..=5);
        let rows: Vec<Vec<i64>> = (0..m)
            .map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect())
            .collect();
        let a = IntMatrix::from_rows(rows);
        let snf = smith_normal_form(&a).unwrap();

        let uav = snf.u.mul(&a).unwrap().mul(&snf.v).unwrap();
        assert_eq!(uav, snf.d);
        assert_eq!(arith::det_rows(&snf.u.row_vecs()).unwrap().abs(), 1);
        assert_eq!(arith::det_rows(&snf.v.row_vecs()).unwrap().abs(), 1);
        for w in snf.invariant_factors.windows(2) {
            assert!(w[0] > 0 && w[1] % w[0] == 0);
        }
    }
    finish("9 (SNF properties)", start, Duration::from_secs(10));
}
