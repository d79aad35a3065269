//! Acceptance suite: every exit criterion of the library, each as one test
//! that prints a pass line. Run with `cargo test --test acceptance` (add
//! `-- --nocapture` to see the lines).

use std::process::{Command, Output};
use std::time::Instant;

use voronoi_fans::extension::{analytic_antisym_check, analytic_s, AffineLoop};
use voronoi_fans::fan::{fan_oracle_check, ops_limit, OneParamSubgroup};
use voronoi_fans::lattice::{GramForm, LatticeVector, RationalVector};
use voronoi_fans::rng::SplitMix64;
use voronoi_fans::scalar::rat;
use voronoi_fans::semigroup::{orbit_polytope_normality, saturation_check, SaturationOutcome};
use voronoi_fans::suites;
use voronoi_fans::symbols::{cc_symbol, tame_symbol, LaurentSeries, TestRing};
use voronoi_fans::tilings::{covering_pad, enumerate_cells, Window};
use voronoi_fans::Int;

fn vfan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vfan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn pass(n: u32, what: &str) {
    println!("ACCEPTANCE {n} ({what}): PASS");
}

#[test]
fn acceptance_01_hexagonal_tiling() {
    let start = Instant::now();
    let doc = stdout_json(&vfan(&[
        "tiling",
        "--gram",
        "[[2,-1],[-1,2]]",
        "--window",
        "-2..2,-2..2",
    ]));
    let cells = doc["cells"].as_array().expect("cells");
    let origin_cell = cells
        .iter()
        .find(|c| c["delaunay"]["vertices"] == serde_json::json!([[0, 0]]))
        .expect("origin point cell present");
    let expect = serde_json::json!([
        ["-2/3", "-1/3"],
        ["-1/3", "-2/3"],
        ["-1/3", "1/3"],
        ["1/3", "-1/3"],
        ["1/3", "2/3"],
        ["2/3", "1/3"]
    ]);
    assert_eq!(
        origin_cell["voronoi"]["vertices"], expect,
        "hexagon vertices exact"
    );
    assert_eq!(origin_cell["voronoi"]["dim"], 2);

    let classes = doc["classes"].as_array().expect("classes");
    let triangles: Vec<&serde_json::Value> = classes.iter().filter(|c| c["dim"] == 2).collect();
    assert_eq!(triangles.len(), 2, "two triangle classes");
    for t in &triangles {
        assert_eq!(t["representative"].as_array().expect("vertices").len(), 3);
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "runtime {elapsed:?} exceeds 5 s"
    );
    pass(1, "hexagonal example");
}

#[test]
fn acceptance_02_duality_dimensions() {
    let mut rng = SplitMix64::new(2026);
    for case in 0..50 {
        let b = suites::random_gram(&mut rng, 3, 6);
        let r = b.rank();
        let pad = covering_pad(&b).expect("valid form");
        let window = Window::from_i32(&vec![(-1, 1); r]).padded(&pad);
        let complex = enumerate_cells(&b, &window).expect("window has cells");
        assert!(!complex.pairs.is_empty());
        for (sigma, face) in &complex.pairs {
            assert_eq!(
                sigma.dim() + face.dim,
                r,
                "case {case}: dim {} + {} != {r}",
                sigma.dim(),
                face.dim
            );
        }
    }
    pass(2, "duality proposition on 50 random forms");
}

#[test]
fn acceptance_03_kernel_divisors() {
    let doc = stdout_json(&vfan(&["kernel", "--gram", "[[2,-1],[-1,2]]"]));
    assert_eq!(doc["divisors"], serde_json::json!([3]));
    assert_eq!(doc["order"], 3);
    let doc = stdout_json(&vfan(&["kernel", "--gram", "[[1,0,0],[0,1,0],[0,0,1]]"]));
    assert_eq!(doc["divisors"], serde_json::json!([]));
    let doc = stdout_json(&vfan(&["kernel", "--gram", "[[2,0],[0,4]]"]));
    assert_eq!(doc["divisors"], serde_json::json!([2, 4]));
    pass(3, "kernel of the isogeny");
}

#[test]
fn acceptance_04_commutator_cocycle_lift() {
    // The ext suite runs 1000 commutator cases (r <= 3), 1000 cocycle
    // identity triples, and 500 lift-constraint pairs per variant.
    let report = suites::ext_suite(41);
    assert!(report.ok(), "failures: {:?}", report.failures);
    let via_cli = stdout_json(&vfan(&["check", "--suite", "ext", "--seed", "41"]));
    assert_eq!(via_cli["ok"], true);
    pass(4, "commutator laws, cocycle identity, lift constraint");
}

#[test]
fn acceptance_05_limit_existence() {
    let mut rng = SplitMix64::new(505);
    for case in 0..1000 {
        let b = suites::random_gram(&mut rng, 3, 6);
        let n = rng.range_i64(-3, 3);
        let lambda = LatticeVector::<Int>(
            (0..b.rank())
                .map(|_| Int::from(rng.range_i64(-5, 5) as i32))
                .collect(),
        );
        let sub = OneParamSubgroup::new(Int::from(n as i32), lambda);
        let limit = ops_limit(&b, &sub).expect("valid input");
        assert_eq!(
            limit.is_some(),
            n > 0,
            "case {case}: existence iff n > 0 (n = {n})"
        );
    }
    pass(5, "limit existence iff n > 0");
}

#[test]
fn acceptance_06_fan_limit_equivalence() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(606);
    let mut forms: Vec<GramForm<Int>> = vec![
        GramForm::from_i32(&[&[1]]).expect("valid"),
        GramForm::from_i32(&[&[2, -1], &[-1, 2]]).expect("valid"),
    ];
    for _ in 0..10 {
        forms.push(suites::random_gram_rank2(&mut rng, 6));
    }
    for (fi, b) in forms.iter().enumerate() {
        let r = b.rank();
        let window = Window::from_i32(&vec![(-2, 2); r]);
        let samples: Vec<OneParamSubgroup<Int>> = (0..500)
            .map(|_| {
                let n = rng.range_i64(1, 3);
                let lambda = LatticeVector(
                    (0..r)
                        .map(|_| Int::from(rng.range_i64(-2 * n, 2 * n) as i32))
                        .collect(),
                );
                OneParamSubgroup::new(Int::from(n as i32), lambda)
            })
            .collect();
        let report = fan_oracle_check(b, &window, &samples).expect("valid samples");
        assert!(report.ok(), "form {fi} mismatches: {:?}", report.mismatches);
        assert_eq!(report.samples, 500);
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "runtime {elapsed:?} exceeds 60 s"
    );
    pass(6, "main theorem at desk scale");
}

#[test]
fn acceptance_07_rank_one_fan_golden() {
    let out = vfan(&["fan", "--gram", "[[1]]", "--window", "-2..2"]);
    assert!(out.status.success());
    let golden = include_bytes!("golden/fan_rank1.json");
    assert_eq!(
        out.stdout.as_slice(),
        golden.as_slice(),
        "byte-stable golden JSON"
    );

    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json");
    let cones = doc["cones"].as_array().expect("cones");
    let rays: Vec<&serde_json::Value> = cones.iter().filter(|c| c["dim"] == 1).collect();
    let got: Vec<serde_json::Value> = rays.iter().map(|c| c["generators"].clone()).collect();
    let expect: Vec<serde_json::Value> = [-2i64, -1, 0, 1]
        .iter()
        .map(|k| serde_json::json!([[2, 2 * k + 1]]))
        .collect();
    assert_eq!(got, expect, "rays are exactly (2, 2k+1), k = -2..1");
    for k in [-1i64, 0, 1] {
        let want = serde_json::json!([[2, 2 * k - 1], [2, 2 * k + 1]]);
        assert!(
            cones
                .iter()
                .any(|c| c["dim"] == 2 && c["generators"] == want),
            "maximal cone between rays {} and {}",
            2 * k - 1,
            2 * k + 1
        );
    }
    pass(7, "rank-one fan golden file");
}

#[test]
fn acceptance_08_symbols() {
    let qring = TestRing::<Int>::rational();
    let z = LaurentSeries::z_pow(&qring, 1, 8);
    assert_eq!(tame_symbol(&qring, &z, &z).expect("units"), rat(-1, 1));

    let ring = TestRing::<Int>::new(vec![2], None);
    let b = ring.var(0);
    let a = rat::<Int>(2, 7);
    let f = LaurentSeries::new(
        &ring,
        vec![(0, ring.one()), (1, ring.constant(a.clone()).neg())],
        8,
    );
    let g = LaurentSeries::new(&ring, vec![(0, ring.one()), (-1, b.neg())], 8);
    let sym = cc_symbol(&ring, &f, &g).expect("units");
    assert_eq!(
        sym,
        ring.one().sub(&ring, &b.scale(&a)),
        "cc(1-az, 1-bz^-1) = 1-ab"
    );

    // 200-case randomized suites: factorization round trip, antisymmetry,
    // bimultiplicativity, specialization, Steinberg.
    let report = suites::symbols_suite(88);
    assert!(report.ok(), "failures: {:?}", report.failures);
    pass(8, "tame and Contou-Carrere symbols");
}

#[test]
fn acceptance_09_analytic_matches_algebraic() {
    let mut rng = SplitMix64::new(909);
    let forms: Vec<GramForm<Int>> = (0..5)
        .map(|_| suites::random_gram(&mut rng, 3, 6))
        .collect();
    for case in 0..500 {
        let b = &forms[case % forms.len()];
        let r = b.rank();
        let mk = |rng: &mut SplitMix64| AffineLoop::<Int> {
            base: RationalVector(
                (0..r)
                    .map(|_| {
                        let den = rng.range_i64(1, 8);
                        num_rational::Ratio::new(
                            Int::from(rng.range_i64(-12, 12) as i32),
                            Int::from(den as i32),
                        )
                    })
                    .collect(),
            ),
            winding: LatticeVector(
                (0..r)
                    .map(|_| Int::from(rng.range_i64(-4, 4) as i32))
                    .collect(),
            ),
        };
        let f = mk(&mut rng);
        let g = mk(&mut rng);
        assert!(
            analytic_antisym_check(b, &f, &g).expect("dims"),
            "case {case}"
        );
        let double = analytic_s(b, &f, &g).expect("dims") - analytic_s(b, &g, &f).expect("dims");
        assert!(
            num_traits::Zero::is_zero(&double.pi),
            "case {case}: pi component"
        );
    }
    pass(9, "analytic double cocycle matches the algebraic one");
}

#[test]
fn acceptance_10_saturation() {
    let two_three = vec![vec![Int::from(2)], vec![Int::from(3)]];
    assert_eq!(
        saturation_check(&two_three, 6).expect("valid"),
        SaturationOutcome::Witness(vec![Int::from(1)])
    );

    let chars = vec![vec![Int::from(0)], vec![Int::from(1)], vec![Int::from(3)]];
    let report = orbit_polytope_normality(&chars, 6).expect("valid");
    assert!(!report.normal);
    let at_three = report
        .vertex_reports
        .iter()
        .find(|v| v.vertex == vec![Int::from(3)])
        .expect("vertex 3 reported");
    assert_eq!(
        at_three.outcome,
        SaturationOutcome::Witness(vec![Int::from(-1)])
    );

    // Weights of the half-integer grading for B = [[1]] with multiplicity
    // one at rotation indices 0 and 1, doubled to integer coordinates
    // (2 * level, character) and truncated at level 3.
    let mut gens: Vec<Vec<Int>> = Vec::new();
    for mu in -2i32..=2 {
        for j in 0..=1i32 {
            let doubled_level = mu * mu + 2 * j;
            if doubled_level <= 6 {
                gens.push(vec![Int::from(doubled_level), Int::from(mu)]);
            }
        }
    }
    assert_eq!(
        saturation_check(&gens, 6).expect("valid"),
        SaturationOutcome::Saturated
    );
    pass(10, "saturation and normality witnesses");
}
