//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails. Every tolerance is a constant below.

use std::process::ExitCode;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nzagreb::alkane::{octane_table1, parse_alkane, AlkaneError};
use nzagreb::closed_forms::{size_cartesian_nary, FormulaId, GraphStats, Params};
use nzagreb::indices::{first_zagreb, neighbourhood_zagreb, second_zagreb};
use nzagreb::products::{cartesian_n, delta_law_check, product};
use nzagreb::qspr::{degeneracy_table, octane_regression, supplemented_regression, Property};
use nzagreb::verify::{
    hamming_expansion_matches, hamming_size_lists, verify, DiscrepancyReport, PointKey, Status,
    VerifyOptions,
};
use nzagreb::{Graph, ProductKind};

const R_TOLERANCE: f64 = 0.005;
const R_SQUARED_TOLERANCE: f64 = 0.01;
const ACENTRIC_R: f64 = -0.99456;
const ENTROPY_R: f64 = -0.95261;
const R_SQUARED_ACENTRIC_PAIRING: f64 = 0.98915;
const R_SQUARED_ENTROPY_PAIRING: f64 = 0.90746;
const TABLE2: [&str; 8] = [
    "3.000", "1.286", "2.571", "1.286", "1.200", "1.125", "1.059", "1.000",
];
const IDENTITY_GRAPHS: usize = 500;
const IDENTITY_MAX_ORDER: usize = 10;
const IDENTITY_SEED: u64 = 20_240_611;
const HAMMING_MAX_PRODUCT: usize = 10_000;
/// Hamming graphs up to this order and size are built and checked by brute
/// force; larger ones are checked through the regular-graph identity only.
const HAMMING_BRUTE_FORCE_ORDER: usize = 1024;
const HAMMING_BRUTE_FORCE_EDGES: usize = 50_000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn grid(m: Option<(usize, usize)>, n: (usize, usize)) -> VerifyOptions {
    VerifyOptions {
        m: m.map(|(a, b)| a..=b),
        n: Some(n.0..=n.1),
        ..Default::default()
    }
}

/// The report must compare exactly `expected` points and agree on all of them.
fn all_exact(report: &DiscrepancyReport, expected: usize) -> Outcome {
    if report.status != Status::Consistent || report.compared() != expected || report.skipped() > 0
    {
        return Err(format!(
            "{}: {} with {} of {expected} points compared, {} nonzero",
            report.formula,
            report.status,
            report.compared(),
            report.nonzero_deltas()
        ));
    }
    Ok(format!("{} {expected}/{expected}", report.formula))
}

fn criterion_1() -> Outcome {
    let rows = octane_table1();
    let mut bad = Vec::new();
    for r in &rows {
        let g = parse_alkane(r.name).map_err(|e| format!("{}: {e}", r.name))?;
        let mn = neighbourhood_zagreb(&g);
        if mn != BigInt::from(r.mn_reference) {
            bad.push(format!("{} gives {mn}, table {}", r.name, r.mn_reference));
        }
    }
    if bad.is_empty() && rows.len() == 17 {
        Ok(format!("{}/17 M_N values exact", rows.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_2() -> Outcome {
    let acentric = octane_regression(Property::Acentric);
    let entropy = octane_regression(Property::Entropy);
    let close = |x: f64, target: f64, tol: f64| (x - target).abs() <= tol;
    let detail = format!(
        "acentric r={:.5} (target {ACENTRIC_R}) r2={:.5} (target {R_SQUARED_ACENTRIC_PAIRING}); \
         entropy r={:.5} (target {ENTROPY_R}) r2={:.5} (target {R_SQUARED_ENTROPY_PAIRING}); n={}",
        acentric.r, acentric.r_squared, entropy.r, entropy.r_squared, acentric.n
    );
    let supplement = format!(
        "[18-row sample incl. 2,2,4-trimethylpentane: acentric r={:.5}, entropy r={:.5}]",
        supplemented_regression(Property::Acentric).r,
        supplemented_regression(Property::Entropy).r
    );
    let ok = close(acentric.r, ACENTRIC_R, R_TOLERANCE)
        && close(entropy.r, ENTROPY_R, R_TOLERANCE)
        && close(
            acentric.r_squared,
            R_SQUARED_ACENTRIC_PAIRING,
            R_SQUARED_TOLERANCE,
        )
        && close(
            entropy.r_squared,
            R_SQUARED_ENTROPY_PAIRING,
            R_SQUARED_TOLERANCE,
        );
    if ok {
        Ok(format!("{detail} {supplement}"))
    } else {
        Err(format!("{detail} {supplement}"))
    }
}

fn criterion_3() -> Outcome {
    let table = degeneracy_table();
    let got: Vec<String> = table.iter().map(|r| r.render()).collect();
    let rows: Vec<String> = table
        .iter()
        .zip(TABLE2)
        .map(|(r, want)| format!("{}={} (t={}, want {want})", r.index, r.render(), r.distinct))
        .collect();
    if got == TABLE2 {
        Ok(rows.join(" "))
    } else {
        Err(rows.join(" "))
    }
}

fn criterion_4() -> Outcome {
    let opts = VerifyOptions {
        seed: 42,
        trials: 200,
        max_factor_order: 8,
        ..Default::default()
    };
    let mut parts = Vec::new();
    for id in [FormulaId::Prop1, FormulaId::Prop3] {
        parts.push(all_exact(&verify(id, &opts), 200)?);
    }
    let tensor = [
        FormulaId::ExTensorPP,
        FormulaId::ExTensorCC,
        FormulaId::ExTensorKK,
        FormulaId::ExTensorPC,
        FormulaId::ExTensorPK,
        FormulaId::ExTensorCK,
    ];
    for id in tensor {
        let report = verify(id, &grid(Some((3, 8)), (3, 8)));
        let (min_m, min_n) = id.stated_minimum();
        let expected = (min_m.max(3)..=8).count() * (min_n.max(3)..=8).count();
        parts.push(all_exact(&report, expected)?);
    }
    Ok(parts.join(", "))
}

fn criterion_5() -> Outcome {
    let checks = [
        (FormulaId::ExNanotorus, grid(Some((3, 10)), (3, 10)), 64),
        (FormulaId::ExPrism, grid(None, (3, 12)), 10),
        (FormulaId::ExNanotube, grid(Some((3, 10)), (4, 10)), 56),
        (FormulaId::ExHypercube, grid(None, (1, 6)), 6),
        (FormulaId::ExRook, grid(Some((2, 6)), (2, 6)), 25),
    ];
    let mut parts = Vec::new();
    for (id, opts, expected) in checks {
        parts.push(all_exact(&verify(id, &opts), expected)?);
    }

    let lists = hamming_size_lists(HAMMING_MAX_PRODUCT);
    let mut brute = Vec::new();
    for sizes in &lists {
        if !hamming_expansion_matches(sizes) {
            return Err(format!(
                "Hamming expansion differs from (prod n_i)(sum(n_i - 1))^4 at {sizes:?}"
            ));
        }
        let order: usize = sizes.iter().product();
        let degree: usize = sizes.iter().map(|n| n - 1).sum();
        if order <= HAMMING_BRUTE_FORCE_ORDER && order * degree / 2 <= HAMMING_BRUTE_FORCE_EDGES {
            brute.push(sizes.clone());
        }
    }
    let count = brute.len();
    let report = verify(
        FormulaId::Hamming,
        &VerifyOptions {
            sizes: Some(brute),
            ..Default::default()
        },
    );
    all_exact(&report, count)?;
    parts.push(format!(
        "HAMMING expansion {n}/{n} lists (product <= {HAMMING_MAX_PRODUCT}), {count} built by brute force",
        n = lists.len()
    ));
    Ok(parts.join(", "))
}

fn point_values(report: &DiscrepancyReport, params: Params) -> Option<(BigInt, BigInt)> {
    let p = report
        .points
        .iter()
        .find(|p| p.key == PointKey::Params(params.clone()))?;
    Some((p.closed.clone(), p.oracle.clone()?))
}

fn criterion_6() -> Outcome {
    let expect = |id: FormulaId,
                  opts: VerifyOptions,
                  params: Params,
                  printed: i64,
                  oracle: i64|
     -> Outcome {
        let report = verify(id, &opts);
        let got =
            point_values(&report, params.clone()).ok_or(format!("{id}: no point {params}"))?;
        if report.status != Status::Erratum || got != (BigInt::from(printed), BigInt::from(oracle))
        {
            return Err(format!(
                "{id} {params}: {} printed {} oracle {}",
                report.status, got.0, got.1
            ));
        }
        if verify(id, &opts) != report {
            return Err(format!("{id}: report differs between runs"));
        }
        Ok(format!(
            "{id} {params} oracle {oracle} vs printed {printed}"
        ))
    };
    let mut parts = vec![
        expect(
            FormulaId::ExLadder,
            grid(None, (3, 3)),
            Params::Single(3),
            354,
            356,
        )?,
        expect(
            FormulaId::ExGrid,
            grid(Some((4, 4)), (4, 4)),
            Params::Pair { m: 4, n: 4 },
            1832,
            1576,
        )?,
    ];

    // C_3[P_2]: the printed wreath formula evaluated on the factors.
    let report = verify(FormulaId::ExClosedFence, &grid(None, (3, 3)));
    let p = report
        .points
        .first()
        .ok_or("EX_CLOSED_FENCE: no point at n=3")?;
    let wreath = (p.proposition.clone(), p.oracle.clone());
    if wreath != (Some(BigInt::from(2594)), Some(BigInt::from(3750))) {
        return Err(format!("PROP4_PRINTED on C_3[P_2]: {wreath:?}"));
    }
    let prop4 = verify(FormulaId::Prop4Printed, &VerifyOptions::default());
    if prop4.status != Status::Erratum {
        return Err(format!("PROP4_PRINTED: {}", prop4.status));
    }
    parts.push("PROP4_PRINTED C_3[P_2] oracle 3750 vs printed 2594".into());

    for id in [FormulaId::ExFence, FormulaId::ExClosedFence] {
        let opts = grid(None, (4, 8));
        let report = verify(id, &opts);
        if report.status != Status::Erratum
            || report.nonzero_deltas() != 5
            || report.compared() != 5
        {
            return Err(format!(
                "{id}: {} nonzero of {} on n in [4,8]",
                report.nonzero_deltas(),
                report.compared()
            ));
        }
        if verify(id, &opts) != report {
            return Err(format!("{id}: report differs between runs"));
        }
        parts.push(format!("{id} 5/5 nonzero on n in [4,8]"));
    }
    Ok(parts.join(", "))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(IDENTITY_SEED);
    let graphs: Vec<Graph> = (0..IDENTITY_GRAPHS)
        .map(|_| {
            let n = rng.gen_range(1..=IDENTITY_MAX_ORDER);
            let p: f64 = rng.gen();
            Graph::random(n, p, rng.gen()).expect("order >= 1")
        })
        .collect();
    let mut failures = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let deltas = g.neighbor_degree_sums();
        if BigInt::from(deltas.iter().sum::<u64>()) != first_zagreb(g) {
            failures.push(format!("graph {i}: sum of delta != M1"));
        }
        let weighted: u64 = g.degrees().iter().zip(&deltas).map(|(d, s)| d * s).sum();
        if BigInt::from(weighted) != 2 * second_zagreb(g) {
            failures.push(format!("graph {i}: sum of deg*delta != 2 M2"));
        }
        let h = &graphs[(i + 1) % graphs.len()];
        for kind in ProductKind::ALL {
            if !delta_law_check(g, h, kind) {
                failures.push(format!("graphs {i},{}: {kind} delta law", i + 1));
            }
        }
        let cart = product(g, h, ProductKind::Cartesian).expect("small");
        if cart.size() != g.order() * h.size() + h.order() * g.size() {
            failures.push(format!("graphs {i},{}: Cartesian edge count", i + 1));
        }
        let triple = [g.clone(), h.clone(), graphs[(i + 2) % graphs.len()].clone()];
        let stats: Vec<GraphStats> = triple.iter().map(GraphStats::of).collect();
        if size_cartesian_nary(&stats) != BigInt::from(cartesian_n(&triple).expect("small").size())
        {
            failures.push(format!("graphs {i}..{}: n-ary edge count", i + 2));
        }
    }
    if failures.is_empty() {
        Ok(format!(
            "{IDENTITY_GRAPHS} graphs (n <= {IDENTITY_MAX_ORDER}), 0 failures"
        ))
    } else {
        Err(format!(
            "{} failures, first: {}",
            failures.len(),
            failures[0]
        ))
    }
}

fn criterion_8() -> Outcome {
    for r in octane_table1() {
        parse_alkane(r.name).map_err(|e| format!("{}: {e}", r.name))?;
    }
    let hexane = parse_alkane("5-methylpentane").map_err(|e| format!("5-methylpentane: {e}"))?;
    if hexane != parse_alkane("n-hexane").expect("grammatical") {
        return Err("5-methylpentane is not the hexane chain".into());
    }
    match parse_alkane("2,2,2-trimethylbutane") {
        Err(AlkaneError::ValenceExceeded {
            locant: 2,
            degree: 5,
        }) => {}
        other => return Err(format!("2,2,2-trimethylbutane: {other:?}")),
    }
    match parse_alkane("2,2,2-trimethylpropane") {
        Err(AlkaneError::Syntax { .. }) => {}
        other => return Err(format!("2,2,2-trimethylpropane: {other:?}")),
    }
    let malformed = [
        ("", 0),
        ("2-methyl", 8),
        ("2--methylhexane", 2),
        ("2-methylhexanes", 14),
        ("x-octane", 0),
        ("2,-methylhexane", 2),
    ];
    for (text, position) in malformed {
        match parse_alkane(text) {
            Err(AlkaneError::Syntax { position: p, .. }) if p == position => {}
            other => {
                return Err(format!(
                    "{text:?}: {other:?}, expected syntax error at {position}"
                ))
            }
        }
    }
    Ok("17/17 table names, 5-methylpentane accepted, valence and syntax errors positioned".into())
}

/// Runs the command line exactly as the binary does, twice, each time
/// writing the CSV to a fresh file.
fn criterion_9() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for run in 0..2 {
        let path = dir.path().join(format!("out{run}.csv"));
        let path = path.to_str().ok_or("temporary path is not UTF-8")?;
        let args = [
            "nzagreb",
            "verify",
            "--formula",
            "all",
            "--seed",
            "42",
            "--trials",
            "200",
            "--csv",
            path,
        ];
        let out = nzagreb_cli::run(args);
        if out.code != 0 {
            return Err(format!(
                "run {run} exited with {}: {}",
                out.code, out.stderr
            ));
        }
        outputs.push(std::fs::read(path).map_err(|e| e.to_string())?);
    }
    if outputs[0] == outputs[1] && !outputs[0].is_empty() {
        Ok(format!("two runs, {} identical bytes", outputs[0].len()))
    } else {
        Err("CSV output differs between runs".into())
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("octane M_N golden values", criterion_1),
        ("QSPR reproduction on table rows", criterion_2),
        ("mean isomer degeneracy table", criterion_3),
        ("Cartesian and tensor closed forms vs oracle", criterion_4),
        ("Consistent family formulas", criterion_5),
        ("Errata detection", criterion_6),
        ("degree-sum and product identities", criterion_7),
        ("Parser robustness", criterion_8),
        ("CSV determinism", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS  criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
