//! Exit criteria. Prints one PASS/FAIL line per criterion and fails the
//! run if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use circulant_total::construct::TYPE_II_ORDERS;
use circulant_total::solver::SymmetryLevel;
use circulant_total::{
    colour_5p9q, colour_sporadic, construct, prove_type2, search_total_colouring, CirculantGraph, SearchConfig,
    SearchStatus, SolveOptions, TotalColouring,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn compact(c: &TotalColouring) -> String {
    c.to_compact().unwrap()
}

fn constructive_coverage() -> Outcome {
    let start = Instant::now();
    let mut coloured = 0;
    for n in 7..=500 {
        if TYPE_II_ORDERS.contains(&n) {
            continue;
        }
        let c = construct(n)
            .map_err(|e| format!("n={n}: {e}"))?
            .into_colouring()
            .ok_or(format!("n={n}: no colouring"))?;
        ensure(c.k() == 5, format!("n={n}: k={}", c.k()))?;
        let report = c.verify(&CirculantGraph::c13(n).unwrap()).unwrap();
        ensure(report.is_proper(), format!("n={n}: {} conflicts", report.len()))?;
        coloured += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), format!("took {elapsed:?}"))?;
    Ok(format!("{coloured} orders coloured and verified in {elapsed:?}"))
}

fn golden_sequences() -> Outcome {
    let blocks = [
        (9, (0, 1), "212534121\n453453453\n121212534\n"),
        (10, (2, 0), "2435124351\n1212312123\n4553445534\n"),
        (14, (1, 1), "24351212534121\n12123453453453\n45534121212534\n"),
    ];
    for (n, (p, q), want) in blocks {
        ensure(compact(&colour_5p9q(p, q).unwrap()) == want, format!("block n={n}"))?;
        ensure(
            compact(construct(n).unwrap().colouring().unwrap()) == want,
            format!("construct n={n}"),
        )?;
    }
    let sporadic = [
        (11, "25354543431\n12121212123\n43435354545\n"),
        (16, "2453534242353524\n1212121314141415\n4345453525232353\n"),
        (
            21,
            "234345453512345123451\n121212121231213451323\n453534345454532214545\n",
        ),
        (
            22,
            "2545353434545353124341\n1212121212121212312124\n3434545353434545453535\n",
        ),
        (
            26,
            "24535343454535141252313421\n12121212121212323434545145\n43454535343454515121232353\n",
        ),
        (
            31,
            "2343454535123451234512345123451\n1212121212312134513231213451323\n4535343454545322145454532214545\n",
        ),
    ];
    for (n, want) in sporadic {
        ensure(compact(&colour_sporadic(n).unwrap()) == want, format!("sporadic n={n}"))?;
        ensure(
            compact(construct(n).unwrap().colouring().unwrap()) == want,
            format!("construct n={n}"),
        )?;
    }
    Ok("9 orders byte-identical".into())
}

fn type_two_certificates() -> Outcome {
    let opts = SolveOptions {
        worker_count: 1,
        ..SolveOptions::default()
    };
    let mut lines = Vec::new();
    for n in TYPE_II_ORDERS {
        let budget = if n <= 12 {
            Duration::from_secs(60)
        } else {
            Duration::from_secs(3600)
        };
        let start = Instant::now();
        let proof = prove_type2(n, &opts).map_err(|e| format!("n={n}: {e}"))?;
        let elapsed = start.elapsed();
        let five = &proof.without_five;
        ensure(
            !five.config.parity_pruning,
            format!("n={n}: parity pruning in certificate"),
        )?;
        ensure(
            five.status == SearchStatus::ExhaustedNoSolution,
            format!("n={n}: k=5 status {:?} after {} nodes", five.status, five.nodes_visited),
        )?;
        ensure(
            proof.with_six.status == SearchStatus::Found,
            format!("n={n}: k=6 status {:?}", proof.with_six.status),
        )?;
        proof.with_six.check_static().map_err(|e| format!("n={n}: {e}"))?;
        ensure(elapsed < budget, format!("n={n}: {elapsed:?} over budget {budget:?}"))?;
        lines.push(format!(
            "n={n}: k5 exhausted ({} nodes), k6 found, {elapsed:?}",
            five.nodes_visited
        ));
    }
    Ok(lines.join("; "))
}

fn theorem_table() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_circulant-total"))
        .args(["table", "60"])
        .env_remove("CIRCULANT_NODE_LIMIT")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), format!("exit {:?}", out.status.code()))?;
    let text = String::from_utf8(out.stdout).unwrap();
    let mut rows = 0;
    for line in text.lines().skip(1) {
        let fields: Vec<&str> = line.split('\t').collect();
        let n: usize = fields[0].parse().map_err(|_| format!("bad row {line:?}"))?;
        let want = if TYPE_II_ORDERS.contains(&n) { "6" } else { "5" };
        ensure(fields[1] == want, format!("n={n}: got {}, want {want}", fields[1]))?;
        rows += 1;
    }
    ensure(rows == 54, format!("{rows} rows"))?;
    Ok("54 rows match".into())
}

fn independence_numbers() -> Outcome {
    for (n, want) in [(7, 2), (13, 5), (17, 7), (8, 4)] {
        let start = Instant::now();
        let got = CirculantGraph::c13(n).unwrap().independence_number().unwrap();
        let elapsed = start.elapsed();
        ensure(got == want, format!("n={n}: {got} != {want}"))?;
        ensure(elapsed < Duration::from_secs(1), format!("n={n}: {elapsed:?}"))?;
    }
    Ok("alpha = 2, 5, 7, 4".into())
}

fn k44_identification() -> Outcome {
    ensure(
        CirculantGraph::c13(8).unwrap().is_complete_bipartite_4_4(),
        "n=8 not K44",
    )?;
    for n in [7, 10, 11] {
        ensure(
            !CirculantGraph::c13(n).unwrap().is_complete_bipartite_4_4(),
            format!("n={n} reported K44"),
        )?;
    }
    Ok("n=8 only".into())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut instances = 0;
    for n in 7..=10 {
        let g = CirculantGraph::c13(n).unwrap();
        for k in [5, 6] {
            let run = |level| {
                let cfg = SearchConfig {
                    k,
                    symmetry_level: level,
                    node_limit: 0,
                    ..SearchConfig::default()
                };
                search_total_colouring(&g, &cfg).unwrap().status
            };
            let plain = run(SymmetryLevel::None);
            let full = run(SymmetryLevel::ColourPermPlusRotation);
            let perm = run(SymmetryLevel::ColourPerm);
            ensure(
                plain == full && plain == perm,
                format!("n={n} k={k}: {plain:?} / {perm:?} / {full:?}"),
            )?;
            instances += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(600), format!("took {elapsed:?}"))?;
    Ok(format!("{instances} instances agree in {elapsed:?}"))
}

fn diagnostic_consistency() -> Outcome {
    let c11 = colour_sporadic(11).unwrap();
    let c22 = colour_sporadic(22).unwrap();
    ensure(
        c11.parity_condition() && c22.parity_condition(),
        "parity condition false",
    )?;
    ensure(
        c11.colour_class_sizes() == [1, 1, 3, 3, 3],
        format!("C11 sizes {:?}", c11.colour_class_sizes()),
    )?;
    ensure(
        c22.colour_class_sizes() == [2, 2, 6, 6, 6],
        format!("C22 sizes {:?}", c22.colour_class_sizes()),
    )?;

    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut checked = 0;
    while checked < 100 {
        let n = rng.gen_range(7..=120);
        let Some(base) = construct(n).unwrap().into_colouring() else {
            continue;
        };
        let g = CirculantGraph::c13(n).unwrap();
        let mut perm = [1u8, 2, 3, 4, 5];
        perm.shuffle(&mut rng);
        let mut c = base.rotated(rng.gen_range(0..n)).permuted(&perm).unwrap();
        if rng.gen_bool(0.5) {
            c = c.reflected(&g).unwrap();
        }
        ensure(
            c.verify(&g).unwrap().is_proper(),
            format!("n={n}: random image not proper"),
        )?;
        for j in 1..=5 {
            if let Ok(gaps) = c.class_gap_multiset(j) {
                ensure(
                    gaps.iter().sum::<usize>() == n,
                    format!("n={n} colour {j}: gaps {gaps:?}"),
                )?;
            }
        }
        checked += 1;
    }
    Ok("paper diagnostics match; 100 random colourings have gap sums n".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1 constructive coverage 7..=500", constructive_coverage),
        ("AC2 golden sequences", golden_sequences),
        ("AC3 Type II certificates", type_two_certificates),
        ("AC4 theorem table to 60", theorem_table),
        ("AC5 independence numbers", independence_numbers),
        ("AC6 K4,4 identification", k44_identification),
        ("AC7 symmetry oracle equivalence", oracle_equivalence),
        ("AC8 diagnostic consistency", diagnostic_consistency),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
