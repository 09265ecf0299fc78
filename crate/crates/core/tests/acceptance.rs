//! Acceptance criteria: one PASS/FAIL line per criterion. Exits nonzero if
//! any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use torusinv::verify::{run, Cell, Check, Grid};

const ALL_Q: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];
const TRUNC_Q: [u64; 6] = [2, 4, 3, 9, 5, 25];

struct Criterion {
    id: u32,
    title: &'static str,
    runs: Vec<(Check, Grid)>,
}

fn main_grid() -> Grid {
    Grid::new(4, &ALL_Q).with_type_a(5)
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            title: "orbit q-characters = fixed weights = fixed cosets",
            runs: vec![(Check::Th1, main_grid())],
        },
        Criterion {
            id: 2,
            title: "element-level q-character oracle",
            runs: vec![(Check::Elements, main_grid().with_max_enum(1_000_000))],
        },
        Criterion {
            id: 3,
            title: "unipotent part of orbit characters = induced Steinberg",
            runs: vec![(Check::Th2, main_grid()), (Check::Dd3, main_grid())],
        },
        Criterion {
            id: 4,
            title: "torus orbits on nonzero vectors",
            runs: vec![
                (Check::Pm1, Grid::new(3, &[2, 3, 4, 5]).with_max_enum(1_000_000)),
                (Check::Pm1, Grid::new(4, &[2, 3]).with_max_enum(1_000_000)),
            ],
        },
        Criterion {
            id: 5,
            title: "Steinberg pairing with the vector orbit character",
            runs: vec![(Check::Pp3, Grid::new(6, &ALL_Q))],
        },
        Criterion {
            id: 6,
            title: "sum of induced trivial characters over j",
            runs: vec![(Check::Pm2, Grid::new(8, &[2]))],
        },
        Criterion {
            id: 7,
            title: "nondivisibility with exactly the k = n exceptions",
            runs: vec![(Check::Au1, Grid::new(6, &ALL_Q))],
        },
        Criterion {
            id: 8,
            title: "truncated polynomial weights and digit decompositions",
            runs: vec![
                (Check::D1d, Grid::new(4, &TRUNC_Q)),
                (Check::Zw1, Grid::new(4, &TRUNC_Q)),
                (Check::Zz1, Grid::new(4, &TRUNC_Q)),
            ],
        },
        Criterion {
            id: 9,
            title: "trivial monomial weight counts on tori",
            runs: vec![(Check::M1m, Grid::new(4, &TRUNC_Q))],
        },
        Criterion {
            id: 10,
            title: "decomposition for (q-1)λ_i with d0 from n | i(p-1)",
            runs: vec![(Check::Th5, Grid::new(5, &TRUNC_Q))],
        },
        Criterion {
            id: 11,
            title: "exterior power fixed dimensions over F_2",
            runs: vec![(Check::ExtPower, Grid::new(6, &[2]))],
        },
        Criterion {
            id: 12,
            title: "Steinberg self-pairing and pairing with induced Steinberg",
            runs: vec![(Check::Steinberg, main_grid())],
        },
    ]
}

fn main() -> ExitCode {
    let mut all_pass = true;
    for c in criteria() {
        let start = Instant::now();
        let mut cells: Vec<Cell> = Vec::new();
        let mut error = None;
        for (check, grid) in &c.runs {
            match run(*check, grid) {
                Ok(mut out) => cells.append(&mut out),
                Err(e) => {
                    error = Some(format!("{check}: {e}"));
                    break;
                }
            }
        }
        let failures: Vec<&Cell> = cells.iter().filter(|cell| !cell.pass).collect();
        let pass = error.is_none() && failures.is_empty() && !cells.is_empty();
        all_pass &= pass;
        println!(
            "criterion {:>2}: {} - {} ({} cells, {} failed, {:.2?})",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.title,
            cells.len(),
            failures.len(),
            start.elapsed()
        );
        if let Some(e) = error {
            println!("    error: {e}");
        }
        for cell in failures.iter().take(10) {
            println!("    {}: {} != {}", cell.key, cell.lhs, cell.rhs);
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
