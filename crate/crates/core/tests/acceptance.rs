//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use walkbij::verify::{run_suite, Suite};

struct Criterion {
    number: usize,
    title: &'static str,
    suites: &'static [Suite],
    budget: Option<Duration>,
}

const CRITERIA: [Criterion; 14] = [
    Criterion {
        number: 1,
        title: "octant axis-walk counts = Catalan products",
        suites: &[Suite::GouyouCounts],
        budget: Some(Duration::from_secs(10)),
    },
    Criterion {
        number: 2,
        title: "octant axis-walks vs quadrant excursions",
        suites: &[Suite::MainSimple],
        budget: Some(Duration::from_secs(30)),
    },
    Criterion {
        number: 3,
        title: "axis-walks <-> pairs of Dyck paths",
        suites: &[Suite::Gouyou],
        budget: None,
    },
    Criterion {
        number: 4,
        title: "hesitating axis-walks and Baxter numbers",
        suites: &[Suite::Baxter],
        budget: None,
    },
    Criterion {
        number: 5,
        title: "hesitating involution",
        suites: &[Suite::Involution],
        budget: None,
    },
    Criterion {
        number: 6,
        title: "bounce-exchanging involution on Dyck pairs",
        suites: &[Suite::BounceSymmetry],
        budget: None,
    },
    Criterion {
        number: 7,
        title: "Schnyder wood statistics",
        suites: &[Suite::Table1],
        budget: None,
    },
    Criterion {
        number: 8,
        title: "quadrant excursions vs diagonal octant walks",
        suites: &[Suite::Eliz],
        budget: None,
    },
    Criterion {
        number: 9,
        title: "Narayana symmetries and the triple counterexample",
        suites: &[Suite::Narayana],
        budget: None,
    },
    Criterion {
        number: 10,
        title: "Weyl chamber C/D bijection",
        suites: &[Suite::Weyl],
        budget: None,
    },
    Criterion {
        number: 11,
        title: "tableaux and determinant formulas",
        suites: &[Suite::Gessel],
        budget: Some(Duration::from_secs(60)),
    },
    Criterion {
        number: 12,
        title: "thick diagonal report",
        suites: &[Suite::Conjecture],
        budget: Some(Duration::from_secs(60)),
    },
    Criterion {
        number: 13,
        title: "vacillating walks",
        suites: &[Suite::Vacillating],
        budget: None,
    },
    Criterion {
        number: 14,
        title: "insertable positions",
        suites: &[Suite::Insertable],
        budget: None,
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let reports: Vec<_> = c.suites.iter().map(|&s| run_suite(s, None)).collect();
        let elapsed = start.elapsed();
        let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
        let within = c.budget.is_none_or(|b| elapsed <= b);
        let pass = within && reports.iter().all(|r| r.passed());
        let budget = c
            .budget
            .map(|b| format!(" (budget {}s)", b.as_secs()))
            .unwrap_or_default();
        println!(
            "criterion {:>2} {}: {} [{checks} checks, {:.2}s{budget}]",
            c.number,
            c.title,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        for f in reports.iter().flat_map(|r| r.failures()) {
            println!(
                "    failed: {} {} expected {} got {}",
                f.description, f.parameters, f.expected, f.actual
            );
        }
        if !within {
            println!("    over time budget");
        }
        failed += usize::from(!pass);
    }
    println!(
        "acceptance: {} of {} criteria pass",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
