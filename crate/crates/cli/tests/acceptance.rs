//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.
//!
//! Set `DOMDIM_ACCEPTANCE_EXTENDED=1` to add the slower supplementary corpus
//! at (4 vertices, 3 arrows, relation length 3).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use domdim::summary::paper_example;
use domdim::verify::{check, run_corpus, run_morita, run_yamagata, Suite};
use domdim_core::endo::endomorphism_algebra;
use domdim_core::enumerate::{corpus_size_lower_bound, enumerate_monomial_algebras, CorpusBounds};
use domdim_core::homological::{self, dominant_dimension, DomDim, DEFAULT_CUTOFF};
use domdim_core::nakayama::{algebra_to_kupisch, enumerate_kupisch, KupischSeries, Uniserial};
use domdim_core::{fixtures, Rational};

struct Line {
    id: &'static str,
    passed: bool,
    detail: String,
    elapsed: Duration,
}

fn timed(id: &'static str, f: impl FnOnce() -> (bool, String)) -> Line {
    let start = Instant::now();
    let (passed, detail) = f();
    Line {
        id,
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

fn print(line: &Line) {
    let outcome = if line.passed { "PASS" } else { "FAIL" };
    println!("{} {outcome} ({:.2?}) {}", line.id, line.elapsed, line.detail);
}

fn example_line() -> Line {
    let line = timed("C1", || {
        let (s, d) = paper_example();
        let ok = d == DomDim::Finite(1)
            && !s.nakayama
            && !s.qf2_right
            && !s.double_centraliser
            && s.minimal_faithful_right == Some(vec![1, 3])
            && s.base_algebra_dim == Some(2)
            && s.base_description() == "K x K";
        let detail = format!(
            "example: domdim {}, nakayama {}, qf2(right) {}, double centraliser {}, mfpi {:?}, base {}",
            s.domdim,
            s.nakayama,
            s.qf2_right,
            s.double_centraliser,
            s.minimal_faithful_right.clone().unwrap_or_default(),
            s.base_description()
        );
        (ok, detail)
    });
    let fast = line.elapsed < Duration::from_secs(1);
    Line {
        passed: line.passed && fast,
        ..line
    }
}

/// The stated corpus cannot be enumerated: report the certificate instead.
fn stated_corpus_lines() -> Vec<Line> {
    let bounds = CorpusBounds::new(4, 5, 3).expect("valid bounds");
    let lower = corpus_size_lower_bound(&bounds);
    let why = format!(
        "corpus (4,5,3) not run: it has at least {lower} algebras (2^60/5! from one vertex with five loops); \
         see the supplementary lines"
    );
    ["C2", "C3", "C4", "C5"]
        .into_iter()
        .map(|id| Line {
            id,
            passed: false,
            detail: why.clone(),
            elapsed: Duration::ZERO,
        })
        .collect()
}

fn corpus_lines(label: &'static str, v: usize, e: usize, l: usize) -> Vec<Line> {
    let bounds = CorpusBounds::new(v, e, l).expect("valid bounds");
    let start = Instant::now();
    let reports = run_corpus(&bounds, &[Suite::MainTheorem, Suite::Qf2Chain, Suite::CrossChecks]);
    let elapsed = start.elapsed();
    let by = |s: Suite| reports.iter().find(|r| r.suite == s.name()).expect("suite ran");
    let (main, qf2, cross) = (by(Suite::MainTheorem), by(Suite::Qf2Chain), by(Suite::CrossChecks));
    let zero = |r: &domdim::report::VerificationReport, names: &[&str]| names.iter().all(|n| r.failures_of(n) == 0);
    let n = main.count("algebras");
    let tag = |c: &str| format!("{label} {c} at ({v},{e},{l}), {n} algebras:");
    let mk = |id, passed, detail| Line {
        id,
        passed,
        detail,
        elapsed,
    };
    vec![
        mk(
            "S2",
            zero(main, &[check::DOMDIM2_NAKAYAMA]),
            format!(
                "{} {} with domdim>=2, all Nakayama shape; {} reconstructed as End_B(M), {} reconstruction failures",
                tag("main theorem"),
                main.count("nakayama shape and domdim>=2"),
                main.count("reconstructed as End_B(M)"),
                main.failures_of(check::RECONSTRUCTION)
            ),
        ),
        mk(
            "S3",
            zero(
                cross,
                &[check::DOMDIM1_FAITHFUL, check::DOMDIM2_DC, check::DOMDIM_OPPOSITE],
            ),
            format!(
                "{} faithful/{}, double centraliser/{}, opposite/{} counterexamples",
                tag("domdim characterisations"),
                cross.failures_of(check::DOMDIM1_FAITHFUL),
                cross.failures_of(check::DOMDIM2_DC),
                cross.failures_of(check::DOMDIM_OPPOSITE)
            ),
        ),
        mk(
            "S4",
            zero(qf2, &[check::DOMDIM2_QF2, check::QF2_NAKAYAMA, check::SOCLE_ORACLE]),
            format!(
                "{} domdim=>qf2/{}, qf2=>shape/{}, socle oracle/{} counterexamples",
                tag("qf2 chain"),
                qf2.failures_of(check::DOMDIM2_QF2),
                qf2.failures_of(check::QF2_NAKAYAMA),
                qf2.failures_of(check::SOCLE_ORACLE)
            ),
        ),
        mk(
            "S5",
            zero(cross, &[check::BASE_NAKAYAMA, check::BASE_DIMS]),
            format!(
                "{} {} with domdim>=1, base algebra Nakayama in {}",
                tag("base algebra"),
                cross.count("domdim>=1"),
                cross.count("base algebra Nakayama")
            ),
        ),
    ]
}

fn nakayama_lines() -> Vec<Line> {
    let start = Instant::now();
    let y = run_yamagata(3, 4);
    let elapsed = start.elapsed();
    let c6 = Line {
        id: "C6",
        passed: y.failures_of(check::YAMAGATA) == 0
            && y.failures_of(check::ENDO_QF2) == 0
            && elapsed < Duration::from_secs(300),
        detail: format!(
            "yamagata (n<=3, c<=4): {} modules over {} series, {} Nakayama endomorphism algebras, \
             biconditional/{} qf2/{} counterexamples",
            y.count("modules"),
            y.count("series"),
            y.count("Nakayama endomorphism algebras"),
            y.failures_of(check::YAMAGATA),
            y.failures_of(check::ENDO_QF2)
        ),
        elapsed,
    };
    let c7 = Line {
        id: "C7",
        passed: y.failures_of(check::KUPISCH_SETS) == 0 && y.failures_of(check::ENDO_DOMDIM) == 0,
        detail: format!(
            "kupisch sets: {} from End_B(M) within bounds, {} with domdim>=2; {}",
            y.count("endomorphism series within bounds"),
            y.count("series with domdim>=2"),
            y.notes.join("; ")
        ),
        elapsed,
    };
    let c9 = timed("C9", || {
        let m = run_morita(3, 4);
        (
            m.passed,
            format!(
                "morita (n<=3, c<=4): {} modules over {} selfinjective series, {} counterexamples",
                m.count("modules"),
                m.count("selfinjective series"),
                m.counterexamples.len()
            ),
        )
    });
    vec![c6, c7, c9]
}

fn auslander_line() -> Line {
    timed("C8", || {
        let b = fixtures::dual_numbers();
        let m = [Uniserial { top: 0, len: 2 }, Uniserial { top: 0, len: 1 }];
        let modules: Vec<_> = m.iter().map(|u| u.module::<Rational>(&b)).collect();
        let end = endomorphism_algebra(&modules).expect("basic module").algebra;
        let target: KupischSeries = "cyclic:3,2".parse().expect("valid series");
        let Some(series) = end.kupisch_series() else {
            return (false, "End(P + P/soc) is not Nakayama".to_string());
        };
        let d = dominant_dimension::<Rational>(&series.algebra(), DEFAULT_CUTOFF);
        (
            series.same_up_to_rotation(&target) && d == DomDim::Finite(2),
            format!("End(P + P/soc) over K[x]/(x^2): {series}, domdim {d}"),
        )
    })
}

fn structural_line() -> Line {
    timed("C10", || {
        let all = enumerate_kupisch(4, 5);
        let roundtrip = all
            .iter()
            .all(|ks| algebra_to_kupisch(&ks.algebra()).is_some_and(|back| back.same_up_to_rotation(ks)));
        let selfinjective = all
            .iter()
            .all(|ks| ks.is_selfinjective() == homological::is_selfinjective(&ks.algebra()));
        let listed: Vec<String> = enumerate_kupisch(2, 3).iter().map(ToString::to_string).collect();
        let expected = [
            "linear:1",
            "linear:2,1",
            "cyclic:2",
            "cyclic:3",
            "cyclic:2,2",
            "cyclic:3,2",
            "cyclic:3,3",
        ];
        let seven = listed == expected;
        let three = enumerate_monomial_algebras(&CorpusBounds::new(1, 1, 3).expect("valid")).len();
        (
            roundtrip && selfinjective && seven && three == 3,
            format!(
                "roundtrip {roundtrip} and selfinjectivity {selfinjective} over {} series; \
                 (2,3) series [{}]; (1,1,3) has {three} algebras",
                all.len(),
                listed.join(" ")
            ),
        )
    })
}

fn main() -> ExitCode {
    let extended = std::env::var_os("DOMDIM_ACCEPTANCE_EXTENDED").is_some();

    let mut lines = vec![example_line()];
    lines.extend(stated_corpus_lines());
    lines.extend(corpus_lines("supplementary", 4, 5, 2));
    lines.extend(corpus_lines("supplementary", 4, 2, 3));
    if extended {
        lines.extend(corpus_lines("supplementary", 4, 3, 3));
    }
    lines.extend(nakayama_lines());
    lines.push(auslander_line());
    lines.push(structural_line());
    lines.sort_by_key(|l| {
        let (kind, num) = l.id.split_at(1);
        (num.parse::<u32>().unwrap_or(0), kind != "C")
    });

    for line in &lines {
        print(line);
    }
    let failed: Vec<&str> = lines.iter().filter(|l| !l.passed).map(|l| l.id).collect();
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing {}", failed.join(", "));
        ExitCode::FAILURE
    }
}
