use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use domdim::format::{parse_algebra, parse_summands, render_algebra, EXAMPLE_FILE};
use domdim::report::{write_atomically, VerificationReport};
use domdim::summary::paper_example;
use domdim::verify::{run_corpus, run_morita, run_yamagata, Suite, DEFAULT_MAX_C, DEFAULT_MAX_N, FEASIBLE_CORPUS};
use domdim_core::endo::endomorphism_algebra;
use domdim_core::enumerate::{corpus_size_lower_bound, CorpusBounds};
use domdim_core::homological::{
    base_algebra, dominant_dimension, double_centralizer_check, injective_coresolution, minimal_faithful_proj_inj,
    DEFAULT_CUTOFF,
};
use domdim_core::nakayama::{algebra_to_kupisch, describe, KupischSeries};
use domdim_core::{Field, Fp, MonomialAlgebra, Rational, Side, Sides};

#[derive(Parser)]
#[command(
    name = "domdim",
    version,
    about = "Dominant dimension and Nakayama algebras of monomial algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldChoice {
    Rational,
    Gf2,
    Gf3,
    Gf5,
    Gf7,
    Gf101,
    Gf32003,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Algebra file, or `-` for standard input.
    file: PathBuf,
    /// Ground field for the linear algebra.
    #[arg(long, value_enum, default_value = "rational")]
    field: FieldChoice,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Right,
    Left,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra file and print its basic data.
    Check(AlgebraArgs),
    /// Dominant dimension.
    Domdim {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: usize,
    },
    /// Terms of the minimal injective coresolution of the regular module.
    Coresolve {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value_t = 4)]
        terms: usize,
    },
    /// Nakayama test and Kupisch series.
    Nakayama(AlgebraArgs),
    /// QF-2 test.
    Qf2 {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value = "both")]
        side: SideArg,
    },
    /// The base algebra fAf of the minimal faithful projective-injective module.
    Base(AlgebraArgs),
    /// Double centraliser test.
    Dc(AlgebraArgs),
    /// Endomorphism algebra of a module over a Nakayama algebra.
    Endo {
        /// `linear:c1,...,1` or `cyclic:c0,c1,...`
        #[arg(long)]
        kupisch: String,
        /// Summands: `P<i>`, `I<i>`, `I<i>/s` or `top=<v>,len=<l>`, separated by spaces or `+`.
        #[arg(long)]
        summands: String,
        #[arg(long, value_enum, default_value = "rational")]
        field: FieldChoice,
    },
    /// Run an exhaustive verification suite.
    Verify(VerifyArgs),
    /// The built-in five-vertex example.
    PaperExample {
        /// Print the summary as JSON.
        #[arg(long)]
        json: bool,
        /// Print the algebra file instead.
        #[arg(long)]
        show_file: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 4)]
    max_vertices: usize,
    #[arg(long, default_value_t = 5)]
    max_arrows: usize,
    #[arg(long, default_value_t = 3)]
    max_rel_len: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_C)]
    max_c: usize,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Also write a CSV summary next to the report (or print it).
    #[arg(long)]
    csv: bool,
    /// Leave wall time out of the report.
    #[arg(long)]
    seedless: bool,
    /// Run even when the corpus is provably too large to finish.
    #[arg(long)]
    force: bool,
}

/// Runs `$body` with `$f` bound to the chosen field type.
macro_rules! with_field {
    ($choice:expr, $f:ident => $body:expr) => {
        match $choice {
            FieldChoice::Rational => {
                type $f = Rational;
                $body
            }
            FieldChoice::Gf2 => {
                type $f = Fp<2>;
                $body
            }
            FieldChoice::Gf3 => {
                type $f = Fp<3>;
                $body
            }
            FieldChoice::Gf5 => {
                type $f = Fp<5>;
                $body
            }
            FieldChoice::Gf7 => {
                type $f = Fp<7>;
                $body
            }
            FieldChoice::Gf101 => {
                type $f = Fp<101>;
                $body
            }
            FieldChoice::Gf32003 => {
                type $f = Fp<32003>;
                $body
            }
        }
    };
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

fn load(path: &Path) -> Result<MonomialAlgebra, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("reading standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?
    };
    parse_algebra(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn one_based(vs: &[usize]) -> String {
    let items: Vec<String> = vs.iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn check(a: &MonomialAlgebra) {
    let q = a.quiver();
    println!("vertices: {}", q.vertex_count());
    println!("arrows: {}", q.arrows().len());
    println!("relations: {}", a.relations().len());
    println!("dimension: {}", a.dim());
    println!("longest nonzero path: {}", a.loewy_bound());
    let shape = q.shape().map(|s| format!("{s:?}")).unwrap_or_else(|e| e.to_string());
    println!("quiver shape: {shape}");
}

fn coresolve<F: Field>(a: &MonomialAlgebra, terms: usize) {
    let res = injective_coresolution::<F>(a, terms);
    for (k, (term, projective)) in res.terms.iter().zip(res.projective_flags()).enumerate() {
        let dims: Vec<String> = term.dims().iter().map(ToString::to_string).collect();
        let kind = if projective { "projective" } else { "not projective" };
        println!("I_{k}: dims ({}), {kind}", dims.join(","));
    }
    if res.complete {
        println!("coresolution complete");
    } else {
        println!("stopped after {} terms", res.terms.len());
    }
}

fn base<F: Field>(a: &MonomialAlgebra) {
    match base_algebra::<F>(a) {
        Ok(b) => {
            let f = minimal_faithful_proj_inj(a, Side::Left).expect("base algebra exists");
            println!("f supported on vertices {}", one_based(&f));
            println!("dimension: {}", b.dim());
            println!("radical dimension: {}", b.radical_basis().len());
            println!("components: {}", b.gabriel_quiver().components().len());
            println!("nakayama: {}", b.is_nakayama());
            println!("selfinjective: {}", b.is_selfinjective());
            if let Some(k) = b.kupisch_series() {
                println!("kupisch: {k}");
            }
        }
        Err(e) => println!("no base algebra: {e}"),
    }
}

fn endo<F: Field>(kupisch: &str, summands: &str) -> Result<(), Failure> {
    let ks: KupischSeries = kupisch.parse().map_err(|e| usage(format!("{e}")))?;
    let b = ks.algebra();
    let m = parse_summands(summands, &b).map_err(usage)?;
    let modules: Vec<_> = m.iter().map(|u| u.module::<F>(&b)).collect();
    let end = endomorphism_algebra(&modules)
        .map_err(|e| usage(e.to_string()))?
        .algebra;
    println!("B: {ks}");
    println!("M: {}", describe(&m));
    println!("dimension: {}", end.dim());
    println!("nakayama: {}", end.is_nakayama());
    println!("qf2: {}", end.is_qf2());
    println!(
        "projective-injective summands: {}",
        one_based(&end.projective_injective_summands())
    );
    if let Some(k) = end.kupisch_series() {
        println!("kupisch: {k}");
        println!(
            "dominant dimension: {}",
            dominant_dimension::<F>(&k.algebra(), DEFAULT_CUTOFF)
        );
    }
    Ok(())
}

fn emit(reports: &[VerificationReport], args: &VerifyArgs) -> Result<(), Failure> {
    let json = if reports.len() == 1 {
        reports[0].to_json()
    } else {
        let values: Vec<serde_json::Value> = reports
            .iter()
            .map(|r| serde_json::from_str(&r.to_json()).expect("valid json"))
            .collect();
        serde_json::to_string_pretty(&values).expect("serializes")
    };
    let csv: String = reports
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let text = r.to_csv();
            if k == 0 {
                text
            } else {
                text.lines().skip(1).map(|l| format!("{l}\n")).collect()
            }
        })
        .collect();
    match &args.report {
        Some(path) => {
            write_atomically(path, &format!("{json}\n")).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            if args.csv {
                let csv_path = path.with_extension("csv");
                write_atomically(&csv_path, &csv).map_err(|e| usage(format!("{}: {e}", csv_path.display())))?;
            }
        }
        None => {
            println!("{json}");
            if args.csv {
                print!("{csv}");
            }
        }
    }
    for r in reports {
        let outcome = if r.passed { "pass" } else { "FAIL" };
        eprintln!("{}: {outcome}, {} counterexamples", r.suite, r.counterexamples.len());
    }
    Ok(())
}

fn verify(args: &VerifyArgs) -> Result<bool, Failure> {
    let start = Instant::now();
    let mut reports = if args.suite.uses_corpus() {
        let bounds = CorpusBounds::new(args.max_vertices, args.max_arrows, args.max_rel_len)
            .map_err(|e| usage(e.to_string()))?;
        let lower = corpus_size_lower_bound(&bounds);
        if lower > FEASIBLE_CORPUS && !args.force {
            return Err(usage(format!(
                "the corpus at these bounds has at least {lower} algebras; \
                 lower the bounds or pass --force"
            )));
        }
        run_corpus(&bounds, &[args.suite])
    } else if args.suite == Suite::Yamagata {
        vec![run_yamagata(args.max_n, args.max_c)]
    } else {
        vec![run_morita(args.max_n, args.max_c)]
    };
    if !args.seedless {
        let ms = start.elapsed().as_millis() as u64;
        for r in &mut reports {
            r.wall_time_ms = Some(ms);
        }
    }
    emit(&reports, args)?;
    Ok(reports.iter().all(|r| r.passed))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Check(x) => check(&load(&x.file)?),
        Command::Domdim { algebra, cutoff } => {
            let a = load(&algebra.file)?;
            let d = with_field!(algebra.field, F => dominant_dimension::<F>(&a, cutoff));
            println!("{d}");
        }
        Command::Coresolve { algebra, terms } => {
            let a = load(&algebra.file)?;
            with_field!(algebra.field, F => coresolve::<F>(&a, terms));
        }
        Command::Nakayama(x) => {
            let a = load(&x.file)?;
            match algebra_to_kupisch(&a) {
                Some(k) => {
                    println!("nakayama: true");
                    println!("kupisch: {}", k.canonical());
                }
                None => println!("nakayama: false"),
            }
        }
        Command::Qf2 { algebra, side } => {
            let a = load(&algebra.file)?;
            let sides = match side {
                SideArg::Right => Sides::Right,
                SideArg::Left => Sides::Left,
                SideArg::Both => Sides::Both,
            };
            println!("{}", a.is_qf2(sides));
        }
        Command::Base(x) => {
            let a = load(&x.file)?;
            with_field!(x.field, F => base::<F>(&a));
        }
        Command::Dc(x) => {
            let a = load(&x.file)?;
            let dc = with_field!(x.field, F => double_centralizer_check::<F>(&a));
            println!("holds: {}", dc.holds);
            if let Some((dim_a, dim_end)) = dc.dims {
                println!("dim A: {dim_a}");
                println!("dim End(Af): {dim_end}");
            }
        }
        Command::Endo {
            kupisch,
            summands,
            field,
        } => with_field!(field, F => endo::<F>(&kupisch, &summands))?,
        Command::Verify(args) => {
            if !verify(&args)? {
                return Err(Failure {
                    code: 2,
                    message: "counterexamples found".to_string(),
                });
            }
        }
        Command::PaperExample { json, show_file } => {
            if show_file {
                print!("{EXAMPLE_FILE}");
                return Ok(());
            }
            let (s, _) = paper_example();
            if json {
                println!("{}", serde_json::to_string_pretty(&s).expect("serializes"));
            } else {
                print!("{}", render_algebra(&domdim_core::fixtures::paper_example()));
                println!("dominant dimension: {}", s.domdim);
                println!("nakayama: {}", s.nakayama);
                println!("qf2 (right): {}", s.qf2_right);
                let mfpi = s.minimal_faithful_right.as_deref().map_or("none".to_string(), |v| {
                    let zero: Vec<usize> = v.iter().map(|x| x - 1).collect();
                    one_based(&zero)
                });
                println!("minimal faithful projective-injective (right): {mfpi}");
                println!("base algebra: {}", s.base_description());
                println!("double centraliser: {}", s.double_centraliser);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("domdim: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
