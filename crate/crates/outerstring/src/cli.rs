//! Subcommand front end. The binary in `src/main.rs` only parses arguments
//! and forwards here, so every command is testable in-process.
//!
//! Exit codes: 0 ok, 1 verification diff, 2 parse/validation error,
//! 3 size-guard refusal.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::formats;
use crate::reductions;
use crate::reps::{
    self, BoundedStringRep, MisResult, Representation, SolveError,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DIFF: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "outerstring",
    about = "Generate, reduce, solve, verify, render and benchmark geometric MIS instances",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GenKind {
    Circle,
    Overlap,
    Lshape,
    Rect,
    BoundedStrings,
    Cnf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Algo {
    Brute,
    CircleDp,
    Interval,
    OuterstringExact,
    BoundedDp,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ApproxKind {
    Lshape,
    Rect,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Suite {
    Reductions,
    CircleDp,
    BoundedDp,
    Approx,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Write a deterministic seeded random instance.
    ///
    /// Models: circle = uniform random perfect matching of the 2n boundary
    /// positions; overlap = random pairing of 2n distinct endpoints;
    /// lshape/rect = uniform integer corners in [0, coord-max] with arm
    /// lengths in [1, len-max]; bounded-strings = random rectilinear
    /// y-monotone strings of total length <= kappa grounded in [0, width];
    /// cnf = random k-SAT with distinct variables per clause.
    Generate {
        #[arg(value_enum)]
        kind: GenKind,
        /// Number of shapes (or strings).
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Attach uniform random weights in 1..=10.
        #[arg(long, default_value_t = false)]
        weighted: bool,
        /// Mix all four L-shape orientations (lshape only).
        #[arg(long, default_value_t = true)]
        mixed: bool,
        #[arg(long, default_value_t = 60)]
        coord_max: i64,
        #[arg(long, default_value_t = 12)]
        len_max: i64,
        /// Length bound for bounded-strings.
        #[arg(long, default_value_t = 2)]
        kappa: i64,
        /// Grounding range width for bounded-strings (default 4n).
        #[arg(long)]
        width: Option<i64>,
        /// CNF: variable count.
        #[arg(long, default_value_t = 4)]
        vars: usize,
        /// CNF: clause count.
        #[arg(long, default_value_t = 6)]
        clauses: usize,
        /// CNF: literals per clause.
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Apply a reduction; writes the result plus a `.meta.json` sidecar
    /// with shift-list or gadget-layout metadata and query counters.
    Reduce {
        /// circle->overlap, overlap->gseg, overlap->squarel,
        /// circle->squarel, cnf->outerstring
        from: String,
        to: String,
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve an instance exactly.
    Solve {
        #[arg(long, value_enum)]
        algo: Algo,
        input: PathBuf,
        /// kappa for --algo bounded-dp (outerstring input).
        #[arg(long)]
        kappa: Option<i64>,
    },
    /// Run the log-OPT approximation on L-shapes or rectangles.
    Approx {
        #[arg(long, value_enum)]
        kind: ApproxKind,
        input: PathBuf,
    },
    /// Build both intersection graphs and compare them.
    Verify { input_a: PathBuf, input_b: PathBuf },
    /// Render a representation to SVG.
    Render {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a benchmark suite and write one CSV record per run.
    Bench {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Comma-separated instance sizes.
        #[arg(long)]
        sizes: Option<String>,
        /// Number of seeds per size.
        #[arg(long, default_value_t = 2)]
        seeds: u64,
        #[arg(long, default_value_t = 2)]
        kappa: i64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn fail(code: i32, msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    code
}

fn parse_rep(path: &Path) -> Result<Representation, i32> {
    let text = fs::read_to_string(path)
        .map_err(|e| fail(EXIT_INVALID, format!("{}: {e}", path.display())))?;
    formats::parse_representation(&text)
        .map_err(|e| fail(EXIT_INVALID, format!("{}: {e}", path.display())))
}

fn read_rep(path: &Path) -> Result<Representation, i32> {
    let rep = parse_rep(path)?;
    let violations = reps::validate(&rep);
    if !violations.is_empty() {
        for v in &violations {
            eprintln!("invalid: {v}");
        }
        return Err(EXIT_INVALID);
    }
    Ok(rep)
}

fn write_file(path: &Path, data: &str) -> Result<(), i32> {
    fs::write(path, data).map_err(|e| fail(EXIT_INVALID, format!("{}: {e}", path.display())))
}

fn print_result(algo: &str, r: &MisResult) {
    println!("algo: {algo}");
    println!("value: {}", r.value);
    println!(
        "chosen: [{}]",
        r.chosen.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ")
    );
    println!(
        "stats: subproblems={} queries={} nodes={} wall_ms={:.3}",
        r.stats.subproblems,
        r.stats.queries,
        r.stats.nodes,
        r.stats.wall.as_secs_f64() * 1e3
    );
    println!(
        "RESULT {{\"algo\":\"{algo}\",\"value\":{},\"chosen\":{:?}}}",
        r.value, r.chosen
    );
}

pub fn run(cli: Cli) -> i32 {
    match run_inner(cli) {
        Ok(code) => code,
        Err(code) => code,
    }
}

fn run_inner(cli: Cli) -> Result<i32, i32> {
    match cli.cmd {
        Cmd::Generate {
            kind,
            n,
            seed,
            out,
            weighted,
            mixed,
            coord_max,
            len_max,
            kappa,
            width,
            vars,
            clauses,
            k,
        } => {
            if n < 1 {
                return Err(fail(EXIT_INVALID, "n must be >= 1"));
            }
            let mut rng = crate::bench::rng_for(seed);
            let text = match kind {
                GenKind::Circle => {
                    let mut rep = crate::bench::random_circle(&mut rng, n);
                    rep.weights = crate::bench::random_weights(&mut rng, n, weighted);
                    formats::serialize_representation(&Representation::Circle(rep))
                }
                GenKind::Overlap => {
                    let mut rep = crate::bench::random_overlap(&mut rng, n);
                    rep.weights = crate::bench::random_weights(&mut rng, n, weighted);
                    formats::serialize_representation(&Representation::Overlap(rep))
                }
                GenKind::Lshape => {
                    let rep =
                        crate::bench::random_lshapes(&mut rng, n, coord_max, len_max, mixed, weighted);
                    formats::serialize_representation(&Representation::LShapes(rep))
                }
                GenKind::Rect => {
                    let rep = crate::bench::random_rects(&mut rng, n, coord_max, len_max, weighted);
                    formats::serialize_representation(&Representation::Rects(rep))
                }
                GenKind::BoundedStrings => {
                    if kappa < 1 {
                        return Err(fail(EXIT_INVALID, "kappa must be >= 1"));
                    }
                    let w = width.unwrap_or(4 * n as i64);
                    let rep = crate::bench::random_bounded(&mut rng, n, kappa, w);
                    formats::serialize_representation(&Representation::Outerstring(
                        reps::OuterstringRep { strings: rep.strings },
                    ))
                }
                GenKind::Cnf => {
                    if k > vars {
                        return Err(fail(EXIT_INVALID, "k must be <= vars"));
                    }
                    let f = crate::bench::random_cnf(&mut rng, vars, clauses, k);
                    formats::serialize_dimacs(&f)
                }
            };
            write_file(&out, &text)?;
            println!("wrote {}", out.display());
            Ok(EXIT_OK)
        }

        Cmd::Reduce { from, to, input, out } => {
            let edge = (from.as_str(), to.as_str());
            match edge {
                ("cnf", "outerstring") => {
                    let text = fs::read_to_string(&input)
                        .map_err(|e| fail(EXIT_INVALID, format!("{}: {e}", input.display())))?;
                    let f = formats::parse_dimacs(&text)
                        .map_err(|e| fail(EXIT_INVALID, e))?;
                    let (rep, layout) = match reductions::cnf_to_outerstring(&f) {
                        Ok(x) => x,
                        Err(e @ reductions::ReduceError::TooManyVariables(..)) => {
                            return Err(fail(EXIT_GUARD, e))
                        }
                        Err(e) => return Err(fail(EXIT_INVALID, e)),
                    };
                    write_file(&out, &formats::serialize_representation(&Representation::Outerstring(rep)))?;
                    let meta = serde_json::json!({
                        "reduction": "cnf->outerstring",
                        "gadget": layout,
                    });
                    write_file(&sidecar(&out), &serde_json::to_string_pretty(&meta).unwrap())?;
                }
                _ => {
                    let rep = read_rep(&input)?;
                    let overlap = match (edge, rep) {
                        (("circle", _), Representation::Circle(c)) => {
                            reductions::circle_to_overlap(&c)
                        }
                        (("overlap", _), Representation::Overlap(o)) => o,
                        _ => {
                            return Err(fail(
                                EXIT_INVALID,
                                format!("illegal reduction {from}->{to} for this input"),
                            ))
                        }
                    };
                    match to.as_str() {
                        "overlap" => {
                            write_file(
                                &out,
                                &formats::serialize_representation(&Representation::Overlap(overlap)),
                            )?;
                            let meta = serde_json::json!({"reduction": "circle->overlap"});
                            write_file(&sidecar(&out), &serde_json::to_string_pretty(&meta).unwrap())?;
                        }
                        "gseg" => {
                            let g = reductions::overlap_to_grounded_segments(&overlap);
                            let bits = formats::pack_gseg(&g)
                                .map(|p| 8 * p.len())
                                .ok();
                            write_file(
                                &out,
                                &formats::serialize_representation(&Representation::Gseg(g)),
                            )?;
                            let meta = serde_json::json!({
                                "reduction": format!("{from}->gseg"),
                                "packed_bits": bits,
                            });
                            write_file(&sidecar(&out), &serde_json::to_string_pretty(&meta).unwrap())?;
                        }
                        "squarel" => {
                            let r = reductions::overlap_to_square_l(&overlap)
                                .map_err(|e| fail(EXIT_INVALID, e))?;
                            write_file(
                                &out,
                                &formats::serialize_representation(&Representation::SquareL(r.rep)),
                            )?;
                            let meta = serde_json::json!({
                                "reduction": format!("{from}->squarel"),
                                "shifts": r.shifts,
                                "queries": r.queries,
                                "construct_ms": r.construct_time.as_secs_f64() * 1e3,
                                "validate_ms": r.validate_time.as_secs_f64() * 1e3,
                            });
                            write_file(&sidecar(&out), &serde_json::to_string_pretty(&meta).unwrap())?;
                        }
                        other => {
                            return Err(fail(EXIT_INVALID, format!("illegal target `{other}`")))
                        }
                    }
                }
            }
            println!("wrote {}", out.display());
            Ok(EXIT_OK)
        }

        Cmd::Solve { algo, input, kappa } => {
            // Interval scheduling accepts files whose endpoints repeat; every
            // other solver requires the full representation invariants.
            let rep = match algo {
                Algo::Interval => parse_rep(&input)?,
                _ => read_rep(&input)?,
            };
            let weights = rep.weight_map();
            let result = match algo {
                Algo::Brute => {
                    let g = reps::build_intersection_graph(&rep);
                    match reps::brute_force_mwis(&g, &weights) {
                        Ok(r) => r,
                        Err(e @ SolveError::TooLarge(..)) => return Err(fail(EXIT_GUARD, e)),
                        Err(e) => return Err(fail(EXIT_INVALID, e)),
                    }
                }
                Algo::CircleDp => {
                    let overlap = match &rep {
                        Representation::Circle(c) => reductions::circle_to_overlap(c),
                        Representation::Overlap(o) => o.clone(),
                        _ => {
                            return Err(fail(
                                EXIT_INVALID,
                                "circle-dp needs a circle or overlap file",
                            ))
                        }
                    };
                    crate::solvers::circle_mwis(&overlap, &weights)
                }
                Algo::Interval => {
                    // Records of an overlap file are treated as plain closed
                    // intervals for scheduling; endpoints may repeat here.
                    let intervals = match &rep {
                        Representation::Overlap(o) => o.intervals.clone(),
                        Representation::Gseg(g) => g.intervals.clone(),
                        _ => {
                            return Err(fail(
                                EXIT_INVALID,
                                "interval scheduling needs an overlap or gseg file",
                            ))
                        }
                    };
                    for iv in &intervals {
                        if iv.lo >= iv.hi {
                            return Err(fail(EXIT_INVALID, "interval needs lo < hi"));
                        }
                    }
                    crate::solvers::interval_mwis(&intervals, &weights)
                }
                Algo::OuterstringExact => {
                    let g = reps::build_intersection_graph(&rep);
                    crate::solvers::outerstring_mwis_exact(&g, &weights)
                }
                Algo::BoundedDp => {
                    let strings = match rep {
                        Representation::Outerstring(o) => o.strings,
                        _ => {
                            return Err(fail(EXIT_INVALID, "bounded-dp needs an outerstring file"))
                        }
                    };
                    let kappa = kappa
                        .ok_or_else(|| fail(EXIT_INVALID, "--kappa is required for bounded-dp"))?;
                    let bounded = BoundedStringRep { strings, kappa };
                    crate::solvers::bounded_monotone_mis(&bounded)
                        .map_err(|e| fail(EXIT_INVALID, e))?
                }
            };
            let name = format!("{algo:?}").to_lowercase();
            print_result(&name, &result);
            Ok(EXIT_OK)
        }

        Cmd::Approx { kind, input } => {
            let rep = read_rep(&input)?;
            let r = match (kind, &rep) {
                (ApproxKind::Lshape, Representation::LShapes(set)) => {
                    crate::approx::approx_all_quadrants(set).map_err(|e| fail(EXIT_INVALID, e))?
                }
                (ApproxKind::Rect, Representation::Rects(set)) => {
                    crate::approx::approx_rectangles(set).map_err(|e| fail(EXIT_INVALID, e))?
                }
                _ => return Err(fail(EXIT_INVALID, "approx kind does not match the input file")),
            };
            let factor = match kind {
                ApproxKind::Lshape => 4.0 * (r.value as f64).log2().max(1.0),
                ApproxKind::Rect => (r.value as f64).log2().max(1.0),
            };
            print_result("approx", &r);
            println!(
                "guarantee band: OPT in [{}, {:.1}]",
                r.value,
                (r.value as f64) * factor
            );
            Ok(EXIT_OK)
        }

        Cmd::Verify { input_a, input_b } => {
            let a = read_rep(&input_a)?;
            let b = read_rep(&input_b)?;
            let ga = reps::build_intersection_graph(&a);
            let gb = reps::build_intersection_graph(&b);
            match reps::graphs_equal(&ga, &gb) {
                Err(e) => Err(fail(EXIT_INVALID, e)),
                Ok(true) => {
                    println!("ok: graphs on {} vertices are identical", ga.vertices.len());
                    Ok(EXIT_OK)
                }
                Ok(false) => {
                    let diff = reps::graph_diff(&ga, &gb);
                    println!("diff: {} edge differences", diff.len());
                    for (u, v) in diff.iter().take(10) {
                        let where_a = if ga.has_edge(*u, *v) { "first" } else { "second" };
                        println!("  {u}-{v} only in {where_a} input");
                    }
                    Ok(EXIT_DIFF)
                }
            }
        }

        Cmd::Render { input, out } => {
            let rep = read_rep(&input)?;
            let svg = crate::render::render_svg(&rep).map_err(|e| fail(EXIT_INVALID, e))?;
            write_file(&out, &svg)?;
            println!("wrote {}", out.display());
            Ok(EXIT_OK)
        }

        Cmd::Bench { suite, sizes, seeds, kappa, out } => {
            let default_sizes: Vec<usize> = match suite {
                Suite::Reductions => vec![1024, 2048, 4096, 8192, 16384],
                Suite::CircleDp => vec![250, 500, 1000, 2000],
                Suite::BoundedDp => vec![125, 250, 500, 1000],
                Suite::Approx => vec![16, 32, 64, 128],
            };
            let sizes: Vec<usize> = match sizes {
                None => default_sizes,
                Some(s) => {
                    let mut v = Vec::new();
                    for tok in s.split(',') {
                        v.push(
                            tok.trim()
                                .parse()
                                .map_err(|_| fail(EXIT_INVALID, format!("bad size `{tok}`")))?,
                        );
                    }
                    v
                }
            };
            let seed_list: Vec<u64> = (0..seeds).collect();
            let records = match suite {
                Suite::Reductions => crate::bench::bench_reductions(&sizes, &seed_list),
                Suite::CircleDp => crate::bench::bench_circle_dp(&sizes, &seed_list),
                Suite::BoundedDp => crate::bench::bench_bounded(&sizes, &seed_list, kappa),
                Suite::Approx => crate::bench::bench_approx(&sizes, &seed_list),
            };
            let mut csv = String::from(crate::bench::CSV_HEADER);
            csv.push('\n');
            for r in &records {
                csv.push_str(&r.csv_line());
                csv.push('\n');
            }
            write_file(&out, &csv)?;
            print!("{}", crate::bench::ratio_table(&records));
            println!("wrote {}", out.display());
            Ok(EXIT_OK)
        }
    }
}

fn sidecar(out: &Path) -> PathBuf {
    let mut p = out.as_os_str().to_owned();
    p.push(".meta.json");
    PathBuf::from(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn run_args(args: &[&str]) -> i32 {
        run(Cli::try_parse_from(args).expect("args parse"))
    }

    #[test]
    fn generate_is_deterministic_bytes() {
        let dir = tempfile::tempdir().unwrap();
        let a = dir.path().join("a.txt");
        let b = dir.path().join("b.txt");
        for out in [&a, &b] {
            let code = run_args(&[
                "outerstring",
                "generate",
                "circle",
                "--n",
                "5",
                "--seed",
                "7",
                "--out",
                out.to_str().unwrap(),
            ]);
            assert_eq!(code, EXIT_OK);
        }
        assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    }

    #[test]
    fn generate_overlap_has_distinct_endpoints() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("o.txt");
        assert_eq!(
            run_args(&[
                "outerstring", "generate", "overlap", "--n", "4", "--seed", "1", "--out",
                p.to_str().unwrap(),
            ]),
            EXIT_OK
        );
        let rep = formats::parse_representation(&fs::read_to_string(&p).unwrap()).unwrap();
        match rep {
            Representation::Overlap(o) => {
                let mut e: Vec<i64> = o.intervals.iter().flat_map(|i| [i.lo, i.hi]).collect();
                e.sort_unstable();
                e.dedup();
                assert_eq!(e.len(), 8);
            }
            _ => panic!("expected overlap"),
        }
    }

    #[test]
    fn reduce_and_verify_pipeline() {
        let dir = tempfile::tempdir().unwrap();
        let circle = dir.path().join("c.txt");
        let squarel = dir.path().join("s.txt");
        assert_eq!(
            run_args(&[
                "outerstring", "generate", "circle", "--n", "10", "--seed", "3", "--out",
                circle.to_str().unwrap(),
            ]),
            EXIT_OK
        );
        assert_eq!(
            run_args(&[
                "outerstring", "reduce", "circle", "squarel",
                circle.to_str().unwrap(),
                "--out", squarel.to_str().unwrap(),
            ]),
            EXIT_OK
        );
        assert!(squarel.with_extension("txt.meta.json").exists() || sidecar(&squarel).exists());
        assert_eq!(
            run_args(&[
                "outerstring", "verify",
                circle.to_str().unwrap(),
                squarel.to_str().unwrap(),
            ]),
            EXIT_OK
        );
        // perturb one arm: the graphs should differ
        let text = fs::read_to_string(&squarel).unwrap();
        let mut lines: Vec<String> = text.lines().map(|l| l.to_string()).collect();
        let parts: Vec<String> = lines[1].split_whitespace().map(|s| s.to_string()).collect();
        let arm: i64 = parts[2].parse().unwrap();
        lines[1] = format!("{} {} {}", parts[0], parts[1], arm + 1000);
        let broken = dir.path().join("broken.txt");
        fs::write(&broken, lines.join("\n")).unwrap();
        assert_eq!(
            run_args(&[
                "outerstring", "verify",
                circle.to_str().unwrap(),
                broken.to_str().unwrap(),
            ]),
            EXIT_DIFF
        );
    }

    #[test]
    fn reduce_then_verify_over_many_seeds() {
        let dir = tempfile::tempdir().unwrap();
        for seed in 0..60u64 {
            let circle = dir.path().join(format!("c{seed}.txt"));
            assert_eq!(
                run_args(&[
                    "outerstring", "generate", "circle", "--n", "9", "--seed",
                    &seed.to_string(), "--out", circle.to_str().unwrap(),
                ]),
                EXIT_OK
            );
            for target in ["overlap", "gseg", "squarel"] {
                let out = dir.path().join(format!("r{seed}-{target}.txt"));
                assert_eq!(
                    run_args(&[
                        "outerstring", "reduce", "circle", target,
                        circle.to_str().unwrap(),
                        "--out", out.to_str().unwrap(),
                    ]),
                    EXIT_OK,
                    "reduce circle->{target} seed {seed}"
                );
                assert_eq!(
                    run_args(&[
                        "outerstring", "verify",
                        circle.to_str().unwrap(),
                        out.to_str().unwrap(),
                    ]),
                    EXIT_OK,
                    "verify circle vs {target} seed {seed}"
                );
            }
        }
    }

    #[test]
    fn solve_dispatch_paths() {
        let dir = tempfile::tempdir().unwrap();
        let overlap = dir.path().join("o.txt");
        fs::write(&overlap, "overlap 3\n0 0 4\n1 1 2\n2 3 5\n").unwrap();
        for algo in ["brute", "circle-dp", "interval", "outerstring-exact"] {
            assert_eq!(
                run_args(&["outerstring", "solve", "--algo", algo, overlap.to_str().unwrap()]),
                EXIT_OK,
                "algo {algo}"
            );
        }
        // scheduling accepts shared endpoints, which overlap validation rejects
        let sched = dir.path().join("sched.txt");
        fs::write(&sched, "overlap 3\n0 0 3 5\n1 0 1 3\n2 2 3 3\n").unwrap();
        assert_eq!(
            run_args(&["outerstring", "solve", "--algo", "interval", sched.to_str().unwrap()]),
            EXIT_OK
        );
        assert_eq!(
            run_args(&["outerstring", "solve", "--algo", "brute", sched.to_str().unwrap()]),
            EXIT_INVALID
        );
        let strings = dir.path().join("s.txt");
        fs::write(&strings, "outerstring 2\n0 2 0 0 0 2\n1 2 4 0 4 2\n").unwrap();
        assert_eq!(
            run_args(&[
                "outerstring", "solve", "--algo", "bounded-dp", "--kappa", "2",
                strings.to_str().unwrap(),
            ]),
            EXIT_OK
        );
    }

    #[test]
    fn gadget_pipeline_through_files() {
        let dir = tempfile::tempdir().unwrap();
        let cnf = dir.path().join("f.cnf");
        let gadget = dir.path().join("g.txt");
        let svg = dir.path().join("g.svg");
        assert_eq!(
            run_args(&[
                "outerstring", "generate", "cnf", "--vars", "4", "--clauses", "5", "--k", "2",
                "--seed", "3", "--out", cnf.to_str().unwrap(),
            ]),
            EXIT_OK
        );
        assert_eq!(
            run_args(&[
                "outerstring", "reduce", "cnf", "outerstring",
                cnf.to_str().unwrap(),
                "--out", gadget.to_str().unwrap(),
            ]),
            EXIT_OK
        );
        assert!(sidecar(&gadget).exists());
        assert_eq!(
            run_args(&["outerstring", "solve", "--algo", "outerstring-exact", gadget.to_str().unwrap()]),
            EXIT_OK
        );
        assert_eq!(
            run_args(&[
                "outerstring", "render", gadget.to_str().unwrap(), "--out", svg.to_str().unwrap(),
            ]),
            EXIT_OK
        );
        let text = fs::read_to_string(&svg).unwrap();
        assert!(text.contains("clause point"), "gadget render labels clause points");
    }

    #[test]
    fn solve_guard_exit_code() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("big.txt");
        assert_eq!(
            run_args(&[
                "outerstring", "generate", "overlap", "--n", "30", "--seed", "0", "--out",
                p.to_str().unwrap(),
            ]),
            EXIT_OK
        );
        assert_eq!(
            run_args(&["outerstring", "solve", "--algo", "brute", p.to_str().unwrap()]),
            EXIT_GUARD
        );
    }

    #[test]
    fn parse_error_exit_code() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("bad.txt");
        fs::write(&p, "overlap 2\n0 0\n").unwrap();
        assert_eq!(
            run_args(&["outerstring", "solve", "--algo", "brute", p.to_str().unwrap()]),
            EXIT_INVALID
        );
    }
}
