//! `dicrit`: command-line front end for the digraph coloring toolkit.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dicrit::analysis::{
    check_arc_bound, forbidden_structure_scan, gallai_arc_bound, gallai_check,
    is_perfect_bruteforce, ArcBoundCheck,
};
use dicrit::coloring::{dichromatic_number, find_k_dicoloring, is_k_critical};
use dicrit::constructions::{
    bidirected_hajos_join, dirac_join, hajos_join, identify, ore_join, JoinKind,
};
use dicrit::digraph::io::{read_dgf_file, write_coloring, write_dgf};
use dicrit::script::{verify_file, Mode};
use dicrit::search::{
    all_digon_free_colorable, critical_census, hajos_construct_search, ore_derivation,
    verify_nk_lower_bound, OreLimits, SearchLimits, SearchOutcome,
};
use dicrit::{Digraph, Error};

const FORMATS: &str = "\
FILE FORMATS
  Digraph (.dgf): `p dgf <n> <m>` header, then one `a <u> <v>` line per arc,
  vertices 0..n-1. Lines starting with `#` and blank lines are ignored.
  Coloring: one `c <v> <color>` line per vertex, ascending v.
  Script (.hdv): `let NAME = ...` steps and `check NAME ...` claims; see
  `dicrit verify --help`.
  Inline digraph (census output): `g <n> <m> <u1> <v1> <u2> <v2> ...`.

EXIT CODES
  0 success / claim holds, 1 claim fails / not found, 2 usage or input error.";

#[derive(Parser)]
#[command(name = "dicrit", version, about = "Dichromatic number, critical digraphs and Hajós/Ore constructions", after_help = FORMATS)]
struct Cli {
    /// Output mode for key/value reports (digraph, script and census output is format-defined).
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    /// Worker threads for census and search (results do not depend on it).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Tsv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the dichromatic number of a digraph file.
    #[command(after_help = FORMATS)]
    Chi {
        file: PathBuf,
        /// Also print an optimal coloring as `c <v> <color>` lines.
        #[arg(long)]
        emit_coloring: bool,
    },
    /// Test whether a digraph is k-critical (exit 1 if not).
    #[command(after_help = FORMATS)]
    Critical {
        file: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Join two digraph files and print the result as dgf.
    #[command(after_help = FORMATS)]
    Join(JoinCmd),
    /// Identify an independent vertex set and print the result as dgf.
    #[command(after_help = FORMATS)]
    Identify {
        file: PathBuf,
        /// Comma-separated vertices, e.g. `0,3,5`.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Verify a derivation script (exit 1 unless every step and claim passes).
    #[command(after_help = SCRIPT_HELP)]
    Verify {
        script: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Plain)]
        mode: ModeArg,
        /// Required for `--mode hajos|ore`.
        #[arg(short)]
        k: Option<usize>,
    },
    /// Classify the blocks of the low-vertex subdigraph of a k-critical digraph.
    #[command(after_help = FORMATS)]
    Classify {
        file: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Scan for filled odd holes/antiholes and induced directed cycles (exit 1 if found).
    #[command(after_help = FORMATS)]
    Perfect {
        file: PathBuf,
        /// Cross-check with χ⃗ = ω on every induced subdigraph (order ≤ 8).
        #[arg(long)]
        bruteforce: bool,
    },
    /// List all k-critical digraphs up to isomorphism on at most n-max vertices.
    #[command(after_help = FORMATS)]
    Census {
        #[arg(short)]
        k: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        digon_free: bool,
    },
    /// Check that no digon-free digraph on at most n-max vertices has χ⃗ ≥ k.
    NkCheck {
        #[arg(short)]
        k: usize,
        #[arg(long)]
        n_max: usize,
        /// Also check every labeled digon-free digraph (slow).
        #[arg(long)]
        crosscheck: bool,
    },
    /// Bounded search for a Hajós-k-construction of a target (exit 1 if not found).
    #[command(after_help = FORMATS)]
    Search {
        #[arg(long)]
        target: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        max_depth: usize,
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        #[arg(long, default_value_t = 20_000)]
        max_frontier: usize,
    },
    /// Print the arc bound R(k)·n for digon-free (k+1)-critical digraphs, as exact rationals.
    #[command(after_help = FORMATS)]
    Bound {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        /// Check a digraph file against the bound (exit 1 if violated).
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Print an Ore-join script that rebuilds a digraph with χ⃗ ≥ k exactly.
    #[command(after_help = FORMATS)]
    Derive {
        file: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = 200_000)]
        max_steps: usize,
    },
}

const SCRIPT_HELP: &str = "\
SCRIPT FORMAT (.hdv, one statement per line or `;`-separated, `#` comments)
  let NAME = bk INT | dc INT | bc INT | load \"PATH\"
  let NAME = hajos NAME (v1,u1) NAME (v2,u2)
  let NAME = bhajos NAME (v1,u1) NAME (v2,u2)
  let NAME = dirac NAME NAME
  let NAME = identify NAME {INT, ...}
  let NAME = orejoin d|b NAME (v1,u1) NAME (v2,u2) map {INT->INT, ...}
  let NAME = relabel NAME [INT, ...]
  check NAME chi >= INT | chi = INT | critical INT | iso \"PATH\" | iso bk|bc|dc INT | strong

REPORT
  `step NAME ok|error DETAIL`, `claim NAME KIND pass|fail EVIDENCE`,
  `mode ok|violation DETAIL` in hajos/ore mode.

EXIT CODES
  0 accepted, 1 rejected, 2 usage or input error.";

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Plain,
    Hajos,
    Ore,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Dirac,
    Hajos,
    Bhajos,
    Ore,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    D,
    B,
}

#[derive(Args)]
struct JoinCmd {
    #[arg(long, value_enum)]
    op: Op,
    first: PathBuf,
    second: PathBuf,
    /// `v1,u1` in the first digraph (hajos: arc u1→v1; bhajos/ore b: digon).
    #[arg(long, value_delimiter = ',', num_args = 1)]
    at1: Vec<usize>,
    /// `v2,u2` in the second digraph (hajos: arc v2→u2).
    #[arg(long, value_delimiter = ',', num_args = 1)]
    at2: Vec<usize>,
    /// Ore join kind: directed or bidirected.
    #[arg(long, value_enum, default_value_t = KindArg::D)]
    kind: KindArg,
    /// Ore identifications `w->x,...` (first digraph to second).
    #[arg(long, default_value = "")]
    map: String,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

/// Outcome of a subcommand: exit code 0 or 1.
type Outcome = Result<bool, Error>;

struct Out {
    format: Format,
}

impl Out {
    fn row(&self, fields: &[&str]) {
        let sep = if self.format == Format::Tsv {
            "\t"
        } else {
            " "
        };
        println!("{}", fields.join(sep));
    }
}

fn load(path: &Path) -> Result<Digraph, Error> {
    read_dgf_file(path)
}

fn emit(d: &Digraph, out: Option<&Path>) -> Outcome {
    let text = write_dgf(d);
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io {
            path: p.display().to_string(),
            msg: e.to_string(),
        })?,
        None => print!("{text}"),
    }
    Ok(true)
}

fn pair(v: &[usize], what: &str) -> Result<(usize, usize), Error> {
    match v {
        [a, b] => Ok((*a, *b)),
        _ => Err(Error::BadParameter(format!(
            "{what} needs exactly two vertices `v,u`"
        ))),
    }
}

fn parse_map(s: &str) -> Result<Vec<(usize, usize)>, Error> {
    let bad = || Error::BadParameter(format!("bad map `{s}`, expected `w->x,...`"));
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (a, b) = t.split_once("->").ok_or_else(bad)?;
            Ok((
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ))
        })
        .collect()
}

fn join_cmd(j: &JoinCmd) -> Outcome {
    let (d1, d2) = (load(&j.first)?, load(&j.second)?);
    let r = match j.op {
        Op::Dirac => dirac_join(&d1, &d2),
        op => {
            let (v1, u1) = pair(&j.at1, "--at1")?;
            let (v2, u2) = pair(&j.at2, "--at2")?;
            match op {
                Op::Hajos => hajos_join(&d1, v1, u1, &d2, v2, u2)?,
                Op::Bhajos => bidirected_hajos_join(&d1, v1, u1, &d2, v2, u2)?,
                _ => {
                    let kind = match j.kind {
                        KindArg::D => JoinKind::Directed,
                        KindArg::B => JoinKind::Bidirected,
                    };
                    ore_join(kind, &d1, v1, u1, &d2, v2, u2, &parse_map(&j.map)?)?
                }
            }
        }
    };
    emit(&r.result, j.out.as_deref())
}

fn list(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn run(cli: &Cli) -> Outcome {
    let out = Out { format: cli.format };
    match &cli.cmd {
        Cmd::Chi {
            file,
            emit_coloring,
        } => {
            let d = load(file)?;
            let chi = dichromatic_number(&d)?;
            match cli.format {
                Format::Human => println!("{chi}"),
                Format::Tsv => out.row(&["chi", &chi.to_string()]),
            }
            if *emit_coloring {
                let c = find_k_dicoloring(&d, chi)?.expect("χ⃗ colors suffice");
                print!("{}", write_coloring(&c));
            }
            Ok(true)
        }
        Cmd::Critical { file, k } => {
            let yes = is_k_critical(&load(file)?, *k)?;
            out.row(&["critical", &k.to_string(), if yes { "yes" } else { "no" }]);
            Ok(yes)
        }
        Cmd::Join(j) => join_cmd(j),
        Cmd::Identify {
            file,
            set,
            out: path,
        } => emit(&identify(&load(file)?, set)?.result, path.as_deref()),
        Cmd::Verify { script, mode, k } => {
            let mode = match (mode, k) {
                (ModeArg::Plain, _) => Mode::Plain,
                (ModeArg::Hajos, Some(k)) => Mode::Hajos(*k),
                (ModeArg::Ore, Some(k)) => Mode::Ore(*k),
                _ => return Err(Error::BadParameter("--mode hajos|ore requires -k".into())),
            };
            let report = verify_file(script, mode)?;
            print!("{report}");
            let ok = report.accepted();
            out.row(&["verdict", if ok { "accepted" } else { "rejected" }]);
            Ok(ok)
        }
        Cmd::Classify { file, k } => {
            let r = gallai_check(&load(file)?, *k)?;
            let low: Vec<String> = r.low.iter().map(|v| v.to_string()).collect();
            let mut fields = vec!["low"];
            fields.extend(low.iter().map(String::as_str));
            out.row(&fields);
            for (b, class) in &r.blocks {
                out.row(&["block", &list(b), &class.to_string()]);
            }
            Ok(!r.has_violation())
        }
        Cmd::Perfect { file, bruteforce } => {
            let d = load(file)?;
            let v = forbidden_structure_scan(&d)?;
            match &v.witness {
                None => out.row(&["perfect", "yes"]),
                Some(w) => out.row(&["perfect", "no", &w.kind.to_string(), &list(&w.vertices)]),
            }
            if *bruteforce {
                let b = is_perfect_bruteforce(&d)?;
                out.row(&["bruteforce", if b { "yes" } else { "no" }]);
                if b != v.perfect {
                    return Err(Error::ConstructionFailed(
                        "scan and brute force disagree".into(),
                    ));
                }
            }
            Ok(v.perfect)
        }
        Cmd::Census {
            k,
            n_max,
            digon_free,
        } => {
            print!("{}", critical_census(*n_max, *k, *digon_free)?);
            Ok(true)
        }
        Cmd::NkCheck {
            k,
            n_max,
            crosscheck,
        } => {
            let v = verify_nk_lower_bound(*k, *n_max)?;
            print!("{v}");
            if *crosscheck {
                for c in v.orders.iter().filter(|c| c.all_colorable && c.order <= 6) {
                    let ok = all_digon_free_colorable(c.order, *k)?;
                    out.row(&[
                        "crosscheck",
                        &c.order.to_string(),
                        if ok { "ok" } else { "mismatch" },
                    ]);
                    if !ok {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        Cmd::Search {
            target,
            k,
            max_depth,
            max_order,
            max_frontier,
        } => {
            let limits = SearchLimits {
                max_order: *max_order,
                max_depth: *max_depth,
                max_frontier: *max_frontier,
                spot_check: false,
            };
            match hajos_construct_search(&load(target)?, *k, limits)? {
                SearchOutcome::Found(s) => {
                    print!("{s}");
                    Ok(true)
                }
                SearchOutcome::NotFound(r) => {
                    println!("# {r}");
                    Ok(false)
                }
            }
        }
        Cmd::Bound { k, n, check } => {
            let b = gallai_arc_bound(*k, *n)?;
            out.row(&["ratio", &b.ratio.to_string()]);
            out.row(&["bound", &b.bound.to_string()]);
            out.row(&["regime", if b.in_regime { "theorem" } else { "outside" }]);
            match check {
                None => Ok(true),
                Some(p) => {
                    let d = load(p)?;
                    if d.order() != *n {
                        return Err(Error::BadParameter(format!(
                            "file has order {}, -n is {n}",
                            d.order()
                        )));
                    }
                    match check_arc_bound(&d, *k)? {
                        ArcBoundCheck::Holds { twice_arcs, bound } => {
                            out.row(&[
                                "check",
                                "holds",
                                &twice_arcs.to_string(),
                                &bound.to_string(),
                            ]);
                            Ok(true)
                        }
                        ArcBoundCheck::Violated { twice_arcs, bound } => {
                            out.row(&[
                                "check",
                                "violated",
                                &twice_arcs.to_string(),
                                &bound.to_string(),
                            ]);
                            Ok(false)
                        }
                        ArcBoundCheck::NotApplicable(why) => {
                            out.row(&["check", "not-applicable", &why]);
                            Ok(true)
                        }
                    }
                }
            }
        }
        Cmd::Derive { file, k, max_steps } => {
            let limits = OreLimits {
                max_steps: *max_steps,
                ..OreLimits::default()
            };
            print!("{}", ore_derivation(&load(file)?, *k, limits)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon_pool(j) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn rayon_pool(jobs: usize) -> Result<(), String> {
    if jobs == 0 {
        return Err("--jobs must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global()
        .map_err(|e| e.to_string())
}
