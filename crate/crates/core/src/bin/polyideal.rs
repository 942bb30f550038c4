use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use polyideal::algebra::{buchberger, minimalize, Budget, GroebnerBasis, TermOrder};
use polyideal::classify::{
    classify_batch, parse_polyomino_list, run_batch, serialize_record, verify_paper, BatchOptions,
    ClassifyOptions,
};
use polyideal::enumerate::{self, Class};
use polyideal::geometry::{fixtures, Polyomino};
use polyideal::grid::{make_grid, parse_blocks, GridSpec};
use polyideal::text::{binomial_to_string, cell_list, render};
use polyideal::toric::{build_alpha_matrix, integer_kernel, toric_ideal};
use polyideal::walks::{find_zigzag, walk_binomial, SearchMode};

#[derive(Parser)]
#[command(name = "polyideal", version, about = "Polyomino ideals, toric ideals and zig-zag walks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    All,
    Simple,
    Holey,
}

#[derive(Clone, Copy, ValueEnum)]
enum Show {
    Minors,
    Gb,
    Toric,
    Compare,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate free polyominoes of a given rank
    Enumerate {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum, default_value = "all")]
        class: ClassArg,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for zig-zag walks
    Zigzag {
        /// Polyomino file, or a fixture name (two_ears, two_pf, square_frame, monomino)
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        all: bool,
    },
    /// Print generators of I_P or J_P
    Ideal {
        #[arg(long = "in")]
        input: String,
        #[arg(long, value_enum)]
        show: Show,
    },
    /// Build a grid polyomino
    Grid {
        #[arg(long)]
        m: i32,
        #[arg(long)]
        n: i32,
        /// Hole column ranges in vertex coordinates, e.g. "2-5,6-7"
        #[arg(long)]
        cols: String,
        #[arg(long)]
        rows: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify polyominoes as prime or not prime
    Classify {
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        rank: Option<usize>,
        #[arg(long = "in")]
        input: Option<String>,
        /// Worker threads (0 = all cores)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        resume: bool,
        /// Write elapsed_ms as 0 for reproducible output
        #[arg(long)]
        no_timing: bool,
        #[arg(long, default_value_t = Budget::default().max_basis)]
        max_basis: usize,
        #[arg(long, default_value_t = Budget::default().max_pairs)]
        max_pairs: usize,
    },
    /// Reproduce the published counts and examples
    VerifyPaper {
        #[arg(long, default_value_t = 10)]
        max_rank: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Print a polyomino as an ASCII grid
    Render {
        #[arg(long = "in")]
        input: String,
    },
}

type Result<T> = std::result::Result<T, Box<dyn std::error::Error>>;

fn load(input: &str) -> Result<Vec<Polyomino>> {
    let path = Path::new(input);
    if !path.exists() {
        if let Some(p) = fixtures::by_name(input) {
            return Ok(vec![p]);
        }
    }
    let shapes = parse_polyomino_list(path)?;
    if shapes.is_empty() {
        return Err(format!("{input}: no polyomino found").into());
    }
    Ok(shapes)
}

fn load_one(input: &str) -> Result<Polyomino> {
    let mut shapes = load(input)?;
    if shapes.len() > 1 {
        return Err(format!("{input}: expected a single polyomino, found {}", shapes.len()).into());
    }
    Ok(shapes.remove(0))
}

fn output(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn print_basis(w: &mut dyn Write, p: &Polyomino, gb: &GroebnerBasis) -> io::Result<()> {
    for g in gb.elements() {
        writeln!(w, "{}", binomial_to_string(g, p))?;
    }
    let hist: Vec<String> = gb.degree_histogram().iter().map(|(d, c)| format!("{d}:{c}")).collect();
    writeln!(w, "# {} elements, degrees {}", gb.len(), hist.join(" "))
}

fn run(cli: Cli) -> Result<bool> {
    let mut stdout = io::stdout().lock();
    match cli.command {
        Command::Enumerate { rank, class, count_only, out } => {
            let class = match class {
                ClassArg::All => Class::All,
                ClassArg::Simple => Class::Simple,
                ClassArg::Holey => Class::MultiplyConnected,
            };
            if count_only {
                let c = enumerate::count_by_class(rank)?;
                let n = match class {
                    Class::All => c.free,
                    Class::Simple => c.simple,
                    Class::MultiplyConnected => c.multiply_connected,
                };
                writeln!(stdout, "{n}")?;
            } else {
                let mut w = output(&out)?;
                for p in enumerate::stream_free(rank, class)? {
                    writeln!(w, "{}", cell_list(&p))?;
                }
                w.flush()?;
            }
        }
        Command::Zigzag { input, all } => {
            let p = load_one(&input)?;
            let mode = if all { SearchMode::All } else { SearchMode::First };
            let walks = find_zigzag(&p, mode);
            for (k, walk) in walks.iter().enumerate() {
                writeln!(stdout, "walk {} (length {})", k + 1, walk.len())?;
                for i in 0..walk.len() {
                    writeln!(
                        stdout,
                        "  I{} = {}  v={} z={} u={}",
                        i + 1,
                        walk.intervals[i],
                        walk.v[i],
                        walk.z[i],
                        walk.u[i]
                    )?;
                }
                let f = walk_binomial(&p, walk)?;
                writeln!(stdout, "  f_W = {}", binomial_to_string(&f, &p))?;
            }
            if walks.is_empty() {
                writeln!(stdout, "no zig-zag walk")?;
            }
        }
        Command::Ideal { input, show } => {
            let p = load_one(&input)?;
            let order = TermOrder::degrevlex(p.vertices().len());
            match show {
                Show::Minors => {
                    let minors = p.inner_2_minors();
                    for m in &minors {
                        writeln!(stdout, "{}", binomial_to_string(m, &p))?;
                    }
                    writeln!(stdout, "# {} inner 2-minors", minors.len())?;
                }
                Show::Gb => print_basis(&mut stdout, &p, &buchberger(&p.inner_2_minors(), &order))?,
                Show::Toric => {
                    let a = build_alpha_matrix(&p);
                    let kernel = integer_kernel(&a);
                    writeln!(
                        stdout,
                        "# matrix {}x{}, rank {}, kernel rank {}",
                        a.nrows(),
                        a.ncols(),
                        a.rank(),
                        kernel.dimension()
                    )?;
                    print_basis(&mut stdout, &p, &toric_ideal(&p))?;
                }
                Show::Compare => {
                    let ip = buchberger(&p.inner_2_minors(), &order);
                    let jp = toric_ideal(&p);
                    let minimal = minimalize(jp.elements())?;
                    let extra: Vec<_> = minimal.iter().filter(|g| !ip.contains(g)).collect();
                    writeln!(stdout, "# |GB(I_P)| = {}, |GB(J_P)| = {}", ip.len(), jp.len())?;
                    writeln!(stdout, "# minimal generators of J_P: {}", minimal.len())?;
                    writeln!(stdout, "# equal: {}", ip == jp)?;
                    for g in extra {
                        writeln!(stdout, "{}", binomial_to_string(g, &p))?;
                    }
                }
            }
        }
        Command::Grid { m, n, cols, rows, out } => {
            let spec = GridSpec::new(m, n, parse_blocks(&cols)?, parse_blocks(&rows)?);
            let p = make_grid(&spec)?;
            let mut w = output(&out)?;
            write!(w, "{}", render(&p))?;
            w.flush()?;
        }
        Command::Classify { rank, input, jobs, out, resume, no_timing, max_basis, max_pairs } => {
            let opts = BatchOptions {
                jobs,
                out: out.clone(),
                resume,
                classify: ClassifyOptions { budget: Budget { max_basis, max_pairs }, timing: !no_timing },
            };
            let result = match (rank, input) {
                (Some(r), _) => run_batch(r..=r, &opts)?,
                (None, Some(input)) => classify_batch(load(&input)?, &opts)?,
                (None, None) => unreachable!("clap requires one of --rank/--in"),
            };
            if out.is_none() {
                for r in &result.records {
                    writeln!(stdout, "{}", serialize_record(r))?;
                }
            }
            eprintln!("{}", serde_json::to_string(&result.summary)?);
            return Ok(result.summary.unresolved == 0 && result.summary.aborted == 0);
        }
        Command::VerifyPaper { max_rank, jobs } => {
            let report = verify_paper(max_rank, jobs)?;
            for c in &report.checks {
                writeln!(stdout, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
            }
            return Ok(report.passed());
        }
        Command::Render { input } => {
            for p in load(&input)? {
                write!(stdout, "{}", render(&p))?;
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
