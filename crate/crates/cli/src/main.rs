use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use simplex_collapse::collapse::{core_erosion, random_discrete_morse, search_collapse, Certificate, SearchBudget};
use simplex_collapse::constructions::{construct_stuck, Outcome};
use simplex_collapse::duality::{alexander_dual, is_anticollapsible};
use simplex_collapse::homology::{field_betti, homology, Coefficients};
use simplex_collapse::hypertree::{kruskal_generate, survey, survey_csv_row, SURVEY_CSV_HEADER};
use simplex_collapse::{Error, Face, SimplicialComplex};

mod reproduce;

const FAILED: u8 = 1;
const USAGE: u8 = 2;
const REFUSED: u8 = 3;

#[derive(Parser)]
#[command(name = "simplex-collapse", version, about = "Collapses, anticollapses and stuck complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced homology of a facet file.
    Homology {
        file: PathBuf,
        /// `z` (integers), `q`, or a prime p.
        #[arg(long, default_value = "z")]
        field: String,
    },
    /// Alexander dual inside the ground set.
    Dual {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a collapse to a single vertex.
    Collapse {
        file: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Search for an anticollapse to the full simplex.
    Anticollapse {
        file: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Random discrete Morse vectors, one per line.
    Rdm {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        trials: u64,
        #[arg(long)]
        seed: Seed,
    },
    /// Top-dimensional erosion; exits 1 when a core survives.
    Core {
        file: PathBuf,
        /// Write the core's facet file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A random d-hypertree on n vertices.
    Kruskal {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        seed: Seed,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify many random hypertrees.
    Survey {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: Seed,
        #[arg(long, default_value_t = 64)]
        restarts: u32,
        /// CSV with one row per trial.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A d-complex on n vertices with no free faces that anticollapses.
    Construct {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        seed: Seed,
        /// Directory for the facet file and certificate.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replays a certificate; exits 0 iff it is valid.
    VerifyCert {
        file: PathBuf,
        cert: PathBuf,
        /// Accept certificates that use steps with an empty free face.
        #[arg(long)]
        allow_trivial: bool,
    },
    /// Checks the catalog, golden files and construction matrix.
    Reproduce {
        /// Skip the survey rows.
        #[arg(long)]
        quick: bool,
        #[arg(long)]
        data_dir: Option<PathBuf>,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    seed: Seed,
    /// Randomized restarts before the exhaustive stage.
    #[arg(long, default_value_t = 64)]
    budget: u32,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug)]
enum Seed {
    Fixed(u64),
    Auto,
}

impl FromStr for Seed {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "auto" {
            return Ok(Seed::Auto);
        }
        s.parse().map(Seed::Fixed).map_err(|_| format!("expected an integer or 'auto', got {s:?}"))
    }
}

impl Seed {
    fn resolve(self) -> u64 {
        match self {
            Seed::Fixed(s) => s,
            Seed::Auto => {
                let t = SystemTime::now().duration_since(UNIX_EPOCH).unwrap_or_default();
                let s = t.as_nanos() as u64;
                eprintln!("seed: {s}");
                s
            }
        }
    }
}

enum Failure {
    Code(u8, String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Run = Result<u8, Failure>;

fn read_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Code(USAGE, format!("{}: {e}", path.display())))?;
    Ok(SimplicialComplex::parse_facet_file(&text)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Code(USAGE, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn with_seed_header(seed: u64, body: &str) -> String {
    format!("# seed {seed}\n{body}")
}

fn parse_field(s: &str) -> Result<Coefficients, Failure> {
    let field = match s.to_ascii_lowercase().as_str() {
        "z" => Coefficients::Integers,
        "q" => Coefficients::Rationals,
        p => match p.parse() {
            Ok(p) => Coefficients::Prime(p),
            Err(_) => return Err(Failure::Code(USAGE, format!("unknown field {s:?}"))),
        },
    };
    Ok(field.validate()?)
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Homology { file, field } => {
            let x = read_complex(&file)?;
            match parse_field(&field)? {
                Coefficients::Integers => print!("{}", homology(&x)?),
                f => {
                    let betti = field_betti(&x, f)?;
                    if betti.first() == Some(&1) {
                        println!("dim -1: betti=1");
                    }
                    for (k, b) in betti.iter().skip(1).enumerate() {
                        println!("dim {k}: betti={b}");
                    }
                }
            }
            Ok(0)
        }
        Command::Dual { file, out } => {
            let x = read_complex(&file)?;
            let d = alexander_dual(&x);
            let n = d.ground_size() as u32;
            let mut text = d.to_facet_file();
            if d.ground() == Face::range(n) && !text.starts_with("ground") {
                text = format!("ground {n}\n{text}");
            }
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Collapse { file, search } => certificate_search(&file, &search, false),
        Command::Anticollapse { file, search } => certificate_search(&file, &search, true),
        Command::Rdm { file, trials, seed } => {
            let x = read_complex(&file)?;
            let seed = seed.resolve();
            println!("# seed {seed}");
            for t in 0..trials {
                let run = random_discrete_morse(&x, simplex_collapse::rng::derive_seed(seed, t));
                println!("{}", run.morse);
            }
            Ok(0)
        }
        Command::Core { file, out } => {
            let x = read_complex(&file)?;
            let e = core_erosion(&x);
            println!("d-collapsible: {}", e.d_collapsible);
            match e.core() {
                Some(core) => {
                    println!("core f-vector: {:?}", core.f_vector());
                    if let Some(p) = out {
                        emit(Some(&p), &core.to_facet_file())?;
                    }
                    Ok(FAILED)
                }
                None => Ok(0),
            }
        }
        Command::Kruskal { n, d, seed, out } => {
            let seed = seed.resolve();
            let x = kruskal_generate(n, d, seed)?;
            emit(out.as_deref(), &with_seed_header(seed, &x.to_facet_file()))?;
            Ok(0)
        }
        Command::Survey { n, d, trials, seed, restarts, out } => {
            let seed = seed.resolve();
            let budget = SearchBudget {
                restarts,
                ..SearchBudget::default()
            };
            let (reports, summary) = survey(n, d, trials, seed, budget)?;
            if let Some(p) = out {
                let mut csv = format!("# seed {seed}\n{SURVEY_CSV_HEADER}\n");
                for r in &reports {
                    csv.push_str(&survey_csv_row(r));
                    csv.push('\n');
                }
                emit(Some(&p), &csv)?;
            }
            println!("seed: {seed}");
            println!("{summary}");
            Ok(0)
        }
        Command::Construct { n, d, seed, out } => {
            let seed = seed.resolve();
            match construct_stuck(n, d, seed)? {
                Outcome::Refused(r) => {
                    println!("{r}");
                    Ok(REFUSED)
                }
                Outcome::Built(c) => {
                    for step in &c.route {
                        eprintln!("{step}");
                    }
                    let facets = with_seed_header(seed, &c.complex.to_facet_file());
                    match out {
                        Some(dir) => {
                            fs::create_dir_all(&dir)
                                .map_err(|e| Failure::Code(USAGE, format!("{}: {e}", dir.display())))?;
                            let stem = format!("stuck_n{n}_d{d}");
                            emit(Some(&dir.join(format!("{stem}.facets"))), &facets)?;
                            let cert = with_seed_header(seed, &c.certificate.to_json());
                            emit(Some(&dir.join(format!("{stem}.anticollapse.cert"))), &cert)?;
                            println!("f-vector {:?}, {} steps", c.complex.f_vector(), c.certificate.len());
                        }
                        None => print!("{facets}"),
                    }
                    Ok(0)
                }
            }
        }
        Command::VerifyCert { file, cert, allow_trivial } => {
            let x = read_complex(&file)?;
            let text = fs::read_to_string(&cert).map_err(|e| Failure::Code(USAGE, format!("{}: {e}", cert.display())))?;
            let c = Certificate::from_json(&text)?;
            if c.allow_trivial && !allow_trivial {
                return Err(Failure::Code(FAILED, "certificate uses trivial steps; pass --allow-trivial".into()));
            }
            let end = c.replay(&x)?;
            println!("ok: {} {} steps, end f-vector {:?}", kind_name(&c), c.len(), end.f_vector());
            Ok(0)
        }
        Command::Reproduce { quick, data_dir, trials } => {
            let dir = data_dir.unwrap_or_else(reproduce::default_data_dir);
            Ok(reproduce::run(&dir, quick, trials))
        }
    }
}

fn kind_name(c: &Certificate) -> &'static str {
    match c.kind {
        simplex_collapse::collapse::Direction::Collapse => "collapse",
        simplex_collapse::collapse::Direction::Anticollapse => "anticollapse",
    }
}

fn certificate_search(file: &Path, search: &SearchArgs, anti: bool) -> Run {
    let x = read_complex(file)?;
    let seed = search.seed.resolve();
    let budget = SearchBudget {
        restarts: search.budget,
        ..SearchBudget::default()
    };
    let found = if anti {
        is_anticollapsible(&x, budget, seed)
    } else {
        search_collapse(&x, budget, seed)
    };
    match found {
        Some(c) => {
            emit(search.out.as_deref(), &with_seed_header(seed, &c.to_json()))?;
            eprintln!("found {} steps", c.len());
            Ok(0)
        }
        None => {
            let what = if anti { "anticollapse" } else { "collapse" };
            eprintln!("no {what} found within budget (seed {seed})");
            Ok(FAILED)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Code(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Step { .. } | Error::Certificate(_) | Error::Budget(_) => FAILED,
                _ => USAGE,
            };
            ExitCode::from(code)
        }
    }
}
