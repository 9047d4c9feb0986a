//! The `kfactor` command line. Mathematical results (factors, certificates,
//! witnesses, stuck reports) go to files; status lines go to stdout.
//!
//! Exit codes: 0 success, 1 suite failure, 2 certified non-existence,
//! 3 stuck, 4 hypothesis violated, 64 usage or input error.

pub mod verify;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::connector::{
    connected_k_factor, hamilton_s13, threshold_c, threshold_c_formula, threshold_c_prime, ConnectError, HamiltonCycle,
};
use crate::engine::{find_f_factor, DegreeDemand, FactorOutcome};
use crate::graph::{parse_graph, BipartiteGraph, Factor};
use crate::oracle::{generate, GenModel, GenSpec, ModelName, MAX_CLASS};
use crate::structure::{audit_layer_inequalities, build_layering, classify_s12_free, find_induced_star};
use verify::{run_suite, SuiteName, VerifySuite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SUITE_FAILED: i32 = 1;
pub const EXIT_CERTIFIED: i32 = 2;
pub const EXIT_STUCK: i32 = 3;
pub const EXIT_HYPOTHESIS: i32 = 4;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "kfactor",
    version,
    about = "Connected k-factors in balanced bipartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GraphArgs {
    /// Graph file (`bipartite <nX> <nY> <m>` then m edge lines).
    graph: PathBuf,
    /// Output file; defaults to the graph path with a result extension.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find a k-factor or a violator certificate.
    Factor {
        #[command(flatten)]
        io: GraphArgs,
        #[arg(long)]
        k: usize,
    },
    /// Find a connected k-factor of an S_{k,l}-free graph.
    Connect {
        #[command(flatten)]
        io: GraphArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Hamilton cycle of an S_{1,3}-free graph with minimum degree 4.
    Hamilton {
        #[command(flatten)]
        io: GraphArgs,
    },
    /// Search for an induced S_{k,l}.
    Detect {
        #[command(flatten)]
        io: GraphArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Classify a connected graph as a path, even cycle, complete bipartite
    /// minus a matching, or not S_{1,2}-free.
    Classify { graph: PathBuf },
    /// Layer the graph around a minimal violator of f = k and audit the
    /// layer inequalities.
    Layers {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Write a seeded graph.
    Generate {
        /// k-minus-matching, double-cycle, k-regular-union or min-degree-random.
        #[arg(long)]
        model: String,
        #[arg(long)]
        n: Option<usize>,
        /// Regularity, or the minimum degree for min-degree-random.
        #[arg(long)]
        k: Option<usize>,
        /// Half-length of the cycle for double-cycle.
        #[arg(long)]
        m: Option<usize>,
        /// Number of removed pairs for k-minus-matching (default n).
        #[arg(long)]
        removed: Option<usize>,
        /// Edge probability for min-degree-random.
        #[arg(long, default_value_t = 0.0)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a degree threshold: c(k,l), or c'(k,l,m) when m is given.
    Threshold {
        k_pos: Option<i64>,
        l_pos: Option<i64>,
        m_pos: Option<i64>,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        l: Option<i64>,
        #[arg(long)]
        m: Option<i64>,
        /// Evaluate c(k,l) without the 2 <= k <= l check.
        #[arg(long)]
        raw: bool,
    },
    /// Run a verification suite.
    Verify {
        /// cor4, cor5, thm3, oracle-eq, prop-s12 or sharp-s13.
        suite: String,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Class-size bound for the exhaustive suites.
        #[arg(long)]
        n: Option<usize>,
    },
}

/// Failure carried to the exit code, with a message for stderr.
struct Exit(i32, String);

impl Exit {
    fn usage(msg: impl std::fmt::Display) -> Self {
        Exit(EXIT_USAGE, msg.to_string())
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(err, "{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Exit(code, msg)) => {
            let _ = writeln!(err, "{msg}");
            code
        }
    }
}

fn read_graph(path: &Path) -> Result<BipartiteGraph, Exit> {
    let text = fs::read_to_string(path).map_err(|e| Exit::usage(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| Exit::usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Exit> {
    fs::write(path, text).map_err(|e| Exit::usage(format!("cannot write {}: {e}", path.display())))
}

fn target(io: &GraphArgs, extension: &str) -> PathBuf {
    io.out.clone().unwrap_or_else(|| io.graph.with_extension(extension))
}

fn say(out: &mut dyn Write, line: impl std::fmt::Display) {
    let _ = writeln!(out, "{line}");
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Exit> {
    match command {
        Command::Factor { io, k } => {
            let g = read_graph(&io.graph)?;
            let f = DegreeDemand::uniform(&g, k);
            match find_f_factor(&g, &f).map_err(Exit::usage)? {
                FactorOutcome::Factor(factor) => {
                    let path = target(&io, "factor");
                    write_file(&path, &factor.to_text().map_err(Exit::usage)?)?;
                    say(out, format!("FACTOR {k} {} {}", factor.edges().len(), path.display()));
                    Ok(EXIT_OK)
                }
                FactorOutcome::Violator(cert) => {
                    let path = target(&io, "violator");
                    write_file(&path, &cert.to_text())?;
                    say(
                        out,
                        format!(
                            "VIOLATOR {} {} {} {}",
                            cert.set.len(),
                            cert.lhs,
                            cert.rhs,
                            path.display()
                        ),
                    );
                    Ok(EXIT_CERTIFIED)
                }
            }
        }
        Command::Connect { io, k, l } => {
            let g = read_graph(&io.graph)?;
            match connected_k_factor(&g, k, l) {
                Ok(factor) => {
                    let path = target(&io, "factor");
                    write_file(&path, &factor_text(factor)?)?;
                    say(out, format!("CONNECTED {k} {}", path.display()));
                    Ok(EXIT_OK)
                }
                Err(e) => connect_failure(&io, e, out),
            }
        }
        Command::Hamilton { io } => {
            let g = read_graph(&io.graph)?;
            match hamilton_s13(&g) {
                Ok(cycle) => {
                    let path = target(&io, "factor");
                    write_file(&path, &cycle.to_string())?;
                    say(out, format!("HAMILTON {} {}", cycle.len(), path.display()));
                    Ok(EXIT_OK)
                }
                Err(e) => connect_failure(&io, e, out),
            }
        }
        Command::Detect { io, k, l } => {
            let g = read_graph(&io.graph)?;
            match find_induced_star(&g, k, l) {
                Some(w) => {
                    let text = w.to_text();
                    if let Some(path) = &io.out {
                        write_file(path, &text)?;
                    }
                    let _ = write!(out, "{text}");
                }
                None => say(out, "FREE"),
            }
            Ok(EXIT_OK)
        }
        Command::Classify { graph } => {
            let g = read_graph(&graph)?;
            let class = classify_s12_free(&g).map_err(|e| Exit(EXIT_HYPOTHESIS, e.to_string()))?;
            let _ = write!(out, "{}", class.to_text());
            Ok(EXIT_OK)
        }
        Command::Layers { graph, k, l } => {
            let g = read_graph(&graph)?;
            match find_f_factor(&g, &DegreeDemand::uniform(&g, k)).map_err(Exit::usage)? {
                FactorOutcome::Factor(_) => {
                    say(out, format!("FACTOR-EXISTS {k}"));
                    Ok(EXIT_OK)
                }
                FactorOutcome::Violator(cert) => {
                    let layering = build_layering(&g, &cert.set, k).map_err(Exit::usage)?;
                    for v in &layering.uncovered {
                        say(out, format!("UNCOVERED {v}"));
                    }
                    let _ = write!(out, "{}", audit_layer_inequalities(&g, &layering, k, l));
                    Ok(EXIT_CERTIFIED)
                }
            }
        }
        Command::Generate {
            model,
            n,
            k,
            m,
            removed,
            p,
            seed,
            out: path,
        } => {
            let need = |v: Option<usize>, flag: &str| {
                v.ok_or_else(|| Exit::usage(format!("--{flag} is required for --model {model}")))
            };
            let name: ModelName = model.parse().map_err(Exit::usage)?;
            let model = match name {
                ModelName::KMinusMatching => {
                    let n = need(n, "n")?;
                    GenModel::KMinusMatching {
                        n,
                        removed: removed.unwrap_or(n),
                    }
                }
                ModelName::DoubleCycle => GenModel::DoubleCycle { m: need(m, "m")? },
                ModelName::KRegularUnion => GenModel::KRegularUnion {
                    n: need(n, "n")?,
                    k: need(k, "k")?,
                },
                ModelName::MinDegreeRandom => GenModel::MinDegreeRandom {
                    n: need(n, "n")?,
                    delta: need(k, "k")?,
                    p,
                },
            };
            let g = generate(&GenSpec::new(model, seed)).map_err(Exit::usage)?;
            match path {
                Some(path) => {
                    write_file(&path, &g.to_text())?;
                    say(
                        out,
                        format!("GRAPH {} {} {} {}", g.nx(), g.ny(), g.edge_count(), path.display()),
                    );
                }
                None => {
                    let _ = write!(out, "{}", g.to_text());
                }
            }
            Ok(EXIT_OK)
        }
        Command::Threshold {
            k_pos,
            l_pos,
            m_pos,
            k,
            l,
            m,
            raw,
        } => {
            let k = k.or(k_pos).ok_or_else(|| Exit::usage("threshold needs k"))?;
            let l = l.or(l_pos).ok_or_else(|| Exit::usage("threshold needs l"))?;
            let value = match (m.or(m_pos), raw) {
                (Some(_), true) => return Err(Exit::usage("--raw applies to c(k,l) only")),
                (Some(m), false) => {
                    if k < 1 || l < 1 || m < 1 {
                        return Err(Exit::usage("threshold needs k, l, m >= 1"));
                    }
                    threshold_c_prime(k as usize, l as usize, m as usize)
                }
                (None, true) => threshold_c_formula(k, l),
                (None, false) => {
                    if k < 0 || l < 0 {
                        return Err(Exit::usage(format!("need 2 <= k <= l, got k={k}, l={l}")));
                    }
                    threshold_c(k as usize, l as usize).map_err(Exit::usage)?
                }
            };
            say(out, value);
            Ok(EXIT_OK)
        }
        Command::Verify { suite, trials, seed, n } => {
            let name: SuiteName = suite.parse().map_err(Exit::usage)?;
            let mut suite = VerifySuite::new(name, seed);
            if let Some(t) = trials {
                if t == 0 {
                    return Err(Exit::usage("--trials must be at least 1"));
                }
                suite.trials = t;
            }
            if let Some(n) = n {
                if n == 0 || n > MAX_CLASS {
                    return Err(Exit::usage(format!("--n must be in 1..={MAX_CLASS}")));
                }
                suite.max_n = n;
            }
            let report = run_suite(&suite);
            let _ = write!(out, "{}", report.render());
            Ok(if report.all_pass() { EXIT_OK } else { EXIT_SUITE_FAILED })
        }
    }
}

/// Factor file; for a connected 2-factor, followed by its `cycle` line.
fn factor_text(factor: Factor) -> Result<String, Exit> {
    if factor.regularity() == Some(2) {
        let cycle = HamiltonCycle::from_factor(factor).map_err(Exit::usage)?;
        Ok(cycle.to_string())
    } else {
        factor.to_text().map_err(Exit::usage)
    }
}

fn connect_failure(io: &GraphArgs, e: ConnectError, out: &mut dyn Write) -> Result<i32, Exit> {
    match e {
        ConnectError::HypothesisViolated(h) => Err(Exit(EXIT_HYPOTHESIS, format!("hypothesis violated: {h}"))),
        ConnectError::ParamOrder { .. } => Err(Exit::usage(e)),
        ConnectError::NoFactor(cert) => {
            let path = target(io, "violator");
            write_file(&path, &cert.to_text())?;
            say(
                out,
                format!(
                    "VIOLATOR {} {} {} {}",
                    cert.set.len(),
                    cert.lhs,
                    cert.rhs,
                    path.display()
                ),
            );
            Ok(EXIT_CERTIFIED)
        }
        ConnectError::TheoremContradiction(report) | ConnectError::StructureUnrecognized(report) => {
            let path = target(io, "stuck");
            write_file(&path, &report.to_string())?;
            say(
                out,
                format!("STUCK {} {}", report.factor.component_count(), path.display()),
            );
            Ok(EXIT_STUCK)
        }
        other => Err(Exit::usage(other)),
    }
}
