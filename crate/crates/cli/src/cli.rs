//! Command-line surface.
//!
//! Exit codes: 0 when the graph is mixing or the command succeeded, 1 when it
//! is not mixing or a sequence fails verification, 2 for usage, parse and
//! input errors, 3 when the state budget is exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use recolor_core::explore::{self, ConfigSpace, ConfigStats};
use recolor_core::{
    apply_sequence, decide_mixing, non_mixing_witness, reduce, synthesize_k_phases, three_to_two, Budget,
    Certification, Coloring, Graph, Method, MixingVerdict, Reason,
};
use serde::Serialize;

use crate::dot;
use crate::error::CliError;
use crate::files::{self, ColoringFile, SequenceFile};

pub const MAX_STATES_ENV: &str = "RECOLOR_MAX_STATES";

#[derive(Debug, Parser)]
#[command(name = "recolor", version, about = "Recoloring reconfiguration and k-mixing")]
struct Cli {
    /// Print a machine-readable JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Refuse configuration spaces whose k^n estimate exceeds this.
    #[arg(long, global = true, env = MAX_STATES_ENV, default_value_t = explore::DEFAULT_MAX_STATES)]
    max_states: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Brute,
    Lemma3,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Brute => Method::Brute,
            MethodArg::Lemma3 => Method::Lemma3,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the graph is k-mixing.
    Decide {
        #[arg(long)]
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Decide whether every 3-coloring can reach a 2-coloring.
    ThreeToTwo {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Join a bipartite graph with a clique on k-3 vertices.
    Reduce {
        #[arg(long)]
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Build a recoloring sequence between two colorings of a reduction instance.
    Synthesize {
        /// The bipartite source graph B.
        #[arg(long)]
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Replay a recoloring sequence and report the final coloring.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        steps: PathBuf,
    },
    /// Census of the configuration graph.
    Explore {
        #[arg(long)]
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        /// Write the configuration graph in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Print statistics (default when --dot is absent).
        #[arg(long)]
        stats: bool,
    },
    /// List frozen colorings in lexicographic order.
    Frozen {
        #[arg(long)]
        graph: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Emit two colorings of the reduction instance in different components.
    Witness {
        /// The bipartite source graph B.
        #[arg(long)]
        graph: PathBuf,
        #[arg(short)]
        k: usize,
        /// Also write `<prefix>.from.json` and `<prefix>.to.json`.
        #[arg(long)]
        out_prefix: Option<PathBuf>,
    },
}

struct Ctx<'a> {
    json: bool,
    budget: Budget,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit<T: Serialize>(
        &mut self,
        report: &T,
        human: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
    ) -> Result<(), CliError> {
        let res = if self.json {
            writeln!(
                self.out,
                "{}",
                serde_json::to_string(report).expect("reports serialize")
            )
        } else {
            human(self.out)
        };
        res.and_then(|()| self.out.flush())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            })
    }

    fn warn(&mut self, msg: &str) {
        let _ = writeln!(self.err, "warning: {msg}");
    }

    fn note(&mut self, msg: &str) {
        let _ = writeln!(self.err, "note: {msg}");
    }

    fn load_graph(&mut self, path: &Path) -> Result<Graph, CliError> {
        let parsed = files::read_graph(path)?;
        if parsed.duplicates > 0 {
            let msg = format!(
                "{}: merged {} duplicate edge(s)",
                path.display(),
                parsed.duplicates
            );
            self.warn(&msg);
        }
        Ok(parsed.graph)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let mut ctx = Ctx {
        json: cli.json,
        budget: Budget::new(cli.max_states),
        out,
        err,
    };
    match execute(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            e.exit_code()
        }
    }
}

#[derive(Serialize)]
struct VerdictReport {
    mixing: bool,
    reason: &'static str,
    witness: Option<ColoringFile>,
}

impl From<&MixingVerdict> for VerdictReport {
    fn from(v: &MixingVerdict) -> Self {
        let reason = match v.reason {
            Reason::NonBipartite => "NonBipartite",
            Reason::FrozenWitness(_) => "FrozenWitness",
            Reason::StuckWitness(_) => "StuckWitness",
            Reason::Connected => "Connected",
            Reason::VacuousNoColorings => "VacuousNoColorings",
        };
        VerdictReport {
            mixing: v.answer,
            reason,
            witness: v.witness().map(ColoringFile::from),
        }
    }
}

#[derive(Serialize)]
struct StatsReport {
    num_colorings: u64,
    num_components: u64,
    num_frozen: u64,
    is_connected: bool,
    largest_component: u64,
}

impl From<ConfigStats> for StatsReport {
    fn from(s: ConfigStats) -> Self {
        StatsReport {
            num_colorings: s.num_colorings,
            num_components: s.num_components,
            num_frozen: s.num_frozen,
            is_connected: s.is_connected,
            largest_component: s.largest_component,
        }
    }
}

fn print_verdict(ctx: &mut Ctx<'_>, v: &MixingVerdict) -> Result<i32, CliError> {
    if v.reason == Reason::VacuousNoColorings {
        ctx.warn("the graph has no proper coloring with this palette; the answer holds vacuously");
    }
    let report = VerdictReport::from(v);
    ctx.emit(&report, |w| {
        writeln!(w, "mixing: {}", if v.answer { "yes" } else { "no" })?;
        writeln!(w, "reason: {}", report.reason)?;
        if let Some(c) = v.witness() {
            writeln!(w, "witness: {c}")?;
        }
        Ok(())
    })?;
    Ok(if v.answer { 0 } else { 1 })
}

fn check_palette(c: &Coloring, k: usize, path: &Path) -> Result<(), CliError> {
    if c.k() != k {
        return Err(CliError::Usage(format!(
            "{}: coloring declares k = {}, but -k {k} was given",
            path.display(),
            c.k()
        )));
    }
    Ok(())
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".reduction.json");
    PathBuf::from(s)
}

#[derive(Serialize)]
struct ReductionSidecar {
    k: usize,
    b_range: [usize; 2],
    x_range: [usize; 2],
}

fn execute(command: Command, ctx: &mut Ctx<'_>) -> Result<i32, CliError> {
    match command {
        Command::Decide { graph, k, method } => {
            let g = ctx.load_graph(&graph)?;
            let verdict = decide_mixing(&g, k, method.into(), ctx.budget)?;
            print_verdict(ctx, &verdict)
        }
        Command::ThreeToTwo { graph } => {
            let g = ctx.load_graph(&graph)?;
            if g.bipartition().is_none() {
                ctx.note("the graph is not bipartite; every proper 3-coloring uses three colors");
            }
            let verdict = three_to_two(&g, ctx.budget)?;
            print_verdict(ctx, &verdict)
        }
        Command::Reduce { graph, k, out } => {
            let b = ctx.load_graph(&graph)?;
            if k < 4 {
                return Err(CliError::Usage(format!("reduce needs k >= 4, got {k}")));
            }
            let inst = match reduce(&b, k) {
                Err(recolor_core::Error::NotBipartite) => {
                    ctx.note("B is not bipartite, so the source is a no instance; nothing written");
                    return Ok(1);
                }
                other => other?,
            };
            let sidecar = ReductionSidecar {
                k,
                b_range: [inst.b_range().start, inst.b_range().end],
                x_range: [inst.x_range().start, inst.x_range().end],
            };
            files::write_text(&out, &crate::dimacs::serialize_graph(inst.graph()))?;
            let side = sidecar_path(&out);
            files::write_text(&side, &files::to_text(&sidecar))?;
            ctx.emit(&sidecar, |w| {
                writeln!(
                    w,
                    "wrote {} ({} vertices, {} edges); X = {}..{}",
                    out.display(),
                    inst.graph().n(),
                    inst.graph().edge_count(),
                    sidecar.x_range[0],
                    sidecar.x_range[1]
                )?;
                writeln!(w, "wrote {}", side.display())
            })?;
            Ok(0)
        }
        Command::Synthesize {
            graph,
            k,
            from,
            to,
            out,
        } => {
            let b = ctx.load_graph(&graph)?;
            if k < 4 {
                return Err(CliError::Usage(format!("synthesize needs k >= 4, got {k}")));
            }
            let inst = match reduce(&b, k) {
                Err(recolor_core::Error::NotBipartite) => {
                    ctx.note("B is not bipartite; the reduction instance is a no instance");
                    return Ok(1);
                }
                other => other?,
            };
            let c1 = files::read_coloring(&from)?;
            let c2 = files::read_coloring(&to)?;
            check_palette(&c1, k, &from)?;
            check_palette(&c2, k, &to)?;
            let phases = match synthesize_k_phases(&inst, &c1, &c2, ctx.budget) {
                Err(recolor_core::Error::NotMixing) => {
                    let _ = writeln!(
                        ctx.err,
                        "error: B fails the 3-to-2 test; the instance is not {k}-mixing"
                    );
                    return Ok(1);
                }
                other => other?,
            };
            let seq = phases.sequence();
            let end = apply_sequence(inst.graph(), &c1, &seq)?;
            if end != c2 {
                return Err(CliError::Internal(format!(
                    "synthesized sequence ends at {end}, not at {c2}"
                )));
            }
            files::write_text(&out, &files::to_text(&SequenceFile::from(&seq)))?;
            #[derive(Serialize)]
            struct Report {
                length: usize,
                normalize: usize,
                lifted: usize,
                unwind: usize,
                verified: bool,
            }
            let report = Report {
                length: seq.len(),
                normalize: phases.normalize.len(),
                lifted: phases.lifted.len(),
                unwind: phases.unwind.len(),
                verified: true,
            };
            ctx.emit(&report, |w| {
                writeln!(
                    w,
                    "wrote {} steps to {} (normalize {}, lifted {}, unwind {}); verified",
                    report.length,
                    out.display(),
                    report.normalize,
                    report.lifted,
                    report.unwind
                )
            })?;
            Ok(0)
        }
        Command::Verify {
            graph,
            k,
            from,
            steps,
        } => {
            let g = ctx.load_graph(&graph)?;
            let start = files::read_coloring(&from)?;
            check_palette(&start, k, &from)?;
            let seq = files::read_sequence(&steps)?;
            #[derive(Serialize)]
            struct Report {
                valid: bool,
                steps: usize,
                #[serde(skip_serializing_if = "Option::is_none")]
                final_coloring: Option<ColoringFile>,
                #[serde(skip_serializing_if = "Option::is_none")]
                error: Option<String>,
            }
            let result = apply_sequence(&g, &start, &seq);
            let report = Report {
                valid: result.is_ok(),
                steps: seq.len(),
                final_coloring: result.as_ref().ok().map(ColoringFile::from),
                error: result.as_ref().err().map(|e| e.to_string()),
            };
            ctx.emit(&report, |w| match &result {
                Ok(end) => writeln!(w, "valid: {} steps\nfinal: {end}", seq.len()),
                Err(e) => writeln!(w, "invalid: {e}"),
            })?;
            Ok(if result.is_ok() { 0 } else { 1 })
        }
        Command::Explore {
            graph,
            k,
            dot: dot_path,
            stats,
        } => {
            let g = ctx.load_graph(&graph)?;
            let space = ConfigSpace::build(&g, k, ctx.budget)?;
            let st = space.stats();
            if st.num_colorings == 0 {
                ctx.warn("the graph has no proper coloring with this palette");
            }
            if let Some(path) = &dot_path {
                files::write_text(path, &dot::export_config_dot(&g, k, ctx.budget)?)?;
            }
            if stats || dot_path.is_none() || ctx.json {
                let report = StatsReport::from(st);
                ctx.emit(&report, |w| {
                    writeln!(w, "num_colorings: {}", st.num_colorings)?;
                    writeln!(w, "num_components: {}", st.num_components)?;
                    writeln!(w, "num_frozen: {}", st.num_frozen)?;
                    writeln!(w, "is_connected: {}", st.is_connected)?;
                    writeln!(w, "largest_component: {}", st.largest_component)
                })?;
            }
            Ok(0)
        }
        Command::Frozen { graph, k } => {
            let g = ctx.load_graph(&graph)?;
            let space = ConfigSpace::build(&g, k, ctx.budget)?;
            let census = space.census();
            let frozen: Vec<Coloring> = (0..space.len())
                .filter(|&i| census.frozen[i])
                .map(|i| space.coloring(i))
                .collect();
            let report: Vec<ColoringFile> = frozen.iter().map(ColoringFile::from).collect();
            ctx.emit(&report, |w| {
                for c in &frozen {
                    writeln!(w, "{c}")?;
                }
                writeln!(w, "{} frozen coloring(s)", frozen.len())
            })?;
            Ok(0)
        }
        Command::Witness { graph, k, out_prefix } => {
            let b = ctx.load_graph(&graph)?;
            if k < 4 {
                return Err(CliError::Usage(format!("witness needs k >= 4, got {k}")));
            }
            let inst = match reduce(&b, k) {
                Err(recolor_core::Error::NotBipartite) => {
                    ctx.note("B is not bipartite; no reduction instance to witness");
                    return Ok(1);
                }
                other => other?,
            };
            let verdict = three_to_two(&b, ctx.budget)?;
            let Some(stuck) = verdict.witness() else {
                #[derive(Serialize)]
                struct NoWitness {
                    mixing: bool,
                }
                ctx.emit(&NoWitness { mixing: true }, |w| {
                    writeln!(
                        w,
                        "no witness: every 3-coloring of B reaches a 2-coloring, the instance is {k}-mixing"
                    )
                })?;
                return Ok(0);
            };
            let pair = non_mixing_witness(&inst, stuck, ctx.budget)?;
            let certification = match pair.certification {
                Certification::Exhaustive => "exhaustive",
                Certification::FrozenClique => "frozen-clique",
            };
            if let Some(prefix) = &out_prefix {
                let mut from = prefix.as_os_str().to_owned();
                from.push(".from.json");
                let mut to = prefix.as_os_str().to_owned();
                to.push(".to.json");
                files::write_text(Path::new(&from), &files::to_text(&ColoringFile::from(&pair.from)))?;
                files::write_text(Path::new(&to), &files::to_text(&ColoringFile::from(&pair.to)))?;
            }
            #[derive(Serialize)]
            struct Report {
                mixing: bool,
                from: ColoringFile,
                to: ColoringFile,
                certification: &'static str,
            }
            let report = Report {
                mixing: false,
                from: (&pair.from).into(),
                to: (&pair.to).into(),
                certification,
            };
            ctx.emit(&report, |w| {
                writeln!(w, "from: {}", pair.from)?;
                writeln!(w, "to: {}", pair.to)?;
                writeln!(w, "certification: {certification}")
            })?;
            Ok(1)
        }
    }
}
