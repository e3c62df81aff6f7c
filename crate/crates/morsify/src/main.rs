use std::error::Error;
use std::fmt::Display;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use morsify::acceptance;
use morsify::agquiver::quiver_of_divide;
use morsify::braid::{
    beta_of_fence_word, beta_of_scannable, delta_divisibility, left_normal_form, positive_isotopic,
    solid_torus_isotopic, BraidWord,
};
use morsify::divide::{apply_yb, klein_act, lissajous, overlay, yb_sites, Klein, PlanarDivide, ScannableDivide};
use morsify::link::{
    alexander_of_diagram, closure, fingerprint_of_diagram, format_jones, jones, LinkDiagram, DEFAULT_CAP,
};
use morsify::plabic::{
    admissible_orientation, attach_plabic, enumerate_moves, fence_of_divide, fence_of_word, link_of_oriented_plabic,
    move_equivalent, quiver_of_plabic, word_of_fence, yb_as_moves, Color, FenceWord, MoveSearch, PlabicGraph,
    PlabicMove, TailSpec,
};
use morsify::quiver::{mutation_equivalent, MutationSearch, Quiver};
use morsify::search::{Budget, Verdict};

type Res<T> = Result<T, Box<dyn Error>>;

/// Divides, quivers, plabic graphs and positive braids.
///
/// Inputs are file paths, `-` for standard input, or the text itself when no
/// such file exists. Formats are told apart by extension (.sdv .pdv .qvr .plb
/// .fw .pd .brd) or else by their first keyword.
#[derive(Parser)]
#[command(name = "morsify", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: Format,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Plain,
    Machine,
}

#[derive(Args)]
struct BudgetArgs {
    /// State cap for searches.
    #[arg(long, global = true)]
    states: Option<usize>,
    /// Depth cap for searches.
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Time cap for searches, in seconds.
    #[arg(long, global = true)]
    seconds: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self, default: Budget) -> Budget {
        Budget {
            states: self.states.unwrap_or(default.states),
            depth: self.depth.or(default.depth),
            seconds: self.seconds.or(default.seconds),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KleinArg {
    Id,
    FlipH,
    FlipV,
    Rot180,
}

#[derive(Subcommand)]
enum Cmd {
    /// Checks a divide or a plabic graph.
    Validate { input: String },
    /// Regions of a divide and its cell count.
    Regions { input: String },
    /// Quiver of a divide, a plabic graph or a fence word.
    Quiver { input: String },
    /// Mutates a quiver along a sequence of vertices.
    Mutate { input: String, seq: Vec<usize> },
    /// Mutation equivalence search.
    MutEquiv {
        a: String,
        b: String,
        /// States with an arrow multiplicity above this are not expanded.
        #[arg(long, default_value_t = 64)]
        mult_cap: i32,
    },
    /// Plabic graph attached to a divide.
    Attach {
        input: String,
        /// Endpoint colors in boundary order, as a string of `b`, `w` and `-`.
        #[arg(long)]
        tails: Option<String>,
    },
    /// Plabic fence of a fence word or scannable divide; the fence word of a fence.
    Fence { input: String },
    /// Legal moves of a plabic graph.
    Moves { input: String },
    /// Move equivalence search for plabic graphs.
    MoveEquiv {
        a: String,
        b: String,
        #[arg(long)]
        strict_boundary_colors: bool,
        #[arg(long, default_value_t = 2)]
        extra_vertices: usize,
    },
    /// Positive braid of a scannable divide or a fence word.
    Braid { input: String },
    /// Left normal form of a positive braid.
    Nf { input: String },
    /// Largest power of the half twist dividing a positive braid on the left.
    DeltaDiv { input: String },
    /// Positive isotopy search between two braids.
    Isotopy {
        a: String,
        b: String,
        /// Conjugation only, no Markov moves.
        #[arg(long)]
        solid_torus: bool,
    },
    /// Admissible orientation of a plabic graph, as the outgoing half-edges.
    Orient { input: String },
    /// PD code of the link of an oriented plabic graph.
    PlabicLink { input: String },
    /// Alexander polynomial.
    Alex { input: String },
    /// Jones polynomial.
    Jones {
        input: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Components, Alexander and Jones polynomials.
    Fingerprint {
        input: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Yang-Baxter sites, or the divide after the transformation at one.
    Yb {
        input: String,
        #[arg(long)]
        site: Option<usize>,
        /// Print the transformation as plabic moves instead.
        #[arg(long)]
        moves: bool,
    },
    /// Transversal overlay of two scannable divides.
    Overlay { a: String, b: String },
    /// Lissajous divide.
    Lissajous {
        a: usize,
        b: usize,
        #[arg(long, default_value_t = 0)]
        parity: usize,
    },
    /// Klein four-group action on a scannable divide.
    Klein {
        input: String,
        #[arg(value_enum)]
        action: KleinArg,
    },
    /// Runs the acceptance criteria.
    Accept { ids: Vec<String> },
}

#[derive(Clone, Copy, PartialEq, Debug)]
enum Kind {
    Sdv,
    Pdv,
    Qvr,
    Plb,
    Fence,
    Pd,
    Braid,
}

struct Input {
    kind: Kind,
    text: String,
}

fn sniff(text: &str) -> Option<Kind> {
    let lines: Vec<&str> =
        text.lines().map(|l| l.split('#').next().unwrap().trim()).filter(|l| !l.is_empty()).collect();
    let first = lines.first()?;
    let word = first.split_whitespace().next()?;
    Some(match word {
        "node" | "end" | "edge" | "boundary" | "circles" | "outer" => Kind::Pdv,
        "n" | "a" => Kind::Qvr,
        "v" | "rot" => Kind::Plb,
        "X" | "U" => Kind::Pd,
        "k" if first.contains(':') => Kind::Braid,
        "k" if lines.len() > 1 || first.split_whitespace().count() == 2 => Kind::Sdv,
        "k" => Kind::Fence,
        "L" | "E" | "R" => Kind::Sdv,
        _ if first.contains(':') => Kind::Braid,
        _ => return None,
    })
}

fn read(arg: &str) -> Res<Input> {
    let from_ext = |p: &Path| match p.extension().and_then(|e| e.to_str()) {
        Some("sdv") => Some(Kind::Sdv),
        Some("pdv") => Some(Kind::Pdv),
        Some("qvr") => Some(Kind::Qvr),
        Some("plb") => Some(Kind::Plb),
        Some("fw") => Some(Kind::Fence),
        Some("pd") => Some(Kind::Pd),
        Some("brd") => Some(Kind::Braid),
        _ => None,
    };
    let (text, ext) = if arg == "-" {
        (std::io::read_to_string(std::io::stdin())?, None)
    } else if Path::new(arg).is_file() {
        (std::fs::read_to_string(arg).map_err(|e| format!("{}: {}", arg, e))?, from_ext(Path::new(arg)))
    } else if arg.contains(char::is_whitespace) || arg.contains(':') {
        (arg.to_string(), None)
    } else {
        return Err(format!("{}: no such file", arg).into());
    };
    let kind = ext.or_else(|| sniff(&text)).ok_or_else(|| format!("{}: unknown input format", arg))?;
    Ok(Input { kind, text })
}

fn wrong(arg: &Input, want: &str) -> Box<dyn Error> {
    format!("expected {}, got a {:?} input", want, arg.kind).into()
}

fn scannable(i: &Input) -> Res<ScannableDivide> {
    match i.kind {
        Kind::Sdv => Ok(ScannableDivide::parse(&i.text)?),
        _ => Err(wrong(i, "a scannable divide")),
    }
}

fn planar(i: &Input) -> Res<PlanarDivide> {
    match i.kind {
        Kind::Sdv => Ok(ScannableDivide::parse(&i.text)?.to_planar()),
        Kind::Pdv => Ok(PlanarDivide::parse(&i.text)?),
        _ => Err(wrong(i, "a divide")),
    }
}

fn plabic(i: &Input) -> Res<PlabicGraph> {
    match i.kind {
        Kind::Plb => Ok(PlabicGraph::parse(&i.text)?),
        Kind::Fence => Ok(fence_of_word(&FenceWord::parse(&i.text)?)?),
        Kind::Sdv => Ok(fence_of_divide(&ScannableDivide::parse(&i.text)?)?),
        _ => Err(wrong(i, "a plabic graph or fence word")),
    }
}

fn quiver(i: &Input) -> Res<Quiver> {
    match i.kind {
        Kind::Qvr => Ok(Quiver::parse_qvr(&i.text)?),
        Kind::Sdv | Kind::Pdv => Ok(quiver_of_divide(&planar(i)?)?),
        Kind::Plb | Kind::Fence => Ok(quiver_of_plabic(&plabic(i)?)),
        _ => Err(wrong(i, "a quiver, divide or plabic graph")),
    }
}

fn braid(i: &Input) -> Res<BraidWord> {
    match i.kind {
        Kind::Braid => Ok(BraidWord::parse(&i.text)?),
        Kind::Sdv => Ok(beta_of_scannable(&ScannableDivide::parse(&i.text)?)),
        Kind::Fence => Ok(beta_of_fence_word(&FenceWord::parse(&i.text)?)),
        _ => Err(wrong(i, "a braid word, scannable divide or fence word")),
    }
}

fn link(i: &Input) -> Res<LinkDiagram> {
    match i.kind {
        Kind::Pd => Ok(LinkDiagram::parse(&i.text)?),
        Kind::Braid | Kind::Sdv => Ok(closure(&braid(i)?)),
        Kind::Plb | Kind::Fence => {
            let p = plabic(i)?;
            let o = admissible_orientation(&p).ok_or("no admissible orientation")?;
            Ok(link_of_oriented_plabic(&p, &o)?)
        }
        _ => Err(wrong(i, "a link diagram, braid, divide or plabic graph")),
    }
}

fn parse_tails(s: &str) -> Res<TailSpec> {
    let colors = s
        .chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .map(|c| match c {
            'b' => Ok(Some(Color::Black)),
            'w' => Ok(Some(Color::White)),
            '-' => Ok(None),
            _ => Err(format!("bad tail color `{}`", c)),
        })
        .collect::<Result<_, _>>()?;
    Ok(TailSpec { colors })
}

fn joined<T: Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Writes to stdout; a closed pipe ends the process quietly.
fn emit(text: &str) {
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {}", e);
        std::process::exit(1);
    }
}

macro_rules! say {
    ($($t:tt)*) => { emit(&format!("{}\n", format_args!($($t)*))) };
}

struct Out {
    format: Format,
}

impl Out {
    /// A one-line result.
    fn value(&self, v: impl Display) {
        match self.format {
            Format::Plain => say!("{}", v),
            Format::Machine => say!("RESULT {}", v),
        }
    }

    /// A document in one of the file formats, printed as is.
    fn doc(&self, v: impl Display) {
        emit(&v.to_string());
    }

    fn verdict<W>(&self, v: &Verdict<W>, witness: impl Fn(&W) -> String) {
        match (self.format, v) {
            (Format::Plain, Verdict::Equivalent(w)) => {
                say!("{}", format!("EQUIVALENT witness: {}", witness(w)).trim_end())
            }
            (Format::Plain, Verdict::DistinctByInvariant(r)) => say!("DISTINCT {}", r),
            (Format::Plain, Verdict::Unknown { states, reason }) => {
                say!("UNKNOWN after {} states ({})", states, reason)
            }
            (Format::Machine, Verdict::Equivalent(w)) => {
                say!("RESULT EQUIVALENT");
                say!("{}", format!("WITNESS {}", witness(w)).trim_end());
            }
            (Format::Machine, Verdict::DistinctByInvariant(r)) => {
                say!("RESULT DISTINCT");
                say!("REASON {}", r);
            }
            (Format::Machine, Verdict::Unknown { states, reason }) => {
                say!("RESULT UNKNOWN");
                say!("STATES {}", states);
                say!("REASON {}", reason);
            }
        }
    }
}

fn run(cli: Cli) -> Res<bool> {
    let out = Out { format: cli.format };
    let budget = |d: Budget| cli.budget.budget(d);
    match cli.cmd {
        Cmd::Validate { input } => {
            let i = read(&input)?;
            match i.kind {
                Kind::Plb => {
                    PlabicGraph::parse(&i.text)?;
                    out.value("valid");
                }
                _ => {
                    let report = planar(&i)?.validate();
                    if report.is_valid() {
                        out.value("valid");
                    } else {
                        match out.format {
                            Format::Plain => emit(&report.to_string()),
                            Format::Machine => {
                                say!("RESULT invalid");
                                for l in report.to_string().lines() {
                                    say!("VIOLATION {}", l);
                                }
                            }
                        }
                    }
                }
            }
        }
        Cmd::Regions { input } => {
            let d = planar(&read(&input)?)?;
            let c = d.cell_count();
            say!("cells {} nodes {} regions {}", c.total, c.nodes, c.regions);
            for r in d.regions() {
                say!("region {} nodes {} walk {}", r.id, joined(&r.nodes()), joined(&r.walk));
            }
        }
        Cmd::Quiver { input } => out.doc(quiver(&read(&input)?)?.to_qvr()),
        Cmd::Mutate { input, seq } => out.doc(quiver(&read(&input)?)?.mutate_seq(&seq)?.to_qvr()),
        Cmd::MutEquiv { a, b, mult_cap } => {
            let (qa, qb) = (quiver(&read(&a)?)?, quiver(&read(&b)?)?);
            let opts = MutationSearch { budget: budget(Budget::default()), mult_cap };
            out.verdict(&mutation_equivalent(&qa, &qb, &opts), |w| joined(w));
        }
        Cmd::Attach { input, tails } => {
            let d = planar(&read(&input)?)?;
            let spec = match tails {
                Some(t) => parse_tails(&t)?,
                None => TailSpec::default(),
            };
            out.doc(attach_plabic(&d, &spec)?);
        }
        Cmd::Fence { input } => {
            let i = read(&input)?;
            match i.kind {
                Kind::Plb => out.value(word_of_fence(&PlabicGraph::parse(&i.text)?)?),
                _ => out.doc(plabic(&i)?),
            }
        }
        Cmd::Moves { input } => {
            let p = plabic(&read(&input)?)?;
            for m in enumerate_moves(&p) {
                out.value(m);
            }
        }
        Cmd::MoveEquiv { a, b, strict_boundary_colors, extra_vertices } => {
            let (pa, pb) = (plabic(&read(&a)?)?, plabic(&read(&b)?)?);
            let opts =
                MoveSearch { budget: budget(MoveSearch::default().budget), strict_boundary_colors, extra_vertices };
            out.verdict(&move_equivalent(&pa, &pb, &opts), |w| {
                let list = |ms: &[PlabicMove]| ms.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ");
                if w.backward.is_empty() {
                    list(&w.forward)
                } else {
                    format!("{} | {}", list(&w.forward), list(&w.backward))
                }
            });
        }
        Cmd::Braid { input } => out.value(braid(&read(&input)?)?),
        Cmd::Nf { input } => out.value(left_normal_form(&braid(&read(&input)?)?)),
        Cmd::DeltaDiv { input } => out.value(delta_divisibility(&braid(&read(&input)?)?)),
        Cmd::Isotopy { a, b, solid_torus } => {
            let (u, v) = (braid(&read(&a)?)?, braid(&read(&b)?)?);
            let bud = budget(Budget::default());
            let verdict =
                if solid_torus { solid_torus_isotopic(&u, &v, &bud)? } else { positive_isotopic(&u, &v, &bud) };
            out.verdict(&verdict, |w| joined(w));
        }
        Cmd::Orient { input } => {
            let p = plabic(&read(&input)?)?;
            match admissible_orientation(&p) {
                Some(o) => {
                    let outs: Vec<usize> = (0..o.out.len()).filter(|&h| o.out[h]).collect();
                    out.value(joined(&outs));
                }
                None => out.value("none"),
            }
        }
        Cmd::PlabicLink { input } => out.doc(link(&read(&input)?)?),
        Cmd::Alex { input } => out.value(alexander_of_diagram(&link(&read(&input)?)?)?),
        Cmd::Jones { input, cap } => out.value(format_jones(&jones(&link(&read(&input)?)?, cap)?)),
        Cmd::Fingerprint { input, cap } => {
            let f = fingerprint_of_diagram(&link(&read(&input)?)?, cap)?;
            match out.format {
                Format::Plain => emit(&f.to_string()),
                Format::Machine => {
                    say!("RESULT components {}", f.components);
                    say!("RESULT alexander {}", f.alexander);
                    match &f.jones {
                        Some(j) => say!("RESULT jones {}", format_jones(j)),
                        None => say!("RESULT jones skipped"),
                    }
                }
            }
        }
        Cmd::Yb { input, site, moves } => {
            let d = planar(&read(&input)?)?;
            let sites = yb_sites(&d);
            match site {
                None => {
                    for (n, s) in sites.iter().enumerate() {
                        out.value(format!("site {} region {} side {}", n, s.region, s.side));
                    }
                }
                Some(n) => {
                    let s = *sites.get(n).ok_or_else(|| format!("no site {}; there are {}", n, sites.len()))?;
                    if moves {
                        for m in yb_as_moves(&d, s, &budget(Budget::states(200_000)))? {
                            out.value(m);
                        }
                    } else {
                        out.doc(apply_yb(&d, s)?);
                    }
                }
            }
        }
        Cmd::Overlay { a, b } => out.doc(overlay(&scannable(&read(&a)?)?, &scannable(&read(&b)?)?)),
        Cmd::Lissajous { a, b, parity } => out.doc(lissajous(a, b, parity)?),
        Cmd::Klein { input, action } => {
            let g = match action {
                KleinArg::Id => Klein::Id,
                KleinArg::FlipH => Klein::FlipH,
                KleinArg::FlipV => Klein::FlipV,
                KleinArg::Rot180 => Klein::Rot180,
            };
            out.doc(klein_act(&scannable(&read(&input)?)?, g));
        }
        Cmd::Accept { ids } => {
            let ids: Vec<String> =
                if ids.is_empty() { acceptance::ids().iter().map(|s| s.to_string()).collect() } else { ids };
            let mut all = true;
            for id in &ids {
                let o = acceptance::run_one(id).ok_or_else(|| format!("unknown criterion {}", id))?;
                all &= o.passed;
                let mark = if o.passed { "PASS" } else { "FAIL" };
                match out.format {
                    Format::Plain => say!("{:<4} {} {:>10.3?}  {}", o.id, mark, o.elapsed, o.detail),
                    Format::Machine => say!("RESULT {} {} {}", o.id, mark, o.elapsed.as_secs_f64()),
                }
            }
            return Ok(all);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(1)
        }
    }
}
