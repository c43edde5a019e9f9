//! Command-line front end.
//!
//! `run` takes the argument list and the three standard streams and returns
//! the process exit status: 0 on success, 1 when a listing or chain fails
//! validation, 2 on bad input or a refused size.

use std::collections::HashMap;
use std::io::{BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arrangement::{
    canonical_base_regions, check_supersolvable_split, validate_chain, HyperplaneArrangement, RegionGraph, SignVector,
    SupersolvableChain,
};
use crate::error::Error;
use crate::families::{Brgc, Coxeter, SignedSjt, Sjt};
use crate::graphic::{
    find_peo, find_signed_peo, graph_arrangement, is_acyclic_signed, orientation_to_region, region_to_orientation,
    SignedGraph, SignedOrientation,
};
use crate::lattice::{
    max_elements, poset_of_regions, quotient_cover_graph, try_lattice, CongruencePartition, CongruenceSpec,
    FiniteLattice, FinitePoset,
};
use crate::triangulation::{
    avoiders, enumerate_symmetric_triangulations, flip_graph, triangulation_gray_code, SymmetricTriangulation,
};
use crate::zigzag::{ham_cycle_from, ham_path_quotient, verify_listing, Adjacency, Listing, ListingViolation};

#[derive(Parser, Debug)]
#[command(
    name = "regiongray",
    version,
    about = "Gray codes for regions of supersolvable arrangements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a Gray code listing.
    Generate(Opts),
    /// Check a listing read from --listing or standard input.
    Verify(Opts),
    /// Print the number of objects.
    Count(Opts),
    /// Print a region graph, Hasse diagram, quotient cover graph or flip graph.
    Export(Opts),
    /// Validate the supersolvable chain of an arrangement.
    CheckSupersolvable(Opts),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Binary,
    Perm,
    SignedPerm,
    Acyclic,
    SignedAcyclic,
    SymTriangulation,
    Quotient,
    CustomArrangement,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Binary => "binary",
            Family::Perm => "perm",
            Family::SignedPerm => "signed-perm",
            Family::Acyclic => "acyclic",
            Family::SignedAcyclic => "signed-acyclic",
            Family::SymTriangulation => "sym-triangulation",
            Family::Quotient => "quotient",
            Family::CustomArrangement => "custom-arrangement",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug, Clone)]
struct Opts {
    #[arg(long)]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    /// Graph JSON (acyclic families) or arrangement JSON (custom-arrangement).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Built-in name, inline JSON, or path to a JSON file.
    #[arg(long)]
    congruence: Option<String>,
    /// Base region, written like a listed object.
    #[arg(long)]
    base: Option<String>,
    /// Lattice underlying a quotient: binary, perm, signed-perm, acyclic,
    /// signed-acyclic or custom-arrangement.
    #[arg(long)]
    over: Option<Family>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, conflicts_with = "path")]
    cyclic: bool,
    #[arg(long)]
    path: bool,
    /// Listing to verify (default: standard input).
    #[arg(long)]
    listing: Option<PathBuf>,
    /// Export the Hasse diagram of the poset of regions instead of the region graph.
    #[arg(long)]
    hasse: bool,
}

/// Why a command stopped early.
enum Failure {
    Invalid(String),
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn bad<T>(msg: impl Into<String>) -> Outcome<T> {
    Err(Failure::Lib(Error::Input(msg.into())))
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    let mut out = BufWriter::new(stdout);
    let result = match &cli.command {
        Command::Generate(o) => generate(o, &mut out),
        Command::Verify(o) => verify(o, stdin, &mut out),
        Command::Count(o) => count(o, &mut out),
        Command::Export(o) => export(o, &mut out),
        Command::CheckSupersolvable(o) => check_supersolvable(o, &mut out),
    };
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => 0,
        (Err(Failure::Invalid(msg)), _) => {
            let _ = writeln!(stderr, "{msg}");
            1
        }
        (Err(Failure::Lib(e)), _) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
        (Err(Failure::Io(e)), _) | (Ok(()), Err(e)) => {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                0
            } else {
                let _ = writeln!(stderr, "error: {e}");
                2
            }
        }
    }
}

fn read_file(p: &PathBuf) -> Outcome<String> {
    std::fs::read_to_string(p).or_else(|e| bad(format!("{}: {e}", p.display())))
}

/// The arrangement behind a family, with a codec between regions and text.
enum Setup {
    Coxeter {
        kind: Coxeter,
        n: usize,
    },
    Graph {
        g: SignedGraph,
        source: String,
    },
    Custom {
        arr: HyperplaneArrangement,
        chain: Option<SupersolvableChain>,
        source: String,
    },
}

impl Setup {
    fn build(family: Family, o: &Opts, header_input: Option<&str>) -> Outcome<Setup> {
        let input_text = || -> Outcome<String> {
            match (&o.input, header_input) {
                (Some(p), _) => read_file(p),
                (None, Some(h)) => Ok(h.to_string()),
                (None, None) => bad(format!("--family {} needs --input", family.name())),
            }
        };
        let need_n = || {
            o.n.ok_or_else(|| Failure::Lib(Error::Input(format!("--family {} needs --n", family.name()))))
        };
        Ok(match family {
            Family::Binary => Setup::Coxeter {
                kind: Coxeter::Coordinate,
                n: need_n()?,
            },
            Family::Perm => Setup::Coxeter {
                kind: Coxeter::TypeA,
                n: need_n()?,
            },
            Family::SignedPerm => Setup::Coxeter {
                kind: Coxeter::TypeB,
                n: need_n()?,
            },
            Family::Acyclic | Family::SignedAcyclic => {
                let g = if o.input.is_none() && header_input.is_none() && family == Family::Acyclic {
                    SignedGraph::complete(need_n()?)
                } else {
                    SignedGraph::from_json(&input_text()?)?
                };
                if family == Family::Acyclic && !g.is_unsigned() {
                    return bad("--family acyclic takes a graph without negative edges");
                }
                let source = g.to_json().to_string();
                Setup::Graph { g, source }
            }
            Family::CustomArrangement => {
                let text = input_text()?;
                let (arr, chain) = HyperplaneArrangement::from_json(&text)?;
                let source = arr.to_json(chain.as_ref()).to_string();
                Setup::Custom { arr, chain, source }
            }
            Family::SymTriangulation | Family::Quotient => {
                return bad(format!("{} has no region codec", family.name()));
            }
        })
    }

    fn arrangement(&self) -> Outcome<(HyperplaneArrangement, SupersolvableChain)> {
        match self {
            Setup::Coxeter { kind, n } => Ok(kind.arrangement(*n)?),
            Setup::Graph { g, .. } => Ok(graph_arrangement(g)?),
            Setup::Custom {
                arr, chain: Some(c), ..
            } => Ok((arr.clone(), c.clone())),
            Setup::Custom { .. } => bad("the arrangement JSON has no \"chain\""),
        }
    }

    fn decode(&self, r: &SignVector) -> Outcome<String> {
        Ok(match self {
            Setup::Coxeter { kind, n } => kind.decode(*n, r)?,
            Setup::Graph { g, .. } => region_to_orientation(g, r)?.to_text(g),
            Setup::Custom { .. } => r.to_string(),
        })
    }

    fn encode(&self, text: &str) -> Outcome<SignVector> {
        Ok(match self {
            Setup::Coxeter { kind, n } => kind.encode(*n, text)?,
            Setup::Graph { g, .. } => {
                let o = SignedOrientation::parse(g, text)?;
                if !is_acyclic_signed(g, &o) {
                    return bad(format!("{text:?} has a directed cycle"));
                }
                orientation_to_region(g, &o)?
            }
            Setup::Custom { arr, .. } => {
                let r: SignVector = text.parse()?;
                if r.len() != arr.len() {
                    return bad(format!("{text:?} has {} signs, expected {}", r.len(), arr.len()));
                }
                r
            }
        })
    }

    /// Region count by the product formula of the chain.
    fn region_estimate(&self) -> Outcome<u128> {
        if let Setup::Coxeter { kind, n } = self {
            let n = *n as u128;
            let fact = (1..=n).try_fold(1u128, |a, k| a.checked_mul(k));
            let pow = 1u128.checked_shl(n as u32).filter(|_| n < 127);
            let est = match kind {
                Coxeter::Coordinate => pow,
                Coxeter::TypeA => fact,
                Coxeter::TypeB => fact.zip(pow).and_then(|(f, p)| f.checked_mul(p)),
            };
            return Ok(est.unwrap_or(u128::MAX));
        }
        let (arr, chain) = self.arrangement()?;
        let levels = chain.levels();
        let bottom = levels[0].len() as u128;
        let mut est = if arr.rank_of(&levels[0]) <= 1 { 2 } else { 2 * bottom };
        for j in 1..levels.len() {
            est = est.saturating_mul(chain.added(j).len() as u128 + 1);
        }
        Ok(est)
    }

    fn guard(&self) -> Outcome<()> {
        let est = self.region_estimate()?;
        if est > max_elements() as u128 {
            return Err(Failure::Lib(Error::Refused(format!(
                "{est} regions exceed the limit of {} (set REGIONGRAY_MAX_ELEMENTS to raise it)",
                max_elements()
            ))));
        }
        Ok(())
    }

    fn describe(&self) -> String {
        match self {
            Setup::Coxeter {
                kind: Coxeter::Coordinate,
                n,
            } => format!("coordinate n={n}"),
            Setup::Coxeter {
                kind: Coxeter::TypeA,
                n,
            } => format!("type A n={n}"),
            Setup::Coxeter {
                kind: Coxeter::TypeB,
                n,
            } => format!("type B n={n}"),
            Setup::Graph { .. } => "graphic".into(),
            Setup::Custom { arr, .. } => format!("custom m={} dim={}", arr.len(), arr.dim()),
        }
    }

    fn source(&self) -> Option<&str> {
        match self {
            Setup::Graph { source, .. } | Setup::Custom { source, .. } => Some(source),
            Setup::Coxeter { .. } => None,
        }
    }

    fn base(&self, o: &Opts, arr: &HyperplaneArrangement, chain: &SupersolvableChain) -> Outcome<SignVector> {
        match (&o.base, self) {
            (Some(b), _) => self.encode(b),
            (None, Setup::Coxeter { kind, n }) => Ok(kind.identity_region(*n)),
            (None, _) => Ok(canonical_base_regions(arr, chain)?[0]),
        }
    }

    fn named(&self, name: &str, graph: &RegionGraph) -> Outcome<Vec<(usize, usize)>> {
        let Setup::Coxeter { kind, n } = self else {
            return bad(format!("no built-in congruence {name:?} for this family"));
        };
        kind.named_congruence(*n, name)?
            .iter()
            .map(|(a, b)| match (graph.index_of(a), graph.index_of(b)) {
                (Some(x), Some(y)) => Ok((x, y)),
                _ => bad("generator outside the region set"),
            })
            .collect()
    }
}

fn chain_text(c: &SupersolvableChain) -> String {
    c.levels()
        .iter()
        .map(|l| l.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(" | ")
}

fn need_family(o: &Opts, header: Option<&str>) -> Outcome<Family> {
    if let Some(f) = o.family {
        return Ok(f);
    }
    match header.and_then(|h| Family::from_str(h, true).ok()) {
        Some(f) => Ok(f),
        None => bad("--family is required"),
    }
}

/// Lattice underlying a quotient listing.
fn over_family(o: &Opts) -> Family {
    if let Some(f) = o.over {
        return f;
    }
    if o.input.is_some() {
        return Family::CustomArrangement;
    }
    match &o.congruence {
        Some(c) if c.to_ascii_lowercase().contains("typeb") => Family::SignedPerm,
        _ => Family::Perm,
    }
}

/// Everything a quotient listing needs.
struct Quotient {
    setup: Setup,
    arr: HyperplaneArrangement,
    chain: SupersolvableChain,
    graph: RegionGraph,
    lattice: FiniteLattice,
    base: SignVector,
    cong: CongruencePartition,
}

impl Quotient {
    fn build(o: &Opts, over: Family, header_input: Option<&str>, congruence: Option<&str>) -> Outcome<Quotient> {
        if matches!(over, Family::Quotient | Family::SymTriangulation) {
            return bad(format!("a quotient cannot be taken over {}", over.name()));
        }
        let Some(spec) = congruence else {
            return bad("--family quotient needs --congruence");
        };
        let spec = CongruenceSpec::parse(spec)?;
        let setup = Setup::build(over, o, header_input)?;
        setup.guard()?;
        let (arr, chain) = setup.arrangement()?;
        let graph = arr.region_graph();
        let base = setup.base(o, &arr, &chain)?;
        if graph.index_of(&base).is_none() {
            return bad("the base is not a region");
        }
        let lattice = try_lattice(poset_of_regions(&graph, &base)?).map_err(Error::from)?;
        let cong = spec.resolve(
            &lattice,
            |text| {
                let r = setup.encode(text).map_err(|f| match f {
                    Failure::Lib(e) => e,
                    _ => Error::Input(format!("bad element {text:?}")),
                })?;
                graph
                    .index_of(&r)
                    .ok_or_else(|| Error::Input(format!("{text:?} is not a region")))
            },
            |name| {
                setup.named(name, &graph).map_err(|f| match f {
                    Failure::Lib(e) => e,
                    _ => Error::Input(name.to_string()),
                })
            },
        )?;
        Ok(Quotient {
            setup,
            arr,
            chain,
            graph,
            lattice,
            base,
            cong,
        })
    }

    fn bottom(&self, class: usize) -> usize {
        let members = self.cong.class(class);
        members.iter().fold(members[0], |acc, &x| self.lattice.meet(acc, x))
    }

    fn label(&self, class: usize) -> Outcome<String> {
        self.setup.decode(&self.graph.region(self.bottom(class)))
    }

    fn cover_graph(&self) -> FinitePoset {
        quotient_cover_graph(&self.lattice, &self.cong)
    }
}

/// Writes header and items in the chosen format, streaming text output.
struct Emitter<'a> {
    out: &'a mut dyn Write,
    format: Format,
    header: Vec<(&'static str, String)>,
    items: Vec<String>,
}

impl<'a> Emitter<'a> {
    fn new(out: &'a mut dyn Write, format: Format, header: Vec<(&'static str, String)>) -> Outcome<Self> {
        if format == Format::Text {
            for (k, v) in &header {
                writeln!(out, "# {k}: {v}")?;
            }
        }
        Ok(Emitter {
            out,
            format,
            header,
            items: Vec::new(),
        })
    }

    fn item(&mut self, s: String) -> Outcome<()> {
        match self.format {
            Format::Text => writeln!(self.out, "{s}")?,
            _ => self.items.push(s),
        }
        Ok(())
    }

    fn finish(self, cyclic: bool) -> Outcome<()> {
        match self.format {
            Format::Text => {}
            Format::Json => {
                let mut v = json!({});
                for (k, val) in &self.header {
                    v[*k] = serde_json::from_str::<Value>(val)
                        .ok()
                        .filter(|x| !x.is_string())
                        .unwrap_or_else(|| json!(val));
                }
                v["items"] = json!(self.items);
                writeln!(self.out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
            }
            Format::Dot => {
                writeln!(self.out, "graph listing {{")?;
                for (i, s) in self.items.iter().enumerate() {
                    writeln!(self.out, "  {i} [label=\"{s}\"];")?;
                }
                let k = self.items.len();
                let steps = if cyclic && k > 2 { k } else { k.saturating_sub(1) };
                for i in 0..steps {
                    writeln!(self.out, "  {i} -- {};", (i + 1) % k)?;
                }
                writeln!(self.out, "}}")?;
            }
        }
        Ok(())
    }
}

fn generate(o: &Opts, out: &mut dyn Write) -> Outcome<()> {
    let family = need_family(o, None)?;
    let mut header: Vec<(&'static str, String)> = vec![("family", family.name().into())];
    if let Some(n) = o.n {
        header.push(("n", n.to_string()));
    }
    match family {
        Family::SymTriangulation => {
            let n =
                o.n.ok_or_else(|| Failure::Lib(Error::Input("--n is required".into())))?;
            if !(1..=5).contains(&n) {
                return bad("sym-triangulation supports 1 <= n <= 5");
            }
            if o.path {
                header.push(("cyclic", "false".into()));
            } else {
                header.push(("cyclic", "true".into()));
            }
            let code = triangulation_gray_code(n)?;
            header.push(("count", code.len().to_string()));
            let mut em = Emitter::new(out, o.format, header)?;
            for t in code {
                em.item(t.to_text())?;
            }
            em.finish(!o.path)
        }
        Family::Quotient => {
            if o.cyclic {
                return bad("quotient listings are paths; --cyclic is not available");
            }
            let over = over_family(o);
            let q = Quotient::build(o, over, None, o.congruence.as_deref())?;
            let listing = ham_path_quotient(&q.arr, &q.chain, &q.graph, &q.lattice, &q.base, &q.cong)?;
            header.push(("over", over.name().into()));
            header.push(("arrangement", q.setup.describe()));
            if let Some(s) = q.setup.source() {
                header.push(("input", s.to_string()));
            }
            header.push(("chain", chain_text(&q.chain)));
            header.push(("base", q.setup.decode(&q.base)?));
            header.push(("congruence", o.congruence.clone().unwrap_or_default()));
            header.push(("cyclic", "false".into()));
            header.push(("count", listing.len().to_string()));
            let mut em = Emitter::new(out, o.format, header)?;
            for &c in &listing.order {
                em.item(q.label(c)?)?;
            }
            em.finish(false)
        }
        _ => {
            let setup = Setup::build(family, o, None)?;
            let cyclic = !o.path;
            header.push(("arrangement", setup.describe()));
            if let Some(s) = setup.source() {
                header.push(("input", s.to_string()));
            }
            header.push(("cyclic", cyclic.to_string()));
            if let (Setup::Coxeter { kind, n }, None) = (&setup, &o.base) {
                if *n == 0 || (*kind == Coxeter::Coordinate && *n > 64) {
                    return bad("n out of range");
                }
                let mut em = Emitter::new(out, o.format, header)?;
                match kind {
                    Coxeter::Coordinate => {
                        for s in Brgc::new(*n) {
                            em.item(s)?;
                        }
                    }
                    Coxeter::TypeA => {
                        for p in Sjt::new(*n) {
                            em.item(p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))?;
                        }
                    }
                    Coxeter::TypeB => {
                        for w in SignedSjt::new(*n) {
                            em.item(w.to_string())?;
                        }
                    }
                }
                return em.finish(cyclic);
            }
            setup.guard()?;
            let (arr, chain) = setup.arrangement()?;
            let graph = arr.region_graph();
            let base = setup.base(o, &arr, &chain)?;
            let listing = ham_cycle_from(&arr, &chain, &graph, &base)?;
            header.push(("chain", chain_text(&chain)));
            header.push(("base", setup.decode(&base)?));
            header.push(("count", listing.len().to_string()));
            let mut em = Emitter::new(out, o.format, header)?;
            for &i in &listing.order {
                em.item(setup.decode(&graph.region(i))?)?;
            }
            em.finish(cyclic)
        }
    }
}

/// Distinct sign vectors checked by single-coordinate differences.
struct SignAdjacency {
    signs: Vec<SignVector>,
    total: usize,
}

impl Adjacency for SignAdjacency {
    fn vertex_count(&self) -> usize {
        self.total
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.signs[a].distance(&self.signs[b]) == 1
    }
}

/// Maps each item to a vertex index, reporting the first unreadable one.
fn index_items(items: &[(usize, String)], mut f: impl FnMut(&str) -> Outcome<usize>) -> Outcome<Vec<usize>> {
    items
        .iter()
        .enumerate()
        .map(|(k, (line, s))| {
            f(s).map_err(|e| match e {
                Failure::Lib(Error::Input(m)) | Failure::Invalid(m) => {
                    Failure::Invalid(format!("invalid listing: entry {k} (line {line}): {m}"))
                }
                other => other,
            })
        })
        .collect()
}

fn verify(o: &Opts, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome<()> {
    let text = match &o.listing {
        Some(p) => read_file(p)?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    let mut header: HashMap<String, String> = HashMap::new();
    let mut items: Vec<(usize, String)> = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if let Some(h) = line.strip_prefix('#') {
            if let Some((a, b)) = h.split_once(':') {
                header.insert(a.trim().to_string(), b.trim().to_string());
            }
        } else if !line.is_empty() {
            items.push((k + 1, line.to_string()));
        }
    }
    let h = |k: &str| header.get(k).map(String::as_str);
    let family = need_family(o, h("family"))?;
    let mut o = o.clone();
    if o.n.is_none() {
        o.n = h("n").and_then(|v| v.parse().ok());
    }
    let cyclic = if o.cyclic {
        true
    } else if o.path {
        false
    } else {
        h("cyclic").map_or(family != Family::Quotient, |v| v == "true")
    };
    let result = match family {
        Family::SymTriangulation => {
            let n =
                o.n.ok_or_else(|| Failure::Lib(Error::Input("--n is required".into())))?;
            let g = flip_graph(n)?;
            let order = index_items(&items, |s| {
                let t = SymmetricTriangulation::parse(n, s)?;
                Ok(g.index_of(&t).expect("valid triangulations are enumerated"))
            })?;
            verify_listing(&g, &Listing { order, cyclic })
        }
        Family::Quotient => {
            if o.over.is_none() {
                o.over = h("over").and_then(|v| Family::from_str(v, true).ok());
            }
            let congruence = o.congruence.clone().or_else(|| h("congruence").map(String::from));
            if o.congruence.is_none() {
                o.congruence = congruence.clone();
            }
            let over = over_family(&o);
            let q = Quotient::build(&o, over, h("input"), congruence.as_deref())?;
            let order = index_items(&items, |s| {
                let r = q.setup.encode(s)?;
                match q.graph.index_of(&r) {
                    Some(i) => Ok(q.cong.class_of(i)),
                    None => bad(format!("{s:?} is not a region")),
                }
            })?;
            verify_listing(&q.cover_graph(), &Listing { order, cyclic })
        }
        _ => {
            let setup = Setup::build(family, &o, h("input"))?;
            if let Setup::Coxeter { .. } = setup {
                let total = setup.region_estimate()?;
                let mut signs = Vec::new();
                let mut seen: HashMap<SignVector, usize> = HashMap::new();
                let order = index_items(&items, |s| {
                    let r = setup.encode(s)?;
                    Ok(*seen.entry(r).or_insert_with(|| {
                        signs.push(r);
                        signs.len() - 1
                    }))
                })?;
                let total = usize::try_from(total).unwrap_or(usize::MAX);
                verify_listing(&SignAdjacency { signs, total }, &Listing { order, cyclic })
            } else {
                setup.guard()?;
                let (arr, _) = setup.arrangement()?;
                let graph = arr.region_graph();
                let order = index_items(&items, |s| {
                    let r = setup.encode(s)?;
                    graph
                        .index_of(&r)
                        .map_or_else(|| bad(format!("{s:?} is not a region")), Ok)
                })?;
                verify_listing(&graph, &Listing { order, cyclic })
            }
        }
    };
    match result {
        Ok(()) => {
            let kind = if cyclic { "cycle" } else { "path" };
            writeln!(out, "ok: {} entries form a Hamiltonian {kind}", items.len())?;
            Ok(())
        }
        Err(v) => Err(Failure::Invalid(violation_text(&v, &items))),
    }
}

fn violation_text(v: &ListingViolation, items: &[(usize, String)]) -> String {
    match v.index().and_then(|i| items.get(i).map(|it| (i, it.0))) {
        Some((i, line)) => format!("invalid listing: entry {i} (line {line}): {v}"),
        None => format!("invalid listing: {v}"),
    }
}

fn count(o: &Opts, out: &mut dyn Write) -> Outcome<()> {
    let family = need_family(o, None)?;
    let k: u128 = match family {
        Family::SymTriangulation => {
            let n =
                o.n.ok_or_else(|| Failure::Lib(Error::Input("--n is required".into())))?;
            match n {
                1..=6 => enumerate_symmetric_triangulations(n)?.len() as u128,
                7..=8 => avoiders(n).len() as u128,
                _ => return bad("sym-triangulation counts support 1 <= n <= 8"),
            }
        }
        Family::Quotient => {
            let q = Quotient::build(o, over_family(o), None, o.congruence.as_deref())?;
            q.cong.len() as u128
        }
        _ => {
            let setup = Setup::build(family, o, None)?;
            match setup {
                Setup::Coxeter { .. } => {
                    // validates n through the builder before trusting the formula
                    if let Setup::Coxeter { kind, n } = &setup {
                        if *n == 0 || (*kind == Coxeter::Coordinate && *n > 64) {
                            return bad("n out of range");
                        }
                    }
                    setup.region_estimate()?
                }
                Setup::Custom { ref arr, .. } => arr.enumerate_regions().len() as u128,
                Setup::Graph { .. } => {
                    setup.guard()?;
                    setup.arrangement()?.0.enumerate_regions().len() as u128
                }
            }
        }
    };
    writeln!(out, "{k}")?;
    Ok(())
}

fn poset_json(p: &FinitePoset, label: impl Fn(usize) -> Outcome<String>) -> Outcome<Value> {
    let elements = (0..p.len()).map(label).collect::<Outcome<Vec<_>>>()?;
    let covers: Vec<[usize; 2]> = p.covers().map(|(a, b)| [a, b]).collect();
    Ok(json!({ "elements": elements, "covers": covers }))
}

fn export(o: &Opts, out: &mut dyn Write) -> Outcome<()> {
    let family = need_family(o, None)?;
    match family {
        Family::SymTriangulation => {
            let n =
                o.n.ok_or_else(|| Failure::Lib(Error::Input("--n is required".into())))?;
            let g = flip_graph(n)?;
            let edges: Vec<[usize; 2]> = (0..g.triangulations.len())
                .flat_map(|i| g.neighbors(i).iter().filter(move |&&j| j > i).map(move |&j| [i, j]))
                .collect();
            if o.format == Format::Dot {
                writeln!(out, "graph flips {{")?;
                for (i, t) in g.triangulations.iter().enumerate() {
                    writeln!(out, "  {i} [label=\"{t}\"];")?;
                }
                for [a, b] in edges {
                    writeln!(out, "  {a} -- {b};")?;
                }
                writeln!(out, "}}")?;
            } else {
                let ts: Vec<String> = g.triangulations.iter().map(|t| t.to_text()).collect();
                let v = json!({ "n": n, "triangulations": ts, "edges": edges });
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
            }
        }
        Family::Quotient => {
            let q = Quotient::build(o, over_family(o), None, o.congruence.as_deref())?;
            let p = q.cover_graph();
            if o.format == Format::Dot {
                let labels = (0..p.len()).map(|c| q.label(c)).collect::<Outcome<Vec<_>>>()?;
                write!(out, "{}", p.to_dot(|c| labels[c].clone()))?;
            } else {
                let v = poset_json(&p, |c| q.label(c))?;
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
            }
        }
        _ => {
            let setup = Setup::build(family, o, None)?;
            let (arr, chain) = setup.arrangement()?;
            if o.format == Format::Text {
                let v = arr.to_json(Some(&chain));
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
                return Ok(());
            }
            setup.guard()?;
            let graph = arr.region_graph();
            if o.hasse {
                let base = setup.base(o, &arr, &chain)?;
                let p = poset_of_regions(&graph, &base)?;
                if o.format == Format::Dot {
                    let labels = graph
                        .regions()
                        .iter()
                        .map(|r| setup.decode(r))
                        .collect::<Outcome<Vec<_>>>()?;
                    write!(out, "{}", p.to_dot(|x| labels[x].clone()))?;
                } else {
                    let v = poset_json(&p, |x| setup.decode(&graph.region(x)))?;
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
                }
            } else if o.format == Format::Dot {
                write!(out, "{}", graph.to_dot())?;
            } else {
                let regions = graph
                    .regions()
                    .iter()
                    .map(|r| setup.decode(r))
                    .collect::<Outcome<Vec<_>>>()?;
                let signs: Vec<String> = graph.regions().iter().map(|r| r.to_string()).collect();
                let edges: Vec<[usize; 3]> = graph.edges().map(|(a, b, h)| [a, b, h]).collect();
                let v = json!({ "regions": regions, "signs": signs, "edges": edges });
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))?;
            }
        }
    }
    Ok(())
}

fn check_supersolvable(o: &Opts, out: &mut dyn Write) -> Outcome<()> {
    let family = need_family(o, None)?;
    if matches!(family, Family::SymTriangulation | Family::Quotient) {
        return bad(format!("{} has no arrangement of its own", family.name()));
    }
    let setup = Setup::build(family, o, None)?;
    if let Setup::Graph { g, .. } = &setup {
        let peo = if g.is_unsigned() {
            find_peo(g)
        } else {
            find_signed_peo(g)
        };
        if let Err(stuck) = peo {
            let stuck: Vec<String> = stuck.iter().map(|v| (v + 1).to_string()).collect();
            return Err(Failure::Invalid(format!(
                "no elimination ordering: vertices {} have no simplicial choice",
                stuck.join(" ")
            )));
        }
    }
    let (arr, chain) = setup.arrangement()?;
    if validate_chain(&arr, &chain)? {
        writeln!(
            out,
            "supersolvable: {} levels, rank {}, chain {}",
            chain.levels().len(),
            arr.rank(),
            chain_text(&chain)
        )?;
        return Ok(());
    }
    let levels = chain.levels();
    if arr.rank_of(&levels[0]) > 2 {
        return Err(Failure::Invalid(
            "not supersolvable: the bottom level has rank above 2".into(),
        ));
    }
    for j in 1..levels.len() {
        let sub = HyperplaneArrangement::new(arr.dim(), levels[j].iter().map(|&i| arr.normal(i).to_vec()).collect())?;
        let local = |ix: &[usize]| -> Vec<usize> {
            ix.iter()
                .map(|i| levels[j].iter().position(|x| x == i).expect("nested"))
                .collect()
        };
        if !check_supersolvable_split(&sub, &local(&levels[j - 1]), &local(&chain.added(j)))? {
            return Err(Failure::Invalid(format!(
                "not supersolvable: level {j} fails the split condition"
            )));
        }
    }
    Err(Failure::Invalid("not supersolvable".into()))
}
