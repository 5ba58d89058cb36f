use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use borcherds_magnus::action::KmWord;
use borcherds_magnus::lie::{LieJson, LieSeries};
use borcherds_magnus::models::{
    build_e10, build_fricke, build_gnome, build_h3, build_monster, j_coefficients, partitions_upto, Caps, CoefficientTable,
    ModelSpec,
};
use borcherds_magnus::semidirect::{GroupElement, GroupElementJson, SemidirectGroup};
use borcherds_magnus::verify::{run_suite, SUITES};
use borcherds_magnus::Error;

#[derive(Parser)]
#[command(name = "bmg", version, about = "Exact truncated arithmetic in G(S') ⋊ G_J for Borcherds algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Clone, Default)]
struct CapArgs {
    #[arg(long)]
    max_block: Option<usize>,
    #[arg(long)]
    kcap: Option<usize>,
    #[arg(long)]
    height: Option<usize>,
    #[arg(long)]
    depth: Option<usize>,
    /// Word-length truncation N.
    #[arg(long)]
    trunc: Option<usize>,
}

impl CapArgs {
    fn apply(&self, mut c: Caps) -> Caps {
        c.max_block = self.max_block.or(c.max_block);
        c.kcap = self.kcap.or(c.kcap);
        c.height = self.height.or(c.height);
        c.depth = self.depth.or(c.depth);
        c.truncation = self.trunc.unwrap_or(c.truncation);
        c
    }
}

#[derive(Subcommand)]
enum ModelCmd {
    Monster {
        #[command(flatten)]
        caps: CapArgs,
    },
    Fricke {
        #[arg(long = "N", value_name = "N")]
        n: u32,
        /// Coefficient table, JSON or CSV.
        #[arg(long)]
        table: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
    },
    H3 {
        #[command(flatten)]
        caps: CapArgs,
    },
    E10 {
        #[arg(long, default_value_t = 1)]
        kmax: usize,
        #[command(flatten)]
        caps: CapArgs,
    },
    Gnome {
        #[arg(long, default_value_t = 2)]
        lmax: usize,
        #[arg(long, default_value_t = 3)]
        nmax: usize,
        #[command(flatten)]
        caps: CapArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffKind {
    J,
    Partition,
}

#[derive(Subcommand)]
enum Cmd {
    /// Materialize a model and print or save it as JSON.
    Build {
        #[command(subcommand)]
        model: ModelCmd,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t, global = true)]
        format: Format,
    },
    /// Multiply two group elements.
    Mul {
        spec: String,
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Invert a group element.
    Inv {
        spec: String,
        a: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Apply Ad(g) to a Lie series.
    Act {
        spec: String,
        gword: String,
        lie: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print q-series coefficients.
    Coeffs {
        #[arg(value_enum)]
        kind: CoeffKind,
        nmax: usize,
    },
    /// Run a verification suite.
    Verify {
        /// A built-in model name or a model JSON file.
        model: String,
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownSuite(_) => Failure::Usage(format!("{e}; known suites: {}", SUITES.join(", "))),
            e => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<bool, Failure>;

/// A file path, or the JSON text itself when it starts with `{` or `[`.
fn read_input(s: &str) -> Result<String, Failure> {
    let t = s.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(s.to_string());
    }
    fs::read_to_string(s).map_err(|e| Failure::Usage(format!("cannot read {s}: {e}")))
}

fn parse<T: serde::de::DeserializeOwned>(s: &str) -> Result<T, Failure> {
    let text = read_input(s)?;
    serde_json::from_str(&text).map_err(|e| Failure::Domain(format!("schema error: {e}")))
}

fn builtin(name: &str) -> Option<Result<ModelSpec, Error>> {
    Some(match name {
        "monster" => build_monster(Caps::monster()),
        "fricke" => build_fricke(&CoefficientTable::identity_class(8), Caps::monster()),
        "h3" => build_h3(Caps::h3()),
        "e10" => build_e10(1, Caps::e10()),
        "gnome" => build_gnome(2, 3, Caps::gnome()),
        _ => return None,
    })
}

fn load_spec(s: &str) -> Result<ModelSpec, Failure> {
    if !Path::new(s).exists() {
        if let Some(m) = builtin(s) {
            return Ok(m?);
        }
    }
    Ok(ModelSpec::from_json_str(&read_input(s)?)?)
}

fn load_table(n: u32, path: &Path) -> Result<CoefficientTable, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let csv = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    let t = if csv { CoefficientTable::from_csv(n, text.as_bytes())? } else { CoefficientTable::from_json_str(&text)? };
    if t.n != n {
        return Err(Failure::Domain(format!("table is for N = {}, but --N {n} was given", t.n)));
    }
    Ok(t)
}

fn summary(m: &ModelSpec) -> Result<String, Failure> {
    let rep = m.check()?;
    let mut out = format!("model {}\ntruncation {}\ngenerators {}\n", m.id, m.caps.truncation, m.alphabet.len());
    for b in &m.blocks {
        out.push_str(&format!("block {} dim {} multiplicity {}\n", b.index, b.dim, b.multiplicity));
    }
    out.push_str(&format!("consistency {}\n", if rep.passed() { "ok" } else { "FAILED" }));
    Ok(out)
}

fn emit(text: String, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            println!("{}", text.trim_end());
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.cmd {
        Cmd::Build { model, out, format } => {
            let m = match model {
                ModelCmd::Monster { caps } => build_monster(caps.apply(Caps::monster()))?,
                ModelCmd::Fricke { n, table, caps } => build_fricke(&load_table(n, &table)?, caps.apply(Caps::monster()))?,
                ModelCmd::H3 { caps } => build_h3(caps.apply(Caps::h3()))?,
                ModelCmd::E10 { kmax, caps } => build_e10(kmax, caps.apply(Caps::e10()))?,
                ModelCmd::Gnome { lmax, nmax, caps } => build_gnome(lmax, nmax, caps.apply(Caps::gnome()))?,
            };
            let text = match format {
                Format::Json => m.to_json_string(),
                Format::Text => summary(&m)?,
            };
            emit(text, out.as_deref())?;
            Ok(true)
        }
        Cmd::Mul { spec, a, b, format } => {
            let m = load_spec(&spec)?;
            let g = m.group()?;
            let (a, b) = (g.from_json(&parse::<GroupElementJson>(&a)?)?, g.from_json(&parse::<GroupElementJson>(&b)?)?);
            print_element(&g, &g.mul(&a, &b)?, format);
            Ok(true)
        }
        Cmd::Inv { spec, a, format } => {
            let m = load_spec(&spec)?;
            let g = m.group()?;
            let a = g.from_json(&parse::<GroupElementJson>(&a)?)?;
            print_element(&g, &g.inv(&a)?, format);
            Ok(true)
        }
        Cmd::Act { spec, gword, lie, format } => {
            let m = load_spec(&spec)?;
            let g = m.group()?;
            let w: KmWord = parse(&gword)?;
            let l = LieSeries::from_json(g.alphabet(), &parse::<LieJson>(&lie)?)?;
            let r = g.ad(&w, &l)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&r.to_json()).expect("serializable")),
                Format::Text => println!("{}", r.to_polynomial().render()),
            }
            Ok(true)
        }
        Cmd::Coeffs { kind, nmax } => {
            let v: Vec<String> = match kind {
                CoeffKind::J => j_coefficients(nmax).iter().map(|c| c.to_string()).collect(),
                CoeffKind::Partition => partitions_upto(nmax).iter().map(|c| c.to_string()).collect(),
            };
            println!("{}", v.join(", "));
            Ok(true)
        }
        Cmd::Verify { model, suite, seed, samples, format } => {
            let m = load_spec(&model)?;
            let rep = run_suite(&m, &suite, seed, samples)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&rep).expect("serializable")),
                Format::Text => print!("{}", rep.render_text()),
            }
            Ok(rep.passed)
        }
    }
}

fn print_element(g: &SemidirectGroup, a: &GroupElement, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&g.to_json(a)).expect("serializable")),
        Format::Text => {
            println!("log n = {}", a.n.log().to_polynomial().render());
            println!("g = {}", serde_json::to_string(&a.g).expect("serializable"));
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
