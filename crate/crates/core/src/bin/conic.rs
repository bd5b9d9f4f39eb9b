use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use conic_core::builders::{self, Permutation};
use conic_core::conic::{
    enumerate_all_sequences, search_conic_with, verify_certificate, SearchConstraint, SearchOptions, SearchOutcome,
};
use conic_core::geometry::VRep;
use conic_core::io::{
    analyze, emit_certificate, emit_polytope, emit_report, parse_certificate, parse_polytope, polytope_from_document,
    AnalysisOptions, CertificateDocument, FacesDocument, Polytope, PolytopeDocument,
};
use conic_core::{Error, Result};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

/// Conic sequences of convex polytopes.
///
/// Exit codes: 0 success, found or valid; 1 not conic or invalid
/// certificate; 2 input or schema error; 3 search budget exhausted.
#[derive(Parser)]
#[command(name = "conic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Simplex,
    Cube,
    CrossPolytope,
    Polygon,
    Pyramid,
    Bipyramid,
    Prism,
    Bruhat,
    Gz3,
}

#[derive(Clone, Copy, ValueEnum)]
enum Require {
    Any,
    Simplex,
    Cube,
    Simple,
}

impl From<Require> for SearchConstraint {
    fn from(r: Require) -> Self {
        match r {
            Require::Any => SearchConstraint::Any,
            Require::Simplex => SearchConstraint::AllSimplex,
            Require::Cube => SearchConstraint::AllCube,
            Require::Simple => SearchConstraint::AllSimple,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Write a polytope document for a standard family.
    Gen {
        family: Family,
        /// Dimension of the polytope.
        #[arg(long)]
        dim: Option<usize>,
        /// Number of polygon vertices (polygon, and the base of pyramids, bipyramids and prisms).
        #[arg(long)]
        gon: Option<usize>,
        /// Lower permutation of a Bruhat interval, e.g. 1324.
        #[arg(long)]
        u: Option<String>,
        /// Upper permutation of a Bruhat interval.
        #[arg(long)]
        w: Option<String>,
        /// Permutation size.
        #[arg(long)]
        n: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the face lattice.
    Faces {
        #[arg(default_value = "-")]
        file: PathBuf,
        #[arg(long, conflicts_with = "fvector")]
        json: bool,
        /// Print only the f-vector.
        #[arg(long)]
        fvector: bool,
    },
    /// Search for a conic sequence.
    Search {
        #[arg(default_value = "-")]
        file: PathBuf,
        #[arg(long, value_enum, default_value = "any")]
        require: Require,
        /// Maximum number of search states to expand.
        #[arg(long)]
        budget: Option<u64>,
        /// Explore first-level branches in parallel.
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        emit_certificate: Option<PathBuf>,
    },
    /// Replay a certificate.
    Verify {
        file: PathBuf,
        certificate: PathBuf,
        #[arg(long, value_enum, default_value = "any")]
        require: Require,
    },
    /// List every conic sequence (exhaustive, small polytopes only).
    Enumerate {
        #[arg(default_value = "-")]
        file: PathBuf,
        #[arg(long, value_enum, default_value = "any")]
        require: Require,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Face numbers, invariants, verdicts and cohomology in one report.
    Analyze {
        #[arg(default_value = "-")]
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        parallel: bool,
    },
}

fn read_input(path: &Path) -> Result<Vec<u8>> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))
        }
        _ => Ok(io::stdout().write_all(text.as_bytes())?),
    }
}

fn load(path: &Path) -> Result<Polytope> {
    polytope_from_document(&parse_polytope(&read_input(path)?)?)
}

fn need<T>(value: Option<T>, flag: &str, family: &str) -> Result<T> {
    value.ok_or_else(|| Error::Parse(format!("{family} needs --{flag}")))
}

fn base_for(dim: Option<usize>, gon: Option<usize>, family: &str) -> Result<VRep> {
    match (gon, dim) {
        (Some(_), Some(d)) if d != 3 => {
            Err(Error::Parse(format!("a {family} over a polygon is 3-dimensional, not {d}-dimensional")))
        }
        (Some(n), _) => builders::polygon(n),
        (None, Some(d)) if d >= 2 => builders::simplex(d - 1),
        (None, Some(d)) => Err(Error::DimensionOutOfRange { dim: d, min: 2, max: builders::MAX_FAMILY_DIM + 1 }),
        (None, None) => Err(Error::Parse(format!("{family} needs --gon or --dim"))),
    }
}

fn generate(
    family: Family,
    dim: Option<usize>,
    gon: Option<usize>,
    u: Option<String>,
    w: Option<String>,
    n: Option<usize>,
) -> Result<PolytopeDocument> {
    let v = match family {
        Family::Simplex => builders::simplex(need(dim, "dim", "simplex")?)?,
        Family::Cube => builders::cube(need(dim, "dim", "cube")?)?,
        Family::CrossPolytope => builders::cross_polytope(need(dim, "dim", "cross-polytope")?)?,
        Family::Polygon => builders::polygon(need(gon.or(n), "gon", "polygon")?)?,
        Family::Pyramid => builders::pyramid(&base_for(dim, gon, "pyramid")?)?,
        Family::Bipyramid => builders::bipyramid(&base_for(dim, gon, "bipyramid")?)?,
        Family::Prism => builders::prism(&base_for(dim, gon, "prism")?)?,
        Family::Bruhat => {
            let u: Permutation = need(u, "u", "bruhat")?.parse()?;
            let w: Permutation = need(w, "w", "bruhat")?.parse()?;
            let n = n.unwrap_or(u.len());
            builders::bruhat_interval_polytope(&u, &w, n)?
        }
        Family::Gz3 => return Ok(PolytopeDocument::from_hrep("gelfand-zetlin-3", &builders::gelfand_zetlin_3())),
    };
    Ok(PolytopeDocument::from_vrep(&v))
}

fn faces_text(p: &Polytope) -> String {
    let doc = FacesDocument::new(&p.name, &p.lattice);
    let mut s = format!("f-vector: {}\n", p.lattice.f_vector());
    for (k, faces) in doc.faces.iter().enumerate() {
        s.push_str(&format!("{k}-faces ({}):\n", faces.len()));
        for f in faces {
            s.push_str(&format!("  {f:?}\n"));
        }
    }
    s
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen { family, dim, gon, u, w, n, output } => {
            let doc = generate(family, dim, gon, u, w, n)?;
            write_output(output.as_deref(), &emit_polytope(&doc))?;
            Ok(0)
        }
        Command::Faces { file, json, fvector } => {
            let p = load(&file)?;
            let text = if json {
                FacesDocument::new(&p.name, &p.lattice).to_json()
            } else if fvector {
                format!("{}\n", p.lattice.f_vector())
            } else {
                faces_text(&p)
            };
            write_output(None, &text)?;
            Ok(0)
        }
        Command::Search { file, require, budget, parallel, emit_certificate: cert_path } => {
            let p = load(&file)?;
            let constraint = require.into();
            let outcome = search_conic_with(&p.lattice, &SearchOptions { constraint, budget, parallel });
            match &outcome {
                SearchOutcome::Found(cert) => {
                    let bases: Vec<String> = cert.bases().map(ToString::to_string).collect();
                    println!("found: {}", bases.join(", "));
                    if let Some(path) = cert_path {
                        let doc = CertificateDocument::from_certificate(cert, &p.lattice, constraint);
                        write_output(Some(&path), &emit_certificate(&doc))?;
                    }
                    Ok(0)
                }
                SearchOutcome::NotConic => {
                    println!("not conic under '{constraint}'");
                    Ok(EXIT_NEGATIVE)
                }
                SearchOutcome::Inconclusive => {
                    println!("inconclusive: budget exhausted");
                    Ok(EXIT_INCONCLUSIVE)
                }
            }
        }
        Command::Verify { file, certificate, require } => {
            let p = load(&file)?;
            let doc = parse_certificate(&read_input(&certificate)?)?;
            let cert = match doc.to_certificate(&p.lattice) {
                Ok(c) => c,
                Err(e @ Error::InconsistentWitness(_)) => {
                    println!("invalid: {e}");
                    return Ok(EXIT_NEGATIVE);
                }
                Err(e) => return Err(e),
            };
            let v = verify_certificate(&p.lattice, &cert, require.into());
            if v.valid {
                println!("valid");
                Ok(0)
            } else {
                println!("invalid: {}", v.message);
                Ok(EXIT_NEGATIVE)
            }
        }
        Command::Enumerate { file, require, limit } => {
            let p = load(&file)?;
            let all = enumerate_all_sequences(&p.lattice, require.into(), limit)?;
            let mut s = format!("{} sequence(s)\n", all.len());
            for cert in &all {
                let order: Vec<String> = cert.steps.iter().map(|st| st.vertex.to_string()).collect();
                let bases: Vec<String> = cert.bases().map(ToString::to_string).collect();
                s.push_str(&format!("[{}] -> {}  bases: {}\n", order.join(" "), cert.terminal_vertex, bases.join(", ")));
            }
            write_output(None, &s)?;
            Ok(if all.is_empty() { EXIT_NEGATIVE } else { 0 })
        }
        Command::Analyze { file, format, budget, parallel } => {
            let p = load(&file)?;
            let report = analyze(&p, &AnalysisOptions { budget, parallel })?;
            let text = match format {
                Format::Json => emit_report(&report),
                Format::Text => report.to_text(),
            };
            write_output(None, &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
