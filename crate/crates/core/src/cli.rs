//! The `plurican` command line, as a library function so it can be driven
//! from tests without spawning a process.
//!
//! Every command prints one pretty-printed JSON object carrying
//! `"schema": "plurican/1"`. Exit status is 0 on success, 1 when a hypothesis
//! or validation check fails, and 2 on malformed input.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arrangements::{
    analyze_extension, check_campedelli, compute_incidences, k2_from_heavy_points, Field,
    LabeledArrangement,
};
use crate::catalog::{catalog, lookup, CatalogEntry};
use crate::error::{Error, Result};
use crate::evenclass::{verify_lemma_ev, LemmaEvReport};
use crate::invariants::{
    branch_curve_genus, composed_canonical_degree, covering_invariants,
    generic_pluricanonical_smooth, moduli_dimension, moduli_dimension_lower_bound,
    pg_of_double_cover_pg0, CoveringParams, SurfaceInvariants,
};
use crate::torsion::{
    covering_count, cnew_component_count, cplus_total, non_divisible_torsion_witness, orbit_count,
    orbit_count_burnside, theorem_mod_component_bound, tor_d_order, AutAction, FiniteAbelianGroup,
    GroupElement, BURNSIDE_GROUP_LIMIT,
};

pub const SCHEMA: &str = "plurican/1";

#[derive(Parser, Debug)]
#[command(name = "plurican", version, about = "Exact checks for pluricanonical cyclic coverings of surfaces")]
#[command(allow_negative_numbers = true)]
struct Cli {
    /// Worker threads for the parallel enumerations.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..=256))]
    workers: Option<u16>,

    /// Write the JSON result to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate and classify the totally even 8-subsets of PG(3, F2).
    VerifyLemmaEv,
    /// Invariants of a numerically (d, m)-canonical covering.
    Invariants(InvariantsArgs),
    /// Torsion criteria for counting moduli components.
    Components(ComponentsArgs),
    /// Validate a labeled line arrangement.
    CheckArrangement {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
    /// All intersection points of a line arrangement, with multiplicities.
    Incidences { file: PathBuf },
    /// List the built-in base surfaces.
    Catalog,
    /// Recompute one of the headline numbers.
    Reproduce {
        #[command(subcommand)]
        recipe: Recipe,
    },
}

#[derive(Args, Debug)]
struct InvariantsArgs {
    #[arg(long)]
    d: i64,
    #[arg(long)]
    m: i64,
    /// A catalogue name (see `catalog`).
    #[arg(long, conflicts_with_all = ["pa", "k2", "q"])]
    surface: Option<String>,
    #[arg(long, required_unless_present = "surface", requires = "k2")]
    pa: Option<i64>,
    #[arg(long, required_unless_present = "surface", requires = "pa")]
    k2: Option<i64>,
    #[arg(long, default_value_t = 0)]
    q: i64,
}

#[derive(Args, Debug)]
struct ComponentsArgs {
    /// Cyclic factor orders, e.g. `2,2,2`.
    #[arg(long)]
    group: String,
    #[arg(long)]
    d: u64,
    #[arg(long)]
    m: Option<u64>,
    /// JSON automorphism spec: one `{"kind": ...}` object or a list of them.
    #[arg(long, value_name = "FILE")]
    aut: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Mode {
    Campedelli,
    Extension,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Recipe {
    /// Components of the moduli of double covers of Campedelli surfaces.
    Camp1Moduli,
    /// Components for coverings of the K^2 = 333 ball quotients.
    Cplus {
        #[arg(long, default_value_t = 2)]
        d: u64,
        #[arg(long, default_value_t = 3)]
        m: u64,
    },
    /// Canonical degree 16 of the double cover of a Campedelli surface.
    CampedelliCover,
    /// Canonical degree 8 of double covers of Burniat surfaces.
    BurniatCover,
    /// Canonical degree 4 of the double cover of the K^2 = 3 surface.
    MlpCover,
    /// The totally even 8-set census.
    LemmaEv,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: &'static str,
    command: &'a str,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'static str,
    message: &'a str,
}

#[derive(Serialize)]
struct Failure<'a> {
    error: ErrorBody<'a>,
}

/// A rendered result and whether the checks it reports passed.
struct Reply {
    json: String,
    passed: bool,
}

fn render<T: Serialize>(command: &str, body: T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&Envelope { schema: SCHEMA, command, body })
        .map_err(|e| Error::Inconsistent(format!("serializing output: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn reply<T: Serialize>(command: &str, body: T) -> Result<Reply> {
    Ok(Reply { json: render(command, body)?, passed: true })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Io(_) => 2,
        _ => 1,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    let name = command_name(&cli.command);
    let result = match cli.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build()
            .map_err(|e| Error::Validation(format!("cannot start {n} workers: {e}")))
            .and_then(|pool| pool.install(|| dispatch(&cli.command))),
        None => dispatch(&cli.command),
    };
    let (code, json) = match result {
        Ok(r) => (if r.passed { 0 } else { 1 }, r.json),
        Err(e) => {
            let message = e.to_string();
            let body = Failure { error: ErrorBody { kind: e.kind(), message: &message } };
            match render(name, body) {
                Ok(json) => (exit_code(&e), json),
                Err(e2) => return Outcome { code: 1, stdout: String::new(), stderr: e2.to_string() },
            }
        }
    };
    match &cli.out {
        Some(path) => match std::fs::write(path, &json) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("cannot write {}: {e}\n", path.display()),
            },
        },
        None => Outcome { code, stdout: json, stderr: String::new() },
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::VerifyLemmaEv => "verify-lemma-ev",
        Command::Invariants(_) => "invariants",
        Command::Components(_) => "components",
        Command::CheckArrangement { .. } => "check-arrangement",
        Command::Incidences { .. } => "incidences",
        Command::Catalog => "catalog",
        Command::Reproduce { .. } => "reproduce",
    }
}

fn dispatch(c: &Command) -> Result<Reply> {
    let name = command_name(c);
    match c {
        Command::VerifyLemmaEv => reply(name, verify_lemma_ev()?),
        Command::Invariants(a) => reply(name, invariants(a)?),
        Command::Components(a) => reply(name, components(a)?),
        Command::CheckArrangement { file, mode } => check_arrangement(file, *mode),
        Command::Incidences { file } => {
            let arr = read_arrangement(file)?;
            #[derive(Serialize)]
            struct Body {
                field: Field,
                #[serde(flatten)]
                report: crate::arrangements::IncidenceReport,
            }
            reply(name, Body { field: arr.field(), report: compute_incidences(&arr)? })
        }
        Command::Catalog => {
            #[derive(Serialize)]
            struct Body {
                entries: &'static [CatalogEntry],
            }
            reply(name, Body { entries: catalog() })
        }
        Command::Reproduce { recipe } => reproduce(*recipe),
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_arrangement(path: &Path) -> Result<LabeledArrangement> {
    LabeledArrangement::from_json_str(&read_file(path)?)
}

#[derive(Serialize)]
struct InvariantsInput {
    #[serde(skip_serializing_if = "Option::is_none")]
    surface: Option<String>,
    d: i64,
    m: i64,
    #[serde(rename = "X")]
    x: SurfaceInvariants,
}

#[derive(Serialize)]
struct InvariantsBody {
    input: InvariantsInput,
    #[serde(rename = "Y")]
    y: SurfaceInvariants,
    branch_curve_genus: i64,
    generic_smooth: bool,
    moduli_dim_lower_bound: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    moduli_dim: Option<i64>,
}

fn invariants(a: &InvariantsArgs) -> Result<InvariantsBody> {
    let x = match (&a.surface, a.pa, a.k2) {
        (Some(name), _, _) => lookup(name)?.invariants,
        (None, Some(pa), Some(k2)) => SurfaceInvariants::from_pa(pa, a.q, k2)?,
        _ => return Err(Error::Parse("give --surface or both --pa and --k2".into())),
    };
    let c = CoveringParams::new(a.d, a.m)?;
    let y = covering_invariants(&x, &c)?;
    // The exact dimension formula is for double covers of ball quotients.
    let moduli_dim = (a.d == 2 && 2 * a.m >= 5 && x.is_miyaoka_yau())
        .then(|| moduli_dimension(a.m, &x))
        .transpose()?;
    Ok(InvariantsBody {
        input: InvariantsInput { surface: a.surface.clone(), d: a.d, m: a.m, x },
        y,
        branch_curve_genus: branch_curve_genus(x.k2, &c)?,
        generic_smooth: generic_pluricanonical_smooth(a.d, x.k2, a.m)?,
        moduli_dim_lower_bound: moduli_dimension_lower_bound(&c, &x)?,
        moduli_dim,
    })
}

#[derive(Serialize)]
struct ComponentsInput {
    group: FiniteAbelianGroup,
    d: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generators: Option<usize>,
}

#[derive(Serialize)]
struct ComponentsBody {
    input: ComponentsInput,
    tor_d_order: u64,
    covering_count: u64,
    theorem_mod_bound: u64,
    non_divisible_witness: Option<GroupElement>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbit_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbit_count_burnside: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cnew_count: Option<u64>,
}

fn read_generators(path: &Path) -> Result<Vec<AutAction>> {
    #[derive(serde::Deserialize)]
    #[serde(untagged)]
    enum Spec {
        One(AutAction),
        Many(Vec<AutAction>),
    }
    Ok(match serde_json::from_str::<Spec>(&read_file(path)?)? {
        Spec::One(a) => vec![a],
        Spec::Many(v) => v,
    })
}

fn components(a: &ComponentsArgs) -> Result<ComponentsBody> {
    let g = FiniteAbelianGroup::parse(&a.group)?;
    let generators = a.aut.as_deref().map(read_generators).transpose()?;
    let (orbits, burnside) = match &generators {
        Some(gens) => {
            let uf = orbit_count(&g, gens)?;
            // The recount is skipped when the generated group is too large to list.
            let bs = match orbit_count_burnside(&g, gens, BURNSIDE_GROUP_LIMIT) {
                Ok(n) if n != uf => {
                    return Err(Error::Inconsistent(format!(
                        "union-find gives {uf} orbits, Burnside {n}"
                    )))
                }
                Ok(n) => Some(n),
                Err(Error::Validation(_)) => None,
                Err(e) => return Err(e),
            };
            (Some(uf), bs)
        }
        None => (None, None),
    };
    let cnew = match a.m {
        Some(m) => {
            let gens = generators.clone().unwrap_or_else(|| vec![AutAction::identity()]);
            Some(cnew_component_count(&g, &gens, a.d, m)?)
        }
        None => None,
    };
    Ok(ComponentsBody {
        tor_d_order: tor_d_order(&g, a.d)?,
        covering_count: covering_count(&g, a.d)?,
        theorem_mod_bound: theorem_mod_component_bound(&g, a.d)?,
        non_divisible_witness: non_divisible_torsion_witness(&g, a.d)?,
        orbit_count: orbits,
        orbit_count_burnside: burnside,
        cnew_count: cnew,
        input: ComponentsInput {
            group: g,
            d: a.d,
            m: a.m,
            generators: generators.as_ref().map(Vec::len),
        },
    })
}

fn check_arrangement(file: &Path, mode: Option<Mode>) -> Result<Reply> {
    let arr = read_arrangement(file)?;
    let mode = match (mode, arr.lines().len()) {
        (Some(m), _) => m,
        (None, 7) => Mode::Campedelli,
        (None, 8) => Mode::Extension,
        (None, n) => {
            return Err(Error::Validation(format!(
                "cannot infer the mode for {n} lines; pass --mode"
            )))
        }
    };
    #[derive(Serialize)]
    struct Body<T: Serialize> {
        mode: Mode,
        passed: bool,
        report: T,
    }
    let name = "check-arrangement";
    match mode {
        Mode::Campedelli => {
            let report = check_campedelli(&arr)?;
            let passed = report.passed;
            Ok(Reply { json: render(name, Body { mode, passed, report })?, passed })
        }
        Mode::Extension => {
            let report = analyze_extension(&arr)?;
            let passed = report.sum_zero && report.totally_even;
            Ok(Reply { json: render(name, Body { mode, passed, report })?, passed })
        }
    }
}

#[derive(Serialize)]
struct CoverStep {
    surface: String,
    #[serde(rename = "X")]
    x: SurfaceInvariants,
    #[serde(rename = "Y")]
    y: SurfaceInvariants,
    base_map_degree: u64,
    canonical_map_degree: u64,
}

/// The (2, 1)-canonical double cover of a catalogue surface whose
/// bicanonical map has known degree.
fn double_cover_step(name: &str) -> Result<CoverStep> {
    let entry = lookup(name)?;
    let base = entry
        .bicanonical_map_degree
        .ok_or_else(|| Error::Validation(format!("{name} has no recorded bicanonical degree")))?;
    let y = covering_invariants(&entry.invariants, &CoveringParams::new(2, 1)?)?;
    let pg = pg_of_double_cover_pg0(&entry.invariants, 1)?;
    if pg != y.pg {
        return Err(Error::Inconsistent(format!("p_g(Y) {pg} vs {}", y.pg)));
    }
    Ok(CoverStep {
        surface: name.to_string(),
        x: entry.invariants,
        y,
        base_map_degree: base,
        canonical_map_degree: composed_canonical_degree(base)?,
    })
}

fn reproduce(recipe: Recipe) -> Result<Reply> {
    let name = "reproduce";
    match recipe {
        Recipe::Camp1Moduli => {
            let census = verify_lemma_ev()?;
            let campedelli = lookup("campedelli")?;
            let torsion = campedelli
                .torsion
                .clone()
                .ok_or_else(|| Error::Validation("campedelli torsion missing".into()))?;
            let y = covering_invariants(&campedelli.invariants, &CoveringParams::new(2, 1)?)?;
            #[derive(Serialize)]
            struct Orbit {
                #[serde(rename = "type")]
                kind: &'static str,
                size: u64,
                stabilizer_order: u64,
            }
            #[derive(Serialize)]
            struct Evidence {
                source: &'static str,
                total_count: usize,
                orbit_count: usize,
                burnside_orbit_count: u64,
                orbits: Vec<Orbit>,
                theorem_mod_bound: u64,
            }
            #[derive(Serialize)]
            struct Body {
                recipe: &'static str,
                anchor: &'static str,
                inputs: serde_json::Value,
                #[serde(rename = "Y")]
                y: SurfaceInvariants,
                components: usize,
                evidence: Evidence,
            }
            reply(
                name,
                Body {
                    recipe: "camp1-moduli",
                    anchor: "(2,1)-canonical double covers of Campedelli surfaces: M_{16,4} has exactly 2 connected components (one per GL(4,2)-orbit of totally even 8-sets)",
                    inputs: serde_json::json!({ "surface": "campedelli", "d": 2, "m": 1, "torsion": torsion }),
                    y,
                    components: census.orbit_count,
                    evidence: Evidence {
                        source: "lemma-ev census",
                        total_count: census.total_count,
                        orbit_count: census.orbit_count,
                        burnside_orbit_count: census.burnside_orbit_count,
                        orbits: census
                            .orbits
                            .iter()
                            .map(|o| Orbit { kind: o.kind, size: o.size, stabilizer_order: o.stabilizer_order })
                            .collect(),
                        theorem_mod_bound: theorem_mod_component_bound(&torsion, 2)?,
                    },
                },
            )
        }
        Recipe::Cplus { d, m } => {
            let surface = lookup("kk1-example-1")?;
            let torsion = FiniteAbelianGroup::homocyclic(5, 6)?;
            let per_surface = cnew_component_count(&torsion, &[AutAction::identity()], d, m)?;
            let y = covering_invariants(
                &surface.invariants,
                &CoveringParams::new(
                    i64::try_from(d).map_err(|_| Error::Overflow("d"))?,
                    i64::try_from(m).map_err(|_| Error::Overflow("m"))?,
                )?,
            )?;
            #[derive(Serialize)]
            struct Body {
                recipe: &'static str,
                anchor: &'static str,
                inputs: serde_json::Value,
                #[serde(rename = "Y")]
                y: SurfaceInvariants,
                base_surfaces: u64,
                orbits_per_surface: u64,
                components: u64,
            }
            reply(
                name,
                Body {
                    recipe: "cplus",
                    anchor: "coverings of the K^2 = 333, e = 111 ball quotients: at least 3 * 5^6 = 46875 connected components",
                    inputs: serde_json::json!({ "d": d, "m": m, "torsion": torsion, "action": "trivial" }),
                    y,
                    base_surfaces: 3,
                    orbits_per_surface: per_surface,
                    components: cplus_total(d, m)?,
                },
            )
        }
        Recipe::CampedelliCover => {
            let step = double_cover_step("campedelli")?;
            let torsion = lookup("campedelli")?
                .torsion
                .clone()
                .ok_or_else(|| Error::Validation("campedelli torsion missing".into()))?;
            #[derive(Serialize)]
            struct Body {
                recipe: &'static str,
                anchor: &'static str,
                #[serde(flatten)]
                step: CoverStep,
                covering_count: u64,
            }
            reply(
                name,
                Body {
                    recipe: "campedelli-cover",
                    anchor: "(2,1)-canonical double cover of a Campedelli surface: K^2 = 16, p_a = 4, canonical map of degree 16 = 2 * 8",
                    step,
                    covering_count: covering_count(&torsion, 2)?,
                },
            )
        }
        Recipe::BurniatCover => {
            #[derive(Serialize)]
            struct Entry {
                heavy_points: u32,
                #[serde(flatten)]
                step: CoverStep,
            }
            let mut entries = Vec::new();
            for k2 in 3..=6u32 {
                let heavy = 9 - k2;
                if k2_from_heavy_points(heavy)? != k2 as i64 {
                    return Err(Error::Inconsistent(format!("K^2 from {heavy} heavy points")));
                }
                entries.push(Entry { heavy_points: heavy, step: double_cover_step(&format!("burniat-{k2}"))? });
            }
            #[derive(Serialize)]
            struct Body {
                recipe: &'static str,
                anchor: &'static str,
                surfaces: Vec<Entry>,
            }
            reply(
                name,
                Body {
                    recipe: "burniat-cover",
                    anchor: "(2,1)-canonical double covers of Burniat surfaces with 3 <= K^2 <= 6: canonical map of degree 8 = 2 * 4",
                    surfaces: entries,
                },
            )
        }
        Recipe::MlpCover => {
            #[derive(Serialize)]
            struct Body {
                recipe: &'static str,
                anchor: &'static str,
                #[serde(flatten)]
                step: CoverStep,
            }
            reply(
                name,
                Body {
                    recipe: "mlp-cover",
                    anchor: "(2,1)-canonical double cover of the p_g = 0, K^2 = 3 surface with bicanonical degree 2: canonical map of degree 4",
                    step: double_cover_step("mendes-lopes-pardini")?,
                },
            )
        }
        Recipe::LemmaEv => {
            #[derive(Serialize)]
            struct Body {
                recipe: &'static str,
                anchor: &'static str,
                #[serde(flatten)]
                report: LemmaEvReport,
            }
            reply(
                name,
                Body {
                    recipe: "lemma-ev",
                    anchor: "totally even 8-subsets of PG(3, F2) form exactly two GL(4,2)-orbits: hyperplane complements and the exceptional type",
                    report: verify_lemma_ev()?,
                },
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn json(o: &Outcome) -> serde_json::Value {
        serde_json::from_str(&o.stdout).unwrap()
    }

    #[test]
    fn invariants_campedelli() {
        let o = run(["plurican", "invariants", "--surface", "campedelli", "--d", "2", "--m", "1"]);
        assert_eq!(o.code, 0, "{o:?}");
        let v = json(&o);
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["Y"]["K2"], 16);
        assert_eq!(v["Y"]["pa"], 4);
        assert_eq!(v["Y"]["pg"], 3);
        assert_eq!(v["Y"]["q"], 0);
        assert!(v.get("moduli_dim").is_none());
    }

    #[test]
    fn invariants_explicit_and_moduli_dim() {
        let o = run(["plurican", "invariants", "--pa", "1", "--k2", "9", "--d", "2", "--m", "3"]);
        assert_eq!(o.code, 0, "{o:?}");
        let v = json(&o);
        assert_eq!(v["moduli_dim"], 135);
        assert_eq!(v["moduli_dim_lower_bound"], 135);
    }

    #[test]
    fn invariants_hypothesis_failure_is_exit_one() {
        let o = run(["plurican", "invariants", "--pa", "1", "--k2", "2", "--d", "1", "--m", "1"]);
        assert_eq!(o.code, 1);
        assert_eq!(json(&o)["error"]["kind"], "validation");
    }

    #[test]
    fn usage_errors_are_exit_two() {
        let o = run(["plurican", "frobnicate"]);
        assert_eq!(o.code, 2);
        assert!(o.stdout.is_empty());
        assert!(o.stderr.contains("Usage"));
        assert_eq!(run(["plurican"]).code, 2);
        assert_eq!(run(["plurican", "invariants", "--d", "2", "--m", "1"]).code, 2);
        assert_eq!(run(["plurican", "catalog", "--workers", "0"]).code, 2);
    }

    #[test]
    fn help_is_success() {
        let o = run(["plurican", "--help"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("reproduce"));
    }

    #[test]
    fn components_campedelli() {
        let o = run(["plurican", "components", "--group", "2,2,2", "--d", "2"]);
        assert_eq!(o.code, 0, "{o:?}");
        let v = json(&o);
        assert_eq!(v["tor_d_order"], 8);
        assert_eq!(v["covering_count"], 8);
        assert_eq!(v["theorem_mod_bound"], 2);
        assert!(v.get("cnew_count").is_none());
    }

    #[test]
    fn components_cnew_hypothesis() {
        let o = run(["plurican", "components", "--group", "5,5,5,5,5,5", "--d", "6", "--m", "1"]);
        assert_eq!(o.code, 1);
        assert_eq!(json(&o)["error"]["kind"], "hypothesis-violation");
        let o = run(["plurican", "components", "--group", "5,5,5,5,5,5", "--d", "2", "--m", "3"]);
        assert_eq!(json(&o)["cnew_count"], 15625);
    }

    #[test]
    fn missing_file_is_exit_two() {
        let o = run(["plurican", "incidences", "/nonexistent/arrangement.json"]);
        assert_eq!(o.code, 2);
        assert_eq!(json(&o)["error"]["kind"], "io");
    }

    #[test]
    fn reproduce_cplus() {
        let o = run(["plurican", "reproduce", "cplus", "--d", "2", "--m", "3"]);
        assert_eq!(o.code, 0, "{o:?}");
        let v = json(&o);
        assert_eq!(v["components"], 46875);
        assert!(v["anchor"].as_str().unwrap().contains("3 * 5^6"));
        assert_eq!(run(["plurican", "reproduce", "cplus", "--d", "6", "--m", "1"]).code, 1);
    }

    #[test]
    fn reproduce_cover_chains() {
        let deg = |recipe: &str| json(&run(["plurican", "reproduce", recipe]))["canonical_map_degree"].clone();
        assert_eq!(deg("campedelli-cover"), 16);
        assert_eq!(deg("mlp-cover"), 4);
        let v = json(&run(["plurican", "reproduce", "burniat-cover"]));
        let surfaces = v["surfaces"].as_array().unwrap();
        assert_eq!(surfaces.len(), 4);
        assert!(surfaces.iter().all(|s| s["canonical_map_degree"] == 8));
    }

    #[test]
    fn catalog_lists_entries() {
        let v = json(&run(["plurican", "catalog"]));
        assert!(v["entries"].as_array().unwrap().len() >= 8);
    }
}
