use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand};
use serde_json::{json, Value};

use legcob::diagram::{builtin, parse_front, rotation_number, thurston_bennequin, writhe, CrossingKind, FrontDiagram};
use legcob::invariants::{
    enumerate_augmentations_with_limit, enumerate_graded_rulings, front_dga, manual_profile, profile_with_limit,
    LegendrianProfile, MAX_AUGMENTATION_GENERATORS,
};
use legcob::linalg::LaurentDims;
use legcob::obstruct::{
    arnold_check, duality_feasible, knot_betti, obstruct_cobordism, obstruct_filling, sphere_betti, CobordismQuery,
};

/// Legendrian knot invariants and Lagrangian cobordism obstructions.
///
/// Each Legendrian is given by a front file (one `L|R|X <pos>` event per
/// line), by `--knot NAME`, or by `--profile FILE` holding a profile JSON.
/// Inputs are taken in command-line order.
#[derive(Parser, Debug)]
#[command(name = "legcob", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Inputs {
    /// Front files.
    files: Vec<PathBuf>,
    /// Built-in diagram (unknot, trefoil, m52_K1, m52_K2, m821, twist(M,WORD))
    /// or manual profile (flying_saucer, twisted_dumbbell).
    #[arg(long = "knot", value_name = "NAME")]
    knots: Vec<String>,
    /// Profile JSON file: {"n","tb","rot","polys","chords"}.
    #[arg(long = "profile", value_name = "FILE")]
    profiles: Vec<PathBuf>,
    /// Emit JSON, one object per line.
    #[arg(long)]
    json: bool,
    /// Refuse augmentation sweeps over more degree-0 generators than this.
    #[arg(long, value_name = "N", default_value_t = MAX_AUGMENTATION_GENERATORS)]
    max_aug_gens: usize,
}

#[derive(Args, Debug, Clone)]
struct BettiArgs {
    #[command(flatten)]
    inputs: Inputs,
    /// Betti numbers of the Legendrian as [[deg,dim],...]; defaults to the
    /// n-sphere (the circle for knots).
    #[arg(long, value_name = "JSON")]
    betti: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Thurston-Bennequin invariant, rotation number and writhe.
    Invariants(Inputs),
    /// Chekanov-Eliashberg DGA generators and differentials.
    Dga(Inputs),
    /// Graded augmentations over Z2.
    Augs(Inputs),
    /// Graded normal rulings; switches are 1-based event numbers.
    Rulings(Inputs),
    /// Set of generating family cohomology Poincare polynomials.
    Polys(Inputs),
    /// Profile JSON consumed by the obstruction commands.
    Profile(Inputs),
    /// Obstructions to a cobordism from the first input to the second.
    ObstructCobordism(Inputs),
    /// Obstructions to a filling of each input.
    ObstructFilling(Inputs),
    /// Duality exact sequence for each polynomial.
    Duality(BettiArgs),
    /// Reeb chord lower bounds r_i + r_(n-i) >= b_i.
    Arnold(BettiArgs),
}

#[derive(Debug)]
struct UsageError(String);

type CliResult<T> = Result<T, UsageError>;

fn fail(e: impl std::fmt::Display) -> UsageError {
    UsageError(e.to_string())
}

enum Source {
    File(PathBuf),
    Knot(String),
    Profile(PathBuf),
}

/// A resolved input: a diagram, or a profile without one.
struct Legendrian {
    label: String,
    diagram: Option<FrontDiagram>,
    profile: Option<LegendrianProfile>,
}

impl Legendrian {
    fn diagram(&self) -> CliResult<&FrontDiagram> {
        self.diagram.as_ref().ok_or_else(|| UsageError(format!("{}: this command needs a front diagram", self.label)))
    }

    fn profile(&self, max_aug_gens: usize) -> CliResult<LegendrianProfile> {
        match (&self.profile, &self.diagram) {
            (Some(p), _) => Ok(p.clone()),
            (None, Some(d)) => profile_with_limit(d, max_aug_gens).map_err(|e| fail(format!("{}: {e}", self.label))),
            (None, None) => unreachable!("every input resolves to a diagram or a profile"),
        }
    }
}

/// Inputs in command-line order, whatever flag introduced them.
fn ordered_sources(m: &ArgMatches, inputs: &Inputs) -> Vec<Source> {
    let mut tagged: Vec<(usize, Source)> = Vec::new();
    let indices = |id: &str| m.indices_of(id).map(|i| i.collect::<Vec<_>>()).unwrap_or_default();
    for (i, f) in indices("files").into_iter().zip(&inputs.files) {
        tagged.push((i, Source::File(f.clone())));
    }
    for (i, k) in indices("knots").into_iter().zip(&inputs.knots) {
        tagged.push((i, Source::Knot(k.clone())));
    }
    for (i, p) in indices("profiles").into_iter().zip(&inputs.profiles) {
        tagged.push((i, Source::Profile(p.clone())));
    }
    tagged.sort_by_key(|(i, _)| *i);
    tagged.into_iter().map(|(_, s)| s).collect()
}

fn resolve(source: Source) -> CliResult<Legendrian> {
    match source {
        Source::File(path) => {
            let label = path.display().to_string();
            let text = std::fs::read_to_string(&path).map_err(|e| fail(format!("{label}: {e}")))?;
            let d = parse_front(&text).map_err(|e| fail(format!("{label}: {e}")))?;
            Ok(Legendrian { label, diagram: Some(d), profile: None })
        }
        Source::Knot(name) => {
            if let Some(p) = manual_profile(&name) {
                return Ok(Legendrian { label: name, diagram: None, profile: Some(p) });
            }
            let d = builtin(&name).map_err(fail)?;
            Ok(Legendrian { label: name, diagram: Some(d), profile: None })
        }
        Source::Profile(path) => {
            let label = path.display().to_string();
            let text = std::fs::read_to_string(&path).map_err(|e| fail(format!("{label}: {e}")))?;
            let p = LegendrianProfile::from_json(&text).map_err(|e| fail(format!("{label}: {e}")))?;
            Ok(Legendrian { label, diagram: None, profile: Some(p) })
        }
    }
}

fn legendrians(m: &ArgMatches, inputs: &Inputs) -> CliResult<Vec<Legendrian>> {
    let sources = ordered_sources(m, inputs);
    if sources.is_empty() {
        return Err(UsageError("no input; give a front file, --knot NAME or --profile FILE".into()));
    }
    sources.into_iter().map(resolve).collect()
}

fn polys_json(polys: &[LaurentDims]) -> Value {
    json!(polys)
}

fn poly_set_text(polys: &[LaurentDims]) -> String {
    let parts: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn invariants(l: &Legendrian, as_json: bool) -> CliResult<String> {
    let d = l.diagram()?;
    let (tb, rot, w) = (thurston_bennequin(d), rotation_number(d), writhe(d));
    Ok(if as_json {
        json!({"tb": tb, "rot": rot, "writhe": w, "crossings": d.crossing_count(), "cusps": d.cusp_count()}).to_string()
    } else {
        format!("{}: tb = {tb}, rot = {rot}, writhe = {w}, crossings = {}, cusps = {}", l.label, d.crossing_count(), d.cusp_count())
    })
}

fn dga(l: &Legendrian, as_json: bool) -> CliResult<String> {
    let g = front_dga(l.diagram()?).map_err(|e| fail(format!("{}: {e}", l.label)))?;
    Ok(if as_json {
        let gens: Vec<Value> = g
            .generators()
            .iter()
            .map(|x| {
                let kind = match x.kind {
                    CrossingKind::Front => "crossing",
                    CrossingKind::RightCusp => "right_cusp",
                };
                json!({"id": x.id, "degree": x.degree, "kind": kind, "differential": g.differential(x.id)})
            })
            .collect();
        json!({"generators": gens}).to_string()
    } else {
        format!("{}:\n{}", l.label, g.to_string().trim_end())
    })
}

fn augs(l: &Legendrian, as_json: bool, max_aug_gens: usize) -> CliResult<String> {
    let d = l.diagram()?;
    let err = |e: legcob::invariants::InvariantsError| fail(format!("{}: {e}", l.label));
    let g = front_dga(d).map_err(err)?;
    let augs = enumerate_augmentations_with_limit(&g, max_aug_gens).map_err(err)?;
    Ok(if as_json {
        let ones: Vec<&[usize]> = augs.iter().map(|a| a.ones()).collect();
        json!({"count": augs.len(), "augmentations": ones}).to_string()
    } else {
        let mut out = format!("{}: {} augmentation(s)", l.label, augs.len());
        for a in &augs {
            let ones: Vec<String> = a.ones().iter().map(|x| format!("a{x}")).collect();
            out += &format!("\n  ones: {}", if ones.is_empty() { "none".to_string() } else { ones.join(" ") });
        }
        out
    })
}

fn rulings(l: &Legendrian, as_json: bool) -> CliResult<String> {
    let rs = enumerate_graded_rulings(l.diagram()?);
    let switches: Vec<Vec<usize>> = rs.iter().map(|r| r.switches.iter().map(|e| e + 1).collect()).collect();
    Ok(if as_json {
        json!({"count": rs.len(), "switches": switches}).to_string()
    } else {
        let mut out = format!("{}: {} graded normal ruling(s)", l.label, rs.len());
        for s in &switches {
            let s: Vec<String> = s.iter().map(usize::to_string).collect();
            out += &format!("\n  switches at events: {}", if s.is_empty() { "none".to_string() } else { s.join(" ") });
        }
        out
    })
}

fn betti_for(p: &LegendrianProfile, betti: &Option<String>) -> CliResult<LaurentDims> {
    match betti {
        Some(text) => serde_json::from_str(text).map_err(|e| fail(format!("--betti: {e}"))),
        None if p.n == 1 => Ok(knot_betti()),
        None => Ok(sphere_betti(p.n)),
    }
}

fn run(cli_matches: &ArgMatches, cli: Cli) -> CliResult<Vec<String>> {
    let (name, sub) = cli_matches.subcommand().expect("subcommand is required");
    let mut out = Vec::new();
    match cli.command {
        Command::Invariants(i) => {
            for l in legendrians(sub, &i)? {
                out.push(invariants(&l, i.json)?);
            }
        }
        Command::Dga(i) => {
            for l in legendrians(sub, &i)? {
                out.push(dga(&l, i.json)?);
            }
        }
        Command::Augs(i) => {
            for l in legendrians(sub, &i)? {
                out.push(augs(&l, i.json, i.max_aug_gens)?);
            }
        }
        Command::Rulings(i) => {
            for l in legendrians(sub, &i)? {
                out.push(rulings(&l, i.json)?);
            }
        }
        Command::Polys(i) => {
            for l in legendrians(sub, &i)? {
                let p = l.profile(i.max_aug_gens)?;
                out.push(if i.json {
                    json!({"polys": polys_json(&p.polys)}).to_string()
                } else {
                    format!("{}: {}", l.label, poly_set_text(&p.polys))
                });
            }
        }
        Command::Profile(i) => {
            for l in legendrians(sub, &i)? {
                let p = l.profile(i.max_aug_gens)?;
                out.push(if i.json {
                    p.to_json()
                } else {
                    format!(
                        "{}: n = {}, tb = {}, rot = {}, polys = {}, chords = {}",
                        l.label,
                        p.n,
                        p.tb,
                        p.rot,
                        poly_set_text(&p.polys),
                        p.chords
                    )
                });
            }
        }
        Command::ObstructCobordism(i) => {
            let ls = legendrians(sub, &i)?;
            let [a, b] = ls.as_slice() else {
                return Err(UsageError(format!("{name} needs exactly two inputs, source then target; got {}", ls.len())));
            };
            let q = CobordismQuery::new(a.profile(i.max_aug_gens)?, b.profile(i.max_aug_gens)?);
            let r = obstruct_cobordism(&q).map_err(fail)?;
            out.push(if i.json { r.to_json() } else { format!("{} -> {}\n{}", a.label, b.label, r.to_string().trim_end()) });
        }
        Command::ObstructFilling(i) => {
            for l in legendrians(sub, &i)? {
                let r = obstruct_filling(&l.profile(i.max_aug_gens)?);
                out.push(if i.json { r.to_json() } else { format!("{}\n{}", l.label, r.to_string().trim_end()) });
            }
        }
        Command::Duality(BettiArgs { inputs: i, betti }) => {
            for l in legendrians(sub, &i)? {
                let p = l.profile(i.max_aug_gens)?;
                let b = betti_for(&p, &betti)?;
                let results: Vec<(LaurentDims, bool)> =
                    p.polys.iter().map(|q| (q.clone(), duality_feasible(q, p.n, &b).is_some())).collect();
                out.push(if i.json {
                    let rs: Vec<Value> = results.iter().map(|(q, ok)| json!({"poly": q, "feasible": ok})).collect();
                    json!({"n": p.n, "betti": b, "results": rs}).to_string()
                } else {
                    let mut s = format!("{} (n = {}, betti {})", l.label, p.n, b);
                    for (q, ok) in &results {
                        s += &format!("\n  {q}: {}", if *ok { "feasible" } else { "infeasible" });
                    }
                    s
                });
            }
        }
        Command::Arnold(BettiArgs { inputs: i, betti }) => {
            for l in legendrians(sub, &i)? {
                let p = l.profile(i.max_aug_gens)?;
                let b = betti_for(&p, &betti)?;
                let r = arnold_check(&p.chords, p.n, &b);
                out.push(if i.json {
                    serde_json::to_string(&r).expect("report serializes")
                } else {
                    let mut s = format!("{}: {}", l.label, if r.pass { "pass" } else { "FAIL" });
                    for m in &r.margins {
                        s += &format!("\n  i = {}: r_i + r_(n-i) - b_i = {}", m.i, m.margin);
                    }
                    s
                });
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let matches = Cli::command().get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(&matches, cli) {
        Ok(lines) => {
            for line in lines {
                println!("{line}");
            }
            ExitCode::SUCCESS
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
