//! Command-line surface for the squiggle calculus and the monad lab.
//!
//! Exit codes: 0 on success, 1 on a verification failure (diagnoses and
//! witnesses are printed), 2 on usage errors. Squiggle arguments accept the
//! canonical grammar or the named literals `f`, `u`, `eta`, `eps`, `alpha`,
//! `beta`, `omega`, `tau`, `mu`. The width bound defaults to the
//! `COHADJ_MAX_WIDTH` environment variable, or 8.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cohadj::bridge::{coequalizer_check, squiggle_to_ss, ss_to_squiggle, SSArrow};
use cohadj::computad::{
    atomic_decompose, enumerate_hom, normal_form, segal_check, Subcomputad, Truncation,
};
use cohadj::fillable::{cell_certificate, classify, fillable_parent, filtration, is_parental};
use cohadj::hammock::hammock_grid;
use cohadj::monad::{
    build_weight, canonical_resolution, compare_em, cone_solver, conservativity_check,
    eilenberg_moore, monad_resolution, relative_computad_check, FinCategory, FinFunctor, FinMonad,
    Inclusion, WeightKind,
};
use cohadj::ops::{act, vertex, SimplicialOperator};
use cohadj::squiggle::{Sign, Squiggle};
use cohadj::text::SyntaxError;
use cohadj::{names, parse, render};

#[derive(Parser)]
#[command(
    name = "cohadj",
    version,
    about = "Exact combinatorics of the free coherent adjunction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    #[value(name = "-", alias = "minus")]
    Minus,
    #[value(name = "+", alias = "plus")]
    Plus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Minus => Sign::Minus,
            SignArg::Plus => Sign::Plus,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightArg {
    Wplus,
    Wminus,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a word and print its canonical form.
    Validate { squiggle: String },
    /// Compose two arrows: `compose B A` prints B∘A.
    Compose { left: String, right: String },
    /// Apply simplicial operators, left to right.
    Act {
        squiggle: String,
        /// Operator: `[m->n: v0 ... vm]`, or `dI`/`sI` generator shorthand.
        #[arg(long = "op", required = true)]
        ops: Vec<String>,
    },
    /// List all vertices of an arrow.
    Vertices { squiggle: String },
    /// Split an arrow into its atomic factors.
    Decompose { squiggle: String },
    /// The unique normal form: degenerated nondegenerate atomic factors.
    NormalForm {
        squiggle: String,
        #[arg(long)]
        json: bool,
    },
    /// Report whether an arrow is atomic.
    Atomic { squiggle: String },
    /// Enumerate a bounded hom-space, line per arrow plus a manifest.
    Enumerate {
        #[arg(long)]
        src: SignArg,
        #[arg(long)]
        tgt: SignArg,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        #[arg(long)]
        max_width: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Verify the Segal condition on one hom-space.
    Segal {
        #[arg(long)]
        src: SignArg,
        #[arg(long)]
        tgt: SignArg,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        m: usize,
        #[arg(long)]
        max_width: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Generate a subcomputad and list its atomic arrows.
    Subcomputad {
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        #[arg(long)]
        max_width: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Test whether a generated subcomputad is parental.
    Parental {
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        #[arg(long)]
        max_width: Option<usize>,
    },
    /// Filter a nested pair of parental subcomputads into stages.
    Filtrate {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        #[arg(long)]
        max_width: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// The fillable parent of a nondegenerate atomic nonfillable arrow.
    Parent { squiggle: String },
    /// The pushout cell certificate of a fillable arrow over a base.
    CellCert {
        squiggle: String,
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        #[arg(long)]
        max_width: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Translate a squiggle to its ordinal chain.
    ToSs { squiggle: String },
    /// Translate an ordinal chain back to the unique squiggle in bounds.
    FromSs {
        chain: String,
        #[arg(long)]
        max_width: Option<usize>,
    },
    /// Verify the action coequalizer against the opposite nerve.
    CoeqCheck {
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        bound: i64,
        #[arg(long)]
        json: bool,
    },
    /// Print the hammock grid of an arrow.
    Hammock { squiggle: String },
    /// Draw the squiggle as ASCII art.
    Render { squiggle: String },
    /// The monad resolution of an object.
    Resolve {
        #[arg(long)]
        monad: String,
        #[arg(long)]
        object: String,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        #[arg(long)]
        json: bool,
    },
    /// The Eilenberg-Moore category and monadic adjunction.
    Em {
        #[arg(long)]
        monad: String,
        #[arg(long)]
        json: bool,
    },
    /// Solve for weighted cones at one summit dimension.
    Cones {
        #[arg(long)]
        monad: String,
        #[arg(long, value_enum, default_value_t = WeightArg::Wminus)]
        weight: WeightArg,
        #[arg(short)]
        n: usize,
        #[arg(long)]
        max_width: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Compare cone sets at summits 0..2 with the classical algebras.
    CompareEm {
        #[arg(long)]
        monad: String,
        #[arg(long)]
        max_width: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check that a functor reflects isomorphisms.
    Conservative {
        /// A monad file: checks its monadic forgetful functor.
        #[arg(long, conflicts_with = "functor")]
        monad: Option<String>,
        /// A functor file: `{source, target, objMap, morMap}`.
        #[arg(long)]
        functor: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// The canonical split-coequalizer resolution of an algebra.
    CanonicalResolution {
        #[arg(long)]
        monad: String,
        #[arg(long)]
        object: String,
        #[arg(long)]
        action: String,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        #[arg(long)]
        json: bool,
    },
    /// Verify projective cofibrancy of a weight inclusion.
    Weights {
        #[arg(long, value_enum)]
        check: WeightCheckArg,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        #[arg(long)]
        max_width: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightCheckArg {
    /// Mnd into the collage of the algebra weight.
    MndWminus,
    /// The represented weight into the algebra weight.
    WplusWminus,
}

/// Verification failures exit 1; usage errors exit 2.
enum Failure {
    Verification(String),
    Usage(String),
}

fn default_width() -> usize {
    env_width(8)
}

/// The cone solver defaults lower: its probe re-solves two widths higher.
fn solver_width() -> usize {
    env_width(6)
}

fn env_width(fallback: usize) -> usize {
    std::env::var("COHADJ_MAX_WIDTH")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(fallback)
}

fn arg_squiggle(text: &str) -> Result<Squiggle, Failure> {
    if let Some(named) = names::by_name(text.trim()) {
        return Ok(named);
    }
    match parse(text) {
        Ok(s) => Ok(s),
        Err(SyntaxError::Word(e)) => Err(Failure::Verification(format!("invalid word: {e}"))),
        Err(e) => Err(Failure::Usage(format!("cannot parse {text:?}: {e}"))),
    }
}

/// Splits a `{a,b,...}` generator list at top-level commas, so squiggle
/// literals with their own commas pass through.
fn arg_gens(text: &str) -> Result<Vec<Squiggle>, Failure> {
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| Failure::Usage(format!("expected {{...}} generator list, got {text:?}")))?;
    let mut items = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in inner.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth -= 1;
                current.push(c);
            }
            ',' if depth == 0 => items.push(std::mem::take(&mut current)),
            _ => current.push(c),
        }
    }
    if !current.trim().is_empty() {
        items.push(current);
    }
    items.iter().map(|t| arg_squiggle(t)).collect()
}

fn arg_operator(text: &str, current_dim: usize) -> Result<SimplicialOperator, Failure> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix('d') {
        if let Ok(i) = rest.parse::<usize>() {
            return SimplicialOperator::face(current_dim, i)
                .map_err(|e| Failure::Usage(e.to_string()));
        }
    }
    if let Some(rest) = t.strip_prefix('s') {
        if let Ok(i) = rest.parse::<usize>() {
            return SimplicialOperator::degeneracy(current_dim, i)
                .map_err(|e| Failure::Usage(e.to_string()));
        }
    }
    SimplicialOperator::parse(t).map_err(|e| Failure::Usage(e.to_string()))
}

fn load_monad(path: &str) -> Result<FinMonad, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    FinMonad::from_json(&text).map_err(|e| Failure::Verification(format!("monad rejected: {e}")))
}

fn json_out<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn bounds_header(what: &str, max_dim: usize, max_width: usize) -> String {
    format!("# {what} certified at max_dim={max_dim} max_width={max_width}")
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { squiggle } => {
            let s = arg_squiggle(&squiggle)?;
            println!("{}", render(&s));
        }
        Command::Compose { left, right } => {
            let b = arg_squiggle(&left)?;
            let a = arg_squiggle(&right)?;
            let c = b
                .compose(&a)
                .map_err(|e| Failure::Verification(e.to_string()))?;
            println!("{}", render(&c));
        }
        Command::Act { squiggle, ops } => {
            let mut s = arg_squiggle(&squiggle)?;
            for op_text in &ops {
                let op = arg_operator(op_text, s.dim())?;
                s = act(&s, &op).map_err(|e| Failure::Verification(e.to_string()))?;
            }
            println!("{}", render(&s));
        }
        Command::Vertices { squiggle } => {
            let s = arg_squiggle(&squiggle)?;
            for j in 0..=s.dim() {
                println!("{j}: {}", render(&vertex(&s, j).unwrap()));
            }
        }
        Command::Decompose { squiggle } => {
            let s = arg_squiggle(&squiggle)?;
            let parts = atomic_decompose(&s).map_err(|e| Failure::Verification(e.to_string()))?;
            for p in parts {
                println!("{}", render(&p));
            }
        }
        Command::NormalForm { squiggle, json } => {
            let s = arg_squiggle(&squiggle)?;
            let nf = normal_form(&s).map_err(|e| Failure::Verification(e.to_string()))?;
            if json {
                let factors: Vec<serde_json::Value> = nf
                    .factors
                    .iter()
                    .map(|(core, sigma)| {
                        serde_json::json!({
                            "core": render(core),
                            "degeneracy": sigma.render(),
                        })
                    })
                    .collect();
                println!("{}", json_out(&factors));
            } else {
                for (core, sigma) in &nf.factors {
                    println!("{} . {}", render(core), sigma.render());
                }
            }
        }
        Command::Atomic { squiggle } => {
            let s = arg_squiggle(&squiggle)?;
            println!("{}", s.is_atomic());
        }
        Command::Enumerate {
            src,
            tgt,
            max_dim,
            max_width,
            json,
        } => {
            let width = max_width.unwrap_or_else(default_width);
            let table = enumerate_hom(src.into(), tgt.into(), max_dim, width);
            if json {
                let arrows: Vec<String> = table.render_lines().lines().map(String::from).collect();
                println!(
                    "{}",
                    json_out(&serde_json::json!({
                        "manifest": table.manifest(),
                        "arrows": arrows,
                    }))
                );
            } else {
                print!("{}", table.render_lines());
                println!("{}", serde_json::to_string(&table.manifest()).unwrap());
            }
        }
        Command::Segal {
            src,
            tgt,
            n,
            m,
            max_width,
            json,
        } => {
            let width = max_width.unwrap_or_else(default_width);
            if n == 0 || m == 0 {
                return Err(Failure::Usage("Segal check needs n, m >= 1".into()));
            }
            let report = segal_check(src.into(), tgt.into(), n, m, width);
            if json {
                println!("{}", json_out(&report));
            } else {
                println!("{}", bounds_header("segal", n + m, width));
                println!(
                    "pairs={} violations={} passed={}",
                    report.pairs_checked,
                    report.violations.len(),
                    report.passed
                );
                for v in &report.violations {
                    println!("violation: {v}");
                }
            }
            if !report.passed {
                return Err(Failure::Verification("Segal condition failed".into()));
            }
        }
        Command::Subcomputad {
            gens,
            max_dim,
            max_width,
            json,
        } => {
            let width = max_width.unwrap_or_else(default_width);
            let gens = arg_gens(&gens)?;
            let s = Subcomputad::generate(&gens, Truncation::new(max_dim, width))
                .map_err(|e| Failure::Verification(e.to_string()))?;
            let atoms: Vec<String> = s.atoms().iter().map(render).collect();
            if json {
                println!(
                    "{}",
                    json_out(&serde_json::json!({
                        "maxDim": max_dim,
                        "maxWidth": width,
                        "count": atoms.len(),
                        "atoms": atoms,
                    }))
                );
            } else {
                for a in &atoms {
                    println!("{a}");
                }
                println!(
                    "{}",
                    serde_json::json!({"maxDim": max_dim, "maxWidth": width, "count": atoms.len()})
                );
            }
        }
        Command::Parental {
            gens,
            max_dim,
            max_width,
        } => {
            let width = max_width.unwrap_or_else(default_width);
            let gens = arg_gens(&gens)?;
            let s = Subcomputad::generate(&gens, Truncation::new(max_dim, width))
                .map_err(|e| Failure::Verification(e.to_string()))?;
            let report = is_parental(&s);
            println!("{}", bounds_header("parental", max_dim, width));
            println!("{}", report.parental);
            if !report.parental {
                for w in &report.witnesses {
                    println!("witness: {}", render(w));
                }
                return Err(Failure::Verification("subcomputad is not parental".into()));
            }
        }
        Command::Filtrate {
            from,
            to,
            max_dim,
            max_width,
            json,
        } => {
            let width = max_width.unwrap_or_else(default_width);
            let trunc = Truncation::new(max_dim, width);
            let inner = Subcomputad::generate(&arg_gens(&from)?, trunc)
                .map_err(|e| Failure::Verification(e.to_string()))?;
            let outer = Subcomputad::generate(&arg_gens(&to)?, trunc)
                .map_err(|e| Failure::Verification(e.to_string()))?;
            let report = filtration(&inner, &outer, trunc)
                .map_err(|e| Failure::Verification(e.to_string()))?;
            if json {
                println!("{}", json_out(&report));
            } else {
                println!("{}", bounds_header("filtration", max_dim, width));
                for stage in &report.stages {
                    println!(
                        "stage {} triple={:?} arrows={:?}",
                        stage.index, stage.triple, stage.arrows
                    );
                }
            }
        }
        Command::Parent { squiggle } => {
            let s = arg_squiggle(&squiggle)?;
            let p = fillable_parent(&s).map_err(|e| Failure::Verification(e.to_string()))?;
            println!("{}", render(&p));
        }
        Command::CellCert {
            squiggle,
            base,
            max_dim,
            max_width,
            json,
        } => {
            let width = max_width.unwrap_or_else(default_width);
            let s = arg_squiggle(&squiggle)?;
            let info = classify(&s);
            if !info.fillable {
                return Err(Failure::Verification(format!(
                    "{} is not fillable: {:?}",
                    render(&s),
                    info.reason
                )));
            }
            let base = Subcomputad::generate(&arg_gens(&base)?, Truncation::new(max_dim, width))
                .map_err(|e| Failure::Verification(e.to_string()))?;
            let cert =
                cell_certificate(&s, &base).map_err(|e| Failure::Verification(e.to_string()))?;
            if json {
                println!("{}", json_out(&cert));
            } else {
                println!("{}", bounds_header("cell-cert", max_dim, width));
                println!("{cert:?}");
            }
        }
        Command::ToSs { squiggle } => {
            let s = arg_squiggle(&squiggle)?;
            println!("{}", squiggle_to_ss(&s).render());
        }
        Command::FromSs { chain, max_width } => {
            let width = max_width.unwrap_or_else(default_width);
            let x = SSArrow::parse(&chain).map_err(|e| Failure::Usage(e.to_string()))?;
            let s = ss_to_squiggle(&x, width).map_err(|e| Failure::Verification(e.to_string()))?;
            println!("{}", render(&s));
        }
        Command::CoeqCheck { k, bound, json } => {
            let report = coequalizer_check(k, bound);
            if json {
                println!("{}", json_out(&report));
            } else {
                println!("# coeq-check certified at k={k} bound={bound}");
                println!(
                    "pairs={} classes={} targets={} passed={}",
                    report.pairs, report.classes, report.targets_hit, report.passed
                );
            }
            if !report.passed {
                return Err(Failure::Verification("coequalizer check failed".into()));
            }
        }
        Command::Hammock { squiggle } => {
            let s = arg_squiggle(&squiggle)?;
            println!("{}", hammock_grid(&s).render());
        }
        Command::Render { squiggle } => {
            let s = arg_squiggle(&squiggle)?;
            print!("{}", cohadj::text::ascii_picture(&s));
        }
        Command::Resolve {
            monad,
            object,
            max_dim,
            json,
        } => {
            let m = load_monad(&monad)?;
            let b = m
                .base
                .object_id(&object)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let r = monad_resolution(&m, b, max_dim);
            if json {
                println!("{}", json_out(&r));
            } else {
                println!("levels: {}", r.levels.join(" -> "));
                for (k, row) in r.cofaces.iter().enumerate() {
                    println!("cofaces into level {}: {}", k, row.join(", "));
                }
                for (k, row) in r.codegeneracies.iter().enumerate() {
                    println!("codegeneracies onto level {}: {}", k, row.join(", "));
                }
                println!("cosimplicial identities: {}", r.cosimplicial_identities_hold);
            }
            if !r.cosimplicial_identities_hold {
                return Err(Failure::Verification(
                    "cosimplicial identities failed".into(),
                ));
            }
        }
        Command::Em { monad, json } => {
            let m = load_monad(&monad)?;
            let em = eilenberg_moore(&m).map_err(|e| Failure::Verification(e.to_string()))?;
            if json {
                let algebras: Vec<serde_json::Value> = em
                    .algebras
                    .iter()
                    .map(|&(b, beta)| {
                        serde_json::json!({
                            "object": m.base.object_name(b),
                            "action": m.base.morphism(beta).id,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json_out(&serde_json::json!({
                        "algebras": algebras,
                        "morphisms": em.category.morphism_count(),
                        "adjunction": em.adjunction.check_laws(),
                    }))
                );
            } else {
                for &(b, beta) in &em.algebras {
                    println!(
                        "algebra ({}|{})",
                        m.base.object_name(b),
                        m.base.morphism(beta).id
                    );
                }
                println!("morphisms: {}", em.category.morphism_count());
                println!(
                    "triangle identities: {}",
                    em.adjunction.check_laws().passed()
                );
            }
        }
        Command::Cones {
            monad,
            weight,
            n,
            max_width,
            json,
        } => {
            let width = max_width.unwrap_or_else(solver_width);
            let m = load_monad(&monad)?;
            let kind = match weight {
                WeightArg::Wplus => WeightKind::WPlus,
                WeightArg::Wminus => WeightKind::WMinus,
            };
            let trunc = Truncation::new(3, width);
            let w = build_weight(kind, trunc);
            let set =
                cone_solver(&w, &m, n, trunc).map_err(|e| Failure::Verification(e.to_string()))?;
            if json {
                println!(
                    "{}",
                    json_out(&serde_json::json!({
                        "weight": set.weight,
                        "summit": n,
                        "maxDim": trunc.max_dim,
                        "maxWidth": trunc.max_width,
                        "probeWidth": set.probe_width,
                        "count": set.cones.len(),
                    }))
                );
            } else {
                println!("{}", bounds_header("cones", trunc.max_dim, trunc.max_width));
                println!(
                    "weight={} summit={} cones={} (stabilised against width {})",
                    set.weight,
                    n,
                    set.cones.len(),
                    set.probe_width
                );
            }
        }
        Command::CompareEm {
            monad,
            max_width,
            json,
        } => {
            let width = max_width.unwrap_or_else(solver_width);
            let m = load_monad(&monad)?;
            let em = eilenberg_moore(&m).map_err(|e| Failure::Verification(e.to_string()))?;
            let report = compare_em(&m, &em, Truncation::new(3, width))
                .map_err(|e| Failure::Verification(e.to_string()))?;
            if json {
                println!("{}", json_out(&report));
            } else {
                println!("{}", bounds_header("compare-em", 3, width));
                println!(
                    "algebras={} cones={:?} morphisms={} pairs={} passed={}",
                    report.algebras,
                    report.cones,
                    report.morphisms,
                    report.pairs,
                    report.passed()
                );
            }
            if !report.passed() {
                return Err(Failure::Verification(
                    report.mismatch.unwrap_or_else(|| "mismatch".into()),
                ));
            }
        }
        Command::Conservative {
            monad,
            functor,
            json,
        } => {
            let report = if let Some(path) = monad {
                let m = load_monad(&path)?;
                let em = eilenberg_moore(&m).map_err(|e| Failure::Verification(e.to_string()))?;
                conservativity_check(&em.category, &m.base, &em.adjunction.u)
            } else if let Some(path) = functor {
                let text = fs::read_to_string(&path)
                    .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
                let value: serde_json::Value = serde_json::from_str(&text)
                    .map_err(|e| Failure::Usage(format!("bad functor file: {e}")))?;
                let source = FinCategory::from_json(&value["source"].to_string())
                    .map_err(|e| Failure::Verification(e.to_string()))?;
                let target = FinCategory::from_json(&value["target"].to_string())
                    .map_err(|e| Failure::Verification(e.to_string()))?;
                let data: cohadj::monad::fincat::FinFunctorJson = serde_json::from_value(
                    serde_json::json!({"objMap": value["objMap"], "morMap": value["morMap"]}),
                )
                .map_err(|e| Failure::Usage(format!("bad functor maps: {e}")))?;
                let u = FinFunctor::from_data(&data, &source, &target)
                    .map_err(|e| Failure::Verification(e.to_string()))?;
                conservativity_check(&source, &target, &u)
            } else {
                return Err(Failure::Usage("need --monad or --functor".into()));
            };
            if json {
                println!("{}", json_out(&report));
            } else {
                println!("{}", report.conservative);
                for w in &report.witnesses {
                    println!("witness: {w}");
                }
            }
            if !report.conservative {
                return Err(Failure::Verification("functor is not conservative".into()));
            }
        }
        Command::CanonicalResolution {
            monad,
            object,
            action,
            max_dim,
            json,
        } => {
            let m = load_monad(&monad)?;
            let em = eilenberg_moore(&m).map_err(|e| Failure::Verification(e.to_string()))?;
            let r = canonical_resolution(&m, &em, &object, &action, max_dim)
                .map_err(|e| Failure::Verification(e.to_string()))?;
            let ok = r.simplicial_identities_hold
                && r.split_coequalizer_identities_hold
                && r.coequalizer_recovers_algebra;
            if json {
                println!("{}", json_out(&r));
            } else {
                println!("levels: {}", r.levels.join(" <- "));
                println!("splittings: {}", r.splittings.join(", "));
                println!("simplicial identities: {}", r.simplicial_identities_hold);
                println!(
                    "split coequalizer identities: {}",
                    r.split_coequalizer_identities_hold
                );
                println!(
                    "coequalizer recovers algebra: {}",
                    r.coequalizer_recovers_algebra
                );
            }
            if !ok {
                return Err(Failure::Verification("resolution checks failed".into()));
            }
        }
        Command::Weights {
            check,
            max_dim,
            max_width,
            json,
        } => {
            let width = max_width.unwrap_or_else(default_width);
            let trunc = Truncation::new(max_dim, width);
            let inclusion = match check {
                WeightCheckArg::MndWminus => {
                    Inclusion::MndIntoCollage(build_weight(WeightKind::WMinus, trunc))
                }
                WeightCheckArg::WplusWminus => Inclusion::WPlusIntoWMinus,
            };
            let cert = relative_computad_check(&inclusion, trunc)
                .map_err(|e| Failure::Verification(e.to_string()))?;
            if json {
                println!("{}", json_out(&cert));
            } else {
                println!("{}", bounds_header("weights", max_dim, width));
                println!("inclusion: {}", cert.inclusion);
                for (d, cells) in &cert.cells {
                    println!("dim {d}: {} cells", cells.len());
                }
                if let Some(v) = cert.vertex_surjective {
                    println!("vertex surjective: {v}");
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            println!("FAIL: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
