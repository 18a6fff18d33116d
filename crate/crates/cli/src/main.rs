use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use kcascade::{
    canonical_generator, cascade_from_order, expected_weight, factorization_sweep, heisenberg_reduction,
    kostant_cascade, lemma2_sweep, stability_check, verify_comm_with_generators, weyl_presentation, xi_from_c,
    OrderSpec, Report, Root, RootKind, RootSystem, Scalar, ScalarAssignment, TypeLabel, Uea,
};

/// Kostant cascades and central generators of U(n) for the classical types.
#[derive(Parser)]
#[command(name = "kcascade", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct Sys {
    /// Root system type: A, B, C or D.
    #[arg(long = "type", value_parser = parse_type)]
    type_label: TypeLabel,
    /// Rank (the Lie rank; A_r is realized in sl_{r+1}).
    #[arg(long)]
    rank: u32,
}

impl Sys {
    fn build(&self) -> Result<RootSystem> {
        Ok(RootSystem::new(self.type_label, self.rank)?)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Centrality,
    Weights,
    Lemmas,
    Factorization,
}

#[derive(Subcommand)]
enum Cmd {
    /// Positive roots with heights, rows and columns.
    Roots(Sys),
    /// The Kostant cascade, or the cascade of an explicit order (`--order "e1>e2>0>-e2>-e1"`).
    Cascade {
        #[command(flatten)]
        sys: Sys,
        #[arg(long)]
        order: Option<String>,
    },
    /// Canonical generators ξ_β and their symmetrizations.
    Gens {
        #[command(flatten)]
        sys: Sys,
        #[arg(long, value_parser = parse_root)]
        beta: Option<Root>,
    },
    /// Run verification suites; exits 1 on any violation.
    Verify {
        #[command(flatten)]
        sys: Sys,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
    /// The Weyl-algebra presentation at scalars c (JSON map or file path).
    Weyl {
        #[command(flatten)]
        sys: Sys,
        #[arg(long)]
        c: String,
    },
    /// Reconstruct the Kostant form ξ from scalars c.
    Reconstruct {
        #[command(flatten)]
        sys: Sys,
        #[arg(long)]
        c: String,
    },
    /// Heisenberg reduction r with e_{ε1+ε2} ↦ c1.
    Reduce {
        #[command(flatten)]
        sys: Sys,
        #[arg(long, value_parser = parse_scalar, allow_hyphen_values = true)]
        c1: Scalar,
    },
    /// Rank stability of the generators ξ_{ε_{2k−1}+ε_{2k}} from rank n to n+1.
    Stability {
        #[command(flatten)]
        sys: Sys,
        #[arg(long, value_parser = parse_root)]
        beta: Option<Root>,
    },
}

fn parse_type(s: &str) -> Result<TypeLabel, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_root(s: &str) -> Result<Root, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_scalar(s: &str) -> Result<Scalar, String> {
    Scalar::parse(s).map_err(|e| format!("{e}"))
}

/// `--c` is inline JSON unless it names an existing file.
fn read_c(arg: &str) -> Result<ScalarAssignment> {
    let text = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    } else {
        arg.to_string()
    };
    let v: Value = serde_json::from_str(&text).context("--c is neither a file nor valid JSON")?;
    Ok(ScalarAssignment::from_json(&v)?)
}

fn scalar_map<'a>(it: impl IntoIterator<Item = (&'a Root, &'a Scalar)>) -> Value {
    Value::Object(it.into_iter().map(|(r, s)| (r.to_string(), json!(s.to_string()))).collect())
}

fn root_list(v: &[Root]) -> Value {
    json!(v.iter().map(Root::to_string).collect::<Vec<_>>())
}

/// JSON output plus whether any verification failed.
type Outcome = (Value, bool);

fn roots(sys: &RootSystem) -> Outcome {
    let list: Vec<Value> = sys
        .positive_roots()
        .iter()
        .map(|r| json!({"root": r.to_string(), "height": sys.height(r), "row": r.row(), "col": r.col()}))
        .collect();
    let out = json!({
        "type": sys.type_label().to_string(),
        "rank": sys.rank(),
        "positive_roots": list,
        "simple_roots": root_list(sys.simple_roots()),
    });
    (out, false)
}

fn cascade(sys: &RootSystem, order: Option<&str>) -> Result<Outcome> {
    match order {
        None => Ok((root_list(&kostant_cascade(sys).roots), false)),
        Some(o) => {
            let spec = OrderSpec::parse(o)?;
            let oc = cascade_from_order(sys.type_label(), &spec)?;
            Ok((json!(oc.roots.iter().map(ToString::to_string).collect::<Vec<_>>()), false))
        }
    }
}

fn gens(sys: &RootSystem, beta: Option<Root>) -> Result<Outcome> {
    let casc = kostant_cascade(sys);
    let betas = match beta {
        Some(b) if casc.contains(&b) => vec![b],
        Some(b) => bail!("{b} is not in the cascade of {}{}", sys.type_label(), sys.rank()),
        None => casc.roots.clone(),
    };
    let u = Uea::new(sys);
    let list = betas
        .par_iter()
        .map(|b| {
            let xi = canonical_generator(b, sys)?;
            let s = u.symmetrize(&xi);
            Ok(json!({
                "beta": b.to_string(),
                "weight": expected_weight(b, sys)?.to_string(),
                "xi": xi.to_string(),
                "sigma": u.render(&s),
                "sigma_terms": u.to_json(&s),
            }))
        })
        .collect::<Result<Vec<Value>>>()?;
    Ok((json!(list), false))
}

fn centrality_weights(sys: &RootSystem, central: bool, weights: bool) -> Result<Vec<Report>> {
    let u = Uea::new(sys);
    let parts = kostant_cascade(sys)
        .roots
        .par_iter()
        .map(|b| {
            let s = u.symmetrize(&canonical_generator(b, sys)?);
            let mut c = Report::new("centrality");
            let mut w = Report::new("weights");
            if central {
                c.instances = 1;
                if !u.is_central(&s) {
                    c.violation(format!("σ(ξ_{b}) is not central"));
                }
            }
            if weights {
                w.instances = 1;
                let want = expected_weight(b, sys)?;
                match u.weight(&s) {
                    Ok(got) if got == want => {}
                    Ok(got) => w.violation(format!("weight of ξ_{b} is {got}, expected {want}")),
                    Err(e) => w.violation(format!("ξ_{b}: {e}")),
                }
            }
            Ok((c, w))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    let (c, w): (Vec<Report>, Vec<Report>) = parts.into_iter().unzip();
    if central {
        out.push(c.into_iter().fold(Report::new("centrality"), Report::merge));
    }
    if weights {
        out.push(w.into_iter().fold(Report::new("weights"), Report::merge));
    }
    Ok(out)
}

fn verify(sys: &RootSystem, suite: Suite) -> Result<Outcome> {
    let want = |s: Suite| suite == Suite::All || suite == s;
    let mut reports = centrality_weights(sys, want(Suite::Centrality), want(Suite::Weights))?;
    let bd = matches!(sys.type_label(), TypeLabel::B | TypeLabel::D);
    let mut skipped = Vec::new();
    for (s, name) in [(Suite::Lemmas, "lemmas"), (Suite::Factorization, "factorization")] {
        if !want(s) {
            continue;
        }
        if !bd {
            skipped.push(name);
            continue;
        }
        match s {
            Suite::Lemmas => {
                reports.push(verify_comm_with_generators(sys)?);
                reports.push(lemma2_sweep(sys, None)?);
            }
            _ => reports.push(factorization_sweep(sys)?),
        }
    }
    let failed = reports.iter().any(|r| !r.ok());
    let out = json!({
        "type": sys.type_label().to_string(),
        "rank": sys.rank(),
        "reports": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
        "skipped": skipped,
        "ok": !failed,
    });
    Ok((out, failed))
}

fn weyl(sys: &RootSystem, c: &str) -> Result<Outcome> {
    let w = weyl_presentation(&read_c(c)?, sys)?;
    Ok((w.to_json(), !w.report.ok()))
}

fn reconstruct(sys: &RootSystem, c: &str) -> Result<Outcome> {
    let xi = xi_from_c(&read_c(c)?, sys)?;
    Ok((scalar_map(&xi.xi), false))
}

fn reduce(sys: &RootSystem, c1: &Scalar) -> Result<Outcome> {
    let h = heisenberg_reduction(sys, c1)?;
    let ok = h.verified();
    Ok((serde_json::to_value(&h)?, !ok))
}

fn stability(sys: &RootSystem, beta: Option<Root>) -> Result<Outcome> {
    let next = RootSystem::new(sys.type_label(), sys.rank() + 1)?;
    let (small, big) = (kostant_cascade(sys), kostant_cascade(&next));
    let betas: Vec<Root> = match beta {
        Some(b) => vec![b],
        None => small
            .roots
            .iter()
            .filter(|b| b.kind == RootKind::Sum && big.contains(b))
            .copied()
            .collect(),
    };
    if betas.is_empty() {
        bail!("no cascade root ε_(2k−1)+ε_2k is shared by ranks {} and {}", sys.rank(), next.rank());
    }
    let mut res = serde_json::Map::new();
    let mut failed = false;
    for b in betas {
        let ok = stability_check(&b, sys, &next)?;
        failed |= !ok;
        res.insert(b.to_string(), json!(ok));
    }
    let out = json!({
        "type": sys.type_label().to_string(),
        "from": sys.rank(),
        "to": next.rank(),
        "stable": res,
    });
    Ok((out, failed))
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.cmd {
        Cmd::Roots(s) => Ok(roots(&s.build()?)),
        Cmd::Cascade { sys, order } => cascade(&sys.build()?, order.as_deref()),
        Cmd::Gens { sys, beta } => gens(&sys.build()?, beta),
        Cmd::Verify { sys, suite } => verify(&sys.build()?, suite),
        Cmd::Weyl { sys, c } => weyl(&sys.build()?, &c),
        Cmd::Reconstruct { sys, c } => reconstruct(&sys.build()?, &c),
        Cmd::Reduce { sys, c1 } => reduce(&sys.build()?, &c1),
        Cmd::Stability { sys, beta } => stability(&sys.build()?, beta),
    }
}

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("CASCADE_THREADS") {
        let n: usize = v.parse().map_err(|_| anyhow!("CASCADE_THREADS must be a positive integer, got `{v}`"))?;
        if n == 0 {
            bail!("CASCADE_THREADS must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = init_threads().and_then(|_| run(cli));
    match res {
        Ok((out, failed)) => {
            // a closed pipe is not an error of the computation
            let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(&out).expect("JSON"));
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
