//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input, 2 failed verification,
//! 3 numerically indeterminate rank.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::alt_decompose::{
    classify, dimension_certificate, induction_multiplicities, transpose_symmetry_report, restricted_direct_sum,
    Tag, YImages,
};
use crate::error::Error;
use crate::hecke_rep::{build_representation, direct_sum, verify_relations, Form};
use crate::json;
use crate::scalars::QPoint;
use crate::tableaux::{enumerate_diagrams, enumerate_standard_tableaux, YoungDiagram};
use crate::word_algebra::{
    hecke_f_relation_check_exact, verify_presentation_relations, RewritingEngine, YWord,
};

/// Entrywise tolerance for comparing a word with its normal form.
const SOUNDNESS_TOL: f64 = 1e-9;
const SAMPLE_WORDS: usize = 100;
const SAMPLE_MAX_LEN: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "althecke", version, about = "Hecke algebras of type A and their even subalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CommandKind {
    Tableaux,
    Rep,
    Verify,
    Rewrite,
    Dim,
    Classify,
    Induce,
    Symmetry,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List Young diagrams of n and their standard tableaux
    Tableaux(RunArgs),
    /// Print the representation matrices for --shape at --q
    Rep(RunArgs),
    /// Check relations numerically and exactly
    Verify(RunArgs),
    /// Normal form of a word in y1..y(n-2)
    Rewrite(RunArgs),
    /// Count even words and certify their rank
    Dim(RunArgs),
    /// Irreducibles of the even subalgebra
    Classify(RunArgs),
    /// Multiplicities of the induced modules
    Induce(RunArgs),
    /// Compare matrix coefficients of a shape and its transpose
    Symmetry(RunArgs),
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum FormArg {
    G,
    F,
    Sym,
}

impl From<FormArg> for Form {
    fn from(f: FormArg) -> Form {
        match f {
            FormArg::G => Form::G,
            FormArg::F => Form::F,
            FormArg::Sym => Form::Sym,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum OutputArg {
    Json,
    Text,
}

#[derive(clap::Args, Debug, Clone)]
struct RunArgs {
    /// Number of boxes / strands
    #[arg(long)]
    n: Option<usize>,
    /// Specialization point: p/r, a decimal, or a+bi
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    q: String,
    /// Young diagram such as 3,1
    #[arg(long)]
    shape: Option<String>,
    /// Word such as "y1 y2 y1"
    #[arg(long)]
    word: Option<String>,
    /// Numeric tolerance
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, value_enum, default_value = "f")]
    form: FormArg,
    #[arg(long, value_enum, default_value = "json")]
    output: OutputArg,
    /// Seed for randomized checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest n accepted
    #[arg(long, default_value_t = 8)]
    max_n: usize,
}

/// Validated settings of one invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n: usize,
    pub q: QPoint,
    pub shape: Option<YoungDiagram>,
    pub word: Option<String>,
    pub tolerance: f64,
    pub form: Form,
    pub text_output: bool,
    pub seed: u64,
}

struct Outcome {
    value: Value,
    text: String,
    pass: bool,
}

enum Failure {
    Invalid(String),
    Indeterminate(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Indeterminate(_) => Failure::Indeterminate(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

/// Parses `args` (program name first), runs the command, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let (kind, args) = match cli.command {
        Command::Tableaux(a) => (CommandKind::Tableaux, a),
        Command::Rep(a) => (CommandKind::Rep, a),
        Command::Verify(a) => (CommandKind::Verify, a),
        Command::Rewrite(a) => (CommandKind::Rewrite, a),
        Command::Dim(a) => (CommandKind::Dim, a),
        Command::Classify(a) => (CommandKind::Classify, a),
        Command::Induce(a) => (CommandKind::Induce, a),
        Command::Symmetry(a) => (CommandKind::Symmetry, a),
    };
    let result = configure(kind, &args).and_then(|cfg| dispatch(kind, &cfg).map(|o| (cfg, o)));
    match result {
        Ok((cfg, outcome)) => {
            let body = if cfg.text_output {
                outcome.text
            } else {
                json::to_string(&outcome.value)
            };
            let _ = write!(out, "{body}");
            if outcome.pass {
                0
            } else {
                let _ = writeln!(err, "error: verification failed");
                2
            }
        }
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Indeterminate(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            3
        }
    }
}

fn configure(kind: CommandKind, a: &RunArgs) -> Result<RunConfig, Failure> {
    let shape = a.shape.as_deref().map(str::parse::<YoungDiagram>).transpose()?;
    let n = match (a.n, &shape) {
        (Some(n), Some(s)) if n != s.n() => {
            return Err(Failure::Invalid(format!("--n {n} does not match shape {s} with {} boxes", s.n())));
        }
        (Some(n), _) => n,
        (None, Some(s)) => s.n(),
        (None, None) => return Err(Failure::Invalid("--n is required".into())),
    };
    if n < 2 {
        return Err(Failure::Invalid(format!("n = {n} must be at least 2")));
    }
    if n > a.max_n {
        return Err(Failure::Invalid(format!("n = {n} exceeds --max-n {}", a.max_n)));
    }
    if !a.tol.is_finite() || a.tol <= 0.0 {
        return Err(Failure::Invalid("--tol must be positive".into()));
    }
    let needs_shape = matches!(kind, CommandKind::Rep | CommandKind::Symmetry);
    if needs_shape && shape.is_none() {
        return Err(Failure::Invalid("--shape is required".into()));
    }
    if kind == CommandKind::Rewrite {
        if a.word.is_none() {
            return Err(Failure::Invalid("--word is required".into()));
        }
        if n < 3 {
            return Err(Failure::Invalid("rewrite needs n >= 3".into()));
        }
    }
    let q = QPoint::parse(&a.q, n)?;
    Ok(RunConfig {
        n,
        q,
        shape,
        word: a.word.clone(),
        tolerance: a.tol,
        form: a.form.into(),
        text_output: a.output == OutputArg::Text,
        seed: a.seed,
    })
}

fn dispatch(kind: CommandKind, cfg: &RunConfig) -> Result<Outcome, Failure> {
    match kind {
        CommandKind::Tableaux => cmd_tableaux(cfg),
        CommandKind::Rep => cmd_rep(cfg),
        CommandKind::Verify => cmd_verify(cfg),
        CommandKind::Rewrite => cmd_rewrite(cfg),
        CommandKind::Dim => cmd_dim(cfg),
        CommandKind::Classify => cmd_classify(cfg),
        CommandKind::Induce => cmd_induce(cfg),
        CommandKind::Symmetry => cmd_symmetry(cfg),
    }
}

fn cmd_tableaux(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let shapes = match &cfg.shape {
        Some(s) => vec![s.clone()],
        None => enumerate_diagrams(cfg.n),
    };
    let mut text = String::new();
    let mut diagrams = Vec::new();
    for s in &shapes {
        let tabs: Vec<String> = enumerate_standard_tableaux(s).iter().map(ToString::to_string).collect();
        text.push_str(&format!("{s} (dim {}): {}\n", tabs.len(), tabs.join("  ")));
        diagrams.push(json!({
            "shape": s.to_string(),
            "dim": tabs.len(),
            "self_conjugate": s.is_self_conjugate(),
            "tableaux": tabs,
        }));
    }
    Ok(Outcome {
        value: json!({ "n": cfg.n, "diagrams": diagrams }),
        text,
        pass: true,
    })
}

fn cmd_rep(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let shape = cfg.shape.as_ref().expect("checked in configure");
    let rep = build_representation(shape, &cfg.q, cfg.form)?;
    let basis: Vec<String> = rep.basis().iter().map(ToString::to_string).collect();
    let mut text = format!("shape {shape}, q = {}, form {}\nbasis: {}\n", cfg.q, cfg.form, basis.join("  "));
    for (k, m) in rep.generators().iter().enumerate() {
        text.push_str(&format!("generator {}:\n", k + 1));
        for r in 0..m.nrows() {
            let row: Vec<String> = (0..m.ncols())
                .map(|c| {
                    let z = m[(r, c)];
                    if z.im == 0.0 {
                        format!("{:>12.8}", z.re)
                    } else {
                        format!("{:.8}{:+.8}i", z.re, z.im)
                    }
                })
                .collect();
            text.push_str(&format!("  {}\n", row.join(" ")));
        }
    }
    let value = json!({
        "shape": shape.to_string(),
        "q": cfg.q.to_string(),
        "form": cfg.form.to_string(),
        "basis": basis,
        "generators": rep.generators().iter().map(json::matrix).collect::<Vec<_>>(),
    });
    Ok(Outcome { value, text, pass: true })
}

fn cmd_verify(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let n = cfg.n;
    let tol = cfg.tolerance;
    let mut pass = true;
    let mut text = String::new();
    let mut reps = Vec::new();
    for form in [Form::G, Form::F, Form::Sym] {
        for rep in direct_sum(n, &cfg.q, form)?.reps {
            let r = verify_relations(&rep, tol);
            pass &= r.pass;
            text.push_str(&format!(
                "{:<10} {:<4} quadratic {:.2e} braid {:.2e} commutation {:.2e} {}\n",
                rep.shape().to_string(),
                form.to_string(),
                r.quadratic,
                r.braid,
                r.commutation,
                verdict(r.pass)
            ));
            reps.push(json!({
                "shape": rep.shape().to_string(),
                "form": form.to_string(),
                "quadratic": json::float(r.quadratic),
                "braid": json::float(r.braid),
                "commutation": json::float(r.commutation),
                "pass": r.pass,
            }));
        }
    }
    let mut y_reps = Vec::new();
    for r in restricted_direct_sum(n, &cfg.q)? {
        let rel = r.verify_y_relations(tol);
        pass &= rel.pass;
        y_reps.push(json!({
            "shape": r.shape().to_string(),
            "cubic": json::float(rel.cubic),
            "involution": json::float(rel.involution),
            "braid_cubic": json::float(rel.braid_cubic),
            "commutation": json::float(rel.commutation),
            "pass": rel.pass,
        }));
    }
    text.push_str(&format!("even-generator relations on all restrictions: {}\n", verdict(y_reps.iter().all(|v| v["pass"] == true))));

    let mut value = Map::new();
    if (3..=6).contains(&n) {
        let report = verify_presentation_relations(n)?;
        pass &= report.all_passed();
        text.push_str(&format!("exact presentation ({} relations): {}\n", report.checks.len(), verdict(report.all_passed())));
        value.insert(
            "presentation".into(),
            json!({
                "relations": report.checks.iter().map(|c| json!({"name": c.name, "pass": c.passed})).collect::<Vec<_>>(),
                "pass": report.all_passed(),
            }),
        );
    }
    if (3..=5).contains(&n) {
        let report = hecke_f_relation_check_exact(n)?;
        pass &= report.all_passed();
        text.push_str(&format!("exact f-relations ({}): {}\n", report.checks.len(), verdict(report.all_passed())));
        value.insert(
            "f_relations".into(),
            json!({
                "relations": report.checks.iter().map(|c| json!({"name": c.name, "pass": c.passed})).collect::<Vec<_>>(),
                "pass": report.all_passed(),
            }),
        );
    }
    if (3..=6).contains(&n) {
        let engine = RewritingEngine::new(n)?;
        let images = YImages::all_shapes(n, &cfg.q)?;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut worst = 0.0f64;
        for _ in 0..SAMPLE_WORDS {
            let len = rng.gen_range(0..=SAMPLE_MAX_LEN);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=n - 2)).collect();
            let nf = engine.rewrite_letters(&word)?;
            worst = worst.max(images.deviation(&word, &nf)?);
        }
        let ok = worst < SOUNDNESS_TOL;
        pass &= ok;
        text.push_str(&format!(
            "rewriting sample ({SAMPLE_WORDS} words, seed {}): max deviation {worst:.2e} {}\n",
            cfg.seed,
            verdict(ok)
        ));
        value.insert(
            "rewriting_sample".into(),
            json!({
                "words": SAMPLE_WORDS,
                "seed": cfg.seed,
                "max_deviation": json::float(worst),
                "tol": json::float(SOUNDNESS_TOL),
                "pass": ok,
            }),
        );
    }
    value.insert("n".into(), json!(n));
    value.insert("q".into(), json!(cfg.q.to_string()));
    value.insert("tol".into(), json::float(tol));
    value.insert("representations".into(), Value::Array(reps));
    value.insert("restrictions".into(), Value::Array(y_reps));
    value.insert("pass".into(), json!(pass));
    text.push_str(&format!("overall: {}\n", verdict(pass)));
    Ok(Outcome {
        value: Value::Object(value),
        text,
        pass,
    })
}

fn cmd_rewrite(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let word = YWord::parse(cfg.word.as_deref().expect("checked in configure"), cfg.n)?;
    let nf = RewritingEngine::new(cfg.n)?.rewrite(&word)?;
    let mut text = String::new();
    for (m, c) in nf.terms() {
        text.push_str(&format!("{:<24} {c}\n", m.to_string()));
    }
    if nf.is_zero() {
        text.push_str("0\n");
    }
    Ok(Outcome {
        value: json!({
            "n": cfg.n,
            "word": word.to_string(),
            "normal_form": json::combination(&nf),
        }),
        text,
        pass: true,
    })
}

fn cmd_dim(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let cert = dimension_certificate(cfg.n, &cfg.q)?;
    let text = format!(
        "even words: {}\nrank: {}\nexpected: {}\npass: {}\n",
        cert.even_words, cert.rank, cert.expected, cert.pass
    );
    Ok(Outcome {
        value: json!({
            "even_words": cert.even_words,
            "rank": cert.rank,
            "expected": cert.expected,
            "pass": cert.pass,
        }),
        text,
        pass: cert.pass,
    })
}

fn cmd_classify(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let r = classify(cfg.n, &cfg.q)?;
    let mut text = format!("n = {}, q = {}\n", r.n, r.q);
    let labels: Vec<Value> = r
        .labels
        .iter()
        .map(|l| {
            text.push_str(&format!("  {:<10} dim {:>3}  commutant {}\n", l.name(), l.dim, l.commutant_dim));
            json!({
                "name": l.name(),
                "shape": l.shape.to_string(),
                "tag": l.tag.to_string(),
                "dim": l.dim,
                "commutant_dim": l.commutant_dim,
            })
        })
        .collect();
    for (a, b) in &r.equivalences {
        text.push_str(&format!("  {a} ~ {b}\n"));
    }
    text.push_str(&format!(
        "sum of dim^2 = {} (expected {}), pass: {}\n",
        r.sum_dim_sq, r.expected_sum_dim_sq, r.pass
    ));
    let value = json!({
        "n": r.n,
        "q": r.q,
        "labels": labels,
        "restrictions": r.restrictions.iter().map(|s| json!({
            "shape": s.shape.to_string(),
            "dim": s.dim,
            "commutant_dim": s.commutant_dim,
        })).collect::<Vec<_>>(),
        "equivalences": r.equivalences.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
        "checks": {
            "sum_dim_sq": r.sum_dim_sq,
            "expected_sum_dim_sq": r.expected_sum_dim_sq,
            "unexpected_equivalences": r.unexpected_equivalences.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
            "max_relation_residual": json::float(r.max_y_residual),
            "pass": r.pass,
        },
    });
    Ok(Outcome {
        value,
        text,
        pass: r.pass,
    })
}

fn cmd_induce(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let report = classify(cfg.n, &cfg.q)?;
    let wanted = |shape: &YoungDiagram, tag: Tag| match &cfg.shape {
        None => true,
        Some(s) => s == shape || (tag == Tag::Whole && *s == shape.transpose()),
    };
    let mut pass = true;
    let mut text = String::new();
    let mut rows = Vec::new();
    for label in report.labels.iter().filter(|l| wanted(&l.shape, l.tag)) {
        let ind = induction_multiplicities(label, cfg.n, &cfg.q)?;
        pass &= ind.pass;
        let nonzero: Vec<String> = ind
            .multiplicities
            .iter()
            .filter(|(_, m)| *m > 0)
            .map(|(mu, m)| if *m == 1 { format!("V[{mu}]") } else { format!("{m} V[{mu}]") })
            .collect();
        text.push_str(&format!(
            "Ind {:<8} = {}  (dim {} = 2 x {}) {}\n",
            ind.label,
            nonzero.join(" + "),
            ind.induced_dim,
            ind.label_dim,
            verdict(ind.pass)
        ));
        let mut mults = Map::new();
        for (mu, m) in &ind.multiplicities {
            mults.insert(mu.to_string(), json!(m));
        }
        rows.push(json!({
            "label": ind.label,
            "dim": ind.label_dim,
            "multiplicities": mults,
            "induced_dim": ind.induced_dim,
            "pass": ind.pass,
        }));
    }
    if rows.is_empty() {
        return Err(Failure::Invalid("no label matches --shape".into()));
    }
    Ok(Outcome {
        value: json!({ "n": cfg.n, "q": cfg.q.to_string(), "induced": rows, "pass": pass }),
        text,
        pass,
    })
}

fn cmd_symmetry(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let shape = cfg.shape.as_ref().expect("checked in configure");
    let r = transpose_symmetry_report(shape, &cfg.q, cfg.tolerance)?;
    let mut text = format!(
        "shape {shape} vs {}: max signed deviation {:.3e}, max absolute deviation {:.3e} {}\n",
        shape.transpose(),
        r.max_signed,
        r.max_absolute,
        verdict(r.pass)
    );
    for e in r.entries.iter().filter(|e| e.signed.norm() > cfg.tolerance) {
        text.push_str(&format!(
            "  y{} [{} , {}] signed {:+.6e}\n",
            e.generator, e.row, e.col, e.signed.re
        ));
    }
    let value = json!({
        "shape": shape.to_string(),
        "transpose": shape.transpose().to_string(),
        "q": cfg.q.to_string(),
        "max_signed": json::float(r.max_signed),
        "max_absolute": json::float(r.max_absolute),
        "pass": r.pass,
        "entries": r.entries.iter().map(|e| json!({
            "generator": e.generator,
            "row": e.row,
            "col": e.col,
            "signed": json::complex(e.signed),
            "absolute": json::float(e.absolute),
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        value,
        text,
        pass: r.pass,
    })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indeterminate_maps_to_exit_three() {
        assert!(matches!(Failure::from(Error::Indeterminate("gap".into())), Failure::Indeterminate(_)));
        assert!(matches!(Failure::from(Error::Parse("x".into())), Failure::Invalid(_)));
    }
}
