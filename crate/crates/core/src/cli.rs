//! Batch commands behind the `bethe-cells` binary. Each command returns a
//! JSON report and a pass flag; the binary maps these to exit codes.

use crate::cells::chart;
use crate::exactpoly::{format_rational, parse_rational, Poly, Rational};
use crate::generalv::{bethe_verify, RootOptions, SingularData};
use crate::mutations::{comparison_check, evolve, positivity_check, triangular_coords, BetheTuple};
use crate::sampling::{positive_vec, rng_from_seed, signed_vec};
use crate::words::{
    chart_transition, lower_route, reduced_words_of_longest, route_consistent, tetrahedron_sides, upper_route,
    ParamPoint, Word, WordError,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

pub const SCHEMA: &str = "pp/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Evolve,
    Compare,
    Tetra,
    Bethe,
    Positivity,
    Charts,
    Words,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub command: Option<Command>,
    pub rank: Option<usize>,
    pub word: Option<String>,
    /// Rational strings such as `"3/2"`.
    pub params: Option<Vec<String>>,
    pub seed: u64,
    pub tol: f64,
    pub trials: Option<usize>,
    pub max_iter: usize,
    pub format: Format,
    pub from: Option<String>,
    pub to: Option<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            command: None,
            rank: None,
            word: None,
            params: None,
            seed: 0,
            tol: 1e-9,
            trials: None,
            max_iter: RootOptions::default().max_iter,
            format: Format::Json,
            from: None,
            to: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Math(_) => 1,
        }
    }
}

impl From<WordError> for CliError {
    fn from(e: WordError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// A finished command: its report and whether every check passed.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub passed: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn rank(cfg: &RunConfig) -> Result<usize, CliError> {
    match cfg.rank {
        Some(0) => Err(usage("rank must be positive")),
        Some(r) => Ok(r),
        None => Err(usage("--rank is required")),
    }
}

fn parse_word(text: &str, rank: usize) -> Result<Word, CliError> {
    if text.trim().is_empty() {
        return Ok(Word::empty(rank));
    }
    Ok(Word::parse(text, rank)?)
}

fn params(cfg: &RunConfig) -> Result<Option<Vec<Rational>>, CliError> {
    cfg.params
        .as_ref()
        .map(|ps| {
            ps.iter()
                .map(|p| parse_rational(p.trim()).map_err(|e| usage(format!("parameter {p:?}: {e}"))))
                .collect()
        })
        .transpose()
}

fn checked_params(cfg: &RunConfig, word: &Word) -> Result<Option<Vec<Rational>>, CliError> {
    let ps = params(cfg)?;
    if let Some(p) = &ps {
        if p.len() != word.len() {
            return Err(usage(format!("word has {} letters but {} parameters were given", word.len(), p.len())));
        }
    }
    Ok(ps)
}

fn strings(qs: &[Rational]) -> Vec<String> {
    qs.iter().map(format_rational).collect()
}

fn poly_texts(ps: &[Poly]) -> Vec<String> {
    ps.iter().map(Poly::to_text).collect()
}

fn with_header(command: &str, mut body: Value) -> Value {
    body["schema"] = json!(SCHEMA);
    body["command"] = json!(command);
    body
}

fn tuple_json(y: &BetheTuple) -> Value {
    let coords = triangular_coords(y);
    json!({
        "tuple": poly_texts(y.entries()),
        "degrees": y.degrees(),
        "coords": coords.rows().iter().map(|row| strings(row)).collect::<Vec<_>>(),
    })
}

pub fn cmd_evolve(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let r = rank(cfg)?;
    let word = parse_word(cfg.word.as_deref().unwrap_or(""), r)?;
    let ps = checked_params(cfg, &word)?.ok_or_else(|| usage("--params is required"))?;
    let y = evolve(&word, &ps).map_err(|e| CliError::Math(e.to_string()))?;
    let mut report = tuple_json(&y);
    report["rank"] = json!(r);
    report["word"] = json!(word.to_string());
    report["params"] = json!(strings(&ps));
    Ok(Outcome { report: with_header("evolve", report), passed: true })
}

pub fn cmd_compare(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let r = rank(cfg)?;
    let words = match &cfg.word {
        Some(w) => vec![parse_word(w, r)?],
        None => reduced_words_of_longest(r)?,
    };
    let trials = cfg.trials.unwrap_or(20);
    let mut rng = rng_from_seed(cfg.seed);
    let mut failures = Vec::new();
    for w in &words {
        for _ in 0..trials {
            let ps = signed_vec(&mut rng, w.len());
            let ok = comparison_check(w, &ps).map_err(|e| CliError::Math(e.to_string()))?;
            if !ok {
                failures.push(json!({ "word": w.to_string(), "params": strings(&ps) }));
            }
        }
    }
    let passed = failures.is_empty();
    let report = json!({
        "rank": r,
        "words": words.len(),
        "trials": trials,
        "checks": words.len() * trials,
        "failures": failures,
        "status": if passed { "PASS" } else { "FAIL" },
    });
    Ok(Outcome { report: with_header("compare", report), passed })
}

pub fn cmd_tetra(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let routes: Vec<_> = upper_route().into_iter().chain(lower_route()).collect();
    let check = |a: &ParamPoint| -> Result<(bool, ParamPoint, ParamPoint), WordError> {
        let (left, right) = tetrahedron_sides(a)?;
        let routes_ok = route_consistent(&routes[..7], a)? && route_consistent(&routes[7..], a)?;
        Ok((left == right && routes_ok, left, right))
    };
    if let Some(ps) = params(cfg)? {
        if ps.len() != 6 {
            return Err(usage("tetra takes 6 parameters"));
        }
        let a = ParamPoint::new(ps);
        let (ok, left, right) = check(&a).map_err(|e| CliError::Math(e.to_string()))?;
        let report = json!({
            "trials": 1,
            "failures": usize::from(!ok),
            "redraws": 0,
            "left": left,
            "right": right,
            "status": if ok { "PASS" } else { "FAIL" },
        });
        return Ok(Outcome { report: with_header("tetra", report), passed: ok });
    }
    let trials = cfg.trials.unwrap_or(100);
    let mut rng = rng_from_seed(cfg.seed);
    let (mut failures, mut redraws) = (0usize, 0usize);
    for _ in 0..trials {
        loop {
            let a = ParamPoint::new(signed_vec(&mut rng, 6));
            match check(&a) {
                Ok((ok, _, _)) => {
                    failures += usize::from(!ok);
                    break;
                }
                Err(WordError::Pole { .. }) => redraws += 1,
                Err(e) => return Err(CliError::Math(e.to_string())),
            }
        }
    }
    if redraws > 0 {
        eprintln!("tetra: {redraws} draws hit a pole and were redrawn");
    }
    let passed = failures == 0;
    let report = json!({
        "trials": trials,
        "failures": failures,
        "redraws": redraws,
        "status": if passed { "PASS" } else { "FAIL" },
    });
    Ok(Outcome { report: with_header("tetra", report), passed })
}

/// Word (default: the longest element) and parameters (default: seeded
/// positive draws).
fn word_and_params(cfg: &RunConfig, r: usize) -> Result<(Word, Vec<Rational>), CliError> {
    let word = match &cfg.word {
        Some(w) => parse_word(w, r)?,
        None => Word::longest(r),
    };
    let ps = match checked_params(cfg, &word)? {
        Some(p) => p,
        None => positive_vec(&mut rng_from_seed(cfg.seed), word.len()),
    };
    Ok((word, ps))
}

pub fn cmd_bethe(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let r = rank(cfg)?;
    let (word, ps) = word_and_params(cfg, r)?;
    let y = evolve(&word, &ps).map_err(|e| CliError::Math(e.to_string()))?;
    let opts = RootOptions { max_iter: cfg.max_iter, ..RootOptions::default() };
    let verdict = bethe_verify(y.tuple(), &SingularData::trivial(r), cfg.tol, &opts);
    let report = json!({
        "rank": r,
        "word": word.to_string(),
        "params": strings(&ps),
        "tuple": poly_texts(y.entries()),
        "tol": cfg.tol,
        "report": verdict,
    });
    Ok(Outcome { report: with_header("bethe", report), passed: verdict.passed() })
}

pub fn cmd_positivity(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let r = rank(cfg)?;
    let (word, ps) = word_and_params(cfg, r)?;
    let y = evolve(&word, &ps).map_err(|e| CliError::Math(e.to_string()))?;
    let verdict = positivity_check(&y, cfg.seed).map_err(|e| CliError::Math(e.to_string()))?;
    let mut report = tuple_json(&y);
    report["rank"] = json!(r);
    report["word"] = json!(word.to_string());
    report["params"] = json!(strings(&ps));
    report["positive"] = json!(verdict.positive);
    report["closed_form"] = json!(verdict.closed_form);
    if let Some((inner, outer)) = &verdict.witnesses {
        report["witnesses"] = json!([format_rational(inner), format_rational(outer)]);
    }
    Ok(Outcome { report: with_header("positivity", report), passed: verdict.consistent() })
}

pub fn cmd_charts(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let r = rank(cfg)?;
    let from = parse_word(cfg.from.as_deref().ok_or_else(|| usage("--from is required"))?, r)?;
    let to = parse_word(cfg.to.as_deref().ok_or_else(|| usage("--to is required"))?, r)?;
    let ps = match checked_params(cfg, &from)? {
        Some(p) => p,
        None => positive_vec(&mut rng_from_seed(cfg.seed), from.len()),
    };
    let image = chart_transition(&from, &to, &ps).map_err(|e| match e {
        WordError::Pole { .. } => CliError::Math(e.to_string()),
        other => CliError::from(other),
    })?;
    let same = chart(&from, &ps).map_err(|e| usage(e.to_string()))? == chart(&to, &image).map_err(|e| usage(e.to_string()))?;
    let report = json!({
        "rank": r,
        "from": from.to_string(),
        "to": to.to_string(),
        "params": strings(&ps),
        "image": strings(&image),
        "same_matrix": same,
        "status": if same { "PASS" } else { "FAIL" },
    });
    Ok(Outcome { report: with_header("charts", report), passed: same })
}

pub fn cmd_words(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let r = rank(cfg)?;
    let words = reduced_words_of_longest(r)?;
    let report = json!({
        "rank": r,
        "count": words.len(),
        "words": words.iter().map(Word::to_string).collect::<Vec<_>>(),
    });
    Ok(Outcome { report: with_header("words", report), passed: true })
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match cfg.command.ok_or_else(|| usage("no command given"))? {
        Command::Evolve => cmd_evolve(cfg),
        Command::Compare => cmd_compare(cfg),
        Command::Tetra => cmd_tetra(cfg),
        Command::Bethe => cmd_bethe(cfg),
        Command::Positivity => cmd_positivity(cfg),
        Command::Charts => cmd_charts(cfg),
        Command::Words => cmd_words(cfg),
    }
}

fn table_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(table_cell).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

pub fn render(report: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("reports are plain JSON"),
        Format::Table => match report {
            Value::Object(map) => map
                .iter()
                .map(|(k, v)| format!("{k:<12} {}", table_cell(v)))
                .collect::<Vec<_>>()
                .join("\n"),
            other => table_cell(other),
        },
    }
}
