//! Command-line front end. [`run`] takes an argument vector and returns the
//! exit code together with everything written to stdout and stderr, so the
//! binary and the tests share one code path.
//!
//! Exit codes: 0 success, 1 a check failed or a decomposition was
//! inconsistent, 2 malformed input.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::characters::{spo_character, spo_character_branching};
use crate::error::{Error, Result};
use crate::insertion::{product_traced, spo_insert, OneRowWord, SpoSequence};
use crate::pieri::{pieri_coefficients, verify_bijection_counts, verify_pieri_with, VerifyOptions};
use crate::reverse::{decompose_traced, decompose_with_triple_traced, Decomposition, SpTriple};
use crate::shape::Partition;
use crate::tableau::{enumerate_spo_tableaux, Alphabet, Entry, Tableau};

#[derive(Args, Debug)]
struct Output {
    /// Emit JSON (schema 1) instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also write stdout to this file.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug, Clone, Copy)]
struct AlphabetArgs {
    /// Number of symplectic letters 1..m (with bars).
    #[arg(long)]
    m: u32,
    /// Number of circled letters 1°..n°.
    #[arg(long, default_value_t = 0)]
    n: u32,
}

impl AlphabetArgs {
    fn alphabet(self) -> Result<Alphabet> {
        Alphabet::new(self.m, self.n)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every spo-tableau of a shape.
    Enumerate {
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        alphabet: AlphabetArgs,
        /// Print only the number of tableaux.
        #[arg(long)]
        count: bool,
    },
    /// Print the character polynomial spo_λ.
    Character {
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        alphabet: AlphabetArgs,
        /// Use the branching sum over symplectic and skew Schur factors.
        #[arg(long)]
        branching: bool,
    },
    /// Insert one letter into a tableau.
    Insert {
        #[arg(long)]
        tableau: String,
        #[arg(long)]
        letter: String,
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[arg(long)]
        trace: bool,
    },
    /// Multiply a tableau by a one-row tableau.
    Product {
        #[arg(long)]
        tableau: String,
        /// Letters of the one-row tableau, e.g. "1 3 5 2o 4o".
        #[arg(long)]
        word: String,
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[arg(long)]
        trace: bool,
    },
    /// Split a tableau into a product T · U.
    Decompose {
        #[arg(long)]
        tableau: String,
        /// Shape record "λ;μ°;μ⁻;ν".
        #[arg(long, conflicts_with_all = ["triple", "k"])]
        seq: Option<String>,
        /// sp-triple "λ;μ;ν".
        #[arg(long, requires = "k")]
        triple: Option<String>,
        /// Length of U; must equal |λ/μ| + |ν/μ|.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[arg(long)]
        trace: bool,
    },
    /// Print the Pieri coefficients α_ν of spo_λ · spo_(k).
    Pieri {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        k: usize,
    },
    /// Check spo_λ · spo_(k) = Σ α_ν spo_ν exactly.
    Verify {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Skip the per-ν check against products of actual tableau pairs.
        #[arg(long)]
        no_witness: bool,
    },
    /// Check the correspondence between split sp-triples and shape records.
    Bijection {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        alphabet: AlphabetArgs,
    },
}

#[derive(Parser, Debug)]
#[command(name = "spo", version, about = "Orthosymplectic tableaux, spo-insertion and the Pieri rule")]
struct Root {
    #[command(flatten)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Input(Error),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Inconsistent(_) => 1,
        _ => 2,
    }
}

fn partition(flag: &str, s: &str) -> Result<Partition> {
    Partition::from_str(s).map_err(|e| match e {
        Error::Parse { token, position, reason } => Error::Parse {
            token,
            position,
            reason: format!("--{flag}: {reason}"),
        },
        other => other,
    })
}

/// Splits `a;b;c` into partitions, reporting byte offsets into the flag.
fn partitions(flag: &str, s: &str, count: usize) -> Result<Vec<Partition>> {
    let pieces: Vec<&str> = s.split(';').collect();
    if pieces.len() != count {
        return Err(Error::parse(s, 0, format!("--{flag} needs {count} partitions separated by `;`")));
    }
    let mut offset = 0;
    let mut out = Vec::new();
    for piece in pieces {
        out.push(Partition::from_str(piece).map_err(|e| match e {
            Error::Parse { token, position, reason } => Error::Parse {
                token,
                position: position + offset,
                reason: format!("--{flag}: {reason}"),
            },
            other => other,
        })?);
        offset += piece.len() + 1;
    }
    Ok(out)
}

fn tableau(s: &str, a: Alphabet) -> Result<Tableau> {
    let t = Tableau::parse(s, a)?;
    if !t.validate_spo() {
        return Err(Error::InvalidTableau);
    }
    Ok(t)
}

fn word(s: &str, a: Alphabet) -> Result<OneRowWord> {
    let w = OneRowWord::parse(s)?;
    for (i, e) in w.entries().iter().enumerate() {
        if !e.is_valid_for(a) {
            return Err(Error::EntryOutOfRange {
                entry: format!("{e} (letter {})", i + 1),
                m: a.m,
                n: a.n,
            });
        }
    }
    Ok(w)
}

fn with_schema(command: &str, mut body: Value) -> Value {
    if let Value::Object(map) = &mut body {
        map.insert("schema".into(), json!(1));
        map.insert("command".into(), json!(command));
    }
    body
}

fn print_json(out: &mut String, v: &Value) {
    out.push_str(&serde_json::to_string_pretty(v).expect("json values serialize"));
    out.push('\n');
}

fn decomposition_text(out: &mut String, d: &Decomposition, trace: bool) {
    if trace {
        for step in &d.steps {
            let exited = step.exited.map(|e| e.token()).unwrap_or_else(|| "-".into());
            let _ = writeln!(out, "{:<13} out {:<4} {}", step.stage, exited, step.tableau);
        }
    }
    let _ = writeln!(out, "sequence {}", d.sequence);
    let _ = writeln!(out, "T = {}", d.tableau);
    let _ = writeln!(out, "U = {}", d.word);
}

fn execute(cmd: Command, json_out: bool, out: &mut String) -> std::result::Result<(), Failure> {
    match cmd {
        Command::Enumerate { lambda, alphabet, count } => {
            let lambda = partition("lambda", &lambda)?;
            let a = alphabet.alphabet()?;
            let all: Vec<Tableau> = enumerate_spo_tableaux(&lambda, a).collect();
            if json_out {
                let body = if count {
                    json!({ "lambda": lambda, "m": a.m, "n": a.n, "count": all.len() })
                } else {
                    json!({ "lambda": lambda, "m": a.m, "n": a.n, "count": all.len(), "tableaux": all })
                };
                print_json(out, &with_schema("enumerate", body));
            } else if count {
                let _ = writeln!(out, "{}", all.len());
            } else {
                for t in &all {
                    let _ = writeln!(out, "{t}");
                }
            }
        }
        Command::Character { lambda, alphabet, branching } => {
            let lambda = partition("lambda", &lambda)?;
            let a = alphabet.alphabet()?;
            let p = if branching {
                spo_character_branching(&lambda, a)
            } else {
                spo_character(&lambda, a)
            };
            if json_out {
                let body = json!({ "lambda": lambda, "m": a.m, "n": a.n, "terms": p.to_json() });
                print_json(out, &with_schema("character", body));
            } else {
                let _ = writeln!(out, "{p}");
            }
        }
        Command::Insert { tableau: t, letter, alphabet, trace } => {
            let a = alphabet.alphabet()?;
            let t = tableau(&t, a)?;
            let x = Entry::parse_token(letter.trim(), 0)?;
            if !x.is_valid_for(a) {
                return Err(Error::EntryOutOfRange { entry: x.token(), m: a.m, n: a.n }.into());
            }
            let (s, tr) = spo_insert(&t, x)?;
            if json_out {
                let mut body = json!({ "tableau": s, "shape": s.shape(), "outcome": tr.outcome });
                if trace {
                    body["trace"] = serde_json::to_value(&tr).expect("trace serializes");
                }
                print_json(out, &with_schema("insert", body));
            } else {
                if trace {
                    let boxes = |v: &[crate::shape::Box]| v.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" ");
                    let _ = writeln!(out, "outcome {}", tr.outcome);
                    let _ = writeln!(out, "row route {}", boxes(&tr.bump_route));
                    let _ = writeln!(out, "column route {}", boxes(&tr.column_route));
                    let _ = writeln!(out, "slide path {}", boxes(&tr.jdt_path));
                }
                let _ = writeln!(out, "{s}");
            }
        }
        Command::Product { tableau: t, word: w, alphabet, trace } => {
            let a = alphabet.alphabet()?;
            let t = tableau(&t, a)?;
            let u = word(&w, a)?;
            let (s, seq, tr) = product_traced(&t, &u)?;
            if json_out {
                let mut body = json!({ "tableau": s, "sequence": seq });
                if trace {
                    let steps: Vec<Value> = tr
                        .steps
                        .iter()
                        .map(|(x, t, i)| json!({ "letter": x, "tableau": t, "outcome": i.outcome }))
                        .collect();
                    body["trace"] = json!(steps);
                }
                print_json(out, &with_schema("product", body));
            } else {
                if trace {
                    for (x, t, _) in &tr.steps {
                        let _ = writeln!(out, "insert {:<4} {t}", x.token());
                    }
                }
                let _ = writeln!(out, "sequence {seq}");
                let _ = writeln!(out, "{s}");
            }
        }
        Command::Decompose { tableau: t, seq, triple, k, alphabet, trace } => {
            let a = alphabet.alphabet()?;
            let s = tableau(&t, a)?;
            let d = match (seq, triple) {
                (Some(seq), None) => {
                    let p = partitions("seq", &seq, 4)?;
                    let mut it = p.into_iter();
                    let seq = SpoSequence::new(
                        it.next().expect("4"),
                        it.next().expect("4"),
                        it.next().expect("4"),
                        it.next().expect("4"),
                    )?;
                    decompose_traced(&s, &seq)?
                }
                (None, Some(triple)) => {
                    let p = partitions("triple", &triple, 3)?;
                    let mut it = p.into_iter();
                    let triple = SpTriple::new(it.next().expect("3"), it.next().expect("3"), it.next().expect("3"))?;
                    let k = k.expect("clap requires --k with --triple");
                    if triple.k() != k {
                        return Err(Error::InvalidTriple(format!("|λ/μ| + |ν/μ| = {} but --k is {k}", triple.k())).into());
                    }
                    decompose_with_triple_traced(&s, &triple)?
                }
                _ => return Err(Error::parse("", 0, "give exactly one of --seq or --triple").into()),
            };
            if json_out {
                let mut body = json!({ "T": d.tableau, "U": d.word, "sequence": d.sequence });
                if trace {
                    body["trace"] = serde_json::to_value(&d.steps).expect("steps serialize");
                }
                print_json(out, &with_schema("decompose", body));
            } else {
                decomposition_text(out, &d, trace);
            }
        }
        Command::Pieri { lambda, k } => {
            let lambda = partition("lambda", &lambda)?;
            if k == 0 {
                return Err(Error::parse("0", 0, "--k must be positive").into());
            }
            let c = pieri_coefficients(&lambda, k);
            if json_out {
                let rows: Vec<Value> = c.iter().rev().map(|(nu, a)| json!({ "nu": nu, "alpha": a })).collect();
                let body = json!({ "lambda": lambda, "k": k, "coefficients": rows });
                print_json(out, &with_schema("pieri", body));
            } else {
                for (nu, alpha) in c.iter().rev() {
                    let _ = writeln!(out, "{:<16} {alpha}", nu.to_string());
                }
                let _ = writeln!(out, "{} terms, coefficient sum {}", c.len(), c.values().sum::<usize>());
            }
        }
        Command::Verify { lambda, k, alphabet, jobs, no_witness } => {
            let lambda = partition("lambda", &lambda)?;
            let a = alphabet.alphabet()?;
            if k == 0 {
                return Err(Error::parse("0", 0, "--k must be positive").into());
            }
            let opts = VerifyOptions {
                jobs: jobs.max(1),
                insertion_witness: !no_witness,
            };
            let r = verify_pieri_with(&lambda, k, a, opts)?;
            if json_out {
                let mut body = serde_json::to_value(&r).expect("report serializes");
                body["passed"] = json!(r.passed());
                print_json(out, &with_schema("verify", body));
            } else {
                for t in &r.terms {
                    let status = match t.witness_ok {
                        Some(true) => "pass",
                        Some(false) => "FAIL",
                        None => "-",
                    };
                    let pairs = t.pairs.map(|p| p.to_string()).unwrap_or_else(|| "-".into());
                    let _ = writeln!(
                        out,
                        "{:<16} alpha {:<2} tableaux {:<6} pairs {:<8} {status}",
                        t.nu.to_string(),
                        t.alpha,
                        t.tableaux,
                        pairs
                    );
                }
                let _ = writeln!(out, "lhs {} terms, rhs {} terms", r.lhs_terms, r.rhs_terms);
                match &r.first_difference {
                    None => {}
                    Some(d) => {
                        let _ = writeln!(out, "first difference at {}: lhs {} rhs {}", d.monomial, d.lhs, d.rhs);
                    }
                }
                let _ = writeln!(out, "{}", if r.passed() { "PASS" } else { "FAIL" });
            }
            if !r.passed() {
                return Err(Failure::Check);
            }
        }
        Command::Bijection { lambda, k, alphabet } => {
            let lambda = partition("lambda", &lambda)?;
            let a = alphabet.alphabet()?;
            let r = verify_bijection_counts(&lambda, k, a)?;
            if json_out {
                let mut body = serde_json::to_value(&r).expect("report serializes");
                body["passed"] = json!(r.passed());
                print_json(out, &with_schema("bijection", body));
            } else {
                for row in &r.rows {
                    let _ = writeln!(
                        out,
                        "{:<16} alpha {:<2} records {:<4} splits {:<4} pairs {} / {}",
                        row.nu.to_string(),
                        row.alpha,
                        row.sequences,
                        row.split_triples,
                        row.tableau_pairs,
                        row.expected_pairs
                    );
                }
                for f in &r.failures {
                    let _ = writeln!(out, "failure: {f}");
                }
                let _ = writeln!(out, "{}", if r.passed() { "PASS" } else { "FAIL" });
            }
            if !r.passed() {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> RunResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let root = match Root::try_parse_from(args) {
        Ok(r) => r,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                RunResult { code, stdout: text, stderr: String::new() }
            } else {
                RunResult { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut stdout = String::new();
    let mut stderr = String::new();
    let code = match execute(root.command, root.output.json, &mut stdout) {
        Ok(()) => 0,
        Err(Failure::Check) => 1,
        Err(Failure::Input(e)) => {
            let code = exit_code(&e);
            if root.output.json {
                let body = json!({ "schema": 1, "error": e.to_string(), "exit": code });
                print_json(&mut stdout, &body);
            }
            let _ = writeln!(stderr, "error: {e}");
            code
        }
    };
    if let Some(path) = &root.output.out {
        if let Err(e) = std::fs::write(path, &stdout) {
            let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
            return RunResult { code: 2, stdout, stderr };
        }
    }
    RunResult { code, stdout, stderr }
}
