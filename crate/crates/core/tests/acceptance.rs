//! Acceptance suite. Prints one line per criterion and exits non-zero if
//! any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use spo_tableau::characters::{spo_character, spo_character_branching, symplectic_schur, LaurentMonomial, LaurentPoly};
use spo_tableau::cli;
use spo_tableau::insertion::{product, spo_insert, OneRowWord, SpoSequence};
use spo_tableau::pieri::{check_sequence_bijection, pieri_coefficients, sp_to_spo, spo_to_sp, verify_pieri};
use spo_tableau::pieri::one_row_words;
use spo_tableau::reverse::{decompose_with_sequence, decompose_with_triple, SpTriple};
use spo_tableau::shape::Partition;
use spo_tableau::tableau::{enumerate_spo_tableaux, Entry, Tableau};

use common::{alphabet, partitions_up_to};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn within(limit: Duration, started: Instant, detail: String) -> Outcome {
    let took = started.elapsed();
    if took < limit {
        Ok(detail)
    } else {
        Err(format!("{detail}; took {took:?}, limit {limit:?}"))
    }
}

fn golden_pieri_table() -> Outcome {
    let started = Instant::now();
    let run = cli::run(["spo", "pieri", "--lambda", "3,1", "--k", "3", "--json"]);
    if run.code != 0 {
        return Err(format!("exit {}: {}", run.code, run.stderr));
    }
    let v: serde_json::Value = serde_json::from_str(&run.stdout).map_err(|e| e.to_string())?;
    let got: BTreeMap<Partition, u64> = v["coefficients"]
        .as_array()
        .ok_or("no coefficients")?
        .iter()
        .map(|row| {
            let parts: Vec<usize> = serde_json::from_value(row["nu"].clone()).unwrap();
            (Partition::new(parts).unwrap(), row["alpha"].as_u64().unwrap())
        })
        .collect();
    let published: BTreeMap<Partition, u64> = [
        ("6,1", 1),
        ("5,2", 1),
        ("5,1,1", 1),
        ("4,3", 1),
        ("4,2,1", 1),
        ("4,1", 2),
        ("3,2", 2),
        ("3,1,1", 1),
        ("2,2,1", 1),
        ("5", 1),
        ("2,1", 2),
        ("1,1,1", 1),
        ("3", 1),
        ("1", 1),
    ]
    .into_iter()
    .map(|(s, c)| (p(s), c))
    .collect();
    if got != published {
        let extra: Vec<String> = got
            .iter()
            .filter(|(nu, c)| published.get(*nu) != Some(c))
            .map(|(nu, c)| format!("({nu}) -> {c}"))
            .collect();
        let missing: Vec<String> = published
            .iter()
            .filter(|(nu, c)| got.get(*nu) != Some(c))
            .map(|(nu, c)| format!("({nu}) -> {c}"))
            .collect();
        return Err(format!(
            "{} terms computed, 14 expected; not in the expected table: [{}]; expected but not computed: [{}]",
            got.len(),
            extra.join(", "),
            missing.join(", ")
        ));
    }
    within(Duration::from_secs(1), started, "14 terms match".into())
}

fn golden_character() -> Outcome {
    let started = Instant::now();
    let a = alphabet(2, 1);
    let mono = |x: [i32; 2], y: u32| LaurentMonomial { x: x.to_vec(), y: vec![y] };
    let expected = LaurentPoly::from_monomials(
        2,
        1,
        [
            mono([1, 1], 0),
            mono([1, -1], 0),
            mono([-1, 1], 0),
            mono([-1, -1], 0),
            mono([0, 0], 0),
            mono([1, 0], 1),
            mono([-1, 0], 1),
            mono([0, 1], 1),
            mono([0, -1], 1),
            mono([0, 0], 2),
        ],
    )
    .unwrap();
    let got = spo_character(&p("1,1"), a);
    if got != expected {
        return Err(format!("got {got}"));
    }
    within(Duration::from_secs(1), started, format!("{} terms", got.num_terms()))
}

/// Reports failing cases split by whether `ℓ(λ) > m`.
fn summarize(cases: &[(Partition, usize, u32, bool)]) -> Outcome {
    let failing: Vec<_> = cases.iter().filter(|c| !c.3).collect();
    if failing.is_empty() {
        return Ok(format!("{} identities", cases.len()));
    }
    let short = |c: &&(Partition, usize, u32, bool)| c.0.length() <= c.2 as usize;
    let short_total = cases.iter().filter(|c| short(c)).count();
    let short_failing = failing.iter().filter(|c| short(c)).count();
    let shown: Vec<String> = failing.iter().take(4).map(|(l, k, m, _)| format!("λ = ({l}), k = {k}, m = {m}")).collect();
    Err(format!(
        "{} of {} identities fail; {} of {} cases with ℓ(λ) <= m fail, every other failure has ℓ(λ) > m; e.g. {}",
        failing.len(),
        cases.len(),
        short_failing,
        short_total,
        shown.join("; ")
    ))
}

fn symbolic_pieri() -> Outcome {
    let mut cases = Vec::new();
    for (m, n) in [(1, 1), (2, 1), (2, 2)] {
        let a = alphabet(m, n);
        for lambda in partitions_up_to(4) {
            for k in 1..=3 {
                let r = verify_pieri(&lambda, k, a).map_err(|e| e.to_string())?;
                cases.push((lambda.clone(), k, m, r.identity_holds));
            }
        }
    }
    summarize(&cases)
}

fn symplectic_specialization() -> Outcome {
    let a = alphabet(2, 0);
    let mut cases = Vec::new();
    for lambda in partitions_up_to(4) {
        let sp_lambda = symplectic_schur(&lambda, 2);
        for k in 1..=3 {
            let lhs = &sp_lambda * &symplectic_schur(&p(&k.to_string()), 2);
            let mut rhs = LaurentPoly::zero(2, 0);
            for (nu, alpha) in pieri_coefficients(&lambda, k) {
                rhs = &rhs + &symplectic_schur(&nu, 2).scaled(&BigInt::from(alpha));
            }
            let r = verify_pieri(&lambda, k, a).map_err(|e| e.to_string())?;
            cases.push((lambda.clone(), k, 2, lhs == rhs && r.identity_holds));
        }
    }
    summarize(&cases)
}

fn branching_equality() -> Outcome {
    let a = alphabet(2, 2);
    let all = partitions_up_to(4);
    for lambda in &all {
        if spo_character(lambda, a) != spo_character_branching(lambda, a) {
            return Err(format!("λ = {lambda}"));
        }
    }
    Ok(format!("{} shapes", all.len()))
}

fn roundtrip() -> Outcome {
    let a = alphabet(2, 1);
    let mut pairs = 0;
    let mut failures = Vec::new();
    let words: Vec<OneRowWord> = (0..=3).flat_map(|k| one_row_words(k, a)).collect();
    for lambda in partitions_up_to(4) {
        for t in enumerate_spo_tableaux(&lambda, a) {
            for u in &words {
                pairs += 1;
                let (s, seq) = product(&t, u).map_err(|e| e.to_string())?;
                match decompose_with_sequence(&s, &seq) {
                    Ok((t2, u2)) if t2 == t && &u2 == u => {}
                    other => failures.push(format!("sequence route {t} · {u}: {other:?}")),
                }
                let (triple, _) = spo_to_sp(&seq).map_err(|e| e.to_string())?;
                match decompose_with_triple(&s, &triple) {
                    Ok((t2, u2)) if t2 == t && &u2 == u => {}
                    other => failures.push(format!("triple route {t} · {u}: {other:?}")),
                }
            }
        }
    }
    if failures.is_empty() {
        Ok(format!("{pairs} pairs, both routes"))
    } else {
        Err(format!("{} failures, first: {}", failures.len(), failures[0]))
    }
}

fn sequence_bijection() -> Outcome {
    let mut cases = 0;
    for lambda in partitions_up_to(5) {
        for k in 0..=4 {
            let bad = check_sequence_bijection(&lambda, k);
            if let Some(first) = bad.first() {
                return Err(format!("λ = {lambda}, k = {k}: {first}"));
            }
            cases += 1;
        }
    }
    let seq = SpoSequence::new(p("4,3,3,1,1"), p("4,3,3,2,1,1"), p("3,3,2,1,1,1"), p("5,3,2,1,1,1"))
        .map_err(|e| e.to_string())?;
    let (triple, m1) = spo_to_sp(&seq).map_err(|e| e.to_string())?;
    if triple.mu != p("3,3,1,1,1") || m1 != 2 {
        return Err(format!("first worked example gave ({triple}, {m1})"));
    }
    let triple = SpTriple::new(p("4,3,3,1,1"), p("3,3,1,1,1"), p("5,3,2,1,1,1")).map_err(|e| e.to_string())?;
    let back = sp_to_spo(&triple, 2).map_err(|e| e.to_string())?;
    if back.mu_minus != p("3,3,2,1,1,1") || back.mu_circ != p("4,3,3,2,1,1") {
        return Err(format!("second worked example gave {back}"));
    }
    Ok(format!("{cases} (λ, k) cases and both worked examples"))
}

fn insertion_goldens() -> Outcome {
    let tab = |s: &str, m, n| Tableau::parse(s, alphabet(m, n)).unwrap();
    let letter = |s: &str| Entry::parse_token(s, 0).unwrap();
    let checks = [
        (spo_insert(&tab("1 1b 2 3 ; 2b 3 ; 3b 4", 4, 0), letter("1b")), "1 1b 1b 3 ; 3 4 ; 3b"),
        (spo_insert(&tab("1 2 2b ; 2 3 4 ; 3b 1o ; 1o 2o", 4, 2), letter("1b")), "1 1b 2b ; 2 2 4 ; 1o 2o ; 1o"),
        (spo_insert(&tab("1b 3b 5o ; 4 4o ; 3o 4o", 4, 5), letter("3")), "1b 3 4o 5o ; 3b 3o ; 4 4o"),
    ];
    for (got, want) in checks {
        let (s, _) = got.map_err(|e| e.to_string())?;
        if s.to_string() != want {
            return Err(format!("got {s}, expected {want}"));
        }
    }
    let (_, route) = spo_insert(&tab("1b 3b 5o ; 4 4o ; 3o 4o", 4, 5), letter("3")).unwrap();
    let shown: Vec<String> = route.bump_route.iter().map(|b| b.to_string()).collect();
    if shown != ["(1,2)", "(2,1)", "(3,1)"] {
        return Err(format!("bumping route {shown:?}"));
    }
    let (s, _) = product(
        &tab("1b 2 5 ; 3 4b 1o ; 4 5o ; 2o", 5, 5),
        &OneRowWord::parse("1 3 5 2o 5o").unwrap(),
    )
    .map_err(|e| e.to_string())?;
    if s.to_string() != "2 3 5 5 ; 3 4b 1o ; 4 5o ; 2o 5o ; 2o" {
        return Err(format!("product gave {s}"));
    }
    Ok("three insertions and the product".into())
}

fn property_suite() -> Outcome {
    let (a21, a22) = (alphabet(2, 1), alphabet(2, 2));
    let suites: Vec<(&str, Vec<String>)> = vec![
        ("product weights and validity", common::product_weights_and_validity(4, 3, a21)),
        ("insertion weights", common::insertion_weights(4, a21)),
        ("route geometry", common::route_geometry(4, a21)),
        ("circled pairs", common::circled_pairs(3, a22)),
        ("symplectic pairs", common::symplectic_pairs(4, a21)),
        ("circled then symplectic", common::circled_then_symplectic(4, a21)),
        ("initial strip", common::cancellations_form_initial_strip(4, 3, a21)),
        ("first row", common::first_row_preserved(4, a21)),
        ("cancelled columns", common::cancelled_columns(4, a21)),
    ];
    let mut failing = Vec::new();
    for (name, bad) in &suites {
        if let Some(first) = bad.first() {
            failing.push(format!("{name}: {} violations, e.g. {first}", bad.len()));
        }
    }
    if failing.is_empty() {
        Ok(format!("{} properties, zero violations", suites.len()))
    } else {
        Err(failing.join("; "))
    }
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("golden Pieri table for λ = (3,1), k = 3", golden_pieri_table),
        ("golden character spo_(1,1) at (m,n) = (2,1)", golden_character),
        ("symbolic Pieri identity, |λ| <= 4, k <= 3", symbolic_pieri),
        ("symplectic specialization at n = 0, m = 2", symplectic_specialization),
        ("branching formula at (m,n) = (2,2)", branching_equality),
        ("product/decompose roundtrip at (m,n) = (2,1)", roundtrip),
        ("triple/sequence bijection, |λ| <= 5, k <= 4", sequence_bijection),
        ("insertion and product goldens", insertion_goldens),
        ("exhaustive property suite", property_suite),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = check();
        let took = started.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {took:.2?})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({detail}; {took:.2?})", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
