//! The orthosymplectic Pieri rule `spo_λ · spo_(k) = Σ α_ν spo_ν`, the
//! correspondence between sp-triples with a split `m₁` and spo shape records,
//! and checkers for both.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{spo_character, LaurentMonomial, LaurentPoly};
use crate::error::{Error, Result};
use crate::insertion::{product, OneRowWord, SpoSequence};
use crate::reverse::SpTriple;
use crate::shape::{Box, Partition, SkewShape};
use crate::tableau::{enumerate_spo_tableaux, Alphabet, Tableau};

/// `α_ν` counts the `μ ⊆ λ ∩ ν` with `λ/μ`, `ν/μ` horizontal strips and
/// `|λ/μ| + |ν/μ| = k`. Only nonzero coefficients are stored.
pub fn pieri_coefficients(lambda: &Partition, k: usize) -> BTreeMap<Partition, usize> {
    let mut out = BTreeMap::new();
    for triple in enumerate_sp_triples(lambda, k) {
        *out.entry(triple.nu).or_insert(0) += 1;
    }
    out
}

/// Every sp-triple `(λ, μ, ν)` with `|λ/μ| + |ν/μ| = k`.
pub fn enumerate_sp_triples(lambda: &Partition, k: usize) -> Vec<SpTriple> {
    let mut out = Vec::new();
    for mu in lambda.strip_subshapes() {
        let ell = lambda.size() - mu.size();
        if ell > k {
            continue;
        }
        for nu in mu.strip_extensions(k - ell) {
            out.push(SpTriple {
                lambda: lambda.clone(),
                mu: mu.clone(),
                nu,
            });
        }
    }
    out.sort();
    out
}

/// Every valid shape record starting at `λ` with `m₁ + ℓ + m₂ = k`.
pub fn enumerate_spo_sequences(lambda: &Partition, k: usize) -> Vec<SpoSequence> {
    let mut out = Vec::new();
    for m1 in 0..=k {
        for mu_circ in lambda.strip_extensions(m1) {
            for mu_minus in mu_circ.strip_subshapes() {
                let ell = mu_circ.size() - mu_minus.size();
                if m1 + ell > k {
                    continue;
                }
                for nu in mu_minus.strip_extensions(k - m1 - ell) {
                    let seq = SpoSequence {
                        lambda: lambda.clone(),
                        mu_circ: mu_circ.clone(),
                        mu_minus: mu_minus.clone(),
                        nu,
                    };
                    if seq.validate().is_ok() {
                        out.push(seq);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

fn parts_with_removed(outer: &Partition, removed: &BTreeSet<Box>) -> Result<Partition> {
    let mut parts = outer.parts().to_vec();
    for b in removed {
        parts[b.row - 1] -= 1;
    }
    Partition::new(parts)
}

/// Maps an sp-triple and a split `m₁ ≤ |ν/μ|` to a shape record. The `m₂`
/// rightmost boxes of `ν/μ` form `ν/μ⁻`. Each of the remaining (dotted)
/// boxes, taken top to bottom and left to right, adds a box to `λ`: at its
/// own position when it lies outside `λ`, otherwise at the end of the next
/// row down. The result is `μ°`.
pub fn sp_to_spo(triple: &SpTriple, m1: usize) -> Result<SpoSequence> {
    SpTriple::new(triple.lambda.clone(), triple.mu.clone(), triple.nu.clone())?;
    let kl = triple.k_minus_ell();
    if m1 > kl {
        return Err(Error::InvalidTriple(format!("m1 = {m1} exceeds |ν/μ| = {kl}")));
    }
    let mut strip_boxes = SkewShape::new(triple.nu.clone(), triple.mu.clone())?.boxes();
    strip_boxes.sort_by_key(|b| std::cmp::Reverse(b.col));
    let grown: BTreeSet<Box> = strip_boxes[..kl - m1].iter().copied().collect();
    let mu_minus = parts_with_removed(&triple.nu, &grown)?;

    let mut dotted: Vec<Box> = strip_boxes[kl - m1..].to_vec();
    dotted.sort();
    let mut parts = triple.lambda.parts().to_vec();
    for b in dotted {
        let row = if triple.lambda.contains_box(b) { b.row + 1 } else { b.row };
        if parts.len() < row {
            parts.resize(row, 0);
        }
        parts[row - 1] += 1;
    }
    let mu_circ = Partition::new(parts)?;
    SpoSequence::new(triple.lambda.clone(), mu_circ, mu_minus, triple.nu.clone())
}

/// Inverse of [`sp_to_spo`]. The boxes of `μ°/μ⁻` are dotted and, taken top
/// to bottom and right to left, each dots a box of `λ`: itself when it lies
/// in `λ`, otherwise the rightmost undotted box of the row above. Removing
/// the dotted boxes of `λ` gives `μ`; `m₁ = |μ°/λ|`.
pub fn spo_to_sp(seq: &SpoSequence) -> Result<(SpTriple, usize)> {
    seq.validate()?;
    let mut boxes = SkewShape::new(seq.mu_circ.clone(), seq.mu_minus.clone())?.boxes();
    boxes.sort_by(|a, b| a.row.cmp(&b.row).then(b.col.cmp(&a.col)));
    let mut dots: BTreeSet<Box> = BTreeSet::new();
    for b in boxes {
        let target = if seq.lambda.contains_box(b) {
            Some(b)
        } else if b.row > 1 {
            (1..=seq.lambda.part(b.row - 1))
                .rev()
                .map(|c| Box::new(b.row - 1, c))
                .find(|c| !dots.contains(c))
        } else {
            None
        };
        match target {
            Some(t) if dots.insert(t) => {}
            _ => return Err(Error::InvalidSequence(format!("no box of λ can be dotted for {b}"))),
        }
    }
    let mu = parts_with_removed(&seq.lambda, &dots)?;
    // The dotted boxes must be the ends of their rows.
    let undotted: BTreeSet<Box> = SkewShape::new(seq.lambda.clone(), mu.clone())?.boxes().into_iter().collect();
    if undotted != dots {
        return Err(Error::InvalidSequence(format!("dotted boxes of λ do not form λ/{mu}")));
    }
    let triple = SpTriple::new(seq.lambda.clone(), mu, seq.nu.clone())?;
    Ok((triple, seq.m1()))
}

/// Generating function and count of one `ν` in a Pieri check.
#[derive(Clone, Debug, Serialize)]
pub struct PieriTerm {
    pub nu: Partition,
    pub alpha: usize,
    /// Number of spo-tableaux of shape `ν`.
    pub tableaux: usize,
    /// Pairs `(T, U)` whose product has shape `ν`, when the witness ran.
    pub pairs: Option<usize>,
    /// Whether `Σ wt(T)·wt(U)` over those pairs equals `α_ν · spo_ν`.
    pub witness_ok: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Difference {
    pub monomial: LaurentMonomial,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PieriReport {
    pub lambda: Partition,
    pub k: usize,
    pub m: u32,
    pub n: u32,
    pub terms: Vec<PieriTerm>,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    /// Exact equality of `spo_λ · spo_(k)` and `Σ α_ν spo_ν`.
    pub identity_holds: bool,
    pub first_difference: Option<Difference>,
}

impl PieriReport {
    pub fn passed(&self) -> bool {
        self.identity_holds && self.terms.iter().all(|t| t.witness_ok != Some(false))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Worker threads for the per-`ν` characters and the witness.
    pub jobs: usize,
    /// Also multiply out every pair `(T, U)` and compare per `ν`.
    pub insertion_witness: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            jobs: 1,
            insertion_witness: false,
        }
    }
}

fn in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Inconsistent(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// One-row spo-tableaux of length `k`.
pub fn one_row_words(k: usize, a: Alphabet) -> Vec<OneRowWord> {
    let shape = Partition::new(vec![k]).expect("one row");
    enumerate_spo_tableaux(&shape, a)
        .map(|t| OneRowWord::new(t.rows().first().cloned().unwrap_or_default()).expect("a row of an spo-tableau"))
        .collect()
}

/// Multiplies every spo-tableau of shape `λ` by every one-row tableau of
/// length `k`, grouping weights and counts by the resulting shape.
fn insertion_witness(lambda: &Partition, k: usize, a: Alphabet) -> Result<BTreeMap<Partition, (usize, LaurentPoly)>> {
    let words = one_row_words(k, a);
    let ts: Vec<Tableau> = enumerate_spo_tableaux(lambda, a).collect();
    let (nx, ny) = (a.m as usize, a.n as usize);
    let partial: Vec<HashMap<Partition, (usize, Vec<LaurentMonomial>)>> = ts
        .par_iter()
        .map(|t| {
            let mut acc: HashMap<Partition, (usize, Vec<LaurentMonomial>)> = HashMap::new();
            let wt = t.weight();
            for u in &words {
                let (s, _) = product(t, u)?;
                let w = u.entries().iter().try_fold(wt.clone(), |w, e| w.checked_mul(&e.weight(a)))?;
                let slot = acc.entry(s.shape()).or_default();
                slot.0 += 1;
                slot.1.push(w);
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    let mut out: BTreeMap<Partition, (usize, LaurentPoly)> = BTreeMap::new();
    for acc in partial {
        for (nu, (count, monos)) in acc {
            let slot = out.entry(nu).or_insert_with(|| (0, LaurentPoly::zero(nx, ny)));
            slot.0 += count;
            slot.1 = &slot.1 + &LaurentPoly::from_monomials(nx, ny, monos)?;
        }
    }
    Ok(out)
}

pub fn verify_pieri(lambda: &Partition, k: usize, a: Alphabet) -> Result<PieriReport> {
    verify_pieri_with(lambda, k, a, VerifyOptions::default())
}

/// Checks `spo_λ · spo_(k) = Σ α_ν spo_ν` exactly. With the insertion
/// witness enabled every `ν` (including any the rule misses) is also checked
/// against the products of actual tableau pairs.
pub fn verify_pieri_with(lambda: &Partition, k: usize, a: Alphabet, opts: VerifyOptions) -> Result<PieriReport> {
    if k == 0 {
        return Err(Error::InvalidTriple("k must be positive".into()));
    }
    let coeffs = pieri_coefficients(lambda, k);
    let (nx, ny) = (a.m as usize, a.n as usize);
    let row = Partition::new(vec![k])?;

    let work = || -> Result<_> {
        let mut shapes: BTreeSet<Partition> = coeffs.keys().cloned().collect();
        shapes.insert(lambda.clone());
        shapes.insert(row.clone());
        let witness = if opts.insertion_witness {
            Some(insertion_witness(lambda, k, a)?)
        } else {
            None
        };
        if let Some(w) = &witness {
            shapes.extend(w.keys().cloned());
        }
        let shapes: Vec<Partition> = shapes.into_iter().collect();
        let chars: BTreeMap<Partition, (usize, LaurentPoly)> = shapes
            .par_iter()
            .map(|p| {
                let count = enumerate_spo_tableaux(p, a).count();
                (p.clone(), (count, spo_character(p, a)))
            })
            .collect();
        Ok((chars, witness))
    };
    let (chars, witness) = in_pool(opts.jobs, work)??;

    let lhs = &chars[lambda].1 * &chars[&row].1;
    let mut rhs = LaurentPoly::zero(nx, ny);
    for (nu, &alpha) in &coeffs {
        rhs = &rhs + &chars[nu].1.scaled(&BigInt::from(alpha));
    }
    let identity_holds = lhs.checked_eq(&rhs)?;
    let first_difference = lhs.first_difference(&rhs).map(|(monomial, l, r)| Difference {
        monomial,
        lhs: l.to_string(),
        rhs: r.to_string(),
    });

    let mut nus: BTreeSet<Partition> = coeffs.keys().cloned().collect();
    if let Some(w) = &witness {
        nus.extend(w.keys().cloned());
    }
    let terms = nus
        .into_iter()
        .rev()
        .map(|nu| {
            let alpha = coeffs.get(&nu).copied().unwrap_or(0);
            let (tableaux, ch) = &chars[&nu];
            let (pairs, witness_ok) = match &witness {
                None => (None, None),
                Some(w) => {
                    let zero = (0, LaurentPoly::zero(nx, ny));
                    let (count, gf) = w.get(&nu).unwrap_or(&zero);
                    let ok = *count == alpha * tableaux && *gf == ch.scaled(&BigInt::from(alpha));
                    (Some(*count), Some(ok))
                }
            };
            PieriTerm {
                nu,
                alpha,
                tableaux: *tableaux,
                pairs,
                witness_ok,
            }
        })
        .collect();
    Ok(PieriReport {
        lambda: lambda.clone(),
        k,
        m: a.m,
        n: a.n,
        terms,
        lhs_terms: lhs.num_terms(),
        rhs_terms: rhs.num_terms(),
        identity_holds,
        first_difference,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionRow {
    pub nu: Partition,
    pub alpha: usize,
    /// Valid shape records ending at `ν`.
    pub sequences: usize,
    /// Pairs `(triple, m₁)` with `0 ≤ m₁ ≤ |ν/μ|` ending at `ν`.
    pub split_triples: usize,
    /// Pairs `(T, U)` with `shape(T · U) = ν`.
    pub tableau_pairs: usize,
    /// `α_ν · #spo-tableaux of shape ν`.
    pub expected_pairs: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub lambda: Partition,
    pub k: usize,
    pub rows: Vec<BijectionRow>,
    pub failures: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct ShapeBijection {
    seq_count: BTreeMap<Partition, usize>,
    split_count: BTreeMap<Partition, usize>,
    failures: Vec<String>,
}

fn shape_bijection(lambda: &Partition, k: usize, seqs: &[SpoSequence]) -> ShapeBijection {
    let mut failures = Vec::new();
    let triples = enumerate_sp_triples(lambda, k);
    let mut seq_count: BTreeMap<Partition, usize> = BTreeMap::new();
    let mut split_count: BTreeMap<Partition, usize> = BTreeMap::new();
    let seq_set: BTreeSet<&SpoSequence> = seqs.iter().collect();
    for seq in seqs {
        *seq_count.entry(seq.nu.clone()).or_default() += 1;
        match spo_to_sp(seq) {
            Ok((triple, m1)) => match sp_to_spo(&triple, m1) {
                Ok(back) if &back == seq => {}
                Ok(back) => failures.push(format!("{seq} -> ({triple}, {m1}) -> {back}")),
                Err(e) => failures.push(format!("{seq} -> ({triple}, {m1}) -> error: {e}")),
            },
            Err(e) => failures.push(format!("{seq}: {e}")),
        }
    }
    for triple in &triples {
        for m1 in 0..=triple.k_minus_ell() {
            *split_count.entry(triple.nu.clone()).or_default() += 1;
            match sp_to_spo(triple, m1) {
                Ok(seq) => {
                    if !seq_set.contains(&seq) {
                        failures.push(format!("({triple}, {m1}) -> {seq} is not enumerated"));
                    }
                    match spo_to_sp(&seq) {
                        Ok((t, m)) if &t == triple && m == m1 => {}
                        Ok((t, m)) => failures.push(format!("({triple}, {m1}) -> {seq} -> ({t}, {m})")),
                        Err(e) => failures.push(format!("({triple}, {m1}) -> {seq} -> error: {e}")),
                    }
                }
                Err(e) => failures.push(format!("({triple}, {m1}): {e}")),
            }
        }
    }
    for (nu, &n) in &seq_count {
        let splits = split_count.get(nu).copied().unwrap_or(0);
        if n != splits {
            failures.push(format!("ν = {nu}: {n} shape records but {splits} split triples"));
        }
    }
    for (nu, &splits) in &split_count {
        if !seq_count.contains_key(nu) {
            failures.push(format!("ν = {nu}: no shape records but {splits} split triples"));
        }
    }
    ShapeBijection {
        seq_count,
        split_count,
        failures,
    }
}

/// Shape-level check that `sp_to_spo` and `spo_to_sp` are mutually inverse
/// between split triples and shape records for `(λ, k)`. Returns the
/// violations found.
pub fn check_sequence_bijection(lambda: &Partition, k: usize) -> Vec<String> {
    shape_bijection(lambda, k, &enumerate_spo_sequences(lambda, k)).failures
}

/// Checks that `sp_to_spo` and `spo_to_sp` are mutually inverse between
/// split triples and shape records, and that the tableau products realize
/// the count `α_ν · #SPO(ν)` with every `S` of shape `ν` arising from
/// exactly `α_ν` distinct shape records.
pub fn verify_bijection_counts(lambda: &Partition, k: usize, a: Alphabet) -> Result<BijectionReport> {
    let seqs = enumerate_spo_sequences(lambda, k);
    let coeffs = pieri_coefficients(lambda, k);
    let seq_set: BTreeSet<&SpoSequence> = seqs.iter().collect();
    let ShapeBijection {
        seq_count,
        split_count,
        mut failures,
    } = shape_bijection(lambda, k, &seqs);

    // Tableau level: group products by the resulting tableau.
    let words = one_row_words(k, a);
    let mut realized: BTreeMap<String, (Partition, BTreeSet<SpoSequence>, usize)> = BTreeMap::new();
    for t in enumerate_spo_tableaux(lambda, a) {
        for u in &words {
            let (s, seq) = product(&t, u)?;
            if !seq_set.contains(&seq) {
                failures.push(format!("{t} · {u} records {seq}, which is not a valid shape record"));
            }
            let slot = realized
                .entry(s.to_string())
                .or_insert_with(|| (s.shape(), BTreeSet::new(), 0));
            slot.1.insert(seq);
            slot.2 += 1;
        }
    }
    let mut pair_count: BTreeMap<Partition, usize> = BTreeMap::new();
    for (s, (nu, seqs, count)) in &realized {
        *pair_count.entry(nu.clone()).or_default() += count;
        let alpha = coeffs.get(nu).copied().unwrap_or(0);
        if seqs.len() != alpha || *count != alpha {
            failures.push(format!(
                "S = {s} arises from {count} pairs with {} shape records, expected α = {alpha}",
                seqs.len()
            ));
        }
    }

    let mut nus: BTreeSet<Partition> = coeffs.keys().cloned().collect();
    nus.extend(seq_count.keys().cloned());
    nus.extend(pair_count.keys().cloned());
    let mut rows = Vec::new();
    for nu in nus.into_iter().rev() {
        let alpha = coeffs.get(&nu).copied().unwrap_or(0);
        let sequences = seq_count.get(&nu).copied().unwrap_or(0);
        let split_triples = split_count.get(&nu).copied().unwrap_or(0);
        let tableau_pairs = pair_count.get(&nu).copied().unwrap_or(0);
        let expected_pairs = alpha * enumerate_spo_tableaux(&nu, a).count();
        if tableau_pairs != expected_pairs {
            failures.push(format!("ν = {nu}: {tableau_pairs} tableau pairs, expected {expected_pairs}"));
        }
        rows.push(BijectionRow {
            nu,
            alpha,
            sequences,
            split_triples,
            tableau_pairs,
            expected_pairs,
        });
    }
    Ok(BijectionReport {
        lambda: lambda.clone(),
        k,
        rows,
        failures,
    })
}
