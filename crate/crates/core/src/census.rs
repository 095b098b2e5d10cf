//! Exhaustive census of small frames.
//!
//! Frames are generated as downset lattices of their join-irreducible posets.
//! Posets are grown one maximal element at a time and deduplicated by
//! canonical certificate; since adding an element always adds a downset,
//! growth stops once the downset count passes the size bound.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_poset, iso, Certificate};
use crate::error::{Error, Result};
use crate::frame::{downset_frame, standard_frame, Frame, StandardFrame};
use crate::hom::{automorphisms, corpus_generator, endomorphisms, points, Corpus};
use crate::poset::Poset;

/// Largest frame size the census accepts by default.
pub const DEFAULT_MAX_SIZE: usize = 8;

/// Default corpus for the generator test: every frame with at most this many elements.
pub const DEFAULT_CORPUS_SIZE: usize = 5;

/// One isomorphism class of finite frames.
#[derive(Debug, Clone)]
pub struct FrameClass {
    pub certificate: Certificate,
    pub frame: Arc<Frame>,
    /// Join-irreducible poset the frame was generated from.
    pub poset: Poset,
}

/// Posets up to isomorphism with at most `max_downsets` downsets, keyed by certificate.
fn posets_by_downsets(max_downsets: usize) -> Vec<(Poset, usize)> {
    let mut out = Vec::new();
    let mut level = vec![Poset::antichain(0)];
    while !level.is_empty() {
        let mut next: BTreeMap<Certificate, Poset> = BTreeMap::new();
        for p in &level {
            let downsets = p.downsets().expect("census posets are small");
            out.push((p.clone(), downsets.len()));
            for &d in &downsets {
                let q = extend(p, d);
                let count = q.downsets().expect("census posets are small").len();
                if count > max_downsets {
                    continue;
                }
                let canon = canonical_poset(&q);
                next.entry(canon.certificate)
                    .or_insert_with(|| relabel_canonically(&q, &canon.order));
            }
        }
        level = next.into_values().collect();
    }
    out
}

/// Adds a new maximal element sitting above exactly the downset `below`.
fn extend(p: &Poset, below: u64) -> Poset {
    let k = p.len();
    let n = k + 1;
    let mut leq = vec![false; n * n];
    for x in 0..k {
        for y in 0..k {
            leq[x * n + y] = p.leq(x, y);
        }
        leq[x * n + k] = below & (1 << x) != 0;
    }
    leq[k * n + k] = true;
    let labels = (0..n).map(|i| format!("p{i}")).collect();
    Poset::new(labels, leq).expect("extension of a poset by a maximal element")
}

fn relabel_canonically(p: &Poset, order: &[usize]) -> Poset {
    let mut perm = vec![0; p.len()];
    for (pos, &x) in order.iter().enumerate() {
        perm[x] = pos;
    }
    let q = p.permute(&perm);
    let labels = (0..q.len()).map(|i| format!("p{i}")).collect();
    Poset::new(labels, q.relation().to_vec()).expect("relabelled poset")
}

/// Every frame with at most `n_max` elements, one per isomorphism class,
/// sorted by (size, certificate).
pub fn frame_classes(n_max: usize, limit: usize) -> Result<Vec<FrameClass>> {
    if n_max > limit {
        return Err(Error::BudgetExceeded {
            what: format!("census of frames up to size {n_max}"),
            limit,
        });
    }
    let mut classes: Vec<FrameClass> = posets_by_downsets(n_max)
        .into_iter()
        .filter(|(_, count)| *count <= n_max)
        .map(|(poset, _)| {
            let frame = downset_frame(&poset)?;
            Ok(FrameClass {
                certificate: canonical_form(&frame),
                frame: Arc::new(frame),
                poset,
            })
        })
        .collect::<Result<_>>()?;
    classes.sort_by(|a, b| a.certificate.cmp(&b.certificate));
    Ok(classes)
}

/// Representatives of the `n`-element frames up to isomorphism.
pub fn enumerate_frames(n: usize, limit: usize) -> Result<Vec<Frame>> {
    if n == 0 {
        return Err(Error::InvalidFrame("a frame has at least one element".into()));
    }
    Ok(frame_classes(n, limit)?
        .into_iter()
        .filter(|c| c.frame.len() == n)
        .map(|c| (*c.frame).clone())
        .collect())
}

/// All frames with at most `max_size` elements, named `frames<=N`.
pub fn standard_corpus(max_size: usize) -> Result<Corpus> {
    let frames = frame_classes(max_size, max_size)?
        .into_iter()
        .map(|c| c.frame)
        .collect();
    Ok(Corpus::new(format!("frames<={max_size}"), frames))
}

#[derive(Debug, Clone)]
pub struct CensusRecord {
    pub certificate: Certificate,
    pub size: usize,
    pub n_points: usize,
    pub n_endos: usize,
    pub n_autos: usize,
    pub corpus_generator: bool,
    pub corpus_id: String,
    pub provenance: Poset,
    pub frame: Arc<Frame>,
}

impl CensusRecord {
    pub fn line(&self) -> String {
        format!(
            "{} {} {} {} {} {} {}",
            self.certificate,
            self.size,
            self.n_points,
            self.n_endos,
            self.n_autos,
            self.corpus_generator,
            self.corpus_id
        )
    }
}

pub fn census(n_max: usize, corpus: &Corpus, limit: usize) -> Result<Vec<CensusRecord>> {
    let classes = frame_classes(n_max, limit)?;
    // per-frame work is independent; collect() keeps the input order
    let records: Vec<CensusRecord> = classes
        .into_par_iter()
        .map(|c| {
            let endos = endomorphisms(&c.frame);
            CensusRecord {
                size: c.frame.len(),
                n_points: points(&c.frame).len(),
                n_endos: endos.len(),
                n_autos: automorphisms(&c.frame).len(),
                corpus_generator: corpus_generator(&c.frame, corpus).holds,
                corpus_id: corpus.id.clone(),
                certificate: c.certificate,
                provenance: c.poset,
                frame: c.frame,
            }
        })
        .collect();
    Ok(records)
}

/// Line-oriented catalog, one record per line, sorted by (size, certificate).
pub fn catalog(records: &[CensusRecord]) -> String {
    let mut out = String::from("# certificate size points endos autos generator corpus\n");
    for r in records {
        out.push_str(&r.line());
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    /// No frame in range satisfies the hypothesis.
    VacuousPass,
    Fail,
    /// The claim needs a frame that is out of range.
    VacuousFail,
}

impl ClaimStatus {
    pub fn is_failure(self) -> bool {
        self == ClaimStatus::Fail
    }

    fn tag(self) -> &'static str {
        match self {
            ClaimStatus::Pass => "PASS",
            ClaimStatus::VacuousPass => "PASS (vacuous)",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::VacuousFail => "FAIL (vacuous)",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub status: ClaimStatus,
    pub details: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct ClaimsReport {
    pub n_max: usize,
    pub corpus_id: String,
    pub corpus_size: usize,
    pub claims: Vec<Claim>,
    /// Frames with 2 points and 3 endomorphisms that fail the generator test.
    pub findings: Vec<String>,
    /// Frames with 2 points and 3 endomorphisms, generator or not.
    pub two_point_three_endo: Vec<String>,
}

impl ClaimsReport {
    pub fn passed(&self) -> bool {
        !self.claims.iter().any(|c| c.status.is_failure())
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "frames: all up to {} elements", self.n_max);
        let _ = writeln!(out, "corpus: {} ({} frames)", self.corpus_id, self.corpus_size);
        for c in &self.claims {
            let _ = writeln!(out, "{} {}: {}", c.id, c.status.tag(), c.statement);
            for d in &c.details {
                let _ = writeln!(out, "  {d}");
            }
        }
        for f in &self.findings {
            let _ = writeln!(out, "FINDING: {f}");
        }
        let _ = writeln!(
            out,
            "note: frames with 2 points and 3 endomorphisms, generator test ignored: {}",
            if self.two_point_three_endo.is_empty() {
                "none".to_string()
            } else {
                self.two_point_three_endo.join(", ")
            }
        );
        out
    }
}

/// Short human name for a frame: `chain(n)`, `diamond`, or its certificate.
pub fn describe(frame: &Frame) -> String {
    if frame.is_chain() {
        match frame.len() {
            1 => "one_point".into(),
            2 => "T".into(),
            3 => "S".into(),
            n => format!("chain({n})"),
        }
    } else if iso(frame, &standard_frame(StandardFrame::Diamond)) {
        "diamond".into()
    } else {
        canonical_form(frame).to_string()
    }
}

/// Counting claims checked against a finished census.
///
/// * C1: every 4-element frame has at least 4 endomorphisms.
/// * C2: every frame with at least 5 elements, exactly 2 points and passing the
///   corpus generator test has at least 4 endomorphisms.
/// * C3: exactly one frame in range has 2 points, 3 endomorphisms and passes the
///   generator test, and it is the Sierpinski frame.
pub fn check_claims(n_max: usize, records: &[CensusRecord], corpus: &Corpus) -> ClaimsReport {
    let mut claims = Vec::new();

    let four: Vec<&CensusRecord> = records.iter().filter(|r| r.size == 4).collect();
    claims.push(bounded_claim(
        "C1",
        "every 4-element frame has >= 4 endomorphisms",
        &four,
    ));

    let big: Vec<&CensusRecord> = records
        .iter()
        .filter(|r| r.size >= 5 && r.n_points == 2 && r.corpus_generator)
        .collect();
    claims.push(bounded_claim(
        "C2",
        "every frame with >= 5 elements, 2 points and the generator property has >= 4 endomorphisms",
        &big,
    ));

    let triple: Vec<&CensusRecord> = records
        .iter()
        .filter(|r| r.n_points == 2 && r.n_endos == 3 && r.corpus_generator)
        .collect();
    let s = standard_frame(StandardFrame::S);
    let (status, details) = if n_max < 3 {
        (ClaimStatus::VacuousFail, vec!["S not in range".to_string()])
    } else if triple.len() == 1 && iso(&triple[0].frame, &s) {
        (
            ClaimStatus::Pass,
            vec![format!("unique witness: {}", describe(&triple[0].frame))],
        )
    } else {
        let names: Vec<String> = triple.iter().map(|r| describe(&r.frame)).collect();
        (
            ClaimStatus::Fail,
            vec![format!("{} witnesses: [{}]", triple.len(), names.join(", "))],
        )
    };
    claims.push(Claim {
        id: "C3",
        statement: "exactly one frame has 2 points, 3 endomorphisms and the generator property, and it is S",
        status,
        details,
    });

    let findings = records
        .iter()
        .filter(|r| r.n_points == 2 && r.n_endos == 3 && !r.corpus_generator)
        .map(|r| {
            format!(
                "{} has 2 points and 3 endomorphisms but fails the generator test",
                describe(&r.frame)
            )
        })
        .collect();
    let two_point_three_endo = records
        .iter()
        .filter(|r| r.n_points == 2 && r.n_endos == 3)
        .map(|r| describe(&r.frame))
        .collect();

    ClaimsReport {
        n_max,
        corpus_id: corpus.id.clone(),
        corpus_size: corpus.frames.len(),
        claims,
        findings,
        two_point_three_endo,
    }
}

fn bounded_claim(id: &'static str, statement: &'static str, rows: &[&CensusRecord]) -> Claim {
    let details: Vec<String> = rows
        .iter()
        .map(|r| format!("{}: {} endomorphisms", describe(&r.frame), r.n_endos))
        .collect();
    let status = if rows.is_empty() {
        ClaimStatus::VacuousPass
    } else if rows.iter().all(|r| r.n_endos >= 4) {
        ClaimStatus::Pass
    } else {
        ClaimStatus::Fail
    };
    Claim {
        id,
        statement,
        status,
        details,
    }
}
