//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! run with `--nocapture` to see them.

mod common;

use std::sync::Arc;
use std::time::Instant;

use common::{brute_force_frames, brute_force_homs, brute_force_iso, downset_count, frames_up_to, Order};
use finframe::census::{
    census, check_claims, describe, enumerate_frames, standard_corpus, ClaimStatus, DEFAULT_MAX_SIZE,
};
use finframe::coproduct::{coproduct, order_by_codiagonal, DEFAULT_BUDGET};
use finframe::hom::sierpinski;
use finframe::{
    arr_s_frame, automorphisms, downset_frame, endomorphisms, enumerate_homs, iso, join_irreducibles, points,
    separating_arrow, standard_frame, Frame, FrameMap, Poset, StandardFrame,
};

type Outcome = Result<String, String>;
type Check = (usize, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn arc(name: StandardFrame) -> Arc<Frame> {
    Arc::new(standard_frame(name))
}

fn s_counts() -> Outcome {
    let s = sierpinski();
    let (e, p, a) = (endomorphisms(&s).len(), points(&s).len(), automorphisms(&s).len());
    ensure((e, p, a) == (3, 2, 1), format!("endos {e}, points {p}, autos {a}"))?;
    Ok("|Arr⟨S,S⟩| = 3, 2 points, 1 automorphism".into())
}

fn reconstruction() -> Outcome {
    let frames = frames_up_to(7);
    let mut checked = 0;
    for l in frames.iter().filter(|l| !l.is_degenerate()) {
        let r = arr_s_frame(l).map_err(|e| e.to_string())?;
        ensure(iso(&r.frame, l), format!("Arr⟨S,L⟩ ≇ L for {}", describe(l)))?;
        ensure(
            r.evaluation.after(&r.inverse).unwrap() == FrameMap::identity(l.clone()),
            "e∘z ≠ id",
        )?;
        ensure(
            r.inverse.after(&r.evaluation).unwrap() == FrameMap::identity(r.frame.clone()),
            "z∘e ≠ id",
        )?;
        checked += 1;
    }
    Ok(format!("{checked} nondegenerate frames up to 7 elements reconstructed"))
}

fn four_element_frames() -> Outcome {
    let fs = enumerate_frames(4, DEFAULT_MAX_SIZE).map_err(|e| e.to_string())?;
    ensure(fs.len() == 2, format!("{} four-element frames", fs.len()))?;
    let mut counts = Vec::new();
    for f in &fs {
        let oracle = brute_force_homs(f, f).len();
        let ours = endomorphisms(&Arc::new(f.clone())).len();
        ensure(
            ours == oracle,
            format!("{}: {ours} endomorphisms, oracle {oracle}", describe(f)),
        )?;
        ensure(ours >= 4, format!("{} has {ours} endomorphisms", describe(f)))?;
        counts.push((describe(f), ours));
    }
    counts.sort();
    ensure(
        counts == vec![("chain(4)".into(), 10), ("diamond".into(), 4)],
        format!("{counts:?}"),
    )?;
    Ok("chain(4): 10 endomorphisms, diamond: 4".into())
}

fn five_plus_and_uniqueness() -> (Outcome, Outcome) {
    let corpus = match standard_corpus(5) {
        Ok(c) => c,
        Err(e) => return (Err(e.to_string()), Err(e.to_string())),
    };
    let records = match census(7, &corpus, DEFAULT_MAX_SIZE) {
        Ok(r) => r,
        Err(e) => return (Err(e.to_string()), Err(e.to_string())),
    };
    let report = check_claims(7, &records, &corpus);

    let hyp: Vec<_> = records
        .iter()
        .filter(|r| (5..=7).contains(&r.size) && r.n_points == 2 && r.corpus_generator)
        .collect();
    let c2 = report.claim("C2").unwrap();
    let five_plus = if hyp.iter().any(|r| r.n_endos < 4) || c2.status.is_failure() {
        Err(format!("{:?}", c2.details))
    } else {
        Ok(format!(
            "{} frames of size 5-7 meet the hypothesis ({:?})",
            hyp.len(),
            c2.status
        ))
    };

    let triple: Vec<_> = records
        .iter()
        .filter(|r| r.n_points == 2 && r.n_endos == 3 && r.corpus_generator)
        .collect();
    let c3 = report.claim("C3").unwrap();
    let unique = if triple.len() == 1 && iso(&triple[0].frame, &sierpinski()) && c3.status == ClaimStatus::Pass {
        Ok(format!(
            "unique witness {} among {} frames",
            describe(&triple[0].frame),
            records.len()
        ))
    } else {
        Err(format!("{} witnesses, status {:?}", triple.len(), c3.status))
    };
    (five_plus, unique)
}

fn coproduct_oracle() -> Outcome {
    let frames = [
        arc(StandardFrame::T),
        arc(StandardFrame::S),
        arc(StandardFrame::Chain(4)),
        arc(StandardFrame::Diamond),
    ];
    for a in &frames {
        for b in &frames {
            let cp = coproduct(a, b, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            let grid = join_irreducibles(a).product(&join_irreducibles(b));
            let oracle = downset_frame(&grid).unwrap();
            ensure(cp.len() == downset_count(&grid), "size differs from downset count")?;
            ensure(iso(cp.frame(), &oracle), format!("{} + {}", describe(a), describe(b)))?;
            if a.len() == 2 {
                ensure(iso(cp.frame(), b), "T + L ≇ L")?;
            }
        }
    }
    let s_plus_s = downset_count(&Poset::chain(2).product(&Poset::chain(2)));
    ensure(s_plus_s == 6, "oracle |S+S| ≠ 6")?;
    let ss = coproduct(&frames[1], &frames[1], DEFAULT_BUDGET).unwrap();
    ensure(ss.len() == s_plus_s, format!("|S+S| = {}", ss.len()))?;
    Ok("16 pairs match the Birkhoff oracle, |S+S| = 6, T+L ≅ L".into())
}

fn tensor_relations() -> Outcome {
    let s = arc(StandardFrame::S);
    let c4 = arc(StandardFrame::Chain(4));
    let d = arc(StandardFrame::Diamond);
    let mut checked = 0usize;
    for (a, b) in [(&s, &s), (&s, &c4), (&d, &d)] {
        let cp = coproduct(a, b, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let f = cp.frame();
        for mask in 0u32..(1 << a.len()) {
            let fam: Vec<usize> = (0..a.len()).filter(|&i| mask >> i & 1 == 1).collect();
            for y in 0..b.len() {
                let lhs = cp.tensor(a.join_all(fam.iter().copied()), y);
                ensure(lhs == f.join_all(fam.iter().map(|&x| cp.tensor(x, y))), "(⋁a)⊗b")?;
                checked += 1;
            }
        }
        for mask in 0u32..(1 << b.len()) {
            let fam: Vec<usize> = (0..b.len()).filter(|&i| mask >> i & 1 == 1).collect();
            for x in 0..a.len() {
                let lhs = cp.tensor(x, b.join_all(fam.iter().copied()));
                ensure(lhs == f.join_all(fam.iter().map(|&y| cp.tensor(x, y))), "a⊗(⋁b)")?;
                checked += 1;
            }
        }
        for a1 in 0..a.len() {
            for a2 in 0..a.len() {
                for b1 in 0..b.len() {
                    for b2 in 0..b.len() {
                        let lhs = cp.tensor(a.meet(a1, a2), b.meet(b1, b2));
                        ensure(lhs == f.meet(cp.tensor(a1, b1), cp.tensor(a2, b2)), "meet of tensors")?;
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} instances in S+S, S+chain(4), diamond+diamond"))
}

fn universal_property() -> Outcome {
    let frames = frames_up_to(4);
    let mut checked = 0usize;
    for a in &frames {
        for b in &frames {
            let cp = coproduct(a, b, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            let (i, j) = cp.injections();
            for c in &frames {
                let all = enumerate_homs(cp.frame(), c);
                for f in enumerate_homs(a, c).maps() {
                    for g in enumerate_homs(b, c).maps() {
                        let h = cp.mediate(f, g).map_err(|e| e.to_string())?;
                        ensure(
                            &h.after(&i).unwrap() == f && &h.after(&j).unwrap() == g,
                            "h∘i ≠ f or h∘j ≠ g",
                        )?;
                        let matching = all
                            .maps()
                            .iter()
                            .filter(|k| &k.after(&i).unwrap() == f && &k.after(&j).unwrap() == g)
                            .count();
                        ensure(matching == 1, format!("{matching} mediating arrows"))?;
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} cocones with a unique mediating arrow"))
}

fn order_characterization() -> Outcome {
    let s = sierpinski();
    let mut checked = 0usize;
    for l in frames_up_to(6) {
        let homs = enumerate_homs(&s, &l);
        for (i, f) in homs.maps().iter().enumerate() {
            for (j, g) in homs.maps().iter().enumerate() {
                let by_codiag = order_by_codiagonal(f, g, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
                let pointwise = (0..s.len()).all(|x| l.leq(f.apply(x), g.apply(x)));
                ensure(
                    by_codiag == pointwise && pointwise == homs.leq(i, j),
                    format!("pair ({i},{j})"),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} pairs agree with the pointwise order"))
}

fn generator_separation() -> Outcome {
    let s = sierpinski();
    let corpus = frames_up_to(5);
    let mut checked = 0usize;
    for l in &corpus {
        for m in &corpus {
            let homs = enumerate_homs(l, m);
            for (i, f) in homs.maps().iter().enumerate() {
                for h in &homs.maps()[i + 1..] {
                    let n = separating_arrow(&s, f, h).map_err(|e| e.to_string())?;
                    ensure(f.after(&n).unwrap() != h.after(&n).unwrap(), "arrow does not separate")?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} unequal parallel pairs separated"))
}

fn enumeration_cross_check() -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=5 {
        let ours = enumerate_frames(n, DEFAULT_MAX_SIZE).map_err(|e| e.to_string())?;
        let naive = brute_force_frames(n);
        ensure(
            ours.len() == naive.len(),
            format!("size {n}: {} vs {}", ours.len(), naive.len()),
        )?;
        for f in &ours {
            let o = Order::of_poset(f.poset());
            ensure(
                naive.iter().filter(|t| brute_force_iso(t, &o)).count() == 1,
                format!("size {n}"),
            )?;
        }
        counts.push(ours.len());
    }
    Ok(format!("counts {counts:?} match the labelled-poset scan"))
}

fn report(n: usize, name: &str, started: Instant, outcome: Outcome) -> bool {
    let secs = started.elapsed().as_secs_f64();
    match outcome {
        Ok(msg) => {
            println!("PASS criterion {n} ({name}): {msg} [{secs:.1}s]");
            true
        }
        Err(msg) => {
            println!("FAIL criterion {n} ({name}): {msg} [{secs:.1}s]");
            false
        }
    }
}

#[test]
fn acceptance() {
    let checks: [Check; 4] = [
        (1, "S counts", s_counts),
        (2, "reconstruction", reconstruction),
        (3, "four-element frames", four_element_frames),
        (6, "coproduct oracle", coproduct_oracle),
    ];
    let later: [Check; 5] = [
        (7, "tensor relations", tensor_relations),
        (8, "universal property", universal_property),
        (9, "order characterization", order_characterization),
        (10, "generator separation", generator_separation),
        (11, "enumeration cross-check", enumeration_cross_check),
    ];
    let mut failed = Vec::new();
    for (n, name, check) in &checks[..3] {
        if !report(*n, name, Instant::now(), check()) {
            failed.push(*n);
        }
    }
    // criteria 4 and 5 share one census run
    let started = Instant::now();
    let (c4, c5) = five_plus_and_uniqueness();
    if !report(4, "five-plus endomorphism bound", started, c4) {
        failed.push(4);
    }
    if !report(5, "uniqueness of S", started, c5) {
        failed.push(5);
    }
    for (n, name, check) in checks[3..].iter().chain(&later) {
        if !report(*n, name, Instant::now(), check()) {
            failed.push(*n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
