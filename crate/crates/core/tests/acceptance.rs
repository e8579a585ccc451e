//! One PASS/FAIL line per acceptance criterion. Exits nonzero on any FAIL.

use std::collections::{BTreeMap, HashSet};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use hyperring_core::ideals::{enumerate_hyperideals, is_alpha_prime, is_prime, nilradical};
use hyperring_core::morphisms::{enumerate_endomorphisms, kernel};
use hyperring_core::ring::{validate_structure, witness_is_genuine};
use hyperring_core::verifier::{
    generate_corpus, recheck, run_claims, run_suite_with_jobs, theorem, Corpus, CorpusConfig,
    Instance, InstanceKind, Met, Status, VerdictReport, Witness,
};
use hyperring_core::{make_zn_multiplier_ring, CStatus, ElementSet, Endomorphism, HyperRing};

type Outcome = Result<String, String>;

fn axioms(corpus: &Corpus) -> Outcome {
    let start = Instant::now();
    let mut rings: Vec<Arc<HyperRing>> = corpus.rings.iter().map(|c| c.ring().clone()).collect();
    let mut seen: HashSet<String> = rings.iter().map(|r| r.name().to_string()).collect();
    for inst in &corpus.instances {
        if let InstanceKind::Product { product, .. } = inst.kind() {
            if seen.insert(product.ring().name().to_string()) {
                rings.push(product.ring().clone());
            }
        }
    }
    for r in &rings {
        validate_structure(&r.to_raw()).map_err(|e| format!("{}: {e}", r.name()))?;
    }

    let r6 = make_zn_multiplier_ring(6, &[2]).map_err(|e| e.to_string())?;
    let mut corruptions = 0;
    for a in 0..6 {
        for b in 0..6 {
            for m in 1u32..64 {
                let s: ElementSet = (0..6).filter(|x| m >> x & 1 == 1).collect();
                let mut raw = r6.to_raw();
                if raw.hyp[a][b] == s {
                    continue;
                }
                raw.hyp[a][b] = s.clone();
                match validate_structure(&raw) {
                    Err(e) if witness_is_genuine(&raw, &e) => corruptions += 1,
                    Err(e) => return Err(format!("cell ({a},{b}) := {s}: bogus witness {e}")),
                    Ok(_) => return Err(format!("cell ({a},{b}) := {s} not detected")),
                }
            }
        }
    }
    Ok(format!(
        "{} rings valid; {corruptions} single-cell corruptions of R6 detected with genuine witnesses ({:.1?})",
        rings.len(),
        start.elapsed()
    ))
}

fn collapse(corpus: &Corpus) -> Outcome {
    let mut pairs = 0;
    for ctx in &corpus.rings {
        let id = Endomorphism::identity(ctx.ring().clone());
        for i in ctx.ideals().iter().filter(|i| i.is_proper()) {
            let (a, p) = (is_alpha_prime(i, &id), is_prime(i));
            if a != p {
                return Err(format!(
                    "{} {}: α-prime {a:?}, prime {p:?}",
                    ctx.ring().name(),
                    i
                ));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (ring, proper ideal) pairs, 0 mismatches"))
}

fn radicals(corpus: &Corpus) -> Outcome {
    let (mut c_equal, mut non_c) = (0, 0);
    for ctx in &corpus.rings {
        for k in 0..ctx.ideals().len() {
            let rad = ctx.radical(k);
            let name = || format!("{} {}", ctx.ring().name(), ctx.ideal(k));
            if rad.c_status == CStatus::Yes {
                if rad.d_set != rad.radical {
                    return Err(format!(
                        "{}: D = {} but √I = {}",
                        name(),
                        rad.d_set,
                        rad.radical
                    ));
                }
                c_equal += 1;
            } else {
                if !rad.d_set.is_subset(&rad.radical) {
                    return Err(format!("{}: D ⊄ √I", name()));
                }
                non_c += 1;
            }
        }
    }
    Ok(format!(
        "{c_equal} C-hyperideals with D = √I; {non_c} others with D ⊆ √I"
    ))
}

const MUST_HOLD: [&str; 18] = [
    "T02", "T03", "T05", "T06", "T07", "T08", "T10", "T14", "T15", "T17", "T18", "T19", "T20",
    "T22", "T25", "T26", "T27", "T28",
];

fn theorem_suite(reports: &[VerdictReport], elapsed: std::time::Duration) -> Outcome {
    let mut holds: BTreeMap<&str, usize> = BTreeMap::new();
    for r in reports
        .iter()
        .filter(|r| MUST_HOLD.contains(&r.theorem.as_str()))
    {
        match r.status {
            Status::Holds => *holds.entry(r.theorem.as_str()).or_default() += 1,
            Status::HypothesesNotMet => {}
            s => return Err(format!("{} on {}: {s}", r.theorem, r.instance)),
        }
    }
    for id in ["T19", "T22", "T25", "T26"] {
        let n = holds.get(id).copied().unwrap_or(0);
        if n < 10 {
            return Err(format!("{id} holds non-vacuously only {n} times"));
        }
    }
    let counts: Vec<String> = ["T19", "T22", "T25", "T26"]
        .iter()
        .map(|id| format!("{id}={}", holds[id]))
        .collect();
    Ok(format!(
        "{} checks hold whenever hypotheses are met; non-vacuous {}; suite {:.1?}",
        MUST_HOLD.len(),
        counts.join(" "),
        elapsed
    ))
}

fn examples(claims: &[VerdictReport]) -> Outcome {
    let find = |id: &str| {
        claims
            .iter()
            .find(|r| r.theorem == id)
            .ok_or_else(|| format!("claim {id} missing"))
    };
    for id in ["ex-z12-ideal-2-alpha-prime", "ex-z12-ideal-3-alpha-prime"] {
        let r = find(id)?;
        if r.status != Status::Holds || !r.flags.iter().any(|f| f == "alpha_prime=true") {
            return Err(format!("{id}: {}", r.status));
        }
    }
    let z35 = find("ex-z35-product-not-alpha-prime")?;
    let ok = z35.status == Status::Holds
        && z35.flags.iter().any(|f| f == "alpha_prime=false")
        && z35.flags.iter().any(|f| f == "cited_pair_valid=true");
    // Pair indices are 35·a + b.
    let pair = matches!(
        z35.witness,
        Some(Witness::Derived {
            pair: Some((175, 7)),
            ..
        })
    );
    if !ok || !pair {
        return Err(format!("z35 claim: {z35:?}"));
    }
    Ok(
        "⟨2⟩, ⟨3⟩ α-prime in ℤ12{2,3}; 7ℤ×5ℤ in ℤ35 product not ᾱ-prime, witness ((5,0),(0,7))"
            .into(),
    )
}

fn falsification(corpus: &Corpus, reports: &[VerdictReport], claims: &[VerdictReport]) -> Outcome {
    let inst: &Instance = corpus
        .instances
        .iter()
        .find(|i| i.id() == "Z5{2} alpha=0")
        .ok_or("R5 zero-map instance missing")?;
    for id in ["T11", "T13"] {
        let r = reports
            .iter()
            .find(|r| r.instance == inst.id() && r.theorem == id)
            .ok_or_else(|| format!("{id} verdict missing"))?;
        let met = r.hypotheses.iter().all(|h| h.met == Met::Yes);
        let w = r
            .witness
            .as_ref()
            .ok_or_else(|| format!("{id}: no witness"))?;
        if r.status != Status::Fails || !met || r.ledger.is_none() {
            return Err(format!("{id}: {} ledger={:?}", r.status, r.ledger));
        }
        if !recheck(inst, theorem(id).unwrap(), w) {
            return Err(format!("{id}: witness {w} does not recheck"));
        }
    }
    let z8 = claims
        .iter()
        .find(|r| r.theorem == "ex-z8-scaled-3x-alpha-prime")
        .ok_or("z8 claim missing")?;
    let pair = matches!(
        z8.witness,
        Some(Witness::Derived {
            pair: Some((1, 1)),
            ..
        })
    );
    if z8.status != Status::Fails || z8.ledger.is_none() || !pair {
        return Err(format!("z8 claim: {z8:?}"));
    }
    let r8 = Arc::new(make_zn_multiplier_ring(8, &[0, 2, 4, 6]).map_err(|e| e.to_string())?);
    let in_ideal = |x: usize| x % 2 == 0;
    let genuine = r8.mul(1, 1).iter().all(in_ideal) && !in_ideal(1) && !in_ideal(3);
    if !genuine {
        return Err("z8 witness (1,1) does not re-verify".into());
    }
    Ok("T11, T13 fail on (ℤ5{2}, 0) with rechecked witnesses; ℤ8{0,2,4,6} 3x discrepancy logged at (1,1)".into())
}

fn determinism(corpus: &Corpus, first: &[VerdictReport]) -> Outcome {
    let a = serde_json::to_string(first).map_err(|e| e.to_string())?;
    let rerun = run_suite_with_jobs(&corpus.instances, &[], 4).map_err(|e| e.to_string())?;
    let b = serde_json::to_string(&rerun).map_err(|e| e.to_string())?;
    if a != b {
        return Err("reports differ between 1 and 4 threads".into());
    }
    Ok(format!(
        "{} bytes identical across 1 and 4 threads",
        a.len()
    ))
}

fn exact_counts() -> Outcome {
    let zn = |n, a: &[usize]| {
        make_zn_multiplier_ring(n, a)
            .map(Arc::new)
            .map_err(|e| e.to_string())
    };
    let r6 = zn(6, &[2])?;
    let r5 = zn(5, &[2])?;
    let got = (
        enumerate_hyperideals(&r6, 16)
            .map_err(|e| e.to_string())?
            .len(),
        enumerate_endomorphisms(&r6, 64)
            .map_err(|e| e.to_string())?
            .len(),
        enumerate_endomorphisms(&r5, 64)
            .map_err(|e| e.to_string())?
            .len(),
        nilradical(&r6),
        kernel(&Endomorphism::multiple(r6.clone(), 3).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?
            .elements()
            .clone(),
    );
    let want = (
        4,
        4,
        2,
        ElementSet::from([0, 3]),
        ElementSet::from([0, 2, 4]),
    );
    if got != want {
        return Err(format!("got {got:?}"));
    }
    Ok("ideals(R6)=4 endos(R6)=4 endos(R5)=2 Nil(R6)={0,3} Ker(3x)={0,2,4}".into())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = match generate_corpus(&CorpusConfig::default()) {
        Ok(c) => c,
        Err(e) => {
            println!("FAIL corpus generation: {e}");
            return ExitCode::FAILURE;
        }
    };
    println!(
        "corpus: {} rings, {} instances ({:.1?})",
        corpus.rings.len(),
        corpus.instances.len(),
        start.elapsed()
    );
    let t = Instant::now();
    let reports = run_suite_with_jobs(&corpus.instances, &[], 1).expect("thread pool");
    let suite_time = t.elapsed();
    let claims = run_claims(&corpus.claims);

    let results: [(&str, Outcome); 8] = [
        ("1 axiom suite", axioms(&corpus)),
        ("2 classical collapse", collapse(&corpus)),
        ("3 radical oracle", radicals(&corpus)),
        ("4 theorem suite", theorem_suite(&reports, suite_time)),
        ("5 example reproduction", examples(&claims)),
        (
            "6 falsification ledger",
            falsification(&corpus, &reports, &claims),
        ),
        ("7 determinism", determinism(&corpus, &reports)),
        ("8 exact counts", exact_counts()),
    ];
    let mut failed = false;
    for (name, outcome) in results {
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed = true;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("total {:.1?}", start.elapsed());
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
