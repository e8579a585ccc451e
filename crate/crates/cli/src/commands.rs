use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};

use hyperring_core::constructions::{product_ring, quotient_ring, DEFAULT_PRODUCT_CAP};
use hyperring_core::ideals::{
    alpha_nilradical, alpha_prime_witness, alpha_radical, c_witness, enumerate_hyperideals,
    is_hyperideal, maximal_witness, nilradical, primary_witness, prime_radical_in, prime_witness,
    zero_divisors,
};
use hyperring_core::morphisms::{enumerate_endomorphisms, kernel};
use hyperring_core::ring::{validate_structure, witness_is_genuine, RawRing};
use hyperring_core::verifier::{
    generate_corpus, run_claims, run_suite_with_jobs, theorem, Corpus, CorpusConfig, Status,
    VerdictReport,
};
use hyperring_core::{ElementSet, Error, HyperIdeal, HyperRing};

use crate::output::{render_json, render_text};
use crate::spec::{parse_corpus, parse_endo, parse_ideal, parse_ring, RingSpec};
use crate::{CliError, Common, CorpusArgs, Outcome};

const DEFAULT_CAP: usize = 64;

fn render(json: bool, v: &Value) -> String {
    if json {
        render_json(v)
    } else {
        render_text(v)
    }
}

fn cap(common: &Common) -> usize {
    common.max_order.unwrap_or(DEFAULT_CAP)
}

fn load(arg: &str) -> Result<Arc<HyperRing>, CliError> {
    Ok(Arc::new(parse_ring(arg)?.build()?))
}

fn structure_record(ring: &HyperRing, valid: Option<bool>) -> serde_json::Map<String, Value> {
    let p = ring.structure_properties();
    let strong = ring
        .strong_distributivity_witness()
        .map(|(a, b, c, side)| json!({"a": a, "b": b, "c": c, "side": side}));
    let mut m = serde_json::Map::new();
    m.insert("ring".into(), json!(ring.name()));
    m.insert("order".into(), json!(ring.order()));
    if let Some(v) = valid {
        m.insert("valid".into(), json!(v));
    }
    m.insert("commutative".into(), json!(p.commutative));
    m.insert(
        "strongly_distributive".into(),
        json!(p.strongly_distributive),
    );
    m.insert("distributivity_witness".into(), json!(strong));
    m.insert("zero_absorbing".into(), json!(p.zero_absorbing));
    m.insert("identity".into(), json!(p.identity));
    m.insert("flags".into(), json!(ring.flags()));
    m
}

fn error_witness(e: &Error) -> Value {
    match *e {
        Error::EmptyProduct(a, b) | Error::SignLawViolated(a, b) => json!([a, b]),
        Error::NotAssociative(a, b, c) => json!([a, b, c]),
        Error::NotDistributive(a, b, c, side) => json!([a, b, c, side]),
        Error::IdentityClaimFalse(e) => json!([e]),
        _ => Value::Null,
    }
}

pub fn validate(common: &Common, emit: bool) -> Result<Outcome, CliError> {
    let raw = match parse_ring(&common.ring)? {
        RingSpec::Table {
            name,
            order,
            zero,
            add,
            neg,
            hyp,
            identity,
        } => RawRing {
            name,
            order,
            zero,
            add,
            neg,
            hyp,
            identity,
        },
        zn => zn.build()?.to_raw(),
    };
    match validate_structure(&raw) {
        Ok(ring) if emit => Ok(Outcome::ok(RingSpec::table(&ring).emit())),
        Ok(ring) => {
            let m = structure_record(&ring, Some(true));
            Ok(Outcome::ok(render(common.json, &Value::Object(m))))
        }
        Err(Error::Malformed(msg)) => Err(CliError::Parse(msg)),
        Err(e) => {
            let v = json!({
                "ring": raw.name,
                "valid": false,
                "error": e.to_string(),
                "witness": error_witness(&e),
                "witness_genuine": witness_is_genuine(&raw, &e),
            });
            Ok(Outcome {
                stdout: render(common.json, &v),
                stderr: String::new(),
                code: 1,
            })
        }
    }
}

pub fn props(common: &Common) -> Result<String, CliError> {
    let ring = load(&common.ring)?;
    let mut m = structure_record(&ring, None);
    m.insert("zero_divisors".into(), json!(zero_divisors(&ring)));
    m.insert("nilradical".into(), json!(nilradical(&ring)));
    let units = match ring.identity() {
        Some(_) => {
            let mut u = Vec::new();
            for x in ring.elements() {
                if ring.is_unit(x)? {
                    u.push(x);
                }
            }
            json!(u)
        }
        None => Value::Null,
    };
    m.insert("units".into(), units);
    let ideals: Vec<ElementSet> = enumerate_hyperideals(&ring, cap(common))?
        .into_iter()
        .map(|i| i.elements().clone())
        .collect();
    m.insert("hyperideals".into(), json!(ideals));
    let endos = enumerate_endomorphisms(&ring, cap(common))?;
    m.insert("endomorphisms".into(), json!(endos.len()));
    Ok(render(common.json, &Value::Object(m)))
}

fn load_ideal(ring: &Arc<HyperRing>, arg: &str) -> Result<HyperIdeal, CliError> {
    let set = parse_ideal(arg)?.build(ring)?;
    Ok(HyperIdeal::new(ring.clone(), set)?)
}

pub fn classify(common: &Common, ideal: &str, alpha: Option<&str>) -> Result<String, CliError> {
    let ring = load(&common.ring)?;
    let set = parse_ideal(ideal)?.build(&ring)?;
    let alpha = parse_endo(alpha.unwrap_or("id"))?.build(&ring)?;
    let mut m = serde_json::Map::new();
    m.insert("ring".into(), json!(ring.name()));
    m.insert("ideal".into(), json!(set));
    m.insert("alpha".into(), json!(alpha.map()));
    let hyper = is_hyperideal(&ring, &set);
    m.insert("hyperideal".into(), json!(hyper));
    let keys = [
        "proper",
        "c_status",
        "c_witness",
        "prime",
        "prime_witness",
        "primary",
        "primary_witness",
        "maximal",
        "maximal_witness",
        "alpha_prime",
        "alpha_prime_witness",
    ];
    if !hyper {
        for k in keys {
            m.insert(k.into(), Value::Null);
        }
        return Ok(render(common.json, &Value::Object(m)));
    }
    let i = HyperIdeal::new(ring.clone(), set)?;
    m.insert("proper".into(), json!(i.is_proper()));
    m.insert("c_status".into(), json!(i.c_status().to_string()));
    m.insert("c_witness".into(), json!(c_witness(&i)));
    if !i.is_proper() {
        for k in &keys[3..] {
            m.insert((*k).into(), Value::Null);
        }
        return Ok(render(common.json, &Value::Object(m)));
    }
    let all = enumerate_hyperideals(&ring, cap(common))?;
    let pw = prime_witness(&i)?;
    m.insert("prime".into(), json!(pw.is_none()));
    m.insert("prime_witness".into(), json!(pw));
    // The zero ideal is excluded by definition and has no witness pair.
    let qw = if i.elements() == &ring.zero_set() {
        m.insert("primary".into(), json!(false));
        None
    } else {
        let qw = primary_witness(&i, &all, false)?;
        m.insert("primary".into(), json!(qw.is_none()));
        qw
    };
    m.insert("primary_witness".into(), json!(qw));
    let mw = maximal_witness(&i, &all)?;
    m.insert("maximal".into(), json!(mw.is_none()));
    m.insert("maximal_witness".into(), json!(mw.map(|j| j.elements())));
    let aw = alpha_prime_witness(&i, &alpha)?;
    m.insert("alpha_prime".into(), json!(aw.is_none()));
    m.insert("alpha_prime_witness".into(), json!(aw));
    Ok(render(common.json, &Value::Object(m)))
}

pub fn radical(common: &Common, ideal: &str) -> Result<String, CliError> {
    let ring = load(&common.ring)?;
    let i = load_ideal(&ring, ideal)?;
    let all = enumerate_hyperideals(&ring, cap(common))?;
    let r = prime_radical_in(&i, &all);
    let v = json!({
        "ring": ring.name(),
        "ideal": i.elements(),
        "radical": r.radical,
        "d_set": r.d_set,
        "c_status": r.c_status.to_string(),
        "forms_agree": r.forms_agree(),
    });
    Ok(render(common.json, &v))
}

pub fn alpharadical(common: &Common, ideal: &str, alpha: &str) -> Result<String, CliError> {
    let ring = load(&common.ring)?;
    let set = parse_ideal(ideal)?.build(&ring)?;
    let alpha = parse_endo(alpha)?.build(&ring)?;
    let v = json!({
        "ring": ring.name(),
        "ideal": set,
        "alpha": alpha.map(),
        "alpha_radical": alpha_radical(&ring, &set, &alpha)?,
    });
    Ok(render(common.json, &v))
}

pub fn nil(common: &Common, alpha: Option<&str>) -> Result<String, CliError> {
    let ring = load(&common.ring)?;
    let v = match alpha {
        None => json!({"ring": ring.name(), "nilradical": nilradical(&ring)}),
        Some(a) => {
            let alpha = parse_endo(a)?.build(&ring)?;
            json!({
                "ring": ring.name(),
                "alpha": alpha.map(),
                "alpha_nilradical": alpha_nilradical(&ring, &alpha),
            })
        }
    };
    Ok(render(common.json, &v))
}

pub fn quotient(common: &Common, ideal: &str) -> Result<String, CliError> {
    let ring = load(&common.ring)?;
    let i = load_ideal(&ring, ideal)?;
    let q = quotient_ring(&i)?;
    Ok(RingSpec::table(q.ring()).emit())
}

pub fn product(common: &Common, other: &str) -> Result<String, CliError> {
    let a = load(&common.ring)?;
    let b = load(other)?;
    let p = product_ring(&a, &b, common.max_order.unwrap_or(DEFAULT_PRODUCT_CAP))?;
    Ok(RingSpec::table(p.ring()).emit())
}

pub fn endos(common: &Common) -> Result<String, CliError> {
    let ring = load(&common.ring)?;
    let mut maps = Vec::new();
    for e in enumerate_endomorphisms(&ring, cap(common))? {
        maps.push(json!({
            "image": e.map(),
            "kernel": kernel(&e)?.elements(),
            "injective": e.is_injective(),
            "surjective": e.is_surjective(),
        }));
    }
    let v = json!({"ring": ring.name(), "count": maps.len(), "endomorphisms": maps});
    Ok(render(common.json, &v))
}

fn load_corpus(args: &CorpusArgs) -> Result<Corpus, CliError> {
    let mut config = CorpusConfig::default();
    if let Some(n) = args.max_order {
        config.ideal_cap = n;
    }
    let arg = args.corpus.as_str();
    if arg == "default" {
        return Ok(generate_corpus(&config)?);
    }
    let spec = parse_corpus(arg)?;
    let rings = spec
        .rings
        .iter()
        .map(RingSpec::build)
        .collect::<Result<Vec<_>, _>>()?;
    let products = spec
        .products
        .iter()
        .map(|(a, b)| Ok((a.build()?, b.build()?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(Corpus::from_rings(rings, products, &config)?)
}

fn summary(reports: &[VerdictReport]) -> String {
    let mut per: BTreeMap<&str, [usize; 5]> = BTreeMap::new();
    for r in reports {
        let row = per.entry(r.theorem.as_str()).or_default();
        let k = match r.status {
            Status::Holds => 0,
            Status::Fails if r.ledger.is_some() => 2,
            Status::Fails => 1,
            Status::HypothesesNotMet => 3,
            Status::Undecided => 4,
        };
        row[k] += 1;
    }
    let mut out = format!("{} verdicts\n", reports.len());
    for (id, [h, f, l, n, u]) in &per {
        out.push_str(&format!(
            "{id}: holds={h} fails={f} ledgered={l} hypotheses_not_met={n} undecided={u}\n"
        ));
    }
    for r in reports.iter().filter(|r| r.is_unexpected_failure()) {
        out.push_str(&format!(
            "unexpected failure: {} on {}\n",
            r.theorem, r.instance
        ));
    }
    out
}

fn strict_code(reports: &[VerdictReport], strict: bool) -> u8 {
    if strict && reports.iter().any(VerdictReport::is_unexpected_failure) {
        3
    } else {
        0
    }
}

pub fn verify(
    args: &CorpusArgs,
    theorems: &[String],
    report: Option<&Path>,
    strict: bool,
    jobs: Option<usize>,
) -> Result<Outcome, CliError> {
    for id in theorems {
        if theorem(id).is_none() {
            return Err(CliError::Parse(format!("unknown theorem {id:?}")));
        }
    }
    let corpus = load_corpus(args)?;
    let selection: Vec<&str> = theorems.iter().map(String::as_str).collect();
    let jobs = jobs.unwrap_or_else(|| {
        std::thread::available_parallelism().map_or(1, std::num::NonZeroUsize::get)
    });
    let mut reports = run_suite_with_jobs(&corpus.instances, &selection, jobs)?;
    if theorems.is_empty() {
        reports.extend(run_claims(&corpus.claims));
    }
    let doc = render_json(&serde_json::to_value(&reports).expect("reports serialize"));
    let text = summary(&reports);
    let code = strict_code(&reports, strict);
    Ok(match report {
        Some(path) => {
            fs::write(path, doc)
                .map_err(|e| CliError::Semantic(format!("{}: {e}", path.display())))?;
            Outcome {
                stdout: text,
                stderr: String::new(),
                code,
            }
        }
        None => Outcome {
            stdout: doc,
            stderr: text,
            code,
        },
    })
}

pub fn corpus(args: &CorpusArgs) -> Result<String, CliError> {
    let corpus = load_corpus(args)?;
    let mut kinds: BTreeMap<String, usize> = BTreeMap::new();
    for i in &corpus.instances {
        *kinds.entry(i.signature().to_string()).or_default() += 1;
    }
    let v = json!({
        "rings": corpus.rings.len(),
        "instances": corpus.instances.len(),
        "by_signature": kinds,
        "claims": corpus.claims.iter().map(|c| c.id).collect::<Vec<_>>(),
    });
    Ok(render(args.json, &v))
}
