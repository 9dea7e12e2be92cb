use serde::Serialize;
use serde_json::{json, Value};

use super::{Cli, Command, FamilyArgs, Failure, RunConfig, ThetaArg};
use crate::congruence::catalog::{self, family_claims, FamilyParams};
use crate::congruence::scan::{ScanError, Verifier};
use crate::congruence::tables::TableCache;
use crate::dissection::{self, ThetaKind};
use crate::partitions::{check_bp_prime_relation, PartitionFunction};
use crate::series::Series;
use crate::theta::{self, EtaQuotientSpec, MatchReport, Sign, ThetaSpec};

/// Everything a command reports, before formatting.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: &'static str,
    pub params: Value,
    pub results: Vec<Value>,
    pub timing_ms: u64,
    #[serde(skip)]
    pub passed: bool,
}

type Outcome = Result<Report, Failure>;

fn report(command: &'static str, params: Value, results: Vec<Value>, passed: bool) -> Report {
    Report {
        schema_version: super::SCHEMA_VERSION,
        command,
        params,
        results,
        timing_ms: 0,
        passed,
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn row(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn check_truncation(n: u64, config: &RunConfig) -> Result<usize, Failure> {
    if n > config.max_truncation {
        return Err(Failure::Cap(format!(
            "truncation {n} is above --max-truncation {}",
            config.max_truncation
        )));
    }
    usize::try_from(n).map_err(usage)
}

fn check_count(count: u64, config: &RunConfig) -> Result<(), Failure> {
    if count == 0 {
        return Err(usage("--count must be at least 1"));
    }
    if count > config.max_count {
        return Err(Failure::Cap(format!("--count {count} is above --max-count {}", config.max_count)));
    }
    Ok(())
}

fn scan_failure(e: ScanError) -> Failure {
    match e {
        ScanError::BudgetExceeded { .. } => Failure::Cap(e.to_string()),
        ScanError::Inconsistent { .. } => Failure::Internal(e.to_string()),
        _ => usage(e),
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let config = &cli.config;
    match &cli.command {
        Command::Expand { spec, n, modulus } => expand(spec, *n, *modulus, config),
        Command::VerifyIdentity { id, n } => verify_identity(id, *n, config),
        Command::VerifyFamily(args) => verify_family(args, config),
        Command::Support { function, p } => support(*function, *p),
        Command::Search {
            function,
            modulus,
            a_max,
            b_max,
            count,
        } => search(function, *modulus, *a_max, b_max.unwrap_or(*a_max), *count, config),
        Command::Catalog { id } => catalog_listing(id.as_deref()),
    }
}

enum Expandable {
    Theta(ThetaSpec),
    Eta(EtaQuotientSpec),
}

fn parse_signed(t: &str) -> Option<(Sign, u64)> {
    let (sign, digits) = match t.as_bytes().first()? {
        b'-' => (Sign::Minus, &t[1..]),
        b'+' => (Sign::Plus, &t[1..]),
        _ => (Sign::Plus, t),
    };
    Some((sign, digits.parse().ok()?))
}

fn parse_expandable(spec: &str) -> Result<Expandable, Failure> {
    let spec = spec.trim();
    Ok(match spec {
        "psi" => Expandable::Theta(ThetaSpec::Psi),
        "f" => Expandable::Theta(ThetaSpec::FNeg),
        "euler" => Expandable::Theta(ThetaSpec::Euler),
        "jacobi-cube" => Expandable::Theta(ThetaSpec::JacobiCube),
        _ if spec.starts_with("theta:") => {
            let bad = || usage(format!("expected theta:<±r>:<±s>, got {spec:?}"));
            let mut it = spec["theta:".len()..].split(':');
            let (a, b) = (it.next().ok_or_else(bad)?, it.next().ok_or_else(bad)?);
            if it.next().is_some() {
                return Err(bad());
            }
            let (a_sign, r) = parse_signed(a).ok_or_else(bad)?;
            let (b_sign, s) = parse_signed(b).ok_or_else(bad)?;
            Expandable::Theta(ThetaSpec::general(a_sign, r, b_sign, s).map_err(usage)?)
        }
        _ if spec.contains('^') => Expandable::Eta(spec.parse().map_err(usage)?),
        _ => Expandable::Eta(spec.parse::<PartitionFunction>().map_err(usage)?.eta_quotient()),
    })
}

fn expand(spec: &str, n: u64, modulus: Option<u64>, config: &RunConfig) -> Outcome {
    let truncation = check_truncation(n, config)?;
    if modulus.is_some_and(|m| m < 2) {
        return Err(usage("--mod must be at least 2"));
    }
    let target = parse_expandable(spec)?;
    let coefficients: Vec<String> = match (&target, modulus) {
        (Expandable::Eta(eta), Some(m)) => {
            let table = TableCache::new().table(eta, m, truncation);
            (0..=truncation).map(|i| table.residue(i).to_string()).collect()
        }
        _ => {
            let m = modulus.unwrap_or(0);
            let series: Series = match &target {
                Expandable::Theta(t) => t.expand(truncation, m),
                Expandable::Eta(e) => e.expand(truncation, m),
            }
            .map_err(usage)?;
            (0..=truncation).map(|i| series.coeff(i).to_string()).collect()
        }
    };
    let shown = match &target {
        Expandable::Theta(t) => t.to_string(),
        Expandable::Eta(e) => e.to_string(),
    };
    let params = json!({ "spec": spec, "series": shown, "n": n, "mod": modulus });
    let results = coefficients
        .into_iter()
        .enumerate()
        .map(|(i, c)| json!({ "n": i, "coefficient": c }))
        .collect();
    Ok(report("expand", params, results, true))
}

fn match_row(r: &MatchReport) -> Value {
    json!({
        "identity": r.identity,
        "truncation": r.truncation,
        "passed": r.is_match(),
        "mismatch": r.mismatch,
    })
}

fn id_parts(id: &str) -> (&str, Vec<&str>) {
    let mut it = id.split(':');
    let head = it.next().unwrap_or_default();
    (head, it.collect())
}

fn verify_identity(id: &str, n: Option<u64>, config: &RunConfig) -> Outcome {
    let (head, args) = id_parts(id.trim());
    let bad_args = || usage(format!("malformed identity id {id:?}"));
    let int = |i: usize| -> Result<u64, Failure> { args.get(i).and_then(|s| s.parse().ok()).ok_or_else(bad_args) };
    let expect_args = |k: usize| if args.len() == k { Ok(()) } else { Err(bad_args()) };
    let dissect_kind = match head {
        "psi-dissect" => Some(ThetaKind::Psi),
        "f-dissect" => Some(ThetaKind::FNeg),
        _ => None,
    };
    let default_n = match (head, dissect_kind) {
        (_, Some(kind)) => {
            expect_args(1)?;
            let p = int(0)?;
            kind.validate(p).map_err(usage)?;
            (kind.minimum_truncation(p) as u64).max(600)
        }
        ("bp-prime", _) => 1000,
        _ => 500,
    };
    let n_value = n.unwrap_or(default_n);
    let truncation = check_truncation(n_value, config)?;
    let mut rows = Vec::new();
    let mut passed = true;
    let mut push = |r: &MatchReport, rows: &mut Vec<Value>| {
        passed &= r.is_match();
        rows.push(match_row(r));
    };
    match head {
        "euler-product" => {
            expect_args(0)?;
            push(&theta::verify_euler_product(truncation).map_err(usage)?, &mut rows);
        }
        "jacobi-cube" => {
            expect_args(0)?;
            push(&theta::verify_jacobi_cube(truncation).map_err(usage)?, &mut rows);
        }
        "jtp" => {
            expect_args(2)?;
            let t = int(0)?;
            let sign = args[1].parse::<i64>().ok().and_then(Sign::from_i64).ok_or_else(bad_args)?;
            if t == 0 {
                return Err(usage("jtp needs t >= 1"));
            }
            push(&theta::verify_jtp(t, sign, truncation).map_err(usage)?, &mut rows);
        }
        "quintuple" => {
            expect_args(2)?;
            let (u, v) = (int(0)?, int(1)?);
            if u == 0 || v == 0 {
                return Err(usage("quintuple needs u, v >= 1"));
            }
            push(&theta::verify_quintuple(u, v, truncation).map_err(usage)?, &mut rows);
        }
        "ramanujan5" => {
            expect_args(0)?;
            let check = theta::ramanujan5_check(truncation).map_err(usage)?;
            push(&check.identity, &mut rows);
            for c in &check.classes {
                push(c, &mut rows);
            }
        }
        "bp-prime" => {
            expect_args(1)?;
            let p = int(0)?;
            PartitionFunction::distinct_regular(p).map_err(usage)?;
            push(&check_bp_prime_relation(p, truncation).map_err(usage)?, &mut rows);
        }
        _ if dissect_kind.is_some() => {
            let kind = dissect_kind.expect("checked");
            let report = dissection::replay(kind, int(0)?, truncation).map_err(usage)?;
            let check = report.check.as_ref().expect("replayed");
            passed &= report.passed();
            let mut r = match_row(check);
            r["passed"] = Value::Bool(report.passed());
            r["classes_consistent"] = json!(report.classes_consistent);
            r["support"] = json!(report.support);
            r["special_class"] = json!(report.special_class);
            rows.push(r);
        }
        _ => return Err(usage(format!("unknown identity {id:?}"))),
    }
    let params = json!({ "id": id, "n": n_value });
    Ok(report("verify-identity", params, rows, passed))
}

fn verify_family(args: &FamilyArgs, config: &RunConfig) -> Outcome {
    check_count(args.count, config)?;
    let alphas: Vec<Option<u64>> = match args.alpha {
        Some(r) => r.values().map(Some).collect(),
        None => vec![None],
    };
    let ks: Vec<Option<u64>> = match args.k {
        Some(r) => r.values().map(Some).collect(),
        None => vec![None],
    };
    let mut claims = Vec::new();
    for &alpha in &alphas {
        for &k in &ks {
            let params = FamilyParams {
                catalog_id: args.id.clone(),
                p: args.p,
                alpha,
                index: args.index,
                primes: args.primes.clone(),
                k,
                member: args.family,
                probe_stated_range: true,
            };
            claims.extend(family_claims(&params).map_err(usage)?);
        }
    }
    let verifier = Verifier::new(config.max_truncation).with_jobs(config.jobs);
    let results = verifier.verify_all(&claims, args.count, false).map_err(scan_failure)?;
    let passed = results.iter().all(|r| r.verified());
    let params = json!({
        "id": args.id,
        "p": args.p,
        "alpha": args.alpha.map(|r| r.to_string()),
        "index": args.index,
        "primes": args.primes,
        "k": args.k.map(|r| r.to_string()),
        "family": args.family,
        "count": args.count,
    });
    Ok(report("verify-family", params, results.iter().map(row).collect(), passed))
}

fn support(function: ThetaArg, p: u64) -> Outcome {
    let kind = match function {
        ThetaArg::Psi => ThetaKind::Psi,
        ThetaArg::F => ThetaKind::FNeg,
    };
    let cert = dissection::certificate(kind, p).map_err(usage)?;
    let absent: Vec<u64> = (0..p).filter(|r| !cert.support.contains(r)).collect();
    let components: Vec<Value> = cert
        .components
        .iter()
        .map(|c| json!({ "k": c.k, "class": c.class, "special": c.special, "term": c.description }))
        .collect();
    let result = json!({
        "function": kind.to_string(),
        "prime": p,
        "support": cert.support,
        "absent": absent,
        "special_class": cert.special_class,
        "special_k": cert.special_k,
        "components": components,
    });
    let params = json!({ "function": kind.to_string(), "p": p });
    Ok(report("support", params, vec![result], true))
}

fn search(function: &str, modulus: u64, a_max: u64, b_max: u64, count: u64, config: &RunConfig) -> Outcome {
    if a_max == 0 {
        return Err(usage("--a-max must be at least 1"));
    }
    if modulus < 2 {
        return Err(usage("--mod must be at least 2"));
    }
    check_count(count, config)?;
    let f: PartitionFunction = function.parse().map_err(usage)?;
    let verifier = Verifier::new(config.max_truncation).with_jobs(config.jobs);
    let hits = verifier.search(f, modulus, a_max, b_max, count).map_err(scan_failure)?;
    let params = json!({
        "function": f.to_string(),
        "mod": modulus,
        "a_max": a_max,
        "b_max": b_max,
        "count": count,
    });
    Ok(report("search", params, hits.iter().map(row).collect(), true))
}

fn catalog_listing(id: Option<&str>) -> Outcome {
    let entries = match id {
        Some(id) => vec![catalog::entry(id).map_err(usage)?],
        None => catalog::entries(),
    };
    let params = json!({ "id": id });
    Ok(report("catalog", params, entries.iter().map(row).collect(), true))
}
