use padic_invariant::bernoulli::{
    compare_relations_with_published, generate_bernoulli_poly_relation, generate_bernoulli_relation, volkenborn_trace,
    BernoulliTable,
};
use padic_invariant::invariant::{check_finite_identity, compare_with_published, s_closed, s_direct, s_via_recurrence};
use padic_invariant::rational::{self, Rational};
use padic_invariant::series::{denominator_offset, invariant_partial_sum, valuation_trace};
use padic_invariant::{selfcheck, Error, InvariantTable, Prime, ValuationTrace};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{BernoulliCommand, Cli, Command, Failure, Format};

/// Largest k accepted anywhere; beyond about 12 the tables get slow and wide.
const K_LIMIT: usize = 30;

pub struct Output {
    pub text: String,
    pub failure: Option<Failure>,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failure: None }
    }
}

fn check_k(k: usize) -> Result<(), Failure> {
    if (1..=K_LIMIT).contains(&k) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("--k must be in 1..={K_LIMIT}, got {k}")))
    }
}

fn check_positive(name: &str, v: u64) -> Result<(), Failure> {
    if v == 0 {
        Err(Failure::Usage(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

fn parse_x(s: &str) -> Result<Rational, Failure> {
    Ok(rational::parse(s)?)
}

fn prime(p: u64) -> Result<Prime, Failure> {
    Ok(Prime::new(p)?)
}

fn no_csv(format: Format) -> Result<(), Failure> {
    if format == Format::Csv {
        Err(Failure::Usage(
            "csv output is only available for traces and number tables".into(),
        ))
    } else {
        Ok(())
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable report");
    s.push('\n');
    s
}

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    let format = cli.output.format;
    match &cli.command {
        Command::Polys { k } => polys(*k, format),
        Command::Verify { k, n_max, x } => verify(*k, *n_max, x.as_deref(), format),
        Command::Series { k, x, p, n_max } => series(*k, x, *p, *n_max, format),
        Command::Bernoulli { command } => bernoulli(command, format),
        Command::Selfcheck { json } => {
            let format = if *json { Format::Json } else { format };
            no_csv(format)?;
            let report = selfcheck::run();
            let text = match format {
                Format::Json => pretty(&report),
                _ => report.to_text(),
            };
            let failure = (!report.passed).then(|| {
                let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
                Failure::Verification(failed.join(", "))
            });
            Ok(Output { text, failure })
        }
    }
}

fn polys(k_max: usize, format: Format) -> Result<Output, Failure> {
    check_k(k_max)?;
    no_csv(format)?;
    let table = InvariantTable::build(k_max)?;
    let comparison = compare_with_published(&table)?;
    let text = match format {
        Format::Json => {
            let mut u = Vec::new();
            let mut a = Vec::new();
            for k in 1..=k_max {
                let uk = table.u(k)?;
                u.push(json!({"k": k, "text": uk.to_string(), "coefficients": uk.to_json()}));
                let aj = table.a(k - 1)?;
                a.push(json!({"index": k - 1, "text": aj.to_string(), "coefficients": aj.to_json()}));
            }
            pretty(&json!({"k_max": k_max, "U": u, "A": a, "comparison": comparison}))
        }
        _ => {
            let mut s = String::new();
            for k in 1..=k_max {
                s.push_str(&format!("U_{k}(x) = {}\n", table.u(k)?));
                s.push_str(&format!("A_{}(n,x) = {}\n", k - 1, table.a(k - 1)?));
            }
            s.push_str("\ncomparison with printed tables:\n");
            for e in &comparison {
                let status = serde_json::to_value(e.status).expect("status");
                s.push_str(&format!(
                    "{:<4} {}\n     printed:   {}\n     generated: {}\n",
                    e.quantity,
                    status.as_str().unwrap_or_default(),
                    e.paper_value,
                    e.generated_value
                ));
            }
            s
        }
    };
    Ok(Output::ok(text))
}

#[derive(Serialize)]
struct VerifyRow {
    k: usize,
    #[serde(rename = "N")]
    n: u64,
    check: &'static str,
    status: &'static str,
    detail: String,
}

fn verify(k: usize, n_max: u64, x: Option<&str>, format: Format) -> Result<Output, Failure> {
    check_k(k)?;
    check_positive("--N", n_max)?;
    no_csv(format)?;
    let x = x.map(parse_x).transpose()?;
    if x.as_ref() == Some(&rational::rat(1, 4)) {
        return Err(Error::SingularPoint.into());
    }
    let table = InvariantTable::build(k)?;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let c = check_finite_identity(&table, k, n)?;
        rows.push(VerifyRow {
            k,
            n,
            check: "symbolic",
            status: if c.holds() { "pass" } else { "fail" },
            detail: c.residual.to_string(),
        });
        if let Some(x) = &x {
            let direct = s_direct(k as u32, n, x)?;
            let rec = s_via_recurrence(k as u32, n, x)?;
            let closed = s_closed(&table, k, n, x)?;
            let ok = direct == rec && rec == closed;
            rows.push(VerifyRow {
                k,
                n,
                check: "partial_sums",
                status: if ok { "pass" } else { "fail" },
                detail: format!(
                    "direct={} recurrence={} closed={}",
                    rational::to_json_string(&direct),
                    rational::to_json_string(&rec),
                    rational::to_json_string(&closed)
                ),
            });
            // Errors out on any disagreement with the closed form.
            invariant_partial_sum(&table, k, x, n)?;
        }
    }
    let failed = rows.iter().filter(|r| r.status == "fail").count();
    let text = match format {
        Format::Json => pretty(&json!({
            "k": k,
            "N_max": n_max,
            "x": x.as_ref().map(rational::to_json_string),
            "passed": failed == 0,
            "results": rows,
        })),
        _ => {
            let mut s = String::new();
            for r in &rows {
                s.push_str(&format!("k={} N={} {} {}", r.k, r.n, r.check, r.status));
                if r.status == "fail" {
                    s.push_str(&format!(" residual={}", r.detail));
                }
                s.push('\n');
            }
            s.push_str(&format!("{} checks, {failed} failed\n", rows.len()));
            s
        }
    };
    let failure = (failed > 0).then(|| Failure::Verification(format!("{failed} checks failed")));
    Ok(Output { text, failure })
}

fn trace_text(trace: &ValuationTrace) -> String {
    let mut s = format!("{}\t{}\tvaluation\n", trace.index_label, trace.value_label);
    for e in &trace.entries {
        s.push_str(&format!(
            "{}\t{}\t{}\n",
            e.index,
            rational::to_text(&e.value),
            e.valuation
        ));
    }
    s
}

fn series(k: usize, x: &str, p: u64, n_max: u64, format: Format) -> Result<Output, Failure> {
    check_k(k)?;
    check_positive("--N", n_max)?;
    let x = parse_x(x)?;
    let p = prime(p)?;
    let table = InvariantTable::build(k)?;
    let st = valuation_trace(&table, k, &x, p, n_max)?;
    let d = denominator_offset(&table, k, p)?;
    if let Some(w) = &st.warning {
        if format == Format::Csv {
            eprintln!("warning: {w}");
        }
    }
    let text = match format {
        Format::Csv => st.trace.to_csv()?,
        Format::Json => pretty(&json!({
            "k": k,
            "point": st.point,
            "warning": st.warning,
            "denominator_offset": d,
            "trace": st.trace,
        })),
        Format::Text => {
            let mut s = format!(
                "k={k} x={} p={p} in_domain={} denominator_offset={d}\n",
                rational::to_text(&x),
                st.point.in_domain
            );
            if let Some(w) = &st.warning {
                s.push_str(&format!("warning: {w}\n"));
            }
            s.push_str(&trace_text(&st.trace));
            s
        }
    };
    Ok(Output::ok(text))
}

fn bernoulli(cmd: &BernoulliCommand, format: Format) -> Result<Output, Failure> {
    let text = match cmd {
        BernoulliCommand::Numbers { n } => {
            let b = BernoulliTable::build(*n);
            match format {
                Format::Json => pretty(&json!({
                    "n_max": n,
                    "values": b.values().iter().map(rational::to_json_string).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    let mut s = String::from("n,value\n");
                    for (i, v) in b.values().iter().enumerate() {
                        s.push_str(&format!("{i},{}\n", rational::to_json_string(v)));
                    }
                    s
                }
                Format::Text => b
                    .values()
                    .iter()
                    .enumerate()
                    .map(|(i, v)| format!("B_{i} = {}\n", rational::to_text(v)))
                    .collect(),
            }
        }
        BernoulliCommand::Poly { n } => {
            no_csv(format)?;
            let poly = BernoulliTable::build(*n).polynomial(*n)?;
            match format {
                Format::Json => pretty(&json!({"n": n, "text": poly.to_string(), "coefficients": poly.to_json()})),
                _ => format!("B_{n}(x) = {poly}\n"),
            }
        }
        BernoulliCommand::Relation { k, p, n_max } => {
            check_k(*k)?;
            no_csv(format)?;
            let table = InvariantTable::build(*k)?;
            let relation = generate_bernoulli_relation(&table, *k)?;
            let trace = match (p, n_max) {
                (Some(p), Some(n)) => {
                    check_positive("--N", *n)?;
                    Some(relation.partial_valuations(prime(*p)?, *n)?)
                }
                _ => None,
            };
            let comparison: Vec<_> = compare_relations_with_published(&table)?
                .into_iter()
                .filter(|e| e.k == *k && e.quantity == "bernoulli_relation")
                .collect();
            match format {
                Format::Json => {
                    let mut v = serde_json::to_value(&relation).expect("relation");
                    if let Value::Object(m) = &mut v {
                        m.insert("comparison".into(), serde_json::to_value(&comparison).expect("cmp"));
                        if let Some(t) = &trace {
                            m.insert("trace".into(), serde_json::to_value(t).expect("trace"));
                        }
                    }
                    pretty(&v)
                }
                _ => {
                    let mut s = format!("sum_n C(2n,n) [{}] = 0\n", relation.display());
                    for e in &comparison {
                        let status = serde_json::to_value(e.status).expect("status");
                        s.push_str(&format!(
                            "printed ({}): {}\n",
                            status.as_str().unwrap_or_default(),
                            e.paper_value
                        ));
                    }
                    if let Some(t) = &trace {
                        s.push_str(&trace_text(t));
                    }
                    s
                }
            }
        }
        BernoulliCommand::PolyRelation { k } => {
            check_k(*k)?;
            no_csv(format)?;
            let table = InvariantTable::build(*k)?;
            let relation = generate_bernoulli_poly_relation(&table, *k)?;
            relation.verify_substitution(&table, 8)?;
            match format {
                Format::Json => pretty(&relation),
                _ => format!("sum_n C(2n,n) [{}] = 0\n", relation.display()),
            }
        }
        BernoulliCommand::Volkenborn { n, p, m } => {
            check_positive("--m", u64::from(*m))?;
            let trace = volkenborn_trace(*n, prime(*p)?, *m)?;
            match format {
                Format::Json => pretty(&json!({"n": n, "trace": trace})),
                Format::Csv => trace.to_csv()?,
                Format::Text => trace_text(&trace),
            }
        }
    };
    Ok(Output::ok(text))
}
