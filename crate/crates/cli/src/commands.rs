use serde_json::json;
use unimodal_core::combinat::Partition;
use unimodal_core::oracle;
use unimodal_core::ring::to_integer;
use unimodal_core::theorems::{
    c_value, cycle_count_table, no_k_cycle_series, order_divides_series, theorem1_series, theoremq_series,
};
use unimodal_core::verify::{self, Suite};
use unimodal_core::{Error, Result};

use crate::args::{SeriesArgs, SeriesKind, TableArgs, VerifyArgs};
use crate::report::{Cell, Report};

/// Largest degree for series indexed by partitions.
pub const PARTITION_SERIES_CAP: usize = 16;

pub fn c_values(max: usize) -> Result<Report> {
    let mut report = Report::new("c-values", vec!["n", "c"]);
    report.param("max", json!(max));
    let mut values = Vec::with_capacity(max);
    for n in 1..=max {
        let c = c_value(n)?;
        values.push(c.to_string());
        report.rows.push(vec![Cell::Count(n), Cell::Int(c)]);
    }
    report.text_lines.push(values.join(","));
    Ok(report)
}

pub fn table(args: &TableArgs) -> Result<Report> {
    let n = args.n as usize;
    let mut columns = vec!["cycle_type", "count"];
    if args.q {
        columns.push("q_coefficients");
    }
    if args.check {
        columns.push("check");
    }
    let mut report = Report::new("table", columns);
    report.param("n", json!(n));
    report.param("q", json!(args.q));
    report.param("check", json!(args.check));

    let table = cycle_count_table(n)?;
    let brute = if args.check { Some(oracle::tabulate(n)?) } else { None };
    let mut all_ok = true;
    for (alpha, entry) in table.entries() {
        let mut row = vec![Cell::Partition(alpha.clone()), Cell::Count(entry.count as usize)];
        if args.q {
            row.push(Cell::Poly(entry.q_refinement.clone()));
        }
        if let Some(brute) = &brute {
            let ok = brute.get(alpha) == Some(entry);
            all_ok &= ok;
            row.push(Cell::Status(ok));
        }
        report.rows.push(row);
    }
    report.summary.push(("total", Cell::Count(table.total() as usize)));
    if args.check {
        report.summary.push(("status", Cell::Status(all_ok)));
        report.failed = !all_ok;
    }
    Ok(report)
}

pub fn series(args: &SeriesArgs) -> Result<Report> {
    let degree = args.degree as usize;
    match (args.kind, args.k, args.m) {
        (SeriesKind::NoKCycle, Some(_), None) | (SeriesKind::Order, None, Some(_)) => {}
        (SeriesKind::Theorem1 | SeriesKind::Theoremq, None, None) => {
            if degree > PARTITION_SERIES_CAP {
                return Err(Error::InvalidArgument(format!(
                    "--degree must be at most {PARTITION_SERIES_CAP} for partition-indexed series"
                )));
            }
        }
        (SeriesKind::NoKCycle, _, _) => return Err(Error::InvalidArgument("no-k-cycle takes --k and not --m".into())),
        (SeriesKind::Order, _, _) => return Err(Error::InvalidArgument("order takes --m and not --k".into())),
        _ => return Err(Error::InvalidArgument("--k and --m apply only to no-k-cycle and order".into())),
    }
    let name = match args.kind {
        SeriesKind::Theorem1 => "theorem1",
        SeriesKind::Theoremq => "theoremq",
        SeriesKind::NoKCycle => "no-k-cycle",
        SeriesKind::Order => "order",
    };
    let (columns, sequence) = match args.kind {
        SeriesKind::Theorem1 | SeriesKind::Theoremq => (vec!["partition", "coefficient"], false),
        _ => (vec!["n", "coefficient"], true),
    };
    let mut report = Report::new("series", columns);
    report.param("kind", json!(name));
    report.param("degree", json!(degree));
    if let Some(k) = args.k {
        report.param("k", json!(k));
    }
    if let Some(m) = args.m {
        report.param("m", json!(m));
    }

    if sequence {
        let poly = match args.kind {
            SeriesKind::NoKCycle => no_k_cycle_series(args.k.unwrap_or(1) as usize, degree)?,
            _ => order_divides_series(args.m.unwrap_or(1) as usize, degree)?,
        };
        let mut values = Vec::with_capacity(degree);
        for n in 1..=degree {
            let c = to_integer(&poly.coeff(n)).ok_or_else(|| Error::NonIntegral(format!("coefficient of t^{n}")))?;
            values.push(c.to_string());
            report.rows.push(vec![Cell::Count(n), Cell::Int(c)]);
        }
        report.text_lines.push(values.join(","));
    } else if args.kind == SeriesKind::Theorem1 {
        let s = theorem1_series(degree)?;
        for (alpha, c) in s.terms() {
            report.rows.push(vec![Cell::Partition(alpha.clone()), Cell::Rational(c.clone())]);
        }
        let terms: Vec<String> = s.terms().iter().map(|(a, c)| term(&c.to_string(), a)).collect();
        report.text_lines.push(terms.join(" + "));
    } else {
        let s = theoremq_series(degree)?;
        for (alpha, c) in s.terms() {
            report.rows.push(vec![Cell::Partition(alpha.clone()), Cell::Poly(c.clone())]);
        }
        let terms: Vec<String> = s.terms().iter().map(|(a, c)| term(&format!("({})", c.display_in("q")), a)).collect();
        report.text_lines.push(terms.join(" + "));
    }
    Ok(report)
}

fn term(coeff: &str, alpha: &Partition) -> String {
    match (alpha.is_empty(), coeff) {
        (true, c) => c.trim_start_matches('(').trim_end_matches(')').to_string(),
        (false, "1" | "(1)") => format!("p{alpha}"),
        (false, c) => format!("{c}*p{alpha}"),
    }
}

/// Parses suite names; `all` or an empty list selects every suite. The
/// result is deduplicated and in canonical order.
pub fn parse_suites(names: &[String]) -> Result<Vec<Suite>> {
    if names.is_empty() || names.iter().any(|s| s == "all") {
        return Ok(Suite::ALL.to_vec());
    }
    let mut suites = names.iter().map(|s| s.parse::<Suite>()).collect::<Result<Vec<_>>>()?;
    suites.sort();
    suites.dedup();
    Ok(suites)
}

pub fn verify(args: &VerifyArgs) -> Result<Report> {
    let suites = parse_suites(&args.suites)?;
    let n_max = args.n_max as usize;
    let mut report = Report::new("verify", vec!["suite", "check", "scope", "status", "detail", "note"]);
    report.param("n_max", json!(n_max));
    report.param("suites", json!(suites.iter().map(|s| s.name()).collect::<Vec<_>>()));

    let result = verify::run(&suites, n_max)?;
    let passed = result.outcomes.iter().filter(|o| o.passed).count();
    for o in &result.outcomes {
        report.rows.push(vec![
            Cell::Text(o.suite.name().to_string()),
            Cell::Text(o.name.clone()),
            Cell::Text(o.scope.clone()),
            Cell::Status(o.passed),
            Cell::Text(o.detail.clone()),
            o.note.clone().map_or(Cell::Missing, Cell::Text),
        ]);
    }
    report.summary.push(("passed", Cell::Count(passed)));
    report.summary.push(("failed", Cell::Count(result.outcomes.len() - passed)));
    report.summary.push(("status", Cell::Status(result.all_passed())));
    report.failed = !result.all_passed();
    Ok(report)
}
