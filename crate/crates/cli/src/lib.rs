//! Command implementations behind the `lagfactor` binary.
//!
//! Every command produces an [`Outcome`]: an exit code, a human-readable
//! text block and a structured [`Report`].

use std::collections::BTreeMap;
use std::path::Path;

use lagfactor::cfs::{check_strong_cfs, verify_theorem, CfsReport};
use lagfactor::factor::{find_all_complements, find_factorization, is_factor, FactorizationOutcome, SearchOptions, Verdict};
use lagfactor::group::{element_order, parse_table_text};
use lagfactor::lemmas::{run_all, LemmaSummary};
use lagfactor::{parse_group_spec, GroupTable, Side, Subset};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_AFFIRMATIVE: i32 = 0;
pub const EXIT_INPUT_ERROR: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

/// One structured document per invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement: Option<Value>,
    pub stats: Value,
    pub version: String,
}

impl Report {
    fn new(command: &str, inputs: &[(&str, String)], verdict: &str, stats: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            verdict: verdict.to_string(),
            witness: None,
            complement: None,
            stats,
            version: VERSION.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub text: String,
    pub report: Report,
}

/// Input problems; reported on standard error with exit code 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<lagfactor::Error> for InputError {
    fn from(e: lagfactor::Error) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<Outcome, InputError>;

/// A group spec, or `@FILE` for a Cayley-table file.
pub fn load_group(arg: &str) -> Result<GroupTable, InputError> {
    if let Some(path) = arg.strip_prefix('@') {
        return load_table_file(Path::new(path));
    }
    Ok(parse_group_spec(arg)?)
}

pub fn load_table_file(path: &Path) -> Result<GroupTable, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok(parse_table_text(&text)?)
}

fn names(g: &GroupTable, s: &Subset) -> Value {
    json!(g.format_elements(s))
}

fn verdict_code(v: Verdict) -> (i32, &'static str) {
    match v {
        Verdict::Factor => (EXIT_AFFIRMATIVE, "factor"),
        Verdict::NotFactor => (EXIT_NEGATIVE, "not-factor"),
        Verdict::Unknown => (EXIT_UNKNOWN, "unknown"),
    }
}

pub fn cmd_is_factor(group: &str, subset: &str, side: Side, node_budget: Option<u64>) -> CmdResult {
    let g = load_group(group)?;
    let a = g.parse_subset(subset)?;
    if a.is_empty() {
        return Err(InputError("subset must be nonempty".into()));
    }
    let r = is_factor(&g, &a, side, SearchOptions { node_budget })?;
    let (code, verdict) = verdict_code(r.verdict());
    let stats = json!({
        "nodes_explored": r.nodes_explored,
        "exhausted": r.exhausted,
        "refusal": r.refusal,
        "subset_size": a.len(),
        "group_order": g.order(),
    });
    let mut report = Report::new(
        "is-factor",
        &[("group", group.to_string()), ("subset", g.format_subset(&a)), ("side", side.to_string())],
        verdict,
        stats,
    );
    let mut text = format!("{} is {} {side} factor of {group}", g.format_subset(&a), match r.verdict() {
        Verdict::Factor => "a",
        Verdict::NotFactor => "not a",
        Verdict::Unknown => "possibly a",
    });
    if let Some(b) = r.complement {
        report.complement = Some(names(&g, &b));
        text.push_str(&format!("\ncomplement: {}", g.format_subset(&b)));
    }
    if r.verdict() == Verdict::Unknown {
        text.push_str("\nnode budget exhausted before a decision");
    }
    text.push_str(&format!("\nnodes explored: {}", r.nodes_explored));
    Ok(Outcome { code, text, report })
}

pub fn cmd_find_complements(group: &str, subset: &str, side: Side) -> CmdResult {
    let g = load_group(group)?;
    let a = g.parse_subset(subset)?;
    let all = find_all_complements(&g, &a, side)?;
    let code = if all.is_empty() { EXIT_NEGATIVE } else { EXIT_AFFIRMATIVE };
    let mut report = Report::new(
        "find-complements",
        &[("group", group.to_string()), ("subset", g.format_subset(&a)), ("side", side.to_string())],
        if all.is_empty() { "none" } else { "found" },
        json!({ "count": all.len() }),
    );
    report.complement = Some(Value::Array(all.iter().map(|b| names(&g, b)).collect()));
    let mut text = format!("{} complement class(es) of {} ({side})", all.len(), g.format_subset(&a));
    for b in &all {
        text.push_str(&format!("\n  {}", g.format_subset(b)));
    }
    Ok(Outcome { code, text, report })
}

fn cfs_stats(g: &GroupTable, r: &CfsReport) -> Value {
    json!({
        "group": r.group,
        "order": r.order,
        "holds": r.holds,
        "census": r.census,
        "nodes_explored": r.nodes_explored,
        "witness": r.witness.map(|(s, _)| names(g, &s)),
        "sizes": r.sizes,
    })
}

pub fn cmd_check_cfs(group: &str, census: bool) -> CmdResult {
    let g = load_group(group)?;
    let r = check_strong_cfs(&g, census);
    let mut report = Report::new(
        "check-cfs",
        &[("group", group.to_string()), ("census", census.to_string())],
        if r.holds { "holds" } else { "fails" },
        cfs_stats(&g, &r),
    );
    let mut text = format!("{group}: every Lagrange subset is a factor: {}", if r.holds { "yes" } else { "no" });
    if let Some((w, res)) = r.witness {
        report.witness = Some(names(&g, &w));
        text.push_str(&format!(
            "\nfirst non-factor: {} (size {}, {} nodes)",
            g.format_subset(&w),
            w.len(),
            res.nodes_explored
        ));
    }
    for s in r.sizes.iter().filter(|s| !s.skipped) {
        text.push_str(&format!("\n  size {:>2}: tested {:>5}, non-factors {:>5}", s.size, s.tested, s.nonfactors));
    }
    Ok(Outcome { code: if r.holds { EXIT_AFFIRMATIVE } else { EXIT_NEGATIVE }, text, report })
}

pub fn cmd_verify_theorem(max_order: usize, census: bool) -> CmdResult {
    let t = verify_theorem(max_order, census)?;
    let mut groups = Vec::new();
    let mut text = String::new();
    for e in &t.entries {
        let g = parse_group_spec(&e.name)?;
        let mut s = cfs_stats(&g, &e.report);
        s["expected"] = json!(e.expected);
        groups.push(s);
        let tag = if e.report.order == 1 {
            "trivial (excluded)"
        } else if e.report.holds {
            "holds"
        } else {
            "fails"
        };
        let witness = e.report.witness.map(|(w, _)| g.format_subset(&w)).unwrap_or_default();
        text.push_str(&format!("{:<6} order {:>2}  {:<18} {witness}\n", e.name, e.report.order, tag));
    }
    text.push_str(&format!("strong CFS groups: {}\n", t.observed_positive.join(", ")));
    if t.passed() {
        text.push_str("classification matches: no mismatches");
    } else {
        text.push_str(&format!("MISMATCHES: {}", t.mismatches.join("; ")));
    }
    let stats = json!({
        "groups": groups,
        "expected_positive": t.expected_positive,
        "observed_positive": t.observed_positive,
        "trivial": t.trivial,
        "mismatches": t.mismatches,
    });
    let report = Report::new(
        "verify-theorem",
        &[("max_order", max_order.to_string()), ("census", census.to_string())],
        if t.passed() { "pass" } else { "fail" },
        stats,
    );
    Ok(Outcome { code: if t.passed() { EXIT_AFFIRMATIVE } else { EXIT_NEGATIVE }, text, report })
}

pub fn cmd_verify_lemmas() -> CmdResult {
    let results: Vec<LemmaSummary> = run_all();
    let ok = results.iter().all(LemmaSummary::ok);
    let mut text = String::new();
    for s in &results {
        text.push_str(&format!(
            "{} {:<28} {:<6} {}/{}\n",
            if s.ok() { "PASS" } else { "FAIL" },
            s.lemma,
            s.group,
            s.passed,
            s.checked
        ));
    }
    text.push_str(if ok { "all lemma checks passed" } else { "some lemma checks FAILED" });
    let report = Report::new("verify-lemmas", &[], if ok { "pass" } else { "fail" }, json!({ "suites": results }));
    Ok(Outcome { code: if ok { EXIT_AFFIRMATIVE } else { EXIT_NEGATIVE }, text, report })
}

pub fn parse_sizes(text: &str) -> Result<Vec<usize>, InputError> {
    text.split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(0) | Err(_) => Err(InputError(format!("bad part size `{}`", t.trim()))),
            Ok(m) => Ok(m),
        })
        .collect()
}

pub fn cmd_find_factorization(group: &str, sizes: &str, node_budget: Option<u64>) -> CmdResult {
    let g = load_group(group)?;
    let sizes_v = parse_sizes(sizes)?;
    let r = find_factorization(&g, &sizes_v, SearchOptions { node_budget })?;
    let inputs = [("group", group.to_string()), ("sizes", sizes.to_string())];
    let stats = json!({ "nodes_explored": r.nodes_explored });
    let (code, text, report) = match &r.outcome {
        FactorizationOutcome::Found(f) => {
            let mut report = Report::new("find-factorization", &inputs, "found", stats);
            report.complement = Some(Value::Array(f.parts.iter().map(|p| names(&g, p)).collect()));
            let parts: Vec<String> = f.parts.iter().map(|p| g.format_subset(p)).collect();
            (EXIT_AFFIRMATIVE, format!("{group} = {}", parts.join(" · ")), report)
        }
        FactorizationOutcome::Absent => (
            EXIT_NEGATIVE,
            format!("no ({sizes})-factorization of {group} exists (search exhausted)"),
            Report::new("find-factorization", &inputs, "absent", stats),
        ),
        FactorizationOutcome::Unknown => (
            EXIT_UNKNOWN,
            "node budget exhausted before a decision".to_string(),
            Report::new("find-factorization", &inputs, "unknown", stats),
        ),
    };
    Ok(Outcome { code, text: format!("{text}\nnodes explored: {}", r.nodes_explored), report })
}

fn info(g: &GroupTable, label: &str, command: &str) -> Outcome {
    let orders: Vec<usize> = g.elements().map(|x| element_order(g, x)).collect();
    let mut text = format!("{label}: order {}, {}\n", g.order(), if g.is_abelian() { "abelian" } else { "non-abelian" });
    for x in g.elements() {
        text.push_str(&format!("  {:>3} {:<12} order {}\n", x, g.name(x), orders[x]));
    }
    text.push_str(&g.to_table_text());
    let stats = json!({
        "order": g.order(),
        "abelian": g.is_abelian(),
        "names": g.names(),
        "element_orders": orders,
        "table": g.rows(),
    });
    Outcome { code: EXIT_AFFIRMATIVE, text, report: Report::new(command, &[("group", label.to_string())], "ok", stats) }
}

pub fn cmd_group_info(group: &str) -> CmdResult {
    let g = load_group(group)?;
    Ok(info(&g, group, "group-info"))
}

pub fn cmd_from_table(path: &Path) -> CmdResult {
    let g = load_table_file(path)?;
    Ok(info(&g, &path.display().to_string(), "from-table"))
}
