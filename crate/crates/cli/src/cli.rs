//! Command-line front end.
//!
//! Every subcommand builds one ordered JSON document. `--format json` prints
//! it as is; `--format text` prints the same fields line by line, so the two
//! formats never drift apart. The exit code is 0 when every check passes, 1
//! when a check fails, 2 for usage, input and unsupported-input errors.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use convexval_core::decomposition::{decomposition_pieces, verify_decomposition};
use convexval_core::difference::{extract_components, FunctionHandle};
use convexval_core::group::{
    class_of, mcmullen_components, simplex_identity_as_classes, verify_homogeneity_with,
    verify_idempotence_with, Comparison, FormalSum, PanelEvaluator, PanelSignature,
};
use convexval_core::valuation::{
    ehrhart_expansion, mixed_volume_2d, named_probe, parse_vector, Panel, ValuationDescriptor, ValuationKind,
};
use convexval_core::{Error, Point, Polytope, Rational, Report, SimplexBasis};
use serde_json::{Map, Value};

use crate::format::{self, FormatError};
use crate::suite;

#[derive(Parser, Debug)]
#[command(name = "convexval", version, about = "Exact polynomial expansions of valuations on rational polytopes")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Coefficients f_0..f_d of λ ↦ v(λX + Q).
    Expand(ExpandArgs),
    /// The components e_i[X] as formal sums, with their panel signatures.
    Components(ComponentsArgs),
    /// The decomposition of (a+b)σ into the pieces A_i and B_i.
    Decompose(DecomposeArgs),
    /// Runs the seeded verification suites.
    Verify(VerifyArgs),
    /// Lattice-point counts of integer dilates and their expansion.
    Ehrhart(EhrhartArgs),
    /// The 2D mixed volume and its expansion cross-check.
    Mixed(MixedArgs),
    /// Compares two formal sums on a valuation panel.
    Compare(CompareArgs),
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    /// Polytope file.
    #[arg(long)]
    pub input: PathBuf,
    /// volume, euler, probe:NAME, support:VEC or lattice.
    #[arg(long, default_value = "volume")]
    pub valuation: String,
    /// Named probe Q added to every dilate.
    #[arg(long)]
    pub probe: Option<String>,
    /// Degree bound; defaults to dim X, or the ambient dimension with a probe.
    #[arg(long)]
    pub degree: Option<usize>,
    /// Also compare the expansion with a direct evaluation at this λ.
    #[arg(long, value_parser = parse_rational)]
    pub lambda: Option<Rational>,
}

#[derive(Args, Debug)]
pub struct ComponentsArgs {
    /// Polytope file.
    #[arg(long)]
    pub input: PathBuf,
    /// Comma-separated valuations; `default` is volume, euler and three probes.
    #[arg(long, default_value = "default")]
    pub panel: String,
    /// Also check e_i[λX] = λ^i e_i[X] on the panel.
    #[arg(long, value_parser = parse_rational)]
    pub lambda: Option<Rational>,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    /// Basis vectors `v1;v2;…` with comma-separated coordinates, or `e1,e2,…`.
    #[arg(long)]
    pub basis: String,
    #[arg(long, value_parser = parse_rational, default_value = "1")]
    pub a: Rational,
    #[arg(long, value_parser = parse_rational, default_value = "1")]
    pub b: Rational,
    /// Valuations on which the class identity is checked.
    #[arg(long, default_value = "volume,euler,probe:unit_cube")]
    pub panel: String,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Run only these criteria (repeatable); all by default.
    #[arg(long = "criterion", value_parser = clap::value_parser!(u8).range(1..=8))]
    pub criteria: Vec<u8>,
}

#[derive(Args, Debug)]
pub struct EhrhartArgs {
    /// Polytope file.
    #[arg(long)]
    pub input: PathBuf,
    /// Largest dilation factor listed.
    #[arg(long, default_value_t = 10)]
    pub max_lambda: u64,
    /// Degree bound; defaults to dim X.
    #[arg(long)]
    pub degree: Option<usize>,
}

#[derive(Args, Debug)]
pub struct MixedArgs {
    /// Two planar polytope files, P then Q.
    #[arg(long, num_args = 1, required = true)]
    pub input: Vec<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    /// Two formal-sum files (a bare polytope counts as its class).
    #[arg(long, num_args = 1, required = true)]
    pub input: Vec<PathBuf>,
    /// Comma-separated valuations; `default` is volume, euler and three probes.
    #[arg(long, default_value = "default")]
    pub panel: String,
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    text.trim().parse::<Rational>().map_err(|e| format!("`{text}`: {e}"))
}


/// Why a command did not finish with a passing report.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input { path: PathBuf, message: String },
    Kernel(Error),
    /// A computation ran but its own consistency check failed.
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Check(_) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Input { path, message } => write!(f, "{}: {message}", path.display()),
            CliError::Kernel(e) => write!(f, "{e}"),
            CliError::Check(m) => write!(f, "check failed: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ReconstructionFailure(m) => CliError::Check(m),
            e => CliError::Kernel(e),
        }
    }
}

fn usage(flag: &str, e: impl fmt::Display) -> CliError {
    CliError::Usage(format!("{flag}: {e}"))
}

/// A finished report plus notices meant for stderr.
#[derive(Debug)]
pub struct Output {
    pub document: Value,
    pub passed: bool,
    pub notices: Vec<String>,
}

impl Output {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.document).expect("plain data serializes");
                s.push('\n');
                s
            }
            OutputFormat::Text => render_text(&self.document),
        }
    }
}

/// Builder for the ordered report document.
struct Doc {
    fields: Map<String, Value>,
    passed: bool,
    notices: Vec<String>,
}

impl Doc {
    fn new(command: &str) -> Self {
        let mut fields = Map::new();
        fields.insert("command".into(), command.into());
        Doc {
            fields,
            passed: true,
            notices: Vec::new(),
        }
    }

    fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.insert(key.into(), value.into());
    }

    fn checks(&mut self, report: &Report) {
        if report.checks.is_empty() {
            return;
        }
        let mut checks = Map::new();
        for c in &report.checks {
            let status = if c.passed {
                "pass".to_string()
            } else {
                format!("FAIL ({})", c.detail)
            };
            checks.insert(c.name.clone(), status.into());
        }
        self.passed &= report.passed();
        self.fields.insert("checks".into(), Value::Object(checks));
    }

    fn finish(mut self) -> Output {
        let status = if self.passed { "pass" } else { "fail" };
        self.fields.insert("status".into(), status.into());
        Output {
            document: Value::Object(self.fields),
            passed: self.passed,
            notices: self.notices,
        }
    }
}

/// Text layout of a report document: one `key: value` line per scalar,
/// short flat objects with plain keys inline as `key: k=v k=v`, other
/// objects as an indented block, and nested coordinate lists as compact JSON.
pub fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = doc {
        render_fields(&mut out, map, 0);
    } else {
        out.push_str(&scalar_text(doc));
        out.push('\n');
    }
    out
}

const INLINE_WIDTH: usize = 100;

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn render_fields(out: &mut String, map: &Map<String, Value>, depth: usize) {
    let pad = "  ".repeat(depth);
    for (key, value) in map {
        match value {
            Value::Object(inner) if inner.values().all(is_scalar) => {
                let line: Vec<String> = inner.iter().map(|(k, v)| format!("{k}={}", scalar_text(v))).collect();
                let line = line.join(" ");
                let plain_keys = inner.keys().all(|k| !k.contains(char::is_whitespace) && !k.contains('='));
                if plain_keys && line.len() + key.len() + 2 <= INLINE_WIDTH {
                    out.push_str(&format!("{pad}{key}: {line}\n"));
                } else {
                    out.push_str(&format!("{pad}{key}:\n"));
                    render_fields(out, inner, depth + 1);
                }
            }
            Value::Object(inner) if inner.values().any(|v| matches!(v, Value::Array(a) if !a.iter().all(is_scalar))) => {
                out.push_str(&format!("{pad}{key}: {value}\n"));
            }
            Value::Object(inner) => {
                out.push_str(&format!("{pad}{key}:\n"));
                render_fields(out, inner, depth + 1);
            }
            Value::Array(items) if items.iter().all(is_scalar) => {
                let items: Vec<String> = items.iter().map(scalar_text).collect();
                out.push_str(&format!("{pad}{key}: {}\n", items.join(", ")));
            }
            Value::Array(_) => out.push_str(&format!("{pad}{key}: {value}\n")),
            scalar => out.push_str(&format!("{pad}{key}: {}\n", scalar_text(scalar))),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn input_error(path: &Path, e: FormatError) -> CliError {
    CliError::Input {
        path: path.to_path_buf(),
        message: e.to_string(),
    }
}

fn load_polytope(path: &Path, doc: &mut Doc) -> Result<Polytope, CliError> {
    let parsed = format::parse_polytope(&read(path)?).map_err(|e| input_error(path, e))?;
    if parsed.pruned > 0 {
        doc.notices.push(format!(
            "{}: pruned {} listed point(s) that are not vertices of the hull",
            path.display(),
            parsed.pruned
        ));
    }
    Ok(parsed.polytope)
}

fn load_sum(path: &Path) -> Result<FormalSum, CliError> {
    format::parse_formal_sum(&read(path)?).map_err(|e| input_error(path, e))
}

fn two_paths(paths: &[PathBuf]) -> Result<(&Path, &Path), CliError> {
    match paths {
        [p, q] => Ok((p, q)),
        _ => Err(usage("--input", format!("expected exactly two files, got {}", paths.len()))),
    }
}

fn signature_value(sig: &PanelSignature) -> Value {
    Value::Object(sig.entries.iter().map(|(k, v)| (k.clone(), v.to_string().into())).collect())
}

fn coefficients_value(coeffs: &[Rational]) -> Value {
    Value::Object(
        coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (format!("f_{k}"), c.to_string().into()))
            .collect(),
    )
}

fn panel_value(panel: &Panel) -> Value {
    Value::Array(panel.entries().iter().map(|e| e.descriptor().into()).collect())
}

/// `e1,e2` (unit vectors) or `1,0;0,1` (explicit rational vectors).
pub fn parse_basis(text: &str) -> Result<SimplexBasis, CliError> {
    let items: Vec<&str> = text.split([',', ';']).map(str::trim).collect();
    let unit_indices: Option<Vec<usize>> = items
        .iter()
        .map(|t| t.strip_prefix('e').and_then(|i| i.parse::<usize>().ok()).filter(|&i| i >= 1))
        .collect();
    let vectors: Vec<Point> = match unit_indices {
        Some(indices) => {
            let n = indices.iter().copied().max().unwrap_or(0).max(indices.len());
            indices.iter().map(|&i| Point::basis_vector(n, i - 1)).collect()
        }
        None => text
            .split(';')
            .map(|v| parse_vector(v).map_err(|e| usage("--basis", e)))
            .collect::<Result<_, _>>()?,
    };
    SimplexBasis::new(vectors).map_err(|e| usage("--basis", e))
}

fn basis_text(basis: &SimplexBasis) -> String {
    basis
        .vectors()
        .iter()
        .map(|v| v.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn execute(command: &Command) -> Result<Output, CliError> {
    match command {
        Command::Expand(args) => expand(args),
        Command::Components(args) => components(args),
        Command::Decompose(args) => decompose(args),
        Command::Verify(args) => verify(args),
        Command::Ehrhart(args) => ehrhart(args),
        Command::Mixed(args) => mixed(args),
        Command::Compare(args) => compare(args),
    }
}

/// `λ ↦ v(λX + Q)` on `ℚ≥0`.
fn dilation_value_handle(
    val: &ValuationDescriptor,
    x: &Polytope,
    probe: Option<Polytope>,
) -> FunctionHandle<Rational, Rational> {
    let (val, x) = (val.clone(), x.clone());
    FunctionHandle::fallible(move |lambda: &Rational| {
        let scaled = x.dilate(lambda)?;
        let body = match &probe {
            None => scaled,
            Some(q) => scaled.minkowski_sum(q)?,
        };
        val.evaluate(&body)
    })
}

fn at_lambda(doc: &mut Doc, lambda: &Rational, expansion: &Rational, direct: &Rational) {
    let mut report = Report::new("at lambda");
    report.check("expansion = direct evaluation", expansion == direct, format!("{expansion} vs {direct}"));
    let mut values = Map::new();
    values.insert("lambda".into(), lambda.to_string().into());
    values.insert("expansion".into(), expansion.to_string().into());
    values.insert("direct".into(), direct.to_string().into());
    doc.set("at_lambda", Value::Object(values));
    doc.checks(&report);
}

fn expand(args: &ExpandArgs) -> Result<Output, CliError> {
    let mut doc = Doc::new("expand");
    let x = load_polytope(&args.input, &mut doc)?;
    let n = x.ambient_dim();
    let val = ValuationDescriptor::parse(&args.valuation, n).map_err(|e| usage("--valuation", e))?;
    let probe = match &args.probe {
        None => None,
        Some(name) => Some(named_probe(name, n).ok_or_else(|| usage("--probe", format!("unknown probe `{name}`")))?),
    };
    doc.set("input", args.input.display().to_string());
    doc.set("valuation", val.descriptor());
    if let Some(name) = &args.probe {
        doc.set("probe", name.as_str());
    }

    if val.kind == ValuationKind::LatticeCount {
        if probe.is_some() {
            return Err(usage("--probe", "not available with the lattice valuation"));
        }
        let degree = args.degree.unwrap_or_else(|| x.dim());
        let expansion = ehrhart_expansion(&x, degree)?;
        doc.set("domain", "naturals");
        doc.set("degree", degree);
        doc.set("coefficients", coefficients_value(&expansion.coefficients()));
        if let Some(lambda) = &args.lambda {
            let k = lambda
                .to_i64()
                .and_then(|k| u64::try_from(k).ok())
                .ok_or_else(|| usage("--lambda", "the lattice valuation needs a natural number"))?;
            let direct = Rational::from_integer(x.dilate(lambda)?.lattice_count()? as i64);
            at_lambda(&mut doc, lambda, &expansion.evaluate(&k)?, &direct);
        }
        return Ok(doc.finish());
    }

    let degree = args.degree.unwrap_or_else(|| {
        let bound = if probe.is_some() { n } else { x.dim() };
        // λ ↦ h(λX) is linear even when X is a point.
        if matches!(val.kind, ValuationKind::Support(_)) {
            bound.max(1)
        } else {
            bound
        }
    });
    let f = dilation_value_handle(&val, &x, probe);
    let expansion = extract_components(&f, degree)?;
    doc.set("domain", "rationals >= 0");
    doc.set("degree", degree);
    doc.set("coefficients", coefficients_value(&expansion.coefficients()));
    if let Some(lambda) = &args.lambda {
        if lambda.is_negative() {
            return Err(usage("--lambda", "must be nonnegative"));
        }
        at_lambda(&mut doc, lambda, &expansion.evaluate(lambda)?, &f.eval(lambda)?);
    }
    Ok(doc.finish())
}

fn components(args: &ComponentsArgs) -> Result<Output, CliError> {
    let mut doc = Doc::new("components");
    let x = load_polytope(&args.input, &mut doc)?;
    let n = x.ambient_dim();
    let panel = Panel::parse(&args.panel, n).map_err(|e| usage("--panel", e))?;
    let mut eval = PanelEvaluator::new(&panel).map_err(|e| usage("--panel", e))?;
    let comps = mcmullen_components(&x)?;

    doc.set("input", args.input.display().to_string());
    doc.set("dim", x.dim());
    doc.set("panel", panel_value(&panel));
    let whole = class_of(&x);
    let x_signature = eval.signature(&whole)?;
    doc.set("signature_X", signature_value(&x_signature));

    let mut listing = Map::new();
    let mut total = FormalSum::empty();
    let mut signature_total: Option<PanelSignature> = None;
    for (i, e) in comps.iter().enumerate() {
        let sig = eval.signature(e)?;
        let mut entry = Map::new();
        entry.insert("sum".into(), e.describe_relative(&x).into());
        entry.insert("signature".into(), signature_value(&sig));
        listing.insert(format!("e_{i}"), Value::Object(entry));
        total = FormalSum::combine(&total, e, 1, 1);
        signature_total = Some(match signature_total {
            None => sig,
            Some(acc) => acc.plus(&sig),
        });
    }
    doc.set("components", Value::Object(listing));

    let mut report = Report::new("components");
    report.check("sum e_i = [X]", total == whole, total.describe_relative(&x));
    let point = class_of(&Polytope::origin(n));
    report.check("e_0 = [p]", comps[0] == point, comps[0].describe_relative(&x));
    let signature_total = signature_total.expect("at least e_0");
    report.check("sum of signatures = signature_X", signature_total == x_signature, signature_total.to_string());
    report.absorb("", verify_idempotence_with(&x, &mut eval)?);
    if let Some(lambda) = &args.lambda {
        if lambda.is_negative() {
            return Err(usage("--lambda", "must be nonnegative"));
        }
        report.absorb("", verify_homogeneity_with(&x, lambda, &mut eval)?);
    }
    doc.checks(&report);
    Ok(doc.finish())
}

fn decompose(args: &DecomposeArgs) -> Result<Output, CliError> {
    let mut doc = Doc::new("decompose");
    let basis = parse_basis(&args.basis)?;
    for (flag, s) in [("--a", &args.a), ("--b", &args.b)] {
        if !s.is_positive() {
            return Err(usage(flag, "must be positive"));
        }
    }
    let n = basis.ambient_dim();
    let panel = Panel::parse(&args.panel, n).map_err(|e| usage("--panel", e))?;
    let pieces = decomposition_pieces(&basis, &args.a, &args.b)?;
    let report = verify_decomposition(&basis, &args.a, &args.b)?;
    let identity = simplex_identity_as_classes(&basis, &args.a, &args.b, &panel).map_err(|e| usage("--panel", e))?;

    doc.set("basis", basis_text(&basis));
    doc.set("a", args.a.to_string());
    doc.set("b", args.b.to_string());
    doc.set("dim", basis.dim());
    doc.set("panel", panel_value(&panel));
    let mut listing = Map::new();
    listing.insert("whole".into(), format::polytope_value(&pieces.whole));
    for (i, p) in pieces.a_pieces.iter().enumerate() {
        listing.insert(format!("A_{i}"), format::polytope_value(p));
    }
    for (i, p) in pieces.b_pieces.iter().enumerate() {
        listing.insert(format!("B_{}", i + 1), format::polytope_value(p));
    }
    doc.set("pieces", Value::Object(listing));
    doc.set(
        "values",
        Value::Object(report.values.iter().map(|(k, v)| (k.clone(), v.clone().into())).collect()),
    );
    let mut all = Report::new("decompose");
    all.absorb("", report);
    all.absorb("identity ", identity);
    doc.checks(&all);
    Ok(doc.finish())
}

fn verify(args: &VerifyArgs) -> Result<Output, CliError> {
    let mut doc = Doc::new("verify");
    doc.set("seed", args.seed);
    let outcomes = if args.criteria.is_empty() {
        suite::run_all(args.seed)
    } else {
        let mut ids = args.criteria.clone();
        ids.sort_unstable();
        ids.dedup();
        ids.iter()
            .map(|&id| suite::run(id, args.seed).expect("range-checked by the parser"))
            .collect()
    };
    let mut results = Map::new();
    let mut report = Report::new("verify");
    for o in &outcomes {
        let key = format!("{} {}", o.id, o.name);
        let mut text = format!("{} ({} cases", if o.passed() { "pass" } else { "FAIL" }, o.cases);
        if !o.passed() {
            text.push_str(&format!(", {} failed", o.failure_count));
        }
        text.push(')');
        results.insert(key.clone(), text.into());
        for (i, f) in o.failures.iter().enumerate() {
            report.check(format!("{key} #{}", i + 1), false, f.clone());
        }
        if !o.passed() && o.failures.is_empty() {
            report.check(key, false, "failed");
        }
    }
    doc.set("results", Value::Object(results));
    doc.checks(&report);
    Ok(doc.finish())
}

fn ehrhart(args: &EhrhartArgs) -> Result<Output, CliError> {
    let mut doc = Doc::new("ehrhart");
    let x = load_polytope(&args.input, &mut doc)?;
    let degree = args.degree.unwrap_or_else(|| x.dim());
    let mut counts = Vec::new();
    for lambda in 0..=args.max_lambda {
        counts.push(x.dilate(&Rational::from_integer(lambda as i64))?.lattice_count()?);
    }
    let expansion = ehrhart_expansion(&x, degree)?;
    doc.set("input", args.input.display().to_string());
    doc.set("degree", degree);
    doc.set(
        "counts",
        Value::Object(counts.iter().enumerate().map(|(l, c)| (format!("{l}"), (*c).into())).collect()),
    );
    doc.set("coefficients", coefficients_value(&expansion.coefficients()));
    let mut report = Report::new("ehrhart");
    let mut mismatches = Vec::new();
    for (lambda, count) in counts.iter().enumerate() {
        let predicted = expansion.evaluate(&(lambda as u64))?;
        if predicted != Rational::from_integer(*count as i64) {
            mismatches.push(format!("lambda={lambda}: {predicted} vs {count}"));
        }
    }
    report.check(
        format!("expansion matches counts for lambda <= {}", args.max_lambda),
        mismatches.is_empty(),
        mismatches.join("; "),
    );
    doc.checks(&report);
    Ok(doc.finish())
}

fn mixed(args: &MixedArgs) -> Result<Output, CliError> {
    let mut doc = Doc::new("mixed");
    let (p_path, q_path) = two_paths(&args.input)?;
    let p = load_polytope(p_path, &mut doc)?;
    let q = load_polytope(q_path, &mut doc)?;
    let v_pq = mixed_volume_2d(&p, &q)?;
    let v_qp = mixed_volume_2d(&q, &p)?;
    let f = dilation_value_handle(&ValuationDescriptor::volume(), &p, Some(q.clone()));
    let expansion = extract_components(&f, 2)?;
    let coeffs = expansion.coefficients();

    doc.set("inputs", Value::Array(vec![p_path.display().to_string().into(), q_path.display().to_string().into()]));
    doc.set("mixed_volume", v_pq.to_string());
    doc.set("mixed_volume_swapped", v_qp.to_string());
    doc.set("coefficients", coefficients_value(&coeffs));
    let mut report = Report::new("mixed");
    let two_v = &v_pq * &Rational::from_integer(2);
    report.check("f_1 = 2V(P,Q)", coeffs[1] == two_v, format!("{} vs {two_v}", coeffs[1]));
    report.check("V(P,Q) = V(Q,P)", v_pq == v_qp, format!("{v_pq} vs {v_qp}"));
    let (vol_p, vol_q) = (p.volume()?, q.volume()?);
    report.check("f_2 = vol(P)", coeffs[2] == vol_p, format!("{} vs {vol_p}", coeffs[2]));
    report.check("f_0 = vol(Q)", coeffs[0] == vol_q, format!("{} vs {vol_q}", coeffs[0]));
    doc.checks(&report);
    Ok(doc.finish())
}

fn compare(args: &CompareArgs) -> Result<Output, CliError> {
    let mut doc = Doc::new("compare");
    let (left_path, right_path) = two_paths(&args.input)?;
    let left = load_sum(left_path)?;
    let right = load_sum(right_path)?;
    let dims: Vec<usize> = left.terms().chain(right.terms()).map(|(k, _)| k.polytope().ambient_dim()).collect();
    let n = dims.first().copied().unwrap_or(0);
    if let Some(&other) = dims.iter().find(|&&m| m != n) {
        return Err(usage("--input", format!("sums live in different dimensions ({n} and {other})")));
    }
    let panel = Panel::parse(&args.panel, n).map_err(|e| usage("--panel", e))?;
    let mut eval = PanelEvaluator::new(&panel).map_err(|e| usage("--panel", e))?;
    let left_sig = eval.signature(&left)?;
    let right_sig = eval.signature(&right)?;
    let verdict = eval.compare(&left, &right)?;

    doc.set("inputs", Value::Array(vec![left_path.display().to_string().into(), right_path.display().to_string().into()]));
    doc.set("panel", panel_value(&panel));
    doc.set("left", signature_value(&left_sig));
    doc.set("right", signature_value(&right_sig));
    match verdict {
        Comparison::EqualOnPanel => {
            doc.set("verdict", "equal on panel (not a proof of equality)");
        }
        Comparison::Distinguished { descriptor, left, right } => {
            doc.set("verdict", "distinguished");
            doc.set("witness", format!("{descriptor}: {left} vs {right}"));
            doc.passed = false;
        }
    }
    Ok(doc.finish())
}
