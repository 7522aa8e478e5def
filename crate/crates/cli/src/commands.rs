//! One function per subcommand. Each returns the `results` object of the
//! report and whether a verification inside it failed.

use std::path::Path;

use hn_codes::code::{LinearCode, SupportSet};
use hn_codes::format::{parse_code, parse_matroid_source, MatroidSource};
use hn_codes::hn::{CanonicalPolygon, CodeHn};
use hn_codes::matroid::{Matroid, MATROID_LIMIT};
use hn_codes::{rr, tensor, Error, Rational};
use serde_json::{json, Value};

use crate::report::{self, check, code_info, polygon, rational, rationals, set, Input};
use crate::svg;

/// Enumeration caps, in coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub code: usize,
    pub tensor: usize,
}

pub const DEFAULT_CODE_LIMIT: usize = 20;
pub const DEFAULT_TENSOR_LIMIT: usize = 18;

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            code: DEFAULT_CODE_LIMIT,
            tensor: DEFAULT_TENSOR_LIMIT,
        }
    }
}

impl Limits {
    pub fn uniform(bits: usize) -> Limits {
        Limits { code: bits, tensor: bits }
    }
}

/// A failed command, classified by exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// A verification found a counterexample (exit 1).
    Violation(String),
    /// Unreadable or malformed input (exit 2).
    Input(String),
    /// Well-formed input violating a structural requirement (exit 3).
    Invariant(String),
    /// An enumeration cap was hit (exit 4).
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Violation(_) => 1,
            CliError::Input(_) => 2,
            CliError::Invariant(_) => 3,
            CliError::Cap(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Violation(m) | CliError::Input(m) | CliError::Invariant(m) | CliError::Cap(m) => m,
        }
    }
}

fn cap_message(required: usize, cap: usize) -> String {
    format!("enumeration over {required} coordinates exceeds the cap of {cap}; pass --max-enum {required} to raise it")
}

/// Classifies a library error raised while loading an input file.
pub fn load_error(e: Error) -> CliError {
    match e {
        Error::Parse { .. }
        | Error::NonPrime(_)
        | Error::ZeroDegree
        | Error::MissingModulus(_)
        | Error::InvalidModulus { .. }
        | Error::ReducibleModulus(_)
        | Error::FieldTooLarge(_)
        | Error::NotAnElement { .. }
        | Error::DimensionMismatch(_)
        | Error::InvalidArgument(_) => CliError::Input(e.to_string()),
        other => compute_error(other),
    }
}

/// Classifies a library error raised during a computation.
pub fn compute_error(e: Error) -> CliError {
    match e {
        Error::SizeLimitExceeded { required, cap } => CliError::Cap(cap_message(required, cap)),
        Error::LengthTooLarge(_) | Error::LatticeTooLarge { .. } => CliError::Cap(e.to_string()),
        Error::Violation(m) => CliError::Violation(m),
        other => CliError::Invariant(other.to_string()),
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> CliResult<(String, Input)> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let input = Input {
        path: path.display().to_string(),
        sha256: report::sha256_hex(&bytes),
    };
    let text = String::from_utf8(bytes).map_err(|_| CliError::Input(format!("{} is not UTF-8 text", path.display())))?;
    Ok((text, input))
}

pub fn load_code(path: &Path) -> CliResult<(LinearCode, Input)> {
    let (text, input) = read(path)?;
    let code = parse_code(&text).map_err(|e| match load_error(e) {
        CliError::Input(m) => CliError::Input(format!("{}: {m}", path.display())),
        other => other,
    })?;
    Ok((code, input))
}

fn matroid_error(e: Error) -> CliError {
    match e {
        Error::SizeLimitExceeded { required, cap } => CliError::Cap(format!(
            "matroid ground set of {required} elements exceeds the fixed cap of {cap}; no flag raises it"
        )),
        other => load_error(other),
    }
}

/// Loads a matroid file; a `from-code` file contributes both inputs.
pub fn load_matroid(path: &Path) -> CliResult<(Matroid, Vec<Input>)> {
    let (text, input) = read(path)?;
    let source = parse_matroid_source(&text).map_err(|e| match load_error(e) {
        CliError::Input(m) => CliError::Input(format!("{}: {m}", path.display())),
        other => other,
    })?;
    match source {
        MatroidSource::Bases { n, bases, .. } => Ok((Matroid::from_bases(n, &bases).map_err(matroid_error)?, vec![input])),
        MatroidSource::FromCode(p) => {
            let resolved = path.parent().map(|d| d.join(&p)).unwrap_or(p);
            let (code, code_input) = load_code(&resolved)?;
            if code.n() > MATROID_LIMIT {
                return Err(matroid_error(Error::SizeLimitExceeded {
                    required: code.n(),
                    cap: MATROID_LIMIT,
                }));
            }
            Ok((Matroid::from_code(&code).map_err(matroid_error)?, vec![input, code_input]))
        }
    }
}

/// Results of one command.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub results: Value,
    /// Some verification inside the results failed.
    pub violation: bool,
}

impl Outcome {
    fn clean(results: Value) -> Outcome {
        Outcome { results, violation: false }
    }
}

fn hn(code: &LinearCode, limit: usize) -> CliResult<CodeHn> {
    CodeHn::with_limit(code, limit).map_err(compute_error)
}

pub fn weights(code: &LinearCode, limits: Limits) -> CliResult<Outcome> {
    let h = hn(code, limits.code)?;
    Ok(Outcome::clean(json!({
        "code": code_info(code),
        "weight_hierarchy": h.hierarchy(),
        "dlp": h.dlp(),
        "minimum_distance": h.hierarchy()[1],
        "support_size": h.support_size(),
    })))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Code,
    Subset,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Code => "code",
            Side::Subset => "subset",
        }
    }
}

/// The polygon of one side with its point cloud, plus the SVG when asked.
pub fn polygon_cmd(code: &LinearCode, side: Side, limits: Limits, want_svg: bool) -> CliResult<(Outcome, Option<String>)> {
    let h = hn(code, limits.code)?;
    let n = code.n();
    let (p, points): (CanonicalPolygon, Vec<(usize, i64)>) = match side {
        Side::Code => (
            h.code_polygon(),
            h.hierarchy().iter().enumerate().map(|(i, &d)| (i, (n - d) as i64)).collect(),
        ),
        Side::Subset => (h.subset_polygon(), (0..=n).map(|j| (j, h.dlp()[n - j] as i64)).collect()),
    };
    let mut results = json!({ "code": code_info(code), "side": side.name() });
    let body = polygon(&p);
    for (k, v) in body.as_object().expect("object") {
        results[k] = v.clone();
    }
    results["points"] = json!(points.iter().map(|&(x, y)| json!([x, y])).collect::<Vec<_>>());
    results["semistable"] = json!(p.is_semistable());
    let picture = want_svg.then(|| svg::render(&p, &points, &format!("{} polygon, [{}, {}] code", side.name(), n, code.k())));
    Ok((Outcome::clean(results), picture))
}

pub fn filtration(code: &LinearCode, limits: Limits) -> CliResult<Outcome> {
    let h = hn(code, limits.code)?;
    let f = h.canonical_filtration().map_err(compute_error)?;
    let mut steps = Vec::new();
    for (alpha, s) in f.steps.iter().enumerate() {
        let slope = (alpha > 0).then(|| {
            let prev = &f.steps[alpha - 1];
            Rational::new(s.degree() - prev.degree(), (s.dim() - prev.dim()) as i64)
        });
        steps.push(json!({
            "index": alpha,
            "dim": s.dim(),
            "weight": s.weight(),
            "degree": s.degree(),
            "support": set(s.support()),
            "basis": s.basis().to_values(),
            "slope": slope.map(rational),
        }));
    }
    Ok(Outcome::clean(json!({
        "code": code_info(code),
        "length": f.len() - 1,
        "polygon": polygon(&f.polygon),
        "steps": steps,
    })))
}

pub fn semistable(code: &LinearCode, limits: Limits) -> CliResult<Outcome> {
    let h = hn(code, limits.code)?;
    let p = h.code_polygon();
    let witness = match h.destabilizing_subcode().map_err(compute_error)? {
        None => Value::Null,
        Some(s) => json!({
            "support": set(s.support()),
            "dim": s.dim(),
            "weight": s.weight(),
            "rate": rational(s.effective_rate().map_err(compute_error)?),
        }),
    };
    Ok(Outcome::clean(json!({
        "code": code_info(code),
        "semistable": h.is_semistable(),
        "stable": h.is_stable(),
        "rate": rational(code.rate()),
        "effective_rate": rational(Rational::new(code.k() as i64, h.support_size() as i64)),
        "mu_max": rational(p.mu_max().expect("k >= 1")),
        "mu_min": rational(p.mu_min().expect("k >= 1")),
        "witness": witness,
    })))
}

pub fn dual(code: &LinearCode, limits: Limits) -> CliResult<Outcome> {
    let d = code.dual().map_err(compute_error)?;
    let own = hn(code, limits.code)?;
    let other = hn(&d, limits.code)?;
    let predicted = rr::dual_polygon(code, limits.code).map_err(compute_error)?;
    let subset_check = rr::dual_polygon_check(code, limits.code).map_err(compute_error)?;
    let mut violation = !subset_check.passed();
    let slope_map = match rr::dual_slopes_check(code, limits.code) {
        Ok(rep) => {
            violation |= !rep.passed();
            let slopes = own.code_polygon().slopes();
            let mapped: Vec<Rational> = slopes
                .iter()
                .rev()
                .map(|&m| rr::dual_slope(m))
                .collect::<hn_codes::Result<_>>()
                .map_err(compute_error)?;
            json!({
                "applicable": true,
                "slopes": rationals(&slopes),
                "predicted": rationals(&mapped),
                "actual": rationals(&other.code_polygon().slopes()),
                "check": check(&rep),
            })
        }
        Err(Error::NotFullSupport(defect)) => json!({ "applicable": false, "reason": defect.to_string() }),
        Err(e) => return Err(compute_error(e)),
    };
    Ok(Outcome {
        results: json!({
            "code": code_info(code),
            "dual": code_info(&d),
            "dual_generator": d.generator().to_values(),
            "dual_code_polygon": polygon(&other.code_polygon()),
            "dual_subset_polygon": polygon(&other.subset_polygon()),
            "predicted_subset_polygon": polygon(&predicted),
            "subset_polygon_check": check(&subset_check),
            "slope_map": slope_map,
            "semistable": { "code": own.is_semistable(), "dual": other.is_semistable() },
        }),
        violation,
    })
}

/// Which subsets `rr` reports on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsets {
    One(u64),
    All,
}

fn rr_entry(j: SupportSet, n: usize, k: usize, h0: usize, h1: usize, dual_h0: usize) -> (Value, bool, bool) {
    let riemann_roch = h0 as i64 - dual_h0 as i64 == j.len() as i64 + k as i64 - n as i64;
    let serre = h1 == dual_h0;
    let v = json!({
        "J": set(j),
        "h0": h0,
        "h1": h1,
        "dual_h0_complement": dual_h0,
        "riemann_roch": riemann_roch,
        "serre": serre,
    });
    (v, riemann_roch, serre)
}

pub fn riemann_roch(code: &LinearCode, which: Subsets, limits: Limits) -> CliResult<Outcome> {
    let (n, k) = (code.n(), code.k());
    let dual = if k < n { Some(code.dual().map_err(compute_error)?) } else { None };
    let mut entries = Vec::new();
    let mut failures = 0u64;
    let mut record = |e: (Value, bool, bool)| {
        failures += u64::from(!e.1) + u64::from(!e.2);
        entries.push(e.0);
    };
    let mut checks = Vec::new();
    match which {
        Subsets::One(bits) => {
            if n < 64 && bits >> n != 0 {
                return Err(CliError::Input(format!("--J {bits} names coordinates outside 1..={n}")));
            }
            let j = SupportSet::from_bits(bits);
            let c = rr::cohomology(code, j);
            let dual_h0 = dual.as_ref().map_or(0, |d| rr::cohomology(d, j.complement(n)).h0);
            record(rr_entry(j, n, k, c.h0, c.h1, dual_h0));
        }
        Subsets::All => {
            if n > limits.code {
                return Err(compute_error(Error::SizeLimitExceeded { required: n, cap: limits.code }));
            }
            let table = code.rank_table(limits.code).map_err(compute_error)?;
            let dual_table = match &dual {
                Some(d) => d.rank_table(limits.code).map_err(compute_error)?,
                None => vec![0; 1 << n],
            };
            let full = (1usize << n) - 1;
            for (bits, &dual_rank) in dual_table.iter().enumerate() {
                let comp = full ^ bits;
                let j = SupportSet::from_bits(bits as u64);
                let r_comp = table[comp] as usize;
                let h0 = k - r_comp;
                let h1 = (n - j.len()) - r_comp;
                // dim of the dual shortened to the complement of J
                let dual_h0 = (n - k) - dual_rank as usize;
                record(rr_entry(j, n, k, h0, h1, dual_h0));
            }
            for rep in [rr::rr_check(code, limits.code), rr::serre_check(code, limits.code)] {
                checks.push(rep.map_err(compute_error)?);
            }
        }
    }
    let violation = failures > 0 || checks.iter().any(|c| !c.passed());
    Ok(Outcome {
        results: json!({
            "code": code_info(code),
            "entries": entries,
            "identity_failures": failures,
            "checks": checks.iter().map(check).collect::<Vec<_>>(),
        }),
        violation,
    })
}

pub fn tensor_cmd(a: &LinearCode, b: &LinearCode, limits: Limits) -> CliResult<Outcome> {
    let product = a.tensor(b).map_err(compute_error)?;
    if product.n() > limits.tensor {
        return Err(compute_error(Error::SizeLimitExceeded {
            required: product.n(),
            cap: limits.tensor,
        }));
    }
    let limit = limits.tensor;
    let (ha, hb, hp) = (hn(a, limit)?, hn(b, limit)?, hn(&product, limit)?);
    let star = tensor::schaathun_bounds(ha.hierarchy(), hb.hierarchy()).map_err(compute_error)?;
    let table: Vec<Value> = hp
        .hierarchy()
        .iter()
        .zip(&star)
        .enumerate()
        .map(|(r, (&d, &s))| json!({ "r": r, "d_r": d, "bound": s, "holds": d >= s }))
        .collect();
    let bound_check = tensor::schaathun_verify(a, b, limit).map_err(compute_error)?;
    let mut violation = !bound_check.passed();
    let semistability_check = if ha.is_semistable() && hb.is_semistable() {
        let rep = tensor::tensor_semistable_check(a, b, &[], limit).map_err(compute_error)?;
        violation |= !rep.passed();
        check(&rep)
    } else {
        Value::Null
    };
    let chained = (
        tensor::is_chained(a, limit).map_err(compute_error)?,
        tensor::is_chained(b, limit).map_err(compute_error)?,
    );
    let chained_check = if chained.0 && chained.1 {
        let rep = tensor::wei_yang_check(a, b, limit).map_err(compute_error)?;
        violation |= !rep.passed();
        check(&rep)
    } else {
        Value::Null
    };
    Ok(Outcome {
        results: json!({
            "a": { "code": code_info(a), "weight_hierarchy": ha.hierarchy(), "semistable": ha.is_semistable(), "chained": chained.0 },
            "b": { "code": code_info(b), "weight_hierarchy": hb.hierarchy(), "semistable": hb.is_semistable(), "chained": chained.1 },
            "product": {
                "code": code_info(&product),
                "weight_hierarchy": hp.hierarchy(),
                "semistable": hp.is_semistable(),
                "stable": hp.is_stable(),
            },
            "weights": table,
            "bound_check": check(&bound_check),
            "semistability_check": semistability_check,
            "chained_check": chained_check,
        }),
        violation,
    })
}

pub fn matroid_cmd(m: &Matroid) -> CliResult<Outcome> {
    let h = m.hierarchy();
    let filtration = m.filtration().map_err(compute_error)?;
    let graded = m.graded().map_err(compute_error)?;
    let checks = [
        m.rr_check(),
        m.wei_partition_check(),
        m.gap_check(),
        m.dual_polygon_check().map_err(compute_error)?,
    ];
    let involution = m.dual().dual() == *m;
    let violation = !involution || checks.iter().any(|c| !c.passed());
    Ok(Outcome {
        results: json!({
            "n": m.n(),
            "rank": m.rank_of_ground(),
            "weight_hierarchy": h.weights,
            "dlp": h.dlp,
            "gaps": h.gaps,
            "nongaps": h.nongaps,
            "polygon": polygon(&m.polygon()),
            "semistable": m.is_semistable(),
            "filtration": filtration.iter().map(|&s| set(s)).collect::<Vec<_>>(),
            "graded": graded.iter().map(|g| json!({ "n": g.n(), "rank": g.rank_of_ground() })).collect::<Vec<_>>(),
            "dual_involution": involution,
            "checks": checks.iter().map(check).collect::<Vec<_>>(),
        }),
        violation,
    })
}
