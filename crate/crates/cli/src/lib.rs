//! Dispatch for the `gforge` binary. Each command produces one JSON
//! artifact holding its inputs, the run configuration, crate versions and
//! the result. Artifacts are deterministic unless `--timestamp` is given.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gforge::arith::parse::{parse_elem, parse_param, parse_poly};
use gforge::arith::{FactorConfig, FieldSpec, UniPoly};
use gforge::construct::cert::{BbCertificateDoc, GroupCertificateDoc};
use gforge::construct::{
    bb_construct, lp_trinomial, split_trinomial, verify_bb_certificate, BbBudgets, ConstructError,
};
use gforge::galois::{
    certify_sn, cubic_galois_group, frobenius_decomposition, specialize_at_with, stem_field_root_count,
    GroupCertificate,
};
use gforge::skew::{
    center_test, left_divide, normalizer_quotient, ore_witness, parse_skew, right_divide, AnySkewRing, DivisionRing,
    Perm, PermGroup, SkewRing,
};
use serde_json::{json, Value};

pub const DEFAULT_SEED: u64 = 0x5EED;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "gforge",
    version,
    about = "Exact constructions and certificates for S_n extensions and skew polynomial rings"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Base field: Q or GF(q).
    #[arg(long, global = true, default_value = "Q")]
    pub field: String,
    /// Seed for randomized factoring, decimal or 0x-hex.
    #[arg(long, global = true, env = "GFORGE_SEED", value_parser = parse_seed, default_value = "0x5EED")]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
    pub prime_budget: u64,
    #[arg(long, global = true, default_value_t = 2000, value_parser = positive_usize)]
    pub attempt_budget: usize,
    #[arg(long, global = true, default_value_t = gforge::arith::DEFAULT_DEGREE_CAP, value_parser = positive_usize)]
    pub degree_cap: usize,
    /// Write the artifact here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Record the wall-clock time under `metadata`.
    #[arg(long, global = true)]
    pub timestamp: bool,
}

/// Polynomial arguments accept either the text itself or a path to a file
/// containing it.
#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Build a regular S_n family over Q(T) whose fiber at T = 0 is the stem.
    BbConstruct {
        #[arg(long)]
        stem: String,
        #[arg(long)]
        n: usize,
        /// Use this S_n polynomial at the third node instead of searching.
        #[arg(long)]
        fiber_a: Option<String>,
    },
    /// Re-check a certificate written by bb-construct.
    Verify {
        #[arg(long)]
        cert: PathBuf,
    },
    /// Factor the fiber A(t0, Y) of a family A(T, Y).
    Specialize {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        at: String,
    },
    /// Try to certify that a polynomial over Q has Galois group S_n.
    CertifySn {
        #[arg(long)]
        poly: String,
        /// Overrides --prime-budget.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Galois group of a separable cubic.
    CubicGroup {
        #[arg(long)]
        poly: String,
    },
    #[command(subcommand)]
    Trinomial(TrinomialCommand),
    /// Arithmetic in H[T, sigma].
    Skew {
        op: SkewOp,
        /// Ring descriptor such as "GF(4);frob" or "H;conj(i)".
        #[arg(long)]
        ring: String,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: Option<String>,
        /// For div: solve lhs = rhs*q + r instead of lhs = q*rhs + r.
        #[arg(long)]
        left: bool,
    },
    /// N_G(K)/K for permutation groups given by generators in cycle notation.
    Normquot {
        #[arg(long)]
        degree: usize,
        /// Generators of G; the full symmetric group when omitted.
        #[arg(long = "group")]
        group: Vec<String>,
        /// Generators of K; trivial when omitted.
        #[arg(long = "sub")]
        sub: Vec<String>,
        /// Compare with the number of roots of this stem in its own stem field.
        #[arg(long)]
        stem: Option<String>,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum TrinomialCommand {
    /// The family Y^3 + (T - x)Y + (T - x).
    Lp {
        #[arg(long)]
        x: String,
    },
    /// A split trinomial Y^3 + aY + a.
    Split,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkewOp {
    Mul,
    Div,
    Ore,
    Center,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed {s:?}: {e}"))
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    pub prime_budget: u64,
    pub attempt_budget: usize,
    pub degree_cap: usize,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub field_spec: String,
    pub budgets: Budgets,
    pub seed: u64,
    pub output_path: Option<PathBuf>,
    pub timestamp: bool,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let g = cli.global;
        RunConfig {
            command: cli.command,
            field_spec: g.field,
            budgets: Budgets {
                prime_budget: g.prime_budget,
                attempt_budget: g.attempt_budget,
                degree_cap: g.degree_cap,
            },
            seed: g.seed,
            output_path: g.out,
            timestamp: g.timestamp,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Inconclusive,
    Failed,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => EXIT_OK,
            Status::Inconclusive => EXIT_INCONCLUSIVE,
            Status::Failed => EXIT_ERROR,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Inconclusive => "inconclusive",
            Status::Failed => "failed",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: Status,
    pub artifact: Value,
}

/// Read an argument that is either literal text or the path of a file.
fn load(arg: &str) -> Result<String> {
    let p = Path::new(arg);
    if p.is_file() {
        let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        Ok(text.trim().to_string())
    } else {
        Ok(arg.to_string())
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::BbConstruct { .. } => "bb-construct",
        Command::Verify { .. } => "verify",
        Command::Specialize { .. } => "specialize",
        Command::CertifySn { .. } => "certify-sn",
        Command::CubicGroup { .. } => "cubic-group",
        Command::Trinomial(TrinomialCommand::Lp { .. }) => "trinomial lp",
        Command::Trinomial(TrinomialCommand::Split) => "trinomial split",
        Command::Skew { .. } => "skew",
        Command::Normquot { .. } => "normquot",
    }
}

fn group_status(c: &GroupCertificate) -> Status {
    if c.is_inconclusive() {
        Status::Inconclusive
    } else {
        Status::Ok
    }
}

fn group_doc(c: &GroupCertificate) -> Value {
    serde_json::to_value(GroupCertificateDoc::from_cert(c)).expect("plain data serializes")
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let field: FieldSpec = cfg.field_spec.parse().with_context(|| format!("field {:?}", cfg.field_spec))?;
    let (inputs, status, result) = dispatch(cfg, &field)?;
    let mut artifact = json!({
        "command": command_name(&cfg.command),
        "inputs": inputs,
        "config": {
            "field": field.to_string(),
            "seed": cfg.seed,
            "budgets": {
                "prime_budget": cfg.budgets.prime_budget,
                "attempt_budget": cfg.budgets.attempt_budget,
                "degree_cap": cfg.budgets.degree_cap,
            },
        },
        "versions": {
            "gforge": gforge::VERSION,
            "gforge-cli": env!("CARGO_PKG_VERSION"),
        },
        "status": status.as_str(),
        "result": result,
    });
    if cfg.timestamp {
        let secs = std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        artifact["metadata"] = json!({ "unix_time": secs });
    }
    Ok(Outcome { status, artifact })
}

fn dispatch(cfg: &RunConfig, field: &FieldSpec) -> Result<(Value, Status, Value)> {
    let b = cfg.budgets;
    match &cfg.command {
        Command::BbConstruct { stem, n, fiber_a } => {
            let stem_text = load(stem)?;
            let stem_poly = parse_poly(field, &stem_text).context("stem")?;
            let fa = match fiber_a {
                Some(s) => Some(parse_poly(field, &load(s)?).context("fiber at a")?),
                None => None,
            };
            let budgets = BbBudgets { prime_budget: b.prime_budget, attempt_budget: b.attempt_budget };
            let inputs = json!({ "stem": stem_text, "n": n, "fiber_a": fa.as_ref().map(UniPoly::to_string) });
            match bb_construct(&stem_poly, *n, &budgets, fa.as_ref()) {
                Ok(cert) => {
                    let doc = serde_json::to_value(BbCertificateDoc::from_cert(&cert))?;
                    Ok((inputs, Status::Ok, doc))
                }
                Err(e @ ConstructError::SearchBudgetExhausted { .. }) => {
                    Ok((inputs, Status::Inconclusive, json!({ "reason": e.to_string() })))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Verify { cert } => {
            let text = std::fs::read_to_string(cert).with_context(|| format!("reading {}", cert.display()))?;
            let value: Value = serde_json::from_str(&text).context("certificate is not JSON")?;
            let body = match value.get("result") {
                Some(r) if value.get("command").and_then(Value::as_str) == Some("bb-construct") => r.clone(),
                _ => value,
            };
            let doc: BbCertificateDoc = serde_json::from_value(body).context("not a bb-construct certificate")?;
            let c = doc.to_cert()?;
            let v = verify_bb_certificate(&c);
            let status = if v.ok { Status::Ok } else { Status::Failed };
            Ok((json!({ "cert": cert.display().to_string() }), status, json!({ "ok": v.ok, "reasons": v.reasons })))
        }
        Command::Specialize { poly, at } => {
            let text = load(poly)?;
            let a = parse_param(field, &text).context("family")?;
            let t0 = parse_elem(field, at).context("point")?;
            let fc = FactorConfig { seed: cfg.seed, degree_cap: b.degree_cap };
            let rep = specialize_at_with(&a, &t0, &fc)?;
            let decomposition =
                if field.is_finite() && rep.unramified { Some(frobenius_decomposition(&a, &t0)?) } else { None };
            let fibers: Vec<Value> = rep
                .fibers
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    let mut v = json!({
                        "factor": f.factor.to_string(),
                        "degree": f.residue_degree,
                        "multiplicity": f.multiplicity,
                    });
                    if let Some(d) = &decomposition {
                        v["decomposition_order"] = json!(d[i].decomposition_order);
                    }
                    v
                })
                .collect();
            let mut result = json!({
                "t0": field.format_elem(&t0),
                "fiber": a.eval_t(&t0).to_string(),
                "unramified": rep.unramified,
                "degree_sum_ok": rep.degree_sum_ok,
                "fibers": fibers,
            });
            if rep.unramified {
                if field.is_finite() {
                    // over a finite field the fiber's group is generated by Frobenius
                    let degrees: Vec<usize> = rep.fibers.iter().map(|f| f.residue_degree).collect();
                    let order = degrees.iter().fold(1usize, |l, &d| lcm(l, d));
                    result["group"] = json!(format!("C{order}"));
                    result["evidence"] = json!([{ "kind": "frobenius", "cycle_type": degrees }]);
                } else {
                    let fiber = a.eval_t(&t0);
                    if fiber.is_monic() {
                        let c = certify_sn(&fiber, b.prime_budget)?;
                        result["group"] = json!(c.group.to_string());
                        result["evidence"] = group_doc(&c)["evidence"].clone();
                    }
                }
            }
            Ok((json!({ "poly": text, "at": at }), Status::Ok, result))
        }
        Command::CertifySn { poly, budget } => {
            let text = load(poly)?;
            let f = parse_poly(field, &text).context("polynomial")?;
            let c = certify_sn(&f, budget.unwrap_or(b.prime_budget))?;
            Ok((json!({ "poly": text }), group_status(&c), group_doc(&c)))
        }
        Command::CubicGroup { poly } => {
            let text = load(poly)?;
            let f = parse_poly(field, &text).context("polynomial")?;
            let c = cubic_galois_group(&f)?;
            Ok((json!({ "poly": text }), group_status(&c), group_doc(&c)))
        }
        Command::Trinomial(TrinomialCommand::Lp { x }) => {
            let xe = parse_elem(field, x).context("x")?;
            let fam = lp_trinomial(field, &xe);
            let result = json!({
                "x": field.format_elem(&fam.x),
                "family": fam.poly.to_string(),
                "discriminant": fam.discriminant.to_string_in("T"),
                "nonsquare_witness": fam.nonsquare_witness.as_ref().map(|w| w.to_string_in("T")),
            });
            Ok((json!({ "x": x }), Status::Ok, result))
        }
        Command::Trinomial(TrinomialCommand::Split) => {
            let st = split_trinomial(field)?;
            let result = json!({
                "alpha": st.alpha.as_ref().map(|a| field.format_elem(a)),
                "a": field.format_elem(&st.a),
                "polynomial": st.poly().to_string(),
                "roots": st.roots.iter().map(|r| field.format_elem(r)).collect::<Vec<_>>(),
                "check": st.check(),
            });
            Ok((json!({}), Status::Ok, result))
        }
        Command::Skew { op, ring, lhs, rhs, left } => {
            let any: AnySkewRing = ring.parse().with_context(|| format!("ring {ring:?}"))?;
            let lhs_text = load(lhs)?;
            let rhs_text = rhs.as_deref().map(load).transpose()?;
            let inputs = json!({ "ring": any.to_string(), "op": format!("{op:?}").to_lowercase(), "lhs": lhs_text, "rhs": rhs_text });
            let result = match &any {
                AnySkewRing::Field(r) => skew_op(r, *op, &lhs_text, rhs_text.as_deref(), *left)?,
                AnySkewRing::Quaternion(r) => skew_op(r, *op, &lhs_text, rhs_text.as_deref(), *left)?,
            };
            Ok((inputs, Status::Ok, result))
        }
        Command::Normquot { degree, group, sub, stem } => {
            let gens = |v: &[String]| v.iter().map(|s| Perm::parse(s, *degree)).collect::<Result<Vec<_>, _>>();
            let g = if group.is_empty() {
                PermGroup::symmetric(*degree)?
            } else {
                PermGroup::generate(*degree, gens(group)?)?
            };
            let k = PermGroup::generate(*degree, gens(sub)?)?;
            let quo = normalizer_quotient(&g, &k)?;
            let mut result = json!({
                "group_order": g.order(),
                "subgroup_order": k.order(),
                "normalizer_order": quo.normalizer_order,
                "quotient_order": quo.order,
                "coset_representatives": quo.coset_reps.iter().map(Perm::to_string).collect::<Vec<_>>(),
                "normal": quo.order * k.order() == g.order(),
            });
            let mut inputs = json!({ "degree": degree, "group": group, "sub": sub });
            if let Some(s) = stem {
                let text = load(s)?;
                let f = parse_poly(field, &text).context("stem")?;
                let roots = stem_field_root_count(&f)?;
                result["stem_field_roots"] = json!(roots);
                result["matches_stem"] = json!(roots == quo.order);
                inputs["stem"] = json!(text);
            }
            Ok((inputs, Status::Ok, result))
        }
    }
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

fn skew_op<R: DivisionRing>(
    ring: &Arc<SkewRing<R>>,
    op: SkewOp,
    lhs: &str,
    rhs: Option<&str>,
    left: bool,
) -> Result<Value> {
    let a = parse_skew(ring, lhs).context("lhs")?;
    let rhs = || -> Result<_> {
        let Some(r) = rhs else { bail!("--rhs is required for this operation") };
        parse_skew(ring, r).context("rhs")
    };
    Ok(match op {
        SkewOp::Mul => json!({ "product": a.mul(&rhs()?).to_string() }),
        SkewOp::Div if left => {
            let (q, r) = left_divide(&a, &rhs()?)?;
            json!({ "convention": "lhs = rhs*quotient + remainder", "quotient": q.to_string(), "remainder": r.to_string() })
        }
        SkewOp::Div => {
            let (q, r) = right_divide(&a, &rhs()?)?;
            json!({ "convention": "lhs = quotient*rhs + remainder", "quotient": q.to_string(), "remainder": r.to_string() })
        }
        SkewOp::Ore => {
            let b = rhs()?;
            let (r, s) = ore_witness(&a, &b)?;
            json!({ "r": r.to_string(), "s": s.to_string(), "common": a.mul(&r).to_string() })
        }
        SkewOp::Center => json!({ "central": center_test(&a), "twist_order": ring.order() }),
    })
}

/// Serialize with sorted keys and a trailing newline.
pub fn render(artifact: &Value) -> String {
    let mut s = serde_json::to_string_pretty(artifact).expect("JSON values serialize");
    s.push('\n');
    s
}
