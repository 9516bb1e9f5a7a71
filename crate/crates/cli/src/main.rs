//! `mckay`: command-line front end for the Kleinian resolution stability
//! workbench.
//!
//! Every subcommand validates its inputs, calls into `mckay-core`, and
//! writes one machine-readable document to standard output. Warnings and
//! diagnostics go to standard error; domain errors exit with status 1,
//! usage errors with status 2.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mckay_core::classify::{
    chain_partition, enumerate_stable_classes, positive_roots, twisting_line_bundle,
    yangian_factorization, ChainPartition, StableClass,
};
use mckay_core::cohomology::{
    euler_char_pair, exceptional_seq_ext, exceptional_vs_simple_ext, h_ambient,
    h_self_intersection_twist, h_shift_twist, h_structure, HTriple, TwistSign,
};
use mckay_core::dictionary::{omega_to_zeta, SlopeSpec};
use mckay_core::linalg::Matrix;
use mckay_core::quiver::{
    thin_semistability, verify_subrep_certificate, Quiver, QuiverRep,
};
use mckay_core::rational::{format_rat, parse_rat, rat_int};
use mckay_core::series::{
    betti_series, restricted_kac_generating, ExpConvention, TruncatedSeries,
};
use mckay_core::toric::{DivisorClass, Polarization, ResolutionGeometry};
use mckay_core::Rat;

#[derive(Parser)]
#[command(
    name = "mckay",
    about = "Workbench for stability and generating functions on Kleinian resolutions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    /// Expand q/(q-1) in powers of 1/q (default).
    Qinv,
    /// Expand q/(q-1) in powers of q.
    Q,
}

#[derive(Args)]
struct CommonArgs {
    /// Singularity parameter N of the type A_{N-1} surface.
    #[arg(long = "N", value_name = "N")]
    n: usize,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct OmegaArgs {
    /// Polarization as the pairings <omega, C_i>, comma-separated rationals
    /// of length N-1.
    #[arg(long, value_name = "LIST", conflicts_with = "omega_divisor")]
    omega: Option<String>,
    /// Polarization as divisor coefficients on C_0..C_N, comma-separated.
    #[arg(long, value_name = "LIST")]
    omega_divisor: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the resolution fan and intersection data.
    Fan {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Intersection numbers: the compact matrix, or one interval pairing.
    Intersection {
        #[command(flatten)]
        common: CommonArgs,
        /// First interval as "i,j".
        #[arg(long, value_name = "I,J")]
        a: Option<String>,
        /// Second interval as "i,j".
        #[arg(long, value_name = "I,J", requires = "a")]
        b: Option<String>,
    },
    /// Translate a polarization and slope into a stability parameter.
    Translate {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        omega: OmegaArgs,
        /// Slope: a positive rational, or "inf".
        #[arg(long)]
        mu: String,
    },
    /// Enumerate stable classes and their chain/Yangian structure.
    Classify {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        omega: OmegaArgs,
        #[arg(long)]
        mu: String,
    },
    /// Chain partition of the stable classes, with twisting line bundles.
    Chains {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        omega: OmegaArgs,
        #[arg(long)]
        mu: String,
    },
    /// Yangian factorization determined by the chain partition.
    Yangian {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        omega: OmegaArgs,
        #[arg(long)]
        mu: String,
    },
    /// Betti generating series and Poincare predictions.
    BettiSeries {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        omega: OmegaArgs,
        #[arg(long)]
        mu: String,
        /// Maximum total z-degree.
        #[arg(long, default_value = "3")]
        trunc_z: u32,
        /// q-exponent window half-width.
        #[arg(long, default_value = "8")]
        trunc_q: i64,
        #[arg(long, value_enum, default_value = "qinv")]
        exp_convention: Convention,
    },
    /// Restricted Kac generating polynomial.
    KacRestricted {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        omega: OmegaArgs,
        #[arg(long)]
        mu: String,
    },
    /// Check a quiver representation: moment map and stability.
    VerifyRep {
        #[command(flatten)]
        common: CommonArgs,
        /// JSON file with {"dims": [...], "x": {"1": [[..]]}, "y": {...}}.
        #[arg(long)]
        file: String,
        /// Stability parameter, comma-separated rationals of length N.
        #[arg(long)]
        zeta: String,
        /// Optional subrepresentation certificate: JSON list of per-vertex
        /// basis-vector lists.
        #[arg(long)]
        certificate: Option<String>,
    },
    /// Dump the closed-form cohomology tables.
    Tables {
        #[command(flatten)]
        common: CommonArgs,
    },
}

struct CliError(String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn parse_rat_list(s: &str, expected: usize, what: &str) -> Result<Vec<Rat>, CliError> {
    let vals: Option<Vec<Rat>> = s.split(',').map(|p| parse_rat(p.trim())).collect();
    let vals = vals.ok_or_else(|| CliError(format!("malformed rational list for {what}")))?;
    if vals.len() != expected {
        return Err(CliError(format!(
            "{what} expects {expected} comma-separated values, got {}",
            vals.len()
        )));
    }
    Ok(vals)
}

fn parse_interval(s: &str) -> Result<(usize, usize), CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError(format!("interval must be \"i,j\", got {s:?}")));
    }
    let i = parts[0].trim().parse::<usize>().map_err(|e| CliError(e.to_string()))?;
    let j = parts[1].trim().parse::<usize>().map_err(|e| CliError(e.to_string()))?;
    Ok((i, j))
}

fn build_polarization(
    geom: &ResolutionGeometry,
    omega: &OmegaArgs,
) -> Result<Polarization, CliError> {
    let n = geom.n();
    if let Some(list) = &omega.omega {
        let zeta = parse_rat_list(list, n - 1, "--omega")?;
        return Ok(Polarization::from_pairings(geom, zeta)?);
    }
    if let Some(list) = &omega.omega_divisor {
        let coeffs = parse_rat_list(list, n + 1, "--omega-divisor")?;
        let d = DivisorClass::from_coeffs(coeffs.into_iter().enumerate());
        return Ok(Polarization::from_divisor(geom, &d)?);
    }
    Err(CliError(String::from(
        "a polarization is required: pass --omega or --omega-divisor",
    )))
}

fn parse_mu(s: &str) -> Result<SlopeSpec, CliError> {
    if s.trim() == "inf" {
        return Ok(SlopeSpec::Infinity);
    }
    let mu = parse_rat(s).ok_or_else(|| CliError(format!("malformed slope {s:?}")))?;
    Ok(SlopeSpec::Finite(mu))
}

fn finite_mu(spec: &SlopeSpec) -> Result<Rat, CliError> {
    match spec {
        SlopeSpec::Finite(mu) if *mu > rat_int(0) => Ok(mu.clone()),
        SlopeSpec::Finite(_) => Err(CliError(String::from(
            "classification requires a strictly positive slope",
        ))),
        SlopeSpec::Infinity => Err(CliError(String::from(
            "classification requires a finite slope; --mu inf applies to translate only",
        ))),
    }
}

// ---------------------------------------------------------------------------
// Rendering

struct Document {
    json: Value,
    /// Header row followed by data rows, for tsv/pretty.
    table: Vec<Vec<String>>,
}

fn emit(doc: &Document, format: Format) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&doc.json).expect("serializable"));
        }
        Format::Tsv => {
            for row in &doc.table {
                println!("{}", row.join("\t"));
            }
        }
        Format::Pretty => {
            let widths: Vec<usize> = (0..doc.table.iter().map(Vec::len).max().unwrap_or(0))
                .map(|c| {
                    doc.table
                        .iter()
                        .filter_map(|r| r.get(c))
                        .map(String::len)
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            for row in &doc.table {
                let line: Vec<String> = row
                    .iter()
                    .enumerate()
                    .map(|(c, cell)| format!("{cell:<width$}", width = widths[c]))
                    .collect();
                println!("{}", line.join("  ").trim_end());
            }
        }
    }
}

fn rat_json(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

fn divisor_json(d: &DivisorClass) -> Value {
    let map: BTreeMap<String, Value> = d
        .iter()
        .map(|(i, c)| (format!("C_{i}"), rat_json(c)))
        .collect();
    Value::Object(map.into_iter().collect())
}

fn divisor_text(d: &DivisorClass) -> String {
    if d.is_zero() {
        return String::from("0");
    }
    d.iter()
        .map(|(i, c)| format!("{}*C_{i}", format_rat(c)))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn class_json(c: &StableClass, n: usize) -> Value {
    json!({
        "i": c.i,
        "j": c.j,
        "e": c.e,
        "chi": c.chi,
        "determinacy": c.determinacy.as_str(),
        "chern": c.chern_coeffs(n),
        "dimvec": c.dimvec(n).ok(),
    })
}

fn series_json(s: &TruncatedSeries) -> Value {
    let terms: Vec<Value> = s
        .iter()
        .map(|((q, z), c)| json!({"q": q, "z": z, "coeff": format_rat(c)}))
        .collect();
    Value::Array(terms)
}

fn triple_json(h: HTriple) -> Value {
    json!([h.0, h.1, h.2])
}

// ---------------------------------------------------------------------------
// Shared classification pipeline

struct Classification {
    geom: ResolutionGeometry,
    partition: ChainPartition,
}

fn run_classification(
    n: usize,
    omega: &OmegaArgs,
    mu: &str,
) -> Result<Classification, CliError> {
    let geom = ResolutionGeometry::build(n)?;
    let pol = build_polarization(&geom, omega)?;
    let mu = finite_mu(&parse_mu(mu)?)?;
    let enumeration = enumerate_stable_classes(&geom, &pol, &mu)?;
    for w in &enumeration.warnings {
        eprintln!("warning: {w}");
    }
    let partition = chain_partition(&enumeration.classes)?;
    Ok(Classification { geom, partition })
}

// ---------------------------------------------------------------------------
// Commands

fn cmd_fan(common: &CommonArgs) -> Result<Document, CliError> {
    let geom = ResolutionGeometry::build(common.n)?;
    let matrix = geom.compact_intersection_matrix();
    let json = json!({
        "N": geom.n(),
        "rays": geom.rays(),
        "curves": {
            "count": geom.curve_count(),
            "compact": (1..geom.n()).collect::<Vec<_>>(),
        },
        "intersection_matrix": matrix
            .iter()
            .map(|row| row.iter().map(rat_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    });
    let mut table = vec![vec![String::from("ray"), String::from("x"), String::from("y")]];
    for (i, ray) in geom.rays().iter().enumerate() {
        table.push(vec![format!("v_{i}"), ray[0].to_string(), ray[1].to_string()]);
    }
    Ok(Document { json, table })
}

fn cmd_intersection(
    common: &CommonArgs,
    a: &Option<String>,
    b: &Option<String>,
) -> Result<Document, CliError> {
    let geom = ResolutionGeometry::build(common.n)?;
    if let (Some(a), Some(b)) = (a, b) {
        let (i, j) = parse_interval(a)?;
        let (l, m) = parse_interval(b)?;
        let pairing = geom.interval_pairing(i, j, l, m)?;
        let json = json!({
            "a": {"i": i, "j": j},
            "b": {"i": l, "j": m},
            "pairing": pairing,
        });
        let table = vec![
            vec![String::from("a"), String::from("b"), String::from("pairing")],
            vec![format!("C_{{{i},{j}}}"), format!("C_{{{l},{m}}}"), pairing.to_string()],
        ];
        return Ok(Document { json, table });
    }
    let matrix = geom.compact_intersection_matrix();
    let json = json!({
        "N": geom.n(),
        "intersection_matrix": matrix
            .iter()
            .map(|row| row.iter().map(rat_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    });
    let mut table = Vec::new();
    let mut header = vec![String::new()];
    header.extend((1..geom.n()).map(|i| format!("C_{i}")));
    table.push(header);
    for (r, row) in matrix.iter().enumerate() {
        let mut line = vec![format!("C_{}", r + 1)];
        line.extend(row.iter().map(format_rat));
        table.push(line);
    }
    Ok(Document { json, table })
}

fn cmd_translate(
    common: &CommonArgs,
    omega: &OmegaArgs,
    mu: &str,
) -> Result<Document, CliError> {
    let geom = ResolutionGeometry::build(common.n)?;
    let pol = build_polarization(&geom, omega)?;
    let spec = parse_mu(mu)?;
    let zeta = omega_to_zeta(&pol, &spec)?;
    let json = json!({
        "N": geom.n(),
        "mu": match &spec {
            SlopeSpec::Finite(m) => format_rat(m),
            SlopeSpec::Infinity => String::from("inf"),
        },
        "zeta": zeta.iter().map(format_rat).collect::<Vec<_>>(),
        "omega": divisor_json(pol.divisor_form()),
    });
    let mut table = vec![vec![String::from("vertex"), String::from("zeta")]];
    for (k, z) in zeta.iter().enumerate() {
        table.push(vec![(k + 1).to_string(), format_rat(z)]);
    }
    Ok(Document { json, table })
}

fn partition_json(c: &Classification) -> Result<Value, CliError> {
    let n = c.geom.n();
    let factors = yangian_factorization(&c.partition);
    Ok(json!({
        "classes": c.partition.classes.iter().map(|s| class_json(s, n)).collect::<Vec<_>>(),
        "chains": c
            .partition
            .chains
            .iter()
            .map(|ch| ch.class_indices.clone())
            .collect::<Vec<_>>(),
        "lambda": c.partition.lambda,
        "yangian": factors.iter().map(|f| f.label.clone()).collect::<Vec<_>>(),
    }))
}

fn class_table(c: &Classification) -> Vec<Vec<String>> {
    let mut table = vec![vec![
        String::from("class"),
        String::from("i"),
        String::from("j"),
        String::from("e"),
        String::from("chi"),
        String::from("determinacy"),
    ]];
    for (k, s) in c.partition.classes.iter().enumerate() {
        table.push(vec![
            k.to_string(),
            s.i.to_string(),
            s.j.to_string(),
            format!(
                "({})",
                s.e.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
            ),
            s.chi.to_string(),
            s.determinacy.as_str().to_string(),
        ]);
    }
    table
}

fn cmd_classify(common: &CommonArgs, omega: &OmegaArgs, mu: &str) -> Result<Document, CliError> {
    let c = run_classification(common.n, omega, mu)?;
    let json = partition_json(&c)?;
    let table = class_table(&c);
    Ok(Document { json, table })
}

fn cmd_chains(common: &CommonArgs, omega: &OmegaArgs, mu: &str) -> Result<Document, CliError> {
    let c = run_classification(common.n, omega, mu)?;
    let mut chains = Vec::new();
    let mut table = vec![vec![
        String::from("chain"),
        String::from("classes"),
        String::from("twist"),
    ]];
    for (idx, chain) in c.partition.chains.iter().enumerate() {
        let twist = twisting_line_bundle(&c.geom, &c.partition, chain)?;
        chains.push(json!({
            "classes": chain.class_indices,
            "length": chain.len(),
            "twisting_bundle": divisor_json(&twist),
        }));
        table.push(vec![
            idx.to_string(),
            format!("{:?}", chain.class_indices),
            divisor_text(&twist),
        ]);
    }
    let json = json!({
        "classes": c
            .partition
            .classes
            .iter()
            .map(|s| class_json(s, c.geom.n()))
            .collect::<Vec<_>>(),
        "chains": chains,
        "lambda": c.partition.lambda,
    });
    Ok(Document { json, table })
}

fn cmd_yangian(common: &CommonArgs, omega: &OmegaArgs, mu: &str) -> Result<Document, CliError> {
    let c = run_classification(common.n, omega, mu)?;
    let factors = yangian_factorization(&c.partition);
    let json = json!({
        "lambda": c.partition.lambda,
        "factors": factors.iter().map(|f| f.label.clone()).collect::<Vec<_>>(),
    });
    let mut table = vec![vec![String::from("chain"), String::from("factor")]];
    for (k, f) in factors.iter().enumerate() {
        table.push(vec![k.to_string(), f.label.clone()]);
    }
    Ok(Document { json, table })
}

fn cmd_betti_series(
    common: &CommonArgs,
    omega: &OmegaArgs,
    mu: &str,
    trunc_z: u32,
    trunc_q: i64,
    convention: Convention,
) -> Result<Document, CliError> {
    let c = run_classification(common.n, omega, mu)?;
    let roots = positive_roots(&c.geom, &c.partition)?;
    let conv = match convention {
        Convention::Qinv => ExpConvention::ExpandQInverse,
        Convention::Q => ExpConvention::ExpandQ,
    };
    let out = betti_series(&c.geom, &c.partition, &roots, trunc_z, trunc_q, conv)?;
    for d in &out.diagnostics {
        eprintln!("warning: {d}");
    }
    let predictions: Vec<Value> = out
        .predictions
        .iter()
        .map(|p| {
            let betti: BTreeMap<String, Value> = p
                .betti
                .iter()
                .map(|(i, c)| (i.to_string(), rat_json(c)))
                .collect();
            json!({
                "gamma": p.gamma,
                "self_pairing": p.self_pairing,
                "betti": betti,
            })
        })
        .collect();
    let json = json!({
        "series": series_json(&out.series),
        "predictions": predictions,
    });
    let mut table = vec![vec![String::from("q"), String::from("z"), String::from("coeff")]];
    for ((q, z), coeff) in out.series.iter() {
        table.push(vec![q.to_string(), format!("{z:?}"), format_rat(coeff)]);
    }
    Ok(Document { json, table })
}

fn cmd_kac_restricted(
    common: &CommonArgs,
    omega: &OmegaArgs,
    mu: &str,
) -> Result<Document, CliError> {
    let c = run_classification(common.n, omega, mu)?;
    let roots = positive_roots(&c.geom, &c.partition)?;
    let poly = restricted_kac_generating(&c.partition, &roots);
    let terms: Vec<Value> = poly
        .iter()
        .map(|(d, mult)| json!({"y": d, "coeff": mult}))
        .collect();
    let json = json!({
        "polynomial": terms,
        "monomial_count": poly.len(),
        "root_count": poly.values().sum::<u64>(),
    });
    let mut table = vec![vec![String::from("y-exponent"), String::from("coeff")]];
    for (d, mult) in poly.iter() {
        table.push(vec![format!("{d:?}"), mult.to_string()]);
    }
    Ok(Document { json, table })
}

fn json_matrix(v: &Value, rows: usize, cols: usize, what: &str) -> Result<Matrix, CliError> {
    let outer = v
        .as_array()
        .ok_or_else(|| CliError(format!("{what}: expected an array of rows")))?;
    if outer.len() != rows {
        return Err(CliError(format!("{what}: expected {rows} rows, got {}", outer.len())));
    }
    let mut m = Matrix::zero(rows, cols);
    for (r, row) in outer.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| CliError(format!("{what}: row {r} is not an array")))?;
        if row.len() != cols {
            return Err(CliError(format!(
                "{what}: row {r} has {} entries, expected {cols}",
                row.len()
            )));
        }
        for (cidx, cell) in row.iter().enumerate() {
            let rat = match cell {
                Value::Number(x) => x
                    .as_i64()
                    .map(rat_int)
                    .ok_or_else(|| CliError(format!("{what}: non-integer number at ({r},{cidx})"))),
                Value::String(s) => parse_rat(s)
                    .ok_or_else(|| CliError(format!("{what}: malformed rational at ({r},{cidx})"))),
                _ => Err(CliError(format!("{what}: bad entry at ({r},{cidx})"))),
            }?;
            m[(r, cidx)] = rat;
        }
    }
    Ok(m)
}

fn load_rep(path: &str, n: usize) -> Result<QuiverRep, CliError> {
    let text = std::fs::read_to_string(path)?;
    let doc: Value = serde_json::from_str(&text)?;
    let dims: Vec<u64> = doc
        .get("dims")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError(String::from("representation file needs a \"dims\" array")))?
        .iter()
        .map(|v| v.as_u64().ok_or_else(|| CliError(String::from("dims must be nonnegative integers"))))
        .collect::<Result<_, _>>()?;
    if dims.len() != n {
        return Err(CliError(format!(
            "dims has length {}, expected N = {n}",
            dims.len()
        )));
    }
    let quiver = Quiver::affine_cycle(n);
    let arrows = quiver.arrows();
    let empty = serde_json::Map::new();
    let read_side = |key: &str, transpose: bool| -> Result<Vec<Matrix>, CliError> {
        let side = doc.get(key).and_then(Value::as_object).unwrap_or(&empty);
        let mut out = Vec::with_capacity(arrows.len());
        for (k, &(s, t)) in arrows.iter().enumerate() {
            let (rows, cols) = if transpose {
                (dims[s] as usize, dims[t] as usize)
            } else {
                (dims[t] as usize, dims[s] as usize)
            };
            let name = (k + 1).to_string();
            match side.get(&name) {
                Some(v) => out.push(json_matrix(v, rows, cols, &format!("{key}[{name}]"))?),
                None => out.push(Matrix::zero(rows, cols)),
            }
        }
        Ok(out)
    };
    let x = read_side("x", false)?;
    let y = read_side("y", true)?;
    Ok(QuiverRep::new(quiver, dims, x, y)?)
}

fn load_certificate(path: &str, dims: &[u64]) -> Result<Vec<Vec<Vec<Rat>>>, CliError> {
    let text = std::fs::read_to_string(path)?;
    let doc: Value = serde_json::from_str(&text)?;
    let outer = doc
        .as_array()
        .ok_or_else(|| CliError(String::from("certificate must be a per-vertex array")))?;
    if outer.len() != dims.len() {
        return Err(CliError(format!(
            "certificate has {} vertices, expected {}",
            outer.len(),
            dims.len()
        )));
    }
    let mut subspaces = Vec::with_capacity(outer.len());
    for (v, basis) in outer.iter().enumerate() {
        let basis = basis
            .as_array()
            .ok_or_else(|| CliError(format!("certificate vertex {v}: expected an array")))?;
        let mut vecs = Vec::with_capacity(basis.len());
        for b in basis {
            let b = b
                .as_array()
                .ok_or_else(|| CliError(format!("certificate vertex {v}: expected vectors")))?;
            let vec: Result<Vec<Rat>, CliError> = b
                .iter()
                .map(|cell| match cell {
                    Value::Number(x) => x
                        .as_i64()
                        .map(rat_int)
                        .ok_or_else(|| CliError(String::from("non-integer number in certificate"))),
                    Value::String(s) => parse_rat(s)
                        .ok_or_else(|| CliError(String::from("malformed rational in certificate"))),
                    _ => Err(CliError(String::from("bad certificate entry"))),
                })
                .collect();
            vecs.push(vec?);
        }
        subspaces.push(vecs);
    }
    Ok(subspaces)
}

fn cmd_verify_rep(
    common: &CommonArgs,
    file: &str,
    zeta: &str,
    certificate: &Option<String>,
) -> Result<Document, CliError> {
    let n = common.n;
    if n < 2 {
        return Err(CliError(String::from("singularity type requires N >= 2")));
    }
    let rep = load_rep(file, n)?;
    let zeta = parse_rat_list(zeta, n, "--zeta")?;
    let moment = if rep.is_preprojective() { "zero" } else { "nonzero" };

    if let Some(cert_path) = certificate {
        let subspaces = load_certificate(cert_path, rep.dims())?;
        let verdict = verify_subrep_certificate(&rep, &subspaces, &zeta)?;
        let json = json!({
            "moment_map": moment,
            "certificate": verdict.as_str(),
        });
        let table = vec![
            vec![String::from("moment_map"), String::from("certificate")],
            vec![moment.to_string(), verdict.as_str().to_string()],
        ];
        return Ok(Document { json, table });
    }

    let report = thin_semistability(&rep, &zeta)?;
    let json = json!({
        "moment_map": moment,
        "verdict": report.verdict.as_str(),
        "witness": report.witness,
    });
    let table = vec![
        vec![
            String::from("moment_map"),
            String::from("verdict"),
            String::from("witness"),
        ],
        vec![
            moment.to_string(),
            report.verdict.as_str().to_string(),
            report
                .witness
                .as_ref()
                .map_or(String::from("-"), |w| format!("{w:?}")),
        ],
    ];
    Ok(Document { json, table })
}

fn cmd_tables(common: &CommonArgs) -> Result<Document, CliError> {
    let geom = ResolutionGeometry::build(common.n)?;
    let n = geom.n();
    let mut intervals = Vec::new();
    let mut table = vec![vec![
        String::from("interval"),
        String::from("h(O)"),
        String::from("h(O(C))"),
        String::from("h(O(C'))"),
        String::from("h_ambient(-)"),
        String::from("h_ambient(+)"),
    ]];
    for i in 1..n {
        for j in i..n {
            let structure = h_structure(&geom, i, j)?;
            let self_twist = h_self_intersection_twist(&geom, i, j)?;
            let shift = if i > 1 {
                Some(h_shift_twist(&geom, i, j)?)
            } else {
                None
            };
            let neg = h_ambient(&geom, i, j, TwistSign::Negative)?;
            let pos = h_ambient(&geom, i, j, TwistSign::Positive)?;
            intervals.push(json!({
                "i": i,
                "j": j,
                "h_structure": triple_json(structure),
                "h_self_intersection_twist": triple_json(self_twist),
                "h_shift_twist": shift.map(triple_json),
                "h_ambient_negative": triple_json(neg),
                "h_ambient_positive": triple_json(pos),
            }));
            table.push(vec![
                format!("({i},{j})"),
                format!("{structure:?}"),
                format!("{self_twist:?}"),
                shift.map_or(String::from("-"), |h| format!("{h:?}")),
                format!("{neg:?}"),
                format!("{pos:?}"),
            ]);
        }
    }
    let s = n - 1;
    let mut seq = Vec::new();
    for t in 0..=s {
        for u in 0..=s {
            seq.push(json!({
                "t": t,
                "u": u,
                "seq_ext": triple_json(exceptional_seq_ext(t, u, s)?),
                "vs_simple": triple_json(exceptional_vs_simple_ext(t, u, s)?),
            }));
        }
    }
    let mut euler = Vec::new();
    for i in 1..n {
        for j in i..n {
            for l in 1..n {
                for m in l..n {
                    let a = geom.interval_divisor(i, j)?;
                    let b = geom.interval_divisor(l, m)?;
                    euler.push(json!({
                        "a": [i, j],
                        "b": [l, m],
                        "chi": euler_char_pair(&geom, &a, &b)?,
                    }));
                }
            }
        }
    }
    let json = json!({
        "N": n,
        "intervals": intervals,
        "exceptional_sequence": seq,
        "euler_pairs": euler,
    });
    Ok(Document { json, table })
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    let (doc, format) = match &cli.command {
        Command::Fan { common } => (cmd_fan(common)?, common.format),
        Command::Intersection { common, a, b } => (cmd_intersection(common, a, b)?, common.format),
        Command::Translate { common, omega, mu } => {
            (cmd_translate(common, omega, mu)?, common.format)
        }
        Command::Classify { common, omega, mu } => {
            (cmd_classify(common, omega, mu)?, common.format)
        }
        Command::Chains { common, omega, mu } => (cmd_chains(common, omega, mu)?, common.format),
        Command::Yangian { common, omega, mu } => (cmd_yangian(common, omega, mu)?, common.format),
        Command::BettiSeries {
            common,
            omega,
            mu,
            trunc_z,
            trunc_q,
            exp_convention,
        } => (
            cmd_betti_series(common, omega, mu, *trunc_z, *trunc_q, *exp_convention)?,
            common.format,
        ),
        Command::KacRestricted { common, omega, mu } => {
            (cmd_kac_restricted(common, omega, mu)?, common.format)
        }
        Command::VerifyRep {
            common,
            file,
            zeta,
            certificate,
        } => (cmd_verify_rep(common, file, zeta, certificate)?, common.format),
        Command::Tables { common } => (cmd_tables(common)?, common.format),
    };
    emit(&doc, format);
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
