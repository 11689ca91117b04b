//! Report construction for the `fermicode` command-line tool.
//!
//! Every command produces an [`Outcome`]: a JSON body, a pass/fail verdict
//! and the files to write. `main.rs` adds the command echo and input digest,
//! prints the report and maps the verdict to an exit code.

use anyhow::{anyhow, bail, Context, Result};
use fermicode::codes::{self, four_qubit_code, mermin_square_check, NamedCode, Occupancy};
use fermicode::e8::{cartan_commutativity_check, E8RootSystem, DEGREES};
use fermicode::embed::{embed, EmbeddedQubitState, OccupancyLabel};
use fermicode::fock::{Scalar, Span};
use fermicode::majorana::{majorana_to_pauli, parse_operator, pauli_to_majorana, MajoranaOperator, OperatorText};
use fermicode::stab::{Distance, StabilizerCode};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

/// Largest fermionic mode count for which the codespace is enumerated.
pub const CODESPACE_MODE_LIMIT: usize = 16;

#[derive(Debug)]
pub struct Outcome {
    pub body: Map<String, Value>,
    pub passed: bool,
    /// Name of the report file written into the report directory.
    pub report_name: String,
    /// Additional `(file name, contents)` pairs for the report directory.
    pub files: Vec<(String, String)>,
}

/// SHA-256 over length-prefixed parts, hex encoded.
pub fn digest(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p.as_bytes());
    }
    hex::encode(h.finalize())
}

/// Assembles the final report: command echo and input digest first, then
/// the command's body, then the overall verdict.
pub fn assemble(command: &str, args: &[String], inputs_sha256: &str, outcome: &Outcome) -> Value {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("args".into(), json!(args));
    m.insert("inputs_sha256".into(), json!(inputs_sha256));
    for (k, v) in &outcome.body {
        m.insert(k.clone(), v.clone());
    }
    m.insert("passed".into(), json!(outcome.passed));
    Value::Object(m)
}

fn distance_fields(d: &Distance) -> (Value, Value) {
    match d {
        Distance::Exact { distance, witness } => (json!(distance), json!(witness.to_string())),
        other => (json!(other.to_string()), Value::Null),
    }
}

fn operator_json(op: &MajoranaOperator) -> Value {
    json!({ "majorana": op.to_string(), "pauli": majorana_to_pauli(op).to_string() })
}

/// The shared code section: parameters, validation verdict, distance and
/// single-Majorana syndrome table. Returns the validated code and its
/// distance, if the generators are valid.
pub fn analyze(
    modes: usize,
    generators: Vec<MajoranaOperator>,
    max_weight: usize,
    jobs: usize,
) -> (Map<String, Value>, Option<(StabilizerCode, Distance)>) {
    let mut m = Map::new();
    m.insert("majorana_modes".into(), json!(2 * modes));
    m.insert("num_generators".into(), json!(generators.len()));
    let gens_json: Vec<Value> = generators.iter().map(operator_json).collect();
    match StabilizerCode::validate(modes, generators) {
        Ok(code) => {
            let d = code.distance(max_weight, jobs);
            let (distance, witness) = distance_fields(&d);
            let table: Vec<Value> = code
                .syndrome_table()
                .into_iter()
                .map(|(mu, s)| json!({ "error": format!("c{mu}"), "syndrome": s.to_string(), "value": s.value() }))
                .collect();
            m.insert("valid".into(), json!(true));
            m.insert("k".into(), json!(code.k()));
            m.insert("distance".into(), distance);
            m.insert("distance_witness".into(), witness);
            m.insert("max_weight".into(), json!(max_weight));
            m.insert("syndrome_table".into(), json!(table));
            m.insert("violations".into(), json!([]));
            m.insert("generators".into(), json!(gens_json));
            (m, Some((code, d)))
        }
        Err(violations) => {
            let v: Vec<Value> = violations
                .iter()
                .map(|v| json!({ "kind": v.kind(), "detail": v.to_string() }))
                .collect();
            m.insert("valid".into(), json!(false));
            m.insert("k".into(), Value::Null);
            m.insert("distance".into(), Value::Null);
            m.insert("distance_witness".into(), Value::Null);
            m.insert("max_weight".into(), json!(max_weight));
            m.insert("syndrome_table".into(), Value::Null);
            m.insert("violations".into(), json!(v));
            m.insert("generators".into(), json!(gens_json));
            (m, None)
        }
    }
}

pub struct BuildOptions {
    pub code: String,
    pub l: Option<usize>,
    pub n: Option<usize>,
    pub occupancy: Option<String>,
    pub max_weight: usize,
    pub emit_basis: bool,
    pub jobs: usize,
}

impl BuildOptions {
    pub fn canonical(&self) -> String {
        format!(
            "code={};l={:?};n={:?};occupancy={:?};max_weight={};emit_basis={}",
            self.code, self.l, self.n, self.occupancy, self.max_weight, self.emit_basis
        )
    }
}

pub fn build(opts: &BuildOptions) -> Result<Outcome> {
    let name = opts.code.as_str();
    let allowed = match name {
        "hastings" => (true, false, false),
        "single-occupancy" => (false, true, false),
        "four-qubit-embedded" => (false, false, true),
        "glued" | "four-qubit" => (false, false, false),
        other => bail!(
            "unknown code {other:?} (expected hastings, glued, four-qubit, four-qubit-embedded or single-occupancy)"
        ),
    };
    if opts.l.is_some() && !allowed.0 {
        bail!("--l only applies to --code hastings");
    }
    if opts.n.is_some() && !allowed.1 {
        bail!("--n only applies to --code single-occupancy");
    }
    if opts.occupancy.is_some() && !allowed.2 {
        bail!("--occupancy only applies to --code four-qubit-embedded");
    }
    if name == "four-qubit" {
        return Ok(four_qubit_report());
    }
    let occupancy = opts
        .occupancy
        .as_deref()
        .map(str::parse::<Occupancy>)
        .transpose()
        .map_err(|e| anyhow!("{e}"))?;
    let named = codes::by_name(name, opts.l, opts.n, occupancy).map_err(|e| anyhow!("{e}"))?;
    Ok(named_code_report(&named, opts))
}

fn named_code_report(named: &NamedCode, opts: &BuildOptions) -> Outcome {
    let code = &named.code;
    let (mut body, analyzed) = analyze(code.modes(), code.generators().to_vec(), opts.max_weight, opts.jobs);
    let distance = analyzed.map(|(_, d)| d).unwrap_or(Distance::NoLogicals);
    let mut checks = Map::new();
    checks.insert("valid".into(), body["valid"].clone());

    let mut head = Map::new();
    head.insert("code".into(), json!(named.name));
    head.insert("provenance".into(), json!(named.provenance));
    head.insert("certified_distance".into(), json!(named.certified_distance));
    head.append(&mut body);
    let mut body = head;

    if let Some(d) = named.certified_distance {
        checks.insert("distance_matches_certified".into(), json!(distance.exact() == Some(d)));
    }

    let mut files = vec![(format!("{}.code", named.name), named.spec_text())];
    if code.modes() <= CODESPACE_MODE_LIMIT {
        let basis = code.codespace();
        body.insert("codespace_dimension".into(), json!(basis.len()));
        checks.insert("codespace_dimension_is_2^k".into(), json!(basis.len() == 1usize << code.k()));
        let stabilized = basis.iter().all(|b| code.is_stabilized(b).unwrap_or(false));
        checks.insert("codespace_stabilized".into(), json!(stabilized));
        if opts.emit_basis {
            for (i, b) in basis.iter().enumerate() {
                files.push((format!("{}.basis{i}.fock", named.name), b.to_state_string()));
            }
        }
        if let Some(d) = distance.exact() {
            if code.modes() <= 8 && basis.len() <= 16 && d >= 2 {
                let report = code.detection_check(d - 1);
                checks.insert(
                    format!("detects_weight_below_{d}"),
                    json!(report.map(|r| r.passed()).unwrap_or(false)),
                );
            }
        }
        if named.name == "hastings-4" {
            let glued = codes::glued_basis();
            let same = code
                .project_codespace()
                .ok()
                .and_then(|p| Span::from_vectors(8, &p).ok())
                .zip(Span::from_vectors(8, &glued).ok())
                .and_then(|(a, b)| a.same_as(&b).ok())
                .unwrap_or(false);
            checks.insert("glued_span_matches_projection".into(), json!(same));
            let cartan = cartan_commutativity_check(&glued).map(|r| r.passed()).unwrap_or(false);
            checks.insert("cartan_commutativity".into(), json!(cartan));
        }
    } else {
        body.insert("codespace_dimension".into(), Value::Null);
    }

    let logicals: Vec<Value> = named
        .verify_logicals()
        .into_iter()
        .map(|(l, r)| {
            json!({
                "label": l.label,
                "majorana": l.operator.to_string(),
                "pauli": majorana_to_pauli(&l.operator).to_string(),
                "scalar": l.scalar.to_string(),
                "verified": r.is_ok(),
                "detail": r.err().map(|e| e.to_string()),
            })
        })
        .collect();
    if !logicals.is_empty() {
        let ok = logicals.iter().all(|l| l["verified"] == json!(true));
        checks.insert("logicals_verified".into(), json!(ok));
    }
    body.insert("logicals".into(), json!(logicals));
    let passed = checks.values().all(|v| *v == json!(true));
    body.insert("checks".into(), Value::Object(checks));
    Outcome {
        body,
        passed,
        report_name: format!("{}.report.json", named.name),
        files,
    }
}

fn four_qubit_report() -> Outcome {
    let code = four_qubit_code();
    let mermin = mermin_square_check();
    let strings = |v: &[fermicode::majorana::PauliOperator]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>();
    let actions = |v: &[Option<Scalar>]| v.iter().map(|a| a.as_ref().map(|s| s.to_string())).collect::<Vec<_>>();
    let mut checks = Map::new();
    checks.insert("stabilizes_basis".into(), json!(code.stabilizes_basis()));
    checks.insert("logicals_act_as_labelled".into(), json!(code.logicals_act_as_labelled()));
    checks.insert("mermin_square".into(), json!(mermin.passed()));
    let passed = checks.values().all(|v| *v == json!(true));
    let mut body = Map::new();
    body.insert("code".into(), json!("four-qubit"));
    body.insert("qubits".into(), json!(4));
    body.insert("stabilizers".into(), json!(strings(&code.stabilizers)));
    body.insert(
        "basis".into(),
        json!(code.basis.iter().map(|b| b.to_state_string()).collect::<Vec<_>>()),
    );
    body.insert(
        "logicals".into(),
        json!(code.logicals.iter().map(|(l, p)| json!({ "label": l, "pauli": p.to_string() })).collect::<Vec<_>>()),
    );
    body.insert(
        "mermin_square".into(),
        json!({
            "cells": mermin.cells.iter().map(|r| strings(r)).collect::<Vec<_>>(),
            "row_products": strings(&mermin.row_products),
            "row_actions": actions(&mermin.row_actions),
            "column_products": strings(&mermin.column_products),
            "column_actions": actions(&mermin.column_actions),
        }),
    );
    body.insert("checks".into(), Value::Object(checks));
    Outcome {
        body,
        passed,
        report_name: "four-qubit.report.json".into(),
        files: Vec::new(),
    }
}

pub fn check(spec: &str, max_weight: usize, jobs: usize) -> Result<Outcome> {
    let (modes, gens) = codes::parse_code_spec(spec).map_err(|e| anyhow!("{e}"))?;
    let (body, code) = analyze(modes, gens, max_weight, jobs);
    Ok(Outcome {
        body,
        passed: code.is_some(),
        report_name: "check.report.json".into(),
        files: Vec::new(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Pauli,
    Majorana,
}

pub fn convert(input: &str, to: Target, modes: Option<usize>) -> Result<Outcome> {
    let (maj, pauli) = match parse_operator(input, modes).map_err(|e| anyhow!("{e}"))? {
        OperatorText::Majorana(m) => {
            let p = majorana_to_pauli(&m);
            (m, p)
        }
        OperatorText::Pauli(p) => (pauli_to_majorana(&p), p),
    };
    let result = match to {
        Target::Pauli => pauli.to_string(),
        Target::Majorana => maj.to_string(),
    };
    let mut body = Map::new();
    body.insert("input".into(), json!(input));
    body.insert("to".into(), json!(if to == Target::Pauli { "pauli" } else { "majorana" }));
    body.insert("result".into(), json!(result));
    body.insert("modes".into(), json!(maj.modes()));
    body.insert("majorana".into(), json!(maj.to_string()));
    body.insert("pauli".into(), json!(pauli.to_string()));
    body.insert("majorana_weight".into(), json!(maj.weight()));
    body.insert("hermitian".into(), json!(maj.is_hermitian()));
    Ok(Outcome {
        body,
        passed: true,
        report_name: "convert.report.json".into(),
        files: Vec::new(),
    })
}

fn decimal(s: &Scalar) -> String {
    let (re, im) = s.to_f64_pair();
    if s.is_real() {
        format!("{re:.15e}")
    } else {
        let sign = if im < 0.0 { '-' } else { '+' };
        format!("{re:.15e}{sign}{:.15e}*i", im.abs())
    }
}

pub fn invariants(values: &[String], decimals: bool, rank: bool) -> Result<Outcome> {
    if let Some(flag) = values.iter().find(|v| v.starts_with("--")) {
        bail!("option {flag} must come before the amplitudes");
    }
    if values.len() != 8 {
        bail!("expected 8 amplitudes, got {}", values.len());
    }
    let amps: Vec<Scalar> = values
        .iter()
        .map(|v| v.parse::<Scalar>().map_err(|e| anyhow!("{e}")))
        .collect::<Result<_>>()?;
    let psi: [Scalar; 8] = std::array::from_fn(|i| amps[i].clone());
    let e8 = E8RootSystem::new();
    let pis = e8.evaluate_invariants(&psi);
    let table: Vec<Value> = DEGREES
        .iter()
        .zip(&pis)
        .map(|(d, v)| {
            let mut m = Map::new();
            m.insert("degree".into(), json!(d));
            m.insert("value".into(), json!(v.to_string()));
            if decimals {
                m.insert("decimal".into(), json!(decimal(v)));
            }
            Value::Object(m)
        })
        .collect();
    let mut body = Map::new();
    body.insert("amplitudes".into(), json!(amps.iter().map(|a| a.to_string()).collect::<Vec<_>>()));
    body.insert("invariants".into(), json!(table));
    if rank {
        if !amps.iter().all(Scalar::is_real) {
            bail!("--rank needs real rational amplitudes");
        }
        let point = std::array::from_fn(|i| amps[i].re().clone());
        body.insert("jacobian_rank".into(), json!(e8.jacobian_rank_check(&point)));
    }
    Ok(Outcome {
        body,
        passed: true,
        report_name: "invariants.report.json".into(),
        files: Vec::new(),
    })
}

pub fn embed_state(state: &str, occupancy: &str, n: Option<usize>) -> Result<Outcome> {
    let psi = EmbeddedQubitState::parse(state).map_err(|e| anyhow!("{e}"))?;
    let qubits = psi.qubits();
    if let Some(n) = n {
        if n != qubits {
            bail!("--n {n} but the state file has {} amplitudes", 1usize << qubits);
        }
    }
    let label = match occupancy {
        "single" | "s" => OccupancyLabel::single(qubits),
        "double" | "d" => OccupancyLabel::double(qubits),
        bits => bits.parse().map_err(|e| anyhow!("{e}")).context("occupancy label")?,
    };
    let v = embed(&psi, &label).map_err(|e| anyhow!("{e}"))?;
    let text = v.to_state_string();
    let mut body = Map::new();
    body.insert("qubits".into(), json!(qubits));
    body.insert("occupancy".into(), json!(label.to_string()));
    body.insert("modes".into(), json!(v.modes()));
    body.insert("terms".into(), json!(v.len()));
    body.insert("state".into(), json!(text));
    Ok(Outcome {
        body,
        passed: true,
        report_name: "embed.report.json".into(),
        files: Vec::new(),
    })
}
