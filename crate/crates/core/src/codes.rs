//! Concrete codes: the `[4,2,2]` four-qubit code and its Mermin square, its
//! single and double occupancy fermionic embeddings, the single-occupancy
//! family, the `2^l`-mode Hamming-type family and the glued `[16,3,4]` code.

use crate::embed::{embed_single, intertwiner, pair_parity, EmbeddedQubitState};
use crate::error::CodeError;
use crate::fock::{FockVector, Scalar};
use crate::majorana::{parse_majorana, MajoranaOperator, PauliOperator, Phase};
use crate::stab::{LogicalMismatch, StabilizerCode};

/// A logical Pauli label such as `"XII"` with its Majorana representative.
///
/// `scalar` is the global factor found between the operator's action and the
/// textbook action of the label on the code's basis; it is `+1` when the
/// representative acts exactly as labelled.
#[derive(Clone, Debug)]
pub struct LogicalOperator {
    pub label: String,
    pub operator: MajoranaOperator,
    pub scalar: Scalar,
}

#[derive(Clone, Debug)]
pub struct NamedCode {
    pub name: String,
    pub code: StabilizerCode,
    pub logicals: Vec<LogicalOperator>,
    /// Whether the parameters are certified by a known construction or only computed.
    pub provenance: &'static str,
    pub certified_distance: Option<usize>,
}

/// Action of a Pauli string label on the computational basis of `label.len()`
/// qubits (qubit 1 most significant): `P |i⟩ = phase |j⟩`.
pub fn label_action(label: &str, index: usize) -> (Phase, usize) {
    let n = label.len();
    let mut phase = Phase::ONE;
    let mut out = index;
    for (q, ch) in label.chars().enumerate() {
        let bit = 1usize << (n - 1 - q);
        let one = index & bit != 0;
        match ch {
            'X' => out ^= bit,
            'Z' => phase *= Phase::sign(one),
            'Y' => {
                out ^= bit;
                phase *= if one { Phase::MINUS_I } else { Phase::I };
            }
            _ => {}
        }
    }
    (phase, out)
}

fn expected_action(label: &str, scalar: &Scalar) -> Vec<(usize, Scalar)> {
    (0..1usize << label.len())
        .map(|i| {
            let (p, j) = label_action(label, i);
            (j, scalar.times_phase(p))
        })
        .collect()
}

impl NamedCode {
    /// Records `op` as logical `label`, deriving the global scalar from the
    /// action on the first basis vector, then verifying the full action.
    fn add_logical(&mut self, label: &str, op: MajoranaOperator) -> Result<(), CodeError> {
        let action = self.code.logical_action(&op)?;
        let (p, j0) = label_action(label, 0);
        let scalar = match &action[0] {
            Some((j, s)) if *j == j0 => s.times_phase(p.inv()),
            _ => {
                return Err(CodeError::Invalid(format!(
                    "{op} does not act as {label} on the first basis vector"
                )))
            }
        };
        self.code
            .verify_logical(&op, &expected_action(label, &scalar))
            .map_err(|e| CodeError::Invalid(format!("{label} = {op}: {e}")))?;
        self.logicals.push(LogicalOperator {
            label: label.to_string(),
            operator: op,
            scalar,
        });
        Ok(())
    }

    /// Re-runs the full action check of every recorded logical.
    pub fn verify_logicals(&self) -> Vec<(&LogicalOperator, Result<(), LogicalMismatch>)> {
        self.logicals
            .iter()
            .map(|l| {
                let expected = expected_action(&l.label, &l.scalar);
                (l, self.code.verify_logical(&l.operator, &expected))
            })
            .collect()
    }

    pub fn logical(&self, label: &str) -> Option<&LogicalOperator> {
        self.logicals.iter().find(|l| l.label == label)
    }

    /// The code-spec text: `modes: M` then one generator per line.
    pub fn spec_text(&self) -> String {
        code_spec_text(&self.code)
    }
}

pub fn code_spec_text(code: &StabilizerCode) -> String {
    let mut s = format!("modes: {}\n", code.modes());
    for g in code.generators() {
        s.push_str(&g.to_string());
        s.push('\n');
    }
    s
}

/// Parses a code spec: a `modes: M` header, then one generator per line in
/// Majorana or Pauli syntax. `#` starts a comment.
pub fn parse_code_spec(text: &str) -> Result<(usize, Vec<MajoranaOperator>), CodeError> {
    let mut modes = None;
    let mut gens = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |reason: String| CodeError::Parse { line: n + 1, reason };
        match modes {
            None => {
                let value = line
                    .strip_prefix("modes:")
                    .ok_or_else(|| err("expected header `modes: M`".into()))?
                    .trim();
                let m: usize = value
                    .parse()
                    .map_err(|_| err(format!("invalid mode count {value:?}")))?;
                if m == 0 {
                    return Err(err("mode count must be positive".into()));
                }
                modes = Some(m);
            }
            Some(m) => gens.push(parse_majorana(line, Some(m)).map_err(|e| err(e.to_string()))?),
        }
    }
    let m = modes.ok_or(CodeError::Parse {
        line: 0,
        reason: "missing `modes: M` header".into(),
    })?;
    Ok((m, gens))
}

/// Qubit-level data of the `[4,2,2]` code, as states on four qubits.
#[derive(Clone, Debug)]
pub struct FourQubitCode {
    pub stabilizers: Vec<PauliOperator>,
    /// `|00⟩…|11⟩` of the encoded pair, each a two-term state on 4 qubits.
    pub basis: Vec<FockVector>,
    pub logicals: Vec<(String, PauliOperator)>,
}

fn pauli(s: &str) -> PauliOperator {
    s.parse().expect("well-formed Pauli literal")
}

fn qubits(bits: &[&str]) -> FockVector {
    bits.iter()
        .map(|b| FockVector::from_occupations(b).expect("bit literal"))
        .reduce(|a, b| a.add(&b).expect("same length"))
        .expect("nonempty")
}

pub fn four_qubit_code() -> FourQubitCode {
    FourQubitCode {
        stabilizers: vec![pauli("XXXX"), pauli("ZZZZ")],
        basis: vec![
            qubits(&["0000", "1111"]),
            qubits(&["0101", "1010"]),
            qubits(&["1001", "0110"]),
            qubits(&["0011", "1100"]),
        ],
        logicals: vec![
            ("IX".into(), pauli("XIXI")),
            ("XI".into(), pauli("XIIX")),
            ("IZ".into(), pauli("ZIIZ")),
            ("ZI".into(), pauli("ZIZI")),
        ],
    }
}

impl FourQubitCode {
    /// `a|00⟩ + b|01⟩ + c|10⟩ + d|11⟩` inside the code.
    pub fn g_abcd(&self, coeffs: [Scalar; 4]) -> FockVector {
        let mut v = FockVector::zero(4).expect("four modes");
        for (c, b) in coeffs.iter().zip(&self.basis) {
            v = v.add(&b.scale(c)).expect("same length");
        }
        v
    }

    pub fn stabilizes_basis(&self) -> bool {
        self.basis.iter().all(|b| {
            self.stabilizers
                .iter()
                .all(|s| b.apply_pauli(s).expect("four qubits") == *b)
        })
    }

    /// Checks each logical acts as its label on the encoded basis.
    pub fn logicals_act_as_labelled(&self) -> bool {
        self.logicals.iter().all(|(label, op)| {
            self.basis.iter().enumerate().all(|(i, b)| {
                let (p, j) = label_action(label, i);
                b.apply_pauli(op).expect("four qubits") == self.basis[j].scale_phase(p)
            })
        })
    }
}

/// Outcome of the Mermin-square check on the four-qubit representatives.
#[derive(Clone, Debug)]
pub struct MerminReport {
    pub cells: Vec<Vec<PauliOperator>>,
    pub all_weight_two: bool,
    pub rows_commute: Vec<bool>,
    pub columns_commute: Vec<bool>,
    pub row_products: Vec<PauliOperator>,
    pub column_products: Vec<PauliOperator>,
    /// Scalar by which each row product acts on the code space (None if not a scalar).
    pub row_actions: Vec<Option<Scalar>>,
    pub column_actions: Vec<Option<Scalar>>,
}

impl MerminReport {
    pub fn passed(&self) -> bool {
        let one = Some(Scalar::one());
        let minus = Some(Scalar::from_int(-1));
        let minus_identity = |p: &PauliOperator| p.is_identity_up_to_phase() && p.phase() == Phase::MINUS_ONE;
        self.all_weight_two
            && self.rows_commute.iter().all(|&b| b)
            && self.columns_commute.iter().all(|&b| b)
            && self.row_actions.iter().all(|a| *a == one)
            && self.column_actions.iter().all(|a| *a == minus)
            && self.column_products.iter().all(minus_identity)
    }
}

pub fn mermin_square_check() -> MerminReport {
    let code = four_qubit_code();
    let cells: Vec<Vec<PauliOperator>> = [
        ["XXII", "XIXI", "XIIX"],
        ["YYII", "YIYI", "YIIY"],
        ["ZZII", "ZIZI", "ZIIZ"],
    ]
    .iter()
    .map(|row| row.iter().map(|s| pauli(s)).collect())
    .collect();
    let line = |ops: Vec<&PauliOperator>| {
        let commute = ops
            .iter()
            .enumerate()
            .all(|(i, a)| ops.iter().skip(i + 1).all(|b| a.commutes(b).expect("same size")));
        let product = ops
            .iter()
            .fold(PauliOperator::identity(4), |acc, o| acc.mul(o).expect("same size"));
        let action = scalar_action(&code.basis, &product);
        (commute, product, action)
    };
    let rows: Vec<_> = (0..3).map(|r| line(cells[r].iter().collect())).collect();
    let cols: Vec<_> = (0..3).map(|c| line((0..3).map(|r| &cells[r][c]).collect())).collect();
    MerminReport {
        all_weight_two: cells.iter().flatten().all(|p| p.weight() == 2),
        rows_commute: rows.iter().map(|r| r.0).collect(),
        columns_commute: cols.iter().map(|c| c.0).collect(),
        row_products: rows.iter().map(|r| r.1.clone()).collect(),
        column_products: cols.iter().map(|c| c.1.clone()).collect(),
        row_actions: rows.into_iter().map(|r| r.2).collect(),
        column_actions: cols.into_iter().map(|c| c.2).collect(),
        cells,
    }
}

/// The scalar `λ` with `op |b⟩ = λ |b⟩` for every basis vector, if any.
fn scalar_action(basis: &[FockVector], op: &PauliOperator) -> Option<Scalar> {
    let mut lambda = None;
    for b in basis {
        let img = b.apply_pauli(op).ok()?;
        let pivot = b.keys().next()?;
        let l = img.amplitude(pivot).div(&b.amplitude(pivot))?;
        if b.scale(&l) != img || lambda.as_ref().is_some_and(|x| *x != l) {
            return None;
        }
        lambda = Some(l);
    }
    lambda
}

const LOGICAL_PAIR: [(&str, &str); 4] = [
    ("IX", "-c2 c3 c10 c11"),
    ("XI", "-c2 c3 c14 c15"),
    ("IZ", "-c3 c4 c15 c16"),
    ("ZI", "-c3 c4 c11 c12"),
];

fn maj(modes: usize, s: &str) -> MajoranaOperator {
    parse_majorana(s, Some(modes)).expect("well-formed Majorana literal")
}

pub fn g5() -> MajoranaOperator {
    maj(8, "c1 c4 c5 c8 c9 c12 c13 c16")
}

pub fn g6() -> MajoranaOperator {
    maj(8, "c3 c4 c7 c8 c11 c12 c15 c16")
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Occupancy {
    Single,
    Double,
}

impl std::str::FromStr for Occupancy {
    type Err = CodeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "single" | "s" => Ok(Occupancy::Single),
            "double" | "d" => Ok(Occupancy::Double),
            _ => Err(CodeError::Invalid(format!("unknown occupancy {s:?}"))),
        }
    }
}

/// `Ē_0 … Ē_3`: the four-qubit code basis embedded with single occupancy.
pub fn e_bar() -> Vec<FockVector> {
    four_qubit_code()
        .basis
        .iter()
        .map(|b| {
            let amps = (0..16u64).map(|i| b.amplitude(i)).collect();
            embed_single(&EmbeddedQubitState::new(amps).expect("16 amplitudes")).expect("4 qubits")
        })
        .collect()
}

/// `Ẽ_α = Ω Ē_α`.
pub fn e_tilde() -> Vec<FockVector> {
    let omega = intertwiner(4);
    e_bar()
        .iter()
        .map(|e| e.apply_majorana(&omega).expect("8 modes"))
        .collect()
}

/// The `[16,2,4]` code from adjoining `g_5, g_6` to the occupancy stabilizers.
pub fn embedded_16_2_4(occupancy: Occupancy) -> Result<NamedCode, CodeError> {
    let sign = match occupancy {
        Occupancy::Single => Phase::ONE,
        Occupancy::Double => Phase::MINUS_ONE,
    };
    let mut gens: Vec<MajoranaOperator> = (1..=4).map(|j| pair_parity(j, 4).scaled(sign)).collect();
    let omega = intertwiner(4);
    for g in [g5(), g6()] {
        gens.push(match occupancy {
            Occupancy::Single => g,
            Occupancy::Double => omega.mul(&g)?.mul(&omega)?,
        });
    }
    let basis = match occupancy {
        Occupancy::Single => e_bar(),
        Occupancy::Double => e_tilde(),
    };
    let code = StabilizerCode::new(8, gens)?.with_basis(basis)?;
    let mut named = NamedCode {
        name: format!(
            "four-qubit-embedded-{}",
            match occupancy {
                Occupancy::Single => "single",
                Occupancy::Double => "double",
            }
        ),
        code,
        logicals: Vec::new(),
        provenance: "certified",
        certified_distance: Some(4),
    };
    for (label, op) in LOGICAL_PAIR {
        named.add_logical(label, maj(8, op))?;
    }
    Ok(named)
}

/// The `[4n, n, 2]` single-occupancy code `⟨g_1, …, g_n⟩` with logical
/// `X_j = σ̄_x^{(j)}`, `Z_j = σ̄_z^{(j)}`.
pub fn single_occupancy_code(n: usize) -> Result<NamedCode, CodeError> {
    if n == 0 {
        return Err(CodeError::NoQubits);
    }
    let gens = (1..=n).map(|j| pair_parity(j, n)).collect();
    let mut code = StabilizerCode::new(2 * n, gens)?;
    if n <= 8 {
        let basis = (0..1usize << n)
            .map(|i| embed_single(&EmbeddedQubitState::basis(n, i)))
            .collect::<Result<Vec<_>, _>>()?;
        code = code.with_basis(basis)?;
    }
    let mut named = NamedCode {
        name: format!("single-occupancy-{n}"),
        code,
        logicals: Vec::new(),
        provenance: "certified",
        certified_distance: Some(2),
    };
    if n <= 8 {
        use crate::embed::{embedded_pauli, Axis, Family};
        for j in 1..=n {
            for (axis, ch) in [(Axis::X, 'X'), (Axis::Z, 'Z')] {
                let label: String = (1..=n).map(|q| if q == j { ch } else { 'I' }).collect();
                named.add_logical(&label, embedded_pauli(Family::Single, axis, j, n)?)?;
            }
        }
    }
    Ok(named)
}

/// Generators `G_1 … G_l, Γ` of the `2^l`-mode code: `G_j` contains `c_μ`
/// exactly when bit `j−1` of `μ−1` is set.
pub fn hastings_generators(l: usize) -> Result<Vec<MajoranaOperator>, CodeError> {
    if l < 3 {
        return Err(CodeError::InvalidFamilyParameter(l));
    }
    if l > 7 {
        return Err(CodeError::Invalid(format!("2^{l} Majorana modes exceeds the supported range")));
    }
    let n = 1usize << l;
    let modes = n / 2;
    let mut gens = Vec::with_capacity(l + 1);
    for j in 1..=l {
        let idx: Vec<usize> = (1..=n).filter(|mu| (mu - 1) >> (j - 1) & 1 == 1).collect();
        gens.push(MajoranaOperator::from_product(modes, Phase::ONE, &idx)?);
    }
    gens.push(crate::fock::chirality(modes));
    Ok(gens)
}

/// The 8 glued basis vectors `Ē_0 … Ē_3, ΩĒ_0 … ΩĒ_3`.
pub fn glued_basis() -> Vec<FockVector> {
    let mut b = e_bar();
    b.extend(e_tilde());
    b
}

/// `Σ_α Ψ_α Ē_α + Ψ_{α+4} Ω Ē_α`.
pub fn glue(single_block: &[Scalar; 4], double_block: &[Scalar; 4]) -> FockVector {
    let mut v = FockVector::zero(8).expect("8 modes");
    for (c, b) in single_block.iter().chain(double_block).zip(glued_basis()) {
        v = v.add(&b.scale(c)).expect("same length");
    }
    v
}

const GLUED_LOGICALS: [(&str, &str); 4] = [
    ("IIX", "-c2 c3 c10 c11"),
    ("IXI", "-c2 c3 c14 c15"),
    ("IIZ", "-c3 c4 c15 c16"),
    ("IZI", "-c3 c4 c11 c12"),
];

/// The `2^l`-mode code. For `l = 4` the glued basis and the three-qubit
/// logical dictionary are attached.
pub fn hastings_code(l: usize) -> Result<NamedCode, CodeError> {
    let gens = hastings_generators(l)?;
    let modes = 1usize << (l - 1);
    let mut code = StabilizerCode::new(modes, gens)?;
    if l == 4 {
        code = code.with_basis(glued_basis())?;
    }
    let mut named = NamedCode {
        name: format!("hastings-{l}"),
        code,
        logicals: Vec::new(),
        provenance: if l == 4 { "certified" } else { "computed" },
        certified_distance: (l == 4).then_some(4),
    };
    if l == 4 {
        named.add_logical("XII", intertwiner(4))?;
        named.add_logical("ZII", pair_parity(1, 4))?;
        for (label, op) in GLUED_LOGICALS {
            named.add_logical(label, maj(8, op))?;
        }
    }
    Ok(named)
}

/// Looks up a code by CLI name.
pub fn by_name(name: &str, l: Option<usize>, n: Option<usize>, occupancy: Option<Occupancy>) -> Result<NamedCode, CodeError> {
    match name {
        "hastings" => hastings_code(l.unwrap_or(4)),
        "glued" => hastings_code(4),
        "four-qubit-embedded" => embedded_16_2_4(occupancy.unwrap_or(Occupancy::Single)),
        "single-occupancy" => single_occupancy_code(n.unwrap_or(4)),
        other => Err(CodeError::Invalid(format!("unknown code {other:?}"))),
    }
}

/// Pauli letters of a Majorana operator, for reports.
pub fn pauli_form(op: &MajoranaOperator) -> String {
    crate::majorana::majorana_to_pauli(op).to_string()
}
