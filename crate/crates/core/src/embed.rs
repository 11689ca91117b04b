//! Embedding `n` qubits into `2n` fermionic modes.
//!
//! Qubit `j` owns fermionic modes `2j-1, 2j` and Majorana modes `4j-3 … 4j`.
//! Per pair, the single-occupancy encoding writes qubit value 0 as `01` and
//! 1 as `10`; the double-occupancy encoding writes 0 as `11` and 1 as `00`.
//! A general [`OccupancyLabel`] picks one of the two encodings per pair.

use std::fmt;
use std::str::FromStr;

use crate::error::EmbedError;
use crate::fock::{FockVector, Scalar};
use crate::majorana::{MajoranaOperator, Phase};

/// An `n`-qubit state; amplitude index is the bitstring value with qubit 1
/// as the most significant bit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedQubitState {
    n: usize,
    amps: Vec<Scalar>,
}

impl EmbeddedQubitState {
    pub fn new(amps: Vec<Scalar>) -> Result<Self, EmbedError> {
        let len = amps.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(EmbedError::NotPowerOfTwo(len));
        }
        Ok(Self {
            n: len.trailing_zeros() as usize,
            amps,
        })
    }

    /// The computational basis state with the given index.
    pub fn basis(n: usize, index: usize) -> Self {
        let mut amps = vec![Scalar::zero(); 1 << n];
        amps[index] = Scalar::one();
        Self { n, amps }
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Scalar] {
        &self.amps
    }

    /// One amplitude per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, EmbedError> {
        let mut amps = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let s: Scalar = line.parse().map_err(|e: crate::fock::ParseScalarError| {
                EmbedError::Fock(crate::error::FockError::Parse {
                    line: n + 1,
                    reason: e.to_string(),
                })
            })?;
            amps.push(s);
        }
        Self::new(amps)
    }

    pub fn to_text(&self) -> String {
        self.amps
            .iter()
            .map(|a| format!("{}\n", a.to_canonical_string()))
            .collect()
    }
}

/// Per-pair choice between single (`false`) and double (`true`) occupancy.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OccupancyLabel {
    alpha: Vec<bool>,
}

impl OccupancyLabel {
    pub fn new(alpha: Vec<bool>) -> Self {
        Self { alpha }
    }

    pub fn single(n: usize) -> Self {
        Self::new(vec![false; n])
    }

    pub fn double(n: usize) -> Self {
        Self::new(vec![true; n])
    }

    /// All `2^n` labels in increasing binary order.
    pub fn all(n: usize) -> Vec<Self> {
        (0..1usize << n)
            .map(|m| Self::new((0..n).map(|j| m >> (n - 1 - j) & 1 == 1).collect()))
            .collect()
    }

    pub fn qubits(&self) -> usize {
        self.alpha.len()
    }

    pub fn bits(&self) -> &[bool] {
        &self.alpha
    }

    pub fn is_single(&self) -> bool {
        self.alpha.iter().all(|&a| !a)
    }

    pub fn is_double(&self) -> bool {
        self.alpha.iter().all(|&a| a)
    }

    /// True when an odd number of pairs use double occupancy.
    pub fn is_odd(&self) -> bool {
        self.alpha.iter().filter(|&&a| a).count() % 2 == 1
    }

    /// Fock key of the embedded computational basis state `index`.
    pub fn basis_key(&self, index: usize) -> u64 {
        let n = self.qubits();
        let mut key = 0u64;
        for j in 1..=n {
            let bit = index >> (n - j) & 1 == 1;
            let pair: u64 = match (self.alpha[j - 1], bit) {
                (false, false) => 0b01,
                (false, true) => 0b10,
                (true, false) => 0b11,
                (true, true) => 0b00,
            };
            key |= pair << (2 * (n - j));
        }
        key
    }

    /// `c_1^{α_1} c_5^{α_2} ⋯ c_{4n-3}^{α_n}`.
    pub fn intertwiner(&self) -> MajoranaOperator {
        let n = self.qubits();
        let idx: Vec<usize> = (1..=n).filter(|&j| self.alpha[j - 1]).map(|j| 4 * j - 3).collect();
        MajoranaOperator::from_product(2 * n, Phase::ONE, &idx).expect("indices within 4n")
    }
}

impl fmt::Display for OccupancyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.alpha {
            f.write_str(if a { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for OccupancyLabel {
    type Err = EmbedError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(EmbedError::BadLabel(s.into()));
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(EmbedError::BadLabel(s.into())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

/// Embeds `psi` with the per-pair rule of `label`, every amplitude landing
/// on its occupation key unchanged.
pub fn embed(psi: &EmbeddedQubitState, label: &OccupancyLabel) -> Result<FockVector, EmbedError> {
    if psi.qubits() != label.qubits() {
        return Err(EmbedError::QubitMismatch {
            expected: label.qubits(),
            got: psi.qubits(),
        });
    }
    let terms = psi
        .amps
        .iter()
        .enumerate()
        .map(|(i, a)| (label.basis_key(i), a.clone()));
    Ok(FockVector::from_terms(2 * psi.qubits(), terms)?)
}

pub fn embed_single(psi: &EmbeddedQubitState) -> Result<FockVector, EmbedError> {
    embed(psi, &OccupancyLabel::single(psi.qubits()))
}

pub fn embed_double(psi: &EmbeddedQubitState) -> Result<FockVector, EmbedError> {
    embed(psi, &OccupancyLabel::double(psi.qubits()))
}

/// `Ω = c_1 c_5 ⋯ c_{4n-3}`.
pub fn intertwiner(n: usize) -> MajoranaOperator {
    OccupancyLabel::double(n).intertwiner()
}

/// Basis of `K^{(α)}`: the intertwiner of `label` applied to the
/// single-occupancy basis, in qubit-index order, signs kept.
pub fn mixed_subspace(label: &OccupancyLabel) -> Vec<FockVector> {
    let n = label.qubits();
    let op = label.intertwiner();
    (0..1usize << n)
        .map(|i| {
            let single = embed_single(&EmbeddedQubitState::basis(n, i)).expect("shapes agree");
            single.apply_majorana(&op).expect("same mode count")
        })
        .collect()
}

/// Signs `s_i` with `c^α |single i⟩ = s_i |α-embedded i⟩`, in qubit-index order.
pub fn transport_signs(label: &OccupancyLabel) -> Vec<Phase> {
    let n = label.qubits();
    let probe = FockVector::zero(2 * n).expect("mode count in range");
    let op = label.intertwiner();
    let single = OccupancyLabel::single(n);
    (0..1usize << n)
        .map(|i| {
            let (phase, key) = probe.majorana_on_key(&op, single.basis_key(i));
            assert_eq!(key, label.basis_key(i), "intertwiner preserves qubit labels");
            phase
        })
        .collect()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `σ̄`, valid on single occupancy.
    Single,
    /// `σ̃`, valid on double occupancy.
    Double,
    /// `σ̂`, valid on both.
    Shared,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl FromStr for Family {
    type Err = EmbedError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "single" | "bar" | "s" => Ok(Family::Single),
            "double" | "tilde" | "d" => Ok(Family::Double),
            "shared" | "hat" => Ok(Family::Shared),
            _ => Err(EmbedError::UnknownName {
                kind: "family",
                value: s.into(),
            }),
        }
    }
}

impl FromStr for Axis {
    type Err = EmbedError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "x" | "X" => Ok(Axis::X),
            "y" | "Y" => Ok(Axis::Y),
            "z" | "Z" => Ok(Axis::Z),
            _ => Err(EmbedError::UnknownName {
                kind: "axis",
                value: s.into(),
            }),
        }
    }
}

/// Weight-2 Majorana realisation of a Pauli operator on embedded qubit `j`.
pub fn embedded_pauli(family: Family, axis: Axis, j: usize, n: usize) -> Result<MajoranaOperator, EmbedError> {
    if j == 0 || j > n {
        return Err(EmbedError::QubitOutOfRange { index: j, n });
    }
    let m = 2 * n;
    let base = 4 * j;
    let pair = |a: usize, b: usize, phase: Phase| {
        MajoranaOperator::from_product(m, phase, &[a, b]).expect("indices within 4n")
    };
    let single = |axis: Axis| match axis {
        Axis::X => pair(base - 3, base, Phase::I),
        Axis::Y => pair(base - 2, base, Phase::I),
        Axis::Z => pair(base - 1, base, Phase::I),
    };
    Ok(match family {
        Family::Single => single(axis),
        Family::Double => {
            let c = MajoranaOperator::single(m, base - 3).expect("index within 4n");
            c.mul(&single(axis))
                .and_then(|t| t.mul(&c))
                .expect("same mode count")
        }
        Family::Shared => match axis {
            Axis::X => pair(base - 2, base - 1, Phase::MINUS_I),
            _ => single(axis),
        },
    })
}

/// `g_j = c_{4j-3} c_{4j-2} c_{4j-1} c_{4j}`.
pub fn pair_parity(j: usize, n: usize) -> MajoranaOperator {
    let b = 4 * j;
    MajoranaOperator::from_product(2 * n, Phase::ONE, &[b - 3, b - 2, b - 1, b]).expect("indices within 4n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn state(n: usize, amps: &[(usize, i64)]) -> EmbeddedQubitState {
        let mut v = vec![Scalar::zero(); 1 << n];
        for &(i, a) in amps {
            v[i] = Scalar::from_int(a);
        }
        EmbeddedQubitState::new(v).unwrap()
    }

    #[test]
    fn single_and_double_examples() {
        let e = embed_single(&state(2, &[(0, 1)])).unwrap();
        assert_eq!(e, FockVector::from_occupations("0101").unwrap());
        let e = embed_single(&state(4, &[(15, 1)])).unwrap();
        assert_eq!(e, FockVector::from_occupations("10101010").unwrap());
        let e = embed_single(&state(1, &[(0, 1), (1, 1)])).unwrap();
        let expect = FockVector::from_occupations("01")
            .unwrap()
            .add(&FockVector::from_occupations("10").unwrap())
            .unwrap();
        assert_eq!(e, expect);
        assert_eq!(
            embed_double(&state(4, &[(15, 1)])).unwrap(),
            FockVector::vacuum(8).unwrap()
        );
        assert_eq!(
            embed_double(&state(4, &[(0, 1)])).unwrap(),
            FockVector::from_occupations("11111111").unwrap()
        );
        assert_eq!(
            embed_double(&state(1, &[(0, 1)])).unwrap(),
            FockVector::from_occupations("11").unwrap()
        );
        assert!(embed(&state(1, &[]), &OccupancyLabel::single(2)).is_err());
    }

    #[test]
    fn intertwiner_pattern() {
        assert_eq!(intertwiner(1).indices(), vec![1]);
        assert_eq!(intertwiner(4).indices(), vec![1, 5, 9, 13]);
        assert!(OccupancyLabel::single(3).intertwiner().is_identity());
    }

    #[test]
    fn labels_parse() {
        let l: OccupancyLabel = "0110".parse().unwrap();
        assert_eq!(l.to_string(), "0110");
        assert!(!l.is_odd());
        assert!("01a".parse::<OccupancyLabel>().is_err());
        assert!("".parse::<OccupancyLabel>().is_err());
        assert_eq!(OccupancyLabel::all(2).len(), 4);
    }

    #[test]
    fn qubit_file_parse() {
        let s = EmbeddedQubitState::parse("1\n0\n# c\n\n-1/2\n+i\n").unwrap();
        assert_eq!(s.qubits(), 2);
        assert_eq!(s.amplitudes()[3], Scalar::i());
        assert!(EmbeddedQubitState::parse("1\n0\n0\n").is_err());
        assert_eq!(EmbeddedQubitState::parse(&s.to_text()).unwrap(), s);
    }

    #[test]
    fn family_errors() {
        assert!(embedded_pauli(Family::Single, Axis::X, 0, 2).is_err());
        assert!(embedded_pauli(Family::Single, Axis::X, 3, 2).is_err());
        assert!("w".parse::<Axis>().is_err());
        assert!("triple".parse::<Family>().is_err());
    }
}
