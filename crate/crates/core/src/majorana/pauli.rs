use std::fmt;
use std::str::FromStr;

use super::Phase;
use crate::error::OperatorError;
use crate::gf2::BitVec;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// `(z, x)` bits: `I=(0,0)`, `X=(0,1)`, `Y=(1,1)`, `Z=(1,0)`.
    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (false, true),
            Pauli::Y => (true, true),
            Pauli::Z => (true, false),
        }
    }

    pub fn from_bits(z: bool, x: bool) -> Self {
        match (z, x) {
            (false, false) => Pauli::I,
            (false, true) => Pauli::X,
            (true, true) => Pauli::Y,
            (true, false) => Pauli::Z,
        }
    }

    fn cyclic(self) -> u8 {
        match self {
            Pauli::I => 0,
            Pauli::X => 1,
            Pauli::Y => 2,
            Pauli::Z => 3,
        }
    }

    /// Phase of the single-qubit product `self · other` (XY = iZ and cyclic).
    pub fn product_phase(self, other: Pauli) -> Phase {
        let (a, b) = (self.cyclic(), other.cyclic());
        if a == 0 || b == 0 || a == b {
            Phase::ONE
        } else if (b + 3 - a) % 3 == 1 {
            Phase::I
        } else {
            Phase::MINUS_I
        }
    }

    pub fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// `phase · P_1 ⊗ ⋯ ⊗ P_M` with Hermitian letters, stored as z/x bit vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    phase: Phase,
    z: BitVec,
    x: BitVec,
}

impl PauliOperator {
    pub fn identity(qubits: usize) -> Self {
        Self {
            phase: Phase::ONE,
            z: BitVec::zeros(qubits),
            x: BitVec::zeros(qubits),
        }
    }

    pub fn from_letters(phase: Phase, letters: &[Pauli]) -> Self {
        let mut out = Self::identity(letters.len());
        out.phase = phase;
        for (i, p) in letters.iter().enumerate() {
            let (z, x) = p.bits();
            out.z.set(i + 1, z);
            out.x.set(i + 1, x);
        }
        out
    }

    /// Builds from a symplectic-basis vector `(z_1, x_1, z_2, x_2, …)`.
    pub fn from_symplectic(phase: Phase, v: &BitVec) -> Self {
        let qubits = v.len() / 2;
        let mut out = Self::identity(qubits);
        out.phase = phase;
        for q in 1..=qubits {
            out.z.set(q, v.get(2 * q - 1));
            out.x.set(q, v.get(2 * q));
        }
        out
    }

    pub fn qubits(&self) -> usize {
        self.z.len()
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn zbits(&self) -> &BitVec {
        &self.z
    }

    pub fn xbits(&self) -> &BitVec {
        &self.x
    }

    /// 1-based qubit access.
    pub fn letter(&self, q: usize) -> Pauli {
        Pauli::from_bits(self.z.get(q), self.x.get(q))
    }

    pub fn letters(&self) -> Vec<Pauli> {
        (1..=self.qubits()).map(|q| self.letter(q)).collect()
    }

    /// Letters only, e.g. `"XYXYXYXY"`.
    pub fn letter_string(&self) -> String {
        self.letters().into_iter().map(Pauli::letter).collect()
    }

    /// Coordinate `2I-1` holds `z_I`, coordinate `2I` holds `x_I`.
    pub fn symplectic(&self) -> BitVec {
        let mut v = BitVec::zeros(2 * self.qubits());
        for q in 1..=self.qubits() {
            v.set(2 * q - 1, self.z.get(q));
            v.set(2 * q, self.x.get(q));
        }
        v
    }

    pub fn weight(&self) -> usize {
        let mut both = self.z.clone();
        for q in 1..=self.qubits() {
            if self.x.get(q) {
                both.set(q, true);
            }
        }
        both.weight()
    }

    pub fn scaled(&self, phase: Phase) -> Self {
        let mut out = self.clone();
        out.phase *= phase;
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, OperatorError> {
        if self.qubits() != other.qubits() {
            return Err(OperatorError::ModeMismatch {
                left: self.qubits(),
                right: other.qubits(),
            });
        }
        let mut phase = self.phase * other.phase;
        for q in 1..=self.qubits() {
            phase *= self.letter(q).product_phase(other.letter(q));
        }
        Ok(Self {
            phase,
            z: self.z.xor(&other.z),
            x: self.x.xor(&other.x),
        })
    }

    pub fn commutes(&self, other: &Self) -> Result<bool, OperatorError> {
        let ab = self.mul(other)?;
        let ba = other.mul(self)?;
        Ok(ab == ba)
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.z.is_zero() && self.x.is_zero()
    }
}

/// The Pauli string of `c_μ`: `Z_1 ⋯ Z_{I-1} X_I` for `μ = 2I-1`,
/// `Z_1 ⋯ Z_{I-1} Y_I` for `μ = 2I`.
pub fn jordan_wigner(qubits: usize, mu: usize) -> PauliOperator {
    assert!(mu >= 1 && mu <= 2 * qubits, "c{mu} outside 1..={}", 2 * qubits);
    let site = mu.div_ceil(2);
    let mut letters = vec![Pauli::I; qubits];
    for l in letters.iter_mut().take(site - 1) {
        *l = Pauli::Z;
    }
    letters[site - 1] = if mu % 2 == 1 { Pauli::X } else { Pauli::Y };
    PauliOperator::from_letters(Phase::ONE, &letters)
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.phase, self.letter_string())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

impl FromStr for PauliOperator {
    type Err = OperatorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match super::parse_operator(s, None)? {
            super::OperatorText::Pauli(p) => Ok(p),
            super::OperatorText::Majorana(_) => Err(OperatorError::Parse {
                input: s.to_string(),
                reason: "expected a Pauli string".into(),
            }),
        }
    }
}
