//! The Majorana group `Maj(2M)` and its Jordan–Wigner image in the Pauli group.
//!
//! An element is `i^k · c_{μ1} c_{μ2} ⋯` with strictly increasing indices.
//! All phase bookkeeping happens in `Z_4`; there is no floating point here.

mod parse;
mod pauli;

use std::fmt;

pub use parse::{parse_majorana, parse_operator, OperatorText};
pub use pauli::{jordan_wigner, Pauli, PauliOperator};

use crate::error::OperatorError;
use crate::gf2::{basis_change_matrices, symplectic_form, BitVec};

/// A phase `i^k`, `k ∈ Z_4`.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_exponent(k: u32) -> Self {
        Phase((k % 4) as u8)
    }

    pub fn exponent(self) -> u32 {
        self.0 as u32
    }

    /// `(-1)^bit`.
    pub fn sign(negative: bool) -> Self {
        if negative {
            Self::MINUS_ONE
        } else {
            Self::ONE
        }
    }

    pub fn inv(self) -> Self {
        Phase((4 - self.0) % 4)
    }

    pub fn conj(self) -> Self {
        self.inv()
    }

    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(2)
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;
    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

impl std::ops::MulAssign for Phase {
    fn mul_assign(&mut self, rhs: Phase) {
        *self = *self * rhs;
    }
}

impl std::ops::Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        self * Phase::MINUS_ONE
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "+1",
            1 => "+i",
            2 => "-1",
            _ => "-i",
        })
    }
}

impl fmt::Debug for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `phase · c_{μ1} ⋯ c_{μw}` on `modes` fermionic modes (`2·modes` Majorana modes).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MajoranaOperator {
    phase: Phase,
    support: BitVec,
}

impl MajoranaOperator {
    pub fn identity(modes: usize) -> Self {
        Self {
            phase: Phase::ONE,
            support: BitVec::zeros(2 * modes),
        }
    }

    /// The product `phase · c_{i1} c_{i2} ⋯` taken in the given order.
    ///
    /// Indices need not be sorted or distinct; the result is brought to
    /// standard order with the correct sign.
    pub fn from_product(modes: usize, phase: Phase, indices: &[usize]) -> Result<Self, OperatorError> {
        let mut out = Self::identity(modes).scaled(phase);
        for &mu in indices {
            out = out.mul(&Self::single(modes, mu)?)?;
        }
        Ok(out)
    }

    /// `phase · c_A` for a support already in standard order.
    pub fn from_support(phase: Phase, support: BitVec) -> Self {
        assert!(support.len().is_multiple_of(2), "Majorana support length must be even");
        Self { phase, support }
    }

    /// The single Majorana mode `c_μ`.
    pub fn single(modes: usize, mu: usize) -> Result<Self, OperatorError> {
        let support = BitVec::from_indices(2 * modes, &[mu]).map_err(|_| {
            OperatorError::IndexOutOfRange {
                index: mu,
                max: 2 * modes,
            }
        })?;
        Ok(Self {
            phase: Phase::ONE,
            support,
        })
    }

    pub fn modes(&self) -> usize {
        self.support.len() / 2
    }

    pub fn majorana_modes(&self) -> usize {
        self.support.len()
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn support(&self) -> &BitVec {
        &self.support
    }

    pub fn indices(&self) -> Vec<usize> {
        self.support.indices()
    }

    pub fn weight(&self) -> usize {
        self.support.weight()
    }

    pub fn is_even(&self) -> bool {
        self.weight().is_multiple_of(2)
    }

    pub fn is_identity(&self) -> bool {
        self.support.is_zero()
    }

    /// Sign picked up by reversing a standard-ordered product of `w` modes.
    fn reversal_sign(&self) -> Phase {
        let w = self.weight();
        Phase::sign((w * w.saturating_sub(1) / 2) % 2 == 1)
    }

    pub fn is_hermitian(&self) -> bool {
        self.phase * self.phase * self.reversal_sign() == Phase::ONE
    }

    /// `(ω c_A)^2 = ω^2 (-1)^{w(w-1)/2}`, always a phase.
    pub fn square(&self) -> Phase {
        self.phase * self.phase * self.reversal_sign()
    }

    pub fn adjoint(&self) -> Self {
        Self {
            phase: self.phase.conj() * self.reversal_sign(),
            support: self.support.clone(),
        }
    }

    pub fn scaled(&self, phase: Phase) -> Self {
        Self {
            phase: self.phase * phase,
            support: self.support.clone(),
        }
    }

    pub fn with_phase(&self, phase: Phase) -> Self {
        Self {
            phase,
            support: self.support.clone(),
        }
    }

    fn check_modes(&self, other: &Self) -> Result<(), OperatorError> {
        if self.support.len() != other.support.len() {
            return Err(OperatorError::ModeMismatch {
                left: self.modes(),
                right: other.modes(),
            });
        }
        Ok(())
    }

    /// Group product `self · other` in standard order.
    ///
    /// Each `c_b` of the right factor moves left past every `c_a` with `a > b`
    /// in the left factor; equal modes then cancel via `c² = 1`.
    pub fn mul(&self, other: &Self) -> Result<Self, OperatorError> {
        self.check_modes(other)?;
        let left = self.support.indices();
        let mut swaps = 0usize;
        for b in other.support.indices() {
            swaps += left.len() - left.partition_point(|&a| a <= b);
        }
        Ok(Self {
            phase: self.phase * other.phase * Phase::sign(swaps % 2 == 1),
            support: self.support.xor(&other.support),
        })
    }

    pub fn commutes(&self, other: &Self) -> Result<bool, OperatorError> {
        self.check_modes(other)?;
        Ok(!symplectic_form(&self.support, &other.support).expect("lengths checked"))
    }
}

impl fmt::Display for MajoranaOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.phase)?;
        for mu in self.support.indices() {
            write!(f, " c{mu}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MajoranaOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Maj[{}]({self})", self.modes())
    }
}

pub fn multiply(a: &MajoranaOperator, b: &MajoranaOperator) -> Result<MajoranaOperator, OperatorError> {
    a.mul(b)
}

/// Jordan–Wigner image of a Majorana operator.
///
/// The z/x bits come from `v̂ = A v`; the phase comes from multiplying the
/// Pauli strings of the individual `c_μ` in standard order.
pub fn majorana_to_pauli(op: &MajoranaOperator) -> PauliOperator {
    let modes = op.modes();
    let (a, _) = basis_change_matrices(modes);
    let symplectic = a.mul_vec(op.support()).expect("square basis change");
    let mut product = PauliOperator::identity(modes).scaled(op.phase());
    for mu in op.indices() {
        product = product
            .mul(&jordan_wigner(modes, mu))
            .expect("same qubit count");
    }
    assert_eq!(
        product.symplectic(),
        symplectic,
        "Jordan-Wigner product disagrees with the basis change"
    );
    product
}

/// Inverse of [`majorana_to_pauli`], exact including the phase.
pub fn pauli_to_majorana(op: &PauliOperator) -> MajoranaOperator {
    let modes = op.qubits();
    let (_, b) = basis_change_matrices(modes);
    let support = b.mul_vec(&op.symplectic()).expect("square basis change");
    let bare = MajoranaOperator::from_support(Phase::ONE, support);
    let image = majorana_to_pauli(&bare);
    bare.scaled(op.phase() * image.phase().inv())
}
