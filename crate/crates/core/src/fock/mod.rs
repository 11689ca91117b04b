//! Exact sparse Fock-space engine.
//!
//! A basis state `|κ_1 … κ_M⟩ = p_1^{κ_1} ⋯ p_M^{κ_M} |vac⟩` is keyed by a
//! `u64` holding `κ_1` in the most significant used bit, so numeric key order
//! is the lexicographic order of occupation strings.

mod scalar;
mod span;

use std::collections::BTreeMap;
use std::fmt;

pub use scalar::{ParseScalarError, Scalar};
pub use span::Span;

use crate::error::FockError;
use crate::majorana::{MajoranaOperator, Pauli, PauliOperator, Phase};

/// Largest supported mode count for packed occupation keys.
pub const MAX_MODES: usize = 62;

#[derive(Clone, PartialEq, Eq)]
pub struct FockVector {
    modes: usize,
    amps: BTreeMap<u64, Scalar>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Chirality {
    Positive,
    Negative,
    Mixed,
    /// The zero vector has no chirality.
    Zero,
}

impl FockVector {
    pub fn zero(modes: usize) -> Result<Self, FockError> {
        if modes > MAX_MODES {
            return Err(FockError::TooManyModes {
                modes,
                max: MAX_MODES,
            });
        }
        Ok(Self {
            modes,
            amps: BTreeMap::new(),
        })
    }

    pub fn vacuum(modes: usize) -> Result<Self, FockError> {
        Self::basis(modes, 0)
    }

    pub fn basis(modes: usize, key: u64) -> Result<Self, FockError> {
        let mut v = Self::zero(modes)?;
        v.amps.insert(key, Scalar::one());
        Ok(v)
    }

    /// Basis state from an occupation string such as `"01010101"`.
    pub fn from_occupations(bits: &str) -> Result<Self, FockError> {
        let key = parse_key(bits).map_err(|reason| FockError::Parse { line: 0, reason })?;
        Self::basis(bits.len(), key)
    }

    /// Sums terms, dropping zeros.
    pub fn from_terms<I>(modes: usize, terms: I) -> Result<Self, FockError>
    where
        I: IntoIterator<Item = (u64, Scalar)>,
    {
        let mut v = Self::zero(modes)?;
        for (k, s) in terms {
            v.add_term(k, &s);
        }
        Ok(v)
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn is_zero(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Scalar)> + '_ {
        self.amps.iter().map(|(&k, s)| (k, s))
    }

    pub fn keys(&self) -> impl Iterator<Item = u64> + '_ {
        self.amps.keys().copied()
    }

    pub fn amplitude(&self, key: u64) -> Scalar {
        self.amps.get(&key).cloned().unwrap_or_default()
    }

    /// Occupation string of a key in this vector's mode count.
    pub fn occupation_string(&self, key: u64) -> String {
        key_string(self.modes, key)
    }

    /// Bit mask of mode `I` (1-based).
    #[inline]
    pub fn mode_bit(&self, mode: usize) -> u64 {
        1u64 << (self.modes - mode)
    }

    fn add_term(&mut self, key: u64, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        let entry = self.amps.entry(key).or_default();
        *entry += s;
        if entry.is_zero() {
            self.amps.remove(&key);
        }
    }

    fn check_modes(&self, other: &Self) -> Result<(), FockError> {
        if self.modes != other.modes {
            return Err(FockError::ModeMismatch {
                left: self.modes,
                right: other.modes,
            });
        }
        Ok(())
    }

    fn check_mode_index(&self, mode: usize) -> Result<(), FockError> {
        if mode == 0 || mode > self.modes {
            return Err(FockError::ModeOutOfRange {
                index: mode,
                modes: self.modes,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, FockError> {
        self.check_modes(other)?;
        let mut out = self.clone();
        for (k, s) in other.terms() {
            out.add_term(k, s);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FockError> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self {
                modes: self.modes,
                amps: BTreeMap::new(),
            };
        }
        Self {
            modes: self.modes,
            amps: self.amps.iter().map(|(&k, a)| (k, a * s)).collect(),
        }
    }

    pub fn scale_phase(&self, p: Phase) -> Self {
        Self {
            modes: self.modes,
            amps: self
                .amps
                .iter()
                .map(|(&k, a)| (k, a.times_phase(p)))
                .collect(),
        }
    }

    /// `(-1)^{κ_1 + … + κ_{I-1}}` as a bool (true = negative).
    #[inline]
    fn string_sign(&self, key: u64, mode: usize) -> bool {
        (key >> (self.modes - mode + 1)).count_ones() % 2 == 1
    }

    /// `p_I`: occupies mode `I` with the Jordan–Wigner string sign.
    pub fn create(&self, mode: usize) -> Result<Self, FockError> {
        self.check_mode_index(mode)?;
        let bit = self.mode_bit(mode);
        let mut out = Self::zero(self.modes)?;
        for (k, a) in self.terms() {
            if k & bit == 0 {
                let s = Phase::sign(self.string_sign(k, mode));
                out.add_term(k | bit, &a.times_phase(s));
            }
        }
        Ok(out)
    }

    /// `n_I`: empties mode `I` with the Jordan–Wigner string sign.
    pub fn annihilate(&self, mode: usize) -> Result<Self, FockError> {
        self.check_mode_index(mode)?;
        let bit = self.mode_bit(mode);
        let mut out = Self::zero(self.modes)?;
        for (k, a) in self.terms() {
            if k & bit != 0 {
                let s = Phase::sign(self.string_sign(k, mode));
                out.add_term(k & !bit, &a.times_phase(s));
            }
        }
        Ok(out)
    }

    /// Image of a basis key under a Majorana monomial: `op |key⟩ = phase |key'⟩`.
    ///
    /// Applies `c_μ` right to left with `c_{2I-1} = p_I + n_I` and
    /// `c_{2I} = i(p_I − n_I)`.
    pub fn majorana_on_key(&self, op: &MajoranaOperator, key: u64) -> (Phase, u64) {
        let mut phase = op.phase();
        let mut k = key;
        for mu in op.indices().into_iter().rev() {
            let mode = mu.div_ceil(2);
            let bit = self.mode_bit(mode);
            phase *= Phase::sign(self.string_sign(k, mode));
            let occupied = k & bit != 0;
            if mu % 2 == 0 {
                phase *= if occupied { Phase::MINUS_I } else { Phase::I };
            }
            k ^= bit;
        }
        (phase, k)
    }

    pub fn apply_majorana(&self, op: &MajoranaOperator) -> Result<Self, FockError> {
        if op.modes() != self.modes {
            return Err(FockError::ModeMismatch {
                left: op.modes(),
                right: self.modes,
            });
        }
        let mut out = Self::zero(self.modes)?;
        for (k, a) in self.terms() {
            let (p, k2) = self.majorana_on_key(op, k);
            out.add_term(k2, &a.times_phase(p));
        }
        Ok(out)
    }

    /// Acts with a Pauli string, qubit `I` being mode `I`
    /// (`Z|0⟩ = |0⟩`, `X|0⟩ = |1⟩`, `Y|0⟩ = i|1⟩`).
    pub fn apply_pauli(&self, op: &PauliOperator) -> Result<Self, FockError> {
        if op.qubits() != self.modes {
            return Err(FockError::ModeMismatch {
                left: op.qubits(),
                right: self.modes,
            });
        }
        let mut out = Self::zero(self.modes)?;
        for (k, a) in self.terms() {
            let mut phase = op.phase();
            let mut k2 = k;
            for q in 1..=self.modes {
                let bit = self.mode_bit(q);
                let one = k & bit != 0;
                match op.letter(q) {
                    Pauli::I => {}
                    Pauli::X => k2 ^= bit,
                    Pauli::Z => phase *= Phase::sign(one),
                    Pauli::Y => {
                        k2 ^= bit;
                        phase *= if one { Phase::MINUS_I } else { Phase::I };
                    }
                }
            }
            out.add_term(k2, &a.times_phase(phase));
        }
        Ok(out)
    }

    /// Hermitian inner product, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Result<Scalar, FockError> {
        self.check_modes(other)?;
        let (small, large, conj_small) = if self.len() <= other.len() {
            (self, other, true)
        } else {
            (other, self, false)
        };
        let mut acc = Scalar::zero();
        for (k, a) in small.terms() {
            if let Some(b) = large.amps.get(&k) {
                acc += &if conj_small { &a.conj() * b } else { &b.conj() * a };
            }
        }
        Ok(acc)
    }

    pub fn norm_sq(&self) -> Scalar {
        self.inner(self).expect("same vector")
    }

    /// Decomposition into particle-number sectors.
    pub fn sectors(&self) -> BTreeMap<usize, FockVector> {
        let mut out: BTreeMap<usize, FockVector> = BTreeMap::new();
        for (k, a) in self.terms() {
            out.entry(k.count_ones() as usize)
                .or_insert_with(|| Self {
                    modes: self.modes,
                    amps: BTreeMap::new(),
                })
                .add_term(k, a);
        }
        out
    }

    pub fn chirality_sector(&self) -> Chirality {
        let mut even = false;
        let mut odd = false;
        for k in self.keys() {
            if k.count_ones() % 2 == 0 {
                even = true;
            } else {
                odd = true;
            }
        }
        match (even, odd) {
            (false, false) => Chirality::Zero,
            (true, false) => Chirality::Positive,
            (false, true) => Chirality::Negative,
            (true, true) => Chirality::Mixed,
        }
    }

    /// State-file text: one `±a/b±c/d*i |bits⟩` line per nonzero term.
    pub fn to_state_string(&self) -> String {
        let mut out = String::new();
        for (k, a) in self.terms() {
            out.push_str(&a.to_canonical_string());
            out.push_str(" |");
            out.push_str(&key_string(self.modes, k));
            out.push_str("⟩\n");
        }
        out
    }

    /// Parses the state-file format. Blank lines and `#` comments are
    /// ignored; `>` is accepted in place of `⟩`. `modes` is required only
    /// for an empty file.
    pub fn parse_state(text: &str, modes: Option<usize>) -> Result<Self, FockError> {
        let mut terms = Vec::new();
        let mut found_modes = modes;
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |reason: String| FockError::Parse { line: n + 1, reason };
            let bar = line
                .find('|')
                .ok_or_else(|| err("missing |bits⟩".into()))?;
            let amp: Scalar = line[..bar]
                .trim()
                .parse()
                .map_err(|e: ParseScalarError| err(e.to_string()))?;
            let bits = line[bar + 1..]
                .trim()
                .trim_end_matches(['⟩', '>'])
                .trim();
            let key = parse_key(bits).map_err(err)?;
            match found_modes {
                Some(m) if m != bits.len() => {
                    return Err(err(format!("expected {m} modes, found {}", bits.len())))
                }
                _ => found_modes = Some(bits.len()),
            }
            terms.push((key, amp));
        }
        let m = found_modes.ok_or(FockError::Parse {
            line: 0,
            reason: "empty state needs an explicit mode count".into(),
        })?;
        Self::from_terms(m, terms)
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (k, a)) in self.terms().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({a})|{}⟩", key_string(self.modes, k))?;
        }
        Ok(())
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fock[{}]({self})", self.modes)
    }
}

pub fn key_string(modes: usize, key: u64) -> String {
    (1..=modes)
        .map(|i| if key >> (modes - i) & 1 == 1 { '1' } else { '0' })
        .collect()
}

fn parse_key(bits: &str) -> Result<u64, String> {
    if bits.len() > MAX_MODES {
        return Err(format!("more than {MAX_MODES} modes"));
    }
    bits.chars().try_fold(0u64, |acc, c| match c {
        '0' => Ok(acc << 1),
        '1' => Ok(acc << 1 | 1),
        other => Err(format!("invalid occupation character {other:?}")),
    })
}

/// The chirality operator `Γ = (-i)^M c_1 c_2 ⋯ c_{2M}`.
pub fn chirality(modes: usize) -> MajoranaOperator {
    let support = crate::gf2::BitVec::ones(2 * modes);
    MajoranaOperator::from_support(Phase::from_exponent((3 * modes) as u32), support)
}
