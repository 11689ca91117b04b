//! Text syntax shared by the CLI and the code-spec files.
//!
//! Majorana form: `c1 c4 c5` (or `c1c4c5`), Pauli form: `XYXYXYXY`. Either may
//! carry a leading phase `+1`, `-1`, `+i`, `-i` (a bare `+`/`-` also works).

use super::{pauli_to_majorana, MajoranaOperator, Pauli, PauliOperator, Phase};
use crate::error::OperatorError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorText {
    Majorana(MajoranaOperator),
    Pauli(PauliOperator),
}

fn parse_err(input: &str, reason: impl Into<String>) -> OperatorError {
    OperatorError::Parse {
        input: input.to_string(),
        reason: reason.into(),
    }
}

fn split_phase(s: &str) -> (Phase, &str) {
    let mut rest = s.trim_start();
    let mut phase = Phase::ONE;
    if let Some(r) = rest.strip_prefix('-') {
        phase = Phase::MINUS_ONE;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    if let Some(r) = rest.strip_prefix('i') {
        phase *= Phase::I;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('1') {
        // `1` only counts as a phase when it stands alone
        if r.is_empty() || r.starts_with(char::is_whitespace) {
            rest = r;
        }
    }
    (phase, rest.trim())
}

/// Parses either syntax. `modes` fixes the number of fermionic modes; when
/// absent it is inferred (Pauli: string length, Majorana: `⌈max μ / 2⌉`).
pub fn parse_operator(input: &str, modes: Option<usize>) -> Result<OperatorText, OperatorError> {
    let (phase, body) = split_phase(input);
    if body.is_empty() {
        let m = modes.ok_or_else(|| parse_err(input, "identity needs an explicit mode count"))?;
        return Ok(OperatorText::Majorana(MajoranaOperator::identity(m).scaled(phase)));
    }
    if body.starts_with('c') {
        let mut indices = Vec::new();
        for tok in body.split(|c: char| c == 'c' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let mu: usize = tok
                .parse()
                .map_err(|_| parse_err(input, format!("bad Majorana index {tok:?}")))?;
            if mu == 0 {
                return Err(parse_err(input, "Majorana indices start at c1"));
            }
            indices.push(mu);
        }
        let needed = indices.iter().max().copied().unwrap_or(0).div_ceil(2);
        let m = match modes {
            Some(m) if m < needed => {
                return Err(OperatorError::IndexOutOfRange {
                    index: indices.iter().max().copied().unwrap_or(0),
                    max: 2 * m,
                })
            }
            Some(m) => m,
            None => needed,
        };
        return Ok(OperatorText::Majorana(MajoranaOperator::from_product(
            m, phase, &indices,
        )?));
    }
    let letters = body
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            other => Err(parse_err(input, format!("unexpected character {other:?}"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(m) = modes {
        if m != letters.len() {
            return Err(parse_err(
                input,
                format!("Pauli string has {} letters, expected {m}", letters.len()),
            ));
        }
    }
    Ok(OperatorText::Pauli(PauliOperator::from_letters(phase, &letters)))
}

/// Parses either syntax and returns the Majorana operator it denotes.
pub fn parse_majorana(input: &str, modes: Option<usize>) -> Result<MajoranaOperator, OperatorError> {
    Ok(match parse_operator(input, modes)? {
        OperatorText::Majorana(m) => m,
        OperatorText::Pauli(p) => pauli_to_majorana(&p),
    })
}
