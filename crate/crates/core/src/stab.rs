//! Majorana stabilizer codes: validation, codespace, distance, syndromes and
//! logical-operator checks.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::CodeError;
use crate::fock::{FockVector, Scalar, Span};
use crate::gf2::{symplectic_complement, BitVec, Echelon, Gf2Matrix};
use crate::majorana::{MajoranaOperator, Phase};

/// A reason a generator list fails to define a stabilizer code. Generator
/// numbers are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ModeMismatch { generator: usize, modes: usize, expected: usize },
    NonCommuting { first: usize, second: usize },
    OddWeight { generator: usize },
    SquareNotIdentity { generator: usize },
    ContainsMinusOne { combination: Vec<usize>, product: Phase },
    DependentSupports { combination: Vec<usize> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ModeMismatch { generator, modes, expected } => write!(
                f,
                "generator {generator} acts on {modes} modes, expected {expected}"
            ),
            Violation::NonCommuting { first, second } => {
                write!(f, "generators {first} and {second} anticommute")
            }
            Violation::OddWeight { generator } => write!(f, "generator {generator} has odd weight"),
            Violation::SquareNotIdentity { generator } => {
                write!(f, "generator {generator} squares to -1")
            }
            Violation::ContainsMinusOne { combination, product } => write!(
                f,
                "product of generators {combination:?} is {product} times the identity"
            ),
            Violation::DependentSupports { combination } => write!(
                f,
                "generators {combination:?} multiply to the identity"
            ),
        }
    }
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::ModeMismatch { .. } => "mode-mismatch",
            Violation::NonCommuting { .. } => "non-commuting",
            Violation::OddWeight { .. } => "odd-weight",
            Violation::SquareNotIdentity { .. } => "square-not-identity",
            Violation::ContainsMinusOne { .. } => "contains-minus-one",
            Violation::DependentSupports { .. } => "dependent-supports",
        }
    }
}

/// Checks every stabilizer condition and lists all failures.
pub fn violations(modes: usize, generators: &[MajoranaOperator]) -> Vec<Violation> {
    let mut out = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        if g.modes() != modes {
            out.push(Violation::ModeMismatch {
                generator: i + 1,
                modes: g.modes(),
                expected: modes,
            });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for (i, a) in generators.iter().enumerate() {
        for (j, b) in generators.iter().enumerate().skip(i + 1) {
            if !a.commutes(b).expect("mode counts checked") {
                out.push(Violation::NonCommuting {
                    first: i + 1,
                    second: j + 1,
                });
            }
        }
    }
    for (i, g) in generators.iter().enumerate() {
        if !g.is_even() {
            out.push(Violation::OddWeight { generator: i + 1 });
        }
        if g.square() != Phase::ONE {
            out.push(Violation::SquareNotIdentity { generator: i + 1 });
        }
    }
    let supports = support_matrix(modes, generators);
    for dep in Echelon::new(&supports).dependencies() {
        let combination = dep.indices();
        let mut product = MajoranaOperator::identity(modes);
        for &g in &combination {
            product = product.mul(&generators[g - 1]).expect("mode counts checked");
        }
        debug_assert!(product.is_identity());
        if product.phase() == Phase::ONE {
            out.push(Violation::DependentSupports { combination });
        } else {
            out.push(Violation::ContainsMinusOne {
                combination,
                product: product.phase(),
            });
        }
    }
    out
}

fn support_matrix(modes: usize, generators: &[MajoranaOperator]) -> Gf2Matrix {
    Gf2Matrix::from_rows(2 * modes, generators.iter().map(|g| g.support().clone()).collect())
        .expect("supports share a length")
}

/// Syndrome bits, one per generator in generator order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Syndrome {
    bits: Vec<bool>,
}

impl Syndrome {
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Integer with generator `j` contributing `2^{j-1}`.
    pub fn value(&self) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .map(|(j, &b)| (b as u64) << j)
            .sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.bits.iter().all(|&b| !b)
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Distance {
    /// Smallest logical weight with the lexicographically first witness of that weight.
    Exact { distance: usize, witness: MajoranaOperator },
    /// No logical of weight up to the budget.
    AboveBudget { max_weight: usize },
    /// `k = 0`: every centralizer element is a stabilizer.
    NoLogicals,
}

impl Distance {
    pub fn exact(&self) -> Option<usize> {
        match self {
            Distance::Exact { distance, .. } => Some(*distance),
            _ => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Exact { distance, .. } => write!(f, "{distance}"),
            Distance::AboveBudget { max_weight } => write!(f, ">{max_weight}"),
            Distance::NoLogicals => f.write_str("none"),
        }
    }
}

/// How a logical candidate fails to act as expected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LogicalMismatch {
    AnticommutesWith { generator: usize },
    InStabilizer,
    /// `op |B_index⟩` is not the expected multiple of the expected target.
    Deviates { index: usize, detail: String },
}

impl fmt::Display for LogicalMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogicalMismatch::AnticommutesWith { generator } => {
                write!(f, "anticommutes with generator {generator}")
            }
            LogicalMismatch::InStabilizer => f.write_str("lies in the stabilizer group"),
            LogicalMismatch::Deviates { index, detail } => {
                write!(f, "basis vector {index}: {detail}")
            }
        }
    }
}

/// Outcome of the error-detection (Knill–Laflamme) check over all Majorana
/// operators of bounded weight.
#[derive(Clone, Debug)]
pub struct DetectionReport {
    pub max_weight: usize,
    pub checked: usize,
    /// Operators whose codespace block is not a multiple of the Gram matrix.
    pub failures: Vec<MajoranaOperator>,
}

impl DetectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A validated Majorana stabilizer code.
#[derive(Debug)]
pub struct StabilizerCode {
    modes: usize,
    generators: Vec<MajoranaOperator>,
    supports: Gf2Matrix,
    echelon: Echelon,
    basis: OnceLock<Vec<FockVector>>,
}

impl Clone for StabilizerCode {
    fn clone(&self) -> Self {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        Self {
            modes: self.modes,
            generators: self.generators.clone(),
            supports: self.supports.clone(),
            echelon: self.echelon.clone(),
            basis,
        }
    }
}

impl StabilizerCode {
    /// Validates and builds the code, or returns every violation found.
    pub fn validate(modes: usize, generators: Vec<MajoranaOperator>) -> Result<Self, Vec<Violation>> {
        let v = violations(modes, &generators);
        if !v.is_empty() {
            return Err(v);
        }
        let supports = support_matrix(modes, &generators);
        let echelon = Echelon::new(&supports);
        Ok(Self {
            modes,
            generators,
            supports,
            echelon,
            basis: OnceLock::new(),
        })
    }

    /// Like [`validate`](Self::validate) with the violations folded into a [`CodeError`].
    pub fn new(modes: usize, generators: Vec<MajoranaOperator>) -> Result<Self, CodeError> {
        Self::validate(modes, generators).map_err(|v| {
            CodeError::Invalid(v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; "))
        })
    }

    /// Attaches a preferred codespace basis after checking it spans the codespace.
    pub fn with_basis(self, basis: Vec<FockVector>) -> Result<Self, CodeError> {
        let computed = self.project_codespace()?;
        let want = Span::from_vectors(self.modes, &computed)?;
        let got = Span::from_vectors(self.modes, &basis)?;
        if got.dim() != basis.len() {
            return Err(CodeError::BasisMismatch("vectors are linearly dependent".into()));
        }
        if !want.same_as(&got)? {
            return Err(CodeError::BasisMismatch(format!(
                "span of {} vectors differs from the {}-dimensional codespace",
                basis.len(),
                want.dim()
            )));
        }
        let out = Self {
            basis: OnceLock::new(),
            ..self
        };
        let _ = out.basis.set(basis);
        Ok(out)
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn majorana_modes(&self) -> usize {
        2 * self.modes
    }

    pub fn generators(&self) -> &[MajoranaOperator] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn support_matrix(&self) -> &Gf2Matrix {
        &self.supports
    }

    /// Number of logical qubits, `M − rank`.
    pub fn k(&self) -> usize {
        self.modes - self.echelon.rank()
    }

    pub fn in_stabilizer_span(&self, support: &BitVec) -> bool {
        self.echelon.contains(support).expect("support length matches")
    }

    pub fn commutes_with_all(&self, op: &MajoranaOperator) -> Result<bool, CodeError> {
        for g in &self.generators {
            if !g.commutes(op)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Centralizer element outside the stabilizer span.
    pub fn is_logical(&self, op: &MajoranaOperator) -> Result<bool, CodeError> {
        Ok(self.commutes_with_all(op)? && !self.in_stabilizer_span(op.support()))
    }

    pub fn is_stabilized(&self, v: &FockVector) -> Result<bool, CodeError> {
        for g in &self.generators {
            if g.modes() != v.modes() || v.apply_majorana(g)? != *v {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Codespace basis: the attached one if any, otherwise the projector
    /// orbits of computational basis states in lexicographic order, each
    /// scaled to amplitude 1 at its smallest occupation string.
    pub fn codespace(&self) -> &[FockVector] {
        self.basis
            .get_or_init(|| self.project_codespace().expect("validated code"))
    }

    /// Always recomputes the projector-extracted basis.
    pub fn project_codespace(&self) -> Result<Vec<FockVector>, CodeError> {
        let m = self.modes;
        if m > 30 {
            return Err(CodeError::Invalid(format!(
                "codespace extraction enumerates 2^{m} basis states"
            )));
        }
        let probe = FockVector::zero(m)?;
        let mut covered = vec![false; 1usize << m];
        let mut out = Vec::new();
        for start in 0..(1u64 << m) {
            if covered[start as usize] {
                continue;
            }
            // The projector maps |start⟩ to a multiple of the unique
            // stabilized vector on its orbit, or to zero if none exists.
            let mut amps: BTreeMap<u64, Phase> = BTreeMap::new();
            amps.insert(start, Phase::ONE);
            let mut queue = vec![start];
            let mut consistent = true;
            while let Some(key) = queue.pop() {
                let a = amps[&key];
                for g in &self.generators {
                    let (ph, next) = probe.majorana_on_key(g, key);
                    let want = ph * a;
                    match amps.get(&next) {
                        Some(&have) if have != want => consistent = false,
                        Some(_) => {}
                        None => {
                            amps.insert(next, want);
                            queue.push(next);
                        }
                    }
                }
            }
            for &k in amps.keys() {
                covered[k as usize] = true;
            }
            if consistent {
                out.push(FockVector::from_terms(
                    m,
                    amps.into_iter().map(|(k, p)| (k, Scalar::from_phase(p))),
                )?);
            }
        }
        Ok(out)
    }

    pub fn syndrome(&self, error: &MajoranaOperator) -> Result<Syndrome, CodeError> {
        let bits = self
            .generators
            .iter()
            .map(|g| g.commutes(error).map(|c| !c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Syndrome { bits })
    }

    /// Syndromes of the single-Majorana errors `c_1 … c_{2M}`.
    pub fn syndrome_table(&self) -> Vec<(usize, Syndrome)> {
        (1..=self.majorana_modes())
            .map(|mu| {
                let c = MajoranaOperator::single(self.modes, mu).expect("index in range");
                (mu, self.syndrome(&c).expect("same mode count"))
            })
            .collect()
    }

    /// Minimum logical weight, searching supports of weight `1..=max_weight`.
    /// `jobs = 0` uses the global thread pool.
    pub fn distance(&self, max_weight: usize, jobs: usize) -> Distance {
        if self.k() == 0 {
            return Distance::NoLogicals;
        }
        let n = self.majorana_modes();
        assert!(n <= 128, "distance search supports at most 128 Majorana modes");
        let gens: Vec<u128> = self.generators.iter().map(|g| mask(g.support())).collect();
        let basis = MaskEchelon::new(&gens);
        let run = || {
            for w in 1..=max_weight.min(n) {
                let hit = (0..n)
                    .into_par_iter()
                    .map(|first| first_logical(n, w, first, &gens, &basis))
                    .find_first(Option::is_some)
                    .flatten();
                if let Some(m) = hit {
                    let support = BitVec::from_indices(n, &unmask(m)).expect("in range");
                    return Distance::Exact {
                        distance: w,
                        witness: MajoranaOperator::from_support(Phase::ONE, support),
                    };
                }
            }
            Distance::AboveBudget { max_weight }
        };
        if jobs == 0 {
            run()
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .expect("thread pool")
                .install(run)
        }
    }

    /// Basis of the centralizer's GF(2) image: every support symplectically
    /// orthogonal to all generators. Has `M + k` elements, all with phase +1.
    pub fn centralizer_generators(&self) -> Vec<MajoranaOperator> {
        symplectic_complement(&self.supports)
            .into_iter()
            .map(|s| MajoranaOperator::from_support(Phase::ONE, s))
            .collect()
    }

    /// How `op` acts on the codespace basis: entry `i` is `Some((j, s))` when
    /// `op |B_i⟩ = s |B_j⟩`, `None` when the image is not a multiple of a
    /// single basis vector.
    pub fn logical_action(&self, op: &MajoranaOperator) -> Result<Vec<Option<(usize, Scalar)>>, CodeError> {
        let basis = self.codespace();
        let mut out = Vec::with_capacity(basis.len());
        for b in basis {
            let w = b.apply_majorana(op)?;
            let found = basis.iter().enumerate().find_map(|(j, t)| {
                let pivot = t.keys().next()?;
                let s = w.amplitude(pivot).div(&t.amplitude(pivot))?;
                (t.scale(&s) == w).then_some((j, s))
            });
            out.push(found);
        }
        Ok(out)
    }

    /// Checks that `op` is a logical operator whose action on the codespace
    /// basis is `op |B_i⟩ = expected[i].1 · |B_{expected[i].0}⟩`.
    pub fn verify_logical(
        &self,
        op: &MajoranaOperator,
        expected: &[(usize, Scalar)],
    ) -> Result<(), LogicalMismatch> {
        for (j, g) in self.generators.iter().enumerate() {
            if !g.commutes(op).unwrap_or(false) {
                return Err(LogicalMismatch::AnticommutesWith { generator: j + 1 });
            }
        }
        if self.in_stabilizer_span(op.support()) {
            return Err(LogicalMismatch::InStabilizer);
        }
        let basis = self.codespace();
        if expected.len() != basis.len() {
            return Err(LogicalMismatch::Deviates {
                index: 0,
                detail: format!("expected {} entries, codespace has {}", expected.len(), basis.len()),
            });
        }
        for (i, (b, (j, s))) in basis.iter().zip(expected).enumerate() {
            let got = b.apply_majorana(op).map_err(|e| LogicalMismatch::Deviates {
                index: i,
                detail: e.to_string(),
            })?;
            let Some(target) = basis.get(*j) else {
                return Err(LogicalMismatch::Deviates {
                    index: i,
                    detail: format!("target index {j} out of range"),
                });
            };
            let want = target.scale(s);
            if got != want {
                let detail = match self.logical_action(op).ok().and_then(|a| a[i].clone()) {
                    Some((jj, ss)) => format!("maps to ({ss}) B_{jj}, expected ({s}) B_{j}"),
                    None => format!("image {got} is not a multiple of a basis vector"),
                };
                return Err(LogicalMismatch::Deviates { index: i, detail });
            }
        }
        Ok(())
    }

    /// Checks that every Majorana monomial of weight `1..=max_weight` has a
    /// codespace block `⟨B_a|E|B_b⟩` equal to `λ ⟨B_a|B_b⟩` for some scalar λ.
    pub fn detection_check(&self, max_weight: usize) -> Result<DetectionReport, CodeError> {
        let basis = self.codespace();
        let n = self.majorana_modes();
        let gram: Vec<Vec<Scalar>> = basis
            .iter()
            .map(|a| basis.iter().map(|b| a.inner(b)).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?;
        let mut checked = 0;
        let mut failures = Vec::new();
        for w in 1..=max_weight.min(n) {
            for combo in Combinations::new(n, w) {
                let idx: Vec<usize> = combo.iter().map(|&c| c + 1).collect();
                let op = MajoranaOperator::from_product(self.modes, Phase::ONE, &idx)?;
                checked += 1;
                let images: Vec<FockVector> = basis
                    .iter()
                    .map(|b| b.apply_majorana(&op))
                    .collect::<Result<_, _>>()?;
                let mut lambda: Option<Scalar> = None;
                let mut ok = true;
                'outer: for (a, ba) in basis.iter().enumerate() {
                    for (b, img) in images.iter().enumerate() {
                        let e = ba.inner(img)?;
                        let g = &gram[a][b];
                        if g.is_zero() {
                            if !e.is_zero() {
                                ok = false;
                                break 'outer;
                            }
                            continue;
                        }
                        let l = e.div(g).expect("nonzero gram entry");
                        match &lambda {
                            None => lambda = Some(l),
                            Some(prev) if *prev != l => {
                                ok = false;
                                break 'outer;
                            }
                            Some(_) => {}
                        }
                    }
                }
                if !ok {
                    failures.push(op);
                }
            }
        }
        Ok(DetectionReport {
            max_weight,
            checked,
            failures,
        })
    }
}

/// Lexicographic `w`-subsets of `0..n`.
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, w: usize) -> Self {
        Self {
            n,
            current: (w <= n).then(|| (0..w).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let w = cur.len();
        let mut nxt = cur.clone();
        let mut i = w;
        while i > 0 {
            i -= 1;
            if nxt[i] < self.n - w + i {
                nxt[i] += 1;
                for t in i + 1..w {
                    nxt[t] = nxt[t - 1] + 1;
                }
                self.current = Some(nxt);
                break;
            }
        }
        Some(cur)
    }
}

fn mask(v: &BitVec) -> u128 {
    v.indices().into_iter().fold(0u128, |m, i| m | 1u128 << (i - 1))
}

fn unmask(m: u128) -> Vec<usize> {
    (0..128).filter(|&i| m >> i & 1 == 1).map(|i| i + 1).collect()
}

#[inline]
fn sym(a: u128, b: u128) -> bool {
    ((a.count_ones() * b.count_ones() + (a & b).count_ones()) & 1) == 1
}

struct MaskEchelon {
    rows: Vec<(u128, u128)>, // (pivot bit, row)
}

impl MaskEchelon {
    fn new(rows: &[u128]) -> Self {
        let mut out: Vec<(u128, u128)> = Vec::new();
        for &r in rows {
            let v = Self::reduce_with(&out, r);
            if v != 0 {
                out.push((v & v.wrapping_neg(), v));
            }
        }
        Self { rows: out }
    }

    fn reduce_with(rows: &[(u128, u128)], mut v: u128) -> u128 {
        for &(p, r) in rows {
            if v & p != 0 {
                v ^= r;
            }
        }
        v
    }

    fn contains(&self, v: u128) -> bool {
        Self::reduce_with(&self.rows, v) == 0
    }
}

/// Lexicographically first logical support of weight `w` whose smallest
/// element is `first` (0-based).
fn first_logical(n: usize, w: usize, first: usize, gens: &[u128], basis: &MaskEchelon) -> Option<u128> {
    if first + w > n {
        return None;
    }
    let head = 1u128 << first;
    for rest in Combinations::new(n - first - 1, w - 1) {
        let m = rest.iter().fold(head, |m, &r| m | 1u128 << (first + 1 + r));
        if gens.iter().all(|&g| !sym(m, g)) && !basis.contains(m) {
            return Some(m);
        }
    }
    None
}
