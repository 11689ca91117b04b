use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::E8Error;
use crate::fock::{FockVector, Scalar};
use crate::majorana::{MajoranaOperator, Phase};

/// Degrees `2p` of the basic Weyl invariants.
pub const DEGREES: [u32; 8] = [2, 8, 12, 14, 18, 20, 24, 30];

/// A rational point with all coordinates distinct and nonzero, used as the
/// generic point for the Jacobian rank check.
pub const GENERIC_POINT: [(i64, i64); 8] = [
    (3, 7),
    (-2, 5),
    (1, 3),
    (5, 11),
    (-4, 13),
    (7, 17),
    (2, 19),
    (-6, 23),
];

pub type Root = [BigRational; 8];
pub type Amplitudes = [Scalar; 8];

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rational_point(p: &[(i64, i64); 8]) -> [BigRational; 8] {
    std::array::from_fn(|i| q(p[i].0, p[i].1))
}

pub fn as_amplitudes(p: &[BigRational; 8]) -> Amplitudes {
    std::array::from_fn(|i| Scalar::real(p[i].clone()))
}

/// The 240 roots: `±e_p ± e_q` and `(±½)^8` with an even number of minus signs.
#[derive(Clone, Debug)]
pub struct E8RootSystem {
    roots: Vec<Root>,
}

impl Default for E8RootSystem {
    fn default() -> Self {
        Self::new()
    }
}

impl E8RootSystem {
    pub fn new() -> Self {
        let mut roots = Vec::with_capacity(240);
        for p in 0..8 {
            for r in p + 1..8 {
                for sp in [1, -1] {
                    for sr in [1, -1] {
                        let mut v: Root = std::array::from_fn(|_| BigRational::zero());
                        v[p] = q(sp, 1);
                        v[r] = q(sr, 1);
                        roots.push(v);
                    }
                }
            }
        }
        for mask in 0u32..256 {
            if mask.count_ones() % 2 == 0 {
                roots.push(std::array::from_fn(|i| {
                    if mask >> i & 1 == 1 {
                        q(-1, 2)
                    } else {
                        q(1, 2)
                    }
                }));
            }
        }
        Self { roots }
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn integer_roots(&self) -> usize {
        self.roots.iter().filter(|r| r.iter().all(|x| x.is_integer())).count()
    }

    pub fn contains(&self, v: &Root) -> bool {
        self.roots.iter().any(|r| r == v)
    }

    /// `e_s(Ψ) = α_s · Ψ` for every root, in root order.
    pub fn root_values(&self, psi: &Amplitudes) -> Vec<Scalar> {
        self.roots.iter().map(|r| dot(r, psi)).collect()
    }

    /// `Π_{2p}(Ψ) = Σ_s e_s(Ψ)^{2p}` for `2p` in [`DEGREES`].
    pub fn evaluate_invariants(&self, psi: &Amplitudes) -> [Scalar; 8] {
        let values = self.root_values(psi);
        let mut out: [Scalar; 8] = std::array::from_fn(|_| Scalar::zero());
        for e in &values {
            let e2 = e * e;
            let mut pow = e2.clone();
            let mut deg = 2;
            for (slot, &d) in out.iter_mut().zip(DEGREES.iter()) {
                while deg < d {
                    pow = &pow * &e2;
                    deg += 2;
                }
                *slot += &pow;
            }
        }
        out
    }

    /// `r_α(Ψ) = Ψ − (α·Ψ) α`; errors unless `α` is one of the roots.
    pub fn reflect(&self, alpha: &Root, psi: &Amplitudes) -> Result<Amplitudes, E8Error> {
        if !self.contains(alpha) {
            return Err(E8Error::NotARoot);
        }
        let a = dot(alpha, psi);
        Ok(std::array::from_fn(|i| &psi[i] - &a.scale(&alpha[i])))
    }

    /// Reflection of a root by a root, as rationals.
    pub fn reflect_root(&self, alpha: &Root, v: &Root) -> Result<Root, E8Error> {
        if !self.contains(alpha) {
            return Err(E8Error::NotARoot);
        }
        let a: BigRational = alpha.iter().zip(v).map(|(x, y)| x * y).sum();
        Ok(std::array::from_fn(|i| &v[i] - &a * &alpha[i]))
    }

    /// `J_{ki} = ∂Π_{2p_k}/∂Ψ_i = 2p_k Σ_s e_s^{2p_k − 1} α_{s,i}` at a rational point.
    pub fn jacobian(&self, psi: &[BigRational; 8]) -> Vec<Vec<BigRational>> {
        let mut jac = vec![vec![BigRational::zero(); 8]; 8];
        for r in &self.roots {
            let e: BigRational = r.iter().zip(psi).map(|(a, x)| a * x).sum();
            if e.is_zero() {
                continue;
            }
            for (k, &d) in DEGREES.iter().enumerate() {
                let coeff = BigRational::from_integer(d.into()) * pow(&e, d - 1);
                for i in 0..8 {
                    if !r[i].is_zero() {
                        jac[k][i] += &coeff * &r[i];
                    }
                }
            }
        }
        jac
    }

    /// Rank over the rationals of the invariant Jacobian at `psi`.
    pub fn jacobian_rank_check(&self, psi: &[BigRational; 8]) -> usize {
        rational_rank(self.jacobian(psi))
    }
}

fn dot(r: &Root, psi: &Amplitudes) -> Scalar {
    let mut acc = Scalar::zero();
    for (a, x) in r.iter().zip(psi) {
        if !a.is_zero() {
            acc += &x.scale(a);
        }
    }
    acc
}

fn pow(x: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Row rank by exact Gaussian elimination.
pub fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        let (upper, lower) = m.split_at_mut(rank + 1);
        let pivot_row = &upper[rank];
        for row in lower.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot;
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x -= &f * p;
            }
        }
        rank += 1;
    }
    rank
}

/// A nonvanishing element `⟨B_a| c_μ c_ν |B_b⟩`; indices are 0-based for
/// basis vectors and 1-based for Majorana modes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanViolation {
    pub a: usize,
    pub b: usize,
    pub mu: usize,
    pub nu: usize,
    pub value: Scalar,
}

#[derive(Clone, Debug)]
pub struct CartanReport {
    pub checked: usize,
    pub violations: Vec<CartanViolation>,
}

impl CartanReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Computes `⟨B_a| c_μ c_ν |B_b⟩` for all `μ < ν` and `a ≠ b`, listing every
/// nonzero element.
pub fn cartan_commutativity_check(basis: &[FockVector]) -> Result<CartanReport, crate::error::FockError> {
    let mut checked = 0;
    let mut violations = Vec::new();
    let Some(first) = basis.first() else {
        return Ok(CartanReport { checked, violations });
    };
    let modes = first.modes();
    let n = 2 * modes;
    for mu in 1..=n {
        for nu in mu + 1..=n {
            let op = MajoranaOperator::from_product(modes, Phase::ONE, &[mu, nu])
                .expect("indices in range");
            for (b, vb) in basis.iter().enumerate() {
                let img = vb.apply_majorana(&op)?;
                for (a, va) in basis.iter().enumerate() {
                    if a == b {
                        continue;
                    }
                    checked += 1;
                    let value = va.inner(&img)?;
                    if !value.is_zero() {
                        violations.push(CartanViolation { a, b, mu, nu, value });
                    }
                }
            }
        }
    }
    violations.sort_by_key(|v| (v.a, v.b, v.mu, v.nu));
    Ok(CartanReport { checked, violations })
}
