#![allow(dead_code)]

use fermicode::e8::Amplitudes;
use fermicode::fock::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rational_point(rng: &mut ChaCha8Rng) -> [BigRational; 8] {
    std::array::from_fn(|_| {
        let n: i64 = rng.gen_range(-9..=9);
        let d: i64 = rng.gen_range(1..=7);
        BigRational::new(BigInt::from(n), BigInt::from(d))
    })
}

pub fn amplitudes(p: &[BigRational; 8]) -> Amplitudes {
    std::array::from_fn(|i| Scalar::real(p[i].clone()))
}

/// Integer oracle for E8 root values: with `L` the common denominator of `p`,
/// returns the sorted multiset `{(2α)·(Lp)}` over all 240 roots, built from
/// the doubled integer roots independently of the library.
pub fn scaled_root_values(p: &[i64; 8]) -> Vec<i64> {
    let mut out = Vec::with_capacity(240);
    for a in 0..8 {
        for b in a + 1..8 {
            for sa in [2i64, -2] {
                for sb in [2i64, -2] {
                    out.push(sa * p[a] + sb * p[b]);
                }
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            out.push((0..8).map(|i| if mask >> i & 1 == 1 { -p[i] } else { p[i] }).sum());
        }
    }
    out.sort_unstable();
    out
}

/// Clears denominators of a rational point.
pub fn integer_scaled(p: &[BigRational; 8]) -> [i64; 8] {
    let l = p.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    std::array::from_fn(|i| (p[i].numer() * (&l / p[i].denom())).to_i64().unwrap())
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
}
