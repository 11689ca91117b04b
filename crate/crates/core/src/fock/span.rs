use super::{FockVector, Scalar};
use crate::error::FockError;

/// Exact linear span of Fock vectors over the Gaussian rationals.
///
/// Kept in echelon form: each stored vector has amplitude 1 at its pivot key
/// and zero at the pivots of all earlier vectors.
#[derive(Clone, Debug)]
pub struct Span {
    modes: usize,
    rows: Vec<(u64, FockVector)>,
}

impl Span {
    pub fn new(modes: usize) -> Self {
        Self {
            modes,
            rows: Vec::new(),
        }
    }

    pub fn from_vectors<'a, I>(modes: usize, vectors: I) -> Result<Self, FockError>
    where
        I: IntoIterator<Item = &'a FockVector>,
    {
        let mut s = Self::new(modes);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &FockVector) -> Result<FockVector, FockError> {
        if v.modes() != self.modes {
            return Err(FockError::ModeMismatch {
                left: self.modes,
                right: v.modes(),
            });
        }
        let mut r = v.clone();
        for (pivot, row) in &self.rows {
            let c = r.amplitude(*pivot);
            if !c.is_zero() {
                r = r.sub(&row.scale(&c))?;
            }
        }
        Ok(r)
    }

    /// Adds `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &FockVector) -> Result<bool, FockError> {
        let r = self.reduce(v)?;
        let Some(pivot) = r.keys().next() else {
            return Ok(false);
        };
        let inv = r.amplitude(pivot).inv().expect("nonzero pivot");
        self.rows.push((pivot, r.scale(&inv)));
        Ok(true)
    }

    pub fn contains(&self, v: &FockVector) -> Result<bool, FockError> {
        Ok(self.reduce(v)?.is_zero())
    }

    pub fn same_as(&self, other: &Span) -> Result<bool, FockError> {
        if self.dim() != other.dim() {
            return Ok(false);
        }
        for (_, row) in &other.rows {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coefficients expressing `v` in terms of `basis`, if it lies in their span.
    /// `basis` must be linearly independent.
    pub fn coordinates(basis: &[FockVector], v: &FockVector) -> Result<Option<Vec<Scalar>>, FockError> {
        // Gram system G c = b solved exactly by elimination.
        let n = basis.len();
        let mut m: Vec<Vec<Scalar>> = Vec::with_capacity(n);
        for a in basis {
            let mut row = Vec::with_capacity(n + 1);
            for b in basis {
                row.push(a.inner(b)?);
            }
            row.push(a.inner(v)?);
            m.push(row);
        }
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Ok(None);
            };
            m.swap(col, p);
            let inv = m[col][col].inv().expect("nonzero");
            for x in m[col].iter_mut() {
                *x = &*x * &inv;
            }
            let pivot_row = m[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        *x = &*x - &(p * &f);
                    }
                }
            }
        }
        let coeffs: Vec<Scalar> = m.into_iter().map(|row| row[n].clone()).collect();
        let mut recon = FockVector::zero(v.modes())?;
        for (c, b) in coeffs.iter().zip(basis) {
            recon = recon.add(&b.scale(c))?;
        }
        Ok((recon == *v).then_some(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_basics() {
        let a = FockVector::from_occupations("01").unwrap();
        let b = FockVector::from_occupations("10").unwrap();
        let ab = a.add(&b).unwrap();
        let mut s = Span::new(2);
        assert!(s.insert(&ab).unwrap());
        assert!(!s.insert(&ab.scale(&Scalar::i())).unwrap());
        assert!(!s.contains(&a).unwrap());
        assert!(s.insert(&a).unwrap());
        assert!(s.contains(&b).unwrap());
        assert_eq!(s.dim(), 2);
        let t = Span::from_vectors(2, [&a, &b]).unwrap();
        assert!(s.same_as(&t).unwrap());
        let coords = Span::coordinates(&[a.clone(), b.clone()], &ab.scale(&Scalar::from_int(3)))
            .unwrap()
            .unwrap();
        assert_eq!(coords, vec![Scalar::from_int(3), Scalar::from_int(3)]);
        let vac = FockVector::vacuum(2).unwrap();
        assert!(Span::coordinates(&[a], &vac).unwrap().is_none());
    }
}
