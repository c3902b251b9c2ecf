use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{Amplitude, ReflectionOperator, StateVector, WalkError, WalkResult};
use crate::limits::Limits;
use crate::tessellation::{Color, Tessellation, TessellationPair};

/// `U = U1 U0`: the blue reflection `u0` acts first.
#[derive(Clone, Debug, PartialEq)]
pub struct EvolutionOperator {
    u0: ReflectionOperator,
    u1: ReflectionOperator,
}

impl EvolutionOperator {
    pub fn new(u0: ReflectionOperator, u1: ReflectionOperator) -> WalkResult<Self> {
        if u0.dimension() != u1.dimension() {
            return Err(WalkError::DimensionMismatch {
                expected: u0.dimension(),
                found: u1.dimension(),
            });
        }
        Ok(EvolutionOperator { u0, u1 })
    }

    /// Uniform vectors on both tessellations.
    pub fn uniform(pair: &TessellationPair) -> WalkResult<Self> {
        EvolutionOperator::new(
            ReflectionOperator::uniform(&pair.blue)?,
            ReflectionOperator::uniform(&pair.red)?,
        )
    }

    pub fn dimension(&self) -> usize {
        self.u0.dimension()
    }

    pub fn u0(&self) -> &ReflectionOperator {
        &self.u0
    }

    pub fn u1(&self) -> &ReflectionOperator {
        &self.u1
    }

    /// The polygons carrying the two reflections, as a tessellation pair.
    pub fn tessellation_pair(&self) -> TessellationPair {
        let t = |r: &ReflectionOperator, color| Tessellation {
            vertex_count: r.dimension(),
            color,
            polygons: r.vectors().iter().map(|v| v.polygon().clone()).collect(),
        };
        TessellationPair::new(t(&self.u0, Color::Blue), t(&self.u1, Color::Red))
    }

    pub fn apply_in_place(&self, s: &mut StateVector) -> WalkResult<()> {
        if s.len() != self.dimension() {
            return Err(WalkError::DimensionMismatch {
                expected: self.dimension(),
                found: s.len(),
            });
        }
        self.step_unchecked(s.as_mut_slice());
        Ok(())
    }

    #[inline]
    pub(crate) fn step_unchecked(&self, psi: &mut [Amplitude]) {
        self.u0.apply_in_place(psi);
        self.u1.apply_in_place(psi);
    }

    pub fn apply_step(&self, s: &StateVector) -> WalkResult<StateVector> {
        let mut out = s.clone();
        self.apply_in_place(&mut out)?;
        Ok(out)
    }

    pub fn dense_matrix(&self) -> WalkResult<DMatrix<Amplitude>> {
        self.dense_matrix_with_cap(Limits::default().dense_dimension)
    }

    /// Column `k` is one step applied to basis state `k`.
    pub fn dense_matrix_with_cap(&self, cap: usize) -> WalkResult<DMatrix<Amplitude>> {
        let n = self.dimension();
        if n > cap {
            return Err(WalkError::TooLarge { dimension: n, cap });
        }
        let mut m = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
        for k in 0..n {
            let mut col = StateVector::basis(n, k);
            self.step_unchecked(col.as_mut_slice());
            m.set_column(k, &nalgebra::DVector::from_vec(col.into_vec()));
        }
        Ok(m)
    }
}
