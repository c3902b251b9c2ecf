use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{Amplitude, PolygonStateVector, WalkError, WalkResult};
use crate::limits::Limits;
use crate::tessellation::Tessellation;

/// `2 sum_k |v_k><v_k| - I` for unit vectors with pairwise disjoint
/// supports, kept as the vectors themselves. Vertices outside every
/// support are flipped in sign.
#[derive(Clone, Debug, PartialEq)]
pub struct ReflectionOperator {
    dimension: usize,
    vectors: Vec<PolygonStateVector>,
    uncovered: Vec<usize>,
}

impl ReflectionOperator {
    /// Supports must be pairwise disjoint and inside `0..dimension`; they
    /// need not cover everything.
    pub fn new(dimension: usize, vectors: Vec<PolygonStateVector>) -> WalkResult<Self> {
        let mut covered = vec![false; dimension];
        for v in &vectors {
            for &x in v.polygon().vertices() {
                if x >= dimension || covered[x] {
                    return Err(WalkError::BadSupport { vertex: x, dimension });
                }
                covered[x] = true;
            }
        }
        let uncovered = (0..dimension).filter(|&x| !covered[x]).collect();
        Ok(ReflectionOperator {
            dimension,
            vectors,
            uncovered,
        })
    }

    /// Uniform vector on every polygon.
    pub fn uniform(t: &Tessellation) -> WalkResult<Self> {
        let vectors = t
            .polygons
            .iter()
            .cloned()
            .map(PolygonStateVector::uniform)
            .collect::<WalkResult<Vec<_>>>()?;
        ReflectionOperator::new(t.vertex_count, vectors)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vectors(&self) -> &[PolygonStateVector] {
        &self.vectors
    }

    /// Basis states in no support (eigenvalue -1).
    pub fn uncovered(&self) -> &[usize] {
        &self.uncovered
    }

    /// `psi <- R psi`, O(dimension). Caller guarantees the length.
    pub fn apply_in_place(&self, psi: &mut [Amplitude]) {
        debug_assert_eq!(psi.len(), self.dimension);
        for v in &self.vectors {
            let c = v.inner(psi) * 2.0;
            for (x, a) in v.entries() {
                psi[x] = a * c - psi[x];
            }
        }
        for &x in &self.uncovered {
            psi[x] = -psi[x];
        }
    }

    pub fn dense(&self) -> WalkResult<DMatrix<Amplitude>> {
        self.dense_with_cap(Limits::default().dense_dimension)
    }

    pub fn dense_with_cap(&self, cap: usize) -> WalkResult<DMatrix<Amplitude>> {
        let n = self.dimension;
        if n > cap {
            return Err(WalkError::TooLarge { dimension: n, cap });
        }
        let mut m = DMatrix::from_diagonal_element(n, n, Complex64::new(-1.0, 0.0));
        for v in &self.vectors {
            for (x, a) in v.entries() {
                for (y, b) in v.entries() {
                    m[(x, y)] += a * b.conj() * 2.0;
                }
            }
        }
        Ok(m)
    }
}

/// Reflection for a tessellation with one vector per polygon, in order.
pub fn reflection_from(t: &Tessellation, vectors: Vec<PolygonStateVector>) -> WalkResult<ReflectionOperator> {
    if vectors.len() != t.polygons.len() {
        return Err(WalkError::VectorPolygonMismatch {
            index: vectors.len().min(t.polygons.len()),
        });
    }
    if let Some(index) = (0..vectors.len()).find(|&i| vectors[i].polygon() != &t.polygons[i]) {
        return Err(WalkError::VectorPolygonMismatch { index });
    }
    ReflectionOperator::new(t.vertex_count, vectors)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::tessellation::{Color, Polygon};
    use crate::walk::max_abs_diff;
    use crate::walk::testing::{random_state, random_unit_vector};

    #[test]
    fn fig1_blue_blocks() {
        let t = Tessellation::new(5, Color::Blue, vec![vec![0, 1, 2, 3], vec![4]]);
        let r = ReflectionOperator::uniform(&t).unwrap().dense().unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i == j { -0.5 } else { 0.5 };
                assert!((r[(i, j)].re - expected).abs() < 1e-15);
            }
            assert_eq!(r[(i, 4)], Complex64::new(0.0, 0.0));
        }
        assert!((r[(4, 4)].re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn singletons_give_identity() {
        let t = Tessellation::new(4, Color::Red, (0..4).map(|v| vec![v]).collect());
        let r = ReflectionOperator::uniform(&t).unwrap().dense().unwrap();
        assert!(max_abs_diff(&r, &DMatrix::identity(4, 4)) < 1e-15);
    }

    #[test]
    fn random_reflection_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let polys = vec![vec![0, 3, 5], vec![1], vec![2, 4], vec![6, 7, 8, 9]];
        let vectors = polys
            .into_iter()
            .map(|p| random_unit_vector(&mut rng, Polygon::new(p)))
            .collect();
        let r = ReflectionOperator::new(10, vectors).unwrap();
        let d = r.dense().unwrap();
        assert!(max_abs_diff(&d, &d.adjoint()) < 1e-12);
        assert!(max_abs_diff(&(&d * &d), &DMatrix::identity(10, 10)) < 1e-10);
        for _ in 0..5 {
            let s = random_state(&mut rng, 10);
            let mut a = s.clone().into_vec();
            r.apply_in_place(&mut a);
            let b = &d * nalgebra::DVector::from_vec(s.into_vec());
            assert!(a.iter().zip(b.iter()).all(|(x, y)| (x - y).norm() < 1e-12));
        }
    }

    #[test]
    fn uncovered_vertices_flip() {
        let v = PolygonStateVector::uniform(Polygon::new(vec![0, 1])).unwrap();
        let r = ReflectionOperator::new(3, vec![v]).unwrap();
        assert_eq!(r.uncovered(), &[2]);
        let mut psi = vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        ];
        r.apply_in_place(&mut psi);
        assert_eq!(psi[2], Complex64::new(-1.0, 0.0));
    }

    #[test]
    fn mismatch_and_overlap() {
        let t = Tessellation::new(3, Color::Blue, vec![vec![0, 1], vec![2]]);
        let v = vec![PolygonStateVector::uniform(Polygon::new(vec![0, 1])).unwrap()];
        assert!(matches!(
            reflection_from(&t, v),
            Err(WalkError::VectorPolygonMismatch { .. })
        ));
        let v = vec![
            PolygonStateVector::uniform(Polygon::new(vec![0, 1])).unwrap(),
            PolygonStateVector::uniform(Polygon::new(vec![1])).unwrap(),
        ];
        assert!(matches!(
            ReflectionOperator::new(3, v),
            Err(WalkError::BadSupport { vertex: 1, .. })
        ));
    }
}
