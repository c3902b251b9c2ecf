use num_complex::Complex64;

use super::{WalkError, WalkResult};
use crate::tessellation::Polygon;
use crate::tolerance;

pub type Amplitude = Complex64;

/// Unit vector supported on one polygon: `amplitudes[i]` sits on
/// `polygon.vertices()[i]` and is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct PolygonStateVector {
    polygon: Polygon,
    amplitudes: Vec<Amplitude>,
}

impl PolygonStateVector {
    /// `amplitudes` are given in the polygon's (sorted) vertex order.
    pub fn new(polygon: Polygon, amplitudes: Vec<Amplitude>) -> WalkResult<Self> {
        if polygon.is_empty() {
            return Err(WalkError::EmptyPolygon);
        }
        if amplitudes.len() != polygon.len() {
            return Err(WalkError::AmplitudeCount {
                expected: polygon.len(),
                found: amplitudes.len(),
            });
        }
        if let Some(i) = amplitudes
            .iter()
            .position(|a| a.norm() <= tolerance::AMPLITUDE_ZERO)
        {
            return Err(WalkError::ZeroAmplitude {
                vertex: polygon.vertices()[i],
            });
        }
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > tolerance::NORM {
            return Err(WalkError::NotNormalized { norm });
        }
        Ok(PolygonStateVector { polygon, amplitudes })
    }

    pub fn uniform(polygon: Polygon) -> WalkResult<Self> {
        if polygon.is_empty() {
            return Err(WalkError::EmptyPolygon);
        }
        let a = Complex64::new(1.0 / (polygon.len() as f64).sqrt(), 0.0);
        let amplitudes = vec![a; polygon.len()];
        Ok(PolygonStateVector { polygon, amplitudes })
    }

    pub fn polygon(&self) -> &Polygon {
        &self.polygon
    }

    pub fn amplitudes(&self) -> &[Amplitude] {
        &self.amplitudes
    }

    pub fn amplitude_of(&self, v: usize) -> Option<Amplitude> {
        self.polygon
            .vertices()
            .binary_search(&v)
            .ok()
            .map(|i| self.amplitudes[i])
    }

    /// Pairs `(vertex, amplitude)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, Amplitude)> + '_ {
        self.polygon
            .vertices()
            .iter()
            .copied()
            .zip(self.amplitudes.iter().copied())
    }

    /// `<self|psi>` for a full-length state.
    #[inline]
    pub fn inner(&self, psi: &[Amplitude]) -> Amplitude {
        self.entries().map(|(v, a)| a.conj() * psi[v]).sum()
    }
}

/// Uniform superposition over the polygon's vertices.
pub fn uniform_polygon_vector(p: &Polygon) -> WalkResult<PolygonStateVector> {
    PolygonStateVector::uniform(p.clone())
}

/// Full state of the walker, one amplitude per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amps: Vec<Amplitude>,
}

impl StateVector {
    pub fn from_amplitudes(amps: Vec<Amplitude>) -> Self {
        StateVector { amps }
    }

    pub fn basis(n: usize, k: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); n];
        amps[k] = Complex64::new(1.0, 0.0);
        StateVector { amps }
    }

    /// Equal superposition `1/sqrt(n)` on every vertex.
    pub fn uniform(n: usize) -> Self {
        StateVector {
            amps: vec![Complex64::new(1.0 / (n as f64).sqrt(), 0.0); n],
        }
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn as_slice(&self) -> &[Amplitude] {
        &self.amps
    }

    pub fn as_mut_slice(&mut self) -> &mut [Amplitude] {
        &mut self.amps
    }

    pub fn into_vec(self) -> Vec<Amplitude> {
        self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn normalized(mut self) -> Self {
        let n = self.norm();
        for a in &mut self.amps {
            *a /= n;
        }
        self
    }

    /// Probability mass on a set of vertices.
    pub fn probability_on(&self, vertices: &[usize]) -> f64 {
        vertices.iter().map(|&v| self.amps[v].norm_sqr()).sum()
    }

    pub fn is_finite(&self) -> bool {
        self.amps.iter().all(|a| a.re.is_finite() && a.im.is_finite())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_vectors() {
        let v = uniform_polygon_vector(&Polygon::new(vec![0, 1, 2, 3])).unwrap();
        assert!(v
            .amplitudes()
            .iter()
            .all(|a| (a - Complex64::new(0.5, 0.0)).norm() < 1e-15));
        let v = uniform_polygon_vector(&Polygon::new(vec![4])).unwrap();
        assert_eq!(v.amplitude_of(4), Some(Complex64::new(1.0, 0.0)));
        assert_eq!(v.amplitude_of(3), None);
        assert_eq!(
            uniform_polygon_vector(&Polygon::new(vec![])),
            Err(WalkError::EmptyPolygon)
        );
    }

    #[test]
    fn construction_checks() {
        let p = Polygon::new(vec![0, 1]);
        let c = |re: f64| Complex64::new(re, 0.0);
        assert!(matches!(
            PolygonStateVector::new(p.clone(), vec![c(1.0), c(1.0)]),
            Err(WalkError::NotNormalized { .. })
        ));
        assert_eq!(
            PolygonStateVector::new(p.clone(), vec![c(1.0), c(0.0)]),
            Err(WalkError::ZeroAmplitude { vertex: 1 })
        );
        assert!(matches!(
            PolygonStateVector::new(p.clone(), vec![c(1.0)]),
            Err(WalkError::AmplitudeCount {
                expected: 2,
                found: 1
            })
        ));
        let ok = PolygonStateVector::new(p, vec![c(0.9f64.sqrt()), Complex64::new(0.0, 0.1f64.sqrt())]);
        assert!(ok.is_ok());
    }

    #[test]
    fn uniform_state() {
        let s = StateVector::uniform(4);
        assert!(s.as_slice().iter().all(|a| *a == Complex64::new(0.5, 0.0)));
        assert!((s.norm() - 1.0).abs() < 1e-15);
        let s = StateVector::uniform(72);
        assert!((s.probability_on(&[0, 1, 2, 3, 4, 5, 6, 7]) - 8.0 / 72.0).abs() < 1e-15);
    }
}
