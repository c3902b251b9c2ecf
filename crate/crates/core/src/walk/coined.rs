//! Reduction to a flip-flop coined walk when the red polygons are matched
//! pairs with uniform vectors.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{Amplitude, EvolutionOperator, WalkError, WalkResult};
use crate::classify::MatchingDecomposition;
use crate::graph::Graph;
use crate::tessellation::validate_pair;
use crate::tolerance;

/// Whether red singletons are accepted. A singleton red polygon contributes
/// `+1` on its vertex, which the shrunken graph sees as a loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LoopPolicy {
    /// Red polygons must be a perfect matching satisfying the isolated-edge
    /// and clique-complement conditions.
    Strict,
    /// Red polygons may be matched pairs or singletons.
    AllowLoops,
}

/// Coined form of a staggered walk, in relabelled coordinates where each
/// blue polygon occupies a consecutive range.
#[derive(Clone, Debug, PartialEq)]
pub struct CoinedForm {
    /// `relabel[v]` is the new index of vertex `v`.
    pub relabel: Vec<usize>,
    /// Degree of each shrunken vertex (the size of its blue polygon).
    pub degrees: Vec<usize>,
    /// One edge per matched pair, between the shrunken vertices holding
    /// its endpoints. May contain parallel edges.
    pub edges: Vec<(usize, usize)>,
    /// Shrunken vertices carrying a loop, one entry per red singleton.
    pub loops: Vec<usize>,
    /// Coin block per blue polygon, `2 a a^dagger - I`.
    pub coin_blocks: Vec<DMatrix<Amplitude>>,
    /// Shift permutation on new indices: state `s` moves to `shift[s]`.
    pub shift: Vec<usize>,
}

impl CoinedForm {
    pub fn dimension(&self) -> usize {
        self.relabel.len()
    }

    pub fn coin(&self) -> DMatrix<Amplitude> {
        let n = self.dimension();
        let mut c = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
        let mut at = 0;
        for b in &self.coin_blocks {
            let d = b.nrows();
            c.view_mut((at, at), (d, d)).copy_from(b);
            at += d;
        }
        c
    }

    pub fn shift_matrix(&self) -> DMatrix<Amplitude> {
        let n = self.dimension();
        let mut s = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
        for (from, &to) in self.shift.iter().enumerate() {
            s[(to, from)] = Complex64::new(1.0, 0.0);
        }
        s
    }

    /// `S C` in new coordinates.
    pub fn recompose(&self) -> DMatrix<Amplitude> {
        self.shift_matrix() * self.coin()
    }

    /// A dense operator on original vertices rewritten in new coordinates.
    pub fn relabel_matrix(&self, a: &DMatrix<Amplitude>) -> DMatrix<Amplitude> {
        let n = self.dimension();
        let mut old = vec![0; n];
        for (v, &r) in self.relabel.iter().enumerate() {
            old[r] = v;
        }
        DMatrix::from_fn(n, n, |r, c| a[(old[r], old[c])])
    }
}

/// Splits `U = U1 U0` into a block-diagonal coin (from the blue polygons)
/// and the permutation given by the red matched pairs.
pub fn coined_reduce(g: &Graph, ev: &EvolutionOperator, policy: LoopPolicy) -> WalkResult<CoinedForm> {
    let pair = ev.tessellation_pair();
    validate_pair(g, &pair)?;
    let n = g.vertex_count();

    let mut matching = Vec::new();
    let mut singles = Vec::new();
    for (j, v) in ev.u1().vectors().iter().enumerate() {
        match v.polygon().vertices() {
            &[a, b] => {
                let (x, y) = (v.amplitudes()[0], v.amplitudes()[1]);
                if (x - y).norm() > tolerance::OPERATOR {
                    return Err(WalkError::NonUniformMatchingVector { polygon: j });
                }
                matching.push((a, b));
            }
            &[a] => singles.push(a),
            other => {
                return Err(WalkError::NotClass2bPrime(format!(
                    "red polygon {j} has {} vertices",
                    other.len()
                )))
            }
        }
    }
    if policy == LoopPolicy::Strict {
        if !singles.is_empty() {
            return Err(WalkError::NotClass2bPrime(format!(
                "vertex {} is not matched by a red pair",
                singles[0]
            )));
        }
        matching.sort_unstable();
        let cliques = g.without_edges(&matching).components();
        if !(MatchingDecomposition {
            matching: matching.clone(),
            cliques,
        })
        .is_valid_for(g)
        {
            return Err(WalkError::NotClass2bPrime(
                "red pairs are not isolated edges leaving disjoint cliques".into(),
            ));
        }
    }

    let mut relabel = vec![0; n];
    let mut shrunk = vec![0; n];
    let mut degrees = Vec::new();
    let mut coin_blocks = Vec::new();
    let mut next = 0;
    for (i, v) in ev.u0().vectors().iter().enumerate() {
        for &x in v.polygon().vertices() {
            relabel[x] = next;
            shrunk[x] = i;
            next += 1;
        }
        let d = v.polygon().len();
        let a = v.amplitudes();
        degrees.push(d);
        coin_blocks.push(DMatrix::from_fn(d, d, |r, c| {
            let delta = if r == c { 1.0 } else { 0.0 };
            a[r] * a[c].conj() * 2.0 - delta
        }));
    }
    let mut shift: Vec<usize> = (0..n).collect();
    for &(a, b) in &matching {
        shift[relabel[a]] = relabel[b];
        shift[relabel[b]] = relabel[a];
    }
    Ok(CoinedForm {
        relabel,
        degrees,
        edges: matching.iter().map(|&(a, b)| (shrunk[a], shrunk[b])).collect(),
        loops: singles.iter().map(|&a| shrunk[a]).collect(),
        coin_blocks,
        shift,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;
    use crate::tessellation::{Polygon, TessellationPair};
    use crate::walk::{max_abs_diff, reflection_from, PolygonStateVector, ReflectionOperator};

    fn c4_pair() -> TessellationPair {
        TessellationPair::from_lists(4, vec![vec![0, 3], vec![1, 2]], vec![vec![0, 1], vec![2, 3]])
    }

    #[test]
    fn four_cycle_recomposes() {
        let g = named_graph("cycle(4)").unwrap();
        let ev = EvolutionOperator::uniform(&c4_pair()).unwrap();
        let form = coined_reduce(&g, &ev, LoopPolicy::Strict).unwrap();
        assert_eq!(form.relabel, vec![0, 2, 3, 1]);
        assert_eq!(form.degrees, vec![2, 2]);
        assert_eq!(form.edges, vec![(0, 1), (1, 0)]);
        let u = form.relabel_matrix(&ev.dense_matrix().unwrap());
        assert!(max_abs_diff(&form.recompose(), &u) < 1e-12);
    }

    #[test]
    fn non_uniform_matching_rejected() {
        let g = named_graph("cycle(4)").unwrap();
        let pair = c4_pair();
        let skew = PolygonStateVector::new(
            Polygon::new(vec![0, 1]),
            vec![
                Complex64::new(0.9f64.sqrt(), 0.0),
                Complex64::new(0.1f64.sqrt(), 0.0),
            ],
        )
        .unwrap();
        let red = vec![
            skew,
            PolygonStateVector::uniform(Polygon::new(vec![2, 3])).unwrap(),
        ];
        let ev = EvolutionOperator::new(
            ReflectionOperator::uniform(&pair.blue).unwrap(),
            reflection_from(&pair.red, red).unwrap(),
        )
        .unwrap();
        assert_eq!(
            coined_reduce(&g, &ev, LoopPolicy::Strict).unwrap_err(),
            WalkError::NonUniformMatchingVector { polygon: 0 }
        );
    }

    #[test]
    fn singletons_need_loops() {
        let g = named_graph("path(3)").unwrap();
        let pair = TessellationPair::from_lists(3, vec![vec![0], vec![1, 2]], vec![vec![0, 1], vec![2]]);
        let ev = EvolutionOperator::uniform(&pair).unwrap();
        assert!(matches!(
            coined_reduce(&g, &ev, LoopPolicy::Strict),
            Err(WalkError::NotClass2bPrime(_))
        ));
        let form = coined_reduce(&g, &ev, LoopPolicy::AllowLoops).unwrap();
        assert_eq!(form.loops, vec![1]);
        let u = form.relabel_matrix(&ev.dense_matrix().unwrap());
        assert!(max_abs_diff(&form.recompose(), &u) < 1e-12);
    }
}
