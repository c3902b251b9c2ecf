//! Bipartite double-reflection walks and the conversion of staggered walks
//! with no edge shared by a blue and a red polygon.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{
    max_abs_diff, Amplitude, EvolutionOperator, PolygonStateVector, ReflectionOperator, StateVector,
    WalkError, WalkResult,
};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::tessellation::{intersection_edges, validate_pair, Polygon};
use crate::tolerance;

/// Walk on `C^m (x) C^n` with basis index `x * n + y`.
///
/// `phi_x = sum_y sqrt(p[x][y]) e^{i theta[x][y]} |x,y>` and
/// `psi_y = sum_x sqrt(q[y][x]) e^{i theta_prime[x][y]} |x,y>`; both
/// phase arrays are indexed `[x][y]`.
#[derive(Clone, Debug)]
pub struct SzegedyInstance {
    pub m: usize,
    pub n: usize,
    pub p: DMatrix<f64>,
    pub q: DMatrix<f64>,
    pub theta: DMatrix<f64>,
    pub theta_prime: DMatrix<f64>,
    /// Basis index `T(k)` for each vertex `k` of the converted walk.
    pub embedding: Option<Vec<usize>>,
    /// `W = R1 R0` with `R0` built from the `phi_x`, `R1` from the `psi_y`.
    pub walk: EvolutionOperator,
}

impl SzegedyInstance {
    pub fn r0(&self) -> &ReflectionOperator {
        self.walk.u0()
    }

    pub fn r1(&self) -> &ReflectionOperator {
        self.walk.u1()
    }

    pub fn dimension(&self) -> usize {
        self.m * self.n
    }

    /// Basis pairs `(x, y)` with `p[x][y] > 0`, i.e. the root's edges.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.m {
            for y in 0..self.n {
                if self.p[(x, y)] > 0.0 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Bipartite root: `x` is vertex `x`, `y` is vertex `m + y`.
    pub fn root_graph(&self) -> Graph {
        Graph::from_edges(
            self.m + self.n,
            self.support().into_iter().map(|(x, y)| (x, self.m + y)),
        )
        .expect("support pairs are distinct")
    }

    /// Dimension of the subspace on which `W` acts trivially, `m n - |E|`.
    pub fn idle_dimension(&self) -> usize {
        self.dimension() - self.support().len()
    }

    /// Largest deviation from orthonormality among the `phi_x`, and among
    /// the `psi_y`. Supports are disjoint so only norms can deviate.
    pub fn orthonormality_defect(&self) -> f64 {
        self.r0()
            .vectors()
            .iter()
            .chain(self.r1().vectors())
            .map(|v| (v.amplitudes().iter().map(|a| a.norm_sqr()).sum::<f64>() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// `T psi`: amplitudes of a converted-walk state moved to the
    /// bipartite space.
    pub fn embed(&self, psi: &StateVector) -> WalkResult<StateVector> {
        let t = self.embedding.as_ref().ok_or(WalkError::DimensionMismatch {
            expected: 0,
            found: psi.len(),
        })?;
        if psi.len() != t.len() {
            return Err(WalkError::DimensionMismatch {
                expected: t.len(),
                found: psi.len(),
            });
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.dimension()];
        for (k, &b) in t.iter().enumerate() {
            out[b] = psi.as_slice()[k];
        }
        Ok(StateVector::from_amplitudes(out))
    }
}

/// Builds the walk from stochastic `P` (m x n), `Q` (n x m) and phases.
pub fn szegedy_from_matrices(
    p: &DMatrix<f64>,
    q: &DMatrix<f64>,
    theta: &DMatrix<f64>,
    theta_prime: &DMatrix<f64>,
) -> WalkResult<SzegedyInstance> {
    let (m, n) = p.shape();
    for (found, expected) in [
        (q.shape(), (n, m)),
        (theta.shape(), (m, n)),
        (theta_prime.shape(), (m, n)),
    ] {
        if found != expected {
            return Err(WalkError::DimensionMismatch {
                expected: expected.0 * expected.1,
                found: found.0 * found.1,
            });
        }
    }
    check_stochastic(p, "P")?;
    check_stochastic(q, "Q")?;
    for x in 0..m {
        for y in 0..n {
            if (p[(x, y)] > 0.0) != (q[(y, x)] > 0.0) {
                return Err(WalkError::SupportMismatch { x, y });
            }
        }
    }
    let phi = (0..m)
        .map(|x| {
            let ys: Vec<usize> = (0..n).filter(|&y| p[(x, y)] > 0.0).collect();
            let amps = ys
                .iter()
                .map(|&y| Complex64::from_polar(p[(x, y)].sqrt(), theta[(x, y)]))
                .collect();
            PolygonStateVector::new(Polygon::new(ys.iter().map(|&y| x * n + y).collect()), amps)
        })
        .collect::<WalkResult<Vec<_>>>()?;
    let psi = (0..n)
        .map(|y| {
            let xs: Vec<usize> = (0..m).filter(|&x| q[(y, x)] > 0.0).collect();
            let amps = xs
                .iter()
                .map(|&x| Complex64::from_polar(q[(y, x)].sqrt(), theta_prime[(x, y)]))
                .collect();
            PolygonStateVector::new(Polygon::new(xs.iter().map(|&x| x * n + y).collect()), amps)
        })
        .collect::<WalkResult<Vec<_>>>()?;
    let walk = EvolutionOperator::new(
        ReflectionOperator::new(m * n, phi)?,
        ReflectionOperator::new(m * n, psi)?,
    )?;
    Ok(SzegedyInstance {
        m,
        n,
        p: p.clone(),
        q: q.clone(),
        theta: theta.clone(),
        theta_prime: theta_prime.clone(),
        embedding: None,
        walk,
    })
}

fn check_stochastic(a: &DMatrix<f64>, matrix: &'static str) -> WalkResult<()> {
    for (row, r) in a.row_iter().enumerate() {
        let sum: f64 = r.iter().sum();
        if r.iter().any(|&v| v < 0.0 || !v.is_finite()) || (sum - 1.0).abs() > tolerance::STOCHASTIC {
            return Err(WalkError::NotStochastic { matrix, row, sum });
        }
    }
    Ok(())
}

/// Casts a staggered walk on `g` whose blue and red polygons share at most
/// one vertex into the bipartite form: blue polygon `i` and red polygon `j`
/// become root vertices, vertex `k` in both becomes root edge `(i, j)` and
/// basis index `T(k) = i n + j`.
pub fn szegedy_convert(g: &Graph, ev: &EvolutionOperator) -> WalkResult<SzegedyInstance> {
    let pair = ev.tessellation_pair();
    validate_pair(g, &pair)?;
    if let Some(&(u, v)) = intersection_edges(&pair).first() {
        return Err(WalkError::EdgeInIntersection { u, v });
    }
    let (m, n) = (pair.blue.len(), pair.red.len());
    let blue_of = pair.blue.polygon_of();
    let red_of = pair.red.polygon_of();
    let mut p = DMatrix::zeros(m, n);
    let mut q = DMatrix::zeros(n, m);
    let mut theta = DMatrix::zeros(m, n);
    let mut theta_prime = DMatrix::zeros(m, n);
    let mut embedding = Vec::with_capacity(g.vertex_count());
    for k in 0..g.vertex_count() {
        let i = blue_of[k].expect("validated tessellation covers every vertex");
        let j = red_of[k].expect("validated tessellation covers every vertex");
        let a = ev.u0().vectors()[i].amplitude_of(k).expect("k in blue polygon i");
        let b = ev.u1().vectors()[j].amplitude_of(k).expect("k in red polygon j");
        p[(i, j)] = a.norm_sqr();
        theta[(i, j)] = a.arg();
        q[(j, i)] = b.norm_sqr();
        theta_prime[(i, j)] = b.arg();
        embedding.push(i * n + j);
    }
    let mut inst = szegedy_from_matrices(&p, &q, &theta, &theta_prime)?;
    inst.embedding = Some(embedding);
    Ok(inst)
}

/// Outcome of the block comparison between `W` and `U`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockCheck {
    pub passed: bool,
    pub max_deviation: f64,
    pub idle_dimension: usize,
}

/// Reorders the bipartite basis as the embedded vertices `T(0..N)` in
/// vertex order, then the idle pairs in lexicographic order, and checks
/// `R0 = U0 (+) -I`, `R1 = U1 (+) -I` and `W = U (+) I` entrywise.
pub fn verify_block_structure(inst: &SzegedyInstance, ev: &EvolutionOperator) -> WalkResult<BlockCheck> {
    verify_block_structure_with_cap(inst, ev, Limits::default().dense_dimension)
}

pub fn verify_block_structure_with_cap(
    inst: &SzegedyInstance,
    ev: &EvolutionOperator,
    cap: usize,
) -> WalkResult<BlockCheck> {
    let t = inst.embedding.as_ref().ok_or(WalkError::DimensionMismatch {
        expected: ev.dimension(),
        found: 0,
    })?;
    let n = ev.dimension();
    if t.len() != n {
        return Err(WalkError::DimensionMismatch {
            expected: n,
            found: t.len(),
        });
    }
    let dim = inst.dimension();
    let mut order = t.clone();
    let mut used = vec![false; dim];
    for &b in t {
        used[b] = true;
    }
    order.extend((0..dim).filter(|&b| !used[b]));
    let idle = dim - n;

    let reorder = |a: DMatrix<Amplitude>| DMatrix::from_fn(dim, dim, |r, c| a[(order[r], order[c])]);
    let w = reorder(inst.walk.dense_matrix_with_cap(cap)?);
    let r0 = reorder(inst.r0().dense_with_cap(cap)?);
    let r1 = reorder(inst.r1().dense_with_cap(cap)?);
    let u = ev.dense_matrix_with_cap(cap)?;
    let u0 = ev.u0().dense_with_cap(cap)?;
    let u1 = ev.u1().dense_with_cap(cap)?;

    let expected = |top: &DMatrix<Amplitude>, idle_value: f64| {
        DMatrix::from_fn(dim, dim, |r, c| {
            if r < n && c < n {
                top[(r, c)]
            } else if r == c {
                Complex64::new(idle_value, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    };
    let dev = max_abs_diff(&w, &expected(&u, 1.0))
        .max(max_abs_diff(&r0, &expected(&u0, -1.0)))
        .max(max_abs_diff(&r1, &expected(&u1, -1.0)));
    Ok(BlockCheck {
        passed: dev < tolerance::OPERATOR,
        max_deviation: dev,
        idle_dimension: idle,
    })
}

/// `max |T U psi - W T psi|` for one state, without dense matrices.
pub fn intertwining_deviation(
    inst: &SzegedyInstance,
    ev: &EvolutionOperator,
    psi: &StateVector,
) -> WalkResult<f64> {
    let lhs = inst.embed(&ev.apply_step(psi)?)?;
    let rhs = inst.walk.apply_step(&inst.embed(psi)?)?;
    Ok(lhs
        .as_slice()
        .iter()
        .zip(rhs.as_slice())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max))
}
