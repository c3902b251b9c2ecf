//! Size caps for the exponential searches.

/// Vertex and enumeration caps guarding the exhaustive algorithms. The
/// defaults are sized for the small graphs these searches are meant for;
/// callers working with larger structured graphs can raise them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximal-clique enumeration (and everything built on clique graphs).
    pub clique_vertices: usize,
    /// Exact isomorphism testing.
    pub isomorphism_vertices: usize,
    /// Krausz partition backtracking.
    pub krausz_vertices: usize,
    /// Perfect-matching enumeration for the matching-decomposable test.
    pub matching_vertices: usize,
    /// Number of perfect matchings examined before giving up.
    pub max_matchings: usize,
    /// Exhaustive tessellation-pair search.
    pub brute_force_vertices: usize,
    /// Dense matrix materialisation (matrix dimension).
    pub dense_dimension: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            clique_vertices: 64,
            isomorphism_vertices: 12,
            krausz_vertices: 40,
            matching_vertices: 40,
            max_matchings: 2000,
            brute_force_vertices: 8,
            dense_dimension: 4096,
        }
    }
}

impl Limits {
    /// Raises every vertex cap to `n`; enumeration counts stay at defaults.
    pub fn with_vertex_cap(n: usize) -> Self {
        Limits {
            clique_vertices: n,
            krausz_vertices: n,
            matching_vertices: n,
            ..Limits::default()
        }
    }
}
