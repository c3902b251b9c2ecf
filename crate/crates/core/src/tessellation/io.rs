//! Tessellation files: one JSON object `{"blue": [[..],..], "red": [[..],..]}`.
//! Polygon order is preserved in both directions.

use serde::{Deserialize, Serialize};

use super::{Color, Tessellation, TessellationError, TessellationPair};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairFile {
    blue: Vec<Vec<usize>>,
    red: Vec<Vec<usize>>,
}

/// Parses a tessellation file for a host graph with `vertex_count`
/// vertices. Only the syntax is checked; use `validate_pair` afterwards.
pub fn parse_pair(text: &str, vertex_count: usize) -> Result<TessellationPair, TessellationError> {
    let file: PairFile = serde_json::from_str(text).map_err(|e| TessellationError::Parse(e.to_string()))?;
    Ok(TessellationPair::from_lists(vertex_count, file.blue, file.red))
}

fn lists(t: &Tessellation) -> Vec<Vec<usize>> {
    t.polygons.iter().map(|p| p.vertices().to_vec()).collect()
}

/// Single-line JSON followed by a newline.
pub fn write_pair(pair: &TessellationPair) -> String {
    debug_assert_eq!(pair.blue.color, Color::Blue);
    let file = PairFile {
        blue: lists(&pair.blue),
        red: lists(&pair.red),
    };
    let mut s = serde_json::to_string(&file).expect("plain integer lists serialise");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let pair = TessellationPair::from_lists(
            5,
            vec![vec![0, 1, 2, 3], vec![4]],
            vec![vec![0, 1], vec![2, 3, 4]],
        );
        let text = write_pair(&pair);
        assert_eq!(text, "{\"blue\":[[0,1,2,3],[4]],\"red\":[[0,1],[2,3,4]]}\n");
        assert_eq!(parse_pair(&text, 5).unwrap(), pair);
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(
            parse_pair("{\"blue\": [[0]]}", 1),
            Err(TessellationError::Parse(_))
        ));
        assert!(matches!(parse_pair("[1,2]", 1), Err(TessellationError::Parse(_))));
        assert!(matches!(
            parse_pair("{\"blue\":[],\"red\":[],\"green\":[]}", 0),
            Err(TessellationError::Parse(_))
        ));
    }
}
