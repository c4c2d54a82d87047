//! Exhaustive enumeration of isomorphism-class representatives of simple
//! graphs on up to [`MAX_ENUMERATION_N`] vertices.

use std::collections::HashMap;

use super::graph6::write_graph6;
use super::iso::are_isomorphic;
use super::Graph;
use crate::wl::color_refinement;

/// Largest vertex count the built-in enumerator serves; bigger corpora are
/// expected to arrive as graph6 files.
pub const MAX_ENUMERATION_N: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerateError {
    #[error("enumeration supports 0 ≤ n ≤ {MAX_ENUMERATION_N}, got {n}")]
    OutOfRange { n: usize },
}

/// Returns exactly one representative per isomorphism class of simple graphs
/// on `n` vertices, sorted by graph6 record.
///
/// Works level by level: every class on k+1 vertices arises from some class
/// on k vertices by appending one vertex with one of the 2^k possible
/// neighborhoods (delete any vertex and relabel it last to see this), so
/// extending every representative by every neighborhood and deduplicating
/// reaches every class.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n > MAX_ENUMERATION_N {
        return Err(EnumerateError::OutOfRange { n });
    }
    let mut reps = vec![Graph::empty(0)];
    for level in 0..n {
        let mut kept: Vec<Graph> = Vec::new();
        // Candidates bucketed by an isomorphism-invariant key so the
        // quadratic pairwise stage only runs within buckets.
        let mut buckets: HashMap<(Vec<usize>, Vec<(usize, usize)>), Vec<usize>> = HashMap::new();
        for parent in &reps {
            for neighborhood in 0u64..1 << level {
                let mut g = Graph::empty(level + 1);
                for (u, v) in parent.edges() {
                    g.add_edge(u, v);
                }
                for u in 0..level {
                    if neighborhood >> u & 1 == 1 {
                        g.add_edge(u, level);
                    }
                }
                let mut degrees: Vec<usize> = (0..=level).map(|v| g.degree(v)).collect();
                degrees.sort_unstable();
                let key = (degrees, color_refinement(&g).histogram());
                let bucket = buckets.entry(key).or_default();
                if !bucket.iter().any(|&i| are_isomorphic(&kept[i], &g).is_some()) {
                    bucket.push(kept.len());
                    kept.push(g);
                }
            }
        }
        kept.sort_by_key(write_graph6);
        reps = kept;
    }
    Ok(reps)
}
