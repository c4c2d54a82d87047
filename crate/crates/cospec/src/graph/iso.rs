//! Brute-force isomorphism by backtracking, pruned with stable refinement
//! colors computed jointly on the disjoint union.

use super::{Graph, Permutation};
use crate::wl::color_refinement;

/// Searches for a vertex bijection p with p(g) = h. Returns the first witness
/// in lexicographic image order, so identical labeled graphs yield the
/// identity.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Permutation> {
    search(g, h, false)
}

/// Searches `g` for an automorphism other than the identity.
pub fn nontrivial_automorphism(g: &Graph) -> Option<Permutation> {
    search(g, g, true)
}

fn search(g: &Graph, h: &Graph, skip_identity: bool) -> Option<Permutation> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let joint = color_refinement(&g.disjoint_union(h));
    let g_color = &joint.colors[..n];
    let h_color = &joint.colors[n..];
    // Each stable color must appear equally often on both sides.
    let mut balance = vec![0isize; joint.class_count];
    for &c in g_color {
        balance[c] += 1;
    }
    for &c in h_color {
        balance[c] -= 1;
    }
    if balance.iter().any(|&b| b != 0) {
        return None;
    }

    let mut state = Search {
        g,
        h,
        g_color,
        h_color,
        map: Vec::with_capacity(n),
        used: vec![false; n],
        skip_identity,
    };
    if state.extend() {
        let p = Permutation::new(state.map).expect("search assigns a bijection");
        debug_assert_eq!(&g.permute(&p), h);
        Some(p)
    } else {
        None
    }
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    g_color: &'a [usize],
    h_color: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
    skip_identity: bool,
}

impl Search<'_> {
    fn extend(&mut self) -> bool {
        let u = self.map.len();
        if u == self.g.vertex_count() {
            return !(self.skip_identity && self.map.iter().enumerate().all(|(i, &v)| i == v));
        }
        'candidates: for v in 0..self.h.vertex_count() {
            if self.used[v] || self.g_color[u] != self.h_color[v] {
                continue;
            }
            for (w, &img) in self.map.iter().enumerate() {
                if self.g.has_edge(w, u) != self.h.has_edge(img, v) {
                    continue 'candidates;
                }
            }
            self.map.push(v);
            self.used[v] = true;
            if self.extend() {
                return true;
            }
            self.map.pop();
            self.used[v] = false;
        }
        false
    }
}
