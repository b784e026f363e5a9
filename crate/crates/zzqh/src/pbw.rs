//! Closed-form bases: sorted monomials for the cover, and the non-vanishing
//! criterion for monomial classes of the quadratic dual.

use crate::presentation::{ArrowKind, Path, Presentation};
use crate::quiver::Vertex;

/// All valid words e_x alpha_{i_1} ... alpha_{i_k} (alpha_0)^e with 1 <= i_1 < ... < i_k <= n.
pub fn closed_form_cover_basis(cover: &Presentation, n: usize) -> Vec<Path> {
    let mut out = Vec::new();
    for x in 0..cover.num_vertices() {
        for mask in 0u32..(1 << n) {
            let mut indices: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            for eps in 0..2 {
                if eps == 1 {
                    indices.push(0);
                }
                if let Some(p) = word(cover, x, &indices) {
                    out.push(p);
                }
            }
        }
    }
    out.sort();
    out
}

fn word(p: &Presentation, x: usize, indices: &[usize]) -> Option<Path> {
    let mut cur = x;
    let mut arrows = Vec::new();
    for &i in indices {
        let a = p.find_arrow(cur, &ArrowKind::Alpha(i))?;
        arrows.push(a);
        cur = p.arrows[a as usize].target;
    }
    Some(Path { source: x, arrows })
}

/// Whether the class of paths from x using d_i arrows of index i is nonzero in the
/// quadratic dual of the cover: the end point must stay inside the quiver in its
/// zeroth coordinate, and x_k >= d_{k+1} for k = 1..n (indices mod n+1).
pub fn shifted_dual_membership(x: &Vertex, d: &[u32]) -> bool {
    let c = x.coords();
    let m = c.len();
    if d.len() != m {
        return false;
    }
    if c[0] + d[0] < d[1 % m] {
        return false;
    }
    (1..m).all(|k| c[k] >= d[(k + 1) % m])
}
