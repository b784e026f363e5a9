//! Partial orders on vertices, standard filtrations, and the costandard coresolution.

use serde::Serialize;

use crate::engine::AlgebraInstance;
use crate::linalg::{is_zero_vec, Q};
use crate::module::{injective, left_multiplication, projective, Module, ModuleMap};
use crate::presentation::{ArrowKind, Bideg, Element, Path};
use crate::quiver::OrderData;

/// A partial order on vertex indices.
#[derive(Clone, Debug)]
pub struct Poset {
    leq: Vec<Vec<bool>>,
}

impl Poset {
    pub fn from_order(o: &OrderData, nv: usize) -> Poset {
        Poset { leq: (0..nv).map(|x| (0..nv).map(|y| o.leq(x, y)).collect()).collect() }
    }

    pub fn from_fn(nv: usize, f: impl Fn(usize, usize) -> bool) -> Poset {
        Poset { leq: (0..nv).map(|x| (0..nv).map(|y| x == y || f(x, y)).collect()).collect() }
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    /// A linear extension, smallest first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let below = |x: usize| (0..self.len()).filter(|&z| self.leq(z, x)).count();
        let mut v: Vec<usize> = (0..self.len()).collect();
        v.sort_by_key(|&x| (below(x), x));
        v
    }
}

/// A standard factor Delta_x shifted by a bidegree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub vertex: usize,
    pub shift: Bideg,
}

/// Why a module has no standard filtration along the greedy procedure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationFailure {
    pub vertex: usize,
    pub reason: String,
}

/// Standard filtration found by splitting off the trace of a maximal vertex.
/// Factors are listed from the top of the module down.
pub fn delta_filtration(
    a: &AlgebraInstance,
    m: &Module,
    poset: &Poset,
    standards: &[Module],
) -> Result<Vec<Factor>, FiltrationFailure> {
    let mut cur = m.clone();
    let mut factors = Vec::new();
    for &y in poset.linear_extension().iter().rev() {
        if cur.dim_at(y) == 0 {
            continue;
        }
        let p = projective(a, y);
        for i in 0..cur.dim_at(y) {
            let e = cur.unit(y, i);
            for (z, list) in p.paths.iter().enumerate() {
                if poset.leq(z, y) {
                    continue;
                }
                for &(level, id) in list {
                    let word = &a.basis_path(level, id).arrows;
                    if !is_zero_vec(&cur.act_path(&e, word)) {
                        return Err(FiltrationFailure {
                            vertex: y,
                            reason: format!("trace of P_{y} reaches vertex {z} outside the order ideal"),
                        });
                    }
                }
            }
        }
        let seeds: Vec<(usize, Vec<Q>)> = (0..cur.dim_at(y)).map(|i| (y, cur.unit(y, i))).collect();
        let sub = cur.generated(&seeds);
        let dim_sub: usize = sub.iter().map(|e| e.rank()).sum();
        if dim_sub != cur.dim_at(y) * standards[y].dim() {
            return Err(FiltrationFailure {
                vertex: y,
                reason: format!("trace of P_{y} has dimension {dim_sub}, not a sum of standards"),
            });
        }
        for i in 0..cur.dim_at(y) {
            factors.push(Factor { vertex: y, shift: cur.spaces[y][i] });
        }
        cur = cur.quotient(&sub);
    }
    factors.reverse();
    Ok(factors)
}

/// 0 -> nabla_x -> I_x -> I_y -> ... along the alpha_0 arrows ending at x, x-f_0, ...
#[derive(Clone, Debug)]
pub struct Coresolution {
    pub vertices: Vec<usize>,
    pub terms: Vec<Module>,
    pub maps: Vec<ModuleMap>,
    pub kernel_dim: usize,
}

impl Coresolution {
    /// Zero compositions, exactness at inner terms and surjectivity at the end.
    pub fn is_exact(&self) -> bool {
        for w in self.maps.windows(2) {
            let comp = w[0].compose(&w[1]);
            if comp.mats.iter().any(|m| !m.is_zero()) {
                return false;
            }
        }
        for k in 1..self.terms.len() {
            let dim = self.terms[k].dim();
            let rank_in = self.maps[k - 1].rank();
            let rank_out = self.maps.get(k).map(|f| f.rank()).unwrap_or(0);
            if dim - rank_out != rank_in {
                return false;
            }
        }
        true
    }
}

/// Builds the coresolution over the cover, with maps dual to left multiplication
/// by alpha_0 on projectives of the opposite algebra.
pub fn costandard_coresolution(op: &AlgebraInstance, x: usize) -> Coresolution {
    let pres = op.presentation();
    let mut vertices = vec![x];
    let mut cur = x;
    // in the opposite quiver alpha_0: y -> x of the cover starts at x
    while let Some(a) = pres.find_arrow(cur, &ArrowKind::Alpha(0)) {
        cur = pres.arrows[a as usize].target;
        vertices.push(cur);
    }
    let terms: Vec<Module> = vertices.iter().map(|&v| injective(op, v)).collect();
    let projs: Vec<_> = vertices.iter().map(|&v| projective(op, v)).collect();
    let mut maps = Vec::new();
    for k in 0..vertices.len() - 1 {
        let a = pres.find_arrow(vertices[k], &ArrowKind::Alpha(0)).unwrap();
        let e = Element::path(Path { source: vertices[k], arrows: vec![a] });
        maps.push(left_multiplication(op, &projs[k], &projs[k + 1], &e).transpose());
    }
    let kernel_dim = match maps.first() {
        Some(f) => terms[0].dim() - f.rank(),
        None => terms[0].dim(),
    };
    Coresolution { vertices, terms, maps, kernel_dim }
}
