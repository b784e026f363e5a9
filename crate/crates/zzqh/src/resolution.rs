//! Sums of shifted projectives, minimal graded resolutions, Ext groups through
//! the Hom complex, and Yoneda products by chain-map lifting.

use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::engine::AlgebraInstance;
use crate::linalg::{is_zero_vec, kernel_vectors, normalize_leading, Echelon, Matrix, Q};
use crate::module::{shape_of, Module};
use crate::presentation::Bideg;
use crate::Error;

/// An indecomposable projective e_x A with its path basis.
#[derive(Clone, Debug)]
pub struct Projective {
    pub vertex: usize,
    pub module: Module,
    /// Arrow words of the basis paths, per vertex.
    pub words: Vec<Vec<Vec<u32>>>,
    /// (vertex, index) in increasing path length.
    pub order: Vec<(usize, usize)>,
    /// Prefix of each basis path: (vertex, index, last arrow).
    pub parent: Vec<Vec<Option<(usize, usize, u32)>>>,
    /// Index of the trivial path at the vertex itself.
    pub top: usize,
}

/// An algebra together with its indecomposable projectives.
#[derive(Clone, Debug)]
pub struct Ring {
    pub alg: AlgebraInstance,
    pub proj: Vec<Projective>,
}

impl Ring {
    pub fn new(alg: AlgebraInstance) -> Ring {
        let proj = (0..alg.num_vertices()).map(|x| build_projective(&alg, x)).collect();
        Ring { alg, proj }
    }

    pub fn num_vertices(&self) -> usize {
        self.alg.num_vertices()
    }

    pub fn shape(&self) -> crate::module::Shape {
        shape_of(&self.alg)
    }
}

fn build_projective(a: &AlgebraInstance, x: usize) -> Projective {
    let p = crate::module::projective(a, x);
    let nv = a.num_vertices();
    let mut words = vec![Vec::new(); nv];
    let mut parent = vec![Vec::new(); nv];
    let mut order = Vec::new();
    for (t, list) in p.paths.iter().enumerate() {
        for &(level, id) in list {
            let path = a.basis_path(level, id);
            words[t].push(path.arrows.clone());
            parent[t].push(if level == 0 {
                None
            } else {
                let prefix = crate::presentation::Path {
                    source: x,
                    arrows: path.arrows[..level - 1].to_vec(),
                };
                let pid = a.levels()[level - 1].id(&prefix).expect("basis is prefix closed");
                let (pv, pi) = p.locate[&(level - 1, pid)];
                Some((pv, pi, path.arrows[level - 1]))
            });
        }
    }
    let mut keyed: Vec<(usize, usize, usize)> = Vec::new();
    for (t, list) in p.paths.iter().enumerate() {
        for (i, &(level, _)) in list.iter().enumerate() {
            keyed.push((level, t, i));
        }
    }
    keyed.sort();
    order.extend(keyed.into_iter().map(|(_, t, i)| (t, i)));
    let top = p.paths[x].iter().position(|&(l, _)| l == 0).expect("trivial path");
    Projective { vertex: x, module: p.module, words, order, parent, top }
}

/// A direct sum of shifted indecomposable projectives.
#[derive(Clone, Debug)]
pub struct ProjSum {
    pub summands: Vec<(usize, Bideg)>,
    pub module: Module,
    /// offset[k][v]: first index of summand k inside the space at v.
    pub offset: Vec<Vec<usize>>,
    /// Per vertex, per index: (summand, index inside that projective).
    pub loc: Vec<Vec<(usize, usize)>>,
}

impl ProjSum {
    pub fn new(ring: &Ring, summands: Vec<(usize, Bideg)>) -> ProjSum {
        let nv = ring.num_vertices();
        let mut module = Module::zero(ring.shape(), nv);
        let mut offset = Vec::new();
        let mut loc = vec![Vec::new(); nv];
        for (k, &(x, b)) in summands.iter().enumerate() {
            let p = &ring.proj[x];
            offset.push((0..nv).map(|v| module.dim_at(v)).collect());
            for (v, l) in loc.iter_mut().enumerate() {
                for i in 0..p.module.dim_at(v) {
                    l.push((k, i));
                }
            }
            module = module.direct_sum(&p.module.shifted(b));
        }
        ProjSum { summands, module, offset, loc }
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Vertex and vector of the k-th generator.
    pub fn generator(&self, ring: &Ring, k: usize) -> (usize, Vec<Q>) {
        let (x, _) = self.summands[k];
        let mut v = vec![Q::zero(); self.module.dim_at(x)];
        v[self.offset[k][x] + ring.proj[x].top] = Q::one();
        (x, v)
    }

    /// Nonzero coordinates of a vector at v as (summand, path word, coefficient).
    pub fn decompose<'r>(&self, ring: &'r Ring, v: usize, vec: &[Q]) -> Vec<(usize, &'r [u32], Q)> {
        let mut out = Vec::new();
        for (i, c) in vec.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (k, j) = self.loc[v][i];
            let x = self.summands[k].0;
            out.push((k, ring.proj[x].words[v][j].as_slice(), c.clone()));
        }
        out
    }

    /// Per-vertex matrices of the map sending generator k to images[k] in `target`.
    pub fn map_to(&self, ring: &Ring, images: &[Vec<Q>], target: &Module) -> Vec<Matrix> {
        let nv = ring.num_vertices();
        let mut mats: Vec<Matrix> =
            (0..nv).map(|v| Matrix::zeros(target.dim_at(v), self.module.dim_at(v))).collect();
        for (k, &(x, _)) in self.summands.iter().enumerate() {
            let p = &ring.proj[x];
            let mut img: Vec<Vec<Vec<Q>>> = (0..nv).map(|v| vec![Vec::new(); p.module.dim_at(v)]).collect();
            for &(t, i) in &p.order {
                let val = match p.parent[t][i] {
                    None => images[k].clone(),
                    Some((pv, pi, a)) => {
                        let prev = &img[pv][pi];
                        if is_zero_vec(prev) {
                            vec![Q::zero(); target.dim_at(t)]
                        } else {
                            target.act(a as usize, prev)
                        }
                    }
                };
                let col = self.offset[k][t] + i;
                for (r, x) in val.iter().enumerate() {
                    if !x.is_zero() {
                        mats[t].set(r, col, x.clone());
                    }
                }
                img[t][i] = val;
            }
        }
        mats
    }
}

/// A minimal graded projective resolution.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub terms: Vec<ProjSum>,
    /// diffs[i][k]: image of generator k of terms[i+1], a vector in terms[i].
    pub diffs: Vec<Vec<Vec<Q>>>,
    pub diff_mats: Vec<Vec<Matrix>>,
    /// Images of the generators of terms[0] in the resolved module.
    pub aug: Vec<Vec<Q>>,
    pub aug_mats: Vec<Matrix>,
    pub complete: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    Length,
    Flat,
}

impl Grading {
    pub fn of(self, b: Bideg) -> i32 {
        match self {
            Grading::Length => b.total(),
            Grading::Flat => b.flat,
        }
    }
}

/// Offending generator of a non-linear resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearityWitness {
    pub step: usize,
    pub vertex: usize,
    pub shift: Bideg,
}

/// Minimal generators of the submodule spanned by `sub` (homogeneous vectors).
fn minimal_generators(x: &Module, sub: &[Vec<Vec<Q>>]) -> Vec<(usize, Vec<Q>)> {
    let mut rad: Vec<Echelon> = x.spaces.iter().map(|s| Echelon::new(s.len())).collect();
    for (v, vs) in sub.iter().enumerate() {
        for (k, &(s, t, _)) in x.shape.iter().enumerate() {
            if s != v {
                continue;
            }
            for u in vs {
                rad[t].insert(&x.act(k, u));
            }
        }
    }
    let mut gens = Vec::new();
    for (v, vs) in sub.iter().enumerate() {
        // lower degrees first keeps the choice deterministic and readable
        let mut sorted: Vec<&Vec<Q>> = vs.iter().collect();
        sorted.sort_by_key(|u| x.deg_of(v, u));
        for u in sorted {
            if rad[v].insert(u) {
                gens.push((v, u.clone()));
            }
        }
    }
    gens.sort_by(|a, b| (a.0, x.deg_of(a.0, &a.1)).cmp(&(b.0, x.deg_of(b.0, &b.1))));
    gens
}

/// Kernel of per-vertex matrices from `p`, computed blockwise by bidegree.
fn graded_kernel(p: &Module, mats: &[Matrix]) -> Vec<Vec<Vec<Q>>> {
    (0..p.num_vertices())
        .map(|v| {
            let mut out = Vec::new();
            for idx in p.blocks(v).values() {
                let rows: Vec<Vec<Q>> = (0..mats[v].rows())
                    .map(|r| idx.iter().map(|&c| mats[v].get(r, c).clone()).collect::<Vec<Q>>())
                    .filter(|row| !is_zero_vec(row))
                    .collect();
                for kv in kernel_vectors(&rows, idx.len()) {
                    let mut full = vec![Q::zero(); p.dim_at(v)];
                    for (x, &c) in kv.into_iter().zip(idx) {
                        full[c] = x;
                    }
                    out.push(full);
                }
            }
            out
        })
        .collect()
}

/// Projective cover of m: the sum of shifted projectives on the top and the map.
pub fn projective_cover(ring: &Ring, m: &Module) -> (ProjSum, Vec<Vec<Q>>, Vec<Matrix>) {
    let all: Vec<Vec<Vec<Q>>> = (0..m.num_vertices()).map(|v| (0..m.dim_at(v)).map(|i| m.unit(v, i)).collect()).collect();
    let gens = minimal_generators(m, &all);
    let summands = gens.iter().map(|(v, u)| (*v, m.deg_of(*v, u).unwrap())).collect();
    let p = ProjSum::new(ring, summands);
    let images: Vec<Vec<Q>> = gens.into_iter().map(|(_, u)| u).collect();
    let mats = p.map_to(ring, &images, m);
    (p, images, mats)
}

/// Minimal resolution computed up to homological degree `max_steps`.
pub fn minimal_resolution(ring: &Ring, m: &Module, max_steps: usize) -> Resolution {
    let (p0, aug, aug_mats) = projective_cover(ring, m);
    let mut res = Resolution { terms: vec![p0], diffs: Vec::new(), diff_mats: Vec::new(), aug, aug_mats, complete: false };
    loop {
        let last = res.terms.last().unwrap();
        let mats = res.diff_mats.last().unwrap_or(&res.aug_mats);
        let ker = graded_kernel(&last.module, mats);
        if ker.iter().all(|k| k.is_empty()) {
            res.complete = true;
            return res;
        }
        if res.terms.len() > max_steps {
            return res;
        }
        let gens = minimal_generators(&last.module, &ker);
        let summands = gens.iter().map(|(v, u)| (*v, last.module.deg_of(*v, u).unwrap())).collect();
        let next = ProjSum::new(ring, summands);
        let images: Vec<Vec<Q>> = gens.into_iter().map(|(_, u)| u).collect();
        let dm = next.map_to(ring, &images, &last.module);
        res.terms.push(next);
        res.diffs.push(images);
        res.diff_mats.push(dm);
    }
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    /// Shape: per step the list of (vertex, shift).
    pub fn shape(&self) -> Vec<Vec<(usize, Bideg)>> {
        self.terms.iter().map(|t| t.summands.clone()).collect()
    }

    /// Generators not sitting in degree equal to their step.
    pub fn linearity(&self, grading: Grading) -> Vec<LinearityWitness> {
        let mut out = Vec::new();
        for (i, t) in self.terms.iter().enumerate() {
            for &(v, b) in &t.summands {
                if grading.of(b) != i as i32 {
                    out.push(LinearityWitness { step: i, vertex: v, shift: b });
                }
            }
        }
        out
    }

    pub fn is_linear(&self, grading: Grading) -> bool {
        self.linearity(grading).is_empty()
    }

    /// No differential has a component on a trivial path.
    pub fn is_minimal(&self, ring: &Ring) -> bool {
        self.diffs.iter().enumerate().all(|(i, imgs)| {
            imgs.iter().enumerate().all(|(k, vec)| {
                let v = self.terms[i + 1].summands[k].0;
                self.terms[i].decompose(ring, v, vec).iter().all(|(_, w, _)| !w.is_empty())
            })
        })
    }

    /// d o d = 0 and exactness at every inner term, by rank counts.
    pub fn is_exact(&self) -> bool {
        let nv = self.aug_mats.len();
        for i in 0..self.terms.len() {
            let out = if i == 0 { &self.aug_mats } else { &self.diff_mats[i - 1] };
            for v in 0..nv {
                let dim = self.terms[i].module.dim_at(v);
                let incoming = self.diff_mats.get(i).map(|m| &m[v]);
                let rank_in = incoming.map(|m| m.rank()).unwrap_or(0);
                if let Some(m) = incoming {
                    if !out[v].mul(m).is_zero() {
                        return false;
                    }
                }
                let ker = dim - out[v].rank();
                let last = i + 1 == self.terms.len();
                if (!last || self.complete) && ker != rank_in {
                    return false;
                }
            }
        }
        true
    }

    /// Multiplicities of P_y with shift b in step i.
    pub fn multiplicities(&self) -> BTreeMap<(usize, usize, Bideg), usize> {
        let mut out = BTreeMap::new();
        for (i, t) in self.terms.iter().enumerate() {
            for &(v, b) in &t.summands {
                *out.entry((i, v, b)).or_insert(0) += 1;
            }
        }
        out
    }

    pub fn to_json(&self, ring: &Ring) -> serde_json::Value {
        let verts = &ring.alg.presentation().vertices;
        let pres = ring.alg.presentation();
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|t| {
                serde_json::Value::Array(
                    t.summands
                        .iter()
                        .map(|&(v, b)| serde_json::json!({"vertex": verts[v], "flat_shift": b.flat, "sharp_shift": b.sharp}))
                        .collect(),
                )
            })
            .collect();
        let diffs: Vec<serde_json::Value> = self
            .diffs
            .iter()
            .enumerate()
            .map(|(i, imgs)| {
                serde_json::Value::Array(
                    imgs.iter()
                        .enumerate()
                        .map(|(k, vec)| {
                            let v = self.terms[i + 1].summands[k].0;
                            let terms: Vec<serde_json::Value> = self.terms[i]
                                .decompose(ring, v, vec)
                                .into_iter()
                                .map(|(s, w, c)| {
                                    let path = crate::presentation::Path { source: self.terms[i].summands[s].0, arrows: w.to_vec() };
                                    serde_json::json!({"summand": s, "path": pres.path_string(&path), "coeff": c.to_string()})
                                })
                                .collect();
                            serde_json::Value::Array(terms)
                        })
                        .collect(),
                )
            })
            .collect();
        serde_json::json!({"terms": terms, "differentials": diffs, "complete": self.complete})
    }
}

/// Product of arrow matrices of `n` along a word, as a matrix from N_source.
fn path_matrix(n: &Module, source: usize, word: &[u32]) -> Matrix {
    let mut m = Matrix::identity(n.dim_at(source));
    for &a in word {
        m = n.action[a as usize].mul(&m);
    }
    m
}

/// Coordinates of a cochain complex Hom(P^i, N) in a fixed raise.
#[derive(Clone, Debug)]
struct Cochains {
    /// (generator, index in N at the generator's vertex)
    coords: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

fn cochains(term: &ProjSum, n: &Module, raise: Bideg) -> Cochains {
    let mut coords = Vec::new();
    for (k, &(v, b)) in term.summands.iter().enumerate() {
        for (j, &c) in n.spaces[v].iter().enumerate() {
            if c == b + raise {
                coords.push((k, j));
            }
        }
    }
    let index = coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    Cochains { coords, index }
}

/// One graded piece Ext^i(M, N) with raise r: maps sending degree b to degree b + r.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    pub step: usize,
    pub raise: Bideg,
    coords: Vec<(usize, usize)>,
    boundaries: Echelon,
    /// Cocycle representatives, reduced modulo coboundaries and normalized.
    pub reps: Vec<Vec<Q>>,
}

impl ExtGroup {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Per-generator vectors in N of a cochain.
    pub fn cochain_images(&self, res: &Resolution, n: &Module, c: &[Q]) -> Vec<Vec<Q>> {
        let term = &res.terms[self.step];
        let mut out: Vec<Vec<Q>> = term.summands.iter().map(|&(v, _)| vec![Q::zero(); n.dim_at(v)]).collect();
        for (x, &(k, j)) in c.iter().zip(&self.coords) {
            if !x.is_zero() {
                out[k][j] = x.clone();
            }
        }
        out
    }

    /// Class coordinates of a cocycle given per generator.
    pub fn class_of(&self, images: &[Vec<Q>]) -> Option<Vec<Q>> {
        let mut vec = vec![Q::zero(); self.coords.len()];
        for (i, &(k, j)) in self.coords.iter().enumerate() {
            vec[i] = images[k][j].clone();
        }
        for (k, img) in images.iter().enumerate() {
            for (j, x) in img.iter().enumerate() {
                if !x.is_zero() && !self.coords.iter().any(|&c| c == (k, j)) {
                    return None;
                }
            }
        }
        let r = self.boundaries.reduce(&vec);
        if self.reps.is_empty() {
            return if is_zero_vec(&r) { Some(Vec::new()) } else { None };
        }
        let m = Matrix::from_columns(&self.reps, self.coords.len());
        m.solve(&r)
    }
}

/// Hom-complex data for Ext(M, N) along a fixed resolution of M.
pub struct ExtComputer<'a> {
    pub ring: &'a Ring,
    pub res: &'a Resolution,
    pub target: &'a Module,
}

impl<'a> ExtComputer<'a> {
    pub fn new(ring: &'a Ring, res: &'a Resolution, target: &'a Module) -> Self {
        ExtComputer { ring, res, target }
    }

    /// Coboundary matrix C^i -> C^{i+1} in raise r.
    fn coboundary(&self, i: usize, raise: Bideg, src: &Cochains, dst: &Cochains) -> Matrix {
        let mut m = Matrix::zeros(dst.coords.len(), src.coords.len());
        if i + 1 >= self.res.terms.len() {
            return m;
        }
        let n = self.target;
        let term = &self.res.terms[i];
        let next = &self.res.terms[i + 1];
        let mut cache: HashMap<(usize, Vec<u32>), Matrix> = HashMap::new();
        for (kp, img) in self.res.diffs[i].iter().enumerate() {
            let (vp, bp) = next.summands[kp];
            let wanted: Vec<(usize, usize)> = n.spaces[vp]
                .iter()
                .enumerate()
                .filter(|(_, &c)| c == bp + raise)
                .map(|(jp, _)| (jp, dst.index[&(kp, jp)]))
                .collect();
            if wanted.is_empty() {
                continue;
            }
            for (k, word, c) in term.decompose(self.ring, vp, img) {
                let v = term.summands[k].0;
                let pm = cache.entry((v, word.to_vec())).or_insert_with(|| path_matrix(n, v, word));
                for j in 0..n.dim_at(v) {
                    let Some(&col) = src.index.get(&(k, j)) else { continue };
                    for &(jp, row) in &wanted {
                        let x = pm.get(jp, j);
                        if !x.is_zero() {
                            m.add_to(row, col, &(x * &c));
                        }
                    }
                }
            }
        }
        m
    }

    /// Raises that can carry a nonzero cochain in step i.
    pub fn raises(&self, i: usize) -> BTreeSet<Bideg> {
        let mut out = BTreeSet::new();
        if let Some(term) = self.res.terms.get(i) {
            for &(v, b) in &term.summands {
                for &c in &self.target.spaces[v] {
                    out.insert(c - b);
                }
            }
        }
        out
    }

    pub fn group(&self, i: usize, raise: Bideg) -> ExtGroup {
        let cur = match self.res.terms.get(i) {
            Some(t) => cochains(t, self.target, raise),
            None => Cochains { coords: Vec::new(), index: HashMap::new() },
        };
        let next = match self.res.terms.get(i + 1) {
            Some(t) => cochains(t, self.target, raise),
            None => Cochains { coords: Vec::new(), index: HashMap::new() },
        };
        let mut boundaries = Echelon::new(cur.coords.len());
        if i > 0 {
            let prev = cochains(&self.res.terms[i - 1], self.target, raise);
            let d = self.coboundary(i - 1, raise, &prev, &cur);
            for c in 0..d.cols() {
                boundaries.insert(&d.column(c));
            }
        }
        let d = self.coboundary(i, raise, &cur, &next);
        let cocycles = kernel_vectors(&d.to_rows(), cur.coords.len());
        let mut span = boundaries.clone();
        let mut reps = Vec::new();
        for z in cocycles {
            if span.insert(&z) {
                let mut r = boundaries.reduce(&z);
                normalize_leading(&mut r);
                reps.push(r);
            }
        }
        // make representatives independent of the kernel basis choice
        let mut ech = Echelon::new(cur.coords.len());
        for r in &reps {
            ech.insert(r);
        }
        let reps = ech.basis().to_vec();
        ExtGroup { step: i, raise, coords: cur.coords, boundaries, reps }
    }

    /// All nonzero graded pieces: (step, raise) -> dimension.
    pub fn dims(&self) -> BTreeMap<(usize, Bideg), usize> {
        let mut out = BTreeMap::new();
        for i in 0..self.res.terms.len() {
            for r in self.raises(i) {
                let d = self.group(i, r).dim();
                if d > 0 {
                    out.insert((i, r), d);
                }
            }
        }
        out
    }
}

/// Lifts a cocycle on terms[k] of `from` (values in the module resolved by `to`) to a
/// chain map; returns images of the generators of from.terms[k + t] in to.terms[t].
pub fn lift_cocycle(
    ring: &Ring,
    from: &Resolution,
    k: usize,
    images: &[Vec<Q>],
    to: &Resolution,
    upto: usize,
) -> Result<Vec<Vec<Vec<Q>>>, Error> {
    let mut out: Vec<Vec<Vec<Q>>> = Vec::new();
    let g0: Result<Vec<Vec<Q>>, Error> = images
        .iter()
        .enumerate()
        .map(|(g, img)| {
            let v = from.terms[k].summands[g].0;
            to.aug_mats[v].solve(img).ok_or_else(|| Error::Argument("cocycle does not lift".into()))
        })
        .collect();
    out.push(g0?);
    for t in 1..=upto {
        if k + t >= from.terms.len() {
            break;
        }
        if t >= to.terms.len() {
            out.push(from.terms[k + t].summands.iter().map(|_| Vec::new()).collect());
            continue;
        }
        let prev = &out[t - 1];
        let src_term = &from.terms[k + t - 1];
        let tgt_prev = &to.terms[t - 1];
        let mut level = Vec::new();
        for (g, d) in from.diffs[k + t - 1].iter().enumerate() {
            let v = from.terms[k + t].summands[g].0;
            let mut rhs = vec![Q::zero(); tgt_prev.module.dim_at(v)];
            for (s, word, c) in src_term.decompose(ring, v, d) {
                if prev[s].is_empty() {
                    continue;
                }
                let img = tgt_prev.module.act_path(&prev[s], word);
                for (r, x) in rhs.iter_mut().zip(img) {
                    *r += &c * &x;
                }
            }
            let sol = to.diff_mats[t - 1][v]
                .solve(&rhs)
                .ok_or_else(|| Error::Argument("chain map does not lift".into()))?;
            level.push(sol);
        }
        out.push(level);
    }
    Ok(out)
}

/// Evaluates a cocycle f on to.terms[l] (values in `n`) after a lifted chain map,
/// giving per-generator images of from.terms[k + l].
pub fn compose_with_lift(
    ring: &Ring,
    to: &Resolution,
    l: usize,
    f_images: &[Vec<Q>],
    n: &Module,
    lift_l: &[Vec<Q>],
    from_term: &ProjSum,
) -> Vec<Vec<Q>> {
    from_term
        .summands
        .iter()
        .zip(lift_l)
        .map(|(&(v, _), g)| {
            let mut out = vec![Q::zero(); n.dim_at(v)];
            if g.is_empty() || l >= to.terms.len() {
                return out;
            }
            for (s, word, c) in to.terms[l].decompose(ring, v, g) {
                let img = n.act_path(&f_images[s], word);
                for (o, x) in out.iter_mut().zip(img) {
                    *o += &c * &x;
                }
            }
            out
        })
        .collect()
}
