//! Finite-dimensional right modules given as quiver representations.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};

use crate::engine::AlgebraInstance;
use crate::linalg::{is_zero_vec, kernel_vectors, q, Echelon, Matrix, Q};
use crate::presentation::{Bideg, Element};
use crate::Error;

/// Arrow shape of the underlying quiver: (source, target, bidegree).
pub type Shape = Vec<(usize, usize, Bideg)>;

pub fn shape_of(a: &AlgebraInstance) -> Shape {
    a.presentation().arrows.iter().map(|x| (x.source, x.target, x.deg)).collect()
}

/// A right module: a vector space per vertex (basis vectors carry bidegrees) and a
/// matrix per arrow sending the source space to the target space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    pub shape: Shape,
    pub spaces: Vec<Vec<Bideg>>,
    pub action: Vec<Matrix>,
}

/// Per-vertex linear maps between two modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub mats: Vec<Matrix>,
}

impl Module {
    pub fn zero(shape: Shape, nv: usize) -> Module {
        let action = shape.iter().map(|_| Matrix::zeros(0, 0)).collect();
        Module { shape, spaces: vec![Vec::new(); nv], action }
    }

    pub fn num_vertices(&self) -> usize {
        self.spaces.len()
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.spaces[v].len()
    }

    pub fn dim(&self) -> usize {
        self.spaces.iter().map(|s| s.len()).sum()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.len()).collect()
    }

    /// Multiset of (vertex, bidegree) of basis vectors.
    pub fn graded_dims(&self) -> BTreeMap<(usize, Bideg), usize> {
        let mut out = BTreeMap::new();
        for (v, s) in self.spaces.iter().enumerate() {
            for &b in s {
                *out.entry((v, b)).or_insert(0) += 1;
            }
        }
        out
    }

    /// Indices at vertex v grouped by bidegree.
    pub fn blocks(&self, v: usize) -> BTreeMap<Bideg, Vec<usize>> {
        let mut out: BTreeMap<Bideg, Vec<usize>> = BTreeMap::new();
        for (i, &b) in self.spaces[v].iter().enumerate() {
            out.entry(b).or_default().push(i);
        }
        out
    }

    pub fn unit(&self, v: usize, i: usize) -> Vec<Q> {
        let mut e = vec![Q::zero(); self.dim_at(v)];
        e[i] = Q::one();
        e
    }

    pub fn act(&self, arrow: usize, vec: &[Q]) -> Vec<Q> {
        self.action[arrow].mul_vec(vec)
    }

    /// Right action of a path given by arrow ids, starting at vertex v.
    pub fn act_path(&self, vec: &[Q], arrows: &[u32]) -> Vec<Q> {
        let mut cur = vec.to_vec();
        for &a in arrows {
            if is_zero_vec(&cur) {
                let t = self.shape[a as usize].1;
                return vec![Q::zero(); self.dim_at(t)];
            }
            cur = self.act(a as usize, &cur);
        }
        cur
    }

    /// Right action of an algebra element supported on paths starting at v.
    pub fn act_element(&self, v: usize, vec: &[Q], e: &Element, target: usize) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim_at(target)];
        for (p, c) in e.terms() {
            if p.source != v {
                continue;
            }
            let img = self.act_path(vec, &p.arrows);
            if img.len() != out.len() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(img) {
                *o += c * &x;
            }
        }
        out
    }

    /// Degree of a homogeneous nonzero vector at v.
    pub fn deg_of(&self, v: usize, vec: &[Q]) -> Option<Bideg> {
        vec.iter().position(|x| !x.is_zero()).map(|i| self.spaces[v][i])
    }

    pub fn shifted(&self, by: Bideg) -> Module {
        let mut m = self.clone();
        for s in m.spaces.iter_mut() {
            for b in s.iter_mut() {
                *b = *b + by;
            }
        }
        m
    }

    /// Checks that every relation of `a` acts as zero and degrees are respected.
    pub fn validate(&self, a: &AlgebraInstance) -> Result<(), Error> {
        for (k, &(s, t, d)) in self.shape.iter().enumerate() {
            let m = &self.action[k];
            if m.rows() != self.dim_at(t) || m.cols() != self.dim_at(s) {
                return Err(Error::Argument(format!("arrow {k}: matrix has wrong size")));
            }
            for c in 0..m.cols() {
                for r in 0..m.rows() {
                    if !m.get(r, c).is_zero() && self.spaces[t][r] != self.spaces[s][c] + d {
                        return Err(Error::Argument(format!("arrow {k}: action not homogeneous")));
                    }
                }
            }
        }
        for rel in &a.presentation().relations {
            let (p0, _) = rel.terms().next().unwrap();
            let s = p0.source;
            let t = a.presentation().path_target(p0)?;
            for i in 0..self.dim_at(s) {
                if !is_zero_vec(&self.act_element(s, &self.unit(s, i), rel, t)) {
                    return Err(Error::Argument(format!(
                        "relation {} does not act as zero",
                        a.presentation().element_string(rel)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &Module) -> Module {
        let nv = self.num_vertices();
        let spaces = (0..nv)
            .map(|v| self.spaces[v].iter().chain(&other.spaces[v]).copied().collect())
            .collect();
        let action = self
            .shape
            .iter()
            .enumerate()
            .map(|(k, &(s, t, _))| {
                let (a, b) = (&self.action[k], &other.action[k]);
                let mut m = Matrix::zeros(self.dim_at(t) + other.dim_at(t), self.dim_at(s) + other.dim_at(s));
                for r in 0..a.rows() {
                    for c in 0..a.cols() {
                        m.set(r, c, a.get(r, c).clone());
                    }
                }
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        m.set(a.rows() + r, a.cols() + c, b.get(r, c).clone());
                    }
                }
                m
            })
            .collect();
        Module { shape: self.shape.clone(), spaces, action }
    }

    /// Vector-space dual: a module over the opposite algebra.
    pub fn dualize(&self) -> Module {
        let shape = self.shape.iter().map(|&(s, t, d)| (t, s, d)).collect();
        let spaces = self.spaces.iter().map(|s| s.iter().map(|&b| -b).collect()).collect();
        let action = self.action.iter().map(|m| m.transpose()).collect();
        Module { shape, spaces, action }
    }

    /// Radical M.rad as a graded subspace.
    pub fn radical(&self) -> Vec<Echelon> {
        let mut rad: Vec<Echelon> = self.spaces.iter().map(|s| Echelon::new(s.len())).collect();
        for (k, &(s, t, _)) in self.shape.iter().enumerate() {
            for i in 0..self.dim_at(s) {
                let img = self.action[k].column(i);
                rad[t].insert(&img);
            }
        }
        rad
    }

    /// Socle (common kernel of all arrows) per vertex.
    pub fn socle(&self) -> Vec<Vec<Vec<Q>>> {
        (0..self.num_vertices())
            .map(|v| {
                let mut out = Vec::new();
                for idx in self.blocks(v).values() {
                    let mut rows = Vec::new();
                    for (k, &(s, _, _)) in self.shape.iter().enumerate() {
                        if s != v {
                            continue;
                        }
                        let m = &self.action[k];
                        for r in 0..m.rows() {
                            rows.push(idx.iter().map(|&c| m.get(r, c).clone()).collect::<Vec<_>>());
                        }
                    }
                    for kv in kernel_vectors(&rows, idx.len()) {
                        let mut full = vec![Q::zero(); self.dim_at(v)];
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

    /// Socle and top as multisets of (vertex, bidegree).
    pub fn socle_top(&self) -> (BTreeMap<(usize, Bideg), usize>, BTreeMap<(usize, Bideg), usize>) {
        let mut soc = BTreeMap::new();
        for (v, vs) in self.socle().into_iter().enumerate() {
            for vec in vs {
                *soc.entry((v, self.deg_of(v, &vec).unwrap())).or_insert(0) += 1;
            }
        }
        let rad = self.radical();
        let mut top = BTreeMap::new();
        for v in 0..self.num_vertices() {
            let mut ech = rad[v].clone();
            for i in 0..self.dim_at(v) {
                if ech.insert(&self.unit(v, i)) {
                    *top.entry((v, self.spaces[v][i])).or_insert(0) += 1;
                }
            }
        }
        (soc, top)
    }

    /// Submodule spanned by homogeneous vectors (closed under the action).
    pub fn submodule(&self, gens: &[Echelon]) -> Module {
        let spaces: Vec<Vec<Bideg>> = gens
            .iter()
            .enumerate()
            .map(|(v, e)| e.basis().iter().map(|b| self.deg_of(v, b).unwrap()).collect())
            .collect();
        let action = self
            .shape
            .iter()
            .enumerate()
            .map(|(k, &(s, t, _))| {
                let mut m = Matrix::zeros(gens[t].rank(), gens[s].rank());
                for (c, b) in gens[s].basis().iter().enumerate() {
                    let img = self.act(k, b);
                    let coords = gens[t].coords(&img).expect("subspace not closed under the action");
                    for (r, x) in coords.into_iter().enumerate() {
                        m.set(r, c, x);
                    }
                }
                m
            })
            .collect();
        Module { shape: self.shape.clone(), spaces, action }
    }

    /// Submodule generated by the given homogeneous vectors.
    pub fn generated(&self, seeds: &[(usize, Vec<Q>)]) -> Vec<Echelon> {
        let mut sub: Vec<Echelon> = self.spaces.iter().map(|s| Echelon::new(s.len())).collect();
        let mut stack: Vec<(usize, Vec<Q>)> = seeds.to_vec();
        while let Some((v, vec)) = stack.pop() {
            if !sub[v].insert(&vec) {
                continue;
            }
            for (k, &(s, t, _)) in self.shape.iter().enumerate() {
                if s == v {
                    let img = self.act(k, &vec);
                    if !is_zero_vec(&img) {
                        stack.push((t, img));
                    }
                }
            }
        }
        sub
    }

    /// Quotient by a graded submodule; the basis is the set of non-pivot coordinates.
    pub fn quotient(&self, sub: &[Echelon]) -> Module {
        let keep: Vec<Vec<usize>> = sub
            .iter()
            .enumerate()
            .map(|(v, e)| (0..self.dim_at(v)).filter(|i| !e.pivots().contains(i)).collect())
            .collect();
        let spaces = keep
            .iter()
            .enumerate()
            .map(|(v, ks)| ks.iter().map(|&i| self.spaces[v][i]).collect())
            .collect();
        let action = self
            .shape
            .iter()
            .enumerate()
            .map(|(k, &(s, t, _))| {
                let mut m = Matrix::zeros(keep[t].len(), keep[s].len());
                for (c, &i) in keep[s].iter().enumerate() {
                    let img = sub[t].reduce(&self.act(k, &self.unit(s, i)));
                    for (r, &j) in keep[t].iter().enumerate() {
                        if !img[j].is_zero() {
                            m.set(r, c, img[j].clone());
                        }
                    }
                }
                m
            })
            .collect();
        Module { shape: self.shape.clone(), spaces, action }
    }

    /// Keeps only the basis vectors whose bidegree satisfies `keep`, which must span a
    /// submodule (or a quotient when `as_quotient`).
    pub fn degree_part(&self, keep: impl Fn(Bideg) -> bool, as_quotient: bool) -> Module {
        let sub: Vec<Echelon> = (0..self.num_vertices())
            .map(|v| {
                let vecs: Vec<Vec<Q>> = (0..self.dim_at(v))
                    .filter(|&i| keep(self.spaces[v][i]) != as_quotient)
                    .map(|i| self.unit(v, i))
                    .collect();
                Echelon::from_vectors(self.dim_at(v), &vecs)
            })
            .collect();
        if as_quotient {
            self.quotient(&sub)
        } else {
            self.submodule(&sub)
        }
    }
}

impl ModuleMap {
    pub fn zero(m: &Module, n: &Module) -> ModuleMap {
        ModuleMap { mats: (0..m.num_vertices()).map(|v| Matrix::zeros(n.dim_at(v), m.dim_at(v))).collect() }
    }

    pub fn commutes(&self, m: &Module, n: &Module) -> bool {
        m.shape.iter().enumerate().all(|(k, &(s, t, _))| {
            self.mats[t].mul(&m.action[k]) == n.action[k].mul(&self.mats[s])
        })
    }

    pub fn compose(&self, then: &ModuleMap) -> ModuleMap {
        ModuleMap { mats: self.mats.iter().zip(&then.mats).map(|(a, b)| b.mul(a)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.mats.iter().map(|m| m.rank()).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.mats.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.mats.iter().all(|m| m.rank() == m.rows())
    }

    pub fn transpose(&self) -> ModuleMap {
        ModuleMap { mats: self.mats.iter().map(|m| m.transpose()).collect() }
    }

    pub fn combine(maps: &[ModuleMap], coeffs: &[Q]) -> ModuleMap {
        let mut mats: Vec<Matrix> = maps[0].mats.iter().map(|m| Matrix::zeros(m.rows(), m.cols())).collect();
        for (f, c) in maps.iter().zip(coeffs) {
            for (acc, m) in mats.iter_mut().zip(&f.mats) {
                for r in 0..m.rows() {
                    for col in 0..m.cols() {
                        let x = m.get(r, col);
                        if !x.is_zero() {
                            acc.add_to(r, col, &(x * c));
                        }
                    }
                }
            }
        }
        ModuleMap { mats }
    }
}

/// Basis of module maps M -> N raising bidegree by `degree` (all degrees if None).
pub fn hom_space(m: &Module, n: &Module, degree: Option<Bideg>) -> Vec<ModuleMap> {
    let nv = m.num_vertices();
    // variable layout
    let mut var: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut vars = Vec::new();
    for v in 0..nv {
        for i in 0..m.dim_at(v) {
            for j in 0..n.dim_at(v) {
                let ok = match degree {
                    Some(d) => n.spaces[v][j] == m.spaces[v][i] + d,
                    None => true,
                };
                if ok {
                    var.insert((v, j, i), vars.len());
                    vars.push((v, j, i));
                }
            }
        }
    }
    let nvars = vars.len();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (k, &(s, t, _)) in m.shape.iter().enumerate() {
        let (ma, na) = (&m.action[k], &n.action[k]);
        for i in 0..m.dim_at(s) {
            for jp in 0..n.dim_at(t) {
                // (f_t M_a)[jp, i] - (N_a f_s)[jp, i] = 0
                let mut row = vec![Q::zero(); nvars];
                let mut any = false;
                for kk in 0..m.dim_at(t) {
                    let x = ma.get(kk, i);
                    if x.is_zero() {
                        continue;
                    }
                    if let Some(&vi) = var.get(&(t, jp, kk)) {
                        row[vi] += x;
                        any = true;
                    }
                }
                for l in 0..n.dim_at(s) {
                    let x = na.get(jp, l);
                    if x.is_zero() {
                        continue;
                    }
                    if let Some(&vi) = var.get(&(s, l, i)) {
                        row[vi] -= x;
                        any = true;
                    }
                }
                if any {
                    rows.push(row);
                }
            }
        }
    }
    kernel_vectors(&rows, nvars)
        .into_iter()
        .map(|sol| {
            let mut f = ModuleMap::zero(m, n);
            for (x, &(v, j, i)) in sol.into_iter().zip(&vars) {
                if !x.is_zero() {
                    f.mats[v].set(j, i, x);
                }
            }
            f
        })
        .collect()
}

/// Searches for an isomorphism among random combinations of the Hom basis.
pub fn find_isomorphism(m: &Module, n: &Module, degree: Option<Bideg>) -> Option<ModuleMap> {
    if m.dims() != n.dims() {
        return None;
    }
    let homs = hom_space(m, n, degree);
    if homs.is_empty() {
        return if m.dim() == 0 { Some(ModuleMap::zero(m, n)) } else { None };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..8 {
        let coeffs: Vec<Q> = homs.iter().map(|_| q(rng.gen_range(-50..=50))).collect();
        let f = ModuleMap::combine(&homs, &coeffs);
        if f.is_injective() {
            return Some(f);
        }
    }
    None
}

/// Index of the module basis of e_x A: per vertex, the (level, id) of each path.
#[derive(Clone, Debug)]
pub struct Projective {
    pub vertex: usize,
    pub module: Module,
    pub paths: Vec<Vec<(usize, u32)>>,
    pub locate: HashMap<(usize, u32), (usize, usize)>,
}

pub fn projective(a: &AlgebraInstance, x: usize) -> Projective {
    let nv = a.num_vertices();
    let shape = shape_of(a);
    let mut paths: Vec<Vec<(usize, u32)>> = vec![Vec::new(); nv];
    let mut spaces: Vec<Vec<Bideg>> = vec![Vec::new(); nv];
    let mut locate = HashMap::new();
    for (level, id) in a.basis_from(x) {
        let t = a.basis_target(level, id);
        locate.insert((level, id), (t, paths[t].len()));
        paths[t].push((level, id));
        spaces[t].push(a.basis_deg(level, id));
    }
    let action = shape
        .iter()
        .enumerate()
        .map(|(k, &(s, t, _))| {
            let mut m = Matrix::zeros(paths[t].len(), paths[s].len());
            for (c, &(level, id)) in paths[s].iter().enumerate() {
                for (b, coef) in a.step(level, &vec![(id, Q::one())], k as u32) {
                    let (tt, r) = locate[&(level + 1, b)];
                    debug_assert_eq!(tt, t);
                    m.set(r, c, coef);
                }
            }
            m
        })
        .collect();
    Projective { vertex: x, module: Module { shape, spaces, action }, paths, locate }
}

pub fn simple(a: &AlgebraInstance, x: usize) -> Module {
    let nv = a.num_vertices();
    let shape = shape_of(a);
    let mut spaces = vec![Vec::new(); nv];
    spaces[x].push(Bideg::ZERO);
    let action = shape.iter().map(|&(s, t, _)| Matrix::zeros(spaces[t].len(), spaces[s].len())).collect();
    Module { shape, spaces, action }
}

/// I_x = D(A e_x), computed from the projective of the opposite algebra.
pub fn injective(op: &AlgebraInstance, x: usize) -> Module {
    projective(op, x).module.dualize()
}

/// Left multiplication by an element of e_x A e_y, as a map P_y -> P_x.
pub fn left_multiplication(a: &AlgebraInstance, px: &Projective, py: &Projective, e: &Element) -> ModuleMap {
    let mut f = ModuleMap::zero(&py.module, &px.module);
    for (t, list) in py.paths.iter().enumerate() {
        for (c, &(level, id)) in list.iter().enumerate() {
            let p = a.basis_path(level, id).clone();
            let prod = a.multiply(e, &Element::path(p)).expect("composable");
            for (path, coef) in prod.terms() {
                let key = (path.len(), a.levels()[path.len()].id(path).unwrap());
                let (tt, r) = px.locate[&key];
                debug_assert_eq!(tt, t);
                f.mats[t].set(r, c, coef.clone());
            }
        }
    }
    f
}

/// Largest quotient of P_x whose composition factors sit at vertices y with leq(y, x).
pub fn standard(a: &AlgebraInstance, x: usize, leq: impl Fn(usize, usize) -> bool) -> Module {
    let p = projective(a, x).module;
    let seeds: Vec<(usize, Vec<Q>)> = (0..p.num_vertices())
        .filter(|&v| !leq(v, x))
        .flat_map(|v| (0..p.dim_at(v)).map(move |i| (v, i)))
        .map(|(v, i)| (v, p.unit(v, i)))
        .collect();
    let sub = p.generated(&seeds);
    p.quotient(&sub)
}

/// Largest submodule of I_x with composition factors at vertices y with leq(y, x),
/// computed over the opposite algebra.
pub fn costandard(op: &AlgebraInstance, x: usize, leq: impl Fn(usize, usize) -> bool) -> Module {
    standard(op, x, leq).dualize()
}

impl Module {
    /// Restriction along a vertex map (new -> old) and arrow map (new -> old).
    pub fn restrict(&self, shape: Shape, vmap: &[usize], amap: &[usize]) -> Module {
        let spaces = vmap.iter().map(|&v| self.spaces[v].clone()).collect();
        let action = amap.iter().map(|&a| self.action[a].clone()).collect();
        Module { shape, spaces, action }
    }
}

impl ModuleMap {
    pub fn restrict(&self, vmap: &[usize]) -> ModuleMap {
        ModuleMap { mats: vmap.iter().map(|&v| self.mats[v].clone()).collect() }
    }

    /// All matrix entries, concatenated vertex by vertex.
    pub fn flatten(&self) -> Vec<Q> {
        self.mats.iter().flat_map(|m| m.to_rows().into_iter().flatten()).collect()
    }
}
