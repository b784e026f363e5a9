//! Degreewise normal-form bases for presented algebras.
//!
//! Level d is spanned by the candidates b.a (b a basis path of length d-1, a an
//! arrow). The relations of length l contribute u.r for every basis path u of
//! length d-l; row reduction with the largest candidates as pivots leaves the
//! lexicographically smallest words as basis.

use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

use crate::linalg::{rref_rows, Matrix, Q};
use crate::presentation::{Bideg, Element, Path, Presentation};
use crate::Error;

/// Sparse combination of basis elements of one level.
pub type Combo = Vec<(u32, Q)>;

#[derive(Clone, Debug, Default)]
pub struct Level {
    pub basis: Vec<Path>,
    pub targets: Vec<usize>,
    pub degs: Vec<Bideg>,
    index: HashMap<Path, u32>,
    /// (basis id one level down, arrow) -> reduced combination at this level.
    step: HashMap<(u32, u32), Combo>,
}

impl Level {
    pub fn id(&self, p: &Path) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct AlgebraInstance {
    pres: Presentation,
    levels: Vec<Level>,
    finite: bool,
}

pub const DEFAULT_MAX_LEN: usize = 64;

impl AlgebraInstance {
    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn is_finite(&self) -> bool {
        self.finite
    }

    pub fn num_vertices(&self) -> usize {
        self.pres.num_vertices()
    }

    pub fn dim(&self) -> usize {
        self.levels.iter().map(|l| l.len()).sum()
    }

    /// Largest length with a nonzero basis element.
    pub fn max_len(&self) -> usize {
        self.levels.iter().rposition(|l| !l.is_empty()).unwrap_or(0)
    }

    /// Reduces the combination at `level` by right multiplication with an arrow.
    pub fn step(&self, level: usize, combo: &Combo, arrow: u32) -> Combo {
        let Some(next) = self.levels.get(level + 1) else {
            return Vec::new();
        };
        let mut acc: BTreeMap<u32, Q> = BTreeMap::new();
        for (b, c) in combo {
            if let Some(image) = next.step.get(&(*b, arrow)) {
                for (t, x) in image {
                    *acc.entry(*t).or_insert_with(Q::zero) += c * x;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Normal form of a single path as a combination at level `p.len()`.
    pub fn reduce_path(&self, p: &Path) -> Result<Combo, Error> {
        self.pres.path_target(p)?;
        let mut combo: Combo = vec![(p.source as u32, Q::one())];
        for (k, &a) in p.arrows.iter().enumerate() {
            combo = self.step(k, &combo, a);
            if combo.is_empty() {
                break;
            }
        }
        Ok(combo)
    }

    pub fn combo_element(&self, level: usize, combo: &Combo) -> Element {
        Element::from_terms(
            combo.iter().map(|(b, c)| (self.levels[level].basis[*b as usize].clone(), c.clone())).collect(),
        )
    }

    pub fn normal_form(&self, e: &Element) -> Result<Element, Error> {
        let mut out = Element::zero();
        for (p, c) in e.terms() {
            let combo = self.reduce_path(p)?;
            out = out.plus(&self.combo_element(p.len(), &combo).scale(c));
        }
        Ok(out)
    }

    pub fn multiply(&self, u: &Element, v: &Element) -> Result<Element, Error> {
        let mut out = Element::zero();
        for (p, c) in u.terms() {
            for (r, d) in v.terms() {
                if self.pres.path_target(p)? != r.source {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.extend(&r.arrows);
                let prod = Path { source: p.source, arrows };
                out = out.plus(&self.normal_form(&Element::path(prod))?.scale(&(c * d)));
            }
        }
        Ok(out)
    }

    /// All basis paths with the given source, as (level, id).
    pub fn basis_from(&self, x: usize) -> Vec<(usize, u32)> {
        let mut out = Vec::new();
        for (d, l) in self.levels.iter().enumerate() {
            for (i, p) in l.basis.iter().enumerate() {
                if p.source == x {
                    out.push((d, i as u32));
                }
            }
        }
        out
    }

    /// All basis paths with the given target, as (level, id).
    pub fn basis_to(&self, y: usize) -> Vec<(usize, u32)> {
        let mut out = Vec::new();
        for (d, l) in self.levels.iter().enumerate() {
            for (i, &t) in l.targets.iter().enumerate() {
                if t == y {
                    out.push((d, i as u32));
                }
            }
        }
        out
    }

    pub fn basis_path(&self, level: usize, id: u32) -> &Path {
        &self.levels[level].basis[id as usize]
    }

    pub fn basis_target(&self, level: usize, id: u32) -> usize {
        self.levels[level].targets[id as usize]
    }

    pub fn basis_deg(&self, level: usize, id: u32) -> Bideg {
        self.levels[level].degs[id as usize]
    }

    /// Entry (x, y) = dim e_x A e_y.
    pub fn cartan(&self) -> Result<Matrix, Error> {
        if !self.finite {
            return Err(Error::Argument("Cartan matrix of an infinite algebra".into()));
        }
        let n = self.num_vertices();
        let mut m = vec![vec![0i64; n]; n];
        for l in &self.levels {
            for (p, &t) in l.basis.iter().zip(&l.targets) {
                m[p.source][t] += 1;
            }
        }
        Ok(Matrix::from_i64(&m))
    }

    /// dims keyed by (length, bidegree, source, target).
    pub fn dims(&self) -> BTreeMap<(usize, Bideg, usize, usize), usize> {
        let mut out = BTreeMap::new();
        for (d, l) in self.levels.iter().enumerate() {
            for ((p, &t), &g) in l.basis.iter().zip(&l.targets).zip(&l.degs) {
                *out.entry((d, g, p.source, t)).or_insert(0) += 1;
            }
        }
        out
    }

    pub fn opposite(&self) -> Result<AlgebraInstance, Error> {
        compute_basis(&self.pres.opposite(), self.levels.len() + 1)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let levels: Vec<serde_json::Value> = self
            .levels
            .iter()
            .map(|l| {
                let words: Vec<String> = l.basis.iter().map(|p| self.pres.path_string(p)).collect();
                serde_json::Value::from(words)
            })
            .collect();
        let dims: Vec<usize> = self.levels.iter().map(|l| l.len()).collect();
        serde_json::json!({
            "presentation": self.pres.to_json(),
            "finite": self.finite,
            "dim": self.dim(),
            "dims_by_length": dims,
            "basis": levels,
        })
    }
}

/// Computes the normal-form basis level by level up to `max_len`.
pub fn compute_basis(pres: &Presentation, max_len: usize) -> Result<AlgebraInstance, Error> {
    let nv = pres.num_vertices();
    let mut level0 = Level::default();
    for v in 0..nv {
        let p = Path::trivial(v);
        level0.index.insert(p.clone(), v as u32);
        level0.basis.push(p);
        level0.targets.push(v);
        level0.degs.push(Bideg::ZERO);
    }
    let mut alg = AlgebraInstance { pres: pres.clone(), levels: vec![level0], finite: false };
    let out_arrows: Vec<Vec<u32>> = (0..nv).map(|v| pres.out_arrows(v)).collect();
    let mut rel_by_len: BTreeMap<usize, Vec<&Element>> = BTreeMap::new();
    for r in &pres.relations {
        if let Some((p, _)) = r.terms().next() {
            rel_by_len.entry(p.len()).or_default().push(r);
        }
    }
    if nv == 0 {
        alg.finite = true;
        return Ok(alg);
    }
    for d in 1..=max_len {
        let prev = &alg.levels[d - 1];
        // candidates grouped by (source, target)
        let mut blocks: BTreeMap<(usize, usize), Vec<(Path, u32, u32, Bideg)>> = BTreeMap::new();
        for (b, p) in prev.basis.iter().enumerate() {
            let t = prev.targets[b];
            for &a in &out_arrows[t] {
                let arrow = &pres.arrows[a as usize];
                let mut arrows = p.arrows.clone();
                arrows.push(a);
                let cand = Path { source: p.source, arrows };
                blocks.entry((p.source, arrow.target)).or_default().push((
                    cand,
                    b as u32,
                    a,
                    prev.degs[b] + arrow.deg,
                ));
            }
        }
        for cands in blocks.values_mut() {
            cands.sort_by(|x, y| y.0.cmp(&x.0));
        }
        let col_of: HashMap<(u32, u32), usize> = blocks
            .values()
            .flat_map(|cands| cands.iter().enumerate().map(|(c, cd)| ((cd.1, cd.2), c)))
            .collect();
        // relation rows
        let mut rows: BTreeMap<(usize, usize), Vec<Vec<Q>>> = BTreeMap::new();
        for (&len, rels) in rel_by_len.range(..=d) {
            let base = &alg.levels[d - len];
            for r in rels {
                let (p0, _) = r.terms().next().unwrap();
                let rs = p0.source;
                let rt = pres.path_target(p0)?;
                for (uid, (u, &ut)) in base.basis.iter().zip(&base.targets).enumerate() {
                    if ut != rs {
                        continue;
                    }
                    let key = (u.source, rt);
                    let Some(cands) = blocks.get(&key) else { continue };
                    let mut row = vec![Q::zero(); cands.len()];
                    for (w, c) in r.terms() {
                        let mut combo: Combo = vec![(uid as u32, Q::one())];
                        for (k, &a) in w.arrows[..w.len() - 1].iter().enumerate() {
                            combo = alg.step(d - len + k, &combo, a);
                        }
                        let last = *w.arrows.last().unwrap();
                        for (b, x) in combo {
                            row[col_of[&(b, last)]] += c * &x;
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.entry(key).or_default().push(row);
                    }
                }
            }
        }
        let mut reduced: Vec<(&(usize, usize), Vec<Vec<Q>>, Vec<usize>)> = Vec::new();
        let mut kept: Vec<(Path, usize, Bideg, (u32, u32))> = Vec::new();
        for (key, cands) in &blocks {
            let mut rws = rows.remove(key).unwrap_or_default();
            let pivots = rref_rows(&mut rws, cands.len());
            let mut is_pivot = vec![false; cands.len()];
            for &p in &pivots {
                is_pivot[p] = true;
            }
            for (c, cand) in cands.iter().enumerate() {
                if !is_pivot[c] {
                    kept.push((cand.0.clone(), key.1, cand.3, (cand.1, cand.2)));
                }
            }
            reduced.push((key, rws, pivots));
        }
        kept.sort_by(|a, b| a.0.cmp(&b.0));
        let mut level = Level::default();
        let mut cand_to_id: HashMap<(u32, u32), u32> = HashMap::new();
        for (i, (p, t, g, origin)) in kept.into_iter().enumerate() {
            level.index.insert(p.clone(), i as u32);
            level.basis.push(p);
            level.targets.push(t);
            level.degs.push(g);
            cand_to_id.insert(origin, i as u32);
            level.step.insert(origin, vec![(i as u32, Q::one())]);
        }
        for (key, rws, pivots) in reduced {
            let cands = &blocks[key];
            for (row, &p) in rws.iter().zip(&pivots) {
                let mut combo: Combo = row
                    .iter()
                    .enumerate()
                    .filter(|(c, x)| *c != p && !x.is_zero())
                    .map(|(c, x)| (cand_to_id[&(cands[c].1, cands[c].2)], -x.clone()))
                    .collect();
                combo.sort_by_key(|(b, _)| *b);
                level.step.insert((cands[p].1, cands[p].2), combo);
            }
        }
        let empty = level.is_empty();
        alg.levels.push(level);
        if empty {
            alg.finite = true;
            alg.levels.pop();
            return Ok(alg);
        }
    }
    Err(Error::NonTermination { max_len, top_dim: alg.levels.last().map_or(0, |l| l.len()) })
}
