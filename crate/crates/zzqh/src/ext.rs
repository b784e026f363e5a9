//! The bigraded Ext algebra of the standard modules and its presentation.

use num_traits::{One, Signed, Zero};
use serde_json::json;
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use crate::engine::compute_basis;
use crate::linalg::{is_unit_magnitude, kernel_vectors, solve_gf2, Echelon, Q};
use crate::presentation::{element_vector, vector_element, Arrow, ArrowKind, Bideg, Element, Path, Presentation};
use crate::qh::Context;
use crate::quiver::{Dist, Quiver};
use crate::report::Report;
use crate::resolution::{compose_with_lift, lift_cocycle, minimal_resolution, ExtComputer, ExtGroup, Resolution};
use crate::Error;

/// A homogeneous class in Ext^step(Delta_x, Delta_y).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtClass {
    pub x: usize,
    pub y: usize,
    pub step: usize,
    pub raise: Bideg,
    pub coords: Vec<Q>,
}

impl ExtClass {
    /// (flat, sharp) index of the class: flat = b - c, sharp = c - b on the
    /// generator degree b and value degree c.
    pub fn bidegree(&self) -> (i32, i32) {
        (-self.raise.flat, self.raise.sharp)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

/// Resolutions of all standard modules over a cover, with cached Ext groups.
pub struct DeltaExt<'a> {
    pub ctx: &'a Context,
    pub res: Vec<Resolution>,
    cache: RefCell<HashMap<(usize, usize, usize, Bideg), ExtGroup>>,
}

/// dims[(x, y, i, j_flat, j_sharp)] of Ext^i(Delta_x, Delta_y) in that bidegree.
pub type ExtTable = BTreeMap<(usize, usize, usize, i32, i32), usize>;

impl<'a> DeltaExt<'a> {
    pub fn new(ctx: &'a Context, max_steps: usize) -> Result<Self, Error> {
        let nv = ctx.alg().num_vertices();
        let mut res = Vec::new();
        for x in 0..nv {
            let r = minimal_resolution(&ctx.ring, &ctx.standards[x], max_steps);
            if !r.complete {
                return Err(Error::Truncated { steps: max_steps });
            }
            res.push(r);
        }
        Ok(DeltaExt { ctx, res, cache: RefCell::new(HashMap::new()) })
    }

    pub fn num_vertices(&self) -> usize {
        self.res.len()
    }

    pub fn group(&self, x: usize, y: usize, step: usize, raise: Bideg) -> ExtGroup {
        let key = (x, y, step, raise);
        if let Some(g) = self.cache.borrow().get(&key) {
            return g.clone();
        }
        let g = ExtComputer::new(&self.ctx.ring, &self.res[x], &self.ctx.standards[y]).group(step, raise);
        self.cache.borrow_mut().insert(key, g.clone());
        g
    }

    pub fn table(&self) -> ExtTable {
        let mut out = ExtTable::new();
        for x in 0..self.num_vertices() {
            for y in 0..self.num_vertices() {
                let comp = ExtComputer::new(&self.ctx.ring, &self.res[x], &self.ctx.standards[y]);
                for i in 0..self.res[x].terms.len() {
                    for r in comp.raises(i) {
                        let d = self.group(x, y, i, r).dim();
                        if d > 0 {
                            out.insert((x, y, i, -r.flat, r.sharp), d);
                        }
                    }
                }
            }
        }
        out
    }

    /// Basis classes of one graded piece.
    pub fn classes(&self, x: usize, y: usize, step: usize, raise: Bideg) -> Vec<ExtClass> {
        let d = self.group(x, y, step, raise).dim();
        (0..d)
            .map(|k| {
                let mut coords = vec![Q::zero(); d];
                coords[k] = Q::one();
                ExtClass { x, y, step, raise, coords }
            })
            .collect()
    }

    pub fn identity(&self, x: usize) -> ExtClass {
        ExtClass { x, y: x, step: 0, raise: Bideg::ZERO, coords: vec![Q::one()] }
    }

    fn cocycle_images(&self, c: &ExtClass) -> Vec<Vec<Q>> {
        let g = self.group(c.x, c.y, c.step, c.raise);
        let mut vec = vec![Q::zero(); g.reps.first().map_or(0, |r| r.len())];
        for (coef, rep) in c.coords.iter().zip(&g.reps) {
            for (v, r) in vec.iter_mut().zip(rep) {
                *v += coef * r;
            }
        }
        if vec.is_empty() {
            let term = &self.res[c.x].terms[c.step.min(self.res[c.x].terms.len() - 1)];
            return term.summands.iter().map(|&(v, _)| vec![Q::zero(); self.ctx.standards[c.y].dim_at(v)]).collect();
        }
        g.cochain_images(&self.res[c.x], &self.ctx.standards[c.y], &vec)
    }

    /// Yoneda composite f o g for g in Ext(Delta_w, Delta_v) and f in Ext(Delta_v, Delta_u).
    pub fn yoneda(&self, f: &ExtClass, g: &ExtClass) -> Result<ExtClass, Error> {
        if f.x != g.y {
            return Err(Error::Argument("classes are not composable".into()));
        }
        let (w, v, u) = (g.x, g.y, f.y);
        let step = f.step + g.step;
        let raise = f.raise + g.raise;
        let target = self.group(w, u, step, raise);
        let zero = ExtClass { x: w, y: u, step, raise, coords: vec![Q::zero(); target.dim()] };
        if step >= self.res[w].terms.len() || f.step >= self.res[v].terms.len() || f.is_zero() || g.is_zero() {
            return Ok(zero);
        }
        let g_img = self.cocycle_images(g);
        let lifts = lift_cocycle(&self.ctx.ring, &self.res[w], g.step, &g_img, &self.res[v], f.step)?;
        let Some(lift) = lifts.get(f.step) else { return Ok(zero) };
        let f_img = self.cocycle_images(f);
        let comp = compose_with_lift(
            &self.ctx.ring,
            &self.res[v],
            f.step,
            &f_img,
            &self.ctx.standards[u],
            lift,
            &self.res[w].terms[step],
        );
        let coords = target.class_of(&comp).ok_or_else(|| Error::Argument("composite is not a cocycle".into()))?;
        Ok(ExtClass { x: w, y: u, step, raise, coords })
    }
}

/// Every nonzero entry satisfies i = d(x, y) - n * j_sharp (and j_flat = i).
pub fn check_degree_law(table: &ExtTable, order: &crate::quiver::OrderData, n: usize, names: &[String]) -> Report {
    let mut rep = Report::new("degree law");
    let mut bad = Vec::new();
    for (&(x, y, i, jf, js), &d) in table {
        let ok = match order.dist(x, y) {
            Dist::Finite(dist) => i as i64 == dist as i64 - n as i64 * js as i64 && jf == i as i32,
            Dist::Infinite => false,
        };
        if !ok {
            bad.push(json!({"x": names[x], "y": names[y], "i": i, "j_flat": jf, "j_sharp": js, "dim": d, "dist": format!("{:?}", order.dist(x, y))}));
        }
    }
    rep.check("degree_law", bad.is_empty(), || json!(bad));
    rep.info("nonzero_entries", json!(table.len()));
    rep
}

fn dual_sort_key(kind: &ArrowKind, n: usize) -> usize {
    match kind.index() {
        Some(0) => n + 1,
        Some(i) => i,
        None => n + 2,
    }
}

/// The presentation of Ext*(Delta, Delta) read off from degree-one classes and
/// the kernel of the quadratic multiplication.
pub struct BuiltDual {
    pub presentation: Presentation,
    pub classes: Vec<ExtClass>,
    pub report: Report,
}

pub fn build_dual_from_ext(de: &DeltaExt) -> Result<BuiltDual, Error> {
    let cp = de.ctx.alg().presentation();
    let (n, w) = cp.family.ok_or_else(|| Error::Argument("not a cover".into()))?;
    let nv = de.num_vertices();
    let mut rep = Report::new(format!("dual from Ext of {}", cp.name));
    let mut arrows: Vec<(Arrow, ExtClass)> = Vec::new();
    let mut unmatched = Vec::new();
    for x in 0..nv {
        for y in 0..nv {
            if x == y {
                continue;
            }
            for (step, raise) in [(0usize, Bideg::new(0, 1)), (1, Bideg::new(-1, 0))] {
                for c in de.classes(x, y, step, raise) {
                    // a class in Ext(Delta_x, Delta_y) is an arrow y -> x
                    let kind = if step == 0 {
                        cp.find_arrow(y, &ArrowKind::Alpha(0)).filter(|&a| cp.arrows[a as usize].target == x).map(|_| ArrowKind::Dual(0))
                    } else {
                        (1..=n)
                            .find(|&i| cp.find_arrow(x, &ArrowKind::Alpha(i)).map_or(false, |a| cp.arrows[a as usize].target == y))
                            .map(ArrowKind::Dual)
                    };
                    let kind = kind.unwrap_or_else(|| {
                        unmatched.push(json!({"from": cp.vertices[y], "to": cp.vertices[x], "step": step}));
                        ArrowKind::Named(format!("e{step}"))
                    });
                    let deg = if step == 0 { Bideg::new(0, 1) } else { Bideg::new(1, 0) };
                    arrows.push((Arrow { source: y, target: x, kind, deg }, c));
                }
            }
        }
    }
    rep.check("arrows_match_cover_arrows", unmatched.is_empty(), || json!(unmatched));
    arrows.sort_by_key(|(a, _)| (dual_sort_key(&a.kind, n), a.source, a.target));
    let (arrow_list, classes): (Vec<Arrow>, Vec<ExtClass>) = arrows.into_iter().unzip();
    let mut p = Presentation {
        name: format!("ext-dual({n},{w})"),
        vertices: cp.vertices.clone(),
        arrows: arrow_list,
        relations: Vec::new(),
        family: Some((n, w)),
    };

    let mut rels = Vec::new();
    let mut not_generated = Vec::new();
    let mut squares_zero = Vec::new();
    for ((u, t), paths) in p.length_two_paths() {
        // coordinates of each product, keyed by graded piece
        let mut blocks: BTreeMap<(usize, Bideg), usize> = BTreeMap::new();
        let mut prods = Vec::new();
        for path in &paths {
            let (a, b) = (path.arrows[0] as usize, path.arrows[1] as usize);
            let prod = de.yoneda(&classes[a], &classes[b])?;
            let dim = prod.coords.len();
            blocks.entry((prod.step, prod.raise)).or_insert(dim);
            if let (ArrowKind::Dual(i), ArrowKind::Dual(j)) = (&p.arrows[a].kind, &p.arrows[b].kind) {
                if i == j && *i != 0 && prod.is_zero() {
                    squares_zero.push(p.path_string(path));
                }
            }
            prods.push(prod);
        }
        let mut offset = BTreeMap::new();
        let mut total = 0;
        for (k, d) in &blocks {
            offset.insert(*k, total);
            total += d;
        }
        let mut rows = vec![vec![Q::zero(); paths.len()]; total];
        for (col, prod) in prods.iter().enumerate() {
            let o = offset[&(prod.step, prod.raise)];
            for (i, c) in prod.coords.iter().enumerate() {
                rows[o + i][col] = c.clone();
            }
        }
        let rank = crate::linalg::Matrix::from_rows(rows.clone(), paths.len()).rank();
        // every degree-two class must be a product of arrows
        let mut degree_two = 0;
        for (step, raise) in [(0usize, Bideg::new(0, 2)), (1, Bideg::new(-1, 1)), (2, Bideg::new(-2, 0))] {
            degree_two += de.group(t, u, step, raise).dim();
        }
        if rank != degree_two {
            not_generated.push(json!({"from": cp.vertices[u], "to": cp.vertices[t], "rank_products": rank, "dim_ext": degree_two}));
        }
        for k in kernel_vectors(&rows, paths.len()) {
            rels.push(vector_element(&k, &paths));
        }
    }
    rep.check("degree_two_generated_by_products", not_generated.is_empty(), || json!(not_generated));
    rep.check("nonzero_ai_squares", squares_zero.is_empty(), || json!(squares_zero));
    p.relations = rels;
    let rels = p.relations.clone();
    let presentation = Presentation::new(p.name, p.vertices, p.arrows, rels, p.family)?;
    Ok(BuiltDual { presentation, classes, report: rep })
}

/// Relation spaces of `p` with arrows renamed into `target` by (source, target, kind).
fn transported_spaces(
    p: &Presentation,
    target: &Presentation,
) -> Result<BTreeMap<(usize, usize), (Vec<Path>, Echelon)>, String> {
    let amap: Vec<u32> = p
        .arrows
        .iter()
        .map(|a| {
            target
                .arrows
                .iter()
                .position(|b| b.source == a.source && b.target == a.target && b.kind == a.kind)
                .map(|i| i as u32)
                .ok_or_else(|| format!("arrow {} has no counterpart", a.kind))
        })
        .collect::<Result<_, _>>()?;
    let blocks = target.length_two_paths();
    let mut out: BTreeMap<(usize, usize), (Vec<Path>, Echelon)> =
        blocks.iter().map(|(k, ps)| (*k, (ps.clone(), Echelon::new(ps.len())))).collect();
    for r in &p.relations {
        let moved = Element::from_terms(
            r.terms().map(|(path, c)| (Path { source: path.source, arrows: path.arrows.iter().map(|&a| amap[a as usize]).collect() }, c.clone())).collect(),
        );
        let (path0, _) = moved.terms().next().unwrap();
        let key = (path0.source, target.path_target(path0).map_err(|e| e.to_string())?);
        let (paths, ech) = out.get_mut(&key).unwrap();
        ech.insert(&element_vector(&moved, paths));
    }
    Ok(out)
}

fn path_sign(path: &Path, flips: &[bool]) -> bool {
    path.arrows.iter().filter(|&&a| flips[a as usize]).count() % 2 == 1
}

/// Compares two presentations of the dual on the same vertices: arrows, relation
/// spaces (exactly, else up to rescaling arrows by signs), and bigraded dimensions.
pub fn compare_dual(built: &Presentation, conj: &Presentation) -> Report {
    let mut rep = Report::new(format!("compare {} with {}", built.name, conj.name));
    let key = |a: &Arrow| (a.source, a.target, a.kind.to_string());
    let mut ba: Vec<_> = built.arrows.iter().map(key).collect();
    let mut ca: Vec<_> = conj.arrows.iter().map(key).collect();
    ba.sort();
    ca.sort();
    if ba != ca {
        let only_built: Vec<_> = ba.iter().filter(|a| !ca.contains(a)).map(|a| format!("{:?}", a)).collect();
        let only_conj: Vec<_> = ca.iter().filter(|a| !ba.contains(a)).map(|a| format!("{:?}", a)).collect();
        rep.fail("arrows_equal", json!({"only_built": only_built, "only_conjectured": only_conj}));
        return rep;
    }
    rep.pass("arrows_equal");
    let spaces_b = match transported_spaces(built, conj) {
        Ok(s) => s,
        Err(e) => {
            rep.fail("relations_equal", json!(e));
            return rep;
        }
    };
    let spaces_c = conj.relation_spaces();
    let mismatch = |sb: &BTreeMap<(usize, usize), (Vec<Path>, Echelon)>| -> Option<serde_json::Value> {
        for (k, (paths, ec)) in &spaces_c {
            let eb = &sb[k].1;
            if !eb.equals(ec) {
                return Some(json!({
                    "from": conj.vertices[k.0], "to": conj.vertices[k.1],
                    "paths": paths.iter().map(|p| conj.path_string(p)).collect::<Vec<_>>(),
                    "built": eb.basis().iter().map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "conjectured": ec.basis().iter().map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                }));
            }
        }
        None
    };
    match mismatch(&spaces_b) {
        None => rep.info("relations_equal", json!("exact")),
        Some(first) => {
            // sign equations from binomial relations of the conjectured presentation
            let na = conj.arrows.len();
            let mut eqs = Vec::new();
            let mut bad = None;
            for r in &conj.relations {
                let terms: Vec<(&Path, &Q)> = r.terms().collect();
                if terms.len() != 2 {
                    continue;
                }
                let (p1, c1) = terms[0];
                let (p2, c2) = terms[1];
                let t = conj.path_target(p1).unwrap();
                let (paths, eb) = &spaces_b[&(p1.source, t)];
                let i1 = paths.iter().position(|p| p == p1).unwrap();
                let i2 = paths.iter().position(|p| p == p2).unwrap();
                // vectors of the built space supported on {p1, p2}
                let rows: Vec<Vec<Q>> = (0..paths.len())
                    .filter(|&i| i != i1 && i != i2)
                    .map(|i| eb.basis().iter().map(|b| b[i].clone()).collect())
                    .collect();
                let ker = kernel_vectors(&rows, eb.rank());
                let found: Option<(Q, Q)> = (ker.len() == 1).then(|| {
                    let v: Vec<Q> = (0..paths.len())
                        .map(|i| eb.basis().iter().zip(&ker[0]).fold(Q::zero(), |acc, (b, l)| acc + &b[i] * l))
                        .collect();
                    (v[i1].clone(), v[i2].clone())
                });
                match found {
                    Some((b1, b2)) if !b1.is_zero() && !b2.is_zero() => {
                        let ratio = (c2 / c1) / (b2 / b1);
                        if !is_unit_magnitude(&ratio) {
                            bad = Some(json!({"relation": conj.element_string(r), "ratio": ratio.to_string()}));
                            break;
                        }
                        let mut row = vec![false; na];
                        for &a in p1.arrows.iter().chain(&p2.arrows) {
                            row[a as usize] ^= true;
                        }
                        eqs.push((row, ratio.is_negative()));
                    }
                    _ => {
                        bad = Some(json!({"relation": conj.element_string(r), "reason": "no matching binomial in the built space"}));
                        break;
                    }
                }
            }
            let flips = match bad {
                Some(w) => Err(w),
                None => solve_gf2(&eqs, na).ok_or_else(|| json!("sign equations are inconsistent")),
            };
            match flips {
                Err(w) => rep.fail("relations_equal", json!({"first_mismatch": first, "rescaling": w})),
                Ok(flips) => {
                    let mut rescaled = spaces_b.clone();
                    for (paths, ech) in rescaled.values_mut() {
                        let vs: Vec<Vec<Q>> = ech
                            .basis()
                            .iter()
                            .map(|v| v.iter().zip(paths.iter()).map(|(c, p)| if path_sign(p, &flips) { -c.clone() } else { c.clone() }).collect())
                            .collect();
                        *ech = Echelon::from_vectors(paths.len(), &vs);
                    }
                    match mismatch(&rescaled) {
                        None => {
                            let flipped: Vec<String> = flips
                                .iter()
                                .enumerate()
                                .filter(|(_, &f)| f)
                                .map(|(a, _)| {
                                    let ar = &conj.arrows[a];
                                    format!("{}:{}->{}", ar.kind, conj.vertices[ar.source], conj.vertices[ar.target])
                                })
                                .collect();
                            rep.info("relations_equal", json!({"up_to_rescaling": flipped}));
                        }
                        Some(w) => rep.fail("relations_equal", json!({"after_rescaling": w})),
                    }
                }
            }
        }
    }
    match (compute_basis(built, crate::DEFAULT_MAX_LEN), compute_basis(conj, crate::DEFAULT_MAX_LEN)) {
        (Ok(b), Ok(c)) => {
            let (db, dc) = (b.dims(), c.dims());
            rep.check("bigraded_dims_equal", db == dc, || {
                let diff: Vec<_> = db
                    .keys()
                    .chain(dc.keys())
                    .filter(|k| db.get(k) != dc.get(k))
                    .take(5)
                    .map(|(l, g, s, t)| json!({"length": l, "bidegree": [g.flat, g.sharp], "from": s, "to": t, "built": db.get(&(*l, *g, *s, *t)), "conjectured": dc.get(&(*l, *g, *s, *t))}))
                    .collect();
                json!(diff)
            });
        }
        (Err(e), _) | (_, Err(e)) => rep.fail("bigraded_dims_equal", json!(e.to_string())),
    }
    rep
}

/// dim e_u D e_w in bidegree (i, j) equals the table entry (x = w, y = u, i, i, j).
pub fn check_dims_against_table(dual: &Presentation, table: &ExtTable) -> Report {
    let mut rep = Report::new("dual dimensions against the Ext table");
    match compute_basis(dual, crate::DEFAULT_MAX_LEN) {
        Ok(d) => {
            let mut from_alg: BTreeMap<(usize, usize, usize, i32, i32), usize> = BTreeMap::new();
            for ((_, g, s, t), c) in d.dims() {
                *from_alg.entry((t, s, g.flat as usize, g.flat, g.sharp)).or_insert(0) += c;
            }
            let mut bad = Vec::new();
            for k in from_alg.keys().chain(table.keys()) {
                if from_alg.get(k) != table.get(k) {
                    bad.push(json!({"entry": [k.0, k.1, k.2, k.3, k.4], "algebra": from_alg.get(k), "ext": table.get(k)}));
                }
            }
            rep.check("dims_match_ext_table", bad.is_empty(), || json!(bad));
            let flat0: usize = d.dims().iter().filter(|((_, g, _, _), _)| g.flat == 0).map(|(_, c)| c).sum();
            rep.info("flat0_dim", json!(flat0));
        }
        Err(e) => rep.fail("dims_match_ext_table", json!(e.to_string())),
    }
    rep
}

/// Koszulity of the dual in the total grading and the shift law
/// i = d(v, u) - n j for every basis path u -> v of bidegree (i, j).
pub fn check_dual_koszul(dual: &Presentation, max_steps: usize) -> Result<Report, Error> {
    let (n, w) = dual.family.ok_or_else(|| Error::Argument("not a zigzag-family dual".into()))?;
    let a = compute_basis(dual, crate::DEFAULT_MAX_LEN)?;
    let ring = crate::resolution::Ring::new(a.clone());
    let mut rep = crate::koszul::check_koszul(&ring, max_steps, false);
    rep.title = format!("dual koszul {}", dual.name);
    let order = Quiver::new(n, w)?.order();
    let mut bad = Vec::new();
    for l in a.levels() {
        for p in &l.basis {
            let t = dual.path_target(p)?;
            let g = dual.path_deg(p);
            let ok = match order.dist(t, p.source) {
                Dist::Finite(d) => {
                    g.flat as i64 == d as i64 - n as i64 * g.sharp as i64
                        && g.total() as i64 == d as i64 - g.sharp as i64 * (n as i64 - 1)
                }
                Dist::Infinite => false,
            };
            if !ok {
                bad.push(json!({"path": dual.path_string(p), "bidegree": [g.flat, g.sharp], "dist": format!("{:?}", order.dist(t, p.source))}));
            }
        }
    }
    rep.check("shift_law", bad.is_empty(), || json!(bad));
    let acyclic = dual.arrows.iter().all(|ar| order.lt(ar.target, ar.source));
    rep.check("arrows_decrease_order", acyclic, || json!("an arrow does not decrease the order"));
    Ok(rep)
}

/// Hom(Delta_y, nabla_x) is k exactly for x = y and all higher Ext vanish.
pub fn check_simple_costandard_dims(de: &DeltaExt) -> Report {
    let ctx = de.ctx;
    let mut rep = Report::new("simple costandard dimensions");
    let mut bad = Vec::new();
    for y in 0..de.num_vertices() {
        for x in 0..de.num_vertices() {
            let dims = ExtComputer::new(&ctx.ring, &de.res[y], &ctx.costandards[x]).dims();
            let want: BTreeMap<(usize, Bideg), usize> = if x == y { [((0, Bideg::ZERO), 1)].into() } else { BTreeMap::new() };
            if dims != want {
                bad.push(json!({"standard": ctx.vertex_name(y), "costandard": ctx.vertex_name(x), "dims": dims.iter().map(|((i, r), d)| json!([i, r.flat, r.sharp, d])).collect::<Vec<_>>()}));
            }
        }
    }
    rep.check("delta_nabla_duality", bad.is_empty(), || json!(bad));
    rep
}

/// A copy of `p` with the first binomial relation's second coefficient doubled.
pub fn perturb(p: &Presentation) -> Presentation {
    let mut out = p.clone();
    if let Some(r) = out.relations.iter_mut().find(|r| r.terms().count() == 2) {
        let terms: Vec<(Path, Q)> = r.terms().map(|(p, c)| (p.clone(), c.clone())).collect();
        *r = Element::from_terms(vec![terms[0].clone(), (terms[1].0.clone(), &terms[1].1 * Q::from_integer(2.into()))]);
    }
    out.name = format!("{}~perturbed", p.name);
    out
}

/// Renames named arrows into dual kinds, e.g. the printed line presentation.
pub fn relabel(p: &Presentation, names: &[(&str, ArrowKind)], family: (usize, u32)) -> Presentation {
    let mut out = p.clone();
    for a in out.arrows.iter_mut() {
        if let ArrowKind::Named(nm) = &a.kind {
            if let Some((_, k)) = names.iter().find(|(s, _)| s == nm) {
                a.kind = k.clone();
            }
        }
    }
    out.family = Some(family);
    out
}
