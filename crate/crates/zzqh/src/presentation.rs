//! Quivers with homogeneous relations, and the concrete presentations used in this crate.

use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::linalg::{kernel_vectors, q, Echelon, Q};
use crate::quiver::{Quiver, Vertex};
use crate::Error;

/// (flat, sharp) bidegree. Total degree is the sum.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Bideg {
    pub flat: i32,
    pub sharp: i32,
}

impl Bideg {
    pub const ZERO: Bideg = Bideg { flat: 0, sharp: 0 };

    pub fn new(flat: i32, sharp: i32) -> Self {
        Bideg { flat, sharp }
    }

    pub fn total(self) -> i32 {
        self.flat + self.sharp
    }
}

impl fmt::Debug for Bideg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.flat, self.sharp)
    }
}

impl Add for Bideg {
    type Output = Bideg;
    fn add(self, o: Bideg) -> Bideg {
        Bideg::new(self.flat + o.flat, self.sharp + o.sharp)
    }
}

impl Sub for Bideg {
    type Output = Bideg;
    fn sub(self, o: Bideg) -> Bideg {
        Bideg::new(self.flat - o.flat, self.sharp - o.sharp)
    }
}

impl Neg for Bideg {
    type Output = Bideg;
    fn neg(self) -> Bideg {
        Bideg::new(-self.flat, -self.sharp)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum ArrowKind {
    /// alpha_i of a zigzag-type quiver.
    Alpha(usize),
    /// a_i of the dual quiver.
    Dual(usize),
    Named(String),
}

impl ArrowKind {
    pub fn index(&self) -> Option<usize> {
        match self {
            ArrowKind::Alpha(i) | ArrowKind::Dual(i) => Some(*i),
            ArrowKind::Named(_) => None,
        }
    }
}

impl fmt::Display for ArrowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrowKind::Alpha(i) => write!(f, "alpha{i}"),
            ArrowKind::Dual(i) => write!(f, "a{i}"),
            ArrowKind::Named(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub kind: ArrowKind,
    pub deg: Bideg,
}

/// A path: a source vertex and a sequence of arrow ids (first arrow first).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<u32>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Finite linear combination of paths; never stores zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Element {
    terms: BTreeMap<Path, Q>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn path(p: Path) -> Self {
        Element::from_terms(vec![(p, Q::one())])
    }

    pub fn from_terms(terms: Vec<(Path, Q)>) -> Self {
        let mut e = Element::zero();
        for (p, c) in terms {
            e.add_term(p, c);
        }
        e
    }

    pub fn add_term(&mut self, p: Path, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect() }
    }

    pub fn plus(&self, other: &Element) -> Element {
        let mut e = self.clone();
        for (p, c) in other.terms() {
            e.add_term(p.clone(), c.clone());
        }
        e
    }

    pub fn minus(&self, other: &Element) -> Element {
        self.plus(&other.scale(&q(-1)))
    }
}

/// A quiver with homogeneous relations and an arrow bigrading.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Element>,
    /// (n, w) when the quiver is Q^(n,w) (possibly with arrows removed or reversed).
    pub family: Option<(usize, u32)>,
}

impl Presentation {
    /// Builds and validates a presentation.
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<Vertex>,
        arrows: Vec<Arrow>,
        relations: Vec<Element>,
        family: Option<(usize, u32)>,
    ) -> Result<Self, Error> {
        let p = Presentation { name: name.into(), vertices, arrows, relations, family };
        for r in &p.relations {
            p.check_relation(r)?;
        }
        Ok(p)
    }

    fn check_relation(&self, r: &Element) -> Result<(), Error> {
        let mut shape = None;
        for (path, _) in r.terms() {
            let t = self.path_target(path)?;
            let s = (path.source, t, path.len(), self.path_deg(path));
            if path.len() < 2 {
                return Err(Error::Argument("relations must have length at least 2".into()));
            }
            match shape {
                None => shape = Some(s),
                Some(prev) if prev != s => {
                    return Err(Error::Argument(format!("inhomogeneous relation in {}", self.name)))
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, v: &Vertex) -> Option<usize> {
        self.vertices.iter().position(|x| x == v)
    }

    pub fn path_target(&self, p: &Path) -> Result<usize, Error> {
        let mut at = p.source;
        for &a in &p.arrows {
            let arrow = &self.arrows[a as usize];
            if arrow.source != at {
                return Err(Error::InvalidPath(self.path_string(p)));
            }
            at = arrow.target;
        }
        Ok(at)
    }

    pub fn path_deg(&self, p: &Path) -> Bideg {
        p.arrows.iter().fold(Bideg::ZERO, |d, &a| d + self.arrows[a as usize].deg)
    }

    pub fn path_string(&self, p: &Path) -> String {
        let mut s = format!("e{}", self.vertices[p.source]);
        for &a in &p.arrows {
            s.push('.');
            s.push_str(&self.arrows[a as usize].kind.to_string());
        }
        s
    }

    pub fn element_string(&self, e: &Element) -> String {
        if e.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> =
            e.terms().map(|(p, c)| format!("{}*{}", c, self.path_string(p))).collect();
        parts.join(" + ")
    }

    /// Arrow id with the given source and kind.
    pub fn find_arrow(&self, source: usize, kind: &ArrowKind) -> Option<u32> {
        self.arrows.iter().position(|a| a.source == source && &a.kind == kind).map(|i| i as u32)
    }

    pub fn out_arrows(&self, v: usize) -> Vec<u32> {
        (0..self.arrows.len() as u32).filter(|&a| self.arrows[a as usize].source == v).collect()
    }

    /// Every relation is homogeneous in the flat grading (checked at construction).
    pub fn is_quadratic(&self) -> bool {
        self.relations.iter().all(|r| r.terms().all(|(p, _)| p.len() == 2))
    }

    /// All paths of length 2, grouped by (source, target).
    pub fn length_two_paths(&self) -> BTreeMap<(usize, usize), Vec<Path>> {
        let mut out: BTreeMap<(usize, usize), Vec<Path>> = BTreeMap::new();
        for (a, arr) in self.arrows.iter().enumerate() {
            for (b, brr) in self.arrows.iter().enumerate() {
                if arr.target == brr.source {
                    out.entry((arr.source, brr.target))
                        .or_default()
                        .push(Path { source: arr.source, arrows: vec![a as u32, b as u32] });
                }
            }
        }
        for v in out.values_mut() {
            v.sort();
        }
        out
    }

    /// Relation space per (source, target) block for quadratic presentations.
    pub fn relation_spaces(&self) -> BTreeMap<(usize, usize), (Vec<Path>, Echelon)> {
        let blocks = self.length_two_paths();
        let mut out = BTreeMap::new();
        for ((s, t), paths) in blocks {
            let mut ech = Echelon::new(paths.len());
            for r in &self.relations {
                let Some((p0, _)) = r.terms().next() else { continue };
                if p0.source != s || self.path_target(p0).ok() != Some(t) || p0.len() != 2 {
                    continue;
                }
                ech.insert(&element_vector(r, &paths));
            }
            out.insert((s, t), (paths, ech));
        }
        out
    }

    /// Reversed arrows, reversed relation words.
    pub fn opposite(&self) -> Presentation {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { source: a.target, target: a.source, kind: a.kind.clone(), deg: a.deg })
            .collect();
        let relations = self
            .relations
            .iter()
            .map(|r| {
                Element::from_terms(
                    r.terms()
                        .map(|(p, c)| {
                            let t = self.path_target(p).expect("validated relation");
                            let mut rev = p.arrows.clone();
                            rev.reverse();
                            (Path { source: t, arrows: rev }, c.clone())
                        })
                        .collect(),
                )
            })
            .collect();
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        Presentation { name, vertices: self.vertices.clone(), arrows, relations, family: self.family }
    }

    /// Same quiver; each degree-2 relation space replaced by its annihilator.
    pub fn quadratic_dual(&self) -> Result<Presentation, Error> {
        if !self.is_quadratic() {
            return Err(Error::Argument(format!("{} is not quadratic", self.name)));
        }
        let mut relations = Vec::new();
        for (_, (paths, ech)) in self.relation_spaces() {
            for v in kernel_vectors(ech.basis(), paths.len()) {
                relations.push(vector_element(&v, &paths));
            }
        }
        let name = match self.name.strip_suffix("^!") {
            Some(base) => base.to_string(),
            None => format!("{}^!", self.name),
        };
        Presentation::new(name, self.vertices.clone(), self.arrows.clone(), relations, self.family)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let arrows: Vec<serde_json::Value> = self
            .arrows
            .iter()
            .map(|a| {
                serde_json::json!({
                    "src": self.vertices[a.source],
                    "tgt": self.vertices[a.target],
                    "label": a.kind.to_string(),
                    "kind": match &a.kind {
                        ArrowKind::Alpha(0) => "alpha0".to_string(),
                        ArrowKind::Alpha(_) => "alphai".to_string(),
                        ArrowKind::Dual(0) => "a0".to_string(),
                        ArrowKind::Dual(_) => "ai".to_string(),
                        ArrowKind::Named(s) => s.clone(),
                    },
                    "i": a.kind.index(),
                    "deg": [a.deg.flat, a.deg.sharp],
                })
            })
            .collect();
        let relations: Vec<serde_json::Value> = self
            .relations
            .iter()
            .map(|r| {
                let terms: Vec<serde_json::Value> = r
                    .terms()
                    .map(|(p, c)| serde_json::json!({"coeff": c.to_string(), "path": self.path_string(p)}))
                    .collect();
                serde_json::Value::Array(terms)
            })
            .collect();
        serde_json::json!({
            "name": self.name,
            "vertices": self.vertices,
            "arrows": arrows,
            "relations": relations,
        })
    }
    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph \"{}\" {{\n  rankdir=LR;\n", self.name);
        for v in &self.vertices {
            s.push_str(&format!("  \"{v}\";\n"));
        }
        for a in &self.arrows {
            s.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                self.vertices[a.source], self.vertices[a.target], a.kind
            ));
        }
        s.push_str("}\n");
        s
    }
}

pub fn element_vector(e: &Element, paths: &[Path]) -> Vec<Q> {
    let mut v = vec![Q::zero(); paths.len()];
    for (p, c) in e.terms() {
        let i = paths.iter().position(|x| x == p).expect("path outside block");
        v[i] = c.clone();
    }
    v
}

pub fn vector_element(v: &[Q], paths: &[Path]) -> Element {
    Element::from_terms(paths.iter().cloned().zip(v.iter().cloned()).collect())
}

/// Canonical arrow order key: alpha_1 < ... < alpha_n < alpha_0.
fn index_key(i: usize, n: usize) -> usize {
    if i == 0 {
        n + 1
    } else {
        i
    }
}

fn zigzag_arrows(q: &Quiver, keep: impl Fn(usize) -> bool) -> Vec<Arrow> {
    let mut arrows: Vec<Arrow> = q
        .arrows()
        .into_iter()
        .filter(|&(_, i)| keep(i))
        .map(|(x, i)| Arrow {
            source: x,
            target: q.target(x, i).unwrap(),
            kind: ArrowKind::Alpha(i),
            deg: if i == 0 { Bideg::new(0, 1) } else { Bideg::new(1, 0) },
        })
        .collect();
    arrows.sort_by_key(|a| (index_key(a.kind.index().unwrap(), q.n()), a.source));
    arrows
}

fn two_path(p: &Presentation, x: usize, i: usize, j: usize) -> Option<Path> {
    let a = p.find_arrow(x, &ArrowKind::Alpha(i))?;
    let y = p.arrows[a as usize].target;
    let b = p.find_arrow(y, &ArrowKind::Alpha(j))?;
    Some(Path { source: x, arrows: vec![a, b] })
}

/// Relations of the zigzag type on the current arrow set: alpha_i alpha_i = 0 and
/// commutators on every square whose both sides exist.
fn zigzag_relations(p: &Presentation, n: usize, indices: &[usize]) -> Vec<Element> {
    let mut rels = Vec::new();
    for x in 0..p.num_vertices() {
        for &i in indices {
            for &j in indices {
                let Some(pij) = two_path(p, x, i, j) else { continue };
                if i == j {
                    rels.push(Element::path(pij));
                } else if index_key(i, n) < index_key(j, n) {
                    if let Some(pji) = two_path(p, x, j, i) {
                        rels.push(Element::from_terms(vec![(pij, q(1)), (pji, q(-1))]));
                    }
                }
            }
        }
    }
    rels
}

fn zigzag_shell(name: String, n: usize, w: u32, keep: impl Fn(usize) -> bool) -> Result<Presentation, Error> {
    let q = Quiver::new(n, w)?;
    let arrows = zigzag_arrows(&q, keep);
    Ok(Presentation {
        name,
        vertices: q.vertices().to_vec(),
        arrows,
        relations: Vec::new(),
        family: Some((n, w)),
    })
}

/// Z^n_s on the quiver Q^(n, s-1).
pub fn zigzag(n: usize, s: u32) -> Result<Presentation, Error> {
    if s == 0 {
        return Err(Error::Argument("s must be at least 1".into()));
    }
    let mut p = zigzag_shell(format!("zigzag({n},{s})"), n, s - 1, |_| true)?;
    let idx: Vec<usize> = (0..=n).collect();
    p.relations = zigzag_relations(&p, n, &idx);
    let rels = p.relations.clone();
    Presentation::new(p.name, p.vertices, p.arrows, rels, p.family)
}

/// Z^n_s with, in addition, every path of length n+2 set to zero, so that the
/// full cycles span the socle. Agrees with `zigzag` whenever that is finite.
pub fn zigzag_truncated(n: usize, s: u32) -> Result<Presentation, Error> {
    let mut p = zigzag(n, s)?;
    p.name = format!("zigzag-trunc({n},{s})");
    let mut paths: Vec<Path> = (0..p.num_vertices()).map(Path::trivial).collect();
    for _ in 0..n + 2 {
        let mut next = Vec::new();
        for path in paths {
            let t = p.path_target(&path)?;
            for a in p.out_arrows(t) {
                let mut q = path.clone();
                q.arrows.push(a);
                next.push(q);
            }
        }
        paths = next;
    }
    p.relations.extend(paths.into_iter().map(Element::path));
    let rels = p.relations.clone();
    Presentation::new(p.name, p.vertices, p.arrows, rels, p.family)
}

/// The quasi-hereditary cover: relations of Z^n_(s+1) plus e_z alpha_0 alpha_1 = 0 for z in K.
pub fn cover(n: usize, s: u32) -> Result<Presentation, Error> {
    if s == 0 {
        return Err(Error::Argument("the cover needs s >= 1".into()));
    }
    let mut p = zigzag_shell(format!("cover({n},{s})"), n, s, |_| true)?;
    let idx: Vec<usize> = (0..=n).collect();
    let mut rels = zigzag_relations(&p, n, &idx);
    for z in 0..p.num_vertices() {
        if p.vertices[z].0[0] == 0 {
            if let Some(path) = two_path(&p, z, 0, 1) {
                rels.push(Element::path(path));
            }
        }
    }
    p.relations = rels;
    let rels = p.relations.clone();
    Presentation::new(p.name, p.vertices, p.arrows, rels, p.family)
}

/// The subalgebra on the index-nonzero arrows of the cover quiver.
pub fn borel(n: usize, s: u32) -> Result<Presentation, Error> {
    if s == 0 {
        return Err(Error::Argument("the cover needs s >= 1".into()));
    }
    let mut p = zigzag_shell(format!("borel({n},{s})"), n, s, |i| i != 0)?;
    let idx: Vec<usize> = (1..=n).collect();
    p.relations = zigzag_relations(&p, n, &idx);
    let rels = p.relations.clone();
    Presentation::new(p.name, p.vertices, p.arrows, rels, p.family)
}

/// The quadratic dual of the cover, on the cover quiver.
pub fn shifted_dual(n: usize, s: u32) -> Result<Presentation, Error> {
    let mut p = cover(n, s)?.quadratic_dual()?;
    p.name = format!("qdual({n},{s})");
    Ok(p)
}

/// The dual quiver: a_0 kept along alpha_0, a_i reversing alpha_i, with the
/// commutation and zero relations read off the cover quiver.
pub fn dual_conjectured(n: usize, s: u32) -> Result<Presentation, Error> {
    if s == 0 {
        return Err(Error::Argument("the cover needs s >= 1".into()));
    }
    let qv = Quiver::new(n, s)?;
    let mut arrows: Vec<Arrow> = qv
        .arrows()
        .into_iter()
        .map(|(x, i)| {
            let y = qv.target(x, i).unwrap();
            if i == 0 {
                Arrow { source: x, target: y, kind: ArrowKind::Dual(0), deg: Bideg::new(0, 1) }
            } else {
                Arrow { source: y, target: x, kind: ArrowKind::Dual(i), deg: Bideg::new(1, 0) }
            }
        })
        .collect();
    arrows.sort_by_key(|a| (index_key(a.kind.index().unwrap(), n), a.source));
    let p = Presentation {
        name: format!("dual({n},{s})"),
        vertices: qv.vertices().to_vec(),
        arrows,
        relations: Vec::new(),
        family: Some((n, s)),
    };
    let dual_arrow = |src: usize, i: usize| p.find_arrow(src, &ArrowKind::Dual(i));
    let step = |x: usize, i: usize| qv.target(x, i);
    let mut rels = Vec::new();
    // a_0 a_0 = 0
    for x in 0..qv.len() {
        if let (Some(a), Some(y)) = (dual_arrow(x, 0), step(x, 0)) {
            if let Some(b) = dual_arrow(y, 0) {
                rels.push(Element::path(Path { source: x, arrows: vec![a, b] }));
            }
        }
    }
    for x in 0..qv.len() {
        for i in 1..=n {
            for j in 1..=n {
                // cover path x -i-> y -j-> z read backwards: z -a_j-> y -a_i-> x
                let Some(y) = step(x, i) else { continue };
                let Some(z) = step(y, j) else { continue };
                if i == j {
                    continue;
                }
                let p1 = Path { source: z, arrows: vec![dual_arrow(z, j).unwrap(), dual_arrow(y, i).unwrap()] };
                match step(x, j) {
                    Some(w) if i < j => {
                        let p2 = Path {
                            source: z,
                            arrows: vec![dual_arrow(z, i).unwrap(), dual_arrow(w, j).unwrap()],
                        };
                        rels.push(Element::from_terms(vec![(p1, q(1)), (p2, q(-1))]));
                    }
                    Some(_) => {}
                    None => rels.push(Element::path(p1)),
                }
            }
        }
        // squares x -0-> y -i-> z and x -i-> w -0-> z give a_0 a_i = a_i a_0 at w
        for i in 1..=n {
            let (Some(y), Some(w)) = (step(x, 0), step(x, i)) else { continue };
            let (Some(z), Some(z2)) = (step(y, i), step(w, 0)) else { continue };
            debug_assert_eq!(z, z2);
            let p1 = Path { source: w, arrows: vec![dual_arrow(w, 0).unwrap(), dual_arrow(z, i).unwrap()] };
            let p2 = Path { source: w, arrows: vec![dual_arrow(w, i).unwrap(), dual_arrow(x, 0).unwrap()] };
            rels.push(Element::from_terms(vec![(p1, q(1)), (p2, q(-1))]));
        }
    }
    Presentation::new(p.name, p.vertices, p.arrows, rels, p.family)
}

fn named_vertices(k: u32) -> Vec<Vertex> {
    (1..=k).map(|i| Vertex(vec![i])).collect()
}

fn named(source: usize, target: usize, name: &str, deg: Bideg) -> Arrow {
    Arrow { source, target, kind: ArrowKind::Named(name.into()), deg }
}

/// Three vertices, a,c: 2 -> 1 and b,d: 3 -> 2, with ba = 0 and da = bc.
/// Flat degrees |a| = |b| = 0 and |c| = |d| = 1.
pub fn fixture_counterexample() -> Presentation {
    let flat0 = Bideg::new(0, 1);
    let flat1 = Bideg::new(1, 0);
    let arrows = vec![
        named(1, 0, "a", flat0),
        named(2, 1, "b", flat0),
        named(1, 0, "c", flat1),
        named(2, 1, "d", flat1),
    ];
    let (a, b, c, d) = (0u32, 1u32, 2u32, 3u32);
    let rels = vec![
        Element::path(Path { source: 2, arrows: vec![b, a] }),
        Element::from_terms(vec![
            (Path { source: 2, arrows: vec![d, a] }, q(1)),
            (Path { source: 2, arrows: vec![b, c] }, q(-1)),
        ]),
    ];
    Presentation::new("counterexample", named_vertices(3), arrows, rels, None).expect("valid fixture")
}

/// The printed dual of the Brauer-line cover: beta, alpha*: k+1 -> k with
/// beta^2 = 0 and alpha* beta = beta alpha*. Vertex k is (s+1-k, k-1).
pub fn fixture_brauer_dual(s: u32) -> Presentation {
    let vertices: Vec<Vertex> = (1..=s + 1).map(|k| Vertex(vec![s + 1 - k, k - 1])).collect();
    let mut sorted = vertices.clone();
    sorted.sort();
    let idx = |k: u32| sorted.iter().position(|v| *v == vertices[(k - 1) as usize]).unwrap();
    let mut arrows = Vec::new();
    for k in 1..=s {
        arrows.push(named(idx(k + 1), idx(k), "alpha*", Bideg::new(1, 0)));
    }
    for k in 1..=s {
        arrows.push(named(idx(k + 1), idx(k), "beta", Bideg::new(0, 1)));
    }
    let alpha = |k: u32| (k - 1) as u32;
    let beta = |k: u32| (s + k - 1) as u32;
    let mut rels = Vec::new();
    for k in 3..=s + 1 {
        rels.push(Element::path(Path { source: idx(k), arrows: vec![beta(k - 1), beta(k - 2)] }));
        rels.push(Element::from_terms(vec![
            (Path { source: idx(k), arrows: vec![alpha(k - 1), beta(k - 2)] }, q(1)),
            (Path { source: idx(k), arrows: vec![beta(k - 1), alpha(k - 2)] }, q(-1)),
        ]));
    }
    Presentation::new(format!("brauer-dual({s})"), sorted, arrows, rels, None).expect("valid fixture")
}

/// One vertex, one loop x, x^2 = 0.
pub fn fixture_loop() -> Presentation {
    let arrows = vec![named(0, 0, "x", Bideg::new(1, 0))];
    let rels = vec![Element::path(Path { source: 0, arrows: vec![0, 0] })];
    Presentation::new("loop", named_vertices(1), arrows, rels, None).expect("valid fixture")
}
