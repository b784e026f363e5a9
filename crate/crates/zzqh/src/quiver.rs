//! The simplex-shaped quiver Q^(n,w): compositions of w into n+1 parts.

use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::Error;

/// A composition (x_0, ..., x_n).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vertex(pub Vec<u32>);

impl Vertex {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// x + f_i, if all coordinates stay non-negative.
    pub fn step(&self, i: usize) -> Option<Vertex> {
        let len = self.0.len();
        let minus = if i == 0 { len - 1 } else { i - 1 };
        if self.0[minus] == 0 {
            return None;
        }
        let mut c = self.0.clone();
        c[minus] -= 1;
        c[i] += 1;
        Some(Vertex(c))
    }

    /// x - f_i, the source of an i-arrow ending at x.
    pub fn step_back(&self, i: usize) -> Option<Vertex> {
        let len = self.0.len();
        let plus = if i == 0 { len - 1 } else { i - 1 };
        if self.0[i] == 0 {
            return None;
        }
        let mut c = self.0.clone();
        c[i] -= 1;
        c[plus] += 1;
        Some(Vertex(c))
    }

    pub fn parse(s: &str) -> Result<Vertex, Error> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        coords.map(Vertex).map_err(|_| Error::Argument(format!("bad vertex '{s}'")))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Distance in the partial order; incomparable pairs are `Infinite`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Dist {
    Finite(u32),
    Infinite,
}

impl Dist {
    pub fn finite(self) -> Option<u32> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Infinite => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Quiver {
    n: usize,
    w: u32,
    vertices: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
}

fn compositions(parts: usize, w: u32) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![w]];
    }
    let mut out = Vec::new();
    for first in (0..=w).rev() {
        for mut rest in compositions(parts - 1, w - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl Quiver {
    pub fn new(n: usize, w: u32) -> Result<Quiver, Error> {
        if n == 0 {
            return Err(Error::Argument("n must be at least 1".into()));
        }
        let mut vertices: Vec<Vertex> = compositions(n + 1, w).into_iter().map(Vertex).collect();
        vertices.sort();
        let index = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        Ok(Quiver { n, w, vertices, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn w(&self) -> u32 {
        self.w
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, v: &Vertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }

    /// Target of the arrow (x, i), if it exists.
    pub fn target(&self, x: usize, i: usize) -> Option<usize> {
        self.vertices[x].step(i).map(|v| self.index[&v])
    }

    /// All arrows as (source, index), sorted by source then index.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for i in 0..=self.n {
                if self.target(x, i).is_some() {
                    out.push((x, i));
                }
            }
        }
        out
    }

    pub fn in_j(&self, x: usize) -> bool {
        self.vertices[x].0[0] != 0
    }

    /// (J, K) as sorted vertex index lists.
    pub fn classify(&self) -> (Vec<usize>, Vec<usize>) {
        (0..self.len()).partition(|&x| self.in_j(x))
    }

    pub fn order(&self) -> OrderData {
        OrderData::new(self)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let arrows: Vec<serde_json::Value> = self
            .arrows()
            .into_iter()
            .map(|(x, i)| serde_json::json!({"src": self.vertices[x], "idx": i}))
            .collect();
        serde_json::json!({"n": self.n, "w": self.w, "vertices": self.vertices, "arrows": arrows})
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph Q {\n  rankdir=LR;\n");
        for v in &self.vertices {
            s.push_str(&format!("  \"{v}\";\n"));
        }
        for (x, i) in self.arrows() {
            let y = self.target(x, i).unwrap();
            s.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"alpha{}\"];\n",
                self.vertices[x], self.vertices[y], i
            ));
        }
        s.push_str("}\n");
        s
    }
}

/// The partial order generated by index-nonzero arrows, with distances.
#[derive(Clone, Debug)]
pub struct OrderData {
    dist: Vec<Vec<Dist>>,
}

impl OrderData {
    fn new(q: &Quiver) -> Self {
        let n = q.len();
        let mut dist = vec![vec![Dist::Infinite; n]; n];
        for (s, row) in dist.iter_mut().enumerate() {
            row[s] = Dist::Finite(0);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let d = row[x].finite().unwrap();
                for i in 1..=q.n() {
                    if let Some(y) = q.target(x, i) {
                        if row[y] == Dist::Infinite {
                            row[y] = Dist::Finite(d + 1);
                            queue.push_back(y);
                        }
                    }
                }
            }
        }
        OrderData { dist }
    }

    pub fn dist(&self, x: usize, y: usize) -> Dist {
        self.dist[x][y]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.dist[x][y] != Dist::Infinite
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// Covering pairs (x, y): x < y with distance 1.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.dist.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.dist[x][y] == Dist::Finite(1) {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
