//! Small wasm surface over zzqh for the static demo page in `www/`.

use serde_json::json;
use wasm_bindgen::prelude::*;
use zzqh::module::{injective, projective, simple, Module};
use zzqh::qh::Context;
use zzqh::resolution::{minimal_resolution, Grading, Ring};
use zzqh::{compute_basis, Quiver, Vertex};

const MAX_VERTICES: usize = 40;

fn guard(n: usize, w: u32) -> Result<(), String> {
    if n == 0 || n > 4 {
        return Err("n must be between 1 and 4".into());
    }
    let count = zzqh::quiver::binomial(w as u64 + n as u64, n as u64);
    if count as usize > MAX_VERTICES {
        return Err(format!("{count} vertices is too many for the demo"));
    }
    Ok(())
}

/// Planar position of a composition: coordinate k pulls toward the k-th corner.
fn place(v: &Vertex, n: usize) -> (f64, f64) {
    let m = n + 1;
    v.coords().iter().enumerate().fold((0.0, 0.0), |(x, y), (k, &c)| {
        let t = if n == 1 {
            std::f64::consts::PI * (1.0 - k as f64)
        } else {
            std::f64::consts::FRAC_PI_2 + 2.0 * std::f64::consts::PI * k as f64 / m as f64
        };
        (x + c as f64 * t.cos(), y - c as f64 * t.sin())
    })
}

const COLORS: [&str; 5] = ["#c0392b", "#2471a3", "#229954", "#b9770e", "#7d3c98"];

pub fn quiver_svg_impl(n: usize, w: u32) -> Result<String, String> {
    guard(n, w)?;
    let q = Quiver::new(n, w).map_err(|e| e.to_string())?;
    let scale = 90.0;
    let pts: Vec<(f64, f64)> = q.vertices().iter().map(|v| place(v, n)).map(|(x, y)| (x * scale, y * scale)).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let pad = 50.0;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.1} {:.1} {:.1} {:.1}\" font-family=\"monospace\" font-size=\"11\">\n",
        x0 - pad,
        y0 - pad,
        x1 - x0 + 2.0 * pad,
        y1 - y0 + 2.0 * pad
    );
    out.push_str("<defs>");
    for (i, c) in COLORS.iter().enumerate() {
        out.push_str(&format!(
            "<marker id=\"h{i}\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"{c}\"/></marker>"
        ));
    }
    out.push_str("</defs>\n");
    let (j, _) = q.classify();
    for (x, i) in q.arrows() {
        let y = q.target(x, i).unwrap();
        let (ax, ay) = pts[x];
        let (bx, by) = pts[y];
        let (dx, dy) = (bx - ax, by - ay);
        let len = (dx * dx + dy * dy).sqrt().max(1e-9);
        let (ux, uy) = (dx / len, dy / len);
        // bend the two arrows of a pair apart
        let off = if n == 1 { if i == 0 { 8.0 } else { -8.0 } } else { 0.0 };
        let (px, py) = (-uy * off, ux * off);
        let r = 14.0;
        let c = COLORS[i % COLORS.len()];
        out.push_str(&format!(
            "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"{c}\" stroke-width=\"1.5\" marker-end=\"url(#h{})\"><title>alpha{i}</title></line>\n",
            ax + ux * r + px,
            ay + uy * r + py,
            bx - ux * r + px,
            by - uy * r + py,
            i % COLORS.len()
        ));
    }
    for (k, v) in q.vertices().iter().enumerate() {
        let (x, y) = pts[k];
        let fill = if j.contains(&k) { "#ffffff" } else { "#f4d03f" };
        out.push_str(&format!(
            "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"12\" fill=\"{fill}\" stroke=\"#333\"/><text x=\"{x:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{}</text>\n",
            y - 16.0,
            v.to_string().trim_matches(|c| c == '(' || c == ')')
        ));
    }
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn cartan_impl(kind: &str, n: usize, s: u32) -> Result<String, String> {
    guard(n, s)?;
    let p = zzqh::suite::presentation(kind, n, s, None).map_err(|e| e.to_string())?;
    let a = compute_basis(&p, zzqh::DEFAULT_MAX_LEN).map_err(|e| e.to_string())?;
    let c = a.cartan().map_err(|e| e.to_string())?;
    let rows: Vec<Vec<String>> = c.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    Ok(json!({
        "algebra": p.name,
        "vertices": p.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "dim": a.dim(),
        "cartan": rows,
    })
    .to_string())
}

pub fn resolution_impl(kind: &str, n: usize, s: u32, module: &str, vertex: &str) -> Result<String, String> {
    guard(n, s)?;
    let p = zzqh::suite::presentation(kind, n, s, None).map_err(|e| e.to_string())?;
    let v = Vertex::parse(vertex).map_err(|e| e.to_string())?;
    let x = p.vertex_index(&v).ok_or_else(|| format!("no vertex {v} in {}", p.name))?;
    let a = compute_basis(&p, zzqh::DEFAULT_MAX_LEN).map_err(|e| e.to_string())?;
    let steps = a.dim() + 1;
    let m: Module = match module {
        "simple" => simple(&a, x),
        "projective" => projective(&a, x).module,
        "injective" => injective(&a.opposite().map_err(|e| e.to_string())?, x),
        "standard" | "costandard" => {
            if p.family.is_none() {
                return Err(format!("{} has no vertex order", p.name));
            }
            let ctx = Context::family(&p).map_err(|e| e.to_string())?;
            if module == "standard" { ctx.standards[x].clone() } else { ctx.costandards[x].clone() }
        }
        _ => return Err(format!("unknown module kind {module:?}")),
    };
    let ring = Ring::new(a);
    let r = minimal_resolution(&ring, &m, steps);
    let terms: Vec<Vec<serde_json::Value>> = r
        .shape()
        .iter()
        .map(|t| t.iter().map(|&(y, b)| json!({"vertex": p.vertices[y].to_string(), "flat": b.flat, "sharp": b.sharp})).collect())
        .collect();
    Ok(json!({
        "algebra": p.name,
        "complete": r.complete,
        "length": r.length(),
        "linear_length": r.is_linear(Grading::Length),
        "linear_flat": r.is_linear(Grading::Flat),
        "terms": terms,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn quiver_svg(n: usize, w: u32) -> Result<String, JsError> {
    quiver_svg_impl(n, w).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn cartan(kind: &str, n: usize, s: u32) -> Result<String, JsError> {
    cartan_impl(kind, n, s).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn resolution(kind: &str, n: usize, s: u32, module: &str, vertex: &str) -> Result<String, JsError> {
    resolution_impl(kind, n, s, module, vertex).map_err(|e| JsError::new(&e))
}
