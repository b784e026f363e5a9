//! Koszulity checks (classical, standard, with respect to Delta), the socle lemmas over
//! the quadratic dual of the cover, and the three-vertex counterexample.

use serde_json::json;
use std::collections::BTreeMap;

use crate::engine::{compute_basis, AlgebraInstance};
use crate::module::{find_isomorphism, injective, left_multiplication, projective, simple, Module};
use crate::pbw::shifted_dual_membership;
use crate::presentation::{fixture_counterexample, ArrowKind, Bideg, Element, Path, Presentation};
use crate::qh::Context;
use crate::report::Report;
use crate::resolution::{minimal_resolution, ExtComputer, Grading, Resolution, Ring};
use crate::Error;

fn shape_json(ring: &Ring, r: &Resolution) -> serde_json::Value {
    let verts = &ring.alg.presentation().vertices;
    json!(r
        .shape()
        .iter()
        .map(|t| t.iter().map(|&(v, b)| json!({"vertex": verts[v], "shift": [b.flat, b.sharp]})).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

/// Polynomial in one variable with integer coefficients.
type Poly = BTreeMap<i32, i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (i, x) in a {
        for (j, y) in b {
            *out.entry(i + j).or_insert(0) += x * y;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Checks sum_y M_xy(t) H_yz(t) = delta_xz, where H is the length-graded Cartan matrix
/// and M_xy = sum_i (-1)^i (multiplicity of P_y<j> in step i) t^j.
pub fn hilbert_identity(ring: &Ring, resolutions: &[Resolution]) -> Result<(), serde_json::Value> {
    let a = &ring.alg;
    let nv = a.num_vertices();
    let mut h = vec![vec![Poly::new(); nv]; nv];
    for ((d, _, x, y), c) in a.dims() {
        *h[x][y].entry(d as i32).or_insert(0) += c as i64;
    }
    for (x, r) in resolutions.iter().enumerate() {
        let mut m = vec![Poly::new(); nv];
        for ((i, y, b), c) in r.multiplicities() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            *m[y].entry(b.total()).or_insert(0) += sign * c as i64;
        }
        for z in 0..nv {
            let mut sum = Poly::new();
            for y in 0..nv {
                for (k, c) in poly_mul(&m[y], &h[y][z]) {
                    *sum.entry(k).or_insert(0) += c;
                }
            }
            sum.retain(|_, c| *c != 0);
            let want: Poly = if x == z { [(0, 1)].into() } else { Poly::new() };
            if sum != want {
                return Err(json!({"row": x, "column": z, "series": sum}));
            }
        }
    }
    Ok(())
}

/// Every simple has a linear minimal resolution in the length grading. With
/// `allow_truncation` a resolution cut at `max_steps` counts if linear so far.
pub fn check_koszul(ring: &Ring, max_steps: usize, allow_truncation: bool) -> Report {
    let a = &ring.alg;
    let mut rep = Report::new(format!("koszul {}", a.presentation().name));
    let nv = a.num_vertices();
    let zero_deg = a.presentation().arrows.iter().all(|ar| ar.deg.total() >= 1);
    rep.check("degree0_semisimple", zero_deg, || json!("an arrow has length degree 0"));
    let mut bad = Vec::new();
    let mut truncated = Vec::new();
    let mut resolutions = Vec::new();
    for x in 0..nv {
        let r = minimal_resolution(ring, &simple(a, x), max_steps);
        let w = r.linearity(Grading::Length);
        if !w.is_empty() {
            bad.push(json!({"simple": a.presentation().vertices[x], "offending": w, "shape": shape_json(ring, &r)}));
        }
        if !r.complete {
            truncated.push(json!(a.presentation().vertices[x]));
        }
        resolutions.push(r);
    }
    rep.check("simples_linear", bad.is_empty(), || json!(bad));
    if truncated.is_empty() {
        let gldim = resolutions.iter().map(|r| r.length()).max().unwrap_or(0);
        rep.info("global_dimension", json!(gldim));
        let h = hilbert_identity(ring, &resolutions);
        rep.check("hilbert_series_identity", h.is_ok(), || h.err().unwrap());
    } else if allow_truncation {
        rep.info("truncated_at", json!({"steps": max_steps, "simples": truncated}));
    } else {
        rep.fail("resolutions_finite", json!({"steps": max_steps, "simples": truncated}));
    }
    rep
}

/// Every standard module has a linear minimal resolution in the length grading.
pub fn check_standard_koszul(ctx: &Context, max_steps: usize) -> Report {
    let a = ctx.alg();
    let mut rep = Report::new(format!("standard koszul {}", a.presentation().name));
    let mut bad = Vec::new();
    for x in 0..a.num_vertices() {
        let r = minimal_resolution(&ctx.ring, &ctx.standards[x], max_steps);
        if !r.complete || !r.is_linear(Grading::Length) {
            bad.push(json!({"standard": ctx.vertex_name(x), "complete": r.complete, "shape": shape_json(&ctx.ring, &r)}));
        }
    }
    rep.check("standards_linear", bad.is_empty(), || json!(bad));
    rep
}

/// The subalgebra spanned by alpha_0-words, presented by alpha_0 alpha_0 = 0.
pub fn flat_zero_presentation(cover: &Presentation) -> Result<Presentation, Error> {
    let arrows: Vec<_> = cover.arrows.iter().filter(|a| a.kind == ArrowKind::Alpha(0)).cloned().collect();
    let mut p = Presentation {
        name: format!("{}[0]", cover.name),
        vertices: cover.vertices.clone(),
        arrows,
        relations: Vec::new(),
        family: None,
    };
    let mut rels = Vec::new();
    for (i, a) in p.arrows.iter().enumerate() {
        if let Some(b) = p.find_arrow(a.target, &ArrowKind::Alpha(0)) {
            rels.push(Element::path(Path { source: a.source, arrows: vec![i as u32, b] }));
        }
    }
    p.relations = rels;
    let rels = p.relations.clone();
    Presentation::new(p.name, p.vertices, p.arrows, rels, None)
}

/// Koszulity with respect to Delta in the flat grading.
pub fn check_delta_koszul(ctx: &Context, max_steps: usize) -> Report {
    let a = ctx.alg();
    let nv = a.num_vertices();
    let mut rep = Report::new(format!("delta koszul {}", a.presentation().name));

    // (a) the flat-degree-zero part is a product of alpha_0 lines of finite global dimension
    let flat0: usize = a.levels().iter().enumerate().map(|(l, lv)| (0..lv.len()).filter(|&i| a.basis_deg(l, i as u32).flat == 0).count()).sum();
    match flat_zero_presentation(a.presentation()).and_then(|p| compute_basis(&p, crate::DEFAULT_MAX_LEN)) {
        Ok(lines) => {
            rep.check("flat0_is_alpha0_lines", lines.dim() == flat0, || json!({"dim_lines": lines.dim(), "dim_flat0": flat0}));
            let lr = Ring::new(lines);
            let mut gl = 0;
            let mut finite = true;
            for x in 0..nv {
                let r = minimal_resolution(&lr, &simple(&lr.alg, x), max_steps);
                finite &= r.complete;
                gl = gl.max(r.length());
            }
            rep.check("flat0_finite_global_dimension", finite, || json!({"steps": max_steps}));
            rep.info("flat0_global_dimension", json!(gl));
        }
        Err(e) => rep.fail("flat0_is_alpha0_lines", json!(e.to_string())),
    }

    // (b) e_x A / (flat >= 1) is Delta_x
    let bad: Vec<_> = (0..nv)
        .filter_map(|x| {
            let q = ctx.ring.proj[x].module.degree_part(|b| b.flat == 0, true);
            let iso = find_isomorphism(&q, &ctx.standards[x], Some(Bideg::ZERO)).is_some();
            (!iso).then(|| json!({"vertex": ctx.vertex_name(x), "dims_flat0": q.dims(), "dims_delta": ctx.standards[x].dims()}))
        })
        .collect();
    rep.check("flat0_isomorphic_to_delta", bad.is_empty(), || json!(bad));

    // (c) graded self-orthogonality in the flat grading
    let mut bad_lin = Vec::new();
    let mut bad_ext = Vec::new();
    for x in 0..nv {
        let r = minimal_resolution(&ctx.ring, &ctx.standards[x], max_steps);
        if !r.complete || !r.is_linear(Grading::Flat) {
            bad_lin.push(json!({"standard": ctx.vertex_name(x), "shape": shape_json(&ctx.ring, &r)}));
        }
        for y in 0..nv {
            for ((i, raise), d) in ExtComputer::new(&ctx.ring, &r, &ctx.standards[y]).dims() {
                if -raise.flat != i as i32 {
                    bad_ext.push(json!({"from": ctx.vertex_name(x), "to": ctx.vertex_name(y), "degree": i, "flat_shift": -raise.flat, "dim": d}));
                }
            }
        }
    }
    rep.check("delta_resolutions_flat_linear", bad_lin.is_empty(), || json!(bad_lin));
    rep.check("self_orthogonal_flat", bad_ext.is_empty(), || json!(bad_ext));
    rep
}

/// Monomial classes (source, index multiplicities) where the criterion and the
/// engine disagree.
pub fn membership_mismatches(b: &AlgebraInstance, n: usize) -> Vec<(usize, Vec<u32>, bool)> {
    let p = b.presentation();
    let mut groups: BTreeMap<(usize, Vec<u32>), bool> = BTreeMap::new();
    let mut frontier: Vec<Path> = (0..p.num_vertices()).map(Path::trivial).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for path in frontier {
            let mut d = vec![0u32; n + 1];
            for &a in &path.arrows {
                d[p.arrows[a as usize].kind.index().expect("indexed arrow")] += 1;
            }
            let nz = !b.normal_form(&Element::path(path.clone())).expect("valid path").is_zero();
            *groups.entry((path.source, d)).or_insert(false) |= nz;
            if path.len() <= b.max_len() {
                let t = p.path_target(&path).expect("valid path");
                for a in p.out_arrows(t) {
                    let mut q = path.clone();
                    q.arrows.push(a);
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    groups
        .into_iter()
        .filter(|((x, d), nz)| shifted_dual_membership(&p.vertices[*x], d) != *nz)
        .map(|((x, d), nz)| (x, d, nz))
        .collect()
}

/// Socle lemmas over the quadratic dual B of the cover(n, s).
pub fn check_shifted_dual_lemmas(n: usize, s: u32) -> Result<Report, Error> {
    let p = crate::presentation::shifted_dual(n, s)?;
    let b = compute_basis(&p, crate::DEFAULT_MAX_LEN)?;
    let mut rep = Report::new(format!("socle lemmas {}", p.name));
    let nv = b.num_vertices();
    let projs: Vec<_> = (0..nv).map(|x| projective(&b, x)).collect();
    let mut bad_soc = Vec::new();
    let mut bad_max = Vec::new();
    for (x, px) in projs.iter().enumerate() {
        let soc = px.module.socle();
        let total: usize = soc.iter().map(|v| v.len()).sum();
        if total != 1 {
            bad_soc.push(json!({"vertex": p.vertices[x], "dim_socle": total}));
            continue;
        }
        let (t, vec) = soc.iter().enumerate().find_map(|(t, v)| v.first().map(|v| (t, v))).unwrap();
        let support = vec.iter().filter(|c| !num_traits::Zero::is_zero(*c)).count();
        if support != 1 || p.vertices[t].0[0] != 0 {
            bad_max.push(json!({"vertex": p.vertices[x], "socle_at": p.vertices[t], "support": support}));
        }
    }
    rep.check("socle_simple", bad_soc.is_empty(), || json!(bad_soc));
    rep.check("socle_is_maximal_path_into_K", bad_max.is_empty(), || json!(bad_max));
    let mut bad_inj = Vec::new();
    for (i, ar) in p.arrows.iter().enumerate() {
        if ar.kind != ArrowKind::Alpha(0) {
            continue;
        }
        let e = Element::path(Path { source: ar.source, arrows: vec![i as u32] });
        let f = left_multiplication(&b, &projs[ar.source], &projs[ar.target], &e);
        if !f.is_injective() {
            bad_inj.push(json!({"from": p.vertices[ar.target], "to": p.vertices[ar.source]}));
        }
    }
    rep.check("alpha0_multiplication_injective", bad_inj.is_empty(), || json!(bad_inj));
    let mism = membership_mismatches(&b, n);
    rep.check("membership_criterion", mism.is_empty(), || {
        json!(mism.iter().map(|(x, d, nz)| json!({"vertex": p.vertices[*x], "d": d, "engine_nonzero": nz})).collect::<Vec<_>>())
    });
    Ok(rep)
}

/// T = D(Lambda_[0]) as a right module: the flat-degree-zero part of each injective.
pub fn flat_zero_injectives(op: &AlgebraInstance) -> Vec<Module> {
    (0..op.num_vertices()).map(|x| injective(op, x).degree_part(|b| b.flat == 0, false)).collect()
}

/// The three-vertex example: D(Lambda_[0]) is self-orthogonal in the flat grading
/// while S_3 has a non-linear flat-graded resolution.
pub fn fixture_counterexample_report() -> Result<Report, Error> {
    let p = fixture_counterexample();
    let a = compute_basis(&p, crate::DEFAULT_MAX_LEN)?;
    let op = a.opposite()?;
    let ring = Ring::new(a.clone());
    let mut rep = Report::new("counterexample");
    let flat0 = a.levels().iter().enumerate().map(|(l, lv)| (0..lv.len()).filter(|&i| a.basis_deg(l, i as u32).flat == 0).count()).sum::<usize>();
    rep.check("dim_lambda0_is_5", flat0 == 5, || json!(flat0));

    let t = flat_zero_injectives(&op);
    let steps = a.dim() + 1;
    let mut bad = Vec::new();
    for (x, tx) in t.iter().enumerate() {
        let r = minimal_resolution(&ring, tx, steps);
        if !r.complete {
            bad.push(json!({"summand": x + 1, "reason": "resolution not finished"}));
        }
        for (y, ty) in t.iter().enumerate() {
            for ((i, raise), d) in ExtComputer::new(&ring, &r, ty).dims() {
                if -raise.flat != i as i32 {
                    bad.push(json!({"from": x + 1, "to": y + 1, "degree": i, "flat_shift": -raise.flat, "dim": d}));
                }
            }
        }
    }
    rep.check("t_self_orthogonal_flat", bad.is_empty(), || json!(bad));

    let r = minimal_resolution(&ring, &simple(&a, 2), steps);
    let shape: Vec<Vec<(usize, i32)>> = r.shape().iter().map(|t| {
        let mut v: Vec<(usize, i32)> = t.iter().map(|&(v, b)| (v + 1, b.flat)).collect();
        v.sort();
        v
    }).collect();
    let want = vec![vec![(3, 0)], vec![(2, 0), (2, 1)], vec![(1, 0), (1, 1)]];
    rep.check("s3_resolution_shape", shape == want && r.complete, || json!({"shape": shape}));
    let w = r.linearity(Grading::Flat);
    rep.check("s3_not_flat_linear", !w.is_empty(), || json!("resolution is linear"));
    Ok(rep)
}

/// The Koszul check over the loop algebra k[x]/(x^2), truncated.
pub fn loop_control(steps: usize) -> Result<Report, Error> {
    let a = compute_basis(&crate::presentation::fixture_loop(), crate::DEFAULT_MAX_LEN)?;
    Ok(check_koszul(&Ring::new(a), steps, true))
}
