//! Quasi-heredity, the cover property, projective-injectivity and the Borel subalgebra.

use num_traits::{One, Zero};
use serde_json::json;

use crate::engine::AlgebraInstance;
use crate::filtration::{costandard_coresolution, delta_filtration, Poset};
use crate::linalg::{Echelon, Q};
use crate::module::{
    costandard, find_isomorphism, hom_space, injective, left_multiplication, projective, shape_of, standard, Module,
};
use crate::presentation::{ArrowKind, Element, Path, Presentation};
use crate::report::Report;
use crate::resolution::{minimal_resolution, ExtComputer, Ring};

/// Everything needed to talk about an algebra with a partial order on its vertices.
pub struct Context {
    pub ring: Ring,
    pub op: AlgebraInstance,
    pub poset: Poset,
    pub standards: Vec<Module>,
    pub costandards: Vec<Module>,
}

impl Context {
    pub fn new(alg: AlgebraInstance, poset: Poset) -> Result<Context, crate::Error> {
        let op = alg.opposite()?;
        let nv = alg.num_vertices();
        let standards = (0..nv).map(|x| standard(&alg, x, |a, b| poset.leq(a, b))).collect();
        let costandards = (0..nv).map(|x| costandard(&op, x, |a, b| poset.leq(a, b))).collect();
        Ok(Context { ring: Ring::new(alg), op, poset, standards, costandards })
    }

    /// Context over Q^(n,w) with the order generated by index-nonzero arrows.
    pub fn family(pres: &Presentation) -> Result<Context, crate::Error> {
        let (n, w) = pres.family.ok_or_else(|| crate::Error::Argument("not a zigzag-family algebra".into()))?;
        let q = crate::quiver::Quiver::new(n, w)?;
        let alg = crate::compute_basis(pres, crate::DEFAULT_MAX_LEN)?;
        let poset = Poset::from_order(&q.order(), q.len());
        Context::new(alg, poset)
    }

    pub fn alg(&self) -> &AlgebraInstance {
        &self.ring.alg
    }

    pub fn vertex_name(&self, v: usize) -> String {
        self.alg().presentation().vertices[v].to_string()
    }

    /// Resolution cap: total dimension plus one.
    pub fn default_steps(&self) -> usize {
        self.alg().dim() + 1
    }
}

/// End(Delta) = k, standard filtrations of projectives, Ext^{>0}(Delta, nabla) = 0 and
/// Hom(Delta_i, nabla_j) = k exactly when i = j.
pub fn check_quasi_hereditary(ctx: &Context, max_steps: usize) -> Report {
    let a = ctx.alg();
    let nv = a.num_vertices();
    let name = |v| ctx.vertex_name(v);
    let mut rep = Report::new(format!("quasi-hereditary {}", a.presentation().name));

    let bad_end: Vec<_> = (0..nv)
        .filter_map(|x| {
            let d = hom_space(&ctx.standards[x], &ctx.standards[x], None).len();
            (d != 1).then(|| json!({"vertex": name(x), "dim_end": d}))
        })
        .collect();
    rep.check("endo_standard_trivial", bad_end.is_empty(), || json!(bad_end));

    let bad_filt: Vec<_> = (0..nv)
        .filter_map(|x| {
            let p = &ctx.ring.proj[x].module;
            delta_filtration(a, p, &ctx.poset, &ctx.standards)
                .err()
                .map(|e| json!({"projective": name(x), "at": name(e.vertex), "reason": e.reason}))
        })
        .collect();
    rep.check("projectives_delta_filtered", bad_filt.is_empty(), || json!(bad_filt));

    let mut bad_ext = Vec::new();
    let mut bad_hom = Vec::new();
    for x in 0..nv {
        let res = minimal_resolution(&ctx.ring, &ctx.standards[x], max_steps);
        if !res.complete {
            bad_ext.push(json!({"standard": name(x), "reason": format!("resolution not finished after {max_steps} steps")}));
        }
        for y in 0..nv {
            let dims = ExtComputer::new(&ctx.ring, &res, &ctx.costandards[y]).dims();
            let hom: usize = dims.iter().filter(|((i, _), _)| *i == 0).map(|(_, d)| d).sum();
            if hom != usize::from(x == y) {
                bad_hom.push(json!({"standard": name(x), "costandard": name(y), "dim_hom": hom}));
            }
            for ((i, r), d) in dims {
                if i > 0 {
                    bad_ext.push(json!({"standard": name(x), "costandard": name(y), "degree": i, "raise": [r.flat, r.sharp], "dim": d}));
                }
            }
        }
    }
    rep.check("ext_delta_nabla_vanishing", bad_ext.is_empty(), || json!(bad_ext));
    rep.check("hom_delta_nabla_diagonal", bad_hom.is_empty(), || json!(bad_hom));
    rep
}

/// Cover vertex of a zigzag vertex: add one to the zeroth coordinate.
fn cover_vertex(cover: &Presentation, z: &crate::quiver::Vertex) -> Option<usize> {
    let mut c = z.0.clone();
    c[0] += 1;
    cover.vertex_index(&crate::quiver::Vertex(c))
}

/// End(P_J) is the zigzag algebra and Hom(P_J, -) is fully faithful on projectives.
pub fn check_cover(cover: &Context, z: &AlgebraInstance) -> Report {
    let a = cover.alg();
    let cp = a.presentation();
    let zp = z.presentation();
    let mut rep = Report::new(format!("cover {} over {}", cp.name, zp.name));
    let (Some((n, w)), Some((zn, zw))) = (cp.family, zp.family) else {
        rep.fail("matching_family", json!("both algebras must come from the zigzag family"));
        return rep;
    };
    if n != zn || w != zw + 1 {
        rep.fail("matching_family", json!({"cover": [n, w], "zigzag": [zn, zw]}));
        return rep;
    }
    let vmap: Vec<usize> = zp.vertices.iter().map(|v| cover_vertex(cp, v).expect("J vertex")).collect();
    let amap: Vec<usize> = zp
        .arrows
        .iter()
        .map(|ar| cp.find_arrow(vmap[ar.source], &ar.kind).expect("arrow between J vertices") as usize)
        .collect();
    let to_cover = |p: &Path| Path { source: vmap[p.source], arrows: p.arrows.iter().map(|&x| amap[x as usize] as u32).collect() };

    // basis coordinates of e_J A e_J
    let j_basis: Vec<(usize, u32)> = vmap.iter().flat_map(|&x| a.basis_from(x)).filter(|&(l, id)| vmap.contains(&a.basis_target(l, id))).collect();
    let coord = |e: &Element| -> Vec<Q> {
        let nf = a.normal_form(e).expect("valid path");
        let mut v = vec![Q::zero(); j_basis.len()];
        for (p, c) in nf.terms() {
            let key = (p.len(), a.levels()[p.len()].id(p).unwrap());
            let i = j_basis.iter().position(|&k| k == key).expect("path stays in e_J A e_J");
            v[i] = c.clone();
        }
        v
    };
    let bad_rel: Vec<String> = zp
        .relations
        .iter()
        .filter(|r| {
            let img = Element::from_terms(r.terms().map(|(p, c)| (to_cover(p), c.clone())).collect());
            !a.normal_form(&img).unwrap().is_zero()
        })
        .map(|r| zp.element_string(r))
        .collect();
    rep.check("relations_map_to_zero", bad_rel.is_empty(), || json!(bad_rel));
    let mut ech = Echelon::new(j_basis.len());
    for l in 0..z.levels().len() {
        for p in &z.levels()[l].basis {
            ech.insert(&coord(&Element::path(to_cover(p))));
        }
    }
    let ok_iso = ech.rank() == z.dim() && z.dim() == j_basis.len();
    rep.check("end_pj_isomorphic", ok_iso, || json!({"rank_image": ech.rank(), "dim_zigzag": z.dim(), "dim_end": j_basis.len()}));
    let zc = z.cartan();
    let cc = a.cartan();
    let cartan_ok = match (&zc, &cc) {
        (Ok(zc), Ok(cc)) => (0..vmap.len()).all(|i| (0..vmap.len()).all(|j| zc.get(i, j) == cc.get(vmap[i], vmap[j]))),
        _ => false,
    };
    rep.check("cartan_matches", cartan_ok, || json!("Cartan entries of Z and e_J A e_J differ"));

    // full faithfulness on all pairs of projectives
    let zshape = shape_of(z);
    let projs: Vec<_> = (0..a.num_vertices()).map(|x| projective(a, x)).collect();
    let f_mod: Vec<Module> = projs.iter().map(|p| p.module.restrict(zshape.clone(), &vmap, &amap)).collect();
    let mut bad = Vec::new();
    let mut pairs = 0;
    for x in 0..a.num_vertices() {
        for y in 0..a.num_vertices() {
            pairs += 1;
            // Hom(P_x, P_y) = e_y A e_x, realized by left multiplication
            let basis: Vec<Path> = projs[y].paths[x].iter().map(|&(l, id)| a.basis_path(l, id).clone()).collect();
            let mut img = Echelon::new(0);
            let mut first = true;
            for p in &basis {
                let f = left_multiplication(a, &projs[y], &projs[x], &Element::path(p.clone())).restrict(&vmap);
                let flat = f.flatten();
                if first {
                    img = Echelon::new(flat.len());
                    first = false;
                }
                img.insert(&flat);
            }
            let hom_z = hom_space(&f_mod[x], &f_mod[y], None).len();
            if img.rank() != basis.len() || hom_z != basis.len() {
                bad.push(json!({"from": cover.vertex_name(x), "to": cover.vertex_name(y), "dim_hom": basis.len(), "rank_image": img.rank(), "dim_hom_image": hom_z}));
            }
        }
    }
    rep.check(format!("fully_faithful_{pairs}_pairs"), bad.is_empty(), || json!(bad));
    rep
}

/// P_y is injective for y in J (x_0 != 0); K vertices are reported only.
pub fn check_projective_injective(ctx: &Context) -> Report {
    let a = ctx.alg();
    let mut rep = Report::new(format!("projective-injective {}", a.presentation().name));
    let mut bad = Vec::new();
    let mut k_injective = Vec::new();
    for y in 0..a.num_vertices() {
        let p = &ctx.ring.proj[y].module;
        let i = injective(&ctx.op, y);
        let iso = find_isomorphism(p, &i, None).is_some();
        if a.presentation().vertices[y].0[0] != 0 {
            if !iso {
                bad.push(json!({"vertex": ctx.vertex_name(y), "dim_p": p.dim(), "dim_i": i.dim()}));
            }
        } else {
            k_injective.push(json!({"vertex": ctx.vertex_name(y), "injective": iso}));
        }
    }
    rep.check("proj_injective_at_J", bad.is_empty(), || json!(bad));
    rep.info("k_vertices", json!(k_injective));
    let bad_co: Vec<_> = (0..a.num_vertices())
        .filter_map(|x| {
            let c = costandard_coresolution(&ctx.op, x);
            let ok = c.is_exact() && c.kernel_dim == ctx.costandards[x].dim();
            (!ok).then(|| json!({"vertex": ctx.vertex_name(x), "kernel_dim": c.kernel_dim, "dim_nabla": ctx.costandards[x].dim()}))
        })
        .collect();
    rep.check("costandard_coresolutions_exact", bad_co.is_empty(), || json!(bad_co));
    rep
}

/// The Borel subalgebra sits inside the cover, is directed, and restricting
/// costandard modules of the cover to it gives its own costandard modules.
pub fn check_borel(cover: &Context, borel: &Context) -> Report {
    let a = cover.alg();
    let b = borel.alg();
    let cp = a.presentation();
    let bp = b.presentation();
    let mut rep = Report::new(format!("borel {} in {}", bp.name, cp.name));
    let amap: Vec<usize> = bp.arrows.iter().map(|ar| cp.find_arrow(ar.source, &ar.kind).expect("borel arrow") as usize).collect();
    let mut missing = Vec::new();
    for l in b.levels() {
        for p in &l.basis {
            let q = Path { source: p.source, arrows: p.arrows.iter().map(|&x| amap[x as usize] as u32).collect() };
            if a.levels().get(q.len()).and_then(|lv| lv.id(&q)).is_none() {
                missing.push(bp.path_string(p));
            }
        }
    }
    rep.check("basis_words_in_cover", missing.is_empty(), || json!(missing));
    let no_zero: usize = a
        .levels()
        .iter()
        .flat_map(|l| l.basis.iter())
        .filter(|p| p.arrows.iter().all(|&x| cp.arrows[x as usize].kind != ArrowKind::Alpha(0)))
        .count();
    rep.check("dim_matches_words_without_alpha0", no_zero == b.dim(), || json!({"cover_words": no_zero, "dim_borel": b.dim()}));

    let directed = bp.arrows.iter().all(|ar| borel.poset.leq(ar.source, ar.target) && ar.source != ar.target);
    let cartan = b.cartan().ok();
    let unitri = cartan.as_ref().map_or(false, |c| {
        (0..b.num_vertices()).all(|x| {
            (0..b.num_vertices()).all(|y| {
                let v = c.get(x, y);
                if x == y {
                    v.is_one()
                } else {
                    v.is_zero() || borel.poset.leq(x, y)
                }
            })
        })
    });
    rep.check("borel_directed", directed && unitri, || json!({"arrows_increase": directed, "cartan_unitriangular": unitri}));
    let simple_std = borel.standards.iter().all(|m| m.dim() == 1);
    rep.check("borel_standards_simple", simple_std, || json!(borel.standards.iter().map(|m| m.dim()).collect::<Vec<_>>()));

    let vmap: Vec<usize> = (0..b.num_vertices()).collect();
    let bshape = shape_of(b);
    let bad: Vec<_> = (0..b.num_vertices())
        .filter_map(|x| {
            let r = cover.costandards[x].restrict(bshape.clone(), &vmap, &amap);
            let iso = find_isomorphism(&r, &borel.costandards[x], Some(crate::presentation::Bideg::ZERO)).is_some();
            (!iso).then(|| json!({"vertex": cover.vertex_name(x), "dims_restricted": r.dims(), "dims_borel": borel.costandards[x].dims()}))
        })
        .collect();
    rep.check("borel_costandard_iso", bad.is_empty(), || json!(bad));
    rep
}
