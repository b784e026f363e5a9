use std::collections::BTreeMap;

use proptest::prelude::*;
use zzqh::filtration::{costandard_coresolution, delta_filtration, Factor};
use zzqh::linalg::Q;
use zzqh::module::*;
use zzqh::presentation::*;
use zzqh::qh::Context;
use zzqh::resolution::*;
use zzqh::*;

fn cover_ctx(n: usize, s: u32) -> Context {
    Context::family(&cover(n, s).unwrap()).unwrap()
}

fn vid(a: &AlgebraInstance, c: &[u32]) -> usize {
    a.presentation().vertex_index(&Vertex(c.to_vec())).unwrap()
}

fn lens(shape: &[Vec<(usize, Bideg)>]) -> Vec<Vec<(usize, i32)>> {
    shape
        .iter()
        .map(|t| {
            let mut v: Vec<(usize, i32)> = t.iter().map(|&(x, b)| (x, b.total())).collect();
            v.sort();
            v
        })
        .collect()
}

fn single(m: &BTreeMap<(usize, Bideg), usize>) -> Option<usize> {
    (m.len() == 1 && m.values().all(|&c| c == 1)).then(|| m.keys().next().unwrap().0)
}

#[test]
fn standards_on_the_line() {
    let c = cover_ctx(1, 2);
    let a = c.alg();
    let (v20, v11) = (vid(a, &[2, 0]), vid(a, &[1, 1]));
    let d20 = &c.standards[v20];
    assert_eq!(d20, &simple(a, v20));
    let d11 = &c.standards[v11];
    assert_eq!(d11.dim(), 2);
    let (soc, top) = d11.socle_top();
    assert_eq!(single(&top), Some(v11));
    assert_eq!(single(&soc), Some(v20));
    assert!(d11.radical().iter().map(|e| e.rank()).sum::<usize>() == 1);
}

#[test]
fn costandard_at_k_is_injective() {
    let c = cover_ctx(1, 2);
    let v02 = vid(c.alg(), &[0, 2]);
    let inj = injective(&c.op, v02);
    assert_eq!(c.costandards[v02].dims(), inj.dims());
    assert!(find_isomorphism(&c.costandards[v02], &inj, Some(Bideg::ZERO)).is_some());
}

#[test]
fn simples_are_one_dimensional_and_zigzag_socles_simple() {
    let c = cover_ctx(2, 2);
    for x in 0..c.alg().num_vertices() {
        let s = simple(c.alg(), x);
        assert_eq!(s.dim(), 1);
        s.validate(c.alg()).unwrap();
    }
    let z = compute_basis(&zigzag(2, 3).unwrap(), 40).unwrap();
    for x in 0..z.num_vertices() {
        let (soc, top) = projective(&z, x).module.socle_top();
        assert_eq!(single(&soc), Some(x));
        assert_eq!(single(&top), Some(x));
    }
}

#[test]
fn hom_between_projectives_is_cartan() {
    for (n, s) in [(1, 2), (2, 2), (2, 3)] {
        let c = cover_ctx(n, s);
        let a = c.alg();
        let cartan = a.cartan().unwrap();
        let ps: Vec<Module> = (0..a.num_vertices()).map(|x| projective(a, x).module).collect();
        for x in 0..ps.len() {
            for y in 0..ps.len() {
                let h = hom_space(&ps[x], &ps[y], None).len();
                assert_eq!(Q::from_integer(h.into()), cartan.get(y, x).clone(), "({n},{s}) x={x} y={y}");
            }
        }
    }
}

#[test]
fn hom_from_standards_to_costandards() {
    let c = cover_ctx(1, 2);
    for x in 0..3 {
        for y in 0..3 {
            let h = hom_space(&c.standards[x], &c.costandards[y], None).len();
            assert_eq!(h, usize::from(x == y));
        }
    }
}

#[test]
fn hom_between_standards_in_sharp_degree_one() {
    let c = cover_ctx(1, 2);
    let (v11, v02) = (vid(c.alg(), &[1, 1]), vid(c.alg(), &[0, 2]));
    let (d11, d02) = (&c.standards[v11], &c.standards[v02]);
    assert_eq!(hom_space(d11, d02, None).len(), 1);
    assert_eq!(hom_space(d11, d02, Some(Bideg::new(0, 1))).len(), 1);
    let f = &hom_space(d11, d02, None)[0];
    assert!(f.commutes(d11, d02));
}

#[test]
fn projective_covers() {
    let c = cover_ctx(1, 2);
    let a = c.alg();
    for x in 0..3 {
        let p = projective(a, x).module;
        let (sum, _, mats) = projective_cover(&c.ring, &p);
        assert_eq!(sum.summands, vec![(x, Bideg::ZERO)]);
        assert!(mats.iter().all(|m| m.rank() == m.rows() && m.rows() == m.cols()));
        let (sum, _, _) = projective_cover(&c.ring, &simple(a, x));
        assert_eq!(sum.summands, vec![(x, Bideg::ZERO)]);
    }
    let v11 = vid(a, &[1, 1]);
    let p = projective(a, v11).module;
    let rad = p.radical();
    let seeds: Vec<(usize, Vec<Q>)> =
        rad.iter().enumerate().flat_map(|(v, e)| e.basis().iter().map(move |b| (v, b.clone()))).collect();
    let sub = p.generated(&seeds);
    let radm = p.submodule(&sub);
    let (sum, _, _) = projective_cover(&c.ring, &radm);
    let got: Vec<(usize, i32)> = {
        let mut g: Vec<_> = sum.summands.iter().map(|&(x, b)| (x, b.total())).collect();
        g.sort();
        g
    };
    let mut want = vec![(vid(a, &[2, 0]), 1), (vid(a, &[0, 2]), 1)];
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn resolution_of_simple_at_k_on_the_line() {
    let c = cover_ctx(1, 2);
    let a = c.alg();
    let (v20, v11, v02) = (vid(a, &[2, 0]), vid(a, &[1, 1]), vid(a, &[0, 2]));
    let r = minimal_resolution(&c.ring, &simple(a, v02), 20);
    assert!(r.complete);
    assert_eq!(r.length(), 4);
    let mut t2 = vec![(v20, 2), (v02, 2)];
    t2.sort();
    assert_eq!(lens(&r.shape()), vec![vec![(v02, 0)], vec![(v11, 1)], t2, vec![(v11, 3)], vec![(v02, 4)]]);
    assert!(r.is_exact() && r.is_minimal(&c.ring));
}

#[test]
fn resolution_of_standard_on_the_line() {
    let c = cover_ctx(1, 2);
    let a = c.alg();
    let (v11, v02) = (vid(a, &[1, 1]), vid(a, &[0, 2]));
    let r = minimal_resolution(&c.ring, &c.standards[v11], 20);
    assert!(r.complete);
    assert_eq!(lens(&r.shape()), vec![vec![(v11, 0)], vec![(v02, 1)]]);
}

#[test]
fn counterexample_simple_resolution() {
    let a = compute_basis(&fixture_counterexample(), 20).unwrap();
    let ring = Ring::new(a.clone());
    let r = minimal_resolution(&ring, &simple(&a, 2), 20);
    assert!(r.complete && r.is_exact());
    let flat: Vec<Vec<(usize, i32)>> = r
        .shape()
        .iter()
        .map(|t| {
            let mut v: Vec<_> = t.iter().map(|&(x, b)| (x, b.flat)).collect();
            v.sort();
            v
        })
        .collect();
    assert_eq!(flat, vec![vec![(2, 0)], vec![(1, 0), (1, 1)], vec![(0, 0), (0, 1)]]);
    assert!(!r.is_linear(Grading::Flat));
    assert!(!r.linearity(Grading::Flat).is_empty());
}

#[test]
fn linearity_examples() {
    let c = cover_ctx(1, 2);
    for x in 0..3 {
        let r = minimal_resolution(&c.ring, &simple(c.alg(), x), 20);
        assert!(r.is_linear(Grading::Length));
        let r = minimal_resolution(&c.ring, &projective(c.alg(), x).module, 20);
        assert!(r.is_linear(Grading::Length) && r.length() == 0);
    }
}

#[test]
fn delta_filtration_of_projective_on_the_line() {
    let c = cover_ctx(1, 2);
    let a = c.alg();
    let (v11, v02) = (vid(a, &[1, 1]), vid(a, &[0, 2]));
    let p = projective(a, v11).module;
    let f = delta_filtration(a, &p, &c.poset, &c.standards).unwrap();
    let vs: Vec<usize> = f.iter().map(|f| f.vertex).collect();
    assert_eq!(vs, vec![v11, v02]);
    for x in 0..3 {
        let f = delta_filtration(a, &c.standards[x], &c.poset, &c.standards).unwrap();
        assert_eq!(f, vec![Factor { vertex: x, shift: Bideg::ZERO }]);
    }
}

#[test]
fn borel_projectives_filter_by_composition_series() {
    let b = Context::family(&borel(2, 3).unwrap()).unwrap();
    let a = b.alg();
    for x in 0..a.num_vertices() {
        assert_eq!(b.standards[x].dim(), 1);
        let p = projective(a, x).module;
        let f = delta_filtration(a, &p, &b.poset, &b.standards).unwrap();
        assert_eq!(f.len(), p.dim());
    }
}

#[test]
fn costandard_coresolutions() {
    let c = cover_ctx(1, 2);
    let a = c.alg();
    let v02 = vid(a, &[0, 2]);
    let co = costandard_coresolution(&c.op, v02);
    assert_eq!(co.vertices, vec![v02]);
    assert!(co.maps.is_empty() && co.is_exact());
    assert_eq!(co.kernel_dim, c.costandards[v02].dim());
    let v20 = vid(a, &[2, 0]);
    let co = costandard_coresolution(&c.op, v20);
    assert_eq!(co.vertices, vec![v20, vid(a, &[1, 1]), v02]);
    assert_eq!(co.maps.len(), 2);
    assert!(co.is_exact());
    assert_eq!(co.kernel_dim, c.costandards[v20].dim());
    for (n, s) in [(2, 2), (2, 3)] {
        let c = cover_ctx(n, s);
        for x in 0..c.alg().num_vertices() {
            let co = costandard_coresolution(&c.op, x);
            assert!(co.is_exact());
            assert_eq!(co.kernel_dim, c.costandards[x].dim());
        }
    }
}

#[test]
fn duality() {
    let c = cover_ctx(1, 2);
    let a = c.alg();
    for x in 0..3 {
        let p = projective(a, x).module;
        let d = p.dualize();
        assert_eq!(d.dim(), p.dim());
        assert_eq!(d.dualize(), p);
        d.validate(&c.op).unwrap();
        assert_eq!(d, injective(a, x));
    }
    let v11 = vid(a, &[1, 1]);
    let p = projective(a, v11).module;
    let i = projective(&c.op, v11).module.dualize();
    assert!(find_isomorphism(&p, &i, None).is_some());
}

#[test]
fn socles_of_shifted_dual_are_simple() {
    let dual = shifted_dual(2, 2).unwrap();
    let b = compute_basis(&dual, 40).unwrap();
    for x in 0..b.num_vertices() {
        let (soc, top) = projective(&b, x).module.socle_top();
        assert_eq!(soc.values().sum::<usize>(), 1, "vertex {x}");
        assert_eq!(single(&top), Some(x));
    }
}

#[test]
fn ext_to_simples_counts_summands() {
    for (n, s) in [(1, 2), (2, 2)] {
        let c = cover_ctx(n, s);
        let a = c.alg();
        for m in c.standards.iter().chain([simple(a, 0)].iter()) {
            let r = minimal_resolution(&c.ring, m, 20);
            let mult = r.multiplicities();
            for y in 0..a.num_vertices() {
                let sy = simple(a, y);
                let e = ExtComputer::new(&c.ring, &r, &sy);
                let got: BTreeMap<(usize, Bideg), usize> = e.dims();
                let want: BTreeMap<(usize, Bideg), usize> =
                    mult.iter().filter(|((_, v, _), _)| *v == y).map(|(&(i, _, b), &k)| ((i, -b), k)).collect();
                assert_eq!(got, want);
            }
        }
    }
}

#[test]
fn standard_costandard_ext_vanishes() {
    for (n, s) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
        let c = cover_ctx(n, s);
        let nv = c.alg().num_vertices();
        for x in 0..nv {
            let r = minimal_resolution(&c.ring, &c.standards[x], 30);
            for y in 0..nv {
                let e = ExtComputer::new(&c.ring, &r, &c.costandards[y]);
                for ((i, _), d) in e.dims() {
                    assert!(i == 0 && x == y && d == 1, "({n},{s}) Ext^{i}(D{x},N{y}) = {d}");
                }
                assert_eq!(hom_space(&c.standards[x], &c.costandards[y], None).len(), usize::from(x == y));
            }
        }
    }
}

#[test]
fn ext_between_standards_respects_bounds() {
    for (n, s) in [(1, 3), (2, 2), (2, 3)] {
        let c = cover_ctx(n, s);
        let q = Quiver::new(n, s).unwrap();
        let o = q.order();
        let nv = c.alg().num_vertices();
        for x in 0..nv {
            let r = minimal_resolution(&c.ring, &c.standards[x], 30);
            for y in 0..nv {
                let e = ExtComputer::new(&c.ring, &r, &c.standards[y]);
                for (i, _) in e.dims().into_keys() {
                    if i == 0 {
                        continue;
                    }
                    assert!(o.lt(x, y), "({n},{s}) Ext^{i}(D{x},D{y}) with x not below y");
                    match o.dist(x, y) {
                        Dist::Finite(d) => assert!(i <= d as usize),
                        Dist::Infinite => unreachable!(),
                    }
                }
            }
        }
    }
}

#[test]
fn standard_resolutions_sit_on_the_diagonal() {
    for (n, s) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
        let c = cover_ctx(n, s);
        let o = Quiver::new(n, s).unwrap().order();
        for y in 0..c.alg().num_vertices() {
            let r = minimal_resolution(&c.ring, &c.standards[y], 30);
            for ((u, x, b), _) in r.multiplicities() {
                assert_eq!(b.total(), u as i32);
                assert_eq!(o.dist(y, x), Dist::Finite(u as u32));
            }
        }
    }
}

#[test]
fn projective_injective_at_j() {
    for (n, s) in [(1, 2), (2, 2), (2, 3)] {
        let c = cover_ctx(n, s);
        let (j, _) = Quiver::new(n, s).unwrap().classify();
        for y in j {
            let p = projective(c.alg(), y).module;
            let i = injective(&c.op, y);
            assert!(find_isomorphism(&p, &i, None).is_some(), "({n},{s}) vertex {y}");
        }
    }
}

#[test]
fn resolutions_are_minimal_and_exact() {
    for (n, s) in [(1, 3), (2, 2), (3, 2)] {
        let c = cover_ctx(n, s);
        for x in 0..c.alg().num_vertices() {
            for m in [simple(c.alg(), x), c.standards[x].clone(), c.costandards[x].clone()] {
                let r = minimal_resolution(&c.ring, &m, 40);
                assert!(r.complete && r.is_minimal(&c.ring) && r.is_exact());
            }
        }
    }
}

proptest! {
    #[test]
    fn dualize_is_an_involution(n in 1usize..3, s in 2u32..4, pick in 0usize..64) {
        let c = cover_ctx(n, s);
        let nv = c.alg().num_vertices();
        let x = pick % nv;
        for m in [projective(c.alg(), x).module, c.standards[x].clone(), c.costandards[x].clone()] {
            let d = m.dualize();
            prop_assert_eq!(d.dim(), m.dim());
            prop_assert_eq!(d.dualize(), m);
        }
    }

    #[test]
    fn top_of_projective_is_its_simple(n in 1usize..4, s in 2u32..4, pick in 0usize..64) {
        prop_assume!(n * s as usize <= 6);
        let c = cover_ctx(n, s);
        let x = pick % c.alg().num_vertices();
        let (_, top) = projective(c.alg(), x).module.socle_top();
        prop_assert_eq!(top, BTreeMap::from([((x, Bideg::ZERO), 1)]));
    }
}
