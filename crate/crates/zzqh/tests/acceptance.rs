//! End-to-end acceptance criteria. Each prints one PASS/FAIL line.

use std::collections::{BTreeMap, BTreeSet};

use zzqh::ext::{build_dual_from_ext, check_degree_law, compare_dual, perturb, DeltaExt};
use zzqh::koszul::fixture_counterexample_report;
use zzqh::module::{projective, simple};
use zzqh::pbw::closed_form_cover_basis;
use zzqh::presentation::{self as pres, ArrowKind};
use zzqh::qh::{check_quasi_hereditary, Context};
use zzqh::quiver::binomial;
use zzqh::resolution::{minimal_resolution, Ring};
use zzqh::suite::{run_check, GRID};
use zzqh::linalg::q;
use zzqh::{compute_basis, Error, Quiver, Vertex};

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite_passes(check: &str, grid: &[(usize, u32)]) -> Outcome {
    for &(n, s) in grid {
        let r = run_check(check, n, s, None).map_err(|e| format!("{check} ({n},{s}): {e}"))?;
        if !r.passed() {
            let f: Vec<String> = r.failures().iter().map(|c| format!("{} {}", c.name, c.witness.clone().unwrap_or_default())).collect();
            return Err(format!("{check} ({n},{s}): {}", f.join("; ")));
        }
    }
    Ok(())
}

fn vid(p: &pres::Presentation, c: &[u32]) -> usize {
    p.vertex_index(&Vertex(c.to_vec())).unwrap()
}

fn criterion_1() -> Outcome {
    let q22 = Quiver::new(2, 2).map_err(|e| e.to_string())?;
    ensure(q22.len() == 6, || format!("Q(2,2) has {} vertices", q22.len()))?;
    let q23 = Quiver::new(2, 3).map_err(|e| e.to_string())?;
    ensure(q23.len() == 10, || format!("Q(2,3) has {} vertices", q23.len()))?;
    let (_, k) = q23.classify();
    let k: BTreeSet<Vec<u32>> = k.iter().map(|&v| q23.vertex(v).coords().to_vec()).collect();
    // labels 7, 8, 9, 0 of the printed example
    let want: BTreeSet<Vec<u32>> = [vec![0, 3, 0], vec![0, 2, 1], vec![0, 1, 2], vec![0, 0, 3]].into();
    ensure(k == want, || format!("K = {k:?}"))?;
    for &(n, s) in GRID {
        for w in [s - 1, s] {
            let q = Quiver::new(n, w).map_err(|e| e.to_string())?;
            let b = binomial(w as u64 + n as u64, n as u64) as usize;
            ensure(q.len() == b, || format!("Q({n},{w}) has {} vertices, expected {b}", q.len()))?;
        }
    }
    Ok(())
}

/// Counts pairs (x, I) with I a set of arrow indices admitting an order that stays
/// inside the simplex: one basis path per such pair.
fn subset_word_dim(n: usize, s: u32) -> usize {
    let w = s - 1;
    let mut verts = Vec::new();
    let mut cur = vec![0u32; n + 1];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for a in 0..=left {
            cur[i] = a;
            rec(i + 1, left - a, cur, out);
        }
    }
    rec(0, w, &mut cur, &mut verts);
    let shift = |x: &[u32], i: usize| -> Option<Vec<u32>> {
        let m = if i == 0 { n } else { i - 1 };
        if x[m] == 0 {
            return None;
        }
        let mut y = x.to_vec();
        y[m] -= 1;
        y[i] += 1;
        Some(y)
    };
    let mut total = 0;
    for x in &verts {
        for mask in 0u32..(1 << (n + 1)) {
            // reachable states: (visited subset, vertex)
            let mut frontier: BTreeSet<(u32, Vec<u32>)> = [(0u32, x.clone())].into();
            let mut found = mask == 0;
            while !frontier.is_empty() && !found {
                let mut next = BTreeSet::new();
                for (used, y) in &frontier {
                    for i in 0..=n {
                        if mask & (1 << i) != 0 && used & (1 << i) == 0 {
                            if let Some(z) = shift(y, i) {
                                let u = used | (1 << i);
                                if u == mask {
                                    found = true;
                                }
                                next.insert((u, z));
                            }
                        }
                    }
                }
                frontier = next;
            }
            if found {
                total += 1;
            }
        }
    }
    total
}

fn criterion_2() -> Outcome {
    for (n, s) in [(2usize, 2u32), (2, 3), (3, 2)] {
        let p = if s == 2 { pres::zigzag_truncated(n, s) } else { pres::zigzag(n, s) }.map_err(|e| e.to_string())?;
        let a = compute_basis(&p, zzqh::DEFAULT_MAX_LEN).map_err(|e| e.to_string())?;
        let c = a.cartan().map_err(|e| e.to_string())?;
        for i in 0..c.rows() {
            for j in 0..c.cols() {
                let v = c.get(i, j).clone();
                let ok = if i == j { v == q(2) } else { v <= q(1) };
                ensure(ok, || format!("Z({n},{s}) Cartan[{i}][{j}] = {v}"))?;
            }
        }
        if (n, s) == (2, 3) {
            ensure(a.dim() == 30, || format!("dim Z(2,3) = {}", a.dim()))?;
            let oracle = subset_word_dim(2, 3);
            ensure(oracle == 30, || format!("subset-word oracle gives {oracle}"))?;
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    for &(n, s) in GRID {
        let p = pres::cover(n, s).map_err(|e| e.to_string())?;
        let a = compute_basis(&p, zzqh::DEFAULT_MAX_LEN).map_err(|e| e.to_string())?;
        let mut from_engine: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
        for ((l, _, x, y), d) in a.dims() {
            *from_engine.entry((l, x, y)).or_insert(0) += d;
        }
        let mut from_words: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
        for w in closed_form_cover_basis(&p, n) {
            let t = p.path_target(&w).map_err(|e| e.to_string())?;
            *from_words.entry((w.len(), w.source, t)).or_insert(0) += 1;
        }
        ensure(from_engine == from_words, || format!("cover({n},{s}) word basis differs"))?;
    }
    let p = pres::cover(1, 2).map_err(|e| e.to_string())?;
    let a = compute_basis(&p, zzqh::DEFAULT_MAX_LEN).map_err(|e| e.to_string())?;
    let dims: Vec<usize> = [[2, 0], [1, 1], [0, 2]].iter().map(|v| projective(&a, vid(&p, v)).module.dim()).collect();
    ensure(dims == vec![3, 4, 2], || format!("projective dims {dims:?}"))
}

fn criterion_6() -> Outcome {
    suite_passes("koszul", GRID)?;
    suite_passes("standard-koszul", GRID)?;
    let p = pres::cover(1, 2).map_err(|e| e.to_string())?;
    let a = compute_basis(&p, zzqh::DEFAULT_MAX_LEN).map_err(|e| e.to_string())?;
    let ring = Ring::new(a.clone());
    let r = minimal_resolution(&ring, &simple(&a, vid(&p, &[0, 2])), 20);
    let shape: Vec<Vec<(Vec<u32>, i32)>> = r
        .shape()
        .iter()
        .map(|t| {
            let mut v: Vec<_> = t.iter().map(|&(x, b)| (p.vertices[x].coords().to_vec(), b.total())).collect();
            v.sort();
            v
        })
        .collect();
    let want = vec![
        vec![(vec![0, 2], 0)],
        vec![(vec![1, 1], 1)],
        vec![(vec![0, 2], 2), (vec![2, 0], 2)],
        vec![(vec![1, 1], 3)],
        vec![(vec![0, 2], 4)],
    ];
    ensure(r.complete && r.is_exact() && r.is_minimal(&ring) && shape == want, || format!("resolution of S(0,2): {shape:?}"))
}

fn criterion_9() -> Outcome {
    let r = fixture_counterexample_report().map_err(|e| e.to_string())?;
    ensure(r.passed(), || serde_json::to_string(&r.to_json()).unwrap())
}

fn criterion_10() -> Outcome {
    for (n, s) in [(1usize, 2u32), (1, 3), (2, 2), (2, 3), (3, 2)] {
        let ctx = Context::family(&pres::cover(n, s).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let de = DeltaExt::new(&ctx, ctx.default_steps()).map_err(|e| e.to_string())?;
        let table = de.table();
        ensure(!table.is_empty(), || "empty table".into())?;
        let names: Vec<String> = (0..de.num_vertices()).map(|v| ctx.vertex_name(v)).collect();
        let q = Quiver::new(n, s).map_err(|e| e.to_string())?;
        let r = check_degree_law(&table, &q.order(), n, &names);
        ensure(r.passed(), || format!("({n},{s}) {}", r.to_json()))?;
    }
    Ok(())
}

fn criterion_11() -> Outcome {
    suite_passes("dual", GRID)?;
    // the line case: beta^2 and the commutator are relations, a1 a1 is not
    for s in [2u32, 3] {
        let built = zzqh::suite::built_dual(1, s, None).map_err(|e| e.to_string())?;
        let spaces = built.relation_spaces();
        for ((_, _), (paths, ech)) in &spaces {
            for (k, p) in paths.iter().enumerate() {
                let kinds: Vec<&ArrowKind> = p.arrows.iter().map(|&a| &built.arrows[a as usize].kind).collect();
                let mut e = vec![q(0); paths.len()];
                e[k] = q(1);
                let in_space = ech.contains(&e);
                match (kinds[0], kinds[1]) {
                    (ArrowKind::Dual(1), ArrowKind::Dual(1)) => ensure(!in_space, || format!("a1 a1 is a relation at s={s}"))?,
                    (ArrowKind::Dual(0), ArrowKind::Dual(0)) => ensure(in_space, || format!("a0 a0 is not a relation at s={s}"))?,
                    _ => {}
                }
            }
        }
    }
    // arrows of the (2,3) dual against the printed figure
    let label = |c: char| -> Vec<u32> {
        match c {
            '1' => vec![3, 0, 0],
            '2' => vec![2, 1, 0],
            '3' => vec![2, 0, 1],
            '4' => vec![1, 2, 0],
            '5' => vec![1, 1, 1],
            '6' => vec![1, 0, 2],
            '7' => vec![0, 3, 0],
            '8' => vec![0, 2, 1],
            '9' => vec![0, 1, 2],
            _ => vec![0, 0, 3],
        }
    };
    let printed = [
        ('7', 1, '4'), ('4', 1, '2'), ('8', 2, '7'), ('8', 1, '5'), ('8', 0, '4'), ('2', 1, '1'),
        ('5', 2, '4'), ('5', 1, '3'), ('5', 0, '2'), ('9', 0, '5'), ('9', 1, '6'), ('9', 2, '8'),
        ('3', 2, '2'), ('3', 0, '1'), ('6', 2, '5'), ('6', 0, '3'), ('0', 0, '6'), ('0', 2, '9'),
    ];
    let want: BTreeSet<(Vec<u32>, usize, Vec<u32>)> = printed.iter().map(|&(a, i, b)| (label(a), i, label(b))).collect();
    let built = zzqh::suite::built_dual(2, 3, None).map_err(|e| e.to_string())?;
    let got: BTreeSet<(Vec<u32>, usize, Vec<u32>)> = built
        .arrows
        .iter()
        .map(|a| (built.vertices[a.source].coords().to_vec(), a.kind.index().unwrap(), built.vertices[a.target].coords().to_vec()))
        .collect();
    ensure(got == want, || format!("dual quiver differs: {:?}", got.symmetric_difference(&want).collect::<Vec<_>>()))
}

fn criterion_13() -> Outcome {
    let z = Context::family(&pres::zigzag(2, 3).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let r = check_quasi_hereditary(&z, z.default_steps());
    ensure(!r.passed() && r.failures().iter().all(|f| f.witness.is_some()), || "zigzag(2,3) passed the qh check".into())?;

    let ctx = Context::family(&pres::cover(2, 3).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let de = DeltaExt::new(&ctx, ctx.default_steps()).map_err(|e| e.to_string())?;
    let built = build_dual_from_ext(&de).map_err(|e| e.to_string())?.presentation;
    let conj = pres::dual_conjectured(2, 3).map_err(|e| e.to_string())?;
    let cmp = compare_dual(&built, &perturb(&conj));
    let fails = cmp.failures();
    ensure(!fails.is_empty() && fails.iter().all(|f| f.witness.is_some()), || "perturbation not detected".into())?;

    match compute_basis(&pres::zigzag(1, 2).map_err(|e| e.to_string())?, 10) {
        Err(Error::NonTermination { .. }) => Ok(()),
        other => Err(format!("zigzag(1,2) gave {:?}", other.map(|a| a.dim()))),
    }
}

#[test]
fn acceptance() {
    let checks: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("quiver combinatorics", Box::new(criterion_1)),
        ("zigzag Cartan and dimension", Box::new(criterion_2)),
        ("word basis of the cover", Box::new(criterion_3)),
        ("quasi-heredity and cover", Box::new(|| {
            suite_passes("qh", GRID)?;
            suite_passes("cover", GRID)
        })),
        ("Borel subalgebra", Box::new(|| suite_passes("borel", GRID))),
        ("Koszulity and the resolution of S(0,2)", Box::new(criterion_6)),
        ("socle lemmas", Box::new(|| suite_passes("socle-lemmas", &[(1, 2), (2, 2), (2, 3)]))),
        ("Delta-Koszulity", Box::new(|| suite_passes("delta-koszul", GRID))),
        ("counterexample fixture", Box::new(criterion_9)),
        ("degree law", Box::new(criterion_10)),
        ("dual presentation", Box::new(criterion_11)),
        ("dual Koszulity and shift law", Box::new(|| suite_passes("dual-koszul", &[(1, 2), (1, 3), (2, 2), (2, 3)]))),
        ("negative controls", Box::new(criterion_13)),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in checks.iter().enumerate() {
        let t = std::time::Instant::now();
        match f() {
            Ok(()) => println!("PASS criterion {:2}: {name} ({:.2?})", i + 1, t.elapsed()),
            Err(e) => {
                println!("FAIL criterion {:2}: {name}: {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
