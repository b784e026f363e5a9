//! Named check suites and algebra constructors addressed by strings.

use serde_json::json;

use crate::engine::compute_basis;
use crate::ext::{build_dual_from_ext, check_degree_law, check_dims_against_table, check_dual_koszul, check_simple_costandard_dims, compare_dual, relabel, DeltaExt};
use crate::koszul::{check_delta_koszul, check_koszul, check_shifted_dual_lemmas, check_standard_koszul, fixture_counterexample_report, loop_control};
use crate::presentation::{self as pres, ArrowKind, Presentation};
use crate::qh::{check_borel, check_cover, check_projective_injective, check_quasi_hereditary, Context};
use crate::quiver::Quiver;
use crate::report::Report;
use crate::Error;

pub const CHECKS: &[&str] = &[
    "qh",
    "cover",
    "borel",
    "koszul",
    "standard-koszul",
    "delta-koszul",
    "socle-lemmas",
    "degree-law",
    "dual",
    "dual-koszul",
];

pub const GRID: &[(usize, u32)] = &[(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)];

pub const FIXTURES: &[&str] = &["counterexample", "brauer-dual", "loop"];

pub const ALGEBRAS: &[&str] = &["zigzag", "zigzag-trunc", "cover", "borel", "qdual", "dual-conjectured", "dual-built"];

/// Resolves an algebra name (or `fixture:<name>`) to a presentation.
pub fn presentation(kind: &str, n: usize, s: u32, max_steps: Option<usize>) -> Result<Presentation, Error> {
    if let Some(name) = kind.strip_prefix("fixture:") {
        return match name {
            "counterexample" => Ok(pres::fixture_counterexample()),
            "brauer-dual" => Ok(pres::fixture_brauer_dual(s)),
            "loop" => Ok(pres::fixture_loop()),
            _ => Err(Error::Argument(format!("unknown fixture {name:?}"))),
        };
    }
    match kind {
        "zigzag" => pres::zigzag(n, s),
        "zigzag-trunc" => pres::zigzag_truncated(n, s),
        "cover" => pres::cover(n, s),
        "borel" => pres::borel(n, s),
        "qdual" => pres::shifted_dual(n, s),
        "dual-conjectured" => pres::dual_conjectured(n, s),
        "dual-built" => built_dual(n, s, max_steps),
        _ => Err(Error::Argument(format!("unknown algebra {kind:?}"))),
    }
}

fn cover_context(n: usize, s: u32) -> Result<Context, Error> {
    Context::family(&pres::cover(n, s)?)
}

fn steps_for(ctx: &Context, max_steps: Option<usize>) -> usize {
    max_steps.unwrap_or_else(|| ctx.default_steps())
}

pub fn built_dual(n: usize, s: u32, max_steps: Option<usize>) -> Result<Presentation, Error> {
    let ctx = cover_context(n, s)?;
    let de = DeltaExt::new(&ctx, steps_for(&ctx, max_steps))?;
    Ok(build_dual_from_ext(&de)?.presentation)
}

/// Runs one named check on the instance (n, s).
pub fn run_check(name: &str, n: usize, s: u32, max_steps: Option<usize>) -> Result<Report, Error> {
    let ctx = cover_context(n, s)?;
    let steps = steps_for(&ctx, max_steps);
    let mut rep = Report::new(format!("{name} ({n},{s})"));
    match name {
        "qh" => {
            rep.absorb("qh", check_quasi_hereditary(&ctx, steps));
            rep.absorb("projective_injective", check_projective_injective(&ctx));
        }
        "cover" => {
            let z = compute_basis(&pres::zigzag_truncated(n, s)?, crate::DEFAULT_MAX_LEN)?;
            rep.absorb("cover", check_cover(&ctx, &z));
        }
        "borel" => {
            let b = Context::family(&pres::borel(n, s)?)?;
            rep.absorb("borel", check_borel(&ctx, &b));
            rep.absorb("borel_qh", check_quasi_hereditary(&b, steps_for(&b, max_steps)));
        }
        "koszul" => rep.absorb("koszul", check_koszul(&ctx.ring, steps, false)),
        "standard-koszul" => rep.absorb("standard_koszul", check_standard_koszul(&ctx, steps)),
        "delta-koszul" => rep.absorb("delta_koszul", check_delta_koszul(&ctx, steps)),
        "socle-lemmas" => rep.absorb("socle", check_shifted_dual_lemmas(n, s)?),
        "degree-law" => {
            let de = DeltaExt::new(&ctx, steps)?;
            let names: Vec<String> = (0..ctx.alg().num_vertices()).map(|v| ctx.vertex_name(v)).collect();
            rep.absorb("degree_law", check_degree_law(&de.table(), &Quiver::new(n, s)?.order(), n, &names));
        }
        "dual" => {
            let de = DeltaExt::new(&ctx, steps)?;
            let built = build_dual_from_ext(&de)?;
            rep.absorb("build", built.report);
            let conj = pres::dual_conjectured(n, s)?;
            rep.absorb("compare", compare_dual(&built.presentation, &conj));
            rep.absorb("table", check_dims_against_table(&conj, &de.table()));
            rep.absorb("costandard", check_simple_costandard_dims(&de));
            if n == 1 {
                let m = brauer_dual_relabelled(s);
                rep.absorb("brauer_line", compare_dual(&built.presentation, &m));
            }
            let dot = built.presentation.to_dot();
            rep.info("dual_arrows", json!(built.presentation.arrows.len()));
            rep.info("dual_dot_lines", json!(dot.lines().count()));
        }
        "dual-koszul" => {
            let conj = pres::dual_conjectured(n, s)?;
            let dsteps = max_steps.unwrap_or(2 * ctx.alg().num_vertices() + 2);
            rep.absorb("dual_koszul", check_dual_koszul(&conj, dsteps)?);
        }
        _ => return Err(Error::Argument(format!("unknown check {name:?}"))),
    }
    Ok(rep)
}

/// The printed line dual with alpha* read as a_1 and beta as a_0.
pub fn brauer_dual_relabelled(s: u32) -> Presentation {
    relabel(&pres::fixture_brauer_dual(s), &[("alpha*", ArrowKind::Dual(1)), ("beta", ArrowKind::Dual(0))], (1, s))
}

/// The counterexample and the loop control.
pub fn run_fixtures(max_steps: Option<usize>) -> Result<Report, Error> {
    let mut rep = Report::new("fixtures");
    rep.absorb("counterexample", fixture_counterexample_report()?);
    rep.absorb("loop", loop_control(max_steps.unwrap_or(6))?);
    for s in 2..=3 {
        let built = built_dual(1, s, max_steps)?;
        rep.absorb(&format!("brauer_line_{s}"), compare_dual(&built, &brauer_dual_relabelled(s)));
    }
    Ok(rep)
}
