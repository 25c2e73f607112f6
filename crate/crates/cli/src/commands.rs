//! One function per subcommand; each returns the run's report document.

use num_traits::ToPrimitive;

use nmi_core::{
    closure_generators, closure_membership, edge_ideal_normality_combinatorial, format_rational,
    hilbert_basis, hochster_configurations, irp_le, lp_max, lp_min, normality_via_bset,
    normality_via_powers, normality_via_rees, power_membership, rees_cone, Budget,
    Error as CoreError, Exponent, Graph, IdealKind, IntegerCone, LpSolution, LpValue,
    MembershipWitness, MonomialIdeal, NormalityReport, PowersReport, QMatrix, QVector,
};

use crate::formats::{format_monomial, MatrixBlock, MatrixMode};
use crate::report::{format_cycle, format_int_vec, Report};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Route {
    Rees,
    Bset,
    Auto,
}

pub fn cmd_normal(
    ideal: &MonomialIdeal,
    route: Route,
    budget: &Budget,
) -> Result<Report, CliError> {
    let mut report = Report::new("Normality");
    report.push("command", "normal");
    push_ideal_stats(&mut report, ideal);
    let effective = match (route, ideal.kind()) {
        (_, IdealKind::Zero) | (_, IdealKind::Unit) => {
            report.push("route.requested", route_str(route));
            report.push_normality("verdict", &NormalityReport::by_convention(true));
            return Ok(report);
        }
        // The Rees route applies to every ideal and yields the monomial-level
        // certificate; the degree-2 route stays opt-in.
        (Route::Auto, _) => Route::Rees,
        (r, _) => r,
    };
    report.push("route.requested", route_str(route));
    let verdict = match effective {
        Route::Rees => normality_via_rees(ideal, budget)?,
        Route::Bset => normality_via_bset(ideal, budget)?,
        Route::Auto => unreachable!("resolved above"),
    };
    report.push_normality("verdict", &verdict);
    Ok(report)
}

fn route_str(route: Route) -> &'static str {
    match route {
        Route::Rees => "rees",
        Route::Bset => "bset",
        Route::Auto => "auto",
    }
}

pub fn cmd_membership(
    ideal: &MonomialIdeal,
    monomial: &Exponent,
    n: u64,
) -> Result<Report, CliError> {
    let mut report = Report::new("Closure membership");
    report.push("command", "membership");
    push_ideal_stats(&mut report, ideal);
    report.push("monomial", format_monomial(monomial));
    report.push("power", n);
    let verdict = closure_membership(ideal, monomial, n)?;
    report.push("closure.member", verdict.member);
    match &verdict.lp_value {
        LpValue::Finite(v) => report.push("closure.lp_value", format_rational(v)),
        LpValue::Infinite => report.push("closure.lp_value", "unbounded"),
    }
    match &verdict.witness {
        MembershipWitness::Combination(l) => report.push_vector("closure.witness.combination", l),
        MembershipWitness::Separator(x) => report.push_vector("closure.witness.separator", x),
        MembershipWitness::Convention => report.push("closure.witness", "convention"),
    }
    // The integer side for contrast: membership in the plain power.
    match power_membership(ideal, monomial, n) {
        Some(ws) => {
            report.push("power.member", true);
            let gens: Vec<String> = ws
                .iter()
                .map(|&i| format_monomial(&ideal.gens()[i]))
                .collect();
            report.push("power.witness", gens.join(" * "));
        }
        None => report.push("power.member", false),
    }
    Ok(report)
}

pub fn cmd_closure(ideal: &MonomialIdeal, n: u64, budget: &Budget) -> Result<Report, CliError> {
    let mut report = Report::new("Integral closure of a power");
    report.push("command", "closure");
    push_ideal_stats(&mut report, ideal);
    report.push("power", n);
    let closure = closure_generators(ideal, n, budget)?;
    report.push("closure.gens", closure.num_gens());
    for (i, g) in closure.gens().iter().enumerate() {
        report.push(format!("closure.gen.{}", i + 1), format_monomial(g));
    }
    let power = ideal.pow(n)?;
    report.push("power.equals_closure", power == closure);
    Ok(report)
}

pub fn cmd_hilbert(block: &MatrixBlock, budget: &Budget) -> Result<Report, CliError> {
    let mut report = Report::new("Hilbert basis");
    report.push("command", "hilbert");
    let cone = match block.mode {
        MatrixMode::Normalization => {
            report.push("mode", "normalization");
            let dim = block.rows.first().map_or(0, |r| r.len());
            IntegerCone::new(dim, block.rows.clone())?
        }
        MatrixMode::ReesAlgebra => {
            report.push("mode", "rees_algebra");
            let s = block.rows.first().map_or(0, |r| r.len());
            let gens: Vec<Exponent> = block
                .rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| {
                            u64::try_from(x).map_err(|_| {
                                CoreError::Unsupported(
                                    "rees_algebra rows must be nonnegative".into(),
                                )
                            })
                        })
                        .collect()
                })
                .collect::<Result<_, _>>()?;
            let ideal = MonomialIdeal::new(s, gens)?;
            rees_cone(&ideal)?
        }
    };
    report.push("cone.dim", cone.dim());
    report.push("cone.generators", cone.generators().len());
    let hb = hilbert_basis(&cone, budget)?;
    report.push("hilbert.size", hb.minimal_hb.len());
    report.push("input_is_hb", hb.input_is_hb);
    if let Some(w) = &hb.witness {
        report.push("witness", format_int_vec(w));
    }
    if block.mode == MatrixMode::ReesAlgebra {
        report.push("ideal.normal", hb.input_is_hb);
    }
    for (i, h) in hb.minimal_hb.iter().enumerate() {
        report.push(format!("hilbert.element.{}", i + 1), format_int_vec(h));
    }
    Ok(report)
}

/// Normality of a cover ideal with the budget fallbacks of the one-shot
/// report: Rees cone first, then a bounded power scan, then an explicit
/// "not reproduced" marker.
fn cover_cell(report: &mut Report, prefix: &str, ideal: &MonomialIdeal, budget: &Budget) {
    match ideal.kind() {
        IdealKind::Zero | IdealKind::Unit => {
            report.push_normality(prefix, &NormalityReport::by_convention(true));
            return;
        }
        IdealKind::Proper => {}
    }
    match normality_via_rees(ideal, budget) {
        Ok(r) => report.push_normality(prefix, &r),
        Err(CoreError::BudgetExceeded(_)) => match normality_via_powers(ideal, 4, budget) {
            Ok(PowersReport::Failure { n, witness }) => {
                report.push(format!("{prefix}.normal"), false);
                report.push(format!("{prefix}.route"), "power-scan");
                report.push(
                    format!("{prefix}.witness.monomial"),
                    format_monomial(&witness),
                );
                report.push(format!("{prefix}.witness.power"), n);
            }
            Ok(PowersReport::NoFailureUpTo(_)) | Err(_) => {
                report.push(
                    format!("{prefix}.status"),
                    "not reproduced at desk scale (budget)",
                );
            }
        },
        Err(e) => {
            report.push(format!("{prefix}.error"), e.to_string());
        }
    }
}

pub fn cmd_graph_report(graph: &Graph, budget: &Budget) -> Result<Report, CliError> {
    let mut report = Report::new("Graph report");
    report.push("command", "graph-report");
    report.push("graph.vertices", graph.num_vertices());
    report.push("graph.edges", graph.num_edges());
    report.push("beta0", graph.independence_number());
    report.push("components", graph.connected_components().len());
    let blocker = graph.blocker();
    report.push(
        "blocker.size",
        if blocker.has_empty_edge() {
            0
        } else {
            blocker.num_edges()
        },
    );

    let complement = graph.complement();
    let configs_g = hochster_configurations(graph);
    let configs_c = hochster_configurations(&complement);
    report.push("hochster.graph.count", configs_g.len());
    if let Some(c) = configs_g.first() {
        report.push("hochster.graph.first.cycle1", format_cycle(&c.cycle1));
        report.push("hochster.graph.first.cycle2", format_cycle(&c.cycle2));
    }
    report.push("hochster.complement.count", configs_c.len());
    if let Some(c) = configs_c.first() {
        report.push("hochster.complement.first.cycle1", format_cycle(&c.cycle1));
        report.push("hochster.complement.first.cycle2", format_cycle(&c.cycle2));
    }

    report.push_normality("ideal.edge", &edge_ideal_normality_combinatorial(graph));
    report.push_normality(
        "complement.edge",
        &edge_ideal_normality_combinatorial(&complement),
    );
    cover_cell(&mut report, "ideal.cover", &graph.cover_ideal(), budget);
    cover_cell(
        &mut report,
        "complement.cover",
        &complement.cover_ideal(),
        budget,
    );

    let beta0 = graph.independence_number();
    report.push("duality.applicable", beta0 <= 2);
    if beta0 <= 2 {
        report.push("duality.cover_normal", configs_c.is_empty());
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Direction {
    Ge,
    Le,
}

pub fn cmd_irp(
    ideal: &MonomialIdeal,
    direction: Direction,
    falsify_box: Option<u64>,
    budget: &Budget,
) -> Result<Report, CliError> {
    let mut report = Report::new("Integer rounding property");
    report.push("command", "irp");
    push_ideal_stats(&mut report, ideal);
    let matrix = ideal.incidence_matrix()?;
    match direction {
        Direction::Ge => {
            report.push("direction", "ge");
            report.push("system", "x >= 0; xA >= 1");
            let rounds = nmi_core::irp_ge(ideal, budget)?;
            report.push("verdict.rounds", rounds);
            report.push("verdict.route", "normality of the ideal (rees)");
        }
        Direction::Le => {
            report.push("direction", "le");
            report.push("system", "x >= 0; xA <= 1");
            let rep = irp_le(&matrix, budget)?;
            report.push("verdict.rounds", rep.rounds);
            if let Some(v) = rep.dual_route {
                report.push("route.dual", v);
            }
            if let Some(v) = rep.degree_two_route {
                report.push("route.degree_two", v);
            }
        }
    }
    if let Some(bound) = falsify_box {
        let (checked, counterexample) = falsify_scan(&matrix, direction, bound, budget)?;
        report.push("falsify.box", bound);
        report.push("falsify.checked", checked);
        match counterexample {
            None => report.push("falsify.counterexample", "none"),
            Some((alpha, lp, ip)) => {
                report.push("falsify.counterexample.alpha", format_int_vec(&alpha));
                report.push("falsify.counterexample.lp", lp);
                report.push("falsify.counterexample.ip", ip);
            }
        }
    }
    Ok(report)
}

/// Pedagogical finite check of the rounding identity over a coordinate box:
/// compares the rounded LP optimum with the exact integer optimum for every
/// integral right-hand side in the box.
/// (right-hand sides checked, first counterexample as (alpha, lp, ip)).
type FalsifyOutcome = (u64, Option<(Vec<i64>, String, String)>);

fn falsify_scan(
    matrix: &QMatrix,
    direction: Direction,
    bound: u64,
    budget: &Budget,
) -> Result<FalsifyOutcome, CliError> {
    let s = matrix.rows();
    let total = (bound + 1)
        .checked_pow(s as u32)
        .ok_or_else(|| CoreError::BudgetExceeded("falsification box too large".to_string()))?;
    budget.admit(total, "irp falsification box")?;
    let mut alpha = vec![0u64; s];
    let mut checked = 0u64;
    loop {
        budget.charge(1, "irp falsification box")?;
        checked += 1;
        let alpha_i64: Vec<i64> = alpha.iter().map(|&x| x as i64).collect();
        let b = QVector::from_ints(&alpha_i64);
        let ones = QVector::ones(matrix.cols());
        match direction {
            Direction::Ge => {
                if let LpSolution::Optimal { value, .. } = lp_max(matrix, &b, &ones)? {
                    let rounded = value.floor().to_integer();
                    let ip = max_integer_packing(matrix, &alpha);
                    if rounded.to_u64() != Some(ip) {
                        return Ok((
                            checked,
                            Some((alpha_i64, format!("floor {rounded}"), ip.to_string())),
                        ));
                    }
                }
            }
            Direction::Le => {
                // Infeasible and unbounded right-hand sides are outside the
                // property's scope.
                if let LpSolution::Optimal { value, .. } = lp_min(matrix, &b, &ones)? {
                    let rounded = value.ceil().to_integer();
                    let ip = min_integer_covering(matrix, &alpha);
                    if ip.map(|v| v.to_string()) != rounded.to_u64().map(|v| v.to_string()) {
                        return Ok((
                            checked,
                            Some((
                                alpha_i64,
                                format!("ceil {rounded}"),
                                ip.map_or("infeasible".into(), |v| v.to_string()),
                            )),
                        ));
                    }
                }
            }
        }
        let mut j = s;
        let mut done = true;
        while j > 0 {
            j -= 1;
            if alpha[j] < bound {
                alpha[j] += 1;
                done = false;
                break;
            }
            alpha[j] = 0;
        }
        if done {
            return Ok((checked, None));
        }
    }
}

fn matrix_columns(matrix: &QMatrix) -> Vec<Exponent> {
    (0..matrix.cols())
        .map(|j| {
            (0..matrix.rows())
                .map(|i| matrix.get(i, j).to_integer().to_u64().unwrap_or(0))
                .collect()
        })
        .collect()
}

/// Exact integer optimum of `max{ |y| : y in N^q, Ay <= alpha }`.
fn max_integer_packing(matrix: &QMatrix, alpha: &[u64]) -> u64 {
    let cols = matrix_columns(matrix);
    fn rec(cols: &[Exponent], residual: &mut Vec<u64>, start: usize) -> u64 {
        let mut best = 0;
        for i in start..cols.len() {
            if cols[i].iter().zip(residual.iter()).all(|(c, r)| c <= r) {
                for (r, c) in residual.iter_mut().zip(&cols[i]) {
                    *r -= c;
                }
                best = best.max(1 + rec(cols, residual, i));
                for (r, c) in residual.iter_mut().zip(&cols[i]) {
                    *r += c;
                }
            }
        }
        best
    }
    rec(&cols, &mut alpha.to_vec(), 0)
}

/// Exact integer optimum of `min{ |y| : y in N^q, Ay >= alpha }`, when
/// feasible.
fn min_integer_covering(matrix: &QMatrix, alpha: &[u64]) -> Option<u64> {
    let cols = matrix_columns(matrix);
    // Rows demanded but never served make the program infeasible.
    for i in 0..alpha.len() {
        if alpha[i] > 0 && cols.iter().all(|c| c[i] == 0) {
            return None;
        }
    }
    fn feasible(cols: &[Exponent], need: &mut Vec<u64>, k: u64, start: usize) -> bool {
        if need.iter().all(|&x| x == 0) {
            return true;
        }
        if k == 0 || start >= cols.len() {
            return false;
        }
        // Prune: total remaining coverage must suffice.
        let max_cover: u64 = cols[start..]
            .iter()
            .map(|c| c.iter().sum::<u64>())
            .max()
            .unwrap_or(0);
        if max_cover * k < need.iter().sum::<u64>() {
            return false;
        }
        for i in start..cols.len() {
            let saved = need.clone();
            for (n, c) in need.iter_mut().zip(&cols[i]) {
                *n = n.saturating_sub(*c);
            }
            if feasible(cols, need, k - 1, i) {
                *need = saved;
                return true;
            }
            *need = saved;
        }
        false
    }
    let mut k = 0;
    loop {
        if feasible(&cols, &mut alpha.to_vec(), k, 0) {
            return Some(k);
        }
        k += 1;
        // |alpha| single steps always suffice once feasibility holds at all.
        if k > alpha.iter().sum::<u64>() + 1 {
            return None;
        }
    }
}

pub fn cmd_covers(clutter: &nmi_core::Clutter) -> Result<Report, CliError> {
    let mut report = Report::new("Minimal vertex covers");
    report.push("command", "covers");
    report.push("clutter.vertices", clutter.num_vertices());
    report.push("clutter.edges", clutter.num_edges());
    let blocker = clutter.blocker();
    if blocker.has_empty_edge() {
        report.push("blocker.size", 0);
        report.push("cover_ideal", "unit ideal (no edges to cover)");
        return Ok(report);
    }
    report.push("blocker.size", blocker.num_edges());
    for (i, cover) in blocker.edges().iter().enumerate() {
        let verts: Vec<String> = cover.iter().map(|v| (v + 1).to_string()).collect();
        report.push(format!("blocker.cover.{}", i + 1), verts.join(" "));
    }
    let ideal = clutter.cover_ideal();
    report.push("cover_ideal.gens", ideal.num_gens());
    for (i, g) in ideal.gens().iter().enumerate() {
        report.push(format!("cover_ideal.gen.{}", i + 1), format_monomial(g));
    }
    Ok(report)
}

pub fn cmd_hochster(graph: &Graph) -> Result<Report, CliError> {
    let mut report = Report::new("Hochster configurations");
    report.push("command", "hochster");
    report.push("graph.vertices", graph.num_vertices());
    report.push("graph.edges", graph.num_edges());
    let configs = hochster_configurations(graph);
    report.push("configs.count", configs.len());
    for (i, c) in configs.iter().enumerate() {
        report.push(format!("config.{}.cycle1", i + 1), format_cycle(&c.cycle1));
        report.push(format!("config.{}.cycle2", i + 1), format_cycle(&c.cycle2));
    }
    report.push("edge_ideal.normal", configs.is_empty());
    Ok(report)
}

fn push_ideal_stats(report: &mut Report, ideal: &MonomialIdeal) {
    report.push("ideal.vars", ideal.num_vars());
    report.push("ideal.gens", ideal.num_gens());
    report.push(
        "ideal.kind",
        match ideal.kind() {
            IdealKind::Zero => "zero",
            IdealKind::Unit => "unit",
            IdealKind::Proper => "proper",
        },
    );
}
