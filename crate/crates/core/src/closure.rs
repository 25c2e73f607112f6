//! Newton/covering polyhedra and integral closures of powers.
//!
//! Membership `t^a` in the closure of `I^n` is an exact LP: the optimum of
//! `max{ <y,1> : y >= 0, Ay <= a }` is at least `n` exactly when `a/n` lies in
//! the Newton polyhedron. The closure of `I^n` itself is produced by scanning
//! the lattice box below `n` times the componentwise generator maximum
//! against the vertices of the covering polyhedron `{x >= 0 : xA >= 1}`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
#[cfg(test)]
use crate::ideal::divides;
use crate::ideal::{exp_scale, total_degree, Exponent, IdealKind, MonomialIdeal};
use crate::lp::{lp_max, rat_int, LpSolution, QMatrix, QVector, Rational};

/// The covering polyhedron `Q(I) = { x : x >= 0, xA >= 1 }` together with its
/// full (finite) vertex list.
#[derive(Debug, Clone)]
pub struct CoveringPolyhedron {
    ideal: MonomialIdeal,
    vertices: Vec<QVector>,
}

impl CoveringPolyhedron {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn vertices(&self) -> &[QVector] {
        &self.vertices
    }

    /// Vertices with integer coordinates; for an edge ideal these are the
    /// characteristic vectors of the minimal vertex covers.
    pub fn integral_vertices(&self) -> Vec<Exponent> {
        self.vertices
            .iter()
            .filter_map(|v| {
                v.entries()
                    .iter()
                    .map(|r| {
                        if r.is_integer() {
                            r.to_integer().to_u64()
                        } else {
                            None
                        }
                    })
                    .collect::<Option<Exponent>>()
            })
            .collect()
    }
}

/// Enumerate all vertices of `Q(I)` exactly: every choice of `s` tight
/// constraints among the `q` cover inequalities and `s` sign constraints is
/// solved and kept when it is a feasible point. Variables missing from every
/// generator are unbounded directions of `Q(I)`, so no vertex has support
/// there; the enumeration yields that automatically.
pub fn covering_vertices(ideal: &MonomialIdeal) -> Result<CoveringPolyhedron> {
    covering_vertices_budgeted(ideal, &Budget::default())
}

pub fn covering_vertices_budgeted(
    ideal: &MonomialIdeal,
    budget: &Budget,
) -> Result<CoveringPolyhedron> {
    match ideal.kind() {
        IdealKind::Zero => return Err(Error::NotProper("zero")),
        IdealKind::Unit => return Err(Error::NotProper("unit")),
        IdealKind::Proper => {}
    }
    let s = ideal.num_vars();
    let q = ideal.num_gens();
    let total = s + q;
    budget.admit(binomial(total, s), "covering polyhedron vertex enumeration")?;

    // Constraint rows: generator inequalities first, then x_i >= 0.
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(total);
    let mut rhs: Vec<Rational> = Vec::with_capacity(total);
    for g in ideal.gens() {
        rows.push(g.iter().map(|&e| rat_int(e as i64)).collect());
        rhs.push(rat_int(1));
    }
    for i in 0..s {
        let mut e = vec![Rational::zero(); s];
        e[i] = rat_int(1);
        rows.push(e);
        rhs.push(Rational::zero());
    }

    let gens_int: Vec<&Exponent> = ideal.gens().iter().collect();
    let mut found: Vec<QVector> = Vec::new();
    let mut subset = vec![0usize; s];
    enumerate_subsets(total, s, &mut subset, 0, 0, &mut |chosen| {
        budget.charge(1, "covering polyhedron vertex enumeration")?;
        let mat = QMatrix::from_rows(chosen.iter().map(|&i| rows[i].clone()).collect())?;
        let b = QVector::new(chosen.iter().map(|&i| rhs[i].clone()).collect());
        let Some(x) = mat.solve_square(&b) else {
            return Ok(());
        };
        if !x.is_nonnegative() {
            return Ok(());
        }
        let (nums, den) = x.to_integers();
        let feasible = gens_int.iter().all(|g| {
            let mut acc = BigInt::zero();
            for (n, &e) in nums.iter().zip(g.iter()) {
                if e > 0 {
                    acc += n * BigInt::from(e);
                }
            }
            acc >= den
        });
        if feasible && !found.contains(&x) {
            found.push(x);
        }
        Ok(())
    })?;

    found.sort_by(|a, b| a.entries().cmp(b.entries()));
    Ok(CoveringPolyhedron {
        ideal: ideal.clone(),
        vertices: found,
    })
}

fn binomial(n: usize, k: usize) -> u64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

fn enumerate_subsets(
    n: usize,
    k: usize,
    subset: &mut Vec<usize>,
    pos: usize,
    start: usize,
    f: &mut impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if pos == k {
        return f(subset);
    }
    for i in start..n {
        if n - i < k - pos {
            break;
        }
        subset[pos] = i;
        enumerate_subsets(n, k, subset, pos + 1, i + 1, f)?;
    }
    Ok(())
}

/// LP value of a membership query; infinite only for the unit ideal.
#[derive(Debug, Clone, PartialEq)]
pub enum LpValue {
    Finite(Rational),
    Infinite,
}

impl LpValue {
    pub fn at_least(&self, n: u64) -> bool {
        match self {
            LpValue::Finite(v) => v >= &rat_int(n as i64),
            LpValue::Infinite => true,
        }
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            LpValue::Finite(v) => Some(v),
            LpValue::Infinite => None,
        }
    }
}

/// Certificate attached to a membership verdict.
#[derive(Debug, Clone)]
pub enum MembershipWitness {
    /// `lambda >= 0` with `A lambda <= a` and `|lambda| >= n`.
    Combination(QVector),
    /// A point of `Q(I)` whose inner product with `a` is below `n`.
    Separator(QVector),
    /// Zero and unit ideals need no arithmetic certificate.
    Convention,
}

#[derive(Debug, Clone)]
pub struct MembershipVerdict {
    pub member: bool,
    pub lp_value: LpValue,
    pub witness: MembershipWitness,
}

/// Decide `t^a` in the closure of `I^n` via the exact LP test, returning the
/// optimal combination (member) or the separating dual point (non-member).
pub fn closure_membership(
    ideal: &MonomialIdeal,
    a: &Exponent,
    n: u64,
) -> Result<MembershipVerdict> {
    if a.len() != ideal.num_vars() {
        return Err(Error::DimensionMismatch(
            "monomial arity differs from ideal".into(),
        ));
    }
    if n == 0 {
        return Err(Error::Unsupported("power must be at least 1".into()));
    }
    match ideal.kind() {
        IdealKind::Zero => {
            return Ok(MembershipVerdict {
                member: false,
                lp_value: LpValue::Finite(Rational::zero()),
                witness: MembershipWitness::Convention,
            })
        }
        IdealKind::Unit => {
            return Ok(MembershipVerdict {
                member: true,
                lp_value: LpValue::Infinite,
                witness: MembershipWitness::Convention,
            })
        }
        IdealKind::Proper => {}
    }
    let matrix = ideal.incidence_matrix()?;
    let b = QVector::new(a.iter().map(|&e| rat_int(e as i64)).collect());
    let c = QVector::ones(ideal.num_gens());
    match lp_max(&matrix, &b, &c)? {
        LpSolution::Optimal {
            value,
            primal,
            dual,
        } => {
            let member = value >= rat_int(n as i64);
            Ok(MembershipVerdict {
                member,
                lp_value: LpValue::Finite(value),
                witness: if member {
                    MembershipWitness::Combination(primal)
                } else {
                    MembershipWitness::Separator(dual)
                },
            })
        }
        other => Err(Error::Internal(format!(
            "membership LP must be bounded and feasible for a proper ideal, got {other:?}"
        ))),
    }
}

/// Minimal-generator test for the closure of `I^n`: membership must hold at
/// `a` and fail at every `a - e_i >= 0`.
pub fn min_generator_test(ideal: &MonomialIdeal, a: &Exponent, n: u64) -> Result<bool> {
    if !closure_membership(ideal, a, n)?.member {
        return Ok(false);
    }
    for i in 0..a.len() {
        if a[i] == 0 {
            continue;
        }
        let mut down = a.clone();
        down[i] -= 1;
        if closure_membership(ideal, &down, n)?.member {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Integerized vertex data for fast box scans: `w` with threshold `n * den`.
struct ScaledVertex {
    w: Vec<i64>,
    den: i64,
}

fn scale_vertices(poly: &CoveringPolyhedron) -> Result<Vec<ScaledVertex>> {
    poly.vertices()
        .iter()
        .map(|v| {
            let (nums, den) = v.to_integers();
            let w = nums
                .iter()
                .map(|n| n.to_i64())
                .collect::<Option<Vec<i64>>>()
                .ok_or_else(|| Error::Unsupported("vertex coordinates exceed i64".into()))?;
            let den = den
                .to_i64()
                .ok_or_else(|| Error::Unsupported("vertex denominator exceeds i64".into()))?;
            Ok(ScaledVertex { w, den })
        })
        .collect()
}

/// Minimal generating set of the closure of `I^n`.
///
/// Every lattice point `a` with `0 <= a_j <= n * max_i (v_i)_j` is tested
/// against the vertices of `Q(I)`; the box bound is safe because any member
/// with a coordinate beyond it stays a member after decrementing that
/// coordinate, hence is not a minimal generator. Generators on the box
/// boundary are re-verified through the independent LP route.
pub fn closure_generators(ideal: &MonomialIdeal, n: u64, budget: &Budget) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::Unsupported("power must be at least 1".into()));
    }
    match ideal.kind() {
        IdealKind::Zero => return Err(Error::NotProper("zero")),
        IdealKind::Unit => return Err(Error::NotProper("unit")),
        IdealKind::Proper => {}
    }
    let s = ideal.num_vars();
    let poly = covering_vertices_budgeted(ideal, budget)?;
    let vertices = scale_vertices(&poly)?;

    let bounds: Vec<u64> = ideal.componentwise_max().iter().map(|&m| m * n).collect();
    let mut total_points: u128 = 1;
    for &b in &bounds {
        total_points = total_points.saturating_mul(b as u128 + 1);
    }
    if total_points > u64::MAX as u128 {
        return Err(Error::BudgetExceeded("closure generator box".into()));
    }
    budget.admit(total_points as u64, "closure generator box scan")?;
    budget.charge(total_points as u64, "closure generator box scan")?;
    let total_points = total_points as u64;

    // Row-major strides over the box.
    let mut strides = vec![1u64; s];
    for j in (0..s.saturating_sub(1)).rev() {
        strides[j] = strides[j + 1] * (bounds[j + 1] + 1);
    }

    let member_at = |a: &[u64]| {
        vertices.iter().all(|v| {
            let mut acc: i128 = 0;
            for (x, &wj) in a.iter().zip(&v.w) {
                acc += *x as i128 * wj as i128;
            }
            acc >= n as i128 * v.den as i128
        })
    };

    // With the last coordinate fastest, the odometer order matches the linear
    // index order of `strides`.
    let mut members = vec![false; total_points as usize];
    let mut point = vec![0u64; s];
    for slot in members.iter_mut() {
        *slot = member_at(&point);
        for j in (0..s).rev() {
            if point[j] < bounds[j] {
                point[j] += 1;
                break;
            }
            point[j] = 0;
        }
    }
    finish_closure_generators(ideal, n, s, &bounds, &strides, &members)
}

fn finish_closure_generators(
    ideal: &MonomialIdeal,
    n: u64,
    s: usize,
    bounds: &[u64],
    strides: &[u64],
    members: &[bool],
) -> Result<MonomialIdeal> {
    let mut minimal: Vec<Exponent> = Vec::new();
    let mut point = vec![0u64; s];
    for (idx, &is_member) in members.iter().enumerate() {
        if is_member {
            let is_minimal = (0..s).all(|j| point[j] == 0 || !members[idx - strides[j] as usize]);
            if is_minimal {
                minimal.push(point.clone());
            }
        }
        for j in (0..s).rev() {
            if point[j] < bounds[j] {
                point[j] += 1;
                break;
            }
            point[j] = 0;
        }
    }

    // Independent LP re-check for anything that touches the box boundary.
    for g in &minimal {
        if g.iter().zip(bounds).any(|(a, b)| a == b) {
            if !closure_membership(ideal, g, n)?.member {
                return Err(Error::Internal(
                    "box scan produced a non-member on the boundary".into(),
                ));
            }
            for j in 0..s {
                if g[j] == 0 {
                    continue;
                }
                let mut down = g.clone();
                down[j] -= 1;
                if closure_membership(ideal, &down, n)?.member {
                    return Err(Error::Internal(
                        "box scan produced a non-minimal boundary generator".into(),
                    ));
                }
            }
        }
    }

    MonomialIdeal::new(ideal.num_vars(), minimal)
}

/// Check that the closure of `I^n` equals the closure of the ideal generated
/// by the `n`-th powers of the generators. A `false` return would mean an
/// implementation bug, so this doubles as a self-test.
pub fn scaled_power_law(ideal: &MonomialIdeal, n: u64, budget: &Budget) -> Result<bool> {
    let lhs = closure_generators(ideal, n, budget)?;
    let scaled = MonomialIdeal::new(
        ideal.num_vars(),
        ideal.gens().iter().map(|g| exp_scale(g, n)),
    )?;
    let rhs = closure_generators(&scaled, 1, budget)?;
    Ok(lhs == rhs)
}

/// Outcome of comparing `I^n` against the closure of `I^n` for `n` up to a
/// bound. Finding no failure is evidence, not a proof of normality; the cone
/// route gives the definitive answer.
#[derive(Debug, Clone)]
pub enum PowersReport {
    NoFailureUpTo(u64),
    Failure { n: u64, witness: Exponent },
}

pub fn normality_via_powers(
    ideal: &MonomialIdeal,
    n_max: u64,
    budget: &Budget,
) -> Result<PowersReport> {
    if n_max == 0 {
        return Err(Error::Unsupported("n_max must be at least 1".into()));
    }
    match ideal.kind() {
        // Zero and unit ideals have all powers equal to themselves.
        IdealKind::Zero | IdealKind::Unit => return Ok(PowersReport::NoFailureUpTo(n_max)),
        IdealKind::Proper => {}
    }
    for n in 1..=n_max {
        let closure = closure_generators(ideal, n, budget)?;
        let power = ideal.pow(n)?;
        if closure != power {
            // Some minimal closure generator escapes I^n; find it.
            for g in closure.gens() {
                if crate::ideal::power_membership(ideal, g, n).is_none() {
                    return Ok(PowersReport::Failure {
                        n,
                        witness: g.clone(),
                    });
                }
            }
            return Err(Error::Internal(
                "closure differs from power but every generator is a member".into(),
            ));
        }
    }
    Ok(PowersReport::NoFailureUpTo(n_max))
}

/// Integer rounding property of the covering system `x >= 0; xA >= 1` of an
/// ideal: equivalent to normality, decided on the Rees cone.
pub fn irp_ge(ideal: &MonomialIdeal, budget: &Budget) -> Result<bool> {
    Ok(crate::cone::normality_via_rees(ideal, budget)?.normal)
}

/// Which theorem-backed reductions were used to decide `irp_le`.
#[derive(Debug, Clone)]
pub struct IrpLeReport {
    pub rounds: bool,
    /// Verdict via the complementary 0/1 matrix, when applicable.
    pub dual_route: Option<bool>,
    /// Verdict via the degree-2 Hilbert-basis criterion, when applicable.
    pub degree_two_route: Option<bool>,
}

/// Integer rounding property of the packing system `x >= 0; xA <= 1`.
///
/// Two finite reductions are supported: for a 0/1 matrix the property holds
/// exactly when the ideal of the complementary matrix is normal, and for the
/// incidence matrix of a degree-2 ideal exactly when the lifted degree-2
/// configuration is a Hilbert basis. When both apply they must agree.
pub fn irp_le(matrix: &QMatrix, budget: &Budget) -> Result<IrpLeReport> {
    let mut columns: Vec<Exponent> = Vec::with_capacity(matrix.cols());
    for j in 0..matrix.cols() {
        let mut col = Vec::with_capacity(matrix.rows());
        for i in 0..matrix.rows() {
            let v = matrix.get(i, j);
            if !v.is_integer() || v.is_negative() {
                return Err(Error::Unsupported(
                    "irp matrices must have natural entries".into(),
                ));
            }
            col.push(
                v.to_integer()
                    .to_u64()
                    .ok_or_else(|| Error::Unsupported("irp matrix entry exceeds u64".into()))?,
            );
        }
        if col.iter().all(|&e| e == 0) {
            return Err(Error::Unsupported(
                "irp matrices must not have zero columns".into(),
            ));
        }
        columns.push(col);
    }

    let zero_one = columns.iter().all(|c| c.iter().all(|&e| e <= 1));
    let degree_two = columns.iter().all(|c| total_degree(c) == 2);
    if !zero_one && !degree_two {
        return Err(Error::Unsupported(
            "irp_le handles 0/1 matrices and degree-2 incidence matrices only".into(),
        ));
    }

    // Rows where no column has support add nothing to either system.
    let supported: Vec<usize> = (0..matrix.rows())
        .filter(|&i| columns.iter().any(|c| c[i] > 0))
        .collect();
    let restrict = |c: &Exponent| -> Exponent { supported.iter().map(|&i| c[i]).collect() };
    let s = supported.len();

    let dual_route = if zero_one {
        // Complementary matrix: rounding for xA <= 1 matches rounding for
        // xA* >= 1, i.e. normality of the complementary ideal.
        let starred: Vec<Exponent> = columns
            .iter()
            .map(|c| restrict(c).iter().map(|&e| 1 - e).collect())
            .collect();
        let star_ideal = MonomialIdeal::new(s, starred)?;
        Some(match star_ideal.kind() {
            // A full row of ones complements to the unit ideal: normal.
            IdealKind::Unit | IdealKind::Zero => true,
            IdealKind::Proper => crate::cone::normality_via_rees(&star_ideal, budget)?.normal,
        })
    } else {
        None
    };

    let degree_two_route = if degree_two {
        let ideal = MonomialIdeal::new(s, columns.iter().map(&restrict))?;
        Some(match ideal.kind() {
            IdealKind::Unit | IdealKind::Zero => true,
            IdealKind::Proper => crate::cone::normality_via_bset(&ideal, budget)?.normal,
        })
    } else {
        None
    };

    let rounds = match (dual_route, degree_two_route) {
        (Some(a), Some(b)) => {
            if a != b {
                return Err(Error::Internal(
                    "dual route and degree-2 route disagree on integer rounding".into(),
                ));
            }
            a
        }
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => unreachable!("at least one route applies"),
    };
    Ok(IrpLeReport {
        rounds,
        dual_route,
        degree_two_route,
    })
}

/// Normality of a product of ideals in disjoint variables reduces to
/// normality of the factors.
pub fn disjoint_product_normality(
    i1: &MonomialIdeal,
    i2: &MonomialIdeal,
    budget: &Budget,
) -> Result<bool> {
    if i1.num_vars() != i2.num_vars() {
        return Err(Error::DimensionMismatch(
            "factors live on different variable counts".into(),
        ));
    }
    let s1 = i1.supported_vars();
    let s2 = i2.supported_vars();
    if s1.iter().any(|v| s2.contains(v)) {
        return Err(Error::Unsupported(
            "factors must use disjoint sets of variables".into(),
        ));
    }
    Ok(crate::cone::normality_via_rees(i1, budget)?.normal
        && crate::cone::normality_via_rees(i2, budget)?.normal)
}

/// `I1 * I2 = I1 ∩ I2` for ideals in disjoint variables.
pub fn product_equals_intersection(i1: &MonomialIdeal, i2: &MonomialIdeal) -> Result<bool> {
    Ok(i1.product(i2)? == i1.intersection(i2)?)
}

/// Closure of the product against the product of closures, for ideals in
/// disjoint variables: they agree at every power.
pub fn closure_product_law(
    i1: &MonomialIdeal,
    i2: &MonomialIdeal,
    n: u64,
    budget: &Budget,
) -> Result<bool> {
    let product = i1.product(i2)?;
    let lhs = closure_generators(&product, n, budget)?;
    let rhs = closure_generators(i1, n, budget)?.product(&closure_generators(i2, n, budget)?)?;
    Ok(lhs == rhs)
}
