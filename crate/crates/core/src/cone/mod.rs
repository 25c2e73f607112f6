//! Pointed rational cones, their Hilbert bases, and the two cone-side
//! normality criteria: the Rees cone of any monomial ideal, and the degree-2
//! lifted configuration whose Hilbert-basis property characterizes normality
//! for ideals generated in degree two.

mod hilbert;
mod intlin;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::budget::Budget;
use crate::closure::closure_membership;
use crate::error::{Error, Result};
use crate::ideal::{exp_scale, power_membership, Exponent, IdealKind, MonomialIdeal};
use crate::lp::{lp_min, rat_int, LpSolution, QMatrix, QVector, Rational};
use crate::verdict::{NormalityReport, NormalityRoute, NormalityWitness};

use intlin::{dot, saturation_basis, to_bigint_vec, IVec};

/// A pointed rational cone given by integer generators. Pointedness is
/// verified at construction by finding an integral functional that is
/// strictly positive on every generator; that functional doubles as the
/// grading for all degree-by-degree work.
#[derive(Debug, Clone)]
pub struct IntegerCone {
    dim: usize,
    generators: Vec<Vec<i64>>,
    grading: Vec<i64>,
}

impl IntegerCone {
    pub fn new(dim: usize, generators: Vec<Vec<i64>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Unsupported(
                "cone needs at least one generator".into(),
            ));
        }
        for g in &generators {
            if g.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "cone generator has {} entries in dimension {dim}",
                    g.len()
                )));
            }
            if g.iter().all(|&x| x == 0) {
                return Err(Error::Unsupported("cone generators must be nonzero".into()));
            }
        }
        let grading = find_grading(dim, &generators)?;
        Ok(IntegerCone {
            dim,
            generators,
            grading,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    /// Strictly positive integral grading functional.
    pub fn grading(&self) -> &[i64] {
        &self.grading
    }
}

/// Find an integral `c` with `<c, g> >= 1` for every generator; the all-ones
/// functional is tried first. Infeasibility means the cone contains a line.
fn find_grading(dim: usize, generators: &[Vec<i64>]) -> Result<Vec<i64>> {
    if generators
        .iter()
        .all(|g| g.iter().map(|&x| x as i128).sum::<i128>() > 0)
    {
        return Ok(vec![1; dim]);
    }
    // c is free: write c = u - w with u, w >= 0 and solve
    // min{ sum(u)+sum(w) : <g_i, u> - <g_i, w> >= 1 }.
    let rows: Vec<Vec<i64>> = generators
        .iter()
        .map(|g| {
            let mut row: Vec<i64> = g.clone();
            row.extend(g.iter().map(|&x| -x));
            row
        })
        .collect();
    let a = QMatrix::from_int_rows(&rows)?;
    let b = QVector::ones(generators.len());
    let c = QVector::ones(2 * dim);
    match lp_min(&a, &b, &c)? {
        LpSolution::Optimal { primal, .. } => {
            let diff: Vec<Rational> = (0..dim)
                .map(|i| primal.get(i) - primal.get(dim + i))
                .collect();
            let (ints, _den) = QVector::new(diff).to_integers();
            let grading: Option<Vec<i64>> = ints.iter().map(|x| x.to_i64()).collect();
            let grading =
                grading.ok_or_else(|| Error::Unsupported("grading exceeds i64".into()))?;
            for g in generators {
                let d: i128 = g
                    .iter()
                    .zip(&grading)
                    .map(|(&x, &c)| x as i128 * c as i128)
                    .sum();
                if d <= 0 {
                    return Err(Error::Internal("computed grading not positive".into()));
                }
            }
            Ok(grading)
        }
        LpSolution::Infeasible { .. } => Err(Error::NotPointed(
            "no functional is strictly positive on all generators".into(),
        )),
        LpSolution::Unbounded => Err(Error::Internal("grading LP cannot be unbounded".into())),
    }
}

/// Exact LP feasibility of `point` in the cone of `gens`: used as the
/// membership route that is independent of the facet machinery.
pub fn cone_membership_lp(generators: &[Vec<i64>], point: &[i64]) -> Result<bool> {
    let dim = point.len();
    // Feasibility of { lambda >= 0 : G lambda = point } via two inequalities.
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(2 * dim);
    for i in 0..dim {
        rows.push(generators.iter().map(|g| g[i]).collect());
    }
    for i in 0..dim {
        rows.push(generators.iter().map(|g| -g[i]).collect());
    }
    let a = QMatrix::from_int_rows(&rows)?;
    let mut b: Vec<i64> = point.to_vec();
    b.extend(point.iter().map(|&x| -x));
    let b = QVector::from_ints(&b);
    let c = QVector::zeros(generators.len());
    Ok(crate::lp::lp_max(&a, &b, &c)?.is_optimal())
}

/// Rees cone of a proper ideal: unit vectors plus the generators lifted to
/// height one.
pub fn rees_cone(ideal: &MonomialIdeal) -> Result<IntegerCone> {
    require_proper(ideal)?;
    let s = ideal.num_vars();
    let mut gens: Vec<Vec<i64>> = Vec::with_capacity(s + ideal.num_gens());
    for i in 0..s {
        let mut e = vec![0i64; s + 1];
        e[i] = 1;
        gens.push(e);
    }
    for v in ideal.gens() {
        gens.push(lift(v, 1)?);
    }
    IntegerCone::new(s + 1, gens)
}

/// The lifted degree-2 configuration: the vertical ray, the lifted unit
/// vectors, and the lifted generators.
pub fn b_set(ideal: &MonomialIdeal) -> Result<IntegerCone> {
    require_proper(ideal)?;
    let s = ideal.num_vars();
    let mut gens: Vec<Vec<i64>> = Vec::with_capacity(1 + s + ideal.num_gens());
    let mut z = vec![0i64; s + 1];
    z[s] = 1;
    gens.push(z);
    for i in 0..s {
        let mut e = vec![0i64; s + 1];
        e[i] = 1;
        e[s] = 1;
        gens.push(e);
    }
    for v in ideal.gens() {
        gens.push(lift(v, 1)?);
    }
    IntegerCone::new(s + 1, gens)
}

fn require_proper(ideal: &MonomialIdeal) -> Result<()> {
    match ideal.kind() {
        IdealKind::Zero => Err(Error::NotProper("zero")),
        IdealKind::Unit => Err(Error::NotProper("unit")),
        IdealKind::Proper => Ok(()),
    }
}

fn lift(v: &Exponent, level: i64) -> Result<Vec<i64>> {
    let mut out = Vec::with_capacity(v.len() + 1);
    for &e in v {
        out.push(i64::try_from(e).map_err(|_| Error::Unsupported("exponent exceeds i64".into()))?);
    }
    out.push(level);
    Ok(out)
}

/// Result of a Hilbert-basis computation.
#[derive(Debug, Clone)]
pub struct HilbertBasisReport {
    /// The unique minimal Hilbert basis, sorted by (degree, lex).
    pub minimal_hb: Vec<Vec<i64>>,
    /// Whether the input generators already generate every lattice point.
    pub input_is_hb: bool,
    /// When `input_is_hb` is false: the (degree, lex)-smallest basis element
    /// outside the semigroup of the input generators.
    pub witness: Option<Vec<i64>>,
}

/// Compute the minimal Hilbert basis of a pointed cone.
///
/// The cone is mapped onto a full-rank lattice, triangulated by placing, and
/// the candidate set (extreme rays plus all fundamental-parallelepiped
/// points) is reduced degree by degree; a candidate joins the basis exactly
/// when no accepted element of smaller degree leaves it inside the cone after
/// subtraction.
pub fn hilbert_basis(cone: &IntegerCone, budget: &Budget) -> Result<HilbertBasisReport> {
    let dim = cone.dim;
    let gens_big: Vec<IVec> = cone.generators.iter().map(|g| to_bigint_vec(g)).collect();
    let grading_big: IVec = to_bigint_vec(&cone.grading);

    let (rank, basis) = saturation_basis(&gens_big, dim);
    let (reduced_gens, reduced_grading, back): (Vec<IVec>, IVec, Option<Vec<IVec>>) = if rank == dim
    {
        (gens_big.clone(), grading_big.clone(), None)
    } else {
        // Express everything in coordinates of the saturated span lattice.
        let reduced = gens_big
            .iter()
            .map(|g| express_in_basis(&basis, g, dim, rank))
            .collect::<Result<Vec<IVec>>>()?;
        let grading = (0..rank)
            .map(|j| dot(&basis[j], &grading_big))
            .collect::<IVec>();
        (reduced, grading, Some(basis))
    };

    // Extreme rays: generators not in the cone of the others.
    let gens_i64: Vec<Vec<i64>> = reduced_gens
        .iter()
        .map(|g| {
            g.iter()
                .map(|x| x.to_i64())
                .collect::<Option<Vec<i64>>>()
                .ok_or_else(|| Error::Unsupported("reduced generator exceeds i64".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut extreme: Vec<IVec> = Vec::new();
    {
        // Parallel generators must collapse to one primitive representative
        // before the extremality filter, or they knock each other out.
        let mut uniq: Vec<Vec<i64>> = gens_i64
            .iter()
            .map(|g| {
                let mut b = to_bigint_vec(g);
                intlin::make_primitive(&mut b);
                b.iter()
                    .map(|x| x.to_i64())
                    .collect::<Option<Vec<i64>>>()
                    .ok_or_else(|| Error::Unsupported("generator exceeds i64".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        uniq.sort();
        uniq.dedup();
        for (i, g) in uniq.iter().enumerate() {
            let others: Vec<Vec<i64>> = uniq
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h.clone())
                .collect();
            if others.is_empty() || !cone_membership_lp(&others, g)? {
                extreme.push(to_bigint_vec(g));
            }
        }
    }

    let (frc, candidates) = hilbert::analyze_full_rank(extreme, reduced_grading, rank, budget)?;
    let minimal = hilbert::reduce_to_basis(&frc, candidates, budget)?;

    let lift_back = |v: &IVec| -> Result<Vec<i64>> {
        let full: IVec = match &back {
            None => v.clone(),
            Some(basis) => {
                let mut out = vec![BigInt::zero(); dim];
                for (coef, b) in v.iter().zip(basis.iter()) {
                    for (o, bj) in out.iter_mut().zip(b) {
                        *o += coef * bj;
                    }
                }
                out
            }
        };
        full.iter()
            .map(|x| x.to_i64())
            .collect::<Option<Vec<i64>>>()
            .ok_or_else(|| Error::Unsupported("hilbert basis element exceeds i64".into()))
    };

    // Canonical order (degree, lex) in the original coordinates; the lattice
    // reduction does not preserve lex order.
    let mut pairs: Vec<(Vec<i64>, IVec)> = minimal
        .into_iter()
        .map(|h| Ok((lift_back(&h)?, h)))
        .collect::<Result<Vec<_>>>()?;
    pairs.sort_by(|(a, _), (b, _)| {
        let da: i128 = a
            .iter()
            .zip(&cone.grading)
            .map(|(&x, &c)| x as i128 * c as i128)
            .sum();
        let db: i128 = b
            .iter()
            .zip(&cone.grading)
            .map(|(&x, &c)| x as i128 * c as i128)
            .sum();
        da.cmp(&db).then_with(|| a.cmp(b))
    });

    // Is the input generating set already a Hilbert basis?
    let mut input_set: Vec<IVec> = reduced_gens.clone();
    input_set.sort();
    input_set.dedup();
    let mut input_is_hb = true;
    let mut witness: Option<Vec<i64>> = None;
    for (orig, reduced) in &pairs {
        if input_set.binary_search(reduced).is_ok() {
            continue;
        }
        if !hilbert::semigroup_member(&frc, &input_set, reduced, budget)? {
            input_is_hb = false;
            witness = Some(orig.clone());
            break;
        }
    }

    let minimal_hb = pairs.into_iter().map(|(orig, _)| orig).collect();
    Ok(HilbertBasisReport {
        minimal_hb,
        input_is_hb,
        witness,
    })
}

/// Solve `B x = g` for full-column-rank `B` (columns are the basis vectors),
/// requiring an exact integral solution.
fn express_in_basis(basis: &[IVec], g: &IVec, dim: usize, rank: usize) -> Result<IVec> {
    let rows: Vec<Vec<Rational>> = (0..dim)
        .map(|r| {
            (0..rank)
                .map(|c| Rational::from_integer(basis[c][r].clone()))
                .collect()
        })
        .collect();
    // Pick `rank` independent rows, solve, then verify the rest.
    let full = QMatrix::from_rows(rows.clone())?;
    let mut chosen: Vec<usize> = Vec::new();
    let mut acc: Vec<Vec<Rational>> = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        acc.push(row.clone());
        let m = QMatrix::from_rows(acc.clone())?;
        if m.rank() == acc.len() {
            chosen.push(r);
        } else {
            acc.pop();
        }
        if chosen.len() == rank {
            break;
        }
    }
    if chosen.len() != rank {
        return Err(Error::Internal("basis is not full column rank".into()));
    }
    let sub = QMatrix::from_rows(chosen.iter().map(|&r| rows[r].clone()).collect())?;
    let rhs = QVector::new(
        chosen
            .iter()
            .map(|&r| Rational::from_integer(g[r].clone()))
            .collect(),
    );
    let x = sub
        .solve_square(&rhs)
        .ok_or_else(|| Error::Internal("singular basis subsystem".into()))?;
    // Verify across all coordinates and integrality.
    let gx = full.mul_vec(&x);
    for (r, val) in gx.entries().iter().enumerate() {
        if val != &Rational::from_integer(g[r].clone()) {
            return Err(Error::Internal("generator not in saturated span".into()));
        }
    }
    x.entries()
        .iter()
        .map(|v| {
            if v.is_integer() {
                Some(v.to_integer())
            } else {
                None
            }
        })
        .collect::<Option<IVec>>()
        .ok_or_else(|| Error::Internal("generator not integral in lattice basis".into()))
}

/// Normality of a proper monomial ideal via its Rees cone: the ideal is
/// normal exactly when the cone's generator set is a Hilbert basis. A failure
/// witness `(alpha, b)` is cross-checked on the ideal side: `t^alpha` lies in
/// the closure of `I^b` (LP value at least `b`) but not in `I^b` itself, and
/// a scaling power `p` with `(t^alpha)^p` in `I^{pb}` is recorded.
pub fn normality_via_rees(ideal: &MonomialIdeal, budget: &Budget) -> Result<NormalityReport> {
    require_proper(ideal)?;
    let cone = rees_cone(ideal)?;
    let report = hilbert_basis(&cone, budget)?;
    if report.input_is_hb {
        return Ok(NormalityReport {
            normal: true,
            route: NormalityRoute::ReesCone,
            witness: None,
        });
    }
    let z = report
        .witness
        .ok_or_else(|| Error::Internal("missing hilbert witness".into()))?;
    let s = ideal.num_vars();
    let alpha: Exponent = z[..s]
        .iter()
        .map(|&x| u64::try_from(x).map_err(|_| Error::Internal("negative witness entry".into())))
        .collect::<Result<Exponent>>()?;
    let power =
        u64::try_from(z[s]).map_err(|_| Error::Internal("negative witness level".into()))?;
    if power == 0 {
        return Err(Error::Internal(
            "rees witness at level zero cannot exist".into(),
        ));
    }
    let verdict = closure_membership(ideal, &alpha, power)?;
    if !verdict.member {
        return Err(Error::Internal(
            "rees witness fails the LP closure membership cross-check".into(),
        ));
    }
    if power_membership(ideal, &alpha, power).is_some() {
        return Err(Error::Internal(
            "rees witness lies in the plain power, not a true witness".into(),
        ));
    }
    let lp_value = verdict
        .lp_value
        .finite()
        .cloned()
        .unwrap_or_else(|| rat_int(0));
    // Some multiple p has (t^alpha)^p inside I^{p*b}; record the first one.
    let mut scaling_power = None;
    for p in 1..=24u64 {
        if power_membership(ideal, &exp_scale(&alpha, p), p * power).is_some() {
            scaling_power = Some(p);
            break;
        }
    }
    Ok(NormalityReport {
        normal: false,
        route: NormalityRoute::ReesCone,
        witness: Some(NormalityWitness::Power {
            exponent: alpha,
            power,
            lp_value,
            scaling_power,
        }),
    })
}

/// Normality via the lifted degree-2 configuration; only valid when every
/// generator has total degree exactly two.
pub fn normality_via_bset(ideal: &MonomialIdeal, budget: &Budget) -> Result<NormalityReport> {
    require_proper(ideal)?;
    if !ideal.is_pure_degree(2) {
        return Err(Error::Unsupported(
            "degree-2 criterion needs all generators of total degree 2".into(),
        ));
    }
    let cone = b_set(ideal)?;
    let report = hilbert_basis(&cone, budget)?;
    Ok(NormalityReport {
        normal: report.input_is_hb,
        route: NormalityRoute::DegreeTwoCone,
        witness: report.witness.map(|point| NormalityWitness::Cone { point }),
    })
}

/// Normality of the dual of a graph's edge ideal equals normality of the
/// ideal itself; computed on the primal side.
pub fn dual_normality(ideal: &MonomialIdeal, budget: &Budget) -> Result<bool> {
    require_proper(ideal)?;
    if !ideal.is_squarefree() || !ideal.is_pure_degree(2) {
        return Err(Error::Unsupported(
            "dual-normality shortcut needs the edge ideal of a graph".into(),
        ));
    }
    Ok(normality_via_rees(ideal, budget)?.normal)
}
