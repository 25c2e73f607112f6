//! Hilbert bases of pointed full-rank cones by placing triangulation.
//!
//! Every lattice point of a simplicial subcone splits as a nonnegative
//! integer combination of its rays plus a point of the half-open fundamental
//! parallelepiped, so the rays and the parallelepiped points of any
//! triangulation generate the semigroup of all lattice points. The minimal
//! Hilbert basis is recovered from that candidate set by a graded reduction:
//! a candidate is irreducible exactly when no accepted element of smaller
//! degree leaves it inside the cone after subtraction.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};

use super::intlin::{
    dot, hermite_diagonal, make_primitive, nullspace_one, rank_int, rational_inverse, IVec,
};

pub struct FullRankCone {
    pub dim: usize,
    /// Primitive extreme rays, sorted by (degree, lex).
    pub rays: Vec<IVec>,
    /// Inward facet normals: the cone is exactly their nonnegativity region.
    pub facets: Vec<IVec>,
    pub grading: IVec,
}

impl FullRankCone {
    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.facets.iter().all(|h| !dot(h, v).is_negative())
    }

    pub fn degree(&self, v: &[BigInt]) -> BigInt {
        dot(&self.grading, v)
    }
}

/// Build the facet description and a placing triangulation of a pointed
/// full-rank cone from its extreme rays, then collect the Hilbert-basis
/// candidates.
pub fn analyze_full_rank(
    extreme_rays: Vec<IVec>,
    grading: IVec,
    dim: usize,
    budget: &Budget,
) -> Result<(FullRankCone, Vec<IVec>)> {
    let mut rays = extreme_rays;
    for r in rays.iter_mut() {
        make_primitive(r);
    }
    rays.sort_by(|a, b| {
        dot(&grading, a)
            .cmp(&dot(&grading, b))
            .then_with(|| a.cmp(b))
    });
    rays.dedup();

    if dim == 1 {
        // Half-line: the single primitive ray is the whole basis and also the
        // facet normal.
        let ray = rays[0].clone();
        let cone = FullRankCone {
            dim,
            facets: vec![ray.clone()],
            rays: vec![ray],
            grading,
        };
        return Ok((cone, Vec::new()));
    }

    let simplices = placing_triangulation(&rays, dim, budget)?;
    let facets = boundary_facets(&rays, &simplices, dim)?;
    let cone = FullRankCone {
        dim,
        rays,
        facets,
        grading,
    };
    debug_assert!(cone.rays.iter().all(|r| cone.contains(r)));

    let mut candidates: Vec<IVec> = Vec::new();
    for simplex in &simplices {
        let cols: Vec<IVec> = simplex.iter().map(|&i| cone.rays[i].clone()).collect();
        candidates.extend(parallelepiped_points(&cols, budget)?);
    }
    Ok((cone, candidates))
}

/// Incremental placing triangulation. Rays must be primitive, distinct and
/// extreme; they are inserted in the given order, pyramiding while the rank
/// grows and otherwise coning over the visible boundary facets.
fn placing_triangulation(rays: &[IVec], dim: usize, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    let mut simplices: Vec<Vec<usize>> = Vec::new();
    let mut placed: Vec<usize> = Vec::new();
    let mut span_basis: Vec<usize> = Vec::new();
    let mut normal_cache: HashMap<Vec<usize>, IVec> = HashMap::new();

    for (g, ray) in rays.iter().enumerate() {
        budget.check_time("cone triangulation")?;
        let mut spanning: Vec<IVec> = span_basis.iter().map(|&i| rays[i].clone()).collect();
        spanning.push(ray.clone());
        let extends_span = rank_int(&spanning, dim) > span_basis.len();

        if extends_span {
            // The cache holds normals inside the old span; they are stale now.
            normal_cache.clear();
            span_basis.push(g);
            if simplices.is_empty() {
                simplices.push(vec![g]);
            } else {
                for s in simplices.iter_mut() {
                    s.push(g);
                }
            }
        } else {
            let rank = span_basis.len();
            let mut new_simplices: Vec<Vec<usize>> = Vec::new();
            for (facet, owners) in facet_incidence(&simplices) {
                if owners.len() != 1 {
                    continue;
                }
                let (simplex_idx, opposite) = owners[0];
                let normal = facet_normal(&facet, &span_basis, rays, dim, rank, &mut normal_cache)?;
                let side_opp = dot(&normal, &rays[opposite]);
                let side_new = dot(&normal, ray);
                if side_opp.is_zero() {
                    return Err(Error::Internal(
                        "degenerate simplex in placing triangulation".into(),
                    ));
                }
                // Visible: the new ray lies strictly on the other side.
                if (side_opp.is_positive() && side_new.is_negative())
                    || (side_opp.is_negative() && side_new.is_positive())
                {
                    let mut s = facet.clone();
                    s.push(g);
                    s.sort_unstable();
                    new_simplices.push(s);
                    let _ = simplex_idx;
                }
            }
            if new_simplices.is_empty() {
                return Err(Error::Internal(format!(
                    "extreme ray {g} sees no boundary facet"
                )));
            }
            budget.charge(new_simplices.len() as u64, "cone triangulation")?;
            simplices.extend(new_simplices);
        }
        placed.push(g);
    }

    if span_basis.len() != dim {
        return Err(Error::Internal(
            "full-rank cone did not reach full rank during placement".into(),
        ));
    }
    Ok(simplices)
}

/// Facet -> list of (simplex index, opposite ray) over the triangulation.
fn facet_incidence(simplices: &[Vec<usize>]) -> HashMap<Vec<usize>, Vec<(usize, usize)>> {
    let mut map: HashMap<Vec<usize>, Vec<(usize, usize)>> = HashMap::new();
    for (si, s) in simplices.iter().enumerate() {
        for (k, &opp) in s.iter().enumerate() {
            let mut facet = s.clone();
            facet.remove(k);
            map.entry(facet).or_default().push((si, opp));
        }
    }
    map
}

/// Primitive vector orthogonal to the facet rays within the current span
/// (unsigned; callers orient it per use).
fn facet_normal(
    facet: &[usize],
    span_basis: &[usize],
    rays: &[IVec],
    dim: usize,
    rank: usize,
    cache: &mut HashMap<Vec<usize>, IVec>,
) -> Result<IVec> {
    if let Some(h) = cache.get(facet) {
        return Ok(h.clone());
    }
    // h = S^T u with S the span basis rows; solve F S^T u = 0.
    let basis_rows: Vec<IVec> = span_basis.iter().map(|&i| rays[i].clone()).collect();
    let m: Vec<IVec> = facet
        .iter()
        .map(|&f| basis_rows.iter().map(|b| dot(&rays[f], b)).collect())
        .collect();
    let u = nullspace_one(&m, rank)
        .ok_or_else(|| Error::Internal("facet normal solve failed".into()))?;
    let mut h = vec![BigInt::zero(); dim];
    for (coef, b) in u.iter().zip(&basis_rows) {
        if coef.is_zero() {
            continue;
        }
        for (hj, bj) in h.iter_mut().zip(b) {
            *hj += coef * bj;
        }
    }
    make_primitive(&mut h);
    cache.insert(facet.to_vec(), h.clone());
    Ok(h)
}

/// Support hyperplanes of the cone: the deduplicated inward normals of the
/// triangulation's boundary facets.
fn boundary_facets(rays: &[IVec], simplices: &[Vec<usize>], dim: usize) -> Result<Vec<IVec>> {
    let span_basis: Vec<usize> = simplices
        .last()
        .ok_or_else(|| Error::Internal("empty triangulation".into()))?
        .clone();
    let mut cache = HashMap::new();
    let mut out: Vec<IVec> = Vec::new();
    for (facet, owners) in facet_incidence(simplices) {
        if owners.len() != 1 {
            continue;
        }
        let (_, opposite) = owners[0];
        let mut h = facet_normal(&facet, &span_basis, rays, dim, dim, &mut cache)?;
        let side = dot(&h, &rays[opposite]);
        if side.is_negative() {
            for x in h.iter_mut() {
                *x = -x.clone();
            }
        } else if side.is_zero() {
            return Err(Error::Internal("zero-width simplex facet".into()));
        }
        if !out.contains(&h) {
            out.push(h);
        }
    }
    out.sort();
    Ok(out)
}

/// Nonzero lattice points of the half-open parallelepiped spanned by the
/// columns `w_1..w_r`: one per nonzero residue class of Z^r modulo the column
/// lattice.
fn parallelepiped_points(cols: &[IVec], budget: &Budget) -> Result<Vec<IVec>> {
    let r = cols.len();
    let diag = hermite_diagonal(cols)
        .ok_or_else(|| Error::Internal("singular simplex in triangulation".into()))?;
    let det: BigInt = diag.iter().product();
    if det.is_one() {
        return Ok(Vec::new());
    }
    let count = det
        .to_string()
        .parse::<u64>()
        .map_err(|_| Error::BudgetExceeded("parallelepiped determinant overflow".into()))?;
    budget.charge(count, "parallelepiped point enumeration")?;

    let inv = rational_inverse(cols)
        .ok_or_else(|| Error::Internal("singular simplex in triangulation".into()))?;
    let ambient = cols[0].len();
    let mut out = Vec::with_capacity(count as usize - 1);
    let mut x = vec![BigInt::zero(); r];
    loop {
        // Advance the mixed-radix odometer over the residue box.
        let mut j = 0;
        loop {
            if j == r {
                return Ok(out);
            }
            x[j] += 1;
            if x[j] < diag[j] {
                break;
            }
            x[j] = BigInt::zero();
            j += 1;
        }
        // lambda = W^{-1} x; the fractional parts pick out the unique point
        // of the parallelepiped in x's residue class: z = sum {lambda_i} w_i.
        let mut zvec = vec![crate::lp::Rational::zero(); ambient];
        for (i, w) in cols.iter().enumerate() {
            let mut lam = crate::lp::Rational::zero();
            for (j2, xj) in x.iter().enumerate() {
                if !xj.is_zero() {
                    lam += &inv[i][j2] * crate::lp::Rational::from_integer(xj.clone());
                }
            }
            let frac = &lam - lam.floor();
            if frac.is_zero() {
                continue;
            }
            for (zj, wj) in zvec.iter_mut().zip(w) {
                *zj += &frac * crate::lp::Rational::from_integer(wj.clone());
            }
        }
        let z: Option<IVec> = zvec
            .iter()
            .map(|v| {
                if v.is_integer() {
                    Some(v.to_integer())
                } else {
                    None
                }
            })
            .collect();
        let z = z.ok_or_else(|| Error::Internal("parallelepiped point not integral".into()))?;
        if z.iter().any(|v| !v.is_zero()) {
            out.push(z);
        }
    }
}

/// Graded reduction of a candidate superset to the minimal Hilbert basis.
pub fn reduce_to_basis(
    cone: &FullRankCone,
    mut candidates: Vec<IVec>,
    budget: &Budget,
) -> Result<Vec<IVec>> {
    candidates.extend(cone.rays.iter().cloned());
    let mut keyed: Vec<(BigInt, IVec)> = candidates
        .into_iter()
        .map(|c| (cone.degree(&c), c))
        .collect();
    keyed.sort();
    keyed.dedup();

    let mut basis: Vec<(BigInt, IVec)> = Vec::new();
    let mut diff = vec![BigInt::zero(); cone.dim];
    for (deg, cand) in keyed {
        budget.charge(1, "hilbert basis reduction")?;
        let mut reducible = false;
        for (bdeg, b) in &basis {
            if *bdeg >= deg {
                break;
            }
            for ((d, c), bb) in diff.iter_mut().zip(&cand).zip(b) {
                *d = c - bb;
            }
            if cone.contains(&diff) {
                reducible = true;
                break;
            }
        }
        if !reducible {
            basis.push((deg, cand));
        }
    }
    Ok(basis.into_iter().map(|(_, v)| v).collect())
}

/// Does `target` lie in the semigroup generated by `gens`? Depth-first search
/// over index-nondecreasing combinations, pruned by the grading and by cone
/// membership of the residual, memoized on failing states.
pub fn semigroup_member(
    cone: &FullRankCone,
    gens: &[IVec],
    target: &IVec,
    budget: &Budget,
) -> Result<bool> {
    if !cone.contains(target) {
        return Ok(false);
    }
    let mut failed: HashSet<(IVec, usize)> = HashSet::new();

    fn rec(
        cone: &FullRankCone,
        gens: &[IVec],
        residual: &IVec,
        start: usize,
        failed: &mut HashSet<(IVec, usize)>,
        budget: &Budget,
    ) -> Result<bool> {
        if residual.iter().all(|x| x.is_zero()) {
            return Ok(true);
        }
        if start >= gens.len() {
            return Ok(false);
        }
        let key = (residual.clone(), start);
        if failed.contains(&key) {
            return Ok(false);
        }
        budget.charge(1, "semigroup membership search")?;
        for i in start..gens.len() {
            let next: IVec = residual.iter().zip(&gens[i]).map(|(r, g)| r - g).collect();
            if cone.degree(&next).is_negative() || !cone.contains(&next) {
                continue;
            }
            if rec(cone, gens, &next, i, failed, budget)? {
                return Ok(true);
            }
        }
        failed.insert(key);
        Ok(false)
    }

    rec(cone, gens, target, 0, &mut failed, budget)
}
