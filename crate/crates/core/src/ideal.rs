//! Monomials and monomial ideals with minimal generating sets.
//!
//! A monomial `t^a` is its dense exponent vector; an ideal stores the unique
//! antichain of componentwise-minimal generators, sorted lexicographically so
//! incidence matrices and reports come out in a fixed order.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::lp::QMatrix;

/// Exponent vector of a monomial; entry `j` is the exponent of variable
/// `t_{j+1}`.
pub type Exponent = Vec<u64>;

/// Indices of the variables occurring in `a`.
pub fn support(a: &Exponent) -> Vec<usize> {
    a.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, _)| i)
        .collect()
}

pub fn total_degree(a: &Exponent) -> u64 {
    a.iter().sum()
}

/// Componentwise `a <= b` (i.e. `t^a` divides `t^b`).
pub fn divides(a: &Exponent, b: &Exponent) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn exp_add(a: &Exponent, b: &Exponent) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn exp_scale(a: &Exponent, n: u64) -> Exponent {
    a.iter().map(|x| x * n).collect()
}

/// `a - b` when `b` divides `a`.
pub fn exp_sub(a: &Exponent, b: &Exponent) -> Option<Exponent> {
    if !divides(b, a) {
        return None;
    }
    Some(a.iter().zip(b).map(|(x, y)| x - y).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealKind {
    /// No generators at all.
    Zero,
    /// Generated by the monomial 1; the whole ring.
    Unit,
    Proper,
}

/// A monomial ideal, kept in canonical form: the generator list is the
/// antichain of minimal elements of whatever was passed in, lex-sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    num_vars: usize,
    gens: Vec<Exponent>,
}

impl MonomialIdeal {
    /// Build an ideal from any generating set; the stored generators are the
    /// unique minimal antichain. An empty set gives the zero ideal.
    pub fn new(num_vars: usize, raw_gens: impl IntoIterator<Item = Exponent>) -> Result<Self> {
        let mut gens: Vec<Exponent> = Vec::new();
        for g in raw_gens {
            if g.len() != num_vars {
                return Err(Error::DimensionMismatch(format!(
                    "generator has {} entries, ideal has {} variables",
                    g.len(),
                    num_vars
                )));
            }
            gens.push(g);
        }
        gens.sort();
        gens.dedup();
        let minimal: Vec<Exponent> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .collect();
        Ok(MonomialIdeal {
            num_vars,
            gens: minimal,
        })
    }

    pub fn zero(num_vars: usize) -> Self {
        MonomialIdeal {
            num_vars,
            gens: Vec::new(),
        }
    }

    pub fn unit(num_vars: usize) -> Self {
        MonomialIdeal {
            num_vars,
            gens: vec![vec![0; num_vars]],
        }
    }

    pub fn kind(&self) -> IdealKind {
        if self.gens.is_empty() {
            IdealKind::Zero
        } else if self.gens.len() == 1 && self.gens[0].iter().all(|&e| e == 0) {
            IdealKind::Unit
        } else {
            IdealKind::Proper
        }
    }

    fn require_proper(&self) -> Result<()> {
        match self.kind() {
            IdealKind::Zero => Err(Error::NotProper("zero")),
            IdealKind::Unit => Err(Error::NotProper("unit")),
            IdealKind::Proper => Ok(()),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.iter().all(|&e| e <= 1))
    }

    /// All generators have the given total degree.
    pub fn is_pure_degree(&self, d: u64) -> bool {
        self.gens.iter().all(|g| total_degree(g) == d)
    }

    /// The s x q matrix whose columns are the generators in canonical order.
    pub fn incidence_matrix(&self) -> Result<QMatrix> {
        self.require_proper()?;
        let mut m = QMatrix::zeros(self.num_vars, self.gens.len());
        for (j, g) in self.gens.iter().enumerate() {
            for (i, &e) in g.iter().enumerate() {
                if e > 0 {
                    m.set(i, j, crate::lp::rat_int(e as i64));
                }
            }
        }
        Ok(m)
    }

    /// Product ideal, minimalized. Generators in disjoint sets of variables
    /// multiply without any reduction.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch(format!(
                "product of ideals on {} and {} variables",
                self.num_vars, other.num_vars
            )));
        }
        match (self.kind(), other.kind()) {
            (IdealKind::Zero, _) | (_, IdealKind::Zero) => Ok(MonomialIdeal::zero(self.num_vars)),
            (IdealKind::Unit, _) => Ok(other.clone()),
            (_, IdealKind::Unit) => Ok(self.clone()),
            _ => {
                let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
                for g in &self.gens {
                    for h in &other.gens {
                        prods.push(exp_add(g, h));
                    }
                }
                MonomialIdeal::new(self.num_vars, prods)
            }
        }
    }

    /// `n`-th power by iterated products.
    pub fn pow(&self, n: u64) -> Result<MonomialIdeal> {
        if n == 0 {
            return Ok(MonomialIdeal::unit(self.num_vars));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Intersection via componentwise-max of generator pairs.
    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch(
                "intersection of ideals on different variable counts".into(),
            ));
        }
        match (self.kind(), other.kind()) {
            (IdealKind::Zero, _) | (_, IdealKind::Zero) => Ok(MonomialIdeal::zero(self.num_vars)),
            (IdealKind::Unit, _) => Ok(other.clone()),
            (_, IdealKind::Unit) => Ok(self.clone()),
            _ => {
                let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
                for g in &self.gens {
                    for h in &other.gens {
                        lcms.push(g.iter().zip(h).map(|(x, y)| *x.max(y)).collect());
                    }
                }
                MonomialIdeal::new(self.num_vars, lcms)
            }
        }
    }

    /// Alexander-type dual of a squarefree ideal: one generator
    /// `(t_1...t_s)/t_e` per generator `t_e`.
    pub fn dual_star(&self) -> Result<MonomialIdeal> {
        self.require_proper()?;
        if !self.is_squarefree() {
            return Err(Error::Unsupported(
                "dual is defined for squarefree ideals only".into(),
            ));
        }
        let comps = self
            .gens
            .iter()
            .map(|g| g.iter().map(|&e| 1 - e).collect())
            .collect::<Vec<Exponent>>();
        MonomialIdeal::new(self.num_vars, comps)
    }

    /// Union of generator supports.
    pub fn supported_vars(&self) -> Vec<usize> {
        let mut seen = vec![false; self.num_vars];
        for g in &self.gens {
            for (i, &e) in g.iter().enumerate() {
                if e > 0 {
                    seen[i] = true;
                }
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| i)
            .collect()
    }

    /// Componentwise maximum over the generators.
    pub fn componentwise_max(&self) -> Exponent {
        let mut m = vec![0u64; self.num_vars];
        for g in &self.gens {
            for (i, &e) in g.iter().enumerate() {
                m[i] = m[i].max(e);
            }
        }
        m
    }

    /// Fast test for `t^a` in the ideal itself (power 1).
    pub fn contains_monomial(&self, a: &Exponent) -> bool {
        self.gens.iter().any(|g| divides(g, a))
    }
}

/// Decide `t^a in I^n` exactly, returning a witness multiset of generator
/// indices whose sum divides `a`. Depth-first search over index-nondecreasing
/// multisets, pruned by residual degree and memoized on failing residuals.
pub fn power_membership(ideal: &MonomialIdeal, a: &Exponent, n: u64) -> Option<Vec<usize>> {
    assert!(n >= 1, "power must be at least 1");
    assert_eq!(a.len(), ideal.num_vars(), "exponent arity mismatch");
    match ideal.kind() {
        IdealKind::Zero => return None,
        IdealKind::Unit => return Some(vec![0; n as usize]),
        IdealKind::Proper => {}
    }
    let gens = ideal.gens();
    // Suffix minima of generator degrees for the degree prune.
    let degs: Vec<u64> = gens.iter().map(total_degree).collect();
    let mut suffix_min = vec![u64::MAX; gens.len() + 1];
    for i in (0..gens.len()).rev() {
        suffix_min[i] = suffix_min[i + 1].min(degs[i]);
    }
    let mut failed: HashSet<(Exponent, usize, u64)> = HashSet::new();
    let mut witness = Vec::with_capacity(n as usize);

    fn search(
        gens: &[Exponent],
        suffix_min: &[u64],
        residual: &Exponent,
        start: usize,
        remaining: u64,
        witness: &mut Vec<usize>,
        failed: &mut HashSet<(Exponent, usize, u64)>,
    ) -> bool {
        if remaining == 0 {
            return true;
        }
        if start >= gens.len() {
            return false;
        }
        if suffix_min[start].saturating_mul(remaining) > total_degree(residual) {
            return false;
        }
        let key = (residual.clone(), start, remaining);
        if failed.contains(&key) {
            return false;
        }
        for i in start..gens.len() {
            if let Some(next) = exp_sub(residual, &gens[i]) {
                witness.push(i);
                if search(gens, suffix_min, &next, i, remaining - 1, witness, failed) {
                    return true;
                }
                witness.pop();
            }
        }
        failed.insert(key);
        false
    }

    if search(gens, &suffix_min, a, 0, n, &mut witness, &mut failed) {
        Some(witness)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn triangle_edge_ideal() -> MonomialIdeal {
        MonomialIdeal::new(3, vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]).unwrap()
    }

    fn degree7_gens() -> Vec<Exponent> {
        vec![
            vec![1, 1, 1, 1, 1, 1, 1, 0, 0, 0],
            vec![1, 1, 1, 1, 1, 0, 1, 1, 0, 0],
            vec![1, 1, 1, 1, 1, 0, 0, 1, 1, 0],
            vec![1, 1, 1, 1, 1, 0, 0, 1, 0, 1],
            vec![1, 1, 1, 1, 0, 0, 1, 1, 0, 1],
            vec![0, 1, 1, 0, 1, 0, 1, 1, 1, 1],
            vec![1, 1, 0, 0, 0, 1, 1, 1, 1, 1],
            vec![0, 1, 1, 0, 0, 1, 1, 1, 1, 1],
            vec![0, 0, 1, 1, 0, 1, 1, 1, 1, 1],
            vec![0, 0, 1, 0, 1, 1, 1, 1, 1, 1],
        ]
    }

    #[test]
    fn minimalization_by_divisibility() {
        let i = MonomialIdeal::new(2, vec![vec![2, 0], vec![0, 2], vec![2, 2]]).unwrap();
        assert_eq!(i.gens(), &[vec![0, 2], vec![2, 0]]);
        assert_eq!(i.kind(), IdealKind::Proper);
    }

    #[test]
    fn degree7_generators_already_minimal() {
        let gens = degree7_gens();
        let i = MonomialIdeal::new(10, gens.clone()).unwrap();
        assert_eq!(i.num_gens(), 10);
        let mut sorted = gens;
        sorted.sort();
        assert_eq!(i.gens(), &sorted[..]);
    }

    #[test]
    fn empty_generating_set_is_zero_ideal() {
        let i = MonomialIdeal::new(4, vec![]).unwrap();
        assert_eq!(i.kind(), IdealKind::Zero);
        let u = MonomialIdeal::new(2, vec![vec![0, 0], vec![1, 0]]).unwrap();
        assert_eq!(u.kind(), IdealKind::Unit);
    }

    #[test]
    fn incidence_matrix_columns() {
        let tri = triangle_edge_ideal();
        let m = tri.incidence_matrix().unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 3));
        for j in 0..3 {
            let sum: u64 = (0..3)
                .map(|i| m.get(i, j).to_integer().try_into().unwrap_or(0u64))
                .sum();
            assert_eq!(sum, 2);
        }
        let p = MonomialIdeal::new(1, vec![vec![2]]).unwrap();
        let pm = p.incidence_matrix().unwrap();
        assert_eq!((pm.rows(), pm.cols()), (1, 1));
        assert_eq!(pm.get(0, 0), &crate::lp::rat_int(2));
        assert!(MonomialIdeal::zero(2).incidence_matrix().is_err());
    }

    #[test]
    fn products() {
        let a = MonomialIdeal::new(2, vec![vec![1, 0]]).unwrap();
        let b = MonomialIdeal::new(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(a.product(&b).unwrap().gens(), &[vec![1, 1]]);

        let m = MonomialIdeal::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let sq = m.product(&m).unwrap();
        assert_eq!(sq.gens(), &[vec![0, 2], vec![1, 1], vec![2, 0]]);
    }

    #[test]
    fn disjoint_support_products_do_not_collapse() {
        // Cover ideals of two disjoint triangles: all 9 products survive.
        let c1 = MonomialIdeal::new(
            6,
            vec![
                vec![1, 1, 0, 0, 0, 0],
                vec![1, 0, 1, 0, 0, 0],
                vec![0, 1, 1, 0, 0, 0],
            ],
        )
        .unwrap();
        let c2 = MonomialIdeal::new(
            6,
            vec![
                vec![0, 0, 0, 1, 1, 0],
                vec![0, 0, 0, 1, 0, 1],
                vec![0, 0, 0, 0, 1, 1],
            ],
        )
        .unwrap();
        let prod = c1.product(&c2).unwrap();
        assert_eq!(prod.num_gens(), 9);
    }

    #[test]
    fn dual_star_examples() {
        let tri = triangle_edge_ideal();
        let dual = tri.dual_star().unwrap();
        assert_eq!(dual.gens(), &[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);

        // Double dual of the 5-cycle edge ideal is the identity.
        let c5 = MonomialIdeal::new(
            5,
            vec![
                vec![1, 1, 0, 0, 0],
                vec![0, 1, 1, 0, 0],
                vec![0, 0, 1, 1, 0],
                vec![0, 0, 0, 1, 1],
                vec![1, 0, 0, 0, 1],
            ],
        )
        .unwrap();
        assert_eq!(c5.dual_star().unwrap().dual_star().unwrap(), c5);

        let non_sf = MonomialIdeal::new(2, vec![vec![2, 0]]).unwrap();
        assert!(non_sf.dual_star().is_err());
    }

    #[test]
    fn power_membership_examples() {
        let tri = triangle_edge_ideal();
        assert!(power_membership(&tri, &vec![1, 1, 1], 1).is_some());
        // Total degree 3 cannot reach two edges.
        assert!(power_membership(&tri, &vec![1, 1, 1], 2).is_none());

        let witness = power_membership(&tri, &vec![2, 2, 2], 3).unwrap();
        assert_eq!(witness.len(), 3);
        let mut sum = vec![0u64; 3];
        for &i in &witness {
            sum = exp_add(&sum, &tri.gens()[i]);
        }
        assert!(divides(&sum, &vec![2, 2, 2]));
    }

    #[test]
    fn power_membership_agrees_with_exhaustive_enumeration() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};

        // Oracle: enumerate all n-fold generator multisets directly.
        fn brute(ideal: &MonomialIdeal, a: &Exponent, n: u64) -> bool {
            fn rec(gens: &[Exponent], a: &Exponent, acc: &Exponent, start: usize, k: u64) -> bool {
                if k == 0 {
                    return divides(acc, a);
                }
                (start..gens.len()).any(|i| {
                    let next = exp_add(acc, &gens[i]);
                    divides(&next, a) && rec(gens, a, &next, i, k - 1)
                })
            }
            rec(ideal.gens(), a, &vec![0; ideal.num_vars()], 0, n)
        }

        let mut rng = StdRng::seed_from_u64(0x5eed2);
        for _ in 0..60 {
            let s = rng.random_range(1..=3);
            let q = rng.random_range(1..=4);
            let gens: Vec<Exponent> = (0..q)
                .map(|_| (0..s).map(|_| rng.random_range(0..=3)).collect())
                .filter(|g: &Exponent| g.iter().any(|&e| e > 0))
                .collect();
            let Ok(ideal) = MonomialIdeal::new(s, gens) else {
                continue;
            };
            if ideal.kind() != IdealKind::Proper {
                continue;
            }
            for _ in 0..6 {
                let a: Exponent = (0..s).map(|_| rng.random_range(0..=6)).collect();
                let n = rng.random_range(1..=3);
                assert_eq!(
                    power_membership(&ideal, &a, n).is_some(),
                    brute(&ideal, &a, n),
                    "ideal {ideal:?}, a {a:?}, n {n}"
                );
            }
        }
    }

    #[test]
    fn support_examples() {
        assert_eq!(support(&vec![2, 0, 1]), vec![0, 2]);
        assert_eq!(support(&vec![0, 1, 0, 1, 1, 1]), vec![1, 3, 4, 5]);
        assert_eq!(support(&vec![0, 0]), Vec::<usize>::new());
    }

    #[test]
    fn antichain_invariant_random() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0x5eed3);
        for _ in 0..200 {
            let s = rng.random_range(1..=4);
            let q = rng.random_range(0..=6);
            let gens: Vec<Exponent> = (0..q)
                .map(|_| (0..s).map(|_| rng.random_range(0..=3)).collect())
                .collect();
            let ideal = MonomialIdeal::new(s, gens).unwrap();
            for g in ideal.gens() {
                for h in ideal.gens() {
                    if g != h {
                        assert!(!divides(g, h), "antichain violated: {g:?} divides {h:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn product_commutative_associative() {
        let a = MonomialIdeal::new(3, vec![vec![1, 1, 0], vec![0, 2, 0]]).unwrap();
        let b = MonomialIdeal::new(3, vec![vec![0, 1, 1]]).unwrap();
        let c = MonomialIdeal::new(3, vec![vec![1, 0, 1], vec![0, 0, 2]]).unwrap();
        assert_eq!(a.product(&b).unwrap(), b.product(&a).unwrap());
        assert_eq!(
            a.product(&b).unwrap().product(&c).unwrap(),
            a.product(&b.product(&c).unwrap()).unwrap()
        );
    }
}
