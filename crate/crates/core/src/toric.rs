//! Euler-Chow series of smooth projective toric varieties from fan data.
//!
//! The invariant p-dimensional irreducible subvarieties of a toric variety
//! are the orbit closures `V(sigma)` of the cones of dimension `n - p`
//! ([`orbit_cones`]). Their classes present the Chow group as generators
//! modulo one relation per (n-p-1)-cone and lattice functional vanishing on
//! it; Smith normal form reduces the presentation to a free quotient
//! ([`chow_lattice`]). The p-th Euler-Chow series is then the truncated
//! expansion of the product of geometric series `1/(1 - x^class)` over the
//! invariant subvarieties ([`euler_chow_series`]); its coefficient at a
//! class alpha is the Euler characteristic of the Chow variety of cycles in
//! that class.
//!
//! Supported inputs are smooth fans whose codimension-1 cones are paired
//! between exactly two maximal cones. That condition is necessary for
//! completeness but not sufficient, and projectivity is not verified; both
//! remain the caller's assertion.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::gcd_all;
use crate::matrix::{integer_kernel, row_hermite_form, smith_normal_form, IntMat};
use crate::series::{SeriesError, TruncSeries, Truncation};

/// Rational polyhedral fan: primitive integer ray generators plus maximal
/// cones given as ray-index sets. Construction validates all invariants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fan {
    dim: usize,
    rays: Vec<Vec<i64>>,
    max_cones: Vec<Vec<usize>>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FanError {
    /// Fan dimension must be positive.
    ZeroDim,
    /// Ray has the wrong number of coordinates.
    RayDimension {
        ray: usize,
    },
    /// Ray is the zero vector or not primitive.
    NonPrimitiveRay {
        ray: usize,
    },
    DuplicateRay {
        ray: usize,
    },
    /// Cone lists an index outside the ray table, or repeats one.
    BadConeIndex {
        cone: usize,
    },
    /// Cone generators are linearly dependent.
    DegenerateCone {
        cone: usize,
    },
    /// Cone generators are not part of a lattice basis.
    NonSmoothCone {
        cone: usize,
    },
    /// A codimension-1 face is not shared by exactly two maximal cones.
    DanglingFacet {
        face: Vec<usize>,
        count: usize,
    },
}

impl fmt::Display for FanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FanError::ZeroDim => write!(f, "fan dimension must be positive"),
            FanError::RayDimension { ray } => {
                write!(f, "ray {} has the wrong number of coordinates", ray)
            }
            FanError::NonPrimitiveRay { ray } => {
                write!(f, "ray {} is zero or not primitive", ray)
            }
            FanError::DuplicateRay { ray } => write!(f, "ray {} duplicates an earlier ray", ray),
            FanError::BadConeIndex { cone } => {
                write!(f, "cone {} has an invalid or repeated ray index", cone)
            }
            FanError::DegenerateCone { cone } => {
                write!(f, "cone {} has linearly dependent generators", cone)
            }
            FanError::NonSmoothCone { cone } => write!(f, "cone {} is not smooth", cone),
            FanError::DanglingFacet { face, count } => write!(
                f,
                "codimension-1 face {:?} lies in {} maximal cones instead of 2",
                face, count
            ),
        }
    }
}

impl core::error::Error for FanError {}

impl Fan {
    pub fn new(
        dim: usize,
        rays: Vec<Vec<i64>>,
        max_cones: Vec<Vec<usize>>,
    ) -> Result<Fan, FanError> {
        if dim == 0 {
            return Err(FanError::ZeroDim);
        }
        for (i, ray) in rays.iter().enumerate() {
            if ray.len() != dim {
                return Err(FanError::RayDimension { ray: i });
            }
            if gcd_all(ray) != 1 {
                return Err(FanError::NonPrimitiveRay { ray: i });
            }
            if rays[..i].contains(ray) {
                return Err(FanError::DuplicateRay { ray: i });
            }
        }
        let mut cones: Vec<Vec<usize>> = Vec::with_capacity(max_cones.len());
        for (ci, cone) in max_cones.iter().enumerate() {
            let mut sorted = cone.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != cone.len()
                || cone.is_empty()
                || sorted.iter().any(|&r| r >= rays.len())
            {
                return Err(FanError::BadConeIndex { cone: ci });
            }
            // smooth means the generators extend to a lattice basis: all
            // invariant factors of the ray matrix are 1
            let m = IntMat::from_rows(sorted.iter().map(|&r| rays[r].iter().copied()));
            let snf = smith_normal_form(&m);
            let factors = snf.invariant_factors();
            if factors.len() < sorted.len() {
                return Err(FanError::DegenerateCone { cone: ci });
            }
            if factors.iter().any(|d| !d.is_one()) {
                return Err(FanError::NonSmoothCone { cone: ci });
            }
            cones.push(sorted);
        }
        let fan = Fan {
            dim,
            rays,
            max_cones: cones,
        };
        // facet pairing: each (dim-1)-face in exactly two maximal cones
        for face in fan.faces_of_dim(dim - 1) {
            let count = fan
                .max_cones
                .iter()
                .filter(|c| face.iter().all(|r| c.contains(r)))
                .count();
            if count != 2 {
                return Err(FanError::DanglingFacet { face, count });
            }
        }
        Ok(fan)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    /// All cones of the given dimension, as sorted ray-index sets in
    /// lexicographic order. Cones are faces of maximal cones; for
    /// simplicial cones faces are exactly the subsets of the rays.
    fn faces_of_dim(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
        for cone in &self.max_cones {
            if cone.len() < k {
                continue;
            }
            for subset in k_subsets(cone, k) {
                out.insert(subset);
            }
        }
        out.into_iter().collect()
    }
}

fn k_subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return alloc::vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut rest in k_subsets(&items[i + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ToricError {
    /// Requested cycle dimension is out of range for the fan.
    Range {
        p: usize,
        dim: usize,
    },
    /// The Chow group presentation has torsion; the product formula needs a
    /// free carrier.
    Torsion {
        factor: BigInt,
    },
    /// Relations collapse the group to rank 0 despite generators existing.
    RankZero,
    /// The degree functional is not strictly positive on some class.
    NonPositiveDegree {
        class_index: usize,
        degree: i64,
    },
    /// Degree functional has the wrong arity.
    FunctionalArity {
        expected: usize,
        got: usize,
    },
    NegativeBound,
    /// A class coordinate does not fit in machine range.
    CoordOverflow,
    Series(SeriesError),
}

impl fmt::Display for ToricError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ToricError::Range { p, dim } => {
                write!(f, "cycle dimension p = {} out of range for a {}-dimensional fan", p, dim)
            }
            ToricError::Torsion { factor } => write!(
                f,
                "Chow group has torsion (invariant factor {}); input is outside the supported class",
                factor
            ),
            ToricError::RankZero => {
                write!(f, "Chow group presentation has rank 0 with generators present")
            }
            ToricError::NonPositiveDegree { class_index, degree } => write!(
                f,
                "degree functional is {} on class {}; supply an explicit strictly positive functional",
                degree, class_index
            ),
            ToricError::FunctionalArity { expected, got } => write!(
                f,
                "degree functional has {} coordinates, expected {}",
                got, expected
            ),
            ToricError::NegativeBound => write!(f, "truncation bound must be nonnegative"),
            ToricError::CoordOverflow => write!(f, "class coordinate out of machine range"),
            ToricError::Series(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for ToricError {}

impl From<SeriesError> for ToricError {
    fn from(e: SeriesError) -> Self {
        ToricError::Series(e)
    }
}

/// All cones of dimension `n - p` (the orbit closures of dimension p), as
/// sorted ray-index sets, deduplicated, in lexicographic order.
pub fn orbit_cones(fan: &Fan, p: usize) -> Result<Vec<Vec<usize>>, ToricError> {
    if p > fan.dim() {
        return Err(ToricError::Range { p, dim: fan.dim() });
    }
    Ok(fan.faces_of_dim(fan.dim() - p))
}

/// Presentation of the Chow group of p-cycles as a free abelian quotient,
/// with the coordinates of each orbit-closure generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChowLattice {
    p: usize,
    rank: usize,
    /// Generator cones, parallel to `class_coords`.
    cones: Vec<Vec<usize>>,
    class_coords: Vec<Vec<BigInt>>,
    /// Relation rows over the generators, kept for auditing.
    relations: Vec<Vec<BigInt>>,
}

impl ChowLattice {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    /// Image of each generator in the free quotient, in a canonical basis
    /// (Hermite-reduced, so the same fan always yields the same
    /// coordinates).
    pub fn class_coords(&self) -> &[Vec<BigInt>] {
        &self.class_coords
    }

    pub fn relations(&self) -> &[Vec<BigInt>] {
        &self.relations
    }
}

/// Compute the Chow group presentation of p-cycles: generators are the
/// cones of dimension `n - p`; for each cone tau of dimension `n - p - 1`
/// and each basis functional u vanishing on tau there is one relation
/// `sum_{sigma > tau} <u, nu_{sigma,tau}> [V(sigma)] = 0`, with
/// `nu_{sigma,tau}` the ray of sigma not in tau.
pub fn chow_lattice(fan: &Fan, p: usize) -> Result<ChowLattice, ToricError> {
    let n = fan.dim();
    if p >= n {
        return Err(ToricError::Range { p, dim: n });
    }
    let gens = orbit_cones(fan, p)?;
    let taus = orbit_cones(fan, p + 1)?;

    let mut relations: Vec<Vec<BigInt>> = Vec::new();
    for tau in &taus {
        // lattice of functionals vanishing on tau; the matrix must keep n
        // columns even when tau is the zero cone
        let mut tau_rays = IntMat::zeros(tau.len(), n);
        for (i, &r) in tau.iter().enumerate() {
            for (j, &x) in fan.rays()[r].iter().enumerate() {
                tau_rays[(i, j)] = BigInt::from(x);
            }
        }
        let kernel = integer_kernel(&tau_rays);
        // cones sigma = tau + one ray, with the extra ray recorded
        let mut sigmas: Vec<(usize, usize)> = Vec::new();
        for (gi, sigma) in gens.iter().enumerate() {
            if sigma.len() == tau.len() + 1 && tau.iter().all(|r| sigma.contains(r)) {
                let extra = *sigma.iter().find(|r| !tau.contains(r)).expect("extra ray");
                sigmas.push((gi, extra));
            }
        }
        for col in 0..kernel.ncols() {
            let mut row = alloc::vec![BigInt::zero(); gens.len()];
            for &(gi, extra) in &sigmas {
                let pairing: BigInt = fan.rays()[extra]
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| &kernel[(i, col)] * x)
                    .sum();
                row[gi] = pairing;
            }
            if row.iter().any(|x| !x.is_zero()) {
                relations.push(row);
            }
        }
    }

    let (rank, class_coords) = free_quotient(&relations, gens.len())?;
    Ok(ChowLattice {
        p,
        rank,
        cones: gens,
        class_coords,
        relations,
    })
}

/// Quotient of the free abelian group on `n_gens` generators by the given
/// relation rows. Errors on torsion; returns the rank and the canonical
/// coordinates of each generator in the free quotient.
fn free_quotient(
    relations: &[Vec<BigInt>],
    n_gens: usize,
) -> Result<(usize, Vec<Vec<BigInt>>), ToricError> {
    // columns of b are the relations, so the group is coker(b)
    let mut b = IntMat::zeros(n_gens, relations.len());
    for (j, rel) in relations.iter().enumerate() {
        for i in 0..n_gens {
            b[(i, j)] = rel[i].clone();
        }
    }
    let snf = smith_normal_form(&b);
    for factor in snf.invariant_factors() {
        if !factor.is_one() {
            return Err(ToricError::Torsion { factor });
        }
    }
    let r = snf.rank();
    let rank = n_gens - r;
    if rank == 0 && n_gens > 0 {
        return Err(ToricError::RankZero);
    }
    // generator i maps to rows r.. of column i of u; Hermite-reduce those
    // coordinate slices so the quotient basis is canonical
    let mut q = IntMat::zeros(rank, n_gens);
    for j in 0..rank {
        for i in 0..n_gens {
            q[(j, i)] = snf.u[(r + j, i)].clone();
        }
    }
    let (_, h) = row_hermite_form(&q);
    let class_coords = (0..n_gens)
        .map(|i| (0..rank).map(|j| h[(j, i)].clone()).collect())
        .collect();
    Ok((rank, class_coords))
}

/// Euler-Chow series data: sparse coefficients over the class lattice,
/// sorted by degree then lexicographic class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EulerChowSeries {
    p: usize,
    rank: usize,
    degree_functional: Vec<i64>,
    bound: i64,
    terms: Vec<(Vec<i64>, BigInt)>,
}

impl EulerChowSeries {
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree_functional(&self) -> &[i64] {
        self.degree_functional.as_slice()
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// `(class, chi)` pairs sorted by functional degree, then
    /// lexicographically by class.
    pub fn terms(&self) -> &[(Vec<i64>, BigInt)] {
        &self.terms
    }

    /// Coefficient at a class; zero if absent.
    pub fn coefficient(&self, class: &[i64]) -> BigInt {
        self.terms
            .iter()
            .find(|(c, _)| c == class)
            .map(|(_, chi)| chi.clone())
            .unwrap_or_else(BigInt::zero)
    }
}

/// Expand the p-th Euler-Chow series `prod_i 1/(1 - x^class_i)` over the
/// invariant p-dimensional subvarieties, keeping terms of functional degree
/// at most `bound`.
///
/// The optional degree functional must be strictly positive on every
/// invariant-subvariety class; the default is the sum of coordinates.
pub fn euler_chow_series(
    fan: &Fan,
    p: usize,
    bound: i64,
    degree_functional: Option<&[i64]>,
) -> Result<EulerChowSeries, ToricError> {
    if bound < 0 {
        return Err(ToricError::NegativeBound);
    }
    let lattice = chow_lattice(fan, p)?;
    let rank = lattice.rank();
    let functional: Vec<i64> = match degree_functional {
        Some(w) => {
            if w.len() != rank {
                return Err(ToricError::FunctionalArity {
                    expected: rank,
                    got: w.len(),
                });
            }
            w.to_vec()
        }
        None => alloc::vec![1; rank],
    };
    let mut classes: Vec<Vec<i64>> = Vec::with_capacity(lattice.class_coords().len());
    for coords in lattice.class_coords() {
        let class: Vec<i64> = coords
            .iter()
            .map(|c| i64::try_from(c).map_err(|_| ToricError::CoordOverflow))
            .collect::<Result<_, _>>()?;
        classes.push(class);
    }
    for (i, class) in classes.iter().enumerate() {
        let deg: i64 = functional.iter().zip(class).map(|(&w, &e)| w * e).sum();
        if deg <= 0 {
            return Err(ToricError::NonPositiveDegree {
                class_index: i,
                degree: deg,
            });
        }
    }
    let trunc = Truncation::Weighted {
        weights: functional.clone(),
        bound,
    };
    let factors: Vec<(Vec<i64>, i64)> = classes.into_iter().map(|c| (c, 1)).collect();
    let series = TruncSeries::product_expand(&factors, trunc.clone())?;
    let mut terms: Vec<(Vec<i64>, BigInt)> = series
        .terms()
        .map(|(e, c)| (e.clone(), c.clone()))
        .collect();
    terms.sort_by(|(a, _), (b, _)| trunc.degree(a).cmp(&trunc.degree(b)).then(a.cmp(b)));
    Ok(EulerChowSeries {
        p,
        rank,
        degree_functional: functional,
        bound,
        terms,
    })
}

/// The standard complete fan of projective n-space: rays `e_1, ..., e_n`
/// and `-(e_1 + ... + e_n)`, with all n-subsets as maximal cones.
pub fn projective_fan(n: usize) -> Fan {
    let mut rays: Vec<Vec<i64>> = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut e = alloc::vec![0i64; n];
        e[i] = 1;
        rays.push(e);
    }
    rays.push(alloc::vec![-1i64; n]);
    let all: Vec<usize> = (0..=n).collect();
    let max_cones = k_subsets(&all, n);
    Fan::new(n, rays, max_cones).expect("projective fan is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::chow_euler;
    use std::collections::BTreeMap;

    fn p2_fan() -> Fan {
        Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
            vec![vec![0, 1], vec![0, 2], vec![1, 2]],
        )
        .unwrap()
    }

    fn p1xp1_fan() -> Fan {
        Fan::new(
            2,
            vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]],
            vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]],
        )
        .unwrap()
    }

    #[test]
    fn fan_validation() {
        assert!(Fan::new(2, vec![vec![2, 0]], vec![vec![0]]).is_err());
        assert!(matches!(
            Fan::new(
                2,
                vec![vec![2, 0], vec![0, 1], vec![-1, -1]],
                vec![vec![0, 1], vec![0, 2], vec![1, 2]],
            ),
            Err(FanError::NonPrimitiveRay { ray: 0 })
        ));
        assert!(matches!(
            Fan::new(2, vec![vec![1, 0], vec![1, 0]], vec![vec![0, 1]],),
            Err(FanError::DuplicateRay { ray: 1 })
        ));
        // cone spanned by e1 and e1 + 2 e2 has index 2
        assert!(matches!(
            Fan::new(
                2,
                vec![vec![1, 0], vec![1, 2], vec![-1, -1]],
                vec![vec![0, 1], vec![0, 2], vec![1, 2]],
            ),
            Err(FanError::NonSmoothCone { cone: 0 })
        ));
        // dropping a maximal cone of the plane fan leaves dangling facets
        assert!(matches!(
            Fan::new(
                2,
                vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
                vec![vec![0, 1], vec![0, 2]],
            ),
            Err(FanError::DanglingFacet { .. })
        ));
        assert!(matches!(
            Fan::new(2, vec![vec![1, 0, 0]], vec![vec![0]]),
            Err(FanError::RayDimension { ray: 0 })
        ));
        assert!(matches!(
            Fan::new(2, vec![vec![1, 0]], vec![vec![0, 0]]),
            Err(FanError::BadConeIndex { cone: 0 })
        ));
    }

    #[test]
    fn orbit_cones_examples() {
        let p2 = p2_fan();
        assert_eq!(orbit_cones(&p2, 0).unwrap().len(), 3);
        assert_eq!(orbit_cones(&p2, 1).unwrap().len(), 3);
        assert_eq!(orbit_cones(&p2, 2).unwrap(), vec![Vec::<usize>::new()]);
        assert_eq!(orbit_cones(&p1xp1_fan(), 1).unwrap().len(), 4);
        assert!(orbit_cones(&p2, 3).is_err());
    }

    #[test]
    fn orbit_cones_match_bruteforce() {
        // every subset of rays spanning a face of some maximal cone
        for fan in [p2_fan(), p1xp1_fan(), projective_fan(3)] {
            let nrays = fan.rays().len();
            let mut by_size: BTreeMap<usize, BTreeSet<Vec<usize>>> = BTreeMap::new();
            for mask in 0u32..1 << nrays {
                let subset: Vec<usize> = (0..nrays).filter(|i| mask >> i & 1 == 1).collect();
                if fan
                    .max_cones()
                    .iter()
                    .any(|c| subset.iter().all(|r| c.contains(r)))
                {
                    by_size.entry(subset.len()).or_default().insert(subset);
                }
            }
            for p in 0..=fan.dim() {
                let expected = by_size.get(&(fan.dim() - p)).map_or(0, |s| s.len());
                assert_eq!(orbit_cones(&fan, p).unwrap().len(), expected, "p = {}", p);
            }
        }
    }

    fn assert_relations_annihilate(lat: &ChowLattice) {
        for rel in lat.relations() {
            for j in 0..lat.rank() {
                let dot: BigInt = rel
                    .iter()
                    .zip(lat.class_coords())
                    .map(|(r, c)| r * &c[j])
                    .sum();
                assert!(dot.is_zero(), "relation {:?} does not annihilate", rel);
            }
        }
    }

    #[test]
    fn chow_lattice_p2() {
        for p in 0..=1usize {
            let lat = chow_lattice(&p2_fan(), p).unwrap();
            assert_eq!(lat.rank(), 1, "p = {}", p);
            for c in lat.class_coords() {
                assert_eq!(c, &vec![BigInt::one()]);
            }
            assert_relations_annihilate(&lat);
        }
    }

    #[test]
    fn chow_lattice_p1xp1() {
        let lat = chow_lattice(&p1xp1_fan(), 1).unwrap();
        assert_eq!(lat.rank(), 2);
        let one = BigInt::one();
        let zero = BigInt::zero();
        assert_eq!(
            lat.class_coords(),
            &[
                vec![one.clone(), zero.clone()],
                vec![one.clone(), zero.clone()],
                vec![zero.clone(), one.clone()],
                vec![zero, one],
            ]
        );
        assert_relations_annihilate(&lat);

        let points = chow_lattice(&p1xp1_fan(), 0).unwrap();
        assert_eq!(points.rank(), 1);
        assert_relations_annihilate(&points);
    }

    #[test]
    fn chow_lattice_pn_rank_one() {
        for n in 1..=4usize {
            let fan = projective_fan(n);
            for p in 0..n {
                let lat = chow_lattice(&fan, p).unwrap();
                assert_eq!(lat.rank(), 1, "P^{}, p = {}", n, p);
                assert_eq!(lat.cones().len(), lat.class_coords().len());
                for c in lat.class_coords() {
                    assert_eq!(c, &vec![BigInt::one()], "P^{}, p = {}", n, p);
                }
                assert_relations_annihilate(&lat);
            }
        }
    }

    #[test]
    fn free_quotient_detects_torsion_and_rank_zero() {
        // Z / 2Z
        let rel = vec![vec![BigInt::from(2)]];
        assert!(matches!(
            free_quotient(&rel, 1),
            Err(ToricError::Torsion { .. })
        ));
        // Z / Z: rank 0 with a generator
        let rel = vec![vec![BigInt::one()]];
        assert!(matches!(free_quotient(&rel, 1), Err(ToricError::RankZero)));
    }

    #[test]
    fn euler_chow_pn_matches_closed_form() {
        for n in 1..=4usize {
            let fan = projective_fan(n);
            for p in 0..n {
                let series = euler_chow_series(&fan, p, 6, None).unwrap();
                assert_eq!(series.rank(), 1);
                assert_eq!(series.coefficient(&[0]), BigInt::one());
                for d in 0..=6i64 {
                    assert_eq!(
                        series.coefficient(&[d]),
                        chow_euler(p as i64, d, n as i64).unwrap(),
                        "P^{}, p = {}, d = {}",
                        n,
                        p,
                        d
                    );
                }
            }
        }
    }

    #[test]
    fn euler_chow_p1xp1() {
        let fan = p1xp1_fan();
        let series = euler_chow_series(&fan, 1, 4, None).unwrap();
        assert_eq!(series.rank(), 2);
        for d1 in 0..=4i64 {
            for d2 in 0..=4i64 {
                let expected = if d1 + d2 <= 4 {
                    BigInt::from((d1 + 1) * (d2 + 1))
                } else {
                    BigInt::zero()
                };
                assert_eq!(series.coefficient(&[d1, d2]), expected);
            }
        }
        // 0-cycles: 4 fixed points, all of class 1
        let points = euler_chow_series(&fan, 0, 5, None).unwrap();
        for d in 0..=5i64 {
            assert_eq!(
                points.coefficient(&[d]),
                crate::arith::binomial_i64(d + 3, 3)
            );
        }
    }

    #[test]
    fn euler_chow_sorted_and_positive() {
        let fan = p1xp1_fan();
        let series = euler_chow_series(&fan, 1, 3, None).unwrap();
        assert_eq!(series.terms()[0], (vec![0, 0], BigInt::one()));
        let mut prev_key: Option<(i128, Vec<i64>)> = None;
        for (class, chi) in series.terms() {
            assert!(chi > &BigInt::zero());
            let deg: i128 = class.iter().map(|&e| e as i128).sum();
            let key = (deg, class.clone());
            if let Some(p) = &prev_key {
                assert!(p < &key, "terms out of order");
            }
            prev_key = Some(key);
        }
    }

    #[test]
    fn euler_chow_functional_errors() {
        let fan = p1xp1_fan();
        assert!(matches!(
            euler_chow_series(&fan, 1, 3, Some(&[1, -1])),
            Err(ToricError::NonPositiveDegree { .. })
        ));
        assert!(matches!(
            euler_chow_series(&fan, 1, 3, Some(&[1])),
            Err(ToricError::FunctionalArity { .. })
        ));
        assert!(matches!(
            euler_chow_series(&fan, 1, -1, None),
            Err(ToricError::NegativeBound)
        ));
        // an asymmetric functional reweights the truncation region
        let series = euler_chow_series(&fan, 1, 4, Some(&[1, 2])).unwrap();
        assert_eq!(series.coefficient(&[2, 1]), BigInt::from(6));
        assert_eq!(series.coefficient(&[0, 2]), BigInt::from(3));
        assert_eq!(series.coefficient(&[1, 2]), BigInt::zero());
    }

    fn hirzebruch_fan() -> Fan {
        // first Hirzebruch surface: rays are the two fibers (indices 0, 2),
        // the -1 section (1), and the +1 section (3)
        Fan::new(
            2,
            vec![vec![1, 0], vec![0, 1], vec![-1, 1], vec![0, -1]],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        )
        .unwrap()
    }

    #[test]
    fn hirzebruch_surface_lattice() {
        let fan = hirzebruch_fan();
        let lat = chow_lattice(&fan, 1).unwrap();
        assert_eq!(lat.rank(), 2);
        assert_relations_annihilate(&lat);
        // canonical coordinates: fibers f = (1,0), exceptional section
        // E = (0,1), and the +1 section E + f
        let one = BigInt::one();
        let zero = BigInt::zero();
        assert_eq!(
            lat.class_coords(),
            &[
                vec![one.clone(), zero.clone()],
                vec![zero.clone(), one.clone()],
                vec![one.clone(), zero],
                vec![one.clone(), one],
            ]
        );
    }

    #[test]
    fn euler_chow_hirzebruch_matches_lattice_point_counts() {
        // divisor cycles of class m*f + n*E form the linear system of
        // O(m*f + n*E), so the coefficient is the number of lattice points
        // of the divisor polytope {x >= -m, y >= -n, y >= x, y <= 0}:
        // sum_{t=0..min(m,n)} (m + 1 - t)
        let oracle = |m: i64, n: i64| -> BigInt {
            let mut total = 0;
            for t in 0..=n.min(m) {
                total += m + 1 - t;
            }
            BigInt::from(total)
        };
        let series = euler_chow_series(&hirzebruch_fan(), 1, 8, None).unwrap();
        for m in 0..=6i64 {
            for n in 0..=(8 - m) {
                assert_eq!(
                    series.coefficient(&[m, n]),
                    oracle(m, n),
                    "class {}f + {}E",
                    m,
                    n
                );
            }
        }
        // spot values: |f| is a pencil, E is rigid, |f + E| has chi = 3
        assert_eq!(series.coefficient(&[1, 0]), BigInt::from(2));
        assert_eq!(series.coefficient(&[0, 1]), BigInt::one());
        assert_eq!(series.coefficient(&[1, 1]), BigInt::from(3));
        assert_eq!(series.coefficient(&[2, 1]), BigInt::from(5));
    }

    #[test]
    fn euler_chow_p1_cubed_divisors() {
        // P^1 x P^1 x P^1: the six invariant divisors pair up into three
        // classes, and chi at (a, b, c) is h^0(O(a, b, c))
        let fan = Fan::new(
            3,
            vec![
                vec![1, 0, 0],
                vec![-1, 0, 0],
                vec![0, 1, 0],
                vec![0, -1, 0],
                vec![0, 0, 1],
                vec![0, 0, -1],
            ],
            vec![
                vec![0, 2, 4],
                vec![0, 2, 5],
                vec![0, 3, 4],
                vec![0, 3, 5],
                vec![1, 2, 4],
                vec![1, 2, 5],
                vec![1, 3, 4],
                vec![1, 3, 5],
            ],
        )
        .unwrap();
        let lat = chow_lattice(&fan, 2).unwrap();
        assert_eq!(lat.rank(), 3);
        let series = euler_chow_series(&fan, 2, 6, None).unwrap();
        for a in 0..=4i64 {
            for b in 0..=(4 - a) {
                for c in 0..=(4 - a - b) {
                    assert_eq!(
                        series.coefficient(&[a, b, c]),
                        BigInt::from((a + 1) * (b + 1) * (c + 1)),
                        "(a, b, c) = ({}, {}, {})",
                        a,
                        b,
                        c
                    );
                }
            }
        }
    }
}
