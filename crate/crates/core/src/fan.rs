//! Complete simplicial fans in an integer lattice and their combinatorics.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// Primitive generator of a ray of the fan.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RayVector(Vec<i64>);

impl RayVector {
    /// Rejects the zero vector and non-primitive vectors; neither is rescaled.
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.iter().all(|&c| c == 0) {
            return Err(Error::MalformedInput("zero ray".into()));
        }
        let g = coords.iter().fold(0i64, |g, &c| g.gcd(&c));
        if g != 1 {
            return Err(Error::MalformedInput(format!(
                "ray {coords:?} is not primitive (gcd {g})"
            )));
        }
        Ok(Self(coords))
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

/// A cone of the fan, stored as the sorted set of its ray indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cone(Vec<usize>);

impl Cone {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        Self(indices)
    }

    pub fn rays(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, ray: usize) -> bool {
        self.0.binary_search(&ray).is_ok()
    }

    pub(crate) fn mask(&self) -> u64 {
        to_mask(&self.0)
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        Self(from_mask(mask))
    }
}

/// Minimal set of rays that does not span a cone.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimitiveCollection(Vec<usize>);

impl PrimitiveCollection {
    pub fn rays(&self) -> &[usize] {
        &self.0
    }
}

/// A fan given by its rays and maximal cones.
///
/// Construction only checks that the data is well formed (dimensions, index
/// ranges, primitivity, every ray used). Geometry is checked by [`validate_fan`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    dim: usize,
    rays: Vec<RayVector>,
    max_cones: Vec<Cone>,
}

pub const MAX_RAYS: usize = 64;

impl Fan {
    pub fn new(dim: usize, rays: Vec<Vec<i64>>, max_cones: Vec<Vec<usize>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::MalformedInput("dimension must be positive".into()));
        }
        if rays.len() > MAX_RAYS {
            return Err(Error::MalformedInput(format!(
                "{} rays exceeds the supported maximum of {MAX_RAYS}",
                rays.len()
            )));
        }
        let mut ray_vecs = Vec::with_capacity(rays.len());
        for (i, r) in rays.into_iter().enumerate() {
            if r.len() != dim {
                return Err(Error::MalformedInput(format!(
                    "ray {i} has {} coordinates, expected {dim}",
                    r.len()
                )));
            }
            ray_vecs.push(RayVector::new(r)?);
        }
        let distinct: HashSet<_> = ray_vecs.iter().collect();
        if distinct.len() != ray_vecs.len() {
            return Err(Error::MalformedInput("duplicate ray".into()));
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        let mut seen = HashSet::new();
        for (ci, c) in max_cones.into_iter().enumerate() {
            if let Some(&bad) = c.iter().find(|&&i| i >= ray_vecs.len()) {
                return Err(Error::MalformedInput(format!(
                    "cone {ci} references ray {bad}, but only {} rays exist",
                    ray_vecs.len()
                )));
            }
            let cone = Cone::new(c.clone());
            if cone.len() != c.len() {
                return Err(Error::MalformedInput(format!("cone {ci} repeats a ray")));
            }
            if cone.len() != dim {
                return Err(Error::MalformedInput(format!(
                    "cone {ci} has {} rays; maximal cones of a simplicial complete fan have {dim}",
                    cone.len()
                )));
            }
            if !seen.insert(cone.clone()) {
                return Err(Error::MalformedInput(format!("cone {ci} is listed twice")));
            }
            cones.push(cone);
        }
        if cones.is_empty() {
            return Err(Error::MalformedInput("fan has no cones".into()));
        }
        let used: u64 = cones.iter().fold(0, |m, c| m | c.mask());
        if let Some(unused) = (0..ray_vecs.len()).find(|&i| used & (1 << i) == 0) {
            return Err(Error::MalformedInput(format!(
                "ray {unused} lies in no maximal cone"
            )));
        }
        Ok(Self {
            dim,
            rays: ray_vecs,
            max_cones: cones,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[RayVector] {
        &self.rays
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.max_cones
    }

    /// Columns are the generators of `cone`, as a `dim x dim` integer matrix.
    pub(crate) fn cone_matrix(&self, cone: &Cone) -> Vec<Vec<BigInt>> {
        (0..self.dim)
            .map(|row| {
                cone.rays()
                    .iter()
                    .map(|&i| BigInt::from(self.rays[i].coords()[row]))
                    .collect()
            })
            .collect()
    }

    pub fn cone_det(&self, cone: &Cone) -> BigInt {
        linalg::det(&self.cone_matrix(cone))
    }

    /// Same fan with rays renumbered by `perm` (old index `i` becomes `perm[i]`).
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        let mut rays = vec![Vec::new(); self.rays.len()];
        for (old, &new) in perm.iter().enumerate() {
            rays[new] = self.rays[old].coords().to_vec();
        }
        let cones = self
            .max_cones
            .iter()
            .map(|c| c.rays().iter().map(|&i| perm[i]).collect())
            .collect();
        Self::new(self.dim, rays, cones)
    }

    /// Same fan with the maximal cones listed in the order `order`.
    pub fn with_cone_order(&self, order: &[usize]) -> Self {
        Self {
            dim: self.dim,
            rays: self.rays.clone(),
            max_cones: order.iter().map(|&i| self.max_cones[i].clone()).collect(),
        }
    }

    pub(crate) fn face_masks(&self) -> HashSet<u64> {
        let mut faces = HashSet::new();
        for cone in &self.max_cones {
            let m = cone.mask();
            // all submasks of m, including 0
            let mut sub = m;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & m;
            }
        }
        faces
    }
}

/// Outcome of a successful validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub dim: usize,
    pub num_rays: usize,
    pub num_max_cones: usize,
    pub simplicial: bool,
    pub smooth: bool,
    pub complete: bool,
}

/// Checks smoothness, the facet-pairing completeness criterion, and that
/// adjacent cones lie on opposite sides of their common facet with a generic
/// interior point covered exactly once.
pub fn validate_fan(fan: &Fan) -> Result<ValidationReport> {
    let dets: Vec<BigInt> = fan.max_cones.iter().map(|c| fan.cone_det(c)).collect();
    for (index, d) in dets.iter().enumerate() {
        if d.abs() != BigInt::from(1) {
            return Err(Error::NonSmoothCone {
                index,
                det: d.abs().to_string(),
            });
        }
    }

    // facet -> (cone index, ray opposite the facet)
    let mut facets: HashMap<Vec<usize>, Vec<(usize, usize)>> = HashMap::new();
    for (ci, cone) in fan.max_cones.iter().enumerate() {
        for &apex in cone.rays() {
            let facet: Vec<usize> = cone.rays().iter().copied().filter(|&i| i != apex).collect();
            facets.entry(facet).or_default().push((ci, apex));
        }
    }
    let mut facet_list: Vec<_> = facets.into_iter().collect();
    facet_list.sort();
    for (facet, owners) in &facet_list {
        if owners.len() != 2 {
            return Err(Error::IncompleteFan {
                facet: facet.clone(),
                count: owners.len(),
            });
        }
        let side = |apex: usize| {
            let mut cols: Vec<usize> = facet.clone();
            cols.push(apex);
            let m: Vec<Vec<BigInt>> = (0..fan.dim)
                .map(|row| {
                    cols.iter()
                        .map(|&i| BigInt::from(fan.rays[i].coords()[row]))
                        .collect()
                })
                .collect();
            linalg::det(&m).signum()
        };
        let (a, b) = (owners[0], owners[1]);
        if side(a.1) == side(b.1) {
            return Err(Error::OverlappingCones {
                first: a.0.min(b.0),
                second: a.0.max(b.0),
            });
        }
    }

    // Facet pairing makes the cones a branched cover of the sphere; the
    // degree is one iff an interior point of cone 0 lies in no other cone.
    let probe: Vec<BigRational> = (0..fan.dim)
        .map(|row| {
            let s: i64 = fan.max_cones[0]
                .rays()
                .iter()
                .map(|&i| fan.rays[i].coords()[row])
                .sum();
            BigRational::from_integer(BigInt::from(s))
        })
        .collect();
    for (ci, cone) in fan.max_cones.iter().enumerate().skip(1) {
        let m = linalg::to_rational(&fan.cone_matrix(cone));
        let coeffs = linalg::solve(&m, &probe).expect("smooth cone matrix is invertible");
        if coeffs.iter().all(|c| !c.is_negative()) {
            return Err(Error::OverlappingCones { first: 0, second: ci });
        }
    }

    Ok(ValidationReport {
        dim: fan.dim,
        num_rays: fan.rays.len(),
        num_max_cones: fan.max_cones.len(),
        simplicial: true,
        smooth: true,
        complete: true,
    })
}

/// All faces of all maximal cones, including the zero cone, sorted by size
/// and then lexicographically.
pub fn enumerate_cones(fan: &Fan) -> Vec<Cone> {
    let mut cones: Vec<Cone> = fan.face_masks().into_iter().map(Cone::from_mask).collect();
    cones.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    cones
}

/// Primitive collections, sorted by size and then lexicographically.
pub fn primitive_collections(fan: &Fan) -> Vec<PrimitiveCollection> {
    let faces = fan.face_masks();
    let r = fan.num_rays();
    let mut out = Vec::new();
    let full: u64 = if r == 64 { u64::MAX } else { (1u64 << r) - 1 };
    for mask in 1..=full {
        if faces.contains(&mask) {
            continue;
        }
        let minimal = (0..r)
            .filter(|&i| mask & (1 << i) != 0)
            .all(|i| faces.contains(&(mask & !(1 << i))));
        if minimal {
            out.push(PrimitiveCollection(from_mask(mask)));
        }
    }
    out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.cmp(b)));
    out
}

/// Euler characteristic of the smooth complete toric variety: one fixed
/// point per maximal cone.
pub fn euler_characteristic_ambient(fan: &Fan) -> i64 {
    fan.max_cones.len() as i64
}

/// Whether the rays `indices` span a cone of the fan.
pub fn is_face(fan: &Fan, indices: &BTreeSet<usize>) -> bool {
    let m = to_mask(&indices.iter().copied().collect::<Vec<_>>());
    fan.max_cones.iter().any(|c| c.mask() & m == m)
}

fn to_mask(indices: &[usize]) -> u64 {
    indices.iter().fold(0, |m, &i| m | (1u64 << i))
}

fn from_mask(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask & (1u64 << i) != 0).collect()
}

/// Cone-count cross-check of the even Betti numbers: for a smooth complete
/// fan, `b_{2k} = sum_{i >= k} (-1)^{i-k} C(i, k) f_{n-i}` where `f_j` is the
/// number of `j`-dimensional cones.
pub fn betti_from_face_numbers(fan: &Fan) -> Vec<i64> {
    let n = fan.dim;
    let mut f = vec![0i64; n + 1];
    for cone in fan.face_masks() {
        f[cone.count_ones() as usize] += 1;
    }
    let binom =
        |a: usize, b: usize| -> i64 { (0..b).fold(1i64, |acc, j| acc * (a - j) as i64 / (j + 1) as i64) };
    (0..=n)
        .map(|k| {
            (k..=n)
                .map(|i| {
                    let s = if (i - k) % 2 == 0 { 1 } else { -1 };
                    s * binom(i, k) * f[n - i]
                })
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::known_fans;

    #[test]
    fn worked_example_fans_validate() {
        let r = validate_fan(&known_fans::cp4()).unwrap();
        assert_eq!((r.num_rays, r.num_max_cones), (5, 5));
        let r = validate_fan(&known_fans::b1()).unwrap();
        assert_eq!((r.num_rays, r.num_max_cones), (6, 8));
    }

    #[test]
    fn non_smooth_cone_is_rejected() {
        let mut rays: Vec<Vec<i64>> = known_fans::cp4()
            .rays()
            .iter()
            .map(|r| r.coords().to_vec())
            .collect();
        rays[4] = vec![-2, -1, -1, -1];
        let cones = known_fans::cp4()
            .max_cones()
            .iter()
            .map(|c| c.rays().to_vec())
            .collect();
        let fan = Fan::new(4, rays, cones).unwrap();
        match validate_fan(&fan) {
            Err(Error::NonSmoothCone { det, .. }) => assert_eq!(det, "2"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn single_cone_is_incomplete() {
        let rays = vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ];
        let fan = Fan::new(4, rays, vec![vec![0, 1, 2, 3]]).unwrap();
        assert!(matches!(
            validate_fan(&fan),
            Err(Error::IncompleteFan { count: 1, .. })
        ));
    }

    #[test]
    fn triple_winding_is_rejected() {
        // Eight rays 45 degrees apart, joined in steps of 135 degrees: every
        // facet is shared by two smooth cones on opposite sides, but the
        // cones wind around the origin three times.
        let rays = vec![
            vec![1, 0],
            vec![1, 1],
            vec![0, 1],
            vec![-1, 1],
            vec![-1, 0],
            vec![-1, -1],
            vec![0, -1],
            vec![1, -1],
        ];
        let walk = [0, 3, 6, 1, 4, 7, 2, 5, 0];
        let cones = walk.windows(2).map(|w| vec![w[0], w[1]]).collect();
        let fan = Fan::new(2, rays.clone(), cones).unwrap();
        assert!(matches!(validate_fan(&fan), Err(Error::OverlappingCones { .. })));

        let walk = [0, 1, 2, 3, 4, 5, 6, 7, 0];
        let cones = walk.windows(2).map(|w| vec![w[0], w[1]]).collect();
        validate_fan(&Fan::new(2, rays, cones).unwrap()).unwrap();
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(
            Fan::new(2, vec![vec![1, 0], vec![0, 1]], vec![vec![0, 2]]),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            Fan::new(2, vec![vec![2, 0], vec![0, 1]], vec![vec![0, 1]]),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            Fan::new(2, vec![vec![0, 0], vec![0, 1]], vec![vec![0, 1]]),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            Fan::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]], vec![vec![0, 1]]),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn cones_of_cp4() {
        let cones = enumerate_cones(&known_fans::cp4());
        // every proper subset of the 5 rays, plus the zero cone
        assert_eq!(cones.len(), 31);
        assert!(cones[0].is_empty());
        assert!(cones.iter().all(|c| c.len() < 5));
    }

    #[test]
    fn cones_of_a_single_simplex() {
        let rays = vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ];
        let fan = Fan::new(4, rays, vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(enumerate_cones(&fan).len(), 16);
        assert!(primitive_collections(&fan).is_empty());
    }

    #[test]
    fn cones_are_closed_under_faces() {
        for fan in [known_fans::cp4(), known_fans::b1(), known_fans::p1xp1()] {
            let cones: HashSet<Cone> = enumerate_cones(&fan).into_iter().collect();
            for c in &cones {
                for &drop in c.rays() {
                    let sub = Cone::new(c.rays().iter().copied().filter(|&i| i != drop).collect());
                    assert!(cones.contains(&sub));
                }
            }
        }
    }

    #[test]
    fn b1_has_no_cone_on_rho1_rho5() {
        let cones = enumerate_cones(&known_fans::b1());
        assert!(!cones.contains(&Cone::new(vec![0, 4])));
    }

    #[test]
    fn primitive_collections_of_worked_examples() {
        let pcs: Vec<Vec<usize>> = primitive_collections(&known_fans::cp4())
            .iter()
            .map(|p| p.rays().to_vec())
            .collect();
        assert_eq!(pcs, vec![vec![0, 1, 2, 3, 4]]);
        let pcs: Vec<Vec<usize>> = primitive_collections(&known_fans::b1())
            .iter()
            .map(|p| p.rays().to_vec())
            .collect();
        assert_eq!(pcs, vec![vec![0, 4], vec![1, 2, 3, 5]]);
    }

    /// Brute force straight from the definition, over every subset.
    fn brute_force_pcs(fan: &Fan) -> Vec<Vec<usize>> {
        let r = fan.num_rays();
        let in_cone = |s: &BTreeSet<usize>| fan.max_cones().iter().any(|c| s.iter().all(|i| c.contains(*i)));
        let mut out = Vec::new();
        for mask in 1u32..(1 << r) {
            let s: BTreeSet<usize> = (0..r).filter(|i| mask & (1 << i) != 0).collect();
            if in_cone(&s) {
                continue;
            }
            let minimal = s.iter().all(|&i| {
                let mut t = s.clone();
                t.remove(&i);
                in_cone(&t)
            });
            if minimal {
                out.push(s.into_iter().collect::<Vec<_>>());
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn primitive_collections_of_p1xp1() {
        // rays e1, -e1, e2, -e2
        let fan = known_fans::p1xp1();
        let pcs: Vec<Vec<usize>> = primitive_collections(&fan)
            .iter()
            .map(|p| p.rays().to_vec())
            .collect();
        assert_eq!(pcs, brute_force_pcs(&fan));
        assert_eq!(pcs, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn primitive_collections_ignore_cone_order() {
        let fan = known_fans::b1();
        let n = fan.max_cones().len();
        let rev: Vec<usize> = (0..n).rev().collect();
        assert_eq!(
            primitive_collections(&fan),
            primitive_collections(&fan.with_cone_order(&rev))
        );
        assert_eq!(
            primitive_collections(&fan)
                .iter()
                .map(|p| p.rays().to_vec())
                .collect::<Vec<_>>(),
            brute_force_pcs(&fan)
        );
    }

    #[test]
    fn primitive_collection_definition_holds() {
        for fan in [known_fans::cp4(), known_fans::b1(), known_fans::p1xp1()] {
            for pc in primitive_collections(&fan) {
                let s: BTreeSet<usize> = pc.rays().iter().copied().collect();
                assert!(!is_face(&fan, &s));
                for &i in pc.rays() {
                    let mut t = s.clone();
                    t.remove(&i);
                    assert!(is_face(&fan, &t));
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_counts_max_cones() {
        assert_eq!(euler_characteristic_ambient(&known_fans::cp4()), 5);
        assert_eq!(euler_characteristic_ambient(&known_fans::b1()), 8);
    }

    #[test]
    fn betti_numbers_from_faces() {
        assert_eq!(betti_from_face_numbers(&known_fans::cp4()), vec![1, 1, 1, 1, 1]);
        assert_eq!(betti_from_face_numbers(&known_fans::b1()), vec![1, 2, 2, 2, 1]);
        assert_eq!(betti_from_face_numbers(&known_fans::p1xp1()), vec![1, 2, 1]);
    }
}
