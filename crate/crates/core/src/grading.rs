//! The divisor-class sequence `0 -> M -> Z^rays -> Chow -> 0` and the grading
//! it induces on the Cox ring.
//!
//! Chow coordinates: the cokernel is computed with a deterministic Smith form,
//! and the resulting degree matrix is then brought to row-style Hermite normal
//! form. The Hermite form is unique under change of basis of the Chow group,
//! so two fans with the same rays in the same order get the same degrees no
//! matter how the Smith reduction went.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::linalg;
use crate::snf::{self, IntMatrix};

/// Matrix of `f: M -> Z^rays`; entry `(j, i)` is `<m_j, u_i>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorMapMatrix {
    entries: IntMatrix,
}

impl DivisorMapMatrix {
    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn num_rays(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    /// Image of `m` in `Z^rays`.
    pub fn apply(&self, m: &[BigInt]) -> Vec<BigInt> {
        (0..self.num_rays())
            .map(|i| m.iter().zip(&self.entries).map(|(mj, row)| mj * &row[i]).sum())
            .collect()
    }
}

/// Chow-group degree, in the Hermite coordinates described in the module docs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Degree(pub Vec<BigInt>);

impl Degree {
    pub fn to_i64(&self) -> Vec<i64> {
        self.0
            .iter()
            .map(|x| i64::try_from(x).expect("degree fits in i64"))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowPresentation {
    pub free_rank: usize,
    /// Invariant factors greater than one. Always empty on success.
    pub torsion: Vec<BigInt>,
    pub degree_of_variable: Vec<Degree>,
}

impl ChowPresentation {
    /// The degree matrix, one row per Chow coordinate and one column per ray.
    pub fn degree_matrix(&self) -> IntMatrix {
        (0..self.free_rank)
            .map(|k| self.degree_of_variable.iter().map(|d| d.0[k].clone()).collect())
            .collect()
    }

    /// Checks `g o f = 0`: every character has degree zero.
    pub fn annihilates(&self, dm: &DivisorMapMatrix) -> bool {
        let g = self.degree_matrix();
        snf::mul(&g, &linalg::transpose(dm.entries()))
            .iter()
            .flatten()
            .all(Zero::is_zero)
    }
}

pub fn divisor_map(fan: &Fan) -> Result<DivisorMapMatrix> {
    let n = fan.dim();
    let entries: IntMatrix = (0..n)
        .map(|j| fan.rays().iter().map(|u| BigInt::from(u.coords()[j])).collect())
        .collect();
    let rank = linalg::rank(&linalg::to_rational(&entries));
    if rank < n {
        return Err(Error::RankDeficient { rank, dim: n });
    }
    Ok(DivisorMapMatrix { entries })
}

/// Cokernel of the divisor map.
pub fn chow_group(dm: &DivisorMapMatrix) -> Result<ChowPresentation> {
    let n = dm.dim();
    let r = dm.num_rays();
    // f as an r x n matrix acting on column vectors
    let f = linalg::transpose(dm.entries());
    let smith = snf::smith_normal_form(&f);
    if smith.rank() < n {
        return Err(Error::RankDeficient {
            rank: smith.rank(),
            dim: n,
        });
    }
    let torsion: Vec<BigInt> = smith.diagonal.iter().filter(|d| !d.is_one()).cloned().collect();
    if !torsion.is_empty() {
        return Err(Error::TorsionFound(
            torsion.iter().map(ToString::to_string).collect(),
        ));
    }
    let g: IntMatrix = smith.left[n..].to_vec();
    let g = snf::hermite_normal_form(&g);
    debug_assert_eq!(g.len(), r - n);
    Ok(ChowPresentation {
        free_rank: r - n,
        torsion,
        degree_of_variable: (0..r)
            .map(|i| Degree(g.iter().map(|row| row[i].clone()).collect()))
            .collect(),
    })
}

/// Degree of the anticanonical class, the sum of all variable degrees.
pub fn anticanonical_degree(cp: &ChowPresentation) -> Degree {
    Degree(
        (0..cp.free_rank)
            .map(|k| cp.degree_of_variable.iter().map(|d| &d.0[k]).sum())
            .collect(),
    )
}

/// Whether two degree assignments differ only by an automorphism of the
/// Chow lattice (equal Hermite forms).
pub fn equivalent_gradings(a: &[Degree], b: &[Degree]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let as_matrix = |d: &[Degree]| -> IntMatrix {
        let k = d.first().map_or(0, |x| x.0.len());
        (0..k)
            .map(|row| d.iter().map(|x| x.0[row].clone()).collect())
            .collect()
    };
    snf::hermite_normal_form(&as_matrix(a)) == snf::hermite_normal_form(&as_matrix(b))
}
