//! Intersection numbers of torus-invariant divisors straight from the fan,
//! without any Gröbner basis. Used to cross-check [`crate::ring`].
//!
//! A product of `n` distinct divisors spanning a maximal cone is one point;
//! a product whose rays span no cone vanishes. A repeated factor `D_i` on a
//! cone `tau` is rewritten with the character `m` dual to `u_i` on a maximal
//! cone `sigma` containing `tau`:
//! `D_i = -sum_{j not in sigma} <m, u_j> D_j`. Each rewrite adds a ray
//! outside `sigma` to the support, so the recursion is at most `n` deep.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::fan::{self, Fan};
use crate::linalg;

/// `integral of prod_i D_i^{exponents[i]}` over the toric variety of a
/// smooth complete fan. The exponents must sum to the dimension.
pub fn multilinear_oracle(fan: &Fan, exponents: &[u32]) -> BigRational {
    assert_eq!(exponents.len(), fan.num_rays());
    assert_eq!(
        exponents.iter().sum::<u32>() as usize,
        fan.dim(),
        "monomial must have degree equal to the dimension"
    );
    let mut memo = HashMap::new();
    Oracle { fan }.eval(exponents.to_vec(), &mut memo)
}

struct Oracle<'a> {
    fan: &'a Fan,
}

impl Oracle<'_> {
    fn eval(&self, e: Vec<u32>, memo: &mut HashMap<Vec<u32>, BigRational>) -> BigRational {
        if let Some(v) = memo.get(&e) {
            return v.clone();
        }
        let support: BTreeSet<usize> = (0..e.len()).filter(|&i| e[i] > 0).collect();
        let value = if !fan::is_face(self.fan, &support) {
            BigRational::zero()
        } else if support.len() == self.fan.dim() {
            // n distinct rays of a smooth cone
            BigRational::one()
        } else {
            let i = *support.iter().find(|&&i| e[i] > 1).expect("repeated factor");
            let sigma = self
                .fan
                .max_cones()
                .iter()
                .find(|c| support.iter().all(|&s| c.contains(s)))
                .expect("support is a face");
            // rows of the inverse of the cone matrix are the dual basis
            let inv =
                linalg::inverse(&linalg::to_rational(&self.fan.cone_matrix(sigma))).expect("smooth cone");
            let pos = sigma.rays().iter().position(|&j| j == i).unwrap();
            let m = &inv[pos];
            let mut total = BigRational::zero();
            for j in (0..e.len()).filter(|j| !sigma.contains(*j)) {
                let pairing: BigRational = m
                    .iter()
                    .zip(self.fan.rays()[j].coords())
                    .map(|(a, &b)| a * BigRational::from_integer(BigInt::from(b)))
                    .sum();
                if pairing.is_zero() {
                    continue;
                }
                let mut next = e.clone();
                next[i] -= 1;
                next[j] += 1;
                total -= pairing * self.eval(next, memo);
            }
            total
        };
        memo.insert(e, value.clone());
        value
    }
}
