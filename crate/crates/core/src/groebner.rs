//! Buchberger's algorithm over the rationals.

use std::collections::BTreeSet;

use crate::poly::{Coeff, Monomial, MultiPoly, TermOrder};

/// Remainder of `p` on division by `divisors` (full reduction: every term of
/// the result is irreducible).
pub fn reduce(p: &MultiPoly, divisors: &[MultiPoly], order: TermOrder) -> MultiPoly {
    let leads: Vec<(Monomial, Coeff)> = divisors
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term(order).expect("divisor is nonzero");
            (m.clone(), c.clone())
        })
        .collect();
    let mut rest = p.clone();
    let mut remainder = MultiPoly::zero(p.nvars());
    while let Some((m, c)) = rest.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(k) => {
                let (lm, lc) = &leads[k];
                rest.sub_scaled(&divisors[k], &lm.quotient_of(&m), &(&c / lc));
            }
            None => {
                rest.add_term(m.clone(), -c.clone());
                remainder.add_term(m, c);
            }
        }
    }
    remainder
}

pub fn s_polynomial(f: &MultiPoly, g: &MultiPoly, order: TermOrder) -> MultiPoly {
    let (fm, fc) = f.leading_term(order).expect("nonzero");
    let (gm, gc) = g.leading_term(order).expect("nonzero");
    let l = fm.lcm(gm);
    let mut s = f.mul_term(&fm.quotient_of(&l), &gc.clone());
    s.sub_scaled(g, &gm.quotient_of(&l), fc);
    s
}

/// Reduced Gröbner basis of the ideal generated by `gens`: monic, no leading
/// monomial divides another, tails fully reduced, sorted by decreasing
/// leading monomial. Pairs with coprime leading monomials are skipped
/// (product criterion), as are pairs whose lcm is covered by a third element
/// with both connecting pairs already treated (chain criterion).
pub fn buchberger(gens: &[MultiPoly], order: TermOrder) -> Vec<MultiPoly> {
    let mut basis: Vec<MultiPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(order))
        .collect();
    let lm = |basis: &[MultiPoly], i: usize| basis[i].leading_monomial(order).unwrap().clone();

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    while !pending.is_empty() {
        // normal selection strategy: smallest lcm first, ties by index
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = lm(&basis, a.0).lcm(&lm(&basis, a.1));
                let lb = lm(&basis, b.0).lcm(&lm(&basis, b.1));
                order.cmp(&la, &lb).then(a.cmp(b))
            })
            .unwrap();
        pending.remove(&(i, j));

        let (mi, mj) = (lm(&basis, i), lm(&basis, j));
        if mi.coprime(&mj) {
            continue;
        }
        let l = mi.lcm(&mj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis, k).divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j], order), &basis, order);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r.monic(order));
            for i in 0..k {
                pending.insert((i, k));
            }
        }
    }
    interreduce(basis, order)
}

fn interreduce(basis: Vec<MultiPoly>, order: TermOrder) -> Vec<MultiPoly> {
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(order).unwrap().clone())
        .collect();
    // keep an element only if no other kept element's lead divides its lead
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let redundant = (0..basis.len())
            .any(|j| j != i && leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i));
        if !redundant {
            keep.push(i);
        }
    }
    let minimal: Vec<MultiPoly> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut reduced: Vec<MultiPoly> = (0..minimal.len())
        .map(|i| {
            let others: Vec<MultiPoly> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let g = &minimal[i];
            let (m, c) = g.leading_term(order).unwrap();
            let head = MultiPoly::term(m.clone(), c.clone());
            let tail = reduce(&(g - &head), &others, order);
            (&head + &tail).monic(order)
        })
        .collect();
    reduced.sort_by(|a, b| {
        order.cmp(
            b.leading_monomial(order).unwrap(),
            a.leading_monomial(order).unwrap(),
        )
    });
    reduced
}

/// Every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[MultiPoly], order: TermOrder) -> bool {
    (0..basis.len())
        .all(|j| (0..j).all(|i| reduce(&s_polynomial(&basis[i], &basis[j], order), basis, order).is_zero()))
}

/// Monomials of total degree `degree` divisible by none of `leads`, in
/// decreasing term order.
pub fn standard_monomials(leads: &[Monomial], nvars: usize, degree: u32, order: TermOrder) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = monomials_of_degree(nvars, degree)
        .into_iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .collect();
    out.sort_by(|a, b| order.cmp(b, a));
    out
}

/// All exponent vectors in `nvars` variables with the given total degree.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn go(nvars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            go(nvars, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    go(nvars, degree, &mut Vec::new(), &mut out);
    out
}
