//! The cohomology ring `Q[x_1..x_r] / (SR + J)` of a smooth complete toric
//! variety.
//!
//! The linear ideal `J` is eliminated first: on a smooth maximal cone the
//! relations can be solved for that cone's variables with integer
//! coefficients, leaving a polynomial ring in the remaining `r - n`
//! variables. The Stanley-Reisner generators are rewritten in those
//! variables and a reduced Gröbner basis (degrevlex, variables in ray order)
//! gives normal forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fan::{self, Fan, PrimitiveCollection};
use crate::grading::{self, DivisorMapMatrix};
use crate::groebner;
use crate::linalg;
use crate::poly::{Coeff, Monomial, MultiPoly, TermOrder};

/// One squarefree monomial per primitive collection, in all `r` variables.
pub fn stanley_reisner(fan: &Fan, pcs: &[PrimitiveCollection]) -> Vec<MultiPoly> {
    let r = fan.num_rays();
    pcs.iter()
        .map(|pc| {
            let mut e = vec![0; r];
            for &i in pc.rays() {
                e[i] = 1;
            }
            MultiPoly::term(Monomial(e), Coeff::one())
        })
        .collect()
}

/// The linear forms `sum_i <m_j, u_i> x_i`, one per basis vector `m_j`.
pub fn linear_ideal(dm: &DivisorMapMatrix) -> Vec<MultiPoly> {
    let r = dm.num_rays();
    dm.entries()
        .iter()
        .map(|row| {
            MultiPoly::from_terms(
                r,
                row.iter()
                    .enumerate()
                    .map(|(i, a)| (Monomial::var(r, i), BigRational::from_integer(a.clone()))),
            )
        })
        .collect()
}

/// Result of solving the linear relations on one maximal cone.
#[derive(Debug, Clone)]
pub struct Elimination {
    pub cone_index: usize,
    /// Original indices of the variables that survive, in increasing order.
    pub active_vars: Vec<usize>,
    /// Image of every original variable as a linear form in the active ones.
    pub substitution: Vec<MultiPoly>,
    /// Stanley-Reisner generators rewritten in the active variables.
    pub relations: Vec<MultiPoly>,
}

pub fn eliminate_linear(
    fan: &Fan,
    sr: &[MultiPoly],
    lin: &[MultiPoly],
    cone_index: usize,
) -> Result<Elimination> {
    let r = fan.num_rays();
    let cone = fan
        .max_cones()
        .get(cone_index)
        .ok_or(Error::ConeIndexOutOfRange {
            index: cone_index,
            count: fan.max_cones().len(),
        })?;
    let solved: Vec<usize> = cone.rays().to_vec();
    let active: Vec<usize> = (0..r).filter(|i| !cone.contains(*i)).collect();
    let k = active.len();

    let coeff = |form: &MultiPoly, i: usize| form.coeff(&Monomial::var(r, i));
    let a_solved: Vec<Vec<BigRational>> = lin
        .iter()
        .map(|f| solved.iter().map(|&i| coeff(f, i)).collect())
        .collect();
    let a_active: Vec<Vec<BigRational>> = lin
        .iter()
        .map(|f| active.iter().map(|&i| coeff(f, i)).collect())
        .collect();
    let inv = linalg::inverse(&a_solved).ok_or(Error::EliminationSingular(cone_index))?;
    if linalg::to_integer(&inv).is_none() {
        return Err(Error::EliminationSingular(cone_index));
    }

    let mut substitution = vec![MultiPoly::zero(k); r];
    for (pos, &i) in active.iter().enumerate() {
        substitution[i] = MultiPoly::var(k, pos);
    }
    // x_solved = -inv * A_active * x_active
    for (row, &i) in solved.iter().enumerate() {
        let terms = (0..k).map(|pos| {
            let c: BigRational = (0..lin.len()).map(|j| &inv[row][j] * &a_active[j][pos]).sum();
            (Monomial::var(k, pos), -c)
        });
        substitution[i] = MultiPoly::from_terms(k, terms);
    }
    let relations = sr.iter().map(|g| g.substitute(&substitution)).collect();
    Ok(Elimination {
        cone_index,
        active_vars: active,
        substitution,
        relations,
    })
}

/// Finalized quotient ring with its Gröbner basis and monomial basis.
#[derive(Debug, Clone)]
pub struct RingContext {
    dim: usize,
    order: TermOrder,
    elimination: Elimination,
    groebner: Vec<MultiPoly>,
    leads: Vec<Monomial>,
    monomial_basis: Vec<Vec<Monomial>>,
    point_monomial: Monomial,
    point_scalar: Coeff,
}

impl RingContext {
    /// Builds the ring of a validated fan, eliminating on maximal cone
    /// `cone_index` (the first cone when `None`).
    pub fn new(fan: &Fan, cone_index: Option<usize>) -> Result<Self> {
        let dm = grading::divisor_map(fan)?;
        let pcs = fan::primitive_collections(fan);
        let sr = stanley_reisner(fan, &pcs);
        let lin = linear_ideal(&dm);
        let elim = eliminate_linear(fan, &sr, &lin, cone_index.unwrap_or(0))?;
        Self::finalize(fan, elim)
    }

    pub fn finalize(fan: &Fan, elimination: Elimination) -> Result<Self> {
        let order = TermOrder::DegRevLex;
        let dim = fan.dim();
        let k = elimination.active_vars.len();
        let groebner = groebner::buchberger(&elimination.relations, order);
        let leads: Vec<Monomial> = groebner
            .iter()
            .map(|g| g.leading_monomial(order).unwrap().clone())
            .collect();
        let monomial_basis: Vec<Vec<Monomial>> = (0..=dim as u32)
            .map(|d| groebner::standard_monomials(&leads, k, d, order))
            .collect();
        if monomial_basis[dim].len() != 1 {
            return Err(Error::DegenerateTopDegree(monomial_basis[dim].len()));
        }
        let cone = &fan.max_cones()[elimination.cone_index];
        let mut point_monomial = vec![0; fan.num_rays()];
        for &i in cone.rays() {
            point_monomial[i] = 1;
        }
        let mut ctx = Self {
            dim,
            order,
            elimination,
            groebner,
            leads,
            monomial_basis,
            point_monomial: Monomial(point_monomial),
            point_scalar: Coeff::zero(),
        };
        let point = ctx.normal_form(&ctx.original_monomial(&ctx.point_monomial.clone()));
        let s = point.coeff(ctx.top_monomial());
        if s.is_zero() || point.num_terms() != 1 {
            return Err(Error::DegenerateTopDegree(0));
        }
        ctx.point_scalar = s;
        Ok(ctx)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.elimination.active_vars.len()
    }

    pub fn num_rays(&self) -> usize {
        self.elimination.substitution.len()
    }

    pub fn elimination(&self) -> &Elimination {
        &self.elimination
    }

    pub fn active_vars(&self) -> &[usize] {
        &self.elimination.active_vars
    }

    pub fn groebner(&self) -> &[MultiPoly] {
        &self.groebner
    }

    pub fn monomial_basis(&self) -> &[Vec<Monomial>] {
        &self.monomial_basis
    }

    pub fn top_monomial(&self) -> &Monomial {
        &self.monomial_basis[self.dim][0]
    }

    /// `NF(point monomial) = point_scalar * top_monomial`.
    pub fn point_scalar(&self) -> &Coeff {
        &self.point_scalar
    }

    pub fn point_monomial(&self) -> &Monomial {
        &self.point_monomial
    }

    /// Class of the torus-invariant divisor of ray `i`, in active variables.
    pub fn divisor_class(&self, i: usize) -> &MultiPoly {
        &self.elimination.substitution[i]
    }

    /// Image of a polynomial in the original `r` variables.
    pub fn from_original(&self, p: &MultiPoly) -> MultiPoly {
        p.substitute(&self.elimination.substitution)
    }

    /// Image of a monomial in the original `r` variables (not reduced).
    pub fn original_monomial(&self, m: &Monomial) -> MultiPoly {
        self.from_original(&MultiPoly::term(m.clone(), Coeff::one()))
    }

    pub fn normal_form(&self, p: &MultiPoly) -> MultiPoly {
        groebner::reduce(p, &self.groebner, self.order)
    }

    /// Ranks of the graded pieces in degrees `0..=dim`.
    pub fn hilbert_ranks(&self) -> Vec<usize> {
        self.monomial_basis.iter().map(Vec::len).collect()
    }

    /// Degree of the top-degree part of `p`, normalized so that the point
    /// class integrates to one.
    pub fn integrate(&self, p: &MultiPoly) -> BigRational {
        let top = self.normal_form(&p.homogeneous_part(self.dim as u32));
        top.coeff(self.top_monomial()) / &self.point_scalar
    }

    pub fn integrate_top(&self, c: &CohomClass) -> BigRational {
        self.integrate(&c.components[self.dim])
    }

    /// Whether `m` (active variables) is divisible by a leading monomial.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leads.iter().any(|l| l.divides(m))
    }
}

/// A cohomology class split into reduced homogeneous components `0..=dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomClass {
    components: Vec<MultiPoly>,
}

impl CohomClass {
    pub fn from_poly(p: &MultiPoly, ctx: &RingContext) -> Self {
        Self {
            components: (0..=ctx.dim as u32)
                .map(|d| ctx.normal_form(&p.homogeneous_part(d)))
                .collect(),
        }
    }

    pub fn one(ctx: &RingContext) -> Self {
        Self::from_poly(&MultiPoly::one(ctx.nvars()), ctx)
    }

    pub fn component(&self, d: usize) -> &MultiPoly {
        &self.components[d]
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn to_poly(&self) -> MultiPoly {
        self.components
            .iter()
            .fold(MultiPoly::zero(self.components[0].nvars()), |acc, c| &acc + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Self {
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Product truncated above the top degree.
    pub fn mul(&self, other: &Self, ctx: &RingContext) -> Self {
        let n = ctx.dim;
        let components = (0..=n)
            .map(|d| {
                let mut acc = MultiPoly::zero(ctx.nvars());
                for i in 0..=d {
                    let (a, b) = (&self.components[i], &other.components[d - i]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                ctx.normal_form(&acc)
            })
            .collect();
        Self { components }
    }

    pub fn is_reduced(&self, ctx: &RingContext) -> bool {
        self.components.iter().all(|c| &ctx.normal_form(c) == c)
    }
}

/// `BigRational` to `i64`, if integral and in range.
pub fn to_integer(x: &BigRational) -> Option<i64> {
    x.is_integer()
        .then(|| x.to_integer())
        .and_then(|i: BigInt| i64::try_from(i).ok())
}
