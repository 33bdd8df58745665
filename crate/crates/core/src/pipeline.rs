//! Topological invariants of the anticanonical divisor `D`, the surface `S`
//! representing `D.D`, and the doubled manifold `M`.
//!
//! Assumptions carried over from the construction and never checked here:
//! `D` and `S` are smooth generic members, `S` is simply connected, `M` is
//! simply connected, and `tau(D x P^1) = 0` so the signature of `M` is
//! `2 (tau(P) - tau(S))`.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::{self, Fan};
use crate::poly::{int, MultiPoly};
use crate::ring::{self, CohomClass, RingContext};

/// Total Chern class `c_0 + c_1 + ... + c_n`, each part reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernSeries {
    graded: CohomClass,
}

impl ChernSeries {
    pub fn c(&self, k: usize) -> &MultiPoly {
        self.graded.component(k)
    }

    pub fn as_class(&self) -> &CohomClass {
        &self.graded
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeDiamondCY3 {
    pub h00: i64,
    pub h11: i64,
    pub h21: i64,
}

impl HodgeDiamondCY3 {
    pub fn euler(&self) -> i64 {
        2 * (self.h11 - self.h21)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeDiamondSurface {
    pub h00: i64,
    pub h01: i64,
    pub h02: i64,
    pub h11: i64,
}

impl HodgeDiamondSurface {
    pub fn euler(&self) -> i64 {
        2 * self.h00 - 4 * self.h01 + 2 * self.h02 + self.h11
    }
}

/// Holonomy read off from the Â-genus of a simply-connected Spin(7) manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Holonomy {
    #[serde(rename = "Spin(7)")]
    Spin7,
    #[serde(rename = "SU(4)")]
    SU4,
    #[serde(rename = "Sp(2)")]
    Sp2,
    #[serde(rename = "Sp(1)xSp(1)")]
    Sp1xSp1,
    /// Â outside 1..=4: the manifold cannot carry a torsion-free Spin(7) structure.
    #[serde(rename = "none")]
    Excluded,
}

impl Holonomy {
    pub fn from_a_hat(a_hat: i64) -> Self {
        match a_hat {
            1 => Holonomy::Spin7,
            2 => Holonomy::SU4,
            3 => Holonomy::Sp2,
            4 => Holonomy::Sp1xSp1,
            _ => Holonomy::Excluded,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Holonomy::Spin7 => "Spin(7)",
            Holonomy::SU4 => "SU(4)",
            Holonomy::Sp2 => "Sp(2)",
            Holonomy::Sp1xSp1 => "Sp(1)xSp(1)",
            Holonomy::Excluded => "none",
        }
    }
}

/// Every invariant computed for one fan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoublingReport {
    pub chi_p: i64,
    pub tau_p: i64,
    pub chi_d: i64,
    pub h11_d: i64,
    pub h21_d: i64,
    pub chi_s: i64,
    pub h02_s: i64,
    pub h11_s: i64,
    pub tau_s: i64,
    pub chi_m: i64,
    pub tau_m: i64,
    pub a_hat: i64,
    pub holonomy: Holonomy,
}

/// `prod_rho (1 + D_rho)`, truncated at the top degree.
pub fn total_chern_ambient(ctx: &RingContext) -> ChernSeries {
    let one = MultiPoly::one(ctx.nvars());
    let graded = (0..ctx.num_rays()).fold(CohomClass::one(ctx), |acc, i| {
        let factor = CohomClass::from_poly(&(&one + ctx.divisor_class(i)), ctx);
        acc.mul(&factor, ctx)
    });
    ChernSeries { graded }
}

/// Anticanonical class `sum_rho D_rho` as a reduced degree-one class.
pub fn anticanonical_class(ctx: &RingContext) -> CohomClass {
    let sum = (0..ctx.num_rays()).fold(MultiPoly::zero(ctx.nvars()), |acc, i| &acc + ctx.divisor_class(i));
    CohomClass::from_poly(&sum, ctx)
}

/// `c(X) * (1 + d)^(-multiplicity)`, the adjunction formula for a complete
/// intersection of `multiplicity` copies of the divisor class `d`.
pub fn adjoint_chern(cx: &ChernSeries, d: &CohomClass, multiplicity: u32, ctx: &RingContext) -> ChernSeries {
    let n = ctx.dim();
    let mut inverse = CohomClass::one(ctx);
    let mut power = CohomClass::one(ctx);
    for k in 1..=n {
        power = power.mul(d, ctx);
        // binom(-m, k) = (-1)^k binom(m + k - 1, k)
        let b = binomial(multiplicity as i64 + k as i64 - 1, k as i64);
        let sign = if k % 2 == 0 { 1 } else { -1 };
        inverse = inverse.add(&power.scale(&int(sign * b)));
    }
    ChernSeries {
        graded: cx.graded.mul(&inverse, ctx),
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

fn integral(what: &'static str, value: BigRational) -> Result<i64> {
    ring::to_integer(&value).ok_or(Error::NonIntegralResult {
        what,
        value: value.to_string(),
    })
}

fn integrate_against(p: &MultiPoly, d_power: &CohomClass, ctx: &RingContext) -> BigRational {
    let class = CohomClass::from_poly(p, ctx).mul(d_power, ctx);
    ctx.integrate_top(&class)
}

/// `chi(D) = integral of c_{n-1}(D) . D`.
pub fn euler_of_divisor(cd: &ChernSeries, d: &CohomClass, ctx: &RingContext) -> Result<i64> {
    integral("chi(D)", integrate_against(cd.c(ctx.dim() - 1), d, ctx))
}

/// `chi(S) = integral of c_{n-2}(S) . D^2`.
pub fn euler_of_surface(cs: &ChernSeries, d: &CohomClass, ctx: &RingContext) -> Result<i64> {
    let d2 = d.mul(d, ctx);
    integral("chi(S)", integrate_against(cs.c(ctx.dim() - 2), &d2, ctx))
}

/// Hodge numbers of the Calabi-Yau threefold `D`: `h11` comes from the
/// ambient Picard rank, `h21` from the Euler characteristic.
pub fn hodge_of_divisor(chi_d: i64, picard_rank: i64) -> Result<HodgeDiamondCY3> {
    if chi_d % 2 != 0 {
        return Err(Error::DivisibilityViolation {
            what: "chi(D)",
            value: chi_d.to_string(),
            divisor: 2,
        });
    }
    let h21 = picard_rank - chi_d / 2;
    if picard_rank < 0 {
        return Err(Error::NegativeHodgeNumber {
            name: "h11(D)",
            value: picard_rank,
        });
    }
    if h21 < 0 {
        return Err(Error::NegativeHodgeNumber {
            name: "h21(D)",
            value: h21,
        });
    }
    Ok(HodgeDiamondCY3 {
        h00: 1,
        h11: picard_rank,
        h21,
    })
}

/// Noether's formula on `S`:
/// `12 (1 + h02) = integral (c1^2 + c2)` and `-6 h11 = integral (c1^2 - 5 c2)`,
/// both integrals taken over the ambient space against `D^2`.
pub fn noether_surface(cs: &ChernSeries, d: &CohomClass, ctx: &RingContext) -> Result<HodgeDiamondSurface> {
    let n = ctx.dim();
    let d2 = d.mul(d, ctx);
    let c1 = CohomClass::from_poly(cs.c(1), ctx);
    let c1_sq = c1.mul(&c1, ctx).component(2).clone();
    let c2 = cs.c(2);
    debug_assert_eq!(n, 4);

    let todd = integral("c1^2 + c2", integrate_against(&(&c1_sq + c2), &d2, ctx))?;
    let other = integral(
        "c1^2 - 5 c2",
        integrate_against(&(&c1_sq - &c2.scale(&int(5))), &d2, ctx),
    )?;
    if todd % 12 != 0 {
        return Err(Error::DivisibilityViolation {
            what: "integral of c1^2 + c2 over S",
            value: todd.to_string(),
            divisor: 12,
        });
    }
    if other % 6 != 0 {
        return Err(Error::DivisibilityViolation {
            what: "integral of c1^2 - 5 c2 over S",
            value: other.to_string(),
            divisor: 6,
        });
    }
    let h02 = todd / 12 - 1;
    let h11 = -other / 6;
    if h02 < 0 {
        return Err(Error::NegativeHodgeNumber {
            name: "h02(S)",
            value: h02,
        });
    }
    if h11 < 0 {
        return Err(Error::NegativeHodgeNumber {
            name: "h11(S)",
            value: h11,
        });
    }
    Ok(HodgeDiamondSurface {
        h00: 1,
        h01: 0,
        h02,
        h11,
    })
}

/// Hodge index theorem for a simply connected surface.
pub fn signature_surface(hd: &HodgeDiamondSurface) -> i64 {
    2 - hd.h11 + 2 * hd.h02
}

/// Alternating sum `b0 - b2 + b4 - ...` of the even Betti numbers, which for
/// a toric fourfold is `sum_{p,q} (-1)^q h^{p,q}`.
pub fn signature_ambient(ranks: &[usize]) -> i64 {
    ranks
        .iter()
        .enumerate()
        .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum()
}

/// Euler characteristic, signature, and Â-genus of the doubled manifold.
pub fn doubling_invariants(
    chi_p: i64,
    chi_s: i64,
    chi_d: i64,
    tau_p: i64,
    tau_s: i64,
) -> Result<(i64, i64, i64, Holonomy)> {
    let chi_m = 2 * (chi_p + chi_s - chi_d);
    let tau_m = 2 * (tau_p - tau_s);
    let numerator = 3 * tau_m - chi_m;
    if numerator % 48 != 0 {
        return Err(Error::AhatNotIntegral(numerator));
    }
    let a_hat = numerator / 48;
    Ok((chi_m, tau_m, a_hat, Holonomy::from_a_hat(a_hat)))
}

/// Options for [`compute_report_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct PipelineOptions {
    /// Maximal cone used to eliminate the linear relations; the first one
    /// when `None`. No invariant depends on the choice.
    pub elimination_cone: Option<usize>,
}

/// Intermediate objects of one run, for inspection and testing.
#[derive(Debug, Clone)]
pub struct PipelineTrace {
    pub ring: RingContext,
    pub anticanonical: CohomClass,
    pub chern_ambient: ChernSeries,
    pub chern_divisor: ChernSeries,
    pub chern_surface: ChernSeries,
    pub divisor_hodge: HodgeDiamondCY3,
    pub surface_hodge: HodgeDiamondSurface,
    pub report: DoublingReport,
}

pub fn compute_report(fan: &Fan) -> Result<DoublingReport> {
    compute_report_with(fan, PipelineOptions::default())
}

pub fn compute_report_with(fan: &Fan, opts: PipelineOptions) -> Result<DoublingReport> {
    trace_pipeline(fan, opts).map(|t| t.report)
}

pub fn trace_pipeline(fan: &Fan, opts: PipelineOptions) -> Result<PipelineTrace> {
    if fan.dim() != 4 {
        return Err(Error::UnsupportedDimension(fan.dim()));
    }
    fan::validate_fan(fan)?;
    // the Chow group must be free; its rank is the Picard rank
    let dm = crate::grading::divisor_map(fan)?;
    let chow = crate::grading::chow_group(&dm)?;
    let ctx = RingContext::new(fan, opts.elimination_cone)?;

    let d = anticanonical_class(&ctx);
    let cp = total_chern_ambient(&ctx);
    let cd = adjoint_chern(&cp, &d, 1, &ctx);
    let cs = adjoint_chern(&cp, &d, 2, &ctx);

    let chi_d = euler_of_divisor(&cd, &d, &ctx)?;
    let divisor_hodge = hodge_of_divisor(chi_d, chow.free_rank as i64)?;
    let chi_s = euler_of_surface(&cs, &d, &ctx)?;
    let surface_hodge = noether_surface(&cs, &d, &ctx)?;
    if surface_hodge.euler() != chi_s {
        return Err(Error::Inconsistent(format!(
            "Hodge numbers of S give chi = {}, Chern classes give {chi_s}",
            surface_hodge.euler()
        )));
    }
    let tau_s = signature_surface(&surface_hodge);
    let chi_p = fan::euler_characteristic_ambient(fan);
    let ranks = ctx.hilbert_ranks();
    if ranks.iter().sum::<usize>() as i64 != chi_p {
        return Err(Error::Inconsistent(format!(
            "Betti numbers {ranks:?} do not sum to {chi_p} maximal cones"
        )));
    }
    let tau_p = signature_ambient(&ranks);
    let (chi_m, tau_m, a_hat, holonomy) = doubling_invariants(chi_p, chi_s, chi_d, tau_p, tau_s)?;

    let report = DoublingReport {
        chi_p,
        tau_p,
        chi_d,
        h11_d: divisor_hodge.h11,
        h21_d: divisor_hodge.h21,
        chi_s,
        h02_s: surface_hodge.h02,
        h11_s: surface_hodge.h11,
        tau_s,
        chi_m,
        tau_m,
        a_hat,
        holonomy,
    };
    Ok(PipelineTrace {
        ring: ctx,
        anticanonical: d,
        chern_ambient: cp,
        chern_divisor: cd,
        chern_surface: cs,
        divisor_hodge,
        surface_hodge,
        report,
    })
}

/// `integral of c_n` of the ambient space; equals the number of maximal cones.
pub fn ambient_euler_by_chern(cp: &ChernSeries, ctx: &RingContext) -> BigRational {
    ctx.integrate(cp.c(ctx.dim()))
}
