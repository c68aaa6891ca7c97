//! The graded point functor of a Chevalley group,
//! `A^{Phi+}(D) x coprod_w (p^{-1}(w) x A^{Phi_w}(D))`, and its monoid
//! version.

use super::graded::{accumulate, convolve, GradedSet};
use super::points::{affine_points, all_affine, support_size, AffinePoint};
use super::polynomial::CountingPolynomial;
use crate::arith::group::PointedAbelianGroup;
use crate::arith::monoid::{FiniteMonoid, MonoidElem, MonoidSource, MonoidWithZero};
use crate::error::{Error, Result};
use crate::roots::RootSystem;
use crate::tits::{ExtWeylElement, TitsGroup};
use crate::weyl::{weyl_enumerate, WeylGroup, DEFAULT_WEYL_CAP};

pub const DEFAULT_POINT_BUDGET: u128 = 1_000_000;
pub const BUDGET_ENV: &str = "F1POINTS_BUDGET";

/// The point budget, overridden by `F1POINTS_BUDGET` when set.
pub fn budget_from_env() -> u128 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_POINT_BUDGET)
}

/// `(a, n, b)`: `a` on `Phi+` (in root order), `n` in `N_{D,eps}`, `b` on
/// `Phi_w` for `w = p(n)` (in root order).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GPoint {
    pub a: AffinePoint,
    pub n: ExtWeylElement,
    pub b: AffinePoint,
}

impl GPoint {
    /// `|supp a| + l + |supp b|`
    pub fn degree(&self, rank: usize) -> usize {
        support_size(&self.a) + rank + support_size(&self.b)
    }
}

/// A point of the monoid functor: coordinates are monoid elements and the
/// torus takes values in the unit group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidPoint {
    pub a: Vec<MonoidElem>,
    pub n: ExtWeylElement,
    pub b: Vec<MonoidElem>,
}

/// `(q - 1)^l q^N sum_w q^{l(w)}`
pub fn chevalley_polynomial(weyl: &WeylGroup) -> CountingPolynomial {
    let rs = weyl.root_system();
    CountingPolynomial::linear(-1)
        .pow(rs.rank() as u32)
        .mul(&CountingPolynomial::var().pow(rs.num_positive() as u32))
        .mul(&weyl.poincare_polynomial())
}

/// Variable `q` or `n = q - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variable {
    Q,
    N,
}

/// The counting polynomial of the Chevalley gadget in `q`, or in `n` after
/// substituting `q = n + 1`.
pub fn counting_polynomial(rs: &RootSystem, var: Variable) -> Result<CountingPolynomial> {
    let p = chevalley_polynomial(&weyl_enumerate(rs, DEFAULT_WEYL_CAP)?);
    Ok(match var {
        Variable::Q => p,
        Variable::N => p.shift(1),
    })
}

fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// Full enumeration, when the total `P(|D|)` fits the budget.
pub fn chevalley_points(rs: &RootSystem, d: &PointedAbelianGroup, budget: u128) -> Result<GradedSet<GPoint>> {
    let tits = TitsGroup::new(rs, d)?;
    chevalley_points_in(&tits, budget)
}

pub fn chevalley_points_in(tits: &TitsGroup, budget: u128) -> Result<GradedSet<GPoint>> {
    let d = tits.group();
    let weyl = tits.weyl();
    let total = chevalley_polynomial(weyl).eval(d.order() as i128 + 1) as u128;
    check_budget(total, budget)?;
    let rank = tits.rank();
    let upper = all_affine(tits.root_system().num_positive(), d);
    let mut items = Vec::with_capacity(total as usize);
    for w in 0..weyl.order() {
        let lower = all_affine(weyl.length(w), d);
        for n in tits.fiber(w) {
            for a in &upper {
                for b in &lower {
                    let p = GPoint { a: a.clone(), n: n.clone(), b: b.clone() };
                    items.push((p.degree(rank), p));
                }
            }
        }
    }
    Ok(GradedSet::new(items))
}

/// How a census was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusMethod {
    /// Every point was listed.
    Enumerated,
    /// Each factor set was listed and the censuses convolved.
    Structural,
}

/// Per-degree point counts. Above the budget the factors
/// `A^{Phi+}(D)`, `p^{-1}(w)` and `A^{Phi_w}(D)` are enumerated separately
/// and their censuses convolved.
pub fn chevalley_census(rs: &RootSystem, d: &PointedAbelianGroup, budget: u128) -> Result<(Vec<u128>, CensusMethod)> {
    let tits = TitsGroup::new(rs, d)?;
    match chevalley_points_in(&tits, budget) {
        Ok(points) => Ok((points.census(), CensusMethod::Enumerated)),
        Err(Error::BudgetExceeded { .. }) => {
            let factor = (d.order() as u128 + 1).pow(rs.num_positive() as u32);
            check_budget(factor, budget)?;
            let upper = affine_points(rs.num_positive(), d).census();
            let weyl = tits.weyl();
            let mut total = Vec::new();
            for w in 0..weyl.order() {
                let mut fiber = vec![0u128; tits.rank() + 1];
                fiber[tits.rank()] = tits.fiber(w).len() as u128;
                let lower = affine_points(weyl.length(w), d).census();
                accumulate(&mut total, &convolve(&convolve(&upper, &fiber), &lower));
            }
            Ok((total, CensusMethod::Structural))
        }
        Err(e) => Err(e),
    }
}

/// The plain product set `M^{Phi+} x coprod_w (p^{-1}(w) x M^{Phi_w})`,
/// with the torus `Hom(L, M^*)`.
pub fn chevalley_points_monoid(rs: &RootSystem, m: &MonoidWithZero, budget: u128) -> Result<Vec<MonoidPoint>> {
    let m = m.as_finite()?;
    let (units, _) = m.unit_group()?;
    let tits = TitsGroup::new(rs, &units)?;
    chevalley_points_monoid_in(&tits, m, budget)
}

pub fn chevalley_points_monoid_in(tits: &TitsGroup, m: &FiniteMonoid, budget: u128) -> Result<Vec<MonoidPoint>> {
    let size = m.order() as u128;
    let weyl = tits.weyl();
    let n_pos = tits.root_system().num_positive() as u32;
    let torus = tits.torus_order() as u128;
    let total: u128 = (0..weyl.order())
        .map(|w| size.pow(n_pos) * torus * size.pow(weyl.length(w) as u32))
        .sum();
    check_budget(total, budget)?;
    let tuples = |k: usize| -> Vec<Vec<MonoidElem>> {
        let mut out = vec![Vec::new()];
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|p| m.elements().map(move |x| [p.clone(), vec![x]].concat()))
                .collect();
        }
        out
    };
    let upper = tuples(n_pos as usize);
    let mut out = Vec::with_capacity(total as usize);
    for w in 0..weyl.order() {
        let lower = tuples(weyl.length(w));
        for n in tits.fiber(w) {
            for a in &upper {
                for b in &lower {
                    out.push(MonoidPoint { a: a.clone(), n: n.clone(), b: b.clone() });
                }
            }
        }
    }
    Ok(out)
}

/// The identification of a graded point with a point of the monoid functor
/// at `M = D u {0}`.
pub fn graded_to_monoid(m: &FiniteMonoid, p: &GPoint) -> Result<MonoidPoint> {
    if !matches!(m.source(), MonoidSource::AdjoinedZero(_)) {
        return Err(Error::Invalid("monoid is not of the form D u {0}".into()));
    }
    let conv = |x: &AffinePoint| x.iter().map(|c| c.map_or(m.zero(), |g| g + 1)).collect();
    Ok(MonoidPoint { a: conv(&p.a), n: p.n.clone(), b: conv(&p.b) })
}
